//! The golden document corpus: every file is regenerated from library
//! constructors and must match byte for byte. Set `SPANFORGE_REGENERATE=1`
//! to rewrite the directory.

mod support;

use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::Value as Json;
use spanforge::fincat::standard::{chain, discrete, one_object_group, parallel_pair, terminal};
use spanforge::fincat::{Budget, Functor, NatTrans, Obj};
use spanforge::group::FiniteGroup;
use spanforge::io::{self, Fact, ReportValue, SpanValue, Value};
use spanforge::limits::Orientation;
use spanforge::monoidal::{
    bicharacter_braiding, discrete_group_category, skeletal_group_category, trivial_cocycle, MonFunctor,
};
use spanforge::report::Report;
use spanforge::spans::corpus::{composable_chains, module_setups, two_span_instances};
use spanforge::spans::{build_2span, build_span};
use support::{golden_dir, run};

fn setup(name: &str) -> spanforge::spans::corpus::Setup {
    module_setups(&Budget::default())
        .unwrap()
        .into_iter()
        .find(|s| s.name == name)
        .unwrap()
}

fn chain_member(name: &str, i: usize) -> spanforge::spans::ModuleFunctorData {
    composable_chains(&Budget::default())
        .unwrap()
        .into_iter()
        .find(|(n, _)| n == name)
        .unwrap()
        .1
        .swap_remove(i)
}

fn skeletal(g: &FiniteGroup, omega: &[usize]) -> Arc<spanforge::monoidal::MonoidalStructure> {
    Arc::new(skeletal_group_category(g, g, omega).unwrap())
}

/// Lawful values, in file order.
fn lawful() -> Vec<(&'static str, Value)> {
    let b = Budget::default();
    let (z2, z3) = (FiniteGroup::cyclic(2), FiniteGroup::cyclic(3));
    let mut omega = trivial_cocycle(&z2, &z2);
    omega[7] = 1;
    let sk_z2 = skeletal(&z2, &trivial_cocycle(&z2, &z2));
    let sk_z3 = skeletal(&z3, &trivial_cocycle(&z3, &z3));
    let z3_bichar = bicharacter_braiding(sk_z3.clone(), &z3, &z3, &[0, 0, 0, 0, 1, 2, 0, 2, 1]).unwrap();
    let z2_bichar = bicharacter_braiding(sk_z2.clone(), &z2, &z2, &[0, 0, 0, 1]).unwrap();
    let disc_z2 = Arc::new(discrete_group_category(&z2));
    let disc_z3 = Arc::new(discrete_group_category(&z3));
    let bz2 = one_object_group(&z2);

    let to_pt = Functor::constant(&chain(1), &terminal(), Obj(0));
    let disc_to_pt = Functor::constant(&discrete(2), &terminal(), Obj(0));

    let z2_bz2 = setup("Z2 trivial BZ2 id");
    let z3_disc3 = setup("Z3 rotation disc3 id");
    let mf = chain_member("Z2 characters on BZ2", 1);
    let mf_span = build_span(mf.source(), mf.target(), mf.functor(), &b).unwrap();
    let nat = two_span_instances(&b).unwrap().swap_remove(0).1;
    let two = build_2span(&nat, Orientation::Forward, &b).unwrap();
    let mut report = Report::new();
    report.push("associativity", vec![2, 1, 0], || "(f ; g) ; h != f ; (g ; h)".into());
    let mut facts = BTreeMap::new();
    facts.insert("object_count".to_string(), Fact::Int(3));
    facts.insert("kind".to_string(), Fact::Text("category".into()));

    let mut out = vec![
        ("terminal", Value::Category(terminal())),
        ("chain1", Value::Category(chain(1))),
        ("parallel_pair", Value::Category(parallel_pair())),
        ("bz2", Value::Category(bz2.clone())),
        ("z2_cocycle", Value::Monoidal(skeletal(&z2, &omega))),
        (
            "s3_discrete",
            Value::Monoidal(Arc::new(discrete_group_category(&FiniteGroup::symmetric3()))),
        ),
        ("sk_z2", Value::Monoidal(sk_z2.clone())),
        ("z2_bichar", Value::Braiding(z2_bichar)),
        ("z3_bichar", Value::Braiding(z3_bichar)),
        ("chain1_to_pt", Value::Functor(to_pt.clone())),
        ("disc2_to_pt", Value::Functor(disc_to_pt)),
        ("bz2_id", Value::Functor(Functor::identity(&bz2))),
        (
            "bz2_to_disc3",
            Value::Functor(Functor::constant(
                z2_bz2.source.carrier(),
                z3_disc3.source.carrier(),
                Obj(0),
            )),
        ),
        ("chain1_to_pt_id", Value::NatTrans(NatTrans::identity(&to_pt))),
        ("sk_z2_id", Value::MonFunctor(MonFunctor::identity(&sk_z2))),
        ("z2_id", Value::MonFunctor(MonFunctor::identity(&disc_z2))),
        ("z3_id", Value::MonFunctor(MonFunctor::identity(&disc_z3))),
        ("z2_bz2_module", Value::Module(z2_bz2.source.clone())),
        ("z3_disc3_module", Value::Module(z3_disc3.source.clone())),
        ("z2_character", Value::ModuleFunctor(mf)),
        (
            "z2_character_span",
            Value::Span(SpanValue {
                apex: mf_span.apex().clone(),
                left: mf_span.leg_left().clone(),
                right: mf_span.leg_right().clone(),
                top: None,
                bottom: None,
            }),
        ),
        ("const0_to_id", Value::ModuleNatTrans(nat)),
        (
            "const0_to_id_2span",
            Value::Span(SpanValue {
                apex: two.apex().clone(),
                left: two.leg_left().unwrap(),
                right: two.leg_right().unwrap(),
                top: Some(two.leg_top().clone()),
                bottom: Some(two.leg_bottom().clone()),
            }),
        ),
        (
            "sample_report",
            Value::Report(ReportValue {
                command: "validate".into(),
                report,
                facts,
            }),
        ),
    ];
    for (name, i) in [
        ("[1] mixed quadruple", 0),
        ("[1] mixed quadruple", 1),
        ("[1] mixed quadruple", 2),
        ("[1] mixed quadruple", 3),
    ] {
        let label: &'static str = ["chain_a", "chain_b", "chain_c", "chain_d"][i];
        out.push((label, Value::ModuleFunctor(chain_member(name, i))));
    }
    out.push(("z2_swap", Value::ModuleFunctor(chain_member("Z2 swap", 0))));
    out
}

fn leaves(v: &Json, at: String, out: &mut Vec<String>) {
    match v {
        Json::Array(xs) => xs
            .iter()
            .enumerate()
            .for_each(|(i, x)| leaves(x, format!("{at}/{i}"), out)),
        Json::Number(_) => out.push(at),
        _ => {}
    }
}

/// The first single-entry change under `pointer` that still decodes but
/// fails the law scan.
fn break_one(v: &Value, pointer: &str) -> String {
    let doc: Json = serde_json::from_str(&io::serialize(v)).unwrap();
    let mut at = Vec::new();
    leaves(doc.pointer(pointer).expect("pointer"), pointer.to_string(), &mut at);
    let bound = at
        .iter()
        .map(|p| doc.pointer(p).unwrap().as_u64().unwrap())
        .max()
        .unwrap()
        + 2;
    for p in &at {
        let current = doc.pointer(p).unwrap().as_u64().unwrap();
        for c in (0..bound).filter(|&c| c != current) {
            let mut d = doc.clone();
            *d.pointer_mut(p).unwrap() = c.into();
            let text = io::canonicalize(&d.to_string()).unwrap();
            if run(&["validate", "-"], &text).code == 1 {
                return text;
            }
        }
    }
    panic!("no single-entry mutation under {pointer} breaks a law");
}

/// Every golden file with its expected contents.
fn corpus() -> Vec<(String, String)> {
    let lawful = lawful();
    let find = |n: &str| lawful.iter().find(|(m, _)| *m == n).unwrap().1.clone();
    let mut files: Vec<(String, String)> = lawful
        .iter()
        .map(|(n, v)| (format!("{n}.json"), io::serialize(v)))
        .collect();
    for (name, from, pointer) in [
        ("broken_category", "parallel_pair", "/payload/composition"),
        ("broken_monoidal", "z2_cocycle", "/payload/associator"),
        ("broken_braiding", "z3_bichar", "/payload/beta"),
        ("broken_functor", "bz2_id", "/payload/morphisms"),
        ("broken_mon_functor", "sk_z2_id", "/payload/multiplication"),
        ("broken_module", "z2_bz2_module", "/payload/action/multiplication"),
        ("broken_module_functor", "z2_character", "/payload/xi"),
        ("broken_module_nattrans", "const0_to_id", "/payload/components"),
    ] {
        files.push((format!("{name}.json"), break_one(&find(from), pointer)));
    }
    let mut dangling: Json = serde_json::from_str(&io::serialize(&find("chain1"))).unwrap();
    dangling["payload"]["morphisms"][2]["target"] = 7.into();
    files.push((
        "malformed_dangling.json".into(),
        io::canonicalize(&dangling.to_string()).unwrap(),
    ));
    let mut stale = dangling.clone();
    stale["payload"]["morphisms"][2]["target"] = 1.into();
    stale["version"] = "spanforge/0".into();
    files.push(("malformed_version.json".into(), format!("{stale:#}\n")));
    files
}

#[test]
fn golden_files_are_current() {
    let dir = golden_dir();
    let files = corpus();
    if std::env::var_os("SPANFORGE_REGENERATE").is_some() {
        for (name, text) in &files {
            std::fs::write(dir.join(name), text).unwrap();
        }
    }
    for (name, text) in &files {
        let on_disk = std::fs::read_to_string(dir.join(name)).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(
            &on_disk, text,
            "{name} is stale; regenerate with SPANFORGE_REGENERATE=1"
        );
    }
}

#[test]
fn terminal_category_text_is_pinned() {
    let expected = r#"{
  "kind": "category",
  "payload": {
    "composition": [
      [0, 0, 0]
    ],
    "identities": [0],
    "morphisms": [
      {
        "label": "id_0",
        "source": 0,
        "target": 0
      }
    ],
    "name": "1",
    "objects": ["0"]
  },
  "version": "spanforge/1"
}
"#;
    assert_eq!(io::serialize(&Value::Category(terminal())), expected);
}

#[test]
fn golden_corpus_round_trips() {
    let b = Budget::default();
    for (name, text) in corpus() {
        if name.starts_with("malformed") {
            continue;
        }
        let v = io::parse(&text, &b).unwrap_or_else(|e| panic!("{name}: {e}"));
        let again = io::serialize(&v);
        assert_eq!(again, text, "{name}");
        assert_eq!(io::parse(&again, &b).unwrap(), v, "{name}");
    }
}

#[test]
fn cocycle_document_round_trips_to_equal_tables() {
    let text = std::fs::read_to_string(golden_dir().join("z2_cocycle.json")).unwrap();
    let v = io::parse(&text, &Budget::default()).unwrap();
    let Value::Monoidal(s) = &v else { panic!("kind") };
    assert_eq!(
        s.associator_table()
            .iter()
            .filter(|f| !s.base().is_identity(**f))
            .count(),
        1
    );
    assert_eq!(io::parse(&io::serialize(&v), &Budget::default()).unwrap(), v);
}

#[test]
fn malformed_documents_name_the_problem() {
    let b = Budget::default();
    let text = std::fs::read_to_string(golden_dir().join("malformed_dangling.json")).unwrap();
    match io::parse(&text, &b) {
        Err(spanforge::Error::Schema { path, .. }) => assert_eq!(path, "payload.morphisms[2].target"),
        other => panic!("{other:?}"),
    }
    let text = std::fs::read_to_string(golden_dir().join("malformed_version.json")).unwrap();
    assert!(matches!(io::parse(&text, &b), Err(spanforge::Error::Version { .. })));
}
