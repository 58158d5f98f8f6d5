//! A fixed corpus of small module-functor setups, composable chains and
//! module transformations, shared by the tests and the command line.

use std::sync::Arc;

use super::end::{end_monoidal, EndCategory};
use super::module::{module_structures_on, ModuleData, ModuleFunctorData, ModuleNatTransData};
use crate::error::{Error, Result};
use crate::fincat::standard::{chain, discrete, one_object_group, terminal};
use crate::fincat::{Budget, FinCategory, Functor, Mor, Obj};
use crate::group::FiniteGroup;
use crate::monoidal::{discrete_group_category, skeletal_group_category, trivial_cocycle, MonoidalStructure};

/// A functor between the carriers of two modules over the same base.
#[derive(Clone, Debug)]
pub struct Setup {
    pub name: String,
    pub source: ModuleData,
    pub target: ModuleData,
    pub functor: Functor,
}

impl Setup {
    pub fn structures(&self, budget: &Budget) -> Result<Vec<ModuleFunctorData>> {
        module_structures_on(&self.source, &self.target, &self.functor, budget)
    }
}

/// Carriers used throughout the corpus.
struct Carriers {
    pt: Arc<EndCategory>,
    d2: Arc<EndCategory>,
    d3: Arc<EndCategory>,
    arrow: Arc<EndCategory>,
    c2: Arc<EndCategory>,
    bz2: Arc<EndCategory>,
}

impl Carriers {
    fn new(budget: &Budget) -> Result<Self> {
        let e = |c: Arc<FinCategory>| end_monoidal(&c, budget).map(Arc::new);
        Ok(Carriers {
            pt: e(terminal())?,
            d2: e(discrete(2))?,
            d3: e(discrete(3))?,
            arrow: e(chain(1))?,
            c2: e(chain(2))?,
            bz2: e(one_object_group(&FiniteGroup::cyclic(2)))?,
        })
    }
}

/// A functor between thin categories given on objects.
pub fn thin_functor(m: &Arc<FinCategory>, n: &Arc<FinCategory>, objs: &[usize]) -> Result<Functor> {
    let obj: Vec<Obj> = objs.iter().map(|&x| Obj(x)).collect();
    let mor = m
        .morphisms()
        .map(|f| {
            n.hom(obj[m.source(f).0], obj[m.target(f).0])
                .first()
                .copied()
                .ok_or_else(|| Error::structural(format!("object map {objs:?} is not monotone")))
        })
        .collect::<Result<Vec<Mor>>>()?;
    Functor::new(m.clone(), n.clone(), obj, mor)
}

/// The endofunctor of a thin carrier with the given object map.
fn endo(e: &EndCategory, objs: &[usize]) -> Result<Obj> {
    let f = thin_functor(e.carrier(), e.carrier(), objs)?;
    e.functors()
        .object_of(&f)
        .ok_or_else(|| Error::structural("endofunctor missing from End"))
}

fn group(g: &FiniteGroup) -> Arc<MonoidalStructure> {
    Arc::new(discrete_group_category(g))
}

/// A group acting on a thin carrier through permutations of its objects.
fn permutation_action(g: &FiniteGroup, e: &Arc<EndCategory>, perm: impl Fn(usize) -> Vec<usize>) -> Result<ModuleData> {
    let images = g.elements().map(|a| endo(e, &perm(a))).collect::<Result<Vec<_>>>()?;
    ModuleData::from_endofunctors(group(g), e.clone(), images)
}

fn trivial_action(g: &FiniteGroup, e: &Arc<EndCategory>) -> Result<ModuleData> {
    let id = e.identity_functor();
    ModuleData::from_endofunctors(group(g), e.clone(), vec![id; g.order()])
}

/// The monoid `{1, e}` with `e·e = e`, as a discrete strict monoidal category.
pub fn idempotent_monoid() -> Result<Arc<MonoidalStructure>> {
    let c = discrete(2);
    let tensor = vec![Obj(0), Obj(1), Obj(1), Obj(1)];
    let mors = tensor.iter().map(|&x| c.identity(x)).collect();
    Ok(Arc::new(MonoidalStructure::strict(c, tensor, mors, Obj(0))?))
}

fn idempotent_action(e: &Arc<EndCategory>, idem: &[usize]) -> Result<ModuleData> {
    ModuleData::from_endofunctors(
        idempotent_monoid()?,
        e.clone(),
        vec![e.identity_functor(), endo(e, idem)?],
    )
}

/// `Sk(Z/2, Z/2)` acting on `BZ/2`: every object acts by the identity and
/// the morphism `(g, u)` by the central element `σᵘ`.
fn skeletal_on_bz2(e: &Arc<EndCategory>) -> Result<ModuleData> {
    let z2 = FiniteGroup::cyclic(2);
    let acting = Arc::new(skeletal_group_category(&z2, &z2, &trivial_cocycle(&z2, &z2))?);
    let c = acting.base().clone();
    let id = e.identity_functor();
    let mor = c
        .morphisms()
        .map(|m| {
            e.functors()
                .find_morphism(id, id, &[Mor(m.0 % 2)])
                .ok_or_else(|| Error::structural("central element missing from End(BZ2)"))
        })
        .collect::<Result<Vec<_>>>()?;
    let functor = Functor::new(c, e.category().clone(), vec![id, id], mor)?;
    ModuleData::strict(acting, e.clone(), functor)
}

struct Modules {
    c: Carriers,
    triv: Vec<(&'static str, ModuleData)>,
}

impl Modules {
    fn new(budget: &Budget) -> Result<Self> {
        let c = Carriers::new(budget)?;
        let triv = vec![
            ("pt", ModuleData::trivial(c.pt.clone())),
            ("disc2", ModuleData::trivial(c.d2.clone())),
            ("disc3", ModuleData::trivial(c.d3.clone())),
            ("[1]", ModuleData::trivial(c.arrow.clone())),
            ("[2]", ModuleData::trivial(c.c2.clone())),
            ("BZ2", ModuleData::trivial(c.bz2.clone())),
        ];
        Ok(Modules { c, triv })
    }

    fn trivial(&self, name: &str) -> ModuleData {
        self.triv
            .iter()
            .find(|(n, _)| *n == name)
            .expect("known carrier")
            .1
            .clone()
    }
}

// identity object maps on equal carriers give the identity functor, also on
// carriers that are not thin
fn setup(name: &str, source: &ModuleData, target: &ModuleData, objs: &[usize]) -> Result<Setup> {
    let (m, n) = (source.carrier(), target.carrier());
    let functor = if **m == **n && objs.iter().enumerate().all(|(i, &x)| i == x) {
        Functor::identity(m)
    } else {
        thin_functor(m, n, objs)?
    };
    Ok(Setup {
        name: name.to_string(),
        source: source.clone(),
        target: target.clone(),
        functor,
    })
}

/// The module-functor setups: carriers of at most three objects, acting
/// categories of at most six.
pub fn module_setups(budget: &Budget) -> Result<Vec<Setup>> {
    let ms = Modules::new(budget)?;
    let c = &ms.c;
    let t = |n: &str| ms.trivial(n);
    let (z2, z3, k4, s3) = (
        FiniteGroup::cyclic(2),
        FiniteGroup::cyclic(3),
        FiniteGroup::klein(),
        FiniteGroup::symmetric3(),
    );
    let swap2 = permutation_action(&z2, &c.d2, |a| if a == 0 { vec![0, 1] } else { vec![1, 0] })?;
    let triv2 = trivial_action(&z2, &c.d2)?;
    let swap3 = permutation_action(&z2, &c.d3, |a| if a == 0 { vec![0, 1, 2] } else { vec![1, 0, 2] })?;
    let z2_pt = trivial_action(&z2, &c.pt)?;
    let z2_arrow = trivial_action(&z2, &c.arrow)?;
    let z2_bz2 = trivial_action(&z2, &c.bz2)?;
    let rot3 = permutation_action(&z3, &c.d3, |a| (0..3).map(|x| (x + a) % 3).collect())?;
    let z3_pt = trivial_action(&z3, &c.pt)?;
    let k4_d2 = permutation_action(&k4, &c.d2, |a| if a / 2 == 0 { vec![0, 1] } else { vec![1, 0] })?;
    let s3_d3 = permutation_action(&s3, &c.d3, |a| {
        let label = s3.label(a);
        label
            .chars()
            .map(|ch| ch.to_digit(10).expect("permutation label") as usize)
            .collect()
    })?;
    let sk_bz2 = skeletal_on_bz2(&c.bz2)?;
    let idem_d2 = idempotent_action(&c.d2, &[0, 0])?;
    let idem_arrow = idempotent_action(&c.arrow, &[0, 0])?;
    let idem_arrow1 = idempotent_action(&c.arrow, &[1, 1])?;
    Ok(vec![
        setup("trivial pt id", &t("pt"), &t("pt"), &[0])?,
        setup("trivial [1] id", &t("[1]"), &t("[1]"), &[0, 1])?,
        setup("trivial [1] const0", &t("[1]"), &t("[1]"), &[0, 0])?,
        setup("trivial [1] const1", &t("[1]"), &t("[1]"), &[1, 1])?,
        setup("trivial disc2 swap", &t("disc2"), &t("disc2"), &[1, 0])?,
        setup("trivial disc3 to disc2", &t("disc3"), &t("disc2"), &[0, 0, 1])?,
        setup("trivial disc2 into [1]", &t("disc2"), &t("[1]"), &[0, 1])?,
        setup("trivial [1] to pt", &t("[1]"), &t("pt"), &[0, 0])?,
        setup("trivial [2] onto [1]", &t("[2]"), &t("[1]"), &[0, 0, 1])?,
        setup("trivial BZ2 id", &t("BZ2"), &t("BZ2"), &[0])?,
        setup("Z2 swap disc2 id", &swap2, &swap2, &[0, 1])?,
        setup("Z2 swap disc2 swap", &swap2, &swap2, &[1, 0])?,
        setup("Z2 swap to trivial disc2 id", &swap2, &triv2, &[0, 1])?,
        setup("Z2 trivial disc2 const0", &triv2, &triv2, &[0, 0])?,
        setup("Z2 trivial BZ2 id", &z2_bz2, &z2_bz2, &[0])?,
        setup("Z2 swap disc3 to pt", &swap3, &z2_pt, &[0, 0, 0])?,
        setup("Z2 trivial [1] id", &z2_arrow, &z2_arrow, &[0, 1])?,
        setup("Z3 rotation disc3 id", &rot3, &rot3, &[0, 1, 2])?,
        setup("Z3 rotation disc3 rotate", &rot3, &rot3, &[1, 2, 0])?,
        setup("Z3 rotation disc3 to pt", &rot3, &z3_pt, &[0, 0, 0])?,
        setup("Z2xZ2 disc2 id", &k4_d2, &k4_d2, &[0, 1])?,
        setup("S3 disc3 id", &s3_d3, &s3_d3, &[0, 1, 2])?,
        setup("Sk(Z2,Z2) BZ2 id", &sk_bz2, &sk_bz2, &[0])?,
        setup("idempotent disc2 id", &idem_d2, &idem_d2, &[0, 1])?,
        setup("idempotent disc2 swap", &idem_d2, &idem_d2, &[1, 0])?,
        setup("idempotent [1] id", &idem_arrow, &idem_arrow, &[0, 1])?,
        setup("idempotent [1] const0 to const1", &idem_arrow, &idem_arrow1, &[1, 1])?,
    ])
}

/// Every module occurring in the setups, deduplicated.
pub fn corpus_modules(budget: &Budget) -> Result<Vec<ModuleData>> {
    let mut out: Vec<ModuleData> = Vec::new();
    for s in module_setups(budget)? {
        for m in [s.source, s.target] {
            if !out.iter().any(|x| x.action() == m.action()) {
                out.push(m);
            }
        }
    }
    Ok(out)
}

fn structure(s: &Setup, index: usize, budget: &Budget) -> Result<ModuleFunctorData> {
    s.structures(budget)?
        .into_iter()
        .nth(index)
        .ok_or_else(|| Error::structural(format!("{} has fewer than {} structures", s.name, index + 1)))
}

/// Composable chains of three or four module functors.
pub fn composable_chains(budget: &Budget) -> Result<Vec<(String, Vec<ModuleFunctorData>)>> {
    let setups = module_setups(budget)?;
    let get = |name: &str, i: usize| -> Result<ModuleFunctorData> {
        let s = setups.iter().find(|s| s.name == name).expect("named setup");
        structure(s, i, budget)
    };
    let chains: Vec<(&str, Vec<(&str, usize)>)> = vec![
        ("[1] identities", vec![("trivial [1] id", 0); 3]),
        (
            "[1] constants",
            vec![
                ("trivial [1] const0", 0),
                ("trivial [1] id", 0),
                ("trivial [1] const1", 0),
            ],
        ),
        (
            "[1] mixed quadruple",
            vec![
                ("trivial [1] const0", 0),
                ("trivial [1] const1", 0),
                ("trivial [1] id", 0),
                ("trivial [1] const0", 0),
            ],
        ),
        (
            "disc3 down to pt",
            vec![
                ("trivial disc3 to disc2", 0),
                ("trivial disc2 swap", 0),
                ("trivial disc2 into [1]", 0),
                ("trivial [1] to pt", 0),
            ],
        ),
        (
            "[2] through [1]",
            vec![
                ("trivial [2] onto [1]", 0),
                ("trivial [1] const1", 0),
                ("trivial [1] to pt", 0),
            ],
        ),
        (
            "Z2 swap",
            vec![
                ("Z2 swap disc2 swap", 0),
                ("Z2 swap disc2 swap", 0),
                ("Z2 swap disc2 id", 0),
            ],
        ),
        ("Z2 swap quadruple", vec![("Z2 swap disc2 swap", 0); 4]),
        (
            "Z2 characters on BZ2",
            vec![
                ("Z2 trivial BZ2 id", 0),
                ("Z2 trivial BZ2 id", 1),
                ("Z2 trivial BZ2 id", 1),
            ],
        ),
        (
            "Z2 characters quadruple",
            vec![
                ("Z2 trivial BZ2 id", 1),
                ("Z2 trivial BZ2 id", 0),
                ("Z2 trivial BZ2 id", 1),
                ("Z2 trivial BZ2 id", 1),
            ],
        ),
        ("Z3 rotations", vec![("Z3 rotation disc3 rotate", 0); 3]),
        (
            "Z3 rotations to pt",
            vec![
                ("Z3 rotation disc3 rotate", 0),
                ("Z3 rotation disc3 id", 0),
                ("Z3 rotation disc3 to pt", 0),
            ],
        ),
        (
            "Sk(Z2,Z2) characters",
            vec![
                ("Sk(Z2,Z2) BZ2 id", 1),
                ("Sk(Z2,Z2) BZ2 id", 0),
                ("Sk(Z2,Z2) BZ2 id", 1),
            ],
        ),
        ("idempotent identities", vec![("idempotent [1] id", 0); 4]),
    ];
    chains
        .into_iter()
        .map(|(name, parts)| {
            let mods = parts.into_iter().map(|(s, i)| get(s, i)).collect::<Result<Vec<_>>>()?;
            Ok((name.to_string(), mods))
        })
        .collect()
}

/// Module transformations for the 2-span suite.
pub fn two_span_instances(budget: &Budget) -> Result<Vec<(String, ModuleNatTransData)>> {
    let setups = module_setups(budget)?;
    let get = |name: &str, i: usize| -> Result<ModuleFunctorData> {
        let s = setups.iter().find(|s| s.name == name).expect("named setup");
        structure(s, i, budget)
    };
    let arrow = chain(1);
    let up = arrow.hom(Obj(0), Obj(1))[0];
    let (id0, id1) = (arrow.identity(Obj(0)), arrow.identity(Obj(1)));
    let (konst0, id, konst1) = (
        get("trivial [1] const0", 0)?,
        get("trivial [1] id", 0)?,
        get("trivial [1] const1", 0)?,
    );
    let mut out = vec![
        (
            "const0 => id on [1]".to_string(),
            ModuleNatTransData::new(konst0.clone(), id.clone(), vec![id0, up])?,
        ),
        (
            "id => const1 on [1]".to_string(),
            ModuleNatTransData::new(id.clone(), konst1.clone(), vec![up, id1])?,
        ),
        (
            "const0 => const1 on [1]".to_string(),
            ModuleNatTransData::new(konst0, konst1, vec![up, up])?,
        ),
    ];
    for (name, i) in [
        ("trivial BZ2 id", 0),
        ("Z2 trivial BZ2 id", 1),
        ("Z2 swap disc2 swap", 0),
        ("Z3 rotation disc3 id", 0),
        ("Sk(Z2,Z2) BZ2 id", 1),
        ("idempotent disc2 id", 0),
    ] {
        out.push((
            format!("identity on {name}"),
            ModuleNatTransData::identity(&get(name, i)?),
        ));
    }
    Ok(out)
}
