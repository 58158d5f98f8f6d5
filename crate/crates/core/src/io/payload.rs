use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fincat::{Budget, FinCategory, Functor, Mor, MorphismRecord, NatTrans, Obj};
use crate::monoidal::{Braiding, MonFunctor, MonoidalStructure};
use crate::report::{Report, Violation};
use crate::spans::{end_monoidal, EndCategory, ModuleData, ModuleFunctorData, ModuleNatTransData};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryDoc {
    pub name: String,
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismDoc>,
    pub identities: Vec<usize>,
    /// `[g, f, g∘f]` for every composable pair, ordered by `f` then `g`.
    pub composition: Vec<[usize; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidalDoc {
    pub category: CategoryDoc,
    pub tensor_objects: Vec<usize>,
    pub tensor_morphisms: Vec<usize>,
    pub unit: usize,
    pub associator: Vec<usize>,
    pub left_unitor: Vec<usize>,
    pub right_unitor: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BraidingDoc {
    pub monoidal: MonoidalDoc,
    pub beta: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorDoc {
    pub source: CategoryDoc,
    pub target: CategoryDoc,
    pub objects: Vec<usize>,
    pub morphisms: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonFunctorDoc {
    pub source: MonoidalDoc,
    pub target: MonoidalDoc,
    pub objects: Vec<usize>,
    pub morphisms: Vec<usize>,
    pub multiplication: Vec<usize>,
    pub unit: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NatTransDoc {
    pub source: FunctorDoc,
    pub target: FunctorDoc,
    pub components: Vec<usize>,
}

/// An action given by carrier tables: each acting object as the morphism
/// map of an endofunctor, each acting morphism and structure map as the
/// components of a transformation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionDoc {
    pub objects: Vec<Vec<usize>>,
    pub morphisms: Vec<Vec<usize>>,
    pub multiplication: Vec<Vec<usize>>,
    pub unit: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDoc {
    pub acting: MonoidalDoc,
    pub carrier: CategoryDoc,
    pub action: ActionDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CarrierMapDoc {
    pub objects: Vec<usize>,
    pub morphisms: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFunctorDoc {
    pub source: ModuleDoc,
    pub target: ModuleDoc,
    pub functor: CarrierMapDoc,
    pub xi: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleNatTransDoc {
    pub source: ModuleFunctorDoc,
    pub target: ModuleFunctorDoc,
    pub components: Vec<usize>,
}

/// A monoidal functor out of the apex of the enclosing span.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LegDoc {
    pub target: MonoidalDoc,
    pub objects: Vec<usize>,
    pub morphisms: Vec<usize>,
    pub multiplication: Vec<usize>,
    pub unit: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpanDoc {
    pub apex: MonoidalDoc,
    pub left: LegDoc,
    pub right: LegDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub top: Option<LegDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bottom: Option<LegDoc>,
}

/// A scalar or list attached to a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Fact {
    Bool(bool),
    Int(u64),
    Text(String),
    List(Vec<u64>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDoc {
    pub command: String,
    pub ok: bool,
    pub total: usize,
    pub cap: usize,
    pub violations: Vec<Violation>,
    pub facts: BTreeMap<String, Fact>,
}

/// A decoded span: apex and legs, plus the vertical legs of a 2-span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanValue {
    pub apex: Arc<MonoidalStructure>,
    pub left: MonFunctor,
    pub right: MonFunctor,
    pub top: Option<MonFunctor>,
    pub bottom: Option<MonFunctor>,
}

/// A verification report with named facts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportValue {
    pub command: String,
    pub report: Report,
    pub facts: BTreeMap<String, Fact>,
}

fn schema(path: &str, message: impl Into<String>) -> Error {
    Error::Schema {
        path: path.to_string(),
        message: message.into(),
    }
}

fn ids(path: &str, v: &[usize], bound: usize, what: &str) -> Result<()> {
    match v.iter().position(|&x| x >= bound) {
        Some(i) => Err(schema(
            &format!("{path}[{i}]"),
            format!("dangling {what} id {} (have {bound})", v[i]),
        )),
        None => Ok(()),
    }
}

fn len(path: &str, v: usize, want: usize) -> Result<()> {
    if v != want {
        return Err(schema(path, format!("expected {want} entries, found {v}")));
    }
    Ok(())
}

fn objs(v: &[usize]) -> Vec<Obj> {
    v.iter().map(|&x| Obj(x)).collect()
}

fn mors(v: &[usize]) -> Vec<Mor> {
    v.iter().map(|&x| Mor(x)).collect()
}

fn plain<T: Copy>(v: &[T], f: impl Fn(T) -> usize) -> Vec<usize> {
    v.iter().map(|&x| f(x)).collect()
}

// Errors from the table constructors, after the path checks, are attributed
// to the enclosing document node.
fn at<T>(path: &str, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Structural(m) | Error::Mismatch(m) => schema(path, m),
        other => other,
    })
}

pub fn encode_category(c: &FinCategory) -> CategoryDoc {
    CategoryDoc {
        name: c.name().to_string(),
        objects: c.obj_labels().to_vec(),
        morphisms: c
            .morphism_records()
            .iter()
            .map(|r| MorphismDoc {
                label: r.label.clone(),
                source: r.source.0,
                target: r.target.0,
            })
            .collect(),
        identities: plain(c.identities(), |m| m.0),
        composition: c
            .composition_triples()
            .into_iter()
            .map(|(g, f, h)| [g.0, f.0, h.0])
            .collect(),
    }
}

pub fn decode_category(d: &CategoryDoc, path: &str) -> Result<Arc<FinCategory>> {
    let (n, m) = (d.objects.len(), d.morphisms.len());
    for (i, r) in d.morphisms.iter().enumerate() {
        for (end, x) in [("source", r.source), ("target", r.target)] {
            if x >= n {
                return Err(schema(
                    &format!("{path}.morphisms[{i}].{end}"),
                    format!("dangling object id {x} (have {n})"),
                ));
            }
        }
    }
    len(&format!("{path}.identities"), d.identities.len(), n)?;
    ids(&format!("{path}.identities"), &d.identities, m, "morphism")?;
    for (i, t) in d.composition.iter().enumerate() {
        ids(&format!("{path}.composition[{i}]"), t, m, "morphism")?;
    }
    let records = d
        .morphisms
        .iter()
        .map(|r| MorphismRecord {
            label: r.label.clone(),
            source: Obj(r.source),
            target: Obj(r.target),
        })
        .collect();
    let triples: Vec<(Mor, Mor, Mor)> = d
        .composition
        .iter()
        .map(|t| (Mor(t[0]), Mor(t[1]), Mor(t[2])))
        .collect();
    let c = at(
        path,
        FinCategory::from_triples(
            d.name.clone(),
            d.objects.clone(),
            records,
            mors(&d.identities),
            &triples,
        ),
    )?;
    Ok(Arc::new(c))
}

pub fn encode_monoidal(s: &MonoidalStructure) -> MonoidalDoc {
    MonoidalDoc {
        category: encode_category(s.base()),
        tensor_objects: plain(s.tensor_obj_table(), |x| x.0),
        tensor_morphisms: plain(s.tensor_mor_table(), |f| f.0),
        unit: s.unit().0,
        associator: plain(s.associator_table(), |f| f.0),
        left_unitor: plain(s.left_unitor_table(), |f| f.0),
        right_unitor: plain(s.right_unitor_table(), |f| f.0),
    }
}

pub fn decode_monoidal(d: &MonoidalDoc, path: &str) -> Result<Arc<MonoidalStructure>> {
    let c = decode_category(&d.category, &format!("{path}.category"))?;
    let (n, m) = (c.object_count(), c.morphism_count());
    len(&format!("{path}.tensor_objects"), d.tensor_objects.len(), n * n)?;
    ids(&format!("{path}.tensor_objects"), &d.tensor_objects, n, "object")?;
    len(&format!("{path}.tensor_morphisms"), d.tensor_morphisms.len(), m * m)?;
    ids(&format!("{path}.tensor_morphisms"), &d.tensor_morphisms, m, "morphism")?;
    ids(&format!("{path}.unit"), &[d.unit], n, "object")?;
    len(&format!("{path}.associator"), d.associator.len(), n * n * n)?;
    ids(&format!("{path}.associator"), &d.associator, m, "morphism")?;
    len(&format!("{path}.left_unitor"), d.left_unitor.len(), n)?;
    ids(&format!("{path}.left_unitor"), &d.left_unitor, m, "morphism")?;
    len(&format!("{path}.right_unitor"), d.right_unitor.len(), n)?;
    ids(&format!("{path}.right_unitor"), &d.right_unitor, m, "morphism")?;
    let s = at(
        path,
        MonoidalStructure::new(
            c,
            objs(&d.tensor_objects),
            mors(&d.tensor_morphisms),
            Obj(d.unit),
            mors(&d.associator),
            mors(&d.left_unitor),
            mors(&d.right_unitor),
        ),
    )?;
    Ok(Arc::new(s))
}

pub fn encode_braiding(b: &Braiding) -> BraidingDoc {
    BraidingDoc {
        monoidal: encode_monoidal(b.monoidal()),
        beta: plain(b.table(), |f| f.0),
    }
}

pub fn decode_braiding(d: &BraidingDoc, path: &str) -> Result<Braiding> {
    let s = decode_monoidal(&d.monoidal, &format!("{path}.monoidal"))?;
    let (n, m) = (s.base().object_count(), s.base().morphism_count());
    len(&format!("{path}.beta"), d.beta.len(), n * n)?;
    ids(&format!("{path}.beta"), &d.beta, m, "morphism")?;
    at(path, Braiding::new(s, mors(&d.beta)))
}

fn functor_tables(
    path: &str,
    s: &Arc<FinCategory>,
    t: &Arc<FinCategory>,
    objects: &[usize],
    morphisms: &[usize],
) -> Result<Functor> {
    len(&format!("{path}.objects"), objects.len(), s.object_count())?;
    ids(&format!("{path}.objects"), objects, t.object_count(), "object")?;
    len(&format!("{path}.morphisms"), morphisms.len(), s.morphism_count())?;
    ids(&format!("{path}.morphisms"), morphisms, t.morphism_count(), "morphism")?;
    at(path, Functor::new(s.clone(), t.clone(), objs(objects), mors(morphisms)))
}

pub fn encode_functor(f: &Functor) -> FunctorDoc {
    FunctorDoc {
        source: encode_category(f.source()),
        target: encode_category(f.target()),
        objects: plain(f.obj_map(), |x| x.0),
        morphisms: plain(f.mor_map(), |g| g.0),
    }
}

pub fn decode_functor(d: &FunctorDoc, path: &str) -> Result<Functor> {
    let s = decode_category(&d.source, &format!("{path}.source"))?;
    let t = decode_category(&d.target, &format!("{path}.target"))?;
    functor_tables(path, &s, &t, &d.objects, &d.morphisms)
}

pub fn encode_mon_functor(f: &MonFunctor) -> MonFunctorDoc {
    MonFunctorDoc {
        source: encode_monoidal(f.source()),
        target: encode_monoidal(f.target()),
        objects: plain(f.functor().obj_map(), |x| x.0),
        morphisms: plain(f.functor().mor_map(), |g| g.0),
        multiplication: plain(f.mult_table(), |g| g.0),
        unit: f.eta().0,
    }
}

fn mon_functor_tables(
    path: &str,
    s: &Arc<MonoidalStructure>,
    t: &Arc<MonoidalStructure>,
    objects: &[usize],
    morphisms: &[usize],
    multiplication: &[usize],
    unit: usize,
) -> Result<MonFunctor> {
    let f = functor_tables(path, s.base(), t.base(), objects, morphisms)?;
    let (n, m) = (s.base().object_count(), t.base().morphism_count());
    len(&format!("{path}.multiplication"), multiplication.len(), n * n)?;
    ids(&format!("{path}.multiplication"), multiplication, m, "morphism")?;
    ids(&format!("{path}.unit"), &[unit], m, "morphism")?;
    at(
        path,
        MonFunctor::new(s.clone(), t.clone(), f, mors(multiplication), Mor(unit)),
    )
}

pub fn decode_mon_functor(d: &MonFunctorDoc, path: &str) -> Result<MonFunctor> {
    let s = decode_monoidal(&d.source, &format!("{path}.source"))?;
    let t = decode_monoidal(&d.target, &format!("{path}.target"))?;
    mon_functor_tables(path, &s, &t, &d.objects, &d.morphisms, &d.multiplication, d.unit)
}

pub fn encode_nat_trans(t: &NatTrans) -> NatTransDoc {
    NatTransDoc {
        source: encode_functor(t.source()),
        target: encode_functor(t.target()),
        components: plain(t.components(), |f| f.0),
    }
}

pub fn decode_nat_trans(d: &NatTransDoc, path: &str) -> Result<NatTrans> {
    let f = decode_functor(&d.source, &format!("{path}.source"))?;
    let g = decode_functor(&d.target, &format!("{path}.target"))?;
    let (n, m) = (f.source().object_count(), f.target().morphism_count());
    len(&format!("{path}.components"), d.components.len(), n)?;
    ids(&format!("{path}.components"), &d.components, m, "morphism")?;
    let g = at(path, g.with_categories(f.source().clone(), f.target().clone()))?;
    at(path, NatTrans::new(f, g, mors(&d.components)))
}

pub fn encode_module(x: &ModuleData) -> ModuleDoc {
    let e = x.end().functors();
    let a = x.action();
    let c = x.acting().base();
    ModuleDoc {
        acting: encode_monoidal(x.acting()),
        carrier: encode_category(x.carrier()),
        action: ActionDoc {
            objects: c.objects().map(|o| plain(e.mor_map(a.obj(o)), |g| g.0)).collect(),
            morphisms: c.morphisms().map(|u| plain(e.components(a.mor(u)), |g| g.0)).collect(),
            multiplication: a
                .mult_table()
                .iter()
                .map(|&g| plain(e.components(g), |h| h.0))
                .collect(),
            unit: plain(e.components(a.eta()), |g| g.0),
        },
    }
}

fn end_object(e: &EndCategory, path: &str, map: &[usize]) -> Result<Obj> {
    let m = e.carrier();
    len(path, map.len(), m.morphism_count())?;
    ids(path, map, m.morphism_count(), "morphism")?;
    e.functors()
        .find_functor(&mors(map))
        .ok_or_else(|| schema(path, "not an endofunctor of the carrier"))
}

fn end_morphism(e: &EndCategory, path: &str, from: Obj, to: Obj, comps: &[usize]) -> Result<Mor> {
    let m = e.carrier();
    len(path, comps.len(), m.object_count())?;
    ids(path, comps, m.morphism_count(), "morphism")?;
    e.functors()
        .find_morphism(from, to, &mors(comps))
        .ok_or_else(|| schema(path, "not a natural transformation between the expected endofunctors"))
}

pub fn decode_module(d: &ModuleDoc, path: &str, budget: &Budget) -> Result<ModuleData> {
    let acting = decode_monoidal(&d.acting, &format!("{path}.acting"))?;
    let carrier = decode_category(&d.carrier, &format!("{path}.carrier"))?;
    let end = Arc::new(end_monoidal(&carrier, budget)?);
    let c = acting.base();
    let a = &d.action;
    let p = format!("{path}.action");
    len(&format!("{p}.objects"), a.objects.len(), c.object_count())?;
    let obj = a
        .objects
        .iter()
        .enumerate()
        .map(|(i, map)| end_object(&end, &format!("{p}.objects[{i}]"), map))
        .collect::<Result<Vec<_>>>()?;
    len(&format!("{p}.morphisms"), a.morphisms.len(), c.morphism_count())?;
    let mut mor = Vec::with_capacity(c.morphism_count());
    for u in c.morphisms() {
        let (s, t) = (obj[c.source(u).0], obj[c.target(u).0]);
        mor.push(end_morphism(
            &end,
            &format!("{p}.morphisms[{}]", u.0),
            s,
            t,
            &a.morphisms[u.0],
        )?);
    }
    let em = end.monoidal();
    let n = c.object_count();
    len(&format!("{p}.multiplication"), a.multiplication.len(), n * n)?;
    let mut mult = Vec::with_capacity(n * n);
    for x in c.objects() {
        for y in c.objects() {
            let i = x.0 * n + y.0;
            let (s, t) = (em.tensor(obj[x.0], obj[y.0]), obj[acting.tensor(x, y).0]);
            mult.push(end_morphism(
                &end,
                &format!("{p}.multiplication[{i}]"),
                s,
                t,
                &a.multiplication[i],
            )?);
        }
    }
    let unit = end_morphism(&end, &format!("{p}.unit"), em.unit(), obj[acting.unit().0], &a.unit)?;
    let functor = at(&p, Functor::new(c.clone(), end.category().clone(), obj, mor))?;
    let action = at(&p, MonFunctor::new(acting.clone(), em.clone(), functor, mult, unit))?;
    at(path, ModuleData::new(end, action))
}

pub fn encode_module_functor(f: &ModuleFunctorData) -> ModuleFunctorDoc {
    ModuleFunctorDoc {
        source: encode_module(f.source()),
        target: encode_module(f.target()),
        functor: CarrierMapDoc {
            objects: plain(f.functor().obj_map(), |x| x.0),
            morphisms: plain(f.functor().mor_map(), |g| g.0),
        },
        xi: f.xi_table().iter().map(|row| plain(row, |g| g.0)).collect(),
    }
}

pub fn decode_module_functor(d: &ModuleFunctorDoc, path: &str, budget: &Budget) -> Result<ModuleFunctorData> {
    let x = decode_module(&d.source, &format!("{path}.source"), budget)?;
    let y = decode_module(&d.target, &format!("{path}.target"), budget)?;
    let f = functor_tables(
        &format!("{path}.functor"),
        x.carrier(),
        y.carrier(),
        &d.functor.objects,
        &d.functor.morphisms,
    )?;
    let (k, n, m) = (
        x.acting().base().object_count(),
        x.carrier().object_count(),
        y.carrier().morphism_count(),
    );
    len(&format!("{path}.xi"), d.xi.len(), k)?;
    for (i, row) in d.xi.iter().enumerate() {
        len(&format!("{path}.xi[{i}]"), row.len(), n)?;
        ids(&format!("{path}.xi[{i}]"), row, m, "morphism")?;
    }
    let xi = d.xi.iter().map(|row| mors(row)).collect();
    ModuleFunctorData::new(x, y, f, xi)
}

pub fn encode_module_nat_trans(a: &ModuleNatTransData) -> ModuleNatTransDoc {
    ModuleNatTransDoc {
        source: encode_module_functor(a.source()),
        target: encode_module_functor(a.target()),
        components: plain(a.components(), |g| g.0),
    }
}

pub fn decode_module_nat_trans(d: &ModuleNatTransDoc, path: &str, budget: &Budget) -> Result<ModuleNatTransData> {
    let f = decode_module_functor(&d.source, &format!("{path}.source"), budget)?;
    let g = decode_module_functor(&d.target, &format!("{path}.target"), budget)?;
    let (n, m) = (
        f.source().carrier().object_count(),
        f.target().carrier().morphism_count(),
    );
    len(&format!("{path}.components"), d.components.len(), n)?;
    ids(&format!("{path}.components"), &d.components, m, "morphism")?;
    ModuleNatTransData::new(f, g, mors(&d.components))
}

fn encode_leg(f: &MonFunctor) -> LegDoc {
    LegDoc {
        target: encode_monoidal(f.target()),
        objects: plain(f.functor().obj_map(), |x| x.0),
        morphisms: plain(f.functor().mor_map(), |g| g.0),
        multiplication: plain(f.mult_table(), |g| g.0),
        unit: f.eta().0,
    }
}

fn decode_leg(d: &LegDoc, apex: &Arc<MonoidalStructure>, path: &str) -> Result<MonFunctor> {
    let t = decode_monoidal(&d.target, &format!("{path}.target"))?;
    mon_functor_tables(path, apex, &t, &d.objects, &d.morphisms, &d.multiplication, d.unit)
}

pub fn encode_span(s: &SpanValue) -> SpanDoc {
    SpanDoc {
        apex: encode_monoidal(&s.apex),
        left: encode_leg(&s.left),
        right: encode_leg(&s.right),
        top: s.top.as_ref().map(encode_leg),
        bottom: s.bottom.as_ref().map(encode_leg),
    }
}

pub fn decode_span(d: &SpanDoc, path: &str) -> Result<SpanValue> {
    let apex = decode_monoidal(&d.apex, &format!("{path}.apex"))?;
    let leg = |l: &LegDoc, name: &str| decode_leg(l, &apex, &format!("{path}.{name}"));
    Ok(SpanValue {
        left: leg(&d.left, "left")?,
        right: leg(&d.right, "right")?,
        top: d.top.as_ref().map(|l| leg(l, "top")).transpose()?,
        bottom: d.bottom.as_ref().map(|l| leg(l, "bottom")).transpose()?,
        apex,
    })
}

pub fn encode_report(r: &ReportValue) -> ReportDoc {
    ReportDoc {
        command: r.command.clone(),
        ok: r.report.is_ok(),
        total: r.report.total,
        cap: r.report.cap,
        violations: r.report.violations.clone(),
        facts: r.facts.clone(),
    }
}

pub fn decode_report(d: &ReportDoc, path: &str) -> Result<ReportValue> {
    if d.ok != (d.total == 0) {
        return Err(schema(&format!("{path}.ok"), "disagrees with the violation total"));
    }
    if d.violations.len() > d.total || d.violations.len() > d.cap {
        return Err(schema(
            &format!("{path}.violations"),
            "more violations than total or cap allow",
        ));
    }
    Ok(ReportValue {
        command: d.command.clone(),
        report: Report {
            violations: d.violations.clone(),
            total: d.total,
            cap: d.cap,
        },
        facts: d.facts.clone(),
    })
}
