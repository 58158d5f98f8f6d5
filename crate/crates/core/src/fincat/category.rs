use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::Report;

/// Dense object id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Obj(pub usize);

/// Dense morphism id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Mor(pub usize);

impl fmt::Display for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl fmt::Display for Mor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismRecord {
    pub label: String,
    pub source: Obj,
    pub target: Obj,
}

/// A finite category stored as dense tables.
///
/// Composition is total on composable pairs. The tables are validated for
/// shape on construction; the category laws are only checked by
/// [`check_category`], so a lawless table can be represented and diagnosed.
#[derive(Clone, Debug)]
pub struct FinCategory {
    name: String,
    obj_labels: Vec<String>,
    morphisms: Vec<MorphismRecord>,
    identity: Vec<Mor>,
    // morphisms out of each object, sorted by (target, id)
    out: Vec<Vec<Mor>>,
    out_pos: Vec<usize>,
    comp_offset: Vec<usize>,
    comp: Vec<Mor>,
    inverse: Vec<Option<Mor>>,
}

impl PartialEq for FinCategory {
    fn eq(&self, other: &Self) -> bool {
        self.obj_labels.len() == other.obj_labels.len()
            && self.identity == other.identity
            && self
                .morphisms
                .iter()
                .zip(&other.morphisms)
                .all(|(a, b)| a.source == b.source && a.target == b.target)
            && self.morphisms.len() == other.morphisms.len()
            && self.comp == other.comp
    }
}

impl Eq for FinCategory {}

impl FinCategory {
    /// Builds a category from a composition callback `compose(g, f) = g∘f`.
    ///
    /// The callback is queried once for every composable pair and must
    /// return a morphism id in range.
    pub fn from_fn(
        name: impl Into<String>,
        obj_labels: Vec<String>,
        morphisms: Vec<MorphismRecord>,
        identity: Vec<Mor>,
        mut compose: impl FnMut(Mor, Mor) -> Option<Mor>,
    ) -> Result<Self> {
        let name = name.into();
        let n = obj_labels.len();
        let m = morphisms.len();
        if identity.len() != n {
            return Err(Error::structural(format!(
                "{name}: identity table has {} entries for {n} objects",
                identity.len()
            )));
        }
        for (i, rec) in morphisms.iter().enumerate() {
            if rec.source.0 >= n || rec.target.0 >= n {
                return Err(Error::structural(format!(
                    "{name}: morphism {i} refers to a missing object"
                )));
            }
        }
        for (x, id) in identity.iter().enumerate() {
            if id.0 >= m {
                return Err(Error::structural(format!(
                    "{name}: identity of object {x} is missing morphism {}",
                    id.0
                )));
            }
            let rec = &morphisms[id.0];
            if rec.source.0 != x || rec.target.0 != x {
                return Err(Error::structural(format!(
                    "{name}: identity of object {x} is not an endomorphism of it"
                )));
            }
        }
        let mut out = vec![Vec::new(); n];
        for (i, rec) in morphisms.iter().enumerate() {
            out[rec.source.0].push(Mor(i));
        }
        for list in &mut out {
            list.sort_by_key(|g| (morphisms[g.0].target, *g));
        }
        let mut out_pos = vec![0; m];
        for list in &out {
            for (p, g) in list.iter().enumerate() {
                out_pos[g.0] = p;
            }
        }
        let mut comp_offset = Vec::with_capacity(m);
        let mut comp = Vec::new();
        for f in 0..m {
            comp_offset.push(comp.len());
            let y = morphisms[f].target;
            for &g in &out[y.0] {
                match compose(g, Mor(f)) {
                    Some(h) if h.0 < m => comp.push(h),
                    Some(h) => {
                        return Err(Error::structural(format!(
                            "{name}: composite of ({}, {f}) is missing morphism {}",
                            g.0, h.0
                        )))
                    }
                    None => {
                        return Err(Error::structural(format!(
                            "{name}: composite of ({}, {f}) is undefined",
                            g.0
                        )))
                    }
                }
            }
        }
        let mut cat = FinCategory {
            name,
            obj_labels,
            morphisms,
            identity,
            out,
            out_pos,
            comp_offset,
            comp,
            inverse: Vec::new(),
        };
        cat.inverse = (0..m).map(|f| cat.find_inverse(Mor(f))).collect();
        Ok(cat)
    }

    /// Builds a category from explicit `(g, f, g∘f)` triples.
    pub fn from_triples(
        name: impl Into<String>,
        obj_labels: Vec<String>,
        morphisms: Vec<MorphismRecord>,
        identity: Vec<Mor>,
        triples: &[(Mor, Mor, Mor)],
    ) -> Result<Self> {
        let name = name.into();
        let mut table: HashMap<(Mor, Mor), Mor> = HashMap::with_capacity(triples.len());
        for &(g, f, h) in triples {
            if g.0 >= morphisms.len() || f.0 >= morphisms.len() {
                return Err(Error::structural(format!(
                    "{name}: composition entry ({}, {}) refers to a missing morphism",
                    g.0, f.0
                )));
            }
            if morphisms[f.0].target != morphisms[g.0].source {
                return Err(Error::structural(format!(
                    "{name}: composition entry ({}, {}) is not a composable pair",
                    g.0, f.0
                )));
            }
            if table.insert((g, f), h).is_some() {
                return Err(Error::structural(format!(
                    "{name}: duplicate composition entry ({}, {})",
                    g.0, f.0
                )));
            }
        }
        Self::from_fn(name, obj_labels, morphisms, identity, |g, f| {
            table.get(&(g, f)).copied()
        })
    }

    fn find_inverse(&self, f: Mor) -> Option<Mor> {
        let x = self.source(f);
        let y = self.target(f);
        self.hom(y, x).iter().copied().find(|&g| {
            self.try_compose(g, f) == Some(self.identity(x)) && self.try_compose(f, g) == Some(self.identity(y))
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn object_count(&self) -> usize {
        self.obj_labels.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = Obj> + '_ {
        (0..self.obj_labels.len()).map(Obj)
    }

    pub fn morphisms(&self) -> impl Iterator<Item = Mor> + '_ {
        (0..self.morphisms.len()).map(Mor)
    }

    pub fn source(&self, f: Mor) -> Obj {
        self.morphisms[f.0].source
    }

    pub fn target(&self, f: Mor) -> Obj {
        self.morphisms[f.0].target
    }

    pub fn identity(&self, x: Obj) -> Mor {
        self.identity[x.0]
    }

    pub fn is_identity(&self, f: Mor) -> bool {
        let x = self.source(f);
        self.identity[x.0] == f
    }

    pub fn obj_label(&self, x: Obj) -> &str {
        &self.obj_labels[x.0]
    }

    pub fn mor_label(&self, f: Mor) -> &str {
        &self.morphisms[f.0].label
    }

    pub fn obj_labels(&self) -> &[String] {
        &self.obj_labels
    }

    pub fn morphism_records(&self) -> &[MorphismRecord] {
        &self.morphisms
    }

    pub fn identities(&self) -> &[Mor] {
        &self.identity
    }

    /// Morphisms `x → y` in id order.
    pub fn hom(&self, x: Obj, y: Obj) -> &[Mor] {
        let list = &self.out[x.0];
        let lo = list.partition_point(|g| self.morphisms[g.0].target < y);
        let hi = list.partition_point(|g| self.morphisms[g.0].target <= y);
        &list[lo..hi]
    }

    pub fn out_of(&self, x: Obj) -> &[Mor] {
        &self.out[x.0]
    }

    /// `g∘f`, or `None` when the pair is not composable.
    pub fn try_compose(&self, g: Mor, f: Mor) -> Option<Mor> {
        if self.morphisms[g.0].source != self.morphisms[f.0].target {
            return None;
        }
        Some(self.comp[self.comp_offset[f.0] + self.out_pos[g.0]])
    }

    /// `g∘f`. Panics on a non-composable pair.
    pub fn compose(&self, g: Mor, f: Mor) -> Mor {
        self.try_compose(g, f).unwrap_or_else(|| {
            panic!(
                "{}: composing non-composable pair ({}, {})",
                self.name,
                self.mor_label(g),
                self.mor_label(f)
            )
        })
    }

    /// Composes a path given in diagrammatic order: `path[0]` first.
    pub fn compose_path(&self, path: &[Mor]) -> Option<Mor> {
        let (first, rest) = path.split_first()?;
        rest.iter().try_fold(*first, |acc, &g| self.try_compose(g, acc))
    }

    pub fn inverse(&self, f: Mor) -> Option<Mor> {
        self.inverse[f.0]
    }

    pub fn is_iso(&self, f: Mor) -> bool {
        self.inverse[f.0].is_some()
    }

    /// True when every morphism is invertible.
    pub fn is_groupoid(&self) -> bool {
        self.inverse.iter().all(Option::is_some)
    }

    /// Composable triples counted as Σ_f |out(target f)|.
    pub fn composable_pairs(&self) -> usize {
        self.comp.len()
    }

    /// Every `(g, f, g∘f)` triple, ordered by `f` then `g`.
    pub fn composition_triples(&self) -> Vec<(Mor, Mor, Mor)> {
        let mut v = Vec::with_capacity(self.comp.len());
        for f in self.morphisms() {
            for &g in &self.out[self.target(f).0] {
                v.push((g, f, self.compose(g, f)));
            }
        }
        v
    }

    pub fn describe_path(&self, path: &[Mor]) -> String {
        path.iter()
            .map(|m| self.mor_label(*m).to_string())
            .collect::<Vec<_>>()
            .join(" ; ")
    }
}

/// Incremental constructor for hand-written categories.
///
/// Identities are added automatically; unspecified composites involving an
/// identity are filled in, all other composites must be given explicitly.
#[derive(Debug, Default)]
pub struct CategoryBuilder {
    name: String,
    objects: Vec<String>,
    morphisms: Vec<MorphismRecord>,
    identity: Vec<Mor>,
    table: HashMap<(Mor, Mor), Mor>,
}

impl CategoryBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        CategoryBuilder {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn object(&mut self, label: impl Into<String>) -> Obj {
        let label = label.into();
        let x = Obj(self.objects.len());
        let id = Mor(self.morphisms.len());
        self.morphisms.push(MorphismRecord {
            label: format!("id_{label}"),
            source: x,
            target: x,
        });
        self.objects.push(label);
        self.identity.push(id);
        x
    }

    pub fn morphism(&mut self, label: impl Into<String>, source: Obj, target: Obj) -> Mor {
        let f = Mor(self.morphisms.len());
        self.morphisms.push(MorphismRecord {
            label: label.into(),
            source,
            target,
        });
        f
    }

    /// Records `g∘f = h`.
    pub fn compose(&mut self, g: Mor, f: Mor, h: Mor) -> &mut Self {
        self.table.insert((g, f), h);
        self
    }

    pub fn build(self) -> Result<FinCategory> {
        let CategoryBuilder {
            name,
            objects,
            morphisms,
            identity,
            table,
        } = self;
        let is_id = |m: Mor| identity.iter().any(|i| *i == m);
        let recs = morphisms.clone();
        FinCategory::from_fn(name, objects, morphisms, identity.clone(), |g, f| {
            if let Some(h) = table.get(&(g, f)) {
                return Some(*h);
            }
            if is_id(g) && recs[g.0].source == recs[f.0].target {
                return Some(f);
            }
            if is_id(f) && recs[f.0].target == recs[g.0].source {
                return Some(g);
            }
            None
        })
    }
}

/// Exhaustive scan of the category laws.
///
/// Reports composite typing, both identity laws and associativity. Each
/// violation carries the witnessing morphism tuple.
pub fn check_category(c: &FinCategory) -> Report {
    let mut report = Report::new();
    for (g, f, h) in c.composition_triples() {
        report.require(
            c.source(h) == c.source(f) && c.target(h) == c.target(g),
            "composite-typing",
            || vec![g.0, f.0],
            || format!("{} ; {} has the wrong endpoints", c.mor_label(f), c.mor_label(g)),
        );
    }
    for f in c.morphisms() {
        let x = c.source(f);
        let y = c.target(f);
        report.require(
            c.try_compose(c.identity(y), f) == Some(f),
            "left-identity",
            || vec![c.identity(y).0, f.0],
            || format!("{} ; id_{} != {}", c.mor_label(f), c.obj_label(y), c.mor_label(f)),
        );
        report.require(
            c.try_compose(f, c.identity(x)) == Some(f),
            "right-identity",
            || vec![f.0, c.identity(x).0],
            || format!("id_{} ; {} != {}", c.obj_label(x), c.mor_label(f), c.mor_label(f)),
        );
    }
    if !report.is_ok() {
        // associativity is meaningless over ill-typed composites
        if report.has_law("composite-typing") {
            return report;
        }
    }
    for f in c.morphisms() {
        for &g in c.out_of(c.target(f)) {
            let gf = c.compose(g, f);
            for &h in c.out_of(c.target(g)) {
                let lhs = c.try_compose(h, gf);
                let rhs = c.try_compose(c.compose(h, g), f);
                report.require(
                    lhs == rhs,
                    "associativity",
                    || vec![h.0, g.0, f.0],
                    || {
                        format!(
                            "({} ; {}) ; {} != {} ; ({} ; {})",
                            c.mor_label(f),
                            c.mor_label(g),
                            c.mor_label(h),
                            c.mor_label(f),
                            c.mor_label(g),
                            c.mor_label(h)
                        )
                    },
                );
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::standard::{one_object_group, terminal};
    use crate::group::FiniteGroup;

    fn one_object(triples: &[(usize, usize, usize)]) -> Result<FinCategory> {
        let records = ["id", "s"]
            .iter()
            .map(|l| MorphismRecord {
                label: l.to_string(),
                source: Obj(0),
                target: Obj(0),
            })
            .collect();
        let t: Vec<_> = triples.iter().map(|&(g, f, h)| (Mor(g), Mor(f), Mor(h))).collect();
        FinCategory::from_triples("Z2?", vec!["*".into()], records, vec![Mor(0)], &t)
    }

    #[test]
    fn small_categories_are_lawful() {
        assert!(check_category(&terminal()).is_ok());
        assert!(check_category(&one_object_group(&FiniteGroup::cyclic(2))).is_ok());
    }

    #[test]
    fn idempotent_table_is_a_monoid() {
        // s∘s = s gives the two-element idempotent monoid, which is lawful
        let c = one_object(&[(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)]).unwrap();
        assert!(check_category(&c).is_ok());
        assert!(!c.is_iso(Mor(1)));
    }

    #[test]
    fn broken_identity_is_witnessed() {
        let c = one_object(&[(0, 0, 0), (0, 1, 1), (1, 0, 0), (1, 1, 0)]).unwrap();
        let report = check_category(&c);
        assert!(report.has_law("right-identity"));
        let v = report.violations.iter().find(|v| v.law == "right-identity").unwrap();
        assert_eq!(v.witness, vec![1, 0]);
    }

    #[test]
    fn dangling_ids_are_structural() {
        let records = vec![MorphismRecord {
            label: "id".into(),
            source: Obj(0),
            target: Obj(3),
        }];
        let err = FinCategory::from_fn("bad", vec!["*".into()], records, vec![Mor(0)], |_, f| Some(f)).unwrap_err();
        assert!(matches!(err, Error::Structural(_)));
        let err = one_object(&[(0, 0, 0), (0, 1, 1), (1, 0, 1)]).unwrap_err();
        assert!(matches!(err, Error::Structural(_)));
    }

    #[test]
    fn builder_fills_identities() {
        let mut b = CategoryBuilder::new("span");
        let x = b.object("x");
        let y = b.object("y");
        let z = b.object("z");
        let f = b.morphism("f", x, y);
        let g = b.morphism("g", y, z);
        let h = b.morphism("gf", x, z);
        b.compose(g, f, h);
        let c = b.build().unwrap();
        assert!(check_category(&c).is_ok());
        assert_eq!(c.hom(x, z), &[h]);
        assert_eq!(c.compose_path(&[f, g]), Some(h));
        assert_eq!(c.composition_triples().len(), c.composable_pairs());
    }

    #[test]
    fn group_inverses() {
        let g = FiniteGroup::symmetric3();
        let c = one_object_group(&g);
        assert!(c.is_groupoid());
        for a in g.elements() {
            assert_eq!(c.inverse(Mor(a)), Some(Mor(g.inv(a))));
        }
    }
}
