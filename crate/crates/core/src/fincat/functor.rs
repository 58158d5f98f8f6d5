use std::sync::Arc;

use super::category::{FinCategory, Mor, Obj};
use crate::error::{Error, Result};
use crate::report::Report;

/// Categories compare by pointer first, then by table equality.
pub fn same_category(a: &Arc<FinCategory>, b: &Arc<FinCategory>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A functor between finite categories, stored as object and morphism tables.
#[derive(Clone, Debug)]
pub struct Functor {
    source: Arc<FinCategory>,
    target: Arc<FinCategory>,
    obj_map: Vec<Obj>,
    mor_map: Vec<Mor>,
}

impl PartialEq for Functor {
    fn eq(&self, other: &Self) -> bool {
        self.obj_map == other.obj_map
            && self.mor_map == other.mor_map
            && same_category(&self.source, &other.source)
            && same_category(&self.target, &other.target)
    }
}

impl Eq for Functor {}

impl Functor {
    /// Validates table shape and id ranges; the functor laws are left to
    /// [`check_functor`].
    pub fn new(
        source: Arc<FinCategory>,
        target: Arc<FinCategory>,
        obj_map: Vec<Obj>,
        mor_map: Vec<Mor>,
    ) -> Result<Self> {
        if obj_map.len() != source.object_count() || mor_map.len() != source.morphism_count() {
            return Err(Error::structural(format!(
                "functor {} -> {}: table sizes do not match the source",
                source.name(),
                target.name()
            )));
        }
        if obj_map.iter().any(|y| y.0 >= target.object_count())
            || mor_map.iter().any(|g| g.0 >= target.morphism_count())
        {
            return Err(Error::structural(format!(
                "functor {} -> {}: image id out of range",
                source.name(),
                target.name()
            )));
        }
        Ok(Functor {
            source,
            target,
            obj_map,
            mor_map,
        })
    }

    /// Object images are read off the images of identities.
    pub fn from_morphism_map(source: Arc<FinCategory>, target: Arc<FinCategory>, mor_map: Vec<Mor>) -> Result<Self> {
        if mor_map.len() != source.morphism_count() || mor_map.iter().any(|g| g.0 >= target.morphism_count()) {
            return Err(Error::structural("functor morphism table malformed"));
        }
        let obj_map = source
            .objects()
            .map(|x| target.source(mor_map[source.identity(x).0]))
            .collect();
        Self::new(source, target, obj_map, mor_map)
    }

    pub fn identity(c: &Arc<FinCategory>) -> Self {
        Functor {
            source: c.clone(),
            target: c.clone(),
            obj_map: c.objects().collect(),
            mor_map: c.morphisms().collect(),
        }
    }

    pub fn constant(source: &Arc<FinCategory>, target: &Arc<FinCategory>, y: Obj) -> Self {
        Functor {
            source: source.clone(),
            target: target.clone(),
            obj_map: vec![y; source.object_count()],
            mor_map: vec![target.identity(y); source.morphism_count()],
        }
    }

    pub fn source(&self) -> &Arc<FinCategory> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinCategory> {
        &self.target
    }

    pub fn obj(&self, x: Obj) -> Obj {
        self.obj_map[x.0]
    }

    pub fn mor(&self, f: Mor) -> Mor {
        self.mor_map[f.0]
    }

    pub fn obj_map(&self) -> &[Obj] {
        &self.obj_map
    }

    pub fn mor_map(&self) -> &[Mor] {
        &self.mor_map
    }

    /// `self∘f`.
    pub fn after(&self, f: &Functor) -> Result<Functor> {
        compose_functors(self, f)
    }

    /// Same tables, retargeted at an equal category (e.g. a re-read copy).
    pub fn with_categories(&self, source: Arc<FinCategory>, target: Arc<FinCategory>) -> Result<Functor> {
        if !same_category(&self.source, &source) || !same_category(&self.target, &target) {
            return Err(Error::mismatch("retargeting a functor at a different category"));
        }
        Ok(Functor {
            source,
            target,
            obj_map: self.obj_map.clone(),
            mor_map: self.mor_map.clone(),
        })
    }

    pub fn is_injective_on_objects(&self) -> bool {
        let mut seen = vec![false; self.target.object_count()];
        self.obj_map.iter().all(|y| !std::mem::replace(&mut seen[y.0], true))
    }

    pub fn is_surjective_on_objects(&self) -> bool {
        let mut seen = vec![false; self.target.object_count()];
        for y in &self.obj_map {
            seen[y.0] = true;
        }
        seen.into_iter().all(|b| b)
    }
}

/// `g∘f`, computed pointwise.
pub fn compose_functors(g: &Functor, f: &Functor) -> Result<Functor> {
    if !same_category(f.target(), g.source()) {
        return Err(Error::mismatch(format!(
            "cannot compose {} -> {} after {} -> {}",
            g.source().name(),
            g.target().name(),
            f.source().name(),
            f.target().name()
        )));
    }
    Ok(Functor {
        source: f.source.clone(),
        target: g.target.clone(),
        obj_map: f.obj_map.iter().map(|&y| g.obj(y)).collect(),
        mor_map: f.mor_map.iter().map(|&m| g.mor(m)).collect(),
    })
}

/// Exhaustive check of the functor laws.
pub fn check_functor(f: &Functor) -> Report {
    let (c, d) = (f.source(), f.target());
    let mut report = Report::new();
    for m in c.morphisms() {
        let img = f.mor(m);
        report.require(
            d.source(img) == f.obj(c.source(m)) && d.target(img) == f.obj(c.target(m)),
            "typing",
            || vec![m.0],
            || format!("image of {} has the wrong endpoints", c.mor_label(m)),
        );
    }
    for x in c.objects() {
        report.require(
            f.mor(c.identity(x)) == d.identity(f.obj(x)),
            "identity",
            || vec![x.0],
            || format!("F(id_{}) is not an identity", c.obj_label(x)),
        );
    }
    if report.has_law("typing") {
        return report;
    }
    for (g, h, gh) in c.composition_triples() {
        report.require(
            d.try_compose(f.mor(g), f.mor(h)) == Some(f.mor(gh)),
            "composition",
            || vec![g.0, h.0],
            || {
                format!(
                    "F({} ; {}) != F({}) ; F({})",
                    c.mor_label(h),
                    c.mor_label(g),
                    c.mor_label(h),
                    c.mor_label(g)
                )
            },
        );
    }
    report
}

/// A natural transformation `source ⇒ target` given by its components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatTrans {
    source: Functor,
    target: Functor,
    components: Vec<Mor>,
}

impl NatTrans {
    pub fn new(source: Functor, target: Functor, components: Vec<Mor>) -> Result<Self> {
        if !same_category(source.source(), target.source()) || !same_category(source.target(), target.target()) {
            return Err(Error::mismatch(
                "natural transformation between functors with different endpoints",
            ));
        }
        if components.len() != source.source().object_count()
            || components.iter().any(|c| c.0 >= source.target().morphism_count())
        {
            return Err(Error::structural("natural transformation component table malformed"));
        }
        Ok(NatTrans {
            source,
            target,
            components,
        })
    }

    pub fn identity(f: &Functor) -> Self {
        let d = f.target();
        NatTrans {
            source: f.clone(),
            target: f.clone(),
            components: f.obj_map().iter().map(|&y| d.identity(y)).collect(),
        }
    }

    pub fn source(&self) -> &Functor {
        &self.source
    }

    pub fn target(&self) -> &Functor {
        &self.target
    }

    pub fn component(&self, x: Obj) -> Mor {
        self.components[x.0]
    }

    pub fn components(&self) -> &[Mor] {
        &self.components
    }

    pub fn is_identity(&self) -> bool {
        let d = self.source.target();
        self.source == self.target && self.components.iter().all(|&c| d.is_identity(c))
    }

    pub fn is_invertible(&self) -> bool {
        let d = self.source.target();
        self.components.iter().all(|&c| d.is_iso(c))
    }

    pub fn inverse(&self) -> Option<NatTrans> {
        let d = self.source.target();
        let components = self
            .components
            .iter()
            .map(|&c| d.inverse(c))
            .collect::<Option<Vec<_>>>()?;
        Some(NatTrans {
            source: self.target.clone(),
            target: self.source.clone(),
            components,
        })
    }

    /// `after ∘ before` (vertical composition).
    pub fn vertical(after: &NatTrans, before: &NatTrans) -> Result<NatTrans> {
        if before.target != after.source {
            return Err(Error::mismatch("vertical composite of non-matching transformations"));
        }
        let d = before.source.target();
        let components = before
            .components
            .iter()
            .zip(&after.components)
            .map(|(&b, &a)| {
                d.try_compose(a, b)
                    .ok_or_else(|| Error::structural("components are not composable"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(NatTrans {
            source: before.source.clone(),
            target: after.target.clone(),
            components,
        })
    }

    /// `H∘η`: components `H(η_x)`.
    pub fn whisker_left(h: &Functor, eta: &NatTrans) -> Result<NatTrans> {
        Ok(NatTrans {
            source: compose_functors(h, &eta.source)?,
            target: compose_functors(h, &eta.target)?,
            components: eta.components.iter().map(|&c| h.mor(c)).collect(),
        })
    }

    /// `η∘K`: components `η_{K(x)}`.
    pub fn whisker_right(eta: &NatTrans, k: &Functor) -> Result<NatTrans> {
        Ok(NatTrans {
            source: compose_functors(&eta.source, k)?,
            target: compose_functors(&eta.target, k)?,
            components: k.obj_map().iter().map(|&y| eta.component(y)).collect(),
        })
    }

    /// Horizontal composite `outer * inner`: component `outer_{G x} ∘ F'(inner_x)`.
    pub fn horizontal(outer: &NatTrans, inner: &NatTrans) -> Result<NatTrans> {
        let left = NatTrans::whisker_left(&outer.source, inner)?;
        let right = NatTrans::whisker_right(outer, &inner.target)?;
        NatTrans::vertical(&right, &left)
    }
}

/// Typing and naturality of a transformation.
pub fn check_nat_trans(t: &NatTrans) -> Report {
    let (f, g) = (t.source(), t.target());
    let (c, d) = (f.source(), f.target());
    let mut report = Report::new();
    for x in c.objects() {
        let a = t.component(x);
        report.require(
            d.source(a) == f.obj(x) && d.target(a) == g.obj(x),
            "component-typing",
            || vec![x.0],
            || format!("component at {} has the wrong endpoints", c.obj_label(x)),
        );
    }
    if !report.is_ok() {
        return report;
    }
    for u in c.morphisms() {
        let (x, y) = (c.source(u), c.target(u));
        let lhs = d.try_compose(g.mor(u), t.component(x));
        let rhs = d.try_compose(t.component(y), f.mor(u));
        report.require(
            lhs.is_some() && lhs == rhs,
            "naturality",
            || vec![u.0],
            || {
                format!(
                    "η_{} ; G({}) != F({}) ; η_{}",
                    c.obj_label(x),
                    c.mor_label(u),
                    c.mor_label(u),
                    c.obj_label(y)
                )
            },
        );
    }
    report
}
