use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{
    compose_functors, enumerate_nat_trans, same_category, Budget, Concrete, ConcreteSpec, FinCategory, Functor, Mor,
    NatTrans, Obj,
};
use crate::report::Report;

/// Direction of the comparison morphism in a comma category.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// `ξ: f(x) → g(y)`.
    Forward,
    /// `ξ: g(y) → f(x)`.
    Reverse,
}

/// Which limit of the cospan `X → Z ← Y` is tabulated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LimitKind {
    /// Objects `(x, y, ξ)` with `ξ: f(x) ≅ g(y)`.
    Iso,
    /// Objects `(x, y, ξ)` with `ξ` any morphism in the given direction.
    Comma(Orientation),
    /// Objects `(x, y)` with `f(x) = g(y)`; `ξ` is the identity.
    Strict,
}

impl LimitKind {
    fn orientation(self) -> Orientation {
        match self {
            LimitKind::Comma(o) => o,
            _ => Orientation::Forward,
        }
    }
}

/// Object key of a fiber product apex.
pub type Triple = (Obj, Obj, Mor);

/// The apex of a cospan limit with its projections and filler.
///
/// The filler has components `ξ`; it is a transformation
/// `f∘pr1 ⇒ g∘pr2`, or `g∘pr2 ⇒ f∘pr1` for reverse commas.
#[derive(Clone, Debug)]
pub struct FiberProduct {
    kind: LimitKind,
    left: Functor,
    right: Functor,
    table: Concrete<Triple, (Mor, Mor)>,
    pr1: Functor,
    pr2: Functor,
    filler: NatTrans,
}

impl FiberProduct {
    pub fn kind(&self) -> LimitKind {
        self.kind
    }

    pub fn left(&self) -> &Functor {
        &self.left
    }

    pub fn right(&self) -> &Functor {
        &self.right
    }

    pub fn apex(&self) -> &Arc<FinCategory> {
        self.table.category()
    }

    pub fn pr1(&self) -> &Functor {
        &self.pr1
    }

    pub fn pr2(&self) -> &Functor {
        &self.pr2
    }

    pub fn filler(&self) -> &NatTrans {
        &self.filler
    }

    pub fn triple(&self, a: Obj) -> Triple {
        *self.table.object_key(a)
    }

    pub fn pair(&self, h: Mor) -> (Mor, Mor) {
        *self.table.morphism_key(h)
    }

    pub fn find(&self, x: Obj, y: Obj, xi: Mor) -> Option<Obj> {
        self.table.find_object(&(x, y, xi))
    }

    pub fn find_morphism(&self, from: Obj, to: Obj, u: Mor, v: Mor) -> Option<Mor> {
        self.table.find_morphism(from, to, &(u, v))
    }

    /// The morphism of `Z` a pair `(u, v): (x,y,ξ) → (x',y',ξ')` must
    /// square with: source and target composites of the compatibility.
    fn compatible(&self, s: Triple, t: Triple, u: Mor, v: Mor) -> bool {
        compatible(self.kind, &self.left, &self.right, s, t, u, v)
    }
}

fn compatible(kind: LimitKind, f: &Functor, g: &Functor, s: Triple, t: Triple, u: Mor, v: Mor) -> bool {
    let z = f.target();
    match kind.orientation() {
        Orientation::Forward => {
            z.try_compose(g.mor(v), s.2).is_some() && z.try_compose(g.mor(v), s.2) == z.try_compose(t.2, f.mor(u))
        }
        Orientation::Reverse => {
            z.try_compose(f.mor(u), s.2).is_some() && z.try_compose(f.mor(u), s.2) == z.try_compose(t.2, g.mor(v))
        }
    }
}

fn build(kind: LimitKind, f: &Functor, g: &Functor, budget: &Budget) -> Result<FiberProduct> {
    if !same_category(f.target(), g.target()) {
        return Err(Error::mismatch(format!(
            "cospan legs land in different categories {} and {}",
            f.target().name(),
            g.target().name()
        )));
    }
    let (x, y, z) = (f.source(), g.source(), f.target());
    let comparisons = |a: Obj, b: Obj| -> Vec<Mor> {
        let (fa, gb) = (f.obj(a), g.obj(b));
        match kind {
            LimitKind::Iso => z.hom(fa, gb).iter().copied().filter(|&m| z.is_iso(m)).collect(),
            LimitKind::Comma(Orientation::Forward) => z.hom(fa, gb).to_vec(),
            LimitKind::Comma(Orientation::Reverse) => z.hom(gb, fa).to_vec(),
            LimitKind::Strict => {
                if fa == gb {
                    vec![z.identity(fa)]
                } else {
                    Vec::new()
                }
            }
        }
    };
    let estimate: u128 = x
        .objects()
        .flat_map(|a| y.objects().map(move |b| (a, b)))
        .map(|(a, b)| comparisons(a, b).len() as u128)
        .sum();
    let tag = match kind {
        LimitKind::Iso => "iso",
        LimitKind::Comma(Orientation::Forward) => "comma",
        LimitKind::Comma(Orientation::Reverse) => "rcomma",
        LimitKind::Strict => "pb",
    };
    let name = format!("{tag}({},{})", x.name(), y.name());
    budget.check_objects(&name, estimate)?;
    let mut objects = Vec::new();
    for a in x.objects() {
        for b in y.objects() {
            for m in comparisons(a, b) {
                objects.push((a, b, m));
            }
        }
    }
    let table = Concrete::build(
        &name,
        objects,
        budget,
        ConcreteSpec {
            hom: |s: &Triple, t: &Triple| {
                let mut out = Vec::new();
                for &u in x.hom(s.0, t.0) {
                    for &v in y.hom(s.1, t.1) {
                        if compatible(kind, f, g, *s, *t, u, v) {
                            out.push((u, v));
                        }
                    }
                }
                Ok(out)
            },
            identity: |s: &Triple| (x.identity(s.0), y.identity(s.1)),
            compose: |b: &(Mor, Mor), a: &(Mor, Mor)| (x.compose(b.0, a.0), y.compose(b.1, a.1)),
            obj_label: |s: &Triple| {
                if kind == LimitKind::Strict {
                    format!("({},{})", x.obj_label(s.0), y.obj_label(s.1))
                } else {
                    format!("({},{};{})", x.obj_label(s.0), y.obj_label(s.1), z.mor_label(s.2))
                }
            },
            mor_label: |p: &(Mor, Mor)| format!("({},{})", x.mor_label(p.0), y.mor_label(p.1)),
        },
    )?;
    let apex = table.category().clone();
    let keys = table.object_keys();
    let pr1 = Functor::new(
        apex.clone(),
        x.clone(),
        keys.iter().map(|t| t.0).collect(),
        apex.morphisms().map(|h| table.morphism_key(h).0).collect(),
    )?;
    let pr2 = Functor::new(
        apex.clone(),
        y.clone(),
        keys.iter().map(|t| t.1).collect(),
        apex.morphisms().map(|h| table.morphism_key(h).1).collect(),
    )?;
    let fp = compose_functors(f, &pr1)?;
    let gq = compose_functors(g, &pr2)?;
    let comps = keys.iter().map(|t| t.2).collect();
    let filler = match kind.orientation() {
        Orientation::Forward => NatTrans::new(fp, gq, comps)?,
        Orientation::Reverse => NatTrans::new(gq, fp, comps)?,
    };
    Ok(FiberProduct {
        kind,
        left: f.clone(),
        right: g.clone(),
        table,
        pr1,
        pr2,
        filler,
    })
}

/// The 2-fiber product (iso-comma) of `f: X → Z ← Y: g`.
pub fn fiber_product(f: &Functor, g: &Functor, budget: &Budget) -> Result<FiberProduct> {
    build(LimitKind::Iso, f, g, budget)
}

/// The comma category of `f` and `g` in the given orientation.
pub fn comma(f: &Functor, g: &Functor, orientation: Orientation, budget: &Budget) -> Result<FiberProduct> {
    build(LimitKind::Comma(orientation), f, g, budget)
}

/// The strict pullback: pairs with equal images.
pub fn strict_pullback(f: &Functor, g: &Functor, budget: &Budget) -> Result<FiberProduct> {
    build(LimitKind::Strict, f, g, budget)
}

/// The strict mediator `u(a) = (p(a), q(a), ξ_a)`, so `pr1∘u = p` and
/// `pr2∘u = q` on the nose.
///
/// `xi` runs `f∘p ⇒ g∘q` (or `g∘q ⇒ f∘p` for reverse commas).
pub fn mediate(r: &FiberProduct, p: &Functor, q: &Functor, xi: &NatTrans) -> Result<Functor> {
    let a = p.source();
    if !same_category(a, q.source())
        || !same_category(p.target(), r.left.source())
        || !same_category(q.target(), r.right.source())
    {
        return Err(Error::mismatch("mediator legs do not match the cospan"));
    }
    let fp = compose_functors(&r.left, p)?;
    let gq = compose_functors(&r.right, q)?;
    let (from, to) = match r.kind.orientation() {
        Orientation::Forward => (&fp, &gq),
        Orientation::Reverse => (&gq, &fp),
    };
    if xi.source() != from || xi.target() != to {
        return Err(Error::mismatch("mediator 2-cell does not run between the legs"));
    }
    let mut obj = Vec::with_capacity(a.object_count());
    for x in a.objects() {
        let c = xi.component(x);
        obj.push(r.find(p.obj(x), q.obj(x), c).ok_or_else(|| {
            let why = match r.kind {
                LimitKind::Iso => "is not invertible",
                LimitKind::Strict => "is not an identity",
                LimitKind::Comma(_) => "is not an object of the comma",
            };
            Error::structural(format!(
                "mediator component at {} ({}) {why}",
                a.obj_label(x),
                r.left.target().mor_label(c)
            ))
        })?);
    }
    let mut mor = Vec::with_capacity(a.morphism_count());
    for h in a.morphisms() {
        let (s, t) = (obj[a.source(h).0], obj[a.target(h).0]);
        mor.push(
            r.find_morphism(s, t, p.mor(h), q.mor(h))
                .ok_or_else(|| Error::structural("mediator morphism is not compatible"))?,
        );
    }
    Functor::new(a.clone(), r.apex().clone(), obj, mor)
}

/// The unique `θ: u ⇒ v` with `pr1∘θ = γ1` and `pr2∘θ = γ2`.
///
/// The compatibility `ξ_{v a}∘f(γ1_a) = g(γ2_a)∘ξ_{u a}` is checked first;
/// a failure is reported as a violation naming the object `a`.
pub fn mediate_2cell(
    r: &FiberProduct,
    u: &Functor,
    v: &Functor,
    gamma1: &NatTrans,
    gamma2: &NatTrans,
) -> Result<NatTrans> {
    let a = u.source();
    let report = two_cell_compatibility(r, u, v, gamma1, gamma2)?;
    if !report.is_ok() {
        return Err(Error::violated("mediating 2-cell", report));
    }
    let mut comps = Vec::with_capacity(a.object_count());
    for x in a.objects() {
        comps.push(
            r.find_morphism(u.obj(x), v.obj(x), gamma1.component(x), gamma2.component(x))
                .ok_or_else(|| Error::structural("mediating component not in the apex"))?,
        );
    }
    NatTrans::new(u.clone(), v.clone(), comps)
}

fn two_cell_compatibility(
    r: &FiberProduct,
    u: &Functor,
    v: &Functor,
    gamma1: &NatTrans,
    gamma2: &NatTrans,
) -> Result<Report> {
    let a = u.source();
    let (pu, pv) = (compose_functors(&r.pr1, u)?, compose_functors(&r.pr1, v)?);
    let (qu, qv) = (compose_functors(&r.pr2, u)?, compose_functors(&r.pr2, v)?);
    if gamma1.source() != &pu || gamma1.target() != &pv || gamma2.source() != &qu || gamma2.target() != &qv {
        return Err(Error::mismatch("2-cells do not run between the projected functors"));
    }
    let z = r.left.target();
    let mut report = Report::new();
    for x in a.objects() {
        let (s, t) = (r.triple(u.obj(x)), r.triple(v.obj(x)));
        let ok = r.compatible(s, t, gamma1.component(x), gamma2.component(x));
        report.require(
            ok,
            "2-cell-compatibility",
            || vec![x.0],
            || {
                format!(
                    "components {} and {} do not square with {} and {}",
                    r.left.source().mor_label(gamma1.component(x)),
                    r.right.source().mor_label(gamma2.component(x)),
                    z.mor_label(s.2),
                    z.mor_label(t.2)
                )
            },
        );
    }
    Ok(report)
}

/// Every `θ: u ⇒ v` whose projections are `γ1` and `γ2`, found by scanning
/// all natural transformations `u ⇒ v`.
pub fn mediating_2cells_exhaustive(
    r: &FiberProduct,
    u: &Functor,
    v: &Functor,
    gamma1: &NatTrans,
    gamma2: &NatTrans,
) -> Result<Vec<NatTrans>> {
    let a = u.source();
    let mut out = Vec::new();
    for comps in enumerate_nat_trans(a, r.apex(), u.mor_map(), v.mor_map()) {
        let matches = a.objects().all(|x| {
            let c = comps[x.0];
            r.pr1.mor(c) == gamma1.component(x) && r.pr2.mor(c) == gamma2.component(x)
        });
        if matches {
            out.push(NatTrans::new(u.clone(), v.clone(), comps)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::standard::{discrete, one_object_group, terminal, walking_arrow};
    use crate::fincat::{check_category, check_functor, check_nat_trans, CategoryBuilder};
    use crate::group::FiniteGroup;

    // brute-force count of pairs (u, v) squaring with every pair of comparisons
    fn brute_morphisms(kind: LimitKind, f: &Functor, g: &Functor, objs: &[Triple]) -> usize {
        let (x, y) = (f.source(), g.source());
        let mut count = 0;
        for s in objs {
            for t in objs {
                for u in x.morphisms() {
                    for v in y.morphisms() {
                        let typed =
                            x.source(u) == s.0 && x.target(u) == t.0 && y.source(v) == s.1 && y.target(v) == t.1;
                        if typed && compatible(kind, f, g, *s, *t, u, v) {
                            count += 1;
                        }
                    }
                }
            }
        }
        count
    }

    fn iso_pair() -> Arc<FinCategory> {
        let mut b = CategoryBuilder::new("iso");
        let a = b.object("a");
        let c = b.object("b");
        let i = b.morphism("i", a, c);
        let j = b.morphism("j", c, a);
        b.compose(j, i, Mor(0)).compose(i, j, Mor(1));
        Arc::new(b.build().unwrap())
    }

    #[test]
    fn group_fiber_product_is_the_arrow_groupoid() {
        let bg = one_object_group(&FiniteGroup::symmetric3());
        let id = Functor::identity(&bg);
        let r = fiber_product(&id, &id, &Budget::default()).unwrap();
        assert_eq!(r.apex().object_count(), 6);
        let objs: Vec<Triple> = r.table.object_keys().to_vec();
        let brute = brute_morphisms(LimitKind::Iso, &id, &id, &objs);
        assert_eq!(brute, 216);
        assert_eq!(r.apex().morphism_count(), brute);
        assert!(check_category(r.apex()).is_ok());
        assert!(r.apex().is_groupoid());
        assert!(check_nat_trans(r.filler()).is_ok());
        assert!(r.filler().is_invertible());
        // every morphism of Z is invertible, so the comma coincides
        let c = comma(&id, &id, Orientation::Forward, &Budget::default()).unwrap();
        assert_eq!(c.apex(), r.apex());
    }

    #[test]
    fn discrete_fiber_product_is_the_set_pullback() {
        let x = discrete(3);
        let y = discrete(2);
        let z = discrete(2);
        let f = Functor::new(
            x.clone(),
            z.clone(),
            vec![Obj(0), Obj(1), Obj(1)],
            vec![Mor(0), Mor(1), Mor(1)],
        )
        .unwrap();
        let g = Functor::identity(&z).with_categories(y.clone(), z.clone()).unwrap();
        for r in [
            fiber_product(&f, &g, &Budget::default()).unwrap(),
            comma(&f, &g, Orientation::Forward, &Budget::default()).unwrap(),
            strict_pullback(&f, &g, &Budget::default()).unwrap(),
        ] {
            assert_eq!(**r.apex(), *discrete(3));
        }
    }

    #[test]
    fn point_against_identity_gives_isos_out_of_the_point() {
        let z = iso_pair();
        let pick = Functor::constant(&terminal(), &z, Obj(0));
        let r = fiber_product(&pick, &Functor::identity(&z), &Budget::default()).unwrap();
        let isos_out = z.out_of(Obj(0)).iter().filter(|&&m| z.is_iso(m)).count();
        assert_eq!(r.apex().object_count(), isos_out);
        assert_eq!(isos_out, 2);
    }

    #[test]
    fn arrow_comma_is_the_arrow_category() {
        let a = walking_arrow();
        let id = Functor::identity(&a);
        let c = comma(&id, &id, Orientation::Forward, &Budget::default()).unwrap();
        assert_eq!(c.apex().object_count(), 3);
        let objs = c.table.object_keys().to_vec();
        let brute = brute_morphisms(c.kind(), &id, &id, &objs);
        assert_eq!(brute, 6);
        assert_eq!(c.apex().morphism_count(), brute);
        assert!(check_category(c.apex()).is_ok());
        // the iso-comma is the full subcategory on invertible comparisons
        let iso = fiber_product(&id, &id, &Budget::default()).unwrap();
        assert_eq!(iso.apex().object_count(), 2);
        for s in iso.apex().objects() {
            for t in iso.apex().objects() {
                let (cs, ct) = (
                    c.find(iso.triple(s).0, iso.triple(s).1, iso.triple(s).2).unwrap(),
                    c.find(iso.triple(t).0, iso.triple(t).1, iso.triple(t).2).unwrap(),
                );
                assert_eq!(iso.apex().hom(s, t).len(), c.apex().hom(cs, ct).len());
            }
        }
        let rev = comma(&id, &id, Orientation::Reverse, &Budget::default()).unwrap();
        assert_eq!(rev.apex().object_count(), 3);
        assert!(check_nat_trans(rev.filler()).is_ok());
    }

    #[test]
    fn mediator_of_the_projections_is_the_identity() {
        let bg = one_object_group(&FiniteGroup::cyclic(3));
        let id = Functor::identity(&bg);
        let r = fiber_product(&id, &id, &Budget::default()).unwrap();
        let u = mediate(&r, r.pr1(), r.pr2(), r.filler()).unwrap();
        assert_eq!(u, Functor::identity(r.apex()));
        // from a point, any iso picks its object
        let pt = terminal();
        let p = Functor::constant(&pt, &bg, Obj(0));
        let xi = NatTrans::new(p.clone(), p.clone(), vec![Mor(2)]).unwrap();
        let m = mediate(&r, &p, &p, &xi).unwrap();
        assert_eq!(r.triple(m.obj(Obj(0))), (Obj(0), Obj(0), Mor(2)));
    }

    #[test]
    fn mediator_reproduces_its_legs() {
        let a = walking_arrow();
        let id = Functor::identity(&a);
        let c = comma(&id, &id, Orientation::Forward, &Budget::default()).unwrap();
        let k0 = Functor::constant(&a, &a, Obj(0));
        // ξ: const_0 ⇒ id
        let xi = NatTrans::new(k0.clone(), id.clone(), vec![Mor(0), Mor(1)]).unwrap();
        assert!(check_nat_trans(&xi).is_ok());
        let u = mediate(&c, &k0, &id, &xi).unwrap();
        assert!(check_functor(&u).is_ok());
        assert_eq!(compose_functors(c.pr1(), &u).unwrap(), k0);
        assert_eq!(compose_functors(c.pr2(), &u).unwrap(), id);
        // not invertible, so no mediator into the iso-comma
        let iso = fiber_product(&id, &id, &Budget::default()).unwrap();
        assert!(matches!(mediate(&iso, &k0, &id, &xi), Err(Error::Structural(_))));
    }

    #[test]
    fn mediating_two_cells_are_unique() {
        let g = FiniteGroup::dihedral(4);
        let bg = one_object_group(&g);
        let id = Functor::identity(&bg);
        let r = fiber_product(&id, &id, &Budget::default()).unwrap();
        let u = Functor::identity(r.apex());
        let p = r.pr1().clone();
        let q = r.pr2().clone();
        // identities
        let one1 = NatTrans::identity(&p);
        let one2 = NatTrans::identity(&q);
        let theta = mediate_2cell(&r, &u, &u, &one1, &one2).unwrap();
        assert!(theta.is_identity());
        assert_eq!(mediating_2cells_exhaustive(&r, &u, &u, &one1, &one2).unwrap().len(), 1);
        // a central element acting on both sides
        let zc = *g.center().iter().find(|&&c| c != g.identity()).unwrap();
        let n = r.apex().object_count();
        let c1 = NatTrans::new(p.clone(), p.clone(), vec![Mor(zc); n]).unwrap();
        let c2 = NatTrans::new(q.clone(), q.clone(), vec![Mor(zc); n]).unwrap();
        assert!(check_nat_trans(&c1).is_ok());
        let theta = mediate_2cell(&r, &u, &u, &c1, &c2).unwrap();
        assert!(check_nat_trans(&theta).is_ok());
        let all = mediating_2cells_exhaustive(&r, &u, &u, &c1, &c2).unwrap();
        assert_eq!(all, vec![theta]);
        // mismatched sides violate compatibility at some object
        let bad = NatTrans::identity(&q);
        let err = mediate_2cell(&r, &u, &u, &c1, &bad).unwrap_err();
        match err {
            Error::Violated { report, .. } => assert!(report.has_law("2-cell-compatibility")),
            other => panic!("{other}"),
        }
        assert!(mediating_2cells_exhaustive(&r, &u, &u, &c1, &bad).unwrap().is_empty());
    }

    #[test]
    fn renaming_the_cospan_renames_the_apex() {
        // swapping the two objects of X permutes the apex objects
        let x = discrete(2);
        let z = walking_arrow();
        let f = Functor::new(x.clone(), z.clone(), vec![Obj(0), Obj(1)], vec![Mor(0), Mor(2)]).unwrap();
        let swap = Functor::new(x.clone(), x.clone(), vec![Obj(1), Obj(0)], vec![Mor(1), Mor(0)]).unwrap();
        let f2 = compose_functors(&f, &swap).unwrap();
        let id = Functor::identity(&z);
        let a = comma(&f, &id, Orientation::Forward, &Budget::default()).unwrap();
        let b = comma(&f2, &id, Orientation::Forward, &Budget::default()).unwrap();
        assert_eq!(a.apex().object_count(), b.apex().object_count());
        for o in a.apex().objects() {
            let (p, y, xi) = a.triple(o);
            let o2 = b.find(swap.obj(p), y, xi).unwrap();
            assert_eq!(a.apex().obj_label(o).len(), b.apex().obj_label(o2).len());
            for o3 in a.apex().objects() {
                let (p3, y3, xi3) = a.triple(o3);
                let o4 = b.find(swap.obj(p3), y3, xi3).unwrap();
                assert_eq!(a.apex().hom(o, o3).len(), b.apex().hom(o2, o4).len());
            }
        }
    }
}
