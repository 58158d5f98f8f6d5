use std::sync::Arc;

use super::module::{check_module_nat_trans, ModuleNatTransData};
use super::span::{build_span, build_span_in, SpanCell};
use crate::error::{Error, Result};
use crate::fincat::{check_nat_trans, compose_functors, Budget, FinCategory, Functor, Mor, NatTrans, Obj};
use crate::limits::{comma, mediate, strict_pullback, FiberProduct, LimitKind, Orientation};
use crate::monoidal::{
    check_mon_functor, check_mon_nattrans, check_monoidal, compose_mon_functors, MonFunctor, MonNatTrans,
    MonoidalStructure,
};
use crate::report::Report;

/// The 2-span of a module transformation `φ: F ⇒ G`: the strict pullback of
/// `A_F → K ← A_G` over the comma `K` of `F_*` and `G^*` (or, reversed, of
/// `G_*` and `F^*`), with its legs to `A_F` and `A_G`.
#[derive(Clone, Debug)]
pub struct TwoSpan {
    orientation: Orientation,
    nat: ModuleNatTransData,
    phi: Mor,
    top: SpanCell,
    bottom: SpanCell,
    comma: FiberProduct,
    from_top: Functor,
    from_bottom: Functor,
    fiber: FiberProduct,
    apex: Arc<MonoidalStructure>,
    leg_top: MonFunctor,
    leg_bottom: MonFunctor,
}

/// `(P, Q, ξ^F, ξ^G)` with `ξ^F: F∘P → Q∘F` and `ξ^G: G∘P → Q∘G` as
/// morphisms of `Fun(M, N)`.
pub type Quadruple = (Obj, Obj, Mor, Mor);

/// Which of the three defining conditions a quadruple must meet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadrupleConditions {
    /// `ξ^F` is invertible.
    pub top_invertible: bool,
    /// `ξ^G` is invertible.
    pub bottom_invertible: bool,
    /// `ξ^G∘(φP) = (Qφ)∘ξ^F`.
    pub compatible: bool,
}

impl QuadrupleConditions {
    pub const ALL: QuadrupleConditions = QuadrupleConditions {
        top_invertible: true,
        bottom_invertible: true,
        compatible: true,
    };
}

impl TwoSpan {
    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn transformation(&self) -> &ModuleNatTransData {
        &self.nat
    }

    /// `A_F`.
    pub fn top(&self) -> &SpanCell {
        &self.top
    }

    /// `A_G`.
    pub fn bottom(&self) -> &SpanCell {
        &self.bottom
    }

    pub fn comma(&self) -> &FiberProduct {
        &self.comma
    }

    /// `(φ^*)_*: A_F → K` and `(φ_*)^*: A_G → K`.
    pub fn comma_legs(&self) -> (&Functor, &Functor) {
        (&self.from_top, &self.from_bottom)
    }

    pub fn fiber(&self) -> &FiberProduct {
        &self.fiber
    }

    pub fn apex(&self) -> &Arc<MonoidalStructure> {
        &self.apex
    }

    /// `p_f: A_φ → A_F`.
    pub fn leg_top(&self) -> &MonFunctor {
        &self.leg_top
    }

    /// `p_g: A_φ → A_G`.
    pub fn leg_bottom(&self) -> &MonFunctor {
        &self.leg_bottom
    }

    pub fn leg_left(&self) -> Result<MonFunctor> {
        compose_mon_functors(self.top.leg_left(), &self.leg_top)
    }

    pub fn leg_right(&self) -> Result<MonFunctor> {
        compose_mon_functors(self.top.leg_right(), &self.leg_top)
    }

    /// `ϖ_φ: F_*∘p_x ⇒ G^*∘p_y`, or `F^*∘p_y ⇒ G_*∘p_x` when reversed.
    pub fn filler(&self) -> Result<NatTrans> {
        let px = self.leg_left()?.functor().clone();
        let py = self.leg_right()?.functor().clone();
        let comps = self
            .apex
            .base()
            .objects()
            .map(|a| self.comma.triple(self.from_top.obj(self.fiber.pr1().obj(a))).2)
            .collect();
        match self.orientation {
            Orientation::Forward => NatTrans::new(
                compose_functors(self.top.push(), &px)?,
                compose_functors(self.bottom.pull(), &py)?,
                comps,
            ),
            Orientation::Reverse => NatTrans::new(
                compose_functors(self.top.pull(), &py)?,
                compose_functors(self.bottom.push(), &px)?,
                comps,
            ),
        }
    }

    /// The two vertical 2-cells `p^F_x∘p_f ⇒ p^G_x∘p_g` and
    /// `p^F_y∘p_f ⇒ p^G_y∘p_g`; both are identities in the strict model.
    pub fn vertical_fillers(&self) -> Result<(MonNatTrans, MonNatTrans)> {
        let mut out = Vec::new();
        for (f, g) in [
            (self.top.leg_left(), self.bottom.leg_left()),
            (self.top.leg_right(), self.bottom.leg_right()),
        ] {
            let u = compose_mon_functors(f, &self.leg_top)?;
            let v = compose_mon_functors(g, &self.leg_bottom)?;
            if u != v {
                return Err(Error::structural("vertical legs of the 2-span do not agree"));
            }
            out.push(MonNatTrans::identity(&u));
        }
        let y = out.pop().expect("two cells");
        let x = out.pop().expect("two cells");
        Ok((x, y))
    }

    /// `Φ^φ: C → A_φ` factoring `Φ^F` and `Φ^G`.
    pub fn lift(&self) -> Result<MonFunctor> {
        let ft = self.top.lift(self.nat.source())?;
        let fb = self.bottom.lift(self.nat.target())?;
        let cat = ft.source().base().clone();
        let k = self.comma.apex();
        let mut obj = Vec::with_capacity(cat.object_count());
        for c in cat.objects() {
            let (x, y) = (ft.obj(c), fb.obj(c));
            let id = k.identity(self.from_top.obj(x));
            obj.push(
                self.fiber
                    .find(x, y, id)
                    .ok_or_else(|| Error::structural(format!("lifts disagree in the comma at object {}", c.0)))?,
            );
        }
        let pair = |s: Obj, t: Obj, u: Mor, v: Mor| {
            self.fiber
                .find_morphism(s, t, u, v)
                .ok_or_else(|| Error::structural("lifted morphisms do not pair up"))
        };
        let mut mor = Vec::with_capacity(cat.morphism_count());
        for u in cat.morphisms() {
            mor.push(pair(obj[cat.source(u).0], obj[cat.target(u).0], ft.mor(u), fb.mor(u))?);
        }
        let s = ft.source();
        let mut mult = Vec::new();
        for x in cat.objects() {
            for y in cat.objects() {
                let from = self.apex.tensor(obj[x.0], obj[y.0]);
                mult.push(pair(from, obj[s.tensor(x, y).0], ft.gamma(x, y), fb.gamma(x, y))?);
            }
        }
        let unit = pair(self.apex.unit(), obj[s.unit().0], ft.eta(), fb.eta())?;
        let functor = Functor::new(cat, self.apex.base().clone(), obj, mor)?;
        MonFunctor::new(s.clone(), self.apex.clone(), functor, mult, unit)
    }

    /// The apex objects as quadruples.
    pub fn quadruples(&self) -> Vec<Quadruple> {
        let mut out: Vec<Quadruple> = self
            .apex
            .base()
            .objects()
            .map(|a| {
                let (x, y, _) = self.fiber.triple(a);
                let (p, q, xf) = self.top.fiber().triple(x);
                let (_, _, xg) = self.bottom.fiber().triple(y);
                (p, q, xf, xg)
            })
            .collect();
        out.sort();
        out
    }

    fn whisker_q(&self, q: Obj) -> Mor {
        whisker_q(&self.top, &self.bottom, self.phi, q)
    }

    fn whisker_p(&self, p: Obj) -> Mor {
        whisker_p(&self.top, &self.bottom, self.phi, p)
    }

    /// All quadruples over `End(M) × End(N)` meeting the enabled conditions.
    pub fn quadruple_candidates(&self, conditions: QuadrupleConditions) -> Vec<Quadruple> {
        let hom = self.top.hom();
        let h = hom.category();
        let (em, en) = (self.top.source().end().category(), self.top.target().end().category());
        let mut out = Vec::new();
        for p in em.objects() {
            for q in en.objects() {
                let f_side = h.hom(self.top.push().obj(p), self.top.pull().obj(q));
                let g_side = h.hom(self.bottom.push().obj(p), self.bottom.pull().obj(q));
                for &xf in f_side {
                    if conditions.top_invertible && !h.is_iso(xf) {
                        continue;
                    }
                    for &xg in g_side {
                        if conditions.bottom_invertible && !h.is_iso(xg) {
                            continue;
                        }
                        if conditions.compatible && h.compose(xg, self.whisker_p(p)) != h.compose(self.whisker_q(q), xf)
                        {
                            continue;
                        }
                        out.push((p, q, xf, xg));
                    }
                }
            }
        }
        out.sort();
        out
    }
}

/// Builds the 2-span of `φ`. The module condition on `φ` is checked first;
/// a failure names the acting object where it breaks.
pub fn build_2span(nat: &ModuleNatTransData, orientation: Orientation, budget: &Budget) -> Result<TwoSpan> {
    let report = check_module_nat_trans(nat)?;
    if let Some(v) = report.first() {
        let at = v.witness.first().copied().unwrap_or(0);
        return Err(Error::structural(format!(
            "not a module transformation: {} fails at acting object {at} ({})",
            v.law, v.detail
        )));
    }
    let (f, g) = (nat.source(), nat.target());
    let top = build_span(f.source(), f.target(), f.functor(), budget)?;
    let bottom = build_span_in(g.source(), g.target(), g.functor(), top.hom().clone(), budget)?;
    let hom = top.hom();
    let phi_obj = (hom.object_of(f.functor()), hom.object_of(g.functor()));
    let phi = match phi_obj {
        (Some(s), Some(t)) => hom.find_morphism(s, t, nat.components()),
        _ => None,
    }
    .ok_or_else(|| Error::structural("transformation is not a morphism of Fun(M, N)"))?;

    let k = match orientation {
        Orientation::Forward => comma(top.push(), bottom.pull(), orientation, budget)?,
        Orientation::Reverse => comma(bottom.push(), top.pull(), orientation, budget)?,
    };
    let from_top = into_comma(&top, &bottom, phi, &k, orientation, true)?;
    let from_bottom = into_comma(&top, &bottom, phi, &k, orientation, false)?;
    let fiber = strict_pullback(&from_top, &from_bottom, budget)?;
    let apex = Arc::new(strict_pullback_monoidal(&fiber, top.apex(), bottom.apex(), budget)?);
    let leg_top = MonFunctor::strict(apex.clone(), top.apex().clone(), fiber.pr1().clone())?;
    let leg_bottom = MonFunctor::strict(apex.clone(), bottom.apex().clone(), fiber.pr2().clone())?;
    Ok(TwoSpan {
        orientation,
        nat: nat.clone(),
        phi,
        top,
        bottom,
        comma: k,
        from_top,
        from_bottom,
        fiber,
        apex,
        leg_top,
        leg_bottom,
    })
}

/// `Qφ: Q∘F → Q∘G` in `Fun(M, N)`.
fn whisker_q(top: &SpanCell, bottom: &SpanCell, phi: Mor, q: Obj) -> Mor {
    let hom = top.hom();
    let en = top.target().end().functors();
    let comps: Vec<Mor> = hom.components(phi).iter().map(|&h| en.apply_mor(q, h)).collect();
    hom.find_morphism(top.pull().obj(q), bottom.pull().obj(q), &comps)
        .expect("whiskered transformation is natural")
}

/// `φP: F∘P → G∘P` in `Fun(M, N)`.
fn whisker_p(top: &SpanCell, bottom: &SpanCell, phi: Mor, p: Obj) -> Mor {
    let hom = top.hom();
    let em = top.source().end().functors();
    let comps_phi = hom.components(phi);
    let comps: Vec<Mor> = top
        .source()
        .carrier()
        .objects()
        .map(|x| comps_phi[em.apply_obj(p, x).0])
        .collect();
    hom.find_morphism(top.push().obj(p), bottom.push().obj(p), &comps)
        .expect("whiskered transformation is natural")
}

// (φ^*)_*: (P,Q,ξ^F) ↦ (P,Q,(Qφ)∘ξ^F) and (φ_*)^*: (P,Q,ξ^G) ↦ (P,Q,ξ^G∘(φP));
// reversed, (φP)∘(ξ^F)^{-1} and (ξ^G)^{-1}∘(Qφ).
fn into_comma(
    top: &SpanCell,
    bottom: &SpanCell,
    phi: Mor,
    k: &FiberProduct,
    orientation: Orientation,
    from_top: bool,
) -> Result<Functor> {
    let span = if from_top { top } else { bottom };
    let h = span.hom().category();
    let fiber = span.fiber();
    let a = fiber.apex();
    let mut comps = Vec::with_capacity(a.object_count());
    for x in a.objects() {
        let (p, q, xi) = fiber.triple(x);
        let (wp, wq) = (whisker_p(top, bottom, phi, p), whisker_q(top, bottom, phi, q));
        let inv = || {
            h.inverse(xi)
                .ok_or_else(|| Error::structural("apex comparison is not invertible"))
        };
        comps.push(match (orientation, from_top) {
            (Orientation::Forward, true) => h.compose(wq, xi),
            (Orientation::Forward, false) => h.compose(xi, wp),
            (Orientation::Reverse, true) => h.compose(wp, inv()?),
            (Orientation::Reverse, false) => h.compose(inv()?, wq),
        });
    }
    let (px, py) = (fiber.pr1(), fiber.pr2());
    let (lp, rq) = (compose_functors(k.left(), px)?, compose_functors(k.right(), py)?);
    let xi = match orientation {
        Orientation::Forward => NatTrans::new(lp, rq, comps)?,
        Orientation::Reverse => NatTrans::new(rq, lp, comps)?,
    };
    mediate(k, px, py, &xi)
}

/// The monoidal structure on a strict pullback of `X → K ← Y` restricted
/// from `X × Y`; fails if the pairs are not closed under the tensor.
pub(crate) fn strict_pullback_monoidal(
    r: &FiberProduct,
    x: &MonoidalStructure,
    y: &MonoidalStructure,
    budget: &Budget,
) -> Result<MonoidalStructure> {
    debug_assert_eq!(r.kind(), LimitKind::Strict);
    let a: Arc<FinCategory> = r.apex().clone();
    let k = r.left().target().clone();
    let n = a.object_count();
    let missing = |what: &str| Error::structural(format!("{}: {what} leaves the pullback", a.name()));
    let find = |u: Obj, v: Obj| r.find(u, v, k.identity(r.left().obj(u)));
    let mut tensor_obj = Vec::with_capacity(n * n);
    for s in a.objects() {
        let (x0, y0, _) = r.triple(s);
        for t in a.objects() {
            let (x1, y1, _) = r.triple(t);
            tensor_obj.push(find(x.tensor(x0, x1), y.tensor(y0, y1)).ok_or_else(|| missing("tensor"))?);
        }
    }
    budget.check_morphisms(&format!("{} tensor", a.name()), (a.morphism_count() as u128).pow(2))?;
    let mut tensor_mor = Vec::with_capacity(a.morphism_count().pow(2));
    for f in a.morphisms() {
        let (u0, v0) = r.pair(f);
        for g in a.morphisms() {
            let (u1, v1) = r.pair(g);
            let s = tensor_obj[a.source(f).0 * n + a.source(g).0];
            let t = tensor_obj[a.target(f).0 * n + a.target(g).0];
            tensor_mor.push(
                r.find_morphism(s, t, x.tensor_mor(u0, u1), y.tensor_mor(v0, v1))
                    .ok_or_else(|| missing("tensor of morphisms"))?,
            );
        }
    }
    let unit = find(x.unit(), y.unit()).ok_or_else(|| missing("unit"))?;
    let t = |p: Obj, q: Obj| tensor_obj[p.0 * n + q.0];
    let mut associator = Vec::with_capacity(n * n * n);
    for p in a.objects() {
        for q in a.objects() {
            for s in a.objects() {
                let (tp, tq, ts) = (r.triple(p), r.triple(q), r.triple(s));
                associator.push(
                    r.find_morphism(
                        t(t(p, q), s),
                        t(p, t(q, s)),
                        x.alpha(tp.0, tq.0, ts.0),
                        y.alpha(tp.1, tq.1, ts.1),
                    )
                    .ok_or_else(|| missing("associator"))?,
                );
            }
        }
    }
    let mut left_unitor = Vec::with_capacity(n);
    let mut right_unitor = Vec::with_capacity(n);
    for p in a.objects() {
        let (u, v, _) = r.triple(p);
        left_unitor.push(
            r.find_morphism(t(unit, p), p, x.lambda(u), y.lambda(v))
                .ok_or_else(|| missing("left unitor"))?,
        );
        right_unitor.push(
            r.find_morphism(t(p, unit), p, x.rho(u), y.rho(v))
                .ok_or_else(|| missing("right unitor"))?,
        );
    }
    MonoidalStructure::new(a, tensor_obj, tensor_mor, unit, associator, left_unitor, right_unitor)
}

/// Apex laws, the four legs, naturality of `ϖ_φ`, the vertical fillers,
/// and the factorization of `Φ^F`, `Φ^G` through `Φ^φ`.
pub fn check_two_span(two: &TwoSpan) -> Result<Report> {
    let mut report = Report::new();
    report.absorb("apex", check_monoidal(&two.apex));
    report.absorb("leg-top", check_mon_functor(&two.leg_top));
    report.absorb("leg-bottom", check_mon_functor(&two.leg_bottom));
    report.absorb("leg-left", check_mon_functor(&two.leg_left()?));
    report.absorb("leg-right", check_mon_functor(&two.leg_right()?));
    report.absorb("filler", check_nat_trans(&two.filler()?));
    match two.vertical_fillers() {
        Ok((x, y)) => {
            report.absorb("vertical-x", check_mon_nattrans(&x));
            report.absorb("vertical-y", check_mon_nattrans(&y));
        }
        Err(e) => report.push("vertical", Vec::new(), || e.to_string()),
    }
    let lift = two.lift()?;
    report.absorb("lift", check_mon_functor(&lift));
    let top = two.top.lift(two.nat.source())?;
    let bottom = two.bottom.lift(two.nat.target())?;
    report.require(
        compose_mon_functors(&two.leg_top, &lift)? == top,
        "factor-top",
        Vec::new,
        || "p_f∘Φ^φ differs from Φ^F".to_string(),
    );
    report.require(
        compose_mon_functors(&two.leg_bottom, &lift)? == bottom,
        "factor-bottom",
        Vec::new,
        || "p_g∘Φ^φ differs from Φ^G".to_string(),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::standard::{chain, one_object_group, terminal};
    use crate::group::FiniteGroup;
    use crate::spans::end::end_monoidal;
    use crate::spans::module::{ModuleData, ModuleFunctorData};
    use crate::spans::span::build_module_span;

    fn b() -> Budget {
        Budget::default()
    }

    fn trivial_module(c: &Arc<FinCategory>) -> ModuleData {
        ModuleData::trivial(Arc::new(end_monoidal(c, &b()).unwrap()))
    }

    fn over_trivial(x: &ModuleData, f: Functor) -> ModuleFunctorData {
        let m = x.carrier();
        let xi = vec![m.objects().map(|y| m.identity(f.obj(y))).collect()];
        ModuleFunctorData::new(x.clone(), x.clone(), f, xi).unwrap()
    }

    // [1] over the trivial base, φ: const₀ ⇒ id
    fn arrow_setup() -> ModuleNatTransData {
        let m = chain(1);
        let x = trivial_module(&m);
        let konst = Functor::constant(&m, &m, Obj(0));
        let f = over_trivial(&x, konst);
        let g = over_trivial(&x, Functor::identity(&m));
        let up = m.hom(Obj(0), Obj(1))[0];
        ModuleNatTransData::new(f, g, vec![m.identity(Obj(0)), up]).unwrap()
    }

    #[test]
    fn identity_transformation_gives_the_diagonal() {
        let m = chain(1);
        let x = trivial_module(&m);
        let f = over_trivial(&x, Functor::identity(&m));
        let two = build_2span(&ModuleNatTransData::identity(&f), Orientation::Forward, &b()).unwrap();
        let af = build_module_span(&f, &b()).unwrap();
        assert_eq!(two.apex().base().object_count(), af.apex().base().object_count());
        for (p, q, xf, xg) in two.quadruples() {
            assert_eq!(xf, xg);
            assert!(af.fiber().find(p, q, xf).is_some());
        }
        assert!(check_two_span(&two).unwrap().is_ok());
        assert_eq!(**two.leg_top().functor().source(), **two.apex().base());
    }

    #[test]
    fn arrow_transformation_matches_enumeration() {
        let nat = arrow_setup();
        let two = build_2span(&nat, Orientation::Forward, &b()).unwrap();
        let rep = check_two_span(&two).unwrap();
        assert!(rep.is_ok(), "{rep}");
        assert_eq!(two.quadruples(), two.quadruple_candidates(QuadrupleConditions::ALL));
        let reversed = build_2span(&nat, Orientation::Reverse, &b()).unwrap();
        assert!(check_two_span(&reversed).unwrap().is_ok());
        assert_eq!(two.quadruples(), reversed.quadruples());
    }

    #[test]
    fn invertibility_conditions_are_load_bearing() {
        let two = build_2span(&arrow_setup(), Orientation::Forward, &b()).unwrap();
        let all = two.quadruple_candidates(QuadrupleConditions::ALL);
        for conds in [
            QuadrupleConditions {
                top_invertible: false,
                ..QuadrupleConditions::ALL
            },
            QuadrupleConditions {
                bottom_invertible: false,
                ..QuadrupleConditions::ALL
            },
        ] {
            assert!(two.quadruple_candidates(conds).len() > all.len());
        }
    }

    #[test]
    fn compatibility_is_load_bearing() {
        let m = one_object_group(&FiniteGroup::cyclic(2));
        let x = trivial_module(&m);
        let f = over_trivial(&x, Functor::identity(&m));
        let two = build_2span(&ModuleNatTransData::identity(&f), Orientation::Forward, &b()).unwrap();
        let all = two.quadruple_candidates(QuadrupleConditions::ALL);
        assert_eq!(all, two.quadruples());
        let loose = two.quadruple_candidates(QuadrupleConditions {
            compatible: false,
            ..QuadrupleConditions::ALL
        });
        assert!(loose.len() > all.len());
    }

    #[test]
    fn terminal_gives_terminal() {
        let x = trivial_module(&terminal());
        let f = over_trivial(&x, Functor::identity(&terminal()));
        let two = build_2span(&ModuleNatTransData::identity(&f), Orientation::Forward, &b()).unwrap();
        assert_eq!(**two.apex().base(), *terminal());
    }

    #[test]
    fn failing_condition_names_the_acting_object() {
        let m = one_object_group(&FiniteGroup::cyclic(2));
        let e = Arc::new(end_monoidal(&m, &b()).unwrap());
        let z2 = Arc::new(crate::monoidal::discrete_group_category(&FiniteGroup::cyclic(2)));
        let id = e.identity_functor();
        let x = ModuleData::from_endofunctors(z2, e, vec![id, id]).unwrap();
        let all = crate::spans::module::module_structures_on(&x, &x, &Functor::identity(&m), &b()).unwrap();
        let nat = ModuleNatTransData::new(all[0].clone(), all[1].clone(), vec![Mor(0)]).unwrap();
        let err = build_2span(&nat, Orientation::Forward, &b()).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("acting object 1"), "{err}");
    }
}
