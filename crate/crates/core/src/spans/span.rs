use std::sync::Arc;

use super::module::{check_module, same_base, ModuleData, ModuleFunctorData};
use crate::error::{Error, Result};
use crate::fincat::{
    compose_functors, composition_functor, functor_category, product_category, pullback, pushforward, Budget, Functor,
    FunctorCategory, Mor, NatTrans, Obj,
};
use crate::limits::{fiber_product, mediate, FiberProduct};
use crate::monoidal::{check_mon_functor, check_monoidal, MonFunctor, MonoidalStructure};
use crate::report::Report;

/// The span `End(M) ← A_F → End(N)` of a functor between module carriers.
///
/// `A_F` is the 2-fiber product of `F_*` and `F^*` over `Fun(M, N)`; its
/// objects are triples `(P, Q, ξ: F∘P ≅ Q∘F)`.
#[derive(Clone, Debug)]
pub struct SpanCell {
    source: ModuleData,
    target: ModuleData,
    functor: Functor,
    hom: FunctorCategory,
    push: Functor,
    pull: Functor,
    fiber: FiberProduct,
    apex: Arc<MonoidalStructure>,
    left: MonFunctor,
    right: MonFunctor,
}

impl SpanCell {
    pub fn source(&self) -> &ModuleData {
        &self.source
    }

    pub fn target(&self) -> &ModuleData {
        &self.target
    }

    pub fn functor(&self) -> &Functor {
        &self.functor
    }

    /// `Fun(M, N)`.
    pub fn hom(&self) -> &FunctorCategory {
        &self.hom
    }

    /// `F_*: End(M) → Fun(M, N)`.
    pub fn push(&self) -> &Functor {
        &self.push
    }

    /// `F^*: End(N) → Fun(M, N)`.
    pub fn pull(&self) -> &Functor {
        &self.pull
    }

    pub fn fiber(&self) -> &FiberProduct {
        &self.fiber
    }

    pub fn apex(&self) -> &Arc<MonoidalStructure> {
        &self.apex
    }

    pub fn leg_left(&self) -> &MonFunctor {
        &self.left
    }

    pub fn leg_right(&self) -> &MonFunctor {
        &self.right
    }

    /// `ϖ: F_*∘p_x ⇒ F^*∘p_y`.
    pub fn filler(&self) -> &NatTrans {
        self.fiber.filler()
    }

    /// The object of `Fun(M, N)` underlying `ξ_c`.
    fn xi_morphism(&self, mf: &ModuleFunctorData, c: Obj) -> Result<Mor> {
        let from = self.push.obj(self.source.act(c));
        let to = self.pull.obj(self.target.act(c));
        self.hom
            .find_morphism(from, to, mf.xi(c))
            .ok_or_else(|| Error::structural(format!("ξ at object {} is not natural", c.0)))
    }

    /// `Φ^F: C → A_F`, `c ↦ (P_c, Q_c, ξ_c)`, with `γ` and `η` the pairs
    /// of the two actions.
    pub fn lift(&self, mf: &ModuleFunctorData) -> Result<MonFunctor> {
        if mf.functor() != &self.functor {
            return Err(Error::mismatch("module functor does not match the span"));
        }
        let c = self.source.acting().clone();
        let cat = c.base();
        let mut obj = Vec::with_capacity(cat.object_count());
        for x in cat.objects() {
            let xi = self.xi_morphism(mf, x)?;
            obj.push(
                self.fiber
                    .find(self.source.act(x), self.target.act(x), xi)
                    .ok_or_else(|| Error::structural(format!("ξ at object {} is not invertible", x.0)))?,
            );
        }
        let (sa, ta) = (self.source.action(), self.target.action());
        let pair = |from: Obj, to: Obj, u: Mor, v: Mor, what: &str| {
            self.fiber
                .find_morphism(from, to, u, v)
                .ok_or_else(|| Error::structural(format!("{what} does not lift to the apex")))
        };
        let mut mor = Vec::with_capacity(cat.morphism_count());
        for u in cat.morphisms() {
            let (s, t) = (obj[cat.source(u).0], obj[cat.target(u).0]);
            mor.push(pair(
                s,
                t,
                sa.mor(u),
                ta.mor(u),
                &format!("action of morphism {}", u.0),
            )?);
        }
        let mut mult = Vec::with_capacity(cat.object_count().pow(2));
        for x in cat.objects() {
            for y in cat.objects() {
                let s = self.apex.tensor(obj[x.0], obj[y.0]);
                let t = obj[c.tensor(x, y).0];
                mult.push(pair(s, t, sa.gamma(x, y), ta.gamma(x, y), "γ")?);
            }
        }
        let unit = pair(self.apex.unit(), obj[c.unit().0], sa.eta(), ta.eta(), "η")?;
        let functor = Functor::new(cat.clone(), self.apex.base().clone(), obj, mor)?;
        MonFunctor::new(c, self.apex.clone(), functor, mult, unit)
    }

    /// The tensor of `A_F` obtained from the universal property: the
    /// mediator of `(P₀,P₁) ↦ P₀P₁`, `(Q₀,Q₁) ↦ Q₀Q₁` and the pasted 2-cell
    /// `(Q₀ξ₁)∘(ξ₀P₁)`, computed through the composition functors.
    pub fn mediator_tensor(&self, budget: &Budget) -> Result<Functor> {
        let a = self.apex.base();
        let (em, en) = (self.source.end(), self.target.end());
        let aa = product_category(a, a, budget)?;
        let (mm, tm) = em.monoidal().tensor_functor(budget)?;
        let (nn, tn) = en.monoidal().tensor_functor(budget)?;
        let (px, py) = (self.fiber.pr1(), self.fiber.pr2());
        let p = compose_functors(&tm, &aa.map(px, px, &mm)?)?;
        let q = compose_functors(&tn, &aa.map(py, py, &nn)?)?;
        // (X, P) ↦ X∘P and (Q, X) ↦ Q∘X
        let right_prod = product_category(self.hom.category(), em.category(), budget)?;
        let left_prod = product_category(en.category(), self.hom.category(), budget)?;
        let after = composition_functor(&self.hom, em.functors(), &self.hom, &right_prod)?;
        let before = composition_functor(en.functors(), &self.hom, &self.hom, &left_prod)?;
        let h = self.hom.category();
        let mut comps = Vec::with_capacity(aa.category().object_count());
        for x in aa.category().objects() {
            let (a0, a1) = aa.split(x);
            let (p1, q0) = (px.obj(a1), py.obj(a0));
            let (xi0, xi1) = (self.fiber.triple(a0).2, self.fiber.triple(a1).2);
            let first = after.mor(right_prod.pair_mor(xi0, em.category().identity(p1)));
            let second = before.mor(left_prod.pair_mor(en.category().identity(q0), xi1));
            comps.push(h.compose(second, first));
        }
        let xi = NatTrans::new(
            compose_functors(&self.push, &p)?,
            compose_functors(&self.pull, &q)?,
            comps,
        )?;
        mediate(&self.fiber, &p, &q, &xi)
    }
}

/// Builds `A_F` for a functor between module carriers over the same base.
pub fn build_span(source: &ModuleData, target: &ModuleData, functor: &Functor, budget: &Budget) -> Result<SpanCell> {
    same_base(source, target)?;
    if **functor.source() != **source.carrier() || **functor.target() != **target.carrier() {
        return Err(Error::mismatch("functor does not run between the module carriers"));
    }
    for (which, m) in [("source", source), ("target", target)] {
        let report = check_module(m);
        if !report.is_ok() {
            return Err(Error::violated(format!("{which} module"), report));
        }
    }
    let hom = functor_category(source.carrier(), target.carrier(), budget)?;
    build_span_in(source, target, functor, hom, budget)
}

/// Builds the span of a module functor; the lift `Φ^F` is available
/// through [`SpanCell::lift`].
pub fn build_module_span(mf: &ModuleFunctorData, budget: &Budget) -> Result<SpanCell> {
    build_span(mf.source(), mf.target(), mf.functor(), budget)
}

pub(crate) fn build_span_in(
    source: &ModuleData,
    target: &ModuleData,
    functor: &Functor,
    hom: FunctorCategory,
    budget: &Budget,
) -> Result<SpanCell> {
    let (em, en) = (source.end(), target.end());
    let push = pushforward(functor, em.functors(), &hom)?;
    let pull = pullback(functor, en.functors(), &hom)?;
    let fiber = fiber_product(&push, &pull, budget)?;
    let apex = Arc::new(explicit_monoidal(&fiber, &hom, source, target, budget)?);
    let left = MonFunctor::strict(apex.clone(), em.monoidal().clone(), fiber.pr1().clone())?;
    let right = MonFunctor::strict(apex.clone(), en.monoidal().clone(), fiber.pr2().clone())?;
    Ok(SpanCell {
        source: source.clone(),
        target: target.clone(),
        functor: functor.clone(),
        hom,
        push,
        pull,
        fiber,
        apex,
        left,
        right,
    })
}

// (P₀,Q₀,ξ₀)⊗(P₁,Q₁,ξ₁) = (P₀P₁, Q₀Q₁, (Q₀ξ₁)∘(ξ₀P₁)); morphisms, unit,
// associator and unitors are the pairs from End(M) and End(N).
fn explicit_monoidal(
    fiber: &FiberProduct,
    hom: &FunctorCategory,
    source: &ModuleData,
    target: &ModuleData,
    budget: &Budget,
) -> Result<MonoidalStructure> {
    let a = fiber.apex().clone();
    let (em, en) = (source.end(), target.end());
    let (sm, sn) = (em.monoidal(), en.monoidal());
    let (m, n) = (source.carrier(), target.carrier());
    let k = a.object_count();
    let missing = |what: &str| Error::structural(format!("{}: {what} not in the apex", a.name()));
    let mut tensor_obj = Vec::with_capacity(k * k);
    for a0 in a.objects() {
        let (p0, q0, x0) = fiber.triple(a0);
        let x0c = hom.components(x0);
        for a1 in a.objects() {
            let (p1, q1, x1) = fiber.triple(a1);
            let x1c = hom.components(x1);
            let comps: Vec<Mor> = m
                .objects()
                .map(|x| {
                    let inner = x0c[em.functors().apply_obj(p1, x).0];
                    n.compose(en.functors().apply_mor(q0, x1c[x.0]), inner)
                })
                .collect();
            let (p, q) = (sm.tensor(p0, p1), sn.tensor(q0, q1));
            let from = fiber.left().obj(p);
            let to = fiber.right().obj(q);
            let xi = hom.find_morphism(from, to, &comps).ok_or_else(|| missing("pasted ξ"))?;
            tensor_obj.push(fiber.find(p, q, xi).ok_or_else(|| missing("tensor"))?);
        }
    }
    budget.check_morphisms(&format!("{} tensor", a.name()), (a.morphism_count() as u128).pow(2))?;
    let mut tensor_mor = Vec::with_capacity(a.morphism_count().pow(2));
    for f in a.morphisms() {
        let (u0, v0) = fiber.pair(f);
        for g in a.morphisms() {
            let (u1, v1) = fiber.pair(g);
            let s = tensor_obj[a.source(f).0 * k + a.source(g).0];
            let t = tensor_obj[a.target(f).0 * k + a.target(g).0];
            tensor_mor.push(
                fiber
                    .find_morphism(s, t, sm.tensor_mor(u0, u1), sn.tensor_mor(v0, v1))
                    .ok_or_else(|| missing("tensor of morphisms"))?,
            );
        }
    }
    let (iu, iv) = (sm.unit(), sn.unit());
    let unit_xi = hom.category().identity(fiber.left().obj(iu));
    let unit = fiber.find(iu, iv, unit_xi).ok_or_else(|| missing("unit"))?;
    let t = |x: Obj, y: Obj| tensor_obj[x.0 * k + y.0];
    let mut associator = Vec::with_capacity(k * k * k);
    for x in a.objects() {
        for y in a.objects() {
            for z in a.objects() {
                let (px, py, pz) = (fiber.triple(x), fiber.triple(y), fiber.triple(z));
                associator.push(
                    fiber
                        .find_morphism(
                            t(t(x, y), z),
                            t(x, t(y, z)),
                            sm.alpha(px.0, py.0, pz.0),
                            sn.alpha(px.1, py.1, pz.1),
                        )
                        .ok_or_else(|| missing("associator"))?,
                );
            }
        }
    }
    let mut left_unitor = Vec::with_capacity(k);
    let mut right_unitor = Vec::with_capacity(k);
    for x in a.objects() {
        let (p, q, _) = fiber.triple(x);
        left_unitor.push(
            fiber
                .find_morphism(t(unit, x), x, sm.lambda(p), sn.lambda(q))
                .ok_or_else(|| missing("left unitor"))?,
        );
        right_unitor.push(
            fiber
                .find_morphism(t(x, unit), x, sm.rho(p), sn.rho(q))
                .ok_or_else(|| missing("right unitor"))?,
        );
    }
    MonoidalStructure::new(a, tensor_obj, tensor_mor, unit, associator, left_unitor, right_unitor)
}

/// Apex pentagon/triangle, both legs, naturality of the filler, and
/// agreement of the explicit tensor with the mediator tensor.
pub fn check_span(span: &SpanCell, budget: &Budget) -> Result<Report> {
    let mut report = Report::new();
    report.absorb("apex", check_monoidal(&span.apex));
    report.absorb("leg-left", check_mon_functor(&span.left));
    report.absorb("leg-right", check_mon_functor(&span.right));
    report.absorb("filler", crate::fincat::check_nat_trans(span.filler()));
    let mediated = span.mediator_tensor(budget)?;
    let (_, explicit) = span.apex.tensor_functor(budget)?;
    let a = span.apex.base();
    for x in mediated.source().objects() {
        let (l, r) = (mediated.obj(x), explicit.obj(x));
        report.require(
            l == r,
            "mediator-tensor",
            || vec![x.0],
            || {
                format!(
                    "mediator gives {}, explicit tensor gives {}",
                    a.obj_label(l),
                    a.obj_label(r)
                )
            },
        );
    }
    for f in mediated.source().morphisms() {
        let (l, r) = (mediated.mor(f), explicit.mor(f));
        report.require(
            l == r,
            "mediator-tensor",
            || vec![f.0],
            || {
                format!(
                    "mediator gives {}, explicit tensor gives {}",
                    a.mor_label(l),
                    a.mor_label(r)
                )
            },
        );
    }
    Ok(report)
}

/// Outcome of [`normalization_check`].
#[derive(Clone, Debug)]
pub struct Normalization {
    pub report: Report,
    /// Whether the diagonal is bijective on objects, not merely an equivalence.
    pub isomorphism: bool,
}

/// The span of the identity module functor against `End(M)`: the diagonal
/// `P ↦ (P, P, id)` is fully faithful and essentially surjective, and both
/// legs restrict to the identity along it.
pub fn normalization_check(x: &ModuleData, budget: &Budget) -> Result<Normalization> {
    let id = ModuleFunctorData::identity(x);
    let span = build_module_span(&id, budget)?;
    let e = x.end().category();
    let fiber = span.fiber();
    let a = fiber.apex();
    let mut obj = Vec::with_capacity(e.object_count());
    for p in e.objects() {
        let xi = span.hom().category().identity(span.push().obj(p));
        obj.push(
            fiber
                .find(p, p, xi)
                .ok_or_else(|| Error::structural("diagonal object missing"))?,
        );
    }
    let mut mor = Vec::with_capacity(e.morphism_count());
    for f in e.morphisms() {
        let (s, t) = (obj[e.source(f).0], obj[e.target(f).0]);
        mor.push(
            fiber
                .find_morphism(s, t, f, f)
                .ok_or_else(|| Error::structural("diagonal morphism missing"))?,
        );
    }
    let diag = Functor::new(e.clone(), a.clone(), obj, mor)?;
    let mut report = Report::new();
    report.absorb("diagonal", crate::fincat::check_functor(&diag));
    let identity = Functor::identity(e);
    for (law, leg) in [("leg-left", fiber.pr1()), ("leg-right", fiber.pr2())] {
        report.require(compose_functors(leg, &diag)? == identity, law, Vec::new, || {
            "leg does not restrict to the identity along the diagonal".to_string()
        });
    }
    for p in e.objects() {
        for q in e.objects() {
            let image: Vec<Mor> = e.hom(p, q).iter().map(|&f| diag.mor(f)).collect();
            let mut sorted = image.clone();
            sorted.sort();
            sorted.dedup();
            let target = a.hom(diag.obj(p), diag.obj(q));
            report.require(
                sorted.len() == image.len(),
                "faithful",
                || vec![p.0, q.0],
                || "two morphisms share an image".to_string(),
            );
            report.require(
                sorted.len() == target.len(),
                "full",
                || vec![p.0, q.0],
                || format!("{} of {} morphisms hit", sorted.len(), target.len()),
            );
        }
    }
    for y in a.objects() {
        let reached = e.objects().any(|p| a.hom(diag.obj(p), y).iter().any(|&f| a.is_iso(f)));
        report.require(
            reached,
            "essentially-surjective",
            || vec![y.0],
            || format!("{} is not isomorphic to a diagonal object", a.obj_label(y)),
        );
    }
    Ok(Normalization {
        report,
        isomorphism: diag.is_injective_on_objects() && diag.is_surjective_on_objects(),
    })
}

/// Every monoidal functor `C → A_F` whose projections are the two actions,
/// found by scanning all choices of apex objects over `(P_c, Q_c)`.
pub fn monoidal_lifts(span: &SpanCell) -> Result<Vec<MonFunctor>> {
    let c = span.source.acting().clone();
    let cat = c.base().clone();
    let fiber = &span.fiber;
    let a = fiber.apex();
    let (sa, ta) = (span.source.action(), span.target.action());
    let over: Vec<Vec<Obj>> = cat
        .objects()
        .map(|x| {
            a.objects()
                .filter(|&y| {
                    let (p, q, _) = fiber.triple(y);
                    p == sa.obj(x) && q == ta.obj(x)
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    if over.iter().any(Vec::is_empty) {
        return Ok(out);
    }
    let mut choice = vec![0usize; over.len()];
    loop {
        let obj: Vec<Obj> = choice.iter().enumerate().map(|(i, &j)| over[i][j]).collect();
        if let Some(lift) = assemble_lift(span, &c, &obj)? {
            if check_mon_functor(&lift).is_ok() {
                out.push(lift);
            }
        }
        // odometer step
        let mut i = 0;
        loop {
            if i == choice.len() {
                return Ok(out);
            }
            choice[i] += 1;
            if choice[i] < over[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn assemble_lift(span: &SpanCell, c: &Arc<MonoidalStructure>, obj: &[Obj]) -> Result<Option<MonFunctor>> {
    let cat = c.base();
    let fiber = &span.fiber;
    let (sa, ta) = (span.source.action(), span.target.action());
    let mut mor = Vec::with_capacity(cat.morphism_count());
    for u in cat.morphisms() {
        let (s, t) = (obj[cat.source(u).0], obj[cat.target(u).0]);
        match fiber.find_morphism(s, t, sa.mor(u), ta.mor(u)) {
            Some(h) => mor.push(h),
            None => return Ok(None),
        }
    }
    let mut mult = Vec::with_capacity(obj.len() * obj.len());
    for x in cat.objects() {
        for y in cat.objects() {
            let s = span.apex.tensor(obj[x.0], obj[y.0]);
            match fiber.find_morphism(s, obj[c.tensor(x, y).0], sa.gamma(x, y), ta.gamma(x, y)) {
                Some(h) => mult.push(h),
                None => return Ok(None),
            }
        }
    }
    let Some(unit) = fiber.find_morphism(span.apex.unit(), obj[c.unit().0], sa.eta(), ta.eta()) else {
        return Ok(None);
    };
    let functor = Functor::new(cat.clone(), span.apex.base().clone(), obj.to_vec(), mor)?;
    Ok(Some(MonFunctor::new(
        c.clone(),
        span.apex.clone(),
        functor,
        mult,
        unit,
    )?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::standard::{chain, discrete, one_object_group, terminal};
    use crate::fincat::{enumerate_functors, FinCategory};
    use crate::group::FiniteGroup;
    use crate::monoidal::discrete_group_category;
    use crate::spans::end::{end_monoidal, EndCategory};
    use crate::spans::module::module_structures_on;

    fn end(c: &Arc<FinCategory>) -> Arc<EndCategory> {
        Arc::new(end_monoidal(c, &Budget::default()).unwrap())
    }

    fn b() -> Budget {
        Budget::default()
    }

    // brute force: triples (P, Q, ξ) with ξ a natural iso F∘P ⇒ Q∘F
    fn triple_count(m: &Arc<FinCategory>, n: &Arc<FinCategory>, f: &Functor) -> usize {
        let (em, en) = (end(m), end(n));
        let mut count = 0;
        for p in em.category().objects() {
            for q in en.category().objects() {
                let fp: Vec<Mor> = em.functors().mor_map(p).iter().map(|&g| f.mor(g)).collect();
                let qf: Vec<Mor> = m.morphisms().map(|g| en.functors().mor_map(q)[f.mor(g).0]).collect();
                count += crate::fincat::enumerate_nat_trans(m, n, &fp, &qf)
                    .iter()
                    .filter(|c| c.iter().all(|&h| n.is_iso(h)))
                    .count();
            }
        }
        count
    }

    #[test]
    fn identity_on_the_arrow_gives_three_diagonal_triples() {
        let m = chain(1);
        let t = ModuleData::trivial(end(&m));
        let span = build_span(&t, &t, &Functor::identity(&m), &b()).unwrap();
        assert_eq!(span.apex().base().object_count(), 3);
        assert_eq!(triple_count(&m, &m, &Functor::identity(&m)), 3);
        assert!(check_span(&span, &b()).unwrap().is_ok());
    }

    #[test]
    fn discrete_carriers_give_set_pullbacks() {
        let (m, n) = (discrete(3), discrete(2));
        let (tm, tn) = (ModuleData::trivial(end(&m)), ModuleData::trivial(end(&n)));
        for key in enumerate_functors(&m, &n, 100).unwrap() {
            let f = Functor::from_morphism_map(m.clone(), n.clone(), key).unwrap();
            let span = build_span(&tm, &tn, &f, &b()).unwrap();
            // pairs of endomaps p, q with f∘p = q∘f
            let mut pairs = 0;
            for p in 0..27usize {
                let pm = [p % 3, (p / 3) % 3, p / 9];
                for q in 0..4usize {
                    let qm = [q % 2, q / 2];
                    if (0..3).all(|x| f.obj(Obj(pm[x])).0 == qm[f.obj(Obj(x)).0]) {
                        pairs += 1;
                    }
                }
            }
            assert_eq!(span.apex().base().object_count(), pairs);
            assert_eq!(span.apex().base().morphism_count(), pairs);
            assert!(check_span(&span, &b()).unwrap().is_ok());
        }
    }

    #[test]
    fn swap_action_span_and_lift() {
        let m = discrete(2);
        let e = end(&m);
        let z2 = Arc::new(discrete_group_category(&FiniteGroup::cyclic(2)));
        let swap = e
            .category()
            .objects()
            .find(|&p| e.functors().apply_obj(p, Obj(0)) == Obj(1) && e.functors().apply_obj(p, Obj(1)) == Obj(0))
            .unwrap();
        let x = ModuleData::from_endofunctors(z2, e.clone(), vec![e.identity_functor(), swap]).unwrap();
        let id = Functor::identity(&m);
        let span = build_span(&x, &x, &id, &b()).unwrap();
        assert_eq!(span.apex().base().object_count(), triple_count(&m, &m, &id));
        assert!(check_span(&span, &b()).unwrap().is_ok());
        let structures = module_structures_on(&x, &x, &id, &b()).unwrap();
        let lifts = monoidal_lifts(&span).unwrap();
        assert_eq!(structures.len(), 1);
        assert_eq!(lifts.len(), 1);
        let phi = span.lift(&structures[0]).unwrap();
        assert!(check_mon_functor(&phi).is_ok());
        assert_eq!(phi, lifts[0]);
    }

    #[test]
    fn lifts_match_structures_on_bz2() {
        let m = one_object_group(&FiniteGroup::cyclic(2));
        let e = end(&m);
        let z2 = Arc::new(discrete_group_category(&FiniteGroup::cyclic(2)));
        let id = e.identity_functor();
        let x = ModuleData::from_endofunctors(z2, e, vec![id, id]).unwrap();
        let f = Functor::identity(&m);
        let span = build_span(&x, &x, &f, &b()).unwrap();
        assert!(check_span(&span, &b()).unwrap().is_ok());
        let structures = module_structures_on(&x, &x, &f, &b()).unwrap();
        let lifts = monoidal_lifts(&span).unwrap();
        assert_eq!(structures.len(), 2);
        let mut from_structures: Vec<Vec<Obj>> = structures
            .iter()
            .map(|s| span.lift(s).unwrap().functor().obj_map().to_vec())
            .collect();
        let mut found: Vec<Vec<Obj>> = lifts.iter().map(|l| l.functor().obj_map().to_vec()).collect();
        from_structures.sort();
        found.sort();
        assert_eq!(from_structures, found);
    }

    #[test]
    fn normalization_on_small_carriers() {
        for (c, iso) in [(terminal(), true), (chain(1), true), (discrete(2), true)] {
            let n = normalization_check(&ModuleData::trivial(end(&c)), &b()).unwrap();
            assert!(n.report.is_ok(), "{}", n.report);
            assert_eq!(n.isomorphism, iso);
        }
        // automorphisms of the identity functor make the diagonal a proper equivalence
        let bz2 = one_object_group(&FiniteGroup::cyclic(2));
        let n = normalization_check(&ModuleData::trivial(end(&bz2)), &b()).unwrap();
        assert!(n.report.is_ok(), "{}", n.report);
        assert!(!n.isomorphism);
    }

    #[test]
    fn module_failing_its_checks_is_rejected() {
        let m = discrete(2);
        let e = end(&m);
        let z2 = Arc::new(discrete_group_category(&FiniteGroup::cyclic(2)));
        let konst = e
            .category()
            .objects()
            .find(|&p| e.functors().apply_obj(p, Obj(1)) == Obj(0) && e.functors().apply_obj(p, Obj(0)) == Obj(0))
            .unwrap();
        let bad = ModuleData::from_endofunctors(z2, e.clone(), vec![e.identity_functor(), konst]).unwrap();
        let err = build_span(&bad, &bad, &Functor::identity(&m), &b()).unwrap_err();
        assert_eq!(err.exit_code(), 1);
    }
}
