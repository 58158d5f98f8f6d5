use std::sync::Arc;

use super::two_span::strict_pullback_monoidal;
use crate::centers::{
    braided_centralizer, center_pullback, center_pushforward, check_hpt_conditions, drinfeld_center,
    monoidal_centralizer, mueger_center, CenterCategory, HptCandidate,
};
use crate::error::{Error, Result};
use crate::fincat::{compose_functors, Budget, FinCategory, Functor, Mor, NatTrans, Obj};
use crate::limits::{
    braided_limit, comma, fiber_product, mediate, monoidal_limit, strict_pullback, FiberProduct, MonoidalLimit,
    Orientation,
};
use crate::monoidal::{
    check_braided_functor, check_braiding, check_mon_functor, check_monoidal, compose_mon_functors, Braiding,
    MonFunctor, MonNatTrans, MonoidalStructure,
};
use crate::report::Report;

/// Which center a central fiber product is taken over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CenterKind {
    Drinfeld,
    Mueger,
}

/// `Z(M) ×_{Z(G)} Z(N)` for a monoidal functor `G: M → N`, with the braiding
/// taken componentwise.
#[derive(Clone, Debug)]
pub struct CentralProduct {
    g: MonFunctor,
    zm: CenterCategory,
    zn: CenterCategory,
    zg: CenterCategory,
    push: MonFunctor,
    pull: MonFunctor,
    limit: MonoidalLimit,
    braiding: Braiding,
}

impl CentralProduct {
    pub fn functor(&self) -> &MonFunctor {
        &self.g
    }

    pub fn source_center(&self) -> &CenterCategory {
        &self.zm
    }

    pub fn target_center(&self) -> &CenterCategory {
        &self.zn
    }

    pub fn centralizer(&self) -> &CenterCategory {
        &self.zg
    }

    /// `G_*: Z(M) → Z(G)`.
    pub fn push(&self) -> &MonFunctor {
        &self.push
    }

    /// `G^*: Z(N) → Z(G)`.
    pub fn pull(&self) -> &MonFunctor {
        &self.pull
    }

    pub fn limit(&self) -> &MonoidalLimit {
        &self.limit
    }

    pub fn apex(&self) -> &Arc<FinCategory> {
        self.limit.limit().apex()
    }

    pub fn braiding(&self) -> &Braiding {
        &self.braiding
    }
}

fn braiding_of(z: &CenterCategory) -> Result<&Braiding> {
    z.braiding()
        .ok_or_else(|| Error::structural(format!("{} carries no braiding", z.category().name())))
}

/// Assembles the fiber product from already computed centers.
pub fn central_fiber_product(
    g: &MonFunctor,
    zm: &CenterCategory,
    zn: &CenterCategory,
    zg: &CenterCategory,
    budget: &Budget,
) -> Result<CentralProduct> {
    let push = center_pushforward(g, zm, zg)?;
    let pull = center_pullback(g, zn, zg)?;
    let r = fiber_product(push.functor(), pull.functor(), budget)?;
    let limit = monoidal_limit(&r, &push, &pull)?;
    let braiding = braided_limit(&limit, braiding_of(zm)?, braiding_of(zn)?)?;
    Ok(CentralProduct {
        g: g.clone(),
        zm: zm.clone(),
        zn: zn.clone(),
        zg: zg.clone(),
        push,
        pull,
        limit,
        braiding,
    })
}

/// `Z₁(M) ×_{Z₁(G)} Z₁(N)`, or `Z₂(A) ×_{Z₂(G)} Z₂(B)` when `G` runs between
/// the braided categories `source` and `target`.
pub fn central_product(
    g: &MonFunctor,
    kind: CenterKind,
    braidings: Option<(&Braiding, &Braiding)>,
    budget: &Budget,
) -> Result<CentralProduct> {
    let (zm, zn, zg) = centers_for(g, kind, braidings, budget)?;
    central_fiber_product(g, &zm, &zn, &zg, budget)
}

fn centers_for(
    g: &MonFunctor,
    kind: CenterKind,
    braidings: Option<(&Braiding, &Braiding)>,
    budget: &Budget,
) -> Result<(CenterCategory, CenterCategory, CenterCategory)> {
    match (kind, braidings) {
        (CenterKind::Drinfeld, _) => Ok((
            drinfeld_center(g.source(), budget)?,
            drinfeld_center(g.target(), budget)?,
            monoidal_centralizer(g, budget)?,
        )),
        (CenterKind::Mueger, Some((bs, bt))) => Ok((
            mueger_center(bs, budget)?,
            mueger_center(bt, budget)?,
            braided_centralizer(g, bt, budget)?,
        )),
        (CenterKind::Mueger, None) => Err(Error::structural("Müger centers need braidings on both sides")),
    }
}

/// Braiding, leg and apex checks of a central fiber product.
pub fn check_central_product(cp: &CentralProduct) -> Report {
    let mut report = Report::new();
    report.absorb("push", check_mon_functor(&cp.push));
    report.absorb("pull", check_mon_functor(&cp.pull));
    report.absorb("apex", check_monoidal(cp.limit.monoidal()));
    report.absorb("braiding", check_braiding(&cp.braiding));
    report.absorb(
        "pr1",
        check_braided_functor(
            cp.limit.pr1(),
            &cp.braiding,
            braiding_of(&cp.zm).expect("built with a braiding"),
        ),
    );
    report.absorb(
        "pr2",
        check_braided_functor(
            cp.limit.pr2(),
            &cp.braiding,
            braiding_of(&cp.zn).expect("built with a braiding"),
        ),
    );
    report
}

/// `x ↦ (x, β_{x,G(-)})`: a braided category into a center over it.
pub fn central_embedding(b: &Braiding, z: &CenterCategory) -> Result<MonFunctor> {
    let s = b.monoidal();
    if **s != **z.base() {
        return Err(Error::mismatch("braiding does not sit on the center's base"));
    }
    let zs = z
        .monoidal()
        .ok_or_else(|| Error::structural(format!("{} is not monoidal", z.category().name())))?
        .clone();
    let c = s.base();
    let g = z.left_functor();
    let mut obj = Vec::with_capacity(c.object_count());
    for x in c.objects() {
        let comps: Vec<Mor> = g.source().base().objects().map(|y| b.beta(x, g.obj(y))).collect();
        obj.push(z.find(x, &comps).ok_or_else(|| {
            Error::structural(format!(
                "{} with its braiding is not in {}",
                c.obj_label(x),
                z.category().name()
            ))
        })?);
    }
    let lift = |from: Obj, to: Obj, u: Mor| {
        z.find_morphism(from, to, u)
            .ok_or_else(|| Error::structural(format!("{} does not lift to {}", c.mor_label(u), z.category().name())))
    };
    let mut mor = Vec::with_capacity(c.morphism_count());
    for u in c.morphisms() {
        mor.push(lift(obj[c.source(u).0], obj[c.target(u).0], u)?);
    }
    let mut mult = Vec::new();
    for x in c.objects() {
        for y in c.objects() {
            let t = s.tensor(x, y);
            mult.push(lift(zs.tensor(obj[x.0], obj[y.0]), obj[t.0], c.identity(t))?);
        }
    }
    let unit = lift(zs.unit(), obj[s.unit().0], c.identity(s.unit()))?;
    let functor = Functor::new(c.clone(), z.category().clone(), obj, mor)?;
    MonFunctor::new(s.clone(), zs, functor, mult, unit)
}

/// The functor into the fiber product induced by braided functors
/// `F^M: S → Z(M)`, `F^N: S → Z(N)` and a monoidal isomorphism
/// `ψ: G_*∘F^M ⇒ G^*∘F^N`.
pub fn induced_central_functor(
    cp: &CentralProduct,
    fm: &MonFunctor,
    fn_: &MonFunctor,
    psi: &MonNatTrans,
) -> Result<MonFunctor> {
    let r = cp.limit.limit();
    let m = cp.limit.monoidal();
    let u = mediate(r, fm.functor(), fn_.functor(), psi.nat())?;
    let s = fm.source();
    let pair = |from: Obj, to: Obj, a: Mor, b: Mor| {
        r.find_morphism(from, to, a, b)
            .ok_or_else(|| Error::structural("structure maps do not pair up in the fiber product"))
    };
    let mut mult = Vec::new();
    for x in s.base().objects() {
        for y in s.base().objects() {
            let from = m.tensor(u.obj(x), u.obj(y));
            mult.push(pair(from, u.obj(s.tensor(x, y)), fm.gamma(x, y), fn_.gamma(x, y))?);
        }
    }
    let unit = pair(m.unit(), u.obj(s.unit()), fm.eta(), fn_.eta())?;
    MonFunctor::new(s.clone(), m.clone(), u, mult, unit)
}

/// `F^M`, `F^N` and `ψ` for a braided `G: A → B`: both embeddings, with `ψ`
/// the identity on carriers.
pub fn canonical_central_data(
    cp: &CentralProduct,
    source: &Braiding,
    target: &Braiding,
) -> Result<(MonFunctor, MonFunctor, MonNatTrans)> {
    let fm = central_embedding(source, &cp.zm)?;
    let fn_ = compose_mon_functors(&central_embedding(target, &cp.zn)?, &cp.g)?;
    let a = compose_mon_functors(&cp.push, &fm)?;
    let b = compose_mon_functors(&cp.pull, &fn_)?;
    let base = cp.g.target().base();
    let mut comps = Vec::new();
    for x in source.monoidal().base().objects() {
        let (s, t) = (a.obj(x), b.obj(x));
        comps.push(cp.zg.find_morphism(s, t, base.identity(cp.g.obj(x))).ok_or_else(|| {
            Error::structural(format!(
                "G_*F and G^*F differ at {}: G is not braided there",
                source.monoidal().base().obj_label(x)
            ))
        })?);
    }
    Ok((fm, fn_, MonNatTrans::new(a, b, comps)?))
}

/// For a braided `G: A → B`: builds the central fiber product, checks its
/// braiding and legs, and checks that the functor induced from the
/// canonical central data is braided monoidal.
pub fn central_module_check(
    g: &MonFunctor,
    source: &Braiding,
    target: &Braiding,
    kind: CenterKind,
    budget: &Budget,
) -> Result<Report> {
    let cp = central_product(g, kind, Some((source, target)), budget)?;
    let mut report = check_central_product(&cp);
    let (fm, fn_, psi) = canonical_central_data(&cp, source, target)?;
    report.absorb(
        "embedding-source",
        check_braided_functor(&fm, source, braiding_of(&cp.zm)?),
    );
    report.absorb(
        "embedding-target",
        check_braided_functor(&fn_, source, braiding_of(&cp.zn)?),
    );
    let induced = induced_central_functor(&cp, &fm, &fn_, &psi)?;
    report.absorb("induced", check_mon_functor(&induced));
    report.absorb("induced", check_braided_functor(&induced, source, &cp.braiding));
    Ok(report)
}

/// `Z(M) ×^φ Z(N)` for a monoidal transformation `φ: G ⇒ H`: objects
/// `(x, y, ξ^G, ξ^H)` with `ξ^H∘φ_x = ξ^G`, tabulated as the strict
/// pullback of the two central fiber products over the comma category
/// `(G∘U) ↓ U`.
#[derive(Clone, Debug)]
pub struct PhiProduct {
    phi: MonNatTrans,
    g: CentralProduct,
    h: CentralProduct,
    comma: FiberProduct,
    pullback: FiberProduct,
    monoidal: Arc<MonoidalStructure>,
    braiding: Braiding,
}

impl PhiProduct {
    pub fn transformation(&self) -> &MonNatTrans {
        &self.phi
    }

    pub fn over_g(&self) -> &CentralProduct {
        &self.g
    }

    pub fn over_h(&self) -> &CentralProduct {
        &self.h
    }

    pub fn comma(&self) -> &FiberProduct {
        &self.comma
    }

    pub fn pullback(&self) -> &FiberProduct {
        &self.pullback
    }

    pub fn apex(&self) -> &Arc<FinCategory> {
        self.pullback.apex()
    }

    pub fn monoidal(&self) -> &Arc<MonoidalStructure> {
        &self.monoidal
    }

    pub fn braiding(&self) -> &Braiding {
        &self.braiding
    }

    /// `(x, y, ξ^G, ξ^H)` on base objects, ready for the compatibility
    /// conditions.
    pub fn candidate(&self, a: Obj) -> HptCandidate {
        let (ag, ah, _) = self.pullback.triple(a);
        let (x, y, xi_g) = self.g.limit.limit().triple(ag);
        let xi_h = self.h.limit.limit().triple(ah).2;
        let (zm, zn) = (&self.g.zm, &self.g.zn);
        HptCandidate {
            m: zm.carrier(x),
            beta_m: zm.half_braiding(x).to_vec(),
            n: zn.carrier(y),
            beta_n: zn.half_braiding(y).to_vec(),
            xi_g: self.g.zg.forgetful().mor(xi_g),
            xi_h: self.h.zg.forgetful().mor(xi_h),
        }
    }

    /// The projection to the carrier category of `N`.
    pub fn target_projection(&self) -> Result<Functor> {
        let y = compose_functors(self.g.limit.limit().pr2(), self.pullback.pr1())?;
        compose_functors(self.g.zn.forgetful(), &y)
    }
}

// (x, y, ξ) ↦ (x, y, U(ξ)∘c_x) in the comma category
fn into_comma(k: &FiberProduct, cp: &CentralProduct, precompose: &dyn Fn(Obj) -> Mor) -> Result<Functor> {
    let r = cp.limit.limit();
    let base = cp.g.target().base();
    let comps = r
        .apex()
        .objects()
        .map(|a| {
            let (x, _, xi) = r.triple(a);
            base.compose(cp.zg.forgetful().mor(xi), precompose(cp.zm.carrier(x)))
        })
        .collect();
    let xi = NatTrans::new(
        compose_functors(k.left(), r.pr1())?,
        compose_functors(k.right(), r.pr2())?,
        comps,
    )?;
    mediate(k, r.pr1(), r.pr2(), &xi)
}

/// Builds `Z(M) ×^φ Z(N)` from the two central fiber products.
pub fn central_phi_product(
    phi: &MonNatTrans,
    over_g: &CentralProduct,
    over_h: &CentralProduct,
    budget: &Budget,
) -> Result<PhiProduct> {
    if phi.source() != &over_g.g || phi.target() != &over_h.g {
        return Err(Error::mismatch(
            "φ does not run between the functors of the two products",
        ));
    }
    if over_g.zm.category() != over_h.zm.category() || over_g.zn.category() != over_h.zn.category() {
        return Err(Error::mismatch("the two products are taken over different centers"));
    }
    let gu = compose_functors(phi.source().functor(), over_g.zm.forgetful())?;
    let k = comma(&gu, over_g.zn.forgetful(), Orientation::Forward, budget)?;
    let base = over_g.g.target().base();
    let from_g = into_comma(&k, over_g, &|m| base.identity(over_g.g.obj(m)))?;
    let from_h = into_comma(&k, over_h, &|m| phi.component(m))?;
    let pullback = strict_pullback(&from_g, &from_h, budget)?;
    let monoidal = Arc::new(strict_pullback_monoidal(
        &pullback,
        over_g.limit.monoidal(),
        over_h.limit.monoidal(),
        budget,
    )?);
    let apex = pullback.apex();
    let mut beta = Vec::with_capacity(apex.object_count().pow(2));
    for a in apex.objects() {
        let (a1, a2, _) = pullback.triple(a);
        for b in apex.objects() {
            let (b1, b2, _) = pullback.triple(b);
            beta.push(
                pullback
                    .find_morphism(
                        monoidal.tensor(a, b),
                        monoidal.tensor(b, a),
                        over_g.braiding.beta(a1, b1),
                        over_h.braiding.beta(a2, b2),
                    )
                    .ok_or_else(|| Error::structural("componentwise braiding leaves the ×^φ product"))?,
            );
        }
    }
    let braiding = Braiding::new(monoidal.clone(), beta)?;
    Ok(PhiProduct {
        phi: phi.clone(),
        g: over_g.clone(),
        h: over_h.clone(),
        comma: k,
        pullback,
        monoidal,
        braiding,
    })
}

/// Monoidal and braiding laws of `Z(M) ×^φ Z(N)` and the compatibility
/// conditions on every object.
pub fn check_phi_product(p: &PhiProduct) -> Result<Report> {
    let mut report = Report::new();
    report.absorb("apex", check_monoidal(&p.monoidal));
    report.absorb("braiding", check_braiding(&p.braiding));
    for a in p.apex().objects() {
        report.absorb(
            &format!("object-{}", a.0),
            check_hpt_conditions(&p.phi, &p.candidate(a))?,
        );
    }
    Ok(report)
}

/// Whether a functor is bijective on every hom-set.
pub fn fully_faithful(f: &Functor) -> bool {
    let (s, t) = (f.source(), f.target());
    s.objects().all(|x| {
        s.objects().all(|y| {
            let mut image: Vec<Mor> = s.hom(x, y).iter().map(|&h| f.mor(h)).collect();
            image.sort();
            image.dedup();
            image.len() == s.hom(x, y).len() && image.len() == t.hom(f.obj(x), f.obj(y)).len()
        })
    })
}
