use std::sync::Arc;

use super::fiber::{FiberProduct, LimitKind, Orientation};
use crate::error::{Error, Result};
use crate::fincat::{Mor, Obj};
use crate::monoidal::{compose_mon_functors, Braiding, MonFunctor, MonNatTrans, MonoidalStructure};

/// A cospan limit of monoidal functors with its induced monoidal structure
/// and strict monoidal projections.
#[derive(Clone, Debug)]
pub struct MonoidalLimit {
    limit: FiberProduct,
    left: MonFunctor,
    right: MonFunctor,
    monoidal: Arc<MonoidalStructure>,
    pr1: MonFunctor,
    pr2: MonFunctor,
}

impl MonoidalLimit {
    pub fn limit(&self) -> &FiberProduct {
        &self.limit
    }

    pub fn monoidal(&self) -> &Arc<MonoidalStructure> {
        &self.monoidal
    }

    pub fn pr1(&self) -> &MonFunctor {
        &self.pr1
    }

    pub fn pr2(&self) -> &MonFunctor {
        &self.pr2
    }

    pub fn left(&self) -> &MonFunctor {
        &self.left
    }

    pub fn right(&self) -> &MonFunctor {
        &self.right
    }

    /// The filler as a monoidal transformation between the composite legs.
    pub fn filler(&self) -> Result<MonNatTrans> {
        let fp = compose_mon_functors(&self.left, &self.pr1)?;
        let gq = compose_mon_functors(&self.right, &self.pr2)?;
        let comps = self.limit.filler().components().to_vec();
        match self.limit.kind() {
            LimitKind::Comma(Orientation::Reverse) => MonNatTrans::new(gq, fp, comps),
            _ => MonNatTrans::new(fp, gq, comps),
        }
    }
}

/// Equips a cospan limit of `f, g` with the tensor
/// `(x,y,ξ)⊗(x',y',ξ') = (x⊗x', y⊗y', γ^g∘(ξ⊗ξ')∘(γ^f)^{-1})`, unit
/// `(I, I, η^g∘(η^f)^{-1})`, and associator/unitors taken componentwise.
pub fn monoidal_limit(r: &FiberProduct, f: &MonFunctor, g: &MonFunctor) -> Result<MonoidalLimit> {
    if f.functor() != r.left() || g.functor() != r.right() {
        return Err(Error::mismatch("monoidal functors do not match the legs of the limit"));
    }
    let (xm, ym, zm) = (f.source(), g.source(), f.target());
    if **zm != **g.target() {
        return Err(Error::mismatch("monoidal legs land in different monoidal categories"));
    }
    let z = zm.base();
    let apex = r.apex();
    let reverse = r.kind() == LimitKind::Comma(Orientation::Reverse);
    let inv = |m: Mor| {
        z.inverse(m)
            .ok_or_else(|| Error::structural("monoidal structure map is not invertible"))
    };
    let transport = |x: Obj, x2: Obj, y: Obj, y2: Obj, t: Mor| -> Result<Mor> {
        // t is ξ⊗ξ' in Z
        let path = if reverse {
            [inv(g.gamma(y, y2))?, t, f.gamma(x, x2)]
        } else {
            [inv(f.gamma(x, x2))?, t, g.gamma(y, y2)]
        };
        z.compose_path(&path)
            .ok_or_else(|| Error::structural("tensor comparison is not composable"))
    };
    let n = apex.object_count();
    let mut tensor_obj = Vec::with_capacity(n * n);
    for a in apex.objects() {
        let (x, y, xi) = r.triple(a);
        for b in apex.objects() {
            let (x2, y2, xi2) = r.triple(b);
            let c = transport(x, x2, y, y2, zm.tensor_mor(xi, xi2))?;
            let (tx, ty) = (xm.tensor(x, x2), ym.tensor(y, y2));
            tensor_obj.push(r.find(tx, ty, c).ok_or_else(|| {
                Error::structural(format!(
                    "tensor of {} and {} is not an object of the limit",
                    apex.obj_label(a),
                    apex.obj_label(b)
                ))
            })?);
        }
    }
    let t = |a: Obj, b: Obj| tensor_obj[a.0 * n + b.0];
    let m = apex.morphism_count();
    let mut tensor_mor = Vec::with_capacity(m * m);
    for h in apex.morphisms() {
        let (u, v) = r.pair(h);
        for k in apex.morphisms() {
            let (u2, v2) = r.pair(k);
            let s = t(apex.source(h), apex.source(k));
            let e = t(apex.target(h), apex.target(k));
            tensor_mor.push(
                r.find_morphism(s, e, xm.tensor_mor(u, u2), ym.tensor_mor(v, v2))
                    .ok_or_else(|| {
                        Error::structural(format!(
                            "tensor of {} and {} is not a morphism of the limit",
                            apex.mor_label(h),
                            apex.mor_label(k)
                        ))
                    })?,
            );
        }
    }
    let unit_cmp = if reverse {
        z.compose_path(&[inv(g.eta())?, f.eta()])
    } else {
        z.compose_path(&[inv(f.eta())?, g.eta()])
    }
    .ok_or_else(|| Error::structural("unit comparison is not composable"))?;
    let unit = r
        .find(xm.unit(), ym.unit(), unit_cmp)
        .ok_or_else(|| Error::structural("unit is not an object of the limit"))?;
    let pair_at = |s: Obj, e: Obj, u: Mor, v: Mor, what: &str| {
        r.find_morphism(s, e, u, v)
            .ok_or_else(|| Error::structural(format!("{what} component is not a morphism of the limit")))
    };
    let mut associator = Vec::with_capacity(n * n * n);
    for a in apex.objects() {
        for b in apex.objects() {
            for c in apex.objects() {
                let (ta, tb, tc) = (r.triple(a), r.triple(b), r.triple(c));
                associator.push(pair_at(
                    t(t(a, b), c),
                    t(a, t(b, c)),
                    xm.alpha(ta.0, tb.0, tc.0),
                    ym.alpha(ta.1, tb.1, tc.1),
                    "associator",
                )?);
            }
        }
    }
    let mut left_unitor = Vec::with_capacity(n);
    let mut right_unitor = Vec::with_capacity(n);
    for a in apex.objects() {
        let (x, y, _) = r.triple(a);
        left_unitor.push(pair_at(t(unit, a), a, xm.lambda(x), ym.lambda(y), "left unitor")?);
        right_unitor.push(pair_at(t(a, unit), a, xm.rho(x), ym.rho(y), "right unitor")?);
    }
    let monoidal = Arc::new(MonoidalStructure::new(
        apex.clone(),
        tensor_obj,
        tensor_mor,
        unit,
        associator,
        left_unitor,
        right_unitor,
    )?);
    let pr1 = MonFunctor::strict(monoidal.clone(), xm.clone(), r.pr1().clone())?;
    let pr2 = MonFunctor::strict(monoidal.clone(), ym.clone(), r.pr2().clone())?;
    Ok(MonoidalLimit {
        limit: r.clone(),
        left: f.clone(),
        right: g.clone(),
        monoidal,
        pr1,
        pr2,
    })
}

/// The braiding on a limit of braided functors: `β = (β_X, β_Y)` componentwise.
pub fn braided_limit(ml: &MonoidalLimit, bx: &Braiding, by: &Braiding) -> Result<Braiding> {
    if **bx.monoidal() != **ml.left.source() || **by.monoidal() != **ml.right.source() {
        return Err(Error::mismatch("braidings do not sit on the limit's factors"));
    }
    let r = &ml.limit;
    let s = &ml.monoidal;
    let apex = r.apex();
    let mut beta = Vec::new();
    for a in apex.objects() {
        let (x, y, _) = r.triple(a);
        for b in apex.objects() {
            let (x2, y2, _) = r.triple(b);
            beta.push(
                r.find_morphism(s.tensor(a, b), s.tensor(b, a), bx.beta(x, x2), by.beta(y, y2))
                    .ok_or_else(|| {
                        Error::structural(format!(
                            "braiding of {} and {} is not a morphism of the limit",
                            apex.obj_label(a),
                            apex.obj_label(b)
                        ))
                    })?,
            );
        }
    }
    Braiding::new(s.clone(), beta)
}
