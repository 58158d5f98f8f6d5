use std::sync::Arc;

use super::structure::{path_detail, paths_agree, MonoidalStructure};
use crate::error::{Error, Result};
use crate::fincat::{Functor, Mor, Obj};
use crate::report::Report;

/// A braiding `β_{x,y}: x⊗y → y⊗x`, indexed by `x·n + y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Braiding {
    monoidal: Arc<MonoidalStructure>,
    beta: Vec<Mor>,
}

impl Braiding {
    pub fn new(monoidal: Arc<MonoidalStructure>, beta: Vec<Mor>) -> Result<Self> {
        let c = monoidal.base();
        let n = c.object_count();
        if beta.len() != n * n || beta.iter().any(|f| f.0 >= c.morphism_count()) {
            return Err(Error::structural(format!(
                "braiding on {}: component table malformed",
                c.name()
            )));
        }
        Ok(Braiding { monoidal, beta })
    }

    /// The identity braiding, only meaningful when `x⊗y = y⊗x` on objects.
    pub fn identity(monoidal: Arc<MonoidalStructure>) -> Result<Self> {
        let c = monoidal.base().clone();
        let mut beta = Vec::new();
        for x in c.objects() {
            for y in c.objects() {
                if monoidal.tensor(x, y) != monoidal.tensor(y, x) {
                    return Err(Error::structural(format!(
                        "identity braiding on {}: tensor does not commute on objects",
                        c.name()
                    )));
                }
                beta.push(c.identity(monoidal.tensor(x, y)));
            }
        }
        Self::new(monoidal, beta)
    }

    pub fn monoidal(&self) -> &Arc<MonoidalStructure> {
        &self.monoidal
    }

    pub fn beta(&self, x: Obj, y: Obj) -> Mor {
        self.beta[x.0 * self.monoidal.base().object_count() + y.0]
    }

    pub fn table(&self) -> &[Mor] {
        &self.beta
    }

    /// `β_{y,x}∘β_{x,y}`.
    pub fn double(&self, x: Obj, y: Obj) -> Option<Mor> {
        self.monoidal.base().try_compose(self.beta(y, x), self.beta(x, y))
    }

    /// `x` is transparent against `y` when the double braiding is the identity.
    pub fn transparent(&self, x: Obj, y: Obj) -> bool {
        let c = self.monoidal.base();
        self.double(x, y) == Some(c.identity(self.monoidal.tensor(x, y)))
    }

    /// Restriction along an inclusion produced by [`MonoidalStructure::restrict`].
    pub fn restrict(&self, sub: Arc<MonoidalStructure>, inclusion: &Functor) -> Result<Braiding> {
        let c = sub.base();
        let mut local = vec![None; self.monoidal.base().morphism_count()];
        for f in c.morphisms() {
            local[inclusion.mor(f).0] = Some(f);
        }
        let mut beta = Vec::new();
        for x in c.objects() {
            for y in c.objects() {
                let b = self.beta(inclusion.obj(x), inclusion.obj(y));
                beta.push(local[b.0].ok_or_else(|| Error::structural("braiding component leaves the subcategory"))?);
            }
        }
        Braiding::new(sub, beta)
    }
}

/// Typing, invertibility, naturality in both arguments and both hexagons.
pub fn check_braiding(b: &Braiding) -> Report {
    let s = b.monoidal();
    let c = s.base();
    let mut report = Report::new();
    let objs: Vec<Obj> = c.objects().collect();
    for &x in &objs {
        for &y in &objs {
            let f = b.beta(x, y);
            report.require(
                c.source(f) == s.tensor(x, y) && c.target(f) == s.tensor(y, x),
                "braiding-typing",
                || vec![x.0, y.0],
                || format!("β at {} has the wrong endpoints", c.mor_label(f)),
            );
            report.require(
                c.is_iso(f),
                "braiding-iso",
                || vec![x.0, y.0],
                || format!("β component {} is not invertible", c.mor_label(f)),
            );
        }
    }
    if report.has_law("braiding-typing") {
        return report;
    }
    for f in c.morphisms() {
        let (a, a2) = (c.source(f), c.target(f));
        for &y in &objs {
            let lhs = [b.beta(a, y), s.whisker_l(y, f)];
            let rhs = [s.whisker_r(f, y), b.beta(a2, y)];
            report.require(
                paths_agree(c, &lhs, &rhs),
                "braiding-naturality",
                || vec![f.0, y.0],
                || path_detail(c, &lhs, &rhs),
            );
            let lhs = [b.beta(y, a), s.whisker_r(f, y)];
            let rhs = [s.whisker_l(y, f), b.beta(y, a2)];
            report.require(
                paths_agree(c, &lhs, &rhs),
                "braiding-naturality",
                || vec![y.0, f.0],
                || path_detail(c, &lhs, &rhs),
            );
        }
    }
    let t = |x: Obj, y: Obj| s.tensor(x, y);
    for &x in &objs {
        for &y in &objs {
            for &z in &objs {
                let lhs = [s.alpha(x, y, z), b.beta(x, t(y, z)), s.alpha(y, z, x)];
                let rhs = [
                    s.whisker_r(b.beta(x, y), z),
                    s.alpha(y, x, z),
                    s.whisker_l(y, b.beta(x, z)),
                ];
                report.require(
                    paths_agree(c, &lhs, &rhs),
                    "hexagon",
                    || vec![x.0, y.0, z.0],
                    || path_detail(c, &lhs, &rhs),
                );
                let inv = |p, q, r| s.alpha_inv(p, q, r);
                if let (Some(a1), Some(a2), Some(a3)) = (inv(x, y, z), inv(z, x, y), inv(x, z, y)) {
                    let lhs = [a1, b.beta(t(x, y), z), a2];
                    let rhs = [s.whisker_l(x, b.beta(y, z)), a3, s.whisker_r(b.beta(x, z), y)];
                    report.require(
                        paths_agree(c, &lhs, &rhs),
                        "hexagon-inverse",
                        || vec![x.0, y.0, z.0],
                        || path_detail(c, &lhs, &rhs),
                    );
                } else {
                    report.push("hexagon-inverse", vec![x.0, y.0, z.0], || {
                        "associator component not invertible".to_string()
                    });
                }
            }
        }
    }
    report
}

/// `β_{y,x}∘β_{x,y} = id` for every pair.
pub fn is_symmetric(b: &Braiding) -> bool {
    let c = b.monoidal().base();
    c.objects().all(|x| c.objects().all(|y| b.transparent(x, y)))
}
