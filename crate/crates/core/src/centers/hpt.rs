use crate::error::{Error, Result};
use crate::fincat::{Mor, Obj};
use crate::monoidal::{path_detail, paths_agree, MonFunctor, MonNatTrans};
use crate::report::Report;

/// A candidate object of `Z₁(M) ×^φ Z₁(N)`: half-braided objects `(m, βᵐ)`
/// and `(n, βⁿ)` with comparisons `ξ^G: G(m) → n` and `ξ^H: H(m) → n`.
#[derive(Clone, Debug)]
pub struct HptCandidate {
    pub m: Obj,
    pub beta_m: Vec<Mor>,
    pub n: Obj,
    pub beta_n: Vec<Mor>,
    pub xi_g: Mor,
    pub xi_h: Mor,
}

/// `ξ: G(m) → n` is compatible with the half-braidings when
/// `(G z⊗ξ)∘γ^{-1}_{z,m}∘G(βᵐ_z)∘γ_{m,z} = βⁿ_{G z}∘(ξ⊗G z)` for every `z`.
pub fn check_center_compatibility(
    g: &MonFunctor,
    m: Obj,
    beta_m: &[Mor],
    n: Obj,
    beta_n: &[Mor],
    xi: Mor,
) -> Result<Report> {
    let (sm, tn) = (g.source(), g.target());
    let (mc, nc) = (sm.base(), tn.base());
    if beta_m.len() != mc.object_count() || beta_n.len() != nc.object_count() {
        return Err(Error::structural("half-braiding has the wrong number of components"));
    }
    if nc.source(xi) != g.obj(m) || nc.target(xi) != n || !nc.is_iso(xi) {
        return Err(Error::structural(format!(
            "comparison {} is not an isomorphism G(m) → n",
            nc.mor_label(xi)
        )));
    }
    let mut report = Report::new();
    for z in mc.objects() {
        let gz = g.obj(z);
        let Some(inv) = nc.inverse(g.gamma(z, m)) else {
            report.push("compatible", vec![z.0], || "γ is not invertible".to_string());
            continue;
        };
        let lhs = [g.gamma(m, z), g.mor(beta_m[z.0]), inv, tn.whisker_l(gz, xi)];
        let rhs = [tn.whisker_r(xi, gz), beta_n[gz.0]];
        report.require(
            paths_agree(nc, &lhs, &rhs),
            "compatible",
            || vec![z.0],
            || path_detail(nc, &lhs, &rhs),
        );
    }
    Ok(report)
}

/// Compatibility of `ξ^G` for `G` and of `ξ^H` for `H`, and
/// `ξ^H∘φ_m = ξ^G`.
pub fn check_hpt_conditions(phi: &MonNatTrans, c: &HptCandidate) -> Result<Report> {
    let (g, h) = (phi.source(), phi.target());
    let nc = g.target().base();
    let mut report = Report::new();
    report.absorb(
        "g",
        check_center_compatibility(g, c.m, &c.beta_m, c.n, &c.beta_n, c.xi_g)?,
    );
    report.absorb(
        "h",
        check_center_compatibility(h, c.m, &c.beta_m, c.n, &c.beta_n, c.xi_h)?,
    );
    let lhs = [phi.component(c.m), c.xi_h];
    let rhs = [c.xi_g];
    report.require(
        paths_agree(nc, &lhs, &rhs),
        "condition-c",
        || vec![c.m.0],
        || path_detail(nc, &lhs, &rhs),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::centers::drinfeld_center;
    use crate::fincat::Budget;
    use crate::group::FiniteGroup;
    use crate::monoidal::{check_mon_nattrans, skeletal_group_category, trivial_cocycle};

    fn setup() -> (Arc<crate::monoidal::MonoidalStructure>, Vec<Vec<Mor>>) {
        let g = FiniteGroup::cyclic(2);
        let s = Arc::new(skeletal_group_category(&g, &g, &trivial_cocycle(&g, &g)).unwrap());
        let z = drinfeld_center(&s, &Budget::default()).unwrap();
        let on_one: Vec<Vec<Mor>> = z.keys().iter().filter(|k| k.0 == Obj(1)).map(|k| k.1.clone()).collect();
        (s, on_one)
    }

    #[test]
    fn identity_data_passes() {
        let (s, hb) = setup();
        let id = MonNatTrans::identity(&MonFunctor::identity(&s));
        let one = s.base().identity(Obj(1));
        for b in &hb {
            let c = HptCandidate {
                m: Obj(1),
                beta_m: b.clone(),
                n: Obj(1),
                beta_n: b.clone(),
                xi_g: one,
                xi_h: one,
            };
            assert!(check_hpt_conditions(&id, &c).unwrap().is_ok());
        }
    }

    #[test]
    fn mismatched_half_braidings_fail_at_the_generator() {
        let (s, hb) = setup();
        assert_eq!(hb.len(), 2);
        let id = MonNatTrans::identity(&MonFunctor::identity(&s));
        let one = s.base().identity(Obj(1));
        let c = HptCandidate {
            m: Obj(1),
            beta_m: hb[0].clone(),
            n: Obj(1),
            beta_n: hb[1].clone(),
            xi_g: one,
            xi_h: one,
        };
        let rep = check_hpt_conditions(&id, &c).unwrap();
        assert!(rep.has_law("g.compatible"));
        assert!(rep.has_law("h.compatible"));
        assert!(!rep.has_law("condition-c"));
        assert!(rep
            .violations
            .iter()
            .all(|v| v.law == "condition-c" || v.witness == vec![1]));
    }

    #[test]
    fn condition_c_holds_by_construction() {
        let (s, hb) = setup();
        let id = MonFunctor::identity(&s);
        // φ_x = (x, χ(x)), the nontrivial monoidal automorphism of the identity
        let phi = MonNatTrans::new(id.clone(), id.clone(), vec![Mor(0), Mor(3)]).unwrap();
        assert!(check_mon_nattrans(&phi).is_ok());
        let xi_h = s.base().identity(Obj(1));
        let xi_g = s.base().compose(xi_h, phi.component(Obj(1)));
        let c = HptCandidate {
            m: Obj(1),
            beta_m: hb[1].clone(),
            n: Obj(1),
            beta_n: hb[1].clone(),
            xi_g,
            xi_h,
        };
        assert!(check_hpt_conditions(&phi, &c).unwrap().is_ok());
        let broken = HptCandidate { xi_g: xi_h, ..c };
        let rep = check_hpt_conditions(&phi, &broken).unwrap();
        assert!(rep.has_law("condition-c") && rep.total == 1);
    }
}
