//! Skeletal monoidal categories built from group data.

use std::sync::Arc;

use super::braiding::Braiding;
use super::structure::MonoidalStructure;
use crate::error::{Error, Result};
use crate::fincat::{FinCategory, Mor, MorphismRecord, Obj};
use crate::group::FiniteGroup;

/// Objects `G`, `Hom(g, g) = U`, no other morphisms. Morphism `(g, u)` has
/// id `g·|U| + u`.
pub fn skeletal_base(g: &FiniteGroup, u: &FiniteGroup) -> Result<Arc<FinCategory>> {
    if !u.is_abelian() {
        return Err(Error::structural(format!(
            "automorphism group {} must be abelian",
            u.name()
        )));
    }
    let k = u.order();
    let labels = g.elements().map(|a| g.label(a).to_string()).collect();
    let records = g
        .elements()
        .flat_map(|a| u.elements().map(move |b| (a, b)))
        .map(|(a, b)| MorphismRecord {
            label: if k == 1 {
                format!("id_{}", g.label(a))
            } else {
                format!("{}:{}", g.label(a), u.label(b))
            },
            source: Obj(a),
            target: Obj(a),
        })
        .collect();
    let ids = g.elements().map(|a| Mor(a * k + u.identity())).collect();
    let name = if k == 1 {
        format!("Disc({})", g.name())
    } else {
        format!("Sk({},{})", g.name(), u.name())
    };
    let c = FinCategory::from_fn(name, labels, records, ids, |f, h| {
        let (a, x) = (f.0 / k, f.0 % k);
        let (b, y) = (h.0 / k, h.0 % k);
        (a == b).then(|| Mor(a * k + u.mul(x, y)))
    })?;
    Ok(Arc::new(c))
}

/// The skeletal monoidal category with associator `α_{x,y,z} = ω(x,y,z)`,
/// `ω` given as a table indexed by `(x·|G| + y)·|G| + z`.
///
/// Unitors are `λ_y = ω(e,e,y)^{-1}` and `ρ_x = ω(x,e,e)`, which makes the
/// triangle a consequence of the cocycle identity.
pub fn skeletal_group_category(g: &FiniteGroup, u: &FiniteGroup, omega: &[usize]) -> Result<MonoidalStructure> {
    let n = g.order();
    let k = u.order();
    if omega.len() != n * n * n || omega.iter().any(|&v| v >= k) {
        return Err(Error::structural(format!(
            "cocycle table must have {} entries in {}",
            n * n * n,
            u.name()
        )));
    }
    let base = skeletal_base(g, u)?;
    let mor = |a: usize, v: usize| Mor(a * k + v);
    let om = |x: usize, y: usize, z: usize| omega[(x * n + y) * n + z];
    let tensor_obj = (0..n).flat_map(|x| (0..n).map(move |y| Obj(g.mul(x, y)))).collect();
    let m = n * k;
    let mut tensor_mor = Vec::with_capacity(m * m);
    for f in 0..m {
        for h in 0..m {
            let (a, x) = (f / k, f % k);
            let (b, y) = (h / k, h % k);
            tensor_mor.push(mor(g.mul(a, b), u.mul(x, y)));
        }
    }
    let mut associator = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                associator.push(mor(g.mul(g.mul(x, y), z), om(x, y, z)));
            }
        }
    }
    let e = g.identity();
    let left_unitor = (0..n).map(|y| mor(y, u.inv(om(e, e, y)))).collect();
    let right_unitor = (0..n).map(|x| mor(x, om(x, e, e))).collect();
    MonoidalStructure::new(
        base,
        tensor_obj,
        tensor_mor,
        Obj(e),
        associator,
        left_unitor,
        right_unitor,
    )
}

/// The discrete strict monoidal category on a group.
pub fn discrete_group_category(g: &FiniteGroup) -> MonoidalStructure {
    let n = g.order();
    skeletal_group_category(g, &FiniteGroup::trivial(), &vec![0; n * n * n]).expect("discrete group category")
}

/// The trivial cocycle table.
pub fn trivial_cocycle(g: &FiniteGroup, u: &FiniteGroup) -> Vec<usize> {
    vec![u.identity(); g.order().pow(3)]
}

/// `β_{a,b} = c(a,b)` on a skeletal category over an abelian group, `c`
/// indexed by `a·|G| + b`.
pub fn bicharacter_braiding(
    s: Arc<MonoidalStructure>,
    g: &FiniteGroup,
    u: &FiniteGroup,
    c: &[usize],
) -> Result<Braiding> {
    let n = g.order();
    let k = u.order();
    if !g.is_abelian() {
        return Err(Error::structural(format!("{} is not abelian", g.name())));
    }
    if s.base().object_count() != n || s.base().morphism_count() != n * k {
        return Err(Error::mismatch(format!(
            "braiding data over {}, {} does not fit {}",
            g.name(),
            u.name(),
            s.base().name()
        )));
    }
    if c.len() != n * n || c.iter().any(|&v| v >= k) {
        return Err(Error::structural("braiding table malformed"));
    }
    let beta = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| Mor(g.mul(a, b) * k + c[a * n + b]))
        .collect();
    Braiding::new(s, beta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoidal::{check_braiding, check_monoidal, is_symmetric};

    fn z(n: usize) -> FiniteGroup {
        FiniteGroup::cyclic(n)
    }

    // ω on Z/2 with a single nontrivial value
    fn single(x: usize, y: usize, w: usize) -> Vec<usize> {
        let mut om = vec![0; 8];
        om[(x * 2 + y) * 2 + w] = 1;
        om
    }

    // additive coboundary check, kept independent of the library scan
    fn is_cocycle(g: &FiniteGroup, u: &FiniteGroup, om: &[usize]) -> bool {
        let n = g.order();
        let o = |x: usize, y: usize, z: usize| om[(x * n + y) * n + z];
        g.elements().all(|x| {
            g.elements().all(|y| {
                g.elements().all(|zz| {
                    g.elements().all(|w| {
                        let l = u.mul(o(x, y, g.mul(zz, w)), o(g.mul(x, y), zz, w));
                        let r = u.mul(u.mul(o(y, zz, w), o(x, g.mul(y, zz), w)), o(x, y, zz));
                        l == r
                    })
                })
            })
        })
    }

    #[test]
    fn discrete_groups_are_strict_monoidal() {
        for g in [z(2), FiniteGroup::symmetric3()] {
            let s = discrete_group_category(&g);
            assert!(check_monoidal(&s).is_ok());
            assert!(s.is_strict());
            assert_eq!(s.base().object_count(), g.order());
        }
        let t = discrete_group_category(&FiniteGroup::trivial());
        assert_eq!(t.base().object_count(), 1);
        assert_eq!(t.base().morphism_count(), 1);
    }

    #[test]
    fn nontrivial_cocycle_passes() {
        let om = single(1, 1, 1);
        assert!(is_cocycle(&z(2), &z(2), &om));
        let s = skeletal_group_category(&z(2), &z(2), &om).unwrap();
        let report = check_monoidal(&s);
        assert!(report.is_ok(), "{report}");
        assert!(!s.is_strict());
    }

    #[test]
    fn non_cocycle_fails_the_pentagon() {
        let om = single(1, 1, 0);
        assert!(!is_cocycle(&z(2), &z(2), &om));
        let s = skeletal_group_category(&z(2), &z(2), &om).unwrap();
        let report = check_monoidal(&s);
        assert!(report.has_law("pentagon"));
        // every failing quadruple involves the perturbed triple somewhere
        for v in report.violations.iter().filter(|v| v.law == "pentagon") {
            assert_eq!(v.witness.len(), 4);
        }
        assert!(report
            .violations
            .iter()
            .any(|v| v.law == "pentagon" && v.witness.windows(3).any(|w| w == [1, 1, 0])));
    }

    #[test]
    fn coherence_matches_cocycles_exhaustively() {
        // every ω: G³ → U where |U|^|G|³ is small enough to scan
        for (g, u) in [(z(2), z(2)), (z(2), z(3)), (z(1), z(5)), (z(2), z(4))] {
            let n3 = g.order().pow(3);
            let k = u.order();
            let total = k.pow(n3 as u32);
            let mut cocycles = 0;
            for code in 0..total {
                let mut c = code;
                let om: Vec<usize> = (0..n3)
                    .map(|_| {
                        let v = c % k;
                        c /= k;
                        v
                    })
                    .collect();
                let s = skeletal_group_category(&g, &u, &om).unwrap();
                let expect = is_cocycle(&g, &u, &om);
                assert_eq!(check_monoidal(&s).is_ok(), expect, "{om:?}");
                cocycles += usize::from(expect);
            }
            assert!(cocycles >= 1);
        }
    }

    #[test]
    fn bicharacter_braidings() {
        let g = z(3);
        let s = Arc::new(skeletal_group_category(&g, &g, &trivial_cocycle(&g, &g)).unwrap());
        let c: Vec<usize> = (0..9).map(|i| (i / 3 * (i % 3)) % 3).collect();
        let b = bicharacter_braiding(s.clone(), &g, &g, &c).unwrap();
        assert!(check_braiding(&b).is_ok());
        assert!(!is_symmetric(&b));
        let mut bad = vec![0; 9];
        bad[4] = 1;
        let b = bicharacter_braiding(s, &g, &g, &bad).unwrap();
        assert!(check_braiding(&b).has_law("hexagon"));

        let h = z(2);
        let s = Arc::new(skeletal_group_category(&h, &h, &trivial_cocycle(&h, &h)).unwrap());
        let b = bicharacter_braiding(s, &h, &h, &[0, 0, 0, 1]).unwrap();
        assert!(check_braiding(&b).is_ok());
        assert!(is_symmetric(&b));
        let d = Arc::new(discrete_group_category(&h));
        let id = Braiding::identity(d).unwrap();
        assert!(check_braiding(&id).is_ok() && is_symmetric(&id));
    }

    #[test]
    fn braidings_are_exactly_bicharacters() {
        for (g, u) in [(z(2), z(2)), (z(3), z(3)), (z(2), z(4))] {
            let n = g.order();
            let k = u.order();
            let s = Arc::new(skeletal_group_category(&g, &u, &trivial_cocycle(&g, &u)).unwrap());
            for code in 0..k.pow((n * n) as u32) {
                let mut rest = code;
                let c: Vec<usize> = (0..n * n)
                    .map(|_| {
                        let v = rest % k;
                        rest /= k;
                        v
                    })
                    .collect();
                let bichar = (0..n).all(|a| {
                    (0..n).all(|b| {
                        (0..n).all(|d| {
                            c[g.mul(a, b) * n + d] == u.mul(c[a * n + d], c[b * n + d])
                                && c[a * n + g.mul(b, d)] == u.mul(c[a * n + b], c[a * n + d])
                        })
                    })
                });
                let b = bicharacter_braiding(s.clone(), &g, &u, &c).unwrap();
                assert_eq!(check_braiding(&b).is_ok(), bichar, "{c:?}");
            }
        }
    }
}
