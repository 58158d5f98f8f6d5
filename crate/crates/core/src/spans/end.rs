use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{functor_category, Budget, FinCategory, FunctorCategory, Mor, Obj};
use crate::monoidal::MonoidalStructure;

/// `End(M)` with composition as a strict tensor: `P⊗Q = P∘Q`, and
/// `μ⊗ν` the horizontal composite `(μ⊗ν)_x = P'(ν_x)∘μ_{Q x}`.
#[derive(Clone, Debug)]
pub struct EndCategory {
    functors: FunctorCategory,
    monoidal: Arc<MonoidalStructure>,
    identity: Obj,
}

impl EndCategory {
    pub fn carrier(&self) -> &Arc<FinCategory> {
        self.functors.source()
    }

    pub fn functors(&self) -> &FunctorCategory {
        &self.functors
    }

    pub fn category(&self) -> &Arc<FinCategory> {
        self.functors.category()
    }

    pub fn monoidal(&self) -> &Arc<MonoidalStructure> {
        &self.monoidal
    }

    /// The identity endofunctor.
    pub fn identity_functor(&self) -> Obj {
        self.identity
    }
}

/// Tabulates `End(m)` and its composition tensor.
pub fn end_monoidal(m: &Arc<FinCategory>, budget: &Budget) -> Result<EndCategory> {
    let functors = functor_category(m, m, budget)?;
    let c = functors.category().clone();
    let k = c.object_count();
    let missing = || Error::structural(format!("End({}): composite not tabulated", m.name()));
    let mut tensor_obj = Vec::with_capacity(k * k);
    for p in c.objects() {
        let pk = functors.mor_map(p);
        for q in c.objects() {
            let qk = functors.mor_map(q);
            let img: Vec<Mor> = qk.iter().map(|g| pk[g.0]).collect();
            tensor_obj.push(functors.find_functor(&img).ok_or_else(missing)?);
        }
    }
    budget.check_morphisms(
        &format!("End({}) tensor", m.name()),
        (c.morphism_count() as u128).pow(2),
    )?;
    let mut tensor_mor = Vec::with_capacity(c.morphism_count().pow(2));
    for mu in c.morphisms() {
        let (p, p2) = (c.source(mu), c.target(mu));
        let mc = functors.components(mu);
        for nu in c.morphisms() {
            let (q, q2) = (c.source(nu), c.target(nu));
            let nc = functors.components(nu);
            let comps: Vec<Mor> = m
                .objects()
                .map(|x| {
                    let qx = functors.apply_obj(q, x);
                    m.compose(functors.apply_mor(p2, nc[x.0]), mc[qx.0])
                })
                .collect();
            let (s, t) = (tensor_obj[p.0 * k + q.0], tensor_obj[p2.0 * k + q2.0]);
            tensor_mor.push(functors.find_morphism(s, t, &comps).ok_or_else(missing)?);
        }
    }
    let id_map: Vec<Mor> = m.morphisms().collect();
    let identity = functors.find_functor(&id_map).ok_or_else(missing)?;
    let monoidal = MonoidalStructure::strict(c.clone(), tensor_obj, tensor_mor, identity)?;
    Ok(EndCategory {
        functors,
        monoidal: Arc::new(monoidal),
        identity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::standard::{chain, discrete, terminal};
    use crate::fincat::{check_functor, composition_functor, product_category};
    use crate::monoidal::check_monoidal;

    #[test]
    fn end_of_terminal_is_terminal() {
        let e = end_monoidal(&terminal(), &Budget::default()).unwrap();
        assert_eq!(**e.category(), *terminal());
        assert!(check_monoidal(e.monoidal()).is_ok());
    }

    #[test]
    fn end_of_arrow_is_the_three_chain() {
        let e = end_monoidal(&chain(1), &Budget::default()).unwrap();
        assert_eq!(e.category().object_count(), 3);
        assert!(check_monoidal(e.monoidal()).is_ok());
        // pointwise oracle: compose the object maps of the three monotone maps
        let f = e.functors();
        for p in e.category().objects() {
            for q in e.category().objects() {
                let t = e.monoidal().tensor(p, q);
                for x in chain(1).objects() {
                    assert_eq!(f.apply_obj(t, x), f.apply_obj(p, f.apply_obj(q, x)));
                }
            }
        }
    }

    #[test]
    fn end_of_two_points_is_the_monoid_of_maps() {
        let e = end_monoidal(&discrete(2), &Budget::default()).unwrap();
        assert_eq!(e.category().object_count(), 4);
        assert_eq!(e.category().morphism_count(), 4);
        let f = e.functors();
        let map = |p: Obj| (f.apply_obj(p, Obj(0)).0, f.apply_obj(p, Obj(1)).0);
        for p in e.category().objects() {
            for q in e.category().objects() {
                let (a, b) = (map(p), map(q));
                let pick = |i: usize| if i == 0 { a.0 } else { a.1 };
                assert_eq!(map(e.monoidal().tensor(p, q)), (pick(b.0), pick(b.1)));
            }
        }
        assert_eq!(map(e.identity_functor()), (0, 1));
    }

    #[test]
    fn tensor_agrees_with_the_composition_functor() {
        let m = chain(2);
        let b = Budget::default();
        let e = end_monoidal(&m, &b).unwrap();
        let prod = product_category(e.category(), e.category(), &b).unwrap();
        let comp = composition_functor(e.functors(), e.functors(), e.functors(), &prod).unwrap();
        assert!(check_functor(&comp).is_ok());
        let (_, t) = e.monoidal().tensor_functor(&b).unwrap();
        assert_eq!(t.obj_map(), comp.obj_map());
        assert_eq!(t.mor_map(), comp.mor_map());
        assert!(check_monoidal(e.monoidal()).is_ok());
    }
}
