use std::sync::Arc;

use super::budget::Budget;
use super::category::{FinCategory, Mor, MorphismRecord, Obj};
use super::functor::{same_category, Functor};
use crate::error::{Error, Result};

/// The product `A × B` with dense pair indexing.
///
/// Object `(a, b)` has id `a·|obj B| + b`, morphism `(f, g)` has id
/// `f·|mor B| + g`; composition is componentwise.
#[derive(Clone, Debug)]
pub struct ProductCategory {
    left: Arc<FinCategory>,
    right: Arc<FinCategory>,
    category: Arc<FinCategory>,
}

impl ProductCategory {
    pub fn left(&self) -> &Arc<FinCategory> {
        &self.left
    }

    pub fn right(&self) -> &Arc<FinCategory> {
        &self.right
    }

    pub fn category(&self) -> &Arc<FinCategory> {
        &self.category
    }

    pub fn pair(&self, a: Obj, b: Obj) -> Obj {
        Obj(a.0 * self.right.object_count() + b.0)
    }

    pub fn pair_mor(&self, f: Mor, g: Mor) -> Mor {
        Mor(f.0 * self.right.morphism_count() + g.0)
    }

    pub fn split(&self, x: Obj) -> (Obj, Obj) {
        let n = self.right.object_count();
        (Obj(x.0 / n), Obj(x.0 % n))
    }

    pub fn split_mor(&self, f: Mor) -> (Mor, Mor) {
        let n = self.right.morphism_count();
        (Mor(f.0 / n), Mor(f.0 % n))
    }

    pub fn pr1(&self) -> Functor {
        let c = &self.category;
        let obj = c.objects().map(|x| self.split(x).0).collect();
        let mor = c.morphisms().map(|f| self.split_mor(f).0).collect();
        Functor::new(c.clone(), self.left.clone(), obj, mor).expect("product projection")
    }

    pub fn pr2(&self) -> Functor {
        let c = &self.category;
        let obj = c.objects().map(|x| self.split(x).1).collect();
        let mor = c.morphisms().map(|f| self.split_mor(f).1).collect();
        Functor::new(c.clone(), self.right.clone(), obj, mor).expect("product projection")
    }

    /// `u × v: A × B → A' × B'` for `u: A → A'`, `v: B → B'`.
    pub fn map(&self, u: &Functor, v: &Functor, into: &ProductCategory) -> Result<Functor> {
        if !same_category(u.source(), &self.left)
            || !same_category(v.source(), &self.right)
            || !same_category(u.target(), &into.left)
            || !same_category(v.target(), &into.right)
        {
            return Err(Error::mismatch("product of functors with mismatched endpoints"));
        }
        let c = &self.category;
        let obj = c
            .objects()
            .map(|x| {
                let (a, b) = self.split(x);
                into.pair(u.obj(a), v.obj(b))
            })
            .collect();
        let mor = c
            .morphisms()
            .map(|f| {
                let (g, h) = self.split_mor(f);
                into.pair_mor(u.mor(g), v.mor(h))
            })
            .collect();
        Functor::new(c.clone(), into.category.clone(), obj, mor)
    }
}

pub fn product_category(a: &Arc<FinCategory>, b: &Arc<FinCategory>, budget: &Budget) -> Result<ProductCategory> {
    let name = format!("{}x{}", a.name(), b.name());
    budget.check_objects(&name, a.object_count() as u128 * b.object_count() as u128)?;
    budget.check_morphisms(&name, a.morphism_count() as u128 * b.morphism_count() as u128)?;
    let nb_obj = b.object_count();
    let nb_mor = b.morphism_count();
    let labels = a
        .objects()
        .flat_map(|x| b.objects().map(move |y| (x, y)))
        .map(|(x, y)| format!("({},{})", a.obj_label(x), b.obj_label(y)))
        .collect();
    let records = a
        .morphisms()
        .flat_map(|f| b.morphisms().map(move |g| (f, g)))
        .map(|(f, g)| MorphismRecord {
            label: format!("({},{})", a.mor_label(f), b.mor_label(g)),
            source: Obj(a.source(f).0 * nb_obj + b.source(g).0),
            target: Obj(a.target(f).0 * nb_obj + b.target(g).0),
        })
        .collect();
    let identity = a
        .objects()
        .flat_map(|x| b.objects().map(move |y| (x, y)))
        .map(|(x, y)| Mor(a.identity(x).0 * nb_mor + b.identity(y).0))
        .collect();
    let category = FinCategory::from_fn(name, labels, records, identity, |g, f| {
        let (g1, g2) = (Mor(g.0 / nb_mor), Mor(g.0 % nb_mor));
        let (f1, f2) = (Mor(f.0 / nb_mor), Mor(f.0 % nb_mor));
        Some(Mor(a.compose(g1, f1).0 * nb_mor + b.compose(g2, f2).0))
    })?;
    Ok(ProductCategory {
        left: a.clone(),
        right: b.clone(),
        category: Arc::new(category),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::check_category;
    use crate::fincat::standard::{discrete, terminal, walking_arrow};

    #[test]
    fn products_of_small_categories() {
        let b = Budget::default();
        let a = walking_arrow();
        let p = product_category(&a, &terminal(), &b).unwrap();
        assert_eq!(**p.category(), *a);
        let d = product_category(&discrete(2), &discrete(3), &b).unwrap();
        assert_eq!(**d.category(), *discrete(6));
        let sq = product_category(&a, &a, &b).unwrap();
        assert_eq!(sq.category().object_count(), 4);
        assert_eq!(sq.category().morphism_count(), 9);
        assert!(check_category(sq.category()).is_ok());
        // commuting square: both paths (0,0) → (1,1) agree
        let c = sq.category();
        assert_eq!(c.hom(sq.pair(Obj(0), Obj(0)), sq.pair(Obj(1), Obj(1))).len(), 1);
    }

    #[test]
    fn projections_and_maps() {
        let b = Budget::default();
        let a = walking_arrow();
        let sq = product_category(&a, &a, &b).unwrap();
        let pr1 = sq.pr1();
        assert!(crate::fincat::check_functor(&pr1).is_ok());
        let id = Functor::identity(&a);
        assert_eq!(sq.map(&id, &id, &sq).unwrap(), Functor::identity(sq.category()));
        assert!(product_category(&a, &a, &Budget::with_cap(3)).is_err());
    }
}
