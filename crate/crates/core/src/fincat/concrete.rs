use std::collections::HashMap;
use std::hash::Hash;
use std::sync::Arc;

use super::budget::Budget;
use super::category::{FinCategory, Mor, MorphismRecord, Obj};
use crate::error::{Error, Result};

/// A finite category whose objects and morphisms carry structured keys.
///
/// Every constructed category in the crate (functor categories, fiber
/// products, centers, spans) is tabulated through this type: objects are
/// keyed by `O`, morphisms by `(source, target, M)`, and composition is
/// computed on keys and looked back up.
#[derive(Clone, Debug)]
pub struct Concrete<O, M> {
    category: Arc<FinCategory>,
    objects: Vec<O>,
    obj_index: HashMap<O, Obj>,
    morphisms: Vec<M>,
    mor_index: HashMap<(Obj, Obj, M), Mor>,
}

/// Callbacks describing a keyed category.
pub struct ConcreteSpec<HomFn, IdFn, CompFn, OLabel, MLabel> {
    pub hom: HomFn,
    pub identity: IdFn,
    pub compose: CompFn,
    pub obj_label: OLabel,
    pub mor_label: MLabel,
}

impl<O, M> Concrete<O, M>
where
    O: Clone + Eq + Hash,
    M: Clone + Eq + Hash,
{
    /// Tabulates the category. `hom(x, y)` lists morphism keys in the order
    /// they receive ids; `compose(g, f)` is the key of `g∘f`.
    pub fn build<HomFn, IdFn, CompFn, OLabel, MLabel>(
        name: &str,
        objects: Vec<O>,
        budget: &Budget,
        spec: ConcreteSpec<HomFn, IdFn, CompFn, OLabel, MLabel>,
    ) -> Result<Self>
    where
        HomFn: FnMut(&O, &O) -> Result<Vec<M>>,
        IdFn: Fn(&O) -> M,
        CompFn: Fn(&M, &M) -> M,
        OLabel: Fn(&O) -> String,
        MLabel: Fn(&M) -> String,
    {
        let ConcreteSpec {
            mut hom,
            identity,
            compose,
            obj_label,
            mor_label,
        } = spec;
        budget.check_objects(name, objects.len() as u128)?;
        let mut obj_index = HashMap::with_capacity(objects.len());
        for (i, o) in objects.iter().enumerate() {
            if obj_index.insert(o.clone(), Obj(i)).is_some() {
                return Err(Error::structural(format!("{name}: duplicate object key")));
            }
        }
        let mut records = Vec::new();
        let mut morphisms = Vec::new();
        let mut mor_index = HashMap::new();
        for (i, x) in objects.iter().enumerate() {
            for (j, y) in objects.iter().enumerate() {
                for key in hom(x, y)? {
                    let id = Mor(morphisms.len());
                    if mor_index.insert((Obj(i), Obj(j), key.clone()), id).is_some() {
                        return Err(Error::structural(format!("{name}: duplicate morphism key")));
                    }
                    records.push(MorphismRecord {
                        label: mor_label(&key),
                        source: Obj(i),
                        target: Obj(j),
                    });
                    morphisms.push(key);
                }
                budget.check_morphisms(name, morphisms.len() as u128)?;
            }
        }
        let mut ids = Vec::with_capacity(objects.len());
        for (i, x) in objects.iter().enumerate() {
            let key = identity(x);
            let id = mor_index.get(&(Obj(i), Obj(i), key)).copied().ok_or_else(|| {
                Error::structural(format!(
                    "{name}: identity of {} is not among its endomorphisms",
                    obj_label(x)
                ))
            })?;
            ids.push(id);
        }
        let labels = objects.iter().map(&obj_label).collect();
        let mut missing = None;
        let category = FinCategory::from_fn(name, labels, records.clone(), ids, |g, f| {
            let key = compose(&morphisms[g.0], &morphisms[f.0]);
            let found = mor_index.get(&(records[f.0].source, records[g.0].target, key)).copied();
            if found.is_none() && missing.is_none() {
                missing = Some((g, f));
            }
            found
        });
        let category = match (category, missing) {
            (Ok(c), _) => c,
            (Err(_), Some((g, f))) => {
                return Err(Error::structural(format!(
                    "{name}: composite of {} after {} is not a morphism of the construction",
                    records[g.0].label, records[f.0].label
                )))
            }
            (Err(e), None) => return Err(e),
        };
        Ok(Concrete {
            category: Arc::new(category),
            objects,
            obj_index,
            morphisms,
            mor_index,
        })
    }

    pub fn category(&self) -> &Arc<FinCategory> {
        &self.category
    }

    pub fn object_key(&self, x: Obj) -> &O {
        &self.objects[x.0]
    }

    pub fn morphism_key(&self, f: Mor) -> &M {
        &self.morphisms[f.0]
    }

    pub fn object_keys(&self) -> &[O] {
        &self.objects
    }

    pub fn find_object(&self, key: &O) -> Option<Obj> {
        self.obj_index.get(key).copied()
    }

    pub fn find_morphism(&self, source: Obj, target: Obj, key: &M) -> Option<Mor> {
        self.mor_index.get(&(source, target, key.clone())).copied()
    }
}
