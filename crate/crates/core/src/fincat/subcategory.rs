use std::sync::Arc;

use super::category::{FinCategory, Mor, MorphismRecord, Obj};
use super::functor::Functor;
use crate::error::{Error, Result};

/// The full subcategory on `objects` (in the given order) and its inclusion.
pub fn full_subcategory(c: &Arc<FinCategory>, objects: &[Obj], name: &str) -> Result<(Arc<FinCategory>, Functor)> {
    let mut pos = vec![None; c.object_count()];
    for (i, &x) in objects.iter().enumerate() {
        if x.0 >= c.object_count() || pos[x.0].replace(i).is_some() {
            return Err(Error::structural(format!(
                "{name}: object list must be distinct ids of {}",
                c.name()
            )));
        }
    }
    let mut records = Vec::new();
    let mut mor_map = Vec::new();
    let mut local = vec![None; c.morphism_count()];
    for (i, &x) in objects.iter().enumerate() {
        for (j, &y) in objects.iter().enumerate() {
            for &f in c.hom(x, y) {
                local[f.0] = Some(Mor(records.len()));
                records.push(MorphismRecord {
                    label: c.mor_label(f).to_string(),
                    source: Obj(i),
                    target: Obj(j),
                });
                mor_map.push(f);
            }
        }
    }
    let labels = objects.iter().map(|&x| c.obj_label(x).to_string()).collect();
    let ids = objects
        .iter()
        .map(|&x| local[c.identity(x).0].expect("identity lies in the subcategory"))
        .collect();
    let sub = FinCategory::from_fn(name, labels, records, ids, |g, f| {
        local[c.compose(mor_map[g.0], mor_map[f.0]).0]
    })?;
    let sub = Arc::new(sub);
    let inclusion = Functor::new(sub.clone(), c.clone(), objects.to_vec(), mor_map)?;
    Ok((sub, inclusion))
}
