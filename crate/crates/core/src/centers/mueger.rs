use std::sync::Arc;

use super::half_braiding::{install_braiding, install_monoidal, CenterCategory, Setting};
use crate::error::{Error, Result};
use crate::fincat::{full_subcategory, Budget, FinCategory, Functor, Obj};
use crate::monoidal::{Braiding, MonFunctor};

/// The Müger center: the full subcategory of objects transparent against
/// everything, with the restricted (symmetric) braiding.
pub fn mueger_center(b: &Braiding, budget: &Budget) -> Result<CenterCategory> {
    let id = MonFunctor::identity(b.monoidal());
    transparent_part(&format!("Z2({})", b.monoidal().base().name()), &id, b, budget)
}

/// `Z₂(G)`: objects of the target transparent against the image of `G`.
pub fn braided_centralizer(g: &MonFunctor, target: &Braiding, budget: &Budget) -> Result<CenterCategory> {
    let name = format!("Z2({}->{})", g.source().base().name(), g.target().base().name());
    transparent_part(&name, g, target, budget)
}

/// Objects `x` with `β_{G y,x}∘β_{x,G y} = id` for every `y`.
pub fn transparent_objects(g: &MonFunctor, target: &Braiding) -> Vec<Obj> {
    let n = g.target().base();
    let image: Vec<Obj> = g.source().base().objects().map(|y| g.obj(y)).collect();
    n.objects()
        .filter(|&x| image.iter().all(|&y| target.transparent(x, y)))
        .collect()
}

fn transparent_part(name: &str, g: &MonFunctor, target: &Braiding, budget: &Budget) -> Result<CenterCategory> {
    if **target.monoidal() != **g.target() {
        return Err(Error::mismatch(format!(
            "braiding on {} does not sit on the target {}",
            target.monoidal().base().name(),
            g.target().base().name()
        )));
    }
    let objects = transparent_objects(g, target)
        .into_iter()
        .map(|x| {
            let comps = g.source().base().objects().map(|y| target.beta(x, g.obj(y))).collect();
            (x, comps)
        })
        .collect();
    let setting = Setting::new(g, g)?;
    let mut z = setting.tabulate(name, objects, false, budget)?;
    install_monoidal(&mut z)?;
    install_braiding(&mut z, |z, a, b| target.beta(z.carrier(a), z.carrier(b)))?;
    Ok(z)
}

/// `Z₂(G;H)`: the full subcategory of the target on the union of the object
/// sets of `Z₂(G)` and `Z₂(H)`, in increasing id order, with its inclusion.
pub fn braided_intertwiner(g: &MonFunctor, h: &MonFunctor, target: &Braiding) -> Result<(Arc<FinCategory>, Functor)> {
    if **g.target() != **h.target() || **target.monoidal() != **g.target() {
        return Err(Error::mismatch(
            "braided intertwiner: functors land in different categories",
        ));
    }
    let mut objects = transparent_objects(g, target);
    objects.extend(transparent_objects(h, target));
    objects.sort();
    objects.dedup();
    let name = format!("Z2({}->{};2)", g.source().base().name(), g.target().base().name());
    full_subcategory(g.target().base(), &objects, &name)
}
