use std::sync::Arc;

use super::half_braiding::{half_braided, install_braiding, install_monoidal, tensor_half_braidings, CenterCategory};
use crate::error::{Error, Result};
use crate::fincat::{check_functor, product_category, same_category, Budget, Functor, Mor, Obj, ProductCategory};
use crate::monoidal::{MonFunctor, MonNatTrans, MonoidalStructure};
use crate::report::Report;

/// The Drinfeld center `Z₁(M)` with its braiding `β^{(x,βˣ)}_{(y,βʸ)} = βˣ_y`.
pub fn drinfeld_center(m: &Arc<MonoidalStructure>, budget: &Budget) -> Result<CenterCategory> {
    let id = MonFunctor::identity(m);
    let mut z = centralizer_named(&format!("Z1({})", m.base().name()), &id, budget)?;
    install_braiding(&mut z, |z, a, b| z.half_braiding(a)[z.carrier(b).0])?;
    Ok(z)
}

/// The monoidal centralizer `Z₁(G)`: objects of the target with invertible
/// half-braidings `x⊗G(y) → G(y)⊗x`, with the induced monoidal structure.
pub fn monoidal_centralizer(g: &MonFunctor, budget: &Budget) -> Result<CenterCategory> {
    let name = format!("Z1({}->{})", g.source().base().name(), g.target().base().name());
    centralizer_named(&name, g, budget)
}

fn centralizer_named(name: &str, g: &MonFunctor, budget: &Budget) -> Result<CenterCategory> {
    let mut z = half_braided(name, g, g, false, budget)?;
    install_monoidal(&mut z)?;
    Ok(z)
}

/// The monoidal intertwiner `Z₁(G;H)` with its two actions.
#[derive(Clone, Debug)]
pub struct Intertwiner {
    category: CenterCategory,
    right_acting: CenterCategory,
    left_acting: CenterCategory,
    right_domain: ProductCategory,
    right: Functor,
    left_domain: ProductCategory,
    left: Functor,
}

impl Intertwiner {
    /// `Z₁(G;H)` itself, with lax half-braidings.
    pub fn category(&self) -> &CenterCategory {
        &self.category
    }

    /// `Z₁(G)`, acting on the right.
    pub fn right_acting(&self) -> &CenterCategory {
        &self.right_acting
    }

    /// `Z₁(H)`, acting on the left.
    pub fn left_acting(&self) -> &CenterCategory {
        &self.left_acting
    }

    /// `Z₁(G;H) × Z₁(G) → Z₁(G;H)`.
    pub fn right_action(&self) -> (&ProductCategory, &Functor) {
        (&self.right_domain, &self.right)
    }

    /// `Z₁(H) × Z₁(G;H) → Z₁(G;H)`.
    pub fn left_action(&self) -> (&ProductCategory, &Functor) {
        (&self.left_domain, &self.left)
    }

    /// Right action on objects.
    pub fn act_right(&self, a: Obj, c: Obj) -> Obj {
        self.right.obj(self.right_domain.pair(a, c))
    }

    /// Left action on objects.
    pub fn act_left(&self, d: Obj, a: Obj) -> Obj {
        self.left.obj(self.left_domain.pair(d, a))
    }
}

/// `Z₁(G;H)`: lax half-braidings `x⊗G(y) → H(y)⊗x` passing naturality and
/// the intertwining hexagon; morphisms commute with the half-braidings.
/// The right `Z₁(G)`- and left `Z₁(H)`-actions are tabulated as functors.
pub fn monoidal_intertwiner(g: &MonFunctor, h: &MonFunctor, budget: &Budget) -> Result<Intertwiner> {
    let name = format!("Z1({}->{};2)", g.source().base().name(), g.target().base().name());
    let category = half_braided(&name, g, h, true, budget)?;
    let right_acting = monoidal_centralizer(g, budget)?;
    let left_acting = monoidal_centralizer(h, budget)?;
    let n = g.target().clone();
    let objs = |f: &MonFunctor| -> Vec<Obj> { f.source().base().objects().map(|y| f.obj(y)).collect() };
    let (gy, hy) = (objs(g), objs(h));

    let zc = category.category();
    let right_domain = product_category(zc, right_acting.category(), budget)?;
    let act = |a: &CenterCategory, b: &CenterCategory, x: Obj, y: Obj, p: &[Obj], q: &[Obj], r: &[Obj]| {
        let (ka, kb) = (a.key(x), b.key(y));
        let comps = tensor_half_braidings(&n, ka.0, &ka.1, kb.0, &kb.1, p, q, r)
            .ok_or_else(|| Error::structural("associator of the base is not invertible"))?;
        category.locate((n.tensor(ka.0, kb.0), comps), "action")
    };
    let rp = right_domain.category();
    let mut obj = Vec::with_capacity(rp.object_count());
    for o in rp.objects() {
        let (a, c) = right_domain.split(o);
        obj.push(act(&category, &right_acting, a, c, &gy, &hy, &gy)?);
    }
    let mut mor = Vec::with_capacity(rp.morphism_count());
    for f in rp.morphisms() {
        let (u, v) = right_domain.split_mor(f);
        let m = n.tensor_mor(category.forgetful().mor(u), right_acting.forgetful().mor(v));
        mor.push(category.lift(obj[rp.source(f).0], obj[rp.target(f).0], m, "right action")?);
    }
    let right = Functor::new(rp.clone(), zc.clone(), obj, mor)?;

    let left_domain = product_category(left_acting.category(), zc, budget)?;
    let lp = left_domain.category();
    let mut obj = Vec::with_capacity(lp.object_count());
    for o in lp.objects() {
        let (d, a) = left_domain.split(o);
        obj.push(act(&left_acting, &category, d, a, &hy, &hy, &gy)?);
    }
    let mut mor = Vec::with_capacity(lp.morphism_count());
    for f in lp.morphisms() {
        let (u, v) = left_domain.split_mor(f);
        let m = n.tensor_mor(left_acting.forgetful().mor(u), category.forgetful().mor(v));
        mor.push(category.lift(obj[lp.source(f).0], obj[lp.target(f).0], m, "left action")?);
    }
    let left = Functor::new(lp.clone(), zc.clone(), obj, mor)?;

    Ok(Intertwiner {
        category,
        right_acting,
        left_acting,
        right_domain,
        right,
        left_domain,
        left,
    })
}

/// Functoriality of both actions, and that the associators and unitors of
/// the base are morphisms `(a◁c)◁c' → a◁(c⊗c')`, `(d'⊗d)▷a → d'▷(d▷a)`,
/// `(d▷a)◁c → d▷(a◁c)`, `a◁I → a` and `I▷a → a` of the intertwiner.
pub fn check_intertwiner_actions(it: &Intertwiner) -> Report {
    let mut report = Report::new();
    report.absorb("right-action", check_functor(&it.right));
    report.absorb("left-action", check_functor(&it.left));
    if !report.is_ok() {
        return report;
    }
    let z = &it.category;
    let n = z.base();
    let (Some(rg), Some(lh)) = (it.right_acting.monoidal(), it.left_acting.monoidal()) else {
        report.push("structure", vec![], || "acting centers carry no tensor".to_string());
        return report;
    };
    let x = |a: Obj| z.carrier(a);
    let xr = |c: Obj| it.right_acting.carrier(c);
    let xl = |d: Obj| it.left_acting.carrier(d);
    let zc = z.category();
    for a in zc.objects() {
        for c in it.right_acting.category().objects() {
            for c2 in it.right_acting.category().objects() {
                let s = it.act_right(it.act_right(a, c), c2);
                let t = it.act_right(a, rg.tensor(c, c2));
                let m = n.alpha(x(a), xr(c), xr(c2));
                report.require(
                    z.find_morphism(s, t, m).is_some(),
                    "right-associativity",
                    || vec![a.0, c.0, c2.0],
                    || format!("associator at {} is not a morphism", zc.obj_label(a)),
                );
            }
        }
        let s = it.act_right(a, rg.unit());
        report.require(
            z.find_morphism(s, a, n.rho(x(a))).is_some(),
            "right-unit",
            || vec![a.0],
            || format!("right unitor at {} is not a morphism", zc.obj_label(a)),
        );
        let s = it.act_left(lh.unit(), a);
        report.require(
            z.find_morphism(s, a, n.lambda(x(a))).is_some(),
            "left-unit",
            || vec![a.0],
            || format!("left unitor at {} is not a morphism", zc.obj_label(a)),
        );
        for d in it.left_acting.category().objects() {
            for d2 in it.left_acting.category().objects() {
                let s = it.act_left(lh.tensor(d2, d), a);
                let t = it.act_left(d2, it.act_left(d, a));
                let m = n.alpha(xl(d2), xl(d), x(a));
                report.require(
                    z.find_morphism(s, t, m).is_some(),
                    "left-associativity",
                    || vec![d2.0, d.0, a.0],
                    || format!("associator at {} is not a morphism", zc.obj_label(a)),
                );
            }
            for c in it.right_acting.category().objects() {
                let s = it.act_right(it.act_left(d, a), c);
                let t = it.act_left(d, it.act_right(a, c));
                let m = n.alpha(xl(d), x(a), xr(c));
                report.require(
                    z.find_morphism(s, t, m).is_some(),
                    "bimodule",
                    || vec![d.0, a.0, c.0],
                    || format!("associator at {} is not a morphism", zc.obj_label(a)),
                );
            }
        }
    }
    report
}

/// `G_*: Z₁(M) → Z₁(G)`, `(m, βᵐ) ↦ (G m, γ^{-1}_{z,m}∘G(βᵐ_z)∘γ_{m,z})`, with
/// `γ` and `η` of `G` as its monoidal structure.
pub fn center_pushforward(g: &MonFunctor, zm: &CenterCategory, zg: &CenterCategory) -> Result<MonFunctor> {
    let (src, tgt) = structures(zm, zg)?;
    if !same_category(zm.base().base(), g.source().base()) || zg.left_functor() != g || zg.right_functor() != g {
        return Err(Error::mismatch("pushforward: centers do not match the functor"));
    }
    let n = g.target().base();
    let mc = zm.category();
    let mut obj = Vec::with_capacity(mc.object_count());
    for a in mc.objects() {
        let (m, beta) = zm.key(a);
        let comps = g
            .source()
            .base()
            .objects()
            .map(|z| n.compose_path(&[g.gamma(*m, z), g.mor(beta[z.0]), n.inverse(g.gamma(z, *m))?]))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::structural("pushforward: γ is not invertible"))?;
        obj.push(zg.locate((g.obj(*m), comps), "pushforward")?);
    }
    let mut mor = Vec::with_capacity(mc.morphism_count());
    for f in mc.morphisms() {
        let base = g.mor(zm.forgetful().mor(f));
        mor.push(zg.lift(obj[mc.source(f).0], obj[mc.target(f).0], base, "pushforward")?);
    }
    let functor = Functor::new(mc.clone(), zg.category().clone(), obj, mor)?;
    let mut mult = Vec::new();
    for a in mc.objects() {
        for b in mc.objects() {
            let s = tgt.tensor(functor.obj(a), functor.obj(b));
            let t = functor.obj(src.tensor(a, b));
            mult.push(zg.lift(s, t, g.gamma(zm.carrier(a), zm.carrier(b)), "pushforward γ")?);
        }
    }
    let unit = zg.lift(tgt.unit(), functor.obj(src.unit()), g.eta(), "pushforward η")?;
    MonFunctor::new(src, tgt, functor, mult, unit)
}

/// `G^*: Z₁(N) → Z₁(G)`, `(n, βⁿ) ↦ (n, βⁿ_{G(-)})`, strict monoidal.
pub fn center_pullback(g: &MonFunctor, zn: &CenterCategory, zg: &CenterCategory) -> Result<MonFunctor> {
    let (src, tgt) = structures(zn, zg)?;
    if !same_category(zn.base().base(), g.target().base()) || zg.left_functor() != g || zg.right_functor() != g {
        return Err(Error::mismatch("pullback: centers do not match the functor"));
    }
    let nc = zn.category();
    let mut obj = Vec::with_capacity(nc.object_count());
    for a in nc.objects() {
        let (x, beta) = zn.key(a);
        let comps: Vec<Mor> = g.source().base().objects().map(|z| beta[g.obj(z).0]).collect();
        obj.push(zg.locate((*x, comps), "pullback")?);
    }
    let functor = restrict_along(zn, zg, obj, "pullback")?;
    MonFunctor::strict(src, tgt, functor)
}

/// `φ_*: Z₁(G) → Z₁(G;H)`, `(x, β) ↦ (x, (φ⊗x)∘β)`.
pub fn nat_pushforward(phi: &MonNatTrans, zg: &CenterCategory, zgh: &CenterCategory) -> Result<Functor> {
    let n = zgh.base();
    let zc = zg.category();
    let mut obj = Vec::with_capacity(zc.object_count());
    for a in zc.objects() {
        let (x, beta) = zg.key(a);
        let comps = beta
            .iter()
            .enumerate()
            .map(|(y, &b)| n.base().compose(n.whisker_r(phi.component(Obj(y)), *x), b))
            .collect();
        obj.push(zgh.locate((*x, comps), "φ pushforward")?);
    }
    restrict_along(zg, zgh, obj, "φ pushforward")
}

/// `φ^*: Z₁(H) → Z₁(G;H)`, `(y, β) ↦ (y, β∘(y⊗φ))`.
pub fn nat_pullback(phi: &MonNatTrans, zh: &CenterCategory, zgh: &CenterCategory) -> Result<Functor> {
    let n = zgh.base();
    let zc = zh.category();
    let mut obj = Vec::with_capacity(zc.object_count());
    for a in zc.objects() {
        let (x, beta) = zh.key(a);
        let comps = beta
            .iter()
            .enumerate()
            .map(|(y, &b)| n.base().compose(b, n.whisker_l(*x, phi.component(Obj(y)))))
            .collect();
        obj.push(zgh.locate((*x, comps), "φ pullback")?);
    }
    restrict_along(zh, zgh, obj, "φ pullback")
}

// a functor between centers that is the identity on base morphisms
fn restrict_along(from: &CenterCategory, to: &CenterCategory, obj: Vec<Obj>, what: &str) -> Result<Functor> {
    let fc = from.category();
    let mut mor = Vec::with_capacity(fc.morphism_count());
    for f in fc.morphisms() {
        let base = from.forgetful().mor(f);
        mor.push(to.lift(obj[fc.source(f).0], obj[fc.target(f).0], base, what)?);
    }
    Functor::new(fc.clone(), to.category().clone(), obj, mor)
}

fn structures(a: &CenterCategory, b: &CenterCategory) -> Result<(Arc<MonoidalStructure>, Arc<MonoidalStructure>)> {
    match (a.monoidal(), b.monoidal()) {
        (Some(x), Some(y)) => Ok((x.clone(), y.clone())),
        _ => Err(Error::structural("centers carry no monoidal structure")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::standard::terminal;
    use crate::fincat::{check_category, CategoryBuilder};
    use crate::group::FiniteGroup;
    use crate::monoidal::{
        check_braiding, check_mon_functor, check_monoidal, discrete_group_category, is_symmetric,
        skeletal_group_category, trivial_cocycle,
    };

    // all tuples of components, then the laws checked directly
    fn brute_half_braidings(g: &MonFunctor, h: &MonFunctor, lax: bool) -> Vec<(Obj, Vec<Mor>)> {
        let n = g.target();
        let nb = n.base();
        let c = g.source().base();
        let mut out = Vec::new();
        for x in nb.objects() {
            let homs: Vec<Vec<Mor>> = c
                .objects()
                .map(|y| {
                    nb.hom(n.tensor(x, g.obj(y)), n.tensor(h.obj(y), x))
                        .iter()
                        .copied()
                        .filter(|&m| lax || nb.is_iso(m))
                        .collect()
                })
                .collect();
            let mut idx = vec![0usize; homs.len()];
            if homs.iter().any(|v| v.is_empty()) {
                continue;
            }
            loop {
                let beta: Vec<Mor> = idx.iter().zip(&homs).map(|(&i, v)| v[i]).collect();
                let natural = c.morphisms().all(|u| {
                    let (y, y2) = (c.source(u), c.target(u));
                    nb.compose(beta[y2.0], n.whisker_l(x, g.mor(u))) == nb.compose(n.whisker_r(h.mor(u), x), beta[y.0])
                });
                let hexagon = c.objects().all(|y| {
                    c.objects().all(|z| {
                        let yz = g.source().tensor(y, z);
                        let lhs = nb.compose_path(&[
                            n.alpha(x, g.obj(y), g.obj(z)),
                            n.whisker_l(x, g.gamma(y, z)),
                            beta[yz.0],
                            n.whisker_r(nb.inverse(h.gamma(y, z)).unwrap(), x),
                            n.alpha(h.obj(y), h.obj(z), x),
                        ]);
                        let rhs = nb.compose_path(&[
                            n.whisker_r(beta[y.0], g.obj(z)),
                            n.alpha(h.obj(y), x, g.obj(z)),
                            n.whisker_l(h.obj(y), beta[z.0]),
                        ]);
                        lhs.is_some() && lhs == rhs
                    })
                });
                if natural && hexagon {
                    out.push((x, beta));
                }
                let mut i = 0;
                while i < idx.len() {
                    idx[i] += 1;
                    if idx[i] < homs[i].len() {
                        break;
                    }
                    idx[i] = 0;
                    i += 1;
                }
                if i == idx.len() {
                    break;
                }
            }
        }
        out.sort();
        out
    }

    fn keys_sorted(z: &CenterCategory) -> Vec<(Obj, Vec<Mor>)> {
        let mut k = z.keys().to_vec();
        k.sort();
        k
    }

    #[test]
    fn drinfeld_center_counts_match_group_centers() {
        let groups = [
            (FiniteGroup::cyclic(2), 2),
            (FiniteGroup::cyclic(3), 3),
            (FiniteGroup::cyclic(4), 4),
            (FiniteGroup::klein(), 4),
            (FiniteGroup::symmetric3(), 1),
            (FiniteGroup::dihedral(4), 2),
            (FiniteGroup::quaternion(), 2),
        ];
        for (g, expected) in groups {
            let m = Arc::new(discrete_group_category(&g));
            let z = drinfeld_center(&m, &Budget::default()).unwrap();
            let id = MonFunctor::identity(&m);
            assert_eq!(keys_sorted(&z), brute_half_braidings(&id, &id, false));
            assert_eq!(z.object_count(), g.center().len());
            assert_eq!(z.object_count(), expected, "{}", g.name());
            let b = z.braiding().unwrap();
            assert!(check_braiding(b).is_ok());
            assert!(check_monoidal(z.monoidal().unwrap()).is_ok());
        }
    }

    #[test]
    fn drinfeld_center_of_discrete_z2_is_symmetric() {
        let m = Arc::new(discrete_group_category(&FiniteGroup::cyclic(2)));
        let z = drinfeld_center(&m, &Budget::default()).unwrap();
        assert_eq!(z.object_count(), 2);
        assert!(is_symmetric(z.braiding().unwrap()));
        assert!(z
            .braiding()
            .unwrap()
            .table()
            .iter()
            .all(|&f| z.category().is_identity(f)));
    }

    #[test]
    fn drinfeld_center_of_terminal_is_terminal() {
        let m = Arc::new(discrete_group_category(&FiniteGroup::trivial()));
        let z = drinfeld_center(&m, &Budget::default()).unwrap();
        assert_eq!(**z.category(), *terminal());
    }

    #[test]
    fn skeletal_center_has_characters_as_half_braidings() {
        let g = FiniteGroup::cyclic(2);
        let m = Arc::new(skeletal_group_category(&g, &g, &trivial_cocycle(&g, &g)).unwrap());
        let z = drinfeld_center(&m, &Budget::default()).unwrap();
        let id = MonFunctor::identity(&m);
        assert_eq!(keys_sorted(&z), brute_half_braidings(&id, &id, false));
        assert_eq!(z.object_count(), 4);
        assert!(check_category(z.category()).is_ok());
        assert!(check_monoidal(z.monoidal().unwrap()).is_ok());
        assert!(check_braiding(z.braiding().unwrap()).is_ok());
    }

    #[test]
    fn centralizer_of_identity_is_the_center() {
        let g = FiniteGroup::cyclic(2);
        let mut om = vec![0; 8];
        om[7] = 1;
        let m = Arc::new(skeletal_group_category(&g, &g, &om).unwrap());
        let z = drinfeld_center(&m, &Budget::default()).unwrap();
        let c = monoidal_centralizer(&MonFunctor::identity(&m), &Budget::default()).unwrap();
        assert_eq!(z.category(), c.category());
        assert_eq!(z.keys(), c.keys());
        assert_eq!(**z.monoidal().unwrap(), **c.monoidal().unwrap());
        assert!(check_braiding(z.braiding().unwrap()).is_ok());
    }

    #[test]
    fn centralizer_of_unit_inclusion() {
        let g = FiniteGroup::cyclic(2);
        let n = Arc::new(skeletal_group_category(&g, &g, &trivial_cocycle(&g, &g)).unwrap());
        let t = Arc::new(discrete_group_category(&FiniteGroup::trivial()));
        let inc = Functor::new(t.base().clone(), n.base().clone(), vec![n.unit()], vec![Mor(0)]).unwrap();
        let g = MonFunctor::strict(t, n.clone(), inc).unwrap();
        assert!(check_mon_functor(&g).is_ok());
        let z = monoidal_centralizer(&g, &Budget::default()).unwrap();
        assert_eq!(keys_sorted(&z), brute_half_braidings(&g, &g, false));
        // the unit condition pins each component to the canonical one
        assert_eq!(z.object_count(), n.base().object_count());
        assert!(check_monoidal(z.monoidal().unwrap()).is_ok());
    }

    fn idempotent_monoid() -> Arc<MonoidalStructure> {
        let mut b = CategoryBuilder::new("{1,e}");
        let o = b.object("*");
        let e = b.morphism("e", o, o);
        b.compose(e, e, e);
        let c = Arc::new(b.build().unwrap());
        let tm = vec![Mor(0), Mor(1), Mor(1), Mor(1)];
        Arc::new(MonoidalStructure::strict(c, vec![Obj(0)], tm, Obj(0)).unwrap())
    }

    #[test]
    fn lax_intertwiner_strictly_contains_the_centralizer() {
        let m = idempotent_monoid();
        assert!(check_monoidal(&m).is_ok());
        let id = MonFunctor::identity(&m);
        let it = monoidal_intertwiner(&id, &id, &Budget::default()).unwrap();
        let z = it.category();
        assert_eq!(keys_sorted(z), brute_half_braidings(&id, &id, true));
        assert_eq!(z.object_count(), 2);
        let c = monoidal_centralizer(&id, &Budget::default()).unwrap();
        assert_eq!(c.object_count(), 1);
        let inv: Vec<_> = z.invertible_objects().iter().map(|&a| z.key(a).clone()).collect();
        assert_eq!(inv, c.keys().to_vec());
        let rep = check_intertwiner_actions(&it);
        assert!(rep.is_ok(), "{rep}");
    }

    #[test]
    fn intertwiner_of_identities_on_discrete_is_the_center() {
        let m = Arc::new(discrete_group_category(&FiniteGroup::symmetric3()));
        let id = MonFunctor::identity(&m);
        let it = monoidal_intertwiner(&id, &id, &Budget::default()).unwrap();
        let z = drinfeld_center(&m, &Budget::default()).unwrap();
        assert_eq!(it.category().category(), z.category());
        assert_eq!(it.category().keys(), z.keys());
        assert!(check_intertwiner_actions(&it).is_ok());
    }

    #[test]
    fn intertwiner_into_terminal_is_terminal() {
        let g = FiniteGroup::cyclic(3);
        let m = Arc::new(discrete_group_category(&g));
        let t = Arc::new(discrete_group_category(&FiniteGroup::trivial()));
        let f = Functor::constant(m.base(), t.base(), Obj(0));
        let f = MonFunctor::strict(m, t, f).unwrap();
        let it = monoidal_intertwiner(&f, &f, &Budget::default()).unwrap();
        assert_eq!(**it.category().category(), *terminal());
    }

    #[test]
    fn intertwiner_actions_on_twisted_functors() {
        let g = FiniteGroup::cyclic(2);
        let s = Arc::new(skeletal_group_category(&g, &g, &trivial_cocycle(&g, &g)).unwrap());
        let id = MonFunctor::identity(&s);
        let tw = MonFunctor::new(
            s.clone(),
            s.clone(),
            Functor::identity(s.base()),
            vec![Mor(0), Mor(2), Mor(2), Mor(1)],
            Mor(0),
        )
        .unwrap();
        assert!(check_mon_functor(&tw).is_ok());
        let it = monoidal_intertwiner(&id, &tw, &Budget::default()).unwrap();
        assert_eq!(keys_sorted(it.category()), brute_half_braidings(&id, &tw, true));
        let rep = check_intertwiner_actions(&it);
        assert!(rep.is_ok(), "{rep}");
    }

    #[test]
    fn induced_functors_on_centers_are_monoidal() {
        let g = FiniteGroup::cyclic(2);
        let z4 = FiniteGroup::cyclic(4);
        let m = Arc::new(discrete_group_category(&g));
        let n = Arc::new(discrete_group_category(&z4));
        let f = Functor::new(
            m.base().clone(),
            n.base().clone(),
            vec![Obj(0), Obj(2)],
            vec![Mor(0), Mor(2)],
        )
        .unwrap();
        let f = MonFunctor::strict(m.clone(), n.clone(), f).unwrap();
        let b = Budget::default();
        let (zm, zn, zf) = (
            drinfeld_center(&m, &b).unwrap(),
            drinfeld_center(&n, &b).unwrap(),
            monoidal_centralizer(&f, &b).unwrap(),
        );
        let push = center_pushforward(&f, &zm, &zf).unwrap();
        let pull = center_pullback(&f, &zn, &zf).unwrap();
        assert!(check_mon_functor(&push).is_ok());
        assert!(check_mon_functor(&pull).is_ok());
        let phi = MonNatTrans::identity(&f);
        let zgh = monoidal_intertwiner(&f, &f, &b).unwrap();
        let p1 = nat_pushforward(&phi, &zf, zgh.category()).unwrap();
        let p2 = nat_pullback(&phi, &zf, zgh.category()).unwrap();
        assert!(check_functor(&p1).is_ok());
        assert_eq!(p1, p2);
    }
}
