use std::sync::Arc;

use super::end::EndCategory;
use crate::error::{Error, Result};
use crate::fincat::{check_nat_trans, enumerate_nat_trans, Budget, FinCategory, Functor, Mor, NatTrans, Obj};
use crate::group::FiniteGroup;
use crate::monoidal::{check_mon_functor, discrete_group_category, MonFunctor, MonoidalStructure};
use crate::report::Report;

/// A left module: a monoidal functor from the acting category into `End(M)`.
#[derive(Clone, Debug)]
pub struct ModuleData {
    end: Arc<EndCategory>,
    action: MonFunctor,
}

impl ModuleData {
    pub fn new(end: Arc<EndCategory>, action: MonFunctor) -> Result<Self> {
        if **action.target() != **end.monoidal() {
            return Err(Error::mismatch(format!(
                "action of {} does not land in End({})",
                action.source().base().name(),
                end.carrier().name()
            )));
        }
        Ok(ModuleData { end, action })
    }

    /// An action preserving tensor and unit on the nose.
    pub fn strict(acting: Arc<MonoidalStructure>, end: Arc<EndCategory>, functor: Functor) -> Result<Self> {
        let action = MonFunctor::strict(acting, end.monoidal().clone(), functor)?;
        Self::new(end, action)
    }

    /// A strict action of a category without non-identity morphisms, given
    /// by the endofunctor assigned to each object.
    pub fn from_endofunctors(acting: Arc<MonoidalStructure>, end: Arc<EndCategory>, images: Vec<Obj>) -> Result<Self> {
        let c = acting.base().clone();
        if c.morphism_count() != c.object_count() {
            return Err(Error::structural(format!(
                "{} has non-identity morphisms; give the action on them",
                c.name()
            )));
        }
        if images.len() != c.object_count() {
            return Err(Error::structural("one endofunctor per acting object is required"));
        }
        let e = end.category().clone();
        let mors = c.morphisms().map(|f| e.identity(images[c.source(f).0])).collect();
        let functor = Functor::new(c, e, images, mors)?;
        Self::strict(acting, end, functor)
    }

    /// The module over the trivial monoidal category.
    pub fn trivial(end: Arc<EndCategory>) -> Self {
        let unit = Arc::new(discrete_group_category(&FiniteGroup::trivial()));
        let id = end.identity_functor();
        Self::from_endofunctors(unit, end, vec![id]).expect("trivial action")
    }

    pub fn acting(&self) -> &Arc<MonoidalStructure> {
        self.action.source()
    }

    pub fn carrier(&self) -> &Arc<FinCategory> {
        self.end.carrier()
    }

    pub fn end(&self) -> &Arc<EndCategory> {
        &self.end
    }

    pub fn action(&self) -> &MonFunctor {
        &self.action
    }

    /// The endofunctor `P_c` as an object of `End(M)`.
    pub fn act(&self, c: Obj) -> Obj {
        self.action.obj(c)
    }

    /// Image of `c` at the carrier object `x`.
    pub fn act_on(&self, c: Obj, x: Obj) -> Obj {
        self.end.functors().apply_obj(self.act(c), x)
    }

    /// Image of the carrier morphism `g` under `P_c`.
    pub fn act_on_mor(&self, c: Obj, g: Mor) -> Mor {
        self.end.functors().apply_mor(self.act(c), g)
    }

    /// Component at `x` of the image of the acting morphism `u`.
    pub fn act_mor_at(&self, u: Mor, x: Obj) -> Mor {
        self.end.functors().components(self.action.mor(u))[x.0]
    }

    /// Component at `x` of `γ_{c,d}: P_c∘P_d → P_{c⊗d}`.
    pub fn gamma_at(&self, c: Obj, d: Obj, x: Obj) -> Mor {
        self.end.functors().components(self.action.gamma(c, d))[x.0]
    }

    /// Component at `x` of `η: id → P_I`.
    pub fn eta_at(&self, x: Obj) -> Mor {
        self.end.functors().components(self.action.eta())[x.0]
    }
}

/// The action passes the monoidal functor laws.
pub fn check_module(m: &ModuleData) -> Report {
    check_mon_functor(m.action())
}

pub(crate) fn same_base(a: &ModuleData, b: &ModuleData) -> Result<()> {
    if **a.acting() != **b.acting() {
        return Err(Error::mismatch(format!(
            "module bases differ: {} acts on {}, {} acts on {}",
            a.acting().base().name(),
            a.carrier().name(),
            b.acting().base().name(),
            b.carrier().name()
        )));
    }
    Ok(())
}

/// A module functor `(F, ξ)` with `ξ_c: F∘P_c ⇒ Q_c∘F`, stored as
/// component lists indexed by the source carrier.
#[derive(Clone, Debug)]
pub struct ModuleFunctorData {
    source: ModuleData,
    target: ModuleData,
    functor: Functor,
    xi: Vec<Vec<Mor>>,
}

impl ModuleFunctorData {
    pub fn new(source: ModuleData, target: ModuleData, functor: Functor, xi: Vec<Vec<Mor>>) -> Result<Self> {
        same_base(&source, &target)?;
        if **functor.source() != **source.carrier() || **functor.target() != **target.carrier() {
            return Err(Error::mismatch(format!(
                "functor {} -> {} does not run between the carriers {} and {}",
                functor.source().name(),
                functor.target().name(),
                source.carrier().name(),
                target.carrier().name()
            )));
        }
        let (k, m) = (source.acting().base().object_count(), source.carrier().object_count());
        let n = target.carrier().morphism_count();
        if xi.len() != k || xi.iter().any(|c| c.len() != m || c.iter().any(|f| f.0 >= n)) {
            return Err(Error::structural("module functor: ξ table malformed"));
        }
        Ok(ModuleFunctorData {
            source,
            target,
            functor,
            xi,
        })
    }

    pub fn identity(m: &ModuleData) -> Self {
        let x = m.carrier();
        let xi = m
            .acting()
            .base()
            .objects()
            .map(|c| x.objects().map(|y| x.identity(m.act_on(c, y))).collect())
            .collect();
        Self::new(m.clone(), m.clone(), Functor::identity(x), xi).expect("identity module functor")
    }

    /// `(G, ξ^G)∘(F, ξ^F)` with `ξ_c = (ξ^G_c F)∘(G ξ^F_c)`.
    pub fn compose(g: &ModuleFunctorData, f: &ModuleFunctorData) -> Result<Self> {
        if **f.target.carrier() != **g.source.carrier() {
            return Err(Error::mismatch("module functors are not composable"));
        }
        let functor = g.functor.after(&f.functor)?;
        let p = g.target.carrier();
        let xi =
            f.xi.iter()
                .enumerate()
                .map(|(c, comps)| {
                    comps
                        .iter()
                        .enumerate()
                        .map(|(x, &h)| {
                            let fx = f.functor.obj(Obj(x));
                            p.compose(g.xi[c][fx.0], g.functor.mor(h))
                        })
                        .collect()
                })
                .collect();
        Self::new(f.source.clone(), g.target.clone(), functor, xi)
    }

    pub fn source(&self) -> &ModuleData {
        &self.source
    }

    pub fn target(&self) -> &ModuleData {
        &self.target
    }

    pub fn functor(&self) -> &Functor {
        &self.functor
    }

    pub fn xi(&self, c: Obj) -> &[Mor] {
        &self.xi[c.0]
    }

    pub fn xi_table(&self) -> &[Vec<Mor>] {
        &self.xi
    }
}

// The coherence conditions on a ξ-family, with the family supplied by lookup
// so the enumerator can test partial assignments.
struct Laws<'a> {
    src: &'a ModuleData,
    tgt: &'a ModuleData,
    f: &'a Functor,
}

impl Laws<'_> {
    fn typed(&self, c: Obj, comps: &[Mor]) -> bool {
        let n = self.tgt.carrier();
        self.src.carrier().objects().all(|x| {
            let h = comps[x.0];
            n.source(h) == self.f.obj(self.src.act_on(c, x)) && n.target(h) == self.tgt.act_on(c, self.f.obj(x))
        })
    }

    fn natural(&self, c: Obj, comps: &[Mor], g: Mor) -> bool {
        let (m, n) = (self.src.carrier(), self.tgt.carrier());
        let (x, y) = (m.source(g), m.target(g));
        let lhs = n.compose(comps[y.0], self.f.mor(self.src.act_on_mor(c, g)));
        let rhs = n.compose(self.tgt.act_on_mor(c, self.f.mor(g)), comps[x.0]);
        lhs == rhs
    }

    fn natural_in_c(&self, xi: &dyn Fn(Obj) -> Vec<Mor>, u: Mor, x: Obj) -> bool {
        let (cat, n) = (self.src.acting().base(), self.tgt.carrier());
        let (c, d) = (cat.source(u), cat.target(u));
        let lhs = n.compose(xi(d)[x.0], self.f.mor(self.src.act_mor_at(u, x)));
        let rhs = n.compose(self.tgt.act_mor_at(u, self.f.obj(x)), xi(c)[x.0]);
        lhs == rhs
    }

    fn tensor(&self, xi: &dyn Fn(Obj) -> Vec<Mor>, c: Obj, d: Obj, x: Obj) -> bool {
        let n = self.tgt.carrier();
        let cd = self.src.acting().tensor(c, d);
        let fx = self.f.obj(x);
        let lhs = n.compose(xi(cd)[x.0], self.f.mor(self.src.gamma_at(c, d, x)));
        let path = [
            xi(c)[self.src.act_on(d, x).0],
            self.tgt.act_on_mor(c, xi(d)[x.0]),
            self.tgt.gamma_at(c, d, fx),
        ];
        n.compose_path(&path) == Some(lhs)
    }

    fn unit(&self, xi: &dyn Fn(Obj) -> Vec<Mor>, x: Obj) -> bool {
        let n = self.tgt.carrier();
        let i = self.src.acting().unit();
        n.compose(xi(i)[x.0], self.f.mor(self.src.eta_at(x))) == self.tgt.eta_at(self.f.obj(x))
    }
}

/// Typing, naturality and invertibility of every `ξ_c`, naturality in `c`,
/// and compatibility with `γ` and `η` of both actions.
pub fn check_module_functor(mf: &ModuleFunctorData) -> Report {
    let laws = Laws {
        src: &mf.source,
        tgt: &mf.target,
        f: &mf.functor,
    };
    let (cat, m, n) = (mf.source.acting().base(), mf.source.carrier(), mf.target.carrier());
    let mut report = Report::new();
    for c in cat.objects() {
        let comps = mf.xi(c);
        report.require(
            laws.typed(c, comps),
            "xi-typing",
            || vec![c.0],
            || format!("ξ at {} is not F∘P ⇒ Q∘F", cat.obj_label(c)),
        );
    }
    if !report.is_ok() {
        return report;
    }
    let xi = |c: Obj| mf.xi(c).to_vec();
    for c in cat.objects() {
        for x in m.objects() {
            let h = mf.xi(c)[x.0];
            report.require(
                n.is_iso(h),
                "xi-invertible",
                || vec![c.0, x.0],
                || format!("{} is not invertible", n.mor_label(h)),
            );
        }
        for g in m.morphisms() {
            report.require(
                laws.natural(c, mf.xi(c), g),
                "xi-naturality",
                || vec![c.0, g.0],
                || format!("ξ at {} is not natural at {}", cat.obj_label(c), m.mor_label(g)),
            );
        }
    }
    for u in cat.morphisms() {
        for x in m.objects() {
            report.require(
                laws.natural_in_c(&xi, u, x),
                "xi-natural-in-c",
                || vec![u.0, x.0],
                || format!("ξ does not commute with the action of {}", cat.mor_label(u)),
            );
        }
    }
    for c in cat.objects() {
        for d in cat.objects() {
            for x in m.objects() {
                report.require(
                    laws.tensor(&xi, c, d, x),
                    "xi-tensor",
                    || vec![c.0, d.0, x.0],
                    || {
                        format!(
                            "ξ at {}⊗{} does not paste from ξ at the factors",
                            cat.obj_label(c),
                            cat.obj_label(d)
                        )
                    },
                );
            }
        }
    }
    for x in m.objects() {
        report.require(
            laws.unit(&xi, x),
            "xi-unit",
            || vec![x.0],
            || "ξ at the unit disagrees with η".to_string(),
        );
    }
    report
}

/// Every ξ-family making `f` a module functor, in lexicographic order of the
/// candidate lists.
pub fn module_structures_on(
    src: &ModuleData,
    tgt: &ModuleData,
    f: &Functor,
    budget: &Budget,
) -> Result<Vec<ModuleFunctorData>> {
    same_base(src, tgt)?;
    if **f.source() != **src.carrier() || **f.target() != **tgt.carrier() {
        return Err(Error::mismatch("functor does not run between the carriers"));
    }
    let laws = Laws { src, tgt, f };
    let (cat, m, n) = (src.acting().base(), src.carrier(), tgt.carrier());
    let candidates: Vec<Vec<Vec<Mor>>> = cat
        .objects()
        .map(|c| {
            let fp: Vec<Mor> = m.morphisms().map(|g| f.mor(src.act_on_mor(c, g))).collect();
            let qf: Vec<Mor> = m.morphisms().map(|g| tgt.act_on_mor(c, f.mor(g))).collect();
            enumerate_nat_trans(m, n, &fp, &qf)
                .into_iter()
                .filter(|comps| comps.iter().all(|&h| n.is_iso(h)))
                .collect()
        })
        .collect();
    let k = cat.object_count();
    let level = |xs: &[Obj]| xs.iter().map(|x| x.0).max().unwrap_or(0);
    let mut naturality = vec![Vec::new(); k];
    for u in cat.morphisms() {
        naturality[level(&[cat.source(u), cat.target(u)])].push(u);
    }
    let mut tensors = vec![Vec::new(); k];
    for c in cat.objects() {
        for d in cat.objects() {
            tensors[level(&[c, d, src.acting().tensor(c, d)])].push((c, d));
        }
    }
    let unit_level = src.acting().unit().0;

    let mut out = Vec::new();
    let mut choice = vec![0usize; k];
    let mut depth = 0usize;
    // depth-first search; `choice[depth]` is the next candidate to try
    while k > 0 {
        if choice[depth] >= candidates[depth].len() {
            if depth == 0 {
                break;
            }
            choice[depth] = 0;
            depth -= 1;
            choice[depth] += 1;
            continue;
        }
        let chosen = |c: Obj| candidates[c.0][choice[c.0]].clone();
        let ok = naturality[depth]
            .iter()
            .all(|&u| m.objects().all(|x| laws.natural_in_c(&chosen, u, x)))
            && tensors[depth]
                .iter()
                .all(|&(c, d)| m.objects().all(|x| laws.tensor(&chosen, c, d, x)))
            && (depth != unit_level || m.objects().all(|x| laws.unit(&chosen, x)));
        if !ok {
            choice[depth] += 1;
            continue;
        }
        if depth + 1 < k {
            depth += 1;
            continue;
        }
        if out.len() >= budget.max_objects {
            return Err(Error::Budget {
                what: "module structures".into(),
                estimate: out.len() as u128 + 1,
                cap: budget.max_objects,
            });
        }
        let xi = cat.objects().map(chosen).collect();
        out.push(ModuleFunctorData::new(src.clone(), tgt.clone(), f.clone(), xi)?);
        choice[depth] += 1;
    }
    Ok(out)
}

/// A transformation `a: F ⇒ G` between module functors with the same ends.
#[derive(Clone, Debug)]
pub struct ModuleNatTransData {
    source: ModuleFunctorData,
    target: ModuleFunctorData,
    components: Vec<Mor>,
}

impl ModuleNatTransData {
    pub fn new(source: ModuleFunctorData, target: ModuleFunctorData, components: Vec<Mor>) -> Result<Self> {
        same_base(&source.source, &target.source)?;
        if source.source.action() != target.source.action() || source.target.action() != target.target.action() {
            return Err(Error::mismatch(
                "module transformation between functors of different modules",
            ));
        }
        let n = source.target.carrier();
        if components.len() != source.source.carrier().object_count()
            || components.iter().any(|f| f.0 >= n.morphism_count())
        {
            return Err(Error::structural("module transformation: component table malformed"));
        }
        Ok(ModuleNatTransData {
            source,
            target,
            components,
        })
    }

    pub fn identity(f: &ModuleFunctorData) -> Self {
        let n = f.target.carrier();
        let comps = f
            .source
            .carrier()
            .objects()
            .map(|x| n.identity(f.functor.obj(x)))
            .collect();
        Self::new(f.clone(), f.clone(), comps).expect("identity module transformation")
    }

    pub fn source(&self) -> &ModuleFunctorData {
        &self.source
    }

    pub fn target(&self) -> &ModuleFunctorData {
        &self.target
    }

    pub fn components(&self) -> &[Mor] {
        &self.components
    }

    pub fn nat_trans(&self) -> Result<NatTrans> {
        NatTrans::new(
            self.source.functor.clone(),
            self.target.functor.clone(),
            self.components.clone(),
        )
    }
}

/// Naturality of `a` and, for every `c`, `ξ^G_c∘(a P_c) = (Q_c a)∘ξ^F_c`.
pub fn check_module_nat_trans(a: &ModuleNatTransData) -> Result<Report> {
    let mut report = Report::new();
    report.absorb("nat", check_nat_trans(&a.nat_trans()?));
    if !report.is_ok() {
        return Ok(report);
    }
    let (f, g) = (&a.source, &a.target);
    let (src, tgt) = (&f.source, &f.target);
    let (cat, m, n) = (src.acting().base(), src.carrier(), tgt.carrier());
    for c in cat.objects() {
        for x in m.objects() {
            let lhs = n.compose(g.xi(c)[x.0], a.components[src.act_on(c, x).0]);
            let rhs = n.compose(tgt.act_on_mor(c, a.components[x.0]), f.xi(c)[x.0]);
            report.require(
                lhs == rhs,
                "module-compatibility",
                || vec![c.0, x.0],
                || {
                    format!(
                        "at {} and {}: {} vs {}",
                        cat.obj_label(c),
                        m.obj_label(x),
                        n.mor_label(lhs),
                        n.mor_label(rhs)
                    )
                },
            );
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::standard::{discrete, one_object_group};
    use crate::spans::end::end_monoidal;

    fn end(c: &Arc<FinCategory>) -> Arc<EndCategory> {
        Arc::new(end_monoidal(c, &Budget::default()).unwrap())
    }

    fn find(e: &EndCategory, objs: &[usize]) -> Obj {
        let f = e.functors();
        e.category()
            .objects()
            .find(|&p| e.carrier().objects().all(|x| f.apply_obj(p, x).0 == objs[x.0]))
            .unwrap()
    }

    fn z2_swap(e: &Arc<EndCategory>) -> ModuleData {
        let z2 = Arc::new(discrete_group_category(&FiniteGroup::cyclic(2)));
        ModuleData::from_endofunctors(z2, e.clone(), vec![e.identity_functor(), find(e, &[1, 0])]).unwrap()
    }

    fn z2_trivial(e: &Arc<EndCategory>) -> ModuleData {
        let z2 = Arc::new(discrete_group_category(&FiniteGroup::cyclic(2)));
        let id = e.identity_functor();
        ModuleData::from_endofunctors(z2, e.clone(), vec![id, id]).unwrap()
    }

    #[test]
    fn swap_action_is_a_module() {
        let e = end(&discrete(2));
        assert!(check_module(&z2_swap(&e)).is_ok());
        // an action sending the generator to a constant map is not monoidal
        let z2 = Arc::new(discrete_group_category(&FiniteGroup::cyclic(2)));
        let bad = ModuleData::from_endofunctors(z2, e.clone(), vec![e.identity_functor(), find(&e, &[0, 0])]).unwrap();
        assert!(!check_module(&bad).is_ok());
    }

    #[test]
    fn structures_on_the_trivial_base() {
        let e = end(&discrete(2));
        let t = ModuleData::trivial(e.clone());
        let f = Functor::identity(&discrete(2));
        let all = module_structures_on(&t, &t, &f, &Budget::default()).unwrap();
        assert_eq!(all.len(), 1);
        assert!(check_module_functor(&all[0]).is_ok());
    }

    #[test]
    fn equivariance_decides_existence() {
        let e = end(&discrete(2));
        let (swap, triv) = (z2_swap(&e), z2_trivial(&e));
        let id = Functor::identity(&discrete(2));
        let b = Budget::default();
        assert_eq!(module_structures_on(&swap, &swap, &id, &b).unwrap().len(), 1);
        assert!(module_structures_on(&swap, &triv, &id, &b).unwrap().is_empty());
        let flip = Functor::new(discrete(2), discrete(2), vec![Obj(1), Obj(0)], vec![Mor(1), Mor(0)]).unwrap();
        let s = module_structures_on(&swap, &swap, &flip, &b).unwrap();
        assert_eq!(s.len(), 1);
        assert!(check_module_functor(&s[0]).is_ok());
    }

    #[test]
    fn characters_give_two_structures() {
        let bz2 = one_object_group(&FiniteGroup::cyclic(2));
        let e = end(&bz2);
        let triv = z2_trivial(&e);
        let all = module_structures_on(&triv, &triv, &Functor::identity(&bz2), &Budget::default()).unwrap();
        assert_eq!(all.len(), 2);
        for s in &all {
            assert!(check_module_functor(s).is_ok());
        }
    }

    #[test]
    fn composites_and_identities_are_module_functors() {
        let e = end(&discrete(2));
        let swap = z2_swap(&e);
        let flip = Functor::new(discrete(2), discrete(2), vec![Obj(1), Obj(0)], vec![Mor(1), Mor(0)]).unwrap();
        let f = module_structures_on(&swap, &swap, &flip, &Budget::default())
            .unwrap()
            .remove(0);
        let ff = ModuleFunctorData::compose(&f, &f).unwrap();
        assert!(check_module_functor(&ff).is_ok());
        assert_eq!(ff.functor(), &Functor::identity(&discrete(2)));
        let id = ModuleFunctorData::identity(&swap);
        assert!(check_module_functor(&id).is_ok());
        assert_eq!(ff.xi_table(), id.xi_table());
    }

    #[test]
    fn broken_xi_is_reported() {
        let bz2 = one_object_group(&FiniteGroup::cyclic(2));
        let e = end(&bz2);
        let t = ModuleData::trivial(e);
        let bad = ModuleFunctorData::new(t.clone(), t, Functor::identity(&bz2), vec![vec![Mor(1)]]).unwrap();
        let rep = check_module_functor(&bad);
        assert!(rep.has_law("xi-unit"));
        assert!(rep.has_law("xi-tensor"));
    }

    #[test]
    fn mismatched_bases_name_both() {
        let e = end(&discrete(2));
        let err = ModuleFunctorData::new(
            z2_swap(&e),
            ModuleData::trivial(e.clone()),
            Functor::identity(&discrete(2)),
            vec![],
        )
        .unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("module bases differ"), "{msg}");
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn module_transformation_condition() {
        let bz2 = one_object_group(&FiniteGroup::cyclic(2));
        let e = end(&bz2);
        let triv = z2_trivial(&e);
        let all = module_structures_on(&triv, &triv, &Functor::identity(&bz2), &Budget::default()).unwrap();
        // the identity components intertwine a structure only with itself
        for (i, f) in all.iter().enumerate() {
            for (j, g) in all.iter().enumerate() {
                let a = ModuleNatTransData::new(f.clone(), g.clone(), vec![Mor(0)]).unwrap();
                assert_eq!(check_module_nat_trans(&a).unwrap().is_ok(), i == j);
            }
        }
    }
}
