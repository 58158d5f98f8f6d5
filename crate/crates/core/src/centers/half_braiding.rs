use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{Budget, Concrete, ConcreteSpec, FinCategory, Functor, Mor, Obj};
use crate::monoidal::{paths_agree, Braiding, MonFunctor, MonoidalStructure};

/// Object key of a center: a carrier and one component per object of the
/// indexing category.
pub type HalfBraiding = (Obj, Vec<Mor>);

/// A category of objects with (possibly lax) half-braidings
/// `β_y: x⊗G(y) → H(y)⊗x`, together with the forgetful functor to the base.
#[derive(Clone, Debug)]
pub struct CenterCategory {
    table: Concrete<HalfBraiding, Mor>,
    g: MonFunctor,
    h: MonFunctor,
    lax: bool,
    forgetful: Functor,
    monoidal: Option<Arc<MonoidalStructure>>,
    braiding: Option<Braiding>,
}

impl CenterCategory {
    pub fn category(&self) -> &Arc<FinCategory> {
        self.table.category()
    }

    pub fn object_count(&self) -> usize {
        self.category().object_count()
    }

    /// The monoidal category the carriers live in.
    pub fn base(&self) -> &Arc<MonoidalStructure> {
        self.g.target()
    }

    /// The functor `G` on the source side of the half-braidings.
    pub fn left_functor(&self) -> &MonFunctor {
        &self.g
    }

    /// The functor `H` on the target side of the half-braidings.
    pub fn right_functor(&self) -> &MonFunctor {
        &self.h
    }

    pub fn is_lax(&self) -> bool {
        self.lax
    }

    pub fn forgetful(&self) -> &Functor {
        &self.forgetful
    }

    pub fn monoidal(&self) -> Option<&Arc<MonoidalStructure>> {
        self.monoidal.as_ref()
    }

    pub fn braiding(&self) -> Option<&Braiding> {
        self.braiding.as_ref()
    }

    pub fn key(&self, a: Obj) -> &HalfBraiding {
        self.table.object_key(a)
    }

    pub fn keys(&self) -> &[HalfBraiding] {
        self.table.object_keys()
    }

    pub fn carrier(&self, a: Obj) -> Obj {
        self.key(a).0
    }

    pub fn half_braiding(&self, a: Obj) -> &[Mor] {
        &self.key(a).1
    }

    pub fn find(&self, x: Obj, components: &[Mor]) -> Option<Obj> {
        self.table.find_object(&(x, components.to_vec()))
    }

    pub fn find_morphism(&self, from: Obj, to: Obj, f: Mor) -> Option<Mor> {
        self.table.find_morphism(from, to, &f)
    }

    /// Objects whose every component is invertible.
    pub fn invertible_objects(&self) -> Vec<Obj> {
        let n = self.base().base();
        self.category()
            .objects()
            .filter(|&a| self.half_braiding(a).iter().all(|&b| n.is_iso(b)))
            .collect()
    }

    pub(crate) fn lift(&self, from: Obj, to: Obj, f: Mor, what: &str) -> Result<Mor> {
        self.find_morphism(from, to, f).ok_or_else(|| {
            Error::structural(format!(
                "{what}: {} is not a morphism of {}",
                self.base().base().mor_label(f),
                self.category().name()
            ))
        })
    }

    pub(crate) fn locate(&self, key: HalfBraiding, what: &str) -> Result<Obj> {
        let n = self.base().base();
        let label = n.obj_label(key.0).to_string();
        self.table.find_object(&key).ok_or_else(|| {
            Error::structural(format!(
                "{what}: half-braided object on {label} is not in {}",
                self.category().name()
            ))
        })
    }

    pub(crate) fn set_monoidal(&mut self, m: Arc<MonoidalStructure>) {
        self.monoidal = Some(m);
    }

    pub(crate) fn set_braiding(&mut self, b: Braiding) {
        self.braiding = Some(b);
    }
}

/// The functors a half-braiding intertwines, with the laws it must satisfy.
pub(crate) struct Setting<'a> {
    pub g: &'a MonFunctor,
    pub h: &'a MonFunctor,
    h_gamma_inv: Vec<Option<Mor>>,
}

impl<'a> Setting<'a> {
    pub fn new(g: &'a MonFunctor, h: &'a MonFunctor) -> Result<Self> {
        if **g.source() != **h.source() || **g.target() != **h.target() {
            return Err(Error::mismatch(format!(
                "intertwined functors differ in shape: {} -> {} vs {} -> {}",
                g.source().base().name(),
                g.target().base().name(),
                h.source().base().name(),
                h.target().base().name()
            )));
        }
        let n = h.target().base();
        let h_gamma_inv = h.mult_table().iter().map(|&m| n.inverse(m)).collect();
        Ok(Setting { g, h, h_gamma_inv })
    }

    fn n(&self) -> &MonoidalStructure {
        self.g.target()
    }

    fn c(&self) -> &Arc<FinCategory> {
        self.g.source().base()
    }

    /// `(H(u)⊗x)∘β_y = β_{y'}∘(x⊗G(u))` for `u: y → y'`.
    pub fn natural(&self, x: Obj, u: Mor, by: Mor, by2: Mor) -> bool {
        let n = self.n();
        paths_agree(
            n.base(),
            &[n.whisker_l(x, self.g.mor(u)), by2],
            &[by, n.whisker_r(self.h.mor(u), x)],
        )
    }

    /// The intertwining hexagon at `(y, z)`.
    #[allow(clippy::too_many_arguments)]
    pub fn hexagon(&self, x: Obj, y: Obj, z: Obj, by: Mor, bz: Mor, byz: Mor) -> bool {
        let n = self.n();
        let k = self.c().object_count();
        let Some(hinv) = self.h_gamma_inv[y.0 * k + z.0] else {
            return false;
        };
        let (g, h) = (self.g, self.h);
        let lhs = [
            n.alpha(x, g.obj(y), g.obj(z)),
            n.whisker_l(x, g.gamma(y, z)),
            byz,
            n.whisker_r(hinv, x),
            n.alpha(h.obj(y), h.obj(z), x),
        ];
        let rhs = [
            n.whisker_r(by, g.obj(z)),
            n.alpha(h.obj(y), x, g.obj(z)),
            n.whisker_l(h.obj(y), bz),
        ];
        paths_agree(n.base(), &lhs, &rhs)
    }

    /// `β'_z∘(f⊗G(z)) = (H(z)⊗f)∘β_z` for every `z`.
    pub fn commutes(&self, f: Mor, src: &[Mor], tgt: &[Mor]) -> bool {
        let n = self.n();
        self.c().objects().all(|z| {
            paths_agree(
                n.base(),
                &[n.whisker_r(f, self.g.obj(z)), tgt[z.0]],
                &[src[z.0], n.whisker_l(self.h.obj(z), f)],
            )
        })
    }

    /// Every (lax if requested) half-braiding on `x`, in lexicographic order
    /// of component ids. Components are chosen one object at a time; a
    /// naturality square or hexagon is tested as soon as all of its
    /// components are assigned.
    pub fn enumerate(&self, x: Obj, lax: bool, limit: usize) -> Result<Vec<Vec<Mor>>> {
        let n = self.n();
        let nb = n.base();
        let c = self.c();
        let k = c.object_count();
        let candidates: Vec<Vec<Mor>> = c
            .objects()
            .map(|y| {
                nb.hom(n.tensor(x, self.g.obj(y)), n.tensor(self.h.obj(y), x))
                    .iter()
                    .copied()
                    .filter(|&m| lax || nb.is_iso(m))
                    .collect()
            })
            .collect();
        let mut nat_at = vec![Vec::new(); k];
        for u in c.morphisms() {
            if !c.is_identity(u) {
                let level = c.source(u).0.max(c.target(u).0);
                nat_at[level].push(u);
            }
        }
        let mut hex_at = vec![Vec::new(); k];
        let s = self.g.source();
        for y in c.objects() {
            for z in c.objects() {
                let level = y.0.max(z.0).max(s.tensor(y, z).0);
                hex_at[level].push((y, z));
            }
        }
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(k);
        self.search(x, &candidates, &nat_at, &hex_at, &mut current, &mut out, limit)?;
        Ok(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn search(
        &self,
        x: Obj,
        candidates: &[Vec<Mor>],
        nat_at: &[Vec<Mor>],
        hex_at: &[Vec<(Obj, Obj)>],
        current: &mut Vec<Mor>,
        out: &mut Vec<Vec<Mor>>,
        limit: usize,
    ) -> Result<()> {
        let level = current.len();
        if level == candidates.len() {
            if out.len() >= limit {
                return Err(Error::Budget {
                    what: "half-braidings (objects)".to_string(),
                    estimate: out.len() as u128 + 1,
                    cap: limit,
                });
            }
            out.push(current.clone());
            return Ok(());
        }
        let c = self.c();
        let s = self.g.source();
        for &b in &candidates[level] {
            current.push(b);
            let ok = nat_at[level]
                .iter()
                .all(|&u| self.natural(x, u, current[c.source(u).0], current[c.target(u).0]))
                && hex_at[level]
                    .iter()
                    .all(|&(y, z)| self.hexagon(x, y, z, current[y.0], current[z.0], current[s.tensor(y, z).0]));
            if ok {
                self.search(x, candidates, nat_at, hex_at, current, out, limit)?;
            }
            current.pop();
        }
        Ok(())
    }

    /// Tabulates the category on the given objects, with morphisms the base
    /// morphisms commuting with the half-braidings.
    pub fn tabulate(
        &self,
        name: &str,
        objects: Vec<HalfBraiding>,
        lax: bool,
        budget: &Budget,
    ) -> Result<CenterCategory> {
        let n = self.n();
        let nb = n.base();
        let table = Concrete::build(
            name,
            objects,
            budget,
            ConcreteSpec {
                hom: |a: &HalfBraiding, b: &HalfBraiding| {
                    Ok(nb
                        .hom(a.0, b.0)
                        .iter()
                        .copied()
                        .filter(|&f| self.commutes(f, &a.1, &b.1))
                        .collect())
                },
                identity: |a: &HalfBraiding| nb.identity(a.0),
                compose: |g: &Mor, f: &Mor| nb.compose(*g, *f),
                obj_label: |a: &HalfBraiding| {
                    let comps: Vec<&str> = a.1.iter().map(|&m| nb.mor_label(m)).collect();
                    format!("({};{})", nb.obj_label(a.0), comps.join(","))
                },
                mor_label: |f: &Mor| nb.mor_label(*f).to_string(),
            },
        )?;
        let cat = table.category().clone();
        let forgetful = Functor::new(
            cat.clone(),
            nb.clone(),
            table.object_keys().iter().map(|a| a.0).collect(),
            cat.morphisms().map(|f| *table.morphism_key(f)).collect(),
        )?;
        Ok(CenterCategory {
            table,
            g: self.g.clone(),
            h: self.h.clone(),
            lax,
            forgetful,
            monoidal: None,
            braiding: None,
        })
    }
}

/// All objects with (lax) half-braidings intertwining `g` and `h`.
pub(crate) fn half_braided(
    name: &str,
    g: &MonFunctor,
    h: &MonFunctor,
    lax: bool,
    budget: &Budget,
) -> Result<CenterCategory> {
    let setting = Setting::new(g, h)?;
    let mut objects = Vec::new();
    for x in g.target().base().objects() {
        let remaining = budget.max_objects.saturating_sub(objects.len());
        let found = setting.enumerate(x, lax, remaining).map_err(|e| match e {
            Error::Budget { .. } => Error::Budget {
                what: format!("{name} (objects)"),
                estimate: budget.max_objects as u128 + 1,
                cap: budget.max_objects,
            },
            e => e,
        })?;
        objects.extend(found.into_iter().map(|b| (x, b)));
    }
    setting.tabulate(name, objects, lax, budget)
}

/// The half-braiding on `x⊗c` built from `β: x⊗P(y) → Q(y)⊗x` and
/// `δ: c⊗R(y) → P(y)⊗c`:
/// `α_{Q y,x,c}∘(β_y⊗c)∘α^{-1}_{x,P y,c}∘(x⊗δ_y)∘α_{x,c,R y}`.
#[allow(clippy::too_many_arguments)]
pub(crate) fn tensor_half_braidings(
    n: &MonoidalStructure,
    x: Obj,
    beta: &[Mor],
    c: Obj,
    delta: &[Mor],
    p: &[Obj],
    q: &[Obj],
    r: &[Obj],
) -> Option<Vec<Mor>> {
    let nb = n.base();
    (0..beta.len())
        .map(|y| {
            nb.compose_path(&[
                n.alpha(x, c, r[y]),
                n.whisker_l(x, delta[y]),
                n.alpha_inv(x, p[y], c)?,
                n.whisker_r(beta[y], c),
                n.alpha(q[y], x, c),
            ])
        })
        .collect()
}

/// The canonical half-braiding on the unit, `ρ^{-1}_{G y}∘λ_{G y}`.
pub(crate) fn unit_half_braiding(n: &MonoidalStructure, gy: &[Obj]) -> Option<Vec<Mor>> {
    let nb = n.base();
    gy.iter()
        .map(|&y| nb.compose_path(&[n.lambda(y), nb.inverse(n.rho(y))?]))
        .collect()
}

/// The monoidal structure on a center with `G = H`, inherited from the base.
pub(crate) fn install_monoidal(z: &mut CenterCategory) -> Result<()> {
    let n = z.base().clone();
    let g = z.g.clone();
    let gy: Vec<Obj> = g.source().base().objects().map(|y| g.obj(y)).collect();
    let cat = z.category().clone();
    let k = cat.object_count();
    let mut tensor_obj = Vec::with_capacity(k * k);
    for a in cat.objects() {
        let (x, beta) = z.key(a).clone();
        for b in cat.objects() {
            let (c, delta) = z.key(b);
            let comps = tensor_half_braidings(&n, x, &beta, *c, delta, &gy, &gy, &gy)
                .ok_or_else(|| Error::structural("associator of the base is not invertible"))?;
            tensor_obj.push(z.locate((n.tensor(x, *c), comps), "tensor of half-braidings")?);
        }
    }
    let t = |a: Obj, b: Obj| tensor_obj[a.0 * k + b.0];
    let mut tensor_mor = Vec::with_capacity(cat.morphism_count().pow(2));
    for f in cat.morphisms() {
        for h in cat.morphisms() {
            let s = t(cat.source(f), cat.source(h));
            let e = t(cat.target(f), cat.target(h));
            let m = n.tensor_mor(z.forgetful.mor(f), z.forgetful.mor(h));
            tensor_mor.push(z.lift(s, e, m, "tensor of morphisms")?);
        }
    }
    let unit_comps =
        unit_half_braiding(&n, &gy).ok_or_else(|| Error::structural("unitors of the base are not invertible"))?;
    let unit = z.locate((n.unit(), unit_comps), "unit")?;
    let carrier = |a: Obj| z.carrier(a);
    let mut associator = Vec::with_capacity(k * k * k);
    for a in cat.objects() {
        for b in cat.objects() {
            for c in cat.objects() {
                let m = n.alpha(carrier(a), carrier(b), carrier(c));
                associator.push(z.lift(t(t(a, b), c), t(a, t(b, c)), m, "associator")?);
            }
        }
    }
    let mut left_unitor = Vec::with_capacity(k);
    let mut right_unitor = Vec::with_capacity(k);
    for a in cat.objects() {
        left_unitor.push(z.lift(t(unit, a), a, n.lambda(carrier(a)), "left unitor")?);
        right_unitor.push(z.lift(t(a, unit), a, n.rho(carrier(a)), "right unitor")?);
    }
    let m = MonoidalStructure::new(cat, tensor_obj, tensor_mor, unit, associator, left_unitor, right_unitor)?;
    z.set_monoidal(Arc::new(m));
    Ok(())
}

/// Lifts base components `comp(a, b): x_a⊗x_b → x_b⊗x_a` to a braiding.
pub(crate) fn install_braiding(z: &mut CenterCategory, comp: impl Fn(&CenterCategory, Obj, Obj) -> Mor) -> Result<()> {
    let m = z
        .monoidal
        .clone()
        .ok_or_else(|| Error::structural("braiding needs the monoidal structure"))?;
    let cat = z.category().clone();
    let mut beta = Vec::new();
    for a in cat.objects() {
        for b in cat.objects() {
            let f = comp(z, a, b);
            beta.push(z.lift(m.tensor(a, b), m.tensor(b, a), f, "braiding")?);
        }
    }
    let b = Braiding::new(m, beta)?;
    z.set_braiding(b);
    Ok(())
}
