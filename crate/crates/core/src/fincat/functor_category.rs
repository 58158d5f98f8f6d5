use std::sync::Arc;

use super::budget::Budget;
use super::category::{FinCategory, Mor, Obj};
use super::concrete::{Concrete, ConcreteSpec};
use super::functor::{same_category, Functor, NatTrans};
use super::product::ProductCategory;
use crate::error::{Error, Result};

/// Upper bound on the number of functors `m → n`:
/// `|obj n|^|obj m|` times `max|hom n|` for every non-identity morphism of `m`.
pub fn functor_count_estimate(m: &FinCategory, n: &FinCategory) -> u128 {
    let max_hom = n
        .objects()
        .flat_map(|x| n.objects().map(move |y| (x, y)))
        .map(|(x, y)| n.hom(x, y).len() as u128)
        .max()
        .unwrap_or(0)
        .max(1);
    let mut est: u128 = 1;
    for _ in m.objects() {
        est = est.saturating_mul(n.object_count() as u128);
    }
    for f in m.morphisms() {
        if !m.is_identity(f) {
            est = est.saturating_mul(max_hom);
        }
    }
    est
}

/// All functors `m → n` as morphism tables, in lexicographic order of
/// `(object map, morphism map)`.
///
/// Fails with a budget error once more than `limit` functors are found.
pub fn enumerate_functors(m: &FinCategory, n: &FinCategory, limit: usize) -> Result<Vec<Vec<Mor>>> {
    let nonid: Vec<Mor> = m.morphisms().filter(|&f| !m.is_identity(f)).collect();
    let mut pos = vec![None; m.morphism_count()];
    for (k, f) in nonid.iter().enumerate() {
        pos[f.0] = Some(k);
    }
    // composition constraints, attached to the last non-identity morphism they mention
    let mut constraints: Vec<Vec<(Mor, Mor, Mor)>> = vec![Vec::new(); nonid.len()];
    for (g, f, h) in m.composition_triples() {
        if let Some(last) = [pos[g.0], pos[f.0], pos[h.0]].into_iter().flatten().max() {
            constraints[last].push((g, f, h));
        }
    }
    let mut search = FunctorSearch {
        m,
        n,
        nonid: &nonid,
        constraints: &constraints,
        obj: vec![Obj(0); m.object_count()],
        img: vec![Mor(0); m.morphism_count()],
        found: Vec::new(),
        limit,
    };
    search.objects(0)?;
    Ok(search.found)
}

struct FunctorSearch<'a> {
    m: &'a FinCategory,
    n: &'a FinCategory,
    nonid: &'a [Mor],
    constraints: &'a [Vec<(Mor, Mor, Mor)>],
    obj: Vec<Obj>,
    img: Vec<Mor>,
    found: Vec<Vec<Mor>>,
    limit: usize,
}

impl FunctorSearch<'_> {
    fn objects(&mut self, k: usize) -> Result<()> {
        if k == self.m.object_count() {
            for x in self.m.objects() {
                self.img[self.m.identity(x).0] = self.n.identity(self.obj[x.0]);
            }
            return self.morphisms(0);
        }
        for y in self.n.objects() {
            self.obj[k] = y;
            // every morphism between assigned objects needs a non-empty image hom
            let ok = self.m.objects().take(k + 1).all(|a| {
                let b = Obj(k);
                (self.m.hom(a, b).is_empty() || !self.n.hom(self.obj[a.0], y).is_empty())
                    && (self.m.hom(b, a).is_empty() || !self.n.hom(y, self.obj[a.0]).is_empty())
            });
            if ok {
                self.objects(k + 1)?;
            }
        }
        Ok(())
    }

    fn morphisms(&mut self, k: usize) -> Result<()> {
        if k == self.nonid.len() {
            if self.found.len() >= self.limit {
                return Err(Error::Budget {
                    what: format!("functors {} -> {}", self.m.name(), self.n.name()),
                    estimate: functor_count_estimate(self.m, self.n),
                    cap: self.limit,
                });
            }
            self.found.push(self.img.clone());
            return Ok(());
        }
        let f = self.nonid[k];
        let (x, y) = (self.obj[self.m.source(f).0], self.obj[self.m.target(f).0]);
        for &cand in self.n.hom(x, y) {
            self.img[f.0] = cand;
            let ok = self.constraints[k]
                .iter()
                .all(|&(g, h, gh)| self.n.try_compose(self.img[g.0], self.img[h.0]) == Some(self.img[gh.0]));
            if ok {
                self.morphisms(k + 1)?;
            }
        }
        Ok(())
    }
}

/// All natural transformations between two functors given as tables, in
/// lexicographic order of components.
pub fn enumerate_nat_trans(m: &FinCategory, n: &FinCategory, f: &[Mor], g: &[Mor]) -> Vec<Vec<Mor>> {
    let fo: Vec<Obj> = m.objects().map(|x| n.source(f[m.identity(x).0])).collect();
    let go: Vec<Obj> = m.objects().map(|x| n.source(g[m.identity(x).0])).collect();
    // naturality squares attached to the later endpoint
    let mut squares: Vec<Vec<Mor>> = vec![Vec::new(); m.object_count()];
    for u in m.morphisms() {
        if m.is_identity(u) {
            continue;
        }
        let last = m.source(u).0.max(m.target(u).0);
        squares[last].push(u);
    }
    let mut out = Vec::new();
    let mut comp = vec![Mor(0); m.object_count()];
    fn go_rec(
        k: usize,
        m: &FinCategory,
        n: &FinCategory,
        f: &[Mor],
        g: &[Mor],
        fo: &[Obj],
        go: &[Obj],
        squares: &[Vec<Mor>],
        comp: &mut Vec<Mor>,
        out: &mut Vec<Vec<Mor>>,
    ) {
        if k == m.object_count() {
            out.push(comp.clone());
            return;
        }
        for &c in n.hom(fo[k], go[k]) {
            comp[k] = c;
            let ok = squares[k].iter().all(|&u| {
                let (x, y) = (m.source(u).0, m.target(u).0);
                n.try_compose(g[u.0], comp[x]) == n.try_compose(comp[y], f[u.0])
            });
            if ok {
                go_rec(k + 1, m, n, f, g, fo, go, squares, comp, out);
            }
        }
    }
    go_rec(0, m, n, f, g, &fo, &go, &squares, &mut comp, &mut out);
    out
}

/// The category `Fun(M, N)` of all functors and natural transformations.
///
/// Objects are keyed by morphism tables, morphisms by component tables.
#[derive(Clone, Debug)]
pub struct FunctorCategory {
    source: Arc<FinCategory>,
    target: Arc<FinCategory>,
    table: Concrete<Vec<Mor>, Vec<Mor>>,
}

impl FunctorCategory {
    pub fn source(&self) -> &Arc<FinCategory> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinCategory> {
        &self.target
    }

    pub fn category(&self) -> &Arc<FinCategory> {
        self.table.category()
    }

    pub fn functor(&self, x: Obj) -> Functor {
        Functor::from_morphism_map(
            self.source.clone(),
            self.target.clone(),
            self.table.object_key(x).clone(),
        )
        .expect("tabulated functor")
    }

    pub fn nat_trans(&self, f: Mor) -> NatTrans {
        let c = self.category();
        NatTrans::new(
            self.functor(c.source(f)),
            self.functor(c.target(f)),
            self.table.morphism_key(f).clone(),
        )
        .expect("tabulated transformation")
    }

    pub fn find_functor(&self, mor_map: &[Mor]) -> Option<Obj> {
        self.table.find_object(&mor_map.to_vec())
    }

    pub fn object_of(&self, f: &Functor) -> Option<Obj> {
        if !same_category(f.source(), &self.source) || !same_category(f.target(), &self.target) {
            return None;
        }
        self.find_functor(f.mor_map())
    }

    pub fn find_morphism(&self, from: Obj, to: Obj, components: &[Mor]) -> Option<Mor> {
        self.table.find_morphism(from, to, &components.to_vec())
    }

    pub fn morphism_of(&self, t: &NatTrans) -> Option<Mor> {
        let from = self.object_of(t.source())?;
        let to = self.object_of(t.target())?;
        self.find_morphism(from, to, t.components())
    }

    pub fn mor_map(&self, x: Obj) -> &[Mor] {
        self.table.object_key(x)
    }

    pub fn components(&self, f: Mor) -> &[Mor] {
        self.table.morphism_key(f)
    }

    /// Image of `x` under the tabulated functor `p`.
    pub fn apply_obj(&self, p: Obj, x: Obj) -> Obj {
        let key = self.table.object_key(p);
        self.target.source(key[self.source.identity(x).0])
    }

    pub fn apply_mor(&self, p: Obj, f: Mor) -> Mor {
        self.table.object_key(p)[f.0]
    }
}

/// Tabulates `Fun(m, n)`.
pub fn functor_category(m: &Arc<FinCategory>, n: &Arc<FinCategory>, budget: &Budget) -> Result<FunctorCategory> {
    let name = format!("Fun({},{})", m.name(), n.name());
    let functors = enumerate_functors(m, n, budget.max_objects)?;
    let mm = m.clone();
    let nn = n.clone();
    let obj_label = |key: &Vec<Mor>| {
        let objs: Vec<&str> = mm
            .objects()
            .map(|x| nn.obj_label(nn.source(key[mm.identity(x).0])))
            .collect();
        let extra: Vec<&str> = mm
            .morphisms()
            .filter(|f| !mm.is_identity(*f) && !nn.is_identity(key[f.0]))
            .map(|f| nn.mor_label(key[f.0]))
            .collect();
        if extra.is_empty() {
            format!("<{}>", objs.join(","))
        } else {
            format!("<{}|{}>", objs.join(","), extra.join(","))
        }
    };
    let mor_label = |key: &Vec<Mor>| {
        let parts: Vec<&str> = key.iter().map(|c| nn.mor_label(*c)).collect();
        format!("[{}]", parts.join(","))
    };
    let table = Concrete::build(
        &name,
        functors,
        budget,
        ConcreteSpec {
            hom: |f: &Vec<Mor>, g: &Vec<Mor>| Ok(enumerate_nat_trans(m, n, f, g)),
            identity: |f: &Vec<Mor>| m.objects().map(|x| f[m.identity(x).0]).collect::<Vec<_>>(),
            compose: |b: &Vec<Mor>, a: &Vec<Mor>| a.iter().zip(b).map(|(&x, &y)| n.compose(y, x)).collect(),
            obj_label,
            mor_label,
        },
    )?;
    Ok(FunctorCategory {
        source: m.clone(),
        target: n.clone(),
        table,
    })
}

/// Post-composition `f_*: Fun(X, M) → Fun(X, N)`.
pub fn pushforward(f: &Functor, from: &FunctorCategory, to: &FunctorCategory) -> Result<Functor> {
    if !same_category(from.target(), f.source())
        || !same_category(to.target(), f.target())
        || !same_category(from.source(), to.source())
    {
        return Err(Error::mismatch(format!(
            "push-forward along {} -> {} does not match the hom contexts",
            f.source().name(),
            f.target().name()
        )));
    }
    let dom = from.category();
    let mut obj = Vec::with_capacity(dom.object_count());
    for p in dom.objects() {
        let img: Vec<Mor> = from.mor_map(p).iter().map(|&g| f.mor(g)).collect();
        obj.push(
            to.find_functor(&img)
                .ok_or_else(|| Error::structural("push-forward image not tabulated"))?,
        );
    }
    let mut mor = Vec::with_capacity(dom.morphism_count());
    for t in dom.morphisms() {
        let comps: Vec<Mor> = from.components(t).iter().map(|&c| f.mor(c)).collect();
        let (s, e) = (obj[dom.source(t).0], obj[dom.target(t).0]);
        mor.push(
            to.find_morphism(s, e, &comps)
                .ok_or_else(|| Error::structural("push-forward image not tabulated"))?,
        );
    }
    Functor::new(dom.clone(), to.category().clone(), obj, mor)
}

/// Pre-composition `f^*: Fun(N, X) → Fun(M, X)`.
pub fn pullback(f: &Functor, from: &FunctorCategory, to: &FunctorCategory) -> Result<Functor> {
    if !same_category(from.source(), f.target())
        || !same_category(to.source(), f.source())
        || !same_category(from.target(), to.target())
    {
        return Err(Error::mismatch(format!(
            "pullback along {} -> {} does not match the hom contexts",
            f.source().name(),
            f.target().name()
        )));
    }
    let m = f.source();
    let dom = from.category();
    let mut obj = Vec::with_capacity(dom.object_count());
    for q in dom.objects() {
        let key = from.mor_map(q);
        let img: Vec<Mor> = m.morphisms().map(|g| key[f.mor(g).0]).collect();
        obj.push(
            to.find_functor(&img)
                .ok_or_else(|| Error::structural("pullback image not tabulated"))?,
        );
    }
    let mut mor = Vec::with_capacity(dom.morphism_count());
    for t in dom.morphisms() {
        let comps = from.components(t);
        let img: Vec<Mor> = m.objects().map(|x| comps[f.obj(x).0]).collect();
        let (s, e) = (obj[dom.source(t).0], obj[dom.target(t).0]);
        mor.push(
            to.find_morphism(s, e, &img)
                .ok_or_else(|| Error::structural("pullback image not tabulated"))?,
        );
    }
    Functor::new(dom.clone(), to.category().clone(), obj, mor)
}

/// Composition `Fun(N, P) × Fun(M, N) → Fun(M, P)`, `(Q, P) ↦ Q∘P`, acting on
/// morphisms by horizontal composition.
pub fn composition_functor(
    outer: &FunctorCategory,
    inner: &FunctorCategory,
    result: &FunctorCategory,
    product: &ProductCategory,
) -> Result<Functor> {
    if !same_category(outer.source(), inner.target())
        || !same_category(result.source(), inner.source())
        || !same_category(result.target(), outer.target())
        || !same_category(product.left(), outer.category())
        || !same_category(product.right(), inner.category())
    {
        return Err(Error::mismatch("composition functor over mismatched hom categories"));
    }
    let (m, p) = (inner.source(), outer.target());
    let c = product.category();
    let mut obj = Vec::with_capacity(c.object_count());
    for x in c.objects() {
        let (q, r) = product.split(x);
        let (qk, rk) = (outer.mor_map(q), inner.mor_map(r));
        let img: Vec<Mor> = m.morphisms().map(|g| qk[rk[g.0].0]).collect();
        obj.push(
            result
                .find_functor(&img)
                .ok_or_else(|| Error::structural("composite functor not tabulated"))?,
        );
    }
    let mut mor = Vec::with_capacity(c.morphism_count());
    for f in c.morphisms() {
        let (nu, mu) = product.split_mor(f);
        let nu_c = outer.components(nu);
        let mu_c = inner.components(mu);
        let q_tgt = outer.category().target(nu);
        let r_src = inner.category().source(mu);
        // (ν * μ)_x = Q'(μ_x) ∘ ν_{R x}
        let comps: Vec<Mor> = m
            .objects()
            .map(|x| {
                let rx = inner.apply_obj(r_src, x);
                let first = nu_c[rx.0];
                let second = outer.apply_mor(q_tgt, mu_c[x.0]);
                p.compose(second, first)
            })
            .collect();
        let (s, e) = (obj[c.source(f).0], obj[c.target(f).0]);
        mor.push(
            result
                .find_morphism(s, e, &comps)
                .ok_or_else(|| Error::structural("horizontal composite not tabulated"))?,
        );
    }
    Functor::new(c.clone(), result.category().clone(), obj, mor)
}
