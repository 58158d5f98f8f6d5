use std::sync::Arc;

use super::module::ModuleFunctorData;
use super::span::{build_module_span, SpanCell};
use crate::error::{Error, Result};
use crate::fincat::{
    compose_functors, pullback, pushforward, Budget, Concrete, ConcreteSpec, FinCategory, Functor, Mor, NatTrans, Obj,
};
use crate::limits::{fiber_product, mediate, mediate_2cell, monoidal_limit, MonoidalLimit};
use crate::monoidal::{
    check_mon_functor, check_mon_nattrans, check_monoidal, compose_mon_functors, MonFunctor, MonNatTrans,
    MonoidalStructure,
};
use crate::report::Report;

/// `Φ_{f,g}: A_f ×_{End(N)} A_g → A_{g∘f}`, induced by the universal
/// property of `A_{g∘f}` from the pasted 2-cell
/// `(ξ₂F)∘(GζF)∘(Gξ₁)`.
#[derive(Clone, Debug)]
pub struct Laxator {
    f: ModuleFunctorData,
    g: ModuleFunctorData,
    composite_module: ModuleFunctorData,
    first: SpanCell,
    second: SpanCell,
    composite: SpanCell,
    product: MonoidalLimit,
    functor: MonFunctor,
}

/// How far a laxator is from being invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invertibility {
    pub injective_on_objects: bool,
    pub surjective_on_objects: bool,
    pub full: bool,
    pub faithful: bool,
    pub essentially_surjective: bool,
    /// A target object isomorphic to no image object.
    pub missed: Option<Obj>,
}

impl Invertibility {
    pub fn is_isomorphism(&self) -> bool {
        self.injective_on_objects && self.surjective_on_objects && self.full && self.faithful
    }

    pub fn is_equivalence(&self) -> bool {
        self.essentially_surjective && self.full && self.faithful
    }
}

impl Laxator {
    pub fn first(&self) -> &SpanCell {
        &self.first
    }

    pub fn second(&self) -> &SpanCell {
        &self.second
    }

    /// `A_{g∘f}`.
    pub fn composite(&self) -> &SpanCell {
        &self.composite
    }

    pub fn composite_module(&self) -> &ModuleFunctorData {
        &self.composite_module
    }

    /// `A_f ×_{End(N)} A_g` with its induced monoidal structure.
    pub fn product(&self) -> &MonoidalLimit {
        &self.product
    }

    pub fn functor(&self) -> &MonFunctor {
        &self.functor
    }

    pub fn invertibility(&self) -> Invertibility {
        let phi = self.functor.functor();
        let (s, t) = (phi.source(), phi.target());
        let mut full = true;
        let mut faithful = true;
        for x in s.objects() {
            for y in s.objects() {
                let mut image: Vec<Mor> = s.hom(x, y).iter().map(|&h| phi.mor(h)).collect();
                let before = image.len();
                image.sort();
                image.dedup();
                faithful &= image.len() == before;
                full &= image.len() == t.hom(phi.obj(x), phi.obj(y)).len();
            }
        }
        let missed = t
            .objects()
            .find(|&z| !s.objects().any(|x| t.hom(phi.obj(x), z).iter().any(|&h| t.is_iso(h))));
        Invertibility {
            injective_on_objects: phi.is_injective_on_objects(),
            surjective_on_objects: phi.is_surjective_on_objects(),
            full,
            faithful,
            essentially_surjective: missed.is_none(),
            missed,
        }
    }

    /// `C → A_f ×_{End(N)} A_g`, pairing `Φ^f` and `Φ^g` along identities.
    pub fn paired_lift(&self) -> Result<MonFunctor> {
        let (lf, lg) = (self.first.lift(&self.f)?, self.second.lift(&self.g)?);
        let r = self.product.limit();
        let s = lf.source().clone();
        let cat = s.base().clone();
        let en = self.first.target().end().category();
        let mut obj = Vec::with_capacity(cat.object_count());
        for c in cat.objects() {
            let q = self.first.fiber().triple(lf.obj(c)).1;
            obj.push(
                r.find(lf.obj(c), lg.obj(c), en.identity(q))
                    .ok_or_else(|| Error::structural("lifts do not meet in End(N)"))?,
            );
        }
        let pair = |a: Obj, b: Obj, u: Mor, v: Mor| {
            r.find_morphism(a, b, u, v)
                .ok_or_else(|| Error::structural("lifted morphisms do not pair up"))
        };
        let mut mor = Vec::with_capacity(cat.morphism_count());
        for u in cat.morphisms() {
            mor.push(pair(obj[cat.source(u).0], obj[cat.target(u).0], lf.mor(u), lg.mor(u))?);
        }
        let m = self.product.monoidal();
        let mut mult = Vec::new();
        for x in cat.objects() {
            for y in cat.objects() {
                let from = m.tensor(obj[x.0], obj[y.0]);
                mult.push(pair(from, obj[s.tensor(x, y).0], lf.gamma(x, y), lg.gamma(x, y))?);
            }
        }
        let unit = pair(m.unit(), obj[s.unit().0], lf.eta(), lg.eta())?;
        let functor = Functor::new(cat, m.base().clone(), obj, mor)?;
        MonFunctor::new(s, m.clone(), functor, mult, unit)
    }
}

/// Builds `Φ_{f,g}` for composable module functors.
pub fn laxator(f: &ModuleFunctorData, g: &ModuleFunctorData, budget: &Budget) -> Result<Laxator> {
    let first = build_module_span(f, budget)?;
    let second = build_module_span(g, budget)?;
    laxator_from(f, g, first, second, budget)
}

fn laxator_from(
    f: &ModuleFunctorData,
    g: &ModuleFunctorData,
    first: SpanCell,
    second: SpanCell,
    budget: &Budget,
) -> Result<Laxator> {
    let gf = ModuleFunctorData::compose(g, f)?;
    let composite = build_module_span(&gf, budget)?;
    let r = fiber_product(first.fiber().pr2(), second.fiber().pr1(), budget)?;
    let product = monoidal_limit(&r, first.leg_right(), second.leg_left())?;
    // G_*: Fun(M,N) → Fun(M,P) and F^*: Fun(N,P) → Fun(M,P)
    let g_push = pushforward(g.functor(), first.hom(), composite.hom())?;
    let f_pull = pullback(f.functor(), second.hom(), composite.hom())?;
    let h = composite.hom().category();
    let p = compose_functors(first.fiber().pr1(), product.limit().pr1())?;
    let q = compose_functors(second.fiber().pr2(), product.limit().pr2())?;
    let mut comps = Vec::with_capacity(r.apex().object_count());
    for x in r.apex().objects() {
        let (a, b, zeta) = r.triple(x);
        let xi1 = first.fiber().triple(a).2;
        let xi2 = second.fiber().triple(b).2;
        let step = g_push.mor(first.pull().mor(zeta));
        // the interchanger G∘(–)∘F in the bottom right square is an identity
        let interchanger = h.identity(h.target(step));
        let path = [g_push.mor(xi1), step, interchanger, f_pull.mor(xi2)];
        comps.push(
            h.compose_path(&path)
                .ok_or_else(|| Error::structural("pasted 2-cell is not composable"))?,
        );
    }
    let xi = NatTrans::new(
        compose_functors(composite.push(), &p)?,
        compose_functors(composite.pull(), &q)?,
        comps,
    )?;
    let phi = mediate(composite.fiber(), &p, &q, &xi)?;
    let functor = MonFunctor::strict(product.monoidal().clone(), composite.apex().clone(), phi)?;
    Ok(Laxator {
        f: f.clone(),
        g: g.clone(),
        composite_module: gf,
        first,
        second,
        composite,
        product,
        functor,
    })
}

/// Monoidal functor laws of `Φ_{f,g}`, the two projection identities, and
/// `Φ_{f,g}∘(Φ^f, Φ^g) = Φ^{g∘f}`.
pub fn check_laxator(l: &Laxator) -> Result<Report> {
    let mut report = Report::new();
    report.absorb("product", check_monoidal(l.product.monoidal()));
    report.absorb("laxator", check_mon_functor(&l.functor));
    let phi = l.functor.functor();
    let lhs = compose_functors(l.composite.fiber().pr1(), phi)?;
    let rhs = compose_functors(l.first.fiber().pr1(), l.product.limit().pr1())?;
    report.require(lhs == rhs, "projection-source", Vec::new, || {
        "p_x∘Φ differs from the source projection".to_string()
    });
    let lhs = compose_functors(l.composite.fiber().pr2(), phi)?;
    let rhs = compose_functors(l.second.fiber().pr2(), l.product.limit().pr2())?;
    report.require(lhs == rhs, "projection-target", Vec::new, || {
        "p_z∘Φ differs from the target projection".to_string()
    });
    let through = compose_mon_functors(&l.functor, &l.paired_lift()?)?;
    let direct = l.composite.lift(&l.composite_module)?;
    report.require(through == direct, "lift", Vec::new, || {
        "Φ∘(Φ^f, Φ^g) differs from the lift of the composite".to_string()
    });
    Ok(report)
}

/// A bracketing of a chain of composable module functors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bracketing {
    Leaf(usize),
    Node(Box<Bracketing>, Box<Bracketing>),
}

impl Bracketing {
    fn node(l: Bracketing, r: Bracketing) -> Self {
        Bracketing::Node(Box::new(l), Box::new(r))
    }

    /// Leaves covered, as a half-open range.
    pub fn range(&self) -> (usize, usize) {
        match self {
            Bracketing::Leaf(i) => (*i, i + 1),
            Bracketing::Node(l, r) => (l.range().0, r.range().1),
        }
    }

    /// All bracketings of the leaves `lo..hi`.
    pub fn all(lo: usize, hi: usize) -> Vec<Bracketing> {
        if hi - lo == 1 {
            return vec![Bracketing::Leaf(lo)];
        }
        let mut out = Vec::new();
        for mid in lo + 1..hi {
            for l in Bracketing::all(lo, mid) {
                for r in Bracketing::all(mid, hi) {
                    out.push(Bracketing::node(l.clone(), r));
                }
            }
        }
        out
    }
}

impl std::fmt::Display for Bracketing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Bracketing::Leaf(i) => write!(f, "{i}"),
            Bracketing::Node(l, r) => write!(f, "({l} {r})"),
        }
    }
}

type ChainKey = (Vec<Obj>, Vec<Mor>);

/// The iterated 2-fiber product `A_{f₀} ×_{End} A_{f₁} ×_{End} …`, tabulated
/// flat: apex objects `aᵢ` with isomorphisms `ζᵢ: Q_{aᵢ} ≅ P_{aᵢ₊₁}`.
#[derive(Clone, Debug)]
pub struct ChainProduct {
    modules: Vec<ModuleFunctorData>,
    spans: Vec<SpanCell>,
    table: Concrete<ChainKey, Vec<Mor>>,
    monoidal: Arc<MonoidalStructure>,
}

impl ChainProduct {
    pub fn category(&self) -> &Arc<FinCategory> {
        self.table.category()
    }

    pub fn monoidal(&self) -> &Arc<MonoidalStructure> {
        &self.monoidal
    }

    pub fn spans(&self) -> &[SpanCell] {
        &self.spans
    }

    pub fn key(&self, t: Obj) -> &ChainKey {
        self.table.object_key(t)
    }

    pub fn components(&self, h: Mor) -> &[Mor] {
        self.table.morphism_key(h)
    }
}

fn middle(spans: &[SpanCell], i: usize) -> &Arc<FinCategory> {
    spans[i].target().end().category()
}

/// Tabulates the chain product of the spans of `modules`.
pub fn chain_product(modules: &[ModuleFunctorData], budget: &Budget) -> Result<ChainProduct> {
    if modules.is_empty() {
        return Err(Error::structural("empty chain of module functors"));
    }
    for w in modules.windows(2) {
        if **w[0].target().carrier() != **w[1].source().carrier() {
            return Err(Error::mismatch("module functors in the chain are not composable"));
        }
    }
    let spans = modules
        .iter()
        .map(|m| build_module_span(m, budget))
        .collect::<Result<Vec<_>>>()?;
    let k = spans.len();
    let mut partial: Vec<ChainKey> = spans[0].apex().base().objects().map(|a| (vec![a], vec![])).collect();
    for i in 1..k {
        let e = middle(&spans, i - 1);
        let mut next = Vec::new();
        for (objs, zetas) in &partial {
            let q = spans[i - 1].fiber().triple(*objs.last().expect("nonempty")).1;
            for a in spans[i].apex().base().objects() {
                let p = spans[i].fiber().triple(a).0;
                for &z in e.hom(q, p) {
                    if e.is_iso(z) {
                        let mut o = objs.clone();
                        o.push(a);
                        let mut zs = zetas.clone();
                        zs.push(z);
                        next.push((o, zs));
                    }
                }
            }
        }
        budget.check_objects("chain product", next.len() as u128)?;
        partial = next;
    }
    let name = format!("chain({k})");
    let table = {
        let spans = &spans;
        Concrete::build(
            &name,
            partial,
            budget,
            ConcreteSpec {
                hom: |s: &ChainKey, t: &ChainKey| {
                    let mut acc: Vec<Vec<Mor>> = vec![vec![]];
                    for i in 0..k {
                        let a = spans[i].apex().base();
                        let mut next = Vec::new();
                        for prefix in &acc {
                            for &h in a.hom(s.0[i], t.0[i]) {
                                let fits = i == 0 || {
                                    let e = middle(spans, i - 1);
                                    let q = spans[i - 1].fiber().pair(prefix[i - 1]).1;
                                    let p = spans[i].fiber().pair(h).0;
                                    e.compose(t.1[i - 1], q) == e.compose(p, s.1[i - 1])
                                };
                                if fits {
                                    let mut v = prefix.clone();
                                    v.push(h);
                                    next.push(v);
                                }
                            }
                        }
                        acc = next;
                    }
                    Ok(acc)
                },
                identity: |s: &ChainKey| {
                    s.0.iter()
                        .enumerate()
                        .map(|(i, &a)| spans[i].apex().base().identity(a))
                        .collect()
                },
                compose: |g: &Vec<Mor>, f: &Vec<Mor>| {
                    f.iter()
                        .zip(g)
                        .enumerate()
                        .map(|(i, (&x, &y))| spans[i].apex().base().compose(y, x))
                        .collect()
                },
                obj_label: |s: &ChainKey| {
                    let parts: Vec<String> =
                        s.0.iter()
                            .enumerate()
                            .map(|(i, &a)| spans[i].apex().base().obj_label(a).to_string())
                            .collect();
                    format!("[{}]", parts.join(" | "))
                },
                mor_label: |m: &Vec<Mor>| {
                    let parts: Vec<String> = m.iter().map(|h| h.0.to_string()).collect();
                    format!("[{}]", parts.join(","))
                },
            },
        )?
    };
    let monoidal = Arc::new(chain_monoidal(&spans, &table, budget)?);
    Ok(ChainProduct {
        modules: modules.to_vec(),
        spans,
        table,
        monoidal,
    })
}

// Componentwise tensor; the comparison isomorphisms tensor in End(N) since
// every leg is strict.
fn chain_monoidal(
    spans: &[SpanCell],
    table: &Concrete<ChainKey, Vec<Mor>>,
    budget: &Budget,
) -> Result<MonoidalStructure> {
    let c = table.category().clone();
    let n = c.object_count();
    let k = spans.len();
    let missing = |what: &str| Error::structural(format!("chain product: {what} not tabulated"));
    let ends: Vec<&Arc<MonoidalStructure>> = (0..k - 1).map(|i| spans[i].target().end().monoidal()).collect();
    let mut tensor_obj = Vec::with_capacity(n * n);
    for s in c.objects() {
        let (a, za) = table.object_key(s);
        for t in c.objects() {
            let (b, zb) = table.object_key(t);
            let objs = (0..k).map(|i| spans[i].apex().tensor(a[i], b[i])).collect();
            let zs = (0..k - 1).map(|i| ends[i].tensor_mor(za[i], zb[i])).collect();
            tensor_obj.push(table.find_object(&(objs, zs)).ok_or_else(|| missing("tensor"))?);
        }
    }
    budget.check_morphisms("chain product tensor", (c.morphism_count() as u128).pow(2))?;
    let mut tensor_mor = Vec::with_capacity(c.morphism_count().pow(2));
    for f in c.morphisms() {
        let fk = table.morphism_key(f);
        for g in c.morphisms() {
            let gk = table.morphism_key(g);
            let key: Vec<Mor> = (0..k).map(|i| spans[i].apex().tensor_mor(fk[i], gk[i])).collect();
            let s = tensor_obj[c.source(f).0 * n + c.source(g).0];
            let t = tensor_obj[c.target(f).0 * n + c.target(g).0];
            tensor_mor.push(
                table
                    .find_morphism(s, t, &key)
                    .ok_or_else(|| missing("tensor of morphisms"))?,
            );
        }
    }
    let unit_objs: Vec<Obj> = spans.iter().map(|s| s.apex().unit()).collect();
    let unit_z: Vec<Mor> = (0..k - 1).map(|i| ends[i].base().identity(ends[i].unit())).collect();
    let unit = table.find_object(&(unit_objs, unit_z)).ok_or_else(|| missing("unit"))?;
    let t = |x: Obj, y: Obj| tensor_obj[x.0 * n + y.0];
    let key = |x: Obj| &table.object_key(x).0;
    let mut associator = Vec::with_capacity(n * n * n);
    for x in c.objects() {
        for y in c.objects() {
            for z in c.objects() {
                let comps: Vec<Mor> = (0..k)
                    .map(|i| spans[i].apex().alpha(key(x)[i], key(y)[i], key(z)[i]))
                    .collect();
                associator.push(
                    table
                        .find_morphism(t(t(x, y), z), t(x, t(y, z)), &comps)
                        .ok_or_else(|| missing("associator"))?,
                );
            }
        }
    }
    let mut left_unitor = Vec::with_capacity(n);
    let mut right_unitor = Vec::with_capacity(n);
    for x in c.objects() {
        let l: Vec<Mor> = (0..k).map(|i| spans[i].apex().lambda(key(x)[i])).collect();
        let r: Vec<Mor> = (0..k).map(|i| spans[i].apex().rho(key(x)[i])).collect();
        left_unitor.push(
            table
                .find_morphism(t(unit, x), x, &l)
                .ok_or_else(|| missing("left unitor"))?,
        );
        right_unitor.push(
            table
                .find_morphism(t(x, unit), x, &r)
                .ok_or_else(|| missing("right unitor"))?,
        );
    }
    MonoidalStructure::new(c, tensor_obj, tensor_mor, unit, associator, left_unitor, right_unitor)
}

/// A bracketing evaluated through laxators: the composite module functor
/// of its range, that composite's span, and the functor from the chain
/// product into the span's apex.
#[derive(Clone, Debug)]
pub struct Evaluated {
    pub module: ModuleFunctorData,
    pub span: SpanCell,
    pub functor: MonFunctor,
}

/// Evaluates `tree` over the chain by applying `Φ` at every internal node.
pub fn evaluate(chain: &ChainProduct, tree: &Bracketing, budget: &Budget) -> Result<Evaluated> {
    let c = chain.category().clone();
    let (module, span, obj, mor) = eval_node(chain, tree, budget)?;
    let functor = Functor::new(c, span.apex().base().clone(), obj, mor)?;
    let functor = MonFunctor::strict(chain.monoidal.clone(), span.apex().clone(), functor)?;
    Ok(Evaluated { module, span, functor })
}

type NodeValue = (ModuleFunctorData, SpanCell, Vec<Obj>, Vec<Mor>);

fn eval_node(chain: &ChainProduct, tree: &Bracketing, budget: &Budget) -> Result<NodeValue> {
    let c = chain.category();
    match tree {
        Bracketing::Leaf(i) => {
            let obj = c.objects().map(|t| chain.key(t).0[*i]).collect();
            let mor = c.morphisms().map(|h| chain.components(h)[*i]).collect();
            Ok((chain.modules[*i].clone(), chain.spans[*i].clone(), obj, mor))
        }
        Bracketing::Node(l, r) => {
            let (lm, ls, lo, lh) = eval_node(chain, l, budget)?;
            let (rm, rs, ro, rh) = eval_node(chain, r, budget)?;
            let joint = l.range().1 - 1;
            let lax = laxator_from(&lm, &rm, ls, rs, budget)?;
            let report = check_laxator(&lax)?;
            if !report.is_ok() {
                return Err(Error::violated(format!("laxator at {tree}"), report));
            }
            let r = lax.product.limit();
            let phi = lax.functor.functor();
            let mut obj = Vec::with_capacity(c.object_count());
            for t in c.objects() {
                let zeta = chain.key(t).1[joint];
                let x = r
                    .find(lo[t.0], ro[t.0], zeta)
                    .ok_or_else(|| Error::structural("bracketed object is not in the fiber product"))?;
                obj.push(phi.obj(x));
            }
            let mut mor = Vec::with_capacity(c.morphism_count());
            for h in c.morphisms() {
                let (s, t) = (c.source(h), c.target(h));
                let (xs, xt) = (
                    r.find(lo[s.0], ro[s.0], chain.key(s).1[joint]).expect("found above"),
                    r.find(lo[t.0], ro[t.0], chain.key(t).1[joint]).expect("found above"),
                );
                let x = r
                    .find_morphism(xs, xt, lh[h.0], rh[h.0])
                    .ok_or_else(|| Error::structural("bracketed morphism is not in the fiber product"))?;
                mor.push(phi.mor(x));
            }
            Ok((lax.composite_module, lax.composite, obj, mor))
        }
    }
}

/// The chain evaluated directly: `(P₀, Q_last, X)` with `X` pasted left to
/// right from the `ξᵢ` and `ζᵢ` componentwise, without any laxator.
pub fn flat_evaluation(chain: &ChainProduct, total: &SpanCell) -> Result<Functor> {
    let c = chain.category();
    let spans = &chain.spans;
    let m0 = spans[0].source().carrier();
    let last = spans.len() - 1;
    let mut obj = Vec::with_capacity(c.object_count());
    for t in c.objects() {
        let (a, z) = chain.key(t);
        let (p0, _, xi0) = spans[0].fiber().triple(a[0]);
        // H maps m ∈ M₀ to F_i…F₀(m)
        let mut h: Vec<Obj> = m0.objects().map(|m| spans[0].functor().obj(m)).collect();
        let mut x: Vec<Mor> = spans[0].hom().components(xi0).to_vec();
        for i in 1..spans.len() {
            let f = spans[i].functor();
            let n = spans[i].target().carrier();
            let en = spans[i - 1].target().end().functors();
            let zeta = en.components(z[i - 1]);
            let xi = spans[i].hom().components(spans[i].fiber().triple(a[i]).2);
            x = m0
                .objects()
                .map(|m| {
                    let hm = h[m.0];
                    n.compose_path(&[f.mor(x[m.0]), f.mor(zeta[hm.0]), xi[hm.0]])
                        .expect("pasted components compose")
                })
                .collect();
            h = h.iter().map(|&y| f.obj(y)).collect();
        }
        let q_last = spans[last].fiber().triple(a[last]).1;
        let from = total.push().obj(p0);
        let to = total.pull().obj(q_last);
        let xi = total
            .hom()
            .find_morphism(from, to, &x)
            .ok_or_else(|| Error::structural("flat pasting is not natural"))?;
        obj.push(
            total
                .fiber()
                .find(p0, q_last, xi)
                .ok_or_else(|| Error::structural("flat pasting is not invertible"))?,
        );
    }
    let mut mor = Vec::with_capacity(c.morphism_count());
    for hm in c.morphisms() {
        let comps = chain.components(hm);
        let u = spans[0].fiber().pair(comps[0]).0;
        let v = spans[last].fiber().pair(comps[last]).1;
        let (s, t) = (obj[c.source(hm).0], obj[c.target(hm).0]);
        mor.push(
            total
                .fiber()
                .find_morphism(s, t, u, v)
                .ok_or_else(|| Error::structural("flat morphism is not in the apex"))?,
        );
    }
    Functor::new(c.clone(), total.apex().base().clone(), obj, mor)
}

/// The 2-cell between two bracketings, mediated from the identity
/// projections.
fn bracketing_cell(from: &Evaluated, to: &Evaluated) -> Result<MonNatTrans> {
    if **from.span.apex() != **to.span.apex() {
        return Err(Error::structural("bracketings land in different apexes"));
    }
    let fiber = to.span.fiber();
    let u = from
        .functor
        .functor()
        .with_categories(from.functor.functor().source().clone(), fiber.apex().clone())?;
    let v = to.functor.functor();
    let g1 = NatTrans::identity(&compose_functors(fiber.pr1(), &u)?);
    let g2 = NatTrans::identity(&compose_functors(fiber.pr2(), &u)?);
    let cell = mediate_2cell(fiber, &u, v, &g1, &g2)?;
    let source = MonFunctor::strict(from.functor.source().clone(), to.span.apex().clone(), u)?;
    MonNatTrans::new(source, to.functor.clone(), cell.components().to_vec())
}

/// Outcome of [`laxator_coherence`].
#[derive(Clone, Debug)]
pub struct Coherence {
    pub report: Report,
    /// `Φ_{f,g,h}` from `Φ_{gf,h}∘(Φ_{f,g}×1)` to `Φ_{f,hg}∘(1×Φ_{g,h})`.
    pub cell: Option<MonNatTrans>,
}

fn oracle_check(report: &mut Report, law: &str, chain: &ChainProduct, e: &Evaluated) -> Result<()> {
    let flat = flat_evaluation(chain, &e.span)?;
    let f = e.functor.functor();
    for t in chain.category().objects() {
        report.require(
            flat.obj(t) == f.obj(t),
            law,
            || vec![t.0],
            || {
                format!(
                    "bracketing gives {}, direct pasting gives {}",
                    f.obj(t).0,
                    flat.obj(t).0
                )
            },
        );
    }
    for h in chain.category().morphisms() {
        report.require(
            flat.mor(h) == f.mor(h),
            law,
            || vec![h.0],
            || {
                format!(
                    "bracketing gives {}, direct pasting gives {}",
                    f.mor(h).0,
                    flat.mor(h).0
                )
            },
        );
    }
    Ok(())
}

/// Builds `Φ_{f,g,h}` and verifies that it is an invertible monoidal
/// transformation and that both bracketings match the direct pasting.
pub fn laxator_coherence(
    f: &ModuleFunctorData,
    g: &ModuleFunctorData,
    h: &ModuleFunctorData,
    budget: &Budget,
) -> Result<Coherence> {
    let chain = chain_product(&[f.clone(), g.clone(), h.clone()], budget)?;
    let left = Bracketing::node(
        Bracketing::node(Bracketing::Leaf(0), Bracketing::Leaf(1)),
        Bracketing::Leaf(2),
    );
    let right = Bracketing::node(
        Bracketing::Leaf(0),
        Bracketing::node(Bracketing::Leaf(1), Bracketing::Leaf(2)),
    );
    let l = evaluate(&chain, &left, budget)?;
    let r = evaluate(&chain, &right, budget)?;
    let mut report = Report::new();
    report.absorb("chain", check_monoidal(chain.monoidal()));
    report.absorb("left", check_mon_functor(&l.functor));
    report.absorb("right", check_mon_functor(&r.functor));
    oracle_check(&mut report, "oracle-left", &chain, &l)?;
    oracle_check(&mut report, "oracle-right", &chain, &r)?;
    let cell = match bracketing_cell(&l, &r) {
        Ok(cell) => {
            report.absorb("cell", check_mon_nattrans(&cell));
            report.require(cell.nat().is_invertible(), "cell-invertible", Vec::new, || {
                "Φ_{f,g,h} has a non-invertible component".to_string()
            });
            Some(cell)
        }
        Err(e) => {
            report.push("cell", Vec::new(), || e.to_string());
            None
        }
    };
    Ok(Coherence { report, cell })
}

/// The five bracketings of a quadruple, in the order
/// `((01)2)3, (0(12))3, 0((12)3), 0(1(23)), (01)(23)`.
pub fn pentagon_bracketings() -> Vec<Bracketing> {
    let leaf = Bracketing::Leaf;
    let n = Bracketing::node;
    vec![
        n(n(n(leaf(0), leaf(1)), leaf(2)), leaf(3)),
        n(n(leaf(0), n(leaf(1), leaf(2))), leaf(3)),
        n(leaf(0), n(n(leaf(1), leaf(2)), leaf(3))),
        n(leaf(0), n(leaf(1), n(leaf(2), leaf(3)))),
        n(n(leaf(0), leaf(1)), n(leaf(2), leaf(3))),
    ]
}

/// For four composable module functors: every bracketing matches the direct
/// pasting, and the two pastings of `Φ`-cells from `((01)2)3` to `0(1(23))`
/// agree component by component.
pub fn pentagon_check(modules: &[ModuleFunctorData; 4], budget: &Budget) -> Result<Report> {
    let chain = chain_product(modules, budget)?;
    let mut report = Report::new();
    let mut evaluated = Vec::new();
    for (i, tree) in pentagon_bracketings().iter().enumerate() {
        let e = evaluate(&chain, tree, budget)?;
        report.absorb(&format!("bracketing-{i}"), check_mon_functor(&e.functor));
        oracle_check(&mut report, &format!("oracle-{i}"), &chain, &e)?;
        evaluated.push(e);
    }
    let cell = |i: usize, j: usize| bracketing_cell(&evaluated[i], &evaluated[j]);
    let long = MonNatTrans::vertical(&cell(2, 3)?, &MonNatTrans::vertical(&cell(1, 2)?, &cell(0, 1)?)?)?;
    let short = MonNatTrans::vertical(&cell(4, 3)?, &cell(0, 4)?)?;
    for t in chain.category().objects() {
        let (a, b) = (long.component(t), short.component(t));
        report.require(
            a == b,
            "pasting",
            || vec![t.0],
            || format!("three-cell pasting gives {}, two-cell pasting gives {}", a.0, b.0),
        );
    }
    report.absorb("pasting-long", check_mon_nattrans(&long));
    report.absorb("pasting-short", check_mon_nattrans(&short));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::standard::{chain, discrete, terminal};
    use crate::spans::end::end_monoidal;
    use crate::spans::module::{check_module_functor, ModuleData};

    fn b() -> Budget {
        Budget::default()
    }

    fn trivial_module(c: &Arc<FinCategory>) -> ModuleData {
        ModuleData::trivial(Arc::new(end_monoidal(c, &b()).unwrap()))
    }

    fn plain(x: &ModuleData, y: &ModuleData, f: Functor) -> ModuleFunctorData {
        let n = y.carrier();
        let xi = vec![x.carrier().objects().map(|m| n.identity(f.obj(m))).collect()];
        let mf = ModuleFunctorData::new(x.clone(), y.clone(), f, xi).unwrap();
        assert!(check_module_functor(&mf).is_ok());
        mf
    }

    #[test]
    fn identities_give_an_isomorphism() {
        let x = trivial_module(&chain(1));
        let id = ModuleFunctorData::identity(&x);
        let l = laxator(&id, &id, &b()).unwrap();
        assert!(check_laxator(&l).unwrap().is_ok());
        let inv = l.invertibility();
        assert!(inv.injective_on_objects);
        assert!(inv.is_isomorphism());
        assert_eq!(l.composite().apex().base().object_count(), 3);
    }

    #[test]
    fn non_essentially_surjective_instance() {
        let (m, n, p) = (discrete(3), discrete(2), terminal());
        let (xm, xn, xp) = (trivial_module(&m), trivial_module(&n), trivial_module(&p));
        let f = Functor::new(
            m.clone(),
            n.clone(),
            vec![Obj(0), Obj(0), Obj(1)],
            vec![Mor(0), Mor(0), Mor(1)],
        )
        .unwrap();
        let g = Functor::constant(&n, &p, Obj(0));
        let l = laxator(&plain(&xm, &xn, f), &plain(&xn, &xp, g), &b()).unwrap();
        assert!(check_laxator(&l).unwrap().is_ok());
        let inv = l.invertibility();
        assert!(!inv.essentially_surjective);
        // every endomap of 3 points lies over the one-point target
        assert_eq!(l.composite().apex().base().object_count(), 27);
        let missed = inv.missed.unwrap();
        let (pm, _, _) = l.composite().fiber().triple(missed);
        let em = xm.end().functors();
        let img: Vec<usize> = m.objects().map(|x| em.apply_obj(pm, x).0).collect();
        // P does not respect the fibres {0,1} and {2} of F
        let fib = |i: usize| usize::from(i == 2);
        assert_ne!(fib(img[0]), fib(img[1]));
    }

    #[test]
    fn identity_triple_cell_is_identity() {
        let x = trivial_module(&chain(1));
        let id = ModuleFunctorData::identity(&x);
        let c = laxator_coherence(&id, &id, &id, &b()).unwrap();
        assert!(c.report.is_ok(), "{}", c.report);
        assert!(c.cell.unwrap().nat().is_identity());
    }

    #[test]
    fn pentagon_on_mixed_chain() {
        let (a, d) = (chain(1), discrete(2));
        let (xa, xd) = (trivial_module(&a), trivial_module(&d));
        let konst = plain(&xa, &xa, Functor::constant(&a, &a, Obj(1)));
        let to_d = plain(&xa, &xd, Functor::constant(&a, &d, Obj(0)));
        let swap = plain(
            &xd,
            &xd,
            Functor::new(d.clone(), d.clone(), vec![Obj(1), Obj(0)], vec![Mor(1), Mor(0)]).unwrap(),
        );
        let rep = pentagon_check(&[konst.clone(), to_d.clone(), swap.clone(), swap], &b()).unwrap();
        assert!(rep.is_ok(), "{rep}");
    }

    #[test]
    fn bracketings_are_counted_by_catalan_numbers() {
        let counts: Vec<usize> = (1..6).map(|k| Bracketing::all(0, k).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14]);
        assert_eq!(Bracketing::all(0, 4).len(), pentagon_bracketings().len());
        for t in pentagon_bracketings() {
            assert!(Bracketing::all(0, 4).contains(&t));
        }
    }
}
