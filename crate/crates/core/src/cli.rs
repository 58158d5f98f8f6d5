//! The `spanforge` command line.
//!
//! Every subcommand decodes its inputs, scans them for law violations, runs
//! its construction and scans the result. Exit status is 0 when every scan is
//! clean, 1 when a scan reports violations and 2 when an input cannot be
//! interpreted or a budget is exceeded. Reports go to `--out` (stdout by
//! default); files are written atomically and only after success.

use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::Path;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use crate::centers::{
    braided_centralizer, braided_intertwiner, check_intertwiner_actions, drinfeld_center, monoidal_centralizer,
    monoidal_intertwiner, mueger_center, CenterCategory,
};
use crate::error::{Error, Result};
use crate::fincat::{check_category, check_functor, check_nat_trans, Budget, FinCategory, Functor, CAP_ENV};
use crate::io::{self, Fact, ReportValue, SpanValue, Value};
use crate::limits::{comma, fiber_product, FiberProduct, Orientation};
use crate::monoidal::{
    check_braiding, check_mon_functor, check_monoidal, is_symmetric, Braiding, MonFunctor, MonoidalStructure,
};
use crate::report::Report;
use crate::spans::{
    build_2span, build_span, central_module_check, check_laxator, check_module, check_module_functor,
    check_module_nat_trans, check_span, check_two_span, end_monoidal, laxator, laxator_coherence, module_structures_on,
    monoidal_lifts, normalization_check, pentagon_check, CenterKind, ModuleData, ModuleFunctorData, ModuleNatTransData,
};

#[derive(Parser, Debug)]
#[command(
    name = "spanforge",
    version,
    about = "Exact checks and constructions on finite monoidal categories"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Enumeration budget: N objects and 10·N morphisms.
    #[arg(long, global = true, env = CAP_ENV)]
    cap: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = ReportFormat::Human)]
    report: ReportFormat,

    /// Where to write the report; `-` is stdout.
    #[arg(long, global = true, default_value = "-")]
    out: String,

    /// Also write the constructed object as a document.
    #[arg(long, global = true)]
    emit: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Human,
    Structured,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OrientationArg {
    Forward,
    Reverse,
}

impl From<OrientationArg> for Orientation {
    fn from(o: OrientationArg) -> Self {
        match o {
            OrientationArg::Forward => Orientation::Forward,
            OrientationArg::Reverse => Orientation::Reverse,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CenterArg {
    Drinfeld,
    Mueger,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decode a document of any kind and scan its laws.
    Validate { file: String },
    /// Drinfeld center of a monoidal category.
    Center { monoidal: String },
    /// Müger center of a braided category.
    Mueger { braiding: String },
    /// Centralizer of a monoidal functor; with a braiding on its target, the
    /// braided centralizer.
    Centralizer { functor: String, braiding: Option<String> },
    /// Intertwiner category of two monoidal functors with a common target.
    Intertwiner {
        g: String,
        h: String,
        braiding: Option<String>,
    },
    /// Iso-comma category of a cospan of functors.
    FiberProduct { f: String, g: String },
    /// Comma category of a cospan of functors.
    Comma {
        f: String,
        g: String,
        #[arg(long, value_enum, default_value_t = OrientationArg::Forward)]
        orientation: OrientationArg,
    },
    /// Strict monoidal category of endofunctors.
    End { category: String },
    /// Span of monoidal categories from a module functor, given as one
    /// `module_functor` document or as source module, target module and functor.
    BuildSpan {
        #[arg(num_args = 1..=3, required = true)]
        files: Vec<String>,
    },
    /// 2-span from a module natural transformation.
    #[command(name = "build-2span")]
    Build2Span {
        transformation: String,
        #[arg(long, value_enum, default_value_t = OrientationArg::Forward)]
        orientation: OrientationArg,
    },
    /// Comparison functor from the span of `g∘f` into the composite of spans.
    Laxator { f: String, g: String },
    /// Associativity of laxators on three composable module functors; a
    /// fourth adds the pentagon over all bracketings.
    LaxatorCoherence {
        f: String,
        g: String,
        h: String,
        k: Option<String>,
    },
    /// Compare module structures on a functor with monoidal lifts into the apex.
    ModuleStructures {
        source: String,
        target: String,
        functor: String,
    },
    /// Central fiber product of a braided monoidal functor.
    CentralCheck {
        functor: String,
        source_braiding: String,
        target_braiding: String,
        #[arg(long, value_enum, default_value_t = CenterArg::Drinfeld)]
        center: CenterArg,
    },
    /// The span of an identity module functor against End.
    NormalizeCheck { module: String },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Center { .. } => "center",
            Command::Mueger { .. } => "mueger",
            Command::Centralizer { .. } => "centralizer",
            Command::Intertwiner { .. } => "intertwiner",
            Command::FiberProduct { .. } => "fiber-product",
            Command::Comma { .. } => "comma",
            Command::End { .. } => "end",
            Command::BuildSpan { .. } => "build-span",
            Command::Build2Span { .. } => "build-2span",
            Command::Laxator { .. } => "laxator",
            Command::LaxatorCoherence { .. } => "laxator-coherence",
            Command::ModuleStructures { .. } => "module-structures",
            Command::CentralCheck { .. } => "central-check",
            Command::NormalizeCheck { .. } => "normalize-check",
        }
    }
}

#[derive(Default)]
struct Outcome {
    report: Report,
    facts: BTreeMap<String, Fact>,
    artifact: Option<Value>,
}

impl Outcome {
    fn fact(&mut self, key: &str, value: Fact) {
        self.facts.insert(key.to_string(), value);
    }

    fn count(&mut self, key: &str, n: usize) {
        self.fact(key, Fact::Int(n as u64));
    }

    fn flag(&mut self, key: &str, b: bool) {
        self.fact(key, Fact::Bool(b));
    }

    fn sizes(&mut self, c: &FinCategory) {
        self.count("object_count", c.object_count());
        self.count("morphism_count", c.morphism_count());
    }
}

struct Inputs<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
    budget: Budget,
}

impl Inputs<'_> {
    fn text(&mut self, path: &str) -> Result<String> {
        if path == "-" {
            if self.stdin_used {
                return Err(Error::Io("stdin named more than once".into()));
            }
            self.stdin_used = true;
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Error::Io(format!("stdin: {e}")))?;
            return Ok(s);
        }
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))
    }

    fn value(&mut self, path: &str) -> Result<Value> {
        let text = self.text(path)?;
        io::parse(&text, &self.budget).map_err(|e| match e {
            Error::Schema { path: p, message } => Error::Schema {
                path: if p.is_empty() {
                    path.to_string()
                } else {
                    format!("{path}: {p}")
                },
                message,
            },
            other => other,
        })
    }
}

macro_rules! expect_kind {
    ($fn:ident, $variant:ident, $ty:ty) => {
        fn $fn(inputs: &mut Inputs<'_>, path: &str) -> Result<$ty> {
            match inputs.value(path)? {
                Value::$variant(x) => Ok(x),
                other => Err(Error::Schema {
                    path: format!("{path}: kind"),
                    message: format!("expected {}, found {}", stringify!($variant), other.kind()),
                }),
            }
        }
    };
}

expect_kind!(category_in, Category, Arc<FinCategory>);
expect_kind!(monoidal_in, Monoidal, Arc<MonoidalStructure>);
expect_kind!(braiding_in, Braiding, Braiding);
expect_kind!(functor_in, Functor, Functor);
expect_kind!(mon_functor_in, MonFunctor, MonFunctor);
expect_kind!(module_in, Module, ModuleData);
expect_kind!(module_functor_in, ModuleFunctor, ModuleFunctorData);
expect_kind!(module_nat_trans_in, ModuleNatTrans, ModuleNatTransData);

// Law scans stop at the first failing layer: later scans compose through
// tables that the earlier ones found broken.
fn category_laws(c: &FinCategory) -> Report {
    check_category(c)
}

fn monoidal_laws(s: &MonoidalStructure) -> Report {
    let mut r = Report::new();
    r.absorb("category", category_laws(s.base()));
    if r.is_ok() {
        r.absorb("monoidal", check_monoidal(s));
    }
    r
}

fn braiding_laws(b: &Braiding) -> Report {
    let mut r = monoidal_laws(b.monoidal());
    if r.is_ok() {
        r.absorb("braiding", check_braiding(b));
    }
    r
}

fn functor_laws(f: &Functor) -> Report {
    let mut r = Report::new();
    r.absorb("source", category_laws(f.source()));
    r.absorb("target", category_laws(f.target()));
    if r.is_ok() {
        r.absorb("functor", check_functor(f));
    }
    r
}

fn mon_functor_laws(f: &MonFunctor) -> Report {
    let mut r = Report::new();
    r.absorb("source", monoidal_laws(f.source()));
    r.absorb("target", monoidal_laws(f.target()));
    if r.is_ok() {
        r.absorb("functor", check_functor(f.functor()));
    }
    if r.is_ok() {
        r.absorb("monoidal-functor", check_mon_functor(f));
    }
    r
}

fn module_laws(m: &ModuleData) -> Report {
    let mut r = Report::new();
    r.absorb("acting", monoidal_laws(m.acting()));
    r.absorb("carrier", category_laws(m.carrier()));
    if r.is_ok() {
        r.absorb("action", check_functor(m.action().functor()));
    }
    if r.is_ok() {
        r.absorb("module", check_module(m));
    }
    r
}

fn module_functor_laws(f: &ModuleFunctorData) -> Report {
    let mut r = Report::new();
    r.absorb("source", module_laws(f.source()));
    r.absorb("target", module_laws(f.target()));
    if r.is_ok() {
        r.absorb("functor", check_functor(f.functor()));
    }
    if r.is_ok() {
        r.absorb("module-functor", check_module_functor(f));
    }
    r
}

fn module_nat_trans_laws(a: &ModuleNatTransData) -> Result<Report> {
    let mut r = Report::new();
    r.absorb("source", module_functor_laws(a.source()));
    r.absorb("target", module_functor_laws(a.target()));
    if r.is_ok() {
        r.absorb("module-transformation", check_module_nat_trans(a)?);
    }
    Ok(r)
}

fn laws(v: &Value) -> Result<Report> {
    Ok(match v {
        Value::Category(c) => category_laws(c),
        Value::Monoidal(s) => monoidal_laws(s),
        Value::Braiding(b) => braiding_laws(b),
        Value::Functor(f) => functor_laws(f),
        Value::MonFunctor(f) => mon_functor_laws(f),
        Value::NatTrans(t) => {
            let mut r = Report::new();
            r.absorb("source", functor_laws(t.source()));
            r.absorb("target", functor_laws(t.target()));
            if r.is_ok() {
                r.absorb("transformation", check_nat_trans(t));
            }
            r
        }
        Value::Module(m) => module_laws(m),
        Value::ModuleFunctor(f) => module_functor_laws(f),
        Value::ModuleNatTrans(a) => module_nat_trans_laws(a)?,
        Value::Span(s) => {
            let mut r = Report::new();
            r.absorb("apex", monoidal_laws(&s.apex));
            let legs = [
                ("left", Some(&s.left)),
                ("right", Some(&s.right)),
                ("top", s.top.as_ref()),
                ("bottom", s.bottom.as_ref()),
            ];
            for (name, leg) in legs {
                if let Some(f) = leg {
                    r.absorb(name, mon_functor_laws(f));
                }
            }
            r
        }
        Value::Report(_) => Report::new(),
    })
}

/// Scans the named inputs; returns an outcome carrying the violations if any
/// input is unlawful.
fn screen(inputs: &[(&str, Report)]) -> Option<Outcome> {
    let mut report = Report::new();
    for (name, r) in inputs {
        report.absorb(&format!("input-{name}"), r.clone());
    }
    (!report.is_ok()).then(|| Outcome {
        report,
        ..Outcome::default()
    })
}

fn center_facts(out: &mut Outcome, z: &CenterCategory) {
    out.sizes(z.category());
    if let Some(b) = z.braiding() {
        out.report.absorb("center", braiding_laws(b));
        out.artifact = Some(Value::Braiding(b.clone()));
    } else if let Some(s) = z.monoidal() {
        out.report.absorb("center", monoidal_laws(s));
        out.artifact = Some(Value::Monoidal(s.clone()));
    } else {
        out.report.absorb("center", category_laws(z.category()));
        out.artifact = Some(Value::Category(z.category().clone()));
    }
}

fn limit_facts(out: &mut Outcome, r: &FiberProduct) {
    out.sizes(r.apex());
    out.report.absorb("apex", category_laws(r.apex()));
    out.report.absorb("pr1", check_functor(r.pr1()));
    out.report.absorb("pr2", check_functor(r.pr2()));
    out.report.absorb("filler", check_nat_trans(r.filler()));
    out.artifact = Some(Value::Category(r.apex().clone()));
}

fn execute(cmd: &Command, inputs: &mut Inputs<'_>) -> Result<Outcome> {
    let budget = inputs.budget;
    let mut out = Outcome::default();
    match cmd {
        Command::Validate { file } => {
            let v = inputs.value(file)?;
            out.fact("kind", Fact::Text(v.kind().to_string()));
            out.report = laws(&v)?;
        }
        Command::Center { monoidal } => {
            let m = monoidal_in(inputs, monoidal)?;
            if let Some(o) = screen(&[("monoidal", monoidal_laws(&m))]) {
                return Ok(o);
            }
            center_facts(&mut out, &drinfeld_center(&m, &budget)?);
        }
        Command::Mueger { braiding } => {
            let b = braiding_in(inputs, braiding)?;
            if let Some(o) = screen(&[("braiding", braiding_laws(&b))]) {
                return Ok(o);
            }
            let z = mueger_center(&b, &budget)?;
            center_facts(&mut out, &z);
            if let Some(zb) = z.braiding() {
                let symmetric = is_symmetric(zb);
                out.flag("symmetric", symmetric);
                out.report.require(symmetric, "symmetric", Vec::new, || {
                    "double braiding is not the identity".into()
                });
            }
        }
        Command::Centralizer { functor, braiding } => {
            let g = mon_functor_in(inputs, functor)?;
            let b = braiding.as_deref().map(|p| braiding_in(inputs, p)).transpose()?;
            let mut screened = vec![("functor", mon_functor_laws(&g))];
            if let Some(b) = &b {
                screened.push(("braiding", braiding_laws(b)));
            }
            if let Some(o) = screen(&screened) {
                return Ok(o);
            }
            let z = match &b {
                Some(b) => braided_centralizer(&g, b, &budget)?,
                None => monoidal_centralizer(&g, &budget)?,
            };
            center_facts(&mut out, &z);
        }
        Command::Intertwiner { g, h, braiding } => {
            let g = mon_functor_in(inputs, g)?;
            let h = mon_functor_in(inputs, h)?;
            let b = braiding.as_deref().map(|p| braiding_in(inputs, p)).transpose()?;
            let mut screened = vec![("g", mon_functor_laws(&g)), ("h", mon_functor_laws(&h))];
            if let Some(b) = &b {
                screened.push(("braiding", braiding_laws(b)));
            }
            if let Some(o) = screen(&screened) {
                return Ok(o);
            }
            match &b {
                Some(b) => {
                    let (c, inclusion) = braided_intertwiner(&g, &h, b)?;
                    out.sizes(&c);
                    out.report.absorb("category", category_laws(&c));
                    out.report.absorb("inclusion", check_functor(&inclusion));
                    out.artifact = Some(Value::Category(c));
                }
                None => {
                    let it = monoidal_intertwiner(&g, &h, &budget)?;
                    out.sizes(it.category().category());
                    out.report.absorb("category", category_laws(it.category().category()));
                    out.report.absorb("actions", check_intertwiner_actions(&it));
                    out.artifact = Some(Value::Category(it.category().category().clone()));
                }
            }
        }
        Command::FiberProduct { f, g } => {
            let f = functor_in(inputs, f)?;
            let g = functor_in(inputs, g)?;
            if let Some(o) = screen(&[("f", functor_laws(&f)), ("g", functor_laws(&g))]) {
                return Ok(o);
            }
            limit_facts(&mut out, &fiber_product(&f, &g, &budget)?);
        }
        Command::Comma { f, g, orientation } => {
            let f = functor_in(inputs, f)?;
            let g = functor_in(inputs, g)?;
            if let Some(o) = screen(&[("f", functor_laws(&f)), ("g", functor_laws(&g))]) {
                return Ok(o);
            }
            limit_facts(&mut out, &comma(&f, &g, (*orientation).into(), &budget)?);
        }
        Command::End { category } => {
            let c = category_in(inputs, category)?;
            if let Some(o) = screen(&[("category", category_laws(&c))]) {
                return Ok(o);
            }
            let e = end_monoidal(&c, &budget)?;
            out.sizes(e.category());
            out.report.absorb("end", monoidal_laws(e.monoidal()));
            out.artifact = Some(Value::Monoidal(e.monoidal().clone()));
        }
        Command::BuildSpan { files } => {
            let mf = match files.as_slice() {
                [one] => module_functor_in(inputs, one)?,
                [m, n, f] => {
                    let m = module_in(inputs, m)?;
                    let n = module_in(inputs, n)?;
                    let f = functor_in(inputs, f)?;
                    if let Some(o) = screen(&[
                        ("source", module_laws(&m)),
                        ("target", module_laws(&n)),
                        ("functor", functor_laws(&f)),
                    ]) {
                        return Ok(o);
                    }
                    let span = build_span(&m, &n, &f, &budget)?;
                    return span_outcome(out, &span, &budget);
                }
                _ => {
                    return Err(Error::Io(
                        "build-span takes a module_functor document, or source module, target module and functor"
                            .into(),
                    ))
                }
            };
            if let Some(o) = screen(&[("module-functor", module_functor_laws(&mf))]) {
                return Ok(o);
            }
            let span = build_span(mf.source(), mf.target(), mf.functor(), &budget)?;
            return span_outcome(out, &span, &budget);
        }
        Command::Build2Span {
            transformation,
            orientation,
        } => {
            let a = module_nat_trans_in(inputs, transformation)?;
            if let Some(o) = screen(&[("transformation", module_nat_trans_laws(&a)?)]) {
                return Ok(o);
            }
            let two = build_2span(&a, (*orientation).into(), &budget)?;
            out.sizes(two.apex().base());
            out.report = check_two_span(&two)?;
            out.artifact = Some(Value::Span(SpanValue {
                apex: two.apex().clone(),
                left: two.leg_left()?,
                right: two.leg_right()?,
                top: Some(two.leg_top().clone()),
                bottom: Some(two.leg_bottom().clone()),
            }));
        }
        Command::Laxator { f, g } => {
            let f = module_functor_in(inputs, f)?;
            let g = module_functor_in(inputs, g)?;
            if let Some(o) = screen(&[("f", module_functor_laws(&f)), ("g", module_functor_laws(&g))]) {
                return Ok(o);
            }
            let l = laxator(&f, &g, &budget)?;
            out.count("composite_object_count", l.composite().apex().base().object_count());
            out.count("product_object_count", l.product().monoidal().base().object_count());
            let inv = l.invertibility();
            out.flag("full", inv.full);
            out.flag("faithful", inv.faithful);
            out.flag("essentially_surjective", inv.essentially_surjective);
            out.flag("isomorphism", inv.is_isomorphism());
            if let Some(x) = inv.missed {
                out.count("missed_object", x.0);
            }
            out.report = check_laxator(&l)?;
            out.artifact = Some(Value::MonFunctor(l.functor().clone()));
        }
        Command::LaxatorCoherence { f, g, h, k } => {
            let f = module_functor_in(inputs, f)?;
            let g = module_functor_in(inputs, g)?;
            let h = module_functor_in(inputs, h)?;
            let k = k.as_deref().map(|p| module_functor_in(inputs, p)).transpose()?;
            let mut screened = vec![
                ("f", module_functor_laws(&f)),
                ("g", module_functor_laws(&g)),
                ("h", module_functor_laws(&h)),
            ];
            if let Some(k) = &k {
                screened.push(("k", module_functor_laws(k)));
            }
            if let Some(o) = screen(&screened) {
                return Ok(o);
            }
            let c = laxator_coherence(&f, &g, &h, &budget)?;
            out.flag("cell", c.cell.is_some());
            if let Some(cell) = &c.cell {
                out.flag("cell_identity", cell.nat().is_identity());
            }
            out.report.absorb("triple", c.report);
            if let Some(k) = k {
                out.report.absorb("pentagon", pentagon_check(&[f, g, h, k], &budget)?);
            }
        }
        Command::ModuleStructures {
            source,
            target,
            functor,
        } => {
            let m = module_in(inputs, source)?;
            let n = module_in(inputs, target)?;
            let f = functor_in(inputs, functor)?;
            if let Some(o) = screen(&[
                ("source", module_laws(&m)),
                ("target", module_laws(&n)),
                ("functor", functor_laws(&f)),
            ]) {
                return Ok(o);
            }
            let structures = module_structures_on(&m, &n, &f, &budget)?.len();
            let lifts = monoidal_lifts(&build_span(&m, &n, &f, &budget)?)?.len();
            out.count("structures", structures);
            out.count("lifts", lifts);
            out.report.require(
                structures == lifts,
                "bijection",
                || vec![structures, lifts],
                || format!("{structures} module structures but {lifts} monoidal lifts"),
            );
        }
        Command::CentralCheck {
            functor,
            source_braiding,
            target_braiding,
            center,
        } => {
            let g = mon_functor_in(inputs, functor)?;
            let bs = braiding_in(inputs, source_braiding)?;
            let bt = braiding_in(inputs, target_braiding)?;
            if let Some(o) = screen(&[
                ("functor", mon_functor_laws(&g)),
                ("source-braiding", braiding_laws(&bs)),
                ("target-braiding", braiding_laws(&bt)),
            ]) {
                return Ok(o);
            }
            let kind = match center {
                CenterArg::Drinfeld => CenterKind::Drinfeld,
                CenterArg::Mueger => CenterKind::Mueger,
            };
            out.fact("center", Fact::Text(format!("{center:?}").to_lowercase()));
            out.report = central_module_check(&g, &bs, &bt, kind, &budget)?;
        }
        Command::NormalizeCheck { module } => {
            let m = module_in(inputs, module)?;
            if let Some(o) = screen(&[("module", module_laws(&m))]) {
                return Ok(o);
            }
            let n = normalization_check(&m, &budget)?;
            out.flag("isomorphism", n.isomorphism);
            out.report = n.report;
        }
    }
    Ok(out)
}

fn span_outcome(mut out: Outcome, span: &crate::spans::SpanCell, budget: &Budget) -> Result<Outcome> {
    out.sizes(span.apex().base());
    out.report = check_span(span, budget)?;
    out.artifact = Some(Value::Span(SpanValue {
        apex: span.apex().clone(),
        left: span.leg_left().clone(),
        right: span.leg_right().clone(),
        top: None,
        bottom: None,
    }));
    Ok(out)
}

fn render_human(command: &str, out: &Outcome) -> String {
    let mut s = format!(
        "{command}: {}\n",
        if out.report.is_ok() {
            "ok".to_string()
        } else {
            format!("{} violation(s)", out.report.total)
        }
    );
    for (k, v) in &out.facts {
        let v = match v {
            Fact::Bool(b) => b.to_string(),
            Fact::Int(n) => n.to_string(),
            Fact::Text(t) => t.clone(),
            Fact::List(xs) => format!("{xs:?}"),
        };
        s.push_str(&format!("  {k}: {v}\n"));
    }
    for v in &out.report.violations {
        s.push_str(&format!("  {} {:?}: {}\n", v.law, v.witness, v.detail));
    }
    if out.report.truncated() {
        s.push_str(&format!(
            "  ... {} more\n",
            out.report.total - out.report.violations.len()
        ));
    }
    s
}

fn write_atomic(path: &str, text: &str) -> Result<()> {
    let target = Path::new(path);
    let dir = match target.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let err = |e: std::io::Error| Error::Io(format!("{path}: {e}"));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(err)?;
    tmp.write_all(text.as_bytes()).map_err(err)?;
    tmp.persist(target).map_err(|e| err(e.error))?;
    Ok(())
}

fn deliver(path: &str, text: &str, stdout: &mut dyn Write) -> Result<()> {
    if path == "-" {
        stdout
            .write_all(text.as_bytes())
            .map_err(|e| Error::Io(format!("stdout: {e}")))
    } else {
        write_atomic(path, text)
    }
}

/// Runs the command line on `args` (including the program name) and returns
/// the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let budget = cli.cap.map(Budget::with_cap).unwrap_or_default();
    let mut inputs = Inputs {
        stdin,
        stdin_used: false,
        budget,
    };
    let command = cli.command.name();
    let outcome = match execute(&cli.command, &mut inputs) {
        Ok(o) => o,
        Err(Error::Violated { context, report }) => {
            let mut o = Outcome::default();
            o.report.absorb(&context, report);
            o
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return e.exit_code();
        }
    };
    let text = match cli.report {
        ReportFormat::Human => render_human(command, &outcome),
        ReportFormat::Structured => io::serialize(&Value::Report(ReportValue {
            command: command.to_string(),
            report: outcome.report.clone(),
            facts: outcome.facts.clone(),
        })),
    };
    let ok = outcome.report.is_ok();
    if let (true, Some(path), Some(artifact)) = (ok, &cli.emit, &outcome.artifact) {
        if let Err(e) = deliver(path, &io::serialize(artifact), stdout) {
            let _ = writeln!(stderr, "error: {e}");
            return e.exit_code();
        }
    }
    if let Err(e) = deliver(&cli.out, &text, stdout) {
        let _ = writeln!(stderr, "error: {e}");
        return e.exit_code();
    }
    if ok {
        0
    } else {
        1
    }
}
