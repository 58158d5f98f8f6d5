//! Versioned JSON documents for every table kind, with strict schemas and a
//! canonical text form.
//!
//! A document is `{"version": "spanforge/1", "kind": ..., "payload": ...}`.
//! Ids in payloads are dense indices into the enclosing category's object or
//! morphism list. Canonical text sorts keys, prints scalar arrays on one line
//! and ends with a newline, so `serialize(parse(t))` is a fixed point.

mod payload;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value as Json;

use crate::error::{Error, Result};
use crate::fincat::{Budget, FinCategory, Functor, NatTrans};
use crate::monoidal::{Braiding, MonFunctor, MonoidalStructure};
use crate::spans::{ModuleData, ModuleFunctorData, ModuleNatTransData};

pub use payload::{
    ActionDoc, BraidingDoc, CarrierMapDoc, CategoryDoc, Fact, FunctorDoc, LegDoc, ModuleDoc, ModuleFunctorDoc,
    ModuleNatTransDoc, MonFunctorDoc, MonoidalDoc, MorphismDoc, NatTransDoc, ReportDoc, ReportValue, SpanDoc,
    SpanValue,
};

pub const VERSION: &str = "spanforge/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Category,
    Monoidal,
    Braiding,
    Functor,
    MonFunctor,
    NatTrans,
    Module,
    ModuleFunctor,
    ModuleNatTrans,
    Span,
    Report,
}

impl Kind {
    pub const ALL: [Kind; 11] = [
        Kind::Category,
        Kind::Monoidal,
        Kind::Braiding,
        Kind::Functor,
        Kind::MonFunctor,
        Kind::NatTrans,
        Kind::Module,
        Kind::ModuleFunctor,
        Kind::ModuleNatTrans,
        Kind::Span,
        Kind::Report,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Category => "category",
            Kind::Monoidal => "monoidal",
            Kind::Braiding => "braiding",
            Kind::Functor => "functor",
            Kind::MonFunctor => "mon_functor",
            Kind::NatTrans => "nat_trans",
            Kind::Module => "module",
            Kind::ModuleFunctor => "module_functor",
            Kind::ModuleNatTrans => "module_nattrans",
            Kind::Span => "span",
            Kind::Report => "report",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Kind> {
        Kind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::Schema {
                path: "kind".into(),
                message: format!("unknown kind `{s}`"),
            })
    }
}

/// A decoded document payload.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Category(Arc<FinCategory>),
    Monoidal(Arc<MonoidalStructure>),
    Braiding(Braiding),
    Functor(Functor),
    MonFunctor(MonFunctor),
    NatTrans(NatTrans),
    Module(ModuleData),
    ModuleFunctor(ModuleFunctorData),
    ModuleNatTrans(ModuleNatTransData),
    Span(SpanValue),
    Report(ReportValue),
}

impl Value {
    pub fn kind(&self) -> Kind {
        match self {
            Value::Category(_) => Kind::Category,
            Value::Monoidal(_) => Kind::Monoidal,
            Value::Braiding(_) => Kind::Braiding,
            Value::Functor(_) => Kind::Functor,
            Value::MonFunctor(_) => Kind::MonFunctor,
            Value::NatTrans(_) => Kind::NatTrans,
            Value::Module(_) => Kind::Module,
            Value::ModuleFunctor(_) => Kind::ModuleFunctor,
            Value::ModuleNatTrans(_) => Kind::ModuleNatTrans,
            Value::Span(_) => Kind::Span,
            Value::Report(_) => Kind::Report,
        }
    }
}

// ModuleData and friends compare by action tables.
impl PartialEq for ModuleData {
    fn eq(&self, other: &Self) -> bool {
        **self.carrier() == **other.carrier() && self.action() == other.action()
    }
}

impl Eq for ModuleData {}

impl PartialEq for ModuleFunctorData {
    fn eq(&self, other: &Self) -> bool {
        self.source() == other.source()
            && self.target() == other.target()
            && self.functor() == other.functor()
            && self.xi_table() == other.xi_table()
    }
}

impl Eq for ModuleFunctorData {}

impl PartialEq for ModuleNatTransData {
    fn eq(&self, other: &Self) -> bool {
        self.source() == other.source() && self.target() == other.target() && self.components() == other.components()
    }
}

impl Eq for ModuleNatTransData {}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Envelope {
    version: String,
    kind: String,
    payload: Json,
}

/// An envelope whose version and kind have been checked but whose payload
/// has not been decoded.
#[derive(Clone, Debug, PartialEq)]
pub struct Document {
    pub kind: Kind,
    pub payload: Json,
}

impl Document {
    pub fn parse(text: &str) -> Result<Document> {
        let raw: Json = serde_json::from_str(text).map_err(|e| Error::Schema {
            path: String::new(),
            message: format!("invalid JSON: {e}"),
        })?;
        let env: Envelope = typed(raw, "")?;
        if env.version != VERSION {
            return Err(Error::Version {
                found: env.version,
                expected: VERSION.into(),
            });
        }
        Ok(Document {
            kind: env.kind.parse()?,
            payload: env.payload,
        })
    }

    pub fn decode(&self, budget: &Budget) -> Result<Value> {
        let p = self.payload.clone();
        let at = "payload";
        Ok(match self.kind {
            Kind::Category => Value::Category(payload::decode_category(&typed(p, at)?, at)?),
            Kind::Monoidal => Value::Monoidal(payload::decode_monoidal(&typed(p, at)?, at)?),
            Kind::Braiding => Value::Braiding(payload::decode_braiding(&typed(p, at)?, at)?),
            Kind::Functor => Value::Functor(payload::decode_functor(&typed(p, at)?, at)?),
            Kind::MonFunctor => Value::MonFunctor(payload::decode_mon_functor(&typed(p, at)?, at)?),
            Kind::NatTrans => Value::NatTrans(payload::decode_nat_trans(&typed(p, at)?, at)?),
            Kind::Module => Value::Module(payload::decode_module(&typed(p, at)?, at, budget)?),
            Kind::ModuleFunctor => Value::ModuleFunctor(payload::decode_module_functor(&typed(p, at)?, at, budget)?),
            Kind::ModuleNatTrans => {
                Value::ModuleNatTrans(payload::decode_module_nat_trans(&typed(p, at)?, at, budget)?)
            }
            Kind::Span => Value::Span(payload::decode_span(&typed(p, at)?, at)?),
            Kind::Report => Value::Report(payload::decode_report(&typed(p, at)?, at)?),
        })
    }

    pub fn encode(v: &Value) -> Document {
        let payload = match v {
            Value::Category(c) => json(&payload::encode_category(c)),
            Value::Monoidal(s) => json(&payload::encode_monoidal(s)),
            Value::Braiding(b) => json(&payload::encode_braiding(b)),
            Value::Functor(f) => json(&payload::encode_functor(f)),
            Value::MonFunctor(f) => json(&payload::encode_mon_functor(f)),
            Value::NatTrans(t) => json(&payload::encode_nat_trans(t)),
            Value::Module(m) => json(&payload::encode_module(m)),
            Value::ModuleFunctor(f) => json(&payload::encode_module_functor(f)),
            Value::ModuleNatTrans(a) => json(&payload::encode_module_nat_trans(a)),
            Value::Span(s) => json(&payload::encode_span(s)),
            Value::Report(r) => json(&payload::encode_report(r)),
        };
        Document {
            kind: v.kind(),
            payload,
        }
    }

    /// Canonical text.
    pub fn to_text(&self) -> String {
        let env = serde_json::json!({
            "version": VERSION,
            "kind": self.kind.as_str(),
            "payload": self.payload,
        });
        let mut out = String::new();
        write_canonical(&env, 0, &mut out);
        out.push('\n');
        out
    }
}

/// Parses and decodes a document.
pub fn parse(text: &str, budget: &Budget) -> Result<Value> {
    Document::parse(text)?.decode(budget)
}

/// Canonical text of a value.
pub fn serialize(v: &Value) -> String {
    Document::encode(v).to_text()
}

/// Rewrites text into canonical form without decoding the payload.
pub fn canonicalize(text: &str) -> Result<String> {
    Ok(Document::parse(text)?.to_text())
}

fn json<T: Serialize>(x: &T) -> Json {
    serde_json::to_value(x).expect("payload documents serialize to JSON")
}

fn typed<T: DeserializeOwned>(v: Json, prefix: &str) -> Result<T> {
    serde_path_to_error::deserialize(v).map_err(|e| {
        let inner = e.path().to_string();
        let path = match (prefix.is_empty(), inner.as_str()) {
            (true, _) => inner,
            (false, ".") => prefix.to_string(),
            (false, _) => format!("{prefix}.{inner}"),
        };
        Error::Schema {
            path,
            message: e.into_inner().to_string(),
        }
    })
}

fn scalar(v: &Json) -> bool {
    !matches!(v, Json::Array(_) | Json::Object(_))
}

fn write_canonical(v: &Json, depth: usize, out: &mut String) {
    let pad = |d: usize, out: &mut String| out.extend(std::iter::repeat("  ").take(d));
    match v {
        Json::Object(map) if !map.is_empty() => {
            let mut keys: Vec<&String> = map.keys().collect();
            keys.sort();
            out.push_str("{\n");
            for (i, k) in keys.iter().enumerate() {
                pad(depth + 1, out);
                out.push_str(&Json::String((*k).clone()).to_string());
                out.push_str(": ");
                write_canonical(&map[*k], depth + 1, out);
                out.push_str(if i + 1 < keys.len() { ",\n" } else { "\n" });
            }
            pad(depth, out);
            out.push('}');
        }
        Json::Array(xs) if !xs.is_empty() && !xs.iter().all(scalar) => {
            out.push_str("[\n");
            for (i, x) in xs.iter().enumerate() {
                pad(depth + 1, out);
                write_canonical(x, depth + 1, out);
                out.push_str(if i + 1 < xs.len() { ",\n" } else { "\n" });
            }
            pad(depth, out);
            out.push(']');
        }
        Json::Array(xs) => {
            let items: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
            out.push('[');
            out.push_str(&items.join(", "));
            out.push(']');
        }
        _ => out.push_str(&v.to_string()),
    }
}
