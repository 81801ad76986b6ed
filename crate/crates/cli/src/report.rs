//! Report envelope shared by every subcommand.
//!
//! The envelope nests all derived data under `result`, which is
//! byte-stable across runs for identical inputs: object keys appear in a
//! fixed order and nothing time-dependent lives inside it.  Wall-clock
//! timing sits alongside, outside the stable subtree.

use serde_json::{json, Map, Value};

use rootclusters::clusters::{ClusterCertificate, ClusterReport, ClusterSize, Method};
use rootclusters::{Rat, RatPoly};

pub const SCHEMA_VERSION: &str = "1";

/// One JSON document per invocation: identification, echoed inputs, the
/// stable result, optional certificate, and timing.
pub struct Envelope {
    pub command: &'static str,
    pub inputs: Value,
    pub result: Value,
    pub certificate: Option<Value>,
    pub elapsed_ms: u128,
}

impl Envelope {
    pub fn to_json(&self) -> Value {
        let mut doc = Map::new();
        doc.insert("schema_version".into(), json!(SCHEMA_VERSION));
        doc.insert("command".into(), json!(self.command));
        doc.insert("inputs".into(), self.inputs.clone());
        doc.insert("result".into(), self.result.clone());
        if let Some(cert) = &self.certificate {
            doc.insert("certificate".into(), cert.clone());
        }
        doc.insert("timing".into(), json!({ "elapsed_ms": self.elapsed_ms }));
        Value::Object(doc)
    }

    pub fn render(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("serializable") + "\n"
    }
}

/// Exact rational as a [numerator, denominator] pair of integer strings.
pub fn rat_json(r: &Rat) -> Value {
    json!([r.numer().to_string(), r.denom().to_string()])
}

/// Canonical printed form plus the full coefficient array, constant term
/// first, so consumers never re-parse the pretty string.
pub fn poly_json(f: &RatPoly) -> Value {
    let coeffs: Vec<Value> = (0..=f.deg()).map(|i| rat_json(&f.coeff(i))).collect();
    json!({ "text": f.to_string(), "coefficients": coeffs })
}

pub fn size_json(s: &ClusterSize) -> Value {
    match s {
        ClusterSize::Exact(r) => json!({ "kind": "exact", "value": r }),
        ClusterSize::Interval { lower, upper } => {
            json!({ "kind": "interval", "lower": lower, "upper": upper })
        }
    }
}

pub fn method_str(m: Method) -> &'static str {
    match m {
        Method::ExactFactorization => "exact_factorization",
        Method::Certificate => "certificate",
        Method::Interval => "interval",
    }
}

pub fn certificate_json(c: &ClusterCertificate) -> Value {
    json!({
        "witnesses": c.witnesses,
        "upper_bound": c.upper_bound,
        "primes": c.primes,
    })
}

pub fn cluster_result_json(rep: &ClusterReport) -> Value {
    let members: Vec<Value> = rep
        .members
        .iter()
        .map(|coords| Value::Array(coords.iter().map(rat_json).collect()))
        .collect();
    json!({
        "degree": rep.degree,
        "size": size_json(&rep.size),
        "num_clusters": rep.num_clusters,
        "factor_pattern": rep.factor_pattern,
        "members": members,
        "method": method_str(rep.method),
    })
}

pub fn size_human(s: &ClusterSize) -> String {
    match s {
        ClusterSize::Exact(r) => r.to_string(),
        ClusterSize::Interval { lower, upper } => format!("in [{lower}, {upper}]"),
    }
}

pub fn certificate_human(c: &ClusterCertificate) -> String {
    format!(
        "certificate: {} verified roots, modular upper bound {} (primes {})",
        c.witnesses,
        c.upper_bound,
        c.primes
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    )
}
