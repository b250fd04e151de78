//! Flat report records shared by the text, CSV and JSON renderings.

use std::fmt::Write as _;

use ffbinom::stability::{MersenneReport, ReducibleCause, ScanCoverage, StabilityVerdict, VerdictKind};
use ffbinom::{CrossCheckReport, Field, FieldElement, Poly, Result};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

/// Everything `analyze` reports about one binomial, flattened.
#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeReport {
    pub q: u64,
    pub modulus: Option<String>,
    pub d: u64,
    pub a: String,
    /// Present when the input was the non-monic pair (b, c).
    pub normalized: Option<NormalizedInput>,
    pub orbit: Vec<String>,
    pub n0: usize,
    pub m0: usize,
    pub stable: bool,
    pub reducible_at: Option<u32>,
    pub failing_index: Option<usize>,
    /// "2", "3", ... for an l-th power failure; "zero" for an orbit zero;
    /// "p|d" for the characteristic fast path.
    pub failing_cause: Option<String>,
    pub failing_value: Option<String>,
    pub witness: Option<String>,
    pub early_stable_bound: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct NormalizedInput {
    pub b: String,
    pub c: String,
    pub lambda: String,
}

pub fn modulus_string(field: &Field) -> Option<String> {
    field.modulus().map(|m| {
        let base = Field::new(field.p(), 1).expect("prime field");
        Poly::from_codes(&base, m).expect("valid modulus").to_string()
    })
}

pub fn analyze_report(
    a: &FieldElement,
    d: u64,
    normalized: Option<NormalizedInput>,
    want_witness: bool,
) -> Result<AnalyzeReport> {
    let field = a.field();
    let orbit = ffbinom::critical_orbit(a, d)?;
    let verdict = ffbinom::stability_verdict(a, d)?;
    let witness = if want_witness { verdict.witness()?.map(|w| w.to_string()) } else { None };
    let (failing_index, failing_cause, failing_value) = match &verdict.cause {
        None => (None, None, None),
        Some(ReducibleCause::CharacteristicDividesDegree) => {
            (None, Some("p|d".to_string()), None)
        }
        Some(ReducibleCause::OrbitZero { index }) => {
            (Some(*index), Some("zero".to_string()), Some("0".to_string()))
        }
        Some(ReducibleCause::OrbitPower { index, l, value }) => {
            (Some(*index), Some(l.to_string()), Some(value.to_string()))
        }
    };
    Ok(AnalyzeReport {
        q: field.q(),
        modulus: modulus_string(field),
        d,
        a: a.to_string(),
        normalized,
        orbit: orbit.printed_values().iter().map(|v| v.to_string()).collect(),
        n0: orbit.n0,
        m0: orbit.m0,
        stable: verdict.is_stable(),
        reducible_at: match verdict.kind {
            VerdictKind::Stable => None,
            VerdictKind::ReducibleAtIterate(n) => Some(n),
        },
        failing_index,
        failing_cause,
        failing_value,
        witness,
        early_stable_bound: ffbinom::early_stable_bound(a, d)?,
    })
}

impl AnalyzeReport {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("report serializes"),
            Format::Csv => {
                let mut out = String::from(
                    "q,modulus,d,a,orbit,n0,m0,verdict,reducible_at,failing_index,failing_cause,failing_value,witness,early_stable_bound\n",
                );
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
                    self.q,
                    self.modulus.as_deref().unwrap_or("-"),
                    self.d,
                    self.a,
                    self.orbit.join(" "),
                    self.n0,
                    self.m0,
                    if self.stable { "stable" } else { "reducible" },
                    opt(&self.reducible_at),
                    opt(&self.failing_index),
                    self.failing_cause.as_deref().unwrap_or(""),
                    self.failing_value.as_deref().unwrap_or(""),
                    self.witness.as_deref().unwrap_or(""),
                    self.early_stable_bound,
                )
                .unwrap();
                out
            }
            Format::Text => {
                let mut out = String::new();
                match &self.modulus {
                    Some(m) => writeln!(out, "field: F_{} with M = {}", self.q, m).unwrap(),
                    None => writeln!(out, "field: F_{}", self.q).unwrap(),
                }
                if let Some(n) = &self.normalized {
                    writeln!(
                        out,
                        "input: {}*x^{} - {}  (lambda = {}, conjugate of x^{} - {})",
                        n.b, self.d, n.c, n.lambda, self.d, self.a
                    )
                    .unwrap();
                } else {
                    writeln!(out, "binomial: x^{} - {}", self.d, self.a).unwrap();
                }
                writeln!(out, "orbit: [{}]  n0={} m0={}", self.orbit.join(","), self.n0, self.m0)
                    .unwrap();
                match self.reducible_at {
                    None => writeln!(out, "verdict: stable").unwrap(),
                    Some(n) => {
                        writeln!(out, "verdict: reducible at iterate {n}").unwrap();
                        match (self.failing_index, self.failing_cause.as_deref()) {
                            (_, Some("p|d")) => {
                                writeln!(out, "cause: characteristic divides degree").unwrap()
                            }
                            (Some(k), Some("zero")) => {
                                writeln!(out, "cause: orbit value P_{k} = 0").unwrap()
                            }
                            (Some(k), Some(l)) => {
                                let v = self.failing_value.as_deref().unwrap_or("?");
                                let power = match l {
                                    "2" => "a square".to_string(),
                                    "3" => "a cube".to_string(),
                                    _ => format!("an {l}-th power"),
                                };
                                writeln!(out, "cause: P_{k} = {v} is {power}").unwrap();
                            }
                            _ => {}
                        }
                        if let Some(w) = &self.witness {
                            writeln!(out, "witness root: {w}").unwrap();
                        }
                    }
                }
                writeln!(out, "early-stability bound: {} iterates", self.early_stable_bound)
                    .unwrap();
                out
            }
        }
    }
}

fn opt<T: std::fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map_or(String::new(), |x| x.to_string())
}

/// One `mersenne` row, flattened.
#[derive(Debug, Clone, Serialize)]
pub struct MersenneRow {
    pub m: u32,
    pub q: u64,
    pub mersenne: u64,
    pub prime: bool,
    pub coverage: String,
    pub all_irreducible: bool,
    pub all_stable: bool,
    pub counterexample: Option<String>,
    pub equivalence_holds: bool,
}

impl MersenneRow {
    pub fn from_report(r: &MersenneReport) -> MersenneRow {
        MersenneRow {
            m: r.m,
            q: r.q,
            mersenne: r.mersenne,
            prime: r.mersenne_prime,
            coverage: match r.coverage {
                ScanCoverage::Full => "full".to_string(),
                ScanCoverage::Sampled { count } => format!("sampled:{count}"),
            },
            all_irreducible: r.all_irreducible,
            all_stable: r.all_stable,
            counterexample: r.counterexample.as_ref().map(|c| c.to_string()),
            equivalence_holds: r.equivalence_holds,
        }
    }
}

pub fn render_mersenne(rows: &[MersenneRow], format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(rows).expect("rows serialize"),
        Format::Csv => {
            let mut out = String::from(
                "m,q,mersenne,prime,coverage,all_irreducible,all_stable,counterexample,equivalence_holds\n",
            );
            for r in rows {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{}",
                    r.m,
                    r.q,
                    r.mersenne,
                    r.prime,
                    r.coverage,
                    r.all_irreducible,
                    r.all_stable,
                    r.counterexample.as_deref().unwrap_or(""),
                    r.equivalence_holds
                )
                .unwrap();
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for r in rows {
                let status = if r.prime { "prime" } else { "composite" };
                let stable = if r.all_stable { "all stable" } else { "not all stable" };
                write!(out, "m={}: 2^{}-1 = {} ({status}), {stable}", r.m, r.m, r.mersenne)
                    .unwrap();
                if let Some(c) = &r.counterexample {
                    write!(out, ", counterexample a = {c} (x^{} - a reducible)", r.q - 1).unwrap();
                }
                if !r.equivalence_holds {
                    write!(out, " [EQUIVALENCE VIOLATED]").unwrap();
                }
                writeln!(out, " [{}]", r.coverage).unwrap();
            }
            out
        }
    }
}

pub fn verdict_short(v: &StabilityVerdict) -> String {
    match v.kind {
        VerdictKind::Stable => "stable".to_string(),
        VerdictKind::ReducibleAtIterate(n) => format!("reducible@{n}"),
    }
}

pub fn oracle_short(first: Option<u32>) -> String {
    match first {
        Some(n) => format!("reducible@{n}"),
        None => "stable-to-cap".to_string(),
    }
}

/// CSV row for one cross-check: q, modulus, d, a, analyzer, oracle, agree.
pub fn cross_check_csv_row(r: &CrossCheckReport) -> String {
    format!(
        "{},{},{},{},{},{},{}",
        r.field.q(),
        modulus_string(&r.field).unwrap_or_else(|| "-".to_string()),
        r.d,
        r.a,
        verdict_short(&r.analyzer),
        oracle_short(r.oracle_first_reducible),
        r.agree
    )
}
