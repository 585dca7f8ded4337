//! Per-`n` drivers shared by the command line and the bindings: engine
//! selection, range verification and invariant scans.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::analysis::{analyze, PropertyReport};
use crate::closed::{audit_family, dipoly_closed};
use crate::engines::{
    dipoly_bruteforce_with_cap, dipoly_compressed, gamma_i_alpha, DEFAULT_BRUTE_CAP,
};
use crate::error::{Error, Result};
use crate::graph::{build_class_graph, expand_graph};
use crate::numtheory::{classify_family, factorize, FamilyClass};
use crate::poly::{DomPolynomial, SignedPolynomial};
use crate::roots::count_real_roots_exact;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    /// Compressed engine, annotated with the family.
    #[default]
    Auto,
    Closed,
    Compressed,
    Brute,
}

impl Engine {
    pub fn name(&self) -> &'static str {
        match self {
            Engine::Auto | Engine::Compressed => "compressed",
            Engine::Closed => "closed",
            Engine::Brute => "brute",
        }
    }
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Engine::Auto),
            "closed" => Ok(Engine::Closed),
            "compressed" => Ok(Engine::Compressed),
            "brute" => Ok(Engine::Brute),
            _ => Err(Error::Parse(format!("unknown engine {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Computed {
    pub n: u64,
    pub family: FamilyClass,
    pub engine: Engine,
    pub polynomial: DomPolynomial,
}

pub fn compute(n: u64, engine: Engine) -> Result<Computed> {
    let f = factorize(n)?;
    let family = classify_family(&f);
    if family == FamilyClass::EmptyGraph {
        return Err(Error::EmptyGraph(n));
    }
    let polynomial = match engine {
        Engine::Auto | Engine::Compressed => dipoly_compressed(&build_class_graph(n)?)?,
        Engine::Closed => dipoly_closed(&f)?.polynomial,
        Engine::Brute => {
            let cg = build_class_graph(n)?;
            if cg.vertex_count() > DEFAULT_BRUTE_CAP as u64 {
                return Err(Error::SizeCap {
                    what: "brute-force vertex count",
                    size: cg.vertex_count() as usize,
                    cap: DEFAULT_BRUTE_CAP,
                });
            }
            dipoly_bruteforce_with_cap(&expand_graph(&cg)?, DEFAULT_BRUTE_CAP)?
        }
    };
    Ok(Computed {
        n,
        family,
        engine,
        polynomial,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    /// `reference − compressed`
    pub difference: SignedPolynomial,
    pub known_discrepancy: bool,
}

impl Comparison {
    pub fn matches(&self) -> bool {
        self.difference.is_zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyOutcome {
    Checked {
        family: FamilyClass,
        compressed: DomPolynomial,
        closed: Option<Comparison>,
        brute: Option<Comparison>,
    },
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyEntry {
    pub n: u64,
    pub outcome: VerifyOutcome,
}

impl VerifyEntry {
    fn comparisons(&self) -> impl Iterator<Item = &Comparison> {
        let (a, b) = match &self.outcome {
            VerifyOutcome::Checked { closed, brute, .. } => (closed.as_ref(), brute.as_ref()),
            VerifyOutcome::Skipped(_) => (None, None),
        };
        a.into_iter().chain(b)
    }

    pub fn has_mismatch(&self) -> bool {
        self.comparisons().any(|c| !c.matches())
    }

    /// A mismatch not covered by the even prime power ledger.
    pub fn has_unexpected_mismatch(&self) -> bool {
        self.comparisons()
            .any(|c| !c.matches() && !c.known_discrepancy)
    }
}

fn render_check(f: &mut fmt::Formatter<'_>, label: &str, c: &Option<Comparison>) -> fmt::Result {
    match c {
        None => write!(f, " {label}=n/a"),
        Some(c) if c.matches() => write!(f, " {label}=OK"),
        Some(c) => {
            write!(f, " {label}=MISMATCH({})", c.difference)?;
            if c.known_discrepancy {
                f.write_str("[known]")?;
            }
            Ok(())
        }
    }
}

impl fmt::Display for VerifyEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            VerifyOutcome::Skipped(reason) => write!(f, "{} SKIPPED {reason}", self.n),
            VerifyOutcome::Checked {
                family,
                compressed,
                closed,
                brute,
            } => {
                let status = if self.has_mismatch() {
                    "MISMATCH"
                } else {
                    "OK"
                };
                write!(f, "{} {status} {family} {compressed}", self.n)?;
                render_check(f, "closed", closed)?;
                render_check(f, "brute", brute)
            }
        }
    }
}

fn verify_one(n: u64, brute_cap: usize) -> VerifyEntry {
    let outcome = (|| -> Result<VerifyOutcome> {
        let f = factorize(n)?;
        let family = classify_family(&f);
        let cg = build_class_graph(n)?;
        let compressed = dipoly_compressed(&cg)?;
        let closed = if family.has_closed_form() {
            let audit = audit_family(&f)?;
            Some(Comparison {
                known_discrepancy: audit.is_known_discrepancy(),
                difference: audit.difference,
            })
        } else {
            None
        };
        let brute = if cg.vertex_count() <= brute_cap as u64 {
            let b = dipoly_bruteforce_with_cap(&expand_graph(&cg)?, brute_cap)?;
            Some(Comparison {
                difference: b.difference(&compressed),
                known_discrepancy: false,
            })
        } else {
            None
        };
        Ok(VerifyOutcome::Checked {
            family,
            compressed,
            closed,
            brute,
        })
    })()
    .unwrap_or_else(|e| VerifyOutcome::Skipped(e.to_string()));
    VerifyEntry { n, outcome }
}

/// Compressed engine against the closed form (where one exists) and the
/// brute engine (up to `brute_cap` vertices) for every `n` in `lo..=hi`.
pub fn verify_range(lo: u64, hi: u64, brute_cap: usize) -> Vec<VerifyEntry> {
    (lo..=hi)
        .into_par_iter()
        .map(|n| verify_one(n, brute_cap))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRecord {
    pub family: FamilyClass,
    pub gamma_i: usize,
    pub alpha: usize,
    pub mis_count: num_bigint::BigUint,
    pub properties: PropertyReport,
    pub distinct_real_exact: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub n: u64,
    pub result: std::result::Result<ScanRecord, String>,
}

fn scan_one(n: u64, with_roots: bool) -> ScanRow {
    let result = (|| -> Result<ScanRecord> {
        let c = compute(n, Engine::Auto)?;
        let (gamma_i, alpha) = gamma_i_alpha(&c.polynomial)?;
        let distinct_real_exact = if with_roots {
            Some(count_real_roots_exact(&c.polynomial)?.distinct_real)
        } else {
            None
        };
        Ok(ScanRecord {
            family: c.family,
            gamma_i,
            alpha,
            mis_count: c.polynomial.eval_one(),
            properties: analyze(&c.polynomial)?,
            distinct_real_exact,
        })
    })()
    .map_err(|e| match e {
        Error::EmptyGraph(_) => "graph is empty".to_string(),
        e => e.to_string(),
    });
    ScanRow { n, result }
}

/// One row per `n` in `lo..=hi`, in order; failures become skipped rows.
pub fn scan_range(lo: u64, hi: u64, with_roots: bool) -> Vec<ScanRow> {
    (lo..=hi)
        .into_par_iter()
        .map(|n| scan_one(n, with_roots))
        .collect()
}

pub const SCAN_COLUMNS: [&str; 14] = [
    "n",
    "family",
    "gamma_i",
    "alpha",
    "mis_count",
    "unimodal",
    "logconcave",
    "newton",
    "eta",
    "inc_runs",
    "dec_runs",
    "distinct_real_exact",
    "engine",
    "status",
];

pub fn scan_csv(rows: &[ScanRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(SCAN_COLUMNS).expect("in-memory write");
    for row in rows {
        let record: Vec<String> = match &row.result {
            Ok(r) => vec![
                row.n.to_string(),
                r.family.tag().to_string(),
                r.gamma_i.to_string(),
                r.alpha.to_string(),
                r.mis_count.to_string(),
                r.properties.unimodal.to_string(),
                r.properties.logconcave.to_string(),
                r.properties.newton.to_string(),
                r.properties.eta.to_string(),
                r.properties.inc_runs.to_string(),
                r.properties.dec_runs.to_string(),
                r.distinct_real_exact
                    .map(|d| d.to_string())
                    .unwrap_or_default(),
                Engine::Auto.name().to_string(),
                "ok".to_string(),
            ],
            Err(reason) => {
                let family = factorize(row.n)
                    .map(|f| classify_family(&f).tag().to_string())
                    .unwrap_or_default();
                let mut v = vec![row.n.to_string(), family];
                v.extend(std::iter::repeat_n(String::new(), 11));
                v.push(format!("skipped: {reason}"));
                v
            }
        };
        w.write_record(&record).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}
