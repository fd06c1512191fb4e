//! The computations behind each subcommand. Every command returns a
//! serializable report; rendering and exit codes are left to the binary.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use hopf_core::cyclo::{complex_embed, CycNum};
use hopf_core::fusionindex::{analyze_with_gv, divisibility_report, FusionAnalysis};
use hopf_core::indicators::Route;
use hopf_core::{Error, Result};
use num_integer::gcd;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::catalog::{catalog, CatalogEntry};
use crate::suites::{self, Check, Status, Subject, Suite};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum KPolicy {
    /// `k = 1` only.
    One,
    /// `k ∈ {1, m−1}`.
    Pair,
    /// Every `k < m` prime to `m`.
    Coprime,
}

impl KPolicy {
    pub fn ks(self, m: u64) -> Vec<u64> {
        match self {
            KPolicy::One => vec![1],
            KPolicy::Pair if m > 2 => vec![1, m - 1],
            KPolicy::Pair => vec![1],
            KPolicy::Coprime => (1..m.max(2)).filter(|&k| gcd(k, m) == 1).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport<T: Serialize> {
    pub command: &'static str,
    pub algebra: Option<String>,
    pub dim: Option<usize>,
    pub version: &'static str,
    pub seed: u64,
    pub settings: suites::Settings,
    pub outputs: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, u128>>,
}

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

impl<T: Serialize> RunReport<T> {
    pub fn new(command: &'static str, subject: Option<&Subject>, settings: &suites::Settings, outputs: T) -> Self {
        RunReport {
            command,
            algebra: subject.map(|s| s.name.clone()),
            dim: subject.map(|s| s.alg.dim()),
            version: VERSION,
            seed: settings.seed,
            settings: settings.clone(),
            outputs,
            timings_ms: None,
        }
    }
}

pub fn cmd_catalog() -> Vec<CatalogEntry> {
    catalog()
}

#[derive(Clone, Debug, Serialize)]
pub struct IndicatorRow {
    pub chi: String,
    pub degree: u64,
    pub m: u64,
    pub k: u64,
    pub value: String,
    pub approx: String,
    pub integer: Option<i64>,
    pub routes: Vec<&'static str>,
    pub skipped: Vec<String>,
}

fn approx(v: &CycNum, bits: u32) -> Result<String> {
    let e = complex_embed(v, bits)?;
    let mid = |lo: &hopf_core::cyclo::Rational, hi: &hopf_core::cyclo::Rational| -> f64 {
        ((lo + hi) / hopf_core::cyclo::rat(2, 1)).to_f64().unwrap_or(f64::NAN)
    };
    let (re, im) = (mid(&e.re_lo, &e.re_hi), mid(&e.im_lo, &e.im_hi));
    let clean = |x: f64| if x.abs() < 1e-12 { 0.0 } else { x };
    Ok(format!("{:.9}{:+.9}i", clean(re), clean(im)))
}

fn select(subject: &Subject, chi: Option<&str>) -> Result<Vec<usize>> {
    let ring = subject.ring.as_ref().map_err(|why| Error::Resource(why.clone()))?;
    match chi {
        None => Ok((0..ring.k()).collect()),
        Some(key) => ring
            .find(key)
            .map(|i| vec![i])
            .ok_or_else(|| Error::Domain(format!("no character matches {:?}", key))),
    }
}

pub fn cmd_indicators(subject: &Subject, m_max: u64, k_policy: KPolicy, chi: Option<&str>) -> Result<Vec<IndicatorRow>> {
    let chars = select(subject, chi)?;
    let mut eng = subject.engine().expect("ring checked by select");
    let mut rows = Vec::new();
    for i in chars {
        let c = eng.ring().get(i).clone();
        for m in 1..=m_max {
            for k in k_policy.ks(m) {
                let r = eng.nu_k(i, m, k)?;
                rows.push(IndicatorRow {
                    chi: c.name.clone(),
                    degree: c.degree,
                    m,
                    k,
                    value: r.value.to_string(),
                    approx: approx(&r.value, subject.settings.precision_bits)?,
                    integer: r.integrality,
                    routes: r.routes_used.iter().map(|r| r.as_str()).collect(),
                    skipped: r.skipped.iter().map(|(r, why): &(Route, String)| format!("{}: {}", r.as_str(), why)).collect(),
                });
            }
        }
    }
    Ok(rows)
}

pub fn indicators_csv(rows: &[IndicatorRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["chi", "degree", "m", "k", "value", "approx", "integer", "routes"]).map_err(csv_err)?;
    for r in rows {
        w.write_record([
            r.chi.clone(),
            r.degree.to_string(),
            r.m.to_string(),
            r.k.to_string(),
            r.value.clone(),
            r.approx.clone(),
            r.integer.map(|v| v.to_string()).unwrap_or_default(),
            r.routes.join(";"),
        ])
        .map_err(csv_err)?;
    }
    String::from_utf8(w.into_inner().map_err(|e| Error::Domain(e.to_string()))?).map_err(|e| Error::Domain(e.to_string()))
}

fn csv_err(e: csv::Error) -> Error {
    Error::Domain(format!("csv: {}", e))
}

#[derive(Clone, Debug, Serialize)]
pub struct ExponentRow {
    pub chi: String,
    pub degree: u64,
    pub exp: u64,
    pub routes: Vec<&'static str>,
    pub scan_cap: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExponentOutput {
    pub exp: u64,
    pub method: &'static str,
    pub closed_form: u64,
    pub characters: Vec<ExponentRow>,
}

pub fn cmd_exponent(subject: &Subject, chi: Option<&str>) -> Result<ExponentOutput> {
    let closed = subject.alg.exponent_closed();
    let Some(mut eng) = subject.engine() else {
        return Ok(ExponentOutput { exp: closed, method: "closed form", closed_form: closed, characters: Vec::new() });
    };
    let mut rows = Vec::new();
    for i in select(subject, chi)? {
        let r = eng.exponent_of(i)?;
        let c = eng.ring().get(i);
        rows.push(ExponentRow {
            chi: c.name.clone(),
            degree: c.degree,
            exp: r.value,
            routes: r
                .routes
                .iter()
                .map(|r| match r {
                    hopf_core::indicators::ExponentRoute::NuScan => "nu_scan",
                    hopf_core::indicators::ExponentRoute::TOrder => "t_order",
                })
                .collect(),
            scan_cap: r.bound_used,
        });
    }
    let exp = eng.algebra_exponent()?;
    Ok(ExponentOutput { exp, method: "lcm of simple exponents", closed_form: closed, characters: rows })
}

#[derive(Clone, Debug, Serialize)]
pub struct OrderRow {
    pub chi: String,
    pub degree: u64,
    pub ord: u64,
    pub mult: u64,
    pub ord_divides_dim: bool,
    pub ord_divides_dim_mult: bool,
}

pub fn cmd_order(subject: &Subject, chi: Option<&str>) -> Result<Vec<OrderRow>> {
    let ring = subject.ring.as_ref().map_err(|why| Error::Resource(why.clone()))?;
    let dim = subject.alg.dim() as u64;
    let mut rows = Vec::new();
    for i in select(subject, chi)? {
        let c = ring.get(i);
        let (ord, mult) = ring.order_and_multiplicity(c)?;
        if ring.order_by_fusion_powers(c)? != (ord, mult) {
            return Err(Error::Invariant(format!("{}: invariant counting and fusion powers disagree", c.name)));
        }
        rows.push(OrderRow {
            chi: c.name.clone(),
            degree: c.degree,
            ord,
            mult,
            ord_divides_dim: dim % ord == 0,
            ord_divides_dim_mult: (dim * mult) % ord == 0,
        });
    }
    Ok(rows)
}

#[derive(Clone, Debug, Serialize)]
pub struct IndexOutput {
    pub chi: String,
    pub degree: u64,
    pub matrix: Vec<Vec<u64>>,
    pub reachable: Vec<String>,
    pub blocks: Vec<Vec<String>>,
    pub indecomposable_on_reachable: bool,
    pub perron: u64,
    pub index: u64,
    pub gv_order: Option<u64>,
    pub exp: u64,
    pub ord: u64,
}

pub fn cmd_index(subject: &Subject, chi: Option<&str>) -> Result<Vec<(IndexOutput, FusionAnalysis)>> {
    let ring = subject.ring.as_ref().map_err(|why| Error::Resource(why.clone()))?;
    let (exp, _) = subject.exponent()?;
    let names = |v: &[usize]| v.iter().map(|&i| ring.get(i).name.clone()).collect::<Vec<_>>();
    let mut out = Vec::new();
    for i in select(subject, chi)? {
        let fa = analyze_with_gv(ring, i)?;
        let d = divisibility_report(ring, &fa, exp)?;
        out.push((
            IndexOutput {
                chi: ring.get(i).name.clone(),
                degree: ring.get(i).degree,
                matrix: fa.matrix.clone(),
                reachable: names(&fa.reachable),
                blocks: fa.blocks.iter().map(|b| names(b)).collect(),
                indecomposable_on_reachable: fa.indecomposable_on_reachable,
                perron: fa.perron,
                index: fa.index,
                gv_order: fa.gv_order,
                exp,
                ord: d.ord,
            },
            fa,
        ));
    }
    Ok(out)
}

/// GraphViz rendering of the fusion digraph `j → i` for `a_ij > 0`.
pub fn fusion_dot(subject: &Subject, fa: &FusionAnalysis) -> String {
    let ring = subject.ring.as_ref().expect("analysis implies a ring");
    let mut s = String::new();
    let _ = writeln!(s, "digraph fusion_{} {{", ring.get(fa.chi).name);
    for i in 0..fa.matrix.len() {
        let style = if fa.reachable.contains(&i) { "solid" } else { "dashed" };
        let _ = writeln!(s, "  {} [label=\"{} ({})\", style={}];", ring.get(i).name, ring.get(i).name, ring.get(i).degree, style);
    }
    for (i, row) in fa.matrix.iter().enumerate() {
        for (j, &a) in row.iter().enumerate() {
            if a > 0 {
                let label = if a > 1 { format!(" [label=\"{}\"]", a) } else { String::new() };
                let _ = writeln!(s, "  {} -> {}{};", ring.get(j).name, ring.get(i).name, label);
            }
        }
    }
    s.push_str("}\n");
    s
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyOutput {
    pub suite: Suite,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub resource: usize,
    pub failures: Vec<Check>,
    pub checks: Vec<Check>,
}

impl VerifyOutput {
    /// 0 when everything passed or was skipped, 2 on a failure, 3 when only
    /// guards were hit.
    pub fn exit_code(&self) -> i32 {
        if self.failed > 0 {
            2
        } else if self.resource > 0 {
            3
        } else {
            0
        }
    }
}

pub fn cmd_verify(subject: &Subject, suite: Suite) -> VerifyOutput {
    let checks = suites::run(subject, suite);
    let count = |s: Status| checks.iter().filter(|c| c.status == s).count();
    VerifyOutput {
        suite,
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        skipped: count(Status::Skip),
        resource: count(Status::Resource),
        failures: checks.iter().filter(|c| matches!(c.status, Status::Fail | Status::Resource)).cloned().collect(),
        checks,
    }
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Invariant(_) => 2,
        Error::Resource(_) | Error::UndecidableAtCap(_) => 3,
        Error::Domain(_) | Error::Unsupported(_) | Error::DivisionByZero | Error::Parse { .. } => 4,
    }
}
