//! Verification and probe reports with table, CSV and JSON renderings.

use serde::{Deserialize, Serialize};

use crate::constructions::{f_formula, turan_formula, Mode, TuranValue};
use crate::doublestar::DoubleStarSpec;
use crate::error::Result;
use crate::search::extremal::{Engine, ExtremalResult};

/// Version of the JSON report layout.
pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// Default largest `n` for theorem verification.
pub const VERIFY_CAP: usize = 11;
/// Default largest `n` for the `S_{2,3}` probe.
pub const PROBE_CAP: usize = 12;

/// Outcome of comparing a computed value with the known one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RowStatus {
    Match,
    Mismatch,
    /// Computed value respects a proven lower bound.
    BoundHolds,
    BoundViolated,
    /// No closed form applies.
    NotApplicable,
}

impl RowStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            RowStatus::Match => "MATCH",
            RowStatus::Mismatch => "MISMATCH",
            RowStatus::BoundHolds => "BOUND_OK",
            RowStatus::BoundViolated => "BOUND_VIOLATED",
            RowStatus::NotApplicable => "NA",
        }
    }

    pub fn is_failure(self) -> bool {
        matches!(self, RowStatus::Mismatch | RowStatus::BoundViolated)
    }

    fn compare(value: usize, known: &TuranValue) -> Self {
        match known {
            TuranValue::Exact { value: v, .. } if *v == value => RowStatus::Match,
            TuranValue::Exact { .. } => RowStatus::Mismatch,
            TuranValue::LowerBound { value: v, .. } if value >= *v => RowStatus::BoundHolds,
            TuranValue::LowerBound { .. } => RowStatus::BoundViolated,
            TuranValue::Unknown { .. } => RowStatus::NotApplicable,
        }
    }
}

/// Rows that render as a table or CSV.
pub trait Tabular {
    fn header() -> &'static [&'static str];
    fn cells(&self) -> Vec<String>;
}

/// One computed value next to its known value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub mode: Mode,
    pub value: usize,
    pub predicted: TuranValue,
    pub status: RowStatus,
    /// Canonical-least optimal graph.
    pub witness: String,
    pub mop_count: usize,
    /// When the known value applies.
    pub hypothesis: String,
}

impl ReportRow {
    pub fn from_result(r: &ExtremalResult) -> Self {
        let predicted = turan_formula(r.n, r.spec(), r.mode);
        ReportRow {
            n: r.n,
            p: r.p,
            q: r.q,
            mode: r.mode,
            value: r.value,
            status: RowStatus::compare(r.value, &predicted),
            hypothesis: predicted.source().to_owned(),
            predicted,
            witness: r.witnesses.first().cloned().unwrap_or_default(),
            mop_count: r.mop_count,
        }
    }
}

impl Tabular for ReportRow {
    fn header() -> &'static [&'static str] {
        &["n", "p", "q", "mode", "value", "predicted", "status", "mops", "witness", "hypothesis"]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.p.to_string(),
            self.q.to_string(),
            self.mode.to_string(),
            self.value.to_string(),
            self.predicted.describe(),
            self.status.as_str().to_owned(),
            self.mop_count.to_string(),
            self.witness.clone(),
            self.hypothesis.clone(),
        ]
    }
}

/// One `n` of the `S_{2,3}` probe: both exact values and the chain bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeRow {
    pub n: usize,
    pub connected: usize,
    pub general: usize,
    /// Chain construction size, defined from `n = 6`.
    pub chain_bound: Option<usize>,
    /// Whether the connected and general values coincide. Recorded only.
    pub modes_equal: bool,
    /// Whether the general value equals the chain bound. Recorded only.
    pub equals_chain_bound: Option<bool>,
    pub status: RowStatus,
    pub witness_connected: String,
    pub witness_general: String,
    pub hypothesis: String,
}

impl Tabular for ProbeRow {
    fn header() -> &'static [&'static str] {
        &[
            "n",
            "connected",
            "general",
            "f(n)",
            "modes_equal",
            "equals_f",
            "status",
            "witness_connected",
            "witness_general",
            "hypothesis",
        ]
    }

    fn cells(&self) -> Vec<String> {
        let opt = |o: Option<String>| o.unwrap_or_else(|| "-".into());
        vec![
            self.n.to_string(),
            self.connected.to_string(),
            self.general.to_string(),
            opt(self.chain_bound.map(|v| v.to_string())),
            self.modes_equal.to_string(),
            opt(self.equals_chain_bound.map(|v| v.to_string())),
            self.status.as_str().to_owned(),
            self.witness_connected.clone(),
            self.witness_general.clone(),
            self.hypothesis.clone(),
        ]
    }
}

/// A versioned list of rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table<R> {
    pub schema_version: u32,
    pub kind: String,
    pub rows: Vec<R>,
}

pub type Report = Table<ReportRow>;
pub type ProbeReport = Table<ProbeRow>;

impl<R> Table<R> {
    pub fn new(kind: &str, rows: Vec<R>) -> Self {
        Table { schema_version: REPORT_SCHEMA_VERSION, kind: kind.to_owned(), rows }
    }
}

fn status_of<R: Tabular>(row: &R) -> String {
    let i = R::header().iter().position(|&h| h == "status").expect("rows carry a status");
    row.cells().swap_remove(i)
}

impl<R: Tabular + Serialize> Table<R> {
    /// Any row with a mismatch or violated bound.
    pub fn has_failure(&self) -> bool {
        self.rows.iter().any(|r| {
            let s = status_of(r);
            s == RowStatus::Mismatch.as_str() || s == RowStatus::BoundViolated.as_str()
        })
    }

    /// Space-aligned plain text table.
    pub fn to_table(&self) -> String {
        let header: Vec<String> = R::header().iter().map(|s| s.to_string()).collect();
        let body: Vec<Vec<String>> = self.rows.iter().map(Tabular::cells).collect();
        let mut widths: Vec<usize> = header.iter().map(String::len).collect();
        for row in &body {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.len());
            }
        }
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            padded.join("  ").trim_end().to_owned() + "\n"
        };
        let mut out = line(&header);
        for row in &body {
            out.push_str(&line(row));
        }
        out
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(R::header())?;
        for r in &self.rows {
            w.write_record(r.cells())?;
        }
        let bytes = w.into_inner().map_err(|e| crate::error::Error::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv of utf-8 cells"))
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

/// Compares exact searches with every closed-form value that applies for
/// `n = 1..=n_max`, both modes, for each spec.
pub fn verify_theorems(engine: &Engine, specs: &[DoubleStarSpec], n_max: usize) -> Result<Report> {
    let mut rows = Vec::new();
    for &spec in specs {
        for n in 1..=n_max {
            for mode in [Mode::Connected, Mode::General] {
                if turan_formula(n, spec, mode).exact().is_none() {
                    continue;
                }
                rows.push(ReportRow::from_result(&engine.ex(n, spec, mode)?));
            }
        }
    }
    Ok(Report::new("verify", rows))
}

/// Exact `S_{2,3}` values in both modes for `n` in `lo..=hi`. Checks the
/// chain lower bound and that the general value is at least the connected
/// one; equality of the two modes is only recorded.
pub fn probe_conjecture(engine: &Engine, lo: usize, hi: usize) -> Result<ProbeReport> {
    let spec = DoubleStarSpec::new(2, 3)?;
    let mut rows = Vec::new();
    for n in lo.max(1)..=hi {
        let c = engine.ex_connected(n, spec)?;
        let g = engine.ex_general(n, spec)?;
        let chain_bound = if n >= 6 { Some(f_formula(n)?) } else { None };
        let predicted = turan_formula(n, spec, Mode::General);
        let ordered = c.value <= g.value;
        let status = match predicted.exact() {
            Some(v) if ordered && c.value == v && g.value == v => RowStatus::Match,
            Some(_) => RowStatus::Mismatch,
            None => {
                let bound = chain_bound.expect("no exact value only from n = 7");
                if ordered && c.value >= bound {
                    RowStatus::BoundHolds
                } else {
                    RowStatus::BoundViolated
                }
            }
        };
        rows.push(ProbeRow {
            n,
            connected: c.value,
            general: g.value,
            chain_bound,
            modes_equal: c.value == g.value,
            equals_chain_bound: chain_bound.map(|b| b == g.value),
            status,
            witness_connected: c.witnesses.first().cloned().unwrap_or_default(),
            witness_general: g.witnesses.first().cloned().unwrap_or_default(),
            hypothesis: predicted.source().to_owned(),
        });
    }
    Ok(ProbeReport::new("probe", rows))
}
