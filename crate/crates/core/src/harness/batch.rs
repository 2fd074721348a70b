use std::io::{self, Write};

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{bound_report, NikiforovBound};
use crate::exact::{serialize_rational, ExactValue, Rational, SqrtRatio};
use crate::graph::Graph;
use crate::invariants::iota;
use crate::{Error, Result};

/// Absolute tolerance between λ and a bound for the bound to count as sharp.
pub const SHARP_TOLERANCE: f64 = 1e-7;

pub const CSV_HEADER: &str = "graph6,n,m,lambda,eta,iota,explicit,nik_r,nik,chain_ok,eta_sharp,iota_sharp,\
explicit_sharp,comparison_ok,eta_e,eta_p,iota_num,iota_den,explicit_num,explicit_den,nik_num,nik_den";

/// Bounds and sharpness flags for one corpus graph.
#[derive(Clone, Debug, Serialize)]
pub struct BatchRow {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub lambda: f64,
    pub eta: SqrtRatio,
    #[serde(serialize_with = "serialize_rational")]
    pub iota: Rational,
    pub explicit: Option<ExactValue>,
    pub nikiforov: Option<NikiforovBound>,
    pub chain_ok: bool,
    pub eta_sharp: bool,
    pub iota_sharp: bool,
    pub explicit_sharp: Option<bool>,
    pub comparison_ok: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum RowOutcome {
    Ok(BatchRow),
    Skipped { line: usize, graph6: String, n: usize, m: usize, reason: String },
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct BatchSummary {
    pub rows: usize,
    pub skipped: usize,
    pub chain_failures: usize,
    pub eta_sharp: usize,
    pub iota_sharp: usize,
    pub explicit_sharp: usize,
    /// Smallest and mean of `-η - λ` over computed rows.
    pub min_eta_gap: Option<f64>,
    pub mean_eta_gap: Option<f64>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct BatchOptions {
    /// Fail instead of skipping graphs beyond the solver ceilings.
    pub strict: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BatchOutput {
    pub rows: Vec<RowOutcome>,
    pub summary: BatchSummary,
}

impl BatchOutput {
    /// No computed row broke the bound chain.
    pub fn ok(&self) -> bool {
        self.summary.chain_failures == 0
    }

    pub fn computed(&self) -> impl Iterator<Item = &BatchRow> {
        self.rows.iter().filter_map(|r| match r {
            RowOutcome::Ok(row) => Some(row),
            RowOutcome::Skipped { .. } => None,
        })
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "{CSV_HEADER}")?;
        for row in &self.rows {
            match row {
                RowOutcome::Ok(r) => writeln!(out, "{}", csv_line(r))?,
                RowOutcome::Skipped { graph6, n, m, .. } => writeln!(out, "{graph6},{n},{m}{}", ",".repeat(19))?,
            }
        }
        Ok(())
    }

    pub fn write_json<W: Write>(&self, out: W) -> io::Result<()> {
        serde_json::to_writer_pretty(out, self).map_err(io::Error::other)
    }
}

/// `%.10g`-style rendering: 10 significant digits, trailing zeros trimmed.
pub fn format_sig10(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x.is_finite() { "0".into() } else { x.to_string() };
    }
    let exp = x.abs().log10().floor() as i32;
    let trim = |s: String| -> String {
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    };
    if (-5..10).contains(&exp) {
        let decimals = (9 - exp).max(0) as usize;
        let s = trim(format!("{x:.decimals$}"));
        if s == "-0" {
            "0".into()
        } else {
            s
        }
    } else {
        let s = format!("{x:.9e}");
        let (mantissa, e) = s.split_once('e').expect("scientific format");
        format!("{}e{e}", trim(mantissa.to_string()))
    }
}

fn bool_field(b: Option<bool>) -> String {
    b.map(|b| b.to_string()).unwrap_or_default()
}

fn exact_parts(v: &Option<ExactValue>) -> (String, String) {
    match v.as_ref().and_then(|v| v.as_rational()) {
        Some(q) => (q.numer().to_string(), q.denom().to_string()),
        None => (String::new(), String::new()),
    }
}

fn csv_line(r: &BatchRow) -> String {
    let explicit = r.explicit.as_ref().map(|e| format_sig10(e.to_f64())).unwrap_or_default();
    let (nik_r, nik) = match &r.nikiforov {
        Some(b) => (b.r.to_string(), format_sig10(b.value.to_f64())),
        None => (String::new(), String::new()),
    };
    let (explicit_num, explicit_den) = exact_parts(&r.explicit);
    let (nik_num, nik_den) = exact_parts(&r.nikiforov.as_ref().map(|b| b.value.clone()));
    [
        r.graph6.clone(),
        r.n.to_string(),
        r.m.to_string(),
        format_sig10(r.lambda),
        format_sig10(r.eta.to_f64()),
        format_sig10(crate::exact::rational_to_f64(&r.iota)),
        explicit,
        nik_r,
        nik,
        r.chain_ok.to_string(),
        r.eta_sharp.to_string(),
        r.iota_sharp.to_string(),
        bool_field(r.explicit_sharp),
        bool_field(r.comparison_ok),
        r.eta.e.to_string(),
        r.eta.p.to_string(),
        r.iota.numer().to_string(),
        r.iota.denom().to_string(),
        explicit_num,
        explicit_den,
        nik_num,
        nik_den,
    ]
    .join(",")
}

/// One row, recomputed from the graph6 text alone.
pub fn compute_row(graph6: &str) -> Result<BatchRow> {
    let g = Graph::parse_graph6(graph6)?;
    row_for(&g, graph6.trim())
}

fn row_for(g: &Graph, graph6: &str) -> Result<BatchRow> {
    let report = bound_report(g, None)?;
    let iota = iota(g)?.value;
    let eta = crate::invariants::eta(g)?.value;
    let sharp = |bound: f64| (report.lambda_min - bound).abs() <= SHARP_TOLERANCE;
    Ok(BatchRow {
        graph6: graph6.to_string(),
        n: g.n(),
        m: g.m(),
        lambda: report.lambda_min,
        eta,
        iota,
        eta_sharp: sharp(report.eta_bound.to_f64()),
        iota_sharp: sharp(report.iota_bound.to_f64()),
        explicit_sharp: report.explicit_bound.as_ref().map(|e| sharp(e.to_f64())),
        comparison_ok: report.comparison_ok,
        chain_ok: report.chain_ok,
        explicit: report.explicit_bound,
        nikiforov: report.nikiforov,
    })
}

/// Parses every nonblank line; the first malformed line aborts with its
/// 1-based line number.
pub fn parse_corpus(text: &str) -> Result<Vec<(usize, String, Graph)>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            Graph::parse_graph6(l)
                .map(|g| (i + 1, l.trim().to_string(), g))
                .map_err(|e| Error::Line { line: i + 1, source: Box::new(e) })
        })
        .collect()
}

fn skippable(e: &Error) -> bool {
    matches!(e, Error::SizeLimit { .. } | Error::TooFewVertices { .. } | Error::EmptyGraph)
}

/// Runs every graph of a graph6 corpus. Rows are computed in parallel and
/// reported in input order.
pub fn run_batch(text: &str, options: BatchOptions) -> Result<BatchOutput> {
    let graphs = parse_corpus(text)?;
    let outcomes: Vec<Result<RowOutcome>> = graphs
        .par_iter()
        .map(|(line, g6, g)| match row_for(g, g6) {
            Ok(row) => Ok(RowOutcome::Ok(row)),
            Err(e) if skippable(&e) && !options.strict => {
                Ok(RowOutcome::Skipped { line: *line, graph6: g6.clone(), n: g.n(), m: g.m(), reason: e.to_string() })
            }
            Err(e) => Err(Error::Line { line: *line, source: Box::new(e) }),
        })
        .collect();
    let rows = outcomes.into_iter().collect::<Result<Vec<_>>>()?;
    let summary = summarize(&rows);
    Ok(BatchOutput { rows, summary })
}

fn summarize(rows: &[RowOutcome]) -> BatchSummary {
    let mut s = BatchSummary::default();
    let mut gap_sum = 0.0;
    for row in rows {
        let RowOutcome::Ok(r) = row else {
            s.skipped += 1;
            continue;
        };
        s.rows += 1;
        s.chain_failures += usize::from(!r.chain_ok);
        s.eta_sharp += usize::from(r.eta_sharp);
        s.iota_sharp += usize::from(r.iota_sharp);
        s.explicit_sharp += usize::from(r.explicit_sharp == Some(true));
        let gap = -r.eta.to_f64() - r.lambda;
        gap_sum += gap;
        s.min_eta_gap = Some(s.min_eta_gap.map_or(gap, |g: f64| g.min(gap)));
    }
    if s.rows > 0 {
        s.mean_eta_gap = Some(gap_sum / s.rows as f64);
    }
    s
}
