//! Machine-readable reports: a stable JSON schema plus table and CSV
//! renderings.
//!
//! JSON is emitted by hand so the byte layout is fully pinned: object keys
//! in a fixed order, floats always rendered with 17 significant digits
//! (`{:.16e}`), optional numeric fields omitted when absent (the "infinite"
//! marker). Identical inputs produce byte-identical documents; elapsed
//! times are deliberately not part of the rendered report.

use std::collections::BTreeMap;

use serde::Deserialize;

use wreathgap::spectral::SpectralReport;
use wreathgap::verify::{CheckResult, Summary};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub results: Results,
    pub summary: SummaryOut,
}

#[derive(Debug, Clone, PartialEq, Default, Deserialize)]
pub struct Results {
    #[serde(default)]
    pub irreps: Vec<IrrepRow>,
    #[serde(default)]
    pub spectra: Vec<SpectrumRow>,
    #[serde(default)]
    pub checks: Vec<CheckRow>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct IrrepRow {
    pub label: String,
    pub dimension: usize,
    pub is_lift: bool,
    pub is_trivial: bool,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct SpectrumRow {
    pub rep_label: String,
    pub dimension: usize,
    pub is_trivial: bool,
    pub lambda_min: f64,
    pub eigenvalues: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct CheckRow {
    pub check_name: String,
    pub status: String,
    #[serde(default)]
    pub lhs: Option<f64>,
    #[serde(default)]
    pub rhs: Option<f64>,
    #[serde(default)]
    pub margin: Option<f64>,
    #[serde(default)]
    pub witnesses: Vec<String>,
    pub tolerance: f64,
    #[serde(default)]
    pub note: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
pub struct SummaryOut {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl From<Summary> for SummaryOut {
    fn from(s: Summary) -> Self {
        SummaryOut {
            pass: s.pass,
            fail: s.fail,
            skipped: s.skipped,
        }
    }
}

impl From<&SpectralReport> for SpectrumRow {
    fn from(r: &SpectralReport) -> Self {
        SpectrumRow {
            rep_label: r.rep_label.clone(),
            dimension: r.dimension,
            is_trivial: r.is_trivial_rep,
            lambda_min: r.lambda_min,
            eigenvalues: r.eigenvalues.clone(),
        }
    }
}

impl From<&CheckResult> for CheckRow {
    fn from(r: &CheckResult) -> Self {
        CheckRow {
            check_name: r.check_name.clone(),
            status: r.status.to_string(),
            lhs: r.lhs,
            rhs: r.rhs,
            margin: r.margin,
            witnesses: r.witnesses.clone(),
            tolerance: r.tolerance,
            note: r.note.clone(),
        }
    }
}

impl Report {
    pub fn new(command: impl Into<String>, inputs: BTreeMap<String, String>) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            inputs,
            results: Results::default(),
            summary: SummaryOut::default(),
        }
    }

    pub fn with_checks(mut self, checks: &[CheckResult]) -> Self {
        self.summary = wreathgap::verify::summarize(checks.iter()).into();
        self.results.checks = checks.iter().map(CheckRow::from).collect();
        self
    }

    pub fn with_spectra(mut self, spectra: &[SpectralReport]) -> Self {
        self.results.spectra = spectra.iter().map(SpectrumRow::from).collect();
        self
    }

    pub fn exit_code(&self) -> i32 {
        if self.summary.fail > 0 {
            1
        } else {
            0
        }
    }

    pub fn parse(text: &str) -> Result<Report, String> {
        serde_json::from_str(text).map_err(|e| e.to_string())
    }
}

/// 17-significant-digit float rendering, valid as a JSON number.
pub fn format_float(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x }; // normalize -0.0
    format!("{x:.16e}")
}

fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn render_json(report: &Report) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str(&format!(
        "  \"schema_version\": {},\n  \"command\": {},\n",
        report.schema_version,
        json_string(&report.command)
    ));

    out.push_str("  \"inputs\": {");
    for (k, (key, value)) in report.inputs.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        out.push_str(&format!("\n    {}: {}", json_string(key), json_string(value)));
    }
    if !report.inputs.is_empty() {
        out.push_str("\n  ");
    }
    out.push_str("},\n");

    out.push_str("  \"results\": {\n");
    out.push_str("    \"irreps\": [");
    for (k, row) in report.results.irreps.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        out.push_str(&format!(
            "\n      {{\"label\": {}, \"dimension\": {}, \"is_lift\": {}, \"is_trivial\": {}}}",
            json_string(&row.label),
            row.dimension,
            row.is_lift,
            row.is_trivial
        ));
    }
    if !report.results.irreps.is_empty() {
        out.push_str("\n    ");
    }
    out.push_str("],\n");

    out.push_str("    \"spectra\": [");
    for (k, row) in report.results.spectra.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        let evals: Vec<String> = row.eigenvalues.iter().map(|&x| format_float(x)).collect();
        out.push_str(&format!(
            "\n      {{\"rep_label\": {}, \"dimension\": {}, \"is_trivial\": {}, \"lambda_min\": {}, \"eigenvalues\": [{}]}}",
            json_string(&row.rep_label),
            row.dimension,
            row.is_trivial,
            format_float(row.lambda_min),
            evals.join(", ")
        ));
    }
    if !report.results.spectra.is_empty() {
        out.push_str("\n    ");
    }
    out.push_str("],\n");

    out.push_str("    \"checks\": [");
    for (k, row) in report.results.checks.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        out.push_str(&format!(
            "\n      {{\"check_name\": {}, \"status\": {}",
            json_string(&row.check_name),
            json_string(&row.status)
        ));
        for (name, value) in [("lhs", row.lhs), ("rhs", row.rhs), ("margin", row.margin)] {
            if let Some(v) = value {
                out.push_str(&format!(", \"{name}\": {}", format_float(v)));
            }
        }
        let witnesses: Vec<String> = row.witnesses.iter().map(|w| json_string(w)).collect();
        out.push_str(&format!(
            ", \"witnesses\": [{}], \"tolerance\": {}, \"note\": {}}}",
            witnesses.join(", "),
            format_float(row.tolerance),
            json_string(&row.note)
        ));
    }
    if !report.results.checks.is_empty() {
        out.push_str("\n    ");
    }
    out.push_str("]\n  },\n");

    out.push_str(&format!(
        "  \"summary\": {{\"pass\": {}, \"fail\": {}, \"skipped\": {}}}\n}}\n",
        report.summary.pass, report.summary.fail, report.summary.skipped
    ));
    out
}

fn render_table(report: &Report) -> String {
    let mut out = String::new();
    out.push_str(&format!("# {}\n", report.command));
    for (key, value) in &report.inputs {
        out.push_str(&format!("#   {key} = {value}\n"));
    }

    if !report.results.irreps.is_empty() {
        out.push_str(&format!(
            "{:<24} {:>4} {:>6} {:>8}\n",
            "LABEL", "DIM", "LIFT", "TRIVIAL"
        ));
        for row in &report.results.irreps {
            out.push_str(&format!(
                "{:<24} {:>4} {:>6} {:>8}\n",
                row.label, row.dimension, row.is_lift, row.is_trivial
            ));
        }
    }

    if !report.results.spectra.is_empty() {
        out.push_str(&format!(
            "{:<24} {:>4} {:>8} {:>24}  EIGENVALUES\n",
            "REP", "DIM", "TRIVIAL", "LAMBDA_MIN"
        ));
        for row in &report.results.spectra {
            let evals: Vec<String> = row.eigenvalues.iter().map(|&x| format_float(x)).collect();
            out.push_str(&format!(
                "{:<24} {:>4} {:>8} {:>24}  [{}]\n",
                row.rep_label,
                row.dimension,
                row.is_trivial,
                format_float(row.lambda_min),
                evals.join(", ")
            ));
        }
    }

    if !report.results.checks.is_empty() {
        out.push_str(&format!(
            "{:<44} {:<8} {:>24} {:>24} {:>13}  NOTE\n",
            "CHECK", "STATUS", "LHS", "RHS", "MARGIN"
        ));
        for row in &report.results.checks {
            let fmt_opt =
                |v: Option<f64>| v.map(format_float).unwrap_or_else(|| "-".to_string());
            let mut note = row.note.clone();
            if !row.witnesses.is_empty() {
                if !note.is_empty() {
                    note.push_str("; ");
                }
                note.push_str(&format!("witnesses: {}", row.witnesses.join(" ")));
            }
            out.push_str(&format!(
                "{:<44} {:<8} {:>24} {:>24} {:>13}  {}\n",
                row.check_name,
                row.status,
                fmt_opt(row.lhs),
                fmt_opt(row.rhs),
                row.margin.map(|m| format!("{m:.3e}")).unwrap_or_else(|| "-".into()),
                note
            ));
        }
    }

    out.push_str(&format!(
        "summary: pass={} fail={} skipped={}\n",
        report.summary.pass, report.summary.fail, report.summary.skipped
    ));
    out
}

fn csv_escape(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn render_csv(report: &Report) -> String {
    let mut out = String::new();
    let mut blocks = 0usize;

    if !report.results.irreps.is_empty() {
        blocks += 1;
        out.push_str("label,dimension,is_lift,is_trivial\n");
        for row in &report.results.irreps {
            out.push_str(&format!(
                "{},{},{},{}\n",
                csv_escape(&row.label),
                row.dimension,
                row.is_lift,
                row.is_trivial
            ));
        }
    }
    if !report.results.spectra.is_empty() {
        if blocks > 0 {
            out.push('\n');
        }
        blocks += 1;
        out.push_str("rep_label,dimension,is_trivial,index,eigenvalue\n");
        for row in &report.results.spectra {
            for (i, &ev) in row.eigenvalues.iter().enumerate() {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    csv_escape(&row.rep_label),
                    row.dimension,
                    row.is_trivial,
                    i,
                    format_float(ev)
                ));
            }
        }
    }
    if !report.results.checks.is_empty() {
        if blocks > 0 {
            out.push('\n');
        }
        blocks += 1;
        out.push_str("check_name,status,lhs,rhs,margin,tolerance,witnesses,note\n");
        for row in &report.results.checks {
            let fmt_opt = |v: Option<f64>| v.map(format_float).unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                csv_escape(&row.check_name),
                row.status,
                fmt_opt(row.lhs),
                fmt_opt(row.rhs),
                fmt_opt(row.margin),
                format_float(row.tolerance),
                csv_escape(&row.witnesses.join(" ")),
                csv_escape(&row.note)
            ));
        }
    }
    if blocks == 0 {
        // Empty results: still a valid document.
        out.push_str("summary,pass,fail,skipped\n");
    }
    out.push_str(&format!(
        "summary,{},{},{}\n",
        report.summary.pass, report.summary.fail, report.summary.skipped
    ));
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
    Csv,
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => render_json(report),
        Format::Table => render_table(report),
        Format::Csv => render_csv(report),
    }
}
