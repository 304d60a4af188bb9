use std::io::{self, Write};

use gorenstein_core::circulant::{SurveyRow, CSV_HEADER};
use gorenstein_core::gorenstein::{ComponentVerdict, FailureWitness};
use gorenstein_core::indsets::W2Witness;
use gorenstein_core::sqc::{CycleReading, SqcPartition};
use gorenstein_core::{Graph, Verdict};
use serde::Serialize;

use crate::{Failure, Format};

fn opt(b: Option<bool>) -> String {
    b.map_or_else(|| "not evaluated".to_string(), |b| b.to_string())
}

fn opt_csv(b: Option<bool>) -> String {
    b.map_or(String::new(), |b| b.to_string())
}

fn describe_w2(w: &W2Witness) -> String {
    match w {
        W2Witness::Degenerate { n } => format!("only {n} vertices"),
        W2Witness::Pair { first, second } => {
            format!("disjoint independent sets {first} and {second} have no disjoint maximum extensions")
        }
        W2Witness::Lemma { set, vertex } => {
            format!("independent set {set}: every neighbor of {vertex} meets {set} outside {vertex}")
        }
    }
}

fn describe_witness(w: &FailureWitness) -> String {
    match w {
        FailureWitness::Complete { n } => format!("complete graph on {n} vertices"),
        FailureWitness::NotComplementOfCycle => "alpha = 2 but the complement is not a cycle".to_string(),
        FailureWitness::NotW2 { w2 } => format!("not W2: {}", describe_w2(w2)),
        FailureWitness::Euler { value } => format!("I(G,-1) = {value} differs from (-1)^alpha"),
        FailureWitness::Link { face } => format!("link of {face} is not the independence complex of a cycle complement"),
        FailureWitness::Cm { face, dim } => format!("link of {face} has homology in degree {dim}"),
    }
}

fn component_line(c: &ComponentVerdict) -> String {
    format!(
        "  component {}: shape {}, alpha {}, path {}, gorenstein {}",
        c.component, c.shape, c.alpha, c.path, c.gorenstein
    )
}

pub fn classify(out: &mut dyn Write, format: Format, g: &Graph, v: &Verdict) -> Result<(), Failure> {
    match format {
        Format::Json => {
            serde_json::to_writer(&mut *out, v)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["n", "edges", "wellCovered", "w2", "cm", "eulerOk", "linkOk", "gorenstein"])?;
            w.write_record([
                g.n().to_string(),
                g.edge_count().to_string(),
                v.well_covered.to_string(),
                v.w2.to_string(),
                opt_csv(v.cm()),
                opt_csv(v.euler_ok()),
                opt_csv(v.link_condition_ok()),
                v.gorenstein.to_string(),
            ])?;
            w.flush()?;
        }
        Format::Human => {
            writeln!(out, "graph: {} vertices, {} edges", g.n(), g.edge_count())?;
            writeln!(out, "characteristic: {}", v.characteristic)?;
            writeln!(out, "gorenstein: {}", v.gorenstein)?;
            writeln!(out, "well-covered: {}", v.well_covered)?;
            writeln!(out, "w2: {}", v.w2)?;
            writeln!(out, "cohen-macaulay: {}", opt(v.cm()))?;
            writeln!(out, "euler condition: {}", opt(v.euler_ok()))?;
            writeln!(out, "link condition: {}", opt(v.link_condition_ok()))?;
            for c in &v.components {
                writeln!(out, "{}", component_line(c))?;
                if let Some(w) = &c.witness {
                    writeln!(out, "    witness: {}", describe_witness(w))?;
                }
            }
        }
    }
    Ok(())
}

pub fn survey(out: &mut dyn Write, format: Format, rows: &[SurveyRow]) -> Result<(), Failure> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(CSV_HEADER)?;
            for r in rows {
                w.write_record(r.csv_record())?;
            }
            w.flush()?;
        }
        Format::Json => {
            for r in rows {
                serde_json::to_writer(&mut *out, r)?;
                writeln!(out)?;
            }
        }
        Format::Human => {
            for r in rows {
                let observed = r.observed().map_or("-".to_string(), |p| p.to_string());
                let status = match r.matched {
                    None => "SKIPPED",
                    Some(true) => "ok",
                    Some(false) => "MISMATCH",
                };
                let millis = r.millis.map_or(String::new(), |m| format!("  {m} ms"));
                writeln!(
                    out,
                    "{:<22} predicted {:<15} observed {:<15} {status}{millis}",
                    r.spec.to_string(),
                    r.prediction.to_string(),
                    observed
                )?;
            }
            let skipped = rows.iter().filter(|r| r.matched.is_none()).count();
            let mismatched = rows.iter().filter(|r| r.matched == Some(false)).count();
            writeln!(
                out,
                "{} rows: {} matched, {} mismatched, {} skipped",
                rows.len(),
                rows.len() - skipped - mismatched,
                mismatched,
                skipped
            )?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SqcReport {
    pub sqc: bool,
    pub reading: CycleReading,
    pub partition: Option<SqcPartition>,
    pub sqc_gorenstein: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sqc_note: Option<String>,
    pub engine_gorenstein: bool,
    pub agree: Option<bool>,
    pub readings_disagree: bool,
}

impl SqcReport {
    pub fn with_agreement(mut self) -> Self {
        self.agree = self.sqc_gorenstein.map(|s| s == self.engine_gorenstein);
        self
    }
}

fn cycle(c: &[usize]) -> String {
    c.iter().map(usize::to_string).collect::<Vec<_>>().join("-")
}

pub fn sqc(out: &mut dyn Write, format: Format, r: &SqcReport) -> Result<(), Failure> {
    match format {
        Format::Json | Format::Csv => {
            serde_json::to_writer(&mut *out, r)?;
            writeln!(out)?;
        }
        Format::Human => human_sqc(out, r)?,
    }
    Ok(())
}

fn human_sqc(out: &mut dyn Write, r: &SqcReport) -> io::Result<()> {
    match &r.partition {
        None => writeln!(out, "not SQC ({} reading)", r.reading)?,
        Some(p) => {
            writeln!(out, "SQC ({} reading): m={} t={} r={}", r.reading, p.m(), p.t(), p.r())?;
            for s in &p.simplices {
                writeln!(out, "  simplex {s}")?;
            }
            for c in &p.five_cycles {
                writeln!(out, "  basic 5-cycle {}", cycle(c))?;
            }
            for q in &p.four_cycle_basics {
                writeln!(out, "  basic 4-cycle {} with basic vertices {}", cycle(&q.cycle), q.basics)?;
            }
        }
    }
    match (r.sqc_gorenstein, &r.sqc_note) {
        (Some(v), _) => writeln!(out, "sqc gorenstein: {v}")?,
        (None, Some(note)) => writeln!(out, "sqc gorenstein: undefined ({note})")?,
        (None, None) => writeln!(out, "sqc gorenstein: undefined")?,
    }
    writeln!(out, "engine gorenstein: {}", r.engine_gorenstein)?;
    match r.agree {
        Some(true) => writeln!(out, "cross-check: agree")?,
        Some(false) => writeln!(out, "cross-check: DISAGREE")?,
        None => writeln!(out, "cross-check: not applicable")?,
    }
    if r.readings_disagree {
        writeln!(out, "note: walk and induced 5-cycle readings disagree on SQC membership")?;
    }
    Ok(())
}
