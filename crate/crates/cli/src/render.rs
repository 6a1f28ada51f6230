use std::io::Write;

use anyhow::Result;
use serde_json::{json, Value};
use symchar::verify::{BoundReport, KeyIneqReport};
use symchar::{CharValue, CharacterTable, CycleType, EvalStats, Partition, PredictedValue, RimHook};

use crate::Format;

pub fn char_value(
    out: &mut impl Write,
    format: Format,
    lambda: &Partition,
    mu: &CycleType,
    value: &CharValue,
    stats: Option<EvalStats>,
) -> Result<()> {
    match format {
        Format::Json => {
            let mut obj = json!({
                "lambda": lambda,
                "mu": mu,
                "value": value,
            });
            if let Some(s) = stats {
                obj["stats"] = serde_json::to_value(s)?;
            }
            writeln!(out, "{obj}")?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["lambda", "mu", "value"])?;
            w.write_record([lambda.to_string(), mu.to_string(), value.to_string()])?;
            w.flush()?;
        }
        Format::Text => {
            writeln!(out, "{value}")?;
            if let Some(s) = stats {
                writeln!(
                    out,
                    "memo_hits={} memo_misses={} recursion_nodes={}",
                    s.memo_hits, s.memo_misses, s.recursion_nodes
                )?;
            }
        }
    }
    Ok(())
}

pub fn table(out: &mut impl Write, format: Format, table: &CharacterTable) -> Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer(&mut *out, table)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let header = std::iter::once("lambda".to_string())
                .chain(table.classes.iter().map(|c| c.to_string()));
            w.write_record(header)?;
            for (lam, row) in table.partitions.iter().zip(&table.values) {
                let rec = std::iter::once(lam.to_string()).chain(row.iter().map(|v| v.to_string()));
                w.write_record(rec)?;
            }
            w.flush()?;
        }
        Format::Text => {
            let labels: Vec<String> = table.partitions.iter().map(|p| p.to_string()).collect();
            let label_w = labels.iter().map(String::len).max().unwrap_or(0).max(6);
            let cols: Vec<String> = table.classes.iter().map(|c| c.to_string()).collect();
            let widths: Vec<usize> = cols
                .iter()
                .enumerate()
                .map(|(j, c)| {
                    table
                        .column(j)
                        .map(|v| v.to_string().len())
                        .chain([c.len()])
                        .max()
                        .unwrap_or(1)
                })
                .collect();
            write!(out, "{:label_w$}", "λ \\ μ")?;
            for (c, w) in cols.iter().zip(&widths) {
                write!(out, "  {c:>w$}")?;
            }
            writeln!(out)?;
            for (label, row) in labels.iter().zip(&table.values) {
                write!(out, "{label:label_w$}")?;
                for (v, w) in row.iter().zip(&widths) {
                    write!(out, "  {:>w$}", v.to_string())?;
                }
                writeln!(out)?;
            }
        }
    }
    Ok(())
}

pub fn rim_hooks(out: &mut impl Write, format: Format, hooks: &[RimHook]) -> Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer(&mut *out, hooks)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["start", "end", "leg", "class", "remainder"])?;
            for h in hooks {
                w.write_record([
                    h.first.to_string(),
                    h.last.to_string(),
                    h.leg_length.to_string(),
                    h.class.to_string(),
                    h.remainder.to_string(),
                ])?;
            }
            w.flush()?;
        }
        Format::Text => {
            for h in hooks {
                writeln!(
                    out,
                    "{} {} leg={} {} {}",
                    h.first, h.last, h.leg_length, h.class, h.remainder
                )?;
            }
        }
    }
    Ok(())
}

/// A witness pair with its prediction and, after `--check`, its value.
pub struct Witness {
    pub lambda: Partition,
    pub mu: CycleType,
    pub prediction: Option<PredictedValue>,
    pub value: Option<CharValue>,
}

impl Witness {
    pub fn new(lambda: Partition, mu: CycleType, prediction: PredictedValue) -> Self {
        Witness {
            lambda,
            mu,
            prediction: Some(prediction),
            value: None,
        }
    }

    fn to_json(&self) -> Value {
        let mut obj = json!({
            "lambda": self.lambda,
            "mu": self.mu,
            "frobenius": self.lambda.to_frobenius().to_string(),
        });
        if let Some(p) = &self.prediction {
            obj["predicted"] = json!({
                "value": p.value(),
                "magnitude": p.magnitude.to_string(),
                "sign": p.sign,
                "printed_sign": p.printed_sign,
            });
        }
        if let Some(v) = &self.value {
            obj["value"] = json!(v);
        }
        obj
    }
}

fn sign_char(s: i8) -> char {
    if s < 0 {
        '-'
    } else {
        '+'
    }
}

pub fn witnesses(out: &mut impl Write, format: Format, items: &[Witness]) -> Result<()> {
    match format {
        Format::Json => {
            let arr: Vec<Value> = items.iter().map(Witness::to_json).collect();
            writeln!(out, "{}", Value::Array(arr))?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["lambda", "mu", "predicted", "printed_sign", "value"])?;
            for it in items {
                let pred = it.prediction.as_ref();
                w.write_record([
                    it.lambda.to_string(),
                    it.mu.to_string(),
                    pred.map(|p| p.value().to_string()).unwrap_or_default(),
                    pred.map(|p| sign_char(p.printed_sign).to_string()).unwrap_or_default(),
                    it.value.as_ref().map(|v| v.to_string()).unwrap_or_default(),
                ])?;
            }
            w.flush()?;
        }
        Format::Text => {
            for (i, it) in items.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                writeln!(out, "lambda    = {}", it.lambda)?;
                writeln!(out, "mu        = {}", it.mu)?;
                writeln!(out, "frobenius = {}", it.lambda.to_frobenius())?;
                match &it.prediction {
                    Some(p) => writeln!(
                        out,
                        "predicted = {} (|value| = {} = {}!; recursion sign {}, printed sign {}{})",
                        p.value(),
                        p.magnitude,
                        p.k,
                        sign_char(p.sign),
                        sign_char(p.printed_sign),
                        if p.signs_agree() { "" } else { ", differ" }
                    )?,
                    None => writeln!(out, "predicted = none (needs odd arms and odd r)")?,
                }
                if let Some(v) = &it.value {
                    let tag = match &it.prediction {
                        Some(p) if p.value() == *v => format!(" (|value| = {} = {}!)", p.magnitude, p.k),
                        Some(_) => " (MISMATCH)".to_string(),
                        None => String::new(),
                    };
                    writeln!(out, "value     = {v}{tag}")?;
                }
            }
        }
    }
    Ok(())
}

pub fn bound_report(
    out: &mut impl Write,
    format: Format,
    report: &BoundReport,
    key: Option<&KeyIneqReport>,
) -> Result<()> {
    match format {
        Format::Json => {
            let mut obj = serde_json::to_value(report)?;
            if let Some(k) = key {
                obj["keyineq"] = serde_json::to_value(k)?;
            }
            writeln!(out, "{obj}")?;
        }
        Format::Csv => bound_report_csv(out, report)?,
        Format::Text => {
            let bound = match report.stratum {
                symchar::verify::Stratum::All => "k!",
                symchar::verify::Stratum::FixedPoint => "(k-1)!, fixed points only",
            };
            writeln!(
                out,
                "n = {}: {} pairs checked against {bound}",
                report.n,
                report.pairs_checked()
            )?;
            for rec in &report.records {
                let shown: Vec<String> = rec
                    .maximizers
                    .iter()
                    .take(4)
                    .map(|m| format!("χ_{}({}) = {}", m.lambda, m.mu, m.value))
                    .collect();
                let more = rec.maximizers.len().saturating_sub(shown.len());
                writeln!(
                    out,
                    "k = {:>2}  bound {:>10}  max {:>10}  {}  prior {:>12}  margin {:>12}  {}{}",
                    rec.k,
                    rec.bound.to_string(),
                    rec.max.to_string(),
                    if rec.attained { "attained" } else { "        " },
                    rec.prior_bound().to_string(),
                    rec.margin.to_string(),
                    shown.join(", "),
                    if more > 0 { format!(" (+{more} more)") } else { String::new() }
                )?;
            }
            if report.violations.is_empty() {
                writeln!(out, "no violations")?;
            } else {
                for v in &report.violations {
                    writeln!(out, "VIOLATION χ_{}({}) = {} exceeds {}", v.lambda, v.mu, v.value, v.bound)?;
                }
            }
            if let Some(k) = key {
                writeln!(
                    out,
                    "rim hook counts: {} partitions up to n = {}, {} equality cases, {} violations",
                    k.partitions_checked,
                    k.n_max,
                    k.equality_cases.len(),
                    k.violations.len()
                )?;
            }
        }
    }
    Ok(())
}

pub fn bound_report_csv(out: impl Write, report: &BoundReport) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["n", "k", "bound", "max", "attained", "margin", "lambda", "mu", "value"])?;
    for rec in &report.records {
        for m in &rec.maximizers {
            w.write_record([
                report.n.to_string(),
                rec.k.to_string(),
                rec.bound.to_string(),
                rec.max.to_string(),
                rec.attained.to_string(),
                rec.margin.to_string(),
                m.lambda.to_string(),
                m.mu.to_string(),
                m.value.to_string(),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}
