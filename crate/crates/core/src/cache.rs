//! Text persistence for evaluator memos.
//!
//! ```text
//! symchar-memo v1
//! [4,3,2,1] [5,5] -2
//! ```
//!
//! The first line must match [`CACHE_HEADER`] exactly or the whole file is
//! ignored. Each following line holds a partition, a cycle type of the same
//! size and a decimal value, separated by whitespace. Lines that fail to
//! parse are skipped and reported.

use std::io::{self, BufRead, Write};

use crate::mn::{CharValue, Evaluator};
use crate::partition::{CycleType, Partition};

pub const CACHE_HEADER: &str = "symchar-memo v1";

pub type CacheEntry = (Partition, CycleType, CharValue);

#[derive(Debug, Default)]
pub struct CacheLoad {
    pub entries: Vec<CacheEntry>,
    /// Human-readable reasons for skipped lines (or a skipped file).
    pub warnings: Vec<String>,
}

fn parse_line(line: &str) -> Result<CacheEntry, String> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    let [lam, mu, value] = fields[..] else {
        return Err(format!("expected 3 fields, found {}", fields.len()));
    };
    let lam: Partition = lam.parse().map_err(|e| format!("{e}"))?;
    let mu: CycleType = mu.parse().map_err(|e| format!("{e}"))?;
    let value: CharValue = value.parse().map_err(|e| format!("bad value: {e}"))?;
    if lam.size() != mu.n() {
        return Err(format!("size mismatch between {lam} and {mu}"));
    }
    Ok((lam, mu, value))
}

pub fn read_cache<R: BufRead>(reader: R) -> io::Result<CacheLoad> {
    let mut load = CacheLoad::default();
    let mut lines = reader.lines();
    match lines.next().transpose()? {
        None => return Ok(load),
        Some(h) if h.trim_end() == CACHE_HEADER => {}
        Some(h) => {
            load.warnings
                .push(format!("unrecognized cache header {h:?}; ignoring file"));
            return Ok(load);
        }
    }
    for (i, line) in lines.enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        match parse_line(&line) {
            Ok(entry) => load.entries.push(entry),
            Err(reason) => load.warnings.push(format!("line {}: {reason}", i + 2)),
        }
    }
    Ok(load)
}

pub fn write_cache<W: Write>(mut writer: W, entries: &[CacheEntry]) -> io::Result<()> {
    writeln!(writer, "{CACHE_HEADER}")?;
    for (lam, mu, value) in entries {
        writeln!(writer, "{lam} {mu} {value}")?;
    }
    Ok(())
}

/// Seeds `ev` with every loaded entry.
pub fn seed(ev: &mut Evaluator, entries: &[CacheEntry]) {
    for (lam, mu, value) in entries {
        ev.insert(lam.clone(), mu, value.clone())
            .expect("sizes validated on load");
    }
}
