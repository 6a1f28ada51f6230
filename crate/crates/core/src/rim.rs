//! The rim of a Young diagram and its rim hooks.
//!
//! The rim is the set of cells `(x,y)` with `(x+1,y+1)` outside the diagram,
//! listed from `(1, λ_1)` to `(λ′_1, 1)` so that the content `x - y` grows by
//! one at each step. A rim hook of length `r` is a window of `r` consecutive
//! rim cells whose first cell ends its row and whose last cell ends its
//! column; hooks are stored as index ranges into that list.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{Cell, Partition};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RimSequence {
    owner: Partition,
    cells: Vec<Cell>,
}

impl RimSequence {
    pub fn new(owner: &Partition) -> Result<Self> {
        if owner.is_empty() {
            return Err(Error::EmptyRim);
        }
        let len = owner.part(1) + owner.len() - 1;
        let mut cells = Vec::with_capacity(len);
        let mut cur = Cell::new(1, owner.part(1));
        cells.push(cur);
        while cells.len() < len {
            cur = if owner.contains(Cell::new(cur.row + 1, cur.col)) {
                Cell::new(cur.row + 1, cur.col)
            } else {
                Cell::new(cur.row, cur.col - 1)
            };
            cells.push(cur);
        }
        debug_assert_eq!(cur, Cell::new(owner.len(), 1));
        Ok(RimSequence {
            owner: owner.clone(),
            cells,
        })
    }

    pub fn owner(&self) -> &Partition {
        &self.owner
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Position of a cell in the rim, if it lies on the rim.
    pub fn index_of(&self, cell: Cell) -> Option<usize> {
        let first = self.cells[0].content();
        let idx = usize::try_from(cell.content() - first).ok()?;
        (self.cells.get(idx) == Some(&cell)).then_some(idx)
    }

    /// Position of the diagonal cell `(d,d)`, `d` the Durfee size.
    pub fn diagonal_index(&self) -> usize {
        // content 0 sits λ_1 - 1 steps after (1, λ_1)
        self.owner.part(1) - 1
    }

    fn starts_hook(&self, idx: usize) -> bool {
        let c = self.cells[idx];
        c.col == self.owner.part(c.row)
    }

    fn ends_hook(&self, idx: usize) -> bool {
        let c = self.cells[idx];
        c.row == self.owner.column_height(c.col)
    }

    /// All rim hooks of length `r`, in order of their first cell.
    pub fn hooks(&self, r: usize) -> Vec<RimHook> {
        if r == 0 || r > self.len() {
            return Vec::new();
        }
        (0..=self.len() - r)
            .filter(|&s| self.starts_hook(s) && self.ends_hook(s + r - 1))
            .map(|s| self.hook_at(s, s + r - 1))
            .collect()
    }

    fn hook_at(&self, start: usize, end: usize) -> RimHook {
        let first = self.cells[start];
        let last = self.cells[end];
        let leg_length = last.row - first.row;
        debug_assert_eq!(leg_length, end - start + 1 - (first.col - last.col + 1));
        let diag = self.diagonal_index();
        let class = if end < diag {
            HookClass::Left
        } else if start > diag {
            HookClass::Right
        } else {
            HookClass::Central
        };
        RimHook {
            start,
            end,
            first,
            last,
            leg_length,
            class,
            remainder: self.remainder(first, last),
        }
    }

    // Rows first.row..last.row each lose their rim cells: row i < last.row
    // shrinks to λ_{i+1} - 1, and the last row keeps the cells left of the hook.
    fn remainder(&self, first: Cell, last: Cell) -> Partition {
        let lam = &self.owner;
        let mut parts = lam.parts().to_vec();
        for i in first.row..last.row {
            parts[i - 1] = lam.part(i + 1) - 1;
        }
        parts[last.row - 1] = last.col - 1;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::new(parts).expect("rim hook complement is a partition")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HookClass {
    Left,
    Central,
    Right,
}

impl fmt::Display for HookClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HookClass::Left => "left",
            HookClass::Central => "central",
            HookClass::Right => "right",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RimHook {
    /// Index of the first cell in the rim sequence (0-based).
    pub start: usize,
    /// Index of the last cell, inclusive.
    pub end: usize,
    #[serde(serialize_with = "ser_cell")]
    pub first: Cell,
    #[serde(serialize_with = "ser_cell")]
    pub last: Cell,
    pub leg_length: usize,
    pub class: HookClass,
    pub remainder: Partition,
}

fn ser_cell<S: serde::Serializer>(cell: &Cell, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(cell)
}

impl RimHook {
    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `(-1)^leg`.
    pub fn sign(&self) -> i8 {
        if self.leg_length.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn rows_spanned(&self) -> usize {
        self.last.row - self.first.row + 1
    }

    pub fn columns_spanned(&self) -> usize {
        self.first.col - self.last.col + 1
    }
}

pub fn rim_sequence(lambda: &Partition) -> Result<RimSequence> {
    RimSequence::new(lambda)
}

/// Rim hooks of length `r`; empty for the empty partition.
pub fn enumerate_rim_hooks(lambda: &Partition, r: usize) -> Vec<RimHook> {
    match RimSequence::new(lambda) {
        Ok(rim) => rim.hooks(r),
        Err(_) => Vec::new(),
    }
}

/// Removes a hook previously enumerated from `lambda`.
pub fn remove_rim_hook(lambda: &Partition, hook: &RimHook) -> Result<Partition> {
    let mismatch = || Error::HookMismatch(lambda.to_string());
    let rim = RimSequence::new(lambda).map_err(|_| mismatch())?;
    if hook.end >= rim.len() || hook.start > hook.end {
        return Err(mismatch());
    }
    if !rim.starts_hook(hook.start) || !rim.ends_hook(hook.end) {
        return Err(mismatch());
    }
    let fresh = rim.hook_at(hook.start, hook.end);
    if fresh != *hook {
        return Err(mismatch());
    }
    Ok(fresh.remainder)
}

/// Which boundary role a special cell plays.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialRole {
    /// `(i, λ_i)` for `i ≤ d`.
    RowEnd(usize),
    /// `(λ′_j, j)` for `j ≤ d`.
    ColumnEnd(usize),
}

/// The `2d` role instances of special cells. A single cell can carry both
/// a row-end and a column-end role, in which case it appears twice.
pub fn special_cells(lambda: &Partition) -> Vec<(Cell, SpecialRole)> {
    let d = lambda.durfee_size();
    let rows = (1..=d).map(|i| (Cell::new(i, lambda.part(i)), SpecialRole::RowEnd(i)));
    let cols = (1..=d).map(|j| (Cell::new(lambda.column_height(j), j), SpecialRole::ColumnEnd(j)));
    rows.chain(cols).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HookCount {
    pub r: usize,
    /// `t_r`, the number of rim hooks of length `r`.
    pub total: usize,
    /// `C_r`, how many of them are central.
    pub central: usize,
}

/// Rim hook counts for every length `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HookCountTable {
    pub partition: Partition,
    pub n: usize,
    pub durfee: usize,
    pub counts: Vec<HookCount>,
}

impl HookCountTable {
    pub fn get(&self, r: usize) -> Option<&HookCount> {
        r.checked_sub(1).and_then(|i| self.counts.get(i))
    }

    /// Lengths where `t_r · r > n` or `C_r > d`. Always empty for a correct enumerator.
    pub fn violations(&self) -> Vec<HookCount> {
        self.counts
            .iter()
            .filter(|c| c.total * c.r > self.n || c.central > self.durfee)
            .copied()
            .collect()
    }

    /// Lengths with `t_r · r = n` and at least one hook.
    pub fn equality_cases(&self) -> Vec<HookCount> {
        self.counts
            .iter()
            .filter(|c| c.total > 0 && c.total * c.r == self.n)
            .copied()
            .collect()
    }
}

pub fn hook_count_table(lambda: &Partition) -> HookCountTable {
    let n = lambda.size();
    let counts = match RimSequence::new(lambda) {
        Ok(rim) => (1..=n)
            .map(|r| {
                let hooks = rim.hooks(r);
                HookCount {
                    r,
                    total: hooks.len(),
                    central: hooks.iter().filter(|h| h.class == HookClass::Central).count(),
                }
            })
            .collect(),
        Err(_) => Vec::new(),
    };
    let table = HookCountTable {
        partition: lambda.clone(),
        n,
        durfee: lambda.durfee_size(),
        counts,
    };
    debug_assert!(table.violations().is_empty(), "{table:?}");
    table
}
