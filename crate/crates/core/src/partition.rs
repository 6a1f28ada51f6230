//! Partitions, cells, cycle types and Frobenius coordinates.
//!
//! Text form for partitions and cycle types is a comma-separated list of
//! integers with optional surrounding brackets, e.g. `[4,3,2,1]` or `4, 3, 2, 1`.
//! Whitespace is ignored. Canonical output is bracketed with no spaces.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// The empty partition is the unique partition of 0. Ordering is
/// lexicographic on the part sequence.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A cell of a Young diagram, 1-indexed, rows counted downward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// Content `row - col`; increases by one along the rim.
    pub fn content(self) -> isize {
        self.row as isize - self.col as isize
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

fn parse_list(text: &str) -> Result<Vec<i64>> {
    let err = |reason: &str| Error::Parse {
        input: text.to_string(),
        reason: reason.to_string(),
    };
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = match (compact.strip_prefix('['), compact.ends_with(']')) {
        (Some(rest), true) => &rest[..rest.len() - 1],
        (None, false) => compact.as_str(),
        _ => return Err(err("unbalanced brackets")),
    };
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|tok| {
            if tok.is_empty() {
                return Err(err("empty entry"));
            }
            tok.parse::<i64>()
                .map_err(|_| err(&format!("{tok:?} is not an integer")))
        })
        .collect()
}

fn write_list(f: &mut fmt::Formatter<'_>, items: &[usize]) -> fmt::Result {
    f.write_str("[")?;
    for (i, p) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    f.write_str("]")
}

impl Partition {
    /// Builds a partition, stripping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Partition::from_sorted(if n == 0 { vec![] } else { vec![n] })
    }

    /// The one-column partition `(1,...,1)`.
    pub fn column(n: usize) -> Self {
        Partition::from_sorted(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` with 1-indexed `i`; zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// `λ′_j`: the height of column `j` (1-indexed).
    pub fn column_height(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p >= j).count()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row)
    }

    /// All cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        Partition::from_sorted((1..=width).map(|j| self.column_height(j)).collect())
    }

    /// Side of the largest square `(k,k)` inside the diagram; also the number of layers.
    pub fn durfee_size(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count()
    }

    /// Layer index `min(row, col)` of a cell of the diagram.
    pub fn layer_of(&self, cell: Cell) -> Result<usize> {
        if !self.contains(cell) {
            return Err(Error::CellOutside {
                row: cell.row,
                col: cell.col,
                partition: self.to_string(),
            });
        }
        Ok(cell.row.min(cell.col))
    }

    pub fn to_frobenius(&self) -> FrobeniusCoords {
        let k = self.durfee_size();
        let arm = (1..=k).map(|i| self.part(i) - i).collect();
        let leg = (1..=k).map(|j| self.column_height(j) - j).collect();
        FrobeniusCoords { arm, leg }
    }

    pub fn from_frobenius(coords: &FrobeniusCoords) -> Partition {
        let k = coords.k();
        let mut parts: Vec<usize> = coords.arm.iter().enumerate().map(|(i, a)| a + i + 1).collect();
        let heights: Vec<usize> = coords.leg.iter().enumerate().map(|(j, b)| b + j + 1).collect();
        // Below the Durfee square every row is shorter than k, so its length
        // is the number of the first k columns reaching it.
        let depth = heights.first().copied().unwrap_or(0);
        for row in (k + 1)..=depth {
            parts.push(heights.iter().filter(|&&h| h >= row).count());
        }
        Partition::from_sorted(parts)
    }

    /// Whether the diagram is a hook `(a, 1, ..., 1)`.
    pub fn is_hook_shape(&self) -> bool {
        self.durfee_size() <= 1
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let raw = parse_list(s)?;
        if raw.iter().any(|&v| v < 0) {
            return Err(Error::Parse {
                input: s.to_string(),
                reason: "negative part".to_string(),
            });
        }
        Partition::new(raw.into_iter().map(|v| v as usize).collect())
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Parses the text grammar for partitions.
pub fn parse_partition(text: &str) -> Result<Partition> {
    text.parse()
}

/// All partitions of `n` in ascending lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn extend(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_sorted(prefix.clone()));
            return;
        }
        for p in 1..=max.min(rest) {
            prefix.push(p);
            extend(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, n, &mut Vec::new(), &mut out);
    out
}

/// `(a_1,...,a_k | b_1,...,b_k)` with both sequences strictly decreasing and non-negative.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct FrobeniusCoords {
    arm: Vec<usize>,
    leg: Vec<usize>,
}

impl FrobeniusCoords {
    pub fn new(arm: Vec<usize>, leg: Vec<usize>) -> Result<Self> {
        if arm.len() != leg.len() {
            return Err(Error::Frobenius(format!(
                "arm has {} entries, leg has {}",
                arm.len(),
                leg.len()
            )));
        }
        for (name, seq) in [("arm", &arm), ("leg", &leg)] {
            if seq.windows(2).any(|w| w[0] <= w[1]) {
                return Err(Error::Frobenius(format!(
                    "{name} {seq:?} is not strictly decreasing"
                )));
            }
        }
        Ok(FrobeniusCoords { arm, leg })
    }

    pub fn arm(&self) -> &[usize] {
        &self.arm
    }

    pub fn leg(&self) -> &[usize] {
        &self.leg
    }

    /// Durfee size of the encoded partition.
    pub fn k(&self) -> usize {
        self.arm.len()
    }

    pub fn size(&self) -> usize {
        self.k() + self.arm.iter().sum::<usize>() + self.leg.iter().sum::<usize>()
    }

    pub fn to_partition(&self) -> Partition {
        Partition::from_frobenius(self)
    }
}

impl fmt::Display for FrobeniusCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "({} | {})", join(&self.arm), join(&self.leg))
    }
}

impl fmt::Debug for FrobeniusCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Frobenius{self}")
    }
}

/// Cycle type of a permutation: orbit sizes including fixed points.
///
/// Stored in decreasing order. The order the parts were originally written
/// in is kept for [`PartOrder::AsGiven`](crate::mn::PartOrder::AsGiven) but
/// does not take part in equality, hashing or ordering.
#[derive(Clone, Default)]
pub struct CycleType {
    cycles: Vec<usize>,
    given: Vec<usize>,
}

impl CycleType {
    /// Accepts the parts in any order; every part must be positive.
    pub fn new(cycles: Vec<usize>) -> Result<Self> {
        if cycles.contains(&0) {
            return Err(Error::Parse {
                input: format!("{cycles:?}"),
                reason: "cycle lengths must be positive".to_string(),
            });
        }
        let given = cycles.clone();
        let mut sorted = cycles;
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType {
            cycles: sorted,
            given,
        })
    }

    /// `r^count`.
    pub fn repeated(r: usize, count: usize) -> Self {
        CycleType::new(vec![r; count]).expect("positive cycle length")
    }

    /// Parts in decreasing order.
    pub fn cycles(&self) -> &[usize] {
        &self.cycles
    }

    /// Parts in the order they were supplied.
    pub fn as_given(&self) -> &[usize] {
        &self.given
    }

    pub fn n(&self) -> usize {
        self.cycles.iter().sum()
    }

    /// Number of cycles, fixed points included.
    pub fn k(&self) -> usize {
        self.cycles.len()
    }

    pub fn has_fixed_point(&self) -> bool {
        self.cycles.last() == Some(&1)
    }

    pub fn as_partition(&self) -> Partition {
        Partition::from_sorted(self.cycles.clone())
    }

    /// `z_μ = Π_r r^{m_r} m_r!`, the order of the centralizer.
    pub fn centralizer_order(&self) -> BigUint {
        let mut z = BigUint::one();
        let mut i = 0;
        while i < self.cycles.len() {
            let r = self.cycles[i];
            let m = self.cycles[i..].iter().take_while(|&&c| c == r).count();
            for j in 1..=m {
                z *= r;
                z *= j;
            }
            i += m;
        }
        z
    }
}

impl PartialEq for CycleType {
    fn eq(&self, other: &Self) -> bool {
        self.cycles == other.cycles
    }
}

impl Eq for CycleType {}

impl std::hash::Hash for CycleType {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.cycles.hash(state);
    }
}

impl PartialOrd for CycleType {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CycleType {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.cycles.cmp(&other.cycles)
    }
}

impl From<&Partition> for CycleType {
    fn from(p: &Partition) -> Self {
        CycleType {
            cycles: p.parts.clone(),
            given: p.parts.clone(),
        }
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.cycles)
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleType{self}")
    }
}

impl FromStr for CycleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let raw = parse_list(s)?;
        if raw.iter().any(|&v| v <= 0) {
            return Err(Error::Parse {
                input: s.to_string(),
                reason: "cycle lengths must be positive".to_string(),
            });
        }
        CycleType::new(raw.into_iter().map(|v| v as usize).collect())
    }
}

impl Serialize for CycleType {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn parse_cycle_type(text: &str) -> Result<CycleType> {
    text.parse()
}

/// All cycle types of `n` in ascending lexicographic order.
pub fn cycle_types(n: usize) -> Vec<CycleType> {
    partitions(n).iter().map(CycleType::from).collect()
}
