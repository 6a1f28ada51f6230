//! Exact character values by rim-hook recursion.
//!
//! `χ_λ(μ)` is computed by peeling one cycle of length `r` off `μ` and
//! summing `(-1)^leg · χ_{λ∖h}(μ∖r)` over the rim hooks `h` of length `r`.
//! An [`Evaluator`] is a single-threaded session holding a memo keyed by
//! `(partition, remaining cycles in decreasing order)`; bulk drivers give
//! each worker its own session.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{cycle_types, partitions, CycleType, Partition};
use crate::rim::RimSequence;

/// Largest `n` accepted by [`character_table`] unless the caller raises it.
pub const DEFAULT_TABLE_BUDGET: usize = 14;

/// An exact, arbitrary-precision character value.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharValue(BigInt);

impl CharValue {
    pub fn new(value: BigInt) -> Self {
        CharValue(value)
    }

    pub fn value(&self) -> &BigInt {
        &self.0
    }

    pub fn into_inner(self) -> BigInt {
        self.0
    }

    pub fn magnitude(&self) -> &BigUint {
        self.0.magnitude()
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i8 {
        match self.0.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl From<i64> for CharValue {
    fn from(v: i64) -> Self {
        CharValue(BigInt::from(v))
    }
}

impl From<BigInt> for CharValue {
    fn from(v: BigInt) -> Self {
        CharValue(v)
    }
}

impl fmt::Display for CharValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for CharValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for CharValue {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        s.parse().map(CharValue)
    }
}

impl Serialize for CharValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(&self.0)
    }
}

/// The order in which cycles are peeled off the cycle type.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum PartOrder {
    /// Longest cycle first. Long cycles have the fewest rim hooks.
    #[default]
    Descending,
    Ascending,
    /// The order the cycle type was written in.
    AsGiven,
}

impl PartOrder {
    pub const ALL: [PartOrder; 3] = [PartOrder::Descending, PartOrder::Ascending, PartOrder::AsGiven];
}

impl FromStr for PartOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "descending" => Ok(PartOrder::Descending),
            "ascending" => Ok(PartOrder::Ascending),
            "as-given" => Ok(PartOrder::AsGiven),
            _ => Err(Error::Parse {
                input: s.to_string(),
                reason: "expected descending, ascending or as-given".to_string(),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct EvalStats {
    pub memo_hits: u64,
    pub memo_misses: u64,
    pub recursion_nodes: u64,
}

type MemoKey = (Partition, Vec<usize>);

/// One evaluation session.
#[derive(Debug, Default)]
pub struct Evaluator {
    memo: Option<HashMap<MemoKey, BigInt>>,
    stats: EvalStats,
}

impl Evaluator {
    pub fn new() -> Self {
        Evaluator {
            memo: Some(HashMap::new()),
            stats: EvalStats::default(),
        }
    }

    /// A session that recomputes every subproblem.
    pub fn without_memo() -> Self {
        Evaluator {
            memo: None,
            stats: EvalStats::default(),
        }
    }

    pub fn stats(&self) -> EvalStats {
        self.stats
    }

    pub fn memo_len(&self) -> usize {
        self.memo.as_ref().map_or(0, HashMap::len)
    }

    /// Memo entries as `(λ, μ, χ_λ(μ))`, sorted.
    pub fn memo_entries(&self) -> Vec<(Partition, CycleType, CharValue)> {
        let mut out: Vec<_> = self
            .memo
            .iter()
            .flatten()
            .map(|((lam, rest), v)| {
                let mu = CycleType::new(rest.clone()).expect("memo keys hold positive cycles");
                (lam.clone(), mu, CharValue(v.clone()))
            })
            .collect();
        out.sort();
        out
    }

    /// Seeds the memo with a known value. Ignored for sessions without a memo.
    pub fn insert(&mut self, lambda: Partition, mu: &CycleType, value: CharValue) -> Result<()> {
        check_sizes(&lambda, mu)?;
        if let Some(memo) = self.memo.as_mut() {
            memo.insert((lambda, mu.cycles().to_vec()), value.0);
        }
        Ok(())
    }

    pub fn evaluate(&mut self, lambda: &Partition, mu: &CycleType) -> Result<CharValue> {
        self.evaluate_with_order(lambda, mu, PartOrder::Descending)
    }

    pub fn evaluate_with_order(
        &mut self,
        lambda: &Partition,
        mu: &CycleType,
        order: PartOrder,
    ) -> Result<CharValue> {
        check_sizes(lambda, mu)?;
        let seq: Vec<usize> = match order {
            PartOrder::Descending => mu.cycles().to_vec(),
            PartOrder::Ascending => mu.cycles().iter().rev().copied().collect(),
            PartOrder::AsGiven => mu.as_given().to_vec(),
        };
        Ok(CharValue(self.recurse(lambda, &seq)))
    }

    fn recurse(&mut self, lambda: &Partition, seq: &[usize]) -> BigInt {
        self.stats.recursion_nodes += 1;
        let Some((&r, rest)) = seq.split_first() else {
            debug_assert!(lambda.is_empty());
            return BigInt::one();
        };
        let key = self.memo.as_ref().map(|_| {
            let mut cycles = seq.to_vec();
            cycles.sort_unstable_by(|a, b| b.cmp(a));
            (lambda.clone(), cycles)
        });
        if let (Some(memo), Some(key)) = (self.memo.as_ref(), key.as_ref()) {
            if let Some(v) = memo.get(key) {
                self.stats.memo_hits += 1;
                return v.clone();
            }
            self.stats.memo_misses += 1;
        }
        let hooks = RimSequence::new(lambda)
            .map(|rim| rim.hooks(r))
            .unwrap_or_default();
        let mut total = BigInt::zero();
        for hook in hooks {
            let sub = self.recurse(&hook.remainder, rest);
            if hook.leg_length % 2 == 0 {
                total += sub;
            } else {
                total -= sub;
            }
        }
        if let (Some(memo), Some(key)) = (self.memo.as_mut(), key) {
            memo.insert(key, total.clone());
        }
        total
    }
}

fn check_sizes(lambda: &Partition, mu: &CycleType) -> Result<()> {
    if lambda.size() != mu.n() {
        return Err(Error::SizeMismatch {
            partition: lambda.size(),
            cycles: mu.n(),
        });
    }
    Ok(())
}

/// `χ_λ(μ)` in a fresh session.
pub fn evaluate(lambda: &Partition, mu: &CycleType) -> Result<CharValue> {
    Evaluator::new().evaluate(lambda, mu)
}

pub fn evaluate_with_order(lambda: &Partition, mu: &CycleType, order: PartOrder) -> Result<CharValue> {
    Evaluator::new().evaluate_with_order(lambda, mu, order)
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `n!` divided by the product of all hook lengths.
pub fn degree_hook_length(lambda: &Partition) -> CharValue {
    let conj = lambda.conjugate();
    let hooks = lambda.cells().fold(BigUint::one(), |acc, c| {
        let arm = lambda.part(c.row) - c.col;
        let leg = conj.part(c.col) - c.row;
        acc * (arm + leg + 1)
    });
    let n_fact = factorial(lambda.size());
    debug_assert!((&n_fact % &hooks).is_zero());
    CharValue(BigInt::from(n_fact / hooks))
}

/// The full table for `S_n`; rows and columns in ascending lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterTable {
    pub n: usize,
    pub partitions: Vec<Partition>,
    pub classes: Vec<CycleType>,
    pub values: Vec<Vec<CharValue>>,
}

impl CharacterTable {
    pub fn get(&self, lambda: &Partition, mu: &CycleType) -> Option<&CharValue> {
        let i = self.partitions.binary_search(lambda).ok()?;
        let j = self.classes.binary_search(mu).ok()?;
        Some(&self.values[i][j])
    }

    pub fn column(&self, j: usize) -> impl Iterator<Item = &CharValue> + '_ {
        self.values.iter().map(move |row| &row[j])
    }
}

/// Builds the table, rows computed in parallel on the current rayon pool.
pub fn character_table(n: usize, budget: usize) -> Result<CharacterTable> {
    if n > budget {
        return Err(Error::BudgetExceeded { n, budget });
    }
    let partitions = partitions(n);
    let classes = cycle_types(n);
    let values = partitions
        .par_iter()
        .map_init(Evaluator::new, |ev, lam| {
            classes
                .iter()
                .map(|mu| ev.evaluate(lam, mu).expect("sizes agree"))
                .collect()
        })
        .collect();
    Ok(CharacterTable {
        n,
        partitions,
        classes,
        values,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrthogonalityEntry {
    pub mu: CycleType,
    pub nu: CycleType,
    #[serde(serialize_with = "ser_decimal")]
    pub inner: BigInt,
    #[serde(serialize_with = "ser_decimal")]
    pub expected: BigInt,
    pub pass: bool,
}

fn ser_decimal<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Column orthogonality: `Σ_λ χ_λ(μ) χ_λ(ν) = z_μ δ_{μν}` for every pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrthogonalityReport {
    pub n: usize,
    pub entries: Vec<OrthogonalityEntry>,
}

impl OrthogonalityReport {
    pub fn from_table(table: &CharacterTable) -> Self {
        let mut entries = Vec::new();
        for (a, mu) in table.classes.iter().enumerate() {
            for (b, nu) in table.classes.iter().enumerate().skip(a) {
                let inner: BigInt = table
                    .column(a)
                    .zip(table.column(b))
                    .map(|(x, y)| x.value() * y.value())
                    .sum();
                let expected = if a == b {
                    BigInt::from(mu.centralizer_order())
                } else {
                    BigInt::zero()
                };
                entries.push(OrthogonalityEntry {
                    mu: mu.clone(),
                    nu: nu.clone(),
                    pass: inner == expected,
                    inner,
                    expected,
                });
            }
        }
        OrthogonalityReport { n: table.n, entries }
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &OrthogonalityEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    pub fn entry(&self, mu: &CycleType, nu: &CycleType) -> Option<&OrthogonalityEntry> {
        self.entries
            .iter()
            .find(|e| (&e.mu == mu && &e.nu == nu) || (&e.mu == nu && &e.nu == mu))
    }
}

pub fn orthogonality_check(n: usize, budget: usize) -> Result<OrthogonalityReport> {
    Ok(OrthogonalityReport::from_table(&character_table(n, budget)?))
}

/// `true` if the value is `±magnitude`.
pub fn has_magnitude(value: &CharValue, magnitude: &BigUint) -> bool {
    value.value().abs().magnitude() == magnitude
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> Partition {
        text.parse().unwrap()
    }

    fn c(text: &str) -> CycleType {
        text.parse().unwrap()
    }

    fn chi(lam: &str, mu: &str) -> i64 {
        evaluate(&p(lam), &c(mu)).unwrap().to_string().parse().unwrap()
    }

    #[test]
    fn hand_expansions() {
        assert_eq!(chi("2,1", "3"), -1);
        assert_eq!(chi("4,3,2,1", "5,5"), -2);
        assert_eq!(chi("2,2", "2,2"), 2);
        assert_eq!(chi("2,2", "3,1"), -1);
        assert_eq!(chi("[]", "[]"), 1);
    }

    #[test]
    fn trivial_character() {
        for mu in cycle_types(7) {
            assert_eq!(evaluate(&Partition::row(7), &mu).unwrap(), CharValue::from(1));
        }
    }

    #[test]
    fn size_mismatch() {
        assert_eq!(
            evaluate(&p("2,1"), &c("2")),
            Err(Error::SizeMismatch { partition: 3, cycles: 2 })
        );
        assert!(evaluate(&p("1"), &c("[]")).is_err());
        assert!(evaluate(&Partition::empty(), &c("1")).is_err());
    }

    #[test]
    fn explicit_orders() {
        for order in PartOrder::ALL {
            assert_eq!(
                evaluate_with_order(&p("4,3,2,1"), &c("5,5"), order).unwrap(),
                CharValue::from(-2)
            );
        }
        assert_eq!(
            evaluate_with_order(&p("2,1"), &c("1,1,1"), PartOrder::Descending).unwrap(),
            CharValue::from(2)
        );
        assert_eq!(
            evaluate_with_order(&p("1,1"), &c("2"), PartOrder::Ascending).unwrap(),
            CharValue::from(-1)
        );
        assert_eq!("as-given".parse::<PartOrder>().unwrap(), PartOrder::AsGiven);
        assert!("sideways".parse::<PartOrder>().is_err());
    }

    #[test]
    fn degrees() {
        assert_eq!(degree_hook_length(&p("2,1")), CharValue::from(2));
        assert_eq!(degree_hook_length(&p("2,2")), CharValue::from(2));
        assert_eq!(degree_hook_length(&Partition::row(9)), CharValue::from(1));
        assert_eq!(degree_hook_length(&Partition::empty()), CharValue::from(1));
    }

    #[test]
    fn small_tables() {
        let t = character_table(1, DEFAULT_TABLE_BUDGET).unwrap();
        assert_eq!(t.values, vec![vec![CharValue::from(1)]]);

        let t = character_table(3, DEFAULT_TABLE_BUDGET).unwrap();
        let labels: Vec<String> = t.classes.iter().map(|m| m.to_string()).collect();
        assert_eq!(labels, ["[1,1,1]", "[2,1]", "[3]"]);
        let row = &t.values[t.partitions.binary_search(&p("2,1")).unwrap()];
        assert_eq!(row, &[CharValue::from(2), CharValue::from(0), CharValue::from(-1)]);

        let t = character_table(4, DEFAULT_TABLE_BUDGET).unwrap();
        assert_eq!(t.get(&p("2,2"), &c("2,2")), Some(&CharValue::from(2)));

        assert_eq!(
            character_table(15, DEFAULT_TABLE_BUDGET),
            Err(Error::BudgetExceeded { n: 15, budget: 14 })
        );
    }

    #[test]
    fn orthogonality_entries() {
        let rep = orthogonality_check(3, DEFAULT_TABLE_BUDGET).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.entry(&c("3"), &c("3")).unwrap().inner, BigInt::from(3));
        assert_eq!(rep.entry(&c("3"), &c("2,1")).unwrap().inner, BigInt::zero());
        let rep = orthogonality_check(4, DEFAULT_TABLE_BUDGET).unwrap();
        assert_eq!(rep.entry(&c("2,2"), &c("2,2")).unwrap().inner, BigInt::from(8));
    }

    #[test]
    fn memo_stats_and_seeding() {
        let mut ev = Evaluator::new();
        ev.evaluate(&p("4,3,2,1"), &c("5,5")).unwrap();
        let first = ev.stats();
        assert!(first.memo_misses > 0);
        ev.evaluate(&p("4,3,2,1"), &c("5,5")).unwrap();
        assert_eq!(ev.stats().memo_hits, first.memo_hits + 1);
        assert!(ev.stats().recursion_nodes > first.recursion_nodes);

        let entries = ev.memo_entries();
        assert!(entries.contains(&(p("4,3,2,1"), c("5,5"), CharValue::from(-2))));

        // a seeded value is returned verbatim
        let mut seeded = Evaluator::new();
        seeded.insert(p("2,1"), &c("3"), CharValue::from(7)).unwrap();
        assert_eq!(seeded.evaluate(&p("2,1"), &c("3")).unwrap(), CharValue::from(7));
        assert!(seeded.insert(p("2,1"), &c("2"), CharValue::from(0)).is_err());
    }

    #[test]
    fn no_memo_session() {
        let mut ev = Evaluator::without_memo();
        assert_eq!(ev.evaluate(&p("4,3,2,1"), &c("5,5")).unwrap(), CharValue::from(-2));
        assert_eq!(ev.stats().memo_hits, 0);
        assert_eq!(ev.memo_len(), 0);
    }

    #[test]
    fn char_value_parts() {
        let v: CharValue = "-24".parse().unwrap();
        assert_eq!(v.signum(), -1);
        assert_eq!(v.magnitude(), &BigUint::from(24u32));
        assert!(has_magnitude(&v, &BigUint::from(24u32)));
        assert!(CharValue::default().is_zero());
    }
}
