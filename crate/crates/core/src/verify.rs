//! Exhaustive sweeps checking `|χ_λ(μ)| ≤ k!` (and `(k-1)!` when `μ` has a
//! fixed point) over every pair of partitions of `n`, plus the rim-hook
//! counting inequality `t_r · r ≤ n`.
//!
//! Sweeps fan out over `λ` on the current rayon pool with one evaluator per
//! worker; results are gathered in index order before aggregation, so
//! reports do not depend on the number of workers.

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::mn::{CharValue, Evaluator};
use crate::partition::{cycle_types, partitions, CycleType, Partition};
use crate::rim::{hook_count_table, HookCount};

/// Largest `n` swept unless the caller raises it.
pub const DEFAULT_SWEEP_BUDGET: usize = 12;

fn ser_decimal<S: Serializer, T: std::fmt::Display>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `2^{k-1} k!`, the earlier bound the sharp one improves on.
pub fn prior_bound(k: usize) -> BigUint {
    if k == 0 {
        return BigUint::one();
    }
    factorial(k) << (k - 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stratum {
    /// Every cycle type; bound `k!`.
    All,
    /// Cycle types with a part equal to 1; bound `(k-1)!`.
    FixedPoint,
}

impl Stratum {
    pub fn bound(self, k: usize) -> BigUint {
        match self {
            Stratum::All => factorial(k),
            Stratum::FixedPoint => factorial(k.saturating_sub(1)),
        }
    }

    pub fn includes(self, mu: &CycleType) -> bool {
        match self {
            Stratum::All => true,
            Stratum::FixedPoint => mu.has_fixed_point(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Maximizer {
    pub lambda: Partition,
    pub mu: CycleType,
    pub value: CharValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StratumRecord {
    pub k: usize,
    /// The bound checked for this report: `k!`, or `(k-1)!` for the fixed-point sweep.
    #[serde(serialize_with = "ser_decimal")]
    pub bound: BigUint,
    #[serde(serialize_with = "ser_decimal")]
    pub fixed_bound: BigUint,
    #[serde(serialize_with = "ser_decimal")]
    pub max: BigUint,
    pub attained: bool,
    /// `2^{k-1} k! - max`.
    #[serde(serialize_with = "ser_decimal")]
    pub margin: BigInt,
    pub maximizers: Vec<Maximizer>,
}

impl StratumRecord {
    pub fn prior_bound(&self) -> BigUint {
        prior_bound(self.k)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub lambda: Partition,
    pub mu: CycleType,
    pub value: CharValue,
    #[serde(serialize_with = "ser_decimal")]
    pub bound: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    #[serde(skip)]
    pub stratum: Stratum,
    pub records: Vec<StratumRecord>,
    pub violations: Vec<Violation>,
}

impl BoundReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn record(&self, k: usize) -> Option<&StratumRecord> {
        self.records.iter().find(|r| r.k == k)
    }

    /// Total `(λ, μ)` pairs examined.
    pub fn pairs_checked(&self) -> usize {
        let mus = cycle_types(self.n)
            .into_iter()
            .filter(|m| self.stratum.includes(m))
            .count();
        partitions(self.n).len() * mus
    }
}

fn check_budget(n: usize, budget: usize) -> Result<()> {
    if n > budget {
        return Err(Error::BudgetExceeded { n, budget });
    }
    Ok(())
}

pub fn verify(n: usize, stratum: Stratum, budget: usize) -> Result<BoundReport> {
    check_budget(n, budget)?;
    let lambdas = partitions(n);
    let mus: Vec<CycleType> = cycle_types(n)
        .into_iter()
        .filter(|m| stratum.includes(m))
        .collect();

    let rows: Vec<Vec<CharValue>> = lambdas
        .par_iter()
        .map_init(Evaluator::new, |ev, lam| {
            mus.iter()
                .map(|mu| ev.evaluate(lam, mu).expect("sizes agree"))
                .collect()
        })
        .collect();

    let mut records: Vec<StratumRecord> = Vec::new();
    let mut violations = Vec::new();
    let mut ks: Vec<usize> = mus.iter().map(CycleType::k).collect();
    ks.sort_unstable();
    ks.dedup();
    for k in ks {
        let bound = stratum.bound(k);
        let mut max = BigUint::default();
        let mut maximizers = Vec::new();
        for (j, mu) in mus.iter().enumerate().filter(|(_, m)| m.k() == k) {
            for (i, lam) in lambdas.iter().enumerate() {
                let value = &rows[i][j];
                let mag = value.magnitude();
                if *mag > bound {
                    violations.push(Violation {
                        lambda: lam.clone(),
                        mu: mu.clone(),
                        value: value.clone(),
                        bound: bound.clone(),
                    });
                }
                if *mag > max {
                    max = mag.clone();
                    maximizers.clear();
                }
                if *mag == max {
                    maximizers.push(Maximizer {
                        lambda: lam.clone(),
                        mu: mu.clone(),
                        value: value.clone(),
                    });
                }
            }
        }
        maximizers.sort_by(|a, b| (&a.lambda, &a.mu).cmp(&(&b.lambda, &b.mu)));
        records.push(StratumRecord {
            k,
            attained: max == bound,
            margin: BigInt::from(prior_bound(k)) - BigInt::from(max.clone()),
            fixed_bound: factorial(k.saturating_sub(1)),
            bound,
            max,
            maximizers,
        });
    }
    violations.sort_by(|a, b| (&a.lambda, &a.mu).cmp(&(&b.lambda, &b.mu)));
    Ok(BoundReport {
        n,
        stratum,
        records,
        violations,
    })
}

/// `|χ_λ(μ)| ≤ k!` for all `λ, μ ⊢ n`.
pub fn verify_main(n: usize, budget: usize) -> Result<BoundReport> {
    verify(n, Stratum::All, budget)
}

/// `|χ_λ(μ)| ≤ (k-1)!` for all `λ ⊢ n` and `μ ⊢ n` with a fixed point.
pub fn verify_fixed(n: usize, budget: usize) -> Result<BoundReport> {
    verify(n, Stratum::FixedPoint, budget)
}

/// All pairs with `k` cycles attaining the largest `|χ|`, sorted by `(λ, μ)`.
pub fn find_maximizers(n: usize, k: usize, budget: usize) -> Result<Vec<Maximizer>> {
    Ok(verify_main(n, budget)?
        .record(k)
        .map(|r| r.maximizers.clone())
        .unwrap_or_default())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HookCountCase {
    pub lambda: Partition,
    pub r: usize,
    pub total: usize,
    pub central: usize,
}

impl HookCountCase {
    fn new(lambda: &Partition, c: &HookCount) -> Self {
        HookCountCase {
            lambda: lambda.clone(),
            r: c.r,
            total: c.total,
            central: c.central,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KeyIneqReport {
    pub n_max: usize,
    pub partitions_checked: usize,
    /// Cases with `t_r · r = n`.
    pub equality_cases: Vec<HookCountCase>,
    pub violations: Vec<HookCountCase>,
}

impl KeyIneqReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `t_r · r ≤ n` and `C_r ≤ d` for every `λ ⊢ n ≤ n_max` and every `r`.
pub fn verify_key_ineq(n_max: usize) -> KeyIneqReport {
    let lambdas: Vec<Partition> = (1..=n_max).flat_map(partitions).collect();
    let tables: Vec<_> = lambdas.par_iter().map(hook_count_table).collect();
    let mut equality_cases = Vec::new();
    let mut violations = Vec::new();
    for t in &tables {
        equality_cases.extend(t.equality_cases().iter().map(|c| HookCountCase::new(&t.partition, c)));
        violations.extend(t.violations().iter().map(|c| HookCountCase::new(&t.partition, c)));
    }
    KeyIneqReport {
        n_max,
        partitions_checked: lambdas.len(),
        equality_cases,
        violations,
    }
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

    #[test]
    fn s3_n_cycle() {
        let rep = verify_main(3, DEFAULT_SWEEP_BUDGET).unwrap();
        assert!(rep.passed());
        let rec = rep.record(1).unwrap();
        assert_eq!(rec.max, BigUint::one());
        assert!(rec.attained);
        let lams: Vec<String> = rec.maximizers.iter().map(|m| m.lambda.to_string()).collect();
        assert_eq!(lams, ["[1,1,1]", "[2,1]", "[3]"]);
        assert_eq!(rec.margin, BigInt::from(0));
        assert_eq!(rep.pairs_checked(), 9);
    }

    #[test]
    fn s4_two_cycles() {
        let rep = verify_main(4, DEFAULT_SWEEP_BUDGET).unwrap();
        let rec = rep.record(2).unwrap();
        assert_eq!(rec.max, BigUint::from(2u32));
        assert!(rec.attained);
        assert!(rec
            .maximizers
            .iter()
            .any(|m| m.lambda == p("2,2") && m.mu == c("2,2")));
        assert_eq!(rec.margin, BigInt::from(2));
    }

    #[test]
    fn s4_fixed_points() {
        let rep = verify_fixed(4, DEFAULT_SWEEP_BUDGET).unwrap();
        assert!(rep.passed());
        // k = 2 here is only (3,1)
        let rec = rep.record(2).unwrap();
        assert_eq!(rec.bound, BigUint::one());
        assert_eq!(rec.max, BigUint::one());
        assert!(rec.maximizers.iter().all(|m| m.mu == c("3,1")));
        assert!(rep.record(3).unwrap().max <= BigUint::from(2u32));
        assert!(rep.record(4).is_some());
    }

    #[test]
    fn maximizers_s2_identity() {
        let m = find_maximizers(2, 2, DEFAULT_SWEEP_BUDGET).unwrap();
        assert_eq!(m.len(), 2);
        assert!(m.iter().all(|x| x.mu == c("1,1") && x.value == CharValue::from(1)));
    }

    #[test]
    fn budget() {
        assert_eq!(
            verify_main(13, DEFAULT_SWEEP_BUDGET),
            Err(Error::BudgetExceeded { n: 13, budget: 12 })
        );
    }

    #[test]
    fn key_ineq_small() {
        let rep = verify_key_ineq(10);
        assert!(rep.passed());
        assert!(rep
            .equality_cases
            .iter()
            .any(|e| e.lambda == p("4,3,2,1") && e.r == 5 && e.total == 2));
        let t = hook_count_table(&p("1,1,1"));
        assert_eq!(t.get(2).unwrap().total, 1);
        for n in 1..=6 {
            let t = hook_count_table(&Partition::row(n));
            assert!(t.counts.iter().all(|c| c.total == 1));
        }
    }

    #[test]
    fn prior_bounds() {
        let v: Vec<u32> = (1..=4).map(|k| prior_bound(k).try_into().unwrap()).collect();
        assert_eq!(v, [1, 4, 24, 192]);
    }
}
