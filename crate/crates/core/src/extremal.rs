//! Witnesses attaining `|χ(g)| = k!` and, with a fixed point, `(k-1)!`.
//!
//! Given arms `a_1 > ... > a_k ≥ 0` and `r ≥ a_1 + 1`, the partition
//! `(a_1,...,a_k | r-1-a_k, ..., r-1-a_1)` has exactly `k` rim hooks of
//! length `r`, all central, and removing the one through row `p` deletes
//! arm `a_p` and leg `r-1-a_p`. With every `a_i` and `r` odd each hook has
//! leg length of parity `k`, so `χ_λ(r^k) = (-1)^k · k · χ(r^{k-1})`.

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::mn::CharValue;
use crate::partition::{CycleType, FrobeniusCoords, Partition};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalSpec {
    pub arms: Vec<usize>,
    pub hook_length: usize,
    /// Append a zero arm and leg and a single fixed point to the cycle type.
    pub fixed_point: bool,
}

impl ExtremalSpec {
    pub fn symmetric(arms: Vec<usize>, hook_length: usize) -> Self {
        ExtremalSpec {
            arms,
            hook_length,
            fixed_point: false,
        }
    }

    pub fn with_fixed_point(arms: Vec<usize>, hook_length: usize) -> Self {
        ExtremalSpec {
            arms,
            hook_length,
            fixed_point: true,
        }
    }

    /// Number of layers of the resulting diagram.
    pub fn k(&self) -> usize {
        self.arms.len() + usize::from(self.fixed_point)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Extremal(msg));
        let Some(&a1) = self.arms.first() else {
            return bad("at least one arm is required".into());
        };
        if self.arms.windows(2).any(|w| w[0] <= w[1]) {
            return bad(format!("arms {:?} are not strictly decreasing", self.arms));
        }
        if self.hook_length < a1 + 1 {
            return bad(format!("r = {} must be at least a_1 + 1 = {}", self.hook_length, a1 + 1));
        }
        if self.fixed_point && self.arms.last() == Some(&0) {
            return bad("a zero arm is appended for the fixed point; the given arms must be positive".into());
        }
        Ok(())
    }

    /// Whether every arm and `r` are odd, the condition for the value prediction.
    pub fn is_odd(&self) -> bool {
        self.hook_length % 2 == 1 && self.arms.iter().all(|a| a % 2 == 1)
    }

    pub fn frobenius(&self) -> Result<FrobeniusCoords> {
        self.validate()?;
        let r = self.hook_length;
        let mut arm = self.arms.clone();
        let mut leg: Vec<usize> = self.arms.iter().rev().map(|a| r - 1 - a).collect();
        if self.fixed_point {
            arm.push(0);
            leg.push(0);
        }
        FrobeniusCoords::new(arm, leg)
    }

    pub fn partition(&self) -> Result<Partition> {
        Ok(self.frobenius()?.to_partition())
    }

    /// `r^{#arms}`, plus one fixed point when requested.
    pub fn cycle_type(&self) -> CycleType {
        let mut cycles = vec![self.hook_length; self.arms.len()];
        if self.fixed_point {
            cycles.push(1);
        }
        CycleType::new(cycles).expect("positive cycle lengths")
    }

    /// Expected character value at [`cycle_type`](Self::cycle_type). Refused
    /// unless every arm and `r` are odd.
    pub fn predicted(&self) -> Result<PredictedValue> {
        self.validate()?;
        if !self.is_odd() {
            return Err(Error::Extremal(
                "a value prediction needs odd arms and odd r".into(),
            ));
        }
        // only the corner (k,k) contributes once the fixed point is peeled
        Ok(predicted_value(self.arms.len()))
    }

    /// Frobenius coordinates left after removing the `r`-hook through row `p` (1-indexed).
    pub fn omit_arm(&self, p: usize) -> Result<FrobeniusCoords> {
        let mut reduced = self.clone();
        if p == 0 || p > reduced.arms.len() {
            return Err(Error::Extremal(format!("no arm {p}")));
        }
        reduced.arms.remove(p - 1);
        if reduced.arms.is_empty() {
            return Ok(FrobeniusCoords::default());
        }
        reduced.frobenius()
    }
}

pub fn build_symmetric(spec: &ExtremalSpec) -> Result<Partition> {
    if spec.fixed_point {
        return Err(Error::Extremal("spec requests the fixed-point variant".into()));
    }
    spec.partition()
}

pub fn build_fixed_point(spec: &ExtremalSpec) -> Result<(Partition, CycleType)> {
    if !spec.fixed_point {
        return Err(Error::Extremal("spec does not request a fixed point".into()));
    }
    Ok((spec.partition()?, spec.cycle_type()))
}

/// Arms `(2k-1, 2k-3, ..., 1)` with `r = 2k+1`: the partition `(2k, 2k-1, ..., 1)`.
pub fn staircase_spec(k: usize) -> ExtremalSpec {
    ExtremalSpec::symmetric((0..k).map(|i| 2 * (k - i) - 1).collect(), 2 * k + 1)
}

pub fn staircase(k: usize) -> (Partition, CycleType) {
    let lam = Partition::new((1..=2 * k).rev().collect()).expect("decreasing");
    (lam, CycleType::repeated(2 * k + 1, k))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredictedValue {
    pub k: usize,
    #[serde(serialize_with = "ser_decimal")]
    pub magnitude: BigUint,
    /// `(-1)^{k(k+1)/2}`, from unrolling the recursion down to `χ_∅ = 1`.
    pub sign: i8,
    /// `(-1)^{k(k-1)/2}`, the sign as printed in the original statement.
    /// Differs from `sign` for odd `k`.
    pub printed_sign: i8,
}

fn ser_decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl PredictedValue {
    pub fn value(&self) -> CharValue {
        let m = BigInt::from(self.magnitude.clone());
        CharValue::new(if self.sign < 0 { -m } else { m })
    }

    pub fn signs_agree(&self) -> bool {
        self.sign == self.printed_sign
    }
}

fn parity_sign(e: usize) -> i8 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn predicted_value(k: usize) -> PredictedValue {
    PredictedValue {
        k,
        magnitude: (1..=k).fold(BigUint::one(), |acc, i| acc * i),
        sign: parity_sign(k * (k + 1) / 2),
        printed_sign: parity_sign(k * k.saturating_sub(1) / 2),
    }
}

fn choose_decreasing(pool: &[usize], k: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if prefix.len() == k {
        out.push(prefix.clone());
        return;
    }
    let need = k - prefix.len();
    for i in 0..pool.len() {
        if pool.len() - i < need {
            break;
        }
        prefix.push(pool[i]);
        choose_decreasing(&pool[i + 1..], k, prefix, out);
        prefix.pop();
    }
}

/// Every odd-arm, odd-`r` witness with `k` arms and `k·r ≤ n_max`, sorted by
/// `(n, λ)`.
pub fn enumerate_family(k: usize, n_max: usize) -> Vec<(Partition, CycleType)> {
    if k == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut r = 2 * k + 1;
    while k * r <= n_max {
        let pool: Vec<usize> = (1..r).rev().filter(|a| a % 2 == 1).collect();
        let mut choices = Vec::new();
        choose_decreasing(&pool, k, &mut Vec::new(), &mut choices);
        for arms in choices {
            let spec = ExtremalSpec::symmetric(arms, r);
            out.push((spec.partition().expect("valid by construction"), spec.cycle_type()));
        }
        r += 2;
    }
    out.sort_by(|a, b| (a.1.n(), &a.0).cmp(&(b.1.n(), &b.0)));
    out.dedup();
    out
}
