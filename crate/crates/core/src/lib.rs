//! Exact irreducible character values of symmetric groups.
//!
//! Values are computed by rim-hook recursion in arbitrary precision. The
//! crate also builds the partition families attaining `|χ(g)| = k!` (for
//! `g` with `k` cycles) and sweeps all small `n` to check that bound and its
//! fixed-point refinement `(k-1)!`.
//!
//! ```
//! use symchar::{evaluate, CycleType, Partition};
//!
//! let lam: Partition = "[4,3,2,1]".parse().unwrap();
//! let mu: CycleType = "[5,5]".parse().unwrap();
//! assert_eq!(evaluate(&lam, &mu).unwrap().to_string(), "-2");
//! ```

pub mod cache;
pub mod error;
pub mod extremal;
pub mod mn;
pub mod partition;
pub mod rim;
pub mod verify;

pub use error::{Error, Result};
pub use extremal::{
    build_fixed_point, build_symmetric, enumerate_family, predicted_value, staircase,
    ExtremalSpec, PredictedValue,
};
pub use mn::{
    character_table, degree_hook_length, evaluate, evaluate_with_order, orthogonality_check,
    CharValue, CharacterTable, EvalStats, Evaluator, PartOrder,
};
pub use partition::{
    cycle_types, parse_cycle_type, parse_partition, partitions, Cell, CycleType,
    FrobeniusCoords, Partition,
};
pub use rim::{
    enumerate_rim_hooks, hook_count_table, remove_rim_hook, rim_sequence, HookClass, RimHook,
    RimSequence,
};
pub use verify::{find_maximizers, verify_fixed, verify_key_ineq, verify_main, BoundReport};
