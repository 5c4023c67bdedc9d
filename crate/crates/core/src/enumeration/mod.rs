//! Exact counting: Kostka numbers, standard tableaux, closed forms,
//! permutation classes and colored noncrossing partitions.

mod formulas;
mod noncrossing;
mod perm_class;
mod ssyt;

use std::fmt;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};
use thiserror::Error;

pub use formulas::{catalan, count_syt_hook, factorial, rect_catalan, superfactorial};
pub use noncrossing::{colored_arc_partitions, count_colored_noncrossing, set_partitions, ColoredArcPartition};
pub use perm_class::{count_perm_class, PermClass, DEFAULT_MAX_M};
pub use ssyt::{enumerate_ssyt, enumerate_syt, kostka, partitions, SsytIter};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("shape has {cells} cells but the content sums to {content}")]
    SizeMismatch { cells: usize, content: usize },
    #[error("brute force over S_{m} exceeds the cap m <= {cap}")]
    OverCap { m: usize, cap: usize },
    #[error("class {0} needs a block count k >= 1 with k*w <= m")]
    MissingK(PermClass),
    #[error("unknown permutation class {0:?}")]
    UnknownClass(String),
}

/// An exact non-negative count.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BigCount(pub BigUint);

impl BigCount {
    pub fn value(&self) -> &BigUint {
        &self.0
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl From<BigUint> for BigCount {
    fn from(v: BigUint) -> Self {
        BigCount(v)
    }
}

impl PartialEq<u64> for BigCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl std::ops::Mul for &BigCount {
    type Output = BigCount;

    fn mul(self, rhs: &BigCount) -> BigCount {
        BigCount(&self.0 * &rhs.0)
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Decimal string, so values beyond 2^53 survive JSON readers.
impl Serialize for BigCount {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(&self.0)
    }
}

/// Counter on a checked `u64` that spills into a big integer instead of wrapping.
#[derive(Debug, Clone, Default)]
pub struct Tally {
    small: u64,
    spilled: BigUint,
}

impl Tally {
    pub fn new() -> Self {
        Tally::default()
    }

    pub fn add(&mut self, x: u64) {
        match self.small.checked_add(x) {
            Some(s) => self.small = s,
            None => {
                self.spilled += self.small;
                self.small = x;
            }
        }
    }

    pub fn incr(&mut self) {
        self.add(1);
    }

    pub fn total(&self) -> BigCount {
        BigCount(&self.spilled + self.small)
    }
}
