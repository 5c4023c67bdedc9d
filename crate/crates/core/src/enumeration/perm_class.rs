use std::fmt;
use std::str::FromStr;

use crate::perm::{has_block_head, has_disjoint_lis_block, has_lis_prefix, lis_length, Permutation};

use super::{BigCount, EnumError, Tally};

/// Largest `m` brute-forced over `S_m` unless the caller raises the cap.
pub const DEFAULT_MAX_M: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PermClass {
    /// LIS length at most `w`.
    LisAtMost,
    /// `(1, ..., w)` is a longest increasing subsequence.
    LisPrefix,
    /// `1..=k*w` fills the top `k` rows of the insertion tableau.
    BlockHead,
    /// `k` disjoint increasing subsequences of length `w = LIS` on `1..=k*w`.
    DisjointLis,
}

impl PermClass {
    pub fn name(&self) -> &'static str {
        match self {
            PermClass::LisAtMost => "lis-at-most",
            PermClass::LisPrefix => "lis-prefix",
            PermClass::BlockHead => "block-head",
            PermClass::DisjointLis => "disjoint-lis",
        }
    }

    pub fn contains(&self, sigma: &Permutation, w: usize, k: usize) -> bool {
        match self {
            PermClass::LisAtMost => lis_length(sigma.values()) <= w,
            PermClass::LisPrefix => has_lis_prefix(sigma, w),
            PermClass::BlockHead => has_block_head(sigma, k, w),
            PermClass::DisjointLis => has_disjoint_lis_block(sigma, k, w),
        }
    }

    fn needs_k(&self) -> bool {
        matches!(self, PermClass::BlockHead | PermClass::DisjointLis)
    }
}

impl fmt::Display for PermClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PermClass {
    type Err = EnumError;

    fn from_str(s: &str) -> Result<Self, EnumError> {
        [
            PermClass::LisAtMost,
            PermClass::LisPrefix,
            PermClass::BlockHead,
            PermClass::DisjointLis,
        ]
        .into_iter()
        .find(|c| c.name() == s)
        .ok_or_else(|| EnumError::UnknownClass(s.to_string()))
    }
}

/// Members of `class` in `S_m`, by scanning all `m!` permutations.
pub fn count_perm_class(class: PermClass, m: usize, w: usize, k: usize, cap: usize) -> Result<BigCount, EnumError> {
    if m > cap {
        return Err(EnumError::OverCap { m, cap });
    }
    if class.needs_k() && (k == 0 || k * w > m) {
        return Err(EnumError::MissingK(class));
    }
    let mut tally = Tally::new();
    for sigma in Permutation::all(m) {
        if class.contains(&sigma, w, k) {
            tally.incr();
        }
    }
    Ok(tally.total())
}
