//! Permutations in one-line notation, longest increasing subsequences and the
//! Robinson-Schensted correspondence.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tableau::{Tableau, TableauError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("{0:?} is not a permutation of 1..=len")]
    NotAPermutation(Vec<u32>),
    #[error("cannot parse permutation: {0}")]
    Parse(String),
    #[error("insertion and recording tableaux must be standard: {0}")]
    NotStandard(TableauError),
    #[error("insertion shape {p:?} differs from recording shape {q:?}")]
    ShapeMismatch { p: Vec<usize>, q: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self, PermError> {
        let mut seen = vec![false; values.len()];
        for &v in &values {
            let i = v as usize;
            if i == 0 || i > values.len() || std::mem::replace(&mut seen[i - 1], true) {
                return Err(PermError::NotAPermutation(values));
            }
        }
        Ok(Permutation(values))
    }

    pub fn identity(m: usize) -> Self {
        Permutation((1..=m as u32).collect())
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All of `S_m` in lexicographic order.
    pub fn all(m: usize) -> impl Iterator<Item = Permutation> {
        (1..=m as u32).permutations(m).map(Permutation)
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = PermError;

    fn try_from(values: Vec<u32>) -> Result<Self, PermError> {
        Permutation::new(values)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    /// Space-separated one-line notation, e.g. `"3 1 4 2"`.
    fn from_str(s: &str) -> Result<Self, PermError> {
        let values = s
            .split_whitespace()
            .map(|tok| tok.parse::<u32>().map_err(|e| PermError::Parse(format!("{tok:?}: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Permutation::new(values)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(" "))
    }
}

/// Length of the longest strictly increasing subsequence, by patience sorting:
/// `tops[i]` is the smallest possible last element of an increasing
/// subsequence of length `i + 1`.
pub fn lis_length(seq: &[u32]) -> usize {
    let mut tops: Vec<u32> = Vec::with_capacity(seq.len());
    for &x in seq {
        let i = tops.partition_point(|&t| t < x);
        if i == tops.len() {
            tops.push(x);
        } else {
            tops[i] = x;
        }
    }
    tops.len()
}

/// Insertion and recording tableaux of a permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TableauPair {
    #[serde(rename = "P")]
    pub p: Tableau,
    #[serde(rename = "Q")]
    pub q: Tableau,
}

impl TableauPair {
    pub fn new(p: Tableau, q: Tableau) -> Self {
        TableauPair { p, q }
    }

    /// Both standard and of the same shape.
    pub fn validate(&self) -> Result<(), PermError> {
        self.p.require_standard().map_err(PermError::NotStandard)?;
        self.q.require_standard().map_err(PermError::NotStandard)?;
        if self.p.shape() != self.q.shape() {
            return Err(PermError::ShapeMismatch {
                p: self.p.shape().column_lengths().to_vec(),
                q: self.q.shape().column_lengths().to_vec(),
            });
        }
        Ok(())
    }
}

/// Row-inserts `seq` and returns the insertion tableau as rows.
pub(crate) fn insertion_rows(seq: &[u32]) -> Vec<Vec<u32>> {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for &x in seq {
        insert(&mut rows, x);
    }
    rows
}

/// Inserts `x`, returning the row where the new cell was created.
fn insert(rows: &mut Vec<Vec<u32>>, mut x: u32) -> usize {
    for (r, row) in rows.iter_mut().enumerate() {
        let i = row.partition_point(|&y| y < x);
        if i == row.len() {
            row.push(x);
            return r;
        }
        x = std::mem::replace(&mut row[i], x);
    }
    rows.push(vec![x]);
    rows.len() - 1
}

pub fn rsk(sigma: &Permutation) -> TableauPair {
    let mut p: Vec<Vec<u32>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (t, &x) in sigma.values().iter().enumerate() {
        let r = insert(&mut p, x);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(t as u32 + 1);
    }
    TableauPair {
        p: Tableau::from_rows(p).expect("row insertion keeps a partition shape"),
        q: Tableau::from_rows(q).expect("recording tableau has the insertion shape"),
    }
}

pub fn rsk_inverse(pair: &TableauPair) -> Result<Permutation, PermError> {
    pair.validate()?;
    let mut p = pair.p.rows();
    let q = pair.q.rows();
    let m = pair.p.size();
    // row of each recording value
    let mut row_of = vec![0usize; m + 1];
    for (r, row) in q.iter().enumerate() {
        for &t in row {
            row_of[t as usize] = r;
        }
    }
    let mut values = vec![0u32; m];
    for t in (1..=m).rev() {
        let mut r = row_of[t];
        let mut x = p[r].pop().expect("recording value sits at a row end");
        while r > 0 {
            r -= 1;
            let row = &mut p[r];
            let i = row.partition_point(|&y| y < x) - 1;
            x = std::mem::replace(&mut row[i], x);
        }
        values[t - 1] = x;
        while p.last().is_some_and(Vec::is_empty) {
            p.pop();
        }
    }
    Permutation::new(values)
}

/// `(1, ..., w)` is a longest increasing subsequence of `sigma`.
pub fn has_lis_prefix(sigma: &Permutation, w: usize) -> bool {
    if w > sigma.len() || lis_length(sigma.values()) != w {
        return false;
    }
    let positions = positions(sigma);
    positions[..w].windows(2).all(|p| p[0] < p[1])
}

/// In the insertion tableau of `sigma` the values `1..=k*w` fill exactly the
/// top `k` rows, each of length `w`.
pub fn has_block_head(sigma: &Permutation, k: usize, w: usize) -> bool {
    let block = k * w;
    if block == 0 || block > sigma.len() {
        return false;
    }
    let rows = insertion_rows(sigma.values());
    if rows.len() < k || rows[0].len() != w {
        return false;
    }
    // standard rows: the top k rows hold [kw] iff each has length w and
    // every entry is at most kw
    rows[..k]
        .iter()
        .all(|row| row.len() == w && row.iter().all(|&v| v as usize <= block))
}

/// `sigma` has LIS length `w` and `k` pairwise disjoint increasing
/// subsequences of length `w` whose values are exactly `1..=k*w`.
///
/// Exhaustive search over assignments of the values to chains; intended as an
/// oracle for small inputs only.
pub fn has_disjoint_lis_block(sigma: &Permutation, k: usize, w: usize) -> bool {
    let block = k * w;
    if block > sigma.len() || lis_length(sigma.values()) != w {
        return false;
    }
    let word: Vec<u32> = sigma
        .values()
        .iter()
        .copied()
        .filter(|&v| v as usize <= block)
        .collect();
    let mut chains: Vec<(u32, usize)> = Vec::with_capacity(k);
    split_into_chains(&word, k, w, &mut chains)
}

fn split_into_chains(word: &[u32], k: usize, w: usize, chains: &mut Vec<(u32, usize)>) -> bool {
    let Some((&x, rest)) = word.split_first() else {
        return true;
    };
    for i in 0..chains.len() {
        let (last, len) = chains[i];
        if last < x && len < w {
            chains[i] = (x, len + 1);
            if split_into_chains(rest, k, w, chains) {
                return true;
            }
            chains[i] = (last, len);
        }
    }
    // opening a new chain; all empty chains are interchangeable
    if chains.len() < k {
        chains.push((x, 1));
        if split_into_chains(rest, k, w, chains) {
            return true;
        }
        chains.pop();
    }
    false
}

/// `positions[v - 1]` is the index of value `v` in `sigma`.
fn positions(sigma: &Permutation) -> Vec<usize> {
    let mut pos = vec![0; sigma.len()];
    for (i, &v) in sigma.values().iter().enumerate() {
        pos[v as usize - 1] = i;
    }
    pos
}
