//! The rectangle-to-pair bijection and its skewed generalization.
//!
//! A semistandard tableau `R` of shape `w x n` whose content is `n - k` copies
//! of `w - 1` followed by `n + k(w-1)` ones is cut into two pieces. The cells
//! holding the large values (above `n - k`) form a skew region in the bottom
//! right corner; rotating it by 180 degrees and relabeling `x -> T + 1 - x`
//! (with `T = 2n + k(w-2)` the largest value) gives a standard tableau `Q'`.
//! The remaining cells, complemented with respect to `[n - k]` within width
//! `w`, give a standard tableau `P''`.
//!
//! For `k = 0` the pair `(P'', Q')` is the result. Otherwise the two are
//! swapped when `k < 0`, the insertion side is shifted up by `|k| w`, and a
//! standard `|k| x w` block `M` holding `1..=|k| w` is placed on top of it.
//! Every step is checked, so a broken invariant surfaces where it happens.

use thiserror::Error;

use crate::complement::{tableau_complement, ComplementError};
use crate::enumeration::enumerate_syt;
use crate::perm::{PermError, TableauPair};
use crate::tableau::{
    rect_subtract_tableau, ContentVector, Diagram, RectShape, SkewWeight, Tableau, TableauError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("invalid parameters w={w}, n={n}, k={k}: need w >= 2, n >= 1 and -n/(w-1) <= k <= n")]
    Params { w: usize, n: usize, k: i64 },
    #[error("k = 0 has no block to attach; use the base bijection")]
    ZeroSkew,
    #[error("content {found:?} differs from the expected {expected:?}")]
    ContentMismatch {
        expected: Vec<usize>,
        found: Vec<usize>,
    },
    #[error("large values do not form a skew region in the bottom right corner (lengths {0:?})")]
    SkewRegion(Vec<usize>),
    #[error("block M must be a standard {w}-wide, {rows}-tall rectangle on 1..={}", w * rows)]
    BlockShape { w: usize, rows: usize },
    #[error("pair has width {found}, expected {expected}")]
    Width { expected: String, found: usize },
    #[error("pair has {found} cells, expected {expected}")]
    Size { expected: usize, found: usize },
    #[error("not in the counted class: {0}")]
    Membership(String),
    #[error("step `{step}` produced an invalid tableau: {source}")]
    Step {
        step: &'static str,
        source: TableauError,
    },
    #[error("column {column} of P'' has {found} cells, expected {expected}")]
    ShapeLaw {
        column: usize,
        expected: i64,
        found: usize,
    },
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Complement(#[from] ComplementError),
    #[error(transparent)]
    Pair(#[from] PermError),
}

pub type Result<T> = std::result::Result<T, BijectionError>;

/// Width `w`, height `n` and skew `k` of the rectangle side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BijectionParams {
    w: usize,
    n: usize,
    k: i64,
}

impl BijectionParams {
    pub fn new(w: usize, n: usize, k: i64) -> Result<Self> {
        if w < 2 || SkewWeight::new(n, k, w - 1).is_err() {
            return Err(BijectionError::Params { w, n, k });
        }
        Ok(BijectionParams { w, n, k })
    }

    pub fn w(&self) -> usize {
        self.w
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    /// Size of the permutations on the other side.
    pub fn m(&self) -> usize {
        if self.k >= 0 {
            self.n + self.k as usize * (self.w - 1)
        } else {
            self.n + self.k.unsigned_abs() as usize
        }
    }

    /// Number of rows of the attached block, `|k|`.
    pub fn block_rows(&self) -> usize {
        self.k.unsigned_abs() as usize
    }

    /// Number of values held by the block, `|k| w`.
    pub fn block_size(&self) -> usize {
        self.block_rows() * self.w
    }

    pub fn rect(&self) -> RectShape {
        RectShape::new(self.w, self.n).expect("w >= 2 and n >= 1")
    }

    pub fn weight(&self) -> SkewWeight {
        SkewWeight::new(self.n, self.k, self.w - 1).expect("checked in new")
    }

    pub fn content(&self) -> ContentVector {
        self.weight().expand()
    }

    /// Values `1..=n-k` appear `w - 1` times in `R`.
    fn low_bound(&self) -> u32 {
        (self.n as i64 - self.k) as u32
    }

    /// Largest value of `R`, `2n + k(w-2)`.
    fn top_value(&self) -> u32 {
        (2 * self.n as i64 + self.k * (self.w as i64 - 2)) as u32
    }

    /// Size of `Q'`, `n + k(w-1)`.
    fn recording_size(&self) -> usize {
        (self.n as i64 + self.k * (self.w as i64 - 1)) as usize
    }

    /// `2 <= w < n`, the range stated for the skewed count.
    pub fn in_theorem_range(&self) -> bool {
        self.w < self.n
    }
}

/// The large-valued cells of `R`: `columns[i]` is the bottom part of column `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HighCells {
    pub columns: Vec<Vec<u32>>,
}

/// Intermediate tableaux of the cut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split {
    /// `R` with the rotated `Q'` block removed.
    pub low: Tableau,
    pub q_prime: Tableau,
    pub p_double_prime: Tableau,
}

fn step<T>(name: &'static str, r: std::result::Result<T, TableauError>) -> Result<T> {
    r.map_err(|source| BijectionError::Step { step: name, source })
}

fn check_rectangle(r: &Tableau, params: &BijectionParams) -> Result<()> {
    let expected = Diagram::rectangle(params.rect());
    if r.shape() != expected {
        return Err(TableauError::ShapeMismatch {
            expected: expected.column_lengths().to_vec(),
            found: r.shape().column_lengths().to_vec(),
        }
        .into());
    }
    r.require_semistandard()?;
    let content = params.content();
    if r.content() != content {
        return Err(BijectionError::ContentMismatch {
            expected: content.multiplicities().to_vec(),
            found: r.content().multiplicities().to_vec(),
        });
    }
    Ok(())
}

/// Cuts out the cells holding `n-k+1 ..= 2n+k(w-2)` and turns them into the
/// standard tableau `Q'` by rotating and relabeling `x -> 2n + k(w-2) + 1 - x`.
pub fn extract_q(r: &Tableau, params: &BijectionParams) -> Result<(HighCells, Tableau)> {
    check_rectangle(r, params)?;
    let low = params.low_bound();
    let top = params.top_value();
    let high: Vec<Vec<u32>> = r
        .columns()
        .iter()
        .map(|col| col[col.partition_point(|&v| v <= low)..].to_vec())
        .collect();
    let lengths: Vec<usize> = high.iter().map(Vec::len).collect();
    if lengths.windows(2).any(|p| p[0] > p[1]) {
        return Err(BijectionError::SkewRegion(lengths));
    }
    let w = params.w();
    let q_columns = (0..w)
        .map(|i| high[w - 1 - i].iter().rev().map(|&x| top + 1 - x).collect())
        .collect();
    let q = step("rotate Q''", Tableau::from_columns(q_columns))?;
    step("rotate Q''", q.require_standard())?;
    Ok((HighCells { columns: high }, q))
}

/// Steps 1 and 2: `Q'` and `P'' = complement_{w, n-k}(R - Q')`.
pub fn split_rectangle(r: &Tableau, params: &BijectionParams) -> Result<Split> {
    let (_, q_prime) = extract_q(r, params)?;
    let low = rect_subtract_tableau(r, params.rect(), &q_prime.shape())?;
    let p_double_prime = tableau_complement(&low, params.w(), params.low_bound())?;
    step("complement", p_double_prime.require_standard())?;
    if p_double_prime.size() != params.low_bound() as usize {
        return Err(BijectionError::Size {
            expected: params.low_bound() as usize,
            found: p_double_prime.size(),
        });
    }
    Ok(Split {
        low,
        q_prime,
        p_double_prime,
    })
}

/// Inverse of [`split_rectangle`]: complements `P''` back and glues the
/// rotated, relabeled `Q'` under it.
fn glue(p_double_prime: &Tableau, q_prime: &Tableau, params: &BijectionParams) -> Result<Tableau> {
    let w = params.w();
    let n = params.n();
    let top = params.top_value();
    let low = tableau_complement(p_double_prime, w, params.low_bound())?;
    let mut columns = Vec::with_capacity(w);
    for i in 0..w {
        let below = q_prime.column(w - 1 - i);
        let above = low.column(i);
        if above.len() + below.len() != n {
            return Err(BijectionError::ShapeLaw {
                column: w - 1 - i,
                expected: q_prime.column(w - 1 - i).len() as i64 - params.k(),
                found: p_double_prime.column(w - 1 - i).len(),
            });
        }
        let mut col = above.to_vec();
        col.extend(below.iter().rev().map(|&x| top + 1 - x));
        columns.push(col);
    }
    let r = step("glue", Tableau::from_columns(columns))?;
    step("glue", r.require_semistandard())?;
    check_rectangle(&r, params)?;
    Ok(r)
}

fn check_pair(pair: &TableauPair, size: usize) -> Result<()> {
    pair.validate()?;
    if pair.p.size() != size {
        return Err(BijectionError::Size {
            expected: size,
            found: pair.p.size(),
        });
    }
    Ok(())
}

/// `k = 0`: rectangle of content `(w-1)^n 1^n` to a pair of standard tableaux
/// of the same shape with `n` cells and at most `w` columns.
pub fn forward_base(r: &Tableau, w: usize, n: usize) -> Result<TableauPair> {
    let params = BijectionParams::new(w, n, 0)?;
    let split = split_rectangle(r, &params)?;
    let pair = TableauPair::new(split.p_double_prime, split.q_prime);
    check_pair(&pair, n)?;
    Ok(pair)
}

pub fn inverse_base(pair: &TableauPair, w: usize, n: usize) -> Result<Tableau> {
    let params = BijectionParams::new(w, n, 0)?;
    check_pair(pair, n)?;
    if pair.p.width() > w {
        return Err(BijectionError::Width {
            expected: format!("at most {w}"),
            found: pair.p.width(),
        });
    }
    glue(&pair.p, &pair.q, &params)
}

fn check_block(block: &Tableau, params: &BijectionParams) -> Result<()> {
    let rows = params.block_rows();
    let expected = Diagram::rectangle(RectShape::new(params.w(), rows).map_err(|_| BijectionError::ZeroSkew)?);
    if block.shape() != expected || !block.is_standard() {
        return Err(BijectionError::BlockShape { w: params.w(), rows });
    }
    Ok(())
}

/// `k != 0`: rectangle plus a block `M` to a pair of standard tableaux of
/// width exactly `w` with `m` cells, whose insertion tableau starts with `M`.
pub fn forward_skew(r: &Tableau, params: &BijectionParams, block: &Tableau) -> Result<TableauPair> {
    if params.k() == 0 {
        return Err(BijectionError::ZeroSkew);
    }
    check_block(block, params)?;
    let split = split_rectangle(r, params)?;
    check_shape_law(&split, params)?;
    let (inserted, recording) = if params.k() > 0 {
        (split.p_double_prime, split.q_prime)
    } else {
        (split.q_prime, split.p_double_prime)
    };
    let shift = params.block_size() as u32;
    let shifted = inserted.map_entries(|x| x + shift)?;
    let columns = (0..params.w())
        .map(|i| {
            let mut col = block.column(i).to_vec();
            col.extend_from_slice(shifted.column(i));
            col
        })
        .collect();
    let p = step("attach M", Tableau::from_columns(columns))?;
    let pair = TableauPair::new(p, recording);
    check_pair(&pair, params.m())?;
    if pair.p.width() != params.w() {
        return Err(BijectionError::Width {
            expected: format!("exactly {}", params.w()),
            found: pair.p.width(),
        });
    }
    Ok(pair)
}

/// `|P''_i| = |Q'_i| - k` for every column.
pub fn check_shape_law(split: &Split, params: &BijectionParams) -> Result<()> {
    for i in 0..params.w() {
        let expected = split.q_prime.column(i).len() as i64 - params.k();
        let found = split.p_double_prime.column(i).len();
        if expected != found as i64 {
            return Err(BijectionError::ShapeLaw {
                column: i,
                expected,
                found,
            });
        }
    }
    Ok(())
}

/// Recovers `(R, M)` from a pair whose insertion tableau has `1..=|k| w` in
/// its top `|k|` rows, each of length `w`.
pub fn inverse_skew(pair: &TableauPair, params: &BijectionParams) -> Result<(Tableau, Tableau)> {
    if params.k() == 0 {
        return Err(BijectionError::ZeroSkew);
    }
    check_pair(pair, params.m())?;
    let w = params.w();
    let rows = params.block_rows();
    let block_size = params.block_size() as u32;
    if pair.p.width() != w {
        return Err(BijectionError::Membership(format!(
            "insertion tableau has width {}, not {w}",
            pair.p.width()
        )));
    }
    if let Some(c) = (0..w).find(|&c| pair.p.column(c).len() < rows) {
        return Err(BijectionError::Membership(format!(
            "column {c} is shorter than the {rows} block rows"
        )));
    }
    if let Some(v) = pair
        .p
        .columns()
        .iter()
        .flat_map(|c| &c[..rows])
        .find(|&&v| v > block_size)
    {
        return Err(BijectionError::Membership(format!(
            "value {v} lies in the top {rows} rows, outside 1..={block_size}"
        )));
    }
    let block = Tableau::from_columns(pair.p.columns().iter().map(|c| c[..rows].to_vec()).collect())?;
    let rest = Tableau::from_columns(
        pair.p
            .columns()
            .iter()
            .map(|c| c[rows..].iter().map(|&x| x - block_size).collect())
            .collect(),
    )?;
    let (p_double_prime, q_prime) = if params.k() > 0 {
        (rest, pair.q.clone())
    } else {
        (pair.q.clone(), rest)
    };
    step("detach M", p_double_prime.require_standard())?;
    step("detach M", q_prime.require_standard())?;
    if q_prime.size() != params.recording_size() {
        return Err(BijectionError::Size {
            expected: params.recording_size(),
            found: q_prime.size(),
        });
    }
    let r = glue(&p_double_prime, &q_prime, params)?;
    Ok((r, block))
}

/// Standard `|k|`-row, `w`-column rectangles on `1..=|k| w`, ordered
/// lexicographically by their row reading word (top row first).
pub fn enumerate_m_blocks(k: i64, w: usize) -> Result<Vec<Tableau>> {
    let rows = k.unsigned_abs() as usize;
    let rect = RectShape::new(w, rows).map_err(|_| BijectionError::ZeroSkew)?;
    let mut blocks: Vec<Tableau> = enumerate_syt(&Diagram::rectangle(rect)).collect();
    blocks.sort_by_cached_key(|t| t.rows().concat());
    Ok(blocks)
}
