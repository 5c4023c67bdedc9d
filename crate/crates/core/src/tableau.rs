//! Young diagrams, columns, tableaux and content vectors.
//!
//! Diagrams and tableaux are stored column-major: `columns[i]` is the i-th
//! column read top to bottom, and a diagram is the list of its column lengths.
//! Trailing empty columns are never stored, so two tableaux compare equal
//! exactly when they have the same cells and entries.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("column lengths {0:?} are not weakly decreasing")]
    MalformedShape(Vec<usize>),
    #[error("row lengths {0:?} are not weakly decreasing")]
    MalformedRows(Vec<usize>),
    #[error("entry 0 at column {column}, row {row}; entries are 1-based")]
    ZeroEntry { column: usize, row: usize },
    #[error("declared width {width} is smaller than the {columns} columns given")]
    WidthTooSmall { width: usize, columns: usize },
    #[error("column {0:?} is not strictly increasing")]
    NotAColumn(Vec<u32>),
    #[error("tableau is not semistandard: {0}")]
    NotSemistandard(Violation),
    #[error("tableau is not standard")]
    NotStandard,
    #[error("diagram {inner:?} does not fit in the {width}x{height} rectangle")]
    DoesNotFit {
        inner: Vec<usize>,
        width: usize,
        height: usize,
    },
    #[error("expected shape {expected:?}, found {found:?}")]
    ShapeMismatch {
        expected: Vec<usize>,
        found: Vec<usize>,
    },
    #[error("skew weight (n={n}, k={k}, a={a}) needs -n/a <= k <= n")]
    SkewRange { n: usize, k: i64, a: usize },
    #[error("rectangle dimensions must be positive, got {width}x{height}")]
    EmptyRectangle { width: usize, height: usize },
    #[error("malformed tableau json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, TableauError>;

/// A cell-level reason a filling fails to be semistandard.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `column[row] >= column[row + 1]`.
    ColumnNotStrict { column: usize, row: usize },
    /// `columns[column][row] > columns[column + 1][row]`.
    RowDecreasing { column: usize, row: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ColumnNotStrict { column, row } => write!(
                f,
                "cells (column {column}, row {row}) and (column {column}, row {}) are not strictly increasing",
                row + 1
            ),
            Violation::RowDecreasing { column, row } => write!(
                f,
                "cells (column {column}, row {row}) and (column {}, row {row}) decrease along the row",
                column + 1
            ),
        }
    }
}

/// A strictly increasing list of positive integers, possibly empty.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Column(Vec<u32>);

impl Column {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.first() == Some(&0) || entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(TableauError::NotAColumn(entries));
        }
        Ok(Column(entries))
    }

    pub fn empty() -> Self {
        Column(Vec::new())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, value: u32) -> bool {
        self.0.binary_search(&value).is_ok()
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }
}

/// A Young diagram given by its column lengths, left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    columns: Vec<usize>,
}

impl Diagram {
    pub fn new(mut columns: Vec<usize>) -> Result<Self> {
        if columns.windows(2).any(|w| w[0] < w[1]) {
            return Err(TableauError::MalformedShape(columns));
        }
        while columns.last() == Some(&0) {
            columns.pop();
        }
        Ok(Diagram { columns })
    }

    pub fn empty() -> Self {
        Diagram::default()
    }

    /// Builds a diagram from its row lengths, top to bottom.
    pub fn from_row_lengths(rows: &[usize]) -> Result<Self> {
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(TableauError::MalformedRows(rows.to_vec()));
        }
        Ok(Diagram {
            columns: conjugate(rows),
        })
    }

    pub fn rectangle(rect: RectShape) -> Self {
        Diagram {
            columns: vec![rect.height(); rect.width()],
        }
    }

    pub fn column_lengths(&self) -> &[usize] {
        &self.columns
    }

    pub fn row_lengths(&self) -> Vec<usize> {
        conjugate(&self.columns)
    }

    /// Number of non-empty columns.
    pub fn width(&self) -> usize {
        self.columns.len()
    }

    /// Number of non-empty rows.
    pub fn height(&self) -> usize {
        self.columns.first().copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.columns.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// Length of column `i`, zero past the last column.
    pub fn column_len(&self, i: usize) -> usize {
        self.columns.get(i).copied().unwrap_or(0)
    }

    pub fn fits_in(&self, rect: RectShape) -> bool {
        self.width() <= rect.width() && self.height() <= rect.height()
    }
}

fn conjugate(lengths: &[usize]) -> Vec<usize> {
    let longest = lengths.first().copied().unwrap_or(0);
    (0..longest)
        .map(|r| lengths.iter().take_while(|&&l| l > r).count())
        .collect()
}

/// The `width` x `height` rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RectShape {
    width: usize,
    height: usize,
}

impl RectShape {
    pub fn new(width: usize, height: usize) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(TableauError::EmptyRectangle { width, height });
        }
        Ok(RectShape { width, height })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn cells(&self) -> usize {
        self.width * self.height
    }
}

/// The complement of a 180-degree rotated `inner` in the bottom right corner
/// of `rect`. `inner` is padded with empty columns up to the rectangle width.
pub fn rect_subtract_shape(rect: RectShape, inner: &Diagram) -> Result<Diagram> {
    if !inner.fits_in(rect) {
        return Err(TableauError::DoesNotFit {
            inner: inner.columns.clone(),
            width: rect.width,
            height: rect.height,
        });
    }
    let w = rect.width;
    Diagram::new(
        (0..w)
            .map(|i| rect.height - inner.column_len(w - 1 - i))
            .collect(),
    )
}

/// Removes a rotated `inner`-shaped block from the bottom right of `rect_tableau`:
/// column i of the result keeps the `h - |inner_{w-i+1}|` smallest entries of
/// column i.
pub fn rect_subtract_tableau(rect_tableau: &Tableau, rect: RectShape, inner: &Diagram) -> Result<Tableau> {
    let expected = Diagram::rectangle(rect);
    if rect_tableau.shape() != expected {
        return Err(TableauError::ShapeMismatch {
            expected: expected.columns,
            found: rect_tableau.shape().columns,
        });
    }
    rect_tableau.require_semistandard()?;
    let gamma = rect_subtract_shape(rect, inner)?;
    let columns = rect_tableau
        .columns
        .iter()
        .enumerate()
        .map(|(i, col)| col[..gamma.column_len(i)].to_vec())
        .collect();
    Tableau::from_columns(columns)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    Invalid,
    Semistandard,
    Standard,
}

/// A filling of a Young diagram with positive integers.
///
/// Construction only checks the structure (column lengths weakly decreasing,
/// no zero entries); whether the filling is a tableau is answered by
/// [`Tableau::classify`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    columns: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn from_columns(mut columns: Vec<Vec<u32>>) -> Result<Self> {
        while columns.last().is_some_and(Vec::is_empty) {
            columns.pop();
        }
        let lengths: Vec<usize> = columns.iter().map(Vec::len).collect();
        if lengths.windows(2).any(|w| w[0] < w[1]) {
            return Err(TableauError::MalformedShape(lengths));
        }
        for (c, col) in columns.iter().enumerate() {
            if let Some(r) = col.iter().position(|&v| v == 0) {
                return Err(TableauError::ZeroEntry { column: c, row: r });
            }
        }
        Ok(Tableau { columns })
    }

    /// Builds a tableau from its rows, top to bottom.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let lengths: Vec<usize> = rows.iter().map(Vec::len).collect();
        if lengths.windows(2).any(|w| w[0] < w[1]) {
            return Err(TableauError::MalformedRows(lengths));
        }
        let width = lengths.first().copied().unwrap_or(0);
        let columns = (0..width)
            .map(|c| rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect())
            .collect();
        Tableau::from_columns(columns)
    }

    pub fn empty() -> Self {
        Tableau::default()
    }

    pub fn columns(&self) -> &[Vec<u32>] {
        &self.columns
    }

    /// Column `i`, empty past the last column.
    pub fn column(&self, i: usize) -> &[u32] {
        self.columns.get(i).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        let height = self.columns.first().map_or(0, Vec::len);
        (0..height)
            .map(|r| {
                self.columns
                    .iter()
                    .take_while(|c| c.len() > r)
                    .map(|c| c[r])
                    .collect()
            })
            .collect()
    }

    pub fn into_columns(self) -> Vec<Vec<u32>> {
        self.columns
    }

    pub fn shape(&self) -> Diagram {
        Diagram {
            columns: self.columns.iter().map(Vec::len).collect(),
        }
    }

    pub fn width(&self) -> usize {
        self.columns.len()
    }

    pub fn size(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn max_entry(&self) -> u32 {
        self.columns.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = u32> + '_ {
        self.columns.iter().flatten().copied()
    }

    /// Applies `f` to every entry, keeping the shape.
    pub fn map_entries(&self, f: impl Fn(u32) -> u32) -> Result<Tableau> {
        Tableau::from_columns(
            self.columns
                .iter()
                .map(|c| c.iter().map(|&v| f(v)).collect())
                .collect(),
        )
    }

    /// The first cell-level violation of column-strictness or row-weakness.
    pub fn first_violation(&self) -> Option<Violation> {
        for (c, col) in self.columns.iter().enumerate() {
            if let Some(r) = col.windows(2).position(|w| w[0] >= w[1]) {
                return Some(Violation::ColumnNotStrict { column: c, row: r });
            }
        }
        for (c, pair) in self.columns.windows(2).enumerate() {
            let (left, right) = (&pair[0], &pair[1]);
            if let Some(r) = left.iter().zip(right).position(|(a, b)| a > b) {
                return Some(Violation::RowDecreasing { column: c, row: r });
            }
        }
        None
    }

    pub fn classify(&self) -> Classification {
        if self.first_violation().is_some() {
            return Classification::Invalid;
        }
        let rows_strict = self
            .columns
            .windows(2)
            .all(|p| p[0].iter().zip(&p[1]).all(|(a, b)| a < b));
        if rows_strict && self.content().multiplicities().iter().all(|&m| m == 1) {
            Classification::Standard
        } else {
            Classification::Semistandard
        }
    }

    pub fn is_semistandard(&self) -> bool {
        self.classify() != Classification::Invalid
    }

    pub fn is_standard(&self) -> bool {
        self.classify() == Classification::Standard
    }

    pub fn require_semistandard(&self) -> Result<()> {
        match self.first_violation() {
            Some(v) => Err(TableauError::NotSemistandard(v)),
            None => Ok(()),
        }
    }

    pub fn require_standard(&self) -> Result<()> {
        self.require_semistandard()?;
        if self.is_standard() {
            Ok(())
        } else {
            Err(TableauError::NotStandard)
        }
    }

    pub fn content(&self) -> ContentVector {
        let mut counts = vec![0usize; self.max_entry() as usize];
        for v in self.entries() {
            counts[v as usize - 1] += 1;
        }
        ContentVector::new(counts)
    }

    /// The columns as [`Column`] values; fails if some column is not strictly increasing.
    pub fn column_sets(&self) -> Result<Vec<Column>> {
        self.columns.iter().map(|c| Column::new(c.clone())).collect()
    }

    /// Canonical single-line JSON: `{"width":w,"columns":[[..],..]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tableau serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Tableau> {
        serde_json::from_str(text).map_err(|e| TableauError::Json(e.to_string()))
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.rows();
        if rows.is_empty() {
            return write!(f, "()");
        }
        for (i, row) in rows.iter().enumerate() {
            if i > 0 {
                write!(f, " / ")?;
            }
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableauJson {
    width: usize,
    columns: Vec<Vec<u32>>,
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        TableauJson {
            width: self.columns.len(),
            columns: self.columns.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = TableauJson::deserialize(deserializer)?;
        if raw.columns.len() > raw.width {
            return Err(serde::de::Error::custom(TableauError::WidthTooSmall {
                width: raw.width,
                columns: raw.columns.len(),
            }));
        }
        Tableau::from_columns(raw.columns).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagramJson {
    columns: Vec<usize>,
}

impl Serialize for Diagram {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramJson {
            columns: self.columns.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Diagram {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = DiagramJson::deserialize(deserializer)?;
        Diagram::new(raw.columns).map_err(serde::de::Error::custom)
    }
}

/// Multiplicities of the values 1, 2, ...; trailing zeros are trimmed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ContentVector(Vec<usize>);

impl ContentVector {
    pub fn new(mut multiplicities: Vec<usize>) -> Self {
        while multiplicities.last() == Some(&0) {
            multiplicities.pop();
        }
        ContentVector(multiplicities)
    }

    /// `len` copies of value one each, i.e. the content of a standard tableau.
    pub fn ones(len: usize) -> Self {
        ContentVector(vec![1; len])
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.0
    }

    /// Multiplicity of `value` (1-based); zero when absent.
    pub fn count(&self, value: u32) -> usize {
        (value as usize)
            .checked_sub(1)
            .and_then(|i| self.0.get(i))
            .copied()
            .unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Largest value with non-zero multiplicity.
    pub fn max_value(&self) -> u32 {
        self.0.len() as u32
    }
}

/// The skewed weight: `n - k` copies of `a` followed by `a*k + n` ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SkewWeight {
    n: usize,
    k: i64,
    a: usize,
}

impl SkewWeight {
    pub fn new(n: usize, k: i64, a: usize) -> Result<Self> {
        let (ni, ai) = (n as i64, a as i64);
        if n == 0 || a == 0 || k > ni || ni + k * ai < 0 {
            return Err(TableauError::SkewRange { n, k, a });
        }
        Ok(SkewWeight { n, k, a })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn a(&self) -> usize {
        self.a
    }

    /// Number of leading entries equal to `a`.
    pub fn repeated(&self) -> usize {
        (self.n as i64 - self.k) as usize
    }

    /// Number of trailing ones.
    pub fn singles(&self) -> usize {
        (self.n as i64 + self.k * self.a as i64) as usize
    }

    pub fn expand(&self) -> ContentVector {
        let mut v = vec![self.a; self.repeated()];
        v.extend(std::iter::repeat_n(1, self.singles()));
        ContentVector::new(v)
    }
}

pub fn expand_skew_weight(n: usize, k: i64, a: usize) -> Result<ContentVector> {
    Ok(SkewWeight::new(n, k, a)?.expand())
}
