//! Column and tableau complements with respect to `[n]`.

use thiserror::Error;

use crate::tableau::{Column, Tableau, TableauError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplementError {
    #[error("entry {value} lies outside [1, {n}]")]
    OutOfRange { value: u32, n: u32 },
    #[error("tableau has {found} columns, more than the width {width}")]
    TooWide { width: usize, found: usize },
    #[error(transparent)]
    Tableau(#[from] TableauError),
}

/// `[n] \ column`, increasing.
pub fn column_complement(column: &Column, n: u32) -> Result<Column, ComplementError> {
    if let Some(&value) = column.entries().last().filter(|&&v| v > n) {
        return Err(ComplementError::OutOfRange { value, n });
    }
    let complement = (1..=n).filter(|&v| !column.contains(v)).collect();
    Ok(Column::new(complement)?)
}

/// The partial order on columns under which adjacent tableau columns are
/// ordered: `u` is at least as long as `v` and dominated entrywise.
pub fn column_precedes(u: &Column, v: &Column) -> bool {
    u.len() >= v.len() && u.entries().iter().zip(v.entries()).all(|(a, b)| a <= b)
}

/// Complements every column with respect to `[n]` and reverses the column
/// order within width `w`. Columns beyond the tableau's width count as empty
/// and become `[n]`.
pub fn tableau_complement(tableau: &Tableau, w: usize, n: u32) -> Result<Tableau, ComplementError> {
    if tableau.width() > w {
        return Err(ComplementError::TooWide {
            width: w,
            found: tableau.width(),
        });
    }
    tableau.require_semistandard()?;
    let columns = (0..w)
        .map(|i| {
            let source = Column::new(tableau.column(w - 1 - i).to_vec())?;
            Ok(column_complement(&source, n)?.into_entries())
        })
        .collect::<Result<Vec<_>, ComplementError>>()?;
    Ok(Tableau::from_columns(columns)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::Diagram;
    use proptest::prelude::*;

    fn col(v: &[u32]) -> Column {
        Column::new(v.to_vec()).unwrap()
    }

    fn example_p() -> Tableau {
        Tableau::from_rows(vec![vec![1, 1, 2], vec![2, 3, 4], vec![3, 4]]).unwrap()
    }

    #[test]
    fn column_complement_examples() {
        assert_eq!(column_complement(&col(&[2, 4]), 4).unwrap(), col(&[1, 3]));
        assert_eq!(column_complement(&Column::empty(), 3).unwrap(), col(&[1, 2, 3]));
        let c = col(&[1, 3]);
        assert_eq!(column_complement(&column_complement(&c, 5).unwrap(), 5).unwrap(), c);
        assert_eq!(
            column_complement(&col(&[1, 6]), 5),
            Err(ComplementError::OutOfRange { value: 6, n: 5 })
        );
    }

    #[test]
    fn precedes_examples() {
        assert!(column_precedes(&col(&[1, 2, 3]), &col(&[1, 3, 4])));
        assert!(!column_precedes(&col(&[1, 2]), &col(&[1, 2, 3])));
        assert!(column_precedes(&col(&[2, 5]), &col(&[2, 5])));
        // incomparable in both directions
        assert!(!column_precedes(&col(&[1, 4]), &col(&[2, 3])));
        assert!(!column_precedes(&col(&[2, 3]), &col(&[1, 4])));
    }

    #[test]
    fn tableau_complement_examples() {
        let p = example_p();
        let c = tableau_complement(&p, 3, 4).unwrap();
        assert_eq!(c.rows(), vec![vec![1, 2, 4], vec![3]]);
        assert_eq!(tableau_complement(&c, 3, 4).unwrap(), p);
        let full = tableau_complement(&Tableau::empty(), 2, 3).unwrap();
        assert_eq!(full.columns(), &[vec![1, 2, 3], vec![1, 2, 3]]);
        assert!(matches!(
            tableau_complement(&p, 2, 4),
            Err(ComplementError::TooWide { width: 2, found: 3 })
        ));
        assert!(matches!(
            tableau_complement(&p, 3, 3),
            Err(ComplementError::OutOfRange { value: 4, n: 3 })
        ));
    }

    /// Random semistandard tableaux with at most `w` columns and entries in `[n]`,
    /// built column by column from subsets so that each column dominates the next.
    fn semistandard(max_w: usize, max_n: u32) -> impl Strategy<Value = (Tableau, usize, u32)> {
        (1..=max_w, 1..=max_n).prop_flat_map(move |(w, n)| {
            let subset = proptest::collection::btree_set(1..=n, 0..=n as usize);
            proptest::collection::vec(subset, w).prop_map(move |sets| {
                let mut columns: Vec<Vec<u32>> = Vec::new();
                for s in sets {
                    let c: Vec<u32> = s.into_iter().collect();
                    let ok = columns.last().is_none_or(|prev| {
                        column_precedes(&Column::new(prev.clone()).unwrap(), &Column::new(c.clone()).unwrap())
                    });
                    if ok && !c.is_empty() {
                        columns.push(c);
                    } else {
                        break;
                    }
                }
                (Tableau::from_columns(columns).unwrap(), w, n)
            })
        })
    }

    proptest! {
        #[test]
        fn complement_is_an_involution((p, w, n) in semistandard(5, 7)) {
            let c = tableau_complement(&p, w, n).unwrap();
            prop_assert!(c.is_semistandard());
            prop_assert_eq!(tableau_complement(&c, w, n).unwrap(), p);
        }

        #[test]
        fn complement_reverses_order(
            n in 1u32..9,
            a in proptest::collection::btree_set(1u32..9, 0..8),
            b in proptest::collection::btree_set(1u32..9, 0..8),
        ) {
            let u = Column::new(a.into_iter().filter(|&v| v <= n).collect()).unwrap();
            let v = Column::new(b.into_iter().filter(|&v| v <= n).collect()).unwrap();
            if column_precedes(&u, &v) {
                let cu = column_complement(&u, n).unwrap();
                let cv = column_complement(&v, n).unwrap();
                prop_assert!(column_precedes(&cv, &cu));
            }
        }
    }

    #[test]
    fn complement_of_rectangle_difference_has_subtracted_shape() {
        use crate::tableau::{rect_subtract_shape, RectShape};
        // Shape law checked over every diagram inside a 3x4 box.
        let rect = RectShape::new(3, 4).unwrap();
        for a in 0..=4usize {
            for b in 0..=a {
                for c in 0..=b {
                    let lambda = Diagram::new(vec![a, b, c]).unwrap();
                    let gamma = rect_subtract_shape(rect, &lambda).unwrap();
                    // fill gamma with the smallest column-strict filling
                    let cols = gamma
                        .column_lengths()
                        .iter()
                        .map(|&l| (1..=l as u32).collect())
                        .collect();
                    let a_tab = Tableau::from_columns(cols).unwrap();
                    let comp = tableau_complement(&a_tab, 3, 4).unwrap();
                    assert_eq!(comp.shape(), lambda);
                }
            }
        }
    }
}
