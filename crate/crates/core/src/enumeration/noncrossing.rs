//! Set partitions with colored arcs.
//!
//! A block `{b_1 < b_2 < ... < b_j}` contributes the arcs `(b_1, b_2), ...,
//! (b_{j-1}, b_j)`. Each arc receives one of `r` colors, and the partition is
//! counted when no two arcs of the same color cross. This colored model is a
//! candidate definition; [`ColoredArcPartition::is_monochromatic_noncrossing`]
//! is the only place it is encoded.

use itertools::Itertools;

use super::{BigCount, Tally};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredArcPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
    arcs: Vec<(usize, usize)>,
    colors: Vec<u32>,
}

impl ColoredArcPartition {
    /// `blocks` must partition `1..=n`; `colors[i]` colors the i-th arc of
    /// [`ColoredArcPartition::arcs`].
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>, colors: Vec<u32>) -> Option<Self> {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort();
        let mut seen: Vec<usize> = blocks.iter().flatten().copied().collect();
        seen.sort_unstable();
        if seen != (1..=n).collect::<Vec<_>>() {
            return None;
        }
        let arcs: Vec<(usize, usize)> = blocks
            .iter()
            .flat_map(|b| b.iter().copied().tuple_windows())
            .collect();
        if arcs.len() != colors.len() {
            return None;
        }
        Some(ColoredArcPartition { n, blocks, arcs, colors })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Consecutive-element pairs of each block, blocks in sorted order.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// No arcs `(i, j)` and `(k, l)` of equal color with `i < k < j < l`.
    pub fn is_monochromatic_noncrossing(&self) -> bool {
        let n = self.arcs.len();
        (0..n).all(|a| {
            (0..n).all(|b| {
                let (i, j) = self.arcs[a];
                let (k, l) = self.arcs[b];
                self.colors[a] != self.colors[b] || !(i < k && k < j && j < l)
            })
        })
    }
}

/// All set partitions of `1..=n` via restricted growth strings; blocks are
/// increasing and ordered by their least element.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(next: usize, n: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if next > n {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(next);
            go(next + 1, n, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![next]);
        go(next + 1, n, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    go(1, n, &mut Vec::new(), &mut out);
    out
}

/// Every partition of `1..=n` with every coloring of its arcs by `r` colors.
pub fn colored_arc_partitions(n: usize, r: u32) -> impl Iterator<Item = ColoredArcPartition> {
    set_partitions(n).into_iter().flat_map(move |blocks| {
        let arcs = n - blocks.len();
        std::iter::repeat_n(0..r, arcs)
            .multi_cartesian_product()
            .map(move |colors| ColoredArcPartition::new(n, blocks.clone(), colors).expect("valid partition"))
    })
}

/// Colored partitions of `1..=n` with `r` colors and no monochromatic crossing.
pub fn count_colored_noncrossing(n: usize, r: u32) -> BigCount {
    let mut tally = Tally::new();
    for p in colored_arc_partitions(n, r) {
        if p.is_monochromatic_noncrossing() {
            tally.incr();
        }
    }
    tally.total()
}
