use crate::tableau::{ContentVector, Diagram, Tableau};

use super::{BigCount, EnumError, Tally};

/// Semistandard tableaux of a fixed shape and content, in lexicographic order
/// of the column-major reading word.
///
/// Cells are filled column by column, top to bottom, trying values in
/// increasing order. A candidate is rejected early when the rest of its column
/// cannot be completed with larger unused values, or when some value has more
/// copies left than there are columns still able to receive it.
#[derive(Debug, Clone)]
pub struct SsytIter {
    lengths: Vec<usize>,
    cells: Vec<(usize, usize)>,
    remaining: Vec<usize>,
    grid: Vec<Vec<u32>>,
    depth: usize,
    state: State,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

impl SsytIter {
    fn new(shape: &Diagram, content: &ContentVector) -> Result<Self, EnumError> {
        if shape.size() != content.total() {
            return Err(EnumError::SizeMismatch {
                cells: shape.size(),
                content: content.total(),
            });
        }
        let lengths = shape.column_lengths().to_vec();
        let cells = lengths
            .iter()
            .enumerate()
            .flat_map(|(c, &len)| (0..len).map(move |r| (c, r)))
            .collect();
        Ok(SsytIter {
            grid: vec![Vec::new(); lengths.len()],
            lengths,
            cells,
            remaining: content.multiplicities().to_vec(),
            depth: 0,
            state: State::Fresh,
        })
    }

    fn max_value(&self) -> u32 {
        self.remaining.len() as u32
    }

    fn lower_bound(&self, pos: usize) -> u32 {
        let (c, r) = self.cells[pos];
        let above = if r > 0 { self.grid[c][r - 1] + 1 } else { 1 };
        let left = if c > 0 { self.grid[c - 1][r] } else { 1 };
        above.max(left)
    }

    /// Whether placing `v` at `pos` (already removed from `remaining`) can
    /// still be completed.
    fn feasible(&self, pos: usize, v: u32) -> bool {
        let (c, r) = self.cells[pos];
        let below = self.lengths[c] - 1 - r;
        let larger = self.remaining[v as usize..].iter().filter(|&&x| x > 0).count();
        if larger < below {
            return false;
        }
        let later_columns = self.lengths.len() - 1 - c;
        self.remaining.iter().enumerate().all(|(i, &left)| {
            let here = usize::from(below > 0 && i as u32 + 1 > v);
            left <= later_columns + here
        })
    }

    fn find(&mut self, pos: usize, start: u32) -> Option<u32> {
        let from = start.max(self.lower_bound(pos));
        for v in from..=self.max_value() {
            let slot = v as usize - 1;
            if self.remaining[slot] == 0 {
                continue;
            }
            self.remaining[slot] -= 1;
            let ok = self.feasible(pos, v);
            self.remaining[slot] += 1;
            if ok {
                return Some(v);
            }
        }
        None
    }

    fn place(&mut self, v: u32) {
        let (c, _) = self.cells[self.depth];
        self.remaining[v as usize - 1] -= 1;
        self.grid[c].push(v);
        self.depth += 1;
    }

    fn unplace(&mut self) -> u32 {
        self.depth -= 1;
        let (c, _) = self.cells[self.depth];
        let v = self.grid[c].pop().expect("cell was filled");
        self.remaining[v as usize - 1] += 1;
        v
    }

    /// Moves to the next complete filling without materializing it.
    pub fn advance(&mut self) -> bool {
        let total = self.cells.len();
        let mut start = match self.state {
            State::Done => return false,
            State::Fresh if total == 0 => {
                self.state = State::Done;
                return true;
            }
            State::Fresh => {
                self.state = State::Running;
                1
            }
            State::Running => self.unplace() + 1,
        };
        loop {
            match self.find(self.depth, start) {
                Some(v) => {
                    self.place(v);
                    if self.depth == total {
                        return true;
                    }
                    start = 1;
                }
                None if self.depth == 0 => {
                    self.state = State::Done;
                    return false;
                }
                None => start = self.unplace() + 1,
            }
        }
    }

    fn current(&self) -> Tableau {
        Tableau::from_columns(self.grid.clone()).expect("filled grid has the requested shape")
    }

    pub fn tally(mut self) -> BigCount {
        let mut tally = Tally::new();
        while self.advance() {
            tally.incr();
        }
        tally.total()
    }
}

impl Iterator for SsytIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        self.advance().then(|| self.current())
    }
}

pub fn enumerate_ssyt(shape: &Diagram, content: &ContentVector) -> Result<SsytIter, EnumError> {
    SsytIter::new(shape, content)
}

pub fn enumerate_syt(shape: &Diagram) -> SsytIter {
    SsytIter::new(shape, &ContentVector::ones(shape.size())).expect("sizes agree")
}

/// Number of semistandard tableaux of `shape` with the given content.
pub fn kostka(shape: &Diagram, content: &ContentVector) -> Result<BigCount, EnumError> {
    Ok(SsytIter::new(shape, content)?.tally())
}

/// All partitions of `n`, as diagrams, in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Diagram> {
    fn go(left: usize, max: usize, parts: &mut Vec<usize>, out: &mut Vec<Diagram>) {
        if left == 0 {
            out.push(Diagram::new(parts.clone()).expect("parts are non-increasing"));
            return;
        }
        for p in (1..=max.min(left)).rev() {
            parts.push(p);
            go(left - p, p, parts, out);
            parts.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}
