use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use tableau_lab::bijection::BijectionParams;
use tableau_lab::enumeration::{
    catalan, count_colored_noncrossing, count_perm_class, count_syt_hook, enumerate_syt, kostka, partitions,
    rect_catalan, PermClass, DEFAULT_MAX_M,
};
use tableau_lab::tableau::expand_skew_weight;
use tableau_lab::{BigCount, ContentVector, Diagram, Permutation, RectShape};

use crate::report::{Kind, VerifyReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    /// Two-row rectangles against Catalan numbers and the hook formula.
    Eq1,
    /// Rectangles with content `mu^n_{w-1}` against permutations with LIS at most `w`.
    Thm21,
    /// Skewed content times `A_{|k|,w}` against the block-head class.
    Thm22,
    /// `k = 1` against permutations of `S_{n+w-1}` whose LIS is `1..=w`.
    Cor23,
    /// `K(w, n, k) = K(w, n + k(w-2), -k)`.
    Cor25,
    /// LIS-prefix counts against colored noncrossing partitions.
    Conj26,
    /// Hook length formula against SYT enumeration.
    Hook,
    /// `A_{n,m}` against SYT enumeration of the `n x m` rectangle.
    RectCatalan,
}

impl Claim {
    pub const ALL: [Claim; 8] = [
        Claim::Eq1,
        Claim::Thm21,
        Claim::Thm22,
        Claim::Cor23,
        Claim::Cor25,
        Claim::Conj26,
        Claim::Hook,
        Claim::RectCatalan,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Claim::Eq1 => "eq1",
            Claim::Thm21 => "thm2.1",
            Claim::Thm22 => "thm2.2",
            Claim::Cor23 => "cor2.3",
            Claim::Cor25 => "cor2.5",
            Claim::Conj26 => "conj2.6",
            Claim::Hook => "hook",
            Claim::RectCatalan => "rect-catalan",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Claim::ALL.into_iter().find(|c| c.id() == s).ok_or_else(|| {
            let ids: Vec<&str> = Claim::ALL.iter().map(Claim::id).collect();
            format!("unknown claim {s:?}; expected one of {}", ids.join(", "))
        })
    }
}

/// Grid bounds; `None` picks the claim's default.
#[derive(Debug, Clone)]
pub struct Grid {
    pub max_n: Option<usize>,
    pub max_m: Option<usize>,
    pub widths: Option<Vec<usize>>,
    pub max_k: Option<usize>,
    /// Cell bound for `hook` (partition size) and `rect-catalan` (`n*m`).
    pub max_cells: Option<usize>,
    /// Largest `m` for the pointwise block-head / disjoint-lis comparison.
    pub pointwise_max_m: Option<usize>,
    /// Largest `m` brute-forced over `S_m`.
    pub cap: usize,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            max_n: None,
            max_m: None,
            widths: None,
            max_k: None,
            max_cells: None,
            pointwise_max_m: None,
            cap: DEFAULT_MAX_M,
        }
    }
}

impl Grid {
    fn widths(&self, default: &[usize]) -> Vec<usize> {
        self.widths.clone().unwrap_or_else(|| default.to_vec())
    }

    fn ks(&self) -> Vec<i64> {
        let max_k = self.max_k.unwrap_or(2) as i64;
        (-max_k..=max_k).filter(|&k| k != 0).collect()
    }
}

pub const COR23_NOTE: &str =
    "reindexed reading: permutations are counted in S_{n+w-1}, the k=1 case of the skewed bijection, not in S_n";
pub const NC2_NOTE: &str =
    "candidate NC_2 model: arcs join consecutive elements of a block, each arc gets one of r colors, same-colored arcs may not cross";
pub const POINTWISE_NOTE: &str =
    "lhs = |block-head union disjoint-lis|, rhs = |block-head intersect disjoint-lis| over S_m; equal iff the classes coincide";

fn rect(w: usize, h: usize) -> Diagram {
    Diagram::rectangle(RectShape::new(w, h).expect("positive dimensions"))
}

fn skew_kostka(w: usize, n: usize, k: i64) -> BigCount {
    let content = expand_skew_weight(n, k, w - 1).expect("caller checked the range");
    kostka(&rect(w, n), &content).expect("content fills the rectangle")
}

fn over_cap(m: usize, cap: usize) -> Option<String> {
    (m > cap).then(|| format!("brute force over S_{m} exceeds the cap m <= {cap}"))
}

/// Runs `f` and stamps the elapsed time on its report.
fn timed(f: impl FnOnce() -> VerifyReport) -> VerifyReport {
    let start = Instant::now();
    let mut r = f();
    r.elapsed = start.elapsed();
    r
}

/// One report per parameter tuple, in canonical order.
pub fn run_verify(claim: Claim, grid: &Grid) -> Vec<VerifyReport> {
    let id = claim.id();
    let mut out = Vec::new();
    match claim {
        Claim::Eq1 => {
            for n in 1..=grid.max_n.unwrap_or(7) {
                let lhs = || kostka(&rect(2, n), &ContentVector::ones(2 * n)).expect("sizes agree");
                out.push(timed(|| {
                    VerifyReport::compared(id, format!("n={n};form=catalan"), Kind::Theorem, lhs(), catalan(n))
                }));
                out.push(timed(|| {
                    VerifyReport::compared(id, format!("n={n};form=hook"), Kind::Theorem, lhs(), count_syt_hook(&rect(2, n)))
                }));
            }
        }
        Claim::Thm21 => {
            for w in grid.widths(&[2, 3, 4]) {
                for n in 1..=grid.max_n.unwrap_or(6) {
                    let params = format!("w={w};n={n}");
                    out.push(timed(|| match over_cap(n, grid.cap) {
                        Some(why) => VerifyReport::skipped(id, params, Kind::Theorem, why),
                        None => {
                            let rhs = count_perm_class(PermClass::LisAtMost, n, w, 0, grid.cap).expect("within cap");
                            VerifyReport::compared(id, params, Kind::Theorem, skew_kostka(w, n, 0), rhs)
                        }
                    }));
                }
            }
        }
        Claim::Thm22 => {
            let max_m = grid.max_m.unwrap_or(8);
            for w in grid.widths(&[2, 3]) {
                for k in grid.ks() {
                    for n in 1..=max_m {
                        let Ok(p) = BijectionParams::new(w, n, k) else { continue };
                        if p.m() > max_m || !p.in_theorem_range() {
                            continue;
                        }
                        let params = format!("w={w};n={n};k={k};m={}", p.m());
                        out.push(timed(|| match over_cap(p.m(), grid.cap) {
                            Some(why) => VerifyReport::skipped(id, params, Kind::Theorem, why),
                            None => {
                                let lhs = &skew_kostka(w, n, k) * &rect_catalan(p.block_rows(), w);
                                let rhs = count_perm_class(PermClass::BlockHead, p.m(), w, p.block_rows(), grid.cap)
                                    .expect("within cap");
                                VerifyReport::compared(id, params, Kind::Theorem, lhs, rhs)
                            }
                        }));
                    }
                }
            }
            let max_k = grid.max_k.unwrap_or(2);
            for m in 1..=grid.pointwise_max_m.unwrap_or(7) {
                for w in grid.widths(&[2, 3]) {
                    for k in (1..=max_k).filter(|k| k * w <= m) {
                        let params = format!("m={m};w={w};k={k};check=pointwise");
                        out.push(timed(|| match over_cap(m, grid.cap) {
                            Some(why) => VerifyReport::skipped(id, params, Kind::Finding, why),
                            None => {
                                let (union, both) = pointwise(m, w, k);
                                VerifyReport::compared(id, params, Kind::Finding, union, both).with_note(POINTWISE_NOTE)
                            }
                        }));
                    }
                }
            }
        }
        Claim::Cor23 => {
            for w in grid.widths(&[2, 3]) {
                let max_n = match grid.max_m {
                    Some(max_m) => (max_m + 1).saturating_sub(w),
                    None => grid.max_n.unwrap_or(6),
                };
                for n in 1..=max_n {
                    let m = n + w - 1;
                    let params = format!("w={w};n={n};m={m}");
                    out.push(timed(|| {
                        match over_cap(m, grid.cap) {
                            Some(why) => VerifyReport::skipped(id, params, Kind::Theorem, why),
                            None => {
                                let rhs = count_perm_class(PermClass::LisPrefix, m, w, 0, grid.cap).expect("within cap");
                                VerifyReport::compared(id, params, Kind::Theorem, skew_kostka(w, n, 1), rhs)
                            }
                        }
                        .with_note(COR23_NOTE)
                    }));
                }
            }
        }
        Claim::Cor25 => {
            let max_n = grid.max_n.unwrap_or(8);
            for w in grid.widths(&[2, 3, 4]) {
                for k in grid.ks() {
                    for n in 1..=max_n {
                        let n2 = n as i64 + k * (w as i64 - 2);
                        if n2 < 1 || n2 > max_n as i64 {
                            continue;
                        }
                        let n2 = n2 as usize;
                        if expand_skew_weight(n, k, w - 1).is_err() || expand_skew_weight(n2, -k, w - 1).is_err() {
                            continue;
                        }
                        let params = format!("w={w};n={n};k={k};n2={n2}");
                        out.push(timed(|| {
                            VerifyReport::compared(id, params, Kind::Theorem, skew_kostka(w, n, k), skew_kostka(w, n2, -k))
                        }));
                    }
                }
            }
        }
        Claim::Conj26 => {
            for w in grid.widths(&[2, 3]) {
                for m in w..=grid.max_m.unwrap_or(8) {
                    let params = format!("w={w};m={m}");
                    out.push(timed(|| {
                        match over_cap(m, grid.cap) {
                            Some(why) => VerifyReport::skipped(id, params, Kind::Conjecture, why),
                            None => {
                                let lhs = count_perm_class(PermClass::LisPrefix, m, w, 0, grid.cap).expect("within cap");
                                let rhs = count_colored_noncrossing(m - w + 1, w as u32 - 1);
                                VerifyReport::compared(id, params, Kind::Conjecture, lhs, rhs)
                            }
                        }
                        .with_note(NC2_NOTE)
                    }));
                }
            }
        }
        Claim::Hook => {
            for size in 1..=grid.max_cells.unwrap_or(8) {
                for shape in partitions(size) {
                    let rows: Vec<String> = shape.row_lengths().iter().map(ToString::to_string).collect();
                    let params = format!("lambda={}", rows.join("+"));
                    out.push(timed(|| {
                        let count = enumerate_syt(&shape).tally();
                        VerifyReport::compared(id, params, Kind::Theorem, count_syt_hook(&shape), count)
                    }));
                }
            }
        }
        Claim::RectCatalan => {
            let max_cells = grid.max_cells.unwrap_or(12);
            for n in 1..=max_cells {
                for m in 1..=max_cells / n {
                    out.push(timed(|| {
                        let count = enumerate_syt(&rect(n, m)).tally();
                        VerifyReport::compared(id, format!("n={n};m={m}"), Kind::Theorem, rect_catalan(n, m), count)
                    }));
                }
            }
        }
    }
    out
}

/// Sizes of the union and intersection of the block-head and disjoint-lis classes.
fn pointwise(m: usize, w: usize, k: usize) -> (BigCount, BigCount) {
    let (mut union, mut both) = (0u64, 0u64);
    for sigma in Permutation::all(m) {
        let a = PermClass::BlockHead.contains(&sigma, w, k);
        let b = PermClass::DisjointLis.contains(&sigma, w, k);
        union += u64::from(a || b);
        both += u64::from(a && b);
    }
    (union.into(), both.into())
}

/// 1 if a theorem row failed, else 3 if a conjecture or finding row failed, else 0.
pub fn exit_code(reports: &[VerifyReport]) -> i32 {
    if reports.iter().any(|r| r.is_mismatch() && r.kind == Kind::Theorem) {
        crate::exit::MISMATCH
    } else if reports.iter().any(VerifyReport::is_mismatch) {
        crate::exit::FINDING
    } else {
        crate::exit::OK
    }
}
