use tableau_lab::bijection::BijectionParams;
use tableau_lab::enumeration::{
    catalan, count_colored_noncrossing, count_perm_class, count_syt_hook, enumerate_syt, kostka,
    partitions, rect_catalan, PermClass, DEFAULT_MAX_M,
};
use tableau_lab::tableau::expand_skew_weight;
use tableau_lab::{ContentVector, Diagram, RectShape};

fn rect(w: usize, h: usize) -> Diagram {
    Diagram::rectangle(RectShape::new(w, h).unwrap())
}

fn skew_kostka(w: usize, n: usize, k: i64) -> tableau_lab::BigCount {
    kostka(&rect(w, n), &expand_skew_weight(n, k, w - 1).unwrap()).unwrap()
}

#[test]
fn two_row_rectangles_give_catalan() {
    for n in 1..=7 {
        let k = kostka(&rect(2, n), &ContentVector::ones(2 * n)).unwrap();
        assert_eq!(k, catalan(n));
        assert_eq!(count_syt_hook(&rect(2, n)), catalan(n));
    }
    let firsts: Vec<u64> = (1..=7).map(|n| catalan(n).to_string().parse().unwrap()).collect();
    assert_eq!(firsts, vec![1, 2, 5, 14, 42, 132, 429]);
}

#[test]
fn lis_at_most_w() {
    for w in 2..=4 {
        for n in 1..=6 {
            let lhs = skew_kostka(w, n, 0);
            let rhs = count_perm_class(PermClass::LisAtMost, n, w, 0, DEFAULT_MAX_M).unwrap();
            assert_eq!(lhs, rhs, "w={w} n={n}");
        }
    }
    assert_eq!(skew_kostka(2, 3, 0), 5);
    assert_eq!(skew_kostka(3, 4, 0), 23);
}

#[test]
fn skewed_count_with_blocks() {
    // Includes tuples with w >= n, outside the stated range, which hold as well.
    for w in 2..=3 {
        for k in [-2i64, -1, 1, 2] {
            for n in 1..=8 {
                let Ok(p) = BijectionParams::new(w, n, k) else { continue };
                if p.m() > 8 {
                    continue;
                }
                let lhs = &skew_kostka(w, n, k) * &rect_catalan(p.block_rows(), w);
                let rhs = count_perm_class(PermClass::BlockHead, p.m(), w, p.block_rows(), DEFAULT_MAX_M).unwrap();
                assert_eq!(lhs, rhs, "w={w} n={n} k={k}");
            }
        }
    }
    assert_eq!(skew_kostka(2, 3, 1), 5);
    assert_eq!(count_perm_class(PermClass::LisPrefix, 4, 2, 0, DEFAULT_MAX_M).unwrap(), 5);
}

#[test]
fn block_head_and_disjoint_lis_agree() {
    for m in 1..=7 {
        for w in 2..=3 {
            for k in 1..=2 {
                if k * w > m {
                    continue;
                }
                for sigma in tableau_lab::Permutation::all(m) {
                    assert_eq!(
                        PermClass::BlockHead.contains(&sigma, w, k),
                        PermClass::DisjointLis.contains(&sigma, w, k),
                        "{sigma} w={w} k={k}"
                    );
                }
            }
        }
    }
}

#[test]
fn lis_prefix_reindexed() {
    for w in 2..=3 {
        for n in 1..=6 {
            let m = n + w - 1;
            if m > DEFAULT_MAX_M {
                continue;
            }
            let rhs = count_perm_class(PermClass::LisPrefix, m, w, 0, DEFAULT_MAX_M).unwrap();
            assert_eq!(skew_kostka(w, n, 1), rhs, "w={w} n={n}");
        }
    }
    assert_eq!(skew_kostka(2, 2, 1), 2);
    assert_eq!(skew_kostka(3, 2, 1), 3);
}

#[test]
fn rectangular_symmetry() {
    for w in 2..=4 {
        for k in [-2i64, -1, 1, 2] {
            for n in 1..=7 {
                let n2 = n as i64 + k * (w as i64 - 2);
                if !(1..=7).contains(&n2) || expand_skew_weight(n, k, w - 1).is_err() {
                    continue;
                }
                let n2 = n2 as usize;
                assert_eq!(skew_kostka(w, n, k), skew_kostka(w, n2, -k), "w={w} n={n} k={k}");
            }
        }
    }
    assert_eq!(skew_kostka(3, 2, 1), 3);
    assert_eq!(skew_kostka(3, 3, -1), 3);
}

#[test]
fn colored_noncrossing_anchors() {
    let lp = |m, w| count_perm_class(PermClass::LisPrefix, m, w, 0, DEFAULT_MAX_M).unwrap();
    assert_eq!(lp(3, 2), 2);
    assert_eq!(lp(4, 2), count_colored_noncrossing(3, 1));
    assert_eq!(lp(4, 2), 5);
    assert_eq!(lp(3, 3), 1);
    assert_eq!(lp(4, 3), count_colored_noncrossing(2, 2));
    assert_eq!(lp(4, 3), 3);
}

#[test]
fn hook_formula_against_enumeration() {
    for size in 0..=8 {
        for shape in partitions(size) {
            assert_eq!(count_syt_hook(&shape), enumerate_syt(&shape).count() as u64, "{shape:?}");
        }
    }
    for n in 1..=12 {
        for m in 1..=12 / n {
            assert_eq!(rect_catalan(n, m), enumerate_syt(&rect(n, m)).count() as u64);
        }
    }
}
