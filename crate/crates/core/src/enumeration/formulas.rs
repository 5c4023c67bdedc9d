use num_bigint::BigUint;
use num_traits::One;

use crate::tableau::Diagram;

use super::BigCount;

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, i| acc * i)
}

/// `s(k) = 1! 2! ... k!`, with `s(0) = 1`.
pub fn superfactorial(k: usize) -> BigCount {
    let mut running = BigUint::one();
    let mut product = BigUint::one();
    for i in 1..=k as u64 {
        running *= i;
        product *= &running;
    }
    BigCount(product)
}

/// Standard tableaux of the `n`-wide, `m`-tall rectangle:
/// `(mn)! s(m-1) s(n-1) / s(m+n-1)`.
pub fn rect_catalan(n: usize, m: usize) -> BigCount {
    assert!(n >= 1 && m >= 1, "rectangle sides must be positive");
    let numerator = factorial(m * n) * superfactorial(m - 1).0 * superfactorial(n - 1).0;
    BigCount(numerator / superfactorial(m + n - 1).0)
}

/// `(2n)! / (n! (n+1)!)`.
pub fn catalan(n: usize) -> BigCount {
    BigCount(factorial(2 * n) / (factorial(n) * factorial(n + 1)))
}

/// Standard tableaux of `shape` by the hook length formula.
pub fn count_syt_hook(shape: &Diagram) -> BigCount {
    let cols = shape.column_lengths();
    let rows = shape.row_lengths();
    let mut hooks = BigUint::one();
    for (c, &len) in cols.iter().enumerate() {
        for (r, &row) in rows.iter().enumerate().take(len) {
            let arm = row - c - 1;
            let leg = len - r - 1;
            hooks *= (arm + leg + 1) as u64;
        }
    }
    BigCount(factorial(shape.size()) / hooks)
}
