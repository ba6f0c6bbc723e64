//! Closed-form diagram counts.

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Number of annular diagrams [m]→[n] with exactly k through strings, or all of them when `k` is `None`.
pub fn count_formula(m: usize, n: usize, k: Option<usize>) -> u128 {
    match k {
        None => count_total(m, n),
        Some(0) => 1,
        Some(k) if k > m.min(n) => 0,
        Some(k) => m as u128 * binomial(n, k) * binomial(m - 1, k - 1),
    }
}

pub fn count_total(m: usize, n: usize) -> u128 {
    1 + (1..=m.min(n)).map(|k| count_formula(m, n, Some(k))).sum::<u128>()
}

pub fn rect_count(m: usize, n: usize, k: usize) -> u128 {
    binomial(m, k) * binomial(n, k)
}

pub fn rect_count_total(m: usize, n: usize) -> u128 {
    (0..=m.min(n)).map(|k| rect_count(m, n, k)).sum()
}
