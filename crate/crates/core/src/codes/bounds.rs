/// Number of errors correctable by one-step majority-logic decoding with `r`
/// check sets meeting pairwise in `λ` positions: `⌊(r + λ - 1) / 2λ⌋`.
pub fn rudolph_bound(r: u64, lambda: u64) -> u64 {
    assert!(r >= 1 && lambda >= 1, "r and λ must be positive");
    (r + lambda - 1) / (2 * lambda)
}

/// Restricted Johnson bound on the number of weight-`w` words of length `n`
/// at pairwise distance at least `d`: `⌊dn / (2w² - 2wn + dn)⌋`. Absent when
/// the denominator is not positive (the bound does not apply).
pub fn johnson_restricted(n: u64, d: u64, w: u64) -> Option<u64> {
    let (n, d, w) = (n as i128, d as i128, w as i128);
    let den = 2 * w * w - 2 * w * n + d * n;
    (den > 0).then(|| (d * n / den) as u64)
}
