use super::LinearCode;
use crate::algebra::MatGFp;
use crate::error::{Error, Result};

const MAX_M: usize = 20;

/// Evaluation vectors of all monomials of degree at most `r` in `m` variables,
/// ordered by degree and then lexicographically by variable set. Coordinate
/// `x` assigns bit `i` of `x` to variable `i`.
fn monomial_rows(r: usize, m: usize) -> Vec<Vec<u8>> {
    let n = 1usize << m;
    let mut rows = Vec::new();
    for deg in 0..=r {
        let mut vars: Vec<usize> = (0..deg).collect();
        loop {
            let mask: usize = vars.iter().map(|&i| 1 << i).sum();
            rows.push((0..n).map(|x| (x & mask == mask) as u8).collect());
            let mut i = deg;
            while i > 0 && vars[i - 1] == m - deg + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            vars[i - 1] += 1;
            for j in i..deg {
                vars[j] = vars[j - 1] + 1;
            }
        }
    }
    rows
}

fn check_order(r: usize, m: usize) -> Result<()> {
    if r > m {
        return Err(Error::BadOrder { r, m });
    }
    if m > MAX_M {
        return Err(Error::TooLarge {
            size: 1u128 << m,
            cap: 1 << MAX_M,
        });
    }
    Ok(())
}

/// The binary Reed–Muller code `RM(r, m)` of length `2^m`.
pub fn rm_code(r: usize, m: usize) -> Result<LinearCode> {
    check_order(r, m)?;
    LinearCode::from_vectors(2, 1 << m, &monomial_rows(r, m))
}

/// `RM(r, m)` with coordinate `coord` deleted.
pub fn punctured_rm_code(r: usize, m: usize, coord: usize) -> Result<LinearCode> {
    check_order(r, m)?;
    let n = 1usize << m;
    if coord >= n {
        return Err(Error::BadIndex {
            index: coord,
            limit: n,
        });
    }
    let keep: Vec<usize> = (0..n).filter(|&i| i != coord).collect();
    let full = MatGFp::from_rows(2, n, &monomial_rows(r, m))?;
    Ok(LinearCode::from_rows(&full.select_columns(&keep)))
}

/// Flat Walsh spectrum test: every Walsh coefficient of a bent function on
/// `2m` variables is `±2^m`.
pub fn is_bent(tt: &[u8]) -> bool {
    let n = tt.len();
    if n < 4 || !n.is_power_of_two() || !n.trailing_zeros().is_multiple_of(2) {
        return false;
    }
    let mut w: Vec<i64> = tt
        .iter()
        .map(|&b| if b & 1 == 1 { -1 } else { 1 })
        .collect();
    let mut h = 1;
    while h < n {
        for i in (0..n).step_by(2 * h) {
            for j in i..i + h {
                let (a, b) = (w[j], w[j + h]);
                w[j] = a + b;
                w[j + h] = a - b;
            }
        }
        h *= 2;
    }
    let target = 1i64 << (n.trailing_zeros() / 2);
    w.iter().all(|x| x.abs() == target)
}

/// Truth table of `x0 x1 + x2 x3 + ... + x_{2m-2} x_{2m-1}`, with bit `i` of
/// the argument as variable `i`.
pub fn inner_product_bent(m: usize) -> Vec<u8> {
    (0..1usize << (2 * m))
        .map(|x| (0..m).fold(0, |acc, i| acc ^ (x >> (2 * i) & x >> (2 * i + 1) & 1)) as u8)
        .collect()
}

/// Span of a bent function and `RM(1, 2m)`.
pub fn sdp_code(bent_tt: &[u8]) -> Result<LinearCode> {
    if !is_bent(bent_tt) {
        return Err(Error::NotBent);
    }
    let m2 = bent_tt.len().trailing_zeros() as usize;
    let mut rows = vec![bent_tt.iter().map(|&b| b & 1).collect::<Vec<u8>>()];
    rows.extend(monomial_rows(1, m2));
    LinearCode::from_vectors(2, bent_tt.len(), &rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn x1x2_x3x4() -> Vec<u8> {
        (0..16u32)
            .map(|x| (((x & 1) * (x >> 1 & 1)) ^ ((x >> 2 & 1) * (x >> 3 & 1))) as u8)
            .collect()
    }

    #[test]
    fn inner_product_is_bent() {
        assert_eq!(inner_product_bent(2), x1x2_x3x4());
        for m in 1..=4 {
            assert!(is_bent(&inner_product_bent(m)));
        }
    }

    #[test]
    fn rm_parameters() {
        let c = rm_code(1, 3).unwrap();
        assert_eq!(
            (c.length(), c.dim(), c.min_weight().unwrap()),
            (8, 4, Some(4))
        );
        for m in 1..=6 {
            for r in 0..=m {
                let c = rm_code(r, m).unwrap();
                let k: usize = (0..=r)
                    .map(|i| crate::bits::binomial(m as u64, i as u64) as usize)
                    .sum();
                assert_eq!(c.dim(), k);
                if k <= 16 {
                    assert_eq!(c.min_weight().unwrap(), Some(1 << (m - r)));
                }
            }
        }
        assert!(matches!(rm_code(4, 3), Err(Error::BadOrder { r: 4, m: 3 })));
    }

    #[test]
    fn punctured() {
        let c = punctured_rm_code(1, 3, 0).unwrap();
        assert_eq!(
            (c.length(), c.dim(), c.min_weight().unwrap()),
            (7, 4, Some(3))
        );
        assert!(punctured_rm_code(1, 3, 8).is_err());
    }

    #[test]
    fn bent_detection() {
        assert!(is_bent(&x1x2_x3x4()));
        assert!(is_bent(&[0, 0, 0, 1]));
        assert!(!is_bent(&[0; 16]));
        assert!(!is_bent(&[0; 8]));
        assert!(matches!(sdp_code(&[0; 16]), Err(Error::NotBent)));
    }

    #[test]
    fn sdp_16() {
        let c = sdp_code(&x1x2_x3x4()).unwrap();
        assert_eq!((c.length(), c.dim()), (16, 6));
        let d = c.min_weight_design().unwrap();
        let p = d.verify_tdesign(2).unwrap();
        assert_eq!((p.v, p.k, p.lambda, p.b), (16, 6, 2, 16));
        assert_eq!(d.incidence_matrix(2).unwrap().rank(), 6);
    }
}
