//! Linear independence of `{1, sinh x, cosh x, ..., sinh nx, cosh nx}`.
//!
//! Differentiating `c_0 + Σ s_i sinh(ix) + Σ t_i cosh(ix) = 0` an odd number
//! of times `2k-1` and setting `x = 0` leaves `Σ i^{2k-1} s_i = 0`; an even
//! number `2k` leaves `Σ i^{2k} t_i = 0`. For `k = 1..n` both systems have
//! nonsingular Vandermonde-type matrices, which forces every coefficient to
//! vanish.

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use thiserror::Error;

use super::{FunctionRepr, RangeError};

/// Pivots below this (after scaling each row to unit max-norm) count as zero.
pub const PIVOT_THRESHOLD: f64 = 1e-8;

/// Exact determinants of the `n×n` matrices with entries `i^{2k-1}` and
/// `i^{2k}` (row `k`, column `i`, both `1..=n`). For `n = 0` both are the
/// empty determinant 1.
pub fn vandermonde_independence(n: usize) -> (BigInt, BigInt) {
    let build = |offset: u32| -> Vec<Vec<BigInt>> {
        (1..=n as u32).map(|k| (1..=n).map(|i| BigInt::from(i).pow(2 * k - offset)).collect()).collect()
    };
    (bareiss_determinant(build(1)), bareiss_determinant(build(0)))
}

/// Fraction-free Gaussian elimination; every intermediate division is exact.
fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &m[n - 1][n - 1]
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RankError {
    #[error("need at least {needed} distinct samples, got {got}")]
    InsufficientSamples { needed: usize, got: usize },
    #[error(transparent)]
    Range(#[from] RangeError),
}

/// Evaluates the `2n+1` functions `1, sinh x, cosh x, ..., sinh nx, cosh nx`
/// at the samples and reports whether the sample matrix has full column rank:
/// each row is scaled to unit max-norm, then elimination with partial pivoting
/// must never meet a pivot below [`PIVOT_THRESHOLD`].
pub fn numeric_rank_independence(n: u64, samples: &[f64]) -> Result<bool, RankError> {
    let cols = 2 * n as usize + 1;
    let mut distinct: Vec<f64> = samples.to_vec();
    distinct.sort_by(f64::total_cmp);
    distinct.dedup();
    if distinct.len() < cols {
        return Err(RankError::InsufficientSamples { needed: cols, got: distinct.len() });
    }

    let mut functions = vec![FunctionRepr::one()];
    for k in 1..=n {
        functions.push(FunctionRepr::sinh(k));
        functions.push(FunctionRepr::cosh(k));
    }
    let mut rows = Vec::with_capacity(samples.len());
    for &x in samples {
        let row = functions.iter().map(|f| f.eval(x)).collect::<Result<Vec<f64>, _>>()?;
        let norm = row.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        rows.push(row.into_iter().map(|v| v / norm).collect::<Vec<f64>>());
    }

    for col in 0..cols {
        let pivot_row =
            (col..rows.len()).max_by(|&i, &j| rows[i][col].abs().total_cmp(&rows[j][col].abs())).expect("rows >= cols");
        if rows[pivot_row][col].abs() < PIVOT_THRESHOLD {
            return Ok(false);
        }
        rows.swap(col, pivot_row);
        let pivot = rows[col].clone();
        for row in rows.iter_mut().skip(col + 1) {
            let factor = row[col] / pivot[col];
            for (v, p) in row.iter_mut().zip(&pivot).skip(col) {
                *v -= factor * p;
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Determinant by permutation expansion, independent of elimination.
    fn leibniz_determinant(m: &[Vec<BigInt>]) -> BigInt {
        fn permutations(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in permutations(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = m.len();
        permutations(n)
            .into_iter()
            .map(|p| {
                let inversions =
                    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
                let prod = (0..n).fold(BigInt::one(), |acc, r| acc * &m[r][p[r]]);
                if inversions % 2 == 0 {
                    prod
                } else {
                    -prod
                }
            })
            .sum()
    }

    /// Pulling `i` (resp. `i^2`) out of column `i` leaves the Vandermonde
    /// matrix in `i^2`, so the determinants are `n!·Π(j²-i²)` and
    /// `(n!)²·Π(j²-i²)` over `i < j`.
    fn closed_form(n: usize) -> (BigInt, BigInt) {
        let fact: BigInt = (1..=n).map(BigInt::from).product();
        let vander: BigInt = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| BigInt::from(j * j - i * i))).product();
        (&fact * &vander, &fact * &fact * &vander)
    }

    #[test]
    fn small_cases() {
        assert_eq!(vandermonde_independence(1), (BigInt::from(1), BigInt::from(1)));
        assert_eq!(vandermonde_independence(2), (BigInt::from(6), BigInt::from(12)));
        assert_eq!(vandermonde_independence(0), (BigInt::from(1), BigInt::from(1)));
    }

    #[test]
    fn matches_permutation_expansion() {
        for n in 1..=5usize {
            let build = |offset: u32| -> Vec<Vec<BigInt>> {
                (1..=n as u32).map(|k| (1..=n).map(|i| BigInt::from(i).pow(2 * k - offset)).collect()).collect()
            };
            let (odd, even) = vandermonde_independence(n);
            assert_eq!(odd, leibniz_determinant(&build(1)), "n = {n}");
            assert_eq!(even, leibniz_determinant(&build(0)), "n = {n}");
        }
    }

    #[test]
    fn matches_closed_form_up_to_eight() {
        for n in 1..=8 {
            let got = vandermonde_independence(n);
            assert_eq!(got, closed_form(n), "n = {n}");
            assert!(!got.0.is_zero() && !got.1.is_zero());
        }
    }

    #[test]
    fn bareiss_handles_zero_pivot_and_singular() {
        let m = |rows: &[[i64; 2]]| rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
        assert_eq!(bareiss_determinant(m(&[[0, 1], [1, 0]])), BigInt::from(-1));
        assert_eq!(bareiss_determinant(m(&[[1, 2], [2, 4]])), BigInt::zero());
    }

    #[test]
    fn numeric_rank_examples() {
        assert_eq!(numeric_rank_independence(1, &[-1.0, 0.0, 1.0]), Ok(true));
        assert_eq!(numeric_rank_independence(0, &[0.0]), Ok(true));
        assert_eq!(numeric_rank_independence(2, &[-1.0, -0.5, 0.0, 0.5, 1.0]), Ok(true));
    }

    #[test]
    fn numeric_rank_detects_dependence() {
        // two nearly coincident samples give nearly equal rows
        assert_eq!(numeric_rank_independence(1, &[-0.5, 0.5, 0.5 + 1e-13]), Ok(false));
    }

    #[test]
    fn numeric_rank_errors() {
        assert_eq!(
            numeric_rank_independence(2, &[0.0, 0.1, 0.1, 0.2]),
            Err(RankError::InsufficientSamples { needed: 5, got: 3 })
        );
        assert!(matches!(numeric_rank_independence(1, &[-40.0, 0.0, 1.0]), Err(RankError::Range(_))));
    }
}
