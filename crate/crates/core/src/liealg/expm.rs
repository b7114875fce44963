//! Matrix exponential by scaling and squaring with a truncated Taylor series.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{CMatrix, FloatMatrix};

/// Internal truncation target for the Taylor series.
pub const INTERNAL_TOL: f64 = 1e-12;

fn inf_norm(m: &FloatMatrix) -> f64 {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// `exp(M)` for a square float matrix.
///
/// `M` is scaled by `2^-s` until its norm is at most 1/2, the series is summed
/// until the next term falls below `tol · 1e-4` in norm, and the result is
/// squared `s` times.
pub fn expm(m: &FloatMatrix, tol: f64) -> Result<FloatMatrix> {
    let (r, c) = m.shape();
    if r != c {
        return Err(Error::NotSquare { rows: r, cols: c });
    }
    let norm = inf_norm(m);
    let s = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as u32
    } else {
        0
    };
    let scaled = m.scale_f64(0.5f64.powi(s as i32));
    let target = (tol.min(INTERNAL_TOL) * 1e-4).max(f64::EPSILON * 1e-3);
    let mut sum = FloatMatrix::identity(r);
    let mut term = FloatMatrix::identity(r);
    for k in 1..=60 {
        term = term.mul_ref(&scaled).map(|z| z / Complex64::new(k as f64, 0.0));
        sum = sum.add_ref(&term);
        if inf_norm(&term) < target {
            break;
        }
    }
    for _ in 0..s {
        sum = sum.mul_ref(&sum);
    }
    Ok(sum)
}

/// Float-mode exponential; exact inputs must be converted explicitly.
pub fn matrix_exp(m: &CMatrix, tol: f64) -> Result<CMatrix> {
    match m {
        CMatrix::Float(f) => expm(f, tol).map(CMatrix::Float),
        CMatrix::Exact(_) => Err(Error::ModeMismatch),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::ExactMatrix;
    use crate::quaternion::Quaternion;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    #[test]
    fn exp_of_zero_is_identity() {
        let z = FloatMatrix::zeros(3, 3);
        assert!(expm(&z, 1e-12).unwrap().approx_eq(&FloatMatrix::identity(3), 1e-15));
    }

    #[test]
    fn rotation_from_j() {
        let theta = PI / 3.0;
        let j = Quaternion::j().embed().to_float().scale_f64(theta);
        let got = expm(&j, 1e-12).unwrap();
        let (c, s) = (theta.cos(), theta.sin());
        let want = FloatMatrix::from_vec(
            2,
            2,
            vec![c, -s, s, c].into_iter().map(|x| Complex64::new(x, 0.0)).collect(),
        );
        assert!(got.approx_eq(&want, 1e-12));
    }

    #[test]
    fn exact_mode_is_rejected() {
        let e = CMatrix::Exact(ExactMatrix::identity(2));
        assert_eq!(matrix_exp(&e, 1e-9), Err(Error::ModeMismatch));
    }

    #[test]
    fn exp_inverse_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [2usize, 4, 8] {
            let m = FloatMatrix::from_fn(n, n, |_, _| {
                Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0))
            });
            let p = expm(&m, 1e-9).unwrap().mul_ref(&expm(&m.neg(), 1e-9).unwrap());
            assert!(p.approx_eq(&FloatMatrix::identity(n), 1e-8), "n = {n}");
        }
    }
}
