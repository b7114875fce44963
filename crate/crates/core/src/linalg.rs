//! Exact elimination routines over the crate's fields.

use std::cmp::Ordering;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{Field, Matrix};
use crate::scalar::ExactScalar;

/// Reduced row echelon form; returns the pivot column of each nonzero row.
pub fn rref<T: Field>(m: &mut Matrix<T>) -> Vec<usize> {
    let (rows, cols) = m.shape();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                let tmp = m.get(p, j).clone();
                m.set(p, j, m.get(r, j).clone());
                m.set(r, j, tmp);
            }
        }
        let inv = m.get(r, c).inv_ref().expect("nonzero pivot");
        for j in c..cols {
            let v = m.get(r, j).mul_ref(&inv);
            m.set(r, j, v);
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = m.get(i, c).clone();
            if f.is_zero() {
                continue;
            }
            for j in c..cols {
                let pj = m.get(r, j);
                if pj.is_zero() {
                    continue;
                }
                let v = m.get(i, j).sub_ref(&f.mul_ref(pj));
                m.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<T: Field>(m: &Matrix<T>) -> usize {
    rref(&mut m.clone()).len()
}

/// Basis of `{v : M v = 0}`, as column vectors.
pub fn nullspace<T: Field>(m: &Matrix<T>) -> Vec<Vec<T>> {
    let mut r = m.clone();
    let pivots = rref(&mut r);
    let cols = m.cols();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![T::zero(); cols];
            v[f] = T::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = r.get(row, f).neg_ref();
            }
            v
        })
        .collect()
}

pub fn inverse<T: Field>(m: &Matrix<T>) -> Result<Matrix<T>> {
    let (n, c) = m.shape();
    if n != c {
        return Err(Error::NotSquare { rows: n, cols: c });
    }
    let mut aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m.get(i, j).clone()
        } else if j - n == i {
            T::one()
        } else {
            T::zero()
        }
    });
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return Err(Error::Singular);
    }
    Ok(aug.block(0, n, n, n))
}

/// Fraction-free Bareiss determinant.
pub fn det_bareiss<T: Field>(m: &Matrix<T>) -> Result<T> {
    let (n, c) = m.shape();
    if n != c {
        return Err(Error::NotSquare { rows: n, cols: c });
    }
    if n == 0 {
        return Ok(T::one());
    }
    let mut a = m.clone();
    let mut sign_flip = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a.get(i, k).is_zero()) else {
                return Ok(T::zero());
            };
            for j in 0..n {
                let tmp = a.get(p, j).clone();
                a.set(p, j, a.get(k, j).clone());
                a.set(k, j, tmp);
            }
            sign_flip = !sign_flip;
        }
        let inv_prev = prev.inv_ref().expect("nonzero Bareiss pivot");
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a
                    .get(i, j)
                    .mul_ref(a.get(k, k))
                    .sub_ref(&a.get(i, k).mul_ref(a.get(k, j)))
                    .mul_ref(&inv_prev);
                a.set(i, j, v);
            }
            a.set(i, k, T::zero());
        }
        prev = a.get(k, k).clone();
    }
    let d = a.get(n - 1, n - 1).clone();
    Ok(if sign_flip { d.neg_ref() } else { d })
}

/// Float determinant by partial-pivot LU.
pub fn det_float(m: &Matrix<Complex64>) -> Result<Complex64> {
    let (n, c) = m.shape();
    if n != c {
        return Err(Error::NotSquare { rows: n, cols: c });
    }
    let mut a = m.clone();
    let mut det = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let p = (k..n)
            .max_by(|&x, &y| {
                a.get(x, k)
                    .norm()
                    .partial_cmp(&a.get(y, k).norm())
                    .unwrap_or(Ordering::Equal)
            })
            .unwrap_or(k);
        if a.get(p, k).norm() == 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        if p != k {
            for j in 0..n {
                let tmp = *a.get(p, j);
                a.set(p, j, *a.get(k, j));
                a.set(k, j, tmp);
            }
            det = -det;
        }
        let piv = *a.get(k, k);
        det *= piv;
        for i in k + 1..n {
            let f = a.get(i, k) / piv;
            for j in k..n {
                let v = a.get(i, j) - f * a.get(k, j);
                a.set(i, j, v);
            }
        }
    }
    Ok(det)
}

/// Sylvester signature of a symmetric matrix: `(n_minus, n_plus, n_zero)`.
///
/// Exact congruence diagonalization; when no usable diagonal pivot remains,
/// a row/column pair is folded together to create one.
pub fn symmetric_signature(m: &Matrix<ExactScalar>) -> Result<(usize, usize, usize)> {
    let (n, c) = m.shape();
    if n != c {
        return Err(Error::NotSquare { rows: n, cols: c });
    }
    let mut a = m.clone();
    let (mut neg, mut pos) = (0, 0);
    for k in 0..n {
        let pivot = match (k..n).find(|&i| !a.get(i, i).is_zero()) {
            Some(i) => Some(i),
            None => {
                // all remaining diagonal entries vanish; use an off-diagonal one
                let hit = (k..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a.get(i, j).is_zero());
                hit.map(|(i, j)| {
                    add_congruent(&mut a, i, j);
                    i
                })
            }
        };
        let Some(p) = pivot else {
            return Ok((neg, pos, n - k));
        };
        if p != k {
            swap_congruent(&mut a, p, k);
        }
        let d = a.get(k, k).clone();
        match d.signum() {
            Ordering::Greater => pos += 1,
            Ordering::Less => neg += 1,
            Ordering::Equal => unreachable!("pivot is nonzero"),
        }
        let inv = d.recip().expect("nonzero pivot");
        for i in k + 1..n {
            let f = a.get(i, k) * &inv;
            if f.is_zero() {
                continue;
            }
            for j in k..n {
                let v = a.get(i, j) - &(&f * a.get(k, j));
                a.set(i, j, v);
            }
            for j in k..n {
                let v = a.get(j, i) - &(&f * a.get(j, k));
                a.set(j, i, v);
            }
        }
    }
    Ok((neg, pos, 0))
}

fn add_congruent(a: &mut Matrix<ExactScalar>, i: usize, j: usize) {
    let n = a.rows();
    for c in 0..n {
        let v = a.get(i, c) + a.get(j, c);
        a.set(i, c, v);
    }
    for r in 0..n {
        let v = a.get(r, i) + a.get(r, j);
        a.set(r, i, v);
    }
}

fn swap_congruent(a: &mut Matrix<ExactScalar>, i: usize, j: usize) {
    let n = a.rows();
    for c in 0..n {
        let tmp = a.get(i, c).clone();
        a.set(i, c, a.get(j, c).clone());
        a.set(j, c, tmp);
    }
    for r in 0..n {
        let tmp = a.get(r, i).clone();
        a.set(r, i, a.get(r, j).clone());
        a.set(r, j, tmp);
    }
}

/// Solves for coordinates in the span of a fixed family of real vectors.
///
/// A square invertible subsystem is selected once; each solve then checks
/// the reconstruction against the full vector, so targets outside the span
/// are reported rather than silently projected.
#[derive(Clone, Debug)]
pub struct CoordinateSolver {
    vectors: Vec<Vec<ExactScalar>>,
    pivot_rows: Vec<usize>,
    sub_inverse: Matrix<ExactScalar>,
}

impl CoordinateSolver {
    pub fn new(vectors: Vec<Vec<ExactScalar>>) -> Result<Self> {
        let count = vectors.len();
        let len = vectors.first().map_or(0, Vec::len);
        if vectors.iter().any(|v| v.len() != len) {
            return Err(Error::ShapeMismatch("vectors of unequal length".into()));
        }
        // rows of `t` are the vectors; pivot columns pick independent coordinates
        let mut t = Matrix::from_fn(count, len, |i, j| vectors[i][j].clone());
        let pivots = rref(&mut t);
        if pivots.len() < count {
            return Err(Error::LinearlyDependent {
                rank: pivots.len(),
                count,
            });
        }
        let sub = Matrix::from_fn(count, count, |r, k| vectors[k][pivots[r]].clone());
        let sub_inverse = inverse(&sub)?;
        Ok(Self {
            vectors,
            pivot_rows: pivots,
            sub_inverse,
        })
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// Coordinates of `target`, or `None` if it is outside the span.
    pub fn solve(&self, target: &[ExactScalar]) -> Option<Vec<ExactScalar>> {
        let n = self.dim();
        let rhs: Vec<&ExactScalar> = self.pivot_rows.iter().map(|&r| &target[r]).collect();
        let coords: Vec<ExactScalar> = (0..n)
            .map(|i| {
                let mut s = ExactScalar::zero();
                for (k, b) in rhs.iter().enumerate() {
                    let a = self.sub_inverse.get(i, k);
                    if !a.is_zero() && !b.is_zero() {
                        s += &(a * *b);
                    }
                }
                s
            })
            .collect();
        for (r, t) in target.iter().enumerate() {
            let mut s = ExactScalar::zero();
            for (k, c) in coords.iter().enumerate() {
                let v = &self.vectors[k][r];
                if !c.is_zero() && !v.is_zero() {
                    s += &(c * v);
                }
            }
            if &s != t {
                return None;
            }
        }
        Some(coords)
    }
}
