//! Dense matrices over the crate's scalar types.
//!
//! `Matrix<T>` is generic over a small [`Ring`] trait so the same code serves
//! quaternionic matrices, exact complex matrices and float matrices. The
//! [`CMatrix`] enum carries an explicit exact/float mode tag; mixing modes is
//! an error rather than a silent coercion.

use std::fmt::Debug;

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::quaternion::Quaternion;
use crate::scalar::{ExactComplex, ExactScalar};

pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

/// Commutative fields, used by elimination routines.
pub trait Field: Ring {
    fn inv_ref(&self) -> Option<Self>;
}

macro_rules! ring_via_ops {
    ($t:ty, $zero:expr, $one:expr, $is_zero:expr) => {
        impl Ring for $t {
            fn zero() -> Self {
                $zero
            }
            fn one() -> Self {
                $one
            }
            fn is_zero(&self) -> bool {
                $is_zero(self)
            }
            fn add_ref(&self, rhs: &Self) -> Self {
                self + rhs
            }
            fn sub_ref(&self, rhs: &Self) -> Self {
                self - rhs
            }
            fn mul_ref(&self, rhs: &Self) -> Self {
                self * rhs
            }
            fn neg_ref(&self) -> Self {
                -self
            }
        }
    };
}

ring_via_ops!(ExactScalar, ExactScalar::zero(), ExactScalar::one(), ExactScalar::is_zero);
ring_via_ops!(ExactComplex, ExactComplex::zero(), ExactComplex::one(), ExactComplex::is_zero);
ring_via_ops!(Quaternion, Quaternion::zero(), Quaternion::one(), Quaternion::is_zero);
ring_via_ops!(
    Complex64,
    Complex64::new(0.0, 0.0),
    Complex64::new(1.0, 0.0),
    |z: &Complex64| z.re == 0.0 && z.im == 0.0
);

impl Field for ExactScalar {
    fn inv_ref(&self) -> Option<Self> {
        self.recip()
    }
}

impl Field for ExactComplex {
    fn inv_ref(&self) -> Option<Self> {
        self.recip()
    }
}

impl Field for Complex64 {
    fn inv_ref(&self) -> Option<Self> {
        (!Ring::is_zero(self)).then(|| self.inv())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

pub type HMatrix = Matrix<Quaternion>;
pub type ExactMatrix = Matrix<ExactComplex>;
pub type FloatMatrix = Matrix<Complex64>;

impl<T: Ring> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, entries: Vec<T>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count does not match shape");
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_vec(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self::from_vec(rows, cols, entries)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn diag(d: Vec<T>) -> Self {
        let n = d.len();
        let mut m = Self::zeros(n, n);
        for (i, v) in d.into_iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<T> {
        self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>> {
        self.entries.chunks(self.cols.max(1)).map(<[T]>::to_vec).collect()
    }

    pub fn map<U: Ring>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix::from_vec(self.rows, self.cols, self.entries.iter().map(f).collect())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Ring::is_zero)
    }

    fn check_same_shape(&self, rhs: &Self) -> Result<()> {
        if self.shape() != rhs.shape() {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.check_same_shape(rhs)?;
        Ok(self.zip(rhs, T::add_ref))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.check_same_shape(rhs)?;
        Ok(self.zip(rhs, T::sub_ref))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let e = out.get_mut(i, j);
                    *e = e.add_ref(&a.mul_ref(b));
                }
            }
        }
        Ok(out)
    }

    fn zip(&self, rhs: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        Self::from_vec(
            self.rows,
            self.cols,
            self.entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        )
    }

    /// Panics on a shape mismatch; see [`Matrix::checked_add`].
    pub fn add_ref(&self, rhs: &Self) -> Self {
        self.checked_add(rhs).expect("matrix add")
    }

    pub fn sub_ref(&self, rhs: &Self) -> Self {
        self.checked_sub(rhs).expect("matrix sub")
    }

    pub fn mul_ref(&self, rhs: &Self) -> Self {
        self.checked_mul(rhs).expect("matrix mul")
    }

    pub fn neg(&self) -> Self {
        self.map(T::neg_ref)
    }

    /// Left scalar multiplication `s·M`.
    pub fn scale(&self, s: &T) -> Self {
        self.map(|e| s.mul_ref(e))
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul_ref(rhs).sub_ref(&rhs.mul_ref(self))
    }

    pub fn anticommutator(&self, rhs: &Self) -> Self {
        self.mul_ref(rhs).add_ref(&rhs.mul_ref(self))
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc.add_ref(self.get(i, i)))
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::identity(self.rows), |acc, _| acc.mul_ref(self))
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// `[[a, b], [c, d]]` assembled from four equally sized blocks.
    pub fn from_blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        let (r, k) = a.shape();
        Self::from_fn(2 * r, 2 * k, |i, j| {
            let src = match (i < r, j < k) {
                (true, true) => a,
                (true, false) => b,
                (false, true) => c,
                (false, false) => d,
            };
            src.get(i % r, j % k).clone()
        })
    }

    pub fn block_diag(blocks: &[Self]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(n, m);
        let (mut r, mut c) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r + i, c + j, b.get(i, j).clone());
                }
            }
            r += b.rows;
            c += b.cols;
        }
        out
    }

    /// Kronecker product, `self ⊗ rhs` with `self` as the outer factor.
    pub fn kron(&self, rhs: &Self) -> Self {
        Self::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |i, j| {
            self.get(i / rhs.rows, j / rhs.cols)
                .mul_ref(rhs.get(i % rhs.rows, j % rhs.cols))
        })
    }
}

impl<T: Field> Matrix<T> {
    pub fn inverse(&self) -> Result<Self> {
        crate::linalg::inverse(self)
    }
}

impl<T: Ring> std::ops::Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.mul_ref(rhs)
    }
}

impl<T: Ring> std::ops::Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.add_ref(rhs)
    }
}

impl<T: Ring> std::ops::Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.sub_ref(rhs)
    }
}

impl<T: Ring> std::ops::Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        Matrix::neg(self)
    }
}

impl<T: Ring + Serialize> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a, T> {
            rows: usize,
            cols: usize,
            entries: Vec<&'a [T]>,
        }
        Repr {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.chunks(self.cols.max(1)).collect(),
        }
        .serialize(s)
    }
}

impl<'de, T: Ring + Deserialize<'de>> Deserialize<'de> for Matrix<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr<T> {
            rows: usize,
            cols: usize,
            entries: Vec<Vec<T>>,
        }
        let r = Repr::<T>::deserialize(d)?;
        if r.entries.len() != r.rows || r.entries.iter().any(|row| row.len() != r.cols) {
            return Err(D::Error::custom("entries do not match rows/cols"));
        }
        Ok(Matrix::from_vec(
            r.rows,
            r.cols,
            r.entries.into_iter().flatten().collect(),
        ))
    }
}

impl ExactMatrix {
    pub fn from_ints(rows: usize, cols: usize, v: &[i64]) -> Self {
        Self::from_vec(rows, cols, v.iter().map(|&n| ExactComplex::int(n)).collect())
    }

    /// Entry-wise complex conjugate `M*`.
    pub fn conj(&self) -> Self {
        self.map(ExactComplex::conj)
    }

    pub fn dagger(&self) -> Self {
        self.conj().transpose()
    }

    pub fn is_real(&self) -> bool {
        self.entries.iter().all(ExactComplex::is_real)
    }

    pub fn scale_real(&self, s: &ExactScalar) -> Self {
        self.map(|e| e.scale(s))
    }

    pub fn to_float(&self) -> FloatMatrix {
        self.map(ExactComplex::to_complex64)
    }
}

impl FloatMatrix {
    pub fn scale_f64(&self, s: f64) -> Self {
        self.map(|e| e * s)
    }

    pub fn conj(&self) -> Self {
        self.map(Complex64::conj)
    }

    pub fn dagger(&self) -> Self {
        self.conj().transpose()
    }

    /// Largest entry-wise modulus.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        assert_eq!(self.shape(), rhs.shape());
        self.entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, rhs: &Self, tol: f64) -> bool {
        self.shape() == rhs.shape() && self.max_abs_diff(rhs) <= tol
    }
}

/// 17 significant digits, the format used for every float in JSON output.
pub fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
}

/// A complex matrix in exact or float mode.
#[derive(Clone, Debug, PartialEq)]
pub enum CMatrix {
    Exact(ExactMatrix),
    Float(FloatMatrix),
}

impl CMatrix {
    pub fn mode(&self) -> Mode {
        match self {
            CMatrix::Exact(_) => Mode::Exact,
            CMatrix::Float(_) => Mode::Float,
        }
    }

    pub fn shape(&self) -> (usize, usize) {
        match self {
            CMatrix::Exact(m) => m.shape(),
            CMatrix::Float(m) => m.shape(),
        }
    }

    pub fn as_exact(&self) -> Option<&ExactMatrix> {
        match self {
            CMatrix::Exact(m) => Some(m),
            CMatrix::Float(_) => None,
        }
    }

    pub fn as_float(&self) -> Option<&FloatMatrix> {
        match self {
            CMatrix::Float(m) => Some(m),
            CMatrix::Exact(_) => None,
        }
    }

    /// Explicit conversion to float mode.
    pub fn to_float(&self) -> FloatMatrix {
        match self {
            CMatrix::Exact(m) => m.to_float(),
            CMatrix::Float(m) => m.clone(),
        }
    }

    pub fn mul(&self, rhs: &CMatrix) -> Result<CMatrix> {
        match (self, rhs) {
            (CMatrix::Exact(a), CMatrix::Exact(b)) => a.checked_mul(b).map(CMatrix::Exact),
            (CMatrix::Float(a), CMatrix::Float(b)) => a.checked_mul(b).map(CMatrix::Float),
            _ => Err(Error::ModeMismatch),
        }
    }

    pub fn add(&self, rhs: &CMatrix) -> Result<CMatrix> {
        match (self, rhs) {
            (CMatrix::Exact(a), CMatrix::Exact(b)) => a.checked_add(b).map(CMatrix::Exact),
            (CMatrix::Float(a), CMatrix::Float(b)) => a.checked_add(b).map(CMatrix::Float),
            _ => Err(Error::ModeMismatch),
        }
    }

    pub fn sub(&self, rhs: &CMatrix) -> Result<CMatrix> {
        match (self, rhs) {
            (CMatrix::Exact(a), CMatrix::Exact(b)) => a.checked_sub(b).map(CMatrix::Exact),
            (CMatrix::Float(a), CMatrix::Float(b)) => a.checked_sub(b).map(CMatrix::Float),
            _ => Err(Error::ModeMismatch),
        }
    }

    pub fn conj(&self) -> CMatrix {
        match self {
            CMatrix::Exact(m) => CMatrix::Exact(m.conj()),
            CMatrix::Float(m) => CMatrix::Float(m.conj()),
        }
    }

    /// Exact equality in exact mode, max-norm within `tol` in float mode.
    pub fn equals(&self, rhs: &CMatrix, tol: f64) -> Result<bool> {
        match (self, rhs) {
            (CMatrix::Exact(a), CMatrix::Exact(b)) => Ok(a == b),
            (CMatrix::Float(a), CMatrix::Float(b)) => Ok(a.approx_eq(b, tol)),
            _ => Err(Error::ModeMismatch),
        }
    }
}

impl From<ExactMatrix> for CMatrix {
    fn from(m: ExactMatrix) -> Self {
        CMatrix::Exact(m)
    }
}

impl From<FloatMatrix> for CMatrix {
    fn from(m: FloatMatrix) -> Self {
        CMatrix::Float(m)
    }
}

#[derive(Serialize, Deserialize)]
struct FloatEntry {
    re: String,
    im: String,
}

impl Serialize for CMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a, T> {
            mode: Mode,
            rows: usize,
            cols: usize,
            entries: Vec<&'a [T]>,
        }
        match self {
            CMatrix::Exact(m) => Repr {
                mode: Mode::Exact,
                rows: m.rows,
                cols: m.cols,
                entries: m.entries.chunks(m.cols.max(1)).collect(),
            }
            .serialize(s),
            CMatrix::Float(m) => {
                let e: Vec<FloatEntry> = m
                    .entries
                    .iter()
                    .map(|z| FloatEntry {
                        re: format_f64(z.re),
                        im: format_f64(z.im),
                    })
                    .collect();
                Repr {
                    mode: Mode::Float,
                    rows: m.rows,
                    cols: m.cols,
                    entries: e.chunks(m.cols.max(1)).collect(),
                }
                .serialize(s)
            }
        }
    }
}

impl<'de> Deserialize<'de> for CMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        let mode: Mode = serde_json::from_value(v.get("mode").cloned().unwrap_or_default())
            .map_err(D::Error::custom)?;
        match mode {
            Mode::Exact => serde_json::from_value::<ExactMatrix>(v)
                .map(CMatrix::Exact)
                .map_err(D::Error::custom),
            Mode::Float => {
                let m: Matrix<FloatEntry2> = serde_json::from_value(v).map_err(D::Error::custom)?;
                Ok(CMatrix::Float(m.map(|e| e.0)))
            }
        }
    }
}

/// Adapter so float entries can reuse the generic matrix deserializer.
#[derive(Clone, PartialEq, Debug)]
struct FloatEntry2(Complex64);

impl Ring for FloatEntry2 {
    fn zero() -> Self {
        FloatEntry2(Complex64::new(0.0, 0.0))
    }
    fn one() -> Self {
        FloatEntry2(Complex64::new(1.0, 0.0))
    }
    fn is_zero(&self) -> bool {
        Ring::is_zero(&self.0)
    }
    fn add_ref(&self, r: &Self) -> Self {
        FloatEntry2(self.0 + r.0)
    }
    fn sub_ref(&self, r: &Self) -> Self {
        FloatEntry2(self.0 - r.0)
    }
    fn mul_ref(&self, r: &Self) -> Self {
        FloatEntry2(self.0 * r.0)
    }
    fn neg_ref(&self) -> Self {
        FloatEntry2(-self.0)
    }
}

impl<'de> Deserialize<'de> for FloatEntry2 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let e = FloatEntry::deserialize(d)?;
        let p = |s: &str| s.parse::<f64>().map_err(D::Error::custom);
        Ok(FloatEntry2(Complex64::new(p(&e.re)?, p(&e.im)?)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiply_and_shapes() {
        let a = ExactMatrix::from_ints(2, 3, &[1, 2, 3, 4, 5, 6]);
        let b = ExactMatrix::from_ints(3, 1, &[1, 0, -1]);
        assert_eq!(a.mul_ref(&b), ExactMatrix::from_ints(2, 1, &[-2, -2]));
        assert!(matches!(b.checked_mul(&a), Err(Error::ShapeMismatch(_))));
        assert!(a.checked_add(&b).is_err());
    }

    #[test]
    fn kron_follows_outer_inner_order() {
        let x = ExactMatrix::from_ints(2, 2, &[0, 1, 1, 0]);
        let d = ExactMatrix::from_ints(2, 2, &[1, 0, 0, 2]);
        let k = x.kron(&d);
        assert_eq!(k.get(0, 2), &ExactComplex::int(1));
        assert_eq!(k.get(1, 3), &ExactComplex::int(2));
        assert!(k.get(0, 0).is_zero());
    }

    #[test]
    fn modes_do_not_mix() {
        let e = CMatrix::Exact(ExactMatrix::identity(2));
        let f = CMatrix::Float(FloatMatrix::identity(2));
        assert_eq!(e.mul(&f), Err(Error::ModeMismatch));
        assert!(e.mul(&e).unwrap().equals(&e, 0.0).unwrap());
    }

    #[test]
    fn cmatrix_json_roundtrip() {
        let mut m = ExactMatrix::identity(2);
        m.set(0, 1, ExactComplex::i());
        let c = CMatrix::Exact(m);
        let js = serde_json::to_string(&c).unwrap();
        assert!(js.starts_with(r#"{"mode":"exact","rows":2,"cols":2,"entries":[["#));
        assert_eq!(serde_json::from_str::<CMatrix>(&js).unwrap(), c);

        let f = CMatrix::Float(FloatMatrix::from_vec(
            1,
            1,
            vec![Complex64::new(0.1, -2.0)],
        ));
        let js = serde_json::to_string(&f).unwrap();
        assert!(js.contains(r#""re":"1.0000000000000001e-1""#), "{js}");
        assert_eq!(serde_json::from_str::<CMatrix>(&js).unwrap(), f);
    }
}
