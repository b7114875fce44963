//! Quaternionic matrices: embedding into complex matrices, the two
//! anti-involutions, the Study determinant, and membership predicates for
//! SO*(2n), Sp*(p,q) and their algebras.
//!
//! Exact predicates take `HMatrix`. Group elements produced by exponentials
//! only exist in embedded float form, so the group predicates also come in an
//! `_embedded` flavour over [`CMatrix`] with an explicit tolerance.

use crate::error::{Error, Result};
use crate::linalg::{det_bareiss, det_float};
use crate::matrix::{CMatrix, ExactMatrix, FloatMatrix, HMatrix, Matrix};
use crate::quaternion::Quaternion;
use crate::scalar::{ExactComplex, ExactScalar};

/// Replaces every quaternion entry by its 2×2 complex block.
pub fn embed_matrix(m: &HMatrix) -> ExactMatrix {
    let (r, c) = m.shape();
    let blocks: Vec<ExactMatrix> = m.entries().iter().map(Quaternion::embed).collect();
    ExactMatrix::from_fn(2 * r, 2 * c, |i, j| {
        blocks[(i / 2) * c + j / 2].get(i % 2, j % 2).clone()
    })
}

/// Entry-wise reversion followed by transpose.
pub fn rev_transpose(m: &HMatrix) -> HMatrix {
    m.transpose().map(Quaternion::reversion)
}

/// Entry-wise conjugation followed by transpose.
pub fn dagger(m: &HMatrix) -> HMatrix {
    m.transpose().map(Quaternion::conj)
}

/// Determinant of the complex image.
pub fn study_det(m: &HMatrix) -> Result<ExactComplex> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    det_bareiss(&embed_matrix(m))
}

/// `diag(1,…,1,−1,…,−1)` with `p` plus signs and `q` minus signs.
pub fn i_pq(p: usize, q: usize) -> HMatrix {
    HMatrix::diag(
        (0..p + q)
            .map(|k| Quaternion::from_ints(if k < p { 1 } else { -1 }, 0, 0, 0))
            .collect(),
    )
}

pub fn scalar_times(q: &Quaternion, m: &HMatrix) -> HMatrix {
    m.map(|e| q * e)
}

fn require_square(m: &HMatrix) -> Result<usize> {
    if m.is_square() {
        Ok(m.rows())
    } else {
        Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        })
    }
}

fn require_split(n: usize, p: usize, q: usize) -> Result<()> {
    if p + q != n {
        return Err(Error::InvalidDimensions(format!("p + q = {} but n = {n}", p + q)));
    }
    Ok(())
}

/// `rev_transpose(a) = −a` and the trace has zero real part.
pub fn is_sostar_algebra(a: &HMatrix) -> Result<bool> {
    require_square(a)?;
    Ok(rev_transpose(a) == a.neg() && a.trace().t.is_zero())
}

/// Exact group test: `rev_transpose(O)·O = I` and Study determinant 1.
pub fn is_sostar_group(o: &HMatrix) -> Result<bool> {
    let n = require_square(o)?;
    if rev_transpose(o).mul_ref(o) != HMatrix::identity(n) {
        return Ok(false);
    }
    Ok(study_det(o)? == ExactComplex::one())
}

/// Group test on an embedded `2n×2n` matrix: complex orthogonal, unit
/// determinant, and commuting with the quaternionic structure `embed(j·I)`.
pub fn is_sostar_group_embedded(o: &CMatrix, tol: f64) -> Result<bool> {
    let n2 = embedded_order(o)?;
    let j = CMatrix::Exact(embed_matrix(&scalar_times(&Quaternion::j(), &HMatrix::identity(n2 / 2))));
    let (ot, id) = match o {
        CMatrix::Exact(m) => (CMatrix::Exact(m.transpose()), CMatrix::Exact(ExactMatrix::identity(n2))),
        CMatrix::Float(m) => (CMatrix::Float(m.transpose()), CMatrix::Float(FloatMatrix::identity(n2))),
    };
    if !ot.mul(o)?.equals(&id, tol)? {
        return Ok(false);
    }
    if !unit_det(o, tol)? {
        return Ok(false);
    }
    quaternionic_structure_commutant_check(o, &match_mode(&j, o), tol)
}

/// `dagger(a)·I_pq + I_pq·a = 0` and the dual form with `j·I_pq`.
pub fn is_spstar_algebra(a: &HMatrix, p: usize, q: usize) -> Result<bool> {
    let n = require_square(a)?;
    require_split(n, p, q)?;
    let ipq = i_pq(p, q);
    let herm = dagger(a).mul_ref(&ipq).add_ref(&ipq.mul_ref(a));
    let jipq = scalar_times(&Quaternion::j(), &ipq);
    let dual = rev_transpose(a).mul_ref(&jipq).add_ref(&jipq.mul_ref(a));
    Ok(herm.is_zero() && dual.is_zero())
}

/// `dagger(A)·I_pq·A = I_pq`, `rev_transpose(A)·(j·I_pq)·A = j·I_pq`, unit Study determinant.
pub fn is_spstar_group(a: &HMatrix, p: usize, q: usize) -> Result<bool> {
    let n = require_square(a)?;
    require_split(n, p, q)?;
    let ipq = i_pq(p, q);
    if dagger(a).mul_ref(&ipq).mul_ref(a) != ipq {
        return Ok(false);
    }
    let jipq = scalar_times(&Quaternion::j(), &ipq);
    if rev_transpose(a).mul_ref(&jipq).mul_ref(a) != jipq {
        return Ok(false);
    }
    Ok(study_det(a)? == ExactComplex::one())
}

/// Embedded version of [`is_spstar_group`]: pseudo-unitary for `embed(I_pq)`,
/// symplectic for `embed(j·I_pq)`, unit determinant.
pub fn is_spstar_group_embedded(a: &CMatrix, p: usize, q: usize, tol: f64) -> Result<bool> {
    let n2 = embedded_order(a)?;
    require_split(n2 / 2, p, q)?;
    let h = match_mode(&CMatrix::Exact(embed_matrix(&i_pq(p, q))), a);
    let w = match_mode(
        &CMatrix::Exact(embed_matrix(&scalar_times(&Quaternion::j(), &i_pq(p, q)))),
        a,
    );
    let (adag, at) = match a {
        CMatrix::Exact(m) => (CMatrix::Exact(m.dagger()), CMatrix::Exact(m.transpose())),
        CMatrix::Float(m) => (CMatrix::Float(m.dagger()), CMatrix::Float(m.transpose())),
    };
    Ok(adag.mul(&h)?.mul(a)?.equals(&h, tol)?
        && at.mul(&w)?.mul(a)?.equals(&w, tol)?
        && unit_det(a, tol)?)
}

/// Complex pseudo-unitary algebra test `X†·H + H·X = 0`.
pub fn is_pseudo_unitary_algebra(x: &ExactMatrix, h: &ExactMatrix) -> bool {
    x.dagger().mul_ref(h).add_ref(&h.mul_ref(x)).is_zero()
}

/// Complex orthogonal/symplectic algebra test `Xᵀ·W + W·X = 0`.
pub fn preserves_bilinear_form(x: &ExactMatrix, w: &ExactMatrix) -> bool {
    x.transpose().mul_ref(w).add_ref(&w.mul_ref(x)).is_zero()
}

/// `J·M*·J⁻¹ = M`, checked as `J·M* = M·J`. Fails with an error unless `J·J* = −I`.
pub fn quaternionic_structure_commutant_check(m: &CMatrix, j: &CMatrix, tol: f64) -> Result<bool> {
    let (n, c) = j.shape();
    if n != c || m.shape() != (n, n) {
        return Err(Error::ShapeMismatch(format!(
            "M is {:?}, J is {:?}",
            m.shape(),
            j.shape()
        )));
    }
    let minus_id = match j {
        CMatrix::Exact(_) => CMatrix::Exact(ExactMatrix::identity(n).neg()),
        CMatrix::Float(_) => CMatrix::Float(FloatMatrix::identity(n).neg()),
    };
    if !j.mul(&j.conj())?.equals(&minus_id, tol)? {
        return Err(Error::NotQuaternionicStructure);
    }
    let lhs = j.mul(&m.conj())?;
    let rhs = m.mul(j)?;
    lhs.equals(&rhs, tol)
}

fn embedded_order(m: &CMatrix) -> Result<usize> {
    let (r, c) = m.shape();
    if r != c {
        return Err(Error::NotSquare { rows: r, cols: c });
    }
    if r % 2 != 0 {
        return Err(Error::InvalidDimensions(format!("embedded order {r} is odd")));
    }
    Ok(r)
}

fn match_mode(exact: &CMatrix, like: &CMatrix) -> CMatrix {
    match like {
        CMatrix::Exact(_) => exact.clone(),
        CMatrix::Float(_) => CMatrix::Float(exact.to_float()),
    }
}

fn unit_det(m: &CMatrix, tol: f64) -> Result<bool> {
    Ok(match m {
        CMatrix::Exact(x) => det_bareiss(x)? == ExactComplex::one(),
        CMatrix::Float(x) => (det_float(x)? - num_complex::Complex64::new(1.0, 0.0)).norm() <= tol,
    })
}

/// Builds an `HMatrix` from integer quaternion components `[t, x, y, z]`.
pub fn hmatrix_from_ints(rows: usize, cols: usize, v: &[[i64; 4]]) -> HMatrix {
    Matrix::from_vec(
        rows,
        cols,
        v.iter()
            .map(|&[t, x, y, z]| Quaternion::from_ints(t, x, y, z))
            .collect(),
    )
}

/// Real coordinates of a quaternionic matrix: four per entry, row-major.
pub fn hmatrix_real_coords(m: &HMatrix) -> Vec<ExactScalar> {
    m.entries()
        .iter()
        .flat_map(|q| q.components().into_iter().cloned())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(t: i64, x: i64, y: i64, z: i64) -> Quaternion {
        Quaternion::from_ints(t, x, y, z)
    }

    fn one_by_one(e: Quaternion) -> HMatrix {
        HMatrix::from_vec(1, 1, vec![e])
    }

    #[test]
    fn embedding_basics() {
        assert_eq!(embed_matrix(&HMatrix::identity(3)), ExactMatrix::identity(6));
        assert_eq!(
            embed_matrix(&one_by_one(Quaternion::j())),
            ExactMatrix::from_ints(2, 2, &[0, -1, 1, 0])
        );
    }

    #[test]
    fn study_determinants() {
        assert_eq!(study_det(&HMatrix::identity(3)).unwrap(), ExactComplex::one());
        assert_eq!(study_det(&one_by_one(q(1, 1, 0, 0))).unwrap(), ExactComplex::int(2));
        assert_eq!(study_det(&one_by_one(Quaternion::j())).unwrap(), ExactComplex::one());
        assert!(study_det(&HMatrix::zeros(1, 2)).is_err());
    }

    #[test]
    fn transpose_alone_is_not_an_antihomomorphism() {
        let a = hmatrix_from_ints(2, 2, &[[0, 1, 0, 0], [0; 4], [0; 4], [1, 0, 0, 0]]);
        let w = hmatrix_from_ints(2, 2, &[[0; 4], [0, 0, 1, 0], [1, 0, 0, 0], [0; 4]]);
        assert_ne!(a.mul_ref(&w).transpose(), w.transpose().mul_ref(&a.transpose()));
        assert_eq!(dagger(&a.mul_ref(&w)), dagger(&w).mul_ref(&dagger(&a)));
        assert_eq!(
            rev_transpose(&a.mul_ref(&w)),
            rev_transpose(&w).mul_ref(&rev_transpose(&a))
        );
    }

    #[test]
    fn sostar_membership() {
        assert!(is_sostar_group(&HMatrix::identity(2)).unwrap());
        assert!(!is_sostar_group(&HMatrix::identity(2).scale(&q(2, 0, 0, 0))).unwrap());
        let theta = ExactScalar::frac(3, 7);
        assert!(is_sostar_algebra(&one_by_one(Quaternion::j().scale(&theta))).unwrap());
        assert!(!is_sostar_algebra(&one_by_one(Quaternion::i())).unwrap());
        assert!(is_sostar_algebra(&HMatrix::zeros(1, 2)).is_err());
    }

    #[test]
    fn spstar_membership() {
        assert!(is_spstar_group(&HMatrix::identity(2), 1, 1).unwrap());
        assert!(is_spstar_group(&one_by_one(Quaternion::i()), 1, 0).unwrap());
        assert!(!is_spstar_group(&one_by_one(q(1, 1, 0, 0)), 1, 0).unwrap());
        assert!(matches!(
            is_spstar_group(&HMatrix::identity(2), 1, 0),
            Err(Error::InvalidDimensions(_))
        ));
        assert!(is_spstar_algebra(&one_by_one(Quaternion::k()), 0, 1).unwrap());
    }

    #[test]
    fn quaternionic_structure_examples() {
        let eps = ExactMatrix::from_ints(2, 2, &[0, -1, 1, 0]);
        let j4 = CMatrix::Exact(ExactMatrix::block_diag(&[eps.clone(), eps.clone()]));
        let id = CMatrix::Exact(ExactMatrix::identity(4));
        assert!(quaternionic_structure_commutant_check(&id, &j4, 0.0).unwrap());

        let m = CMatrix::Exact(ExactMatrix::diag(vec![ExactComplex::i(), ExactComplex::one()]));
        assert!(!quaternionic_structure_commutant_check(&m, &CMatrix::Exact(eps), 0.0).unwrap());

        let not_j = CMatrix::Exact(ExactMatrix::identity(2));
        assert_eq!(
            quaternionic_structure_commutant_check(&not_j, &not_j, 0.0),
            Err(Error::NotQuaternionicStructure)
        );
    }

    fn arb_q() -> impl Strategy<Value = Quaternion> {
        let c = || (-5i64..=5, 1i64..=3).prop_map(|(n, d)| ExactScalar::frac(n, d));
        (c(), c(), c(), c()).prop_map(|(t, x, y, z)| Quaternion::new(t, x, y, z))
    }

    fn arb_pair() -> impl Strategy<Value = (HMatrix, HMatrix)> {
        (1usize..=3).prop_flat_map(|n| {
            (
                prop::collection::vec(arb_q(), n * n),
                prop::collection::vec(arb_q(), n * n),
            )
                .prop_map(move |(a, b)| (HMatrix::from_vec(n, n, a), HMatrix::from_vec(n, n, b)))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn matrix_laws((a, b) in arb_pair()) {
            let ab = a.mul_ref(&b);
            prop_assert_eq!(embed_matrix(&ab), embed_matrix(&a).mul_ref(&embed_matrix(&b)));
            prop_assert_eq!(dagger(&ab), dagger(&b).mul_ref(&dagger(&a)));
            prop_assert_eq!(rev_transpose(&ab), rev_transpose(&b).mul_ref(&rev_transpose(&a)));
            prop_assert_eq!(embed_matrix(&dagger(&a)), embed_matrix(&a).dagger());
            prop_assert_eq!(embed_matrix(&rev_transpose(&a)), embed_matrix(&a).transpose());
            prop_assert_eq!(
                study_det(&ab).unwrap(),
                study_det(&a).unwrap() * study_det(&b).unwrap()
            );
        }

        #[test]
        fn embedded_quaternion_commutes_with_j(p in arb_q()) {
            let m = CMatrix::Exact(p.embed());
            let j = CMatrix::Exact(Quaternion::j().embed());
            prop_assert!(quaternionic_structure_commutant_check(&m, &j, 0.0).unwrap());
        }
    }
}
