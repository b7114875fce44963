//! Constant matrices: Pauli, anti-Hermitian Gell-Mann, Dirac, and the
//! 6×6 unitary that diagonalizes the Hermitian form preserved by SO*(6).

use crate::matrix::ExactMatrix;
use crate::scalar::{ExactComplex, ExactScalar};

/// Builds an exact complex matrix from `(re, im)` integer pairs.
pub fn gaussian(rows: usize, cols: usize, v: &[(i64, i64)]) -> ExactMatrix {
    ExactMatrix::from_vec(
        rows,
        cols,
        v.iter()
            .map(|&(re, im)| ExactComplex::new(re.into(), im.into()))
            .collect(),
    )
}

pub fn half() -> ExactScalar {
    ExactScalar::frac(1, 2)
}

/// `[σx, σy, σz]`
pub fn pauli() -> Vec<ExactMatrix> {
    vec![
        gaussian(2, 2, &[(0, 0), (1, 0), (1, 0), (0, 0)]),
        gaussian(2, 2, &[(0, 0), (0, -1), (0, 1), (0, 0)]),
        gaussian(2, 2, &[(1, 0), (0, 0), (0, 0), (-1, 0)]),
    ]
}

/// `[λ1, …, λ8]`, anti-Hermitian and normalized to `Tr(λλ) = −1/2`.
pub fn gellmann() -> Vec<ExactMatrix> {
    let o = (0, 0);
    let i = (0, 1);
    let mi = (0, -1);
    let p = (1, 0);
    let m = (-1, 0);
    let mut out: Vec<ExactMatrix> = [
        [o, i, o, i, o, o, o, o, o],
        [o, m, o, p, o, o, o, o, o],
        [i, o, o, o, mi, o, o, o, o],
        [o, o, i, o, o, o, i, o, o],
        [o, o, m, o, o, o, p, o, o],
        [o, o, o, o, o, i, o, i, o],
        [o, o, o, o, o, m, o, p, o],
    ]
    .iter()
    .map(|v| gaussian(3, 3, v).scale_real(&half()))
    .collect();
    // λ8 = diag(i, i, −2i) / (2√3)
    let c = (ExactScalar::int(2) * ExactScalar::sqrt3()).recip().expect("nonzero");
    out.push(gaussian(3, 3, &[i, o, o, o, i, o, o, o, (0, -2)]).scale_real(&c));
    out
}

/// `[γ⁰, γ¹, γ², γ³, γ⁵]`
pub fn dirac() -> Vec<ExactMatrix> {
    let id2 = ExactMatrix::identity(2);
    let z2 = ExactMatrix::zeros(2, 2);
    let mut out = vec![ExactMatrix::from_blocks(&id2, &z2, &z2, &id2.neg())];
    for s in pauli() {
        out.push(ExactMatrix::from_blocks(&z2, &s, &s.neg(), &z2));
    }
    out.push(ExactMatrix::from_blocks(&z2, &id2, &id2, &z2));
    out
}

/// The 6×6 change of basis for the complexified SO*(6) algebra.
pub fn u_sostar6() -> ExactMatrix {
    let o = (0, 0);
    let i = (0, 1);
    let mi = (0, -1);
    let p = (1, 0);
    #[rustfmt::skip]
    let u = gaussian(6, 6, &[
        o, o, i, o, o, mi,
        o, o, p, o, o, p,
        o, i, o, o, mi, o,
        o, p, o, o, p, o,
        i, o, o, mi, o, o,
        p, o, o, p, o, o,
    ]);
    u.scale_real(&ExactScalar::sqrt2().recip().expect("nonzero"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pauli_x() {
        assert_eq!(pauli()[0], ExactMatrix::from_ints(2, 2, &[0, 1, 1, 0]));
    }

    #[test]
    fn gellmann_properties() {
        let l = gellmann();
        assert_eq!(l.len(), 8);
        let mut l1 = ExactMatrix::zeros(3, 3);
        l1.set(0, 1, ExactComplex::imag(half()));
        l1.set(1, 0, ExactComplex::imag(half()));
        assert_eq!(l[0], l1);
        // λ7 has −1/2 at (2,3)
        assert_eq!(l[6].get(1, 2), &ExactComplex::real(-half()));
        assert!(l[7].get(2, 2).re.is_zero());
        for m in &l {
            assert_eq!(m.dagger(), m.neg());
            assert!(m.trace().is_zero());
            assert_eq!(m.mul_ref(m).trace(), ExactComplex::real(-half()));
        }
    }

    #[test]
    fn dirac_clifford_relations() {
        let g = dirac();
        let metric = [1, -1, -1, -1];
        for a in 0..4 {
            for b in 0..4 {
                let ac = g[a].anticommutator(&g[b]);
                let expect = if a == b { 2 * metric[a] } else { 0 };
                assert_eq!(ac, ExactMatrix::identity(4).scale(&ExactComplex::int(expect)));
            }
        }
    }

    #[test]
    fn u_is_unitary() {
        let u = u_sostar6();
        assert_eq!(u.dagger().mul_ref(&u), ExactMatrix::identity(6));
    }
}
