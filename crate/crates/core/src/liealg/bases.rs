//! Named bases for so*(4), su(2)⊕sl(2,ℝ), su(3,1), so*(6), and canonical
//! bases for the families so*(2n), sp*(p,q) and sl(n,ℍ).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::constants::{gaussian, gellmann, half};
use super::{Generators, LieBasis};
use crate::error::{Error, Result};
use crate::matrix::{ExactMatrix, HMatrix};
use crate::quaternion::Quaternion;
use crate::scalar::{ExactComplex, ExactScalar};

const UNIT_NAMES: [&str; 4] = ["1", "i", "j", "k"];

fn unit(u: usize) -> Quaternion {
    Quaternion::units()[u].clone()
}

/// Accumulates `coef · unit` at `(r, c)`.
fn put(m: &mut HMatrix, r: usize, c: usize, q: Quaternion) {
    let v = m.get(r, c) + &q;
    m.set(r, c, v);
}

/// Puts `q` at `(r, c)` and `−rev(q)` at `(c, r)`, the partner forced by
/// reversion-transpose skew symmetry.
pub(crate) fn put_rev_skew(m: &mut HMatrix, r: usize, c: usize, q: Quaternion) {
    put(m, c, r, -q.reversion());
    put(m, r, c, q);
}

fn quat_basis(name: &str, prefix: &str, gens: Vec<HMatrix>) -> LieBasis {
    LieBasis::numbered(name, prefix, Generators::Quaternionic(gens)).expect("built-in basis is valid")
}

fn complex_basis(name: &str, prefix: &str, gens: Vec<ExactMatrix>) -> LieBasis {
    LieBasis::numbered(name, prefix, Generators::Complex(gens)).expect("built-in basis is valid")
}

/// so*(4) on ℍ², generators `A_1 … A_6`.
pub fn basis_sostar4_a() -> LieBasis {
    let h = half();
    let (one, i, j, k) = (unit(0), unit(1), unit(2), unit(3));
    let mut gens = Vec::new();
    for (u, diag) in [
        (one.clone(), None),
        (Quaternion::zero(), Some(-1)),
        (-j.clone(), None),
        (i, None),
        (Quaternion::zero(), Some(1)),
        (k, None),
    ] {
        let mut m = HMatrix::zeros(2, 2);
        match diag {
            Some(s) => {
                m.set(0, 0, j.clone());
                m.set(1, 1, j.scale(&ExactScalar::int(s)));
            }
            None => {
                // (1,2) = u, (2,1) = −rev(u) for u ∈ {1, i, k}; for j both entries are −j
                m.set(0, 1, u.clone());
                m.set(1, 0, -u.reversion());
            }
        }
        gens.push(m.map(|q| q.scale(&h)));
    }
    quat_basis("so*(4) A", "A", gens)
}

/// su(2) ⊕ sl(2,ℝ) on ℂ² ⊕ ℂ², generators `S_1 … S_6`.
pub fn basis_su2_sl2_s() -> LieBasis {
    let o = (0, 0);
    #[rustfmt::skip]
    let raw: [[(i64, i64); 16]; 6] = [
        [o, (0, 1), o, o,  (0, 1), o, o, o,  o, o, o, o,  o, o, o, o],
        [o, (-1, 0), o, o,  (1, 0), o, o, o,  o, o, o, o,  o, o, o, o],
        [(0, 1), o, o, o,  o, (0, -1), o, o,  o, o, o, o,  o, o, o, o],
        [o, o, o, o,  o, o, o, o,  o, o, o, (-1, 0),  o, o, (-1, 0), o],
        [o, o, o, o,  o, o, o, o,  o, o, o, (-1, 0),  o, o, (1, 0), o],
        [o, o, o, o,  o, o, o, o,  o, o, (-1, 0), o,  o, o, o, (1, 0)],
    ];
    let gens = raw
        .iter()
        .map(|v| gaussian(4, 4, v).scale_real(&half()))
        .collect();
    complex_basis("su(2)+sl(2,R) S", "S", gens)
}

fn su31_boosts() -> Vec<ExactMatrix> {
    // (row, col, value) for θ9 … θ14 before the overall ½
    let entries: [[(usize, usize, (i64, i64)); 2]; 6] = [
        [(2, 3, (-1, 0)), (3, 2, (-1, 0))],
        [(2, 3, (0, 1)), (3, 2, (0, -1))],
        [(1, 3, (1, 0)), (3, 1, (1, 0))],
        [(1, 3, (0, -1)), (3, 1, (0, 1))],
        [(0, 3, (-1, 0)), (3, 0, (-1, 0))],
        [(0, 3, (0, 1)), (3, 0, (0, -1))],
    ];
    entries
        .iter()
        .map(|pair| {
            let mut m = ExactMatrix::zeros(4, 4);
            for &(r, c, (re, im)) in pair {
                m.set(r, c, ExactComplex::new(ExactScalar::frac(re, 2), ExactScalar::frac(im, 2)));
            }
            m
        })
        .collect()
}

fn su31_with_block(name: &str, block: impl Fn(&ExactMatrix) -> ExactMatrix) -> LieBasis {
    let z1 = ExactMatrix::zeros(1, 1);
    let mut gens: Vec<ExactMatrix> = gellmann()
        .iter()
        .map(|l| ExactMatrix::block_diag(&[block(l), z1.clone()]))
        .collect();
    gens.extend(su31_boosts());
    // i/(2√6) = i·√6/12
    let c = ExactComplex::imag(ExactScalar::sqrt6() * ExactScalar::frac(1, 12));
    gens.push(
        ExactMatrix::diag(vec![
            ExactComplex::int(1),
            ExactComplex::int(1),
            ExactComplex::int(1),
            ExactComplex::int(-3),
        ])
        .scale(&c),
    );
    complex_basis(name, "s", gens)
}

/// su(3,1) on ℂ⁴, generators `s_1 … s_15`, with the su(3) block carrying
/// the conjugate Gell-Mann matrices `λ_i*`.
///
/// This is the choice whose structure constants agree exactly with the
/// quaternionic so*(6) basis; see [`basis_su31_twisted`].
pub fn basis_su31() -> LieBasis {
    su31_with_block("su(3,1)", ExactMatrix::conj)
}

/// su(3,1) with `λ_i` (not `λ_i*`) in the su(3) block. It differs from
/// [`basis_su31`] by the outer automorphism exchanging 3 and 3̄, so its
/// structure constants disagree with so*(6) on 31 brackets `[s_i, s_j]`, i < j.
pub fn basis_su31_twisted() -> LieBasis {
    su31_with_block("su(3,1) twisted", Clone::clone)
}

/// so*(6) on ℍ³, generators `a_1 … a_15`, with prefactor ½.
pub fn basis_sostar6_quat() -> LieBasis {
    let h = half();
    let s63 = ExactScalar::sqrt6() * ExactScalar::frac(1, 3); // √2/√3
    let s33 = ExactScalar::sqrt3() * ExactScalar::frac(1, 3); // 1/√3
    let j = Quaternion::j();
    let mut gens = vec![HMatrix::zeros(3, 3); 15];
    // off-diagonal: (slot, [θ for 1, i, j, k])
    let off: [((usize, usize), [usize; 4]); 3] = [
        ((0, 1), [7, 13, 6, 14]),
        ((0, 2), [5, 11, 4, 12]),
        ((1, 2), [2, 9, 1, 10]),
    ];
    for ((r, c), thetas) in off {
        for (u, &t) in thetas.iter().enumerate() {
            put_rev_skew(&mut gens[t - 1], r, c, unit(u));
        }
    }
    // diagonal: j·(√2θ15 − 2θ8)/√3, j·(√2θ15 + θ8 ∓ √3θ3)/√3
    for d in 0..3 {
        put(&mut gens[14], d, d, j.scale(&s63));
    }
    put(&mut gens[7], 0, 0, j.scale(&(&s33 * &ExactScalar::int(-2))));
    put(&mut gens[7], 1, 1, j.scale(&s33));
    put(&mut gens[7], 2, 2, j.scale(&s33));
    put(&mut gens[2], 1, 1, -j.clone());
    put(&mut gens[2], 2, 2, j.clone());
    let gens = gens.into_iter().map(|m| m.map(|q| q.scale(&h))).collect();
    quat_basis("so*(6)", "a", gens)
}

/// so*(6) in the complex block form obtained after the unitary change of
/// basis: `diag(λ_i, λ_i*)`, boosts built from `λ_2, λ_5, λ_7`, and
/// `a_15 = (i/√6)·diag(I_3, −I_3)`.
pub fn basis_sostar6_complex() -> LieBasis {
    let l = gellmann();
    let z = ExactMatrix::zeros(3, 3);
    let mut gens: Vec<ExactMatrix> = l
        .iter()
        .map(|x| ExactMatrix::block_diag(&[x.clone(), x.conj()]))
        .collect();
    let i = ExactComplex::i();
    for idx in [1usize, 4, 6] {
        let x = &l[idx];
        gens.push(ExactMatrix::from_blocks(&z, &x.neg(), x, &z));
        let ix = x.scale(&i);
        gens.push(ExactMatrix::from_blocks(&z, &ix, &ix, &z));
    }
    let c = ExactComplex::imag(ExactScalar::sqrt6() * ExactScalar::frac(1, 6));
    let id3 = ExactMatrix::identity(3);
    gens.push(ExactMatrix::block_diag(&[id3.clone(), id3.neg()]).scale(&c));
    complex_basis("so*(6) complex", "a", gens)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    #[serde(rename = "sl_H")]
    SlH,
    SpStar,
    SoStar,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::SlH => "sl_H",
            Family::SpStar => "sp_star",
            Family::SoStar => "so_star",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sl_H" | "slh" | "sl_h" => Ok(Family::SlH),
            "sp_star" | "spstar" => Ok(Family::SpStar),
            "so_star" | "sostar" => Ok(Family::SoStar),
            other => Err(Error::InvalidDimensions(format!("unknown family {other:?}"))),
        }
    }
}

impl Family {
    /// Closed-form `(dim, n_minus, n_plus, index)` for the Killing form.
    pub fn expected(self, n: usize, p: usize, q: usize) -> (usize, usize, usize, i64) {
        let n = n as i64;
        let (d, nm, np) = match self {
            Family::SoStar => (n * (2 * n - 1), n * n, n * (n - 1)),
            Family::SpStar => {
                let d = n * (2 * n + 1);
                let pq = 4 * (p * q) as i64;
                (d, d - pq, pq)
            }
            Family::SlH => (4 * n * n - 1, n * (2 * n + 1), (n - 1) * (2 * n + 1)),
        };
        (d as usize, nm as usize, np as usize, np - nm)
    }

    pub fn basis_name(self, n: usize, p: usize, q: usize) -> String {
        match self {
            Family::SoStar => format!("so*({})", 2 * n),
            Family::SpStar => format!("sp*({p},{q})"),
            Family::SlH => format!("sl({n},H)"),
        }
    }
}

/// Canonical unnormalized quaternionic basis for a family.
///
/// * so*: `u` at `(i,j)` and `−rev(u)` at `(j,i)` for `i < j`, `u ∈ {1,i,j,k}`,
///   plus `j·E_ii`.
/// * sp*(p,q): `u` at `(i,j)` and `−η_iη_j·u*` at `(j,i)`, plus `i, j, k` on
///   each diagonal slot; `η = I_pq`.
/// * sl_H: every unit off the diagonal, `i, j, k` on the diagonal, and
///   `E_11 − E_kk` for `k ≥ 2`.
pub fn generic_basis(family: Family, n: usize, p: usize, q: usize) -> Result<LieBasis> {
    if n == 0 {
        return Err(Error::InvalidDimensions("n must be at least 1".into()));
    }
    if family == Family::SpStar && p + q != n {
        return Err(Error::InvalidDimensions(format!("p + q = {} but n = {n}", p + q)));
    }
    let eta = |a: usize| if a < p { 1 } else { -1 };
    let mut gens = Vec::new();
    let mut labels = Vec::new();
    let mut push = |m: HMatrix, label: String| {
        gens.push(m);
        labels.push(label);
    };
    for r in 0..n {
        for c in r + 1..n {
            for u in 0..4 {
                let mut m = HMatrix::zeros(n, n);
                let e = unit(u);
                match family {
                    Family::SoStar => put_rev_skew(&mut m, r, c, e),
                    Family::SpStar => {
                        let s = ExactScalar::int(-eta(r) * eta(c));
                        m.set(c, r, e.conj().scale(&s));
                        m.set(r, c, e);
                    }
                    Family::SlH => {
                        m.set(r, c, e.clone());
                        let mut t = HMatrix::zeros(n, n);
                        t.set(c, r, e);
                        push(t, format!("{}@{}{}", UNIT_NAMES[u], c + 1, r + 1));
                    }
                }
                push(m, format!("{}@{}{}", UNIT_NAMES[u], r + 1, c + 1));
            }
        }
    }
    for d in 0..n {
        let units: &[usize] = match family {
            Family::SoStar => &[2],
            Family::SpStar | Family::SlH => &[1, 2, 3],
        };
        for &u in units {
            let mut m = HMatrix::zeros(n, n);
            m.set(d, d, unit(u));
            push(m, format!("{}@{}{}", UNIT_NAMES[u], d + 1, d + 1));
        }
        if family == Family::SlH && d > 0 {
            let mut m = HMatrix::zeros(n, n);
            m.set(0, 0, Quaternion::one());
            m.set(d, d, -Quaternion::one());
            push(m, format!("E11-E{}{}", d + 1, d + 1));
        }
    }
    LieBasis::new(
        family.basis_name(n, p, q),
        Generators::Quaternionic(gens),
        labels,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hmatrix::{is_sostar_algebra, is_spstar_algebra};
    use crate::liealg::structure_constants;

    #[test]
    fn a1_and_s3() {
        let a = basis_sostar4_a();
        let a1 = &a.quaternionic().unwrap()[0];
        assert_eq!(a1.get(0, 1), &Quaternion::real(half()));
        assert_eq!(a1.get(1, 0), &Quaternion::real(-half()));
        assert!(a1.get(0, 0).is_zero());
        let s = basis_su2_sl2_s();
        let s3 = &s.complex().unwrap()[2];
        let want = ExactMatrix::diag(vec![
            ExactComplex::imag(half()),
            ExactComplex::imag(-half()),
            ExactComplex::zero(),
            ExactComplex::zero(),
        ]);
        assert_eq!(s3, &want);
    }

    #[test]
    fn a_basis_generic_element_matches_display() {
        // ½·[[ (θ2+θ5)j, θ1+θ4i−θ3j+θ6k ], [ −θ1−θ4i−θ3j−θ6k, (−θ2+θ5)j ]]
        let a = basis_sostar4_a();
        let g = a.quaternionic().unwrap();
        let theta: Vec<ExactScalar> = [2, 3, 5, 7, 11, 13].iter().map(|&x| ExactScalar::int(x)).collect();
        let mut sum = HMatrix::zeros(2, 2);
        for (t, m) in theta.iter().zip(g) {
            sum = sum.add_ref(&m.map(|q| q.scale(t)));
        }
        let th = |i: usize| theta[i - 1].clone();
        let q = |t: ExactScalar, x: ExactScalar, y: ExactScalar, z: ExactScalar| {
            Quaternion::new(t, x, y, z).scale(&half())
        };
        let z = ExactScalar::zero;
        assert_eq!(sum.get(0, 0), &q(z(), z(), th(2) + th(5), z()));
        assert_eq!(sum.get(0, 1), &q(th(1), th(4), -th(3), th(6)));
        assert_eq!(sum.get(1, 0), &q(-th(1), -th(4), -th(3), -th(6)));
        assert_eq!(sum.get(1, 1), &q(z(), z(), th(5) - th(2), z()));
    }

    #[test]
    fn su31_generators_are_pseudo_antihermitian() {
        let i31 = ExactMatrix::diag(vec![
            ExactComplex::int(1),
            ExactComplex::int(1),
            ExactComplex::int(1),
            ExactComplex::int(-1),
        ]);
        for b in [basis_su31(), basis_su31_twisted()] {
            for s in b.complex().unwrap() {
                assert_eq!(i31.mul_ref(s).mul_ref(&i31), s.dagger().neg());
                assert!(s.trace().is_zero());
            }
        }
        let su31 = basis_su31();
        let s15 = &su31.complex().unwrap()[14];
        assert_eq!(s15.mul_ref(s15).trace(), ExactComplex::real(-half()));
    }

    #[test]
    fn sostar6_quaternionic_members() {
        let b = basis_sostar6_quat();
        for a in b.quaternionic().unwrap() {
            assert!(is_sostar_algebra(a).unwrap());
        }
        // a15 complex form: (i/√6)·diag(I3, −I3)
        let cx = basis_sostar6_complex();
        let a15 = &cx.complex().unwrap()[14];
        let c = ExactComplex::imag(ExactScalar::sqrt6().recip().unwrap());
        assert_eq!(a15.get(0, 0), &c);
        assert_eq!(a15.get(5, 5), &-c);
    }

    #[test]
    fn generic_dimensions() {
        assert_eq!(generic_basis(Family::SoStar, 4, 0, 0).unwrap().dim(), 28);
        assert_eq!(generic_basis(Family::SpStar, 2, 1, 1).unwrap().dim(), 10);
        assert_eq!(generic_basis(Family::SlH, 2, 0, 0).unwrap().dim(), 15);
        assert!(generic_basis(Family::SoStar, 0, 0, 0).is_err());
        assert!(generic_basis(Family::SpStar, 2, 1, 0).is_err());
    }

    #[test]
    fn generic_members() {
        for n in 1..=3 {
            for g in generic_basis(Family::SoStar, n, 0, 0).unwrap().quaternionic().unwrap() {
                assert!(is_sostar_algebra(g).unwrap());
            }
            for p in 0..=n {
                let b = generic_basis(Family::SpStar, n, p, n - p).unwrap();
                for g in b.quaternionic().unwrap() {
                    assert!(is_spstar_algebra(g, p, n - p).unwrap());
                }
            }
            for g in generic_basis(Family::SlH, n, 0, 0).unwrap().quaternionic().unwrap() {
                assert!(g.trace().t.is_zero());
            }
        }
    }

    #[test]
    fn a_basis_bracket_constant() {
        let f = structure_constants(&basis_sostar4_a()).unwrap();
        assert_eq!(f.bracket(0, 1), vec![(2, &ExactScalar::one())]);
    }

    #[test]
    fn family_parsing() {
        assert_eq!("sostar".parse::<Family>().unwrap(), Family::SoStar);
        assert_eq!("sl_H".parse::<Family>().unwrap(), Family::SlH);
        assert!("so".parse::<Family>().is_err());
        assert_eq!(Family::SoStar.expected(4, 0, 0), (28, 16, 12, -4));
        assert_eq!(Family::SpStar.expected(2, 1, 1), (10, 6, 4, -2));
        assert_eq!(Family::SlH.expected(2, 0, 0), (15, 10, 5, -5));
    }
}
