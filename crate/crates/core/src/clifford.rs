//! Cl(7,0) and Cl(2,6), the spin(2,6) generators `S_ij = ½Γ_iΓ_j`, their
//! left/right 8×8 blocks, and the identification with so*(8).

use std::collections::BTreeMap;

use serde_json::json;

use crate::error::{Error, Result};
use crate::hmatrix::{embed_matrix, is_sostar_algebra, quaternionic_structure_commutant_check};
use crate::liealg::bases::put_rev_skew;
use crate::liealg::constants::{dirac, pauli};
use crate::liealg::{structure_constants, Generators, LieBasis, StructureTensor};
use crate::linalg::rank;
use crate::matrix::{CMatrix, ExactMatrix, HMatrix, Matrix};
use crate::quaternion::Quaternion;
use crate::report::{SuiteReport, Tolerance, VerificationReport};
use crate::scalar::{ExactComplex, ExactScalar};

/// Generators with a diagonal metric: `γ_i γ_j + γ_j γ_i = 2 η_i δ_ij I`.
#[derive(Clone, Debug, PartialEq)]
pub struct CliffordBasis {
    pub generators: Vec<ExactMatrix>,
    pub metric: Vec<i64>,
}

impl CliffordBasis {
    /// Pairs `(i, j)`, `i ≤ j`, where the defining relation fails.
    pub fn violations(&self) -> Vec<(usize, usize)> {
        let n = self.generators.first().map_or(0, Matrix::rows);
        let mut out = Vec::new();
        for i in 0..self.generators.len() {
            for j in i..self.generators.len() {
                let ac = self.generators[i].anticommutator(&self.generators[j]);
                let want = if i == j {
                    ExactMatrix::identity(n).scale(&ExactComplex::int(2 * self.metric[i]))
                } else {
                    ExactMatrix::zeros(n, n)
                };
                if ac != want {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn validate(&self) -> Result<()> {
        match self.violations().first() {
            Some(&(i, j)) => Err(Error::CliffordViolation { i, j }),
            None => Ok(()),
        }
    }
}

fn cl7_with_g5_sign(g5_sign: i64) -> CliffordBasis {
    let s = pauli();
    let (sx, sy, sz) = (&s[0], &s[1], &s[2]);
    let d = dirac();
    let (g0, g1, g2, g3, g5) = (&d[0], &d[1], &d[2], &d[3], &d[4]);
    let id2 = ExactMatrix::identity(2);
    let i = ExactComplex::i();
    let mi = -ExactComplex::i();
    let generators = vec![
        id2.kron(&g1.mul_ref(g3)).scale(&mi),
        sz.kron(g3).scale(&i),
        id2.kron(g1).scale(&mi),
        sy.kron(&g1.mul_ref(g2)).scale(&mi),
        sy.kron(&g1.mul_ref(g5)).scale(&ExactComplex::int(g5_sign)),
        sx.kron(g3).scale(&i),
        sy.kron(&g0.mul_ref(g1)).neg(),
    ];
    CliffordBasis {
        generators,
        metric: vec![1; 7],
    }
}

/// Cl(7,0) generators `g_1 … g_7` as 8×8 matrices.
///
/// `g_5` is taken as `−σ_y ⊗ γ¹γ⁵`. Either sign satisfies the Clifford
/// relations, but only this one makes the so*(8) dictionary and the real
/// vector representation come out exactly; see [`cl7_basis_alt_g5`].
pub fn cl7_basis() -> CliffordBasis {
    cl7_with_g5_sign(-1)
}

/// Cl(7,0) with `g_5 = +σ_y ⊗ γ¹γ⁵`.
pub fn cl7_basis_alt_g5() -> CliffordBasis {
    cl7_with_g5_sign(1)
}

/// Cl(2,6) generators `Γ_0 … Γ_7` (16×16) built from a Cl(7,0) basis.
pub fn cl26_from(cl7: &CliffordBasis) -> Result<CliffordBasis> {
    cl7.validate()?;
    let id8 = ExactMatrix::identity(8);
    let z8 = ExactMatrix::zeros(8, 8);
    let mut generators = vec![ExactMatrix::from_blocks(&z8, &id8, &id8, &z8)];
    for (mu, g) in cl7.generators.iter().enumerate() {
        let m = ExactMatrix::from_blocks(&z8, g, &g.neg(), &z8);
        generators.push(if mu == 0 { m.scale(&ExactComplex::i()) } else { m });
    }
    let mut metric = vec![1, 1];
    metric.extend([-1; 6]);
    let b = CliffordBasis { generators, metric };
    b.validate()?;
    Ok(b)
}

pub fn cl26_basis() -> Result<CliffordBasis> {
    cl26_from(&cl7_basis())
}

/// Pairs `(i, j)` with `0 ≤ i < j ≤ 7` in lexicographic order.
pub fn spin_pairs() -> Vec<(usize, usize)> {
    (0..8).flat_map(|i| (i + 1..8).map(move |j| (i, j))).collect()
}

pub fn pair_index(i: usize, j: usize) -> usize {
    spin_pairs()
        .iter()
        .position(|&p| p == (i, j))
        .expect("pair with i < j <= 7")
}

/// Generators whose sign is flipped after `S_ij = ½Γ_iΓ_j`.
pub const SIGN_FLIPS: [(usize, usize); 6] = [(1, 2), (1, 5), (1, 7), (2, 4), (2, 6), (4, 7)];

#[derive(Clone, Debug, PartialEq)]
pub struct SpinBasisSet {
    pub pairs: Vec<(usize, usize)>,
    pub s: Vec<ExactMatrix>,
    pub l: Vec<ExactMatrix>,
    pub r: Vec<ExactMatrix>,
    pub sign_flips: Vec<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chirality {
    Left,
    Right,
}

impl SpinBasisSet {
    pub fn rep(&self, c: Chirality) -> &[ExactMatrix] {
        match c {
            Chirality::Left => &self.l,
            Chirality::Right => &self.r,
        }
    }

    pub fn labels(&self, prefix: &str) -> Vec<String> {
        self.pairs.iter().map(|(i, j)| format!("{prefix}{i}{j}")).collect()
    }

    pub fn basis(&self, c: Chirality) -> Result<LieBasis> {
        let (name, prefix) = match c {
            Chirality::Left => ("spin(2,6) L", "L"),
            Chirality::Right => ("spin(2,6) R", "R"),
        };
        LieBasis::new(name, Generators::Complex(self.rep(c).to_vec()), self.labels(prefix))
    }
}

/// `S_ij` with sign flips applied, then split into the diagonal 8×8 blocks.
pub fn spin_generators_from(cl26: &CliffordBasis) -> Result<SpinBasisSet> {
    let g = &cl26.generators;
    let pairs = spin_pairs();
    let half = ExactScalar::frac(1, 2);
    let (mut s, mut l, mut r) = (Vec::new(), Vec::new(), Vec::new());
    for &(i, j) in &pairs {
        let mut m = g[i].mul_ref(&g[j]).scale_real(&half);
        if SIGN_FLIPS.contains(&(i, j)) {
            m = m.neg();
        }
        if !m.block(0, 8, 8, 8).is_zero() || !m.block(8, 0, 8, 8).is_zero() {
            return Err(Error::Construction(format!("S_{i}{j} has a nonzero off-diagonal block")));
        }
        l.push(m.block(0, 0, 8, 8));
        r.push(m.block(8, 8, 8, 8));
        s.push(m);
    }
    Ok(SpinBasisSet {
        pairs,
        s,
        l,
        r,
        sign_flips: SIGN_FLIPS.to_vec(),
    })
}

pub fn spin26_generators() -> Result<SpinBasisSet> {
    spin_generators_from(&cl26_basis()?)
}

/// `diag(ε, ε, ε, ε)` with `ε = [[0, −1], [1, 0]]`.
pub fn quaternionic_j8() -> ExactMatrix {
    let eps = ExactMatrix::from_ints(2, 2, &[0, -1, 1, 0]);
    ExactMatrix::block_diag(&[eps.clone(), eps.clone(), eps.clone(), eps])
}

/// `J s* J⁻¹ = s` and `−sᵀ = s` for every generator of one block, and `J J* = −I`.
pub fn check_sostar8_structure(set: &SpinBasisSet, c: Chirality) -> VerificationReport {
    let name = match c {
        Chirality::Left => "L",
        Chirality::Right => "R",
    };
    let mut r = VerificationReport::new(format!("sostar8.structure.{name}"), Tolerance::Exact);
    let j = quaternionic_j8();
    let jj = j.mul_ref(&j.conj());
    r.check("J J* = -I", jj == ExactMatrix::identity(8).neg(), jj == ExactMatrix::identity(8).neg());
    let jc = CMatrix::Exact(j);
    let mut bad_quat = Vec::new();
    let mut bad_orth = Vec::new();
    for (s, (a, b)) in set.rep(c).iter().zip(&set.pairs) {
        let label = format!("{name}{a}{b}");
        match quaternionic_structure_commutant_check(&CMatrix::Exact(s.clone()), &jc, 0.0) {
            Ok(true) => {}
            Ok(false) => bad_quat.push(label.clone()),
            Err(e) => bad_quat.push(format!("{label}: {e}")),
        }
        if s.transpose().neg() != *s {
            bad_orth.push(label);
        }
    }
    r.check("J s* J^-1 = s for all 28 generators", bad_quat.is_empty(), json!({ "failures": bad_quat }));
    r.check("-s^T = s for all 28 generators", bad_orth.is_empty(), json!({ "failures": bad_orth }));
    r
}

/// The generic so*(8) element `½·(…)` in the parameters `a_1 … a_28`.
pub fn sostar8_generic(a: &[ExactScalar]) -> Result<HMatrix> {
    if a.len() != 28 {
        return Err(Error::InvalidDimensions(format!("expected 28 parameters, got {}", a.len())));
    }
    let av = |k: usize| a[k - 1].clone();
    let half = ExactScalar::frac(1, 2);
    let mut m = HMatrix::zeros(4, 4);
    for (d, k) in [1usize, 14, 23, 28].into_iter().enumerate() {
        m.set(d, d, Quaternion::j().scale(&av(k)));
    }
    // (slot, first parameter): entry = a_k + a_{k+1} i + a_{k+2} j + a_{k+3} k
    for ((r, c), k) in [((0, 1), 2), ((0, 2), 6), ((0, 3), 10), ((1, 2), 15), ((1, 3), 19), ((2, 3), 24)] {
        put_rev_skew(&mut m, r, c, Quaternion::new(av(k), av(k + 1), av(k + 2), av(k + 3)));
    }
    Ok(m.map(|q| q.scale(&half)))
}

/// `a_k` as signed sums of `θ_ij`.
const DICTIONARY: [&[(i64, usize, usize)]; 28] = [
    &[(1, 0, 1), (-1, 2, 3), (1, 4, 5), (1, 6, 7)],
    &[(1, 4, 6), (-1, 5, 7)],
    &[(1, 0, 3), (-1, 1, 2)],
    &[(1, 5, 6), (-1, 4, 7)],
    &[(1, 1, 3), (-1, 0, 2)],
    &[(1, 2, 6), (-1, 3, 7)],
    &[(1, 1, 4), (-1, 0, 5)],
    &[(1, 3, 6), (-1, 2, 7)],
    &[(1, 1, 5), (-1, 0, 4)],
    &[(1, 3, 5), (-1, 2, 4)],
    &[(1, 1, 6), (-1, 0, 7)],
    &[(1, 2, 5), (-1, 3, 4)],
    &[(1, 1, 7), (-1, 0, 6)],
    &[(1, 0, 1), (-1, 2, 3), (-1, 4, 5), (-1, 6, 7)],
    &[(1, 2, 4), (1, 3, 5)],
    &[(-1, 0, 7), (-1, 1, 6)],
    &[(1, 2, 5), (1, 3, 4)],
    &[(1, 0, 6), (1, 1, 7)],
    &[(1, 2, 6), (1, 3, 7)],
    &[(1, 0, 5), (1, 1, 4)],
    &[(1, 2, 7), (1, 3, 6)],
    &[(-1, 0, 4), (-1, 1, 5)],
    &[(1, 0, 1), (1, 2, 3), (1, 4, 5), (-1, 6, 7)],
    &[(-1, 4, 6), (-1, 5, 7)],
    &[(1, 0, 3), (1, 1, 2)],
    &[(-1, 4, 7), (-1, 5, 6)],
    &[(1, 0, 2), (1, 1, 3)],
    &[(1, 0, 1), (1, 2, 3), (-1, 4, 5), (1, 6, 7)],
];

/// The 28×28 integer matrix taking `θ` (pair order) to `a`.
pub fn dictionary_matrix() -> Matrix<ExactScalar> {
    let mut m = Matrix::zeros(28, 28);
    for (k, terms) in DICTIONARY.iter().enumerate() {
        for &(s, i, j) in *terms {
            m.set(k, pair_index(i, j), ExactScalar::int(s));
        }
    }
    m
}

/// Parameters `a_1 … a_28` from `θ_ij` given in [`spin_pairs`] order.
pub fn theta_vec_to_a(theta: &[ExactScalar]) -> Result<Vec<ExactScalar>> {
    if theta.len() != 28 {
        return Err(Error::InvalidDimensions(format!("expected 28 angles, got {}", theta.len())));
    }
    Ok(DICTIONARY
        .iter()
        .map(|terms| {
            let mut s = ExactScalar::zero();
            for &(sign, i, j) in *terms {
                let t = &theta[pair_index(i, j)];
                if sign > 0 {
                    s += t;
                } else {
                    s -= t;
                }
            }
            s
        })
        .collect())
}

/// Parameters `a_1 … a_28` from `θ_ij`; missing pairs are zero.
pub fn theta_to_a(theta: &BTreeMap<(usize, usize), ExactScalar>) -> Result<Vec<ExactScalar>> {
    let mut v = vec![ExactScalar::zero(); 28];
    for (&(i, j), t) in theta {
        if i >= j || j > 7 {
            return Err(Error::InvalidDimensions(format!("no generator ({i}, {j})")));
        }
        v[pair_index(i, j)] = t.clone();
    }
    theta_vec_to_a(&v)
}

/// Pairs whose unit-θ image under the dictionary differs from `L_ij`.
pub fn dictionary_mismatches(l: &[ExactMatrix]) -> Vec<(usize, usize)> {
    spin_pairs()
        .into_iter()
        .enumerate()
        .filter(|&(p, _)| {
            let mut theta = vec![ExactScalar::zero(); 28];
            theta[p] = ExactScalar::one();
            let a = theta_vec_to_a(&theta).expect("28 angles");
            embed_matrix(&sostar8_generic(&a).expect("28 parameters")) != l[p]
        })
        .map(|(_, pair)| pair)
        .collect()
}

/// Clifford relations, block structure, the quaternionic checks on L and
/// R, and the θ → a dictionary.
pub fn verify_sostar8() -> SuiteReport {
    let mut cl = VerificationReport::new("sostar8.clifford", Tolerance::Exact);
    let cl7 = cl7_basis();
    cl.check("Cl(7,0): squares +1 and pairwise anticommutation", cl7.violations().is_empty(), json!({ "violations": cl7.violations() }));
    let alt = cl7_basis_alt_g5();
    cl.note("Cl(7,0) relations also hold with g5 = +sigma_y (x) gamma1 gamma5", alt.violations().is_empty());
    let cl26 = match cl26_from(&cl7) {
        Ok(b) => b,
        Err(e) => {
            cl.fail("build Cl(2,6)", e);
            return SuiteReport::new("sostar8", vec![cl]);
        }
    };
    cl.check("Cl(2,6): all relations exact", true, json!({ "violations": cl26.violations() }));
    cl.check("Cl(2,6) metric is (+,+,-,-,-,-,-,-)", cl26.metric == [1, 1, -1, -1, -1, -1, -1, -1], &cl26.metric);

    let mut sp = VerificationReport::new("sostar8.spin_generators", Tolerance::Exact);
    let set = match spin_generators_from(&cl26) {
        Ok(s) => s,
        Err(e) => {
            sp.fail("build S_ij", e);
            return SuiteReport::new("sostar8", vec![cl, sp]);
        }
    };
    sp.check("28 generators, each block diagonal", set.s.len() == 28, set.s.len());
    let tensors: Vec<Result<StructureTensor>> = [
        LieBasis::new("spin(2,6) S", Generators::Complex(set.s.clone()), set.labels("S")),
        set.basis(Chirality::Left),
        set.basis(Chirality::Right),
    ]
    .into_iter()
    .map(|b| b.and_then(|b| structure_constants(&b)))
    .collect();
    match (&tensors[0], &tensors[1], &tensors[2]) {
        (Ok(fs), Ok(fl), Ok(fr)) => {
            sp.check("f(S) = f(L) = f(R)", fs == fl && fl == fr, json!({ "nonzero": fs.nonzero_count() }));
            sp.check("Jacobi identity", fs.jacobi_holds(), true);
        }
        _ => sp.fail("structure constants", "a spin basis is dependent or not closed"),
    }

    let sl = check_sostar8_structure(&set, Chirality::Left);
    let sr = check_sostar8_structure(&set, Chirality::Right);

    let mut dict = VerificationReport::new("sostar8.dictionary", Tolerance::Exact);
    let dm = dictionary_matrix();
    let rk = rank(&dm);
    dict.check("theta -> a is a bijection (rank 28)", rk == 28, rk);
    let mism = dictionary_mismatches(&set.l);
    dict.check(
        "embed(A(a(theta))) = sum theta_ij L_ij for every basis direction",
        mism.is_empty(),
        json!({ "mismatches": mism }),
    );
    let members = (0..28).all(|k| {
        let mut a = vec![ExactScalar::zero(); 28];
        a[k] = ExactScalar::one();
        sostar8_generic(&a)
            .and_then(|m| is_sostar_algebra(&m))
            .unwrap_or(false)
    });
    dict.check("every basis matrix M_k passes the so*(8) predicate", members, members);
    if let Ok(alt_set) = cl26_from(&alt).and_then(|c| spin_generators_from(&c)) {
        dict.note(
            "dictionary mismatches with g5 = +sigma_y (x) gamma1 gamma5",
            dictionary_mismatches(&alt_set.l),
        );
    }

    SuiteReport::new("sostar8", vec![cl, sp, sl, sr, dict])
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cl7_examples() {
        let c = cl7_basis();
        assert_eq!(c.generators.len(), 7);
        assert!(c.generators.iter().all(|g| g.shape() == (8, 8)));
        assert_eq!(c.generators[0].mul_ref(&c.generators[0]), ExactMatrix::identity(8));
        assert!(c.generators[1].anticommutator(&c.generators[2]).is_zero());
        assert!(c.violations().is_empty());
        assert!(cl7_basis_alt_g5().violations().is_empty());
    }

    #[test]
    fn cl26_examples() {
        let c = cl26_basis().unwrap();
        let g = &c.generators;
        assert_eq!(g[0].mul_ref(&g[0]), ExactMatrix::identity(16));
        assert_eq!(g[3].mul_ref(&g[3]), ExactMatrix::identity(16).neg());
        assert!(g[0].anticommutator(&g[5]).is_zero());
    }

    #[test]
    fn broken_clifford_basis_is_rejected() {
        let mut c = cl7_basis();
        c.generators[3] = c.generators[2].clone();
        assert!(matches!(cl26_from(&c), Err(Error::CliffordViolation { .. })));
    }

    #[test]
    fn spin_generators_and_flips() {
        let set = spin26_generators().unwrap();
        assert_eq!(set.s.len(), 28);
        let g = cl26_basis().unwrap().generators;
        let p12 = pair_index(1, 2);
        let plain = g[1].mul_ref(&g[2]).scale_real(&ExactScalar::frac(1, 2));
        assert_eq!(set.s[p12], plain.neg());
        let s03 = &set.s[pair_index(0, 3)];
        assert!(s03.block(0, 8, 8, 8).is_zero() && s03.block(8, 0, 8, 8).is_zero());
    }

    #[test]
    fn structure_checks_pass() {
        let set = spin26_generators().unwrap();
        for c in [Chirality::Left, Chirality::Right] {
            let r = check_sostar8_structure(&set, c);
            assert!(r.passed, "{r:#?}");
        }
    }

    #[test]
    fn dictionary_examples() {
        let zero = theta_to_a(&BTreeMap::new()).unwrap();
        assert!(zero.len() == 28 && zero.iter().all(ExactScalar::is_zero));
        let a = theta_to_a(&BTreeMap::from([((0, 1), ExactScalar::one())])).unwrap();
        for (k, v) in a.iter().enumerate() {
            let want = [0, 13, 22, 27].contains(&k);
            assert_eq!(*v, ExactScalar::int(want as i64), "a{}", k + 1);
        }
        let a = theta_to_a(&BTreeMap::from([((4, 6), ExactScalar::one())])).unwrap();
        for (k, v) in a.iter().enumerate() {
            let want = match k {
                1 => 1,
                23 => -1,
                _ => 0,
            };
            assert_eq!(*v, ExactScalar::int(want), "a{}", k + 1);
        }
        assert!(theta_to_a(&BTreeMap::from([((3, 3), ExactScalar::one())])).is_err());
    }

    #[test]
    fn dictionary_identity_and_alternative_sign() {
        let set = spin26_generators().unwrap();
        assert!(dictionary_mismatches(&set.l).is_empty());
        let alt = spin_generators_from(&cl26_from(&cl7_basis_alt_g5()).unwrap()).unwrap();
        let bad = dictionary_mismatches(&alt.l);
        assert_eq!(bad.len(), 7);
        assert!(bad.iter().all(|&(i, j)| i == 5 || j == 5));
    }

    #[test]
    fn sostar8_suite_passes() {
        let r = verify_sostar8();
        assert!(r.passed(), "{r:#?}");
    }

    fn arb_params() -> impl Strategy<Value = Vec<ExactScalar>> {
        prop::collection::vec((-6i64..=6, 1i64..=4).prop_map(|(n, d)| ExactScalar::frac(n, d)), 28)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(20))]

        #[test]
        fn generic_element_is_in_sostar8(a in arb_params()) {
            prop_assert!(is_sostar_algebra(&sostar8_generic(&a).unwrap()).unwrap());
        }

        #[test]
        fn dictionary_is_linear_identity(theta in arb_params()) {
            let l = &spin26_generators().unwrap().l;
            let mut sum = ExactMatrix::zeros(8, 8);
            for (t, m) in theta.iter().zip(l) {
                sum = sum.add_ref(&m.scale_real(t));
            }
            let a = theta_vec_to_a(&theta).unwrap();
            prop_assert_eq!(embed_matrix(&sostar8_generic(&a).unwrap()), sum);
        }
    }
}
