//! The order-3 triality map on spin(2,6) ≅ so*(8).
//!
//! Changes of basis use `X ↦ M⁻¹XM`. The maps `H` and `G` are stored in
//! their defining form; they take the vector basis to L, so one step L → V → R → L
//! applies their inverses `H² = H⁻¹` and `G² = G⁻¹` to the quartets.

use serde_json::json;

use crate::clifford::{pair_index, spin26_generators, spin_pairs, SpinBasisSet};
use crate::error::{Error, Result};
use crate::liealg::constants::gaussian;
use crate::liealg::{killing_matrix, structure_constants, Generators, LieBasis, StructureTensor};
use crate::matrix::ExactMatrix;
use crate::report::{SuiteReport, Tolerance, VerificationReport};
use crate::scalar::{ExactComplex, ExactScalar};

pub type Pair = (usize, usize);

#[derive(Clone, Debug, PartialEq)]
pub struct TrialityQuartets {
    /// Rows A, B, C, D; column `c` is one quartet of commuting generators.
    pub b: [[Pair; 6]; 4],
    pub b_prime: [Pair; 4],
    pub h: ExactMatrix,
    pub g: ExactMatrix,
}

impl TrialityQuartets {
    pub fn quartet(&self, c: usize) -> [Pair; 4] {
        [self.b[0][c], self.b[1][c], self.b[2][c], self.b[3][c]]
    }

    /// The six `B` quartets followed by `B′`.
    pub fn all_quartets(&self) -> Vec<[Pair; 4]> {
        let mut v: Vec<_> = (0..6).map(|c| self.quartet(c)).collect();
        v.push(self.b_prime);
        v
    }
}

pub fn triality_setup() -> TrialityQuartets {
    let half = ExactScalar::frac(1, 2);
    let h = gaussian(
        4,
        4,
        &[
            (-1, 0), (-1, 0), (1, 0), (1, 0),
            (1, 0), (1, 0), (1, 0), (1, 0),
            (-1, 0), (1, 0), (1, 0), (-1, 0),
            (-1, 0), (1, 0), (-1, 0), (1, 0),
        ],
    )
    .scale_real(&half);
    let g = gaussian(
        4,
        4,
        &[
            (-1, 0), (-1, 0), (0, 1), (0, -1),
            (1, 0), (1, 0), (0, 1), (0, -1),
            (0, 1), (0, -1), (1, 0), (1, 0),
            (0, -1), (0, 1), (1, 0), (1, 0),
        ],
    )
    .scale_real(&half);
    TrialityQuartets {
        b: [
            [(0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (0, 7)],
            [(1, 3), (1, 2), (1, 5), (1, 4), (1, 7), (1, 6)],
            [(5, 7), (4, 7), (3, 7), (3, 6), (2, 4), (2, 5)],
            [(4, 6), (5, 6), (2, 6), (2, 7), (3, 5), (3, 4)],
        ],
        b_prime: [(0, 1), (2, 3), (4, 5), (6, 7)],
        h,
        g,
    }
}

fn recombine(m: &ExactMatrix, q: [Pair; 4], old: &[ExactMatrix], new: &mut [ExactMatrix]) {
    for r in 0..4 {
        let mut acc = ExactMatrix::zeros(old[0].rows(), old[0].cols());
        for (s, &p) in q.iter().enumerate() {
            let c = m.get(r, s);
            if !c.is_zero() {
                acc = acc.add_ref(&old[pair_index(p.0, p.1)].scale(c));
            }
        }
        new[pair_index(q[r].0, q[r].1)] = acc;
    }
}

/// One triality step on 28 generators given in pair order.
pub fn apply_triality(t: &TrialityQuartets, basis: &[ExactMatrix]) -> Result<Vec<ExactMatrix>> {
    if basis.len() != 28 {
        return Err(Error::InvalidDimensions(format!("expected 28 generators, got {}", basis.len())));
    }
    let g_inv = t.g.mul_ref(&t.g);
    let h_inv = t.h.mul_ref(&t.h);
    let mut out = basis.to_vec();
    for c in 0..6 {
        recombine(&g_inv, t.quartet(c), basis, &mut out);
    }
    recombine(&h_inv, t.b_prime, basis, &mut out);
    Ok(out)
}

/// `diag(i, i, 1, …, 1)`
pub fn change_u() -> ExactMatrix {
    let mut u = ExactMatrix::identity(8);
    u.set(0, 0, ExactComplex::i());
    u.set(1, 1, ExactComplex::i());
    u
}

/// `diag(−1, 1, …, 1)`
pub fn change_p() -> ExactMatrix {
    let mut p = ExactMatrix::identity(8);
    p.set(0, 0, ExactComplex::int(-1));
    p
}

/// `I_{2,6}`
pub fn i26() -> ExactMatrix {
    ExactMatrix::diag([1, 1, -1, -1, -1, -1, -1, -1].map(ExactComplex::int).to_vec())
}

fn conjugate_all(gens: &[ExactMatrix], m: &ExactMatrix) -> Result<Vec<ExactMatrix>> {
    let inv = m.inverse()?;
    Ok(gens.iter().map(|x| inv.mul_ref(x).mul_ref(m)).collect())
}

pub fn is_i26_antisymmetric(x: &ExactMatrix) -> bool {
    let g = i26();
    g.mul_ref(&x.transpose().neg()).mul_ref(&g) == *x
}

/// The vector-representation matrices read off the reference sign table:
/// entry `(r, c)` of `V_ij` is `±1` where the table shows `±θ_ij`.
pub fn vector_basis_table() -> Vec<ExactMatrix> {
    const TABLE: [[&str; 8]; 8] = [
        ["0", "01", "02", "-03", "04", "05", "06", "07"],
        ["-01", "0", "-12", "-13", "14", "-15", "16", "-17"],
        ["02", "-12", "0", "23", "24", "-25", "26", "-27"],
        ["-03", "-13", "-23", "0", "34", "35", "36", "37"],
        ["04", "14", "-24", "-34", "0", "-45", "-46", "47"],
        ["05", "-15", "25", "-35", "45", "0", "-56", "-57"],
        ["06", "16", "-26", "-36", "46", "56", "0", "-67"],
        ["07", "-17", "27", "-37", "-47", "57", "67", "0"],
    ];
    let mut out = vec![ExactMatrix::zeros(8, 8); 28];
    for (r, row) in TABLE.iter().enumerate() {
        for (c, e) in row.iter().enumerate() {
            if *e == "0" {
                continue;
            }
            let (sign, digits) = match e.strip_prefix('-') {
                Some(d) => (-1, d.as_bytes()),
                None => (1, e.as_bytes()),
            };
            let p = pair_index((digits[0] - b'0') as usize, (digits[1] - b'0') as usize);
            out[p].set(r, c, ExactComplex::int(sign));
        }
    }
    out
}

/// `L′ = U⁻¹LU`, `V = T(L′)`, `R′ = (UP)⁻¹R(UP)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TrialityBases {
    pub l: Vec<ExactMatrix>,
    pub v: Vec<ExactMatrix>,
    pub r: Vec<ExactMatrix>,
}

pub fn triality_bases(set: &SpinBasisSet, t: &TrialityQuartets) -> Result<TrialityBases> {
    let u = change_u();
    let l = conjugate_all(&set.l, &u)?;
    let r = conjugate_all(&set.r, &u.mul_ref(&change_p()))?;
    let v = apply_triality(t, &l)?;
    if let Some(p) = v.iter().position(|x| !x.is_real()) {
        let (i, j) = spin_pairs()[p];
        return Err(Error::Construction(format!("V_{i}{j} has a non-real entry")));
    }
    if let Some(p) = v.iter().position(|x| !is_i26_antisymmetric(x)) {
        let (i, j) = spin_pairs()[p];
        return Err(Error::Construction(format!("V_{i}{j} is not I(2,6)-antisymmetric")));
    }
    Ok(TrialityBases { l, v, r })
}

fn labels(prefix: &str) -> Vec<String> {
    spin_pairs().iter().map(|(i, j)| format!("{prefix}{i}{j}")).collect()
}

fn tensor(name: &str, prefix: &str, gens: &[ExactMatrix]) -> Result<StructureTensor> {
    structure_constants(&LieBasis::new(name, Generators::Complex(gens.to_vec()), labels(prefix))?)
}

fn pair_names(ps: &[Pair]) -> Vec<String> {
    ps.iter().map(|(i, j)| format!("{i}{j}")).collect()
}

pub fn verify_triality() -> SuiteReport {
    let t = triality_setup();
    let id4 = ExactMatrix::identity(4);

    let mut maps = VerificationReport::new("triality.maps", Tolerance::Exact);
    maps.check("H^3 = I", t.h.pow(3) == id4, true);
    maps.check("G^3 = I", t.g.pow(3) == id4, true);
    maps.check("H is real", t.h.is_real(), true);

    let mut quart = VerificationReport::new("triality.quartets", Tolerance::Exact);
    let mut cover: Vec<Pair> = t.all_quartets().into_iter().flatten().collect();
    cover.sort_unstable();
    cover.dedup();
    quart.check("quartets cover all 28 generators once", cover.len() == 28, cover.len());

    let set = match spin26_generators() {
        Ok(s) => s,
        Err(e) => {
            quart.fail("build spin generators", e);
            return SuiteReport::new("triality", vec![maps, quart]);
        }
    };
    let commuting = t.all_quartets().iter().all(|q| {
        q.iter().all(|a| {
            q.iter().all(|b| {
                let (x, y) = (&set.l[pair_index(a.0, a.1)], &set.l[pair_index(b.0, b.1)]);
                x.commutator(y).is_zero()
            })
        })
    });
    quart.check("generators within each quartet commute", commuting, commuting);
    match tensor("spin(2,6) L", "L", &set.l) {
        Ok(f) => {
            let k = killing_matrix(&f);
            let compact = |p: &Pair| k.get(pair_index(p.0, p.1), pair_index(p.0, p.1)).is_negative();
            let counts: Vec<usize> = (0..6)
                .map(|c| t.quartet(c).iter().filter(|p| compact(p)).count())
                .collect();
            quart.check(
                "each B quartet has two compact and two non-compact generators",
                counts.iter().all(|&n| n == 2),
                &counts,
            );
            let bp = t.b_prime.iter().filter(|p| compact(p)).count();
            quart.check("B' consists of four compact generators", bp == 4, bp);
        }
        Err(e) => quart.fail("structure constants of L", e),
    }

    let mut orth = VerificationReport::new("triality.orthogonal_structure", Tolerance::Exact);
    let u = change_u();
    let form = u.transpose().mul_ref(&u);
    let sign = if form == i26() {
        Some(1)
    } else if form == i26().neg() {
        Some(-1)
    } else {
        None
    };
    orth.check("U^T g U = +/- I(2,6), g = I", sign.is_some(), json!({ "sign": sign }));

    let mut vec_rep = VerificationReport::new("triality.vector_basis", Tolerance::Exact);
    let mut sc = VerificationReport::new("triality.structure_constants", Tolerance::Exact);
    let mut cyc = VerificationReport::new("triality.cycle", Tolerance::Exact);
    let bases = match triality_bases(&set, &t) {
        Ok(b) => b,
        Err(e) => {
            vec_rep.fail("build V = T(L')", e);
            return SuiteReport::new("triality", vec![maps, quart, orth, vec_rep]);
        }
    };
    let bad_l: Vec<Pair> = spin_pairs()
        .into_iter()
        .zip(&bases.l)
        .filter(|(_, x)| !is_i26_antisymmetric(x))
        .map(|(p, _)| p)
        .collect();
    orth.check(
        "every L'_ij is antisymmetric for the transformed form",
        bad_l.is_empty(),
        json!({ "failures": pair_names(&bad_l) }),
    );

    vec_rep.check("V has only real entries", true, true);
    vec_rep.check("I(2,6) (-V^T) I(2,6) = V", true, true);
    let table = vector_basis_table();
    let mism: Vec<Pair> = spin_pairs()
        .into_iter()
        .enumerate()
        .filter(|&(p, _)| bases.v[p] != table[p])
        .map(|(_, q)| q)
        .collect();
    vec_rep.check(
        "V matches the reference sign table entry for entry",
        mism.is_empty(),
        json!({ "mismatches": pair_names(&mism) }),
    );

    match (
        tensor("L'", "L", &bases.l),
        tensor("V", "V", &bases.v),
        tensor("R'", "R", &bases.r),
    ) {
        (Ok(fl), Ok(fv), Ok(fr)) => {
            sc.check("f(L') = f(V)", fl == fv, fl.differences(&fv).len());
            sc.check("f(V) = f(R')", fv == fr, fv.differences(&fr).len());
            sc.check("f(R') = f(L')", fr == fl, fr.differences(&fl).len());
        }
        _ => sc.fail("structure constants", "a basis is dependent or not closed"),
    }

    let step = |x: &[ExactMatrix]| apply_triality(&t, x);
    match (step(&bases.v), step(&bases.r)) {
        (Ok(tv), Ok(tr)) => {
            cyc.check("T(L') = V", true, true);
            cyc.check("T(V) = R'", tv == bases.r, true);
            cyc.check("T(R') = L'", tr == bases.l, true);
        }
        (Err(e), _) | (_, Err(e)) => cyc.fail("apply triality", e),
    }
    let thrice = step(&bases.l).and_then(|x| step(&x)).and_then(|x| step(&x));
    cyc.check(
        "three applications are the identity on all 28 generators",
        thrice.as_ref().is_ok_and(|x| *x == bases.l),
        true,
    );

    SuiteReport::new("triality", vec![maps, quart, orth, vec_rep, sc, cyc])
}
