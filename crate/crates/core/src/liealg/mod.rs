//! Lie-algebra bases, structure constants, Killing forms and commutants.
//!
//! "Index" below means `n_plus − n_minus` of the Killing signature. It is a
//! basis-independent invariant, unlike the literal trace of the Killing
//! matrix, and it is the quantity tabulated as Tr(K) for the quaternionic
//! families (−n for so*, 8pq − n(2n+1) for sp*, −2n − 1 for sl_H).

pub mod bases;
pub mod constants;
pub mod expm;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hmatrix::{dagger, embed_matrix, hmatrix_real_coords};
use crate::linalg::{nullspace, rank, symmetric_signature, CoordinateSolver};
use crate::matrix::{ExactMatrix, HMatrix, Matrix};
use crate::scalar::{ExactComplex, ExactScalar};

pub use bases::{
    basis_sostar4_a, basis_sostar6_complex, basis_sostar6_quat, basis_su2_sl2_s, basis_su31,
    basis_su31_twisted, generic_basis, Family,
};
pub use expm::{expm, matrix_exp};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Realization {
    Quaternionic,
    ComplexExact,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Generators {
    Quaternionic(Vec<HMatrix>),
    Complex(Vec<ExactMatrix>),
}

impl Generators {
    pub fn len(&self) -> usize {
        match self {
            Generators::Quaternionic(g) => g.len(),
            Generators::Complex(g) => g.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn shapes(&self) -> Vec<(usize, usize)> {
        match self {
            Generators::Quaternionic(g) => g.iter().map(Matrix::shape).collect(),
            Generators::Complex(g) => g.iter().map(Matrix::shape).collect(),
        }
    }
}

/// Real coordinates of a complex matrix: `(re, im)` per entry, row-major.
pub fn complex_real_coords(m: &ExactMatrix) -> Vec<ExactScalar> {
    m.entries()
        .iter()
        .flat_map(|z| [z.re.clone(), z.im.clone()])
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct LieBasis {
    name: String,
    generators: Generators,
    labels: Vec<String>,
}

impl LieBasis {
    /// Validates shapes, labels and linear independence over ℝ.
    pub fn new(name: impl Into<String>, generators: Generators, labels: Vec<String>) -> Result<Self> {
        let shapes = generators.shapes();
        if shapes.is_empty() {
            return Err(Error::InvalidDimensions("empty basis".into()));
        }
        if shapes.iter().any(|s| *s != shapes[0] || s.0 != s.1) {
            return Err(Error::ShapeMismatch("generators must share one square shape".into()));
        }
        if labels.len() != generators.len() {
            return Err(Error::InvalidDimensions(format!(
                "{} labels for {} generators",
                labels.len(),
                generators.len()
            )));
        }
        let basis = Self {
            name: name.into(),
            generators,
            labels,
        };
        let coords = basis.coordinate_matrix();
        let r = rank(&coords);
        if r < basis.dim() {
            return Err(Error::LinearlyDependent {
                rank: r,
                count: basis.dim(),
            });
        }
        Ok(basis)
    }

    /// Labels `prefix1, prefix2, …`.
    pub fn numbered(name: impl Into<String>, prefix: &str, generators: Generators) -> Result<Self> {
        let labels = (1..=generators.len()).map(|i| format!("{prefix}{i}")).collect();
        Self::new(name, generators, labels)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn generators(&self) -> &Generators {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn realization(&self) -> Realization {
        match self.generators {
            Generators::Quaternionic(_) => Realization::Quaternionic,
            Generators::Complex(_) => Realization::ComplexExact,
        }
    }

    /// Order of the (square) generator matrices.
    pub fn matrix_order(&self) -> usize {
        self.generators.shapes()[0].0
    }

    pub fn quaternionic(&self) -> Option<&[HMatrix]> {
        match &self.generators {
            Generators::Quaternionic(g) => Some(g),
            Generators::Complex(_) => None,
        }
    }

    pub fn complex(&self) -> Option<&[ExactMatrix]> {
        match &self.generators {
            Generators::Complex(g) => Some(g),
            Generators::Quaternionic(_) => None,
        }
    }

    /// Complex matrices of the generators, embedding quaternionic ones.
    pub fn complex_matrices(&self) -> Vec<ExactMatrix> {
        match &self.generators {
            Generators::Complex(g) => g.clone(),
            Generators::Quaternionic(g) => g.iter().map(embed_matrix).collect(),
        }
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn real_coords(&self, i: usize) -> Vec<ExactScalar> {
        match &self.generators {
            Generators::Quaternionic(g) => hmatrix_real_coords(&g[i]),
            Generators::Complex(g) => complex_real_coords(&g[i]),
        }
    }

    /// Row `i` holds the real coordinates of generator `i`.
    pub fn coordinate_matrix(&self) -> Matrix<ExactScalar> {
        let rows: Vec<Vec<ExactScalar>> = (0..self.dim()).map(|i| self.real_coords(i)).collect();
        Matrix::from_rows(rows)
    }

    /// Real coordinates of `[g_i, g_j]`.
    pub fn bracket_coords(&self, i: usize, j: usize) -> Vec<ExactScalar> {
        match &self.generators {
            Generators::Quaternionic(g) => hmatrix_real_coords(&g[i].commutator(&g[j])),
            Generators::Complex(g) => complex_real_coords(&g[i].commutator(&g[j])),
        }
    }

    /// Same algebra through the complex embedding.
    pub fn embedded(&self) -> LieBasis {
        LieBasis {
            name: self.name.clone(),
            generators: Generators::Complex(self.complex_matrices()),
            labels: self.labels.clone(),
        }
    }

    /// The conjugate-dual representation `X ↦ −X†`.
    pub fn conjugate_dual(&self) -> LieBasis {
        let generators = match &self.generators {
            Generators::Quaternionic(g) => Generators::Quaternionic(g.iter().map(|x| dagger(x).neg()).collect()),
            Generators::Complex(g) => Generators::Complex(g.iter().map(|x| x.dagger().neg()).collect()),
        };
        LieBasis {
            name: format!("{}-dual", self.name),
            generators,
            labels: self.labels.clone(),
        }
    }

    /// `X ↦ M⁻¹·X·M` on every generator; quaternionic bases are embedded first.
    pub fn conjugated_by(&self, name: impl Into<String>, m: &ExactMatrix) -> Result<LieBasis> {
        let inv = m.inverse()?;
        let g = self
            .complex_matrices()
            .iter()
            .map(|x| inv.checked_mul(x).and_then(|y| y.checked_mul(m)))
            .collect::<Result<Vec<_>>>()?;
        LieBasis::new(name, Generators::Complex(g), self.labels.clone())
    }

    /// New basis `h_i = Σ_k T_ik g_k` for a real matrix `T`.
    pub fn recombined(&self, name: impl Into<String>, t: &Matrix<ExactScalar>) -> Result<LieBasis> {
        if t.shape() != (self.dim(), self.dim()) {
            return Err(Error::ShapeMismatch("recombination matrix".into()));
        }
        let labels = (1..=self.dim()).map(|i| format!("h{i}")).collect();
        let generators = match &self.generators {
            Generators::Quaternionic(g) => Generators::Quaternionic(
                (0..self.dim())
                    .map(|i| lin_comb(g, (0..self.dim()).map(|k| t.get(i, k)), |x, s| x.map(|q| q.scale(s))))
                    .collect(),
            ),
            Generators::Complex(g) => Generators::Complex(
                (0..self.dim())
                    .map(|i| lin_comb(g, (0..self.dim()).map(|k| t.get(i, k)), |x, s| x.scale_real(s)))
                    .collect(),
            ),
        };
        LieBasis::new(name, generators, labels)
    }

    /// `Re Tr(X_i X_j)` in the defining representation.
    pub fn trace_form(&self) -> Matrix<ExactScalar> {
        let n = self.dim();
        Matrix::from_fn(n, n, |i, j| match &self.generators {
            Generators::Quaternionic(g) => g[i].mul_ref(&g[j]).trace().t,
            Generators::Complex(g) => g[i].mul_ref(&g[j]).trace().re,
        })
    }
}

fn lin_comb<'a, T: crate::matrix::Ring>(
    g: &[Matrix<T>],
    coeffs: impl Iterator<Item = &'a ExactScalar>,
    scale: impl Fn(&Matrix<T>, &ExactScalar) -> Matrix<T>,
) -> Matrix<T> {
    let (r, c) = g[0].shape();
    let mut acc = Matrix::zeros(r, c);
    for (x, s) in g.iter().zip(coeffs) {
        if !s.is_zero() {
            acc = acc.add_ref(&scale(x, s));
        }
    }
    acc
}

/// `f[i][j][k]` with `[g_i, g_j] = Σ_k f_ij^k g_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTensor {
    dim: usize,
    f: Vec<ExactScalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: ExactScalar,
}

impl StructureTensor {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            f: vec![ExactScalar::zero(); dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &ExactScalar {
        &self.f[(i * self.dim + j) * self.dim + k]
    }

    fn set(&mut self, i: usize, j: usize, k: usize, v: ExactScalar) {
        let d = self.dim;
        self.f[(i * d + j) * d + k] = v;
    }

    /// Nonzero `f_ij^k` as `(k, value)` pairs.
    pub fn bracket(&self, i: usize, j: usize) -> Vec<(usize, &ExactScalar)> {
        (0..self.dim)
            .map(|k| (k, self.get(i, j, k)))
            .filter(|(_, v)| !v.is_zero())
            .collect()
    }

    /// Nonzero entries with `i < j`, in lexicographic order.
    pub fn sparse(&self) -> Vec<StructureEntry> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for (k, v) in self.bracket(i, j) {
                    out.push(StructureEntry {
                        i,
                        j,
                        k,
                        value: v.clone(),
                    });
                }
            }
        }
        out
    }

    pub fn nonzero_count(&self) -> usize {
        self.f.iter().filter(|v| !v.is_zero()).count()
    }

    /// Triples `(i, j, k)` where the two tensors differ.
    pub fn differences(&self, other: &StructureTensor) -> Vec<(usize, usize, usize)> {
        if self.dim != other.dim {
            return vec![(usize::MAX, usize::MAX, usize::MAX)];
        }
        let d = self.dim;
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    if self.get(i, j, k) != other.get(i, j, k) {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| (0..self.dim).all(|k| *self.get(i, j, k) == -self.get(j, i, k)))
        })
    }

    /// Exact Jacobi identity for every triple.
    pub fn jacobi_holds(&self) -> bool {
        let d = self.dim;
        let sparse: Vec<Vec<(usize, ExactScalar)>> = (0..d * d)
            .map(|ij| {
                self.bracket(ij / d, ij % d)
                    .into_iter()
                    .map(|(k, v)| (k, v.clone()))
                    .collect()
            })
            .collect();
        let nested = |a: usize, b: usize, c: usize, acc: &mut Vec<ExactScalar>| {
            // [[g_a, g_b], g_c]
            for (l, x) in &sparse[a * d + b] {
                for (m, y) in &sparse[l * d + c] {
                    acc[*m] += &(x * y);
                }
            }
        };
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    let mut acc = vec![ExactScalar::zero(); d];
                    nested(i, j, k, &mut acc);
                    nested(j, k, i, &mut acc);
                    nested(k, i, j, &mut acc);
                    if acc.iter().any(|v| !v.is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Exact structure constants; fails if some bracket leaves the span.
pub fn structure_constants(b: &LieBasis) -> Result<StructureTensor> {
    let n = b.dim();
    let solver = CoordinateSolver::new((0..n).map(|i| b.real_coords(i)).collect())?;
    let mut t = StructureTensor::zeros(n);
    for i in 0..n {
        for j in i + 1..n {
            let c = solver
                .solve(&b.bracket_coords(i, j))
                .ok_or(Error::NotClosed { i, j })?;
            for (k, v) in c.into_iter().enumerate() {
                if !v.is_zero() {
                    t.set(j, i, k, -&v);
                    t.set(i, j, k, v);
                }
            }
        }
    }
    Ok(t)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KillingData {
    pub matrix: Matrix<ExactScalar>,
    /// `(n_minus, n_plus, n_zero)`
    pub signature: (usize, usize, usize),
    pub index: i64,
}

/// `B_ij = Tr(ad_i ad_j) = Σ f_ik^l f_jl^k`.
pub fn killing_matrix(f: &StructureTensor) -> Matrix<ExactScalar> {
    let d = f.dim();
    // ad_i has (l, k) entry f_ik^l
    let ad: Vec<Vec<(usize, usize, ExactScalar)>> = (0..d)
        .map(|i| {
            let mut e = Vec::new();
            for k in 0..d {
                for (l, v) in f.bracket(i, k) {
                    e.push((l, k, v.clone()));
                }
            }
            e
        })
        .collect();
    let mut b = Matrix::zeros(d, d);
    for i in 0..d {
        for j in i..d {
            let mut s = ExactScalar::zero();
            for (l, k, v) in &ad[i] {
                let w = f.get(j, *l, *k);
                if !w.is_zero() {
                    s += &(v * w);
                }
            }
            b.set(j, i, s.clone());
            b.set(i, j, s);
        }
    }
    b
}

pub fn killing(b: &LieBasis) -> Result<KillingData> {
    let f = structure_constants(b)?;
    Ok(killing_from_tensor(&f))
}

pub fn killing_from_tensor(f: &StructureTensor) -> KillingData {
    let matrix = killing_matrix(f);
    let signature = symmetric_signature(&matrix).expect("Killing matrix is square");
    KillingData {
        index: signature.1 as i64 - signature.0 as i64,
        matrix,
        signature,
    }
}

/// Signature of an invariant form: the Killing form where it is
/// nondegenerate, with its radical classified by the defining trace form.
///
/// For semisimple algebras this is exactly the Killing signature. The
/// abelian so*(2) has zero Killing form; its single generator `j` squares to
/// `−1`, so the trace form counts it as compact.
pub fn invariant_signature(b: &LieBasis) -> Result<(usize, usize, usize)> {
    let k = killing(b)?;
    if k.signature.2 == 0 {
        return Ok(k.signature);
    }
    let radical = nullspace(&k.matrix);
    let tf = b.trace_form();
    let m = radical.len();
    let restricted = Matrix::from_fn(m, m, |a, c| {
        let mut s = ExactScalar::zero();
        for (p, x) in radical[a].iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (q, y) in radical[c].iter().enumerate() {
                if !y.is_zero() {
                    s += &(&(x * tf.get(p, q)) * y);
                }
            }
        }
        s
    });
    let (rn, rp, rz) = symmetric_signature(&restricted)?;
    Ok((k.signature.0 + rn, k.signature.1 + rp, rz))
}

/// Number of compact generators: `n_minus` of the invariant signature.
pub fn compact_generator_count(b: &LieBasis) -> Result<usize> {
    let (n_minus, _, n_zero) = invariant_signature(b)?;
    if n_zero != 0 {
        return Err(Error::DegenerateForm);
    }
    Ok(n_minus)
}

/// `dim_ℂ {X : [X, g] = 0 for every generator g}` for a complex realization.
pub fn commutant_dimension(b: &LieBasis) -> Result<usize> {
    let gens = b.complex().ok_or(Error::RealizationMismatch {
        expected: "complex-exact",
    })?;
    let n = b.matrix_order();
    // row-major vec(X); (Xg − gX)_{ab} = Σ_c X_ac g_cb − g_ac X_cb
    let mut rows: Vec<Vec<ExactComplex>> = Vec::new();
    for g in gens {
        for a in 0..n {
            for c in 0..n {
                let mut row = vec![ExactComplex::zero(); n * n];
                for k in 0..n {
                    row[a * n + k] = &row[a * n + k] + g.get(k, c);
                    row[k * n + c] = &row[k * n + c] - g.get(a, k);
                }
                if row.iter().any(|e| !e.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return Ok(n * n);
    }
    let system = Matrix::from_rows(rows);
    Ok(n * n - rank(&system))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::Quaternion;

    fn su2() -> LieBasis {
        let g = vec![Quaternion::i(), Quaternion::j(), Quaternion::k()]
            .into_iter()
            .map(|q| HMatrix::from_vec(1, 1, vec![q]))
            .collect();
        LieBasis::numbered("su2", "e", Generators::Quaternionic(g)).unwrap()
    }

    #[test]
    fn imaginary_quaternions() {
        let b = su2();
        let f = structure_constants(&b).unwrap();
        // [i, j] = 2k
        assert_eq!(f.get(0, 1, 2), &ExactScalar::int(2));
        assert!(f.is_antisymmetric() && f.jacobi_holds());
        let k = killing(&b).unwrap();
        assert_eq!(k.signature, (3, 0, 0));
        assert_eq!(k.index, -3);
        assert_eq!(commutant_dimension(&b.embedded()).unwrap(), 1);
        assert!(matches!(
            commutant_dimension(&b),
            Err(Error::RealizationMismatch { .. })
        ));
    }

    #[test]
    fn dependent_and_unclosed_bases_are_rejected() {
        let one = |q: Quaternion| HMatrix::from_vec(1, 1, vec![q]);
        let dep = Generators::Quaternionic(vec![one(Quaternion::i()), one(Quaternion::i().scale(&ExactScalar::int(2)))]);
        assert!(matches!(
            LieBasis::numbered("x", "e", dep),
            Err(Error::LinearlyDependent { rank: 1, count: 2 })
        ));
        let open = LieBasis::numbered(
            "y",
            "e",
            Generators::Quaternionic(vec![one(Quaternion::i()), one(Quaternion::j())]),
        )
        .unwrap();
        assert_eq!(structure_constants(&open), Err(Error::NotClosed { i: 0, j: 1 }));
    }

    #[test]
    fn abelian_radical_uses_trace_form() {
        let b = LieBasis::numbered(
            "so*(2)",
            "M",
            Generators::Quaternionic(vec![HMatrix::from_vec(1, 1, vec![Quaternion::j()])]),
        )
        .unwrap();
        assert_eq!(killing(&b).unwrap().signature, (0, 0, 1));
        assert_eq!(invariant_signature(&b).unwrap(), (1, 0, 0));
        assert_eq!(compact_generator_count(&b).unwrap(), 1);
    }

    #[test]
    fn conjugate_dual_is_a_representation() {
        let b = su2();
        let d = b.conjugate_dual();
        assert_eq!(structure_constants(&b).unwrap(), structure_constants(&d).unwrap());
    }
}
