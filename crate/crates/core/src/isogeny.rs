//! Verifiers for SO*(2) ≅ SO(2), SO*(4) ≅ (SU(2)×SL(2,ℝ))/ℤ₂,
//! SO*(6) ≅ SU(3,1)/ℤ₂, and the Killing-form table for the quaternionic
//! families.
//!
//! Each verifier returns a [`SuiteReport`] with one claim per sub-check.
//! Structure-constant claims are exact; exponential claims use `tol`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde_json::json;

use crate::hmatrix::{embed_matrix, is_sostar_algebra, is_sostar_group_embedded};
use crate::liealg::{
    basis_sostar4_a, basis_sostar6_complex, basis_sostar6_quat, basis_su2_sl2_s, basis_su31,
    basis_su31_twisted, commutant_dimension, compact_generator_count, expm, generic_basis,
    invariant_signature, killing, structure_constants, Family, Generators, LieBasis,
};
use crate::liealg::constants::u_sostar6;
use crate::matrix::{format_f64, CMatrix, ExactMatrix, FloatMatrix};
use crate::report::{SuiteReport, Tolerance, VerificationReport};
use crate::scalar::{ExactComplex, ExactScalar};

fn float_witness(m: &FloatMatrix) -> serde_json::Value {
    serde_json::to_value(CMatrix::Float(m.clone())).unwrap_or_default()
}

fn diag_f(values: &[f64]) -> FloatMatrix {
    FloatMatrix::diag(values.iter().map(|&x| Complex64::new(x, 0.0)).collect())
}

/// Compares `exp(t·X)` with `want`, recording the max deviation.
fn check_exp(
    r: &mut VerificationReport,
    label: &str,
    x: &ExactMatrix,
    t: f64,
    want: &FloatMatrix,
    tol: f64,
) -> Option<FloatMatrix> {
    match expm(&x.to_float().scale_f64(t), tol.min(1e-12)) {
        Ok(got) => {
            let dev = got.max_abs_diff(want);
            r.check(
                label,
                dev <= tol,
                json!({ "max_abs_deviation": format_f64(dev), "value": float_witness(&got) }),
            );
            Some(got)
        }
        Err(e) => {
            r.fail(label, e);
            None
        }
    }
}

/// so*(2): one generator proportional to `j`, exponentiating to rotations.
pub fn verify_sostar2(tol: f64) -> SuiteReport {
    let mut dim = VerificationReport::new("sostar2.dimension", Tolerance::Exact);
    let mut rot = VerificationReport::new("sostar2.rotation", Tolerance::Abs(tol));
    match generic_basis(Family::SoStar, 1, 0, 0) {
        Ok(b) => {
            dim.check("dimension is 1", b.dim() == 1, b.dim());
            let g = &b.quaternionic().expect("quaternionic")[0];
            let e = g.get(0, 0);
            let proportional = e.t.is_zero() && e.x.is_zero() && e.z.is_zero() && !e.y.is_zero();
            dim.check("generator is a multiple of j", proportional, e.to_string());
            dim.check("generator passes the algebra predicate", is_sostar_algebra(g).unwrap_or(false), true);

            let j = embed_matrix(g);
            for (name, theta) in [("0", 0.0), ("pi/3", PI / 3.0), ("pi", PI), ("2pi", 2.0 * PI)] {
                let (c, s) = (theta.cos(), theta.sin());
                let want = FloatMatrix::from_vec(
                    2,
                    2,
                    [c, -s, s, c].iter().map(|&x| Complex64::new(x, 0.0)).collect(),
                );
                if let Some(got) = check_exp(&mut rot, &format!("exp({name}·j) is the rotation matrix"), &j, theta, &want, tol) {
                    let member = is_sostar_group_embedded(&CMatrix::Float(got), tol).unwrap_or(false);
                    rot.check(format!("exp({name}·j) lies in SO*(2)"), member, member);
                }
            }
        }
        Err(e) => dim.fail("construct so*(2)", e),
    }
    SuiteReport::new("sostar2", vec![dim, rot])
}

/// so*(4) = su(2) ⊕ sl(2,ℝ) and the ℤ₂ kernel of the induced group map.
pub fn verify_sostar4(tol: f64) -> SuiteReport {
    let a = basis_sostar4_a();
    let s = basis_su2_sl2_s();
    let ag = a.quaternionic().expect("quaternionic").to_vec();
    let sg = s.complex().expect("complex").to_vec();

    let mut cross = VerificationReport::new("sostar4.cross_commutators", Tolerance::Exact);
    for i in 0..3 {
        for j in 3..6 {
            let c = ag[i].commutator(&ag[j]);
            cross.check(format!("[A{}, A{}] = 0", i + 1, j + 1), c.is_zero(), c.is_zero());
        }
    }

    let mut sc = VerificationReport::new("sostar4.structure_constants", Tolerance::Exact);
    let members = ag.iter().all(|g| is_sostar_algebra(g).unwrap_or(false));
    sc.check("every A_i passes the so*(4) predicate", members, members);
    match (structure_constants(&a), structure_constants(&s)) {
        (Ok(fa), Ok(fs)) => {
            let diff = fa.differences(&fs);
            sc.check("f(A) = f(S) on all 216 components", diff.is_empty(), json!({ "mismatches": diff.len() }));
            sc.check("Jacobi identity", fa.jacobi_holds(), true);
            let c = fa.get(0, 1, 2).clone();
            let only_a3 = fa.bracket(0, 1).len() == 1;
            sc.check("[A1, A2] = c·A3 with c nonzero", only_a3 && !c.is_zero(), json!({ "c": c }));
        }
        (Err(e), _) | (_, Err(e)) => sc.fail("structure constants", e),
    }

    let mut ex = VerificationReport::new("sostar4.exponentials", Tolerance::Abs(tol));
    let two_pi = 2.0 * PI;
    let minus4 = diag_f(&[-1.0; 4]);
    let ea = a.complex_matrices();
    let r1 = check_exp(&mut ex, "R1 = exp(2pi A1) = -I4", &ea[0], two_pi, &minus4, tol);
    let r5 = check_exp(&mut ex, "R5 = exp(2pi A5) = -I4", &ea[4], two_pi, &minus4, tol);
    let u1 = check_exp(&mut ex, "U1 = exp(2pi S1) = diag(-I2, I2)", &sg[0], two_pi, &diag_f(&[-1.0, -1.0, 1.0, 1.0]), tol);
    let u5 = check_exp(&mut ex, "U5 = exp(2pi S5) = diag(I2, -I2)", &sg[4], two_pi, &diag_f(&[1.0, 1.0, -1.0, -1.0]), tol);
    for (name, m) in [("R1", &r1), ("R5", &r5)] {
        if let Some(m) = m {
            let ok = is_sostar_group_embedded(&CMatrix::Float(m.clone()), tol).unwrap_or(false);
            ex.check(format!("{name} lies in SO*(4)"), ok, ok);
        }
    }

    let mut kernel = VerificationReport::new("sostar4.kernel", Tolerance::Abs(tol));
    match (u1, u5, r1, r5) {
        (Some(u1), Some(u5), Some(r1), Some(r5)) => {
            let uu = u1.mul_ref(&u5);
            let rr = r1.mul_ref(&r5);
            let du = uu.max_abs_diff(&minus4);
            let dr = rr.max_abs_diff(&FloatMatrix::identity(4));
            kernel.check("U1 U5 = -I4", du <= tol, json!({ "max_abs_deviation": format_f64(du) }));
            kernel.check("R1 R5 = I4", dr <= tol, json!({ "max_abs_deviation": format_f64(dr) }));
        }
        _ => kernel.fail("exponentials", "missing exponential"),
    }

    let mut comm = VerificationReport::new("sostar4.commutant", Tolerance::Exact);
    match commutant_dimension(&a.embedded()) {
        Ok(d) => comm.check("commutant of the embedded A-basis has dimension 1", d == 1, d),
        Err(e) => comm.fail("commutant of A", e),
    };
    match commutant_dimension(&s) {
        Ok(d) => comm.check("commutant of the S-basis has dimension 2", d == 2, d),
        Err(e) => comm.fail("commutant of S", e),
    };

    SuiteReport::new("sostar4", vec![cross, sc, ex, kernel, comm])
}

/// Block form expected for `U⁻¹·embed(a_i)·U`; boosts may carry a global sign.
fn sostar6_change_of_basis(r: &mut VerificationReport, quat: &LieBasis, cx: &LieBasis) {
    let u = u_sostar6();
    let Ok(conj) = quat.conjugated_by("so*(6) conjugated", &u) else {
        r.fail("conjugate by U", "U is singular or the result is dependent");
        return;
    };
    let got = conj.complex().expect("complex");
    let want = cx.complex().expect("complex");
    let mut signs = Vec::new();
    let mut ok = true;
    for (i, (g, w)) in got.iter().zip(want).enumerate() {
        let sign = if g == w {
            1
        } else if *g == w.neg() {
            -1
        } else {
            ok = false;
            0
        };
        signs.push(sign);
        if sign == 0 {
            r.note(format!("U^-1 a{} U differs from the block form", i + 1), sign);
        }
    }
    // the compact part must match exactly; boosts may flip all together
    let compact_ok = signs[..8].iter().all(|&s| s == 1) && signs[14] == 1;
    let boost_sign = signs[8];
    let boosts_ok = signs[8..14].iter().all(|&s| s == boost_sign && s != 0);
    r.check(
        "U^-1 embed(a_i) U equals the block form (boosts up to one global sign)",
        ok && compact_ok && boosts_ok,
        json!({ "signs": signs }),
    );
}

/// su(3,1) and so*(6): equal structure constants and the two center witnesses.
pub fn verify_sostar6(tol: f64) -> SuiteReport {
    let su31 = basis_su31();
    let quat = basis_sostar6_quat();
    let cx = basis_sostar6_complex();

    let mut sc = VerificationReport::new("sostar6.structure_constants", Tolerance::Exact);
    let i31 = ExactMatrix::diag(vec![
        ExactComplex::int(1),
        ExactComplex::int(1),
        ExactComplex::int(1),
        ExactComplex::int(-1),
    ]);
    let s_ok = su31
        .complex()
        .expect("complex")
        .iter()
        .all(|s| i31.mul_ref(s).mul_ref(&i31) == s.dagger().neg() && s.trace().is_zero());
    sc.check("every s_i satisfies I31 s I31 = -s^dagger and is traceless", s_ok, s_ok);
    let a_ok = quat
        .quaternionic()
        .expect("quaternionic")
        .iter()
        .all(|a| is_sostar_algebra(a).unwrap_or(false));
    sc.check("every a_i passes the so*(6) predicate", a_ok, a_ok);
    match (
        structure_constants(&su31),
        structure_constants(&quat),
        structure_constants(&cx),
    ) {
        (Ok(fs), Ok(fq), Ok(fc)) => {
            let d1 = fs.differences(&fq);
            sc.check("f(su(3,1)) = f(so*(6) quaternionic) on all 3375 components", d1.is_empty(), json!({ "mismatches": d1.len() }));
            let d2 = fq.differences(&fc);
            sc.check("f(so*(6) quaternionic) = f(so*(6) block form)", d2.is_empty(), json!({ "mismatches": d2.len() }));
            sc.check("Jacobi identity", fs.jacobi_holds(), true);
            if let Ok(fp) = structure_constants(&basis_su31_twisted()) {
                // λ_i instead of λ_i* in the su(3) block gives the 3̄ ↔ 3 twisted algebra
                let diff = fp.differences(&fq);
                let pairs: std::collections::BTreeSet<(usize, usize)> =
                    diff.iter().filter(|(i, j, _)| i < j).map(|&(i, j, _)| (i, j)).collect();
                sc.note(
                    "with lambda_i in place of its conjugate: differing brackets [s_i, s_j], i < j",
                    pairs.len(),
                );
                sc.note("with lambda_i in place of its conjugate: differing components f_ij^k", diff.len());
            }
        }
        (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => sc.fail("structure constants", e),
    }
    sostar6_change_of_basis(&mut sc, &quat, &cx);
    trace_normalizations(&mut sc, &su31, &quat);

    let scale = 6f64.sqrt() * PI;
    let mut z1 = VerificationReport::new("sostar6.center_su31", Tolerance::Abs(tol));
    let i4 = FloatMatrix::identity(4).scale(&Complex64::new(0.0, 1.0));
    check_exp(&mut z1, "exp(sqrt6 pi s15) = i I4", &su31.complex().expect("complex")[14], scale, &i4, tol);

    let mut z2 = VerificationReport::new("sostar6.center_sostar6", Tolerance::Abs(tol));
    let m6 = diag_f(&[-1.0; 6]);
    check_exp(&mut z2, "exp(sqrt6 pi a15) = -I6 (block form)", &cx.complex().expect("complex")[14], scale, &m6, tol);
    let ea15 = embed_matrix(&quat.quaternionic().expect("quaternionic")[14]);
    if let Some(g) = check_exp(&mut z2, "exp(sqrt6 pi a15) = -I6 (embedded quaternionic)", &ea15, scale, &m6, tol) {
        let ok = is_sostar_group_embedded(&CMatrix::Float(g), tol).unwrap_or(false);
        z2.check("the element lies in SO*(6)", ok, ok);
    }

    let mut cc = VerificationReport::new("sostar6.compact_count", Tolerance::Exact);
    for b in [&su31, &quat] {
        match compact_generator_count(b) {
            Ok(n) => cc.check(format!("{} has 9 compact generators", b.name()), n == 9, n),
            Err(e) => cc.fail(b.name().to_string(), e),
        };
    }
    if let Ok(k) = killing(&quat) {
        cc.note("Killing signature (n_minus, n_plus, n_zero)", k.signature);
    }

    let mut real = VerificationReport::new("sostar6.real_subalgebra", Tolerance::Exact);
    let gens = su31.complex().expect("complex");
    let real_gens: Vec<ExactMatrix> = gens.iter().filter(|g| g.is_real()).cloned().collect();
    let labels: Vec<String> = gens
        .iter()
        .enumerate()
        .filter(|(_, g)| g.is_real())
        .map(|(i, _)| format!("s{}", i + 1))
        .collect();
    real.check("six generators have real entries", real_gens.len() == 6, labels.clone());
    match LieBasis::new("su(3,1) real part", Generators::Complex(real_gens), labels)
        .and_then(|b| structure_constants(&b))
    {
        Ok(_) => real.check("their span closes under the bracket", true, true),
        Err(e) => real.fail("their span closes under the bracket", e),
    };

    SuiteReport::new("sostar6", vec![sc, z1, z2, cc, real])
}

/// Records `Tr(s_i s_i)` and both readings of `Tr(a_i a_i)`.
fn trace_normalizations(r: &mut VerificationReport, su31: &LieBasis, quat: &LieBasis) {
    let half = ExactScalar::frac(1, 2);
    let s_tr: Vec<ExactComplex> = su31
        .complex()
        .expect("complex")
        .iter()
        .map(|s| s.mul_ref(s).trace())
        .collect();
    let s_ok = s_tr
        .iter()
        .all(|t| t.is_real() && (t.re == half || t.re == -&half));
    r.check("Tr(s_i s_i) = +-1/2", s_ok, s_tr.iter().map(|t| t.to_string()).collect::<Vec<_>>());
    let q = quat.quaternionic().expect("quaternionic");
    let real_part: Vec<String> = q.iter().map(|a| a.mul_ref(a).trace().t.to_string()).collect();
    let embedded: Vec<String> = q
        .iter()
        .map(|a| {
            let e = embed_matrix(a);
            e.mul_ref(&e).trace().to_string()
        })
        .collect();
    r.note("Tr(a_i a_i), quaternionic real part", real_part);
    r.note("Tr(a_i a_i), complex embedding", embedded);
}

/// One row of the Killing-form table.
pub fn verify_table_row(family: Family, n: usize, p: usize, q: usize) -> VerificationReport {
    let id = match family {
        Family::SpStar => format!("tables.{family}.n={n}.p={p}.q={q}"),
        _ => format!("tables.{family}.n={n}"),
    };
    let mut r = VerificationReport::new(id, Tolerance::Exact);
    let (dim, nm, np, index) = family.expected(n, p, q);
    let basis = match generic_basis(family, n, p, q) {
        Ok(b) => b,
        Err(e) => {
            r.fail("construct basis", e);
            return r;
        }
    };
    r.check("dimension", basis.dim() == dim, json!({ "expected": dim, "got": basis.dim() }));
    let members = basis.quaternionic().expect("quaternionic").iter().all(|g| match family {
        Family::SoStar => is_sostar_algebra(g).unwrap_or(false),
        Family::SpStar => crate::hmatrix::is_spstar_algebra(g, p, q).unwrap_or(false),
        Family::SlH => g.trace().t.is_zero(),
    });
    r.check("generators satisfy the defining condition", members, members);
    match killing(&basis) {
        Ok(k) => r.note("Killing signature (n_minus, n_plus, n_zero)", k.signature),
        Err(e) => r.fail("Killing form", e),
    }
    match invariant_signature(&basis) {
        Ok((gm, gp, gz)) => {
            let sig_ok = (gm, gp, gz) == (nm, np, 0);
            r.check(
                "signature (n_minus, n_plus)",
                sig_ok,
                json!({ "expected": [nm, np], "got": [gm, gp, gz] }),
            );
            let got_index = gp as i64 - gm as i64;
            r.check("index n_plus - n_minus", got_index == index, json!({ "expected": index, "got": got_index }));
            if family == Family::SoStar {
                r.check("compact generators = n^2", gm == n * n, json!({ "expected": n * n, "got": gm }));
            }
        }
        Err(e) => r.fail("invariant signature", e),
    }
    r
}

/// Rows in the order so* (n ≤ 4), sp* (n ≤ 3, every split), sl_H (n ≤ 3).
pub fn table_rows() -> Vec<(Family, usize, usize, usize)> {
    let mut rows: Vec<_> = (1..=4).map(|n| (Family::SoStar, n, 0, 0)).collect();
    for n in 1..=3 {
        for p in (0..=n).rev() {
            rows.push((Family::SpStar, n, p, n - p));
        }
    }
    rows.extend((1..=3).map(|n| (Family::SlH, n, 0, 0)));
    rows
}

pub fn verify_tables() -> SuiteReport {
    let claims = table_rows()
        .into_iter()
        .map(|(f, n, p, q)| verify_table_row(f, n, p, q))
        .collect();
    SuiteReport::new("tables", claims)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sostar2_passes() {
        let r = verify_sostar2(1e-9);
        assert!(r.passed(), "{r:#?}");
        assert_eq!(r.claims.len(), 2);
    }

    #[test]
    fn sostar4_passes() {
        let r = verify_sostar4(1e-9);
        assert!(r.passed(), "{r:#?}");
        assert_eq!(r.claims.len(), 5);
    }

    #[test]
    fn sostar6_passes() {
        let r = verify_sostar6(1e-9);
        assert!(r.passed(), "{r:#?}");
        assert_eq!(r.claims.len(), 5);
        let sc = r.claim("sostar6.structure_constants").unwrap();
        let twisted = sc
            .witnesses
            .iter()
            .find(|w| w.description.ends_with("differing brackets [s_i, s_j], i < j"))
            .unwrap();
        assert_eq!(twisted.value, json!(31));
    }

    #[test]
    fn small_table_rows() {
        for (f, n, p, q) in [(Family::SoStar, 1, 0, 0), (Family::SpStar, 2, 2, 0), (Family::SlH, 1, 0, 0)] {
            let r = verify_table_row(f, n, p, q);
            assert!(r.passed, "{r:#?}");
        }
        assert_eq!(table_rows().len(), 16);
    }
}
