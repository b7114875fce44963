//! Quaternions over ℚ(√2, √3), their conjugations, and the 2×2 complex embedding
//!
//! `t + xi + yj + zk ↦ [[t + zi, ix − y], [ix + y, t − zi]]`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::matrix::ExactMatrix;
use crate::scalar::{ExactComplex, ExactScalar};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct Quaternion {
    pub t: ExactScalar,
    pub x: ExactScalar,
    pub y: ExactScalar,
    pub z: ExactScalar,
}

impl Quaternion {
    pub fn new(t: ExactScalar, x: ExactScalar, y: ExactScalar, z: ExactScalar) -> Self {
        Self { t, x, y, z }
    }

    pub fn from_ints(t: i64, x: i64, y: i64, z: i64) -> Self {
        Self::new(t.into(), x.into(), y.into(), z.into())
    }

    pub fn real(t: ExactScalar) -> Self {
        Self {
            t,
            ..Self::default()
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    /// The four real units `1, i, j, k` in order.
    pub fn units() -> [Self; 4] {
        [Self::one(), Self::i(), Self::j(), Self::k()]
    }

    pub fn is_zero(&self) -> bool {
        self.t.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn components(&self) -> [&ExactScalar; 4] {
        [&self.t, &self.x, &self.y, &self.z]
    }

    /// `q* = t − xi − yj − zk`
    pub fn conj(&self) -> Self {
        Self::new(self.t.clone(), -&self.x, -&self.y, -&self.z)
    }

    /// `q̃ = t + xi − yj + zk`
    pub fn reversion(&self) -> Self {
        Self::new(self.t.clone(), self.x.clone(), -&self.y, self.z.clone())
    }

    pub fn norm_sq(&self) -> ExactScalar {
        let mut n = &self.t * &self.t;
        n += &(&self.x * &self.x);
        n += &(&self.y * &self.y);
        n += &(&self.z * &self.z);
        n
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        Self::new(&self.t * s, &self.x * s, &self.y * s, &self.z * s)
    }

    pub fn recip(&self) -> Option<Self> {
        let inv = self.norm_sq().recip()?;
        Some(self.conj().scale(&inv))
    }

    /// 2×2 complex image.
    pub fn embed(&self) -> ExactMatrix {
        let c = |re: ExactScalar, im: ExactScalar| ExactComplex::new(re, im);
        ExactMatrix::from_vec(
            2,
            2,
            vec![
                c(self.t.clone(), self.z.clone()),
                c(-&self.y, self.x.clone()),
                c(self.y.clone(), self.x.clone()),
                c(self.t.clone(), -&self.z),
            ],
        )
    }
}

pub fn quat_mul(p: &Quaternion, q: &Quaternion) -> Quaternion {
    p * q
}

pub fn quat_conj(q: &Quaternion) -> Quaternion {
    q.conj()
}

pub fn quat_reversion(q: &Quaternion) -> Quaternion {
    q.reversion()
}

pub fn quat_embed(q: &Quaternion) -> ExactMatrix {
    q.embed()
}

impl From<ExactScalar> for Quaternion {
    fn from(t: ExactScalar) -> Self {
        Self::real(t)
    }
}

impl<'a> Add<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn add(self, r: &Quaternion) -> Quaternion {
        Quaternion::new(&self.t + &r.t, &self.x + &r.x, &self.y + &r.y, &self.z + &r.z)
    }
}

impl<'a> Sub<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn sub(self, r: &Quaternion) -> Quaternion {
        Quaternion::new(&self.t - &r.t, &self.x - &r.x, &self.y - &r.y, &self.z - &r.z)
    }
}

impl<'a> Mul<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn mul(self, r: &Quaternion) -> Quaternion {
        let (a, b) = (self, r);
        let mut out = Quaternion::zero();
        // accumulate only nonzero products; generators are mostly sparse
        let terms: [(&ExactScalar, &ExactScalar, usize, bool); 16] = [
            (&a.t, &b.t, 0, false),
            (&a.x, &b.x, 0, true),
            (&a.y, &b.y, 0, true),
            (&a.z, &b.z, 0, true),
            (&a.t, &b.x, 1, false),
            (&a.x, &b.t, 1, false),
            (&a.y, &b.z, 1, false),
            (&a.z, &b.y, 1, true),
            (&a.t, &b.y, 2, false),
            (&a.y, &b.t, 2, false),
            (&a.z, &b.x, 2, false),
            (&a.x, &b.z, 2, true),
            (&a.t, &b.z, 3, false),
            (&a.z, &b.t, 3, false),
            (&a.x, &b.y, 3, false),
            (&a.y, &b.x, 3, true),
        ];
        for (u, v, slot, negate) in terms {
            if u.is_zero() || v.is_zero() {
                continue;
            }
            let p = u * v;
            let target = match slot {
                0 => &mut out.t,
                1 => &mut out.x,
                2 => &mut out.y,
                _ => &mut out.z,
            };
            if negate {
                *target -= &p;
            } else {
                *target += &p;
            }
        }
        out
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-&self.t, -&self.x, -&self.y, -&self.z)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        -&self
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, r: Quaternion) -> Quaternion {
        &self + &r
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, r: Quaternion) -> Quaternion {
        &self - &r
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, r: Quaternion) -> Quaternion {
        &self * &r
    }
}

impl AddAssign<&Quaternion> for Quaternion {
    fn add_assign(&mut self, r: &Quaternion) {
        self.t += &r.t;
        self.x += &r.x;
        self.y += &r.y;
        self.z += &r.z;
    }
}

impl SubAssign<&Quaternion> for Quaternion {
    fn sub_assign(&mut self, r: &Quaternion) {
        self.t -= &r.t;
        self.x -= &r.x;
        self.y -= &r.y;
        self.z -= &r.z;
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (c, u) in [(&self.t, ""), (&self.x, "i"), (&self.y, "j"), (&self.z, "k")] {
            if c.is_zero() {
                continue;
            }
            if u.is_empty() {
                parts.push(c.to_string());
            } else if c.is_rational() {
                parts.push(format!("{c}{u}"));
            } else {
                parts.push(format!("({c}){u}"));
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(t: i64, x: i64, y: i64, z: i64) -> Quaternion {
        Quaternion::from_ints(t, x, y, z)
    }

    #[test]
    fn hamilton_relations() {
        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        let m1 = -Quaternion::one();
        assert_eq!(&i * &i, m1);
        assert_eq!(&j * &j, m1);
        assert_eq!(&k * &k, m1);
        assert_eq!(&(&i * &j) * &k, m1);
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &i, -k.clone());
        assert_eq!(q(1, 1, 0, 0) * q(1, 0, 1, 0), q(1, 1, 1, 1));
    }

    #[test]
    fn conjugations() {
        let p = q(1, 2, 3, 4);
        assert_eq!(p.conj(), q(1, -2, -3, -4));
        assert_eq!(Quaternion::one().conj(), Quaternion::one());
        assert_eq!(&p.conj() * &p, q(30, 0, 0, 0));
        assert_eq!(p.reversion(), q(1, 2, -3, 4));
        assert_eq!(Quaternion::j().reversion(), -Quaternion::j());
        let ik = &Quaternion::i() * &Quaternion::k();
        let j = Quaternion::j();
        assert_eq!(ik.reversion(), -(&(&j * &ik.conj()) * &j));
        assert_eq!(ik.reversion(), j);
    }

    #[test]
    fn embedding_of_units() {
        assert_eq!(Quaternion::one().embed(), ExactMatrix::identity(2));
        assert_eq!(
            Quaternion::j().embed(),
            ExactMatrix::from_ints(2, 2, &[0, -1, 1, 0])
        );
        let k = Quaternion::k().embed();
        assert_eq!(k.get(0, 0), &ExactComplex::i());
        assert_eq!(k.get(1, 1), &-ExactComplex::i());
        assert!(k.get(0, 1).is_zero() && k.get(1, 0).is_zero());
    }

    #[test]
    fn bilinear_forms_cannot_be_reversion_symmetric() {
        // Assuming G(a, b) = g for a symmetric bilinear form forces g = ij·g = −ij·g,
        // which fails for every nonzero g.
        let ij = &Quaternion::i() * &Quaternion::j();
        for g in [q(1, 0, 0, 0), q(0, 1, -2, 3), q(5, 0, 0, -1)] {
            assert_ne!(&ij * &g, -(&ij * &g));
        }
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(Quaternion::i()).unwrap();
        assert_eq!(v["x"]["a"], "1/1");
        assert_eq!(v["t"]["a"], "0/1");
    }

    fn arb_q() -> impl Strategy<Value = Quaternion> {
        let c = || (-5i64..=5, 1i64..=4).prop_map(|(n, d)| ExactScalar::frac(n, d));
        (c(), c(), c(), c()).prop_map(|(t, x, y, z)| Quaternion::new(t, x, y, z))
    }

    proptest! {
        #[test]
        fn embed_is_multiplicative(p in arb_q(), r in arb_q()) {
            prop_assert_eq!((&p * &r).embed(), p.embed().mul_ref(&r.embed()));
        }

        #[test]
        fn conjugations_reverse_products(p in arb_q(), r in arb_q()) {
            prop_assert_eq!((&p * &r).conj(), &r.conj() * &p.conj());
            prop_assert_eq!((&p * &r).reversion(), &r.reversion() * &p.reversion());
        }

        #[test]
        fn reversion_is_conjugation_by_j(p in arb_q()) {
            let j = Quaternion::j();
            prop_assert_eq!(p.reversion(), -(&(&j * &p.conj()) * &j));
        }

        #[test]
        fn norm_is_multiplicative(p in arb_q(), r in arb_q()) {
            prop_assert_eq!((&p * &r).norm_sq(), &p.norm_sq() * &r.norm_sq());
        }

        #[test]
        fn embed_intertwines_conjugations(p in arb_q()) {
            let e = p.embed();
            prop_assert_eq!(p.conj().embed(), e.dagger());
            prop_assert_eq!(p.reversion().embed(), e.transpose());
            prop_assert_eq!(p.reversion().conj().embed(), e.conj());
        }
    }
}
