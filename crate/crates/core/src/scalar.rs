//! Exact arithmetic in the biquadratic field ℚ(√2, √3) and its Gaussian
//! extension ℚ(√2, √3)(i).
//!
//! Every constant appearing in the bases of this crate (halves, quarters,
//! 1/√3, √2/√3, 1/(2√6), 1/√2) lives in ℚ(√2, √3). An element is stored as
//! four rational coordinates over the basis {1, √2, √3, √6}; equality is
//! structural on those coordinates.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub type Rational = BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// `p/q` string form used by the JSON interface. Integers are written `p/1`.
pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n).map_err(|e| format!("bad numerator {n:?}: {e}"))?;
    let d = BigInt::from_str(d).map_err(|e| format!("bad denominator {d:?}: {e}"))?;
    if d.is_zero() {
        return Err("zero denominator".into());
    }
    Ok(Rational::new(n, d))
}

/// `a + b√2 + c√3 + d√6` with rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ExactScalar {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

fn prod(x: &Rational, y: &Rational) -> Option<Rational> {
    if x.is_zero() || y.is_zero() {
        None
    } else {
        Some(x * y)
    }
}

fn acc(target: &mut Rational, term: Option<Rational>, factor: i64) {
    if let Some(t) = term {
        if factor == 1 {
            *target += t;
        } else {
            *target += t * BigInt::from(factor);
        }
    }
}

/// Sign of `p + q√2`.
fn sign_q2(p: &Rational, q: &Rational) -> Ordering {
    let sp = p.cmp(&Rational::zero());
    let sq = q.cmp(&Rational::zero());
    if sq == Ordering::Equal || sp == sq {
        return sp;
    }
    if sp == Ordering::Equal {
        return sq;
    }
    // opposite signs: compare p² with 2q²
    let two = Rational::from_integer(BigInt::from(2));
    if p * p > two * q * q {
        sp
    } else {
        sq
    }
}

impl ExactScalar {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Self { a, b, c, d }
    }

    pub fn from_rational(a: Rational) -> Self {
        Self {
            a,
            ..Self::default()
        }
    }

    pub fn int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn frac(numer: i64, denom: i64) -> Self {
        Self::from_rational(rational(numer, denom))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn sqrt2() -> Self {
        Self {
            b: Rational::one(),
            ..Self::default()
        }
    }

    pub fn sqrt3() -> Self {
        Self {
            c: Rational::one(),
            ..Self::default()
        }
    }

    pub fn sqrt6() -> Self {
        Self {
            d: Rational::one(),
            ..Self::default()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// The rational value, if the irrational coordinates vanish.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    /// Galois conjugate √2 ↦ −√2.
    pub fn conj_sqrt2(&self) -> Self {
        Self::new(self.a.clone(), -&self.b, self.c.clone(), -&self.d)
    }

    /// Galois conjugate √3 ↦ −√3.
    pub fn conj_sqrt3(&self) -> Self {
        Self::new(self.a.clone(), self.b.clone(), -&self.c, -&self.d)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(&self.a * r, &self.b * r, &self.c * r, &self.d * r)
    }

    /// Multiplicative inverse, rationalized through the Galois conjugates.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let c3 = self.conj_sqrt3();
        let n = self * &c3; // lies in ℚ(√2)
        let c2 = n.conj_sqrt2();
        let m = &n * &c2; // rational
        debug_assert!(m.is_rational());
        let inv_m = m.a.recip();
        Some((&c3 * &c2).scale(&inv_m))
    }

    /// Exact sign, as an ordering against zero.
    pub fn signum(&self) -> Ordering {
        // x = X + √3·Y with X = a + b√2, Y = c + d√2
        let sx = sign_q2(&self.a, &self.b);
        let sy = sign_q2(&self.c, &self.d);
        if sy == Ordering::Equal || sx == sy {
            return sx;
        }
        if sx == Ordering::Equal {
            return sy;
        }
        let x = Self::new(self.a.clone(), self.b.clone(), Rational::zero(), Rational::zero());
        let y = Self::new(self.c.clone(), self.d.clone(), Rational::zero(), Rational::zero());
        let diff = &(&x * &x) - &(&(&y * &y) * &Self::int(3));
        match sign_q2(&diff.a, &diff.b) {
            Ordering::Greater => sx,
            _ => sy,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        let f = |r: &Rational| r.to_f64().unwrap_or(f64::NAN);
        f(&self.a)
            + f(&self.b) * std::f64::consts::SQRT_2
            + f(&self.c) * 3f64.sqrt()
            + f(&self.d) * 6f64.sqrt()
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        Self::int(n)
    }
}

impl From<Rational> for ExactScalar {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl PartialOrd for ExactScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl<'a> Add<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar::new(
            &self.a + &rhs.a,
            &self.b + &rhs.b,
            &self.c + &rhs.c,
            &self.d + &rhs.d,
        )
    }
}

impl<'a> Sub<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar::new(
            &self.a - &rhs.a,
            &self.b - &rhs.b,
            &self.c - &rhs.c,
            &self.d - &rhs.d,
        )
    }
}

impl<'a> Mul<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        let (x, y) = (self, rhs);
        let mut out = ExactScalar::zero();
        // √2·√2 = 2, √3·√3 = 3, √6·√6 = 6, √2·√3 = √6, √2·√6 = 2√3, √3·√6 = 3√2
        acc(&mut out.a, prod(&x.a, &y.a), 1);
        acc(&mut out.a, prod(&x.b, &y.b), 2);
        acc(&mut out.a, prod(&x.c, &y.c), 3);
        acc(&mut out.a, prod(&x.d, &y.d), 6);

        acc(&mut out.b, prod(&x.a, &y.b), 1);
        acc(&mut out.b, prod(&x.b, &y.a), 1);
        acc(&mut out.b, prod(&x.c, &y.d), 3);
        acc(&mut out.b, prod(&x.d, &y.c), 3);

        acc(&mut out.c, prod(&x.a, &y.c), 1);
        acc(&mut out.c, prod(&x.c, &y.a), 1);
        acc(&mut out.c, prod(&x.b, &y.d), 2);
        acc(&mut out.c, prod(&x.d, &y.b), 2);

        acc(&mut out.d, prod(&x.a, &y.d), 1);
        acc(&mut out.d, prod(&x.d, &y.a), 1);
        acc(&mut out.d, prod(&x.b, &y.c), 1);
        acc(&mut out.d, prod(&x.c, &y.b), 1);
        out
    }
}

impl<'a> Div<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    /// Panics on division by zero, like the integer operators.
    fn div(self, rhs: &ExactScalar) -> ExactScalar {
        self * &rhs.recip().expect("division by zero in ExactScalar")
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar::new(-&self.a, -&self.b, -&self.c, -&self.d)
    }
}

macro_rules! forward_owned_binop {
    ($ty:ty, $tr:ident, $m:ident) => {
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a $ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &'a $ty) -> $ty {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned_binop!(ExactScalar, Add, add);
forward_owned_binop!(ExactScalar, Sub, sub);
forward_owned_binop!(ExactScalar, Mul, mul);
forward_owned_binop!(ExactScalar, Div, div);

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

impl AddAssign<&ExactScalar> for ExactScalar {
    fn add_assign(&mut self, rhs: &ExactScalar) {
        self.a += &rhs.a;
        self.b += &rhs.b;
        self.c += &rhs.c;
        self.d += &rhs.d;
    }
}

impl SubAssign<&ExactScalar> for ExactScalar {
    fn sub_assign(&mut self, rhs: &ExactScalar) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
        self.c -= &rhs.c;
        self.d -= &rhs.d;
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (coef, unit) in [(&self.a, ""), (&self.b, "√2"), (&self.c, "√3"), (&self.d, "√6")] {
            if coef.is_zero() {
                continue;
            }
            let neg = coef.is_negative();
            let mag = coef.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if unit.is_empty() || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "{unit}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    a: String,
    b: String,
    c: String,
    d: String,
}

impl Serialize for ExactScalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ScalarRepr {
            a: rational_to_string(&self.a),
            b: rational_to_string(&self.b),
            c: rational_to_string(&self.c),
            d: rational_to_string(&self.d),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = ScalarRepr::deserialize(d)?;
        let p = |s: &str| parse_rational(s).map_err(D::Error::custom);
        Ok(ExactScalar::new(p(&r.a)?, p(&r.b)?, p(&r.c)?, p(&r.d)?))
    }
}

/// Element of ℚ(√2, √3)(i).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct ExactComplex {
    pub re: ExactScalar,
    pub im: ExactScalar,
}

impl ExactComplex {
    pub fn new(re: ExactScalar, im: ExactScalar) -> Self {
        Self { re, im }
    }

    pub fn real(re: ExactScalar) -> Self {
        Self {
            re,
            im: ExactScalar::zero(),
        }
    }

    pub fn imag(im: ExactScalar) -> Self {
        Self {
            re: ExactScalar::zero(),
            im,
        }
    }

    pub fn int(n: i64) -> Self {
        Self::real(ExactScalar::int(n))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn i() -> Self {
        Self::imag(ExactScalar::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    pub fn norm_sq(&self) -> ExactScalar {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        Self::new(&self.re * s, &self.im * s)
    }

    pub fn recip(&self) -> Option<Self> {
        let inv = self.norm_sq().recip()?;
        Some(self.conj().scale(&inv))
    }

    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

impl From<ExactScalar> for ExactComplex {
    fn from(re: ExactScalar) -> Self {
        Self::real(re)
    }
}

impl<'a> Add<&'a ExactComplex> for &'a ExactComplex {
    type Output = ExactComplex;
    fn add(self, rhs: &ExactComplex) -> ExactComplex {
        ExactComplex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a ExactComplex> for &'a ExactComplex {
    type Output = ExactComplex;
    fn sub(self, rhs: &ExactComplex) -> ExactComplex {
        ExactComplex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a ExactComplex> for &'a ExactComplex {
    type Output = ExactComplex;
    fn mul(self, rhs: &ExactComplex) -> ExactComplex {
        if self.is_real() && rhs.is_real() {
            return ExactComplex::real(&self.re * &rhs.re);
        }
        ExactComplex::new(
            &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        )
    }
}

impl<'a> Div<&'a ExactComplex> for &'a ExactComplex {
    type Output = ExactComplex;
    fn div(self, rhs: &ExactComplex) -> ExactComplex {
        self * &rhs.recip().expect("division by zero in ExactComplex")
    }
}

impl Neg for &ExactComplex {
    type Output = ExactComplex;
    fn neg(self) -> ExactComplex {
        ExactComplex::new(-&self.re, -&self.im)
    }
}

forward_owned_binop!(ExactComplex, Add, add);
forward_owned_binop!(ExactComplex, Sub, sub);
forward_owned_binop!(ExactComplex, Mul, mul);
forward_owned_binop!(ExactComplex, Div, div);

impl Neg for ExactComplex {
    type Output = ExactComplex;
    fn neg(self) -> ExactComplex {
        -&self
    }
}

impl AddAssign<&ExactComplex> for ExactComplex {
    fn add_assign(&mut self, rhs: &ExactComplex) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl fmt::Display for ExactComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "({})i", self.im),
            (false, false) => write!(f, "{} + ({})i", self.re, self.im),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(a: i64, b: i64, c: i64, d: i64) -> ExactScalar {
        ExactScalar::new(
            rational(a, 1),
            rational(b, 1),
            rational(c, 1),
            rational(d, 1),
        )
    }

    #[test]
    fn radicals_multiply_out() {
        assert_eq!(ExactScalar::sqrt2() * ExactScalar::sqrt2(), ExactScalar::int(2));
        assert_eq!(ExactScalar::sqrt2() * ExactScalar::sqrt3(), ExactScalar::sqrt6());
        assert_eq!(
            ExactScalar::sqrt6() * ExactScalar::sqrt3(),
            ExactScalar::sqrt2() * ExactScalar::int(3)
        );
        assert_eq!(ExactScalar::sqrt6() * ExactScalar::sqrt6(), ExactScalar::int(6));
    }

    #[test]
    fn reciprocal_of_mixed_element() {
        let x = s(1, 2, -3, 1);
        let inv = x.recip().unwrap();
        assert_eq!(&x * &inv, ExactScalar::one());
        // 1/√3 = √3/3
        assert_eq!(
            ExactScalar::sqrt3().recip().unwrap(),
            ExactScalar::sqrt3() * ExactScalar::frac(1, 3)
        );
        assert!(ExactScalar::zero().recip().is_none());
    }

    #[test]
    fn signs_are_exact() {
        // √2 + √3 - √6 - 1/2 ≈ 0.1968
        let x = ExactScalar::new(rational(-1, 2), rational(1, 1), rational(1, 1), rational(-1, 1));
        assert!(x.is_positive());
        // √2 + √3 - √6 - 7/10 ≈ -0.0032
        let y = ExactScalar::new(rational(-7, 10), rational(1, 1), rational(1, 1), rational(-1, 1));
        assert!(y.is_negative());
        // 5 - 2√6 ≈ 0.101
        assert!(s(5, 0, 0, -2).is_positive());
        // √3 - √2 > 0, 3√2 - 2√3 - √6 ≈ -1.671
        assert!(s(0, -1, 1, 0).is_positive());
        assert!(s(0, 3, -2, -1).is_negative());
        assert_eq!(ExactScalar::zero().signum(), Ordering::Equal);
    }

    proptest::proptest! {
        #[test]
        fn sign_agrees_with_float(a in -20i64..20, b in -20i64..20, c in -20i64..20, d in -20i64..20) {
            let x = s(a, b, c, d);
            let f = x.to_f64();
            if f.abs() > 1e-9 {
                proptest::prop_assert_eq!(x.is_positive(), f > 0.0);
            }
            if let Some(inv) = x.recip() {
                proptest::prop_assert_eq!(&x * &inv, ExactScalar::one());
            }
        }
    }

    #[test]
    fn json_uses_fraction_strings() {
        let x = ExactScalar::new(rational(1, 2), rational(0, 1), rational(-3, 4), rational(2, 1));
        let js = serde_json::to_string(&x).unwrap();
        assert_eq!(js, r#"{"a":"1/2","b":"0/1","c":"-3/4","d":"2/1"}"#);
        let back: ExactScalar = serde_json::from_str(r#"{"a":"1/2","b":"0","c":"-6/8","d":"2"}"#).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn complex_division() {
        let z = ExactComplex::new(ExactScalar::int(1), ExactScalar::sqrt2());
        let w = z.recip().unwrap();
        assert_eq!(&z * &w, ExactComplex::one());
        assert_eq!(&ExactComplex::i() * &ExactComplex::i(), ExactComplex::int(-1));
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(s(1, 0, -1, 0).to_string(), "1 - √3");
        assert_eq!(ExactScalar::frac(-1, 2).to_string(), "-1/2");
    }
}
