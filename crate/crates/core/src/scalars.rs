//! Exact arithmetic in the biquadratic field Q(i, √2).
//!
//! Every coefficient that shows up in the bases and bracket tables of this
//! crate lives in `Q ⊕ Q·i ⊕ Q·√2 ⊕ Q·i√2`: halves from the Cartan–Weyl
//! transition, `i` from the Cartan generators and `√2` from the 7×7
//! realisation. A [`Scalar`] stores the four rational coordinates in that
//! basis, so equality is component-wise and exact.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Arbitrary-precision rational; always kept in lowest terms with a positive
/// denominator by `num-rational`.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero scalar")]
    DivisionByZero,
    #[error("malformed rational literal {0:?}")]
    BadRational(String),
}

/// Element `a + b·i + c·√2 + d·i√2` of Q(i, √2).
///
/// Zero is stored without any allocation; matrices over this field are
/// mostly zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    /// `None` for zero; otherwise `[a, b, c, d]`, not all zero.
    parts: Option<Box<[Rational; 4]>>,
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn zero_rational() -> &'static Rational {
    static ZERO: OnceLock<Rational> = OnceLock::new();
    ZERO.get_or_init(Rational::zero)
}

fn rat_mul(x: &Rational, y: &Rational) -> Rational {
    if x.is_zero() || y.is_zero() {
        Rational::zero()
    } else {
        x * y
    }
}

impl Scalar {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        if a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero() {
            Scalar { parts: None }
        } else {
            Scalar {
                parts: Some(Box::new([a, b, c, d])),
            }
        }
    }

    fn from_parts(p: [Rational; 4]) -> Self {
        let [a, b, c, d] = p;
        Scalar::new(a, b, c, d)
    }

    pub fn zero() -> Self {
        Scalar { parts: None }
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(rat(n))
    }

    pub fn from_rational(q: Rational) -> Self {
        Scalar::new(q, Rational::zero(), Rational::zero(), Rational::zero())
    }

    /// `p/q` as a plain rational scalar. Panics on `q == 0`.
    pub fn frac(p: i64, q: i64) -> Self {
        Scalar::from_rational(Rational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn i() -> Self {
        Scalar::from_ints(0, 1, 0, 0)
    }

    pub fn sqrt2() -> Self {
        Scalar::from_ints(0, 0, 1, 0)
    }

    pub fn i_sqrt2() -> Self {
        Scalar::from_ints(0, 0, 0, 1)
    }

    /// Integer coordinates `(a, b, c, d)`, convenient in tests.
    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Scalar::new(rat(a), rat(b), rat(c), rat(d))
    }

    pub fn components(&self) -> [&Rational; 4] {
        match &self.parts {
            Some(p) => [&p[0], &p[1], &p[2], &p[3]],
            None => [zero_rational(); 4],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_none()
    }

    pub fn is_one(&self) -> bool {
        let [a, b, c, d] = self.components();
        a.is_one() && b.is_zero() && c.is_zero() && d.is_zero()
    }

    /// The plain rational value, if the irrational parts vanish.
    pub fn as_rational(&self) -> Option<&Rational> {
        let [a, b, c, d] = self.components();
        (b.is_zero() && c.is_zero() && d.is_zero()).then_some(a)
    }

    /// Integer coordinates, if all four components are integral and fit in `i64`.
    pub fn as_int_components(&self) -> Option<[i64; 4]> {
        let mut out = [0i64; 4];
        for (slot, q) in out.iter_mut().zip(self.components()) {
            if !q.is_integer() {
                return None;
            }
            *slot = i64::try_from(q.to_integer()).ok()?;
        }
        Some(out)
    }

    fn map_signs(&self, signs: [bool; 4]) -> Self {
        match &self.parts {
            None => Scalar::zero(),
            Some(p) => Scalar {
                parts: Some(Box::new(std::array::from_fn(|k| {
                    if signs[k] {
                        -&p[k]
                    } else {
                        p[k].clone()
                    }
                }))),
            },
        }
    }

    /// Conjugation `i ↦ -i`.
    pub fn conj_i(&self) -> Self {
        self.map_signs([false, true, false, true])
    }

    /// Conjugation `√2 ↦ -√2`.
    pub fn conj_sqrt2(&self) -> Self {
        self.map_signs([false, false, true, true])
    }

    /// Field norm down to Q: the product of all four Galois conjugates.
    pub fn norm(&self) -> Rational {
        let y = self * &self.conj_i();
        let z = &y * &y.conj_sqrt2();
        debug_assert!(z.as_rational().is_some());
        z.components()[0].clone()
    }

    /// Multiplicative inverse via the conjugate-norm construction.
    pub fn inverse(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let x1 = self.conj_i();
        let y = self * &x1;
        let y2 = y.conj_sqrt2();
        let n = (&y * &y2).components()[0].clone();
        let num = &x1 * &y2;
        Ok(num.scale(&n.recip()))
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self, ScalarError> {
        Ok(self * &rhs.inverse()?)
    }

    /// Multiply every component by a rational.
    pub fn scale(&self, q: &Rational) -> Self {
        let [a, b, c, d] = self.components();
        Scalar::new(rat_mul(a, q), rat_mul(b, q), rat_mul(c, q), rat_mul(d, q))
    }

    fn mul_ref(&self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        let [a, b, c, d] = self.components();
        let [e, f, g, h] = o.components();
        let two = rat(2);
        // i² = -1, (√2)² = 2, i·√2 = i√2, i·i√2 = -√2, √2·i√2 = 2i, (i√2)² = -2
        let re = rat_mul(a, e) - rat_mul(b, f) + rat_mul(&two, &(rat_mul(c, g) - rat_mul(d, h)));
        let im = rat_mul(a, f) + rat_mul(b, e) + rat_mul(&two, &(rat_mul(c, h) + rat_mul(d, g)));
        let r2 = rat_mul(a, g) + rat_mul(c, e) - rat_mul(b, h) - rat_mul(d, f);
        let ir2 = rat_mul(a, h) + rat_mul(d, e) + rat_mul(b, g) + rat_mul(c, f);
        Scalar::new(re, im, r2, ir2)
    }

    fn combine(&mut self, o: &Scalar, negate: bool) {
        let Some(q) = &o.parts else {
            return;
        };
        match &mut self.parts {
            None => {
                *self = if negate { -o } else { o.clone() };
            }
            Some(p) => {
                for (x, y) in p.iter_mut().zip(q.iter()) {
                    if y.is_zero() {
                        continue;
                    }
                    if negate {
                        *x -= y;
                    } else {
                        *x += y;
                    }
                }
                if p.iter().all(Zero::is_zero) {
                    self.parts = None;
                }
            }
        }
    }

    /// Plain-text rendering, e.g. `-2`, `1/2`, `i/2`, `sqrt2`, `1 + i`.
    pub fn render(&self) -> String {
        self.to_string()
    }

    /// True when the value is a single rational multiple of one of the four
    /// basis units (so it can be printed without parentheses as a coefficient).
    pub fn is_monomial(&self) -> bool {
        self.components().iter().filter(|q| !q.is_zero()).count() <= 1
    }
}

fn fmt_component(q: &Rational, unit: &str, first: bool, out: &mut String) {
    let neg = q.is_negative();
    if first {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    let num = q.numer().abs();
    let den = q.denom();
    if unit.is_empty() || !num.is_one() {
        out.push_str(&num.to_string());
    }
    out.push_str(unit);
    if !den.is_one() {
        out.push('/');
        out.push_str(&den.to_string());
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        let units = ["", "i", "sqrt2", "i*sqrt2"];
        for (q, unit) in self.components().into_iter().zip(units) {
            if !q.is_zero() {
                let first = out.is_empty();
                fmt_component(q, unit, first, &mut out);
            }
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        let mut out = self.clone();
        out.combine(o, false);
        out
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(mut self, o: Scalar) -> Scalar {
        self.combine(&o, false);
        self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        self.combine(o, false);
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        let mut out = self.clone();
        out.combine(o, true);
        out
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(mut self, o: Scalar) -> Scalar {
        self.combine(&o, true);
        self
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        self.combine(o, true);
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        self.mul_ref(o)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        self.mul_ref(&o)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.map_signs([true; 4])
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Parses `p`, `-p` or `p/q` into a normalized rational.
pub fn parse_rational(s: &str) -> Result<Rational, ScalarError> {
    let bad = || ScalarError::BadRational(s.to_string());
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

fn rational_string(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let keys = ["a", "b", "c", "d"];
        let nonzero = self.components().iter().filter(|q| !q.is_zero()).count();
        let mut map = ser.serialize_map(Some(nonzero))?;
        for (k, q) in keys.into_iter().zip(self.components()) {
            if !q.is_zero() {
                map.serialize_entry(k, &rational_string(q))?;
            }
        }
        map.end()
    }
}

struct ScalarVisitor;

impl<'de> Visitor<'de> for ScalarVisitor {
    type Value = Scalar;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an object with optional rational-string fields a, b, c, d")
    }

    fn visit_map<M: MapAccess<'de>>(self, mut map: M) -> Result<Scalar, M::Error> {
        let mut p: [Rational; 4] = Default::default();
        while let Some((key, value)) = map.next_entry::<String, String>()? {
            let q = parse_rational(&value).map_err(de::Error::custom)?;
            let slot = match key.as_str() {
                "a" => 0,
                "b" => 1,
                "c" => 2,
                "d" => 3,
                other => return Err(de::Error::unknown_field(other, &["a", "b", "c", "d"])),
            };
            p[slot] = q;
        }
        Ok(Scalar::from_parts(p))
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Scalar, D::Error> {
        de.deserialize_map(ScalarVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn addition_examples() {
        assert_eq!(Scalar::one() + Scalar::i(), Scalar::from_ints(1, 1, 0, 0));
        assert_eq!(Scalar::frac(1, 2) + Scalar::frac(1, 2), Scalar::one());
    }

    #[test]
    fn defining_relations() {
        assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::from_int(-1));
        assert_eq!(&Scalar::sqrt2() * &Scalar::sqrt2(), Scalar::from_int(2));
        assert_eq!(
            &Scalar::i_sqrt2() * &Scalar::i_sqrt2(),
            Scalar::from_int(-2)
        );
        let p = Scalar::from_ints(1, 0, 0, 1);
        let q = Scalar::from_ints(1, 0, 0, -1);
        assert_eq!(&p * &q, Scalar::from_int(3));
    }

    #[test]
    fn equality_is_normalized() {
        assert_eq!(Scalar::frac(1, 2), Scalar::frac(2, 4));
        assert_ne!(Scalar::i(), Scalar::sqrt2());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(Scalar::zero().inverse(), Err(ScalarError::DivisionByZero));
        assert!(Scalar::one().checked_div(&Scalar::zero()).is_err());
    }

    #[test]
    fn rendering() {
        assert_eq!(Scalar::from_int(-2).to_string(), "-2");
        assert_eq!(Scalar::frac(1, 2).to_string(), "1/2");
        assert_eq!(
            Scalar::i()
                .scale(&Rational::new(1.into(), 2.into()))
                .to_string(),
            "i/2"
        );
        assert_eq!(Scalar::sqrt2().to_string(), "sqrt2");
        assert_eq!((-Scalar::sqrt2()).to_string(), "-sqrt2");
        assert_eq!(Scalar::from_ints(1, -1, 0, 0).to_string(), "1 - i");
        assert_eq!(Scalar::from_ints(0, 0, 3, 0).to_string(), "3sqrt2");
        assert_eq!(Scalar::zero().to_string(), "0");
    }

    #[test]
    fn json_omits_zero_fields() {
        let s = Scalar::new(
            Rational::new((-1).into(), 2.into()),
            Rational::zero(),
            rat(3),
            Rational::zero(),
        );
        let js = serde_json::to_string(&s).unwrap();
        assert_eq!(js, r#"{"a":"-1/2","c":"3"}"#);
        let back: Scalar = serde_json::from_str(&js).unwrap();
        assert_eq!(back, s);
        assert_eq!(serde_json::to_string(&Scalar::zero()).unwrap(), "{}");
    }

    #[test]
    fn parse_rational_rejects_junk() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(
            parse_rational("-6/4").unwrap(),
            Rational::new((-3).into(), 2.into())
        );
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
    }

    fn scalar() -> impl Strategy<Value = Scalar> {
        (
            small_rational(),
            small_rational(),
            small_rational(),
            small_rational(),
        )
            .prop_map(|(a, b, c, d)| Scalar::new(a, b, c, d))
    }

    proptest! {
        #[test]
        fn field_axioms(x in scalar(), y in scalar(), z in scalar()) {
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x + &Scalar::zero(), x.clone());
            prop_assert_eq!(&x * &Scalar::one(), x.clone());
            prop_assert!((&x - &x).is_zero());
        }

        #[test]
        fn nonzero_elements_are_invertible(x in scalar()) {
            prop_assume!(!x.is_zero());
            let inv = x.inverse().unwrap();
            prop_assert_eq!(&x * &inv, Scalar::one());
            prop_assert!(!x.norm().is_zero());
        }

        #[test]
        fn json_round_trip(x in scalar()) {
            let js = serde_json::to_string(&x).unwrap();
            let back: Scalar = serde_json::from_str(&js).unwrap();
            prop_assert_eq!(back, x);
        }
    }
}
