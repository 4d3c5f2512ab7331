//! Exact scalars: rationals and elements of cyclotomic fields Q(ζ_L).
//!
//! An [`ExactScalar`] stores its field order `L` and its coordinates in the
//! power basis `1, ζ_L, …, ζ_L^(φ(L)-1)`, reduced modulo the L-th cyclotomic
//! polynomial. Because the reduction is canonical, zero testing is a
//! coordinate check. Values of different orders are combined in
//! Q(ζ_lcm) on demand; arithmetic results that happen to be rational are
//! stored back at order 1 so the common all-rational path stays cheap.
//!
//! Text form: a rational is written `p/q` or `p`; a cyclotomic value is
//! written with its order in brackets followed by a sum of power terms, e.g.
//! `[3] 1/2 + -1*z^1`.

mod cyclo;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use num_rational::BigRational as Rational;

/// Arithmetic selector for [`scalar_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// An element of Q(ζ_L) with exact rational coordinates.
#[derive(Clone)]
pub struct ExactScalar {
    order: u32,
    coords: Vec<BigRational>,
}

impl ExactScalar {
    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_integer(v: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_rational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_rational(r: BigRational) -> Self {
        ExactScalar { order: 1, coords: vec![r] }
    }

    /// Builds a value from coordinates already expressed in the power basis of
    /// Q(ζ_order). The coordinate count must be φ(order).
    pub fn from_coords(order: u32, coords: Vec<BigRational>) -> Result<Self> {
        if order == 0 {
            return Err(Error::Parameters("cyclotomic order must be positive".into()));
        }
        let phi = cyclo::field(order).phi;
        if coords.len() != phi {
            return Err(Error::Dimension { expected: phi, got: coords.len() });
        }
        Ok(ExactScalar { order, coords })
    }

    /// Σ c_k ζ_order^k for arbitrary integer exponents k, reduced to the basis.
    pub fn from_power_sum(order: u32, terms: &[(i64, BigRational)]) -> Result<Self> {
        if order == 0 {
            return Err(Error::Parameters("cyclotomic order must be positive".into()));
        }
        let field = cyclo::field(order);
        let mut coords = vec![BigRational::zero(); field.phi];
        for (k, c) in terms {
            let m = k.rem_euclid(order as i64) as usize;
            accumulate(&mut coords, &field.powers[m], c);
        }
        Ok(ExactScalar { order, coords })
    }

    /// ζ_L^k.
    pub fn root_of_unity(order: u32, k: i64) -> Self {
        assert!(order >= 1, "root_of_unity needs a positive order");
        Self::from_power_sum(order, &[(k, BigRational::one())])
            .expect("order checked above")
            .normalized()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, when the element lies in Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coords[1..].iter().all(Zero::is_zero) {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    /// Re-expresses the value in Q(ζ_order). Requires `self.order() | order`.
    pub fn lift_to_order(&self, order: u32) -> Result<Self> {
        if order == 0 || !order.is_multiple_of(self.order) {
            return Err(Error::OrderMismatch { from: self.order, to: order });
        }
        if order == self.order {
            return Ok(self.clone());
        }
        let target = cyclo::field(order);
        let step = (order / self.order) as usize;
        let mut coords = vec![BigRational::zero(); target.phi];
        for (i, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                accumulate(&mut coords, &target.powers[(i * step) % order as usize], c);
            }
        }
        Ok(ExactScalar { order, coords })
    }

    /// Drops to order 1 when the value is rational.
    fn normalized(mut self) -> Self {
        if self.order > 1 && self.coords[1..].iter().all(Zero::is_zero) {
            self.coords.truncate(1);
            self.order = 1;
        }
        self
    }

    fn common_order(&self, other: &Self) -> u32 {
        self.order.lcm(&other.order)
    }

    fn lifted_pair(&self, other: &Self) -> (Self, Self) {
        let l = self.common_order(other);
        (
            self.lift_to_order(l).expect("lcm is a multiple"),
            other.lift_to_order(l).expect("lcm is a multiple"),
        )
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Self {
        if self.order == other.order {
            let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| f(a, b)).collect();
            return ExactScalar { order: self.order, coords }.normalized();
        }
        let (a, b) = self.lifted_pair(other);
        a.zip_with(&b, f)
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn neg_ref(&self) -> Self {
        ExactScalar { order: self.order, coords: self.coords.iter().map(|c| -c).collect() }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.order == 1 && other.order == 1 {
            return Self::from_rational(&self.coords[0] * &other.coords[0]);
        }
        if self.order == 1 || other.order == 1 {
            let (r, v) = if self.order == 1 { (&self.coords[0], other) } else { (&other.coords[0], self) };
            if r.is_zero() {
                return Self::zero();
            }
            let coords = v.coords.iter().map(|c| c * r).collect();
            return ExactScalar { order: v.order, coords }.normalized();
        }
        if self.order != other.order {
            let (a, b) = self.lifted_pair(other);
            return a.mul_ref(&b);
        }
        let field = cyclo::field(self.order);
        let l = self.order as usize;
        let mut by_power: Vec<BigRational> = vec![BigRational::zero(); l];
        for (i, a) in self.coords.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coords.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                by_power[(i + j) % l] += a * b;
            }
        }
        let mut coords = vec![BigRational::zero(); field.phi];
        for (m, c) in by_power.iter().enumerate() {
            if !c.is_zero() {
                accumulate(&mut coords, &field.powers[m], c);
            }
        }
        ExactScalar { order: self.order, coords }.normalized()
    }

    /// Image under the Galois automorphism ζ ↦ ζ^k (gcd(k, L) = 1).
    fn conjugate(&self, k: u32) -> Self {
        let field = cyclo::field(self.order);
        let l = self.order as usize;
        let mut coords = vec![BigRational::zero(); field.phi];
        for (i, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                accumulate(&mut coords, &field.powers[(i * k as usize) % l], c);
            }
        }
        ExactScalar { order: self.order, coords }
    }

    /// Multiplicative inverse, computed as the product of the non-trivial
    /// conjugates divided by the (rational) field norm.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(r.recip()));
        }
        let field = cyclo::field(self.order);
        let mut others = Self::one();
        for &k in field.units.iter().filter(|&&k| k != 1) {
            others = others.mul_ref(&self.conjugate(k));
        }
        let norm = self.mul_ref(&others);
        let norm = norm.as_rational().expect("field norm is rational").clone();
        debug_assert!(!norm.is_zero());
        Ok(others.mul_ref(&Self::from_rational(norm.recip())))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul_ref(&other.inv()?))
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul_ref(&sq);
            }
        }
        Ok(acc)
    }
}

fn accumulate(coords: &mut [BigRational], basis_image: &[i64], c: &BigRational) {
    for (slot, &v) in coords.iter_mut().zip(basis_image) {
        match v {
            0 => {}
            1 => *slot += c,
            -1 => *slot -= c,
            _ => *slot += c * BigRational::from_integer(BigInt::from(v)),
        }
    }
}

/// Exact field arithmetic on two scalars; division by zero is an error value.
pub fn scalar_arith(a: &ExactScalar, b: &ExactScalar, op: ArithOp) -> Result<ExactScalar> {
    Ok(match op {
        ArithOp::Add => a.add_ref(b),
        ArithOp::Sub => a.sub_ref(b),
        ArithOp::Mul => a.mul_ref(b),
        ArithOp::Div => a.checked_div(b)?,
    })
}

/// ζ_L^k in canonical form.
pub fn root_of_unity(order: u32, k: i64) -> ExactScalar {
    ExactScalar::root_of_unity(order, k)
}

/// Re-expresses `a` in Q(ζ_order).
pub fn lift_to_order(a: &ExactScalar, order: u32) -> Result<ExactScalar> {
    a.lift_to_order(order)
}

impl PartialEq for ExactScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coords == other.coords;
        }
        let (a, b) = self.lifted_pair(other);
        a.coords == b.coords
    }
}

impl Eq for ExactScalar {}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactScalar({self})")
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl $trait<&ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                self.$impl_fn(rhs)
            }
        }
        impl $trait for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                (&self).$impl_fn(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        self.neg_ref()
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        self.neg_ref()
    }
}

impl From<i64> for ExactScalar {
    fn from(v: i64) -> Self {
        Self::from_integer(v)
    }
}

impl From<BigRational> for ExactScalar {
    fn from(r: BigRational) -> Self {
        Self::from_rational(r)
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.order == 1 {
            return write!(f, "{}", self.coords[0]);
        }
        write!(f, "[{}] ", self.order)?;
        let mut first = true;
        for (k, c) in self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*z^{k}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn parse_error(literal: &str, reason: impl Into<String>) -> Error {
    Error::Parse { literal: literal.to_string(), reason: reason.into() }
}

/// Parses `p/q` or `p` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let valid = |part: &str| {
        let digits = part.strip_prefix('-').unwrap_or(part);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    if !valid(num) || !valid(den) || den.starts_with('-') {
        return Err(parse_error(s, "expected an exact rational p/q or integer p"));
    }
    let num: BigInt = num.parse().map_err(|_| parse_error(s, "bad numerator"))?;
    let den: BigInt = den.parse().map_err(|_| parse_error(s, "bad denominator"))?;
    if den.is_zero() {
        return Err(parse_error(s, "zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

fn parse_term(lit: &str, term: &str) -> Result<(i64, BigRational)> {
    let term = term.trim();
    if term.is_empty() {
        return Err(parse_error(lit, "empty term"));
    }
    let (coef, power) = match term.find('z') {
        None => (term, None),
        Some(pos) => {
            let (head, tail) = term.split_at(pos);
            let exp = match tail.strip_prefix('z').unwrap().trim() {
                "" => 1,
                rest => rest
                    .strip_prefix('^')
                    .and_then(|e| e.trim().parse::<i64>().ok())
                    .ok_or_else(|| parse_error(lit, format!("bad power in term {term:?}")))?,
            };
            let head = head.trim();
            let coef = match head.strip_suffix('*') {
                Some(c) => c.trim(),
                None if head.is_empty() => "1",
                None if head == "-" => "-1",
                None => return Err(parse_error(lit, format!("missing '*' in term {term:?}"))),
            };
            (coef, Some(exp))
        }
    };
    let c = parse_rational(coef).map_err(|_| parse_error(lit, format!("bad coefficient in term {term:?}")))?;
    Ok((power.unwrap_or(0), c))
}

impl FromStr for ExactScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (order, body) = match t.strip_prefix('[') {
            Some(rest) => {
                let (o, body) = rest.split_once(']').ok_or_else(|| parse_error(s, "unterminated order"))?;
                let order: u32 = o.trim().parse().map_err(|_| parse_error(s, "bad order"))?;
                if order == 0 {
                    return Err(parse_error(s, "order must be positive"));
                }
                (order, body)
            }
            None => (1, t),
        };
        let body = body.replace(" - ", " + -");
        let terms = body.split('+').map(|term| parse_term(s, term)).collect::<Result<Vec<_>>>()?;
        if order == 1 && terms.iter().any(|(k, _)| *k != 0) {
            return Err(parse_error(s, "powers of z need a declared order, e.g. [3] z^1"));
        }
        ExactScalar::from_power_sum(order, &terms)
    }
}

impl Serialize for ExactScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExactScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct Visitor;
        impl de::Visitor<'_> for Visitor {
            type Value = ExactScalar;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an exact scalar literal string or an integer")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<ExactScalar, E> {
                v.parse().map_err(E::custom)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<ExactScalar, E> {
                Ok(ExactScalar::from_integer(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<ExactScalar, E> {
                Ok(ExactScalar::from_rational(BigRational::from_integer(v.into())))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<ExactScalar, E> {
                Err(E::custom(format!("floating-point value {v} rejected; write it as an exact rational")))
            }
        }
        deserializer.deserialize_any(Visitor)
    }
}

/// Sign of a rational scalar, if the value is rational.
pub fn rational_sign(a: &ExactScalar) -> Option<i8> {
    a.as_rational().map(|r| if r.is_zero() { 0 } else if r.is_positive() { 1 } else { -1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> ExactScalar {
        s.parse().unwrap()
    }

    #[test]
    fn rational_sum() {
        assert_eq!(q("1/2") + q("1/3"), q("5/6"));
        assert_eq!((q("1/2") + q("1/3")).to_string(), "5/6");
    }

    #[test]
    fn cube_root_relations() {
        let z = root_of_unity(3, 1);
        assert!((&(&z * &z) * &z).is_one());
        let s = &(&(&z * &z) + &z) + &ExactScalar::one();
        assert!(s.is_zero());
    }

    #[test]
    fn root_of_unity_examples() {
        assert_eq!(root_of_unity(2, 1), ExactScalar::from_integer(-1));
        assert_eq!(root_of_unity(4, 2), ExactScalar::from_integer(-1));
        assert!(root_of_unity(1, 7).is_one());
        let z = root_of_unity(3, 1);
        assert!((&(&z * &z) + &z + ExactScalar::one()).is_zero());
        assert_eq!(root_of_unity(6, 2), root_of_unity(3, 1));
        assert_eq!(root_of_unity(5, -1), root_of_unity(5, 4));
    }

    #[test]
    fn lifting() {
        let half = q("1/2");
        let l = half.lift_to_order(3).unwrap();
        assert_eq!(l.order(), 3);
        assert_eq!(l.coords(), &[BigRational::new(1.into(), 2.into()), BigRational::zero()]);
        let minus_one = ExactScalar::from_coords(2, vec![BigRational::from_integer((-1).into())]).unwrap();
        let lifted = minus_one.lift_to_order(4).unwrap();
        assert_eq!(lifted.order(), 4);
        assert_eq!(lifted, root_of_unity(4, 2));
        let a = root_of_unity(3, 1);
        assert_eq!(a.lift_to_order(6).unwrap().lift_to_order(6).unwrap(), a.lift_to_order(6).unwrap());
        assert!(matches!(a.lift_to_order(4), Err(Error::OrderMismatch { from: 3, to: 4 })));
    }

    #[test]
    fn division() {
        let z = root_of_unity(5, 2);
        let a = &z + &q("3");
        let inv = a.inv().unwrap();
        assert!((&a * &inv).is_one());
        assert_eq!(q("1").checked_div(&ExactScalar::zero()), Err(Error::DivisionByZero));
        assert_eq!(scalar_arith(&q("1/2"), &q("1/4"), ArithOp::Div).unwrap(), q("2"));
        assert_eq!(z.pow(-2).unwrap(), root_of_unity(5, 1));
    }

    #[test]
    fn text_round_trip() {
        for lit in ["0", "-7", "3/4", "[3] 1/2 + -1*z^1", "[5] -2*z^2 + 1/3*z^3", "[3] 0"] {
            let v = q(lit);
            assert_eq!(v.to_string(), lit);
            assert_eq!(q(&v.to_string()).to_string(), lit);
        }
        assert_eq!(q("[4] z^2"), q("-1"));
        assert_eq!(q("[3] 1 - z"), q("[3] 1 + -1*z^1"));
        assert_eq!(q("6/4").to_string(), "3/2");
    }

    #[test]
    fn malformed_literals() {
        for bad in ["", "1/0", "1.5", "z", "[0] 1", "[3 1", "2z", "abc", "1//2", "[3] 1 +"] {
            assert!(bad.parse::<ExactScalar>().is_err(), "{bad:?} should fail");
        }
    }

    #[test]
    fn json_forms() {
        let v: ExactScalar = serde_json::from_str("\"[3] z^1\"").unwrap();
        assert_eq!(v, root_of_unity(3, 1));
        let v: ExactScalar = serde_json::from_str("-4").unwrap();
        assert_eq!(v, q("-4"));
        assert!(serde_json::from_str::<ExactScalar>("0.5").is_err());
        assert_eq!(serde_json::to_string(&q("2/3")).unwrap(), "\"2/3\"");
    }
}
