//! Exact scalar arithmetic: arbitrary-precision integers, reduced
//! rationals, and the quadratic extension ℚ(√5).
//!
//! Rationals are always kept reduced with a positive denominator, so
//! every identity check downstream is a plain componentwise equality.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary-precision signed integer. Serializes as a plain signed
/// decimal string.
pub type Int = BigInt;

/// Reduced fraction with positive denominator. Displays as `p/q`, or
/// just `p` when the denominator is 1.
pub type Rational = BigRational;

/// `n` as an exact integer.
pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// `n` as an exact rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(Int::from(n))
}

/// `n/d` as an exact rational. Panics if `d == 0`; use [`parse_rational`]
/// for untrusted input.
pub fn rat(n: i64, d: i64) -> Rational {
    assert!(d != 0, "rat: zero denominator");
    Rational::new(Int::from(n), Int::from(d))
}

/// Parses `p` or `p/q` into a canonical rational.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let num = Int::from_str(num).map_err(|_| Error::Parse(format!("bad integer `{num}`")))?;
    let den = match den {
        Some(d) => Int::from_str(d).map_err(|_| Error::Parse(format!("bad integer `{d}`")))?,
        None => Int::one(),
    };
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(Rational::new(num, den))
}

/// Exact rational division with an explicit error on a zero divisor.
pub fn checked_div(x: &Rational, y: &Rational) -> Result<Rational, Error> {
    if y.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(x / y)
}

/// An element `a + b·√5` of the real quadratic field ℚ(√5).
///
/// Equality is componentwise; the representation is unique because √5 is
/// irrational. The field houses the golden ratio and its conjugate, the
/// two roots of `x² = x + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Golden {
    /// Rational part.
    pub a: Rational,
    /// Coefficient of √5.
    pub b: Rational,
}

impl Golden {
    pub fn new(a: Rational, b: Rational) -> Self {
        Golden { a, b }
    }

    pub fn from_rational(r: &Rational) -> Self {
        Golden::new(r.clone(), Rational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Golden::from_rational(&rat_int(n))
    }

    pub fn zero() -> Self {
        Golden::from_int(0)
    }

    pub fn one() -> Self {
        Golden::from_int(1)
    }

    /// √5 itself.
    pub fn sqrt5() -> Self {
        Golden::new(Rational::zero(), Rational::one())
    }

    /// The golden ratio φ = (1 + √5)/2, the positive root of `x² = x + 1`.
    pub fn phi() -> Self {
        Golden::new(rat(1, 2), rat(1, 2))
    }

    /// The conjugate root ψ = (1 − √5)/2.
    pub fn psi() -> Self {
        Golden::new(rat(1, 2), rat(-1, 2))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// True when the √5 component vanishes.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The rational part, if the √5 component vanishes.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    /// Field conjugation √5 ↦ −√5.
    pub fn conj(&self) -> Self {
        Golden::new(self.a.clone(), -self.b.clone())
    }

    /// The rational norm `a² − 5b²` (the product with the conjugate).
    pub fn field_norm(&self) -> Rational {
        &self.a * &self.a - rat_int(5) * &self.b * &self.b
    }

    /// Multiplicative inverse: conjugate divided by the rational norm.
    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.field_norm();
        // The norm of a nonzero element is nonzero since 5 is not a
        // rational square.
        debug_assert!(!n.is_zero());
        Ok(Golden::new(&self.a / &n, -&self.b / &n))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, Error> {
        Ok(self * &rhs.inv()?)
    }

    /// Exact `m`-th power for any signed exponent. Negative exponents
    /// invert first, so zero to a negative power is an error.
    pub fn pow(&self, m: i64) -> Result<Self, Error> {
        if m < 0 && self.is_zero() {
            return Err(Error::ZeroToNegativePower(m));
        }
        let base = if m < 0 { self.inv()? } else { self.clone() };
        let mut e = m.unsigned_abs();
        let mut acc = Golden::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }
}

impl Add for &Golden {
    type Output = Golden;
    fn add(self, rhs: &Golden) -> Golden {
        Golden::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &Golden {
    type Output = Golden;
    fn sub(self, rhs: &Golden) -> Golden {
        Golden::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul for &Golden {
    type Output = Golden;
    fn mul(self, rhs: &Golden) -> Golden {
        // (a + b√5)(c + d√5) = (ac + 5bd) + (ad + bc)√5
        let five = rat_int(5);
        Golden::new(
            &self.a * &rhs.a + &five * &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

impl Neg for &Golden {
    type Output = Golden;
    fn neg(self) -> Golden {
        Golden::new(-self.a.clone(), -self.b.clone())
    }
}

macro_rules! forward_golden_binop {
    ($Op:ident, $op:ident) => {
        impl $Op for Golden {
            type Output = Golden;
            fn $op(self, rhs: Golden) -> Golden {
                (&self).$op(&rhs)
            }
        }
        impl $Op<&Golden> for Golden {
            type Output = Golden;
            fn $op(self, rhs: &Golden) -> Golden {
                (&self).$op(rhs)
            }
        }
        impl $Op<Golden> for &Golden {
            type Output = Golden;
            fn $op(self, rhs: Golden) -> Golden {
                self.$op(&rhs)
            }
        }
    };
}

forward_golden_binop!(Add, add);
forward_golden_binop!(Sub, sub);
forward_golden_binop!(Mul, mul);

impl Neg for Golden {
    type Output = Golden;
    fn neg(self) -> Golden {
        -&self
    }
}

impl Div for &Golden {
    type Output = Golden;
    fn div(self, rhs: &Golden) -> Golden {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Div for Golden {
    type Output = Golden;
    fn div(self, rhs: Golden) -> Golden {
        &self / &rhs
    }
}

impl fmt::Display for Golden {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let radical = if self.b.is_one() {
            "√5".to_string()
        } else if (-&self.b).is_one() {
            "-√5".to_string()
        } else {
            format!("{}√5", self.b)
        };
        if self.a.is_zero() {
            write!(f, "{radical}")
        } else if self.b.is_negative() {
            write!(f, "{}{radical}", self.a)
        } else {
            write!(f, "{}+{radical}", self.a)
        }
    }
}

impl Zero for Golden {
    fn zero() -> Self {
        Golden::zero()
    }
    fn is_zero(&self) -> bool {
        Golden::is_zero(self)
    }
}

impl One for Golden {
    fn one() -> Self {
        Golden::one()
    }
}

/// Ring operations shared by the exact coefficient types an algebra
/// element can carry. The by-reference methods avoid forcing clones in
/// the multiplication kernels.
pub trait Scalar:
    Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + Zero + One
{
    fn ring_add(&self, rhs: &Self) -> Self;
    fn ring_sub(&self, rhs: &Self) -> Self;
    fn ring_mul(&self, rhs: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    /// Embeds a rational structure constant into the coefficient ring.
    fn from_rational(r: &Rational) -> Self;
}

impl Scalar for Rational {
    fn ring_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

impl Scalar for Golden {
    fn ring_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn from_rational(r: &Rational) -> Self {
        Golden::from_rational(r)
    }
}
