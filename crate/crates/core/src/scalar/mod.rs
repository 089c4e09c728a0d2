//! Exact arithmetic in the rational function field `Q(q)`.
//!
//! A [`Scalar`] is a reduced fraction of two [`QPoly`]s with a monic
//! denominator, so structural equality is mathematical equality.

mod qpoly;

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub use qpoly::QPoly;

use crate::error::{Error, Result};

/// Arbitrary-precision rational number; always stored in lowest terms
/// with a positive denominator.
pub type Rational = num_rational::BigRational;

/// An element of `Q(q)` in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Scalar {
    num: QPoly,
    den: QPoly,
}

impl Scalar {
    /// Builds `num / den` and reduces it. Fails when `den` is zero.
    pub fn from_fraction(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_constant() {
            let lc = den.coeff(0);
            if lc.is_one() {
                return Scalar { num, den };
            }
            return Scalar {
                num: num.scale(&lc.recip()),
                den: QPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        let lc_inv = den.leading().expect("nonzero denominator").recip();
        if lc_inv.is_one() {
            Scalar { num, den }
        } else {
            Scalar {
                num: num.scale(&lc_inv),
                den: den.scale(&lc_inv),
            }
        }
    }

    pub fn from_qpoly(p: QPoly) -> Self {
        Scalar {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::from_qpoly(QPoly::constant(r))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::from_rational(Rational::new(n.into(), d.into()))
    }

    /// The formal parameter `q`.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// `q^k`
    pub fn q_pow(k: usize) -> Self {
        Self::from_qpoly(QPoly::monomial(Rational::one(), k))
    }

    /// The q-deformed natural `n_q = 1 + q + ... + q^{n-1}`; `0_q = 0`.
    pub fn q_number(n: usize) -> Self {
        Self::from_qpoly(QPoly::new(vec![Rational::one(); n]))
    }

    pub fn numer(&self) -> &QPoly {
        &self.num
    }

    pub fn denom(&self) -> &QPoly {
        &self.den
    }

    /// True when the value lies in `Q[q]`.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value as a rational number, if it does not depend on `q`.
    pub fn as_rational(&self) -> Option<Rational> {
        (self.is_polynomial() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    /// True when the value depends on `q`.
    pub fn is_symbolic(&self) -> bool {
        !(self.num.is_constant() && self.den.is_constant())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        Scalar {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Specializes `q := v`.
    pub fn eval_q(&self, v: &Rational) -> Result<Rational> {
        let d = self.den.eval(v);
        if d.is_zero() {
            return Err(Error::Pole { at: v.to_string() });
        }
        Ok(self.num.eval(v) / d)
    }

    /// As [`Scalar::eval_q`], wrapped back into a constant `Scalar`.
    pub fn specialize(&self, v: &Rational) -> Result<Self> {
        self.eval_q(v).map(Self::from_rational)
    }

    /// Whether the text form needs parentheses to be used as a factor.
    pub(crate) fn is_compound(&self) -> bool {
        !self.is_polynomial() || self.num.term_count() > 1
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Self::from_qpoly(QPoly::one())
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl From<QPoly> for Scalar {
    fn from(p: QPoly) -> Self {
        Self::from_qpoly(p)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar::from_qpoly(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return Scalar::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Scalar::reduce(num, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar::from_qpoly(&self.num * &rhs.num);
        }
        // Cross-cancel so the product is already reduced.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let num = &self.num.exact_div(&g1) * &rhs.num.exact_div(&g2);
        let den = &self.den.exact_div(&g2) * &rhs.den.exact_div(&g1);
        let lc = den.leading().expect("nonzero denominator").clone();
        if lc.is_one() {
            Scalar { num, den }
        } else {
            let inv = lc.recip();
            Scalar {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }
}

/// Panics on a zero divisor; use [`Scalar::checked_div`] to handle it.
impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("scalar division by zero")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| &acc + x)
    }
}

impl Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |acc, x| acc * x)
    }
}

impl<'a> Product<&'a Scalar> for Scalar {
    fn product<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |acc, x| &acc * x)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.term_count() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if self.den.term_count() > 1 {
            write!(f, " / ({})", self.den)
        } else {
            write!(f, " / {}", self.den)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::parse::parse_scalar(s)
    }
}

impl TryFrom<String> for Scalar {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Scalar> for String {
    fn from(s: Scalar) -> String {
        s.to_string()
    }
}
