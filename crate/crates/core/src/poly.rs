//! Dense polynomials in `x` with [`Scalar`] coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Degree bound applied by the checked operations unless overridden.
pub const DEFAULT_DEGREE_CAP: usize = 64;

/// A polynomial in `x` over `Q(q)`, coefficients in ascending degree.
///
/// Serializes as the JSON array of coefficient text forms.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<Scalar>", into = "Vec<Scalar>")]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(vec![c])
    }

    /// `x`
    pub fn x() -> Self {
        Self::monomial(Scalar::one(), 1)
    }

    /// `c * x^k`
    pub fn monomial(c: Scalar, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Scalar::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// `x - c`
    pub fn x_minus(c: &Scalar) -> Self {
        Self::new(vec![-c, Scalar::one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// `x * p`
    pub fn shift_mul_x(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Scalar::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Horner evaluation at `x := s`.
    pub fn eval(&self, s: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| &(&acc * s) + c)
    }

    /// Errors if the degree exceeds `cap`.
    pub fn check_degree(self, cap: usize) -> Result<Self> {
        match self.degree() {
            Some(d) if d > cap => Err(Error::DegreeOverflow { degree: d, cap }),
            _ => Ok(self),
        }
    }

    /// Product that refuses to build anything above degree `cap`.
    pub fn checked_mul(&self, rhs: &Poly, cap: usize) -> Result<Self> {
        if let (Some(a), Some(b)) = (self.degree(), rhs.degree()) {
            if a + b > cap {
                return Err(Error::DegreeOverflow { degree: a + b, cap });
            }
        }
        Ok(self * rhs)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Applies `f` to every coefficient.
    pub fn try_map_coeffs(&self, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<Self> {
        Ok(Self::new(self.coeffs.iter().map(f).collect::<Result<_>>()?))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (negative, mag) = if !c.is_compound() && c.numer().leading().is_some_and(Signed::is_negative) {
                (true, -c)
            } else {
                (false, c.clone())
            };
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let coef = if mag.is_compound() {
                format!("({mag})")
            } else {
                mag.to_string()
            };
            match k {
                0 => f.write_str(&coef)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{coef}*")?;
                    }
                    if k == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl FromStr for Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::parse::parse_poly(s)
    }
}

impl From<Vec<Scalar>> for Poly {
    fn from(coeffs: Vec<Scalar>) -> Self {
        Poly::new(coeffs)
    }
}

impl From<Poly> for Vec<Scalar> {
    fn from(p: Poly) -> Self {
        p.coeffs
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::new(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Poly::new(out)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}
