//! Dense univariate polynomials in the formal parameter `q` with exact
//! rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

/// A polynomial in `q` over the rationals, coefficients in ascending degree.
///
/// The trailing coefficient is always nonzero; the zero polynomial holds no
/// coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<Rational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * q^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        QPoly { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree of the polynomial; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides through by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn eval(&self, v: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * v + c)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let Some(nd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if nd < dd {
            return (Self::zero(), self.clone());
        }
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for shift in (0..=nd - dd).rev() {
            let top = &rem[shift + dd];
            if top.is_zero() {
                continue;
            }
            let factor = top * &lc_inv;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[shift + j] -= &factor * d;
                }
            }
            quot[shift] = factor;
        }
        rem.truncate(dd);
        (QPoly::new(quot), QPoly::new(rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return Self::one();
        }
        let (mut a, mut b) = if self.coeffs.len() >= other.coeffs.len() {
            (self.monic(), other.monic())
        } else {
            (other.monic(), self.monic())
        };
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    /// Exact quotient; the caller guarantees divisibility.
    pub(crate) fn exact_div(&self, divisor: &QPoly) -> QPoly {
        if divisor.is_one() {
            return self.clone();
        }
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    fn integer_coeffs(&self) -> Option<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| if c.is_integer() { c.numer().to_i64() } else { None })
            .collect()
    }

    fn mul_small(a: &[i64], b: &[i64]) -> Option<QPoly> {
        let mut out = vec![0i128; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = out[i + j].checked_add(x as i128 * y as i128)?;
            }
        }
        Some(QPoly::new(
            out.into_iter()
                .map(|c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        ))
    }

    fn mul_general(a: &[Rational], b: &[Rational]) -> QPoly {
        let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        QPoly::new(out)
    }

    fn write_term(f: &mut fmt::Formatter<'_>, c: &Rational, k: usize, first: bool) -> fmt::Result {
        let negative = c.is_negative();
        let abs = c.abs();
        if first {
            if negative {
                f.write_str("-")?;
            }
        } else if negative {
            f.write_str(" - ")?;
        } else {
            f.write_str(" + ")?;
        }
        match k {
            0 => write!(f, "{abs}"),
            _ => {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                if k == 1 {
                    f.write_str("q")
                } else {
                    write!(f, "q^{k}")
                }
            }
        }
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            Self::write_term(f, c, k, first)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        QPoly::new(coeffs)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;

    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        // Integer coefficients dominate in practice; multiply them in i128
        // and fall back to big rationals on overflow.
        if let (Some(a), Some(b)) = (self.integer_coeffs(), rhs.integer_coeffs()) {
            if let Some(p) = QPoly::mul_small(&a, &b) {
                return p;
            }
        }
        QPoly::mul_general(&self.coeffs, &rhs.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_integers(c)
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
    }

    #[test]
    fn gcd_of_q_squared_minus_one_and_q_minus_one() {
        let g = p(&[-1, 0, 1]).gcd(&p(&[-1, 1]));
        assert_eq!(g, p(&[-1, 1]));
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[3, -2, 0, 5, 1]);
        let b = p(&[1, 0, 2]);
        let (quot, rem) = a.div_rem(&b);
        assert_eq!(&(&quot * &b) + &rem, a);
        assert!(rem.degree() < b.degree());
    }

    #[test]
    fn small_mul_overflow_falls_back() {
        let big = p(&[i64::MAX, i64::MAX]);
        let sq = &big * &big;
        let m = Rational::from_integer(BigInt::from(i64::MAX));
        assert_eq!(sq.coeff(1), &m * &m * Rational::from_integer(2.into()));
    }

    #[test]
    fn display_ascending() {
        assert_eq!(p(&[1, 1, 2, -1]).to_string(), "1 + q + 2*q^2 - q^3");
        assert_eq!(p(&[0, -1]).to_string(), "-q");
        assert_eq!(
            QPoly::monomial(Rational::new(3.into(), 2.into()), 2).to_string(),
            "3/2*q^2"
        );
    }
}
