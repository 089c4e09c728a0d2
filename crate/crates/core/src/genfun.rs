//! Truncated power series in `x` over `Q(q)` and the two psi-Stirling
//! generating-function identities:
//!
//! ```text
//! sum_n {n k}_psi x^n = x^k / ((1 - 1_psi x)(1 - 2_psi x) ... (1 - k_psi x))
//! sum_k [n k]_psi x^k = x (x + 1_psi)(x + 2_psi) ... (x + (n-1)_psi)
//! ```

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::psi::PsiSequence;
use crate::psi_ext::{psi_stirling1_row, psi_stirling2_column};
use crate::report::{Check, Report};
use crate::scalar::Scalar;

pub const DEFAULT_ORDER: usize = 20;

/// Coefficients of `x^0..=x^order`; arithmetic is modulo `x^{order+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Scalar>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![Scalar::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(Scalar::one(), 0, order)
    }

    /// `c x^k`, or zero when `k > order`.
    pub fn monomial(c: Scalar, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Truncates or zero-pads to `order`.
    pub fn from_coeffs(mut coeffs: Vec<Scalar>, order: usize) -> Self {
        coeffs.resize(order + 1, Scalar::zero());
        Series { coeffs }
    }

    pub fn from_poly(p: &Poly, order: usize) -> Self {
        Self::from_coeffs(p.coeffs().to_vec(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Scalar {
        &self.coeffs[n]
    }

    fn same_order(&self, other: &Series) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        self.same_order(other)?;
        Ok(Series {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.same_order(other)?;
        let t = self.order();
        let mut out = vec![Scalar::zero(); t + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=t - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Ok(Series { coeffs: out })
    }

    /// `b` with `a b = 1 mod x^{order+1}`, via
    /// `b_0 = 1/a_0`, `b_n = -(sum_{j=1}^n a_j b_{n-j}) / a_0`.
    pub fn recip(&self) -> Result<Series> {
        if self.coeffs[0].is_zero() {
            return Err(Error::NonUnit);
        }
        let inv0 = self.coeffs[0].recip()?;
        let mut out: Vec<Scalar> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..self.coeffs.len() {
            let mut acc = Scalar::zero();
            for j in 1..=n {
                let a = &self.coeffs[j];
                if !a.is_zero() {
                    acc += &(a * &out[n - j]);
                }
            }
            out.push(-(acc * &inv0));
        }
        Ok(Series { coeffs: out })
    }
}

/// Closed form `x^k / prod_{j=1}^k (1 - j_psi x)` as a series.
pub fn stirling2_closed_form(psi: &PsiSequence, k: usize, order: usize) -> Result<Series> {
    let mut denom = Series::one(order);
    for j in 1..=k {
        let factor = Series::from_coeffs(vec![Scalar::one(), -psi.n_psi(j)?], order);
        denom = denom.mul(&factor)?;
    }
    Series::monomial(Scalar::one(), k, order).mul(&denom.recip()?)
}

/// `x (x + 1_psi) ... (x + (n-1)_psi)`
pub fn rising_psi(psi: &PsiSequence, n: usize) -> Result<Poly> {
    let mut acc = Poly::one();
    for j in 0..n {
        acc = &acc * &Poly::x_minus(&-psi.n_psi(j)?);
    }
    Ok(acc)
}

/// Whether `sum_n {n k}_psi x^n` matches its closed form through `x^order`.
pub fn check_gen_stirling2(psi: &PsiSequence, k: usize, order: usize) -> Result<bool> {
    let lhs = Series::from_coeffs(psi_stirling2_column(psi, k, order)?, order);
    Ok(lhs == stirling2_closed_form(psi, k, order)?)
}

/// Whether `sum_k [n k]_psi x^k = x (x + 1_psi) ... (x + (n-1)_psi)` exactly.
pub fn check_gen_stirling1(psi: &PsiSequence, n: usize) -> Result<bool> {
    let lhs = Poly::new(psi_stirling1_row(psi, n)?);
    Ok(lhs == rising_psi(psi, n)?)
}

/// Both identities: the second-kind one for `k <= k_max` to `order`, the
/// first-kind one for `1 <= n <= n_max`.
pub fn genfun_suite(psi: &PsiSequence, k_max: usize, order: usize, n_max: usize) -> Result<Report> {
    let mut report = Report::new(format!("generating functions, psi = {psi}"));
    let mut second = Check::new(format!("{psi}: sum_n {{n k}}_psi x^n closed form, k <= {k_max}, order {order}"));
    for k in 0..=k_max {
        let ok = check_gen_stirling2(psi, k, order)?;
        second.record(ok, || format!("k={k}"));
    }
    let mut first = Check::new(format!("{psi}: sum_k [n k]_psi x^k = x(x+1_psi)...(x+(n-1)_psi), n <= {n_max}"));
    for n in 1..=n_max {
        let ok = check_gen_stirling1(psi, n)?;
        first.record(ok, || format!("n={n}"));
    }
    report.push(second);
    report.push(first);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(texts: &[&str], order: usize) -> Series {
        Series::from_coeffs(texts.iter().map(|t| t.parse().unwrap()).collect(), order)
    }

    #[test]
    fn multiply_truncates() {
        let a = series(&["1", "1"], 3);
        let b = series(&["1", "-1"], 3);
        assert_eq!(a.mul(&b).unwrap(), series(&["1", "0", "-1"], 3));
        assert_eq!(a.mul(&Series::one(3)).unwrap(), a);
        let top = Series::monomial(Scalar::one(), 3, 3);
        let x = Series::monomial(Scalar::one(), 1, 3);
        assert_eq!(top.mul(&x).unwrap(), Series::zero(3));
        assert_eq!(a.mul(&Series::one(4)), Err(Error::OrderMismatch { left: 3, right: 4 }));
    }

    #[test]
    fn reciprocals() {
        let r = series(&["1", "-1"], 4).recip().unwrap();
        assert_eq!(r, series(&["1", "1", "1", "1", "1"], 4));
        assert_eq!(Series::one(4).recip().unwrap(), Series::one(4));
        assert_eq!(Series::monomial(Scalar::one(), 1, 4).recip(), Err(Error::NonUnit));
        let a = series(&["2", "q", "1/(1+q)", "-3"], 6);
        let inv = a.recip().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Series::one(6));
        assert_eq!(inv.mul(&a).unwrap(), Series::one(6));
    }

    #[test]
    fn classical_second_kind_column() {
        let psi = PsiSequence::classical();
        assert!(check_gen_stirling2(&psi, 2, 8).unwrap());
        let closed = stirling2_closed_form(&psi, 2, 8).unwrap();
        let want: Vec<Scalar> = [0, 0, 1, 3, 7, 15, 31, 63, 127].iter().map(|&v| Scalar::from_int(v)).collect();
        assert_eq!(closed.coeffs(), &want[..]);
        assert!(check_gen_stirling2(&psi, 0, 8).unwrap());
    }

    #[test]
    fn q_second_kind_column() {
        assert!(check_gen_stirling2(&PsiSequence::q_factorial(), 2, 8).unwrap());
    }

    #[test]
    fn first_kind_rows() {
        let psi = PsiSequence::classical();
        let p = rising_psi(&psi, 4).unwrap();
        let want: Vec<Scalar> = [0, 6, 11, 6, 1].iter().map(|&v| Scalar::from_int(v)).collect();
        assert_eq!(p.coeffs(), &want[..]);
        assert!(check_gen_stirling1(&psi, 4).unwrap());
        assert_eq!(rising_psi(&psi, 1).unwrap(), Poly::x());
        assert!(check_gen_stirling1(&psi, 1).unwrap());
        assert!(check_gen_stirling1(&PsiSequence::q_factorial(), 5).unwrap());
    }
}
