//! Operators on `F[x]` that are diagonal in the monomial basis.
//!
//! The mutator `qhat_psi`, the deformed naturals `n_qhat`, and every
//! KonKwa operator built from polynomials in `qhat_psi` act on `x^m` by a
//! scalar. A [`DiagOp`] stores those scalars for `m = 0..=depth`, so
//! sums and products of operators become pointwise sums and products, and
//! a KonKwa operator's eigenvalue on `x^m` is a scalar Konvalina
//! coefficient of the weights' eigenvalues on `x^m`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::konvalina::{c_value, s_value, Kind, WeightVector};
use crate::poly::Poly;
use crate::psi::PsiSequence;
use crate::scalar::Scalar;

/// Degree bound used when none is given.
pub const DEFAULT_OP_DEPTH: usize = 16;

/// A linear operator with `op(x^m) = eigen[m] * x^m` for `m <= depth`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagOp {
    eigen: Vec<Scalar>,
}

impl DiagOp {
    pub fn from_eigenvalues(eigen: Vec<Scalar>) -> Self {
        assert!(!eigen.is_empty(), "an operator needs at least the x^0 eigenvalue");
        DiagOp { eigen }
    }

    pub fn identity(depth: usize) -> Self {
        DiagOp {
            eigen: vec![Scalar::one(); depth + 1],
        }
    }

    pub fn zero(depth: usize) -> Self {
        DiagOp {
            eigen: vec![Scalar::zero(); depth + 1],
        }
    }

    /// Multiplication by a constant.
    pub fn scalar(c: Scalar, depth: usize) -> Self {
        DiagOp {
            eigen: vec![c; depth + 1],
        }
    }

    pub fn depth(&self) -> usize {
        self.eigen.len() - 1
    }

    pub fn eigenvalue(&self, m: usize) -> &Scalar {
        &self.eigen[m]
    }

    pub fn eigenvalues(&self) -> &[Scalar] {
        &self.eigen
    }

    fn zip_with(&self, other: &DiagOp, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<DiagOp> {
        if self.depth() != other.depth() {
            return Err(Error::DepthMismatch {
                left: self.depth(),
                right: other.depth(),
            });
        }
        Ok(DiagOp {
            eigen: self.eigen.iter().zip(&other.eigen).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &DiagOp) -> Result<DiagOp> {
        self.zip_with(other, |a, b| a + b)
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &DiagOp) -> Result<DiagOp> {
        self.zip_with(other, |a, b| a * b)
    }

    pub fn scale(&self, c: &Scalar) -> DiagOp {
        DiagOp {
            eigen: self.eigen.iter().map(|e| e * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> DiagOp {
        DiagOp {
            eigen: self.eigen.iter().map(|v| v.pow(e)).collect(),
        }
    }

    /// Applies the operator to a polynomial of degree at most `depth`.
    pub fn apply(&self, p: &Poly) -> Result<Poly> {
        if let Some(d) = p.degree() {
            if d > self.depth() {
                return Err(Error::DepthExceeded {
                    degree: d,
                    depth: self.depth(),
                });
            }
        }
        Ok(Poly::new(
            p.coeffs().iter().zip(&self.eigen).map(|(c, e)| c * e).collect(),
        ))
    }

    /// Whether this operator is multiplication by `c` on every monomial.
    pub fn is_multiplication_by(&self, c: &Scalar) -> bool {
        self.eigen.iter().all(|e| e == c)
    }
}

/// The mutator `qhat_psi` with eigenvalue `((m+1)_psi - 1) / m_psi` on `x^m`
/// for `m >= 1`, and the `m = 1` value on `x^0`.
///
/// Under `psi_n = 1/n_q!` every eigenvalue is `q`.
pub fn qhat(psi: &PsiSequence, depth: usize) -> Result<DiagOp> {
    let table = psi.table(depth.max(1) + 1)?;
    let mut eigen = Vec::with_capacity(depth + 1);
    for m in 1..=depth.max(1) {
        let num = table.n_psi(m + 1) - &Scalar::one();
        eigen.push(num.checked_div(table.n_psi(m))?);
    }
    eigen.insert(0, eigen[0].clone());
    eigen.truncate(depth + 1);
    Ok(DiagOp { eigen })
}

/// `n_qhat = 1 + qhat + ... + qhat^{n-1}`; the zero operator when `n = 0`.
pub fn n_qhat(psi: &PsiSequence, n: usize, depth: usize) -> Result<DiagOp> {
    let base = qhat(psi, depth)?;
    Ok(geometric(&base, n))
}

fn geometric(base: &DiagOp, n: usize) -> DiagOp {
    DiagOp {
        eigen: base
            .eigen
            .iter()
            .map(|lambda| {
                let mut acc = Scalar::zero();
                let mut power = Scalar::one();
                for _ in 0..n {
                    acc += &power;
                    power *= lambda;
                }
                acc
            })
            .collect(),
    }
}

/// Weights `w_i(qhat) = sum_{j<i} a_{i,j} qhat^j`, all polynomials in one
/// shared diagonal operator, so they commute.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpWeightVector {
    base: DiagOp,
    entries: Vec<Vec<Scalar>>,
}

impl OpWeightVector {
    /// `entries[i-1]` holds `a_{i,0}, a_{i,1}, ...` for weight `i`; weight
    /// `i` may have degree at most `i - 1` in `qhat`.
    pub fn new(base: DiagOp, entries: Vec<Vec<Scalar>>) -> Result<Self> {
        for (idx, coeffs) in entries.iter().enumerate() {
            let degree = coeffs.iter().rposition(|c| !c.is_zero()).unwrap_or(0);
            if degree > idx {
                return Err(Error::WeightDegree {
                    index: idx + 1,
                    degree,
                    max: idx,
                });
            }
        }
        Ok(OpWeightVector { base, entries })
    }

    /// `(1, qhat, qhat^2, ..., qhat^{n-1})`
    pub fn powers(base: DiagOp, n: usize) -> Self {
        let entries = (0..n)
            .map(|i| {
                let mut c = vec![Scalar::zero(); i + 1];
                c[i] = Scalar::one();
                c
            })
            .collect();
        OpWeightVector { base, entries }
    }

    /// `(1_qhat, 2_qhat, ..., n_qhat)`
    pub fn naturals(base: DiagOp, n: usize) -> Self {
        let entries = (1..=n).map(|i| vec![Scalar::one(); i]).collect();
        OpWeightVector { base, entries }
    }

    pub fn base(&self) -> &DiagOp {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn depth(&self) -> usize {
        self.base.depth()
    }

    pub fn prefix(&self, n: usize) -> Self {
        OpWeightVector {
            base: self.base.clone(),
            entries: self.entries[..n.min(self.len())].to_vec(),
        }
    }

    fn entry_eigenvalue(coeffs: &[Scalar], lambda: &Scalar) -> Scalar {
        coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, a| &(&acc * lambda) + a)
    }

    /// The operator `w_i(qhat)`, 1-indexed.
    pub fn entry(&self, i: usize) -> DiagOp {
        let coeffs = &self.entries[i - 1];
        DiagOp {
            eigen: self
                .base
                .eigen
                .iter()
                .map(|lambda| Self::entry_eigenvalue(coeffs, lambda))
                .collect(),
        }
    }

    /// The scalar weights seen by the monomial `x^m`.
    pub fn weights_at(&self, m: usize) -> WeightVector {
        let lambda = self.base.eigenvalue(m);
        WeightVector::explicit(
            self.entries
                .iter()
                .map(|coeffs| Self::entry_eigenvalue(coeffs, lambda))
                .collect(),
        )
    }
}

fn konkwa(ow: &OpWeightVector, kind: Kind, k: usize) -> DiagOp {
    DiagOp {
        eigen: (0..=ow.depth())
            .map(|m| {
                let w = ow.weights_at(m);
                match kind {
                    Kind::First => c_value(&w, k),
                    Kind::Second => s_value(&w, k),
                }
            })
            .collect(),
    }
}

/// KonKwa operator of the first kind, `C_k^n(w(qhat))`.
pub fn konkwa_c(ow: &OpWeightVector, k: usize) -> DiagOp {
    konkwa(ow, Kind::First, k)
}

/// KonKwa operator of the second kind, `S_k^n(w(qhat))`.
pub fn konkwa_s(ow: &OpWeightVector, k: usize) -> DiagOp {
    konkwa(ow, Kind::Second, k)
}

/// The operator-valued arrays obtained from the three classical Konvalina forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorArray {
    /// `binom(n,k)_qhat = S_k^{n-k+1}(1, qhat, ..., qhat^{n-k})`
    Binomial,
    /// `{n k}_qhat = S_{n-k}^k(1_qhat, ..., k_qhat)`
    Stirling2,
    /// `[n k]_qhat = C_{n-k}^{n-1}(1_qhat, ..., (n-1)_qhat)`
    Stirling1,
}

impl std::str::FromStr for OperatorArray {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "binom" | "binomial" => Ok(OperatorArray::Binomial),
            "stirling2" => Ok(OperatorArray::Stirling2),
            "stirling1" => Ok(OperatorArray::Stirling1),
            other => Err(Error::Parse {
                offset: 0,
                message: format!("unknown operator array `{other}`"),
            }),
        }
    }
}

/// The `(n, k)` entry of an operator-valued array over `qhat_psi`.
pub fn operator_array(array: OperatorArray, psi: &PsiSequence, n: usize, k: usize, depth: usize) -> Result<DiagOp> {
    if k > n {
        return Err(Error::IndexOutOfRange { n, k });
    }
    let base = qhat(psi, depth)?;
    Ok(match array {
        OperatorArray::Binomial => konkwa_s(&OpWeightVector::powers(base, n - k + 1), k),
        OperatorArray::Stirling2 => konkwa_s(&OpWeightVector::naturals(base, k), n - k),
        OperatorArray::Stirling1 => {
            if n == 0 {
                DiagOp::identity(depth)
            } else {
                konkwa_c(&OpWeightVector::naturals(base, n - 1), n - k)
            }
        }
    })
}
