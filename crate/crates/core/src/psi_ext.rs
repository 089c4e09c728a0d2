//! Konvalina coefficients with weights drawn from `{n_psi}`; in particular
//! the psi-Stirling numbers
//!
//! ```text
//! [n k]_psi = C_{n-k}^{n-1}(1_psi, ..., (n-1)_psi)
//! {n k}_psi = S_{n-k}^k(1_psi, ..., k_psi)
//! ```

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::konvalina::{c_value, s_table, s_value, WeightVector};
use crate::psi::PsiSequence;
use crate::scalar::Scalar;

/// A weight vector `(j_1 psi, j_2 psi, ...)` for chosen indices `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiWeightVector {
    base: PsiSequence,
    indices: Vec<usize>,
    materialized: WeightVector,
}

impl PsiWeightVector {
    pub fn new(base: PsiSequence, indices: Vec<usize>) -> Result<Self> {
        let weights = indices
            .iter()
            .map(|&j| base.n_psi(j))
            .collect::<Result<Vec<_>>>()?;
        Ok(PsiWeightVector {
            base,
            indices,
            materialized: WeightVector::explicit(weights),
        })
    }

    /// `(1_psi, 2_psi, ..., n_psi)`
    pub fn naturals(base: PsiSequence, n: usize) -> Result<Self> {
        Self::new(base, (1..=n).collect())
    }

    pub fn base(&self) -> &PsiSequence {
        &self.base
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn weights(&self) -> &WeightVector {
        &self.materialized
    }

    /// psi-extended coefficient of the first kind over all weights.
    pub fn c(&self, k: usize) -> Scalar {
        c_value(&self.materialized, k)
    }

    /// psi-extended coefficient of the second kind over all weights.
    pub fn s(&self, k: usize) -> Scalar {
        s_value(&self.materialized, k)
    }
}

/// `[n k]_psi`
pub fn psi_stirling1(psi: &PsiSequence, n: usize, k: usize) -> Result<Scalar> {
    if k > n {
        return Err(Error::IndexOutOfRange { n, k });
    }
    if n == 0 {
        return Ok(Scalar::one());
    }
    Ok(PsiWeightVector::naturals(psi.clone(), n - 1)?.c(n - k))
}

/// `{n k}_psi`
pub fn psi_stirling2(psi: &PsiSequence, n: usize, k: usize) -> Result<Scalar> {
    if k > n {
        return Err(Error::IndexOutOfRange { n, k });
    }
    Ok(PsiWeightVector::naturals(psi.clone(), k)?.s(n - k))
}

/// Row `n` of `[n k]_psi`, `k = 0..=n`.
pub fn psi_stirling1_row(psi: &PsiSequence, n: usize) -> Result<Vec<Scalar>> {
    if n == 0 {
        return Ok(vec![Scalar::one()]);
    }
    let w = PsiWeightVector::naturals(psi.clone(), n - 1)?;
    // C_{n-k}^{n-1} for k = 0..=n; C_n^{n-1} = 0.
    Ok((0..=n).map(|k| w.c(n - k)).collect())
}

/// Column `k` of `{n k}_psi` for `n = 0..=n_max`; zero above the diagonal.
pub fn psi_stirling2_column(psi: &PsiSequence, k: usize, n_max: usize) -> Result<Vec<Scalar>> {
    let w = PsiWeightVector::naturals(psi.clone(), k)?;
    let span = n_max.saturating_sub(k);
    let table = s_table(w.weights(), span, k)?;
    Ok((0..=n_max)
        .map(|n| if n < k { Scalar::zero() } else { table[k][n - k].clone() })
        .collect())
}

/// Rows `0..=rows` of a psi-Stirling triangle.
pub fn psi_stirling_table(psi: &PsiSequence, second_kind: bool, rows: usize) -> Result<Vec<Vec<Scalar>>> {
    if second_kind {
        let columns = (0..=rows)
            .map(|k| psi_stirling2_column(psi, k, rows))
            .collect::<Result<Vec<_>>>()?;
        Ok((0..=rows)
            .map(|n| (0..=n).map(|k| columns[k][n].clone()).collect())
            .collect())
    } else {
        (0..=rows).map(|n| psi_stirling1_row(psi, n)).collect()
    }
}

/// Multiplies by `q^{k(k-1)/2}`, taking the Comtet-normalized second-kind
/// numbers to the `S_q(n, k)` convention.
pub fn comtet_transform(_n: usize, k: usize, value: &Scalar) -> Scalar {
    let e = k * k.saturating_sub(1) / 2;
    value * &Scalar::q_pow(e)
}
