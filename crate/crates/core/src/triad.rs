//! Duality triads: the coefficient array `c(n, k)` generated by
//!
//! ```text
//! c(n+1, k) = i(k-1) c(n, k-1) + q(k) c(n, k) + d(k+1) c(n, k+1),   c(0, k) = [k = 0]
//! ```
//!
//! the dual polynomial sequence
//!
//! ```text
//! x phi_k(x) = d(k) phi_{k-1}(x) + q(k) phi_k(x) + i(k) phi_{k+1}(x),   phi_0 = 1, phi_{-1} = 0
//! ```
//!
//! and the connection identity `x^n = sum_k c(n, k) phi_k(x)` that ties them.

use std::fmt;
use std::path::Path;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Poly, DEFAULT_DEGREE_CAP};
use crate::scalar::Scalar;

/// A coefficient sequence `k -> Scalar`, either by rule or by explicit table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Sequence {
    /// Explicit values for `k = 0, 1, ...`; undefined past the end.
    Table(Vec<Scalar>),
    Rule(Rule),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum Rule {
    /// The same value at every `k`.
    Constant { value: Scalar },
    /// `scale * k + offset`.
    LinearK {
        #[serde(default = "Scalar::one")]
        scale: Scalar,
        #[serde(default)]
        offset: Scalar,
    },
    /// `q^k`.
    QPowerK,
}

impl Sequence {
    pub fn constant(value: Scalar) -> Self {
        Sequence::Rule(Rule::Constant { value })
    }

    /// `k -> k`
    pub fn linear_k() -> Self {
        Sequence::Rule(Rule::LinearK {
            scale: Scalar::one(),
            offset: Scalar::zero(),
        })
    }

    pub fn q_power_k() -> Self {
        Sequence::Rule(Rule::QPowerK)
    }

    pub fn get(&self, name: &str, k: usize) -> Result<Scalar> {
        match self {
            Sequence::Table(values) => values.get(k).cloned().ok_or_else(|| Error::SequenceUndefined {
                name: name.to_string(),
                index: k,
            }),
            Sequence::Rule(Rule::Constant { value }) => Ok(value.clone()),
            Sequence::Rule(Rule::LinearK { scale, offset }) => {
                Ok(&(scale * &Scalar::from_int(k as i64)) + offset)
            }
            Sequence::Rule(Rule::QPowerK) => Ok(Scalar::q_pow(k)),
        }
    }

    fn is_identically_zero(&self) -> bool {
        match self {
            Sequence::Table(values) => values.iter().all(Scalar::is_zero),
            Sequence::Rule(Rule::Constant { value }) => value.is_zero(),
            _ => false,
        }
    }
}

/// The three sequences `i(k)`, `q(k)`, `d(k)` defining a duality triad.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriadSpec {
    #[serde(default)]
    pub name: Option<String>,
    #[serde(rename = "i")]
    pub i_seq: Sequence,
    #[serde(rename = "q")]
    pub q_seq: Sequence,
    #[serde(rename = "d")]
    pub d_seq: Sequence,
    #[serde(default = "default_cap", skip_serializing)]
    pub degree_cap: usize,
}

fn default_cap() -> usize {
    DEFAULT_DEGREE_CAP
}

impl TriadSpec {
    pub fn new(name: impl Into<String>, i_seq: Sequence, q_seq: Sequence, d_seq: Sequence) -> Self {
        TriadSpec {
            name: Some(name.into()),
            i_seq,
            q_seq,
            d_seq,
            degree_cap: DEFAULT_DEGREE_CAP,
        }
    }

    /// `i = 1, q = 1, d = 0`: binomial coefficients, `phi_k = (x-1)^k`.
    pub fn pascal() -> Self {
        Self::new(
            "pascal",
            Sequence::constant(Scalar::one()),
            Sequence::constant(Scalar::one()),
            Sequence::constant(Scalar::zero()),
        )
    }

    /// `i = 1, q = k, d = 0`: Stirling numbers of the second kind,
    /// `phi_k` the falling factorial.
    pub fn stirling2() -> Self {
        Self::new(
            "stirling2",
            Sequence::constant(Scalar::one()),
            Sequence::linear_k(),
            Sequence::constant(Scalar::zero()),
        )
    }

    /// `i = 1, q = q^k, d = 0`: Gaussian coefficients,
    /// `phi_k = prod_{i<k} (x - q^i)`.
    pub fn gauss() -> Self {
        Self::new(
            "gauss",
            Sequence::constant(Scalar::one()),
            Sequence::q_power_k(),
            Sequence::constant(Scalar::zero()),
        )
    }

    /// Looks up a builtin spec by name.
    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "pascal" => Some(Self::pascal()),
            "stirling2" | "stirling" => Some(Self::stirling2()),
            "gauss" | "gauss_q" | "q-gauss" => Some(Self::gauss()),
            _ => None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))
    }

    /// Builtin name, or else a path to a JSON spec file.
    pub fn resolve(name_or_path: &str) -> Result<Self> {
        if let Some(spec) = Self::builtin(name_or_path) {
            return Ok(spec);
        }
        let path = Path::new(name_or_path);
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidSpec(format!("{name_or_path}: {e}")))?;
        let mut spec = Self::from_json(&text)?;
        if spec.name.is_none() {
            spec.name = path.file_stem().map(|s| s.to_string_lossy().into_owned());
        }
        Ok(spec)
    }

    pub fn label(&self) -> &str {
        self.name.as_deref().unwrap_or("unnamed")
    }

    pub fn i(&self, k: usize) -> Result<Scalar> {
        self.i_seq.get("i", k)
    }

    pub fn q(&self, k: usize) -> Result<Scalar> {
        self.q_seq.get("q", k)
    }

    pub fn d(&self, k: usize) -> Result<Scalar> {
        self.d_seq.get("d", k)
    }

    /// True when `d` vanishes identically, i.e. both recurrences have two terms.
    pub fn is_two_term(&self) -> bool {
        self.d_seq.is_identically_zero()
    }
}

/// Triangle `c(n, k)` for `0 <= k <= n <= N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriadTable {
    rows: Vec<Vec<Scalar>>,
}

impl TriadTable {
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        TriadTable { rows }
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<Scalar>> {
        self.rows
    }

    /// `c(n, k)`, zero outside the triangle.
    pub fn get(&self, n: usize, k: usize) -> Scalar {
        self.rows
            .get(n)
            .and_then(|row| row.get(k))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    /// Index of the last row.
    pub fn depth(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }
}

/// Fills rows `0..=rows` of the coefficient array.
pub fn triad_coefficients(spec: &TriadSpec, rows: usize) -> Result<TriadTable> {
    // Sequence values are fetched once per index.
    let i_vals = (0..rows).map(|k| spec.i(k)).collect::<Result<Vec<_>>>()?;
    let q_vals = (0..rows).map(|k| spec.q(k)).collect::<Result<Vec<_>>>()?;
    let d_vals = (1..rows).map(|k| spec.d(k)).collect::<Result<Vec<_>>>()?;

    let mut table = Vec::with_capacity(rows + 1);
    table.push(vec![Scalar::one()]);
    for n in 0..rows {
        let prev: &Vec<Scalar> = &table[n];
        let next = (0..=n + 1)
            .map(|k| {
                let mut acc = Scalar::zero();
                if k >= 1 {
                    acc += &(&i_vals[k - 1] * &prev[k - 1]);
                }
                if k <= n {
                    acc += &(&q_vals[k] * &prev[k]);
                }
                if k < n {
                    acc += &(&d_vals[k] * &prev[k + 1]);
                }
                acc
            })
            .collect();
        table.push(next);
    }
    Ok(TriadTable { rows: table })
}

/// `phi_0, ..., phi_count` from the dual recurrence.
pub fn triad_polynomials(spec: &TriadSpec, count: usize) -> Result<Vec<Poly>> {
    if count > spec.degree_cap {
        return Err(Error::DegreeOverflow {
            degree: count,
            cap: spec.degree_cap,
        });
    }
    let mut phis = Vec::with_capacity(count + 1);
    phis.push(Poly::one());
    for k in 0..count {
        let i_k = spec.i(k)?;
        if i_k.is_zero() {
            return Err(Error::ZeroI { k });
        }
        let phi_k = &phis[k];
        let mut next = &phi_k.shift_mul_x() - &phi_k.scale(&spec.q(k)?);
        if k >= 1 {
            let d_k = spec.d(k)?;
            if !d_k.is_zero() {
                next = &next - &phis[k - 1].scale(&d_k);
            }
        }
        let inv = i_k.recip()?;
        phis.push(if inv.is_one() { next } else { next.scale(&inv) });
    }
    Ok(phis)
}

/// Outcome of checking `x^n = sum_k c(n, k) phi_k(x)` for `n <= depth`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionReport {
    pub spec: String,
    pub depth: usize,
    /// Failing rows with the residual `sum_k c(n,k) phi_k - x^n`.
    pub failures: Vec<(usize, Poly)>,
}

impl ConnectionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for ConnectionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "connection identity holds for {} at n <= {}", self.spec, self.depth);
        }
        writeln!(f, "connection identity fails for {} in {} row(s):", self.spec, self.failures.len())?;
        for (n, residual) in &self.failures {
            writeln!(f, "  n = {n}: residual {residual}")?;
        }
        Ok(())
    }
}

/// Expands `sum_k c(n, k) phi_k(x)` for every `n <= depth` and compares it with `x^n`.
pub fn verify_connection(spec: &TriadSpec, depth: usize) -> Result<ConnectionReport> {
    let phis = triad_polynomials(spec, depth)?;
    let table = triad_coefficients(spec, depth)?;
    let mut failures = Vec::new();
    for (n, row) in table.rows().iter().enumerate() {
        let mut acc = vec![Scalar::zero(); n + 1];
        for (c, phi) in row.iter().zip(&phis) {
            if c.is_zero() {
                continue;
            }
            for (slot, a) in acc.iter_mut().zip(phi.coeffs()) {
                if !a.is_zero() {
                    *slot += &(c * a);
                }
            }
        }
        let residual = &Poly::new(acc) - &Poly::monomial(Scalar::one(), n);
        if !residual.is_zero() {
            failures.push((n, residual));
        }
    }
    Ok(ConnectionReport {
        spec: spec.label().to_string(),
        depth,
        failures,
    })
}

/// Whether `deg phi_k = k` for all `k <= count`.
pub fn verify_degree(spec: &TriadSpec, count: usize) -> Result<bool> {
    let phis = triad_polynomials(spec, count)?;
    Ok(phis.iter().enumerate().all(|(k, p)| p.degree() == Some(k)))
}
