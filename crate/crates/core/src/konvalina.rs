//! Konvalina generalized binomial coefficients.
//!
//! For a weight vector `w = (w_1, ..., w_n)`:
//!
//! * first kind `C_k^n(w)`: sum over `1 <= i_1 < ... < i_k <= n` of
//!   `w_{i_1} ... w_{i_k}`, the elementary symmetric polynomial `e_k(w)`;
//! * second kind `S_k^n(w)`: the same over `i_1 <= ... <= i_k`, the
//!   complete homogeneous symmetric polynomial `h_k(w)`.
//!
//! Each kind has a definitional enumeration (`*_oracle`, exponential, meant
//! for cross-checking) and a recurrence path used everywhere else.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::{Check, Report};
use crate::scalar::Scalar;

/// Named weight-vector generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeightRule {
    /// `(1, 1, ..., 1)`
    Ones,
    /// `(1, 2, ..., n)`
    Naturals,
    /// `(1, q, ..., q^{n-1})`
    QPowers,
}

impl WeightRule {
    /// The `i`-th weight, 1-indexed.
    pub fn weight(self, i: usize) -> Scalar {
        match self {
            WeightRule::Ones => Scalar::one(),
            WeightRule::Naturals => Scalar::from_int(i as i64),
            WeightRule::QPowers => Scalar::q_pow(i - 1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            WeightRule::Ones => "ones",
            WeightRule::Naturals => "naturals",
            WeightRule::QPowers => "qpowers",
        }
    }
}

impl FromStr for WeightRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ones" => Ok(WeightRule::Ones),
            "naturals" => Ok(WeightRule::Naturals),
            "qpowers" => Ok(WeightRule::QPowers),
            other => Err(Error::Parse {
                offset: 0,
                message: format!("unknown weight rule `{other}`"),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightSource {
    Explicit,
    Rule(WeightRule),
}

/// Box weights `w_1, ..., w_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    weights: Vec<Scalar>,
    source: WeightSource,
}

impl WeightVector {
    pub fn explicit(weights: Vec<Scalar>) -> Self {
        WeightVector {
            weights,
            source: WeightSource::Explicit,
        }
    }

    pub fn from_ints(weights: &[i64]) -> Self {
        Self::explicit(weights.iter().map(|&w| Scalar::from_int(w)).collect())
    }

    pub fn from_rule(rule: WeightRule, len: usize) -> Self {
        WeightVector {
            weights: (1..=len).map(|i| rule.weight(i)).collect(),
            source: WeightSource::Rule(rule),
        }
    }

    pub fn ones(len: usize) -> Self {
        Self::from_rule(WeightRule::Ones, len)
    }

    pub fn naturals(len: usize) -> Self {
        Self::from_rule(WeightRule::Naturals, len)
    }

    pub fn q_powers(len: usize) -> Self {
        Self::from_rule(WeightRule::QPowers, len)
    }

    pub fn weights(&self) -> &[Scalar] {
        &self.weights
    }

    pub fn source(&self) -> &WeightSource {
        &self.source
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// `w_i`, 1-indexed.
    pub fn get(&self, i: usize) -> Option<&Scalar> {
        i.checked_sub(1).and_then(|j| self.weights.get(j))
    }

    /// The first `n` weights; keeps the rule tag.
    pub fn prefix(&self, n: usize) -> Self {
        WeightVector {
            weights: self.weights[..n.min(self.len())].to_vec(),
            source: self.source.clone(),
        }
    }

    /// `(w_{split+1}, ..., w_n)`.
    pub fn tail(&self, split: usize) -> Self {
        Self::explicit(self.weights[split.min(self.len())..].to_vec())
    }

    fn require(&self, needed: usize) -> Result<()> {
        if needed > self.len() {
            return Err(Error::WeightsTooShort {
                needed,
                len: self.len(),
            });
        }
        Ok(())
    }
}

/// Which Konvalina coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// Distinct boxes.
    First,
    /// Boxes may repeat.
    Second,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::First => "first",
            Kind::Second => "second",
        })
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "first" | "1" => Ok(Kind::First),
            "second" | "2" => Ok(Kind::Second),
            other => Err(Error::Parse {
                offset: 0,
                message: format!("unknown kind `{other}`"),
            }),
        }
    }
}

fn enumerate(weights: &[Scalar], start: usize, remaining: usize, repeat: bool, prefix: &Scalar, acc: &mut Scalar) {
    if remaining == 0 {
        *acc += prefix;
        return;
    }
    let end = if repeat {
        weights.len()
    } else {
        (weights.len() + 1).saturating_sub(remaining)
    };
    for i in start..end {
        let next = prefix * &weights[i];
        let from = if repeat { i } else { i + 1 };
        enumerate(weights, from, remaining - 1, repeat, &next, acc);
    }
}

/// `C_k^n(w)` by direct enumeration of strictly increasing index tuples.
pub fn c_oracle(w: &WeightVector, k: usize) -> Scalar {
    let mut acc = Scalar::zero();
    if k <= w.len() {
        enumerate(w.weights(), 0, k, false, &Scalar::one(), &mut acc);
    }
    acc
}

/// `S_k^n(w)` by direct enumeration of weakly increasing index tuples.
pub fn s_oracle(w: &WeightVector, k: usize) -> Scalar {
    let mut acc = Scalar::zero();
    enumerate(w.weights(), 0, k, true, &Scalar::one(), &mut acc);
    acc
}

/// Rows `m = 0..=rows` of `C_k^m(w)`, `k = 0..=m`, via
/// `C_k^m = C_k^{m-1} + w_m C_{k-1}^{m-1}`.
pub fn c_table(w: &WeightVector, rows: usize) -> Result<Vec<Vec<Scalar>>> {
    w.require(rows)?;
    let mut table: Vec<Vec<Scalar>> = Vec::with_capacity(rows + 1);
    table.push(vec![Scalar::one()]);
    for m in 1..=rows {
        let prev = &table[m - 1];
        let wm = &w.weights()[m - 1];
        let row = (0..=m)
            .map(|k| {
                let keep = prev.get(k).cloned().unwrap_or_else(Scalar::zero);
                if k == 0 {
                    keep
                } else {
                    &keep + &(wm * &prev[k - 1])
                }
            })
            .collect();
        table.push(row);
    }
    Ok(table)
}

/// `S_k^m(w)` for `m <= n_max`, `k <= k_max`, indexed `[m][k]`, via
/// `S_k^m = S_k^{m-1} + w_m S_{k-1}^m`.
pub fn s_table(w: &WeightVector, k_max: usize, n_max: usize) -> Result<Vec<Vec<Scalar>>> {
    w.require(n_max)?;
    let mut table: Vec<Vec<Scalar>> = Vec::with_capacity(n_max + 1);
    let mut first = vec![Scalar::zero(); k_max + 1];
    first[0] = Scalar::one();
    table.push(first);
    for m in 1..=n_max {
        let wm = &w.weights()[m - 1];
        let mut row: Vec<Scalar> = Vec::with_capacity(k_max + 1);
        row.push(Scalar::one());
        for k in 1..=k_max {
            let v = &table[m - 1][k] + &(wm * &row[k - 1]);
            row.push(v);
        }
        table.push(row);
    }
    Ok(table)
}

/// `C_k^n(w)` over all of `w`, in `O(nk)` scalar operations.
pub fn c_value(w: &WeightVector, k: usize) -> Scalar {
    if k > w.len() {
        return Scalar::zero();
    }
    let mut e = vec![Scalar::zero(); k + 1];
    e[0] = Scalar::one();
    for (m, wm) in w.weights().iter().enumerate() {
        for j in (1..=k.min(m + 1)).rev() {
            let add = wm * &e[j - 1];
            e[j] += &add;
        }
    }
    e.swap_remove(k)
}

/// `S_k^n(w)` over all of `w`, in `O(nk)` scalar operations.
pub fn s_value(w: &WeightVector, k: usize) -> Scalar {
    let mut h = vec![Scalar::zero(); k + 1];
    h[0] = Scalar::one();
    for wm in w.weights() {
        for j in 1..=k {
            let add = wm * &h[j - 1];
            h[j] += &add;
        }
    }
    h.swap_remove(k)
}

/// The coefficient of the given kind over all of `w`.
pub fn value(w: &WeightVector, kind: Kind, k: usize) -> Scalar {
    match kind {
        Kind::First => c_value(w, k),
        Kind::Second => s_value(w, k),
    }
}

/// Triangle of `Sbar_k^m(w)` for `0 <= k <= m <= n_max` by
/// `Sbar_k^m = w_k Sbar_k^{m-1} + Sbar_{k-1}^{m-1}`.
///
/// `Sbar_k^m = S_{m-k}^k(w)`; in particular `Sbar_0^m = [m = 0]`, which the
/// recurrence reproduces with `w_0 = 0`.
pub fn sbar_table(w: &WeightVector, n_max: usize) -> Result<Vec<Vec<Scalar>>> {
    w.require(n_max.saturating_sub(1))?;
    let mut table: Vec<Vec<Scalar>> = Vec::with_capacity(n_max + 1);
    table.push(vec![Scalar::one()]);
    for m in 1..=n_max {
        let prev = &table[m - 1];
        let row = (0..=m)
            .map(|k| {
                let mut acc = if k == 0 {
                    Scalar::zero()
                } else {
                    prev[k - 1].clone()
                };
                if k >= 1 && k < m {
                    acc += &(&w.weights()[k - 1] * &prev[k]);
                }
                acc
            })
            .collect();
        table.push(row);
    }
    Ok(table)
}

/// `Sbar_k^n(w)`; zero for `k > n`.
pub fn sbar(w: &WeightVector, n: usize, k: usize) -> Result<Scalar> {
    if k > n {
        return Ok(Scalar::zero());
    }
    w.require(k)?;
    // Only w_1..w_k enter; pad so the triangle can be built to row n.
    let mut padded = w.weights()[..k].to_vec();
    padded.resize(n, Scalar::zero());
    let table = sbar_table(&WeightVector::explicit(padded), n)?;
    Ok(table[n][k].clone())
}

/// Last-box decomposition over all `n = |w|` boxes:
/// `C_k^n = sum_{i=1}^n w_i C_{k-1}^{i-1}` and
/// `S_k^n = sum_{i=1}^n w_i S_{k-1}^i`.
pub fn prop1_check(w: &WeightVector, kind: Kind, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    let n = w.len();
    match kind {
        Kind::First => {
            let table = c_table(w, n).expect("table sized to w");
            let rhs: Scalar = (1..=n)
                .map(|i| &w.weights()[i - 1] * &table[i - 1].get(k - 1).cloned().unwrap_or_default())
                .sum();
            c_oracle(w, k) == rhs
        }
        Kind::Second => {
            let table = s_table(w, k - 1, n).expect("table sized to w");
            let rhs: Scalar = (1..=n).map(|i| &w.weights()[i - 1] * &table[i][k - 1]).sum();
            s_oracle(w, k) == rhs
        }
    }
}

/// Splitting identity for both kinds at boundary `split`:
/// `X_k^{n+m}(w) = sum_i X_i^n(w) X_{k-i}^m(v)` with `v` the weights past `split`.
pub fn prop2_check(w: &WeightVector, split: usize, k: usize) -> Result<bool> {
    w.require(split)?;
    let head = w.prefix(split);
    let tail = w.tail(split);
    for kind in [Kind::First, Kind::Second] {
        let lhs = value(w, kind, k);
        let rhs: Scalar = (0..=k)
            .map(|i| value(&head, kind, i) * value(&tail, kind, k - i))
            .sum();
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Hockey-stick corollaries of the last-box decomposition, for all `n, k <= depth`:
///
/// - `C(n+k+1, k+1) = sum_{i=0}^n C(k+i, k)`
/// - `C(n+1, k+1) = sum_{i=0}^n C(i, k)`
/// - `[n+k+1, k+1]_q = sum_{i=0}^n q^i [k+i, k]_q`
///
/// Binomials are `C_k^n(1, ..., 1)` and Gaussian coefficients
/// `S_k^{n-k+1}(1, q, ..., q^{n-k})`.
pub fn corollary_suite(depth: usize) -> Report {
    let mut report = Report::new(format!("hockey-stick identities, n, k <= {depth}"));
    let ones = c_table(&WeightVector::ones(2 * depth + 1), 2 * depth + 1).expect("sized");
    let binom = |n: usize, k: usize| ones[n].get(k).cloned().unwrap_or_default();

    let mut item1 = Check::new("C(n+k+1,k+1) = sum_i C(k+i,k)");
    let mut item2 = Check::new("C(n+1,k+1) = sum_i C(i,k)");
    for n in 0..=depth {
        for k in 0..=depth {
            let lhs = binom(n + k + 1, k + 1);
            let rhs: Scalar = (0..=n).map(|i| binom(k + i, k)).sum();
            item1.record(lhs == rhs, || format!("n={n} k={k}: {lhs} != {rhs}"));
            let lhs = binom(n + 1, k + 1);
            let rhs: Scalar = (0..=n).map(|i| binom(i, k)).sum();
            item2.record(lhs == rhs, || format!("n={n} k={k}: {lhs} != {rhs}"));
        }
    }

    // gauss(a, b) = S_b^{a-b+1}(q-powers) = table[a-b+1][b]
    let qtable = s_table(&WeightVector::q_powers(depth + 1), depth + 1, depth + 1).expect("sized");
    let gauss = |a: usize, b: usize| qtable[a - b + 1][b].clone();
    let mut item5 = Check::new("[n+k+1,k+1]_q = sum_i q^i [k+i,k]_q");
    for n in 0..=depth {
        for k in 0..=depth {
            let lhs = gauss(n + k + 1, k + 1);
            let rhs: Scalar = (0..=n).map(|i| Scalar::q_pow(i) * gauss(k + i, k)).sum();
            item5.record(lhs == rhs, || format!("n={n} k={k}: {lhs} != {rhs}"));
        }
    }
    report.push(item1);
    report.push(item2);
    report.push(item5);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    fn ints(row: &[Scalar]) -> Vec<i64> {
        row.iter()
            .map(|v| i64::try_from(v.as_rational().unwrap().to_integer()).unwrap())
            .collect()
    }

    #[test]
    fn c_oracle_examples() {
        assert_eq!(c_oracle(&WeightVector::from_ints(&[2, 3, 5]), 2), Scalar::from_int(31));
        assert!(c_oracle(&WeightVector::from_ints(&[2, 3, 5]), 0).is_one());
        assert!(c_oracle(&WeightVector::from_ints(&[]), 0).is_one());
        assert_eq!(c_oracle(&WeightVector::q_powers(3), 3), s("q^3"));
        assert!(c_oracle(&WeightVector::from_ints(&[1, 2]), 3).is_zero());
    }

    #[test]
    fn s_oracle_examples() {
        assert_eq!(s_oracle(&WeightVector::from_ints(&[2, 3]), 2), Scalar::from_int(19));
        assert_eq!(s_oracle(&WeightVector::q_powers(3), 2), s("1 + q + 2*q^2 + q^3 + q^4"));
        assert!(s_oracle(&WeightVector::from_ints(&[]), 1).is_zero());
        assert!(s_oracle(&WeightVector::from_ints(&[]), 0).is_one());
    }

    #[test]
    fn c_table_examples() {
        let t = c_table(&WeightVector::ones(4), 4).unwrap();
        assert_eq!(ints(&t[4]), vec![1, 4, 6, 4, 1]);
        let t = c_table(&WeightVector::from_ints(&[1, 2, 3]), 3).unwrap();
        assert_eq!(ints(&t[3]), vec![1, 6, 11, 6]);
        assert_eq!(ints(&c_table(&WeightVector::ones(0), 0).unwrap()[0]), vec![1]);
        assert!(matches!(
            c_table(&WeightVector::ones(2), 3),
            Err(Error::WeightsTooShort { needed: 3, len: 2 })
        ));
    }

    #[test]
    fn s_table_examples() {
        let t = s_table(&WeightVector::from_ints(&[1, 2]), 2, 2).unwrap();
        assert_eq!(t[2][2], Scalar::from_int(7));
        for row in &t {
            assert!(row[0].is_one());
        }
        let t = s_table(&WeightVector::q_powers(2), 1, 2).unwrap();
        assert_eq!(t[2][1], s("1 + q"));
    }

    #[test]
    fn sbar_matches_substitution() {
        let w = WeightVector::from_ints(&[3, -1, 4, 1, -5, 9, 2, 6]);
        let table = sbar_table(&w, 8).unwrap();
        let st = s_table(&w, 8, 8).unwrap();
        for n in 0..=8 {
            for k in 0..=n {
                assert_eq!(table[n][k], st[k][n - k], "n={n} k={k}");
                assert_eq!(sbar(&w, n, k).unwrap(), table[n][k]);
            }
        }
    }

    #[test]
    fn sbar_boundary_values() {
        let w = WeightVector::from_ints(&[2, 7, 3]);
        assert!(sbar(&w, 0, 0).unwrap().is_one());
        // Sbar_0^n = S_n^0 vanishes once n >= 1 (no boxes to draw from).
        assert!(sbar(&w, 3, 0).unwrap().is_zero());
        for n in 0..=3 {
            assert!(sbar(&w, n, n).unwrap().is_one());
        }
        for k in 1..=3 {
            assert!(sbar(&w, 0, k).unwrap().is_zero());
        }
    }

    #[test]
    fn value_paths_agree_with_tables() {
        let w = WeightVector::from_ints(&[1, -2, 3, 0, 5]);
        let ct = c_table(&w, 5).unwrap();
        let st = s_table(&w, 6, 5).unwrap();
        for k in 0..=6 {
            assert_eq!(c_value(&w, k), ct[5].get(k).cloned().unwrap_or_default());
            assert_eq!(s_value(&w, k), st[5][k]);
        }
    }

    #[test]
    fn last_box_decomposition() {
        assert!(prop1_check(&WeightVector::ones(5), Kind::First, 3));
        assert!(prop1_check(&WeightVector::from_ints(&[1, 2, 3, 4]), Kind::Second, 2));
        assert!(prop1_check(&WeightVector::ones(5), Kind::First, 0));
        assert!(prop1_check(&WeightVector::q_powers(5), Kind::Second, 4));
    }

    #[test]
    fn splitting_identity() {
        let w = WeightVector::q_powers(4);
        for k in 0..=5 {
            assert!(prop2_check(&w, 2, k).unwrap());
        }
        assert!(prop2_check(&WeightVector::ones(6), 6, 3).unwrap());
        assert!(prop2_check(&WeightVector::ones(6), 7, 3).is_err());
    }

    #[test]
    fn corollary_small_case() {
        // n=3, k=1: C(5,2) = 1+2+3+4
        let t = c_table(&WeightVector::ones(5), 5).unwrap();
        let rhs: Scalar = (0..=3).map(|i| t[1 + i][1].clone()).sum();
        assert_eq!(t[5][2], rhs);
        assert_eq!(rhs, Scalar::from_int(10));
        let report = corollary_suite(5);
        assert!(report.passed(), "{report}");
        assert_eq!(report.checks.len(), 3);
    }

    #[test]
    fn rule_vectors() {
        assert_eq!(WeightVector::q_powers(3).weights(), &[s("1"), s("q"), s("q^2")]);
        assert_eq!(WeightVector::naturals(3).get(3), Some(&Scalar::from_int(3)));
        assert_eq!(WeightVector::naturals(3).get(0), None);
        assert_eq!("qpowers".parse::<WeightRule>().unwrap(), WeightRule::QPowers);
        assert!("primes".parse::<WeightRule>().is_err());
    }
}
