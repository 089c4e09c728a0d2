//! Admissible sequences `psi` and the deformed naturals they induce.
//!
//! An admissible sequence has `psi_0 = 1`, `psi_n != 0` and `psi_{-n} = 0`.
//! It defines `n_psi = psi_{n-1} / psi_n` and the factorial
//! `n_psi! = 1 / psi_n = n_psi (n-1)_psi ... 1_psi`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// How the values `psi_n` are produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PsiRule {
    /// `psi_n = 1 / n_q!`, so `n_psi = n_q`.
    QFactorialReciprocal,
    /// `psi_n = 1 / n!`, so `n_psi = n`.
    Classical,
    /// `psi_n = 1 / (F_1 ... F_n)`, so `n_psi = F_n`.
    Fibonacci,
    /// Explicit `psi_0, psi_1, ...`.
    Table(Arc<[Scalar]>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiSequence {
    name: String,
    rule: PsiRule,
}

impl PsiSequence {
    pub fn q_factorial() -> Self {
        PsiSequence {
            name: "qfact".into(),
            rule: PsiRule::QFactorialReciprocal,
        }
    }

    pub fn classical() -> Self {
        PsiSequence {
            name: "classical".into(),
            rule: PsiRule::Classical,
        }
    }

    pub fn fibonacci() -> Self {
        PsiSequence {
            name: "fibonacci".into(),
            rule: PsiRule::Fibonacci,
        }
    }

    /// An explicit table, validated for admissibility.
    pub fn from_table(name: impl Into<String>, values: Vec<Scalar>) -> Result<Self> {
        if values.first().is_none_or(|v| !v.is_one()) {
            return Err(Error::NotAdmissible(0));
        }
        if let Some(n) = values.iter().position(Scalar::is_zero) {
            return Err(Error::NotAdmissible(n));
        }
        Ok(PsiSequence {
            name: name.into(),
            rule: PsiRule::Table(values.into()),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rule(&self) -> &PsiRule {
        &self.rule
    }

    /// `psi_n` for `n >= 0`.
    pub fn value(&self, n: usize) -> Result<Scalar> {
        match &self.rule {
            PsiRule::Table(values) => values.get(n).cloned().ok_or_else(|| Error::SequenceUndefined {
                name: self.name.clone(),
                index: n,
            }),
            _ => self.factorial_from_rule(n).recip(),
        }
    }

    /// `psi_m` with the convention `psi_{-k} = 0`.
    pub fn value_signed(&self, m: i64) -> Result<Scalar> {
        if m < 0 {
            Ok(Scalar::zero())
        } else {
            self.value(m as usize)
        }
    }

    fn factorial_from_rule(&self, n: usize) -> Scalar {
        (1..=n).map(|j| self.natural_from_rule(j)).product()
    }

    /// Closed form of `n_psi` for the builtin rules.
    fn natural_from_rule(&self, n: usize) -> Scalar {
        match &self.rule {
            PsiRule::QFactorialReciprocal => Scalar::q_number(n),
            PsiRule::Classical => Scalar::from_int(n as i64),
            PsiRule::Fibonacci => Scalar::from_rational(fibonacci(n).into()),
            PsiRule::Table(_) => unreachable!("tables have no closed form"),
        }
    }

    /// `n_psi = psi_{n-1} / psi_n`; zero at `n = 0`.
    pub fn n_psi(&self, n: usize) -> Result<Scalar> {
        let prev = self.value_signed(n as i64 - 1)?;
        prev.checked_div(&self.value(n)?)
    }

    /// `n_psi! = 1 / psi_n`.
    pub fn factorial(&self, n: usize) -> Result<Scalar> {
        self.value(n)?.recip()
    }

    /// `n_psi (n-1)_psi ... (n-k+1)_psi`; one when `k = 0`.
    pub fn falling(&self, n: usize, k: usize) -> Result<Scalar> {
        if k > n {
            return Err(Error::IndexOutOfRange { n, k });
        }
        (n - k + 1..=n).map(|j| self.n_psi(j)).product()
    }

    /// `(1_psi, ..., n_psi)` and `(psi_0, ..., psi_n)` computed once.
    pub fn table(&self, n: usize) -> Result<PsiTable> {
        let values = (0..=n).map(|j| self.value(j)).collect::<Result<Vec<_>>>()?;
        let mut naturals = Vec::with_capacity(n + 1);
        naturals.push(Scalar::zero());
        for j in 1..=n {
            naturals.push(values[j - 1].checked_div(&values[j])?);
        }
        Ok(PsiTable { values, naturals })
    }
}

impl fmt::Display for PsiSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl FromStr for PsiSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "qfact" | "q-factorial-reciprocal" => Ok(Self::q_factorial()),
            "classical" => Ok(Self::classical()),
            "fibonacci" => Ok(Self::fibonacci()),
            other => Err(Error::Parse {
                offset: 0,
                message: format!("unknown psi sequence `{other}`"),
            }),
        }
    }
}

/// Read-only memo of a psi sequence up to some depth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiTable {
    values: Vec<Scalar>,
    naturals: Vec<Scalar>,
}

impl PsiTable {
    pub fn depth(&self) -> usize {
        self.values.len() - 1
    }

    pub fn value(&self, n: usize) -> &Scalar {
        &self.values[n]
    }

    pub fn n_psi(&self, n: usize) -> &Scalar {
        &self.naturals[n]
    }

    /// `(1_psi, ..., n_psi)`
    pub fn naturals(&self, n: usize) -> &[Scalar] {
        &self.naturals[1..=n]
    }
}

/// `F_n` with `F_0 = 0`, `F_1 = F_2 = 1`.
pub fn fibonacci(n: usize) -> num_bigint::BigInt {
    let (mut a, mut b) = (num_bigint::BigInt::zero(), num_bigint::BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    #[test]
    fn q_naturals() {
        let psi = PsiSequence::q_factorial();
        assert_eq!(psi.n_psi(3).unwrap(), s("1 + q + q^2"));
        assert!(psi.n_psi(0).unwrap().is_zero());
        assert_eq!(
            psi.n_psi(5).unwrap().eval_q(&Rational::one()).unwrap(),
            Rational::from_integer(5.into())
        );
    }

    #[test]
    fn factorials() {
        let psi = PsiSequence::q_factorial();
        assert!(psi.factorial(0).unwrap().is_one());
        assert_eq!(psi.factorial(3).unwrap(), s("(1)*(1+q)*(1+q+q^2)"));
        for n in 0..=10 {
            assert!((psi.factorial(n).unwrap() * psi.value(n).unwrap()).is_one());
        }
    }

    #[test]
    fn falling_products() {
        let psi = PsiSequence::q_factorial();
        assert!(psi.falling(4, 0).unwrap().is_one());
        assert_eq!(psi.falling(3, 2).unwrap(), s("(1+q+q^2)*(1+q)"));
        assert_eq!(psi.falling(5, 5).unwrap(), psi.factorial(5).unwrap());
        assert!(psi.falling(2, 3).is_err());
    }

    #[test]
    fn telescoping() {
        for psi in [PsiSequence::q_factorial(), PsiSequence::classical(), PsiSequence::fibonacci()] {
            for n in 1..=10 {
                let lhs = psi.factorial(n).unwrap();
                let rhs = psi.n_psi(n).unwrap() * psi.factorial(n - 1).unwrap();
                assert_eq!(lhs, rhs, "{psi} n={n}");
            }
        }
    }

    #[test]
    fn fibonacci_naturals() {
        let psi = PsiSequence::fibonacci();
        let got: Vec<_> = (1..=8).map(|n| psi.n_psi(n).unwrap()).collect();
        let want: Vec<_> = [1, 1, 2, 3, 5, 8, 13, 21].iter().map(|&v| Scalar::from_int(v)).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn classical_naturals() {
        let psi = PsiSequence::classical();
        for n in 0..=10 {
            assert_eq!(psi.n_psi(n).unwrap(), Scalar::from_int(n as i64));
        }
    }

    #[test]
    fn tables_validate_admissibility() {
        assert_eq!(
            PsiSequence::from_table("bad", vec![Scalar::from_int(2)]),
            Err(Error::NotAdmissible(0))
        );
        assert_eq!(
            PsiSequence::from_table("bad", vec![Scalar::one(), Scalar::zero()]),
            Err(Error::NotAdmissible(1))
        );
        let psi = PsiSequence::from_table("halves", vec![Scalar::one(), Scalar::ratio(1, 2), Scalar::ratio(1, 8)]).unwrap();
        assert_eq!(psi.n_psi(2).unwrap(), Scalar::from_int(4));
        assert!(matches!(psi.n_psi(3), Err(Error::SequenceUndefined { .. })));
    }

    #[test]
    fn memo_table_matches_direct_evaluation() {
        let psi = PsiSequence::q_factorial();
        let t = psi.table(6).unwrap();
        for n in 0..=6 {
            assert_eq!(t.n_psi(n), &psi.n_psi(n).unwrap());
            assert_eq!(t.value(n), &psi.value(n).unwrap());
        }
        assert_eq!(t.naturals(3).len(), 3);
    }
}
