//! Identity suites run by `triad verify`.
//!
//! Every suite is deterministic given its [`SuiteConfig`]; the randomized
//! ones draw from a ChaCha8 stream seeded by `seed` and the suite name.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::families::{family_cross_check, stirling1_recurrence_check, Family};
use crate::genfun::{genfun_suite, DEFAULT_ORDER};
use crate::konvalina::{
    c_oracle, c_table, corollary_suite, prop1_check, prop2_check, s_oracle, s_table, sbar_table, Kind, WeightVector,
};
use crate::operators::{konkwa_c, konkwa_s, operator_array, qhat, OpWeightVector, OperatorArray};
use crate::poly::Poly;
use crate::psi::PsiSequence;
use crate::report::{Check, Report};
use crate::scalar::{Rational, Scalar};
use crate::triad::{verify_connection, verify_degree, TriadSpec};

pub const DEFAULT_SEED: u64 = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Triad,
    KonvalinaOracle,
    Propositions,
    Corollary,
    Operator,
    Genfun,
    Families,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::Triad,
        Suite::KonvalinaOracle,
        Suite::Propositions,
        Suite::Corollary,
        Suite::Families,
        Suite::Operator,
        Suite::Genfun,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Triad => "triad",
            Suite::KonvalinaOracle => "konvalina-oracle",
            Suite::Propositions => "propositions",
            Suite::Corollary => "corollary",
            Suite::Operator => "operator",
            Suite::Genfun => "genfun",
            Suite::Families => "families",
            Suite::All => "all",
        }
    }

    fn stream(self) -> u64 {
        self as u64
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse {
                offset: 0,
                message: format!("unknown suite `{s}`"),
            })
    }
}

/// Knobs shared by all suites; `None` means the suite's own default.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub rows: Option<usize>,
    pub seed: u64,
    pub psi: Option<PsiSequence>,
    pub order: usize,
    pub spec: Option<TriadSpec>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            rows: None,
            seed: DEFAULT_SEED,
            psi: None,
            order: DEFAULT_ORDER,
            spec: None,
        }
    }
}

impl SuiteConfig {
    fn rows_or(&self, default: usize) -> usize {
        self.rows.unwrap_or(default)
    }

    fn rng(&self, suite: Suite) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(suite.stream());
        rng
    }

    fn psis(&self) -> Vec<PsiSequence> {
        match &self.psi {
            Some(psi) => vec![psi.clone()],
            None => vec![PsiSequence::classical(), PsiSequence::q_factorial(), PsiSequence::fibonacci()],
        }
    }
}

/// Runs one suite, or every suite for [`Suite::All`].
pub fn run_suite(suite: Suite, config: &SuiteConfig) -> Result<Vec<Report>> {
    match suite {
        Suite::Triad => triad_suite(config),
        Suite::KonvalinaOracle => Ok(vec![oracle_suite(config, 200)?]),
        Suite::Propositions => Ok(vec![propositions_suite(config, 100)?]),
        Suite::Corollary => Ok(vec![corollary_suite(config.rows_or(12))]),
        Suite::Operator => operator_suite(config),
        Suite::Genfun => config
            .psis()
            .iter()
            .map(|psi| genfun_suite(psi, 6, config.order, config.rows_or(12)))
            .collect(),
        Suite::Families => Ok(vec![families_suite(config.rows_or(12))?]),
        Suite::All => {
            let mut out = Vec::new();
            for s in Suite::EACH {
                out.extend(run_suite(s, config)?);
            }
            Ok(out)
        }
    }
}

/// Connection identity and degree check for the configured spec, or for
/// the three builtin triads.
pub fn triad_suite(config: &SuiteConfig) -> Result<Vec<Report>> {
    let depth = config.rows_or(25);
    let specs = match &config.spec {
        Some(spec) => vec![spec.clone()],
        None => vec![TriadSpec::pascal(), TriadSpec::stirling2(), TriadSpec::gauss()],
    };
    let mut reports = Vec::new();
    for spec in specs {
        let mut report = Report::new(format!("triad {}", spec.label()));
        let connection = verify_connection(&spec, depth)?;
        let mut check = Check::new(format!("{}: x^n = sum_k c_(n,k) phi_k, n <= {depth}", spec.label()));
        for n in 0..=depth {
            let residual = connection.failures.iter().find(|(m, _)| *m == n);
            check.record(residual.is_none(), || {
                format!("n={n}: residual {}", residual.map(|(_, p)| p.to_string()).unwrap_or_default())
            });
        }
        report.push(check);
        let mut degrees = Check::new(format!("{}: deg phi_k = k, k <= {depth}", spec.label()));
        degrees.record(verify_degree(&spec, depth)?, || "degree mismatch".into());
        report.push(degrees);
        reports.push(report);
    }
    Ok(reports)
}

/// A random integer weight vector of length `0..=max_len` with entries in `[-5, 5]`.
pub fn random_weights(rng: &mut impl Rng, max_len: usize) -> WeightVector {
    let len = rng.random_range(0..=max_len);
    let w: Vec<i64> = (0..len).map(|_| rng.random_range(-5..=5)).collect();
    WeightVector::from_ints(&w)
}

fn show(w: &WeightVector) -> String {
    let parts: Vec<String> = w.weights().iter().map(Scalar::to_string).collect();
    format!("({})", parts.join(", "))
}

/// Recurrence tables against enumeration for `count` random vectors, and
/// `Sbar_k^n = S_{n-k}^k` on the same vectors.
pub fn oracle_suite(config: &SuiteConfig, count: usize) -> Result<Report> {
    const MAX_LEN: usize = 8;
    let mut rng = config.rng(Suite::KonvalinaOracle);
    let mut first = Check::new(format!("C table = enumeration, {count} random vectors"));
    let mut second = Check::new(format!("S table = enumeration, {count} random vectors"));
    let mut bar = Check::new(format!("Sbar_k^n = S_(n-k)^k, {count} random vectors"));
    for _ in 0..count {
        let w = random_weights(&mut rng, MAX_LEN);
        let len = w.len();
        let ct = c_table(&w, len)?;
        let st = s_table(&w, MAX_LEN, len)?;
        for m in 0..=len {
            let prefix = w.prefix(m);
            for k in 0..=MAX_LEN {
                let table_c = ct[m].get(k).cloned().unwrap_or_default();
                let oracle_c = c_oracle(&prefix, k);
                first.record(table_c == oracle_c, || format!("{} m={m} k={k}", show(&w)));
                let oracle_s = s_oracle(&prefix, k);
                second.record(st[m][k] == oracle_s, || format!("{} m={m} k={k}", show(&w)));
            }
        }
        let sb = sbar_table(&w, len + 1)?;
        for (n, row) in sb.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                let want = s_oracle(&w.prefix(k), n - k);
                bar.record(*v == want, || format!("{} n={n} k={k}", show(&w)));
            }
        }
    }
    let mut report = Report::new("Konvalina recurrences against enumeration");
    report.push(first);
    report.push(second);
    report.push(bar);
    Ok(report)
}

/// Last-box decomposition and splitting identity on random integer vectors
/// and on `(1, q, ..., q^4)`, plus the Cauchy identity for all-ones weights.
pub fn propositions_suite(config: &SuiteConfig, count: usize) -> Result<Report> {
    let mut rng = config.rng(Suite::Propositions);
    let mut vectors: Vec<WeightVector> = (0..count).map(|_| random_weights(&mut rng, 8)).collect();
    vectors.push(WeightVector::q_powers(5));

    let mut decomposition = Check::new(format!("last-box decomposition, {count} random vectors and (1,q,...,q^4)"));
    let mut splitting = Check::new(format!("splitting identity, {count} random vectors and (1,q,...,q^4)"));
    for w in &vectors {
        let len = w.len();
        for k in 0..=len + 1 {
            for kind in [Kind::First, Kind::Second] {
                decomposition.record(prop1_check(w, kind, k), || format!("{} {kind} k={k}", show(w)));
            }
            for split in 0..=len {
                splitting.record(prop2_check(w, split, k)?, || format!("{} split={split} k={k}", show(w)));
            }
        }
    }

    let mut cauchy = Check::new("Cauchy identity C(n+m,k) = sum_i C(n,i) C(m,k-i), n+m <= 12");
    for total in 0..=12 {
        let ones = WeightVector::ones(total);
        for n in 0..=total {
            for k in 0..=total {
                let ok = prop2_check(&ones, n, k)? && c_oracle(&ones, k) == Scalar::from_rational(binomial(total, k));
                cauchy.record(ok, || format!("n={n} m={} k={k}", total - n));
            }
        }
    }

    let mut report = Report::new("propositions");
    report.push(decomposition);
    report.push(splitting);
    report.push(cauchy);
    Ok(report)
}

fn binomial(n: usize, k: usize) -> Rational {
    let mut acc = Rational::one();
    for j in 0..k {
        acc = acc * Rational::from_integer((n - j).into()) / Rational::from_integer((j + 1).into());
    }
    acc
}

/// Triad coefficients against the Konvalina mappings, enumeration against
/// the mappings, the first-kind Stirling recurrence, and `gauss(q=1) = pascal`.
pub fn families_suite(rows: usize) -> Result<Report> {
    let mut report = Report::new(format!("families, n <= {rows}"));
    for f in [Family::Pascal, Family::Stirling2, Family::GaussQ] {
        report.extend(family_cross_check(f, rows)?);
    }
    for f in Family::ALL {
        let desc = f.descriptor();
        let map = desc.konvalina_map;
        let mut check = Check::new(format!("{f}: Konvalina form = enumeration, n <= {rows}"));
        for n in 0..=rows {
            for k in 0..=n {
                let fast = desc.value(n, k)?;
                let Some(boxes) = map.boxes.eval(n, k) else {
                    continue;
                };
                let order = map.order.eval(n, k).expect("k <= n");
                let w = WeightVector::from_rule(map.rule, boxes);
                let slow = match map.kind {
                    Kind::First => c_oracle(&w, order),
                    Kind::Second => s_oracle(&w, order),
                };
                check.record(fast == slow, || format!("({n},{k}): {fast} vs {slow}"));
            }
        }
        report.push(check);
    }
    let mut stirling1 = Check::new(format!("stirling1: [n k] = (n-1)[n-1 k] + [n-1 k-1], n <= {rows}"));
    stirling1.record(stirling1_recurrence_check(rows)?, || "recurrence fails".into());
    report.push(stirling1);

    let gauss = Family::GaussQ.descriptor().table(rows)?;
    let pascal = Family::Pascal.descriptor().table(rows)?;
    let one = Rational::one();
    let mut at_one = Check::new(format!("gauss at q=1 = pascal, n <= {rows}"));
    for (n, (g_row, p_row)) in gauss.iter().zip(&pascal).enumerate() {
        for (k, (g, p)) in g_row.iter().zip(p_row).enumerate() {
            at_one.record(&g.specialize(&one)? == p, || format!("({n},{k})"));
        }
    }
    report.push(at_one);
    Ok(report)
}

/// `(q-array, classical array)` triangles on rows `0..=rows` by the standard
/// one-step recurrences, independent of any Konvalina machinery.
fn q_triangles(array: OperatorArray, rows: usize) -> (Vec<Vec<Scalar>>, Vec<Vec<Scalar>>) {
    let build = |symbolic: bool| {
        let number = |j: usize| {
            if symbolic {
                Scalar::q_number(j)
            } else {
                Scalar::from_int(j as i64)
            }
        };
        let power = |j: usize| if symbolic { Scalar::q_pow(j) } else { Scalar::one() };
        let mut t: Vec<Vec<Scalar>> = vec![vec![Scalar::one()]];
        for n in 1..=rows {
            let prev = &t[n - 1];
            let at = |k: usize| prev.get(k).cloned().unwrap_or_default();
            let row = (0..=n)
                .map(|k| {
                    let diag = if k == 0 { Scalar::zero() } else { at(k - 1) };
                    let factor = match array {
                        OperatorArray::Binomial => power(k),
                        OperatorArray::Stirling2 => number(k),
                        OperatorArray::Stirling1 => number(n - 1),
                    };
                    diag + factor * at(k)
                })
                .collect();
            t.push(row);
        }
        t
    };
    (build(true), build(false))
}

/// Operator arrays over `qhat_psi` against the q-arrays and the classical
/// arrays (qfact only), and the same-shape recurrences of the KonKwa
/// operators as eigenvalue identities.
pub fn operator_suite(config: &SuiteConfig) -> Result<Vec<Report>> {
    const DEPTH: usize = 12;
    let rows = config.rows_or(10);
    let psi = config.psi.clone().unwrap_or_else(PsiSequence::q_factorial);
    let mut reports = Vec::new();

    if psi == PsiSequence::q_factorial() {
        let one = Rational::one();
        let mut report = Report::new(format!("operator tower, psi = {psi}, n, k <= {rows}, x^m for m <= {DEPTH}"));
        for array in [OperatorArray::Binomial, OperatorArray::Stirling2, OperatorArray::Stirling1] {
            let (qt, ct) = q_triangles(array, rows);
            let name = format!("{array:?}").to_lowercase();
            let mut q_check = Check::new(format!("{name}_qhat x^m = {name}_q x^m"));
            let mut c_check = Check::new(format!("{name}_qhat at q=1 = classical {name}"));
            for n in 0..=rows {
                for k in 0..=n {
                    let op = operator_array(array, &psi, n, k, DEPTH)?;
                    for m in 0..=DEPTH {
                        let xm = Poly::monomial(Scalar::one(), m);
                        let image = op.apply(&xm)?;
                        let want = Poly::monomial(qt[n][k].clone(), m);
                        q_check.record(image == want, || format!("n={n} k={k} m={m}: got {image}"));
                        let classical = op.eigenvalue(m).specialize(&one)?;
                        c_check.record(classical == ct[n][k], || format!("n={n} k={k} m={m}: got {classical}"));
                    }
                }
            }
            report.push(q_check);
            report.push(c_check);
        }
        reports.push(report);
    }

    let base = qhat(&psi, DEPTH)?;
    let mut report = Report::new(format!("KonKwa recurrences, psi = {psi}, n, k <= {rows}"));
    for (label, ow) in [
        ("powers", OpWeightVector::powers(base.clone(), rows)),
        ("naturals", OpWeightVector::naturals(base.clone(), rows)),
    ] {
        let mut first = Check::new(format!("{label}: C_k^n = C_k^(n-1) + w_n C_(k-1)^(n-1)"));
        let mut second = Check::new(format!("{label}: S_k^n = S_k^(n-1) + w_n S_(k-1)^n"));
        for n in 1..=rows {
            let here = ow.prefix(n);
            let prev = ow.prefix(n - 1);
            let wn = ow.entry(n);
            for k in 1..=rows {
                let rhs = konkwa_c(&prev, k).add(&wn.compose(&konkwa_c(&prev, k - 1))?)?;
                first.record(konkwa_c(&here, k) == rhs, || format!("n={n} k={k}"));
                let rhs = konkwa_s(&prev, k).add(&wn.compose(&konkwa_s(&here, k - 1))?)?;
                second.record(konkwa_s(&here, k) == rhs, || format!("n={n} k={k}"));
            }
        }
        report.push(first);
        report.push(second);
    }
    let mut commute = Check::new("diagonal operators commute");
    let n3 = OpWeightVector::naturals(base.clone(), 3).entry(3);
    commute.record(base.compose(&n3)? == n3.compose(&base)?, || "qhat, 3_qhat".into());
    report.push(commute);
    reports.push(report);
    Ok(reports)
}

/// Renders reports followed by a one-line summary.
pub fn render(reports: &[Report]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&r.to_string());
    }
    let checks: usize = reports.iter().map(|r| r.checks.len()).sum();
    let failed: usize = reports.iter().map(|r| r.failed_checks().count()).sum();
    let status = if failed == 0 { "PASS" } else { "FAIL" };
    out.push_str(&format!("{status}: {} of {checks} checks passed\n", checks - failed));
    out
}
