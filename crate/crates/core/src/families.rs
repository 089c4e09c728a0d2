//! Classical arrays as Konvalina coefficients, and as triads where they are.
//!
//! | family      | Konvalina form                          | triad |
//! |-------------|-----------------------------------------|-------|
//! | `pascal`    | `C(n,k) = C_k^n(1, ..., 1)`             | yes   |
//! | `stirling2` | `{n k} = S_{n-k}^k(1, 2, ..., k)`       | yes   |
//! | `gauss`     | `[n k]_q = S_k^{n-k+1}(1, q, ..., q^{n-k})` | yes |
//! | `stirling1` | `[n k] = C_{n-k}^{n-1}(1, 2, ..., n-1)` | no    |

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::konvalina::{c_value, s_value, Kind, WeightRule, WeightVector};
use crate::report::{Check, Report};
use crate::scalar::Scalar;
use crate::triad::{triad_coefficients, Sequence, TriadSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Pascal,
    Stirling2,
    Stirling1,
    GaussQ,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Pascal, Family::Stirling2, Family::Stirling1, Family::GaussQ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Pascal => "pascal",
            Family::Stirling2 => "stirling2",
            Family::Stirling1 => "stirling1",
            Family::GaussQ => "gauss",
        }
    }

    pub fn descriptor(self) -> FamilyDescriptor {
        let (triad, konvalina_map) = match self {
            Family::Pascal => (
                Some(TriadSpec::pascal()),
                KonvalinaMap {
                    kind: Kind::First,
                    rule: WeightRule::Ones,
                    order: IndexExpr::K,
                    boxes: IndexExpr::N,
                },
            ),
            Family::Stirling2 => (
                Some(TriadSpec::stirling2()),
                KonvalinaMap {
                    kind: Kind::Second,
                    rule: WeightRule::Naturals,
                    order: IndexExpr::NMinusK,
                    boxes: IndexExpr::K,
                },
            ),
            Family::Stirling1 => (
                None,
                KonvalinaMap {
                    kind: Kind::First,
                    rule: WeightRule::Naturals,
                    order: IndexExpr::NMinusK,
                    boxes: IndexExpr::NMinusOne,
                },
            ),
            Family::GaussQ => (
                Some(TriadSpec::gauss()),
                KonvalinaMap {
                    kind: Kind::Second,
                    rule: WeightRule::QPowers,
                    order: IndexExpr::K,
                    boxes: IndexExpr::NMinusKPlusOne,
                },
            ),
        };
        FamilyDescriptor {
            family: self,
            triad,
            konvalina_map,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pascal" => Ok(Family::Pascal),
            "stirling2" => Ok(Family::Stirling2),
            "stirling1" => Ok(Family::Stirling1),
            "gauss" | "gauss_q" => Ok(Family::GaussQ),
            other => Err(Error::Parse {
                offset: 0,
                message: format!("unknown family `{other}`"),
            }),
        }
    }
}

/// An index expression in `(n, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexExpr {
    N,
    K,
    NMinusK,
    NMinusOne,
    NMinusKPlusOne,
}

impl IndexExpr {
    /// `None` when the expression is negative.
    pub fn eval(self, n: usize, k: usize) -> Option<usize> {
        match self {
            IndexExpr::N => Some(n),
            IndexExpr::K => Some(k),
            IndexExpr::NMinusK => n.checked_sub(k),
            IndexExpr::NMinusOne => n.checked_sub(1),
            IndexExpr::NMinusKPlusOne => (n + 1).checked_sub(k),
        }
    }
}

/// `(n, k) -> X_order^boxes(rule)` where `X` is the coefficient of `kind`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KonvalinaMap {
    pub kind: Kind,
    pub rule: WeightRule,
    pub order: IndexExpr,
    pub boxes: IndexExpr,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyDescriptor {
    pub family: Family,
    pub triad: Option<TriadSpec>,
    pub konvalina_map: KonvalinaMap,
}

impl FamilyDescriptor {
    /// The `(n, k)` entry computed through the Konvalina mapping.
    pub fn value(&self, n: usize, k: usize) -> Result<Scalar> {
        if k > n {
            return Err(Error::IndexOutOfRange { n, k });
        }
        let map = &self.konvalina_map;
        // [0 0] = 1 although the box count n-1 is negative there.
        let Some(boxes) = map.boxes.eval(n, k) else {
            return Ok(if k == 0 { Scalar::one() } else { Scalar::zero() });
        };
        let order = map.order.eval(n, k).expect("k <= n");
        let w = WeightVector::from_rule(map.rule, boxes);
        Ok(match map.kind {
            Kind::First => c_value(&w, order),
            Kind::Second => s_value(&w, order),
        })
    }

    /// Rows `0..=rows` of the triangle.
    pub fn table(&self, rows: usize) -> Result<Vec<Vec<Scalar>>> {
        (0..=rows)
            .map(|n| (0..=n).map(|k| self.value(n, k)).collect())
            .collect()
    }
}

pub fn family_value(f: Family, n: usize, k: usize) -> Result<Scalar> {
    f.descriptor().value(n, k)
}

/// Compares the triad coefficient array with the Konvalina values on rows `0..=rows`.
pub fn family_cross_check(f: Family, rows: usize) -> Result<Report> {
    let desc = f.descriptor();
    let spec = desc.triad.as_ref().ok_or_else(|| Error::NotATriad(f.name().into()))?;
    let table = triad_coefficients(spec, rows)?;
    let mut check = Check::new(format!("{f}: triad coefficients = Konvalina form, n <= {rows}"));
    for n in 0..=rows {
        for k in 0..=n {
            let via_triad = table.get(n, k);
            let via_konvalina = desc.value(n, k)?;
            check.record(via_triad == via_konvalina, || {
                format!("({n},{k}): triad {via_triad} vs konvalina {via_konvalina}")
            });
        }
    }
    let mut report = Report::new(format!("family cross-check: {f}"));
    report.push(check);
    Ok(report)
}

/// Checks `[n k] = (n-1)[n-1 k] + [n-1 k-1]` and the initial values for the
/// Konvalina form of the first-kind Stirling numbers.
pub fn stirling1_recurrence_check(rows: usize) -> Result<bool> {
    let desc = Family::Stirling1.descriptor();
    let table = desc.table(rows)?;
    let at = |n: usize, k: usize| -> Scalar {
        table
            .get(n)
            .and_then(|row| row.get(k))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    };
    if !at(0, 0).is_one() || (1..=rows).any(|k| !at(0, k).is_zero()) {
        return Ok(false);
    }
    for n in 1..=rows {
        for k in 0..=n {
            let mut rhs = Scalar::from_int(n as i64 - 1) * at(n - 1, k);
            if k >= 1 {
                rhs += &at(n - 1, k - 1);
            }
            if at(n, k) != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The polynomial recurrence `x phi_k = (n-1) phi_k + phi_{k+1}` attached to
/// the first-kind Stirling numbers, one spec per `n`.
///
/// Its coefficient array is the Pascal-like triangle with `q = n-1`, not the
/// Stirling numbers of the first kind: these specs carry no connection to
/// `[n k]`.
pub fn stirling1_companion_spec(n: usize) -> TriadSpec {
    TriadSpec::new(
        format!("stirling1-companion-{n}"),
        Sequence::constant(Scalar::one()),
        Sequence::constant(Scalar::from_int(n as i64 - 1)),
        Sequence::constant(Scalar::zero()),
    )
}
