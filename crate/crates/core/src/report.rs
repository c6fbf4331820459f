//! The verification sweep report: every (n,a,b) cell with max >= n >= a >= b
//! >= 0, the agreement status of all evaluation routes, and one fitted
//! generating function per (a,b).
//!
//! Serialization is deterministic: cells are sorted by (a,b,n), generating
//! functions by (a,b), and all big integers render as decimal strings so
//! arbitrary precision survives any JSON consumer.

use num::{BigInt, BigRational};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::genfun::{denominator_factors, fit_generating_function, RationalFunction};
use crate::poly::rational_str;
use crate::stirling_det::{beta, gamma, methods_agree, BetaMethod, GammaMethod};

/// Guard length used by the sweep's generating-function fits.
pub const DEFAULT_GUARD: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportStatus {
    Pass,
    Fail,
}

/// One sweep cell. `methods_agree` records whether all five beta routes and
/// both gamma routes returned the same value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportCell {
    #[serde(with = "usize_string")]
    pub n: usize,
    #[serde(with = "usize_string")]
    pub a: usize,
    #[serde(with = "usize_string")]
    pub b: usize,
    #[serde(with = "bigint_string")]
    pub beta: BigInt,
    #[serde(with = "bigint_string")]
    pub gamma: BigInt,
    pub methods_agree: bool,
}

/// One fitted generating function, kept in factored-denominator form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenfunEntry {
    #[serde(with = "usize_string")]
    pub a: usize,
    #[serde(with = "usize_string")]
    pub b: usize,
    /// Numerator coefficients, ascending powers of q.
    #[serde(with = "rational_vec_string")]
    pub num: Vec<BigRational>,
    /// Each factor (1 - r q) as its coefficient pair [1, -r].
    #[serde(with = "factor_pairs")]
    pub den_factors: Vec<BigInt>,
    /// deg gcd(num, den); positive values record observed cancellations.
    #[serde(with = "usize_string")]
    pub common_factor_degree: usize,
}

impl GenfunEntry {
    pub fn new(a: usize, b: usize, rf: &RationalFunction, den_factors: Vec<BigInt>) -> Self {
        GenfunEntry {
            a,
            b,
            num: rf.num().coeffs().to_vec(),
            den_factors,
            common_factor_degree: rf.common_factor_degree(),
        }
    }

    fn num_csv(&self) -> String {
        self.num
            .iter()
            .map(rational_str)
            .collect::<Vec<_>>()
            .join(",")
    }

    fn den_str(&self) -> String {
        self.den_factors.iter().map(factor_str).collect()
    }

    /// Canonical one-line text form `num_coeffs / den_factors`.
    pub fn to_text(&self) -> String {
        format!("{} / {}", self.num_csv(), self.den_str())
    }
}

fn factor_str(rate: &BigInt) -> String {
    use num::One;
    if rate.is_one() {
        "(1-q)".to_string()
    } else {
        format!("(1-{rate}q)")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub status: ReportStatus,
    #[serde(with = "usize_string")]
    pub max: usize,
    pub cells: Vec<ReportCell>,
    pub genfuns: Vec<GenfunEntry>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == ReportStatus::Pass
    }

    /// One line per cell, one line per generating function, one status line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cells {
            out.push_str(&format!(
                "n={} a={} b={} beta={} gamma={} ok={}\n",
                c.n, c.a, c.b, c.beta, c.gamma, c.methods_agree
            ));
        }
        for g in &self.genfuns {
            out.push_str(&format!(
                "genfun a={} b={} num={} den={}\n",
                g.a,
                g.b,
                g.num_csv(),
                g.den_str()
            ));
        }
        out.push_str(&format!(
            "status={}\n",
            match self.status {
                ReportStatus::Pass => "pass",
                ReportStatus::Fail => "fail",
            }
        ));
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> std::result::Result<Report, serde_json::Error> {
        serde_json::from_str(s)
    }
}

/// Runs the sweep over all (n,a,b) with max >= n >= a >= b >= 0.
///
/// Every beta route and both gamma routes are evaluated per cell; any
/// disagreement flips the overall status to `Fail` but the report is still
/// produced. Generating functions are fitted once per (a,b); a fit failure
/// aborts, since it would falsify the denominator prediction itself.
pub fn generate_report(max: usize) -> Result<Report> {
    let mut cells = Vec::new();
    let mut all_ok = true;
    for a in 0..=max {
        for b in 0..=a {
            for n in a..=max {
                let agree = methods_agree(n, a, b)?;
                all_ok &= agree;
                cells.push(ReportCell {
                    n,
                    a,
                    b,
                    beta: beta(n, a, b, BetaMethod::Direct)?,
                    gamma: gamma(n, a, b, GammaMethod::Direct)?,
                    methods_agree: agree,
                });
            }
        }
    }
    let mut genfuns = Vec::new();
    for a in 0..=max {
        for b in 0..=a {
            let rf = fit_generating_function(a, b, DEFAULT_GUARD)?;
            let factors = denominator_factors(a, b)?;
            genfuns.push(GenfunEntry::new(a, b, &rf, factors));
        }
    }
    Ok(Report {
        status: if all_ok {
            ReportStatus::Pass
        } else {
            ReportStatus::Fail
        },
        max,
        cells,
        genfuns,
    })
}

mod usize_string {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &usize, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<usize, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

mod bigint_string {
    use num::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

mod rational_vec_string {
    use crate::poly::rational_str;
    use num::BigRational;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(rational_str))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        strings
            .into_iter()
            .map(|s| parse_rational(&s).map_err(D::Error::custom))
            .collect()
    }

    fn parse_rational(s: &str) -> Result<BigRational, String> {
        let parse_int = |t: &str| {
            t.parse::<num::BigInt>()
                .map_err(|e| format!("bad integer {t:?}: {e}"))
        };
        match s.split_once('/') {
            None => Ok(BigRational::from_integer(parse_int(s)?)),
            Some((n, d)) => Ok(BigRational::new(parse_int(n)?, parse_int(d)?)),
        }
    }
}

mod factor_pairs {
    use num::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(rates: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(
            rates
                .iter()
                .map(|r| ["1".to_string(), (-r).to_string()]),
        )
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let pairs = Vec::<[String; 2]>::deserialize(d)?;
        pairs
            .into_iter()
            .map(|[c0, c1]| {
                if c0 != "1" {
                    return Err(D::Error::custom(format!(
                        "denominator factor must have constant term 1, got {c0:?}"
                    )));
                }
                let c1: BigInt = c1.parse().map_err(D::Error::custom)?;
                Ok(-c1)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_sweep_cells() {
        let report = generate_report(1).unwrap();
        assert_eq!(report.status, ReportStatus::Pass);
        let coords: Vec<(usize, usize, usize)> =
            report.cells.iter().map(|c| (c.n, c.a, c.b)).collect();
        // Sorted by (a,b,n): (0,0,0), (1,0,0), (1,1,0), (1,1,1).
        assert_eq!(coords, vec![(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1)]);
        for c in &report.cells {
            assert_eq!(c.beta, BigInt::from(1));
            assert_eq!(c.gamma, BigInt::from(1));
            assert!(c.methods_agree);
        }
        assert_eq!(report.genfuns.len(), 3);
    }

    #[test]
    fn sweep_cell_spot_values() {
        let report = generate_report(2).unwrap();
        let cell = report
            .cells
            .iter()
            .find(|c| (c.n, c.a, c.b) == (2, 2, 1))
            .unwrap();
        assert_eq!(cell.beta, BigInt::from(7));
        assert_eq!(
            cell.gamma,
            gamma(2, 2, 1, GammaMethod::Direct).unwrap()
        );
        assert!(cell.methods_agree);
    }

    #[test]
    fn json_round_trip() {
        let report = generate_report(2).unwrap();
        let parsed = Report::from_json(&report.to_json()).unwrap();
        assert_eq!(parsed, report);
    }

    #[test]
    fn text_format_lines() {
        let report = generate_report(1).unwrap();
        let text = report.to_text();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "n=0 a=0 b=0 beta=1 gamma=1 ok=true");
        assert!(lines.iter().any(|l| *l == "genfun a=1 b=1 num=1 den=(1-q)"));
        assert_eq!(*lines.last().unwrap(), "status=pass");
    }

    #[test]
    fn generation_is_deterministic() {
        let a = generate_report(2).unwrap();
        let b = generate_report(2).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.to_text(), b.to_text());
    }
}
