//! Reports comparing the generating-function pipeline with the oracles and
//! with the published tables. Everything here is plain data so the CLI can
//! render it as text, JSON or LaTeX.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::central::{gamma1, gamma_caps, Mode};
use crate::charpoly::{chi_from_gamma, structural_violations, ChamberCounts};
use crate::counts::{self, factorial};
use crate::error::{Error, Result};
use crate::oracle::{self, is_prime, OracleConfig};
use crate::{central, published, IntPolynomial, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    /// Paper mode disagrees with an oracle that corrected mode agrees with.
    Divergent,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Divergent => "DIVERGENT",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OracleKind {
    Whitney,
    Ffield,
    Graphs,
}

impl OracleKind {
    pub const ALL: [OracleKind; 3] = [OracleKind::Whitney, OracleKind::Ffield, OracleKind::Graphs];

    pub fn as_str(&self) -> &'static str {
        match self {
            OracleKind::Whitney => "whitney",
            OracleKind::Ffield => "ffield",
            OracleKind::Graphs => "graphs",
        }
    }
}

impl std::str::FromStr for OracleKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "whitney" => Ok(OracleKind::Whitney),
            "ffield" => Ok(OracleKind::Ffield),
            "graphs" => Ok(OracleKind::Graphs),
            other => Err(format!(
                "unknown oracle {other:?} (expected whitney, ffield or graphs)"
            )),
        }
    }
}

/// Polynomial coefficients, low degree first, as decimal strings on the wire.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coeffs(#[serde(with = "crate::decimal::vec")] pub Vec<BigInt>);

impl From<&IntPolynomial> for Coeffs {
    fn from(p: &IntPolynomial) -> Self {
        Coeffs(p.coeffs().to_vec())
    }
}

impl Coeffs {
    pub fn to_polynomial(&self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.0.clone())
    }
}

/// One disagreeing value. `at` names the position, e.g. `t^1`, `q=23` or
/// `order 4, size 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Difference {
    pub at: String,
    #[serde(with = "crate::decimal")]
    pub computed: BigInt,
    #[serde(with = "crate::decimal")]
    pub expected: BigInt,
}

impl fmt::Display for Difference {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} vs {}", self.at, self.computed, self.expected)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModeCheck {
    pub mode: Mode,
    pub status: Status,
    pub first_difference: Option<Difference>,
}

/// `Pass` or `Fail` only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PublishedCheck {
    pub status: Status,
    pub first_difference: Option<Difference>,
}

impl PublishedCheck {
    fn from_difference(first_difference: Option<Difference>) -> Self {
        PublishedCheck {
            status: if first_difference.is_none() {
                Status::Pass
            } else {
                Status::Fail
            },
            first_difference,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointCheck {
    pub q: u64,
    #[serde(with = "crate::decimal")]
    pub points: BigInt,
    #[serde(with = "crate::decimal")]
    pub corrected: BigInt,
    #[serde(with = "crate::decimal")]
    pub paper: BigInt,
    #[serde(with = "crate::decimal::option")]
    pub published: Option<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRow {
    pub order: usize,
    pub size: usize,
    #[serde(with = "crate::decimal")]
    pub bipartite_formula: BigInt,
    #[serde(with = "crate::decimal")]
    pub bipartite_enumerated: BigInt,
    #[serde(with = "crate::decimal")]
    pub connected_formula: BigInt,
    #[serde(with = "crate::decimal")]
    pub connected_enumerated: BigInt,
    #[serde(with = "crate::decimal")]
    pub isolated_free_formula: BigInt,
    #[serde(with = "crate::decimal")]
    pub isolated_free_enumerated: BigInt,
    /// Type-1 factor coefficient times `order!`, per mode.
    #[serde(with = "crate::decimal")]
    pub type1_corrected: BigInt,
    #[serde(with = "crate::decimal")]
    pub type1_paper: BigInt,
    /// Enumerated graphs with every component non-bipartite.
    #[serde(with = "crate::decimal")]
    pub type1_enumerated: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Evidence {
    Whitney {
        oracle: Coeffs,
        corrected: Coeffs,
        paper: Coeffs,
    },
    Ffield {
        checks: Vec<PointCheck>,
        /// Polynomial through `n + 1` point counts, when it is integral.
        interpolated: Option<Coeffs>,
    },
    Graphs {
        rows: Vec<GraphRow>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "lowercase")]
#[allow(clippy::large_enum_variant)]
pub enum Outcome {
    Checked {
        corrected: ModeCheck,
        paper: ModeCheck,
        /// The published polynomial against the same oracle, when there is
        /// one for this `n` and the oracle checks polynomials.
        published: Option<PublishedCheck>,
        evidence: Evidence,
    },
    Skipped {
        reason: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub oracle: OracleKind,
    #[serde(flatten)]
    pub outcome: Outcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub n: usize,
    pub reports: Vec<OracleReport>,
}

impl VerifyReport {
    /// False iff some oracle ran and corrected mode did not pass it.
    pub fn corrected_passed(&self) -> bool {
        self.reports.iter().all(|r| match &r.outcome {
            Outcome::Checked { corrected, .. } => corrected.status == Status::Pass,
            Outcome::Skipped { .. } => true,
        })
    }
}

fn mode_checks(
    corrected_diff: Option<Difference>,
    paper_diff: Option<Difference>,
) -> (ModeCheck, ModeCheck) {
    let corrected_status = if corrected_diff.is_none() {
        Status::Pass
    } else {
        Status::Fail
    };
    let paper_status = match (&paper_diff, corrected_status) {
        (None, _) => Status::Pass,
        (Some(_), Status::Pass) => Status::Divergent,
        (Some(_), _) => Status::Fail,
    };
    (
        ModeCheck {
            mode: Mode::Corrected,
            status: corrected_status,
            first_difference: corrected_diff,
        },
        ModeCheck {
            mode: Mode::Paper,
            status: paper_status,
            first_difference: paper_diff,
        },
    )
}

/// Highest power where the two polynomials differ.
fn poly_difference(computed: &IntPolynomial, expected: &IntPolynomial) -> Option<Difference> {
    computed
        .differences(expected)
        .into_iter()
        .next()
        .map(|(k, a, b)| Difference {
            at: format!("t^{k}"),
            computed: a,
            expected: b,
        })
}

/// `χ_{J_n}` in both modes, sharing nothing between them.
pub fn chi_both(n: usize) -> Result<(IntPolynomial, IntPolynomial)> {
    Ok((crate::chi(n, Mode::Corrected)?, crate::chi(n, Mode::Paper)?))
}

pub fn verify_whitney(n: usize, config: &OracleConfig) -> Result<OracleReport> {
    let oracle = oracle::whitney_chi(n, config)?;
    let (corrected, paper) = chi_both(n)?;
    let (c, p) = mode_checks(
        poly_difference(&corrected, &oracle),
        poly_difference(&paper, &oracle),
    );
    let published = published::chi(n)
        .map(|reference| PublishedCheck::from_difference(poly_difference(&reference, &oracle)));
    Ok(OracleReport {
        oracle: OracleKind::Whitney,
        outcome: Outcome::Checked {
            corrected: c,
            paper: p,
            published,
            evidence: Evidence::Whitney {
                oracle: (&oracle).into(),
                corrected: (&corrected).into(),
                paper: (&paper).into(),
            },
        },
    })
}

/// Primes used when none are given: small ones while `n ≤ 4`, then
/// 23, 29, 31.
pub fn default_primes(n: usize) -> Vec<u64> {
    if n <= 4 {
        vec![5, 7, 11, 13]
    } else {
        vec![23, 29, 31]
    }
}

fn next_primes_after(start: u64, count: usize) -> Vec<u64> {
    (start + 1..).filter(|&q| is_prime(q)).take(count).collect()
}

/// Newton interpolation through `(t_i, v_i)`; `None` unless every
/// coefficient is an integer.
pub fn interpolate(points: &[(BigInt, BigInt)]) -> Option<IntPolynomial> {
    let m = points.len();
    let ts: Vec<Rational> = points
        .iter()
        .map(|(t, _)| Rational::from_integer(t.clone()))
        .collect();
    let mut dd: Vec<Rational> = points
        .iter()
        .map(|(_, v)| Rational::from_integer(v.clone()))
        .collect();
    for level in 1..m {
        for i in (level..m).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&ts[i] - &ts[i - level]);
        }
    }
    // expand Σ dd[i] Π_{j<i} (t − t_j), Horner style from the top
    let mut coeffs: Vec<Rational> = vec![Rational::zero(); m];
    for i in (0..m).rev() {
        // coeffs ← coeffs · (t − t_i) + dd[i]
        let mut next = vec![Rational::zero(); m];
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k + 1 < m {
                next[k + 1] += c;
            }
            next[k] -= c * &ts[i];
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    let ints: Option<Vec<BigInt>> = coeffs
        .into_iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect();
    ints.map(IntPolynomial::from_coeffs)
}

/// Point counts at `primes` (default [`default_primes`]), plus an
/// interpolation through `n + 1` primes that must reproduce the corrected
/// polynomial.
pub fn verify_ffield(
    n: usize,
    primes: Option<&[u64]>,
    config: &OracleConfig,
) -> Result<OracleReport> {
    let primes: Vec<u64> = primes
        .map(<[u64]>::to_vec)
        .unwrap_or_else(|| default_primes(n));
    if let Some(&bad) = primes.iter().find(|&&q| q < 5 || !is_prime(q)) {
        return Err(Error::BadModulus(bad));
    }
    let (corrected, paper) = chi_both(n)?;
    let reference = published::chi(n);
    let mut checks = Vec::new();
    for &q in &primes {
        let qb = BigInt::from(q);
        checks.push(PointCheck {
            q,
            points: oracle::finite_field_count(n, q, config)?,
            corrected: corrected.eval(&qb),
            paper: paper.eval(&qb),
            published: reference.as_ref().map(|r| r.eval(&qb)),
        });
    }
    let mut samples: Vec<(BigInt, BigInt)> = checks
        .iter()
        .map(|c| (BigInt::from(c.q), c.points.clone()))
        .collect();
    if samples.len() < n + 1 {
        let top = primes.iter().copied().max().unwrap_or(4);
        for q in next_primes_after(top, n + 1 - samples.len()) {
            samples.push((BigInt::from(q), oracle::finite_field_count(n, q, config)?));
        }
    }
    samples.truncate(n + 1);
    let interpolated = interpolate(&samples);

    let first_point_diff = |pick: fn(&PointCheck) -> &BigInt| {
        checks
            .iter()
            .find(|c| pick(c) != &c.points)
            .map(|c| Difference {
                at: format!("q={}", c.q),
                computed: pick(c).clone(),
                expected: c.points.clone(),
            })
    };
    let mut corrected_diff = first_point_diff(|c| &c.corrected);
    if corrected_diff.is_none() {
        corrected_diff = match &interpolated {
            Some(p) => poly_difference(&corrected, p).map(|d| Difference {
                at: format!("interpolated {}", d.at),
                ..d
            }),
            None => Some(Difference {
                at: "interpolation is not integral".to_string(),
                computed: BigInt::zero(),
                expected: BigInt::zero(),
            }),
        };
    }
    let paper_diff = first_point_diff(|c| &c.paper);
    let published = reference.as_ref().map(|_| {
        PublishedCheck::from_difference(checks.iter().find_map(|c| {
            let value = c.published.as_ref().expect("published polynomial present");
            (*value != c.points).then(|| Difference {
                at: format!("q={}", c.q),
                computed: value.clone(),
                expected: c.points.clone(),
            })
        }))
    });
    let (c, p) = mode_checks(corrected_diff, paper_diff);
    Ok(OracleReport {
        oracle: OracleKind::Ffield,
        outcome: Outcome::Checked {
            corrected: c,
            paper: p,
            published,
            evidence: Evidence::Ffield {
                checks,
                interpolated: interpolated.as_ref().map(Coeffs::from),
            },
        },
    })
}

fn scaled_count(c: &Rational, order: usize) -> BigInt {
    let v = c * factorial(order);
    // series built from integer counts; a fraction here is reported as-is
    if v.is_integer() {
        v.to_integer()
    } else {
        v.floor().to_integer()
    }
}

/// Graph-count series against exhaustive enumeration for every order up to
/// `n`, and the type-1 factor of each mode against the graphs it is meant
/// to count.
pub fn verify_graphs(n: usize) -> Result<OracleReport> {
    if n > oracle::MAX_CENSUS_ORDER {
        return Err(Error::GuardExceeded {
            n,
            max: oracle::MAX_CENSUS_ORDER,
            what: "graph enumeration",
            hint: "use the generating-function counts",
        });
    }
    let caps = counts::default_caps(n);
    let bipartite = counts::connected_bipartite_counts(caps)?;
    let connected = counts::connected_graph_counts(caps)?;
    let isolated_free = counts::graphs_no_isolated_counts(caps)?;
    let g1c = gamma1(caps, Mode::Corrected)?;
    let g1p = gamma1(caps, Mode::Paper)?;

    let mut rows = Vec::new();
    let mut shared_diff = None;
    let mut corrected_diff = None;
    let mut paper_diff = None;
    for order in 1..=n {
        let census = oracle::enumerate_graphs(order)?;
        for size in 0..=census.max_size() {
            let coef = |s: &crate::Series| {
                scaled_count(
                    &s.coefficient(order as u32, size as u32, 0)
                        .expect("within caps"),
                    order,
                )
            };
            let row = GraphRow {
                order,
                size,
                bipartite_formula: bipartite.get([order, size]).into(),
                bipartite_enumerated: census.connected_bipartite(size).into(),
                connected_formula: connected.get([order, size]).into(),
                connected_enumerated: census.connected(size).into(),
                isolated_free_formula: isolated_free.get([order, size]).into(),
                isolated_free_enumerated: census.isolated_free(size).into(),
                type1_corrected: coef(&g1c),
                type1_paper: coef(&g1p),
                type1_enumerated: census.all_components_non_bipartite(size).into(),
            };
            let at = || format!("order {order}, size {size}");
            let pairs = [
                (&row.bipartite_formula, &row.bipartite_enumerated),
                (&row.connected_formula, &row.connected_enumerated),
                (&row.isolated_free_formula, &row.isolated_free_enumerated),
            ];
            if shared_diff.is_none() {
                if let Some((a, b)) = pairs.into_iter().find(|(a, b)| a != b) {
                    shared_diff = Some(Difference {
                        at: at(),
                        computed: a.clone(),
                        expected: b.clone(),
                    });
                }
            }
            if corrected_diff.is_none() && row.type1_corrected != row.type1_enumerated {
                corrected_diff = Some(Difference {
                    at: format!("type-1 {}", at()),
                    computed: row.type1_corrected.clone(),
                    expected: row.type1_enumerated.clone(),
                });
            }
            if paper_diff.is_none() && row.type1_paper != row.type1_enumerated {
                paper_diff = Some(Difference {
                    at: format!("type-1 {}", at()),
                    computed: row.type1_paper.clone(),
                    expected: row.type1_enumerated.clone(),
                });
            }
            let interesting = [
                &row.bipartite_enumerated,
                &row.connected_enumerated,
                &row.isolated_free_enumerated,
                &row.type1_paper,
                &row.type1_corrected,
            ]
            .iter()
            .any(|v| !v.is_zero());
            if interesting {
                rows.push(row);
            }
        }
    }
    let (c, p) = mode_checks(
        shared_diff.clone().or(corrected_diff),
        shared_diff.or(paper_diff),
    );
    Ok(OracleReport {
        oracle: OracleKind::Graphs,
        outcome: Outcome::Checked {
            corrected: c,
            paper: p,
            published: None,
            evidence: Evidence::Graphs { rows },
        },
    })
}

/// Runs each requested oracle; a guard violation skips only that oracle.
pub fn verify(
    n: usize,
    oracles: &[OracleKind],
    primes: Option<&[u64]>,
    config: &OracleConfig,
) -> Result<VerifyReport> {
    if n == 0 {
        return Err(Error::InvalidN { n, min: 1 });
    }
    let mut reports = Vec::new();
    for &kind in oracles {
        let result = match kind {
            OracleKind::Whitney => verify_whitney(n, config),
            OracleKind::Ffield => verify_ffield(n, primes, config),
            OracleKind::Graphs => verify_graphs(n),
        };
        reports.push(match result {
            Ok(r) => r,
            Err(
                e @ (Error::GuardExceeded { .. }
                | Error::BudgetExceeded { .. }
                | Error::BadModulus(_)),
            ) => OracleReport {
                oracle: kind,
                outcome: Outcome::Skipped {
                    reason: e.to_string(),
                },
            },
            Err(e) => return Err(e),
        });
    }
    Ok(VerifyReport { n, reports })
}

/// One characteristic polynomial, e.g.
/// `{"n":2,"mode":"corrected","coeffs":["6","-5","1"]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiRecord {
    pub n: usize,
    pub mode: Mode,
    pub coeffs: Coeffs,
}

impl ChiRecord {
    pub fn new(n: usize, mode: Mode) -> Result<Self> {
        Ok(ChiRecord {
            n,
            mode,
            coeffs: (&crate::chi(n, mode)?).into(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChambersRecord {
    pub n: usize,
    pub mode: Mode,
    #[serde(flatten)]
    pub chambers: ChamberCounts,
}

impl ChambersRecord {
    pub fn new(n: usize, mode: Mode) -> Result<Self> {
        Ok(ChambersRecord {
            n,
            mode,
            chambers: crate::chambers(n, mode)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PublishedComparison {
    /// Coefficients disagreeing with the published polynomial, highest
    /// power first.
    pub coefficients: Vec<Difference>,
    /// Tabulated chamber count, when one was published for this `n`.
    pub chamber_total: Option<Difference>,
    /// `(−1)^n χ(−1)` of the published polynomial itself.
    #[serde(with = "crate::decimal")]
    pub published_polynomial_total: BigInt,
}

impl PublishedComparison {
    pub fn difference_count(&self) -> usize {
        self.coefficients.len() + usize::from(self.chamber_total.is_some())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub n: usize,
    pub coeffs: Coeffs,
    pub chambers: ChamberCounts,
    /// Failed structural checks (monic, hyperplane count, sign alternation,
    /// valid chamber counts).
    pub violations: Vec<String>,
    pub published: Option<PublishedComparison>,
}

impl TableRow {
    pub fn polynomial(&self) -> IntPolynomial {
        self.coeffs.to_polynomial()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub mode: Mode,
    pub rows: Vec<TableRow>,
}

impl TableReport {
    pub fn difference_count(&self) -> usize {
        self.rows
            .iter()
            .filter_map(|r| r.published.as_ref())
            .map(PublishedComparison::difference_count)
            .sum()
    }
}

fn compare_published(
    chi: &IntPolynomial,
    chambers: &ChamberCounts,
    n: usize,
) -> Option<PublishedComparison> {
    let reference = published::chi(n)?;
    let coefficients = chi
        .differences(&reference)
        .into_iter()
        .map(|(k, a, b)| Difference {
            at: format!("t^{k}"),
            computed: a,
            expected: b,
        })
        .collect();
    let chamber_total = published::chamber_total(n)
        .filter(|v| *v != chambers.total)
        .map(|v| Difference {
            at: "chambers".to_string(),
            computed: chambers.total.clone(),
            expected: v,
        });
    let published_polynomial_total = ChamberCounts::from_chi(&reference, n).total;
    Some(PublishedComparison {
        coefficients,
        chamber_total,
        published_polynomial_total,
    })
}

/// `χ_{J_n}` for `2 ≤ n ≤ n_max` from one `Γ`, with chamber counts,
/// structural checks and an itemised diff against the published values.
pub fn table_report(n_max: usize, mode: Mode) -> Result<TableReport> {
    if n_max < 2 {
        return Err(Error::InvalidN { n: n_max, min: 2 });
    }
    let gamma = central::extract_counts(&central::gamma_product(gamma_caps(n_max), mode)?)?;
    let rows = (2..=n_max)
        .map(|n| {
            let chi = chi_from_gamma(&gamma, n);
            let chambers = ChamberCounts::from_chi(&chi, n);
            TableRow {
                n,
                coeffs: (&chi).into(),
                violations: structural_violations(&chi, n),
                published: compare_published(&chi, &chambers, n),
                chambers,
            }
        })
        .collect();
    Ok(TableReport { mode, rows })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteRow {
    pub order: usize,
    pub size: usize,
    #[serde(with = "crate::decimal")]
    pub formula: BigInt,
    /// Exhaustive count, for orders the enumerator accepts.
    #[serde(with = "crate::decimal::option")]
    pub enumerated: Option<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteReport {
    pub n_max: usize,
    pub rows: Vec<BipartiteRow>,
    pub mismatches: usize,
}

pub const MAX_BIPARTITE_ORDER: usize = 12;

/// Connected bipartite counts `b̄_{n,k}` for `1 ≤ n ≤ n_max`, with an
/// enumerated column for `n ≤ 6`.
pub fn bipartite_report(n_max: usize) -> Result<BipartiteReport> {
    if n_max == 0 {
        return Err(Error::InvalidN { n: n_max, min: 1 });
    }
    if n_max > MAX_BIPARTITE_ORDER {
        return Err(Error::GuardExceeded {
            n: n_max,
            max: MAX_BIPARTITE_ORDER,
            what: "bipartite table",
            hint: "ask for a smaller table",
        });
    }
    let max_edges = (n_max / 2) * n_max.div_ceil(2);
    let table =
        counts::connected_bipartite_counts(crate::Caps::new(n_max as u32, max_edges as u32, 0))?;
    let mut rows = Vec::new();
    let mut mismatches = 0;
    for order in 1..=n_max {
        let census = (order <= oracle::MAX_CENSUS_ORDER)
            .then(|| oracle::enumerate_graphs(order))
            .transpose()?;
        for size in 0..=(order / 2) * order.div_ceil(2) {
            let formula: BigInt = table.get([order, size]).into();
            let enumerated: Option<BigInt> =
                census.as_ref().map(|c| c.connected_bipartite(size).into());
            if formula.is_zero() && enumerated.as_ref().is_none_or(Zero::is_zero) {
                continue;
            }
            if enumerated.as_ref().is_some_and(|e| *e != formula) {
                mismatches += 1;
            }
            rows.push(BipartiteRow {
                order,
                size,
                formula,
                enumerated,
            });
        }
    }
    Ok(BipartiteReport {
        n_max,
        rows,
        mismatches,
    })
}
