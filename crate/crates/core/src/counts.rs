//! Labeled-graph count series: bicolored graphs, connected bipartite graphs,
//! graphs without isolated vertices and connected graphs.
//!
//! Counts are read off exponential generating functions as `n! · [x^n y^k]`
//! and must come out as exact non-negative integers; anything else means the
//! caps were too small for the question asked.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{Caps, Monomial, TruncatedSeries};
use crate::{Rational, Series};

/// Exact counts keyed by an index tuple such as `(order, size)`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CountTable<const N: usize> {
    #[serde(with = "entries")]
    entries: BTreeMap<[usize; N], BigUint>,
}

impl<const N: usize> CountTable<N> {
    pub fn new() -> Self {
        CountTable {
            entries: BTreeMap::new(),
        }
    }

    /// Zero when absent.
    pub fn get(&self, key: [usize; N]) -> BigUint {
        self.entries.get(&key).cloned().unwrap_or_default()
    }

    pub fn add(&mut self, key: [usize; N], value: &BigUint) {
        if value.is_zero() {
            return;
        }
        *self.entries.entry(key).or_default() += value;
    }

    pub fn insert(&mut self, key: [usize; N], value: BigUint) {
        if value.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, value);
        }
    }

    /// Nonzero entries in key order.
    pub fn iter(&self) -> impl Iterator<Item = (&[usize; N], &BigUint)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> BigUint {
        self.entries.values().sum()
    }

    /// Entries for which `keep` holds, all other entries dropped.
    pub fn filtered(&self, keep: impl Fn(&[usize; N]) -> bool) -> Self {
        CountTable {
            entries: self
                .entries
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }
}

impl<const N: usize> FromIterator<([usize; N], BigUint)> for CountTable<N> {
    fn from_iter<I: IntoIterator<Item = ([usize; N], BigUint)>>(iter: I) -> Self {
        let mut t = CountTable::new();
        for (k, v) in iter {
            t.add(k, &v);
        }
        t
    }
}

// JSON object keys must be strings, so tables serialize as a list of
// `[key, "decimal"]` pairs.
mod entries {
    use std::collections::BTreeMap;

    use num_bigint::BigUint;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer, const N: usize>(
        map: &BTreeMap<[usize; N], BigUint>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        let pairs: Vec<(Vec<usize>, String)> = map
            .iter()
            .map(|(k, v)| (k.to_vec(), v.to_str_radix(10)))
            .collect();
        pairs.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>, const N: usize>(
        d: D,
    ) -> Result<BTreeMap<[usize; N], BigUint>, D::Error> {
        let pairs: Vec<(Vec<usize>, String)> = Vec::deserialize(d)?;
        pairs
            .into_iter()
            .map(|(k, v)| {
                let key: [usize; N] = k
                    .try_into()
                    .map_err(|_| D::Error::custom("wrong key arity"))?;
                let val = BigUint::parse_bytes(v.as_bytes(), 10)
                    .ok_or_else(|| D::Error::custom(format!("bad integer {v:?}")))?;
                Ok((key, val))
            })
            .collect()
    }
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub(crate) fn choose(n: usize, k: usize) -> BigInt {
    if k > n {
        BigInt::zero()
    } else {
        binomial(BigInt::from(n), BigInt::from(k))
    }
}

fn egf_term(x: usize, y: usize, count: BigInt) -> (Monomial, Rational) {
    (
        Monomial::new(x as u32, y as u32, 0),
        Rational::new(count, factorial(x)),
    )
}

/// `n! · c` as a non-negative integer, or a consistency failure.
pub(crate) fn to_count(
    c: &Rational,
    scale: &BigInt,
    what: impl FnOnce() -> String,
) -> Result<BigUint> {
    let v = c * scale;
    if v.is_integer() && !v.is_negative() {
        Ok(v.to_integer().to_biguint().expect("non-negative"))
    } else {
        Err(Error::NotACount {
            what: what(),
            value: v.to_string(),
        })
    }
}

/// Default caps for J_n: every edge plus one colour wall per vertex.
pub fn default_caps(n: usize) -> Caps {
    Caps::new(n as u32, (n * n.saturating_sub(1) / 2 + n) as u32, 0)
}

/// `1 + Σ_{n≥1,k≥0} Σ_i C(n,i) C(i(n-i),k) x^n y^k / n!`: graphs whose
/// vertices are 2-coloured with edges only between colours.
pub fn bicolored_series(caps: Caps) -> Series {
    let mut terms = vec![(Monomial::ONE, Rational::one())];
    for n in 1..=caps.dx as usize {
        let max_edges = (n / 2) * n.div_ceil(2);
        for k in 0..=max_edges.min(caps.dy as usize) {
            let count: BigInt = (0..=n).map(|i| choose(n, i) * choose(i * (n - i), k)).sum();
            terms.push(egf_term(n, k, count));
        }
    }
    TruncatedSeries::from_terms(caps, terms)
}

/// `1 + Σ C(C(n,2),k) x^n y^k / n!`: all labeled graphs.
pub fn all_graphs_series(caps: Caps) -> Series {
    let mut terms = vec![(Monomial::ONE, Rational::one())];
    for n in 1..=caps.dx as usize {
        let pairs = n * (n - 1) / 2;
        for k in 0..=pairs.min(caps.dy as usize) {
            terms.push(egf_term(n, k, choose(pairs, k)));
        }
    }
    TruncatedSeries::from_terms(caps, terms)
}

fn counts_from_series(series: &Series, what: &str) -> Result<CountTable<2>> {
    let mut table = CountTable::new();
    for (m, c) in series.terms() {
        let count = to_count(c, &factorial(m.x as usize), || {
            format!("{what} at order {}, size {}", m.x, m.y)
        })?;
        table.insert([m.x as usize, m.y as usize], count);
    }
    Ok(table)
}

/// `½ log B`, the EGF of connected bipartite graphs.
pub fn connected_bipartite_series(caps: Caps) -> Result<Series> {
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    Ok(bicolored_series(caps).log()?.scale(&half))
}

/// `\bar b_{n,k}`: connected bipartite graphs of order `n` and size `k`.
pub fn connected_bipartite_counts(caps: Caps) -> Result<CountTable<2>> {
    counts_from_series(
        &connected_bipartite_series(caps)?,
        "connected bipartite count",
    )
}

/// `log(all graphs)`, the EGF of connected graphs.
pub fn connected_graph_series(caps: Caps) -> Result<Series> {
    all_graphs_series(caps).log()
}

pub fn connected_graph_counts(caps: Caps) -> Result<CountTable<2>> {
    counts_from_series(&connected_graph_series(caps)?, "connected graph count")
}

/// `exp(log(all graphs) - x)`: graphs with no isolated vertex.
pub fn graphs_no_isolated_series(caps: Caps) -> Result<Series> {
    let x = Series::monomial(Monomial::new(1, 0, 0), Rational::one(), caps);
    (&connected_graph_series(caps)? - &x).exp()
}

pub fn graphs_no_isolated_counts(caps: Caps) -> Result<CountTable<2>> {
    counts_from_series(
        &graphs_no_isolated_series(caps)?,
        "isolated-vertex-free count",
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::ToBigInt;

    fn u(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn bicolored_coefficients() {
        let b = bicolored_series(Caps::new(4, 4, 0));
        assert_eq!(
            b.coefficient(1, 0, 0).unwrap(),
            Rational::from_integer(2.into())
        );
        assert_eq!(b.coefficient(2, 1, 0).unwrap(), Rational::one());
        assert!(b.coefficient(2, 2, 0).unwrap().is_zero());
        assert_eq!(b.constant_term(), Rational::one());
    }

    #[test]
    fn bipartite_small_values() {
        let t = connected_bipartite_counts(Caps::new(4, 6, 0)).unwrap();
        assert_eq!(t.get([1, 0]), u(1));
        assert_eq!(t.get([2, 1]), u(1));
        assert_eq!(t.get([3, 2]), u(3));
        assert_eq!(t.get([4, 4]), u(3));
        assert_eq!(t.get([4, 3]), u(16));
        assert_eq!(t.get([3, 3]), u(0));
    }

    #[test]
    fn bipartite_support_bounds() {
        let n_max = 8;
        let t = connected_bipartite_counts(Caps::new(n_max, 20, 0)).unwrap();
        for (&[n, k], _) in t.iter() {
            assert!(k <= (n / 2) * n.div_ceil(2), "({n},{k})");
            assert!(n < 2 || k >= n - 1, "({n},{k})");
        }
    }

    #[test]
    fn no_isolated_values() {
        let s = graphs_no_isolated_series(Caps::new(4, 6, 0)).unwrap();
        let t = graphs_no_isolated_counts(Caps::new(4, 6, 0)).unwrap();
        assert_eq!(
            s.coefficient(2, 1, 0).unwrap(),
            Rational::new(1.into(), 2.into())
        );
        assert_eq!(t.get([2, 1]), u(1));
        assert_eq!(t.get([3, 1]), u(0));
        assert_eq!(t.get([3, 2]), u(3));
        assert_eq!(t.get([4, 2]), u(3));
        assert_eq!(t.get([0, 0]), u(1));
    }

    #[test]
    fn connected_values() {
        let t = connected_graph_counts(Caps::new(4, 6, 0)).unwrap();
        assert_eq!(t.get([3, 3]), u(1));
        assert_eq!(t.get([3, 2]), u(3));
        assert_eq!(t.get([1, 0]), u(1));
        assert_eq!(t.get([4, 3]), u(16));
    }

    #[test]
    fn isolated_reinclusion_recovers_all_graphs() {
        let n_max = 6;
        let t = graphs_no_isolated_counts(default_caps(n_max)).unwrap();
        for n in 0..=n_max {
            let total: BigInt = (0..=n)
                .flat_map(|m| {
                    let t = &t;
                    (0..=n * n).map(move |k| choose(n, m) * t.get([m, k]).to_bigint().unwrap())
                })
                .sum();
            assert_eq!(
                total,
                BigInt::from(2u64).pow((n * n.saturating_sub(1) / 2) as u32)
            );
        }
    }

    #[test]
    fn count_table_json_roundtrip() {
        let t = connected_bipartite_counts(Caps::new(5, 6, 0)).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        let back: CountTable<2> = serde_json::from_str(&json).unwrap();
        assert_eq!(t, back);
    }
}
