use num_bigint::BigInt;
use rayon::prelude::*;

use super::OracleConfig;
use crate::error::{Error, Result};

pub fn is_prime(q: u64) -> bool {
    q >= 2
        && (2..)
            .take_while(|d| d * d <= q)
            .all(|d| !q.is_multiple_of(d))
}

// Points whose remaining coordinates avoid 0, 1 and 1 - x_j for every
// earlier coordinate. `forbidden` holds the earlier 1 - x_j values.
fn extend(q: u64, remaining: usize, forbidden: &mut Vec<u64>) -> u64 {
    let is_blocked = |v: u64, f: &[u64]| v == 0 || v == 1 || f.contains(&v);
    if remaining == 1 {
        let mut distinct: Vec<u64> = forbidden.iter().copied().filter(|&v| v > 1).collect();
        distinct.sort_unstable();
        distinct.dedup();
        return q - 2 - distinct.len() as u64;
    }
    let mut total = 0;
    for v in 2..q {
        if is_blocked(v, forbidden) {
            continue;
        }
        forbidden.push((q + 1 - v) % q);
        total += extend(q, remaining - 1, forbidden);
        forbidden.pop();
    }
    total
}

/// Points of `F_q^n` on no hyperplane of J_n.
pub fn finite_field_count(n: usize, q: u64, config: &OracleConfig) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidN { n, min: 1 });
    }
    if q < 5 || !is_prime(q) {
        return Err(Error::BadModulus(q));
    }
    let points = (q as u128).checked_pow(n as u32);
    if points.is_none_or(|p| p > config.point_budget) {
        return Err(Error::BudgetExceeded {
            n,
            q,
            budget: config.point_budget,
        });
    }
    if n == 1 {
        return Ok(BigInt::from(q - 2));
    }
    let total: u64 = config.install(|| {
        (2..q)
            .into_par_iter()
            .map(|first| {
                let mut forbidden = vec![(q + 1 - first) % q];
                extend(q, n - 1, &mut forbidden)
            })
            .collect::<Vec<u64>>()
            .into_iter()
            .sum()
    });
    Ok(BigInt::from(total))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(n: usize, q: u64) -> u64 {
        let mut count = 0;
        let total = q.pow(n as u32);
        'points: for code in 0..total {
            let mut x = vec![0; n];
            let mut c = code;
            for v in x.iter_mut() {
                *v = c % q;
                c /= q;
            }
            for i in 0..n {
                if x[i] == 0 || x[i] == 1 {
                    continue 'points;
                }
                for j in i + 1..n {
                    if (x[i] + x[j]) % q == 1 {
                        continue 'points;
                    }
                }
            }
            count += 1;
        }
        count
    }

    #[test]
    fn known_values() {
        let cfg = OracleConfig::default();
        assert_eq!(finite_field_count(1, 5, &cfg).unwrap(), BigInt::from(3));
        assert_eq!(finite_field_count(2, 5, &cfg).unwrap(), BigInt::from(6));
        assert_eq!(finite_field_count(3, 7, &cfg).unwrap(), BigInt::from(64));
    }

    #[test]
    fn pruned_count_matches_plain_scan() {
        let cfg = OracleConfig::default();
        for (n, q) in [(2, 7), (3, 5), (3, 11), (4, 7)] {
            assert_eq!(
                finite_field_count(n, q, &cfg).unwrap(),
                BigInt::from(brute(n, q)),
                "n={n} q={q}"
            );
        }
    }

    #[test]
    fn rejects_bad_input() {
        let cfg = OracleConfig::default();
        assert_eq!(finite_field_count(2, 9, &cfg), Err(Error::BadModulus(9)));
        assert_eq!(finite_field_count(2, 3, &cfg), Err(Error::BadModulus(3)));
        let tight = OracleConfig {
            point_budget: 100,
            ..Default::default()
        };
        assert!(matches!(
            finite_field_count(3, 5, &tight),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn primes() {
        let ps: Vec<u64> = (0..40).filter(|&q| is_prime(q)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
    }
}
