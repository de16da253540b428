//! Assembling `χ_{J_n}(t)` from central-graph counts, and chamber counts.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::central::{extract_counts, gamma_caps, gamma_product, GammaCoefficients, Mode};
use crate::counts::choose;
use crate::error::{Error, Result};
use crate::IntPolynomial;

/// Number of hyperplanes in J_n: `C(n,2)` sum walls plus `2n` coordinate walls.
pub fn hyperplane_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2 + 2 * n
}

/// `χ_{J_n}` from `Γ`: the `t^{n-r}` coefficient is
/// `Σ_{c≥0} Σ_{ν: r+ν≤n} C(n, r+ν) (−1)^c Γ_{r,c,ν}`.
///
/// `gamma` must have been built with caps covering `n` (see [`gamma_caps`]).
pub fn chi_from_gamma(gamma: &GammaCoefficients, n: usize) -> IntPolynomial {
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (&[r, c, nu], v) in gamma.iter() {
        if r + nu > n {
            continue;
        }
        let term = choose(n, r + nu) * BigInt::from(v.clone());
        if c % 2 == 0 {
            coeffs[n - r] += term;
        } else {
            coeffs[n - r] -= term;
        }
    }
    IntPolynomial::from_coeffs(coeffs)
}

pub fn chi(n: usize, mode: Mode) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::InvalidN { n, min: 1 });
    }
    let gamma = extract_counts(&gamma_product(gamma_caps(n), mode)?)?;
    Ok(chi_from_gamma(&gamma, n))
}

/// `[χ_{J_2}, …, χ_{J_{n_max}}]` from a single `Γ` at the largest caps.
pub fn chi_table(n_max: usize, mode: Mode) -> Result<Vec<IntPolynomial>> {
    if n_max < 2 {
        return Err(Error::InvalidN { n: n_max, min: 2 });
    }
    let gamma = extract_counts(&gamma_product(gamma_caps(n_max), mode)?)?;
    Ok((2..=n_max).map(|n| chi_from_gamma(&gamma, n)).collect())
}

/// Zaslavsky's evaluations: `total = (−1)^n χ(−1)` chambers and
/// `bounded = (−1)^n χ(1)` relatively bounded chambers.
///
/// Signed, so that a polynomial that is not a characteristic polynomial
/// (paper mode at larger `n`) still reports what it evaluates to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChamberCounts {
    #[serde(with = "crate::decimal")]
    pub total: BigInt,
    #[serde(with = "crate::decimal")]
    pub bounded: BigInt,
}

impl ChamberCounts {
    pub fn from_chi(chi: &IntPolynomial, n: usize) -> Self {
        let sign = if n.is_multiple_of(2) {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        ChamberCounts {
            total: &sign * chi.eval(&-BigInt::one()),
            bounded: &sign * chi.eval(&BigInt::one()),
        }
    }

    /// `total ≥ bounded ≥ 0` and `total ≥ 1`.
    pub fn is_consistent(&self) -> bool {
        self.total >= self.bounded && !self.bounded.is_negative() && self.total.is_positive()
    }
}

pub fn chambers(n: usize, mode: Mode) -> Result<ChamberCounts> {
    Ok(ChamberCounts::from_chi(&chi(n, mode)?, n))
}

/// Structural checks every `χ_{J_n}` must pass; returns human-readable
/// failures (empty when all hold).
pub fn structural_violations(chi: &IntPolynomial, n: usize) -> Vec<String> {
    let mut out = Vec::new();
    if chi.degree() != Some(n) || !chi.is_monic() {
        out.push(format!("not monic of degree {n}"));
    }
    let expected = -BigInt::from(hyperplane_count(n));
    if n >= 1 && chi.coeff(n - 1) != expected {
        out.push(format!(
            "t^{} coefficient is {}, expected {expected}",
            n - 1,
            chi.coeff(n - 1)
        ));
    }
    let violations = chi.sign_violations();
    if !violations.is_empty() {
        let powers: Vec<String> = violations.iter().map(|k| format!("t^{k}")).collect();
        out.push(format!("signs do not alternate at {}", powers.join(", ")));
    }
    if !ChamberCounts::from_chi(chi, n).is_consistent() {
        out.push("chamber counts are not valid counts".to_string());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(desc: &[i64]) -> IntPolynomial {
        IntPolynomial::from_descending(desc.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn chi_small_both_modes() {
        for mode in Mode::ALL {
            assert_eq!(chi(2, mode).unwrap(), p(&[1, -5, 6]));
            assert_eq!(chi(3, mode).unwrap(), p(&[1, -9, 27, -27]));
            assert_eq!(chi(1, mode).unwrap(), p(&[1, -2]));
        }
        assert_eq!(
            chi(3, Mode::Corrected).unwrap().to_string(),
            "t^3 - 9t^2 + 27t - 27"
        );
    }

    #[test]
    fn chi_four_matches_point_counts() {
        // values frozen from the subset-sum oracle and from counting points over F_5, F_7
        let c = chi(4, Mode::Corrected).unwrap();
        assert_eq!(c, p(&[1, -14, 75, -181, 165]));
        assert_eq!(c.eval(&BigInt::from(5)), BigInt::from(10));
        assert_eq!(c.eval(&BigInt::from(7)), BigInt::from(172));
    }

    #[test]
    fn chi_rejects_zero() {
        assert_eq!(
            chi(0, Mode::Corrected),
            Err(Error::InvalidN { n: 0, min: 1 })
        );
        assert!(chi_table(1, Mode::Corrected).is_err());
    }

    #[test]
    fn chamber_values() {
        let c2 = chambers(2, Mode::Corrected).unwrap();
        assert_eq!(c2.total, BigInt::from(12));
        assert_eq!(c2.bounded, BigInt::from(2));
        assert_eq!(
            chambers(3, Mode::Corrected).unwrap().total,
            BigInt::from(64)
        );
        assert_eq!(
            chambers(4, Mode::Corrected).unwrap().total,
            BigInt::from(436)
        );
    }

    #[test]
    fn table_matches_individual() {
        let table = chi_table(6, Mode::Paper).unwrap();
        assert_eq!(table.len(), 5);
        assert_eq!(table[0], p(&[1, -5, 6]));
        for (i, poly) in table.iter().enumerate() {
            assert_eq!(*poly, chi(i + 2, Mode::Paper).unwrap());
        }
    }

    #[test]
    fn corrected_is_structurally_sound() {
        for (i, poly) in chi_table(8, Mode::Corrected).unwrap().iter().enumerate() {
            let n = i + 2;
            assert!(structural_violations(poly, n).is_empty(), "n={n}: {poly}");
        }
    }

    #[test]
    fn sign_diagnostic_reports() {
        let v = structural_violations(
            &p(&[1, -35, 546, -4865, 26565, -92386, -252245, -3082889]),
            7,
        );
        assert!(v.iter().any(|s| s.contains("alternate")), "{v:?}");
    }
}
