//! Dense univariate polynomials in `t`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Coefficients are stored low degree first; trailing zeros are trimmed so
/// the last entry (if any) is the leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Clone + Zero + One + PartialEq> Polynomial<T> {
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// `t^degree - ...`, given coefficients from the leading term down.
    pub fn from_descending(coeffs: Vec<T>) -> Self {
        let mut c = coeffs;
        c.reverse();
        Self::from_coeffs(c)
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Horner evaluation.
    pub fn eval(&self, t: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * t.clone() + c.clone())
    }

    /// Index of the lowest-degree coefficient where `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).find(|&k| self.coeff(k) != other.coeff(k))
    }

    /// Every coefficient differing between `self` and `other`, as
    /// `(power, ours, theirs)`, highest power first.
    pub fn differences(&self, other: &Self) -> Vec<(usize, T, T)> {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len)
            .rev()
            .filter_map(|k| {
                let (a, b) = (self.coeff(k), other.coeff(k));
                (a != b).then_some((k, a, b))
            })
            .collect()
    }
}

impl<T: Clone + Zero + One + PartialEq + Signed> Polynomial<T> {
    /// True when consecutive coefficients from the leading term down to the
    /// constant term are all nonzero and strictly alternate in sign.
    pub fn alternates_in_sign(&self) -> bool {
        self.sign_violations().is_empty()
    }

    /// Powers `k` whose coefficient does not have sign `(-1)^(deg-k)` relative
    /// to the leading coefficient.
    pub fn sign_violations(&self) -> Vec<usize> {
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        let lead_positive = self.coeffs[deg].is_positive();
        (0..=deg)
            .rev()
            .filter(|&k| {
                let c = &self.coeffs[k];
                let expect_positive = lead_positive == ((deg - k) % 2 == 0);
                c.is_zero() || c.is_positive() != expect_positive
            })
            .collect()
    }
}

impl<T> Polynomial<T>
where
    T: Clone + Zero + One + PartialEq + Signed + fmt::Display,
{
    fn render(&self, f: &mut dyn fmt::Write, latex: bool) -> fmt::Result {
        let Some(deg) = self.degree() else {
            return write!(f, "0");
        };
        let mut first = true;
        for k in (0..=deg).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let unit = mag.is_one();
            if k == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !unit {
                write!(f, "{mag}")?;
            }
            match (k, latex) {
                (1, _) => write!(f, "t")?,
                (_, true) => write!(f, "t^{{{k}}}")?,
                (_, false) => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }

    /// Same layout as `Display`, with braced exponents: `t^{3} - 9t^{2} + 27t - 27`.
    pub fn to_latex(&self) -> String {
        let mut s = String::new();
        self.render(&mut s, true).expect("writing to a String");
        s
    }
}

impl<T> fmt::Display for Polynomial<T>
where
    T: Clone + Zero + One + PartialEq + Signed + fmt::Display,
{
    /// Renders as `t^3 - 9t^2 + 27t - 27`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.render(f, false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(desc: &[i64]) -> Polynomial<BigInt> {
        Polynomial::from_descending(desc.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -9, 27, -27]).to_string(), "t^3 - 9t^2 + 27t - 27");
        assert_eq!(p(&[1, -5, 6]).to_string(), "t^2 - 5t + 6");
        assert_eq!(p(&[-1, 0, 1, 0]).to_string(), "-t^3 + t");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[0, 0, 7]).to_string(), "7");
        assert_eq!(
            p(&[1, -14, 75, -181, 165]).to_latex(),
            "t^{4} - 14t^{3} + 75t^{2} - 181t + 165"
        );
    }

    #[test]
    fn eval_and_shape() {
        let chi = p(&[1, -5, 6]);
        assert_eq!(chi.degree(), Some(2));
        assert!(chi.is_monic());
        assert_eq!(chi.eval(&BigInt::from(-1)), BigInt::from(12));
        assert_eq!(chi.eval(&BigInt::from(1)), BigInt::from(2));
        assert_eq!(chi.eval(&BigInt::from(5)), BigInt::from(6));
        assert_eq!(chi.coeff(7), BigInt::from(0));
    }

    #[test]
    fn signs() {
        assert!(p(&[1, -9, 27, -27]).alternates_in_sign());
        let bad = p(&[1, -35, 546, -4865, 26565, -92386, -252245, -3082889]);
        assert_eq!(bad.sign_violations(), vec![1]);
        assert!(!p(&[1, 0, 1]).alternates_in_sign());
    }

    #[test]
    fn differences() {
        let a = p(&[1, -14, 75, -181, 165]);
        let b = p(&[1, -14, 75, -168, 104]);
        assert_eq!(a.first_difference(&b), Some(0));
        let d = a.differences(&b);
        assert_eq!(d.len(), 2);
        assert_eq!(d[0], (1, BigInt::from(-181), BigInt::from(-168)));
        assert_eq!(a.first_difference(&a), None);
    }

    #[test]
    fn float_eval() {
        let f = Polynomial::from_coeffs(vec![1.0f64, 0.5, 0.25]);
        assert_eq!(f.eval(&2.0), 3.0);
    }
}
