//! Truncated formal power series in three commuting variables.
//!
//! `x` marks rank (or order), `y` marks cardinality and `z` marks bipartite
//! components. A series only knows its coefficients up to its [`Caps`]; every
//! binary operation works at the component-wise minimum of its inputs' caps so
//! no reported coefficient can be polluted by a discarded cross term.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Maximum retained degree per variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Caps {
    pub dx: u32,
    pub dy: u32,
    pub dz: u32,
}

impl Caps {
    pub const fn new(dx: u32, dy: u32, dz: u32) -> Self {
        Caps { dx, dy, dz }
    }

    pub fn min(self, other: Caps) -> Caps {
        Caps {
            dx: self.dx.min(other.dx),
            dy: self.dy.min(other.dy),
            dz: self.dz.min(other.dz),
        }
    }

    pub fn contains(&self, m: Monomial) -> bool {
        m.x <= self.dx && m.y <= self.dy && m.z <= self.dz
    }

    fn volume(&self) -> usize {
        (self.dx as usize + 1) * (self.dy as usize + 1) * (self.dz as usize + 1)
    }

    fn index(&self, m: Monomial) -> usize {
        let (ny, nz) = (self.dy as usize + 1, self.dz as usize + 1);
        (m.x as usize * ny + m.y as usize) * nz + m.z as usize
    }

    fn monomial_at(&self, idx: usize) -> Monomial {
        let (ny, nz) = (self.dy as usize + 1, self.dz as usize + 1);
        Monomial::new(
            (idx / (ny * nz)) as u32,
            ((idx / nz) % ny) as u32,
            (idx % nz) as u32,
        )
    }
}

/// Exponent triple `x^x y^y z^z`. Orders lexicographically by `(x, y, z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0, z: 0 };

    pub const fn new(x: u32, y: u32, z: u32) -> Self {
        Monomial { x, y, z }
    }

    pub fn total_degree(&self) -> u32 {
        self.x + self.y + self.z
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{} y^{} z^{}", self.x, self.y, self.z)
    }
}

/// Sparse truncated power series. Zero coefficients are never stored and no
/// stored key exceeds the caps.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<T> {
    caps: Caps,
    coeffs: BTreeMap<Monomial, T>,
}

impl<T: Scalar> TruncatedSeries<T> {
    pub fn zero(caps: Caps) -> Self {
        TruncatedSeries {
            caps,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(caps: Caps) -> Self {
        Self::constant(T::one(), caps)
    }

    pub fn constant(c: T, caps: Caps) -> Self {
        Self::monomial(Monomial::ONE, c, caps)
    }

    pub fn monomial(m: Monomial, c: T, caps: Caps) -> Self {
        Self::from_terms(caps, [(m, c)])
    }

    /// Sums repeated monomials; drops zeros and anything beyond `caps`.
    pub fn from_terms<I>(caps: Caps, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, T)>,
    {
        let mut coeffs: BTreeMap<Monomial, T> = BTreeMap::new();
        for (m, c) in terms {
            if !caps.contains(m) {
                continue;
            }
            match coeffs.remove(&m) {
                Some(prev) => {
                    let sum = prev + c;
                    if !sum.is_zero() {
                        coeffs.insert(m, sum);
                    }
                }
                None if !c.is_zero() => {
                    coeffs.insert(m, c);
                }
                None => {}
            }
        }
        TruncatedSeries { caps, coeffs }
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Same as [`is_zero`](Self::is_zero): no stored terms.
    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Stored terms in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &T)> {
        self.coeffs.iter().map(|(m, c)| (*m, c))
    }

    pub fn constant_term(&self) -> T {
        self.coeffs
            .get(&Monomial::ONE)
            .cloned()
            .unwrap_or_else(T::zero)
    }

    /// Coefficient of `x^i y^j z^k`. Asking beyond the caps is an error: the
    /// value there is unknown, not zero.
    pub fn coefficient(&self, i: u32, j: u32, k: u32) -> Result<T> {
        let m = Monomial::new(i, j, k);
        if !self.caps.contains(m) {
            return Err(Error::BeyondCaps {
                monomial: m,
                dx: self.caps.dx,
                dy: self.caps.dy,
                dz: self.caps.dz,
            });
        }
        Ok(self.coeffs.get(&m).cloned().unwrap_or_else(T::zero))
    }

    /// Drops everything beyond `caps ∧ self.caps`.
    pub fn truncate(&self, caps: Caps) -> Self {
        let caps = self.caps.min(caps);
        TruncatedSeries {
            caps,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(m, _)| caps.contains(**m))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let caps = self.caps.min(other.caps);
        Self::from_terms(
            caps,
            self.terms()
                .chain(other.terms())
                .map(|(m, c)| (m, c.clone())),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            caps: self.caps,
            coeffs: self.coeffs.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::from_terms(
            self.caps,
            self.terms().map(|(m, c)| (m, c.clone() * s.clone())),
        )
    }

    fn div_integer(&self, n: u64) -> Self {
        TruncatedSeries {
            caps: self.caps,
            coeffs: self
                .coeffs
                .iter()
                .map(|(m, c)| (*m, c.div_integer(n)))
                .collect(),
        }
    }

    /// Cauchy product; terms beyond the common caps are discarded.
    pub fn mul(&self, other: &Self) -> Self {
        let caps = self.caps.min(other.caps);
        if self.is_zero() || other.is_zero() {
            return Self::zero(caps);
        }
        let mut acc: Vec<Option<T>> = vec![None; caps.volume()];
        let rhs: Vec<(Monomial, &T)> = other.terms().collect();
        for (ma, a) in self.terms() {
            if ma.x > caps.dx {
                break;
            }
            if ma.y > caps.dy || ma.z > caps.dz {
                continue;
            }
            for &(mb, b) in &rhs {
                // rhs is sorted by x first
                if ma.x + mb.x > caps.dx {
                    break;
                }
                let m = ma * mb;
                if m.y > caps.dy || m.z > caps.dz {
                    continue;
                }
                let slot = &mut acc[caps.index(m)];
                let term = a.clone() * b.clone();
                *slot = Some(match slot.take() {
                    Some(prev) => prev + term,
                    None => term,
                });
            }
        }
        let coeffs = acc
            .into_iter()
            .enumerate()
            .filter_map(|(idx, c)| match c {
                Some(c) if !c.is_zero() => Some((caps.monomial_at(idx), c)),
                _ => None,
            })
            .collect();
        TruncatedSeries { caps, coeffs }
    }

    /// `Σ_{m≥0} f^m / m!`, summed until the powers leave the caps.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonZeroConstantTerm);
        }
        let mut sum = Self::one(self.caps);
        let mut term = Self::one(self.caps);
        for m in 1.. {
            term = term.mul(self).div_integer(m);
            if term.is_zero() {
                break;
            }
            sum = sum.add(&term);
        }
        Ok(sum)
    }

    /// `Σ_{m≥1} (-1)^{m+1} (f-1)^m / m`.
    pub fn log(&self) -> Result<Self> {
        if self.constant_term() != T::one() {
            return Err(Error::ConstantTermNotOne);
        }
        let g = self.sub(&Self::one(self.caps));
        let mut sum = Self::zero(self.caps);
        let mut power = Self::one(self.caps);
        for m in 1u64.. {
            power = power.mul(&g);
            if power.is_zero() {
                break;
            }
            let term = power.div_integer(m);
            sum = if m % 2 == 1 {
                sum.add(&term)
            } else {
                sum.sub(&term)
            };
        }
        Ok(sum)
    }

    /// Multiplies a z-free series by `z/x`: `c·x^n y^k ↦ c·x^{n-1} y^k z`.
    ///
    /// The result is exact up to `x^{dx-1}` and `z^{dz+1}`.
    pub fn shift_rank_marker(&self) -> Result<Self> {
        for m in self.coeffs.keys() {
            if m.z != 0 {
                return Err(Error::UnexpectedZ(*m));
            }
            if m.x == 0 {
                return Err(Error::ZeroXDegree(*m));
            }
        }
        let caps = Caps::new(
            self.caps.dx.saturating_sub(1),
            self.caps.dy,
            self.caps.dz + 1,
        );
        Ok(TruncatedSeries {
            caps,
            coeffs: self
                .coeffs
                .iter()
                .map(|(m, c)| (Monomial::new(m.x - 1, m.y, 1), c.clone()))
                .filter(|(m, _)| caps.contains(*m))
                .collect(),
        })
    }

    /// Debug check of the storage invariants.
    pub fn is_well_formed(&self) -> bool {
        self.coeffs
            .iter()
            .all(|(m, c)| self.caps.contains(*m) && !c.is_zero())
    }
}

impl<T: Scalar> Add for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn add(self, rhs: Self) -> TruncatedSeries<T> {
        TruncatedSeries::add(self, rhs)
    }
}

impl<T: Scalar> Sub for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn sub(self, rhs: Self) -> TruncatedSeries<T> {
        TruncatedSeries::sub(self, rhs)
    }
}

impl<T: Scalar> Mul for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn mul(self, rhs: Self) -> TruncatedSeries<T> {
        TruncatedSeries::mul(self, rhs)
    }
}

impl<T: Scalar> Neg for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn neg(self) -> TruncatedSeries<T> {
        TruncatedSeries::neg(self)
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for TruncatedSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (var, e) in [("x", m.x), ("y", m.y), ("z", m.z)] {
                match e {
                    0 => {}
                    1 => write!(f, "*{var}")?,
                    _ => write!(f, "*{var}^{e}")?,
                }
            }
        }
        Ok(())
    }
}
