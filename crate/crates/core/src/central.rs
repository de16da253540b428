//! Generating function `Γ = Γ⁰ Γ¹ Γ² Γ³` for central coloured graphs.
//!
//! A central coloured graph splits uniquely into
//! * type 0: uncoloured bipartite components (the only ones short of full rank),
//! * type 1: uncoloured non-bipartite components,
//! * type 2: isolated coloured vertices,
//! * type 3: components of two or more vertices that contain a colour.
//!
//! `Γ⁰` uses `x` for rank and `z` for its component count, so its terms carry
//! `1/(r+ν)!`; the others have rank equal to order and carry `1/r!`.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::counts::{self, choose, factorial, to_count, CountTable};
use crate::error::Result;
use crate::series::{Caps, Monomial};
use crate::{Rational, Series};

/// Which type-1 factor to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Isolated-vertex-free graphs minus connected bipartite graphs, as the
    /// formula is usually printed. Counts graphs mixing bipartite and
    /// non-bipartite components twice in the product.
    Paper,
    /// Graphs all of whose components are non-bipartite.
    Corrected,
}

impl Mode {
    pub const ALL: [Mode; 2] = [Mode::Corrected, Mode::Paper];

    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::Paper => "paper",
            Mode::Corrected => "corrected",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "paper" => Ok(Mode::Paper),
            "corrected" => Ok(Mode::Corrected),
            other => Err(format!(
                "unknown mode {other:?} (expected paper or corrected)"
            )),
        }
    }
}

/// Caps sufficient for every coefficient χ_{J_n} needs.
///
/// Bipartite parts of rank `r` with `ν` components have `r + ν ≤ n` vertices
/// and at least two per component, hence `ν ≤ n/2`.
pub fn gamma_caps(n: usize) -> Caps {
    let base = counts::default_caps(n);
    Caps::new(base.dx, base.dy, (n / 2) as u32)
}

fn x_series(caps: Caps) -> Series {
    Series::monomial(Monomial::new(1, 0, 0), Rational::one(), caps)
}

/// `exp[(½ log B − x) · z/x]`.
pub fn gamma0(caps: Caps) -> Result<Series> {
    // one extra order: a component of order m lands at rank m - 1
    let inner = Caps::new(caps.dx + 1, caps.dy, caps.dz.saturating_sub(1));
    let f = &counts::connected_bipartite_series(inner)? - &x_series(inner);
    f.shift_rank_marker()?.exp().map(|g| g.truncate(caps))
}

/// Type-1 factor. See [`Mode`].
pub fn gamma1(caps: Caps, mode: Mode) -> Result<Series> {
    let caps = Caps::new(caps.dx, caps.dy, 0).min(caps);
    let bipartite = counts::connected_bipartite_series(caps)?;
    match mode {
        Mode::Paper => {
            let no_isolated = counts::graphs_no_isolated_series(caps)?;
            // order ≥ 2 and size ≥ 1 drops only the lone vertex
            let proper = Series::from_terms(
                caps,
                bipartite
                    .terms()
                    .filter(|(m, _)| m.x >= 2 && m.y >= 1)
                    .map(|(m, c)| (m, c.clone())),
            );
            Ok(&no_isolated - &proper)
        }
        Mode::Corrected => {
            let connected = counts::connected_graph_series(caps)?;
            (&connected - &bipartite).exp()
        }
    }
}

/// `Σ_r 2^r x^r y^r / r!`.
pub fn gamma2(caps: Caps) -> Series {
    Series::from_terms(
        caps,
        (0..=caps.dx.min(caps.dy) as usize).map(|r| {
            (
                Monomial::new(r as u32, r as u32, 0),
                Rational::new(BigInt::from(2u32).pow(r as u32), factorial(r)),
            )
        }),
    )
}

/// Connected type-3 counts `γ̄³_{r,c} = Σ_{t=1}^{min(r, c−r+1)} 2 · b̄_{r,c−t} · C(r,t)`
/// for `r ≥ 2`: a connected bipartite graph on `r` vertices with `t ≥ 1` of
/// them coloured consistently with the bipartition.
pub fn gamma3_connected_counts(caps: Caps) -> Result<CountTable<2>> {
    let bipartite = counts::connected_bipartite_counts(Caps::new(caps.dx, caps.dy, 0))?;
    let mut table = CountTable::new();
    for r in 2..=caps.dx as usize {
        for c in r..=caps.dy as usize {
            let upper = r.min(c + 1 - r);
            let count: BigUint = (1..=upper)
                .map(|t| {
                    BigUint::from(2u32)
                        * bipartite.get([r, c - t])
                        * choose(r, t).to_biguint().expect("binomial is non-negative")
                })
                .sum();
            table.insert([r, c], count);
        }
    }
    Ok(table)
}

/// `Γ̄³ = Σ γ̄³_{r,c} x^r y^c / r!`.
pub fn gamma3_connected(caps: Caps) -> Result<Series> {
    let caps = Caps::new(caps.dx, caps.dy, 0).min(caps);
    let table = gamma3_connected_counts(caps)?;
    Ok(Series::from_terms(
        caps,
        table.iter().map(|(&[r, c], v)| {
            (
                Monomial::new(r as u32, c as u32, 0),
                Rational::new(BigInt::from(v.clone()), factorial(r)),
            )
        }),
    ))
}

pub fn gamma3(caps: Caps) -> Result<Series> {
    gamma3_connected(caps)?.exp()
}

/// `Γ⁰ · Γ¹ · Γ² · Γ³`, factors built concurrently.
pub fn gamma_product(caps: Caps, mode: Mode) -> Result<Series> {
    let ((g0, g1), (g2, g3)) = rayon::join(
        || rayon::join(|| gamma0(caps), || gamma1(caps, mode)),
        || rayon::join(|| gamma2(caps), || gamma3(caps)),
    );
    // widen the z-free factors back so the product keeps Γ⁰'s z-cap
    let (g1, g3) = (widen_z(g1?, caps.dz), widen_z(g3?, caps.dz));
    let g0 = g0?;
    let g2 = widen_z(g2, caps.dz);
    Ok(g0.mul(&g1).mul(&g2).mul(&g3))
}

/// A series built with no `z` at all is exactly known at every z-degree.
fn widen_z(s: Series, dz: u32) -> Series {
    let caps = s.caps();
    Series::from_terms(
        Caps::new(caps.dx, caps.dy, dz),
        s.terms().map(|(m, c)| (m, c.clone())),
    )
}

/// `Γ_{r,c,ν} = (r+ν)! · [x^r y^c z^ν] Γ`: central coloured graphs on
/// `r + ν` labeled vertices of rank `r`, cardinality `c` with `ν` bipartite
/// components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaCoefficients {
    caps: Caps,
    table: CountTable<3>,
}

impl GammaCoefficients {
    pub fn caps(&self) -> Caps {
        self.caps
    }

    pub fn get(&self, r: usize, c: usize, nu: usize) -> BigUint {
        self.table.get([r, c, nu])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[usize; 3], &BigUint)> {
        self.table.iter()
    }

    /// `γ_{r,c} = Σ_{ν: r+ν≤n} C(n, r+ν) Γ_{r,c,ν}`: central subarrangements
    /// of J_n with rank `r` and cardinality `c`.
    pub fn central_counts(&self, n: usize) -> CountTable<2> {
        let mut out = CountTable::new();
        for (&[r, c, nu], v) in self.table.iter() {
            if r + nu <= n {
                let weight = choose(n, r + nu).to_biguint().expect("non-negative");
                out.add([r, c], &(weight * v));
            }
        }
        out
    }
}

pub fn extract_counts(gamma: &Series) -> Result<GammaCoefficients> {
    let mut table = CountTable::new();
    for (m, c) in gamma.terms() {
        let (r, cc, nu) = (m.x as usize, m.y as usize, m.z as usize);
        let v = to_count(c, &factorial(r + nu), || format!("Γ_{{{r},{cc},{nu}}}"))?;
        table.insert([r, cc, nu], v);
    }
    Ok(GammaCoefficients {
        caps: gamma.caps(),
        table,
    })
}

/// Convenience: `Γ` for J_n at [`gamma_caps`], already extracted.
pub fn gamma_coefficients(n: usize, mode: Mode) -> Result<GammaCoefficients> {
    extract_counts(&gamma_product(gamma_caps(n), mode)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn u(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn gamma0_values() {
        let g = gamma0(Caps::new(3, 6, 3)).unwrap();
        assert_eq!(g.coefficient(1, 1, 1).unwrap(), q(1, 2));
        assert_eq!(g.coefficient(3, 3, 3).unwrap(), q(1, 48));
        assert_eq!(g.coefficient(2, 2, 1).unwrap(), q(1, 2));
        assert_eq!(g.coefficient(2, 2, 2).unwrap(), q(1, 8));
        assert_eq!(g.coefficient(3, 3, 2).unwrap(), q(1, 4));
        assert_eq!(g.constant_term(), q(1, 1));
        for (m, _) in g.terms() {
            assert!(m.z >= 1 || (m.x == 0 && m.y == 0), "{m}");
        }
    }

    #[test]
    fn gamma1_triangle() {
        for mode in Mode::ALL {
            let g = gamma1(Caps::new(3, 3, 0), mode).unwrap();
            assert_eq!(g.coefficient(3, 3, 0).unwrap(), q(1, 6));
            assert_eq!(
                g,
                Series::from_terms(
                    g.caps(),
                    [(Monomial::ONE, q(1, 1)), (Monomial::new(3, 3, 0), q(1, 6)),]
                )
            );
        }
    }

    #[test]
    fn gamma1_modes_diverge_at_two_edges() {
        let caps = Caps::new(5, 10, 0);
        let paper = gamma1(caps, Mode::Paper).unwrap();
        let corrected = gamma1(caps, Mode::Corrected).unwrap();
        assert_eq!(
            paper.truncate(Caps::new(3, 10, 0)),
            corrected.truncate(Caps::new(3, 10, 0))
        );
        // two disjoint edges survive in the printed form
        assert_eq!(paper.coefficient(4, 2, 0).unwrap(), q(3, 24));
        assert_eq!(corrected.coefficient(4, 2, 0).unwrap(), q(0, 1));
        // triangle plus a disjoint edge
        assert_eq!(paper.coefficient(5, 4, 0).unwrap(), q(10, 120));
        assert_eq!(corrected.coefficient(5, 4, 0).unwrap(), q(0, 1));
    }

    #[test]
    fn gamma2_values() {
        let g = gamma2(Caps::new(3, 3, 0));
        assert_eq!(g.coefficient(0, 0, 0).unwrap(), q(1, 1));
        assert_eq!(g.coefficient(1, 1, 0).unwrap(), q(2, 1));
        assert_eq!(g.coefficient(2, 2, 0).unwrap(), q(2, 1));
        assert_eq!(g.len(), 4);
    }

    #[test]
    fn gamma3_connected_values() {
        let t = gamma3_connected_counts(Caps::new(3, 6, 0)).unwrap();
        assert_eq!(t.get([2, 2]), u(4));
        assert_eq!(t.get([2, 3]), u(2));
        assert_eq!(t.get([3, 3]), u(18));
        assert_eq!(t.get([3, 4]), u(18));
        assert_eq!(t.get([3, 5]), u(6));
        assert_eq!(t.get([1, 1]), u(0));
    }

    #[test]
    fn gamma3_values() {
        let g = gamma3(Caps::new(3, 6, 0)).unwrap();
        assert_eq!(g.coefficient(0, 0, 0).unwrap(), q(1, 1));
        assert_eq!(g.coefficient(2, 2, 0).unwrap(), q(2, 1));
        assert_eq!(g.coefficient(2, 3, 0).unwrap(), q(1, 1));
        assert_eq!(g.coefficient(3, 5, 0).unwrap(), q(1, 1));
        assert_eq!(g.coefficient(3, 4, 0).unwrap(), q(3, 1));
        assert_eq!(g.coefficient(3, 3, 0).unwrap(), q(3, 1));
    }

    #[test]
    fn product_n2() {
        for mode in Mode::ALL {
            let g = gamma_product(gamma_caps(2), mode).unwrap();
            assert_eq!(g.coefficient(0, 0, 0).unwrap(), q(1, 1));
            assert_eq!(g.coefficient(1, 1, 0).unwrap(), q(2, 1));
            assert_eq!(g.coefficient(1, 1, 1).unwrap(), q(1, 2));
            assert_eq!(g.coefficient(2, 2, 0).unwrap(), q(4, 1));
            assert_eq!(g.coefficient(2, 3, 0).unwrap(), q(1, 1));
            let counts = extract_counts(&g).unwrap();
            assert_eq!(counts.get(1, 1, 0), u(2));
            assert_eq!(counts.get(1, 1, 1), u(1));
            assert_eq!(counts.get(2, 2, 0), u(8));
            assert_eq!(counts.get(0, 0, 0), u(1));
        }
    }

    #[test]
    fn product_contains_triangle() {
        let g = gamma_product(gamma_caps(3), Mode::Corrected).unwrap();
        let without_g1 = gamma0(gamma_caps(3))
            .unwrap()
            .mul(&widen_z(gamma2(gamma_caps(3)), 1))
            .mul(&widen_z(gamma3(gamma_caps(3)).unwrap(), 1));
        let diff = g.coefficient(3, 3, 0).unwrap() - without_g1.coefficient(3, 3, 0).unwrap();
        assert_eq!(diff, q(1, 6));
    }

    #[test]
    fn central_counts_n2() {
        let g = gamma_coefficients(2, Mode::Corrected).unwrap();
        let t = g.central_counts(2);
        assert_eq!(t.get([0, 0]), u(1));
        assert_eq!(t.get([1, 1]), u(5));
        assert_eq!(t.get([2, 2]), u(8));
        assert_eq!(t.get([2, 3]), u(2));
    }

    #[test]
    fn coefficients_are_counts_below_rank() {
        let g = gamma_coefficients(6, Mode::Corrected).unwrap();
        assert_eq!(g.get(0, 0, 0), u(1));
        for (&[r, c, _], _) in g.iter() {
            assert!(c >= r);
        }
    }

    #[test]
    fn mode_parse() {
        assert_eq!("paper".parse::<Mode>().unwrap(), Mode::Paper);
        assert_eq!("CORRECTED".parse::<Mode>().unwrap(), Mode::Corrected);
        assert!("other".parse::<Mode>().is_err());
    }
}
