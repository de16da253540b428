use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;

use super::arrangement::{build_arrangement, Echelon, Hyperplane, Insert};
use super::OracleConfig;
use crate::counts::CountTable;
use crate::error::{Error, Result};
use crate::IntPolynomial;

/// Counts of central subsets by `[rank][cardinality]`.
type Grid = Vec<Vec<u64>>;

fn empty_grid(n: usize, m: usize) -> Grid {
    vec![vec![0; m + 1]; n + 1]
}

// Every superset of a non-central set is non-central, so the walk only ever
// extends central subsets.
fn walk(hs: &[Hyperplane], start: usize, ech: &Echelon, card: usize, grid: &mut Grid) {
    grid[ech.rank()][card] += 1;
    for i in start..hs.len() {
        let mut next = ech.clone();
        if next.insert_hyperplane(&hs[i]) != Insert::Inconsistent {
            walk(hs, i + 1, &next, card + 1, grid);
        }
    }
}

fn check_guard(n: usize, config: &OracleConfig) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidN { n, min: 1 });
    }
    if n > config.max_subset_n {
        return Err(Error::GuardExceeded {
            n,
            max: config.max_subset_n,
            what: "subset enumeration",
            hint: "use the finite-field point count instead",
        });
    }
    Ok(())
}

fn census_grid(n: usize, config: &OracleConfig) -> Result<Grid> {
    check_guard(n, config)?;
    let hs = build_arrangement(n)?;
    let m = hs.len();
    let root = Echelon::new(n);
    let partials: Vec<Grid> = config.install(|| {
        (0..m)
            .into_par_iter()
            .map(|i| {
                let mut grid = empty_grid(n, m);
                let mut ech = root.clone();
                if ech.insert_hyperplane(&hs[i]) != Insert::Inconsistent {
                    walk(&hs, i + 1, &ech, 1, &mut grid);
                }
                grid
            })
            .collect()
    });
    let mut total = empty_grid(n, m);
    total[0][0] = 1;
    for grid in &partials {
        for (row, part) in total.iter_mut().zip(grid) {
            for (a, b) in row.iter_mut().zip(part) {
                *a += b;
            }
        }
    }
    Ok(total)
}

/// Central subarrangements of J_n by `(rank, cardinality)`, the empty set
/// included.
pub fn central_census(n: usize, config: &OracleConfig) -> Result<CountTable<2>> {
    let grid = census_grid(n, config)?;
    let mut table = CountTable::new();
    for (r, row) in grid.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            table.insert([r, c], BigUint::from(v));
        }
    }
    Ok(table)
}

/// `Σ_B (−1)^{|B|} t^{n − rank B}` over every central subset `B` of J_n.
pub fn whitney_chi(n: usize, config: &OracleConfig) -> Result<IntPolynomial> {
    let grid = census_grid(n, config)?;
    let mut coeffs = vec![BigInt::from(0); n + 1];
    for (r, row) in grid.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            let v = BigInt::from(v);
            if c % 2 == 0 {
                coeffs[n - r] += v;
            } else {
                coeffs[n - r] -= v;
            }
        }
    }
    Ok(IntPolynomial::from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::Subarrangement;

    fn p(desc: &[i64]) -> IntPolynomial {
        IntPolynomial::from_descending(desc.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn small_polynomials() {
        let cfg = OracleConfig::default();
        assert_eq!(whitney_chi(1, &cfg).unwrap(), p(&[1, -2]));
        assert_eq!(whitney_chi(2, &cfg).unwrap(), p(&[1, -5, 6]));
        assert_eq!(whitney_chi(3, &cfg).unwrap(), p(&[1, -9, 27, -27]));
    }

    #[test]
    fn census_n2() {
        let t = central_census(2, &OracleConfig::default()).unwrap();
        assert_eq!(t.get([0, 0]), BigUint::from(1u32));
        assert_eq!(t.get([1, 1]), BigUint::from(5u32));
        assert_eq!(t.get([2, 2]), BigUint::from(8u32));
        assert_eq!(t.get([2, 3]), BigUint::from(2u32));
    }

    #[test]
    fn walk_agrees_with_plain_masks() {
        // every subset checked from scratch, no pruning
        for n in 1..=3 {
            let hs = build_arrangement(n).unwrap();
            let mut expected = CountTable::new();
            for mask in 0..1u64 << hs.len() {
                let s = Subarrangement::new(mask, &hs);
                if s.central {
                    expected.add([s.rank, s.cardinality()], &BigUint::from(1u32));
                }
            }
            assert_eq!(
                central_census(n, &OracleConfig::default()).unwrap(),
                expected
            );
        }
    }

    #[test]
    fn guard() {
        let cfg = OracleConfig::default();
        assert!(matches!(
            whitney_chi(6, &cfg),
            Err(Error::GuardExceeded { .. })
        ));
        assert!(whitney_chi(0, &cfg).is_err());
    }
}
