use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HyperplaneKind {
    /// `x_i + x_j = 1`, `i < j`.
    Sum(usize, usize),
    /// `x_i = 0`.
    Zero(usize),
    /// `x_i = 1`.
    One(usize),
}

/// Affine hyperplane `normal · x = constant`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hyperplane {
    pub normal: Vec<i64>,
    pub constant: i64,
    pub kind: HyperplaneKind,
}

impl Hyperplane {
    pub fn new(n: usize, kind: HyperplaneKind) -> Self {
        let mut normal = vec![0; n];
        let constant = match kind {
            HyperplaneKind::Sum(i, j) => {
                assert!(i < j && j < n, "bad sum wall ({i},{j}) for n={n}");
                normal[i] = 1;
                normal[j] = 1;
                1
            }
            HyperplaneKind::Zero(i) => {
                normal[i] = 1;
                0
            }
            HyperplaneKind::One(i) => {
                normal[i] = 1;
                1
            }
        };
        Hyperplane {
            normal,
            constant,
            kind,
        }
    }

    fn augmented(&self) -> Vec<i64> {
        let mut row = self.normal.clone();
        row.push(self.constant);
        row
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            HyperplaneKind::Sum(i, j) => write!(f, "x{} + x{} = 1", i + 1, j + 1),
            HyperplaneKind::Zero(i) => write!(f, "x{} = 0", i + 1),
            HyperplaneKind::One(i) => write!(f, "x{} = 1", i + 1),
        }
    }
}

/// The `C(n,2)` sum walls (lexicographic in `(i, j)`), then the `n` zero
/// walls, then the `n` one walls.
pub fn build_arrangement(n: usize) -> Result<Vec<Hyperplane>> {
    if n == 0 {
        return Err(Error::InvalidN { n, min: 1 });
    }
    let sums = (0..n).flat_map(|i| (i + 1..n).map(move |j| HyperplaneKind::Sum(i, j)));
    let zeros = (0..n).map(HyperplaneKind::Zero);
    let ones = (0..n).map(HyperplaneKind::One);
    Ok(sums
        .chain(zeros)
        .chain(ones)
        .map(|k| Hyperplane::new(n, k))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Insert {
    Independent,
    Dependent,
    Inconsistent,
}

/// Integer row echelon form of augmented rows `[normal | constant]`, kept
/// fraction-free with gcd normalisation so elimination stays exact.
#[derive(Debug, Clone)]
pub(crate) struct Echelon {
    width: usize,
    rows: Vec<(usize, Vec<i64>)>,
}

impl Echelon {
    pub fn new(n: usize) -> Self {
        Echelon {
            width: n,
            rows: Vec::with_capacity(n),
        }
    }

    /// Rank of the coefficient part.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn insert(&mut self, row: &[i64]) -> Insert {
        debug_assert_eq!(row.len(), self.width + 1);
        let mut r = row.to_vec();
        for (pivot, b) in &self.rows {
            let rp = r[*pivot];
            if rp == 0 {
                continue;
            }
            let bp = b[*pivot];
            let g = bp.gcd(&rp);
            let (mb, mr) = (bp / g, rp / g);
            for (x, y) in r.iter_mut().zip(b) {
                *x = *x * mb - *y * mr;
            }
            let content = r.iter().fold(0i64, |acc, v| acc.gcd(v));
            if content > 1 {
                r.iter_mut().for_each(|v| *v /= content);
            }
        }
        match r[..self.width].iter().position(|&v| v != 0) {
            Some(pivot) => {
                self.rows.push((pivot, r));
                Insert::Independent
            }
            None if r[self.width] != 0 => Insert::Inconsistent,
            None => Insert::Dependent,
        }
    }

    pub fn insert_hyperplane(&mut self, h: &Hyperplane) -> Insert {
        self.insert(&h.augmented())
    }
}

/// Rank of the normals and whether the hyperplanes share a point, decided by
/// comparing coefficient and augmented rank with exact elimination.
pub fn rank_and_centrality<'a, I>(hs: I) -> (usize, bool)
where
    I: IntoIterator<Item = &'a Hyperplane>,
{
    let mut hs = hs.into_iter().peekable();
    let Some(first) = hs.peek() else {
        return (0, true);
    };
    let mut ech = Echelon::new(first.normal.len());
    let mut central = true;
    for h in hs {
        if ech.insert_hyperplane(h) == Insert::Inconsistent {
            central = false;
        }
    }
    (ech.rank(), central)
}

/// A subset of an arrangement, by bitmask over its hyperplane list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Subarrangement {
    pub mask: u64,
    pub rank: usize,
    pub central: bool,
}

impl Subarrangement {
    pub fn new(mask: u64, arrangement: &[Hyperplane]) -> Self {
        assert!(arrangement.len() <= 64);
        let (rank, central) = rank_and_centrality(
            arrangement
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, h)| h),
        );
        Subarrangement {
            mask,
            rank,
            central,
        }
    }

    pub fn cardinality(&self) -> usize {
        self.mask.count_ones() as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use HyperplaneKind::*;

    #[test]
    fn arrangement_sizes() {
        assert_eq!(build_arrangement(1).unwrap().len(), 2);
        assert_eq!(build_arrangement(2).unwrap().len(), 5);
        assert_eq!(build_arrangement(3).unwrap().len(), 9);
        assert!(build_arrangement(0).is_err());
        let a = build_arrangement(3).unwrap();
        assert_eq!(a[0].kind, Sum(0, 1));
        assert_eq!(a[3].kind, Zero(0));
        assert_eq!(a[6].kind, One(0));
        assert_eq!(a[2].normal, vec![0, 1, 1]);
        assert_eq!(a[2].to_string(), "x2 + x3 = 1");
    }

    #[test]
    fn parallel_walls() {
        let hs = [Hyperplane::new(1, Zero(0)), Hyperplane::new(1, One(0))];
        assert_eq!(rank_and_centrality(&hs), (1, false));
    }

    #[test]
    fn sum_and_zero_meet() {
        let hs = [Hyperplane::new(2, Sum(0, 1)), Hyperplane::new(2, Zero(0))];
        assert_eq!(rank_and_centrality(&hs), (2, true));
    }

    #[test]
    fn odd_cycle_with_colour() {
        let hs = [
            Hyperplane::new(3, Sum(0, 1)),
            Hyperplane::new(3, Sum(1, 2)),
            Hyperplane::new(3, Sum(0, 2)),
            Hyperplane::new(3, Zero(0)),
        ];
        assert_eq!(rank_and_centrality(&hs), (3, false));
        assert_eq!(rank_and_centrality(&hs[..3]), (3, true));
    }

    #[test]
    fn even_cycle_is_rank_deficient() {
        let hs = [
            Hyperplane::new(4, Sum(0, 1)),
            Hyperplane::new(4, Sum(1, 2)),
            Hyperplane::new(4, Sum(2, 3)),
            Hyperplane::new(4, Sum(0, 3)),
        ];
        assert_eq!(rank_and_centrality(&hs), (3, true));
    }

    #[test]
    fn empty_is_central() {
        assert_eq!(rank_and_centrality(std::iter::empty()), (0, true));
        let a = build_arrangement(2).unwrap();
        let s = Subarrangement::new(0, &a);
        assert_eq!((s.rank, s.central, s.cardinality()), (0, true, 0));
        let s = Subarrangement::new(0b01010, &a);
        assert!(!s.central);
    }
}
