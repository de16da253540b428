use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::counts::CountTable;
use crate::error::{Error, Result};

pub const MAX_CENSUS_ORDER: usize = 6;

/// Every labeled graph on `order` vertices, classified.
///
/// Keys are `[size, components, bipartite_components, isolated_free]`;
/// isolated vertices count as bipartite components and `isolated_free` is 0/1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphCensus {
    pub order: usize,
    pub table: CountTable<4>,
}

impl GraphCensus {
    pub fn total(&self) -> BigUint {
        self.table.total()
    }

    fn sum_where(&self, keep: impl Fn(usize, usize, usize, bool) -> bool) -> BigUint {
        self.table
            .iter()
            .filter(|(&[k, c, b, i], _)| keep(k, c, b, i == 1))
            .map(|(_, v)| v)
            .sum()
    }

    pub fn connected_bipartite(&self, size: usize) -> BigUint {
        self.sum_where(|k, c, b, _| k == size && c == 1 && b == 1)
    }

    pub fn connected(&self, size: usize) -> BigUint {
        self.sum_where(|k, c, _, _| k == size && c == 1)
    }

    pub fn isolated_free(&self, size: usize) -> BigUint {
        self.sum_where(|k, _, _, i| k == size && i)
    }

    /// Bipartite graphs (every component) with the given component count.
    pub fn bipartite_with_components(&self, size: usize, components: usize) -> BigUint {
        self.sum_where(|k, c, b, _| k == size && c == components && b == c)
    }

    /// Graphs in which no component is bipartite (so no isolated vertices).
    pub fn all_components_non_bipartite(&self, size: usize) -> BigUint {
        self.sum_where(|k, _, b, _| k == size && b == 0)
    }

    pub fn max_size(&self) -> usize {
        self.order * self.order.saturating_sub(1) / 2
    }
}

struct Classified {
    size: usize,
    components: usize,
    bipartite_components: usize,
    isolated_free: bool,
}

fn classify(order: usize, pairs: &[(usize, usize)], mask: u64) -> Classified {
    let mut adj = vec![Vec::new(); order];
    let mut size = 0;
    for (e, &(i, j)) in pairs.iter().enumerate() {
        if mask >> e & 1 == 1 {
            adj[i].push(j);
            adj[j].push(i);
            size += 1;
        }
    }
    let mut colour: Vec<Option<bool>> = vec![None; order];
    let mut components = 0;
    let mut bipartite_components = 0;
    let mut stack = Vec::new();
    for s in 0..order {
        if colour[s].is_some() {
            continue;
        }
        components += 1;
        let mut bipartite = true;
        colour[s] = Some(false);
        stack.push(s);
        while let Some(v) = stack.pop() {
            let cv = colour[v].expect("visited");
            for &w in &adj[v] {
                match colour[w] {
                    None => {
                        colour[w] = Some(!cv);
                        stack.push(w);
                    }
                    Some(cw) if cw == cv => bipartite = false,
                    Some(_) => {}
                }
            }
        }
        if bipartite {
            bipartite_components += 1;
        }
    }
    Classified {
        size,
        components,
        bipartite_components,
        isolated_free: adj.iter().all(|a| !a.is_empty()),
    }
}

/// Classifies all `2^{C(order,2)}` labeled graphs on `order ≤ 6` vertices.
pub fn enumerate_graphs(order: usize) -> Result<GraphCensus> {
    if order > MAX_CENSUS_ORDER {
        return Err(Error::GuardExceeded {
            n: order,
            max: MAX_CENSUS_ORDER,
            what: "graph enumeration",
            hint: "use the generating-function counts",
        });
    }
    let pairs: Vec<(usize, usize)> = (0..order)
        .flat_map(|i| (i + 1..order).map(move |j| (i, j)))
        .collect();
    let total = 1u64 << pairs.len();
    let table = (0..total)
        .into_par_iter()
        .fold(CountTable::new, |mut t, mask| {
            let c = classify(order, &pairs, mask);
            t.add(
                [
                    c.size,
                    c.components,
                    c.bipartite_components,
                    c.isolated_free as usize,
                ],
                &BigUint::from(1u32),
            );
            t
        })
        .reduce(CountTable::new, |mut a, b| {
            for (k, v) in b.iter() {
                a.add(*k, v);
            }
            a
        });
    Ok(GraphCensus { order, table })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn totals() {
        for n in 0..=5 {
            let c = enumerate_graphs(n).unwrap();
            assert_eq!(c.total(), u(1 << (n * n.saturating_sub(1) / 2)));
        }
        assert_eq!(enumerate_graphs(2).unwrap().total(), u(2));
    }

    #[test]
    fn small_classes() {
        let c3 = enumerate_graphs(3).unwrap();
        assert_eq!(c3.connected_bipartite(2), u(3));
        assert_eq!(c3.connected(3), u(1));
        assert_eq!(c3.all_components_non_bipartite(3), u(1));
        let c4 = enumerate_graphs(4).unwrap();
        assert_eq!(c4.connected_bipartite(3), u(16));
        assert_eq!(c4.connected_bipartite(4), u(3));
        assert_eq!(c4.bipartite_with_components(2, 2), u(15));
        assert_eq!(c4.isolated_free(2), u(3));
        let c5 = enumerate_graphs(5).unwrap();
        assert_eq!(c5.isolated_free(4) - c5.connected_bipartite(4), u(10));
        assert_eq!(c5.all_components_non_bipartite(4), u(0));
    }

    #[test]
    fn guard() {
        assert!(enumerate_graphs(7).is_err());
    }
}
