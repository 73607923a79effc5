//! Shared inputs for the benchmarks.

use orbitflops_core::{DynkinType, MarkedDiagram, Partition};

/// Every single-marked diagram up to `max_rank`.
pub fn single_marked(max_rank: usize) -> Vec<MarkedDiagram> {
    DynkinType::enumerate(max_rank)
        .into_iter()
        .flat_map(|ty| {
            ty.vertices()
                .map(move |v| MarkedDiagram::new(ty, [v]).unwrap())
        })
        .collect()
}

/// All partitions of `n`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=n.min(max)).rev() {
            for mut rest in go(n - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    go(n, n)
        .into_iter()
        .map(|parts| Partition::new(parts).unwrap())
        .collect()
}
