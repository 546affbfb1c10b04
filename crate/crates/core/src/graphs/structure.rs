//! Structural predicates and enumerations: bright star forests, bridges,
//! acyclic orientations, connected partitions.

use super::Multigraph;
use crate::combinatorics::{set_partitions, SetPartition};
use crate::error::{Error, Result};

/// An acyclic orientation. `arcs[i]` orients the i-th parallel bundle of the
/// underlying simple graph; `sinks` lists vertices without outgoing arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AcyclicOrientation {
    pub arcs: Vec<(usize, usize)>,
    pub sinks: Vec<usize>,
}

impl Multigraph {
    /// Adjacency matrix of a simple graph.
    fn adjacency(&self) -> Vec<Vec<bool>> {
        let mut adj = vec![vec![false; self.n()]; self.n()];
        for &(u, v) in self.edges() {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        adj
    }

    /// The lexicographically smallest triple a < b < c whose induced edges
    /// are neither at most one edge nor exactly {ac, bc}; `None` when the
    /// graph is a bright star forest.
    pub fn dull_triple(&self) -> Result<Option<(usize, usize, usize)>> {
        if !self.is_simple() {
            return Err(Error::NotSimple);
        }
        let adj = self.adjacency();
        let n = self.n();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let (ab, ac, bc) = (adj[a][b], adj[a][c], adj[b][c]);
                    let count = usize::from(ab) + usize::from(ac) + usize::from(bc);
                    if count >= 2 && !(ac && bc && !ab) {
                        return Ok(Some((a, b, c)));
                    }
                }
            }
        }
        Ok(None)
    }

    pub fn is_bright_star_forest(&self) -> Result<bool> {
        Ok(self.dull_triple()?.is_none())
    }

    /// Connected, and still connected after removing any single edge.
    pub fn is_two_edge_connected(&self) -> bool {
        if !self.is_connected() {
            return false;
        }
        (0..self.num_edges()).all(|i| {
            self.delete_edge_indices(&[i])
                .map(|g| g.is_connected())
                .unwrap_or(false)
        })
    }

    /// Calls `f(arcs, sink_flags)` for each acyclic orientation. Parallel
    /// edges are oriented together; any loop rules out every orientation.
    pub fn for_each_acyclic_orientation(&self, mut f: impl FnMut(&[(usize, usize)], &[bool])) {
        if self.has_loop() {
            return;
        }
        let n = self.n();
        let mut bundles: Vec<(usize, usize)> = self.edges().to_vec();
        bundles.dedup();
        let m = bundles.len();
        assert!(m < 63, "too many edge bundles to enumerate orientations");
        let mut arcs = vec![(0, 0); m];
        let mut out_deg = vec![0usize; n];
        let mut sinks = vec![false; n];
        for mask in 0u64..(1u64 << m) {
            out_deg.iter_mut().for_each(|d| *d = 0);
            for (i, &(u, v)) in bundles.iter().enumerate() {
                arcs[i] = if mask >> i & 1 == 0 { (u, v) } else { (v, u) };
                out_deg[arcs[i].0] += 1;
            }
            if !is_acyclic(n, &arcs) {
                continue;
            }
            for v in 0..n {
                sinks[v] = out_deg[v] == 0;
            }
            f(&arcs, &sinks);
        }
    }

    pub fn acyclic_orientations(&self) -> Vec<AcyclicOrientation> {
        let mut out = Vec::new();
        self.for_each_acyclic_orientation(|arcs, sinks| {
            out.push(AcyclicOrientation {
                arcs: arcs.to_vec(),
                sinks: (0..sinks.len()).filter(|&v| sinks[v]).collect(),
            })
        });
        out
    }

    /// L_G: set partitions whose blocks all induce connected subgraphs.
    pub fn connected_partitions(&self) -> Vec<SetPartition> {
        set_partitions(self.n())
            .filter(|pi| self.is_connected_partition(pi))
            .collect()
    }
}

/// Kahn's algorithm on the given arc list.
fn is_acyclic(n: usize, arcs: &[(usize, usize)]) -> bool {
    let mut indeg = vec![0usize; n];
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in arcs {
        indeg[v] += 1;
        out[u].push(v);
    }
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(u) = stack.pop() {
        seen += 1;
        for &v in &out[u] {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                stack.push(v);
            }
        }
    }
    seen == n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::families::{complete, cycle, path};

    fn g(n: usize, edges: &[(usize, usize)]) -> Multigraph {
        Multigraph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn bright_star_forests() {
        assert_eq!(g(3, &[(0, 2), (1, 2)]).dull_triple(), Ok(None));
        assert_eq!(g(3, &[(0, 1), (1, 2)]).dull_triple(), Ok(Some((0, 1, 2))));
        assert_eq!(Multigraph::edgeless(4).dull_triple(), Ok(None));
        assert_eq!(cycle(2).dull_triple(), Err(Error::NotSimple));
    }

    #[test]
    fn two_edge_connectivity() {
        assert!(cycle(4).is_two_edge_connected());
        assert!(!path(3).is_two_edge_connected());
        assert!(cycle(2).is_two_edge_connected());
    }

    #[test]
    fn orientations() {
        assert_eq!(complete(3).acyclic_orientations().len(), 6);
        assert_eq!(cycle(4).acyclic_orientations().len(), 14);
        assert!(g(2, &[(0, 1), (1, 1)]).acyclic_orientations().is_empty());
        // parallel edges oriented together
        assert_eq!(cycle(2).acyclic_orientations().len(), 2);
        // isolated vertices are sinks
        let o = Multigraph::edgeless(2).acyclic_orientations();
        assert_eq!(o.len(), 1);
        assert_eq!(o[0].sinks, vec![0, 1]);
    }

    #[test]
    fn connected_partition_lists() {
        assert_eq!(path(3).connected_partitions().len(), 4);
        assert_eq!(Multigraph::edgeless(3).connected_partitions().len(), 1);
        assert_eq!(complete(3).connected_partitions().len(), 5);
    }
}
