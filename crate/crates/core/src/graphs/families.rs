//! Standard labelled graphs. All use unit weights and 0-based vertices.

use super::Multigraph;
use crate::combinatorics::IntPartition;
use crate::error::{Error, Result};

/// K_n
pub fn complete(n: usize) -> Multigraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Multigraph::from_parts(n, edges, vec![1; n])
}

/// P_n with edges i(i+1).
pub fn path(n: usize) -> Multigraph {
    let edges = (1..n).map(|i| (i - 1, i)).collect();
    Multigraph::from_parts(n, edges, vec![1; n])
}

/// C_n: a loop for n = 1, a double edge for n = 2.
pub fn cycle(n: usize) -> Multigraph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    if n >= 1 {
        edges.push((0, n - 1));
    }
    Multigraph::from_parts(n, edges, vec![1; n])
}

/// S_k, every other vertex joined to the last one.
pub fn star(k: usize) -> Multigraph {
    let edges = (0..k.saturating_sub(1)).map(|j| (j, k - 1)).collect();
    Multigraph::from_parts(k, edges, vec![1; k])
}

/// B_{n,k}: the path on the first n vertices, its end joined to the centre
/// n+k of a star on the last k vertices.
pub fn broom(n: usize, k: usize) -> Multigraph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    if n > 0 && k > 0 {
        edges.push((n - 1, n + k - 1));
    }
    for j in n..(n + k).saturating_sub(1) {
        edges.push((j, n + k - 1));
    }
    Multigraph::from_parts(n + k, edges, vec![1; n + k])
}

/// R_λ: stars on consecutive blocks of sizes λ_1, λ_2, .., each rooted at
/// its largest vertex.
pub fn canonical_star_forest(lambda: &IntPartition, n: usize) -> Result<Multigraph> {
    if lambda.size() != n {
        return Err(Error::PartitionSizeMismatch {
            size: lambda.size(),
            n,
        });
    }
    let mut edges = Vec::new();
    let mut start = 0;
    for &p in lambda.parts() {
        let root = start + p as usize - 1;
        for v in start..root {
            edges.push((v, root));
        }
        start += p as usize;
    }
    Ok(Multigraph::from_parts(n, edges, vec![1; n]))
}

/// Two vertices joined by internally disjoint paths of the given lengths.
pub fn theta(lengths: &[usize]) -> Multigraph {
    let mut n = 2;
    let mut edges = Vec::new();
    for &len in lengths {
        let mut prev = 0;
        for _ in 1..len {
            edges.push((prev, n));
            prev = n;
            n += 1;
        }
        edges.push((prev, 1));
    }
    Multigraph::from_parts(n, edges, vec![1; n])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges(g: &Multigraph) -> Vec<(usize, usize)> {
        g.edges().to_vec()
    }

    #[test]
    fn brooms() {
        assert_eq!(broom(0, 4), star(4));
        assert_eq!(broom(3, 0), path(3));
        assert_eq!(broom(0, 0).n(), 0);
        // B_{2,2}: 1-2, 2-4, 3-4
        assert_eq!(edges(&broom(2, 2)), vec![(0, 1), (1, 3), (2, 3)]);
    }

    #[test]
    fn star_forests() {
        let r = canonical_star_forest(&IntPartition::new(vec![3]), 3).unwrap();
        assert_eq!(edges(&r), vec![(0, 2), (1, 2)]);
        let r = canonical_star_forest(&IntPartition::new(vec![1, 1]), 2).unwrap();
        assert!(r.edges().is_empty());
        let r = canonical_star_forest(&IntPartition::new(vec![2, 2]), 4).unwrap();
        assert_eq!(edges(&r), vec![(0, 1), (2, 3)]);
        assert!(canonical_star_forest(&IntPartition::new(vec![2]), 3).is_err());
    }

    #[test]
    fn basic_families() {
        assert_eq!(edges(&complete(3)), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(edges(&path(4)), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(edges(&cycle(2)), vec![(0, 1), (0, 1)]);
        assert_eq!(edges(&cycle(1)), vec![(0, 0)]);
        let th = theta(&[1, 2, 2]);
        assert_eq!(th.n(), 4);
        assert_eq!(th.num_edges(), 5);
    }
}
