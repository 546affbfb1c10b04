use std::fmt;

use crate::combinatorics::SetPartition;
use crate::error::{Error, Result};

/// A vertex-weighted multigraph on `{0, .., n-1}`.
///
/// Edges are kept as a sorted multiset of pairs `(u, v)` with `u <= v`; a
/// pair with `u == v` is a loop. Two values are equal exactly when they are
/// the same labelled graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    weights: Vec<u32>,
}

fn norm(e: (usize, usize)) -> (usize, usize) {
    if e.0 <= e.1 {
        e
    } else {
        (e.1, e.0)
    }
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>, weights: Vec<u32>) -> Result<Self> {
        if weights.len() != n {
            return Err(Error::WeightCount {
                expected: n,
                got: weights.len(),
            });
        }
        if weights.contains(&0) {
            return Err(Error::NonPositiveWeight);
        }
        for &(u, v) in &edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x + 1, n });
                }
            }
        }
        Ok(Self::from_parts(n, edges, weights))
    }

    /// Unit vertex weights.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, edges.to_vec(), vec![1; n])
    }

    /// Trusted constructor: normalizes and sorts the edge list.
    pub(crate) fn from_parts(n: usize, mut edges: Vec<(usize, usize)>, weights: Vec<u32>) -> Self {
        for e in edges.iter_mut() {
            *e = norm(*e);
        }
        edges.sort_unstable();
        Multigraph { n, edges, weights }
    }

    pub fn edgeless(n: usize) -> Self {
        Multigraph {
            n,
            edges: Vec::new(),
            weights: vec![1; n],
        }
    }

    pub fn with_weights(&self, weights: Vec<u32>) -> Result<Self> {
        Self::new(self.n, self.edges.clone(), weights)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// w(G), the total vertex weight.
    pub fn total_weight(&self) -> usize {
        self.weights.iter().map(|&w| w as usize).sum()
    }

    pub fn has_unit_weights(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    pub fn is_simple(&self) -> bool {
        !self.has_loop() && self.edges.windows(2).all(|w| w[0] != w[1])
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let e = norm((u, v));
        self.edges.iter().filter(|&&f| f == e).count()
    }

    /// Degree with multiplicity; a loop contributes 2.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }

    pub fn loops_at(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v && b == v).count()
    }

    /// Adjacency lists ignoring loops, with repetition for multi-edges.
    pub fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        adj
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: v + 1,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Adds edges (multiset union with the given list).
    pub fn add_edges(&self, extra: &[(usize, usize)]) -> Result<Self> {
        for &(u, v) in extra {
            self.check_vertex(u)?;
            self.check_vertex(v)?;
        }
        let mut edges = self.edges.clone();
        edges.extend_from_slice(extra);
        Ok(Self::from_parts(self.n, edges, self.weights.clone()))
    }

    /// G \ S, removing one copy per listed edge.
    pub fn delete_edges(&self, s: &[(usize, usize)]) -> Result<Self> {
        let mut edges = self.edges.clone();
        for &e in s {
            let e = norm(e);
            match edges.iter().position(|&f| f == e) {
                Some(i) => {
                    edges.remove(i);
                }
                None => return Err(Error::EdgeNotFound(e.0 + 1, e.1 + 1)),
            }
        }
        Ok(Multigraph {
            n: self.n,
            edges,
            weights: self.weights.clone(),
        })
    }

    /// Removes the edges at the given positions of [`Multigraph::edges`].
    pub fn delete_edge_indices(&self, idx: &[usize]) -> Result<Self> {
        let mut keep = vec![true; self.edges.len()];
        for &i in idx {
            if i >= self.edges.len() || !keep[i] {
                return Err(Error::EdgeIndexOutOfRange {
                    index: i,
                    edges: self.edges.len(),
                });
            }
            keep[i] = false;
        }
        let edges = self
            .edges
            .iter()
            .zip(&keep)
            .filter(|(_, &k)| k)
            .map(|(&e, _)| e)
            .collect();
        Ok(Multigraph {
            n: self.n,
            edges,
            weights: self.weights.clone(),
        })
    }

    /// Keeps only the edges at the given positions (the spanning subgraph ([n], S)).
    pub fn spanning_subgraph(&self, idx: &[usize]) -> Self {
        Self::from_parts(
            self.n,
            idx.iter().map(|&i| self.edges[i]).collect(),
            self.weights.clone(),
        )
    }

    /// Identifies vertices according to `label` (block ids `0..m`, numbered
    /// by minimum vertex). Edges in `drop` are removed first; every other
    /// edge inside a block becomes a loop at the block vertex.
    fn quotient(&self, label: &[usize], m: usize, drop: &[bool]) -> Self {
        let mut weights = vec![0u32; m];
        for (v, &b) in label.iter().enumerate() {
            weights[b] += self.weights[v];
        }
        let edges = self
            .edges
            .iter()
            .zip(drop)
            .filter(|(_, &d)| !d)
            .map(|(&(u, v), _)| (label[u], label[v]))
            .collect();
        Self::from_parts(m, edges, weights)
    }

    /// G / e. Contracting a loop deletes it. Otherwise the endpoints merge
    /// into a vertex at position min(u, v) carrying the summed weight, other
    /// copies of `e` become loops, and later vertices shift down by one.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Self> {
        let e = norm((u, v));
        let Some(pos) = self.edges.iter().position(|&f| f == e) else {
            return Err(Error::EdgeNotFound(e.0 + 1, e.1 + 1));
        };
        if e.0 == e.1 {
            return self.delete_edges(&[e]);
        }
        let label: Vec<usize> = (0..self.n)
            .map(|x| match x.cmp(&e.1) {
                std::cmp::Ordering::Less => x,
                std::cmp::Ordering::Equal => e.0,
                std::cmp::Ordering::Greater => x - 1,
            })
            .collect();
        let mut drop = vec![false; self.edges.len()];
        drop[pos] = true;
        Ok(self.quotient(&label, self.n - 1, &drop))
    }

    /// G / S for the edges at positions `idx`: the quotient by the connected
    /// components of S, with S removed and other merged edges kept as loops.
    pub fn contract_edge_indices(&self, idx: &[usize]) -> Result<Self> {
        let mut drop = vec![false; self.edges.len()];
        for &i in idx {
            if i >= self.edges.len() || drop[i] {
                return Err(Error::EdgeIndexOutOfRange {
                    index: i,
                    edges: self.edges.len(),
                });
            }
            drop[i] = true;
        }
        let mut uf = UnionFind::new(self.n);
        for &i in idx {
            let (u, v) = self.edges[i];
            uf.union(u, v);
        }
        let (label, m) = uf.labels();
        Ok(self.quotient(&label, m, &drop))
    }

    /// G / S for an edge multiset S ⊆ E(G).
    pub fn contract_edge_set(&self, s: &[(usize, usize)]) -> Result<Self> {
        let mut used = vec![false; self.edges.len()];
        let mut idx = Vec::with_capacity(s.len());
        for &e in s {
            let e = norm(e);
            match (0..self.edges.len()).find(|&i| !used[i] && self.edges[i] == e) {
                Some(i) => {
                    used[i] = true;
                    idx.push(i);
                }
                None => return Err(Error::EdgeNotFound(e.0 + 1, e.1 + 1)),
            }
        }
        self.contract_edge_indices(&idx)
    }

    /// G / π: every block must induce a connected subgraph. All edges inside
    /// blocks are contracted away, edges between blocks are kept.
    pub fn contract_partition(&self, pi: &SetPartition) -> Result<Self> {
        self.check_partition(pi)?;
        if !self.is_connected_partition(pi) {
            let block = self
                .disconnected_block(pi)
                .map(|b| b.iter().map(|v| v + 1).collect())
                .unwrap_or_default();
            return Err(Error::BlockNotConnected { block });
        }
        let label: Vec<usize> = (0..self.n).map(|v| pi.block_of(v)).collect();
        let drop: Vec<bool> = self
            .edges
            .iter()
            .map(|&(u, v)| label[u] == label[v])
            .collect();
        Ok(self.quotient(&label, pi.num_blocks(), &drop))
    }

    pub(crate) fn check_partition(&self, pi: &SetPartition) -> Result<()> {
        if pi.n() != self.n {
            return Err(Error::GroundSetMismatch {
                expected: self.n,
                got: pi.n(),
            });
        }
        Ok(())
    }

    /// e_G(π): edges with both endpoints in one block, with multiplicity.
    pub fn internal_edge_count(&self, pi: &SetPartition) -> usize {
        self.internal_edges_rgs(pi.rgs())
    }

    #[inline]
    pub(crate) fn internal_edges_rgs(&self, rgs: &[u8]) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| rgs[u] == rgs[v])
            .count()
    }

    /// Complement of a simple graph.
    pub fn complement(&self) -> Result<Self> {
        if !self.is_simple() {
            return Err(Error::NotSimple);
        }
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.edges.binary_search(&(u, v)).is_err() {
                    edges.push((u, v));
                }
            }
        }
        Ok(Multigraph {
            n: self.n,
            edges,
            weights: self.weights.clone(),
        })
    }

    /// Relabels vertex `v` as `perm[v]`; weights travel with their vertices.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.n)?;
        let mut weights = vec![0; self.n];
        for (v, &p) in perm.iter().enumerate() {
            weights[p] = self.weights[v];
        }
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Ok(Self::from_parts(self.n, edges, weights))
    }

    /// Multiset union of edges of two graphs on the same vertex set; weights
    /// are taken from `self`.
    pub fn edge_union(&self, other: &Multigraph) -> Result<Self> {
        if other.n != self.n {
            return Err(Error::VertexCountMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        Ok(Self::from_parts(self.n, edges, self.weights.clone()))
    }

    /// The same edges viewed on `[m]` with `m >= n`; new vertices get weight 1.
    pub fn pad(&self, m: usize) -> Result<Self> {
        if m < self.n {
            return Err(Error::HostTooSmall { host: m, n: self.n });
        }
        let mut weights = self.weights.clone();
        weights.resize(m, 1);
        Ok(Multigraph {
            n: m,
            edges: self.edges.clone(),
            weights,
        })
    }

    /// Disjoint union, `other` placed on vertices `n..n+other.n`.
    pub fn disjoint_union(&self, other: &Multigraph) -> Self {
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + self.n, v + self.n)));
        let mut weights = self.weights.clone();
        weights.extend_from_slice(&other.weights);
        Self::from_parts(self.n + other.n, edges, weights)
    }

    /// Collapses multi-edges to single edges and drops loops.
    pub fn underlying_simple(&self) -> Self {
        let mut edges: Vec<(usize, usize)> =
            self.edges.iter().copied().filter(|&(u, v)| u != v).collect();
        edges.dedup();
        Multigraph {
            n: self.n,
            edges,
            weights: self.weights.clone(),
        }
    }

    /// Connected-component labels (block ids by minimum vertex) and count.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let mut uf = UnionFind::new(self.n);
        for &(u, v) in &self.edges {
            uf.union(u, v);
        }
        uf.labels()
    }

    pub fn is_connected(&self) -> bool {
        self.components().1 <= 1
    }

    /// True iff every block of π induces a connected subgraph.
    pub fn is_connected_partition(&self, pi: &SetPartition) -> bool {
        self.disconnected_block(pi).is_none()
    }

    fn disconnected_block(&self, pi: &SetPartition) -> Option<Vec<usize>> {
        let mut uf = UnionFind::new(self.n);
        for &(u, v) in &self.edges {
            if pi.same_block(u, v) {
                uf.union(u, v);
            }
        }
        pi.blocks()
            .into_iter()
            .find(|b| b.iter().any(|&v| uf.find(v) != uf.find(b[0])))
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::InvalidPermutation(n));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::InvalidPermutation(n));
        }
        seen[p] = true;
    }
    Ok(())
}

impl fmt::Display for Multigraph {
    /// 1-based, e.g. `[3] {1,2} {1,2} {3,3} w=(1,1,2)`; weights omitted when all 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.n)?;
        if self.edges.is_empty() {
            write!(f, " no edges")?;
        }
        for &(u, v) in &self.edges {
            write!(f, " {{{},{}}}", u + 1, v + 1)?;
        }
        if !self.has_unit_weights() {
            let w: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
            write!(f, " w=({})", w.join(","))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // keep the smaller root so labels come out ordered by minimum
        if ra < rb {
            self.parent[rb] = ra;
        } else {
            self.parent[ra] = rb;
        }
        true
    }

    /// Component ids numbered in order of minimum vertex.
    pub(crate) fn labels(&mut self) -> (Vec<usize>, usize) {
        let n = self.parent.len();
        let mut id = vec![usize::MAX; n];
        let mut label = vec![0; n];
        let mut m = 0;
        for v in 0..n {
            let r = self.find(v);
            if id[r] == usize::MAX {
                id[r] = m;
                m += 1;
            }
            label[v] = id[r];
        }
        (label, m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::p_shorthand;

    fn g(n: usize, edges: &[(usize, usize)]) -> Multigraph {
        Multigraph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn deletion() {
        let k3 = g(3, &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(k3.delete_edges(&[(1, 0)]).unwrap(), g(3, &[(0, 2), (1, 2)]));
        let double = g(2, &[(0, 1), (0, 1)]);
        assert_eq!(double.delete_edges(&[(0, 1)]).unwrap(), g(2, &[(0, 1)]));
        assert_eq!(k3.delete_edges(&[]).unwrap(), k3);
        assert!(matches!(
            double.delete_edges(&[(0, 1), (0, 1), (0, 1)]),
            Err(Error::EdgeNotFound(1, 2))
        ));
    }

    #[test]
    fn contraction() {
        let k2 = Multigraph::new(2, vec![(0, 1)], vec![1, 2]).unwrap();
        let c = k2.contract_edge(0, 1).unwrap();
        assert_eq!(c, Multigraph::new(1, vec![], vec![3]).unwrap());

        let k3 = g(3, &[(0, 1), (0, 2), (1, 2)]);
        let c = k3.contract_edge(0, 1).unwrap();
        assert_eq!(c, Multigraph::new(2, vec![(0, 1), (0, 1)], vec![2, 1]).unwrap());

        let lp = g(1, &[(0, 0)]);
        assert_eq!(lp.contract_edge(0, 0).unwrap(), g(1, &[]));

        // remaining parallel copies become loops
        let triple = g(2, &[(0, 1), (0, 1), (0, 1)]);
        let c = triple.contract_edge(0, 1).unwrap();
        assert_eq!(c, Multigraph::new(1, vec![(0, 0), (0, 0)], vec![2]).unwrap());

        // relabelling keeps relative order, merged vertex at the smaller position
        let p = g(4, &[(1, 3), (0, 2)]);
        let c = p.contract_edge(1, 3).unwrap();
        assert_eq!(c, Multigraph::new(3, vec![(0, 2)], vec![1, 2, 1]).unwrap());
    }

    #[test]
    fn contraction_of_sets() {
        let k3 = g(3, &[(0, 1), (0, 2), (1, 2)]);
        let c = k3.contract_edge_set(&[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(c, Multigraph::new(1, vec![], vec![3]).unwrap());
        // contracting two edges of a triangle leaves the third as a loop
        let c = k3.contract_edge_set(&[(0, 1), (1, 2)]).unwrap();
        assert_eq!(c, Multigraph::new(1, vec![(0, 0)], vec![3]).unwrap());
        let p3 = g(3, &[(0, 1), (1, 2)]);
        assert_eq!(
            p3.contract_edge_set(&[(0, 1), (1, 2)]).unwrap(),
            Multigraph::new(1, vec![], vec![3]).unwrap()
        );
        assert_eq!(p3.contract_edge_set(&[]).unwrap(), p3);
    }

    #[test]
    fn partition_contraction() {
        let p3 = g(3, &[(0, 1), (1, 2)]);
        let pi = p_shorthand(3, &[vec![1, 2]]).unwrap();
        assert_eq!(
            p3.contract_partition(&pi).unwrap(),
            Multigraph::new(2, vec![(0, 1)], vec![2, 1]).unwrap()
        );
        assert_eq!(
            p3.contract_partition(&SetPartition::discrete(3)).unwrap(),
            p3
        );
        let bad = p_shorthand(3, &[vec![1, 3]]).unwrap();
        assert!(matches!(
            p3.contract_partition(&bad),
            Err(Error::BlockNotConnected { .. })
        ));
    }

    #[test]
    fn complements() {
        assert_eq!(
            Multigraph::edgeless(3).complement().unwrap(),
            g(3, &[(0, 1), (0, 2), (1, 2)])
        );
        assert_eq!(g(3, &[(0, 1)]).complement().unwrap(), g(3, &[(0, 2), (1, 2)]));
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(p4.complement().unwrap(), g(4, &[(0, 2), (0, 3), (1, 3)]));
        assert_eq!(g(2, &[(0, 1), (0, 1)]).complement(), Err(Error::NotSimple));
    }

    #[test]
    fn internal_edges() {
        let k3 = g(3, &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(k3.internal_edge_count(&SetPartition::single_block(3)), 3);
        let p12 = p_shorthand(3, &[vec![1, 2]]).unwrap();
        assert_eq!(k3.internal_edge_count(&p12), 1);
        let double = g(2, &[(0, 1), (0, 1)]);
        assert_eq!(double.internal_edge_count(&SetPartition::single_block(2)), 2);
        let lp = g(2, &[(1, 1)]);
        assert_eq!(lp.internal_edge_count(&SetPartition::discrete(2)), 1);
    }

    #[test]
    fn validation() {
        assert!(matches!(
            Multigraph::from_edges(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 2 })
        ));
        assert_eq!(
            Multigraph::new(2, vec![], vec![1, 0]),
            Err(Error::NonPositiveWeight)
        );
        assert_eq!(
            g(3, &[(0, 1), (1, 1)]).to_string(),
            "[3] {1,2} {2,2}"
        );
    }
}
