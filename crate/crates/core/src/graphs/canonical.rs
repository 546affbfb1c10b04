//! Weight-aware canonical labelling for small multigraphs.
//!
//! Vertices are first split into colour classes by iterated refinement of
//! (weight, loop count, neighbour colours). Positions are filled class by
//! class; within a class every ordering is tried, pruning any branch whose
//! adjacency rows already compare greater than the best code so far.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use super::Multigraph;
use crate::error::Result;
use crate::limits::{check, Limits};

/// Byte string identifying an isomorphism class of vertex-weighted multigraphs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

/// Colour refinement; returns colours numbered so that the numbering itself
/// is an isomorphism invariant.
fn refine(g: &Multigraph, mult: &[Vec<u32>]) -> Vec<usize> {
    let n = g.n();
    let mut sigs: Vec<Vec<u64>> = (0..n)
        .map(|v| vec![g.weights()[v] as u64, g.loops_at(v) as u64])
        .collect();
    let mut colours = number(&sigs);
    let mut classes = colours.iter().max().map_or(0, |&m| m + 1);
    loop {
        sigs = (0..n)
            .map(|v| {
                let mut nb: Vec<(usize, u32)> = (0..n)
                    .filter(|&u| u != v && mult[v][u] > 0)
                    .map(|u| (colours[u], mult[v][u]))
                    .collect();
                nb.sort_unstable();
                let mut s = vec![colours[v] as u64];
                for (c, m) in nb {
                    s.push(c as u64);
                    s.push(m as u64);
                }
                s
            })
            .collect();
        let next = number(&sigs);
        let next_classes = next.iter().max().map_or(0, |&m| m + 1);
        colours = next;
        if next_classes == classes {
            return colours;
        }
        classes = next_classes;
    }
}

fn number(sigs: &[Vec<u64>]) -> Vec<usize> {
    let ids: BTreeMap<&Vec<u64>, usize> = {
        let mut keys: Vec<&Vec<u64>> = sigs.iter().collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().enumerate().map(|(i, k)| (k, i)).collect()
    };
    sigs.iter().map(|s| ids[s]).collect()
}

struct Search<'a> {
    mult: &'a [Vec<u32>],
    /// colour required at each position
    slots: Vec<usize>,
    colours: Vec<usize>,
    order: Vec<usize>,
    used: Vec<bool>,
    best: Option<Vec<u32>>,
    code: Vec<u32>,
}

impl Search<'_> {
    /// Row for position i: multiplicities to positions 0..i.
    fn row(&self, i: usize, v: usize) -> impl Iterator<Item = u32> + '_ {
        self.order[..i].iter().map(move |&u| self.mult[v][u])
    }

    fn go(&mut self, i: usize, tight: bool) {
        let n = self.slots.len();
        if i == n {
            if !tight || self.best.is_none() {
                self.best = Some(self.code.clone());
            }
            return;
        }
        let start = self.code.len();
        for v in 0..n {
            if self.used[v] || self.colours[v] != self.slots[i] {
                continue;
            }
            self.code.extend(self.row(i, v).collect::<Vec<_>>());
            let mut next_tight = tight;
            if tight {
                if let Some(best) = &self.best {
                    match self.code[start..].cmp(&best[start..self.code.len()]) {
                        Ordering::Greater => {
                            self.code.truncate(start);
                            continue;
                        }
                        Ordering::Less => next_tight = false,
                        Ordering::Equal => {}
                    }
                }
            }
            self.used[v] = true;
            self.order.push(v);
            self.go(i + 1, next_tight);
            self.order.pop();
            self.used[v] = false;
            self.code.truncate(start);
        }
    }
}

impl Multigraph {
    /// Canonical form; equal for two graphs iff they are isomorphic by a
    /// weight-preserving bijection.
    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        check(
            "vertices for canonical form",
            self.n(),
            Limits::current().max_canonical_vertices,
        )?;
        Ok(self.canonical_form_unchecked())
    }

    pub(crate) fn canonical_form_unchecked(&self) -> CanonicalForm {
        let (form, _) = self.canonical_labelling();
        form
    }

    /// The canonical form together with the order of vertices realizing it
    /// (`order[i]` is the vertex placed at position `i`).
    pub(crate) fn canonical_labelling(&self) -> (CanonicalForm, Vec<usize>) {
        let n = self.n();
        let mut mult = vec![vec![0u32; n]; n];
        for &(u, v) in self.edges() {
            if u != v {
                mult[u][v] += 1;
                mult[v][u] += 1;
            }
        }
        let colours = refine(self, &mult);
        let mut slots = colours.clone();
        slots.sort_unstable();
        let mut search = Search {
            mult: &mult,
            slots,
            colours,
            order: Vec::with_capacity(n),
            used: vec![false; n],
            best: None,
            code: Vec::new(),
        };
        search.go(0, true);
        let best = search.best.unwrap_or_default();
        // Recover one optimal order by replaying with the best code fixed.
        let order = replay(&mult, &search.slots, &search.colours, &best);

        let mut bytes = Vec::with_capacity(4 + 3 * n + best.len() * 2);
        bytes.extend_from_slice(&(n as u32).to_le_bytes());
        for &v in &order {
            bytes.extend_from_slice(&self.weights()[v].to_le_bytes());
            bytes.extend_from_slice(&(self.loops_at(v) as u32).to_le_bytes());
        }
        for m in best {
            bytes.extend_from_slice(&m.to_le_bytes());
        }
        (CanonicalForm(bytes), order)
    }

    /// A representative of the isomorphism class: the graph relabelled by
    /// the canonical order.
    pub fn canonical_relabel(&self) -> Multigraph {
        let (_, order) = self.canonical_labelling();
        let mut perm = vec![0; self.n()];
        for (pos, &v) in order.iter().enumerate() {
            perm[v] = pos;
        }
        self.relabel(&perm).expect("canonical order is a permutation")
    }

    pub fn is_isomorphic(&self, other: &Multigraph) -> bool {
        self.n() == other.n()
            && self.num_edges() == other.num_edges()
            && self.canonical_form_unchecked() == other.canonical_form_unchecked()
    }
}

fn replay(mult: &[Vec<u32>], slots: &[usize], colours: &[usize], best: &[u32]) -> Vec<usize> {
    fn rec(
        i: usize,
        pos: usize,
        mult: &[Vec<u32>],
        slots: &[usize],
        colours: &[usize],
        best: &[u32],
        order: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let n = slots.len();
        if i == n {
            return true;
        }
        for v in 0..n {
            if used[v] || colours[v] != slots[i] {
                continue;
            }
            if order
                .iter()
                .enumerate()
                .any(|(j, &u)| mult[v][u] != best[pos + j])
            {
                continue;
            }
            used[v] = true;
            order.push(v);
            if rec(i + 1, pos + i, mult, slots, colours, best, order, used) {
                return true;
            }
            order.pop();
            used[v] = false;
        }
        false
    }
    let mut order = Vec::new();
    let mut used = vec![false; slots.len()];
    let found = rec(0, 0, mult, slots, colours, best, &mut order, &mut used);
    debug_assert!(found);
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::families::{complete, path};

    #[test]
    fn relabelled_paths_agree() {
        let a = Multigraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Multigraph::from_edges(3, &[(0, 2), (1, 2)]).unwrap();
        assert_eq!(a.canonical_form(), b.canonical_form());
        assert_ne!(complete(3).canonical_form(), path(3).canonical_form());
    }

    #[test]
    fn weights_travel_with_vertices() {
        let a = Multigraph::new(2, vec![(0, 1)], vec![1, 2]).unwrap();
        let b = Multigraph::new(2, vec![(0, 1)], vec![2, 1]).unwrap();
        assert_eq!(a.canonical_form(), b.canonical_form());
        let c = Multigraph::new(3, vec![(0, 1)], vec![2, 1, 1]).unwrap();
        let d = Multigraph::new(3, vec![(0, 1)], vec![1, 1, 2]).unwrap();
        assert_ne!(c.canonical_form(), d.canonical_form());
    }

    #[test]
    fn loops_and_multiplicity_matter() {
        let a = Multigraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        let b = Multigraph::from_edges(2, &[(0, 1), (0, 0)]).unwrap();
        let c = Multigraph::from_edges(2, &[(0, 1), (1, 1)]).unwrap();
        assert_ne!(a.canonical_form(), b.canonical_form());
        assert_eq!(b.canonical_form(), c.canonical_form());
    }

    #[test]
    fn canonical_representative_is_isomorphic() {
        let g = Multigraph::new(4, vec![(0, 3), (3, 3), (1, 2), (1, 2)], vec![1, 3, 1, 2]).unwrap();
        let r = g.canonical_relabel();
        assert_eq!(r.canonical_form(), g.canonical_form());
        let perm = [2, 0, 3, 1];
        assert_eq!(g.relabel(&perm).unwrap().canonical_relabel(), r);
    }
}
