//! Friendly complement pairs s(H₁;H₂) = H₁ + H₁ᶜ − H₂ − H₂ᶜ.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::TPoly;
use crate::error::{Error, Result};
use crate::graphs::{Multigraph, UnionFind};
use crate::limits::{check, Limits};

use super::GraphCombination;

/// All simple graphs on [n], indexed by their edge bitmask over the pairs
/// (0,1), (0,2), .., (n−2,n−1).
pub fn simple_graphs(n: usize) -> Result<Vec<Multigraph>> {
    let pairs = all_pairs(n);
    check("vertex pairs", pairs.len(), Limits::current().max_subset_edges)?;
    Ok((0u64..1 << pairs.len()).map(|mask| graph_of_mask(n, &pairs, mask)).collect())
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn graph_of_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Multigraph {
    let edges: Vec<_> = (0..pairs.len())
        .filter(|&i| mask >> i & 1 == 1)
        .map(|i| pairs[i])
        .collect();
    Multigraph::from_edges(n, &edges).expect("pairs lie in range")
}

pub fn s_pair(h1: &Multigraph, h2: &Multigraph) -> Result<GraphCombination> {
    if h1.n() != h2.n() {
        return Err(Error::VertexCountMismatch {
            expected: h1.n(),
            got: h2.n(),
        });
    }
    if !h1.is_simple() || !h2.is_simple() {
        return Err(Error::NotSimple);
    }
    GraphCombination::from_terms(
        h1.n(),
        [
            (TPoly::one(), h1.clone()),
            (TPoly::one(), h1.complement()?),
            (TPoly::from_int(-1), h2.clone()),
            (TPoly::from_int(-1), h2.complement()?),
        ],
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FriendlyPair {
    pub h1: Multigraph,
    pub h2: Multigraph,
}

fn is_trivial(h1: &Multigraph, h2: &Multigraph) -> Result<bool> {
    Ok(h1 == h2 || *h1 == h2.complement()?)
}

fn friendly(h1: &Multigraph, h2: &Multigraph) -> Result<bool> {
    Ok(s_pair(h1, h2)?.is_tutte_friendly()?.is_friendly())
}

/// The nontrivial friendly families on [4]: connected classes of the
/// relation "s(H₁;H₂) is friendly", closed under complement, each sorted
/// and listed in increasing order.
pub fn classify_n4() -> Result<Vec<Vec<Multigraph>>> {
    classify(4)
}

pub(crate) fn classify(n: usize) -> Result<Vec<Vec<Multigraph>>> {
    let graphs = simple_graphs(n)?;
    let full = (1u64 << all_pairs(n).len()) - 1;
    let mut uf = UnionFind::new(graphs.len());
    let mut nontrivial = vec![false; graphs.len()];
    for i in 0..graphs.len() {
        for j in i + 1..graphs.len() {
            if j as u64 == full ^ i as u64 {
                continue;
            }
            if friendly(&graphs[i], &graphs[j])? {
                uf.union(i, j);
                nontrivial[i] = true;
                nontrivial[j] = true;
            }
        }
        uf.union(i, (full ^ i as u64) as usize);
    }
    let (labels, classes) = uf.labels();
    let mut families = vec![BTreeSet::new(); classes];
    let mut keep = vec![false; classes];
    for (i, &c) in labels.iter().enumerate() {
        families[c].insert(graphs[i].clone());
        keep[c] |= nontrivial[i];
    }
    let mut out: Vec<Vec<Multigraph>> = families
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(f, _)| f.into_iter().collect())
        .collect();
    out.sort();
    Ok(out)
}

/// The four families with the named graphs T₁..T₆ and U₁..U₃ and their
/// complements, in the same normal form as [`classify_n4`].
pub fn n4_families_expected() -> Vec<Vec<Multigraph>> {
    let g = |edges: &[(usize, usize)]| {
        let e: Vec<_> = edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
        Multigraph::from_edges(4, &e).expect("valid edges")
    };
    let sets: [&[&[(usize, usize)]]; 4] = [
        &[&[(1, 2), (2, 3), (3, 4)], &[(1, 2), (1, 4), (3, 4)]],
        &[&[(1, 4), (1, 2), (2, 3)], &[(1, 4), (3, 4), (2, 3)]],
        &[&[(1, 2), (2, 4), (3, 4)], &[(1, 2), (1, 3), (3, 4)]],
        &[&[(1, 2), (3, 4)], &[(1, 3), (2, 4)], &[(1, 4), (2, 3)]],
    ];
    let mut out: Vec<Vec<Multigraph>> = sets
        .iter()
        .map(|set| {
            let mut family = BTreeSet::new();
            for edges in set.iter() {
                let h = g(edges);
                family.insert(h.complement().expect("simple"));
                family.insert(h);
            }
            family.into_iter().collect()
        })
        .collect();
    out.sort();
    out
}

/// Tests `samples` random nontrivial pairs of simple graphs on [n] and
/// returns those with s(H₁;H₂) friendly.
pub fn sample_nontrivial_friendly(n: usize, samples: usize, seed: u64) -> Result<Vec<FriendlyPair>> {
    let pairs = all_pairs(n);
    check("vertex pairs", pairs.len(), 63)?;
    if n < 2 {
        return Ok(Vec::new());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let full = (1u64 << pairs.len()) - 1;
    let mut found = Vec::new();
    let mut tested = 0;
    while tested < samples {
        let a = rng.gen::<u64>() & full;
        let b = rng.gen::<u64>() & full;
        if a == b || a == full ^ b {
            continue;
        }
        tested += 1;
        let (h1, h2) = (graph_of_mask(n, &pairs, a), graph_of_mask(n, &pairs, b));
        if friendly(&h1, &h2)? {
            found.push(FriendlyPair { h1, h2 });
        }
    }
    Ok(found)
}

/// Every nontrivial friendly unordered pair on [n].
pub fn exhaustive_nontrivial_friendly(n: usize) -> Result<Vec<FriendlyPair>> {
    let graphs = simple_graphs(n)?;
    let mut found = Vec::new();
    for i in 0..graphs.len() {
        for j in i + 1..graphs.len() {
            if !is_trivial(&graphs[i], &graphs[j])? && friendly(&graphs[i], &graphs[j])? {
                found.push(FriendlyPair {
                    h1: graphs[i].clone(),
                    h2: graphs[j].clone(),
                });
            }
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::complete;

    #[test]
    fn named_pairs() {
        let t1 = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let t2 = Multigraph::from_edges(4, &[(0, 1), (0, 3), (2, 3)]).unwrap();
        assert!(friendly(&t1, &t2).unwrap());
        let u1 = Multigraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let u3 = Multigraph::from_edges(4, &[(0, 3), (1, 2)]).unwrap();
        assert!(friendly(&u1, &u3).unwrap());
        // K4 and the empty graph are complements, so the pair is trivial
        assert!(s_pair(&complete(4), &Multigraph::edgeless(4)).unwrap().is_zero());
        let p3 = Multigraph::from_edges(4, &[(0, 1), (1, 2)]).unwrap();
        assert!(!friendly(&complete(4), &p3).unwrap());
    }

    #[test]
    fn four_vertex_families() {
        assert_eq!(classify_n4().unwrap(), n4_families_expected());
    }

    #[test]
    fn os_plus_is_a_pair() {
        let h1 = Multigraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let h2 = Multigraph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(s_pair(&h1, &h2).unwrap(), super::super::ell_os_plus());
        assert_eq!(classify(3).unwrap().len(), 1);
    }
}
