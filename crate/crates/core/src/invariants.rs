//! The chromatic (X) and Tutte (XB) symmetric functions of vertex-weighted
//! multigraphs, each by several independent routes, and the e-basis sink
//! formula for the (1+t)-coefficients of XB.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::{binomial, IntPartition, RgsIter, Rational, TPoly};
use crate::error::Result;
use crate::graphs::{CanonicalForm, Multigraph};
use crate::limits::{check, Limits};
use crate::symfun::{Basis, SymFunc};

fn check_vertices(g: &Multigraph) -> Result<()> {
    check("vertices", g.n(), Limits::current().max_vertices)
}

fn check_edges(g: &Multigraph) -> Result<()> {
    check("edges", g.num_edges(), Limits::current().max_subset_edges)
}

/// λ_w(π) for a restricted growth string.
fn weighted_type(rgs: &[u8], weights: &[u32], scratch: &mut Vec<u32>) -> IntPartition {
    let blocks = rgs.iter().max().map_or(0, |&m| m as usize + 1);
    scratch.clear();
    scratch.resize(blocks, 0);
    for (v, &b) in rgs.iter().enumerate() {
        scratch[b as usize] += weights[v];
    }
    IntPartition::new(scratch.clone())
}

/// X as Σ over stable partitions of m̃_{λ_w(π)}; zero when G has a loop.
pub fn chromatic_sym(g: &Multigraph) -> Result<SymFunc> {
    check_vertices(g)?;
    if g.has_loop() {
        return Ok(SymFunc::zero(Basis::MTilde));
    }
    let mut counts: HashMap<IntPartition, u64> = HashMap::new();
    let mut it = RgsIter::new(g.n());
    let mut scratch = Vec::new();
    while let Some(rgs) = it.next_rgs() {
        if g.edges().iter().all(|&(u, v)| rgs[u] != rgs[v]) {
            *counts.entry(weighted_type(rgs, g.weights(), &mut scratch)).or_default() += 1;
        }
    }
    Ok(SymFunc::from_terms(
        Basis::MTilde,
        counts.into_iter().map(|(l, c)| (l, TPoly::from_int(c as i64))),
    ))
}

/// XB as Σ over all partitions of (1+t)^{e(π)} m̃_{λ_w(π)}.
pub fn tutte_sym(g: &Multigraph) -> Result<SymFunc> {
    check_vertices(g)?;
    let mut counts: HashMap<(IntPartition, usize), u64> = HashMap::new();
    let mut it = RgsIter::new(g.n());
    let mut scratch = Vec::new();
    while let Some(rgs) = it.next_rgs() {
        let e = g.internal_edges_rgs(rgs);
        *counts
            .entry((weighted_type(rgs, g.weights(), &mut scratch), e))
            .or_default() += 1;
    }
    let mut out = SymFunc::zero(Basis::MTilde);
    for ((l, e), c) in counts {
        out.add_term(l, &TPoly::one_plus_t_pow(e).scale(&int(c as i64)));
    }
    Ok(out)
}

fn int(c: i64) -> Rational {
    Rational::from_integer(BigInt::from(c))
}

/// The smallest non-loop edge, or a loop if only loops remain.
fn pick_edge(g: &Multigraph) -> Option<(usize, usize)> {
    g.edges()
        .iter()
        .copied()
        .find(|&(u, v)| u != v)
        .or_else(|| g.edges().first().copied())
}

/// XB by deletion-contraction, XB(G) = XB(G\e) + t·XB(G/e), memoized on
/// canonical forms.
pub fn tutte_sym_delcon(g: &Multigraph) -> Result<SymFunc> {
    check_vertices(g)?;
    let mut memo = HashMap::new();
    delcon(g, &TPoly::t(), &mut memo)
}

/// X by deletion-contraction, X(G) = X(G\e) − X(G/e).
pub fn chromatic_sym_delcon(g: &Multigraph) -> Result<SymFunc> {
    check_vertices(g)?;
    let mut memo = HashMap::new();
    delcon(g, &TPoly::from_int(-1), &mut memo)
}

fn delcon(
    g: &Multigraph,
    factor: &TPoly,
    memo: &mut HashMap<CanonicalForm, SymFunc>,
) -> Result<SymFunc> {
    let Some(e) = pick_edge(g) else {
        return tutte_sym(g);
    };
    let key = g.canonical_form()?;
    if let Some(hit) = memo.get(&key) {
        return Ok(hit.clone());
    }
    let mut out = delcon(&g.delete_edges(&[e])?, factor, memo)?;
    let contracted = delcon(&g.contract_edge(e.0, e.1)?, factor, memo)?;
    out.add_assign_scaled(&contracted, factor);
    memo.insert(key, out.clone());
    Ok(out)
}

/// XB = Σ_{S ⊆ E} (1+t)^{|S|} X(G/S), each copy of a multi-edge a separate element.
pub fn tutte_from_contractions(g: &Multigraph) -> Result<SymFunc> {
    check_vertices(g)?;
    check_edges(g)?;
    let m = g.num_edges();
    let mut memo: HashMap<CanonicalForm, SymFunc> = HashMap::new();
    let mut out = SymFunc::zero(Basis::MTilde);
    let mut idx = Vec::with_capacity(m);
    for mask in 0u32..(1u32 << m) {
        idx.clear();
        idx.extend((0..m).filter(|&i| mask >> i & 1 == 1));
        let h = g.contract_edge_indices(&idx)?;
        if h.has_loop() {
            continue;
        }
        let x = memo_x(&h, &mut memo)?;
        out.add_assign_scaled(&x, &TPoly::one_plus_t_pow(idx.len()));
    }
    Ok(out)
}

fn memo_x(h: &Multigraph, memo: &mut HashMap<CanonicalForm, SymFunc>) -> Result<SymFunc> {
    let key = h.canonical_form()?;
    if let Some(hit) = memo.get(&key) {
        return Ok(hit.clone());
    }
    let x = chromatic_sym(h)?;
    memo.insert(key, x.clone());
    Ok(x)
}

/// XB = Σ_{π ∈ L_G} (1+t)^{e(π)} X(G/π).
pub fn tutte_from_connected_partitions(g: &Multigraph) -> Result<SymFunc> {
    check_vertices(g)?;
    let mut memo: HashMap<CanonicalForm, SymFunc> = HashMap::new();
    let mut out = SymFunc::zero(Basis::MTilde);
    for pi in g.connected_partitions() {
        let h = g.contract_partition(&pi)?;
        if h.has_loop() {
            continue;
        }
        let x = memo_x(&h, &mut memo)?;
        out.add_assign_scaled(&x, &TPoly::one_plus_t_pow(g.internal_edge_count(&pi)));
    }
    Ok(out)
}

/// Evaluates every coefficient at t = v.
pub fn specialize_t(f: &SymFunc, v: &Rational) -> SymFunc {
    f.specialize_t(v)
}

/// σ_l([(1+t)^k] XB) via the e-expansion of the directly computed XB.
pub fn sigma_l_direct(g: &Multigraph, k: usize, l: usize) -> Result<Rational> {
    let f = tutte_sym(g)?
        .coefficient_in_onep_t(k)
        .mtilde_to_m()?
        .m_to_e()?;
    Ok(f.sigma_l(l)?.constant_term())
}

/// σ_l([(1+t)^k] XB) by the sink formula: a signed count over k-subsets A
/// of edges, acyclic orientations γ of G/A, and sink-maps of total weight l.
/// Each G/A carries the sign (−1)^{|V(G/A)| + w(G)}; this is the global
/// (−1)^{k + n + w(G)} whenever A is a forest.
pub fn sigma_l_formula(g: &Multigraph, k: usize, l: usize) -> Result<Rational> {
    check_vertices(g)?;
    check_edges(g)?;
    let m = g.num_edges();
    let mut total = BigInt::zero();
    if k <= m {
        let mut idx = Vec::with_capacity(k);
        for mask in 0u32..(1u32 << m) {
            if mask.count_ones() as usize != k {
                continue;
            }
            idx.clear();
            idx.extend((0..m).filter(|&i| mask >> i & 1 == 1));
            let h = g.contract_edge_indices(&idx)?;
            let weights = h.weights().to_vec();
            let parity = h.n() + g.total_weight();
            h.for_each_acyclic_orientation(|_, sinks| {
                let sink_weights: Vec<u32> = (0..sinks.len())
                    .filter(|&v| sinks[v])
                    .map(|v| weights[v])
                    .collect();
                let count = sink_map_count(&sink_weights, l);
                if (l + sink_weights.len() + parity) % 2 == 0 {
                    total += count;
                } else {
                    total -= count;
                }
            });
        }
    }
    Ok(Rational::from_integer(total))
}

/// [z^l] Π_v ((1+z)^{w_v} − 1): the number of ways to choose a nonempty
/// subset of each sink's weight with sizes summing to l.
fn sink_map_count(weights: &[u32], l: usize) -> BigInt {
    let mut poly = vec![BigInt::one()];
    for &w in weights {
        let w = w as usize;
        let factor: Vec<BigInt> = (0..=w)
            .map(|i| if i == 0 { BigInt::zero() } else { binomial(w, i) })
            .collect();
        let mut next = vec![BigInt::zero(); poly.len() + w];
        for (i, a) in poly.iter().enumerate() {
            for (j, b) in factor.iter().enumerate() {
                next[i + j] += a * b;
            }
        }
        poly = next;
    }
    poly.get(l).cloned().unwrap_or_else(BigInt::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::rat;
    use crate::graphs::{complete, cycle};

    fn p(v: &[u32]) -> IntPartition {
        IntPartition::new(v.to_vec())
    }

    fn k2_xb() -> SymFunc {
        SymFunc::from_terms(
            Basis::MTilde,
            [(p(&[1, 1]), TPoly::one()), (p(&[2]), TPoly::from_ints(&[1, 1]))],
        )
    }

    #[test]
    fn chromatic_examples() {
        let k1 = Multigraph::edgeless(1);
        assert_eq!(
            chromatic_sym(&k1).unwrap(),
            SymFunc::single(Basis::MTilde, p(&[1]), TPoly::one())
        );
        assert_eq!(
            chromatic_sym(&complete(2)).unwrap(),
            SymFunc::single(Basis::MTilde, p(&[1, 1]), TPoly::one())
        );
        let x3 = chromatic_sym(&complete(3)).unwrap();
        assert_eq!(x3, SymFunc::single(Basis::MTilde, p(&[1, 1, 1]), TPoly::one()));
        assert_eq!(
            x3.mtilde_to_m().unwrap().m_to_e().unwrap(),
            SymFunc::single(Basis::E, p(&[3]), TPoly::from_int(6))
        );
        assert!(chromatic_sym(&cycle(1)).unwrap().is_zero());
        assert!(chromatic_sym_delcon(&cycle(1)).unwrap().is_zero());
        assert_eq!(
            chromatic_sym_delcon(&complete(3)).unwrap(),
            chromatic_sym(&complete(3)).unwrap()
        );
    }

    #[test]
    fn tutte_examples() {
        assert_eq!(tutte_sym(&complete(2)).unwrap(), k2_xb());
        assert_eq!(
            tutte_sym(&cycle(1)).unwrap(),
            SymFunc::single(Basis::MTilde, p(&[1]), TPoly::from_ints(&[1, 1]))
        );
        assert_eq!(
            tutte_sym(&cycle(2)).unwrap(),
            SymFunc::from_terms(
                Basis::MTilde,
                [(p(&[1, 1]), TPoly::one()), (p(&[2]), TPoly::one_plus_t_pow(2))]
            )
        );
        for route in [tutte_sym_delcon, tutte_from_contractions, tutte_from_connected_partitions] {
            assert_eq!(route(&complete(2)).unwrap(), k2_xb());
            assert_eq!(route(&cycle(1)).unwrap(), tutte_sym(&cycle(1)).unwrap());
        }
        let weighted = Multigraph::new(3, vec![], vec![1, 1, 2]).unwrap();
        let expected = SymFunc::from_terms(
            Basis::MTilde,
            [
                (p(&[2, 1, 1]), TPoly::one()),
                (p(&[2, 2]), TPoly::one()),
                (p(&[3, 1]), TPoly::from_int(2)),
                (p(&[4]), TPoly::one()),
            ],
        );
        assert_eq!(tutte_sym_delcon(&weighted).unwrap(), expected);
        assert_eq!(tutte_from_contractions(&weighted).unwrap(), expected);
    }

    #[test]
    fn t_specializations() {
        let xb = tutte_sym(&complete(2)).unwrap();
        assert_eq!(
            specialize_t(&xb, &rat(-1, 1)),
            chromatic_sym(&complete(2)).unwrap()
        );
        assert_eq!(
            specialize_t(&xb, &rat(0, 1)),
            SymFunc::from_terms(
                Basis::MTilde,
                [(p(&[1, 1]), TPoly::one()), (p(&[2]), TPoly::one())]
            )
        );
    }

    #[test]
    fn sink_formula_on_k2() {
        let k2 = complete(2);
        assert_eq!(sigma_l_formula(&k2, 0, 1).unwrap(), rat(2, 1));
        assert_eq!(sigma_l_formula(&k2, 1, 1).unwrap(), rat(-2, 1));
        assert_eq!(sigma_l_formula(&k2, 1, 2).unwrap(), rat(1, 1));
        for (k, l) in [(0, 1), (1, 1), (1, 2), (0, 2), (2, 1)] {
            assert_eq!(
                sigma_l_formula(&k2, k, l).unwrap(),
                sigma_l_direct(&k2, k, l).unwrap(),
                "k={k} l={l}"
            );
        }
    }

    #[test]
    fn bounds_are_enforced() {
        let big = Multigraph::edgeless(Limits::current().max_vertices + 1);
        assert!(tutte_sym(&big).is_err());
    }
}
