//! The kernel generators and the named relations built from them.

use crate::combinatorics::TPoly;
use crate::error::{Error, Result};
use crate::graphs::{broom, check_permutation, path, star, Multigraph};
use crate::limits::{check, Limits};

use super::GraphCombination;

fn g(n: usize, edges: &[(usize, usize)]) -> Multigraph {
    Multigraph::from_parts(n, edges.to_vec(), vec![1; n])
}

fn combo(n: usize, terms: Vec<(TPoly, Multigraph)>) -> GraphCombination {
    let mut l = GraphCombination::zero(n);
    for (c, h) in terms {
        l.add_term_unchecked(&c, h);
    }
    l
}

fn int(c: i64) -> TPoly {
    TPoly::from_int(c)
}

/// t + c
fn t_plus(c: i64) -> TPoly {
    TPoly::from_ints(&[c, 1])
}

/// ℓ_loop = G_1 − (t+1) G_1\{11}
pub fn ell_loop() -> GraphCombination {
    combo(1, vec![(int(1), g(1, &[(0, 0)])), (-t_plus(1), g(1, &[]))])
}

/// ℓ_multi = G_2 − (t+2) G_2\{e_2} + (t+1) G_2\{e_1, e_2}
pub fn ell_multi() -> GraphCombination {
    combo(
        2,
        vec![
            (int(1), g(2, &[(0, 1), (0, 1)])),
            (-t_plus(2), g(2, &[(0, 1)])),
            (t_plus(1), g(2, &[])),
        ],
    )
}

/// ℓ_tri on the triangle G_3 = {12, 13, 23}:
/// G_3 − G_3\{13} − (t+2)G_3\{12} + (t+2)G_3\{12,13} + (t+1)G_3\{12,23} − (t+1)G_3\{12,13,23}
pub fn ell_tri() -> GraphCombination {
    combo(
        3,
        vec![
            (int(1), g(3, &[(0, 1), (0, 2), (1, 2)])),
            (int(-1), g(3, &[(0, 1), (1, 2)])),
            (-t_plus(2), g(3, &[(0, 2), (1, 2)])),
            (t_plus(2), g(3, &[(1, 2)])),
            (t_plus(1), g(3, &[(0, 2)])),
            (-t_plus(1), g(3, &[])),
        ],
    )
}

/// ℓ_os+ = G_4 + G_4^c − G_4\{23} − (G_4\{23})^c with E(G_4) = {12, 23}.
pub fn ell_os_plus() -> GraphCombination {
    let g4 = g(3, &[(0, 1), (1, 2)]);
    let g4c = g4.complement().expect("simple");
    let g4d = g4.delete_edges(&[(1, 2)]).expect("edge present");
    let g4dc = g4d.complement().expect("simple");
    combo(
        3,
        vec![(int(1), g4), (int(1), g4c), (int(-1), g4d), (int(-1), g4dc)],
    )
}

/// ℓ_os = G − G\{12} − G\{13} + G\{12,13} on the triangle.
pub fn ell_os() -> GraphCombination {
    combo(
        3,
        vec![
            (int(1), g(3, &[(0, 1), (0, 2), (1, 2)])),
            (int(-1), g(3, &[(0, 2), (1, 2)])),
            (int(-1), g(3, &[(0, 1), (1, 2)])),
            (int(1), g(3, &[(1, 2)])),
        ],
    )
}

/// ℓ_iso(G, σG) = G − σG.
pub fn ell_iso(graph: &Multigraph, sigma: &[usize]) -> Result<GraphCombination> {
    check_permutation(sigma, graph.n())?;
    Ok(combo(
        graph.n(),
        vec![(int(1), graph.clone()), (int(-1), graph.relabel(sigma)?)],
    ))
}

/// Σ_{S ∋ e_i} (−1)^{|S|} ([n], S) + (1+t) Σ_{S ∌ e_j} (−1)^{|S|} ([n], S)
/// for a two-edge-connected G; `ei`, `ej` index into `graph.edges()`.
pub fn two_edge_connected_relation(
    graph: &Multigraph,
    ei: usize,
    ej: usize,
) -> Result<GraphCombination> {
    let m = graph.num_edges();
    for index in [ei, ej] {
        if index >= m {
            return Err(Error::EdgeIndexOutOfRange { index, edges: m });
        }
    }
    check("edges", m, Limits::current().max_subset_edges)?;
    if !graph.is_two_edge_connected() {
        return Err(Error::NotTwoEdgeConnected);
    }
    let mut out = GraphCombination::zero(graph.n());
    let one_plus_t = t_plus(1);
    let mut idx = Vec::with_capacity(m);
    for mask in 0u32..(1u32 << m) {
        idx.clear();
        idx.extend((0..m).filter(|&i| mask >> i & 1 == 1));
        let sign = if idx.len() % 2 == 0 { int(1) } else { int(-1) };
        let sub = graph.spanning_subgraph(&idx);
        let mut c = TPoly::zero();
        if mask >> ei & 1 == 1 {
            c += &sign;
        }
        if mask >> ej & 1 == 0 {
            c += &(&sign * &one_plus_t);
        }
        out.add_term_unchecked(&c, sub);
    }
    Ok(out)
}

/// The cycle relation for a cycle v_0 .. v_{n-1} of G, with cycle edges
/// e_m = v_m v_{m+1} and e_{n-1} = v_{n-1} v_0 (indices 0-based):
/// Σ_{S ⊆ E(C), e_i ∉ S} (−1)^{|S|} G\S + (1+t) Σ_{S ∋ e_j} (−1)^{|S|} G\S.
pub fn cycle_relation(
    graph: &Multigraph,
    cycle: &[usize],
    i: usize,
    j: usize,
) -> Result<GraphCombination> {
    let len = cycle.len();
    let describe = || {
        let v: Vec<String> = cycle.iter().map(|v| (v + 1).to_string()).collect();
        v.join(",")
    };
    if len < 3 {
        return Err(Error::NotACycle(describe()));
    }
    let mut seen = vec![false; graph.n()];
    for &v in cycle {
        if v >= graph.n() || seen[v] {
            return Err(Error::NotACycle(describe()));
        }
        seen[v] = true;
    }
    let edges: Vec<(usize, usize)> = (0..len).map(|m| (cycle[m], cycle[(m + 1) % len])).collect();
    if edges.iter().any(|&(u, v)| graph.multiplicity(u, v) == 0) {
        return Err(Error::NotACycle(describe()));
    }
    for index in [i, j] {
        if index >= len {
            return Err(Error::EdgeIndexOutOfRange { index, edges: len });
        }
    }
    let mut out = GraphCombination::zero(graph.n());
    let one_plus_t = t_plus(1);
    for mask in 0u32..(1u32 << len) {
        let s: Vec<(usize, usize)> = (0..len)
            .filter(|&m| mask >> m & 1 == 1)
            .map(|m| edges[m])
            .collect();
        let sign = if s.len() % 2 == 0 { int(1) } else { int(-1) };
        let mut c = TPoly::zero();
        if mask >> i & 1 == 0 {
            c += &sign;
        }
        if mask >> j & 1 == 1 {
            c += &(&sign * &one_plus_t);
        }
        out.add_term_unchecked(&c, graph.delete_edges(&s)?);
    }
    Ok(out)
}

/// The broom relation
/// B_{n,k} + (P_{n+1} ⊔ S_{k−1}) − B_{n+1,k−1} − (B_{n,k−1} ⊔ P_1),
/// with the last graph relabelled so that its isolated vertex is n+1
/// (1-based), the labelling in which the four graphs agree away from the
/// vertices n, n+1, n+k.
pub fn broom_relation(n: usize, k: usize) -> Result<GraphCombination> {
    if k == 0 {
        return Err(Error::InvalidInput("broom relation needs k >= 1".into()));
    }
    check("vertices", n + k, Limits::current().max_reduce_vertices)?;
    let [b1, b2, b3, b4] = broom_terms(n, k);
    let size = n + k;
    // B_{n,k-1} ⊔ P_1 has its isolated vertex last; rotate it to position n.
    let perm: Vec<usize> = (0..size)
        .map(|v| match v {
            v if v < n => v,
            v if v == size - 1 => n,
            v => v + 1,
        })
        .collect();
    let b4 = b4.relabel(&perm)?;
    Ok(combo(
        size,
        vec![(int(1), b1), (int(1), b2), (int(-1), b3), (int(-1), b4)],
    ))
}

/// The four graphs of the broom relation, each in its standard labelling.
pub fn broom_terms(n: usize, k: usize) -> [Multigraph; 4] {
    let star_part = star(k.saturating_sub(1));
    [
        broom(n, k),
        path(n + 1).disjoint_union(&star_part),
        broom(n + 1, k - 1),
        broom(n, k - 1).disjoint_union(&Multigraph::edgeless(1)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete, cycle};

    #[test]
    fn generator_shapes() {
        let os = ell_os_plus();
        let mut coeffs: Vec<TPoly> = os.terms().values().cloned().collect();
        coeffs.sort_by_key(|c| c.constant_term());
        assert_eq!(coeffs, vec![int(-1), int(-1), int(1), int(1)]);
        let multi = ell_multi();
        assert_eq!(multi.coeff(&g(2, &[(0, 1), (0, 1)])), int(1));
        assert_eq!(multi.coeff(&g(2, &[(0, 1)])), -t_plus(2));
        assert_eq!(multi.coeff(&g(2, &[])), t_plus(1));
        assert!(ell_iso(&complete(3), &[0, 1, 2]).unwrap().is_zero());
        assert_eq!(ell_tri().len(), 6);
    }

    #[test]
    fn relation_preconditions() {
        assert_eq!(
            two_edge_connected_relation(&path(3), 0, 0),
            Err(Error::NotTwoEdgeConnected)
        );
        let c3 = two_edge_connected_relation(&cycle(3), 0, 0).unwrap();
        assert_eq!(c3.len(), 8);
        assert!(c3.is_tutte_friendly().unwrap().is_friendly());
        let d = two_edge_connected_relation(&cycle(2), 0, 1).unwrap();
        assert!(d.is_tutte_friendly().unwrap().is_friendly());
        assert!(matches!(
            cycle_relation(&path(3), &[0, 1, 2], 0, 0),
            Err(Error::NotACycle(_))
        ));
    }

    #[test]
    fn cycle_relation_on_triangle_is_ell_tri() {
        // v = (1,2,3), e_i = 23, e_j = 12
        let rel = cycle_relation(&complete(3), &[0, 1, 2], 1, 0).unwrap();
        assert_eq!(rel, ell_tri());
    }

    #[test]
    fn broom_labelling() {
        // n = 1, k = 2: B_{1,2} = {13, 23}, P_2 ⊔ S_1 = {12}, B_{2,1} = {12, 23},
        // B_{1,1} ⊔ P_1 relabelled = {13}
        let rel = broom_relation(1, 2).unwrap();
        assert_eq!(rel.coeff(&g(3, &[(0, 2), (1, 2)])), int(1));
        assert_eq!(rel.coeff(&g(3, &[(0, 1)])), int(1));
        assert_eq!(rel.coeff(&g(3, &[(0, 1), (1, 2)])), int(-1));
        assert_eq!(rel.coeff(&g(3, &[(0, 2)])), int(-1));
        assert!(broom_relation(0, 1).unwrap().is_zero());
    }
}
