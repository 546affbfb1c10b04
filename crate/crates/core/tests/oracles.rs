//! Brute-force oracles, written independently of the library's own routes.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tuttekit::combinatorics::{set_partitions, IntPartition, Rational, TPoly};
use tuttekit::graphs::{self, Multigraph};
use tuttekit::invariants::{chromatic_sym, tutte_sym};
use tuttekit::selfcheck::random_multigraph;
use tuttekit::symfun::{Basis, SymFunc};

/// Σ_λ c_λ m̃_λ at x_1 = … = x_N = 1: m̃_λ becomes the falling factorial (N)_{ℓ(λ)}.
fn principal(f: &SymFunc, n_colors: i64) -> TPoly {
    assert_eq!(f.basis(), Basis::MTilde);
    let mut out = TPoly::zero();
    for (lambda, c) in f.terms() {
        let falling: i64 = (0..lambda.len() as i64).map(|i| n_colors - i).product();
        out = out + c.scale(&Rational::from_integer(BigInt::from(falling)));
    }
    out
}

/// Every coloring κ: V → [N], weighted (1+t)^{#monochromatic edges}; proper
/// colorings only when `proper`.
fn count_colorings(g: &Multigraph, n_colors: usize, proper: bool) -> TPoly {
    let n = g.n();
    let mut per_mono = vec![0i64; g.num_edges() + 1];
    let mut kappa = vec![0usize; n];
    loop {
        let mono = g.edges().iter().filter(|&&(u, v)| kappa[u] == kappa[v]).count();
        if !proper || mono == 0 {
            per_mono[mono] += 1;
        }
        let mut i = 0;
        while i < n {
            kappa[i] += 1;
            if kappa[i] < n_colors {
                break;
            }
            kappa[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    let mut out = TPoly::zero();
    for (k, &c) in per_mono.iter().enumerate() {
        out = out + TPoly::one_plus_t_pow(k).scale(&Rational::from_integer(BigInt::from(c)));
    }
    out
}

fn corpus() -> Vec<Multigraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut gs = vec![
        graphs::complete(4),
        graphs::cycle(5),
        graphs::path(4),
        graphs::star(3),
        graphs::theta(&[1, 2, 3]),
    ];
    gs.extend((0..40).map(|i| random_multigraph(&mut rng, 1 + i % 5, 6, 2, true)));
    gs
}

#[test]
fn bell_numbers() {
    let bell = [1usize, 1, 2, 5, 15, 52, 203, 877, 4140];
    for (n, &b) in bell.iter().enumerate() {
        assert_eq!(set_partitions(n).count(), b, "B_{n}");
    }
}

#[test]
fn partition_numbers() {
    let p = [1usize, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
    for (n, &c) in p.iter().enumerate() {
        assert_eq!(IntPartition::all(n).len(), c, "p({n})");
    }
}

#[test]
fn principal_specialisation_counts_colorings() {
    for g in corpus() {
        let x = chromatic_sym(&g).unwrap();
        let xb = tutte_sym(&g).unwrap();
        for colors in 1..=3 {
            assert_eq!(principal(&x, colors as i64), count_colorings(&g, colors, true), "X({g}) at N={colors}");
            assert_eq!(principal(&xb, colors as i64), count_colorings(&g, colors, false), "XB({g}) at N={colors}");
        }
    }
}

fn is_acyclic(n: usize, arcs: &[(usize, usize)]) -> bool {
    let mut indeg = vec![0; n];
    for &(_, v) in arcs {
        indeg[v] += 1;
    }
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(u) = stack.pop() {
        seen += 1;
        for &(a, b) in arcs {
            if a == u {
                indeg[b] -= 1;
                if indeg[b] == 0 {
                    stack.push(b);
                }
            }
        }
    }
    seen == n
}

#[test]
fn chromatic_at_minus_one_counts_acyclic_orientations() {
    for g in corpus().into_iter().filter(|g| !g.has_loop()) {
        let x = chromatic_sym(&g).unwrap();
        let chi = principal(&x, -1);
        let edges = g.edges();
        let mut acyclic = 0i64;
        for mask in 0u32..(1 << edges.len()) {
            let arcs: Vec<_> = edges
                .iter()
                .enumerate()
                .map(|(i, &(u, v))| if mask >> i & 1 == 1 { (v, u) } else { (u, v) })
                .collect();
            if is_acyclic(g.n(), &arcs) {
                acyclic += 1;
            }
        }
        let chi = chi.constant_term();
        assert_eq!(chi.abs(), Rational::from_integer(BigInt::from(acyclic)), "{g}");
    }
}

/// X(G) = Σ_{S ⊆ E} (−1)^{|S|} p_{λ(S)}, λ(S) the component weights of (V, S).
#[test]
fn power_sum_expansion_by_edge_subsets() {
    for g in corpus().into_iter().filter(|g| g.num_edges() <= 8) {
        let mut expected = SymFunc::zero(Basis::P);
        for mask in 0u32..(1 << g.num_edges()) {
            let idx: Vec<usize> = (0..g.num_edges()).filter(|i| mask >> i & 1 == 1).collect();
            let h = g.spanning_subgraph(&idx);
            let (label, m) = h.components();
            let mut w = vec![0u32; m];
            for v in 0..g.n() {
                w[label[v]] += g.weights()[v];
            }
            let sign = if idx.len() % 2 == 0 { 1 } else { -1 };
            expected.add_term(IntPartition::new(w), &TPoly::from_int(sign));
        }
        let x = chromatic_sym(&g).unwrap().to_basis(Basis::P).unwrap();
        assert_eq!(x, expected, "{g}");
    }
}

/// e_n = m̃_{1^n} / n! and p_n = m̃_{(n)}, checked through the monomial expansion.
#[test]
fn elementary_and_power_sums() {
    for n in 1..=5u32 {
        let e = SymFunc::single(Basis::E, IntPartition::new(vec![n]), TPoly::one());
        let fact: i64 = (1..=n as i64).product();
        let expected = SymFunc::single(
            Basis::MTilde,
            IntPartition::new(vec![1; n as usize]),
            TPoly::constant(Rational::new(BigInt::one(), BigInt::from(fact))),
        );
        assert_eq!(e.to_basis(Basis::MTilde).unwrap(), expected);
        let p = SymFunc::single(Basis::P, IntPartition::new(vec![n]), TPoly::one());
        let expected = SymFunc::single(Basis::MTilde, IntPartition::new(vec![n]), TPoly::one());
        assert_eq!(p.to_basis(Basis::MTilde).unwrap(), expected);
    }
    assert!(SymFunc::zero(Basis::P).to_basis(Basis::E).unwrap().is_zero());
}
