//! The cloud construction certifying that a combination is not friendly.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::combinatorics::{IntPartition, Rational, SetPartition};
use crate::error::{Error, Result};
use crate::graphs::Multigraph;

use super::combination::b_powers;
use super::GraphCombination;

/// Result of checking a witness: the coefficient of (1+t)^a m̃_{λ*} in
/// XB(Ext(L; G)) computed by counting, next to [(1+t)^a] B(L; π*).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessCheck {
    pub lambda_star: IntPartition,
    pub coefficient: Rational,
    pub expected: Rational,
}

impl WitnessCheck {
    pub fn is_certified(&self) -> bool {
        !self.coefficient.is_zero() && self.coefficient == self.expected
    }
}

fn cloud_size(l: &GraphCombination, pi: &SetPartition) -> usize {
    let sf = l.standard_form();
    pi.num_blocks() * (1 + sf.max_exponent(pi))
}

fn check_preconditions(l: &GraphCombination, pi: &SetPartition, a: usize) -> Result<()> {
    if pi.n() != l.n() {
        return Err(Error::GroundSetMismatch {
            expected: l.n(),
            got: pi.n(),
        });
    }
    let powers = b_powers(&l.standard_form(), pi.rgs());
    if powers.iter().all(Zero::is_zero) {
        return Err(Error::WitnessPrecondition(format!(
            "B(L; {pi}) is zero"
        )));
    }
    if powers.get(a).is_none_or(Zero::is_zero) {
        return Err(Error::WitnessPrecondition(format!(
            "the (1+t)^{a} coefficient of B(L; {pi}) is zero"
        )));
    }
    Ok(())
}

/// The graph on [n + M l(π*)] whose clouds C_1, .., C_l (each of size
/// M = l(π*)(1 + max_i (n_i + e_{H_i}(π*)))) are joined to every vertex of
/// the other blocks of π* and to every vertex of the other clouds.
pub fn witness_graph(l: &GraphCombination, pi: &SetPartition, a: usize) -> Result<Multigraph> {
    check_preconditions(l, pi, a)?;
    let n = l.n();
    let blocks = pi.blocks();
    let lp = blocks.len();
    let m = cloud_size(l, pi);
    let cloud = |i: usize| (n + m * i)..(n + m * (i + 1));
    let mut edges = Vec::new();
    for i in 0..lp {
        for c in cloud(i) {
            for (j, block) in blocks.iter().enumerate() {
                if j != i {
                    edges.extend(block.iter().map(|&v| (v, c)));
                }
            }
            for j in i + 1..lp {
                edges.extend(cloud(j).map(|d| (c, d)));
            }
        }
    }
    let total = n + m * lp;
    Multigraph::new(total, edges, vec![1; total])
}

/// Computes [(1+t)^a m̃_{λ*}] XB(Ext(L; G)) by counting partitions of type
/// λ* = (λ(π*)_i + M) with n_i + e(π) = a for each standard-form term.
pub fn verify_witness(
    l: &GraphCombination,
    pi: &SetPartition,
    a: usize,
    witness: &Multigraph,
) -> Result<WitnessCheck> {
    check_preconditions(l, pi, a)?;
    let m = cloud_size(l, pi);
    let lambda_star = IntPartition::new(
        pi.lambda()
            .parts()
            .iter()
            .map(|&p| p + m as u32)
            .collect(),
    );
    let ext = l.extend(witness)?;
    let sf = ext.standard_form();
    let mut coefficient = Rational::zero();
    for (c, k, h) in &sf.terms {
        if *k > a {
            continue;
        }
        let count = count_typed_partitions(h, &lambda_star, a - k, &interleaved_order(l.n(), m, pi.num_blocks()));
        coefficient += c * Rational::from_integer(count);
    }
    let expected = b_powers(&l.standard_form(), pi.rgs())[a].clone();
    Ok(WitnessCheck {
        lambda_star,
        coefficient,
        expected,
    })
}

/// Base vertices first, then the clouds taken round-robin, so that
/// cross-cloud edges prune the search early.
fn interleaved_order(n: usize, m: usize, clouds: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    for step in 0..m {
        for i in 0..clouds {
            order.push(n + m * i + step);
        }
    }
    order
}

/// Number of set partitions of V(h) of type λ with exactly `target`
/// internal edges.
fn count_typed_partitions(h: &Multigraph, lambda: &IntPartition, target: usize, order: &[usize]) -> BigInt {
    let n = h.n();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // back[i]: (earlier position, multiplicity) for edges to earlier vertices
    let mut back: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    let mut loops = vec![0usize; n];
    for &(u, v) in h.edges() {
        if u == v {
            loops[pos[u]] += 1;
            continue;
        }
        let (a, b) = if pos[u] < pos[v] { (pos[u], pos[v]) } else { (pos[v], pos[u]) };
        match back[b].iter_mut().find(|(x, _)| *x == a) {
            Some(entry) => entry.1 += 1,
            None => back[b].push((a, 1)),
        }
    }
    let parts: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let mut search = TypedSearch {
        back,
        loops,
        parts,
        target,
        block_of: vec![0; n],
        sizes: Vec::new(),
        count: BigInt::zero(),
    };
    search.go(0, 0);
    search.count
}

struct TypedSearch {
    back: Vec<Vec<(usize, usize)>>,
    loops: Vec<usize>,
    parts: Vec<usize>,
    target: usize,
    block_of: Vec<usize>,
    sizes: Vec<usize>,
    count: BigInt,
}

impl TypedSearch {
    fn go(&mut self, i: usize, internal: usize) {
        let n = self.block_of.len();
        if i == n {
            if internal == self.target {
                let mut s = self.sizes.clone();
                s.sort_unstable_by(|a, b| b.cmp(a));
                if s == self.parts {
                    self.count += 1;
                }
            }
            return;
        }
        let max_part = self.parts.first().copied().unwrap_or(0);
        let open = self.sizes.len();
        for b in 0..=open {
            if b == open && open == self.parts.len() {
                break;
            }
            if b < open && self.sizes[b] >= max_part {
                continue;
            }
            let mut add = self.loops[i];
            for &(j, mult) in &self.back[i] {
                if self.block_of[j] == b {
                    add += mult;
                }
            }
            if internal + add > self.target {
                continue;
            }
            if b == open {
                self.sizes.push(0);
            }
            self.sizes[b] += 1;
            self.block_of[i] = b;
            if self.feasible(n - i - 1) {
                self.go(i + 1, internal + add);
            }
            self.sizes[b] -= 1;
            if b == open {
                self.sizes.pop();
            }
        }
    }

    /// The open blocks can still be completed to the target type using the
    /// `remaining` vertices.
    fn feasible(&self, remaining: usize) -> bool {
        let mut s = self.sizes.clone();
        s.sort_unstable_by(|a, b| b.cmp(a));
        // greedily match largest blocks to largest parts
        let mut need = 0;
        for (idx, &size) in s.iter().enumerate() {
            let Some(&p) = self.parts.get(idx) else {
                return false;
            };
            if size > p {
                return false;
            }
            need += p - size;
        }
        need += self.parts[s.len()..].iter().sum::<usize>();
        need == remaining
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{rat, TPoly};

    fn edge_minus_empty() -> GraphCombination {
        GraphCombination::from_terms(
            2,
            [
                (TPoly::one(), Multigraph::from_edges(2, &[(0, 1)]).unwrap()),
                (TPoly::from_int(-1), Multigraph::edgeless(2)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn single_block_witness() {
        let l = edge_minus_empty();
        let pi = SetPartition::single_block(2);
        let w = witness_graph(&l, &pi, 0).unwrap();
        assert_eq!(w.n(), 4);
        assert_eq!(w.num_edges(), 0);
        let check = verify_witness(&l, &pi, 0, &w).unwrap();
        assert!(check.is_certified());
        assert_eq!(check.expected, rat(-1, 1));
        let diff = l.extend(&w).unwrap().xb_sum().unwrap();
        assert!(!diff.is_zero());
    }

    #[test]
    fn friendly_input_rejected() {
        let l = crate::kernel::ell_os_plus();
        assert!(matches!(
            witness_graph(&l, &SetPartition::single_block(3), 0),
            Err(Error::WitnessPrecondition(_))
        ));
    }
}
