use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::combinatorics::{RgsIter, Rational, SetPartition, TPoly};
use crate::error::{Error, Result};
use crate::graphs::{CanonicalForm, Multigraph};
use crate::invariants::{chromatic_sym, tutte_sym};
use crate::limits::{check, Limits};
use crate::symfun::{Basis, SymFunc};

/// A formal sum Σ c_i H_i of labelled graphs on a common vertex set [n],
/// with coefficients in Q[t]. Identical labelled graphs are merged and zero
/// terms dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphCombination {
    n: usize,
    terms: BTreeMap<Multigraph, TPoly>,
}

/// Σ c (1+t)^k H with scalar c, one entry per nonzero (H, k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardForm {
    pub n: usize,
    pub terms: Vec<(Rational, usize, Multigraph)>,
}

/// Outcome of a friendliness test. For a failure, `pi` is the first violating
/// partition in enumeration order and `a` the least exponent with a nonzero
/// (1+t)^a coefficient in B(L; π).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Friendliness {
    Friendly,
    Violation {
        pi: SetPartition,
        a: usize,
        value: TPoly,
    },
}

impl Friendliness {
    pub fn is_friendly(&self) -> bool {
        matches!(self, Friendliness::Friendly)
    }
}

/// Outcome of an X-friendliness test; `value` is C(l; π) at the first violation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum XFriendliness {
    Friendly,
    Violation { pi: SetPartition, value: Rational },
}

impl XFriendliness {
    pub fn is_friendly(&self) -> bool {
        matches!(self, XFriendliness::Friendly)
    }
}

impl GraphCombination {
    pub fn zero(n: usize) -> Self {
        GraphCombination {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn single(g: Multigraph) -> Self {
        let mut l = Self::zero(g.n());
        l.terms.insert(g, TPoly::one());
        l
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (TPoly, Multigraph)>) -> Result<Self> {
        let mut l = Self::zero(n);
        for (c, g) in terms {
            l.add_term(&c, g)?;
        }
        Ok(l)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Multigraph, TPoly> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, g: &Multigraph) -> TPoly {
        self.terms.get(g).cloned().unwrap_or_else(TPoly::zero)
    }

    pub fn add_term(&mut self, c: &TPoly, g: Multigraph) -> Result<()> {
        if g.n() != self.n {
            return Err(Error::VertexCountMismatch {
                expected: self.n,
                got: g.n(),
            });
        }
        self.add_term_unchecked(c, g);
        Ok(())
    }

    pub(crate) fn add_term_unchecked(&mut self, c: &TPoly, g: Multigraph) {
        if c.is_zero() {
            return;
        }
        let mut remove = false;
        {
            let slot = self.terms.entry(g.clone()).or_insert_with(TPoly::zero);
            *slot += c;
            if slot.is_zero() {
                remove = true;
            }
        }
        if remove {
            self.terms.remove(&g);
        }
    }

    fn same_n(&self, other: &GraphCombination) -> Result<()> {
        if other.n != self.n {
            return Err(Error::VertexCountMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        Ok(())
    }

    /// self + c·other
    pub fn add_scaled(&self, other: &GraphCombination, c: &TPoly) -> Result<Self> {
        self.same_n(other)?;
        let mut out = self.clone();
        for (g, d) in &other.terms {
            out.add_term_unchecked(&(d * c), g.clone());
        }
        Ok(out)
    }

    pub fn add(&self, other: &GraphCombination) -> Result<Self> {
        self.add_scaled(other, &TPoly::one())
    }

    pub fn sub(&self, other: &GraphCombination) -> Result<Self> {
        self.add_scaled(other, &TPoly::from_int(-1))
    }

    pub fn scale(&self, c: &TPoly) -> Self {
        let mut out = Self::zero(self.n);
        for (g, d) in &self.terms {
            out.add_term_unchecked(&(d * c), g.clone());
        }
        out
    }

    /// Applies the same vertex relabelling to every term.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let mut out = Self::zero(self.n);
        for (g, c) in &self.terms {
            out.add_term_unchecked(c, g.relabel(perm)?);
        }
        Ok(out)
    }

    /// Evaluates every coefficient at t = v.
    pub fn specialize_t(&self, v: &Rational) -> Self {
        let mut out = Self::zero(self.n);
        for (g, c) in &self.terms {
            out.add_term_unchecked(&TPoly::constant(c.eval(v)), g.clone());
        }
        out
    }

    /// Ext(L; G): every term H becomes G ⊎ E(H) on the vertex set of G,
    /// keeping all edge multiplicities and the weights of G.
    pub fn extend(&self, host: &Multigraph) -> Result<Self> {
        if host.n() < self.n {
            return Err(Error::HostTooSmall {
                host: host.n(),
                n: self.n,
            });
        }
        let mut out = Self::zero(host.n());
        for (h, c) in &self.terms {
            out.add_term_unchecked(c, host.add_edges(h.edges())?);
        }
        Ok(out)
    }

    /// Merges terms whose graphs are isomorphic, keeping a canonical
    /// representative of each class.
    pub fn merge_isomorphic(&self) -> Result<Self> {
        let mut classes: BTreeMap<CanonicalForm, (Multigraph, TPoly)> = BTreeMap::new();
        for (g, c) in &self.terms {
            let key = g.canonical_form()?;
            let entry = classes
                .entry(key)
                .or_insert_with(|| (g.canonical_relabel(), TPoly::zero()));
            entry.1 += c;
        }
        let mut out = Self::zero(self.n);
        for (_, (g, c)) in classes {
            out.add_term_unchecked(&c, g);
        }
        Ok(out)
    }

    /// Σ c_i XB(H_i), evaluated term by term.
    pub fn xb_sum(&self) -> Result<SymFunc> {
        let mut out = SymFunc::zero(Basis::MTilde);
        for (g, c) in &self.terms {
            out.add_assign_scaled(&tutte_sym(g)?, c);
        }
        Ok(out)
    }

    /// Σ c_i X(H_i), evaluated term by term.
    pub fn x_sum(&self) -> Result<SymFunc> {
        let mut out = SymFunc::zero(Basis::MTilde);
        for (g, c) in &self.terms {
            out.add_assign_scaled(&chromatic_sym(g)?, c);
        }
        Ok(out)
    }

    /// The unique expansion Σ c (1+t)^k H with scalar c.
    pub fn standard_form(&self) -> StandardForm {
        let mut terms = Vec::new();
        for (g, c) in &self.terms {
            for (k, ck) in c.to_one_plus_t_powers().into_iter().enumerate() {
                if !ck.is_zero() {
                    terms.push((ck, k, g.clone()));
                }
            }
        }
        StandardForm { n: self.n, terms }
    }

    /// B(L; π) = Σ c_i (1+t)^{n_i + e_{H_i}(π)} over the standard form.
    pub fn b_value(&self, pi: &SetPartition) -> Result<TPoly> {
        if pi.n() != self.n {
            return Err(Error::GroundSetMismatch {
                expected: self.n,
                got: pi.n(),
            });
        }
        let sf = self.standard_form();
        let powers = b_powers(&sf, pi.rgs());
        Ok(TPoly::from_one_plus_t_powers(&powers))
    }

    /// Tests B(L; π) = 0 for every partition π of [n].
    pub fn is_tutte_friendly(&self) -> Result<Friendliness> {
        check("vertices", self.n, Limits::current().max_vertices)?;
        let sf = self.standard_form();
        let mut it = RgsIter::new(self.n);
        while let Some(rgs) = it.next_rgs() {
            let powers = b_powers(&sf, rgs);
            if let Some(a) = powers.iter().position(|c| !c.is_zero()) {
                return Ok(Friendliness::Violation {
                    pi: SetPartition::from_labels(
                        &rgs.iter().map(|&b| b as usize).collect::<Vec<_>>(),
                    ),
                    a,
                    value: TPoly::from_one_plus_t_powers(&powers),
                });
            }
        }
        Ok(Friendliness::Friendly)
    }

    /// Tests C(l; π) = Σ c_i [e_{H_i}(π) = 0] = 0 for every π. Coefficients
    /// must be free of t.
    pub fn is_x_friendly(&self) -> Result<XFriendliness> {
        check("vertices", self.n, Limits::current().max_vertices)?;
        let mut scalar = Vec::with_capacity(self.terms.len());
        for (g, c) in &self.terms {
            if !c.is_constant() {
                return Err(Error::TDependentCoefficient);
            }
            scalar.push((g, c.constant_term()));
        }
        let mut it = RgsIter::new(self.n);
        while let Some(rgs) = it.next_rgs() {
            let mut value = Rational::zero();
            for (g, c) in &scalar {
                if g.internal_edges_rgs(rgs) == 0 {
                    value += c;
                }
            }
            if !value.is_zero() {
                return Ok(XFriendliness::Violation {
                    pi: SetPartition::from_labels(
                        &rgs.iter().map(|&b| b as usize).collect::<Vec<_>>(),
                    ),
                    value,
                });
            }
        }
        Ok(XFriendliness::Friendly)
    }

    /// A friendly combination is reducible when some vertex v meets every w
    /// (itself included, via loops) in the same number of edges in every term.
    pub fn is_tutte_reducible(&self) -> Result<bool> {
        if !self.is_tutte_friendly()?.is_friendly() {
            return Err(Error::NotFriendly);
        }
        let n = self.n;
        let incidence = |g: &Multigraph, v: usize| -> Vec<usize> {
            let mut row = vec![0; n];
            for &(a, b) in g.edges() {
                if a == v {
                    row[b] += 1;
                } else if b == v {
                    row[a] += 1;
                }
            }
            row
        };
        let graphs: Vec<&Multigraph> = self.terms.keys().collect();
        Ok((0..n).any(|v| {
            let first = graphs.first().map(|g| incidence(g, v));
            graphs.iter().all(|g| Some(incidence(g, v)) == first)
        }))
    }
}

/// (1+t)-power coefficients of B(L; π) for a standard form.
pub(crate) fn b_powers(sf: &StandardForm, rgs: &[u8]) -> Vec<Rational> {
    let mut powers: Vec<Rational> = Vec::new();
    for (c, k, g) in &sf.terms {
        let idx = k + g.internal_edges_rgs(rgs);
        if powers.len() <= idx {
            powers.resize(idx + 1, Rational::zero());
        }
        powers[idx] += c;
    }
    powers
}

impl StandardForm {
    /// Rebuilds the combination Σ c (1+t)^k H.
    pub fn reconstruct(&self) -> GraphCombination {
        let mut out = GraphCombination::zero(self.n);
        for (c, k, g) in &self.terms {
            out.add_term_unchecked(&TPoly::one_plus_t_pow(*k).scale(c), g.clone());
        }
        out
    }

    /// max_i (n_i + e_{H_i}(π))
    pub fn max_exponent(&self, pi: &SetPartition) -> usize {
        self.terms
            .iter()
            .map(|(_, k, g)| k + g.internal_edge_count(pi))
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for GraphCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (g, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "({c}) {g}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{rat, set_partitions};
    use crate::kernel::generators::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Multigraph {
        Multigraph::from_edges(n, edges).unwrap()
    }

    fn edge_minus_empty() -> GraphCombination {
        GraphCombination::from_terms(
            2,
            [
                (TPoly::one(), g(2, &[(0, 1)])),
                (TPoly::from_int(-1), Multigraph::edgeless(2)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn extension() {
        let l = ell_loop().extend(&Multigraph::edgeless(2)).unwrap();
        assert_eq!(l.coeff(&g(2, &[(0, 0)])), TPoly::one());
        assert_eq!(l.coeff(&Multigraph::edgeless(2)), TPoly::from_ints(&[-1, -1]));
        let h = GraphCombination::single(g(2, &[(0, 1)]));
        let e = h.extend(&g(2, &[(0, 1)])).unwrap();
        assert_eq!(e.coeff(&g(2, &[(0, 1), (0, 1)])), TPoly::one());
        assert_eq!(ell_os_plus().extend(&Multigraph::edgeless(3)).unwrap(), ell_os_plus());
        assert!(ell_tri().extend(&Multigraph::edgeless(2)).is_err());
    }

    #[test]
    fn standard_forms() {
        let t2 = GraphCombination::from_terms(1, [(TPoly::from_ints(&[0, 0, 1]), g(1, &[]))]).unwrap();
        let sf = t2.standard_form();
        assert_eq!(
            sf.terms,
            vec![
                (rat(1, 1), 0, g(1, &[])),
                (rat(-2, 1), 1, g(1, &[])),
                (rat(1, 1), 2, g(1, &[]))
            ]
        );
        assert_eq!(sf.reconstruct(), t2);
        let sf = ell_multi().standard_form();
        assert!(sf.terms.iter().all(|(_, k, _)| *k <= 1));
        assert_eq!(sf.reconstruct(), ell_multi());
        let sf = edge_minus_empty().standard_form();
        assert!(sf.terms.iter().all(|(_, k, _)| *k == 0));
    }

    #[test]
    fn b_values() {
        let merged = SetPartition::single_block(2);
        assert!(ell_multi().b_value(&merged).unwrap().is_zero());
        assert!(ell_loop().b_value(&SetPartition::single_block(1)).unwrap().is_zero());
        assert_eq!(edge_minus_empty().b_value(&merged).unwrap(), TPoly::t());
    }

    #[test]
    fn friendliness() {
        assert!(ell_os_plus().is_tutte_friendly().unwrap().is_friendly());
        assert!(ell_tri().is_tutte_friendly().unwrap().is_friendly());
        match edge_minus_empty().is_tutte_friendly().unwrap() {
            Friendliness::Violation { pi, a, .. } => {
                assert_eq!(pi, SetPartition::single_block(2));
                assert_eq!(a, 0);
            }
            Friendliness::Friendly => panic!("edge - empty is not friendly"),
        }
        assert!(ell_os().is_x_friendly().unwrap().is_friendly());
        let star = ell_os_plus().specialize_t(&rat(-1, 1));
        assert!(star.is_x_friendly().unwrap().is_friendly());
        assert!(!edge_minus_empty().is_x_friendly().unwrap().is_friendly());
        assert_eq!(ell_loop().is_x_friendly(), Err(Error::TDependentCoefficient));
        // every partition is checked
        assert_eq!(set_partitions(3).count(), 5);
    }

    #[test]
    fn reducibility() {
        let star5 = crate::graphs::star(5);
        assert!(ell_os_plus().extend(&star5).unwrap().is_tutte_reducible().unwrap());
        assert!(!ell_os_plus().is_tutte_reducible().unwrap());
        assert!(!ell_loop().is_tutte_reducible().unwrap());
        assert_eq!(edge_minus_empty().is_tutte_reducible(), Err(Error::NotFriendly));
    }
}
