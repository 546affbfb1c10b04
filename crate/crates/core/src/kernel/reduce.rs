//! Rewriting a combination into the basis {(1+t)^k R_λ} of canonical bright
//! star forests by subtracting relabelled extensions of ℓ_loop, ℓ_multi,
//! ℓ_os+ and isomorphism relations.

use std::cmp::{Ordering, Reverse};
use std::collections::BTreeMap;

use num_traits::Zero;

use crate::combinatorics::{IntPartition, Rational, TPoly};
use crate::error::{Error, Result};
use crate::graphs::{canonical_star_forest, Multigraph};
use crate::limits::{check, Limits};

use super::generators::{ell_iso, ell_loop, ell_multi, ell_os_plus};
use super::GraphCombination;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    Loop,
    Multi,
    OsPlus,
    Iso,
}

impl Generator {
    pub fn name(self) -> &'static str {
        match self {
            Generator::Loop => "loop",
            Generator::Multi => "multi",
            Generator::OsPlus => "os_plus",
            Generator::Iso => "iso",
        }
    }
}

/// One subtraction: `coeff · perm(Ext(gen; host))`, where `perm[v]` is the
/// actual vertex for frame vertex `v`. For [`Generator::Iso`] the element is
/// `coeff · (host − perm(host))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateStep {
    pub generator: Generator,
    pub coeff: TPoly,
    pub host: Multigraph,
    pub perm: Vec<usize>,
    /// The dull triple (a, b, c) for ℓ_os+ steps.
    pub triple: Option<(usize, usize, usize)>,
    pub case: Option<u8>,
    /// The graph this step rewrites.
    pub source: Multigraph,
    /// Simple graphs produced by a dull-triple rewrite (after the multi-edge
    /// post-pass in case 3).
    pub products: Vec<Multigraph>,
}

impl CertificateStep {
    /// The subtracted element of the kernel.
    pub fn element(&self) -> Result<GraphCombination> {
        let base = match self.generator {
            Generator::Loop => ell_loop(),
            Generator::Multi => ell_multi(),
            Generator::OsPlus => ell_os_plus(),
            Generator::Iso => {
                return Ok(ell_iso(&self.host, &self.perm)?.scale(&self.coeff));
            }
        };
        Ok(base
            .extend(&self.host)?
            .relabel(&self.perm)?
            .scale(&self.coeff))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarForestTerm {
    pub lambda: IntPartition,
    pub k: usize,
    pub c: Rational,
}

#[derive(Debug, Clone)]
pub struct Reduction {
    pub input: GraphCombination,
    /// Σ c (1+t)^k R_λ
    pub terms: Vec<StarForestTerm>,
    pub certificate: Vec<CertificateStep>,
}

impl Reduction {
    /// The output as a combination of the graphs R_λ.
    pub fn output(&self) -> Result<GraphCombination> {
        let n = self.input.n();
        let mut out = GraphCombination::zero(n);
        for term in &self.terms {
            let r = canonical_star_forest(&term.lambda, n)?;
            out.add_term(&TPoly::one_plus_t_pow(term.k).scale(&term.c), r)?;
        }
        Ok(out)
    }

    /// Input minus every certificate element; equals [`Reduction::output`]
    /// for a valid certificate.
    pub fn replay(&self) -> Result<GraphCombination> {
        let mut l = self.input.clone();
        for step in &self.certificate {
            l = l.sub(&step.element()?)?;
        }
        Ok(l)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Sorted right endpoints (larger endpoint of each edge).
fn right_endpoints(g: &Multigraph) -> Vec<usize> {
    let mut r: Vec<usize> = g.edges().iter().map(|&(_, v)| v).collect();
    r.sort_unstable();
    r
}

/// The termination order: `a ≺ b` iff a has more edges, or the same number
/// of edges and a lexicographically smaller sorted right-endpoint list.
pub fn precedes(a: &Multigraph, b: &Multigraph) -> bool {
    match b.num_edges().cmp(&a.num_edges()) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => right_endpoints(a) < right_endpoints(b),
    }
}

fn order_key(g: &Multigraph) -> (Reverse<usize>, Vec<usize>) {
    (Reverse(g.num_edges()), right_endpoints(g))
}

/// Frame-to-actual permutation sending the frame vertices 0, 1, .. to
/// `front` and the rest in increasing order.
fn frame_perm(n: usize, front: &[usize]) -> Vec<usize> {
    let mut perm = front.to_vec();
    perm.extend((0..n).filter(|v| !front.contains(v)));
    perm
}

fn inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

struct Reducer {
    l: GraphCombination,
    steps: Vec<CertificateStep>,
}

impl Reducer {
    /// Subtracts `coeff · perm(Ext(gen; host))` from the working combination.
    fn apply(&mut self, mut step: CertificateStep) -> Result<()> {
        let element = step.element()?;
        self.l = self.l.sub(&element)?;
        if step.products.is_empty() {
            step.products = Vec::new();
        }
        self.steps.push(step);
        Ok(())
    }

    /// Rewrites the nonsimple graph g with coefficient c.
    fn eliminate_nonsimple(&mut self, g: &Multigraph, c: &TPoly) -> Result<()> {
        let n = g.n();
        if let Some(&(v, _)) = g.edges().iter().find(|&&(u, w)| u == w) {
            let perm = frame_perm(n, &[v]);
            let host = g.delete_edges(&[(v, v)])?.relabel(&inverse(&perm))?;
            return self.apply(CertificateStep {
                generator: Generator::Loop,
                coeff: c.clone(),
                host,
                perm,
                triple: None,
                case: None,
                source: g.clone(),
                products: Vec::new(),
            });
        }
        let e = g
            .edges()
            .windows(2)
            .find(|w| w[0] == w[1])
            .map(|w| w[0])
            .ok_or_else(|| Error::InternalFault("expected a multi-edge".into()))?;
        self.eliminate_multi(g, c, e, None)
    }

    fn eliminate_multi(
        &mut self,
        g: &Multigraph,
        c: &TPoly,
        e: (usize, usize),
        source: Option<&Multigraph>,
    ) -> Result<()> {
        let perm = frame_perm(g.n(), &[e.0, e.1]);
        let host = g.delete_edges(&[e, e])?.relabel(&inverse(&perm))?;
        self.apply(CertificateStep {
            generator: Generator::Multi,
            coeff: c.clone(),
            host,
            perm,
            triple: None,
            case: None,
            source: source.cloned().unwrap_or_else(|| g.clone()),
            products: Vec::new(),
        })
    }

    /// One dull-triple rewrite of the simple graph h with coefficient c.
    fn rewrite_dull(&mut self, h: &Multigraph, c: &TPoly, (a, b, t): (usize, usize, usize)) -> Result<()> {
        let n = h.n();
        let has = |u: usize, v: usize| h.multiplicity(u, v) > 0;
        let (ab, ac, bc) = (has(a, b), has(a, t), has(b, t));
        let (case, front, removed): (u8, [usize; 3], [(usize, usize); 2]) = match (ab, ac, bc) {
            (true, true, false) => (1, [b, a, t], [(a, b), (a, t)]),
            (true, false, true) => (2, [a, b, t], [(a, b), (b, t)]),
            (true, true, true) => (3, [b, a, t], [(a, b), (a, t)]),
            _ => {
                return Err(Error::InternalFault(format!(
                    "triple ({},{},{}) is not dull",
                    a + 1,
                    b + 1,
                    t + 1
                )))
            }
        };
        let perm = frame_perm(n, &front);
        let host = h.delete_edges(&removed)?.relabel(&inverse(&perm))?;
        let step = CertificateStep {
            generator: Generator::OsPlus,
            coeff: c.clone(),
            host,
            perm,
            triple: Some((a, b, t)),
            case: Some(case),
            source: h.clone(),
            products: Vec::new(),
        };
        // products of the rewrite: the element's terms other than h
        let element = step.element()?;
        let index = self.steps.len();
        self.apply(step)?;
        let mut products: Vec<Multigraph> = Vec::new();
        for g in element.terms().keys().filter(|g| *g != h) {
            if g.is_simple() {
                products.push(g.clone());
            } else {
                // case 3: remove the doubled edge bc right away
                let coeff = self.l.coeff(g);
                if !coeff.is_zero() {
                    self.eliminate_multi(g, &coeff, (b, t), Some(h))?;
                }
                let single = g.delete_edges(&[(b, t)])?;
                let none = single.delete_edges(&[(b, t)])?;
                products.push(single);
                products.push(none);
            }
        }
        for p in &products {
            if !precedes(h, p) {
                return Err(Error::InternalFault(format!(
                    "rewrite of {h} produced {p}, which does not follow it in the order"
                )));
            }
        }
        self.steps[index].products = products;
        Ok(())
    }
}

/// Star components sorted by size (descending, ties by least vertex), each
/// laid out on a consecutive block with its root last.
fn star_forest_layout(g: &Multigraph) -> (IntPartition, Vec<usize>) {
    let (label, m) = g.components();
    let mut comps: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (v, &c) in label.iter().enumerate() {
        comps[c].push(v);
    }
    comps.sort_by(|x, y| y.len().cmp(&x.len()).then(x[0].cmp(&y[0])));
    let mut perm = vec![0; g.n()];
    let mut next = 0;
    for comp in &comps {
        // root = largest vertex, already last in sorted order
        for &v in comp {
            perm[v] = next;
            next += 1;
        }
    }
    let lambda = IntPartition::new(comps.iter().map(|c| c.len() as u32).collect());
    (lambda, perm)
}

/// Reduces a combination of unit-weight graphs to Σ c (1+t)^k R_λ, recording
/// every subtracted kernel element.
pub fn reduce_to_star_forests(input: &GraphCombination) -> Result<Reduction> {
    let n = input.n();
    check("vertices for reduction", n, Limits::current().max_reduce_vertices)?;
    if input.terms().keys().any(|g| !g.has_unit_weights()) {
        return Err(Error::InvalidInput(
            "reduction works on graphs with unit vertex weights".into(),
        ));
    }
    let mut r = Reducer {
        l: input.clone(),
        steps: Vec::new(),
    };

    // Loops and multi-edges, largest graphs first.
    loop {
        let next = r
            .l
            .terms()
            .iter()
            .filter(|(g, _)| !g.is_simple())
            .max_by(|x, y| x.0.num_edges().cmp(&y.0.num_edges()).then(y.0.cmp(x.0)))
            .map(|(g, c)| (g.clone(), c.clone()));
        let Some((g, c)) = next else { break };
        r.eliminate_nonsimple(&g, &c)?;
    }

    // Dull simple graphs, the ≺-least first.
    loop {
        let mut best: Option<(Multigraph, (usize, usize, usize))> = None;
        for g in r.l.terms().keys() {
            if let Some(triple) = g.dull_triple()? {
                let better = match &best {
                    None => true,
                    Some((b, _)) => (order_key(g), g) < (order_key(b), b),
                };
                if better {
                    best = Some((g.clone(), triple));
                }
            }
        }
        let Some((h, triple)) = best else { break };
        let c = r.l.coeff(&h);
        r.rewrite_dull(&h, &c, triple)?;
    }

    // Relabel each bright star forest onto its R_λ.
    let forests: Vec<(Multigraph, TPoly)> = r
        .l
        .terms()
        .iter()
        .map(|(g, c)| (g.clone(), c.clone()))
        .collect();
    for (g, c) in forests {
        let (lambda, perm) = star_forest_layout(&g);
        let target = canonical_star_forest(&lambda, n)?;
        if g.relabel(&perm)? != target {
            return Err(Error::InternalFault(format!("{g} is not a bright star forest")));
        }
        if g != target {
            r.apply(CertificateStep {
                generator: Generator::Iso,
                coeff: c,
                host: g.clone(),
                perm,
                triple: None,
                case: None,
                source: g,
                products: Vec::new(),
            })?;
        }
    }

    let mut by_lambda: BTreeMap<Reverse<IntPartition>, TPoly> = BTreeMap::new();
    for (g, c) in r.l.terms() {
        let (lambda, _) = star_forest_layout(g);
        *by_lambda.entry(Reverse(lambda)).or_insert_with(TPoly::zero) += c;
    }
    let mut terms = Vec::new();
    for (Reverse(lambda), c) in by_lambda {
        for (k, ck) in c.to_one_plus_t_powers().into_iter().enumerate() {
            if !ck.is_zero() {
                terms.push(StarForestTerm {
                    lambda: lambda.clone(),
                    k,
                    c: ck,
                });
            }
        }
    }
    Ok(Reduction {
        input: input.clone(),
        terms,
        certificate: r.steps,
    })
}

/// Decides L ∈ Ker(XB) twice: by reduction to the star-forest basis and by
/// evaluating Σ c_i XB(H_i). Disagreement is reported as an internal fault.
pub fn kernel_membership(l: &GraphCombination) -> Result<bool> {
    let by_reduction = reduce_to_star_forests(l)?.is_zero();
    let direct = l.xb_sum()?.is_zero();
    if by_reduction != direct {
        return Err(Error::InternalFault(format!(
            "reduction says {by_reduction}, direct evaluation says {direct}"
        )));
    }
    Ok(direct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{cycle, path};

    #[test]
    fn path_reduces_to_star() {
        let l = GraphCombination::single(path(3));
        let red = reduce_to_star_forests(&l).unwrap();
        assert_eq!(
            red.terms,
            vec![StarForestTerm {
                lambda: IntPartition::new(vec![3]),
                k: 0,
                c: Rational::from_integer(1.into()),
            }]
        );
        assert_eq!(red.replay().unwrap(), red.output().unwrap());
        assert_eq!(red.certificate[0].case, Some(2));
    }

    #[test]
    fn canonical_forest_is_fixed() {
        let r = canonical_star_forest(&IntPartition::new(vec![2, 1]), 3).unwrap();
        let red = reduce_to_star_forests(&GraphCombination::single(r)).unwrap();
        assert!(red.certificate.is_empty());
        assert_eq!(red.terms.len(), 1);
    }

    #[test]
    fn loop_reduces_with_one_step() {
        let red = reduce_to_star_forests(&GraphCombination::single(cycle(1))).unwrap();
        assert_eq!(
            red.terms,
            vec![StarForestTerm {
                lambda: IntPartition::new(vec![1]),
                k: 1,
                c: Rational::from_integer(1.into()),
            }]
        );
        assert_eq!(red.certificate.len(), 1);
        assert_eq!(red.certificate[0].generator, Generator::Loop);
    }

    #[test]
    fn triangle_needs_case_three() {
        let red = reduce_to_star_forests(&GraphCombination::single(crate::graphs::complete(3))).unwrap();
        assert_eq!(red.certificate[0].case, Some(3));
        assert_eq!(red.replay().unwrap(), red.output().unwrap());
        assert_eq!(
            red.output().unwrap().xb_sum().unwrap(),
            crate::invariants::tutte_sym(&crate::graphs::complete(3)).unwrap()
        );
    }

    #[test]
    fn membership() {
        let host = Multigraph::from_edges(4, &[(0, 3), (2, 3)]).unwrap();
        let l = super::super::ell_os_plus().extend(&host).unwrap();
        assert!(kernel_membership(&l).unwrap());
        let l = GraphCombination::from_terms(
            2,
            [
                (TPoly::one(), path(2)),
                (TPoly::from_int(-1), Multigraph::edgeless(2)),
            ],
        )
        .unwrap();
        assert!(!kernel_membership(&l).unwrap());
        assert!(kernel_membership(&GraphCombination::zero(3)).unwrap());
    }
}
