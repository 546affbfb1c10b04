//! Vertex-weighted digraphs and their quasisymmetric functions XQ and TQ,
//! truncated to finitely many variables.
//!
//! XQ and TQ are homogeneous of degree w(D), and a quasisymmetric function
//! of degree d is determined by its restriction to d variables, so
//! truncating at N ≥ w(D) loses nothing.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::ToPrimitive;
use rustc_hash::FxHashMap;

use crate::combinatorics::{binomial, SetPartition};
use crate::error::{Error, Result};
use crate::graphs::{Multigraph, UnionFind};
use crate::limits::{check, Limits};
use crate::symfun::{Basis, SymFunc};

/// Variables are packed eight bits each into the low 96 bits of a `u128`.
const MAX_VARS: usize = 12;
/// Bound on arcs, so that a and k fit in sixteen bits.
const MAX_ARCS: usize = u16::MAX as usize;
const MAX_EXPONENT: u32 = u8::MAX as u32;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    weights: Vec<u32>,
}

impl Digraph {
    pub fn new(n: usize, mut arcs: Vec<(usize, usize)>, weights: Vec<u32>) -> Result<Self> {
        if weights.len() != n {
            return Err(Error::WeightCount {
                expected: n,
                got: weights.len(),
            });
        }
        if weights.contains(&0) {
            return Err(Error::NonPositiveWeight);
        }
        for &(u, v) in &arcs {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
        }
        arcs.sort_unstable();
        Ok(Digraph { n, arcs, weights })
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, arcs.to_vec(), vec![1; n])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn total_weight(&self) -> u32 {
        self.weights.iter().sum()
    }

    /// The undirected multigraph with one edge per arc.
    pub fn underlying(&self) -> Multigraph {
        Multigraph::new(self.n, self.arcs.clone(), self.weights.clone())
            .expect("arcs are in range")
    }

    /// D/π for a partition into blocks connected in the underlying graph:
    /// arcs inside a block vanish, the others keep their multiplicity.
    pub fn contract_partition(&self, pi: &SetPartition) -> Result<Digraph> {
        // validates connectivity of every block
        self.underlying().contract_partition(pi)?;
        Ok(self.contract_blocks(pi))
    }

    /// D/π without the connectivity check.
    fn contract_blocks(&self, pi: &SetPartition) -> Digraph {
        let label: Vec<usize> = (0..self.n).map(|v| pi.block_of(v)).collect();
        let arcs = self
            .arcs
            .iter()
            .filter(|&&(u, v)| label[u] != label[v])
            .map(|&(u, v)| (label[u], label[v]))
            .collect();
        self.quotient(&label, pi.num_blocks(), arcs)
    }

    /// D/S for a set of arc indices: the arcs in S are contracted, every
    /// other arc survives, possibly as a loop.
    pub fn contract_arc_indices(&self, s: &[usize]) -> Result<Digraph> {
        let mut uf = UnionFind::new(self.n);
        let mut removed = vec![false; self.arcs.len()];
        for &i in s {
            let &(u, v) = self.arcs.get(i).ok_or(Error::EdgeIndexOutOfRange {
                index: i,
                edges: self.arcs.len(),
            })?;
            uf.union(u, v);
            removed[i] = true;
        }
        let (label, m) = uf.labels();
        let arcs = self
            .arcs
            .iter()
            .zip(&removed)
            .filter(|(_, &r)| !r)
            .map(|(&(u, v), _)| (label[u], label[v]))
            .collect();
        Ok(self.quotient(&label, m, arcs))
    }

    fn quotient(&self, label: &[usize], m: usize, arcs: Vec<(usize, usize)>) -> Digraph {
        let mut weights = vec![0; m];
        for (v, &l) in label.iter().enumerate() {
            weights[l] += self.weights[v];
        }
        let mut arcs: Vec<_> = arcs;
        arcs.sort_unstable();
        Digraph {
            n: m,
            arcs,
            weights,
        }
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.n)?;
        for &(u, v) in &self.arcs {
            write!(f, " {}->{}", u + 1, v + 1)?;
        }
        if self.weights.iter().any(|&w| w != 1) {
            let w: Vec<String> = self.weights.iter().map(u32::to_string).collect();
            write!(f, " w=({})", w.join(","))?;
        }
        Ok(())
    }
}

/// One basis element q^a (1+t)^k x^α packed into a `u128`: eight bits per
/// variable in the low 96 bits, then a and k in sixteen bits each.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct QTerm(u128);

const Q_SHIFT: u32 = 96;
const K_SHIFT: u32 = 112;
const EXPS_MASK: u128 = (1 << Q_SHIFT) - 1;

impl QTerm {
    fn new(exps: u128, q: u32, k: u32) -> QTerm {
        QTerm(exps | (q as u128) << Q_SHIFT | (k as u128) << K_SHIFT)
    }

    fn exps(self) -> u128 {
        self.0 & EXPS_MASK
    }

    fn q(self) -> u32 {
        (self.0 >> Q_SHIFT) as u32 & 0xffff
    }

    fn k(self) -> u32 {
        (self.0 >> K_SHIFT) as u32
    }
}

/// A polynomial in q and t with integer coefficients, keyed by (q-degree,
/// t-degree).
pub type QtPoly = BTreeMap<(u32, u32), i64>;

/// A quasisymmetric function of bounded degree restricted to `vars`
/// variables, stored with integer coefficients in the basis
/// q^a (1+t)^k x^α.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedQFunc {
    vars: usize,
    terms: FxHashMap<QTerm, i64>,
}

fn pack(exps: &[u32]) -> u128 {
    exps.iter()
        .enumerate()
        .fold(0u128, |acc, (i, &e)| acc | (e as u128) << (8 * i))
}

fn unpack(packed: u128, vars: usize) -> Vec<u32> {
    (0..vars).map(|i| (packed >> (8 * i)) as u32 & 0xff).collect()
}

impl TruncatedQFunc {
    pub fn zero(vars: usize) -> Self {
        TruncatedQFunc {
            vars,
            terms: FxHashMap::default(),
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero basis coefficients.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_raw(&mut self, term: QTerm, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(term).or_insert(0);
        *entry = entry.checked_add(c).expect("coefficient overflow");
        if *entry == 0 {
            self.terms.remove(&term);
        }
    }

    /// Coefficient of x^α in (1+t)-power form: `(a, k) ↦ c` for q^a (1+t)^k.
    pub fn coeff_one_plus_t(&self, exps: &[u32]) -> BTreeMap<(u32, u32), i64> {
        if exps.len() != self.vars || exps.iter().any(|&e| e > MAX_EXPONENT) {
            return BTreeMap::new();
        }
        let packed = pack(exps);
        self.terms
            .iter()
            .filter(|(t, _)| t.exps() == packed)
            .map(|(t, &c)| ((t.q(), t.k()), c))
            .collect()
    }

    /// Coefficient of x^α as a polynomial in q and t.
    pub fn coeff(&self, exps: &[u32]) -> QtPoly {
        expand_t(&self.coeff_one_plus_t(exps))
    }

    /// Every nonzero coefficient as a polynomial in q and t.
    pub fn terms(&self) -> BTreeMap<Vec<u32>, QtPoly> {
        let mut grouped: BTreeMap<u128, BTreeMap<(u32, u32), i64>> = BTreeMap::new();
        for (t, &c) in &self.terms {
            grouped.entry(t.exps()).or_default().insert((t.q(), t.k()), c);
        }
        grouped
            .into_iter()
            .map(|(e, p)| (unpack(e, self.vars), expand_t(&p)))
            .filter(|(_, p)| !p.is_empty())
            .collect()
    }

    pub fn add(&self, other: &TruncatedQFunc) -> Result<TruncatedQFunc> {
        if self.vars != other.vars {
            return Err(Error::InvalidInput(format!(
                "cannot add functions in {} and {} variables",
                self.vars, other.vars
            )));
        }
        let mut out = self.clone();
        for (&t, &c) in &other.terms {
            out.add_raw(t, c);
        }
        Ok(out)
    }

    /// Specialization q = 1.
    pub fn at_q_one(&self) -> TruncatedQFunc {
        let mut out = TruncatedQFunc::zero(self.vars);
        for (t, &c) in &self.terms {
            out.add_raw(QTerm::new(t.exps(), 0, t.k()), c);
        }
        out
    }

    /// Specialization t = −1, which kills every (1+t)^k with k > 0.
    pub fn at_t_minus_one(&self) -> TruncatedQFunc {
        let mut out = TruncatedQFunc::zero(self.vars);
        for (t, &c) in self.terms.iter().filter(|(t, _)| t.k() == 0) {
            out.add_raw(*t, c);
        }
        out
    }

    /// Restriction of a symmetric function to `vars` variables. The
    /// coefficients in (1+t)-power form must be integers.
    pub fn from_symmetric(sf: &SymFunc, vars: usize) -> Result<TruncatedQFunc> {
        check("variables", vars, MAX_VARS)?;
        let sf = sf.to_basis(Basis::MTilde)?;
        let mut out = TruncatedQFunc::zero(vars);
        for (lambda, c) in sf.terms() {
            if lambda.len() > vars {
                continue;
            }
            if lambda.parts().first().is_some_and(|&p| p > MAX_EXPONENT) {
                return Err(Error::BoundExceeded {
                    what: "exponent",
                    value: lambda.parts()[0] as usize,
                    bound: MAX_EXPONENT as usize,
                });
            }
            let aut = i64::try_from(lambda.aut_factor())
                .map_err(|_| Error::InvalidInput("automorphism factor overflows".into()))?;
            let powers: Vec<i64> = c
                .to_one_plus_t_powers()
                .iter()
                .map(|r| {
                    r.is_integer()
                        .then(|| r.to_integer().to_i64())
                        .flatten()
                        .ok_or_else(|| {
                            Error::InvalidInput(format!("coefficient {r} is not a small integer"))
                        })
                })
                .collect::<Result<_>>()?;
            let mut values: Vec<(u32, usize)> = lambda
                .multiplicities()
                .into_iter()
                .collect();
            values.push((0, vars - lambda.len()));
            arrangements(&mut values, 0, vars, 0, &mut |exps| {
                for (k, &ck) in powers.iter().enumerate() {
                    out.add_raw(QTerm::new(exps, 0, k as u32), ck * aut);
                }
            });
        }
        Ok(out)
    }
}

/// Calls `f` with every distinct arrangement of the multiset `values`
/// (value, remaining count) over positions `pos..vars`, packed.
fn arrangements(values: &mut [(u32, usize)], pos: usize, vars: usize, acc: u128, f: &mut impl FnMut(u128)) {
    if pos == vars {
        f(acc);
        return;
    }
    for i in 0..values.len() {
        if values[i].1 == 0 {
            continue;
        }
        values[i].1 -= 1;
        let acc = acc | (values[i].0 as u128) << (8 * pos);
        arrangements(values, pos + 1, vars, acc, f);
        values[i].1 += 1;
    }
}

/// Σ c_{a,k} q^a (1+t)^k rewritten in powers of t.
fn expand_t(p: &BTreeMap<(u32, u32), i64>) -> QtPoly {
    let mut out = QtPoly::new();
    for (&(a, k), &c) in p {
        for j in 0..=k {
            let b = binomial(k as usize, j as usize)
                .to_i64()
                .expect("binomial fits in i64");
            *out.entry((a, j)).or_insert(0) += c * b;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

impl fmt::Display for TruncatedQFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (exps, p)) in terms.iter().rev().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let mono: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| match e {
                    1 => format!("x{}", v + 1),
                    _ => format!("x{}^{}", v + 1, e),
                })
                .collect();
            write!(f, "{}: {}", mono.join(" "), format_qt(p))?;
        }
        Ok(())
    }
}

pub fn format_qt(p: &QtPoly) -> String {
    if p.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, (&(a, b), &c)) in p.iter().enumerate() {
        let var = |name: &str, d: u32| match d {
            0 => String::new(),
            1 => name.to_string(),
            _ => format!("{name}^{d}"),
        };
        let mono = format!("{}{}", var("q", a), var("t", b));
        let sign = if c < 0 { "-" } else { "+" };
        if i == 0 {
            if c < 0 {
                s.push('-');
            }
        } else {
            s.push_str(&format!(" {sign} "));
        }
        let abs = c.unsigned_abs();
        if mono.is_empty() {
            s.push_str(&abs.to_string());
        } else if abs == 1 {
            s.push_str(&mono);
        } else {
            s.push_str(&format!("{abs}{mono}"));
        }
    }
    s
}

/// Arc directions seen from the later endpoint.
#[derive(Clone, Copy)]
enum Link {
    /// Arc from an earlier vertex into this one.
    In(usize),
    /// Arc from this vertex to an earlier one.
    Out(usize),
    Loop,
}

struct Enumeration<'a> {
    links: Vec<Vec<Link>>,
    weights: &'a [u32],
    vars: usize,
    proper_only: bool,
    arcs: u32,
    shift: u32,
    colors: Vec<usize>,
    out: &'a mut FxHashMap<QTerm, i64>,
    inconsistent: bool,
}

impl Enumeration<'_> {
    fn run(&mut self, v: usize, exps: u128, asc: u32, desc: u32, mono: u32) {
        if v == self.links.len() {
            if asc + desc + mono != self.arcs {
                self.inconsistent = true;
            }
            *self
                .out
                .entry(QTerm::new(exps, asc, mono + self.shift))
                .or_insert(0) += 1;
            return;
        }
        'color: for c in 0..self.vars {
            let (mut a, mut d, mut m) = (asc, desc, mono);
            for &link in &self.links[v] {
                match link {
                    Link::Loop => m += 1,
                    Link::In(u) | Link::Out(u) if self.colors[u] == c => m += 1,
                    Link::In(u) if self.colors[u] < c => a += 1,
                    Link::Out(u) if self.colors[u] > c => a += 1,
                    _ => d += 1,
                }
                if self.proper_only && m > 0 {
                    continue 'color;
                }
            }
            self.colors[v] = c;
            let exps = exps + ((self.weights[v] as u128) << (8 * c));
            self.run(v + 1, exps, a, d, m);
        }
    }
}

/// Adds the coloring sum of `d` to `out` with every (1+t)-exponent raised
/// by `shift`. All coefficients added are positive.
fn enumerate_into(
    d: &Digraph,
    vars: usize,
    proper_only: bool,
    shift: u32,
    out: &mut TruncatedQFunc,
) -> Result<()> {
    let w = d.total_weight();
    if (vars as u64) < w as u64 {
        return Err(Error::TooFewVariables {
            needed: w as usize,
            got: vars,
        });
    }
    check("variables", vars, MAX_VARS)?;
    check("total weight", w as usize, MAX_EXPONENT as usize)?;
    check("arcs", d.arcs.len() + shift as usize, MAX_ARCS)?;
    let colorings = (vars as u128).checked_pow(d.n as u32).unwrap_or(u128::MAX);
    check(
        "colorings",
        colorings.min(usize::MAX as u128) as usize,
        Limits::current().max_colorings,
    )?;
    // a loop is monochromatic under every coloring
    if proper_only && d.arcs.iter().any(|&(u, v)| u == v) {
        return Ok(());
    }
    let mut links = vec![Vec::new(); d.n];
    for &(u, v) in &d.arcs {
        match u.cmp(&v) {
            std::cmp::Ordering::Equal => links[u].push(Link::Loop),
            std::cmp::Ordering::Less => links[v].push(Link::In(u)),
            std::cmp::Ordering::Greater => links[u].push(Link::Out(v)),
        }
    }
    let mut e = Enumeration {
        links,
        weights: &d.weights,
        vars,
        proper_only,
        arcs: d.arcs.len() as u32,
        shift,
        colors: vec![0; d.n],
        out: &mut out.terms,
        inconsistent: false,
    };
    e.run(0, 0, 0, 0, 0);
    if e.inconsistent {
        return Err(Error::InternalFault(
            "ascents, descents and monochromatic arcs do not add up".into(),
        ));
    }
    Ok(())
}

fn enumerate(d: &Digraph, vars: usize, proper_only: bool) -> Result<TruncatedQFunc> {
    let mut out = TruncatedQFunc::zero(vars);
    enumerate_into(d, vars, proper_only, 0, &mut out)?;
    Ok(out)
}

/// XQ: proper colorings κ: [n] → [N] weighted by q^asc(κ) x_κ.
pub fn xq(d: &Digraph, vars: usize) -> Result<TruncatedQFunc> {
    enumerate(d, vars, true)
}

/// TQ: all colorings weighted by q^asc(κ) (1+t)^e(κ) x_κ, where e(κ)
/// counts monochromatic arcs with multiplicity.
pub fn tq(d: &Digraph, vars: usize) -> Result<TruncatedQFunc> {
    enumerate(d, vars, false)
}

/// TQ = Σ over connected partitions π of (1+t)^e(π) XQ(D/π).
pub fn tq_from_connected_partitions(d: &Digraph, vars: usize) -> Result<TruncatedQFunc> {
    check("vertices", d.n, Limits::current().max_vertices)?;
    let g = d.underlying();
    let mut out = TruncatedQFunc::zero(vars);
    for pi in g.connected_partitions() {
        let internal = g.internal_edge_count(&pi);
        let contracted = d.contract_blocks(&pi);
        enumerate_into(&contracted, vars, true, internal as u32, &mut out)?;
    }
    Ok(out)
}

/// TQ = Σ over arc subsets S of (1+t)^|S| XQ(D/S).
pub fn tq_from_arc_subsets(d: &Digraph, vars: usize) -> Result<TruncatedQFunc> {
    let m = d.arcs.len();
    check("arcs", m, Limits::current().max_subset_edges)?;
    let mut out = TruncatedQFunc::zero(vars);
    for mask in 0u32..1 << m {
        // an arc outside S that joins two merged vertices becomes a loop, and XQ vanishes
        let mut uf = UnionFind::new(d.n);
        for (i, &(u, v)) in d.arcs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                uf.union(u, v);
            }
        }
        let looped = d
            .arcs
            .iter()
            .enumerate()
            .any(|(i, &(u, v))| mask >> i & 1 == 0 && uf.find(u) == uf.find(v));
        if looped {
            continue;
        }
        let s: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
        let contracted = d.contract_arc_indices(&s)?;
        enumerate_into(&contracted, vars, true, s.len() as u32, &mut out)?;
    }
    Ok(out)
}

impl TruncatedQFunc {
    /// The total degree shared by every monomial, if homogeneous.
    pub fn degree(&self) -> Option<u32> {
        let mut degrees = self
            .terms
            .keys()
            .map(|t| unpack(t.exps(), self.vars).iter().sum::<u32>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qt(entries: &[((u32, u32), i64)]) -> QtPoly {
        entries.iter().copied().collect()
    }

    #[test]
    fn single_arc() {
        let d = Digraph::from_arcs(2, &[(0, 1)]).unwrap();
        let x = xq(&d, 2).unwrap();
        assert_eq!(x.coeff(&[1, 1]), qt(&[((0, 0), 1), ((1, 0), 1)]));
        assert_eq!(x.len(), 2);
        let t = tq(&d, 2).unwrap();
        assert_eq!(t.coeff(&[2, 0]), qt(&[((0, 0), 1), ((0, 1), 1)]));
        assert_eq!(t.coeff(&[0, 2]), qt(&[((0, 0), 1), ((0, 1), 1)]));
        assert_eq!(t.coeff(&[1, 1]), qt(&[((0, 0), 1), ((1, 0), 1)]));
        assert_eq!(tq_from_connected_partitions(&d, 2).unwrap(), t);
        assert_eq!(tq_from_arc_subsets(&d, 2).unwrap(), t);
        assert_eq!(t.degree(), Some(2));
    }

    #[test]
    fn loops_and_arcless() {
        let d = Digraph::from_arcs(1, &[(0, 0)]).unwrap();
        assert!(xq(&d, 1).unwrap().is_zero());
        let d = Digraph::from_arcs(2, &[]).unwrap();
        let x = xq(&d, 2).unwrap();
        assert_eq!(x.coeff(&[1, 1]), qt(&[((0, 0), 2)]));
        assert_eq!(x.coeff(&[2, 0]), qt(&[((0, 0), 1)]));
        assert_eq!(x, tq(&d, 2).unwrap());
    }

    #[test]
    fn two_cycle_routes() {
        let d = Digraph::from_arcs(2, &[(0, 1), (1, 0)]).unwrap();
        let t = tq(&d, 2).unwrap();
        assert_eq!(t.coeff(&[1, 1]), qt(&[((1, 0), 2)]));
        assert_eq!(t.coeff(&[2, 0]), qt(&[((0, 0), 1), ((0, 1), 2), ((0, 2), 1)]));
        assert_eq!(tq_from_arc_subsets(&d, 2).unwrap(), t);
        assert_eq!(tq_from_connected_partitions(&d, 2).unwrap(), t);
    }

    #[test]
    fn directed_path_and_weights() {
        let d = Digraph::new(3, vec![(0, 1), (2, 1)], vec![1, 2, 1]).unwrap();
        let t = tq(&d, 4).unwrap();
        assert_eq!(tq_from_connected_partitions(&d, 4).unwrap(), t);
        assert_eq!(tq_from_arc_subsets(&d, 4).unwrap(), t);
        assert_eq!(t.at_t_minus_one(), xq(&d, 4).unwrap());
        assert!(matches!(xq(&d, 3), Err(Error::TooFewVariables { .. })));
    }

    #[test]
    fn q_one_is_symmetric() {
        let d = Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0), (0, 1)]).unwrap();
        let xb = crate::invariants::tutte_sym(&d.underlying()).unwrap();
        assert_eq!(
            tq(&d, 3).unwrap().at_q_one(),
            TruncatedQFunc::from_symmetric(&xb, 3).unwrap()
        );
    }

    #[test]
    fn display() {
        let d = Digraph::from_arcs(2, &[(0, 1)]).unwrap();
        assert_eq!(tq(&d, 2).unwrap().to_string(), "x1^2: 1 + t\nx1 x2: 1 + q\nx2^2: 1 + t");
    }
}
