//! Symmetric functions with coefficients in Q[t], in the augmented monomial
//! (m̃), monomial (m), power-sum (p) and elementary (e) bases.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::Add;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::{IntPartition, Rational, TPoly};
use crate::error::{Error, Result};
use crate::limits::{check, Limits};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    MTilde,
    M,
    P,
    E,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::MTilde => "mtilde",
            Basis::M => "m",
            Basis::P => "p",
            Basis::E => "e",
        }
    }

    pub fn parse(s: &str) -> Result<Basis> {
        match s {
            "mtilde" => Ok(Basis::MTilde),
            "m" => Ok(Basis::M),
            "p" => Ok(Basis::P),
            "e" => Ok(Basis::E),
            other => Err(Error::InvalidInput(format!("unknown basis '{other}'"))),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A finite sum Σ c_λ b_λ in a declared basis. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<IntPartition, TPoly>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn single(basis: Basis, lambda: IntPartition, coeff: TPoly) -> Self {
        let mut f = Self::zero(basis);
        f.add_term(lambda, &coeff);
        f
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (IntPartition, TPoly)>) -> Self {
        let mut f = Self::zero(basis);
        for (l, c) in terms {
            f.add_term(l, &c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<IntPartition, TPoly> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &IntPartition) -> TPoly {
        self.terms.get(lambda).cloned().unwrap_or_else(TPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lambda: IntPartition, c: &TPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(lambda).or_insert_with(TPoly::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    fn same_basis(&self, other: &SymFunc) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                left: self.basis.to_string(),
                right: other.basis.to_string(),
            });
        }
        Ok(())
    }

    fn expect(&self, basis: Basis) -> Result<()> {
        if self.basis != basis {
            return Err(Error::WrongBasis {
                expected: basis.to_string(),
                got: self.basis.to_string(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        self.same_basis(other)?;
        let mut out = self.clone();
        out.add_assign_scaled(other, &TPoly::one());
        Ok(out)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.same_basis(other)?;
        let mut out = self.clone();
        out.add_assign_scaled(other, &TPoly::from_int(-1));
        Ok(out)
    }

    /// self += c·other, assuming equal bases.
    pub(crate) fn add_assign_scaled(&mut self, other: &SymFunc, c: &TPoly) {
        debug_assert_eq!(self.basis, other.basis);
        for (l, v) in &other.terms {
            self.add_term(l.clone(), &(v * c));
        }
    }

    pub fn scale(&self, c: &TPoly) -> SymFunc {
        SymFunc::from_terms(self.basis, self.terms.iter().map(|(l, v)| (l.clone(), v * c)))
    }

    /// Evaluates every coefficient at t = v.
    pub fn specialize_t(&self, v: &Rational) -> SymFunc {
        SymFunc::from_terms(
            self.basis,
            self.terms
                .iter()
                .map(|(l, c)| (l.clone(), TPoly::constant(c.eval(v)))),
        )
    }

    /// [(1+t)^k] applied coefficientwise.
    pub fn coefficient_in_onep_t(&self, k: usize) -> SymFunc {
        SymFunc::from_terms(
            self.basis,
            self.terms.iter().map(|(l, c)| {
                let powers = c.to_one_plus_t_powers();
                let ck = powers.get(k).cloned().unwrap_or_else(Rational::zero);
                (l.clone(), TPoly::constant(ck))
            }),
        )
    }

    /// m̃_λ = (Π r_i(λ)!) m_λ.
    pub fn mtilde_to_m(&self) -> Result<SymFunc> {
        self.expect(Basis::MTilde)?;
        Ok(SymFunc::from_terms(
            Basis::M,
            self.terms.iter().map(|(l, c)| {
                let f = Rational::from_integer(BigInt::from(l.aut_factor()));
                (l.clone(), c.scale(&f))
            }),
        ))
    }

    pub fn m_to_mtilde(&self) -> Result<SymFunc> {
        self.expect(Basis::M)?;
        Ok(SymFunc::from_terms(
            Basis::MTilde,
            self.terms.iter().map(|(l, c)| {
                let f = Rational::new(BigInt::one(), BigInt::from(l.aut_factor()));
                (l.clone(), c.scale(&f))
            }),
        ))
    }

    /// Expands into the m basis from any basis.
    pub fn to_m(&self) -> Result<SymFunc> {
        match self.basis {
            Basis::M => Ok(self.clone()),
            Basis::MTilde => self.mtilde_to_m(),
            Basis::P | Basis::E => {
                let cap = Limits::current().degree_cap;
                let mut out = SymFunc::zero(Basis::M);
                for (l, c) in &self.terms {
                    check("symmetric function degree", l.size(), cap)?;
                    let expansion = product_basis_in_m(self.basis, l);
                    for (mu, k) in expansion.iter() {
                        out.add_term(mu.clone(), &c.scale(&Rational::from_integer(k.clone())));
                    }
                }
                Ok(out)
            }
        }
    }

    /// Solves for the e-expansion of an m-basis function, degree by degree.
    pub fn m_to_e(&self) -> Result<SymFunc> {
        self.expect(Basis::M)?;
        let cap = Limits::current().degree_cap;
        let mut by_degree: BTreeMap<usize, Vec<(&IntPartition, &TPoly)>> = BTreeMap::new();
        for (l, c) in &self.terms {
            check("symmetric function degree", l.size(), cap)?;
            by_degree.entry(l.size()).or_default().push((l, c));
        }
        let mut out = SymFunc::zero(Basis::E);
        for (d, terms) in by_degree {
            let t = e_transition(d)?;
            for (mu, a) in terms {
                let row = &t.inverse[t.index[mu]];
                for (j, x) in row.iter().enumerate() {
                    if !x.is_zero() {
                        out.add_term(t.parts[j].clone(), &a.scale(x));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Converts to any basis, routing through m.
    pub fn to_basis(&self, basis: Basis) -> Result<SymFunc> {
        if basis == self.basis {
            return Ok(self.clone());
        }
        let m = self.to_m()?;
        match basis {
            Basis::M => Ok(m),
            Basis::MTilde => m.m_to_mtilde(),
            Basis::E => m.m_to_e(),
            Basis::P => m.m_to_p(),
        }
    }

    fn m_to_p(&self) -> Result<SymFunc> {
        self.expect(Basis::M)?;
        let cap = Limits::current().degree_cap;
        let mut out = SymFunc::zero(Basis::P);
        let mut degrees: Vec<usize> = self.terms.keys().map(|l| l.size()).collect();
        degrees.dedup();
        for l in self.terms.keys() {
            check("symmetric function degree", l.size(), cap)?;
        }
        for d in degrees {
            let t = transition(Basis::P, d)?;
            for (mu, a) in self.terms.iter().filter(|(l, _)| l.size() == d) {
                for (j, x) in t.inverse[t.index[mu]].iter().enumerate() {
                    if !x.is_zero() {
                        out.add_term(t.parts[j].clone(), &a.scale(x));
                    }
                }
            }
        }
        Ok(out)
    }

    /// σ_l: the sum of the e-basis coefficients indexed by partitions of length l.
    pub fn sigma_l(&self, l: usize) -> Result<TPoly> {
        self.expect(Basis::E)?;
        let mut acc = TPoly::zero();
        for (lambda, c) in &self.terms {
            if lambda.len() == l {
                acc += c;
            }
        }
        Ok(acc)
    }
}

impl Add for &SymFunc {
    type Output = SymFunc;
    /// Panics on a basis mismatch; use [`SymFunc::add`] for a checked sum.
    fn add(self, rhs: &SymFunc) -> SymFunc {
        SymFunc::add(self, rhs).expect("basis mismatch")
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let sym = match self.basis {
            Basis::MTilde => "m~",
            Basis::M => "m",
            Basis::P => "p",
            Basis::E => "e",
        };
        for (i, (l, c)) in self.terms.iter().rev().enumerate() {
            if !c.is_constant() {
                if i > 0 {
                    write!(f, " + ")?;
                }
                write!(f, "({c}) {sym}{l}")?;
                continue;
            }
            let c = c.constant_term();
            let neg = c < Rational::zero();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = if neg { -c } else { c };
            if !mag.is_one() {
                write!(f, "{mag} ")?;
            }
            write!(f, "{sym}{l}")?;
        }
        Ok(())
    }
}

/// Sparse m-expansion with integer coefficients.
type MExpansion = BTreeMap<IntPartition, BigInt>;

/// m_μ · m_ν in the m basis: the coefficient of m_λ counts the ways to write
/// the exponent vector λ (padded with zeros) as α + β with α a rearrangement
/// of μ and β a rearrangement of ν.
pub(crate) fn m_product(mu: &IntPartition, nu: &IntPartition) -> MExpansion {
    let len = mu.len() + nu.len();
    let mut a: Vec<u32> = mu.parts().to_vec();
    a.resize(len, 0);
    let mut b: Vec<u32> = nu.parts().to_vec();
    b.resize(len, 0);
    let alphas = distinct_permutations(&a);

    // Candidate targets from α + (ν padded), then count exact decompositions.
    let mut targets: Vec<Vec<u32>> = alphas
        .iter()
        .map(|al| {
            let mut s: Vec<u32> = al.iter().zip(&b).map(|(x, y)| x + y).collect();
            s.sort_unstable_by(|x, y| y.cmp(x));
            s
        })
        .collect();
    targets.sort();
    targets.dedup();

    let mut out = MExpansion::new();
    for target in targets {
        let mut count = 0u64;
        for al in &alphas {
            if al.iter().zip(&target).any(|(x, y)| x > y) {
                continue;
            }
            let mut rest: Vec<u32> = target.iter().zip(al).map(|(y, x)| y - x).collect();
            rest.sort_unstable_by(|x, y| y.cmp(x));
            if rest == b {
                // every β with α + β = target is determined by α
                count += 1;
            }
        }
        if count > 0 {
            out.insert(IntPartition::new(target), BigInt::from(count));
        }
    }
    out
}

pub(crate) fn distinct_permutations(v: &[u32]) -> Vec<Vec<u32>> {
    let mut sorted = v.to_vec();
    sorted.sort_unstable();
    let mut out = vec![sorted.clone()];
    // next_permutation over a multiset
    loop {
        let n = sorted.len();
        let Some(i) = (1..n).rev().find(|&i| sorted[i - 1] < sorted[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| sorted[j] > sorted[i - 1]).unwrap();
        sorted.swap(i - 1, j);
        sorted[i..].reverse();
        out.push(sorted.clone());
    }
    out
}

fn m_expansion_product(f: &MExpansion, mu: &IntPartition) -> MExpansion {
    let mut out = MExpansion::new();
    for (l, c) in f {
        for (k, d) in m_product(l, mu) {
            *out.entry(k).or_insert_with(BigInt::zero) += c * d;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// m-expansion of p_λ or e_λ as a product of p_k = m_(k) or e_k = m_(1^k).
fn product_basis_in_m(basis: Basis, lambda: &IntPartition) -> Arc<MExpansion> {
    type Cache = Mutex<HashMap<(Basis, IntPartition), Arc<MExpansion>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(&(basis, lambda.clone())) {
        return hit.clone();
    }
    let mut acc = MExpansion::new();
    acc.insert(IntPartition::empty(), BigInt::one());
    for &part in lambda.parts() {
        let factor = match basis {
            Basis::P => IntPartition::new(vec![part]),
            Basis::E => IntPartition::new(vec![1; part as usize]),
            _ => unreachable!("only multiplicative bases"),
        };
        acc = m_expansion_product(&acc, &factor);
    }
    let acc = Arc::new(acc);
    cache
        .lock()
        .unwrap()
        .insert((basis, lambda.clone()), acc.clone());
    acc
}

/// Inverse of the matrix expressing a multiplicative basis in m, for one degree.
struct Transition {
    parts: Vec<IntPartition>,
    index: HashMap<IntPartition, usize>,
    /// `inverse[μ][λ]`: coefficient of b_λ in m_μ.
    inverse: Vec<Vec<Rational>>,
}

fn e_transition(d: usize) -> Result<Arc<Transition>> {
    transition(Basis::E, d)
}

fn transition(basis: Basis, d: usize) -> Result<Arc<Transition>> {
    type Cache = Mutex<HashMap<(Basis, usize), Arc<Transition>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(&(basis, d)) {
        return Ok(hit.clone());
    }
    let parts = IntPartition::all(d);
    let index: HashMap<IntPartition, usize> =
        parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let k = parts.len();
    // a[λ][μ] = [m_μ] b_λ
    let mut a = vec![vec![Rational::zero(); k]; k];
    for (i, l) in parts.iter().enumerate() {
        for (mu, c) in product_basis_in_m(basis, l).iter() {
            a[i][index[mu]] = Rational::from_integer(c.clone());
        }
    }
    let inverse = invert(a).ok_or_else(|| {
        Error::InternalFault(format!("{basis}-to-m transition matrix in degree {d} is singular"))
    })?;
    let t = Arc::new(Transition {
        parts,
        index,
        inverse,
    });
    cache.lock().unwrap().insert((basis, d), t.clone());
    Ok(t)
}

/// Exact Gauss-Jordan inverse.
pub(crate) fn invert(mut a: Vec<Vec<Rational>>) -> Option<Vec<Vec<Rational>>> {
    let n = a.len();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let x = &f * &a[col][j];
                a[r][j] -= x;
                let y = &f * &inv[col][j];
                inv[r][j] -= y;
            }
        }
    }
    Some(inv)
}

/// Rank of a rational matrix by elimination.
pub fn rank(mut a: Vec<Vec<Rational>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &a[r][c];
            for j in c..cols {
                let x = &f * &a[r][j];
                a[i][j] -= x;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::rat;

    fn p(v: &[u32]) -> IntPartition {
        IntPartition::new(v.to_vec())
    }

    fn c(x: i64) -> TPoly {
        TPoly::from_int(x)
    }

    #[test]
    fn add_and_scale() {
        let f = SymFunc::single(Basis::MTilde, p(&[2]), c(1));
        assert_eq!(f.add(&SymFunc::zero(Basis::MTilde)).unwrap(), f);
        assert_eq!(
            f.add(&f).unwrap(),
            SymFunc::single(Basis::MTilde, p(&[2]), c(2))
        );
        let g = SymFunc::single(Basis::MTilde, p(&[1]), c(1)).scale(&TPoly::t());
        assert_eq!(g.coeff(&p(&[1])).coeffs(), &[rat(0, 1), rat(1, 1)]);
        assert!(f.add(&SymFunc::zero(Basis::M)).is_err());
        assert!(f.sub(&f).unwrap().is_zero());
    }

    #[test]
    fn mtilde_rescaling() {
        let conv = |v: &[u32]| {
            SymFunc::single(Basis::MTilde, p(v), c(1))
                .mtilde_to_m()
                .unwrap()
                .coeff(&p(v))
        };
        assert_eq!(conv(&[1, 1]), c(2));
        assert_eq!(conv(&[2]), c(1));
        assert_eq!(conv(&[2, 2, 1]), c(2));
    }

    #[test]
    fn products_into_m() {
        let p2 = SymFunc::single(Basis::P, p(&[2]), c(1)).to_m().unwrap();
        assert_eq!(p2, SymFunc::single(Basis::M, p(&[2]), c(1)));
        let e2 = SymFunc::single(Basis::E, p(&[2]), c(1)).to_m().unwrap();
        assert_eq!(e2, SymFunc::single(Basis::M, p(&[1, 1]), c(1)));
        let p11 = SymFunc::single(Basis::P, p(&[1, 1]), c(1)).to_m().unwrap();
        assert_eq!(
            p11,
            SymFunc::from_terms(Basis::M, [(p(&[2]), c(1)), (p(&[1, 1]), c(2))])
        );
    }

    #[test]
    fn m_into_e() {
        let f = SymFunc::single(Basis::M, p(&[1, 1]), c(1)).m_to_e().unwrap();
        assert_eq!(f, SymFunc::single(Basis::E, p(&[2]), c(1)));
        let f = SymFunc::single(Basis::M, p(&[2]), c(1)).m_to_e().unwrap();
        assert_eq!(
            f,
            SymFunc::from_terms(Basis::E, [(p(&[1, 1]), c(1)), (p(&[2]), c(-2))])
        );
        assert_eq!(f.sigma_l(1).unwrap(), c(-2));
        assert_eq!(f.sigma_l(2).unwrap(), c(1));
        assert!(SymFunc::zero(Basis::E).sigma_l(3).unwrap().is_zero());
        let f = SymFunc::single(Basis::M, p(&[1, 1, 1]), c(6)).m_to_e().unwrap();
        assert_eq!(f, SymFunc::single(Basis::E, p(&[3]), c(6)));
        assert!(SymFunc::single(Basis::M, p(&[1]), c(1)).sigma_l(1).is_err());
    }

    #[test]
    fn onep_t_extraction() {
        // m̃_(1,1) + (1+t) m̃_(2)
        let f = SymFunc::from_terms(
            Basis::MTilde,
            [(p(&[1, 1]), c(1)), (p(&[2]), TPoly::from_ints(&[1, 1]))],
        );
        assert_eq!(
            f.coefficient_in_onep_t(1),
            SymFunc::single(Basis::MTilde, p(&[2]), c(1))
        );
        assert_eq!(
            f.coefficient_in_onep_t(0),
            SymFunc::single(Basis::MTilde, p(&[1, 1]), c(1))
        );
        assert!(f.coefficient_in_onep_t(5).is_zero());
    }

    #[test]
    fn degree_cap() {
        let f = SymFunc::single(Basis::E, IntPartition::new(vec![1; 13]), c(1));
        assert!(matches!(f.to_m(), Err(Error::BoundExceeded { .. })));
    }
}
