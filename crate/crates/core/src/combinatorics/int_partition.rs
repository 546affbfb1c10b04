use std::fmt;

/// An integer partition, parts stored in weakly decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct IntPartition(Vec<u32>);

impl IntPartition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntPartition(parts)
    }

    pub fn empty() -> Self {
        IntPartition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// |λ|
    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// l(λ)
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// r_i(λ), the number of parts equal to `i`.
    pub fn multiplicity(&self, i: u32) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// Pairs (part, multiplicity) in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, r)) if *q == p => *r += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Π r_i(λ)!, the factor relating m̃_λ to m_λ.
    pub fn aut_factor(&self) -> u64 {
        self.multiplicities()
            .iter()
            .map(|&(_, r)| (1..=r as u64).product::<u64>())
            .product()
    }

    /// Union of parts (the product index for multiplicative bases).
    pub fn union(&self, other: &IntPartition) -> IntPartition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        IntPartition::new(parts)
    }

    /// All partitions of `n` in reverse lexicographic order, starting at (n).
    pub fn all(n: usize) -> Vec<IntPartition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<IntPartition>) {
            if rem == 0 {
                out.push(IntPartition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n as u32, n as u32, &mut cur, &mut out);
        out
    }
}

impl From<Vec<u32>> for IntPartition {
    fn from(parts: Vec<u32>) -> Self {
        IntPartition::new(parts)
    }
}

impl fmt::Display for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_and_counts() {
        let l = IntPartition::new(vec![1, 2, 0, 2]);
        assert_eq!(l.parts(), &[2, 2, 1]);
        assert_eq!(l.size(), 5);
        assert_eq!(l.len(), 3);
        assert_eq!(l.multiplicity(2), 2);
        assert_eq!(l.aut_factor(), 2);
        assert_eq!(l.to_string(), "(2,2,1)");
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=12).map(|n| IntPartition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
        assert_eq!(IntPartition::all(3)[0].parts(), &[3]);
    }
}
