use std::fmt;

use super::int_partition::IntPartition;
use crate::error::{Error, Result};

/// A set partition of `{0, .., n-1}` stored as its restricted growth string:
/// `rgs[v]` is the index of the block containing `v`, blocks numbered in
/// order of their minimum element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetPartition {
    rgs: Vec<u8>,
    blocks: usize,
}

impl SetPartition {
    /// Every element in its own block.
    pub fn discrete(n: usize) -> Self {
        SetPartition {
            rgs: (0..n).map(|i| i as u8).collect(),
            blocks: n,
        }
    }

    /// One block holding everything (empty for `n = 0`).
    pub fn single_block(n: usize) -> Self {
        SetPartition {
            rgs: vec![0; n],
            blocks: usize::from(n > 0),
        }
    }

    /// Builds from any block labelling; labels are renumbered by first occurrence.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut map: Vec<(usize, u8)> = Vec::new();
        let mut rgs = Vec::with_capacity(labels.len());
        for &l in labels {
            let id = match map.iter().find(|(k, _)| *k == l) {
                Some(&(_, id)) => id,
                None => {
                    let id = map.len() as u8;
                    map.push((l, id));
                    id
                }
            };
            rgs.push(id);
        }
        SetPartition {
            blocks: map.len(),
            rgs,
        }
    }

    /// Builds from 0-based blocks, which must cover `0..n` disjointly.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut label = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            for &v in block {
                if v >= n {
                    return Err(Error::ElementOutOfRange { element: v + 1, n });
                }
                if label[v] != usize::MAX {
                    return Err(Error::OverlappingBlocks(v + 1));
                }
                label[v] = b;
            }
        }
        if let Some(v) = label.iter().position(|&l| l == usize::MAX) {
            return Err(Error::InvalidInput(format!(
                "element {} is not covered by any block",
                v + 1
            )));
        }
        Ok(Self::from_labels(&label))
    }

    pub fn n(&self) -> usize {
        self.rgs.len()
    }

    /// l(π)
    pub fn num_blocks(&self) -> usize {
        self.blocks
    }

    pub fn rgs(&self) -> &[u8] {
        &self.rgs
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.rgs[v] as usize
    }

    pub fn same_block(&self, u: usize, v: usize) -> bool {
        self.rgs[u] == self.rgs[v]
    }

    /// Blocks as sorted 0-based vertex lists, ordered by minimum element.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.blocks];
        for (v, &b) in self.rgs.iter().enumerate() {
            out[b as usize].push(v);
        }
        out
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.blocks];
        for &b in &self.rgs {
            sizes[b as usize] += 1;
        }
        sizes
    }

    /// λ(π)
    pub fn lambda(&self) -> IntPartition {
        IntPartition::new(self.block_sizes().into_iter().map(|s| s as u32).collect())
    }
}

impl fmt::Display for SetPartition {
    /// Blocks with 1-based elements, e.g. `{1,3}{2}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for block in self.blocks() {
            write!(f, "{{")?;
            for (i, v) in block.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", v + 1)?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

/// λ(π): block sizes sorted descending.
pub fn lambda_of(pi: &SetPartition) -> IntPartition {
    pi.lambda()
}

/// `p(13,26)` style shorthand: the listed 1-based blocks, all other elements
/// as singletons.
pub fn p_shorthand(n: usize, blocks: &[Vec<usize>]) -> Result<SetPartition> {
    let mut label: Vec<usize> = (0..n).map(|v| blocks.len() + v).collect();
    let mut seen = vec![false; n];
    for (b, block) in blocks.iter().enumerate() {
        for &v in block {
            if v == 0 || v > n {
                return Err(Error::ElementOutOfRange { element: v, n });
            }
            if seen[v - 1] {
                return Err(Error::OverlappingBlocks(v));
            }
            seen[v - 1] = true;
            label[v - 1] = b;
        }
    }
    Ok(SetPartition::from_labels(&label))
}

/// Lending iterator over restricted growth strings of length `n` in
/// lexicographic order. Avoids allocating per partition in hot loops.
#[derive(Debug, Clone)]
pub struct RgsIter {
    rgs: Vec<u8>,
    /// `max[i]` = max of rgs[0..i], so rgs[i] may range over 0..=max[i]+1.
    max: Vec<u8>,
    started: bool,
    done: bool,
}

impl RgsIter {
    pub fn new(n: usize) -> Self {
        RgsIter {
            rgs: vec![0; n],
            max: vec![0; n],
            started: false,
            done: false,
        }
    }

    /// Advances and returns the next string, or `None` when exhausted.
    pub fn next_rgs(&mut self) -> Option<&[u8]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.rgs);
        }
        let n = self.rgs.len();
        let mut i = n;
        while i > 1 {
            i -= 1;
            if self.rgs[i] <= self.max[i] {
                self.rgs[i] += 1;
                let m = self.max[i].max(self.rgs[i]);
                for j in i + 1..n {
                    self.rgs[j] = 0;
                    self.max[j] = m;
                }
                return Some(&self.rgs);
            }
        }
        self.done = true;
        None
    }
}

/// Owning iterator over all set partitions of `n` elements.
#[derive(Debug, Clone)]
pub struct SetPartitions {
    inner: RgsIter,
}

impl Iterator for SetPartitions {
    type Item = SetPartition;
    fn next(&mut self) -> Option<SetPartition> {
        let rgs = self.inner.next_rgs()?;
        let blocks = rgs.iter().max().map_or(0, |&m| m as usize + 1);
        Some(SetPartition {
            rgs: rgs.to_vec(),
            blocks,
        })
    }
}

/// All partitions of an `n`-set, in restricted-growth-string order.
pub fn set_partitions(n: usize) -> SetPartitions {
    SetPartitions {
        inner: RgsIter::new(n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(set_partitions(0).count(), 1);
        assert_eq!(set_partitions(1).count(), 1);
        assert_eq!(set_partitions(3).count(), 5);
        assert_eq!(set_partitions(4).count(), 15);
    }

    #[test]
    fn order_is_lexicographic() {
        let all: Vec<Vec<u8>> = set_partitions(4).map(|p| p.rgs().to_vec()).collect();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        assert_eq!(all[0], vec![0, 0, 0, 0]);
        assert_eq!(all[14], vec![0, 1, 2, 3]);
    }

    #[test]
    fn shorthand() {
        let p = p_shorthand(6, &[vec![1, 3], vec![2, 6]]).unwrap();
        assert_eq!(p.to_string(), "{1,3}{2,6}{4}{5}");
        assert_eq!(p_shorthand(3, &[]).unwrap(), SetPartition::discrete(3));
        assert_eq!(
            p_shorthand(4, &[vec![1, 2, 3, 4]]).unwrap(),
            SetPartition::single_block(4)
        );
        assert!(matches!(
            p_shorthand(3, &[vec![1, 2], vec![2, 3]]),
            Err(Error::OverlappingBlocks(2))
        ));
        assert!(matches!(
            p_shorthand(3, &[vec![1, 4]]),
            Err(Error::ElementOutOfRange { element: 4, n: 3 })
        ));
    }

    #[test]
    fn lambda_readoff() {
        let p = p_shorthand(4, &[vec![1, 3]]).unwrap();
        assert_eq!(lambda_of(&p).parts(), &[2, 1, 1]);
        assert_eq!(lambda_of(&SetPartition::single_block(5)).parts(), &[5]);
        assert_eq!(lambda_of(&SetPartition::discrete(4)).parts(), &[1, 1, 1, 1]);
    }
}
