//! Set partitions in canonical restricted-growth form.
//!
//! A partition of `{0, .., n-1}` is stored as one block label per point.
//! The labeling is canonical: point 0 carries label 0 and each later point
//! carries either a label already seen or the smallest unused one. Two
//! partitions have the same block structure exactly when their label
//! sequences are equal, which makes structural comparison of
//! sigma-algebras a plain `Vec` comparison.

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::mask::SubsetMask;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    labels: Vec<usize>,
    block_count: usize,
}

impl Partition {
    /// Relabel an arbitrary key sequence by first occurrence, producing the
    /// unique restricted-growth labeling with the same block structure.
    ///
    /// Idempotent, and invariant under any injective relabeling of the keys.
    pub fn canonicalize<T: Eq + Hash>(keys: &[T]) -> Result<Self> {
        if keys.is_empty() {
            return Err(Error::EmptyGroundSet);
        }
        let mut first_seen: HashMap<&T, usize> = HashMap::new();
        let mut labels = Vec::with_capacity(keys.len());
        for key in keys {
            let next = first_seen.len();
            labels.push(*first_seen.entry(key).or_insert(next));
        }
        Ok(Partition {
            block_count: first_seen.len(),
            labels,
        })
    }

    /// The one-block partition.
    pub fn trivial(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        Ok(Partition {
            labels: vec![0; n],
            block_count: 1,
        })
    }

    /// The all-singletons partition.
    pub fn discrete(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        Ok(Partition {
            labels: (0..n).collect(),
            block_count: n,
        })
    }

    /// Number of points partitioned.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn block_count(&self) -> usize {
        self.block_count
    }

    /// Label of the block containing `point`.
    pub fn block_of(&self, point: usize) -> usize {
        self.labels[point]
    }

    /// The blocks as subset masks, ordered by least element.
    ///
    /// With canonical labels the least element of block `j` is the first
    /// occurrence of label `j`, so label order and least-element order agree.
    pub fn blocks(&self) -> Vec<SubsetMask> {
        let n = self.labels.len();
        let mut blocks = vec![SubsetMask::empty(n); self.block_count];
        for (point, &label) in self.labels.iter().enumerate() {
            blocks[label].insert(point);
        }
        blocks
    }

    /// Every partition of an `n`-point set, in lexicographic
    /// restricted-growth order. The stream starts at the one-block
    /// partition and ends at the all-singletons partition; its length is
    /// the Bell number B(n).
    pub fn enumerate(n: usize) -> Result<PartitionIter> {
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        Ok(PartitionIter {
            labels: vec![0; n],
            started: false,
            done: false,
        })
    }
}

/// Deterministic stream of all partitions of a fixed ground set.
pub struct PartitionIter {
    labels: Vec<usize>,
    started: bool,
    done: bool,
}

impl PartitionIter {
    fn current(&self) -> Partition {
        let block_count = self.labels.iter().copied().max().unwrap_or(0) + 1;
        Partition {
            labels: self.labels.clone(),
            block_count,
        }
    }

    /// Step to the lexicographically next restricted-growth string.
    fn advance(&mut self) -> bool {
        let n = self.labels.len();
        // prefix_max[i] = max label among positions 0..i
        let mut prefix_max = vec![0usize; n];
        for i in 1..n {
            prefix_max[i] = prefix_max[i - 1].max(self.labels[i - 1]);
        }
        for i in (1..n).rev() {
            if self.labels[i] <= prefix_max[i] {
                self.labels[i] += 1;
                for label in self.labels[i + 1..].iter_mut() {
                    *label = 0;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.current());
        }
        if self.advance() {
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonicalize_relabels_by_first_occurrence() {
        assert_eq!(Partition::canonicalize(&[5, 5, 2]).unwrap().labels(), &[0, 0, 1]);
        assert_eq!(
            Partition::canonicalize(&[0, 1, 0, 1]).unwrap().labels(),
            &[0, 1, 0, 1]
        );
        assert_eq!(
            Partition::canonicalize(&[7, 3, 3, 7, 1]).unwrap().labels(),
            &[0, 1, 1, 0, 2]
        );
    }

    #[test]
    fn canonicalize_rejects_empty_sequences() {
        assert_eq!(Partition::canonicalize::<i32>(&[]), Err(Error::EmptyGroundSet));
    }

    #[test]
    fn canonicalize_is_idempotent() {
        let once = Partition::canonicalize(&[9, 1, 9, 4]).unwrap();
        let twice = Partition::canonicalize(once.labels()).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn blocks_are_ordered_by_least_element() {
        let blocks = Partition::canonicalize(&[0, 0, 1]).unwrap().blocks();
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[0], SubsetMask::from_points(3, [0, 1]).unwrap());
        assert_eq!(blocks[1], SubsetMask::singleton(3, 2).unwrap());

        let discrete = Partition::discrete(3).unwrap().blocks();
        assert_eq!(
            discrete,
            vec![
                SubsetMask::singleton(3, 0).unwrap(),
                SubsetMask::singleton(3, 1).unwrap(),
                SubsetMask::singleton(3, 2).unwrap(),
            ]
        );

        let interleaved = Partition::canonicalize(&[0, 1, 0, 1]).unwrap().blocks();
        assert_eq!(interleaved[0], SubsetMask::from_points(4, [0, 2]).unwrap());
        assert_eq!(interleaved[1], SubsetMask::from_points(4, [1, 3]).unwrap());
    }

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        let all: Vec<Partition> = Partition::enumerate(3).unwrap().collect();
        let labels: Vec<&[usize]> = all.iter().map(|p| p.labels()).collect();
        assert_eq!(
            labels,
            vec![
                &[0, 0, 0][..],
                &[0, 0, 1][..],
                &[0, 1, 0][..],
                &[0, 1, 1][..],
                &[0, 1, 2][..],
            ]
        );
    }

    #[test]
    fn enumeration_counts_match_bell_numbers() {
        let bell = [1usize, 2, 5, 15, 52, 203];
        for (i, &expected) in bell.iter().enumerate() {
            let n = i + 1;
            assert_eq!(Partition::enumerate(n).unwrap().count(), expected, "B({n})");
        }
    }
}
