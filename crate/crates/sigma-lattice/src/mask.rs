//! Ground sets and their subsets as multi-word bit vectors.

use std::fmt;

use crate::error::{Error, Result};

/// Upper bound on ground-set sizes. Chosen so that product spaces of
/// moderate factors still fit in a handful of 64-bit words.
pub const MAX_GROUND_SIZE: usize = 4096;

/// A finite ground set; its points are `0..size`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroundSet {
    size: usize,
}

impl GroundSet {
    pub fn new(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyGroundSet);
        }
        if size > MAX_GROUND_SIZE {
            return Err(Error::CapacityExceeded {
                size,
                capacity: MAX_GROUND_SIZE,
            });
        }
        Ok(GroundSet { size })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn points(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn empty_mask(&self) -> SubsetMask {
        SubsetMask::empty(self.size)
    }

    pub fn full_mask(&self) -> SubsetMask {
        SubsetMask::full(self.size)
    }

    pub(crate) fn same_as(&self, other: GroundSet) -> Result<()> {
        if self.size == other.size {
            Ok(())
        } else {
            Err(Error::GroundSetMismatch {
                left: self.size,
                right: other.size,
            })
        }
    }
}

/// A subset of a ground set, stored as a bit vector of fixed width.
///
/// Bits at positions at or above the ground-set size are always zero, so
/// equality and hashing of the word storage coincide with set equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetMask {
    len: usize,
    words: Vec<u64>,
}

fn words_for(len: usize) -> usize {
    len.div_ceil(64)
}

impl SubsetMask {
    pub fn empty(len: usize) -> Self {
        SubsetMask {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut mask = SubsetMask {
            len,
            words: vec![!0u64; words_for(len)],
        };
        mask.clear_tail();
        mask
    }

    pub fn singleton(len: usize, point: usize) -> Result<Self> {
        let mut mask = SubsetMask::empty(len);
        mask.try_insert(point)?;
        Ok(mask)
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(len: usize, points: I) -> Result<Self> {
        let mut mask = SubsetMask::empty(len);
        for point in points {
            mask.try_insert(point)?;
        }
        Ok(mask)
    }

    /// Number of points in the ground set, not in the subset.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.len
    }

    /// Number of points in the subset.
    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn contains(&self, point: usize) -> bool {
        assert!(point < self.len, "point {point} out of range for size {}", self.len);
        self.words[point / 64] >> (point % 64) & 1 == 1
    }

    pub fn insert(&mut self, point: usize) {
        assert!(point < self.len, "point {point} out of range for size {}", self.len);
        self.words[point / 64] |= 1u64 << (point % 64);
    }

    fn try_insert(&mut self, point: usize) -> Result<()> {
        if point >= self.len {
            return Err(Error::PointOutOfRange {
                point,
                size: self.len,
            });
        }
        self.insert(point);
        Ok(())
    }

    pub fn remove(&mut self, point: usize) {
        assert!(point < self.len, "point {point} out of range for size {}", self.len);
        self.words[point / 64] &= !(1u64 << (point % 64));
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_words(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_words(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_words(other, |a, b| a & !b)
    }

    /// Pointwise negation within the ground set; an involution.
    pub fn complement(&self) -> Self {
        let mut out = self.zip_words(self, |a, _| !a);
        out.clear_tail();
        out
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "subset masks live on different ground sets");
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "subset masks live on different ground sets");
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Least point of the subset, if any.
    pub fn min_point(&self) -> Option<usize> {
        for (i, &word) in self.words.iter().enumerate() {
            if word != 0 {
                return Some(i * 64 + word.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> Points<'_> {
        Points {
            mask: self,
            word_index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    fn zip_words(&self, other: &Self, op: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.len, other.len, "subset masks live on different ground sets");
        SubsetMask {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        }
    }

    fn clear_tail(&mut self) {
        let tail = self.len % 64;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }
}

/// Iterator over the points of a subset, in increasing order.
pub struct Points<'a> {
    mask: &'a SubsetMask,
    word_index: usize,
    current: u64,
}

impl Iterator for Points<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_index += 1;
            if self.word_index >= self.mask.words.len() {
                return None;
            }
            self.current = self.mask.words[self.word_index];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_index * 64 + bit)
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, point) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{point}")?;
        }
        write!(f, "}}")
    }
}
