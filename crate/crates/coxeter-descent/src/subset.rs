use std::fmt;

use crate::Error;

/// A subset of the simple reflections, stored as a bitmask.
///
/// Bit `i` (from the least significant end) stands for the generator
/// `s_{i+1}`; the public API speaks 1-based generator indices throughout,
/// matching the diagram labelling. Subsets order themselves by their bitmask,
/// which is the deterministic key order used in listings and JSON output.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetMask(u16);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    /// The full set `{s_1, ..., s_rank}`.
    pub fn full(rank: usize) -> SubsetMask {
        debug_assert!(rank <= 16);
        SubsetMask(((1u32 << rank) - 1) as u16)
    }

    /// The left chain `{s_1, ..., s_j}`; `j = 0` gives the empty set.
    pub fn chain(j: usize) -> SubsetMask {
        SubsetMask::full(j)
    }

    /// Builds a subset from 1-based generator indices.
    pub fn from_indices(indices: &[usize]) -> SubsetMask {
        let mut bits = 0u16;
        for &i in indices {
            debug_assert!((1..=16).contains(&i));
            bits |= 1 << (i - 1);
        }
        SubsetMask(bits)
    }

    pub fn singleton(index: usize) -> SubsetMask {
        SubsetMask::from_indices(&[index])
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn from_bits(bits: u16) -> SubsetMask {
        SubsetMask(bits)
    }

    pub fn contains(self, index: usize) -> bool {
        (1..=16).contains(&index) && self.0 & (1 << (index - 1)) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 | other.0)
    }

    pub fn intersection(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & other.0)
    }

    pub fn minus(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & !other.0)
    }

    pub fn with(self, index: usize) -> SubsetMask {
        self.union(SubsetMask::singleton(index))
    }

    pub fn without(self, index: usize) -> SubsetMask {
        self.minus(SubsetMask::singleton(index))
    }

    /// 1-based generator indices in ascending order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (1..=16usize).filter(move |i| bits & (1 << (i - 1)) != 0)
    }

    /// All `2^rank` subsets, ascending by bitmask.
    pub fn all(rank: usize) -> impl Iterator<Item = SubsetMask> {
        (0..(1u32 << rank)).map(|b| SubsetMask(b as u16))
    }

    /// Parses the textual subset format: comma-separated 1-based indices,
    /// with `-` standing for the empty set.
    pub fn parse(input: &str, rank: usize) -> Result<SubsetMask, Error> {
        let trimmed = input.trim();
        if trimmed == "-" || trimmed.is_empty() {
            return Ok(SubsetMask::EMPTY);
        }
        let mut mask = SubsetMask::EMPTY;
        for part in trimmed.split(',') {
            let index: usize = part.trim().parse().map_err(|_| Error::Parse {
                what: "subset",
                input: input.to_string(),
            })?;
            if index == 0 || index > rank {
                return Err(Error::Parse {
                    what: "subset",
                    input: input.to_string(),
                });
            }
            mask = mask.with(index);
        }
        Ok(mask)
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "-");
        }
        let mut first = true;
        for i in self.indices() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}
