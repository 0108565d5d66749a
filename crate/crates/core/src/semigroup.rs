//! Membership in the numerical semigroup generated by a finite set of
//! non-negative integers, tabulated on `[0, bound]`.
//!
//! The table is filled by the recurrence `m ∈ ⟨G⟩ ⟺ m - g ∈ ⟨G⟩` for some
//! positive generator `g ≤ m`. Positions are processed in blocks no wider than
//! the smallest positive generator, so a whole block depends only on earlier
//! blocks and can be produced with a handful of shifted word reads.

use std::collections::BTreeSet;

use crate::bits::BitTable;
use crate::error::{Error, Result};

/// Bit table of `⟨generators⟩ ∩ [0, bound]`.
#[derive(Clone, PartialEq, Eq)]
pub struct MembershipTable {
    generators: Vec<usize>,
    bound: usize,
    member: BitTable,
}

impl MembershipTable {
    /// Builds the table for `⟨generators⟩` on `[0, bound]`.
    ///
    /// Generators are deduplicated and sorted; `0` is always added. A set with
    /// no positive generator yields the trivial semigroup `{0}`.
    pub fn build<I>(generators: I, bound: usize) -> Self
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set: BTreeSet<usize> = generators.into_iter().collect();
        set.insert(0);
        let mut member = BitTable::new(bound + 1);
        member.set(0);
        let mut table = MembershipTable {
            generators: set.into_iter().collect(),
            bound,
            member,
        };
        table.fill(1);
        table
    }

    /// Returns a table for the same generators on the larger range
    /// `[0, new_bound]`, reusing every entry already computed.
    pub fn extended(&self, new_bound: usize) -> Self {
        if new_bound <= self.bound {
            return self.clone();
        }
        let mut next = self.clone();
        let old = next.bound;
        next.member.resize(new_bound + 1);
        next.bound = new_bound;
        next.fill(old + 1);
        next
    }

    /// In-place variant of [`extended`](Self::extended).
    pub fn extend_to(&mut self, new_bound: usize) {
        if new_bound > self.bound {
            let old = self.bound;
            self.member.resize(new_bound + 1);
            self.bound = new_bound;
            self.fill(old + 1);
        }
    }

    fn fill(&mut self, from: usize) {
        let positive = &self.generators[1..];
        let Some(&g_min) = positive.first() else {
            return;
        };
        let block = g_min.min(64);
        let mut pos = from;
        while pos <= self.bound {
            let count = block.min(self.bound + 1 - pos);
            let mut word = 0u64;
            for &g in positive {
                if g > pos + count - 1 {
                    break;
                }
                word |= self.member.read_word(pos as isize - g as isize);
            }
            self.member.or_word(pos, word, count);
            pos += count;
        }
    }

    /// Sorted generator list, always starting with `0`.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Membership of `m`; asking beyond the tabulated bound is an error.
    pub fn contains(&self, m: usize) -> Result<bool> {
        if m > self.bound {
            return Err(Error::OutOfRange {
                index: m,
                bound: self.bound,
            });
        }
        Ok(self.member.get(m))
    }

    /// Unchecked membership; `false` beyond the bound.
    #[inline]
    pub(crate) fn has(&self, m: usize) -> bool {
        self.member.get(m)
    }

    /// Iterates the members in increasing order.
    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.member.iter_ones()
    }
}

impl std::fmt::Debug for MembershipTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("MembershipTable")
            .field("generators", &self.generators)
            .field("bound", &self.bound)
            .field("members", &self.member.count_ones())
            .finish()
    }
}

/// Free-function form of [`MembershipTable::build`].
pub fn build_membership(generators: &[usize], bound: usize) -> MembershipTable {
    MembershipTable::build(generators.iter().copied(), bound)
}
