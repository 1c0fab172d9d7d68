//! Apery sets stored residue-indexed.

use crate::error::SemigroupError;
use crate::semigroup::{special_from_pf, NumericalSemigroup};

/// `Ap(S, n)`: `entries[i]` is the least element of `S` congruent to `i`
/// modulo `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AperyTable {
    modulus: u32,
    entries: Vec<u32>,
}

impl AperyTable {
    pub(crate) fn from_entries_unchecked(modulus: u32, entries: Vec<u32>) -> Self {
        debug_assert_eq!(entries.len(), modulus as usize);
        debug_assert_eq!(entries[0], 0);
        debug_assert!(entries
            .iter()
            .enumerate()
            .all(|(i, &w)| w as usize % modulus as usize == i));
        Self { modulus, entries }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Entries indexed by residue.
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Entries in ascending order.
    pub fn sorted(&self) -> Vec<u32> {
        let mut v = self.entries.clone();
        v.sort_unstable();
        v
    }

    /// Whether `w` belongs to the Apery set.
    #[inline]
    pub fn contains(&self, w: u32) -> bool {
        self.entries[(w % self.modulus) as usize] == w
    }

    /// Whether `s` belongs to the underlying semigroup.
    #[inline]
    pub fn is_member(&self, s: u32) -> bool {
        s >= self.entries[(s % self.modulus) as usize]
    }

    /// `max(Ap) - n`, which is `F(S)`; `-1` for the naturals.
    pub fn frobenius(&self) -> i32 {
        *self.entries.iter().max().unwrap() as i32 - self.modulus as i32
    }

    /// Maximal elements with respect to `a <= b iff b - a in S`: `w` is maximal
    /// when `w + w'` leaves the Apery set for every nonzero `w'` in it.
    pub fn maximals(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self
            .entries
            .iter()
            .copied()
            .filter(|&w| {
                self.entries
                    .iter()
                    .all(|&w2| w2 == 0 || !self.contains(w + w2))
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// `PF(S) = {w - n : w maximal}`, ascending.
    pub fn pseudo_frobenius(&self) -> Result<Vec<u32>, SemigroupError> {
        if self.frobenius() < 0 {
            return Err(SemigroupError::TrivialSemigroup);
        }
        Ok(self
            .maximals()
            .into_iter()
            .map(|w| w - self.modulus)
            .collect())
    }

    /// `SG(S) = {x in PF : 2x not in PF}`, ascending.
    pub fn special_gaps(&self) -> Result<Vec<u32>, SemigroupError> {
        Ok(special_from_pf(&self.pseudo_frobenius()?))
    }

    /// `Ap(S ∪ {x}, n)`: the entry `x + n` is replaced by `x`.
    pub fn swap(&self, x: u32) -> Result<Self, SemigroupError> {
        if self.frobenius() < 0 || self.special_gaps()?.binary_search(&x).is_err() {
            return Err(SemigroupError::NotSpecialGap(x));
        }
        let mut out = self.clone();
        out.swap_unchecked(x);
        Ok(out)
    }

    pub(crate) fn swap_unchecked(&mut self, x: u32) {
        let slot = &mut self.entries[(x % self.modulus) as usize];
        debug_assert_eq!(*slot, x + self.modulus);
        *slot = x;
    }

    /// Rebuilds the semigroup described by the table.
    pub fn to_semigroup(&self) -> NumericalSemigroup {
        NumericalSemigroup::from_fn_unchecked(self.frobenius(), |s| self.is_member(s))
    }
}
