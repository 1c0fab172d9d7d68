//! Canonical representation of a numerical semigroup.
//!
//! A numerical semigroup `S` is stored by its Frobenius number `F` and the
//! membership bitset of the window `[0, F + 1]`. Every integer above `F` is a
//! member, so the window determines `S` completely. The semigroup of all
//! natural numbers is encoded with `F = -1` and the one-bit window `{0}`.
//!
//! Derived invariants (multiplicity, genus, minimal generators,
//! pseudo-Frobenius numbers) are computed on first use and cached.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use crate::apery::AperyTable;
use crate::error::SemigroupError;
use crate::MAX_FROBENIUS;

#[derive(Clone)]
pub struct NumericalSemigroup {
    frobenius: i32,
    small: FixedBitSet,
    multiplicity: OnceLock<u32>,
    genus: OnceLock<u32>,
    msg: OnceLock<Vec<u32>>,
    pseudo_frobenius: OnceLock<Vec<u32>>,
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn check_frobenius(f: i64) -> Result<(), SemigroupError> {
    if f > MAX_FROBENIUS as i64 {
        Err(SemigroupError::TooLarge(f))
    } else {
        Ok(())
    }
}

impl NumericalSemigroup {
    /// Builds a semigroup from a window bitset that is already known to be
    /// canonical and additively closed.
    pub(crate) fn from_parts(frobenius: i32, small: FixedBitSet) -> Self {
        debug_assert_eq!(small.len(), (frobenius + 2) as usize);
        debug_assert!(small.contains(0));
        debug_assert!(frobenius < 0 || !small.contains(frobenius as usize));
        debug_assert!(small.contains((frobenius + 1) as usize));
        Self {
            frobenius,
            small,
            multiplicity: OnceLock::new(),
            genus: OnceLock::new(),
            msg: OnceLock::new(),
            pseudo_frobenius: OnceLock::new(),
        }
    }

    /// Builds the semigroup with Frobenius number `frobenius` whose members in
    /// `[0, frobenius]` are given by `member`. Closure is not checked.
    pub(crate) fn from_fn_unchecked(frobenius: i32, member: impl Fn(u32) -> bool) -> Self {
        let len = (frobenius + 2) as usize;
        let mut small = FixedBitSet::with_capacity(len);
        small.insert(0);
        for x in 1..len.saturating_sub(1) {
            if member(x as u32) {
                small.insert(x);
            }
        }
        small.insert(len - 1);
        Self::from_parts(frobenius, small)
    }

    /// Builds a semigroup from a membership predicate over `[0, bound]`,
    /// locating the Frobenius number as the last non-member. Every integer
    /// above `bound` is taken to be a member.
    #[cfg(test)]
    pub(crate) fn from_window_unchecked(bound: u32, member: impl Fn(u32) -> bool) -> Self {
        let frobenius = (1..=bound)
            .rev()
            .find(|&x| !member(x))
            .map_or(-1, |x| x as i32);
        Self::from_fn_unchecked(frobenius, member)
    }

    /// The semigroup of all natural numbers.
    pub fn natural() -> Self {
        Self::from_fn_unchecked(-1, |_| true)
    }

    /// The ordinary semigroup `{0, f + 1, ->}`; `f = -1` gives the naturals.
    pub fn ordinary(f: i32) -> Result<Self, SemigroupError> {
        check_frobenius(f as i64)?;
        assert!(f >= -1, "Frobenius numbers start at -1");
        Ok(Self::from_fn_unchecked(f, |_| false))
    }

    /// The monoid generated by `gens`, which must have gcd 1.
    pub fn from_generators(gens: &[u32]) -> Result<Self, SemigroupError> {
        if gens.is_empty() {
            return Err(SemigroupError::EmptyInput);
        }
        if gens.contains(&0) {
            return Err(SemigroupError::ZeroGenerator(0));
        }
        let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(SemigroupError::NotCoprime(g));
        }
        let m = *gens.iter().min().unwrap();
        if m == 1 {
            return Ok(Self::natural());
        }
        // 1..m are gaps, so F >= m - 1.
        check_frobenius(m as i64 - 1)?;

        // Shortest paths over residues modulo m give the Apery set of m.
        let n = m as usize;
        let mut dist = vec![u64::MAX; n];
        dist[0] = 0;
        let mut heap = BinaryHeap::from([Reverse((0u64, 0usize))]);
        while let Some(Reverse((d, r))) = heap.pop() {
            if d > dist[r] {
                continue;
            }
            for &g in gens {
                let nd = d + g as u64;
                let nr = (r + g as usize) % n;
                if nd < dist[nr] {
                    dist[nr] = nd;
                    heap.push(Reverse((nd, nr)));
                }
            }
        }
        let max = *dist.iter().max().unwrap();
        check_frobenius(max as i64 - m as i64)?;
        let entries = dist.into_iter().map(|d| d as u32).collect();
        Ok(AperyTable::from_entries_unchecked(m, entries).to_semigroup())
    }

    /// The semigroup whose gaps are exactly `gaps`.
    pub fn from_gaps(gaps: &[u32]) -> Result<Self, SemigroupError> {
        if gaps.contains(&0) {
            return Err(SemigroupError::ZeroGap);
        }
        let f = gaps.iter().copied().max().map_or(-1, |x| x as i64);
        check_frobenius(f)?;
        let f = f as i32;
        let len = (f + 2) as usize;
        let mut small = FixedBitSet::with_capacity(len);
        small.insert_range(..);
        for &g in gaps {
            small.set(g as usize, false);
        }
        // Only sums landing in [1, F] can hit a gap.
        let elements: Vec<usize> = small.ones().filter(|&x| x > 0 && x <= f as usize).collect();
        for (i, &a) in elements.iter().enumerate() {
            for &b in &elements[i..] {
                if a + b > f as usize {
                    break;
                }
                if !small.contains(a + b) {
                    return Err(SemigroupError::NotClosed(a as u32, b as u32));
                }
            }
        }
        Ok(Self::from_parts(f, small))
    }

    pub fn frobenius(&self) -> i32 {
        self.frobenius
    }

    pub fn is_natural(&self) -> bool {
        self.frobenius < 0
    }

    /// Number of bits in the membership window, `F + 2`.
    pub(crate) fn window_len(&self) -> usize {
        self.small.len()
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            false
        } else if x > self.frobenius as i64 {
            true
        } else {
            self.small.contains(x as usize)
        }
    }

    #[inline]
    pub(crate) fn contains_u(&self, x: u32) -> bool {
        x as i64 > self.frobenius as i64 || self.small.contains(x as usize)
    }

    /// Smallest nonzero element.
    pub fn multiplicity(&self) -> u32 {
        *self.multiplicity.get_or_init(|| {
            // The naturals have window {0}; the fallback then yields 1.
            self.small
                .ones()
                .find(|&x| x > 0)
                .unwrap_or(self.small.len()) as u32
        })
    }

    /// Number of gaps.
    pub fn genus(&self) -> u32 {
        *self.genus.get_or_init(|| {
            if self.is_natural() {
                0
            } else {
                self.small.count_zeroes(..) as u32
            }
        })
    }

    /// Gaps in ascending order.
    pub fn gaps(&self) -> Vec<u32> {
        if self.is_natural() {
            return Vec::new();
        }
        self.small.zeroes().map(|x| x as u32).collect()
    }

    /// Elements in `[0, F + 1]`, ascending.
    pub fn small_elements(&self) -> Vec<u32> {
        self.small.ones().map(|x| x as u32).collect()
    }

    /// The minimal system of generators, ascending.
    ///
    /// Uses the Apery set of the multiplicity: a nonzero `w` in `Ap(S, m)` is a
    /// minimal generator exactly when it is not the sum of two nonzero Apery
    /// elements.
    pub fn msg(&self) -> &[u32] {
        self.msg.get_or_init(|| {
            let m = self.multiplicity();
            let ap = self.apery_unchecked(m);
            let mut gens = vec![m];
            let mut nonzero: Vec<u32> = ap.entries().iter().copied().filter(|&w| w != 0).collect();
            nonzero.sort_unstable();
            for &w in &nonzero {
                let decomposable = nonzero
                    .iter()
                    .take_while(|&&a| 2 * a <= w)
                    .any(|&a| ap.contains(w - a));
                if !decomposable {
                    gens.push(w);
                }
            }
            gens.sort_unstable();
            gens
        })
    }

    pub fn embedding_dimension(&self) -> usize {
        self.msg().len()
    }

    /// `Ap(S, n)` for a nonzero element `n`.
    pub fn apery(&self, n: u32) -> Result<AperyTable, SemigroupError> {
        if n == 0 || !self.contains_u(n) {
            return Err(SemigroupError::NotAnElement(n as i64));
        }
        Ok(self.apery_unchecked(n))
    }

    pub(crate) fn apery_unchecked(&self, n: u32) -> AperyTable {
        let nn = n as usize;
        let mut entries = vec![u32::MAX; nn];
        let mut filled = 0;
        let mut x = 0u32;
        while filled < nn {
            if self.contains_u(x) {
                let slot = &mut entries[x as usize % nn];
                if *slot == u32::MAX {
                    *slot = x;
                    filled += 1;
                }
            }
            x += 1;
        }
        AperyTable::from_entries_unchecked(n, entries)
    }

    /// Pseudo-Frobenius numbers, ascending, read off the maximal elements of
    /// the Apery set of the multiplicity.
    pub fn pseudo_frobenius(&self) -> Result<&[u32], SemigroupError> {
        if self.is_natural() {
            return Err(SemigroupError::TrivialSemigroup);
        }
        Ok(self.pseudo_frobenius.get_or_init(|| {
            self.apery_unchecked(self.multiplicity())
                .pseudo_frobenius()
                .expect("non-trivial semigroup")
        }))
    }

    /// Special gaps: pseudo-Frobenius numbers `x` with `2x` not pseudo-Frobenius.
    pub fn special_gaps(&self) -> Result<Vec<u32>, SemigroupError> {
        let pf = self.pseudo_frobenius()?;
        Ok(special_from_pf(pf))
    }

    /// The type `t(S) = |PF(S)|`.
    pub fn type_of(&self) -> Result<u32, SemigroupError> {
        Ok(self.pseudo_frobenius()?.len() as u32)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        if other.frobenius <= self.frobenius {
            // Everything above other's window is in other.
            (0..other.window_len()).all(|x| !self.small.contains(x) || other.small.contains(x))
        } else {
            // self contains everything above its Frobenius number.
            if !(self.frobenius + 1..=other.frobenius).all(|x| other.small.contains(x as usize)) {
                return false;
            }
            self.small.is_subset(&other.small)
        }
    }

    /// `S ∩ T`; its Frobenius number is the larger of the two.
    pub fn intersect(&self, other: &Self) -> Self {
        let (big, small) = if self.frobenius >= other.frobenius {
            (self, other)
        } else {
            (other, self)
        };
        let mut bits = big.small.clone();
        for x in small.small.zeroes() {
            bits.set(x, false);
        }
        Self::from_parts(big.frobenius, bits)
    }

    /// `S ∖ {x}` for a minimal generator `x`.
    pub fn remove_element(&self, x: u32) -> Result<Self, SemigroupError> {
        if self.msg().binary_search(&x).is_err() {
            return Err(SemigroupError::NotMinimalGenerator(x));
        }
        Ok(self.remove_generator_unchecked(x))
    }

    pub(crate) fn remove_generator_unchecked(&self, x: u32) -> Self {
        let f = self.frobenius.max(x as i32);
        check_frobenius(f as i64).expect("removal grows the window by at most one step");
        let len = (f + 2) as usize;
        let mut bits = self.small.clone();
        if bits.len() < len {
            let old = bits.len();
            bits.grow(len);
            bits.insert_range(old..len);
        }
        bits.set(x as usize, false);
        Self::from_parts(f, bits)
    }

    /// `S ∖ {m(S)}`.
    pub fn remove_multiplicity(&self) -> Self {
        self.remove_generator_unchecked(self.multiplicity())
    }

    /// `S ∪ {x}` for a special gap `x`.
    pub fn adjoin(&self, x: u32) -> Result<Self, SemigroupError> {
        if self.is_natural() || self.special_gaps()?.binary_search(&x).is_err() {
            return Err(SemigroupError::NotSpecialGap(x));
        }
        Ok(self.adjoin_unchecked(x))
    }

    /// `S ∪ {x}` where `x < F(S)` is known to be a special gap.
    pub(crate) fn adjoin_unchecked(&self, x: u32) -> Self {
        if x as i32 == self.frobenius {
            let f = self
                .small
                .zeroes()
                .filter(|&g| g < x as usize)
                .last()
                .map_or(-1, |g| g as i32);
            return Self::from_fn_unchecked(f, |y| self.contains_u(y));
        }
        let mut bits = self.small.clone();
        bits.insert(x as usize);
        let out = Self::from_parts(self.frobenius, bits);
        if let Some(&m) = self.multiplicity.get() {
            let _ = out.multiplicity.set(m.min(x));
        }
        out
    }

    /// `e(S) = m(S)`.
    pub fn is_med(&self) -> bool {
        self.embedding_dimension() == self.multiplicity() as usize
    }

    /// MED test through the shift: `(S ∖ {0}) - m(S)` is a numerical semigroup.
    pub fn is_med_by_shift(&self) -> bool {
        let m = self.multiplicity();
        let f = self.frobenius;
        if f < 0 {
            return true;
        }
        // For s1, s2 in S∖{0}: s1 + s2 - m must be in S. Only sums up to F + m
        // can fail.
        let elems: Vec<u32> = self
            .small
            .ones()
            .filter(|&x| x > 0 && x <= f as usize)
            .map(|x| x as u32)
            .collect();
        for (i, &a) in elems.iter().enumerate() {
            for &b in &elems[i..] {
                let t = a + b - m;
                if t as i32 > f {
                    break;
                }
                if !self.contains_u(t) {
                    return false;
                }
            }
        }
        true
    }

    /// `({m} + S) ∪ {0}`, a MED semigroup with multiplicity `m` and Frobenius
    /// number `F(S) + m`.
    pub fn med_lift(&self, m: u32) -> Result<Self, SemigroupError> {
        if m == 0 || !self.contains_u(m) {
            return Err(SemigroupError::NotAnElement(m as i64));
        }
        if m == 1 {
            // Only the naturals contain 1, and they lift to themselves.
            return Ok(Self::natural());
        }
        let f = self.frobenius as i64 + m as i64;
        check_frobenius(f)?;
        let out = Self::from_fn_unchecked(f as i32, |x| x >= m && self.contains_u(x - m));
        let _ = out.multiplicity.set(m);
        Ok(out)
    }

    /// Inverse of [`med_lift`](Self::med_lift): returns `((P ∖ {0}) - m(P), m(P))`.
    pub fn med_unlift(&self) -> Result<(Self, u32), SemigroupError> {
        if !self.is_med() {
            return Err(SemigroupError::NotMed);
        }
        let m = self.multiplicity();
        let f = (self.frobenius - m as i32).max(-1);
        Ok((Self::from_fn_unchecked(f, |x| self.contains_u(x + m)), m))
    }

    /// Genus of a MED semigroup from its minimal generators:
    /// `(sum of msg ∖ {m}) / m - (m - 1) / 2`.
    pub fn med_genus(&self) -> Result<u32, SemigroupError> {
        if !self.is_med() {
            return Err(SemigroupError::NotMed);
        }
        let m = self.multiplicity() as u64;
        let sum: u64 = self.msg()[1..].iter().map(|&x| x as u64).sum();
        let num = 2 * sum - m * (m - 1);
        debug_assert_eq!(num % (2 * m), 0);
        Ok((num / (2 * m)) as u32)
    }

    /// Irreducible: not an intersection of two semigroups properly containing
    /// it. Equivalently, maximal among semigroups with the same Frobenius
    /// number, i.e. no special gap other than `F`.
    pub fn is_irreducible(&self) -> bool {
        if self.is_natural() {
            return true;
        }
        let f = self.frobenius as u32;
        self.special_gaps()
            .expect("non-trivial semigroup")
            .iter()
            .all(|&x| x == f)
    }
}

pub(crate) fn special_from_pf(pf: &[u32]) -> Vec<u32> {
    pf.iter()
        .copied()
        .filter(|&x| pf.binary_search(&(2 * x)).is_err())
        .collect()
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.frobenius == other.frobenius && self.small == other.small
    }
}

impl Eq for NumericalSemigroup {}

impl Hash for NumericalSemigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.frobenius.hash(state);
        self.small.as_slice().hash(state);
    }
}

impl Ord for NumericalSemigroup {
    /// Frobenius number first, then the ascending element lists of the
    /// windows, lexicographically.
    fn cmp(&self, other: &Self) -> Ordering {
        self.frobenius.cmp(&other.frobenius).then_with(|| {
            for (a, b) in self.small.as_slice().iter().zip(other.small.as_slice()) {
                let diff = a ^ b;
                if diff != 0 {
                    let low = diff & diff.wrapping_neg();
                    // The side holding the element has the smaller element
                    // list at that position.
                    return if a & low != 0 {
                        Ordering::Less
                    } else {
                        Ordering::Greater
                    };
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for NumericalSemigroup {
    /// `{0,5,7,9,10,12,14,->}` style.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for x in self.small.ones() {
            write!(f, "{x},")?;
        }
        f.write_str("->}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u32]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn generators_5_7_9() {
        let s = sg(&[5, 7, 9]);
        assert_eq!(s.frobenius(), 13);
        assert_eq!(s.small_elements(), vec![0, 5, 7, 9, 10, 12, 14]);
        assert_eq!(s.msg(), &[5, 7, 9]);
    }

    #[test]
    fn generators_4_6_9() {
        let s = sg(&[4, 6, 9]);
        assert_eq!(s.frobenius(), 11);
        assert_eq!(s.small_elements(), vec![0, 4, 6, 8, 9, 10, 12]);
    }

    #[test]
    fn generator_one_is_naturals() {
        let s = sg(&[1]);
        assert!(s.is_natural());
        assert_eq!(s.frobenius(), -1);
        assert_eq!(s.msg(), &[1]);
        assert_eq!(s, NumericalSemigroup::natural());
        assert_eq!(sg(&[3, 1, 7]), s);
    }

    #[test]
    fn generator_errors() {
        assert_eq!(
            NumericalSemigroup::from_generators(&[]).unwrap_err(),
            SemigroupError::EmptyInput
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6]).unwrap_err(),
            SemigroupError::NotCoprime(2)
        );
        assert!(matches!(
            NumericalSemigroup::from_generators(&[0, 3]).unwrap_err(),
            SemigroupError::ZeroGenerator(_)
        ));
        assert!(matches!(
            NumericalSemigroup::from_generators(&[70000, 70001]).unwrap_err(),
            SemigroupError::TooLarge(_)
        ));
    }

    #[test]
    fn membership() {
        let s = sg(&[5, 7, 9]);
        assert!(!s.contains(13));
        assert!(s.contains(14));
        assert!(s.contains(0));
        assert!(!s.contains(-3));
        assert!(s.contains(1000));
        assert!(NumericalSemigroup::natural().contains(0));
    }

    #[test]
    fn msg_of_ordinary() {
        let s = NumericalSemigroup::ordinary(5).unwrap();
        assert_eq!(s.msg(), &[6, 7, 8, 9, 10, 11]);
        assert!(s.is_med());
    }

    #[test]
    fn from_gaps_checks_closure() {
        let s = NumericalSemigroup::from_gaps(&[1, 2, 3, 4, 6, 8, 11, 13]).unwrap();
        assert_eq!(s, sg(&[5, 7, 9]));
        assert_eq!(
            NumericalSemigroup::from_gaps(&[1, 2, 4, 5, 6, 7]).unwrap_err(),
            SemigroupError::NotClosed(3, 3)
        );
        assert_eq!(
            NumericalSemigroup::from_gaps(&[0, 1]).unwrap_err(),
            SemigroupError::ZeroGap
        );
        assert!(NumericalSemigroup::from_gaps(&[]).unwrap().is_natural());
    }

    #[test]
    fn apery_of_ordinary() {
        let s = NumericalSemigroup::ordinary(4).unwrap();
        let mut ap = s.apery(5).unwrap().entries().to_vec();
        ap.sort();
        assert_eq!(ap, vec![0, 6, 7, 8, 9]);
        let s = NumericalSemigroup::ordinary(5).unwrap();
        let mut ap = s.apery(6).unwrap().entries().to_vec();
        ap.sort();
        assert_eq!(ap, vec![0, 7, 8, 9, 10, 11]);
        assert_eq!(
            NumericalSemigroup::natural().apery(1).unwrap().entries(),
            &[0]
        );
        assert_eq!(s.apery(3).unwrap_err(), SemigroupError::NotAnElement(3));
        assert_eq!(s.apery(0).unwrap_err(), SemigroupError::NotAnElement(0));
    }

    #[test]
    fn pf_and_sg_of_ordinary() {
        let s = NumericalSemigroup::ordinary(4).unwrap();
        assert_eq!(s.pseudo_frobenius().unwrap(), &[1, 2, 3, 4]);
        assert_eq!(s.special_gaps().unwrap(), vec![3, 4]);
        assert_eq!(s.type_of().unwrap(), 4);
        let s = NumericalSemigroup::ordinary(5).unwrap();
        assert_eq!(s.special_gaps().unwrap(), vec![3, 4, 5]);
        let s = NumericalSemigroup::ordinary(1).unwrap();
        assert_eq!(s.special_gaps().unwrap(), vec![1]);
        assert_eq!(
            NumericalSemigroup::natural()
                .pseudo_frobenius()
                .unwrap_err(),
            SemigroupError::TrivialSemigroup
        );
        assert_eq!(
            NumericalSemigroup::natural().type_of().unwrap_err(),
            SemigroupError::TrivialSemigroup
        );
    }

    #[test]
    fn pf_of_0_2_4_5() {
        // gaps {1, 3}: PF = {3} since 1 + 2 = 3 is a gap.
        let s = NumericalSemigroup::from_gaps(&[1, 3]).unwrap();
        assert_eq!(s.pseudo_frobenius().unwrap(), &[3]);
    }

    #[test]
    fn intersection() {
        let a = sg(&[5, 7, 9]);
        let b = sg(&[4, 6, 9]);
        let c = a.intersect(&b);
        assert_eq!(c.frobenius(), 13);
        assert_eq!(a.intersect(&a), a);
        assert!(c.is_subset(&a) && c.is_subset(&b));
        assert!(!a.is_subset(&b) && !b.is_subset(&a));
        let delta = NumericalSemigroup::ordinary(13).unwrap();
        assert_eq!(delta.intersect(&a), delta);
        assert_eq!(a.intersect(&NumericalSemigroup::natural()), a);
    }

    #[test]
    fn remove_elements() {
        let s = NumericalSemigroup::ordinary(4).unwrap();
        assert_eq!(
            s.remove_element(5).unwrap(),
            NumericalSemigroup::ordinary(5).unwrap()
        );
        let s = sg(&[5, 7, 9]);
        let t = s.remove_element(5).unwrap();
        assert_eq!(t.genus(), s.genus() + 1);
        assert_eq!(t.multiplicity(), 7);
        assert_eq!(
            s.remove_element(10).unwrap_err(),
            SemigroupError::NotMinimalGenerator(10)
        );
        assert_eq!(
            NumericalSemigroup::natural().remove_element(1).unwrap(),
            NumericalSemigroup::ordinary(1).unwrap()
        );
    }

    #[test]
    fn multiplicity_chain_reaches_ordinary() {
        let s = sg(&[5, 7, 9]);
        let target = NumericalSemigroup::ordinary(13).unwrap();
        let mut cur = s.clone();
        let mut steps = 0;
        while cur != target {
            let next = cur.remove_element(cur.multiplicity()).unwrap();
            assert_eq!(next.genus(), cur.genus() + 1);
            assert!(next.multiplicity() > cur.multiplicity());
            cur = next;
            steps += 1;
        }
        assert_eq!(steps, target.genus() - s.genus());
    }

    #[test]
    fn invariants_small_cases() {
        let s = NumericalSemigroup::ordinary(14).unwrap();
        assert_eq!(s.multiplicity(), 15);
        assert_eq!(s.genus(), 14);
        let s =
            NumericalSemigroup::from_gaps(&[1, 2, 3, 4, 5, 7, 8, 9, 10, 11, 13, 14, 15]).unwrap();
        assert_eq!(s.genus(), 13);
        assert_eq!(s.embedding_dimension(), s.msg().len());
    }

    #[test]
    fn med_examples() {
        let base = sg(&[5, 7, 9]);
        let t = base.med_lift(7).unwrap();
        assert!(t.is_med() && t.is_med_by_shift());
        assert_eq!(t.multiplicity(), 7);
        assert_eq!(t.frobenius(), 20);
        assert_eq!(*t.msg().last().unwrap(), 27);
        assert_eq!(t.med_unlift().unwrap(), (base.clone(), 7));
        assert_eq!(t.med_genus().unwrap(), t.genus());

        assert!(!base.is_med());
        assert!(!base.is_med_by_shift());
        assert_eq!(base.med_unlift().unwrap_err(), SemigroupError::NotMed);
        assert_eq!(
            base.med_lift(6).unwrap_err(),
            SemigroupError::NotAnElement(6)
        );

        let n = NumericalSemigroup::natural();
        assert!(n.is_med() && n.is_med_by_shift());
        assert_eq!(n.med_lift(1).unwrap(), n);
        assert_eq!(n.med_unlift().unwrap(), (n.clone(), 1));
        assert_eq!(n.med_genus().unwrap(), 0);

        let s23 = sg(&[2, 3]);
        assert!(s23.is_med());
        assert_eq!(s23.med_genus().unwrap(), 1);
    }

    #[test]
    fn adjoin_special_gap() {
        let s = NumericalSemigroup::ordinary(4).unwrap();
        let t = s.adjoin(3).unwrap();
        assert_eq!(t.small_elements(), vec![0, 3, 5]);
        assert_eq!(t.frobenius(), 4);
        assert_eq!(s.adjoin(2).unwrap_err(), SemigroupError::NotSpecialGap(2));
        let u = s.adjoin(4).unwrap();
        assert_eq!(u, NumericalSemigroup::ordinary(3).unwrap());
        assert_eq!(
            NumericalSemigroup::ordinary(1).unwrap().adjoin(1).unwrap(),
            NumericalSemigroup::natural()
        );
    }

    #[test]
    fn irreducible() {
        // <3,5> is symmetric, hence irreducible; ordinary ones with F >= 3 are not.
        assert!(sg(&[3, 5]).is_irreducible());
        assert!(!NumericalSemigroup::ordinary(5).unwrap().is_irreducible());
    }

    #[test]
    fn canonical_order() {
        let a = NumericalSemigroup::ordinary(5).unwrap();
        let b = a.adjoin(3).unwrap();
        let c = a.adjoin(4).unwrap();
        assert!(b < c && c < a);
        assert!(NumericalSemigroup::natural() < NumericalSemigroup::ordinary(1).unwrap());
    }
}
