//! Brute-force reference implementations.
//!
//! Nothing here touches Apery sets or the enumeration tree: semigroups with a
//! fixed Frobenius number come from scanning every subset of `[1, F - 1]`,
//! pseudo-Frobenius numbers and special gaps from their definitions, and
//! generated covarieties from a fixpoint over the covariety axioms.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::OracleError;
use crate::semigroup::NumericalSemigroup;

pub const MAX_BRUTE_F: u32 = 22;

/// A proposed semigroup `{0} ∪ T ∪ {F + 1, ->}`, with bit `i` of `mask`
/// marking `i ∈ T` for `1 <= i <= F - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubsetCandidate {
    pub frobenius: u32,
    pub mask: u64,
}

impl SubsetCandidate {
    /// Closed under addition: no sum of two members of `T` lands on a
    /// non-member of `[1, F]`.
    pub fn is_semigroup(&self) -> bool {
        let window = ((1u64 << self.frobenius) - 1) << 1;
        let mut rest = self.mask;
        while rest != 0 {
            let a = rest.trailing_zeros();
            rest &= rest - 1;
            if (self.mask << a) & window & !self.mask != 0 {
                return false;
            }
        }
        true
    }

    pub fn to_semigroup(&self) -> Option<NumericalSemigroup> {
        self.is_semigroup().then(|| {
            NumericalSemigroup::from_fn_unchecked(self.frobenius as i32, |x| {
                self.mask >> x & 1 == 1
            })
        })
    }
}

/// Every numerical semigroup with Frobenius number `f`, by exhaustive scan of
/// the `2^(F-1)` candidate subsets.
pub fn brute_enumerate(f: u32) -> Result<BTreeSet<NumericalSemigroup>, OracleError> {
    if f < 1 {
        return Err(OracleError::InvalidF(f as i64));
    }
    if f > MAX_BRUTE_F {
        return Err(OracleError::TooLarge(f));
    }
    let found: Vec<u64> = (0..1u64 << (f - 1))
        .into_par_iter()
        .map(|bits| bits << 1)
        .filter(|&mask| SubsetCandidate { frobenius: f, mask }.is_semigroup())
        .collect();
    Ok(found
        .into_iter()
        .filter_map(|mask| SubsetCandidate { frobenius: f, mask }.to_semigroup())
        .collect())
}

/// Gaps `x` with `x + s ∈ S` for every nonzero `s ∈ S`.
pub fn brute_pf(s: &NumericalSemigroup) -> Result<Vec<u32>, OracleError> {
    if s.is_natural() {
        return Err(OracleError::TrivialSemigroup);
    }
    let f = s.frobenius() as i64;
    Ok((1..=f)
        .filter(|&x| !s.contains(x))
        .filter(|&x| {
            (1..=f + 1)
                .filter(|&e| s.contains(e))
                .all(|e| s.contains(x + e))
        })
        .map(|x| x as u32)
        .collect())
}

/// Gaps `x` such that `S ∪ {x}` is closed under addition.
pub fn brute_sg(s: &NumericalSemigroup) -> Result<Vec<u32>, OracleError> {
    if s.is_natural() {
        return Err(OracleError::TrivialSemigroup);
    }
    let f = s.frobenius() as i64;
    Ok((1..=f)
        .filter(|&x| !s.contains(x))
        .filter(|&x| {
            let member = |y: i64| y == x || s.contains(y);
            (1..=f)
                .filter(|&a| member(a))
                .all(|a| (a..=f).filter(|&b| member(b)).all(|b| member(a + b)))
        })
        .map(|x| x as u32)
        .collect())
}

/// Least family containing `family ∪ {delta}` that is closed under pairwise
/// intersection and under removing the multiplicity of members other than
/// `delta`.
pub fn brute_covariety_closure(
    family: &[NumericalSemigroup],
    delta: &NumericalSemigroup,
) -> Result<BTreeSet<NumericalSemigroup>, OracleError> {
    if family.iter().any(|s| !delta.is_subset(s)) {
        return Err(OracleError::DeltaNotMinimum);
    }
    let mut set: BTreeSet<NumericalSemigroup> = family.iter().cloned().collect();
    set.insert(delta.clone());
    loop {
        let current: Vec<NumericalSemigroup> = set.iter().cloned().collect();
        let mut next = set.clone();
        for (i, a) in current.iter().enumerate() {
            for b in &current[i + 1..] {
                next.insert(a.intersect(b));
            }
            if a != delta {
                let smaller = a.remove_multiplicity();
                if !delta.is_subset(&smaller) {
                    return Err(OracleError::DeltaNotMinimum);
                }
                next.insert(smaller);
            }
        }
        if next.len() == set.len() {
            return Ok(set);
        }
        set = next;
    }
}
