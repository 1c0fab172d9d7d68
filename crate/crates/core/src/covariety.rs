//! Covarieties stored as explicit finite families.
//!
//! A covariety is a nonempty family of numerical semigroups that has a
//! minimum `Δ`, is closed under intersection, and contains `S ∖ {m(S)}` for
//! every member `S ≠ Δ`. Every covariety is finite, so it is kept as a sorted
//! member list; membership and index lookups are binary searches in the
//! canonical semigroup order.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::CovarietyError;
use crate::semigroup::NumericalSemigroup;

/// Largest number of candidate elements searched by the subset enumeration
/// behind [`Covariety::minimal_csystems`] and [`Covariety::rank`].
pub const MAX_SUBSET_CANDIDATES: usize = 26;

#[derive(Clone, Debug)]
pub struct Covariety {
    members: Vec<NumericalSemigroup>,
    delta: usize,
    maximal: OnceLock<Vec<usize>>,
}

/// A subset of `M ∖ Δ` for some maximal member `M`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CSet {
    pub elements: Vec<u32>,
    /// Position of a hosting maximal member in [`Covariety::members`].
    pub host: usize,
}

/// `Cad(S)`: `S` followed by repeated removal of the multiplicity until the
/// ordinary semigroup `{0, F + 1, ->}` is reached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainCad {
    pub frobenius_bound: i32,
    pub links: Vec<NumericalSemigroup>,
}

impl ChainCad {
    pub fn base(&self) -> &NumericalSemigroup {
        &self.links[0]
    }

    pub fn len(&self) -> usize {
        self.links.len()
    }

    pub fn is_empty(&self) -> bool {
        self.links.is_empty()
    }
}

/// Rooted tree on the members: the parent of `S ≠ Δ` is `S ∖ {m(S)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationTree {
    pub vertices: Vec<NumericalSemigroup>,
    pub root: usize,
    /// `(parent, child)` index pairs into `vertices`.
    pub edges: Vec<(usize, usize)>,
}

impl EnumerationTree {
    pub fn parent_of(&self, child: usize) -> Option<usize> {
        self.edges.iter().find(|e| e.1 == child).map(|e| e.0)
    }
}

impl Covariety {
    /// Checks the three covariety axioms, reporting the first violation.
    ///
    /// Witness indices refer to the family after canonical sorting and
    /// deduplication, which is also the order of [`members`](Self::members).
    pub fn validate(
        family: impl IntoIterator<Item = NumericalSemigroup>,
    ) -> Result<Self, CovarietyError> {
        let members: Vec<NumericalSemigroup> = family
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if members.is_empty() {
            return Err(CovarietyError::EmptyFamily);
        }
        let delta = members
            .iter()
            .position(|d| members.iter().all(|s| d.is_subset(s)))
            .ok_or(CovarietyError::NoMinimum)?;

        let pairs: Vec<(usize, usize)> = (0..members.len())
            .flat_map(|i| (i + 1..members.len()).map(move |j| (i, j)))
            .collect();
        let bad_pair = pairs.par_iter().find_first(|&&(i, j)| {
            members
                .binary_search(&members[i].intersect(&members[j]))
                .is_err()
        });
        if let Some(&(i, j)) = bad_pair {
            return Err(CovarietyError::NotIntersectionClosed(i, j));
        }
        if let Some(i) = (0..members.len()).filter(|&i| i != delta).find(|&i| {
            members
                .binary_search(&members[i].remove_multiplicity())
                .is_err()
        }) {
            return Err(CovarietyError::NotMultiplicityRemovalClosed(i));
        }
        Ok(Self {
            members,
            delta,
            maximal: OnceLock::new(),
        })
    }

    /// Wraps a family already known to be a covariety with minimum `delta`.
    pub(crate) fn from_known(
        members: impl IntoIterator<Item = NumericalSemigroup>,
        delta: &NumericalSemigroup,
    ) -> Self {
        let members: Vec<NumericalSemigroup> = members
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let delta = members.binary_search(delta).expect("delta is a member");
        Self {
            members,
            delta,
            maximal: OnceLock::new(),
        }
    }

    /// Members in canonical order.
    pub fn members(&self) -> &[NumericalSemigroup] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn delta(&self) -> &NumericalSemigroup {
        &self.members[self.delta]
    }

    pub fn delta_index(&self) -> usize {
        self.delta
    }

    pub fn index_of(&self, s: &NumericalSemigroup) -> Option<usize> {
        self.members.binary_search(s).ok()
    }

    pub fn contains(&self, s: &NumericalSemigroup) -> bool {
        self.index_of(s).is_some()
    }

    /// Indices of members with no proper superset in the family.
    pub fn maximal_indices(&self) -> &[usize] {
        self.maximal.get_or_init(|| {
            (0..self.members.len())
                .into_par_iter()
                .filter(|&i| {
                    let s = &self.members[i];
                    !self.members.iter().any(|t| t != s && s.is_subset(t))
                })
                .collect()
        })
    }

    pub fn maximal_members(&self) -> Vec<&NumericalSemigroup> {
        self.maximal_indices()
            .iter()
            .map(|&i| &self.members[i])
            .collect()
    }

    /// Validates `elements` as a C-set: positive integers outside `Δ`, all
    /// inside one maximal member.
    pub fn cset(&self, elements: &[u32]) -> Result<CSet, CovarietyError> {
        let elements: Vec<u32> = elements.iter().copied().sorted_unstable().dedup().collect();
        let not_cset = || CovarietyError::NotACSet(elements.clone());
        let delta = self.delta();
        if elements.iter().any(|&x| x == 0 || delta.contains(x as i64)) {
            return Err(not_cset());
        }
        let host = self
            .maximal_indices()
            .iter()
            .copied()
            .find(|&i| elements.iter().all(|&x| self.members[i].contains(x as i64)))
            .ok_or_else(not_cset)?;
        Ok(CSet { elements, host })
    }

    /// `C(A)`: the intersection of all members containing the C-set `A`, which
    /// is the least member containing it.
    pub fn closure(&self, elements: &[u32]) -> Result<NumericalSemigroup, CovarietyError> {
        let cset = self.cset(elements)?;
        Ok(self.closure_unchecked(&cset.elements))
    }

    fn closure_unchecked(&self, elements: &[u32]) -> NumericalSemigroup {
        self.members
            .iter()
            .filter(|s| elements.iter().all(|&x| s.contains(x as i64)))
            .fold(None::<NumericalSemigroup>, |acc, s| {
                Some(match acc {
                    None => s.clone(),
                    Some(a) => a.intersect(s),
                })
            })
            .expect("a C-set lies in some member")
    }

    fn member_index(&self, s: &NumericalSemigroup) -> Result<usize, CovarietyError> {
        self.index_of(s).ok_or(CovarietyError::NotMember)
    }

    /// Candidate elements for generating sets of `s`: the elements of `S ∖ Δ`
    /// other than the multiplicity, which every generating set must contain.
    fn search_space(&self, s: &NumericalSemigroup) -> Result<Vec<u32>, CovarietyError> {
        let delta = self.delta();
        let m = s.multiplicity();
        let top = delta.frobenius().max(0) as u32;
        let rest: Vec<u32> = (1..=top)
            .filter(|&x| x != m && s.contains(x as i64) && !delta.contains(x as i64))
            .collect();
        if rest.len() > MAX_SUBSET_CANDIDATES {
            return Err(CovarietyError::SearchTooLarge(rest.len()));
        }
        Ok(rest)
    }

    /// All inclusion-minimal C-sets `A` with `C(A) = s`, by increasing size
    /// and then lexicographically. Minimal systems need not be unique.
    pub fn minimal_csystems(&self, s: &NumericalSemigroup) -> Result<Vec<CSet>, CovarietyError> {
        self.member_index(s)?;
        if s == self.delta() {
            return Ok(vec![self.cset(&[])?]);
        }
        let m = s.multiplicity();
        let rest = self.search_space(s)?;
        let mut found: Vec<Vec<u32>> = Vec::new();
        for k in 0..=rest.len() {
            for combo in rest.iter().copied().combinations(k) {
                let mut a = Vec::with_capacity(k + 1);
                a.push(m);
                a.extend(combo);
                a.sort_unstable();
                // Closure is monotone: a superset of a generating set generates.
                if found
                    .iter()
                    .any(|f| f.iter().all(|x| a.binary_search(x).is_ok()))
                {
                    continue;
                }
                if &self.closure_unchecked(&a) == s {
                    found.push(a);
                }
            }
        }
        found.into_iter().map(|a| self.cset(&a)).collect()
    }

    /// `min |A|` over C-sets `A` with `C(A) = s`.
    pub fn rank(&self, s: &NumericalSemigroup) -> Result<usize, CovarietyError> {
        self.member_index(s)?;
        if s == self.delta() {
            return Ok(0);
        }
        let m = s.multiplicity();
        let rest = self.search_space(s)?;
        for k in 0..=rest.len() {
            for combo in rest.iter().copied().combinations(k) {
                let mut a = combo;
                a.push(m);
                if &self.closure_unchecked(&a) == s {
                    return Ok(k + 1);
                }
            }
        }
        unreachable!("S ∖ Δ generates S")
    }

    /// The tree whose edges join `S ∖ {m(S)}` to `S`.
    pub fn tree(&self) -> EnumerationTree {
        let edges = (0..self.members.len())
            .filter(|&i| i != self.delta)
            .map(|i| {
                let parent = self.members[i].remove_multiplicity();
                (
                    self.index_of(&parent)
                        .expect("closed under multiplicity removal"),
                    i,
                )
            })
            .collect();
        EnumerationTree {
            vertices: self.members.clone(),
            root: self.delta,
            edges,
        }
    }
}

/// `Cad(S)` down to `{0, f + 1, ->}`.
pub fn chain_cad(s: &NumericalSemigroup, f: i32) -> Result<ChainCad, CovarietyError> {
    if f < s.frobenius() {
        return Err(CovarietyError::FrobeniusTooSmall {
            bound: f,
            frobenius: s.frobenius(),
        });
    }
    let bottom = NumericalSemigroup::ordinary(f)?;
    let mut links = vec![s.clone()];
    while links.last().unwrap() != &bottom {
        let next = links.last().unwrap().remove_multiplicity();
        links.push(next);
    }
    Ok(ChainCad {
        frobenius_bound: f,
        links,
    })
}

/// The smallest covariety containing `family`.
///
/// With `F` the largest Frobenius number in the family, the result is the set
/// of intersections of chain elements `T_b ∈ Cad(S_b)` over nonempty index
/// sets `B`; it is computed by closing the union of the chains under pairwise
/// intersection.
pub fn generated_covariety(family: &[NumericalSemigroup]) -> Result<Covariety, CovarietyError> {
    let f = family
        .iter()
        .map(NumericalSemigroup::frobenius)
        .max()
        .ok_or(CovarietyError::EmptyFamily)?;
    let mut set = BTreeSet::new();
    for s in family {
        set.extend(chain_cad(s, f)?.links);
    }
    let mut all: Vec<NumericalSemigroup> = set.iter().cloned().collect();
    let mut fresh = all.clone();
    while !fresh.is_empty() {
        let found: BTreeSet<NumericalSemigroup> = fresh
            .par_iter()
            .flat_map_iter(|a| all.iter().map(move |b| a.intersect(b)))
            .filter(|t| !set.contains(t))
            .collect();
        fresh = found.into_iter().collect();
        set.extend(fresh.iter().cloned());
        all.extend(fresh.iter().cloned());
    }
    let delta = NumericalSemigroup::ordinary(f)?;
    Ok(Covariety::from_known(set, &delta))
}
