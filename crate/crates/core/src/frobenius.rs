//! The covariety `A(F)` of all numerical semigroups with Frobenius number `F`.
//!
//! Members are produced level by level from the ordinary semigroup
//! `Δ = {0, F + 1, ->}`: the children of `S` are the semigroups `S ∪ {x}` with
//! `x` a special gap of `S`, `x < m(S)` and `x ≠ F`. Each frontier node carries
//! `Ap(S, F + 1)`; special gaps are read from its maximal elements and the
//! child tables are obtained by swapping a single entry.
//!
//! The module also covers the closed forms available in `A(F)`: closures are
//! monoids generated by a set plus `{F + 1, ->}`, minimal systems are unique,
//! and members of rank one and of maximum rank are classified explicitly.

use std::collections::BTreeSet;

use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuilder};

use crate::apery::AperyTable;
use crate::covariety::Covariety;
use crate::error::FrobeniusError;
use crate::semigroup::NumericalSemigroup;
use crate::MAX_FROBENIUS;

/// Level chunk processed at once in low-memory mode.
const LOW_MEMORY_CHUNK: usize = 4096;

/// A member of `A(F)` together with `Ap(S, F + 1)` and its depth below `Δ`.
#[derive(Clone, Debug)]
pub struct FrontierNode {
    pub semigroup: NumericalSemigroup,
    pub apery: AperyTable,
    pub depth: u32,
}

impl FrontierNode {
    fn root(f: u32) -> Self {
        let delta = NumericalSemigroup::ordinary(f as i32).expect("validated F");
        // Ap(Δ, F + 1) = {0, F + 2, ..., 2F + 1}
        let n = f + 1;
        let entries = (0..n).map(|i| if i == 0 { 0 } else { n + i }).collect();
        Self {
            semigroup: delta,
            apery: AperyTable::from_entries_unchecked(n, entries),
            depth: 0,
        }
    }

    fn rebuild(semigroup: NumericalSemigroup) -> Self {
        let f = semigroup.frobenius() as u32;
        let apery = semigroup.apery_unchecked(f + 1);
        let depth = f - semigroup.genus();
        Self {
            semigroup,
            apery,
            depth,
        }
    }

    /// Adjoinable elements: special gaps below the multiplicity, other than `F`.
    pub fn theta(&self) -> Vec<u32> {
        let f = self.semigroup.frobenius() as u32;
        let m = self.semigroup.multiplicity();
        self.apery
            .special_gaps()
            .expect("members of A(F) are not the naturals")
            .into_iter()
            .filter(|&x| x < m && x != f)
            .collect()
    }

    /// Children in ascending order of the adjoined element.
    pub fn children(&self) -> Vec<FrontierNode> {
        self.theta()
            .into_iter()
            .map(|x| {
                let mut apery = self.apery.clone();
                apery.swap_unchecked(x);
                FrontierNode {
                    semigroup: self.semigroup.adjoin_unchecked(x),
                    apery,
                    depth: self.depth + 1,
                }
            })
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct EnumerateOptions {
    /// Worker threads; 1 runs everything on the calling thread.
    pub workers: usize,
    /// Keep only bitsets between levels and rebuild Apery tables on demand.
    pub low_memory: bool,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        Self {
            workers: 1,
            low_memory: false,
        }
    }
}

impl EnumerateOptions {
    pub fn with_workers(workers: usize) -> Self {
        Self {
            workers,
            ..Self::default()
        }
    }

    fn pool(&self) -> Option<ThreadPool> {
        (self.workers > 1).then(|| {
            ThreadPoolBuilder::new()
                .num_threads(self.workers)
                .build()
                .expect("failed to start worker pool")
        })
    }
}

fn par_map<T: Sync, U: Send>(
    pool: Option<&ThreadPool>,
    items: &[T],
    f: impl Fn(&T) -> U + Sync + Send,
) -> Vec<U> {
    match pool {
        None => items.iter().map(f).collect(),
        Some(pool) => pool.install(|| items.par_iter().map(f).collect()),
    }
}

fn check_f(f: u32) -> Result<(), FrobeniusError> {
    if f < 1 || f > MAX_FROBENIUS as u32 {
        Err(FrobeniusError::InvalidF(f as i64))
    } else {
        Ok(())
    }
}

/// `Δ(A(F)) = {0, F + 1, ->}`.
pub fn delta(f: u32) -> Result<NumericalSemigroup, FrobeniusError> {
    check_f(f)?;
    Ok(NumericalSemigroup::ordinary(f as i32)?)
}

/// Visits every member of `A(F)` exactly once in breadth-first order.
///
/// Within a level, nodes follow their parents' order and siblings are sorted
/// by the adjoined element, so the visiting sequence does not depend on the
/// worker count. The visitor runs on the calling thread. Returns the number of
/// members.
pub fn enumerate(
    f: u32,
    opts: &EnumerateOptions,
    mut visit: impl FnMut(&FrontierNode),
) -> Result<u64, FrobeniusError> {
    check_f(f)?;
    let pool = opts.pool();
    let pool = pool.as_ref();
    let mut count = 0u64;
    if opts.low_memory {
        let mut level = vec![FrontierNode::root(f).semigroup];
        while !level.is_empty() {
            let mut next = Vec::new();
            for chunk in level.chunks(LOW_MEMORY_CHUNK) {
                let nodes = par_map(pool, chunk, |s| FrontierNode::rebuild(s.clone()));
                for node in &nodes {
                    visit(node);
                }
                count += nodes.len() as u64;
                let kids = par_map(pool, &nodes, |n| {
                    n.children()
                        .into_iter()
                        .map(|c| c.semigroup)
                        .collect::<Vec<_>>()
                });
                next.extend(kids.into_iter().flatten());
            }
            level = next;
        }
    } else {
        let mut level = vec![FrontierNode::root(f)];
        while !level.is_empty() {
            for node in &level {
                visit(node);
            }
            count += level.len() as u64;
            level = par_map(pool, &level, FrontierNode::children)
                .into_iter()
                .flatten()
                .collect();
        }
    }
    Ok(count)
}

/// Visits every member of `A(F)` exactly once with no ordering guarantee,
/// walking subtrees depth-first on the worker pool.
pub fn enumerate_unordered(
    f: u32,
    opts: &EnumerateOptions,
    visit: impl Fn(&FrontierNode) + Sync + Send,
) -> Result<u64, FrobeniusError> {
    check_f(f)?;
    fn walk(node: FrontierNode, visit: &(impl Fn(&FrontierNode) + Sync)) -> u64 {
        visit(&node);
        1 + node
            .children()
            .into_par_iter()
            .map(|c| walk(c, visit))
            .sum::<u64>()
    }
    let root = FrontierNode::root(f);
    Ok(match opts.pool() {
        Some(pool) => pool.install(|| walk(root, &visit)),
        None => {
            let mut stack = vec![root];
            let mut count = 0;
            while let Some(node) = stack.pop() {
                visit(&node);
                count += 1;
                stack.extend(node.children().into_iter().rev());
            }
            count
        }
    })
}

/// `|A(F)|`.
pub fn count(f: u32, workers: usize) -> Result<u64, FrobeniusError> {
    enumerate_unordered(f, &EnumerateOptions::with_workers(workers), |_| {})
}

/// Members of `A(F)` in enumeration order.
pub fn members(f: u32) -> Result<Vec<NumericalSemigroup>, FrobeniusError> {
    let mut out = Vec::new();
    enumerate(f, &EnumerateOptions::default(), |n| {
        out.push(n.semigroup.clone())
    })?;
    Ok(out)
}

/// `A(F)` as a covariety.
pub fn af_covariety(f: u32) -> Result<Covariety, FrobeniusError> {
    let delta = delta(f)?;
    Ok(Covariety::from_known(members(f)?, &delta))
}

/// `<A> ∪ {F + 1, ->}` for an `A(F)`-set `A`: elements in `[1, F - 1]` whose
/// generated monoid avoids `F`.
pub fn af_closure(f: u32, a: &[u32]) -> Result<NumericalSemigroup, FrobeniusError> {
    check_f(f)?;
    let not_af_set = || FrobeniusError::NotAnAFSet(a.to_vec());
    if a.iter().any(|&x| x == 0 || x >= f) {
        return Err(not_af_set());
    }
    // Coin-problem table over [0, F].
    let n = f as usize;
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for x in 1..=n {
        reach[x] = a.iter().any(|&g| g as usize <= x && reach[x - g as usize]);
    }
    if reach[n] {
        return Err(not_af_set());
    }
    Ok(NumericalSemigroup::from_fn_unchecked(f as i32, |x| {
        reach[x as usize]
    }))
}

fn check_member(f: u32, s: &NumericalSemigroup) -> Result<(), FrobeniusError> {
    check_f(f)?;
    if s.frobenius() != f as i32 {
        return Err(FrobeniusError::WrongFrobenius {
            expected: f,
            found: s.frobenius(),
        });
    }
    Ok(())
}

/// The unique `A(F)`-minimal system of generators: `msg(S) ∩ [1, F]`.
pub fn af_minimal_system(f: u32, s: &NumericalSemigroup) -> Result<Vec<u32>, FrobeniusError> {
    check_member(f, s)?;
    Ok(s.msg().iter().copied().filter(|&x| x <= f).collect())
}

pub fn af_rank(f: u32, s: &NumericalSemigroup) -> Result<usize, FrobeniusError> {
    Ok(af_minimal_system(f, s)?.len())
}

/// The rank-one members `<m> ∪ {F + 1, ->}` for `0 < m < F`, `m ∤ F`, by
/// increasing `m`.
pub fn rank1_classify(f: u32) -> Result<Vec<NumericalSemigroup>, FrobeniusError> {
    check_f(f)?;
    if f < 2 {
        return Err(FrobeniusError::InvalidF(f as i64));
    }
    (1..f)
        .filter(|m| !f.is_multiple_of(*m))
        .map(|m| af_closure(f, &[m]))
        .collect()
}

/// Number of rank-one members, counted without building them.
pub fn rank1_count(f: u32) -> Result<u64, FrobeniusError> {
    check_f(f)?;
    if f < 2 {
        return Err(FrobeniusError::InvalidF(f as i64));
    }
    Ok((1..f).filter(|m| !f.is_multiple_of(*m)).count() as u64)
}

/// Genus of `<m> ∪ {F + 1, ->}`: `F - ⌊F / m⌋`.
pub fn rank1_genus(f: u32, m: u32) -> Result<u32, FrobeniusError> {
    if m == 0 || m >= f || f.is_multiple_of(m) {
        return Err(FrobeniusError::NotRank1Form { f, m });
    }
    Ok(f - f / m)
}

/// Members of `A(F)` of rank `m(S) - 1`, in canonical order.
///
/// These are the sets `P ∖ {F}` with `P` a MED semigroup whose largest minimal
/// generator is `F`, and each such `P` is `({m} + S) ∪ {0}` with
/// `F(S) = F - 2m` and `m ∈ S`.
pub fn max_rank_members(f: u32) -> Result<Vec<NumericalSemigroup>, FrobeniusError> {
    check_f(f)?;
    if f < 2 {
        return Err(FrobeniusError::InvalidF(f as i64));
    }
    let mut out = BTreeSet::new();
    for m in 2..=f.div_ceil(2) {
        let base_f = f as i64 - 2 * m as i64;
        let bases = match base_f {
            -1 => vec![NumericalSemigroup::natural()],
            0 => continue,
            _ => members(base_f as u32)?,
        };
        for base in bases.iter().filter(|b| b.contains(m as i64)) {
            let lifted = base.med_lift(m)?;
            out.insert(lifted.remove_element(f)?);
        }
    }
    Ok(out.into_iter().collect())
}

/// Genus of a maximum-rank member from its minimal system `A`:
/// `(sum of (A ∖ {m}) ∪ {F}) / m - (m - 3) / 2`.
pub fn max_rank_genus(f: u32, a: &[u32]) -> Result<u32, FrobeniusError> {
    let not_max_rank = || FrobeniusError::NotMaxRank(a.to_vec());
    let s = af_closure(f, a).map_err(|_| not_max_rank())?;
    let mut sorted = a.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let m = s.multiplicity();
    if af_minimal_system(f, &s)? != sorted || sorted.len() + 1 != m as usize {
        return Err(not_max_rank());
    }
    let m = m as i64;
    let sum: i64 = sorted[1..].iter().map(|&x| x as i64).sum::<i64>() + f as i64;
    let num = 2 * sum - m * (m - 3);
    debug_assert_eq!(num % (2 * m), 0);
    Ok((num / (2 * m)) as u32)
}

/// `B(F)`: every numerical semigroup with Frobenius number at most `F`,
/// including the naturals.
pub fn bf_family(f: u32) -> Result<Covariety, FrobeniusError> {
    check_f(f)?;
    let mut family = vec![NumericalSemigroup::natural()];
    for g in 1..=f {
        family.extend(members(g)?);
    }
    Ok(Covariety::validate(family)?)
}
