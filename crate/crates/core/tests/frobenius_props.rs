use std::collections::BTreeSet;

use itertools::Itertools;
use semicov::frobenius::{
    af_closure, af_covariety, af_minimal_system, af_rank, bf_family, enumerate, max_rank_genus,
    max_rank_members, members, rank1_classify, rank1_count, rank1_genus,
};
use semicov::oracle::{brute_enumerate, brute_sg};
use semicov::{Covariety, EnumerateOptions, NumericalSemigroup};

fn divisors(n: u32) -> u32 {
    (1..=n).filter(|d| n.is_multiple_of(*d)).count() as u32
}

/// Coin-problem reachability, written independently of `af_closure`.
fn in_monoid(a: &[u32], target: u32) -> bool {
    let mut seen = BTreeSet::from([0u32]);
    let mut frontier = vec![0u32];
    while let Some(x) = frontier.pop() {
        for &g in a {
            let y = x + g;
            if y <= target && seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    seen.contains(&target)
}

/// Every A(F)-set: subsets of [1, F - 1] whose monoid avoids F.
fn af_sets(f: u32) -> Vec<Vec<u32>> {
    (1..f).powerset().filter(|a| !in_monoid(a, f)).collect()
}

#[test]
fn enumeration_equals_subset_scan() {
    for f in 1..=16 {
        let got: Vec<_> = members(f).unwrap();
        let set: BTreeSet<_> = got.iter().cloned().collect();
        assert_eq!(set.len(), got.len(), "duplicates at F = {f}");
        assert_eq!(set, brute_enumerate(f).unwrap(), "F = {f}");
    }
}

#[test]
fn enumeration_is_a_tree_with_the_child_rule() {
    for f in 1..=12 {
        let mut order = Vec::new();
        enumerate(f, &EnumerateOptions::default(), |n| {
            order.push(n.semigroup.clone())
        })
        .unwrap();
        let all: BTreeSet<_> = order.iter().cloned().collect();
        let delta = NumericalSemigroup::ordinary(f as i32).unwrap();
        assert_eq!(order[0], delta);
        for (i, s) in order.iter().enumerate().skip(1) {
            let parent = s.remove_multiplicity();
            let pos = order
                .iter()
                .position(|t| t == &parent)
                .expect("parent visited");
            assert!(pos < i);
        }
        for s in &order {
            let m = s.multiplicity();
            let expect: BTreeSet<_> = brute_sg(s)
                .unwrap()
                .into_iter()
                .filter(|&x| x < m && x != f)
                .map(|x| s.adjoin(x).unwrap())
                .collect();
            let actual: BTreeSet<_> = all
                .iter()
                .filter(|t| *t != &delta && &t.remove_multiplicity() == s)
                .cloned()
                .collect();
            assert_eq!(actual, expect);
        }

        let tree = af_covariety(f).unwrap().tree();
        assert_eq!(tree.edges.len() + 1, tree.vertices.len());
        let children: BTreeSet<_> = tree.edges.iter().map(|e| e.1).collect();
        assert_eq!(children.len(), tree.edges.len());
        assert!(!children.contains(&tree.root));
    }
}

#[test]
fn af_closure_is_the_least_member() {
    for f in 1..=10 {
        let all = members(f).unwrap();
        for a in af_sets(f) {
            let expect = all
                .iter()
                .filter(|s| a.iter().all(|&x| s.contains(x as i64)))
                .cloned()
                .reduce(|x, y| x.intersect(&y))
                .unwrap();
            assert_eq!(af_closure(f, &a).unwrap(), expect, "F = {f}, A = {a:?}");
        }
    }
}

#[test]
fn af_minimal_system_is_unique() {
    for f in 1..=9 {
        let c = af_covariety(f).unwrap();
        for a in af_sets(f) {
            let s = af_closure(f, &a).unwrap();
            let sys = af_minimal_system(f, &s).unwrap();
            assert!(sys.iter().all(|x| a.contains(x)), "F = {f}, A = {a:?}");
            assert_eq!(af_closure(f, &sys).unwrap(), s);
        }
        for s in c.members() {
            let sys = af_minimal_system(f, s).unwrap();
            let generic = c.minimal_csystems(s).unwrap();
            assert_eq!(generic.len(), 1);
            assert_eq!(generic[0].elements, sys);
            assert_eq!(af_rank(f, s).unwrap(), c.rank(s).unwrap());
            assert!(af_rank(f, s).unwrap() < s.multiplicity() as usize);
        }
    }
}

#[test]
fn rank_one_count_matches_divisors() {
    for f in 2..=500 {
        assert_eq!(rank1_count(f).unwrap(), (f - divisors(f)) as u64, "F = {f}");
    }
    for f in 2..=200 {
        let list = rank1_classify(f).unwrap();
        assert_eq!(list.len() as u32, f - divisors(f));
    }
}

#[test]
fn rank_one_members_match_enumeration() {
    for f in 2..=12 {
        let by_rank: BTreeSet<_> = members(f)
            .unwrap()
            .into_iter()
            .filter(|s| af_rank(f, s).unwrap() == 1)
            .collect();
        let listed: BTreeSet<_> = rank1_classify(f).unwrap().into_iter().collect();
        assert_eq!(listed, by_rank, "F = {f}");
    }
}

#[test]
fn rank_one_genus_formula() {
    for f in 2..=200 {
        for m in (1..f).filter(|m| f % m != 0) {
            let s = af_closure(f, &[m]).unwrap();
            let direct = (1..=f).filter(|&x| !s.contains(x as i64)).count() as u32;
            assert_eq!(rank1_genus(f, m).unwrap(), direct);
        }
    }
}

#[test]
fn max_rank_members_match_enumeration() {
    for f in 2..=12 {
        let filtered: BTreeSet<_> = members(f)
            .unwrap()
            .into_iter()
            .filter(|s| af_rank(f, s).unwrap() + 1 == s.multiplicity() as usize)
            .collect();
        let built: BTreeSet<_> = max_rank_members(f).unwrap().into_iter().collect();
        assert_eq!(built, filtered, "F = {f}");
    }
}

#[test]
fn max_rank_members_are_med_minus_f() {
    for f in 2..=30 {
        for s in max_rank_members(f).unwrap() {
            assert_eq!(s.frobenius(), f as i32);
            let sys = af_minimal_system(f, &s).unwrap();
            assert_eq!(sys.len() + 1, s.multiplicity() as usize);
            let mut with_f = sys.clone();
            with_f.push(f);
            let p = NumericalSemigroup::from_generators(&with_f).unwrap();
            assert!(p.is_med());
            assert_eq!(*p.msg().last().unwrap(), f);
            assert_eq!(p.remove_element(f).unwrap(), s);

            let direct = (1..=f).filter(|&x| !s.contains(x as i64)).count() as u32;
            assert_eq!(max_rank_genus(f, &sys).unwrap(), direct);
            assert_eq!(direct, p.med_genus().unwrap() + 1);
        }
    }
}

#[test]
fn bf_family_is_a_covariety() {
    for f in 1..=8 {
        let b = bf_family(f).unwrap();
        let expected: usize = 1
            + (1..=f)
                .map(|g| brute_enumerate(g).unwrap().len())
                .sum::<usize>();
        assert_eq!(b.len(), expected);
        assert_eq!(b.delta(), &NumericalSemigroup::ordinary(f as i32).unwrap());
        assert!(Covariety::validate(b.members().to_vec()).is_ok());
        let tree = b.tree();
        assert_eq!(tree.edges.len() + 1, b.len());
    }
}
