//! Shared corpus and brute-force oracles for the integration tests.
//!
//! The oracles deliberately avoid the library's algorithms: ideals are
//! grown to a fixpoint, idempotent powers are found by listing powers, and
//! Rees products are recomputed from the formula on raw tables.
#![allow(dead_code)]

use std::collections::BTreeSet;

use paragroup::rees::ReesMatrixSemigroup;
use paragroup::semigroup::{closure_from_generators, FiniteSemigroup, Transformation};
use paragroup::zoo::{make_standard, random_rees, SplitMix64, StandardKind};

pub struct Member {
    pub label: String,
    pub semigroup: FiniteSemigroup,
}

pub fn standard_kinds() -> Vec<StandardKind> {
    let mut kinds = Vec::new();
    for n in 1..=6 {
        kinds.push(StandardKind::LeftZero(n));
        kinds.push(StandardKind::RightZero(n));
        kinds.push(StandardKind::ZeroSemigroup(n));
        kinds.push(StandardKind::MinSemilattice(n));
        for m in 1..=6 {
            kinds.push(StandardKind::RectangularBand(n, m));
        }
    }
    for n in 1..=12 {
        kinds.push(StandardKind::CyclicGroup(n));
    }
    for n in 1..=4 {
        kinds.push(StandardKind::SymmetricGroup(n));
    }
    for n in 1..=3 {
        kinds.push(StandardKind::FullTransformationMonoid(n));
    }
    kinds
}

pub fn zoo() -> Vec<Member> {
    standard_kinds()
        .into_iter()
        .map(|kind| Member {
            label: kind.to_string(),
            semigroup: make_standard(kind).unwrap(),
        })
        .collect()
}

/// The 100 seeded paragroups of the acceptance sweep.
pub fn random_paragroups(count: u64) -> Vec<(u64, ReesMatrixSemigroup)> {
    (0..count)
        .map(|seed| (seed, random_rees(seed, 8, 4, 4).unwrap()))
        .collect()
}

pub fn random_sweep(count: u64) -> Vec<Member> {
    random_paragroups(count)
        .into_iter()
        .map(|(seed, r)| Member {
            label: format!("random-rees(seed {seed})"),
            semigroup: r.to_cayley(10_000).unwrap().semigroup,
        })
        .collect()
}

/// Semigroups generated by seeded random transformations of degree 3 or 4,
/// kept when their order is at most 64. Mostly not simple.
pub fn random_transformation_semigroups(count: u64) -> Vec<Member> {
    let mut out = Vec::new();
    let mut rng = SplitMix64::new(0xC0FFEE);
    let mut attempts = 0;
    while (out.len() as u64) < count && attempts < 10 * count {
        attempts += 1;
        let degree = 3 + rng.below(2);
        let gens: Vec<Transformation> = (0..1 + rng.below(2))
            .map(|_| Transformation::new((0..degree).map(|_| rng.below(degree)).collect()).unwrap())
            .collect();
        if let Ok(c) = closure_from_generators(&gens, 64) {
            let label = gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(" ");
            out.push(Member {
                label: format!("<{label}>"),
                semigroup: c.semigroup,
            });
        }
    }
    out
}

/// Zoo, random paragroups and random transformation semigroups.
pub fn full_corpus() -> Vec<Member> {
    let mut all = zoo();
    all.extend(random_sweep(100));
    all.extend(random_transformation_semigroups(40));
    all
}

pub fn small_corpus(max_order: usize) -> Vec<Member> {
    full_corpus()
        .into_iter()
        .filter(|m| m.semigroup.order() <= max_order)
        .collect()
}

/// Smallest set containing `a` and closed under multiplication by S on
/// both sides, grown to a fixpoint.
pub fn oracle_ideal(s: &FiniteSemigroup, a: usize) -> BTreeSet<usize> {
    let mut ideal = BTreeSet::from([a]);
    loop {
        let mut next = ideal.clone();
        for &m in &ideal {
            for x in 0..s.order() {
                next.insert(s.mul(x, m));
                next.insert(s.mul(m, x));
            }
        }
        if next == ideal {
            return ideal;
        }
        ideal = next;
    }
}

pub fn oracle_is_simple(s: &FiniteSemigroup) -> bool {
    (0..s.order()).all(|a| oracle_ideal(s, a).len() == s.order())
}

/// Lists `a, a², …` until a repeat and returns the idempotents among them.
pub fn oracle_idempotent_powers(s: &FiniteSemigroup, a: usize) -> Vec<usize> {
    let mut seen = Vec::new();
    let mut x = a;
    while !seen.contains(&x) {
        seen.push(x);
        x = s.mul(x, a);
    }
    seen.into_iter().filter(|&p| s.mul(p, p) == p).collect()
}

pub fn oracle_primitive(s: &FiniteSemigroup) -> Vec<usize> {
    let n = s.order();
    let idem: Vec<usize> = (0..n).filter(|&e| s.mul(e, e) == e).collect();
    idem.iter()
        .copied()
        .filter(|&e| !idem.iter().any(|&f| f != e && s.mul(e, f) == f && s.mul(f, e) == f))
        .collect()
}

/// Checks associativity of a raw table by brute force.
pub fn oracle_associative(s: &FiniteSemigroup) -> bool {
    let n = s.order();
    (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| s.mul(s.mul(i, j), k) == s.mul(i, s.mul(j, k)))))
}
