//! Standard semigroups and seeded random Rees matrix semigroups.
//!
//! # Random instances
//!
//! [`random_rees`] draws from [`SplitMix64`], so a seed determines the
//! instance in any implementation of the same procedure:
//!
//! ```text
//! state  = state + 0x9E3779B97F4A7C15            (wrapping)
//! z      = state
//! z      = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9  (wrapping)
//! z      = (z ^ (z >> 27)) * 0x94D049BB133111EB  (wrapping)
//! output = z ^ (z >> 31)
//! ```
//!
//! The initial state is the seed. Draws are taken in this order: the group
//! order `1 + next % max_group`, then `|X| = 1 + next % max_x`, then
//! `|Y| = 1 + next % max_y`, then the sandwich entries `next % |H|` row by
//! row (`sigma[0][0], sigma[0][1], …`). The group is always cyclic.

use std::fmt;

use thiserror::Error;

use crate::rees::ReesMatrixSemigroup;
use crate::semigroup::{closure_from_generators, CayleyTable, FiniteSemigroup, SemigroupError, Transformation};
use crate::structure::Group;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ZooError {
    #[error("{kind}: parameter {value} is out of range ({constraint})")]
    ParamOutOfRange {
        kind: &'static str,
        value: usize,
        constraint: &'static str,
    },
    #[error("unknown kind {0:?}")]
    UnknownKind(String),
    #[error("{kind} takes {expected} parameter(s), got {found}")]
    ParamCount {
        kind: &'static str,
        expected: usize,
        found: usize,
    },
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardKind {
    LeftZero(usize),
    RightZero(usize),
    RectangularBand(usize, usize),
    CyclicGroup(usize),
    ZeroSemigroup(usize),
    MinSemilattice(usize),
    SymmetricGroup(usize),
    FullTransformationMonoid(usize),
}

impl StandardKind {
    pub const NAMES: [&'static str; 8] = [
        "left-zero",
        "right-zero",
        "rectangular-band",
        "cyclic-group",
        "zero-semigroup",
        "min-semilattice",
        "symmetric-group",
        "full-transformation-monoid",
    ];

    pub fn from_name(name: &str, params: &[usize]) -> Result<Self, ZooError> {
        let kind = Self::NAMES
            .iter()
            .copied()
            .find(|&k| k == name)
            .ok_or_else(|| ZooError::UnknownKind(name.to_string()))?;
        let expected = if kind == "rectangular-band" { 2 } else { 1 };
        if params.len() != expected {
            return Err(ZooError::ParamCount {
                kind,
                expected,
                found: params.len(),
            });
        }
        let n = params[0];
        Ok(match kind {
            "left-zero" => StandardKind::LeftZero(n),
            "right-zero" => StandardKind::RightZero(n),
            "rectangular-band" => StandardKind::RectangularBand(n, params[1]),
            "cyclic-group" => StandardKind::CyclicGroup(n),
            "zero-semigroup" => StandardKind::ZeroSemigroup(n),
            "min-semilattice" => StandardKind::MinSemilattice(n),
            "symmetric-group" => StandardKind::SymmetricGroup(n),
            _ => StandardKind::FullTransformationMonoid(n),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            StandardKind::LeftZero(_) => "left-zero",
            StandardKind::RightZero(_) => "right-zero",
            StandardKind::RectangularBand(..) => "rectangular-band",
            StandardKind::CyclicGroup(_) => "cyclic-group",
            StandardKind::ZeroSemigroup(_) => "zero-semigroup",
            StandardKind::MinSemilattice(_) => "min-semilattice",
            StandardKind::SymmetricGroup(_) => "symmetric-group",
            StandardKind::FullTransformationMonoid(_) => "full-transformation-monoid",
        }
    }

    /// Order of the semigroup this kind describes.
    pub fn order(&self) -> u128 {
        match *self {
            StandardKind::LeftZero(n)
            | StandardKind::RightZero(n)
            | StandardKind::CyclicGroup(n)
            | StandardKind::ZeroSemigroup(n)
            | StandardKind::MinSemilattice(n) => n as u128,
            StandardKind::RectangularBand(k, m) => k as u128 * m as u128,
            StandardKind::SymmetricGroup(n) => (1..=n as u128).product(),
            StandardKind::FullTransformationMonoid(n) => (n as u128).pow(n as u32),
        }
    }

    fn check(&self) -> Result<(), ZooError> {
        let kind = self.name();
        let positive = |value: usize| {
            if value == 0 {
                Err(ZooError::ParamOutOfRange {
                    kind,
                    value,
                    constraint: "must be at least 1",
                })
            } else {
                Ok(())
            }
        };
        match *self {
            StandardKind::RectangularBand(k, m) => {
                positive(k)?;
                positive(m)
            }
            StandardKind::SymmetricGroup(n) if n > 5 => Err(ZooError::ParamOutOfRange {
                kind,
                value: n,
                constraint: "at most 5",
            }),
            StandardKind::FullTransformationMonoid(n) if n > 3 => Err(ZooError::ParamOutOfRange {
                kind,
                value: n,
                constraint: "at most 3",
            }),
            StandardKind::LeftZero(n)
            | StandardKind::RightZero(n)
            | StandardKind::CyclicGroup(n)
            | StandardKind::ZeroSemigroup(n)
            | StandardKind::MinSemilattice(n)
            | StandardKind::SymmetricGroup(n)
            | StandardKind::FullTransformationMonoid(n) => positive(n),
        }
    }
}

impl fmt::Display for StandardKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            StandardKind::RectangularBand(k, m) => write!(f, "{}({k},{m})", self.name()),
            StandardKind::LeftZero(n)
            | StandardKind::RightZero(n)
            | StandardKind::CyclicGroup(n)
            | StandardKind::ZeroSemigroup(n)
            | StandardKind::MinSemilattice(n)
            | StandardKind::SymmetricGroup(n)
            | StandardKind::FullTransformationMonoid(n) => write!(f, "{}({n})", self.name()),
        }
    }
}

fn t(images: Vec<usize>) -> Transformation {
    Transformation::new(images).expect("valid images")
}

fn symmetric_generators(n: usize) -> Vec<Transformation> {
    let mut gens = Vec::new();
    if n >= 2 {
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        gens.push(t(swap));
    }
    if n >= 3 {
        gens.push(t((0..n).map(|i| (i + 1) % n).collect()));
    }
    gens
}

/// Builds a standard semigroup. Closed-form kinds are associative by their
/// defining law; the symmetric groups and full transformation monoids are
/// generated by [`closure_from_generators`].
pub fn make_standard(kind: StandardKind) -> Result<FiniteSemigroup, ZooError> {
    kind.check()?;
    let trusted = |table: CayleyTable| table.assume_verified();
    Ok(match kind {
        StandardKind::LeftZero(n) => trusted(CayleyTable::from_fn(n, |a, _| a)?),
        StandardKind::RightZero(n) => trusted(CayleyTable::from_fn(n, |_, b| b)?),
        StandardKind::RectangularBand(k, m) => {
            let names = (0..k * m).map(|a| format!("({},{})", a / m, a % m)).collect();
            trusted(CayleyTable::from_fn(k * m, |a, b| (a / m) * m + b % m)?.with_names(names)?)
        }
        StandardKind::CyclicGroup(n) => trusted(CayleyTable::from_fn(n, |a, b| (a + b) % n)?),
        StandardKind::ZeroSemigroup(n) => trusted(CayleyTable::from_fn(n, |_, _| 0)?),
        StandardKind::MinSemilattice(n) => trusted(CayleyTable::from_fn(n, |a, b| a.min(b))?),
        StandardKind::SymmetricGroup(n) => {
            let mut gens = symmetric_generators(n);
            if gens.is_empty() {
                gens.push(Transformation::identity(n)?);
            }
            closure_from_generators(&gens, usize::MAX)?.semigroup
        }
        StandardKind::FullTransformationMonoid(n) => {
            // identity first, then S_n generators, then a rank n-1 map
            let mut gens = vec![Transformation::identity(n)?];
            gens.extend(symmetric_generators(n));
            if n >= 2 {
                let mut collapse: Vec<usize> = (0..n).collect();
                collapse[1] = 0;
                gens.push(t(collapse));
            }
            closure_from_generators(&gens, usize::MAX)?.semigroup
        }
    })
}

/// The SplitMix64 generator documented at the module level.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// `next % bound`.
    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }
}

/// A random Rees matrix semigroup over a cyclic group, determined by `seed`.
pub fn random_rees(seed: u64, max_group: usize, max_x: usize, max_y: usize) -> Result<ReesMatrixSemigroup, ZooError> {
    for (value, _name) in [(max_group, "max_group"), (max_x, "max_x"), (max_y, "max_y")] {
        if value == 0 {
            return Err(ZooError::ParamOutOfRange {
                kind: "random-rees",
                value,
                constraint: "bounds must be at least 1",
            });
        }
    }
    let mut rng = SplitMix64::new(seed);
    let group_order = 1 + rng.below(max_group);
    let x_size = 1 + rng.below(max_x);
    let y_size = 1 + rng.below(max_y);
    let sigma = (0..y_size)
        .map(|_| (0..x_size).map(|_| rng.below(group_order)).collect())
        .collect();
    let group = Group::cyclic(group_order)?;
    Ok(ReesMatrixSemigroup::new(group, x_size, y_size, sigma).expect("shape and entries are in range"))
}
