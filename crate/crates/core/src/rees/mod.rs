//! Rees matrix semigroups `[X, H, Y]_σ` over a finite group.
//!
//! Elements are triples `(x, h, y)` multiplied by
//! `(x, h, y)·(x′, h′, y′) = (x, h·σ(y, x′)·h′, y′)`, with the sandwich
//! matrix indexed `sigma[y][x]`. Triples are enumerated x-major, then by
//! group element, then by `y`; that order is also the element order of
//! [`ReesMatrixSemigroup::to_cayley`].

use std::fmt;

use thiserror::Error;

use crate::semigroup::{CayleyTable, FiniteSemigroup, SemigroupError};
use crate::structure::{Group, NotCompletelySimple, StructureError};

mod decompose;
mod normalize;

pub use decompose::{
    decompose, rees_inverse_map, rees_map, verify_decomposition, ReesDecomposition, VerificationReport,
};
pub use normalize::{normalize_sandwich, NormalizedSandwich};

pub const DEFAULT_MAX_ORDER: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReesError {
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("index sets must be nonempty (|X| = {x_size}, |Y| = {y_size})")]
    EmptyIndexSet { x_size: usize, y_size: usize },
    #[error("sigma must have {expected_rows} rows of {expected_cols} entries; row {row} has {len}")]
    SigmaShape {
        expected_rows: usize,
        expected_cols: usize,
        row: usize,
        len: usize,
    },
    #[error("sigma has {rows} rows, expected {expected}")]
    SigmaRows { rows: usize, expected: usize },
    #[error("sigma[{y}][{x}] = {value} is not an element of a group of order {order}")]
    SigmaEntryOutOfRange {
        y: usize,
        x: usize,
        value: usize,
        order: usize,
    },
    #[error("triple {triple} is out of range for shape ({x_size}, {group_order}, {y_size})")]
    ComponentOutOfRange {
        triple: ReesTriple,
        x_size: usize,
        group_order: usize,
        y_size: usize,
    },
    #[error("semigroup of order {order} exceeds the size budget of {cap}")]
    SizeBudgetExceeded { order: u128, cap: usize },
    #[error("not completely simple: {0}")]
    NotCompletelySimple(NotCompletelySimple),
    #[error("no inverse for e·{0}·e in the maximal subgroup")]
    InverseNotFound(usize),
    #[error("element {element} maps outside the {set} index set")]
    OutsideIndexSet { element: usize, set: &'static str },
    #[error("{field}: {message}")]
    InvalidPart { field: &'static str, message: String },
    #[error("decomposition failed certification: {0:?}")]
    Certification(VerificationReport),
}

/// An element `(x, h, y)`; `h` is a position in the group's table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReesTriple {
    pub x: usize,
    pub h: usize,
    pub y: usize,
}

impl ReesTriple {
    pub fn new(x: usize, h: usize, y: usize) -> Self {
        ReesTriple { x, h, y }
    }
}

impl fmt::Display for ReesTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.h, self.y)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReesMatrixSemigroup {
    group: Group,
    x_size: usize,
    y_size: usize,
    sigma: Vec<Vec<usize>>,
}

/// The Cayley table of a Rees matrix semigroup with the triple at each index.
#[derive(Clone, Debug)]
pub struct ReesCayley {
    pub semigroup: FiniteSemigroup,
    pub triples: Vec<ReesTriple>,
}

impl ReesMatrixSemigroup {
    pub fn new(group: Group, x_size: usize, y_size: usize, sigma: Vec<Vec<usize>>) -> Result<Self, ReesError> {
        if x_size == 0 || y_size == 0 {
            return Err(ReesError::EmptyIndexSet { x_size, y_size });
        }
        if sigma.len() != y_size {
            return Err(ReesError::SigmaRows {
                rows: sigma.len(),
                expected: y_size,
            });
        }
        for (y, row) in sigma.iter().enumerate() {
            if row.len() != x_size {
                return Err(ReesError::SigmaShape {
                    expected_rows: y_size,
                    expected_cols: x_size,
                    row: y,
                    len: row.len(),
                });
            }
            if let Some((x, &value)) = row.iter().enumerate().find(|(_, &v)| v >= group.order()) {
                return Err(ReesError::SigmaEntryOutOfRange {
                    y,
                    x,
                    value,
                    order: group.order(),
                });
            }
        }
        Ok(ReesMatrixSemigroup {
            group,
            x_size,
            y_size,
            sigma,
        })
    }

    /// The paragroup with every sandwich entry equal to the identity.
    pub fn with_identity_sandwich(group: Group, x_size: usize, y_size: usize) -> Result<Self, ReesError> {
        let sigma = vec![vec![group.identity(); x_size]; y_size];
        Self::new(group, x_size, y_size, sigma)
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn x_size(&self) -> usize {
        self.x_size
    }

    pub fn y_size(&self) -> usize {
        self.y_size
    }

    pub fn sigma(&self) -> &[Vec<usize>] {
        &self.sigma
    }

    /// `σ(y, x)`.
    pub fn sandwich(&self, y: usize, x: usize) -> usize {
        self.sigma[y][x]
    }

    /// `(|X|, |H|, |Y|)`.
    pub fn shape(&self) -> (usize, usize, usize) {
        (self.x_size, self.group.order(), self.y_size)
    }

    /// `|X|·|H|·|Y|`, without overflow.
    pub fn order_u128(&self) -> u128 {
        self.x_size as u128 * self.group.order() as u128 * self.y_size as u128
    }

    pub fn contains(&self, t: ReesTriple) -> bool {
        t.x < self.x_size && t.h < self.group.order() && t.y < self.y_size
    }

    fn check(&self, t: ReesTriple) -> Result<(), ReesError> {
        if self.contains(t) {
            Ok(())
        } else {
            Err(ReesError::ComponentOutOfRange {
                triple: t,
                x_size: self.x_size,
                group_order: self.group.order(),
                y_size: self.y_size,
            })
        }
    }

    /// Position of `t` in the enumeration order. `t` must be in range.
    pub fn triple_index(&self, t: ReesTriple) -> usize {
        (t.x * self.group.order() + t.h) * self.y_size + t.y
    }

    pub fn triple_at(&self, index: usize) -> ReesTriple {
        let y = index % self.y_size;
        let rest = index / self.y_size;
        ReesTriple {
            x: rest / self.group.order(),
            h: rest % self.group.order(),
            y,
        }
    }

    /// All triples in enumeration order.
    pub fn triples(&self) -> impl Iterator<Item = ReesTriple> + '_ {
        let (xs, hs, ys) = self.shape();
        (0..xs).flat_map(move |x| (0..hs).flat_map(move |h| (0..ys).map(move |y| ReesTriple { x, h, y })))
    }

    /// The product formula without range checks. Panics on bad components.
    #[inline]
    pub fn mul_unchecked(&self, t: ReesTriple, u: ReesTriple) -> ReesTriple {
        let middle = self.group.mul(self.group.mul(t.h, self.sigma[t.y][u.x]), u.h);
        ReesTriple {
            x: t.x,
            h: middle,
            y: u.y,
        }
    }

    pub fn product(&self, t: ReesTriple, u: ReesTriple) -> Result<ReesTriple, ReesError> {
        self.check(t)?;
        self.check(u)?;
        Ok(self.mul_unchecked(t, u))
    }

    /// Builds and validates the full Cayley table, element `i` being
    /// `triple_at(i)` and named `"(x,h,y)"`.
    pub fn to_cayley(&self, max_order: usize) -> Result<ReesCayley, ReesError> {
        let order = self.order_u128();
        if order > max_order as u128 {
            return Err(ReesError::SizeBudgetExceeded { order, cap: max_order });
        }
        let n = order as usize;
        let triples: Vec<ReesTriple> = self.triples().collect();
        let table = CayleyTable::from_fn(n, |i, j| self.triple_index(self.mul_unchecked(triples[i], triples[j])))?;
        let names = triples.iter().map(|t| t.to_string()).collect();
        let semigroup = table.with_names(names)?.validate()?;
        Ok(ReesCayley { semigroup, triples })
    }
}

/// The Rees product of two triples in `r`.
pub fn rees_product(r: &ReesMatrixSemigroup, t: ReesTriple, u: ReesTriple) -> Result<ReesTriple, ReesError> {
    r.product(t, u)
}
