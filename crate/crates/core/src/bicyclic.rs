//! The bicyclic monoid `C(p, q) = ⟨p, q | qp = 1⟩` in normal form `pᵃqᵇ`.
//!
//! It is simple and has idempotents `pⁿqⁿ`, but they form the infinite
//! descending chain `1 > pq > p²q² > …`, so none is primitive. A finite
//! semigroup can never contain a copy of it.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BicyclicError {
    #[error("exponent overflow multiplying {0} by {1}")]
    ExponentOverflow(BicyclicElement, BicyclicElement),
    #[error("{0} is not idempotent")]
    NotIdempotent(BicyclicElement),
}

/// The word `pᵃqᵇ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BicyclicElement {
    pub a: u64,
    pub b: u64,
}

impl BicyclicElement {
    pub const ONE: BicyclicElement = BicyclicElement { a: 0, b: 0 };
    pub const P: BicyclicElement = BicyclicElement { a: 1, b: 0 };
    pub const Q: BicyclicElement = BicyclicElement { a: 0, b: 1 };

    pub const fn new(a: u64, b: u64) -> Self {
        BicyclicElement { a, b }
    }

    /// The idempotent `pⁿqⁿ`.
    pub const fn idempotent(n: u64) -> Self {
        BicyclicElement { a: n, b: n }
    }
}

impl fmt::Display for BicyclicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p^{}q^{}", self.a, self.b)
    }
}

/// `pᵃqᵇ · pᶜqᵈ`: the inner `qᵇpᶜ` cancels `m = min(b, c)` pairs.
pub fn bmul(u: BicyclicElement, v: BicyclicElement) -> Result<BicyclicElement, BicyclicError> {
    let m = u.b.min(v.a);
    let overflow = || BicyclicError::ExponentOverflow(u, v);
    Ok(BicyclicElement {
        a: u.a.checked_add(v.a - m).ok_or_else(overflow)?,
        b: (u.b - m).checked_add(v.b).ok_or_else(overflow)?,
    })
}

pub fn b_is_idempotent(u: BicyclicElement) -> bool {
    u.a == u.b
}

/// `e ≤ f` iff `ef = fe = e`.
pub fn b_idempotent_leq(e: BicyclicElement, f: BicyclicElement) -> Result<bool, BicyclicError> {
    for x in [e, f] {
        if !b_is_idempotent(x) {
            return Err(BicyclicError::NotIdempotent(x));
        }
    }
    Ok(bmul(e, f)? == e && bmul(f, e)? == e)
}

/// One link `eₙ₊₁ < eₙ` of the descending idempotent chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChainLink {
    pub lower: BicyclicElement,
    pub upper: BicyclicElement,
    /// `lower ≤ upper` in the natural order, as computed by `bmul`.
    pub below: bool,
    pub distinct: bool,
}

impl ChainLink {
    pub fn is_strict(&self) -> bool {
        self.below && self.distinct
    }
}

/// For each `n < count`, the link `(eₙ₊₁, eₙ)` with its order facts
/// computed through [`bmul`]. Every `eₙ` in the sample has a strictly
/// smaller idempotent below it.
pub fn no_primitive_witness(count: u64) -> Result<Vec<ChainLink>, BicyclicError> {
    (0..count)
        .map(|n| {
            let lower = BicyclicElement::idempotent(n + 1);
            let upper = BicyclicElement::idempotent(n);
            Ok(ChainLink {
                lower,
                upper,
                below: b_idempotent_leq(lower, upper)?,
                distinct: lower != upper,
            })
        })
        .collect()
}
