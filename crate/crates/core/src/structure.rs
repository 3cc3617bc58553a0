//! Ideals, simplicity, the natural order on idempotents, and maximal
//! subgroups `eSe`.

use std::fmt;

use thiserror::Error;

use crate::semigroup::{CayleyTable, Element, FiniteSemigroup, SemigroupError, SemigroupId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),
    #[error("not a group: element {0} has no two-sided inverse")]
    NotAGroup(usize),
    #[error("not a group: {count} idempotents, expected exactly one")]
    IdempotentCount { count: usize },
    #[error("not a group: element {identity} is not a two-sided identity for {element}")]
    NotIdentity { identity: usize, element: usize },
    #[error("carrier is not closed: {left}·{right} = {product} lies outside it")]
    NotClosed { left: usize, right: usize, product: usize },
}

/// Why a semigroup fails to be completely simple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotCompletelySimple {
    /// The principal ideal of `element` is proper.
    ProperIdeal {
        element: usize,
        ideal: Vec<usize>,
    },
    NoPrimitiveIdempotent,
}

impl fmt::Display for NotCompletelySimple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotCompletelySimple::ProperIdeal { element, ideal } => {
                write!(
                    f,
                    "the principal ideal of element {element} is the proper ideal {ideal:?}"
                )
            }
            NotCompletelySimple::NoPrimitiveIdempotent => write!(f, "no primitive idempotent"),
        }
    }
}

/// `J(a) = {a} ∪ aS ∪ Sa ∪ SaS` as sorted indices.
pub fn principal_ideal_indices(s: &FiniteSemigroup, a: usize) -> Vec<usize> {
    let n = s.order();
    let mut in_right = vec![false; n];
    in_right[a] = true;
    for x in 0..n {
        in_right[s.mul(a, x)] = true;
    }
    // {a} ∪ aS, then everything S·({a} ∪ aS) adds
    let mut member = in_right.clone();
    for r in (0..n).filter(|&r| in_right[r]) {
        for x in 0..n {
            member[s.mul(x, r)] = true;
        }
    }
    (0..n).filter(|&i| member[i]).collect()
}

pub fn principal_ideal(s: &FiniteSemigroup, a: Element) -> Result<Vec<Element>, StructureError> {
    let a = s.index_of(a)?;
    Ok(principal_ideal_indices(s, a)
        .into_iter()
        .map(|i| s.element(i).expect("ideal members are in range"))
        .collect())
}

/// The lowest-index element whose principal ideal is proper, if any.
pub fn simplicity_witness(s: &FiniteSemigroup) -> Option<(usize, Vec<usize>)> {
    (0..s.order()).find_map(|a| {
        let ideal = principal_ideal_indices(s, a);
        (ideal.len() < s.order()).then_some((a, ideal))
    })
}

pub fn is_simple(s: &FiniteSemigroup) -> bool {
    simplicity_witness(s).is_none()
}

fn leq_unchecked(s: &FiniteSemigroup, e: usize, f: usize) -> bool {
    s.mul(e, f) == e && s.mul(f, e) == e
}

/// The natural order `e ≤ f` iff `ef = fe = e`.
pub fn idempotent_leq(s: &FiniteSemigroup, e: Element, f: Element) -> Result<bool, StructureError> {
    let (e, f) = (s.index_of(e)?, s.index_of(f)?);
    for x in [e, f] {
        if !s.is_idempotent(x) {
            return Err(StructureError::NotIdempotent(x));
        }
    }
    Ok(leq_unchecked(s, e, f))
}

pub fn primitive_idempotent_indices(s: &FiniteSemigroup) -> Vec<usize> {
    let idempotents = s.idempotent_indices();
    idempotents
        .iter()
        .copied()
        .filter(|&e| !idempotents.iter().any(|&f| f != e && leq_unchecked(s, f, e)))
        .collect()
}

/// Idempotents with no other idempotent below them, ascending.
pub fn primitive_idempotents(s: &FiniteSemigroup) -> Vec<Element> {
    primitive_idempotent_indices(s)
        .into_iter()
        .map(|i| s.element(i).expect("in range"))
        .collect()
}

pub fn complete_simplicity_witness(s: &FiniteSemigroup) -> Result<(), NotCompletelySimple> {
    if let Some((element, ideal)) = simplicity_witness(s) {
        return Err(NotCompletelySimple::ProperIdeal { element, ideal });
    }
    if primitive_idempotent_indices(s).is_empty() {
        return Err(NotCompletelySimple::NoPrimitiveIdempotent);
    }
    Ok(())
}

/// Simple with a primitive idempotent.
pub fn is_completely_simple(s: &FiniteSemigroup) -> bool {
    complete_simplicity_witness(s).is_ok()
}

/// A certified finite group: a semigroup with a two-sided identity and
/// two-sided inverses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    table: FiniteSemigroup,
    identity: usize,
    inverses: Vec<usize>,
}

impl Group {
    /// Certifies that `table` is a group: exactly one idempotent, which is a
    /// two-sided identity, and a two-sided inverse for every element.
    pub fn from_semigroup(table: FiniteSemigroup) -> Result<Self, StructureError> {
        let idempotents = table.idempotent_indices();
        if idempotents.len() != 1 {
            return Err(StructureError::IdempotentCount {
                count: idempotents.len(),
            });
        }
        let identity = idempotents[0];
        let n = table.order();
        for h in 0..n {
            if table.mul(identity, h) != h || table.mul(h, identity) != h {
                return Err(StructureError::NotIdentity { identity, element: h });
            }
        }
        let inverses = (0..n)
            .map(|h| {
                (0..n)
                    .find(|&k| table.mul(h, k) == identity && table.mul(k, h) == identity)
                    .ok_or(StructureError::NotAGroup(h))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Group {
            table,
            identity,
            inverses,
        })
    }

    /// The cyclic group `Cₙ` under addition mod `n`, identity 0.
    pub fn cyclic(n: usize) -> Result<Self, SemigroupError> {
        let table = CayleyTable::from_fn(n, |i, j| (i + j) % n)?.assume_verified();
        let inverses = (0..n).map(|i| (n - i) % n).collect();
        Ok(Group {
            table,
            identity: 0,
            inverses,
        })
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table.mul(g, h)
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverses[g]
    }

    pub fn inverse_table(&self) -> &[usize] {
        &self.inverses
    }

    pub fn table(&self) -> &FiniteSemigroup {
        &self.table
    }
}

/// The group `H_e = eSe` at an idempotent `e`.
#[derive(Clone, Debug)]
pub struct MaximalSubgroup {
    parent: SemigroupId,
    identity: usize,
    carrier: Vec<usize>,
    group: Group,
}

impl MaximalSubgroup {
    pub fn parent(&self) -> SemigroupId {
        self.parent
    }

    /// The idempotent `e`, as a parent index.
    pub fn identity(&self) -> usize {
        self.identity
    }

    /// Parent indices of `eSe`, ascending; position `i` is local element `i`.
    pub fn carrier(&self) -> &[usize] {
        &self.carrier
    }

    pub fn order(&self) -> usize {
        self.carrier.len()
    }

    /// Local position of a parent element.
    pub fn position(&self, parent_index: usize) -> Option<usize> {
        self.carrier.binary_search(&parent_index).ok()
    }

    /// Inverse of a parent element, as a parent index.
    pub fn inverse_of(&self, parent_index: usize) -> Option<usize> {
        self.position(parent_index).map(|p| self.carrier[self.group.inverse(p)])
    }

    /// For each carrier position, the position of its inverse.
    pub fn inverse_table(&self) -> &[usize] {
        self.group.inverse_table()
    }

    pub fn local_table(&self) -> &FiniteSemigroup {
        self.group.table()
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn into_group(self) -> Group {
        self.group
    }
}

/// Extracts and certifies `eSe`.
///
/// `eSe` is a group whenever the parent is completely simple; otherwise the
/// certification reports the first carrier element without an inverse.
pub fn maximal_subgroup(s: &FiniteSemigroup, e: Element) -> Result<MaximalSubgroup, StructureError> {
    let e = s.index_of(e)?;
    if !s.is_idempotent(e) {
        return Err(StructureError::NotIdempotent(e));
    }
    let n = s.order();
    let mut carrier: Vec<usize> = (0..n).map(|x| s.mul(s.mul(e, x), e)).collect();
    carrier.sort_unstable();
    carrier.dedup();

    for &h in &carrier {
        if s.mul(e, h) != h || s.mul(h, e) != h {
            return Err(StructureError::NotIdentity {
                identity: e,
                element: h,
            });
        }
    }
    for &h in &carrier {
        if !carrier.iter().any(|&k| s.mul(h, k) == e && s.mul(k, h) == e) {
            return Err(StructureError::NotAGroup(h));
        }
    }

    let position = |x: usize| carrier.binary_search(&x).ok();
    let m = carrier.len();
    let mut rows = Vec::with_capacity(m);
    for &a in &carrier {
        let mut row = Vec::with_capacity(m);
        for &b in &carrier {
            let product = s.mul(a, b);
            row.push(position(product).ok_or(StructureError::NotClosed {
                left: a,
                right: b,
                product,
            })?);
        }
        rows.push(row);
    }
    let names = carrier.iter().map(|&h| s.name(h)).collect();
    let local = CayleyTable::from_rows(rows)?.with_names(names)?.validate()?;
    let group = Group::from_semigroup(local)?;
    debug_assert_eq!(Some(group.identity()), position(e));

    Ok(MaximalSubgroup {
        parent: s.id(),
        identity: e,
        carrier,
        group,
    })
}
