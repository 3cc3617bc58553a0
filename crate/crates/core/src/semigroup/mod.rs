//! Finite semigroups represented by their Cayley tables.
//!
//! A [`CayleyTable`] is raw, unchecked data. Running [`validate_table`] (or
//! [`CayleyTable::validate`]) checks every entry and all `n³` associativity
//! triples and produces a [`FiniteSemigroup`], which is the only type the
//! structure algorithms accept. The row-major convention is fixed:
//! `table[i][j]` is the index of `sᵢ·sⱼ`, the row being the left operand.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use thiserror::Error;

mod transformation;

pub use transformation::{closure_from_generators, Closure, Transformation, DEFAULT_CLOSURE_CAP};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("table is empty; a semigroup has at least one element")]
    EmptyTable,
    #[error("table row {row} has {len} entries but the table has {order} rows")]
    RaggedRow { row: usize, len: usize, order: usize },
    #[error("{count} names given for a semigroup of order {order}")]
    NameCountMismatch { count: usize, order: usize },
    #[error("table[{row}][{col}] = {value} is out of range for order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("associativity fails at ({i}, {j}, {k}): (s{i}s{j})s{k} = s{left} but s{i}(s{j}s{k}) = s{right}")]
    AssociativityFailure {
        i: usize,
        j: usize,
        k: usize,
        left: usize,
        right: usize,
    },
    #[error("element belongs to a different semigroup")]
    OwnerMismatch,
    #[error("element index {index} is out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("exponent must be at least 1")]
    ZeroExponent,
    #[error("a transformation needs degree at least 1")]
    EmptyTransformation,
    #[error("image {image} at position {position} is out of range for degree {degree}")]
    ImageOutOfRange {
        position: usize,
        image: usize,
        degree: usize,
    },
    #[error("generator {index} has degree {found}, expected {expected}")]
    DegreeMismatch {
        index: usize,
        found: usize,
        expected: usize,
    },
    #[error("at least one generator is required")]
    NoGenerators,
    #[error("closure exceeds the budget of {cap} elements")]
    ClosureBudgetExceeded { cap: usize },
}

/// Identity of a semigroup value, shared by its clones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SemigroupId(u64);

impl SemigroupId {
    fn fresh() -> Self {
        static NEXT: AtomicU64 = AtomicU64::new(0);
        SemigroupId(NEXT.fetch_add(1, Ordering::Relaxed))
    }
}

/// An element of a particular [`FiniteSemigroup`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    index: usize,
    owner: SemigroupId,
}

impl Element {
    pub fn index(self) -> usize {
        self.index
    }

    pub fn owner(self) -> SemigroupId {
        self.owner
    }
}

/// An unverified Cayley table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    order: usize,
    table: Vec<usize>,
    names: Option<Vec<String>>,
}

impl CayleyTable {
    /// Builds a table from its rows. Only the shape is checked here; entry
    /// ranges and associativity are checked by [`CayleyTable::validate`].
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self, SemigroupError> {
        let order = rows.len();
        if order == 0 {
            return Err(SemigroupError::EmptyTable);
        }
        let mut table = Vec::with_capacity(order * order);
        for (row, entries) in rows.into_iter().enumerate() {
            if entries.len() != order {
                return Err(SemigroupError::RaggedRow {
                    row,
                    len: entries.len(),
                    order,
                });
            }
            table.extend(entries);
        }
        Ok(CayleyTable {
            order,
            table,
            names: None,
        })
    }

    /// Builds a table of the given order from a function of two indices.
    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self, SemigroupError> {
        if order == 0 {
            return Err(SemigroupError::EmptyTable);
        }
        let table = (0..order)
            .flat_map(|i| (0..order).map(move |j| (i, j)))
            .map(|(i, j)| f(i, j))
            .collect();
        Ok(CayleyTable {
            order,
            table,
            names: None,
        })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self, SemigroupError> {
        if names.len() != self.order {
            return Err(SemigroupError::NameCountMismatch {
                count: names.len(),
                order: self.order,
            });
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order + j]
    }

    /// Checks all entries and all associativity triples.
    ///
    /// The first out-of-range entry in row-major order, or the first
    /// non-associative triple `(i, j, k)` in lexicographic order, is reported.
    pub fn validate(self) -> Result<FiniteSemigroup, SemigroupError> {
        let n = self.order;
        if let Some(pos) = self.table.iter().position(|&v| v >= n) {
            return Err(SemigroupError::EntryOutOfRange {
                row: pos / n,
                col: pos % n,
                value: self.table[pos],
                order: n,
            });
        }
        for i in 0..n {
            for j in 0..n {
                let ij = self.entry(i, j);
                for k in 0..n {
                    let left = self.entry(ij, k);
                    let right = self.entry(i, self.entry(j, k));
                    if left != right {
                        return Err(SemigroupError::AssociativityFailure { i, j, k, left, right });
                    }
                }
            }
        }
        Ok(self.assume_verified())
    }

    /// Marks a table verified without the `O(n³)` pass. Used only by
    /// constructors whose output is associative by construction.
    pub(crate) fn assume_verified(self) -> FiniteSemigroup {
        debug_assert!(self.table.iter().all(|&v| v < self.order));
        FiniteSemigroup {
            id: SemigroupId::fresh(),
            order: self.order,
            table: self.table,
            names: self.names,
        }
    }
}

/// Validates a Cayley table, returning the verified semigroup.
pub fn validate_table(table: CayleyTable) -> Result<FiniteSemigroup, SemigroupError> {
    table.validate()
}

/// A verified finite semigroup on the elements `0..order`.
///
/// Clones share the identity of the original, so elements obtained from
/// one may be used with the other.
#[derive(Clone, Debug)]
pub struct FiniteSemigroup {
    id: SemigroupId,
    order: usize,
    table: Vec<usize>,
    names: Option<Vec<String>>,
}

impl PartialEq for FiniteSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table && self.names == other.names
    }
}

impl Eq for FiniteSemigroup {}

impl FiniteSemigroup {
    pub fn id(&self) -> SemigroupId {
        self.id
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Raw product of two indices. Panics if either index is out of range.
    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        assert!(i < self.order && j < self.order, "index out of range");
        self.table[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[usize] {
        &self.table[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.table.chunks(self.order)
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display name of an element: its stored name, or its index.
    pub fn name(&self, i: usize) -> String {
        match &self.names {
            Some(names) => names[i].clone(),
            None => i.to_string(),
        }
    }

    /// Returns a copy with the given display names and a fresh identity.
    pub fn with_names(&self, names: Vec<String>) -> Result<Self, SemigroupError> {
        if names.len() != self.order {
            return Err(SemigroupError::NameCountMismatch {
                count: names.len(),
                order: self.order,
            });
        }
        Ok(FiniteSemigroup {
            id: SemigroupId::fresh(),
            order: self.order,
            table: self.table.clone(),
            names: Some(names),
        })
    }

    /// The unverified table underlying this semigroup.
    pub fn to_table(&self) -> CayleyTable {
        CayleyTable {
            order: self.order,
            table: self.table.clone(),
            names: self.names.clone(),
        }
    }

    pub fn element(&self, index: usize) -> Result<Element, SemigroupError> {
        if index < self.order {
            Ok(Element { index, owner: self.id })
        } else {
            Err(SemigroupError::IndexOutOfRange {
                index,
                order: self.order,
            })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order).map(move |index| Element { index, owner: self.id })
    }

    /// Index of `a`, checking that `a` belongs to this semigroup.
    pub fn index_of(&self, a: Element) -> Result<usize, SemigroupError> {
        if a.owner != self.id {
            return Err(SemigroupError::OwnerMismatch);
        }
        debug_assert!(a.index < self.order);
        Ok(a.index)
    }

    fn wrap(&self, index: usize) -> Element {
        Element { index, owner: self.id }
    }

    pub fn product(&self, a: Element, b: Element) -> Result<Element, SemigroupError> {
        let (i, j) = (self.index_of(a)?, self.index_of(b)?);
        Ok(self.wrap(self.mul(i, j)))
    }

    /// `aᵏ` for `k ≥ 1`.
    pub fn power(&self, a: Element, k: u64) -> Result<Element, SemigroupError> {
        let i = self.index_of(a)?;
        if k == 0 {
            return Err(SemigroupError::ZeroExponent);
        }
        Ok(self.wrap(self.pow_index(i, k)))
    }

    /// `iᵏ` by binary exponentiation. Panics if `k == 0`.
    pub fn pow_index(&self, i: usize, k: u64) -> usize {
        assert!(k >= 1, "exponent must be at least 1");
        let mut base = i;
        let mut exp = k;
        let mut acc: Option<usize> = None;
        loop {
            if exp & 1 == 1 {
                acc = Some(match acc {
                    Some(a) => self.mul(a, base),
                    None => base,
                });
            }
            exp >>= 1;
            if exp == 0 {
                break;
            }
            base = self.mul(base, base);
        }
        acc.expect("k >= 1 sets at least one bit")
    }

    pub fn is_idempotent(&self, i: usize) -> bool {
        self.mul(i, i) == i
    }

    /// The unique idempotent among the powers of `a`.
    pub fn idempotent_power(&self, a: Element) -> Result<Element, SemigroupError> {
        let i = self.index_of(a)?;
        Ok(self.wrap(self.idempotent_power_index(i)))
    }

    /// Floyd cycle detection on `a, a², a³, …`, then a scan of the cycle.
    ///
    /// The cycle of powers is a cyclic group, so it holds exactly one
    /// idempotent, and every idempotent power of `a` lies on it.
    pub fn idempotent_power_index(&self, a: usize) -> usize {
        let step = |x: usize| self.mul(x, a);
        let mut slow = a;
        let mut fast = step(a);
        while slow != fast {
            slow = step(slow);
            fast = step(step(fast));
        }
        let mut x = slow;
        while !self.is_idempotent(x) {
            x = step(x);
        }
        x
    }

    pub fn idempotent_indices(&self) -> Vec<usize> {
        (0..self.order).filter(|&i| self.is_idempotent(i)).collect()
    }

    /// All idempotents, ascending by index.
    pub fn idempotents(&self) -> Vec<Element> {
        self.idempotent_indices().into_iter().map(|i| self.wrap(i)).collect()
    }
}

impl fmt::Display for FiniteSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}
