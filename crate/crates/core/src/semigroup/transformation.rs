use std::collections::HashMap;
use std::fmt;

use super::{CayleyTable, FiniteSemigroup, SemigroupError};

pub const DEFAULT_CLOSURE_CAP: usize = 10_000;

/// A total map on `{0, …, degree-1}`, stored as its list of images.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Transformation {
    images: Vec<usize>,
}

impl Transformation {
    pub fn new(images: Vec<usize>) -> Result<Self, SemigroupError> {
        let degree = images.len();
        if degree == 0 {
            return Err(SemigroupError::EmptyTransformation);
        }
        if let Some((position, &image)) = images.iter().enumerate().find(|(_, &v)| v >= degree) {
            return Err(SemigroupError::ImageOutOfRange {
                position,
                image,
                degree,
            });
        }
        Ok(Transformation { images })
    }

    pub fn identity(degree: usize) -> Result<Self, SemigroupError> {
        Self::new((0..degree).collect())
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Transformation) -> Transformation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Transformation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// A semigroup generated by transformations, with the transformation
/// realizing each element index.
#[derive(Clone, Debug)]
pub struct Closure {
    pub semigroup: FiniteSemigroup,
    pub elements: Vec<Transformation>,
}

/// Breadth-first closure of `gens` under composition.
///
/// Elements are numbered in discovery order, generators first. The product
/// `sᵢ·sⱼ` is the composition `tᵢ ∘ tⱼ`.
pub fn closure_from_generators(gens: &[Transformation], cap: usize) -> Result<Closure, SemigroupError> {
    let first = gens.first().ok_or(SemigroupError::NoGenerators)?;
    let degree = first.degree();
    for (index, g) in gens.iter().enumerate() {
        if g.degree() != degree {
            return Err(SemigroupError::DegreeMismatch {
                index,
                found: g.degree(),
                expected: degree,
            });
        }
    }

    let mut elements: Vec<Transformation> = Vec::new();
    let mut index: HashMap<Transformation, usize> = HashMap::new();
    let mut insert = |t: Transformation, elements: &mut Vec<Transformation>| -> Result<(), SemigroupError> {
        if !index.contains_key(&t) {
            if elements.len() == cap {
                return Err(SemigroupError::ClosureBudgetExceeded { cap });
            }
            index.insert(t.clone(), elements.len());
            elements.push(t);
        }
        Ok(())
    };

    for g in gens {
        insert(g.clone(), &mut elements)?;
    }
    let distinct_gens = elements.clone();
    let mut next = 0;
    while next < elements.len() {
        let current = elements[next].clone();
        for g in &distinct_gens {
            insert(current.compose(g), &mut elements)?;
        }
        next += 1;
    }

    let lookup: HashMap<&Transformation, usize> = elements.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let n = elements.len();
    let table = CayleyTable::from_fn(n, |i, j| lookup[&elements[i].compose(&elements[j])])?;
    let names = elements.iter().map(|t| t.to_string()).collect();
    let semigroup = table.with_names(names)?.assume_verified();
    Ok(Closure { semigroup, elements })
}
