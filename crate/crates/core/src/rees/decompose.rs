use crate::semigroup::{Element, FiniteSemigroup};
use crate::structure::{complete_simplicity_witness, maximal_subgroup, primitive_idempotent_indices, Group};

use super::{ReesError, ReesMatrixSemigroup, ReesTriple};

/// A completely simple semigroup written as `[X_e, H_e, Y_e]_σ`.
///
/// `forward[i]` is the source element for the `i`-th triple in enumeration
/// order. The inverse direction is always computed from the explicit
/// formula `s ↦ (s·m⁻¹, m, m⁻¹·s)` with `m = e·s·e`, so a stored forward
/// map can be checked against it.
#[derive(Clone, Debug)]
pub struct ReesDecomposition {
    source: FiniteSemigroup,
    e: usize,
    x_e: Vec<usize>,
    y_e: Vec<usize>,
    carrier: Vec<usize>,
    paragroup: ReesMatrixSemigroup,
    forward: Vec<usize>,
    x_pos: Vec<Option<usize>>,
    y_pos: Vec<Option<usize>>,
    carrier_pos: Vec<Option<usize>>,
}

/// Outcome of [`verify_decomposition`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub bijective: bool,
    pub homomorphic: bool,
    pub size_consistent: bool,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.bijective && self.homomorphic && self.size_consistent
    }
}

fn positions(order: usize, members: &[usize]) -> Vec<Option<usize>> {
    let mut pos = vec![None; order];
    for (i, &m) in members.iter().enumerate() {
        pos[m].get_or_insert(i);
    }
    pos
}

impl ReesDecomposition {
    /// Assembles a decomposition from stored parts.
    ///
    /// Only index ranges and the sandwich shape are checked; whether the
    /// parts describe an isomorphism is for [`verify_decomposition`].
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        source: FiniteSemigroup,
        e: usize,
        x_e: Vec<usize>,
        y_e: Vec<usize>,
        carrier: Vec<usize>,
        group: Group,
        sigma: Vec<Vec<usize>>,
        forward: Vec<usize>,
    ) -> Result<Self, ReesError> {
        let n = source.order();
        let in_range = |field: &'static str, values: &[usize]| -> Result<(), ReesError> {
            match values.iter().position(|&v| v >= n) {
                Some(i) => Err(ReesError::InvalidPart {
                    field,
                    message: format!("entry {i} = {} is out of range for order {n}", values[i]),
                }),
                None => Ok(()),
            }
        };
        in_range("e", &[e])?;
        in_range("x_e", &x_e)?;
        in_range("y_e", &y_e)?;
        in_range("carrier", &carrier)?;
        if carrier.len() != group.order() {
            return Err(ReesError::InvalidPart {
                field: "carrier",
                message: format!("{} entries for a group of order {}", carrier.len(), group.order()),
            });
        }
        let paragroup = ReesMatrixSemigroup::new(group, x_e.len(), y_e.len(), sigma)?;
        Ok(ReesDecomposition {
            x_pos: positions(n, &x_e),
            y_pos: positions(n, &y_e),
            carrier_pos: positions(n, &carrier),
            source,
            e,
            x_e,
            y_e,
            carrier,
            paragroup,
            forward,
        })
    }

    pub fn source(&self) -> &FiniteSemigroup {
        &self.source
    }

    /// The idempotent the decomposition is built at.
    pub fn e(&self) -> Element {
        self.source.element(self.e).expect("checked in from_parts")
    }

    pub fn e_index(&self) -> usize {
        self.e
    }

    /// `Se ∩ E`, ascending source indices.
    pub fn x_e(&self) -> &[usize] {
        &self.x_e
    }

    /// `eS ∩ E`, ascending source indices.
    pub fn y_e(&self) -> &[usize] {
        &self.y_e
    }

    /// Source indices of `H_e`; position `i` is group element `i`.
    pub fn carrier(&self) -> &[usize] {
        &self.carrier
    }

    pub fn group(&self) -> &Group {
        self.paragroup.group()
    }

    pub fn sigma(&self) -> &[Vec<usize>] {
        self.paragroup.sigma()
    }

    pub fn paragroup(&self) -> &ReesMatrixSemigroup {
        &self.paragroup
    }

    pub fn forward(&self) -> &[usize] {
        &self.forward
    }

    /// `(|X_e|, |H_e|, |Y_e|)`.
    pub fn shape(&self) -> (usize, usize, usize) {
        self.paragroup.shape()
    }

    /// Replaces the stored forward map. Used to build corrupted fixtures.
    pub fn with_forward(mut self, forward: Vec<usize>) -> Self {
        self.forward = forward;
        self
    }

    fn map_index(&self, t: ReesTriple) -> usize {
        let s = &self.source;
        s.mul(s.mul(self.x_e[t.x], self.carrier[t.h]), self.y_e[t.y])
    }

    fn inverse_index(&self, s_index: usize) -> Result<ReesTriple, ReesError> {
        let s = &self.source;
        let m = s.mul(s.mul(self.e, s_index), self.e);
        let h = self.carrier_pos[m].ok_or(ReesError::InverseNotFound(s_index))?;
        let m_inv = self.carrier[self.paragroup.group().inverse(h)];
        let x = self.x_pos[s.mul(s_index, m_inv)].ok_or(ReesError::OutsideIndexSet {
            element: s_index,
            set: "X_e",
        })?;
        let y = self.y_pos[s.mul(m_inv, s_index)].ok_or(ReesError::OutsideIndexSet {
            element: s_index,
            set: "Y_e",
        })?;
        Ok(ReesTriple { x, h, y })
    }
}

/// Decomposes a completely simple semigroup at its lowest-index primitive
/// idempotent and certifies the result before returning it.
pub fn decompose(s: &FiniteSemigroup) -> Result<ReesDecomposition, ReesError> {
    complete_simplicity_witness(s).map_err(ReesError::NotCompletelySimple)?;
    let e = primitive_idempotent_indices(s)[0];
    let n = s.order();

    let idempotents_among = |mut xs: Vec<usize>| {
        xs.retain(|&x| s.is_idempotent(x));
        xs.sort_unstable();
        xs.dedup();
        xs
    };
    let x_e = idempotents_among((0..n).map(|x| s.mul(x, e)).collect());
    let y_e = idempotents_among((0..n).map(|x| s.mul(e, x)).collect());

    let subgroup = maximal_subgroup(s, s.element(e)?)?;
    let mut sigma = Vec::with_capacity(y_e.len());
    for &y in &y_e {
        let row = x_e
            .iter()
            .map(|&x| {
                let yx = s.mul(y, x);
                subgroup.position(yx).ok_or(ReesError::OutsideIndexSet {
                    element: yx,
                    set: "H_e",
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        sigma.push(row);
    }

    let carrier = subgroup.carrier().to_vec();
    let mut forward = Vec::with_capacity(n);
    for &x in &x_e {
        for &h in &carrier {
            for &y in &y_e {
                forward.push(s.mul(s.mul(x, h), y));
            }
        }
    }

    let d = ReesDecomposition::from_parts(s.clone(), e, x_e, y_e, carrier, subgroup.into_group(), sigma, forward)?;
    let report = verify_decomposition(&d);
    if !report.passed() {
        return Err(ReesError::Certification(report));
    }
    Ok(d)
}

/// `R(x, h, y) = x·h·y` in the source semigroup.
pub fn rees_map(d: &ReesDecomposition, t: ReesTriple) -> Result<Element, ReesError> {
    d.paragroup.check(t)?;
    Ok(d.source.element(d.map_index(t))?)
}

/// `R⁻¹(s) = (s·m⁻¹, m, m⁻¹·s)` with `m = e·s·e`, reported as positions in
/// `X_e`, `H_e` and `Y_e`.
pub fn rees_inverse_map(d: &ReesDecomposition, s: Element) -> Result<ReesTriple, ReesError> {
    let index = d.source.index_of(s)?;
    d.inverse_index(index)
}

/// Exhaustively checks the stored forward map against the inverse formula
/// and the Rees product.
pub fn verify_decomposition(d: &ReesDecomposition) -> VerificationReport {
    let n = d.source.order();
    let r = &d.paragroup;
    let count = r.order_u128();
    let size_consistent = count == n as u128;
    let forward_well_formed = d.forward.len() as u128 == count && d.forward.iter().all(|&s| s < n);

    let bijective = forward_well_formed
        && r.triples()
            .enumerate()
            .all(|(i, t)| d.inverse_index(d.forward[i]).is_ok_and(|back| back == t))
        && (0..n).all(|s| d.inverse_index(s).is_ok_and(|t| d.forward[r.triple_index(t)] == s));

    let homomorphic = forward_well_formed && {
        let triples: Vec<ReesTriple> = r.triples().collect();
        triples.iter().enumerate().all(|(i, &t)| {
            triples.iter().enumerate().all(|(j, &u)| {
                let product = r.triple_index(r.mul_unchecked(t, u));
                d.forward[product] == d.source.mul(d.forward[i], d.forward[j])
            })
        })
    };

    VerificationReport {
        bijective,
        homomorphic,
        size_consistent,
    }
}
