use super::{ReesMatrixSemigroup, ReesTriple};

/// A Rees matrix semigroup with sandwich identity on row 0 and column 0,
/// and the isomorphism it came with.
#[derive(Clone, Debug)]
pub struct NormalizedSandwich {
    pub rees: ReesMatrixSemigroup,
    /// `witness[i]` is the image of the source's `i`-th triple.
    pub witness: Vec<ReesTriple>,
}

impl NormalizedSandwich {
    /// Checks exhaustively that the witness is a bijection from `source`
    /// onto the normalized semigroup that preserves products.
    pub fn verify(&self, source: &ReesMatrixSemigroup) -> bool {
        verify_isomorphism(source, &self.rees, &self.witness)
    }
}

pub(crate) fn verify_isomorphism(from: &ReesMatrixSemigroup, to: &ReesMatrixSemigroup, map: &[ReesTriple]) -> bool {
    let n = from.order_u128();
    if n != to.order_u128() || map.len() as u128 != n || !map.iter().all(|&t| to.contains(t)) {
        return false;
    }
    let mut hit = vec![false; map.len()];
    for &t in map {
        let i = to.triple_index(t);
        if std::mem::replace(&mut hit[i], true) {
            return false;
        }
    }
    let triples: Vec<ReesTriple> = from.triples().collect();
    triples.iter().enumerate().all(|(i, &t)| {
        triples.iter().enumerate().all(|(j, &u)| {
            let image = map[from.triple_index(from.mul_unchecked(t, u))];
            image == to.mul_unchecked(map[i], map[j])
        })
    })
}

/// Rewrites `r` so that `σ′(0, x) = σ′(y, 0) = 1` for all `x`, `y`.
///
/// With `p_x = σ(0, x)` and `q_y = σ(y, 0)·σ(0, 0)⁻¹`, the map
/// `(x, h, y) ↦ (x, p_x·h·q_y, y)` is an isomorphism onto the Rees matrix
/// semigroup with sandwich `σ′(y, x) = q_y⁻¹·σ(y, x)·p_x⁻¹`.
pub fn normalize_sandwich(r: &ReesMatrixSemigroup) -> NormalizedSandwich {
    let g = r.group();
    let (x_size, _, y_size) = r.shape();
    let p: Vec<usize> = (0..x_size).map(|x| r.sandwich(0, x)).collect();
    let corner_inv = g.inverse(r.sandwich(0, 0));
    let q: Vec<usize> = (0..y_size).map(|y| g.mul(r.sandwich(y, 0), corner_inv)).collect();

    let sigma = (0..y_size)
        .map(|y| {
            (0..x_size)
                .map(|x| g.mul(g.mul(g.inverse(q[y]), r.sandwich(y, x)), g.inverse(p[x])))
                .collect()
        })
        .collect();
    let rees = ReesMatrixSemigroup::new(g.clone(), x_size, y_size, sigma).expect("same shape and group");
    let witness = r
        .triples()
        .map(|t| ReesTriple {
            x: t.x,
            h: g.mul(g.mul(p[t.x], t.h), q[t.y]),
            y: t.y,
        })
        .collect();
    NormalizedSandwich { rees, witness }
}
