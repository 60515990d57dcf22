//! Index sets of the quantum spaces: admissible weights C_k = Λ* ∩ (k−h∨)·Alc̄
//! and the open-alcove points Alc ∩ k⁻¹Λ*, with the bijection λ ↦ (λ+ρ)/k.

use crate::cartan::RootSystem;
use crate::error::{Error, Result};
use crate::exact::{q, Q};
use num_traits::Zero;

/// One index of the quantum space: an admissible weight together with its
/// open-alcove image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightIndex {
    /// λ ∈ C_k as integer fundamental-weight coefficients (= k·alcove − ρ)
    pub admissible: Vec<i64>,
    /// level k
    pub level: i64,
    /// (λ+ρ)/k in coroot coordinates, strictly inside the alcove
    pub alcove: Vec<Q>,
}

impl WeightIndex {
    /// λ itself as a rational vector in coroot coordinates.
    pub fn weight_vector(&self, rs: &RootSystem) -> Vec<Q> {
        weight_coords_to_coroot(rs, &self.admissible)
    }

    /// λ+ρ as integer fundamental-weight coefficients.
    pub fn shifted(&self) -> Vec<i64> {
        self.admissible.iter().map(|&c| c + 1).collect()
    }
}

/// vec(Σ cᵢωᵢ) in coroot coordinates.
pub fn weight_coords_to_coroot(rs: &RootSystem, c: &[i64]) -> Vec<Q> {
    (0..rs.rank)
        .map(|j| {
            (0..rs.rank)
                .map(|i| &rs.weight_basis[i][j] * q(c[i]))
                .sum()
        })
        .collect()
}

/// All of Λ* ∩ (k−h∨)·closed-alcove with alcove images, lexicographic in the
/// fundamental-weight coefficients.
pub fn admissible_weights(rs: &RootSystem, k: i64) -> Result<Vec<WeightIndex>> {
    if k < rs.dual_coxeter {
        return Err(Error::LevelTooSmall {
            k,
            h_dual: rs.dual_coxeter,
        });
    }
    let level = k - rs.dual_coxeter;
    let mut out = Vec::new();
    let mut c = vec![0i64; rs.rank];
    enumerate(rs, level, 0, level, &mut c, &mut out);
    out.sort_by(|a, b| a.admissible.cmp(&b.admissible));
    for w in &mut out {
        let mut shifted_vec = weight_coords_to_coroot(rs, &w.shifted());
        for x in &mut shifted_vec {
            *x /= q(k);
        }
        w.alcove = shifted_vec;
    }
    Ok(out)
}

fn enumerate(
    rs: &RootSystem,
    level: i64,
    pos: usize,
    budget: i64,
    c: &mut Vec<i64>,
    out: &mut Vec<WeightIndex>,
) {
    if pos == rs.rank {
        out.push(WeightIndex {
            admissible: c.clone(),
            level: level + rs.dual_coxeter,
            alcove: Vec::new(),
        });
        return;
    }
    let m = rs.comarks[pos];
    let mut v = 0i64;
    while v * m <= budget {
        c[pos] = v;
        enumerate(rs, level, pos + 1, budget - v * m, c, out);
        v += 1;
    }
    c[pos] = 0;
}

/// { (λ+ρ)/k : λ ∈ C_k }, each strictly inside the open alcove.
pub fn alcove_points(rs: &RootSystem, k: i64) -> Result<Vec<Vec<Q>>> {
    Ok(admissible_weights(rs, k)?
        .into_iter()
        .map(|w| w.alcove)
        .collect())
}

/// Exact open-alcove membership: αᵢ(x) > 0 for all simple roots and α₀(x) < 1.
pub fn in_open_alcove(rs: &RootSystem, x: &[Q]) -> bool {
    (0..rs.rank).all(|i| rs.simple_root_value(i, x) > Q::zero())
        && rs.highest_root_value(x) < q(1)
}

/// Exact wall test: some αᵢ(x) = 0 or α₀(x) = 1.
pub fn on_alcove_wall(rs: &RootSystem, x: &[Q]) -> bool {
    (0..rs.rank).any(|i| rs.simple_root_value(i, x).is_zero())
        || rs.highest_root_value(x) == q(1)
}
