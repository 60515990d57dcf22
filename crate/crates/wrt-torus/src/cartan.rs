//! Exact root-system, lattice, and Weyl-group machinery for the simple types
//! A–G, normalized by the basic inner product B (long coroots have squared
//! length 2, so B is integral and even on the coroot lattice Λ = Zⁿ).
//!
//! Everything lives in coroot coordinates: Λ = Zⁿ by definition, the weight
//! lattice Λ* and alcove data are rational vectors, and B is evaluated through
//! the Gram matrix B(αᵢ∨, αⱼ∨). All data is computed from the Cartan matrix
//! and the long/short pattern; nothing per-group is hard-coded beyond those.

use crate::error::{Error, Result};
use crate::exact::{self, q, Q};
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub const DEFAULT_WEYL_GUARD: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// One element of the Weyl group as an integer matrix on coroot coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    /// action on coroot coordinates, x ↦ matrix · x
    pub matrix: Vec<Vec<i64>>,
    /// det(matrix) = (−1)^{ℓ(w)}
    pub sign: i8,
}

/// Exact Cartan/coroot data for one simple type.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub family: Family,
    pub rank: usize,
    /// cartan[i][j] = αⱼ(αᵢ∨)
    pub cartan: Vec<Vec<i64>>,
    /// gram[i][j] = B(αᵢ∨, αⱼ∨); symmetric, positive definite, even diagonal
    pub gram: Vec<Vec<i64>>,
    /// adjugate of gram: gram⁻¹ · det(gram), integer entries
    pub gram_adj: Vec<Vec<i64>>,
    /// rows = fundamental weights ωᵢ in coroot coordinates (= gram⁻¹)
    pub weight_basis: Vec<Vec<Q>>,
    /// ρ = Σ ωᵢ in coroot coordinates
    pub rho: Vec<Q>,
    /// highest root α₀ as a linear functional: α₀(x) = Σ highest_root[l]·x_l
    pub highest_root: Vec<Q>,
    /// α₀∨ in coroot coordinates (the comarks); h∨ = 1 + Σ comarks
    pub comarks: Vec<i64>,
    pub dual_coxeter: i64,
    pub dim_g: i64,
    pub num_pos_roots: i64,
    /// det(gram) = |Λ*/Λ| = Vol²(t/Λ)
    pub vol_sq: i64,
}

impl RootSystem {
    pub fn name(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    /// B(x, y) = xᵀ · gram · y, exact.
    pub fn pairing(&self, x: &[Q], y: &[Q]) -> Result<Q> {
        if x.len() != self.rank || y.len() != self.rank {
            return Err(Error::DimensionMismatch(format!(
                "pairing expects rank-{} vectors, got {} and {}",
                self.rank,
                x.len(),
                y.len()
            )));
        }
        let mut acc = Q::zero();
        for i in 0..self.rank {
            for j in 0..self.rank {
                acc += &x[i] * q(self.gram[i][j]) * &y[j];
            }
        }
        Ok(acc)
    }

    pub fn pairing_f64(&self, x: &[f64], y: &[f64]) -> f64 {
        let n = self.rank;
        let mut acc = 0.0;
        for i in 0..n {
            for j in 0..n {
                acc += x[i] * self.gram[i][j] as f64 * y[j];
            }
        }
        acc
    }

    /// uᵀ · adj(gram) · v for integer vectors in the fundamental-weight basis;
    /// equals det(gram)·B(vec u, vec v), always an integer.
    pub fn adj_pairing(&self, u: &[i64], v: &[i64]) -> i128 {
        let n = self.rank;
        let mut acc: i128 = 0;
        for i in 0..n {
            for j in 0..n {
                acc += u[i] as i128 * self.gram_adj[i][j] as i128 * v[j] as i128;
            }
        }
        acc
    }

    pub fn vol(&self) -> f64 {
        (self.vol_sq as f64).sqrt()
    }

    /// αᵢ(x) for the i-th simple root, exact.
    pub fn simple_root_value(&self, i: usize, x: &[Q]) -> Q {
        (0..self.rank).map(|l| q(self.cartan[l][i]) * &x[l]).sum()
    }

    /// α₀(x), exact.
    pub fn highest_root_value(&self, x: &[Q]) -> Q {
        (0..self.rank).map(|l| &self.highest_root[l] * &x[l]).sum()
    }

    /// Weyl group as the closure of the simple reflections, identity first.
    pub fn weyl_elements(&self, guard: usize) -> Result<Vec<WeylElement>> {
        let order = self.weyl_order();
        if order > guard as i64 {
            return Err(Error::WeylGuard {
                order: order as usize,
                guard,
            });
        }
        let gens: Vec<Vec<Vec<i64>>> = (0..self.rank).map(|i| self.simple_reflection(i)).collect();
        let mut seen: std::collections::BTreeSet<Vec<i64>> = std::collections::BTreeSet::new();
        let id = exact::imat_identity(self.rank);
        let flat = |m: &Vec<Vec<i64>>| m.iter().flatten().copied().collect::<Vec<i64>>();
        seen.insert(flat(&id));
        let mut out = vec![id.clone()];
        let mut frontier = vec![id];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in &frontier {
                for g in &gens {
                    let c = exact::imat_mul(g, w);
                    if seen.insert(flat(&c)) {
                        out.push(c.clone());
                        next.push(c);
                    }
                }
            }
            frontier = next;
        }
        debug_assert_eq!(out.len() as i64, order);
        Ok(out
            .into_iter()
            .map(|m| {
                let d = exact::imat_det(&m);
                debug_assert!(d == 1 || d == -1);
                WeylElement {
                    matrix: m,
                    sign: d as i8,
                }
            })
            .collect())
    }

    /// |W| from the closed-form order per family.
    pub fn weyl_order(&self) -> i64 {
        let n = self.rank as i64;
        let fact = |m: i64| (1..=m).product::<i64>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1i64 << n) * fact(n),
            Family::D => (1i64 << (n - 1)) * fact(n),
            Family::G => 12,
            Family::F => 1152,
            Family::E => match self.rank {
                6 => 51_840,
                7 => 2_903_040,
                8 => 696_729_600,
                _ => unreachable!(),
            },
        }
    }

    /// sᵢ(x) = x − αᵢ(x)·αᵢ∨ as an integer matrix:
    /// (sᵢ x)_j = x_j − δ_{ij} Σ_l C[l][i] x_l, so row i is e_i minus column i of C.
    fn simple_reflection(&self, i: usize) -> Vec<Vec<i64>> {
        let mut m = exact::imat_identity(self.rank);
        for l in 0..self.rank {
            m[i][l] -= self.cartan[l][i];
        }
        debug_assert_eq!(exact::imat_det(&m).abs(), 1);
        m
    }

    /// Action of a Weyl element on integer fundamental-weight coordinates:
    /// gram · W · gram⁻¹, verified integral.
    pub fn weyl_on_weight_coords(&self, w: &WeylElement) -> Vec<Vec<i64>> {
        let n = self.rank;
        let gw = exact::imat_mul(&self.gram, &w.matrix);
        // (gram · W · adj)/det must be integral
        let gwa = exact::imat_mul(&gw, &self.gram_adj);
        let det = self.vol_sq;
        let mut out = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                debug_assert_eq!(gwa[i][j] % det, 0);
                out[i][j] = gwa[i][j] / det;
            }
        }
        out
    }
}

/// Long/short pattern: d_i = B(αᵢ∨, αᵢ∨)/2 (1 for long roots, the squared
/// length ratio for short roots).
fn coroot_norms(family: Family, rank: usize) -> Vec<i64> {
    match family {
        Family::A | Family::D | Family::E => vec![1; rank],
        Family::B => {
            let mut d = vec![1; rank];
            d[rank - 1] = 2;
            d
        }
        Family::C => {
            let mut d = vec![2; rank];
            d[rank - 1] = 1;
            d
        }
        Family::F => vec![1, 1, 2, 2],
        Family::G => vec![1, 3],
    }
}

/// Cartan matrix with cartan[i][j] = αⱼ(αᵢ∨); fixed by the bond pattern and
/// the symmetry constraint cartan[i][j]·d_j = cartan[j][i]·d_i.
fn cartan_matrix(family: Family, rank: usize) -> Vec<Vec<i64>> {
    let n = rank;
    let mut c = vec![vec![0i64; n]; n];
    for i in 0..n {
        c[i][i] = 2;
    }
    let mut bond = |i: usize, j: usize, cij: i64, cji: i64| {
        c[i][j] = cij;
        c[j][i] = cji;
    };
    match family {
        Family::A => {
            for i in 0..n - 1 {
                bond(i, i + 1, -1, -1);
            }
        }
        Family::B => {
            for i in 0..n.saturating_sub(2) {
                bond(i, i + 1, -1, -1);
            }
            // α_{n-1} long, α_n short: C[n-1][n]·d_n = C[n][n-1]·d_{n-1}
            bond(n - 2, n - 1, -1, -2);
        }
        Family::C => {
            for i in 0..n.saturating_sub(2) {
                bond(i, i + 1, -1, -1);
            }
            bond(n - 2, n - 1, -2, -1);
        }
        Family::D => {
            for i in 0..n - 2 {
                bond(i, i + 1, -1, -1);
            }
            bond(n - 3, n - 1, -1, -1);
        }
        Family::E => {
            // Bourbaki numbering: chain 1–3–4–5–6(–7–8), node 2 attached to 4
            let chain: Vec<usize> = std::iter::once(0).chain(2..n).collect();
            for w in chain.windows(2) {
                bond(w[0], w[1], -1, -1);
            }
            bond(1, 3, -1, -1);
        }
        Family::F => {
            bond(0, 1, -1, -1);
            bond(1, 2, -1, -2); // d = (1,1,2,2): C[1][2]·2 = C[2][1]·1
            bond(2, 3, -1, -1);
        }
        Family::G => {
            bond(0, 1, -1, -3); // d = (1,3): C[0][1]·3 = C[1][0]·1
        }
    }
    c
}

fn valid_pair(family: Family, rank: usize) -> bool {
    match family {
        Family::A => rank >= 1,
        Family::B => rank >= 2,
        Family::C => rank >= 2,
        Family::D => rank >= 3,
        Family::E => (6..=8).contains(&rank),
        Family::F => rank == 4,
        Family::G => rank == 2,
    }
}

/// Build the full exact data set for a simple type from its Cartan matrix and
/// long/short pattern.
pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    if !valid_pair(family, rank) {
        return Err(Error::InvalidGroup(format!("{family}{rank}")));
    }
    if rank > 12 {
        return Err(Error::InvalidGroup(format!(
            "{family}{rank}: rank above supported bound"
        )));
    }
    let n = rank;
    let cartan = cartan_matrix(family, rank);
    let d = coroot_norms(family, rank);
    let mut gram = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            gram[i][j] = cartan[i][j] * d[j];
        }
    }
    // gram must come out symmetric with even diagonal
    for i in 0..n {
        debug_assert_eq!(gram[i][i] % 2, 0);
        for j in 0..n {
            debug_assert_eq!(gram[i][j], gram[j][i]);
        }
    }
    let det128 = exact::imat_det(&gram);
    let vol_sq = i64::try_from(det128).expect("gram determinant fits i64");
    assert!(vol_sq > 0, "gram must be positive definite");

    let gram_q: Vec<Vec<Q>> = gram
        .iter()
        .map(|r| r.iter().map(|&x| q(x)).collect())
        .collect();
    let weight_basis = exact::qmat_inverse(&gram_q);
    let gram_adj: Vec<Vec<i64>> = weight_basis
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    let v = x * q(vol_sq);
                    debug_assert!(exact::is_integer(&v));
                    v.to_integer().to_i64().expect("adjugate entry fits i64")
                })
                .collect()
        })
        .collect();
    let rho: Vec<Q> = (0..n)
        .map(|j| (0..n).map(|i| weight_basis[i][j].clone()).sum())
        .collect();

    // enumerate the root system by reflection closure on root-basis coefficients
    let roots = generate_roots(&cartan);
    let positive: Vec<&Vec<i64>> = roots.iter().filter(|m| m.iter().all(|&x| x >= 0)).collect();
    let num_pos_roots = positive.len() as i64;
    let dim_g = n as i64 + 2 * num_pos_roots;
    let highest = positive
        .iter()
        .max_by_key(|m| m.iter().sum::<i64>())
        .expect("nonempty root system");

    // α₀ as a functional: coefficients (C · m) since αⱼ-functional is column j
    let a0_func: Vec<Q> = (0..n)
        .map(|l| q((0..n).map(|j| cartan[l][j] * highest[j]).sum::<i64>()))
        .collect();
    // α₀∨ = vec(α₀) (α₀ is long): coroot coords mᵢ/dᵢ, must be integral
    let comarks: Vec<i64> = (0..n)
        .map(|i| {
            assert_eq!(highest[i] % d[i], 0, "comark not integral");
            highest[i] / d[i]
        })
        .collect();
    // sanity: B(α₀∨, α₀∨) = 2
    {
        let cv: Vec<Q> = comarks.iter().map(|&x| q(x)).collect();
        let mut b = Q::zero();
        for i in 0..n {
            for j in 0..n {
                b += &cv[i] * q(gram[i][j]) * &cv[j];
            }
        }
        assert_eq!(b, q(2), "highest root is not long under B");
    }
    let dual_coxeter = 1 + comarks.iter().sum::<i64>();

    let rs = RootSystem {
        family,
        rank,
        cartan,
        gram,
        gram_adj,
        weight_basis,
        rho,
        highest_root: a0_func,
        comarks,
        dual_coxeter,
        dim_g,
        num_pos_roots,
        vol_sq,
    };

    // strange formula B(ρ,ρ) = h∨·dim/12, exact — a whole-data self check
    let brho = rs.pairing(&rs.rho, &rs.rho)?;
    assert_eq!(
        brho,
        q(rs.dual_coxeter) * q(rs.dim_g) / q(12),
        "strange formula violated for {family}{rank}"
    );
    Ok(rs)
}

/// All roots as root-basis coefficient vectors, by closure under the simple
/// reflections m ↦ m − (C·m)ᵢ eᵢ.
fn generate_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut seen: std::collections::BTreeSet<Vec<i64>> = std::collections::BTreeSet::new();
    let mut frontier: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        seen.insert(e.clone());
        frontier.push(e);
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for m in &frontier {
            for i in 0..n {
                let pair: i64 = (0..n).map(|j| cartan[i][j] * m[j]).sum();
                let mut r = m.clone();
                r[i] -= pair;
                if seen.insert(r.clone()) {
                    next.push(r);
                }
            }
        }
        frontier = next;
    }
    seen.into_iter().collect()
}

/// Parse "A1", "b2", "G2", "E6" (case-insensitive).
pub fn parse_group(spec: &str) -> Result<RootSystem> {
    let s = spec.trim();
    if s.len() < 2 {
        return Err(Error::InvalidGroup(spec.to_string()));
    }
    let fam = match s.chars().next().unwrap().to_ascii_uppercase() {
        'A' => Family::A,
        'B' => Family::B,
        'C' => Family::C,
        'D' => Family::D,
        'E' => Family::E,
        'F' => Family::F,
        'G' => Family::G,
        _ => return Err(Error::InvalidGroup(spec.to_string())),
    };
    let rank: usize = s[1..]
        .parse()
        .map_err(|_| Error::InvalidGroup(spec.to_string()))?;
    build_root_system(fam, rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q_ratio, qvec};

    #[test]
    fn a1_data() {
        let rs = build_root_system(Family::A, 1).unwrap();
        assert_eq!(rs.gram, vec![vec![2]]);
        assert_eq!(rs.dual_coxeter, 2);
        assert_eq!(rs.dim_g, 3);
        assert_eq!(rs.num_pos_roots, 1);
        assert_eq!(rs.vol_sq, 2);
        assert_eq!(rs.rho, vec![q_ratio(1, 2)]);
        // B(rho,rho) = 1/2
        assert_eq!(rs.pairing(&rs.rho, &rs.rho).unwrap(), q_ratio(1, 2));
    }

    #[test]
    fn a2_data() {
        let rs = build_root_system(Family::A, 2).unwrap();
        assert_eq!(rs.gram, vec![vec![2, -1], vec![-1, 2]]);
        assert_eq!(rs.dual_coxeter, 3);
        assert_eq!(rs.dim_g, 8);
        assert_eq!(rs.vol_sq, 3);
        // B(w1, w1) = 2/3
        let w1: Vec<Q> = rs.weight_basis[0].clone();
        assert_eq!(rs.pairing(&w1, &w1).unwrap(), q_ratio(2, 3));
    }

    #[test]
    fn b2_data() {
        let rs = build_root_system(Family::B, 2).unwrap();
        assert_eq!(rs.gram, vec![vec![2, -2], vec![-2, 4]]);
        assert_eq!(rs.dual_coxeter, 3);
        assert_eq!(rs.dim_g, 10);
        assert_eq!(rs.vol_sq, 4);
    }

    #[test]
    fn g2_data() {
        let rs = build_root_system(Family::G, 2).unwrap();
        assert_eq!(rs.dual_coxeter, 4);
        assert_eq!(rs.dim_g, 14);
        assert_eq!(rs.num_pos_roots, 6);
        assert_eq!(rs.weyl_order(), 12);
        assert_eq!(rs.weyl_elements(10_000).unwrap().len(), 12);
    }

    #[test]
    fn weyl_a1_a2() {
        let rs = build_root_system(Family::A, 1).unwrap();
        let w = rs.weyl_elements(10_000).unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(w[0].matrix, vec![vec![1]]);
        assert_eq!(w[0].sign, 1);
        assert_eq!(w[1].matrix, vec![vec![-1]]);
        assert_eq!(w[1].sign, -1);

        let rs = build_root_system(Family::A, 2).unwrap();
        let w = rs.weyl_elements(10_000).unwrap();
        assert_eq!(w.len(), 6);
        assert_eq!(w.iter().filter(|e| e.sign == -1).count(), 3);
    }

    #[test]
    fn weyl_preserves_b_and_signs_balance() {
        for name in ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"] {
            let rs = parse_group(name).unwrap();
            let ws = rs.weyl_elements(10_000).unwrap();
            assert_eq!(ws.len() as i64, rs.weyl_order(), "{name}");
            let mut sum = 0i64;
            for w in &ws {
                // wᵀ gram w = gram
                let wt = exact::imat_transpose(&w.matrix);
                let m = exact::imat_mul(&exact::imat_mul(&wt, &rs.gram), &w.matrix);
                assert_eq!(m, rs.gram, "{name}: B not preserved");
                sum += w.sign as i64;
            }
            assert_eq!(sum, 0, "{name}: alternating character sums to 0");
        }
    }

    #[test]
    fn weyl_guard() {
        let rs = parse_group("E6").unwrap();
        assert!(matches!(
            rs.weyl_elements(10_000),
            Err(Error::WeylGuard { order: 51_840, .. })
        ));
    }

    #[test]
    fn strange_formula_all_supported() {
        // exactness is asserted inside build_root_system; just build them all
        for name in [
            "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4", "E6", "E7",
            "E8", "F4", "G2",
        ] {
            let rs = parse_group(name).unwrap();
            assert_eq!(
                rs.pairing(&rs.rho, &rs.rho).unwrap(),
                q(rs.dual_coxeter * rs.dim_g) / q(12),
                "{name}"
            );
        }
    }

    #[test]
    fn known_invariants() {
        for (name, hv, dim, volsq) in [
            ("A3", 4, 15, 4),
            ("B3", 5, 21, 4),
            ("C3", 4, 21, 4),
            ("D4", 6, 28, 4),
            ("E6", 12, 78, 3),
            ("E7", 18, 133, 2),
            ("E8", 30, 248, 1),
            ("F4", 9, 52, 4),
        ] {
            let rs = parse_group(name).unwrap();
            assert_eq!(rs.dual_coxeter, hv, "{name} h∨");
            assert_eq!(rs.dim_g, dim, "{name} dim");
            assert_eq!(rs.vol_sq, volsq, "{name} vol²");
        }
    }

    #[test]
    fn pairing_examples() {
        let rs = parse_group("A1").unwrap();
        // B(α∨, α∨) = 2
        assert_eq!(rs.pairing(&qvec(&[1]), &qvec(&[1])).unwrap(), q(2));
        assert_eq!(rs.pairing(&qvec(&[0]), &qvec(&[7])).unwrap(), q(0));
        assert!(rs.pairing(&qvec(&[1, 2]), &qvec(&[1])).is_err());
    }

    #[test]
    fn weight_basis_duality() {
        for name in ["A2", "B2", "G2", "D4", "F4"] {
            let rs = parse_group(name).unwrap();
            // weight_basis · gram = identity (so |det| = 1 and entries integral)
            for i in 0..rs.rank {
                for j in 0..rs.rank {
                    let mut acc = Q::zero();
                    for l in 0..rs.rank {
                        acc += &rs.weight_basis[i][l] * q(rs.gram[l][j]);
                    }
                    assert_eq!(acc, if i == j { q(1) } else { q(0) }, "{name}");
                }
            }
        }
    }

    #[test]
    fn invalid_groups_rejected() {
        assert!(parse_group("A0").is_err());
        assert!(parse_group("E9").is_err());
        assert!(parse_group("G3").is_err());
        assert!(parse_group("F5").is_err());
        assert!(parse_group("H4").is_err());
        assert!(parse_group("B1").is_err());
    }

    #[test]
    fn weight_coords_action_integral() {
        for name in ["A2", "B2", "G2"] {
            let rs = parse_group(name).unwrap();
            for w in rs.weyl_elements(10_000).unwrap() {
                let m = rs.weyl_on_weight_coords(&w);
                assert_eq!(exact::imat_det(&m).abs(), 1, "{name}");
            }
        }
    }
}
