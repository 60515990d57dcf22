//! Small exact-arithmetic helpers: rational vectors/matrices over `BigRational`
//! and integer matrices with fraction-free determinants.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_ratio(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qvec(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

pub fn qvec_to_f64(v: &[Q]) -> Vec<f64> {
    v.iter().map(|x| x.to_f64().unwrap()).collect()
}

/// x ↦ x mod 1 in [0, 1)
pub fn frac_part(x: &Q) -> Q {
    let f = x.floor();
    x - f
}

/// reduce mod 2 into [0, 2)
pub fn mod2(x: &Q) -> Q {
    let two = q(2);
    let f = (x / &two).floor();
    x - f * two
}

pub fn is_integer(x: &Q) -> bool {
    x.denom().is_one()
}

/// y = M x for integer matrix M (rows) and rational vector x
pub fn imat_apply_q(m: &[Vec<i64>], x: &[Q]) -> Vec<Q> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(x)
                .fold(Q::zero(), |acc, (&a, xi)| acc + q(a) * xi)
        })
        .collect()
}

pub fn imat_apply_i(m: &[Vec<i64>], x: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(x).map(|(&a, &b)| a * b).sum())
        .collect()
}

pub fn imat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..k).map(|l| a[i][l] * b[l][j]).sum())
                .collect()
        })
        .collect()
}

pub fn imat_transpose(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let m = a[0].len();
    (0..m).map(|j| (0..n).map(|i| a[i][j]).collect()).collect()
}

pub fn imat_identity(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

/// Determinant by the Bareiss fraction-free algorithm (exact in i128).
pub fn imat_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for i in 0..n {
        if a[i][i] == 0 {
            let Some(p) = (i + 1..n).find(|&r| a[r][i] != 0) else {
                return 0;
            };
            a.swap(i, p);
            sign = -sign;
        }
        for r in i + 1..n {
            for c in i + 1..n {
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) / prev;
            }
            a[r][i] = 0;
        }
        prev = a[i][i];
    }
    sign * a[n - 1][n - 1]
}

/// Inverse of a rational matrix by Gauss–Jordan; panics if singular.
pub fn qmat_inverse(m: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m.to_vec();
    let mut inv: Vec<Vec<Q>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("singular matrix");
        a.swap(col, piv);
        inv.swap(col, piv);
        let d = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &d;
            inv[col][j] = &inv[col][j] / &d;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = &f * &a[col][j];
                    a[r][j] = &a[r][j] - t;
                    let t = &f * &inv[col][j];
                    inv[r][j] = &inv[r][j] - t;
                }
            }
        }
    }
    inv
}

pub fn qmat_apply(m: &[Vec<Q>], x: &[Q]) -> Vec<Q> {
    m.iter()
        .map(|row| row.iter().zip(x).fold(Q::zero(), |acc, (a, b)| acc + a * b))
        .collect()
}

/// Format a rational as "p/q" (or "p" when integral).
pub fn q_to_string(x: &Q) -> String {
    if is_integer(x) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn q_parse(s: &str) -> Option<Q> {
    match s.split_once('/') {
        Some((a, b)) => {
            let n: BigInt = a.trim().parse().ok()?;
            let d: BigInt = b.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Q::new(n, d))
        }
        None => {
            let n: BigInt = s.trim().parse().ok()?;
            Some(Q::from_integer(n))
        }
    }
}

pub fn big_to_f64(x: &BigInt) -> f64 {
    x.to_f64().unwrap_or(f64::INFINITY)
}

pub fn bigint_abs(x: &BigInt) -> BigInt {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_small() {
        assert_eq!(imat_det(&[vec![2]]), 2);
        assert_eq!(imat_det(&[vec![2, -1], vec![-1, 2]]), 3);
        assert_eq!(imat_det(&[vec![2, -2], vec![-2, 4]]), 4);
        assert_eq!(imat_det(&[vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(
            imat_det(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]),
            -3
        );
    }

    #[test]
    fn frac_and_mod2() {
        assert_eq!(frac_part(&q_ratio(-3, 2)), q_ratio(1, 2));
        assert_eq!(frac_part(&q(2)), q(0));
        assert_eq!(mod2(&q_ratio(17, 5)), q_ratio(7, 5));
        assert_eq!(mod2(&q(-1)), q(1));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = vec![qvec(&[2, -1]), qvec(&[-1, 2])];
        let inv = qmat_inverse(&m);
        assert_eq!(inv[0][0], q_ratio(2, 3));
        assert_eq!(inv[0][1], q_ratio(1, 3));
    }

    #[test]
    fn parse_roundtrip() {
        let x = q_ratio(-7, 3);
        assert_eq!(q_parse(&q_to_string(&x)).unwrap(), x);
        assert_eq!(q_parse("5").unwrap(), q(5));
    }
}
