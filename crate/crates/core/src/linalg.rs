//! Small exact linear algebra over the rationals.
//!
//! Everything here works on integer input and produces integer output
//! (primitive vectors); intermediate values are big rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub fn gcd_i128(a: i128, b: i128) -> i128 {
    a.gcd(&b)
}

/// Divides by the content (gcd of entries). The zero vector is left alone.
pub fn primitive_i128(v: &mut [i128]) {
    let g = v.iter().fold(0i128, |g, &x| gcd_i128(g, x));
    if g > 1 {
        for x in v.iter_mut() {
            *x /= g;
        }
    }
}

pub fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g > 1 {
        v.iter().map(|x| x / g).collect()
    } else {
        v.to_vec()
    }
}

pub fn dot(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum()
}

pub(crate) fn to_rational_rows(rows: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect()
}

/// In-place reduced row echelon form; returns pivot columns.
pub(crate) fn rref(m: &mut Vec<Vec<BigRational>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row >= m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..m[r].len() {
                    let delta = &f * &m[row][c];
                    m[r][c] -= delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.truncate(row);
    pivots
}

pub fn rank(rows: &[Vec<i64>]) -> usize {
    let Some(ncols) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut m = to_rational_rows(rows);
    rref(&mut m, ncols).len()
}

/// Scales a rational vector by a positive factor to a primitive integer vector.
pub fn clear_denominators(v: &[BigRational]) -> Result<Vec<i64>> {
    let lcm = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    ints.iter()
        .map(|x| {
            let y = if g.is_zero() || g.is_one() {
                x.clone()
            } else {
                x / &g
            };
            y.to_i64().ok_or(Error::Overflow)
        })
        .collect()
}

/// Canonical integer basis of the row space: the RREF rows, each made primitive.
pub fn row_space_basis(rows: &[Vec<i64>], ncols: usize) -> Result<Vec<Vec<i64>>> {
    let mut m = to_rational_rows(rows);
    rref(&mut m, ncols);
    m.iter().map(|r| clear_denominators(r)).collect()
}

/// Canonical integer basis of `{x : rows · x = 0}` built from the RREF free columns.
pub fn nullspace(rows: &[Vec<i64>], ncols: usize) -> Result<Vec<Vec<i64>>> {
    let mut m = to_rational_rows(rows);
    let pivots = rref(&mut m, ncols);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![BigRational::zero(); ncols];
        v[free] = BigRational::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[r][free].clone();
        }
        basis.push(clear_denominators(&v)?);
    }
    Ok(basis)
}

/// Orthogonal projection of `v` onto the complement of span(`basis`), scaled
/// by a positive factor to a primitive integer vector.
pub fn project_off(v: &[i64], basis: &[Vec<i64>]) -> Result<Vec<i64>> {
    if basis.is_empty() {
        return Ok(primitive(v));
    }
    // Solve (B Bᵀ) c = B v, then v - Bᵀ c.
    let k = basis.len();
    let n = v.len();
    let mut aug: Vec<Vec<BigRational>> = (0..k)
        .map(|i| {
            let mut row: Vec<BigRational> = (0..k)
                .map(|j| BigRational::from_integer(BigInt::from(dot(&basis[i], &basis[j]))))
                .collect();
            row.push(BigRational::from_integer(BigInt::from(dot(&basis[i], v))));
            row
        })
        .collect();
    rref(&mut aug, k);
    let mut out: Vec<BigRational> = v
        .iter()
        .map(|&x| BigRational::from_integer(BigInt::from(x)))
        .collect();
    for (i, b) in basis.iter().enumerate() {
        let c = &aug[i][k];
        for j in 0..n {
            out[j] -= c * BigRational::from_integer(BigInt::from(b[j]));
        }
    }
    clear_denominators(&out)
}

/// Coordinates of `v` in the basis `basis` (rows), if `v` lies in their span.
pub fn coordinates(v: &[i64], basis: &[Vec<i64>]) -> Option<Vec<BigRational>> {
    let k = basis.len();
    let n = v.len();
    // Columns are basis vectors; augmented with v.
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|j| {
            let mut row: Vec<BigRational> = basis
                .iter()
                .map(|b| BigRational::from_integer(BigInt::from(b[j])))
                .collect();
            row.push(BigRational::from_integer(BigInt::from(v[j])));
            row
        })
        .collect();
    let pivots = rref(&mut m, k + 1);
    if pivots.contains(&k) || pivots.len() < k {
        return None;
    }
    Some((0..k).map(|i| m[i][k].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_of_root_columns() {
        // Columns α1, α1+α2, α2 of A2: kernel spanned by (1,-1,1).
        let rows = vec![vec![1, 1, 0], vec![0, 1, 1]];
        let ns = nullspace(&rows, 3).unwrap();
        assert_eq!(ns, vec![vec![1, -1, 1]]);
    }

    #[test]
    fn projection_is_orthogonal() {
        let p = project_off(&[1, 1, 0], &[vec![1, 0, 0]]).unwrap();
        assert_eq!(p, vec![0, 1, 0]);
        let p = project_off(&[2, 0], &[vec![1, 1]]).unwrap();
        assert_eq!(p, vec![1, -1]);
    }

    #[test]
    fn rank_and_coordinates() {
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[]), 0);
        let c = coordinates(&[3, 5], &[vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(c[0], BigRational::from_integer(3.into()));
        assert_eq!(c[1], BigRational::from_integer(2.into()));
        assert!(coordinates(&[1, 0, 0], &[vec![0, 1, 0]]).is_none());
    }
}
