//! Double description over the integers.
//!
//! Computes the extreme rays and a lineality basis of `{x : a·x ≥ 0 for all a}`.
//! All vectors are kept primitive after every combination; adjacency of rays
//! is decided combinatorially from their zero sets.

use crate::error::{Error, Result};
use crate::linalg::{self, primitive_i128};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct VRep {
    pub rays: Vec<Vec<i64>>,
    pub lineality: Vec<Vec<i64>>,
}

#[derive(Clone)]
struct Ray {
    v: Vec<i128>,
    zeros: Vec<u64>,
}

fn bit_set(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

fn is_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn dot(a: &[i64], v: &[i128]) -> Result<i128> {
    a.iter().zip(v).try_fold(0i128, |acc, (&x, &y)| {
        (x as i128)
            .checked_mul(y)
            .and_then(|p| acc.checked_add(p))
            .ok_or(Error::Overflow)
    })
}

/// `alpha * u - beta * v`, made primitive.
fn combine(alpha: i128, u: &[i128], beta: i128, v: &[i128]) -> Result<Vec<i128>> {
    let mut out = u
        .iter()
        .zip(v)
        .map(|(&x, &y)| {
            let a = alpha.checked_mul(x).ok_or(Error::Overflow)?;
            let b = beta.checked_mul(y).ok_or(Error::Overflow)?;
            a.checked_sub(b).ok_or(Error::Overflow)
        })
        .collect::<Result<Vec<_>>>()?;
    primitive_i128(&mut out);
    Ok(out)
}

fn to_i64(v: &[i128]) -> Result<Vec<i64>> {
    v.iter()
        .map(|&x| i64::try_from(x).map_err(|_| Error::Overflow))
        .collect()
}

pub(crate) fn double_description(dim: usize, constraints: &[Vec<i64>]) -> Result<VRep> {
    let words = constraints.len().div_ceil(64).max(1);
    let mut lineality: Vec<Vec<i128>> = (0..dim)
        .map(|i| {
            let mut e = vec![0i128; dim];
            e[i] = 1;
            e
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (c, a) in constraints.iter().enumerate() {
        if a.iter().all(|&x| x == 0) {
            rays.iter_mut().for_each(|r| bit_set(&mut r.zeros, c));
            continue;
        }
        let values = lineality
            .iter()
            .map(|l| dot(a, l))
            .collect::<Result<Vec<_>>>()?;
        if let Some(p) = values.iter().position(|&x| x != 0) {
            let mut pivot = lineality.swap_remove(p);
            let mut pv = values[p];
            if pv < 0 {
                pivot.iter_mut().for_each(|x| *x = -*x);
                pv = -pv;
            }
            for l in lineality.iter_mut() {
                let al = dot(a, l)?;
                if al != 0 {
                    *l = combine(pv, l, al, &pivot)?;
                }
            }
            for r in rays.iter_mut() {
                let ar = dot(a, &r.v)?;
                if ar != 0 {
                    r.v = combine(pv, &r.v, ar, &pivot)?;
                }
                bit_set(&mut r.zeros, c);
            }
            // The pivot saturates every earlier constraint but not this one.
            let mut zeros = vec![0u64; words];
            (0..c).for_each(|i| bit_set(&mut zeros, i));
            rays.push(Ray { v: pivot, zeros });
            continue;
        }

        let vals = rays
            .iter()
            .map(|r| dot(a, &r.v))
            .collect::<Result<Vec<_>>>()?;
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i] > 0).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i] < 0).collect();
        let mut next: Vec<Ray> = Vec::with_capacity(rays.len());
        for (i, r) in rays.iter().enumerate() {
            if vals[i] >= 0 {
                let mut r = r.clone();
                if vals[i] == 0 {
                    bit_set(&mut r.zeros, c);
                }
                next.push(r);
            }
        }
        for &p in &pos {
            for &n in &neg {
                let common: Vec<u64> = rays[p]
                    .zeros
                    .iter()
                    .zip(&rays[n].zeros)
                    .map(|(x, y)| x & y)
                    .collect();
                let adjacent = (0..rays.len())
                    .all(|o| o == p || o == n || !is_subset(&common, &rays[o].zeros));
                if !adjacent {
                    continue;
                }
                let v = combine(vals[p], &rays[n].v, vals[n], &rays[p].v)?;
                let mut zeros = common;
                bit_set(&mut zeros, c);
                next.push(Ray { v, zeros });
            }
        }
        rays = next;
    }

    let lineality64 = lineality
        .iter()
        .map(|l| to_i64(l))
        .collect::<Result<Vec<_>>>()?;
    let lineality = linalg::row_space_basis(&lineality64, dim)?;
    let mut out_rays = Vec::with_capacity(rays.len());
    for r in &rays {
        let v = linalg::project_off(&to_i64(&r.v)?, &lineality)?;
        if v.iter().any(|&x| x != 0) {
            out_rays.push(v);
        }
    }
    out_rays.sort();
    out_rays.dedup();
    Ok(VRep {
        rays: out_rays,
        lineality,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orthant() {
        let v = double_description(3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(v.rays, vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
        assert!(v.lineality.is_empty());
    }

    #[test]
    fn square_pyramid_over_a_quadrilateral() {
        // Cone over the square |x|,|y| ≤ z: four rays (±1,±1,1).
        let c = vec![vec![1, 0, 1], vec![-1, 0, 1], vec![0, 1, 1], vec![0, -1, 1]];
        let v = double_description(3, &c).unwrap();
        assert_eq!(
            v.rays,
            vec![
                vec![-1, -1, 1],
                vec![-1, 1, 1],
                vec![1, -1, 1],
                vec![1, 1, 1]
            ]
        );
    }

    #[test]
    fn redundant_and_zero_constraints() {
        let c = vec![vec![1, 0], vec![2, 0], vec![0, 0], vec![1, 1]];
        let v = double_description(2, &c).unwrap();
        assert_eq!(v.rays, vec![vec![0, 1], vec![1, -1]]);
    }

    #[test]
    fn opposite_halfspaces_give_a_plane() {
        let v = double_description(3, &[vec![1, 0, 0], vec![-1, 0, 0]]).unwrap();
        assert!(v.rays.is_empty());
        assert_eq!(v.lineality, vec![vec![0, 1, 0], vec![0, 0, 1]]);
    }
}
