//! The cone `E` of extension classes and the cone `D` of Hom functionals on the
//! lattice `Λ = ker(multiplicities → dimension vector)`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{ArQuiver, ModuleClass};
use crate::error::{Error, Result};
use crate::linalg;
use crate::polycone::{compare, dual_cone, Comparison, RationalCone};
use crate::rootsys;

#[derive(Debug, Clone, Serialize)]
pub struct KTheoryReport {
    pub bound: i64,
    pub lambda_rank: usize,
    /// Integer basis of `Λ` inside `Z^N`.
    pub lambda_basis: Vec<Vec<i64>>,
    /// Extreme generators of `E`, as vectors in `Z^N`.
    pub e_generators: Vec<Vec<i64>>,
    /// 1-based positions of the non-projective `U_k` whose `[U_k, -]` spans `D`.
    pub d_positions: Vec<usize>,
    /// `([U_k, U_t])_t` for each of those positions.
    pub d_generators: Vec<Vec<i64>>,
    pub d_independent: bool,
    /// `E ⊆ D^∨` checked generator by generator.
    pub containment: bool,
    pub duality_verdict: Comparison,
    pub stabilized: bool,
}

/// `2 · height(highest root)`.
pub fn default_bound(ar: &ArQuiver) -> i64 {
    2 * rootsys::highest_root(ar.quiver().cartan()).height()
}

fn all_modules_up_to(ar: &ArQuiver, bound: i64) -> Vec<ModuleClass> {
    let heights: Vec<i64> = ar.betas().iter().map(|b| b.height()).collect();
    let mut out = Vec::new();
    let mut cur = ModuleClass::zero(ar.len());
    fn rec(h: &[i64], t: usize, left: i64, cur: &mut ModuleClass, out: &mut Vec<ModuleClass>) {
        if t == h.len() {
            out.push(cur.clone());
            return;
        }
        let mut m = 0;
        while m * h[t] <= left {
            cur.0[t] = m as u32;
            rec(h, t + 1, left - m * h[t], cur, out);
            m += 1;
        }
        cur.0[t] = 0;
    }
    rec(&heights, 0, bound, &mut cur, &mut out);
    out
}

/// `[M] - [X]` over every proper degeneration `X <_deg M` with `dim M ≤ bound`.
fn extension_classes(ar: &ArQuiver, bound: i64) -> Result<BTreeSet<Vec<i64>>> {
    let mut by_dim: BTreeMap<Vec<i64>, Vec<(ModuleClass, Vec<i64>)>> = BTreeMap::new();
    for m in all_modules_up_to(ar, bound) {
        let profile = ar.hom_profile(&m);
        by_dim
            .entry(ar.dim_vector(&m))
            .or_default()
            .push((m, profile));
    }
    let mut gens = BTreeSet::new();
    for group in by_dim.values() {
        for (m, hm) in group {
            for (x, hx) in group {
                if x != m && hx.iter().zip(hm).all(|(a, b)| a <= b) {
                    let g: Vec<i64> =
                        m.0.iter()
                            .zip(&x.0)
                            .map(|(&a, &b)| a as i64 - b as i64)
                            .collect();
                    gens.insert(linalg::primitive(&g));
                }
            }
        }
    }
    Ok(gens)
}

fn to_lambda_coords(v: &[i64], basis: &[Vec<i64>]) -> Result<Vec<i64>> {
    let c = linalg::coordinates(v, basis)
        .ok_or_else(|| Error::ConsistencyFailure("extension class outside Λ".into()))?;
    linalg::clear_denominators(&c)
}

fn e_cone(ar: &ArQuiver, bound: i64, basis: &[Vec<i64>]) -> Result<(RationalCone, Vec<Vec<i64>>)> {
    let gens = extension_classes(ar, bound)?;
    let coords = gens
        .iter()
        .map(|g| to_lambda_coords(g, basis))
        .collect::<Result<Vec<_>>>()?;
    let cone = RationalCone::from_generators(basis.len(), coords.clone(), Vec::new())?;
    // Report only generators that are extreme.
    let rays: BTreeSet<Vec<i64>> = cone.rays()?.iter().cloned().collect();
    let extreme = gens
        .iter()
        .zip(&coords)
        .filter(|(_, c)| rays.contains(*c))
        .map(|(g, _)| g.clone())
        .collect();
    Ok((cone, extreme))
}

pub fn ktheory_cones(ar: &ArQuiver, bound: Option<i64>) -> Result<KTheoryReport> {
    let bound = bound.unwrap_or_else(|| default_bound(ar));
    let n = ar.quiver().rank();
    let big_n = ar.len();
    let columns: Vec<Vec<i64>> = (0..n)
        .map(|i| ar.betas().iter().map(|b| b.0[i]).collect())
        .collect();
    let basis = linalg::nullspace(&columns, big_n)?;
    let r = basis.len();

    let (e, e_generators) = e_cone(ar, bound, &basis)?;

    let d_idx: Vec<usize> = (0..big_n).filter(|&k| !ar.is_projective(k)).collect();
    let d_generators: Vec<Vec<i64>> = d_idx
        .iter()
        .map(|&k| (0..big_n).map(|t| ar.hom_indec(k, t)).collect())
        .collect();
    // A functional on Z^N restricted to Λ, in Λ coordinates.
    let d_coords: Vec<Vec<i64>> = d_generators
        .iter()
        .map(|h| basis.iter().map(|b| linalg::dot(h, b) as i64).collect())
        .collect();
    let d_independent = d_coords.len() == r && linalg::rank(&d_coords) == r;
    let d = RationalCone::from_generators(r, d_coords.clone(), Vec::new())?;
    let d_dual = dual_cone(&d)?;

    let containment = e
        .rays()?
        .iter()
        .all(|g| d_coords.iter().all(|f| linalg::dot(f, g) >= 0));
    let duality_verdict = compare(&e, &d_dual)?;
    let (e_next, _) = e_cone(ar, bound + 1, &basis)?;
    let stabilized = compare(&e, &e_next)? == Comparison::Equal;

    Ok(KTheoryReport {
        bound,
        lambda_rank: r,
        lambda_basis: basis,
        e_generators,
        d_positions: d_idx.iter().map(|k| k + 1).collect(),
        d_generators,
        d_independent,
        containment,
        duality_verdict,
        stabilized,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiverrep::{ar_quiver, DynkinQuiver};

    #[test]
    fn a2_single_generator() {
        let ar = ar_quiver(&DynkinQuiver::equioriented_a(2), &"2,1,2".parse().unwrap()).unwrap();
        let rep = ktheory_cones(&ar, None).unwrap();
        assert_eq!(rep.lambda_rank, 1);
        assert_eq!(rep.e_generators, vec![vec![1, -1, 1]]);
        assert_eq!(rep.d_positions, vec![3]);
        assert_eq!(linalg::dot(&rep.d_generators[0], &rep.e_generators[0]), 1);
        assert!(rep.d_independent && rep.containment && rep.stabilized);
        assert_eq!(rep.duality_verdict, Comparison::Equal);
    }

    #[test]
    fn a3_duality() {
        let ar = ar_quiver(
            &DynkinQuiver::equioriented_a(3),
            &"3,2,3,1,2,3".parse().unwrap(),
        )
        .unwrap();
        let rep = ktheory_cones(&ar, Some(4)).unwrap();
        assert_eq!(rep.lambda_rank, 3);
        assert_eq!(rep.d_generators.len(), 3);
        assert!(rep.d_independent && rep.containment);
        assert_eq!(rep.duality_verdict, Comparison::Equal);
    }
}
