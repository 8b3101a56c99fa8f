//! Exact rational polyhedral cones.
//!
//! A [`RationalCone`] is created from either representation. The other one is
//! computed on first use by double description and memoized; the cache is
//! invisible to callers. Rays are primitive integer vectors orthogonal to the
//! lineality space and sorted lexicographically, so output is deterministic.

mod dd;

use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use once_cell::sync::OnceCell;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use dd::{double_description, VRep};

/// A linear form read as the inequality `form · x ≥ 0`, content reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LinearForm(Vec<i64>);

impl LinearForm {
    pub fn new(coeffs: Vec<i64>) -> Self {
        LinearForm(linalg::primitive(&coeffs))
    }

    /// Clears denominators by a positive factor.
    pub fn from_rationals(coeffs: &[BigRational]) -> Result<Self> {
        Ok(LinearForm(linalg::clear_denominators(coeffs)?))
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn eval(&self, x: &[i64]) -> i128 {
        linalg::dot(&self.0, x)
    }

    pub fn eval_rational(&self, x: &[BigRational]) -> BigRational {
        self.0
            .iter()
            .zip(x)
            .map(|(&a, b)| b * BigRational::from_integer(a.into()))
            .fold(BigRational::zero(), |acc, t| acc + t)
    }

    pub fn negated(&self) -> Self {
        LinearForm(self.0.iter().map(|x| -x).collect())
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            if mag == 1 {
                write!(f, "{sign}x{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}x{}", i + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " >= 0")
    }
}

/// Minimal H-representation: facet normals (ineqs) and implicit equalities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HRep {
    pub facets: Vec<LinearForm>,
    pub equalities: Vec<LinearForm>,
}

#[derive(Debug, Clone)]
enum Source {
    Inequalities(Vec<LinearForm>),
    Generators {
        rays: Vec<Vec<i64>>,
        lineality: Vec<Vec<i64>>,
    },
}

#[derive(Debug, Clone)]
pub struct RationalCone {
    dim: usize,
    source: Source,
    vrep: OnceCell<VRep>,
    hrep: OnceCell<HRep>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConeAnalysis {
    pub dimension: usize,
    pub lineality_dim: usize,
    pub ray_count: usize,
    pub is_simplicial_mod_lineality: bool,
    pub facet_count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Comparison {
    Equal,
    ASubsetB,
    BSubsetA,
    Incomparable,
}

/// A generator of one cone that lies outside another, with the violated form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub generator: Vec<i64>,
    pub is_lineality: bool,
    pub violated: LinearForm,
    pub value: i64,
}

fn check_dims<'a>(dim: usize, vs: impl IntoIterator<Item = &'a [i64]>) -> Result<()> {
    for v in vs {
        if v.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: v.len(),
            });
        }
    }
    Ok(())
}

impl RationalCone {
    pub fn from_inequalities(dim: usize, forms: Vec<LinearForm>) -> Result<Self> {
        check_dims(dim, forms.iter().map(|f| f.coeffs()))?;
        Ok(RationalCone {
            dim,
            source: Source::Inequalities(forms),
            vrep: OnceCell::new(),
            hrep: OnceCell::new(),
        })
    }

    pub fn from_generators(
        dim: usize,
        rays: Vec<Vec<i64>>,
        lineality: Vec<Vec<i64>>,
    ) -> Result<Self> {
        check_dims(dim, rays.iter().chain(&lineality).map(Vec::as_slice))?;
        Ok(RationalCone {
            dim,
            source: Source::Generators { rays, lineality },
            vrep: OnceCell::new(),
            hrep: OnceCell::new(),
        })
    }

    pub fn full_space(dim: usize) -> Self {
        RationalCone::from_inequalities(dim, Vec::new()).expect("no forms")
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// The forms this cone was built from, if any.
    pub fn defining_forms(&self) -> Option<&[LinearForm]> {
        match &self.source {
            Source::Inequalities(f) => Some(f),
            Source::Generators { .. } => None,
        }
    }

    fn vrep(&self) -> Result<&VRep> {
        self.vrep.get_or_try_init(|| match &self.source {
            Source::Inequalities(forms) => {
                let rows: Vec<Vec<i64>> = forms.iter().map(|f| f.0.clone()).collect();
                double_description(self.dim, &rows)
            }
            Source::Generators { .. } => {
                // Generators may be redundant: go through the minimal H-rep.
                let h = self.hrep()?;
                double_description(self.dim, &h_rows(h))
            }
        })
    }

    pub fn hrep(&self) -> Result<&HRep> {
        self.hrep.get_or_try_init(|| {
            let (rays, lineality) = match &self.source {
                Source::Generators { rays, lineality } => (rays.clone(), lineality.clone()),
                Source::Inequalities(_) => {
                    let v = self.vrep()?;
                    (v.rays.clone(), v.lineality.clone())
                }
            };
            let mut rows = rays;
            for l in lineality {
                rows.push(l.iter().map(|x| -x).collect());
                rows.push(l);
            }
            let dual = double_description(self.dim, &rows)?;
            Ok(HRep {
                facets: dual.rays.into_iter().map(LinearForm).collect(),
                equalities: dual.lineality.into_iter().map(LinearForm).collect(),
            })
        })
    }

    pub fn rays(&self) -> Result<&[Vec<i64>]> {
        Ok(&self.vrep()?.rays)
    }

    pub fn lineality(&self) -> Result<&[Vec<i64>]> {
        Ok(&self.vrep()?.lineality)
    }

    /// Minimal facet normals.
    pub fn facets(&self) -> Result<&[LinearForm]> {
        Ok(&self.hrep()?.facets)
    }

    pub fn equalities(&self) -> Result<&[LinearForm]> {
        Ok(&self.hrep()?.equalities)
    }

    pub fn contains(&self, x: &[i64]) -> Result<bool> {
        let h = self.hrep()?;
        Ok(h.facets.iter().all(|f| f.eval(x) >= 0) && h.equalities.iter().all(|f| f.eval(x) == 0))
    }

    pub fn contains_rational(&self, x: &[BigRational]) -> Result<bool> {
        let h = self.hrep()?;
        Ok(h.facets.iter().all(|f| !f.eval_rational(x).is_negative())
            && h.equalities.iter().all(|f| f.eval_rational(x).is_zero()))
    }

    pub fn analyze(&self) -> Result<ConeAnalysis> {
        let v = self.vrep()?;
        let h = self.hrep()?;
        let dimension = self.dim - h.equalities.len();
        let lineality_dim = v.lineality.len();
        Ok(ConeAnalysis {
            dimension,
            lineality_dim,
            ray_count: v.rays.len(),
            is_simplicial_mod_lineality: v.rays.len() == dimension - lineality_dim,
            facet_count: h.facets.len(),
        })
    }

    /// Sum of the extreme rays; lies in the relative interior.
    pub fn interior_point(&self) -> Result<Vec<i64>> {
        let v = self.vrep()?;
        if v.rays.is_empty() && v.lineality.is_empty() {
            return Err(Error::ZeroCone);
        }
        let mut p = vec![0i64; self.dim];
        for r in &v.rays {
            for (x, y) in p.iter_mut().zip(r) {
                *x = x.checked_add(*y).ok_or(Error::Overflow)?;
            }
        }
        Ok(p)
    }

    /// First generator of `self` that `other` does not contain.
    pub fn first_escape(&self, other: &RationalCone) -> Result<Option<Witness>> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        let v = self.vrep()?;
        let h = other.hrep()?;
        for r in &v.rays {
            for f in &h.facets {
                let val = f.eval(r);
                if val < 0 {
                    return Ok(Some(witness(r, false, f.clone(), val)));
                }
            }
            for f in &h.equalities {
                let val = f.eval(r);
                if val != 0 {
                    let g = if val > 0 { f.negated() } else { f.clone() };
                    return Ok(Some(witness(r, false, g, -val.abs())));
                }
            }
        }
        for l in &v.lineality {
            for f in h.facets.iter().chain(&h.equalities) {
                let val = f.eval(l);
                if val != 0 {
                    let g = if val > 0 { f.negated() } else { f.clone() };
                    return Ok(Some(witness(l, true, g, -val.abs())));
                }
            }
        }
        Ok(None)
    }

    pub fn is_subset_of(&self, other: &RationalCone) -> Result<bool> {
        Ok(self.first_escape(other)?.is_none())
    }

    pub fn to_json(&self) -> Result<ConeJson> {
        let h = self.hrep()?;
        let mut ineqs: Vec<Vec<i64>> = h.facets.iter().map(|f| f.0.clone()).collect();
        for e in &h.equalities {
            ineqs.push(e.0.clone());
            ineqs.push(e.negated().0);
        }
        Ok(ConeJson {
            dim: self.dim,
            ineqs,
            rays: self.rays()?.to_vec(),
            lineality: self.lineality()?.to_vec(),
        })
    }

    /// Builds from JSON: inequalities when present, otherwise generators.
    pub fn from_json(j: &ConeJson) -> Result<Self> {
        if !j.ineqs.is_empty() || (j.rays.is_empty() && j.lineality.is_empty()) {
            RationalCone::from_inequalities(
                j.dim,
                j.ineqs.iter().cloned().map(LinearForm::new).collect(),
            )
        } else {
            RationalCone::from_generators(j.dim, j.rays.clone(), j.lineality.clone())
        }
    }
}

fn witness(g: &[i64], is_lineality: bool, violated: LinearForm, value: i128) -> Witness {
    Witness {
        generator: g.to_vec(),
        is_lineality,
        violated,
        value: i64::try_from(value).unwrap_or(i64::MIN),
    }
}

fn h_rows(h: &HRep) -> Vec<Vec<i64>> {
    let mut rows: Vec<Vec<i64>> = h.facets.iter().map(|f| f.0.clone()).collect();
    for e in &h.equalities {
        rows.push(e.0.clone());
        rows.push(e.negated().0);
    }
    rows
}

pub fn cone_from_inequalities(dim: usize, forms: Vec<LinearForm>) -> Result<RationalCone> {
    RationalCone::from_inequalities(dim, forms)
}

pub fn analyze(c: &RationalCone) -> Result<ConeAnalysis> {
    c.analyze()
}

/// `{y : y·x ≥ 0 for all x in c}`. Rays of `c` become inequalities, the
/// lineality becomes equalities.
pub fn dual_cone(c: &RationalCone) -> Result<RationalCone> {
    let v = c.vrep()?;
    let mut forms: Vec<LinearForm> = v.rays.iter().cloned().map(LinearForm::new).collect();
    for l in &v.lineality {
        forms.push(LinearForm::new(l.clone()));
        forms.push(LinearForm::new(l.iter().map(|x| -x).collect()));
    }
    RationalCone::from_inequalities(c.dim, forms)
}

pub fn compare(a: &RationalCone, b: &RationalCone) -> Result<Comparison> {
    let ab = a.is_subset_of(b)?;
    let ba = b.is_subset_of(a)?;
    Ok(match (ab, ba) {
        (true, true) => Comparison::Equal,
        (true, false) => Comparison::ASubsetB,
        (false, true) => Comparison::BSubsetA,
        (false, false) => Comparison::Incomparable,
    })
}

pub fn interior_point(c: &RationalCone) -> Result<Vec<i64>> {
    c.interior_point()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeJson {
    pub dim: usize,
    pub ineqs: Vec<Vec<i64>>,
    pub rays: Vec<Vec<i64>>,
    pub lineality: Vec<Vec<i64>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn forms(rows: &[&[i64]]) -> Vec<LinearForm> {
        rows.iter().map(|r| LinearForm::new(r.to_vec())).collect()
    }

    #[test]
    fn single_halfspace() {
        let c = cone_from_inequalities(3, forms(&[&[1, -1, 1]])).unwrap();
        let a = c.analyze().unwrap();
        assert_eq!(a.lineality_dim, 2);
        assert_eq!(a.ray_count, 1);
        assert_eq!(a.dimension, 3);
        assert!(a.is_simplicial_mod_lineality);
        assert_eq!(c.rays().unwrap(), &[vec![1, -1, 1]]);
    }

    #[test]
    fn full_space_and_plane() {
        let r3 = RationalCone::full_space(3);
        let a = r3.analyze().unwrap();
        assert_eq!((a.dimension, a.lineality_dim, a.ray_count), (3, 3, 0));
        let plane = cone_from_inequalities(3, forms(&[&[1, 0, 0], &[-1, 0, 0]])).unwrap();
        let a = plane.analyze().unwrap();
        assert_eq!((a.dimension, a.lineality_dim, a.ray_count), (2, 2, 0));
        assert_eq!(plane.equalities().unwrap().len(), 1);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        assert!(matches!(
            cone_from_inequalities(2, forms(&[&[1, 0, 0]])),
            Err(Error::DimensionMismatch { .. })
        ));
        let a = RationalCone::full_space(2);
        let b = RationalCone::full_space(3);
        assert!(compare(&a, &b).is_err());
    }

    #[test]
    fn lusztig_a2_rays_by_hand() {
        // x2 >= x1 + x3, x >= 0
        let c = cone_from_inequalities(
            3,
            forms(&[&[-1, 1, -1], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
        )
        .unwrap();
        assert_eq!(
            c.rays().unwrap(),
            &[vec![0, 1, 0], vec![0, 1, 1], vec![1, 1, 0]]
        );
        let a = c.analyze().unwrap();
        assert!(a.is_simplicial_mod_lineality);
        assert_eq!(a.facet_count, 3);
        let dd = dual_cone(&dual_cone(&c).unwrap()).unwrap();
        assert_eq!(compare(&c, &dd).unwrap(), Comparison::Equal);
    }

    #[test]
    fn duals_of_trivial_cones() {
        let half = cone_from_inequalities(1, forms(&[&[1]])).unwrap();
        let d = dual_cone(&half).unwrap();
        assert_eq!(compare(&half, &d).unwrap(), Comparison::Equal);
        let zero = dual_cone(&RationalCone::full_space(3)).unwrap();
        let a = zero.analyze().unwrap();
        assert_eq!((a.dimension, a.ray_count, a.lineality_dim), (0, 0, 0));
        assert_eq!(zero.interior_point(), Err(Error::ZeroCone));
    }

    #[test]
    fn comparisons() {
        let quadrant = cone_from_inequalities(2, forms(&[&[1, 0], &[0, 1]])).unwrap();
        let plane = RationalCone::full_space(2);
        assert_eq!(compare(&quadrant, &plane).unwrap(), Comparison::ASubsetB);
        assert_eq!(compare(&plane, &quadrant).unwrap(), Comparison::BSubsetA);
        assert_eq!(
            compare(&quadrant, &quadrant.clone()).unwrap(),
            Comparison::Equal
        );
        let other = cone_from_inequalities(2, forms(&[&[1, 0], &[0, -1]])).unwrap();
        assert_eq!(
            compare(&quadrant, &other).unwrap(),
            Comparison::Incomparable
        );
        let w = quadrant.first_escape(&other).unwrap().unwrap();
        assert_eq!(w.generator, vec![0, 1]);
        assert!(w.value < 0);
    }

    #[test]
    fn interior_points() {
        let half = cone_from_inequalities(1, forms(&[&[1]])).unwrap();
        assert_eq!(half.interior_point().unwrap(), vec![1]);
        let lm = cone_from_inequalities(3, forms(&[&[1, -1, 1]])).unwrap();
        let p = lm.interior_point().unwrap();
        assert!(LinearForm::new(vec![1, -1, 1]).eval(&p) > 0);
    }

    #[test]
    fn json_round_trip() {
        let c = cone_from_inequalities(3, forms(&[&[-1, 1, -1], &[1, 0, 0], &[0, 0, 1]])).unwrap();
        let j = c.to_json().unwrap();
        let text = serde_json::to_string(&j).unwrap();
        let back: ConeJson = serde_json::from_str(&text).unwrap();
        let c2 = RationalCone::from_json(&back).unwrap();
        assert_eq!(compare(&c, &c2).unwrap(), Comparison::Equal);
        let g = RationalCone::from_json(&ConeJson {
            dim: 3,
            ineqs: vec![],
            rays: j.rays,
            lineality: j.lineality,
        })
        .unwrap();
        assert_eq!(compare(&c, &g).unwrap(), Comparison::Equal);
    }

    #[test]
    fn redundant_generators_are_dropped() {
        let c = RationalCone::from_generators(
            2,
            vec![vec![1, 0], vec![1, 1], vec![0, 1], vec![2, 0]],
            vec![],
        )
        .unwrap();
        assert_eq!(c.rays().unwrap(), &[vec![0, 1], vec![1, 0]]);
        assert_eq!(c.facets().unwrap().len(), 2);
    }
}
