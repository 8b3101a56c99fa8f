//! Plücker relations of the complete flag variety `Fl_n`, the weight map `φ`
//! from degree vectors, and min-plus membership / initial-form checks.
//!
//! Subsets of `[n]` are bitmasks (bit `i-1` for element `i`) and print as
//! sorted digit strings, so `{1,3}` is `"13"`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg;

pub const MIN_N: usize = 3;
pub const MAX_N: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(pub u32);

impl Subset {
    pub fn from_elements(elems: &[usize]) -> Self {
        Subset(elems.iter().fold(0, |m, &e| m | 1 << (e - 1)))
    }

    pub fn elements(self) -> Vec<usize> {
        (0..32)
            .filter(|b| self.0 >> b & 1 == 1)
            .map(|b| b + 1)
            .collect()
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        self.0 >> (e - 1) & 1 == 1
    }

    /// Ordering by size, then lexicographically on sorted elements.
    fn key(self) -> SortKey {
        (self.len(), self.elements())
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in self.elements() {
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `S = 2^[n] \ {∅, [n]}`, by size and then lexicographically.
/// Size first, then elements.
type SortKey = (usize, Vec<usize>);

pub fn proper_subsets(n: usize) -> Vec<Subset> {
    let mut all: Vec<Subset> = (1..(1u32 << n) - 1).map(Subset).collect();
    all.sort_by_key(|s| s.key());
    all
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationTerm {
    pub coeff: i64,
    pub a: Subset,
    pub b: Subset,
}

/// A quadratic relation `Σ coeff · p_A p_B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlueckerRelation {
    pub terms: Vec<RelationTerm>,
}

impl fmt::Display for PlueckerRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            let sign = if t.coeff < 0 {
                "-"
            } else if i > 0 {
                "+"
            } else {
                ""
            };
            let mag = if t.coeff.abs() == 1 {
                String::new()
            } else {
                t.coeff.abs().to_string()
            };
            write!(
                f,
                "{}{sign}{mag}p{}p{}",
                if i > 0 { " " } else { "" },
                t.a,
                t.b
            )?;
        }
        Ok(())
    }
}

fn ordered_pair(x: Subset, y: Subset) -> (Subset, Subset) {
    if x.key() <= y.key() {
        (x, y)
    } else {
        (y, x)
    }
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Subset> {
    (0..1u32 << n)
        .map(Subset)
        .filter(|s| s.len() == k)
        .collect()
}

/// One-element exchange relations between sizes `a ≤ b`, combined, normalized
/// (first term positive, content 1) and deduplicated.
pub fn pluecker_relations(n: usize) -> Result<Vec<PlueckerRelation>> {
    if !(MIN_N..=MAX_N).contains(&n) {
        return Err(Error::InvalidIndex(format!(
            "n = {n} outside {MIN_N}..={MAX_N}"
        )));
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for a in 1..n {
        for b in a..n {
            for i_set in subsets_of_size(n, a - 1) {
                for j_set in subsets_of_size(n, b + 1) {
                    let mut combined: BTreeMap<(SortKey, SortKey), (i64, Subset, Subset)> =
                        BTreeMap::new();
                    for (t, j) in j_set.elements().into_iter().enumerate() {
                        if i_set.contains(j) {
                            continue;
                        }
                        let above = i_set.elements().iter().filter(|&&i| i > j).count();
                        let sign = if (t + 1 + above) % 2 == 0 { 1 } else { -1 };
                        let (x, y) = ordered_pair(
                            Subset(i_set.0 | 1 << (j - 1)),
                            Subset(j_set.0 & !(1 << (j - 1))),
                        );
                        combined.entry((x.key(), y.key())).or_insert((0, x, y)).0 += sign;
                    }
                    let mut terms: Vec<RelationTerm> = combined
                        .into_values()
                        .filter(|(c, _, _)| *c != 0)
                        .map(|(coeff, a, b)| RelationTerm { coeff, a, b })
                        .collect();
                    if terms.is_empty() {
                        continue;
                    }
                    let g = terms.iter().fold(0i64, |g, t| num_integer::gcd(g, t.coeff));
                    let s = if terms[0].coeff < 0 { -g } else { g };
                    terms.iter_mut().for_each(|t| t.coeff /= s);
                    let key: Vec<(i64, u32, u32)> =
                        terms.iter().map(|t| (t.coeff, t.a.0, t.b.0)).collect();
                    if seen.insert(key) {
                        out.push(PlueckerRelation { terms });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// A weight per subset in `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector(pub BTreeMap<Subset, BigRational>);

impl WeightVector {
    pub fn get(&self, s: Subset) -> Result<&BigRational> {
        self.0
            .get(&s)
            .ok_or_else(|| Error::MissingCoordinate(s.to_string()))
    }

    /// Adds `c` to every coordinate with `|I| = k`.
    pub fn block_shift(&self, k: usize, c: &BigRational) -> WeightVector {
        WeightVector(
            self.0
                .iter()
                .map(|(&s, v)| (s, if s.len() == k { v + c } else { v.clone() }))
                .collect(),
        )
    }
}

impl Serialize for WeightVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut entries: Vec<(&Subset, &BigRational)> = self.0.iter().collect();
        entries.sort_by_key(|(k, _)| k.key());
        s.collect_map(
            entries
                .into_iter()
                .map(|(k, v)| (k.to_string(), v.to_string())),
        )
    }
}

/// Index of `d_{i,j}` (1 ≤ i ≤ j ≤ n-1) in the order `(1,1), (1,2), …, (n-1,n-1)`.
pub fn d_index(n: usize, i: usize, j: usize) -> usize {
    let r = n - 1;
    // Rows 1..i-1 hold r, r-1, … entries.
    (1..i).map(|row| r - row + 1).sum::<usize>() + (j - i)
}

/// The summands `(p_t, q_t - 1)` of `φ(d)_I`, empty when `I = [k]`.
pub fn phi_summands(n: usize, s: Subset) -> Vec<(usize, usize)> {
    let k = s.len();
    let p: Vec<usize> = (1..=k).filter(|&x| !s.contains(x)).collect();
    let mut q: Vec<usize> = s.elements().into_iter().filter(|&x| x > k).collect();
    q.reverse();
    debug_assert!(p.iter().zip(&q).all(|(a, b)| *a <= k && k < *b && *b <= n));
    p.into_iter().zip(q).map(|(a, b)| (a, b - 1)).collect()
}

pub fn phi(n: usize, d: &[BigRational]) -> Result<WeightVector> {
    let big_n = n * (n - 1) / 2;
    if n < 2 || d.len() != big_n {
        return Err(Error::DimensionMismatch {
            expected: big_n,
            got: d.len(),
        });
    }
    Ok(WeightVector(
        proper_subsets(n)
            .into_iter()
            .map(|s| {
                let v = phi_summands(n, s)
                    .into_iter()
                    .fold(BigRational::zero(), |acc, (i, j)| {
                        acc + &d[d_index(n, i, j)]
                    });
                (s, v)
            })
            .collect(),
    ))
}

pub fn phi_int(n: usize, d: &[i64]) -> Result<WeightVector> {
    let d: Vec<BigRational> = d
        .iter()
        .map(|&x| BigRational::from_integer(BigInt::from(x)))
        .collect();
    phi(n, &d)
}

/// Rank of `φ` as a linear map `R^{N} → R^S`.
pub fn phi_rank(n: usize) -> Result<usize> {
    if !(MIN_N..=MAX_N).contains(&n) {
        return Err(Error::InvalidIndex(format!(
            "n = {n} outside {MIN_N}..={MAX_N}"
        )));
    }
    let big_n = n * (n - 1) / 2;
    let rows: Vec<Vec<i64>> = proper_subsets(n)
        .into_iter()
        .map(|s| {
            let mut row = vec![0; big_n];
            for (i, j) in phi_summands(n, s) {
                row[d_index(n, i, j)] += 1;
            }
            row
        })
        .collect();
    Ok(linalg::rank(&rows))
}

#[derive(Debug, Clone, Serialize)]
pub struct InitialForm {
    pub terms: Vec<RelationTerm>,
    #[serde(serialize_with = "ser_rational")]
    pub min_weight: BigRational,
    pub is_binomial: bool,
    pub unit_coefficients: bool,
}

fn ser_rational<S: Serializer>(x: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn term_weight(w: &WeightVector, t: &RelationTerm) -> Result<BigRational> {
    Ok(w.get(t.a)? + w.get(t.b)?)
}

pub fn initial_form(w: &WeightVector, rel: &PlueckerRelation) -> Result<InitialForm> {
    let weights = rel
        .terms
        .iter()
        .map(|t| term_weight(w, t))
        .collect::<Result<Vec<_>>>()?;
    let min = weights
        .iter()
        .min()
        .cloned()
        .unwrap_or_else(BigRational::zero);
    let terms: Vec<RelationTerm> = rel
        .terms
        .iter()
        .zip(&weights)
        .filter(|(_, x)| **x == min)
        .map(|(t, _)| t.clone())
        .collect();
    Ok(InitialForm {
        is_binomial: terms.len() == 2,
        unit_coefficients: terms.iter().all(|t| t.coeff.abs() == 1),
        terms,
        min_weight: min,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationFailure {
    /// 0-based index into the relation list.
    pub index: usize,
    pub relation: String,
    pub weights: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MembershipReport {
    pub passed: bool,
    pub relations_checked: usize,
    pub failures: Vec<RelationFailure>,
}

/// Generator-level check: on each relation the minimum term weight is attained at least twice.
pub fn trop_membership(w: &WeightVector, rels: &[PlueckerRelation]) -> Result<MembershipReport> {
    let mut failures = Vec::new();
    for (index, rel) in rels.iter().enumerate() {
        let init = initial_form(w, rel)?;
        if init.terms.len() < 2 {
            let weights = rel
                .terms
                .iter()
                .map(|t| term_weight(w, t).map(|x| x.to_string()))
                .collect::<Result<_>>()?;
            failures.push(RelationFailure {
                index,
                relation: rel.to_string(),
                weights,
            });
        }
    }
    Ok(MembershipReport {
        passed: failures.is_empty(),
        relations_checked: rels.len(),
        failures,
    })
}

pub fn rational(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_counts() {
        let r3 = pluecker_relations(3).unwrap();
        assert_eq!(r3.len(), 1);
        assert_eq!(r3[0].to_string(), "p1p23 -p2p13 +p3p12");
        let r4 = pluecker_relations(4).unwrap();
        assert_eq!(r4.len(), 10);
        assert!(r4
            .iter()
            .all(|r| r.terms.len() >= 3 && r.terms.iter().all(|t| t.coeff.abs() == 1)));
        assert!(r4.iter().any(|r| r.to_string() == "p12p34 -p13p24 +p14p23"));
        assert!(pluecker_relations(2).is_err());
        assert!(pluecker_relations(7).is_err());
    }

    #[test]
    fn multidegree_is_uniform() {
        for n in 3..=5 {
            for r in pluecker_relations(n).unwrap() {
                let deg = (r.terms[0].a.len(), r.terms[0].b.len());
                assert!(r.terms.iter().all(|t| (t.a.len(), t.b.len()) == deg));
            }
        }
    }

    #[test]
    fn phi_examples() {
        let d: Vec<i64> = vec![10, 20, 30];
        let w = phi_int(3, &d).unwrap();
        assert_eq!(
            w.get(Subset::from_elements(&[1, 3])).unwrap(),
            &rational(30)
        );
        assert_eq!(w.get(Subset::from_elements(&[1, 2])).unwrap(), &rational(0));
        assert_eq!(
            phi_summands(5, Subset::from_elements(&[2, 4, 5])),
            vec![(1, 4), (3, 3)]
        );
        assert_eq!(d_index(5, 1, 4), 3);
        assert_eq!(d_index(5, 3, 3), 7);
        assert!(phi_int(3, &[1, 2]).is_err());
    }

    #[test]
    fn membership_examples() {
        let rels = pluecker_relations(3).unwrap();
        assert!(
            trop_membership(&phi_int(3, &[1, 1, 1]).unwrap(), &rels)
                .unwrap()
                .passed
        );
        let bad = trop_membership(&phi_int(3, &[1, 3, 1]).unwrap(), &rels).unwrap();
        assert!(!bad.passed);
        assert_eq!(bad.failures[0].weights, vec!["3", "2", "3"]);
        assert!(
            trop_membership(&phi_int(3, &[0, 0, 0]).unwrap(), &rels)
                .unwrap()
                .passed
        );
        let init = initial_form(&phi_int(3, &[2, 3, 2]).unwrap(), &rels[0]).unwrap();
        assert!(init.is_binomial);
        assert_eq!(
            init.terms
                .iter()
                .map(|t| (t.a.to_string(), t.b.to_string()))
                .collect::<Vec<_>>(),
            vec![("1".into(), "23".into()), ("3".into(), "12".into())]
        );
        let edge = initial_form(&phi_int(3, &[1, 2, 1]).unwrap(), &rels[0]).unwrap();
        assert_eq!(edge.terms.len(), 3);
        assert!(!edge.is_binomial);
    }

    #[test]
    fn missing_coordinates_are_reported() {
        let rels = pluecker_relations(3).unwrap();
        let w = WeightVector(BTreeMap::new());
        assert!(matches!(
            trop_membership(&w, &rels),
            Err(Error::MissingCoordinate(_))
        ));
    }

    #[test]
    fn phi_ranks() {
        assert_eq!(phi_rank(3).unwrap(), 3);
        assert_eq!(phi_rank(4).unwrap(), 6);
    }
}
