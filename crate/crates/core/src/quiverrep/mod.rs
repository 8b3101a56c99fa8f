//! Representations of Dynkin quivers, computed from dimension vectors alone.
//!
//! An adapted reduced word enumerates the indecomposables `U_1, …, U_N` in a
//! directed order (`Hom(U_k, U_l) = 0` for `k > l`, `Ext¹(U_k, U_l) = 0` for
//! `k ≤ l`). Together with the Euler form this determines every Hom and Ext
//! dimension, so no matrices are needed here.

mod ktheory;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{self, beta_sequence, CartanMatrix, ReducedWord, RootVector};

pub use ktheory::{default_bound, ktheory_cones, KTheoryReport};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinQuiver {
    cartan: CartanMatrix,
    /// 0-based `(tail, head)` pairs.
    arrows: Vec<(usize, usize)>,
}

impl DynkinQuiver {
    pub fn new(cartan: CartanMatrix, mut arrows: Vec<(usize, usize)>) -> Result<Self> {
        if !cartan.is_simply_laced() {
            return Err(Error::NotSimplyLaced);
        }
        let n = cartan.rank();
        arrows.sort_unstable();
        for &(i, j) in &arrows {
            if i >= n || j >= n {
                return Err(Error::InvalidQuiver(format!(
                    "vertex out of range in {}>{}",
                    i + 1,
                    j + 1
                )));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let count = arrows
                    .iter()
                    .filter(|&&(a, b)| (a, b) == (i, j) || (a, b) == (j, i))
                    .count();
                if count as i64 != -cartan.a(i, j) {
                    return Err(Error::InvalidQuiver(format!(
                        "expected {} arrow(s) between {} and {}, found {count}",
                        -cartan.a(i, j),
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        if arrows.iter().any(|&(i, j)| i == j) {
            return Err(Error::InvalidQuiver("loops are not allowed".into()));
        }
        // Dynkin diagrams are trees, so one arrow per edge is automatically acyclic.
        Ok(DynkinQuiver { cartan, arrows })
    }

    /// Parses the arrow list grammar `"1>2,2>3"`.
    pub fn parse(cartan: CartanMatrix, s: &str) -> Result<Self> {
        let mut arrows = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (a, b) = part
                .split_once('>')
                .ok_or_else(|| Error::Parse(format!("bad arrow {part:?}, expected i>j")))?;
            let parse = |t: &str| {
                t.trim()
                    .parse::<usize>()
                    .ok()
                    .and_then(|v| v.checked_sub(1))
                    .ok_or_else(|| Error::Parse(format!("bad vertex {t:?}")))
            };
            arrows.push((parse(a)?, parse(b)?));
        }
        DynkinQuiver::new(cartan, arrows)
    }

    /// `1 → 2 → ⋯ → n` in type A_n.
    pub fn equioriented_a(n: usize) -> Self {
        let cartan = CartanMatrix::of_type(rootsys::CartanType::new('A', n).expect("n >= 1"));
        DynkinQuiver::new(
            cartan,
            (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect(),
        )
        .expect("valid")
    }

    /// Every orientation of the Dynkin diagram, in a fixed order.
    pub fn all_orientations(cartan: &CartanMatrix) -> Result<Vec<Self>> {
        let n = cartan.rank();
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| cartan.a(i, j) != 0)
            .collect();
        (0..1usize << edges.len())
            .map(|mask| {
                let arrows = edges
                    .iter()
                    .enumerate()
                    .map(|(b, &(i, j))| if mask >> b & 1 == 0 { (i, j) } else { (j, i) })
                    .collect();
                DynkinQuiver::new(cartan.clone(), arrows)
            })
            .collect()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn is_sink(&self, i: usize) -> bool {
        !self.arrows.iter().any(|&(a, _)| a == i)
    }

    /// Reverses every arrow at `i`.
    pub fn reflect(&self, i: usize) -> Self {
        let mut arrows: Vec<(usize, usize)> = self
            .arrows
            .iter()
            .map(|&(a, b)| if a == i || b == i { (b, a) } else { (a, b) })
            .collect();
        arrows.sort_unstable();
        DynkinQuiver {
            cartan: self.cartan.clone(),
            arrows,
        }
    }

    /// `<d, e> = Σ d_i e_i - Σ_{i→j} d_i e_j`.
    pub fn euler_form(&self, d: &[i64], e: &[i64]) -> i64 {
        let diag: i64 = d.iter().zip(e).map(|(a, b)| a * b).sum();
        diag - self.arrows.iter().map(|&(i, j)| d[i] * e[j]).sum::<i64>()
    }
}

impl fmt::Display for DynkinQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .arrows
            .iter()
            .map(|(a, b)| format!("{}>{}", a + 1, b + 1))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

pub fn euler_form(q: &DynkinQuiver, d: &[i64], e: &[i64]) -> i64 {
    q.euler_form(d, e)
}

/// Sink-sequence test: `i_1` is a sink of `q`, `i_2` a sink of `σ_{i_1} q`, …,
/// and the word is a reduced word of `w0`.
pub fn is_adapted(q: &DynkinQuiver, w: &ReducedWord) -> bool {
    let Ok(betas) = beta_sequence(q.cartan(), w) else {
        return false;
    };
    if betas.len() != rootsys::num_positive_roots(q.cartan()) {
        return false;
    }
    let mut cur = q.clone();
    for &i in w.letters() {
        if !cur.is_sink(i) {
            return false;
        }
        cur = cur.reflect(i);
    }
    true
}

/// All adapted reduced words of `w0`, lexicographically.
pub fn enumerate_adapted_words(q: &DynkinQuiver) -> Vec<ReducedWord> {
    let c = q.cartan();
    let n = c.rank();
    let target = rootsys::num_positive_roots(c);
    let identity: Vec<Vec<i64>> = (0..n).map(|j| c.simple_root(j).0).collect();
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    adapted_dfs(q, &identity, target, &mut prefix, &mut out);
    out
}

fn adapted_dfs(
    q: &DynkinQuiver,
    columns: &[Vec<i64>],
    target: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<ReducedWord>,
) {
    if prefix.len() == target {
        out.push(ReducedWord::new(prefix.clone()));
        return;
    }
    let c = q.cartan();
    let n = c.rank();
    for i in 0..n {
        if !q.is_sink(i) || columns[i].iter().any(|&x| x < 0) {
            continue;
        }
        let next: Vec<Vec<i64>> = (0..n)
            .map(|j| {
                let a = c.a(i, j);
                columns[j]
                    .iter()
                    .zip(&columns[i])
                    .map(|(x, y)| x - a * y)
                    .collect()
            })
            .collect();
        prefix.push(i);
        adapted_dfs(&q.reflect(i), &next, target, prefix, out);
        prefix.pop();
    }
}

/// A module up to isomorphism: multiplicities over `U_1, …, U_N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ModuleClass(pub Vec<u32>);

impl ModuleClass {
    pub fn zero(n: usize) -> Self {
        ModuleClass(vec![0; n])
    }

    pub fn indecomposable(n: usize, k: usize) -> Self {
        let mut m = ModuleClass::zero(n);
        m.0[k] = 1;
        m
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn plus(&self, other: &ModuleClass) -> ModuleClass {
        ModuleClass(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Positions with nonzero multiplicity.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(t, _)| t)
    }

    pub fn as_i64(&self) -> Vec<i64> {
        self.0.iter().map(|&x| x as i64).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MiddleTermMode {
    /// Hom-order test against every indecomposable.
    Oracle,
    /// Combinatorial criterion: dimension, betweenness and the Hom-range inequality.
    Prop43,
    /// Dimension and betweenness only, without the Hom-range inequality.
    Relaxed,
}

/// The AR quiver of `mod KQ` read off an adapted word, plus the Hom/Ext table.
#[derive(Debug, Clone)]
pub struct ArQuiver {
    quiver: DynkinQuiver,
    word: ReducedWord,
    betas: Vec<RootVector>,
    arrows: Vec<(usize, usize)>,
    /// `(k, l)` with `l = k[1]`, i.e. `τ U_l = U_k`.
    translation: Vec<(usize, usize)>,
    reach: Vec<Vec<bool>>,
    euler: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ArQuiverJson {
    pub quiver: String,
    pub word: ReducedWord,
    pub vertices: Vec<usize>,
    pub roots: Vec<RootVector>,
    pub arrows: Vec<(usize, usize)>,
    pub translation: Vec<(usize, usize)>,
    pub projectives: Vec<usize>,
}

pub fn ar_quiver(q: &DynkinQuiver, w: &ReducedWord) -> Result<ArQuiver> {
    if !is_adapted(q, w) {
        return Err(Error::NotAdapted);
    }
    let betas = beta_sequence(q.cartan(), w)?;
    let big_n = betas.len();
    let letters = w.letters();
    let mut arrows = BTreeSet::new();
    for k in 0..big_n {
        // One arrow k → l per arrow j → i_k of Q, with l minimal such that i_l = j.
        for &(j, _) in q.arrows().iter().filter(|&&(_, h)| h == letters[k]) {
            if let Some(l) = (k + 1..big_n).find(|&l| letters[l] == j) {
                arrows.insert((k, l));
                if let Some(next) = w.k_shift(k, 1) {
                    arrows.insert((l, next));
                }
            }
        }
    }
    let arrows: Vec<(usize, usize)> = arrows.into_iter().collect();
    let translation = w.successor_pairs();
    let euler: Vec<Vec<i64>> = (0..big_n)
        .map(|k| {
            (0..big_n)
                .map(|l| q.euler_form(&betas[k].0, &betas[l].0))
                .collect()
        })
        .collect();
    let mut reach = vec![vec![false; big_n]; big_n];
    for k in (0..big_n).rev() {
        reach[k][k] = true;
        for &(_, l) in arrows.iter().filter(|&&(a, _)| a == k) {
            for m in 0..big_n {
                if reach[l][m] {
                    reach[k][m] = true;
                }
            }
        }
    }
    let ar = ArQuiver {
        quiver: q.clone(),
        word: w.clone(),
        betas,
        arrows,
        translation,
        reach,
        euler,
    };
    ar.check_consistency()?;
    Ok(ar)
}

impl ArQuiver {
    fn check_consistency(&self) -> Result<()> {
        let big_n = self.len();
        for k in 0..big_n {
            for l in k..big_n {
                if self.euler[k][l] < 0 {
                    return Err(Error::ConsistencyFailure(format!(
                        "<β{},β{}> < 0",
                        k + 1,
                        l + 1
                    )));
                }
                if l > k && self.euler[l][k] > 0 {
                    return Err(Error::ConsistencyFailure(format!(
                        "<β{},β{}> > 0",
                        l + 1,
                        k + 1
                    )));
                }
            }
        }
        for &(k, l) in &self.arrows {
            if k >= l || self.euler[k][l] <= 0 {
                return Err(Error::ConsistencyFailure(format!(
                    "arrow {}→{} carries no map",
                    k + 1,
                    l + 1
                )));
            }
        }
        // Mesh relations: β_k + β_l is the sum over the middle of the mesh.
        for &(k, l) in &self.translation {
            let mut sum: Vec<i64> = self.betas[k]
                .0
                .iter()
                .zip(&self.betas[l].0)
                .map(|(a, b)| a + b)
                .collect();
            for m in 0..big_n {
                if self.arrows.contains(&(k, m)) && self.arrows.contains(&(m, l)) {
                    sum.iter_mut()
                        .zip(&self.betas[m].0)
                        .for_each(|(x, b)| *x -= b);
                }
            }
            if !rootsys::is_zero_vec(&sum) {
                return Err(Error::ConsistencyFailure(format!(
                    "mesh at {}⇢{} does not balance",
                    l + 1,
                    k + 1
                )));
            }
        }
        let projectives = (0..big_n).filter(|&k| self.is_projective(k)).count();
        if projectives != self.quiver.rank() {
            return Err(Error::ConsistencyFailure(format!(
                "{projectives} projectives"
            )));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.betas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.betas.is_empty()
    }

    pub fn quiver(&self) -> &DynkinQuiver {
        &self.quiver
    }

    pub fn word(&self) -> &ReducedWord {
        &self.word
    }

    pub fn betas(&self) -> &[RootVector] {
        &self.betas
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn translation(&self) -> &[(usize, usize)] {
        &self.translation
    }

    /// `U_k` is projective iff `k` is the first occurrence of its letter.
    pub fn is_projective(&self, k: usize) -> bool {
        let letter = self.word.letters()[k];
        !self.word.letters()[..k].contains(&letter)
    }

    /// `τ⁻¹ U_k`, when `U_k` is not injective.
    pub fn inverse_translate(&self, k: usize) -> Option<usize> {
        self.word.k_shift(k, 1)
    }

    /// `U_k ⪯ U_l`: a path from `k` to `l`.
    pub fn precedes(&self, k: usize, l: usize) -> bool {
        self.reach[k][l]
    }

    pub fn euler(&self, k: usize, l: usize) -> i64 {
        self.euler[k][l]
    }

    pub fn hom_indec(&self, k: usize, l: usize) -> i64 {
        if k <= l {
            self.euler[k][l]
        } else {
            0
        }
    }

    pub fn ext_indec(&self, k: usize, l: usize) -> i64 {
        if k <= l {
            0
        } else {
            -self.euler[k][l]
        }
    }

    pub fn dim_vector(&self, m: &ModuleClass) -> Vec<i64> {
        let mut d = vec![0; self.quiver.rank()];
        for t in m.support() {
            for (x, b) in d.iter_mut().zip(&self.betas[t].0) {
                *x += m.0[t] as i64 * b;
            }
        }
        d
    }

    /// Total dimension `Σ_i dim M_i`.
    pub fn total_dim(&self, m: &ModuleClass) -> i64 {
        self.dim_vector(m).iter().sum()
    }

    pub fn hom_dim(&self, m: &ModuleClass, n: &ModuleClass) -> i64 {
        m.support()
            .flat_map(|k| n.support().map(move |l| (k, l)))
            .map(|(k, l)| m.0[k] as i64 * n.0[l] as i64 * self.hom_indec(k, l))
            .sum()
    }

    pub fn ext_dim(&self, m: &ModuleClass, n: &ModuleClass) -> i64 {
        m.support()
            .flat_map(|k| n.support().map(move |l| (k, l)))
            .map(|(k, l)| m.0[k] as i64 * n.0[l] as i64 * self.ext_indec(k, l))
            .sum()
    }

    /// `[U_z, M]` for every indecomposable `U_z`.
    pub fn hom_profile(&self, m: &ModuleClass) -> Vec<i64> {
        (0..self.len())
            .map(|z| {
                m.support()
                    .map(|t| m.0[t] as i64 * self.hom_indec(z, t))
                    .sum()
            })
            .collect()
    }

    /// `X ≤_deg M`: `[Z, X] ≤ [Z, M]` for all indecomposable `Z`.
    pub fn degenerates(&self, x: &ModuleClass, m: &ModuleClass) -> Result<bool> {
        self.check_same_dim(x, m)?;
        let hx = self.hom_profile(x);
        let hm = self.hom_profile(m);
        Ok(hx.iter().zip(&hm).all(|(a, b)| a <= b))
    }

    /// `X` properly degenerates to `U ⊕ V`.
    pub fn degenerates_properly(
        &self,
        x: &ModuleClass,
        u: &ModuleClass,
        v: &ModuleClass,
    ) -> Result<bool> {
        let uv = u.plus(v);
        self.check_same_dim(x, &uv)?;
        let hx = self.hom_profile(x);
        let huv = self.hom_profile(&uv);
        Ok(hx.iter().zip(&huv).all(|(a, b)| a <= b) && hx.iter().zip(&huv).any(|(a, b)| a < b))
    }

    fn check_same_dim(&self, x: &ModuleClass, m: &ModuleClass) -> Result<()> {
        for c in [x, m] {
            if c.len() != self.len() {
                return Err(Error::DimensionMismatch {
                    expected: self.len(),
                    got: c.len(),
                });
            }
        }
        let (dx, dm) = (self.dim_vector(x), self.dim_vector(m));
        if dx != dm {
            let (tx, tm) = (dx.iter().sum::<i64>(), dm.iter().sum::<i64>());
            return Err(Error::DimensionMismatch {
                expected: tm as usize,
                got: tx as usize,
            });
        }
        Ok(())
    }

    /// Every module with dimension vector `d` supported on `positions`.
    pub fn modules_with_dim(&self, d: &[i64], positions: &[usize]) -> Vec<ModuleClass> {
        let mut out = Vec::new();
        let mut cur = ModuleClass::zero(self.len());
        let mut rest = d.to_vec();
        self.fill(positions, 0, &mut rest, &mut cur, &mut out);
        out.sort();
        out
    }

    fn fill(
        &self,
        positions: &[usize],
        idx: usize,
        rest: &mut Vec<i64>,
        cur: &mut ModuleClass,
        out: &mut Vec<ModuleClass>,
    ) {
        if rest.iter().all(|&x| x == 0) {
            out.push(cur.clone());
            return;
        }
        if idx == positions.len() {
            return;
        }
        let t = positions[idx];
        let beta = &self.betas[t].0;
        // Largest multiplicity that fits componentwise.
        let cap = beta
            .iter()
            .zip(rest.iter())
            .filter(|(b, _)| **b > 0)
            .map(|(b, r)| r / b)
            .min()
            .unwrap_or(0)
            .max(0);
        for m in (0..=cap).rev() {
            for (x, b) in rest.iter_mut().zip(beta) {
                *x -= m * b;
            }
            cur.0[t] = m as u32;
            self.fill(positions, idx + 1, rest, cur, out);
            cur.0[t] = 0;
            for (x, b) in rest.iter_mut().zip(beta) {
                *x += m * b;
            }
        }
    }

    /// Candidate middle terms of extensions `0 → U_k → X → U_l → 0`.
    pub fn middle_terms(
        &self,
        k: usize,
        l: usize,
        mode: MiddleTermMode,
    ) -> Result<Vec<ModuleClass>> {
        if k >= l || l >= self.len() {
            return Err(Error::InvalidIndex(format!(
                "need k < l <= N, got ({}, {})",
                k + 1,
                l + 1
            )));
        }
        let target: Vec<i64> = self.betas[k]
            .0
            .iter()
            .zip(&self.betas[l].0)
            .map(|(a, b)| a + b)
            .collect();
        let positions: Vec<usize> = (k + 1..l).collect();
        let candidates = self.modules_with_dim(&target, &positions);
        let u = ModuleClass::indecomposable(self.len(), k);
        let v = ModuleClass::indecomposable(self.len(), l);
        let mut out = Vec::new();
        for x in candidates {
            let keep = match mode {
                MiddleTermMode::Oracle => self.degenerates_properly(&x, &u, &v)?,
                MiddleTermMode::Relaxed => self.between(&x, k, l),
                MiddleTermMode::Prop43 => {
                    self.between(&x, k, l) && self.hom_range_condition(&x, k, l)
                }
            };
            if keep {
                out.push(x);
            }
        }
        Ok(out)
    }

    /// `U_k ≺ Y ≺ U_l` for every summand `Y` of `x`.
    fn between(&self, x: &ModuleClass, k: usize, l: usize) -> bool {
        x.support()
            .all(|t| t != k && t != l && self.precedes(k, t) && self.precedes(t, l))
    }

    /// `[Z, X] ≤ [Z, V]` for `τ⁻¹U ⪯ Z ⪯ V`, strict at least once.
    ///
    /// `V` itself is included: for a non-split sequence the strict inequality
    /// always occurs at `Z = V`, and the mesh case `V = τ⁻¹U` would otherwise
    /// have an empty range.
    fn hom_range_condition(&self, x: &ModuleClass, k: usize, l: usize) -> bool {
        let Some(start) = self.inverse_translate(k) else {
            return false;
        };
        let v = ModuleClass::indecomposable(self.len(), l);
        let zs: Vec<usize> = (0..self.len())
            .filter(|&z| self.precedes(start, z) && self.precedes(z, l))
            .collect();
        if zs.is_empty() {
            return false;
        }
        let zx = |z: usize| {
            x.support()
                .map(|t| x.0[t] as i64 * self.hom_indec(z, t))
                .sum::<i64>()
        };
        let zv = |z: usize| {
            v.support()
                .map(|t| v.0[t] as i64 * self.hom_indec(z, t))
                .sum::<i64>()
        };
        zs.iter().all(|&z| zx(z) <= zv(z)) && zs.iter().any(|&z| zx(z) < zv(z))
    }

    pub fn to_json(&self) -> ArQuiverJson {
        let one = |(a, b): &(usize, usize)| (a + 1, b + 1);
        ArQuiverJson {
            quiver: self.quiver.to_string(),
            word: self.word.clone(),
            vertices: (1..=self.len()).collect(),
            roots: self.betas.clone(),
            arrows: self.arrows.iter().map(one).collect(),
            translation: self.translation.iter().map(one).collect(),
            projectives: (0..self.len())
                .filter(|&k| self.is_projective(k))
                .map(|k| k + 1)
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PairComparison {
    /// 1-based positions.
    pub k: usize,
    pub l: usize,
    pub ext_dim: i64,
    pub oracle: Vec<ModuleClass>,
    pub relaxed: Vec<ModuleClass>,
    pub full_criterion: Vec<ModuleClass>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuperfluousReport {
    pub quiver: String,
    pub word: ReducedWord,
    pub pairs_checked: usize,
    /// Accepted by the relaxed criterion but rejected by the Hom-order oracle.
    pub counterexamples: Vec<(usize, usize, ModuleClass)>,
    /// Oracle terms the relaxed criterion rejects; these would contradict necessity.
    pub necessity_violations: Vec<(usize, usize, ModuleClass)>,
    /// Pairs where the full combinatorial criterion and the oracle disagree.
    pub full_criterion_mismatches: Vec<(usize, usize)>,
    pub agreement: bool,
    pub pairs: Vec<PairComparison>,
}

/// Compares the relaxed criterion with the oracle on every pair.
pub fn check_superfluous_conjecture(ar: &ArQuiver) -> Result<SuperfluousReport> {
    let big_n = ar.len();
    let mut pairs = Vec::new();
    let mut counterexamples = Vec::new();
    let mut necessity_violations = Vec::new();
    let mut full_criterion_mismatches = Vec::new();
    for k in 0..big_n {
        for l in k + 1..big_n {
            let oracle = ar.middle_terms(k, l, MiddleTermMode::Oracle)?;
            let relaxed = ar.middle_terms(k, l, MiddleTermMode::Relaxed)?;
            let full_criterion = ar.middle_terms(k, l, MiddleTermMode::Prop43)?;
            for x in relaxed.iter().filter(|x| !oracle.contains(x)) {
                counterexamples.push((k + 1, l + 1, x.clone()));
            }
            for x in oracle.iter().filter(|x| !relaxed.contains(x)) {
                necessity_violations.push((k + 1, l + 1, x.clone()));
            }
            if full_criterion != oracle {
                full_criterion_mismatches.push((k + 1, l + 1));
            }
            if !oracle.is_empty() || !relaxed.is_empty() {
                pairs.push(PairComparison {
                    k: k + 1,
                    l: l + 1,
                    ext_dim: ar.ext_indec(l, k),
                    oracle,
                    relaxed,
                    full_criterion,
                });
            }
        }
    }
    let agreement = counterexamples.is_empty() && necessity_violations.is_empty();
    Ok(SuperfluousReport {
        quiver: ar.quiver.to_string(),
        word: ar.word.clone(),
        pairs_checked: big_n * (big_n - 1) / 2,
        counterexamples,
        necessity_violations,
        full_criterion_mismatches,
        agreement,
        pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanType;

    fn word(s: &str) -> ReducedWord {
        s.parse().unwrap()
    }

    fn a3() -> ArQuiver {
        ar_quiver(&DynkinQuiver::equioriented_a(3), &word("3,2,3,1,2,3")).unwrap()
    }

    fn m(v: &[u32]) -> ModuleClass {
        ModuleClass(v.to_vec())
    }

    #[test]
    fn euler_form_examples() {
        let q2 = DynkinQuiver::equioriented_a(2);
        assert_eq!(q2.euler_form(&[1, 0], &[0, 1]), -1);
        let q3 = DynkinQuiver::equioriented_a(3);
        assert_eq!(q3.euler_form(&[0, 1, 1], &[1, 1, 1]), 1);
        let d4 = DynkinQuiver::parse(
            CartanMatrix::of_type(CartanType::new('D', 4).unwrap()),
            "1>2,3>2,4>2",
        )
        .unwrap();
        for q in [&q3, &d4] {
            for r in rootsys::positive_roots(q.cartan()) {
                assert_eq!(q.euler_form(&r.0, &r.0), 1);
            }
        }
    }

    #[test]
    fn quiver_validation() {
        let a3 = CartanMatrix::of_type(CartanType::new('A', 3).unwrap());
        assert!(DynkinQuiver::parse(a3.clone(), "1>2").is_err());
        assert!(DynkinQuiver::parse(a3.clone(), "1>3,2>3").is_err());
        assert!(DynkinQuiver::parse(a3.clone(), "1>2,2>3,3>2").is_err());
        assert!(DynkinQuiver::parse(a3.clone(), "1-2").is_err());
        let b2 = CartanMatrix::of_type(CartanType::new('B', 2).unwrap());
        assert_eq!(DynkinQuiver::parse(b2, "1>2"), Err(Error::NotSimplyLaced));
        assert_eq!(DynkinQuiver::all_orientations(&a3).unwrap().len(), 4);
    }

    #[test]
    fn adaptedness() {
        let q2 = DynkinQuiver::equioriented_a(2);
        assert!(is_adapted(&q2, &word("2,1,2")));
        assert!(!is_adapted(&q2, &word("1,2,1")));
        assert!(!is_adapted(&q2, &word("2,1")));
        let q3 = DynkinQuiver::equioriented_a(3);
        assert!(is_adapted(&q3, &word("3,2,3,1,2,3")));
        let words = enumerate_adapted_words(&q3);
        assert!(words.contains(&word("3,2,3,1,2,3")));
        assert!(words.iter().all(|w| is_adapted(&q3, w)));
    }

    #[test]
    fn ar_quiver_a2_and_a3() {
        let ar = ar_quiver(&DynkinQuiver::equioriented_a(2), &word("2,1,2")).unwrap();
        assert_eq!(ar.arrows(), &[(0, 1), (1, 2)]);
        assert_eq!(ar.translation(), &[(0, 2)]);
        let ar = a3();
        assert_eq!(ar.len(), 6);
        let proj: Vec<usize> = (0..6).filter(|&k| ar.is_projective(k)).collect();
        assert_eq!(proj, vec![0, 1, 3]);
        assert_eq!(
            ar.arrows(),
            &[(0, 1), (1, 2), (1, 3), (2, 4), (3, 4), (4, 5)]
        );
        assert!(!ar.precedes(5, 0));
        assert!(ar.precedes(0, 5));
        assert_eq!(ar.hom_indec(5, 0), 0);
        assert!(matches!(
            ar_quiver(&DynkinQuiver::equioriented_a(2), &word("1,2,1")),
            Err(Error::NotAdapted)
        ));
    }

    #[test]
    fn hom_and_ext_examples() {
        let ar = a3();
        let n = 6;
        assert_eq!(
            ar.hom_dim(
                &ModuleClass::indecomposable(n, 1),
                &ModuleClass::indecomposable(n, 3)
            ),
            1
        );
        assert_eq!(
            ar.ext_dim(
                &ModuleClass::indecomposable(n, 4),
                &ModuleClass::indecomposable(n, 1)
            ),
            1
        );
    }

    #[test]
    fn degeneration_examples() {
        let ar = ar_quiver(&DynkinQuiver::equioriented_a(2), &word("2,1,2")).unwrap();
        // U_1 = S2, U_2 = P1, U_3 = S1
        assert!(ar
            .degenerates_properly(&m(&[0, 1, 0]), &m(&[1, 0, 0]), &m(&[0, 0, 1]))
            .unwrap());
        assert!(!ar
            .degenerates_properly(&m(&[1, 0, 1]), &m(&[1, 0, 0]), &m(&[0, 0, 1]))
            .unwrap());
        assert!(matches!(
            ar.degenerates_properly(&m(&[0, 1, 0]), &m(&[1, 0, 0]), &m(&[1, 0, 0])),
            Err(Error::DimensionMismatch { .. })
        ));
        // A3: [2,2]⊕[1,3] properly degenerates to [2,3]⊕[1,2].
        let ar = a3();
        assert!(ar
            .degenerates_properly(
                &m(&[0, 0, 1, 1, 0, 0]),
                &m(&[0, 1, 0, 0, 0, 0]),
                &m(&[0, 0, 0, 0, 1, 0])
            )
            .unwrap());
    }

    #[test]
    fn middle_term_examples() {
        let ar = ar_quiver(&DynkinQuiver::equioriented_a(2), &word("2,1,2")).unwrap();
        assert_eq!(
            ar.middle_terms(0, 2, MiddleTermMode::Oracle).unwrap(),
            vec![m(&[0, 1, 0])]
        );
        let ar = a3();
        assert_eq!(
            ar.middle_terms(1, 4, MiddleTermMode::Oracle).unwrap(),
            vec![m(&[0, 0, 1, 1, 0, 0])]
        );
        assert!(ar
            .middle_terms(2, 4, MiddleTermMode::Oracle)
            .unwrap()
            .is_empty());
        assert_eq!(ar.ext_indec(4, 2), 0);
        assert!(ar.middle_terms(3, 3, MiddleTermMode::Oracle).is_err());
        assert!(ar.middle_terms(1, 9, MiddleTermMode::Oracle).is_err());
        for mode in [MiddleTermMode::Prop43, MiddleTermMode::Relaxed] {
            assert_eq!(
                ar.middle_terms(1, 4, mode).unwrap(),
                vec![m(&[0, 0, 1, 1, 0, 0])]
            );
        }
    }

    #[test]
    fn superfluous_on_a2() {
        let ar = ar_quiver(&DynkinQuiver::equioriented_a(2), &word("2,1,2")).unwrap();
        let r = check_superfluous_conjecture(&ar).unwrap();
        assert!(r.agreement);
        assert_eq!(r.pairs_checked, 3);
        assert_eq!(r.pairs.len(), 1);
    }
}
