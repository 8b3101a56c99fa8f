//! Cartan data, root arithmetic and reduced words of the longest element.
//!
//! Conventions: `a[i][j] = <α_j, α_i^∨>`, so `s_i(α_j) = α_j - a[i][j] α_i`.
//! Roots are integer vectors in the simple-root basis. Letters and word
//! positions are 0-based in the API and 1-based in the text grammar.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_WORD_CAP: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanType {
    pub family: char,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: char, rank: usize) -> Result<Self> {
        let family = family.to_ascii_uppercase();
        let ok = match family {
            'A' => rank >= 1,
            'B' | 'C' => rank >= 2,
            'D' => rank >= 4,
            'E' => (6..=8).contains(&rank),
            'F' => rank == 4,
            'G' => rank == 2,
            _ => false,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InvalidType { family, rank })
        }
    }

    pub fn dual(self) -> Self {
        let family = match self.family {
            'B' => 'C',
            'C' => 'B',
            f => f,
        };
        CartanType { family, ..self }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .ok_or_else(|| Error::Parse("empty type".into()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad type {s:?}, expected e.g. A3")))?;
        CartanType::new(family, rank)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CartanMatrix {
    pub label: Option<CartanType>,
    entries: Vec<Vec<i64>>,
    symmetrizers: Vec<i64>,
}

impl CartanMatrix {
    /// The Cartan matrix of a finite type. B_n and C_n put the odd root at
    /// vertex 1 (short for B, long for C), so that B2 = [[2,-2],[-1,2]].
    /// G2 has α1 long: [[2,-1],[-3,2]]. D and E follow Bourbaki labelling.
    pub fn of_type(t: CartanType) -> Self {
        let n = t.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match t.family {
            'A' | 'B' | 'C' => (0..n - 1).for_each(|i| link(i, i + 1)),
            'D' => {
                (0..n - 2).for_each(|i| link(i, i + 1));
                link(n - 3, n - 1);
            }
            'E' => {
                link(0, 2);
                link(1, 3);
                (2..n - 1).for_each(|i| link(i, i + 1));
            }
            'F' => (0..3).for_each(|i| link(i, i + 1)),
            'G' => link(0, 1),
            _ => unreachable!("validated by CartanType::new"),
        }
        match t.family {
            'B' => a[0][1] = -2,
            'C' => a[1][0] = -2,
            'F' => a[2][1] = -2,
            'G' => a[1][0] = -3,
            _ => {}
        }
        let symmetrizers = compute_symmetrizers(&a).expect("finite types are symmetrizable");
        CartanMatrix {
            label: Some(t),
            entries: a,
            symmetrizers,
        }
    }

    /// Validates an arbitrary matrix: diagonal 2, nonpositive off-diagonal with
    /// matching zero pattern, symmetrizable and of finite type.
    pub fn from_entries(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        let bad = |msg: &str| Error::Parse(format!("invalid Cartan matrix: {msg}"));
        if n == 0 || entries.iter().any(|r| r.len() != n) {
            return Err(bad("not square"));
        }
        for i in 0..n {
            if entries[i][i] != 2 {
                return Err(bad("diagonal entry is not 2"));
            }
            for j in 0..n {
                if i != j && (entries[i][j] > 0 || (entries[i][j] == 0) != (entries[j][i] == 0)) {
                    return Err(bad("off-diagonal sign pattern"));
                }
            }
        }
        let symmetrizers =
            compute_symmetrizers(&entries).ok_or_else(|| bad("not symmetrizable"))?;
        let c = CartanMatrix {
            label: None,
            entries,
            symmetrizers,
        };
        if !c.is_finite_type() {
            return Err(bad("not of finite type"));
        }
        Ok(c)
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// `a_{ij}` with 0-based indices.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.symmetrizers
    }

    pub fn is_simply_laced(&self) -> bool {
        let n = self.rank();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    fn is_finite_type(&self) -> bool {
        // Positive definiteness of d_i a_ij by Gaussian elimination without pivoting.
        let n = self.rank();
        let mut m: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        BigRational::from_integer(BigInt::from(
                            self.symmetrizers[i] * self.entries[i][j],
                        ))
                    })
                    .collect()
            })
            .collect();
        for k in 0..n {
            if !m[k][k].is_positive() {
                return false;
            }
            for i in k + 1..n {
                let f = &m[i][k] / &m[k][k];
                for j in k..n {
                    let d = &f * &m[k][j];
                    m[i][j] -= d;
                }
            }
        }
        true
    }

    /// `<v, α_i^∨>`.
    pub fn coroot_pairing(&self, v: &[i64], i: usize) -> i64 {
        self.entries[i].iter().zip(v).map(|(a, x)| a * x).sum()
    }

    /// The simple reflection `s_i` applied to `v`.
    pub fn reflect(&self, i: usize, v: &[i64]) -> Vec<i64> {
        let c = self.coroot_pairing(v, i);
        let mut out = v.to_vec();
        out[i] -= c;
        out
    }

    pub fn simple_root(&self, i: usize) -> RootVector {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        RootVector(v)
    }
}

fn compute_symmetrizers(a: &[Vec<i64>]) -> Option<Vec<i64>> {
    let n = a.len();
    // d as rationals num/den, propagated along the Dynkin graph.
    let mut d: Vec<Option<(i64, i64)>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some((1, 1));
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let (p, q) = d[i].unwrap();
            for j in 0..n {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                // d_j = d_i a_ij / a_ji
                let (np, nq) = reduce(p * a[i][j], q * a[j][i]);
                match d[j] {
                    None => {
                        d[j] = Some((np, nq));
                        queue.push_back(j);
                    }
                    Some(existing) if existing != (np, nq) => return None,
                    _ => {}
                }
            }
        }
    }
    let d: Vec<(i64, i64)> = d.into_iter().map(Option::unwrap).collect();
    let lcm = d.iter().fold(1i64, |l, &(_, q)| num_integer::lcm(l, q));
    let ints: Vec<i64> = d.iter().map(|&(p, q)| p * (lcm / q)).collect();
    let g = ints.iter().fold(0i64, |g, &x| num_integer::gcd(g, x));
    Some(ints.into_iter().map(|x| x / g).collect())
}

fn reduce(p: i64, q: i64) -> (i64, i64) {
    let g = num_integer::gcd(p, q);
    let (p, q) = (p / g, q / g);
    if q < 0 {
        (-p, -q)
    } else {
        (p, q)
    }
}

/// Transposed Cartan matrix with recomputed symmetrizers.
pub fn langlands_dual(c: &CartanMatrix) -> CartanMatrix {
    let n = c.rank();
    let entries: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| c.entries[j][i]).collect())
        .collect();
    let symmetrizers = compute_symmetrizers(&entries).expect("transpose of a symmetrizable matrix");
    CartanMatrix {
        label: c.label.map(CartanType::dual),
        entries,
        symmetrizers,
    }
}

/// `(x, y) = Σ d_i x_i a_ij y_j`. With short roots of length 2.
pub fn sym_pairing(c: &CartanMatrix, x: &[i64], y: &[i64]) -> i64 {
    let n = c.rank();
    let mut s = 0;
    for i in 0..n {
        if x[i] == 0 {
            continue;
        }
        for j in 0..n {
            s += c.symmetrizers[i] * x[i] * c.entries[i][j] * y[j];
        }
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&x| x >= 0) && self.0.iter().any(|&x| x > 0)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A word in the simple reflections, letters 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedWord(Vec<usize>);

impl ReducedWord {
    pub fn new(letters: Vec<usize>) -> Self {
        ReducedWord(letters)
    }

    /// Builds a word from the 1-based letters used in text.
    pub fn from_one_based(letters: &[usize]) -> Result<Self> {
        letters
            .iter()
            .map(|&l| {
                l.checked_sub(1)
                    .ok_or_else(|| Error::Parse("letters are 1-based".into()))
            })
            .collect::<Result<Vec<_>>>()
            .map(ReducedWord)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|l| l + 1).collect()
    }

    /// Position of the `s`-th later occurrence of the letter at position `k`.
    pub fn k_shift(&self, k: usize, s: usize) -> Option<usize> {
        let letter = *self.0.get(k)?;
        if s == 0 {
            return None;
        }
        self.0
            .iter()
            .enumerate()
            .skip(k + 1)
            .filter(|(_, &l)| l == letter)
            .nth(s - 1)
            .map(|(t, _)| t)
    }

    /// Pairs `(k, k[1])` in increasing order of `k`.
    pub fn successor_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .filter_map(|k| self.k_shift(k, 1).map(|l| (k, l)))
            .collect()
    }

    fn check_letters(&self, rank: usize) -> Result<()> {
        match self.0.iter().find(|&&l| l >= rank) {
            Some(&l) => Err(Error::LetterOutOfRange {
                letter: l + 1,
                rank,
            }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for ReducedWord {
    type Err = Error;

    /// Comma-separated 1-based letters, e.g. `"3,2,3,1,2,3"`.
    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad letter {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        ReducedWord::from_one_based(&letters)
    }
}

impl Serialize for ReducedWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}

pub type RootSequence = Vec<RootVector>;

/// `β_t = s_{i_1} ⋯ s_{i_{t-1}}(α_{i_t})`; fails at the first negative root.
pub fn beta_sequence(c: &CartanMatrix, w: &ReducedWord) -> Result<RootSequence> {
    w.check_letters(c.rank())?;
    let letters = w.letters();
    let mut out = Vec::with_capacity(letters.len());
    for (t, &it) in letters.iter().enumerate() {
        let mut v = c.simple_root(it).0;
        for &i in letters[..t].iter().rev() {
            v = c.reflect(i, &v);
        }
        let root = RootVector(v);
        if !root.is_positive() {
            return Err(Error::NotReduced { position: t + 1 });
        }
        out.push(root);
    }
    Ok(out)
}

/// All positive roots, sorted by height then coordinates.
pub fn positive_roots(c: &CartanMatrix) -> Vec<RootVector> {
    let n = c.rank();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<i64>> = (0..n).map(|i| c.simple_root(i).0).collect();
    while let Some(v) = queue.pop_front() {
        if !seen.insert(v.clone()) {
            continue;
        }
        for i in 0..n {
            let r = c.reflect(i, &v);
            if r.iter().all(|&x| x >= 0) && r.iter().any(|&x| x > 0) && !seen.contains(&r) {
                queue.push_back(r);
            }
        }
    }
    let mut roots: Vec<RootVector> = seen.into_iter().map(RootVector).collect();
    roots.sort_by_key(|r| (r.height(), r.0.clone()));
    roots
}

pub fn num_positive_roots(c: &CartanMatrix) -> usize {
    positive_roots(c).len()
}

pub fn highest_root(c: &CartanMatrix) -> RootVector {
    positive_roots(c).pop().expect("nonempty root system")
}

/// All reduced words of `w0` in lexicographic order.
///
/// Weyl group elements are carried as integer matrices (column `j` is the
/// image of `α_j`); `u s_i` is longer than `u` iff `u(α_i) > 0`. Every reduced
/// prefix extends to a reduced word of `w0`, so the search never backtracks
/// out of a dead end.
pub fn enumerate_reduced_words(c: &CartanMatrix, cap: usize) -> Result<Vec<ReducedWord>> {
    let n = c.rank();
    let big_n = num_positive_roots(c);
    let identity: Vec<Vec<i64>> = (0..n).map(|j| c.simple_root(j).0).collect();
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(big_n);
    dfs_words(c, &identity, big_n, &mut prefix, &mut out, cap)?;
    Ok(out)
}

fn dfs_words(
    c: &CartanMatrix,
    columns: &[Vec<i64>],
    target: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<ReducedWord>,
    cap: usize,
) -> Result<()> {
    if prefix.len() == target {
        if out.len() >= cap {
            return Err(Error::CapExceeded { cap });
        }
        out.push(ReducedWord(prefix.clone()));
        return Ok(());
    }
    let n = c.rank();
    for i in 0..n {
        if columns[i].iter().any(|&x| x < 0) {
            continue;
        }
        // (u s_i)(α_j) = u(α_j) - a_ij u(α_i)
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
        dfs_words(c, &next, target, prefix, out, cap)?;
        prefix.pop();
    }
    Ok(())
}

/// Number of elements of the Weyl group, by breadth-first search over matrices.
pub fn weyl_group_order(c: &CartanMatrix) -> usize {
    let n = c.rank();
    let identity: Vec<Vec<i64>> = (0..n).map(|j| c.simple_root(j).0).collect();
    let mut seen = std::collections::HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(u) = queue.pop_front() {
        for i in 0..n {
            let next: Vec<Vec<i64>> = (0..n)
                .map(|j| {
                    let a = c.a(i, j);
                    u[j].iter().zip(&u[i]).map(|(x, y)| x - a * y).collect()
                })
                .collect();
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.len()
}

/// `(n, n-1, n, n-2, n-1, n, …, 1, …, n)` for type A_n.
pub fn w0_max(n: usize) -> ReducedWord {
    let mut letters = Vec::with_capacity(n * (n + 1) / 2);
    for start in (0..n).rev() {
        letters.extend(start..n);
    }
    ReducedWord(letters)
}

/// `β_k + β_ℓ - Σ_{k<s<ℓ} c_s β_s` with `c_s = -a_{i_s, i_k}`; zero when `ℓ = k[1]`.
pub fn successor_root_defect(
    c: &CartanMatrix,
    w: &ReducedWord,
    betas: &[RootVector],
    k: usize,
    l: usize,
) -> Vec<i64> {
    let ik = w.letters()[k];
    let mut v: Vec<i64> = betas[k]
        .0
        .iter()
        .zip(&betas[l].0)
        .map(|(a, b)| a + b)
        .collect();
    for s in k + 1..l {
        let cs = -c.a(w.letters()[s], ik);
        for (x, b) in v.iter_mut().zip(&betas[s].0) {
            *x -= cs * b;
        }
    }
    v
}

pub(crate) fn is_zero_vec(v: &[i64]) -> bool {
    v.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct(s: &str) -> CartanMatrix {
        CartanMatrix::of_type(s.parse().unwrap())
    }

    fn word(s: &str) -> ReducedWord {
        s.parse().unwrap()
    }

    #[test]
    fn pinned_rank_two_matrices() {
        assert_eq!(ct("A2").entries(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(ct("G2").entries(), &[vec![2, -1], vec![-3, 2]]);
        assert_eq!(ct("B2").entries(), &[vec![2, -2], vec![-1, 2]]);
        assert_eq!(ct("B2").symmetrizers(), &[1, 2]);
        assert_eq!(ct("G2").symmetrizers(), &[3, 1]);
    }

    #[test]
    fn invalid_types_are_rejected() {
        assert!("D3".parse::<CartanType>().is_err());
        assert!("E9".parse::<CartanType>().is_err());
        assert!("G3".parse::<CartanType>().is_err());
        assert!("X2".parse::<CartanType>().is_err());
        assert!(CartanMatrix::from_entries(vec![vec![2, -2], vec![-2, 2]]).is_err());
        assert!(CartanMatrix::from_entries(vec![vec![2, -1], vec![0, 2]]).is_err());
    }

    #[test]
    fn every_family_is_finite_and_symmetrizable() {
        for s in [
            "A1", "A5", "B3", "C4", "D4", "D6", "E6", "E7", "E8", "F4", "G2",
        ] {
            let c = ct(s);
            let d = c.symmetrizers();
            for i in 0..c.rank() {
                for j in 0..c.rank() {
                    assert_eq!(d[i] * c.a(i, j), d[j] * c.a(j, i), "{s}");
                }
            }
            assert!(
                CartanMatrix::from_entries(c.entries().to_vec()).is_ok(),
                "{s}"
            );
        }
    }

    #[test]
    fn positive_root_counts() {
        for (s, n) in [
            ("A3", 6),
            ("B3", 9),
            ("C3", 9),
            ("D4", 12),
            ("E6", 36),
            ("F4", 24),
            ("G2", 6),
        ] {
            assert_eq!(num_positive_roots(&ct(s)), n, "{s}");
        }
        assert_eq!(weyl_group_order(&ct("A3")), 24);
        assert_eq!(weyl_group_order(&ct("B3")), 48);
        assert_eq!(weyl_group_order(&ct("G2")), 12);
    }

    #[test]
    fn langlands_dual_transposes() {
        let b2 = ct("B2");
        let c2 = langlands_dual(&b2);
        assert_eq!(c2.entries(), ct("C2").entries());
        assert_eq!(c2.label.unwrap().to_string(), "C2");
        assert_eq!(langlands_dual(&ct("A2")), ct("A2"));
        let g2 = ct("G2");
        assert_eq!(langlands_dual(&langlands_dual(&g2)), g2);
        assert_eq!(langlands_dual(&g2).symmetrizers(), &[1, 3]);
    }

    #[test]
    fn beta_sequences() {
        let b = beta_sequence(&ct("A2"), &word("1,2,1")).unwrap();
        assert_eq!(
            b,
            vec![
                RootVector(vec![1, 0]),
                RootVector(vec![1, 1]),
                RootVector(vec![0, 1])
            ]
        );
        let g = beta_sequence(&ct("G2"), &word("1,2,1")).unwrap();
        assert_eq!(g[0], RootVector(vec![1, 0]));
        assert_eq!(g[2], RootVector(vec![2, 3]));
        let b2 = beta_sequence(&ct("B2"), &word("2,1,2")).unwrap();
        assert_eq!(b2[2], RootVector(vec![2, 1]));
        let c2 = beta_sequence(&ct("C2"), &word("2,1,2")).unwrap();
        assert_eq!(c2[2], RootVector(vec![1, 1]));
        assert_eq!(
            beta_sequence(&ct("A2"), &word("1,1,2")),
            Err(Error::NotReduced { position: 2 })
        );
        assert!(matches!(
            beta_sequence(&ct("A2"), &word("1,3")),
            Err(Error::LetterOutOfRange { .. })
        ));
    }

    #[test]
    fn k_shift_examples() {
        assert_eq!(word("2,1,2").k_shift(0, 1), Some(2));
        assert_eq!(word("3,2,3,1,2,3").k_shift(0, 2), Some(5));
        assert_eq!(word("1,2").k_shift(0, 1), None);
        assert_eq!(word("1,2").k_shift(5, 1), None);
    }

    #[test]
    fn pairing_values() {
        let a2 = ct("A2");
        assert_eq!(sym_pairing(&a2, &[1, 0], &[0, 1]), -1);
        let g2 = ct("G2");
        assert_eq!(sym_pairing(&g2, &[1, 0], &[1, 0]), 6);
        assert_eq!(sym_pairing(&g2, &[0, 1], &[0, 1]), 2);
        for r in positive_roots(&g2) {
            let len = sym_pairing(&g2, &r.0, &r.0);
            assert!(len == 2 || len == 6);
        }
    }

    #[test]
    fn reduced_word_counts() {
        let a2 = enumerate_reduced_words(&ct("A2"), DEFAULT_WORD_CAP).unwrap();
        assert_eq!(a2, vec![word("1,2,1"), word("2,1,2")]);
        assert_eq!(
            enumerate_reduced_words(&ct("A3"), DEFAULT_WORD_CAP)
                .unwrap()
                .len(),
            16
        );
        assert_eq!(
            enumerate_reduced_words(&ct("B2"), DEFAULT_WORD_CAP).unwrap(),
            vec![word("1,2,1,2"), word("2,1,2,1")]
        );
        assert_eq!(
            enumerate_reduced_words(&ct("B3"), DEFAULT_WORD_CAP)
                .unwrap()
                .len(),
            42
        );
        assert_eq!(
            enumerate_reduced_words(&ct("A4"), DEFAULT_WORD_CAP)
                .unwrap()
                .len(),
            768
        );
        assert_eq!(
            enumerate_reduced_words(&ct("A5"), 1000),
            Err(Error::CapExceeded { cap: 1000 })
        );
    }

    #[test]
    fn w0_max_words() {
        assert_eq!(w0_max(2).to_string(), "2,1,2");
        assert_eq!(w0_max(3).to_string(), "3,2,3,1,2,3");
        assert_eq!(w0_max(4).to_string(), "4,3,4,2,3,4,1,2,3,4");
        assert!(beta_sequence(&ct("A4"), &w0_max(4)).is_ok());
    }
}
