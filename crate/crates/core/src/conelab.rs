//! The cones attached to a reduced word: Lusztig's tight monomial cone `L`,
//! its negative counterpart `L⁻`, the commutation-term inequalities, and the
//! quantum degree cone `D` of an adapted word.
//!
//! All cones live in `R^N` with coordinates indexed by word position.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polycone::{ConeJson, LinearForm, RationalCone, Witness};
use crate::quiverrep::{ar_quiver, ArQuiver, DynkinQuiver, MiddleTermMode, ModuleClass};
use crate::rootsys::{
    beta_sequence, langlands_dual, w0_max, CartanMatrix, ReducedWord, RootVector,
};

/// Position (1-based) and root for each coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DictionaryEntry {
    pub position: usize,
    pub root: RootVector,
}

pub fn position_dictionary(c: &CartanMatrix, w: &ReducedWord) -> Result<Vec<DictionaryEntry>> {
    Ok(beta_sequence(c, w)?
        .into_iter()
        .enumerate()
        .map(|(t, root)| DictionaryEntry {
            position: t + 1,
            root,
        })
        .collect())
}

/// `x_p + x_{p'} + Σ_{p<s<p'} a_{i_p,i_s} x_s` for each `p' = p[1]`.
fn exchange_forms(c: &CartanMatrix, w: &ReducedWord) -> Result<Vec<LinearForm>> {
    beta_sequence(c, w)?;
    let letters = w.letters();
    Ok(w.successor_pairs()
        .into_iter()
        .map(|(p, q)| {
            let mut f = vec![0; w.len()];
            f[p] = 1;
            f[q] = 1;
            for s in p + 1..q {
                f[s] = c.a(letters[p], letters[s]);
            }
            LinearForm::new(f)
        })
        .collect())
}

pub fn lusztig_cone(c: &CartanMatrix, w: &ReducedWord) -> Result<RationalCone> {
    let n = w.len();
    let mut forms: Vec<LinearForm> = exchange_forms(c, w)?
        .iter()
        .map(LinearForm::negated)
        .collect();
    forms.extend((0..n).map(|p| {
        let mut e = vec![0; n];
        e[p] = 1;
        LinearForm::new(e)
    }));
    RationalCone::from_inequalities(n, forms)
}

/// Pass `langlands_dual(c)` to obtain `L⁻(g^L)`.
pub fn negative_tight_cone(c: &CartanMatrix, w: &ReducedWord) -> Result<RationalCone> {
    RationalCone::from_inequalities(w.len(), exchange_forms(c, w)?)
}

/// `d_k + d_l - Σ_{k<s<l} c_s d_s` with `c_s = -a_{i_s,i_k}`, one per `l = k[1]`.
pub fn theorem_term_inequalities(c: &CartanMatrix, w: &ReducedWord) -> Result<Vec<LinearForm>> {
    beta_sequence(c, w)?;
    let letters = w.letters();
    Ok(w.successor_pairs()
        .into_iter()
        .map(|(k, l)| {
            let mut f = vec![0; w.len()];
            f[k] = 1;
            f[l] = 1;
            for s in k + 1..l {
                f[s] = c.a(letters[s], letters[k]);
            }
            LinearForm::new(f)
        })
        .collect())
}

/// One inequality `d_k + d_l ≥ Σ n_t d_t` of the degree cone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeInequality {
    /// 1-based positions.
    pub k: usize,
    pub l: usize,
    pub middle: ModuleClass,
    pub form: LinearForm,
}

/// Every `(k, l, X)` with `Ext¹(U_l, U_k) ≠ 0` and `X` a middle term, deduplicated by form.
pub fn degree_inequalities(ar: &ArQuiver) -> Result<Vec<DegreeInequality>> {
    let big_n = ar.len();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for k in 0..big_n {
        for l in k + 1..big_n {
            if ar.ext_indec(l, k) == 0 {
                continue;
            }
            for x in ar.middle_terms(k, l, MiddleTermMode::Oracle)? {
                let mut f: Vec<i64> = x.0.iter().map(|&m| -(m as i64)).collect();
                f[k] += 1;
                f[l] += 1;
                let form = LinearForm::new(f);
                if seen.insert(form.clone()) {
                    out.push(DegreeInequality {
                        k: k + 1,
                        l: l + 1,
                        middle: x,
                        form,
                    });
                }
            }
        }
    }
    Ok(out)
}

pub fn degree_cone(q: &DynkinQuiver, w: &ReducedWord) -> Result<RationalCone> {
    let ar = ar_quiver(q, w)?;
    let forms = degree_inequalities(&ar)?
        .into_iter()
        .map(|d| d.form)
        .collect();
    RationalCone::from_inequalities(w.len(), forms)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Equal,
    /// `D ⊊ L⁻(g^L)`.
    StrictSubset,
    /// `D ⊄ L⁻(g^L)`.
    Violation,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConeReport {
    pub word: ReducedWord,
    pub quiver: String,
    pub dictionary: Vec<DictionaryEntry>,
    pub cone_l: ConeJson,
    pub cone_lminus_dual: ConeJson,
    pub cone_d: ConeJson,
    pub containment: bool,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

pub fn check_conjecture(q: &DynkinQuiver, w: &ReducedWord) -> Result<ConeReport> {
    let c = q.cartan();
    let d = degree_cone(q, w)?;
    let lminus = negative_tight_cone(&langlands_dual(c), w)?;
    let l = lusztig_cone(c, w)?;
    let escape = d.first_escape(&lminus)?;
    let containment = escape.is_none();
    let (verdict, witness) = match escape {
        Some(wit) => (Verdict::Violation, Some(wit)),
        None => match lminus.first_escape(&d)? {
            None => (Verdict::Equal, None),
            Some(wit) => (Verdict::StrictSubset, Some(wit)),
        },
    };
    Ok(ConeReport {
        word: w.clone(),
        quiver: q.to_string(),
        dictionary: position_dictionary(c, w)?,
        cone_l: l.to_json()?,
        cone_lminus_dual: lminus.to_json()?,
        cone_d: d.to_json()?,
        containment,
        verdict,
        witness,
    })
}

/// `(i, j)` (1-based) when `root = α_i + ⋯ + α_j`.
pub fn interval_of(root: &RootVector) -> Option<(usize, usize)> {
    let support: Vec<usize> = root
        .0
        .iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .map(|(i, _)| i)
        .collect();
    let (&lo, &hi) = (support.first()?, support.last()?);
    let ok = root
        .0
        .iter()
        .enumerate()
        .all(|(i, &x)| x == i64::from(i >= lo && i <= hi));
    ok.then_some((lo + 1, hi + 1))
}

/// Position (0-based) of `α_{i,j}` in `w0^max` of `A_n`.
pub fn max_word_position(n: usize, i: usize, j: usize) -> Result<usize> {
    if !(1 <= i && i <= j && j <= n) {
        return Err(Error::InvalidIndex(format!(
            "({i},{j}) is not a root of A{n}"
        )));
    }
    // Block b (1-based) of w0^max is n-b+1, …, n and produces α_{n-b+1, n}, …, α_{n-b+1, n-b+1}.
    let b = n - i + 1;
    let start = (b - 1) * b / 2;
    Ok(start + (n - j))
}

/// The interval-exchange inequalities describing `D` for `A_n`, `w0^max`, `1 → ⋯ → n`:
/// `d_{i,i} + d_{i+1,i+1} - d_{i,i+1} ≥ 0` and `d_{i,j-1} + d_{i+1,j} - d_{i,j} - d_{i+1,j-1} ≥ 0`.
pub fn interval_exchange_forms(n: usize) -> Result<Vec<LinearForm>> {
    let big_n = n * (n + 1) / 2;
    let mut out = Vec::new();
    let mut form = |terms: &[(i64, usize, usize)]| -> Result<()> {
        let mut f = vec![0; big_n];
        for &(c, i, j) in terms {
            f[max_word_position(n, i, j)?] += c;
        }
        out.push(LinearForm::new(f));
        Ok(())
    };
    for i in 1..n {
        form(&[(1, i, i), (1, i + 1, i + 1), (-1, i, i + 1)])?;
    }
    for i in 1..n {
        for j in i + 2..=n {
            form(&[(1, i, j - 1), (1, i + 1, j), (-1, i, j), (-1, i + 1, j - 1)])?;
        }
    }
    Ok(out)
}

/// `w0^max` and the equioriented quiver of `A_n`.
pub fn max_word_setup(n: usize) -> (DynkinQuiver, ReducedWord) {
    (DynkinQuiver::equioriented_a(n), w0_max(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycone::Comparison;
    use crate::rootsys::CartanType;

    fn cm(t: &str) -> CartanMatrix {
        CartanMatrix::of_type(t.parse::<CartanType>().unwrap())
    }

    fn w(s: &str) -> ReducedWord {
        s.parse().unwrap()
    }

    fn f(v: &[i64]) -> LinearForm {
        LinearForm::new(v.to_vec())
    }

    #[test]
    fn lusztig_a2() {
        let c = lusztig_cone(&cm("A2"), &w("1,2,1")).unwrap();
        assert_eq!(c.defining_forms().unwrap()[0], f(&[-1, 1, -1]));
        assert_eq!(
            c.rays().unwrap(),
            &[vec![0, 1, 0], vec![0, 1, 1], vec![1, 1, 0]]
        );
        assert!(c.analyze().unwrap().is_simplicial_mod_lineality);
    }

    #[test]
    fn lusztig_b2_uses_row_of_the_earlier_letter() {
        let forms = exchange_forms(&cm("B2"), &w("2,1,2,1")).unwrap();
        assert_eq!(forms, vec![f(&[1, -1, 1, 0]), f(&[0, 1, -2, 1])]);
    }

    #[test]
    fn negative_cone_a2() {
        let c = negative_tight_cone(&cm("A2"), &w("1,2,1")).unwrap();
        assert_eq!(c.defining_forms().unwrap(), &[f(&[1, -1, 1])]);
        assert_eq!(c.analyze().unwrap().lineality_dim, 2);
        let a3 = negative_tight_cone(&cm("A3"), &w("3,2,3,1,2,3"))
            .unwrap()
            .analyze()
            .unwrap();
        assert_eq!(a3.lineality_dim, 3);
        assert_eq!(a3.ray_count, 3);
        assert!(a3.is_simplicial_mod_lineality);
    }

    #[test]
    fn term_inequalities_rank_two() {
        assert_eq!(
            theorem_term_inequalities(&cm("A2"), &w("2,1,2")).unwrap(),
            vec![f(&[1, -1, 1])]
        );
        let b2 = theorem_term_inequalities(&cm("B2"), &w("2,1,2,1")).unwrap();
        assert_eq!(b2[0], f(&[1, -2, 1, 0]));
        let g2 = theorem_term_inequalities(&cm("G2"), &w("1,2,1,2,1,2")).unwrap();
        assert_eq!(g2[0], f(&[1, -3, 1, 0, 0, 0]));
        for (t, word) in [
            ("B2", "2,1,2,1"),
            ("G2", "1,2,1,2,1,2"),
            ("A3", "3,2,3,1,2,3"),
        ] {
            let c = cm(t);
            let mut a = theorem_term_inequalities(&c, &w(word)).unwrap();
            let mut b = exchange_forms(&langlands_dual(&c), &w(word)).unwrap();
            a.sort();
            b.sort();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn degree_cone_examples() {
        let ar = ar_quiver(&DynkinQuiver::equioriented_a(2), &w("2,1,2")).unwrap();
        let ineq = degree_inequalities(&ar).unwrap();
        assert_eq!(ineq.len(), 1);
        assert_eq!(ineq[0].form, f(&[1, -1, 1]));
        let (q, word) = max_word_setup(3);
        let ar = ar_quiver(&q, &word).unwrap();
        let ineq = degree_inequalities(&ar).unwrap();
        assert!(ineq.iter().all(|d| !(d.k == 3 && d.l == 5)));
        let d = degree_cone(&q, &word).unwrap();
        let target =
            RationalCone::from_inequalities(6, interval_exchange_forms(3).unwrap()).unwrap();
        assert_eq!(
            crate::polycone::compare(&d, &target).unwrap(),
            Comparison::Equal
        );
        assert_eq!(d.facets().unwrap().len(), 3);
    }

    #[test]
    fn conjecture_small_cases() {
        let r = check_conjecture(&DynkinQuiver::equioriented_a(2), &w("2,1,2")).unwrap();
        assert_eq!(r.verdict, Verdict::Equal);
        let (q, word) = max_word_setup(3);
        let r = check_conjecture(&q, &word).unwrap();
        assert_eq!(r.verdict, Verdict::Equal);
        assert!(r.witness.is_none());
        assert!(matches!(
            check_conjecture(&q, &w("1,2,1,3,2,1")),
            Err(Error::NotAdapted)
        ));
    }

    #[test]
    fn max_word_positions() {
        let c = cm("A4");
        let betas = beta_sequence(&c, &w0_max(4)).unwrap();
        for (t, b) in betas.iter().enumerate() {
            let (i, j) = interval_of(b).unwrap();
            assert_eq!(max_word_position(4, i, j).unwrap(), t);
        }
        assert_eq!(interval_of(&RootVector(vec![1, 0, 1])), None);
        assert!(max_word_position(3, 2, 1).is_err());
    }
}
