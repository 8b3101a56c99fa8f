//! The acceptance suite: ten end-to-end checks shared by the `acceptance`
//! test target and `qcones paper-check`.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::conelab::{
    check_conjecture, degree_cone, interval_exchange_forms, lusztig_cone, max_word_position,
    max_word_setup, negative_tight_cone, theorem_term_inequalities, Verdict,
};
use crate::error::Result;
use crate::hallalg::{HallAlgebra, LaurentPoly};
use crate::polycone::{Comparison, LinearForm, RationalCone};
use crate::quiverrep::{
    ar_quiver, check_superfluous_conjecture, enumerate_adapted_words, ktheory_cones, DynkinQuiver,
    MiddleTermMode, ModuleClass,
};
use crate::rootsys::{
    beta_sequence, enumerate_reduced_words, langlands_dual, num_positive_roots,
    successor_root_defect, CartanMatrix, CartanType, ReducedWord, DEFAULT_WORD_CAP,
};
use crate::tropflag::{initial_form, phi_int, phi_rank, pluecker_relations, trop_membership};

#[derive(Debug, Clone, Serialize)]
pub struct CriterionOutcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: f64,
    pub bound_ms: Option<f64>,
}

impl CriterionOutcome {
    pub fn line(&self) -> String {
        let bound = self
            .bound_ms
            .map(|b| format!(" (bound {:.0} ms)", b))
            .unwrap_or_default();
        format!(
            "[{}] {:>2}. {}: {} [{:.1} ms{}]",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.elapsed_ms,
            bound
        )
    }
}

fn run(
    id: u8,
    name: &'static str,
    bound: Option<Duration>,
    f: impl FnOnce() -> Result<(bool, String)>,
) -> CriterionOutcome {
    let start = Instant::now();
    let res = f();
    let elapsed = start.elapsed();
    let in_time = bound.is_none_or(|b| elapsed <= b);
    let (ok, mut detail) = match res {
        Ok(x) => x,
        Err(e) => (false, format!("error: {e}")),
    };
    if !in_time {
        detail.push_str("; runtime bound exceeded");
    }
    CriterionOutcome {
        id,
        name,
        passed: ok && in_time,
        detail,
        elapsed_ms: elapsed.as_secs_f64() * 1e3,
        bound_ms: bound.map(|b| b.as_secs_f64() * 1e3),
    }
}

fn cartan(t: &str) -> CartanMatrix {
    CartanMatrix::of_type(t.parse::<CartanType>().expect("valid type"))
}

fn word(s: &str) -> ReducedWord {
    s.parse().expect("valid word")
}

pub const BOUND_1: Duration = Duration::from_secs(5);
pub const BOUND_2: Duration = Duration::from_secs(60);
pub const BOUND_4: Duration = Duration::from_secs(10);
pub const BOUND_6: Duration = Duration::from_secs(60);
pub const BOUND_10: Duration = Duration::from_secs(10);

/// The D4 orientation used throughout: every arm points to the centre.
pub fn d4_quiver() -> DynkinQuiver {
    DynkinQuiver::parse(cartan("D4"), "1>2,3>2,4>2").expect("valid D4 quiver")
}

/// The adapted pairs on which the cone equality is checked.
pub fn equality_cases() -> Vec<(String, DynkinQuiver, ReducedWord)> {
    let mut cases = Vec::new();
    for q in DynkinQuiver::all_orientations(&cartan("A3")).expect("A3 orientations") {
        for w in enumerate_adapted_words(&q) {
            cases.push(("A3".to_string(), q.clone(), w));
        }
    }
    let a4 = DynkinQuiver::equioriented_a(4);
    for w in enumerate_adapted_words(&a4) {
        cases.push(("A4".to_string(), a4.clone(), w));
    }
    let d4 = d4_quiver();
    let w = enumerate_adapted_words(&d4)
        .into_iter()
        .next()
        .expect("D4 has adapted words");
    cases.push(("D4".to_string(), d4, w));
    cases
}

pub fn criterion_1() -> CriterionOutcome {
    run(
        1,
        "interval-exchange cone reproduction",
        Some(BOUND_1),
        || {
            let mut notes = Vec::new();
            let mut ok = true;
            for n in 2..=4 {
                let (q, w) = max_word_setup(n);
                let d = degree_cone(&q, &w)?;
                let got: BTreeSet<LinearForm> = d.facets()?.iter().cloned().collect();
                let want: BTreeSet<LinearForm> = interval_exchange_forms(n)?.into_iter().collect();
                let same = got == want && d.equalities()?.is_empty();
                ok &= same;
                notes.push(format!(
                    "A{n}: {} facets{}",
                    got.len(),
                    if same { "" } else { " MISMATCH" }
                ));
            }
            Ok((ok, notes.join(", ")))
        },
    )
}

pub fn criterion_2() -> CriterionOutcome {
    run(
        2,
        "degree cone equals negative tight cone",
        Some(BOUND_2),
        || {
            let cases = equality_cases();
            let mut bad = Vec::new();
            for (t, q, w) in &cases {
                let r = check_conjecture(q, w)?;
                if r.verdict != Verdict::Equal {
                    bad.push(format!("{t} {q} {w}: {:?}", r.verdict));
                }
            }
            let detail = format!(
                "{} adapted pairs, {} not equal{}",
                cases.len(),
                bad.len(),
                fmt_list(&bad)
            );
            Ok((bad.is_empty(), detail))
        },
    )
}

pub fn criterion_3() -> CriterionOutcome {
    run(
        3,
        "degree cone inside negative tight cone, ray by ray",
        Some(BOUND_2),
        || {
            let cases = equality_cases();
            let mut bad = Vec::new();
            let mut rays = 0;
            for (t, q, w) in &cases {
                let d = degree_cone(q, w)?;
                let lminus = negative_tight_cone(&langlands_dual(q.cartan()), w)?;
                let forms = lminus.defining_forms().expect("built from inequalities");
                rays += d.rays()?.len();
                let ray_ok = d
                    .rays()?
                    .iter()
                    .all(|r| forms.iter().all(|f| f.eval(r) >= 0));
                let lin_ok = d
                    .lineality()?
                    .iter()
                    .all(|l| forms.iter().all(|f| f.eval(l) == 0));
                if !(ray_ok && lin_ok) {
                    bad.push(format!("{t} {q} {w}"));
                }
            }
            Ok((
                bad.is_empty(),
                format!(
                    "{} cases, {rays} rays checked, {} failures{}",
                    cases.len(),
                    bad.len(),
                    fmt_list(&bad)
                ),
            ))
        },
    )
}

pub fn criterion_4() -> CriterionOutcome {
    run(4, "tight cone structure", Some(BOUND_4), || {
        let mut words: Vec<(&str, ReducedWord)> = Vec::new();
        for w in enumerate_reduced_words(&cartan("A3"), DEFAULT_WORD_CAP)? {
            words.push(("A3", w));
        }
        for t in ["B2", "G2"] {
            for w in enumerate_reduced_words(&cartan(t), DEFAULT_WORD_CAP)? {
                words.push((t, w));
            }
        }
        let mut bad = Vec::new();
        for (t, w) in &words {
            let c = cartan(t);
            let (n, big_n) = (c.rank(), num_positive_roots(&c));
            let l = lusztig_cone(&c, w)?.analyze()?;
            let m = negative_tight_cone(&c, w)?.analyze()?;
            let ok = l.is_simplicial_mod_lineality
                && l.ray_count == big_n
                && l.lineality_dim == 0
                && m.lineality_dim == n
                && m.ray_count == big_n - n
                && m.is_simplicial_mod_lineality;
            if !ok {
                bad.push(format!("{t} {w}"));
            }
        }
        Ok((
            bad.is_empty(),
            format!(
                "{} words, {} failures{}",
                words.len(),
                bad.len(),
                fmt_list(&bad)
            ),
        ))
    })
}

/// Rank-2 cases: (type, word, middle multiplicity of the pair (1,3)).
pub const RANK_TWO_TERMS: [(&str, &str, i64); 6] = [
    ("A2", "2,1,2", 1),
    ("A2", "1,2,1", 1),
    ("C2", "2,1,2,1", 1),
    ("B2", "2,1,2,1", 2),
    ("G2", "1,2,1,2,1,2", 3),
    ("G2", "2,1,2,1,2,1", 1),
];

pub fn criterion_5() -> CriterionOutcome {
    run(5, "commutation-term multiplicities in rank 2", None, || {
        let mut bad = Vec::new();
        for (t, ws, mult) in RANK_TWO_TERMS {
            let c = cartan(t);
            let w = word(ws);
            let first = theorem_term_inequalities(&c, &w)?.into_iter().next();
            let betas = beta_sequence(&c, &w)?;
            // d_1 + d_3 - m d_2 ≥ 0, and β_1 + β_3 = m β_2 at q = 1.
            let form_ok = first
                .as_ref()
                .map(|f| f.coeffs()[..3] == [1, -mult, 1])
                .unwrap_or(false);
            let roots_ok =
                (0..c.rank()).all(|i| betas[0].0[i] + betas[2].0[i] == mult * betas[1].0[i]);
            if !(form_ok && roots_ok) {
                bad.push(format!("{t} {ws}"));
            }
        }
        Ok((
            bad.is_empty(),
            format!(
                "{} rank-2 cases, {} mismatches{}",
                RANK_TWO_TERMS.len(),
                bad.len(),
                fmt_list(&bad)
            ),
        ))
    })
}

pub fn criterion_6() -> CriterionOutcome {
    run(6, "Hall algebra oracle agreement", Some(BOUND_6), || {
        let mut notes = Vec::new();
        let mut ok = true;
        for n in [2, 3] {
            let h = HallAlgebra::equioriented(n)?;
            let ar = h.ar();
            let big_n = ar.len();
            let mut pairs = 0;
            for k in 0..big_n {
                for l in k + 1..big_n {
                    if ar.ext_indec(l, k) == 0 {
                        continue;
                    }
                    pairs += 1;
                    let c = h.q_commutator(
                        &ModuleClass::indecomposable(big_n, l),
                        &ModuleClass::indecomposable(big_n, k),
                    )?;
                    if c.support() != ar.middle_terms(k, l, MiddleTermMode::Oracle)? {
                        ok = false;
                        notes.push(format!("A{n} pair ({},{}) support mismatch", k + 1, l + 1));
                    }
                }
            }
            notes.push(format!("A{n}: {pairs} pairs"));
        }
        let h2 = HallAlgebra::equioriented(2)?;
        let (s1, s2, p1) = (
            h2.parse_module("[1,1]")?,
            h2.parse_module("[2,2]")?,
            h2.parse_module("[1,2]")?,
        );
        let prod = h2.hall_product(&s1, &s2)?;
        let id1 = prod.support().len() == 2
            && prod.coeff(&s1.plus(&s2)) == LaurentPoly::monomial(1, -1)
            && prod.coeff(&p1) == LaurentPoly::one();
        let comm = h2.q_commutator(&s1, &s2)?;
        let id2 = comm.support() == vec![p1.clone()] && comm.coeff(&p1) == LaurentPoly::one();
        let h3 = HallAlgebra::equioriented(3)?;
        let (v, w) = (h3.parse_module("[2,3]")?, h3.parse_module("[3,3]")?);
        let x = v.plus(&w);
        let id3 = h3.hall_polynomial(&v, &w, &x)? == LaurentPoly::monomial(1, 1);
        // Held-out prime far beyond the interpolation nodes.
        let held_out = 97u64;
        let count = h3.count_submodules(&x, &h3.ar().dim_vector(&w), held_out)?;
        let id4 = count.get(&(w.clone(), v.clone())).copied() == Some(held_out);
        ok &= id1 && id2 && id3 && id4;
        notes.push(format!(
            "F_S1 F_S2 {}, [F_S1,F_S2]_q {}, H=q {}, p={held_out} held out {}",
            tick(id1),
            tick(id2),
            tick(id3),
            tick(id4)
        ));
        Ok((ok, notes.join("; ")))
    })
}

pub fn criterion_7() -> CriterionOutcome {
    run(7, "successor root identity", None, || {
        let mut checked = 0;
        let mut bad = Vec::new();
        for t in ["A2", "A3", "B2", "G2"] {
            let c = cartan(t);
            for w in enumerate_reduced_words(&c, DEFAULT_WORD_CAP)? {
                let betas = beta_sequence(&c, &w)?;
                for (k, l) in w.successor_pairs() {
                    checked += 1;
                    if successor_root_defect(&c, &w, &betas, k, l)
                        .iter()
                        .any(|&x| x != 0)
                    {
                        bad.push(format!("{t} {w} k={}", k + 1));
                    }
                }
            }
        }
        Ok((
            bad.is_empty(),
            format!("{checked} pairs, {} failures{}", bad.len(), fmt_list(&bad)),
        ))
    })
}

pub fn criterion_8() -> CriterionOutcome {
    run(8, "K-theory duality E = D^v", None, || {
        let mut notes = Vec::new();
        let mut ok = true;
        for n in [2, 3] {
            let (q, w) = max_word_setup(n);
            let ar = ar_quiver(&q, &w)?;
            let r = ktheory_cones(&ar, None)?;
            let expected_d = ar.len() - n;
            let this = r.duality_verdict == Comparison::Equal
                && r.stabilized
                && r.d_independent
                && r.containment
                && r.d_generators.len() == expected_d
                && r.lambda_rank == expected_d;
            ok &= this;
            notes.push(format!(
                "A{n}: bound {}, {} E-rays, {} D-generators, {:?}, stabilized {}",
                r.bound,
                r.e_generators.len(),
                r.d_generators.len(),
                r.duality_verdict,
                r.stabilized
            ));
        }
        Ok((ok, notes.join("; ")))
    })
}

pub fn criterion_9() -> CriterionOutcome {
    run(
        9,
        "Hom-range condition superfluous (empirical)",
        None,
        || {
            let mut cases: Vec<(String, DynkinQuiver, ReducedWord)> = Vec::new();
            for t in ["A2", "A3"] {
                for q in DynkinQuiver::all_orientations(&cartan(t))? {
                    for w in enumerate_adapted_words(&q) {
                        cases.push((t.to_string(), q.clone(), w));
                    }
                }
            }
            cases.extend(equality_cases().into_iter().filter(|(t, _, _)| t != "A3"));
            let mut pairs = 0;
            let mut counter = 0;
            let mut complete = true;
            for (_, q, w) in &cases {
                let ar = ar_quiver(q, w)?;
                let r = check_superfluous_conjecture(&ar)?;
                complete &= r.pairs_checked == ar.len() * (ar.len() - 1) / 2;
                pairs += r.pairs_checked;
                counter += r.counterexamples.len();
            }
            Ok((
                complete,
                format!(
                    "{} adapted pairs, {pairs} position pairs compared, {counter} counterexamples",
                    cases.len()
                ),
            ))
        },
    )
}

/// Degree vector `(d_{1,1}, d_{1,2}, …, d_{n-1,n-1})` of `sl_n` from a point in position coordinates.
pub fn degree_vector_from_positions(n: usize, x: &[i64]) -> Result<Vec<i64>> {
    let r = n - 1;
    let mut d = Vec::with_capacity(x.len());
    for i in 1..=r {
        for j in i..=r {
            d.push(x[max_word_position(r, i, j)?]);
        }
    }
    Ok(d)
}

pub fn criterion_10() -> CriterionOutcome {
    run(10, "tropical flag variety checks", Some(BOUND_10), || {
        let mut notes = Vec::new();
        let mut ok = true;
        for n in [3, 4] {
            let r = n - 1;
            let rels = pluecker_relations(n)?;
            let (q, w) = max_word_setup(r);
            let d_cone = degree_cone(&q, &w)?;
            let interior = d_cone.interior_point()?;
            let wv = phi_int(n, &degree_vector_from_positions(n, &interior)?)?;
            let member = trop_membership(&wv, &rels)?.passed;
            let binomial = rels
                .iter()
                .map(|rel| initial_form(&wv, rel))
                .collect::<Result<Vec<_>>>()?;
            let all_binomial = binomial
                .iter()
                .all(|f| f.is_binomial && f.unit_coefficients);
            let rank_ok = phi_rank(n)? == n * (n - 1) / 2;
            let violations = violating_points(&d_cone)?;
            let mut caught = 0;
            for x in &violations {
                let wx = phi_int(n, &degree_vector_from_positions(n, x)?)?;
                if !trop_membership(&wx, &rels)?.passed {
                    caught += 1;
                }
            }
            let this = member
                && all_binomial
                && rank_ok
                && caught == violations.len()
                && !violations.is_empty();
            ok &= this;
            notes.push(format!(
                "n={n}: {} relations, interior member {}, binomial {}, rank {}, {caught}/{} violations detected",
                rels.len(),
                tick(member),
                tick(all_binomial),
                tick(rank_ok),
                violations.len()
            ));
        }
        Ok((ok, notes.join("; ")))
    })
}

/// For each facet, a point violating that facet and no other.
pub fn violating_points(c: &RationalCone) -> Result<Vec<Vec<i64>>> {
    let rays = c.rays()?;
    let facets = c.facets()?;
    let mut out = Vec::new();
    for f in facets {
        let mut x = vec![0i64; c.ambient_dim()];
        for r in rays {
            let s = if f.eval(r) == 0 { 1 } else { -1 };
            x.iter_mut().zip(r).for_each(|(a, b)| *a += s * b);
        }
        let only_this = facets.iter().all(|g| {
            if g == f {
                g.eval(&x) < 0
            } else {
                g.eval(&x) >= 0
            }
        });
        if only_this {
            out.push(x);
        }
    }
    Ok(out)
}

fn tick(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAILED"
    }
}

fn fmt_list(items: &[String]) -> String {
    if items.is_empty() {
        String::new()
    } else {
        format!(
            ": {}",
            items.iter().take(5).cloned().collect::<Vec<_>>().join("; ")
        )
    }
}

pub fn all_criteria() -> Vec<fn() -> CriterionOutcome> {
    vec![
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
    ]
}

pub fn run_all() -> Vec<CriterionOutcome> {
    all_criteria().into_iter().map(|f| f()).collect()
}
