use std::collections::BTreeSet;

use qcones::conelab::{
    check_conjecture, degree_cone, lusztig_cone, negative_tight_cone, theorem_term_inequalities,
    Verdict,
};
use qcones::hallalg::HallAlgebra;
use qcones::polycone::{compare, dual_cone, Comparison, LinearForm};
use qcones::quiverrep::{ar_quiver, enumerate_adapted_words, DynkinQuiver};
use qcones::rootsys::{
    enumerate_reduced_words, langlands_dual, CartanMatrix, CartanType, ReducedWord,
    DEFAULT_WORD_CAP,
};
use qcones::tropflag::{phi_int, pluecker_relations, trop_membership};

fn cartan(t: &str) -> CartanMatrix {
    CartanMatrix::of_type(t.parse::<CartanType>().unwrap())
}

fn forms(v: &[&[i64]]) -> BTreeSet<LinearForm> {
    v.iter().map(|f| LinearForm::new(f.to_vec())).collect()
}

#[test]
fn b2_exchange_cones() {
    let c = cartan("B2");
    let w: ReducedWord = "2,1,2,1".parse().unwrap();
    let m = negative_tight_cone(&c, &w).unwrap();
    let got: BTreeSet<LinearForm> = m.defining_forms().unwrap().iter().cloned().collect();
    assert_eq!(got, forms(&[&[1, -1, 1, 0], &[0, 1, -2, 1]]));
    let tt: BTreeSet<LinearForm> = theorem_term_inequalities(&c, &w)
        .unwrap()
        .into_iter()
        .collect();
    assert_eq!(tt, forms(&[&[1, -2, 1, 0], &[0, 1, -1, 1]]));
    let l = lusztig_cone(&c, &w).unwrap();
    assert!(l.contains(&[0, 2, 1, 0]).unwrap());
    assert!(!l.contains(&[1, 0, 1, 0]).unwrap());
}

#[test]
fn dual_cone_is_an_involution() {
    for t in ["A2", "A3", "B2"] {
        let c = cartan(t);
        for w in enumerate_reduced_words(&c, DEFAULT_WORD_CAP).unwrap() {
            for cone in [
                lusztig_cone(&c, &w).unwrap(),
                negative_tight_cone(&c, &w).unwrap(),
            ] {
                let dd = dual_cone(&dual_cone(&cone).unwrap()).unwrap();
                assert_eq!(compare(&dd, &cone).unwrap(), Comparison::Equal, "{t} {w}");
            }
        }
    }
}

#[test]
fn every_d4_orientation_satisfies_the_cone_equality() {
    let c = cartan("D4");
    for q in DynkinQuiver::all_orientations(&c).unwrap() {
        let w = enumerate_adapted_words(&q).into_iter().next().unwrap();
        let r = check_conjecture(&q, &w).unwrap();
        assert_eq!(r.verdict, Verdict::Equal, "{q} {w}");
    }
}

#[test]
fn degree_cone_of_a4_sink_source_orientation() {
    let q = DynkinQuiver::parse(cartan("A4"), "1>2,3>2,3>4").unwrap();
    let w = enumerate_adapted_words(&q).into_iter().next().unwrap();
    let d = degree_cone(&q, &w).unwrap();
    assert_eq!(d.facets().unwrap().len(), 6);
    assert_eq!(d.lineality().unwrap().len(), 4);
    assert_eq!(check_conjecture(&q, &w).unwrap().verdict, Verdict::Equal);
    assert_eq!(ar_quiver(&q, &w).unwrap().len(), 10);
}

#[test]
fn term_theorem_on_equioriented_a4() {
    let h = HallAlgebra::equioriented(4).unwrap();
    for (k, _) in h.ar().word().successor_pairs() {
        let t = h.verify_term_theorem(k).unwrap();
        assert!(t.holds, "k = {}", t.k);
    }
}

#[test]
fn theorem_terms_match_the_dual_for_b3_and_c3() {
    for t in ["B3", "C3"] {
        let c = cartan(t);
        let w = enumerate_reduced_words(&c, DEFAULT_WORD_CAP)
            .unwrap()
            .into_iter()
            .next()
            .unwrap();
        let tt: BTreeSet<LinearForm> = theorem_term_inequalities(&c, &w)
            .unwrap()
            .into_iter()
            .collect();
        let m = negative_tight_cone(&langlands_dual(&c), &w).unwrap();
        assert_eq!(tt, m.defining_forms().unwrap().iter().cloned().collect());
    }
}

#[test]
fn tropical_membership_at_n_five() {
    let rels = pluecker_relations(5).unwrap();
    // d_{i,j} = 1 everywhere sits inside the cone.
    assert!(
        trop_membership(&phi_int(5, &[1; 10]).unwrap(), &rels)
            .unwrap()
            .passed
    );
    let mut bad = [0i64; 10];
    bad[1] = 3;
    assert!(
        !trop_membership(&phi_int(5, &bad).unwrap(), &rels)
            .unwrap()
            .passed
    );
}
