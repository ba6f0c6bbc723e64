mod common;

use std::collections::BTreeSet;

use gicarkit::algebra::ProjectionPattern;
use gicarkit::cmodule::{decompose, lowest_weight_space, IrrModuleSpec};
use gicarkit::diagram::DiagramKind;
use gicarkit::tensorrep::{
    annular_degeneracy_report, evaluation_rank, minimal_projection_trace, necklace_count, odd_jones, represent_diagram,
    represent_standard, represent_word, separating_test, toy_annihilate, toy_create, toy_module, ToyContext,
};
use gicarkit::word::{enumerate_standard, psi, tensor_words, Letter, StandardWord, Word};
use gicarkit::{CycScalar, ExactMatrix};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn zeta_projection(d: usize) -> ExactMatrix {
    ExactMatrix::from_fn(d + 1, d + 1, |r, c| CycScalar::from_int((r == 0 && c == 0) as i64))
}

fn kron_all(factors: &[ExactMatrix]) -> ExactMatrix {
    factors.iter().fold(ExactMatrix::identity(1), |acc, f| acc.kron(f))
}

fn scalar_vec(v: &[i64]) -> Vec<CycScalar> {
    v.iter().map(|&x| CycScalar::from_int(x)).collect()
}

fn dot(x: &[CycScalar], y: &[CycScalar]) -> CycScalar {
    gicarkit::scalar::inner(x, y)
}

proptest! {
    #[test]
    fn creation_and_annihilation_are_adjoint(
        d in 1usize..=2,
        m in 0usize..=3,
        i_seed in 0usize..8,
        seed in proptest::collection::vec(-3i64..=3, 81 * 3),
    ) {
        let ctx = ToyContext::new(d);
        let i = i_seed % (m + 1) + 1;
        let u = scalar_vec(&seed[..ctx.level_dim(m)]);
        let v = scalar_vec(&seed[81..81 + ctx.level_dim(m + 1)]);
        let lhs = dot(&toy_create(&ctx, i, &u).unwrap(), &v);
        let rhs = dot(&u, &toy_annihilate(&ctx, i, &v).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn words_act_as_their_diagrams(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let w = common::random_word(&mut rng, 3, 6);
        let ctx = ToyContext::new(2);
        prop_assert_eq!(represent_word(&ctx, &w).unwrap(), represent_diagram(&ctx, &psi(&w)));
        prop_assert_eq!(represent_word(&ctx, &w.adjoint()).unwrap(), represent_word(&ctx, &w).unwrap().conj_transpose());
    }
}

#[test]
fn module_relations_hold() {
    for d in 0..=2 {
        let ctx = ToyContext::new(d);
        for kind in [DiagramKind::Rect, DiagramKind::Ann] {
            let m = toy_module(&ctx, kind, 4).unwrap();
            assert_eq!(m.check().unwrap(), Vec::<String>::new(), "d={d} {kind:?}");
        }
    }
}

#[test]
fn rotation_is_a_unitary_of_order_m() {
    let ctx = ToyContext::new(2);
    for m in 0..=4 {
        let t = ctx.rotate_matrix(m);
        assert!(t.conj_transpose().try_mul(&t).unwrap().is_identity());
        let full = (0..m).fold(ExactMatrix::identity(ctx.level_dim(m)), |acc, _| t.try_mul(&acc).unwrap());
        assert!(full.is_identity());
        for i in 2..=m {
            let lhs = Word::new(m - 1, &[Letter::Create(i), Letter::Rotate(1)]).unwrap();
            let rhs = Word::new(m - 1, &[Letter::Rotate(1), Letter::Create(i - 1)]).unwrap();
            assert_eq!(represent_word(&ctx, &lhs).unwrap(), represent_word(&ctx, &rhs).unwrap());
        }
    }
}

#[test]
fn odd_jones_projections() {
    for d in 1..=2 {
        let ctx = ToyContext::new(d);
        let id = ExactMatrix::identity(d + 1);
        for m in 1..=3 {
            let es: Vec<ExactMatrix> = (1..=m).map(|i| odd_jones(&ctx, i, m).unwrap()).collect();
            for (i, e) in es.iter().enumerate() {
                let factors: Vec<ExactMatrix> =
                    (0..m).map(|p| if p == i { zeta_projection(d) } else { id.clone() }).collect();
                assert_eq!(*e, kron_all(&factors));
                assert_eq!(e.try_mul(e).unwrap(), *e);
                assert_eq!(e.conj_transpose(), *e);
                for (j, f) in es.iter().enumerate() {
                    if i != j {
                        assert_ne!(e, f);
                        let (i1, j1) = (i + 1, j + 1);
                        let hop = represent_word(&ctx, &Word::new(m, &[Letter::Create(i1), Letter::Annihilate(j1)]).unwrap()).unwrap();
                        let back = represent_word(&ctx, &Word::new(m, &[Letter::Create(j1), Letter::Annihilate(i1)]).unwrap()).unwrap();
                        assert_eq!(hop.try_mul(&back).unwrap(), *e);
                        assert_eq!(back.try_mul(&hop).unwrap(), *f);
                    }
                }
            }
        }
    }
}

#[test]
fn all_broken_projection_at_two_strands() {
    let ctx = ToyContext::new(2);
    let p = gicarkit::algebra::minimal_projection(&"bb".parse().unwrap());
    let got = gicarkit::tensorrep::represent_lin(&ctx, &p, |d| d.to_ann()).unwrap();
    assert_eq!(got, zeta_projection(2).kron(&zeta_projection(2)));
}

#[test]
fn traces_of_minimal_projections() {
    for d in 1..=3 {
        let ctx = ToyContext::new(d);
        for n in 1..=4 {
            for pat in ProjectionPattern::all(n) {
                let j = pat.dotted_count();
                let expected = CycScalar::from_int((d as i64).pow(j as u32));
                assert_eq!(minimal_projection_trace(&ctx, &pat).unwrap(), expected, "d={d} {pat}");
            }
        }
    }
}

#[test]
fn separating_vectors() {
    let ctx = ToyContext::new(1);
    let id = StandardWord::identity(3);
    let r = separating_test(&ctx, &id).unwrap();
    assert!(r.ok() && r.xi_zeta.is_empty() && r.eta_zeta.is_empty());
    let x = StandardWord::new(2, vec![1], 0, vec![2]).unwrap();
    let r = separating_test(&ctx, &x).unwrap();
    assert_eq!((r.xi_zeta.clone(), r.eta_zeta.clone()), (vec![2], vec![1]));
    assert!(r.ok());
    for d in 1..=2 {
        let ctx = ToyContext::new(d);
        for m in 0..=3 {
            for n in 0..=3 {
                for w in enumerate_standard(m, n).into_iter().filter(StandardWord::is_rectangular) {
                    let r = separating_test(&ctx, &w).unwrap();
                    assert!(r.ok(), "{w}: {r:?}");
                }
            }
        }
    }
    assert!(separating_test(&ToyContext::new(0), &id).is_err());
}

#[test]
fn standard_words_are_independent() {
    let ctx = ToyContext::new(1);
    for m in 0..=4 {
        for n in 0..=4 {
            let (words, rank) = evaluation_rank(&ctx, m, n).unwrap();
            assert_eq!(rank, words, "m={m} n={n}");
        }
    }
    let (words, rank) = evaluation_rank(&ToyContext::new(2), 3, 3).unwrap();
    assert_eq!((words, rank), (20, 20));
}

#[test]
fn tensor_functor_law() {
    let ctx = ToyContext::new(1);
    let rect = |m: usize, n: usize| -> Vec<StandardWord> {
        enumerate_standard(m, n).into_iter().filter(StandardWord::is_rectangular).collect()
    };
    for (m1, n1, m2, n2) in [(1, 2, 2, 1), (2, 2, 1, 1), (1, 1, 2, 3), (3, 2, 0, 1)] {
        for w1 in rect(m1, n1) {
            for w2 in rect(m2, n2) {
                let joint = represent_standard(&ctx, &tensor_words(&w1, &w2).unwrap()).unwrap();
                let split = represent_standard(&ctx, &w1).unwrap().kron(&represent_standard(&ctx, &w2).unwrap());
                assert_eq!(joint, split, "{w1} ⊗ {w2}");
            }
        }
    }
}

/// Eigenspace dimensions of the cyclic shift on words of length k over d letters, from its orbits:
/// an orbit of size s carries exactly the eigenvalues ω with ω^s = 1.
fn orbit_count(d: usize, k: usize, r: usize) -> usize {
    if k == 0 {
        return 1;
    }
    let mut seen = BTreeSet::new();
    let mut count = 0;
    for idx in 0..d.pow(k as u32) {
        let word: Vec<usize> = (0..k).map(|p| idx / d.pow(p as u32) % d).collect();
        if seen.contains(&word) {
            continue;
        }
        let mut orbit = BTreeSet::new();
        let mut cur = word.clone();
        loop {
            orbit.insert(cur.clone());
            cur.rotate_right(1);
            if cur == word {
                break;
            }
        }
        if (r * orbit.len()).is_multiple_of(k) {
            count += 1;
        }
        seen.extend(orbit);
    }
    count
}

#[test]
fn necklace_formula_matches_orbits_and_decomposition() {
    for d in 1..=3 {
        for k in 0..=4 {
            for r in 0..k.max(1) {
                assert_eq!(necklace_count(d, k, r).unwrap(), orbit_count(d, k, r), "d={d} k={k} r={r}");
            }
        }
    }
    for d in 1..=2 {
        let ctx = ToyContext::new(d);
        let dec = decompose(&toy_module(&ctx, DiagramKind::Ann, 4).unwrap()).unwrap();
        for k in 0..=4 {
            for r in 0..k.max(1) {
                assert_eq!(dec.multiplicity(&IrrModuleSpec::ann(k, r)), orbit_count(d, k, r), "d={d} k={k} r={r}");
            }
        }
    }
}

#[test]
fn kappa_span_is_lowest_weight() {
    for d in 1..=3 {
        let m = toy_module(&ToyContext::new(d), DiagramKind::Rect, 2).unwrap();
        assert_eq!(lowest_weight_space(&m, 1).unwrap().len(), d);
    }
}

#[test]
fn degeneracy_reports() {
    let r0 = annular_degeneracy_report(&ToyContext::new(0), 4).unwrap();
    assert!(r0.consistent);
    for m in r0.rect.iter().chain(&r0.ann) {
        assert_eq!(m.multiplicity, (m.k == 0) as usize, "{m:?}");
    }
    let r1 = annular_degeneracy_report(&ToyContext::new(1), 4).unwrap();
    assert!(r1.consistent);
    assert!(r1.rect.iter().all(|m| m.multiplicity == 1));
    let r2 = annular_degeneracy_report(&ToyContext::new(2), 3).unwrap();
    assert!(r2.consistent);
    let two: Vec<usize> = r2.ann.iter().filter(|m| m.k == 2).map(|m| m.multiplicity).collect();
    assert_eq!(two, vec![3, 1]);
}
