use std::collections::BTreeMap;

use gicarkit::cmodule::{
    decompose, extend_morphism, hom_module, intertwiners, irr_matrices, lowest_weight_space, IrrModuleSpec,
    SequenceModule,
};
use gicarkit::diagram::DiagramKind;
use gicarkit::fock::fock_basis;
use gicarkit::{CycScalar, ExactMatrix};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn all_specs(k_max: usize) -> Vec<IrrModuleSpec> {
    let mut v = IrrModuleSpec::all(DiagramKind::Rect, k_max);
    v.extend(IrrModuleSpec::all(DiagramKind::Ann, k_max));
    v
}

#[test]
fn orthonormal_bases_of_binomial_size() {
    for spec in all_specs(3) {
        let v = irr_matrices(&spec, 6).unwrap();
        for m in 0..=6 {
            assert_eq!(v.dims[m], binom(m, spec.k), "{spec:?} m={m}");
            assert!(v.gram[m].is_identity(), "{spec:?} m={m}");
        }
    }
}

#[test]
fn generator_matrices_satisfy_every_relation() {
    for spec in all_specs(3) {
        let v = irr_matrices(&spec, 6).unwrap();
        assert_eq!(v.check().unwrap(), Vec::<String>::new(), "{spec:?}");
    }
}

#[test]
fn tampered_module_is_rejected() {
    let mut v = irr_matrices(&IrrModuleSpec::rect(1), 3).unwrap();
    v.create[1][0] = v.create[1][1].clone();
    assert!(!v.check().unwrap().is_empty());
    assert!(decompose(&v).is_err());
}

#[test]
fn irreducible_modules_have_scalar_commutant() {
    for spec in all_specs(3) {
        let m_max = 5;
        let v = irr_matrices(&spec, m_max).unwrap();
        let ends = intertwiners(&v, &v).unwrap();
        assert_eq!(ends.len(), 1, "{spec:?}");
        for other in all_specs(3) {
            if other != spec && other.kind == spec.kind {
                let w = irr_matrices(&other, m_max).unwrap();
                assert!(intertwiners(&v, &w).unwrap().is_empty(), "{spec:?} vs {other:?}");
            }
        }
    }
}

/// Permutation times a diagonal of small integers, plus an upper triangular perturbation.
fn random_invertible(rng: &mut StdRng, n: usize) -> ExactMatrix {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut t = ExactMatrix::zeros(n, n);
    for (c, &r) in perm.iter().enumerate() {
        t.set(r, c, CycScalar::from_int(*[-2i64, -1, 1, 2, 3].choose(rng).unwrap()));
    }
    let mut u = ExactMatrix::identity(n);
    for _ in 0..n / 2 {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a < b {
            u.set(a, b, CycScalar::from_int(rng.gen_range(-1..=1)));
        }
    }
    u.try_mul(&t).unwrap()
}

fn scramble(rng: &mut StdRng, v: &SequenceModule) -> SequenceModule {
    let t: Vec<ExactMatrix> = v.dims.iter().map(|&d| random_invertible(rng, d)).collect();
    v.change_basis(&t).unwrap()
}

#[test]
fn uniqueness_by_extending_the_lowest_weight_map() {
    let mut rng = StdRng::seed_from_u64(7);
    for spec in all_specs(3) {
        let v = irr_matrices(&spec, 5).unwrap();
        let t: Vec<ExactMatrix> = v.dims.iter().map(|&d| random_invertible(&mut rng, d)).collect();
        let w = v.change_basis(&t).unwrap();
        // the image of ξ in the new coordinates
        let eta = t[spec.k].inverse().unwrap().column(0);
        let x = extend_morphism(&spec, &w, &eta).unwrap();
        for m in 0..=5 {
            if v.dims[m] == 0 {
                continue;
            }
            assert_eq!(x[m], t[m].inverse().unwrap(), "{spec:?} m={m}");
            let iso = x[m].conj_transpose().try_mul(&w.gram[m]).unwrap().try_mul(&x[m]).unwrap();
            assert!(iso.is_identity());
        }
        for (g, a) in v.generators() {
            let b = w.generator_matrix(&g).unwrap();
            let lhs = x[g.target()].try_mul(a).unwrap();
            let rhs = b.try_mul(&x[g.source]).unwrap();
            assert_eq!(lhs, rhs, "{spec:?} {g:?}");
        }
    }
}

#[test]
fn lowest_weight_of_an_irreducible_is_one_dimensional() {
    for spec in all_specs(3) {
        let v = irr_matrices(&spec, 4).unwrap();
        assert_eq!(lowest_weight_space(&v, spec.k).unwrap().len(), 1);
        for k in spec.k + 1..=4 {
            assert!(lowest_weight_space(&v, k).unwrap().is_empty());
        }
    }
}

#[test]
fn irreducibles_decompose_to_themselves() {
    for spec in all_specs(3) {
        let d = decompose(&irr_matrices(&spec, 4).unwrap()).unwrap();
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.components[0].spec, spec);
        assert_eq!(d.components[0].multiplicity, 1);
    }
}

#[test]
fn decompose_inverts_random_direct_sums() {
    let mut rng = StdRng::seed_from_u64(2024);
    for trial in 0..20 {
        let kind = if trial % 2 == 0 { DiagramKind::Rect } else { DiagramKind::Ann };
        let m_max = rng.gen_range(3..=5);
        let mut pool = IrrModuleSpec::all(kind, 3);
        pool.shuffle(&mut rng);
        let chosen = rng.gen_range(1..=3);
        let mut expected = BTreeMap::new();
        let mut parts = Vec::new();
        for spec in pool.into_iter().take(chosen) {
            let mult = rng.gen_range(1..=3);
            expected.insert(spec, mult);
            let v = irr_matrices(&spec, m_max).unwrap();
            parts.extend(std::iter::repeat_n(v, mult));
        }
        parts.shuffle(&mut rng);
        let sum = SequenceModule::direct_sum(&parts).unwrap();
        let module = scramble(&mut rng, &sum);
        let d = decompose(&module).unwrap();
        let got: BTreeMap<IrrModuleSpec, usize> = d.components.iter().map(|c| (c.spec, c.multiplicity)).collect();
        assert_eq!(got, expected, "trial {trial}");
        for m in 0..=m_max {
            let total: usize = got.iter().map(|(s, n)| n * binom(m, s.k)).sum();
            assert_eq!(total, module.dims[m]);
        }
    }
}

#[test]
fn radical_is_quotiented_out() {
    let v = irr_matrices(&IrrModuleSpec::ann(2, 1), 4).unwrap();
    let mut null = irr_matrices(&IrrModuleSpec::ann(1, 0), 4).unwrap();
    for g in &mut null.gram {
        *g = ExactMatrix::zeros(g.rows(), g.cols());
    }
    let sum = SequenceModule::direct_sum(&[null.clone(), v]).unwrap();
    let d = decompose(&sum).unwrap();
    assert_eq!(d.components.len(), 1);
    assert_eq!(d.components[0].spec, IrrModuleSpec::ann(2, 1));
    assert_eq!(d.radical_dims, null.dims);
}

#[test]
fn hom_modules_match_fock_blocks() {
    for b in 0..=3 {
        let fock_blocks: Vec<usize> = (0..=b).map(|k| fock_basis(b).iter().filter(|s| s.len() == k).count()).collect();
        let rect = hom_module(DiagramKind::Rect, b, 4).unwrap();
        let d = decompose(&rect).unwrap();
        for k in 0..=b {
            assert_eq!(d.multiplicity(&IrrModuleSpec::rect(k)), fock_blocks[k], "b={b} k={k}");
        }
        let ann = hom_module(DiagramKind::Ann, b, 4).unwrap();
        let d = decompose(&ann).unwrap();
        for k in 0..=b {
            for r in 0..k.max(1) {
                assert_eq!(d.multiplicity(&IrrModuleSpec::ann(k, r)), fock_blocks[k], "b={b} k={k} r={r}");
            }
        }
    }
}

#[test]
fn six_element_level_of_weight_two() {
    let v = irr_matrices(&IrrModuleSpec::ann(2, 1), 4).unwrap();
    assert_eq!(v.dims[4], 6);
    let json = serde_json::to_string(&v).unwrap();
    let back: SequenceModule = serde_json::from_str(&json).unwrap();
    assert_eq!(back, v);
}
