use gicarkit::diagram::{
    adjoint_lin, all_subsets, from_dotted_basis, then_lin, DecoratedDiagram, Diagram, RectDiagram,
};
use gicarkit::fock::{
    big_theta, car_annihilate, car_create, d_action, d_matrix, fock_basis, gicar_element, gicar_monomials, op_matrix,
    theta, theta_generator, theta_monomial, FockOp, FockVector, GicarGenerator, Monomial,
};
use gicarkit::scalar::{commutant, span_rank};
use gicarkit::{CycScalar, ExactMatrix, LinComb};
use proptest::prelude::*;

type Rp = LinComb<RectDiagram>;

fn int(x: i64) -> CycScalar {
    CycScalar::from_int(x)
}

/// Sign of the permutation sorting `v`, by counting inversions.
fn sort_sign(v: &[usize]) -> i64 {
    let mut inv = 0;
    for a in 0..v.len() {
        for b in a + 1..v.len() {
            if v[a] > v[b] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// ξ_{v_1}∧⋯∧ξ_{v_k} in the sorted basis, or zero on repeats.
fn wedge(n: usize, v: &[usize]) -> FockVector {
    let mut sorted = v.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return FockVector::zero(n);
    }
    let mut out = FockVector::zero(n);
    out.coeffs.add_term(int(sort_sign(v)), sorted);
    out
}

#[test]
fn creation_matches_wedge_prepend() {
    for n in 1..=4 {
        for s in all_subsets(n) {
            for i in 1..=n {
                let mut v = vec![i];
                v.extend(&s);
                let got = car_create(i, &FockVector::basis(n, s.clone()).unwrap()).unwrap();
                assert_eq!(got, wedge(n, &v), "a{i} on {s:?}");
            }
        }
    }
    let two = car_create(2, &FockVector::basis(2, vec![1]).unwrap()).unwrap();
    assert_eq!(two.coeffs.coeff(&vec![1, 2]), int(-1));
}

#[test]
fn annihilation_matches_alternating_sum() {
    for n in 1..=4 {
        for s in all_subsets(n) {
            for i in 1..=n {
                let mut expected = FockVector::zero(n);
                for (p, &x) in s.iter().enumerate() {
                    if x == i {
                        let rest: Vec<usize> = s.iter().copied().filter(|&y| y != i).collect();
                        expected.coeffs.add_term(int(if p % 2 == 0 { 1 } else { -1 }), rest);
                    }
                }
                let got = car_annihilate(i, &FockVector::basis(n, s.clone()).unwrap()).unwrap();
                assert_eq!(got, expected);
            }
        }
    }
    let v = FockVector::basis(2, vec![1, 2]).unwrap();
    assert_eq!(car_annihilate(2, &v).unwrap().coeffs.coeff(&vec![1]), int(-1));
}

#[test]
fn car_relations() {
    for n in 1..=4 {
        let dim = 1 << n;
        for i in 1..=n {
            for j in 1..=n {
                let ai = op_matrix(FockOp::Create(i), n).unwrap();
                let aj = op_matrix(FockOp::Create(j), n).unwrap();
                let ai_s = op_matrix(FockOp::Annihilate(i), n).unwrap();
                let aj_s = op_matrix(FockOp::Annihilate(j), n).unwrap();
                assert!((&ai * &aj).try_add(&(&aj * &ai)).unwrap().is_zero());
                assert!((&ai_s * &aj_s).try_add(&(&aj_s * &ai_s)).unwrap().is_zero());
                let anti = (&ai * &aj_s).try_add(&(&aj_s * &ai)).unwrap();
                let expected = if i == j { ExactMatrix::identity(dim) } else { ExactMatrix::zeros(dim, dim) };
                assert_eq!(anti, expected);
                assert_eq!(ai.conj_transpose(), ai_s);
            }
        }
    }
}

#[test]
fn number_operator_kills_occupied_mode() {
    let m = gicar_element(&"a1* a1".parse().unwrap(), 1).unwrap();
    assert_eq!(m, ExactMatrix::from_ints(&[&[1, 0], &[0, 0]]));
}

fn vector_strategy(n: usize) -> impl Strategy<Value = FockVector> {
    prop::collection::vec(-3i64..=3, 1 << n).prop_map(move |c| {
        FockVector::from_coords(n, &c.into_iter().map(CycScalar::from_int).collect::<Vec<_>>())
    })
}

proptest! {
    #[test]
    fn creation_adjoint_to_annihilation((_n, i, u, v) in (1usize..=5).prop_flat_map(|n| (Just(n), 1..=n, vector_strategy(n), vector_strategy(n)))) {
        let lhs = car_create(i, &u).unwrap().inner(&v);
        let rhs = u.inner(&car_annihilate(i, &v).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn big_theta_is_isometric((_n, u, v) in (1usize..=5).prop_flat_map(|n| (Just(n), vector_strategy(n), vector_strategy(n)))) {
        prop_assert_eq!(big_theta(&u).inner(&big_theta(&v)), u.inner(&v));
    }
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn gicar_span_dimension() {
    for n in 1..=4 {
        let vecs: Vec<Vec<CycScalar>> =
            gicar_monomials(n).iter().map(|m| gicar_element(m, n).unwrap().flatten()).collect();
        let expected: usize = (0..=n).map(|k| binom(n, k).pow(2)).sum();
        assert_eq!(span_rank(&vecs), expected, "n={n}");
    }
}

/// θ(X) read off the Fock matrix: ⟨ξ_S, Xξ_T⟩ times the fully dotted diagram with caps T and cups S.
fn theta_oracle(x: &ExactMatrix, n: usize) -> Rp {
    let basis = fock_basis(n);
    let mut dotted = LinComb::zero();
    for (r, s) in basis.iter().enumerate() {
        for (c, t) in basis.iter().enumerate() {
            let v = x.get(r, c);
            if v.is_zero() {
                continue;
            }
            let lower: Vec<usize> = (1..=n).filter(|p| !t.contains(p)).collect();
            let upper: Vec<usize> = (1..=n).filter(|p| !s.contains(p)).collect();
            let base = RectDiagram::from_pairs(n, n, lower.into_iter().zip(upper).collect()).unwrap();
            dotted.add_term(v.clone(), DecoratedDiagram::all_dotted(base));
        }
    }
    from_dotted_basis(&dotted)
}

#[test]
fn theta_matches_matrix_oracle() {
    for n in 1..=3 {
        for m in gicar_monomials(n) {
            let x = gicar_element(&m, n).unwrap();
            assert_eq!(theta_monomial(&m, n).unwrap(), theta_oracle(&x, n), "{m} at n={n}");
        }
    }
    for n in 1..=4 {
        for g in GicarGenerator::all(n) {
            let x = gicar_element(&g.monomial(), n).unwrap();
            assert_eq!(theta_generator(g, n).unwrap(), theta_oracle(&x, n), "{g}");
        }
    }
}

#[test]
fn theta_of_unordered_monomials() {
    let words = ["a1* a1 a2 a2*", "a2* a1 a1* a2", "a3* a1 a2", "a1 a3 a2* a1*", "a2 a1* a1 a3*"];
    for w in words {
        let m: Monomial = w.parse().unwrap();
        if !m.is_gauge_invariant() {
            assert!(theta_monomial(&m, 3).is_err());
            continue;
        }
        let x = gicar_element(&m, 3).unwrap();
        assert_eq!(theta_monomial(&m, 3).unwrap(), theta_oracle(&x, 3), "{w}");
    }
}

#[test]
fn d_representation_matches_fock_matrices() {
    for n in 1..=3 {
        for m in gicar_monomials(n) {
            let t = theta_monomial(&m, n).unwrap();
            assert_eq!(d_matrix(&t, n).unwrap(), gicar_element(&m, n).unwrap(), "{m}");
        }
    }
}

#[test]
fn relation_d2_star_homomorphism() {
    let n = 3;
    let monos = gicar_monomials(n);
    for x in monos.iter().step_by(3) {
        let tx = theta_monomial(x, n).unwrap();
        assert_eq!(theta_monomial(&x.adjoint(), n).unwrap(), adjoint_lin(&tx));
        for y in monos.iter().step_by(5) {
            let ty = theta_monomial(y, n).unwrap();
            // θ(xy*) = θ(x)θ(y)*
            let lhs = theta_monomial(&x.times(&y.adjoint()), n).unwrap();
            let rhs = then_lin(&adjoint_lin(&ty), &tx).unwrap();
            assert_eq!(lhs, rhs, "{x} · ({y})*");
        }
    }
}

#[test]
fn relation_d3_on_every_basis_vector() {
    for n in 1..=4 {
        for g in GicarGenerator::all(n) {
            let tg = theta_generator(g, n).unwrap();
            for s in fock_basis(n) {
                let v = FockVector::basis(n, s.clone()).unwrap();
                let lhs = big_theta(&g.monomial().apply(&v).unwrap());
                let rhs = d_action(&tg, &big_theta(&v)).unwrap();
                assert_eq!(lhs, rhs, "{g} on {s:?}");
            }
        }
    }
}

#[test]
fn identity_acts_trivially_on_d() {
    let id = LinComb::basis(RectDiagram::identity(3));
    for s in fock_basis(3) {
        let v = big_theta(&FockVector::basis(3, s).unwrap());
        assert_eq!(d_action(&id, &v).unwrap(), v);
    }
}

/// x·y in RP_n, x after y.
fn mul(x: &Rp, y: &Rp) -> Rp {
    then_lin(y, x).unwrap()
}

fn comm(x: &Rp, y: &Rp) -> Rp {
    mul(x, y).sub(&mul(y, x))
}

#[test]
fn relations_g1_to_g5() {
    for n in 1..=4 {
        let id: Rp = LinComb::basis(RectDiagram::identity(n));
        let f: Vec<Rp> = (1..=n).map(|i| theta_generator(GicarGenerator::F(i), n).unwrap()).collect();
        let u: Vec<Rp> = (1..n).map(|i| theta_generator(GicarGenerator::U(i), n).unwrap()).collect();
        for i in 0..n {
            assert_eq!(adjoint_lin(&f[i]), f[i]);
            assert_eq!(mul(&f[i], &f[i]), f[i]);
            for j in 0..n {
                assert!(comm(&f[i], &f[j]).is_zero());
            }
        }
        for i in 0..n.saturating_sub(1) {
            for j in 0..n {
                if j != i && j != i + 1 {
                    assert!(comm(&u[i], &f[j]).is_zero());
                }
            }
            for j in 0..n - 1 {
                if i.abs_diff(j) >= 2 {
                    assert!(comm(&u[i], &u[j]).is_zero());
                    assert!(comm(&u[i], &adjoint_lin(&u[j])).is_zero());
                }
            }
            let us = adjoint_lin(&u[i]);
            assert_eq!(mul(&us, &u[i]), mul(&f[i + 1], &id.sub(&f[i])));
            assert_eq!(mul(&u[i], &us), mul(&f[i], &id.sub(&f[i + 1])));
        }
    }
}

/// The 2ⁿ products of a_ia_i* (i ∈ occupied) and a_j*a_j (j ∉ occupied).
fn minimal_projection_monomial(n: usize, occupied: &[usize]) -> Monomial {
    let mut m = Monomial::identity();
    for i in 1..=n {
        let factor = if occupied.contains(&i) { Monomial::pair(i, i) } else { GicarGenerator::F(i).monomial() };
        m = m.times(&factor);
    }
    m
}

#[test]
fn theta_injective_on_minimal_projections() {
    for n in 1..=4 {
        let images: Vec<Rp> = all_subsets(n)
            .iter()
            .map(|s| theta_monomial(&minimal_projection_monomial(n, s), n).unwrap())
            .collect();
        for (a, p) in images.iter().enumerate() {
            assert!(!p.is_zero());
            assert_eq!(mul(p, p), *p);
            for q in &images[a + 1..] {
                assert_ne!(p, q);
                assert!(mul(p, q).is_zero());
            }
        }
    }
}

fn block(m: &ExactMatrix, idx: &[usize]) -> ExactMatrix {
    m.select(idx, idx)
}

fn block_indices(n: usize, keep: impl Fn(&Vec<usize>) -> bool) -> Vec<usize> {
    fock_basis(n).iter().enumerate().filter(|(_, s)| keep(s)).map(|(i, _)| i).collect()
}

fn generator_matrices(n: usize, modes: usize) -> Vec<ExactMatrix> {
    GicarGenerator::all(modes).into_iter().map(|g| gicar_element(&g.monomial(), n).unwrap()).collect()
}

#[test]
fn wedge_blocks_are_irreducible() {
    for n in 1..=4 {
        let gens = generator_matrices(n, n);
        for k in 0..=n {
            let idx = block_indices(n, |s| s.len() == k);
            let restricted: Vec<ExactMatrix> = gens.iter().map(|g| block(g, &idx)).collect();
            assert_eq!(commutant(&restricted, idx.len()).unwrap().len(), 1, "n={n} k={k}");
        }
    }
}

#[test]
fn regular_representation_multiplicities() {
    for n in 1..=3 {
        let all: Vec<ExactMatrix> = gicar_monomials(n).iter().map(|m| gicar_element(m, n).unwrap()).collect();
        for k in 0..=n {
            let idx = block_indices(n, |s| s.len() == k);
            let z = ExactMatrix::from_fn(1 << n, 1 << n, |r, c| {
                if r == c && idx.contains(&r) {
                    CycScalar::one()
                } else {
                    CycScalar::zero()
                }
            });
            let rank = span_rank(&all.iter().map(|x| (&z * x).flatten()).collect::<Vec<_>>());
            assert_eq!(rank % idx.len(), 0);
            assert_eq!(rank / idx.len(), binom(n, k), "n={n} k={k}");
        }
    }
}

#[test]
fn branching_to_smaller_tower() {
    for n in 2..=4 {
        let gens = generator_matrices(n, n - 1);
        for k in 1..n {
            let whole = block_indices(n, |s| s.len() == k);
            let without = block_indices(n, |s| s.len() == k && !s.contains(&n));
            let with = block_indices(n, |s| s.len() == k && s.contains(&n));
            assert_eq!((without.len(), with.len()), (binom(n - 1, k), binom(n - 1, k - 1)));
            let outside: Vec<usize> = whole.iter().copied().filter(|i| !without.contains(i)).collect();
            for g in &gens {
                assert!(g.select(&outside, &without).is_zero());
                assert!(g.select(&without, &outside).is_zero());
            }
            for part in [&without, &with] {
                let r: Vec<ExactMatrix> = gens.iter().map(|g| block(g, part)).collect();
                assert_eq!(commutant(&r, part.len()).unwrap().len(), 1);
            }
            let r: Vec<ExactMatrix> = gens.iter().map(|g| block(g, &whole)).collect();
            assert_eq!(commutant(&r, whole.len()).unwrap().len(), 2, "two inequivalent summands");
        }
    }
}

#[test]
fn worked_example_in_words() {
    // a₁a₃* = a₁a₂*a₂a₃* − a₂a₃*a₁a₂*
    let n = 3;
    let lhs = theta_monomial(&"a1 a3*".parse().unwrap(), n).unwrap();
    let t12 = theta_monomial(&Monomial::pair(1, 2), n).unwrap();
    let t23 = theta_monomial(&Monomial::pair(2, 3), n).unwrap();
    assert_eq!(lhs, mul(&t12, &t23).sub(&mul(&t23, &t12)));
    let combo: LinComb<Monomial> =
        [(int(2), "a1* a1".parse().unwrap()), (int(-1), "a2 a2*".parse().unwrap())].into_iter().collect();
    let expected = theta_generator(GicarGenerator::F(1), n)
        .unwrap()
        .scale(&int(2))
        .sub(&LinComb::basis(RectDiagram::broken_at(n, 2).unwrap()));
    assert_eq!(theta(&combo, n).unwrap(), expected);
}
