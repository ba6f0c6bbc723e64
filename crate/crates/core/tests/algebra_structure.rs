use gicarkit::algebra::{
    bratteli, bratteli_dot, minimal_projection, minimal_projection_dotted, refined_projection, right_inclusion,
    rotational_idempotent, wedderburn_check, ProjectionPattern,
};
use gicarkit::diagram::{
    adjoint_lin, dotted_then, enumerate_ann, enumerate_rect, from_dotted_basis, then_lin, to_dotted_basis,
    AnnDiagram, DecoratedDiagram, Diagram, DiagramKind, RectDiagram,
};
use gicarkit::{CycScalar, LinComb};

fn plain_product<D: Diagram>(first: &D, second: &D) -> LinComb<DecoratedDiagram<D>> {
    let x = DecoratedDiagram::all_dotted(first.clone()).expand();
    let y = DecoratedDiagram::all_dotted(second.clone()).expand();
    to_dotted_basis(&then_lin(&x, &y).unwrap())
}

fn check_dotted_rule<D: Diagram>(left: &[D], right: &[D]) {
    for x in left {
        for y in right {
            let expected = plain_product(x, y);
            let got = match dotted_then(x, y).unwrap() {
                Some(d) => LinComb::basis(DecoratedDiagram::all_dotted(d)),
                None => LinComb::zero(),
            };
            assert_eq!(got, expected, "{x} then {y}");
        }
    }
}

#[test]
fn dotted_products_agree_with_plain_composition() {
    check_dotted_rule(&enumerate_rect(3, 3, None), &enumerate_rect(3, 3, None));
    check_dotted_rule(&enumerate_rect(2, 3, None), &enumerate_rect(3, 2, None));
    check_dotted_rule(&enumerate_ann(3, 3, None), &enumerate_ann(3, 3, None));
    check_dotted_rule(&enumerate_ann(2, 4, None), &enumerate_ann(4, 3, None));
}

/// x·y, with y applied first.
fn mul<D: Diagram>(x: &LinComb<D>, y: &LinComb<D>) -> LinComb<D> {
    then_lin(y, x).unwrap()
}

#[test]
fn minimal_projections_orthogonal_and_complete() {
    for n in 1..=4 {
        let ps: Vec<LinComb<RectDiagram>> = ProjectionPattern::all(n).iter().map(minimal_projection).collect();
        let mut sum = LinComb::zero();
        for (i, p) in ps.iter().enumerate() {
            assert_eq!(mul(p, p), *p);
            assert_eq!(adjoint_lin(p), *p);
            for (j, q) in ps.iter().enumerate() {
                if i != j {
                    assert!(mul(p, q).is_zero());
                }
            }
            sum = sum.add(p);
        }
        assert_eq!(sum, LinComb::basis(RectDiagram::identity(n)));
    }
}

#[test]
fn five_strand_projections_complete_in_dotted_basis() {
    let mut sum = LinComb::zero();
    for p in ProjectionPattern::all(5) {
        sum = sum.add(&minimal_projection_dotted(&p));
    }
    assert_eq!(from_dotted_basis(&sum), LinComb::basis(RectDiagram::identity(5)));
}

#[test]
fn rotational_idempotents() {
    for k in 1..=4 {
        let tau = LinComb::basis(AnnDiagram::rotation(k, 1));
        let mut sum = LinComb::zero();
        for r in 0..k {
            let p = rotational_idempotent(k, r).unwrap();
            assert_eq!(mul(&p, &p), p, "k={k} r={r}");
            assert_eq!(adjoint_lin(&p), p);
            let omega = CycScalar::root_of_unity(k as u32, r as i64);
            assert_eq!(mul(&tau, &p), p.scale(&omega));
            sum = sum.add(&p);
        }
        let all_dotted = DecoratedDiagram::all_dotted(AnnDiagram::identity(k)).expand();
        assert_eq!(sum, all_dotted);
    }
    let p = rotational_idempotent(2, 1).unwrap();
    let tau = LinComb::basis(AnnDiagram::rotation(2, 1));
    assert_eq!(mul(&tau, &p), p.scale(&CycScalar::from_int(-1)));
    assert_eq!(rotational_idempotent(1, 0).unwrap(), DecoratedDiagram::all_dotted(AnnDiagram::identity(1)).expand());
}

#[test]
fn annular_refinement_of_rectangular_projections() {
    for n in 2..=4 {
        for pat in ProjectionPattern::all(n) {
            let dotted = pat.dotted_positions();
            let k = dotted.len();
            if k < 2 {
                continue;
            }
            let q: LinComb<AnnDiagram> = minimal_projection(&pat).iter().map(|(d, c)| (c.clone(), d.to_ann())).collect();
            let parts: Vec<LinComb<AnnDiagram>> =
                (0..k).map(|r| from_dotted_basis(&refined_projection(n, &dotted, r).unwrap())).collect();
            let mut sum = LinComb::zero();
            for (i, p) in parts.iter().enumerate() {
                assert!(!p.is_zero());
                assert_eq!(mul(p, p), *p);
                for (j, p2) in parts.iter().enumerate() {
                    if i != j {
                        assert!(mul(p, p2).is_zero());
                    }
                }
                sum = sum.add(p);
            }
            assert_eq!(sum, q, "{pat}");
        }
    }
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn dimension_bookkeeping() {
    for n in 0..=8 {
        let blocks: usize = 1 + (1..=n).map(|k| k * binom(n, k).pow(2)).sum::<usize>();
        assert_eq!(blocks as u128, gicarkit::diagram::count_total(n, n));
    }
    for n in 0..=4 {
        let blocks: usize = 1 + (1..=n).map(|k| k * binom(n, k).pow(2)).sum::<usize>();
        assert_eq!(blocks, enumerate_ann(n, n, None).len());
    }
}

#[test]
fn wedderburn_systems() {
    let r = wedderburn_check(DiagramKind::Rect, 3).unwrap();
    assert_eq!(r.summands.iter().map(|s| s.size).collect::<Vec<_>>(), vec![1, 3, 3, 1]);
    assert_eq!(r.dimension, 20);
    let a2 = wedderburn_check(DiagramKind::Ann, 2).unwrap();
    let sizes: Vec<(usize, Option<usize>, usize)> = a2.summands.iter().map(|s| (s.weight, s.omega, s.size)).collect();
    assert_eq!(sizes, vec![(0, None, 1), (1, Some(0), 2), (2, Some(0), 1), (2, Some(1), 1)]);
    assert_eq!(a2.dimension, 7);
    for n in 0..=4 {
        for kind in [DiagramKind::Rect, DiagramKind::Ann] {
            let rep = wedderburn_check(kind, n).unwrap();
            assert!(rep.ok(), "{kind:?} n={n}: {:?}", rep.failures);
        }
    }
    assert_eq!(wedderburn_check(DiagramKind::Ann, 3).unwrap().enumerated, 31);
}

#[test]
fn right_inclusion_splits_in_two() {
    let p = minimal_projection_dotted(&"db".parse().unwrap());
    let image = from_dotted_basis(&right_inclusion(&p));
    let plain = minimal_projection(&"db".parse().unwrap());
    let expected: LinComb<RectDiagram> =
        plain.iter().map(|(d, c)| (c.clone(), d.tensor(&RectDiagram::identity(1)))).collect();
    assert_eq!(image, expected);
    let sum = minimal_projection(&"dbd".parse().unwrap()).add(&minimal_projection(&"dbb".parse().unwrap()));
    assert_eq!(image, sum);
}

#[test]
fn bratteli_is_pascal() {
    let rows = bratteli(8).unwrap();
    for row in &rows {
        let pascal: Vec<usize> = (0..=row.level).map(|k| binom(row.level, k)).collect();
        assert_eq!(row.multiplicities, pascal);
        if row.level < 8 {
            assert_eq!(row.edges.len(), 2 * (row.level + 1));
            for e in &row.edges {
                assert_eq!(e.multiplicity, 1);
                assert!(e.to == e.from || e.to == e.from + 1);
            }
        }
    }
    assert_eq!(rows[4].multiplicities, vec![1, 4, 6, 4, 1]);
}

#[test]
fn bratteli_dot_output() {
    let dot = bratteli_dot(&bratteli(2).unwrap());
    assert!(dot.contains("n2_1 [label=\"(2,1):2\"]"));
    assert!(dot.contains("n0_0 -> n1_1;"));
    assert_eq!(dot.matches("[label=").count(), 6);
}
