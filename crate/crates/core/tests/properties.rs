use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use splitalg::algebra::{AlgebraSpec, BilinearOp, LinearMapSpec, RepresentationSpec, Signature};
use splitalg::constructions::{hemisemidirect, induced_quadri, semidirect, sum_collapse_quadri};
use splitalg::document::Document;
use splitalg::identity::{catalog, check, residual, CheckOptions};
use splitalg::linalg::{ratio, span, Matrix, Rational, Vector};
use splitalg::operators::{check_dend_averaging, check_relative_averaging, check_operator, search_operators, OperatorKind, Subject};
use splitalg::quotients::{ideal_generated, splitting_ideal};
use splitalg::samples::polynomial_dendriform;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

fn vector(len: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(small_rational(), len).prop_map(Vector::from)
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(small_rational(), rows * cols).prop_map(move |d| Matrix::new(rows, cols, d).unwrap())
}

fn bilinear(l: usize, r: usize, o: usize) -> impl Strategy<Value = BilinearOp> {
    prop::collection::vec(vector(o), l * r).prop_map(move |c| BilinearOp::new(l, r, o, c).unwrap())
}

/// Low-rank vectors so that spans are often proper.
fn vectors_in(dim: usize) -> impl Strategy<Value = Vec<Vector>> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, dim).prop_map(|v| Vector::from_ints(&v)), 0..4)
}

fn rational_vec(rng: &mut ChaCha8Rng, n: usize) -> Vector {
    (0..n).map(|_| ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5))).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn evaluate_is_bilinear(
        (l, r, o) in (1usize..=4, 1usize..=4, 1usize..=4),
        seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let op = BilinearOp::from_fn(l, r, o, |_, _| rational_vec(&mut rng, o));
        let (x, x2, y, y2) = (rational_vec(&mut rng, l), rational_vec(&mut rng, l), rational_vec(&mut rng, r), rational_vec(&mut rng, r));
        let a = ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3));
        let b = ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3));
        let mut ax = x.scaled(&a);
        ax.add_scaled(&b, &x2);
        let mut expected = op.evaluate(&x, &y).unwrap().scaled(&a);
        expected.add_scaled(&b, &op.evaluate(&x2, &y).unwrap());
        prop_assert_eq!(op.evaluate(&ax, &y).unwrap(), expected);
        let mut ay = y.scaled(&a);
        ay.add_scaled(&b, &y2);
        let mut expected = op.evaluate(&x, &y).unwrap().scaled(&a);
        expected.add_scaled(&b, &op.evaluate(&x, &y2).unwrap());
        prop_assert_eq!(op.evaluate(&x, &ay).unwrap(), expected);
    }

    #[test]
    fn rref_is_idempotent(m in (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| matrix(r, c))) {
        let (once, pivots) = m.rref();
        let (twice, pivots2) = once.rref();
        prop_assert_eq!(&once, &twice);
        prop_assert_eq!(pivots, pivots2);
    }

    #[test]
    fn contains_iff_rank_unchanged(
        (vs, v) in (1usize..=5).prop_flat_map(|d| (vectors_in(d), prop::collection::vec(-2i64..=2, d).prop_map(|v| Vector::from_ints(&v))))
    ) {
        let dim = v.len();
        let s = span(dim, &vs).unwrap();
        let mut with = vs.clone();
        with.push(v.clone());
        let extended = span(dim, &with).unwrap();
        prop_assert_eq!(s.contains(&v).unwrap(), extended.rank() == s.rank());
    }

    #[test]
    fn projection_detects_cosets(
        (vs, v, w, k) in (1usize..=6).prop_flat_map(|d| (
            vectors_in(d),
            vector(d),
            vector(d),
            prop::collection::vec(small_rational(), 4),
        ))
    ) {
        let dim = v.len();
        let s = span(dim, &vs).unwrap();
        let (_, proj) = s.complement_coordinates();
        prop_assert_eq!(proj.apply(&v).unwrap() == proj.apply(&w).unwrap(), s.contains(&(&v - &w)).unwrap());
        // shifting by a span element never changes the representative
        let mut shifted = v.clone();
        for (b, c) in s.basis().iter().zip(&k) {
            shifted.add_scaled(c, b);
        }
        prop_assert_eq!(proj.apply(&shifted).unwrap(), proj.apply(&v).unwrap());
    }

    #[test]
    fn document_round_trip(
        n in 0usize..=3,
        ops in (0usize..=3).prop_flat_map(|n| (Just(n), bilinear(n, n, n), bilinear(n, n, n))),
        m in matrix(2, 3),
    ) {
        let _ = n;
        let (dim, prec, succ) = ops;
        let a = AlgebraSpec::from_ops(dim, Signature::Dendriform, [("prec", prec), ("succ", succ)]).unwrap();
        let mut doc = Document::default();
        doc.insert_algebra("D", a.clone()).unwrap();
        doc.insert_representation("adj", "D", RepresentationSpec::adjoint(&a).unwrap()).unwrap();
        doc.insert_map("M", LinearMapSpec::new(m));
        let text = doc.to_canonical_string();
        let parsed = Document::parse(&text).unwrap();
        prop_assert_eq!(&parsed, &doc);
        prop_assert_eq!(parsed.to_canonical_string(), text);
    }

    /// Passing on basis tuples implies passing on random rational inputs.
    #[test]
    fn basis_checks_are_complete(seed in any::<u64>()) {
        let d = polynomial_dendriform().unwrap();
        let q = induced_quadri(&RepresentationSpec::adjoint(&d).unwrap(), &LinearMapSpec::identity(4)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (object, name) in [(&d, "dendriform"), (&q, "quadri")] {
            prop_assert!(check(object, name, CheckOptions::default()).unwrap().passed());
            for schema in catalog(name).unwrap() {
                let inputs = [rational_vec(&mut rng, 4), rational_vec(&mut rng, 4), rational_vec(&mut rng, 4)];
                prop_assert!(residual(object, &schema, &inputs).unwrap().is_zero());
            }
        }
    }

    /// A failing random algebra fails somewhere on basis tuples whenever it
    /// fails on random inputs.
    #[test]
    fn random_algebra_verdicts_agree(
        prec in bilinear(2, 2, 2),
        succ in bilinear(2, 2, 2),
        seed in any::<u64>(),
    ) {
        let a = AlgebraSpec::from_ops(2, Signature::Dendriform, [("prec", prec), ("succ", succ)]).unwrap();
        let basis_pass = check(&a, "dendriform", CheckOptions::default()).unwrap().passed();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let random_pass = (0..20).all(|_| {
            catalog("dendriform").unwrap().iter().all(|s| {
                let inputs = [rational_vec(&mut rng, 2), rational_vec(&mut rng, 2), rational_vec(&mut rng, 2)];
                residual(&a, s, &inputs).unwrap().is_zero()
            })
        });
        if basis_pass {
            prop_assert!(random_pass);
        }
        if !random_pass {
            prop_assert!(!basis_pass);
        }
    }

    #[test]
    fn relative_on_adjoint_matches_dend_averaging(t in matrix(2, 2), prec in bilinear(2, 2, 2)) {
        // prec with zero succ: a family that includes many dendriform algebras
        let a = AlgebraSpec::from_ops(2, Signature::Dendriform, [("prec", prec), ("succ", BilinearOp::zero(2, 2, 2))]).unwrap();
        let t = LinearMapSpec::new(t);
        let rep = RepresentationSpec::adjoint(&a).unwrap();
        prop_assert_eq!(
            check_relative_averaging(&rep, &t).unwrap().passed(),
            check_dend_averaging(&a, &t).unwrap().passed()
        );
    }
}

#[test]
fn ideal_is_independent_of_generator_order() {
    let d = polynomial_dendriform().unwrap();
    let t = LinearMapSpec::scalar(4, ratio(2, 1));
    let q = induced_quadri(&RepresentationSpec::adjoint(&d).unwrap(), &t).unwrap();
    let reference = splitting_ideal(&q).unwrap();
    // independent fixed point: add one product at a time in random order
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let n = q.dimension();
    let mut generators = Vec::new();
    for (a, b) in [("prec_vdash", "prec_dashv"), ("succ_vdash", "succ_dashv")] {
        for i in 0..n {
            for j in 0..n {
                generators.push(q.op(a).unwrap().product(i, j) - q.op(b).unwrap().product(i, j));
            }
        }
    }
    let mut basis = span(n, &generators).unwrap();
    loop {
        let mut candidates = Vec::new();
        for b in basis.basis() {
            for x in 0..n {
                for op in q.operations().values() {
                    candidates.push(op.evaluate(b, &Vector::basis(n, x)).unwrap());
                    candidates.push(op.evaluate(&Vector::basis(n, x), b).unwrap());
                }
            }
        }
        let before = basis.rank();
        while !candidates.is_empty() {
            let v = candidates.swap_remove(rng.gen_range(0..candidates.len()));
            if !basis.contains(&v).unwrap() {
                basis = basis.extend(&[v]).unwrap();
            }
        }
        if basis.rank() == before {
            break;
        }
    }
    assert_eq!(reference.subspace(), &basis);
    let again = ideal_generated(&q, &generators.into_iter().rev().collect::<Vec<_>>()).unwrap();
    assert_eq!(again.subspace(), reference.subspace());
    reference.audit().unwrap();
}

#[test]
fn base_block_ignores_module_inputs() {
    let d = polynomial_dendriform().unwrap();
    let rep = RepresentationSpec::adjoint(&d).unwrap();
    let n = 4;
    for algebra in [semidirect(&rep).unwrap(), hemisemidirect(&rep).unwrap()] {
        for op in algebra.operations().values() {
            for i in 0..2 * n {
                for j in 0..2 * n {
                    let base_part = op.product(i, j).segment(0, n);
                    if i >= n || j >= n {
                        assert!(base_part.is_zero(), "module input leaked into the base block");
                    }
                }
            }
        }
    }
}

/// `T(u ⊢ v) = Tu • Tv` in the collapsed base, for the induced quadri and
/// its sum collapse.
#[test]
fn induced_collapse_is_coherent() {
    let d = polynomial_dendriform().unwrap();
    let rep = RepresentationSpec::adjoint(&d).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let base_sum = d.op("prec").unwrap().sum(d.op("succ").unwrap()).unwrap();
    let mut tested = 0;
    while tested < 20 {
        let mut m = Matrix::zeros(4, 4);
        for r in 2..4 {
            for c in 0..4 {
                m.set(r, c, ratio(rng.gen_range(-2..=2), 1));
            }
        }
        let t = LinearMapSpec::new(m);
        let Ok(q) = induced_quadri(&rep, &t) else { continue };
        tested += 1;
        let di = sum_collapse_quadri(&q).unwrap();
        for name in ["dashv", "vdash"] {
            let op = di.op(name).unwrap();
            for i in 0..4 {
                for j in 0..4 {
                    let lhs = t.apply(op.product(i, j)).unwrap();
                    let rhs = base_sum.evaluate(&t.matrix().column(i), &t.matrix().column(j)).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn search_is_exactly_the_filter() {
    let d = splitalg::samples::one_dim_dendriform(1, 0);
    let z = AlgebraSpec::zero(2, Signature::Dendriform);
    let grid: Vec<Rational> = [-1, 0, 1].into_iter().map(|k| ratio(k, 1)).collect();
    let found = search_operators(Subject::Algebra(&d), OperatorKind::DendAveraging, &grid, 19_683).unwrap();
    for k in &grid {
        assert!(found.iter().any(|m| m.matrix().get(0, 0) == k));
    }
    // 2×2 maps on a dendriform algebra with a nonzero product
    let prec = BilinearOp::from_fn(2, 2, 2, |i, j| if i == 0 && j == 0 { Vector::basis(2, 1) } else { Vector::zeros(2) });
    let a = AlgebraSpec::from_ops(2, Signature::Dendriform, [("prec", prec), ("succ", BilinearOp::zero(2, 2, 2))]).unwrap();
    for subject in [&a, &z] {
        let found = search_operators(Subject::Algebra(subject), OperatorKind::DendAveraging, &grid, 19_683).unwrap();
        for m in &found {
            assert!(check_operator(Subject::Algebra(subject), OperatorKind::DendAveraging, m).unwrap().passed());
        }
        // audit 100 random candidates not returned
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut audited = 0;
        while audited < 100 && found.len() < 81 {
            let data: Vec<Rational> = (0..4).map(|_| grid[rng.gen_range(0..3)].clone()).collect();
            let m = LinearMapSpec::new(Matrix::new(2, 2, data).unwrap());
            if found.contains(&m) {
                continue;
            }
            audited += 1;
            assert!(!check_operator(Subject::Algebra(subject), OperatorKind::DendAveraging, &m).unwrap().passed());
        }
        let mut sorted = found.clone();
        sorted.sort_by(|x, y| x.matrix().row_vectors().iter().map(|v| v.entries().to_vec()).cmp(y.matrix().row_vectors().iter().map(|v| v.entries().to_vec())));
        assert_eq!(sorted, found, "search output is not in lexicographic order");
    }
    let all = search_operators(Subject::Algebra(&z), OperatorKind::DendAveraging, &grid, 19_683).unwrap();
    assert_eq!(all.len(), 81);
}
