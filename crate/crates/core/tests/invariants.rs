use g2color::algebra::{all_a, build_basis, structure_constants};
use g2color::fano::FanoPlane;
use g2color::fixtures::FixtureEntry;
use g2color::gmatrix::GradedMatrix;
use g2color::grading::{general_linear_group, invariants, GradeLabel, SignFactor};
use g2color::search::{
    canonicalize, search_colorings, search_with, verify_solution, SearchOptions, SignAssignment,
};
use g2color::{Execution, Scalar};
use proptest::prelude::*;

fn sign_factor3() -> impl Strategy<Value = SignFactor> {
    proptest::collection::vec(0u8..2, 6)
        .prop_map(|bits| SignFactor::from_upper_triangle(3, &bits).unwrap())
}

fn label3() -> impl Strategy<Value = GradeLabel> {
    (0u8..8).prop_map(|b| GradeLabel::new(b, 3).unwrap())
}

fn alternating3() -> Vec<SignFactor> {
    g2color::grading::enumerate_sign_factors(3)
        .into_iter()
        .filter(|s| s.is_lie_type())
        .collect()
}

fn small_scalar() -> impl Strategy<Value = Scalar> {
    (-3i64..4, -3i64..4, -2i64..3, -2i64..3).prop_map(|(a, b, c, d)| Scalar::from_ints(a, b, c, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sign_factor_is_symmetric_and_biadditive(sf in sign_factor3(), a in label3(), b in label3(), c in label3()) {
        let e = |x, y| sf.eval(x, y).unwrap();
        prop_assert_eq!(e(a, b), e(b, a));
        prop_assert_eq!(e(a.add(b).unwrap(), c), e(a, c) ^ e(b, c));
        prop_assert_eq!(sf.commutation_sign(a, b).unwrap(), if e(a, b) == 0 { 1 } else { -1 });
    }

    #[test]
    fn congruence_preserves_invariants(sf in sign_factor3(), g in 0usize..168) {
        let gl = general_linear_group(3);
        prop_assert_eq!(gl.len(), 168);
        let h = sf.congruent(&gl[g]);
        prop_assert_eq!(invariants(&h), invariants(&sf));
    }

    #[test]
    fn spec_round_trip(sf in sign_factor3()) {
        prop_assert_eq!(SignFactor::parse(&sf.spec(), 3).unwrap(), sf);
        prop_assert_eq!(SignFactor::from_upper_triangle(3, &sf.upper_triangle()).unwrap(), sf);
    }

    #[test]
    fn color_bracket_is_graded_antisymmetric(sf in sign_factor3(), i in 0usize..21, j in 0usize..21) {
        let fam = all_a();
        let (x, y) = (&fam[i].matrix, &fam[j].matrix);
        let xy = x.color_bracket(y, &sf).unwrap();
        let yx = y.color_bracket(x, &sf).unwrap();
        let s = sf.commutation_sign(fam[i].point, fam[j].point).unwrap();
        let expect = yx.mat_scale(&Scalar::from_int(-(s as i64)));
        prop_assert_eq!(xy.entries(), expect.entries());
    }

    #[test]
    fn bracket_adds_degrees(i in 0usize..21, j in 0usize..21) {
        let fam = all_a();
        let c = fam[i].matrix.commutator(&fam[j].matrix).unwrap();
        prop_assume!(!c.is_zero());
        prop_assert_eq!(c.degree().unwrap(), fam[i].point.add(fam[j].point).unwrap());
    }

    #[test]
    fn matrix_product_is_bilinear(i in 0usize..21, j in 0usize..21, k in 0usize..21, s in small_scalar()) {
        let fam = all_a();
        let (x, y, z) = (&fam[i].matrix, &fam[j].matrix, &fam[k].matrix);
        let lhs = x.mat_add(&y.mat_scale(&s)).unwrap().mat_mul(z).unwrap();
        let rhs = x.mat_mul(z).unwrap().mat_add(&y.mat_mul(z).unwrap().mat_scale(&s)).unwrap();
        prop_assert_eq!(lhs.entries(), rhs.entries());
    }

    #[test]
    fn fixture_entries_round_trip(
        anti in any::<bool>(),
        l in 1usize..15,
        r in 1usize..15,
        terms in proptest::collection::vec((1usize..15, -4i64..5), 0..4),
    ) {
        let mut seen = std::collections::BTreeSet::new();
        let terms: Vec<(usize, i64)> = terms.into_iter().filter(|(k, c)| *c != 0 && seen.insert(*k)).collect();
        let rhs = if terms.is_empty() {
            "0".to_string()
        } else {
            terms.iter().enumerate().map(|(n, (k, c))| {
                let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
                let sign = match (n, *c < 0) {
                    (0, true) => "-",
                    (0, false) => "",
                    (_, true) => " - ",
                    (_, false) => " + ",
                };
                format!("{sign}{mag}e{k}")
            }).collect()
        };
        let (o, c) = if anti { ('{', '}') } else { ('[', ']') };
        let text = format!("{o}e{l},e{r}{c} = {rhs}");
        let e: FixtureEntry = text.parse().unwrap();
        prop_assert_eq!(e.terms.len(), terms.len());
        prop_assert_eq!(e.to_string(), text);
    }

    #[test]
    fn gauge_flips_stay_solutions(which in 0usize..8, flips in proptest::collection::vec(any::<bool>(), 14)) {
        let g2 = build_basis("g2").unwrap();
        let delta = alternating3()[which];
        let sols = search_colorings(&delta, &g2, true).unwrap();
        prop_assert_eq!(sols.len(), 64);
        let sol = &sols[sols.len() / 2];
        let mut moved = sol.clone();
        for (row, &f) in moved.assignment.flips.iter_mut().zip(&flips) {
            if f {
                row.iter_mut().for_each(|s| *s = -*s);
            }
        }
        prop_assert_eq!(canonicalize(&moved).assignment, sol.assignment.clone());
        let colored = moved.assignment.apply(&g2, "moved").unwrap();
        let back = SignAssignment::from_bases(&g2, &colored).unwrap();
        prop_assert_eq!(&back, &moved.assignment);
    }
}

#[test]
fn every_alternating_factor_has_64_verified_colorings() {
    let g2 = build_basis("g2").unwrap();
    for delta in alternating3() {
        let sols = search_colorings(&delta, &g2, true).unwrap();
        assert_eq!(sols.len(), 64, "{delta}");
        for s in &sols {
            assert!(s.assignment.is_canonical());
            assert_eq!(canonicalize(s), *s);
        }
        for s in sols.iter().step_by(21) {
            let r = verify_solution(s, &delta).unwrap();
            assert!(r.passed(), "{}", r.summary());
        }
    }
}

#[test]
fn dropping_the_gauge_multiplies_by_two_per_free_element() {
    let g2 = build_basis("g2").unwrap();
    let free = vec![0, 3, 7, 12];
    let fixed = SearchOptions {
        free: Some(free.clone()),
        ..SearchOptions::default()
    };
    let loose = SearchOptions {
        gauge_fix: false,
        ..fixed.clone()
    };
    let delta = SignFactor::zero(3);
    let (a, _) = search_with(&delta, &g2, &fixed).unwrap();
    let (b, _) = search_with(&delta, &g2, &loose).unwrap();
    assert!(!a.is_empty());
    assert_eq!(b.len(), a.len() << free.len());
}

#[test]
fn sequential_and_parallel_agree() {
    let g2 = build_basis("g2").unwrap();
    let run = |execution| {
        let opts = SearchOptions {
            execution,
            ..SearchOptions::default()
        };
        search_with(&SignFactor::case3(), &g2, &opts).unwrap()
    };
    let (s, st) = run(Execution::Sequential);
    let (p, pt) = run(Execution::Parallel);
    assert_eq!(s, p);
    assert_eq!(st, pt);
}

#[test]
fn max_solutions_truncates_in_order() {
    let g2 = build_basis("g2").unwrap();
    let all = search_colorings(&SignFactor::zero(3), &g2, true).unwrap();
    let opts = SearchOptions {
        max_solutions: Some(5),
        execution: Execution::Sequential,
        ..SearchOptions::default()
    };
    let (some, _) = search_with(&SignFactor::zero(3), &g2, &opts).unwrap();
    assert_eq!(some[..], all[..5]);
}

#[test]
fn octonion_units_anticommute_and_cycle() {
    let plane = FanoPlane::standard();
    let pts = GradeLabel::nonzero(3).unwrap();
    for &a in &pts {
        for &b in &pts {
            if a == b {
                continue;
            }
            let (s, c) = plane.octonion_mul(a, b).unwrap();
            assert_eq!(c, a.add(b).unwrap());
            assert_eq!(plane.octonion_mul(b, a).unwrap(), (-s, c));
            assert_eq!(plane.octonion_mul(b, c).unwrap(), (s, a));
        }
    }
}

#[test]
fn colored_tables_differ_from_g2_only_by_signs() {
    let g2 = structure_constants(&build_basis("g2").unwrap(), &SignFactor::zero(3)).unwrap();
    for (name, delta) in [
        ("color-case1", SignFactor::case1()),
        ("color-case2", SignFactor::case2()),
        ("color-case3", SignFactor::case3()),
    ] {
        let t = structure_constants(&build_basis(name).unwrap(), &delta).unwrap();
        for (x, y) in g2.entries.iter().zip(&t.entries) {
            assert_eq!((x.left, x.right), (y.left, y.right));
            assert_eq!(x.terms.len(), y.terms.len(), "{name}");
            for ((k, c), (l, d)) in x.terms.iter().zip(&y.terms) {
                assert_eq!(k, l);
                assert!(c == d || *c == -d, "{name}");
            }
        }
    }
}

#[test]
fn identity_matrix_is_degree_zero() {
    let id = GradedMatrix::identity(8);
    assert!(id.degree().unwrap().is_zero());
}
