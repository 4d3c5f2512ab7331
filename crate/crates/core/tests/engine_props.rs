mod common;

use common::*;
use hypercert::engine::{
    build_p1, build_p2, fujimoto_determinant, genericity_check, lemma41_forward_check, reduce_block_determinant,
    shared_determinant, step4_factor, verify_witness, xi, BlockRows, Enumeration, FujimotoShape, GenericityOptions,
    Mode, Verdict,
};
use hypercert::geometry::HyperplaneFamily;
use hypercert::lattice::{has_property, ExponentVector, GroupTuple};
use hypercert::laurent::{det_laurent, LaurentPoly, MonomialUnit};
use hypercert::ring::{det_by_minors, Matrix};
use hypercert::scalar::{root_of_unity, ExactScalar};
use itertools::Itertools;
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn options(mode: Mode) -> GenericityOptions {
    GenericityOptions { mode, enumeration: Enumeration::Reduced }
}

/// Either a random family or a disguised harmonic quadruple (always in V).
fn test_family(r: &mut ChaCha8Rng, n: usize) -> HyperplaneFamily {
    if n == 1 && r.gen_bool(0.5) {
        let base = HyperplaneFamily::from_integers(1, &[vec![1, 0], vec![0, 1], vec![1, 1], vec![1, -1]]).unwrap();
        let perm = shuffled(r, 4);
        return base.permuted(&perm).transformed(&random_nonsingular(r, 2)).unwrap();
    }
    random_family(r, n, 4, 3)
}

fn disguise(r: &mut ChaCha8Rng, f: &HyperplaneFamily) -> Vec<HyperplaneFamily> {
    let scaled: Matrix<ExactScalar> = f
        .rows()
        .iter()
        .map(|row| {
            let c = random_rational(r, 7, 5);
            let c = if c.is_zero() { s(3) } else { c };
            row.iter().map(|x| x * &c).collect()
        })
        .collect();
    vec![
        HyperplaneFamily::new(f.n(), scaled).unwrap(),
        f.permuted(&shuffled(r, f.len())),
        f.transformed(&random_nonsingular(r, f.n() + 1)).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn verdict_invariances(seed in any::<u64>(), n in 1usize..=2) {
        let mut r = rng(seed);
        let f = test_family(&mut r, n);
        let base = genericity_check(&f, &options(Mode::Paper)).unwrap();
        if let Some(w) = &base.witness {
            prop_assert!(verify_witness(&f, w).unwrap().is_zero());
        }
        for g in disguise(&mut r, &f) {
            prop_assert_eq!(genericity_check(&g, &options(Mode::Paper)).unwrap().verdict, base.verdict);
        }
    }

    #[test]
    fn symbolic_zeros_are_paper_zeros(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = test_family(&mut r, 1);
        let sym = genericity_check(&f, &options(Mode::Symbolic)).unwrap();
        let paper = genericity_check(&f, &options(Mode::Paper)).unwrap();
        if sym.verdict == Verdict::NonGeneric {
            prop_assert_eq!(paper.verdict, Verdict::NonGeneric);
        }
        if sym.verdict == Verdict::NotGeneralPosition {
            prop_assert_eq!(paper.verdict, Verdict::NotGeneralPosition);
        }
    }

    #[test]
    fn p1_p2_are_multilinear(seed in any::<u64>(), n in 1usize..=3) {
        let mut r = rng(seed);
        let rows = random_int_matrix(&mut r, n + 1, n + 1, 6);
        let i = r.gen_range(0..=n);
        let special = r.gen_range(0..=n);
        let mut powers: Vec<u32> = vec![0; n + 1];
        let perm = shuffled(&mut r, n);
        for (slot, p) in (0..=n).filter(|&j| j != special).zip(perm) {
            powers[slot] = p as u32 + 1;
        }
        let lambda = random_rational(&mut r, 9, 4);
        let other: Vec<ExactScalar> = (0..=n).map(|_| s(r.gen_range(-6..=6))).collect();
        let with_row = |row: Vec<ExactScalar>| { let mut m = rows.clone(); m[i] = row; m };
        let scaled = with_row(rows[i].iter().map(|x| x * &lambda).collect());
        let summed = with_row(rows[i].iter().zip(&other).map(|(x, y)| x + y).collect());
        let alt = with_row(other.clone());
        for f in [
            &(|m: &Matrix<ExactScalar>| build_p1(n, m, special, &powers).unwrap()) as &dyn Fn(&Matrix<ExactScalar>) -> ExactScalar,
            &|m: &Matrix<ExactScalar>| build_p2(n, m, special).unwrap(),
        ] {
            prop_assert_eq!(f(&scaled), &lambda * &f(&rows));
            prop_assert_eq!(f(&summed), &f(&rows) + &f(&alt));
        }
    }
}

/// P1 and P2 with indeterminate entries x_ij (variable i·(n+1)+j), built
/// straight from the entry formulas.
fn symbolic_p(n: usize, first: bool) -> (LaurentPoly, Matrix<LaurentPoly>) {
    let dim = (n + 1) * (n + 1);
    let two_n = s(1 << n);
    let two_n1 = s(1 << (n + 1));
    let sign = s(if n.is_multiple_of(2) { 1 } else { -1 });
    let m: Matrix<LaurentPoly> = (0..=n)
        .map(|i| {
            (0..=n)
                .map(|j| {
                    let factor = match (first, i) {
                        (true, 0) => &s(1) - if j == 0 { &two_n } else { &two_n1 },
                        (true, _) => &xi(n).pow(i as i64).unwrap() - &s(if j == 0 { 1 } else { 2 }),
                        (false, i) if i < n => s(if j == 0 { -1 } else { -3 }),
                        (false, _) => &sign - &s(if j == 0 { 1 } else { 2 }),
                    };
                    LaurentPoly::variable(dim, i * (n + 1) + j).scale(&factor)
                })
                .collect()
        })
        .collect();
    (det_laurent(&m).unwrap(), m)
}

#[test]
fn p1_p2_nonzero_polynomials() {
    let mut r = rng(3);
    for n in 1..=3 {
        for first in [true, false] {
            let (p, _) = symbolic_p(n, first);
            assert!(!p.is_zero(), "n={n}");
            assert_eq!(p.homogeneous_degree(), Some(n as i64 + 1));
            let rows = random_int_matrix(&mut r, n + 1, n + 1, 5);
            let point: Vec<ExactScalar> = rows.iter().flatten().cloned().collect();
            let value = if first {
                build_p1(n, &rows, 0, &(0..=n as u32).collect::<Vec<_>>()).unwrap()
            } else {
                build_p2(n, &rows, n).unwrap()
            };
            assert_eq!(p.evaluate(&point).unwrap(), value);
        }
    }
}

#[test]
fn p1_closed_form_at_n1() {
    // det_laurent of the Fujimoto matrix with indeterminate entries, then η = 2
    let dim = 5; // x0, x1, y0, y1, η
    let v = |i| LaurentPoly::variable(dim, i);
    let eta = v(4);
    let one = LaurentPoly::one(dim);
    let minus_one = LaurentPoly::constant(dim, s(-1));
    let m = vec![
        vec![v(0).mul_ref(&one.sub_ref(&eta)), v(1).mul_ref(&one.sub_ref(&eta.mul_ref(&eta)))],
        vec![v(2).mul_ref(&minus_one.sub_ref(&one)), v(3).mul_ref(&minus_one.sub_ref(&eta))],
    ];
    let at_two = det_laurent(&m).unwrap().specialize(4, &s(2)).unwrap();
    let closed = v(0).mul_ref(&v(3)).sub_ref(&v(1).mul_ref(&v(2)).scale(&s(2))).scale(&s(3));
    assert_eq!(at_two, closed);
}

#[test]
fn shared_determinant_implies_property() {
    let consts = [s(1), s(-1), s(2)];
    let mut r = rng(17);
    let mut zeros = 0;
    for s_size in 1..=3usize {
        for _ in 0..150 {
            let a = loop {
                let a = random_int_matrix(&mut r, 2 * s_size, s_size, 4);
                let ok = (0..2 * s_size).combinations(s_size).all(|rows| {
                    let m: Matrix<ExactScalar> = rows.iter().map(|&i| a[i].clone()).collect();
                    !det_by_minors(&m).is_zero()
                });
                if ok { break a; }
            };
            // draw exponents from a small pool so that repeated classes are common
            let pool: Vec<Vec<i64>> = (0..s_size + 1).map(|_| vec![r.gen_range(-1..=1), r.gen_range(-1..=1)]).collect();
            let h: Vec<MonomialUnit> = (0..2 * s_size)
                .map(|_| {
                    let e = pool[r.gen_range(0..pool.len())].clone();
                    MonomialUnit::new(consts[r.gen_range(0..3)].clone(), ExponentVector(e)).unwrap()
                })
                .collect();
            if shared_determinant(&a, &h).unwrap().is_zero() {
                zeros += 1;
                let tuple = GroupTuple::new(2, h.iter().map(|u| u.exponents().clone()).collect()).unwrap();
                assert!(has_property(&tuple, 2 * s_size, s_size).unwrap(), "{h:?}");
            }
        }
    }
    assert!(zeros > 0, "no vanishing instance was sampled");
}

#[test]
fn step4_reduction_random() {
    let mut r = rng(23);
    for t in 1..=2usize {
        for _ in 0..20 {
            let a = all_minors_nonzero(&mut r, t + 1, 5);
            let k = r.gen_range(1..=t);
            let breakpoints: Vec<usize> = (1..=t).combinations(k).next().unwrap();
            let breakpoints = if r.gen_bool(0.5) { breakpoints } else { ((t - k + 1)..=t).collect() };
            let constants: Vec<ExactScalar> = (0..=t).map(|_| s(random_nonzero_int(&mut r, 3))).collect();
            let shape = FujimotoShape::new(t, breakpoints, constants).unwrap();
            let d = reduce_block_determinant(t, &BlockRows::from_shape(&shape, &a).unwrap()).unwrap();
            let f = fujimoto_determinant(&shape, &a).unwrap();
            assert_eq!(d, f.mul_ref(&step4_factor(&shape).to_poly()));
        }
    }
}

#[test]
fn lemma41_forward_direction() {
    let mut r = rng(29);
    let grid = [s(1), s(-1), s(2), s(-2), root_of_unity(3, 1), root_of_unity(3, 2)];
    for _ in 0..25 {
        let a = all_minors_nonzero(&mut r, 2, 4);
        for (c1, c2) in grid.iter().cartesian_product(&grid) {
            let shape = FujimotoShape::new(1, vec![1], vec![c1.clone(), c2.clone()]).unwrap();
            let rep = lemma41_forward_check(&shape, &a).unwrap();
            assert!(rep.consistent, "{c1} {c2} {a:?}");
        }
    }
    // t = 2, k ∈ {1, 2}: the shapes met in the k ≥ 2 sub-case as well
    let w = root_of_unity(3, 1);
    let shapes = [
        (vec![2], vec![s(1), w.clone(), w.pow(2).unwrap()]),
        (vec![1, 2], vec![s(1), s(1), s(1)]),
        (vec![1, 2], vec![s(1), s(1), s(-1)]),
        (vec![1], vec![s(1), w.clone(), w.pow(2).unwrap()]),
        (vec![1, 2], vec![s(2), s(1), s(1)]),
    ];
    for _ in 0..10 {
        let a = all_minors_nonzero(&mut r, 3, 4);
        for (bp, c) in &shapes {
            let rep = lemma41_forward_check(&FujimotoShape::new(2, bp.clone(), c.clone()).unwrap(), &a).unwrap();
            assert!(rep.consistent);
        }
    }
    let a = int_matrix(&[&[2, 1], &[1, 1]]);
    assert!(lemma41_forward_check(&FujimotoShape::new(1, vec![1], vec![s(1), s(-1)]).unwrap(), &a).unwrap().vanishes);
}
