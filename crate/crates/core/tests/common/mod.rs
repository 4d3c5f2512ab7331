#![allow(dead_code)]

use hypercert::geometry::HyperplaneFamily;
use hypercert::ring::Matrix;
use hypercert::scalar::{ExactScalar, Rational};
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn s(v: i64) -> ExactScalar {
    ExactScalar::from_integer(v)
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int_matrix(rows: &[&[i64]]) -> Matrix<ExactScalar> {
    rows.iter().map(|r| r.iter().map(|&x| s(x)).collect()).collect()
}

pub fn random_rational(r: &mut ChaCha8Rng, num: i64, den: i64) -> ExactScalar {
    ExactScalar::from_ratio(r.gen_range(-num..=num), r.gen_range(1..=den))
}

pub fn random_nonzero_int(r: &mut ChaCha8Rng, bound: i64) -> i64 {
    loop {
        let v = r.gen_range(-bound..=bound);
        if v != 0 {
            return v;
        }
    }
}

/// A random element of Q(ζ_L) for a random L in [1, max_order].
pub fn random_cyclo(r: &mut ChaCha8Rng, max_order: u32) -> ExactScalar {
    let order = r.gen_range(1..=max_order);
    let terms: Vec<(i64, Rational)> =
        (0..r.gen_range(1..=3)).map(|_| (r.gen_range(0..order as i64), rat(r.gen_range(-4..=4), r.gen_range(1..=3)))).collect();
    ExactScalar::from_power_sum(order, &terms).unwrap()
}

pub fn random_int_matrix(r: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> Matrix<ExactScalar> {
    (0..rows).map(|_| (0..cols).map(|_| s(r.gen_range(-bound..=bound))).collect()).collect()
}

/// Square integer matrix with every minor non-zero.
pub fn all_minors_nonzero(r: &mut ChaCha8Rng, size: usize, bound: i64) -> Matrix<ExactScalar> {
    loop {
        let m = random_int_matrix(r, size, size, bound);
        if hypercert::engine::first_vanishing_minor(&m).is_none() {
            return m;
        }
    }
}

pub fn random_family(r: &mut ChaCha8Rng, n: usize, num: i64, den: i64) -> HyperplaneFamily {
    loop {
        let rows: Matrix<ExactScalar> = (0..2 * n + 2).map(|_| (0..=n).map(|_| random_rational(r, num, den)).collect()).collect();
        if let Ok(f) = HyperplaneFamily::new(n, rows) {
            return f;
        }
    }
}

pub fn random_general_family(r: &mut ChaCha8Rng, n: usize, num: i64, den: i64) -> HyperplaneFamily {
    loop {
        let f = random_family(r, n, num, den);
        if hypercert::geometry::general_position(&f).unwrap().ok {
            return f;
        }
    }
}

pub fn random_nonsingular(r: &mut ChaCha8Rng, size: usize) -> Matrix<ExactScalar> {
    loop {
        let m: Matrix<ExactScalar> = (0..size).map(|_| (0..size).map(|_| random_rational(r, 5, 3)).collect()).collect();
        if !hypercert::ring::det_by_minors(&m).is_zero() {
            return m;
        }
    }
}

pub fn shuffled(r: &mut ChaCha8Rng, len: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..len).collect();
    p.shuffle(r);
    p
}

/// Rank over Q by plain Gaussian elimination with rational pivots.
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][c] != rat(0, 1)) else { continue };
        m.swap(rank, p);
        for i in 0..m.len() {
            if i != rank && m[i][c] != rat(0, 1) {
                let f = &m[i][c] / &m[rank][c];
                for j in 0..cols {
                    let d = &f * &m[rank][j];
                    m[i][j] -= d;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Calls `f` on every tuple of length q whose elements have `dim`
/// coordinates drawn from `values`, in odometer order.
pub fn for_each_tuple(values: &[i64], dim: usize, q: usize, mut f: impl FnMut(&[Vec<i64>])) {
    let slots = dim * q;
    let mut idx = vec![0usize; slots];
    let mut tuple = vec![vec![values[0]; dim]; q];
    loop {
        f(&tuple);
        let mut pos = slots;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < values.len() {
                tuple[pos / dim][pos % dim] = values[idx[pos]];
                break;
            }
            idx[pos] = 0;
            tuple[pos / dim][pos % dim] = values[0];
        }
    }
}
