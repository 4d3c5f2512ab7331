//! Row-style Hermite normal form over Z.
//!
//! The rows of the returned matrix are a canonical basis of the lattice
//! spanned by the input rows: pivots are positive, move strictly right, and
//! entries above each pivot lie in `[0, pivot)`. Two row sets therefore span
//! the same subgroup of Z^t exactly when their forms are equal.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub fn hermite_normal_form(rows: &[Vec<i64>], dim: usize) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), dim, "row length differs from ambient dimension");
            r.iter().map(|&x| BigInt::from(x)).collect()
        })
        .collect();
    let mut pivot = 0usize;
    for col in 0..dim {
        if pivot == m.len() {
            break;
        }
        loop {
            // smallest non-zero |entry| at or below the pivot row
            let best = (pivot..m.len())
                .filter(|&r| !m[r][col].is_zero())
                .min_by(|&a, &b| m[a][col].abs().cmp(&m[b][col].abs()));
            let Some(best) = best else { break };
            m.swap(pivot, best);
            let mut done = true;
            for r in pivot + 1..m.len() {
                if m[r][col].is_zero() {
                    continue;
                }
                let q = m[r][col].div_floor(&m[pivot][col]);
                let (head, tail) = m.split_at_mut(r);
                for (x, p) in tail[0].iter_mut().zip(&head[pivot]).skip(col) {
                    *x -= &q * p;
                }
                if !tail[0][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if m.get(pivot).is_none_or(|row| row[col].is_zero()) {
            continue;
        }
        if m[pivot][col].is_negative() {
            for x in m[pivot].iter_mut() {
                *x = -&*x;
            }
        }
        for r in 0..pivot {
            let q = m[r][col].div_floor(&m[pivot][col]);
            if q.is_zero() {
                continue;
            }
            let (head, tail) = m.split_at_mut(pivot);
            for (x, p) in head[r].iter_mut().zip(&tail[0]).skip(col) {
                *x -= &q * p;
            }
        }
        pivot += 1;
    }
    m.truncate(pivot);
    m
}
