//! Cyclotomic polynomials and power tables for Q(ζ_L), cached per order.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;

/// Precomputed data for the field Q(ζ_L) in the power basis 1, ζ, …, ζ^(φ(L)-1).
#[derive(Debug)]
pub(crate) struct CycloField {
    pub phi: usize,
    /// `powers[m]` holds the integer coordinates of ζ^m, for 0 ≤ m < order.
    pub powers: Vec<Vec<i64>>,
    /// Residues k in [1, order) with gcd(k, order) = 1, in increasing order.
    pub units: Vec<u32>,
}

fn cache() -> &'static RwLock<HashMap<u32, Arc<CycloField>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<CycloField>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

pub(crate) fn field(order: u32) -> Arc<CycloField> {
    assert!(order >= 1, "cyclotomic order must be positive");
    if let Some(f) = cache().read().expect("cyclotomic cache poisoned").get(&order) {
        return Arc::clone(f);
    }
    let built = Arc::new(build_field(order));
    let mut w = cache().write().expect("cyclotomic cache poisoned");
    Arc::clone(w.entry(order).or_insert(built))
}

pub(crate) fn totient(n: u32) -> usize {
    (1..=n).filter(|k| k.gcd(&n) == 1).count()
}

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
pub(crate) fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1);
    // x^n - 1
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        poly = div_exact_monic(&poly, &cyclotomic_polynomial(d));
    }
    poly
}

fn div_exact_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    debug_assert_eq!(den[dd], 1);
    let mut rem = num.to_vec();
    let qlen = num.len() - dd;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

fn build_field(order: u32) -> CycloField {
    let cyc = cyclotomic_polynomial(order);
    let phi = cyc.len() - 1;
    debug_assert_eq!(phi, totient(order));
    let mut powers = Vec::with_capacity(order as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..order {
        powers.push(cur.clone());
        // multiply by ζ and reduce with ζ^phi = -(c_0 + c_1 ζ + … + c_{phi-1} ζ^{phi-1})
        let carry = cur[phi - 1];
        for i in (1..phi).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        if carry != 0 {
            for i in 0..phi {
                cur[i] -= carry * cyc[i];
            }
        }
    }
    debug_assert!(cur[0] == 1 && cur[1..].iter().all(|&c| c == 0), "ζ^L != 1");
    let units = (1..order.max(2)).filter(|k| k.gcd(&order) == 1).collect::<Vec<_>>();
    let units = if order == 1 { vec![1] } else { units };
    CycloField { phi, powers, units }
}
