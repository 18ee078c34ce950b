//! Classical q-expansions: Euler product, partitions, eta, divisor sums,
//! Eisenstein series, discriminant and the normalized modular invariant.
//!
//! Everything here is exact. The Eisenstein series come in two normalizations:
//! [`eisenstein`] has constant term -B_{2k}/(2k)! (the convention the trace
//! identities in [`crate::zhu`] expect), [`eisenstein_classical`] has constant
//! term 1. They differ by the factor (2k)!/(-B_{2k}).

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::sync::{Mutex, OnceLock};

use crate::qseries::QSeries;
use crate::rational::{q, qi, Q};

/// n! as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Binomial coefficient C(n, k), exact.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Bernoulli number B_n (B_1 = -1/2), via sum_j C(m+1, j) B_j = 0; cached.
pub fn bernoulli(n: u32) -> Q {
    static CACHE: OnceLock<Mutex<Vec<Q>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(vec![Q::one()]));
    let mut table = cache.lock().expect("bernoulli cache poisoned");
    while table.len() <= n as usize {
        let m = table.len() as u64;
        let mut s = Q::zero();
        for (j, bj) in table.iter().enumerate() {
            s += Q::from_integer(binomial(m + 1, j as u64)) * bj;
        }
        table.push(-s / qi(m as i64 + 1));
    }
    table[n as usize].clone()
}

/// Euler product phi(q) = prod_{n>=1} (1 - q^n), truncated below q^prec.
///
/// Expanded by the pentagonal-number theorem: the exponents are k(3k-1)/2
/// with sign (-1)^k, so the series has O(sqrt(prec)) nonzero terms.
pub fn euler_phi(prec: i64) -> QSeries {
    assert!(prec >= 1, "euler_phi needs prec >= 1");
    let mut coeffs = vec![Q::zero(); prec as usize];
    coeffs[0] = Q::one();
    let mut k = 1i64;
    loop {
        let g1 = k * (3 * k - 1) / 2;
        let g2 = k * (3 * k + 1) / 2;
        if g1 >= prec && g2 >= prec {
            break;
        }
        let sign = if k % 2 == 0 { Q::one() } else { -Q::one() };
        if g1 < prec {
            coeffs[g1 as usize] = sign.clone();
        }
        if g2 < prec {
            coeffs[g2 as usize] = sign;
        }
        k += 1;
    }
    QSeries::from_integer_coeffs(0, coeffs)
}

/// Raw partition numbers p(0..prec-1) by the pentagonal recurrence.
pub fn partition_numbers(prec: i64) -> Vec<BigInt> {
    let n = prec as usize;
    let mut p = vec![BigInt::zero(); n];
    p[0] = BigInt::one();
    for m in 1..n {
        let mut acc = BigInt::zero();
        let mut k = 1usize;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let sign_plus = k % 2 == 1;
            if sign_plus {
                acc += &p[m - g1];
            } else {
                acc -= &p[m - g1];
            }
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= m {
                if sign_plus {
                    acc += &p[m - g2];
                } else {
                    acc -= &p[m - g2];
                }
            }
            k += 1;
        }
        p[m] = acc;
    }
    p
}

/// Partition generating function sum p(n) q^n = 1/phi(q).
pub fn partition_series(prec: i64) -> QSeries {
    assert!(prec >= 1, "partition_series needs prec >= 1");
    let coeffs = partition_numbers(prec)
        .into_iter()
        .map(Q::from_integer)
        .collect();
    QSeries::from_integer_coeffs(0, coeffs)
}

/// Dedekind eta without the analytic clothing: q^(1/24) phi(q).
pub fn eta(prec: i64) -> QSeries {
    euler_phi(prec).shift(&q(1, 24))
}

/// Divisor power sums: sum_{n>=1} sigma_s(n) q^n for odd s >= 1.
pub fn sigma_series(s: u32, prec: i64) -> QSeries {
    assert!(s % 2 == 1, "sigma_series expects odd s, got {s}");
    assert!(prec >= 1, "sigma_series needs prec >= 1");
    let n = prec as usize;
    let mut coeffs = vec![Q::zero(); n];
    for d in 1..n {
        let dp = Q::from_integer(BigInt::from(d).pow(s));
        let mut m = d;
        while m < n {
            coeffs[m] += &dp;
            m += d;
        }
    }
    QSeries::from_integer_coeffs(0, coeffs)
}

/// E_{2k} = -B_{2k}/(2k)! + (2/(2k-1)!) sum sigma_{2k-1}(n) q^n.
///
/// E_2 = -1/12 + 2q + 6q^2 + ...; E_4 has constant term 1/720.
pub fn eisenstein(k: u32, prec: i64) -> QSeries {
    assert!(k >= 1, "eisenstein needs k >= 1");
    let constant = -bernoulli(2 * k) / Q::from_integer(factorial(2 * k as u64));
    let scale = qi(2) / Q::from_integer(factorial(2 * k as u64 - 1));
    let tail = sigma_series(2 * k - 1, prec).scale(&scale);
    QSeries::monomial(&constant, &Q::zero(), &qi(prec)).add(&tail)
}

/// Classical normalization with constant term 1:
/// 1 - (4k/B_{2k}) sum sigma_{2k-1}(n) q^n.
pub fn eisenstein_classical(k: u32, prec: i64) -> QSeries {
    assert!(k >= 1, "eisenstein_classical needs k >= 1");
    let scale = -qi(4 * k as i64) / bernoulli(2 * k);
    let tail = sigma_series(2 * k - 1, prec).scale(&scale);
    QSeries::one(&qi(prec)).add(&tail)
}

/// Discriminant series eta^24 = q prod (1 - q^n)^24, trusted below q^prec.
pub fn delta(prec: i64) -> QSeries {
    assert!(prec >= 2, "delta needs prec >= 2");
    eta(prec).pow(24).expect("eta is invertible").truncate(&qi(prec))
}

/// J = (720 E_4)^3 / Delta - 744: lead q^(-1), constant term 0,
/// q-coefficient 196884.
pub fn moonshine_j(prec: i64) -> QSeries {
    assert!(prec >= 2, "moonshine_j needs prec >= 2");
    let work = prec + 2;
    let e4_cubed = eisenstein_classical(2, work).pow(3).expect("nonzero");
    let j = e4_cubed.mul(&delta(work).invert().expect("delta has lead coefficient 1"));
    j.sub(&QSeries::monomial(&qi(744), &Q::zero(), &qi(prec)))
        .truncate(&qi(prec))
}
