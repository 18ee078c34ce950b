//! Minimal model data: central charges, the conformal weight grid, irreducible
//! characters, the generic chain character, and an exact Shapovalov-rank
//! oracle built directly on the commutation relations.

use std::collections::HashMap;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::modforms::partition_series;
use crate::qseries::QSeries;
use crate::rational::{q, qi, Q};
use crate::{Error, Result};

/// The (p,q) minimal model: c = 1 - 6(p-q)^2/pq with its deduplicated
/// weight grid lambda_{m,n} = ((np-mq)^2 - (p-q)^2)/4pq.
#[derive(Clone, Debug, PartialEq)]
pub struct MinimalModel {
    p: i64,
    q: i64,
    c: Q,
    /// Sorted, deduplicated; always contains 0 and has (p-1)(q-1)/2 entries.
    weights: Vec<Q>,
}

fn check_label(p: i64, qq: i64) -> Result<()> {
    if p < 2 || qq <= p || p.gcd(&qq) != 1 {
        return Err(Error::BadMinimalModelLabel(p, qq));
    }
    Ok(())
}

fn weight(p: i64, qq: i64, m: i64, n: i64) -> Q {
    q((n * p - m * qq).pow(2) - (p - qq).pow(2), 4 * p * qq)
}

pub fn minimal_model(p: i64, qq: i64) -> Result<MinimalModel> {
    check_label(p, qq)?;
    let c = Q::one() - q(6 * (p - qq).pow(2), p * qq);
    let mut weights: Vec<Q> = Vec::new();
    for m in 1..p {
        for n in 1..qq {
            let w = weight(p, qq, m, n);
            if !weights.contains(&w) {
                weights.push(w);
            }
        }
    }
    weights.sort();
    debug_assert_eq!(weights.len() as i64, (p - 1) * (qq - 1) / 2);
    Ok(MinimalModel { p, q: qq, c, weights })
}

impl MinimalModel {
    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn central_charge(&self) -> &Q {
        &self.c
    }

    pub fn weights(&self) -> &[Q] {
        &self.weights
    }

    pub fn lambda_min(&self) -> Q {
        self.weights[0].clone()
    }

    /// One grid label per distinct weight, sorted by weight.
    pub fn weight_labels(&self) -> Vec<(Q, (i64, i64))> {
        let mut out: Vec<(Q, (i64, i64))> = Vec::new();
        for m in 1..self.p {
            for n in 1..self.q {
                let w = weight(self.p, self.q, m, n);
                if !out.iter().any(|(v, _)| *v == w) {
                    out.push((w, (m, n)));
                }
            }
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }
}

/// In-range (m, n) with |np - mq| = 1, witnessing that the minimum of the
/// weight grid is (1 - (p-q)^2)/4pq. Both Bezout branches are reduced into
/// the grid; the lexicographically smaller label is returned.
pub fn lambda_min_certificate(p: i64, qq: i64) -> Result<(i64, i64)> {
    check_label(p, qq)?;
    // n with np = +1 (mod q); the mirror label covers np = -1 (mod q).
    let n_plus = mod_inverse(p, qq);
    let plus = ((n_plus * p - 1) / qq, n_plus);
    let minus = ((qq - n_plus) * p + 1) / qq;
    let minus = (minus, qq - n_plus);
    let (m, n) = plus.min(minus);
    debug_assert!((1..p).contains(&m) && (1..qq).contains(&n));
    debug_assert_eq!((n * p - m * qq).abs(), 1);
    Ok((m, n))
}

fn mod_inverse(a: i64, modulus: i64) -> i64 {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (modulus, a.rem_euclid(modulus));
    while new_r != 0 {
        let quot = r / new_r;
        (t, new_t) = (new_t, t - quot * new_t);
        (r, new_r) = (new_r, r - quot * new_r);
    }
    debug_assert_eq!(r, 1);
    t.rem_euclid(modulus)
}

/// Dimension series of the irreducible module labeled (m,n): the alternating
/// sum over the embedding diagram divided by the Euler product, normalized to
/// lead coefficient 1 at q^0.
///
/// Relative exponents: a_k = pq k^2 + k(np - mq) and
/// b_k = pq k^2 + k(np + mq) + mn, both integers, a_0 = 0.
pub fn irreducible_character(p: i64, qq: i64, m: i64, n: i64, prec: i64) -> Result<QSeries> {
    check_label(p, qq)?;
    if !(1..p).contains(&m) || !(1..qq).contains(&n) {
        return Err(Error::WeightLabelOutOfRange(m, n, p, qq));
    }
    let s = n * p - m * qq;
    let t = n * p + m * qq;
    let mut terms: Vec<(Q, Q)> = Vec::new();
    let mut push = |e: i64, sign: i64| {
        if e < prec {
            terms.push((qi(e), qi(sign)));
        }
    };
    let mut k = 0i64;
    loop {
        let exps = [
            (p * qq * k * k + k * s, 1),
            (p * qq * k * k + k * t + m * n, -1),
        ];
        let neg = [
            (p * qq * k * k - k * s, 1),
            (p * qq * k * k - k * t + m * n, -1),
        ];
        let mut any = false;
        for (e, sign) in exps {
            any |= e < prec;
            push(e, sign);
        }
        if k > 0 {
            for (e, sign) in neg {
                any |= e < prec;
                push(e, sign);
            }
        } else {
            any = true;
        }
        // Exponents grow monotonically in |k| past k = 1; once every branch
        // exceeds prec the remaining tail cannot re-enter the window.
        if !any && k >= 1 {
            break;
        }
        k += 1;
    }
    let numerator = QSeries::from_terms(&terms, &qi(prec));
    Ok(numerator.mul(&partition_series(prec)).truncate(&qi(prec)))
}

/// Dimension series (1 - q) * partition_series: the irreducible vacuum
/// character at generic central charge, with coefficients p(n) - p(n-1).
pub fn generic_verma_character(prec: i64) -> QSeries {
    let one_minus_q = QSeries::from_terms(&[(qi(0), qi(1)), (qi(1), qi(-1))], &qi(prec));
    one_minus_q.mul(&partition_series(prec)).truncate(&qi(prec))
}

const MAX_SHAPOVALOV_LEVEL: u32 = 8;

/// Rank of the exact Shapovalov Gram matrix at the given level.
///
/// For h = 0 the basis is the image of the monomials with all parts >= 2
/// (the level-1 generator is quotiented out); for h != 0 the full monomial
/// basis. The rank equals the graded dimension of the irreducible quotient.
pub fn shapovalov_rank(c: &Q, h: &Q, level: u32) -> Result<usize> {
    if level > MAX_SHAPOVALOV_LEVEL {
        return Err(Error::LevelTooLarge(MAX_SHAPOVALOV_LEVEL, level));
    }
    let min_part = if h.is_zero() { 2 } else { 1 };
    let basis = partitions(level as i64, level as i64, min_part);
    if basis.is_empty() {
        // Level 0 contributes the highest-weight vector itself.
        return Ok(if level == 0 { 1 } else { 0 });
    }
    let mut ctx = VevContext { c: c.clone(), h: h.clone(), memo: HashMap::new() };
    let dim = basis.len();
    let mut gram = vec![vec![Q::zero(); dim]; dim];
    for i in 0..dim {
        for j in i..dim {
            let mut word: Vec<i64> = basis[i].iter().rev().copied().collect();
            word.extend(basis[j].iter().map(|part| -part));
            let val = ctx.vev(&word);
            gram[i][j] = val.clone();
            gram[j][i] = val;
        }
    }
    Ok(rational_rank(gram))
}

/// Partitions of n with parts in [min_part, max_part], descending.
fn partitions(n: i64, max_part: i64, min_part: i64) -> Vec<Vec<i64>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let top = max_part.min(n);
    for first in (min_part..=top).rev() {
        for mut rest in partitions(n - first, first, min_part) {
            let mut part = vec![first];
            part.append(&mut rest);
            out.push(part);
        }
    }
    out
}

/// Vacuum expectation values of mode words, memoized per (c, h).
struct VevContext {
    c: Q,
    h: Q,
    memo: HashMap<Vec<i64>, Q>,
}

impl VevContext {
    /// <v| L(word[0]) L(word[1]) ... |v> with L(k)v = 0 for k > 0 and
    /// <v| L(-k) = 0 for k > 0, reduced via
    /// [L(a), L(b)] = (a-b)L(a+b) + delta_{a,-b} (a^3-a)/12 c.
    ///
    /// Each step commutes the first positive mode that sits directly left of
    /// a nonpositive one, so (word length, inversion count) strictly drops.
    fn vev(&mut self, word: &[i64]) -> Q {
        let Some((&head, rest)) = word.split_first() else {
            return Q::one();
        };
        if head < 0 {
            return Q::zero();
        }
        if let Some(v) = self.memo.get(word) {
            return v.clone();
        }
        let val = if head == 0 {
            let grade: i64 = rest.iter().sum();
            (&self.h - qi(grade)) * self.vev(rest)
        } else if let Some(k) = word.iter().position(|&x| x <= 0) {
            let (a, b) = (word[k - 1], word[k]);
            let mut swapped = word.to_vec();
            swapped.swap(k - 1, k);
            let mut merged = word.to_vec();
            merged[k - 1] = a + b;
            merged.remove(k);
            let mut val = self.vev(&swapped) + qi(a - b) * self.vev(&merged);
            if a + b == 0 {
                let mut removed = word.to_vec();
                removed.drain(k - 1..=k);
                val += q(a.pow(3) - a, 12) * &self.c * self.vev(&removed);
            }
            val
        } else {
            // Every mode is positive; the rightmost annihilates the vacuum.
            Q::zero()
        };
        self.memo.insert(word.to_vec(), val.clone());
        val
    }
}

/// Rank over the rationals by Gaussian elimination.
fn rational_rank(mut m: Vec<Vec<Q>>) -> usize {
    let rows = m.len();
    let cols = m[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let Some(pivot) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, pivot);
        for r in (row + 1)..rows {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &m[row][col];
            for cc in col..cols {
                let sub = &f * &m[row][cc];
                m[r][cc] -= sub;
            }
        }
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    rank
}
