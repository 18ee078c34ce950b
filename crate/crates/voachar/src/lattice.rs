//! Even positive-definite lattices: theta series, weighted theta series,
//! and discriminant cosets, all in exact arithmetic.
//!
//! Vector enumeration writes the quadratic form as sum_i d_i (x_i + offset)^2
//! with the d_i the exact leading-minor ratios, then walks integer coordinates
//! inside the exact per-level radius bounds. Everything is scaled to integers
//! once up front, so the search loop touches no rational arithmetic and
//! completeness below the cutoff is an algebraic identity, not a float
//! estimate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::qseries::QSeries;
use crate::rational::{qi, Q};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenLattice {
    rank: usize,
    gram: Vec<Vec<i64>>,
}

/// One coset of L inside the dual lattice, in L-basis coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct CosetRep {
    /// Representative with every coordinate reduced to (-1/2, 1/2].
    pub coords: Vec<Q>,
    /// Minimal squared length over the coset; 0 exactly for the zero coset.
    pub min_norm: Q,
}

impl EvenLattice {
    /// Checks symmetry, even diagonal and positive definiteness (all leading
    /// principal minors > 0, computed exactly).
    pub fn validate(gram: Vec<Vec<i64>>) -> Result<EvenLattice> {
        let rank = gram.len();
        if rank == 0 {
            return Err(Error::BadArgument("empty gram matrix".into()));
        }
        for (i, row) in gram.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::BadArgument(format!(
                    "gram matrix is not square: row {i} has {} entries, expected {rank}",
                    row.len()
                )));
            }
        }
        for i in 0..rank {
            for j in (i + 1)..rank {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::NotSymmetric(i, j));
                }
            }
            if gram[i][i] % 2 != 0 {
                return Err(Error::OddDiagonal(i, gram[i][i]));
            }
        }
        let lat = EvenLattice { rank, gram };
        for k in 1..=rank {
            if !lat.leading_minor(k).is_positive() {
                return Err(Error::NotPositiveDefinite(k));
            }
        }
        Ok(lat)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// Determinant of the k-th leading principal submatrix, exact.
    fn leading_minor(&self, k: usize) -> BigInt {
        let mut a: Vec<Vec<Q>> = (0..k)
            .map(|i| (0..k).map(|j| qi(self.gram[i][j])).collect())
            .collect();
        let mut det = Q::one();
        for col in 0..k {
            let pivot = (col..k).find(|&r| !a[r][col].is_zero());
            let Some(p) = pivot else { return BigInt::zero() };
            if p != col {
                a.swap(p, col);
                det = -det;
            }
            det *= a[col][col].clone();
            for r in (col + 1)..k {
                let f = &a[r][col] / &a[col][col];
                if f.is_zero() {
                    continue;
                }
                for c in col..k {
                    let sub = &f * &a[col][c];
                    a[r][c] -= sub;
                }
            }
        }
        debug_assert!(det.is_integer());
        det.to_integer()
    }

    /// det of the full Gram matrix.
    pub fn det(&self) -> BigInt {
        self.leading_minor(self.rank)
    }

    /// Gram pairing of rational coordinate vectors.
    pub fn pairing(&self, x: &[Q], y: &[Q]) -> Q {
        let mut acc = Q::zero();
        for i in 0..self.rank {
            for j in 0..self.rank {
                if self.gram[i][j] != 0 {
                    acc += &x[i] * &y[j] * qi(self.gram[i][j]);
                }
            }
        }
        acc
    }

    /// Inverse Gram matrix, exact (the dual basis in L-coordinates).
    fn gram_inverse(&self) -> Vec<Vec<Q>> {
        let n = self.rank;
        let mut a: Vec<Vec<Q>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| qi(self.gram[i][j]))
                    .chain((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }))
                    .collect()
            })
            .collect();
        for col in 0..n {
            let p = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .expect("validated lattice is invertible");
            a.swap(p, col);
            let inv = Q::one() / a[col][col].clone();
            for c in col..2 * n {
                a[col][c] *= &inv;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in col..2 * n {
                        let sub = &f * &a[col][c];
                        a[r][c] -= sub;
                    }
                }
            }
        }
        a.into_iter().map(|row| row[n..].to_vec()).collect()
    }
}

/// The A1 root lattice, Gram [[2]].
pub fn a1() -> EvenLattice {
    EvenLattice::validate(vec![vec![2]]).expect("A1 gram")
}

/// The E8 root lattice in a root basis (simply laced Cartan matrix).
pub fn e8() -> EvenLattice {
    let mut g = vec![vec![0i64; 8]; 8];
    for i in 0..8 {
        g[i][i] = 2;
    }
    // Chain 0-2-3-4-5-6-7 with node 1 attached to node 3.
    for (i, j) in [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)] {
        g[i][j] = -1;
        g[j][i] = -1;
    }
    EvenLattice::validate(g).expect("E8 gram")
}

/// Orthogonal direct sum by block-diagonal Gram matrix.
pub fn direct_sum(a: &EvenLattice, b: &EvenLattice) -> EvenLattice {
    let n = a.rank + b.rank;
    let mut g = vec![vec![0i64; n]; n];
    for i in 0..a.rank {
        g[i][..a.rank].copy_from_slice(&a.gram[i]);
    }
    for i in 0..b.rank {
        for j in 0..b.rank {
            g[a.rank + i][a.rank + j] = b.gram[i][j];
        }
    }
    EvenLattice::validate(g).expect("direct sum of valid lattices")
}

/// Parses the Gram file format: line 1 is the rank, then rank lines of rank
/// integers; '#' starts a comment.
pub fn parse_gram(text: &str) -> Result<EvenLattice> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let rank_line = lines
        .next()
        .ok_or_else(|| Error::BadArgument("gram file is empty".into()))?;
    let rank: usize = rank_line
        .parse()
        .map_err(|_| Error::BadArgument(format!("invalid rank line '{rank_line}'")))?;
    let mut gram = Vec::with_capacity(rank);
    for i in 0..rank {
        let line = lines
            .next()
            .ok_or_else(|| Error::BadArgument(format!("missing row {} of {rank}", i + 1)))?;
        let row: std::result::Result<Vec<i64>, _> =
            line.split_whitespace().map(str::parse).collect();
        let row =
            row.map_err(|_| Error::BadArgument(format!("invalid integer in row '{line}'")))?;
        if row.len() != rank {
            return Err(Error::BadArgument(format!(
                "row {} has {} entries, expected {rank}",
                i + 1,
                row.len()
            )));
        }
        gram.push(row);
    }
    EvenLattice::validate(gram)
}

/// Integer square root on nonnegative i128.
fn isqrt_i128(n: i128) -> i128 {
    debug_assert!(n >= 0);
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as i128 + 2;
    while x * x > n {
        x -= 1;
    }
    x
}

fn ratio_to_i128(x: &Q, what: &str) -> i128 {
    debug_assert!(x.is_integer());
    x.to_integer()
        .to_i128()
        .unwrap_or_else(|| panic!("{what} overflows the exact enumeration scale"))
}

/// Scaled integer data for complete vector enumeration over gamma + L.
struct Enumerator {
    rank: usize,
    /// Scaled offset row coefficients: level i sees R_i = t*z_i + L_i with
    /// L_i = c[i] + sum_{j>i} b[i][j]*z_j.
    b: Vec<Vec<i128>>,
    c: Vec<i128>,
    t: i128,
    /// Per-level integer weights: N(gamma+z) * scale = sum_i w[i]*R_i^2.
    w: Vec<i128>,
    /// scale = W * T^2 where W clears the minor-ratio denominators.
    scale: BigInt,
}

impl Enumerator {
    fn new(l: &EvenLattice, gamma: &[Q]) -> Enumerator {
        let n = l.rank;
        assert_eq!(gamma.len(), n, "coset representative has wrong rank");
        // Exact elimination: Q(x) = sum_i d[i] * (x_i + sum_{j>i} u[i][j] x_j)^2.
        let mut a: Vec<Vec<Q>> = (0..n)
            .map(|i| (0..n).map(|j| qi(l.gram[i][j])).collect())
            .collect();
        let mut d = vec![Q::zero(); n];
        let mut u = vec![vec![Q::zero(); n]; n];
        for i in 0..n {
            d[i] = a[i][i].clone();
            assert!(d[i].is_positive(), "validated lattice has positive minors");
            for j in (i + 1)..n {
                u[i][j] = &a[i][j] / &d[i];
            }
            for k in (i + 1)..n {
                for m in (i + 1)..n {
                    let sub = &a[i][k] * &a[i][m] / &d[i];
                    a[k][m] -= sub;
                }
            }
        }
        // Offsets from the coset shift: level i uses gamma_i + sum u[i][j] gamma_j.
        let consts: Vec<Q> = (0..n)
            .map(|i| {
                let mut s = gamma[i].clone();
                for j in (i + 1)..n {
                    s += &u[i][j] * &gamma[j];
                }
                s
            })
            .collect();
        let mut t_big = BigInt::one();
        for i in 0..n {
            t_big = t_big.lcm(consts[i].denom());
            for j in (i + 1)..n {
                t_big = t_big.lcm(u[i][j].denom());
            }
        }
        let mut w_big = BigInt::one();
        for di in &d {
            w_big = w_big.lcm(di.denom());
        }
        let t_q = Q::from_integer(t_big.clone());
        let w_q = Q::from_integer(w_big.clone());
        let b = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if j > i {
                            ratio_to_i128(&(&u[i][j] * &t_q), "offset coefficient")
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        let c = consts
            .iter()
            .map(|x| ratio_to_i128(&(x * &t_q), "offset constant"))
            .collect();
        let w = d
            .iter()
            .map(|di| ratio_to_i128(&(di * &w_q), "level weight"))
            .collect();
        let t = t_big.to_i128().expect("grid scale overflows i128");
        let scale = &w_big * &t_big * &t_big;
        Enumerator { rank: n, b, c, t, w, scale }
    }

    /// Largest scaled norm strictly below bound, or None if nothing can be.
    fn budget_for(&self, bound: &Q) -> Option<i128> {
        let threshold = bound * Q::from_integer(self.scale.clone());
        let max = if threshold.is_integer() {
            threshold.to_integer() - 1
        } else {
            threshold.floor().to_integer()
        };
        if max.is_negative() {
            None
        } else {
            Some(max.to_i128().expect("enumeration budget overflows i128"))
        }
    }

    /// Visits every z with N(gamma + z) < bound exactly once, passing the
    /// integer coordinates and the scaled norm N * scale.
    fn for_each(&self, bound: &Q, visit: &mut dyn FnMut(&[i64], i128)) {
        let Some(budget) = self.budget_for(bound) else { return };
        let mut state = WalkState {
            z: vec![0i64; self.rank],
            l: self.c.clone(),
            budget,
        };
        self.walk(self.rank - 1, 0, &mut state, visit);
    }

    fn walk(
        &self,
        level: usize,
        partial: i128,
        state: &mut WalkState,
        visit: &mut dyn FnMut(&[i64], i128),
    ) {
        let rem = state.budget - partial;
        let rmax = isqrt_i128(rem / self.w[level]);
        let l_here = state.l[level];
        // T*z + L in [-rmax, rmax]
        let lo = (-rmax - l_here).div_euclid(self.t)
            + if (-rmax - l_here).rem_euclid(self.t) != 0 { 1 } else { 0 };
        let hi = (rmax - l_here).div_euclid(self.t);
        for zi in lo..=hi {
            let r = self.t * zi + l_here;
            let contrib = self.w[level] * r * r;
            debug_assert!(partial + contrib <= state.budget);
            state.z[level] = hint_i64(zi);
            if level == 0 {
                visit(&state.z, partial + contrib);
            } else {
                for k in 0..level {
                    state.l[k] += self.b[k][level] * zi;
                }
                self.walk(level - 1, partial + contrib, state, visit);
                for k in 0..level {
                    state.l[k] -= self.b[k][level] * zi;
                }
            }
        }
    }
}

struct WalkState {
    z: Vec<i64>,
    l: Vec<i128>,
    budget: i128,
}

fn hint_i64(x: i128) -> i64 {
    x.to_i64().expect("lattice coordinate overflows i64")
}

/// Accumulates (scaled norm -> coefficient) buckets into a QSeries with the
/// stated precision; exponents are N/2.
fn buckets_to_series(buckets: Vec<(i128, Q)>, scale: &BigInt, prec: i64) -> QSeries {
    let two_scale = Q::from_integer(scale * BigInt::from(2));
    let terms: Vec<(Q, Q)> = buckets
        .into_iter()
        .map(|(total, coeff)| (Q::from_integer(BigInt::from(total)) / &two_scale, coeff))
        .collect();
    QSeries::from_terms(&terms, &qi(prec))
}

fn collect_theta(l: &EvenLattice, gamma: &[Q], prec: i64) -> QSeries {
    assert!(prec >= 1, "theta needs prec >= 1");
    let en = Enumerator::new(l, gamma);
    let mut counts: std::collections::HashMap<i128, i64> = std::collections::HashMap::new();
    en.for_each(&qi(2 * prec), &mut |_z, total| {
        *counts.entry(total).or_insert(0) += 1;
    });
    let buckets = counts.into_iter().map(|(k, v)| (k, qi(v))).collect();
    buckets_to_series(buckets, &en.scale, prec)
}

/// Theta series of L: sum over alpha in L of q^((alpha,alpha)/2), complete
/// below q^prec.
pub fn theta(l: &EvenLattice, prec: i64) -> QSeries {
    coset_theta_coords(l, &vec![Q::zero(); l.rank], prec)
}

/// Theta series of the coset gamma + L.
pub fn coset_theta(l: &EvenLattice, gamma: &CosetRep, prec: i64) -> QSeries {
    coset_theta_coords(l, &gamma.coords, prec)
}

fn coset_theta_coords(l: &EvenLattice, gamma: &[Q], prec: i64) -> QSeries {
    collect_theta(l, gamma, prec)
}

/// Weighted theta over L: sum <u,alpha><v,alpha> q^((alpha,alpha)/2).
pub fn weighted_theta(l: &EvenLattice, u: &[Q], v: &[Q], prec: i64) -> QSeries {
    weighted_coset_theta(l, &vec![Q::zero(); l.rank], u, v, prec)
}

/// Weighted theta over the coset gamma + L; gamma in L-basis coordinates.
pub fn weighted_coset_theta(l: &EvenLattice, gamma: &[Q], u: &[Q], v: &[Q], prec: i64) -> QSeries {
    assert!(prec >= 1, "weighted theta needs prec >= 1");
    assert_eq!(u.len(), l.rank, "u has wrong rank");
    assert_eq!(v.len(), l.rank, "v has wrong rank");
    // <u, gamma + z> = (integer row GU).z / su + <u, gamma>, precomputed.
    let rows = |x: &[Q]| -> (Vec<i128>, BigInt, Q) {
        let gx: Vec<Q> = (0..l.rank)
            .map(|j| {
                let mut s = Q::zero();
                for i in 0..l.rank {
                    if l.gram[i][j] != 0 {
                        s += &x[i] * qi(l.gram[i][j]);
                    }
                }
                s
            })
            .collect();
        let mut den = BigInt::one();
        for e in &gx {
            den = den.lcm(e.denom());
        }
        let ints = gx
            .iter()
            .map(|e| ratio_to_i128(&(e * Q::from_integer(den.clone())), "weight row"))
            .collect();
        let const_part = l.pairing(x, &gamma.to_vec());
        (ints, den, const_part)
    };
    let (gu, du, cu) = rows(u);
    let (gv, dv, cv) = rows(v);
    let du_q = Q::from_integer(du);
    let dv_q = Q::from_integer(dv);
    let en = Enumerator::new(l, gamma);
    let mut buckets: std::collections::HashMap<i128, Q> = std::collections::HashMap::new();
    en.for_each(&qi(2 * prec), &mut |z, total| {
        let mut su = 0i128;
        let mut sv = 0i128;
        for (j, &zj) in z.iter().enumerate() {
            if zj != 0 {
                su += gu[j] * zj as i128;
                sv += gv[j] * zj as i128;
            }
        }
        let pu = Q::from_integer(BigInt::from(su)) / &du_q + &cu;
        let pv = Q::from_integer(BigInt::from(sv)) / &dv_q + &cv;
        let w = pu * pv;
        if !w.is_zero() {
            *buckets.entry(total).or_insert_with(Q::zero) += w;
        }
    });
    buckets_to_series(buckets.into_iter().collect(), &en.scale, prec)
}

/// Diagonalizes an integer matrix by unimodular row/column operations,
/// returning the diagonal and the inverse row-transform: A = Einv * D * (col ops).
fn diagonalize_with_row_inverse(mut a: Vec<Vec<BigInt>>) -> (Vec<BigInt>, Vec<Vec<BigInt>>) {
    let n = a.len();
    let mut einv: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let col_op = |m: &mut Vec<Vec<BigInt>>, dst: usize, src: usize, k: &BigInt| {
        for row in m.iter_mut() {
            let add = &row[src] * k;
            row[dst] += add;
        }
    };
    for t in 0..n {
        loop {
            // Pivot: smallest nonzero absolute value in the trailing block.
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    if !a[i][j].is_zero()
                        && pivot.is_none_or(|(pi, pj)| a[i][j].abs() < a[pi][pj].abs())
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let (pi, pj) = pivot.expect("nonsingular matrix has a pivot");
            if pi != t {
                a.swap(pi, t);
                for row in einv.iter_mut() {
                    row.swap(pi, t);
                }
            }
            if pj != t {
                for row in a.iter_mut() {
                    row.swap(pj, t);
                }
            }
            let mut clean = true;
            for r in (t + 1)..n {
                if !a[r][t].is_zero() {
                    let k = div_round(&a[r][t], &a[t][t]);
                    if !k.is_zero() {
                        for c in t..n {
                            let sub = &a[t][c] * &k;
                            a[r][c] -= sub;
                        }
                        col_op(&mut einv, t, r, &k);
                    }
                    if !a[r][t].is_zero() {
                        clean = false;
                    }
                }
            }
            for c in (t + 1)..n {
                if !a[t][c].is_zero() {
                    let k = div_round(&a[t][c], &a[t][t]);
                    if !k.is_zero() {
                        for row in a.iter_mut() {
                            let sub = &row[t] * &k;
                            row[c] -= sub;
                        }
                    }
                    if !a[t][c].is_zero() {
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        if a[t][t].is_negative() {
            for c in t..n {
                a[t][c] = -a[t][c].clone();
            }
            for row in einv.iter_mut() {
                row[t] = -row[t].clone();
            }
        }
    }
    let d = (0..n).map(|i| a[i][i].clone()).collect();
    (d, einv)
}

/// Rounded division minimizing the remainder.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q0, r) = a.div_rem(b);
    if &r * BigInt::from(2) > b.abs() {
        q0 + BigInt::one()
    } else if &r * BigInt::from(2) <= -b.abs() {
        q0 - BigInt::one()
    } else {
        q0
    }
}

/// One representative per coset of L in its dual, with exact minimal norms.
/// The zero coset comes first; order is deterministic.
pub fn discriminant_cosets(l: &EvenLattice, bound: i64) -> Result<Vec<CosetRep>> {
    let det = l.det();
    if det > BigInt::from(bound) {
        return Err(Error::DiscriminantTooLarge(det.to_string(), bound.to_string()));
    }
    let gram_big: Vec<Vec<BigInt>> = l
        .gram
        .iter()
        .map(|row| row.iter().map(|&e| BigInt::from(e)).collect())
        .collect();
    let (diag, einv) = diagonalize_with_row_inverse(gram_big);
    let ginv = l.gram_inverse();
    let mut reps = Vec::new();
    let mut index = vec![BigInt::zero(); l.rank];
    loop {
        // w = Einv * index, gamma = G^{-1} w reduced to (-1/2, 1/2].
        let gamma: Vec<Q> = (0..l.rank)
            .map(|i| {
                let mut s = Q::zero();
                for j in 0..l.rank {
                    let mut wj = Q::zero();
                    for (k, idx) in index.iter().enumerate() {
                        if !idx.is_zero() && !einv[j][k].is_zero() {
                            wj += Q::from_integer(&einv[j][k] * idx);
                        }
                    }
                    s += &ginv[i][j] * wj;
                }
                let nearest = div_round(
                    &(s.numer().clone()),
                    &(s.denom().clone()),
                );
                s - Q::from_integer(nearest)
            })
            .collect();
        reps.push(CosetRep {
            min_norm: minimal_coset_norm(l, &gamma),
            coords: gamma,
        });
        // Mixed-radix increment over the diagonal moduli.
        let mut carry = true;
        for (i, d) in diag.iter().enumerate() {
            if carry {
                index[i] += 1;
                if index[i] >= *d {
                    index[i] = BigInt::zero();
                } else {
                    carry = false;
                }
            }
        }
        if carry {
            break;
        }
    }
    reps.sort_by(|a, b| {
        a.min_norm
            .cmp(&b.min_norm)
            .then_with(|| a.coords.cmp(&b.coords))
    });
    debug_assert_eq!(BigInt::from(reps.len()), det);
    Ok(reps)
}

/// Exact minimal squared length over gamma + L.
fn minimal_coset_norm(l: &EvenLattice, gamma: &[Q]) -> Q {
    if gamma.iter().all(Zero::is_zero) {
        return Q::zero();
    }
    // The reduced representative itself bounds the minimum; enumerating
    // strictly below that bound plus one is complete and nonempty.
    let start = l.pairing(gamma, gamma);
    let bound = &start + Q::one();
    let en = Enumerator::new(l, gamma);
    let mut best: Option<i128> = None;
    en.for_each(&bound, &mut |_z, total| {
        best = Some(best.map_or(total, |b| b.min(total)));
    });
    let best = best.expect("coset contains its own representative");
    Q::from_integer(BigInt::from(best)) / Q::from_integer(en.scale)
}
