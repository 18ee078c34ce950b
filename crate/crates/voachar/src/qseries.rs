//! Truncated formal Laurent series in q^(1/N) with exact rational coefficients.
//!
//! A [`QSeries`] stores a contiguous coefficient window [lead, prec) on the
//! exponent grid (1/denom)Z. Coefficients at exponents >= prec are unknown,
//! not zero; coefficients below lead are trusted zeros. All arithmetic tracks
//! the trusted window pessimistically, so every reported coefficient is
//! reproducible at higher precision.
//!
//! Canonical form kept by every constructor and operation:
//! - leading zeros are trimmed (the first stored coefficient is nonzero, or
//!   the window is empty),
//! - denom is the smallest N realizing lead, prec, and every nonzero exponent.
//!
//! No floating point in this module.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

use crate::rational::{format_q, gcd_i64, lcm_i64, parse_q, qi, Q};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct QSeries {
    /// Exponent grid denominator N >= 1, kept minimal.
    denom: i64,
    /// lead = lead_num / denom.
    lead_num: i64,
    /// prec = prec_num / denom, prec_num >= lead_num.
    prec_num: i64,
    /// Entry k is the coefficient of q^((lead_num + k)/denom);
    /// len == prec_num - lead_num.
    coeffs: Vec<Q>,
}

/// Converts e to the numerator on the grid (1/nd)Z, if it lies on it.
fn on_grid(e: &Q, nd: i64) -> Option<i64> {
    let scaled = e * qi(nd);
    if scaled.is_integer() {
        scaled.to_integer().to_i64()
    } else {
        None
    }
}

fn grid_num(e: &Q, nd: i64, what: &str) -> i64 {
    on_grid(e, nd).unwrap_or_else(|| panic!("{what} {} does not fit grid 1/{nd}", format_q(e)))
}

impl QSeries {
    /// Builds and canonicalizes from raw grid data. len must equal prec - lead.
    pub(crate) fn from_grid(denom: i64, lead_num: i64, prec_num: i64, coeffs: Vec<Q>) -> Self {
        assert!(denom >= 1, "denom must be positive");
        assert!(prec_num >= lead_num, "prec below lead");
        assert_eq!(
            coeffs.len(),
            (prec_num - lead_num) as usize,
            "coefficient window does not match [lead, prec)"
        );
        let mut s = QSeries { denom, lead_num, prec_num, coeffs };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        let skip = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if skip > 0 {
            self.coeffs.drain(..skip);
            self.lead_num += skip as i64;
        }
        if self.coeffs.is_empty() {
            self.lead_num = self.prec_num;
        }
        if self.denom == 1 {
            return;
        }
        let mut g = gcd_i64(self.denom, gcd_i64(self.lead_num, self.prec_num));
        if g > 1 {
            for (k, c) in self.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    g = gcd_i64(g, self.lead_num + k as i64);
                    if g == 1 {
                        break;
                    }
                }
            }
        }
        if g > 1 {
            // Every nonzero exponent numerator is divisible by g, so the
            // entries dropped by the stride are trusted zeros.
            let stride = g as usize;
            self.coeffs = self.coeffs.iter().step_by(stride).cloned().collect();
            self.denom /= g;
            self.lead_num /= g;
            self.prec_num /= g;
        }
    }

    /// Series with no known coefficients: 0 + O(q^prec).
    pub fn zero(prec: &Q) -> Self {
        let den = prec.denom().to_i64().expect("precision grid too fine");
        let num = prec.numer().to_i64().expect("precision out of range");
        QSeries::from_grid(den, num, num, Vec::new())
    }

    /// The constant 1, trusted below prec.
    pub fn one(prec: &Q) -> Self {
        Self::monomial(&Q::one(), &Q::zero(), prec)
    }

    /// c * q^exp, trusted below prec. Terms at exponents >= prec are dropped.
    pub fn monomial(c: &Q, exp: &Q, prec: &Q) -> Self {
        Self::from_terms(std::slice::from_ref(&(exp.clone(), c.clone())), prec)
    }

    /// Builds from (exponent, coefficient) pairs; duplicates are summed and
    /// terms at exponents >= prec are dropped as untrusted.
    pub fn from_terms(terms: &[(Q, Q)], prec: &Q) -> Self {
        let mut nd = prec.denom().to_i64().expect("precision grid too fine");
        for (e, c) in terms {
            if c.is_zero() || e >= prec {
                continue;
            }
            nd = lcm_i64(nd, e.denom().to_i64().expect("exponent grid too fine"));
        }
        let prec_num = grid_num(prec, nd, "precision");
        let mut lead_num = prec_num;
        for (e, c) in terms {
            if !c.is_zero() && e < prec {
                lead_num = lead_num.min(grid_num(e, nd, "exponent"));
            }
        }
        let mut coeffs = vec![Q::zero(); (prec_num - lead_num) as usize];
        for (e, c) in terms {
            if !c.is_zero() && e < prec {
                let k = (grid_num(e, nd, "exponent") - lead_num) as usize;
                coeffs[k] += c;
            }
        }
        QSeries::from_grid(nd, lead_num, prec_num, coeffs)
    }

    /// Integer-exponent series: entry k of coeffs is the q^(lead+k)
    /// coefficient; trusted below lead + len.
    pub fn from_integer_coeffs(lead: i64, coeffs: Vec<Q>) -> Self {
        let prec = lead + coeffs.len() as i64;
        QSeries::from_grid(1, lead, prec, coeffs)
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }

    pub fn lead(&self) -> Q {
        crate::rational::q(self.lead_num, self.denom)
    }

    pub fn prec(&self) -> Q {
        crate::rational::q(self.prec_num, self.denom)
    }

    /// True when no coefficient is stored (the series is 0 + O(q^prec)).
    pub fn is_zero_series(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The stored window [lead, prec) on the 1/denom grid, densely.
    pub fn dense_coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    /// Nonzero terms as (exponent, coefficient), in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Q, &Q)> + '_ {
        self.coeffs.iter().enumerate().filter_map(move |(k, c)| {
            if c.is_zero() {
                None
            } else {
                Some((crate::rational::q(self.lead_num + k as i64, self.denom), c))
            }
        })
    }

    /// Exact coefficient of q^e. Errors iff e >= prec; exponents inside the
    /// trusted range but off the grid or below lead are trusted zeros.
    pub fn coefficient(&self, e: &Q) -> Result<Q> {
        if *e >= self.prec() {
            return Err(Error::BeyondPrecision(format_q(e), format_q(&self.prec())));
        }
        match on_grid(e, self.denom) {
            None => Ok(Q::zero()),
            Some(num) => {
                let k = num - self.lead_num;
                if k < 0 || k >= self.coeffs.len() as i64 {
                    Ok(Q::zero())
                } else {
                    Ok(self.coeffs[k as usize].clone())
                }
            }
        }
    }

    /// Convenience integer-exponent accessor.
    pub fn coefficient_int(&self, e: i64) -> Result<Q> {
        self.coefficient(&qi(e))
    }

    /// Coefficient lookup on a refined grid; caller guarantees num/nd < prec.
    fn coeff_on(&self, nd: i64, num: i64) -> Q {
        debug_assert_eq!(nd % self.denom, 0);
        let f = nd / self.denom;
        if num.rem_euclid(f) != 0 {
            return Q::zero();
        }
        let k = num.div_euclid(f) - self.lead_num;
        if k < 0 || k >= self.coeffs.len() as i64 {
            Q::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Coefficientwise sum; prec is the meet of the operands' precs.
    pub fn add(&self, other: &QSeries) -> QSeries {
        let nd = lcm_i64(self.denom, other.denom);
        let (fa, fb) = (nd / self.denom, nd / other.denom);
        let prec_num = (self.prec_num * fa).min(other.prec_num * fb);
        let lead_num = (self.lead_num * fa).min(other.lead_num * fb).min(prec_num);
        let mut coeffs = Vec::with_capacity((prec_num - lead_num) as usize);
        for num in lead_num..prec_num {
            coeffs.push(self.coeff_on(nd, num) + other.coeff_on(nd, num));
        }
        QSeries::from_grid(nd, lead_num, prec_num, coeffs)
    }

    pub fn neg(&self) -> QSeries {
        let mut out = self.clone();
        for c in &mut out.coeffs {
            *c = -c.clone();
        }
        out
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        self.add(&other.neg())
    }

    /// Multiplies every coefficient by c.
    pub fn scale(&self, c: &Q) -> QSeries {
        if c.is_zero() {
            return QSeries::from_grid(self.denom, self.prec_num, self.prec_num, Vec::new());
        }
        let coeffs = self.coeffs.iter().map(|a| a * c).collect();
        QSeries::from_grid(self.denom, self.lead_num, self.prec_num, coeffs)
    }

    /// Cauchy product, trusted up to min(f.prec + g.lead, g.prec + f.lead).
    ///
    /// Internally clears denominators and convolves integers, so integer
    /// series never pay rational gcd costs.
    pub fn mul(&self, other: &QSeries) -> QSeries {
        let nd = lcm_i64(self.denom, other.denom);
        let (fa, fb) = (nd / self.denom, nd / other.denom);
        let lead_num = self.lead_num * fa + other.lead_num * fb;
        let prec_num = (self.prec_num * fa + other.lead_num * fb)
            .min(other.prec_num * fb + self.lead_num * fa);
        let window = (prec_num - lead_num) as usize;
        if window == 0 {
            return QSeries::from_grid(nd, lead_num, prec_num, Vec::new());
        }
        let (na, da) = clear_denominators(&self.coeffs);
        let (nb, db) = clear_denominators(&other.coeffs);
        let mut acc = vec![BigInt::zero(); window];
        let fa = fa as usize;
        let fb = fb as usize;
        for (j, aj) in na.iter().enumerate() {
            if aj.is_zero() {
                continue;
            }
            let base = j * fa;
            if base >= window {
                break;
            }
            let kmax = (window - base - 1) / fb;
            for (k, bk) in nb.iter().take(kmax + 1).enumerate() {
                if !bk.is_zero() {
                    acc[base + k * fb] += aj * bk;
                }
            }
        }
        let den = da * db;
        let coeffs = acc.into_iter().map(|n| Q::new(n, den.clone())).collect();
        QSeries::from_grid(nd, lead_num, prec_num, coeffs)
    }

    /// Multiplicative inverse: g with f*g = 1 on the computed trusted range;
    /// g.lead = -f.lead. Errors when no nonzero coefficient is stored.
    pub fn invert(&self) -> Result<QSeries> {
        if self.coeffs.is_empty() {
            return Err(Error::NotInvertible);
        }
        let c0 = &self.coeffs[0];
        let window = self.coeffs.len();
        // Unit part u: self = c0 * q^lead * (1 + sum u_k q^(k/denom)).
        let unit: Vec<(usize, Q)> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, c / c0))
            .collect();
        let mut v = vec![Q::zero(); window];
        v[0] = Q::one();
        for n in 1..window {
            let mut s = Q::zero();
            for (k, uk) in &unit {
                if *k > n {
                    break;
                }
                if !v[n - k].is_zero() {
                    s += uk * &v[n - k];
                }
            }
            v[n] = -s;
        }
        let inv_c0 = Q::one() / c0;
        let coeffs = v.into_iter().map(|x| x * &inv_c0).collect();
        let lead_num = -self.lead_num;
        let prec_num = self.prec_num - 2 * self.lead_num;
        Ok(QSeries::from_grid(self.denom, lead_num, prec_num, coeffs))
    }

    /// Integer power by repeated squaring; negative exponents invert first.
    pub fn pow(&self, n: i64) -> Result<QSeries> {
        if n == 0 {
            // Empty product: 1, trusted over the relative window of f.
            let window = crate::rational::q(self.prec_num - self.lead_num, self.denom);
            return Ok(QSeries::one(&window));
        }
        let base = if n < 0 { self.invert()? } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc: Option<QSeries> = None;
        let mut sq = base;
        loop {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => sq.clone(),
                    Some(a) => a.mul(&sq),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            sq = sq.mul(&sq);
        }
        Ok(acc.expect("n != 0"))
    }

    /// Rational power of a series with leading coefficient exactly 1.
    ///
    /// For f = q^e*(1 + u) the result is q^(a*e)*(1 + u)^a via the exact
    /// coefficient recurrence n*h_n = sum_j ((a+1)*j - n) u_j h_{n-j}; the
    /// relative trusted window of f is preserved.
    pub fn pow_rational(&self, a: &Q) -> Result<QSeries> {
        if a.is_integer() {
            return self.pow(a.to_integer().to_i64().expect("exponent out of range"));
        }
        if self.coeffs.is_empty() || !self.coeffs[0].is_one() {
            let found = self
                .coeffs
                .first()
                .map(format_q)
                .unwrap_or_else(|| "no stored coefficient".to_string());
            return Err(Error::FractionalPowerBase(found));
        }
        let window = self.coeffs.len();
        let unit: Vec<(usize, Q)> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, c.clone()))
            .collect();
        let ap1 = a + Q::one();
        let mut h = vec![Q::zero(); window];
        h[0] = Q::one();
        for n in 1..window {
            let qn = qi(n as i64);
            let mut s = Q::zero();
            for (j, uj) in &unit {
                if *j > n {
                    break;
                }
                if !h[n - j].is_zero() {
                    s += (&ap1 * qi(*j as i64) - &qn) * uj * &h[n - j];
                }
            }
            h[n] = s / qn;
        }
        let unit_pow = QSeries::from_grid(self.denom, 0, window as i64, h);
        Ok(unit_pow.shift(&(self.lead() * a)))
    }

    /// Adds a to every exponent (and to prec).
    pub fn shift(&self, a: &Q) -> QSeries {
        let ad = a.denom().to_i64().expect("shift grid too fine");
        let nd = lcm_i64(self.denom, ad);
        let f = nd / self.denom;
        let shift_num = grid_num(a, nd, "shift");
        let mut coeffs = vec![Q::zero(); self.coeffs.len() * f as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[k * f as usize] = c.clone();
            }
        }
        let lead_num = self.lead_num * f + shift_num;
        let prec_num = self.prec_num * f + shift_num;
        QSeries::from_grid(nd, lead_num, prec_num, coeffs)
    }

    /// Restricts the trusted range. Precision can only shrink; a request
    /// beyond the current prec returns the series unchanged.
    pub fn truncate(&self, new_prec: &Q) -> QSeries {
        if *new_prec >= self.prec() {
            return self.clone();
        }
        let nd_extra = new_prec.denom().to_i64().expect("precision grid too fine");
        let nd = lcm_i64(self.denom, nd_extra);
        let f = nd / self.denom;
        let prec_num = grid_num(new_prec, nd, "precision");
        let lead_num = (self.lead_num * f).min(prec_num);
        let mut coeffs = Vec::with_capacity((prec_num - lead_num) as usize);
        for num in lead_num..prec_num {
            coeffs.push(self.coeff_on(nd, num));
        }
        QSeries::from_grid(nd, lead_num, prec_num, coeffs)
    }

    /// Trusted-range equality: true iff the series agree coefficientwise on
    /// the intersection of their trusted ranges.
    pub fn agrees_with(&self, other: &QSeries) -> bool {
        let nd = lcm_i64(self.denom, other.denom);
        let limit = (self.prec_num * (nd / self.denom)).min(other.prec_num * (nd / other.denom));
        let start = (self.lead_num * (nd / self.denom))
            .min(other.lead_num * (nd / other.denom))
            .min(limit);
        (start..limit).all(|num| self.coeff_on(nd, num) == other.coeff_on(nd, num))
    }

    /// Strict comparison below the stated exponent; errors if either series
    /// is not trusted that far.
    pub fn eq_up_to(&self, other: &QSeries, upto: &Q) -> Result<bool> {
        if self.prec() < *upto {
            return Err(Error::BeyondPrecision(format_q(upto), format_q(&self.prec())));
        }
        if other.prec() < *upto {
            return Err(Error::BeyondPrecision(format_q(upto), format_q(&other.prec())));
        }
        Ok(self.truncate(upto).agrees_with(&other.truncate(upto)))
    }
}

/// Scales rationals to a common denominator, returning integer numerators.
fn clear_denominators(coeffs: &[Q]) -> (Vec<BigInt>, BigInt) {
    let mut den = BigInt::one();
    for c in coeffs {
        if !c.is_zero() {
            den = den.lcm(c.denom());
        }
    }
    let nums = coeffs
        .iter()
        .map(|c| {
            if c.is_zero() {
                BigInt::zero()
            } else {
                c.numer() * (&den / c.denom())
            }
        })
        .collect();
    (nums, den)
}

/// Structural equality of canonical forms. For identity checks over possibly
/// different trusted ranges use [`QSeries::agrees_with`].
impl PartialEq for QSeries {
    fn eq(&self, other: &Self) -> bool {
        self.denom == other.denom
            && self.lead_num == other.lead_num
            && self.prec_num == other.prec_num
            && self.coeffs == other.coeffs
    }
}

impl Eq for QSeries {}

impl std::ops::Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        QSeries::add(self, rhs)
    }
}

impl std::ops::Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        QSeries::sub(self, rhs)
    }
}

impl std::ops::Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        QSeries::mul(self, rhs)
    }
}

impl std::ops::Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries::neg(self)
    }
}

fn write_exponent(f: &mut fmt::Formatter<'_>, e: &Q) -> fmt::Result {
    if e.is_integer() && !e.is_negative() {
        write!(f, "q^{}", e.numer())
    } else {
        write!(f, "q^({})", format_q(e))
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let a = c.abs();
            if e.is_zero() {
                write!(f, "{}", format_q(&a))?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", format_q(&a))?;
                }
                if e.is_one() {
                    write!(f, "q")?;
                } else {
                    write_exponent(f, &e)?;
                }
            }
        }
        if !first {
            write!(f, " + ")?;
        }
        write!(f, "O(")?;
        write_exponent(f, &self.prec())?;
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
struct QSeriesRepr {
    denom: i64,
    lead: String,
    prec: String,
    coeffs: Vec<String>,
}

impl Serialize for QSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        QSeriesRepr {
            denom: self.denom,
            lead: format_q(&self.lead()),
            prec: format_q(&self.prec()),
            coeffs: self.coeffs.iter().map(format_q).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as DeError;
        let repr = QSeriesRepr::deserialize(deserializer)?;
        if repr.denom < 1 {
            return Err(D::Error::custom("denom must be a positive integer"));
        }
        let lead = parse_q(&repr.lead).map_err(D::Error::custom)?;
        let prec = parse_q(&repr.prec).map_err(D::Error::custom)?;
        let lead_num = on_grid(&lead, repr.denom)
            .ok_or_else(|| D::Error::custom("lead is not a multiple of 1/denom"))?;
        let prec_num = on_grid(&prec, repr.denom)
            .ok_or_else(|| D::Error::custom("prec is not a multiple of 1/denom"))?;
        if prec_num < lead_num {
            return Err(D::Error::custom("prec below lead"));
        }
        if repr.coeffs.len() != (prec_num - lead_num) as usize {
            return Err(D::Error::custom("coeffs length does not match [lead, prec)"));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| parse_q(s).map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(QSeries::from_grid(repr.denom, lead_num, prec_num, coeffs))
    }
}
