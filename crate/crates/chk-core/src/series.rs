//! Laurent polynomials and truncated Laurent series with integer coefficients.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

/// A Laurent polynomial in one variable.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Laurent {
    coeffs: BTreeMap<i64, i64>,
}

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(exp: i64, coeff: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn add_term(&mut self, exp: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let e = self.coeffs.entry(exp).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.coeffs.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Multiply by `q^k`.
    pub fn shifted(&self, k: i64) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(&e, &c)| (e + k, c)).collect() }
    }

    /// Sum of all coefficients (evaluation at q = 1).
    pub fn at_one(&self) -> i64 {
        self.coeffs.values().sum()
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

/// A truncated Laurent series: only coefficients with exponent in `window` are meaningful.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncatedSeries {
    pub var: String,
    pub window: (i64, i64),
    pub coeffs: BTreeMap<i64, i64>,
}

impl TruncatedSeries {
    pub fn new(var: &str, window: (i64, i64)) -> Self {
        Self { var: var.to_string(), window, coeffs: BTreeMap::new() }
    }

    pub fn add_term(&mut self, exp: i64, coeff: i64) {
        if exp < self.window.0 || exp > self.window.1 || coeff == 0 {
            return;
        }
        let e = self.coeffs.entry(exp).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.coeffs.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    /// Expands `num / (1 - q^{-step})` (step > 0) inside `window` as prefix sums.
    pub fn from_rational_down(num: &Laurent, step: i64, window: (i64, i64)) -> Self {
        assert!(step > 0);
        let mut out = Self::new("q", window);
        for exp in window.0..=window.1 {
            let mut c = 0;
            for (e, k) in num.terms() {
                if e >= exp && (e - exp) % step == 0 {
                    c += k;
                }
            }
            out.add_term(exp, c);
        }
        out
    }

    /// The `n` exponents ending at `top`.
    pub fn top_window(top: i64, n: usize) -> (i64, i64) {
        (top - n as i64 + 1, top)
    }

    /// First exponent in the common window where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<i64> {
        let lo = self.window.0.max(other.window.0);
        let hi = self.window.1.min(other.window.1);
        (lo..=hi).rev().find(|&e| self.coeff(e) != other.coeff(e))
    }

    pub fn agrees_with(&self, other: &Self) -> bool {
        self.window == other.window && self.first_difference(other).is_none()
    }
}

/// A Laurent polynomial in two variables (q, t).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BiLaurent {
    coeffs: BTreeMap<(i64, i64), i64>,
}

impl BiLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(q: i64, t: i64, coeff: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(q, t, coeff);
        p
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn add_term(&mut self, q: i64, t: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let e = self.coeffs.entry((q, t)).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.coeffs.remove(&(q, t));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `1 - q^a t^b`.
    pub fn one_minus(a: i64, b: i64) -> Self {
        let mut p = Self::one();
        p.add_term(a, b, -1);
        p
    }

    /// Substitute `t = q^{-1}`.
    pub fn specialize(&self) -> Laurent {
        let mut out = Laurent::zero();
        for ((a, b), c) in self.terms() {
            out.add_term(a - b, c);
        }
        out
    }

    pub fn product<'a>(factors: impl IntoIterator<Item = &'a BiLaurent>) -> BiLaurent {
        factors.into_iter().fold(BiLaurent::one(), |acc, f| &acc * f)
    }
}

impl Add for &BiLaurent {
    type Output = BiLaurent;
    fn add(self, rhs: &BiLaurent) -> BiLaurent {
        let mut out = self.clone();
        for ((a, b), c) in rhs.terms() {
            out.add_term(a, b, c);
        }
        out
    }
}

impl Sub for &BiLaurent {
    type Output = BiLaurent;
    fn sub(self, rhs: &BiLaurent) -> BiLaurent {
        self + &(-rhs)
    }
}

impl Neg for &BiLaurent {
    type Output = BiLaurent;
    fn neg(self) -> BiLaurent {
        BiLaurent { coeffs: self.coeffs.iter().map(|(&e, &c)| (e, -c)).collect() }
    }
}

impl Mul for &BiLaurent {
    type Output = BiLaurent;
    fn mul(self, rhs: &BiLaurent) -> BiLaurent {
        let mut out = BiLaurent::zero();
        for ((a1, b1), c1) in self.terms() {
            for ((a2, b2), c2) in rhs.terms() {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_expansion() {
        // (q^2 + q^{-1}) / (1 - q^{-1})
        let mut num = Laurent::monomial(2, 1);
        num.add_term(-1, 1);
        let s = TruncatedSeries::from_rational_down(&num, 1, (-3, 2));
        let got: Vec<i64> = (-3..=2).rev().map(|e| s.coeff(e)).collect();
        assert_eq!(got, vec![1, 1, 1, 2, 2, 2]);
    }

    #[test]
    fn step_expansion() {
        let s = TruncatedSeries::from_rational_down(&Laurent::one(), 2, (-5, 0));
        let got: Vec<i64> = (-5..=0).map(|e| s.coeff(e)).collect();
        assert_eq!(got, vec![0, 1, 0, 1, 0, 1]);
    }

    #[test]
    fn bi_specialize() {
        let s = BiLaurent::monomial(2, 3, 5).specialize();
        assert_eq!(s, Laurent::monomial(-1, 5));
        let p = &BiLaurent::one_minus(1, 1) * &BiLaurent::monomial(2, 3, 5);
        assert!(p.specialize().is_zero());
    }
}
