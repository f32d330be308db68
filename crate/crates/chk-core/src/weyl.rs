//! The Weyl algebra on `t_0, …, t_{l−1}` in normal order, and the
//! commutative ring of the zero fibre of the moment map.

use crate::linalg::{rank_mod_p, rref};
use crate::rational::{fmt_q, Q};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("symbol of the zero element")]
    ZeroSymbol,
    #[error("expected a monomial, got {0} terms")]
    NotMonomial(usize),
    #[error("weight {0:?} does not sum to zero")]
    WeightSum(Vec<i64>),
    #[error("basis is not closed under the cycle at bidegree {0:?}")]
    NotClosed((u32, u32)),
}

pub type GLWeight = Vec<i64>;

/// `w_j = m_{j+1} − m_j` for a shift vector `m = a − c`.
pub fn shift_weight(m: &[i64]) -> GLWeight {
    let l = m.len();
    (0..l).map(|j| m[(j + 1) % l] - m[j]).collect()
}

/// `t^a ∂^c`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct WeylMonomial {
    pub a: Vec<u32>,
    pub c: Vec<u32>,
}

impl WeylMonomial {
    pub fn one(l: usize) -> Self {
        Self { a: vec![0; l], c: vec![0; l] }
    }

    /// `τ^m`: `t_i^{m_i}` for `m_i > 0`, `∂_i^{−m_i}` for `m_i < 0`.
    pub fn from_shift(m: &[i64]) -> Self {
        Self {
            a: m.iter().map(|&x| x.max(0) as u32).collect(),
            c: m.iter().map(|&x| (-x).max(0) as u32).collect(),
        }
    }

    pub fn l(&self) -> usize {
        self.a.len()
    }

    pub fn order(&self) -> u32 {
        self.c.iter().sum()
    }

    pub fn shift(&self) -> Vec<i64> {
        self.a.iter().zip(&self.c).map(|(&a, &c)| a as i64 - c as i64).collect()
    }

    pub fn gl_weight(&self) -> GLWeight {
        shift_weight(&self.shift())
    }

    /// Adjoint degree: `+1` per `t`, `−1` per `∂`.
    pub fn degree(&self) -> i64 {
        self.shift().iter().sum()
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct WeylElement {
    l: usize,
    terms: BTreeMap<WeylMonomial, Q>,
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

impl WeylElement {
    pub fn zero(l: usize) -> Self {
        Self { l, terms: BTreeMap::new() }
    }

    pub fn one(l: usize) -> Self {
        Self::from_monomial(WeylMonomial::one(l), Q::one())
    }

    pub fn constant(l: usize, c: Q) -> Self {
        Self::from_monomial(WeylMonomial::one(l), c)
    }

    pub fn from_monomial(m: WeylMonomial, coeff: Q) -> Self {
        let mut x = Self::zero(m.l());
        x.add_term(m, coeff);
        x
    }

    pub fn monomial(a: Vec<u32>, c: Vec<u32>) -> Self {
        assert_eq!(a.len(), c.len());
        Self::from_monomial(WeylMonomial { a, c }, Q::one())
    }

    pub fn t(l: usize, i: usize) -> Self {
        let mut m = WeylMonomial::one(l);
        m.a[i] = 1;
        Self::from_monomial(m, Q::one())
    }

    pub fn d(l: usize, i: usize) -> Self {
        let mut m = WeylMonomial::one(l);
        m.c[i] = 1;
        Self::from_monomial(m, Q::one())
    }

    /// `Θ_i = t_i ∂_i`.
    pub fn euler(l: usize, i: usize) -> Self {
        let mut m = WeylMonomial::one(l);
        m.a[i] = 1;
        m.c[i] = 1;
        Self::from_monomial(m, Q::one())
    }

    /// `τ^m`: `t_i^{m_i}` for `m_i > 0`, `∂_i^{−m_i}` for `m_i < 0`.
    pub fn tau_power(m: &[i64]) -> Self {
        let a = m.iter().map(|&x| x.max(0) as u32).collect();
        let c = m.iter().map(|&x| (-x).max(0) as u32).collect();
        Self::monomial(a, c)
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn add_term(&mut self, m: WeylMonomial, coeff: Q) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeylMonomial, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: &Q) -> Self {
        let mut out = Self::zero(self.l);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self, WeylError> {
        if self.l != other.l {
            return Err(WeylError::RankMismatch(self.l, other.l));
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, WeylError> {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, WeylError> {
        weyl_multiply(self, other)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(self.l), |acc, _| weyl_multiply(&acc, self).unwrap())
    }

    /// Largest total `∂`-degree.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(WeylMonomial::order).max()
    }

    pub fn gl_weight(&self) -> Result<GLWeight, WeylError> {
        if self.terms.len() != 1 {
            return Err(WeylError::NotMonomial(self.terms.len()));
        }
        Ok(self.terms.keys().next().unwrap().gl_weight())
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("({}) t^{:?} d^{:?}", fmt_q(c), m.a, m.c))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for WeylElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            a: &'a [u32],
            c: &'a [u32],
            coeff: String,
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            seq.serialize_element(&Term { a: &m.a, c: &m.c, coeff: fmt_q(c) })?;
        }
        seq.end()
    }
}

/// Product in normal order, using `∂^c t^{a'} = Σ_k k!·C(c,k)·C(a',k)·t^{a'−k}∂^{c−k}` per variable.
pub fn weyl_multiply(x: &WeylElement, y: &WeylElement) -> Result<WeylElement, WeylError> {
    if x.l != y.l {
        return Err(WeylError::RankMismatch(x.l, y.l));
    }
    let l = x.l;
    let mut out = WeylElement::zero(l);
    for (m1, c1) in &x.terms {
        for (m2, c2) in &y.terms {
            let mut partial: Vec<(Vec<u32>, Vec<u32>, BigInt)> = vec![(Vec::new(), Vec::new(), BigInt::one())];
            for i in 0..l {
                let (c, a2) = (m1.c[i], m2.a[i]);
                let mut next = Vec::with_capacity(partial.len() * (c.min(a2) as usize + 1));
                for k in 0..=c.min(a2) {
                    let w = factorial(k) * binomial(c, k) * binomial(a2, k);
                    for (a, cc, coeff) in &partial {
                        let mut a = a.clone();
                        let mut cc = cc.clone();
                        a.push(m1.a[i] + a2 - k);
                        cc.push(c - k + m2.c[i]);
                        next.push((a, cc, coeff * &w));
                    }
                }
                partial = next;
            }
            let base = c1 * c2;
            for (a, c, k) in partial {
                out.add_term(WeylMonomial { a, c }, &base * Q::from_integer(k));
            }
        }
    }
    Ok(out)
}

/// Top-order part with `∂_i ↦ ξ_i`, in canonical form.
pub fn weyl_symbol(x: &WeylElement) -> Result<CommPoly, WeylError> {
    let top = x.order().ok_or(WeylError::ZeroSymbol)?;
    let mut out = CommPoly::zero(x.l);
    for (m, c) in x.terms() {
        if m.order() == top {
            out.add_term(CommMonomial::new(0, m.a.clone(), m.c.clone()), c.clone());
        }
    }
    Ok(out)
}

/// Canonical monomial `u^s t^a ξ^c` of `C[μ⁻¹(0)]`, `u = t_0ξ_0`, `a_i c_i = 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CommMonomial {
    pub s: u32,
    pub a: Vec<u32>,
    pub c: Vec<u32>,
}

impl CommMonomial {
    /// Canonicalizes `u^s t^a ξ^c` by moving every pair `t_iξ_i` into `u`.
    pub fn new(s: u32, mut a: Vec<u32>, mut c: Vec<u32>) -> Self {
        assert_eq!(a.len(), c.len());
        let mut s = s;
        for i in 0..a.len() {
            let p = a[i].min(c[i]);
            s += p;
            a[i] -= p;
            c[i] -= p;
        }
        Self { s, a, c }
    }

    pub fn one(l: usize) -> Self {
        Self { s: 0, a: vec![0; l], c: vec![0; l] }
    }

    pub fn u(l: usize) -> Self {
        Self { s: 1, a: vec![0; l], c: vec![0; l] }
    }

    pub fn t(l: usize, i: usize) -> Self {
        let mut m = Self::one(l);
        m.a[i] = 1;
        m
    }

    pub fn xi(l: usize, i: usize) -> Self {
        let mut m = Self::one(l);
        m.c[i] = 1;
        m
    }

    /// `t_0 t_1 ⋯ t_{l−1}`.
    pub fn cycle(l: usize) -> Self {
        Self { s: 0, a: vec![1; l], c: vec![0; l] }
    }

    /// `u^s` times the canonical split of the shift `m` into `t^{m⁺} ξ^{m⁻}`.
    pub fn from_shift(s: u32, m: &[i64]) -> Self {
        Self {
            s,
            a: m.iter().map(|&x| x.max(0) as u32).collect(),
            c: m.iter().map(|&x| (-x).max(0) as u32).collect(),
        }
    }

    pub fn l(&self) -> usize {
        self.a.len()
    }

    pub fn bidegree(&self) -> (u32, u32) {
        (self.s + self.a.iter().sum::<u32>(), self.s + self.c.iter().sum::<u32>())
    }

    pub fn shift(&self) -> Vec<i64> {
        self.a.iter().zip(&self.c).map(|(&a, &c)| a as i64 - c as i64).collect()
    }

    pub fn gl_weight(&self) -> GLWeight {
        shift_weight(&self.shift())
    }

    /// Adjoint degree: `t ↦ +1`, `ξ ↦ −1`.
    pub fn degree(&self) -> i64 {
        self.shift().iter().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        comm_multiply(self, other)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(self.l()), |acc, _| comm_multiply(&acc, self))
    }

    /// Value at a point of `μ⁻¹(0)` over `F_p`.
    pub fn eval_mod_p(&self, point: &MuZeroPoint, prime: u64) -> u64 {
        let mut v = crate::linalg::pow_mod(point.u, self.s as u64, prime);
        for i in 0..self.l() {
            v = v * crate::linalg::pow_mod(point.a[i], self.a[i] as u64, prime) % prime;
            v = v * crate::linalg::pow_mod(point.b[i], self.c[i] as u64, prime) % prime;
        }
        v
    }
}

pub fn comm_multiply(x: &CommMonomial, y: &CommMonomial) -> CommMonomial {
    let a = x.a.iter().zip(&y.a).map(|(p, q)| p + q).collect();
    let c = x.c.iter().zip(&y.c).map(|(p, q)| p + q).collect();
    CommMonomial::new(x.s + y.s, a, c)
}

/// A polynomial in canonical monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommPoly {
    l: usize,
    terms: BTreeMap<CommMonomial, Q>,
}

impl CommPoly {
    pub fn zero(l: usize) -> Self {
        Self { l, terms: BTreeMap::new() }
    }

    pub fn from_monomial(m: CommMonomial, c: Q) -> Self {
        let mut p = Self::zero(m.l());
        p.add_term(m, c);
        p
    }

    pub fn add_term(&mut self, m: CommMonomial, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CommMonomial, &Q)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.l);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(comm_multiply(m1, m2), c1 * c2);
            }
        }
        out
    }
}

/// A point of `μ⁻¹(0)` on the patch `a_i ≠ 0`, with `b_i = p / a_i`, over `F_prime`.
#[derive(Debug, Clone)]
pub struct MuZeroPoint {
    pub a: Vec<u64>,
    pub b: Vec<u64>,
    pub u: u64,
}

impl MuZeroPoint {
    pub fn new(a: Vec<u64>, p: u64, prime: u64) -> Self {
        let b = a.iter().map(|&x| p % prime * crate::linalg::inv_mod(x, prime) % prime).collect();
        Self { a, b, u: p % prime }
    }
}

/// Evaluates every monomial at every point and returns the rank over `F_prime`.
pub fn evaluation_rank(monomials: &[CommMonomial], points: &[MuZeroPoint], prime: u64) -> usize {
    let rows = monomials.iter().map(|m| points.iter().map(|p| m.eval_mod_p(p, prime)).collect()).collect();
    rank_mod_p(rows, prime)
}

/// Every canonical monomial in `l` variables with bidegree `≤ cap`.
pub fn all_canonical_monomials(l: usize, cap: (u32, u32)) -> Vec<CommMonomial> {
    let bound = cap.0.max(cap.1) as i64;
    let mut out = Vec::new();
    let mut m = vec![-bound; l];
    loop {
        let pos: i64 = m.iter().filter(|&&x| x > 0).sum();
        let neg: i64 = -m.iter().filter(|&&x| x < 0).sum::<i64>();
        if pos <= cap.0 as i64 && neg <= cap.1 as i64 {
            let smax = (cap.0 as i64 - pos).min(cap.1 as i64 - neg);
            for s in 0..=smax {
                out.push(CommMonomial::from_shift(s as u32, &m));
            }
        }
        let mut i = 0;
        while i < l && m[i] == bound {
            m[i] = -bound;
            i += 1;
        }
        if i == l {
            break;
        }
        m[i] += 1;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemiInvariantMember {
    pub s: u32,
    pub k: i64,
    pub monomial: CommMonomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemiInvariantBasis {
    pub weight: GLWeight,
    pub base_shift: Vec<i64>,
    pub cap: (u32, u32),
    pub members: Vec<SemiInvariantMember>,
}

impl SemiInvariantBasis {
    pub fn monomials(&self) -> Vec<CommMonomial> {
        self.members.iter().map(|m| m.monomial.clone()).collect()
    }

    pub fn count_by_bidegree(&self) -> BTreeMap<(u32, u32), usize> {
        let mut out = BTreeMap::new();
        for m in &self.members {
            *out.entry(m.monomial.bidegree()).or_insert(0) += 1;
        }
        out
    }
}

/// `m_0 = 0`, `m_{j+1} = m_j + w_j`.
pub fn base_shift(w: &[i64]) -> Result<Vec<i64>, WeylError> {
    if w.iter().sum::<i64>() != 0 {
        return Err(WeylError::WeightSum(w.to_vec()));
    }
    let mut m = vec![0i64; w.len()];
    for j in 1..w.len() {
        m[j] = m[j - 1] + w[j - 1];
    }
    Ok(m)
}

/// All canonical monomials of weight `w` with bidegree `≤ cap`.
pub fn semi_invariant_basis(w: &[i64], cap: (u32, u32)) -> Result<SemiInvariantBasis, WeylError> {
    let base = base_shift(w)?;
    let lo = *base.iter().min().unwrap();
    let hi = *base.iter().max().unwrap();
    let mut members = Vec::new();
    for k in (-(cap.1 as i64) - hi)..=(cap.0 as i64 - lo) {
        let m: Vec<i64> = base.iter().map(|x| x + k).collect();
        let pos: i64 = m.iter().filter(|&&x| x > 0).sum();
        let neg: i64 = -m.iter().filter(|&&x| x < 0).sum::<i64>();
        if pos > cap.0 as i64 || neg > cap.1 as i64 {
            continue;
        }
        let smax = (cap.0 as i64 - pos).min(cap.1 as i64 - neg);
        for s in 0..=smax as u32 {
            members.push(SemiInvariantMember { s, k, monomial: CommMonomial::from_shift(s, &m) });
        }
    }
    members.sort_by(|x, y| x.monomial.bidegree().cmp(&y.monomial.bidegree()).then(x.k.cmp(&y.k)));
    Ok(SemiInvariantBasis { weight: w.to_vec(), base_shift: base, cap, members })
}

/// Monomials whose classes form a basis of the quotient by `t_0⋯t_{l−1}`, bidegree by bidegree.
pub fn quotient_basis_mod_cycle(basis: &[CommMonomial], cap: (u32, u32)) -> Result<Vec<CommMonomial>, WeylError> {
    let Some(first) = basis.first() else {
        return Ok(Vec::new());
    };
    let l = first.l();
    let cycle = CommMonomial::cycle(l);
    let mut by_deg: BTreeMap<(u32, u32), Vec<CommMonomial>> = BTreeMap::new();
    for m in basis {
        by_deg.entry(m.bidegree()).or_default().push(m.clone());
    }
    let mut out = Vec::new();
    for (deg, monos) in &by_deg {
        if deg.0 > cap.0 || deg.1 > cap.1 {
            continue;
        }
        let index: BTreeMap<&CommMonomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows = Vec::new();
        if deg.0 >= l as u32 {
            for p in by_deg.get(&(deg.0 - l as u32, deg.1)).into_iter().flatten() {
                let img = comm_multiply(p, &cycle);
                let col = *index.get(&img).ok_or(WeylError::NotClosed(*deg))?;
                let mut row = vec![Q::zero(); monos.len()];
                row[col] = Q::one();
                rows.push(row);
            }
        }
        let pivots: BTreeSet<usize> = rref(&mut rows).into_iter().collect();
        out.extend(monos.iter().enumerate().filter(|(i, _)| !pivots.contains(i)).map(|(_, m)| m.clone()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn multiply_examples() {
        let l = 2;
        let prod = weyl_multiply(&WeylElement::d(l, 0), &WeylElement::t(l, 0)).unwrap();
        assert_eq!(prod, WeylElement::euler(l, 0).add(&WeylElement::one(l)).unwrap());
        let lhs = weyl_multiply(&WeylElement::euler(l, 1), &WeylElement::t(l, 1)).unwrap();
        let rhs = WeylElement::monomial(vec![0, 2], vec![0, 1]).add(&WeylElement::t(l, 1)).unwrap();
        assert_eq!(lhs, rhs);
        let e0 = WeylElement::euler(l, 0);
        let e1 = WeylElement::euler(l, 1);
        assert_eq!(e0.mul(&e1).unwrap(), e1.mul(&e0).unwrap());
        assert_eq!(
            WeylElement::t(2, 0).mul(&WeylElement::t(3, 0)),
            Err(WeylError::RankMismatch(2, 3))
        );
    }

    #[test]
    fn symbol_examples() {
        let l = 2;
        let x = WeylElement::euler(l, 0).add(&WeylElement::one(l)).unwrap();
        assert_eq!(weyl_symbol(&x).unwrap(), CommPoly::from_monomial(CommMonomial::u(l), q(1)));
        let x = WeylElement::monomial(vec![2, 0], vec![0, 0]);
        assert_eq!(
            weyl_symbol(&x).unwrap(),
            CommPoly::from_monomial(CommMonomial::new(0, vec![2, 0], vec![0, 0]), q(1))
        );
        let x = WeylElement::monomial(vec![0, 0], vec![1, 1]).add(&WeylElement::t(l, 0)).unwrap();
        assert_eq!(
            weyl_symbol(&x).unwrap(),
            CommPoly::from_monomial(CommMonomial::new(0, vec![0, 0], vec![1, 1]), q(1))
        );
        assert_eq!(weyl_symbol(&WeylElement::zero(2)), Err(WeylError::ZeroSymbol));
    }

    #[test]
    fn weight_examples() {
        assert_eq!(WeylElement::t(3, 0).gl_weight().unwrap(), vec![-1, 0, 1]);
        assert_eq!(CommMonomial::u(3).gl_weight(), vec![0, 0, 0]);
        assert_eq!(CommMonomial::new(0, vec![1, 0], vec![0, 1]).gl_weight(), vec![-2, 2]);
        let two = WeylElement::t(2, 0).add(&WeylElement::t(2, 1)).unwrap();
        assert_eq!(two.gl_weight(), Err(WeylError::NotMonomial(2)));
    }

    #[test]
    fn comm_multiply_examples() {
        let x = CommMonomial::new(0, vec![1, 0], vec![0, 1]);
        let y = CommMonomial::new(0, vec![0, 1], vec![1, 0]);
        assert_eq!(comm_multiply(&x, &y), CommMonomial::u(2).pow(2));
        let ut = comm_multiply(&CommMonomial::u(2), &CommMonomial::t(2, 0));
        assert_eq!(ut, CommMonomial { s: 1, a: vec![1, 0], c: vec![0, 0] });
        assert_eq!(CommMonomial::new(0, vec![0, 1], vec![0, 1]), CommMonomial::u(2));
    }

    #[test]
    fn semi_invariant_examples() {
        // 1, u, u^2, t_0t_1, xi_0xi_1 under the (s + Σa, s + Σc) bidegree
        let b = semi_invariant_basis(&[0, 0], (2, 2)).unwrap();
        assert_eq!(b.members.len(), 5);
        assert_eq!(semi_invariant_basis(&[0, 0], (4, 4)).unwrap().members.len(), 13);
        let b = semi_invariant_basis(&[-1, 1], (1, 0)).unwrap();
        assert_eq!(b.monomials(), vec![CommMonomial::t(2, 0)]);
        assert_eq!(semi_invariant_basis(&[0, 0, 0], (0, 0)).unwrap().members.len(), 1);
        assert!(semi_invariant_basis(&[-1, 1, 0], (0, 0)).unwrap().members.is_empty());
        assert!(semi_invariant_basis(&[1, 1], (2, 2)).is_err());
    }

    #[test]
    fn quotient_weight_zero() {
        let cap = (4, 4);
        let b = semi_invariant_basis(&[0, 0], cap).unwrap();
        let kept = quotient_basis_mod_cycle(&b.monomials(), cap).unwrap();
        // survivors: u^s (xi_0 xi_1)^k with s < 2
        for m in &kept {
            assert!(m.a.iter().all(|&x| x == 0) && m.s < 2, "{m:?}");
        }
        assert!(kept.contains(&CommMonomial::u(2)));
        assert!(!kept.contains(&CommMonomial::u(2).pow(2)));
        assert!(kept.contains(&CommMonomial::new(0, vec![0, 0], vec![2, 2])));
        assert!(!kept.contains(&CommMonomial::cycle(2)));
    }

    #[test]
    fn quotient_detects_unclosed_input() {
        let input = vec![CommMonomial::cycle(2)];
        assert_eq!(quotient_basis_mod_cycle(&input, (4, 4)).unwrap(), input);
        let input = vec![CommMonomial::one(2), CommMonomial::new(0, vec![2, 0], vec![0, 0])];
        assert_eq!(quotient_basis_mod_cycle(&input, (4, 4)), Err(WeylError::NotClosed((2, 0))));
    }
}
