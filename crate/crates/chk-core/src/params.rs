//! Parameter-space combinatorics for the cyclic quiver with `l` vertices.
//!
//! Deformation parameters `λ` are exact rational vectors summing to 1,
//! stability parameters `θ` are integer vectors summing to 0. Every interval
//! `i, i+1, …, j−1` is read cyclically.
//!
//! ```
//! use chk_core::params::{cyclic_sum, theta_order, StabParam};
//!
//! assert_eq!(cyclic_sum(&[-2i64, 1, 1], 2, 1), -1);
//! let eta = theta_order(&StabParam::new(vec![-2, 1, 1]).unwrap()).unwrap();
//! assert_eq!(eta.eta(), &[1, 2, 0]);
//! assert_eq!(eta.order_string(), "0>2>1");
//! ```

use crate::rational::{is_integer, is_nonpositive_integer, q, serde_q_vec, Q};
use itertools::Itertools;
use num_traits::Zero;
use serde::{Serialize, Serializer};
use std::ops::AddAssign;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("rank l = {0} is not supported (need l >= 2)")]
    RankTooSmall(usize),
    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("lambda must sum to 1, sums to {0}")]
    LambdaSum(String),
    #[error("theta must sum to 0, sums to {0}")]
    ThetaSum(i64),
    #[error("theta {0:?} is not regular")]
    NotRegular(Vec<i64>),
    #[error("b_{k} = {value} is negative: weight and eta sequence do not match")]
    NegativeB { k: usize, value: i64 },
    #[error("index {index} out of range for l = {l}")]
    Index { index: usize, l: usize },
}

/// Number of vertices of the cyclic quiver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Rank(usize);

impl Rank {
    pub fn new(l: usize) -> Result<Self, ParamError> {
        if l < 2 {
            return Err(ParamError::RankTooSmall(l));
        }
        Ok(Rank(l))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

/// `v_i + v_{i+1} + … + v_{j−1}` with indices mod `l`; zero when `i = j`.
pub fn cyclic_sum<T>(v: &[T], i: usize, j: usize) -> T
where
    T: Clone + Zero + for<'a> AddAssign<&'a T>,
{
    let l = v.len();
    let mut acc = T::zero();
    let mut k = i % l;
    let j = j % l;
    while k != j {
        acc += &v[k];
        k = (k + 1) % l;
    }
    acc
}

/// A deformation parameter `λ` with `Σλ_i = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeformParam {
    #[serde(with = "serde_q_vec")]
    lambda: Vec<Q>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_opt_q_vec")]
    kappa: Option<Vec<Q>>,
}

fn ser_opt_q_vec<S: Serializer>(v: &Option<Vec<Q>>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => serde_q_vec::serialize(v, s),
        None => s.serialize_none(),
    }
}

impl DeformParam {
    pub fn new(lambda: Vec<Q>) -> Result<Self, ParamError> {
        Rank::new(lambda.len())?;
        let sum: Q = lambda.iter().sum();
        if sum != q(1) {
            return Err(ParamError::LambdaSum(crate::rational::fmt_q(&sum)));
        }
        Ok(Self { lambda, kappa: None })
    }

    /// `λ_i = κ_{i+1} − κ_i + 1/l`.
    pub fn from_kappa(kappa: Vec<Q>) -> Result<Self, ParamError> {
        let l = kappa.len();
        Rank::new(l)?;
        let inv = Q::new(1.into(), (l as i64).into());
        let lambda = (0..l).map(|i| &kappa[(i + 1) % l] - &kappa[i] + &inv).collect();
        let mut p = Self::new(lambda)?;
        p.kappa = Some(kappa);
        Ok(p)
    }

    /// Sets the last entry so that the vector sums to 1.
    pub fn completing(head: Vec<Q>) -> Result<Self, ParamError> {
        let mut lambda = head;
        let rest: Q = lambda.iter().sum();
        lambda.push(q(1) - rest);
        Self::new(lambda)
    }

    pub fn from_integers(v: &[i64]) -> Result<Self, ParamError> {
        Self::new(v.iter().map(|&x| q(x)).collect())
    }

    pub fn l(&self) -> usize {
        self.lambda.len()
    }

    pub fn lambda(&self) -> &[Q] {
        &self.lambda
    }

    pub fn kappa(&self) -> Option<&[Q]> {
        self.kappa.as_deref()
    }

    /// `λ̄ = λ − ε_0`.
    pub fn lambda_bar(&self) -> Vec<Q> {
        let mut v = self.lambda.clone();
        v[0] -= q(1);
        v
    }

    /// `λ + mθ`.
    pub fn shifted(&self, theta: &StabParam, m: i64) -> DeformParam {
        let lambda = self.lambda.iter().zip(theta.theta()).map(|(x, &t)| x + q(m * t)).collect();
        DeformParam { lambda, kappa: None }
    }

    /// True iff no cyclic `λ`-sum over `i ≠ j` is an integer.
    pub fn is_generic(&self) -> bool {
        pairs(self.l()).all(|(i, j)| !is_integer(&cyclic_sum(&self.lambda, i, j)))
    }
}

/// A stability parameter `θ` with `Σθ_i = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct StabParam {
    theta: Vec<i64>,
}

impl StabParam {
    pub fn new(theta: Vec<i64>) -> Result<Self, ParamError> {
        Rank::new(theta.len())?;
        let sum: i64 = theta.iter().sum();
        if sum != 0 {
            return Err(ParamError::ThetaSum(sum));
        }
        Ok(Self { theta })
    }

    pub fn l(&self) -> usize {
        self.theta.len()
    }

    pub fn theta(&self) -> &[i64] {
        &self.theta
    }

    pub fn scaled(&self, m: i64) -> Vec<i64> {
        self.theta.iter().map(|&t| m * t).collect()
    }

    /// `mθ + τ_i`.
    pub fn column_weight(&self, m: i64, i: usize) -> Vec<i64> {
        let mut w = self.scaled(m);
        for (x, y) in w.iter_mut().zip(tau(self.l(), i)) {
            *x += y;
        }
        w
    }
}

/// `τ_i = ε_i − ε_0`.
pub fn tau(l: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; l];
    v[i % l] += 1;
    v[0] -= 1;
    v
}

fn pairs(l: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..l).flat_map(move |i| (0..l).filter(move |&j| j != i).map(move |j| (i, j)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LambdaClass {
    pub in_rreg: bool,
    pub in_tilde_rreg: bool,
}

pub fn classify_lambda(lambda: &DeformParam) -> LambdaClass {
    let bar = lambda.lambda_bar();
    let l = lambda.l();
    let in_rreg = pairs(l).all(|(i, j)| !cyclic_sum(&bar, i, j).is_zero());
    let in_tilde_rreg = in_rreg && pairs(l).all(|(i, j)| !cyclic_sum(lambda.lambda(), i, j).is_zero());
    LambdaClass { in_rreg, in_tilde_rreg }
}

pub fn classify_theta(theta: &StabParam) -> bool {
    pairs(theta.l()).all(|(i, j)| cyclic_sum(theta.theta(), i, j) != 0)
}

fn require_regular(theta: &StabParam) -> Result<(), ParamError> {
    if classify_theta(theta) {
        Ok(())
    } else {
        Err(ParamError::NotRegular(theta.theta().to_vec()))
    }
}

/// Membership of `θ` in the alcove set attached to `λ`.
pub fn in_alcove_set(lambda: &DeformParam, theta: &StabParam) -> Result<bool, ParamError> {
    require_regular(theta)?;
    if lambda.l() != theta.l() {
        return Err(ParamError::LengthMismatch { expected: lambda.l(), got: theta.l() });
    }
    Ok(pairs(lambda.l()).all(|(i, j)| {
        !is_nonpositive_integer(&cyclic_sum(lambda.lambda(), i, j)) || cyclic_sum(theta.theta(), i, j) < 0
    }))
}

/// A relation on `{0, …, l−1}`; `get(i, j)` reads "i is above j".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    n: usize,
    cells: Vec<bool>,
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        Self { n, cells: vec![false; n * n] }
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut r = Self::empty(n);
        for (i, j) in pairs(n) {
            r.set(i, j, f(i, j));
        }
        r
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.cells.iter().all(|&c| !c)
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.cells[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        self.cells[i * self.n + j] = v;
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        pairs(self.n).filter(|&(i, j)| self.get(i, j)).collect()
    }

    pub fn transitive_closure(&self) -> Self {
        let mut r = self.clone();
        for k in 0..self.n {
            for i in 0..self.n {
                for j in 0..self.n {
                    if r.get(i, k) && r.get(k, j) && i != j {
                        r.set(i, j, true);
                    }
                }
            }
        }
        r
    }

    pub fn is_strict_total(&self) -> bool {
        pairs(self.n).all(|(i, j)| self.get(i, j) != self.get(j, i))
            && self.transitive_closure() == *self
    }

    /// Adjacency lists: entry `i` lists every `j` below `i`.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|i| (0..self.n).filter(|&j| i != j && self.get(i, j)).collect()).collect()
    }
}

impl Serialize for Relation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.adjacency().serialize(s)
    }
}

/// `i ≻ j` iff the cyclic `λ`-sum from `i` to `j` lies in `Z_{≤0}`.
pub fn rep_order(lambda: &DeformParam) -> Relation {
    Relation::from_fn(lambda.l(), |i, j| is_nonpositive_integer(&cyclic_sum(lambda.lambda(), i, j)))
}

/// The vertices listed from the minimum `η_1` up to the maximum `η_l`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EtaSequence {
    eta: Vec<usize>,
    order: Relation,
}

impl EtaSequence {
    pub fn l(&self) -> usize {
        self.eta.len()
    }

    /// `eta()[k − 1] = η_k`.
    pub fn eta(&self) -> &[usize] {
        &self.eta
    }

    /// `η_k` for `1 ≤ k ≤ l`.
    pub fn at(&self, k: usize) -> usize {
        self.eta[k - 1]
    }

    /// The `k` with `η_k = v`.
    pub fn position(&self, v: usize) -> usize {
        self.eta.iter().position(|&x| x == v).expect("vertex out of range") + 1
    }

    pub fn order(&self) -> &Relation {
        &self.order
    }

    pub fn order_string(&self) -> String {
        self.eta.iter().rev().map(|v| v.to_string()).join(">")
    }
}

/// `i ⊳ j` iff the cyclic `θ`-sum from `i` to `j` is negative.
pub fn theta_order(theta: &StabParam) -> Result<EtaSequence, ParamError> {
    require_regular(theta)?;
    let l = theta.l();
    let order = Relation::from_fn(l, |i, j| cyclic_sum(theta.theta(), i, j) < 0);
    let mut eta: Vec<usize> = (0..l).collect();
    eta.sort_by_key(|&v| (0..l).filter(|&w| w != v && order.get(v, w)).count());
    Ok(EtaSequence { eta, order })
}

/// `b_k = θ'_{η_k} + … + θ'_{η_{k+1}−1}` for `k = 1, …, l−1` (stored at index `k − 1`).
pub fn b_vector(theta_prime: &[i64], eta: &EtaSequence) -> Result<Vec<i64>, ParamError> {
    let l = eta.l();
    if theta_prime.len() != l {
        return Err(ParamError::LengthMismatch { expected: l, got: theta_prime.len() });
    }
    (1..l)
        .map(|k| {
            let b = cyclic_sum(theta_prime, eta.at(k), eta.at(k + 1));
            if b < 0 {
                Err(ParamError::NegativeB { k, value: b })
            } else {
                Ok(b)
            }
        })
        .collect()
}

/// `d_i = −Σ_{k=1}^{i} k θ_{k−1} + Σ_{j=i}^{l−2} (l−1−j) θ_j`.
pub fn d_vector(theta: &StabParam) -> Vec<i64> {
    let t = theta.theta();
    let l = t.len() as i64;
    (0..t.len())
        .map(|i| {
            let neg: i64 = (1..=i).map(|k| k as i64 * t[k - 1]).sum();
            let pos: i64 = (i..t.len().saturating_sub(1)).map(|j| (l - 1 - j as i64) * t[j]).sum();
            pos - neg
        })
        .collect()
}

/// Solves `c_{i+1} − c_i = lλ_i − 1` with `Σc_i = 1`.
pub fn euler_constants(lambda: &DeformParam) -> Vec<Q> {
    let l = lambda.l();
    let step: Vec<Q> = lambda.lambda().iter().map(|x| q(l as i64) * x - q(1)).collect();
    let mut offsets = vec![Q::zero(); l];
    for i in 1..l {
        offsets[i] = &offsets[i - 1] + &step[i - 1];
    }
    let c0 = (q(1) - offsets.iter().sum::<Q>()) / q(l as i64);
    offsets.into_iter().map(|o| o + &c0).collect()
}

/// The representative of the alcove whose order lists `eta` from the bottom.
///
/// With `x_{η_k} = k`, `θ_v = x_{v+1} − x_v`, so every
/// cyclic sum `i → j` equals `x_j − x_i`.
pub fn alcove_representative(eta: &[usize]) -> Result<StabParam, ParamError> {
    let l = eta.len();
    let mut x = vec![0i64; l];
    for (k, &v) in eta.iter().enumerate() {
        if v >= l {
            return Err(ParamError::Index { index: v, l });
        }
        x[v] = k as i64 + 1;
    }
    StabParam::new((0..l).map(|v| x[(v + 1) % l] - x[v]).collect())
}

/// One regular `θ` per total order, `l!` in all.
pub fn alcove_representatives(l: usize) -> Result<Vec<StabParam>, ParamError> {
    Rank::new(l)?;
    (0..l).permutations(l).map(|p| alcove_representative(&p)).collect()
}

/// `λ = nθ + ε_0`, so that `λ̄ = nθ`.
pub fn integer_regular_lambda(theta: &StabParam, n: i64) -> DeformParam {
    let mut lambda: Vec<Q> = theta.theta().iter().map(|&t| q(n * t)).collect();
    lambda[0] += q(1);
    DeformParam::new(lambda).expect("sums to 1 by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn theta(v: &[i64]) -> StabParam {
        StabParam::new(v.to_vec()).unwrap()
    }

    fn lam(v: &[(i64, i64)]) -> DeformParam {
        DeformParam::new(v.iter().map(|&(n, d)| frac(n, d)).collect()).unwrap()
    }

    #[test]
    fn cyclic_sum_examples() {
        assert_eq!(cyclic_sum(&[-2i64, 1, 1], 2, 1), -1);
        assert_eq!(cyclic_sum(&[-1i64, 1], 0, 1), -1);
        assert_eq!(cyclic_sum(&[-2i64, 1, 1], 1, 0), 2);
        assert_eq!(cyclic_sum(&[-2i64, 1, 1], 1, 1), 0);
    }

    #[test]
    fn rank_one_rejected() {
        assert_eq!(Rank::new(1), Err(ParamError::RankTooSmall(1)));
        assert!(StabParam::new(vec![0]).is_err());
        assert!(DeformParam::from_integers(&[1]).is_err());
        assert!(StabParam::new(vec![1, 1]).is_err());
        assert!(DeformParam::from_integers(&[1, 1]).is_err());
    }

    #[test]
    fn lambda_classes() {
        let c = classify_lambda(&lam(&[(3, 4), (1, 4)]));
        assert_eq!(c, LambdaClass { in_rreg: true, in_tilde_rreg: true });
        let c = classify_lambda(&lam(&[(1, 1), (0, 1)]));
        assert_eq!(c, LambdaClass { in_rreg: false, in_tilde_rreg: false });
        let c = classify_lambda(&lam(&[(1, 2), (1, 3), (1, 6)]));
        assert_eq!(c, LambdaClass { in_rreg: true, in_tilde_rreg: true });
    }

    #[test]
    fn theta_classes() {
        assert!(classify_theta(&theta(&[-1, 1])));
        assert!(!classify_theta(&theta(&[-1, 0, 1])));
        assert!(classify_theta(&theta(&[-2, 1, 1])));
    }

    #[test]
    fn alcove_membership() {
        let t = theta(&[-1, 1]);
        assert!(in_alcove_set(&lam(&[(3, 4), (1, 4)]), &t).unwrap());
        let l = DeformParam::from_integers(&[-1, 2]).unwrap();
        assert!(in_alcove_set(&l, &t).unwrap());
        assert!(!in_alcove_set(&l, &theta(&[1, -1])).unwrap());
        assert!(in_alcove_set(&l, &theta(&[-1, 0, 1])).is_err());
    }

    #[test]
    fn rep_order_examples() {
        assert!(rep_order(&lam(&[(3, 4), (1, 4)])).is_empty());
        let r = rep_order(&DeformParam::from_integers(&[-1, 2]).unwrap());
        assert_eq!(r.pairs(), vec![(0, 1)]);
        let r = rep_order(&DeformParam::from_integers(&[0, 2, -1]).unwrap());
        assert_eq!(r.pairs(), vec![(0, 1), (2, 0), (2, 1)]);
    }

    #[test]
    fn theta_order_examples() {
        let e = theta_order(&theta(&[-1, 1])).unwrap();
        assert_eq!(e.eta(), &[1, 0]);
        assert!(e.order().get(0, 1));
        let e = theta_order(&theta(&[-2, 1, 1])).unwrap();
        assert_eq!(e.eta(), &[1, 2, 0]);
        assert_eq!(e.order_string(), "0>2>1");
        let e = theta_order(&theta(&[2, -1, -1])).unwrap();
        assert_eq!(e.eta(), &[0, 2, 1]);
        assert_eq!(e.order_string(), "1>2>0");
    }

    #[test]
    fn b_vector_examples() {
        let e = theta_order(&theta(&[-1, 1])).unwrap();
        assert_eq!(b_vector(&[-1, 1], &e).unwrap(), vec![1]);
        assert_eq!(b_vector(&tau(2, 1), &e).unwrap(), vec![1]);
        let e = theta_order(&theta(&[-2, 1, 1])).unwrap();
        assert_eq!(b_vector(&[-2, 1, 1], &e).unwrap(), vec![1, 1]);
        assert_eq!(b_vector(&[1, -1], &theta_order(&theta(&[-1, 1])).unwrap()),
            Err(ParamError::NegativeB { k: 1, value: -1 }));
    }

    #[test]
    fn d_vector_examples() {
        assert_eq!(d_vector(&theta(&[-1, 1])), vec![-1, 1]);
        assert_eq!(d_vector(&theta(&[-2, 1, 1])), vec![-3, 3, 0]);
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_constants(&lam(&[(1, 2), (1, 2)])), vec![frac(1, 2), frac(1, 2)]);
        assert_eq!(euler_constants(&lam(&[(3, 4), (1, 4)])), vec![frac(1, 4), frac(3, 4)]);
    }

    #[test]
    fn kappa_origin() {
        let p = DeformParam::from_kappa(vec![q(0), frac(1, 4)]).unwrap();
        assert_eq!(p.lambda(), &[frac(3, 4), frac(1, 4)]);
        assert!(p.kappa().is_some());
    }

    #[test]
    fn alcove_representatives_cover_every_order() {
        for l in 2..=5 {
            let reps = alcove_representatives(l).unwrap();
            let n: usize = (1..=l).product();
            assert_eq!(reps.len(), n);
            let mut seen = std::collections::BTreeSet::new();
            for t in &reps {
                let e = theta_order(t).unwrap();
                assert!(e.order().is_strict_total());
                seen.insert(e.eta().to_vec());
            }
            assert_eq!(seen.len(), n);
        }
        assert_eq!(alcove_representative(&[1, 2, 0]).unwrap().theta(), &[-2, 1, 1]);
    }
}
