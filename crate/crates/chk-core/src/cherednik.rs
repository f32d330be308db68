//! The deformed preprojective algebra side, computed inside induced modules.
//!
//! A column module is `D / D·(Θ_{k+1} − Θ_k − ρ_k)_k` with `Θ_k = t_k∂_k`.
//! Its elements are finite sums `τ^m f(z)` where `τ^m` is the monomial with
//! `t_i^{m_i}` (`m_i > 0`) or `∂_i^{−m_i}` (`m_i < 0`) and `z` is the class of
//! `Θ_0`; in the quotient `Θ_j = z + σ_j` with `σ_j = ρ_0 + … + ρ_{j−1}`.
//!
//! Column `c` (the part `e_0 T e_c`) uses `ρ = λ − ε_c`; column 0 is the
//! induced module `M_λ` itself, with `ρ = λ̄`.

use crate::error::{Error, Result};
use crate::params::{
    b_vector, classify_lambda, cyclic_sum, d_vector, in_alcove_set, theta_order, tau,
    DeformParam, EtaSequence, StabParam,
};
use crate::quivergeom::g_exponents;
use crate::rational::{fmt_q, q, Q};
use crate::series::{Laurent, TruncatedSeries};
use crate::weyl::{shift_weight, weyl_multiply, GLWeight, WeylElement, WeylMonomial};
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

/// A polynomial in `z`; index `k` holds the coefficient of `z^k`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ZPoly(Vec<Q>);

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly(Vec::new())
    }

    pub fn constant(c: Q) -> Self {
        ZPoly(vec![c]).trimmed()
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    /// `z^k`.
    pub fn z_pow(k: usize) -> Self {
        let mut v = vec![Q::zero(); k + 1];
        v[k] = Q::one();
        ZPoly(v)
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let zero = Q::zero();
        ZPoly((0..n).map(|i| self.0.get(i).unwrap_or(&zero) + other.0.get(i).unwrap_or(&zero)).collect()).trimmed()
    }

    pub fn scale(&self, k: &Q) -> Self {
        ZPoly(self.0.iter().map(|c| c * k).collect()).trimmed()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut v = vec![Q::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        ZPoly(v).trimmed()
    }

    /// Multiply by `z + c`.
    pub fn mul_linear(&self, c: &Q) -> Self {
        let mut v = vec![Q::zero(); self.0.len() + 1];
        for (i, a) in self.0.iter().enumerate() {
            v[i + 1] += a;
            v[i] += a * c;
        }
        ZPoly(v).trimmed()
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.0.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
    }
}

/// Relation constants of one column module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleParam {
    lambda: DeformParam,
    column: usize,
    sigma: Vec<Q>,
}

impl ModuleParam {
    pub fn new(lambda: &DeformParam, column: usize) -> Self {
        let l = lambda.l();
        let mut rho = lambda.lambda().to_vec();
        rho[column % l] -= q(1);
        let mut sigma = vec![Q::zero(); l];
        for j in 1..l {
            sigma[j] = &sigma[j - 1] + &rho[j - 1];
        }
        Self { lambda: lambda.clone(), column: column % l, sigma }
    }

    pub fn lambda(&self) -> &DeformParam {
        &self.lambda
    }

    pub fn column(&self) -> usize {
        self.column
    }

    pub fn l(&self) -> usize {
        self.lambda.l()
    }

    /// `σ_j`, the constant with `Θ_j = z + σ_j`.
    pub fn sigma(&self, j: usize) -> &Q {
        &self.sigma[j]
    }
}

/// An element `Σ_m τ^m f_m(z)` of a column module.
#[derive(Clone, PartialEq, Eq)]
pub struct InducedElement {
    param: ModuleParam,
    terms: BTreeMap<Vec<i64>, ZPoly>,
}

impl fmt::Debug for InducedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[col {}]", self.param.column)?;
        for (m, p) in &self.terms {
            let c: Vec<String> = p.coeffs().iter().map(fmt_q).collect();
            write!(f, " τ^{m:?}({})", c.join(","))?;
        }
        Ok(())
    }
}

impl Serialize for InducedElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            shift: Vec<i64>,
            poly: Vec<String>,
        }
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(m, p)| Term { shift: m.clone(), poly: p.coeffs().iter().map(fmt_q).collect() })
            .collect();
        terms.serialize(s)
    }
}

impl InducedElement {
    pub fn zero(param: &ModuleParam) -> Self {
        Self { param: param.clone(), terms: BTreeMap::new() }
    }

    /// The class of `1`.
    pub fn generator(param: &ModuleParam) -> Self {
        Self::monomial(param, vec![0; param.l()], ZPoly::one())
    }

    pub fn monomial(param: &ModuleParam, m: Vec<i64>, f: ZPoly) -> Self {
        let mut x = Self::zero(param);
        x.add_poly(m, f);
        x
    }

    pub fn param(&self) -> &ModuleParam {
        &self.param
    }

    pub fn l(&self) -> usize {
        self.param.l()
    }

    pub fn column(&self) -> usize {
        self.param.column
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &ZPoly)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_poly(&mut self, m: Vec<i64>, f: ZPoly) {
        if f.is_zero() {
            return;
        }
        let e = self.terms.entry(m.clone()).or_default();
        *e = e.add(&f);
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, f) in &other.terms {
            out.add_poly(m.clone(), f.clone());
        }
        out
    }

    pub fn scale(&self, k: &Q) -> Self {
        let mut out = Self::zero(&self.param);
        for (m, f) in &self.terms {
            out.add_poly(m.clone(), f.scale(k));
        }
        out
    }

    pub fn weights(&self) -> Vec<GLWeight> {
        let mut w: Vec<GLWeight> = self.terms.keys().map(|m| shift_weight(m)).collect();
        w.dedup();
        w
    }

    pub fn is_homogeneous(&self, w: &[i64]) -> bool {
        self.terms.keys().all(|m| shift_weight(m) == w)
    }

    /// `t_i · x`.
    pub fn act_t(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.param);
        for (m, f) in &self.terms {
            let mut m2 = m.clone();
            m2[i] += 1;
            let f2 = if m[i] >= 0 {
                f.clone()
            } else {
                // t ∂^k = ∂^{k−1}(Θ − k + 1)
                f.mul_linear(&(self.param.sigma(i) + q(m[i] + 1)))
            };
            out.add_poly(m2, f2);
        }
        out
    }

    /// `∂_i · x`.
    pub fn act_d(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.param);
        for (m, f) in &self.terms {
            let mut m2 = m.clone();
            m2[i] -= 1;
            let f2 = if m[i] <= 0 {
                f.clone()
            } else {
                // ∂ t^k = t^{k−1}(Θ + k)
                f.mul_linear(&(self.param.sigma(i) + q(m[i])))
            };
            out.add_poly(m2, f2);
        }
        out
    }

    /// `t^a ∂^c · x`.
    pub fn act_monomial(&self, mono: &WeylMonomial) -> Self {
        let mut x = self.clone();
        for i in 0..self.l() {
            for _ in 0..mono.c[i] {
                x = x.act_d(i);
            }
        }
        for i in 0..self.l() {
            for _ in 0..mono.a[i] {
                x = x.act_t(i);
            }
        }
        x
    }

    pub fn act(&self, y: &WeylElement) -> Self {
        let mut out = Self::zero(&self.param);
        for (mono, c) in y.terms() {
            out = out.add(&self.act_monomial(mono).scale(c));
        }
        out
    }

    /// `y · self` where `y` is the canonical lift of `b`; equals `self.act(&b.lift())`.
    pub fn act_lift(&self, b: &InducedElement) -> Self {
        let mut out = Self::zero(&self.param);
        for (m, f) in &b.terms {
            let tau_m = WeylMonomial::from_shift(m);
            let mut power = self.clone();
            for c in f.coeffs() {
                if !c.is_zero() {
                    out = out.add(&power.act_monomial(&tau_m).scale(c));
                }
                power = power.act_d(0).act_t(0);
            }
        }
        out
    }

    /// Canonical preimage: `τ^m z^s ↦ τ^m Θ_0^s`.
    pub fn lift(&self) -> WeylElement {
        let l = self.l();
        let theta0 = WeylElement::euler(l, 0);
        let mut out = WeylElement::zero(l);
        for (m, f) in &self.terms {
            let tau_m = WeylElement::tau_power(m);
            let mut power = WeylElement::one(l);
            for c in f.coeffs() {
                if !c.is_zero() {
                    out = out.add(&weyl_multiply(&tau_m, &power).unwrap().scale(c)).unwrap();
                }
                power = weyl_multiply(&power, &theta0).unwrap();
            }
        }
        out
    }

    /// Substitutes `z = −σ_c` (so `Θ_c = 0`) at every shift.
    pub fn evaluate_at_column(&self) -> BTreeMap<Vec<i64>, Q> {
        let x = -self.param.sigma(self.param.column).clone();
        self.terms
            .iter()
            .map(|(m, f)| (m.clone(), f.eval(&x)))
            .filter(|(_, v)| !v.is_zero())
            .collect()
    }

    /// Image in the standard-module quotient of this column.
    pub fn project(&self) -> StandardVector {
        let c = self.param.column;
        let mut coeffs = BTreeMap::new();
        for (m, v) in self.evaluate_at_column() {
            if m[c] >= 0 {
                *coeffs.entry(m.iter().sum::<i64>()).or_insert_with(Q::zero) += v;
            }
        }
        coeffs.retain(|_, v: &mut Q| !v.is_zero());
        StandardVector { module: c, coeffs }
    }
}

/// Coefficients on the basis `A^p 𝟙_i`, keyed by `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardVector {
    pub module: usize,
    pub coeffs: BTreeMap<i64, Q>,
}

impl StandardVector {
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// Writes `t^a ∂^c` as `τ^m Π_i P_i(Θ_i)`.
fn euler_form(mono: &WeylMonomial) -> (Vec<i64>, Vec<(usize, i64)>) {
    let mut m = Vec::with_capacity(mono.l());
    let mut roots = Vec::new();
    for i in 0..mono.l() {
        let (a, c) = (mono.a[i] as i64, mono.c[i] as i64);
        if a >= c {
            m.push(a - c);
            roots.extend((0..c).map(|j| (i, j)));
        } else {
            m.push(a - c);
            roots.extend((0..a).map(|j| (i, c - a + j)));
        }
    }
    (m, roots)
}

/// Reduction into an arbitrary column module.
pub fn reduce_in(x: &WeylElement, param: &ModuleParam) -> InducedElement {
    let mut out = InducedElement::zero(param);
    for (mono, c) in x.terms() {
        let (m, roots) = euler_form(mono);
        let mut f = ZPoly::constant(c.clone());
        for (i, r) in roots {
            f = f.mul_linear(&(param.sigma(i) - q(r)));
        }
        out.add_poly(m, f);
    }
    out
}

/// Reduction into `M_λ`.
pub fn reduce_to_induced(x: &WeylElement, lambda: &DeformParam) -> InducedElement {
    reduce_in(x, &ModuleParam::new(lambda, 0))
}

/// `x · ∂_c`, from column `c − 1` to column `c`.
pub fn right_mul_d(x: &InducedElement, c: usize) -> Result<InducedElement> {
    let l = x.l();
    if x.column() != (c + l - 1) % l {
        return Err(Error::Weight(format!("right ∂_{c} needs column {}, got {}", (c + l - 1) % l, x.column())));
    }
    let y = weyl_multiply(&x.lift(), &WeylElement::d(l, c))?;
    Ok(reduce_in(&y, &ModuleParam::new(x.param.lambda(), c)))
}

/// `x · t_c`, from column `c` to column `c − 1`.
pub fn right_mul_t(x: &InducedElement, c: usize) -> Result<InducedElement> {
    let l = x.l();
    if x.column() != c {
        return Err(Error::Weight(format!("right t_{c} needs column {c}, got {}", x.column())));
    }
    let y = weyl_multiply(&x.lift(), &WeylElement::t(l, c))?;
    Ok(reduce_in(&y, &ModuleParam::new(x.param.lambda(), (c + l - 1) % l)))
}

/// A single-weight element of `M_λ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BElement {
    pub elem: InducedElement,
    pub weight: GLWeight,
}

impl BElement {
    pub fn new(elem: InducedElement, weight: GLWeight) -> Result<Self> {
        if elem.column() != 0 {
            return Err(Error::Weight(format!("B lives in column 0, got {}", elem.column())));
        }
        if !elem.is_homogeneous(&weight) {
            return Err(Error::Weight(format!("not homogeneous of weight {weight:?}: {:?}", elem.weights())));
        }
        Ok(Self { elem, weight })
    }

    pub fn from_weyl(x: &WeylElement, lambda: &DeformParam, weight: GLWeight) -> Result<Self> {
        Self::new(reduce_to_induced(x, lambda), weight)
    }
}

/// A single-weight element of a column module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColumnElement {
    pub elem: InducedElement,
    pub weight: GLWeight,
}

impl ColumnElement {
    pub fn new(elem: InducedElement, weight: GLWeight) -> Result<Self> {
        if !elem.is_homogeneous(&weight) {
            return Err(Error::Weight(format!("not homogeneous of weight {weight:?}: {:?}", elem.weights())));
        }
        Ok(Self { elem, weight })
    }

    pub fn column(&self) -> usize {
        self.elem.column()
    }
}

/// `b ⊗ w ↦ b·w`.
pub fn theta_map(b: &BElement, w: &ColumnElement) -> Result<ColumnElement> {
    if b.elem.param.lambda() != w.elem.param.lambda() {
        return Err(Error::Weight("B element and column element use different λ".into()));
    }
    let elem = w.elem.act_lift(&b.elem);
    let weight: GLWeight = b.weight.iter().zip(&w.weight).map(|(x, y)| x + y).collect();
    ColumnElement::new(elem, weight)
}

/// Shift of the column monomial `t_0 t_{l−1} ⋯ t_{v+1}` (empty for `v = 0`).
pub fn column_monomial_shift(l: usize, v: usize) -> Vec<i64> {
    let mut m = vec![0; l];
    if v != 0 {
        m[0] = 1;
        for x in m.iter_mut().skip(v + 1) {
            *x = 1;
        }
    }
    m
}

/// The class of the column monomial at vertex `v`, weight `τ_v`.
pub fn column_generator(lambda: &DeformParam, v: usize) -> ColumnElement {
    let l = lambda.l();
    let param = ModuleParam::new(lambda, v);
    let elem = InducedElement::monomial(&param, column_monomial_shift(l, v), ZPoly::one());
    ColumnElement::new(elem, tau(l, v)).expect("column monomial has weight τ_v")
}

/// `κ_i(p)` for `p = 1, …, p_max`, with `A*·A^p𝟙_i = κ_i(p) A^{p−1}𝟙_i`.
pub fn standard_action(lambda: &DeformParam, i: usize, p_max: usize) -> Vec<Q> {
    let l = lambda.l();
    let param = ModuleParam::new(lambda, i);
    let mut m = vec![0i64; l];
    let mut out = Vec::with_capacity(p_max);
    for p in 1..=p_max {
        let r = (i + p) % l;
        m[r] += 1;
        let v = InducedElement::monomial(&param, m.clone(), ZPoly::one()).act_d(r).project();
        out.push(v.coeffs.values().next().cloned().unwrap_or_else(Q::zero));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomInfo {
    pub dim: u8,
    #[serde(rename = "p")]
    pub embedding_degree: Option<u64>,
    pub n: Option<u64>,
}

/// Dimension of `Hom(Δ(j), Δ(i))`, with the singular vector's degree.
pub fn hom_dim(lambda: &DeformParam, i: usize, j: usize) -> HomInfo {
    let l = lambda.l();
    if i == j {
        return HomInfo { dim: 1, embedding_degree: Some(0), n: Some(0) };
    }
    let s = cyclic_sum(lambda.lambda(), i, j);
    if crate::rational::is_nonpositive_integer(&s) {
        let n = crate::rational::to_i64(&-s).unwrap() as u64;
        let p = n * l as u64 + ((j + l - i) % l) as u64;
        HomInfo { dim: 1, embedding_degree: Some(p), n: Some(n) }
    } else {
        HomInfo { dim: 0, embedding_degree: None, n: None }
    }
}

/// Smallest `p ≤ depth`, `p ≡ j − i (mod l)`, with `A*·A^p𝟙_i = 0`.
pub fn singular_vector_search(lambda: &DeformParam, i: usize, j: usize, depth: usize) -> Option<u64> {
    let l = lambda.l();
    let kappa = standard_action(lambda, i, depth);
    (1..=depth).find(|&p| (i + p) % l == j && kappa[p - 1].is_zero()).map(|p| p as u64)
}

/// Graded dimensions of `e_0Δ_λ(i)` by adjoint degree, for degrees in `[−l, n]`.
pub fn standard_column_quotient(lambda: &DeformParam, i: usize, n: i64) -> Result<BTreeMap<i64, usize>> {
    let l = lambda.l();
    let w = tau(l, i);
    let base = crate::weyl::base_shift(&w)?;
    let base_deg: i64 = base.iter().sum();
    let before = ModuleParam::new(lambda, (i + l - 1) % l);
    let mut dims = BTreeMap::new();
    for d in -(l as i64)..=n {
        dims.insert(d, 0);
        if (d - base_deg).rem_euclid(l as i64) != 0 {
            continue;
        }
        let k = (d - base_deg).div_euclid(l as i64);
        let mut m: Vec<i64> = base.iter().map(|x| x + k).collect();
        m[i] += 1;
        let image = right_mul_d(&InducedElement::monomial(&before, m, ZPoly::one()), i)?;
        let deg = image.terms().next().and_then(|(_, f)| f.degree()).unwrap_or(0);
        dims.insert(d, deg);
    }
    Ok(dims)
}

/// One checked statement of a verification record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub claim: String,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Claim {
    pub fn new(claim: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) -> Self {
        let witness = if ok { None } else { Some(witness()) };
        Self { claim: claim.into(), status: if ok { "pass" } else { "fail" }, witness }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

pub(crate) fn shift_regime(lambda: &DeformParam, theta: &StabParam) -> Result<(EtaSequence, Vec<i64>)> {
    if lambda.l() != theta.l() {
        return Err(Error::Regime(format!("λ has {} entries, θ has {}", lambda.l(), theta.l())));
    }
    let eta = theta_order(theta)?;
    if !classify_lambda(lambda).in_rreg {
        return Err(Error::Regime("λ is not regular".into()));
    }
    if !in_alcove_set(lambda, theta)? {
        return Err(Error::Regime("θ is not in the alcove set of λ".into()));
    }
    let b = b_vector(theta.theta(), &eta)?;
    Ok((eta, b))
}

/// The Weyl monomial `g̃_k(n)` of weight `θ'`.
pub fn g_tilde(eta: &EtaSequence, b: &[i64], k: usize, n: i64) -> WeylMonomial {
    let (a, c) = g_exponents(eta, b, k, n);
    WeylMonomial { a, c }
}

fn weyl_of(mono: &WeylMonomial) -> WeylElement {
    WeylElement::from_monomial(mono.clone(), Q::one())
}

/// `−(λ̄_{η_p} + … + λ̄_{η_i−1} + Σ_{q=p}^{k−1} b_q + n − 1)` multiplied over `p = 1, …, k`.
pub fn recursion_coefficient(lambda: &DeformParam, eta: &EtaSequence, b: &[i64], i: usize, k: usize, n: i64) -> Q {
    let bar = lambda.lambda_bar();
    let target = eta.at(i);
    (1..=k).fold(Q::one(), |acc, p| {
        let bsum: i64 = (p..k).map(|q| b[q - 1]).sum();
        acc * -(cyclic_sum(&bar, eta.at(p), target) + q(bsum + n - 1))
    })
}

/// `Π_{j=k+1}^{l} −(λ̄_{η_j} + … + λ̄_{η_i−1})`.
pub fn saturation_factor(lambda: &DeformParam, eta: &EtaSequence, i: usize, k: usize) -> Q {
    let bar = lambda.lambda_bar();
    ((k + 1)..=eta.l()).fold(Q::one(), |acc, j| acc * -cyclic_sum(&bar, eta.at(j), eta.at(i)))
}

#[derive(Clone, Debug, Serialize)]
pub struct ShiftImageReport {
    pub position: usize,
    pub vertex: usize,
    pub b: Vec<i64>,
    pub generator_degree: i64,
    pub standard_base_degree: i64,
    pub image_dims: BTreeMap<i64, usize>,
    pub target_dims: BTreeMap<i64, usize>,
    pub claims: Vec<Claim>,
}

impl ShiftImageReport {
    pub fn all_pass(&self) -> bool {
        self.claims.iter().all(Claim::passed)
    }
}

fn fmt_eval(v: &BTreeMap<Vec<i64>, Q>) -> String {
    let parts: Vec<String> = v.iter().map(|(m, x)| format!("{m:?}:{}", fmt_q(x))).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Range of `n` for `g̃_k(n)`: `0 ≤ n < b_k`, or `0 ≤ n ≤ n_top` for `k = l`.
fn n_range(b: &[i64], l: usize, k: usize, n_top: i64) -> std::ops::Range<i64> {
    if k == l {
        0..n_top + 1
    } else {
        0..b[k - 1]
    }
}

/// Checks the shift-functor statements for the target `Δ_λ(η_i)`, up to `n` degrees above the generator.
pub fn shift_image(lambda: &DeformParam, theta: &StabParam, i: usize, n: i64) -> Result<ShiftImageReport> {
    let (eta, b) = shift_regime(lambda, theta)?;
    let l = eta.l();
    if i == 0 || i > l {
        return Err(Error::Param(crate::params::ParamError::Index { index: i, l }));
    }
    let v = eta.at(i);
    let u = column_generator(lambda, v);
    let n_top = n / l as i64 + 2;
    let cycle = WeylElement::monomial(vec![1; l], vec![0; l]);

    let mut w: BTreeMap<(usize, i64), InducedElement> = BTreeMap::new();
    for k in 1..=l {
        for nn in n_range(&b, l, k, n_top) {
            w.insert((k, nn), u.elem.act_monomial(&g_tilde(&eta, &b, k, nn)));
        }
    }
    let proj: BTreeMap<(usize, i64), StandardVector> = w.iter().map(|(key, x)| (*key, x.project())).collect();

    let mut claims = Vec::new();
    for (&(k, nn), p) in &proj {
        let should_vanish = k > i || (k == i && nn >= 1);
        if should_vanish {
            claims.push(Claim::new(format!("w_{k}({nn}) = 0"), p.is_zero(), || format!("{:?}", p.coeffs)));
        } else if k < i || nn == 0 {
            claims.push(Claim::new(format!("w_{k}({nn}) != 0"), !p.is_zero(), || "zero".into()));
        }
    }

    // (t_0⋯t_{l−1}) w_k(n) = C_k(n) w_k(n−1), compared at Θ_v = 0
    for (&(k, nn), x) in &w {
        let prev = if nn >= 1 {
            w.get(&(k, nn - 1))
        } else if k >= 2 && b[k - 2] >= 1 {
            w.get(&(k - 1, b[k - 2] - 1))
        } else {
            None
        };
        let Some(prev) = prev else { continue };
        // g̃_k(0) = g̃_{k−1}(b_{k−1}), so the step below n = 0 uses level k − 1
        let c = if nn >= 1 {
            recursion_coefficient(lambda, &eta, &b, i, k, nn)
        } else {
            recursion_coefficient(lambda, &eta, &b, i, k - 1, b[k - 2])
        };
        let lhs = x.act(&cycle).evaluate_at_column();
        let rhs = prev.scale(&c).evaluate_at_column();
        let prev_label = if nn >= 1 { format!("w_{k}({})", nn - 1) } else { format!("w_{}({})", k - 1, b[k - 2] - 1) };
        claims.push(Claim::new(format!("cycle·w_{k}({nn}) = C·{prev_label}"), lhs == rhs, || {
            format!("lhs {} rhs {} C {}", fmt_eval(&lhs), fmt_eval(&rhs), fmt_q(&c))
        }));
    }

    // inserting Π_{j>k} Θ_{η_j} multiplies w_k(n) by the saturation factor
    for (&(k, nn), x) in &w {
        let mono = g_tilde(&eta, &b, k, nn);
        let dpart = WeylMonomial { a: vec![0; l], c: mono.c.clone() };
        let tpart = WeylMonomial { a: mono.a.clone(), c: vec![0; l] };
        let mut y = u.elem.act_monomial(&dpart);
        for j in (k + 1)..=l {
            y = y.act(&WeylElement::euler(l, eta.at(j)));
        }
        let y = y.act_monomial(&tpart).project();
        let factor = saturation_factor(lambda, &eta, i, k);
        let expect = x.scale(&factor).project();
        claims.push(Claim::new(format!("saturation w_{k}({nn})"), y == expect, || {
            format!("got {:?} expected {:?}", y.coeffs, expect.coeffs)
        }));
    }

    let top = proj[&(i, 0)].coeffs.keys().next().copied().unwrap_or(i64::MIN);
    let mut image: BTreeMap<i64, bool> = BTreeMap::new();
    let mut generated: BTreeMap<i64, bool> = BTreeMap::new();
    for (&(k, nn), x) in &w {
        let mut y = x.clone();
        loop {
            let p = y.project();
            let deg = y.terms().next().map(|(m, _)| m.iter().sum::<i64>());
            let Some(deg) = deg else { break };
            if deg > top + n {
                break;
            }
            if !p.is_zero() {
                image.insert(deg, true);
                if (k, nn) == (i, 0) {
                    generated.insert(deg, true);
                }
            }
            y = y.act(&cycle);
        }
    }
    let stray: Vec<i64> = image.keys().filter(|&&d| d < top || !generated.contains_key(&d)).copied().collect();
    claims.push(Claim::new(format!("w_{i}(0) generates up to degree {}", top + n), stray.is_empty(), || {
        format!("image degrees outside C[cycle]·w_{i}(0): {stray:?}")
    }));

    let shifted = lambda.shifted(theta, 1);
    let base = if v == 0 { 0 } else { (l - v) as i64 };
    let target = standard_column_quotient(&shifted, v, base + n)?;
    let image_dims: BTreeMap<i64, usize> = (0..=n).map(|e| (top + e, usize::from(image.contains_key(&(top + e))))).collect();
    let target_dims: BTreeMap<i64, usize> = (0..=n).map(|e| (base + e, target[&(base + e)])).collect();
    let same = (0..=n).all(|e| image_dims[&(top + e)] == target_dims[&(base + e)]);
    claims.push(Claim::new(format!("graded dims match e_0Δ_(λ+θ)({v}) up to {n}"), same, || {
        format!("image {image_dims:?} target {target_dims:?}")
    }));

    Ok(ShiftImageReport {
        position: i,
        vertex: v,
        b,
        generator_degree: top,
        standard_base_degree: base,
        image_dims,
        target_dims,
        claims,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorReport {
    pub position: usize,
    pub vertex: usize,
    pub f_tilde: WeylElement,
    pub printed: WeylElement,
    pub printed_weight: GLWeight,
    pub claims: Vec<Claim>,
}

impl GeneratorReport {
    pub fn all_pass(&self) -> bool {
        self.claims.iter().all(Claim::passed)
    }
}

/// The product displayed for `f̃_i` as printed (t-part over `j > i`, ∂-part over `j < i`).
pub fn f_tilde_printed(eta: &EtaSequence, b: &[i64], i: usize) -> WeylMonomial {
    let l = eta.l();
    let mut a = vec![0u32; l];
    let mut c = vec![0u32; l];
    for j in (i + 1)..l {
        for p in (j + 1)..=l {
            a[eta.at(p)] += b[j - 1] as u32;
        }
    }
    for j in 1..i {
        for p in 1..=j {
            c[eta.at(p)] += b[j - 1] as u32;
        }
    }
    WeylMonomial { a, c }
}

/// `f̃_i ⊗ u_{η_i}`: the highest-weight generator of the shifted standard module.
pub fn shift_generator(lambda: &DeformParam, theta: &StabParam, i: usize) -> Result<GeneratorReport> {
    let (eta, b) = shift_regime(lambda, theta)?;
    let l = eta.l();
    if i == 0 || i > l {
        return Err(Error::Param(crate::params::ParamError::Index { index: i, l }));
    }
    let v = eta.at(i);
    let f = g_tilde(&eta, &b, i, 0);
    let printed = f_tilde_printed(&eta, &b, i);
    let printed_weight = printed.gl_weight();
    let fb = BElement::from_weyl(&weyl_of(&f), lambda, theta.theta().to_vec())?;
    let u = column_generator(lambda, v);
    let image = theta_map(&fb, &u)?;
    let p = image.elem.project();
    let mut claims = vec![Claim::new("f̃ has weight θ", f.gl_weight() == theta.theta(), || format!("{:?}", f.gl_weight()))];
    claims.push(Claim::new("f̃ ⊗ u is nonzero", !p.is_zero(), || "zero".into()));
    let dcycle = WeylElement::monomial(vec![0; l], vec![1; l]);
    let lowered = image.elem.act(&dcycle).project();
    claims.push(Claim::new("∂-cycle annihilates f̃ ⊗ u", lowered.is_zero(), || format!("{:?}", lowered.coeffs)));
    let report = shift_image(lambda, theta, i, 2 * l as i64)?;
    let gen_ok = report.claims.iter().filter(|c| c.claim.contains("generates")).all(Claim::passed);
    claims.push(Claim::new("f̃ ⊗ u generates", gen_ok, || "see shift image".into()));
    Ok(GeneratorReport {
        position: i,
        vertex: v,
        f_tilde: weyl_of(&f),
        printed: weyl_of(&printed),
        printed_weight,
        claims,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct QDimReport {
    pub closed_form: TruncatedSeries,
    pub from_shift_images: TruncatedSeries,
    pub ambient: TruncatedSeries,
    pub generator_degrees: BTreeMap<usize, i64>,
    pub equal: bool,
}

/// `Σ_{i=1}^{l} q^{d_i + l − i} / (1 − q^{−1})` with `d_l = d_0`, as a Laurent numerator.
pub fn qdim_numerator(theta_scaled: &StabParam) -> Laurent {
    let d = d_vector(theta_scaled);
    let l = d.len();
    let mut num = Laurent::zero();
    for i in 1..=l {
        num.add_term(d[i % l] + (l - i) as i64, 1);
    }
    num
}

/// Checks the q-dimension of `C ⊗_{C[cycle]} B ⊗ e_0T` against the closed form on `window` coefficients.
pub fn q_dimension(lambda: &DeformParam, theta: &StabParam, window: usize) -> Result<QDimReport> {
    let (eta, b) = shift_regime(lambda, theta)?;
    if !classify_lambda(lambda).in_tilde_rreg {
        return Err(Error::Regime("λ is not in the tilde-regular set".into()));
    }
    let l = eta.l();
    let closed = qdim_numerator(theta);
    let top = closed.max_exp().unwrap();
    let win = TruncatedSeries::top_window(top, window);
    let closed_form = TruncatedSeries::from_rational_down(&closed, 1, win);

    let mut generator_degrees = BTreeMap::new();
    let mut gens = Laurent::zero();
    for i in 1..=l {
        let v = eta.at(i);
        let u = column_generator(lambda, v);
        let x = u.elem.act_monomial(&g_tilde(&eta, &b, i, 0));
        let deg = x.project().coeffs.keys().next().copied().ok_or_else(|| Error::Regime(format!("w_{i}(0) vanishes")))?;
        generator_degrees.insert(v, deg);
        gens.add_term(deg, 1);
    }
    let from_shift_images = TruncatedSeries::from_rational_down(&gens, 1, win);

    // C ⊗_{C[cycle]} e_0 M^{χ_θ} e_k: at shift m the cokernel of the cycle has dimension deg_z
    let mut ambient = TruncatedSeries::new("q", win);
    let cycle = WeylElement::monomial(vec![1; l], vec![0; l]);
    for k in 0..l {
        let param = ModuleParam::new(lambda, k);
        let base = crate::weyl::base_shift(&theta.column_weight(1, k))?;
        let base_deg: i64 = base.iter().sum();
        for d in win.0..=win.1 {
            if (d - base_deg).rem_euclid(l as i64) != 0 {
                continue;
            }
            let j = (d - base_deg).div_euclid(l as i64);
            let m: Vec<i64> = base.iter().map(|x| x + j - 1).collect();
            let img = InducedElement::monomial(&param, m, ZPoly::one()).act(&cycle);
            let dim = img.terms().next().and_then(|(_, f)| f.degree()).unwrap_or(0);
            ambient.add_term(d, dim as i64);
        }
    }
    let equal = closed_form.agrees_with(&from_shift_images) && closed_form.agrees_with(&ambient);
    Ok(QDimReport { closed_form, from_shift_images, ambient, generator_degrees, equal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn lam(v: &[(i64, i64)]) -> DeformParam {
        DeformParam::new(v.iter().map(|&(n, d)| frac(n, d)).collect()).unwrap()
    }

    #[test]
    fn reduce_examples() {
        let l = 2;
        let lambda = lam(&[(3, 4), (1, 4)]);
        let x = WeylElement::euler(l, 1).sub(&WeylElement::euler(l, 0)).unwrap();
        let r = reduce_to_induced(&x, &lambda);
        let p = ModuleParam::new(&lambda, 0);
        assert_eq!(r, InducedElement::monomial(&p, vec![0, 0], ZPoly::constant(frac(-1, 4))));
        let r = reduce_to_induced(&WeylElement::euler(l, 0), &lambda);
        assert_eq!(r, InducedElement::monomial(&p, vec![0, 0], ZPoly::z_pow(1)));
        let r = reduce_to_induced(&WeylElement::t(l, 0), &lambda);
        assert_eq!(r, InducedElement::monomial(&p, vec![1, 0], ZPoly::one()));
    }

    #[test]
    fn zpoly_arithmetic() {
        let f = ZPoly::one().mul_linear(&q(2)).mul_linear(&q(-3));
        assert_eq!(f.coeffs(), &[q(-6), q(-1), q(1)]);
        assert_eq!(f.eval(&q(3)), q(0));
        assert_eq!(f.mul(&ZPoly::zero()), ZPoly::zero());
    }

    #[test]
    fn theta_map_examples() {
        let l = 2;
        let lambda = lam(&[(3, 4), (1, 4)]);
        let b = BElement::from_weyl(&WeylElement::t(l, 0), &lambda, vec![-1, 1]).unwrap();
        let w = column_generator(&lambda, 0);
        let r = theta_map(&b, &w).unwrap();
        assert_eq!(r.elem, reduce_to_induced(&WeylElement::t(l, 0), &lambda));
        assert_eq!(r.weight, vec![-1, 1]);

        // ∂_1 on the column-1 class of t_1: Θ_1 + 1 ↦ z + σ_1 + 1 with σ_1 = λ_0 in column 1
        let b = BElement::from_weyl(&WeylElement::d(l, 1), &lambda, vec![-1, 1]).unwrap();
        let p1 = ModuleParam::new(&lambda, 1);
        let w = ColumnElement::new(InducedElement::monomial(&p1, vec![0, 1], ZPoly::one()), vec![1, -1]).unwrap();
        let r = theta_map(&b, &w).unwrap();
        let expect = ZPoly::one().mul_linear(&(frac(3, 4) + q(1)));
        assert_eq!(r.elem, InducedElement::monomial(&p1, vec![0, 0], expect));

        assert!(BElement::from_weyl(&WeylElement::t(l, 0), &lambda, vec![1, -1]).is_err());
    }

    #[test]
    fn kappa_values() {
        let lambda = DeformParam::from_integers(&[-1, 2]).unwrap();
        let k = standard_action(&lambda, 0, 3);
        assert_eq!(k, vec![q(-1), q(1), q(0)]);
        let lambda = lam(&[(1, 2), (1, 2)]);
        assert_eq!(standard_action(&lambda, 0, 2)[1], q(1));
    }

    #[test]
    fn hom_examples() {
        let lambda = DeformParam::from_integers(&[-1, 2]).unwrap();
        assert_eq!(hom_dim(&lambda, 0, 1), HomInfo { dim: 1, embedding_degree: Some(3), n: Some(1) });
        assert_eq!(singular_vector_search(&lambda, 0, 1, 16), Some(3));
        let lambda = lam(&[(3, 4), (1, 4)]);
        assert_eq!(hom_dim(&lambda, 1, 0).dim, 0);
        assert_eq!(hom_dim(&lambda, 1, 1).dim, 1);
    }

    #[test]
    fn standard_column_degrees() {
        let lambda = lam(&[(3, 4), (1, 4)]);
        let d = standard_column_quotient(&lambda, 0, 6).unwrap();
        let ones: Vec<i64> = d.iter().filter(|(_, &v)| v == 1).map(|(&k, _)| k).collect();
        assert_eq!(ones, vec![0, 2, 4, 6]);
        assert!(d.values().all(|&v| v <= 1));
        let d = standard_column_quotient(&lambda, 1, 6).unwrap();
        let ones: Vec<i64> = d.iter().filter(|(_, &v)| v == 1).map(|(&k, _)| k).collect();
        assert_eq!(ones, vec![1, 3, 5]);
        let lambda = lam(&[(1, 2), (1, 3), (1, 6)]);
        let d = standard_column_quotient(&lambda, 2, 7).unwrap();
        let ones: Vec<i64> = d.iter().filter(|(_, &v)| v == 1).map(|(&k, _)| k).collect();
        assert_eq!(ones, vec![1, 4, 7]);
    }

    #[test]
    fn shift_image_rank_two() {
        let lambda = lam(&[(3, 4), (1, 4)]);
        let theta = StabParam::new(vec![-1, 1]).unwrap();
        for i in 1..=2 {
            let r = shift_image(&lambda, &theta, i, 10).unwrap();
            for c in &r.claims {
                assert!(c.passed(), "i={i}: {c:?}");
            }
        }
    }

    #[test]
    fn shift_generator_rank_two() {
        let lambda = lam(&[(3, 4), (1, 4)]);
        let theta = StabParam::new(vec![-1, 1]).unwrap();
        let r = shift_generator(&lambda, &theta, 2).unwrap();
        assert!(r.all_pass(), "{:?}", r.claims);
        assert_eq!(r.f_tilde, WeylElement::d(2, 1));
        let r = shift_generator(&lambda, &theta, 1).unwrap();
        assert!(r.all_pass(), "{:?}", r.claims);
        assert_eq!(r.f_tilde, WeylElement::t(2, 0));
        assert_eq!(r.printed, WeylElement::one(2));
    }

    #[test]
    fn q_dimension_rank_two() {
        let lambda = lam(&[(3, 4), (1, 4)]);
        let theta = StabParam::new(vec![-1, 1]).unwrap();
        let r = q_dimension(&lambda, &theta, 12).unwrap();
        assert!(r.equal, "{r:?}");
        assert_eq!(r.closed_form.window, (-9, 2));
        assert_eq!(r.closed_form.coeff(2), 1);
        assert_eq!(r.closed_form.coeff(-1), 2);
    }
}
