//! Exact Laurent polynomials and the Schubert calculus built on them.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{KpError, Result};
use crate::permcomb::{dominance_interval, dominates, perm_of, transition, Permutation, Weight};

/// Sparse Laurent polynomial in `x_1, ..., x_n` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    n: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(n: usize) -> Self {
        LaurentPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(vec![0; n], BigInt::one())
    }

    pub fn monomial(exp: Vec<i64>, coeff: BigInt) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(exp, &coeff);
        p
    }

    /// `x^lambda`
    pub fn x_pow(w: &Weight) -> Self {
        Self::monomial(w.0.clone(), BigInt::one())
    }

    /// The variable `x_i` (1-based).
    pub fn var(n: usize, i: usize) -> Self {
        Self::x_pow(&Weight::epsilon(n, i))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[i64]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, exp: Vec<i64>, c: &BigInt) {
        debug_assert_eq!(exp.len(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LaurentPoly, c: &BigInt) {
        assert_eq!(self.n, other.n, "variable count mismatch");
        for (e, x) in &other.terms {
            self.add_term(e.clone(), &(x * c));
        }
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        let mut out = Self::zero(self.n);
        out.add_scaled(self, c);
        out
    }

    /// Multiplies by `x^shift`.
    pub fn shift(&self, shift: &Weight) -> LaurentPoly {
        LaurentPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(&shift.0).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// `f(x_1^{-1}, ..., x_n^{-1})`
    pub fn invert_variables(&self) -> LaurentPoly {
        LaurentPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|a| -a).collect(), c.clone()))
                .collect(),
        }
    }

    /// `s_i f`: exchanges `x_i` and `x_{i+1}`.
    pub fn swap_variables(&self, i: usize) -> LaurentPoly {
        LaurentPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.swap(i - 1, i);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// The same polynomial viewed in `m` variables. Panics if truncation would
    /// drop a variable that occurs.
    pub fn with_vars(&self, m: usize) -> LaurentPoly {
        assert!(self.involves_only(m), "polynomial involves variables beyond x_{m}");
        LaurentPoly {
            n: m,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.resize(m, 0);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// True when no variable beyond `x_m` occurs.
    pub fn involves_only(&self, m: usize) -> bool {
        self.terms.keys().all(|e| e.iter().skip(m).all(|&a| a == 0))
    }

    /// Value at `x = (1, ..., 1)`.
    pub fn eval_at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Coefficientwise `self <= other`.
    pub fn leq_coefficientwise(&self, other: &LaurentPoly) -> bool {
        let diff = other - self;
        diff.terms.values().all(|c| !c.is_negative())
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Total degrees occurring in the support, ascending.
    pub fn degrees(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self.terms.keys().map(|e| e.iter().sum()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// Bilinear pairing `<x^a, x^b> = delta_ab`.
    pub fn pairing(&self, other: &LaurentPoly) -> BigInt {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        small
            .terms
            .iter()
            .filter_map(|(e, c)| large.terms.get(e).map(|d| c * d))
            .sum()
    }

    fn binop(&self, other: &LaurentPoly, sign: i64) -> LaurentPoly {
        assert_eq!(self.n, other.n, "variable count mismatch");
        let mut out = self.clone();
        out.add_scaled(other, &BigInt::from(sign));
        out
    }

    fn product(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.n, other.n, "variable count mismatch");
        let mut out = Self::zero(self.n);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e = a.iter().zip(b).map(|(p, q)| p + q).collect();
                out.add_term(e, &(x * y));
            }
        }
        out
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.binop(rhs, 1)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.binop(rhs, -1)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.product(rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&-BigInt::one())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Terms in decreasing lexicographic order of exponents, e.g.
/// `x1^2 + x1*x2 - 2*x3^-1`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &a)| a != 0)
                .map(|(i, &a)| {
                    if a == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, a)
                    }
                })
                .collect();
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            match (mono.is_empty(), abs.is_one()) {
                (true, _) => write!(f, "{abs}")?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{abs}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

/// Serializes an integer as a bare JSON number of arbitrary size.
pub(crate) fn ser_bigint<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    let num: serde_json::Number = x.to_string().parse().expect("integers are valid JSON numbers");
    num.serialize(s)
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<i64>,
    coeff: serde_json::Number,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    n: usize,
    terms: Vec<TermJson>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| TermJson {
                exp: e.clone(),
                coeff: c.to_string().parse().expect("integers are valid JSON numbers"),
            })
            .collect();
        PolyJson { n: self.n, terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error;
        let raw = PolyJson::deserialize(d)?;
        let mut p = LaurentPoly::zero(raw.n);
        for t in raw.terms {
            if t.exp.len() != raw.n {
                return Err(D::Error::custom("exponent length differs from n"));
            }
            let c: BigInt = t
                .coeff
                .to_string()
                .parse()
                .map_err(|_| D::Error::custom("coefficient must be an integer"))?;
            p.add_term(t.exp, &c);
        }
        Ok(p)
    }
}

/// `partial_i f = (f - s_i f) / (x_i - x_{i+1})`, computed termwise.
pub fn divided_difference(i: usize, f: &LaurentPoly) -> Result<LaurentPoly> {
    if i == 0 || i >= f.n {
        return Err(KpError::IndexOutOfRange {
            index: i,
            max: f.n.saturating_sub(1),
        });
    }
    let (a, b) = (i - 1, i);
    let mut out = LaurentPoly::zero(f.n);
    for (e, c) in &f.terms {
        let (p, q) = (e[a], e[b]);
        if p == q {
            continue;
        }
        // (x^p y^q - x^q y^p)/(x - y) = sign * sum over the geometric run
        let (hi, lo, sign) = if p > q { (p, q, 1) } else { (q, p, -1) };
        let coeff = c * BigInt::from(sign);
        for t in 0..hi - lo {
            let mut m = e.clone();
            m[a] = hi - 1 - t;
            m[b] = lo + t;
            out.add_term(m, &coeff);
        }
    }
    Ok(out)
}

/// Which recursion computes a Schubert polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SchubertMethod {
    /// Divided differences down from the staircase monomial of `w_0(m)`.
    Staircase,
    /// Memoized transition recursion along the maximal descent.
    Transition,
}

/// `S_w` in `w.support_len()` variables (at least one).
pub fn schubert_of_perm(w: &Permutation, method: SchubertMethod) -> LaurentPoly {
    match method {
        SchubertMethod::Staircase => staircase(w),
        SchubertMethod::Transition => transition_memo(w),
    }
}

fn staircase(w: &Permutation) -> LaurentPoly {
    let m = w.support_len().max(1);
    let mut path = Vec::new();
    let mut cur = w.window_padded(m);
    // climb to w_0(m) by right multiplication with simple transpositions at ascents
    while let Some(i) = (1..m).find(|&i| cur[i - 1] < cur[i]) {
        cur.swap(i - 1, i);
        path.push(i);
    }
    let mut f = LaurentPoly::x_pow(&Weight::rho(m));
    for &i in path.iter().rev() {
        f = divided_difference(i, &f).expect("ascent index lies in 1..m");
    }
    f
}

fn schubert_cache() -> &'static Mutex<HashMap<Permutation, LaurentPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<Permutation, LaurentPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn transition_memo(w: &Permutation) -> LaurentPoly {
    if let Some(p) = schubert_cache().lock().expect("cache lock").get(w) {
        return p.clone();
    }
    let m = w.support_len().max(1);
    let code = w.full_code();
    let result = if code.windows(2).all(|p| p[0] >= p[1]) {
        // dominant permutations: a single monomial
        let mut e = code;
        e.resize(m, 0);
        LaurentPoly::monomial(e, BigInt::one())
    } else {
        let t = transition(w).expect("non-identity: dominant case handles id");
        let mut f = &LaurentPoly::var(m, t.j) * &transition_memo(&t.v).with_vars(m);
        for (_, u) in &t.branches {
            f = &f + &transition_memo(u).with_vars(m);
        }
        f
    };
    schubert_cache()
        .lock()
        .expect("cache lock")
        .insert(w.clone(), result.clone());
    result
}

/// `S_lambda` for any `lambda in Z^n`, as a Laurent polynomial in `x_1..x_n`.
pub fn schubert_poly(lambda: &Weight, method: SchubertMethod) -> LaurentPoly {
    let n = lambda.n();
    let k = (-lambda.min_entry()).max(0);
    let shifted = lambda.shift(k);
    let w = perm_of(&shifted).expect("shifted weight is nonnegative");
    let f = schubert_of_perm(&w, method);
    let m = f.n().max(n);
    let f = f.with_vars(m);
    assert!(f.involves_only(n), "S_w for w in S_inf^(n) lies in x_1..x_n");
    f.with_vars(n).shift(&Weight::constant(n, -k))
}

/// `S_lambda` via the default (transition) route.
pub fn schubert(lambda: &Weight) -> LaurentPoly {
    schubert_poly(lambda, SchubertMethod::Transition)
}

/// `sum_lambda c_lambda S_lambda = f`, by repeatedly peeling off a
/// dominance-minimal exponent (ties broken lexicographically).
pub fn expand_in_schubert(f: &LaurentPoly) -> BTreeMap<Weight, BigInt> {
    let mut rest = f.clone();
    let mut out: BTreeMap<Weight, BigInt> = BTreeMap::new();
    while !rest.is_zero() {
        let exps: Vec<&Vec<i64>> = rest.terms.keys().collect();
        let minimal = exps
            .iter()
            .find(|e| {
                let we = Weight((**e).clone());
                !exps
                    .iter()
                    .any(|o| o != *e && dominates(&we, &Weight((*o).clone())))
            })
            .expect("a finite support has dominance-minimal elements");
        // keys iterate in lex order, so the first minimal one is lex smallest
        let mu = Weight((*minimal).clone());
        let c = rest.coeff(&mu.0);
        rest.add_scaled(&schubert(&mu), &-c.clone());
        let entry = out.entry(mu.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            out.remove(&mu);
        }
    }
    out
}

/// `sum_lambda c_lambda S_lambda`
pub fn combine_schubert(n: usize, coeffs: &BTreeMap<Weight, BigInt>) -> LaurentPoly {
    let mut f = LaurentPoly::zero(n);
    for (lambda, c) in coeffs {
        f.add_scaled(&schubert(lambda), c);
    }
    f
}

/// `prod_{i<j} (x_i - x_j)`
pub fn vandermonde(n: usize) -> LaurentPoly {
    let mut f = LaurentPoly::one(n);
    for i in 1..=n {
        for j in i + 1..=n {
            let diff = &LaurentPoly::var(n, i) - &LaurentPoly::var(n, j);
            f = &f * &diff;
        }
    }
    f
}

/// The dual element `S_{rho-mu}(x^{-1}) * prod_{i<j}(x_i - x_j)`.
pub fn dual_schubert(mu: &Weight) -> LaurentPoly {
    let n = mu.n();
    let rho = Weight::rho(n);
    &schubert(&rho.sub(mu)).invert_variables() * &vandermonde(n)
}

/// `<f, S_{rho-mu}(x^{-1}) prod_{i<j}(x_i - x_j)>`; extracts the coefficient
/// of `S_mu` in `f` on each degree slice.
pub fn dual_pairing(f: &LaurentPoly, mu: &Weight) -> BigInt {
    f.pairing(&dual_schubert(mu))
}

/// Number of multisets of positive roots `e_i - e_j` (`i < j`) summing to `delta`.
pub fn kostant_dim(delta: &Weight) -> u64 {
    let mut memo = HashMap::new();
    kostant_rec(&delta.0, &mut memo)
}

fn kostant_rec(delta: &[i64], memo: &mut HashMap<Vec<i64>, u64>) -> u64 {
    match delta.len() {
        0 => return 1,
        1 => return u64::from(delta[0] == 0),
        _ => {}
    }
    if delta.iter().sum::<i64>() != 0 || delta[0] < 0 {
        return 0;
    }
    if let Some(&v) = memo.get(delta) {
        return v;
    }
    // roots e_1 - e_j carry all of delta_1; distribute it over j = 2..n
    let first = delta[0];
    let rest = &delta[1..];
    let mut total = 0u64;
    let mut alloc = vec![0i64; rest.len()];
    fn distribute(
        idx: usize,
        left: i64,
        alloc: &mut Vec<i64>,
        rest: &[i64],
        total: &mut u64,
        memo: &mut HashMap<Vec<i64>, u64>,
    ) {
        if idx == alloc.len() - 1 {
            alloc[idx] = left;
            let next: Vec<i64> = rest.iter().zip(alloc.iter()).map(|(d, a)| d + a).collect();
            *total += kostant_rec(&next, memo);
            return;
        }
        for a in 0..=left {
            alloc[idx] = a;
            distribute(idx + 1, left - a, alloc, rest, total, memo);
        }
    }
    distribute(0, first, &mut alloc, rest, &mut total, memo);
    memo.insert(delta.to_vec(), total);
    total
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CauchyReport {
    pub mu: Weight,
    pub nu: Weight,
    #[serde(serialize_with = "ser_bigint")]
    pub lhs: BigInt,
    pub rhs: u64,
    pub pass: bool,
}

/// Compares `sum_kappa [x^{rho-mu}] S_{rho-kappa} * [y^nu] S_kappa` over the
/// window against the Kostant count for `nu - mu`.
pub fn cauchy_window_check(mu: &Weight, nu: &Weight, window: &[Weight]) -> Result<CauchyReport> {
    let n = mu.n();
    if nu.n() != n {
        return Err(KpError::LengthMismatch {
            expected: n,
            got: nu.n(),
        });
    }
    let missing: Vec<Vec<i64>> = dominance_interval(mu, nu)
        .into_iter()
        .filter(|k| !window.contains(k))
        .map(|k| k.0)
        .collect();
    if !missing.is_empty() {
        return Err(KpError::WindowTooSmall(missing));
    }
    let rho = Weight::rho(n);
    let target = rho.sub(mu);
    let mut lhs = BigInt::zero();
    for kappa in window {
        let a = schubert(&rho.sub(kappa)).coeff(&target.0);
        if a.is_zero() {
            continue;
        }
        lhs += a * schubert(kappa).coeff(&nu.0);
    }
    let rhs = kostant_dim(&nu.sub(mu));
    let pass = lhs.to_u64() == Some(rhs);
    Ok(CauchyReport {
        mu: mu.clone(),
        nu: nu.clone(),
        lhs,
        rhs,
        pass,
    })
}

/// [`cauchy_window_check`] with the smallest admissible window.
pub fn cauchy_check(mu: &Weight, nu: &Weight) -> Result<CauchyReport> {
    cauchy_window_check(mu, nu, &dominance_interval(mu, nu))
}

/// A partition: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if !ok {
            return Err(KpError::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Column lengths of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=cols)
                .map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32)
                .collect(),
        )
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Complete homogeneous polynomials `h_0..=h_max` of the given monomials.
fn complete_homogeneous(values: &[LaurentPoly], n: usize, max: usize) -> Vec<LaurentPoly> {
    let mut h = vec![LaurentPoly::zero(n); max + 1];
    h[0] = LaurentPoly::one(n);
    for v in values {
        for k in 1..=max {
            let add = v * &h[k - 1];
            h[k] = &h[k] + &add;
        }
    }
    h
}

fn determinant(m: &[Vec<LaurentPoly>], n: usize) -> LaurentPoly {
    let size = m.len();
    if size == 0 {
        return LaurentPoly::one(n);
    }
    // Laplace expansion along the first row
    let mut det = LaurentPoly::zero(n);
    for (col, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<LaurentPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != col)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = entry * &determinant(&minor, n);
        let sign = if col % 2 == 0 { 1 } else { -1 };
        det.add_scaled(&term, &BigInt::from(sign));
    }
    det
}

/// `s_sigma[f]`: the Schur polynomial `s_sigma` evaluated at the monomials of
/// `f` listed with multiplicity, via the Jacobi-Trudi determinant.
pub fn plethysm_eval(sigma: &Partition, f: &LaurentPoly) -> Result<LaurentPoly> {
    let n = f.n();
    let mut values = Vec::new();
    for (e, c) in f.terms() {
        if c.is_negative() {
            return Err(KpError::NegativeCoefficient(e.clone()));
        }
        let count = c.to_usize().expect("multiplicity fits in usize");
        for _ in 0..count {
            values.push(LaurentPoly::monomial(e.clone(), BigInt::one()));
        }
    }
    let l = sigma.len();
    let max = sigma.parts().first().copied().unwrap_or(0) as usize + l;
    let h = complete_homogeneous(&values, n, max);
    let matrix: Vec<Vec<LaurentPoly>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let idx = sigma.parts()[i] as i64 - i as i64 + j as i64;
                    if idx < 0 {
                        LaurentPoly::zero(n)
                    } else {
                        h[idx as usize].clone()
                    }
                })
                .collect()
        })
        .collect();
    Ok(determinant(&matrix, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wt(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    fn poly(n: usize, terms: &[(&[i64], i64)]) -> LaurentPoly {
        let mut p = LaurentPoly::zero(n);
        for (e, c) in terms {
            p.add_term(e.to_vec(), &BigInt::from(*c));
        }
        p
    }

    #[test]
    fn divided_difference_examples() {
        let x1 = LaurentPoly::var(2, 1);
        assert_eq!(divided_difference(1, &x1).unwrap(), LaurentPoly::one(2));
        let x1x2 = poly(2, &[(&[1, 1], 1)]);
        assert!(divided_difference(1, &x1x2).unwrap().is_zero());
        let f = poly(3, &[(&[2, 1, 0], 1)]);
        assert_eq!(divided_difference(2, &f).unwrap(), poly(3, &[(&[2, 0, 0], 1)]));
    }

    #[test]
    fn divided_difference_index_out_of_range() {
        let f = LaurentPoly::one(3);
        assert!(divided_difference(0, &f).is_err());
        assert!(divided_difference(3, &f).is_err());
    }

    #[test]
    fn divided_difference_handles_negative_exponents() {
        // (x1^-1 - x2^-1)/(x1 - x2) = -x1^-1 x2^-1
        let f = poly(2, &[(&[-1, 0], 1)]);
        assert_eq!(divided_difference(1, &f).unwrap(), poly(2, &[(&[-1, -1], -1)]));
    }

    #[test]
    fn schubert_of_simple_reflections() {
        for n in 1..=4 {
            for i in 1..=n {
                let code = Permutation::simple(i).code(n).unwrap();
                let expected = (1..=i).fold(LaurentPoly::zero(n), |acc, k| &acc + &LaurentPoly::var(n, k));
                for m in [SchubertMethod::Staircase, SchubertMethod::Transition] {
                    assert_eq!(schubert_poly(&code, m), expected);
                }
            }
        }
    }

    #[test]
    fn schubert_of_2143() {
        let expected = poly(4, &[(&[2, 0, 0, 0], 1), (&[1, 1, 0, 0], 1), (&[1, 0, 1, 0], 1)]);
        assert_eq!(schubert(&wt(&[1, 0, 1, 0])), expected);
        assert_eq!(expected.to_string(), "x1^2 + x1*x2 + x1*x3");
    }

    #[test]
    fn schubert_of_02() {
        let expected = poly(2, &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)]);
        assert_eq!(schubert_poly(&wt(&[0, 2]), SchubertMethod::Staircase), expected);
        assert_eq!(schubert_poly(&wt(&[0, 2]), SchubertMethod::Transition), expected);
    }

    #[test]
    fn schubert_shift_rule() {
        let base = schubert(&wt(&[0, 1, 0]));
        let shifted = schubert(&wt(&[-2, -1, -2]));
        assert_eq!(shifted, base.shift(&Weight::constant(3, -2)));
    }

    #[test]
    fn expand_examples() {
        let s = schubert(&wt(&[1, 0, 1]));
        let e = expand_in_schubert(&s);
        assert_eq!(e, BTreeMap::from([(wt(&[1, 0, 1]), BigInt::one())]));

        let x1x2 = &LaurentPoly::var(2, 1) + &LaurentPoly::var(2, 2);
        let sq = &x1x2 * &x1x2;
        let e = expand_in_schubert(&sq);
        assert_eq!(
            e,
            BTreeMap::from([(wt(&[0, 2]), BigInt::one()), (wt(&[1, 1]), BigInt::one())])
        );
        for (mu, c) in &e {
            assert_eq!(&dual_pairing(&sq, mu), c);
        }

        let e = expand_in_schubert(&LaurentPoly::var(2, 2));
        assert_eq!(
            e,
            BTreeMap::from([(wt(&[0, 1]), BigInt::one()), (wt(&[1, 0]), -BigInt::one())])
        );
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(dual_pairing(&LaurentPoly::one(2), &wt(&[0, 0])), BigInt::one());
        assert_eq!(dual_pairing(&schubert(&wt(&[1, 0])), &wt(&[0, 1])), BigInt::zero());
        assert_eq!(
            dual_schubert(&wt(&[0, 0])),
            poly(2, &[(&[0, 0], 1), (&[-1, 1], -1)])
        );
    }

    #[test]
    fn kostant_examples() {
        assert_eq!(kostant_dim(&wt(&[1, 0, -1])), 2);
        assert_eq!(kostant_dim(&wt(&[0, 0, 0])), 1);
        assert_eq!(kostant_dim(&wt(&[2, -1, -1])), 2);
        assert_eq!(kostant_dim(&wt(&[-1, 1, 0])), 0);
        assert_eq!(kostant_dim(&wt(&[1, 0, 0])), 0);
    }

    #[test]
    fn cauchy_examples() {
        for (mu, nu, expected) in [
            (wt(&[0, 0, 0]), wt(&[0, 0, 0]), 1),
            (wt(&[0, 0, 0]), wt(&[1, 0, -1]), 2),
            (wt(&[0, 1, 0]), wt(&[1, 0, 0]), 1),
        ] {
            let r = cauchy_check(&mu, &nu).unwrap();
            assert_eq!(r.rhs, expected);
            assert_eq!(r.lhs, BigInt::from(expected));
            assert!(r.pass);
        }
    }

    #[test]
    fn cauchy_window_too_small() {
        let err = cauchy_window_check(&wt(&[0, 0, 0]), &wt(&[1, 0, -1]), &[wt(&[0, 0, 0])]).unwrap_err();
        match err {
            KpError::WindowTooSmall(missing) => {
                assert!(missing.contains(&vec![1, 0, -1]));
                assert_eq!(missing.len(), 3);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn plethysm_examples() {
        let f = &LaurentPoly::var(2, 1) + &LaurentPoly::var(2, 2);
        let one = Partition::new(vec![1]).unwrap();
        assert_eq!(plethysm_eval(&one, &f).unwrap(), f);
        let two = Partition::new(vec![2]).unwrap();
        assert_eq!(
            plethysm_eval(&two, &f).unwrap(),
            poly(2, &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)])
        );
        let oneone = Partition::new(vec![1, 1]).unwrap();
        assert_eq!(plethysm_eval(&oneone, &f).unwrap(), poly(2, &[(&[1, 1], 1)]));
    }

    #[test]
    fn plethysm_rejects_negative() {
        let f = poly(2, &[(&[1, 0], -1)]);
        assert!(plethysm_eval(&Partition::new(vec![2]).unwrap(), &f).is_err());
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::new(vec![3, 1]).unwrap().conjugate().parts(), &[2, 1, 1]);
    }

    #[test]
    fn display_formats() {
        assert_eq!(LaurentPoly::zero(2).to_string(), "0");
        assert_eq!(poly(2, &[(&[0, 0], 3), (&[-1, 2], -2)]).to_string(), "3 - 2*x1^-1*x2^2");
        assert_eq!(poly(2, &[(&[1, 0], -1)]).to_string(), "-x1");
    }

    #[test]
    fn json_is_sorted_and_roundtrips() {
        let p = poly(2, &[(&[0, 1], 1), (&[1, 0], -3)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"{"n":2,"terms":[{"exp":[0,1],"coeff":1},{"exp":[1,0],"coeff":-3}]}"#
        );
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}
