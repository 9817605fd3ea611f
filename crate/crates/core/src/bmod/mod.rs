//! Finite-dimensional weight modules over the upper-triangular Lie algebra
//! `b_n`, stored as explicit weight bases with sparse exact action matrices.

mod closure;
mod kp;
mod u3;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Map, Value};

use crate::error::{KpError, Result};
use crate::linalg::{q, q_to_string, SparseMatrix, SparseVec, Q};
use crate::permcomb::Weight;
use crate::schubpoly::LaurentPoly;

pub use closure::{
    cyclic_submodule, generated_submodule, hom_dim, hom_space, largest_quotient, quotient_by,
    Closure, ModuleMap, Quotient, Submodule,
};
pub use kp::{
    annihilator_check, annihilator_presentation, demazure_module, kp_module, AnnihilatorPresentation,
    AnnihilatorReport, DemazureModule, ExponentCheck, KpModule, RedundancyCertificate,
};
pub use u3::{
    congruence_check, congruence_sweep, cyclic_check, u3_module, CongruenceCase, CongruenceParams, U3Report,
    DEFAULT_U3_BOUND,
};

/// Default cap on basis sizes; overridden by the `KP_MAX_DIM` environment variable.
pub const DEFAULT_MAX_DIM: usize = 5000;

pub fn max_dim() -> usize {
    std::env::var("KP_MAX_DIM")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_DIM)
}

pub(crate) fn check_cap(dim: usize) -> Result<()> {
    let cap = max_dim();
    if dim > cap {
        return Err(KpError::DimensionCap { cap });
    }
    Ok(())
}

/// A weight module: basis vectors with weights, plus the action of `e_ij`.
///
/// Operators are keyed by 1-based `(i, j)` with `i != j`; `i < j` are the
/// raising operators of `b_n`, `i > j` the optional lowering operators of a
/// `gl_n` build. The diagonal acts through the weights.
#[derive(Clone, PartialEq, Eq)]
pub struct WeightModule {
    n: usize,
    weights: Vec<Weight>,
    ops: BTreeMap<(usize, usize), SparseMatrix>,
}

impl fmt::Debug for WeightModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeightModule")
            .field("n", &self.n)
            .field("dim", &self.dim())
            .field("weights", &self.weights)
            .finish()
    }
}

impl WeightModule {
    /// Builds a module from raw parts. Every raising pair `i < j` must be present.
    pub fn from_parts(
        n: usize,
        weights: Vec<Weight>,
        ops: BTreeMap<(usize, usize), SparseMatrix>,
    ) -> Self {
        let dim = weights.len();
        debug_assert!(weights.iter().all(|w| w.n() == n));
        debug_assert!(ops.values().all(|m| m.nrows == dim && m.ncols() == dim));
        debug_assert!(raising_pairs(n).all(|p| ops.contains_key(&p)));
        WeightModule { n, weights, ops }
    }

    pub fn zero(n: usize) -> Self {
        let ops = raising_pairs(n)
            .map(|p| (p, SparseMatrix::zero(0, 0)))
            .collect();
        WeightModule {
            n,
            weights: Vec::new(),
            ops,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> &Weight {
        &self.weights[i]
    }

    pub fn op(&self, i: usize, j: usize) -> Option<&SparseMatrix> {
        self.ops.get(&(i, j))
    }

    pub fn ops(&self) -> impl Iterator<Item = ((usize, usize), &SparseMatrix)> {
        self.ops.iter().map(|(k, m)| (*k, m))
    }

    pub fn has_lowering(&self) -> bool {
        self.ops.keys().any(|(i, j)| i > j)
    }

    /// Drops the lowering operators, keeping the `b_n`-module structure.
    pub fn restrict_to_borel(&self) -> WeightModule {
        WeightModule {
            n: self.n,
            weights: self.weights.clone(),
            ops: self
                .ops
                .iter()
                .filter(|((i, j), _)| i < j)
                .map(|(k, m)| (*k, m.clone()))
                .collect(),
        }
    }

    /// `e_ij v`; `None` when the operator is not stored.
    pub fn act(&self, i: usize, j: usize, v: &SparseVec) -> Option<SparseVec> {
        self.op(i, j).map(|m| m.apply(v))
    }

    /// `e_ij^k v` for a stored operator.
    pub fn act_power(&self, i: usize, j: usize, k: usize, v: &SparseVec) -> SparseVec {
        let m = self.op(i, j).expect("operator is stored");
        let mut x = v.clone();
        for _ in 0..k {
            if x.is_zero() {
                break;
            }
            x = m.apply(&x);
        }
        x
    }

    /// Applies a word of operators, written left to right and applied right to left.
    pub fn act_word(&self, word: &[(usize, usize)], v: &SparseVec) -> SparseVec {
        let mut x = v.clone();
        for &(i, j) in word.iter().rev() {
            if x.is_zero() {
                break;
            }
            x = self.act(i, j, &x).expect("operator is stored");
        }
        x
    }

    /// Basis indices grouped by weight.
    pub fn weight_spaces(&self) -> BTreeMap<Weight, Vec<usize>> {
        let mut out: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
        for (i, w) in self.weights.iter().enumerate() {
            out.entry(w.clone()).or_default().push(i);
        }
        out
    }

    pub fn weight_space_dim(&self, w: &Weight) -> usize {
        self.weights.iter().filter(|x| *x == w).count()
    }

    /// Distinct weights, sorted lexicographically.
    pub fn distinct_weights(&self) -> Vec<Weight> {
        self.weight_spaces().into_keys().collect()
    }

    /// `ch(M) = sum_mu dim M_mu x^mu`
    pub fn character(&self) -> LaurentPoly {
        let mut f = LaurentPoly::zero(self.n);
        for w in &self.weights {
            f.add_term(w.0.clone(), &BigInt::one());
        }
        f
    }

    /// Splits a sparse vector into its weight components.
    pub fn weight_components(&self, v: &SparseVec) -> BTreeMap<Weight, SparseVec> {
        let mut out: BTreeMap<Weight, SparseVec> = BTreeMap::new();
        for (i, c) in v.iter() {
            out.entry(self.weights[i].clone()).or_default().add_at(i, c);
        }
        out
    }

    /// Every stored `e_ij` maps `M_mu` into `M_{mu + e_i - e_j}`.
    pub fn check_weights(&self) -> bool {
        self.ops.iter().all(|(&(i, j), m)| {
            let root = Weight::root(self.n, i, j);
            m.cols.iter().enumerate().all(|(c, col)| {
                let target = self.weights[c].add(&root);
                col.indices().all(|r| self.weights[r] == target)
            })
        })
    }

    /// Matrix of `e_ab`, including the diagonal `e_aa` acting by weights.
    fn op_or_diagonal(&self, a: usize, b: usize) -> Option<SparseMatrix> {
        if a == b {
            let cols = self
                .weights
                .iter()
                .enumerate()
                .map(|(i, w)| {
                    let mut v = SparseVec::new();
                    v.add_at(i, &q(w.0[a - 1]));
                    v
                })
                .collect();
            return Some(SparseMatrix {
                nrows: self.dim(),
                cols,
            });
        }
        self.ops.get(&(a, b)).cloned()
    }

    /// `[e_ab, e_cd] = delta_bc e_ad - delta_da e_cb` for every pair of stored
    /// operators whose right-hand side is also available.
    pub fn check_brackets(&self) -> bool {
        let keys: Vec<(usize, usize)> = self.ops.keys().copied().collect();
        for &(a, b) in &keys {
            for &(c, d) in &keys {
                let x = &self.ops[&(a, b)];
                let y = &self.ops[&(c, d)];
                let lhs = x.compose(y).add(&y.compose(x).scaled(&-Q::one()));
                let mut rhs = SparseMatrix::zero(self.dim(), self.dim());
                if b == c {
                    match self.op_or_diagonal(a, d) {
                        Some(m) => rhs = rhs.add(&m),
                        None => continue,
                    }
                }
                if d == a {
                    match self.op_or_diagonal(c, b) {
                        Some(m) => rhs = rhs.add(&m.scaled(&-Q::one())),
                        None => continue,
                    }
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Basis vectors of the given total degree, as a direct summand.
    pub fn degree_part(&self, degree: i64) -> WeightModule {
        let keep: Vec<usize> = (0..self.dim())
            .filter(|&i| self.weights[i].degree() == degree)
            .collect();
        self.restrict_to_basis(&keep)
    }

    /// Total degrees present, ascending.
    pub fn degrees(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self.weights.iter().map(Weight::degree).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// Restriction to a set of basis vectors spanning a submodule.
    fn restrict_to_basis(&self, keep: &[usize]) -> WeightModule {
        let index: HashMap<usize, usize> = keep.iter().enumerate().map(|(a, &b)| (b, a)).collect();
        let weights = keep.iter().map(|&i| self.weights[i].clone()).collect();
        let ops = self
            .ops
            .iter()
            .map(|(k, m)| {
                let cols = keep
                    .iter()
                    .map(|&c| {
                        SparseVec::from_pairs(m.cols[c].iter().map(|(r, x)| {
                            (*index.get(&r).expect("basis subset is invariant"), x.clone())
                        }))
                    })
                    .collect();
                (
                    *k,
                    SparseMatrix {
                        nrows: keep.len(),
                        cols,
                    },
                )
            })
            .collect();
        WeightModule {
            n: self.n,
            weights,
            ops,
        }
    }

    /// JSON export: weights, and per operator the nonzero `[row, col, "p/q"]`
    /// triplets (0-based) under keys `"i,j"`.
    pub fn to_json(&self) -> Value {
        let mut actions = Map::new();
        for ((i, j), m) in &self.ops {
            let entries: Vec<Value> = m
                .triplets()
                .into_iter()
                .map(|(r, c, x)| json!([r, c, q_to_string(&x)]))
                .collect();
            actions.insert(format!("{i},{j}"), Value::Array(entries));
        }
        json!({
            "n": self.n,
            "weights": self.weights.iter().map(|w| w.0.clone()).collect::<Vec<_>>(),
            "actions": Value::Object(actions),
        })
    }
}

/// `(i, j)` with `1 <= i < j <= n`.
pub fn raising_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
}

fn check_same_n(m: &WeightModule, n: &WeightModule) -> Result<()> {
    if m.n != n.n {
        return Err(KpError::RankMismatch(m.n, n.n));
    }
    Ok(())
}

fn vector_rep_with(n: usize, lowering: bool) -> WeightModule {
    let weights = (1..=n).map(|k| Weight::epsilon(n, k)).collect();
    let mut ops = BTreeMap::new();
    for i in 1..=n {
        for j in 1..=n {
            if i == j || (i > j && !lowering) {
                continue;
            }
            // e_ij u_k = delta_jk u_i
            let mut m = SparseMatrix::zero(n, n);
            m.cols[j - 1] = SparseVec::unit(i - 1);
            ops.insert((i, j), m);
        }
    }
    WeightModule { n, weights, ops }
}

/// `K^n` with `e_ij u_k = delta_jk u_i`.
pub fn vector_rep(n: usize) -> WeightModule {
    vector_rep_with(n, false)
}

/// `K^n` as a `gl_n`-module, including the lowering operators.
pub fn vector_rep_gl(n: usize) -> WeightModule {
    vector_rep_with(n, true)
}

/// `K_lambda`: one-dimensional, every `e_ij` acts by zero.
pub fn one_dim(lambda: &Weight) -> WeightModule {
    let n = lambda.n();
    let ops = raising_pairs(n)
        .map(|p| (p, SparseMatrix::zero(1, 1)))
        .collect();
    WeightModule {
        n,
        weights: vec![lambda.clone()],
        ops,
    }
}

/// `K_lambda (x) M`: shifts every weight by `lambda`.
pub fn twist(m: &WeightModule, lambda: &Weight) -> WeightModule {
    WeightModule {
        n: m.n,
        weights: m.weights.iter().map(|w| w.add(lambda)).collect(),
        ops: m.ops.clone(),
    }
}

fn common_ops(m: &WeightModule, n: &WeightModule) -> Vec<(usize, usize)> {
    m.ops
        .keys()
        .filter(|k| n.ops.contains_key(k))
        .copied()
        .collect()
}

/// `M (x) N` with the Leibniz action; basis `(a, b) -> a * dim N + b`.
pub fn tensor_product(m: &WeightModule, n: &WeightModule) -> Result<WeightModule> {
    check_same_n(m, n)?;
    let (dm, dn) = (m.dim(), n.dim());
    check_cap(dm * dn)?;
    let weights = m
        .weights
        .iter()
        .flat_map(|a| n.weights.iter().map(move |b| a.add(b)))
        .collect();
    let mut ops = BTreeMap::new();
    for key in common_ops(m, n) {
        let (em, en) = (&m.ops[&key], &n.ops[&key]);
        let mut cols = Vec::with_capacity(dm * dn);
        for a in 0..dm {
            for b in 0..dn {
                let mut v = SparseVec::new();
                for (r, x) in em.cols[a].iter() {
                    v.add_at(r * dn + b, x);
                }
                for (r, x) in en.cols[b].iter() {
                    v.add_at(a * dn + r, x);
                }
                cols.push(v);
            }
        }
        ops.insert(
            key,
            SparseMatrix {
                nrows: dm * dn,
                cols,
            },
        );
    }
    Ok(WeightModule {
        n: m.n,
        weights,
        ops,
    })
}

/// `M^{(x) k}`; `k = 0` gives the trivial module.
pub fn tensor_power(m: &WeightModule, k: usize) -> Result<WeightModule> {
    let mut out = one_dim(&Weight::zero(m.n));
    if m.has_lowering() {
        out = with_zero_lowering(out);
    }
    for _ in 0..k {
        out = tensor_product(&out, m)?;
    }
    Ok(out)
}

fn with_zero_lowering(mut m: WeightModule) -> WeightModule {
    for i in 1..=m.n {
        for j in 1..i {
            m.ops
                .insert((i, j), SparseMatrix::zero(m.dim(), m.dim()));
        }
    }
    m
}

/// Sorted `k`-subsets (`repeat = false`) or `k`-multisets of `0..dim`, in lex order.
fn index_tuples(dim: usize, k: usize, repeat: bool) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, dim: usize, k: usize, repeat: bool, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..dim {
            cur.push(x);
            rec(if repeat { x } else { x + 1 }, dim, k, repeat, cur, out);
            cur.pop();
        }
    }
    rec(0, dim, k, repeat, &mut cur, &mut out);
    out
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc.min(usize::MAX as u128) as usize
}

/// A tensor-like construction whose basis is indexed by sorted tuples.
struct TupleBasis {
    tuples: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl TupleBasis {
    fn new(dim: usize, k: usize, repeat: bool) -> Self {
        let tuples = index_tuples(dim, k, repeat);
        let index = tuples.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        TupleBasis { tuples, index }
    }
}

/// `Lambda^k M` with basis the wedges of increasing `k`-subsets of M's basis.
pub fn exterior_power(m: &WeightModule, k: usize) -> Result<WeightModule> {
    check_cap(binomial(m.dim(), k))?;
    let basis = TupleBasis::new(m.dim(), k, false);
    let weights = basis
        .tuples
        .iter()
        .map(|t| t.iter().fold(Weight::zero(m.n), |acc, &i| acc.add(&m.weights[i])))
        .collect();
    let mut ops = BTreeMap::new();
    for (key, e) in &m.ops {
        let cols = basis
            .tuples
            .iter()
            .map(|t| {
                let mut v = SparseVec::new();
                for pos in 0..t.len() {
                    for (x, c) in e.cols[t[pos]].iter() {
                        if t.iter().enumerate().any(|(p, &y)| p != pos && y == x) {
                            continue;
                        }
                        let mut s = t.clone();
                        s[pos] = x;
                        let sign = sort_with_sign(&mut s);
                        v.add_at(basis.index[&s], &(c * q(sign)));
                    }
                }
                v
            })
            .collect();
        ops.insert(
            *key,
            SparseMatrix {
                nrows: basis.tuples.len(),
                cols,
            },
        );
    }
    Ok(WeightModule {
        n: m.n,
        weights,
        ops,
    })
}

/// Sorts distinct entries in place; returns the sign of the sorting permutation.
fn sort_with_sign(s: &mut [usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if s[i] > s[j] {
                inversions += 1;
            }
        }
    }
    s.sort_unstable();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `S^k M` with basis the monomials in M's basis.
pub fn symmetric_power(m: &WeightModule, k: usize) -> Result<WeightModule> {
    check_cap(binomial(m.dim() + k.max(1) - 1, k))?;
    let basis = TupleBasis::new(m.dim(), k, true);
    let weights = basis
        .tuples
        .iter()
        .map(|t| t.iter().fold(Weight::zero(m.n), |acc, &i| acc.add(&m.weights[i])))
        .collect();
    let mut ops = BTreeMap::new();
    for (key, e) in &m.ops {
        let cols = basis
            .tuples
            .iter()
            .map(|t| {
                let mut v = SparseVec::new();
                for pos in 0..t.len() {
                    for (x, c) in e.cols[t[pos]].iter() {
                        let mut s = t.clone();
                        s[pos] = x;
                        s.sort_unstable();
                        v.add_at(basis.index[&s], c);
                    }
                }
                v
            })
            .collect();
        ops.insert(
            *key,
            SparseMatrix {
                nrows: basis.tuples.len(),
                cols,
            },
        );
    }
    Ok(WeightModule {
        n: m.n,
        weights,
        ops,
    })
}

/// Index of a wedge `u_{s_1} ^ ... ^ u_{s_k}` (0-based, increasing) in
/// [`exterior_power`]'s basis.
pub fn wedge_index(dim: usize, subset: &[usize]) -> usize {
    // rank of the subset among all k-subsets in lex order
    let k = subset.len();
    let mut rank = 0;
    let mut prev = 0;
    for (pos, &x) in subset.iter().enumerate() {
        for y in prev..x {
            rank += binomial(dim - y - 1, k - pos - 1);
        }
        prev = x + 1;
    }
    rank
}

/// Index of a monomial (sorted multiset) in [`symmetric_power`]'s basis.
pub fn monomial_index(dim: usize, multiset: &[usize]) -> usize {
    let k = multiset.len();
    let mut rank = 0;
    let mut prev = 0;
    for (pos, &x) in multiset.iter().enumerate() {
        let left = k - pos - 1;
        for y in prev..x {
            // multisets of size `left` over y..dim
            rank += binomial(dim - y + left - 1, left);
        }
        prev = x;
    }
    rank
}

/// `M^* (x) K_rho`: dual basis, weights `rho - mu`, action `-E^T`.
pub fn dual_twist(m: &WeightModule) -> WeightModule {
    let rho = Weight::rho(m.n);
    WeightModule {
        n: m.n,
        weights: m.weights.iter().map(|w| rho.sub(w)).collect(),
        ops: m
            .ops
            .iter()
            .map(|(k, e)| (*k, e.transpose().scaled(&-Q::one())))
            .collect(),
    }
}

/// Direct sum `M (+) N`.
pub fn direct_sum(m: &WeightModule, n: &WeightModule) -> Result<WeightModule> {
    check_same_n(m, n)?;
    let dm = m.dim();
    let mut weights = m.weights.clone();
    weights.extend(n.weights.iter().cloned());
    let mut ops = BTreeMap::new();
    for key in common_ops(m, n) {
        let mut cols = m.ops[&key].cols.clone();
        for col in &n.ops[&key].cols {
            cols.push(SparseVec::from_pairs(col.iter().map(|(r, x)| (r + dm, x.clone()))));
        }
        ops.insert(
            key,
            SparseMatrix {
                nrows: dm + n.dim(),
                cols,
            },
        );
    }
    Ok(WeightModule {
        n: m.n,
        weights,
        ops,
    })
}

/// `ch(M^* (x) K_rho)(x) = x^rho ch(M)(x^{-1})`, computed from the character alone.
pub fn dual_twist_character(ch: &LaurentPoly) -> LaurentPoly {
    ch.invert_variables().shift(&Weight::rho(ch.n()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wt(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    #[test]
    fn vector_rep_action() {
        let v = vector_rep(3);
        assert_eq!(v.act(1, 3, &SparseVec::unit(2)).unwrap(), SparseVec::unit(0));
        assert!(v.act(1, 3, &SparseVec::unit(1)).unwrap().is_zero());
        let ch = v.character();
        assert_eq!(ch.to_string(), "x1 + x2 + x3");
        assert!(v.check_weights() && v.check_brackets());
    }

    #[test]
    fn gl_vector_rep_brackets() {
        let v = vector_rep_gl(3);
        assert!(v.check_weights());
        assert!(v.check_brackets());
        assert!(v.has_lowering());
    }

    #[test]
    fn one_dim_character() {
        let k = one_dim(&Weight::rho(3));
        assert_eq!(k.character().to_string(), "x1^2*x2");
        assert_eq!(k.dim(), 1);
    }

    #[test]
    fn exterior_square_of_k2() {
        let l = exterior_power(&vector_rep(2), 2).unwrap();
        assert_eq!(l.dim(), 1);
        assert_eq!(l.weights(), &[wt(&[1, 1])]);
        assert!(exterior_power(&vector_rep(2), 3).unwrap().dim() == 0);
    }

    #[test]
    fn symmetric_square_of_k2() {
        let s = symmetric_power(&vector_rep(2), 2).unwrap();
        assert_eq!(s.dim(), 3);
        assert_eq!(s.character().to_string(), "x1^2 + x1*x2 + x2^2");
        assert!(s.check_brackets());
    }

    #[test]
    fn powers_of_gl_module_keep_brackets() {
        let v = vector_rep_gl(3);
        assert!(exterior_power(&v, 2).unwrap().check_brackets());
        assert!(symmetric_power(&v, 2).unwrap().check_brackets());
        let t = tensor_product(&v, &exterior_power(&v, 2).unwrap()).unwrap();
        assert!(t.check_weights() && t.check_brackets());
    }

    #[test]
    fn tensor_character_is_product() {
        let a = vector_rep(3);
        let b = exterior_power(&vector_rep(3), 2).unwrap();
        let t = tensor_product(&a, &b).unwrap();
        assert_eq!(t.character(), &a.character() * &b.character());
        assert!(t.check_brackets());
    }

    #[test]
    fn dual_twist_examples() {
        let k = dual_twist(&one_dim(&wt(&[1, 0, 2])));
        assert_eq!(k.weights(), &[wt(&[1, 1, -2])]);
        let v = vector_rep(3);
        let d = dual_twist(&v);
        assert!(d.check_weights() && d.check_brackets());
        assert_eq!(d.character(), dual_twist_character(&v.character()));
        assert_eq!(dual_twist(&d).character(), v.character());
    }

    #[test]
    fn wedge_and_monomial_indices() {
        let t = index_tuples(5, 3, false);
        for (i, s) in t.iter().enumerate() {
            assert_eq!(wedge_index(5, s), i);
        }
        let t = index_tuples(4, 3, true);
        for (i, s) in t.iter().enumerate() {
            assert_eq!(monomial_index(4, s), i);
        }
    }

    #[test]
    fn json_export_shape() {
        let v = vector_rep(2);
        let j = v.to_json();
        assert_eq!(j["n"], 2);
        assert_eq!(j["weights"], json!([[1, 0], [0, 1]]));
        assert_eq!(j["actions"]["1,2"], json!([[0, 1, "1/1"]]));
    }

    #[test]
    fn degree_split() {
        let m = direct_sum(&vector_rep(2), &one_dim(&wt(&[0, 0]))).unwrap();
        assert_eq!(m.degrees(), vec![0, 1]);
        assert_eq!(m.degree_part(1).dim(), 2);
        assert_eq!(m.degree_part(0).dim(), 1);
    }
}
