//! Permutation combinatorics: Lehmer codes, inversion and Rothe diagrams,
//! the transition recursion data, the `m_ij` exponent table and the three
//! orderings on integer weights.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{KpError, Result};

/// A finitely supported bijection of the positive integers, stored as the
/// shortest one-line window `w(1), ..., w(N)` with `w(i) = i` for `i > N`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    window: Vec<u32>,
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let window = Vec::<u32>::deserialize(d)?;
        Permutation::from_window(window).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation { window: Vec::new() }
    }

    /// Validates and canonicalizes a one-line window.
    pub fn from_window(window: Vec<u32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n];
        for &x in &window {
            let ok = x >= 1 && (x as usize) <= n && !seen[x as usize - 1];
            if !ok {
                return Err(KpError::NotAPermutation(window, n));
            }
            seen[x as usize - 1] = true;
        }
        Ok(Self::canonical(window))
    }

    fn canonical(mut window: Vec<u32>) -> Self {
        while let Some(&last) = window.last() {
            if last as usize == window.len() {
                window.pop();
            } else {
                break;
            }
        }
        Permutation { window }
    }

    /// The transposition `t_ij` exchanging `i` and `j`.
    pub fn transposition(i: usize, j: usize) -> Self {
        let n = i.max(j);
        let mut window: Vec<u32> = (1..=n as u32).collect();
        window.swap(i - 1, j - 1);
        Self::canonical(window)
    }

    /// The simple transposition `s_i = t_{i,i+1}`.
    pub fn simple(i: usize) -> Self {
        Self::transposition(i, i + 1)
    }

    /// The longest element `[m, m-1, ..., 1]` of `S_m`.
    pub fn longest(m: usize) -> Self {
        Self::canonical((1..=m as u32).rev().collect())
    }

    pub fn window(&self) -> &[u32] {
        &self.window
    }

    /// Length of the canonical window; `w(i) = i` beyond it.
    pub fn support_len(&self) -> usize {
        self.window.len()
    }

    pub fn is_identity(&self) -> bool {
        self.window.is_empty()
    }

    /// `w(i)` for a 1-based position.
    pub fn apply(&self, i: usize) -> usize {
        if i >= 1 && i <= self.window.len() {
            self.window[i - 1] as usize
        } else {
            i
        }
    }

    /// The window padded with fixed points to length `len`.
    pub fn window_padded(&self, len: usize) -> Vec<u32> {
        let len = len.max(self.window.len());
        (1..=len).map(|i| self.apply(i) as u32).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.window.len()];
        for (i, &x) in self.window.iter().enumerate() {
            inv[x as usize - 1] = i as u32 + 1;
        }
        Permutation { window: inv }
    }

    /// Composition `self * other`, i.e. `i -> self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        let n = self.window.len().max(other.window.len());
        Self::canonical((1..=n).map(|i| self.apply(other.apply(i)) as u32).collect())
    }

    /// `I(w) = {(i, j) : i < j, w(i) > w(j)}`, sorted.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let n = self.window.len();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if self.apply(i) > self.apply(j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Rothe diagram `D(w) = {(i, w(j)) : i < j, w(i) > w(j)}`, sorted.
    pub fn rothe_diagram(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .inversions()
            .into_iter()
            .map(|(i, j)| (i, self.apply(j)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn length(&self) -> usize {
        self.inversions().len()
    }

    pub fn sign(&self) -> i32 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Column sizes `l_j = #{i : (i, j) in I(w)}` for `j = 1..=N`.
    pub fn column_sizes(&self) -> Vec<usize> {
        let n = self.window.len();
        (1..=n)
            .map(|j| (1..j).filter(|&i| self.apply(i) > self.apply(j)).count())
            .collect()
    }

    /// `{i : (i, j) in I(w)}` for the given column `j`.
    pub fn column_set(&self, j: usize) -> Vec<usize> {
        (1..j).filter(|&i| self.apply(i) > self.apply(j)).collect()
    }

    /// Lehmer code over the whole window.
    pub fn full_code(&self) -> Vec<i64> {
        let n = self.window.len();
        (1..=n)
            .map(|i| (i + 1..=n).filter(|&j| self.apply(i) > self.apply(j)).count() as i64)
            .collect()
    }

    /// Membership in `S_inf^(n)`: increasing after position `n`.
    pub fn in_grassmann_window(&self, n: usize) -> bool {
        self.full_code().iter().skip(n).all(|&c| c == 0)
    }

    /// Membership in `S_n`.
    pub fn in_symmetric_group(&self, n: usize) -> bool {
        self.window.len() <= n
    }

    /// Lehmer code truncated to `n` entries; rejects `w` outside `S_inf^(n)`.
    pub fn code(&self, n: usize) -> Result<Weight> {
        let full = self.full_code();
        if let Some((idx, &value)) = full.iter().enumerate().skip(n).find(|(_, &c)| c != 0) {
            return Err(KpError::OutsideGrassmannWindow {
                n,
                index: idx + 1,
                value,
            });
        }
        let mut entries = full;
        entries.resize(n, 0);
        entries.truncate(n);
        Ok(Weight(entries))
    }

    /// Positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.window.len())
            .filter(|&i| self.apply(i) > self.apply(i + 1))
            .collect()
    }

    /// True when no `a < b < c < d` has `w(b) < w(a) < w(d) < w(c)`.
    pub fn avoids_2143(&self) -> bool {
        let n = self.window.len();
        let w = |i: usize| self.apply(i);
        for a in 1..=n {
            for b in a + 1..=n {
                if w(b) >= w(a) {
                    continue;
                }
                for c in b + 1..=n {
                    if w(c) <= w(a) {
                        continue;
                    }
                    for d in c + 1..=n {
                        if w(a) < w(d) && w(d) < w(c) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// All elements of `S_m` in lexicographic order of their one-line windows.
pub fn all_permutations(m: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = (1..=m as u32).collect();
    loop {
        out.push(Permutation::canonical(current.clone()));
        // next lexicographic permutation
        let Some(i) = (1..current.len()).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..current.len())
            .rev()
            .find(|&j| current[j] > current[i - 1])
            .expect("a larger suffix element exists");
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}

/// An integer weight vector of fixed length `n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    /// `epsilon_i` (1-based).
    pub fn epsilon(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i - 1] = 1;
        Weight(v)
    }

    /// `rho = (n-1, n-2, ..., 0)`.
    pub fn rho(n: usize) -> Self {
        Weight((0..n as i64).rev().collect())
    }

    /// `k * (1, ..., 1)`.
    pub fn constant(n: usize, k: i64) -> Self {
        Weight(vec![k; n])
    }

    /// `epsilon_i - epsilon_j`, the weight of `e_ij`.
    pub fn root(n: usize, i: usize, j: usize) -> Self {
        let mut v = vec![0; n];
        v[i - 1] += 1;
        v[j - 1] -= 1;
        Weight(v)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// `|lambda|`
    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn min_entry(&self) -> i64 {
        self.0.iter().copied().min().unwrap_or(0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn shift(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a + k).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    /// Entries sorted into weakly decreasing order.
    pub fn sorted_descending(&self) -> Weight {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Weight(v)
    }

    fn check_len(&self, other: &Weight) -> Result<()> {
        if self.n() != other.n() {
            return Err(KpError::LengthMismatch {
                expected: self.n(),
                got: other.n(),
            });
        }
        Ok(())
    }
}

/// `perm(lambda)`: the unique `w in S_inf^(n)` with `code(w) = lambda`.
pub fn perm_of(lambda: &Weight) -> Result<Permutation> {
    if let Some((idx, &value)) = lambda.0.iter().enumerate().find(|(_, &x)| x < 0) {
        return Err(KpError::NegativeCode {
            index: idx + 1,
            value,
        });
    }
    let n = lambda.n();
    let max = lambda.0.iter().copied().max().unwrap_or(0) as usize;
    let total = n + max;
    let mut remaining: Vec<u32> = (1..=total as u32).collect();
    let mut window = Vec::with_capacity(total);
    for &c in &lambda.0 {
        window.push(remaining.remove(c as usize));
    }
    window.extend(remaining);
    Ok(Permutation::canonical(window))
}

/// Exponent table `m_ij(w) = #{k > j : w(i) < w(k) < w(j)}` with the
/// redundancy-pruned generator set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MTable {
    pub n: usize,
    /// Row-major over pairs `(i, j)`, `1 <= i < j <= n`.
    pub entries: Vec<((usize, usize), usize)>,
    /// Pairs with no `i < q < j` satisfying `m_ij = m_iq + m_qj`.
    pub pruned: Vec<(usize, usize)>,
}

impl MTable {
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries
            .iter()
            .find(|(p, _)| *p == (i, j))
            .map(|(_, m)| *m)
            .unwrap_or(0)
    }

    /// Superfluous pairs together with a witness `q` that makes them redundant.
    pub fn redundant(&self) -> Vec<((usize, usize), usize)> {
        let mut out = Vec::new();
        for &((i, j), m) in &self.entries {
            if let Some(q) = (i + 1..j).find(|&q| m == self.get(i, q) + self.get(q, j)) {
                out.push(((i, j), q));
            }
        }
        out
    }
}

pub fn m_entry(w: &Permutation, i: usize, j: usize) -> usize {
    let (wi, wj) = (w.apply(i), w.apply(j));
    if wi > wj {
        return 0;
    }
    let bound = w.support_len().max(j);
    (j + 1..=bound)
        .filter(|&k| wi < w.apply(k) && w.apply(k) < wj)
        .count()
}

pub fn m_table(w: &Permutation, n: usize) -> Result<MTable> {
    w.code(n)?;
    let mut entries = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            entries.push(((i, j), m_entry(w, i, j)));
        }
    }
    let mut table = MTable {
        n,
        entries,
        pruned: Vec::new(),
    };
    let redundant: BTreeSet<(usize, usize)> =
        table.redundant().into_iter().map(|(p, _)| p).collect();
    table.pruned = table
        .entries
        .iter()
        .map(|(p, _)| *p)
        .filter(|p| !redundant.contains(p))
        .collect();
    Ok(table)
}

/// Data of one transition step `S_w = x_j S_v + sum_a S_{w^(a)}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransitionData {
    pub w: Permutation,
    pub j: usize,
    pub k: usize,
    pub v: Permutation,
    /// `(i_a, w^(a))` with `i_1 < i_2 < ...`.
    pub branches: Vec<(usize, Permutation)>,
}

pub fn transition(w: &Permutation) -> Result<TransitionData> {
    let j = *w.descents().last().ok_or(KpError::TransitionAtIdentity)?;
    let wj = w.apply(j);
    let k = (j + 1..=w.support_len())
        .rev()
        .find(|&k| w.apply(k) < wj)
        .expect("a descent at j has a smaller entry to its right");
    let v = w.compose(&Permutation::transposition(j, k));
    let lv = v.length();
    let branches = (1..j)
        .filter_map(|i| {
            let u = v.compose(&Permutation::transposition(i, j));
            (u.length() == lv + 1).then_some((i, u))
        })
        .collect();
    Ok(TransitionData {
        w: w.clone(),
        j,
        k,
        v,
        branches,
    })
}

/// The three orders on weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeightOrder {
    /// `<=`: lexicographic comparison of inverse permutations.
    Lex,
    /// `<='`: reverse-lexicographic comparison of inverse permutations.
    RevLex,
    /// Dominance: `mu >= lambda` iff `mu - lambda` is a nonnegative sum of simple roots.
    Dominance,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Comparison {
    Less,
    Equal,
    Greater,
    Incomparable,
}

impl Comparison {
    pub fn to_ordering(self) -> Option<Ordering> {
        match self {
            Comparison::Less => Some(Ordering::Less),
            Comparison::Equal => Some(Ordering::Equal),
            Comparison::Greater => Some(Ordering::Greater),
            Comparison::Incomparable => None,
        }
    }

    pub fn is_le(self) -> bool {
        matches!(self, Comparison::Less | Comparison::Equal)
    }

    pub fn is_ge(self) -> bool {
        matches!(self, Comparison::Greater | Comparison::Equal)
    }
}

/// Shift used by the order comparisons: `max(0, -min entries)`.
pub fn default_shift(lambda: &Weight, mu: &Weight) -> i64 {
    (-lambda.min_entry().min(mu.min_entry())).max(0)
}

pub fn compare(lambda: &Weight, mu: &Weight, order: WeightOrder) -> Result<Comparison> {
    compare_with_shift(lambda, mu, order, default_shift(lambda, mu))
}

/// As [`compare`], with an explicit shift `k` making both weights nonnegative.
pub fn compare_with_shift(
    lambda: &Weight,
    mu: &Weight,
    order: WeightOrder,
    k: i64,
) -> Result<Comparison> {
    lambda.check_len(mu)?;
    if lambda == mu {
        return Ok(Comparison::Equal);
    }
    if lambda.degree() != mu.degree() {
        return Ok(Comparison::Incomparable);
    }
    if order == WeightOrder::Dominance {
        return Ok(if dominates(lambda, mu) {
            Comparison::Greater
        } else if dominates(mu, lambda) {
            Comparison::Less
        } else {
            Comparison::Incomparable
        });
    }
    let w_inv = perm_of(&lambda.shift(k))?.inverse();
    let v_inv = perm_of(&mu.shift(k))?.inverse();
    let len = w_inv.support_len().max(v_inv.support_len());
    let (a, b) = (w_inv.window_padded(len), v_inv.window_padded(len));
    let first_diff = match order {
        WeightOrder::Lex => (0..len).find(|&i| a[i] != b[i]),
        _ => (0..len).rev().find(|&i| a[i] != b[i]),
    };
    let i = first_diff.expect("distinct weights have distinct permutations");
    // a smaller inverse permutation means a larger weight
    Ok(if a[i] < b[i] {
        Comparison::Greater
    } else {
        Comparison::Less
    })
}

/// `mu` dominates `lambda`: equal degree and every partial sum of `mu - lambda`
/// is nonnegative.
pub fn dominates(mu: &Weight, lambda: &Weight) -> bool {
    if mu.n() != lambda.n() || mu.degree() != lambda.degree() {
        return false;
    }
    let mut partial = 0;
    for (a, b) in mu.0.iter().zip(&lambda.0) {
        partial += a - b;
        if partial < 0 {
            return false;
        }
    }
    true
}

/// All `nu` with `|nu| = d` and every entry `>= lower` (there are finitely many).
pub fn degree_box(n: usize, d: i64, lower: i64) -> Vec<Weight> {
    let free = d - lower * n as i64;
    if free < 0 || n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current = vec![0i64; n];
    fn rec(pos: usize, left: i64, current: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let n = current.len();
        if pos == n - 1 {
            current[pos] = left;
            out.push(current.clone());
            return;
        }
        for x in 0..=left {
            current[pos] = x;
            rec(pos + 1, left - x, current, out);
        }
    }
    let mut raw = Vec::new();
    rec(0, free, &mut current, &mut raw);
    for v in raw {
        out.push(Weight(v.into_iter().map(|x| x + lower).collect()));
    }
    out
}

/// Sorts weights of a single degree increasingly under `<=`.
pub fn sort_by_order(weights: &mut [Weight], order: WeightOrder) {
    weights.sort_by(|a, b| {
        compare(a, b, order)
            .ok()
            .and_then(Comparison::to_ordering)
            .expect("weights of one degree are totally ordered")
    });
}

/// `{nu : nu <= lambda}` in increasing order; `lambda` is the last element.
pub fn weight_window(lambda: &Weight) -> Vec<Weight> {
    let candidates = degree_box(lambda.n(), lambda.degree(), lambda.min_entry());
    let mut out: Vec<Weight> = candidates
        .into_iter()
        .filter(|nu| {
            compare(nu, lambda, WeightOrder::Lex)
                .map(Comparison::is_le)
                .unwrap_or(false)
        })
        .collect();
    sort_by_order(&mut out, WeightOrder::Lex);
    out
}

/// All `kappa` with `upper >= kappa >= lower` in dominance order.
pub fn dominance_interval(lower: &Weight, upper: &Weight) -> Vec<Weight> {
    if !dominates(upper, lower) {
        return Vec::new();
    }
    // partial sums of kappa are squeezed between those of lower and upper
    let n = lower.n();
    let mut lo_ps = Vec::with_capacity(n);
    let mut hi_ps = Vec::with_capacity(n);
    let (mut a, mut b) = (0, 0);
    for i in 0..n {
        a += lower.0[i];
        b += upper.0[i];
        lo_ps.push(a);
        hi_ps.push(b);
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    fn rec(
        i: usize,
        prev: i64,
        lo: &[i64],
        hi: &[i64],
        current: &mut Vec<i64>,
        out: &mut Vec<Weight>,
    ) {
        if i == lo.len() {
            out.push(Weight(current.clone()));
            return;
        }
        let range = if i == lo.len() - 1 {
            lo[i]..=lo[i]
        } else {
            lo[i]..=hi[i]
        };
        for s in range {
            current.push(s - prev);
            rec(i + 1, s, lo, hi, current, out);
            current.pop();
        }
    }
    rec(0, 0, &lo_ps, &hi_ps, &mut current, &mut out);
    out
}
