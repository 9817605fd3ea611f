//! Operator identities in `U(n_3^+)` checked on `S^a(Lambda^2 K^3) (x) S^b(K^3)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::closure::{cyclic_submodule, Closure};
use super::{exterior_power, monomial_index, symmetric_power, tensor_product, vector_rep, WeightModule};
use crate::error::{KpError, Result};
use crate::linalg::{Q, SparseVec};

pub const DEFAULT_U3_BOUND: usize = 3;

const E12: (usize, usize) = (1, 2);
const E13: (usize, usize) = (1, 3);
const E23: (usize, usize) = (2, 3);

/// `S^a(Lambda^2 K^3) (x) S^b(K^3)` with the generator `(u_2 ^ u_3)^a (x) u_3^b`.
pub fn u3_module(a: usize, b: usize) -> Result<(WeightModule, SparseVec)> {
    let v = vector_rep(3);
    let l2 = exterior_power(&v, 2)?;
    let sa = symmetric_power(&l2, a)?;
    let sb = symmetric_power(&v, b)?;
    let m = tensor_product(&sa, &sb)?;
    // u_2 ^ u_3 is the last wedge; u_3 the last basis vector
    let ia = monomial_index(3, &vec![2; a]);
    let ib = monomial_index(3, &vec![2; b]);
    Ok((m, SparseVec::unit(ia * sb.dim() + ib)))
}

fn word(parts: &[((usize, usize), usize)]) -> Vec<(usize, usize)> {
    parts
        .iter()
        .flat_map(|&(e, k)| std::iter::repeat_n(e, k))
        .collect()
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct U3Report {
    pub kind: String,
    pub params: BTreeMap<String, usize>,
    /// False when the identity's hypothesis excludes these parameters.
    pub applicable: bool,
    pub pass: bool,
    /// Dimension of the cyclic module the identity is checked in.
    pub dim: Option<usize>,
    pub expected_dim: Option<usize>,
    pub failures: Vec<String>,
}

fn check_bound(params: &[(&'static str, usize)], bound: usize) -> Result<()> {
    for &(param, value) in params {
        if value > bound {
            return Err(KpError::BoundExceeded { param, value, bound });
        }
    }
    Ok(())
}

/// The cyclic module on `(u_2 ^ u_3)^a (x) u_3^b` is `U(n_3^+) / <e_12^{a+1}, e_23^{b+1}>`:
/// checks the two relations, their sharpness and the dimension
/// `(a+1)(b+1)(a+b+2)/2`.
pub fn cyclic_check(a: usize, b: usize, bound: usize) -> Result<U3Report> {
    check_bound(&[("a", a), ("b", b)], bound)?;
    let (m, g) = u3_module(a, b)?;
    let mut failures = Vec::new();
    if !m.act_power(1, 2, a + 1, &g).is_zero() {
        failures.push(format!("e12^{} g != 0", a + 1));
    }
    if !m.act_power(2, 3, b + 1, &g).is_zero() {
        failures.push(format!("e23^{} g != 0", b + 1));
    }
    if a >= 1 && m.act_power(1, 2, a, &g).is_zero() {
        failures.push(format!("e12^{a} g = 0"));
    }
    if b >= 1 && m.act_power(2, 3, b, &g).is_zero() {
        failures.push(format!("e23^{b} g = 0"));
    }
    let dim = cyclic_submodule(&m, &g, Closure::Simple)?.dim();
    let expected = (a + 1) * (b + 1) * (a + b + 2) / 2;
    if dim != expected {
        failures.push(format!("cyclic dimension {dim} != {expected}"));
    }
    Ok(U3Report {
        kind: "cyclic".into(),
        params: [("a".to_string(), a), ("b".to_string(), b)].into(),
        applicable: true,
        pass: failures.is_empty(),
        dim: Some(dim),
        expected_dim: Some(expected),
        failures,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CongruenceCase {
    One,
    Two,
    Three,
    Four,
    Five,
    Six,
}

impl CongruenceCase {
    pub const ALL: [CongruenceCase; 6] = [
        CongruenceCase::One,
        CongruenceCase::Two,
        CongruenceCase::Three,
        CongruenceCase::Four,
        CongruenceCase::Five,
        CongruenceCase::Six,
    ];

    pub fn from_index(k: usize) -> Option<Self> {
        Self::ALL.get(k.checked_sub(1)?).copied()
    }

    pub fn index(self) -> usize {
        Self::ALL.iter().position(|&c| c == self).unwrap() + 1
    }

    /// Whether the identity depends on `N'` and `M'`.
    pub fn uses_primed(self) -> bool {
        matches!(self, CongruenceCase::One | CongruenceCase::Two)
    }
}

/// Exponents `N, M, N', M'` of a congruence.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CongruenceParams {
    pub n: usize,
    pub m: usize,
    pub n_prime: usize,
    pub m_prime: usize,
}

/// Verifies one congruence `f = g mod <e_pq^{a+1}, e_qr^{b+1}>` as `(f - g) v = 0`
/// on the generator `v` of the module `(a, b)`.
///
/// 1. `e_13^N e_23^M = 0` mod `(N', M')` when `N + M > N' + M'`
/// 2. `e_12^N e_13^M = 0` mod `(N', M')` when `N + M > N' + M'`
/// 3. `e_13^N = (-1)^N / N! e_23^N e_12^N` mod `(M, 0)`
/// 4. `e_13^N = 1 / N! e_12^N e_23^N` mod `(0, M)`
/// 5. `e_12^{N+M+1} e_23^M = 0` mod `(N, M)`
/// 6. `e_12^N e_23^M = 0` mod `<e_12, e_13^N, e_23^{M+1}>`: checked as
///    `e_12^N e_23^M v` lying in `U e_13^N v` in the module `(0, M)`.
pub fn congruence_check(case: CongruenceCase, p: CongruenceParams, bound: usize) -> Result<U3Report> {
    check_bound(
        &[("N", p.n), ("M", p.m), ("N'", p.n_prime), ("M'", p.m_prime)],
        bound,
    )?;
    let mut params: BTreeMap<String, usize> =
        [("N".to_string(), p.n), ("M".to_string(), p.m)].into();
    if case.uses_primed() {
        params.insert("N'".into(), p.n_prime);
        params.insert("M'".into(), p.m_prime);
    }
    let mut report = U3Report {
        kind: format!("congruence_case_{}", case.index()),
        params,
        applicable: true,
        pass: true,
        dim: None,
        expected_dim: None,
        failures: Vec::new(),
    };
    if case.uses_primed() && p.n + p.m <= p.n_prime + p.m_prime {
        report.applicable = false;
        return Ok(report);
    }
    let residue = match case {
        CongruenceCase::One => {
            let (m, g) = u3_module(p.n_prime, p.m_prime)?;
            report.dim = Some(cyclic_submodule(&m, &g, Closure::Simple)?.dim());
            m.act_word(&word(&[(E13, p.n), (E23, p.m)]), &g)
        }
        CongruenceCase::Two => {
            let (m, g) = u3_module(p.n_prime, p.m_prime)?;
            report.dim = Some(cyclic_submodule(&m, &g, Closure::Simple)?.dim());
            m.act_word(&word(&[(E12, p.n), (E13, p.m)]), &g)
        }
        CongruenceCase::Three => {
            let (m, g) = u3_module(p.m, 0)?;
            report.dim = Some(cyclic_submodule(&m, &g, Closure::Simple)?.dim());
            let lhs = m.act_power(1, 3, p.n, &g);
            let rhs = m.act_word(&word(&[(E23, p.n), (E12, p.n)]), &g);
            let sign = if p.n.is_multiple_of(2) { 1 } else { -1 };
            let c = Q::new(BigInt::from(sign), factorial(p.n));
            lhs.sub(&rhs.scaled(&c))
        }
        CongruenceCase::Four => {
            let (m, g) = u3_module(0, p.m)?;
            report.dim = Some(cyclic_submodule(&m, &g, Closure::Simple)?.dim());
            let lhs = m.act_power(1, 3, p.n, &g);
            let rhs = m.act_word(&word(&[(E12, p.n), (E23, p.n)]), &g);
            let c = Q::new(BigInt::one(), factorial(p.n));
            lhs.sub(&rhs.scaled(&c))
        }
        CongruenceCase::Five => {
            let (m, g) = u3_module(p.n, p.m)?;
            report.dim = Some(cyclic_submodule(&m, &g, Closure::Simple)?.dim());
            m.act_word(&word(&[(E12, p.n + p.m + 1), (E23, p.m)]), &g)
        }
        CongruenceCase::Six => {
            let (m, g) = u3_module(0, p.m)?;
            report.dim = Some(cyclic_submodule(&m, &g, Closure::Simple)?.dim());
            let ideal = cyclic_submodule(&m, &m.act_power(1, 3, p.n, &g), Closure::Simple)?;
            let x = m.act_word(&word(&[(E12, p.n), (E23, p.m)]), &g);
            if ideal.contains(&x) {
                SparseVec::new()
            } else {
                x
            }
        }
    };
    if !residue.is_zero() {
        report.pass = false;
        report.failures.push(format!("residue {residue:?}"));
    }
    Ok(report)
}

/// Every applicable parameter choice with all exponents at most `bound`.
pub fn congruence_sweep(bound: usize) -> Result<Vec<U3Report>> {
    let mut out = Vec::new();
    for case in CongruenceCase::ALL {
        let primed = if case.uses_primed() { bound } else { 0 };
        for n in 0..=bound {
            for m in 0..=bound {
                for n_prime in 0..=primed {
                    for m_prime in 0..=primed {
                        let p = CongruenceParams {
                            n,
                            m,
                            n_prime,
                            m_prime,
                        };
                        let r = congruence_check(case, p, bound)?;
                        if r.applicable {
                            out.push(r);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjoint_has_dim_8() {
        let r = cyclic_check(1, 1, DEFAULT_U3_BOUND).unwrap();
        assert!(r.pass, "{:?}", r.failures);
        assert_eq!(r.dim, Some(8));
    }

    #[test]
    fn cyclic_grid() {
        for a in 0..=3 {
            for b in 0..=3 {
                let r = cyclic_check(a, b, 3).unwrap();
                assert!(r.pass, "a={a} b={b}: {:?}", r.failures);
            }
        }
    }

    #[test]
    fn case5_example() {
        let p = CongruenceParams { n: 1, m: 1, ..Default::default() };
        assert!(congruence_check(CongruenceCase::Five, p, 3).unwrap().pass);
    }

    #[test]
    fn case3_example_and_wrong_sign() {
        let p = CongruenceParams { n: 1, m: 2, ..Default::default() };
        assert!(congruence_check(CongruenceCase::Three, p, 3).unwrap().pass);
        // e_13 - e_23 e_12 does not annihilate the generator
        let (m, g) = u3_module(2, 0).unwrap();
        let x = m.act(1, 3, &g).unwrap();
        let y = m.act_word(&[(2, 3), (1, 2)], &g);
        assert!(!x.sub(&y).is_zero());
    }

    #[test]
    fn inapplicable_parameters() {
        let p = CongruenceParams { n: 1, m: 0, n_prime: 1, m_prime: 0 };
        let r = congruence_check(CongruenceCase::One, p, 3).unwrap();
        assert!(!r.applicable);
    }

    #[test]
    fn bound_is_enforced() {
        assert!(cyclic_check(4, 0, 3).is_err());
        let p = CongruenceParams { n: 4, ..Default::default() };
        assert!(congruence_check(CongruenceCase::Six, p, 3).is_err());
    }

    #[test]
    fn full_sweep_passes() {
        let reports = congruence_sweep(3).unwrap();
        assert!(!reports.is_empty());
        for r in &reports {
            assert!(r.pass, "{} {:?}", r.kind, r.params);
        }
        for case in CongruenceCase::ALL {
            assert!(reports.iter().any(|r| r.kind.ends_with(&case.index().to_string())));
        }
    }
}
