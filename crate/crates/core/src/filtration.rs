//! KP filtrations: the quotient-tower extractor, the Hom-dimension character
//! criterion, and the tensor-product and Schur-functor experiments.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::bmod::{
    dual_twist, generated_submodule, hom_dim, kp_module, largest_quotient, tensor_product, Closure,
    WeightModule,
};
use crate::error::{KpError, Result};
use crate::linalg::{SparseVec, Q};
use crate::permcomb::{all_permutations, compare, Comparison, Weight, WeightOrder};
use crate::schubpoly::{expand_in_schubert, plethysm_eval, schubert, ser_bigint, LaurentPoly, Partition};

/// Default bound on `|sigma|` for Schur-functor experiments.
pub const DEFAULT_SCHUR_BOUND: usize = 3;

/// Degree first, then `<=` within a degree.
fn weight_cmp(a: &Weight, b: &Weight) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        compare(a, b, WeightOrder::Lex)
            .ok()
            .and_then(Comparison::to_ordering)
            .expect("weights of one degree are totally ordered")
    })
}

/// The distinct weights of `M`, by increasing degree and then strictly
/// increasing under `<=`.
pub fn sort_weights(m: &WeightModule) -> Vec<Weight> {
    let mut ws = m.distinct_weights();
    ws.sort_by(weight_cmp);
    ws
}

/// The smallest exponent where two characters differ, lowest degree first.
fn first_difference(a: &LaurentPoly, b: &LaurentPoly) -> Option<(Weight, BigInt, BigInt)> {
    let diff = a - b;
    let e = diff.terms().map(|(e, _)| Weight(e.clone())).min_by(weight_cmp)?;
    let (ca, cb) = (a.coeff(&e.0), b.coeff(&e.0));
    Some((e, ca, cb))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factor {
    pub nu: Weight,
    pub mult: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationWitness {
    /// 1-based position of `nu` among the increasing weights of its degree.
    pub level: usize,
    pub nu: Weight,
    pub expected: LaurentPoly,
    pub actual: LaurentPoly,
    /// `<=`-smallest exponent where `expected` and `actual` differ.
    pub exponent: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationReport {
    pub ok: bool,
    /// Nonzero multiplicities, from the `<=`-largest weight downward.
    pub factors: Vec<Factor>,
    /// `ch(M)`
    pub lhs: LaurentPoly,
    /// `sum_nu d_nu S_nu` over the tower levels.
    pub rhs: LaurentPoly,
    pub witness: Option<FiltrationWitness>,
}

impl FiltrationReport {
    pub fn factor_map(&self) -> BTreeMap<Weight, BigInt> {
        self.factors
            .iter()
            .map(|f| (f.nu.clone(), BigInt::from(f.mult)))
            .collect()
    }
}

/// Runs the tower `M_i = M / N_i`, `N_i` generated by the weight spaces above
/// `nu^(i)`, and checks each kernel `M_i -> M_{i-1}` against `d_i S_{nu^(i)}`.
/// A module of several total degrees is handled one degree summand at a time.
pub fn kp_filtration_extract(m: &WeightModule) -> Result<FiltrationReport> {
    let n = m.n();
    let mut report = FiltrationReport {
        ok: true,
        factors: Vec::new(),
        lhs: m.character(),
        rhs: LaurentPoly::zero(n),
        witness: None,
    };
    for degree in m.degrees() {
        let part = m.degree_part(degree);
        let (rhs, mut factors, witness) = extract_homogeneous(&part)?;
        report.rhs = &report.rhs + &rhs;
        factors.reverse();
        report.factors.extend(factors);
        if report.witness.is_none() {
            report.witness = witness;
        }
    }
    report.ok = report.witness.is_none();
    Ok(report)
}

type Tower = (LaurentPoly, Vec<Factor>, Option<FiltrationWitness>);

fn extract_homogeneous(m: &WeightModule) -> Result<Tower> {
    let order = sort_weights(m);
    let n = m.n();
    let mut rhs = LaurentPoly::zero(n);
    let mut factors = Vec::new();
    let mut witness = None;
    let mut prev = LaurentPoly::zero(n);
    for (i, nu) in order.iter().enumerate() {
        let quotient = largest_quotient(m, &order[..=i])?;
        let ch = quotient.module.character();
        let d = quotient.module.weight_space_dim(nu);
        let expected = schubert(nu).scale(&BigInt::from(d));
        let actual = &ch - &prev;
        if witness.is_none() && expected != actual {
            let (exponent, _, _) = first_difference(&expected, &actual).expect("they differ");
            witness = Some(FiltrationWitness {
                level: i + 1,
                nu: nu.clone(),
                expected: expected.clone(),
                actual,
                exponent,
            });
        }
        rhs = &rhs + &expected;
        if d > 0 {
            factors.push(Factor {
                nu: nu.clone(),
                mult: d,
            });
        }
        prev = ch;
    }
    debug_assert_eq!(prev, m.character());
    Ok((rhs, factors, witness))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionWitness {
    pub exponent: Weight,
    #[serde(serialize_with = "ser_bigint")]
    pub lhs_coeff: BigInt,
    #[serde(serialize_with = "ser_bigint")]
    pub rhs_coeff: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    /// `ch(M)`
    pub lhs: LaurentPoly,
    /// `sum_nu dim Hom(M, S_{rho-nu}^* (x) K_rho) S_nu` over the weights of `M`.
    pub rhs: LaurentPoly,
    /// Nonzero Hom dimensions, `<=`-decreasing.
    pub hom_dims: Vec<Factor>,
    pub leq: bool,
    pub equal: bool,
    pub witness: Option<CriterionWitness>,
}

/// Compares `ch(M)` with `sum_nu dim Hom(M, S_{rho-nu}^* (x) K_rho) S_nu`.
pub fn char_criterion(m: &WeightModule) -> Result<CriterionReport> {
    let mut order = sort_weights(m);
    order.reverse();
    let n = m.n();
    let rho = Weight::rho(n);
    let lhs = m.character();
    let mut rhs = LaurentPoly::zero(n);
    let mut hom_dims = Vec::new();
    for nu in order {
        let injective = dual_twist(&kp_module(&rho.sub(&nu))?.module);
        let h = hom_dim(m, &injective)?;
        if h > 0 {
            rhs.add_scaled(&schubert(&nu), &BigInt::from(h));
            hom_dims.push(Factor { nu, mult: h });
        }
    }
    let witness = first_difference(&rhs, &lhs).map(|(exponent, r, l)| CriterionWitness {
        exponent,
        lhs_coeff: l,
        rhs_coeff: r,
    });
    Ok(CriterionReport {
        leq: lhs.leq_coefficientwise(&rhs),
        equal: witness.is_none(),
        lhs,
        rhs,
        hom_dims,
        witness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TensorExperiment {
    pub lambda: Weight,
    pub mu: Weight,
    pub dim: usize,
    pub filtration: FiltrationReport,
    pub criterion: CriterionReport,
    /// Schubert expansion of `S_lambda S_mu`, as `(nu, coefficient)` pairs.
    pub expansion: Vec<(Weight, i64)>,
    pub expansion_nonnegative: bool,
    pub factors_match: bool,
    pub criterion_agrees: bool,
}

impl TensorExperiment {
    pub fn ok(&self) -> bool {
        self.filtration.ok && self.factors_match && self.criterion_agrees
    }
}

fn small(c: &BigInt) -> i64 {
    i64::try_from(c).expect("expansion coefficients fit in i64")
}

/// Builds `S_lambda (x) S_mu`, runs the extractor and the criterion, and
/// compares the factors with the expansion of `S_lambda S_mu`.
pub fn tensor_experiment(lambda: &Weight, mu: &Weight) -> Result<TensorExperiment> {
    let a = kp_module(lambda)?;
    let b = kp_module(mu)?;
    let m = tensor_product(&a.module, &b.module)?;
    let filtration = kp_filtration_extract(&m)?;
    let criterion = char_criterion(&m)?;
    let expansion = expand_in_schubert(&(&schubert(lambda) * &schubert(mu)));
    Ok(TensorExperiment {
        lambda: lambda.clone(),
        mu: mu.clone(),
        dim: m.dim(),
        factors_match: filtration.factor_map() == expansion,
        criterion_agrees: criterion.equal == filtration.ok,
        expansion_nonnegative: expansion.values().all(|c| !c.is_negative()),
        expansion: expansion.iter().map(|(k, v)| (k.clone(), small(v))).collect(),
        filtration,
        criterion,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchurExperiment {
    pub sigma: Partition,
    pub lambda: Weight,
    pub dim: usize,
    pub filtration: FiltrationReport,
    pub criterion: CriterionReport,
    pub plethysm: LaurentPoly,
    pub character_matches: bool,
    pub criterion_agrees: bool,
}

impl SchurExperiment {
    pub fn ok(&self) -> bool {
        self.filtration.ok && self.character_matches && self.criterion_agrees
    }
}

/// All permutations of `set`, as images listed in the order of `set`.
fn permutations_of(set: &[usize]) -> Vec<(Vec<usize>, i64)> {
    all_permutations(set.len())
        .into_iter()
        .map(|p| {
            let images = p
                .window_padded(set.len())
                .iter()
                .map(|&x| set[x as usize - 1])
                .collect();
            (images, p.sign() as i64)
        })
        .collect()
}

/// The subgroup of `S_k` generated by permuting each block independently,
/// as `(map, sign)` with `map[a]` the image of position `a`.
fn block_group(k: usize, blocks: &[Vec<usize>]) -> Vec<(Vec<usize>, i64)> {
    let mut group = vec![((0..k).collect::<Vec<_>>(), 1)];
    for block in blocks {
        let perms = permutations_of(block);
        let mut next = Vec::with_capacity(group.len() * perms.len());
        for (g, s) in &group {
            for (images, t) in &perms {
                let mut h = g.clone();
                for (a, &b) in block.iter().zip(images) {
                    h[*a] = b;
                }
                next.push((h, s * t));
            }
        }
        group = next;
    }
    group
}

/// Moves tensor factor `a` to position `map[a]`.
fn permute_tensor(tuple: &[usize], map: &[usize]) -> Vec<usize> {
    let mut out = vec![0; tuple.len()];
    for (a, &x) in tuple.iter().enumerate() {
        out[map[a]] = x;
    }
    out
}

/// `s_sigma(M)`: the image of the Young symmetrizer (row symmetrizer after
/// column antisymmetrizer, unnormalized) on `M^{(x) |sigma|}`.
pub fn schur_functor(sigma: &Partition, m: &WeightModule) -> Result<WeightModule> {
    let k = sigma.size();
    let mut tensor = crate::bmod::tensor_power(m, 0)?;
    for _ in 0..k {
        tensor = tensor_product(&tensor, m)?;
    }
    let d = m.dim();
    let mut rows = Vec::new();
    let mut next = 0;
    for &r in sigma.parts() {
        rows.push((next..next + r as usize).collect::<Vec<_>>());
        next += r as usize;
    }
    let cols: Vec<Vec<usize>> = (0..sigma.parts().first().copied().unwrap_or(0) as usize)
        .map(|c| rows.iter().filter(|r| r.len() > c).map(|r| r[c]).collect())
        .collect();
    let row_group = block_group(k, &rows);
    let col_group = block_group(k, &cols);
    let to_index = |t: &[usize]| t.iter().fold(0, |acc, &x| acc * d + x);
    let mut images = Vec::new();
    for idx in 0..tensor.dim() {
        let mut tuple = vec![0; k];
        let mut rest = idx;
        for slot in (0..k).rev() {
            tuple[slot] = rest % d;
            rest /= d;
        }
        let mut anti: HashMap<Vec<usize>, i64> = HashMap::new();
        for (q, s) in &col_group {
            *anti.entry(permute_tensor(&tuple, q)).or_default() += s;
        }
        let mut v = SparseVec::new();
        for (t, c) in anti.iter().filter(|(_, c)| **c != 0) {
            for (p, _) in &row_group {
                v.add_at(to_index(&permute_tensor(t, p)), &Q::from_integer(BigInt::from(*c)));
            }
        }
        if !v.is_zero() {
            images.push(v);
        }
    }
    Ok(generated_submodule(&tensor, &images, Closure::Simple)?.module)
}

/// Realizes `s_sigma(S_lambda)`, runs the extractor and the criterion, and
/// compares its character with the plethysm `s_sigma[S_lambda]`.
pub fn schur_functor_experiment(sigma: &Partition, lambda: &Weight, bound: usize) -> Result<SchurExperiment> {
    if sigma.size() > bound {
        return Err(KpError::BoundExceeded {
            param: "|sigma|",
            value: sigma.size(),
            bound,
        });
    }
    let kp = kp_module(lambda)?;
    let image = schur_functor(sigma, &kp.module)?;
    let filtration = kp_filtration_extract(&image)?;
    let criterion = char_criterion(&image)?;
    let plethysm = plethysm_eval(sigma, &schubert(lambda))?;
    Ok(SchurExperiment {
        sigma: sigma.clone(),
        lambda: lambda.clone(),
        dim: image.dim(),
        character_matches: image.character() == plethysm,
        criterion_agrees: criterion.equal == filtration.ok,
        filtration,
        criterion,
        plethysm,
    })
}

/// Whether `a <= b` in the lex order on inverse permutations.
pub fn order_le(a: &Weight, b: &Weight) -> bool {
    compare(a, b, WeightOrder::Lex)
        .map(|c| c.is_le())
        .unwrap_or(false)
}
