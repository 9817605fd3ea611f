//! KP modules, Demazure modules and annihilator checks.

use num_bigint::BigInt;
use serde::Serialize;

use super::closure::{cyclic_submodule, generated_submodule, Closure, Submodule};
use super::u3::{congruence_check, CongruenceCase, CongruenceParams};
use super::{exterior_power, one_dim, tensor_product, twist, vector_rep, vector_rep_gl, wedge_index, WeightModule};
use crate::error::{KpError, Result};
use crate::linalg::SparseVec;
use crate::permcomb::{m_table, perm_of, Permutation, Weight};
use crate::schubpoly::{schubert_of_perm, ser_bigint, Partition, SchubertMethod};

/// `S_lambda` with its generator `u_w`.
#[derive(Clone, Debug)]
pub struct KpModule {
    pub lambda: Weight,
    /// `perm(lambda + k 1)` for the shift `k`.
    pub w: Permutation,
    pub shift: i64,
    /// Tensor product of exterior powers containing `U(b) u_w`.
    pub ambient: WeightModule,
    /// `U(b) u_w` inside the ambient module, before the shift twist.
    pub submodule: Submodule,
    /// `K_{-k 1} (x) U(b) u_w`.
    pub module: WeightModule,
    /// Basis index of `u_w` in `module`.
    pub generator: usize,
}

impl KpModule {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn generator_vector(&self) -> SparseVec {
        SparseVec::unit(self.generator)
    }
}

/// Tensor product of the given factors over a base module of rank `n`.
fn tensor_all(base: WeightModule, factors: &[WeightModule]) -> Result<WeightModule> {
    let mut out = base;
    for f in factors {
        out = tensor_product(&out, f)?;
    }
    Ok(out)
}

/// Mixed-radix index of a pure tensor of basis vectors.
fn tensor_index(dims: &[usize], parts: &[usize]) -> usize {
    dims.iter().zip(parts).fold(0, |acc, (&d, &p)| acc * d + p)
}

fn locate_generator(module: &WeightModule, lambda: &Weight) -> Result<usize> {
    let hits: Vec<usize> = (0..module.dim())
        .filter(|&i| module.weight(i) == lambda)
        .collect();
    match hits.as_slice() {
        [g] => Ok(*g),
        _ => Err(KpError::ExtremalWeightSpace {
            weight: lambda.0.clone(),
            dim: hits.len(),
        }),
    }
}

/// `S_lambda = K_{-k 1} (x) U(b) u_w` with `w = perm(lambda + k 1)`, built
/// inside the tensor product of `Lambda^{l_j} K^n` over the nonempty columns.
pub fn kp_module(lambda: &Weight) -> Result<KpModule> {
    let n = lambda.n();
    let shift = (-lambda.min_entry()).max(0);
    let code = lambda.shift(shift);
    let w = perm_of(&code)?;
    let mut factors = Vec::new();
    let mut parts = Vec::new();
    for j in 1..=w.support_len() {
        let col = w.column_set(j);
        if col.is_empty() {
            continue;
        }
        debug_assert!(col.iter().all(|&i| i <= n));
        factors.push(exterior_power(&vector_rep(n), col.len())?);
        let subset: Vec<usize> = col.iter().map(|i| i - 1).collect();
        parts.push(wedge_index(n, &subset));
    }
    let ambient = tensor_all(one_dim(&Weight::zero(n)), &factors)?;
    let dims: Vec<usize> = factors.iter().map(WeightModule::dim).collect();
    let u_w = SparseVec::unit(tensor_index(&dims, &parts));
    let submodule = cyclic_submodule(&ambient, &u_w, Closure::Simple)?;
    let module = twist(&submodule.module, &Weight::constant(n, -shift));
    let generator = locate_generator(&module, lambda)?;
    debug_assert_eq!(submodule.embedding[generator], u_w);
    Ok(KpModule {
        lambda: lambda.clone(),
        w,
        shift,
        ambient,
        submodule,
        module,
        generator,
    })
}

/// The `U(b)`-closure of the extremal weight-`lambda` vector in the
/// irreducible `gl_n`-module with highest weight `sort(lambda)`.
#[derive(Clone, Debug)]
pub struct DemazureModule {
    pub lambda: Weight,
    /// Dimension of the irreducible `gl_n`-module.
    pub irreducible_dim: usize,
    pub submodule: Submodule,
    pub module: WeightModule,
    pub generator: usize,
}

impl DemazureModule {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }
}

pub fn demazure_module(lambda: &Weight) -> Result<DemazureModule> {
    if let Some((index, &value)) = lambda.0.iter().enumerate().find(|(_, &x)| x < 0) {
        return Err(KpError::NegativeCode {
            index: index + 1,
            value,
        });
    }
    let n = lambda.n();
    let top = lambda.sorted_descending();
    let parts: Vec<u32> = top.0.iter().filter(|&&x| x > 0).map(|&x| x as u32).collect();
    let columns = Partition::new(parts)?.conjugate();
    let factors = columns
        .parts()
        .iter()
        .map(|&c| exterior_power(&vector_rep_gl(n), c as usize))
        .collect::<Result<Vec<_>>>()?;
    let base = vector_rep_gl(n);
    let trivial = super::tensor_power(&base, 0)?;
    let ambient = tensor_all(trivial, &factors)?;
    let dims: Vec<usize> = factors.iter().map(WeightModule::dim).collect();
    let idx: Vec<usize> = columns
        .parts()
        .iter()
        .map(|&c| wedge_index(n, &(0..c as usize).collect::<Vec<_>>()))
        .collect();
    let highest = SparseVec::unit(tensor_index(&dims, &idx));
    let irreducible = generated_submodule(&ambient, &[highest], Closure::All)?;
    let ext_index = locate_generator(&irreducible.module, lambda)?;
    let extremal = irreducible.embedding[ext_index].clone();
    let submodule = cyclic_submodule(&ambient, &extremal, Closure::Simple)?;
    let module = submodule.module.clone();
    let generator = locate_generator(&module, lambda)?;
    Ok(DemazureModule {
        lambda: lambda.clone(),
        irreducible_dim: irreducible.dim(),
        submodule,
        module,
        generator,
    })
}

/// Generators `e_ij^{m_ij(w) + 1}` of the annihilator of `u_w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnnihilatorPresentation {
    pub w: Permutation,
    pub weight: Weight,
    /// `(i, j, m_ij(w) + 1)`
    pub generators: Vec<(usize, usize, usize)>,
    pub pruned_generators: Vec<(usize, usize, usize)>,
}

pub fn annihilator_presentation(w: &Permutation, n: usize) -> Result<AnnihilatorPresentation> {
    let weight = w.code(n)?;
    let table = m_table(w, n)?;
    let generators: Vec<(usize, usize, usize)> =
        table.entries.iter().map(|&((i, j), m)| (i, j, m + 1)).collect();
    let pruned_generators = generators
        .iter()
        .filter(|(i, j, _)| table.pruned.contains(&(*i, *j)))
        .copied()
        .collect();
    Ok(AnnihilatorPresentation {
        w: w.clone(),
        weight,
        generators,
        pruned_generators,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentCheck {
    pub i: usize,
    pub j: usize,
    pub m: usize,
    /// `e_ij^{m+1} u_w = 0`
    pub annihilates: bool,
    /// `e_ij^m u_w != 0`, recorded when `m >= 1`.
    pub sharp: Option<bool>,
}

/// A superfluous generator `e_ij^{m_ij+1}` with `m_ij = m_iq + m_qj`,
/// certified by `e_13^{m_ij+1} g = 0` in the `sl_3` module `(m_iq, m_qj)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RedundancyCertificate {
    pub i: usize,
    pub j: usize,
    pub q: usize,
    pub certified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnnihilatorReport {
    pub w: Permutation,
    pub n: usize,
    pub code: Weight,
    pub dim: usize,
    #[serde(serialize_with = "ser_bigint")]
    pub schubert_at_ones: BigInt,
    pub dim_matches: bool,
    pub exponents: Vec<ExponentCheck>,
    pub annihilates: bool,
    pub pruned: Vec<(usize, usize)>,
    pub pruned_annihilate: bool,
    pub redundant: Vec<RedundancyCertificate>,
    pub redundancy_certified: bool,
    /// `(i, j, m)` with `m >= 1` and `e_ij^m u_w = 0`.
    pub not_sharp: Vec<(usize, usize, usize)>,
}

impl AnnihilatorReport {
    pub fn ok(&self) -> bool {
        self.annihilates && self.dim_matches && self.pruned_annihilate && self.redundancy_certified
    }
}

/// Checks the annihilator generators of `u_w` inside `S_w`.
pub fn annihilator_check(w: &Permutation, n: usize) -> Result<AnnihilatorReport> {
    let code = w.code(n)?;
    let table = m_table(w, n)?;
    let kp = kp_module(&code)?;
    let u = kp.generator_vector();
    let m = &kp.module;
    let exponents: Vec<ExponentCheck> = table
        .entries
        .iter()
        .map(|&((i, j), e)| {
            let below = m.act_power(i, j, e, &u);
            let annihilates = m.act(i, j, &below).expect("raising").is_zero();
            ExponentCheck {
                i,
                j,
                m: e,
                annihilates,
                sharp: (e >= 1).then(|| !below.is_zero()),
            }
        })
        .collect();
    let annihilates = exponents.iter().all(|c| c.annihilates);
    let pruned_annihilate = exponents
        .iter()
        .filter(|c| table.pruned.contains(&(c.i, c.j)))
        .all(|c| c.annihilates);
    let redundant = table
        .redundant()
        .into_iter()
        .map(|((i, j), q)| {
            let params = CongruenceParams {
                n: table.get(i, j) + 1,
                m: 0,
                n_prime: table.get(i, q),
                m_prime: table.get(q, j),
            };
            let certified = congruence_check(CongruenceCase::One, params, usize::MAX)
                .map(|r| r.applicable && r.pass)
                .unwrap_or(false);
            RedundancyCertificate { i, j, q, certified }
        })
        .collect::<Vec<_>>();
    let redundancy_certified = redundant.iter().all(|r| r.certified);
    let not_sharp = exponents
        .iter()
        .filter(|c| c.sharp == Some(false))
        .map(|c| (c.i, c.j, c.m))
        .collect();
    let schubert_at_ones = schubert_of_perm(w, SchubertMethod::Transition).eval_at_ones();
    Ok(AnnihilatorReport {
        w: w.clone(),
        n,
        code,
        dim: m.dim(),
        dim_matches: BigInt::from(m.dim()) == schubert_at_ones,
        schubert_at_ones,
        exponents,
        annihilates,
        pruned: table.pruned.clone(),
        pruned_annihilate,
        redundant,
        redundancy_certified,
        not_sharp,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bmod::{hom_dim, largest_quotient};
    use crate::permcomb::all_permutations;
    use crate::schubpoly::schubert;

    fn wt(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    fn perm(v: &[u32]) -> Permutation {
        Permutation::from_window(v.to_vec()).unwrap()
    }

    #[test]
    fn kp_2143() {
        let kp = kp_module(&wt(&[1, 0, 1, 0])).unwrap();
        assert_eq!(kp.dim(), 3);
        assert_eq!(kp.module.character().to_string(), "x1^2 + x1*x2 + x1*x3");
        assert!(kp.module.check_brackets());
    }

    #[test]
    fn kp_13254_has_dim_8() {
        let code = perm(&[1, 3, 2, 5, 4]).code(5).unwrap();
        let kp = kp_module(&code).unwrap();
        assert_eq!(kp.dim(), 8);
        assert_eq!(kp.module.character(), schubert(&code));
    }

    #[test]
    fn kp_identity_and_simple() {
        let kp = kp_module(&wt(&[0, 0, 0])).unwrap();
        assert_eq!(kp.dim(), 1);
        assert_eq!(kp.module.weights(), &[wt(&[0, 0, 0])]);
        let s2 = kp_module(&wt(&[0, 1, 0])).unwrap();
        assert_eq!(s2.module.character().to_string(), "x1 + x2");
    }

    #[test]
    fn kp_negative_weight_is_shifted() {
        let lambda = wt(&[-1, 0, 1]);
        let kp = kp_module(&lambda).unwrap();
        assert_eq!(kp.shift, 1);
        assert_eq!(kp.module.character(), schubert(&lambda));
        assert_eq!(kp.module.weight(kp.generator), &lambda);
    }

    #[test]
    fn kp_characters_on_s4() {
        for w in all_permutations(4) {
            let code = w.code(4).unwrap();
            let kp = kp_module(&code).unwrap();
            assert_eq!(kp.module.character(), schubert(&code), "w = {w}");
            assert_eq!(kp.module.weight_space_dim(&code), 1);
        }
    }

    #[test]
    fn kp_endomorphisms_are_scalars() {
        let kp = kp_module(&wt(&[1, 0, 1, 0])).unwrap();
        assert_eq!(hom_dim(&kp.module, &kp.module).unwrap(), 1);
    }

    #[test]
    fn kp_quotient_away_from_generator_is_zero() {
        let lambda = wt(&[1, 0, 1]);
        let kp = kp_module(&lambda).unwrap();
        let others: Vec<Weight> = kp
            .module
            .distinct_weights()
            .into_iter()
            .filter(|w| *w != lambda)
            .collect();
        assert_eq!(largest_quotient(&kp.module, &others).unwrap().module.dim(), 0);
    }

    #[test]
    fn demazure_examples() {
        let d = demazure_module(&wt(&[1, 0, 1, 0])).unwrap();
        assert_eq!(d.dim(), 2);
        assert_eq!(d.irreducible_dim, 6);
        let d = demazure_module(&wt(&[1, 1, 0, 0])).unwrap();
        assert_eq!(d.dim(), 1);
        assert_eq!(demazure_module(&wt(&[0, 0])).unwrap().dim(), 1);
        assert!(demazure_module(&wt(&[0, -1])).is_err());
    }

    #[test]
    fn kp_maps_onto_demazure() {
        let lambda = wt(&[1, 0, 1, 0]);
        let kp = kp_module(&lambda).unwrap();
        let d = demazure_module(&lambda).unwrap();
        assert_eq!(hom_dim(&kp.module, &d.module).unwrap(), 1);
    }

    #[test]
    fn demazure_matches_kp_iff_2143_avoiding() {
        for w in all_permutations(4) {
            let code = w.code(4).unwrap();
            let d = demazure_module(&code).unwrap();
            let same = d.module.character() == schubert(&code);
            assert_eq!(same, w.avoids_2143(), "w = {w}");
        }
    }

    #[test]
    fn annihilator_2143() {
        let w = perm(&[2, 1, 4, 3]);
        let r = annihilator_check(&w, 4).unwrap();
        assert!(r.ok());
        let e23 = r.exponents.iter().find(|c| (c.i, c.j) == (2, 3)).unwrap();
        assert_eq!(e23.m, 1);
        assert_eq!(e23.sharp, Some(true));
        assert_eq!(r.dim, 3);
    }

    #[test]
    fn annihilator_identity() {
        let r = annihilator_check(&Permutation::identity(), 3).unwrap();
        assert!(r.ok());
        assert_eq!(r.dim, 1);
        assert!(r.exponents.iter().all(|c| c.m == 0));
        let p = annihilator_presentation(&Permutation::identity(), 3).unwrap();
        assert!(p.generators.iter().all(|g| g.2 == 1));
    }

    #[test]
    fn annihilator_s4_sweep() {
        for w in all_permutations(4) {
            let r = annihilator_check(&w, 4).unwrap();
            assert!(r.ok(), "w = {w}");
        }
    }

    #[test]
    fn annihilator_rejects_outside_window() {
        assert!(annihilator_check(&perm(&[1, 3, 2]), 1).is_err());
    }
}
