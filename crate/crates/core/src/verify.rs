//! Named verification suites: exhaustive and randomized checks of the
//! identities implemented by the other modules.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::bmod::{
    annihilator_check, demazure_module, kp_module, congruence_sweep, max_dim, cyclic_check,
    DEFAULT_U3_BOUND,
};
use crate::error::{KpError, Result};
use crate::filtration::{char_criterion, kp_filtration_extract, schur_functor_experiment, tensor_experiment};
use crate::permcomb::{
    all_permutations, compare, degree_box, transition, Comparison, Permutation, Weight, WeightOrder,
};
use crate::schubpoly::{
    cauchy_check, dual_pairing, schubert, schubert_of_perm, LaurentPoly, Partition, SchubertMethod,
};

pub const SUITES: [&str; 11] = [
    "transition-all",
    "duality",
    "cauchy",
    "u3",
    "kp-char",
    "annihilators",
    "filtrations",
    "schur",
    "demazure",
    "dims",
    "orders",
];

#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    /// Suite-specific size bound; `None` selects the default.
    pub upto: Option<usize>,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    pub pass: bool,
}

struct Tally {
    suite: &'static str,
    cases: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn new(suite: &'static str) -> Self {
        Tally {
            suite,
            cases: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(self) -> SuiteResult {
        SuiteResult {
            suite: self.suite.to_string(),
            cases: self.cases,
            pass: self.failures.is_empty(),
            failures: self.failures,
            notes: self.notes,
        }
    }
}

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<SuiteResult> {
    match name {
        "transition-all" => transition_suite(opts.upto.unwrap_or(5)),
        "duality" => duality_suite(opts.upto.unwrap_or(4)),
        "cauchy" => cauchy_suite(opts.upto.unwrap_or(2)),
        "u3" => u3_suite(opts.upto.unwrap_or(DEFAULT_U3_BOUND)),
        "kp-char" => kp_char_suite(opts.upto.unwrap_or(5)),
        "annihilators" => annihilator_suite(opts.upto.unwrap_or(5)),
        "filtrations" => filtration_suite(opts.upto.unwrap_or(3)),
        "schur" => schur_suite(opts.upto.unwrap_or(3)),
        "demazure" => demazure_suite(opts.upto.unwrap_or(4)),
        "dims" => dims_suite(),
        "orders" => orders_suite(opts.upto.unwrap_or(4), opts.seed),
        _ => Err(KpError::UnknownSuite(name.to_string())),
    }
}

/// `S_w = x_j S_v + sum_a S_{w^(a)}`, all sides in a common number of variables.
pub fn transition_identity(w: &Permutation) -> Result<bool> {
    let t = transition(w)?;
    let lhs = schubert_of_perm(w, SchubertMethod::Transition);
    let sv = schubert_of_perm(&t.v, SchubertMethod::Transition);
    let branches: Vec<LaurentPoly> = t
        .branches
        .iter()
        .map(|(_, u)| schubert_of_perm(u, SchubertMethod::Transition))
        .collect();
    let m = branches
        .iter()
        .map(LaurentPoly::n)
        .chain([lhs.n(), sv.n(), t.j])
        .max()
        .unwrap_or(1);
    let mut rhs = &LaurentPoly::var(m, t.j) * &sv.with_vars(m);
    for b in &branches {
        rhs = &rhs + &b.with_vars(m);
    }
    Ok(lhs.with_vars(m) == rhs)
}

fn transition_suite(upto: usize) -> Result<SuiteResult> {
    let mut t = Tally::new("transition-all");
    for w in all_permutations(upto) {
        let staircase = schubert_of_perm(&w, SchubertMethod::Staircase);
        let recursive = schubert_of_perm(&w, SchubertMethod::Transition);
        t.check(staircase == recursive, || format!("{w}: staircase and transition differ"));
        if w.is_identity() {
            continue;
        }
        let ok = transition_identity(&w)?;
        t.check(ok, || format!("{w}: transition identity fails"));
    }
    Ok(t.finish())
}

fn duality_suite(max_degree: usize) -> Result<SuiteResult> {
    let mut t = Tally::new("duality");
    for d in 0..=max_degree as i64 {
        let box_d = degree_box(3, d, 0);
        for lambda in &box_d {
            let s = schubert(lambda);
            for mu in &box_d {
                let got = dual_pairing(&s, mu);
                let want = if lambda == mu { BigInt::one() } else { BigInt::zero() };
                t.check(got == want, || format!("<S_{lambda}, {mu}> = {got}"));
            }
        }
    }
    Ok(t.finish())
}

fn cauchy_suite(max_entry: usize) -> Result<SuiteResult> {
    let mut t = Tally::new("cauchy");
    let cube: Vec<Weight> = (0..=3 * max_entry as i64)
        .flat_map(|d| degree_box(3, d, 0))
        .filter(|w| w.0.iter().all(|&x| x <= max_entry as i64))
        .collect();
    for mu in &cube {
        for nu in cube.iter().filter(|nu| nu.degree() == mu.degree()) {
            let r = cauchy_check(mu, nu)?;
            t.check(r.pass, || format!("mu={mu} nu={nu}: {} != {}", r.lhs, r.rhs));
        }
    }
    Ok(t.finish())
}

fn u3_suite(bound: usize) -> Result<SuiteResult> {
    let mut t = Tally::new("u3");
    for a in 0..=bound {
        for b in 0..=bound {
            let r = cyclic_check(a, b, bound)?;
            t.check(r.pass, || format!("cyclic a={a} b={b}: {:?}", r.failures));
        }
    }
    for r in congruence_sweep(bound)? {
        t.check(r.pass, || format!("{} {:?}: {:?}", r.kind, r.params, r.failures));
    }
    Ok(t.finish())
}

fn kp_char_suite(upto: usize) -> Result<SuiteResult> {
    let mut t = Tally::new("kp-char");
    let mut cases: Vec<(Permutation, usize)> = Vec::new();
    for m in 1..=upto {
        cases.extend(all_permutations(m).into_iter().map(|w| (w, m)));
    }
    if upto >= 2 {
        let n = upto - 1;
        cases.extend(
            all_permutations(upto)
                .into_iter()
                .filter(|w| w.in_grassmann_window(n))
                .map(|w| (w, n)),
        );
    }
    for (w, n) in cases {
        let code = w.code(n)?;
        let kp = kp_module(&code)?;
        t.check(kp.module.character() == schubert(&code), || {
            format!("{w} (n={n}): character differs from the Schubert polynomial")
        });
        t.check(kp.module.weight_space_dim(&code) == 1, || {
            format!("{w} (n={n}): top weight space is not one-dimensional")
        });
    }
    Ok(t.finish())
}

fn annihilator_suite(upto: usize) -> Result<SuiteResult> {
    let mut t = Tally::new("annihilators");
    let mut not_sharp = 0;
    let mut sharp_checked = 0;
    for w in all_permutations(upto) {
        let r = annihilator_check(&w, upto)?;
        t.check(r.annihilates, || format!("{w}: some e_ij^(m_ij+1) u_w != 0"));
        t.check(r.pruned_annihilate, || format!("{w}: pruned generators fail"));
        t.check(r.redundancy_certified, || format!("{w}: redundancy not certified"));
        t.check(r.dim_matches, || {
            format!("{w}: dim {} != S_w(1) = {}", r.dim, r.schubert_at_ones)
        });
        sharp_checked += r.exponents.iter().filter(|c| c.sharp.is_some()).count();
        not_sharp += r.not_sharp.len();
        for (i, j, m) in &r.not_sharp {
            t.notes.push(format!("{w}: e_{i}{j}^{m} u_w = 0 (exponent not sharp)"));
        }
    }
    t.notes.push(format!(
        "sharpness: {} of {sharp_checked} exponents with m_ij >= 1 are sharp",
        sharp_checked - not_sharp
    ));
    Ok(t.finish())
}

/// Codes of `S_m` in `m` variables.
fn codes(m: usize) -> Vec<Weight> {
    all_permutations(m)
        .into_iter()
        .map(|w| w.code(m).expect("S_m lies in S_inf^(m)"))
        .collect()
}

fn filtration_suite(m: usize) -> Result<SuiteResult> {
    let mut t = Tally::new("filtrations");
    let cs = codes(m);
    for lambda in &cs {
        for mu in &cs {
            let r = tensor_experiment(lambda, mu)?;
            t.check(r.filtration.ok, || format!("{lambda} (x) {mu}: extractor fails"));
            t.check(r.factors_match, || format!("{lambda} (x) {mu}: factors differ from expansion"));
            t.check(r.expansion_nonnegative, || format!("{lambda} (x) {mu}: negative expansion"));
            t.check(r.criterion_agrees, || format!("{lambda} (x) {mu}: criterion disagrees"));
            t.check(r.criterion.leq, || format!("{lambda} (x) {mu}: ch(M) <= rhs fails"));
        }
    }
    let control = crate::bmod::one_dim(&Weight(vec![0, 1]));
    let ext = kp_filtration_extract(&control)?;
    let crit = char_criterion(&control)?;
    t.check(!ext.ok && !crit.equal && crit.leq, || "negative control passes".into());
    let same_witness = match (&ext.witness, &crit.witness) {
        (Some(a), Some(b)) => a.exponent == b.exponent,
        _ => false,
    };
    t.check(same_witness, || "negative control witnesses differ".into());
    Ok(t.finish())
}

fn schur_suite(m: usize) -> Result<SuiteResult> {
    let mut t = Tally::new("schur");
    let sigmas: [&[u32]; 5] = [&[2], &[1, 1], &[3], &[2, 1], &[1, 1, 1]];
    for lambda in codes(m) {
        let d = kp_module(&lambda)?.dim();
        for parts in sigmas {
            let sigma = Partition::new(parts.to_vec())?;
            if sigma.size() * d > max_dim() {
                t.notes.push(format!("skipped sigma={sigma} lambda={lambda}"));
                continue;
            }
            let r = schur_functor_experiment(&sigma, &lambda, 3)?;
            t.check(r.filtration.ok, || format!("sigma={sigma} lambda={lambda}: extractor fails"));
            t.check(r.character_matches, || {
                format!("sigma={sigma} lambda={lambda}: character differs from plethysm")
            });
            t.check(r.criterion_agrees, || format!("sigma={sigma} lambda={lambda}: criterion disagrees"));
        }
    }
    Ok(t.finish())
}

fn demazure_suite(m: usize) -> Result<SuiteResult> {
    let mut t = Tally::new("demazure");
    let mut differing = Vec::new();
    for w in all_permutations(m) {
        let code = w.code(m)?;
        let same = demazure_module(&code)?.module.character() == schubert(&code);
        if !same {
            differing.push(w.to_string());
        }
        t.check(same == w.avoids_2143(), || {
            format!("{w}: characters agree = {same}, avoids 2143 = {}", w.avoids_2143())
        });
    }
    t.notes.push(format!("characters differ for: {}", differing.join(" ")));
    Ok(t.finish())
}

fn dims_suite() -> Result<SuiteResult> {
    let mut t = Tally::new("dims");
    let w2143 = Weight(vec![1, 0, 1, 0]);
    let kp = kp_module(&w2143)?;
    t.check(kp.dim() == 3, || format!("dim S_[2143] = {}", kp.dim()));
    let ch = kp.module.character().to_string();
    t.check(ch == "x1^2 + x1*x2 + x1*x3", || format!("ch S_[2143] = {ch}"));
    let d = demazure_module(&w2143)?.dim();
    t.check(d == 2, || format!("dim V(1,0,1,0) = {d}"));
    let w = Permutation::from_window(vec![1, 3, 2, 5, 4])?;
    let dim = kp_module(&w.code(5)?)?.dim();
    t.check(dim == 8, || format!("dim S_[13254] = {dim}"));
    Ok(t.finish())
}

/// `lambda >= mu` iff `rho - lambda >=' rho - mu`.
pub fn order_duality_holds(lambda: &Weight, mu: &Weight) -> Result<bool> {
    let rho = Weight::rho(lambda.n());
    let a = compare(lambda, mu, WeightOrder::Lex)?;
    let b = compare(&rho.sub(lambda), &rho.sub(mu), WeightOrder::RevLex)?;
    Ok(a == b)
}

fn random_pair(rng: &mut StdRng) -> (Weight, Weight) {
    let n = rng.gen_range(2..=5);
    let lambda: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
    let mut mu: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
    let diff: i64 = lambda.iter().sum::<i64>() - mu.iter().sum::<i64>();
    mu[n - 1] += diff;
    (Weight(lambda), Weight(mu))
}

fn orders_suite(m: usize, seed: u64) -> Result<SuiteResult> {
    let mut t = Tally::new("orders");
    for lambda in codes(m) {
        let kp = kp_module(&lambda)?;
        for mu in kp.module.distinct_weights() {
            for order in [WeightOrder::Lex, WeightOrder::RevLex] {
                let c = compare(&mu, &lambda, order)?;
                t.check(c.is_le(), || format!("weight {mu} of S_{lambda}: {order:?} gives {c:?}"));
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let mut tally: BTreeMap<&'static str, usize> = BTreeMap::new();
    for _ in 0..1000 {
        let (lambda, mu) = random_pair(&mut rng);
        let ok = order_duality_holds(&lambda, &mu)?;
        let c = compare(&lambda, &mu, WeightOrder::Lex)?;
        *tally
            .entry(match c {
                Comparison::Less => "less",
                Comparison::Equal => "equal",
                Comparison::Greater => "greater",
                Comparison::Incomparable => "incomparable",
            })
            .or_default() += 1;
        t.check(ok, || format!("order duality fails for {lambda}, {mu}"));
    }
    t.notes.push(format!("random pairs by outcome: {tally:?}"));
    Ok(t.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(matches!(
            run_suite("nope", &SuiteOptions::default()),
            Err(KpError::UnknownSuite(_))
        ));
    }

    #[test]
    fn small_suites_pass() {
        let opts = SuiteOptions { upto: Some(3), seed: 7 };
        for name in ["transition-all", "kp-char", "annihilators", "demazure", "dims"] {
            let r = run_suite(name, &opts).unwrap();
            assert!(r.pass, "{name}: {:?}", r.failures);
            assert!(r.cases > 0);
        }
    }

    #[test]
    fn transition_identity_on_2143() {
        let w = Permutation::from_window(vec![2, 1, 4, 3]).unwrap();
        assert!(transition_identity(&w).unwrap());
    }
}
