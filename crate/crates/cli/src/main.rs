mod parse;

use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use kp_core::bmod::{
    annihilator_check, annihilator_presentation, demazure_module, hom_space, kp_module, congruence_check,
    congruence_sweep, cyclic_check, CongruenceCase, CongruenceParams, U3Report,
};
use kp_core::filtration::{
    kp_filtration_extract, schur_functor_experiment, tensor_experiment, FiltrationReport,
};
use kp_core::permcomb::{all_permutations, m_table, perm_of, transition, Weight};
use kp_core::schubpoly::{
    cauchy_check, dual_pairing, expand_in_schubert, schubert, schubert_poly, LaurentPoly,
    Partition, SchubertMethod,
};
use kp_core::verify::{run_suite, SuiteOptions, SUITES};
use kp_core::KpError;

#[derive(Parser)]
#[command(name = "kp", version, about = "Schubert polynomials, KP modules and KP filtrations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Number of variables / rank
    #[arg(short = 'n', global = true)]
    n: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Size bound for sweeps
    #[arg(long, global = true)]
    upto: Option<usize>,
    /// Exit with status 1 unless the result is a pass
    #[arg(long, global = true)]
    expect_ok: bool,
    /// Seed for randomized suites
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Transition,
    Staircase,
}

#[derive(Args)]
#[command(group(ArgGroup::new("index").required(true).args(["code", "perm"])))]
struct IndexArgs {
    /// Weight, e.g. 1,0,1,0
    #[arg(long, allow_hyphen_values = true)]
    code: Option<String>,
    /// Permutation in one-line notation, e.g. 2,1,4,3
    #[arg(long)]
    perm: Option<String>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("input").required(true).args(["poly", "product"])))]
struct PolyArgs {
    /// Laurent polynomial, e.g. "x1^2 + x1*x2"
    #[arg(long, allow_hyphen_values = true)]
    poly: Option<String>,
    /// Product of Schubert polynomials given by weights, e.g. 0,1:1,0
    #[arg(long, allow_hyphen_values = true)]
    product: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Schubert polynomial of a weight or permutation
    Schubert {
        #[command(flatten)]
        index: IndexArgs,
        #[arg(long, value_enum, default_value_t = Method::Transition)]
        method: Method,
    },
    /// Lehmer code of a permutation
    Code {
        #[arg(long)]
        perm: String,
    },
    /// Permutation with a given code
    Perm {
        #[arg(long, allow_hyphen_values = true)]
        code: String,
    },
    /// One transition step at the maximal descent
    Transition {
        #[arg(long)]
        perm: String,
    },
    /// Table of annihilator exponents m_ij
    Mtable {
        #[arg(long)]
        perm: String,
    },
    /// Character of the KP module, compared with the Schubert polynomial
    KpChar {
        #[arg(long, allow_hyphen_values = true)]
        code: String,
    },
    /// Dimension of the KP module
    KpDim {
        #[arg(long, allow_hyphen_values = true)]
        code: String,
    },
    /// Annihilator checks for u_w
    Annihilator {
        #[arg(long)]
        perm: String,
    },
    /// Expansion in Schubert polynomials
    Expand {
        #[command(flatten)]
        input: PolyArgs,
    },
    /// Coefficient of S_mu extracted by the dual pairing
    Pairing {
        #[command(flatten)]
        input: PolyArgs,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Cauchy identity against the Kostant count
    Cauchy {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
    },
    /// sl3 operator identities
    U3 {
        #[arg(long, value_enum, default_value_t = U3Kind::All)]
        kind: U3Kind,
        /// Case number 1..=6 for congruence
        #[arg(long = "case")]
        case: Option<usize>,
        /// a,b for cyclic; N,M[,N',M'] for congruence
        #[arg(long)]
        params: Option<String>,
        #[arg(long, default_value_t = kp_core::bmod::DEFAULT_U3_BOUND)]
        bound: usize,
    },
    /// KP filtration extractor on a module
    #[command(group(ArgGroup::new("module").required(true).args(["tensor", "code", "one_dim"])))]
    Filtration {
        /// S_lambda (x) S_mu, given as lambda:mu
        #[arg(long, allow_hyphen_values = true)]
        tensor: Option<String>,
        /// S_lambda itself
        #[arg(long, allow_hyphen_values = true)]
        code: Option<String>,
        /// The one-dimensional module K_lambda
        #[arg(long, allow_hyphen_values = true)]
        one_dim: Option<String>,
    },
    /// Tensor product experiment; sweeps codes of S_upto when no pair is given
    TensorExp {
        /// lambda:mu
        #[arg(long, allow_hyphen_values = true)]
        pair: Option<String>,
    },
    /// Schur functor experiment; sweeps codes of S_upto when no code is given
    PlethysmExp {
        #[arg(long)]
        sigma: String,
        #[arg(long, allow_hyphen_values = true)]
        code: Option<String>,
        #[arg(long, default_value_t = kp_core::filtration::DEFAULT_SCHUR_BOUND)]
        bound: usize,
    },
    /// KP module against the Demazure module; sweeps S_upto when no code is given
    DemazureCompare {
        #[arg(long)]
        code: Option<String>,
    },
    /// Run verification suites
    Verify {
        /// Suite name, or "all"
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum U3Kind {
    Cyclic,
    Congruence,
    All,
}

enum Failure {
    Usage(String),
}

impl From<KpError> for Failure {
    fn from(e: KpError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<String> for Failure {
    fn from(e: String) -> Self {
        Failure::Usage(e)
    }
}

struct Output {
    json: Value,
    text: String,
    ok: bool,
}

impl Output {
    fn new<T: Serialize>(value: &T, text: String, ok: bool) -> Self {
        Output {
            json: serde_json::to_value(value).expect("reports serialize"),
            text,
            ok,
        }
    }
}

type Run = Result<Output, Failure>;

fn big_number(c: &num_bigint::BigInt) -> serde_json::Number {
    c.to_string().parse().expect("integers are valid JSON numbers")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string(&out.json).expect("valid JSON")),
                Format::Text => println!("{}", out.text.trim_end()),
            }
            if out.ok || !cli.expect_ok && !always_checked(&cli.command) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Commands whose result is itself a pass/fail verdict.
fn always_checked(c: &Command) -> bool {
    matches!(
        c,
        Command::KpChar { .. }
            | Command::Annihilator { .. }
            | Command::Cauchy { .. }
            | Command::U3 { .. }
            | Command::TensorExp { .. }
            | Command::PlethysmExp { .. }
            | Command::Verify { .. }
    )
}

fn weight_arg(s: &str, n: Option<usize>) -> Result<Weight, Failure> {
    Ok(parse::fit(parse::weight(s)?, n)?)
}

fn index_weight(index: &IndexArgs, n: Option<usize>) -> Result<Weight, Failure> {
    match (&index.code, &index.perm) {
        (Some(c), _) => weight_arg(c, n),
        (None, Some(p)) => {
            let w = parse::permutation(p)?;
            Ok(w.code(n.unwrap_or(w.support_len().max(1)))?)
        }
        (None, None) => unreachable!("clap enforces the group"),
    }
}

fn poly_input(input: &PolyArgs, n: Option<usize>) -> Result<LaurentPoly, Failure> {
    if let Some(p) = &input.poly {
        return Ok(parse::polynomial(p, n)?);
    }
    let factors = parse::weight_list(input.product.as_deref().expect("clap enforces the group"))?;
    let m = n.unwrap_or_else(|| factors.iter().map(Weight::n).max().unwrap_or(1));
    let mut f = LaurentPoly::one(m);
    for w in factors {
        f = &f * &schubert(&parse::fit(w, Some(m))?);
    }
    Ok(f)
}

fn expansion_text(e: &std::collections::BTreeMap<Weight, num_bigint::BigInt>) -> String {
    if e.is_empty() {
        return "0".into();
    }
    e.iter()
        .map(|(w, c)| format!("{c} * S{w}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn filtration_text(r: &FiltrationReport) -> String {
    let mut s = format!("ok: {}\n", r.ok);
    for f in &r.factors {
        s += &format!("  S{} x {}\n", f.nu, f.mult);
    }
    if let Some(w) = &r.witness {
        s += &format!(
            "  fails at level {} (nu = {}): expected {}, kernel character {}\n",
            w.level, w.nu, w.expected, w.actual
        );
    }
    s
}

fn run(cli: &Cli) -> Run {
    let n = cli.n;
    match &cli.command {
        Command::Schubert { index, method } => {
            let lambda = index_weight(index, n)?;
            let method = match method {
                Method::Transition => SchubertMethod::Transition,
                Method::Staircase => SchubertMethod::Staircase,
            };
            let f = schubert_poly(&lambda, method);
            Ok(Output::new(&f, f.to_string(), true))
        }
        Command::Code { perm } => {
            let w = parse::permutation(perm)?;
            let code = w.code(n.unwrap_or(w.support_len().max(1)))?;
            Ok(Output::new(&code, code.to_string(), true))
        }
        Command::Perm { code } => {
            let lambda = weight_arg(code, n)?;
            let w = perm_of(&lambda)?;
            Ok(Output::new(&w, w.to_string(), true))
        }
        Command::Transition { perm } => {
            let w = parse::permutation(perm)?;
            let t = transition(&w)?;
            let mut text = format!("S{} = x{} S{}", t.w, t.j, t.v);
            for (_, u) in &t.branches {
                text += &format!(" + S{u}");
            }
            Ok(Output::new(&t, text, true))
        }
        Command::Mtable { perm } => {
            let w = parse::permutation(perm)?;
            let table = m_table(&w, n.unwrap_or(w.support_len().max(1)))?;
            let mut text = String::new();
            for ((i, j), m) in &table.entries {
                let mark = if table.pruned.contains(&(*i, *j)) { "" } else { "  (superfluous)" };
                text += &format!("m_{i}{j} = {m}{mark}\n");
            }
            Ok(Output::new(&table, text, true))
        }
        Command::KpChar { code } => {
            let lambda = weight_arg(code, n)?;
            let kp = kp_module(&lambda)?;
            let ch = kp.module.character();
            let s = schubert(&lambda);
            let equal = ch == s;
            let value = json!({
                "lambda": lambda,
                "dim": kp.dim(),
                "character": ch,
                "schubert": s,
                "equal": equal,
            });
            let text = format!("ch = {ch}\nequal to Schubert polynomial: {equal}");
            Ok(Output { json: value, text, ok: equal })
        }
        Command::KpDim { code } => {
            let lambda = weight_arg(code, n)?;
            let d = kp_module(&lambda)?.dim();
            Ok(Output::new(&d, d.to_string(), true))
        }
        Command::Annihilator { perm } => {
            let w = parse::permutation(perm)?;
            let n = n.unwrap_or(w.support_len().max(1));
            let report = annihilator_check(&w, n)?;
            let presentation = annihilator_presentation(&w, n)?;
            let mut text = format!("dim S_w = {} (S_w(1) = {})\n", report.dim, report.schubert_at_ones);
            for c in &report.exponents {
                text += &format!(
                    "e_{}{}^{}: annihilates {}{}\n",
                    c.i,
                    c.j,
                    c.m + 1,
                    c.annihilates,
                    match c.sharp {
                        Some(s) => format!(", sharp {s}"),
                        None => String::new(),
                    }
                );
            }
            text += &format!("pruned: {:?}\nok: {}", report.pruned, report.ok());
            let ok = report.ok();
            let value = json!({ "report": report, "presentation": presentation, "ok": ok });
            Ok(Output { json: value, text, ok })
        }
        Command::Expand { input } => {
            let f = poly_input(input, n)?;
            let e = expand_in_schubert(&f);
            let value: Vec<Value> = e
                .iter()
                .map(|(w, c)| json!({ "nu": w, "coeff": big_number(c) }))
                .collect();
            let nonneg = e.values().all(|c| c.sign() != num_bigint::Sign::Minus);
            Ok(Output {
                json: Value::Array(value),
                text: expansion_text(&e),
                ok: nonneg,
            })
        }
        Command::Pairing { input, mu } => {
            let f = poly_input(input, n)?;
            let mu = parse::fit(parse::weight(mu)?, Some(f.n()))?;
            let c = dual_pairing(&f, &mu);
            let num: serde_json::Number = c.to_string().parse().expect("integer");
            Ok(Output::new(&num, c.to_string(), true))
        }
        Command::Cauchy { mu, nu } => {
            let (mu, nu) = (weight_arg(mu, n)?, weight_arg(nu, n)?);
            let r = cauchy_check(&mu, &nu)?;
            let text = format!("lhs = {}, kostant = {}, pass: {}", r.lhs, r.rhs, r.pass);
            Ok(Output::new(&r, text, r.pass))
        }
        Command::U3 { kind, case, params, bound } => u3(*kind, *case, params.as_deref(), *bound),
        Command::Filtration { tensor, code, one_dim } => {
            let module = if let Some(t) = tensor {
                let ws = parse::weight_list(t)?;
                let [a, b] = ws.as_slice() else {
                    return Err(Failure::Usage("--tensor expects lambda:mu".into()));
                };
                let (a, b) = (parse::fit(a.clone(), n)?, parse::fit(b.clone(), n)?);
                kp_core::bmod::tensor_product(&kp_module(&a)?.module, &kp_module(&b)?.module)?
            } else if let Some(c) = code {
                kp_module(&weight_arg(c, n)?)?.module
            } else {
                kp_core::bmod::one_dim(&weight_arg(one_dim.as_deref().expect("group"), n)?)
            };
            let r = kp_filtration_extract(&module)?;
            Ok(Output::new(&r, filtration_text(&r), r.ok))
        }
        Command::TensorExp { pair } => {
            let pairs: Vec<(Weight, Weight)> = match pair {
                Some(p) => {
                    let ws = parse::weight_list(p)?;
                    let [a, b] = ws.as_slice() else {
                        return Err(Failure::Usage("--pair expects lambda:mu".into()));
                    };
                    vec![(parse::fit(a.clone(), n)?, parse::fit(b.clone(), n)?)]
                }
                None => {
                    let cs = codes(cli.upto.unwrap_or(3))?;
                    cs.iter()
                        .flat_map(|a| cs.iter().map(move |b| (a.clone(), b.clone())))
                        .collect()
                }
            };
            let mut reports = Vec::new();
            let mut text = String::new();
            let mut ok = true;
            for (a, b) in &pairs {
                let r = tensor_experiment(a, b)?;
                ok &= r.ok();
                text += &format!(
                    "S{a} (x) S{b}: ok {}, factors match {}, criterion agrees {}\n",
                    r.filtration.ok, r.factors_match, r.criterion_agrees
                );
                reports.push(r);
            }
            Ok(Output::new(&reports, text, ok))
        }
        Command::PlethysmExp { sigma, code, bound } => {
            let parts = parse::int_list(sigma)?
                .into_iter()
                .map(|x| u32::try_from(x).map_err(|_| format!("invalid part {x}")))
                .collect::<Result<Vec<_>, String>>()?;
            let sigma = Partition::new(parts)?;
            let lambdas = match code {
                Some(c) => vec![weight_arg(c, n)?],
                None => codes(cli.upto.unwrap_or(3))?,
            };
            let mut reports = Vec::new();
            let mut text = String::new();
            let mut ok = true;
            for l in &lambdas {
                let r = schur_functor_experiment(&sigma, l, *bound)?;
                ok &= r.ok();
                text += &format!(
                    "s{sigma}(S{l}): dim {}, ok {}, character matches plethysm {}\n",
                    r.dim, r.filtration.ok, r.character_matches
                );
                reports.push(r);
            }
            Ok(Output::new(&reports, text, ok))
        }
        Command::DemazureCompare { code } => {
            let lambdas = match code {
                Some(c) => vec![weight_arg(c, n)?],
                None => codes(cli.upto.unwrap_or(4))?,
            };
            let mut rows = Vec::new();
            let mut text = String::new();
            for l in &lambdas {
                let kp = kp_module(l)?;
                let d = demazure_module(l)?;
                let (ck, cd) = (kp.module.character(), d.module.character());
                let maps = hom_space(&kp.module, &d.module)?;
                let surjection = maps.iter().any(|f| f.is_surjective());
                let w = perm_of(l)?;
                text += &format!(
                    "{w}: dim S_w {}, dim Demazure {}, characters equal {}, surjection {}\n",
                    kp.dim(),
                    d.dim(),
                    ck == cd,
                    surjection
                );
                rows.push(json!({
                    "lambda": l,
                    "w": w,
                    "kp_dim": kp.dim(),
                    "demazure_dim": d.dim(),
                    "kp_character": ck,
                    "demazure_character": cd,
                    "characters_equal": ck == cd,
                    "avoids_2143": w.avoids_2143(),
                    "hom_dim": maps.len(),
                    "surjection": surjection,
                }));
            }
            Ok(Output { json: Value::Array(rows), text, ok: true })
        }
        Command::Verify { suite } => {
            let names: Vec<&str> = if suite == "all" {
                SUITES.to_vec()
            } else {
                vec![suite.as_str()]
            };
            let opts = SuiteOptions { upto: cli.upto, seed: cli.seed };
            let mut results = Vec::new();
            let mut text = String::new();
            for name in names {
                let r = run_suite(name, &opts)?;
                text += &format!(
                    "{:<16} {:>6} cases  {}\n",
                    r.suite,
                    r.cases,
                    if r.pass { "PASS" } else { "FAIL" }
                );
                for f in r.failures.iter().take(10) {
                    text += &format!("    {f}\n");
                }
                results.push(r);
            }
            let ok = results.iter().all(|r| r.pass);
            Ok(Output::new(&results, text, ok))
        }
    }
}

fn codes(m: usize) -> Result<Vec<Weight>, Failure> {
    all_permutations(m)
        .iter()
        .map(|w| w.code(m).map_err(Failure::from))
        .collect()
}

fn u3(kind: U3Kind, case: Option<usize>, params: Option<&str>, bound: usize) -> Run {
    let params = params.map(parse::int_list).transpose()?.unwrap_or_default();
    let as_usize = |v: i64| usize::try_from(v).map_err(|_| Failure::Usage(format!("negative parameter {v}")));
    let reports: Vec<U3Report> = match kind {
        U3Kind::Cyclic => {
            let [a, b] = params.as_slice() else {
                return Err(Failure::Usage("cyclic expects --params a,b".into()));
            };
            vec![cyclic_check(as_usize(*a)?, as_usize(*b)?, bound)?]
        }
        U3Kind::Congruence => {
            let case = case
                .and_then(CongruenceCase::from_index)
                .ok_or_else(|| Failure::Usage("congruence expects --case 1..=6".into()))?;
            let p = params.iter().map(|&v| as_usize(v)).collect::<Result<Vec<_>, _>>()?;
            let p = match p.as_slice() {
                [n, m] => CongruenceParams { n: *n, m: *m, ..Default::default() },
                [n, m, np, mp] => CongruenceParams { n: *n, m: *m, n_prime: *np, m_prime: *mp },
                _ => return Err(Failure::Usage("congruence expects --params N,M[,N',M']".into())),
            };
            vec![congruence_check(case, p, bound)?]
        }
        U3Kind::All => {
            let mut out = Vec::new();
            for a in 0..=bound {
                for b in 0..=bound {
                    out.push(cyclic_check(a, b, bound)?);
                }
            }
            out.extend(congruence_sweep(bound)?);
            out
        }
    };
    let ok = reports.iter().all(|r| r.pass);
    let mut text = String::new();
    for r in &reports {
        let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let status = if !r.applicable {
            "n/a"
        } else if r.pass {
            "pass"
        } else {
            "FAIL"
        };
        text += &format!("{} {}: {status}\n", r.kind, params.join(" "));
    }
    if reports.len() > 1 {
        text = format!("{} checks, all pass: {ok}\n", reports.len())
            + &text.lines().filter(|l| l.ends_with("FAIL")).collect::<Vec<_>>().join("\n");
    }
    Ok(Output::new(&reports, text, ok))
}
