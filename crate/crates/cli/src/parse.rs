//! Command-line argument formats: comma-separated integers, `:`-separated
//! pairs, and Laurent polynomials such as `3*x1^2*x2^-1 - x3 + 1`.

use kp_core::permcomb::{Permutation, Weight};
use kp_core::schubpoly::LaurentPoly;
use num_bigint::BigInt;

pub fn int_list(s: &str) -> Result<Vec<i64>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| format!("expected an integer, got {t:?}"))
        })
        .collect()
}

pub fn weight(s: &str) -> Result<Weight, String> {
    let v = int_list(s)?;
    if v.is_empty() {
        return Err("empty weight".into());
    }
    Ok(Weight(v))
}

pub fn permutation(s: &str) -> Result<Permutation, String> {
    let v = int_list(s)?;
    let window = v
        .into_iter()
        .map(|x| u32::try_from(x).map_err(|_| format!("invalid permutation entry {x}")))
        .collect::<Result<Vec<u32>, String>>()?;
    Permutation::from_window(window).map_err(|e| e.to_string())
}

pub fn weight_list(s: &str) -> Result<Vec<Weight>, String> {
    s.split(':').map(weight).collect()
}

/// Pads a weight with zeros to length `n`; rejects weights longer than `n`.
pub fn fit(w: Weight, n: Option<usize>) -> Result<Weight, String> {
    match n {
        None => Ok(w),
        Some(n) if n < w.n() => Err(format!("weight {w} has more than n = {n} entries")),
        Some(n) => {
            let mut v = w.0;
            v.resize(n, 0);
            Ok(Weight(v))
        }
    }
}

fn monomial(term: &str) -> Result<(Vec<(usize, i64)>, BigInt), String> {
    let mut coeff = BigInt::from(1);
    let mut vars = Vec::new();
    for factor in term.split('*') {
        if factor.is_empty() {
            return Err(format!("malformed term {term:?}"));
        }
        if let Some(rest) = factor.strip_prefix('x') {
            let (idx, exp) = match rest.split_once('^') {
                Some((i, e)) => (i, e.parse::<i64>().map_err(|_| format!("bad exponent in {factor:?}"))?),
                None => (rest, 1),
            };
            let idx: usize = idx.parse().map_err(|_| format!("bad variable {factor:?}"))?;
            if idx == 0 {
                return Err("variables are numbered from x1".into());
            }
            vars.push((idx, exp));
        } else {
            let c: BigInt = factor.parse().map_err(|_| format!("bad coefficient {factor:?}"))?;
            coeff *= c;
        }
    }
    Ok((vars, coeff))
}

/// Parses a Laurent polynomial in at least `n` variables.
pub fn polynomial(s: &str, n: Option<usize>) -> Result<LaurentPoly, String> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err("empty polynomial".into());
    }
    let mut terms = Vec::new();
    let mut sign = 1;
    let mut current = String::new();
    let mut prev = None;
    for c in compact.chars() {
        // a '-' after '^' belongs to the exponent
        if (c == '+' || c == '-') && prev != Some('^') {
            if !current.is_empty() {
                terms.push((sign, std::mem::take(&mut current)));
            } else if prev.is_some() {
                return Err(format!("malformed polynomial {s:?}"));
            }
            sign = if c == '-' { -1 } else { 1 };
        } else {
            current.push(c);
        }
        prev = Some(c);
    }
    if current.is_empty() {
        return Err(format!("malformed polynomial {s:?}"));
    }
    terms.push((sign, current));
    let parsed = terms
        .iter()
        .map(|(sign, t)| monomial(t).map(|(v, c)| (v, c * sign)))
        .collect::<Result<Vec<_>, String>>()?;
    let used = parsed
        .iter()
        .flat_map(|(v, _)| v.iter().map(|(i, _)| *i))
        .max()
        .unwrap_or(1);
    let nvars = n.unwrap_or(used);
    if used > nvars {
        return Err(format!("polynomial uses x{used} but n = {nvars}"));
    }
    let mut f = LaurentPoly::zero(nvars);
    for (vars, c) in parsed {
        let mut exp = vec![0i64; nvars];
        for (i, e) in vars {
            exp[i - 1] += e;
        }
        f.add_term(exp, &c);
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_weights_and_lists() {
        assert_eq!(weight("1,0,-2").unwrap(), Weight(vec![1, 0, -2]));
        assert!(weight("1,a").is_err());
        assert_eq!(weight_list("0,1:0,1").unwrap().len(), 2);
        assert_eq!(fit(Weight(vec![1]), Some(3)).unwrap(), Weight(vec![1, 0, 0]));
        assert!(fit(Weight(vec![1, 0, 0]), Some(2)).is_err());
    }

    #[test]
    fn parses_permutations() {
        assert_eq!(permutation("2,1,4,3").unwrap().to_string(), "[2,1,4,3]");
        assert!(permutation("1,1").is_err());
        assert!(permutation("0,1").is_err());
    }

    #[test]
    fn parses_polynomials() {
        let f = polynomial("x1^2 + x1*x2 + x1*x3", None).unwrap();
        assert_eq!(f.to_string(), "x1^2 + x1*x2 + x1*x3");
        let g = polynomial("3 - 2*x1^-1*x2^2", None).unwrap();
        assert_eq!(g.to_string(), "3 - 2*x1^-1*x2^2");
        assert_eq!(polynomial("-x1", Some(3)).unwrap().n(), 3);
        assert!(polynomial("x1 +", None).is_err());
        assert!(polynomial("x0", None).is_err());
        assert!(polynomial("x3", Some(2)).is_err());
    }
}
