//! The arrangement text format.
//!
//! ```text
//! # comment
//! projective            (optional header: `projective` or `affine`)
//! P 1 0 0 H1            (projective line a·x + b·y + c·z = 0)
//! A 1 0 -1/2 L1         (affine line a·x + b·y + c = 0)
//! ```
//!
//! Rationals are `p` or `p/q` with `q > 0`. Labels are unique and contain no
//! whitespace. Kinds may not be mixed within one file.

use std::collections::HashMap;
use std::fmt::Write as _;

use linesplit::{AffArrangement, AffLine, Error, ProjArrangement, ProjLine, Rational};
use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedArrangement {
    Projective(ProjArrangement),
    Affine(AffArrangement),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Projective,
    Affine,
}

pub fn parse_rational(token: &str) -> Option<Rational> {
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    let (num, den) = match token.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (token, None),
    };
    let unsigned = num.strip_prefix('-').unwrap_or(num);
    if !digits(unsigned) {
        return None;
    }
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = match den {
        Some(d) if digits(d) => d.parse().ok()?,
        Some(_) => return None,
        None => BigInt::from(1),
    };
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

pub fn parse(text: &str) -> Result<ParsedArrangement> {
    let mut kind: Option<Kind> = None;
    let mut header_allowed = true;
    let mut proj: Vec<ProjLine> = Vec::new();
    let mut aff: Vec<AffLine> = Vec::new();
    let mut labels: HashMap<String, usize> = HashMap::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |reason: String| CliError::Parse {
            line: line_no,
            reason,
        };
        if header_allowed && (content == "projective" || content == "affine") {
            kind = Some(if content == "projective" {
                Kind::Projective
            } else {
                Kind::Affine
            });
            header_allowed = false;
            continue;
        }
        header_allowed = false;

        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.len() != 5 {
            return Err(err(format!(
                "expected `P|A a b c label`, found {} fields",
                tokens.len()
            )));
        }
        let entry_kind = match tokens[0] {
            "P" => Kind::Projective,
            "A" => Kind::Affine,
            other => return Err(err(format!("unknown entry kind `{other}`"))),
        };
        match kind {
            Some(k) if k != entry_kind => return Err(CliError::MixedKinds { line: line_no }),
            _ => kind = Some(entry_kind),
        }
        let mut coeffs = Vec::with_capacity(3);
        for t in &tokens[1..4] {
            coeffs.push(
                parse_rational(t).ok_or_else(|| err(format!("`{t}` is not a rational `p` or `p/q`")))?,
            );
        }
        let coeffs: [Rational; 3] = coeffs.try_into().expect("three coefficients");
        let label = tokens[4];
        if let Some(prev) = labels.insert(label.to_string(), line_no) {
            return Err(err(format!("label `{label}` already used on line {prev}")));
        }
        let build_err = |e: Error| match e {
            Error::ZeroTriple => err("coefficients are all zero".into()),
            Error::DegenerateAffineLine => err("affine line needs a or b nonzero".into()),
            other => CliError::Analysis(other),
        };
        match entry_kind {
            Kind::Projective => {
                let l = ProjLine::new(&coeffs, label).map_err(build_err)?;
                if let Some(prev) = proj.iter().find(|p| p.same_line(&l)) {
                    return Err(CliError::DuplicateLine {
                        first: prev.label().to_string(),
                        second: label.to_string(),
                    });
                }
                proj.push(l);
            }
            Kind::Affine => {
                let l = AffLine::new(&coeffs, label).map_err(build_err)?;
                if let Some(prev) = aff.iter().find(|p| p.same_line(&l)) {
                    return Err(CliError::DuplicateLine {
                        first: prev.label().to_string(),
                        second: label.to_string(),
                    });
                }
                aff.push(l);
            }
        }
    }

    match kind {
        Some(Kind::Projective) if !proj.is_empty() => {
            Ok(ParsedArrangement::Projective(ProjArrangement::new(proj)?))
        }
        Some(Kind::Affine) if !aff.is_empty() => {
            Ok(ParsedArrangement::Affine(AffArrangement::new(aff)?))
        }
        _ => Err(CliError::Parse {
            line: text.lines().count().max(1),
            reason: "file contains no lines".into(),
        }),
    }
}

pub fn emit_projective(arr: &ProjArrangement) -> String {
    let mut out = String::from("projective\n");
    for l in arr.lines() {
        let [a, b, c] = l.coeffs();
        writeln!(out, "P {a} {b} {c} {}", l.label()).unwrap();
    }
    out
}

pub fn emit_affine(arr: &AffArrangement) -> String {
    let mut out = String::from("affine\n");
    for l in arr.lines() {
        let [a, b, c] = l.coeffs();
        writeln!(out, "A {a} {b} {c} {}", l.label()).unwrap();
    }
    out
}
