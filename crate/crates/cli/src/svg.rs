//! SVG rendering of the real part of an affine arrangement.
//!
//! Clipping happens in exact rational arithmetic; coordinates become decimal
//! strings (6 significant digits) only when the SVG text is written.

use std::fmt::Write as _;

use linesplit::{AffArrangement, AffLine, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{CliError, Result};

/// Side length of the square drawing area in SVG user units.
pub const CANVAS: i64 = 600;
const MARGIN: i64 = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    pub x0: Rational,
    pub y0: Rational,
    pub x1: Rational,
    pub y1: Rational,
}

impl Window {
    pub fn new(x0: Rational, y0: Rational, x1: Rational, y1: Rational) -> Result<Self> {
        if x0 >= x1 || y0 >= y1 {
            return Err(CliError::DegenerateWindow);
        }
        Ok(Self { x0, y0, x1, y1 })
    }

    fn contains(&self, x: &Rational, y: &Rational) -> bool {
        &self.x0 <= x && x <= &self.x1 && &self.y0 <= y && y <= &self.y1
    }
}

/// A clipped segment with exact endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub label: String,
    pub from: (Rational, Rational),
    pub to: (Rational, Rational),
}

/// The part of `line` inside the window, or `None` if it misses the window
/// or only touches a corner.
pub fn clip(line: &AffLine, w: &Window) -> Option<Segment> {
    let [a, b, c] = line.coeffs().clone().map(Rational::from_integer);
    let mut hits: Vec<(Rational, Rational)> = Vec::new();
    if !b.is_zero() {
        for x in [&w.x0, &w.x1] {
            let y = -(&c + &a * x) / &b;
            hits.push((x.clone(), y));
        }
    }
    if !a.is_zero() {
        for y in [&w.y0, &w.y1] {
            let x = -(&c + &b * y) / &a;
            hits.push((x, y.clone()));
        }
    }
    hits.retain(|(x, y)| w.contains(x, y));
    hits.sort();
    hits.dedup();
    match (hits.first(), hits.last()) {
        (Some(p), Some(q)) if p != q => Some(Segment {
            label: line.label().to_string(),
            from: p.clone(),
            to: q.clone(),
        }),
        _ => None,
    }
}

/// Decimal string with at most six significant digits, trailing zeros trimmed.
pub fn decimal(r: &Rational) -> String {
    if r.is_zero() {
        return "0".into();
    }
    let neg = r.is_negative();
    let a = r.abs();
    let ten = BigInt::from(10);
    // exponent e with 10^e <= a < 10^(e+1)
    let mut e: i64 = 0;
    let mut scaled = a.clone();
    while scaled >= Rational::from_integer(ten.clone()) {
        scaled /= Rational::from_integer(ten.clone());
        e += 1;
    }
    while scaled < Rational::one() {
        scaled *= Rational::from_integer(ten.clone());
        e -= 1;
    }
    // round scaled * 10^5 to an integer with six digits
    let mut digits = (scaled * Rational::from_integer(ten.pow(5))).round().to_integer();
    if digits >= ten.pow(6) {
        digits /= &ten;
        e += 1;
    }
    let s = digits.to_string();
    let body = if e >= 5 {
        format!("{s}{}", "0".repeat((e - 5) as usize))
    } else if e >= 0 {
        let (int, frac) = s.split_at(e as usize + 1);
        let frac = frac.trim_end_matches('0');
        if frac.is_empty() {
            int.to_string()
        } else {
            format!("{int}.{frac}")
        }
    } else {
        let frac = format!("{}{s}", "0".repeat((-e - 1) as usize));
        format!("0.{}", frac.trim_end_matches('0'))
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Deterministic SVG of the arrangement restricted to the window.
///
/// The window maps to a square canvas with a uniform scale (so angles are
/// preserved); the `y` axis points up.
pub fn render(arr: &AffArrangement, w: &Window) -> String {
    let width = &w.x1 - &w.x0;
    let height = &w.y1 - &w.y0;
    let span = if width > height { width.clone() } else { height.clone() };
    let scale = Rational::from_integer(CANVAS.into()) / span;
    let margin = Rational::from_integer(MARGIN.into());
    let map = |(x, y): &(Rational, Rational)| {
        (
            decimal(&((x - &w.x0) * &scale + &margin)),
            decimal(&((&w.y1 - y) * &scale + &margin)),
        )
    };
    let vw = decimal(&(&width * &scale + &margin * Rational::from_integer(2.into())));
    let vh = decimal(&(&height * &scale + &margin * Rational::from_integer(2.into())));

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 {vw} {vh}\" width=\"{vw}\" height=\"{vh}\">"
    )
    .unwrap();
    writeln!(
        out,
        "<!-- window x in [{}, {}], y in [{}, {}] -->",
        w.x0, w.x1, w.y0, w.y1
    )
    .unwrap();
    let (bx, by) = map(&(w.x0.clone(), w.y1.clone()));
    writeln!(
        out,
        "<rect x=\"{bx}\" y=\"{by}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"#bbbbbb\"/>",
        decimal(&(&width * &scale)),
        decimal(&(&height * &scale))
    )
    .unwrap();
    for line in arr.lines() {
        let label = escape(line.label());
        match clip(line, w) {
            Some(seg) => {
                let (x1, y1) = map(&seg.from);
                let (x2, y2) = map(&seg.to);
                writeln!(
                    out,
                    "<line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"black\" stroke-width=\"2\"><title>{label}</title></line>"
                )
                .unwrap();
                writeln!(
                    out,
                    "<text x=\"{x2}\" y=\"{y2}\" font-family=\"sans-serif\" font-size=\"14\" dx=\"4\" dy=\"-4\">{label}</text>"
                )
                .unwrap();
            }
            None => {
                writeln!(out, "<!-- {label}: {} misses the window -->", escape(&line.to_string())).unwrap();
            }
        }
    }
    out.push_str("</svg>\n");
    out
}
