//! Exact projective and affine plane geometry over the rationals.
//!
//! Lines and points of the projective plane are stored as canonical integer
//! triples: coprime entries with a positive leading nonzero entry. Two
//! proportional triples therefore normalize to the same value, which makes
//! equality, ordering and hashing purely syntactic.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational scalar.
pub type Rational = BigRational;

/// A canonical homogeneous triple.
pub type Triple = [BigInt; 3];

/// Scales a rational triple to coprime integers with a positive leading entry.
pub fn normalize_triple(raw: &[Rational; 3]) -> Result<Triple> {
    if raw.iter().all(Zero::is_zero) {
        return Err(Error::ZeroTriple);
    }
    let lcm = raw
        .iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints = raw
        .clone()
        .map(|r| (r * Rational::from_integer(lcm.clone())).to_integer());
    normalize_int_triple(ints)
}

/// Divides out the content of an integer triple and fixes the sign.
pub fn normalize_int_triple(mut v: Triple) -> Result<Triple> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return Err(Error::ZeroTriple);
    }
    let lead_negative = v
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative());
    for x in v.iter_mut() {
        *x /= &g;
        if lead_negative {
            *x = -&*x;
        }
    }
    Ok(v)
}

fn dot(a: &Triple, b: &Triple) -> BigInt {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

fn cross(a: &Triple, b: &Triple) -> Triple {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

/// A line `a·x + b·y + c·z = 0` of the projective plane.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjLine {
    coeffs: Triple,
    label: String,
}

impl ProjLine {
    pub fn new(raw: &[Rational; 3], label: impl Into<String>) -> Result<Self> {
        Ok(Self {
            coeffs: normalize_triple(raw)?,
            label: label.into(),
        })
    }

    pub fn from_ints(a: i64, b: i64, c: i64, label: impl Into<String>) -> Result<Self> {
        Ok(Self {
            coeffs: normalize_int_triple([a.into(), b.into(), c.into()])?,
            label: label.into(),
        })
    }

    pub fn coeffs(&self) -> &Triple {
        &self.coeffs
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// True when both lines are the same subset of the plane, ignoring labels.
    pub fn same_line(&self, other: &ProjLine) -> bool {
        self.coeffs == other.coeffs
    }

    /// The line `z = 0`.
    pub fn is_standard_infinity(&self) -> bool {
        self.coeffs[0].is_zero() && self.coeffs[1].is_zero()
    }
}

impl fmt::Display for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", linear_form(&self.coeffs, ["x", "y", "z"]))
    }
}

/// A point `[x:y:z]` of the projective plane.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: Triple,
}

impl ProjPoint {
    pub fn new(raw: &[Rational; 3]) -> Result<Self> {
        Ok(Self {
            coords: normalize_triple(raw)?,
        })
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Result<Self> {
        Ok(Self {
            coords: normalize_int_triple([x.into(), y.into(), z.into()])?,
        })
    }

    pub fn coords(&self) -> &Triple {
        &self.coords
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z] = &self.coords;
        write!(f, "[{x}:{y}:{z}]")
    }
}

/// Canonical form of a nonzero rational triple.
pub fn normalize_line(raw: &[Rational; 3]) -> Result<Triple> {
    normalize_triple(raw)
}

/// The unique common point of two distinct lines.
pub fn intersect(l1: &ProjLine, l2: &ProjLine) -> Result<ProjPoint> {
    if l1.same_line(l2) {
        return Err(Error::EqualLines(l1.label.clone(), l2.label.clone()));
    }
    // Distinct canonical triples are never proportional, so the cross product is nonzero.
    let coords = normalize_int_triple(cross(&l1.coeffs, &l2.coeffs))?;
    Ok(ProjPoint { coords })
}

pub fn point_on_line(p: &ProjPoint, l: &ProjLine) -> bool {
    dot(&p.coords, &l.coeffs).is_zero()
}

/// A line `a·x + b·y + c = 0` of the affine plane, stored canonically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffLine {
    coeffs: Triple,
    label: String,
}

impl AffLine {
    pub fn new(raw: &[Rational; 3], label: impl Into<String>) -> Result<Self> {
        if raw[0].is_zero() && raw[1].is_zero() {
            return Err(Error::DegenerateAffineLine);
        }
        Ok(Self {
            coeffs: normalize_triple(raw)?,
            label: label.into(),
        })
    }

    pub fn from_ints(a: i64, b: i64, c: i64, label: impl Into<String>) -> Result<Self> {
        if a == 0 && b == 0 {
            return Err(Error::DegenerateAffineLine);
        }
        Ok(Self {
            coeffs: normalize_int_triple([a.into(), b.into(), c.into()])?,
            label: label.into(),
        })
    }

    pub fn coeffs(&self) -> &Triple {
        &self.coeffs
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn same_line(&self, other: &AffLine) -> bool {
        self.coeffs == other.coeffs
    }

    pub fn contains(&self, p: &AffPoint) -> bool {
        let [a, b, c] = &self.coeffs;
        (Rational::from_integer(a.clone()) * &p.x + Rational::from_integer(b.clone()) * &p.y
            + Rational::from_integer(c.clone()))
        .is_zero()
    }
}

impl fmt::Display for AffLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = 0", linear_form(&self.coeffs, ["x", "y", ""]))
    }
}

/// A point of the affine plane.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffPoint {
    pub x: Rational,
    pub y: Rational,
}

impl fmt::Display for AffPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Affine intersection of two lines, `None` when they are parallel.
pub fn affine_intersect(l1: &AffLine, l2: &AffLine) -> Result<Option<AffPoint>> {
    if l1.same_line(l2) {
        return Err(Error::EqualLines(l1.label.clone(), l2.label.clone()));
    }
    let [a1, b1, c1] = &l1.coeffs;
    let [a2, b2, c2] = &l2.coeffs;
    let det = a1 * b2 - a2 * b1;
    if det.is_zero() {
        return Ok(None);
    }
    let x = BigRational::new(b1 * c2 - b2 * c1, det.clone());
    let y = BigRational::new(c1 * a2 - c2 * a1, det);
    Ok(Some(AffPoint { x, y }))
}

/// Homogenizes `a·x + b·y + c = 0` to `a·x + b·y + c·z = 0`.
pub fn projectivize(l: &AffLine) -> ProjLine {
    ProjLine {
        coeffs: l.coeffs.clone(),
        label: l.label.clone(),
    }
}

/// Projective coordinate change sending `infinity` to `w = 0`.
///
/// New coordinates are `(u, v, w)` where `w` is the linear form of `infinity`
/// and `u, v` are the two standard coordinates left after dropping the
/// largest index `k` at which `infinity` has a nonzero coefficient. When
/// `infinity` is `z = 0` this is the identity chart.
#[derive(Debug, Clone)]
pub struct AffineChart {
    infinity: Triple,
    pivot: usize,
    kept: [usize; 2],
}

impl AffineChart {
    pub fn new(infinity: &ProjLine) -> Self {
        let pivot = (0..3)
            .rev()
            .find(|&i| !infinity.coeffs[i].is_zero())
            .expect("canonical line has a nonzero coefficient");
        let mut kept = [0; 2];
        let mut slot = 0;
        for i in 0..3 {
            if i != pivot {
                kept[slot] = i;
                slot += 1;
            }
        }
        Self {
            infinity: infinity.coeffs.clone(),
            pivot,
            kept,
        }
    }

    /// Coefficients of `l` in the `(u, v, w)` coordinates, scaled to stay integral.
    fn transform(&self, l: &Triple) -> Triple {
        // l = m_u·e_i + m_v·e_j + m_w·infinity with m_w = l_k / inf_k.
        // Multiplying through by inf_k keeps everything in integers.
        let lk = &l[self.pivot];
        let ik = &self.infinity[self.pivot];
        let [i, j] = self.kept;
        [
            &l[i] * ik - lk * &self.infinity[i],
            &l[j] * ik - lk * &self.infinity[j],
            lk.clone(),
        ]
    }

    /// Image of a projective line in the affine chart.
    pub fn restrict(&self, l: &ProjLine) -> Result<AffLine> {
        let t = self.transform(&l.coeffs);
        if t[0].is_zero() && t[1].is_zero() {
            return Err(Error::LineAtInfinity(l.label.clone()));
        }
        Ok(AffLine {
            coeffs: normalize_int_triple(t)?,
            label: l.label.clone(),
        })
    }

    /// Affine coordinates of a projective point off the line at infinity.
    pub fn point(&self, p: &ProjPoint) -> Option<AffPoint> {
        let w = dot(&self.infinity, &p.coords);
        if w.is_zero() {
            return None;
        }
        let [i, j] = self.kept;
        Some(AffPoint {
            x: BigRational::new(p.coords[i].clone(), w.clone()),
            y: BigRational::new(p.coords[j].clone(), w),
        })
    }
}

/// Affine image of `l` in the chart where `infinity` becomes the line at infinity.
pub fn restrict_to_affine(l: &ProjLine, infinity: &ProjLine) -> Result<AffLine> {
    if l.same_line(infinity) {
        return Err(Error::LineAtInfinity(l.label.clone()));
    }
    AffineChart::new(infinity).restrict(l)
}

/// Renders `a·v0 + b·v1 + c·v2` in a compact human form such as `x - 2y + 3z`.
pub fn linear_form(coeffs: &Triple, vars: [&str; 3]) -> String {
    let mut out = String::new();
    for (c, v) in coeffs.iter().zip(vars) {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let body = if mag.is_one() && !v.is_empty() {
            v.to_string()
        } else {
            format!("{mag}{v}")
        };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
            out.push_str(&body);
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
            out.push_str(&body);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
