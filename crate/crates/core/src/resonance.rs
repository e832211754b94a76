//! Local components of the first resonance variety and the span-disjoint
//! bipartition search.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::fan::Dsu;
use crate::geom::{ProjPoint, Rational};
use crate::gpp::{has_gpp_decone, GppWitness};
use crate::incidence::IncidenceData;
use crate::linalg::{difference_vector, intersection_dim, span_sum, SubspaceBasis};

/// The local component `{λ : Σλ = 0, λ_i = 0 off the point's lines}` of a
/// point of multiplicity `m ≥ 3`; a subspace of dimension `m - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalComponent {
    pub point_id: usize,
    pub point: ProjPoint,
    pub incident: Vec<usize>,
    pub basis: SubspaceBasis,
}

impl LocalComponent {
    /// Generators `f_i - f_k` with `k` the largest incident line.
    pub fn generators(&self, ambient: usize) -> Vec<Vec<Rational>> {
        let k = *self.incident.last().expect("nonempty");
        self.incident[..self.incident.len() - 1]
            .iter()
            .map(|&i| difference_vector(ambient, i, k))
            .collect()
    }
}

/// One component per point of multiplicity at least three, in canonical point order.
pub fn local_components(inc: &IncidenceData) -> Vec<LocalComponent> {
    let n = inc.line_count();
    inc.multiple_point_ids(3)
        .into_iter()
        .map(|id| {
            let rec = inc.point(id);
            let mut comp = LocalComponent {
                point_id: id,
                point: rec.point.clone(),
                incident: rec.incident.clone(),
                basis: SubspaceBasis::zero(n),
            };
            comp.basis = SubspaceBasis::span(n, comp.generators(n)).expect("lengths match");
            comp
        })
        .collect()
}

/// Span of a family of components.
pub fn family_span(comps: &[LocalComponent], members: &[usize]) -> Result<SubspaceBasis> {
    let ambient = comps.first().map_or(0, |c| c.basis.ambient());
    members.iter().try_fold(SubspaceBasis::zero(ambient), |acc, &i| {
        span_sum(&acc, &comps[i].basis)
    })
}

/// True when `dim Span(S1) + dim Span(S2) = dim Span(S1 ∪ S2)`.
pub fn is_span_disjoint(comps: &[LocalComponent], s1: &[usize], s2: &[usize]) -> Result<bool> {
    let a = family_span(comps, s1)?;
    let b = family_span(comps, s2)?;
    Ok(intersection_dim(&a, &b)? == 0)
}

/// Split of the components into two nonempty families with trivially
/// intersecting spans. Indices refer to the input slice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanBipartition {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

/// Groups of components linked by pairwise nontrivial span intersections.
/// Any span-disjoint bipartition is a union of whole groups.
pub fn intersection_groups(comps: &[LocalComponent]) -> Result<Vec<Vec<usize>>> {
    let k = comps.len();
    let mut dsu = Dsu::new(k);
    for i in 0..k {
        for j in i + 1..k {
            if intersection_dim(&comps[i].basis, &comps[j].basis)? > 0 {
                dsu.union(i, j);
            }
        }
    }
    let labels = dsu.labels();
    let count = labels.iter().copied().max().map_or(0, |m| m + 1);
    let mut groups = vec![Vec::new(); count];
    for (i, &l) in labels.iter().enumerate() {
        groups[l].push(i);
    }
    Ok(groups)
}

/// Searches bipartitions of the intersection groups with the exact
/// dimension test. The first family always contains component 0.
pub fn find_span_disjoint_bipartition(comps: &[LocalComponent]) -> Result<Option<SpanBipartition>> {
    if comps.len() < 2 {
        return Err(Error::TooFewComponents(comps.len()));
    }
    let groups = intersection_groups(comps)?;
    let g = groups.len();
    if g < 2 {
        return Ok(None);
    }
    for mask in 1u64..(1u64 << (g - 1)) {
        let mut first = groups[0].clone();
        let mut second = Vec::new();
        for (idx, group) in groups.iter().enumerate().skip(1) {
            if mask & (1 << (idx - 1)) != 0 {
                second.extend_from_slice(group);
            } else {
                first.extend_from_slice(group);
            }
        }
        first.sort_unstable();
        second.sort_unstable();
        if is_span_disjoint(comps, &first, &second)? {
            return Ok(Some(SpanBipartition { first, second }));
        }
    }
    Ok(None)
}

/// Outcome of the resonance search attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ResonanceEvidence {
    /// Fewer than two local components; no bipartition is possible.
    TooFewComponents(usize),
    NoBipartition,
    Bipartition(SpanBipartition),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Some decone splits transversally; the complement group of that decone
    /// is the product of the groups of the two parts.
    ProductPossible(GppWitness),
    /// No decone has a general position partition, so the projective
    /// complement group is not a nontrivial direct product.
    NotAProduct(ResonanceEvidence),
}

impl Verdict {
    pub fn is_product_possible(&self) -> bool {
        matches!(self, Verdict::ProductPossible(_))
    }
}

pub fn resonance_evidence(comps: &[LocalComponent]) -> Result<ResonanceEvidence> {
    if comps.len() < 2 {
        return Ok(ResonanceEvidence::TooFewComponents(comps.len()));
    }
    Ok(match find_span_disjoint_bipartition(comps)? {
        Some(b) => ResonanceEvidence::Bipartition(b),
        None => ResonanceEvidence::NoBipartition,
    })
}

/// Decides the verdict from the decone predicate and attaches resonance evidence.
pub fn product_obstruction(inc: &IncidenceData) -> Result<Verdict> {
    match has_gpp_decone(inc)? {
        Some(w) => Ok(Verdict::ProductPossible(w)),
        None => Ok(Verdict::NotAProduct(resonance_evidence(&local_components(inc))?)),
    }
}

/// Coordinate sum of a vector.
pub fn coordinate_sum(v: &[Rational]) -> Rational {
    v.iter().fold(Rational::zero(), |acc, x| acc + x)
}
