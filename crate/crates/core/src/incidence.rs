//! Arrangements, their multiple-point structure, cone/decone and
//! transversality checks.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::geom::{
    affine_intersect, intersect, point_on_line, projectivize, AffLine, AffPoint, AffineChart,
    ProjLine, ProjPoint,
};

fn check_distinct<'a, T>(
    items: &'a [T],
    label: impl Fn(&'a T) -> &'a str,
    same: impl Fn(&T, &T) -> bool,
) -> Result<()> {
    if items.is_empty() {
        return Err(Error::EmptyArrangement);
    }
    let mut seen = HashSet::new();
    for (i, a) in items.iter().enumerate() {
        if !seen.insert(label(a)) {
            return Err(Error::DuplicateLabel(label(a).to_string()));
        }
        if let Some(b) = items[..i].iter().find(|b| same(a, b)) {
            return Err(Error::DuplicateLine {
                first: label(b).to_string(),
                second: label(a).to_string(),
            });
        }
    }
    Ok(())
}

/// Distinct lines of the projective plane, indexed `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjArrangement {
    lines: Vec<ProjLine>,
}

impl ProjArrangement {
    pub fn new(lines: Vec<ProjLine>) -> Result<Self> {
        check_distinct(&lines, ProjLine::label, ProjLine::same_line)?;
        Ok(Self { lines })
    }

    pub fn lines(&self) -> &[ProjLine] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        self.lines[i].label()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.lines.iter().position(|l| l.label() == label)
    }
}

/// Distinct lines of the affine plane, indexed `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffArrangement {
    lines: Vec<AffLine>,
}

impl AffArrangement {
    pub fn new(lines: Vec<AffLine>) -> Result<Self> {
        check_distinct(&lines, AffLine::label, AffLine::same_line)?;
        Ok(Self { lines })
    }

    pub fn lines(&self) -> &[AffLine] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.lines.iter().position(|l| l.label() == label)
    }
}

/// One intersection point with the indices of every line through it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointRecord {
    pub point: ProjPoint,
    pub incident: Vec<usize>,
}

impl PointRecord {
    pub fn multiplicity(&self) -> usize {
        self.incident.len()
    }

    pub fn contains_line(&self, line: usize) -> bool {
        self.incident.binary_search(&line).is_ok()
    }
}

/// The multiple points of a projective arrangement.
///
/// Points are sorted lexicographically by canonical coordinates; a point id
/// is an index into [`IncidenceData::points`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceData {
    arrangement: ProjArrangement,
    points: Vec<PointRecord>,
}

impl IncidenceData {
    pub fn arrangement(&self) -> &ProjArrangement {
        &self.arrangement
    }

    pub fn line_count(&self) -> usize {
        self.arrangement.len()
    }

    pub fn points(&self) -> &[PointRecord] {
        &self.points
    }

    pub fn point(&self, id: usize) -> &PointRecord {
        &self.points[id]
    }

    /// Ids of points with multiplicity at least `min_mult`.
    pub fn multiple_point_ids(&self, min_mult: usize) -> Vec<usize> {
        (0..self.points.len())
            .filter(|&id| self.points[id].multiplicity() >= min_mult)
            .collect()
    }

    /// Ids of the points of multiplicity at least three lying on `line`, in canonical order.
    pub fn triple_points_on(&self, line: usize) -> Vec<usize> {
        (0..self.points.len())
            .filter(|&id| {
                let p = &self.points[id];
                p.multiplicity() >= 3 && p.contains_line(line)
            })
            .collect()
    }

    /// The point shared by lines `i` and `j`.
    pub fn meeting_point(&self, i: usize, j: usize) -> Option<usize> {
        self.points
            .iter()
            .position(|p| p.contains_line(i) && p.contains_line(j))
    }
}

/// Groups all pairwise intersections by their canonical point.
pub fn build_incidence(arr: &ProjArrangement) -> IncidenceData {
    let lines = arr.lines();
    let mut grouped: BTreeMap<ProjPoint, BTreeSet<usize>> = BTreeMap::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let p = intersect(&lines[i], &lines[j]).expect("arrangement lines are distinct");
            let entry = grouped.entry(p).or_default();
            entry.insert(i);
            entry.insert(j);
        }
    }
    let points = grouped
        .into_iter()
        .map(|(point, incident)| PointRecord {
            point,
            incident: incident.into_iter().collect(),
        })
        .collect();
    IncidenceData {
        arrangement: arr.clone(),
        points,
    }
}

/// Points of multiplicity at least `min_mult`, in canonical order.
pub fn multiple_points(inc: &IncidenceData, min_mult: usize) -> Vec<&PointRecord> {
    inc.points
        .iter()
        .filter(|p| p.multiplicity() >= min_mult)
        .collect()
}

/// Homogenizes every affine line and appends `z = 0` labelled `infinity_label`.
pub fn cone(arr: &AffArrangement, infinity_label: &str) -> Result<ProjArrangement> {
    let mut lines: Vec<ProjLine> = arr.lines().iter().map(projectivize).collect();
    lines.push(ProjLine::from_ints(0, 0, 1, infinity_label)?);
    ProjArrangement::new(lines)
}

/// Affine arrangement obtained by sending line `at` to infinity.
///
/// The remaining lines keep their relative order.
pub fn decone(arr: &ProjArrangement, at: usize) -> Result<AffArrangement> {
    if at >= arr.len() {
        return Err(Error::IndexOutOfRange {
            index: at,
            len: arr.len(),
        });
    }
    if arr.len() < 2 {
        return Err(Error::TooSmall { n: arr.len(), min: 2 });
    }
    let chart = AffineChart::new(&arr.lines()[at]);
    let lines = arr
        .lines()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != at)
        .map(|(_, l)| chart.restrict(l))
        .collect::<Result<Vec<_>>>()?;
    AffArrangement::new(lines)
}

/// Maps an index of `decone(arr, at)` back to the projective index.
pub fn decone_to_projective(at: usize, affine_index: usize) -> usize {
    if affine_index < at {
        affine_index
    } else {
        affine_index + 1
    }
}

/// Maps a projective index other than `at` to its index in `decone(arr, at)`.
pub fn projective_to_decone(at: usize, index: usize) -> usize {
    debug_assert_ne!(at, index);
    if index < at {
        index
    } else {
        index - 1
    }
}

/// Intersection points of an affine arrangement with their incident lines.
///
/// Parallel pairs contribute nothing; the multiplicity of a point is the
/// number of affine lines through it.
pub fn affine_points(arr: &AffArrangement) -> Vec<(AffPoint, Vec<usize>)> {
    let lines = arr.lines();
    let mut grouped: BTreeMap<AffPoint, BTreeSet<usize>> = BTreeMap::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if let Some(p) = affine_intersect(&lines[i], &lines[j]).expect("distinct lines") {
                let entry = grouped.entry(p).or_default();
                entry.insert(i);
                entry.insert(j);
            }
        }
    }
    grouped
        .into_iter()
        .map(|(p, s)| (p, s.into_iter().collect()))
        .collect()
}

fn validate_partition(n: usize, part1: &[usize], part2: &[usize]) -> Result<()> {
    if part1.is_empty() || part2.is_empty() {
        return Err(Error::BadPartition("both parts must be nonempty".into()));
    }
    let mut seen = vec![false; n];
    for &i in part1.iter().chain(part2) {
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, len: n });
        }
        if seen[i] {
            return Err(Error::BadPartition(format!("index {i} appears twice")));
        }
        seen[i] = true;
    }
    if let Some(i) = seen.iter().position(|s| !s) {
        return Err(Error::BadPartition(format!("index {i} is in neither part")));
    }
    Ok(())
}

/// Why a cross pair of lines fails to meet transversally in a double point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrossPairDefect {
    Parallel {
        first: usize,
        second: usize,
    },
    HighMultiplicity {
        first: usize,
        second: usize,
        point: AffPoint,
        multiplicity: usize,
    },
}

fn cross_pair_defects(
    arr: &AffArrangement,
    part1: &[usize],
    part2: &[usize],
) -> Vec<CrossPairDefect> {
    let lines = arr.lines();
    let mut defects = Vec::new();
    for &i in part1 {
        for &j in part2 {
            match affine_intersect(&lines[i], &lines[j]).expect("distinct lines") {
                None => defects.push(CrossPairDefect::Parallel { first: i, second: j }),
                Some(p) => {
                    let multiplicity = lines.iter().filter(|l| l.contains(&p)).count();
                    if multiplicity != 2 {
                        defects.push(CrossPairDefect::HighMultiplicity {
                            first: i,
                            second: j,
                            point: p,
                            multiplicity,
                        });
                    }
                }
            }
        }
    }
    defects
}

/// True when the two parts meet in exactly `|part1|·|part2|` affine double points.
pub fn is_general_position_partition(
    arr: &AffArrangement,
    part1: &[usize],
    part2: &[usize],
) -> Result<bool> {
    validate_partition(arr.len(), part1, part2)?;
    if !cross_pair_defects(arr, part1, part2).is_empty() {
        return Ok(false);
    }
    let lines = arr.lines();
    let mut points = HashSet::new();
    for &i in part1 {
        for &j in part2 {
            points.insert(affine_intersect(&lines[i], &lines[j])?);
        }
    }
    Ok(points.len() == part1.len() * part2.len())
}

/// Outcome of checking the transversality hypothesis for two affine arrangements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransversalityReport {
    /// The union, with the lines of the first arrangement first.
    pub union: AffArrangement,
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    pub defects: Vec<CrossPairDefect>,
}

impl TransversalityReport {
    pub fn holds(&self) -> bool {
        self.defects.is_empty()
    }
}

/// Checks whether `a1` and `a2` meet in `|a1|·|a2|` distinct double points.
pub fn check_oka_sakamoto_hypothesis(
    a1: &AffArrangement,
    a2: &AffArrangement,
) -> Result<TransversalityReport> {
    for l in a1.lines() {
        if a2.lines().iter().any(|m| m.same_line(l)) {
            return Err(Error::SharedLine(l.label().to_string()));
        }
    }
    let union = AffArrangement::new(a1.lines().iter().chain(a2.lines()).cloned().collect())?;
    let first: Vec<usize> = (0..a1.len()).collect();
    let second: Vec<usize> = (a1.len()..union.len()).collect();
    let defects = cross_pair_defects(&union, &first, &second);
    Ok(TransversalityReport {
        union,
        first,
        second,
        defects,
    })
}

/// Projective points of `inc` that are not on line `at`.
pub fn points_off_line(inc: &IncidenceData, at: usize) -> usize {
    let l = &inc.arrangement().lines()[at];
    inc.points()
        .iter()
        .filter(|p| !point_on_line(&p.point, l))
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn proj(spec: &[(i64, i64, i64)]) -> ProjArrangement {
        let lines = spec
            .iter()
            .enumerate()
            .map(|(i, &(a, b, c))| ProjLine::from_ints(a, b, c, format!("H{}", i + 1)).unwrap())
            .collect();
        ProjArrangement::new(lines).unwrap()
    }

    fn aff(spec: &[(i64, i64, i64)]) -> AffArrangement {
        let lines = spec
            .iter()
            .enumerate()
            .map(|(i, &(a, b, c))| AffLine::from_ints(a, b, c, format!("A{}", i + 1)).unwrap())
            .collect();
        AffArrangement::new(lines).unwrap()
    }

    const BRAID: [(i64, i64, i64); 6] = [
        (1, 0, 0),
        (0, 1, 0),
        (0, 0, 1),
        (0, 1, -1),
        (1, 0, -1),
        (1, -1, 0),
    ];

    #[test]
    fn braid_incidence() {
        let inc = build_incidence(&proj(&BRAID));
        let triples: Vec<Vec<usize>> = multiple_points(&inc, 3)
            .iter()
            .map(|p| p.incident.clone())
            .collect();
        let mut sorted = triples.clone();
        sorted.sort();
        assert_eq!(
            sorted,
            vec![vec![0, 1, 5], vec![0, 2, 4], vec![1, 2, 3], vec![3, 4, 5]]
        );
        assert_eq!(multiple_points(&inc, 2).len(), 7);
        assert_eq!(
            inc.points().iter().filter(|p| p.multiplicity() == 2).count(),
            3
        );
    }

    #[test]
    fn generic_and_pencil() {
        let inc = build_incidence(&proj(&[(1, 0, 0), (0, 1, 0), (1, 1, 1)]));
        assert_eq!(inc.points().len(), 3);
        assert!(multiple_points(&inc, 3).is_empty());

        let inc = build_incidence(&proj(&[(1, 0, 0), (0, 1, 0), (1, -1, 0)]));
        assert_eq!(inc.points().len(), 1);
        assert_eq!(inc.points()[0].point, ProjPoint::from_ints(0, 0, 1).unwrap());
        assert_eq!(inc.points()[0].multiplicity(), 3);
    }

    #[test]
    fn arrangement_rejects_duplicates() {
        let l1 = ProjLine::from_ints(2, 0, 0, "H1").unwrap();
        let l2 = ProjLine::from_ints(1, 0, 0, "H2").unwrap();
        assert_eq!(
            ProjArrangement::new(vec![l1.clone(), l2]),
            Err(Error::DuplicateLine {
                first: "H1".into(),
                second: "H2".into()
            })
        );
        let l3 = ProjLine::from_ints(0, 1, 0, "H1").unwrap();
        assert_eq!(
            ProjArrangement::new(vec![l1, l3]),
            Err(Error::DuplicateLabel("H1".into()))
        );
        assert_eq!(ProjArrangement::new(vec![]), Err(Error::EmptyArrangement));
    }

    #[test]
    fn cone_examples() {
        let c = cone(&aff(&[(1, 0, 0), (0, 1, 0)]), "@inf").unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c.label(2), "@inf");
        assert_eq!(build_incidence(&c).points().len(), 3);

        let c = cone(&aff(&[(1, 0, 0), (1, 0, -1)]), "@inf").unwrap();
        let inc = build_incidence(&c);
        let at_inf = inc
            .points()
            .iter()
            .find(|p| p.point == ProjPoint::from_ints(0, 1, 0).unwrap())
            .unwrap();
        assert_eq!(at_inf.multiplicity(), 3);
    }

    #[test]
    fn decone_examples() {
        let tri = proj(&[(1, 0, 0), (0, 1, 0), (0, 0, 1)]);
        let d = decone(&tri, 2).unwrap();
        assert_eq!(d, aff(&[(1, 0, 0), (0, 1, 0)]).relabel_like(&tri));
        assert_eq!(affine_points(&d).len(), 1);

        let braid = proj(&BRAID);
        let d = decone(&braid, 5).unwrap();
        assert_eq!(d.len(), 5);
        // H6 carries {H1,H2,H6}, {H4,H5,H6} and the double point {H3,H6}.
        assert_eq!(affine_points(&d).len(), 4);
        assert_eq!(points_off_line(&build_incidence(&braid), 5), 4);

        assert!(matches!(
            decone(&braid, 6),
            Err(Error::IndexOutOfRange { index: 6, len: 6 })
        ));
    }

    #[test]
    fn decone_then_cone_preserves_multiplicities() {
        let braid = proj(&BRAID);
        let mults = |a: &ProjArrangement| {
            let mut m: Vec<usize> = build_incidence(a)
                .points()
                .iter()
                .map(PointRecord::multiplicity)
                .collect();
            m.sort();
            m
        };
        for at in 0..braid.len() {
            let back = cone(&decone(&braid, at).unwrap(), "@inf").unwrap();
            assert_eq!(mults(&back), mults(&braid));
        }
    }

    #[test]
    fn general_position_examples() {
        let pencil = aff(&[(1, 0, 0), (0, 1, 0), (1, -1, 0)]);
        assert!(!is_general_position_partition(&pencil, &[0], &[1, 2]).unwrap());
        let parallels = aff(&[(1, 0, 0), (1, 0, -1)]);
        assert!(!is_general_position_partition(&parallels, &[0], &[1]).unwrap());
        let cross = aff(&[(1, 0, 0), (0, 1, 0)]);
        assert!(is_general_position_partition(&cross, &[0], &[1]).unwrap());
        assert!(is_general_position_partition(&cross, &[1], &[0]).unwrap());

        assert!(matches!(
            is_general_position_partition(&pencil, &[0], &[1]),
            Err(Error::BadPartition(_))
        ));
        assert!(matches!(
            is_general_position_partition(&pencil, &[0, 1], &[1, 2]),
            Err(Error::BadPartition(_))
        ));
        assert!(matches!(
            is_general_position_partition(&pencil, &[], &[0, 1, 2]),
            Err(Error::BadPartition(_))
        ));
    }

    #[test]
    fn oka_sakamoto_examples() {
        let x = AffLine::from_ints(1, 0, 0, "x").unwrap();
        let y = AffLine::from_ints(0, 1, 0, "y").unwrap();
        let x1 = AffLine::from_ints(1, 0, -1, "x1").unwrap();
        let d = AffLine::from_ints(1, -1, 0, "d").unwrap();
        let one = |l: &AffLine| AffArrangement::new(vec![l.clone()]).unwrap();

        assert!(check_oka_sakamoto_hypothesis(&one(&x), &one(&y)).unwrap().holds());

        let r = check_oka_sakamoto_hypothesis(&one(&x), &one(&x1)).unwrap();
        assert_eq!(r.defects, vec![CrossPairDefect::Parallel { first: 0, second: 1 }]);

        let a1 = AffArrangement::new(vec![x.clone(), y]).unwrap();
        let r = check_oka_sakamoto_hypothesis(&a1, &one(&d)).unwrap();
        assert_eq!(r.defects.len(), 2);
        for defect in &r.defects {
            match defect {
                CrossPairDefect::HighMultiplicity {
                    point,
                    multiplicity,
                    ..
                } => {
                    assert_eq!(*multiplicity, 3);
                    assert_eq!(point.to_string(), "(0, 0)");
                }
                other => panic!("unexpected defect {other:?}"),
            }
        }

        let shared = AffLine::from_ints(2, 0, 0, "x2").unwrap();
        assert_eq!(
            check_oka_sakamoto_hypothesis(&one(&x), &one(&shared)),
            Err(Error::SharedLine("x".into()))
        );
    }

    impl AffArrangement {
        fn relabel_like(self, proj: &ProjArrangement) -> AffArrangement {
            let lines = self
                .lines
                .iter()
                .zip(proj.lines())
                .map(|(l, p)| {
                    let [a, b, c] = l.coeffs().clone().map(|v| i64::try_from(v).unwrap());
                    AffLine::from_ints(a, b, c, p.label()).unwrap()
                })
                .collect();
            AffArrangement::new(lines).unwrap()
        }
    }
}
