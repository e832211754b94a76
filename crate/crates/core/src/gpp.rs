//! Deciding whether some decone of a projective arrangement admits a general
//! position partition.
//!
//! Fix the line `L` sent to infinity. Two other lines in different parts must
//! meet in an affine double point. If they met on `L` the projective point
//! would contain `L` as well and have multiplicity at least three, so the
//! requirement is simply that no cross pair shares a point of multiplicity
//! at least three in the projective arrangement. The valid partitions are
//! therefore the nontrivial unions of connected components of the
//! [`SharingGraph`] on the lines other than `L`.

use crate::error::{Error, Result};
use crate::fan::{
    bridge_edges, build_fan_graph, is_connected, lemma_multipt_witness, norepeats_witness, Dsu,
    FanEdge, NorepeatsWitness, OrderingPolicy,
};
use crate::incidence::{decone, is_general_position_partition, projective_to_decone, IncidenceData};

/// Default line bound for [`gpp_oracle`].
pub const DEFAULT_ORACLE_BOUND: usize = 12;

/// A decone line together with a general position partition of the rest.
///
/// Indices refer to lines of the projective arrangement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GppWitness {
    pub infinity_line: usize,
    pub part1: Vec<usize>,
    pub part2: Vec<usize>,
}

impl GppWitness {
    /// Re-checks the partition directly on the affine decone.
    pub fn verify(&self, inc: &IncidenceData) -> Result<bool> {
        let at = self.infinity_line;
        let affine = decone(inc.arrangement(), at)?;
        let map = |part: &[usize]| -> Result<Vec<usize>> {
            part.iter()
                .map(|&i| {
                    if i == at {
                        Err(Error::BadPartition(
                            "the line at infinity cannot be in a part".into(),
                        ))
                    } else {
                        Ok(projective_to_decone(at, i))
                    }
                })
                .collect()
        };
        is_general_position_partition(&affine, &map(&self.part1)?, &map(&self.part2)?)
    }
}

/// Lines other than `exclude`, adjacent when they share a point of
/// multiplicity at least three in the full arrangement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharingGraph {
    pub exclude: usize,
    pub nodes: Vec<usize>,
    /// Sorted pairs `(i, j)` with `i < j`.
    pub adjacency: Vec<(usize, usize)>,
}

impl SharingGraph {
    /// Connected components as sorted line lists, ordered by smallest line.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let pos = |line: usize| self.nodes.binary_search(&line).expect("node");
        let mut dsu = Dsu::new(self.nodes.len());
        for &(a, b) in &self.adjacency {
            dsu.union(pos(a), pos(b));
        }
        let labels = dsu.labels();
        let count = labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut comps = vec![Vec::new(); count];
        for (&node, &label) in self.nodes.iter().zip(&labels) {
            comps[label].push(node);
        }
        comps
    }
}

pub fn sharing_graph(inc: &IncidenceData, exclude: usize) -> Result<SharingGraph> {
    let n = inc.line_count();
    if exclude >= n {
        return Err(Error::IndexOutOfRange { index: exclude, len: n });
    }
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    let mut adjacency = Vec::new();
    for p in inc.points().iter().filter(|p| p.multiplicity() >= 3) {
        for (k, &i) in p.incident.iter().enumerate() {
            for &j in &p.incident[k + 1..] {
                if i != exclude && j != exclude {
                    adjacency.push((i, j));
                }
            }
        }
    }
    adjacency.sort_unstable();
    adjacency.dedup();
    Ok(SharingGraph {
        exclude,
        nodes: (0..n).filter(|&i| i != exclude).collect(),
        adjacency,
    })
}

/// The witness obtained by deconing at `line`, if the sharing graph there is disconnected.
///
/// The first part is the component containing the smallest remaining line.
pub fn gpp_witness_at(inc: &IncidenceData, line: usize) -> Result<Option<GppWitness>> {
    let comps = sharing_graph(inc, line)?.components();
    if comps.len() < 2 {
        return Ok(None);
    }
    let part1 = comps[0].clone();
    let mut part2: Vec<usize> = comps[1..].concat();
    part2.sort_unstable();
    Ok(Some(GppWitness {
        infinity_line: line,
        part1,
        part2,
    }))
}

/// First witness over decone lines in index order.
pub fn has_gpp_decone(inc: &IncidenceData) -> Result<Option<GppWitness>> {
    let n = inc.line_count();
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    for line in 0..n {
        if let Some(w) = gpp_witness_at(inc, line)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Exhaustive search over every decone line and every bipartition.
pub fn gpp_oracle(inc: &IncidenceData) -> Result<Option<GppWitness>> {
    gpp_oracle_bounded(inc, DEFAULT_ORACLE_BOUND)
}

pub fn gpp_oracle_bounded(inc: &IncidenceData, max_lines: usize) -> Result<Option<GppWitness>> {
    let n = inc.line_count();
    if n > max_lines {
        return Err(Error::TooLarge { n, max: max_lines });
    }
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    let m = n - 1;
    for at in 0..n {
        let affine = decone(inc.arrangement(), at)?;
        // bit 0 is pinned to part1 so each unordered bipartition is tried once
        for mask in 0..(1u64 << (m - 1)) {
            let in_part1 = |i: usize| i == 0 || mask & (1 << (i - 1)) == 0;
            let part1: Vec<usize> = (0..m).filter(|&i| in_part1(i)).collect();
            let part2: Vec<usize> = (0..m).filter(|&i| !in_part1(i)).collect();
            if part2.is_empty() {
                continue;
            }
            if is_general_position_partition(&affine, &part1, &part2)? {
                let lift = |p: Vec<usize>| {
                    p.into_iter()
                        .map(|i| crate::incidence::decone_to_projective(at, i))
                        .collect()
                };
                return Ok(Some(GppWitness {
                    infinity_line: at,
                    part1: lift(part1),
                    part2: lift(part2),
                }));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisconnectedFiring {
    /// Point ids of the component used.
    pub component: Vec<usize>,
    pub witness: GppWitness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiptFiring {
    /// Line carrying only double points.
    pub line: usize,
    pub witness: GppWitness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleFiring {
    /// Edge lying on no simple circuit.
    pub edge: FanEdge,
    pub witness: GppWitness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NorepeatsFiring {
    pub separator: NorepeatsWitness,
    pub witness: GppWitness,
}

/// Which of the Fan-graph criteria apply, evaluated on the canonical Fan graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub fan_connected: bool,
    /// Bridges of the canonical Fan graph.
    pub bridges: Vec<FanEdge>,
    /// Lines containing no point of multiplicity at least three.
    pub lines_without_vertices: Vec<usize>,
    pub disconnected: Option<DisconnectedFiring>,
    pub multipt: Option<MultiptFiring>,
    pub simple: Option<SimpleFiring>,
    pub norepeats: Option<NorepeatsFiring>,
}

impl LemmaReport {
    /// Connected, bridgeless, and every line carries a vertex.
    pub fn corollary_conditions_hold(&self) -> bool {
        self.fan_connected && self.bridges.is_empty() && self.lines_without_vertices.is_empty()
    }

    pub fn any_fired(&self) -> bool {
        self.disconnected.is_some()
            || self.multipt.is_some()
            || self.simple.is_some()
            || self.norepeats.is_some()
    }

    pub fn witnesses(&self) -> Vec<&GppWitness> {
        let mut out = Vec::new();
        if let Some(f) = &self.disconnected {
            out.push(&f.witness);
        }
        if let Some(f) = &self.multipt {
            out.push(&f.witness);
        }
        if let Some(f) = &self.simple {
            out.push(&f.witness);
        }
        if let Some(f) = &self.norepeats {
            out.push(&f.witness);
        }
        out
    }
}

/// Lines other than `exclude` through any of `points`, and the remaining lines.
fn split_by_points(inc: &IncidenceData, points: &[usize], exclude: usize) -> (Vec<usize>, Vec<usize>) {
    let touches = |line: usize| points.iter().any(|&p| inc.point(p).contains_line(line));
    (0..inc.line_count())
        .filter(|&l| l != exclude)
        .partition(|&l| touches(l))
}

pub fn lemma_pipeline_report(inc: &IncidenceData) -> LemmaReport {
    let n = inc.line_count();
    let fan = build_fan_graph(inc, &OrderingPolicy::Canonical).expect("canonical ordering");
    let fan_connected = is_connected(&fan);
    let bridges: Vec<FanEdge> = bridge_edges(&fan)
        .into_iter()
        .map(|k| fan.edges()[k])
        .collect();
    let lines_without_vertices: Vec<usize> = (0..n)
        .filter(|&i| inc.triple_points_on(i).is_empty())
        .collect();

    let disconnected = (!fan_connected).then(|| {
        let component = fan.component_of(fan.vertices()[0], |_, _| false);
        let (lines_c, rest) = split_by_points(inc, &component, usize::MAX);
        let at = lines_c[0];
        DisconnectedFiring {
            witness: GppWitness {
                infinity_line: at,
                part1: lines_c.into_iter().filter(|&l| l != at).collect(),
                part2: rest,
            },
            component,
        }
    });

    let multipt = lemma_multipt_witness(inc).map(|h| {
        let at = if h == 0 { 1 } else { 0 };
        MultiptFiring {
            line: h,
            witness: GppWitness {
                infinity_line: at,
                part1: vec![h],
                part2: (0..n).filter(|&l| l != h && l != at).collect(),
            },
        }
    });

    let simple = if fan_connected && lines_without_vertices.is_empty() {
        bridges.first().map(|&edge| {
            let k = fan
                .edges()
                .iter()
                .position(|e| *e == edge)
                .expect("bridge is an edge");
            let side_v = fan.component_of(edge.ends.0, |j, _| j == k);
            let (part1, part2) = split_by_points(inc, &side_v, edge.line);
            SimpleFiring {
                edge,
                witness: GppWitness {
                    infinity_line: edge.line,
                    part1,
                    part2,
                },
            }
        })
    } else {
        None
    };

    let norepeats = norepeats_witness(inc).map(|sep| {
        let component = fan.component_of(sep.v, |_, e| e.line == sep.line);
        let (part1, part2) = split_by_points(inc, &component, sep.line);
        NorepeatsFiring {
            separator: sep,
            witness: GppWitness {
                infinity_line: sep.line,
                part1,
                part2,
            },
        }
    });

    LemmaReport {
        fan_connected,
        bridges,
        lines_without_vertices,
        disconnected,
        multipt,
        simple,
        norepeats,
    }
}
