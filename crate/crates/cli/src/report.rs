//! Structured analysis reports with text and JSON renderings.
//!
//! Coordinates and vector entries are exact strings; counts are integers.

use std::fmt::Write as _;

use linesplit::fan::FanEdge;
use linesplit::gpp::LemmaReport;
use linesplit::{
    build_fan_graph, build_incidence, cone, fan_graph_count, lemma_pipeline_report,
    local_components, multiple_points, product_obstruction, GppWitness, IncidenceData,
    OrderingPolicy, ProjArrangement, ResonanceEvidence, Verdict,
};
use serde::Serialize;

use crate::error::Result;
use crate::format::ParsedArrangement;

/// Label of the line added when an affine input is coned.
pub const INFINITY_LABEL: &str = "@inf";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineEntry {
    pub label: String,
    pub coeffs: [String; 3],
    pub equation: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArrangementEcho {
    /// Kind of the input file.
    pub input_kind: String,
    /// Set when an affine input was coned.
    pub infinity_label: Option<String>,
    /// The projective lines that were analyzed.
    pub lines: Vec<LineEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointEntry {
    pub coords: [String; 3],
    pub multiplicity: usize,
    pub incident: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeEntry {
    pub line: String,
    pub from: String,
    pub to: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FanSummary {
    pub vertices: usize,
    pub edges: usize,
    pub connected: bool,
    pub bridges: Vec<EdgeEntry>,
    /// Number of distinct Fan graphs, as a decimal string.
    pub graph_count: String,
    pub edge_list: Vec<EdgeEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessEntry {
    pub infinity_line: String,
    pub part1: Vec<String>,
    pub part2: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaEntry {
    pub detail: String,
    pub witness: WitnessEntry,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaSummary {
    pub disconnected: Option<LemmaEntry>,
    pub multi_pt: Option<LemmaEntry>,
    pub simple: Option<LemmaEntry>,
    pub norepeats: Option<LemmaEntry>,
    pub corollary_conditions_hold: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GppSummary {
    pub exists: bool,
    pub witness: Option<WitnessEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentEntry {
    pub point: String,
    pub incident: Vec<String>,
    pub dimension: usize,
    pub basis: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BipartitionSummary {
    /// `found`, `none` or `too_few_components`.
    pub status: String,
    pub first: Vec<String>,
    pub second: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub arrangement: ArrangementEcho,
    pub points: Vec<PointEntry>,
    pub fan_graph: FanSummary,
    pub lemmas: LemmaSummary,
    pub gpp: GppSummary,
    pub local_components: Vec<ComponentEntry>,
    pub bipartition: BipartitionSummary,
    pub verdict: String,
}

/// The projective arrangement to analyze, coning affine input.
pub fn projective_of(parsed: &ParsedArrangement) -> Result<(ProjArrangement, Option<String>)> {
    Ok(match parsed {
        ParsedArrangement::Projective(p) => (p.clone(), None),
        ParsedArrangement::Affine(a) => (cone(a, INFINITY_LABEL)?, Some(INFINITY_LABEL.to_string())),
    })
}

fn labels(arr: &ProjArrangement, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| arr.label(i).to_string()).collect()
}

pub fn witness_entry(arr: &ProjArrangement, w: &GppWitness) -> WitnessEntry {
    WitnessEntry {
        infinity_line: arr.label(w.infinity_line).to_string(),
        part1: labels(arr, &w.part1),
        part2: labels(arr, &w.part2),
    }
}

fn edge_entry(inc: &IncidenceData, e: &FanEdge) -> EdgeEntry {
    EdgeEntry {
        line: inc.arrangement().label(e.line).to_string(),
        from: inc.point(e.ends.0).point.to_string(),
        to: inc.point(e.ends.1).point.to_string(),
    }
}

pub fn lemma_summary(inc: &IncidenceData, r: &LemmaReport) -> LemmaSummary {
    let arr = inc.arrangement();
    let pt = |id: usize| inc.point(id).point.to_string();
    LemmaSummary {
        disconnected: r.disconnected.as_ref().map(|f| LemmaEntry {
            detail: format!(
                "Fan graph is disconnected; component {{{}}} is separated",
                f.component.iter().map(|&p| pt(p)).collect::<Vec<_>>().join(", ")
            ),
            witness: witness_entry(arr, &f.witness),
        }),
        multi_pt: r.multipt.as_ref().map(|f| LemmaEntry {
            detail: format!("line {} meets the others only in double points", arr.label(f.line)),
            witness: witness_entry(arr, &f.witness),
        }),
        simple: r.simple.as_ref().map(|f| LemmaEntry {
            detail: format!(
                "edge {} -- {} on {} lies on no simple circuit",
                pt(f.edge.ends.0),
                pt(f.edge.ends.1),
                arr.label(f.edge.line)
            ),
            witness: witness_entry(arr, &f.witness),
        }),
        norepeats: r.norepeats.as_ref().map(|f| LemmaEntry {
            detail: format!(
                "removing line {} separates {} from {}",
                arr.label(f.separator.line),
                pt(f.separator.v),
                pt(f.separator.w)
            ),
            witness: witness_entry(arr, &f.witness),
        }),
        corollary_conditions_hold: r.corollary_conditions_hold(),
    }
}

pub fn fan_summary(inc: &IncidenceData) -> FanSummary {
    let g = build_fan_graph(inc, &OrderingPolicy::Canonical).expect("canonical ordering");
    FanSummary {
        vertices: g.vertices().len(),
        edges: g.edges().len(),
        connected: linesplit::is_connected(&g),
        bridges: linesplit::bridge_edges(&g)
            .into_iter()
            .map(|k| edge_entry(inc, &g.edges()[k]))
            .collect(),
        graph_count: fan_graph_count(inc).to_string(),
        edge_list: g.edges().iter().map(|e| edge_entry(inc, e)).collect(),
    }
}

pub fn component_entries(inc: &IncidenceData) -> Vec<ComponentEntry> {
    let arr = inc.arrangement();
    local_components(inc)
        .iter()
        .map(|c| ComponentEntry {
            point: c.point.to_string(),
            incident: labels(arr, &c.incident),
            dimension: c.basis.dim(),
            basis: c
                .basis
                .rows()
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect(),
        })
        .collect()
}

pub fn bipartition_summary(inc: &IncidenceData) -> Result<BipartitionSummary> {
    let comps = local_components(inc);
    let names = |idx: &[usize]| idx.iter().map(|&i| comps[i].point.to_string()).collect();
    Ok(match linesplit::resonance::resonance_evidence(&comps)? {
        ResonanceEvidence::TooFewComponents(_) => BipartitionSummary {
            status: "too_few_components".into(),
            first: vec![],
            second: vec![],
        },
        ResonanceEvidence::NoBipartition => BipartitionSummary {
            status: "none".into(),
            first: vec![],
            second: vec![],
        },
        ResonanceEvidence::Bipartition(b) => BipartitionSummary {
            status: "found".into(),
            first: names(&b.first),
            second: names(&b.second),
        },
    })
}

pub fn verdict_name(v: &Verdict) -> &'static str {
    match v {
        Verdict::ProductPossible(_) => "ProductPossible",
        Verdict::NotAProduct(_) => "NotAProduct",
    }
}

/// Runs every analysis and assembles the report.
pub fn build_report(parsed: &ParsedArrangement, min_mult: usize) -> Result<(Report, Verdict)> {
    let (arr, infinity_label) = projective_of(parsed)?;
    let inc = build_incidence(&arr);
    let verdict = product_obstruction(&inc)?;
    let gpp = match &verdict {
        Verdict::ProductPossible(w) => GppSummary {
            exists: true,
            witness: Some(witness_entry(&arr, w)),
        },
        Verdict::NotAProduct(_) => GppSummary {
            exists: false,
            witness: None,
        },
    };
    let report = Report {
        arrangement: ArrangementEcho {
            input_kind: match parsed {
                ParsedArrangement::Projective(_) => "projective".into(),
                ParsedArrangement::Affine(_) => "affine".into(),
            },
            infinity_label,
            lines: arr
                .lines()
                .iter()
                .map(|l| LineEntry {
                    label: l.label().to_string(),
                    coeffs: l.coeffs().clone().map(|c| c.to_string()),
                    equation: l.to_string(),
                })
                .collect(),
        },
        points: multiple_points(&inc, min_mult)
            .into_iter()
            .map(|p| PointEntry {
                coords: p.point.coords().clone().map(|c| c.to_string()),
                multiplicity: p.multiplicity(),
                incident: labels(&arr, &p.incident),
            })
            .collect(),
        fan_graph: fan_summary(&inc),
        lemmas: lemma_summary(&inc, &lemma_pipeline_report(&inc)),
        gpp,
        local_components: component_entries(&inc),
        bipartition: bipartition_summary(&inc)?,
        verdict: verdict_name(&verdict).to_string(),
    };
    Ok((report, verdict))
}

pub fn to_json(report: &Report) -> String {
    serde_json::to_string_pretty(report).expect("report serializes") + "\n"
}

fn fmt_witness(w: &WitnessEntry) -> String {
    format!(
        "decone at {}: {{{}}} | {{{}}}",
        w.infinity_line,
        w.part1.join(", "),
        w.part2.join(", ")
    )
}

pub fn to_text(r: &Report) -> String {
    let mut out = String::new();
    let a = &r.arrangement;
    write!(out, "arrangement: {} lines ({} input", a.lines.len(), a.input_kind).unwrap();
    if let Some(inf) = &a.infinity_label {
        write!(out, ", coned with {inf} = z").unwrap();
    }
    out.push_str(")\n");
    for l in &a.lines {
        writeln!(out, "  {:>6}  {}", l.label, l.equation).unwrap();
    }

    writeln!(out, "\npoints: {}", r.points.len()).unwrap();
    for p in &r.points {
        writeln!(
            out,
            "  [{}:{}:{}]  multiplicity {}  {{{}}}",
            p.coords[0],
            p.coords[1],
            p.coords[2],
            p.multiplicity,
            p.incident.join(", ")
        )
        .unwrap();
    }

    let f = &r.fan_graph;
    writeln!(
        out,
        "\nfan graph: {} vertices, {} edges, {}, {} bridge(s), {} graph(s) in the family",
        f.vertices,
        f.edges,
        if f.connected { "connected" } else { "disconnected" },
        f.bridges.len(),
        f.graph_count
    )
    .unwrap();
    for b in &f.bridges {
        writeln!(out, "  bridge {} -- {} on {}", b.from, b.to, b.line).unwrap();
    }

    out.push_str("\nlemmas:\n");
    let l = &r.lemmas;
    for (name, entry) in [
        ("disconnected", &l.disconnected),
        ("multi-pt", &l.multi_pt),
        ("simple", &l.simple),
        ("norepeats", &l.norepeats),
    ] {
        match entry {
            Some(e) => writeln!(out, "  {name:<12} fires: {}; {}", e.detail, fmt_witness(&e.witness)).unwrap(),
            None => writeln!(out, "  {name:<12} -").unwrap(),
        }
    }
    writeln!(
        out,
        "  corollary conditions (connected, bridgeless, every line has a vertex): {}",
        if l.corollary_conditions_hold { "hold" } else { "fail" }
    )
    .unwrap();

    match &r.gpp.witness {
        Some(w) => writeln!(out, "\ngeneral position partition: {}", fmt_witness(w)).unwrap(),
        None => out.push_str("\ngeneral position partition: none for any decone\n"),
    }

    writeln!(out, "\nlocal components: {}", r.local_components.len()).unwrap();
    for c in &r.local_components {
        let rows: Vec<String> = c.basis.iter().map(|row| format!("({})", row.join(", "))).collect();
        writeln!(
            out,
            "  {}  {{{}}}  dim {}  basis {}",
            c.point,
            c.incident.join(", "),
            c.dimension,
            rows.join(" ")
        )
        .unwrap();
    }
    let b = &r.bipartition;
    match b.status.as_str() {
        "found" => writeln!(
            out,
            "span-disjoint bipartition: {{{}}} | {{{}}}",
            b.first.join(", "),
            b.second.join(", ")
        )
        .unwrap(),
        "none" => out.push_str("span-disjoint bipartition: none\n"),
        _ => out.push_str("span-disjoint bipartition: fewer than two local components\n"),
    }

    writeln!(out, "\nverdict: {}", r.verdict).unwrap();
    out
}
