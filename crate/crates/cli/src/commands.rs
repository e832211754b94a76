//! Subcommand implementations. Each returns the text to print and an exit
//! code so the binary stays a thin dispatcher.

use std::fmt::Write as _;
use std::path::Path;

use linesplit::incidence::TransversalityReport;
use linesplit::{
    build_fan_graph, build_incidence, check_oka_sakamoto_hypothesis, decone, enumerate_fan_graphs,
    has_gpp_decone, local_components, AffArrangement, CrossPairDefect, OrderingPolicy, Verdict,
};

use crate::builtin;
use crate::dot::fan_graph_dot;
use crate::error::{CliError, Result};
use crate::format::{emit_projective, parse, ParsedArrangement};
use crate::report::{
    bipartition_summary, build_report, component_entries, fan_summary, projective_of, to_json,
    to_text, witness_entry,
};
use crate::svg::{render, Window};

pub const EXIT_PRODUCT_POSSIBLE: i32 = 0;
pub const EXIT_NOT_A_PRODUCT: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Prefix selecting a builtin example instead of a file path.
pub const BUILTIN_PREFIX: &str = "builtin:";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, exit_code: 0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

/// Reads and parses `input`, which is a file path or `builtin:NAME`.
pub fn load(input: &str) -> Result<ParsedArrangement> {
    if let Some(name) = input.strip_prefix(BUILTIN_PREFIX) {
        return parse(builtin::example(name)?.text);
    }
    let text = std::fs::read_to_string(input).map_err(|source| CliError::Io {
        path: input.to_string(),
        source,
    })?;
    parse(&text)
}

fn verdict_code(v: &Verdict) -> i32 {
    if v.is_product_possible() {
        EXIT_PRODUCT_POSSIBLE
    } else {
        EXIT_NOT_A_PRODUCT
    }
}

pub fn cmd_analyze(input: &str, format: OutputFormat, min_mult: usize) -> Result<Outcome> {
    if min_mult < 2 {
        return Err(CliError::Usage("--min-mult must be at least 2".into()));
    }
    let (report, verdict) = build_report(&load(input)?, min_mult)?;
    let stdout = match format {
        OutputFormat::Text => to_text(&report),
        OutputFormat::Json => to_json(&report),
    };
    Ok(Outcome {
        stdout,
        exit_code: verdict_code(&verdict),
    })
}

pub fn cmd_gpp(input: &str) -> Result<Outcome> {
    let (arr, _) = projective_of(&load(input)?)?;
    let inc = build_incidence(&arr);
    Ok(match has_gpp_decone(&inc)? {
        Some(w) => {
            let e = witness_entry(&arr, &w);
            Outcome {
                stdout: format!(
                    "general position partition at {}: {{{}}} | {{{}}}\n",
                    e.infinity_line,
                    e.part1.join(", "),
                    e.part2.join(", ")
                ),
                exit_code: EXIT_PRODUCT_POSSIBLE,
            }
        }
        None => Outcome {
            stdout: "no decone has a general position partition\n".into(),
            exit_code: EXIT_NOT_A_PRODUCT,
        },
    })
}

pub fn cmd_resonance(input: &str) -> Result<Outcome> {
    let (arr, _) = projective_of(&load(input)?)?;
    let inc = build_incidence(&arr);
    let mut out = String::new();
    let comps = component_entries(&inc);
    writeln!(out, "local components: {}", comps.len()).unwrap();
    for c in &comps {
        writeln!(out, "{}  {{{}}}  dim {}", c.point, c.incident.join(", "), c.dimension).unwrap();
        for row in &c.basis {
            writeln!(out, "  ({})", row.join(", ")).unwrap();
        }
    }
    let b = bipartition_summary(&inc)?;
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
    debug_assert_eq!(local_components(&inc).len(), comps.len());
    Ok(Outcome::ok(out))
}

pub fn cmd_fan(input: &str, dot: bool, enumerate: Option<usize>) -> Result<Outcome> {
    let (arr, _) = projective_of(&load(input)?)?;
    let inc = build_incidence(&arr);
    let mut out = String::new();
    match enumerate {
        None if dot => {
            let g = build_fan_graph(&inc, &OrderingPolicy::Canonical)?;
            out = fan_graph_dot(&inc, &g, "fan");
        }
        None => {
            let s = fan_summary(&inc);
            writeln!(
                out,
                "fan graph: {} vertices, {} edges, {}",
                s.vertices,
                s.edges,
                if s.connected { "connected" } else { "disconnected" }
            )
            .unwrap();
            writeln!(out, "bridges: {}", s.bridges.len()).unwrap();
            for b in &s.bridges {
                writeln!(out, "  {} -- {} on {}", b.from, b.to, b.line).unwrap();
            }
            writeln!(out, "fan graphs in the family: {}", s.graph_count).unwrap();
            for e in &s.edge_list {
                writeln!(out, "  {} -- {} on {}", e.from, e.to, e.line).unwrap();
            }
        }
        Some(cap) => {
            let all = enumerate_fan_graphs(&inc, cap);
            for (k, g) in all.graphs.iter().enumerate() {
                if dot {
                    out.push_str(&fan_graph_dot(&inc, g, &format!("fan{k}")));
                } else {
                    writeln!(out, "graph {k}:").unwrap();
                    for e in g.edges() {
                        writeln!(
                            out,
                            "  {} -- {} on {}",
                            inc.point(e.ends.0).point,
                            inc.point(e.ends.1).point,
                            arr.label(e.line)
                        )
                        .unwrap();
                    }
                }
            }
            let note = format!(
                "{} graph(s) listed{}",
                all.graphs.len(),
                if all.truncated { ", truncated" } else { "" }
            );
            if dot {
                writeln!(out, "// {note}").unwrap();
            } else {
                writeln!(out, "{note}").unwrap();
            }
        }
    }
    Ok(Outcome::ok(out))
}

fn affine_only(input: &str) -> Result<AffArrangement> {
    match load(input)? {
        ParsedArrangement::Affine(a) => Ok(a),
        ParsedArrangement::Projective(_) => Err(CliError::Usage(format!(
            "{input}: the transversality check takes affine files"
        ))),
    }
}

/// One diagnostic line per defective cross pair.
pub fn oka_diagnostics(report: &TransversalityReport) -> Vec<String> {
    let lines = report.union.lines();
    report
        .defects
        .iter()
        .map(|d| match d {
            CrossPairDefect::Parallel { first, second } => format!(
                "parallel: {} and {}",
                lines[*first].label(),
                lines[*second].label()
            ),
            CrossPairDefect::HighMultiplicity {
                first,
                second,
                point,
                multiplicity,
            } => format!(
                "multiplicity {multiplicity}: {} and {} meet at {point}",
                lines[*first].label(),
                lines[*second].label()
            ),
        })
        .collect()
}

/// Prints `true` or `false` followed by diagnostics; exit code 0 when the
/// hypothesis holds and 1 otherwise.
pub fn cmd_oka(first: &str, second: &str) -> Result<Outcome> {
    let report = check_oka_sakamoto_hypothesis(&affine_only(first)?, &affine_only(second)?)?;
    let mut out = format!("{}\n", report.holds());
    for d in oka_diagnostics(&report) {
        writeln!(out, "{d}").unwrap();
    }
    Ok(Outcome {
        stdout: out,
        exit_code: if report.holds() { 0 } else { 1 },
    })
}

/// Renders to `output` when given, otherwise returns the SVG text.
pub fn cmd_render(
    input: &str,
    output: Option<&Path>,
    window: Window,
    infinity: Option<&str>,
) -> Result<Outcome> {
    let affine = match (load(input)?, infinity) {
        (ParsedArrangement::Affine(a), None) => a,
        (ParsedArrangement::Affine(_), Some(_)) => {
            return Err(CliError::Usage("--infinity applies to projective input only".into()))
        }
        (ParsedArrangement::Projective(_), None) => {
            return Err(CliError::Usage(
                "projective input needs --infinity LABEL to choose the line at infinity".into(),
            ))
        }
        (ParsedArrangement::Projective(p), Some(label)) => {
            let at = p
                .index_of(label)
                .ok_or_else(|| CliError::LabelNotFound(label.to_string()))?;
            decone(&p, at)?
        }
    };
    let svg = render(&affine, &window);
    match output {
        Some(path) => {
            std::fs::write(path, &svg).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(svg)),
    }
}

pub enum ExamplesAction<'a> {
    List,
    Emit(&'a str),
}

pub fn cmd_examples(action: ExamplesAction<'_>) -> Result<Outcome> {
    Ok(Outcome::ok(match action {
        ExamplesAction::List => builtin::list(),
        ExamplesAction::Emit(name) => {
            // re-emit through the parser so output is in canonical form
            match parse(builtin::example(name)?.text)? {
                ParsedArrangement::Projective(p) => emit_projective(&p),
                ParsedArrangement::Affine(a) => crate::format::emit_affine(&a),
            }
        }
    }))
}
