//! Brute-force oracles, independent of the library's decision paths.
#![allow(dead_code)]

use linesplit::fan::FanEdge;
use linesplit::linalg::RatVector;
use linesplit::resonance::{is_span_disjoint, LocalComponent};
use linesplit::{enumerate_fan_graphs, FanGraph, IncidenceData, Rational};
use num_traits::{One, Zero};

/// Every simple path from `from` to `to` in `g` avoiding edge `skip`, as edge-id lists.
pub fn simple_paths(g: &FanGraph, from: usize, to: usize, skip: usize) -> Vec<Vec<usize>> {
    fn go(
        edges: &[FanEdge],
        at: usize,
        to: usize,
        skip: usize,
        visited: &mut Vec<usize>,
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if at == to {
            out.push(path.clone());
            return;
        }
        for (k, e) in edges.iter().enumerate() {
            if k == skip || path.contains(&k) {
                continue;
            }
            let next = if e.ends.0 == at {
                e.ends.1
            } else if e.ends.1 == at {
                e.ends.0
            } else {
                continue;
            };
            if visited.contains(&next) {
                continue;
            }
            visited.push(next);
            path.push(k);
            go(edges, next, to, skip, visited, path, out);
            path.pop();
            visited.pop();
        }
    }
    let mut out = Vec::new();
    go(g.edges(), from, to, skip, &mut vec![from], &mut Vec::new(), &mut out);
    out
}

/// Edge ids lying on no simple circuit.
pub fn bridges_by_circuit_search(g: &FanGraph) -> Vec<usize> {
    (0..g.edges().len())
        .filter(|&k| {
            let e = g.edges()[k];
            simple_paths(g, e.ends.1, e.ends.0, k).is_empty()
        })
        .collect()
}

/// The literal norepeats hypothesis: some pair `v, w` on a line `L` such
/// that for every Fan graph containing the edge `vw` on `L`, every simple
/// circuit through that edge uses another edge of `L`.
///
/// Returns `None` when there are more than `max_graphs` Fan graphs.
pub fn norepeats_by_enumeration(inc: &IncidenceData, max_graphs: usize) -> Option<bool> {
    let all = enumerate_fan_graphs(inc, max_graphs);
    if all.truncated {
        return None;
    }
    for line in 0..inc.line_count() {
        let on_line = inc.triple_points_on(line);
        for (a, &v) in on_line.iter().enumerate() {
            for &w in &on_line[a + 1..] {
                let mut holds = true;
                let mut seen_edge = false;
                for g in &all.graphs {
                    let Some(k) = g.edges().iter().position(|e| {
                        e.line == line && (e.ends == (v, w) || e.ends == (w, v))
                    }) else {
                        continue;
                    };
                    seen_edge = true;
                    let circuits = simple_paths(g, w, v, k);
                    if circuits
                        .iter()
                        .any(|p| p.iter().all(|&j| g.edges()[j].line != line))
                    {
                        holds = false;
                        break;
                    }
                }
                if seen_edge && holds {
                    return Some(true);
                }
            }
        }
    }
    Some(false)
}

/// Naive search over all bipartitions of the components.
pub fn span_bipartition_naive(comps: &[LocalComponent]) -> bool {
    let k = comps.len();
    (1u64..(1 << (k - 1))).any(|mask| {
        let (a, b): (Vec<usize>, Vec<usize>) = (0..k).partition(|&i| i == 0 || mask & (1 << (i - 1)) == 0);
        !b.is_empty() && is_span_disjoint(comps, &a, &b).unwrap()
    })
}

/// Rank by plain Gaussian elimination, written independently of the library.
pub fn rank(rows: &[RatVector]) -> usize {
    let mut m: Vec<RatVector> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..m.len() {
            if !m[i][c].is_zero() {
                let f = m[i][c].clone() / m[r][c].clone();
                #[allow(clippy::needless_range_loop)]
                for j in c..cols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

/// Dimension of `span(a) ∩ span(b)` via the Zassenhaus construction.
pub fn intersection_dim_zassenhaus(a: &[RatVector], b: &[RatVector]) -> usize {
    let n = a.first().or(b.first()).map_or(0, Vec::len);
    let mut rows: Vec<RatVector> = Vec::new();
    for v in a {
        rows.push(v.iter().chain(v).cloned().collect());
    }
    for v in b {
        rows.push(v.iter().cloned().chain(std::iter::repeat_n(Rational::zero(), n)).collect());
    }
    // rank of the left block plus rank of the kernel part equals total rank
    let left: Vec<RatVector> = rows.iter().map(|r| r[..n].to_vec()).collect();
    rank(&rows) - rank(&left)
}

pub fn unit(n: usize, i: usize) -> RatVector {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}
