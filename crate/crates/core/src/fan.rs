//! Graphs of Fan type.
//!
//! The vertices are the points of multiplicity at least three. Along each
//! line the points it carries are put in some order and consecutive points
//! are joined by an edge labelled with that line. Only the combinatorial
//! multigraph is kept.

use crate::error::{Error, Result};
use crate::incidence::IncidenceData;

/// Default cap on the number of enumerated Fan graphs.
pub const DEFAULT_MAX_FAN_GRAPHS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FanEdge {
    pub line: usize,
    /// Point ids of the endpoints, in the order they appear along the line.
    pub ends: (usize, usize),
}

/// How the points on each line are ordered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderingPolicy {
    /// Canonical point order (lexicographic on coordinates).
    Canonical,
    /// One permutation of the line's triple points per line, as point ids.
    Explicit(Vec<Vec<usize>>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanGraph {
    vertices: Vec<usize>,
    orderings: Vec<Vec<usize>>,
    edges: Vec<FanEdge>,
}

impl FanGraph {
    /// Point ids of the vertices, ascending.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn ordering(&self, line: usize) -> &[usize] {
        &self.orderings[line]
    }

    pub fn orderings(&self) -> &[Vec<usize>] {
        &self.orderings
    }

    pub fn edges(&self) -> &[FanEdge] {
        &self.edges
    }

    fn position(&self, point: usize) -> usize {
        self.vertices
            .binary_search(&point)
            .expect("edge endpoint is a vertex")
    }

    /// Component index of each vertex, ignoring edges for which `skip` holds.
    ///
    /// Components are numbered in order of their smallest vertex.
    pub fn components_without(&self, skip: impl Fn(usize, &FanEdge) -> bool) -> Vec<usize> {
        let mut dsu = Dsu::new(self.vertices.len());
        for (k, e) in self.edges.iter().enumerate() {
            if !skip(k, e) {
                dsu.union(self.position(e.ends.0), self.position(e.ends.1));
            }
        }
        dsu.labels()
    }

    pub fn components(&self) -> Vec<usize> {
        self.components_without(|_, _| false)
    }

    /// Vertex point ids in the component containing `point`, ignoring `skip` edges.
    pub fn component_of(&self, point: usize, skip: impl Fn(usize, &FanEdge) -> bool) -> Vec<usize> {
        let labels = self.components_without(skip);
        let target = labels[self.position(point)];
        self.vertices
            .iter()
            .zip(&labels)
            .filter(|&(_, &c)| c == target)
            .map(|(&v, _)| v)
            .collect()
    }
}

/// Union-find with path halving.
pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller index as root so labels are stable
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    /// Dense labels numbered by first occurrence.
    pub(crate) fn labels(&mut self) -> Vec<usize> {
        let n = self.parent.len();
        let mut map = vec![usize::MAX; n];
        let mut next = 0;
        (0..n)
            .map(|x| {
                let r = self.find(x);
                if map[r] == usize::MAX {
                    map[r] = next;
                    next += 1;
                }
                map[r]
            })
            .collect()
    }
}

fn edges_from_orderings(orderings: &[Vec<usize>]) -> Vec<FanEdge> {
    orderings
        .iter()
        .enumerate()
        .flat_map(|(line, ord)| {
            ord.windows(2).map(move |w| FanEdge {
                line,
                ends: (w[0], w[1]),
            })
        })
        .collect()
}

/// Builds the Fan graph for the given per-line orderings.
pub fn build_fan_graph(inc: &IncidenceData, policy: &OrderingPolicy) -> Result<FanGraph> {
    let n = inc.line_count();
    let supports: Vec<Vec<usize>> = (0..n).map(|i| inc.triple_points_on(i)).collect();
    let orderings = match policy {
        OrderingPolicy::Canonical => supports,
        OrderingPolicy::Explicit(given) => {
            if given.len() != n {
                return Err(Error::BadOrdering {
                    line: given.len().min(n),
                    reason: format!("expected orderings for {n} lines, got {}", given.len()),
                });
            }
            for (line, (ord, support)) in given.iter().zip(&supports).enumerate() {
                let mut sorted = ord.clone();
                sorted.sort_unstable();
                if &sorted != support {
                    return Err(Error::BadOrdering {
                        line,
                        reason: format!(
                            "{ord:?} is not a permutation of the line's triple points {support:?}"
                        ),
                    });
                }
            }
            given.clone()
        }
    };
    Ok(FanGraph {
        vertices: inc.multiple_point_ids(3),
        edges: edges_from_orderings(&orderings),
        orderings,
    })
}

/// All permutations of `items` that are lexicographically no greater than their reversal.
fn orderings_modulo_reversal(items: &[usize]) -> Vec<Vec<usize>> {
    fn permute(rest: &mut Vec<usize>, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            if prefix.len() < 2 || prefix[0] < prefix[prefix.len() - 1] {
                out.push(prefix.clone());
            }
            return;
        }
        for k in 0..rest.len() {
            let x = rest.remove(k);
            prefix.push(x);
            permute(rest, prefix, out);
            prefix.pop();
            rest.insert(k, x);
        }
    }
    let mut out = Vec::new();
    permute(&mut items.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// `|F(A*)|`, the number of distinct Fan graphs, saturating at `u128::MAX`.
pub fn fan_graph_count(inc: &IncidenceData) -> u128 {
    (0..inc.line_count())
        .map(|i| {
            let k = inc.triple_points_on(i).len() as u128;
            let fact = (2..=k).try_fold(1u128, |acc, x| acc.checked_mul(x));
            match fact {
                Some(f) if k >= 2 => f / 2,
                Some(_) => 1,
                None => u128::MAX,
            }
        })
        .try_fold(1u128, |acc, x| acc.checked_mul(x))
        .unwrap_or(u128::MAX)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanEnumeration {
    pub graphs: Vec<FanGraph>,
    /// Set when more than `max_count` graphs exist.
    pub truncated: bool,
}

/// One Fan graph per choice of line orderings, modulo reversal on each line.
pub fn enumerate_fan_graphs(inc: &IncidenceData, max_count: usize) -> FanEnumeration {
    let max_count = max_count.max(1);
    let n = inc.line_count();
    let choices: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|i| orderings_modulo_reversal(&inc.triple_points_on(i)))
        .collect();
    let vertices = inc.multiple_point_ids(3);
    let mut graphs = Vec::new();
    let mut odometer = vec![0usize; n];
    loop {
        if graphs.len() == max_count {
            let total = fan_graph_count(inc);
            return FanEnumeration {
                graphs,
                truncated: total > max_count as u128,
            };
        }
        let orderings: Vec<Vec<usize>> = odometer
            .iter()
            .zip(&choices)
            .map(|(&k, c)| c[k].clone())
            .collect();
        graphs.push(FanGraph {
            vertices: vertices.clone(),
            edges: edges_from_orderings(&orderings),
            orderings,
        });
        // advance, last line fastest
        let mut line = n;
        loop {
            if line == 0 {
                return FanEnumeration {
                    graphs,
                    truncated: false,
                };
            }
            line -= 1;
            odometer[line] += 1;
            if odometer[line] < choices[line].len() {
                break;
            }
            odometer[line] = 0;
        }
    }
}

/// Connectivity of the multigraph; graphs with at most one vertex are connected.
pub fn is_connected(g: &FanGraph) -> bool {
    g.components().iter().all(|&c| c == 0)
}

/// Indices into [`FanGraph::edges`] of every bridge.
///
/// Edges are tracked by id, so an edge with a parallel companion is never a bridge.
pub fn bridge_edges(g: &FanGraph) -> Vec<usize> {
    let nv = g.vertices.len();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nv];
    for (k, e) in g.edges.iter().enumerate() {
        let (a, b) = (g.position(e.ends.0), g.position(e.ends.1));
        adj[a].push((b, k));
        adj[b].push((a, k));
    }

    struct LowLink<'a> {
        adj: &'a [Vec<(usize, usize)>],
        ord: Vec<usize>,
        low: Vec<usize>,
        next: usize,
        bridges: Vec<usize>,
    }

    impl LowLink<'_> {
        fn dfs(&mut self, v: usize, parent_edge: usize) {
            self.ord[v] = self.next;
            self.low[v] = self.next;
            self.next += 1;
            for &(to, k) in &self.adj[v] {
                if k == parent_edge {
                    continue;
                }
                if self.ord[to] == usize::MAX {
                    self.dfs(to, k);
                    self.low[v] = self.low[v].min(self.low[to]);
                    if self.low[to] > self.ord[v] {
                        self.bridges.push(k);
                    }
                } else {
                    self.low[v] = self.low[v].min(self.ord[to]);
                }
            }
        }
    }

    let mut state = LowLink {
        adj: &adj,
        ord: vec![usize::MAX; nv],
        low: vec![usize::MAX; nv],
        next: 0,
        bridges: Vec::new(),
    };
    for v in 0..nv {
        if state.ord[v] == usize::MAX {
            state.dfs(v, usize::MAX);
        }
    }
    let mut bridges = state.bridges;
    bridges.sort_unstable();
    bridges
}

/// A line carrying no point of multiplicity at least three, in an arrangement of at least three lines.
pub fn lemma_multipt_witness(inc: &IncidenceData) -> Option<usize> {
    if inc.line_count() < 3 {
        return None;
    }
    (0..inc.line_count()).find(|&i| inc.triple_points_on(i).is_empty())
}

/// A line `L` with two of its triple points separated once `L` is removed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NorepeatsWitness {
    pub line: usize,
    pub v: usize,
    pub w: usize,
}

/// Component labels of the triple points under the hypergraph whose
/// hyperedges are the triple points of each line other than `removed`.
pub fn separator_components(inc: &IncidenceData, removed: usize) -> (Vec<usize>, Vec<usize>) {
    let vertices = inc.multiple_point_ids(3);
    let mut dsu = Dsu::new(vertices.len());
    for h in (0..inc.line_count()).filter(|&h| h != removed) {
        let on_h: Vec<usize> = inc
            .triple_points_on(h)
            .iter()
            .map(|p| vertices.binary_search(p).expect("triple point"))
            .collect();
        for pair in on_h.windows(2) {
            dsu.union(pair[0], pair[1]);
        }
    }
    (vertices, dsu.labels())
}

/// Finds `(L, v, w)` with `v, w` consecutive triple points on `L` (canonical
/// order) that lie in different components once `L` is removed.
///
/// The criterion does not depend on the Fan graph orderings: each line's
/// edges form a path through exactly its triple points.
pub fn norepeats_witness(inc: &IncidenceData) -> Option<NorepeatsWitness> {
    for line in 0..inc.line_count() {
        let on_line = inc.triple_points_on(line);
        if on_line.len() < 2 {
            continue;
        }
        let (vertices, labels) = separator_components(inc, line);
        let label = |p: &usize| labels[vertices.binary_search(p).expect("triple point")];
        if let Some(pair) = on_line.windows(2).find(|w| label(&w[0]) != label(&w[1])) {
            return Some(NorepeatsWitness {
                line,
                v: pair[0],
                w: pair[1],
            });
        }
    }
    None
}
