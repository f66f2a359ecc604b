//! Gruenberg-Kegel graphs on prime vertices, the realizability and minimality
//! decisions, Frobenius digraph orientation, and directed-path analysis.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{GraphError, GroupError};
use crate::group::{frobenius_structure, hall_pq_candidates, FiniteGroup, FrobeniusClass};
use crate::modular::prime_divisors;

/// Undirected simple graph on prime vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledGraph {
    /// Ascending.
    pub vertices: Vec<u64>,
    /// Pairs (p, q) with p < q, lexicographically sorted.
    pub edges: Vec<(u64, u64)>,
}

impl LabeledGraph {
    pub fn new(vertices: Vec<u64>, edges: Vec<(u64, u64)>) -> Self {
        let mut vertices = vertices;
        vertices.sort_unstable();
        vertices.dedup();
        let vset: BTreeSet<u64> = vertices.iter().copied().collect();
        let mut norm: Vec<(u64, u64)> = edges
            .into_iter()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        norm.sort_unstable();
        norm.dedup();
        for &(a, b) in &norm {
            assert!(a != b, "no loops");
            assert!(vset.contains(&a) && vset.contains(&b), "edges must reference vertices");
        }
        Self { vertices, edges: norm }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn has_edge(&self, p: u64, q: u64) -> bool {
        let key = if p <= q { (p, q) } else { (q, p) };
        self.edges.binary_search(&key).is_ok()
    }

    pub fn neighbors(&self, p: u64) -> Vec<u64> {
        let mut out: Vec<u64> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == p {
                    Some(b)
                } else if b == p {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Same vertices; edge iff absent here.
    pub fn complement(&self) -> Self {
        let mut edges = Vec::new();
        for (i, &a) in self.vertices.iter().enumerate() {
            for &b in &self.vertices[i + 1..] {
                if !self.has_edge(a, b) {
                    edges.push((a, b));
                }
            }
        }
        Self { vertices: self.vertices.clone(), edges }
    }

    /// Is `self` a subgraph of `other` (vertex and edge containment)?
    pub fn subgraph_of(&self, other: &Self) -> bool {
        self.vertices.iter().all(|v| other.vertices.binary_search(v).is_ok())
            && self.edges.iter().all(|&(a, b)| other.has_edge(a, b))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let pos = |p: u64| self.vertices.binary_search(&p).unwrap();
        while let Some(i) = stack.pop() {
            for q in self.neighbors(self.vertices[i]) {
                let j = pos(q);
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// First triangle in lexicographic vertex order, if any.
    pub fn find_triangle(&self) -> Option<[u64; 3]> {
        let n = self.vertex_count();
        for i in 0..n {
            for j in i + 1..n {
                if !self.has_edge(self.vertices[i], self.vertices[j]) {
                    continue;
                }
                for t in j + 1..n {
                    if self.has_edge(self.vertices[i], self.vertices[t])
                        && self.has_edge(self.vertices[j], self.vertices[t])
                    {
                        return Some([self.vertices[i], self.vertices[j], self.vertices[t]]);
                    }
                }
            }
        }
        None
    }

    pub fn has_triangle(&self) -> bool {
        self.find_triangle().is_some()
    }

    /// Exact backtracking k-coloring; returns a witness assignment
    /// (vertex, color in 1..=k) when colorable.
    pub fn color_with(&self, k: usize) -> Option<Vec<(u64, u32)>> {
        assert!(k >= 1);
        let n = self.vertex_count();
        if n == 0 {
            return Some(Vec::new());
        }
        let pos = |p: u64| self.vertices.binary_search(&p).unwrap();
        let adj: Vec<Vec<usize>> =
            self.vertices.iter().map(|&v| self.neighbors(v).into_iter().map(pos).collect()).collect();
        let mut colors = vec![0u32; n];
        if !color_rec(&adj, k as u32, &mut colors, 0) {
            return None;
        }
        Some(self.vertices.iter().copied().zip(colors).collect())
    }

    pub fn chromatic_at_most(&self, k: usize) -> bool {
        self.color_with(k).is_some()
    }

    /// Remove one edge (for the minimality scan).
    pub fn without_edge(&self, e: (u64, u64)) -> Self {
        let key = if e.0 <= e.1 { e } else { (e.1, e.0) };
        Self {
            vertices: self.vertices.clone(),
            edges: self.edges.iter().copied().filter(|&x| x != key).collect(),
        }
    }

    /// Remove two vertices and their incident edges.
    pub fn without_vertices(&self, p: u64, q: u64) -> Self {
        Self {
            vertices: self.vertices.iter().copied().filter(|&v| v != p && v != q).collect(),
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|&(a, b)| a != p && a != q && b != p && b != q)
                .collect(),
        }
    }
}

fn color_rec(adj: &[Vec<usize>], k: u32, colors: &mut Vec<u32>, v: usize) -> bool {
    if v == adj.len() {
        return true;
    }
    for c in 1..=k {
        if adj[v].iter().all(|&u| colors[u] != c) {
            colors[v] = c;
            if color_rec(adj, k, colors, v + 1) {
                return true;
            }
            colors[v] = 0;
        }
    }
    false
}

/// Gruenberg-Kegel graph of an integer set: vertices are primes dividing some
/// member, p and q adjacent iff pq divides a single member.
pub fn gk_graph(values: &[u64]) -> LabeledGraph {
    assert!(!values.is_empty());
    let mut vertices = BTreeSet::new();
    let mut edges = BTreeSet::new();
    for &v in values {
        let primes = prime_divisors(v);
        for (i, &p) in primes.iter().enumerate() {
            vertices.insert(p);
            for &q in &primes[i + 1..] {
                edges.insert((p, q));
            }
        }
    }
    LabeledGraph {
        vertices: vertices.into_iter().collect(),
        edges: edges.into_iter().collect(),
    }
}

/// Prime graph: Gruenberg-Kegel graph of the element orders.
pub fn prime_graph(g: &FiniteGroup) -> LabeledGraph {
    gk_graph(&g.conjugacy().element_orders())
}

/// Codegree graph from a precomputed codegree set.
pub fn codegree_graph_from_set(codegrees: &[u64]) -> LabeledGraph {
    gk_graph(codegrees)
}

/// Verdict of the realizability decision, with a witness either way.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RealizabilityDecision {
    pub realizable: bool,
    /// A triangle in the complement, when that is the obstruction.
    pub complement_triangle: Option<[u64; 3]>,
    /// Witness 3-coloring of the complement, when realizable.
    pub coloring: Option<Vec<(u64, u32)>>,
    /// Set when the complement is triangle-free but the exhaustive 3-coloring
    /// search came up empty.
    pub coloring_exhausted: bool,
}

/// A graph occurs as a codegree graph iff its complement is triangle-free and
/// 3-colorable. The empty and single-vertex graphs are realizable (the trivial
/// group and any p-group).
pub fn is_realizable_codegree(graph: &LabeledGraph) -> RealizabilityDecision {
    let comp = graph.complement();
    if let Some(t) = comp.find_triangle() {
        return RealizabilityDecision {
            realizable: false,
            complement_triangle: Some(t),
            coloring: None,
            coloring_exhausted: false,
        };
    }
    match comp.color_with(3) {
        Some(w) => RealizabilityDecision {
            realizable: true,
            complement_triangle: None,
            coloring: Some(w),
            coloring_exhausted: false,
        },
        None => RealizabilityDecision {
            realizable: false,
            complement_triangle: None,
            coloring: None,
            coloring_exhausted: true,
        },
    }
}

/// Minimality verdict; the edge-deletion reading drives `minimal`, and the
/// vertex-pair-deletion reading is reported alongside with a disagreement flag.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MinimalityDecision {
    pub minimal: bool,
    /// An edge whose removal leaves a realizable graph, when not minimal.
    pub witness_edge: Option<(u64, u64)>,
    /// Verdict under the alternate reading (delete both vertices of every
    /// unordered pair, test the remnant).
    pub vertex_deletion_verdict: bool,
    /// True when the two readings disagree.
    pub readings_disagree: bool,
}

/// Minimal codegree graph: more than one vertex, connected, and no proper
/// spanning subgraph realizable (equivalently, deleting any single edge breaks
/// realizability; non-realizability persists under further deletion).
pub fn is_minimal_codegree_graph(graph: &LabeledGraph) -> Result<MinimalityDecision, GraphError> {
    if !is_realizable_codegree(graph).realizable {
        return Err(GraphError::NotRealizableInput);
    }
    let base = graph.vertex_count() > 1 && graph.is_connected();
    let mut minimal = base;
    let mut witness_edge = None;
    if base {
        for &e in &graph.edges {
            if is_realizable_codegree(&graph.without_edge(e)).realizable {
                minimal = false;
                witness_edge = Some(e);
                break;
            }
        }
    }
    // alternate reading: every two-vertex deletion must leave a non-realizable
    // remnant (the empty remnant counts as realizable: the trivial group)
    let mut vertex_deletion_verdict = base;
    if base {
        'outer: for (i, &p) in graph.vertices.iter().enumerate() {
            for &q in &graph.vertices[i + 1..] {
                if is_realizable_codegree(&graph.without_vertices(p, q)).realizable {
                    vertex_deletion_verdict = false;
                    break 'outer;
                }
            }
        }
    }
    Ok(MinimalityDecision {
        minimal,
        witness_edge,
        vertex_deletion_verdict,
        readings_disagree: minimal != vertex_deletion_verdict,
    })
}

/// Directed graph on prime vertices (arcs on complement edges).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Digraph {
    pub vertices: Vec<u64>,
    /// Ordered pairs, lexicographically sorted.
    pub arcs: Vec<(u64, u64)>,
}

impl Digraph {
    pub fn new(vertices: Vec<u64>, arcs: Vec<(u64, u64)>) -> Self {
        let mut vertices = vertices;
        vertices.sort_unstable();
        vertices.dedup();
        let mut arcs = arcs;
        arcs.sort_unstable();
        arcs.dedup();
        for &(a, b) in &arcs {
            assert!(a != b, "no loops");
        }
        Self { vertices, arcs }
    }

    /// Exact maximum simple directed path length in edges; vertex counts stay
    /// small so exponential search is fine.
    pub fn longest_directed_path(&self) -> usize {
        let n = self.vertices.len();
        let pos = |p: u64| self.vertices.binary_search(&p).unwrap();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in &self.arcs {
            adj[pos(a)].push(pos(b));
        }
        let mut best = 0;
        let mut visited = vec![false; n];
        for s in 0..n {
            visited[s] = true;
            path_rec(&adj, s, 0, &mut visited, &mut best);
            visited[s] = false;
        }
        best
    }
}

fn path_rec(adj: &[Vec<usize>], v: usize, len: usize, visited: &mut Vec<bool>, best: &mut usize) {
    if len > *best {
        *best = len;
    }
    for &u in &adj[v] {
        if !visited[u] {
            visited[u] = true;
            path_rec(adj, u, len + 1, visited, best);
            visited[u] = false;
        }
    }
}

/// Result of orienting the complement of a codegree graph.
#[derive(Debug, Clone)]
pub struct FrobeniusDigraph {
    pub digraph: Digraph,
    /// Complement edges skipped because no Hall subgroup was found within the
    /// retry bound.
    pub skipped: Vec<(u64, u64)>,
    /// Classifications per complement edge, for reporting.
    pub classifications: Vec<((u64, u64), String)>,
    /// Complement edges whose Hall subgroup classified as neither structure,
    /// contradicting the disconnection lemma; recorded as invariant
    /// violations rather than aborting the run.
    pub violations: Vec<(u64, u64)>,
}

/// Orient each complement edge {p,q} of the codegree graph: a Frobenius Hall
/// subgroup with kernel Q and complement P gives p -> q, and a (p,q,p)-type
/// 2-Frobenius Hall subgroup also gives p -> q.
pub fn frobenius_digraph(
    g: &FiniteGroup,
    codegree_graph: &LabeledGraph,
    hall_retries: usize,
) -> Result<FrobeniusDigraph, GroupError> {
    let comp = codegree_graph.complement();
    let mut arcs = Vec::new();
    let mut skipped = Vec::new();
    let mut classifications = Vec::new();
    let mut violations = Vec::new();
    for &(p, q) in &comp.edges {
        let hall = match crate::group::hall_pq(g, p, q, hall_retries) {
            Ok(h) => h,
            Err(GroupError::HallNotFound { .. }) => {
                skipped.push((p, q));
                continue;
            }
            Err(e) => return Err(e),
        };
        let class = frobenius_structure(&hall, p, q)?;
        classifications.push(((p, q), class.describe()));
        match orient(&class, p, q) {
            Some(arc) => arcs.push(arc),
            None => violations.push((p, q)),
        }
    }
    Ok(FrobeniusDigraph {
        digraph: Digraph::new(codegree_graph.vertices.clone(), arcs),
        skipped,
        classifications,
        violations,
    })
}

/// Arc direction induced by a Hall {p,q}-subgroup classification.
pub fn orient(class: &FrobeniusClass, p: u64, q: u64) -> Option<(u64, u64)> {
    match class {
        FrobeniusClass::Frobenius { kernel_primes, complement_primes, .. } => {
            if kernel_primes == &[q] && complement_primes == &[p] {
                Some((p, q))
            } else if kernel_primes == &[p] && complement_primes == &[q] {
                Some((q, p))
            } else {
                None
            }
        }
        FrobeniusClass::TwoFrobenius { kind } => {
            if *kind == (p, q, p) {
                Some((p, q))
            } else if *kind == (q, p, q) {
                Some((q, p))
            } else {
                None
            }
        }
        FrobeniusClass::Neither => None,
    }
}

/// Do all classifications induce one and the same arc for the pair {p,q}?
pub fn orient_is_consistent(classes: &[FrobeniusClass], p: u64, q: u64) -> bool {
    let mut orientations = classes.iter().map(|c| orient(c, p, q));
    let first = orientations.next().flatten();
    first.is_some() && orientations.all(|o| o == first)
}

/// All distinct Hall subgroups found within the budget classify identically;
/// returns the classifications for the well-definedness check.
pub fn orientation_witnesses(
    g: &FiniteGroup,
    p: u64,
    q: u64,
    hall_retries: usize,
    max_found: usize,
) -> Result<Vec<FrobeniusClass>, GroupError> {
    let halls = hall_pq_candidates(g, p, q, hall_retries, max_found)?;
    halls.iter().map(|h| frobenius_structure(h, p, q)).collect()
}

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<u64>,
    edges: Vec<[u64; 2]>,
}

#[derive(Serialize, Deserialize)]
struct DigraphJson {
    vertices: Vec<u64>,
    arcs: Vec<[u64; 2]>,
}

pub fn graph_to_json(g: &LabeledGraph) -> String {
    serde_json::to_string(&GraphJson {
        vertices: g.vertices.clone(),
        edges: g.edges.iter().map(|&(a, b)| [a, b]).collect(),
    })
    .expect("graph serializes")
}

pub fn graph_from_json(text: &str) -> Result<LabeledGraph, GraphError> {
    let raw: GraphJson =
        serde_json::from_str(text).map_err(|e| GraphError::Parse(e.to_string()))?;
    let vset: BTreeSet<u64> = raw.vertices.iter().copied().collect();
    for e in &raw.edges {
        if e[0] == e[1] || !vset.contains(&e[0]) || !vset.contains(&e[1]) {
            return Err(GraphError::Parse(format!("bad edge [{}, {}]", e[0], e[1])));
        }
    }
    Ok(LabeledGraph::new(
        raw.vertices,
        raw.edges.into_iter().map(|e| (e[0], e[1])).collect(),
    ))
}

pub fn digraph_to_json(d: &Digraph) -> String {
    serde_json::to_string(&DigraphJson {
        vertices: d.vertices.clone(),
        arcs: d.arcs.iter().map(|&(a, b)| [a, b]).collect(),
    })
    .expect("digraph serializes")
}

pub fn digraph_from_json(text: &str) -> Result<Digraph, GraphError> {
    let raw: DigraphJson =
        serde_json::from_str(text).map_err(|e| GraphError::Parse(e.to_string()))?;
    for a in &raw.arcs {
        if a[0] == a[1] {
            return Err(GraphError::Parse(format!("loop arc [{}, {}]", a[0], a[1])));
        }
    }
    Ok(Digraph::new(raw.vertices, raw.arcs.into_iter().map(|a| (a[0], a[1])).collect()))
}

/// DOT export: solid undirected edges for the graph, dashed directed arcs for
/// the digraph overlaid on the same vertices. Every edge and arc renders once.
pub fn to_dot(graph: &LabeledGraph, digraph: Option<&Digraph>, name: &str) -> String {
    let mut out = String::new();
    out.push_str(&format!("graph \"{name}\" {{\n"));
    for v in &graph.vertices {
        out.push_str(&format!("  \"{v}\";\n"));
    }
    for (a, b) in &graph.edges {
        out.push_str(&format!("  \"{a}\" -- \"{b}\";\n"));
    }
    if let Some(d) = digraph {
        for (a, b) in &d.arcs {
            out.push_str(&format!("  \"{a}\" -- \"{b}\" [style=dashed, dir=forward];\n"));
        }
    }
    out.push_str("}\n");
    out
}

/// C_n on the first n odd-indexed primes, for fixtures and tests.
pub fn cycle_graph(primes: &[u64]) -> LabeledGraph {
    let n = primes.len();
    let edges: Vec<(u64, u64)> = (0..n).map(|i| (primes[i], primes[(i + 1) % n])).collect();
    LabeledGraph::new(primes.to_vec(), edges)
}

pub fn complete_graph(primes: &[u64]) -> LabeledGraph {
    let mut edges = Vec::new();
    for (i, &a) in primes.iter().enumerate() {
        for &b in &primes[i + 1..] {
            edges.push((a, b));
        }
    }
    LabeledGraph::new(primes.to_vec(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    const P5: [u64; 5] = [2, 3, 5, 7, 11];

    #[test]
    fn gk_graph_examples() {
        let g = gk_graph(&[1, 2, 3, 8]);
        assert_eq!(g.vertices, vec![2, 3]);
        assert!(g.edges.is_empty());

        let t = gk_graph(&[12, 15, 20]);
        assert_eq!(t.vertices, vec![2, 3, 5]);
        assert_eq!(t.edges.len(), 3);

        let e = gk_graph(&[1]);
        assert!(e.vertices.is_empty());
    }

    #[test]
    fn complement_examples() {
        let c5 = cycle_graph(&P5);
        let comp = c5.complement();
        assert_eq!(comp.edges.len(), 5);
        assert_eq!(comp.complement(), c5);
        let k3 = complete_graph(&[2, 3, 5]);
        assert!(k3.complement().edges.is_empty());
        let k1 = LabeledGraph::new(vec![2], vec![]);
        assert_eq!(k1.complement(), k1);
    }

    #[test]
    fn triangle_detection() {
        assert!(complete_graph(&[2, 3, 5]).has_triangle());
        assert!(!cycle_graph(&P5).has_triangle());
        assert!(petersen().complement().has_triangle());
    }

    fn petersen() -> LabeledGraph {
        let v: Vec<u64> = vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29];
        let mut edges = Vec::new();
        for i in 0..5usize {
            edges.push((v[i], v[(i + 1) % 5])); // outer C5
            edges.push((v[i], v[i + 5])); // spokes
            edges.push((v[5 + i], v[5 + (i + 2) % 5])); // inner pentagram
        }
        LabeledGraph::new(v, edges)
    }

    #[test]
    fn coloring_examples() {
        let c5 = cycle_graph(&P5);
        assert!(!c5.chromatic_at_most(2));
        let witness = c5.color_with(3).unwrap();
        for &(a, b) in &c5.edges {
            let ca = witness.iter().find(|x| x.0 == a).unwrap().1;
            let cb = witness.iter().find(|x| x.0 == b).unwrap().1;
            assert_ne!(ca, cb);
        }
        assert!(!complete_graph(&[2, 3, 5, 7]).chromatic_at_most(3));
    }

    #[test]
    fn realizability_examples() {
        assert!(is_realizable_codegree(&cycle_graph(&P5)).realizable);
        for n in 1..=8 {
            let primes: Vec<u64> = [2u64, 3, 5, 7, 11, 13, 17, 19][..n].to_vec();
            assert!(is_realizable_codegree(&complete_graph(&primes)).realizable);
        }
        let empty3 = LabeledGraph::new(vec![2, 3, 5], vec![]);
        let d = is_realizable_codegree(&empty3);
        assert!(!d.realizable);
        assert_eq!(d.complement_triangle, Some([2, 3, 5]));
        let c7 = cycle_graph(&[2, 3, 5, 7, 11, 13, 17]);
        assert!(!is_realizable_codegree(&c7).realizable);
        assert!(!is_realizable_codegree(&petersen()).realizable);
        // zero-vertex graph counts as realizable (trivial group)
        let zero = gk_graph(&[1]);
        assert!(is_realizable_codegree(&zero).realizable);
    }

    #[test]
    fn minimality_examples() {
        let c5 = is_minimal_codegree_graph(&cycle_graph(&P5)).unwrap();
        assert!(c5.minimal);
        // the two readings genuinely disagree on the 5-cycle
        assert!(!c5.vertex_deletion_verdict);
        assert!(c5.readings_disagree);

        let k3 = is_minimal_codegree_graph(&complete_graph(&[2, 3, 5])).unwrap();
        assert!(!k3.minimal);
        assert!(!k3.vertex_deletion_verdict);

        let k1 = is_minimal_codegree_graph(&LabeledGraph::new(vec![2], vec![])).unwrap();
        assert!(!k1.minimal);

        let empty3 = LabeledGraph::new(vec![2, 3, 5], vec![]);
        assert!(matches!(
            is_minimal_codegree_graph(&empty3),
            Err(GraphError::NotRealizableInput)
        ));
    }

    #[test]
    fn longest_path_examples() {
        // the 5-cycle orientation: A->B, A->E, D->E, D->C, B->C
        let d = Digraph::new(
            vec![2, 3, 5, 7, 11],
            vec![(2, 3), (2, 11), (7, 11), (7, 5), (3, 5)],
        );
        assert_eq!(d.longest_directed_path(), 2);
        let single = Digraph::new(vec![2, 3], vec![(2, 3)]);
        assert_eq!(single.longest_directed_path(), 1);
        let arcless = Digraph::new(vec![2, 3], vec![]);
        assert_eq!(arcless.longest_directed_path(), 0);
    }

    #[test]
    fn gk_graph_is_monotone() {
        let base = vec![12u64, 15];
        let small = gk_graph(&base);
        let mut bigger = base.clone();
        bigger.push(35);
        let big = gk_graph(&bigger);
        assert!(small.subgraph_of(&big));
    }

    #[test]
    fn json_roundtrip_and_format() {
        let g = LabeledGraph::new(vec![2, 3, 5], vec![(2, 3)]);
        let s = graph_to_json(&g);
        assert_eq!(s, r#"{"vertices":[2,3,5],"edges":[[2,3]]}"#);
        assert_eq!(graph_from_json(&s).unwrap(), g);
        assert!(graph_from_json(r#"{"vertices":[2],"edges":[[2,3]]}"#).is_err());
        let d = Digraph::new(vec![2, 3], vec![(2, 3)]);
        assert_eq!(digraph_from_json(&digraph_to_json(&d)).unwrap(), d);
    }

    #[test]
    fn dot_renders_each_edge_once() {
        let g = cycle_graph(&P5);
        let d = Digraph::new(P5.to_vec(), vec![(2, 3), (2, 11)]);
        let dot = to_dot(&g, Some(&d), "c5");
        assert_eq!(dot.matches(" -- ").count(), 5 + 2);
        assert_eq!(dot.matches("style=dashed").count(), 2);
    }
}
