//! Simple undirected graphs, standard families, derived graphs (line graph,
//! subdivision-with-incidence graph, total graph), and the four join
//! operations built on them.
//!
//! Vertices are `0..n`. Edges are unordered pairs stored canonically sorted,
//! so equal graphs serialize identically. All operations are pure.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Simple undirected graph: vertex count plus a canonical sorted edge set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an edge iterator. Endpoints are normalized to
    /// `(min, max)`, duplicates collapse (set semantics), self-loops and
    /// out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidInput(format!("self-loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({a}, {b}) out of range for n = {n}"
                )));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Graph {
            n,
            edges: set.into_iter().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges, usually written `m`.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical sorted order; edge `j` of derived constructions
    /// always refers to position `j` in this slice.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for &(a, b) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    /// Common vertex degree, if all degrees are equal (the empty graph is
    /// 0-regular by convention).
    pub fn regularity(&self) -> Option<usize> {
        let d = self.degrees();
        match d.first() {
            None => Some(0),
            Some(&t) => d.iter().all(|&x| x == t).then_some(t),
        }
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let e = (a.min(b), a.max(b));
        self.edges.binary_search(&e).is_ok()
    }

    /// Adjacency matrix as integers, row-major `n x n`.
    pub fn adjacency(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.n, self.n);
        for &(a, b) in &self.edges {
            m.set(a, b, 1);
            m.set(b, a, 1);
        }
        m
    }

    /// Vertex-edge incidence matrix, `n x m`, column `j` = edge `j` in
    /// canonical order. Every column sums to 2.
    pub fn incidence_matrix(&self) -> IntMatrix {
        let mut r = IntMatrix::zeros(self.n, self.edges.len());
        for (j, &(a, b)) in self.edges.iter().enumerate() {
            r.set(a, j, 1);
            r.set(b, j, 1);
        }
        r
    }

    /// Pairs `(j, k)` with `j < k` of edges sharing an endpoint.
    fn incident_edge_pairs(&self) -> Vec<(usize, usize)> {
        let mut by_vertex: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (j, &(a, b)) in self.edges.iter().enumerate() {
            by_vertex[a].push(j);
            by_vertex[b].push(j);
        }
        let mut pairs = Vec::new();
        for list in &by_vertex {
            for (i, &j) in list.iter().enumerate() {
                for &k in &list[i + 1..] {
                    pairs.push((j.min(k), j.max(k)));
                }
            }
        }
        // Two distinct edges of a simple graph share at most one vertex, so
        // no pair appears twice; sort for canonical order.
        pairs.sort_unstable();
        pairs
    }

    /// Line graph: one vertex per edge (canonical edge order), adjacent when
    /// the underlying edges share an endpoint.
    pub fn line_graph(&self) -> Graph {
        Graph {
            n: self.edges.len(),
            edges: self.incident_edge_pairs(),
        }
    }

    /// Subdivide every edge by a new vertex, drop the original edges, and
    /// connect inserted vertices whose edges were incident. Inserted vertices
    /// are indexed `n..n+m` in canonical edge order.
    pub fn q_graph(&self) -> Graph {
        self.derived_with_inserted(false)
    }

    /// Total graph: original edges kept, one new vertex per edge adjacent to
    /// both endpoints, inserted vertices adjacent when their edges are
    /// incident. Inserted vertices are indexed `n..n+m`.
    pub fn total_graph(&self) -> Graph {
        self.derived_with_inserted(true)
    }

    fn derived_with_inserted(&self, keep_original: bool) -> Graph {
        let n = self.n;
        let m = self.edges.len();
        let mut edges = Vec::with_capacity(3 * m + if keep_original { m } else { 0 });
        if keep_original {
            edges.extend_from_slice(&self.edges);
        }
        for (j, &(a, b)) in self.edges.iter().enumerate() {
            edges.push((a, n + j));
            edges.push((b, n + j));
        }
        for (j, k) in self.incident_edge_pairs() {
            edges.push((n + j, n + k));
        }
        edges.sort_unstable();
        Graph { n: n + m, edges }
    }

    /// Disjoint union with vertices of `other` shifted past `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(a, b)| (a + shift, b + shift)));
        edges.sort_unstable();
        Graph {
            n: self.n + other.n,
            edges,
        }
    }

    /// Serializes to the edge-list text format: first line `n m`, then one
    /// line `i j` per edge with `i < j`, sorted.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(a, b) in &self.edges {
            out.push_str(&format!("{a} {b}\n"));
        }
        out
    }

    /// Parses the edge-list text format. Round-trips [`Graph::to_edge_list`]
    /// exactly.
    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty edge list".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = parse_field(it.next(), "vertex count")?;
        let m: usize = parse_field(it.next(), "edge count")?;
        if it.next().is_some() {
            return Err(Error::Parse("header must be exactly `n m`".into()));
        }
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let mut it = line.split_whitespace();
            let a: usize = parse_field(it.next(), "edge endpoint")?;
            let b: usize = parse_field(it.next(), "edge endpoint")?;
            if it.next().is_some() {
                return Err(Error::Parse(format!("malformed edge line `{line}`")));
            }
            if a >= b {
                return Err(Error::Parse(format!(
                    "edge line `{line}` must satisfy i < j"
                )));
            }
            edges.push((a, b));
        }
        if edges.len() != m {
            return Err(Error::Parse(format!(
                "header declares {m} edges, found {}",
                edges.len()
            )));
        }
        let g = Graph::new(n, edges.iter().copied())?;
        if g.edge_count() != m {
            return Err(Error::Parse("duplicate edges in edge list".into()));
        }
        Ok(g)
    }
}

fn parse_field(field: Option<&str>, what: &str) -> Result<usize> {
    field
        .ok_or_else(|| Error::Parse(format!("missing {what}")))?
        .parse()
        .map_err(|e| Error::Parse(format!("bad {what}: {e}")))
}

/// The four join operations.
///
/// Starting from the disjoint union of the subdivision-type graph
/// (`q_graph`, kinds `QVertex`/`QEdge`) or the total graph (`TVertex`/
/// `TEdge`) of `G1` with `G2`, every vertex of `G2` is connected to all
/// original vertices of `G1` (vertex kinds) or to all inserted vertices
/// (edge kinds).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum JoinKind {
    QVertex,
    QEdge,
    TVertex,
    TEdge,
}

impl JoinKind {
    pub const ALL: [JoinKind; 4] = [
        JoinKind::QVertex,
        JoinKind::QEdge,
        JoinKind::TVertex,
        JoinKind::TEdge,
    ];

    /// True for the kinds built on the total graph.
    pub fn keeps_original_edges(self) -> bool {
        matches!(self, JoinKind::TVertex | JoinKind::TEdge)
    }

    /// True when `G2` connects to the inserted vertices rather than `V(G1)`.
    pub fn connects_inserted(self) -> bool {
        matches!(self, JoinKind::QEdge | JoinKind::TEdge)
    }
}

impl fmt::Display for JoinKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            JoinKind::QVertex => "qvertex",
            JoinKind::QEdge => "qedge",
            JoinKind::TVertex => "tvertex",
            JoinKind::TEdge => "tedge",
        };
        f.write_str(s)
    }
}

impl FromStr for JoinKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<JoinKind> {
        match s.to_ascii_lowercase().as_str() {
            "qvertex" | "q-vertex" => Ok(JoinKind::QVertex),
            "qedge" | "q-edge" => Ok(JoinKind::QEdge),
            "tvertex" | "t-vertex" => Ok(JoinKind::TVertex),
            "tedge" | "t-edge" => Ok(JoinKind::TEdge),
            other => Err(Error::Parse(format!("unknown join kind `{other}`"))),
        }
    }
}

/// Joins `g1` and `g2`. Vertex blocks are ordered `V(G1)` (`0..n1`), inserted
/// vertices `I(G1)` (`n1..n1+m1`, canonical edge order), then `V(G2)`.
///
/// `g1` must have at least one edge; `g2` may be edgeless or even empty, in
/// which case the result degenerates to the derived graph of `g1`.
pub fn join(kind: JoinKind, g1: &Graph, g2: &Graph) -> Result<Graph> {
    let n1 = g1.n();
    let m1 = g1.edge_count();
    if m1 == 0 {
        return Err(Error::InvalidInput(
            "join requires g1 to have at least one edge".into(),
        ));
    }
    let base = g1.derived_with_inserted(kind.keeps_original_edges());
    let mut joined = base.disjoint_union(g2);
    let g2_block = n1 + m1;
    let connect = if kind.connects_inserted() {
        n1..n1 + m1
    } else {
        0..n1
    };
    for v in connect {
        for u in 0..g2.n() {
            joined.edges.push((v, g2_block + u));
        }
    }
    joined.edges.sort_unstable();
    Ok(joined)
}

/// Standard graph families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Empty(usize),
}

impl FromStr for Family {
    type Err = Error;

    /// Parses descriptors such as `path:3`, `cycle:5`, `complete:4`,
    /// `cbipartite:2,3` (also `complete_bipartite:2,3`), `empty:3`.
    fn from_str(s: &str) -> Result<Family> {
        let (name, params) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("family descriptor `{s}` needs `name:params`")))?;
        let nums: Vec<usize> = params
            .split(',')
            .map(|p| {
                p.trim()
                    .parse()
                    .map_err(|e| Error::Parse(format!("bad family parameter `{p}`: {e}")))
            })
            .collect::<Result<_>>()?;
        let one = |f: fn(usize) -> Family| -> Result<Family> {
            if nums.len() == 1 {
                Ok(f(nums[0]))
            } else {
                Err(Error::Parse(format!("`{name}` takes one parameter")))
            }
        };
        match name.to_ascii_lowercase().as_str() {
            "path" => one(Family::Path),
            "cycle" => one(Family::Cycle),
            "complete" => one(Family::Complete),
            "empty" => one(Family::Empty),
            "cbipartite" | "complete_bipartite" => {
                if nums.len() == 2 {
                    Ok(Family::CompleteBipartite(nums[0], nums[1]))
                } else {
                    Err(Error::Parse("`cbipartite` takes two parameters".into()))
                }
            }
            other => Err(Error::Parse(format!("unknown family `{other}`"))),
        }
    }
}

/// Builds a named standard graph with canonical vertex labeling: paths and
/// cycles use consecutive vertices, the complete bipartite part of size `a`
/// is `0..a`.
pub fn build_family(family: Family) -> Result<Graph> {
    match family {
        Family::Path(n) => {
            positive(n, "path")?;
            Graph::new(n, (1..n).map(|i| (i - 1, i)))
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(Error::InvalidParameter(format!(
                    "cycle needs at least 3 vertices, got {n}"
                )));
            }
            Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::Complete(n) => {
            positive(n, "complete")?;
            Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
        }
        Family::CompleteBipartite(a, b) => {
            positive(a, "complete bipartite")?;
            positive(b, "complete bipartite")?;
            Graph::new(a + b, (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j))))
        }
        Family::Empty(n) => {
            positive(n, "empty")?;
            Graph::new(n, std::iter::empty())
        }
    }
}

fn positive(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidParameter(format!(
            "{what} graph needs a positive vertex count"
        )))
    } else {
        Ok(())
    }
}

/// The Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10, spokes
/// `i -- i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, edges).expect("petersen construction is valid")
}

/// Dense integer matrix, row-major. Used for adjacency and incidence
/// matrices so the structural identities can be checked in exact integer
/// arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn scale(&self, c: i64) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(desc: &str) -> Graph {
        build_family(desc.parse().unwrap()).unwrap()
    }

    #[test]
    fn family_examples() {
        let p3 = g("path:3");
        assert_eq!(p3.n(), 3);
        assert_eq!(p3.edges(), &[(0, 1), (1, 2)]);

        let k4 = g("complete:4");
        assert_eq!(k4.n(), 4);
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(k4.regularity(), Some(3));

        let k22 = g("cbipartite:2,2");
        assert_eq!(k22.n(), 4);
        assert_eq!(k22.edges(), &[(0, 2), (0, 3), (1, 2), (1, 3)]);
    }

    #[test]
    fn family_errors() {
        assert!(build_family(Family::Path(0)).is_err());
        assert!(build_family(Family::Cycle(2)).is_err());
        assert!(build_family(Family::CompleteBipartite(0, 2)).is_err());
    }

    #[test]
    fn degrees_and_regularity() {
        assert_eq!(g("complete:4").degrees(), vec![3, 3, 3, 3]);
        assert_eq!(g("path:3").degrees(), vec![1, 2, 1]);
        assert_eq!(g("path:3").regularity(), None);
        assert_eq!(g("empty:5").degrees(), vec![0; 5]);
        assert_eq!(g("empty:5").regularity(), Some(0));
    }

    #[test]
    fn graph_new_rejects_bad_edges() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
        // duplicates collapse
        let g = Graph::new(3, [(1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn incidence_p2_and_k3() {
        let p2 = g("path:2");
        let r = p2.incidence_matrix();
        assert_eq!((r.rows(), r.cols()), (2, 1));
        assert_eq!((r.get(0, 0), r.get(1, 0)), (1, 1));

        // K3: R R^T = A + 2I (3-cycle is 2-regular)
        let k3 = g("complete:3");
        let r = k3.incidence_matrix();
        for j in 0..r.cols() {
            let col_sum: i64 = (0..r.rows()).map(|i| r.get(i, j)).sum();
            assert_eq!(col_sum, 2);
        }
        let lhs = r.mul(&r.transpose());
        let rhs = k3.adjacency().sub(&IntMatrix::identity(3).scale(-2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn incidence_line_graph_identity_c5() {
        // R^T R = A(L(G)) + 2I, exact integer arithmetic
        let c5 = g("cycle:5");
        let r = c5.incidence_matrix();
        let lhs = r.transpose().mul(&r);
        let lg = c5.line_graph();
        let rhs = lg.adjacency().sub(&IntMatrix::identity(5).scale(-2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn line_graph_examples() {
        assert_eq!(g("path:3").line_graph(), g("path:2"));
        assert_eq!(g("complete:3").line_graph(), g("complete:3"));
        // line graph of a 5-cycle is again a 5-cycle (up to labeling):
        // 5 vertices, connected, 2-regular
        let lg = g("cycle:5").line_graph();
        assert_eq!(lg.n(), 5);
        assert_eq!(lg.regularity(), Some(2));
        assert!(is_connected(&lg));
    }

    fn is_connected(g: &Graph) -> bool {
        if g.n() == 0 {
            return true;
        }
        let mut seen = vec![false; g.n()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in g.edges() {
                let next = if a == v { b } else if b == v { a } else { continue };
                if !seen[next] {
                    seen[next] = true;
                    stack.push(next);
                }
            }
        }
        seen.into_iter().all(|x| x)
    }

    #[test]
    fn q_and_total_of_p2() {
        // subdividing the single edge yields a path through the inserted
        // vertex (labeled 2); keeping the original edge yields a triangle
        let q = g("path:2").q_graph();
        assert_eq!(q, Graph::new(3, [(0, 2), (1, 2)]).unwrap());
        assert_eq!(q.degrees(), vec![1, 1, 2]);
        assert_eq!(g("path:2").total_graph(), g("complete:3"));
    }

    #[test]
    fn q_graph_k4_inserted_degrees() {
        // brute-force check: each inserted vertex has degree 2 (endpoints)
        // plus the number of edges incident to its edge, which is 2*(t1-1)=4
        let k4 = g("complete:4");
        let q = k4.q_graph();
        assert_eq!(q.n(), 10);
        let d = q.degrees();
        let mut incident_count = [0usize; 6];
        for (j, k) in k4.incident_edge_pairs() {
            incident_count[j] += 1;
            incident_count[k] += 1;
        }
        for j in 0..6 {
            assert_eq!(incident_count[j], 4);
            assert_eq!(d[4 + j], 2 + incident_count[j]); // = 6 = 2 t1
        }
        for v in 0..4 {
            assert_eq!(d[v], 3);
        }
    }

    #[test]
    fn join_qvertex_k4_p2_degree_blocks() {
        let j = join(JoinKind::QVertex, &g("complete:4"), &g("path:2")).unwrap();
        assert_eq!(j.n(), 12);
        let d = j.degrees();
        // V(G1): t1 + n2 = 5, I(G1): 2 t1 = 6, V(G2): d + n1 = 5
        assert!(d[0..4].iter().all(|&x| x == 5));
        assert!(d[4..10].iter().all(|&x| x == 6));
        assert!(d[10..12].iter().all(|&x| x == 5));
    }

    #[test]
    fn join_tedge_p2_single_vertex() {
        let j = join(JoinKind::TEdge, &g("path:2"), &g("empty:1")).unwrap();
        assert_eq!(j.n(), 4);
        assert_eq!(j.edge_count(), 4);
        assert_eq!(j.edges(), &[(0, 1), (0, 2), (1, 2), (2, 3)]);
    }

    #[test]
    fn join_qedge_c3_k2_inserted_block() {
        let j = join(JoinKind::QEdge, &g("cycle:3"), &g("complete:2")).unwrap();
        assert_eq!(j.n(), 8);
        let d = j.degrees();
        // I(G1) block: 2 t1 + n2 = 6
        assert!(d[3..6].iter().all(|&x| x == 6));
    }

    #[test]
    fn join_rejects_edgeless_g1() {
        assert!(join(JoinKind::QVertex, &g("empty:3"), &g("path:2")).is_err());
    }

    #[test]
    fn join_with_empty_g2_degenerates() {
        let g1 = g("cycle:3");
        let empty = Graph::new(0, std::iter::empty()).unwrap();
        let j = join(JoinKind::QVertex, &g1, &empty).unwrap();
        assert_eq!(j, g1.q_graph());
        let j = join(JoinKind::TEdge, &g1, &empty).unwrap();
        assert_eq!(j, g1.total_graph());
    }

    #[test]
    fn join_deterministic() {
        let a = join(JoinKind::TVertex, &g("cycle:4"), &g("cbipartite:1,2")).unwrap();
        let b = join(JoinKind::TVertex, &g("cycle:4"), &g("cbipartite:1,2")).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_edge_list(), b.to_edge_list());
    }

    #[test]
    fn edge_list_round_trip() {
        let j = join(JoinKind::QEdge, &g("complete:4"), &g("cycle:3")).unwrap();
        let text = j.to_edge_list();
        let back = Graph::from_edge_list(&text).unwrap();
        assert_eq!(back, j);
        assert_eq!(back.to_edge_list(), text);
    }

    #[test]
    fn edge_list_parse_errors() {
        assert!(Graph::from_edge_list("").is_err());
        assert!(Graph::from_edge_list("2 1\n1 0\n").is_err()); // i >= j
        assert!(Graph::from_edge_list("2 2\n0 1\n").is_err()); // count mismatch
        assert!(Graph::from_edge_list("2 1\n0 5\n").is_err()); // out of range
    }

    #[test]
    fn petersen_shape() {
        let p = petersen();
        assert_eq!(p.n(), 10);
        assert_eq!(p.edge_count(), 15);
        assert_eq!(p.regularity(), Some(3));
    }
}
