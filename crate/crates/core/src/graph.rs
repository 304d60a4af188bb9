//! Simple undirected graphs over `0..n` with bit-mask adjacency.
//!
//! Every neighborhood is a [`VertexSet`] backed by a single `u64`, so a graph
//! holds at most [`MAX_VERTICES`] vertices. Separately, each graph carries a
//! soft *vertex cap* (default [`DEFAULT_VERTEX_CAP`]) that the exponential
//! routines check before enumerating anything.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Hard limit imposed by the `u64` neighborhood masks.
pub const MAX_VERTICES: usize = 64;

/// Default limit for routines whose cost is exponential in the vertex count.
pub const DEFAULT_VERTEX_CAP: usize = 24;

/// A subset of `0..64`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[must_use]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[must_use]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, VertexSet::with)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&v) = members.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(members.into_iter().collect())
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Parameters of a circulant graph `C_n(S)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CirculantSpec {
    n: usize,
    connections: Vec<usize>,
}

impl CirculantSpec {
    /// Validates `1 <= s <= n/2` for each connection; duplicates are rejected.
    pub fn new(n: usize, connections: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidCirculant("n must be at least 1".into()));
        }
        let mut connections: Vec<usize> = connections.into_iter().collect();
        for &s in &connections {
            if s == 0 || s > n / 2 {
                return Err(Error::InvalidCirculant(format!(
                    "connection {s} outside [1, {}] for n = {n}",
                    n / 2
                )));
            }
        }
        connections.sort_unstable();
        let len = connections.len();
        connections.dedup();
        if connections.len() != len {
            return Err(Error::InvalidCirculant("duplicate connection".into()));
        }
        Ok(CirculantSpec { n, connections })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn connections(&self) -> &[usize] {
        &self.connections
    }
}

impl fmt::Display for CirculantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.connections.iter().map(|s| s.to_string()).collect();
        write!(f, "C_{}({})", self.n, s.join(","))
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    cap: usize,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// A subgraph together with the original label of each of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub graph: Graph,
    /// `labels[i]` is the original vertex behind local vertex `i`.
    pub labels: Vec<usize>,
}

impl Induced {
    /// Maps a set of local vertices back to original labels.
    pub fn lift(&self, local: VertexSet) -> VertexSet {
        local.iter().map(|v| self.labels[v]).collect()
    }
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
            cap: DEFAULT_VERTEX_CAP,
        })
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u] = g.adj[u].with(v);
            g.adj[v] = g.adj[v].with(u);
        }
        g.assert_simple();
        Ok(g)
    }

    fn from_adjacency(adj: Vec<VertexSet>, cap: usize) -> Self {
        let g = Graph { n: adj.len(), adj, cap };
        g.assert_simple();
        g
    }

    fn assert_simple(&self) {
        let all = VertexSet::full(self.n);
        for (v, &nb) in self.adj.iter().enumerate() {
            assert!(!nb.contains(v), "self-loop at {v}");
            assert!(nb.is_subset(all), "neighbor out of range at {v}");
            for u in nb {
                assert!(self.adj[u].contains(v), "asymmetric adjacency {v}-{u}");
            }
        }
    }

    pub fn complete(n: usize) -> Result<Self> {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// The cycle `C_n` (requires `n >= 3`).
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Precondition(format!("cycle needs n >= 3, got {n}")));
        }
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Self> {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    /// `C_n(S)`: `i ~ j` iff the circular distance between them lies in `S`.
    pub fn circulant(spec: &CirculantSpec) -> Result<Self> {
        let n = spec.n();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let dist = (j - i).min(n - (j - i));
                if spec.connections().contains(&dist) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(n, edges)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self> {
        let shift = self.n;
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)));
        let mut g = Graph::from_edges(self.n + other.n, edges.collect::<Vec<_>>())?;
        g.cap = self.cap.max(other.cap);
        Ok(g)
    }

    /// Replaces the enumeration cap (at most [`MAX_VERTICES`]).
    pub fn with_vertex_cap(mut self, cap: usize) -> Result<Self> {
        if cap > MAX_VERTICES {
            return Err(Error::TooManyVertices { n: cap, max: MAX_VERTICES });
        }
        self.cap = cap;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_cap(&self) -> usize {
        self.cap
    }

    /// Fails with [`Error::SizeCap`] when the graph is above its cap.
    pub fn check_cap(&self) -> Result<()> {
        if self.n > self.cap {
            Err(Error::SizeCap { n: self.n, cap: self.cap })
        } else {
            Ok(())
        }
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Per-vertex adjacency masks; equal keys mean equal labeled graphs.
    pub fn adjacency_key(&self) -> Vec<u64> {
        self.adj.iter().map(|a| a.bits()).collect()
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n)
            .map(|v| all.difference(self.adj[v]).without(v))
            .collect();
        Graph::from_adjacency(adj, self.cap)
    }

    /// `N[F]`: `F` together with every vertex adjacent to some member of `F`.
    pub fn closed_neighborhood(&self, f: VertexSet) -> VertexSet {
        f.iter().fold(f, |acc, v| acc.union(self.adj[v]))
    }

    pub fn open_neighborhood(&self, f: VertexSet) -> VertexSet {
        self.closed_neighborhood(f).difference(f)
    }

    pub fn induced_subgraph(&self, w: VertexSet) -> Induced {
        let w = w.intersection(self.vertices());
        let labels = w.to_vec();
        let mut local = vec![0usize; self.n];
        for (i, &v) in labels.iter().enumerate() {
            local[v] = i;
        }
        let adj = labels
            .iter()
            .map(|&v| self.adj[v].intersection(w).iter().map(|u| local[u]).collect())
            .collect();
        Induced {
            graph: Graph::from_adjacency(adj, self.cap),
            labels,
        }
    }

    /// `G_F = G \ N[F]`, relabeled, with the map back to original vertices.
    pub fn private_subgraph(&self, f: VertexSet) -> Induced {
        self.induced_subgraph(self.vertices().difference(self.closed_neighborhood(f)))
    }

    /// Connected components sorted by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen.contains(v) {
                continue;
            }
            let mut comp = VertexSet::singleton(v);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let next = self.open_neighborhood(frontier).difference(comp);
                comp = comp.union(next);
                frontier = next;
            }
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// `Some(k)` iff the graph is a single cycle on `k >= 3` vertices.
    pub fn is_cycle_graph(&self) -> Option<usize> {
        let ok = self.n >= 3 && self.adj.iter().all(|a| a.len() == 2) && self.is_connected();
        ok.then_some(self.n)
    }

    /// `Some(k)` iff the complement is a cycle on `k` vertices.
    pub fn is_complement_of_cycle(&self) -> Option<usize> {
        self.complement().is_cycle_graph()
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.adj[v]))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges()
            .all(|(u, v)| self.adj[u].is_disjoint(self.adj[v]))
    }

    /// Degrees in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.is_clique(self.vertices())
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![None::<bool>; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let c = color[v].unwrap();
                for u in self.adj[v] {
                    match color[u] {
                        None => {
                            color[u] = Some(!c);
                            stack.push(u);
                        }
                        Some(cu) if cu == c => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// Applies `perm` (old label -> new label).
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Precondition("permutation length mismatch".into()));
        }
        let mut g = Graph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))?;
        g.cap = self.cap;
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circ(n: usize, s: &[usize]) -> Graph {
        Graph::circulant(&CirculantSpec::new(n, s.iter().copied()).unwrap()).unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn circulant_examples() {
        assert_eq!(circ(5, &[1]), Graph::cycle(5).unwrap());
        let k5 = circ(5, &[1, 2]);
        assert_eq!(k5.edge_count(), 10);
        assert_eq!(k5, Graph::complete(5).unwrap());
        let m = circ(6, &[3]);
        assert_eq!(m.edges().collect::<Vec<_>>(), vec![(0, 3), (1, 4), (2, 5)]);
        assert_eq!(circ(7, &[1, 2]).degree_sequence(), vec![4; 7]);
    }

    #[test]
    fn circulant_rejects_bad_connections() {
        assert!(CirculantSpec::new(6, [4]).is_err());
        assert!(CirculantSpec::new(6, [0]).is_err());
        assert!(CirculantSpec::new(6, [1, 1]).is_err());
        assert!(CirculantSpec::new(0, []).is_err());
    }

    #[test]
    fn complement_examples() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.complement().edge_count(), 0);
        assert_eq!(circ(7, &[1, 2]).complement(), circ(7, &[3]));
        assert_eq!(circ(7, &[3]).is_cycle_graph(), Some(7));
    }

    #[test]
    fn closed_neighborhood_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.closed_neighborhood(VertexSet::EMPTY), VertexSet::EMPTY);
        assert_eq!(c5.closed_neighborhood(set(&[0])), set(&[4, 0, 1]));
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.closed_neighborhood(set(&[2])), k5.vertices());
    }

    #[test]
    fn private_subgraph_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.private_subgraph(VertexSet::EMPTY).graph, c5);
        let gf = c5.private_subgraph(set(&[0]));
        assert_eq!(gf.labels, vec![2, 3]);
        assert_eq!(gf.graph, Graph::complete(2).unwrap());

        let g = circ(7, &[1, 2]);
        assert_eq!(g.closed_neighborhood(set(&[0])), set(&[5, 6, 0, 1, 2]));
        let gf = g.private_subgraph(set(&[0]));
        assert_eq!(gf.labels, vec![3, 4]);
        assert_eq!(gf.graph.edge_count(), 1);
    }

    #[test]
    fn induced_subgraph_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.induced_subgraph(c5.vertices()).graph, c5);
        assert_eq!(c5.induced_subgraph(VertexSet::EMPTY).graph.n(), 0);
        assert_eq!(c5.induced_subgraph(set(&[0, 1, 2])).graph, Graph::path(3).unwrap());
    }

    #[test]
    fn components_examples() {
        let comps = circ(6, &[3]).components();
        assert_eq!(comps, vec![set(&[0, 3]), set(&[1, 4]), set(&[2, 5])]);
        assert_eq!(Graph::cycle(5).unwrap().components().len(), 1);
        assert_eq!(Graph::empty(4).unwrap().components().len(), 4);
    }

    #[test]
    fn shape_recognizers() {
        assert_eq!(Graph::cycle(5).unwrap().is_cycle_graph(), Some(5));
        assert_eq!(Graph::complete(4).unwrap().is_cycle_graph(), None);
        let two_c4 = Graph::cycle(4).unwrap().disjoint_union(&Graph::cycle(4).unwrap()).unwrap();
        assert_eq!(two_c4.is_cycle_graph(), None);

        assert_eq!(circ(7, &[1, 2]).is_complement_of_cycle(), Some(7));
        assert_eq!(circ(6, &[2, 3]).is_complement_of_cycle(), Some(6));
        assert_eq!(Graph::cycle(5).unwrap().is_complement_of_cycle(), Some(5));
    }

    #[test]
    fn triangle_free_examples() {
        assert!(Graph::cycle(5).unwrap().is_triangle_free());
        assert!(!Graph::complete(3).unwrap().is_triangle_free());
        assert!(circ(13, &[2, 3]).is_triangle_free());
    }

    #[test]
    fn degree_sequences() {
        assert_eq!(Graph::complete(2).unwrap().degree_sequence(), vec![1, 1]);
        assert_eq!(Graph::cycle(5).unwrap().degree_sequence(), vec![2; 5]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::from_edges(2, [(0, 2)]), Err(Error::VertexOutOfRange { vertex: 2, n: 2 }));
        assert_eq!(Graph::from_edges(2, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert!(Graph::empty(65).is_err());
        let g = Graph::empty(30).unwrap();
        assert_eq!(g.check_cap(), Err(Error::SizeCap { n: 30, cap: 24 }));
        assert!(g.with_vertex_cap(30).unwrap().check_cap().is_ok());
    }

    #[test]
    fn vertex_set_serde() {
        let s = set(&[1, 4, 9]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, "[1,4,9]");
        assert_eq!(serde_json::from_str::<VertexSet>(&json).unwrap(), s);
        assert!(serde_json::from_str::<VertexSet>("[64]").is_err());
    }
}
