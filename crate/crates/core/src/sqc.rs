//! SQC structure: simplices, basic 5-cycles, basic 4-cycles and the vertex
//! partition built from them, plus the Gorenstein criterion for SQC graphs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// How "5-cycle" is read in the definition of a basic 5-cycle.
///
/// `Walk` takes every cycle subgraph (chords allowed) and checks adjacency of
/// high-degree vertices along the cycle. `Induced` only admits chordless
/// cycles; for those the two adjacency notions coincide.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CycleReading {
    #[default]
    Walk,
    Induced,
}

impl fmt::Display for CycleReading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CycleReading::Walk => "walk",
            CycleReading::Induced => "induced",
        })
    }
}

impl FromStr for CycleReading {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "walk" => Ok(CycleReading::Walk),
            "induced" => Ok(CycleReading::Induced),
            other => Err(Error::Precondition(format!("unknown cycle reading {other:?}"))),
        }
    }
}

/// Vertices whose closed neighborhood is a clique.
pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    g.vertices()
        .iter()
        .filter(|&v| g.is_clique(g.closed_neighborhood(VertexSet::singleton(v))))
        .collect()
}

/// Distinct simplices `N[v]`, `v` simplicial, sorted.
pub fn simplices(g: &Graph) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = simplicial_vertices(g)
        .iter()
        .map(|v| g.closed_neighborhood(VertexSet::singleton(v)))
        .collect();
    out.sort();
    out.dedup();
    out
}

fn is_basic_cycle(g: &Graph, cycle: &[usize], reading: CycleReading) -> bool {
    let k = cycle.len();
    let high = |v: usize| g.degree(v) > 2;
    let along = (0..k).all(|i| !(high(cycle[i]) && high(cycle[(i + 1) % k])));
    match reading {
        CycleReading::Walk => along,
        CycleReading::Induced => {
            along && g.induced_subgraph(cycle.iter().copied().collect()).graph.edge_count() == k
        }
    }
}

/// Every 5-cycle of `g` as a vertex sequence, once per cycle: it starts at
/// its least vertex and the second entry is smaller than the last.
pub fn five_cycles(g: &Graph) -> Vec<[usize; 5]> {
    let mut out = Vec::new();
    for v0 in 0..g.n() {
        // Every other vertex of the cycle exceeds v0.
        let above = |v: usize| v > v0;
        for v1 in g.neighbors(v0).iter().filter(|&v| above(v)) {
            for v2 in g.neighbors(v1).iter().filter(|&v| above(v) && v != v1) {
                for v3 in g.neighbors(v2).iter().filter(|&v| above(v) && v != v1) {
                    for v4 in g.neighbors(v3).iter().filter(|&v| above(v) && v != v1 && v != v2) {
                        if v1 < v4 && g.has_edge(v4, v0) {
                            out.push([v0, v1, v2, v3, v4]);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Basic 5-cycles under the default (walk) reading.
pub fn basic_five_cycles(g: &Graph) -> Vec<[usize; 5]> {
    basic_five_cycles_with(g, CycleReading::Walk)
}

pub fn basic_five_cycles_with(g: &Graph, reading: CycleReading) -> Vec<[usize; 5]> {
    five_cycles(g)
        .into_iter()
        .filter(|c| is_basic_cycle(g, c, reading))
        .collect()
}

/// A basic 4-cycle `b1 b2 c2 c1` with basic vertices `{b1, b2}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FourCycleBasics {
    pub cycle: [usize; 4],
    pub basics: VertexSet,
}

fn on_simplex_or_basic_five(g: &Graph, reading: CycleReading) -> VertexSet {
    let mut covered = VertexSet::EMPTY;
    for s in simplices(g) {
        covered = covered.union(s);
    }
    for c in basic_five_cycles_with(g, reading) {
        covered = covered.union(c.iter().copied().collect());
    }
    covered
}

/// Basic 4-cycles under the default (walk) reading.
pub fn basic_four_cycles(g: &Graph) -> Vec<FourCycleBasics> {
    basic_four_cycles_with(g, CycleReading::Walk)
}

pub fn basic_four_cycles_with(g: &Graph, reading: CycleReading) -> Vec<FourCycleBasics> {
    let anchored = on_simplex_or_basic_five(g, reading);
    let mut out = Vec::new();
    for (b1, b2) in g.edges() {
        if g.degree(b1) != 2 || g.degree(b2) != 2 {
            continue;
        }
        let (Some(c1), Some(c2)) = (g.neighbors(b1).without(b2).first(), g.neighbors(b2).without(b1).first())
        else {
            continue;
        };
        if c1 == c2 || !g.has_edge(c1, c2) {
            continue;
        }
        // Exactly two degree-2 vertices on the cycle.
        if g.degree(c1) == 2 || g.degree(c2) == 2 {
            continue;
        }
        if anchored.contains(c1) && anchored.contains(c2) {
            out.push(FourCycleBasics {
                cycle: [b1, b2, c2, c1],
                basics: VertexSet::singleton(b1).with(b2),
            });
        }
    }
    out
}

/// A certified partition of `V(G)` into `m` simplices, `t` basic 5-cycles
/// and the basic-vertex pairs of `r` basic 4-cycles.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SqcPartition {
    pub simplices: Vec<VertexSet>,
    pub five_cycles: Vec<[usize; 5]>,
    pub four_cycle_basics: Vec<FourCycleBasics>,
}

impl SqcPartition {
    pub fn m(&self) -> usize {
        self.simplices.len()
    }

    pub fn t(&self) -> usize {
        self.five_cycles.len()
    }

    pub fn r(&self) -> usize {
        self.four_cycle_basics.len()
    }

    /// `m + 2t + r`, the independence number of any SQC graph.
    pub fn predicted_alpha(&self) -> usize {
        self.m() + 2 * self.t() + self.r()
    }

    /// Re-checks every part against the definitions, without reusing the search.
    pub fn validate(&self, g: &Graph, reading: CycleReading) -> Result<()> {
        let bad = |msg: String| Err(Error::Precondition(msg));
        let mut seen = VertexSet::EMPTY;
        let mut claim = |part: VertexSet| -> Result<()> {
            if !part.is_subset(g.vertices()) {
                return Err(Error::Precondition(format!("part {part} has vertices outside the graph")));
            }
            if !seen.is_disjoint(part) {
                return Err(Error::Precondition(format!("part {part} overlaps an earlier part")));
            }
            seen = seen.union(part);
            Ok(())
        };

        for &s in &self.simplices {
            claim(s)?;
            let simplicial = s
                .iter()
                .any(|v| g.closed_neighborhood(VertexSet::singleton(v)) == s && g.is_clique(s));
            if !simplicial {
                return bad(format!("{s} is not the closed neighborhood of a simplicial vertex"));
            }
        }

        for c in &self.five_cycles {
            let set: VertexSet = c.iter().copied().collect();
            if set.len() != 5 || (0..5).any(|i| !g.has_edge(c[i], c[(i + 1) % 5])) {
                return bad(format!("{c:?} is not a 5-cycle"));
            }
            if !is_basic_cycle(g, c, reading) {
                return bad(format!("5-cycle {c:?} is not basic"));
            }
            claim(set)?;
        }
        let anchored = on_simplex_or_basic_five(g, reading);

        for q in &self.four_cycle_basics {
            let c = q.cycle;
            let set: VertexSet = c.iter().copied().collect();
            if set.len() != 4 || (0..4).any(|i| !g.has_edge(c[i], c[(i + 1) % 4])) {
                return bad(format!("{c:?} is not a 4-cycle"));
            }
            let deg2: VertexSet = c.iter().copied().filter(|&v| g.degree(v) == 2).collect();
            if deg2 != q.basics || deg2.len() != 2 {
                return bad(format!("basic vertices of {c:?} should be {deg2}, got {}", q.basics));
            }
            let pair = deg2.to_vec();
            if !g.has_edge(pair[0], pair[1]) {
                return bad(format!("basic vertices {deg2} of {c:?} are not adjacent"));
            }
            if !set.difference(deg2).is_subset(anchored) {
                return bad(format!("{c:?} has a non-basic vertex in no simplex or basic 5-cycle"));
            }
            claim(q.basics)?;
        }

        if seen != g.vertices() {
            return bad(format!("parts cover {seen}, not all of {}", g.vertices()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum PartKind {
    Simplex,
    FiveCycle,
    FourBasics,
}

struct Candidate {
    set: VertexSet,
    kind: PartKind,
    index: usize,
}

struct Search<'a> {
    candidates: &'a [Candidate],
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn cover(&mut self, uncovered: VertexSet) -> bool {
        if uncovered.is_empty() {
            return true;
        }
        // Most constrained vertex first; ties go to the least vertex.
        let mut best: Option<(usize, usize)> = None;
        for v in uncovered.iter() {
            let count = self
                .candidates
                .iter()
                .filter(|c| c.set.contains(v) && c.set.is_subset(uncovered))
                .count();
            if best.is_none_or(|(_, b)| count < b) {
                best = Some((v, count));
            }
            if count == 0 {
                return false;
            }
        }
        let (v, _) = best.expect("uncovered is nonempty");
        for i in 0..self.candidates.len() {
            let c = &self.candidates[i];
            if c.set.contains(v) && c.set.is_subset(uncovered) {
                self.chosen.push(i);
                if self.cover(uncovered.difference(c.set)) {
                    return true;
                }
                self.chosen.pop();
            }
        }
        false
    }
}

/// Searches for an SQC partition under the default (walk) reading.
pub fn find_sqc_partition(g: &Graph) -> Result<Option<SqcPartition>> {
    find_sqc_partition_with(g, CycleReading::Walk)
}

pub fn find_sqc_partition_with(g: &Graph, reading: CycleReading) -> Result<Option<SqcPartition>> {
    g.check_cap()?;
    let simplex_parts = simplices(g);
    let mut fives = basic_five_cycles_with(g, reading);
    // One candidate per vertex set; chorded sets may carry several cycles.
    fives.sort_by_key(|c| c.iter().copied().collect::<VertexSet>());
    fives.dedup_by_key(|c| c.iter().copied().collect::<VertexSet>());
    let fours = basic_four_cycles_with(g, reading);

    let mut candidates: Vec<Candidate> = Vec::new();
    candidates.extend(simplex_parts.iter().enumerate().map(|(index, &set)| Candidate {
        set,
        kind: PartKind::Simplex,
        index,
    }));
    candidates.extend(fives.iter().enumerate().map(|(index, c)| Candidate {
        set: c.iter().copied().collect(),
        kind: PartKind::FiveCycle,
        index,
    }));
    candidates.extend(fours.iter().enumerate().map(|(index, q)| Candidate {
        set: q.basics,
        kind: PartKind::FourBasics,
        index,
    }));
    candidates.sort_by_key(|c| (c.set.first(), c.kind, c.set));

    let mut search = Search { candidates: &candidates, chosen: Vec::new() };
    if !search.cover(g.vertices()) {
        return Ok(None);
    }
    let mut partition = SqcPartition::default();
    let mut chosen: Vec<&Candidate> = search.chosen.iter().map(|&i| &candidates[i]).collect();
    chosen.sort_by_key(|c| (c.kind, c.set));
    for c in chosen {
        match c.kind {
            PartKind::Simplex => partition.simplices.push(simplex_parts[c.index]),
            PartKind::FiveCycle => partition.five_cycles.push(fives[c.index]),
            PartKind::FourBasics => partition.four_cycle_basics.push(fours[c.index].clone()),
        }
    }
    partition.validate(g, reading)?;
    Ok(Some(partition))
}

/// True iff the walk and induced readings disagree on SQC membership.
pub fn readings_disagree(g: &Graph) -> Result<bool> {
    let walk = find_sqc_partition_with(g, CycleReading::Walk)?.is_some();
    let induced = find_sqc_partition_with(g, CycleReading::Induced)?.is_some();
    Ok(walk != induced)
}

/// Gorenstein verdict for an SQC graph without isolated vertices: true iff
/// every component is an edge or a 5-cycle.
pub fn sqc_gorenstein(g: &Graph) -> Result<bool> {
    sqc_gorenstein_with(g, CycleReading::Walk)
}

pub fn sqc_gorenstein_with(g: &Graph, reading: CycleReading) -> Result<bool> {
    if g.n() == 0 {
        return Err(Error::Precondition("the graph has no vertices".into()));
    }
    if let Some(v) = g.isolated_vertices().first() {
        return Err(Error::IsolatedVertex(v));
    }
    if find_sqc_partition_with(g, reading)?.is_none() {
        return Err(Error::NotSqc);
    }
    Ok(g.components().into_iter().all(|c| {
        let h = g.induced_subgraph(c).graph;
        (h.n() == 2 && h.edge_count() == 1) || h.is_cycle_graph() == Some(5)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::CirculantSpec;
    use crate::indsets::{independence_number, is_well_covered};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn c5_plus_chord() -> Graph {
        Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap()
    }

    fn bridged_c5s() -> Graph {
        let c = Graph::cycle(5).unwrap();
        let two = c.disjoint_union(&c).unwrap();
        Graph::from_edges(10, two.edges().chain([(0, 5)])).unwrap()
    }

    /// C4 on 0-1-2-3 with pendants 4 on 0 and 5 on 3.
    fn c4_with_pendants() -> Graph {
        Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (3, 5)]).unwrap()
    }

    #[test]
    fn simplicial_vertex_examples() {
        assert_eq!(simplicial_vertices(&Graph::complete(4).unwrap()), set(&[0, 1, 2, 3]));
        assert!(simplicial_vertices(&Graph::cycle(5).unwrap()).is_empty());
        assert_eq!(simplicial_vertices(&Graph::path(4).unwrap()), set(&[0, 3]));
    }

    #[test]
    fn duplicate_simplices_are_merged() {
        assert_eq!(simplices(&Graph::complete(3).unwrap()), vec![set(&[0, 1, 2])]);
    }

    #[test]
    fn five_cycle_enumeration() {
        assert_eq!(five_cycles(&Graph::cycle(5).unwrap()), vec![[0, 1, 2, 3, 4]]);
        assert_eq!(five_cycles(&Graph::complete(5).unwrap()).len(), 12);
        assert!(five_cycles(&Graph::cycle(6).unwrap()).is_empty());
    }

    #[test]
    fn basic_five_cycle_examples() {
        assert_eq!(basic_five_cycles(&Graph::cycle(5).unwrap()).len(), 1);
        let b = bridged_c5s();
        assert_eq!(basic_five_cycles(&b).len(), 2);
        assert_eq!(basic_five_cycles_with(&b, CycleReading::Induced).len(), 2);
    }

    #[test]
    fn chord_example_depends_on_reading() {
        let g = c5_plus_chord();
        // Chord endpoints 0 and 2 are adjacent in G but not along the cycle.
        assert!(basic_five_cycles_with(&g, CycleReading::Induced).is_empty());
        assert_eq!(basic_five_cycles_with(&g, CycleReading::Walk), vec![[0, 1, 2, 3, 4]]);
        // Both readings still make it SQC (via a simplex on vertex 1 otherwise).
        assert!(!readings_disagree(&g).unwrap());
    }

    #[test]
    fn basic_four_cycle_examples() {
        assert!(basic_four_cycles(&Graph::cycle(4).unwrap()).is_empty());
        assert!(basic_four_cycles(&Graph::complete(4).unwrap()).is_empty());
        let q = basic_four_cycles(&c4_with_pendants());
        assert_eq!(q.len(), 1);
        assert_eq!(q[0].basics, set(&[1, 2]));
        assert_eq!(q[0].cycle, [1, 2, 3, 0]);
    }

    #[test]
    fn partition_examples() {
        let p = find_sqc_partition(&Graph::cycle(5).unwrap()).unwrap().unwrap();
        assert_eq!((p.m(), p.t(), p.r()), (0, 1, 0));

        let p = find_sqc_partition(&Graph::complete(2).unwrap()).unwrap().unwrap();
        assert_eq!((p.m(), p.t(), p.r()), (1, 0, 0));

        let p = find_sqc_partition(&Graph::path(4).unwrap()).unwrap().unwrap();
        assert_eq!(p.simplices, vec![set(&[0, 1]), set(&[2, 3])]);

        assert!(find_sqc_partition(&Graph::cycle(7).unwrap()).unwrap().is_none());
        assert!(find_sqc_partition(&Graph::cycle(4).unwrap()).unwrap().is_none());

        let p = find_sqc_partition(&c4_with_pendants()).unwrap().unwrap();
        assert_eq!((p.m(), p.t(), p.r()), (2, 0, 1));
    }

    #[test]
    fn empty_graph_is_vacuously_sqc() {
        let g = Graph::empty(0).unwrap();
        assert_eq!(find_sqc_partition(&g).unwrap(), Some(SqcPartition::default()));
        assert!(sqc_gorenstein(&g).is_err());
    }

    #[test]
    fn alpha_matches_part_counts() {
        for g in [
            Graph::cycle(5).unwrap(),
            Graph::path(4).unwrap(),
            c4_with_pendants(),
            bridged_c5s(),
            c5_plus_chord(),
            Graph::complete(4).unwrap(),
        ] {
            let p = find_sqc_partition(&g).unwrap().unwrap();
            assert_eq!(independence_number(&g).unwrap(), p.predicted_alpha());
            assert!(is_well_covered(&g).unwrap());
        }
    }

    #[test]
    fn gorenstein_examples() {
        let k2 = Graph::complete(2).unwrap();
        let g = k2.disjoint_union(&k2).unwrap().disjoint_union(&Graph::cycle(5).unwrap()).unwrap();
        assert!(sqc_gorenstein(&g).unwrap());
        assert!(!sqc_gorenstein(&Graph::path(4).unwrap()).unwrap());
        assert!(!sqc_gorenstein(&bridged_c5s()).unwrap());
    }

    #[test]
    fn gorenstein_errors() {
        assert!(matches!(sqc_gorenstein(&Graph::cycle(7).unwrap()), Err(Error::NotSqc)));
        let g = Graph::complete(2).unwrap().disjoint_union(&Graph::empty(1).unwrap()).unwrap();
        assert!(matches!(sqc_gorenstein(&g), Err(Error::IsolatedVertex(2))));
    }

    #[test]
    fn validate_rejects_bad_partitions() {
        let g = Graph::path(4).unwrap();
        let overlap = SqcPartition { simplices: vec![set(&[0, 1]), set(&[1, 2])], ..Default::default() };
        assert!(overlap.validate(&g, CycleReading::Walk).is_err());
        let short = SqcPartition { simplices: vec![set(&[0, 1])], ..Default::default() };
        assert!(short.validate(&g, CycleReading::Walk).is_err());
        let not_simplex = SqcPartition { simplices: vec![set(&[0, 1]), set(&[1, 2, 3])], ..Default::default() };
        assert!(not_simplex.validate(&g, CycleReading::Walk).is_err());
    }

    #[test]
    fn json_shape() {
        let p = find_sqc_partition(&c4_with_pendants()).unwrap().unwrap();
        let v: serde_json::Value = serde_json::to_value(&p).unwrap();
        assert_eq!(v["simplices"], serde_json::json!([[0, 4], [3, 5]]));
        assert_eq!(v["fiveCycles"], serde_json::json!([]));
        assert_eq!(v["fourCycleBasics"][0]["basics"], serde_json::json!([1, 2]));
        assert_eq!(v["fourCycleBasics"][0]["cycle"], serde_json::json!([1, 2, 3, 0]));
        let back: SqcPartition = serde_json::from_value(v).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn circulant_c5_is_sqc() {
        let g = Graph::circulant(&CirculantSpec::new(5, [1]).unwrap()).unwrap();
        assert!(sqc_gorenstein(&g).unwrap());
    }
}
