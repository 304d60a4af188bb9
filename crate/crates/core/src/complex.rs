//! Simplicial complexes, reduced integer homology and the Reisner
//! Cohen–Macaulay test for independence complexes.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::indsets::{enumerate_independent_sets, maximal_independent_sets_within};
use crate::snf::{smith_form, IntMatrix};

/// A complex given by its facets. The empty facet list is the void complex;
/// `[∅]` is the complex whose only face is the empty set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialComplex {
    ground: usize,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Drops non-maximal and repeated generators; facets come out sorted.
    pub fn from_facets(ground: usize, generators: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        let all = VertexSet::full(ground);
        let mut gens: Vec<VertexSet> = generators.into_iter().collect();
        if let Some(bad) = gens.iter().find(|f| !f.is_subset(all)) {
            return Err(Error::VertexOutOfRange {
                vertex: bad.difference(all).first().unwrap_or(0),
                n: ground,
            });
        }
        gens.sort_unstable();
        gens.dedup();
        let facets: Vec<VertexSet> = gens
            .iter()
            .copied()
            .filter(|&f| !gens.iter().any(|&h| h != f && f.is_subset(h)))
            .collect();
        Ok(SimplicialComplex { ground, facets })
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `max |F| - 1`; `-1` for `{∅}` and, by convention, for the void complex.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize - 1).max().unwrap_or(-1)
    }

    pub fn contains_face(&self, f: VertexSet) -> bool {
        self.facets.iter().any(|&h| f.is_subset(h))
    }

    /// Faces grouped by dimension: entry `i` holds the `(i-1)`-faces, sorted.
    pub fn faces_by_dim(&self) -> Vec<Vec<VertexSet>> {
        let mut levels: Vec<BTreeSet<VertexSet>> = vec![BTreeSet::new(); (self.dim() + 2) as usize];
        if self.is_void() {
            return Vec::new();
        }
        for &facet in &self.facets {
            let bits = facet.bits();
            // Enumerate submasks of the facet.
            let mut sub = bits;
            loop {
                let s = VertexSet::from_bits(sub);
                levels[s.len()].insert(s);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & bits;
            }
        }
        levels.into_iter().map(|l| l.into_iter().collect()).collect()
    }

    /// `(f_{-1}, f_0, ..., f_dim)`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_dim().iter().map(Vec::len).collect()
    }

    /// `Σ_{i >= -1} (-1)^i f_i`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 0 { -(f as i64) } else { f as i64 })
            .sum()
    }

    /// `{A \ F : F ⊆ A ∈ Δ}` on the same ground set.
    pub fn link(&self, f: VertexSet) -> Result<SimplicialComplex> {
        if !self.contains_face(f) {
            return Err(Error::NotAFace(f.to_string()));
        }
        SimplicialComplex::from_facets(
            self.ground,
            self.facets
                .iter()
                .filter(|&&h| f.is_subset(h))
                .map(|&h| h.difference(f)),
        )
    }

    /// Applies `perm` (old label -> new label) to every facet.
    pub fn relabel(&self, perm: &[usize]) -> Result<SimplicialComplex> {
        SimplicialComplex::from_facets(
            self.ground,
            self.facets.iter().map(|f| f.iter().map(|v| perm[v]).collect()),
        )
    }
}

/// `Δ(Ḡ)`: facets are the maximal independent sets of `g`.
pub fn independence_complex(g: &Graph) -> Result<SimplicialComplex> {
    g.check_cap()?;
    SimplicialComplex::from_facets(g.n(), maximal_independent_sets_within(g, g.vertices()))
}

/// Boundary map `∂_i : C_i -> C_{i-1}` in the bases of sorted faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    /// Dimension of the domain faces (`0` is the augmentation to `C_{-1}`).
    pub dim: isize,
    pub matrix: IntMatrix,
}

fn boundary_from_levels(levels: &[Vec<VertexSet>]) -> Vec<BoundaryMatrix> {
    let mut out = Vec::new();
    for k in 1..levels.len() {
        let (lower, upper) = (&levels[k - 1], &levels[k]);
        let index: HashMap<VertexSet, usize> = lower.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut m = IntMatrix::zeros(lower.len(), upper.len());
        for (col, &face) in upper.iter().enumerate() {
            for (j, v) in face.iter().enumerate() {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                m.set(index[&face.without(v)], col, sign);
            }
        }
        out.push(BoundaryMatrix { dim: k as isize - 1, matrix: m });
    }
    out
}

/// The reduced chain complex: `∂_0, ∂_1, ..., ∂_dim`.
pub fn boundary_matrices(c: &SimplicialComplex) -> Vec<BoundaryMatrix> {
    boundary_from_levels(&c.faces_by_dim())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyGroup {
    pub dim: isize,
    /// Free rank (Betti number over ℚ).
    pub rank: usize,
    /// Invariant factors greater than one.
    pub torsion: Vec<BigUint>,
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

/// Reduced integral homology in dimensions `-1..=dim`.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub groups: Vec<HomologyGroup>,
}

impl HomologyProfile {
    pub fn group(&self, dim: isize) -> Option<&HomologyGroup> {
        self.groups.iter().find(|g| g.dim == dim)
    }

    pub fn betti_rational(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.rank).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.groups
            .iter()
            .map(|g| if g.dim.rem_euclid(2) == 0 { g.rank as i64 } else { -(g.rank as i64) })
            .sum()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.groups.iter().all(|g| g.torsion.is_empty())
    }

    /// Betti number over a field of characteristic `k` in dimension `dim`.
    /// Under `CharSpec::All` every torsion factor counts, so the result is
    /// zero exactly when the group vanishes over every field.
    pub fn betti_in(&self, dim: isize, k: CharSpec) -> usize {
        let Some(g) = self.group(dim) else { return 0 };
        let below = self.group(dim - 1).map_or(&[][..], |g| &g.torsion[..]);
        let count = |t: &[BigUint]| -> usize {
            match k {
                CharSpec::Zero => 0,
                CharSpec::All => t.len(),
                CharSpec::Prime(p) => {
                    let p = BigUint::from(p);
                    t.iter().filter(|d| d.is_multiple_of(&p)).count()
                }
            }
        };
        g.rank + count(&g.torsion) + count(below)
    }

    /// Does `H̃_dim` vanish over every field of characteristic `k`?
    pub fn vanishes_in(&self, dim: isize, k: CharSpec) -> bool {
        self.betti_in(dim, k) == 0
    }
}

pub fn homology(c: &SimplicialComplex) -> HomologyProfile {
    let levels = c.faces_by_dim();
    if levels.is_empty() {
        return HomologyProfile::default();
    }
    let forms: Vec<_> = boundary_from_levels(&levels)
        .iter()
        .map(|b| smith_form(&b.matrix))
        .collect();
    // forms[k] is the form of ∂_k, mapping level k+1 to level k.
    let rank = |k: usize| forms.get(k).map_or(0, |f| f.rank());
    let groups = (0..levels.len())
        .map(|lvl| {
            let outgoing = if lvl == 0 { 0 } else { rank(lvl - 1) };
            let incoming = rank(lvl);
            HomologyGroup {
                dim: lvl as isize - 1,
                rank: levels[lvl].len() - outgoing - incoming,
                torsion: forms.get(lvl).map(|f| f.torsion()).unwrap_or_default(),
            }
        })
        .collect();
    HomologyProfile { groups }
}

/// Field characteristic selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum CharSpec {
    /// Every field at once.
    All,
    Zero,
    Prime(u64),
}

impl CharSpec {
    pub fn prime(p: u64) -> Result<Self> {
        let is_prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        if is_prime {
            Ok(CharSpec::Prime(p))
        } else {
            Err(Error::Precondition(format!("{p} is not prime")))
        }
    }
}

impl fmt::Display for CharSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharSpec::All => write!(f, "all"),
            CharSpec::Zero => write!(f, "0"),
            CharSpec::Prime(p) => write!(f, "{p}"),
        }
    }
}

impl FromStr for CharSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "all" | "ALL" => Ok(CharSpec::All),
            "0" => Ok(CharSpec::Zero),
            other => {
                let p: u64 = other
                    .parse()
                    .map_err(|_| Error::Precondition(format!("bad characteristic {other:?}")))?;
                CharSpec::prime(p)
            }
        }
    }
}

impl TryFrom<String> for CharSpec {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<CharSpec> for String {
    fn from(k: CharSpec) -> String {
        k.to_string()
    }
}

/// A face whose link has non-vanishing homology below its dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmWitness {
    pub face: VertexSet,
    pub dim: isize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmReport {
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<CmWitness>,
}

/// First dimension below the top where `Δ(g)` has homology over `k`.
fn reisner_failure(g: &Graph, k: CharSpec) -> Result<Option<isize>> {
    if !g.isolated_vertices().is_empty() {
        // A cone: acyclic.
        return Ok(None);
    }
    let complex = independence_complex(g)?;
    let profile = homology(&complex);
    let top = complex.dim();
    Ok((-1..top).find(|&i| !profile.vanishes_in(i, k)))
}

/// Reisner's criterion on `Δ(Ḡ)`: for every independent `F` (including
/// `∅`), the link `Δ(Ḡ_F)` has vanishing reduced homology over `k` below
/// its dimension. Links are memoized on the labeled adjacency of `G_F`.
pub fn is_cm(g: &Graph, k: CharSpec) -> Result<CmReport> {
    let mut memo: HashMap<Vec<u64>, Option<isize>> = HashMap::new();
    for face in enumerate_independent_sets(g)? {
        let link = g.private_subgraph(face).graph;
        let key = link.adjacency_key();
        let failure = match memo.get(&key) {
            Some(&hit) => hit,
            None => {
                let fresh = reisner_failure(&link, k)?;
                memo.insert(key, fresh);
                fresh
            }
        };
        if let Some(dim) = failure {
            return Ok(CmReport {
                holds: false,
                witness: Some(CmWitness { face, dim }),
            });
        }
    }
    Ok(CmReport { holds: true, witness: None })
}

/// Reduced Euler characteristic from the homology side, as a cross-check.
pub fn euler_from_homology(c: &SimplicialComplex) -> i64 {
    homology(c).euler_characteristic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::CirculantSpec;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn cx(ground: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(ground, facets.iter().map(|f| set(f))).unwrap()
    }

    #[test]
    fn independence_complex_examples() {
        let k3 = independence_complex(&Graph::complete(3).unwrap()).unwrap();
        assert_eq!(k3.facets(), &[set(&[0]), set(&[1]), set(&[2])]);
        let c5 = independence_complex(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(c5.facets().len(), 5);
        assert!(c5.facets().iter().all(|f| f.len() == 2));
        let e3 = independence_complex(&Graph::empty(3).unwrap()).unwrap();
        assert_eq!(e3.facets(), &[set(&[0, 1, 2])]);
    }

    #[test]
    fn from_facets_drops_non_maximal() {
        let c = cx(4, &[&[0, 1], &[0], &[0, 1], &[2, 3]]);
        assert_eq!(c.facets(), &[set(&[0, 1]), set(&[2, 3])]);
        assert!(SimplicialComplex::from_facets(2, [set(&[3])]).is_err());
    }

    #[test]
    fn link_examples() {
        let c5 = independence_complex(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(c5.link(VertexSet::EMPTY).unwrap(), c5);
        let l = c5.link(set(&[0, 2])).unwrap();
        assert_eq!(l.facets(), &[VertexSet::EMPTY]);
        assert_eq!(l.dim(), -1);
        assert!(matches!(c5.link(set(&[0, 1])), Err(Error::NotAFace(_))));
        let l0 = c5.link(set(&[0])).unwrap();
        assert_eq!(l0.facets(), &[set(&[2]), set(&[3])]);
    }

    #[test]
    fn boundary_of_single_edge() {
        let edge = cx(2, &[&[0, 1]]);
        let b = boundary_matrices(&edge);
        assert_eq!(b.len(), 2);
        assert_eq!(b[0].matrix, IntMatrix::from_rows(vec![vec![1, 1]]));
        assert_eq!(b[1].matrix, IntMatrix::from_rows(vec![vec![-1], vec![1]]));
    }

    #[test]
    fn boundary_squares_to_zero() {
        let c = cx(5, &[&[0, 1, 2, 3], &[2, 3, 4], &[1, 4]]);
        let b = boundary_matrices(&c);
        for w in b.windows(2) {
            assert!(w[0].matrix.checked_mul(&w[1].matrix).unwrap().is_zero());
        }
    }

    #[test]
    fn hollow_triangle_rank() {
        let t = cx(3, &[&[0, 1], &[0, 2], &[1, 2]]);
        let b = boundary_matrices(&t);
        assert_eq!(smith_form(&b[1].matrix).rank(), 2);
        let h = homology(&t);
        assert_eq!(h.betti_rational(), vec![0, 0, 1]);
    }

    #[test]
    fn simplex_is_acyclic() {
        for n in 1..=5 {
            let s = SimplicialComplex::from_facets(n, [VertexSet::full(n)]).unwrap();
            assert!(homology(&s).groups.iter().all(HomologyGroup::is_trivial));
        }
    }

    #[test]
    fn empty_face_complex() {
        let e = SimplicialComplex::from_facets(0, [VertexSet::EMPTY]).unwrap();
        let h = homology(&e);
        assert_eq!(h.groups.len(), 1);
        assert_eq!((h.groups[0].dim, h.groups[0].rank), (-1, 1));
        let void = SimplicialComplex::from_facets(3, []).unwrap();
        assert!(homology(&void).groups.is_empty());
    }

    #[test]
    fn pentagon_is_a_circle() {
        let c5 = independence_complex(&Graph::cycle(5).unwrap()).unwrap();
        let h = homology(&c5);
        assert_eq!(h.betti_rational(), vec![0, 0, 1]);
        assert!(h.is_torsion_free());
    }

    #[test]
    fn char_spec_parsing() {
        assert_eq!("all".parse::<CharSpec>().unwrap(), CharSpec::All);
        assert_eq!("0".parse::<CharSpec>().unwrap(), CharSpec::Zero);
        assert_eq!("7".parse::<CharSpec>().unwrap(), CharSpec::Prime(7));
        assert!("4".parse::<CharSpec>().is_err());
        assert!("1".parse::<CharSpec>().is_err());
        assert!("x".parse::<CharSpec>().is_err());
        assert_eq!(serde_json::to_string(&CharSpec::Prime(3)).unwrap(), "\"3\"");
    }

    #[test]
    fn cm_examples() {
        assert!(is_cm(&Graph::cycle(5).unwrap(), CharSpec::All).unwrap().holds);
        let c7 = is_cm(&Graph::cycle(7).unwrap(), CharSpec::All).unwrap();
        assert!(!c7.holds);
        assert_eq!(c7.witness.unwrap().face, VertexSet::EMPTY);
        for n in 1..=6 {
            assert!(is_cm(&Graph::complete(n).unwrap(), CharSpec::All).unwrap().holds);
        }
        let k4 = Graph::circulant(&CirculantSpec::new(4, [1, 2]).unwrap()).unwrap();
        assert!(is_cm(&k4, CharSpec::All).unwrap().holds);
    }

    #[test]
    fn path_p3_is_not_cm() {
        // Not pure: maximal independent sets {1} and {0, 2}.
        assert!(!is_cm(&Graph::path(3).unwrap(), CharSpec::Zero).unwrap().holds);
        assert!(is_cm(&Graph::path(4).unwrap(), CharSpec::Zero).unwrap().holds);
    }
}
