//! Independent sets and the statistics built on them: independence number,
//! independence polynomial, well-coveredness and the W2 property.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{Graph, VertexSet};

/// Lazily yields every independent set of a graph exactly once, `∅` first,
/// in increasing bit-mask order.
pub struct IndependentSets<'g> {
    graph: &'g Graph,
    // (vertices still undecided are 0..level, chosen set, vertices blocked by it)
    stack: Vec<(usize, VertexSet, VertexSet)>,
}

impl Iterator for IndependentSets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        while let Some((level, chosen, blocked)) = self.stack.pop() {
            if level == 0 {
                return Some(chosen);
            }
            let v = level - 1;
            // LIFO: push "include" first so that "exclude" (the smaller masks) pops first.
            if !blocked.contains(v) {
                let nb = self.graph.neighbors(v);
                self.stack.push((v, chosen.with(v), blocked.union(nb)));
            }
            self.stack.push((v, chosen, blocked));
        }
        None
    }
}

pub fn enumerate_independent_sets(g: &Graph) -> Result<IndependentSets<'_>> {
    g.check_cap()?;
    Ok(IndependentSets {
        graph: g,
        stack: vec![(g.n(), VertexSet::EMPTY, VertexSet::EMPTY)],
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct IndependenceSummary {
    pub alpha: usize,
    /// `coeffs[i]` is the number of independent sets of size `i`.
    pub coeffs: Vec<BigUint>,
    /// Sizes attained by maximal independent sets.
    pub maximal_sizes: BTreeSet<usize>,
}

impl IndependenceSummary {
    /// `I(G, x)` evaluated at an integer point.
    pub fn evaluate(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &x + BigInt::from(c.clone()))
    }

    pub fn total(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    pub fn is_well_covered(&self) -> bool {
        self.maximal_sizes.len() == 1 && self.maximal_sizes.contains(&self.alpha)
    }
}

pub fn independence_summary(g: &Graph) -> Result<IndependenceSummary> {
    let all = g.vertices();
    let mut counts = vec![0u128; g.n() + 1];
    let mut maximal_sizes = BTreeSet::new();
    for s in enumerate_independent_sets(g)? {
        counts[s.len()] += 1;
        if g.closed_neighborhood(s) == all {
            maximal_sizes.insert(s.len());
        }
    }
    let alpha = counts.iter().rposition(|&c| c > 0).unwrap_or(0);
    counts.truncate(alpha + 1);
    Ok(IndependenceSummary {
        alpha,
        coeffs: counts.into_iter().map(BigUint::from).collect(),
        maximal_sizes,
    })
}

pub fn independence_number(g: &Graph) -> Result<usize> {
    Ok(independence_summary(g)?.alpha)
}

/// `I(G, -1) == (-1)^α(G)`.
pub fn euler_condition(g: &Graph) -> Result<bool> {
    let summary = independence_summary(g)?;
    Ok(euler_holds(&summary))
}

pub(crate) fn euler_holds(summary: &IndependenceSummary) -> bool {
    let expected = if summary.alpha.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    summary.evaluate(-1) == expected
}

pub fn is_well_covered(g: &Graph) -> Result<bool> {
    Ok(independence_summary(g)?.is_well_covered())
}

/// All independent sets of size `α(G)`, in increasing bit-mask order.
pub fn maximum_independent_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    let alpha = independence_number(g)?;
    Ok(enumerate_independent_sets(g)?.filter(|s| s.len() == alpha).collect())
}

/// Maximal independent sets of the subgraph induced on `within`, sorted.
///
/// Bron–Kerbosch on the complement, with pivoting.
pub fn maximal_independent_sets_within(g: &Graph, within: VertexSet) -> Vec<VertexSet> {
    fn closed(g: &Graph, v: usize) -> VertexSet {
        g.neighbors(v).with(v)
    }
    fn recurse(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r);
            }
            return;
        }
        // Every maximal set extending r contains a vertex of N[u] ∩ P for any u.
        let pivot = p
            .union(x)
            .iter()
            .min_by_key(|&u| closed(g, u).intersection(p).len())
            .expect("p is nonempty");
        for v in closed(g, pivot).intersection(p) {
            let nv = closed(g, v);
            recurse(g, r.with(v), p.difference(nv), x.difference(nv), out);
            p = p.without(v);
            x = x.with(v);
        }
    }
    let mut out = Vec::new();
    recurse(g, VertexSet::EMPTY, within.intersection(g.vertices()), VertexSet::EMPTY, &mut out);
    out.sort_unstable();
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum W2Witness {
    /// Fewer than two vertices; W2 is undefined there and reported false.
    Degenerate { n: usize },
    /// Disjoint independent sets with no disjoint maximum extensions.
    Pair { first: VertexSet, second: VertexSet },
    /// An independent set `set` and `vertex` in it such that every neighbor
    /// of `vertex` sees some other member of `set`.
    Lemma { set: VertexSet, vertex: usize },
}

impl W2Witness {
    /// Re-checks the witness against the definition, independently of the search.
    pub fn verify(&self, g: &Graph) -> Result<bool> {
        Ok(match *self {
            W2Witness::Degenerate { n } => n == g.n() && n < 2,
            W2Witness::Pair { first, second } => {
                if !(g.is_independent(first) && g.is_independent(second) && first.is_disjoint(second)) {
                    return Ok(false);
                }
                let maxima = maximum_independent_sets(g)?;
                !maxima.iter().any(|&b1| {
                    first.is_subset(b1)
                        && maxima
                            .iter()
                            .any(|&b2| second.is_subset(b2) && b1.is_disjoint(b2))
                })
            }
            W2Witness::Lemma { set, vertex } => {
                set.contains(vertex) && g.is_independent(set) && lemma_condition(g, set, vertex)
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct W2Certificate {
    pub verdict: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<W2Witness>,
}

impl W2Certificate {
    fn holds() -> Self {
        W2Certificate { verdict: true, witness: None }
    }

    fn fails(witness: W2Witness) -> Self {
        W2Certificate { verdict: false, witness: Some(witness) }
    }
}

/// Exhaustive W2 test.
///
/// The pair condition is monotone: if `(A1, A2)` extends to disjoint maximum
/// independent sets then so does every `(A1', A2')` with `A1' ⊆ A1`,
/// `A2' ⊆ A2`. For each independent `A1` (in bit-mask order) it therefore
/// suffices to test the maximal independent sets `A2` of `G - A1`, which
/// covers every disjoint pair. The first failing pair is returned.
pub fn is_w2(g: &Graph) -> Result<W2Certificate> {
    g.check_cap()?;
    if g.n() < 2 {
        return Ok(W2Certificate::fails(W2Witness::Degenerate { n: g.n() }));
    }
    let maxima = maximum_independent_sets(g)?;
    let all = g.vertices();
    for first in enumerate_independent_sets(g)? {
        let containing: Vec<VertexSet> = maxima.iter().copied().filter(|&b| first.is_subset(b)).collect();
        let partners: Vec<VertexSet> = maxima
            .iter()
            .copied()
            .filter(|&b2| containing.iter().any(|&b1| b1.is_disjoint(b2)))
            .collect();
        for second in maximal_independent_sets_within(g, all.difference(first)) {
            if !partners.iter().any(|&b2| second.is_subset(b2)) {
                return Ok(W2Certificate::fails(W2Witness::Pair { first, second }));
            }
        }
    }
    Ok(W2Certificate::holds())
}

fn lemma_condition(g: &Graph, set: VertexSet, v: usize) -> bool {
    let only_v = VertexSet::singleton(v);
    g.neighbors(v)
        .iter()
        .all(|x| set.intersection(g.neighbors(x)) != only_v)
}

/// Searches for an independent `B` and `v ∈ B` with `B ∩ N(x) ≠ {v}` for
/// every neighbor `x` of `v`. Such a pair proves the graph is not W2.
pub fn w2_lemma_witness(g: &Graph) -> Result<Option<(VertexSet, usize)>> {
    for set in enumerate_independent_sets(g)? {
        if let Some(v) = set.iter().find(|&v| lemma_condition(g, set, v)) {
            return Ok(Some((set, v)));
        }
    }
    Ok(None)
}
