//! Gorenstein decisions for edge ideals, component by component.
//!
//! A graph without isolated vertices is Gorenstein over `K` exactly when it
//! is Cohen–Macaulay over `K`, satisfies `I(G, -1) = (-1)^α(G)`, and for
//! every independent `F` with `|F| = α - 2` the complement of `G_F` is a
//! cycle on at least four vertices. Three shortcuts apply first:
//!
//! * `α <= 2`: `K1` and `K2` are Gorenstein, larger cliques are not, and for
//!   `α = 2` the graph must be the complement of a cycle;
//! * triangle-free graphs are Gorenstein iff they are W2 (the full test is
//!   still run and must agree);
//! * everything else goes through the three clauses above, cheapest first.
//!
//! A disconnected graph is Gorenstein iff every component is; isolated
//! vertices are `K1` components.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{is_cm, CharSpec, CmWitness};
use crate::error::{Error, Result};
use crate::graph::{Graph, Induced, VertexSet};
use crate::indsets::{
    enumerate_independent_sets, euler_holds, independence_summary, is_w2, IndependenceSummary, W2Certificate,
    W2Witness,
};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EngineOptions {
    /// Evaluate every clause even when the verdict is already settled.
    pub exhaustive: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Shape {
    K1,
    K2,
    ComplementOfCycle(usize),
    Other,
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::K1 => write!(f, "K1"),
            Shape::K2 => write!(f, "K2"),
            Shape::ComplementOfCycle(k) => write!(f, "complement-of-cycle({k})"),
            Shape::Other => write!(f, "other"),
        }
    }
}

impl FromStr for Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "K1" => Ok(Shape::K1),
            "K2" => Ok(Shape::K2),
            "other" => Ok(Shape::Other),
            _ => s
                .strip_prefix("complement-of-cycle(")
                .and_then(|r| r.strip_suffix(')'))
                .and_then(|k| k.parse().ok())
                .map(Shape::ComplementOfCycle)
                .ok_or_else(|| Error::Precondition(format!("unknown shape {s:?}"))),
        }
    }
}

impl TryFrom<String> for Shape {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Shape> for String {
    fn from(s: Shape) -> String {
        s.to_string()
    }
}

/// Which rule produced the Gorenstein verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DecisionPath {
    #[serde(rename = "alpha-le-2")]
    AlphaAtMostTwo,
    #[serde(rename = "triangle-free")]
    TriangleFree,
    #[serde(rename = "full")]
    Full,
}

impl fmt::Display for DecisionPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DecisionPath::AlphaAtMostTwo => "alpha-le-2",
            DecisionPath::TriangleFree => "triangle-free",
            DecisionPath::Full => "full",
        })
    }
}

/// Why a component is not Gorenstein. Vertex sets use original labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum FailureWitness {
    /// A clique on three or more vertices.
    Complete { n: usize },
    /// `α = 2` but the complement is not a cycle.
    NotComplementOfCycle,
    /// Triangle-free but not W2.
    NotW2 { w2: W2Witness },
    /// `I(G, -1)` differs from `(-1)^α`.
    Euler { value: String },
    /// `|F| = α - 2` and the complement of `G_F` is not a cycle of length >= 4.
    Link { face: VertexSet },
    /// Reisner's condition fails at `face` in dimension `dim`.
    Cm { face: VertexSet, dim: isize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ComponentVerdict {
    pub component: VertexSet,
    pub shape: Shape,
    pub alpha: usize,
    pub well_covered: bool,
    pub w2: W2Certificate,
    /// `None` when the clause was not evaluated.
    pub cm: Option<bool>,
    pub euler_ok: Option<bool>,
    pub link_condition_ok: Option<bool>,
    pub gorenstein: bool,
    pub path: DecisionPath,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<FailureWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Verdict {
    pub characteristic: CharSpec,
    pub n: usize,
    pub gorenstein: bool,
    pub well_covered: bool,
    pub w2: bool,
    pub components: Vec<ComponentVerdict>,
}

impl Verdict {
    /// Whole-graph CM, when every component evaluated it.
    pub fn cm(&self) -> Option<bool> {
        self.components
            .iter()
            .map(|c| c.cm)
            .try_fold(true, |acc, c| c.map(|v| acc && v))
    }

    pub fn euler_ok(&self) -> Option<bool> {
        // I(G1 ∪ G2, -1) = I(G1, -1) I(G2, -1) and α adds, so the condition is a conjunction.
        self.components
            .iter()
            .map(|c| c.euler_ok)
            .try_fold(true, |acc, c| c.map(|v| acc && v))
    }

    pub fn link_condition_ok(&self) -> Option<bool> {
        self.components
            .iter()
            .map(|c| c.link_condition_ok)
            .try_fold(true, |acc, c| c.map(|v| acc && v))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkReport {
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<VertexSet>,
}

/// For each independent `F` with `|F| = α - 2`, the complement of `G_F` must
/// be a cycle on at least four vertices. Requires `α >= 2`.
pub fn link_cycle_condition(g: &Graph) -> Result<LinkReport> {
    let alpha = independence_summary(g)?.alpha;
    link_cycle_condition_at(g, alpha)
}

fn link_cycle_condition_at(g: &Graph, alpha: usize) -> Result<LinkReport> {
    if alpha < 2 {
        return Err(Error::Precondition(format!(
            "link condition needs alpha >= 2, got {alpha}"
        )));
    }
    for face in enumerate_independent_sets(g)?.filter(|f| f.len() == alpha - 2) {
        let gf = g.private_subgraph(face).graph;
        let ok = gf.complement().is_cycle_graph().is_some_and(|k| k >= 4);
        if !ok {
            return Ok(LinkReport { holds: false, witness: Some(face) });
        }
    }
    Ok(LinkReport { holds: true, witness: None })
}

struct Clauses {
    euler: Option<bool>,
    link: Option<bool>,
    cm: Option<bool>,
    witness: Option<FailureWitness>,
}

impl Clauses {
    fn all_hold(&self) -> bool {
        self.euler == Some(true) && self.link == Some(true) && self.cm == Some(true)
    }
}

/// Euler condition, then the link condition, then CM; stops at the first
/// failure unless `exhaustive`. The recorded witness is the first failure.
fn evaluate_clauses(
    g: &Graph,
    sub: &Induced,
    summary: &IndependenceSummary,
    k: CharSpec,
    exhaustive: bool,
) -> Result<Clauses> {
    let mut out = Clauses { euler: None, link: None, cm: None, witness: None };
    let euler = euler_holds(summary);
    out.euler = Some(euler);
    if !euler {
        out.witness = Some(FailureWitness::Euler { value: summary.evaluate(-1).to_string() });
        if !exhaustive {
            return Ok(out);
        }
    }
    let link = if summary.alpha < 2 {
        // No faces of size α - 2: the condition holds vacuously.
        LinkReport { holds: true, witness: None }
    } else {
        link_cycle_condition_at(g, summary.alpha)?
    };
    out.link = Some(link.holds);
    if let Some(face) = link.witness {
        out.witness.get_or_insert(FailureWitness::Link { face: sub.lift(face) });
        if !exhaustive {
            return Ok(out);
        }
    }
    let cm = is_cm(g, k)?;
    out.cm = Some(cm.holds);
    if let Some(CmWitness { face, dim }) = cm.witness {
        out.witness.get_or_insert(FailureWitness::Cm { face: sub.lift(face), dim });
    }
    Ok(out)
}

fn lift_w2(cert: W2Certificate, sub: &Induced) -> W2Certificate {
    let witness = cert.witness.map(|w| match w {
        W2Witness::Pair { first, second } => W2Witness::Pair {
            first: sub.lift(first),
            second: sub.lift(second),
        },
        W2Witness::Lemma { set, vertex } => W2Witness::Lemma {
            set: sub.lift(set),
            vertex: sub.labels[vertex],
        },
        degenerate @ W2Witness::Degenerate { .. } => degenerate,
    });
    W2Certificate { verdict: cert.verdict, witness }
}

fn decide_component(sub: &Induced, k: CharSpec, opts: EngineOptions) -> Result<ComponentVerdict> {
    let g = &sub.graph;
    let summary = independence_summary(g)?;
    let w2 = lift_w2(is_w2(g)?, sub);
    let n = g.n();
    let shape = match n {
        1 => Shape::K1,
        2 => Shape::K2,
        _ => g
            .is_complement_of_cycle()
            .map_or(Shape::Other, Shape::ComplementOfCycle),
    };
    let alpha = summary.alpha;

    let (path, gorenstein, mut clauses) = if alpha <= 2 {
        let (gorenstein, witness) = match (n, alpha) {
            (0..=2, _) => (true, None),
            (_, 1) => (false, Some(FailureWitness::Complete { n })),
            _ => match shape {
                Shape::ComplementOfCycle(_) => (true, None),
                _ => (false, Some(FailureWitness::NotComplementOfCycle)),
            },
        };
        let clauses = if opts.exhaustive {
            evaluate_clauses(g, sub, &summary, k, true)?
        } else {
            Clauses { euler: None, link: None, cm: None, witness: None }
        };
        let clauses = Clauses { witness: witness.or(clauses.witness), ..clauses };
        (DecisionPath::AlphaAtMostTwo, gorenstein, clauses)
    } else if g.is_triangle_free() {
        let gorenstein = w2.verdict;
        let mut clauses = evaluate_clauses(g, sub, &summary, k, opts.exhaustive)?;
        if clauses.all_hold() != gorenstein {
            return Err(Error::PathDisagreement {
                component: sub.labels.clone(),
                detail: format!("W2 says {gorenstein}, clause pipeline says {}", clauses.all_hold()),
            });
        }
        if let (false, Some(w)) = (gorenstein, &w2.witness) {
            clauses.witness = Some(FailureWitness::NotW2 { w2: w.clone() });
        }
        (DecisionPath::TriangleFree, gorenstein, clauses)
    } else {
        let clauses = evaluate_clauses(g, sub, &summary, k, opts.exhaustive)?;
        (DecisionPath::Full, clauses.all_hold(), clauses)
    };
    if gorenstein {
        clauses.witness = None;
    }

    Ok(ComponentVerdict {
        component: sub.lift(g.vertices()),
        shape,
        alpha,
        well_covered: summary.is_well_covered(),
        w2,
        cm: clauses.cm,
        euler_ok: clauses.euler,
        link_condition_ok: clauses.link,
        gorenstein,
        path,
        witness: clauses.witness,
    })
}

pub fn is_gorenstein(g: &Graph, k: CharSpec) -> Result<Verdict> {
    is_gorenstein_with(g, k, EngineOptions::default())
}

pub fn is_gorenstein_with(g: &Graph, k: CharSpec, opts: EngineOptions) -> Result<Verdict> {
    g.check_cap()?;
    let subs: Vec<Induced> = g
        .components()
        .into_iter()
        .map(|c| g.induced_subgraph(c))
        .collect();
    let components = subs
        .par_iter()
        .map(|sub| decide_component(sub, k, opts))
        .collect::<Result<Vec<_>>>()?;
    Ok(Verdict {
        characteristic: k,
        n: g.n(),
        gorenstein: components.iter().all(|c| c.gorenstein),
        well_covered: components.iter().all(|c| c.well_covered),
        w2: !components.is_empty() && components.iter().all(|c| c.w2.verdict),
        components,
    })
}
