//! Closed-form Gorenstein / W2 classifications for circulant graphs and a
//! survey harness that checks them against the brute-force engine.
//!
//! Families covered:
//!
//! * band graphs `C_n(1, ..., d)`: Gorenstein iff `n = 2d + 3`;
//! * cubic graphs `C_m(a, m/2)`: Gorenstein iff `m / gcd(a, m) = 3`;
//! * quartic graphs `C_n(a, b)`, `1 <= a < b < n/2`: Gorenstein iff the triple
//!   is a multiple of one of six base triples, W2 iff it is a multiple of one
//!   of those or of three more.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::CharSpec;
use crate::error::{Error, Result};
use crate::gorenstein::{is_gorenstein, Shape, Verdict};
use crate::graph::{CirculantSpec, Graph, DEFAULT_VERTEX_CAP};

/// Base triples `(n, a, b)` whose multiples are exactly the Gorenstein quartic circulants.
pub const GORENSTEIN_QUARTIC_BASES: [(usize, usize, usize); 6] =
    [(7, 1, 2), (7, 1, 3), (7, 2, 3), (13, 1, 5), (13, 2, 3), (13, 4, 6)];

/// Extra base triples that are W2 without being Gorenstein.
pub const W2_ONLY_QUARTIC_BASES: [(usize, usize, usize); 3] = [(5, 1, 2), (8, 1, 2), (8, 2, 3)];

fn is_multiple_of(base: (usize, usize, usize), (n, a, b): (usize, usize, usize)) -> bool {
    let (n0, a0, b0) = base;
    if n % n0 != 0 {
        return false;
    }
    let d = n / n0;
    a == a0 * d && b == b0 * d
}

/// `(d, (n/d, a/d, b/d))` with `d = gcd(n, a, b)`; `C_n(a, b)` is `d`
/// disjoint copies of the reduced circulant.
pub fn gcd_decompose(n: usize, a: usize, b: usize) -> (usize, (usize, usize, usize)) {
    let d = n.gcd(&a).gcd(&b);
    (d, (n / d, a / d, b / d))
}

/// Checks the decomposition on actual graphs: the class of `i mod d` induces
/// the reduced circulant under `i + k d -> k`, and there are `d` components.
pub fn verify_gcd_decomposition(n: usize, a: usize, b: usize) -> Result<bool> {
    let (d, (rn, ra, rb)) = gcd_decompose(n, a, b);
    let g = Graph::circulant(&CirculantSpec::new(n, [a, b])?)?;
    let reduced = Graph::circulant(&CirculantSpec::new(rn, [ra, rb])?)?;
    let comps = g.components();
    if comps.len() != d {
        return Ok(false);
    }
    for (i, comp) in comps.iter().enumerate() {
        let class: Vec<usize> = (0..rn).map(|k| i + k * d).collect();
        if comp.to_vec() != class {
            return Ok(false);
        }
        let sub = g.induced_subgraph(*comp);
        // induced_subgraph orders labels ascending, which is exactly k -> i + k d.
        if sub.graph != reduced {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `x^{-1} mod n` when `gcd(x, n) = 1`.
fn mod_inverse(x: usize, n: usize) -> Option<usize> {
    let e = (x as i64).extended_gcd(&(n as i64));
    (e.gcd == 1).then(|| e.x.rem_euclid(n as i64) as usize)
}

/// An explicit isomorphism `C_n(1, d) -> C_n(a, b)`, `i -> i * multiplier mod n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitNormalization {
    pub d: usize,
    pub multiplier: usize,
    pub map: Vec<usize>,
}

/// If `a` (or else `b`) is a unit mod `n`, returns `d` with
/// `C_n(a, b) ≅ C_n(1, d)` together with the verified isomorphism.
pub fn normalize_unit(n: usize, a: usize, b: usize) -> Result<Option<UnitNormalization>> {
    let (unit, other) = if n.gcd(&a) == 1 {
        (a, b)
    } else if n.gcd(&b) == 1 {
        (b, a)
    } else {
        return Ok(None);
    };
    let inv = mod_inverse(unit, n).expect("gcd is 1");
    let x = inv * other % n;
    let d = x.min(n - x);
    let source = Graph::circulant(&CirculantSpec::new(n, [1, d])?)?;
    let target = Graph::circulant(&CirculantSpec::new(n, [a, b])?)?;
    let map: Vec<usize> = (0..n).map(|i| i * unit % n).collect();

    let mut seen = vec![false; n];
    for &v in &map {
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::Precondition(format!("multiplier {unit} is not a bijection mod {n}")));
        }
    }
    let image = source.relabel(&map)?;
    if image != target {
        return Err(Error::Precondition(format!(
            "i -> {unit} i is not an isomorphism C_{n}(1,{d}) -> C_{n}({a},{b})"
        )));
    }
    Ok(Some(UnitNormalization { d, multiplier: unit, map }))
}

/// Gorenstein verdict for `C_n(1, ..., d)`.
pub fn classify_cn_1_to_d(n: usize, d: usize) -> Result<bool> {
    if n < 3 || d == 0 || d > n / 2 {
        return Err(Error::Precondition(format!("band circulant needs n >= 3, 1 <= d <= n/2; got n={n}, d={d}")));
    }
    Ok(n == 2 * d + 3)
}

/// Gorenstein verdict for the cubic circulant `C_m(a, m/2)`.
pub fn classify_cubic(m: usize, a: usize) -> Result<bool> {
    if !m.is_multiple_of(2) || a == 0 || 2 * a >= m {
        return Err(Error::Precondition(format!("cubic circulant needs even m and 1 <= a < m/2; got m={m}, a={a}")));
    }
    Ok(m / a.gcd(&m) == 3)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuarticClass {
    Gorenstein,
    W2Only,
    Neither,
}

/// Trichotomy for `C_n(a, b)` with `1 <= a < b < n/2`.
pub fn classify_quartic(n: usize, a: usize, b: usize) -> Result<QuarticClass> {
    if a == 0 || a >= b || 2 * b >= n {
        return Err(Error::Precondition(format!("quartic circulant needs 1 <= a < b < n/2; got ({n},{a},{b})")));
    }
    let t = (n, a, b);
    Ok(if GORENSTEIN_QUARTIC_BASES.iter().any(|&base| is_multiple_of(base, t)) {
        QuarticClass::Gorenstein
    } else if W2_ONLY_QUARTIC_BASES.iter().any(|&base| is_multiple_of(base, t)) {
        QuarticClass::W2Only
    } else {
        QuarticClass::Neither
    })
}

/// Reduces a quartic triple to `copies × C_m(1, d)` when possible.
pub fn canonical_quartic_form(n: usize, a: usize, b: usize) -> Result<Option<(usize, usize, usize)>> {
    let (copies, (rn, ra, rb)) = gcd_decompose(n, a, b);
    Ok(normalize_unit(rn, ra, rb)?.map(|u| (copies, rn, u.d)))
}

/// Theorem prediction attached to a survey row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Prediction {
    Gorenstein,
    W2Only,
    Neither,
    NotGorenstein,
}

impl fmt::Display for Prediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Prediction::Gorenstein => "gorenstein",
            Prediction::W2Only => "w2-only",
            Prediction::Neither => "neither",
            Prediction::NotGorenstein => "not-gorenstein",
        })
    }
}

impl From<QuarticClass> for Prediction {
    fn from(c: QuarticClass) -> Self {
        match c {
            QuarticClass::Gorenstein => Prediction::Gorenstein,
            QuarticClass::W2Only => Prediction::W2Only,
            QuarticClass::Neither => Prediction::Neither,
        }
    }
}

/// Closed-form prediction for a two-connection circulant `C_n(a, b)`.
/// `b = n/2` is the cubic case; `b < n/2` the quartic one.
pub fn predict_two_connection(n: usize, a: usize, b: usize) -> Result<Prediction> {
    if 2 * b == n {
        Ok(if classify_cubic(n, a)? { Prediction::Gorenstein } else { Prediction::NotGorenstein })
    } else {
        classify_quartic(n, a, b).map(Prediction::from)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `C_n(a, b)`, `1 <= a < b < n/2`.
    Quartic,
    /// `C_m(a, m/2)`, `m` even, `1 <= a < m/2`.
    Cubic,
    /// `C_n(1, ..., d)`, `1 <= d <= n/2`.
    Band,
}

impl Family {
    pub fn default_max_n(self) -> usize {
        match self {
            Family::Quartic => 14,
            Family::Cubic | Family::Band => 18,
        }
    }

    /// All parameter sets of the family with `n <= max_n`, in canonical order.
    pub fn instances(self, max_n: usize) -> Vec<CirculantSpec> {
        let mut out = Vec::new();
        match self {
            Family::Quartic => {
                for n in 5..=max_n {
                    for a in 1..n {
                        for b in a + 1..n {
                            if 2 * b < n {
                                out.push(CirculantSpec::new(n, [a, b]).expect("valid range"));
                            }
                        }
                    }
                }
            }
            Family::Cubic => {
                for m in (4..=max_n).step_by(2) {
                    for a in 1..m / 2 {
                        out.push(CirculantSpec::new(m, [a, m / 2]).expect("valid range"));
                    }
                }
            }
            Family::Band => {
                for n in 3..=max_n {
                    for d in 1..=n / 2 {
                        out.push(CirculantSpec::new(n, 1..=d).expect("valid range"));
                    }
                }
            }
        }
        out
    }

    pub fn predict(self, spec: &CirculantSpec) -> Result<Prediction> {
        let s = spec.connections();
        match self {
            Family::Quartic | Family::Cubic => match s {
                &[a, b] => predict_two_connection(spec.n(), a, b),
                _ => Err(Error::Precondition(format!("{spec} is not a two-connection circulant"))),
            },
            Family::Band => {
                let d = s.len();
                if s.iter().copied().ne(1..=d) {
                    return Err(Error::Precondition(format!("{spec} is not of the form C_n(1..d)")));
                }
                Ok(if classify_cn_1_to_d(spec.n(), d)? {
                    Prediction::Gorenstein
                } else {
                    Prediction::NotGorenstein
                })
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Quartic => "quartic",
            Family::Cubic => "cubic",
            Family::Band => "band",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quartic" | "degree-4" => Ok(Family::Quartic),
            "cubic" | "degree-3" => Ok(Family::Cubic),
            "band" => Ok(Family::Band),
            other => Err(Error::Precondition(format!("unknown family {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SurveyRow {
    pub family: Family,
    pub spec: CirculantSpec,
    pub prediction: Prediction,
    /// `None` for rows above the vertex cap (reported as SKIPPED).
    pub verdict: Option<Verdict>,
    /// `None` for skipped rows.
    pub matched: Option<bool>,
    /// Wall-clock time, recorded only when timing is requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

impl SurveyRow {
    pub fn is_skipped(&self) -> bool {
        self.verdict.is_none()
    }

    /// The `(a, b)` pair shown in tabular output; band rows use `(1, d)`.
    pub fn ab(&self) -> (usize, usize) {
        let s = self.spec.connections();
        match self.family {
            Family::Band => (1, s.len()),
            _ => (s[0], s.get(1).copied().unwrap_or(s[0])),
        }
    }

    pub fn observed(&self) -> Option<Prediction> {
        let v = self.verdict.as_ref()?;
        Some(match self.family {
            Family::Quartic => {
                if v.gorenstein {
                    Prediction::Gorenstein
                } else if v.w2 {
                    Prediction::W2Only
                } else {
                    Prediction::Neither
                }
            }
            _ if v.gorenstein => Prediction::Gorenstein,
            _ => Prediction::NotGorenstein,
        })
    }
}

pub const CSV_HEADER: [&str; 12] = [
    "n", "a", "b", "prediction", "wellCovered", "w2", "cm", "eulerOk", "linkOk", "gorenstein", "match", "millis",
];

fn flag(b: Option<bool>) -> String {
    b.map_or(String::new(), |b| b.to_string())
}

impl SurveyRow {
    /// One CSV record in [`CSV_HEADER`] order. Unevaluated clauses and
    /// unrecorded timings are blank.
    pub fn csv_record(&self) -> Vec<String> {
        let (a, b) = self.ab();
        let v = self.verdict.as_ref();
        let millis = self.millis.map_or(String::new(), |m| m.to_string());
        let matched = match self.matched {
            None => "SKIPPED".to_string(),
            Some(m) => m.to_string(),
        };
        vec![
            self.spec.n().to_string(),
            a.to_string(),
            b.to_string(),
            self.prediction.to_string(),
            flag(v.map(|v| v.well_covered)),
            flag(v.map(|v| v.w2)),
            flag(v.and_then(Verdict::cm)),
            flag(v.and_then(Verdict::euler_ok)),
            flag(v.and_then(Verdict::link_condition_ok)),
            flag(v.map(|v| v.gorenstein)),
            matched,
            millis,
        ]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurveyOptions {
    pub max_n: usize,
    pub vertex_cap: usize,
    pub characteristic: CharSpec,
    /// Record per-row wall-clock time; off by default so reports are reproducible.
    pub timing: bool,
}

impl SurveyOptions {
    pub fn for_family(family: Family) -> Self {
        SurveyOptions {
            max_n: family.default_max_n(),
            vertex_cap: DEFAULT_VERTEX_CAP,
            characteristic: CharSpec::All,
            timing: false,
        }
    }
}

fn survey_row(family: Family, spec: CirculantSpec, opts: &SurveyOptions) -> Result<SurveyRow> {
    let prediction = family.predict(&spec)?;
    if spec.n() > opts.vertex_cap {
        return Ok(SurveyRow { family, spec, prediction, verdict: None, matched: None, millis: None });
    }
    let start = Instant::now();
    let g = Graph::circulant(&spec)?.with_vertex_cap(opts.vertex_cap)?;
    let verdict = is_gorenstein(&g, opts.characteristic)?;
    let millis = opts.timing.then(|| start.elapsed().as_millis() as u64);
    let mut row = SurveyRow { family, spec, prediction, verdict: Some(verdict), matched: None, millis };
    let mut matched = row.observed() == Some(prediction);
    if let (Family::Cubic, Some(v)) = (family, &row.verdict) {
        // Gorenstein cubic circulants are disjoint copies of the complement of C6.
        if v.gorenstein {
            matched &= v.components.iter().all(|c| c.shape == Shape::ComplementOfCycle(6));
        }
    }
    row.matched = Some(matched);
    Ok(row)
}

/// Runs every instance of `family` up to `opts.max_n` through the engine,
/// in parallel on the current rayon pool; rows come back in canonical order.
pub fn survey(family: Family, opts: &SurveyOptions) -> Result<Vec<SurveyRow>> {
    family
        .instances(opts.max_n)
        .into_par_iter()
        .map(|spec| survey_row(family, spec, opts))
        .collect()
}

/// True iff no evaluated row contradicts its prediction.
pub fn all_match(rows: &[SurveyRow]) -> bool {
    rows.iter().all(|r| r.matched != Some(false))
}
