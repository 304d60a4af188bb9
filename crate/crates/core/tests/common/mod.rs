#![allow(dead_code)]

use gorenstein_core::complex::{boundary_matrices, SimplicialComplex};
use gorenstein_core::snf::IntMatrix;
use gorenstein_core::Graph;
use rand::Rng;

/// Erdős–Rényi graph with edge probability `p`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Graph from the upper-triangle bit pattern `bits` (pairs in lexicographic order).
pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, pairs.zip(bits).filter(|(_, &b)| b).map(|(e, _)| e)).unwrap()
}

/// Rank over `F_p` by plain Gaussian elimination.
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    let p = p as i64;
    let mut a: Vec<Vec<i64>> = (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.get(r, c).rem_euclid(p)).collect())
        .collect();
    let inv = |x: i64| -> i64 {
        // Fermat: x^(p-2) mod p.
        let (mut base, mut e, mut acc) = (x, p - 2, 1i64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    };
    let mut rank = 0;
    for col in 0..m.cols() {
        let Some(pivot) = (rank..a.len()).find(|&r| a[r][col] != 0) else { continue };
        a.swap(rank, pivot);
        let scale = inv(a[rank][col]);
        for x in a[rank].iter_mut() {
            *x = *x * scale % p;
        }
        let pivot_row = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let f = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x - f * y).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Reduced Betti numbers over `F_p` in dimensions `-1..=dim`, straight from
/// the boundary matrices.
pub fn betti_mod_p(c: &SimplicialComplex, p: u64) -> Vec<usize> {
    let levels = c.f_vector();
    let ranks: Vec<usize> = boundary_matrices(c).iter().map(|b| rank_mod_p(&b.matrix, p)).collect();
    let rank = |k: usize| ranks.get(k).copied().unwrap_or(0);
    (0..levels.len())
        .map(|lvl| levels[lvl] - if lvl == 0 { 0 } else { rank(lvl - 1) } - rank(lvl))
        .collect()
}

pub fn k2() -> Graph {
    Graph::complete(2).unwrap()
}

pub fn c5() -> Graph {
    Graph::cycle(5).unwrap()
}

pub fn p4() -> Graph {
    Graph::path(4).unwrap()
}

/// 4-cycle 0-1-2-3 with a pendant on each of the opposite vertices 0 and 3.
pub fn c4_with_pendants() -> Graph {
    Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (3, 5)]).unwrap()
}

/// Two 5-cycles joined by one edge.
pub fn bridged_double_c5() -> Graph {
    let two = c5().disjoint_union(&c5()).unwrap();
    Graph::from_edges(10, two.edges().chain([(0, 5)])).unwrap()
}

pub fn c5_plus_chord() -> Graph {
    Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap()
}

/// Named building blocks of the SQC corpus.
pub fn sqc_parts() -> Vec<(&'static str, Graph)> {
    vec![
        ("K2", k2()),
        ("C5", c5()),
        ("P4", p4()),
        ("C4+pendants", c4_with_pendants()),
        ("bridged-C5s", bridged_double_c5()),
        ("C5+chord", c5_plus_chord()),
    ]
}

/// Every disjoint union of 1 to 3 parts (a multiset) with at most `max_n` vertices.
pub fn sqc_corpus(max_n: usize) -> Vec<(String, Graph)> {
    let parts = sqc_parts();
    let mut out = Vec::new();
    let k = parts.len();
    for i in 0..k {
        push_union(&parts, &[i], max_n, &mut out);
        for j in i..k {
            push_union(&parts, &[i, j], max_n, &mut out);
            for l in j..k {
                push_union(&parts, &[i, j, l], max_n, &mut out);
            }
        }
    }
    out
}

fn push_union(parts: &[(&str, Graph)], pick: &[usize], max_n: usize, out: &mut Vec<(String, Graph)>) {
    let n: usize = pick.iter().map(|&i| parts[i].1.n()).sum();
    if n > max_n {
        return;
    }
    let mut g = Graph::empty(0).unwrap();
    let mut names = Vec::new();
    for &i in pick {
        g = g.disjoint_union(&parts[i].1).unwrap();
        names.push(parts[i].0);
    }
    out.push((names.join(" + "), g));
}

/// The 6-vertex triangulation of the real projective plane.
pub fn rp2() -> SimplicialComplex {
    let facets = [
        [0, 1, 3],
        [0, 1, 5],
        [0, 2, 4],
        [0, 2, 5],
        [0, 3, 4],
        [1, 2, 3],
        [1, 2, 4],
        [1, 4, 5],
        [2, 3, 5],
        [3, 4, 5],
    ];
    SimplicialComplex::from_facets(6, facets.iter().map(|f| f.iter().copied().collect())).unwrap()
}
