//! Independent brute-force verifiers used by the test suite.
//!
//! These deliberately avoid the code paths they are meant to check: the
//! minimal-length search carries its own matrix representation instead of
//! reusing the word-level fingerprint code, and the distance table runs its
//! own breadth-first search rather than the braid-class one.

use std::collections::HashMap;

use crate::embed::SimpleGraph;
use crate::error::{Error, Result};
use crate::graph::{CoxeterGraph, Generator};
use crate::word::Word;

type Mat = Vec<i64>;

fn identity(n: usize) -> Mat {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

fn mat_mul(n: usize, a: &Mat, b: &Mat) -> Mat {
    let mut out = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    out
}

fn reflection_matrix(graph: &CoxeterGraph, s: Generator) -> Mat {
    let n = graph.generator_count();
    let mut m = identity(n);
    let row = s.index() - 1;
    for t in 1..=n {
        let order = graph.bond_order(s, Generator(t)).expect("valid generators");
        let cartan = match order {
            1 => 2,
            3 => -1,
            _ => 0,
        };
        m[row * n + (t - 1)] -= cartan;
    }
    m
}

/// True minimal expression length of the element represented by `word`,
/// found by breadth-first search over group elements. Intended for tiny
/// systems only (`n <= 4`, `bound <= 8`).
pub fn brute_min_length(graph: &CoxeterGraph, word: &Word, bound: usize) -> Result<usize> {
    assert!(bound <= 8, "oracle bound is limited to 8");
    assert!(
        graph.generator_count() <= 4,
        "oracle is limited to at most 4 generators"
    );
    let n = graph.generator_count();
    let gens: Vec<Mat> = graph.generators().map(|s| reflection_matrix(graph, s)).collect();
    let mut target = identity(n);
    for &g in word.letters() {
        graph.check_generator(g)?;
        target = mat_mul(n, &target, &gens[g.index() - 1]);
    }
    if target == identity(n) {
        return Ok(0);
    }
    let mut seen: HashMap<Mat, usize> = HashMap::new();
    seen.insert(identity(n), 0);
    let mut frontier = vec![identity(n)];
    for depth in 1..=bound {
        let mut next = Vec::new();
        for m in &frontier {
            for g in &gens {
                let candidate = mat_mul(n, m, g);
                if candidate == target {
                    return Ok(depth);
                }
                if !seen.contains_key(&candidate) {
                    seen.insert(candidate.clone(), depth);
                    next.push(candidate);
                }
            }
        }
        frontier = next;
    }
    Err(Error::BoundExceeded(bound))
}

/// All-pairs distance table by repeated breadth-first search, independent of
/// the braid-graph distance code.
pub fn all_pairs_distances(graph: &SimpleGraph) -> Result<Vec<Vec<usize>>> {
    let n = graph.vertex_count();
    let mut table = vec![vec![usize::MAX; n]; n];
    for (start, row) in table.iter_mut().enumerate() {
        row[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for u in graph.neighbors(v) {
                if row[u] == usize::MAX {
                    row[u] = row[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        if row.contains(&usize::MAX) {
            return Err(Error::Disconnected);
        }
    }
    Ok(table)
}

/// Outcome of the small-graph isomorphism search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum IsoWitness {
    /// `mapping[v]` is the image of vertex `v` of the first graph; the
    /// bijection maps edges onto edges exactly.
    Isomorphic(Vec<usize>),
    NotIsomorphic,
}

const ISO_MAX_VERTICES: usize = 64;

/// Backtracking isomorphism search with degree pruning for graphs of at most
/// 64 vertices. On identical inputs the identity bijection is found first.
pub fn small_iso(g1: &SimpleGraph, g2: &SimpleGraph) -> Result<IsoWitness> {
    if g1.vertex_count() > ISO_MAX_VERTICES {
        return Err(Error::TooLarge(g1.vertex_count(), ISO_MAX_VERTICES));
    }
    if g2.vertex_count() > ISO_MAX_VERTICES {
        return Err(Error::TooLarge(g2.vertex_count(), ISO_MAX_VERTICES));
    }
    let n = g1.vertex_count();
    if n != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(IsoWitness::NotIsomorphic);
    }
    let mut degrees1: Vec<usize> = (0..n).map(|v| g1.degree(v)).collect();
    let mut degrees2: Vec<usize> = (0..n).map(|v| g2.degree(v)).collect();
    degrees1.sort_unstable();
    degrees2.sort_unstable();
    if degrees1 != degrees2 {
        return Ok(IsoWitness::NotIsomorphic);
    }
    if n == 0 {
        return Ok(IsoWitness::Isomorphic(Vec::new()));
    }

    // Process vertices in descending degree order; within the candidate loop
    // try the same index first so identical graphs yield the identity.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g1.degree(v)));

    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn consistent(g1: &SimpleGraph, g2: &SimpleGraph, mapping: &[usize], v: usize, x: usize) -> bool {
        if g1.degree(v) != g2.degree(x) {
            return false;
        }
        for (u, &y) in mapping.iter().enumerate() {
            if y == usize::MAX {
                continue;
            }
            if g1.has_edge(v, u) != g2.has_edge(x, y) {
                return false;
            }
        }
        true
    }

    fn search(
        g1: &SimpleGraph,
        g2: &SimpleGraph,
        order: &[usize],
        step: usize,
        mapping: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if step == order.len() {
            return true;
        }
        let v = order[step];
        let n = mapping.len();
        let candidates = std::iter::once(v).chain((0..n).filter(|&x| x != v));
        for x in candidates {
            if used[x] || !consistent(g1, g2, mapping, v, x) {
                continue;
            }
            mapping[v] = x;
            used[x] = true;
            if search(g1, g2, order, step + 1, mapping, used) {
                return true;
            }
            mapping[v] = usize::MAX;
            used[x] = false;
        }
        false
    }

    if search(g1, g2, &order, 0, &mut mapping, &mut used) {
        Ok(IsoWitness::Isomorphic(mapping))
    } else {
        Ok(IsoWitness::NotIsomorphic)
    }
}
