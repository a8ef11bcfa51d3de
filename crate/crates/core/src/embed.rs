//! Binary labelings of braid graphs and their hypercube geometry.
//!
//! The labeling compares each member of a link class against a base member
//! at the even positions: bit `k` is 0 when the letters at position `2k`
//! agree and 1 otherwise, and labels of general words concatenate the
//! per-factor labels left to right. In triangle-free systems this labeling is
//! an isometric embedding of the braid graph into the hypercube of dimension
//! equal to the rank; [`verify_isometric`] checks that claim pair by pair.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde_json::json;

use crate::braid::BraidClass;
use crate::error::{Error, Result};
use crate::graph::CoxeterGraph;
use crate::link::{class_is_link, link_factorization, LinkFactorization};
use crate::word::{is_reduced, Word};

/// Guard on hypercube and Fibonacci-cube dimensions.
pub const MAX_CUBE_DIMENSION: usize = 24;
/// Cap on vertices for the all-pairs checks.
pub const ALL_PAIRS_CAP: usize = 4096;
/// Cap on vertices for the brute-force median test.
pub const MEDIAN_CAP: usize = 512;

/// A fixed-length binary string; a hypercube vertex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BitLabel {
    bits: Vec<u8>,
}

impl BitLabel {
    pub fn from_bits(bits: Vec<u8>) -> Self {
        assert!(bits.iter().all(|&b| b <= 1), "bits must be 0 or 1");
        BitLabel { bits }
    }

    pub fn zeros(len: usize) -> Self {
        BitLabel { bits: vec![0; len] }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(text.len());
        for c in text.chars() {
            match c {
                '0' => bits.push(0),
                '1' => bits.push(1),
                other => return Err(Error::Parse(format!("invalid bit {other:?}"))),
            }
        }
        Ok(BitLabel { bits })
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Bit at 1-based index `k`.
    pub fn bit(&self, k: usize) -> u8 {
        self.bits[k - 1]
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&b| b == 0)
    }

    pub fn hamming(&self, other: &BitLabel) -> usize {
        assert_eq!(self.len(), other.len(), "labels must have equal length");
        self.bits
            .iter()
            .zip(&other.bits)
            .filter(|(a, b)| a != b)
            .count()
    }

    pub fn xor(&self, other: &BitLabel) -> BitLabel {
        assert_eq!(self.len(), other.len(), "labels must have equal length");
        BitLabel {
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(a, b)| a ^ b)
                .collect(),
        }
    }

    /// True when the label contains `11` as a consecutive substring.
    pub fn has_adjacent_ones(&self) -> bool {
        self.bits.windows(2).any(|w| w[0] == 1 && w[1] == 1)
    }
}

impl fmt::Display for BitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// An undirected simple graph with string vertex labels. Shared
/// representation for braid graphs, hypercubes, and Fibonacci cubes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimpleGraph {
    labels: Vec<String>,
    adjacency: Vec<BTreeSet<usize>>,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    pub fn from_labels(labels: Vec<String>) -> Self {
        let n = labels.len();
        SimpleGraph {
            labels,
            adjacency: vec![BTreeSet::new(); n],
            edges: BTreeSet::new(),
        }
    }

    /// Adds the undirected edge `{a,b}`; duplicates are ignored and
    /// self-loops are rejected.
    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a != b, "self-loops are not allowed");
        assert!(a < self.labels.len() && b < self.labels.len(), "vertex out of range");
        self.adjacency[a].insert(b);
        self.adjacency[b].insert(a);
        self.edges.insert((a.min(b), a.max(b)));
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].iter().copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub(crate) fn bfs_distances(&self, start: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let base = dist[v].unwrap();
            for &u in &self.adjacency[v] {
                if dist[u].is_none() {
                    dist[u] = Some(base + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    fn all_distances(&self) -> Result<Vec<Vec<usize>>> {
        let mut out = Vec::with_capacity(self.vertex_count());
        for v in 0..self.vertex_count() {
            let row = self.bfs_distances(v);
            let mut flat = Vec::with_capacity(row.len());
            for d in row {
                flat.push(d.ok_or(Error::Disconnected)?);
            }
            out.push(flat);
        }
        Ok(out)
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name} {{\n");
        for label in &self.labels {
            out.push_str(&format!("  \"{label}\";\n"));
        }
        for &(a, b) in &self.edges {
            out.push_str(&format!(
                "  \"{}\" -- \"{}\";\n",
                self.labels[a], self.labels[b]
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// The braid graph of a class as a plain graph; vertex `i` is member `i` in
/// canonical order.
pub fn braid_graph(class: &BraidClass) -> SimpleGraph {
    let mut g = SimpleGraph::from_labels(class.members().iter().map(|m| m.to_string()).collect());
    for e in class.edges() {
        g.add_edge(e.a, e.b);
    }
    g
}

fn check_dimension(r: usize) -> Result<()> {
    if r > MAX_CUBE_DIMENSION {
        Err(Error::DimensionTooLarge(r, MAX_CUBE_DIMENSION))
    } else {
        Ok(())
    }
}

fn bit_string(v: usize, r: usize) -> String {
    (0..r)
        .map(|k| if v >> (r - 1 - k) & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// The hypercube of dimension `r`: all binary strings of length `r`, with
/// edges at Hamming distance one. `r = 0` gives a single vertex labeled by
/// the empty string.
pub fn hypercube(r: usize) -> Result<SimpleGraph> {
    check_dimension(r)?;
    let size = 1usize << r;
    let mut g = SimpleGraph::from_labels((0..size).map(|v| bit_string(v, r)).collect());
    for v in 0..size {
        for k in 0..r {
            let u = v | (1 << k);
            if u != v {
                g.add_edge(v, u);
            }
        }
    }
    Ok(g)
}

fn no_adjacent_ones(v: usize, r: usize) -> bool {
    (0..r.saturating_sub(1)).all(|k| (v >> k) & 3 != 3)
}

/// The Fibonacci cube of order `r`: the subgraph of the hypercube induced by
/// the binary strings with no consecutive ones.
pub fn fibonacci_cube(r: usize) -> Result<SimpleGraph> {
    check_dimension(r)?;
    let valid: Vec<usize> = (0..1usize << r).filter(|&v| no_adjacent_ones(v, r)).collect();
    let index: HashMap<usize, usize> = valid.iter().copied().zip(0..).collect();
    let mut g = SimpleGraph::from_labels(valid.iter().map(|&v| bit_string(v, r)).collect());
    for (i, &v) in valid.iter().enumerate() {
        for k in 0..r {
            let u = v | (1 << k);
            if u != v {
                if let Some(&j) = index.get(&u) {
                    g.add_edge(i, j);
                }
            }
        }
    }
    Ok(g)
}

/// The label of `member` relative to `base` in a link class: bit `k` is 0
/// exactly when the two words carry the same letter at position `2k`.
pub fn phi(class: &BraidClass, base: &Word, member: &Word) -> Result<BitLabel> {
    if !class_is_link(class) {
        return Err(Error::NotALink);
    }
    if !class.contains(base) || !class.contains(member) {
        return Err(Error::NotInClass);
    }
    let rank = (class.word_len() - 1) / 2;
    Ok(BitLabel::from_bits(
        (1..=rank)
            .map(|k| u8::from(member.letter(2 * k) != base.letter(2 * k)))
            .collect(),
    ))
}

/// The label of `alpha` relative to `beta`; XORing a labeling with this value
/// converts labels based at `alpha` into labels based at `beta`.
pub fn automorphism_shift(class: &BraidClass, alpha: &Word, beta: &Word) -> Result<BitLabel> {
    phi(class, beta, alpha)
}

/// A total labeling of a braid class, aligned with the canonical member
/// order of `class`.
#[derive(Clone, Debug)]
pub struct Labeling {
    pub class: BraidClass,
    pub factorization: LinkFactorization,
    pub labels: Vec<BitLabel>,
}

impl Labeling {
    pub fn label_of(&self, member: &Word) -> Option<&BitLabel> {
        self.class.member_index(member).map(|i| &self.labels[i])
    }

    pub fn to_json(&self, isometric: Option<bool>, theta: Option<&[Vec<(usize, usize)>]>) -> serde_json::Value {
        let labels: BTreeMap<String, String> = self
            .class
            .members()
            .iter()
            .zip(&self.labels)
            .map(|(m, l)| (m.to_string(), l.to_string()))
            .collect();
        let mut value = json!({ "labels": labels });
        if let Some(flag) = isometric {
            value["isometric"] = json!(flag);
        }
        if let Some(classes) = theta {
            value["theta_classes"] = json!(classes
                .iter()
                .map(|class_edges| class_edges
                    .iter()
                    .map(|&(a, b)| json!([
                        self.class.members()[a].to_string(),
                        self.class.members()[b].to_string()
                    ]))
                    .collect::<Vec<_>>())
                .collect::<Vec<_>>());
        }
        value
    }

    /// DOT rendering of the braid graph with `label="<bits>"` attributes.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph labeled_braid_graph {\n");
        for (member, label) in self.class.members().iter().zip(&self.labels) {
            out.push_str(&format!("  \"{member}\" [label=\"{label}\"];\n"));
        }
        for e in self.class.edges() {
            out.push_str(&format!(
                "  \"{}\" -- \"{}\";\n",
                self.class.members()[e.a],
                self.class.members()[e.b]
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// Labels every member of the braid class of `word`, using `word` itself as
/// the base: per-factor labels are concatenated left to right, so the base
/// maps to the all-zeros string. Refuses non-triangle-free graphs unless
/// `unchecked` is set, in which case the labeling is still computed and the
/// caller can probe whether isometry happens to hold.
pub fn embed_word(
    graph: &CoxeterGraph,
    word: &Word,
    cap: usize,
    unchecked: bool,
) -> Result<Labeling> {
    word.check_against(graph)?;
    if !is_reduced(graph, word)? {
        return Err(Error::NotReduced);
    }
    if !unchecked && !graph.is_triangle_free() {
        return Err(Error::NotTriangleFree);
    }
    let class = BraidClass::enumerate(graph, word, cap)?;
    let factorization = link_factorization(graph, word, cap)?;
    let positions: Vec<usize> = factorization
        .factors
        .iter()
        .flat_map(|f| f.even_positions())
        .collect();
    let labels = class
        .members()
        .iter()
        .map(|member| {
            BitLabel::from_bits(
                positions
                    .iter()
                    .map(|&p| u8::from(member.letter(p) != word.letter(p)))
                    .collect(),
            )
        })
        .collect();
    Ok(Labeling {
        class,
        factorization,
        labels,
    })
}

/// A pair of vertices whose graph distance and label distance disagree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IsometryViolation {
    pub a: usize,
    pub b: usize,
    pub graph_distance: usize,
    pub hamming_distance: usize,
}

/// Result of the all-pairs isometry check.
#[derive(Clone, Debug)]
pub struct IsometryReport {
    pub isometric: bool,
    pub violations: Vec<IsometryViolation>,
}

/// Checks that `labels` embed `graph` isometrically in the hypercube: for
/// every pair of vertices the graph distance must equal the Hamming distance
/// of the labels. Labels must be pairwise distinct.
pub fn verify_isometric(graph: &SimpleGraph, labels: &[BitLabel]) -> Result<IsometryReport> {
    let n = graph.vertex_count();
    if n > ALL_PAIRS_CAP {
        return Err(Error::TooLarge(n, ALL_PAIRS_CAP));
    }
    assert_eq!(labels.len(), n, "one label per vertex required");
    let mut seen: HashMap<&BitLabel, usize> = HashMap::new();
    for (i, label) in labels.iter().enumerate() {
        if let Some(&j) = seen.get(label) {
            return Err(Error::LabelCollision(j, i));
        }
        seen.insert(label, i);
    }
    let dist = graph.all_distances()?;
    let mut violations = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let hamming = labels[a].hamming(&labels[b]);
            if dist[a][b] != hamming {
                violations.push(IsometryViolation {
                    a,
                    b,
                    graph_distance: dist[a][b],
                    hamming_distance: hamming,
                });
            }
        }
    }
    Ok(IsometryReport {
        isometric: violations.is_empty(),
        violations,
    })
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn theta_related(dist: &[Vec<usize>], e1: (usize, usize), e2: (usize, usize)) -> bool {
    let (u, v) = e1;
    let (x, y) = e2;
    dist[u][x] + dist[v][y] != dist[u][y] + dist[v][x]
}

/// The Djokovic-Winkler edge relation, returned as the partition of the edge
/// set into the classes of its transitive closure. Edges `uv` and `xy` are
/// related when `d(u,x) + d(v,y) != d(u,y) + d(v,x)`.
pub fn theta_classes(graph: &SimpleGraph) -> Result<Vec<Vec<(usize, usize)>>> {
    let n = graph.vertex_count();
    if n > ALL_PAIRS_CAP {
        return Err(Error::TooLarge(n, ALL_PAIRS_CAP));
    }
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let dist = graph.all_distances()?;
    let edges: Vec<(usize, usize)> = graph.edges().collect();
    let mut uf = UnionFind::new(edges.len());
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if theta_related(&dist, edges[i], edges[j]) {
                uf.union(i, j);
            }
        }
    }
    let mut classes: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for (i, &e) in edges.iter().enumerate() {
        classes.entry(uf.find(i)).or_default().push(e);
    }
    Ok(classes.into_values().collect())
}

/// Isometric dimension of a partial cube, computed as the number of
/// Djokovic-Winkler classes. The certificate is checked internally: the
/// relation must already be transitive, each class must cut the graph into
/// exactly two sides, and the resulting cut labeling must embed the graph
/// isometrically. Any failure reports `NotPartialCube`.
pub fn isometric_dimension(graph: &SimpleGraph) -> Result<usize> {
    let n = graph.vertex_count();
    if n > ALL_PAIRS_CAP {
        return Err(Error::TooLarge(n, ALL_PAIRS_CAP));
    }
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    if n == 1 {
        return Ok(0);
    }
    let dist = graph.all_distances()?;

    // Bipartiteness via distance parity across edges.
    for (a, b) in graph.edges() {
        if dist[0][a] == dist[0][b] {
            return Err(Error::NotPartialCube("graph is not bipartite".into()));
        }
    }

    let classes = theta_classes(graph)?;

    // The relation itself must be transitive, i.e. already equal to its
    // closure.
    for class in &classes {
        for i in 0..class.len() {
            for j in i + 1..class.len() {
                if !theta_related(&dist, class[i], class[j]) {
                    return Err(Error::NotPartialCube(format!(
                        "relation is not transitive: edges {:?} and {:?} share a class but are unrelated",
                        class[i], class[j]
                    )));
                }
            }
        }
    }

    // Cut labeling: removing one class must split the graph into exactly two
    // components; the side of each vertex gives one bit.
    let mut labels = vec![Vec::with_capacity(classes.len()); n];
    for class in &classes {
        let removed: BTreeSet<(usize, usize)> = class.iter().copied().collect();
        let mut side = vec![None::<u8>; n];
        let mut components = 0u8;
        for start in 0..n {
            if side[start].is_some() {
                continue;
            }
            if components == 2 {
                return Err(Error::NotPartialCube(
                    "a relation class does not cut the graph into two sides".into(),
                ));
            }
            side[start] = Some(components);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for u in graph.neighbors(v) {
                    if removed.contains(&(v.min(u), v.max(u))) {
                        continue;
                    }
                    if side[u].is_none() {
                        side[u] = Some(components);
                        queue.push_back(u);
                    }
                }
            }
            components += 1;
        }
        if components != 2 {
            return Err(Error::NotPartialCube(
                "a relation class does not cut the graph into two sides".into(),
            ));
        }
        for v in 0..n {
            labels[v].push(side[v].unwrap());
        }
    }
    let labels: Vec<BitLabel> = labels.into_iter().map(BitLabel::from_bits).collect();
    match verify_isometric(graph, &labels) {
        Ok(report) if report.isometric => Ok(classes.len()),
        Ok(_) => Err(Error::NotPartialCube(
            "cut labeling is not isometric".into(),
        )),
        Err(Error::LabelCollision(_, _)) => Err(Error::NotPartialCube(
            "cut labeling is not injective".into(),
        )),
        Err(e) => Err(e),
    }
}

/// Brute-force median-graph test: every triple of vertices must have exactly
/// one vertex lying on shortest paths between all three pairs.
pub fn is_median_graph(graph: &SimpleGraph) -> Result<bool> {
    let n = graph.vertex_count();
    if n > MEDIAN_CAP {
        return Err(Error::CapExceeded {
            cap: MEDIAN_CAP,
            found: n,
        });
    }
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let dist = graph.all_distances()?;
    for u in 0..n {
        for v in u + 1..n {
            for w in v + 1..n {
                let mut medians = 0;
                for x in 0..n {
                    if dist[u][x] + dist[x][v] == dist[u][v]
                        && dist[u][x] + dist[x][w] == dist[u][w]
                        && dist[v][x] + dist[x][w] == dist[v][w]
                    {
                        medians += 1;
                        if medians > 1 {
                            break;
                        }
                    }
                }
                if medians != 1 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Whether the labeling of a Fibonacci chain based at its Fibonacci link hits
/// exactly the binary strings with no consecutive ones.
pub fn image_is_fibonacci(class: &BraidClass, base: &Word) -> Result<bool> {
    if !class_is_link(class) {
        return Err(Error::NotALink);
    }
    if !class.contains(base) {
        return Err(Error::NotInClass);
    }
    // The base must be the Fibonacci link of the chain: all class shadows
    // visible in the base itself.
    let own: BTreeSet<usize> =
        crate::word::shadow_starts(class.graph(), base.letters()).into_iter().collect();
    if own != class.shadow_los().collect::<BTreeSet<_>>() {
        return Err(Error::NotFibonacci);
    }
    let rank = class.rank();
    let image: BTreeSet<BitLabel> = class
        .members()
        .iter()
        .map(|m| phi(class, base, m))
        .collect::<Result<_>>()?;
    let expected: BTreeSet<BitLabel> = (0..1usize << rank)
        .filter(|&v| no_adjacent_ones(v, rank))
        .map(|v| BitLabel::parse(&bit_string(v, rank)).unwrap())
        .collect();
    Ok(image == expected)
}
