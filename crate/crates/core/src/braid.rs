//! Braid classes, braid graphs, and Matsumoto graphs.
//!
//! A braid class is enumerated as the breadth-first closure of a reduced
//! expression under braid moves. Members are canonicalized in lexicographic
//! order so that repeated runs produce identical output; the original
//! discovery order is retained for callers that want it.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::{CoxeterGraph, Generator};
use crate::word::{is_reduced, shadow_starts, Interval, Word};

/// Default cap on closure enumeration.
pub const DEFAULT_CAP: usize = 1_000_000;

/// Fixed 12-color palette used to key DOT edge colors by shadow position.
pub const SHADOW_PALETTE: [&str; 12] = [
    "blue", "orange", "green", "magenta", "red", "turquoise", "purple", "brown", "goldenrod",
    "gray", "olive", "navy",
];

/// An edge of a braid graph: applying the braid move at `shadow_lo` to member
/// `a` yields member `b` (indices into the canonical member list, `a < b`).
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct BraidEdge {
    pub a: usize,
    pub b: usize,
    pub shadow_lo: usize,
}

/// A braid class: the closure of a base word under braid moves, together with
/// the move-labeled adjacency that forms the braid graph.
///
/// Immutable once enumerated; share freely across threads.
#[derive(Clone, Debug)]
pub struct BraidClass {
    graph: CoxeterGraph,
    base: Word,
    members: Vec<Word>,
    discovery: Vec<usize>,
    edges: Vec<BraidEdge>,
    adjacency: Vec<Vec<usize>>,
    shadow_los: BTreeSet<usize>,
}

type Letters = Vec<Generator>;

fn closure<F>(
    graph: &CoxeterGraph,
    base: &Word,
    cap: usize,
    mut moves: F,
) -> Result<(Vec<Letters>, HashMap<Letters, usize>)>
where
    F: FnMut(&CoxeterGraph, &[Generator], &mut Vec<Letters>),
{
    let start = base.letters().to_vec();
    let mut seen: HashMap<Vec<Generator>, usize> = HashMap::new();
    let mut order: Vec<Letters> = Vec::new();
    let mut queue: VecDeque<Vec<Generator>> = VecDeque::new();
    seen.insert(start.clone(), 0);
    order.push(start.clone());
    queue.push_back(start);
    if cap < 1 {
        return Err(Error::CapExceeded { cap, found: 1 });
    }
    let mut scratch = Vec::new();
    while let Some(current) = queue.pop_front() {
        scratch.clear();
        moves(graph, &current, &mut scratch);
        for next in scratch.drain(..) {
            if !seen.contains_key(&next) {
                if seen.len() == cap {
                    return Err(Error::CapExceeded {
                        cap,
                        found: cap + 1,
                    });
                }
                seen.insert(next.clone(), order.len());
                order.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok((order, seen))
}

fn braid_successors(graph: &CoxeterGraph, letters: &[Generator], out: &mut Vec<Letters>) {
    for lo in shadow_starts(graph, letters) {
        let mut next = letters.to_vec();
        let s = next[lo - 1];
        let t = next[lo];
        next[lo - 1] = t;
        next[lo] = s;
        next[lo + 1] = t;
        out.push(next);
    }
}

impl BraidClass {
    /// Enumerates the braid class of `base` by breadth-first closure under
    /// braid moves, failing with `CapExceeded` if more than `cap` members are
    /// found.
    pub fn enumerate(graph: &CoxeterGraph, base: &Word, cap: usize) -> Result<Self> {
        base.check_against(graph)?;
        if !is_reduced(graph, base)? {
            return Err(Error::NotReduced);
        }
        let (order, _) = closure(graph, base, cap, braid_successors)?;

        let mut members: Vec<Word> = order.iter().cloned().map(Word::from_generators).collect();
        members.sort();
        let index_of: HashMap<&Word, usize> = members.iter().zip(0..).collect();
        let discovery = order
            .iter()
            .map(|letters| index_of[&Word::from_generators(letters.clone())])
            .collect();

        let mut edge_set: BTreeSet<BraidEdge> = BTreeSet::new();
        let mut shadow_los = BTreeSet::new();
        for (idx, member) in members.iter().enumerate() {
            for lo in shadow_starts(graph, member.letters()) {
                shadow_los.insert(lo);
                let mut next = member.letters().to_vec();
                let s = next[lo - 1];
                let t = next[lo];
                next[lo - 1] = t;
                next[lo] = s;
                next[lo + 1] = t;
                let other = index_of[&Word::from_generators(next)];
                edge_set.insert(BraidEdge {
                    a: idx.min(other),
                    b: idx.max(other),
                    shadow_lo: lo,
                });
            }
        }
        let edges: Vec<BraidEdge> = edge_set.into_iter().collect();
        let mut adjacency = vec![Vec::new(); members.len()];
        for e in &edges {
            adjacency[e.a].push(e.b);
            adjacency[e.b].push(e.a);
        }

        Ok(BraidClass {
            graph: graph.clone(),
            base: base.clone(),
            members,
            discovery,
            edges,
            adjacency,
            shadow_los,
        })
    }

    pub fn graph(&self) -> &CoxeterGraph {
        &self.graph
    }

    pub fn base(&self) -> &Word {
        &self.base
    }

    /// Members in canonical lexicographic order.
    pub fn members(&self) -> &[Word] {
        &self.members
    }

    /// Members in breadth-first discovery order from the base.
    pub fn members_in_discovery_order(&self) -> impl Iterator<Item = &Word> {
        self.discovery.iter().map(|&i| &self.members[i])
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Common length of every member.
    pub fn word_len(&self) -> usize {
        self.base.len()
    }

    pub fn member_index(&self, word: &Word) -> Option<usize> {
        self.members.binary_search(word).ok()
    }

    pub fn contains(&self, word: &Word) -> bool {
        self.member_index(word).is_some()
    }

    pub fn edges(&self) -> &[BraidEdge] {
        &self.edges
    }

    /// Shadow start positions of the whole class, ascending.
    pub fn shadow_los(&self) -> impl Iterator<Item = usize> + '_ {
        self.shadow_los.iter().copied()
    }

    /// The braid shadows of the whole class: the union over members.
    pub fn shadows(&self) -> Vec<Interval> {
        self.shadow_los.iter().map(|&lo| Interval::shadow(lo)).collect()
    }

    /// Number of class shadows.
    pub fn rank(&self) -> usize {
        self.shadow_los.len()
    }

    /// Union of the members' local supports over `iv`.
    pub fn support(&self, iv: Interval) -> Result<BTreeSet<Generator>> {
        iv.check_within(self.word_len())?;
        let mut out = BTreeSet::new();
        for member in &self.members {
            for p in iv.positions() {
                out.insert(member.letter(p));
            }
        }
        Ok(out)
    }

    /// Minimum number of braid moves transforming `a` into `b`, i.e. the
    /// graph distance in the braid graph.
    pub fn distance(&self, a: &Word, b: &Word) -> Result<usize> {
        let start = self.member_index(a).ok_or(Error::NotInClass)?;
        let goal = self.member_index(b).ok_or(Error::NotInClass)?;
        let mut dist = vec![usize::MAX; self.members.len()];
        let mut queue = VecDeque::new();
        dist[start] = 0;
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            if v == goal {
                return Ok(dist[v]);
            }
            for &u in &self.adjacency[v] {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        Err(Error::InternalInvariantViolation(
            "braid graph must be connected".into(),
        ))
    }

    /// Pairs of members that share a braid shadow but disagree on its
    /// support, reported as `(member_a, member_b, shadow_lo)`. Empty in
    /// triangle-free systems; nonempty classes exist once the Coxeter graph
    /// has a three-cycle.
    pub fn equal_support_violations(&self) -> Vec<(usize, usize, usize)> {
        let per_member: Vec<Vec<usize>> = self
            .members
            .iter()
            .map(|m| shadow_starts(&self.graph, m.letters()))
            .collect();
        let mut out = Vec::new();
        for a in 0..self.members.len() {
            for b in a + 1..self.members.len() {
                for &lo in &per_member[a] {
                    if !per_member[b].contains(&lo) {
                        continue;
                    }
                    let iv = Interval::shadow(lo);
                    let sa: BTreeSet<Generator> =
                        iv.positions().map(|p| self.members[a].letter(p)).collect();
                    let sb: BTreeSet<Generator> =
                        iv.positions().map(|p| self.members[b].letter(p)).collect();
                    if sa != sb {
                        out.push((a, b, lo));
                    }
                }
            }
        }
        out
    }

    /// JSON report: base, members, edges as `[a, b, shadow_lo]` index
    /// triples, shadow start positions, and rank.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "base": self.base.letters().iter().map(|g| g.index()).collect::<Vec<_>>(),
            "members": self.members.iter()
                .map(|m| m.letters().iter().map(|g| g.index()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|e| [e.a, e.b, e.shadow_lo]).collect::<Vec<_>>(),
            "shadows": self.shadow_los.iter().collect::<Vec<_>>(),
            "rank": self.rank(),
        })
    }

    /// DOT rendering of the braid graph with edges colored by shadow
    /// position.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph braid_class {\n");
        for member in &self.members {
            out.push_str(&format!("  \"{member}\";\n"));
        }
        for e in &self.edges {
            let color = SHADOW_PALETTE[(e.shadow_lo - 1) % SHADOW_PALETTE.len()];
            out.push_str(&format!(
                "  \"{}\" -- \"{}\" [color={}, label=\"{}\"];\n",
                self.members[e.a], self.members[e.b], color, e.shadow_lo
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// Kind of move labeling a Matsumoto graph edge.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum MoveKind {
    Commutation,
    Braid,
}

/// An edge of a Matsumoto graph, labeled by the move kind and its position.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct MatsumotoEdge {
    pub a: usize,
    pub b: usize,
    pub kind: MoveKind,
    pub lo: usize,
}

/// The Matsumoto graph of a group element: all reduced expressions, with
/// edges for single commutation or braid moves.
#[derive(Clone, Debug)]
pub struct MatsumotoGraph {
    members: Vec<Word>,
    edges: Vec<MatsumotoEdge>,
}

impl MatsumotoGraph {
    pub fn members(&self) -> &[Word] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn edges(&self) -> &[MatsumotoEdge] {
        &self.edges
    }

    pub fn member_index(&self, word: &Word) -> Option<usize> {
        self.members.binary_search(word).ok()
    }

    fn components(&self, keep: impl Fn(&MatsumotoEdge) -> bool) -> Vec<Vec<usize>> {
        let mut adjacency = vec![Vec::new(); self.members.len()];
        for e in self.edges.iter().filter(|e| keep(e)) {
            adjacency[e.a].push(e.b);
            adjacency[e.b].push(e.a);
        }
        let mut seen = vec![false; self.members.len()];
        let mut components = Vec::new();
        for start in 0..self.members.len() {
            if seen[start] {
                continue;
            }
            let mut component = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &u in &adjacency[v] {
                    if !seen[u] {
                        seen[u] = true;
                        component.push(u);
                        queue.push_back(u);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components.sort();
        components
    }

    /// Connected components using braid edges only; these are exactly the
    /// braid classes of the element.
    pub fn braid_components(&self) -> Vec<Vec<usize>> {
        self.components(|e| e.kind == MoveKind::Braid)
    }

    /// Connected components using commutation edges only; these are the
    /// commutation classes.
    pub fn commutation_components(&self) -> Vec<Vec<usize>> {
        self.components(|e| e.kind == MoveKind::Commutation)
    }

    /// Whether the whole graph is connected (it always is, for a reduced
    /// input).
    pub fn is_connected(&self) -> bool {
        self.components(|_| true).len() == 1
    }

    /// DOT rendering with braid edges in blue and commutation edges in
    /// orange.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph matsumoto {\n");
        for member in &self.members {
            out.push_str(&format!("  \"{member}\";\n"));
        }
        for e in &self.edges {
            let color = match e.kind {
                MoveKind::Braid => "blue",
                MoveKind::Commutation => "orange",
            };
            out.push_str(&format!(
                "  \"{}\" -- \"{}\" [color={}];\n",
                self.members[e.a], self.members[e.b], color
            ));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut braid_sizes: Vec<usize> =
            self.braid_components().iter().map(|c| c.len()).collect();
        braid_sizes.sort_unstable_by(|x, y| y.cmp(x));
        let mut commutation_sizes: Vec<usize> =
            self.commutation_components().iter().map(|c| c.len()).collect();
        commutation_sizes.sort_unstable_by(|x, y| y.cmp(x));
        json!({
            "members": self.members.iter()
                .map(|m| m.letters().iter().map(|g| g.index()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|e| json!({
                "a": e.a,
                "b": e.b,
                "kind": match e.kind { MoveKind::Braid => "braid", MoveKind::Commutation => "commutation" },
                "lo": e.lo,
            })).collect::<Vec<_>>(),
            "braid_class_sizes": braid_sizes,
            "commutation_class_sizes": commutation_sizes,
        })
    }
}

fn commutation_starts(graph: &CoxeterGraph, letters: &[Generator]) -> Vec<usize> {
    (0..letters.len().saturating_sub(1))
        .filter(|&i| {
            let s = letters[i];
            let t = letters[i + 1];
            s != t && !graph.bonded(s, t)
        })
        .map(|i| i + 1)
        .collect()
}

fn commutation_successors(graph: &CoxeterGraph, letters: &[Generator], out: &mut Vec<Letters>) {
    for lo in commutation_starts(graph, letters) {
        let mut next = letters.to_vec();
        next.swap(lo - 1, lo);
        out.push(next);
    }
}

/// Enumerates all reduced expressions of the element of `base` by closure
/// under both move kinds, which reaches everything by Matsumoto's theorem.
pub fn enumerate_matsumoto(graph: &CoxeterGraph, base: &Word, cap: usize) -> Result<MatsumotoGraph> {
    base.check_against(graph)?;
    if !is_reduced(graph, base)? {
        return Err(Error::NotReduced);
    }
    let (order, _) = closure(graph, base, cap, |g, letters, out| {
        braid_successors(g, letters, out);
        commutation_successors(g, letters, out);
    })?;
    let mut members: Vec<Word> = order.into_iter().map(Word::from_generators).collect();
    members.sort();
    let index_of: HashMap<&Word, usize> = members.iter().zip(0..).collect();

    let mut edge_set: BTreeSet<MatsumotoEdge> = BTreeSet::new();
    for (idx, member) in members.iter().enumerate() {
        for lo in shadow_starts(graph, member.letters()) {
            let mut next = member.letters().to_vec();
            let s = next[lo - 1];
            let t = next[lo];
            next[lo - 1] = t;
            next[lo] = s;
            next[lo + 1] = t;
            let other = index_of[&Word::from_generators(next)];
            edge_set.insert(MatsumotoEdge {
                a: idx.min(other),
                b: idx.max(other),
                kind: MoveKind::Braid,
                lo,
            });
        }
        for lo in commutation_starts(graph, member.letters()) {
            let mut next = member.letters().to_vec();
            next.swap(lo - 1, lo);
            let other = index_of[&Word::from_generators(next)];
            edge_set.insert(MatsumotoEdge {
                a: idx.min(other),
                b: idx.max(other),
                kind: MoveKind::Commutation,
                lo,
            });
        }
    }
    Ok(MatsumotoGraph {
        members,
        edges: edge_set.into_iter().collect(),
    })
}

/// Closure of `base` under commutation moves only, in lexicographic order.
pub fn commutation_class(graph: &CoxeterGraph, base: &Word, cap: usize) -> Result<Vec<Word>> {
    base.check_against(graph)?;
    if !is_reduced(graph, base)? {
        return Err(Error::NotReduced);
    }
    let (order, _) = closure(graph, base, cap, commutation_successors)?;
    let mut members: Vec<Word> = order.into_iter().map(Word::from_generators).collect();
    members.sort();
    Ok(members)
}

/// Convenience wrapper for [`BraidClass::enumerate`].
pub fn enumerate_braid_class(graph: &CoxeterGraph, base: &Word, cap: usize) -> Result<BraidClass> {
    BraidClass::enumerate(graph, base, cap)
}
