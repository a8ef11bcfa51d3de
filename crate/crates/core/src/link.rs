//! Links, link factorization, box-product verification, Fibonacci links, and
//! the explicit type-A strings.
//!
//! A reduced word of odd length `2r+1` is a link when the shadows of its
//! braid class are exactly `[1,3], [3,5], ..., [2r-1,2r+1]`; single letters
//! are links of rank 0. Every reduced word factors uniquely into maximal
//! links, computed here by grouping the class shadows into runs that overlap
//! in single positions (shadows at adjacent start positions never occur, so
//! the runs are well defined).

use std::collections::BTreeSet;
use std::fmt;

use serde_json::json;

use crate::braid::BraidClass;
use crate::embed::SimpleGraph;
use crate::error::{Error, Result};
use crate::graph::{CoxeterGraph, Generator};
use crate::oracle::{small_iso, IsoWitness};
use crate::word::{apply_braid_move, braid_shadows, is_reduced, Interval, Word};

/// One factor of a link factorization: the positions it spans in the original
/// word and the subword itself.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinkFactor {
    pub span: Interval,
    pub word: Word,
}

impl LinkFactor {
    /// Rank of the factor as a link: `(len - 1) / 2`.
    pub fn rank(&self) -> usize {
        (self.word.len() - 1) / 2
    }

    /// Global positions of the factor's even-index letters.
    pub fn even_positions(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.rank()).map(|k| self.span.lo() + 2 * k - 1)
    }
}

/// The unique decomposition of a reduced word into maximal link subwords.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinkFactorization {
    pub factors: Vec<LinkFactor>,
}

impl LinkFactorization {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Sum of the factor ranks, which equals the rank of the word.
    pub fn rank(&self) -> usize {
        self.factors.iter().map(LinkFactor::rank).sum()
    }
}

impl fmt::Display for LinkFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|f| f.word.to_string()).collect();
        write!(f, "{}", parts.join(" | "))
    }
}

fn link_shadow_los(word_len: usize) -> BTreeSet<usize> {
    (1..word_len.saturating_sub(1)).step_by(2).collect()
}

/// Whether an already-enumerated class is the class of a link.
pub(crate) fn class_is_link(class: &BraidClass) -> bool {
    let len = class.word_len();
    if len == 1 {
        return true;
    }
    len % 2 == 1 && class.shadow_los().collect::<BTreeSet<_>>() == link_shadow_los(len)
}

/// Whether `w` is a link: a single letter, or a word of odd length whose
/// class shadows tile the positions with single-position overlaps.
pub fn is_link(graph: &CoxeterGraph, word: &Word, cap: usize) -> Result<bool> {
    word.check_against(graph)?;
    if !is_reduced(graph, word)? {
        return Err(Error::NotReduced);
    }
    if word.len() == 1 {
        return Ok(true);
    }
    if word.len().is_multiple_of(2) {
        return Ok(false);
    }
    let class = BraidClass::enumerate(graph, word, cap)?;
    Ok(class_is_link(&class))
}

fn factorization_from_class(class: &BraidClass) -> LinkFactorization {
    let word = class.base();
    let los: Vec<usize> = class.shadow_los().collect();

    // Group shadows into maximal runs stepping by two; each run spans a link
    // factor, and uncovered positions become singleton factors.
    let mut spans: Vec<Interval> = Vec::new();
    let mut i = 0;
    while i < los.len() {
        let start = los[i];
        let mut end = i;
        while end + 1 < los.len() && los[end + 1] == los[end] + 2 {
            end += 1;
        }
        spans.push(Interval::new(start, los[end] + 2));
        i = end + 1;
    }

    let mut factors = Vec::new();
    let mut pos = 1;
    let mut span_iter = spans.into_iter().peekable();
    while pos <= word.len() {
        if let Some(&span) = span_iter.peek() {
            if span.lo() == pos {
                factors.push(LinkFactor {
                    span,
                    word: word.subword(span),
                });
                pos = span.hi() + 1;
                span_iter.next();
                continue;
            }
        }
        let span = Interval::point(pos);
        factors.push(LinkFactor {
            span,
            word: word.subword(span),
        });
        pos += 1;
    }
    LinkFactorization { factors }
}

/// The link factorization of a reduced word. Factors appear left to right,
/// their spans cover every position exactly once, and their concatenation is
/// the input word.
pub fn link_factorization(graph: &CoxeterGraph, word: &Word, cap: usize) -> Result<LinkFactorization> {
    word.check_against(graph)?;
    if !is_reduced(graph, word)? {
        return Err(Error::NotReduced);
    }
    let class = BraidClass::enumerate(graph, word, cap)?;
    Ok(factorization_from_class(&class))
}

/// Outcome of checking the box-product decomposition of a braid graph
/// against its link factorization.
#[derive(Clone, Debug)]
pub struct BoxProductReport {
    pub class_size: usize,
    pub factor_sizes: Vec<usize>,
    pub cardinality_ok: bool,
    pub rank: usize,
    pub factor_ranks: Vec<usize>,
    pub rank_ok: bool,
    pub isomorphism_ok: bool,
    pub failure: Option<String>,
}

impl BoxProductReport {
    pub fn pass(&self) -> bool {
        self.cardinality_ok && self.rank_ok && self.isomorphism_ok
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "class_size": self.class_size,
            "factor_sizes": self.factor_sizes,
            "cardinality_ok": self.cardinality_ok,
            "rank": self.rank,
            "factor_ranks": self.factor_ranks,
            "rank_ok": self.rank_ok,
            "isomorphism_ok": self.isomorphism_ok,
            "pass": self.pass(),
            "failure": self.failure,
        })
    }
}

/// Checks that the braid graph of `w` decomposes as the box product of the
/// braid graphs of its link factors: cardinality and rank identities, plus an
/// explicit edge-set comparison under the factorization bijection.
pub fn verify_box_product(graph: &CoxeterGraph, word: &Word, cap: usize) -> Result<BoxProductReport> {
    let class = BraidClass::enumerate(graph, word, cap)?;
    let factorization = factorization_from_class(&class);

    let factor_classes: Vec<BraidClass> = factorization
        .factors
        .iter()
        .map(|f| BraidClass::enumerate(graph, &f.word, cap))
        .collect::<Result<_>>()?;

    let factor_sizes: Vec<usize> = factor_classes.iter().map(BraidClass::len).collect();
    let product: usize = factor_sizes.iter().product();
    let cardinality_ok = class.len() == product;

    let factor_ranks: Vec<usize> = factor_classes.iter().map(BraidClass::rank).collect();
    let rank_sum: usize = factor_ranks.iter().sum();
    let rank_ok = class.rank() == rank_sum;

    let mut failure = None;

    // Map each member to its tuple of factor-class indices.
    let mut tuples: Vec<Vec<usize>> = Vec::with_capacity(class.len());
    'members: for member in class.members() {
        let mut tuple = Vec::with_capacity(factorization.factors.len());
        for (factor, fc) in factorization.factors.iter().zip(&factor_classes) {
            match fc.member_index(&member.subword(factor.span)) {
                Some(idx) => tuple.push(idx),
                None => {
                    failure = Some(format!(
                        "member {member} restricted to {} is not in the factor class",
                        factor.span
                    ));
                    tuples.push(Vec::new());
                    continue 'members;
                }
            }
        }
        tuples.push(tuple);
    }

    let isomorphism_ok = failure.is_none() && {
        // Injectivity of the tuple map.
        let distinct: BTreeSet<&Vec<usize>> = tuples.iter().collect();
        if distinct.len() != tuples.len() {
            failure = Some("factorization tuple map is not injective".into());
            false
        } else {
            // Edge sets must correspond exactly: an edge of the braid graph
            // must change one tuple coordinate along a factor edge, and every
            // box-product edge must be realized.
            let mut mapped_edges: BTreeSet<(Vec<usize>, Vec<usize>)> = BTreeSet::new();
            let mut edges_ok = true;
            'edges: for e in class.edges() {
                let ta = &tuples[e.a];
                let tb = &tuples[e.b];
                let diffs: Vec<usize> = (0..ta.len()).filter(|&i| ta[i] != tb[i]).collect();
                if diffs.len() != 1 {
                    failure = Some(format!(
                        "edge {} -- {} changes {} factor coordinates",
                        class.members()[e.a],
                        class.members()[e.b],
                        diffs.len()
                    ));
                    edges_ok = false;
                    break 'edges;
                }
                let f = diffs[0];
                let (x, y) = (ta[f].min(tb[f]), ta[f].max(tb[f]));
                if !factor_classes[f]
                    .edges()
                    .iter()
                    .any(|fe| fe.a == x && fe.b == y)
                {
                    failure = Some(format!(
                        "edge {} -- {} does not project to a factor edge",
                        class.members()[e.a],
                        class.members()[e.b]
                    ));
                    edges_ok = false;
                    break 'edges;
                }
                let key = if ta <= tb {
                    (ta.clone(), tb.clone())
                } else {
                    (tb.clone(), ta.clone())
                };
                mapped_edges.insert(key);
            }
            if edges_ok {
                let box_edge_count: usize = (0..factor_classes.len())
                    .map(|f| {
                        factor_classes[f].edges().len()
                            * factor_sizes
                                .iter()
                                .enumerate()
                                .filter(|&(i, _)| i != f)
                                .map(|(_, &s)| s)
                                .product::<usize>()
                    })
                    .sum();
                if mapped_edges.len() != box_edge_count {
                    failure = Some(format!(
                        "braid graph realizes {} of {} box-product edges",
                        mapped_edges.len(),
                        box_edge_count
                    ));
                    false
                } else {
                    true
                }
            } else {
                false
            }
        }
    };

    Ok(BoxProductReport {
        class_size: class.len(),
        factor_sizes,
        cardinality_ok,
        rank: class.rank(),
        factor_ranks,
        rank_ok,
        isomorphism_ok,
        failure,
    })
}

/// Whether `w` is a Fibonacci link: a link whose own shadows already realize
/// every class shadow.
pub fn is_fibonacci_link(graph: &CoxeterGraph, word: &Word, cap: usize) -> Result<bool> {
    word.check_against(graph)?;
    if !is_reduced(graph, word)? {
        return Err(Error::NotReduced);
    }
    if word.len() == 1 {
        return Ok(true);
    }
    if word.len().is_multiple_of(2) {
        return Ok(false);
    }
    let class = BraidClass::enumerate(graph, word, cap)?;
    if !class_is_link(&class) {
        return Ok(false);
    }
    let own: BTreeSet<usize> = braid_shadows(graph, word)?
        .into_iter()
        .map(|iv| iv.lo())
        .collect();
    Ok(own == class.shadow_los().collect::<BTreeSet<_>>())
}

/// Writes a Fibonacci link in its canonical shape `s t_1 s t_2 ... s t_r s`:
/// the repeated odd-position letter and the list of even-position letters.
/// Every `t_i` is bonded to `s`, and distinct `t_i, t_j` commute.
pub fn fibonacci_form(
    graph: &CoxeterGraph,
    word: &Word,
    cap: usize,
) -> Result<(Generator, Vec<Generator>)> {
    if !is_fibonacci_link(graph, word, cap)? {
        return Err(Error::NotFibonacci);
    }
    let s = word.letter(1);
    let rank = (word.len() - 1) / 2;
    let mut ts = Vec::with_capacity(rank);
    for k in 1..=rank {
        if word.letter(2 * k + 1) != s {
            return Err(Error::InternalInvariantViolation(format!(
                "Fibonacci link {word} has a non-constant odd position"
            )));
        }
        ts.push(word.letter(2 * k));
    }
    for &t in &ts {
        if !graph.bonded(s, t) {
            return Err(Error::InternalInvariantViolation(format!(
                "Fibonacci link {word}: {s} and {t} are not bonded"
            )));
        }
    }
    for (i, &t) in ts.iter().enumerate() {
        for &u in &ts[i + 1..] {
            if t != u && graph.bond_order(t, u)? != 2 {
                return Err(Error::InternalInvariantViolation(format!(
                    "Fibonacci link {word}: even letters {t} and {u} do not commute"
                )));
            }
        }
    }
    Ok((s, ts))
}

/// Whether the support of the link `w` induces a star in the Coxeter graph.
/// In a triangle-free system this holds exactly when some member of `[w]` is
/// a Fibonacci link.
pub fn star_criterion(graph: &CoxeterGraph, word: &Word, cap: usize) -> Result<bool> {
    if !graph.is_triangle_free() {
        return Err(Error::NotTriangleFree);
    }
    if !is_link(graph, word, cap)? {
        return Err(Error::NotALink);
    }
    let induced = graph.induced_support_subgraph(&word.support())?;
    Ok(induced.graph.is_star())
}

/// Sign of a type-A string.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Epsilon {
    Plus,
    Minus,
    Zero,
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Epsilon::Plus => write!(f, "+"),
            Epsilon::Minus => write!(f, "-"),
            Epsilon::Zero => write!(f, "0"),
        }
    }
}

impl std::str::FromStr for Epsilon {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" | "plus" => Ok(Epsilon::Plus),
            "-" | "minus" => Ok(Epsilon::Minus),
            "0" | "zero" => Ok(Epsilon::Zero),
            other => Err(Error::Parse(format!(
                "unknown sign {other:?}; expected +, -, or 0"
            ))),
        }
    }
}

/// Parameters `(l, k, m, eps)` of a type-A string.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct StringSpec {
    pub l: usize,
    pub k: usize,
    pub m: usize,
    pub eps: Epsilon,
}

impl StringSpec {
    pub fn validate(&self) -> Result<()> {
        if self.l < 1 {
            return Err(Error::SpecInvalid("l must be positive".into()));
        }
        if self.k > self.l - 1 {
            return Err(Error::SpecInvalid(format!(
                "k must be at most l-1 = {}",
                self.l - 1
            )));
        }
        if self.m < 1 {
            return Err(Error::SpecInvalid("m must be positive".into()));
        }
        if self.eps == Epsilon::Zero && self.l > 2 {
            return Err(Error::SpecInvalid(
                "sign 0 is only defined for l <= 2".into(),
            ));
        }
        Ok(())
    }

    /// Smallest ambient rank of a type-A graph containing the string.
    pub fn min_ambient_rank(&self) -> usize {
        self.m + self.l - 1
    }
}

/// Builds the type-A string of `spec`: the first `2l-1` letters of the
/// descending-pair product
/// `(m+1, m)(m+2, m+1)...(m+k, m+k-1)  m+k  (m+k+1, m+k)(m+k+2, m+k+1)...`,
/// with the minus form defined as the reverse of the plus form at `l-1-k`.
pub fn type_a_string(spec: &StringSpec) -> Result<Word> {
    spec.validate()?;
    let k = match spec.eps {
        Epsilon::Minus => spec.l - 1 - spec.k,
        _ => spec.k,
    };
    let target = 2 * spec.l - 1;
    let mut letters = Vec::with_capacity(target + 2);
    let mut j = 1;
    while letters.len() < target {
        if j == k + 1 {
            letters.push(spec.m + k);
        }
        letters.push(spec.m + j);
        letters.push(spec.m + j - 1);
        j += 1;
    }
    letters.truncate(target);
    if spec.eps == Epsilon::Minus {
        letters.reverse();
    }
    Ok(Word::new(letters))
}

/// Like [`type_a_string`], but also checks the string fits inside `A_n`.
pub fn type_a_string_in_rank(spec: &StringSpec, n: usize) -> Result<Word> {
    spec.validate()?;
    if n < spec.min_ambient_rank() {
        return Err(Error::RankTooSmall {
            family: "A",
            min: spec.min_ambient_rank(),
            got: n,
        });
    }
    type_a_string(spec)
}

fn require_link_class(class: &BraidClass) -> Result<()> {
    if class_is_link(class) {
        Ok(())
    } else {
        Err(Error::NotALink)
    }
}

/// The lexicographically least member of a link class exhibiting the
/// overlapping shadows `[2i-1,2i+1]` and `[2i+1,2i+3]` simultaneously. Such a
/// member always exists for `1 <= i <= rank-1`.
pub fn choose_sigma(class: &BraidClass, i: usize) -> Result<Word> {
    require_link_class(class)?;
    let rank = class.rank();
    if rank < 2 || i < 1 || i > rank - 1 {
        return Err(Error::SpecInvalid(format!(
            "shadow overlap index {i} out of range for a link of rank {rank}"
        )));
    }
    let (first, second) = (2 * i - 1, 2 * i + 1);
    for member in class.members() {
        let shadows = braid_shadows(class.graph(), member)?;
        let los: Vec<usize> = shadows.iter().map(|iv| iv.lo()).collect();
        if los.contains(&first) && los.contains(&second) {
            return Ok(member.clone());
        }
    }
    Err(Error::NoSuchMember)
}

/// Splits a link class against `sigma` at its last even position: `X` holds
/// the members that agree with `sigma` at position `2r`, `Y` the rest. With
/// `sigma` chosen per [`choose_sigma`] at the rightmost overlap, both parts
/// are nonempty.
pub fn partition_xy(class: &BraidClass, sigma: &Word) -> Result<(Vec<Word>, Vec<Word>)> {
    require_link_class(class)?;
    if !class.contains(sigma) {
        return Err(Error::NotInClass);
    }
    let rank = class.rank();
    if rank < 1 {
        return Err(Error::SpecInvalid(
            "partition requires a link of rank at least 1".into(),
        ));
    }
    let pos = 2 * rank;
    let pivot = sigma.letter(pos);
    let mut x = Vec::new();
    let mut y = Vec::new();
    for member in class.members() {
        if member.letter(pos) == pivot {
            x.push(member.clone());
        } else {
            y.push(member.clone());
        }
    }
    Ok((x, y))
}

/// Result of probing whether the induced subgraph on `Y` is itself the braid
/// graph of a link. Proven for Fibonacci links and conjectural in general,
/// so callers report the outcome instead of asserting it.
#[derive(Clone, Debug)]
pub struct YSubgraphProbe {
    pub y_size: usize,
    pub matched_link: Option<Word>,
}

/// Compares the induced subgraph on `Y_sigma` against the braid graphs of
/// candidate links obtained from members of `Y` by flipping the rightmost
/// shadow and deleting the last four letters.
pub fn y_subgraph_probe(class: &BraidClass, sigma: &Word, cap: usize) -> Result<YSubgraphProbe> {
    let (_, y) = partition_xy(class, sigma)?;
    let rank = class.rank();

    let index_in_y: Vec<usize> = y
        .iter()
        .map(|m| class.member_index(m).expect("y member in class"))
        .collect();
    let mut y_graph = SimpleGraph::from_labels(y.iter().map(|m| m.to_string()).collect());
    for e in class.edges() {
        if let (Some(a), Some(b)) = (
            index_in_y.iter().position(|&i| i == e.a),
            index_in_y.iter().position(|&i| i == e.b),
        ) {
            y_graph.add_edge(a, b);
        }
    }

    let mut candidates: BTreeSet<Word> = BTreeSet::new();
    for member in &y {
        if member.len() < 5 {
            continue;
        }
        if let Ok(flipped) = apply_braid_move(class.graph(), member, 2 * rank - 1) {
            candidates.insert(flipped.subword(Interval::new(1, member.len() - 4)));
        }
    }

    for candidate in candidates {
        let candidate_class = BraidClass::enumerate(class.graph(), &candidate, cap)?;
        let mut candidate_graph =
            SimpleGraph::from_labels(candidate_class.members().iter().map(|m| m.to_string()).collect());
        for e in candidate_class.edges() {
            candidate_graph.add_edge(e.a, e.b);
        }
        if let IsoWitness::Isomorphic(_) = small_iso(&y_graph, &candidate_graph)? {
            return Ok(YSubgraphProbe {
                y_size: y.len(),
                matched_link: Some(candidate),
            });
        }
    }
    Ok(YSubgraphProbe {
        y_size: y.len(),
        matched_link: None,
    })
}
