//! Words over the generators: supports, reducedness, and single moves.
//!
//! Reducedness is decided with the integer geometric representation: the word
//! `s_{x_1} ... s_{x_m}` is reduced exactly when every prefix sends the next
//! simple root to a positive root. Everything is exact `i64` arithmetic, so
//! the check works uniformly in the infinite affine types. Positions are
//! 1-based in the entire public API.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{CoxeterGraph, Generator};

/// A word over the generators of an ambient Coxeter graph.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Word {
    letters: Vec<Generator>,
}

impl Word {
    pub fn new(letters: impl IntoIterator<Item = usize>) -> Self {
        Word {
            letters: letters.into_iter().map(Generator).collect(),
        }
    }

    pub fn from_generators(letters: Vec<Generator>) -> Self {
        Word { letters }
    }

    /// Parses whitespace- or comma-separated generator indices,
    /// e.g. `"2 3 2 1 4 3 4"` or `"2,3,2"`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for token in text.split(|c: char| c.is_whitespace() || c == ',') {
            if token.is_empty() {
                continue;
            }
            let index: usize = token
                .parse()
                .map_err(|_| Error::Parse(format!("invalid generator index {token:?}")))?;
            if index == 0 {
                return Err(Error::Parse("generator indices are 1-based".into()));
            }
            letters.push(Generator(index));
        }
        if letters.is_empty() {
            return Err(Error::Parse("word must contain at least one letter".into()));
        }
        Ok(Word { letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    /// Letter at 1-based position `pos`.
    pub fn letter(&self, pos: usize) -> Generator {
        self.letters[pos - 1]
    }

    /// The subword spanning `iv` (inclusive, 1-based).
    pub fn subword(&self, iv: Interval) -> Word {
        Word {
            letters: self.letters[iv.lo() - 1..iv.hi()].to_vec(),
        }
    }

    /// All letters as a set.
    pub fn support(&self) -> BTreeSet<Generator> {
        self.letters.iter().copied().collect()
    }

    pub(crate) fn check_against(&self, graph: &CoxeterGraph) -> Result<()> {
        if self.letters.is_empty() {
            return Err(Error::Parse("word must contain at least one letter".into()));
        }
        for &g in &self.letters {
            graph.check_generator(g)?;
        }
        Ok(())
    }
}

impl fmt::Display for Word {
    /// Compact digit form (`2321434`) when every index is a single digit,
    /// space-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.iter().all(|g| g.0 <= 9) {
            for g in &self.letters {
                write!(f, "{}", g.0)?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.letters.iter().map(|g| g.0.to_string()).collect();
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// A closed 1-based interval of positions; `[i,i]` is the degenerate interval.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Interval {
    lo: usize,
    hi: usize,
}

impl Interval {
    /// Requires `1 <= lo <= hi`.
    pub fn new(lo: usize, hi: usize) -> Self {
        assert!(1 <= lo && lo <= hi, "interval requires 1 <= lo <= hi");
        Interval { lo, hi }
    }

    pub fn point(i: usize) -> Self {
        Self::new(i, i)
    }

    /// The three-position interval `[lo, lo+2]` of a braid shadow.
    pub fn shadow(lo: usize) -> Self {
        Self::new(lo, lo + 2)
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }

    /// Number of positions covered; never zero.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn positions(&self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }

    pub fn check_within(&self, word_len: usize) -> Result<()> {
        if self.hi > word_len {
            Err(Error::IntervalOutOfRange {
                lo: self.lo,
                hi: self.hi,
                len: word_len,
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "[{}]", self.lo)
        } else {
            write!(f, "[{},{}]", self.lo, self.hi)
        }
    }
}

/// Coordinates of a vector in the simple-root basis.
pub type RootCoordinates = Vec<i64>;

/// The simple root of `s` in an ambient graph on `n` generators.
pub fn simple_root(n: usize, s: Generator) -> RootCoordinates {
    let mut v = vec![0; n];
    v[s.0 - 1] = 1;
    v
}

/// Applies the simple reflection of `s` to `v` in the geometric
/// representation: `s(a_t) = a_t - A[s][t] a_s` extended linearly. The result
/// is exact, and applying the same reflection twice returns `v`.
pub fn reflect(graph: &CoxeterGraph, s: Generator, v: &RootCoordinates) -> RootCoordinates {
    let mut out = v.clone();
    reflect_in_place(graph, s, &mut out);
    out
}

fn reflect_in_place(graph: &CoxeterGraph, s: Generator, v: &mut [i64]) {
    // Only the s-coordinate changes: v[s] <- -v[s] + sum of bonded coords.
    let mut acc = -v[s.0 - 1];
    for t in graph.neighbors(s) {
        acc += v[t.0 - 1];
    }
    v[s.0 - 1] = acc;
}

fn is_positive(v: &[i64]) -> bool {
    v.iter().all(|&c| c >= 0) && v.iter().any(|&c| c > 0)
}

/// Whether `w` is a reduced expression: every prefix must send the next
/// simple root to a positive root.
pub fn is_reduced(graph: &CoxeterGraph, word: &Word) -> Result<bool> {
    word.check_against(graph)?;
    for i in 1..=word.len() {
        if !prefix_sends_positive(graph, word.letters(), i) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether appending `s` to the reduced word `w` keeps it reduced.
pub fn extension_is_reduced(graph: &CoxeterGraph, word: &Word, s: Generator) -> Result<bool> {
    graph.check_generator(s)?;
    for &g in word.letters() {
        graph.check_generator(g)?;
    }
    let mut v = simple_root(graph.generator_count(), s);
    for &g in word.letters().iter().rev() {
        reflect_in_place(graph, g, &mut v);
    }
    Ok(is_positive(&v))
}

fn prefix_sends_positive(graph: &CoxeterGraph, letters: &[Generator], i: usize) -> bool {
    let mut v = simple_root(graph.generator_count(), letters[i - 1]);
    for &g in letters[..i - 1].iter().rev() {
        reflect_in_place(graph, g, &mut v);
    }
    is_positive(&v)
}

/// The matrix of a word in the geometric representation. Equal fingerprints
/// mean equal group elements, which is how class closure is sanity-checked.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Fingerprint {
    n: usize,
    entries: Vec<i64>,
}

impl Fingerprint {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.entries[(row - 1) * self.n + (col - 1)]
    }

    pub fn is_identity(&self) -> bool {
        (1..=self.n).all(|r| (1..=self.n).all(|c| self.entry(r, c) == i64::from(r == c)))
    }
}

/// Product of reflection matrices for the letters of `w`, left to right.
pub fn group_element_fingerprint(graph: &CoxeterGraph, word: &Word) -> Result<Fingerprint> {
    for &g in word.letters() {
        graph.check_generator(g)?;
    }
    let n = graph.generator_count();
    let mut m = vec![0i64; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    let cartan = graph.cartan();
    for &s in word.letters() {
        // Right-multiply by the reflection matrix of s:
        // (M')[i][j] = M[i][j] - M[i][s] * A[s][j].
        let sc = s.0 - 1;
        for row in 0..n {
            let pivot = m[row * n + sc];
            if pivot == 0 {
                continue;
            }
            for col in 0..n {
                let a = cartan.entry(s, Generator(col + 1));
                if a != 0 {
                    m[row * n + col] -= pivot * a;
                }
            }
        }
    }
    Ok(Fingerprint { n, entries: m })
}

/// The letters of `w` over `iv` as a set.
pub fn local_support(word: &Word, iv: Interval) -> Result<BTreeSet<Generator>> {
    iv.check_within(word.len())?;
    Ok(iv.positions().map(|p| word.letter(p)).collect())
}

/// 1-based start positions of the braid shadows of a letter sequence; no
/// reducedness check.
pub(crate) fn shadow_starts(graph: &CoxeterGraph, letters: &[Generator]) -> Vec<usize> {
    let mut out = Vec::new();
    for i in 0..letters.len().saturating_sub(2) {
        if letters[i] == letters[i + 2] && graph.bonded(letters[i], letters[i + 1]) {
            out.push(i + 1);
        }
    }
    out
}

/// All braid shadows of the reduced word `w`: the intervals `[i,i+2]` with
/// `w[i] = w[i+2]` and `m(w[i], w[i+1]) = 3`, in ascending order.
pub fn braid_shadows(graph: &CoxeterGraph, word: &Word) -> Result<Vec<Interval>> {
    if !is_reduced(graph, word)? {
        return Err(Error::NotReduced);
    }
    Ok(shadow_starts(graph, word.letters())
        .into_iter()
        .map(Interval::shadow)
        .collect())
}

/// Applies the braid move `sts -> tst` in positions `[lo, lo+2]`. The move is
/// an involution: applying it twice at the same position returns the word.
pub fn apply_braid_move(graph: &CoxeterGraph, word: &Word, lo: usize) -> Result<Word> {
    word.check_against(graph)?;
    if lo < 1 || lo + 2 > word.len() {
        return Err(Error::NotAShadow { lo });
    }
    let s = word.letter(lo);
    let t = word.letter(lo + 1);
    if word.letter(lo + 2) != s || !graph.bonded(s, t) {
        return Err(Error::NotAShadow { lo });
    }
    let mut letters = word.letters().to_vec();
    letters[lo - 1] = t;
    letters[lo] = s;
    letters[lo + 1] = t;
    Ok(Word::from_generators(letters))
}

/// Swaps the commuting letters at positions `lo` and `lo+1`.
pub fn apply_commutation_move(graph: &CoxeterGraph, word: &Word, lo: usize) -> Result<Word> {
    word.check_against(graph)?;
    if lo < 1 || lo + 1 > word.len() {
        return Err(Error::NotACommutation { lo });
    }
    let s = word.letter(lo);
    let t = word.letter(lo + 1);
    if graph.bond_order(s, t)? != 2 {
        return Err(Error::NotACommutation { lo });
    }
    let mut letters = word.letters().to_vec();
    letters.swap(lo - 1, lo);
    Ok(Word::from_generators(letters))
}
