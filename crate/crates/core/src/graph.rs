//! Simply-laced Coxeter graphs.
//!
//! A graph on generators `1..=n` stores the set of bonds `{s,t}` with
//! `m(s,t) = 3`; a missing bond means `m(s,t) = 2` and the diagonal is
//! `m(s,s) = 1`. Only simply-laced systems are representable: bond orders of
//! four or more are rejected at construction, which is what every theorem in
//! this crate assumes.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A Coxeter generator, identified by its 1-based index.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Generator(pub usize);

impl Generator {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The standard simply-laced families.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Family {
    A,
    D,
    /// Affine type `A~` (a cycle for rank 2 and above).
    ATilde,
    /// Affine type `D~`.
    DTilde,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Family::A => "A",
            Family::D => "D",
            Family::ATilde => "A~",
            Family::DTilde => "D~",
        };
        write!(f, "{name}")
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Family::A),
            "D" | "d" => Ok(Family::D),
            "A~" | "a~" => Ok(Family::ATilde),
            "D~" | "d~" => Ok(Family::DTilde),
            other => Err(Error::Parse(format!(
                "unknown family {other:?}; expected A, D, A~, or D~"
            ))),
        }
    }
}

/// A simply-laced Coxeter graph: `n` generators plus the set of order-3 bonds.
///
/// Immutable after construction, so values can be shared freely across
/// threads.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoxeterGraph {
    n: usize,
    bonds: BTreeSet<(usize, usize)>,
    adj: Vec<bool>, // n*n adjacency, row-major
}

impl CoxeterGraph {
    /// Builds a graph on `n` generators with the given bonds. Bond pairs are
    /// unordered and duplicates collapse; self-loops and out-of-range
    /// endpoints are rejected.
    pub fn new(n: usize, bonds: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n < 1 {
            return Err(Error::OutOfRange { index: 0, rank: n });
        }
        let mut set = BTreeSet::new();
        for (a, b) in bonds {
            if a < 1 || a > n {
                return Err(Error::OutOfRange { index: a, rank: n });
            }
            if b < 1 || b > n {
                return Err(Error::OutOfRange { index: b, rank: n });
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            set.insert((a.min(b), a.max(b)));
        }
        let mut adj = vec![false; n * n];
        for &(a, b) in &set {
            adj[(a - 1) * n + (b - 1)] = true;
            adj[(b - 1) * n + (a - 1)] = true;
        }
        Ok(CoxeterGraph { n, bonds: set, adj })
    }

    /// Builds one of the standard simply-laced graphs.
    ///
    /// Labels follow the usual conventions: `A_n` is the path `1-2-...-n`;
    /// `D_n` attaches generator 1 to generator 3 of the path `2-3-...-n`;
    /// `A~_n` is the path `1-...-n` closed up through generator `n+1`; and
    /// `D~_n` forks at both ends of the path `3-...-(n-1)`.
    pub fn standard_family(family: Family, n: usize) -> Result<Self> {
        let too_small = |name, min| Error::RankTooSmall {
            family: name,
            min,
            got: n,
        };
        match family {
            Family::A => {
                if n < 1 {
                    return Err(too_small("A", 1));
                }
                Self::new(n, (1..n).map(|i| (i, i + 1)))
            }
            Family::D => {
                if n < 4 {
                    return Err(too_small("D", 4));
                }
                let mut bonds = vec![(1, 3), (2, 3)];
                bonds.extend((3..n).map(|i| (i, i + 1)));
                Self::new(n, bonds)
            }
            Family::ATilde => {
                if n < 2 {
                    return Err(too_small("A~", 2));
                }
                let mut bonds: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
                bonds.push((1, n + 1));
                bonds.push((n, n + 1));
                Self::new(n + 1, bonds)
            }
            Family::DTilde => {
                if n < 5 {
                    return Err(too_small("D~", 5));
                }
                let mut bonds = vec![(1, 3), (2, 3)];
                bonds.extend((3..n - 1).map(|i| (i, i + 1)));
                bonds.push((n - 1, n));
                bonds.push((n - 1, n + 1));
                Self::new(n + 1, bonds)
            }
        }
    }

    /// Number of generators.
    pub fn generator_count(&self) -> usize {
        self.n
    }

    /// Iterates the generators `1..=n`.
    pub fn generators(&self) -> impl Iterator<Item = Generator> {
        (1..=self.n).map(Generator)
    }

    /// Iterates the bonds as normalized `(lo, hi)` pairs.
    pub fn bonds(&self) -> impl Iterator<Item = (Generator, Generator)> + '_ {
        self.bonds.iter().map(|&(a, b)| (Generator(a), Generator(b)))
    }

    pub fn check_generator(&self, s: Generator) -> Result<()> {
        if s.0 < 1 || s.0 > self.n {
            Err(Error::OutOfRange {
                index: s.0,
                rank: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// The order `m(s,t)` of the product `st`: 1 on the diagonal, 3 across a
    /// bond, 2 otherwise.
    pub fn bond_order(&self, s: Generator, t: Generator) -> Result<u32> {
        self.check_generator(s)?;
        self.check_generator(t)?;
        Ok(if s == t {
            1
        } else if self.bonded(s, t) {
            3
        } else {
            2
        })
    }

    /// Whether `m(s,t) = 3`. Both generators must be in range.
    pub fn bonded(&self, s: Generator, t: Generator) -> bool {
        self.adj[(s.0 - 1) * self.n + (t.0 - 1)]
    }

    fn degree(&self, s: usize) -> usize {
        (1..=self.n)
            .filter(|&t| self.adj[(s - 1) * self.n + (t - 1)])
            .count()
    }

    /// True when the bond graph contains no 3-cycle.
    pub fn is_triangle_free(&self) -> bool {
        for &(a, b) in &self.bonds {
            for c in b + 1..=self.n {
                if self.adj[(a - 1) * self.n + (c - 1)] && self.adj[(b - 1) * self.n + (c - 1)] {
                    return false;
                }
            }
        }
        true
    }

    /// True when the graph is a star `K_{1,k}` for some `k >= 1`, or a single
    /// vertex (the degenerate star).
    pub fn is_star(&self) -> bool {
        if self.n == 1 {
            return true;
        }
        if self.bonds.len() != self.n - 1 {
            return false;
        }
        let degrees: Vec<usize> = (1..=self.n).map(|s| self.degree(s)).collect();
        degrees.iter().any(|&d| d == self.n - 1) && degrees.iter().all(|&d| d == 1 || d == self.n - 1)
    }

    /// Restricts the graph to `support`, relabeling the surviving generators
    /// as `1..=k` in increasing order of their original indices.
    pub fn induced_support_subgraph(&self, support: &BTreeSet<Generator>) -> Result<InducedSubgraph> {
        if support.is_empty() {
            return Err(Error::Parse("support must not be empty".into()));
        }
        for &s in support {
            self.check_generator(s)?;
        }
        let original: Vec<Generator> = support.iter().copied().collect();
        let new_index = |g: Generator| original.iter().position(|&o| o == g).map(|p| p + 1);
        let bonds: Vec<(usize, usize)> = self
            .bonds
            .iter()
            .filter_map(|&(a, b)| {
                let a = new_index(Generator(a))?;
                let b = new_index(Generator(b))?;
                Some((a, b))
            })
            .collect();
        let graph = CoxeterGraph::new(original.len(), bonds)?;
        Ok(InducedSubgraph { graph, original })
    }

    /// The Cartan matrix of the geometric representation.
    pub fn cartan(&self) -> CartanMatrix {
        let mut entries = vec![0i64; self.n * self.n];
        for s in 1..=self.n {
            for t in 1..=self.n {
                entries[(s - 1) * self.n + (t - 1)] = if s == t {
                    2
                } else if self.adj[(s - 1) * self.n + (t - 1)] {
                    -1
                } else {
                    0
                };
            }
        }
        CartanMatrix {
            n: self.n,
            entries,
        }
    }

    /// Neighbors of `s` in the bond graph, ascending.
    pub fn neighbors(&self, s: Generator) -> Vec<Generator> {
        (1..=self.n)
            .filter(|&t| self.adj[(s.0 - 1) * self.n + (t - 1)])
            .map(Generator)
            .collect()
    }

    /// Parses the graph text format: a `n=<int>` line followed by
    /// `bond <i> <j>` lines, or a single `family <A|D|A~|D~> <n>` line.
    /// Blank lines and `#` comments are ignored.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut bonds = Vec::new();
        for raw in text.lines() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("family") {
                let mut parts = rest.split_whitespace();
                let fam: Family = parts
                    .next()
                    .ok_or_else(|| Error::Parse("family line needs a family name".into()))?
                    .parse()?;
                let rank: usize = parts
                    .next()
                    .ok_or_else(|| Error::Parse("family line needs a rank".into()))?
                    .parse()
                    .map_err(|_| Error::Parse("family rank must be an integer".into()))?;
                if parts.next().is_some() {
                    return Err(Error::Parse("trailing tokens after family line".into()));
                }
                return Self::standard_family(fam, rank);
            }
            if let Some(rest) = line.strip_prefix("n=") {
                let value = rest
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse("n= must give an integer".into()))?;
                n = Some(value);
                continue;
            }
            if let Some(rest) = line.strip_prefix("bond") {
                let mut parts = rest.split_whitespace();
                let a: usize = parts
                    .next()
                    .ok_or_else(|| Error::Parse("bond line needs two endpoints".into()))?
                    .parse()
                    .map_err(|_| Error::Parse("bond endpoints must be integers".into()))?;
                let b: usize = parts
                    .next()
                    .ok_or_else(|| Error::Parse("bond line needs two endpoints".into()))?
                    .parse()
                    .map_err(|_| Error::Parse("bond endpoints must be integers".into()))?;
                if parts.next().is_some() {
                    return Err(Error::Parse("trailing tokens after bond line".into()));
                }
                bonds.push((a, b));
                continue;
            }
            return Err(Error::Parse(format!("unrecognized line {line:?}")));
        }
        let n = n.ok_or_else(|| Error::Parse("missing n=<int> line".into()))?;
        Self::new(n, bonds)
    }
}

/// An induced subgraph together with the map from its relabeled generators
/// back to the originals: new generator `i` corresponds to `original[i-1]`.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: CoxeterGraph,
    pub original: Vec<Generator>,
}

/// Integer Cartan matrix: 2 on the diagonal, -1 across bonds, 0 otherwise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CartanMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl CartanMatrix {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry(&self, s: Generator, t: Generator) -> i64 {
        self.entries[(s.0 - 1) * self.n + (t.0 - 1)]
    }

    pub fn is_symmetric(&self) -> bool {
        (1..=self.n).all(|s| {
            (1..=self.n).all(|t| self.entry(Generator(s), Generator(t)) == self.entry(Generator(t), Generator(s)))
        })
    }
}
