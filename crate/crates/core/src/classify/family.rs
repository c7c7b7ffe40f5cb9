use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::quiver::QuiverDatum;

/// A loop or edge multiplicity, fixed or bounded below.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Count {
    Exactly(u32),
    AtLeast(u32),
}

impl Count {
    pub fn admits(self, n: u32) -> bool {
        match self {
            Count::Exactly(k) => n == k,
            Count::AtLeast(k) => n >= k,
        }
    }
}

/// A connected quiver skeleton up to isomorphism and edge orientation.
///
/// Framing is symbolic: a framed vertex stands for every framing `≥ 0`, an
/// unframed vertex for framing `0` only.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Family {
    pub dims: Vec<u32>,
    pub framed: Vec<bool>,
    pub loops: Vec<Count>,
    /// Undirected vertex pairs `a < b` with their multiplicity.
    pub edges: Vec<(usize, usize, Count)>,
}

impl Family {
    /// A simple family: no loops, single edges.
    pub fn simple(dims: Vec<u32>, framed: Vec<bool>, edges: &[(usize, usize)]) -> Self {
        let n = dims.len();
        Self {
            dims,
            framed,
            loops: vec![Count::Exactly(0); n],
            edges: edges
                .iter()
                .map(|&(a, b)| (a.min(b), a.max(b), Count::Exactly(1)))
                .collect(),
        }
        .canonical()
    }

    /// The exact skeleton of a datum's support; framed where `w_i > 0`.
    pub fn of_datum(datum: &QuiverDatum) -> Self {
        Self::skeleton(datum).canonical()
    }

    /// [`Family::of_datum`] in support order.
    fn skeleton(datum: &QuiverDatum) -> Self {
        let support = datum.support();
        let index = |i: usize| support.iter().position(|&s| s == i);
        let mut loops = vec![0u32; support.len()];
        let mut pairs = std::collections::BTreeMap::new();
        for &(s, t) in datum.edges() {
            let (Some(a), Some(b)) = (index(s), index(t)) else {
                continue;
            };
            if a == b {
                loops[a] += 1;
            } else {
                *pairs.entry((a.min(b), a.max(b))).or_insert(0u32) += 1;
            }
        }
        Self {
            dims: support.iter().map(|&i| datum.v()[i]).collect(),
            framed: support.iter().map(|&i| datum.w()[i] > 0).collect(),
            loops: loops.into_iter().map(Count::Exactly).collect(),
            edges: pairs
                .into_iter()
                .map(|((a, b), k)| (a, b, Count::Exactly(k)))
                .collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.dims.len()
    }

    pub fn total_dim(&self) -> u32 {
        self.dims.iter().sum()
    }

    pub fn is_framed(&self) -> bool {
        self.framed.iter().any(|&f| f)
    }

    /// Codimension of the origin for a member with nonzero framing wherever
    /// framing is allowed.
    pub fn codim_zero(&self) -> u32 {
        let n = self.total_dim();
        if self.is_framed() {
            n
        } else {
            n.saturating_sub(1)
        }
    }

    fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.vertex_count();
        let mut dims = vec![0; n];
        let mut framed = vec![false; n];
        let mut loops = vec![Count::Exactly(0); n];
        for old in 0..n {
            dims[perm[old]] = self.dims[old];
            framed[perm[old]] = self.framed[old];
            loops[perm[old]] = self.loops[old];
        }
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(a, b, c)| {
                let (x, y) = (perm[a], perm[b]);
                (x.min(y), x.max(y), c)
            })
            .collect();
        edges.sort();
        Self {
            dims,
            framed,
            loops,
            edges,
        }
    }

    /// Smallest relabelling over all vertex permutations.
    pub fn canonical(&self) -> Self {
        let n = self.vertex_count();
        (0..n)
            .permutations(n)
            .map(|perm| self.relabel(&perm))
            .min()
            .unwrap_or_else(|| self.clone())
    }

    /// Whether the datum's trimmed support is a member. Loops at dimension-one
    /// vertices carry only zero weights and are ignored.
    pub fn matches(&self, datum: &QuiverDatum) -> bool {
        let support = datum.support();
        let n = self.vertex_count();
        if support.len() != n {
            return false;
        }
        let mut wanted = self.dims.clone();
        let mut got: Vec<u32> = support.iter().map(|&i| datum.v()[i]).collect();
        wanted.sort_unstable();
        got.sort_unstable();
        if wanted != got {
            return false;
        }
        let exact = Family::skeleton(&datum.trim());
        if exact.edges.len() != self.edges.len() {
            return false;
        }
        (0..n)
            .permutations(n)
            .any(|perm| self.admits_relabelled(&exact.relabel(&perm)))
    }

    /// `other` is an exact skeleton aligned vertex-by-vertex with `self`.
    fn admits_relabelled(&self, other: &Family) -> bool {
        let n = self.vertex_count();
        for k in 0..n {
            if self.dims[k] != other.dims[k] || (!self.framed[k] && other.framed[k]) {
                return false;
            }
            let Count::Exactly(l) = other.loops[k] else {
                return false;
            };
            if self.dims[k] > 1 && !self.loops[k].admits(l) {
                return false;
            }
        }
        let mult = |f: &Family, a: usize, b: usize| {
            f.edges.iter().find(|e| (e.0, e.1) == (a, b)).map(|e| e.2)
        };
        for a in 0..n {
            for b in a + 1..n {
                let got = match mult(other, a, b) {
                    Some(Count::Exactly(k)) => k,
                    None => 0,
                    Some(Count::AtLeast(_)) => return false,
                };
                let ok = match mult(self, a, b) {
                    Some(c) => c.admits(got),
                    None => got == 0,
                };
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

const FRAMING_LETTERS: &[&str] = &["n", "m", "p", "q"];
const LOOP_LETTERS: &[&str] = &["r", "s", "u"];

/// `[n]→(2)` is a gauge vertex of dimension 2 with symbolic framing `n`;
/// `↺r` marks `r ≥ 0` loops; edges follow `|` as vertex pairs, with `×k`
/// for a fixed multiplicity and `×k+` for at least `k`.
impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut framing = FRAMING_LETTERS.iter().cycle();
        let mut loop_letters = LOOP_LETTERS.iter().cycle();
        let vertices: Vec<String> = (0..self.vertex_count())
            .map(|k| {
                let mut s = String::new();
                if self.framed[k] {
                    s.push_str(&format!("[{}]→", framing.next().expect("cycle")));
                }
                s.push_str(&format!("({})", self.dims[k]));
                match self.loops[k] {
                    Count::Exactly(0) => {}
                    Count::Exactly(l) => s.push_str(&format!("↺{l}")),
                    Count::AtLeast(0) => {
                        s.push_str(&format!("↺{}", loop_letters.next().expect("cycle")))
                    }
                    Count::AtLeast(l) => s.push_str(&format!("↺{l}+")),
                }
                s
            })
            .collect();
        write!(f, "{}", vertices.join(" "))?;
        if !self.edges.is_empty() {
            let edges: Vec<String> = self
                .edges
                .iter()
                .map(|&(a, b, c)| match c {
                    Count::Exactly(1) => format!("{a}—{b}"),
                    Count::Exactly(k) => format!("{a}—{b}×{k}"),
                    Count::AtLeast(k) => format!("{a}—{b}×{k}+"),
                })
                .collect();
            write!(f, " | {}", edges.join(" "))?;
        }
        Ok(())
    }
}

/// Connected simple graphs on `n` vertices up to isomorphism, as edge lists.
pub(crate) fn connected_graphs(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        if !graph_connected(n, &edges) {
            continue;
        }
        let key = Family::simple(vec![1; n], vec![false; n], &edges);
        if seen.insert(key) {
            out.push(edges);
        }
    }
    out
}

fn graph_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 {
        return false;
    }
    let mut uf = crate::unionfind::UnionFind::new(n);
    for &(a, b) in edges {
        uf.union(a, b);
    }
    uf.classes() == 1
}

/// Ordered compositions of `total` into `parts` positive integers.
pub(crate) fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}
