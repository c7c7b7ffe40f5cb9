//! Quiver gauge theory data and their structural predicates.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::linalg::Matrix;
use crate::unionfind::UnionFind;
use crate::{Error, Result};

/// A directed multigraph on vertices `0..vertex_count`.
///
/// Edges are kept in input order and are identities rather than a set, so
/// loops and parallel edges are representable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quiver {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Quiver {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for (e, &(s, t)) in edges.iter().enumerate() {
            for endpoint in [s, t] {
                if endpoint >= vertex_count {
                    return Err(Error::EdgeOutOfRange {
                        edge: e,
                        endpoint,
                        vertices: vertex_count,
                    });
                }
            }
        }
        Ok(Self {
            vertex_count,
            edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn source(&self, e: usize) -> usize {
        self.edges[e].0
    }

    pub fn target(&self, e: usize) -> usize {
        self.edges[e].1
    }
}

/// Gauge slot `(vertex, index)` with `index < v[vertex]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Slot {
    pub vertex: usize,
    pub index: usize,
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.vertex, self.index)
    }
}

/// Shape of the support of a connected datum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Shape {
    /// A simple path, including a single vertex.
    FiniteA,
    /// A single simple cycle through every support vertex.
    AffineA,
    Other,
}

#[derive(Deserialize)]
struct RawDatum {
    quiver: Quiver,
    v: Vec<u32>,
    w: Vec<u32>,
}

impl TryFrom<RawDatum> for QuiverDatum {
    type Error = Error;

    fn try_from(raw: RawDatum) -> Result<Self> {
        let quiver = Quiver::new(raw.quiver.vertex_count, raw.quiver.edges)?;
        QuiverDatum::new(quiver, raw.v, raw.w)
    }
}

/// A quiver with gauge dimensions `v` and framing dimensions `w`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDatum")]
pub struct QuiverDatum {
    quiver: Quiver,
    v: Vec<u32>,
    w: Vec<u32>,
}

impl QuiverDatum {
    pub fn new(quiver: Quiver, v: Vec<u32>, w: Vec<u32>) -> Result<Self> {
        let n = quiver.vertex_count();
        if v.len() != n {
            return Err(Error::LengthMismatch {
                field: "v",
                expected: n,
                actual: v.len(),
            });
        }
        if w.len() != n {
            return Err(Error::LengthMismatch {
                field: "w",
                expected: n,
                actual: w.len(),
            });
        }
        Ok(Self { quiver, v, w })
    }

    pub fn from_edges(
        vertex_count: usize,
        edges: &[(usize, usize)],
        v: Vec<u32>,
        w: Vec<u32>,
    ) -> Result<Self> {
        Self::new(Quiver::new(vertex_count, edges.to_vec())?, v, w)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn v(&self) -> &[u32] {
        &self.v
    }

    pub fn w(&self) -> &[u32] {
        &self.w
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.quiver.edges
    }

    /// Same quiver with new dimension vectors.
    pub fn with_dims(&self, v: Vec<u32>, w: Vec<u32>) -> Result<Self> {
        Self::new(self.quiver.clone(), v, w)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&i| self.v[i] > 0)
            .collect()
    }

    pub fn in_support(&self, i: usize) -> bool {
        self.v[i] > 0
    }

    pub fn total_dim(&self) -> usize {
        self.v.iter().map(|&x| x as usize).sum()
    }

    pub fn has_framing(&self) -> bool {
        self.w.iter().any(|&x| x > 0)
    }

    /// First slot id of each vertex, plus the total as a final entry.
    pub fn slot_offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.vertex_count() + 1);
        let mut acc = 0;
        out.push(0);
        for &d in &self.v {
            acc += d as usize;
            out.push(acc);
        }
        out
    }

    pub fn slot_id(&self, slot: Slot) -> usize {
        debug_assert!(slot.index < self.v[slot.vertex] as usize);
        self.v[..slot.vertex]
            .iter()
            .map(|&x| x as usize)
            .sum::<usize>()
            + slot.index
    }

    pub fn slots(&self) -> Vec<Slot> {
        self.v
            .iter()
            .enumerate()
            .flat_map(|(vertex, &d)| (0..d as usize).map(move |index| Slot { vertex, index }))
            .collect()
    }

    /// Vertex owning each slot id.
    pub fn slot_vertices(&self) -> Vec<usize> {
        self.slots().iter().map(|s| s.vertex).collect()
    }

    pub fn is_simple(&self) -> bool {
        is_simple_on(self, |_| true)
    }

    /// Simplicity of the subquiver spanned by the support.
    pub fn support_is_simple(&self) -> bool {
        is_simple_on(self, |i| self.v[i] > 0)
    }

    pub fn is_trimmed(&self) -> bool {
        self.v.iter().zip(&self.w).all(|(&v, &w)| v > 0 || w == 0)
    }

    /// Support connected (a single vertex counts, the empty support does
    /// not) and no framing on an empty gauge vertex.
    pub fn is_connected(&self) -> bool {
        if !self.is_trimmed() {
            return false;
        }
        let support = self.support();
        match support.first() {
            None => false,
            Some(&start) => {
                let mask: Vec<bool> = self.v.iter().map(|&d| d > 0).collect();
                component_of(self, start, &mask).len() == support.len()
            }
        }
    }

    /// Drops framing on vertices without gauge slots; such framing carries no
    /// matter.
    pub fn trim(&self) -> Self {
        let w = self
            .v
            .iter()
            .zip(&self.w)
            .map(|(&v, &w)| if v == 0 { 0 } else { w })
            .collect();
        Self {
            quiver: self.quiver.clone(),
            v: self.v.clone(),
            w,
        }
    }

    pub fn shape_classify(&self) -> Result<Shape> {
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        Ok(support_shape(self))
    }

    /// Torus weights of the matter representation: one row per slot, one
    /// column per matter line. Edge `e` with slot pair `(s(e), a)`, `(t(e), b)`
    /// gives `+1` at the target slot and `-1` at the source slot (a zero column
    /// for loops with `a == b`); each framing line `r < w_i` and slot `(i, a)`
    /// gives `+1` at `(i, a)`. Edges come first, in edge order, then framing.
    pub fn weight_matrix(&self) -> Matrix {
        let offsets = self.slot_offsets();
        let rows = self.total_dim();
        let mut columns: Vec<Vec<i64>> = Vec::new();
        for &(s, t) in self.edges() {
            for a in 0..self.v[s] as usize {
                for b in 0..self.v[t] as usize {
                    let mut col = vec![0i64; rows];
                    col[offsets[t] + b] += 1;
                    col[offsets[s] + a] -= 1;
                    columns.push(col);
                }
            }
        }
        for i in 0..self.vertex_count() {
            for _r in 0..self.w[i] {
                for a in 0..self.v[i] as usize {
                    let mut col = vec![0i64; rows];
                    col[offsets[i] + a] = 1;
                    columns.push(col);
                }
            }
        }
        Matrix::from_columns(rows, &columns)
    }

    /// Neighbours of `i` in the underlying simple graph (loops dropped,
    /// parallel edges collapsed).
    pub fn neighbours(&self, i: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges()
            .iter()
            .filter_map(|&(s, t)| match (s == i, t == i) {
                (true, false) => Some(t),
                (false, true) => Some(s),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Connected components of the vertices selected by `mask` in the
    /// underlying simple graph, each sorted, ordered by smallest vertex.
    pub fn components_of(&self, mask: &[bool]) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut uf = UnionFind::new(n);
        for &(s, t) in self.edges() {
            if mask[s] && mask[t] {
                uf.union(s, t);
            }
        }
        let mut slot_of_root = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for i in (0..n).filter(|&i| mask[i]) {
            let r = uf.find(i);
            if slot_of_root[r] == usize::MAX {
                slot_of_root[r] = out.len();
                out.push(Vec::new());
            }
            out[slot_of_root[r]].push(i);
        }
        out
    }
}

impl fmt::Display for QuiverDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v={:?} w={:?} edges=[", self.v, self.w)?;
        for (k, (s, t)) in self.edges().iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}->{t}")?;
        }
        write!(f, "]")
    }
}

fn is_simple_on(datum: &QuiverDatum, keep: impl Fn(usize) -> bool) -> bool {
    let mut seen = BTreeMap::new();
    for &(s, t) in datum.edges() {
        if !(keep(s) && keep(t)) {
            continue;
        }
        if s == t {
            return false;
        }
        let key = (s.min(t), s.max(t));
        if seen.insert(key, ()).is_some() {
            return false;
        }
    }
    true
}

fn component_of(datum: &QuiverDatum, start: usize, mask: &[bool]) -> Vec<usize> {
    let mut seen = vec![false; datum.vertex_count()];
    let mut stack = vec![start];
    seen[start] = true;
    let mut comp = Vec::new();
    while let Some(x) = stack.pop() {
        comp.push(x);
        for &(s, t) in datum.edges() {
            let other = if s == x {
                t
            } else if t == x {
                s
            } else {
                continue;
            };
            if mask[other] && !seen[other] {
                seen[other] = true;
                stack.push(other);
            }
        }
    }
    comp.sort_unstable();
    comp
}

fn support_shape(datum: &QuiverDatum) -> Shape {
    let support = datum.support();
    let n = support.len();
    let inner: Vec<(usize, usize)> = datum
        .edges()
        .iter()
        .copied()
        .filter(|&(s, t)| datum.in_support(s) && datum.in_support(t))
        .collect();
    if !datum.support_is_simple() {
        return Shape::Other;
    }
    let mut degree = vec![0usize; datum.vertex_count()];
    for &(s, t) in &inner {
        degree[s] += 1;
        degree[t] += 1;
    }
    let max_degree = support.iter().map(|&i| degree[i]).max().unwrap_or(0);
    if inner.len() + 1 == n && max_degree <= 2 {
        Shape::FiniteA
    } else if n >= 3 && inner.len() == n && support.iter().all(|&i| degree[i] == 2) {
        Shape::AffineA
    } else {
        Shape::Other
    }
}
