//! The generalized-root arrangement on the Cartan of `G = prod GL(v_i)`.
//!
//! Coordinates on the Cartan are the gauge slots `(i, a)`. Every
//! generalized root is either a difference `e_p - e_q` of two slot
//! coordinates (gauge roots and edge weights) or a single coordinate `e_p`
//! (framing weights). The set of roots vanishing at a point therefore depends
//! only on which slots share an eigenvalue and which slots are zero, so strata
//! are handled as combinatorial patterns and never as subspaces.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::linalg;
use crate::quiver::QuiverDatum;
use crate::unionfind::UnionFind;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RootKind {
    GaugeRoot,
    EdgeWeight,
    FramingWeight,
}

/// Sparse covector on slot ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Covector {
    /// `e_plus - e_minus`, `plus != minus`
    Difference { plus: usize, minus: usize },
    /// `e_plus`
    Unit { plus: usize },
}

impl Covector {
    pub fn to_dense(&self, dim: usize) -> Vec<i64> {
        let mut out = vec![0; dim];
        match *self {
            Covector::Difference { plus, minus } => {
                out[plus] = 1;
                out[minus] = -1;
            }
            Covector::Unit { plus } => out[plus] = 1,
        }
        out
    }

    pub fn evaluate(&self, point: &ExactPoint) -> BigRational {
        match *self {
            Covector::Difference { plus, minus } => &point.0[plus] - &point.0[minus],
            Covector::Unit { plus } => point.0[plus].clone(),
        }
    }

    fn vanishes_on(&self, labels: &PatternLabels) -> bool {
        match *self {
            Covector::Difference { plus, minus } => labels.block[plus] == labels.block[minus],
            Covector::Unit { plus } => labels.zero[plus],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneralizedRoot {
    pub kind: RootKind,
    pub covector: Covector,
}

/// The distinct generalized roots of a datum, in class order (gauge roots,
/// then edge weights, then framing weights). A covector produced by several
/// classes keeps the kind of its first occurrence.
pub fn generalized_roots(datum: &QuiverDatum) -> Vec<GeneralizedRoot> {
    let offsets = datum.slot_offsets();
    let v = datum.v();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut push = |kind, covector| {
        if seen.insert(covector) {
            out.push(GeneralizedRoot { kind, covector });
        }
    };
    for i in 0..datum.vertex_count() {
        for a in 0..v[i] as usize {
            for b in 0..v[i] as usize {
                if a != b {
                    let covector = Covector::Difference {
                        plus: offsets[i] + a,
                        minus: offsets[i] + b,
                    };
                    push(RootKind::GaugeRoot, covector);
                }
            }
        }
    }
    for &(s, t) in datum.edges() {
        for a in 0..v[s] as usize {
            for b in 0..v[t] as usize {
                let plus = offsets[t] + b;
                let minus = offsets[s] + a;
                // loops contribute zero weights when a == b; those are not roots
                if plus != minus {
                    push(RootKind::EdgeWeight, Covector::Difference { plus, minus });
                }
            }
        }
    }
    for i in 0..datum.vertex_count() {
        if datum.w()[i] > 0 {
            for a in 0..v[i] as usize {
                push(
                    RootKind::FramingWeight,
                    Covector::Unit {
                        plus: offsets[i] + a,
                    },
                );
            }
        }
    }
    out
}

/// A point of the Cartan with one exact rational coordinate per slot.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExactPoint(pub Vec<BigRational>);

impl ExactPoint {
    pub fn zero(dim: usize) -> Self {
        Self(vec![BigRational::zero(); dim])
    }

    pub fn from_integers(values: &[i64]) -> Self {
        Self(
            values
                .iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Equality pattern: slots with equal values share a block, slots at zero
    /// form the zero block. Blocks are ordered by first slot.
    pub fn pattern(&self) -> StratumType {
        let mut by_value: BTreeMap<&BigRational, Vec<usize>> = BTreeMap::new();
        for (p, x) in self.0.iter().enumerate() {
            by_value.entry(x).or_default().push(p);
        }
        let zero_key = BigRational::zero();
        let zero = by_value.remove(&zero_key);
        let mut blocks: Vec<Vec<usize>> = by_value.into_values().collect();
        blocks.sort();
        StratumType { zero, blocks }
    }
}

impl FromStr for ExactPoint {
    type Err = String;

    /// Comma-separated rationals, `p` or `p/q`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self(Vec::new()));
        }
        s.split(',')
            .enumerate()
            .map(|(k, tok)| {
                let tok = tok.trim();
                BigRational::from_str(tok)
                    .map_err(|e| format!("coordinate {}: `{tok}` is not a rational ({e})", k + 1))
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Self)
    }
}

/// Combinatorial type of a Cartan point: a partition of the slots into
/// eigenvalue blocks, at most one of which is the zero block.
///
/// Nonzero blocks are anonymous. Any partition is a valid pattern; the
/// canonical representative of a stratum is produced by
/// [`StratumType::canonicalize`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct StratumType {
    pub zero: Option<Vec<usize>>,
    pub blocks: Vec<Vec<usize>>,
}

struct PatternLabels {
    block: Vec<usize>,
    zero: Vec<bool>,
}

impl StratumType {
    /// Checked constructor: blocks must be nonempty, disjoint and cover
    /// `0..slots`.
    pub fn new(slots: usize, zero: Option<Vec<usize>>, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let pattern = Self { zero, blocks };
        pattern.validate(slots)?;
        Ok(pattern)
    }

    /// Every slot in the zero block.
    pub fn origin(slots: usize) -> Self {
        Self {
            zero: (slots > 0).then(|| (0..slots).collect()),
            blocks: Vec::new(),
        }
    }

    /// Every slot in its own nonzero block.
    pub fn generic(slots: usize) -> Self {
        Self {
            zero: None,
            blocks: (0..slots).map(|p| vec![p]).collect(),
        }
    }

    pub fn slot_count(&self) -> usize {
        self.zero.as_ref().map_or(0, Vec::len) + self.blocks.iter().map(Vec::len).sum::<usize>()
    }

    pub fn validate(&self, slots: usize) -> Result<()> {
        let bad = |reason: String| Error::InvalidPattern { slots, reason };
        let mut seen = vec![false; slots];
        for block in self.zero.iter().chain(&self.blocks) {
            if block.is_empty() {
                return Err(bad("empty block".into()));
            }
            for &p in block {
                if p >= slots {
                    return Err(bad(format!("slot {p} out of range")));
                }
                if std::mem::replace(&mut seen[p], true) {
                    return Err(bad(format!("slot {p} appears twice")));
                }
            }
        }
        if let Some(p) = seen.iter().position(|&s| !s) {
            return Err(bad(format!("slot {p} is not covered")));
        }
        Ok(())
    }

    fn labels(&self, slots: usize) -> PatternLabels {
        let mut block = vec![usize::MAX; slots];
        let mut zero = vec![false; slots];
        if let Some(z) = &self.zero {
            for &p in z {
                block[p] = 0;
                zero[p] = true;
            }
        }
        for (k, b) in self.blocks.iter().enumerate() {
            for &p in b {
                block[p] = k + 1;
            }
        }
        PatternLabels { block, zero }
    }

    /// Number of slots of each vertex in `block`.
    pub fn multiplicities(datum: &QuiverDatum, block: &[usize]) -> Vec<u32> {
        let vertices = datum.slot_vertices();
        let mut m = vec![0u32; datum.vertex_count()];
        for &p in block {
            m[vertices[p]] += 1;
        }
        m
    }

    /// Materializes a pattern from a zero multiplicity vector and nonzero
    /// block multiplicity vectors: nonzero blocks sorted in decreasing
    /// lexicographic order, then within every vertex the zero block takes
    /// the first slots and each nonzero block the next ones in turn.
    pub fn from_multiplicities(
        datum: &QuiverDatum,
        zero: Option<&[u32]>,
        blocks: &[Vec<u32>],
    ) -> Self {
        let offsets = datum.slot_offsets();
        let mut next: Vec<usize> = offsets[..datum.vertex_count()].to_vec();
        let mut take = |m: &[u32]| -> Vec<usize> {
            let mut out = Vec::new();
            for (i, &c) in m.iter().enumerate() {
                for _ in 0..c {
                    out.push(next[i]);
                    next[i] += 1;
                }
            }
            out.sort_unstable();
            out
        };
        let zero = zero.filter(|z| z.iter().any(|&c| c > 0)).map(&mut take);
        let mut sorted: Vec<&Vec<u32>> =
            blocks.iter().filter(|m| m.iter().any(|&c| c > 0)).collect();
        sorted.sort_by(|a, b| b.cmp(a));
        let blocks = sorted.into_iter().map(|m| take(m)).collect();
        let out = Self { zero, blocks };
        debug_assert!(out.validate(datum.total_dim()).is_ok());
        out
    }

    /// Canonical representative of the stratum containing this pattern.
    ///
    /// Slots are regrouped into the classes joined by vanishing difference
    /// roots; classes containing a slot with a vanishing framing root form the
    /// zero block. The result depends only on the set of vanishing roots and
    /// is invariant under permutations of slots within a vertex.
    pub fn canonicalize(&self, datum: &QuiverDatum) -> Result<Self> {
        let slots = datum.total_dim();
        self.validate(slots)?;
        let mut uf = vanishing_union_find(datum, &generalized_roots(datum), self);
        let vertices = datum.slot_vertices();
        let labels = uf.labels();
        let classes = uf.classes();
        let mut mult = vec![vec![0u32; datum.vertex_count()]; classes];
        let mut marked = vec![false; classes];
        for p in 0..slots {
            mult[labels[p]][vertices[p]] += 1;
            if uf.is_marked(p) {
                marked[labels[p]] = true;
            }
        }
        let mut zero = vec![0u32; datum.vertex_count()];
        let mut blocks = Vec::new();
        for (m, is_zero) in mult.into_iter().zip(marked) {
            if is_zero {
                for (z, c) in zero.iter_mut().zip(&m) {
                    *z += c;
                }
            } else {
                blocks.push(m);
            }
        }
        Ok(Self::from_multiplicities(datum, Some(&zero), &blocks))
    }

    /// Human-readable pattern, e.g. `0:[0.0 0.1] [1.0] [2.0]`.
    pub fn render(&self, datum: &QuiverDatum) -> String {
        let slots = datum.slots();
        let block = |b: &[usize]| {
            let inner: Vec<String> = b.iter().map(|&p| slots[p].to_string()).collect();
            format!("[{}]", inner.join(" "))
        };
        let mut out = String::new();
        if let Some(z) = &self.zero {
            let _ = write!(out, "0:{}", block(z));
        }
        for b in &self.blocks {
            if !out.is_empty() {
                out.push(' ');
            }
            out.push_str(&block(b));
        }
        if out.is_empty() {
            out.push_str("[]");
        }
        out
    }
}

/// Anything that determines a root-vanishing pattern on the Cartan.
pub trait Point {
    fn dim(&self) -> usize;
    fn pattern(&self) -> StratumType;
}

impl Point for ExactPoint {
    fn dim(&self) -> usize {
        self.0.len()
    }

    fn pattern(&self) -> StratumType {
        ExactPoint::pattern(self)
    }
}

impl Point for StratumType {
    fn dim(&self) -> usize {
        self.slot_count()
    }

    fn pattern(&self) -> StratumType {
        self.clone()
    }
}

fn checked_pattern(datum: &QuiverDatum, point: &impl Point) -> Result<StratumType> {
    let expected = datum.total_dim();
    if point.dim() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            actual: point.dim(),
        });
    }
    let pattern = point.pattern();
    pattern.validate(expected)?;
    Ok(pattern)
}

fn vanishing_union_find(
    datum: &QuiverDatum,
    roots: &[GeneralizedRoot],
    pattern: &StratumType,
) -> UnionFind {
    let slots = datum.total_dim();
    let labels = pattern.labels(slots);
    let mut uf = UnionFind::new(slots);
    for root in roots {
        if !root.covector.vanishes_on(&labels) {
            continue;
        }
        match root.covector {
            Covector::Difference { plus, minus } => {
                uf.union(plus, minus);
            }
            Covector::Unit { plus } => uf.mark(plus),
        }
    }
    uf
}

/// Rank of the generalized roots vanishing at `point`, by anchored union-find:
/// `(#slots - #classes) + #marked classes`.
pub fn codim_at(datum: &QuiverDatum, point: &impl Point) -> Result<usize> {
    let pattern = checked_pattern(datum, point)?;
    Ok(vanishing_union_find(datum, &generalized_roots(datum), &pattern).anchored_rank())
}

/// Same quantity as [`codim_at`], computed as the rational rank of the dense
/// vanishing covectors. Exact points are evaluated numerically rather than
/// through their pattern.
pub fn codim_by_rank(datum: &QuiverDatum, point: &CodimPoint<'_>) -> Result<usize> {
    let dim = datum.total_dim();
    let roots = generalized_roots(datum);
    let rows: Vec<Vec<i64>> = match point {
        CodimPoint::Exact(x) => {
            if x.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    actual: x.dim(),
                });
            }
            roots
                .iter()
                .filter(|r| r.covector.evaluate(x).is_zero())
                .map(|r| r.covector.to_dense(dim))
                .collect()
        }
        CodimPoint::Stratum(s) => {
            let pattern = checked_pattern(datum, *s)?;
            let labels = pattern.labels(dim);
            roots
                .iter()
                .filter(|r| r.covector.vanishes_on(&labels))
                .map(|r| r.covector.to_dense(dim))
                .collect()
        }
    };
    Ok(linalg::rank(&rows))
}

pub enum CodimPoint<'a> {
    Exact(&'a ExactPoint),
    Stratum(&'a StratumType),
}

/// Canonical stratum types of codimension at most `bound`, sorted by
/// codimension and then by pattern.
///
/// A canonical stratum is a zero multiplicity vector `z`, each of whose
/// support components meets a framed vertex, together with a multiset of
/// nonzero blocks with connected support summing to `v - z`. Its codimension
/// is `|z| + sum(|m| - 1)` over the nonzero blocks, so only blocks with more
/// than one slot spend any of the budget; the rest are singletons.
pub fn enumerate_strata(datum: &QuiverDatum, bound: usize) -> Vec<StratumType> {
    let n = datum.total_dim();
    let budget = bound.min(n);
    let v = datum.v();
    let framed: Vec<bool> = (0..datum.vertex_count())
        .map(|i| datum.w()[i] > 0 && v[i] > 0)
        .collect();

    let zero_candidates: Vec<Vec<u32>> = bounded_vectors(v, 1, budget)
        .into_iter()
        .filter(|z| {
            let mask: Vec<bool> = z.iter().map(|&c| c > 0).collect();
            datum
                .components_of(&mask)
                .iter()
                .all(|comp| comp.iter().any(|&i| framed[i]))
        })
        .collect();
    let part_candidates: Vec<Vec<u32>> = bounded_vectors(v, 2, budget + 1)
        .into_iter()
        .filter(|m| {
            let mask: Vec<bool> = m.iter().map(|&c| c > 0).collect();
            datum.components_of(&mask).len() == 1
        })
        .collect();

    let mut found: BTreeSet<(usize, StratumType)> = BTreeSet::new();
    let zeros = std::iter::once(vec![0u32; v.len()]).chain(zero_candidates);
    for z in zeros {
        let used: usize = z.iter().map(|&c| c as usize).sum();
        let mut rem: Vec<u32> = v.iter().zip(&z).map(|(a, b)| a - b).collect();
        let mut chosen = Vec::new();
        pick_parts(
            &part_candidates,
            0,
            &mut rem,
            budget - used,
            &mut chosen,
            &mut |rem, chosen| {
                let mut blocks: Vec<Vec<u32>> =
                    chosen.iter().map(|&k| part_candidates[k].clone()).collect();
                let excess: usize = blocks
                    .iter()
                    .map(|m| m.iter().sum::<u32>() as usize - 1)
                    .sum();
                for (i, &c) in rem.iter().enumerate() {
                    for _ in 0..c {
                        let mut unit = vec![0u32; v.len()];
                        unit[i] = 1;
                        blocks.push(unit);
                    }
                }
                let pattern = StratumType::from_multiplicities(datum, Some(&z), &blocks);
                found.insert((used + excess, pattern));
            },
        );
    }
    found.into_iter().map(|(_, s)| s).collect()
}

fn pick_parts(
    candidates: &[Vec<u32>],
    start: usize,
    rem: &mut Vec<u32>,
    budget: usize,
    chosen: &mut Vec<usize>,
    emit: &mut impl FnMut(&[u32], &[usize]),
) {
    emit(rem, chosen);
    for k in start..candidates.len() {
        let part = &candidates[k];
        let excess = part.iter().sum::<u32>() as usize - 1;
        if excess > budget || part.iter().zip(rem.iter()).any(|(p, r)| p > r) {
            continue;
        }
        for (r, p) in rem.iter_mut().zip(part) {
            *r -= p;
        }
        chosen.push(k);
        pick_parts(candidates, k, rem, budget - excess, chosen, emit);
        chosen.pop();
        for (r, p) in rem.iter_mut().zip(part) {
            *r += p;
        }
    }
}

/// All vectors `0 <= m <= v` with `min_sum <= |m| <= max_sum`.
fn bounded_vectors(v: &[u32], min_sum: usize, max_sum: usize) -> Vec<Vec<u32>> {
    fn go(
        v: &[u32],
        i: usize,
        left: usize,
        cur: &mut Vec<u32>,
        min_sum: usize,
        max_sum: usize,
        out: &mut Vec<Vec<u32>>,
    ) {
        if i == v.len() {
            let total = max_sum - left;
            if total >= min_sum {
                out.push(cur.clone());
            }
            return;
        }
        let cap = (v[i] as usize).min(left);
        for c in 0..=cap {
            cur[i] = c as u32;
            go(v, i + 1, left - c, cur, min_sum, max_sum, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if min_sum > max_sum {
        return out;
    }
    let mut cur = vec![0u32; v.len()];
    go(v, 0, max_sum, &mut cur, min_sum, max_sum, &mut out);
    out
}
