//! Flavour cocharacter lattice, the central map `φ` and coweight
//! equivalence.
//!
//! Sign convention: `φ(ρ)_e = ρ_{t(e)} - ρ_{s(e)}` on edge coordinates and
//! `φ(ρ)_{i,r} = -ρ_i` on framing coordinates. Two coweights are equivalent
//! when `κ - κ' = φ(ρ)` for an integer `ρ` on the vertices.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::decompose::Factor;
use crate::linalg::{self, Matrix};
use crate::quiver::QuiverDatum;
use crate::unionfind::UnionFind;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FlavourLabel {
    /// Dilation of edge `e`.
    Edge(usize),
    /// Framing line `line` at `vertex`.
    Framing { vertex: usize, line: u32 },
}

impl fmt::Display for FlavourLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FlavourLabel::Edge(e) => write!(f, "e{e}"),
            FlavourLabel::Framing { vertex, line } => write!(f, "f{vertex}.{line}"),
        }
    }
}

/// Coordinates of the flavour cocharacter lattice: edges with both ends
/// carrying gauge slots, in edge order, then framing lines of framed gauge
/// vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FlavourLattice {
    labels: Vec<FlavourLabel>,
}

impl FlavourLattice {
    pub fn labels(&self) -> &[FlavourLabel] {
        &self.labels
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, label: FlavourLabel) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    fn check(&self, kappa: &[i64]) -> Result<()> {
        if kappa.len() != self.rank() {
            return Err(Error::CoweightRank {
                expected: self.rank(),
                actual: kappa.len(),
            });
        }
        Ok(())
    }
}

/// The map `φ` from the vertex lattice `Z^I` into the flavour lattice, as a
/// matrix with one row per flavour coordinate and one column per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiMap {
    pub matrix: Matrix,
}

impl PhiMap {
    pub fn new(datum: &QuiverDatum, lattice: &FlavourLattice) -> Self {
        let mut matrix = Matrix::zeros(lattice.rank(), datum.vertex_count());
        for (row, label) in lattice.labels().iter().enumerate() {
            match *label {
                FlavourLabel::Edge(e) => {
                    let (s, t) = datum.edges()[e];
                    matrix[(row, t)] += 1;
                    matrix[(row, s)] -= 1;
                }
                FlavourLabel::Framing { vertex, .. } => matrix[(row, vertex)] = -1,
            }
        }
        Self { matrix }
    }

    pub fn apply(&self, rho: &[i64]) -> Vec<i64> {
        self.matrix.mul_vec(rho)
    }
}

pub fn build_flavour(datum: &QuiverDatum) -> Result<FlavourLattice> {
    if let Some(i) = (0..datum.vertex_count()).find(|&i| datum.v()[i] == 0 && datum.w()[i] > 0) {
        return Err(Error::NotTrimmed {
            vertex: i,
            framing: datum.w()[i],
        });
    }
    let v = datum.v();
    let mut labels: Vec<FlavourLabel> = datum
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, &(s, t))| v[s] > 0 && v[t] > 0)
        .map(|(e, _)| FlavourLabel::Edge(e))
        .collect();
    for i in 0..datum.vertex_count() {
        if v[i] > 0 {
            labels.extend((0..datum.w()[i]).map(|line| FlavourLabel::Framing { vertex: i, line }));
        }
    }
    Ok(FlavourLattice { labels })
}

/// Some `ρ` with `κ - κ' = φ(ρ)`, or `None` when the coweights are not
/// equivalent. Solved by integer Hermite reduction of `φ`.
pub fn are_equivalent(
    datum: &QuiverDatum,
    kappa: &[i64],
    other: &[i64],
) -> Result<Option<Vec<i64>>> {
    let lattice = build_flavour(datum)?;
    lattice.check(kappa)?;
    lattice.check(other)?;
    let phi = PhiMap::new(datum, &lattice);
    let diff: Vec<i64> = kappa.iter().zip(other).map(|(a, b)| a - b).collect();
    Ok(linalg::solve_integer_i64(&phi.matrix, &diff))
}

/// A normalized coweight together with the `ρ` that produced it:
/// `kappa = input - φ(rho)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Normalized {
    pub kappa: Vec<i64>,
    pub rho: Vec<i64>,
    /// Edges gauged to zero.
    pub forest: Vec<usize>,
}

/// Spanning forest of the support graph: greedy over edges in index order,
/// loops skipped.
pub fn spanning_forest(datum: &QuiverDatum) -> Vec<usize> {
    let v = datum.v();
    let mut uf = UnionFind::new(datum.vertex_count());
    datum
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, &(s, t))| v[s] > 0 && v[t] > 0 && s != t)
        .filter(|(_, &(s, t))| uf.union(s, t))
        .map(|(e, _)| e)
        .collect()
}

/// The representative of `κ`'s equivalence class with `κ_e = 0` on the
/// spanning forest and, in every forest component carrying framing, the first
/// framing coordinate of that component equal to zero. Edges closing cycles
/// keep a value. Unframed components get `ρ = 0` at their smallest vertex.
pub fn normalize_kappa(datum: &QuiverDatum, kappa: &[i64]) -> Result<Normalized> {
    let lattice = build_flavour(datum)?;
    lattice.check(kappa)?;
    let n = datum.vertex_count();
    let forest = spanning_forest(datum);
    let value = |label| kappa[lattice.index_of(label).expect("label in lattice")];

    let mut tree_adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for &e in &forest {
        let (s, t) = datum.edges()[e];
        tree_adj[s].push((e, t));
        tree_adj[t].push((e, s));
    }

    let mut rho = vec![0i64; n];
    let mut seen = vec![false; n];
    for root in datum.support() {
        if seen[root] {
            continue;
        }
        let mut component = Vec::new();
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(x) = queue.pop_front() {
            component.push(x);
            for &(e, y) in &tree_adj[x] {
                if seen[y] {
                    continue;
                }
                seen[y] = true;
                let ke = value(FlavourLabel::Edge(e));
                let (s, _) = datum.edges()[e];
                // κ_e - ρ_t + ρ_s = 0
                rho[y] = if s == x { rho[x] + ke } else { rho[x] - ke };
                queue.push_back(y);
            }
        }
        let pin = lattice.labels().iter().find_map(|&label| match label {
            FlavourLabel::Framing { vertex, .. } if component.contains(&vertex) => {
                Some((label, vertex))
            }
            _ => None,
        });
        if let Some((label, vertex)) = pin {
            let shift = -(value(label) + rho[vertex]);
            for &x in &component {
                rho[x] += shift;
            }
        }
    }

    let phi = PhiMap::new(datum, &lattice);
    let shift = phi.apply(&rho);
    let normalized = kappa.iter().zip(&shift).map(|(k, s)| k - s).collect();
    Ok(Normalized {
        kappa: normalized,
        rho,
        forest,
    })
}

/// Matrix of the linear map `κ ↦ normalize_kappa(κ).kappa`.
pub fn normalization_matrix(datum: &QuiverDatum) -> Result<Matrix> {
    let rank = build_flavour(datum)?.rank();
    let mut columns = Vec::with_capacity(rank);
    for j in 0..rank {
        let mut unit = vec![0i64; rank];
        unit[j] = 1;
        columns.push(normalize_kappa(datum, &unit)?.kappa);
    }
    Ok(Matrix::from_columns(rank, &columns))
}

/// One integer vector per edge outside the spanning forest (loops included),
/// in flavour coordinates: the signed edge sum around its fundamental cycle.
/// Each is annihilated by every `φ(ρ)`.
pub fn cycle_functionals(datum: &QuiverDatum) -> Result<Vec<Vec<i64>>> {
    let lattice = build_flavour(datum)?;
    let forest = spanning_forest(datum);
    let n = datum.vertex_count();
    let mut tree_adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for &e in &forest {
        let (s, t) = datum.edges()[e];
        tree_adj[s].push((e, t));
        tree_adj[t].push((e, s));
    }
    let mut out = Vec::new();
    for &label in lattice.labels() {
        let FlavourLabel::Edge(e) = label else {
            continue;
        };
        if forest.contains(&e) {
            continue;
        }
        let (s, t) = datum.edges()[e];
        let mut c = vec![0i64; lattice.rank()];
        c[lattice.index_of(label).expect("edge label")] += 1;
        // walk the forest from t back to s
        for (edge, from, _to) in tree_path(&tree_adj, t, s) {
            let idx = lattice
                .index_of(FlavourLabel::Edge(edge))
                .expect("tree edge label");
            let forward = datum.edges()[edge].0 == from;
            c[idx] += if forward { 1 } else { -1 };
        }
        out.push(c);
    }
    Ok(out)
}

fn tree_path(adj: &[Vec<(usize, usize)>], from: usize, to: usize) -> Vec<(usize, usize, usize)> {
    let n = adj.len();
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([from]);
    seen[from] = true;
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        for &(e, y) in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                prev[y] = Some((e, x));
                queue.push_back(y);
            }
        }
    }
    let mut path = Vec::new();
    let mut cur = to;
    while cur != from {
        let (e, p) = prev[cur].expect("endpoints lie in one tree");
        path.push((e, p, cur));
        cur = p;
    }
    path.reverse();
    path
}

/// Restriction of a parent coweight to a factor's flavour lattice: every
/// factor coordinate is read from the parent coordinate with the same label.
pub fn restrict_kappa(parent: &QuiverDatum, factor: &Factor, kappa: &[i64]) -> Result<Vec<i64>> {
    let parent_lattice = build_flavour(parent)?;
    parent_lattice.check(kappa)?;
    let map = restriction_map(parent, &factor.datum)?;
    Ok(map.iter().map(|&j| kappa[j]).collect())
}

/// Parent coordinate index of every coordinate of the factor lattice.
pub fn restriction_map(parent: &QuiverDatum, factor: &QuiverDatum) -> Result<Vec<usize>> {
    if factor.quiver() != parent.quiver() {
        return Err(Error::IncompatibleFactor(
            "factor lives on a different quiver".into(),
        ));
    }
    let parent_lattice = build_flavour(parent)?;
    let factor_lattice = build_flavour(factor)?;
    factor_lattice
        .labels()
        .iter()
        .map(|&label| {
            parent_lattice.index_of(label).ok_or_else(|| {
                Error::IncompatibleFactor(format!("coordinate {label} is absent from the parent"))
            })
        })
        .collect()
}
