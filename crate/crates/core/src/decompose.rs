//! Splitting the local theory at a Cartan point into connected factors.
//!
//! At a point `t` the centralizer is a product over eigenvalues `λ` of
//! `prod_i GL(V_i(λ))`, and the invariant matter is the edge part of each
//! eigenspace plus framing on the `λ = 0` eigenspace. Each eigenvalue block is
//! further split along the connected components of the support of its
//! multiplicity vector, giving connected quiver data on the same quiver.

use serde::{Deserialize, Serialize};

use crate::arrangement::{Point, StratumType};
use crate::quiver::{QuiverDatum, Slot};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EigenvalueTag {
    Zero,
    /// Index of the block in the generating pattern's `blocks`.
    Nonzero(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factor {
    /// Connected, trimmed datum on the parent's quiver.
    pub datum: QuiverDatum,
    pub eigenvalue: EigenvalueTag,
    /// Parent slot id of each factor slot, in factor slot order.
    pub slot_embedding: Vec<usize>,
}

impl Factor {
    /// `Σv - 1`, or `Σv` when framed.
    pub fn codim(&self) -> usize {
        let n = self.datum.total_dim();
        if self.datum.has_framing() {
            n
        } else {
            n - 1
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub parent: QuiverDatum,
    pub stratum: StratumType,
    pub factors: Vec<Factor>,
}

impl Decomposition {
    /// Sum of the factor codimensions; equals the codimension of the stratum.
    pub fn codim(&self) -> usize {
        self.factors.iter().map(Factor::codim).sum()
    }

    /// Factor data with embeddings and tags forgotten, sorted.
    pub fn factor_data(&self) -> Vec<(Vec<u32>, Vec<u32>)> {
        let mut out: Vec<_> = self
            .factors
            .iter()
            .map(|f| (f.datum.v().to_vec(), f.datum.w().to_vec()))
            .collect();
        out.sort();
        out
    }
}

/// Factors are emitted zero-tagged first, then by smallest embedded slot.
/// Framing on the parent is trimmed before it is copied onto the zero block.
pub fn decompose_at(datum: &QuiverDatum, point: &impl Point) -> Result<Decomposition> {
    let slots = datum.total_dim();
    if point.dim() != slots {
        return Err(Error::DimensionMismatch {
            expected: slots,
            actual: point.dim(),
        });
    }
    let stratum = point.pattern();
    stratum.validate(slots)?;
    let parent = datum.trim();
    let slot_vertex = parent.slot_vertices();
    let n = parent.vertex_count();

    let mut factors = Vec::new();
    let tagged = stratum.zero.iter().map(|b| (EigenvalueTag::Zero, b)).chain(
        stratum
            .blocks
            .iter()
            .enumerate()
            .map(|(k, b)| (EigenvalueTag::Nonzero(k), b)),
    );
    for (tag, block) in tagged {
        // block slots grouped by vertex, increasing within each vertex
        let mut at: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &p in block {
            at[slot_vertex[p]].push(p);
        }
        let mask: Vec<bool> = at.iter().map(|s| !s.is_empty()).collect();
        for comp in parent.components_of(&mask) {
            let mut v = vec![0u32; n];
            let mut w = vec![0u32; n];
            let mut embedding = Vec::new();
            for &i in &comp {
                v[i] = at[i].len() as u32;
                if tag == EigenvalueTag::Zero {
                    w[i] = parent.w()[i];
                }
            }
            // factor slots are (i, a) in vertex order
            for i in 0..n {
                if v[i] > 0 {
                    at[i].sort_unstable();
                    embedding.extend_from_slice(&at[i]);
                }
            }
            let factor_datum = parent.with_dims(v, w)?;
            let min_slot = embedding.iter().copied().min().expect("factor has slots");
            debug_assert!(factor_datum.is_connected());
            factors.push((
                min_slot,
                Factor {
                    datum: factor_datum,
                    eigenvalue: tag,
                    slot_embedding: embedding,
                },
            ));
        }
    }
    factors.sort_by_key(|(min_slot, f)| (f.eigenvalue != EigenvalueTag::Zero, *min_slot));
    let factors = factors.into_iter().map(|(_, f)| f).collect();
    Ok(Decomposition {
        parent,
        stratum,
        factors,
    })
}

/// Parent slot of factor slot `(i, a)`.
pub fn embedded_slot(factor: &Factor, slot: Slot) -> usize {
    factor.slot_embedding[factor.datum.slot_id(slot)]
}
