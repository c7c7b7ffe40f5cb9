//! Knowledge base of connected quiver data known to give smooth partial
//! resolutions for generic flavour coweights, and the verdict cascade that
//! consults it.

mod family;
mod obstruction;
mod unimodular;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::flavour::{build_flavour, normalization_matrix, FlavourLabel};
use crate::quiver::{QuiverDatum, Shape};
use crate::{Error, Result};

pub(crate) use family::{compositions, connected_graphs};
pub use family::{Count, Family};
pub use obstruction::{extending_cases, ObstructionCase};
pub use unimodular::is_totally_unimodular;

/// Integer affine functional `coeffs · κ + constant` on a flavour lattice.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Functional {
    pub coeffs: Vec<i64>,
    pub constant: i64,
}

impl Functional {
    pub fn linear(coeffs: Vec<i64>) -> Self {
        Self {
            coeffs,
            constant: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.constant == 0 && self.coeffs.iter().all(|&c| c == 0)
    }

    /// `None` on a length mismatch.
    pub fn evaluate(&self, kappa: &[i64]) -> Option<i128> {
        if kappa.len() != self.coeffs.len() {
            return None;
        }
        let dot: i128 = self
            .coeffs
            .iter()
            .zip(kappa)
            .map(|(&c, &k)| c as i128 * k as i128)
            .sum();
        Some(dot + self.constant as i128)
    }

    /// Same hyperplane with the first nonzero coefficient positive.
    pub fn sign_normalized(&self) -> Self {
        let lead = self
            .coeffs
            .iter()
            .copied()
            .chain(std::iter::once(self.constant))
            .find(|&c| c != 0)
            .unwrap_or(0);
        if lead < 0 {
            Self {
                coeffs: self.coeffs.iter().map(|c| -c).collect(),
                constant: -self.constant,
            }
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (j, &c) in self.coeffs.iter().enumerate() {
            match c {
                0 => {}
                1 => terms.push(format!("+κ{j}")),
                -1 => terms.push(format!("-κ{j}")),
                c if c > 0 => terms.push(format!("+{c}κ{j}")),
                c => terms.push(format!("{c}κ{j}")),
            }
        }
        if self.constant != 0 || terms.is_empty() {
            terms.push(format!("{:+}", self.constant));
        }
        let text = terms.join(" ");
        write!(f, "{} ≠ 0", text.strip_prefix('+').unwrap_or(&text))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictBasis {
    /// Generalized affine Grassmannian slices of type A.
    FiniteTypeA,
    /// Bow varieties of affine type A.
    AffineTypeA,
    /// Toric hyperkähler varieties with a unimodular weight matrix.
    ToricUnimodular,
}

impl VerdictBasis {
    pub fn citation(self) -> &'static str {
        match self {
            VerdictBasis::FiniteTypeA => "finite-type-A-minuscule",
            VerdictBasis::AffineTypeA => "affine-type-A-bow",
            VerdictBasis::ToricUnimodular => "toric-unimodular",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag")]
pub enum SmoothnessVerdict {
    CertifiedSmooth {
        /// Nonzero functionals on the factor's flavour lattice; `κ` must
        /// avoid each zero set.
        hyperplanes: Vec<Functional>,
        /// Smoothness holds for generic `κ` without a listed arrangement.
        generic: bool,
        basis: VerdictBasis,
    },
    Unknown {
        reason: String,
        obstruction: Option<ObstructionCase>,
    },
}

impl SmoothnessVerdict {
    pub fn is_smooth(&self) -> bool {
        matches!(self, SmoothnessVerdict::CertifiedSmooth { .. })
    }
}

/// `Σv`, less one when unframed.
pub fn codim_zero(datum: &QuiverDatum) -> Result<usize> {
    if !datum.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = datum.total_dim();
    Ok(if datum.has_framing() { n } else { n - 1 })
}

/// Connected families with origin codimension at most `bound`.
///
/// Framed families carry symbolic framing `≥ 0` on every vertex and have
/// `Σv ≤ bound`; unframed data with `Σv ≤ bound` are their members. Unframed
/// families are listed separately only at `Σv = bound + 1`. Without
/// `simple_only` the same skeleta are returned with loops and edge
/// multiplicities left symbolic.
pub fn enumerate_connected_data(bound: usize, simple_only: bool) -> Vec<Family> {
    let mut framed = BTreeSet::new();
    let mut unframed = BTreeSet::new();
    for n in 1..=bound + 1 {
        for edges in connected_graphs(n) {
            for total in n as u32..=bound as u32 + 1 {
                for dims in compositions(total, n) {
                    let is_framed = (total as usize) <= bound;
                    let family = Family::simple(dims, vec![is_framed; n], &edges);
                    let family = if simple_only {
                        family
                    } else {
                        decorate(family)
                    };
                    let key = (
                        family.total_dim(),
                        family.vertex_count(),
                        family.edges.len(),
                        family,
                    );
                    if is_framed {
                        framed.insert(key);
                    } else {
                        unframed.insert(key);
                    }
                }
            }
        }
    }
    framed
        .into_iter()
        .chain(unframed)
        .map(|(_, _, _, f)| f)
        .collect()
}

fn decorate(family: Family) -> Family {
    Family {
        loops: vec![Count::AtLeast(0); family.vertex_count()],
        edges: family
            .edges
            .iter()
            .map(|&(a, b, _)| (a, b, Count::AtLeast(1)))
            .collect(),
        ..family
    }
    .canonical()
}

/// The families of origin codimension at most one.
pub fn short_list() -> Vec<Family> {
    enumerate_connected_data(1, true)
}

/// Hash of the rendered family table and the open cases; changes whenever the
/// knowledge base does.
pub fn knowledge_base_revision() -> String {
    let mut hasher = Sha256::new();
    for family in enumerate_connected_data(3, true) {
        hasher.update(family.render().as_bytes());
        hasher.update(b"\n");
    }
    for case in ObstructionCase::ALL {
        hasher.update(format!("{case}: {}\n", case.family()).as_bytes());
    }
    hex::encode(hasher.finalize())
}

/// First match wins: finite type A, affine type A, toric with a totally
/// unimodular weight matrix, then the open multiloop cases.
pub fn verdict(datum: &QuiverDatum) -> Result<SmoothnessVerdict> {
    if !datum.is_trimmed() {
        let vertex = (0..datum.vertex_count())
            .find(|&i| datum.v()[i] == 0 && datum.w()[i] > 0)
            .expect("untrimmed vertex");
        return Err(Error::NotTrimmed {
            vertex,
            framing: datum.w()[vertex],
        });
    }
    if !datum.is_connected() {
        return Err(Error::NotConnected);
    }
    match datum.shape_classify()? {
        Shape::FiniteA => {
            return Ok(SmoothnessVerdict::CertifiedSmooth {
                hyperplanes: framing_distinctness(datum)?,
                generic: false,
                basis: VerdictBasis::FiniteTypeA,
            })
        }
        Shape::AffineA => {
            return Ok(SmoothnessVerdict::CertifiedSmooth {
                hyperplanes: Vec::new(),
                generic: true,
                basis: VerdictBasis::AffineTypeA,
            })
        }
        Shape::Other => {}
    }
    let support = datum.support();
    if support.iter().all(|&i| datum.v()[i] == 1) {
        return Ok(if is_totally_unimodular(&datum.weight_matrix()) {
            SmoothnessVerdict::CertifiedSmooth {
                hyperplanes: Vec::new(),
                generic: true,
                basis: VerdictBasis::ToricUnimodular,
            }
        } else {
            SmoothnessVerdict::Unknown {
                reason: "toric weight matrix is not totally unimodular".into(),
                obstruction: None,
            }
        });
    }
    if !datum.support_is_simple() {
        let obstruction = ObstructionCase::matching(datum);
        let reason = match obstruction {
            Some(case) => format!("loops or multiple edges; open case {case}"),
            None => "loops or multiple edges outside the listed open cases".into(),
        };
        return Ok(SmoothnessVerdict::Unknown {
            reason,
            obstruction,
        });
    }
    Ok(SmoothnessVerdict::Unknown {
        reason: "simple quiver outside type A with some dimension above one".into(),
        obstruction: None,
    })
}

/// Normalized framing coordinates pairwise distinct, pulled back to the
/// unnormalized lattice.
fn framing_distinctness(datum: &QuiverDatum) -> Result<Vec<Functional>> {
    let lattice = build_flavour(datum)?;
    let norm = normalization_matrix(datum)?;
    let framing: Vec<usize> = lattice
        .labels()
        .iter()
        .enumerate()
        .filter(|(_, l)| matches!(l, FlavourLabel::Framing { .. }))
        .map(|(j, _)| j)
        .collect();
    let mut out = BTreeSet::new();
    for (x, &a) in framing.iter().enumerate() {
        for &b in &framing[x + 1..] {
            let coeffs: Vec<i64> = norm
                .row(a)
                .iter()
                .zip(norm.row(b))
                .map(|(p, q)| p - q)
                .collect();
            let f = Functional::linear(coeffs);
            if !f.is_zero() {
                out.insert(f.sign_normalized());
            }
        }
    }
    Ok(out.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codim_zero_examples() {
        let two_two = QuiverDatum::from_edges(2, &[(0, 1)], vec![2, 2], vec![0, 0]).unwrap();
        assert_eq!(codim_zero(&two_two), Ok(3));
        let triangle =
            QuiverDatum::from_edges(3, &[(0, 1), (1, 2), (2, 0)], vec![1; 3], vec![1, 2, 3])
                .unwrap();
        assert_eq!(codim_zero(&triangle), Ok(3));
        let point = QuiverDatum::from_edges(1, &[], vec![1], vec![0]).unwrap();
        assert_eq!(codim_zero(&point), Ok(0));
        let split =
            QuiverDatum::from_edges(3, &[(0, 1), (1, 2)], vec![1, 0, 1], vec![0; 3]).unwrap();
        assert_eq!(codim_zero(&split), Err(Error::NotConnected));
    }

    #[test]
    fn family_counts() {
        let fig = enumerate_connected_data(3, true);
        assert_eq!(fig.len(), 19);
        assert_eq!(fig.iter().filter(|f| f.is_framed()).count(), 7);
        assert_eq!(enumerate_connected_data(1, true).len(), 3);
        assert_eq!(enumerate_connected_data(0, true).len(), 1);
        assert_eq!(enumerate_connected_data(3, false).len(), 19);
    }

    #[test]
    fn framed_vertex_hyperplanes() {
        let d = QuiverDatum::from_edges(1, &[], vec![1], vec![3]).unwrap();
        let SmoothnessVerdict::CertifiedSmooth {
            hyperplanes,
            generic,
            basis,
        } = verdict(&d).unwrap()
        else {
            panic!("expected smooth");
        };
        assert!(!generic);
        assert_eq!(basis, VerdictBasis::FiniteTypeA);
        // κ_{0,r} pairwise distinct, written in unnormalized coordinates
        assert_eq!(
            hyperplanes,
            vec![
                Functional::linear(vec![0, 1, -1]),
                Functional::linear(vec![1, -1, 0]),
                Functional::linear(vec![1, 0, -1]),
            ]
        );
    }

    #[test]
    fn cascade_examples() {
        let affine =
            QuiverDatum::from_edges(3, &[(0, 1), (1, 2), (2, 0)], vec![2, 1, 1], vec![0; 3])
                .unwrap();
        assert!(matches!(
            verdict(&affine),
            Ok(SmoothnessVerdict::CertifiedSmooth {
                generic: true,
                basis: VerdictBasis::AffineTypeA,
                ..
            })
        ));
        let star =
            QuiverDatum::from_edges(4, &[(0, 1), (0, 2), (0, 3)], vec![1; 4], vec![0; 4]).unwrap();
        assert!(matches!(
            verdict(&star),
            Ok(SmoothnessVerdict::CertifiedSmooth {
                basis: VerdictBasis::ToricUnimodular,
                ..
            })
        ));
        let jordan = QuiverDatum::from_edges(1, &[(0, 0)], vec![2], vec![1]).unwrap();
        assert!(matches!(
            verdict(&jordan),
            Ok(SmoothnessVerdict::Unknown {
                obstruction: Some(ObstructionCase::LoopedTwoFramed),
                ..
            })
        ));
        let d4 =
            QuiverDatum::from_edges(4, &[(0, 1), (0, 2), (0, 3)], vec![2, 1, 1, 1], vec![0; 4])
                .unwrap();
        assert!(matches!(
            verdict(&d4),
            Ok(SmoothnessVerdict::Unknown {
                obstruction: None,
                ..
            })
        ));
    }

    #[test]
    fn functional_rendering() {
        assert_eq!(Functional::linear(vec![1, -1, 0]).to_string(), "κ0 -κ1 ≠ 0");
        assert_eq!(
            Functional {
                coeffs: vec![0, -2],
                constant: 3
            }
            .sign_normalized()
            .coeffs,
            vec![0, 2]
        );
    }
}
