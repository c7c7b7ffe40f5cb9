//! Certification of symplectic singularities for Coulomb branches of quiver
//! gauge theories.
//!
//! The pipeline works entirely on combinatorial data: a quiver with gauge
//! dimensions `v` and framing dimensions `w` determines a Cartan torus with
//! an arrangement of generalized-root hyperplanes. Each stratum of that
//! arrangement up to a codimension bound is split into connected local
//! theories, every local theory is checked against a knowledge base of
//! families known to be smooth for generic flavour coweights, and an explicit
//! integer coweight avoiding all recorded hyperplanes is produced as a
//! witness.
//!
//! ```
//! use quivercert::{certify, Mode, QuiverDatum, Conclusion};
//!
//! // 1 -> 2 <- 3 with v = (3, 1, 2), w = (4, 0, 1)
//! let datum = QuiverDatum::from_edges(3, &[(0, 1), (2, 1)], vec![3, 1, 2], vec![4, 0, 1]).unwrap();
//! let cert = certify(&datum, Mode::SymplecticSingularities);
//! assert_eq!(cert.conclusion, Conclusion::Certified);
//! assert!(quivercert::validate_witness(&cert));
//! ```

pub mod arrangement;
pub mod certify;
pub mod classify;
pub mod decompose;
mod error;
pub mod flavour;
pub mod input;
pub mod linalg;
pub mod quiver;
pub mod unionfind;

#[cfg(feature = "oracles")]
#[doc(hidden)]
pub mod oracle;

pub use arrangement::{
    codim_at, codim_by_rank, enumerate_strata, generalized_roots, CodimPoint, Covector, ExactPoint,
    GeneralizedRoot, Point, RootKind, StratumType,
};
pub use certify::{
    avoids_all, certify, certify_with, make_witness, validate_witness, CensusEntry, Certificate,
    CertifyOptions, Conclusion, FactorRecord, GenericCitation, Mode, Obstruction,
};
pub use classify::{
    codim_zero, enumerate_connected_data, extending_cases, is_totally_unimodular,
    knowledge_base_revision, short_list, verdict, Count, Family, Functional, ObstructionCase,
    SmoothnessVerdict, VerdictBasis,
};
pub use decompose::{decompose_at, Decomposition, EigenvalueTag, Factor};
pub use error::{Error, Result};
pub use flavour::{
    are_equivalent, build_flavour, cycle_functionals, normalization_matrix, normalize_kappa,
    restrict_kappa, restriction_map, spanning_forest, FlavourLabel, FlavourLattice, Normalized,
    PhiMap,
};
pub use input::{parse_quiver_file, parse_quiver_str, QuiverInput};
pub use quiver::{Quiver, QuiverDatum, Shape, Slot};
