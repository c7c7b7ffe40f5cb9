//! The certification driver.
//!
//! Strata of codimension at most the mode's bound are enumerated, each is
//! decomposed into connected factors, every distinct factor gets a verdict,
//! factor hyperplanes are pulled back to the parent flavour lattice, and an
//! integer coweight avoiding all of them is produced and re-checked.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arrangement::{enumerate_strata, StratumType};
use crate::classify::{
    enumerate_connected_data, knowledge_base_revision, short_list, verdict, Family, Functional,
    ObstructionCase, SmoothnessVerdict,
};
use crate::decompose::{decompose_at, Decomposition};
use crate::flavour::{build_flavour, restriction_map, FlavourLattice};
use crate::quiver::QuiverDatum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Smoothness of every local factor over strata of codimension at most 3.
    SymplecticSingularities,
    /// Normality over strata of codimension at most 1; factors must lie in
    /// the short list.
    NormalSymplectic,
}

impl Mode {
    pub fn codim_bound(self) -> usize {
        match self {
            Mode::SymplecticSingularities => 3,
            Mode::NormalSymplectic => 1,
        }
    }

    fn citation(self) -> &'static str {
        match self {
            Mode::SymplecticSingularities => "criterion-smooth-outside-codim-4",
            Mode::NormalSymplectic => "criterion-normal-outside-codim-2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifyOptions {
    /// Worker threads for strata and verdicts; 1 runs inline.
    pub threads: usize,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        Self { threads: 1 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Conclusion {
    Certified,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusEntry {
    pub stratum: StratumType,
    pub codim: usize,
    pub decomposition: Decomposition,
    /// Index into [`Certificate::factors`] of each factor.
    pub factor_ids: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorRecord {
    pub datum: QuiverDatum,
    pub codim: usize,
    /// Rendered knowledge-base family containing the factor, if any.
    pub family: Option<String>,
    pub verdict: SmoothnessVerdict,
    pub in_short_list: bool,
    /// Number of census factors equal to this one.
    pub occurrences: usize,
    /// The verdict's hyperplanes on the parent flavour lattice.
    pub pulled_back: Vec<Functional>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericCitation {
    pub factor: usize,
    pub citation: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Obstruction {
    pub factor: usize,
    pub reason: String,
    pub case: Option<ObstructionCase>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    /// The trimmed input datum.
    pub datum: QuiverDatum,
    pub mode: Mode,
    pub knowledge_base: String,
    pub notes: Vec<String>,
    pub census: Vec<CensusEntry>,
    pub factors: Vec<FactorRecord>,
    pub lattice: FlavourLattice,
    /// Checked hyperplanes on the parent flavour lattice.
    pub hyperplanes: Vec<Functional>,
    /// Factors smooth for generic coweights without a listed arrangement.
    pub generic_citations: Vec<GenericCitation>,
    pub witness: Option<Vec<i64>>,
    pub conclusion: Conclusion,
    pub obstructions: Vec<Obstruction>,
    pub citations: Vec<String>,
}

pub fn certify(datum: &QuiverDatum, mode: Mode) -> Certificate {
    certify_with(datum, mode, &CertifyOptions::default())
}

pub fn certify_with(datum: &QuiverDatum, mode: Mode, options: &CertifyOptions) -> Certificate {
    let mut notes = Vec::new();
    let parent = datum.trim();
    if parent != *datum {
        let dropped: Vec<String> = (0..datum.vertex_count())
            .filter(|&i| datum.w()[i] != parent.w()[i])
            .map(|i| i.to_string())
            .collect();
        notes.push(format!(
            "framing removed at vertices without gauge slots: {}",
            dropped.join(", ")
        ));
    }

    let strata = enumerate_strata(&parent, mode.codim_bound());
    let entries: Vec<(StratumType, usize, Decomposition)> =
        par_map(options.threads, &strata, |s| {
            let decomposition = decompose_at(&parent, s).expect("enumerated strata are valid");
            (s.clone(), decomposition.codim(), decomposition)
        });

    let mut index: BTreeMap<(Vec<u32>, Vec<u32>), usize> = BTreeMap::new();
    let mut unique: Vec<QuiverDatum> = Vec::new();
    let mut occurrences: Vec<usize> = Vec::new();
    let mut census = Vec::with_capacity(entries.len());
    for (stratum, codim, decomposition) in entries {
        let factor_ids = decomposition
            .factors
            .iter()
            .map(|f| {
                let key = (f.datum.v().to_vec(), f.datum.w().to_vec());
                let id = *index.entry(key).or_insert_with(|| {
                    unique.push(f.datum.clone());
                    occurrences.push(0);
                    unique.len() - 1
                });
                occurrences[id] += 1;
                id
            })
            .collect();
        census.push(CensusEntry {
            stratum,
            codim,
            decomposition,
            factor_ids,
        });
    }

    let lattice = build_flavour(&parent).expect("trimmed datum");
    let verdicts = par_map(options.threads, &unique, |f| {
        verdict(f).expect("factors are connected and trimmed")
    });

    let mut factors = Vec::with_capacity(unique.len());
    let mut hyperplanes = BTreeSet::new();
    let mut generic_citations = Vec::new();
    let mut obstructions = Vec::new();
    let mut bases = BTreeSet::new();
    for (id, (factor, verdict)) in unique.into_iter().zip(verdicts).enumerate() {
        let map = restriction_map(&parent, &factor).expect("factor lives on the parent quiver");
        let mut pulled_back = Vec::new();
        match &verdict {
            SmoothnessVerdict::CertifiedSmooth {
                hyperplanes: local,
                generic,
                basis,
            } => {
                bases.insert(basis.citation());
                for f in local {
                    let mut coeffs = vec![0i64; lattice.rank()];
                    for (j, &c) in f.coeffs.iter().enumerate() {
                        coeffs[map[j]] += c;
                    }
                    let g = Functional {
                        coeffs,
                        constant: f.constant,
                    }
                    .sign_normalized();
                    hyperplanes.insert(g.clone());
                    pulled_back.push(g);
                }
                if *generic {
                    generic_citations.push(GenericCitation {
                        factor: id,
                        citation: basis.citation().to_string(),
                    });
                }
            }
            SmoothnessVerdict::Unknown {
                reason,
                obstruction,
            } => obstructions.push(Obstruction {
                factor: id,
                reason: reason.clone(),
                case: *obstruction,
            }),
        }
        let codim = crate::classify::codim_zero(&factor).expect("factor is connected");
        let in_short_list = short_list_cached().iter().any(|fam| fam.matches(&factor));
        if mode == Mode::NormalSymplectic && codim > 0 && !in_short_list {
            obstructions.push(Obstruction {
                factor: id,
                reason: "positive-codimension factor outside the short list".into(),
                case: ObstructionCase::matching(&factor),
            });
        }
        let family = family_table_cached()
            .iter()
            .find(|fam| fam.matches(&factor))
            .map(Family::render);
        factors.push(FactorRecord {
            datum: factor,
            codim,
            family,
            verdict,
            in_short_list,
            occurrences: occurrences[id],
            pulled_back,
        });
    }
    obstructions.sort_by_key(|o| o.factor);

    let hyperplanes: Vec<Functional> = hyperplanes.into_iter().collect();
    let witness = make_witness(&lattice, &hyperplanes);
    let mut citations = vec![
        mode.citation().to_string(),
        "local-factor-decomposition".to_string(),
    ];
    if mode == Mode::NormalSymplectic {
        citations.push("short-list".to_string());
    }
    citations.extend(bases.into_iter().map(str::to_string));

    let mut cert = Certificate {
        datum: parent,
        mode,
        knowledge_base: revision_cached().to_string(),
        notes,
        census,
        factors,
        lattice,
        hyperplanes,
        generic_citations,
        witness: Some(witness),
        conclusion: Conclusion::Inconclusive,
        obstructions,
        citations,
    };
    if cert.obstructions.is_empty() && validate_witness(&cert) {
        cert.conclusion = Conclusion::Certified;
    }
    cert
}

fn par_map<T: Sync, U: Send>(
    threads: usize,
    items: &[T],
    f: impl Fn(&T) -> U + Sync + Send,
) -> Vec<U> {
    if threads <= 1 {
        return items.iter().map(f).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(|| items.par_iter().map(&f).collect()),
        Err(_) => items.iter().map(f).collect(),
    }
}

fn short_list_cached() -> &'static [Family] {
    static CELL: OnceLock<Vec<Family>> = OnceLock::new();
    CELL.get_or_init(short_list)
}

fn family_table_cached() -> &'static [Family] {
    static CELL: OnceLock<Vec<Family>> = OnceLock::new();
    CELL.get_or_init(|| enumerate_connected_data(3, true))
}

fn revision_cached() -> &'static str {
    static CELL: OnceLock<String> = OnceLock::new();
    CELL.get_or_init(knowledge_base_revision)
}

/// An integer coweight off every hyperplane.
///
/// The `k`-th coordinate used by any functional gets `B^(k+1)` where `B`
/// exceeds every functional's coefficient sum, so each value is a base-`B`
/// expansion with a nonzero digit. If that overflows, coordinates are
/// chosen greedily from `0, 1, -1, 2, ...`, each avoiding the at most one
/// bad value of every functional whose last coordinate it is.
pub fn make_witness(lattice: &FlavourLattice, hyperplanes: &[Functional]) -> Vec<i64> {
    let rank = lattice.rank();
    if let Some(w) = powers_witness(rank, hyperplanes) {
        if avoids_all(hyperplanes, &w) {
            return w;
        }
    }
    greedy_witness(rank, hyperplanes)
}

fn powers_witness(rank: usize, hyperplanes: &[Functional]) -> Option<Vec<i64>> {
    let base = hyperplanes
        .iter()
        .map(|f| {
            f.coeffs
                .iter()
                .try_fold(f.constant.unsigned_abs(), |acc, c| {
                    acc.checked_add(c.unsigned_abs())
                })
        })
        .try_fold(0u64, |acc, s| s.map(|s| acc.max(s)))?
        .checked_add(1)?;
    let base = i64::try_from(base).ok()?;
    let mut witness = vec![0i64; rank];
    let mut power = 1i64;
    for (j, slot) in witness.iter_mut().enumerate() {
        if hyperplanes
            .iter()
            .any(|f| f.coeffs.get(j).is_some_and(|&c| c != 0))
        {
            power = power.checked_mul(base)?;
            *slot = power;
        }
    }
    Some(witness)
}

fn greedy_witness(rank: usize, hyperplanes: &[Functional]) -> Vec<i64> {
    let mut witness = vec![0i64; rank];
    for j in 0..rank {
        let closing: Vec<&Functional> = hyperplanes
            .iter()
            .filter(|f| f.coeffs.iter().rposition(|&c| c != 0) == Some(j))
            .collect();
        let bad = |x: i64| {
            closing.iter().any(|f| {
                let partial: i128 = f.constant as i128
                    + (0..j)
                        .map(|k| f.coeffs[k] as i128 * witness[k] as i128)
                        .sum::<i128>();
                partial + f.coeffs[j] as i128 * x as i128 == 0
            })
        };
        let pick = (0i64..)
            .flat_map(|k| if k == 0 { vec![0] } else { vec![k, -k] })
            .find(|&x| !bad(x))
            .expect("finitely many bad values");
        witness[j] = pick;
    }
    witness
}

/// Every functional is nonzero at `kappa`, evaluated exactly.
pub fn avoids_all(hyperplanes: &[Functional], kappa: &[i64]) -> bool {
    hyperplanes
        .iter()
        .all(|f| matches!(f.evaluate(kappa), Some(v) if v != 0))
}

/// Re-evaluates every recorded hyperplane at the certificate's witness.
pub fn validate_witness(cert: &Certificate) -> bool {
    match &cert.witness {
        Some(w) if w.len() == cert.lattice.rank() => avoids_all(&cert.hyperplanes, w),
        _ => false,
    }
}
