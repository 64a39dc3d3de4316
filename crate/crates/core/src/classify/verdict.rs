use serde::{Deserialize, Serialize};

use super::collapse::{collapse, CollapseSequence};
use super::witness::{verify_witness, EmbeddingWitness};
use crate::complex::{require_flag, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::{homology, simplicial_chain_complex, top_cohomology_nonzero, HomologySummary, TopCohomology};

pub const DEFAULT_BUDGET: u64 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    PositiveEntropy,
    ZeroEntropy,
    Undetermined,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCertificate {
    pub witness: EmbeddingWitness,
    pub collapse: CollapseSequence,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data")]
pub enum Certificate {
    TopCohomologyNonzero(TopCohomology),
    /// d ≠ 2 and H^d(L; Z) = 0, so L embeds in a contractible d-complex.
    ComplementaryVanishing(TopCohomology),
    CollapsibleSelf(CollapseSequence),
    EmbeddingWitness(WitnessCertificate),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub outcome: Outcome,
    pub d: isize,
    pub gdim: isize,
    pub certificate: Option<Certificate>,
    pub homology: HomologySummary,
    pub notes: Vec<String>,
    /// Restart seeds available to the collapse search.
    pub seeds: Vec<u64>,
}

impl Verdict {
    /// Checks the verdict and its certificate against `l` from scratch.
    pub fn reverify(&self, l: &SimplicialComplex) -> std::result::Result<(), String> {
        let top = top_cohomology_nonzero(l).map_err(|e| e.to_string())?;
        if self.d != l.dim() || self.gdim != l.dim() + 1 {
            return Err("dimension mismatch".into());
        }
        match (&self.outcome, &self.certificate) {
            (Outcome::PositiveEntropy, Some(Certificate::TopCohomologyNonzero(_))) => {
                top.nonzero.then_some(()).ok_or_else(|| "H^d(L; Z) vanishes".to_string())
            }
            (Outcome::ZeroEntropy, Some(Certificate::ComplementaryVanishing(_))) if self.d != 2 => {
                (!top.nonzero).then_some(()).ok_or_else(|| "H^d(L; Z) does not vanish".to_string())
            }
            (Outcome::ZeroEntropy, Some(Certificate::CollapsibleSelf(seq))) => seq.replay(l),
            (Outcome::ZeroEntropy, Some(Certificate::EmbeddingWitness(w))) => {
                w.witness.check_embedding(l)?;
                w.collapse.replay(&w.witness.supercomplex)
            }
            (Outcome::Undetermined, None) if self.d == 2 && !top.nonzero => Ok(()),
            (o, c) => Err(format!("outcome {o:?} does not match certificate {:?}", c.as_ref().map(kind))),
        }
    }
}

fn kind(c: &Certificate) -> &'static str {
    match c {
        Certificate::TopCohomologyNonzero(_) => "TopCohomologyNonzero",
        Certificate::ComplementaryVanishing(_) => "ComplementaryVanishing",
        Certificate::CollapsibleSelf(_) => "CollapsibleSelf",
        Certificate::EmbeddingWitness(_) => "EmbeddingWitness",
    }
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        kind(self)
    }
}

/// Classifies A_L. `budget` is the number of randomized collapse restarts.
pub fn classify(l: &SimplicialComplex, witness: Option<&EmbeddingWitness>, budget: u64) -> Result<Verdict> {
    if l.is_empty() {
        return Err(Error::Precondition("the empty complex defines the trivial group".into()));
    }
    require_flag(l)?;
    let d = l.dim();
    let top = top_cohomology_nonzero(l)?;
    if !top.cross_check_agrees {
        return Err(Error::Internal(format!(
            "integral and F_p routes disagree on H^{d}: {:?} vs {:?}",
            top.reason, top.fp_checks
        )));
    }
    let cc = simplicial_chain_complex(l, true);
    let mut primes: Vec<u64> = top.fp_checks.iter().map(|c| c.0).collect();
    primes.sort_unstable();
    let homology = homology(&cc, &primes)?;
    let mut verdict = Verdict {
        outcome: Outcome::Undetermined,
        d,
        gdim: d + 1,
        certificate: None,
        homology,
        notes: Vec::new(),
        seeds: Vec::new(),
    };

    if top.nonzero {
        verdict.outcome = Outcome::PositiveEntropy;
        verdict.certificate = Some(Certificate::TopCohomologyNonzero(top));
        return Ok(verdict);
    }
    if d != 2 {
        verdict.outcome = Outcome::ZeroEntropy;
        verdict.certificate = Some(Certificate::ComplementaryVanishing(top));
        return Ok(verdict);
    }

    verdict.seeds = (0..budget).collect();
    if let Some(w) = witness {
        let check = verify_witness(l, w, budget);
        if check.malformed {
            return Err(Error::WitnessRejected(check.reason));
        }
        match check.collapse {
            Some(seq) if check.accepted => {
                verdict.outcome = Outcome::ZeroEntropy;
                verdict.certificate =
                    Some(Certificate::EmbeddingWitness(WitnessCertificate { witness: w.clone(), collapse: seq }));
                return Ok(verdict);
            }
            _ => verdict.notes.push(format!("witness not accepted: {}", check.reason)),
        }
    }
    if let Some(seq) = collapse(l, budget) {
        verdict.outcome = Outcome::ZeroEntropy;
        verdict.certificate = Some(Certificate::CollapsibleSelf(seq));
        return Ok(verdict);
    }
    verdict.notes.push(format!(
        "d = 2 and H^2(L; Z) = 0, but no collapse of L was found (deterministic pass plus {budget} seeded restarts); \
         supply an embedding into a contractible 2-complex to decide"
    ));
    Ok(verdict)
}
