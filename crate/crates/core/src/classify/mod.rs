//! Zero versus positive minimal volume entropy for A_L, decided from L.
//!
//! Positive when H^d(L; Z) ≠ 0 (d = dim L). Zero when L embeds in a
//! contractible d-complex, which for d ≠ 2 is equivalent to H^d(L; Z) = 0.
//! For d = 2 the zero verdict needs a certificate: a collapse of L itself
//! or a verified embedding witness. Otherwise the verdict is undetermined.

mod collapse;
mod report;
mod verdict;
mod witness;

pub use collapse::{collapse, CollapseSequence, CollapseStep};
pub use report::{report, GrowthPrediction, Report};
pub use verdict::{classify, Certificate, Outcome, Verdict, WitnessCertificate, DEFAULT_BUDGET};
pub use witness::{verify_witness, EmbeddingWitness, WitnessCheck};
