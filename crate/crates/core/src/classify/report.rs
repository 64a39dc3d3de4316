use std::fmt;

use serde::{Deserialize, Serialize};

use super::verdict::{Certificate, Outcome, Verdict};
use crate::complex::SimplicialComplex;

/// Degree and primes in which mod-p homology growth of A_L is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthPrediction {
    pub degree: isize,
    /// Every prime qualifies (free top homology).
    pub all_primes: bool,
    pub primes: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub name: Option<String>,
    pub dimension: isize,
    pub gdim: isize,
    pub f_vector: Vec<usize>,
    pub verdict: Verdict,
    /// "verified", "none" or "failed: <reason>".
    pub certificate_replay: String,
    pub growth_prediction: Option<GrowthPrediction>,
}

pub fn report(l: &SimplicialComplex, verdict: &Verdict) -> Report {
    let certificate_replay = match (&verdict.certificate, verdict.reverify(l)) {
        (None, Ok(())) => "none".to_string(),
        (Some(_), Ok(())) => "verified".to_string(),
        (_, Err(e)) => format!("failed: {e}"),
    };
    let growth_prediction = match &verdict.certificate {
        Some(Certificate::TopCohomologyNonzero(top)) => Some(GrowthPrediction {
            degree: verdict.d + 1,
            all_primes: top.all_primes,
            primes: top.witness_primes.clone(),
        }),
        _ => None,
    };
    Report {
        name: l.name().map(str::to_string),
        dimension: l.dim(),
        gdim: l.dim() + 1,
        f_vector: l.f_vector(),
        verdict: verdict.clone(),
        certificate_replay,
        growth_prediction,
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = &self.verdict;
        writeln!(f, "complex      {}", self.name.as_deref().unwrap_or("<unnamed>"))?;
        writeln!(f, "dim L        {}", self.dimension)?;
        writeln!(f, "gdim A_L     {}", self.gdim)?;
        writeln!(f, "f-vector     {:?}", self.f_vector)?;
        for d in &v.homology.degrees {
            writeln!(f, "H̃_{:<2}        {}", d.degree, v.homology.group_string(d.degree))?;
        }
        writeln!(f, "verdict      {:?}", v.outcome)?;
        if let Some(c) = &v.certificate {
            writeln!(f, "certificate  {} ({})", c.kind(), self.certificate_replay)?;
        }
        if let Some(g) = &self.growth_prediction {
            let primes = if g.all_primes {
                "every prime".to_string()
            } else {
                format!("p ∈ {:?}", g.primes)
            };
            writeln!(f, "growth       nonvanishing mod-p homology growth in degree {} for {primes}", g.degree)?;
        }
        if v.outcome == Outcome::Undetermined || !v.notes.is_empty() {
            for n in &v.notes {
                writeln!(f, "note         {n}")?;
            }
        }
        Ok(())
    }
}
