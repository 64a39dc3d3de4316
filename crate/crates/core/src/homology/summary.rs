use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{rank_mod_p, simplicial_chain_complex, smith_normal_form, ChainComplexZ, SnfResult};
use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::homology::{is_prime, prime_factors};
use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeHomology {
    pub degree: usize,
    /// Rank over Q.
    pub betti: usize,
    /// Invariant factors > 1 of the torsion subgroup.
    #[serde(with = "crate::homology::decimal_vec")]
    pub torsion: Vec<BigUint>,
}

impl DegreeHomology {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }

    fn torsion_divisible_by(&self, p: u64) -> usize {
        self.torsion.iter().filter(|t| (*t % p).is_zero()).count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologySummary {
    pub reduced: bool,
    pub degrees: Vec<DegreeHomology>,
    /// Per requested prime, Betti numbers over F_p by degree.
    #[serde(default)]
    pub betti_fp: BTreeMap<u64, Vec<usize>>,
}

impl HomologySummary {
    pub fn degree(&self, i: usize) -> Option<&DegreeHomology> {
        self.degrees.get(i)
    }

    pub fn betti(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.betti).collect()
    }

    /// F_p Betti numbers predicted from the integral groups by universal coefficients.
    pub fn uct_betti_fp(&self, p: u64) -> Vec<usize> {
        (0..self.degrees.len())
            .map(|i| {
                let below = if i == 0 { 0 } else { self.degrees[i - 1].torsion_divisible_by(p) };
                self.degrees[i].betti + self.degrees[i].torsion_divisible_by(p) + below
            })
            .collect()
    }

    /// Every stored F_p column agrees with the universal-coefficient prediction.
    pub fn uct_consistent(&self) -> bool {
        self.betti_fp.iter().all(|(&p, b)| *b == self.uct_betti_fp(p))
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating(self.degrees.iter().map(|d| d.betti))
    }

    /// Primes dividing some torsion coefficient.
    pub fn torsion_primes(&self) -> Vec<u64> {
        let mut ps: Vec<u64> = self.degrees.iter().flat_map(|d| d.torsion.iter().flat_map(prime_factors)).collect();
        ps.sort_unstable();
        ps.dedup();
        ps
    }

    /// Human-readable group in one degree, e.g. `Z^2 ⊕ Z/2`.
    pub fn group_string(&self, i: usize) -> String {
        let Some(d) = self.degrees.get(i) else { return "0".into() };
        let mut parts = Vec::new();
        match d.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        parts.extend(d.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" ⊕ ")
        }
    }
}

pub(crate) fn alternating(values: impl Iterator<Item = usize>) -> i64 {
    values.enumerate().map(|(i, v)| if i % 2 == 0 { v as i64 } else { -(v as i64) }).sum()
}

/// Integral homology plus Betti numbers over each prime in `primes`.
pub fn homology(cc: &ChainComplexZ, primes: &[u64]) -> Result<HomologySummary> {
    cc.check_boundary_squared()?;
    if let Some(&p) = primes.iter().find(|&&p| !is_prime(p)) {
        return Err(Error::NotPrime(p));
    }
    let snfs: Vec<SnfResult> = cc.boundaries.par_iter().map(smith_normal_form).collect();
    let counts = cc.cell_counts();
    let degrees = (0..counts.len())
        .map(|i| {
            let out_rank = snfs[i].rank();
            let (in_rank, torsion) = snfs.get(i + 1).map_or((0, Vec::new()), |s| (s.rank(), s.invariant_factors.clone()));
            DegreeHomology { degree: i, betti: counts[i] - out_rank - in_rank, torsion }
        })
        .collect();
    let betti_fp = primes
        .par_iter()
        .map(|&p| betti_fp(cc, p).map(|b| (p, b)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(HomologySummary { reduced: cc.augmented, degrees, betti_fp })
}

pub fn homology_z(cc: &ChainComplexZ) -> Result<HomologySummary> {
    homology(cc, &[])
}

/// Betti numbers over F_p from ranks of the boundary maps reduced mod p.
pub fn betti_fp(cc: &ChainComplexZ, p: u64) -> Result<Vec<usize>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let ranks = cc.boundaries.par_iter().map(|d| rank_mod_p(d, p)).collect::<Result<Vec<_>>>()?;
    let counts = cc.cell_counts();
    Ok((0..counts.len())
        .map(|i| counts[i] - ranks[i] - ranks.get(i + 1).copied().unwrap_or(0))
        .collect())
}

/// Reduced integral homology of a simplicial complex.
pub fn reduced_homology(complex: &SimplicialComplex) -> Result<HomologySummary> {
    homology_z(&simplicial_chain_complex(complex, true))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum TopCohomologyReason {
    /// H_d has positive rank.
    FreeTop { rank: usize },
    /// H_{d−1} has torsion, which survives as Ext into H^d.
    TorsionBelow {
        #[serde(with = "crate::homology::decimal_vec")]
        torsion: Vec<BigUint>,
    },
    Vanishing,
}

/// Whether H^d(L; Z) ≠ 0 for d = dim L, computed from reduced homology.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopCohomology {
    pub nonzero: bool,
    pub dimension: isize,
    pub reason: TopCohomologyReason,
    /// Primes p with b_d(L; F_p) > 0 among those checked; empty when
    /// cohomology vanishes. A free top group makes every prime qualify,
    /// in which case `all_primes` is set.
    pub witness_primes: Vec<u64>,
    pub all_primes: bool,
    /// (p, b_d(L; F_p)) for every prime the F_p route examined.
    pub fp_checks: Vec<(u64, usize)>,
    /// The F_p route agrees with the integral route.
    pub cross_check_agrees: bool,
}

pub fn top_cohomology_nonzero(complex: &SimplicialComplex) -> Result<TopCohomology> {
    let d = complex.dim();
    if d < 0 {
        return Ok(TopCohomology {
            nonzero: false,
            dimension: d,
            reason: TopCohomologyReason::Vanishing,
            witness_primes: Vec::new(),
            all_primes: false,
            fp_checks: Vec::new(),
            cross_check_agrees: true,
        });
    }
    let cc = simplicial_chain_complex(complex, true);
    let h = homology_z(&cc)?;
    let du = d as usize;
    let top = &h.degrees[du];
    let torsion_below = if du == 0 { Vec::new() } else { h.degrees[du - 1].torsion.clone() };
    let reason = if top.betti > 0 {
        TopCohomologyReason::FreeTop { rank: top.betti }
    } else if !torsion_below.is_empty() {
        TopCohomologyReason::TorsionBelow { torsion: torsion_below.clone() }
    } else {
        TopCohomologyReason::Vanishing
    };
    let nonzero = !matches!(reason, TopCohomologyReason::Vanishing);

    let mut primes: Vec<u64> = torsion_below.iter().flat_map(prime_factors).collect();
    primes.push(2);
    primes.sort_unstable();
    primes.dedup();
    let fp_checks = primes
        .par_iter()
        .map(|&p| betti_fp(&cc, p).map(|b| (p, b[du])))
        .collect::<Result<Vec<_>>>()?;
    let witness_primes: Vec<u64> = fp_checks.iter().filter(|c| c.1 > 0).map(|c| c.0).collect();
    let cross_check_agrees = nonzero == !witness_primes.is_empty();
    Ok(TopCohomology {
        nonzero,
        dimension: d,
        all_primes: top.betti > 0,
        reason,
        witness_primes,
        fp_checks,
        cross_check_agrees,
    })
}
