use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::snf::invariant_factors;
use super::{reduced_homology, DegreeHomology, HomologySummary};
use crate::complex::SimplicialComplex;
use crate::error::Result;

/// Finitely generated abelian group Z^rank ⊕ ⊕ Z/t in invariant-factor form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub rank: usize,
    #[serde(with = "crate::homology::decimal_vec")]
    pub torsion: Vec<BigUint>,
}

impl AbelianGroup {
    pub fn new(rank: usize, cyclic_orders: Vec<BigUint>) -> Self {
        let torsion = invariant_factors(cyclic_orders).into_iter().filter(|t| *t > BigUint::from(1u8)).collect();
        AbelianGroup { rank, torsion }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        AbelianGroup::new(self.rank + other.rank, self.torsion.iter().chain(&other.torsion).cloned().collect())
    }

    pub fn tensor(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut cyc = Vec::new();
        for _ in 0..self.rank {
            cyc.extend(other.torsion.iter().cloned());
        }
        for _ in 0..other.rank {
            cyc.extend(self.torsion.iter().cloned());
        }
        for a in &self.torsion {
            for b in &other.torsion {
                cyc.push(a.gcd(b));
            }
        }
        AbelianGroup::new(self.rank * other.rank, cyc)
    }

    pub fn tor(&self, other: &AbelianGroup) -> AbelianGroup {
        let cyc = self.torsion.iter().flat_map(|a| other.torsion.iter().map(move |b| a.gcd(b))).collect();
        AbelianGroup::new(0, cyc)
    }
}

impl From<&DegreeHomology> for AbelianGroup {
    fn from(d: &DegreeHomology) -> Self {
        AbelianGroup::new(d.betti, d.torsion.clone())
    }
}

fn groups(h: &HomologySummary) -> Vec<AbelianGroup> {
    h.degrees.iter().map(AbelianGroup::from).collect()
}

/// Reduced homology of a join from the reduced homology of its factors:
/// H̃_{n+1}(A ∗ B) = ⊕_{i+j=n} H̃_i(A) ⊗ H̃_j(B) ⊕ ⊕_{i+j=n−1} Tor(H̃_i(A), H̃_j(B)).
pub fn join_homology_kunneth(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<HomologySummary> {
    if a.is_empty() {
        return reduced_homology(b);
    }
    if b.is_empty() {
        return reduced_homology(a);
    }
    let (ga, gb) = (groups(&reduced_homology(a)?), groups(&reduced_homology(b)?));
    Ok(join_from_groups(&ga, &gb))
}

fn join_from_groups(ga: &[AbelianGroup], gb: &[AbelianGroup]) -> HomologySummary {
    let top = ga.len() + gb.len() - 1;
    let mut out = vec![AbelianGroup::default(); top + 1];
    for (i, x) in ga.iter().enumerate() {
        for (j, y) in gb.iter().enumerate() {
            out[i + j + 1] = out[i + j + 1].direct_sum(&x.tensor(y));
            if i + j + 2 <= top {
                out[i + j + 2] = out[i + j + 2].direct_sum(&x.tor(y));
            }
        }
    }
    HomologySummary {
        reduced: true,
        degrees: out
            .into_iter()
            .enumerate()
            .map(|(degree, g)| DegreeHomology { degree, betti: g.rank, torsion: g.torsion })
            .collect(),
        betti_fp: Default::default(),
    }
}

/// Reduced F_p Betti numbers of a join from those of the factors (field
/// coefficients, so only tensor terms appear).
pub fn join_betti_fp_kunneth(a: &[usize], b: &[usize]) -> Vec<usize> {
    if a.is_empty() {
        return b.to_vec();
    }
    if b.is_empty() {
        return a.to_vec();
    }
    let mut out = vec![0; a.len() + b.len()];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j + 1] += x * y;
        }
    }
    out
}
