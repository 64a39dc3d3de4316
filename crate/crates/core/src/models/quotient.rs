use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Homomorphism from A_L to a finite abelian group ⊕ Z/k_j, given by the
/// image of each generator. Any assignment extends, since the target is abelian.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteQuotientSpec {
    pub moduli: Vec<u64>,
    /// `images[v]` is the residue vector of generator `v`.
    pub images: Vec<Vec<u64>>,
}

impl FiniteQuotientSpec {
    /// Every generator to its own coordinate of (Z/k)^n.
    pub fn uniform(vertex_count: usize, k: u64) -> Self {
        Self::diagonal(vec![k; vertex_count])
    }

    /// Generator v to the v-th coordinate of ⊕ Z/moduli[v].
    pub fn diagonal(moduli: Vec<u64>) -> Self {
        let n = moduli.len();
        let images = (0..n)
            .map(|v| (0..n).map(|j| u64::from(j == v)).collect())
            .collect();
        FiniteQuotientSpec { moduli, images }
    }

    pub fn trivial(vertex_count: usize) -> Self {
        FiniteQuotientSpec { moduli: Vec::new(), images: vec![Vec::new(); vertex_count] }
    }

    pub fn validate(&self, vertex_count: usize) -> Result<()> {
        if let Some(j) = self.moduli.iter().position(|&k| k == 0) {
            return Err(Error::InvalidQuotient(format!("modulus {j} is zero")));
        }
        if self.images.len() != vertex_count {
            return Err(Error::InvalidQuotient(format!(
                "spec assigns images to {} generators but L has {vertex_count} vertices",
                self.images.len()
            )));
        }
        if let Some(v) = self.images.iter().position(|im| im.len() != self.moduli.len()) {
            return Err(Error::InvalidQuotient(format!("image of generator {v} has the wrong length")));
        }
        Ok(())
    }

    pub(crate) fn image(&self, v: usize) -> Vec<u64> {
        self.images[v].iter().zip(&self.moduli).map(|(r, k)| r % k).collect()
    }

    pub(crate) fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).zip(&self.moduli).map(|((x, y), k)| (x + y) % k).collect()
    }

    /// Elements of the subgroup generated by the given generators, sorted.
    pub(crate) fn generated_subgroup(&self, generators: impl IntoIterator<Item = usize>) -> Vec<Vec<u64>> {
        let gens: Vec<Vec<u64>> = generators.into_iter().map(|v| self.image(v)).collect();
        // Residue vectors are packed mixed-radix when the ambient group fits in a u64.
        let Some(_) = self.moduli.iter().try_fold(1u64, |acc, &k| acc.checked_mul(k)) else {
            return self.generated_subgroup_unpacked(&gens);
        };
        let pack = |x: &[u64]| x.iter().zip(&self.moduli).fold(0u64, |acc, (r, k)| acc * k + r);
        let unpack = |mut code: u64| {
            let mut x = vec![0; self.moduli.len()];
            for (slot, k) in x.iter_mut().zip(&self.moduli).rev() {
                *slot = code % k;
                code /= k;
            }
            x
        };
        let mut seen: HashSet<u64> = HashSet::from([0]);
        let mut queue = VecDeque::from([vec![0; self.moduli.len()]]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = self.add(&x, g);
                if seen.insert(pack(&y)) {
                    queue.push_back(y);
                }
            }
        }
        let mut codes: Vec<u64> = seen.into_iter().collect();
        // mixed-radix order is lexicographic order on residue vectors
        codes.sort_unstable();
        codes.into_iter().map(unpack).collect()
    }

    fn generated_subgroup_unpacked(&self, gens: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let zero = vec![0; self.moduli.len()];
        let mut seen: HashSet<Vec<u64>> = HashSet::from([zero.clone()]);
        let mut queue = VecDeque::from([zero]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = self.add(&x, g);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let mut out: Vec<Vec<u64>> = seen.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// The deck group: image of A_L.
    pub fn deck_group(&self) -> Vec<Vec<u64>> {
        self.generated_subgroup(0..self.images.len())
    }

    pub fn index(&self) -> u64 {
        self.deck_group().len() as u64
    }

    pub fn describe(&self) -> String {
        self.moduli.iter().map(u64::to_string).collect::<Vec<_>>().join(";")
    }
}
