use std::collections::{BTreeSet, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{Simplex, SimplicialComplex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseStep {
    pub face: Simplex,
    pub coface: Simplex,
}

/// Elementary collapses that reduce a complex to a single vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseSequence {
    /// `None` for the deterministic pass, otherwise the restart seed.
    pub seed: Option<u64>,
    pub steps: Vec<CollapseStep>,
}

impl CollapseSequence {
    /// Replays the sequence from scratch on `complex`.
    pub fn replay(&self, complex: &SimplicialComplex) -> Result<(), String> {
        let mut present: HashSet<Simplex> = complex.cells().cloned().collect();
        let n = complex.vertex_count() as u32;
        for (i, step) in self.steps.iter().enumerate() {
            let (face, coface) = (&step.face, &step.coface);
            if !present.contains(face) || !present.contains(coface) {
                return Err(format!("step {i}: {face} or {coface} already removed"));
            }
            if coface.len() != face.len() + 1 || !face.is_face_of(coface) {
                return Err(format!("step {i}: {coface} is not a codimension-one coface of {face}"));
            }
            let cofaces = (0..n).filter_map(|v| face.with_vertex(v)).filter(|s| present.contains(s)).count();
            if cofaces != 1 {
                return Err(format!("step {i}: {face} is not free ({cofaces} cofaces)"));
            }
            present.remove(face);
            present.remove(coface);
        }
        match present.len() {
            1 if present.iter().all(|s| s.len() == 1) => Ok(()),
            k => Err(format!("{k} cells remain after the last step")),
        }
    }
}

struct Lattice {
    cells: Vec<Simplex>,
    facets: Vec<Vec<usize>>,
    cofaces: Vec<Vec<usize>>,
}

impl Lattice {
    fn new(complex: &SimplicialComplex) -> Self {
        let f = complex.f_vector();
        let mut offsets = vec![0];
        for c in &f {
            offsets.push(offsets.last().unwrap() + c);
        }
        let cells: Vec<Simplex> = complex.cells().cloned().collect();
        let mut facets = vec![Vec::new(); cells.len()];
        let mut cofaces = vec![Vec::new(); cells.len()];
        for (id, s) in cells.iter().enumerate() {
            if s.len() < 2 {
                continue;
            }
            for face in s.facets() {
                let fid = offsets[face.len() - 1] + complex.index_of(&face).expect("closed");
                facets[id].push(fid);
                cofaces[fid].push(id);
            }
        }
        Lattice { cells, facets, cofaces }
    }

    /// One greedy pass; free faces are taken in canonical order, or at
    /// random when an RNG is supplied.
    fn attempt(&self, mut rng: Option<&mut ChaCha8Rng>) -> Option<Vec<CollapseStep>> {
        let n = self.cells.len();
        if n == 0 {
            return None;
        }
        let mut alive = vec![true; n];
        let mut count: Vec<usize> = self.cofaces.iter().map(Vec::len).collect();
        let mut remaining = n;
        let mut ordered: BTreeSet<usize> = BTreeSet::new();
        let mut pool: Vec<usize> = Vec::new();
        for id in (0..n).filter(|&i| count[i] == 1) {
            ordered.insert(id);
            pool.push(id);
        }
        let mut steps = Vec::new();
        loop {
            let next = match rng.as_deref_mut() {
                None => ordered.pop_first(),
                Some(r) => {
                    if pool.is_empty() {
                        None
                    } else {
                        let i = r.gen_range(0..pool.len());
                        Some(pool.swap_remove(i))
                    }
                }
            };
            let Some(face) = next else { break };
            if !alive[face] || count[face] != 1 {
                continue;
            }
            let coface = *self.cofaces[face].iter().find(|&&c| alive[c]).expect("one live coface");
            alive[face] = false;
            alive[coface] = false;
            remaining -= 2;
            for &f in self.facets[coface].iter().chain(&self.facets[face]) {
                if !alive[f] {
                    continue;
                }
                count[f] -= 1;
                if count[f] == 1 {
                    ordered.insert(f);
                    pool.push(f);
                }
            }
            steps.push(CollapseStep { face: self.cells[face].clone(), coface: self.cells[coface].clone() });
        }
        (remaining == 1).then_some(steps)
    }
}

/// Greedy free-face collapse: a deterministic pass in canonical order, then
/// randomized restarts with seeds `0..budget`. The lowest successful seed
/// wins. `None` proves nothing about contractibility.
pub fn collapse(complex: &SimplicialComplex, budget: u64) -> Option<CollapseSequence> {
    let lattice = Lattice::new(complex);
    if let Some(steps) = lattice.attempt(None) {
        return Some(CollapseSequence { seed: None, steps });
    }
    (0..budget).into_par_iter().find_map_first(|seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        lattice.attempt(Some(&mut rng)).map(|steps| CollapseSequence { seed: Some(seed), steps })
    })
}
