use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::FiniteQuotientSpec;
use crate::complex::{require_flag, Simplex, SimplicialComplex};
use crate::error::Result;
use crate::homology::{ChainComplexZ, SparseIntMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeCell {
    /// Residue vector of the deck element.
    pub deck_element: Vec<u64>,
    /// The simplex of L (∅ for the vertex) whose cube this is a translate of.
    pub base_simplex: Simplex,
}

/// A Salvetti complex or one of its finite abelian covers.
///
/// An i-cube is a pair (deck element, (i−1)-simplex of L). Cells are
/// ordered deck-element-major, then by the canonical simplex order.
#[derive(Clone, Debug)]
pub struct CubeComplex {
    pub spec: FiniteQuotientSpec,
    pub deck: Vec<Vec<u64>>,
    /// `base_cells[i]` are the simplices of L with i vertices.
    pub base_cells: Vec<Vec<Simplex>>,
    /// `boundaries[i]` maps i-cubes to (i−1)-cubes; `boundaries[0]` is empty.
    pub boundaries: Vec<SparseIntMatrix>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubeSummary {
    pub moduli: Vec<u64>,
    pub index: u64,
    pub cell_counts: Vec<usize>,
    pub euler_characteristic: i64,
}

impl CubeComplex {
    pub fn index(&self) -> u64 {
        self.deck.len() as u64
    }

    pub fn dim(&self) -> usize {
        self.base_cells.len() - 1
    }

    pub fn cell_counts(&self) -> Vec<usize> {
        self.base_cells.iter().map(|b| b.len() * self.deck.len()).collect()
    }

    pub fn cell(&self, dim: usize, index: usize) -> CubeCell {
        let per = self.base_cells[dim].len();
        CubeCell { deck_element: self.deck[index / per].clone(), base_simplex: self.base_cells[dim][index % per].clone() }
    }

    pub fn euler_characteristic(&self) -> i64 {
        crate::complex::alternating_sum(&self.cell_counts())
    }

    pub fn chain_complex(&self) -> ChainComplexZ {
        let labels = (0..self.base_cells.len())
            .map(|d| {
                self.deck
                    .iter()
                    .flat_map(|q| {
                        let q = q.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
                        self.base_cells[d].iter().map(move |s| format!("({q})·{s}"))
                    })
                    .collect()
            })
            .collect();
        ChainComplexZ::new(self.boundaries.clone(), labels, false).expect("cube complex is well formed")
    }

    pub fn summary(&self) -> CubeSummary {
        CubeSummary {
            moduli: self.spec.moduli.clone(),
            index: self.index(),
            cell_counts: self.cell_counts(),
            euler_characteristic: self.euler_characteristic(),
        }
    }
}

/// One vertex and one (k+1)-cube per k-simplex of L; every boundary vanishes.
pub fn salvetti_complex(l: &SimplicialComplex) -> Result<CubeComplex> {
    finite_cover(l, &FiniteQuotientSpec::trivial(l.vertex_count()))
}

/// The cover of the Salvetti complex with deck group the image of `spec`.
///
/// For the cube (q, σ) with σ = {v_1 < … < v_k}, the two facets in
/// direction v_j are (q, σ∖v_j) and (q + φ(v_j), σ∖v_j), and
/// ∂(q, σ) = Σ_j (−1)^{j−1} [(q + φ(v_j), σ∖v_j) − (q, σ∖v_j)].
pub fn finite_cover(l: &SimplicialComplex, spec: &FiniteQuotientSpec) -> Result<CubeComplex> {
    require_flag(l)?;
    spec.validate(l.vertex_count())?;
    let deck = spec.deck_group();
    let deck_index: HashMap<&[u64], usize> = deck.iter().enumerate().map(|(i, q)| (q.as_slice(), i)).collect();
    let images: Vec<Vec<u64>> = (0..l.vertex_count()).map(|v| spec.image(v)).collect();

    let mut base_cells = vec![vec![Simplex::empty()]];
    base_cells.extend(l.f_vector().iter().enumerate().map(|(k, _)| l.faces(k).to_vec()));

    let mut boundaries = vec![SparseIntMatrix::zeros(0, deck.len())];
    for dim in 1..base_cells.len() {
        let lower = &base_cells[dim - 1];
        let lower_index = |s: &Simplex| -> usize {
            if dim == 1 {
                0
            } else {
                l.index_of(s).expect("face of L")
            }
        };
        let mut columns = Vec::with_capacity(deck.len() * base_cells[dim].len());
        for q in &deck {
            for sigma in &base_cells[dim] {
                let mut entries: HashMap<u32, i64> = HashMap::new();
                for (j, &v) in sigma.vertices().iter().enumerate() {
                    let face = lower_index(&sigma.without_index(j));
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    let shifted = deck_index[spec.add(q, &images[v as usize]).as_slice()];
                    let here = deck_index[q.as_slice()];
                    *entries.entry((shifted * lower.len() + face) as u32).or_insert(0) += sign;
                    *entries.entry((here * lower.len() + face) as u32).or_insert(0) -= sign;
                }
                let mut col: Vec<(u32, i64)> = entries.into_iter().filter(|e| e.1 != 0).collect();
                col.sort_unstable();
                columns.push(col);
            }
        }
        boundaries.push(SparseIntMatrix::from_columns(deck.len() * lower.len(), columns));
    }
    Ok(CubeComplex { spec: spec.clone(), deck, base_cells, boundaries })
}
