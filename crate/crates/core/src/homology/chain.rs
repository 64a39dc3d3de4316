use std::io::Write;

use super::SparseIntMatrix;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// Free chain complex C_top → … → C_0 (→ Z when augmented) with fixed bases.
#[derive(Clone, Debug)]
pub struct ChainComplexZ {
    /// `boundaries[i]` is ∂_i : C_i → C_{i−1}. `boundaries[0]` is the
    /// augmentation C_0 → Z when `augmented`, otherwise a 0-row matrix.
    pub boundaries: Vec<SparseIntMatrix>,
    pub basis_labels: Vec<Vec<String>>,
    pub augmented: bool,
}

impl ChainComplexZ {
    pub fn new(boundaries: Vec<SparseIntMatrix>, basis_labels: Vec<Vec<String>>, augmented: bool) -> Result<Self> {
        if boundaries.len() != basis_labels.len() {
            return Err(Error::MalformedInput("one basis per degree required".into()));
        }
        for (i, d) in boundaries.iter().enumerate() {
            if d.cols() != basis_labels[i].len() {
                return Err(Error::MalformedInput(format!("∂_{i} has {} columns for {} cells", d.cols(), basis_labels[i].len())));
            }
            let expected_rows = if i == 0 { usize::from(augmented) } else { basis_labels[i - 1].len() };
            if d.rows() != expected_rows {
                return Err(Error::MalformedInput(format!("∂_{i} has {} rows, expected {expected_rows}", d.rows())));
            }
        }
        Ok(ChainComplexZ { boundaries, basis_labels, augmented })
    }

    /// Top degree; −1 when there are no cells at all.
    pub fn top_dimension(&self) -> isize {
        self.boundaries.len() as isize - 1
    }

    pub fn cell_counts(&self) -> Vec<usize> {
        self.basis_labels.iter().map(Vec::len).collect()
    }

    /// ∂_{i} ∘ ∂_{i+1} = 0 in every degree.
    pub fn check_boundary_squared(&self) -> Result<()> {
        for i in 1..self.boundaries.len() {
            if !self.boundaries[i - 1].product_is_zero(&self.boundaries[i]) {
                return Err(Error::CorruptComplex { degree: i });
            }
        }
        Ok(())
    }

    pub fn euler_characteristic(&self) -> i64 {
        crate::complex::alternating_sum(&self.cell_counts())
    }

    pub fn dump(&self, out: &mut impl Write) -> std::io::Result<()> {
        for (i, d) in self.boundaries.iter().enumerate() {
            d.dump(i, out)?;
        }
        Ok(())
    }
}

/// Simplicial chain complex in canonical cell order; ∂σ = Σ (−1)^i σ∖v_i.
pub fn simplicial_chain_complex(complex: &SimplicialComplex, augmented: bool) -> ChainComplexZ {
    let f = complex.f_vector();
    let mut boundaries = Vec::with_capacity(f.len());
    let mut labels = Vec::with_capacity(f.len());
    for (k, &count) in f.iter().enumerate() {
        let cells = complex.faces(k);
        labels.push(cells.iter().map(ToString::to_string).collect());
        if k == 0 {
            let rows = usize::from(augmented);
            let columns = (0..count).map(|_| if augmented { vec![(0u32, 1i64)] } else { Vec::new() }).collect();
            boundaries.push(SparseIntMatrix::from_columns(rows, columns));
            continue;
        }
        let columns = cells
            .iter()
            .map(|s| {
                let mut col: Vec<(u32, i64)> = s
                    .facets()
                    .enumerate()
                    .map(|(i, face)| {
                        let row = complex.index_of(&face).expect("closed under faces");
                        (row as u32, if i % 2 == 0 { 1 } else { -1 })
                    })
                    .collect();
                col.sort_unstable();
                col
            })
            .collect();
        boundaries.push(SparseIntMatrix::from_columns(f[k - 1], columns));
    }
    ChainComplexZ { boundaries, basis_labels: labels, augmented }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{fixture, FixtureParams};

    #[test]
    fn full_triangle_top_boundary() {
        let t = SimplicialComplex::from_facets([[0, 1, 2]]).unwrap();
        let cc = simplicial_chain_complex(&t, false);
        // edges in order {0,1}, {0,2}, {1,2}; ∂[0,1,2] = [1,2] − [0,2] + [0,1]
        assert_eq!(cc.boundaries[2].to_dense(), vec![vec![1], vec![-1], vec![1]]);
    }

    #[test]
    fn triangle_boundary_column_sums_vanish() {
        let c3 = SimplicialComplex::from_facets([[0, 1], [1, 2], [0, 2]]).unwrap();
        let cc = simplicial_chain_complex(&c3, false);
        let d = cc.boundaries[1].to_dense();
        assert_eq!((d.len(), d[0].len()), (3, 3));
        for j in 0..3 {
            assert_eq!(d.iter().map(|r| r[j]).sum::<i64>(), 0);
        }
    }

    #[test]
    fn fixtures_square_to_zero() {
        for name in ["rp2_6", "rp2_flag", "octahedron", "moore(3)", "simplex(4)", "icosahedron"] {
            let c = fixture(name, FixtureParams::default()).unwrap();
            for aug in [false, true] {
                simplicial_chain_complex(&c, aug).check_boundary_squared().unwrap();
            }
        }
    }

    #[test]
    fn corrupt_complex_detected() {
        let d1 = SparseIntMatrix::from_dense(&[vec![1], vec![1]]);
        let d2 = SparseIntMatrix::from_dense(&[vec![1]]);
        let cc = ChainComplexZ::new(
            vec![SparseIntMatrix::zeros(0, 2), d1, d2],
            vec![vec!["a".into(), "b".into()], vec!["e".into()], vec!["t".into()]],
            false,
        )
        .unwrap();
        assert!(matches!(cc.check_boundary_squared(), Err(Error::CorruptComplex { degree: 2 })));
    }
}
