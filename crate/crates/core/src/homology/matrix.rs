use std::collections::HashMap;
use std::io::Write;

/// Column-major sparse integer matrix; column `j` is a sorted list of
/// `(row, value)` pairs with no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseIntMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(u32, i64)>>,
}

impl SparseIntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseIntMatrix { rows, cols, columns: vec![Vec::new(); cols] }
    }

    /// Duplicate positions are summed; zero results are dropped.
    pub fn from_triplets(rows: usize, cols: usize, triplets: impl IntoIterator<Item = (usize, usize, i64)>) -> Self {
        let mut acc: Vec<HashMap<u32, i64>> = vec![HashMap::new(); cols];
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "entry ({r}, {c}) out of bounds for {rows}×{cols}");
            *acc[c].entry(r as u32).or_insert(0) += v;
        }
        let columns = acc
            .into_iter()
            .map(|m| {
                let mut col: Vec<(u32, i64)> = m.into_iter().filter(|&(_, v)| v != 0).collect();
                col.sort_unstable();
                col
            })
            .collect();
        SparseIntMatrix { rows, cols, columns }
    }

    pub(crate) fn from_columns(rows: usize, columns: Vec<Vec<(u32, i64)>>) -> Self {
        debug_assert!(columns.iter().all(|c| c.windows(2).all(|w| w[0].0 < w[1].0) && c.iter().all(|e| e.1 != 0)));
        SparseIntMatrix { rows, cols: columns.len(), columns }
    }

    pub fn from_dense(dense: &[Vec<i64>]) -> Self {
        let rows = dense.len();
        let cols = dense.first().map_or(0, Vec::len);
        let triplets = dense
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &v)| (r, c, v)));
        Self::from_triplets(rows, cols, triplets)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn column(&self, j: usize) -> &[(u32, i64)] {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[Vec<(u32, i64)>] {
        &self.columns
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        let col = &self.columns[c];
        col.binary_search_by_key(&(r as u32), |e| e.0).map_or(0, |i| col[i].1)
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |&(r, v)| (r as usize, c, v)))
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut d = vec![vec![0; self.cols]; self.rows];
        for (r, c, v) in self.triplets() {
            d[r][c] = v;
        }
        d
    }

    pub fn transpose(&self) -> Self {
        Self::from_triplets(self.cols, self.rows, self.triplets().map(|(r, c, v)| (c, r, v)))
    }

    /// True when `self · rhs` is the zero matrix. Accumulates in i128.
    pub fn product_is_zero(&self, rhs: &SparseIntMatrix) -> bool {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut acc: HashMap<u32, i128> = HashMap::new();
        for col in &rhs.columns {
            acc.clear();
            for &(k, b) in col {
                for &(i, a) in &self.columns[k as usize] {
                    *acc.entry(i).or_insert(0) += a as i128 * b as i128;
                }
            }
            if acc.values().any(|&v| v != 0) {
                return false;
            }
        }
        true
    }

    /// Permutes rows and columns: entry (r, c) moves to (row_perm[r], col_perm[c]).
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> Self {
        Self::from_triplets(self.rows, self.cols, self.triplets().map(|(r, c, v)| (row_perm[r], col_perm[c], v)))
    }

    /// Line-oriented dump: a header line then one `row col value` line per entry.
    pub fn dump(&self, degree: usize, out: &mut impl Write) -> std::io::Result<()> {
        writeln!(out, "degree {degree} rows {} cols {} nnz {}", self.rows, self.cols, self.nnz())?;
        for (r, c, v) in self.triplets() {
            writeln!(out, "{r} {c} {v}")?;
        }
        Ok(())
    }
}
