//! Finite abstract simplicial complexes and the constructions used on them.
//!
//! A [`SimplicialComplex`] is stored by its facets on the dense vertex set
//! `0..vertex_count`. The full face lattice is materialized on first use and
//! cached; cells are always ordered dimension-major, lexicographic within a
//! dimension.

mod fixtures;
mod flag;
mod ops;
mod simplex;

use std::collections::HashMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use fixtures::{fixture, FixtureParams, FIXTURE_NAMES};
pub use flag::{flag_completion, is_flag, FlagCheck};
pub(crate) use flag::require_flag;
pub use ops::{barycentric_subdivision, cone, join, simplicial_quotient, Subdivision};
pub use simplex::{Simplex, Vertex};

/// Vertex map indexed by source vertex: `map[v]` is the image of `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexMap(pub Vec<Vertex>);

impl VertexMap {
    pub fn identity(n: usize) -> Self {
        VertexMap((0..n as Vertex).collect())
    }

    pub fn get(&self, v: Vertex) -> Option<Vertex> {
        self.0.get(v as usize).copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = self.0.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// Applies the map to a simplex; `None` if two vertices collide or one is unmapped.
    pub fn image(&self, s: &Simplex) -> Option<Simplex> {
        let v: Option<Vec<Vertex>> = s.vertices().iter().map(|&v| self.get(v)).collect();
        Simplex::new(v?).ok()
    }
}

#[derive(Debug)]
struct FaceLattice {
    by_dim: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
}

#[derive(Debug, Clone)]
pub struct SimplicialComplex {
    name: Option<String>,
    vertex_count: usize,
    facets: Vec<Simplex>,
    faces: OnceLock<std::sync::Arc<FaceLattice>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    /// Closure of the given facets on vertices `0..=max id`.
    pub fn from_facets<I, F>(facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: AsRef<[Vertex]>,
    {
        let simplices = collect_simplices(facets)?;
        let n = simplices
            .iter()
            .flat_map(|s| s.vertices().iter())
            .max()
            .map_or(0, |&m| m as usize + 1);
        Ok(Self::from_simplices(n, simplices))
    }

    /// Closure of the given facets on vertices `0..vertex_count`. Vertices
    /// not covered by any facet become isolated points.
    pub fn with_vertex_count<I, F>(vertex_count: usize, facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: AsRef<[Vertex]>,
    {
        let simplices = collect_simplices(facets)?;
        if let Some(v) = simplices
            .iter()
            .flat_map(|s| s.vertices().iter())
            .find(|&&v| v as usize >= vertex_count)
        {
            return Err(Error::MalformedInput(format!(
                "vertex {v} out of range for {vertex_count} vertices"
            )));
        }
        Ok(Self::from_simplices(vertex_count, simplices))
    }

    pub fn empty() -> Self {
        Self::from_simplices(0, Vec::new())
    }

    pub(crate) fn from_simplices(vertex_count: usize, mut simplices: Vec<Simplex>) -> Self {
        simplices.retain(|s| !s.is_empty());
        let mut covered = vec![false; vertex_count];
        for s in &simplices {
            for &v in s.vertices() {
                covered[v as usize] = true;
            }
        }
        for (v, c) in covered.iter().enumerate() {
            if !c {
                simplices.push(Simplex::from_sorted(&[v as Vertex]));
            }
        }
        SimplicialComplex {
            name: None,
            vertex_count,
            facets: maximal_only(simplices),
            faces: OnceLock::new(),
        }
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_count == 0
    }

    /// Dimension; −1 for the empty complex.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(Simplex::dim).max().unwrap_or(-1)
    }

    fn lattice(&self) -> &FaceLattice {
        self.faces.get_or_init(|| std::sync::Arc::new(build_lattice(&self.facets, self.dim())))
    }

    /// The `k`-dimensional faces in canonical order.
    pub fn faces(&self, k: usize) -> &[Simplex] {
        self.lattice().by_dim.get(k).map_or(&[], Vec::as_slice)
    }

    /// Position of `s` within `faces(s.dim())`.
    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        if s.is_empty() {
            return None;
        }
        self.lattice().index.get(s.len() - 1)?.get(s).copied()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        s.is_empty() || self.index_of(s).is_some()
    }

    /// All nonempty faces, dimension-major.
    pub fn cells(&self) -> impl Iterator<Item = &Simplex> {
        self.lattice().by_dim.iter().flatten()
    }

    pub fn num_cells(&self) -> usize {
        self.lattice().by_dim.iter().map(Vec::len).sum()
    }

    /// (f_0, …, f_d).
    pub fn f_vector(&self) -> Vec<usize> {
        self.lattice().by_dim.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.f_vector())
    }

    /// Sorted adjacency lists of the 1-skeleton.
    pub fn neighbors(&self) -> Vec<Vec<Vertex>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for e in self.faces(1) {
            let (a, b) = (e.vertices()[0], e.vertices()[1]);
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    /// Subcomplex of faces of dimension at most `k`.
    pub fn skeleton(&self, k: usize) -> SimplicialComplex {
        let simplices = (0..=k).flat_map(|i| self.faces(i).iter().cloned()).collect();
        Self::from_simplices(self.vertex_count, simplices)
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson {
            name: self.name.clone(),
            vertices: self.vertex_count,
            facets: self.facets.iter().map(|s| s.vertices().to_vec()).collect(),
        }
    }

    pub fn from_json(json: &ComplexJson) -> Result<Self> {
        let mut c = Self::with_vertex_count(json.vertices, &json.facets)?;
        c.name = json.name.clone();
        Ok(c)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Self::from_json(&serde_json::from_str(s)?)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("complex serializes")
    }
}

/// The facet-list interchange format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub vertices: usize,
    pub facets: Vec<Vec<Vertex>>,
}

pub(crate) fn alternating_sum(counts: &[usize]) -> i64 {
    counts
        .iter()
        .enumerate()
        .map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum()
}

fn collect_simplices<I, F>(facets: I) -> Result<Vec<Simplex>>
where
    I: IntoIterator<Item = F>,
    F: AsRef<[Vertex]>,
{
    facets
        .into_iter()
        .map(|f| {
            let f = f.as_ref();
            if f.is_empty() {
                return Err(Error::MalformedInput("empty facet".into()));
            }
            Simplex::new(f.iter().copied())
        })
        .collect()
}

/// Drops duplicates and every simplex that is a face of another.
fn maximal_only(mut simplices: Vec<Simplex>) -> Vec<Simplex> {
    simplices.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    simplices.dedup();
    let n = simplices.iter().flat_map(|s| s.vertices()).max().map_or(0, |&m| m as usize + 1);
    let mut by_vertex: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut kept: Vec<Simplex> = Vec::new();
    for s in simplices {
        let v0 = s.vertices()[0] as usize;
        if by_vertex[v0].iter().any(|&i| s.is_face_of(&kept[i])) {
            continue;
        }
        for &v in s.vertices() {
            by_vertex[v as usize].push(kept.len());
        }
        kept.push(s);
    }
    kept.sort_unstable();
    kept
}

fn build_lattice(facets: &[Simplex], dim: isize) -> FaceLattice {
    let levels = (dim + 1).max(0) as usize;
    let mut sets: Vec<std::collections::HashSet<Simplex>> = vec![Default::default(); levels];
    for f in facets {
        for face in f.all_faces() {
            if !face.is_empty() {
                sets[face.len() - 1].insert(face);
            }
        }
    }
    let by_dim: Vec<Vec<Simplex>> = sets
        .into_iter()
        .map(|s| {
            let mut v: Vec<_> = s.into_iter().collect();
            v.sort_unstable();
            v
        })
        .collect();
    let index = by_dim
        .iter()
        .map(|level| level.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect())
        .collect();
    FaceLattice { by_dim, index }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_boundary_closure() {
        let c = SimplicialComplex::from_facets([[0, 1], [1, 2], [0, 2]]).unwrap();
        assert_eq!(c.f_vector(), vec![3, 3]);
        assert_eq!(c.dim(), 1);
    }

    #[test]
    fn full_triangle() {
        let c = SimplicialComplex::from_facets([[0, 1, 2]]).unwrap();
        assert_eq!(c.f_vector(), vec![3, 3, 1]);
        assert_eq!(c.euler_characteristic(), 1);
    }

    #[test]
    fn two_points() {
        let c = SimplicialComplex::from_facets([[0], [1]]).unwrap();
        assert_eq!(c.dim(), 0);
        assert_eq!(c.f_vector(), vec![2]);
    }

    #[test]
    fn redundant_faces_absorbed() {
        let c = SimplicialComplex::from_facets(vec![vec![0, 1], vec![0, 1, 2], vec![2]]).unwrap();
        assert_eq!(c.facets(), &[Simplex::from(&[0, 1, 2][..])]);
    }

    #[test]
    fn duplicate_vertex_is_malformed() {
        let err = SimplicialComplex::from_facets([[0, 0, 1]]).unwrap_err();
        assert!(matches!(err, Error::MalformedInput(_)));
    }

    #[test]
    fn isolated_vertices_from_count() {
        let c = SimplicialComplex::with_vertex_count(4, [[0, 1]]).unwrap();
        assert_eq!(c.f_vector(), vec![4, 1]);
        assert!(SimplicialComplex::with_vertex_count(1, [[0, 1]]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let c = SimplicialComplex::from_facets([[2, 1], [1, 0]]).unwrap().named("p3");
        let back = SimplicialComplex::from_json_str(&c.to_json_string()).unwrap();
        assert_eq!(back, c);
        assert_eq!(back.name(), Some("p3"));
    }

    #[test]
    fn index_lookup_matches_order() {
        let c = SimplicialComplex::from_facets(vec![vec![0, 1, 2], vec![2, 3]]).unwrap();
        for k in 0..=2 {
            for (i, s) in c.faces(k).iter().enumerate() {
                assert_eq!(c.index_of(s), Some(i));
            }
        }
        assert!(c.contains(&Simplex::empty()));
        assert!(!c.contains(&Simplex::from(&[0, 3][..])));
    }
}
