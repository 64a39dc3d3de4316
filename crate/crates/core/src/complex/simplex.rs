use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Vertex = u32;

/// A simplex as a strictly increasing list of vertex ids.
///
/// The empty simplex (dimension −1) is representable. Ordering is
/// dimension-major and lexicographic within a dimension, which is the
/// canonical cell order used for every boundary matrix in the crate.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vertex>", into = "Vec<Vertex>")]
pub struct Simplex(SmallVec<[Vertex; 8]>);

impl TryFrom<Vec<Vertex>> for Simplex {
    type Error = Error;

    fn try_from(v: Vec<Vertex>) -> Result<Self> {
        Simplex::new(v)
    }
}

impl From<Simplex> for Vec<Vertex> {
    fn from(s: Simplex) -> Self {
        s.0.to_vec()
    }
}

impl Simplex {
    pub fn empty() -> Self {
        Simplex(SmallVec::new())
    }

    /// Builds a simplex from arbitrary-order vertices, rejecting duplicates.
    pub fn new<I: IntoIterator<Item = Vertex>>(vertices: I) -> Result<Self> {
        let mut v: SmallVec<[Vertex; 8]> = vertices.into_iter().collect();
        v.sort_unstable();
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::MalformedInput(format!(
                "vertex {} repeated within a simplex",
                w[0]
            )));
        }
        Ok(Simplex(v))
    }

    /// Caller guarantees `vertices` is strictly increasing.
    pub(crate) fn from_sorted(vertices: &[Vertex]) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Simplex(SmallVec::from_slice(vertices))
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.any(|w| w == v))
    }

    /// Codimension-one faces; the i-th drops vertex i, so the boundary sign is (−1)^i.
    pub fn facets(&self) -> impl Iterator<Item = Simplex> + '_ {
        (0..self.0.len()).map(move |i| self.without_index(i))
    }

    pub fn without_index(&self, i: usize) -> Simplex {
        let mut v = self.0.clone();
        v.remove(i);
        Simplex(v)
    }

    pub fn without_vertex(&self, v: Vertex) -> Option<Simplex> {
        self.0.binary_search(&v).ok().map(|i| self.without_index(i))
    }

    pub fn with_vertex(&self, v: Vertex) -> Option<Simplex> {
        match self.0.binary_search(&v) {
            Ok(_) => None,
            Err(i) => {
                let mut out = self.0.clone();
                out.insert(i, v);
                Some(Simplex(out))
            }
        }
    }

    /// Every face including the empty one and `self`.
    pub fn all_faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.0.len();
        assert!(n < 32, "simplex too large for face enumeration");
        (0u32..(1u32 << n)).map(move |mask| {
            Simplex(
                (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| self.0[i])
                    .collect(),
            )
        })
    }

    /// Disjoint union of vertex sets; `None` if they overlap.
    pub fn union(&self, other: &Simplex) -> Option<Simplex> {
        let mut v: SmallVec<[Vertex; 8]> = self.0.iter().chain(other.0.iter()).copied().collect();
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some(Simplex(v))
    }
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl From<&[Vertex]> for Simplex {
    fn from(v: &[Vertex]) -> Self {
        Simplex::new(v.iter().copied()).expect("distinct vertices")
    }
}
