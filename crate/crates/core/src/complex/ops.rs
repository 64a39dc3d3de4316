use std::collections::HashSet;

use super::{Simplex, SimplicialComplex, Vertex, VertexMap};
use crate::error::{Error, Result};

/// Barycentric subdivision together with the simplex each new vertex stands for.
#[derive(Clone, Debug)]
pub struct Subdivision {
    pub complex: SimplicialComplex,
    /// `labels[v]` is the simplex of the original complex whose barycenter is `v`.
    pub labels: Vec<Simplex>,
}

impl Subdivision {
    pub fn vertex_of(&self, original: &SimplicialComplex, s: &Simplex) -> Option<Vertex> {
        let k = s.len().checked_sub(1)?;
        let offset: usize = (0..k).map(|i| original.faces(i).len()).sum();
        original.index_of(s).map(|i| (offset + i) as Vertex)
    }
}

/// Vertices of the result are the nonempty simplices of `complex` in
/// canonical order; simplices are chains under inclusion.
pub fn barycentric_subdivision(complex: &SimplicialComplex) -> Subdivision {
    let labels: Vec<Simplex> = complex.cells().cloned().collect();
    let mut offsets = Vec::new();
    let mut acc = 0;
    for k in 0..complex.f_vector().len() {
        offsets.push(acc);
        acc += complex.faces(k).len();
    }
    let id = |s: &Simplex| -> Vertex {
        (offsets[s.len() - 1] + complex.index_of(s).expect("face of complex")) as Vertex
    };

    let mut chains = Vec::new();
    for facet in complex.facets() {
        let mut order: Vec<Vertex> = facet.vertices().to_vec();
        for_each_permutation(&mut order, &mut |perm| {
            let mut chain = Vec::with_capacity(perm.len());
            let mut prefix: Vec<Vertex> = Vec::with_capacity(perm.len());
            for &v in perm {
                prefix.push(v);
                let s = Simplex::new(prefix.iter().copied()).expect("distinct");
                chain.push(id(&s));
            }
            chains.push(Simplex::new(chain).expect("distinct chain members"));
        });
    }
    Subdivision { complex: SimplicialComplex::from_simplices(labels.len(), chains), labels }
}

fn for_each_permutation(items: &mut [Vertex], f: &mut dyn FnMut(&[Vertex])) {
    fn rec(items: &mut [Vertex], k: usize, f: &mut dyn FnMut(&[Vertex])) {
        if k == items.len() {
            f(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            rec(items, k + 1, f);
            items.swap(k, i);
        }
    }
    rec(items, 0, f);
}

/// Adds a fresh apex with id `vertex_count` joined to every simplex.
pub fn cone(complex: &SimplicialComplex) -> SimplicialComplex {
    let apex = Simplex::from_sorted(&[complex.vertex_count() as Vertex]);
    join_simplices(complex.vertex_count() + 1, complex, &[apex], 0)
}

/// Join; vertices of `b` are shifted past those of `a`.
pub fn join(a: &SimplicialComplex, b: &SimplicialComplex) -> SimplicialComplex {
    let shift = a.vertex_count() as Vertex;
    join_simplices(a.vertex_count() + b.vertex_count(), a, b.facets(), shift)
}

fn join_simplices(
    vertex_count: usize,
    a: &SimplicialComplex,
    b_facets: &[Simplex],
    shift: Vertex,
) -> SimplicialComplex {
    let shifted: Vec<Simplex> = b_facets
        .iter()
        .map(|s| Simplex::from_sorted(&s.vertices().iter().map(|v| v + shift).collect::<Vec<_>>()))
        .collect();
    let facets: Vec<Simplex> = if a.is_empty() {
        shifted
    } else if shifted.is_empty() {
        a.facets().to_vec()
    } else {
        a.facets()
            .iter()
            .flat_map(|f| shifted.iter().map(move |g| f.union(g).expect("disjoint vertex sets")))
            .collect()
    };
    SimplicialComplex::from_simplices(vertex_count, facets)
}

/// Image of `complex` under a surjective vertex map that is injective on every simplex.
pub fn simplicial_quotient(complex: &SimplicialComplex, map: &VertexMap) -> Result<SimplicialComplex> {
    if map.len() != complex.vertex_count() {
        return Err(Error::MalformedInput(format!(
            "vertex map has {} entries for {} vertices",
            map.len(),
            complex.vertex_count()
        )));
    }
    let target = map.0.iter().max().map_or(0, |&m| m as usize + 1);
    let hit: HashSet<Vertex> = map.0.iter().copied().collect();
    if hit.len() != target {
        return Err(Error::MalformedInput("vertex map is not surjective onto 0..n".into()));
    }
    let mut images = Vec::with_capacity(complex.facets().len());
    for f in complex.facets() {
        let mut img: Vec<(Vertex, Vertex)> = f.vertices().iter().map(|&v| (map.0[v as usize], v)).collect();
        img.sort_unstable();
        if let Some(w) = img.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::DegenerateQuotient { simplex: f.vertices().to_vec(), a: w[0].1, b: w[1].1 });
        }
        images.push(Simplex::from_sorted(&img.iter().map(|p| p.0).collect::<Vec<_>>()));
    }
    Ok(SimplicialComplex::from_simplices(target, images))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::is_flag;

    fn sc(f: &[&[Vertex]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(f.iter().copied()).unwrap()
    }

    #[test]
    fn subdivided_edge_is_path() {
        let sd = barycentric_subdivision(&sc(&[&[0, 1]]));
        assert_eq!(sd.complex.f_vector(), vec![3, 2]);
        assert_eq!(sd.labels[2], Simplex::from(&[0, 1][..]));
    }

    #[test]
    fn subdivided_triangle_boundary_is_hexagon() {
        let sd = barycentric_subdivision(&sc(&[&[0, 1], &[1, 2], &[0, 2]])).complex;
        assert_eq!(sd.f_vector(), vec![6, 6]);
        assert!(sd.neighbors().iter().all(|n| n.len() == 2));
    }

    #[test]
    fn vertex_lookup_matches_labels() {
        let l = sc(&[&[0, 1, 2], &[2, 3]]);
        let sd = barycentric_subdivision(&l);
        for (v, s) in sd.labels.iter().enumerate() {
            assert_eq!(sd.vertex_of(&l, s), Some(v as Vertex));
        }
    }

    #[test]
    fn cone_cases() {
        assert_eq!(cone(&SimplicialComplex::empty()).f_vector(), vec![1]);
        let c = cone(&sc(&[&[0, 1], &[1, 2], &[0, 2]]));
        assert_eq!(c.f_vector(), vec![4, 6, 3]);
        let p = cone(&sc(&[&[0], &[1]]));
        assert_eq!(p, sc(&[&[0, 2], &[1, 2]]));
    }

    #[test]
    fn join_of_zero_spheres_is_square() {
        let s0 = sc(&[&[0], &[1]]);
        let c4 = join(&s0, &s0);
        assert_eq!(c4.f_vector(), vec![4, 4]);
        assert!(c4.neighbors().iter().all(|n| n.len() == 2));
        let oct = join(&c4, &s0);
        assert_eq!(oct.f_vector(), vec![6, 12, 8]);
        assert!(is_flag(&oct).is_flag);
    }

    #[test]
    fn join_with_empty_is_identity() {
        let p = sc(&[&[0, 1]]);
        assert_eq!(join(&p, &SimplicialComplex::empty()), p);
        assert_eq!(join(&SimplicialComplex::empty(), &p), p);
    }

    #[test]
    fn quotient_identity_and_degenerate() {
        let t = sc(&[&[0, 1, 2]]);
        assert_eq!(simplicial_quotient(&t, &VertexMap::identity(3)).unwrap(), t);
        let err = simplicial_quotient(&t, &VertexMap(vec![0, 0, 1])).unwrap_err();
        assert!(matches!(err, Error::DegenerateQuotient { a: 0, b: 1, .. }));
    }
}
