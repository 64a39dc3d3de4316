use crate::complex::{barycentric_subdivision, cone, Simplex, SimplicialComplex, Vertex};
use crate::error::{Error, Result};

/// Geometric realization of the poset of simplices of L together with ∅.
#[derive(Clone, Debug)]
pub struct PosetComplexK {
    pub complex: SimplicialComplex,
    /// `labels[v]` is the simplex of L that vertex `v` stands for; the apex is ∅.
    pub labels: Vec<Simplex>,
    pub apex: Vertex,
}

impl PosetComplexK {
    /// Smallest label along the chain τ.
    pub fn min_label(&self, tau: &Simplex) -> Result<&Simplex> {
        if tau.is_empty() || !self.complex.contains(tau) {
            return Err(Error::NotInComplex(tau.vertices().to_vec()));
        }
        Ok(tau
            .vertices()
            .iter()
            .map(|&v| &self.labels[v as usize])
            .min_by_key(|s| s.len())
            .expect("nonempty chain"))
    }
}

/// Cone on the barycentric subdivision, apex labelled by the empty simplex.
pub fn davis_poset_complex(l: &SimplicialComplex) -> PosetComplexK {
    let sd = barycentric_subdivision(l);
    let complex = cone(&sd.complex);
    let apex = sd.labels.len() as Vertex;
    let mut labels = sd.labels;
    labels.push(Simplex::empty());
    PosetComplexK { complex, labels, apex }
}

/// Dimension of the torus over the open simplex τ: the size of its minimum label.
pub fn fiber_dimension(k: &PosetComplexK, tau: &Simplex) -> Result<usize> {
    k.min_label(tau).map(Simplex::len)
}

/// χ of the toral model, summed stratum by stratum over K. A stratum τ
/// contributes χ(open τ)·χ(T^m) which vanishes unless m = 0.
pub fn euler_characteristic_xl(l: &SimplicialComplex) -> i64 {
    let k = davis_poset_complex(l);
    k.complex
        .cells()
        .filter(|tau| fiber_dimension(&k, tau).expect("cell of K") == 0)
        .map(|tau| if tau.dim() % 2 == 0 { 1 } else { -1 })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(f: &[&[Vertex]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(f.iter().copied()).unwrap()
    }

    #[test]
    fn point_gives_edge() {
        let k = davis_poset_complex(&sc(&[&[0]]));
        assert_eq!(k.complex.f_vector(), vec![2, 1]);
        assert_eq!(k.labels[k.apex as usize], Simplex::empty());
    }

    #[test]
    fn edge_gives_cone_on_path() {
        let k = davis_poset_complex(&sc(&[&[0, 1]]));
        assert_eq!(k.complex.vertex_count(), 4);
        assert_eq!(k.complex.f_vector(), vec![4, 5, 2]);
    }

    #[test]
    fn triangle_boundary_chain_count() {
        let k = davis_poset_complex(&sc(&[&[0, 1], &[1, 2], &[0, 2]]));
        assert_eq!(k.complex.vertex_count(), 7);
        assert_eq!(k.complex.euler_characteristic(), 1);
    }

    #[test]
    fn fiber_dimensions() {
        let l = sc(&[&[0, 1]]);
        let k = davis_poset_complex(&l);
        let id = |s: &[Vertex]| k.labels.iter().position(|x| x.vertices() == s).unwrap() as Vertex;
        let apex = Simplex::new([k.apex]).unwrap();
        assert_eq!(fiber_dimension(&k, &apex).unwrap(), 0);
        assert_eq!(fiber_dimension(&k, &Simplex::new([id(&[0, 1])]).unwrap()).unwrap(), 2);
        assert_eq!(fiber_dimension(&k, &Simplex::new([id(&[0]), id(&[0, 1])]).unwrap()).unwrap(), 1);
        assert_eq!(fiber_dimension(&k, &Simplex::new([id(&[0]), k.apex]).unwrap()).unwrap(), 0);
        assert!(fiber_dimension(&k, &Simplex::new([id(&[0]), id(&[1])]).unwrap()).is_err());
    }

    #[test]
    fn toral_euler_characteristic() {
        assert_eq!(euler_characteristic_xl(&sc(&[&[0], &[1]])), -1);
        assert_eq!(euler_characteristic_xl(&sc(&[&[0, 1]])), 0);
        assert_eq!(euler_characteristic_xl(&sc(&[&[0, 1], &[1, 2], &[2, 3], &[0, 3]])), 1);
    }
}
