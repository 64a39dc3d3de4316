mod common;

use common::{fx, random_complex};
use proptest::prelude::*;
use raag_core::complex::*;
use raag_core::homology::reduced_homology;

/// Exhaustive oracle: every pairwise-adjacent vertex subset is a face.
fn flag_by_enumeration(c: &SimplicialComplex) -> bool {
    let n = c.vertex_count();
    assert!(n <= 16);
    let adj = c.neighbors();
    (0u32..(1 << n)).all(|mask| {
        let vs: Vec<Vertex> = (0..n as u32).filter(|v| mask & (1 << v) != 0).collect();
        let clique = vs.iter().enumerate().all(|(i, a)| vs[i + 1..].iter().all(|b| adj[*a as usize].binary_search(b).is_ok()));
        !clique || c.contains(&Simplex::new(vs).unwrap())
    })
}

fn f_poly(c: &SimplicialComplex) -> Vec<usize> {
    std::iter::once(1).chain(c.f_vector()).collect()
}

fn poly_mul(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn assert_closed(c: &SimplicialComplex) {
    for s in c.cells() {
        for f in s.facets().filter(|f| !f.is_empty()) {
            assert!(c.contains(&f), "{f} missing below {s}");
        }
    }
}

#[test]
fn octahedron_is_flag_by_enumeration() {
    let oct = fx("octahedron");
    assert!(flag_by_enumeration(&oct));
    assert!(is_flag(&oct).is_flag);
}

#[test]
fn rp2_6_is_not_flag_and_witness_is_missing_triangle() {
    let rp2 = fx("rp2_6");
    // 1-skeleton is K_6: 20 triangles of which 10 are faces
    assert_eq!(rp2.f_vector()[1], 15);
    assert_eq!(rp2.faces(2).len(), 10);
    assert!(!flag_by_enumeration(&rp2));
    let w = is_flag(&rp2).witness.unwrap();
    assert_eq!(w.len(), 3);
    assert!(!rp2.contains(&w));
}

#[test]
fn rp2_subdivision_f_vector() {
    // f0 = 6+15+10, f1 = 2·15 + 6·10, f2 = 6·10
    let sd = barycentric_subdivision(&fx("rp2_6")).complex;
    assert_eq!(sd.f_vector(), vec![31, 90, 60]);
    assert_eq!(sd.euler_characteristic(), 1);
    let h = reduced_homology(&sd).unwrap();
    assert_eq!(h.group_string(1), "Z/2");
    assert!(is_flag(&sd).is_flag);
}

#[test]
fn icosahedron_quotient_is_rp2() {
    let q = fx("rp2_6");
    assert_eq!(q.f_vector(), vec![6, 15, 10]);
    assert_eq!(reduced_homology(&q).unwrap().group_string(1), "Z/2");
}

#[test]
fn join_of_subdivided_rp2_and_moore_space() {
    let j = join(&fx("rp2_flag"), &fx("moore_flag(3)"));
    assert_eq!(j.dim(), 5);
    assert!(is_flag(&j).is_flag);
}

#[test]
fn every_construction_is_closed() {
    let inputs = [fx("rp2_6"), fx("moore(3)"), fx("cycle(5)"), fx("octahedron")];
    for c in &inputs {
        assert_closed(c);
        assert_closed(&barycentric_subdivision(c).complex);
        assert_closed(&cone(c));
    }
    assert_closed(&join(&inputs[0], &inputs[2]));
}

#[test]
fn fifty_random_subdivisions_are_flag() {
    for seed in 0..50 {
        let c = random_complex(seed, 8);
        let sd = barycentric_subdivision(&c).complex;
        assert!(is_flag(&sd).is_flag, "seed {seed}");
    }
}

#[test]
fn homology_invariant_under_subdivision_on_fixtures() {
    for name in ["rp2_6", "moore(2)", "moore(3)", "cycle(5)", "octahedron", "simplex_boundary(4)", "annulus_flag", "discrete(3)"] {
        let c = fx(name);
        let sd = barycentric_subdivision(&c).complex;
        assert_eq!(reduced_homology(&c).unwrap().degrees, reduced_homology(&sd).unwrap().degrees, "{name}");
        assert_eq!(c.euler_characteristic(), sd.euler_characteristic(), "{name}");
    }
}

#[test]
fn cone_preserves_flagness() {
    for name in ["cycle(5)", "octahedron", "rp2_6", "disk_flag"] {
        let c = fx(name);
        assert_eq!(is_flag(&c).is_flag, is_flag(&cone(&c)).is_flag, "{name}");
        assert!(reduced_homology(&cone(&c)).unwrap().degrees.iter().all(|d| d.is_zero()));
    }
}

fn arb_complex() -> impl Strategy<Value = SimplicialComplex> {
    (1u32..=6).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::btree_set(0..n, 1..=(n.min(4) as usize)), 1..6).prop_map(move |fs| {
            let mut facets: Vec<Vec<Vertex>> = (0..n).map(|v| vec![v]).collect();
            facets.extend(fs.into_iter().map(|s| s.into_iter().collect()));
            SimplicialComplex::from_facets(facets).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn join_multiplies_f_polynomials(a in arb_complex(), b in arb_complex()) {
        let j = join(&a, &b);
        prop_assert_eq!(f_poly(&j), poly_mul(&f_poly(&a), &f_poly(&b)));
        prop_assert_eq!(j.dim(), a.dim() + b.dim() + 1);
    }

    #[test]
    fn join_of_flag_is_flag(a in arb_complex(), b in arb_complex()) {
        let (fa, fb) = (is_flag(&a).is_flag, is_flag(&b).is_flag);
        prop_assume!(fa && fb);
        prop_assert!(is_flag(&join(&a, &b)).is_flag);
    }

    #[test]
    fn subdivision_preserves_euler_characteristic(c in arb_complex()) {
        prop_assert_eq!(barycentric_subdivision(&c).complex.euler_characteristic(), c.euler_characteristic());
    }

    #[test]
    fn is_flag_matches_enumeration(c in arb_complex()) {
        prop_assert_eq!(is_flag(&c).is_flag, flag_by_enumeration(&c));
    }

    #[test]
    fn json_round_trip_is_canonical(c in arb_complex()) {
        let back = SimplicialComplex::from_json_str(&c.to_json_string()).unwrap();
        prop_assert_eq!(back.to_json_string(), c.to_json_string());
        prop_assert_eq!(back, c);
    }
}
