#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use raag_core::complex::{fixture, FixtureParams, SimplicialComplex, Vertex};

pub fn fx(name: &str) -> SimplicialComplex {
    fixture(name, FixtureParams::default()).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// Random complex on at most `max_vertices` vertices from a handful of random facets.
pub fn random_complex(seed: u64, max_vertices: u32) -> SimplicialComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_vertices);
    let facets = rng.gen_range(1..=8);
    let mut out: Vec<Vec<Vertex>> = (0..n).map(|v| vec![v]).collect();
    for _ in 0..facets {
        let size = rng.gen_range(1..=n.min(5));
        let mut f: Vec<Vertex> = Vec::new();
        while f.len() < size as usize {
            let v = rng.gen_range(0..n);
            if !f.contains(&v) {
                f.push(v);
            }
        }
        out.push(f);
    }
    SimplicialComplex::from_facets(out).unwrap()
}

/// Flag complexes from random graphs.
pub fn random_flag_complex(seed: u64, max_vertices: u32) -> SimplicialComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_vertices);
    let p: f64 = rng.gen_range(0.2..0.8);
    let mut edges: Vec<Vec<Vertex>> = (0..n).map(|v| vec![v]).collect();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push(vec![a, b]);
            }
        }
    }
    let g = SimplicialComplex::from_facets(edges).unwrap();
    raag_core::complex::flag_completion(&g).unwrap()
}

/// The named flag fixtures used across suites.
pub fn flag_fixtures() -> Vec<SimplicialComplex> {
    [
        "simplex(0)", "simplex(1)", "simplex(2)", "simplex(3)", "cycle(4)", "cycle(5)", "cycle(6)", "path(2)",
        "path(4)", "discrete(1)", "discrete(2)", "discrete(3)", "octahedron", "icosahedron", "rp2_flag",
        "moore_flag(2)", "moore_flag(3)", "disk_flag", "annulus_flag", "filled_annulus_flag",
    ]
    .iter()
    .map(|n| fx(n))
    .collect()
}
