//! Named complexes. Every fixture is checked against its known Euler
//! characteristic and reduced integral homology when it is built.

use super::{barycentric_subdivision, simplicial_quotient, SimplicialComplex, Vertex, VertexMap};
use crate::error::{Error, Result};
use crate::homology::reduced_homology;

pub const FIXTURE_NAMES: &[&str] = &[
    "simplex",
    "simplex_boundary",
    "cycle",
    "path",
    "discrete",
    "octahedron",
    "icosahedron",
    "rp2_6",
    "rp2_flag",
    "moore",
    "moore_flag",
    "disk_flag",
    "annulus_flag",
    "filled_annulus_flag",
];

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FixtureParams {
    pub n: Option<usize>,
    pub q: Option<usize>,
}

impl FixtureParams {
    pub fn n(n: usize) -> Self {
        FixtureParams { n: Some(n), q: None }
    }

    pub fn q(q: usize) -> Self {
        FixtureParams { n: None, q: Some(q) }
    }
}

/// Expected reduced homology per degree: (free rank, torsion coefficients).
type Expected = Vec<(usize, Vec<u64>)>;

fn sphere(dim: usize) -> Expected {
    let mut e = vec![(0, vec![]); dim + 1];
    e[dim].0 = 1;
    e
}

fn acyclic(dim: usize) -> Expected {
    vec![(0, vec![]); dim + 1]
}

fn moore_expected(q: u64) -> Expected {
    vec![(0, vec![]), (0, vec![q]), (0, vec![])]
}

/// Builds a fixture by name. Accepts `name(k)` shorthand for the parameter.
pub fn fixture(name: &str, params: FixtureParams) -> Result<SimplicialComplex> {
    let (name, params) = parse_inline(name, params)?;
    let need = |p: Option<usize>, what: &str| {
        p.ok_or_else(|| Error::InvalidParameter(format!("fixture `{name}` needs parameter {what}")))
    };
    let (complex, chi, expected): (SimplicialComplex, i64, Expected) = match name.as_str() {
        "simplex" => {
            let n = need(params.n, "n")?;
            let v: Vec<Vertex> = (0..=n as Vertex).collect();
            (SimplicialComplex::from_facets([v])?, 1, acyclic(n))
        }
        "simplex_boundary" => {
            let n = need(params.n, "n")?;
            if n < 1 {
                return Err(Error::InvalidParameter("simplex_boundary needs n ≥ 1".into()));
            }
            let facets: Vec<Vec<Vertex>> = (0..=n as Vertex)
                .map(|skip| (0..=n as Vertex).filter(|&v| v != skip).collect())
                .collect();
            let chi = 1 + if (n - 1) % 2 == 0 { 1 } else { -1 };
            (SimplicialComplex::from_facets(facets)?, chi, sphere(n - 1))
        }
        "cycle" => {
            let n = need(params.n, "n")?;
            if n < 3 {
                return Err(Error::InvalidParameter("cycle needs n ≥ 3".into()));
            }
            (cycle(n), 0, sphere(1))
        }
        "path" => {
            let n = need(params.n, "n")?;
            if n < 1 {
                return Err(Error::InvalidParameter("path needs n ≥ 1".into()));
            }
            let c = if n == 1 {
                SimplicialComplex::from_facets([[0]])?
            } else {
                SimplicialComplex::from_facets((0..n as Vertex - 1).map(|i| [i, i + 1]))?
            };
            let dim = if n == 1 { 0 } else { 1 };
            (c, 1, acyclic(dim))
        }
        "discrete" => {
            let n = need(params.n, "n")?;
            if n < 1 {
                return Err(Error::InvalidParameter("discrete needs n ≥ 1".into()));
            }
            let c = SimplicialComplex::from_facets((0..n as Vertex).map(|i| [i]))?;
            (c, n as i64, vec![(n - 1, vec![])])
        }
        "octahedron" => {
            let mut facets = Vec::new();
            for a in [0, 1] {
                for b in [2, 3] {
                    for c in [4, 5] {
                        facets.push([a, b, c]);
                    }
                }
            }
            (SimplicialComplex::from_facets(facets)?, 2, sphere(2))
        }
        "icosahedron" => (icosahedron(), 2, sphere(2)),
        "rp2_6" => (rp2_6()?, 1, moore_expected(2)),
        "rp2_flag" => (barycentric_subdivision(&rp2_6()?).complex, 1, moore_expected(2)),
        "moore" | "moore_flag" => {
            let q = need(params.q, "q")?;
            if q < 2 {
                return Err(Error::InvalidParameter("Moore space needs q ≥ 2".into()));
            }
            let m = moore(q)?;
            let c = if name == "moore" { m } else { barycentric_subdivision(&m).complex };
            (c, 1, moore_expected(q as u64))
        }
        "disk_flag" => {
            let facets: Vec<[Vertex; 3]> = (0..6).map(|i| [0, 1 + i, 1 + (i + 1) % 6]).collect();
            (SimplicialComplex::from_facets(facets)?, 1, acyclic(2))
        }
        "annulus_flag" => (annulus(false)?, 0, sphere(1).into_iter().chain([(0, vec![])]).collect()),
        "filled_annulus_flag" => (annulus(true)?, 1, acyclic(2)),
        _ => return Err(Error::UnknownFixture(name)),
    };
    let label = display_name(&name, params);
    self_check(&label, &complex, chi, &expected)?;
    Ok(complex.named(label))
}

fn display_name(name: &str, params: FixtureParams) -> String {
    match (params.n, params.q) {
        (Some(n), _) if needs_n(name) => format!("{name}({n})"),
        (_, Some(q)) if name.starts_with("moore") => format!("{name}({q})"),
        _ => name.to_string(),
    }
}

fn needs_n(name: &str) -> bool {
    matches!(name, "simplex" | "simplex_boundary" | "cycle" | "path" | "discrete")
}

fn parse_inline(name: &str, params: FixtureParams) -> Result<(String, FixtureParams)> {
    let Some(open) = name.find('(') else {
        return Ok((name.to_string(), params));
    };
    let base = &name[..open];
    let arg = name[open + 1..]
        .strip_suffix(')')
        .and_then(|a| a.trim().parse::<usize>().ok())
        .ok_or_else(|| Error::InvalidParameter(format!("cannot parse `{name}`")))?;
    let params = if base.starts_with("moore") {
        FixtureParams { q: Some(arg), ..params }
    } else {
        FixtureParams { n: Some(arg), ..params }
    };
    Ok((base.to_string(), params))
}

fn self_check(name: &str, c: &SimplicialComplex, chi: i64, expected: &Expected) -> Result<()> {
    let fail = |reason: String| Error::FixtureSelfCheck { name: name.to_string(), reason };
    if c.euler_characteristic() != chi {
        return Err(fail(format!("χ = {}, expected {chi}", c.euler_characteristic())));
    }
    let h = reduced_homology(c)?;
    let got: Expected = h
        .degrees
        .iter()
        .map(|d| {
            let tors = d.torsion.iter().map(|t| u64::try_from(t).unwrap_or(u64::MAX)).collect();
            (d.betti, tors)
        })
        .collect();
    if &got != expected {
        return Err(fail(format!("reduced homology {got:?}, expected {expected:?}")));
    }
    Ok(())
}

fn cycle(n: usize) -> SimplicialComplex {
    let n = n as Vertex;
    SimplicialComplex::from_facets((0..n).map(|i| {
        let j = (i + 1) % n;
        [i.min(j), i.max(j)]
    }))
    .expect("cycle facets")
}

/// Top vertex 0, upper ring 1..=5, lower ring 6..=10, bottom 11. Lower
/// vertex 6+i sits between upper vertices 1+i and 1+(i+1).
fn icosahedron() -> SimplicialComplex {
    let u = |i: u32| 1 + i % 5;
    let l = |i: u32| 6 + i % 5;
    let mut facets = Vec::new();
    for i in 0..5 {
        facets.push(vec![0, u(i), u(i + 1)]);
        facets.push(vec![u(i), u(i + 1), l(i)]);
        facets.push(vec![l(i), l(i + 1), u(i + 1)]);
        facets.push(vec![11, l(i), l(i + 1)]);
    }
    SimplicialComplex::from_facets(facets).expect("icosahedron facets")
}

/// Six-vertex RP² as the antipodal quotient of the icosahedron.
fn rp2_6() -> Result<SimplicialComplex> {
    // upper vertex 1+i is antipodal to lower vertex 6+(i+2)
    let mut map = vec![0; 12];
    for i in 0..5u32 {
        map[(1 + i) as usize] = 1 + i;
        map[(6 + (i + 2) % 5) as usize] = 1 + i;
    }
    simplicial_quotient(&icosahedron(), &VertexMap(map))
}

/// Disk with a 3q-gon boundary, one ring of interior vertices and a centre,
/// glued to a triangle by the rotation-induced degree-q map.
fn moore(q: usize) -> Result<SimplicialComplex> {
    let m = (3 * q) as Vertex;
    let b = |i: Vertex| i % m;
    let r = |i: Vertex| m + i % m;
    let centre = 2 * m;
    let mut facets = Vec::new();
    for i in 0..m {
        facets.push(vec![b(i), b(i + 1), r(i)]);
        facets.push(vec![r(i), r(i + 1), b(i + 1)]);
        facets.push(vec![centre, r(i), r(i + 1)]);
    }
    let disk = SimplicialComplex::from_facets(facets)?;
    let mut map = Vec::with_capacity(2 * m as usize + 1);
    map.extend((0..m).map(|i| i % 3));
    map.extend((0..m).map(|i| 3 + i));
    map.push(3 + m);
    simplicial_quotient(&disk, &VertexMap(map))
}

/// Hexagonal annulus: inner ring 0..6, outer ring 6..12; `filled` cones the
/// inner ring off at vertex 12, giving a disk containing the annulus.
fn annulus(filled: bool) -> Result<SimplicialComplex> {
    let a = |i: Vertex| i % 6;
    let b = |i: Vertex| 6 + i % 6;
    let mut facets = Vec::new();
    for i in 0..6 {
        facets.push(vec![a(i), a(i + 1), b(i)]);
        facets.push(vec![a(i + 1), b(i), b(i + 1)]);
        if filled {
            facets.push(vec![12, a(i), a(i + 1)]);
        }
    }
    SimplicialComplex::from_facets(facets)
}
