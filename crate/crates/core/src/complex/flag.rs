use super::{Simplex, SimplicialComplex, Vertex};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagCheck {
    pub is_flag: bool,
    /// A minimal non-face whose vertices are pairwise adjacent.
    pub witness: Option<Simplex>,
}

/// Maximal cliques of a graph given by sorted adjacency lists, in canonical order.
pub(crate) fn maximal_cliques(adj: &[Vec<Vertex>]) -> Vec<Simplex> {
    let mut out = Vec::new();
    let all: Vec<Vertex> = (0..adj.len() as Vertex).collect();
    bron_kerbosch(adj, &mut Vec::new(), all, Vec::new(), &mut out);
    out.sort_unstable();
    out
}

fn intersect(a: &[Vertex], b: &[Vertex]) -> Vec<Vertex> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn bron_kerbosch(
    adj: &[Vec<Vertex>],
    r: &mut Vec<Vertex>,
    p: Vec<Vertex>,
    mut x: Vec<Vertex>,
    out: &mut Vec<Simplex>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(Simplex::new(r.iter().copied()).expect("clique vertices distinct"));
        }
        return;
    }
    // pivot on the vertex of P ∪ X with most neighbours in P
    let pivot = p
        .iter()
        .chain(x.iter())
        .copied()
        .max_by_key(|&u| (intersect(&adj[u as usize], &p).len(), std::cmp::Reverse(u)))
        .expect("P nonempty");
    let candidates: Vec<Vertex> = p
        .iter()
        .copied()
        .filter(|v| adj[pivot as usize].binary_search(v).is_err())
        .collect();
    let mut p = p;
    for v in candidates {
        let nv = &adj[v as usize];
        r.push(v);
        bron_kerbosch(adj, r, intersect(&p, nv), intersect(&x, nv), out);
        r.pop();
        p.retain(|&w| w != v);
        let pos = x.binary_search(&v).unwrap_or_else(|e| e);
        x.insert(pos, v);
    }
}

/// Checks that every clique of the 1-skeleton spans a simplex.
pub fn is_flag(complex: &SimplicialComplex) -> FlagCheck {
    let adj = complex.neighbors();
    for clique in maximal_cliques(&adj) {
        if complex.contains(&clique) {
            continue;
        }
        // shrink to a minimal non-face; every 2-subset is an edge so size stays ≥ 3
        let mut s = clique;
        'shrink: loop {
            for i in 0..s.len() {
                let t = s.without_index(i);
                if !complex.contains(&t) {
                    s = t;
                    continue 'shrink;
                }
            }
            break;
        }
        return FlagCheck { is_flag: false, witness: Some(s) };
    }
    FlagCheck { is_flag: true, witness: None }
}

pub(crate) fn require_flag(complex: &SimplicialComplex) -> Result<()> {
    match is_flag(complex).witness {
        None => Ok(()),
        Some(w) => Err(Error::NotFlag { witness: w.vertices().to_vec() }),
    }
}

/// Clique complex of a graph.
pub fn flag_completion(graph: &SimplicialComplex) -> Result<SimplicialComplex> {
    if graph.dim() > 1 {
        return Err(Error::Precondition(format!(
            "flag completion takes a graph, got a complex of dimension {}",
            graph.dim()
        )));
    }
    let cliques = maximal_cliques(&graph.neighbors());
    Ok(SimplicialComplex::from_simplices(graph.vertex_count(), cliques))
}
