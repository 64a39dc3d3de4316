use std::fmt::Write as _;
use std::io::Write;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{finite_cover, FiniteQuotientSpec};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homology::{betti_fp, is_prime, simplicial_chain_complex};

pub const NON_RESIDUAL_CAVEAT: &str = "caveat: chains of abelian quotients are not residual when A_L is \
nonabelian (their intersection contains the commutator subgroup); ratios are reported descriptively and \
convergence is asserted only for the exactly computable families";

/// Flag complexes whose RAAG is a product of free groups, L = D_1 ∗ … ∗ D_m
/// with each D_j discrete. Covers whose deck group splits along the factors
/// are products of graph covers, so their Betti numbers are known exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactFamily {
    /// Vertex classes of the factors (non-adjacency classes).
    pub parts: Vec<Vec<u32>>,
}

impl ExactFamily {
    /// Recognizes L as a join of discrete sets: non-adjacency must be an
    /// equivalence relation and L must be the clique complex of its graph.
    pub fn detect(l: &SimplicialComplex) -> Option<ExactFamily> {
        if l.is_empty() || !crate::complex::is_flag(l).is_flag {
            return None;
        }
        let adj = l.neighbors();
        let n = l.vertex_count();
        let mut class = vec![usize::MAX; n];
        let mut parts: Vec<Vec<u32>> = Vec::new();
        for v in 0..n {
            if class[v] != usize::MAX {
                continue;
            }
            let part: Vec<u32> = (0..n as u32).filter(|&w| w as usize == v || adj[v].binary_search(&w).is_err()).collect();
            for &w in &part {
                if class[w as usize] != usize::MAX {
                    return None;
                }
                class[w as usize] = parts.len();
            }
            parts.push(part);
        }
        // every pair in a part must be non-adjacent, every cross pair adjacent
        for v in 0..n {
            for w in v + 1..n {
                let adjacent = adj[v].binary_search(&(w as u32)).is_ok();
                if adjacent == (class[v] == class[w]) {
                    return None;
                }
            }
        }
        Some(ExactFamily { parts })
    }

    /// Exact F_p Betti numbers of the cover, or `None` if the deck group
    /// does not split along the free factors.
    pub fn predicted_betti(&self, spec: &FiniteQuotientSpec) -> Option<Vec<usize>> {
        let total = spec.index();
        let orders: Vec<u64> = self
            .parts
            .iter()
            .map(|p| spec.generated_subgroup(p.iter().map(|&v| v as usize)).len() as u64)
            .collect();
        if orders.iter().product::<u64>() != total {
            return None;
        }
        // Poincaré polynomial Π_j (1 + (|Q_j|(n_j − 1) + 1) t)
        let mut poly = vec![1usize];
        for (part, &q) in self.parts.iter().zip(&orders) {
            let b1 = (q as usize) * (part.len() - 1) + 1;
            let mut next = vec![0; poly.len() + 1];
            for (i, &c) in poly.iter().enumerate() {
                next[i] += c;
                next[i + 1] += c * b1;
            }
            poly = next;
        }
        Some(poly)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthRow {
    pub spec: FiniteQuotientSpec,
    pub index: u64,
    /// b_i(cover; F_p) for i = 0..=dim L + 1.
    pub betti: Vec<usize>,
    /// betti / index, exact.
    pub ratios: Vec<Ratio<i64>>,
    /// Exact Betti numbers when the cover belongs to a computable family.
    pub predicted: Option<Vec<usize>>,
}

impl GrowthRow {
    pub fn exact_match(&self) -> Option<bool> {
        self.predicted.as_ref().map(|p| *p == self.betti)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthSeries {
    pub prime: u64,
    pub rows: Vec<GrowthRow>,
    /// `reference[i]` = reduced b_{i−1}(L; F_p), the limit predicted for degree i.
    pub reference: Vec<usize>,
    pub family: Option<ExactFamily>,
    /// Alternating sum of the reference values, equal to 1 − χ(L).
    pub reference_euler: i64,
}

/// Computes mod-p Betti numbers of each cover in the chain.
pub fn growth_experiment(l: &SimplicialComplex, p: u64, chain: &[FiniteQuotientSpec]) -> Result<GrowthSeries> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let indices: Vec<u64> = chain.iter().map(FiniteQuotientSpec::index).collect();
    if indices.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Precondition(format!("covers must be ordered by increasing index, got {indices:?}")));
    }
    let reduced = betti_fp(&simplicial_chain_complex(l, true), p)?;
    let reference: Vec<usize> = std::iter::once(0).chain(reduced).collect();
    let family = ExactFamily::detect(l);

    let rows = chain
        .par_iter()
        .map(|spec| {
            let cover = finite_cover(l, spec)?;
            let betti = betti_fp(&cover.chain_complex(), p)?;
            let index = cover.index();
            let ratios = betti.iter().map(|&b| Ratio::new(b as i64, index as i64)).collect();
            let predicted = family.as_ref().and_then(|f| f.predicted_betti(spec));
            Ok(GrowthRow { spec: spec.clone(), index, betti, ratios, predicted })
        })
        .collect::<Result<Vec<_>>>()?;
    let reference_euler = crate::complex::alternating_sum(&reference);
    Ok(GrowthSeries { prime: p, rows, reference, family, reference_euler })
}

impl GrowthSeries {
    /// Rows in the column layout (modulus_vector, index, degree, betti,
    /// ratio_num, ratio_den, reference).
    pub fn write_csv(&self, out: impl Write) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["modulus_vector", "index", "degree", "betti", "ratio_num", "ratio_den", "reference"])?;
        for row in &self.rows {
            for (i, (b, r)) in row.betti.iter().zip(&row.ratios).enumerate() {
                w.write_record([
                    row.spec.describe(),
                    row.index.to_string(),
                    i.to_string(),
                    b.to_string(),
                    r.numer().to_string(),
                    r.denom().to_string(),
                    self.reference[i].to_string(),
                ])?;
            }
        }
        w.flush()?;
        Ok(())
    }

    pub fn render_report(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "mod-{} homology growth over {} cover(s)", self.prime, self.rows.len());
        let refs: Vec<String> = self.reference.iter().enumerate().map(|(i, r)| format!("deg {i}: {r}")).collect();
        let _ = writeln!(s, "reference reduced Betti numbers of L (shifted by one): {}", refs.join(", "));
        for row in &self.rows {
            let ratios: Vec<String> = row.ratios.iter().map(ToString::to_string).collect();
            let status = match row.exact_match() {
                Some(true) => "EXACT match",
                Some(false) => "EXACT MISMATCH",
                None => "no closed form",
            };
            let _ = writeln!(
                s,
                "  moduli {:<10} index {:>6}  betti {:?}  ratios [{}]  {status}",
                row.spec.describe(),
                row.index,
                row.betti,
                ratios.join(", ")
            );
        }
        match &self.family {
            Some(f) => {
                let _ = writeln!(s, "L is a join of {} discrete set(s): A_L is a product of free groups", f.parts.len());
            }
            None => {
                let _ = writeln!(s, "no closed form for this L; no convergence claim is made");
            }
        }
        let _ = writeln!(s, "{NON_RESIDUAL_CAVEAT}");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Vertex;

    fn sc(f: &[&[Vertex]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(f.iter().copied()).unwrap()
    }

    #[test]
    fn detects_products_of_free_groups() {
        assert_eq!(ExactFamily::detect(&sc(&[&[0], &[1], &[2]])).unwrap().parts.len(), 1);
        let c4 = sc(&[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]);
        assert_eq!(ExactFamily::detect(&c4).unwrap().parts, vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(ExactFamily::detect(&sc(&[&[0, 1, 2]])).unwrap().parts.len(), 3);
        assert!(ExactFamily::detect(&sc(&[&[0, 1], &[1, 2]])).is_some());
        assert!(ExactFamily::detect(&sc(&[&[0, 1], &[1, 2], &[2, 3]])).is_none());
    }

    #[test]
    fn wedge_prediction() {
        let f = ExactFamily::detect(&sc(&[&[0], &[1]])).unwrap();
        assert_eq!(f.predicted_betti(&FiniteQuotientSpec::uniform(2, 3)), Some(vec![1, 10]));
    }

    #[test]
    fn rejects_unordered_chain_and_composite_prime() {
        let l = sc(&[&[0], &[1]]);
        let chain = [FiniteQuotientSpec::uniform(2, 3), FiniteQuotientSpec::uniform(2, 2)];
        assert!(matches!(growth_experiment(&l, 2, &chain), Err(Error::Precondition(_))));
        assert!(matches!(growth_experiment(&l, 6, &chain[..1]), Err(Error::NotPrime(6))));
    }

    #[test]
    fn csv_layout() {
        let l = sc(&[&[0], &[1]]);
        let g = growth_experiment(&l, 2, &[FiniteQuotientSpec::uniform(2, 2)]).unwrap();
        let mut buf = Vec::new();
        g.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "modulus_vector,index,degree,betti,ratio_num,ratio_den,reference");
        assert_eq!(lines[1], "2;2,4,0,1,1,4,0");
        assert_eq!(lines[2], "2;2,4,1,5,5,4,1");
        assert!(g.render_report().contains("caveat"));
    }
}
