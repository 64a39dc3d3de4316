use serde::{Deserialize, Serialize};

use super::collapse::{collapse, CollapseSequence};
use crate::complex::{ComplexJson, SimplicialComplex, VertexMap};
use crate::error::Result;
use crate::homology::reduced_homology;

/// An embedding of L into a supercomplex L' of the same dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingWitness {
    pub supercomplex: SimplicialComplex,
    pub embedding: VertexMap,
}

#[derive(Serialize, Deserialize)]
struct WitnessJson {
    supercomplex: ComplexJson,
    embedding: VertexMap,
}

impl Serialize for EmbeddingWitness {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        WitnessJson { supercomplex: self.supercomplex.to_json(), embedding: self.embedding.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for EmbeddingWitness {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = WitnessJson::deserialize(d)?;
        let supercomplex = SimplicialComplex::from_json(&w.supercomplex).map_err(serde::de::Error::custom)?;
        Ok(EmbeddingWitness { supercomplex, embedding: w.embedding })
    }
}

impl EmbeddingWitness {
    pub fn from_json_str(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    /// Structural checks only: injective simplicial map into a complex of equal dimension.
    pub fn check_embedding(&self, l: &SimplicialComplex) -> Result<(), String> {
        let m = &self.embedding;
        if m.len() != l.vertex_count() {
            return Err(format!("embedding has {} entries for {} vertices", m.len(), l.vertex_count()));
        }
        if let Some(v) = m.0.iter().find(|&&v| v as usize >= self.supercomplex.vertex_count()) {
            return Err(format!("image vertex {v} is not a vertex of the supercomplex"));
        }
        if !m.is_injective() {
            return Err("embedding is not injective".into());
        }
        if let Some(f) = l.facets().iter().find(|f| m.image(f).is_none_or(|img| !self.supercomplex.contains(&img))) {
            return Err(format!("image of simplex {f} is not a simplex of the supercomplex"));
        }
        if self.supercomplex.dim() != l.dim() {
            return Err(format!("supercomplex has dimension {}, L has dimension {}", self.supercomplex.dim(), l.dim()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCheck {
    pub accepted: bool,
    pub reason: String,
    /// Set when the embedding itself is invalid, as opposed to contractibility being unverified.
    pub malformed: bool,
    pub collapse: Option<CollapseSequence>,
}

pub fn verify_witness(l: &SimplicialComplex, w: &EmbeddingWitness, budget: u64) -> WitnessCheck {
    if let Err(reason) = w.check_embedding(l) {
        return WitnessCheck { accepted: false, reason, malformed: true, collapse: None };
    }
    match collapse(&w.supercomplex, budget) {
        Some(seq) => WitnessCheck {
            accepted: true,
            reason: "supercomplex collapses to a point".into(),
            malformed: false,
            collapse: Some(seq),
        },
        None => {
            let mut reason = "contractibility unverified".to_string();
            if let Ok(h) = reduced_homology(&w.supercomplex) {
                if let Some(d) = h.degrees.iter().find(|d| !d.is_zero()) {
                    reason = format!("{reason}; supercomplex has H̃_{} = {}", d.degree, h.group_string(d.degree));
                }
            }
            WitnessCheck { accepted: false, reason, malformed: false, collapse: None }
        }
    }
}
