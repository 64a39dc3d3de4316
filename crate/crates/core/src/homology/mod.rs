//! Exact homology: sparse boundary matrices, Smith normal form over the
//! integers, ranks over prime fields and the universal-coefficient checks.

mod chain;
mod eliminate;
mod kunneth;
mod matrix;
mod snf;
mod summary;

pub use chain::{simplicial_chain_complex, ChainComplexZ};
pub use kunneth::{join_betti_fp_kunneth, join_homology_kunneth, AbelianGroup};
pub use matrix::SparseIntMatrix;
pub use snf::{is_prime, prime_factors, rank_mod_p, smith_normal_form, SnfResult};
pub use summary::{
    betti_fp, homology, homology_z, reduced_homology, top_cohomology_nonzero, DegreeHomology, HomologySummary,
    TopCohomology, TopCohomologyReason,
};

/// Serializes big naturals as JSON numbers when they fit in u64, strings otherwise.
pub(crate) mod decimal_vec {
    use num_bigint::BigUint;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Small(u64),
        Big(String),
    }

    pub fn serialize<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        let reprs: Vec<Repr> = v
            .iter()
            .map(|x| u64::try_from(x).map_or_else(|_| Repr::Big(x.to_string()), Repr::Small))
            .collect();
        reprs.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        Vec::<Repr>::deserialize(d)?
            .into_iter()
            .map(|r| match r {
                Repr::Small(x) => Ok(BigUint::from(x)),
                Repr::Big(s) => s.parse().map_err(D::Error::custom),
            })
            .collect()
    }
}
