//! Combinatorial models attached to a RAAG: the poset complex with its
//! torus-fiber labelling, the Salvetti cube complex, its finite abelian
//! covers, and mod-p homology growth along chains of such covers.

mod cube;
mod growth;
mod poset;
mod quotient;

pub use cube::{finite_cover, salvetti_complex, CubeCell, CubeComplex, CubeSummary};
pub use growth::{growth_experiment, ExactFamily, GrowthRow, GrowthSeries, NON_RESIDUAL_CAVEAT};
pub use poset::{davis_poset_complex, euler_characteristic_xl, fiber_dimension, PosetComplexK};
pub use quotient::FiniteQuotientSpec;
