//! Exact computation of `Hom_S(Δ(λ), Δ(μ))` between Weyl modules of the Schur
//! algebra over a prime field, plus tools for checking the row-stabilization
//! isomorphism and an independent symmetric-group cross-check.

pub mod cli;
pub mod combinat;
pub mod error;
pub mod gfp;
pub mod homspace;
pub mod polyalg;
pub mod shapes;
pub mod specht_oracle;
pub mod tableaux;
pub mod weyl;

pub use error::{Error, Result};
pub use gfp::{binom_mod, PrimeField, SparseMatrix};
pub use homspace::{
    hom_dim, phi_eval, phi_expand, relation_matrix, stabilize_hom, verify_stabilization,
    HomElement, HomSpace, StabilizationReport,
};
pub use shapes::{Composition, Partition};
pub use tableaux::{enumerate_standard, Tableau};
pub use weyl::{Limits, WeylModule};
