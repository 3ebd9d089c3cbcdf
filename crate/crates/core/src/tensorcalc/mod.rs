//! The bimodule tensor calculus: tensor squares in left-normal form, the
//! generalized permutation sigma, covariant derivatives and their extension,
//! torsion and curvature.

mod connection;
mod curvature;
mod sigma;
mod tensor;

pub use connection::{constraint_residuals, cov_d1, cov_d2, standard_connection, Connection};
pub use curvature::{curvature_of, pi12_d2, CurvatureReport, ShapeDecomposition};
pub use sigma::{pi12, pi2, sigma12, sigma2, sigma23, sigma_matrix};
pub use tensor::{FormLetter, Mixed21, Tensor2, Tensor3};

pub(crate) use sigma::{pair_order, pair_slot};
