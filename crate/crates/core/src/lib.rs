//! Exact symbolic kernel for the differential calculus of the two-parameter
//! quantum plane.
//!
//! The crate normalizes noncommutative expressions in the generators
//! x, y, xi = dx, eta = dy over an exact field of rational functions in the
//! deformation parameters, constructs the generalized permutation sigma and
//! covariant derivatives, solves for the space of linear connections, and
//! computes torsion and curvature. Every identity is checked with exact
//! arithmetic: a residual is either the zero normal form or a counterexample.
//!
//! Modules:
//! - [`scalars`]: the coefficient field (reduced rational functions in q, p).
//! - [`qalgebra`]: the normal-form rewriting engine and the R-matrix.
//! - [`tensorcalc`]: tensor squares over the algebra, sigma, covariant
//!   derivatives, torsion and curvature.
//! - [`connsolve`]: the exact linear solver classifying all connections.
//! - [`verify`]: named verification suites with serializable evidence.
//! - [`expr`]: the shared text syntax (parser and canonical printer).

pub mod connsolve;
pub mod error;
pub mod expr;
pub mod qalgebra;
pub mod scalars;
pub mod tensorcalc;
pub mod verify;

pub use error::{Error, Result};
pub use expr::{parse_expression, ParsedExpr};
pub use qalgebra::{rewrite_pair, AlgElement, GenWord, Generator, RMatrix};
pub use scalars::{lock_parameters, LaurentPoly, ParamMode, ScalarRF};
pub use tensorcalc::{
    cov_d1, cov_d2, curvature_of, pi12, pi2, sigma12, sigma2, sigma23, standard_connection,
    Connection, CurvatureReport, FormLetter, Mixed21, ShapeDecomposition, Tensor2, Tensor3,
};
pub use connsolve::{
    assemble_system, build_ansatz, classify_connections, solve_system, Ansatz, AnsatzTerm,
    ClassificationReport, LinearSystem, SolutionSpace,
};
pub use verify::{CheckDetail, CheckResult, CheckStatus};
