//! Form factors of the off-diagonal monodromy entries.
//!
//! Two independent evaluation paths exist: partition sums over scalar
//! products ([`ff_brute`]) and the determinant formulas ([`ff_det`]). The
//! reflection and transposition maps relate the entries to each other.

mod brute;
mod det;
mod jacobian;
mod mapping;
mod omega;
mod problem;
mod suite;

pub use brute::{act12_terms, ff_brute};
pub use det::{det_matrices, ff_det, ff_det_direct, DetMatrices};
pub use jacobian::jacobian_check;
pub use mapping::{map_phi, map_psi};
pub use omega::{omega2_ext_col, omega_split};
pub use problem::{Entry, FFProblem};
pub use suite::{check_jacobian, check_mapping_coherence, check_omega, check_oracle_equivalence, check_reordering};

#[cfg(test)]
mod tests;
