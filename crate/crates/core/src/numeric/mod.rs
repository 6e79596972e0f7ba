//! Scalar backends, kernels and parameter sets.

mod float;
pub mod kernel;
mod linalg;
mod params;
mod rational;
mod scalar;

pub use float::{format_c64, solve_linear};
pub use kernel::{
    delta, delta_prime, eval_kernel, f, g, h, recip_f, reciprocal_f_product, set_product, t,
    vandermonde, Kernel, Vandermonde,
};
pub use linalg::bareiss_determinant;
pub use num_complex::Complex64;
pub use params::ParamSet;
pub(crate) use params::{concat, shift_all};
pub use rational::QComplex;
pub use scalar::{Backend, Scalar, FLOAT_ABS_FLOOR, FLOAT_REL_TOL};
