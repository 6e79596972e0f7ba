pub mod bethe;
pub mod chain;
pub mod cli;
pub mod dwpf;
pub mod error;
pub mod form_factor;
pub mod numeric;
pub mod parallel;
pub mod partitions;
pub mod random;
pub mod report;
pub mod scalar_product;

pub use error::{Error, Result};
pub use report::Report;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/kernels.md")]
    mod kernels {}
    #[doc = include_str!("../../../book/src/dwpf.md")]
    mod dwpf {}
    #[doc = include_str!("../../../book/src/bethe.md")]
    mod bethe {}
    #[doc = include_str!("../../../book/src/scalar_product.md")]
    mod scalar_product {}
    #[doc = include_str!("../../../book/src/form_factors.md")]
    mod form_factors {}
    #[doc = include_str!("../../../book/src/chain.md")]
    mod chain {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/conventions.md")]
    mod conventions {}
}
