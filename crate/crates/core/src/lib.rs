//! Hyperplane sections of the unit cube `[-1/2, 1/2]^d`.
//!
//! - [`volume`]: section volumes by a vertex sum and by a sinc integral, plus
//!   the gradient and second-derivative sums of `V/‖a‖`.
//! - [`exactpoly`]: rational polynomials, Sturm chains and certified sign
//!   patterns.
//! - [`criterion`]: the piecewise polynomials `S1`, `S2` and the
//!   local-extremality decision at diagonals and sub-diagonals.
//! - [`rho`]: certified zeros `ρ⁺ < ρ∘ < ρ⁻` of `S1` and `S2`.
//!
//! ```
//! use cube_sections::volume::subdiagonal_volume;
//!
//! let v = subdiagonal_volume(2, 0.0).unwrap();
//! assert!((v - 2f64.sqrt()).abs() < 1e-12);
//! ```

pub mod criterion;
pub mod error;
pub mod exactpoly;
pub mod rho;
pub mod volume;

pub use error::{Error, Result};

#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/volumes.md")]
    mod volumes {}
    #[doc = include_str!("../../../book/src/exact-polynomials.md")]
    mod exact_polynomials {}
    #[doc = include_str!("../../../book/src/criteria.md")]
    mod criteria {}
    #[doc = include_str!("../../../book/src/critical-zeros.md")]
    mod critical_zeros {}
    #[doc = include_str!("../../../book/src/command-line.md")]
    mod command_line {}
}
