//! Section volumes of the unit cube and derivatives of `V/‖a‖`.

pub mod derivatives;
pub mod direction;
pub mod inequalities;
pub mod polya;
pub mod quadrature;
pub mod vertex;

pub use derivatives::{grad_sum, hessian_combo_sum, hessian_outside_sum};
pub use direction::{Direction, SectionQuery};
pub use inequalities::{scaled_trig_defect, sinc_power_integral, sinc_power_integrand, trig_defect};
pub use polya::{
    polya_estimate, polya_volume, q1_estimate, q1_integral, q2_estimate, q2_integral, Estimate,
    QuadratureConfig, TailMode,
};
pub use vertex::{
    subdiagonal_volume, subdiagonal_volume_exact, vertex_sum_exact, vertex_sum_float,
    vertex_sum_volume, CompensatedSum, EXACT_ACTIVE_LIMIT,
};
