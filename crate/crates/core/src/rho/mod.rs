//! Critical zeros of the criterion polynomials and the dimension table.

pub mod closed;
pub mod reference;
pub mod solve;
pub mod table;

pub use closed::{
    assert_closed_forms, closed_form_checks, rho4_minus_closed, rho5_circ_closed,
    rho6_circ_closed, ClosedFormCheck,
};
pub use reference::{reference_row, relative_error, REFERENCE_LOW_ORDERS, REFERENCE_RHO_TABLE};
pub use solve::{closed_form_eps, solve_rho, table_eps, CertifiedRoot, RhoTriple};
pub use table::{format_sig6, table, TableRow};
