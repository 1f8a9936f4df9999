//! Closed-form expressions for the low-order zeros, checked against the
//! certified solver.

use super::solve::{closed_form_eps, solve_rho};
use crate::error::{Error, Result};
use crate::exactpoly::rational::{int, rat, to_f64, Rational};

/// `(17 + ∛(17 − 12√2) + ∛(17 + 12√2)) / 12`.
pub fn rho4_minus_closed() -> f64 {
    let r2 = 2f64.sqrt();
    (17.0 + (17.0 - 12.0 * r2).cbrt() + (17.0 + 12.0 * r2).cbrt()) / 12.0
}

/// `(5 + √5) / 4`.
pub fn rho5_circ_closed() -> f64 {
    (5.0 + 5f64.sqrt()) / 4.0
}

/// `12/5 − (3/5) cos(θ) + (3√3/5) sin(θ)` with `θ = arctan(5√11/7)/3`.
pub fn rho6_circ_closed() -> f64 {
    let theta = (5.0 * 11f64.sqrt() / 7.0).atan() / 3.0;
    12.0 / 5.0 - 0.6 * theta.cos() + 0.6 * 3f64.sqrt() * theta.sin()
}

/// One comparison between a closed form and the solver.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedFormCheck {
    pub name: &'static str,
    pub expected: f64,
    pub computed: f64,
    /// Set when the expected value is rational and compared exactly.
    pub exact_expected: Option<Rational>,
    pub exact_computed: Option<Rational>,
    pub abs_error: f64,
    pub ok: bool,
}

fn numeric(name: &'static str, expected: f64, computed: f64, tol: f64) -> ClosedFormCheck {
    let abs_error = (expected - computed).abs();
    ClosedFormCheck {
        name,
        expected,
        computed,
        exact_expected: None,
        exact_computed: None,
        abs_error,
        ok: abs_error <= tol,
    }
}

fn exact(name: &'static str, expected: Rational, computed: Option<&Rational>, approx: f64) -> ClosedFormCheck {
    let ok = computed == Some(&expected);
    ClosedFormCheck {
        name,
        expected: to_f64(&expected),
        computed: approx,
        abs_error: (to_f64(&expected) - approx).abs(),
        exact_expected: Some(expected),
        exact_computed: computed.cloned(),
        ok,
    }
}

/// Compares the solver against every known closed form: exact equality for
/// rational zeros, absolute error `1e-12` for the irrational ones.
pub fn closed_form_checks() -> Result<Vec<ClosedFormCheck>> {
    let eps = closed_form_eps();
    let tol = 1e-12;
    let r4 = solve_rho(4, &eps)?;
    let r5 = solve_rho(5, &eps)?;
    let r6 = solve_rho(6, &eps)?;
    Ok(vec![
        exact("rho4_plus", rat(3, 4), r4.rho_plus.exact(), r4.rho_plus.value_f64()),
        exact("rho4_circ", rat(4, 3), r4.rho_circ.exact(), r4.rho_circ.value_f64()),
        numeric("rho4_minus", rho4_minus_closed(), r4.rho_minus.value_f64(), tol),
        exact("rho5_plus", int(1), r5.rho_plus.exact(), r5.rho_plus.value_f64()),
        exact("rho5_minus", int(2), r5.rho_minus.exact(), r5.rho_minus.value_f64()),
        numeric("rho5_circ", rho5_circ_closed(), r5.rho_circ.value_f64(), tol),
        numeric("rho6_circ", rho6_circ_closed(), r6.rho_circ.value_f64(), tol),
    ])
}

/// Like [`closed_form_checks`], but any mismatch is an error.
pub fn assert_closed_forms() -> Result<Vec<ClosedFormCheck>> {
    let checks = closed_form_checks()?;
    if let Some(bad) = checks.iter().find(|c| !c.ok) {
        return Err(Error::domain(format!(
            "closed form {} = {} disagrees with solver value {}",
            bad.name, bad.expected, bad.computed
        )));
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_values() {
        assert!((rho4_minus_closed() - 1.71229).abs() < 1e-5);
        assert!((rho5_circ_closed() - 1.80902).abs() < 1e-5);
        assert!((rho6_circ_closed() - 2.2407).abs() < 1e-4);
    }

    #[test]
    fn all_closed_forms_match() {
        for c in assert_closed_forms().unwrap() {
            assert!(c.ok, "{c:?}");
        }
    }
}
