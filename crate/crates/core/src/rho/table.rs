//! Table of critical zeros over a range of dimensions.

use rayon::prelude::*;

use super::solve::{solve_rho, RhoTriple};
use crate::error::{Error, Result};
use crate::exactpoly::rational::Rational;

/// One row of the table, values rounded for display.
#[derive(Clone, Debug, PartialEq)]
pub struct TableRow {
    pub d: u32,
    pub rho_minus: f64,
    pub rho_circ: f64,
    pub rho_plus: f64,
    /// Which of `(ρ⁻, ρ∘, ρ⁺)` are known exactly.
    pub exact: [bool; 3],
    pub pattern_ok: bool,
}

impl TableRow {
    pub fn from_triple(t: &RhoTriple) -> Self {
        let (m, c, p) = t.values();
        TableRow {
            d: t.n,
            rho_minus: m,
            rho_circ: c,
            rho_plus: p,
            exact: [t.rho_minus.is_exact(), t.rho_circ.is_exact(), t.rho_plus.is_exact()],
            pattern_ok: t.pattern_ok,
        }
    }

    /// The three values formatted to six significant digits.
    pub fn formatted(&self) -> [String; 3] {
        [
            format_sig6(self.rho_minus),
            format_sig6(self.rho_circ),
            format_sig6(self.rho_plus),
        ]
    }
}

/// Six significant digits in fixed notation, e.g. `2.13730`, `10.0234`.
pub fn format_sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    let mut decimals = (5 - mag).max(0) as usize;
    let s = format!("{x:.decimals$}");
    // rounding can carry into a new leading digit (9.999996 → 10.00000)
    let rounded: f64 = s.parse().unwrap_or(x);
    if rounded.abs().log10().floor() as i32 > mag && decimals > 0 {
        decimals -= 1;
        return format!("{x:.decimals$}");
    }
    s
}

/// Solves every order in `d_min..=d_max` independently, in parallel, and
/// returns the outcomes in increasing order of `d`. A failing row does not
/// stop the others.
pub fn table(d_min: u32, d_max: u32, eps: &Rational) -> Result<Vec<(u32, Result<RhoTriple>)>> {
    if d_min < 4 || d_min > d_max {
        return Err(Error::domain(format!(
            "need 4 ≤ d_min ≤ d_max, got {d_min}..{d_max}"
        )));
    }
    let mut rows: Vec<(u32, Result<RhoTriple>)> = (d_min..=d_max)
        .into_par_iter()
        .map(|d| (d, solve_rho(d, eps)))
        .collect();
    rows.sort_by_key(|(d, _)| *d);
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_significant_digits() {
        assert_eq!(format_sig6(2.137296), "2.13730");
        assert_eq!(format_sig6(10.02344), "10.0234");
        assert_eq!(format_sig6(16.23101), "16.2310");
        assert_eq!(format_sig6(9.999996), "10.0000");
        assert_eq!(format_sig6(0.75), "0.750000");
    }

    #[test]
    fn small_table_rows_are_ordered() {
        let rows = table(4, 7, &super::super::solve::table_eps()).unwrap();
        assert_eq!(rows.iter().map(|r| r.0).collect::<Vec<_>>(), vec![4, 5, 6, 7]);
        let r5 = TableRow::from_triple(rows[1].1.as_ref().unwrap());
        assert_eq!(r5.exact, [true, false, true]);
        assert_eq!(r5.formatted(), ["2.00000".to_string(), "1.80902".into(), "1.00000".into()]);
        assert!(table(3, 5, &super::super::solve::table_eps()).is_err());
        assert!(table(9, 5, &super::super::solve::table_eps()).is_err());
    }
}
