//! Certified zeros of the criterion polynomials.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::criterion::{build_s1, build_s2};
use crate::error::{Error, Result};
use crate::exactpoly::rational::{pow10_neg, to_f64, Rational};
use crate::exactpoly::{sign_changes, sign_pattern, RealPoint, SignRun};

/// A root located either exactly or inside a refined isolating interval.
#[derive(Clone, Debug)]
pub struct CertifiedRoot {
    point: RealPoint,
}

impl CertifiedRoot {
    fn new(point: RealPoint, eps: &Rational) -> Self {
        let point = match point {
            RealPoint::Algebraic(iv) => RealPoint::Algebraic(iv.refine(eps)),
            p => p,
        };
        CertifiedRoot { point }
    }

    pub fn point(&self) -> &RealPoint {
        &self.point
    }

    /// The root when it is rational.
    pub fn exact(&self) -> Option<&Rational> {
        self.point.exact_value()
    }

    pub fn is_exact(&self) -> bool {
        self.exact().is_some()
    }

    /// Exact value, or the midpoint of the refined interval.
    pub fn value(&self) -> Rational {
        match &self.point {
            RealPoint::Exact(r) => r.clone(),
            RealPoint::Algebraic(iv) => iv.value(),
        }
    }

    pub fn value_f64(&self) -> f64 {
        to_f64(&self.value())
    }

    /// Closed rational enclosure of the root.
    pub fn bounds(&self) -> (Rational, Rational) {
        self.point.bounds()
    }

    /// Width of the enclosure (zero for exact roots).
    pub fn width(&self) -> Rational {
        let (lo, hi) = self.bounds();
        hi - lo
    }
}

/// The three critical zeros for one order `n`.
#[derive(Clone, Debug)]
pub struct RhoTriple {
    pub n: u32,
    pub rho_minus: CertifiedRoot,
    pub rho_circ: CertifiedRoot,
    pub rho_plus: CertifiedRoot,
    /// True when the change directions are as expected and
    /// `0 < ρ⁺ < ρ∘ < ρ⁻ < n/2` is certified.
    pub pattern_ok: bool,
    pub s1_pattern: Vec<SignRun>,
    pub s2_pattern: Vec<SignRun>,
}

impl RhoTriple {
    /// `(ρ⁻, ρ∘, ρ⁺)` as floats.
    pub fn values(&self) -> (f64, f64, f64) {
        (
            self.rho_minus.value_f64(),
            self.rho_circ.value_f64(),
            self.rho_plus.value_f64(),
        )
    }
}

/// Default refinement width for table output.
pub fn table_eps() -> Rational {
    pow10_neg(8)
}

/// Default refinement width for closed-form comparisons.
pub fn closed_form_eps() -> Rational {
    pow10_neg(12)
}

/// Locates `ρ⁺ < ρ⁻` (sign changes of S1) and `ρ∘` (sign change of S2) on
/// `(0, n/2]` and refines each to width `eps`.
///
/// Fails with [`Error::PatternViolation`] when S1 does not change sign
/// exactly twice or S2 exactly once.
pub fn solve_rho(n: u32, eps: &Rational) -> Result<RhoTriple> {
    if n < 4 {
        return Err(Error::domain(format!("order n = {n} must be at least 4")));
    }
    if !eps.is_positive() {
        return Err(Error::domain("eps must be positive"));
    }
    let s1 = sign_pattern(&build_s1(n)?)?;
    let s2 = sign_pattern(&build_s2(n)?)?;
    let c1 = sign_changes(&s1);
    let c2 = sign_changes(&s2);
    if c1.len() != 2 || c2.len() != 1 {
        return Err(Error::PatternViolation {
            n,
            detail: format!(
                "expected 2 sign changes of S1 and 1 of S2, found {} and {}",
                c1.len(),
                c2.len()
            ),
            s1,
            s2,
        });
    }
    let directions_ok = (c1[0].1, c1[0].2) == (-1, 1) && (c1[1].1, c1[1].2) == (1, -1) && (c2[0].1, c2[0].2) == (1, -1);
    let rho_plus = CertifiedRoot::new(c1[0].0.clone(), eps);
    let rho_minus = CertifiedRoot::new(c1[1].0.clone(), eps);
    let rho_circ = CertifiedRoot::new(c2[0].0.clone(), eps);
    let ordered = strictly_less(&rho_plus, &rho_circ) && strictly_less(&rho_circ, &rho_minus);
    Ok(RhoTriple {
        n,
        rho_minus,
        rho_circ,
        rho_plus,
        pattern_ok: directions_ok && ordered,
        s1_pattern: s1,
        s2_pattern: s2,
    })
}

/// Certified `a < b`, refining both enclosures while they overlap.
fn strictly_less(a: &CertifiedRoot, b: &CertifiedRoot) -> bool {
    let mut a = a.clone();
    let mut b = b.clone();
    let floor = Rational::new(BigInt::one(), BigInt::one() << 256usize);
    loop {
        match compare(&a, &b) {
            Some(o) => return o == Ordering::Less,
            None => {
                let w = a.width().max(b.width()) / Rational::from_integer(BigInt::from(1024));
                if w < floor {
                    return false;
                }
                a = CertifiedRoot::new(a.point.clone(), &w);
                b = CertifiedRoot::new(b.point.clone(), &w);
            }
        }
    }
}

fn compare(a: &CertifiedRoot, b: &CertifiedRoot) -> Option<Ordering> {
    let (alo, ahi) = a.bounds();
    let (blo, bhi) = b.bounds();
    if ahi < blo {
        Some(Ordering::Less)
    } else if bhi < alo {
        Some(Ordering::Greater)
    } else if alo == ahi && blo == bhi {
        Some(alo.cmp(&blo))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rational::{int, rat};

    #[test]
    fn order_four_roots() {
        let r = solve_rho(4, &closed_form_eps()).unwrap();
        assert!(r.pattern_ok);
        assert_eq!(r.rho_plus.exact(), Some(&rat(3, 4)));
        assert_eq!(r.rho_circ.exact(), Some(&rat(4, 3)));
        assert!(r.rho_minus.exact().is_none());
        assert!((r.rho_minus.value_f64() - 1.71229).abs() < 1e-5);
        assert!(r.rho_minus.width() <= closed_form_eps());
    }

    #[test]
    fn order_five_roots_sit_on_breakpoints() {
        let r = solve_rho(5, &closed_form_eps()).unwrap();
        assert!(r.pattern_ok);
        assert_eq!(r.rho_plus.exact(), Some(&int(1)));
        assert_eq!(r.rho_minus.exact(), Some(&int(2)));
        assert!((r.rho_circ.value_f64() - 1.80902).abs() < 1e-5);
    }

    #[test]
    fn order_six_and_seven() {
        let r6 = solve_rho(6, &table_eps()).unwrap();
        assert!((r6.rho_plus.value_f64() - 1.39766).abs() < 1e-5);
        assert!((r6.rho_minus.value_f64() - 2.46963).abs() < 1e-5);
        let r7 = solve_rho(7, &table_eps()).unwrap();
        assert!((r7.rho_plus.value_f64() - 1.77221).abs() < 1e-5);
        assert!((r7.rho_minus.value_f64() - 2.9324).abs() < 1e-4);
        assert!((r7.rho_circ.value_f64() - 2.69068).abs() < 1e-5);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(solve_rho(3, &table_eps()).is_err());
        assert!(solve_rho(6, &int(0)).is_err());
    }
}
