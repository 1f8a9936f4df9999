//! Elementary trigonometric inequalities behind the sign of the second
//! derivatives near the center.

use std::f64::consts::PI;

use super::polya::Estimate;
use super::quadrature::GaussRule;

/// `(1 − cos 2s)/s² − sin(2s)/(2s) − 1`, negative for every `s > 0`.
///
/// Small arguments use the series `−Σ_{i≥2} (−1)^i (2i−2)/(2i+2)! (2s)^{2i}`
/// to avoid cancellation.
pub fn trig_defect(s: f64) -> f64 {
    if s.abs() < 0.5 {
        let x2 = 4.0 * s * s;
        let mut pow = x2 * x2;
        // 1/(2i+2)! for i = 2
        let mut inv_fact = 1.0 / 720.0;
        let mut total = 0.0;
        for i in 2..30u32 {
            let sign = if i % 2 == 0 { -1.0 } else { 1.0 };
            total += sign * f64::from(2 * i - 2) * inv_fact * pow;
            pow *= x2;
            inv_fact /= f64::from((2 * i + 3) * (2 * i + 4));
        }
        return total;
    }
    (1.0 - (2.0 * s).cos()) / (s * s) - (2.0 * s).sin() / (2.0 * s) - 1.0
}

/// `(1 − cos 2s)/s^n − sin(2s)/(2s^{n−1}) − 1/s^{n−2}`, strictly increasing
/// in `s > 0` for `n ≥ 6` and in `s > 4` for `n = 5`.
pub fn scaled_trig_defect(n: u32, s: f64) -> f64 {
    trig_defect(s) / s.powi(n as i32 - 2)
}

/// The integrand `2 sin⁵(s)/s⁵ − cos(s) sin⁴(s)/s⁴ − sin³(s)/s³`.
pub fn sinc_power_integrand(s: f64) -> f64 {
    let sc = if s.abs() < 1e-8 { 1.0 } else { s.sin() / s };
    let sc3 = sc * sc * sc;
    sc3 * (2.0 * sc * sc - s.cos() * sc - 1.0)
}

/// `∫_0^{2π}` of [`sinc_power_integrand`], which is negative.
pub fn sinc_power_integral() -> Estimate {
    let (value, error) = GaussRule::new(16).integrate(&sinc_power_integrand, 2.0 * PI, PI / 32.0);
    Estimate { value, error }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_matches_closed_form() {
        for s in [0.3f64, 0.45, 0.49] {
            let direct = (1.0 - (2.0 * s).cos()) / (s * s) - (2.0 * s).sin() / (2.0 * s) - 1.0;
            assert!((trig_defect(s) - direct).abs() < 1e-13);
        }
        assert!(trig_defect(1e-4) < 0.0);
    }

    #[test]
    fn integral_is_negative() {
        let e = sinc_power_integral();
        assert!(e.value < 0.0 && e.error < 1e-8, "{e:?}");
    }
}
