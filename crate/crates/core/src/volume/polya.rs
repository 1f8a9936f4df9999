//! Section volume and second-derivative combinations as improper integrals
//! of sinc products.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::direction::SectionQuery;
use super::quadrature::{ExpSum, GaussRule};
use super::vertex::check_active;
use crate::error::{Error, Result};

/// How the integral beyond the cutoff `U` is handled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TailMode {
    /// Expand the integrand into `Σ c_k e^{iω_k u} / u^m` and integrate
    /// each term along a rotated path.
    Exact,
    /// Drop the tail and charge its envelope bound to the error estimate.
    Truncate,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    /// Largest admissible cutoff `U`.
    pub max_truncation: f64,
    /// Order of the Gauss–Legendre rule used on each panel.
    pub panel_rule: usize,
    /// Panel width; `None` picks `π / (4 ω_max)` from the fastest frequency.
    pub panel_width: Option<f64>,
    pub tail: TailMode,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            abs_tol: 1e-10,
            max_truncation: 1e4,
            panel_rule: 16,
            panel_width: None,
            tail: TailMode::Exact,
        }
    }
}

impl QuadratureConfig {
    // NaN fails every comparison below
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0) {
            return Err(Error::domain("abs_tol must be positive"));
        }
        if !(self.max_truncation > 0.0) {
            return Err(Error::domain("max_truncation must be positive"));
        }
        if !(4..=128).contains(&self.panel_rule) {
            return Err(Error::domain("panel_rule must lie in 4..=128"));
        }
        if let Some(w) = self.panel_width {
            if !(w > 0.0) {
                return Err(Error::domain("panel_width must be positive"));
            }
        }
        Ok(())
    }
}

/// A value with its estimated absolute error.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

/// `∫_0^∞ f` for an integrand that, beyond the cutoff, equals
/// `Σ_j Re(tails_j(u)) / u^{m_j}`.
struct Oscillatory<'a, F> {
    f: F,
    tails: &'a [(ExpSum, u32)],
    /// `∫_U^∞ |f|` bound, used in truncation mode.
    envelope: &'a dyn Fn(f64) -> f64,
    freq_max: f64,
    freq_min: f64,
}

impl<F: Fn(f64) -> f64> Oscillatory<'_, F> {
    fn integrate(&self, cfg: &QuadratureConfig, scale: f64) -> Result<Estimate> {
        cfg.validate()?;
        let rule = GaussRule::new(cfg.panel_rule);
        let width = cfg.panel_width.unwrap_or(PI / (4.0 * self.freq_max));
        let base = (4.0 * PI / self.freq_min).max(4.0);
        let (cut, tail_value, tail_err) = match cfg.tail {
            TailMode::Exact => {
                let cut = base.min(cfg.max_truncation);
                let value: f64 = self.tails.iter().map(|(e, m)| e.tail(*m, cut)).sum();
                (cut, value, 0.0)
            }
            TailMode::Truncate => {
                let target = cfg.abs_tol / (4.0 * scale);
                let mut cut = base.min(cfg.max_truncation);
                while (self.envelope)(cut) >= target && cut < cfg.max_truncation {
                    cut = (2.0 * cut).min(cfg.max_truncation);
                }
                let bound = (self.envelope)(cut);
                if bound >= target {
                    return Err(Error::Accuracy {
                        estimate: scale * bound,
                        tolerance: cfg.abs_tol,
                    });
                }
                (cut, 0.0, bound)
            }
        };
        let (head, head_err) = rule.integrate(&self.f, cut, width);
        let est = Estimate {
            value: scale * (head + tail_value),
            error: scale * (head_err + tail_err),
        };
        if est.error > cfg.abs_tol {
            return Err(Error::Accuracy {
                estimate: est.error,
                tolerance: cfg.abs_tol,
            });
        }
        Ok(est)
    }
}

fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-8 {
        1.0 - x * x / 6.0
    } else {
        x.sin() / x
    }
}

/// `(‖a‖/π) ∫_{−∞}^{∞} Π sinc(a_i u) cos(2tu) du` with its error estimate.
pub fn polya_estimate(q: &SectionQuery, cfg: &QuadratureConfig) -> Result<Estimate> {
    let act = q.direction.active_coords();
    check_active(act.len())?;
    let k = act.len() as u32;
    let t = q.t;
    let pi_a: f64 = act.iter().product();
    let mut tail = ExpSum::one().times_cos(2.0 * t);
    for &x in &act {
        tail = tail.times_sin(x);
    }
    let tails = [(tail.scale(1.0 / pi_a), k)];
    let envelope = move |u: f64| u.powi(1 - k as i32) / ((f64::from(k) - 1.0) * pi_a);
    let sinc_coords = act.clone();
    let osc = Oscillatory {
        f: move |u: f64| sinc_coords.iter().map(|&x| sinc(x * u)).product::<f64>() * (2.0 * t * u).cos(),
        tails: &tails,
        envelope: &envelope,
        freq_max: act.iter().sum::<f64>() + 2.0 * t,
        freq_min: act.iter().copied().fold(f64::INFINITY, f64::min),
    };
    osc.integrate(cfg, 2.0 * q.direction.norm() / PI)
}

/// `V` by the sinc-product integral.
pub fn polya_volume(q: &SectionQuery, cfg: &QuadratureConfig) -> Result<f64> {
    Ok(polya_estimate(q, cfg)?.value)
}

fn check_q(n: u32, t: f64) -> Result<()> {
    if n < 4 {
        return Err(Error::domain(format!("order n = {n} must be at least 4")));
    }
    if !t.is_finite() || t < 0.0 || 4.0 * t * t >= f64::from(n) {
        return Err(Error::domain(format!("t = {t} must satisfy 0 ≤ t < √n/2")));
    }
    Ok(())
}

/// `(1/π) ∫ n [2 (n/u²) s² − (√n/u) c s − 1] (√n s/u)^{n−2} cos(2tu) du`
/// with `s = sin(u/√n)`, `c = cos(u/√n)`.
pub fn q1_estimate(n: u32, t: f64, cfg: &QuadratureConfig) -> Result<Estimate> {
    check_q(n, t)?;
    let nf = f64::from(n);
    let rn = nf.sqrt();
    let alpha = 1.0 / rn;
    let lead = nf.powf((nf - 2.0) / 2.0);
    let mut s_pow = ExpSum::one().times_cos(2.0 * t);
    for _ in 0..n - 2 {
        s_pow = s_pow.times_sin(alpha);
    }
    let s_pow1 = s_pow.times_sin(alpha);
    let tails = [
        (s_pow1.times_sin(alpha).scale(2.0 * nf * nf * lead), n),
        (s_pow1.times_cos(alpha).scale(-nf * rn * lead), n - 1),
        (s_pow.scale(-nf * lead), n - 2),
    ];
    let envelope = move |u: f64| {
        nf * (2.0 * nf * lead * u.powf(1.0 - nf) / (nf - 1.0)
            + rn * lead * u.powf(2.0 - nf) / (nf - 2.0)
            + lead * u.powf(3.0 - nf) / (nf - 3.0))
    };
    let osc = Oscillatory {
        f: move |u: f64| {
            let w = u * alpha;
            let sc = sinc(w);
            nf * (2.0 * sc * sc - w.cos() * sc - 1.0) * sc.powi(n as i32 - 2) * (2.0 * t * u).cos()
        },
        tails: &tails,
        envelope: &envelope,
        freq_max: rn + 2.0 * t,
        freq_min: alpha,
    };
    osc.integrate(cfg, 2.0 / PI)
}

/// `−(1/(3π)) ∫ u² (√n s/u)^n cos(2tu) du` with `s = sin(u/√n)`.
pub fn q2_estimate(n: u32, t: f64, cfg: &QuadratureConfig) -> Result<Estimate> {
    check_q(n, t)?;
    let nf = f64::from(n);
    let rn = nf.sqrt();
    let alpha = 1.0 / rn;
    let lead = nf.powf(nf / 2.0);
    let mut s_pow = ExpSum::one().times_cos(2.0 * t);
    for _ in 0..n {
        s_pow = s_pow.times_sin(alpha);
    }
    let tails = [(s_pow.scale(lead), n - 2)];
    let envelope = move |u: f64| lead * u.powf(3.0 - nf) / (nf - 3.0);
    let osc = Oscillatory {
        f: move |u: f64| u * u * sinc(u * alpha).powi(n as i32) * (2.0 * t * u).cos(),
        tails: &tails,
        envelope: &envelope,
        freq_max: rn + 2.0 * t,
        freq_min: alpha,
    };
    osc.integrate(cfg, -2.0 / (3.0 * PI))
}

pub fn q1_integral(n: u32, t: f64, cfg: &QuadratureConfig) -> Result<f64> {
    Ok(q1_estimate(n, t, cfg)?.value)
}

pub fn q2_integral(n: u32, t: f64, cfg: &QuadratureConfig) -> Result<f64> {
    Ok(q2_estimate(n, t, cfg)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::volume::direction::Direction;
    use crate::volume::vertex::vertex_sum_volume;

    fn diag(d: u32, t: f64) -> SectionQuery {
        SectionQuery::new(Direction::subdiagonal(d, d).unwrap(), t).unwrap()
    }

    #[test]
    fn known_values() {
        let cfg = QuadratureConfig::default();
        assert!((polya_volume(&diag(2, 0.0), &cfg).unwrap() - 2f64.sqrt()).abs() < 1e-10);
        let hex = 3.0 * 3f64.sqrt() / 4.0;
        assert!((polya_volume(&diag(3, 0.0), &cfg).unwrap() - hex).abs() < 1e-10);
        let q = diag(6, 0.7);
        let diff = polya_volume(&q, &cfg).unwrap() - vertex_sum_volume(&q).unwrap();
        assert!(diff.abs() < 1e-10, "{diff}");
    }

    #[test]
    fn truncation_mode_flags_slow_tails() {
        let cfg = QuadratureConfig {
            tail: TailMode::Truncate,
            ..QuadratureConfig::default()
        };
        assert!(matches!(polya_volume(&diag(2, 0.0), &cfg), Err(Error::Accuracy { .. })));
        let loose = QuadratureConfig {
            abs_tol: 1e-6,
            ..cfg
        };
        let q = diag(7, 0.3);
        let v = polya_volume(&q, &loose).unwrap();
        assert!((v - vertex_sum_volume(&q).unwrap()).abs() < 1e-6);
    }

    #[test]
    fn degenerate_and_bad_config() {
        let q = SectionQuery::new(Direction::new(vec![1.0, 0.0]).unwrap(), 0.1).unwrap();
        assert!(matches!(polya_volume(&q, &QuadratureConfig::default()), Err(Error::DegenerateSection(_))));
        let cfg = QuadratureConfig {
            abs_tol: 0.0,
            ..QuadratureConfig::default()
        };
        assert!(polya_volume(&diag(3, 0.0), &cfg).is_err());
    }

    #[test]
    fn q_integrals_negative_at_center() {
        let cfg = QuadratureConfig::default();
        for n in 4..=10 {
            assert!(q1_integral(n, 0.0, &cfg).unwrap() < 0.0, "q1 n={n}");
            assert!(q2_integral(n, 0.0, &cfg).unwrap() < 0.0, "q2 n={n}");
        }
        assert!(q1_integral(3, 0.0, &cfg).is_err());
        assert!(q2_integral(4, 1.0, &cfg).is_err());
    }
}
