//! Gauss–Legendre panels and the oscillatory tail integrals used by the
//! integral formulas.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut z = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for k in 2..=n {
                let k = k as f64;
                let p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if n == 1 {
                p0 = 1.0;
                p1 = z;
            }
            dp = n as f64 * (z * p1 - p0) / (z * z - 1.0);
            let dz = p1 / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        w[n - 1 - i] = w[i];
    }
    (x, w)
}

/// A Gauss–Legendre rule paired with the rule of half its order, whose
/// difference serves as the per-panel error estimate.
#[derive(Clone, Debug)]
pub struct GaussRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    coarse_nodes: Vec<f64>,
    coarse_weights: Vec<f64>,
}

impl GaussRule {
    pub fn new(order: usize) -> Self {
        assert!(order >= 2, "Gauss rule order must be at least 2");
        let (nodes, weights) = gauss_legendre(order);
        let (coarse_nodes, coarse_weights) = gauss_legendre(order / 2);
        GaussRule {
            nodes,
            weights,
            coarse_nodes,
            coarse_weights,
        }
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    /// `∫_a^b f` and the fine/coarse discrepancy.
    pub fn panel<F: Fn(f64) -> f64>(&self, f: &F, a: f64, b: f64) -> (f64, f64) {
        let h = 0.5 * (b - a);
        let c = 0.5 * (b + a);
        let fine: f64 = self.nodes.iter().zip(&self.weights).map(|(x, w)| w * f(c + h * x)).sum::<f64>() * h;
        let coarse: f64 = self
            .coarse_nodes
            .iter()
            .zip(&self.coarse_weights)
            .map(|(x, w)| w * f(c + h * x))
            .sum::<f64>()
            * h;
        (fine, (fine - coarse).abs())
    }

    fn panel_c<F: Fn(f64) -> Complex64>(&self, f: &F, a: f64, b: f64) -> Complex64 {
        let h = 0.5 * (b - a);
        let c = 0.5 * (b + a);
        self.nodes.iter().zip(&self.weights).map(|(x, w)| f(c + h * x) * *w).sum::<Complex64>() * h
    }

    /// `∫_0^b f` over equal panels no wider than `width`, with the summed
    /// error estimate. Panels are added left to right.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: &F, b: f64, width: f64) -> (f64, f64) {
        let count = (b / width).ceil().max(1.0) as usize;
        let h = b / count as f64;
        let mut total = 0.0;
        let mut err = 0.0;
        for k in 0..count {
            let (v, e) = self.panel(f, k as f64 * h, (k + 1) as f64 * h);
            total += v;
            err += e;
        }
        (total, err)
    }
}

fn tail_rule() -> &'static GaussRule {
    static RULE: OnceLock<GaussRule> = OnceLock::new();
    RULE.get_or_init(|| GaussRule::new(16))
}

/// `∫_U^∞ e^{iωu} u^{−m} du`, exact up to quadrature of a smooth,
/// exponentially damped integrand after rotating the path into the
/// complex plane. Needs `m ≥ 2` when `ω = 0`.
pub fn oscillatory_tail(omega: f64, m: u32, u0: f64) -> Complex64 {
    let mf = f64::from(m);
    if omega.abs() * u0 < 1e-13 {
        assert!(m >= 2, "non-oscillatory tail needs m ≥ 2");
        return Complex64::new(u0.powf(1.0 - mf) / (mf - 1.0), 0.0);
    }
    if omega < 0.0 {
        return oscillatory_tail(-omega, m, u0).conj();
    }
    // i e^{iωU} / (ω U^m) ∫_0^∞ e^{−x} (1 + i x/(ωU))^{−m} dx
    let kappa = omega * u0;
    let g = |x: f64| Complex64::new(1.0, x / kappa).powf(-mf) * (-x).exp();
    let mut inner = Complex64::new(0.0, 0.0);
    let mut a = 0.0;
    let mut b = kappa.min(1.0) / 4.0;
    while a < 45.0 {
        let end = b.min(45.0);
        inner += tail_rule().panel_c(&g, a, end);
        a = end;
        b = (2.0 * end).max(end + kappa.min(1.0) / 4.0);
    }
    let phase = Complex64::new(0.0, omega * u0).exp();
    Complex64::i() * phase / (omega * u0.powf(mf)) * inner
}

/// A far-field expansion `Σ c_k e^{iω_k u}` of a trigonometric polynomial.
#[derive(Clone, Debug)]
pub struct ExpSum {
    pub terms: Vec<(Complex64, f64)>,
}

impl ExpSum {
    pub fn one() -> Self {
        ExpSum {
            terms: vec![(Complex64::new(1.0, 0.0), 0.0)],
        }
    }

    fn times_pair(&self, cp: Complex64, cm: Complex64, w: f64) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * 2);
        for &(c, o) in &self.terms {
            terms.push((c * cp, o + w));
            terms.push((c * cm, o - w));
        }
        let mut out = ExpSum { terms };
        out.merge();
        out
    }

    /// Multiplies by `sin(w u)`.
    pub fn times_sin(&self, w: f64) -> Self {
        // (e^{iwu} − e^{−iwu}) / 2i
        self.times_pair(Complex64::new(0.0, -0.5), Complex64::new(0.0, 0.5), w)
    }

    /// Multiplies by `cos(w u)`.
    pub fn times_cos(&self, w: f64) -> Self {
        self.times_pair(Complex64::new(0.5, 0.0), Complex64::new(0.5, 0.0), w)
    }

    pub fn scale(mut self, s: f64) -> Self {
        for t in &mut self.terms {
            t.0 *= s;
        }
        self
    }

    fn merge(&mut self) {
        self.terms.sort_by(|a, b| a.1.total_cmp(&b.1));
        let mut out: Vec<(Complex64, f64)> = Vec::with_capacity(self.terms.len());
        for &(c, o) in &self.terms {
            match out.last_mut() {
                Some(last) if (last.1 - o).abs() <= 1e-12 * (1.0 + o.abs()) => last.0 += c,
                _ => out.push((c, o)),
            }
        }
        self.terms = out;
    }

    /// `∫_U^∞ (Σ c_k e^{iω_k u}) u^{−m} du`, real part.
    pub fn tail(&self, m: u32, u0: f64) -> f64 {
        self.terms
            .iter()
            .map(|&(c, o)| (c * oscillatory_tail(o, m, u0)).re)
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_rule_integrates_polynomials() {
        let (x, w) = gauss_legendre(16);
        assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-14);
        let s: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(30)).sum();
        assert!((s - 2.0 / 31.0).abs() < 1e-14);
        let (v, e) = GaussRule::new(16).panel(&|x: f64| x.exp(), 0.0, 1.0);
        assert!((v - (1f64.exp() - 1.0)).abs() < 1e-15 && e < 1e-12);
    }

    #[test]
    fn tails_match_closed_forms() {
        // ∫_U^∞ u^-2 = 1/U
        assert!((oscillatory_tail(0.0, 2, 4.0).re - 0.25).abs() < 1e-15);
        // ∫_1^∞ cos(u)/u^2 against panels on [1, 2001] plus the leading tail term
        let brute = {
            let f = |u: f64| u.cos() / (u * u);
            let (head, _) = GaussRule::new(16).integrate(&|x: f64| f(1.0 + x), 2000.0, 0.25);
            // remaining tail beyond 2001 is below 1e-6 in size; add its
            // leading asymptotic term sin(u)/u^2 at the cut
            head - (2001f64).sin() / (2001.0 * 2001.0)
        };
        let v = oscillatory_tail(1.0, 2, 1.0).re;
        assert!((v - brute).abs() < 1e-8, "{v} vs {brute}");
        let c = oscillatory_tail(-1.0, 3, 2.0);
        assert!((c - oscillatory_tail(1.0, 3, 2.0).conj()).norm() < 1e-16);
    }

    #[test]
    fn exp_sum_reproduces_product() {
        let e = ExpSum::one().times_sin(0.7).times_sin(0.7).times_cos(1.3);
        assert_eq!(e.terms.len(), 6);
        for u in [0.1f64, 1.0, 5.5] {
            let direct = (0.7 * u).sin().powi(2) * (1.3 * u).cos();
            let sum: Complex64 = e.terms.iter().map(|&(c, o)| c * Complex64::new(0.0, o * u).exp()).sum();
            assert!((sum.re - direct).abs() < 1e-14 && sum.im.abs() < 1e-14);
        }
    }
}
