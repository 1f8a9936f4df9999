//! Change of variables, the small-z threshold and local extremality
//! classification at (sub-)diagonal directions.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::weights::{build_s1, build_s2};
use crate::error::{Error, Result};
use crate::exactpoly::rational::{
    from_f64, int, midpoint, pow10_neg, rat, sign, sqrt_enclosure, to_f64, Rational,
};
use crate::exactpoly::{certified_sign, PiecewisePolynomial};

/// An order-`n` sub-diagonal of the `d`-dimensional cube; `n == d` is the
/// main diagonal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SubdiagonalSpec {
    pub n: u32,
    pub d: u32,
}

impl SubdiagonalSpec {
    pub fn new(n: u32, d: u32) -> Result<Self> {
        if n < 4 {
            return Err(Error::domain(format!("order n = {n} must be at least 4")));
        }
        if d < n {
            return Err(Error::domain(format!("dimension d = {d} must be at least n = {n}")));
        }
        Ok(SubdiagonalSpec { n, d })
    }

    pub fn diagonal(d: u32) -> Result<Self> {
        Self::new(d, d)
    }

    pub fn is_diagonal(&self) -> bool {
        self.n == self.d
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ExtremalityKind {
    StrictLocalMax,
    StrictLocalMin,
    NotExtremal,
    Inconclusive,
}

impl fmt::Display for ExtremalityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExtremalityKind::StrictLocalMax => "StrictLocalMax",
            ExtremalityKind::StrictLocalMin => "StrictLocalMin",
            ExtremalityKind::NotExtremal => "NotExtremal",
            ExtremalityKind::Inconclusive => "Inconclusive",
        })
    }
}

impl FromStr for ExtremalityKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "StrictLocalMax" => ExtremalityKind::StrictLocalMax,
            "StrictLocalMin" => ExtremalityKind::StrictLocalMin,
            "NotExtremal" => ExtremalityKind::NotExtremal,
            "Inconclusive" => ExtremalityKind::Inconclusive,
            _ => return Err(Error::domain(format!("unknown extremality kind {s:?}"))),
        })
    }
}

/// Outcome of [`classify`]. `s2_sign` is `None` on the main diagonal, where
/// only the first criterion matters. `z_lo..=z_hi` encloses `z`; the bounds
/// coincide when `z` is known exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct Extremality {
    pub kind: ExtremalityKind,
    pub s1_sign: i8,
    pub s2_sign: Option<i8>,
    pub z_lo: Rational,
    pub z_hi: Rational,
    pub t: f64,
}

impl Extremality {
    pub fn z_exact(&self) -> Option<&Rational> {
        (self.z_lo == self.z_hi).then_some(&self.z_lo)
    }

    pub fn z(&self) -> f64 {
        to_f64(&midpoint(&self.z_lo, &self.z_hi))
    }
}

/// The decision table. Uncertain signs are passed as `0`.
pub fn decide(diagonal: bool, s1: i8, s2: i8) -> ExtremalityKind {
    use ExtremalityKind::*;
    if diagonal {
        return match s1 {
            -1 => StrictLocalMax,
            1 => StrictLocalMin,
            _ => Inconclusive,
        };
    }
    match (s1, s2) {
        (-1, -1) => StrictLocalMax,
        (1, 1) => StrictLocalMin,
        (-1, 1) | (1, -1) => NotExtremal,
        _ => Inconclusive,
    }
}

/// `z = n/2 − t√n`.
pub fn z_of_t(n: u32, t: f64) -> Result<f64> {
    check_t(n, t)?;
    let n = f64::from(n);
    Ok(n / 2.0 - t * n.sqrt())
}

/// `t = (n/2 − z)/√n`.
pub fn t_of_z(n: u32, z: f64) -> Result<f64> {
    let nf = f64::from(n);
    if !(z > 0.0 && z <= nf / 2.0) {
        return Err(Error::domain(format!("z = {z} must lie in (0, {}]", nf / 2.0)));
    }
    Ok((nf / 2.0 - z) / nf.sqrt())
}

/// Exact `t = (n/2 − z)/√n` when `√n` is rational, otherwise `None`.
pub fn t_of_z_exact(n: u32, z: &Rational) -> Option<Rational> {
    let root = crate::exactpoly::rational::exact_sqrt(&int(i64::from(n)))?;
    Some((rat(i64::from(n), 2) - z) / root)
}

fn check_t(n: u32, t: f64) -> Result<()> {
    if !t.is_finite() || t < 0.0 {
        return Err(Error::domain(format!("t = {t} must satisfy 0 ≤ t < √n/2")));
    }
    // t < √n/2  ⇔  4t² < n, decided exactly
    let tr = from_f64(t)?;
    if &tr * &tr * int(4) >= int(i64::from(n)) {
        return Err(Error::domain(format!(
            "t = {t} must be < √n/2 = {}",
            f64::from(n).sqrt() / 2.0
        )));
    }
    Ok(())
}

/// `min{(n−1)/4, n^{1/(n−3)}/(n^{1/(n−3)} − 1)}`, below which every
/// diagonal is a local maximizer.
pub fn threshold_z(n: u32) -> Result<f64> {
    if n < 4 {
        return Err(Error::domain(format!("order n = {n} must be at least 4")));
    }
    let nf = f64::from(n);
    let root = nf.powf(1.0 / (nf - 3.0));
    Ok(((nf - 1.0) / 4.0).min(root / (root - 1.0)))
}

/// Default width below which an undecided sign is reported as inconclusive.
pub fn default_eps() -> Rational {
    pow10_neg(30)
}

/// Reusable classifier holding the criterion polynomials for one order `n`.
#[derive(Clone, Debug)]
pub struct Classifier {
    spec: SubdiagonalSpec,
    s1: PiecewisePolynomial,
    s2: PiecewisePolynomial,
}

impl Classifier {
    pub fn new(spec: SubdiagonalSpec) -> Result<Self> {
        Ok(Classifier {
            spec,
            s1: build_s1(spec.n)?,
            s2: build_s2(spec.n)?,
        })
    }

    pub fn spec(&self) -> SubdiagonalSpec {
        self.spec
    }

    pub fn s1(&self) -> &PiecewisePolynomial {
        &self.s1
    }

    pub fn s2(&self) -> &PiecewisePolynomial {
        &self.s2
    }

    /// Classifies at an exact `z ∈ (0, n/2]`.
    pub fn classify_z(&self, z: &Rational) -> Result<Extremality> {
        let half = rat(i64::from(self.spec.n), 2);
        if !z.is_positive() || *z > half {
            return Err(Error::domain(format!("z = {z} must lie in (0, {half}]")));
        }
        let t = match t_of_z_exact(self.spec.n, z) {
            Some(t) => to_f64(&t),
            None => t_of_z(self.spec.n, to_f64(z))?,
        };
        self.finish(z.clone(), z.clone(), t)
    }

    /// Classifies at distance `t`, taken as the exact value of the float.
    /// When `√n` is irrational, `z` is enclosed with growing precision until
    /// both signs are certified or the enclosure is narrower than `eps`.
    pub fn classify_t(&self, t: f64, eps: &Rational) -> Result<Extremality> {
        check_t(self.spec.n, t)?;
        if !eps.is_positive() {
            return Err(Error::domain("eps must be positive"));
        }
        let tr = from_f64(t)?;
        let n = int(i64::from(self.spec.n));
        let half = rat(i64::from(self.spec.n), 2);
        let mut bits = 64;
        loop {
            let (lo, hi) = sqrt_enclosure(&n, bits);
            let z_lo = &half - &tr * &hi;
            let z_hi = &half - &tr * &lo;
            let z_lo = if z_lo.is_positive() { z_lo } else { z_hi.clone() / int(2) };
            let out = self.finish(z_lo, z_hi, t)?;
            let undecided = out.s1_sign == 0 || (!self.spec.is_diagonal() && out.s2_sign == Some(0));
            if !undecided || out.z_exact().is_some() || &out.z_hi - &out.z_lo < *eps {
                return Ok(out);
            }
            bits *= 2;
        }
    }

    fn finish(&self, z_lo: Rational, z_hi: Rational, t: f64) -> Result<Extremality> {
        let s1 = certified_sign(&self.s1, &z_lo, &z_hi)?.unwrap_or(0);
        let s2 = if self.spec.is_diagonal() {
            None
        } else {
            Some(certified_sign(&self.s2, &z_lo, &z_hi)?.unwrap_or(0))
        };
        Ok(Extremality {
            kind: decide(self.spec.is_diagonal(), s1, s2.unwrap_or(0)),
            s1_sign: s1,
            s2_sign: s2,
            z_lo,
            z_hi,
            t,
        })
    }
}

/// One-shot classification at distance `t`.
pub fn classify(spec: SubdiagonalSpec, t: f64, eps: &Rational) -> Result<Extremality> {
    Classifier::new(spec)?.classify_t(t, eps)
}

/// Sign of `Σ_{i=l}^{⌊z⌋} (−1)^i C(n,i) f_i (z−i)^{n−3}` when the
/// leading-term dominance condition holds, `None` when it is not met.
///
/// `weights[i]` is `f_i`; the caller vouches that `f_i / f_{i+1}` is
/// increasing in `i`.
pub fn alt_sum_sign(l: u32, n: u32, z: &Rational, weights: &[Rational]) -> Result<Option<i8>> {
    if n < 4 {
        return Err(Error::domain(format!("order n = {n} must be at least 4")));
    }
    let lr = int(i64::from(l));
    if *z <= lr {
        return Err(Error::domain(format!("need l = {l} < z = {z}")));
    }
    let top = z.floor().to_integer();
    let top: usize = top
        .try_into()
        .map_err(|_| Error::domain(format!("z = {z} is too large")))?;
    if weights.len() <= top {
        return Err(Error::domain(format!(
            "{} weights given, f_0..f_{top} needed",
            weights.len()
        )));
    }
    if let Some(bad) = weights[l as usize..=top].iter().find(|f| !f.is_positive()) {
        return Err(Error::domain(format!("weight {bad} is not positive")));
    }
    let parity = if l.is_multiple_of(2) { 1 } else { -1 };
    if l as usize == top {
        return Ok(Some(parity));
    }
    let li = l as usize;
    let r = rat(i64::from(l) + 1, i64::from(n) - i64::from(l)) * &weights[li] / &weights[li + 1];
    let ratio = (z - &lr - Rational::one()) / (z - &lr);
    let lhs = num_traits::pow(ratio, (n - 3) as usize);
    Ok((lhs < r).then_some(parity))
}

/// Sign of a rational as used in the decision table.
pub fn sign_of(x: &Rational) -> i8 {
    if x.is_zero() {
        0
    } else {
        sign(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criterion::weights::eval_sum;
    use ExtremalityKind::*;

    #[test]
    fn decision_table_is_total() {
        for s1 in -1..=1 {
            assert_eq!(decide(true, s1, 0), [StrictLocalMax, Inconclusive, StrictLocalMin][(s1 + 1) as usize]);
            for s2 in -1..=1 {
                let k = decide(false, s1, s2);
                let want = match (s1, s2) {
                    (-1, -1) => StrictLocalMax,
                    (1, 1) => StrictLocalMin,
                    (0, _) | (_, 0) => Inconclusive,
                    _ => NotExtremal,
                };
                assert_eq!(k, want);
            }
        }
    }

    #[test]
    fn change_of_variables() {
        assert_eq!(z_of_t(4, 0.0).unwrap(), 2.0);
        assert!((t_of_z(4, 0.75).unwrap() - 0.625).abs() < 1e-15);
        let eps = 1e-9;
        assert!((z_of_t(9, 1.5 - eps).unwrap() - 3.0 * eps).abs() < 1e-12);
        assert!(z_of_t(4, 1.0).is_err());
        assert!(z_of_t(4, -0.1).is_err());
        assert!(t_of_z(4, 0.0).is_err());
        for z in [0.3, 1.1, 2.0] {
            assert!((z_of_t(4, t_of_z(4, z).unwrap()).unwrap() - z).abs() < 1e-14);
        }
    }

    #[test]
    fn threshold_values() {
        assert_eq!(threshold_z(4).unwrap(), 0.75);
        assert_eq!(threshold_z(5).unwrap(), 1.0);
        assert!(threshold_z(3).is_err());
    }

    #[test]
    fn diagonal_examples() {
        let c = Classifier::new(SubdiagonalSpec::diagonal(4).unwrap()).unwrap();
        let e = c.classify_t(0.0, &default_eps()).unwrap();
        assert_eq!(e.kind, StrictLocalMax);
        assert_eq!(e.z_exact(), Some(&int(2)));
        let c5 = Classifier::new(SubdiagonalSpec::diagonal(5).unwrap()).unwrap();
        let e = c5.classify_z(&rat(3, 2)).unwrap();
        assert_eq!(e.kind, StrictLocalMin);
        assert_eq!(eval_sum(5, &rat(3, 2), true).unwrap(), rat(5, 24));
    }

    #[test]
    fn subdiagonal_examples() {
        let c = Classifier::new(SubdiagonalSpec::new(4, 10).unwrap()).unwrap();
        assert_eq!(c.classify_z(&rat(7, 4)).unwrap().kind, StrictLocalMax);
        assert_eq!(c.classify_z(&rat(3, 2)).unwrap().kind, NotExtremal);
        // √4 = 2, so these z values are exact
        let e = c.classify_t(0.125, &default_eps()).unwrap();
        assert_eq!(e.z_exact(), Some(&rat(7, 4)));
        assert_eq!(e.kind, StrictLocalMax);
        let e = c.classify_t(0.25, &default_eps()).unwrap();
        assert_eq!(e.z_exact(), Some(&rat(3, 2)));
        assert_eq!(e.kind, NotExtremal);
        // exact zero of S2 at 4/3
        let e = c.classify_z(&rat(4, 3)).unwrap();
        assert_eq!((e.s2_sign, e.kind), (Some(0), Inconclusive));
    }

    #[test]
    fn irrational_root_of_n_is_enclosed() {
        let c = Classifier::new(SubdiagonalSpec::diagonal(5).unwrap()).unwrap();
        let e = c.classify_t(0.3, &default_eps()).unwrap();
        assert!(e.z_exact().is_none());
        assert!(e.z_lo < e.z_hi);
        let z = 2.5 - 0.3 * 5f64.sqrt();
        assert!((e.z() - z).abs() < 1e-15);
        let s1 = eval_sum(5, &from_f64(z).unwrap(), true).unwrap();
        assert_eq!(e.s1_sign, sign(&s1));
    }

    #[test]
    fn alternating_sum_sign() {
        let ones = vec![int(1); 10];
        assert_eq!(alt_sum_sign(1, 6, &rat(3, 2), &ones).unwrap(), Some(-1));
        assert_eq!(alt_sum_sign(0, 6, &rat(6, 5), &ones).unwrap(), Some(1));
        assert!(eval_sum(6, &rat(6, 5), false).unwrap() > Rational::zero());
        assert_eq!(alt_sum_sign(0, 5, &rat(19, 10), &ones).unwrap(), None);
        assert!(alt_sum_sign(0, 5, &rat(19, 10), &[int(1), int(0)]).is_err());
        assert!(alt_sum_sign(0, 5, &rat(19, 10), &[int(1)]).is_err());
        assert!(alt_sum_sign(2, 5, &rat(19, 10), &ones).is_err());
    }
}
