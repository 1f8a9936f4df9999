//! Section volumes as alternating sums over cube vertices.

use num_traits::{One, Signed, Zero};

use super::direction::SectionQuery;
use crate::error::{Error, Result};
use crate::exactpoly::rational::{
    binomial, factorial_int, from_f64, int, rat, sqrt_enclosure, to_f64, Rational, Surd,
};

/// Above this many active coordinates the float path replaces the exact one.
pub const EXACT_ACTIVE_LIMIT: usize = 14;

/// Neumaier's compensated sum.
#[derive(Clone, Copy, Debug, Default)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

pub(crate) fn check_active(active: usize) -> Result<()> {
    if active < 2 {
        return Err(Error::DegenerateSection(format!(
            "{active} non-zero coordinate(s); at least 2 are needed"
        )));
    }
    Ok(())
}

/// Exact `V/‖a‖ = Σ_{a·v ≤ b} (−1)^{σ(v)} (b − a·v)^{n−1} / ((n−1)! π(a))`
/// over the non-zero coordinates of `a`. `b` is unrestricted.
pub fn vertex_sum_exact(a: &[Rational], b: &Rational) -> Result<Rational> {
    let act: Vec<&Rational> = a.iter().filter(|x| !x.is_zero()).collect();
    if act.iter().any(|x| x.is_negative()) {
        return Err(Error::domain("coordinates of a must be non-negative"));
    }
    check_active(act.len())?;
    let n = act.len();
    let mut total = Rational::zero();
    for mask in 0u64..(1u64 << n) {
        let mut dot = Rational::zero();
        for (i, x) in act.iter().enumerate() {
            if mask >> i & 1 == 1 {
                dot += *x;
            }
        }
        let gap = b - dot;
        if gap.is_negative() {
            continue;
        }
        let term = num_traits::pow(gap, n - 1);
        if mask.count_ones() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    let pi: Rational = act.iter().fold(Rational::one(), |acc, x| acc * *x);
    Ok(total / (Rational::from_integer(factorial_int(n as u64 - 1)) * pi))
}

/// Float version of [`vertex_sum_exact`] with compensated summation.
pub fn vertex_sum_float(a: &[f64], b: f64) -> Result<f64> {
    let act: Vec<f64> = a.iter().copied().filter(|&x| x != 0.0).collect();
    check_active(act.len())?;
    let n = act.len();
    let pi: f64 = act.iter().product();
    let fact: f64 = (1..n).map(|k| k as f64).product();
    let mut sum = CompensatedSum::default();
    for mask in 0u64..(1u64 << n) {
        let mut dot = CompensatedSum::default();
        for (i, x) in act.iter().enumerate() {
            if mask >> i & 1 == 1 {
                dot.add(*x);
            }
        }
        let gap = b - dot.value();
        if gap < 0.0 {
            continue;
        }
        let term = gap.powi(n as i32 - 1) / (fact * pi);
        sum.add(if mask.count_ones() % 2 == 0 { term } else { -term });
    }
    Ok(sum.value())
}

/// `V` by the vertex formula. Uses the exact rational path (the float inputs
/// are exact binary rationals) for up to [`EXACT_ACTIVE_LIMIT`] active
/// coordinates, with a single final rounding.
pub fn vertex_sum_volume(q: &SectionQuery) -> Result<f64> {
    let a = q.direction.coords();
    let active = q.direction.active();
    check_active(active)?;
    let per_norm = if active <= EXACT_ACTIVE_LIMIT {
        let ar: Vec<Rational> = a.iter().map(|&x| from_f64(x)).collect::<Result<_>>()?;
        let sigma: Rational = ar.iter().sum();
        let b = sigma / int(2) - from_f64(q.t)?;
        to_f64(&vertex_sum_exact(&ar, &b)?)
    } else {
        vertex_sum_float(a, q.b())?
    };
    Ok(q.direction.norm() * per_norm)
}

/// Exact volume of the section orthogonal to the order-`n` sub-diagonal at
/// `z = n/2 − t√n`: `√n/(n−1)! Σ_{i ≤ z} (−1)^i C(n,i) (z−i)^{n−1}`.
pub fn subdiagonal_volume_exact(n: u32, z: &Rational) -> Result<Surd> {
    if n < 2 {
        return Err(Error::DegenerateSection(format!("order n = {n} < 2")));
    }
    if z.is_negative() || *z > rat(i64::from(n), 2) {
        return Err(Error::domain(format!("z = {z} must lie in [0, {n}/2]")));
    }
    let mut total = Rational::zero();
    let mut i = 0u32;
    while int(i64::from(i)) <= *z {
        let term = num_traits::pow(z - int(i64::from(i)), (n - 1) as usize) * binomial(u64::from(n), u64::from(i));
        if i.is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
        i += 1;
    }
    Ok(Surd::new(total / Rational::from_integer(factorial_int(u64::from(n) - 1)), u64::from(n)))
}

/// Float volume at the order-`n` sub-diagonal, with `z` enclosed to about
/// `2^-120` before the exact sum is taken.
pub fn subdiagonal_volume(n: u32, t: f64) -> Result<f64> {
    let z = z_rational(n, t)?;
    Ok(subdiagonal_volume_exact(n, &z)?.to_f64())
}

/// Rational approximation of `n/2 − t√n` to about `2^-120`.
pub(crate) fn z_rational(n: u32, t: f64) -> Result<Rational> {
    let tr = from_f64(t)?;
    if tr.is_negative() || &tr * &tr * int(4) >= int(i64::from(n)) {
        return Err(Error::domain(format!("t = {t} must satisfy 0 ≤ t < √n/2")));
    }
    let (lo, hi) = sqrt_enclosure(&int(i64::from(n)), 120);
    let root = (lo + hi) / int(2);
    let z = rat(i64::from(n), 2) - tr * root;
    Ok(if z.is_negative() { Rational::zero() } else { z })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::volume::direction::Direction;

    fn q(a: Vec<f64>, t: f64) -> SectionQuery {
        SectionQuery::new(Direction::new(a).unwrap(), t).unwrap()
    }

    #[test]
    fn known_central_sections() {
        let r = 0.5f64.sqrt();
        assert!((vertex_sum_volume(&q(vec![r, r], 0.0)).unwrap() - 2f64.sqrt()).abs() < 1e-12);
        let s = 1.0 / 3f64.sqrt();
        let hex = vertex_sum_volume(&q(vec![s, s, s], 0.0)).unwrap();
        assert!((hex - 3.0 * 3f64.sqrt() / 4.0).abs() < 1e-12);
        // at t = 0 the length of a does not matter
        assert!((vertex_sum_volume(&q(vec![3.0, 3.0], 0.0)).unwrap() - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn degenerate_sections_are_rejected() {
        assert!(matches!(
            vertex_sum_volume(&q(vec![1.0, 0.0], 0.1)),
            Err(Error::DegenerateSection(_))
        ));
    }

    #[test]
    fn exact_and_float_paths_agree() {
        let a = [0.3, 0.5, 0.7, 0.2, 0.9];
        let b = 0.8;
        let ar: Vec<Rational> = a.iter().map(|&x| from_f64(x).unwrap()).collect();
        let exact = to_f64(&vertex_sum_exact(&ar, &from_f64(b).unwrap()).unwrap());
        let float = vertex_sum_float(&a, b).unwrap();
        assert!((exact - float).abs() < 1e-12);
    }

    #[test]
    fn subdiagonal_formula_matches_vertex_sum() {
        for n in 2..9u32 {
            for t in [0.0, 0.2, 0.55] {
                if t * t * 4.0 >= f64::from(n) {
                    continue;
                }
                let d = Direction::subdiagonal(n, n + 1).unwrap();
                let v = vertex_sum_volume(&SectionQuery::new(d, t).unwrap()).unwrap();
                assert!((v - subdiagonal_volume(n, t).unwrap()).abs() < 1e-12, "n={n} t={t}");
            }
        }
    }

    #[test]
    fn corner_limit_vanishes() {
        let v = subdiagonal_volume(9, 1.5 - 1e-9).unwrap();
        assert!(v.abs() < 1e-40);
    }
}
