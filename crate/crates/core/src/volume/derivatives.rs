//! Gradient and second-derivative combinations of `V/‖a‖`.

use num_traits::{Signed, Zero};

use super::direction::SectionQuery;
use super::vertex::{CompensatedSum, EXACT_ACTIVE_LIMIT};
use crate::criterion::eval_sum;
use crate::error::{Error, Result};
use crate::exactpoly::rational::{factorial_int, from_f64, int, rat, to_f64, Rational, Surd};

/// `∂/∂a_j (V/‖a‖)` with `t` held fixed, for 1-based `j`.
///
/// Over the non-zero coordinates this is
/// `Σ_{a·v ≤ b} (−1)^{σ(v)} (b − a·v)^{n−2} / ((n−1)! π(a)) · [(n−1)(1/2 − v_j) − (b − a·v)/a_j]`;
/// it vanishes when `a_j = 0`.
pub fn grad_sum(q: &SectionQuery, j: usize) -> Result<f64> {
    let a = q.direction.coords();
    if j == 0 || j > a.len() {
        return Err(Error::domain(format!("index j = {j} outside 1..={}", a.len())));
    }
    let n = q.direction.active();
    if n < 3 {
        return Err(Error::domain(format!("{n} non-zero coordinates; the gradient sum needs 3")));
    }
    if a[j - 1] == 0.0 {
        return Ok(0.0);
    }
    let pos = a[..j - 1].iter().filter(|&&x| x != 0.0).count();
    let act = q.direction.active_coords();
    if n <= EXACT_ACTIVE_LIMIT {
        let ar: Vec<Rational> = act.iter().map(|&x| from_f64(x)).collect::<Result<_>>()?;
        let sigma: Rational = ar.iter().sum();
        let b = sigma / int(2) - from_f64(q.t)?;
        return Ok(to_f64(&grad_exact(&ar, &b, pos)));
    }
    Ok(grad_float(&act, q.b(), pos))
}

fn grad_exact(a: &[Rational], b: &Rational, j: usize) -> Rational {
    let n = a.len();
    let half = rat(1, 2);
    let mut total = Rational::zero();
    for mask in 0u64..(1u64 << n) {
        let dot: Rational = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| &a[i]).sum();
        let r = b - dot;
        if r.is_negative() {
            continue;
        }
        let vj = if mask >> j & 1 == 1 { int(1) } else { int(0) };
        let bracket = int(n as i64 - 1) * (&half - vj) - &r / &a[j];
        let term = num_traits::pow(r, n - 2) * bracket;
        if mask.count_ones() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    let pi: Rational = a.iter().product();
    total / (Rational::from_integer(factorial_int(n as u64 - 1)) * pi)
}

fn grad_float(a: &[f64], b: f64, j: usize) -> f64 {
    let n = a.len();
    let mut sum = CompensatedSum::default();
    for mask in 0u64..(1u64 << n) {
        let dot: f64 = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| a[i]).sum();
        let r = b - dot;
        if r < 0.0 {
            continue;
        }
        let vj = (mask >> j & 1) as f64;
        let term = r.powi(n as i32 - 2) * ((n as f64 - 1.0) * (0.5 - vj) - r / a[j]);
        sum.add(if mask.count_ones() % 2 == 0 { term } else { -term });
    }
    let log_fact: f64 = (2..n).map(|k| (k as f64).ln()).sum();
    sum.value() / (log_fact.exp() * a.iter().product::<f64>())
}

fn check_z(n: u32, z: &Rational) -> Result<()> {
    if n < 4 {
        return Err(Error::domain(format!("order n = {n} must be at least 4")));
    }
    if !z.is_positive() || *z > rat(i64::from(n), 2) {
        return Err(Error::domain(format!("z = {z} must lie in ]0, {n}/2]")));
    }
    Ok(())
}

/// `(∂²/∂a₁² − √n ∂/∂a₁ − ∂²/∂a₁∂a₂)(V/‖a‖)` at the order-`n` sub-diagonal,
/// which equals `√n/(n−3)! · S1(z)`.
pub fn hessian_combo_sum(n: u32, z: &Rational) -> Result<Surd> {
    check_z(n, z)?;
    let s1 = eval_sum(n, z, true)?;
    Ok(Surd::new(s1 / Rational::from_integer(factorial_int(u64::from(n) - 3)), u64::from(n)))
}

/// `∂²(V/‖a‖)/∂a_d²` at the order-`n` sub-diagonal for `n < d`, which equals
/// `n√n/(12 (n−3)!) · S2(z)`.
pub fn hessian_outside_sum(n: u32, z: &Rational) -> Result<Surd> {
    check_z(n, z)?;
    let s2 = eval_sum(n, z, false)?;
    let scale = int(i64::from(n)) / (int(12) * Rational::from_integer(factorial_int(u64::from(n) - 3)));
    Ok(Surd::new(s2 * scale, u64::from(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::volume::direction::Direction;
    use crate::volume::vertex::vertex_sum_exact;

    fn per_norm(a: &[f64], t: f64) -> f64 {
        let ar: Vec<Rational> = a.iter().map(|&x| from_f64(x).unwrap()).collect();
        let sigma: Rational = ar.iter().sum();
        to_f64(&vertex_sum_exact(&ar, &(sigma / int(2) - from_f64(t).unwrap())).unwrap())
    }

    #[test]
    fn hessian_examples() {
        assert_eq!(hessian_combo_sum(4, &int(2)).unwrap(), Surd::new(rat(-2, 3), 4));
        assert!((hessian_combo_sum(4, &int(2)).unwrap().to_f64() + 4.0 / 3.0).abs() < 1e-15);
        assert_eq!(hessian_combo_sum(5, &int(1)).unwrap().sign(), 0);
        assert_eq!(hessian_outside_sum(4, &rat(4, 3)).unwrap().sign(), 0);
        assert!((hessian_outside_sum(4, &rat(1, 2)).unwrap().to_f64() - 1.0 / 3.0).abs() < 1e-15);
        assert!(hessian_combo_sum(3, &int(1)).is_err());
        assert!(hessian_outside_sum(5, &int(0)).is_err());
    }

    #[test]
    fn gradient_matches_finite_differences() {
        let n = 5u32;
        let z = 1.5;
        let t = (f64::from(n) / 2.0 - z) / f64::from(n).sqrt();
        let q = SectionQuery::new(Direction::subdiagonal(n, n).unwrap(), t).unwrap();
        let a = q.direction.coords().to_vec();
        let h = 1e-5;
        for j in 1..=n as usize {
            let mut up = a.clone();
            let mut dn = a.clone();
            up[j - 1] += h;
            dn[j - 1] -= h;
            let fd = (per_norm(&up, t) - per_norm(&dn, t)) / (2.0 * h);
            let g = grad_sum(&q, j).unwrap();
            assert!((g - fd).abs() < 1e-8 * (1.0 + g.abs()), "j={j}: {g} vs {fd}");
        }
    }

    #[test]
    fn gradient_symmetry_and_zero_coordinates() {
        let q = SectionQuery::new(Direction::subdiagonal(4, 4).unwrap(), 0.0).unwrap();
        let g: Vec<f64> = (1..=4).map(|j| grad_sum(&q, j).unwrap()).collect();
        assert!(g.iter().all(|x| (x - g[0]).abs() < 1e-14));
        let q = SectionQuery::new(Direction::subdiagonal(4, 6).unwrap(), 0.2).unwrap();
        assert_eq!(grad_sum(&q, 5).unwrap(), 0.0);
        assert!(grad_sum(&q, 7).is_err());
        let q = SectionQuery::new(Direction::subdiagonal(2, 3).unwrap(), 0.2).unwrap();
        assert!(grad_sum(&q, 1).is_err());
    }

    #[test]
    fn float_and_exact_gradients_agree() {
        let a = [0.3, 0.5, 0.7, 0.2];
        let b = 0.6;
        let ar: Vec<Rational> = a.iter().map(|&x| from_f64(x).unwrap()).collect();
        for j in 0..4 {
            let e = to_f64(&grad_exact(&ar, &from_f64(b).unwrap(), j));
            assert!((e - grad_float(&a, b, j)).abs() < 1e-12);
        }
    }
}
