//! The quadratic weights and the two alternating criterion sums.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::rational::{binomial, int, rat, Rational};
use crate::exactpoly::{PiecewisePolynomial, Polynomial};

fn check_order(n: u32) -> Result<()> {
    if n < 4 {
        return Err(Error::domain(format!("order n = {n} must be at least 4")));
    }
    Ok(())
}

/// The quadratic weight
/// `i(n−i)/(n−1) − (n/2−i)(z−i)/(n−2) + 2n(z−i)²/((n−1)(n−2))`.
pub fn p_poly(i: u32, n: u32) -> Result<Polynomial> {
    if n <= 2 {
        return Err(Error::domain(format!("the weight divides by n − 2; n = {n} is not allowed")));
    }
    if i > n {
        return Err(Error::domain(format!("index i = {i} exceeds n = {n}")));
    }
    let (i, n) = (i64::from(i), i64::from(n));
    let c0 = rat(i * (n - i), n - 1);
    let c1 = -rat(n - 2 * i, 2 * (n - 2));
    let c2 = rat(2 * n, (n - 1) * (n - 2));
    // expand in powers of (z − i), then shift to powers of z
    let local = Polynomial::new(vec![c0, c1, c2]);
    Ok(local.taylor_shift(&-int(i)))
}

/// Breakpoints `0, 1, …, ⌈n/2⌉ − 1, n/2`.
pub(crate) fn breakpoints(n: u32) -> Vec<Rational> {
    let pieces = n.div_ceil(2);
    let mut bps: Vec<Rational> = (0..pieces).map(|k| int(i64::from(k))).collect();
    bps.push(rat(i64::from(n), 2));
    bps
}

fn build(n: u32, weighted: bool) -> Result<PiecewisePolynomial> {
    check_order(n)?;
    let bps = breakpoints(n);
    let mut pieces = Vec::with_capacity(bps.len() - 1);
    let mut acc = Polynomial::zero();
    for k in 0..bps.len() - 1 {
        let i = k as u32;
        let mut term = Polynomial::shifted_power(&int(i64::from(i)), n - 3);
        if weighted {
            term = &term * &p_poly(i, n)?;
        }
        let mut coeff = binomial(u64::from(n), u64::from(i));
        if i % 2 == 1 {
            coeff = -coeff;
        }
        acc = &acc + &term.scale(&coeff);
        pieces.push(acc.clone());
    }
    PiecewisePolynomial::new(bps, pieces)
}

/// `S1(z) = Σ_{i ≤ ⌊z⌋} (−1)^i C(n,i) (z−i)^{n−3} p_{i,n}(z)` on `[0, n/2]`.
pub fn build_s1(n: u32) -> Result<PiecewisePolynomial> {
    build(n, true)
}

/// `S2(z) = Σ_{i ≤ ⌊z⌋} (−1)^i C(n,i) (z−i)^{n−3}` on `[0, n/2]`.
pub fn build_s2(n: u32) -> Result<PiecewisePolynomial> {
    build(n, false)
}

/// Direct evaluation of one criterion sum at a rational point, without
/// building pieces.
pub fn eval_sum(n: u32, z: &Rational, weighted: bool) -> Result<Rational> {
    check_order(n)?;
    if *z < Rational::zero() || *z > rat(i64::from(n), 2) {
        return Err(Error::domain(format!("z = {z} lies outside [0, {n}/2]")));
    }
    let top = z.floor().to_integer();
    let mut total = Rational::zero();
    let mut i = BigInt::zero();
    let mut k = 0u32;
    while i <= top {
        let x = z - Rational::from_integer(i.clone());
        let mut term = num_traits::pow(x, (n - 3) as usize) * binomial(u64::from(n), u64::from(k));
        if weighted {
            term *= p_poly(k, n)?.eval(z);
        }
        if k % 2 == 1 {
            term = -term;
        }
        total += term;
        i += BigInt::one();
        k += 1;
    }
    Ok(total)
}
