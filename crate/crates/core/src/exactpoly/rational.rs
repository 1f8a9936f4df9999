//! Exact rational scalars and the small helpers built on them.


use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// `num / den` as an exact rational. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// The integer `k` as a rational.
pub fn int(k: i64) -> Rational {
    Rational::from_integer(BigInt::from(k))
}

/// Exact binomial coefficient `C(n, i)`; zero when `i > n`.
pub fn binomial(n: u64, i: u64) -> Rational {
    Rational::from_integer(binomial_int(n, i))
}

pub(crate) fn binomial_int(n: u64, i: u64) -> BigInt {
    if i > n {
        return BigInt::zero();
    }
    let k = i.min(n - i);
    let mut acc = BigUint::one();
    for j in 0..k {
        acc *= n - j;
        acc /= j + 1;
    }
    BigInt::from(acc)
}

/// `k!` as a big integer.
pub(crate) fn factorial_int(k: u64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, j| acc * j)
}

/// Sign of a rational as `-1`, `0` or `+1`.
pub fn sign(x: &Rational) -> i8 {
    match x.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Nearest `f64` to a rational (infinite when out of range).
pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        if x.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Exact rational value of a finite `f64`.
pub fn from_f64(x: f64) -> Result<Rational> {
    Rational::from_float(x).ok_or_else(|| Error::domain(format!("{x} is not a finite number")))
}

/// `10^-k`.
pub fn pow10_neg(k: u32) -> Rational {
    Rational::new(BigInt::one(), num_traits::pow(BigInt::from(10), k as usize))
}

/// Parses `p/q`, an integer, or a plain decimal such as `1.75`, exactly.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::domain(format!("cannot parse {s:?} as an exact rational"));
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(Error::domain("zero denominator"));
        }
        return Ok(Rational::new(p, q));
    }
    let (mantissa, exponent) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let all: BigInt = format!("{whole}{frac}").parse().map_err(|_| bad())?;
    let scale = exponent - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut value = if scale >= 0 {
        Rational::from_integer(all * num_traits::pow(ten, scale as usize))
    } else {
        Rational::new(all, num_traits::pow(ten, (-scale) as usize))
    };
    if negative {
        value = -value;
    }
    Ok(value)
}

/// Dyadic enclosure `lo ≤ √x ≤ hi` of the square root of a non-negative
/// rational with `hi - lo ≤ 2^-bits`. Returns equal bounds when the square
/// root is itself rational.
pub fn sqrt_enclosure(x: &Rational, bits: u32) -> (Rational, Rational) {
    assert!(!x.is_negative(), "square root of a negative rational");
    if let Some(r) = exact_sqrt(x) {
        return (r.clone(), r);
    }
    // floor(sqrt(x * 4^bits)) / 2^bits
    let scale = BigInt::one() << (2 * bits as usize);
    let scaled = (x.numer() * &scale).div_floor(x.denom());
    let root = scaled.sqrt();
    let den = BigInt::one() << bits as usize;
    let lo = Rational::new(root.clone(), den.clone());
    let hi = Rational::new(root + 1, den);
    (lo, hi)
}

/// `√x` when it is rational.
pub fn exact_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// The rational with the smallest denominator in the closed interval
/// `[lo, hi]` (ties broken toward the smaller numerator magnitude), found by
/// a continued-fraction walk down the Stern–Brocot tree.
pub fn simplest_in(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo <= hi);
    if lo.is_negative() && hi.is_positive() || lo.is_zero() || hi.is_zero() {
        return Rational::zero();
    }
    if hi.is_negative() {
        return -simplest_in(&-hi, &-lo);
    }
    simplest_positive(lo, hi)
}

fn simplest_positive(lo: &Rational, hi: &Rational) -> Rational {
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    if fl.clone() + Rational::one() <= *hi {
        return fl + Rational::one();
    }
    // Both in (fl, fl + 1): recurse on reciprocals of the fractional parts.
    let a = hi - &fl;
    let b = lo - &fl;
    let inner = simplest_positive(&a.recip(), &b.recip());
    fl + inner.recip()
}

/// `coeff · √radicand`, kept exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surd {
    pub coeff: Rational,
    pub radicand: u64,
}

impl Surd {
    pub fn new(coeff: Rational, radicand: u64) -> Self {
        Surd { coeff, radicand }
    }

    /// The value as a rational when the radicand is a perfect square.
    pub fn exact(&self) -> Option<Rational> {
        let r = exact_sqrt(&Rational::from_integer(BigInt::from(self.radicand)))?;
        Some(&self.coeff * r)
    }

    pub fn to_f64(&self) -> f64 {
        match self.exact() {
            Some(r) => to_f64(&r),
            None => to_f64(&self.coeff) * (self.radicand as f64).sqrt(),
        }
    }

    pub fn sign(&self) -> i8 {
        sign(&self.coeff)
    }
}

impl std::fmt::Display for Surd {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.exact() {
            Some(r) => write!(f, "{r}"),
            None => write!(f, "{}*sqrt({})", self.coeff, self.radicand),
        }
    }
}

/// Midpoint of two rationals.
pub(crate) fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / Rational::from_integer(BigInt::from(2))
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(5, 0), int(1));
        assert_eq!(binomial(4, 2), int(6));
        assert_eq!(binomial(7, 3), int(35));
        assert_eq!(binomial(3, 5), int(0));
        assert_eq!(binomial(0, 0), int(1));
    }

    #[test]
    fn binomial_row_sums_to_power_of_two() {
        for n in 0..40u64 {
            let s: Rational = (0..=n).map(|i| binomial(n, i)).sum();
            assert_eq!(s, Rational::from_integer(BigInt::one() << n as usize));
        }
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("4/3").unwrap(), rat(4, 3));
        assert_eq!(parse_rational(" -6/4 ").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("1.75").unwrap(), rat(7, 4));
        assert_eq!(parse_rational("2").unwrap(), int(2));
        assert_eq!(parse_rational("1e-3").unwrap(), rat(1, 1000));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1.2.3").is_err());
    }

    #[test]
    fn sqrt_enclosures_bracket() {
        let (lo, hi) = sqrt_enclosure(&int(2), 60);
        assert!(&lo * &lo <= int(2) && &hi * &hi >= int(2));
        assert!(hi - lo <= Rational::new(BigInt::one(), BigInt::one() << 60usize));
        let (lo, hi) = sqrt_enclosure(&int(9), 10);
        assert_eq!(lo, int(3));
        assert_eq!(hi, int(3));
        assert_eq!(exact_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(exact_sqrt(&rat(2, 1)), None);
    }

    #[test]
    fn simplest_rational_in_interval() {
        assert_eq!(simplest_in(&rat(13, 10), &rat(14, 10)), rat(4, 3));
        assert_eq!(simplest_in(&rat(1, 1), &rat(2, 1)), int(1));
        assert_eq!(simplest_in(&rat(11, 10), &rat(19, 10)), rat(3, 2));
        assert_eq!(simplest_in(&rat(-14, 10), &rat(-13, 10)), rat(-4, 3));
        assert_eq!(simplest_in(&rat(-1, 10), &rat(1, 10)), int(0));
        assert_eq!(simplest_in(&rat(7, 10), &rat(8, 10)), rat(3, 4));
    }

    #[test]
    fn surds() {
        assert_eq!(Surd::new(rat(-2, 3), 4).exact(), Some(rat(-4, 3)));
        assert_eq!(Surd::new(int(1), 2).exact(), None);
        assert!((Surd::new(int(3), 3).to_f64() - 3.0 * 3f64.sqrt()).abs() < 1e-15);
        assert_eq!(Surd::new(rat(3, 4), 3).to_string(), "3/4*sqrt(3)");
        assert_eq!(Surd::new(rat(-2, 3), 4).to_string(), "-4/3");
    }

    #[test]
    fn f64_round_trip_is_exact() {
        for x in [0.1, -2.5, 1e-300, 123456.789] {
            assert_eq!(to_f64(&from_f64(x).unwrap()), x);
        }
        assert!(from_f64(f64::NAN).is_err());
    }
}
