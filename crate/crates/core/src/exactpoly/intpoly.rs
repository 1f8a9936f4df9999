//! Primitive integer polynomials used for fast exact sign evaluation and
//! Sturm sequences.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::Polynomial;
use super::rational::Rational;

/// Ascending integer coefficients with trailing zeros stripped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntPoly {
    pub(crate) c: Vec<BigInt>,
}

impl IntPoly {
    pub(crate) fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        IntPoly { c }
    }

    /// Positive multiple of `p` with coprime integer coefficients.
    pub(crate) fn from_rational(p: &Polynomial) -> Self {
        let lcm = p
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let c = p
            .coeffs()
            .iter()
            .map(|x| x.numer() * (&lcm / x.denom()))
            .collect();
        IntPoly::new(c).primitive()
    }

    pub(crate) fn to_rational(&self) -> Polynomial {
        Polynomial::new(self.c.iter().cloned().map(Rational::from_integer).collect())
    }

    pub(crate) fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for x in &self.c {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides by the positive content, keeping the sign.
    pub(crate) fn primitive(self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self;
        }
        IntPoly::new(self.c.into_iter().map(|x| x / &g).collect())
    }

    pub(crate) fn derivative(&self) -> Self {
        IntPoly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, x)| x * BigInt::from(k))
                .collect(),
        )
    }

    /// Exact sign of the value at `x`.
    pub(crate) fn sign_at(&self, x: &Rational) -> i8 {
        let Some(d) = self.degree() else { return 0 };
        // q^d p(x) = sum c_i num^i den^(d-i), with den > 0
        let num = x.numer();
        let den = x.denom();
        let mut acc = self.c[d].clone();
        if den.is_one() {
            for k in (0..d).rev() {
                acc = acc * num + &self.c[k];
            }
        } else {
            let mut qpow = BigInt::one();
            for k in (0..d).rev() {
                qpow *= den;
                acc = acc * num + &self.c[k] * &qpow;
            }
        }
        sign_of(&acc)
    }

    /// `lc(b)^(δ+1) a mod b`, the pseudo-remainder.
    pub(crate) fn prem(&self, b: &IntPoly) -> IntPoly {
        let db = b.degree().expect("nonzero divisor");
        let lc = &b.c[db];
        let mut r = self.c.clone();
        let Some(da) = self.degree() else { return IntPoly::new(r) };
        if da < db {
            return self.clone();
        }
        let delta = da - db;
        let mut steps = 0;
        while r.len() > db && !r.is_empty() {
            let top = r.len() - 1;
            let f = r[top].clone();
            for x in r.iter_mut() {
                *x *= lc;
            }
            let shift = top - db;
            for (j, bc) in b.c.iter().enumerate() {
                r[shift + j] -= &f * bc;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
            steps += 1;
        }
        // pad the multiplier to exactly delta + 1 factors of lc
        if steps < delta + 1 {
            let extra = num_traits::pow(lc.clone(), delta + 1 - steps);
            for x in r.iter_mut() {
                *x *= &extra;
            }
        }
        IntPoly::new(r)
    }

    /// Remainder sign-adjusted for a Sturm sequence: a positive multiple of
    /// `-(a mod b)`, made primitive.
    pub(crate) fn sturm_next(a: &IntPoly, b: &IntPoly) -> IntPoly {
        let db = b.degree().expect("nonzero divisor");
        let da = a.degree().unwrap_or(0);
        let delta = da.saturating_sub(db);
        let r = a.prem(b);
        let lc_neg = b.c[db].is_negative();
        let flip = !(lc_neg && (delta + 1) % 2 == 1);
        let r = if flip {
            IntPoly::new(r.c.into_iter().map(|x| -x).collect())
        } else {
            r
        };
        r.primitive()
    }

    /// `p(x + k)` for an integer shift.
    pub(crate) fn taylor_shift_int(&self, k: &BigInt) -> IntPoly {
        let mut a = self.c.clone();
        let n = a.len();
        if k.is_zero() {
            return self.clone();
        }
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &a[j + 1] * k;
                a[j] += t;
            }
        }
        IntPoly::new(a)
    }
}

impl IntPoly {
    /// Descartes bound on the number of roots in the open interval `(0, 1)`:
    /// sign variations of `(1 + y)^d p(1 / (1 + y))`. Zero certifies that
    /// there are none, one that there is exactly one.
    pub(crate) fn descartes_unit(&self) -> usize {
        let mut a: Vec<BigInt> = self.c.iter().rev().cloned().collect();
        while a.last().is_some_and(Zero::is_zero) {
            a.pop();
        }
        let n = a.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let (lo, hi) = a.split_at_mut(j + 1);
                lo[j] += &hi[0];
            }
        }
        let mut count = 0;
        let mut prev = 0i8;
        for x in &a {
            let s = sign_of(x);
            if s != 0 {
                if prev != 0 && s != prev {
                    count += 1;
                }
                prev = s;
            }
        }
        count
    }
}

pub(crate) fn sign_of(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_negative() {
        -1
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rational::{int, rat};
    use std::ops::Mul;

    #[test]
    fn primitive_conversion_keeps_sign() {
        let p = Polynomial::new(vec![rat(-1, 2), rat(3, 4), rat(-3, 2)]);
        let q = IntPoly::from_rational(&p);
        assert_eq!(q.c, vec![BigInt::from(-2), BigInt::from(3), BigInt::from(-6)]);
        for x in [rat(1, 3), int(-5), rat(17, 4), int(0)] {
            let v = p.eval(&x);
            assert_eq!(q.sign_at(&x), crate::exactpoly::rational::sign(&v));
        }
    }

    #[test]
    fn pseudo_remainder_is_a_positive_multiple_when_lc_positive() {
        let a = IntPoly::new([1, 0, -3, 2].map(BigInt::from).to_vec());
        let b = IntPoly::new([5, 2].map(BigInt::from).to_vec());
        let r = a.prem(&b);
        let (_, exact) = a.to_rational().div_rem(&b.to_rational()).unwrap();
        let scale = Rational::from_integer(num_traits::pow(BigInt::from(2), 3));
        assert_eq!(r.to_rational(), exact.scale(&scale));
    }

    #[test]
    fn sturm_next_matches_negated_remainder_sign() {
        let a = IntPoly::new([3, -1, 4, 1, -5].map(BigInt::from).to_vec());
        let b = IntPoly::new([2, 0, -7].map(BigInt::from).to_vec());
        let next = IntPoly::sturm_next(&a, &b);
        let (_, r) = a.to_rational().div_rem(&b.to_rational()).unwrap();
        let neg = -r;
        for x in [int(-3), rat(1, 2), int(2)] {
            assert_eq!(next.sign_at(&x), crate::exactpoly::rational::sign(&neg.eval(&x)));
        }
    }

    #[test]
    fn descartes_on_unit_interval() {
        // (4y - 1)(4y - 3)(y - 2): two roots inside (0, 1)
        let q = IntPoly::from_rational(
            &(&Polynomial::from_ints(&[-1, 4]) * &Polynomial::from_ints(&[-3, 4]))
                .mul(Polynomial::from_ints(&[-2, 1])),
        );
        assert_eq!(q.descartes_unit(), 2);
        // y^2 + 1 and y - 2 have none
        assert_eq!(IntPoly::new([1, 0, 1].map(BigInt::from).to_vec()).descartes_unit(), 0);
        assert_eq!(IntPoly::new([-2, 1].map(BigInt::from).to_vec()).descartes_unit(), 0);
        // y (y - 1/2): the root at 0 is excluded
        assert_eq!(IntPoly::new([0, -1, 2].map(BigInt::from).to_vec()).descartes_unit(), 1);
    }

    #[test]
    fn integer_taylor_shift() {
        let p = IntPoly::new([1, -2, 0, 3].map(BigInt::from).to_vec());
        let s = p.taylor_shift_int(&BigInt::from(2));
        for x in [int(0), int(1), rat(-1, 3)] {
            assert_eq!(s.to_rational().eval(&x), p.to_rational().eval(&(&x + int(2))));
        }
    }
}
