//! Sturm sequences, certified root isolation and refinement.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::intpoly::IntPoly;
use super::poly::Polynomial;
use super::rational::{midpoint, simplest_in, to_f64, Rational};
use crate::error::{Error, Result};

/// `p(z)` represented as `q((z − offset) / scale)` with integer `q`.
#[derive(Clone, Debug)]
pub(crate) struct LocalPoly {
    pub(crate) q: IntPoly,
    offset: Rational,
    scale: Rational,
}

impl LocalPoly {
    pub(crate) fn global(p: &Polynomial) -> Self {
        LocalPoly {
            q: IntPoly::from_rational(p),
            offset: Rational::zero(),
            scale: Rational::one(),
        }
    }

    /// Re-expresses `p` on `[lo, hi]` in the variable `y = (z − lo)/(hi − lo)`.
    pub(crate) fn on_interval(p: &Polynomial, lo: &Rational, hi: &Rational) -> Self {
        let scale = hi - lo;
        let shifted = if lo.is_integer() {
            IntPoly::from_rational(p).taylor_shift_int(lo.numer())
        } else {
            IntPoly::from_rational(&p.taylor_shift(lo))
        };
        // c_j w^j, cleared of the denominator of w
        let d = shifted.c.len().saturating_sub(1);
        let (wn, wd) = (scale.numer(), scale.denom());
        let mut num_pow = BigInt::one();
        let mut den_pows = vec![BigInt::one(); d + 1];
        for j in 1..=d {
            den_pows[j] = &den_pows[j - 1] * wd;
        }
        let mut coeffs = Vec::with_capacity(d + 1);
        for (j, c) in shifted.c.iter().enumerate() {
            coeffs.push(c * &num_pow * &den_pows[d - j]);
            num_pow *= wn;
        }
        LocalPoly {
            q: IntPoly::new(coeffs).primitive(),
            offset: lo.clone(),
            scale,
        }
    }

    pub(crate) fn to_local(&self, z: &Rational) -> Rational {
        if self.offset.is_zero() && self.scale.is_one() {
            z.clone()
        } else {
            (z - &self.offset) / &self.scale
        }
    }

    pub(crate) fn sign_at(&self, z: &Rational) -> i8 {
        self.q.sign_at(&self.to_local(z))
    }

    fn with_poly(&self, q: IntPoly) -> Self {
        LocalPoly {
            q,
            offset: self.offset.clone(),
            scale: self.scale.clone(),
        }
    }

    /// The polynomial back in the variable `z`.
    fn to_global(&self) -> Polynomial {
        let inv = self.scale.recip();
        let mut w = Rational::one();
        let mut coeffs = Vec::with_capacity(self.q.c.len());
        for c in &self.q.c {
            coeffs.push(Rational::from_integer(c.clone()) * &w);
            w *= &inv;
        }
        Polynomial::new(coeffs).taylor_shift(&-&self.offset)
    }
}

/// Sturm sequence of the square-free part of a polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    head: LocalPoly,
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &Polynomial) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Self::from_local(LocalPoly::global(p)))
    }

    /// Chain built in coordinates local to `[lo, hi]`, which keeps the
    /// integer coefficients small when the interval is far from the origin.
    pub fn on_interval(p: &Polynomial, lo: &Rational, hi: &Rational) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if lo >= hi {
            return Err(Error::domain(format!("empty interval ({lo}, {hi})")));
        }
        Ok(Self::from_local(LocalPoly::on_interval(p, lo, hi)))
    }

    pub(crate) fn from_local(local: LocalPoly) -> Self {
        let chain = build_chain(local.q.clone());
        let gcd = chain.last().expect("non-empty chain");
        if gcd.degree().unwrap_or(0) == 0 {
            return SturmChain { head: local, chain };
        }
        let (q, _) = local
            .q
            .to_rational()
            .div_rem(&gcd.to_rational())
            .expect("gcd is nonzero");
        let sf = IntPoly::from_rational(&q);
        SturmChain {
            head: local.with_poly(sf.clone()),
            chain: build_chain(sf),
        }
    }

    /// The square-free polynomial whose roots are counted, in the variable `z`.
    pub fn square_free(&self) -> Polynomial {
        self.head.to_global()
    }

    /// Exact sign of the square-free part at `x`.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        self.head.sign_at(x)
    }

    fn variations(&self, x: &Rational) -> usize {
        let y = self.head.to_local(x);
        let mut count = 0;
        let mut prev = 0i8;
        for q in &self.chain {
            let s = q.sign_at(&y);
            if s != 0 {
                if prev != 0 && s != prev {
                    count += 1;
                }
                prev = s;
            }
        }
        count
    }

    /// Number of distinct real roots in the open interval `(lo, hi)`.
    pub fn count_roots(&self, lo: &Rational, hi: &Rational) -> usize {
        if lo >= hi {
            return 0;
        }
        let half_open = self.variations(lo) - self.variations(hi);
        half_open - usize::from(self.sign_at(hi) == 0)
    }
}

fn build_chain(p: IntPoly) -> Vec<IntPoly> {
    let d = p.derivative();
    let mut chain = vec![p];
    if d.is_zero() {
        return chain;
    }
    chain.push(d);
    loop {
        let n = chain.len();
        let next = IntPoly::sturm_next(&chain[n - 2], &chain[n - 1]);
        if next.is_zero() {
            break;
        }
        chain.push(next);
    }
    chain
}

/// Rational interval `(lo, hi)` certified to contain exactly one simple root
/// of a square-free polynomial, with non-zero signs at both endpoints.
#[derive(Clone)]
pub struct IsolatingInterval {
    lo: Rational,
    hi: Rational,
    exact: Option<Rational>,
    sign_left: i8,
    sign_right: i8,
    int: Arc<LocalPoly>,
}

impl IsolatingInterval {
    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    /// The root itself when it is known to be rational.
    pub fn exact(&self) -> Option<&Rational> {
        self.exact.as_ref()
    }

    /// Sign of the polynomial just left of the root.
    pub fn sign_left(&self) -> i8 {
        self.sign_left
    }

    /// Sign of the polynomial just right of the root.
    pub fn sign_right(&self) -> i8 {
        self.sign_right
    }

    /// A polynomial, in the variable `z`, for which this is the only root in
    /// the interval and a simple one.
    pub fn polynomial(&self) -> Polynomial {
        self.int.to_global()
    }

    /// Exact sign of [`Self::polynomial`] at `x`.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        self.int.sign_at(x)
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// Best point estimate: the exact root, or the midpoint.
    pub fn value(&self) -> Rational {
        self.exact.clone().unwrap_or_else(|| midpoint(&self.lo, &self.hi))
    }

    pub fn value_f64(&self) -> f64 {
        to_f64(&self.value())
    }

    /// Narrows the interval until its width is at most `eps` or the root is
    /// found exactly.
    pub fn refine(&self, eps: &Rational) -> IsolatingInterval {
        let mut out = self.clone();
        if out.exact.is_some() {
            return out;
        }
        let mut last_candidate: Option<Rational> = None;
        while out.width() > *eps {
            let cand = simplest_in(&out.lo, &out.hi);
            if last_candidate.as_ref() != Some(&cand) {
                if cand > out.lo && cand < out.hi && out.int.sign_at(&cand) == 0 {
                    out.exact = Some(cand);
                    return out.tighten_exact(eps);
                }
                last_candidate = Some(cand);
            }
            let m = midpoint(&out.lo, &out.hi);
            let s = out.int.sign_at(&m);
            if s == 0 {
                out.exact = Some(m);
                return out.tighten_exact(eps);
            }
            if s == out.sign_left {
                out.lo = m;
            } else {
                out.hi = m;
            }
        }
        out
    }

    fn tighten_exact(mut self, eps: &Rational) -> IsolatingInterval {
        let r = self.exact.clone().expect("exact root");
        let two = Rational::from_integer(2.into());
        let mut half = eps / &two;
        // a simple root is isolated by any shrink of an isolating interval
        loop {
            let lo = &r - &half;
            let hi = &r + &half;
            if lo >= self.lo && hi <= self.hi {
                self.lo = lo;
                self.hi = hi;
                return self;
            }
            half /= &two;
        }
    }
}

impl fmt::Debug for IsolatingInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IsolatingInterval")
            .field("lo", &self.lo.to_string())
            .field("hi", &self.hi.to_string())
            .field("exact", &self.exact.as_ref().map(ToString::to_string))
            .field("sign_left", &self.sign_left)
            .field("sign_right", &self.sign_right)
            .finish()
    }
}

/// Isolates the distinct real roots of `p` in the open interval `(lo, hi)`,
/// in increasing order.
pub fn isolate_roots(p: &Polynomial, lo: &Rational, hi: &Rational) -> Result<Vec<IsolatingInterval>> {
    let chain = SturmChain::new(p)?;
    isolate_with(&chain, lo, hi)
}

/// Same as [`isolate_roots`] with a prebuilt chain.
pub fn isolate_with(chain: &SturmChain, lo: &Rational, hi: &Rational) -> Result<Vec<IsolatingInterval>> {
    if lo > hi {
        return Err(Error::domain(format!("empty interval ({lo}, {hi})")));
    }
    let int = Arc::new(chain.head.clone());
    let mut out = Vec::new();
    let count = chain.count_roots(lo, hi);
    split(chain, lo.clone(), hi.clone(), count, &int, &mut out);
    Ok(out)
}

/// Roots of `local` in `(lo, hi)`, the interval it was localized to.
///
/// A single Descartes sign variation with non-zero endpoint signs already
/// certifies one simple root; otherwise a Sturm chain does the isolation.
pub(crate) fn isolate_local(local: &LocalPoly, lo: &Rational, hi: &Rational) -> Result<Vec<IsolatingInterval>> {
    match local.q.descartes_unit() {
        0 => Ok(Vec::new()),
        1 => {
            let sa = local.sign_at(lo);
            let sb = local.sign_at(hi);
            if sa != 0 && sb != 0 {
                return Ok(vec![IsolatingInterval {
                    lo: lo.clone(),
                    hi: hi.clone(),
                    exact: None,
                    sign_left: sa,
                    sign_right: sb,
                    int: Arc::new(local.clone()),
                }]);
            }
            isolate_with(&SturmChain::from_local(local.clone()), lo, hi)
        }
        _ => isolate_with(&SturmChain::from_local(local.clone()), lo, hi),
    }
}

fn split(
    chain: &SturmChain,
    a: Rational,
    b: Rational,
    count: usize,
    int: &Arc<LocalPoly>,
    out: &mut Vec<IsolatingInterval>,
) {
    if count == 0 {
        return;
    }
    let sa = int.sign_at(&a);
    let sb = int.sign_at(&b);
    if count == 1 && sa != 0 && sb != 0 {
        out.push(IsolatingInterval {
            lo: a,
            hi: b,
            exact: None,
            sign_left: sa,
            sign_right: sb,
            int: int.clone(),
        });
        return;
    }
    let m = midpoint(&a, &b);
    if int.sign_at(&m) != 0 {
        let left = chain.count_roots(&a, &m);
        split(chain, a, m.clone(), left, int, out);
        split(chain, m, b, count - left, int, out);
        return;
    }
    // the midpoint is a root: bracket it tightly, then handle both sides
    let two = Rational::from_integer(2.into());
    let mut delta = (&b - &a) / Rational::from_integer(4.into());
    let (l, r, sl, sr) = loop {
        let l = &m - &delta;
        let r = &m + &delta;
        let sl = int.sign_at(&l);
        let sr = int.sign_at(&r);
        if sl != 0 && sr != 0 && chain.count_roots(&l, &r) == 1 {
            break (l, r, sl, sr);
        }
        delta /= &two;
    };
    let left = chain.count_roots(&a, &l);
    let right = chain.count_roots(&r, &b);
    split(chain, a, l.clone(), left, int, out);
    out.push(IsolatingInterval {
        lo: l,
        hi: r.clone(),
        exact: Some(m),
        sign_left: sl,
        sign_right: sr,
        int: int.clone(),
    });
    split(chain, r, b, right, int, out);
}

/// Refines an isolating interval to width `eps` and returns the root (exact
/// when rational roots are detected, otherwise the interval midpoint).
pub fn refine_root(iv: &IsolatingInterval, eps: &Rational) -> Result<Rational> {
    if eps <= &Rational::zero() {
        return Err(Error::domain("refinement tolerance must be positive"));
    }
    Ok(iv.refine(eps).value())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rational::{int, rat};

    fn from_roots(roots: &[Rational]) -> Polynomial {
        roots.iter().fold(Polynomial::one(), |acc, r| {
            &acc * &Polynomial::new(vec![-r.clone(), int(1)])
        })
    }

    #[test]
    fn counts_and_isolates_known_roots() {
        let roots = [int(-2), rat(1, 3), rat(1, 2), int(5)];
        let p = from_roots(&roots);
        let ivs = isolate_roots(&p, &int(-10), &int(10)).unwrap();
        assert_eq!(ivs.len(), 4);
        for (iv, r) in ivs.iter().zip(&roots) {
            assert!(iv.lo() < r && r < iv.hi());
            assert_eq!(refine_root(iv, &rat(1, 1_000_000)).unwrap(), *r);
        }
    }

    #[test]
    fn repeated_roots_reported_once() {
        let p = from_roots(&[int(1), int(1), int(1), int(3), int(3)]);
        let ivs = isolate_roots(&p, &int(0), &int(4)).unwrap();
        assert_eq!(ivs.len(), 2);
    }

    #[test]
    fn endpoints_are_excluded() {
        let p = from_roots(&[int(0), int(1), int(2)]);
        let ivs = isolate_roots(&p, &int(0), &int(2)).unwrap();
        assert_eq!(ivs.len(), 1);
        assert_eq!(ivs[0].exact(), Some(&int(1)));
    }

    #[test]
    fn irrational_root_refines() {
        let p = Polynomial::from_ints(&[-2, 0, 1]);
        let ivs = isolate_roots(&p, &int(0), &int(2)).unwrap();
        assert_eq!(ivs.len(), 1);
        let eps = rat(1, 1_000_000_000_000);
        let r = ivs[0].refine(&eps);
        assert!(r.width() <= eps);
        assert!(r.exact().is_none());
        assert!((r.value_f64() - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        assert!(matches!(
            isolate_roots(&Polynomial::zero(), &int(0), &int(1)),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn constant_has_no_roots() {
        let p = Polynomial::constant(int(3));
        assert!(isolate_roots(&p, &int(-1), &int(1)).unwrap().is_empty());
    }
}
