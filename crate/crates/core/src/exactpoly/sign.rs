//! Certified sign patterns of piecewise polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::piecewise::PiecewisePolynomial;
use super::rational::{midpoint, to_f64, Rational};
use super::sturm::{isolate_local, IsolatingInterval, LocalPoly};
use crate::error::Result;

/// A real number known either exactly or as the unique root in an
/// isolating interval.
#[derive(Clone, Debug)]
pub enum RealPoint {
    Exact(Rational),
    Algebraic(IsolatingInterval),
}

impl RealPoint {
    /// The exact value when it is rational and known.
    pub fn exact_value(&self) -> Option<&Rational> {
        match self {
            RealPoint::Exact(r) => Some(r),
            RealPoint::Algebraic(iv) => iv.exact(),
        }
    }

    pub fn approx(&self) -> f64 {
        match self {
            RealPoint::Exact(r) => to_f64(r),
            RealPoint::Algebraic(iv) => iv.value_f64(),
        }
    }

    /// Closed rational bounds on the point.
    pub fn bounds(&self) -> (Rational, Rational) {
        match self {
            RealPoint::Exact(r) => (r.clone(), r.clone()),
            RealPoint::Algebraic(iv) => match iv.exact() {
                Some(r) => (r.clone(), r.clone()),
                None => (iv.lo().clone(), iv.hi().clone()),
            },
        }
    }

    fn upper_edge(&self) -> Rational {
        match self {
            RealPoint::Exact(r) => r.clone(),
            RealPoint::Algebraic(iv) => iv.hi().clone(),
        }
    }

    fn lower_edge(&self) -> Rational {
        match self {
            RealPoint::Exact(r) => r.clone(),
            RealPoint::Algebraic(iv) => iv.lo().clone(),
        }
    }
}

impl fmt::Display for RealPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact_value() {
            Some(r) => write!(f, "{r}"),
            None => write!(f, "~{:.12}", self.approx()),
        }
    }
}

/// A maximal stretch on which the function has constant sign. Zeros appear
/// as runs with `start == end` and sign `0`.
#[derive(Clone, Debug)]
pub struct SignRun {
    pub start: RealPoint,
    pub end: RealPoint,
    pub sign: i8,
}

impl SignRun {
    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }
}

/// Signs of `f` on the half-open domain `(lower, upper]`, from left to right.
///
/// Each piece is rewritten on its own interval. Descartes' rule settles
/// pieces with zero or one root; the rest go through Sturm isolation. Zeros
/// at breakpoints are found by exact evaluation.
pub fn sign_pattern(f: &PiecewisePolynomial) -> Result<Vec<SignRun>> {
    f.check_nondegenerate()?;
    let mut runs: Vec<SignRun> = Vec::new();
    let last = f.pieces().len() - 1;
    for (k, piece) in f.pieces().iter().enumerate() {
        let (a, b) = f.piece_bounds(k);
        let local = LocalPoly::on_interval(piece, a, b);
        let exact_width = (b - a) / Rational::from_integer(BigInt::one() << 40usize);
        let roots: Vec<IsolatingInterval> = isolate_local(&local, a, b)?
            .into_iter()
            .map(|iv| iv.refine(&exact_width))
            .collect();
        let mut prev = RealPoint::Exact(a.clone());
        let mut points: Vec<RealPoint> = roots.into_iter().map(RealPoint::Algebraic).collect();
        points.push(RealPoint::Exact(b.clone()));
        let count = points.len();
        for (i, p) in points.into_iter().enumerate() {
            let sample = midpoint(&prev.upper_edge(), &p.lower_edge());
            let s = local.sign_at(&sample);
            debug_assert!(s != 0);
            push_segment(&mut runs, prev.clone(), p.clone(), s);
            if i + 1 < count {
                runs.push(SignRun { start: p.clone(), end: p.clone(), sign: 0 });
            }
            prev = p;
        }
        // the value at the right breakpoint belongs to the next piece,
        // except at the end of the domain
        let at_b = if k == last { local.sign_at(b) } else { f.pieces()[k + 1].sign_at(b) };
        if at_b == 0 {
            let p = RealPoint::Exact(b.clone());
            runs.push(SignRun { start: p.clone(), end: p, sign: 0 });
        }
    }
    Ok(runs)
}

/// Sign of `f` on the closed interval `[lo, hi]` when it is certified
/// constant and non-zero; `Some(0)` when `lo == hi` is an exact zero; `None`
/// when a zero may lie in the interval.
pub fn certified_sign(f: &PiecewisePolynomial, lo: &Rational, hi: &Rational) -> Result<Option<i8>> {
    if lo == hi {
        return Ok(Some(f.sign_at(lo)?));
    }
    f.piece_index(lo)?;
    f.piece_index(hi)?;
    let mut sign = None;
    for k in f.pieces_meeting(lo, hi) {
        let (a, b) = f.piece_bounds(k);
        let l = if a > lo { a } else { lo };
        let h = if b < hi { b } else { hi };
        let piece = &f.pieces()[k];
        let s = if l == h {
            piece.sign_at(l)
        } else {
            let sl = piece.sign_at(l);
            let sh = piece.sign_at(h);
            if sl == 0 || sl != sh || LocalPoly::on_interval(piece, l, h).q.descartes_unit() != 0 {
                return Ok(None);
            }
            sl
        };
        if s == 0 || sign.is_some_and(|x| x != s) {
            return Ok(None);
        }
        sign = Some(s);
    }
    Ok(sign)
}

fn push_segment(runs: &mut Vec<SignRun>, start: RealPoint, end: RealPoint, sign: i8) {
    if let Some(prev) = runs.last_mut() {
        if prev.sign == sign {
            prev.end = end;
            return;
        }
    }
    runs.push(SignRun { start, end, sign });
}

/// Points where the sign flips between consecutive non-zero runs, with the
/// sign before and after. A zero with the same sign on both sides is not a
/// change.
pub fn sign_changes(runs: &[SignRun]) -> Vec<(RealPoint, i8, i8)> {
    let mut out = Vec::new();
    let mut last_nonzero: Option<(i8, RealPoint)> = None;
    let mut pending_zero: Option<RealPoint> = None;
    for r in runs {
        if r.sign == 0 {
            pending_zero.get_or_insert_with(|| r.start.clone());
            continue;
        }
        if let Some((s, end)) = &last_nonzero {
            if *s != r.sign {
                let at = pending_zero.clone().unwrap_or_else(|| end.clone());
                out.push((at, *s, r.sign));
            }
        }
        pending_zero = None;
        last_nonzero = Some((r.sign, r.end.clone()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::poly::Polynomial;
    use crate::exactpoly::rational::{int, rat};

    #[test]
    fn cubic_with_breakpoint_root() {
        // (z - 1)(z - 5/2)(z - 3/2)... on (0, 3] split at 1 and 2
        let p = Polynomial::from_ints(&[-1, 1]);
        let q = Polynomial::new(vec![rat(-5, 2), int(1)]);
        let r = Polynomial::new(vec![rat(-3, 2), int(1)]);
        let f = &(&p * &q) * &r;
        let pw = PiecewisePolynomial::new(
            vec![int(0), int(1), int(2), int(3)],
            vec![f.clone(), f.clone(), f],
        )
        .unwrap();
        let runs = sign_pattern(&pw).unwrap();
        let signs: Vec<i8> = runs.iter().map(|r| r.sign).collect();
        assert_eq!(signs, vec![-1, 0, 1, 0, -1, 0, 1]);
        let zeros: Vec<Rational> = runs
            .iter()
            .filter(|r| r.is_zero())
            .map(|r| r.start.exact_value().cloned().unwrap())
            .collect();
        assert_eq!(zeros, vec![int(1), rat(3, 2), rat(5, 2)]);
        assert_eq!(sign_changes(&runs).len(), 3);
    }

    #[test]
    fn touching_zero_is_not_a_change() {
        let f = Polynomial::from_ints(&[1, -2, 1]); // (z - 1)^2
        let pw = PiecewisePolynomial::new(vec![int(0), int(2)], vec![f]).unwrap();
        let runs = sign_pattern(&pw).unwrap();
        assert_eq!(runs.iter().map(|r| r.sign).collect::<Vec<_>>(), vec![1, 0, 1]);
        assert!(sign_changes(&runs).is_empty());
    }

    #[test]
    fn certified_sign_on_small_intervals() {
        let f = Polynomial::from_ints(&[-2, 0, 1]); // roots ±√2
        let pw = PiecewisePolynomial::new(vec![int(0), int(1), int(2)], vec![f.clone(), f]).unwrap();
        assert_eq!(certified_sign(&pw, &rat(1, 2), &rat(13, 10)).unwrap(), Some(-1));
        assert_eq!(certified_sign(&pw, &rat(3, 2), &int(2)).unwrap(), Some(1));
        assert_eq!(certified_sign(&pw, &rat(7, 5), &rat(3, 2)).unwrap(), None);
        assert_eq!(certified_sign(&pw, &int(1), &int(1)).unwrap(), Some(-1));
        assert!(certified_sign(&pw, &int(1), &int(3)).is_err());
    }

    #[test]
    fn zero_at_domain_end() {
        let f = Polynomial::from_ints(&[-2, 1]);
        let pw = PiecewisePolynomial::new(vec![int(0), int(2)], vec![f]).unwrap();
        let runs = sign_pattern(&pw).unwrap();
        assert_eq!(runs.iter().map(|r| r.sign).collect::<Vec<_>>(), vec![-1, 0]);
    }
}
