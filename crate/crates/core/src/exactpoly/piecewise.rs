//! Piecewise polynomials over a finite list of breakpoints.

use num_traits::Zero;

use super::poly::Polynomial;
use super::rational::{to_f64, Rational};
use crate::error::{Error, Result};

/// A function given by `pieces[k]` on `[breakpoints[k], breakpoints[k + 1])`,
/// with the last piece also covering the right end of the domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewisePolynomial {
    breakpoints: Vec<Rational>,
    pieces: Vec<Polynomial>,
}

impl PiecewisePolynomial {
    /// `breakpoints` must be strictly increasing and one longer than `pieces`.
    pub fn new(breakpoints: Vec<Rational>, pieces: Vec<Polynomial>) -> Result<Self> {
        if pieces.is_empty() || breakpoints.len() != pieces.len() + 1 {
            return Err(Error::domain(format!(
                "{} breakpoints do not delimit {} pieces",
                breakpoints.len(),
                pieces.len()
            )));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::domain("breakpoints must be strictly increasing"));
        }
        Ok(PiecewisePolynomial { breakpoints, pieces })
    }

    pub fn pieces(&self) -> &[Polynomial] {
        &self.pieces
    }

    pub fn piece(&self, k: usize) -> Option<&Polynomial> {
        self.pieces.get(k)
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn lower(&self) -> &Rational {
        &self.breakpoints[0]
    }

    pub fn upper(&self) -> &Rational {
        self.breakpoints.last().expect("at least two breakpoints")
    }

    /// `[start, end]` of piece `k`.
    pub fn piece_bounds(&self, k: usize) -> (&Rational, &Rational) {
        (&self.breakpoints[k], &self.breakpoints[k + 1])
    }

    /// Index of the piece that defines the value at `z`.
    pub fn piece_index(&self, z: &Rational) -> Result<usize> {
        if z < self.lower() || z > self.upper() {
            return Err(Error::domain(format!(
                "{z} lies outside [{}, {}]",
                self.lower(),
                self.upper()
            )));
        }
        let k = self.breakpoints[1..].partition_point(|b| b <= z);
        Ok(k.min(self.pieces.len() - 1))
    }

    pub fn eval(&self, z: &Rational) -> Result<Rational> {
        Ok(self.pieces[self.piece_index(z)?].eval(z))
    }

    /// Floating-point evaluation through the piece containing `z`.
    pub fn eval_f64(&self, z: f64) -> Result<f64> {
        let zr = super::rational::from_f64(z)?;
        Ok(self.pieces[self.piece_index(&zr)?].eval_f64(z))
    }

    pub fn sign_at(&self, z: &Rational) -> Result<i8> {
        Ok(self.pieces[self.piece_index(z)?].sign_at(z))
    }

    /// Pieces whose closed interval meets `[lo, hi]`.
    pub fn pieces_meeting(&self, lo: &Rational, hi: &Rational) -> impl Iterator<Item = usize> + '_ {
        let lo = lo.clone();
        let hi = hi.clone();
        (0..self.pieces.len()).filter(move |&k| {
            let (a, b) = self.piece_bounds(k);
            *a <= hi && lo <= *b
        })
    }

    /// Fails with [`Error::DegeneratePiece`] on the first identically zero piece.
    pub fn check_nondegenerate(&self) -> Result<()> {
        for (k, p) in self.pieces.iter().enumerate() {
            if p.is_zero() {
                let (a, b) = self.piece_bounds(k);
                return Err(Error::DegeneratePiece {
                    index: k,
                    lower: a.to_string(),
                    upper: b.to_string(),
                });
            }
        }
        Ok(())
    }

    /// Largest jump between the two one-sided values at an interior
    /// breakpoint, as a float (zero for continuous functions).
    pub fn max_jump(&self) -> f64 {
        (1..self.pieces.len())
            .map(|k| {
                let b = &self.breakpoints[k];
                let jump = self.pieces[k].eval(b) - self.pieces[k - 1].eval(b);
                if jump.is_zero() {
                    0.0
                } else {
                    to_f64(&jump).abs()
                }
            })
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rational::{int, rat};

    fn tent() -> PiecewisePolynomial {
        PiecewisePolynomial::new(
            vec![int(0), int(1), int(2)],
            vec![Polynomial::z(), Polynomial::from_ints(&[2, -1])],
        )
        .unwrap()
    }

    #[test]
    fn left_closed_lookup() {
        let f = tent();
        assert_eq!(f.piece_index(&int(0)).unwrap(), 0);
        assert_eq!(f.piece_index(&rat(1, 2)).unwrap(), 0);
        assert_eq!(f.piece_index(&int(1)).unwrap(), 1);
        assert_eq!(f.piece_index(&int(2)).unwrap(), 1);
        assert!(f.piece_index(&rat(5, 2)).is_err());
        assert!(f.piece_index(&int(-1)).is_err());
        assert_eq!(f.eval(&rat(3, 2)).unwrap(), rat(1, 2));
        assert_eq!(f.max_jump(), 0.0);
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(PiecewisePolynomial::new(vec![int(0)], vec![]).is_err());
        assert!(PiecewisePolynomial::new(vec![int(1), int(0)], vec![Polynomial::one()]).is_err());
    }

    #[test]
    fn zero_piece_is_degenerate() {
        let f = PiecewisePolynomial::new(
            vec![int(0), int(1), int(2)],
            vec![Polynomial::z(), Polynomial::zero()],
        )
        .unwrap();
        assert!(matches!(
            f.check_nondegenerate(),
            Err(Error::DegeneratePiece { index: 1, .. })
        ));
    }
}
