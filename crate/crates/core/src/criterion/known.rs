//! Hand-expanded low-order pieces of S1 and S2, kept as regression
//! references for the piece builder.

use serde::Serialize;

use crate::exactpoly::rational::{int, rat, Rational};
use crate::exactpoly::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Criterion {
    S1,
    S2,
}

/// Piece `piece` of criterion `which` for order `n`.
#[derive(Clone, Debug)]
pub struct KnownPiece {
    pub which: Criterion,
    pub n: u32,
    pub piece: usize,
    pub poly: Polynomial,
}

fn p(coeffs: &[Rational]) -> Polynomial {
    Polynomial::new(coeffs.to_vec())
}

fn linear(c0: Rational, c1: Rational) -> Polynomial {
    p(&[c0, c1])
}

pub fn known_pieces() -> Vec<KnownPiece> {
    use Criterion::*;
    // −(5/6)(4z² − 10z + 7)(z − 1)(z − 2)
    let s1_5a = &(&(&p(&[int(7), int(-10), int(4)]) * &linear(int(-1), int(1))) * &linear(int(-2), int(1)))
        * &Polynomial::constant(rat(-5, 6));
    // (5/2)(2z² − 10z + 13)(z − 2)(z − 3)
    let s1_5b = &(&(&p(&[int(13), int(-10), int(2)]) * &linear(int(-2), int(1))) * &linear(int(-3), int(1)))
        * &Polynomial::constant(rat(5, 2));
    let rows = vec![
        (S1, 4, 1, p(&[rat(34, 3), int(-24), int(17), int(-4)])),
        (S1, 5, 1, s1_5a),
        (S1, 5, 2, s1_5b),
        (S1, 6, 1, p(&[rat(63, 5), int(-48), int(72), int(-54), rat(81, 4), int(-3)])),
        (S1, 6, 2, p(&[rat(-2637, 5), int(1080), int(-882), int(360), rat(-147, 2), int(6)])),
        (S2, 4, 0, p(&[int(0), int(1)])),
        (S2, 4, 1, linear(int(4), int(-3))),
        (S2, 5, 1, p(&[int(-5), int(10), int(-4)])),
        (S2, 5, 2, p(&[int(35), int(-30), int(6)])),
        (S2, 6, 1, p(&[int(6), int(-18), int(18), int(-5)])),
        (S2, 6, 2, p(&[int(-114), int(162), int(-72), int(10)])),
        (S2, 7, 1, p(&[int(-7), int(28), int(-42), int(28), int(-6)])),
        (S2, 7, 2, p(&[int(329), int(-644), int(462), int(-140), int(15)])),
        (S2, 7, 3, p(&[int(-2506), int(3136), int(-1428), int(280), int(-20)])),
    ];
    rows.into_iter()
        .map(|(which, n, piece, poly)| KnownPiece { which, n, piece, poly })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criterion::{build_s1, build_s2};

    #[test]
    fn builder_reproduces_known_pieces() {
        for k in known_pieces() {
            let pw = match k.which {
                Criterion::S1 => build_s1(k.n),
                Criterion::S2 => build_s2(k.n),
            }
            .unwrap();
            assert_eq!(pw.pieces()[k.piece], k.poly, "{:?} n={} piece={}", k.which, k.n, k.piece);
        }
    }
}
