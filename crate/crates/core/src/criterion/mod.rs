//! Criterion polynomials and local extremality classification.

pub mod classify;
pub mod known;
pub mod weights;

pub use classify::{
    alt_sum_sign, classify, decide, default_eps, t_of_z, t_of_z_exact, threshold_z, z_of_t,
    Classifier, Extremality, ExtremalityKind, SubdiagonalSpec,
};
pub use known::{known_pieces, Criterion, KnownPiece};
pub use weights::{build_s1, build_s2, eval_sum, p_poly};
