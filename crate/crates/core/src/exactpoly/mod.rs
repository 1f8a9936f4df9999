//! Exact polynomial arithmetic and certified real-root isolation.

mod intpoly;
pub mod piecewise;
pub mod poly;
pub mod rational;
pub mod sign;
pub mod sturm;

pub use piecewise::PiecewisePolynomial;
pub use poly::Polynomial;
pub use rational::Rational;
pub use sign::{certified_sign, sign_changes, sign_pattern, RealPoint, SignRun};
pub use sturm::{isolate_roots, refine_root, IsolatingInterval, SturmChain};
