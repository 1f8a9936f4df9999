//! Normal directions and section queries.

use crate::error::{Error, Result};

/// A non-zero normal vector `a ∈ [0, ∞)^d`.
#[derive(Clone, Debug, PartialEq)]
pub struct Direction {
    a: Vec<f64>,
}

impl Direction {
    pub fn new(a: Vec<f64>) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::domain("direction needs at least one coordinate"));
        }
        if let Some(x) = a.iter().find(|x| !x.is_finite() || **x < 0.0) {
            return Err(Error::domain(format!(
                "coordinate {x} is not a finite non-negative number"
            )));
        }
        if a.iter().all(|&x| x == 0.0) {
            return Err(Error::domain("direction must be non-zero"));
        }
        Ok(Direction { a })
    }

    /// The unit vector with `n` coordinates `1/√n` followed by `d − n` zeros.
    pub fn subdiagonal(n: u32, d: u32) -> Result<Self> {
        if n == 0 || n > d {
            return Err(Error::domain(format!("need 1 ≤ n ≤ d, got n = {n}, d = {d}")));
        }
        let x = 1.0 / f64::from(n).sqrt();
        let mut a = vec![x; n as usize];
        a.resize(d as usize, 0.0);
        Self::new(a)
    }

    pub fn coords(&self) -> &[f64] {
        &self.a
    }

    pub fn dim(&self) -> usize {
        self.a.len()
    }

    /// Number of non-zero coordinates.
    pub fn active(&self) -> usize {
        self.a.iter().filter(|&&x| x != 0.0).count()
    }

    pub fn active_coords(&self) -> Vec<f64> {
        self.a.iter().copied().filter(|&x| x != 0.0).collect()
    }

    pub fn norm(&self) -> f64 {
        self.a.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Coordinate sum `σ(a)`.
    pub fn sigma(&self) -> f64 {
        self.a.iter().sum()
    }

    /// Product of the non-zero coordinates `π(a)`.
    pub fn pi(&self) -> f64 {
        self.a.iter().filter(|&&x| x != 0.0).product()
    }

    pub fn scaled(&self, c: f64) -> Result<Self> {
        Self::new(self.a.iter().map(|x| x * c).collect())
    }

    pub fn normalized(&self) -> Self {
        let n = self.norm();
        Direction {
            a: self.a.iter().map(|x| x / n).collect(),
        }
    }
}

/// The hyperplane `a·x = b` with `b = σ(a)/2 − t`.
#[derive(Clone, Debug, PartialEq)]
pub struct SectionQuery {
    pub direction: Direction,
    pub t: f64,
}

impl SectionQuery {
    /// Requires `0 ≤ t < ‖a‖√d/2`, which is `t < √d/2` for unit `a`.
    pub fn new(direction: Direction, t: f64) -> Result<Self> {
        let limit = direction.norm() * (direction.dim() as f64).sqrt() / 2.0;
        if !t.is_finite() || t < 0.0 || t >= limit {
            return Err(Error::domain(format!(
                "t = {t} must satisfy 0 ≤ t < √d/2 = {limit} (for unit a)"
            )));
        }
        Ok(SectionQuery { direction, t })
    }

    pub fn b(&self) -> f64 {
        self.direction.sigma() / 2.0 - self.t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_quantities() {
        let a = Direction::new(vec![3.0, 0.0, 4.0]).unwrap();
        assert_eq!(a.active(), 2);
        assert_eq!(a.norm(), 5.0);
        assert_eq!(a.sigma(), 7.0);
        assert_eq!(a.pi(), 12.0);
        let s = Direction::subdiagonal(4, 6).unwrap();
        assert_eq!(s.coords(), &[0.5, 0.5, 0.5, 0.5, 0.0, 0.0]);
    }

    #[test]
    fn rejects_bad_directions_and_distances() {
        assert!(Direction::new(vec![0.0, 0.0]).is_err());
        assert!(Direction::new(vec![-1.0, 1.0]).is_err());
        assert!(Direction::new(vec![f64::NAN]).is_err());
        let d = Direction::subdiagonal(4, 4).unwrap();
        assert!(SectionQuery::new(d.clone(), 1.0).is_err());
        assert!(SectionQuery::new(d.clone(), -0.1).is_err());
        assert_eq!(SectionQuery::new(d, 0.5).unwrap().b(), 0.5);
    }
}
