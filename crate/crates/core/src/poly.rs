//! Polynomials with exact rational coefficients.
//!
//! Besides arithmetic and composition this module provides a rigorous
//! positivity horizon: a bound `H` such that the polynomial is strictly
//! positive at every real point `>= H` (Cauchy's root bound). Combined with a
//! finite scan this decides sign conditions like "nondecreasing for all n >= 1"
//! exactly, which is what the scaling-function and admissibility checks need.

use num_traits::{Signed, Zero};
use std::fmt;

use crate::rational::{q_int, q_usize, Q};

/// Dense polynomial, coefficients in ascending degree order, trailing zeros
/// trimmed. The zero polynomial has an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Q>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Q) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::new(vec![q_int(0), q_int(1)])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| q_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the zero polynomial is `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Q> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = q_int(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_usize(&self, n: usize) -> Q {
        self.eval(&q_usize(n))
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![q_int(0); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&q_int(-1)))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![q_int(0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &Q) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![q_int(0); k];
        out.extend(self.coeffs.iter().cloned());
        Poly::new(out)
    }

    /// Substitutes `inner` for the variable.
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Poly::constant(c.clone()));
        }
        acc
    }

    /// Cauchy bound: every real root has absolute value below the returned
    /// value, so a polynomial with positive leading coefficient is strictly
    /// positive at every point `>= positivity_horizon()`. Returns `None` when
    /// the leading coefficient is not positive (no such horizon exists), and
    /// `Some(0)` for positive constants.
    pub fn positivity_horizon(&self) -> Option<usize> {
        let lead = self.leading()?;
        if !lead.is_positive() {
            return None;
        }
        if self.coeffs.len() == 1 {
            return Some(0);
        }
        let mut max_ratio = q_int(0);
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let r = c.abs() / lead;
            if r > max_ratio {
                max_ratio = r;
            }
        }
        let bound = q_int(1) + max_ratio;
        Some(bound.ceil().to_integer().try_into().unwrap_or(usize::MAX))
    }

    /// Decides `p(n) >= 0` for every integer `n >= start`, exactly: a finite
    /// scan up to the positivity horizon plus the horizon argument for the
    /// tail. Returns the first violating integer on failure.
    pub fn nonneg_from(&self, start: usize) -> std::result::Result<(), usize> {
        if self.is_zero() {
            return Ok(());
        }
        match self.positivity_horizon() {
            Some(h) => {
                for n in start..=h.max(start) {
                    if self.eval_usize(n).is_negative() {
                        return Err(n);
                    }
                }
                Ok(())
            }
            None => {
                // Leading coefficient <= 0: eventually nonpositive, so the
                // condition can hold only for the zero polynomial (handled) or
                // fail at some finite point. Scan far enough to find it.
                let h = self.scale(&q_int(-1)).positivity_horizon().unwrap_or(0);
                for n in start..=h.max(start) {
                    if self.eval_usize(n).is_negative() {
                        return Err(n);
                    }
                }
                // Beyond h the negated polynomial is positive, i.e. p < 0.
                Err(h.max(start) + 1)
            }
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*n"),
                _ => format!("{c}*n^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn eval_and_compose() {
        // p(n) = (n+1)^2
        let p = Poly::from_i64(&[1, 2, 1]);
        assert_eq!(p.eval_usize(3), q_int(16));
        // p(n^2) = (n^2+1)^2
        let inner = Poly::from_i64(&[0, 0, 1]);
        let c = p.compose(&inner);
        assert_eq!(c.eval_usize(2), q_int(25));
        assert_eq!(c.degree(), Some(4));
    }

    #[test]
    fn horizon_is_rigorous() {
        // n^2 - 10n + 1: roots near 0.1 and 9.9, horizon must exceed them.
        let p = Poly::from_i64(&[1, -10, 1]);
        let h = p.positivity_horizon().unwrap();
        assert!(h >= 10);
        for n in h..h + 20 {
            assert!(p.eval_usize(n).is_positive());
        }
    }

    #[test]
    fn nonneg_from_decides_exactly() {
        // (n-3)^2 >= 0 everywhere
        let p = Poly::from_i64(&[9, -6, 1]);
        assert_eq!(p.nonneg_from(0), Ok(()));
        // n - 3 fails below 3
        let p = Poly::from_i64(&[-3, 1]);
        assert_eq!(p.nonneg_from(0), Err(0));
        assert_eq!(p.nonneg_from(3), Ok(()));
        // 1 - n eventually fails
        let p = Poly::from_i64(&[1, -1]);
        assert!(p.nonneg_from(0).is_err());
        // constant -1 fails at start
        let p = Poly::from_i64(&[-1]);
        assert_eq!(p.nonneg_from(5), Err(5));
    }

    #[test]
    fn display_reads_naturally() {
        let p = Poly::new(vec![q(1, 2), q_int(0), q_int(3)]);
        assert_eq!(p.to_string(), "1/2 + 3*n^2");
    }
}
