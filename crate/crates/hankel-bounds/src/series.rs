//! Truncated complex power series.
//!
//! A [`PowerSeries`] holds the Taylor coefficients a0..aN of an analytic
//! function on the unit disc. The truncation order travels with the data:
//! binary operations truncate to the shorter operand rather than padding,
//! so high-order terms are never trusted past where both inputs are known.

use num_complex::Complex64;

use crate::{Error, Result};

/// Default cutoff for the leading term in [`PowerSeries::div`].
pub const DIV_EPSILON: f64 = 1e-12;

const NORM_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<Complex64>,
}

impl PowerSeries {
    /// Series with the given coefficients a0..aN. Panics on empty or
    /// non-finite input.
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least a0");
        assert!(
            coeffs.iter().all(|c| c.re.is_finite() && c.im.is_finite()),
            "series coefficients must be finite"
        );
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&r| Complex64::new(r, 0.0)).collect())
    }

    /// Truncated Koebe function z/(1-z)^2: a_n = n.
    pub fn koebe(order: usize) -> Self {
        Self::new((0..=order).map(|n| Complex64::new(n as f64, 0.0)).collect())
    }

    /// Truncated half-plane map z/(1-z): a0 = 0, a_n = 1 for n >= 1.
    pub fn half_plane(order: usize) -> Self {
        let mut c = vec![Complex64::new(1.0, 0.0); order + 1];
        c[0] = Complex64::new(0.0, 0.0);
        Self::new(c)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient a_n; zero past the truncation order.
    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs.get(n).copied().unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// a0 = 0 and a1 = 1 within 1e-12.
    pub fn is_normalized(&self) -> bool {
        self.coeffs.len() >= 2
            && self.coeff(0).norm() <= NORM_TOL
            && (self.coeff(1) - Complex64::new(1.0, 0.0)).norm() <= NORM_TOL
    }

    /// Cauchy product truncated at min(Na, Nb).
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![Complex64::new(0.0, 0.0); n + 1];
        for (k, slot) in out.iter_mut().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..=k {
                acc += self.coeffs[j] * other.coeffs[k - j];
            }
            *slot = acc;
        }
        Self::new(out)
    }

    /// Quotient q with q * b = a up to the common truncation order, by
    /// forward substitution.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.div_with_epsilon(other, DIV_EPSILON)
    }

    pub fn div_with_epsilon(&self, other: &Self, epsilon: f64) -> Result<Self> {
        let b0 = other.coeffs[0];
        if b0.norm() <= epsilon {
            return Err(Error::DivisionBySmallLeadingTerm {
                magnitude: b0.norm(),
                epsilon,
            });
        }
        let n = self.order().min(other.order());
        let mut q = vec![Complex64::new(0.0, 0.0); n + 1];
        for k in 0..=n {
            let mut acc = self.coeffs[k];
            for j in 1..=k {
                acc -= other.coeffs[j] * q[k - j];
            }
            q[k] = acc / b0;
        }
        Ok(Self::new(q))
    }

    /// Term-by-term derivative; the order drops by one (a constant maps to
    /// the zero series of order 0).
    pub fn differentiate(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self::new(vec![Complex64::new(0.0, 0.0)]);
        }
        Self::new(
            (1..self.coeffs.len())
                .map(|k| self.coeffs[k] * k as f64)
                .collect(),
        )
    }

    /// Rotation normalization e^{-i theta} f(e^{i theta} z) of a normalized
    /// series: a_n picks up the phase e^{i (n-1) theta}.
    pub fn rotate(&self, theta: f64) -> Result<Self> {
        if !self.is_normalized() {
            return Err(Error::NotNormalized);
        }
        Ok(Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, &a)| {
                    if n == 0 {
                        a
                    } else {
                        a * Complex64::from_polar(1.0, (n as f64 - 1.0) * theta)
                    }
                })
                .collect(),
        ))
    }

    /// Horner evaluation of the truncated polynomial.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Coefficients of f(z)/z for a series with a0 = 0.
    pub(crate) fn shift_down(&self) -> Self {
        debug_assert!(self.coeff(0).norm() <= NORM_TOL);
        Self::new(self.coeffs[1..].to_vec())
    }

    pub fn to_pairs(&self) -> Vec<[f64; 2]> {
        self.coeffs.iter().map(|c| [c.re, c.im]).collect()
    }

    pub fn from_pairs(pairs: &[[f64; 2]]) -> Self {
        Self::new(pairs.iter().map(|p| Complex64::new(p[0], p[1])).collect())
    }
}
