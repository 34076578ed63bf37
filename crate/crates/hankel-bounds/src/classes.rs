//! Starlike and convex functions of order alpha/2 - 1.
//!
//! Membership rewrites as z f'/f = (alpha/2 - 1) + beta P(z) for starlike
//! and z f''/f' = beta (P(z) - 1) for convex, with beta = 2 - alpha/2 and
//! P in the Caratheodory class. Equating coefficients turns either relation
//! into a recursion from (c_n) to (a_n); for n <= 4 the recursions restrict
//! to the familiar closed forms used by the theorem proofs.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::caratheodory::CoefficientSequence;
use crate::series::PowerSeries;
use crate::{Error, Result};

/// Class parameter alpha in [1,2] with the derived factor beta = 2 - alpha/2,
/// so beta in [1, 1.5]. The class order is alpha/2 - 1 in [-1/2, 0].
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct OrderParam {
    alpha: f64,
    beta: f64,
}

impl OrderParam {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(1.0..=2.0).contains(&alpha) {
            return Err(Error::AlphaOutOfRange(alpha));
        }
        Ok(Self {
            alpha,
            beta: 2.0 - alpha / 2.0,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// The class order alpha/2 - 1.
    pub fn order(&self) -> f64 {
        self.alpha / 2.0 - 1.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FunctionClass {
    Starlike,
    Convex,
}

impl std::fmt::Display for FunctionClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FunctionClass::Starlike => write!(f, "starlike"),
            FunctionClass::Convex => write!(f, "convex"),
        }
    }
}

impl std::str::FromStr for FunctionClass {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "starlike" => Ok(FunctionClass::Starlike),
            "convex" => Ok(FunctionClass::Convex),
            other => Err(format!("unknown class '{other}', expected starlike|convex")),
        }
    }
}

fn require_coefficients(c: &CoefficientSequence, n_max: usize) -> Result<()> {
    assert!(n_max >= 2);
    if c.len() < n_max - 1 {
        return Err(Error::InsufficientCoefficients {
            needed: n_max - 1,
            have: c.len(),
        });
    }
    Ok(())
}

/// Taylor coefficients of f in S*_alpha from a Caratheodory prefix:
/// a_n = (beta / (n-1)) * sum_{k=1}^{n-1} c_k a_{n-k}, a_1 = 1.
pub fn starlike_coefficients(
    c: &CoefficientSequence,
    p: &OrderParam,
    n_max: usize,
) -> Result<PowerSeries> {
    require_coefficients(c, n_max)?;
    let beta = p.beta();
    let mut a = vec![Complex64::new(0.0, 0.0); n_max + 1];
    a[1] = Complex64::new(1.0, 0.0);
    for n in 2..=n_max {
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 1..n {
            acc += c.c(k) * a[n - k];
        }
        a[n] = acc * (beta / (n as f64 - 1.0));
    }
    Ok(PowerSeries::new(a))
}

/// Taylor coefficients of f in C_alpha:
/// n (n-1) a_n = beta * sum_{m=1}^{n-1} m a_m c_{n-m}, a_1 = 1.
pub fn convex_coefficients(
    c: &CoefficientSequence,
    p: &OrderParam,
    n_max: usize,
) -> Result<PowerSeries> {
    require_coefficients(c, n_max)?;
    let beta = p.beta();
    let mut a = vec![Complex64::new(0.0, 0.0); n_max + 1];
    a[1] = Complex64::new(1.0, 0.0);
    for n in 2..=n_max {
        let mut acc = Complex64::new(0.0, 0.0);
        for m in 1..n {
            acc += m as f64 * a[m] * c.c(n - m);
        }
        a[n] = acc * (beta / (n as f64 * (n as f64 - 1.0)));
    }
    Ok(PowerSeries::new(a))
}

pub fn class_coefficients(
    cls: FunctionClass,
    c: &CoefficientSequence,
    p: &OrderParam,
    n_max: usize,
) -> Result<PowerSeries> {
    match cls {
        FunctionClass::Starlike => starlike_coefficients(c, p, n_max),
        FunctionClass::Convex => convex_coefficients(c, p, n_max),
    }
}

/// Alexander transform a_n -> n a_n (i.e. f -> z f'), mapping C_alpha
/// onto S*_alpha.
pub fn alexander(f: &PowerSeries) -> Result<PowerSeries> {
    if !f.is_normalized() {
        return Err(Error::NotNormalized);
    }
    Ok(PowerSeries::new(
        (0..=f.order()).map(|n| f.coeff(n) * n as f64).collect(),
    ))
}

/// Minimum over a circle grid of Re{z f'/f} - (alpha/2 - 1) (starlike) or
/// Re{1 + z f''/f'} - (alpha/2 - 1) (convex). The minimum of a harmonic
/// function over |z| <= r is attained on |z| = r, so a circle grid at the
/// outer radius suffices. A positive margin certifies membership at this
/// truncation order.
pub fn membership_margin(
    f: &PowerSeries,
    cls: FunctionClass,
    p: &OrderParam,
    radius: f64,
    samples: usize,
) -> Result<f64> {
    if !(radius > 0.0 && radius <= 0.9) {
        return Err(Error::RadiusOutOfRange(radius));
    }
    if !f.is_normalized() {
        return Err(Error::NotNormalized);
    }
    if f.order() < 60 {
        return Err(Error::InsufficientOrder {
            needed: 60,
            have: f.order(),
        });
    }
    // Both quotients as truncated series with the shared factor z removed.
    let quotient = match cls {
        FunctionClass::Starlike => {
            // z f'/f = f' / (f/z)
            f.differentiate().div(&f.shift_down())?
        }
        FunctionClass::Convex => {
            // 1 + z f''/f' = 1 + (z u') / u with u = f'
            let u = f.differentiate();
            let zu2 = PowerSeries::new(
                (0..=u.order()).map(|k| u.coeff(k) * k as f64).collect(),
            );
            let mut q = zu2.div(&u)?;
            let mut coeffs = q.coeffs().to_vec();
            coeffs[0] += Complex64::new(1.0, 0.0);
            q = PowerSeries::new(coeffs);
            q
        }
    };
    let rho = p.order();
    let mut min = f64::INFINITY;
    for k in 0..samples {
        let theta = std::f64::consts::TAU * k as f64 / samples as f64;
        let z = Complex64::from_polar(radius, theta);
        min = min.min(quotient.evaluate(z).re - rho);
    }
    Ok(min)
}
