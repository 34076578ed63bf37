//! Hankel determinants H_q(n) of Taylor coefficients.
//!
//! H_q(n) is the determinant of the q x q matrix with entry (i, j) equal to
//! a_{n+i+j}. Direct cofactor formulas for q <= 3 keep the functionals the
//! theorems study free of pivoting noise; larger q falls back to LU.

use num_complex::Complex64;

use crate::linalg::determinant;
use crate::series::PowerSeries;
use crate::{Error, Result};

pub fn hankel_determinant(f: &PowerSeries, q: usize, n: usize) -> Result<Complex64> {
    assert!(q >= 1 && n >= 1);
    let needed = n + 2 * q - 2;
    if f.order() < needed {
        return Err(Error::InsufficientOrder {
            needed,
            have: f.order(),
        });
    }
    let a = |i: usize, j: usize| f.coeff(n + i + j);
    Ok(match q {
        1 => a(0, 0),
        2 => a(0, 0) * a(1, 1) - a(0, 1) * a(0, 1),
        3 => {
            a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(1, 2))
                - a(0, 1) * (a(0, 1) * a(2, 2) - a(1, 2) * a(0, 2))
                + a(0, 2) * (a(0, 1) * a(1, 2) - a(1, 1) * a(0, 2))
        }
        _ => {
            let m: Vec<Vec<Complex64>> = (0..q)
                .map(|i| (0..q).map(|j| a(i, j)).collect())
                .collect();
            determinant(m)
        }
    })
}

/// H_2(2) = a2 a4 - a3^2, the functional under study. Identical expression
/// to the q = 2 path of [`hankel_determinant`].
pub fn second_hankel(f: &PowerSeries) -> Result<Complex64> {
    if f.order() < 4 {
        return Err(Error::InsufficientOrder {
            needed: 4,
            have: f.order(),
        });
    }
    Ok(f.coeff(2) * f.coeff(4) - f.coeff(3) * f.coeff(3))
}

/// Fekete-Szego functional a3 - mu a2^2; mu = 1 is H_2(1) for normalized f.
pub fn fekete_szego(f: &PowerSeries, mu: f64) -> Result<Complex64> {
    if f.order() < 3 {
        return Err(Error::InsufficientOrder {
            needed: 3,
            have: f.order(),
        });
    }
    Ok(f.coeff(3) - mu * f.coeff(2) * f.coeff(2))
}
