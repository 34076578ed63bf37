//! Caratheodory-class coefficient data by two independent routes.
//!
//! A finite atomic [`HerglotzMeasure`] generates c_n = 2 * sum_j w_j om_j^n,
//! the moments of P(z) = sum_j w_j (1 + om_j z)/(1 - om_j z). Independently,
//! a [`SchwarzTriple`] (c1, x, z) with c1 in [0,2] and |x|, |z| <= 1
//! generates admissible (c2, c3) through the classical representation
//!
//!   2 c2 = c1^2 + (4 - c1^2) x,
//!   4 c3 = c1^3 + 2 c1 (4 - c1^2) x - c1 (4 - c1^2) x^2
//!          + 2 (4 - c1^2) (1 - |x|^2) z.
//!
//! [`toeplitz_admissible`] is the Caratheodory-Toeplitz oracle that cross-
//! checks both: a prefix c1..cN extends to a Caratheodory function iff the
//! Hermitian Toeplitz matrix with first row (2, c1, .., cN) is PSD.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::linalg::determinant;
use crate::{Error, Result};

const UNIT_TOL: f64 = 1e-12;
/// Minors down to this value still count as admissible: boundary measures
/// (few atoms) sit exactly on the PSD boundary and are the interesting cases.
pub const MINOR_TOL: f64 = 1e-9;
/// |x| above this is treated as the degenerate |x| = 1 case where z drops
/// out of the c3 formula; inputs quoted to few decimals land near but not
/// exactly on the boundary.
const DEGENERATE_X_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Atom {
    pub weight: f64,
    pub angle: f64,
}

/// Finite atomic probability measure on the unit circle, atoms at
/// om_j = e^{i angle_j}.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HerglotzMeasure {
    pub atoms: Vec<Atom>,
}

impl HerglotzMeasure {
    pub fn new(atoms: Vec<Atom>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::InvalidMeasure("needs at least one atom".into()));
        }
        if atoms.iter().any(|a| !(a.weight > 0.0) || !a.angle.is_finite()) {
            return Err(Error::InvalidMeasure(
                "weights must be positive and angles finite".into(),
            ));
        }
        let total: f64 = atoms.iter().map(|a| a.weight).sum();
        if (total - 1.0).abs() > UNIT_TOL {
            return Err(Error::InvalidMeasure(format!(
                "weights sum to {total}, expected 1"
            )));
        }
        Ok(Self { atoms })
    }

    pub fn single_atom(angle: f64) -> Self {
        Self {
            atoms: vec![Atom { weight: 1.0, angle }],
        }
    }

    /// Two conjugate atoms of weight 1/2 at e^{+-i theta} with
    /// cos(theta) = half the target c1. Realizes the boundary x = -1 case.
    pub fn conjugate_pair(cos_theta: f64) -> Self {
        let theta = cos_theta.clamp(-1.0, 1.0).acos();
        Self {
            atoms: vec![
                Atom { weight: 0.5, angle: theta },
                Atom { weight: 0.5, angle: -theta },
            ],
        }
    }
}

/// (c1, x, z) generator of admissible (c2, c3).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SchwarzTriple {
    pub c1: f64,
    pub x: Complex64,
    pub z: Complex64,
}

impl SchwarzTriple {
    pub fn new(c1: f64, x: Complex64, z: Complex64) -> Result<Self> {
        if !(-UNIT_TOL..=2.0 + UNIT_TOL).contains(&c1) {
            return Err(Error::NotRepresentable(format!("c1 = {c1} outside [0,2]")));
        }
        if x.norm() > 1.0 + UNIT_TOL || z.norm() > 1.0 + UNIT_TOL {
            return Err(Error::NotRepresentable(format!(
                "|x| = {}, |z| = {} exceed 1",
                x.norm(),
                z.norm()
            )));
        }
        Ok(Self { c1, x, z })
    }
}

/// Prefix c1..cN of a coefficient sequence; c0 = 2 is implicit.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoefficientSequence {
    c: Vec<Complex64>,
}

impl CoefficientSequence {
    pub fn new(c: Vec<Complex64>) -> Self {
        assert!(c.iter().all(|v| v.re.is_finite() && v.im.is_finite()));
        Self { c }
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    /// c_n for n >= 1; zero past the stored prefix.
    pub fn c(&self, n: usize) -> Complex64 {
        assert!(n >= 1);
        self.c.get(n - 1).copied().unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn values(&self) -> &[Complex64] {
        &self.c
    }
}

/// Moments c_n = 2 sum_j w_j om_j^n for n = 1..n_max.
pub fn herglotz_coefficients(m: &HerglotzMeasure, n_max: usize) -> Result<CoefficientSequence> {
    HerglotzMeasure::new(m.atoms.clone())?;
    assert!(n_max >= 1);
    let points: Vec<Complex64> = m
        .atoms
        .iter()
        .map(|a| Complex64::from_polar(1.0, a.angle))
        .collect();
    let mut powers = points.clone();
    let mut c = Vec::with_capacity(n_max);
    for _ in 1..=n_max {
        let moment: Complex64 = m
            .atoms
            .iter()
            .zip(&powers)
            .map(|(a, pw)| a.weight * pw)
            .sum();
        c.push(2.0 * moment);
        for (pw, p) in powers.iter_mut().zip(&points) {
            *pw *= p;
        }
    }
    Ok(CoefficientSequence::new(c))
}

/// (c2, c3) from the (c1, x, z) representation.
pub fn schwarz_to_c23(t: &SchwarzTriple) -> (Complex64, Complex64) {
    let c1 = Complex64::new(t.c1, 0.0);
    let q = Complex64::new(4.0 - t.c1 * t.c1, 0.0);
    let c2 = (c1 * c1 + q * t.x) * 0.5;
    let c3 = (c1 * c1 * c1 + 2.0 * c1 * q * t.x - c1 * q * t.x * t.x
        + 2.0 * q * (1.0 - t.x.norm_sqr()) * t.z)
        * 0.25;
    (c2, c3)
}

/// Partial inverse of [`schwarz_to_c23`]: components that the degeneracies
/// leave undetermined come back as `None`.
#[derive(Debug, Clone)]
pub struct SchwarzRecovery {
    pub c1: f64,
    pub x: Complex64,
    /// `None` when |x| = 1 kills the z term (DegenerateX).
    pub z: Option<Complex64>,
}

pub fn c_to_schwarz(c1: f64, c2: Complex64, c3: Complex64) -> Result<SchwarzRecovery> {
    let q = 4.0 - c1 * c1;
    if q.abs() <= 1e-10 {
        return Err(Error::DegenerateC1);
    }
    let x = (2.0 * c2 - c1 * c1) / q;
    if x.norm() > 1.0 + MINOR_TOL {
        return Err(Error::NotRepresentable(format!("recovered |x| = {}", x.norm())));
    }
    if x.norm() > 1.0 - DEGENERATE_X_TOL {
        return Ok(SchwarzRecovery { c1, x, z: None });
    }
    let c1c = Complex64::new(c1, 0.0);
    let numerator = 4.0 * c3 - c1c * c1c * c1c - 2.0 * c1c * q * x + c1c * q * x * x;
    let z = numerator / (2.0 * q * (1.0 - x.norm_sqr()));
    if z.norm() > 1.0 + MINOR_TOL {
        return Err(Error::NotRepresentable(format!("recovered |z| = {}", z.norm())));
    }
    Ok(SchwarzRecovery { c1, x, z: Some(z) })
}

/// Caratheodory-Toeplitz test: all leading principal minors of the
/// (N+1)x(N+1) Hermitian Toeplitz matrix with first row (2, c1, .., cN)
/// must be >= -MINOR_TOL. Returns the smallest minor found.
pub fn toeplitz_admissible(c: &CoefficientSequence) -> (bool, f64) {
    let n = c.len();
    let entry = |i: usize, j: usize| -> Complex64 {
        if j >= i {
            if j == i {
                Complex64::new(2.0, 0.0)
            } else {
                c.c(j - i)
            }
        } else {
            c.c(i - j).conj()
        }
    };
    let mut min_minor = f64::INFINITY;
    for size in 1..=n + 1 {
        let m: Vec<Vec<Complex64>> = (0..size)
            .map(|i| (0..size).map(|j| entry(i, j)).collect())
            .collect();
        let d = determinant(m);
        // Hermitian, so minors are real up to rounding.
        min_minor = min_minor.min(d.re);
    }
    (min_minor >= -MINOR_TOL, min_minor)
}

/// Deterministic random measure: k atoms, weights from the flat simplex,
/// points uniform on the circle.
pub fn random_measure(k: usize, seed: u64) -> HerglotzMeasure {
    assert!(k >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut weights: Vec<f64> = (0..k)
        .map(|_| -(1.0 - rng.gen::<f64>()).ln())
        .collect();
    let total: f64 = weights.iter().sum();
    for w in &mut weights {
        *w /= total;
    }
    // nudge rounding so the weights sum to 1 exactly
    let drift: f64 = 1.0 - weights.iter().sum::<f64>();
    weights[0] += drift;
    let atoms = weights
        .into_iter()
        .map(|weight| Atom {
            weight,
            angle: rng.gen::<f64>() * std::f64::consts::TAU,
        })
        .collect();
    HerglotzMeasure { atoms }
}

#[cfg(test)]
mod tests {
    use super::*;

    // cos(theta) at the convex stress point: c1/2 with c1^2 = 10/13
    const STRESS_COS: f64 = 0.438529;

    #[test]
    fn single_atom_moments() {
        let m = HerglotzMeasure::single_atom(0.0);
        let c = herglotz_coefficients(&m, 3).unwrap();
        for n in 1..=3 {
            assert!((c.c(n) - Complex64::new(2.0, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn two_opposite_atoms_cancel_odd_moments() {
        let m = HerglotzMeasure::new(vec![
            Atom { weight: 0.5, angle: 0.0 },
            Atom { weight: 0.5, angle: std::f64::consts::PI },
        ])
        .unwrap();
        let c = herglotz_coefficients(&m, 3).unwrap();
        assert!(c.c(1).norm() < 1e-14);
        assert!((c.c(2) - Complex64::new(2.0, 0.0)).norm() < 1e-14);
        assert!(c.c(3).norm() < 1e-14);
    }

    #[test]
    fn conjugate_pair_moments_are_cosines() {
        let m = HerglotzMeasure::conjugate_pair(STRESS_COS);
        let c = herglotz_coefficients(&m, 3).unwrap();
        let theta = STRESS_COS.acos();
        for n in 1..=3 {
            let expect = 2.0 * (n as f64 * theta).cos();
            assert!((c.c(n).re - expect).abs() < 1e-12, "n = {n}");
            assert!(c.c(n).im.abs() < 1e-14);
        }
        // the Theorem-2 stress point: c1 = sqrt(10/13), c2 = c1^2 - 2,
        // c3 = c1 (c1^2 - 3)
        let c1 = (10.0f64 / 13.0).sqrt();
        assert!((c.c(1).re - c1).abs() < 1e-6);
        assert!((c.c(2).re - (c1 * c1 - 2.0)).abs() < 1e-5);
        assert!((c.c(3).re - c1 * (c1 * c1 - 3.0)).abs() < 1e-5);
    }

    #[test]
    fn invalid_measures_rejected() {
        assert!(HerglotzMeasure::new(vec![]).is_err());
        assert!(
            HerglotzMeasure::new(vec![Atom { weight: 0.9, angle: 0.0 }]).is_err()
        );
        assert!(
            HerglotzMeasure::new(vec![Atom { weight: -1.0, angle: 0.0 }, Atom {
                weight: 2.0,
                angle: 0.0
            }])
            .is_err()
        );
    }

    #[test]
    fn schwarz_degenerate_c1_two() {
        let t = SchwarzTriple::new(2.0, Complex64::new(0.3, 0.0), Complex64::new(0.0, 1.0))
            .unwrap();
        let (c2, c3) = schwarz_to_c23(&t);
        assert!((c2 - Complex64::new(2.0, 0.0)).norm() < 1e-14);
        assert!((c3 - Complex64::new(2.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn schwarz_c1_zero_x_one() {
        let t = SchwarzTriple::new(0.0, Complex64::new(1.0, 0.0), Complex64::new(0.7, 0.2))
            .unwrap();
        let (c2, c3) = schwarz_to_c23(&t);
        assert!((c2 - Complex64::new(2.0, 0.0)).norm() < 1e-14);
        assert!(c3.norm() < 1e-14);
    }

    #[test]
    fn schwarz_convex_extremal_point() {
        // (c1=1, x=-1): the alpha=2 convex extremal point
        let t = SchwarzTriple::new(1.0, Complex64::new(-1.0, 0.0), Complex64::new(0.4, 0.1))
            .unwrap();
        let (c2, c3) = schwarz_to_c23(&t);
        assert!((c2 - Complex64::new(-1.0, 0.0)).norm() < 1e-14);
        assert!((c3 - Complex64::new(-2.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn recover_stress_point_degenerate_x() {
        let r = c_to_schwarz(
            0.877058,
            Complex64::new(-1.230769, 0.0),
            Complex64::new(-1.956464, 0.0),
        )
        .unwrap();
        assert!((r.x - Complex64::new(-1.0, 0.0)).norm() < 1e-5);
        assert!(r.z.is_none());
    }

    #[test]
    fn recover_degenerate_c1() {
        let two = Complex64::new(2.0, 0.0);
        assert!(matches!(c_to_schwarz(2.0, two, two), Err(Error::DegenerateC1)));
    }

    #[test]
    fn schwarz_round_trip() {
        let t = SchwarzTriple::new(1.0, Complex64::new(0.5, 0.0), Complex64::new(0.0, 0.25))
            .unwrap();
        let (c2, c3) = schwarz_to_c23(&t);
        let r = c_to_schwarz(t.c1, c2, c3).unwrap();
        assert!((r.x - t.x).norm() < 1e-12);
        assert!((r.z.unwrap() - t.z).norm() < 1e-12);
    }

    #[test]
    fn toeplitz_single_atom_boundary() {
        let m = HerglotzMeasure::single_atom(0.0);
        let c = herglotz_coefficients(&m, 2).unwrap();
        let (ok, min_minor) = toeplitz_admissible(&c);
        assert!(ok);
        assert!(min_minor.abs() < 1e-9);
    }

    #[test]
    fn toeplitz_rejects_large_c1() {
        let c = CoefficientSequence::new(vec![Complex64::new(2.5, 0.0)]);
        let (ok, min_minor) = toeplitz_admissible(&c);
        assert!(!ok);
        assert!(min_minor < -1.0);
    }

    #[test]
    fn toeplitz_stress_point_boundary() {
        // the exactly generated two-atom boundary point; values rounded to a
        // few decimals drift off the PSD boundary by ~1e-4 and would be
        // rejected at the minor tolerance
        let c1 = (10.0f64 / 13.0).sqrt();
        let c2 = c1 * c1 - 2.0;
        let c3 = c1 * (c1 * c1 - 3.0);
        let c = CoefficientSequence::new(vec![
            Complex64::new(c1, 0.0),
            Complex64::new(c2, 0.0),
            Complex64::new(c3, 0.0),
        ]);
        let (ok, min_minor) = toeplitz_admissible(&c);
        assert!(ok, "min minor {min_minor}");
        // third minor 8 - 4 c1^2 + 2 c1^2 c2 - 2 c2^2 sits on the boundary
        let third = 8.0 - 4.0 * c1 * c1 + 2.0 * c1 * c1 * c2 - 2.0 * c2 * c2;
        assert!(third.abs() < 1e-12);
    }

    #[test]
    fn random_measure_deterministic() {
        let a = random_measure(4, 99);
        let b = random_measure(4, 99);
        for (x, y) in a.atoms.iter().zip(&b.atoms) {
            assert_eq!(x.weight, y.weight);
            assert_eq!(x.angle, y.angle);
        }
        let single = random_measure(1, 7);
        assert_eq!(single.atoms.len(), 1);
        assert!((single.atoms[0].weight - 1.0).abs() < 1e-15);
    }

    #[test]
    fn random_measures_pass_toeplitz() {
        for seed in 0..500 {
            let m = random_measure(5, seed);
            let c = herglotz_coefficients(&m, 6).unwrap();
            let (ok, min_minor) = toeplitz_admissible(&c);
            assert!(ok, "seed {seed}: min minor {min_minor}");
            for n in 1..=6 {
                assert!(c.c(n).norm() <= 2.0 + 1e-9, "Lemma |c_n| <= 2");
            }
        }
    }
}
