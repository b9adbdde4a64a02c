//! Position-dependent mass profiles `m(x)` with analytic derivatives and the
//! coordinate mapping `f(x) = ∫ √m dx` together with its inverse.
//!
//! Three parametric profiles are supported:
//!
//! * asymptotically vanishing   `m(x) = α² / (x² + q)`
//! * squared Lorentzian         `m(x) = α² / (q + x²)²`
//! * exponential                `m(x) = e^{-αx}`
//!
//! The mapping is fixed by `f' = √m` with the constant of integration chosen
//! so that `f(0) = 0` for the two rational profiles (the exponential profile
//! has the closed form `f(x) = -(2/α) e^{-αx/2}`, which has no zero).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The parametric family of a mass profile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MassKind {
    AsymptoticallyVanishing,
    SquaredLorentzian,
    Exponential,
}

/// A strictly positive mass profile `m(x)` with scale `alpha` and, for the
/// rational kinds, width parameter `q`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MassDistribution {
    kind: MassKind,
    alpha: f64,
    q: f64,
}

impl MassDistribution {
    /// Build a profile; `alpha > 0` always, `q > 0` for the rational kinds.
    pub fn new(kind: MassKind, alpha: f64, q: f64) -> Result<Self> {
        if !(alpha.is_finite() && alpha > 0.0) {
            return Err(Error::OutOfRange(format!("mass alpha must be positive, got {alpha}")));
        }
        if !(q.is_finite() && q > 0.0) {
            return Err(Error::OutOfRange(format!("mass q must be positive, got {q}")));
        }
        Ok(Self { kind, alpha, q })
    }

    /// `m(x) = α² / (x² + q)`
    pub fn asymptotically_vanishing(alpha: f64, q: f64) -> Result<Self> {
        Self::new(MassKind::AsymptoticallyVanishing, alpha, q)
    }

    /// `m(x) = α² / (q + x²)²`
    pub fn squared_lorentzian(alpha: f64, q: f64) -> Result<Self> {
        Self::new(MassKind::SquaredLorentzian, alpha, q)
    }

    /// `m(x) = e^{-αx}` (no `q` parameter)
    pub fn exponential(alpha: f64) -> Result<Self> {
        Self::new(MassKind::Exponential, alpha, 1.0)
    }

    pub fn kind(&self) -> MassKind {
        self.kind
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    /// Evaluate `m(x)`; strictly positive for all finite `x`.
    pub fn eval(&self, x: f64) -> Result<f64> {
        if !x.is_finite() {
            return Err(Error::NonFinite("mass argument"));
        }
        let Self { alpha, q, .. } = *self;
        Ok(match self.kind {
            MassKind::AsymptoticallyVanishing => alpha * alpha / (x * x + q),
            MassKind::SquaredLorentzian => {
                let d = q + x * x;
                alpha * alpha / (d * d)
            }
            MassKind::Exponential => (-alpha * x).exp(),
        })
    }

    /// Analytic `(m, m', m'')` at `x`.
    pub fn derivs(&self, x: f64) -> Result<(f64, f64, f64)> {
        if !x.is_finite() {
            return Err(Error::NonFinite("mass argument"));
        }
        let Self { alpha, q, .. } = *self;
        let a2 = alpha * alpha;
        Ok(match self.kind {
            MassKind::AsymptoticallyVanishing => {
                let d = x * x + q;
                let m = a2 / d;
                let m1 = -2.0 * a2 * x / (d * d);
                let m2 = -2.0 * a2 * (q - 3.0 * x * x) / (d * d * d);
                (m, m1, m2)
            }
            MassKind::SquaredLorentzian => {
                let d = q + x * x;
                let m = a2 / (d * d);
                let m1 = -4.0 * a2 * x / (d * d * d);
                let m2 = -4.0 * a2 * (q - 5.0 * x * x) / (d * d * d * d);
                (m, m1, m2)
            }
            MassKind::Exponential => {
                let m = (-alpha * x).exp();
                (m, -alpha * m, a2 * m)
            }
        })
    }

    /// The mapping `f(x) = ∫ √m dx` in closed form.
    ///
    /// * vanishing:  `α ln(x + √(x²+q))`
    /// * Lorentzian: `(α/√q) atan(x/√q)` (the primitive of `√m`; `f(0) = 0`)
    /// * exponential: `-(2/α) e^{-αx/2}`
    pub fn mapping(&self, x: f64) -> f64 {
        let Self { alpha, q, .. } = *self;
        match self.kind {
            MassKind::AsymptoticallyVanishing => alpha * (x + (x * x + q).sqrt()).ln(),
            MassKind::SquaredLorentzian => {
                let sq = q.sqrt();
                alpha / sq * (x / sq).atan()
            }
            MassKind::Exponential => -(2.0 / alpha) * (-alpha * x / 2.0).exp(),
        }
    }

    /// Open interval of values the mapping can take.
    pub fn mapping_range(&self) -> (f64, f64) {
        let Self { alpha, q, .. } = *self;
        match self.kind {
            MassKind::AsymptoticallyVanishing => (f64::NEG_INFINITY, f64::INFINITY),
            MassKind::SquaredLorentzian => {
                let half = alpha * std::f64::consts::FRAC_PI_2 / q.sqrt();
                (-half, half)
            }
            MassKind::Exponential => (f64::NEG_INFINITY, 0.0),
        }
    }

    /// Inverse of the mapping, in closed form per kind.
    ///
    /// * vanishing:  `x = (e^{y/α} - q e^{-y/α}) / 2`
    /// * Lorentzian: `x = √q tan(√q y / α)`, `|y| < απ/(2√q)`
    /// * exponential: `x = -(2/α) ln(-αy/2)`, `y < 0`
    pub fn mapping_inverse(&self, y: f64) -> Result<f64> {
        if !y.is_finite() {
            return Err(Error::NonFinite("mapping value"));
        }
        let (lo, hi) = self.mapping_range();
        if y <= lo || y >= hi {
            return Err(Error::OutOfRange(format!(
                "mapping value {y} outside the open range ({lo}, {hi})"
            )));
        }
        let Self { alpha, q, .. } = *self;
        Ok(match self.kind {
            MassKind::AsymptoticallyVanishing => {
                let t = y / alpha;
                0.5 * (t.exp() - q * (-t).exp())
            }
            MassKind::SquaredLorentzian => {
                let sq = q.sqrt();
                sq * (sq * y / alpha).tan()
            }
            MassKind::Exponential => -(2.0 / alpha) * (-alpha * y / 2.0).ln(),
        })
    }
}

/// A mass model for the transform and the solvers: either the degenerate
/// constant mass `m ≡ 1` (identity mapping) or one of the parametric
/// profiles.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Mass {
    /// `m ≡ 1`; the transform degenerates to the identity.
    Unit,
    Profile(MassDistribution),
}

impl Mass {
    pub fn eval(&self, x: f64) -> Result<f64> {
        match self {
            Mass::Unit => {
                if x.is_finite() {
                    Ok(1.0)
                } else {
                    Err(Error::NonFinite("mass argument"))
                }
            }
            Mass::Profile(d) => d.eval(x),
        }
    }

    pub fn derivs(&self, x: f64) -> Result<(f64, f64, f64)> {
        match self {
            Mass::Unit => {
                if x.is_finite() {
                    Ok((1.0, 0.0, 0.0))
                } else {
                    Err(Error::NonFinite("mass argument"))
                }
            }
            Mass::Profile(d) => d.derivs(x),
        }
    }

    pub fn mapping(&self, x: f64) -> f64 {
        match self {
            Mass::Unit => x,
            Mass::Profile(d) => d.mapping(x),
        }
    }

    pub fn mapping_range(&self) -> (f64, f64) {
        match self {
            Mass::Unit => (f64::NEG_INFINITY, f64::INFINITY),
            Mass::Profile(d) => d.mapping_range(),
        }
    }

    pub fn mapping_inverse(&self, y: f64) -> Result<f64> {
        match self {
            Mass::Unit => {
                if y.is_finite() {
                    Ok(y)
                } else {
                    Err(Error::NonFinite("mapping value"))
                }
            }
            Mass::Profile(d) => d.mapping_inverse(y),
        }
    }
}

impl From<MassDistribution> for Mass {
    fn from(d: MassDistribution) -> Self {
        Mass::Profile(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{self, integrate, DerivOrder};
    use proptest::prelude::*;

    fn kinds() -> [MassDistribution; 3] {
        [
            MassDistribution::asymptotically_vanishing(1.0, 1.0).unwrap(),
            MassDistribution::squared_lorentzian(1.0, 1.0).unwrap(),
            MassDistribution::exponential(2.0).unwrap(),
        ]
    }

    #[test]
    fn eval_reference_points() {
        let av = MassDistribution::asymptotically_vanishing(1.0, 1.0).unwrap();
        assert_eq!(av.eval(0.0).unwrap(), 1.0);
        let ex = MassDistribution::exponential(2.0).unwrap();
        assert_eq!(ex.eval(0.0).unwrap(), 1.0);
        let sl = MassDistribution::squared_lorentzian(1.0, 1.0).unwrap();
        // α²/(q+x²)² at x=1: 1/4
        assert!((sl.eval(1.0).unwrap() - 0.25).abs() < 1e-15);
        assert!(av.eval(f64::NAN).is_err());
    }

    #[test]
    fn derivs_reference_points() {
        let ex = MassDistribution::exponential(1.0).unwrap();
        let (m, m1, m2) = ex.derivs(0.0).unwrap();
        assert!((m - 1.0).abs() < 1e-15 && (m1 + 1.0).abs() < 1e-15 && (m2 - 1.0).abs() < 1e-15);

        let av = MassDistribution::asymptotically_vanishing(1.0, 1.0).unwrap();
        let (m, m1, m2) = av.derivs(0.0).unwrap();
        assert!((m - 1.0).abs() < 1e-15 && m1.abs() < 1e-15 && (m2 + 2.0).abs() < 1e-15);

        let sl = MassDistribution::squared_lorentzian(1.0, 1.0).unwrap();
        let (m, m1, m2) = sl.derivs(0.0).unwrap();
        assert!((m - 1.0).abs() < 1e-15 && m1.abs() < 1e-15 && (m2 + 4.0).abs() < 1e-15);
    }

    #[test]
    fn mapping_reference_points() {
        let av = MassDistribution::asymptotically_vanishing(1.0, 1.0).unwrap();
        assert_eq!(av.mapping(0.0), 0.0);
        let ex = MassDistribution::exponential(2.0).unwrap();
        assert!((ex.mapping(0.0) + 1.0).abs() < 1e-15);
        let sl = MassDistribution::squared_lorentzian(1.0, 1.0).unwrap();
        assert_eq!(sl.mapping(0.0), 0.0);
    }

    #[test]
    fn mapping_inverse_reference_points() {
        let av = MassDistribution::asymptotically_vanishing(1.0, 1.0).unwrap();
        assert_eq!(av.mapping_inverse(0.0).unwrap(), 0.0);
        let ex = MassDistribution::exponential(2.0).unwrap();
        assert!(ex.mapping_inverse(-1.0).unwrap().abs() < 1e-15);
        // e^{-αx/2} > 0, so positive mapping values are unreachable
        assert!(matches!(ex.mapping_inverse(0.5), Err(Error::OutOfRange(_))));
        let sl = MassDistribution::squared_lorentzian(1.0, 1.0).unwrap();
        assert!(matches!(sl.mapping_inverse(2.0), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn mapping_matches_quadrature_of_sqrt_m() {
        // The rational kinds anchor the integral at x₀ = 0.
        for d in [
            MassDistribution::asymptotically_vanishing(1.3, 0.7).unwrap(),
            MassDistribution::squared_lorentzian(0.9, 2.1).unwrap(),
        ] {
            for &x in &[-1.5, -0.2, 0.4, 2.7] {
                let sm = |t: f64| d.eval(t).unwrap().sqrt();
                let (a, b, sign) = if x >= 0.0 { (0.0, x, 1.0) } else { (x, 0.0, -1.0) };
                let quad = sign * integrate(sm, a, b, 1e-12).unwrap();
                let closed = d.mapping(x);
                assert!((quad - closed).abs() < 1e-8, "{d:?} at {x}: {quad} vs {closed}");
            }
        }
        // Exponential: compare increments, since f has no zero.
        let d = MassDistribution::exponential(1.7).unwrap();
        let quad = integrate(|t| d.eval(t).unwrap().sqrt(), -0.5, 1.5, 1e-12).unwrap();
        let closed = d.mapping(1.5) - d.mapping(-0.5);
        assert!((quad - closed).abs() < 1e-8);
    }

    #[test]
    fn mapping_is_strictly_increasing() {
        for d in kinds() {
            let mut prev = f64::NEG_INFINITY;
            for i in 0..200 {
                let x = -4.0 + i as f64 * 0.04;
                let y = d.mapping(x);
                assert!(y > prev, "{d:?} not increasing at {x}");
                prev = y;
            }
        }
    }

    #[test]
    fn unit_mass_is_identity() {
        let m = Mass::Unit;
        assert_eq!(m.eval(3.2).unwrap(), 1.0);
        assert_eq!(m.derivs(3.2).unwrap(), (1.0, 0.0, 0.0));
        assert_eq!(m.mapping(3.2), 3.2);
        assert_eq!(m.mapping_inverse(3.2).unwrap(), 3.2);
    }

    #[test]
    fn constructor_validation() {
        assert!(MassDistribution::asymptotically_vanishing(0.0, 1.0).is_err());
        assert!(MassDistribution::squared_lorentzian(1.0, -1.0).is_err());
        assert!(MassDistribution::exponential(f64::NAN).is_err());
    }

    fn arb_dist() -> impl Strategy<Value = MassDistribution> {
        (0usize..3, 0.3f64..3.0, 0.3f64..3.0).prop_map(|(k, alpha, q)| match k {
            0 => MassDistribution::asymptotically_vanishing(alpha, q).unwrap(),
            1 => MassDistribution::squared_lorentzian(alpha, q).unwrap(),
            _ => MassDistribution::exponential(alpha).unwrap(),
        })
    }

    proptest! {
        #[test]
        fn positive_and_derivative_consistent(d in arb_dist(), x in -3.0f64..3.0) {
            let (m, m1, m2) = d.derivs(x).unwrap();
            prop_assert!(m > 0.0);
            let h = numerics::default_step(x);
            let dm = numerics::derivative(|t| d.eval(t).unwrap(), x, DerivOrder::First, h);
            prop_assert!((dm - m1).abs() <= 1e-6 * (1.0 + m1.abs()), "m' {dm} vs {m1}");
            let dm1 = numerics::derivative(|t| d.derivs(t).unwrap().1, x, DerivOrder::First, h);
            prop_assert!((dm1 - m2).abs() <= 1e-6 * (1.0 + m2.abs()), "m'' {dm1} vs {m2}");
        }

        #[test]
        fn mapping_derivative_is_sqrt_m(d in arb_dist(), x in -3.0f64..3.0) {
            let h = numerics::default_step(x);
            let fp = numerics::derivative(|t| d.mapping(t), x, DerivOrder::First, h);
            let sm = d.eval(x).unwrap().sqrt();
            prop_assert!((fp - sm).abs() <= 1e-6 * (1.0 + sm), "f' {fp} vs sqrt m {sm}");
        }

        #[test]
        fn inverse_round_trip(d in arb_dist(), x in -4.0f64..4.0) {
            let y = d.mapping(x);
            let back = d.mapping_inverse(y).unwrap();
            prop_assert!((back - x).abs() <= 1e-8 * (1.0 + x.abs()), "{back} vs {x}");
        }
    }
}
