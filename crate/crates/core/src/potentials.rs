//! Reference (constant-mass) potential families with closed-form spectra and,
//! where available, closed-form eigenfunctions.
//!
//! All closed forms are quoted for the operator convention used throughout
//! this crate,
//!
//! ```text
//! H Φ = -Φ'' + V(y) Φ = ε Φ          (ħ² = 2 m₀ = 1)
//! ```
//!
//! so each family's spectrum formula is exactly the spectrum of the family's
//! potential under that operator. The numerical eigensolvers in
//! [`crate::eigensolver`] use the same convention, which is what the
//! verification suite relies on.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun::{jacobi, laguerre};

/// Number of bound states of a reference problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundStates {
    /// Finitely many levels `n = 0 .. count-1`; `Finite(0)` means none.
    Finite(usize),
    /// The closed-form ladder does not terminate.
    Infinite,
}

impl BoundStates {
    /// Largest admissible level index, if any.
    pub fn max_index(&self) -> Option<usize> {
        match self {
            BoundStates::Finite(0) => None,
            BoundStates::Finite(count) => Some(count - 1),
            BoundStates::Infinite => Some(usize::MAX),
        }
    }

    pub fn contains(&self, n: usize) -> bool {
        match self {
            BoundStates::Finite(count) => n < *count,
            BoundStates::Infinite => true,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, BoundStates::Finite(0))
    }
}

/// One of the six reference families.
///
/// `MorseNonPt` fixes the range parameter to 1 and derives its strengths from
/// the real triple `(a, b, c)` as `V₁ = (a+ib)²`, `V₂ = (2c+1)(a+ib)`.
/// `PoschlTellerNonPt` carries fully complex depth and deformation; its
/// spectrum is real exactly when `Im(V₀ · conj(q)) = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ReferenceProblem {
    /// `V(y) = V₁ e^{-2αy} - V₂ e^{-αy}`
    MorseGeneral { alpha: f64, v1: Complex64, v2: Complex64 },
    /// `V(y) = (a+ib)² e^{-2y} - (2c+1)(a+ib) e^{-y}`
    MorseNonPt { a: f64, b: f64, c: f64 },
    /// `V(y) = V₁ e^{-2iαy} - V₂ e^{-iαy}` with real `V₁`, `V₂`
    MorsePt { alpha: f64, v1: f64, v2: f64 },
    /// `V(y) = -8 V₀ e^{-2αy} / (1 + q e^{-2αy})²` with real `V₀ > 0`, `q > 0`
    PoschlTeller { alpha: f64, v0: f64, q: f64 },
    /// Same form with complex `V₀`, `q`
    PoschlTellerNonPt { alpha: f64, v0: Complex64, q: Complex64 },
    /// The oscillatory form reached from `PoschlTeller` by `α → iα`:
    /// `V(y) = -8 V₀ [(1+q²)cos 2αy + 2q + i(q²-1)sin 2αy] / D(y)` with
    /// `D(y) = (1+q²)² + 4q cos 2αy (1 + q cos 2αy + q²)`
    PoschlTellerPt { alpha: f64, v0: f64, q: f64 },
}

/// Relative tolerance below which an imaginary part is treated as zero.
const IM_TOL: f64 = 1e-12;

fn require_positive(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!("{name} must be positive, got {v}")))
    }
}

impl ReferenceProblem {
    pub fn morse_general(alpha: f64, v1: Complex64, v2: Complex64) -> Result<Self> {
        require_positive("alpha", alpha)?;
        if v1.norm() == 0.0 {
            return Err(Error::OutOfRange("morse v1 must be nonzero".into()));
        }
        Ok(Self::MorseGeneral { alpha, v1, v2 })
    }

    pub fn morse_non_pt(a: f64, b: f64, c: f64) -> Result<Self> {
        for (name, v) in [("a", a), ("b", b), ("c", c)] {
            if !v.is_finite() {
                return Err(Error::OutOfRange(format!("morse parameter {name} must be finite")));
            }
        }
        Ok(Self::MorseNonPt { a, b, c })
    }

    pub fn morse_pt(alpha: f64, v1: f64, v2: f64) -> Result<Self> {
        require_positive("alpha", alpha)?;
        if v1 == 0.0 || !v1.is_finite() || !v2.is_finite() {
            return Err(Error::OutOfRange("morse-pt strengths must be finite, v1 nonzero".into()));
        }
        Ok(Self::MorsePt { alpha, v1, v2 })
    }

    /// The `(ω, D)` special case of the PT-symmetric Morse family:
    /// `V₁ = -ω²`, `V₂ = D`, `α = 2`, for which `ε_n = (2n + 1 + D/(2ω))²`.
    pub fn morse_pt_special(omega: f64, d: f64) -> Result<Self> {
        require_positive("omega", omega)?;
        Self::morse_pt(2.0, -omega * omega, d)
    }

    pub fn poschl_teller(alpha: f64, v0: f64, q: f64) -> Result<Self> {
        require_positive("alpha", alpha)?;
        require_positive("v0", v0)?;
        require_positive("q", q)?;
        Ok(Self::PoschlTeller { alpha, v0, q })
    }

    pub fn poschl_teller_non_pt(alpha: f64, v0: Complex64, q: Complex64) -> Result<Self> {
        require_positive("alpha", alpha)?;
        if q.norm() == 0.0 {
            return Err(Error::OutOfRange("deformation q must be nonzero".into()));
        }
        Ok(Self::PoschlTellerNonPt { alpha, v0, q })
    }

    /// Pure-imaginary specialization `V₀ = i v0`, `q = i q0`.
    pub fn poschl_teller_imaginary(alpha: f64, v0: f64, q0: f64) -> Result<Self> {
        Self::poschl_teller_non_pt(alpha, Complex64::new(0.0, v0), Complex64::new(0.0, q0))
    }

    pub fn poschl_teller_pt(alpha: f64, v0: f64, q: f64) -> Result<Self> {
        require_positive("alpha", alpha)?;
        require_positive("v0", v0)?;
        if !(q.is_finite() && q >= 0.0) {
            return Err(Error::OutOfRange(format!("deformation q must be >= 0, got {q}")));
        }
        Ok(Self::PoschlTellerPt { alpha, v0, q })
    }

    /// Range parameter of the family.
    pub fn alpha(&self) -> f64 {
        match *self {
            Self::MorseGeneral { alpha, .. }
            | Self::MorsePt { alpha, .. }
            | Self::PoschlTeller { alpha, .. }
            | Self::PoschlTellerNonPt { alpha, .. }
            | Self::PoschlTellerPt { alpha, .. } => alpha,
            Self::MorseNonPt { .. } => 1.0,
        }
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            Self::MorseGeneral { .. } => "morse-general",
            Self::MorseNonPt { .. } => "morse-non-pt",
            Self::MorsePt { .. } => "morse-pt",
            Self::PoschlTeller { .. } => "poschl-teller",
            Self::PoschlTellerNonPt { .. } => "poschl-teller-non-pt",
            Self::PoschlTellerPt { .. } => "poschl-teller-pt",
        }
    }

    /// Whether the potential is real on the real line.
    pub fn is_hermitian(&self) -> bool {
        match *self {
            Self::MorseGeneral { v1, v2, .. } => {
                v1.im.abs() <= IM_TOL * (1.0 + v1.norm()) && v2.im.abs() <= IM_TOL * (1.0 + v2.norm())
            }
            Self::PoschlTeller { .. } => true,
            _ => false,
        }
    }

    /// Evaluate the reference potential at `y`.
    pub fn potential(&self, y: f64) -> Result<Complex64> {
        if !y.is_finite() {
            return Err(Error::NonFinite("potential argument"));
        }
        match *self {
            Self::MorseGeneral { alpha, v1, v2 } => {
                Ok(v1 * (-2.0 * alpha * y).exp() - v2 * (-alpha * y).exp())
            }
            Self::MorseNonPt { a, b, c } => {
                let w = Complex64::new(a, b);
                Ok(w * w * (-2.0 * y).exp() - (2.0 * c + 1.0) * w * (-y).exp())
            }
            Self::MorsePt { alpha, v1, v2 } => {
                let phase = |k: f64| Complex64::new(0.0, -k * alpha * y).exp();
                Ok(v1 * phase(2.0) - v2 * phase(1.0))
            }
            Self::PoschlTeller { alpha, v0, q } => {
                let u = (-2.0 * alpha * y).exp();
                let den = 1.0 + q * u;
                Ok(Complex64::new(-8.0 * v0 * u / (den * den), 0.0))
            }
            Self::PoschlTellerNonPt { alpha, v0, q } => {
                let u = (-2.0 * alpha * y).exp();
                let den = Complex64::new(1.0, 0.0) + q * u;
                if den.norm() < 1e-12 {
                    return Err(Error::Singularity(y));
                }
                Ok(-8.0 * v0 * u / (den * den))
            }
            Self::PoschlTellerPt { alpha, v0, q } => {
                let c2 = (2.0 * alpha * y).cos();
                let s2 = (2.0 * alpha * y).sin();
                let den = (1.0 + q * q).powi(2) + 4.0 * q * c2 * (1.0 + q * c2 + q * q);
                if den.abs() < 1e-12 {
                    return Err(Error::Singularity(y));
                }
                let num = Complex64::new((1.0 + q * q) * c2 + 2.0 * q, (q * q - 1.0) * s2);
                Ok(-8.0 * v0 * num / den)
            }
        }
    }

    /// Closed-form level `ε_n`.
    pub fn energy(&self, n: usize) -> Result<Complex64> {
        let bound = self.bound_states();
        if !bound.contains(n) {
            return Err(Error::LevelOutOfRange {
                n,
                count: match bound {
                    BoundStates::Finite(c) => c,
                    BoundStates::Infinite => usize::MAX,
                },
            });
        }
        let nf = n as f64;
        Ok(match *self {
            Self::MorseGeneral { alpha, v1, v2 } => {
                let k = v2 / (alpha * v1.sqrt());
                let t = k - (2.0 * nf + 1.0);
                -(alpha * alpha / 4.0) * t * t
            }
            Self::MorseNonPt { c, .. } => Complex64::new(-(nf - c) * (nf - c), 0.0),
            Self::MorsePt { alpha, v1, v2 } => {
                let t = 2.0 * nf + 1.0 + v2 / (alpha * v1.abs().sqrt());
                Complex64::new(alpha * alpha / 4.0 * t * t, 0.0)
            }
            Self::PoschlTeller { alpha, v0, q } => {
                let nu1 = (1.0 + 8.0 * v0 / (q * alpha * alpha)).sqrt();
                let t = nu1 - (2.0 * nf + 1.0);
                Complex64::new(-(alpha * alpha / 4.0) * t * t, 0.0)
            }
            Self::PoschlTellerNonPt { alpha, v0, q } => {
                let nu1 = (Complex64::new(1.0, 0.0) + 8.0 * v0 / (q * alpha * alpha)).sqrt();
                let t = nu1 - (2.0 * nf + 1.0);
                -(alpha * alpha / 4.0) * t * t
            }
            Self::PoschlTellerPt { alpha, v0, .. } => {
                let t = 2.0 * nf + 1.0 + (1.0 + 16.0 * v0 / (alpha * alpha)).sqrt();
                Complex64::new(-(alpha * alpha / 4.0) * t * t, 0.0)
            }
        })
    }

    /// Bound-state count per family.
    ///
    /// Morse: levels satisfy `n < V₂/(2α√V₁) - 1/2`; the variant with derived
    /// strengths reduces to `n < c`. Pöschl-Teller: `2n + 1 < ν₁` with
    /// `ν₁ = √(1 + 8V₀/(q α²))`. The oscillatory (`MorsePt`,
    /// `PoschlTellerPt`) ladders do not terminate.
    pub fn bound_states(&self) -> BoundStates {
        fn strictly_below(b: f64) -> BoundStates {
            if !b.is_finite() || b <= 0.0 {
                BoundStates::Finite(0)
            } else {
                BoundStates::Finite((b - 1e-12).floor().max(-1.0) as usize + 1)
            }
        }
        match *self {
            Self::MorseGeneral { alpha, v1, v2 } => {
                let k = v2 / (alpha * v1.sqrt());
                if k.im.abs() > IM_TOL * (1.0 + k.norm()) {
                    // complex ladder parameter: no real bound spectrum
                    BoundStates::Finite(0)
                } else {
                    strictly_below(k.re / 2.0 - 0.5)
                }
            }
            Self::MorseNonPt { c, .. } => strictly_below(c),
            Self::MorsePt { .. } | Self::PoschlTellerPt { .. } => BoundStates::Infinite,
            Self::PoschlTeller { alpha, v0, q } => {
                let nu1 = (1.0 + 8.0 * v0 / (q * alpha * alpha)).sqrt();
                strictly_below((nu1 - 1.0) / 2.0)
            }
            Self::PoschlTellerNonPt { alpha, v0, q } => {
                if self.non_pt_reality_condition() != Some(true) {
                    return BoundStates::Finite(0);
                }
                let nu1 = (Complex64::new(1.0, 0.0) + 8.0 * v0 / (q * alpha * alpha)).sqrt();
                strictly_below((nu1.re - 1.0) / 2.0)
            }
        }
    }

    /// For the complex-parameter family: whether `Im(V₀ conj(q)) = 0`, the
    /// condition under which the closed-form spectrum is real. `None` for
    /// other families.
    pub fn non_pt_reality_condition(&self) -> Option<bool> {
        match *self {
            Self::PoschlTellerNonPt { v0, q, .. } => {
                let cross = v0.im * q.re - v0.re * q.im;
                Some(cross.abs() <= IM_TOL * (1.0 + v0.norm() * q.norm()))
            }
            _ => None,
        }
    }

    /// Closed-form (unnormalized) eigenfunction `Φ_n(y)`.
    ///
    /// Available for `MorseGeneral` and `PoschlTeller` only. The Morse form is
    ///
    /// ```text
    /// Φ_n(y) = s^{2ε̂} e^{-γ s} L_n^{4ε̂}(2γ s),   s = √V₁ e^{-αy},
    /// γ = 1/α,   ε̂ = √(-ε_n) / (2α)
    /// ```
    ///
    /// and the Pöschl-Teller form, with `u = q e^{-2αy}` and
    /// `μ_n = (ν₁ - (2n+1))/2`,
    ///
    /// ```text
    /// Φ_n(y) = u^{μ_n/2} (1+u)^{(1-ν₁)/2} P_n^{(μ_n, -ν₁)}(1 + 2u).
    /// ```
    ///
    /// Both solve `-Φ'' + V Φ = ε_n Φ` identically; the parameter choices are
    /// pinned by the ODE-residual oracle in [`crate::verify`].
    pub fn eigenfunction(&self, n: usize, y: f64) -> Result<Complex64> {
        if !y.is_finite() {
            return Err(Error::NonFinite("eigenfunction argument"));
        }
        match *self {
            Self::MorseGeneral { alpha, v1, .. } => {
                let eps = self.energy(n)?;
                let eps_hat = (-eps).sqrt() / (2.0 * alpha);
                let gamma = 1.0 / alpha;
                let s = v1.sqrt() * (-alpha * y).exp();
                let poly = laguerre(n, 4.0 * eps_hat, 2.0 * gamma * s);
                Ok(s.powc(2.0 * eps_hat) * (-gamma * s).exp() * poly)
            }
            Self::PoschlTeller { alpha, v0, q } => {
                let _ = self.energy(n)?;
                let nu1 = (1.0 + 8.0 * v0 / (q * alpha * alpha)).sqrt();
                let mu = (nu1 - (2.0 * n as f64 + 1.0)) / 2.0;
                let u = q * (-2.0 * alpha * y).exp();
                let poly = jacobi(
                    n,
                    Complex64::new(mu, 0.0),
                    Complex64::new(-nu1, 0.0),
                    Complex64::new(1.0 + 2.0 * u, 0.0),
                )?;
                Ok(u.powf(mu / 2.0) * (1.0 + u).powf((1.0 - nu1) / 2.0) * poly)
            }
            _ => Err(Error::UnsupportedFamily(self.family_name())),
        }
    }
}
