//! Shared numeric kernels: uniform grids, adaptive Simpson quadrature,
//! central finite differences and bracketed bisection.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Maximum refinement depth of the adaptive quadrature.
const MAX_QUAD_DEPTH: usize = 40;

/// Hard cap on bisection iterations (bracket width halves each step).
const MAX_BISECT_ITERS: usize = 200;

/// A uniform 1-D grid of `n` interior points on `(x_min, x_max)`.
///
/// The spacing is `h = (x_max - x_min) / (n + 1)`; the endpoints themselves
/// are not sample points. Dirichlet solvers treat them as zero-boundary
/// positions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    x_min: f64,
    x_max: f64,
    n: usize,
}

impl Grid {
    /// Build a grid, enforcing `x_min < x_max` (finite) and `n >= 16`.
    pub fn new(x_min: f64, x_max: f64, n: usize) -> Result<Self> {
        if !x_min.is_finite() || !x_max.is_finite() {
            return Err(Error::InvalidGrid("endpoints must be finite".into()));
        }
        if x_min >= x_max {
            return Err(Error::InvalidGrid(format!(
                "x_min = {x_min} must be below x_max = {x_max}"
            )));
        }
        if n < 16 {
            return Err(Error::InvalidGrid(format!("n = {n} is below the minimum of 16")));
        }
        Ok(Self { x_min, x_max, n })
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    /// Number of interior points.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Grid spacing.
    pub fn h(&self) -> f64 {
        (self.x_max - self.x_min) / (self.n as f64 + 1.0)
    }

    /// The i-th interior point, `i` in `0..n`.
    pub fn point(&self, i: usize) -> f64 {
        self.x_min + self.h() * (i as f64 + 1.0)
    }

    /// All interior points.
    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(move |i| self.point(i))
    }

    /// Same span with twice as many interior points (for stability checks).
    pub fn doubled(&self) -> Grid {
        Grid { x_min: self.x_min, x_max: self.x_max, n: 2 * self.n }
    }
}

/// Default step for finite-difference cross checks: `1e-5 * max(1, |x|)`.
pub fn default_step(x: f64) -> f64 {
    1e-5 * x.abs().max(1.0)
}

/// Order of a central finite difference.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivOrder {
    First,
    Second,
}

/// Central finite difference of `f` at `x`, error `O(h^2)`.
pub fn derivative<F: Fn(f64) -> f64>(f: F, x: f64, order: DerivOrder, h: f64) -> f64 {
    match order {
        DerivOrder::First => (f(x + h) - f(x - h)) / (2.0 * h),
        DerivOrder::Second => (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h),
    }
}

/// Adaptive Simpson quadrature of `f` over `[a, b]` to absolute accuracy `tol`.
///
/// Exact on cubics per panel; refinement bisects panels until the standard
/// 15-fold Richardson criterion is met.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64> {
    if !a.is_finite() || !b.is_finite() {
        return Err(Error::NonFinite("integration endpoint"));
    }
    if a > b {
        return Err(Error::OutOfRange(format!("integrate: a = {a} > b = {b}")));
    }
    if a == b {
        return Ok(0.0);
    }
    let c = 0.5 * (a + b);
    let fa = f(a);
    let fb = f(c);
    let fc = f(b);
    let whole = (b - a) * (fa + 4.0 * fb + fc) / 6.0;
    adaptive(&f, a, c, b, fa, fb, fc, whole, tol, MAX_QUAD_DEPTH)
}

#[allow(clippy::too_many_arguments)]
fn adaptive<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    c: f64,
    fa: f64,
    fb: f64,
    fc: f64,
    whole: f64,
    tol: f64,
    depth: usize,
) -> Result<f64> {
    let d = 0.5 * (a + b);
    let e = 0.5 * (b + c);
    let fd = f(d);
    let fe = f(e);
    let left = (b - a) * (fa + 4.0 * fd + fb) / 6.0;
    let right = (c - b) * (fb + 4.0 * fe + fc) / 6.0;
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 {
        return Err(Error::QuadratureDepth { max_depth: MAX_QUAD_DEPTH });
    }
    let lhs = adaptive(f, a, d, b, fa, fd, fb, left, 0.5 * tol, depth - 1)?;
    let rhs = adaptive(f, b, e, c, fb, fe, fc, right, 0.5 * tol, depth - 1)?;
    Ok(lhs + rhs)
}

/// Bisection root of `f` on `[lo, hi]`; requires a sign change.
///
/// Terminates when the bracket width or `|f(root)|` drops below `tol`.
pub fn root_find<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    let mut a = lo;
    let mut b = hi;
    let mut fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa * fb > 0.0 {
        return Err(Error::NoBracket { lo, hi });
    }
    for _ in 0..MAX_BISECT_ITERS {
        let mid = 0.5 * (a + b);
        let fm = f(mid);
        if fm.abs() <= tol || (b - a) <= tol {
            return Ok(mid);
        }
        if fa * fm <= 0.0 {
            b = mid;
        } else {
            a = mid;
            fa = fm;
        }
    }
    Ok(0.5 * (a + b))
}
