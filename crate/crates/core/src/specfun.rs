//! Orthogonal-polynomial kernels with complex order parameters and complex
//! argument: generalized Laguerre `L_n^a(x)` and Jacobi `P_n^{(a,b)}(x)`.
//!
//! Both are evaluated by the standard three-term recurrences ascending in
//! degree. Degrees stay small here (bound-state counts), so the recurrences
//! are used well inside their stable envelope; degrees up to 64 are supported.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Generalized Laguerre polynomial `L_n^a(x)`.
///
/// `L_0 = 1`, `L_1 = 1 + a - x`,
/// `(k+1) L_{k+1} = (2k + 1 + a - x) L_k - (k + a) L_{k-1}`.
///
/// Entire in both `a` and `x`; no degenerate parameter values exist.
pub fn laguerre(n: usize, a: Complex64, x: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    if n == 0 {
        return one;
    }
    let mut prev = one;
    let mut cur = one + a - x;
    for k in 1..n {
        let kf = k as f64;
        let next = ((Complex64::new(2.0 * kf + 1.0, 0.0) + a - x) * cur
            - (Complex64::new(kf, 0.0) + a) * prev)
            / Complex64::new(kf + 1.0, 0.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Jacobi polynomial `P_n^{(a,b)}(x)`.
///
/// `P_0 = 1`, `P_1 = (a - b)/2 + (1 + (a+b)/2) x`, and for `k >= 2`
///
/// ```text
/// 2k (k+a+b) (2k+a+b-2) P_k =
///     (2k+a+b-1) [ (2k+a+b)(2k+a+b-2) x + a² - b² ] P_{k-1}
///   - 2 (k+a-1)(k+b-1)(2k+a+b) P_{k-2}
/// ```
///
/// Complex `a`, `b` are accepted; parameter combinations that zero a
/// recurrence denominator `2k(k+a+b)(2k+a+b-2)` are rejected.
pub fn jacobi(n: usize, a: Complex64, b: Complex64, x: Complex64) -> Result<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    if n == 0 {
        return Ok(one);
    }
    let half = Complex64::new(0.5, 0.0);
    let mut prev = one;
    let mut cur = (a - b) * half + (one + (a + b) * half) * x;
    for k in 2..=n {
        let kf = k as f64;
        let s = a + b;
        let c0 = Complex64::new(2.0 * kf, 0.0)
            * (Complex64::new(kf, 0.0) + s)
            * (Complex64::new(2.0 * kf - 2.0, 0.0) + s);
        if c0.norm() < 1e-14 {
            return Err(Error::DegenerateParameters(format!(
                "jacobi recurrence denominator vanishes at degree {k} for a = {a}, b = {b}"
            )));
        }
        let t = Complex64::new(2.0 * kf, 0.0) + s; // 2k + a + b
        let c1 = (t - one) * ((t * (t - Complex64::new(2.0, 0.0))) * x + a * a - b * b);
        let c2 = Complex64::new(2.0, 0.0)
            * (Complex64::new(kf - 1.0, 0.0) + a)
            * (Complex64::new(kf - 1.0, 0.0) + b)
            * t;
        let next = (c1 * cur - c2 * prev) / c0;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}
