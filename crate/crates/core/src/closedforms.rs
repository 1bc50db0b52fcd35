//! Closed-form extremal values and the explicit families attaining them:
//! the least measure of `{|f| >= 1}` under a pinned leading harmonic, the
//! least sup of unit-leading zero products on arcs and segments, and the
//! parameter algebra (`h`, `alpha`, `lambda`, `y`) tying the families
//! together.

use serde::Serialize;
use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::trigpoly::{CirclePoly, TrigPoly, ZeroForm};

/// `4 arccos(e^x)` for `x <= 0`, written as an arcsine of the half-chord:
/// `arccos` of a direct power loses half the significant digits when the
/// argument is near 1, and the values here sit exactly there for the
/// parameter ranges that matter (thresholds near 2, leading coefficients
/// near 1).
fn four_arccos_exp(x: f64) -> f64 {
    8.0 * (-0.5 * f64::exp_m1(x)).sqrt().asin()
}

fn require_order(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain(format!("{what} must be at least 1")));
    }
    Ok(())
}

/// Least possible measure of `{t : |f(t)| >= 1}` over trigonometric
/// polynomials of order `n` whose leading harmonic is `y cos nt` (up to
/// rotation): `4 arccos(y^{-1/(2n)})`.
///
/// Accepts the degenerate boundary `y = 1` (value 0) and `y = inf`
/// (value `2 pi`).
pub fn sigma(n: usize, y: f64) -> Result<f64> {
    require_order(n, "order n")?;
    if !(y >= 1.0) {
        return Err(Error::Domain(format!("sigma needs y >= 1, got {y}")));
    }
    Ok(four_arccos_exp(-(y - 1.0).ln_1p() / (2 * n) as f64))
}

/// Least possible measure of `{t : |g(t)| >= h}` over unit-leading zero
/// products with `m` zeros: `4 arccos((h/2)^{1/m})` for `0 <= h <= 2`,
/// with `delta(m, 0) = 2 pi` and `delta(m, 2) = 0`.
pub fn delta(m: usize, h: f64) -> Result<f64> {
    require_order(m, "zero count m")?;
    if !(0.0..=2.0).contains(&h) {
        return Err(Error::Domain(format!("delta needs h in [0, 2], got {h}")));
    }
    Ok(four_arccos_exp((0.5 * (h - 2.0)).ln_1p() / m as f64))
}

/// Least sup of `|g|` over the arc `|t| <= alpha` for unit-leading zero
/// products with `m` zeros: `2 sin^m(alpha/2)`. The argument is the full
/// arc length `2 alpha` in `[0, 2 pi]`; the endpoints extend continuously
/// to 0 and 2.
pub fn eps_arc(m: usize, two_alpha: f64) -> Result<f64> {
    require_order(m, "zero count m")?;
    if !(0.0..=TAU).contains(&two_alpha) {
        return Err(Error::Domain(format!("arc length must lie in [0, 2 pi], got {two_alpha}")));
    }
    Ok(2.0 * (0.25 * two_alpha).sin().powi(m as i32))
}

/// Least sup over the segment of length `2 alpha` for order-`n` polynomials
/// with unit leading harmonic: `sin^{2n}(alpha/2)`. Equals
/// `eps_arc(2n, 2 alpha) / 2`.
pub fn u_compact(n: usize, two_alpha: f64) -> Result<f64> {
    require_order(n, "order n")?;
    if !(0.0..=TAU).contains(&two_alpha) {
        return Err(Error::Domain(format!("arc length must lie in [0, 2 pi], got {two_alpha}")));
    }
    Ok((0.25 * two_alpha).sin().powi(2 * n as i32))
}

/// The sharp constant `sqrt(2n)` in the two-sided comparison between the
/// measure functional of an order-`n` polynomial and that of its leading
/// harmonic alone, in the limit of leading coefficient tending to 1.
pub fn babenko_beta(n: usize) -> f64 {
    ((2 * n) as f64).sqrt()
}

/// Least sup over the disc `|z| <= rho` of monic degree-`m` polynomials:
/// `2 (rho/2)^m`, attained by `z^m + (rho/2)^m`-type configurations. The
/// argument is the diameter `2 rho`.
pub fn polya_e(m: usize, two_rho: f64) -> Result<f64> {
    require_order(m, "degree m")?;
    if !(two_rho > 0.0) {
        return Err(Error::Domain(format!("disc diameter must be positive, got {two_rho}")));
    }
    Ok(2.0 * (0.25 * two_rho).powi(m as i32))
}

/// Least sup over the whole circle of `|g|` for unit-leading zero products:
/// the constant 2, independent of the number of zeros (equally spaced zeros
/// attain it).
pub fn min_supnorm_value(m: usize) -> f64 {
    let _ = m;
    2.0
}

/// Measure of `{t : |y cos nt| >= 1}` for `y >= 1`: `4 arccos(1/y)`,
/// independent of `n`.
pub fn mu_leading(y: f64) -> Result<f64> {
    if !(y >= 1.0) {
        return Err(Error::Domain(format!("mu_leading needs y >= 1, got {y}")));
    }
    if y == f64::INFINITY {
        return Ok(TAU);
    }
    Ok(8.0 * ((y - 1.0) / (2.0 * y)).sqrt().asin())
}

/// `T_n(c cos(t - theta) - (c - 1))` expanded to coefficients by the
/// three-term recurrence over polynomial products.
fn cheb_compose(n: usize, c: f64, theta: f64) -> Result<TrigPoly> {
    let inner = TrigPoly::new(
        1,
        vec![-2.0 * (c - 1.0), c * theta.cos()],
        vec![0.0, c * theta.sin()],
    )?;
    let mut prev = TrigPoly::constant(1.0);
    let mut cur = inner.clone();
    for _ in 1..n {
        let next = inner.mul(&cur).scaled(2.0).sub(&prev);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// The rotation family attaining `sigma(n, y)`:
/// `(-1)^k T_n(y^{1/n} cos(t - pi k / n) - y^{1/n} + 1)`, expanded to
/// coefficients. `k` is taken mod `2n`; the leading harmonic comes out as
/// exactly `y cos nt` for every `k`.
pub fn extremal_fnk(n: usize, y: f64, k: i64) -> Result<TrigPoly> {
    require_order(n, "order n")?;
    if !(y >= 1.0) || !y.is_finite() {
        return Err(Error::Domain(format!("extremal family needs finite y >= 1, got {y}")));
    }
    let k = k.rem_euclid(2 * n as i64);
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    let c = y.powf(1.0 / n as f64);
    Ok(cheb_compose(n, c, PI * k as f64 / n as f64)?.scaled(sign))
}

/// Zero angles of the arc extremal: `+-arccos(a_k)` with
/// `a_k = 1 - 2 x_k^2 sin^2(alpha/2)`, `x_k = cos(pi (2k-1) / (2m))`,
/// plus a simple zero at 0 when `m` is odd. Returned raw (symmetric about
/// 0), so sign bookkeeping under angle reduction stays with the caller.
fn arc_zero_angles(m: usize, alpha: f64) -> Result<Vec<f64>> {
    require_order(m, "zero count m")?;
    if !(alpha > 0.0 && alpha <= PI) {
        return Err(Error::Domain(format!("half-arc alpha must lie in (0, pi], got {alpha}")));
    }
    let s2 = (0.5 * alpha).sin().powi(2);
    let mut phis = Vec::with_capacity(m);
    if m % 2 == 1 {
        phis.push(0.0);
    }
    for k in 1..=m / 2 {
        let x = (PI * (2 * k - 1) as f64 / (2 * m) as f64).cos();
        let a = 1.0 - 2.0 * x * x * s2;
        let phi = a.clamp(-1.0, 1.0).acos();
        phis.push(phi);
        phis.push(-phi);
    }
    Ok(phis)
}

/// Monic polynomial with `m` unimodular zeros whose modulus on the arc
/// `|t| <= alpha` is least possible (its sup there is `eps_arc(m, 2 alpha)`)
/// and exceeds that value everywhere outside the closed arc.
pub fn arc_extremal(m: usize, alpha: f64) -> Result<CirclePoly> {
    CirclePoly::new(arc_zero_angles(m, alpha)?)
}

/// The same extremal as [`arc_extremal`], in real zero-product form. For
/// `m = 2n` it equals `lambda^{-n} * 2 T_n(lambda cos t - (lambda - 1))`
/// and for `m = 2n + 1` it equals
/// `lambda^{-n} * 2 sin(t/2) D_n(lambda cos t - (lambda - 1))`, where
/// `lambda = sin^{-2}(alpha/2)`; the `lambda^{-n}` factor is the leading
/// normalization in both parities. The scale `(-1)^n` aligns the product
/// over symmetric zero pairs with those compositions.
pub fn extremal_g(m: usize, alpha: f64) -> Result<ZeroForm> {
    let sign = if (m / 2) % 2 == 0 { 1.0 } else { -1.0 };
    ZeroForm::new(arc_zero_angles(m, alpha)?, sign)
}

/// Order-`n` polynomial with unit leading harmonic whose sup over the
/// segment `|t| <= alpha` (shifted by `-pi k / n`) is least possible:
/// `(-1)^k sin^{2n}(alpha/2) T_n(lambda cos(t + pi k / n) - (lambda - 1))`.
/// Attains `+-u_compact(n, 2 alpha)` at `2n + 1` alternating points of the
/// segment, endpoints included.
pub fn segment_extremal(n: usize, alpha: f64, k: i64) -> Result<TrigPoly> {
    require_order(n, "order n")?;
    if !(alpha > 0.0 && alpha <= PI) {
        return Err(Error::Domain(format!("half-length alpha must lie in (0, pi], got {alpha}")));
    }
    let k = k.rem_euclid(2 * n as i64);
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    let s2 = (0.5 * alpha).sin().powi(2);
    let scale = sign * s2.powi(n as i32);
    Ok(cheb_compose(n, 1.0 / s2, -PI * k as f64 / n as f64)?.scaled(scale))
}

/// A general leading harmonic `A cos nt + B sin nt` rewritten as
/// `y cos(nt + theta_n)` with `y = sqrt(A^2 + B^2)` and `theta_n` the
/// argument of `A - iB`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct HarmonicReduction {
    pub a: f64,
    pub b: f64,
    pub y: f64,
    pub theta_n: f64,
}

pub fn reduce_harmonic(a: f64, b: f64) -> Result<HarmonicReduction> {
    if !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain("harmonic coefficients must be finite".into()));
    }
    if a == 0.0 && b == 0.0 {
        return Err(Error::ZeroHarmonic);
    }
    Ok(HarmonicReduction { a, b, y: a.hypot(b), theta_n: (-b).atan2(a) })
}

/// One of the three equivalent parameterizations of the extremal families.
#[derive(Debug, Clone, Copy)]
pub enum ParamSpec {
    /// Threshold `h` in `(0, 2]`.
    H(f64),
    /// Half-arc `alpha` in `(0, pi]`.
    Alpha(f64),
    /// Leading coefficient `y >= 1`.
    Y(f64),
}

/// The full parameter tuple: `h = 2 sin^m(alpha/2)`,
/// `lambda = sin^{-2}(alpha/2)`, `y = 2/h`. At the boundary
/// (`h = 2`, `alpha = pi`, `y = 1`) everything degenerates to the
/// zero-measure configuration.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ParamRelation {
    pub m: usize,
    pub h: f64,
    pub alpha: f64,
    pub lambda: f64,
    pub y: f64,
}

/// Fills the whole tuple from any one coordinate.
pub fn relate_params(m: usize, given: ParamSpec) -> Result<ParamRelation> {
    require_order(m, "zero count m")?;
    // s = sin(alpha/2) in (0, 1] determines everything else.
    let (s, alpha) = match given {
        ParamSpec::Alpha(alpha) => {
            if !(alpha > 0.0 && alpha <= PI) {
                return Err(Error::Domain(format!("alpha must lie in (0, pi], got {alpha}")));
            }
            ((0.5 * alpha).sin(), alpha)
        }
        ParamSpec::H(h) => {
            if !(h > 0.0 && h <= 2.0) {
                return Err(Error::Domain(format!("h must lie in (0, 2], got {h}")));
            }
            let s = (0.5 * h).powf(1.0 / m as f64);
            (s, 2.0 * s.asin())
        }
        ParamSpec::Y(y) => {
            if !(y >= 1.0) || !y.is_finite() {
                return Err(Error::Domain(format!("y must be finite and >= 1, got {y}")));
            }
            let s = y.powf(-1.0 / m as f64);
            (s, 2.0 * s.asin())
        }
    };
    let h = 2.0 * s.powi(m as i32);
    Ok(ParamRelation { m, h, alpha, lambda: 1.0 / (s * s), y: 2.0 / h })
}
