//! Level sets `{t : |f(t)| >= h}` of periodic functions, extracted as a
//! union of closed segments plus isolated touch points, with their measure.
//!
//! Detection is grid-based: sample `|f| - h`, bisect every sign change down
//! to `bisect_tol`, pair the crossings into segments, and ternary-search each
//! sub-threshold stretch for interior local maxima that come within
//! `touch_tol` of the threshold (tangencies from below). A segment on which
//! `|f|` never climbs more than `touch_tol` above `h` is likewise a tangency
//! at tolerance resolution and is reported as a touch point; exact tangencies
//! always produce such segments, since rounding flattens the contact into a
//! plateau of width `~sqrt(eps)` where `|f| - h` evaluates to zero. Features
//! narrower than a few grid cells are resolved at grid semantics and flagged.

use serde::Serialize;
use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::trigpoly::TrigPoly;

/// Sampling and refinement parameters for level-set extraction.
#[derive(Debug, Clone, Copy)]
pub struct SampleGrid {
    /// Number of uniform samples per period. At least 64.
    pub n: usize,
    /// Interval width at which boundary bisection stops.
    pub bisect_tol: f64,
    /// Band below the threshold within which a sub-threshold local maximum
    /// counts as a touch point (a value band on `|f| - h`, not a distance).
    pub touch_tol: f64,
}

impl Default for SampleGrid {
    fn default() -> Self {
        Self { n: 8192, bisect_tol: 1e-10, touch_tol: 1e-7 }
    }
}

impl SampleGrid {
    fn validate(&self) -> Result<()> {
        if self.n < 64 {
            return Err(Error::Domain(format!("grid must have at least 64 samples, got {}", self.n)));
        }
        if !(self.bisect_tol > 0.0) || !(self.touch_tol > 0.0) {
            return Err(Error::Domain("grid tolerances must be positive".into()));
        }
        Ok(())
    }
}

/// A level set on one period: closed segments (start, length), isolated
/// touch points, and the total measure (sum of segment lengths).
///
/// Segment starts lie in `[0, period)`; a segment crossing the seam keeps its
/// start near the end of the period and a length that runs across it.
#[derive(Debug, Clone, Serialize)]
pub struct LevelSet {
    pub h: f64,
    pub segments: Vec<(f64, f64)>,
    pub touch_points: Vec<f64>,
    pub measure: f64,
    pub warnings: Vec<String>,
}

fn bisect<F: Fn(f64) -> f64>(d: &F, mut lo: f64, mut hi: f64, lo_inside: bool, tol: f64) -> f64 {
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if (d(mid) >= 0.0) == lo_inside {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn ternary_max<F: Fn(f64) -> f64>(d: &F, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64) {
    while hi - lo > tol {
        let third = (hi - lo) / 3.0;
        let (m1, m2) = (lo + third, hi - third);
        if d(m1) < d(m2) {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    let t = 0.5 * (lo + hi);
    (t, d(t))
}

/// Level set of `|f| >= h` over one period of `2 pi`. `f` must be `2 pi`-periodic.
pub fn level_set<F: Fn(f64) -> f64>(f: F, h: f64, grid: &SampleGrid) -> Result<LevelSet> {
    level_set_with_period(f, h, TAU, grid)
}

/// Same engine for an arbitrary period (`f` must be `period`-periodic);
/// used for arc-length parameterized sections of the lifted body.
pub fn level_set_with_period<F: Fn(f64) -> f64>(
    f: F,
    h: f64,
    period: f64,
    grid: &SampleGrid,
) -> Result<LevelSet> {
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::InvalidThreshold { h });
    }
    if !(period > 0.0) || !period.is_finite() {
        return Err(Error::Domain(format!("period must be positive and finite, got {period}")));
    }
    grid.validate()?;

    let n = grid.n;
    let dt = period / n as f64;
    let d = |t: f64| f(t).abs() - h;
    let dv: Vec<f64> = (0..n).map(|i| d(dt * i as f64)).collect();
    let inside: Vec<bool> = dv.iter().map(|&v| v >= 0.0).collect();

    // (position, entering) pairs; entering means the set begins there.
    let mut crossings: Vec<(f64, bool)> = Vec::new();
    for i in 0..n {
        let j = (i + 1) % n;
        if inside[i] != inside[j] {
            let root = bisect(&d, dt * i as f64, dt * (i + 1) as f64, inside[i], grid.bisect_tol);
            let root = if root >= period { root - period } else { root };
            crossings.push((root, !inside[i]));
        }
    }

    let mut segments: Vec<(f64, f64)> = Vec::new();
    let mut touches: Vec<f64> = Vec::new();
    let scan_region = |lo: f64, hi: f64, out: &mut Vec<f64>| {
        // interior grid local maxima of d inside the cyclic region (lo, hi)
        let span = if hi > lo { hi - lo } else { (hi - lo).rem_euclid(period) };
        let in_region = |t: f64| {
            let off = (t - lo).rem_euclid(period);
            off > 0.0 && off < span
        };
        for i in 0..n {
            let t = dt * i as f64;
            if !in_region(t - dt) || !in_region(t) || !in_region(t + dt) {
                continue;
            }
            let (prev, next) = (dv[(i + n - 1) % n], dv[(i + 1) % n]);
            if dv[i] > prev && dv[i] >= next {
                let (arg, val) = ternary_max(&d, t - dt, t + dt, grid.bisect_tol);
                if val >= -grid.touch_tol {
                    out.push(arg.rem_euclid(period));
                }
            }
        }
    };

    if crossings.is_empty() {
        if inside[0] {
            segments.push((0.0, period));
        } else {
            scan_region(0.0, period, &mut touches);
        }
    } else {
        crossings.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let k = crossings.len();
        for idx in 0..k {
            let (t0, entering) = crossings[idx];
            let (t1, _) = crossings[(idx + 1) % k];
            let len = (t1 - t0).rem_euclid(period);
            if len <= 0.0 {
                continue;
            }
            if entering {
                segments.push((t0, len));
            } else {
                scan_region(t0, t1, &mut touches);
            }
        }
    }

    // Reclassify tangency-class segments. Two ways a "segment" is really a
    // touch point: it is shorter than 10 * bisect_tol (below boundary
    // resolution), or |f| never climbs more than touch_tol above h across it.
    // The latter always happens at an exact tangency, where rounding turns
    // the contact into a plateau of width ~sqrt(eps) with zero excess.
    let tiny = 10.0 * grid.bisect_tol;
    let max_excess = |s: f64, l: f64| -> f64 {
        let mut best = f64::NEG_INFINITY;
        let mut i = (s / dt).ceil() as i64;
        while (dt * i as f64) < s + l {
            let t = dt * i as f64;
            if t > s {
                best = best.max(dv[i.rem_euclid(n as i64) as usize]);
            }
            i += 1;
        }
        if best.is_finite() {
            best
        } else {
            ternary_max(&d, s, s + l, grid.bisect_tol).1
        }
    };
    segments.retain(|&(s, l)| {
        if l < tiny || (l < period && max_excess(s, l) <= grid.touch_tol) {
            touches.push((s + 0.5 * l).rem_euclid(period));
            false
        } else {
            true
        }
    });

    segments.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    touches.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let measure: f64 = segments.iter().map(|&(_, l)| l).sum();
    let mut warnings = Vec::new();
    if segments.iter().any(|&(_, l)| l < 3.0 * dt) {
        warnings.push("grid_too_coarse".to_string());
    }
    Ok(LevelSet { h, segments, touch_points: touches, measure, warnings })
}

/// The deviation-in-measure functional: `mu(f) = mes{t : |f(t)| >= 1}`,
/// measured on the default grid.
pub fn mu(p: &TrigPoly) -> f64 {
    level_set(|t| p.eval(t), 1.0, &SampleGrid::default())
        .expect("threshold 1 and the default grid are always valid")
        .measure
}

/// Measure of `{t : |g_m(t; phis)| >= h}` for the unit-scale zero product
/// `g_m(t) = prod_j 2 sin((t - phi_j)/2)`. Invariant under common rotation
/// of the angles.
pub fn chi(phis: &[f64], h: f64) -> Result<f64> {
    if phis.iter().any(|p| !p.is_finite()) {
        return Err(Error::Domain("zero angles must be finite".into()));
    }
    let g = |t: f64| {
        let mut prod = 1.0;
        for &phi in phis {
            prod *= 2.0 * (0.5 * (t - phi)).sin();
        }
        prod
    };
    Ok(level_set(g, h, &SampleGrid::default())?.measure)
}
