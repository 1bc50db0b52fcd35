//! The lifted view of the measure problem: the periodic weight
//! `w(x) = prod 2|sin(x_j/2)|` on `R^m`, diagonal lines through anchor
//! points, the lattice cubes such a line visits, and the resulting
//! decomposition of the sub-level measure. Everything here exists to be
//! checked: the campaign functions draw random configurations and report
//! violations instead of asserting.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::f64::consts::TAU;

use crate::closedforms::delta;
use crate::error::{Error, Result};
use crate::levelset::{level_set, level_set_with_period, SampleGrid};
use crate::oracle::{minimize_measure, SearchConfig};

/// `prod_j 2 |sin(x_j / 2)|`; 2 pi periodic in every coordinate.
pub fn w_eval(x: &[f64]) -> f64 {
    x.iter().map(|&c| 2.0 * (0.5 * c).sin().abs()).product()
}

/// Midpoint log-concavity of the weight on the open cube `(0, 2 pi)^m`:
/// true iff `w((x+y)/2) >= sqrt(w(x) w(y)) - 1e-12`. Holds for every valid
/// pair because `ln(2 sin(u/2))` is concave on `(0, 2 pi)`; the check
/// exists to exercise that fact numerically.
pub fn midpoint_convexity_check(x: &[f64], y: &[f64]) -> Result<bool> {
    if x.len() != y.len() || x.is_empty() {
        return Err(Error::Domain("need two points of equal positive dimension".into()));
    }
    for &c in x.iter().chain(y) {
        if !(c > 0.0 && c < TAU) {
            return Err(Error::Domain(format!(
                "coordinates must lie strictly inside (0, 2 pi), got {c}"
            )));
        }
    }
    let mid: Vec<f64> = x.iter().zip(y).map(|(a, b)| 0.5 * (a + b)).collect();
    Ok(w_eval(&mid) >= (w_eval(x) * w_eval(y)).sqrt() - 1e-12)
}

/// A cell of the period lattice: the half-open cube
/// `X_i [2 pi k_i, 2 pi (k_i + 1))`. Cubes met by a diagonal line are
/// reported with `k[0] = 0`, the line's own period cell.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LatticeCube {
    pub k: Vec<i64>,
}

/// Walks the diagonal line `lambda(t) = x + (t - x_1) * (1, ..., 1)` through
/// the lattice for `t` in `[0, 2 pi)`: each coordinate crosses exactly one
/// cube face, at `t = r_i` determined by the anchor offsets, so the visited
/// cubes are an increasing staircase. Returned `(cube, [start, end))` pairs
/// partition `[0, 2 pi)` exactly — intervals share breakpoint values by
/// construction, with no epsilon merging — and there are between 1 and `m`
/// of them, with `m` reached exactly when all crossing times are distinct.
pub fn line_cube_intersections(x: &[f64]) -> Vec<(LatticeCube, (f64, f64))> {
    let m = x.len();
    if m == 0 {
        return Vec::new();
    }
    // Per coordinate: starting cube index and the crossing time in (0, 2 pi].
    // A crossing at exactly 2 pi is the period wrap, not an interior break.
    let mut k0 = vec![0i64; m];
    let mut cross = vec![TAU; m];
    for i in 1..m {
        let d = x[i] - x[0];
        let rem = d.rem_euclid(TAU);
        k0[i] = ((d - rem) / TAU).round() as i64;
        cross[i] = TAU - rem;
    }

    let mut breaks: Vec<f64> = cross.iter().copied().filter(|&r| r < TAU).collect();
    breaks.sort_by(|a, b| a.partial_cmp(b).unwrap());
    breaks.dedup();

    let mut out = Vec::with_capacity(breaks.len() + 1);
    let mut cur = k0;
    let mut lo = 0.0;
    for &b in &breaks {
        out.push((LatticeCube { k: cur.clone() }, (lo, b)));
        for i in 1..m {
            if cross[i] == b {
                cur[i] += 1;
            }
        }
        lo = b;
    }
    out.push((LatticeCube { k: cur }, (lo, TAU)));
    out
}

/// The part of a diagonal line where the weight meets a threshold:
/// `{t in [0, 2 pi) : w(lambda(t)) >= h}` as disjoint `[start, end)`
/// intervals (wrapping parts split at the period boundary).
#[derive(Debug, Clone, Serialize)]
pub struct BodySlice {
    pub h: f64,
    pub intervals: Vec<(f64, f64)>,
}

impl BodySlice {
    pub fn measure(&self) -> f64 {
        self.intervals.iter().map(|&(lo, hi)| hi - lo).sum()
    }
}

fn slice_grid() -> SampleGrid {
    SampleGrid::default()
}

/// Signed product along the line through `x`: equals `w(lambda(t))` in
/// absolute value.
fn line_weight(x: &[f64]) -> impl Fn(f64) -> f64 + '_ {
    move |t: f64| x.iter().map(|&c| 2.0 * (0.5 * (c - x[0] + t)).sin()).product()
}

/// Extracts the super-level part of a diagonal line as explicit intervals
/// in the line parameter `t` (first coordinate of the moving point).
pub fn body_slice(x: &[f64], h: f64) -> Result<BodySlice> {
    if x.is_empty() {
        return Err(Error::Domain("need at least one coordinate".into()));
    }
    if !(h > 0.0 && h < 2.0) {
        return Err(Error::Domain(format!("threshold must lie in (0, 2), got {h}")));
    }
    let ls = level_set(line_weight(x), h, &slice_grid())?;
    let mut intervals = Vec::with_capacity(ls.segments.len() + 1);
    for &(s, len) in &ls.segments {
        let e = s + len;
        if e <= TAU {
            intervals.push((s, e));
        } else {
            intervals.push((s, TAU));
            intervals.push((0.0, e - TAU));
        }
    }
    intervals.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    Ok(BodySlice { h, intervals })
}

fn require_hyperplane(x: &[f64]) -> Result<()> {
    let s: f64 = x.iter().sum();
    if s.abs() > 1e-9 {
        return Err(Error::Domain(format!(
            "coordinates must sum to zero within 1e-9, got {s:e}"
        )));
    }
    Ok(())
}

/// One-dimensional measure, in the line parameter, of the super-level part
/// of the diagonal line through a zero-sum anchor `x`. Negating the anchor
/// turns the line weight into the zero product with zeros at `x`, so this
/// agrees with `chi(-x, h)`.
pub fn tau(x: &[f64], h: f64) -> Result<f64> {
    require_hyperplane(x)?;
    Ok(body_slice(x, h)?.measure())
}

/// The share of `tau` carried by one lattice cube: the measure of the
/// `t`-set whose moving point lies in `cube`. Cubes the line never enters
/// contribute zero, and the shares over the visited cubes sum to `tau`.
pub fn tau_k(x: &[f64], h: f64, cube: &LatticeCube) -> Result<f64> {
    require_hyperplane(x)?;
    let slice = body_slice(x, h)?;
    let Some(&(_, (lo, hi))) =
        line_cube_intersections(x).iter().find(|(c, _)| c == cube)
    else {
        return Ok(0.0);
    };
    let mut total = 0.0;
    for &(s, e) in &slice.intervals {
        let overlap = e.min(hi) - s.max(lo);
        if overlap > 0.0 {
            total += overlap;
        }
    }
    Ok(total)
}

/// Independent route to the arc-length measure: parameterize the segment
/// from `x` to `x + 2 pi * (1, ..., 1)` by arc length (period
/// `2 pi sqrt(m)`) and measure the super-level set in that parameter. Equals
/// `sqrt(m) * tau(x, h)` because the diagonal direction stretches the line
/// parameter by exactly `sqrt(m)`.
pub fn arc_length_measure(x: &[f64], h: f64) -> Result<f64> {
    if x.is_empty() {
        return Err(Error::Domain("need at least one coordinate".into()));
    }
    if !(h > 0.0 && h < 2.0) {
        return Err(Error::Domain(format!("threshold must lie in (0, 2), got {h}")));
    }
    let root_m = (x.len() as f64).sqrt();
    let f = |s: f64| -> f64 {
        x.iter().map(|&c| 2.0 * (0.5 * (c + s / root_m)).sin()).product()
    };
    Ok(level_set_with_period(f, h, TAU * root_m, &slice_grid())?.measure)
}

/// Outcome of a randomized verification campaign.
#[derive(Debug, Clone, Serialize)]
pub struct CampaignReport {
    pub checked: usize,
    pub violations: Vec<String>,
    pub max_error: f64,
}

impl CampaignReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn sample_rng(seed: u64, sample: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(sample);
    rng
}

fn open_cube_point(m: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    (0..m)
        .map(|_| loop {
            let v = rng.gen_range(0.0..TAU);
            if v > 0.0 {
                break v;
            }
        })
        .collect()
}

fn hyperplane_point(m: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    let mut x: Vec<f64> = (0..m).map(|_| rng.gen_range(0.0..TAU)).collect();
    let mean = x.iter().sum::<f64>() / m as f64;
    for v in &mut x {
        *v -= mean;
    }
    x
}

/// Draws random pairs in the open cube and checks midpoint log-concavity
/// of the weight on each. `max_error` is the worst (clamped) defect
/// `sqrt(w(x) w(y)) - w(mid)`.
pub fn convexity_campaign(m: usize, samples: usize, seed: u64) -> Result<CampaignReport> {
    if m == 0 {
        return Err(Error::Domain("dimension must be at least 1".into()));
    }
    let mut report = CampaignReport { checked: 0, violations: Vec::new(), max_error: 0.0 };
    for s in 0..samples {
        let mut rng = sample_rng(seed, s as u64);
        let x = open_cube_point(m, &mut rng);
        let y = open_cube_point(m, &mut rng);
        let mid: Vec<f64> = x.iter().zip(&y).map(|(a, b)| 0.5 * (a + b)).collect();
        let defect = (w_eval(&x) * w_eval(&y)).sqrt() - w_eval(&mid);
        report.max_error = report.max_error.max(defect);
        report.checked += 1;
        if !midpoint_convexity_check(&x, &y)? {
            report.violations.push(format!(
                "midpoint concavity failed at sample {s}: defect {defect:e}"
            ));
        }
    }
    Ok(report)
}

/// Draws random anchors and checks the staircase structure of
/// `line_cube_intersections`: between 1 and `m` cubes, intervals chaining
/// exactly from 0 to 2 pi with no gaps, consecutive cube indices increasing
/// by 0/1 steps, and the count hitting `m` exactly when all crossing times
/// are distinct.
pub fn cube_campaign(m: usize, samples: usize, seed: u64) -> Result<CampaignReport> {
    if m == 0 {
        return Err(Error::Domain("dimension must be at least 1".into()));
    }
    let mut report = CampaignReport { checked: 0, violations: Vec::new(), max_error: 0.0 };
    for s in 0..samples {
        let mut rng = sample_rng(seed, s as u64);
        // mix generic anchors with lattice-aligned ones to hit wrap cases
        let mut x: Vec<f64> = (0..m).map(|_| rng.gen_range(-20.0..20.0)).collect();
        if s % 5 == 0 {
            let base = x[0];
            for v in x.iter_mut().skip(1) {
                if rng.gen_range(0..2) == 0 {
                    *v = base + TAU * rng.gen_range(-2i64..3) as f64;
                }
            }
        }
        report.checked += 1;
        let parts = line_cube_intersections(&x);
        let mut bad = |msg: String| report.violations.push(format!("sample {s}: {msg}"));
        if parts.is_empty() || parts.len() > m {
            bad(format!("{} cubes for dimension {m}", parts.len()));
            continue;
        }
        if parts[0].1 .0 != 0.0 || parts.last().unwrap().1 .1 != TAU {
            bad("intervals do not span the period".into());
        }
        for w in parts.windows(2) {
            if w[0].1 .1 != w[1].1 .0 {
                bad(format!("gap between {:?} and {:?}", w[0].1, w[1].1));
            }
            let diffs: Vec<i64> =
                w[1].0.k.iter().zip(&w[0].0.k).map(|(a, b)| a - b).collect();
            if diffs.iter().any(|&d| d != 0 && d != 1) || diffs.iter().all(|&d| d == 0) {
                bad(format!("cube step {diffs:?} is not a 0/1 increment"));
            }
        }
        let distinct = {
            let mut rs: Vec<f64> = (1..m).map(|i| TAU - (x[i] - x[0]).rem_euclid(TAU)).collect();
            rs.sort_by(|a, b| a.partial_cmp(b).unwrap());
            rs.dedup();
            rs.len() == m - 1 && rs.iter().all(|&r| r < TAU)
        };
        if (parts.len() == m) != distinct {
            bad(format!(
                "count {} but distinct-crossings predicate is {distinct}",
                parts.len()
            ));
        }
    }
    Ok(report)
}

/// Draws random zero-sum anchors and checks that the cube shares recompose
/// the line measure: `|sum_k tau_k - tau| <= 1e-9` with at most `m`
/// nonzero shares.
pub fn decomposition_check(m: usize, h: f64, samples: usize, seed: u64) -> Result<CampaignReport> {
    if m == 0 {
        return Err(Error::Domain("dimension must be at least 1".into()));
    }
    let mut report = CampaignReport { checked: 0, violations: Vec::new(), max_error: 0.0 };
    for s in 0..samples {
        let mut rng = sample_rng(seed, s as u64);
        let x = hyperplane_point(m, &mut rng);
        let total = tau(&x, h)?;
        let mut sum = 0.0;
        let mut nonzero = 0;
        for (cube, _) in line_cube_intersections(&x) {
            let part = tau_k(&x, h, &cube)?;
            if part > 0.0 {
                nonzero += 1;
            }
            sum += part;
        }
        let err = (sum - total).abs();
        report.checked += 1;
        report.max_error = report.max_error.max(err);
        if err > 1e-9 {
            report.violations.push(format!(
                "sample {s}: shares sum to {sum} but tau is {total}"
            ));
        }
        if nonzero > m {
            report.violations.push(format!("sample {s}: {nonzero} nonzero shares"));
        }
    }
    Ok(report)
}

/// Draws random zero-sum anchors and checks the two routes to the
/// arc-length measure against each other (`mes_1 = sqrt(m) * tau` within
/// 1e-8) and against the lower bound `sqrt(m) * delta(m, h)`.
pub fn equivalence_check(m: usize, h: f64, samples: usize, seed: u64) -> Result<CampaignReport> {
    if m == 0 {
        return Err(Error::Domain("dimension must be at least 1".into()));
    }
    let bound = (m as f64).sqrt() * delta(m, h)?;
    let mut report = CampaignReport { checked: 0, violations: Vec::new(), max_error: 0.0 };
    for s in 0..samples {
        let mut rng = sample_rng(seed, s as u64);
        let x = hyperplane_point(m, &mut rng);
        let direct = arc_length_measure(&x, h)?;
        let scaled = (m as f64).sqrt() * tau(&x, h)?;
        let err = (direct - scaled).abs();
        report.checked += 1;
        report.max_error = report.max_error.max(err);
        if err > 1e-8 {
            report.violations.push(format!(
                "sample {s}: arc-length {direct} vs scaled {scaled}"
            ));
        }
        if direct < bound - 1e-6 {
            report.violations.push(format!(
                "sample {s}: measure {direct} undercuts the bound {bound}"
            ));
        }
    }
    Ok(report)
}

/// Runs the measure search and classifies the level set of the best
/// configuration found: it must consist of exactly one segment and `m - 1`
/// touch points. Search output sits a hair off the true optimum — the
/// descent cone at the touch cusps is narrow, so compass search stalls with
/// near-tangent lobes a few times the value gap below `h` — hence the touch
/// band is widened to 1e-2. That cannot swallow a real segment: at a
/// near-optimal configuration a lobe exceeding `h` by `e` would add about
/// `sqrt(e)` to the value, so surviving excesses are quadratically small.
pub fn structure_check(m: usize, h: f64, cfg: &SearchConfig) -> Result<CampaignReport> {
    if m > 6 {
        return Err(Error::Domain(format!("structure check is desk-scale (m <= 6), got {m}")));
    }
    let best = minimize_measure(m, h, cfg)?;
    let grid = SampleGrid { touch_tol: 1e-2, ..SampleGrid::default() };
    let phis = best.phis;
    let ls = level_set(
        |t| phis.iter().map(|&p| 2.0 * (0.5 * (t - p)).sin()).product::<f64>(),
        h,
        &grid,
    )?;
    let mut report = CampaignReport { checked: 1, violations: Vec::new(), max_error: 0.0 };
    report.max_error = (ls.measure - best.value).abs();
    if ls.segments.len() != 1 {
        report.violations.push(format!(
            "expected one segment, found {} ({:?})",
            ls.segments.len(),
            ls.segments
        ));
    }
    if ls.touch_points.len() != m - 1 {
        report.violations.push(format!(
            "expected {} touch points, found {} ({:?})",
            m - 1,
            ls.touch_points.len(),
            ls.touch_points
        ));
    }
    Ok(report)
}
