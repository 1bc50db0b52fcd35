//! Derivative-free searches that rediscover the closed-form extremal values
//! without consulting them: measure and sup-norm minimization over zero
//! configurations, discrete minimax on unions of intervals with an exchange
//! certificate, the averaging functional on monic circle polynomials, and
//! the leading-harmonic comparison scan.
//!
//! The measure objective is piecewise-smooth with flat plateaus near
//! tangencies, so everything here is pattern search: coordinate probes with
//! a shrinking step, multi-started from seeded random configurations. Runs
//! are serial and the per-start RNG streams are fixed, so results are
//! bit-for-bit reproducible for a given seed.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::f64::consts::{PI, TAU};

use crate::closedforms::{mu_leading, sigma};
use crate::error::{Error, Result};
use crate::levelset::chi;
use crate::trigpoly::{reduce_angle, CirclePoly};

/// Knobs for the multi-start pattern search.
#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Independent restarts; the merge is deterministic.
    pub starts: usize,
    /// Initial probe step; `None` means `pi / m`.
    pub init_step: Option<f64>,
    /// Step multiplier after a probe cycle with no improvement, in (0, 1).
    pub shrink: f64,
    /// The search stops once the step falls below this.
    pub min_step: f64,
    /// Seed for the per-start RNG streams.
    pub seed: u64,
    /// Cap on objective evaluations across all starts.
    pub max_evals: usize,
    /// Lifts the `m <= 8` desk-scale guard.
    pub allow_large_m: bool,
    /// Record `(evaluation index, value)` at every improvement.
    pub keep_history: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            starts: 32,
            init_step: None,
            shrink: 0.5,
            min_step: 1e-6,
            seed: 0,
            max_evals: 200_000,
            allow_large_m: false,
            keep_history: false,
        }
    }
}

/// Outcome of a search: the best zero configuration found, canonicalized
/// (sorted; for rotation-invariant objectives also shifted so the angles
/// sum to zero), with `value` re-evaluated at exactly those angles.
#[derive(Debug, Clone, Serialize)]
pub struct SearchResult {
    pub phis: Vec<f64>,
    pub value: f64,
    pub evals: usize,
    pub budget_exhausted: bool,
    pub history: Option<Vec<(usize, f64)>>,
}

fn guard_m(m: usize, cfg: &SearchConfig) -> Result<()> {
    if m == 0 {
        return Err(Error::Domain("zero count m must be at least 1".into()));
    }
    if m > 8 && !cfg.allow_large_m {
        return Err(Error::Domain(format!(
            "m = {m} exceeds the desk-scale guard (8); set allow_large_m to override"
        )));
    }
    Ok(())
}

/// `prod_j 2 sin((t - phi_j)/2)`, the unit-leading zero product.
fn zero_product(phis: &[f64], t: f64) -> f64 {
    phis.iter().map(|&phi| 2.0 * (0.5 * (t - phi)).sin()).product()
}

/// Orthonormal basis of the hyperplane `{sum phi = 0}` in `R^m`
/// (`m - 1` rows; empty for `m = 1`).
fn helmert(m: usize) -> Vec<Vec<f64>> {
    (1..m)
        .map(|i| {
            let norm = 1.0 / ((i * (i + 1)) as f64).sqrt();
            let mut v = vec![0.0; m];
            for entry in v.iter_mut().take(i) {
                *entry = norm;
            }
            v[i] = -(i as f64) * norm;
            v
        })
        .collect()
}

fn canonical_phis(phis: &[f64], zero_sum: bool) -> Vec<f64> {
    let mut r: Vec<f64> = phis.iter().map(|&p| reduce_angle(p).0).collect();
    r.sort_by(|a, b| a.partial_cmp(b).unwrap());
    if zero_sum {
        let mean = r.iter().sum::<f64>() / r.len() as f64;
        for v in &mut r {
            *v -= mean;
        }
    }
    r
}

struct Tally<'a> {
    evals: usize,
    max_evals: usize,
    exhausted: bool,
    best_seen: f64,
    history: Option<Vec<(usize, f64)>>,
    objective: &'a mut dyn FnMut(&[f64]) -> f64,
}

impl Tally<'_> {
    fn eval(&mut self, phis: &[f64]) -> Option<f64> {
        if self.evals >= self.max_evals {
            self.exhausted = true;
            return None;
        }
        self.evals += 1;
        let v = (self.objective)(phis);
        if v < self.best_seen {
            self.best_seen = v;
            if let Some(h) = &mut self.history {
                h.push((self.evals, v));
            }
        }
        Some(v)
    }
}

/// Multi-start compass search over zero configurations. With
/// `hyperplane = true` the probes move in an orthonormal basis of
/// `{sum phi = 0}`, so the constraint holds exactly rather than by penalty;
/// otherwise the angles move independently. Ties between starts (within
/// 1e-12 in value) go to the lexicographically smallest canonical angles.
fn multistart(
    m: usize,
    hyperplane: bool,
    objective: &mut dyn FnMut(&[f64]) -> f64,
    cfg: &SearchConfig,
) -> Result<SearchResult> {
    if cfg.starts == 0 {
        return Err(Error::Domain("need at least one start".into()));
    }
    if !(cfg.shrink > 0.0 && cfg.shrink < 1.0) {
        return Err(Error::Domain(format!("shrink must lie in (0, 1), got {}", cfg.shrink)));
    }
    let init_step = cfg.init_step.unwrap_or(PI / m as f64);
    if !(cfg.min_step > 0.0 && cfg.min_step < init_step) {
        return Err(Error::Domain(format!(
            "need 0 < min_step < init_step, got {} and {init_step}",
            cfg.min_step
        )));
    }
    if cfg.max_evals == 0 {
        return Err(Error::Domain("evaluation budget must be positive".into()));
    }

    let basis = if hyperplane { helmert(m) } else { Vec::new() };
    let dims = if hyperplane { m - 1 } else { m };
    let embed = |u: &[f64]| -> Vec<f64> {
        if hyperplane {
            let mut phis = vec![0.0; m];
            for (ui, row) in u.iter().zip(&basis) {
                for (p, b) in phis.iter_mut().zip(row) {
                    *p += ui * b;
                }
            }
            phis
        } else {
            u.to_vec()
        }
    };

    let mut tally = Tally {
        evals: 0,
        max_evals: cfg.max_evals,
        exhausted: false,
        best_seen: f64::INFINITY,
        history: cfg.keep_history.then(Vec::new),
        objective,
    };
    let mut candidates: Vec<(f64, Vec<f64>)> = Vec::new();

    'starts: for start in 0..cfg.starts {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(start as u64);
        let raw: Vec<f64> = (0..m).map(|_| rng.gen_range(0.0..TAU)).collect();
        let mut best_u: Vec<f64> = if hyperplane {
            basis.iter().map(|row| row.iter().zip(&raw).map(|(b, p)| b * p).sum()).collect()
        } else {
            raw
        };
        let Some(mut best_v) = tally.eval(&embed(&best_u)) else {
            break 'starts;
        };
        let mut step = init_step;
        'search: while step >= cfg.min_step {
            let mut improved = false;
            for i in 0..dims {
                for sgn in [1.0, -1.0] {
                    let mut cand = best_u.clone();
                    cand[i] += sgn * step;
                    let Some(v) = tally.eval(&embed(&cand)) else {
                        break 'search;
                    };
                    if v < best_v {
                        best_v = v;
                        best_u = cand;
                        improved = true;
                    }
                }
            }
            if !improved {
                step *= cfg.shrink;
            }
        }
        candidates.push((best_v, embed(&best_u)));
        if tally.exhausted {
            break 'starts;
        }
    }

    let evals = tally.evals;
    let budget_exhausted = tally.exhausted;
    let history = tally.history.take();
    let objective = tally.objective;

    // Canonicalize every candidate and re-evaluate there, so the reported
    // value belongs to the reported angles.
    let mut best: Option<(f64, Vec<f64>)> = None;
    for (_, phis) in candidates {
        let canon = canonical_phis(&phis, hyperplane);
        let v = objective(&canon);
        best = match best {
            None => Some((v, canon)),
            Some((bv, bp)) => {
                let take = v < bv - 1e-12
                    || ((v - bv).abs() <= 1e-12
                        && canon
                            .iter()
                            .zip(&bp)
                            .find_map(|(a, b)| (a != b).then(|| a < b))
                            .unwrap_or(false));
                if take {
                    Some((v, canon))
                } else {
                    Some((bv, bp))
                }
            }
        };
    }
    let (value, phis) = best.expect("budget >= 1 guarantees at least one candidate");
    Ok(SearchResult { phis, value, evals, budget_exhausted, history })
}

/// Searches for the zero configuration minimizing the measure of
/// `{t : |g(t)| >= h}`. The true optimum is `delta(m, h)`; the search gets
/// within default tolerances of it for desk-scale `m` without ever calling
/// the closed form.
pub fn minimize_measure(m: usize, h: f64, cfg: &SearchConfig) -> Result<SearchResult> {
    guard_m(m, cfg)?;
    if !(h > 0.0 && h < 2.0) {
        return Err(Error::Domain(format!("threshold must lie in (0, 2), got {h}")));
    }
    let mut obj =
        |phis: &[f64]| chi(phis, h).expect("search angles are finite and h was validated");
    multistart(m, true, &mut obj, cfg)
}

/// Sup of `|f|` over one period: grid values plus ternary refinement around
/// every grid-local maximum.
fn sup_abs_period<F: Fn(f64) -> f64>(f: F, samples: usize) -> f64 {
    let dt = TAU / samples as f64;
    let vals: Vec<f64> = (0..samples).map(|i| f(dt * i as f64).abs()).collect();
    let mut best = 0.0f64;
    for i in 0..samples {
        let (prev, next) = (vals[(i + samples - 1) % samples], vals[(i + 1) % samples]);
        if vals[i] >= prev && vals[i] >= next && vals[i] >= best - 2.0 * dt {
            let t = dt * i as f64;
            let (mut lo, mut hi) = (t - dt, t + dt);
            while hi - lo > 1e-10 {
                let third = (hi - lo) / 3.0;
                if f(lo + third).abs() < f(hi - third).abs() {
                    lo += third;
                } else {
                    hi -= third;
                }
            }
            best = best.max(f(0.5 * (lo + hi)).abs());
        }
    }
    best
}

/// Sup of `|f|` over a union of closed intervals, sampled proportionally
/// with endpoint values included and interior maxima refined.
fn sup_abs_intervals<F: Fn(f64) -> f64>(f: F, q: &[(f64, f64)], samples: usize) -> f64 {
    let total: f64 = q.iter().map(|&(lo, hi)| hi - lo).sum();
    let mut best = 0.0f64;
    for &(lo, hi) in q {
        let len = hi - lo;
        let k = ((samples as f64 * len / total).ceil() as usize).max(8);
        let dt = len / k as f64;
        let vals: Vec<f64> = (0..=k).map(|j| f(lo + dt * j as f64).abs()).collect();
        for (j, &v) in vals.iter().enumerate() {
            best = best.max(v);
            if j > 0 && j < k && v >= vals[j - 1] && v >= vals[j + 1] {
                let t = lo + dt * j as f64;
                let (mut a, mut b) = ((t - dt).max(lo), (t + dt).min(hi));
                while b - a > 1e-10 {
                    let third = (b - a) / 3.0;
                    if f(a + third).abs() < f(b - third).abs() {
                        a += third;
                    } else {
                        b -= third;
                    }
                }
                best = best.max(f(0.5 * (a + b)).abs());
            }
        }
    }
    best
}

/// Searches for the zero configuration minimizing `sup_t |g(t)|`. The
/// optimum is the constant 2, attained by equally spaced zeros.
pub fn minimize_supnorm(m: usize, cfg: &SearchConfig) -> Result<SearchResult> {
    guard_m(m, cfg)?;
    let mut obj = |phis: &[f64]| sup_abs_period(|t| zero_product(phis, t), 8192);
    multistart(m, true, &mut obj, cfg)
}

/// Searches for the zero configuration minimizing `sup_{t in Q} |g(t)|`
/// over a union of closed intervals with total length in `(0, 2 pi)`.
/// Zeros are unconstrained on the circle here — the objective is not
/// rotation invariant — so the returned angles are only sorted and reduced,
/// not shifted to zero sum. When `Q` is a single arc of length `2 alpha`
/// the optimum is `eps_arc(m, 2 alpha)`; any other set of the same measure
/// does no better.
pub fn e_on_set(m: usize, q: &[(f64, f64)], cfg: &SearchConfig) -> Result<SearchResult> {
    guard_m(m, cfg)?;
    validate_intervals(q)?;
    let total: f64 = q.iter().map(|&(lo, hi)| hi - lo).sum();
    if total >= TAU {
        return Err(Error::Domain(format!(
            "set must have measure strictly less than one period, got {total}"
        )));
    }
    let mut obj = |phis: &[f64]| sup_abs_intervals(|t| zero_product(phis, t), q, 4096);
    multistart(m, false, &mut obj, cfg)
}

fn validate_intervals(q: &[(f64, f64)]) -> Result<()> {
    if q.is_empty() {
        return Err(Error::Domain("need at least one interval".into()));
    }
    for &(lo, hi) in q {
        if !lo.is_finite() || !hi.is_finite() || lo >= hi {
            return Err(Error::Domain(format!("bad interval ({lo}, {hi})")));
        }
        if hi - lo > TAU {
            return Err(Error::Domain(format!(
                "interval ({lo}, {hi}) is longer than one period"
            )));
        }
    }
    Ok(())
}

/// The averaging functional `(1/m) sum_l P(e^{i theta_l})` over the `m`
/// angles `theta_l = (Psi + 2 pi l)/m`, `Psi = m pi + sum phi_j`. Picking
/// those angles kills every coefficient of `P` except the constant and the
/// leading one, so the value is `2 e^{i Psi}` — modulus exactly 2 — for
/// every monic polynomial with unimodular zeros. (For the empty product the
/// convention `2` is kept.)
pub fn sum_functional(p: &CirclePoly) -> Complex64 {
    let m = p.m();
    if m == 0 {
        return Complex64::new(2.0, 0.0);
    }
    let psi = p.psi();
    let mut acc = Complex64::new(0.0, 0.0);
    for l in 0..m {
        let theta = (psi + TAU * l as f64) / m as f64;
        acc += p.eval_at_angle(theta);
    }
    acc / m as f64
}

/// Discrete minimax: value, coefficients (constant, then cos/sin pairs up
/// to order `n-1`), and the equioscillation evidence found on the grid.
#[derive(Debug, Clone, Serialize)]
pub struct MinimaxResult {
    pub value: f64,
    pub coeffs: Vec<f64>,
    /// One `(t, error)` representative per sign run of near-maximal error.
    pub active: Vec<(f64, f64)>,
    /// Number of alternating sign runs in `active`.
    pub alternations: usize,
    /// False when the exchange iteration hit its cap before equioscillating.
    pub certified: bool,
}

/// Best uniform approximation of `cos nt` on `Q` (a union of closed
/// intervals, discretized to about `grid_pts` points) by trigonometric
/// polynomials of order `n - 1`, computed with a one-point exchange over
/// references of `2n` alternating points. The certified value carries an
/// `O(spacing^2)` grid bias. On a single interval of length `2 alpha` the
/// value is `u_compact(n, 2 alpha)` and the active set shows `2n + 1`
/// alternations.
pub fn minimax_on_set(n: usize, q: &[(f64, f64)], grid_pts: usize) -> Result<MinimaxResult> {
    if n == 0 {
        return Err(Error::Domain("order n must be at least 1".into()));
    }
    validate_intervals(q)?;
    if grid_pts < 8 * (n + 1) {
        return Err(Error::Domain(format!(
            "need at least {} grid points for order {n}, got {grid_pts}",
            8 * (n + 1)
        )));
    }
    let total: f64 = q.iter().map(|&(lo, hi)| hi - lo).sum();
    if total > TAU + 1e-12 {
        return Err(Error::Domain(format!(
            "set must fit in one period, got total length {total}"
        )));
    }

    let mut sorted = q.to_vec();
    sorted.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let mut grid: Vec<f64> = Vec::with_capacity(grid_pts + q.len());
    for &(lo, hi) in &sorted {
        let len = hi - lo;
        let k = ((grid_pts as f64 * len / total).round() as usize).max(2);
        if len >= TAU {
            // full circle: open at the right end to avoid a duplicated point
            grid.extend((0..k).map(|j| lo + len * j as f64 / k as f64));
        } else {
            grid.extend((0..k).map(|j| lo + len * j as f64 / (k - 1) as f64));
        }
    }

    // basis: 1, cos t, sin t, ..., cos((n-1)t), sin((n-1)t) — dimension 2n-1
    let dim = 2 * n - 1;
    let basis_at = |t: f64, j: usize| -> f64 {
        if j == 0 {
            1.0
        } else {
            let ord = ((j + 1) / 2) as f64;
            if j % 2 == 1 {
                (ord * t).cos()
            } else {
                (ord * t).sin()
            }
        }
    };
    let g = grid.len();
    let mut phi = vec![0.0; g * dim];
    let mut target = vec![0.0; g];
    for (i, &t) in grid.iter().enumerate() {
        for j in 0..dim {
            phi[i * dim + j] = basis_at(t, j);
        }
        target[i] = (n as f64 * t).cos();
    }

    // reference: 2n grid indices, kept sorted with alternating error signs
    let mut refs: Vec<usize> = (0..2 * n).map(|k| k * (g - 1) / (2 * n - 1)).collect();
    refs.dedup();
    while refs.len() < 2 * n {
        // pathologically small grids: pad with unused indices
        let missing = (0..g).find(|i| !refs.contains(i)).expect("grid has >= 2n points");
        refs.push(missing);
        refs.sort_unstable();
    }

    let mut coeffs = vec![0.0; dim];
    let mut err = vec![0.0; g];
    let mut certified = false;
    for _ in 0..300 {
        // solve for coefficients and level E: error is (-1)^i E on the refs
        let rows = 2 * n;
        let mut a = vec![0.0; rows * (rows + 1)];
        for (i, &r) in refs.iter().enumerate() {
            for j in 0..dim {
                a[i * (rows + 1) + j] = phi[r * dim + j];
            }
            a[i * (rows + 1) + dim] = if i % 2 == 0 { 1.0 } else { -1.0 };
            a[i * (rows + 1) + rows] = target[r];
        }
        let sol = solve_dense(&mut a, rows)
            .ok_or_else(|| Error::Domain("degenerate reference system".into()))?;
        coeffs.copy_from_slice(&sol[..dim]);
        let level = sol[dim].abs();

        let mut emax = 0.0f64;
        let mut istar = 0usize;
        for i in 0..g {
            let mut p = 0.0;
            for j in 0..dim {
                p += coeffs[j] * phi[i * dim + j];
            }
            err[i] = target[i] - p;
            if err[i].abs() > emax {
                emax = err[i].abs();
                istar = i;
            }
        }
        if emax <= level * (1.0 + 1e-12) + 1e-15 {
            certified = true;
            break;
        }

        // single-point exchange preserving sign alternation
        let s_star = err[istar] > 0.0;
        let pos = refs.partition_point(|&r| r < istar);
        if pos == 0 {
            if (err[refs[0]] > 0.0) == s_star {
                refs[0] = istar;
            } else {
                refs.insert(0, istar);
                refs.pop();
            }
        } else if pos == refs.len() {
            let last = refs.len() - 1;
            if (err[refs[last]] > 0.0) == s_star {
                refs[last] = istar;
            } else {
                refs.remove(0);
                refs.push(istar);
            }
        } else if (err[refs[pos - 1]] > 0.0) == s_star {
            refs[pos - 1] = istar;
        } else {
            refs[pos] = istar;
        }
    }

    let emax = err.iter().fold(0.0f64, |m, e| m.max(e.abs()));
    // collapse same-sign runs of near-maximal error into representatives
    let mut active: Vec<(f64, f64)> = Vec::new();
    let mut last_sign = 0i8;
    for i in 0..g {
        if err[i].abs() >= emax - 1e-8 {
            let s = if err[i] > 0.0 { 1 } else { -1 };
            if s != last_sign {
                active.push((grid[i], err[i]));
                last_sign = s;
            } else if let Some(rep) = active.last_mut() {
                if err[i].abs() > rep.1.abs() {
                    *rep = (grid[i], err[i]);
                }
            }
        }
    }
    let alternations = active.len();
    Ok(MinimaxResult { value: emax, coeffs, active, alternations, certified })
}

/// Gaussian elimination with partial pivoting on an `n x (n+1)` augmented
/// row-major system. Returns `None` when the pivot collapses.
fn solve_dense(a: &mut [f64], n: usize) -> Option<Vec<f64>> {
    let w = n + 1;
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| {
            a[i * w + col].abs().partial_cmp(&a[j * w + col].abs()).unwrap()
        })?;
        if a[pivot * w + col].abs() < 1e-14 {
            return None;
        }
        if pivot != col {
            for j in 0..w {
                a.swap(col * w + j, pivot * w + j);
            }
        }
        for row in col + 1..n {
            let f = a[row * w + col] / a[col * w + col];
            for j in col..w {
                a[row * w + j] -= f * a[col * w + j];
            }
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let mut s = a[row * w + n];
        for j in row + 1..n {
            s -= a[row * w + j] * x[j];
        }
        x[row] = s / a[row * w + row];
    }
    Some(x)
}

/// One row of the leading-harmonic comparison scan.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct BabenkoRow {
    pub y: f64,
    pub mu: f64,
    pub sigma: f64,
    pub ratio: f64,
}

/// Tabulates `mu_leading(y) / sigma(n, y)` over a grid of `y > 1`. The
/// ratio stays strictly below `sqrt(2n)` and approaches it as `y` tends
/// to 1 from above.
pub fn babenko_scan(n: usize, y_grid: &[f64]) -> Result<Vec<BabenkoRow>> {
    if n == 0 {
        return Err(Error::Domain("order n must be at least 1".into()));
    }
    y_grid
        .iter()
        .map(|&y| {
            if !(y > 1.0) || !y.is_finite() {
                return Err(Error::Domain(format!("scan grid needs finite y > 1, got {y}")));
            }
            let mu = mu_leading(y)?;
            let s = sigma(n, y)?;
            Ok(BabenkoRow { y, mu, sigma: s, ratio: mu / s })
        })
        .collect()
}

/// How far apart two zero configurations are, as point sets on the circle
/// modulo a common rotation: the smallest (over cyclic matchings) worst
/// per-zero circular distance after optimally rotating one onto the other.
pub fn config_distance(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    if a.is_empty() {
        return 0.0;
    }
    let wrap = |x: f64| (x + PI).rem_euclid(TAU) - PI;
    let ra = canonical_phis(a, false);
    let rb = canonical_phis(b, false);
    let m = ra.len();
    let mut best = f64::INFINITY;
    for r in 0..m {
        let (mut s, mut c) = (0.0, 0.0);
        for j in 0..m {
            let d = rb[(j + r) % m] - ra[j];
            s += d.sin();
            c += d.cos();
        }
        let theta = s.atan2(c);
        let worst = (0..m)
            .map(|j| wrap(ra[j] + theta - rb[(j + r) % m]).abs())
            .fold(0.0f64, f64::max);
        best = best.min(worst);
    }
    best
}
