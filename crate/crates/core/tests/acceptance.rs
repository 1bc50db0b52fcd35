//! The release gate: ten end-to-end checks across the public API, each
//! printing one `criterion N: PASS/FAIL` line. Everything runs at desk
//! scale on a laptop; nothing here touches private internals.

use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use chebmeas::closedforms::{
    arc_extremal, delta, eps_arc, extremal_fnk, extremal_g, relate_params, sigma, u_compact,
    ParamSpec,
};
use chebmeas::geometry::{
    convexity_campaign, cube_campaign, decomposition_check, equivalence_check,
};
use chebmeas::levelset::{level_set, mu, SampleGrid};
use chebmeas::oracle::{
    babenko_scan, config_distance, minimax_on_set, minimize_measure, minimize_supnorm,
    sum_functional, SearchConfig,
};
use chebmeas::trigpoly::{cheb_t, dirichlet_d, CirclePoly, ComplexZeroForm, ZeroPair};

fn verdict(criterion: usize, errors: &[String]) {
    let ok = errors.is_empty();
    println!("criterion {criterion}: {}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {criterion} violations:\n{}", errors.join("\n"));
}

#[test]
fn criterion_01_extremal_family_measure_matches_closed_form() {
    let mut errors = Vec::new();
    for n in 1..=4usize {
        for &y in &[1.5, 2.0, 4.0, 10.0] {
            let expect = sigma(n, y).unwrap();
            for k in 0..2 * n as i64 {
                let f = extremal_fnk(n, y, k).unwrap();
                let got = mu(&f);
                if (got - expect).abs() > 1e-6 {
                    errors.push(format!(
                        "n={n} y={y} k={k}: measure {got} vs closed form {expect}"
                    ));
                }
            }
        }
    }
    verdict(1, &errors);
}

#[test]
fn criterion_02_measure_search_rediscovers_the_closed_form() {
    let mut errors = Vec::new();
    let cfg = SearchConfig::default();
    for m in 1..=4usize {
        for &h in &[0.5, 1.0, 1.5] {
            let expect = delta(m, h).unwrap();
            let r = minimize_measure(m, h, &cfg).unwrap();
            if (r.value - expect).abs() > 1e-2 {
                errors.push(format!(
                    "m={m} h={h}: search value {} vs closed form {expect}",
                    r.value
                ));
            }
            if m % 2 == 0 {
                let alpha = relate_params(m, ParamSpec::H(h)).unwrap().alpha;
                let theory = arc_extremal(m, alpha).unwrap();
                let dist = config_distance(&r.phis, theory.phis());
                if dist > 1e-2 {
                    errors.push(format!(
                        "m={m} h={h}: zeros off by {dist} from the arc configuration"
                    ));
                }
            }
        }
    }
    verdict(2, &errors);
}

#[test]
fn criterion_03_extremal_level_sets_have_one_segment_and_touches() {
    let mut errors = Vec::new();
    let grid = SampleGrid::default();
    for m in 1..=6usize {
        for &alpha in &[PI / 3.0, PI / 2.0] {
            let g = extremal_g(m, alpha).unwrap();
            let h = eps_arc(m, 2.0 * alpha).unwrap();
            let ls = level_set(|t| g.eval(t), h, &grid).unwrap();
            if ls.segments.len() != 1 || ls.touch_points.len() != m - 1 {
                errors.push(format!(
                    "zero form m={m} alpha={alpha}: {} segments, {} touches (want 1, {})",
                    ls.segments.len(),
                    ls.touch_points.len(),
                    m - 1
                ));
            }
        }
    }
    for n in 1..=3usize {
        for &y in &[2.0, 4.0] {
            let f = extremal_fnk(n, y, 0).unwrap();
            let ls = level_set(|t| f.eval(t), 1.0, &grid).unwrap();
            if ls.segments.len() != 1 || ls.touch_points.len() != 2 * n - 1 {
                errors.push(format!(
                    "family n={n} y={y}: {} segments, {} touches (want 1, {})",
                    ls.segments.len(),
                    ls.touch_points.len(),
                    2 * n - 1
                ));
            }
        }
    }
    verdict(3, &errors);
}

#[test]
fn criterion_04_arc_polynomial_attains_its_bound_only_on_the_arc() {
    let mut errors = Vec::new();
    for m in 1..=8usize {
        for &alpha in &[PI / 6.0, PI / 3.0, PI / 2.0, 2.0 * PI / 3.0] {
            let p = arc_extremal(m, alpha).unwrap();
            let bound = eps_arc(m, 2.0 * alpha).unwrap();
            // sup over the arc: dense samples refined around local maxima,
            // endpoints included
            let samples = 4096;
            let mut sup = 0.0f64;
            let vals: Vec<f64> = (0..=samples)
                .map(|i| {
                    p.eval_at_angle(-alpha + 2.0 * alpha * i as f64 / samples as f64).norm()
                })
                .collect();
            for (i, &v) in vals.iter().enumerate() {
                sup = sup.max(v);
                if i > 0 && i < samples && v >= vals[i - 1] && v >= vals[i + 1] {
                    let dt = 2.0 * alpha / samples as f64;
                    let t = -alpha + dt * i as f64;
                    let (mut lo, mut hi) = (t - dt, t + dt);
                    while hi - lo > 1e-12 {
                        let third = (hi - lo) / 3.0;
                        if p.eval_at_angle(lo + third).norm()
                            < p.eval_at_angle(hi - third).norm()
                        {
                            lo += third;
                        } else {
                            hi -= third;
                        }
                    }
                    sup = sup.max(p.eval_at_angle(0.5 * (lo + hi)).norm());
                }
            }
            if (sup - bound).abs() > 1e-9 {
                errors.push(format!("m={m} alpha={alpha}: sup {sup} vs bound {bound}"));
            }
            for i in 1..=512 {
                let t = alpha + (TAU - 2.0 * alpha) * i as f64 / 513.0;
                if !(p.eval_at_angle(t).norm() > bound) {
                    errors.push(format!("m={m} alpha={alpha}: no strict excess at t={t}"));
                    break;
                }
            }
        }
    }
    verdict(4, &errors);
}

#[test]
fn criterion_05_compositions_match_the_zero_product() {
    let mut errors = Vec::new();
    for n in 1..=5usize {
        for &alpha in &[PI / 6.0, PI / 3.0, PI / 2.0, 2.0 * PI / 3.0] {
            let lam = (alpha / 2.0).sin().powi(-2);
            let scale = lam.powi(-(n as i32));
            for (m, odd) in [(2 * n, false), (2 * n + 1, true)] {
                let g = extremal_g(m, alpha).unwrap();
                let mut worst = 0.0f64;
                for i in 0..2048 {
                    let t = TAU * i as f64 / 2048.0;
                    let inner = lam * t.cos() - (lam - 1.0);
                    let composed = if odd {
                        scale * 2.0 * (0.5 * t).sin() * dirichlet_d(n, inner)
                    } else {
                        scale * 2.0 * cheb_t(n, inner)
                    };
                    worst = worst.max((composed - g.eval(t)).abs());
                }
                if worst > 1e-10 {
                    errors.push(format!(
                        "m={m} alpha={alpha}: worst deviation {worst:e}"
                    ));
                }
            }
        }
    }
    verdict(5, &errors);
}

#[test]
fn criterion_06_averaging_functional_and_supnorm_floor() {
    let mut errors = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for case in 0..1000 {
        let m = rng.gen_range(1..=16);
        let phis: Vec<f64> = (0..m).map(|_| rng.gen_range(0.0..TAU)).collect();
        let p = CirclePoly::new(phis).unwrap();
        let norm = sum_functional(&p).norm();
        if (norm - 2.0).abs() > 1e-10 {
            errors.push(format!("case {case} (m={m}): |functional| = {norm}"));
        }
    }
    for m in 1..=3usize {
        let r = minimize_supnorm(m, &SearchConfig::default()).unwrap();
        if (r.value - 2.0).abs() > 1e-3 {
            errors.push(format!("m={m}: sup-norm search value {}", r.value));
        }
    }
    verdict(6, &errors);
}

#[test]
fn criterion_07_minimax_on_segments_certifies_the_compact_value() {
    let mut errors = Vec::new();
    for n in 1..=3usize {
        for &alpha in &[PI / 3.0, PI / 2.0] {
            let expect = u_compact(n, 2.0 * alpha).unwrap();
            let r = minimax_on_set(n, &[(-alpha, alpha)], 32768).unwrap();
            if (r.value - expect).abs() > 1e-6 {
                errors.push(format!(
                    "n={n} alpha={alpha}: value {} vs {expect}",
                    r.value
                ));
            }
            if !r.certified || r.alternations < 2 * n + 1 {
                errors.push(format!(
                    "n={n} alpha={alpha}: certified={} with {} alternations",
                    r.certified, r.alternations
                ));
            }
            let split = minimax_on_set(
                n,
                &[(-alpha - 0.4, -0.4), (0.4, alpha + 0.4)],
                32768,
            )
            .unwrap();
            if split.value < expect - 1e-3 {
                errors.push(format!(
                    "n={n} alpha={alpha}: split-set value {} undercuts {expect}",
                    split.value
                ));
            }
        }
    }
    verdict(7, &errors);
}

#[test]
fn criterion_08_leading_harmonic_ratio_stays_below_its_limit() {
    let mut errors = Vec::new();
    // log-spaced from just above 1 out to 1e6
    let grid: Vec<f64> =
        (0..700).map(|i| 1.0 + 1e-8 * 10f64.powf(i as f64 * 0.02)).collect();
    for n in 1..=4usize {
        let beta = ((2 * n) as f64).sqrt();
        let rows = babenko_scan(n, &grid).unwrap();
        for row in &rows {
            if !(row.ratio < beta) {
                errors.push(format!("n={n} y={}: ratio {} >= {beta}", row.y, row.ratio));
            }
        }
        let near_one = &rows[0];
        if (near_one.ratio - beta).abs() > 1e-3 {
            errors.push(format!(
                "n={n}: ratio at y=1+1e-8 is {} vs limit {beta}",
                near_one.ratio
            ));
        }
    }
    verdict(8, &errors);
}

#[test]
fn criterion_09_geometry_campaigns_are_clean() {
    let mut errors = Vec::new();
    // 10^4 midpoint-concavity pairs across dimensions
    for (m, samples) in [(1, 1000), (2, 2000), (3, 2000), (4, 2000), (5, 2000), (6, 1000)] {
        let r = convexity_campaign(m, samples, 301).unwrap();
        errors.extend(r.violations.iter().map(|v| format!("convexity m={m}: {v}")));
    }
    // 10^4 line-cube anchors
    for m in 2..=6usize {
        let r = cube_campaign(m, 2000, 303).unwrap();
        errors.extend(r.violations.iter().map(|v| format!("cubes m={m}: {v}")));
    }
    // 10^3 decomposition points
    for m in 2..=6usize {
        let r = decomposition_check(m, 1.0, 200, 305).unwrap();
        errors.extend(r.violations.iter().map(|v| format!("decomposition m={m}: {v}")));
        if r.max_error > 1e-9 {
            errors.push(format!("decomposition m={m}: max error {:e}", r.max_error));
        }
    }
    // arc-length route against the scaled line measure
    for m in 1..=3usize {
        let r = equivalence_check(m, 1.0, 50, 307).unwrap();
        errors.extend(r.violations.iter().map(|v| format!("equivalence m={m}: {v}")));
        if r.max_error > 1e-8 {
            errors.push(format!("equivalence m={m}: max error {:e}", r.max_error));
        }
    }
    verdict(9, &errors);
}

#[test]
fn criterion_10_flattening_zero_pairs_onto_the_circle_shrinks_measure() {
    let mut errors = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(401);
    let grid = SampleGrid::default();
    let mut strict_cases = 0usize;
    for case in 0..1000 {
        let l = rng.gen_range(0..=2usize);
        let k = 2 * rng.gen_range(1..=2usize);
        let pairs: Vec<ZeroPair> = (0..l)
            .map(|_| ZeroPair { r: rng.gen_range(0.2..0.9), phi: rng.gen_range(-PI..PI) })
            .collect();
        let mut real_zeros: Vec<f64> = (0..k - 1).map(|_| rng.gen_range(-PI..PI)).collect();
        let closing = -2.0 * pairs.iter().map(|p| p.phi).sum::<f64>()
            - real_zeros.iter().sum::<f64>();
        real_zeros.push(closing);
        let y = rng.gen_range(0.8..5.0);
        let f = ComplexZeroForm::new(y, pairs, real_zeros).unwrap();
        let flat = f.realify();

        for i in 0..256 {
            let t = TAU * i as f64 / 256.0;
            if flat.eval(t).abs() > f.eval(t).abs() + 1e-12 {
                errors.push(format!(
                    "case {case}: flattened form exceeds the original at t={t}"
                ));
                break;
            }
        }

        let m_orig = level_set(|t| f.eval(t), 1.0, &grid).unwrap().measure;
        let m_flat = level_set(|t| flat.eval(t), 1.0, &grid).unwrap().measure;
        if m_flat > m_orig + 1e-9 {
            errors.push(format!(
                "case {case}: measure grew from {m_orig} to {m_flat}"
            ));
        }
        let nondegenerate = m_orig > 1e-3 && m_orig < TAU - 1e-3 && m_flat > 1e-3;
        if l >= 1 && nondegenerate {
            strict_cases += 1;
            if !(m_flat < m_orig) {
                errors.push(format!(
                    "case {case}: no strict decrease ({m_orig} -> {m_flat})"
                ));
            }
        }
    }
    if strict_cases < 100 {
        errors.push(format!(
            "only {strict_cases} nondegenerate strict-decrease cases were generated"
        ));
    }
    verdict(10, &errors);
}
