//! Polynomial representations on the torus and the unit circle.
//!
//! Three interchangeable views of the same objects:
//!
//! * [`TrigPoly`] — a real trigonometric polynomial in coefficient form,
//!   `f(t) = a_0/2 + sum_k (a_k cos kt + b_k sin kt)`.
//! * [`ZeroForm`] — a real product over unimodular zeros,
//!   `g(t) = scale * prod_j 2 sin((t - phi_j)/2)`.
//! * [`CirclePoly`] — the monic algebraic polynomial
//!   `P(z) = prod_j (z - e^{i phi_j})` restricted to `z = e^{it}`.
//!
//! [`ComplexZeroForm`] adds conjugate zero pairs off the circle, the general
//! shape of a real polynomial whose modulus we measure against a threshold.
//! The bridge between the views is
//! `P_m(e^{it}) = e^{i(m/2)t} e^{i Phi/2} i^m g_m(t)` with `Phi = sum phi_j`,
//! so folding `P` back to a real polynomial costs a phase `e^{-i Phi/2}`
//! tracked by the sum of the zero angles.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};

/// Absolute tolerance on `sum(phis) - 2 pi N` for closure detection.
pub const CLOSURE_TOL: f64 = 1e-9;

/// Tighter closure tolerance enforced by [`ComplexZeroForm::new`].
pub const PAIR_CLOSURE_TOL: f64 = 1e-10;

/// Chebyshev polynomial of the first kind, `T_n(x)`, by the three-term
/// recurrence. Valid on all of `R`, not just `[-1, 1]`; no `acos` involved.
pub fn cheb_t(n: usize, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let (mut prev, mut cur) = (1.0, x);
    for _ in 1..n {
        (prev, cur) = (cur, 2.0 * x * cur - prev);
    }
    cur
}

/// The algebraic Dirichlet polynomial `D_n(x) = 1 + 2 sum_{k=1}^n T_k(x)`,
/// the unique polynomial with `D_n(cos t) = sin((2n+1)t/2) / sin(t/2)`.
pub fn dirichlet_d(n: usize, x: f64) -> f64 {
    let mut acc = 1.0;
    let (mut prev, mut cur) = (1.0, x);
    for _ in 0..n {
        acc += 2.0 * cur;
        (prev, cur) = (cur, 2.0 * x * cur - prev);
    }
    acc
}

/// Reduce `phi` into `[0, 2 pi)`, returning the canonical angle and the
/// integer number of full turns removed.
pub fn reduce_angle(phi: f64) -> (f64, i64) {
    let mut k = (phi / TAU).floor();
    let mut c = phi - TAU * k;
    if c < 0.0 {
        c += TAU;
        k -= 1.0;
    }
    if c >= TAU {
        c -= TAU;
        k += 1.0;
    }
    (c, k as i64)
}

/// Checks whether the angles close up: `sum(phis) = 2 pi N` within
/// [`CLOSURE_TOL`]. Returns the winding number `N` on success.
pub fn closure_index(phis: &[f64]) -> Option<i64> {
    let sum: f64 = phis.iter().sum();
    let n = (sum / TAU).round();
    if (sum - TAU * n).abs() <= CLOSURE_TOL {
        Some(n as i64)
    } else {
        None
    }
}

/// Checks the self-inversive coefficient symmetry `u_{2n-v} = conj(u_v)`
/// within `tol` (sup over entries). The slice must have odd length `2n+1`.
pub fn is_self_inversive(u: &[Complex64], tol: f64) -> Result<bool> {
    if u.len() % 2 == 0 {
        return Err(Error::EvenLength { len: u.len() });
    }
    let worst = (0..u.len())
        .map(|v| (u[u.len() - 1 - v] - u[v].conj()).norm())
        .fold(0.0f64, f64::max);
    Ok(worst <= tol)
}

// ---------------------------------------------------------------------------
// TrigPoly

/// Real trigonometric polynomial `f(t) = a_0/2 + sum_{k=1}^n (a_k cos kt + b_k sin kt)`.
///
/// Both coefficient vectors have length `n + 1`; `b[0]` is fixed at zero so
/// indices line up with harmonics.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigPoly {
    n: usize,
    a: Vec<f64>,
    b: Vec<f64>,
}

impl TrigPoly {
    /// Builds a polynomial of order `n` from coefficient vectors of length
    /// `n + 1`. Requires `b[0] == 0` and finite entries.
    pub fn new(n: usize, a: Vec<f64>, b: Vec<f64>) -> Result<Self> {
        if a.len() != n + 1 || b.len() != n + 1 {
            return Err(Error::Domain(format!(
                "coefficient vectors must have length n+1 = {}, got a: {}, b: {}",
                n + 1,
                a.len(),
                b.len()
            )));
        }
        if b[0] != 0.0 {
            return Err(Error::Domain(format!("b[0] must be 0, got {}", b[0])));
        }
        if a.iter().chain(b.iter()).any(|c| !c.is_finite()) {
            return Err(Error::Domain("coefficients must be finite".into()));
        }
        Ok(Self { n, a, b })
    }

    /// The constant polynomial `f(t) = c` (stored as `a_0 = 2c`).
    pub fn constant(c: f64) -> Self {
        Self { n: 0, a: vec![2.0 * c], b: vec![0.0] }
    }

    /// Order bound `n` (the exact order may be lower; see [`Self::has_exact_order`]).
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> &[f64] {
        &self.a
    }

    pub fn b(&self) -> &[f64] {
        &self.b
    }

    /// True when the leading harmonic is genuinely present (`a_n^2 + b_n^2 > 0`).
    pub fn has_exact_order(&self) -> bool {
        self.a[self.n] * self.a[self.n] + self.b[self.n] * self.b[self.n] > 0.0
    }

    /// Evaluates by Clenshaw's backward recurrence, one pass for the cosine
    /// sum and one for the sine sum. No powers of `t`, stable for large `n`.
    pub fn eval(&self, t: f64) -> f64 {
        let (ct, st) = (t.cos(), t.sin());
        let x = 2.0 * ct;
        let (mut u1, mut u2) = (0.0, 0.0);
        for k in (1..=self.n).rev() {
            (u1, u2) = (self.a[k] + x * u1 - u2, u1);
        }
        let (mut v1, mut v2) = (0.0, 0.0);
        for k in (1..=self.n).rev() {
            (v1, v2) = (self.b[k] + x * v1 - v2, v1);
        }
        let _ = v2;
        0.5 * self.a[0] + u1 * ct - u2 + v1 * st
    }

    /// Exponential coefficients `w_k`, `k = -n..=n` (index `k + n`), with
    /// `f(t) = sum_k w_k e^{ikt}`; Hermitian (`w_{-k} = conj(w_k)`) since `f` is real.
    pub fn exp_coeffs(&self) -> Vec<Complex64> {
        let n = self.n;
        let mut w = vec![Complex64::new(0.0, 0.0); 2 * n + 1];
        w[n] = Complex64::new(0.5 * self.a[0], 0.0);
        for k in 1..=n {
            w[n + k] = Complex64::new(0.5 * self.a[k], -0.5 * self.b[k]);
            w[n - k] = Complex64::new(0.5 * self.a[k], 0.5 * self.b[k]);
        }
        w
    }

    /// Rebuilds a real polynomial from exponential coefficients (odd length
    /// `2n+1`), symmetrizing the nearly-Hermitian input.
    pub fn from_exp_coeffs(w: &[Complex64]) -> Result<Self> {
        if w.len() % 2 == 0 {
            return Err(Error::EvenLength { len: w.len() });
        }
        let n = (w.len() - 1) / 2;
        let mut a = vec![0.0; n + 1];
        let mut b = vec![0.0; n + 1];
        a[0] = 2.0 * w[n].re;
        for k in 1..=n {
            a[k] = w[n + k].re + w[n - k].re;
            b[k] = w[n - k].im - w[n + k].im;
        }
        Self::new(n, a, b)
    }

    /// Pointwise sum; the order is the max of the two orders.
    pub fn add(&self, other: &Self) -> Self {
        let n = self.n.max(other.n);
        let mut a = vec![0.0; n + 1];
        let mut b = vec![0.0; n + 1];
        for k in 0..=self.n {
            a[k] += self.a[k];
            b[k] += self.b[k];
        }
        for k in 0..=other.n {
            a[k] += other.a[k];
            b[k] += other.b[k];
        }
        Self { n, a, b }
    }

    /// Pointwise difference.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scaled(-1.0))
    }

    /// Scalar multiple.
    pub fn scaled(&self, c: f64) -> Self {
        Self {
            n: self.n,
            a: self.a.iter().map(|x| c * x).collect(),
            b: self.b.iter().map(|x| c * x).collect(),
        }
    }

    /// Product of two trigonometric polynomials via convolution of
    /// exponential coefficients; orders add.
    pub fn mul(&self, other: &Self) -> Self {
        let (wa, wb) = (self.exp_coeffs(), other.exp_coeffs());
        let n = self.n + other.n;
        let mut w = vec![Complex64::new(0.0, 0.0); 2 * n + 1];
        for (i, &x) in wa.iter().enumerate() {
            for (j, &y) in wb.iter().enumerate() {
                w[i + j] += x * y;
            }
        }
        Self::from_exp_coeffs(&w).expect("convolution length is odd by construction")
    }
}

// ---------------------------------------------------------------------------
// ZeroForm

/// Real product over unimodular zeros:
/// `g(t) = scale * prod_{j=1}^m 2 sin((t - phi_j)/2)`.
///
/// Angles are canonicalized into `[0, 2 pi)` and sorted. Reducing an angle by
/// `2 pi k` flips its factor by `(-1)^k`, so the constructor folds the total
/// flip into `scale`: evaluation is invariant under canonicalization, and any
/// overall sign always lives in `scale`, never in a separate flag.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroForm {
    phis: Vec<f64>,
    scale: f64,
}

impl ZeroForm {
    pub fn new(phis: Vec<f64>, scale: f64) -> Result<Self> {
        if !scale.is_finite() || scale == 0.0 {
            return Err(Error::Domain(format!("scale must be finite and nonzero, got {scale}")));
        }
        if phis.iter().any(|p| !p.is_finite()) {
            return Err(Error::Domain("zero angles must be finite".into()));
        }
        let mut flips: i64 = 0;
        let mut canon: Vec<f64> = phis
            .into_iter()
            .map(|p| {
                let (c, k) = reduce_angle(p);
                flips += k;
                c
            })
            .collect();
        canon.sort_by(|x, y| x.partial_cmp(y).unwrap());
        let scale = if flips.rem_euclid(2) == 0 { scale } else { -scale };
        Ok(Self { phis: canon, scale })
    }

    /// Number of zeros `m` (zero is allowed: the empty product is the constant `scale`).
    pub fn m(&self) -> usize {
        self.phis.len()
    }

    pub fn phis(&self) -> &[f64] {
        &self.phis
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn eval(&self, t: f64) -> f64 {
        let mut prod = self.scale;
        for &phi in &self.phis {
            prod *= 2.0 * (0.5 * (t - phi)).sin();
        }
        prod
    }

    /// The monic circle polynomial sharing these zeros.
    pub fn circle(&self) -> CirclePoly {
        CirclePoly::new(self.phis.clone()).expect("canonical angles are finite")
    }

    /// Folds an even-length product into coefficient form. With `m = 2n` and
    /// `Phi = sum phi_j`, the bridge identity gives
    /// `g(t) = scale * (-1)^n e^{-i Phi/2} e^{-int} P_m(e^{it})`,
    /// expanded through the monic product coefficients of `P_m`. Fails with
    /// [`Error::OddDegree`] when `m` is odd (half-integer order).
    pub fn to_trig(&self) -> Result<TrigPoly> {
        let m = self.phis.len();
        if m % 2 != 0 {
            return Err(Error::OddDegree { m });
        }
        let n = m / 2;
        let c = self.circle().coeffs();
        let phi_sum: f64 = self.phis.iter().sum();
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let phase = Complex64::from_polar(self.scale * sign, -0.5 * phi_sum);
        let w: Vec<Complex64> = c.iter().map(|&cv| phase * cv).collect();
        TrigPoly::from_exp_coeffs(&w)
    }
}

// ---------------------------------------------------------------------------
// CirclePoly

/// Monic polynomial with all zeros on the unit circle:
/// `P(z) = prod_{j=1}^m (z - e^{i phi_j})`.
#[derive(Debug, Clone, PartialEq)]
pub struct CirclePoly {
    phis: Vec<f64>,
}

impl CirclePoly {
    pub fn new(phis: Vec<f64>) -> Result<Self> {
        if phis.iter().any(|p| !p.is_finite()) {
            return Err(Error::Domain("zero angles must be finite".into()));
        }
        let mut canon: Vec<f64> = phis.into_iter().map(|p| reduce_angle(p).0).collect();
        canon.sort_by(|x, y| x.partial_cmp(y).unwrap());
        Ok(Self { phis: canon })
    }

    pub fn m(&self) -> usize {
        self.phis.len()
    }

    pub fn phis(&self) -> &[f64] {
        &self.phis
    }

    /// Sum of the zero angles, `Phi`.
    pub fn phi_sum(&self) -> f64 {
        self.phis.iter().sum()
    }

    /// The phase `Psi = m pi + Phi` carried by the constant coefficient:
    /// `c_0 = (-1)^m e^{i Phi} = e^{i Psi}`.
    pub fn psi(&self) -> f64 {
        self.phis.len() as f64 * PI + self.phi_sum()
    }

    /// Evaluates `P(e^{it})` as a product of monomial factors.
    pub fn eval_at_angle(&self, t: f64) -> Complex64 {
        let z = Complex64::from_polar(1.0, t);
        let mut prod = Complex64::new(1.0, 0.0);
        for &phi in &self.phis {
            prod *= z - Complex64::from_polar(1.0, phi);
        }
        prod
    }

    /// Monic coefficients `c_0..=c_m` (ascending powers), by incremental
    /// product expansion. O(m^2), exact degree bookkeeping.
    pub fn coeffs(&self) -> Vec<Complex64> {
        let mut c = vec![Complex64::new(1.0, 0.0)];
        for &phi in &self.phis {
            let root = Complex64::from_polar(1.0, phi);
            let mut next = vec![Complex64::new(0.0, 0.0); c.len() + 1];
            for (j, &cv) in c.iter().enumerate() {
                next[j + 1] += cv;
                next[j] -= root * cv;
            }
            c = next;
        }
        c
    }

    /// Rotates every zero by `theta` (the map `P(z) -> e^{-im theta} P(e^{i theta} z)`
    /// on zero sets).
    pub fn rotate(&self, theta: f64) -> Self {
        Self::new(self.phis.iter().map(|p| p + theta).collect())
            .expect("rotated angles stay finite")
    }
}

// ---------------------------------------------------------------------------
// ComplexZeroForm

/// One conjugate pair of zeros off the circle, `(r e^{i phi}, e^{i phi}/r)`
/// with `0 < r < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroPair {
    pub r: f64,
    pub phi: f64,
}

impl ZeroPair {
    /// `A = (r + 1/r)/2 > 1`, the pair's contribution depth.
    pub fn a(&self) -> f64 {
        0.5 * (self.r + 1.0 / self.r)
    }
}

/// Real polynomial of order `n` with `l` conjugate zero pairs off the circle
/// and `2(n - l)` unimodular zeros, in the factored real form
///
/// `f(t) = (-1)^{n+N} (y/2) prod_k 2(A_k - cos(t - phi_k)) prod_j 2 sin((t - phi_j)/2)`.
///
/// The angles must close up: `2 sum phi_k + sum phi_j = 2 pi N` for an
/// integer `N` (checked to [`PAIR_CLOSURE_TOL`]); this is exactly the
/// condition for the product over all `2n` zeros to fold into a real
/// polynomial with leading harmonic `y cos(nt + const)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexZeroForm {
    y: f64,
    pairs: Vec<ZeroPair>,
    real_zeros: Vec<f64>,
    n: usize,
    big_n: i64,
}

impl ComplexZeroForm {
    pub fn new(y: f64, pairs: Vec<ZeroPair>, real_zeros: Vec<f64>) -> Result<Self> {
        if !(y > 0.0) || !y.is_finite() {
            return Err(Error::Domain(format!("y must be positive and finite, got {y}")));
        }
        for p in &pairs {
            if !(p.r > 0.0 && p.r < 1.0) {
                return Err(Error::Domain(format!("pair radius must lie in (0,1), got {}", p.r)));
            }
            if !p.phi.is_finite() {
                return Err(Error::Domain("pair angles must be finite".into()));
            }
        }
        if real_zeros.len() % 2 != 0 {
            return Err(Error::Domain(format!(
                "unimodular zero count must be even, got {}",
                real_zeros.len()
            )));
        }
        if real_zeros.iter().any(|p| !p.is_finite()) {
            return Err(Error::Domain("unimodular zero angles must be finite".into()));
        }
        let sum = 2.0 * pairs.iter().map(|p| p.phi).sum::<f64>() + real_zeros.iter().sum::<f64>();
        let rounds = (sum / TAU).round();
        if (sum - TAU * rounds).abs() > PAIR_CLOSURE_TOL {
            return Err(Error::ClosureViolated { sum: sum / TAU });
        }
        let n = pairs.len() + real_zeros.len() / 2;
        Ok(Self { y, pairs, real_zeros, n, big_n: rounds as i64 })
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// The closure winding number `N`.
    pub fn winding(&self) -> i64 {
        self.big_n
    }

    pub fn pairs(&self) -> &[ZeroPair] {
        &self.pairs
    }

    pub fn real_zeros(&self) -> &[f64] {
        &self.real_zeros
    }

    fn lead_sign(&self) -> f64 {
        if (self.n as i64 + self.big_n).rem_euclid(2) == 0 {
            1.0
        } else {
            -1.0
        }
    }

    /// Evaluates through the factored real form; every pair factor satisfies
    /// `2(A - cos(t - phi)) >= 4 sin^2((t - phi)/2) > 0`.
    pub fn eval(&self, t: f64) -> f64 {
        let mut prod = self.lead_sign() * 0.5 * self.y;
        for p in &self.pairs {
            prod *= 2.0 * (p.a() - (t - p.phi).cos());
        }
        for &phi in &self.real_zeros {
            prod *= 2.0 * (0.5 * (t - phi)).sin();
        }
        prod
    }

    /// Pushes every off-circle pair onto the circle as a doubled zero,
    /// keeping the threshold scale: the result is
    /// `(-1)^{n+N} (y/2) * prod_k (2 sin((t-phi_k)/2))^2 * prod_j 2 sin((t-phi_j)/2)`.
    ///
    /// Since `2 sin^2((t-phi)/2) * 2 = 2(1 - cos(t-phi)) <= 2(A - cos(t-phi))`
    /// factor by factor, the flattened polynomial is dominated pointwise:
    /// `|realify(f)(t)| <= |f(t)|`, strictly except where both vanish.
    pub fn realify(&self) -> ZeroForm {
        let mut zeros = Vec::with_capacity(2 * self.n);
        for p in &self.pairs {
            zeros.push(p.phi);
            zeros.push(p.phi);
        }
        zeros.extend_from_slice(&self.real_zeros);
        ZeroForm::new(zeros, self.lead_sign() * 0.5 * self.y)
            .expect("y > 0 makes the scale valid")
    }
}

// ---------------------------------------------------------------------------
// JSON schema

/// On-disk polynomial schema, tagged by `kind`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum PolyJson {
    Trig { n: usize, a: Vec<f64>, b: Vec<f64> },
    Zeros { m: usize, phis: Vec<f64>, scale: f64 },
    Circle { m: usize, phis: Vec<f64> },
}

impl From<&TrigPoly> for PolyJson {
    fn from(p: &TrigPoly) -> Self {
        PolyJson::Trig { n: p.n, a: p.a.clone(), b: p.b.clone() }
    }
}

impl From<&ZeroForm> for PolyJson {
    fn from(z: &ZeroForm) -> Self {
        PolyJson::Zeros { m: z.m(), phis: z.phis.clone(), scale: z.scale }
    }
}

impl From<&CirclePoly> for PolyJson {
    fn from(c: &CirclePoly) -> Self {
        PolyJson::Circle { m: c.m(), phis: c.phis.clone() }
    }
}

impl TryFrom<PolyJson> for TrigPoly {
    type Error = Error;
    fn try_from(j: PolyJson) -> Result<Self> {
        match j {
            PolyJson::Trig { n, a, b } => TrigPoly::new(n, a, b),
            _ => Err(Error::Domain("expected kind \"trig\"".into())),
        }
    }
}

impl TryFrom<PolyJson> for ZeroForm {
    type Error = Error;
    fn try_from(j: PolyJson) -> Result<Self> {
        match j {
            PolyJson::Zeros { m, phis, scale } => {
                if phis.len() != m {
                    return Err(Error::Domain(format!(
                        "zero count mismatch: m = {m}, phis has length {}",
                        phis.len()
                    )));
                }
                ZeroForm::new(phis, scale)
            }
            _ => Err(Error::Domain("expected kind \"zeros\"".into())),
        }
    }
}

impl TryFrom<PolyJson> for CirclePoly {
    type Error = Error;
    fn try_from(j: PolyJson) -> Result<Self> {
        match j {
            PolyJson::Circle { m, phis } => {
                if phis.len() != m {
                    return Err(Error::Domain(format!(
                        "zero count mismatch: m = {m}, phis has length {}",
                        phis.len()
                    )));
                }
                CirclePoly::new(phis)
            }
            _ => Err(Error::Domain("expected kind \"circle\"".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn grid(n: usize) -> impl Iterator<Item = f64> {
        (0..n).map(move |i| TAU * i as f64 / n as f64)
    }

    #[test]
    fn constant_eval() {
        let p = TrigPoly::constant(1.0);
        assert_eq!(p.eval(1.3), 1.0);
    }

    #[test]
    fn pure_second_harmonic() {
        let p = TrigPoly::new(2, vec![0.0, 0.0, 1.0], vec![0.0, 0.0, 0.0]).unwrap();
        assert_abs_diff_eq!(p.eval(PI / 4.0), 0.0, epsilon = 1e-15);
        assert!(p.has_exact_order());
    }

    #[test]
    fn first_order_zero() {
        // 2 cos t - 1 vanishes at t = pi/3.
        let p = TrigPoly::new(1, vec![-2.0, 2.0], vec![0.0, 0.0]).unwrap();
        assert_abs_diff_eq!(p.eval(PI / 3.0), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn clenshaw_matches_direct_sum() {
        let p = TrigPoly::new(
            3,
            vec![0.4, -1.2, 0.7, 2.5],
            vec![0.0, 0.3, -0.8, 1.1],
        )
        .unwrap();
        for t in grid(257) {
            let direct = 0.2
                + (1..=3)
                    .map(|k| p.a()[k] * (k as f64 * t).cos() + p.b()[k] * (k as f64 * t).sin())
                    .sum::<f64>();
            assert_abs_diff_eq!(p.eval(t), direct, epsilon = 1e-13);
        }
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(TrigPoly::new(1, vec![1.0], vec![0.0, 0.0]).is_err());
        assert!(TrigPoly::new(1, vec![1.0, 1.0], vec![0.5, 0.0]).is_err());
        assert!(TrigPoly::new(0, vec![f64::NAN], vec![0.0]).is_err());
    }

    #[test]
    fn chebyshev_edge_values() {
        for n in 0..=50 {
            assert_eq!(cheb_t(n, 1.0), 1.0);
        }
        assert_eq!(cheb_t(2, 0.0), -1.0);
        assert_eq!(cheb_t(3, 2.0), 26.0);
    }

    #[test]
    fn chebyshev_cosine_identity() {
        for n in 0..=50 {
            for t in grid(512) {
                assert_abs_diff_eq!(cheb_t(n, t.cos()), (n as f64 * t).cos(), epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn dirichlet_values() {
        assert_eq!(dirichlet_d(0, 0.37), 1.0);
        assert_eq!(dirichlet_d(1, 1.0), 3.0);
        assert_abs_diff_eq!(dirichlet_d(2, (TAU / 5.0).cos()), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn dirichlet_kernel_identity() {
        for n in 0..=20 {
            for i in 1..200 {
                let t = 0.1 + (TAU - 0.2) * i as f64 / 200.0;
                let lhs = dirichlet_d(n, t.cos());
                let rhs = ((2 * n + 1) as f64 * t / 2.0).sin() / (t / 2.0).sin();
                assert_abs_diff_eq!(lhs, rhs, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn zeroform_canonicalization_keeps_value() {
        let raw = ZeroForm::new(vec![-PI / 3.0, PI / 3.0 + TAU], 1.5).unwrap();
        for t in grid(64) {
            // the value at the raw, un-reduced angles
            let direct = 1.5
                * 2.0
                * (0.5 * (t + PI / 3.0)).sin()
                * 2.0
                * (0.5 * (t - PI / 3.0 - TAU)).sin();
            assert_abs_diff_eq!(raw.eval(t), direct, epsilon = 1e-12);
        }
        assert!(raw.phis().windows(2).all(|w| w[0] <= w[1]));
        assert!(raw.phis().iter().all(|&p| (0.0..TAU).contains(&p)));
    }

    #[test]
    fn zeroform_vanishes_at_zeros() {
        let z = ZeroForm::new(vec![0.7, 2.9, 5.1], -2.0).unwrap();
        for &phi in z.phis() {
            assert_abs_diff_eq!(z.eval(phi), 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn zeroform_to_trig_worked_example() {
        // zeros at pi/3 and 5pi/3 with scale 1/2 fold to cos t - 1/2.
        let z = ZeroForm::new(vec![PI / 3.0, 5.0 * PI / 3.0], 0.5).unwrap();
        let p = z.to_trig().unwrap();
        assert_eq!(p.order(), 1);
        assert_abs_diff_eq!(p.a()[0], -1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(p.a()[1], 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(p.b()[1], 0.0, epsilon = 1e-14);
    }

    #[test]
    fn zeroform_to_trig_rejects_odd() {
        let z = ZeroForm::new(vec![0.0], 1.0).unwrap();
        assert!(matches!(z.to_trig(), Err(Error::OddDegree { m: 1 })));
    }

    #[test]
    fn empty_zeroform_is_constant() {
        let z = ZeroForm::new(vec![], 3.25).unwrap();
        assert_eq!(z.eval(1.0), 3.25);
        let p = z.to_trig().unwrap();
        assert_eq!(p.order(), 0);
        assert_eq!(p.eval(2.0), 3.25);
    }

    #[test]
    fn closure_detects_winding() {
        assert_eq!(closure_index(&[PI / 3.0, 5.0 * PI / 3.0]), Some(1));
        assert_eq!(closure_index(&[]), Some(0));
        assert_eq!(closure_index(&[0.1, 0.2]), None);
        assert_eq!(closure_index(&[-PI, PI, TAU]), Some(1));
    }

    #[test]
    fn self_inversive_symmetry_of_real_polynomials() {
        let p = TrigPoly::new(2, vec![0.3, -1.0, 0.4], vec![0.0, 0.2, -0.9]).unwrap();
        // exp coefficients of e^{int} f(t) are exactly the shifted w_k.
        let u = p.exp_coeffs();
        assert!(is_self_inversive(&u, 1e-12).unwrap());
        let mut broken = u.clone();
        broken[0] += Complex64::new(1e-6, 0.0);
        assert!(!is_self_inversive(&broken, 1e-12).unwrap());
        assert!(matches!(
            is_self_inversive(&u[..2], 1e-12),
            Err(Error::EvenLength { len: 2 })
        ));
    }

    #[test]
    fn circle_poly_coeffs_and_eval_agree() {
        let c = CirclePoly::new(vec![PI / 3.0, -PI / 3.0]).unwrap();
        let coeffs = c.coeffs();
        // (z - e^{i pi/3})(z - e^{-i pi/3}) = z^2 - z + 1
        assert_abs_diff_eq!(coeffs[0].re, 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(coeffs[1].re, -1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(coeffs[2].re, 1.0, epsilon = 1e-14);
        for t in grid(97) {
            let via_coeffs: Complex64 = coeffs
                .iter()
                .enumerate()
                .map(|(j, &cv)| cv * Complex64::from_polar(1.0, j as f64 * t))
                .sum();
            assert!((via_coeffs - c.eval_at_angle(t)).norm() < 1e-12);
        }
        for &phi in c.phis() {
            assert!(c.eval_at_angle(phi).norm() < 1e-12);
        }
    }

    #[test]
    fn complex_zeroform_worked_example() {
        // one pair (r = 1/2, phi = 0), y = 2: f(t) = 2 cos t - 5/2.
        let f = ComplexZeroForm::new(2.0, vec![ZeroPair { r: 0.5, phi: 0.0 }], vec![]).unwrap();
        assert_eq!(f.order(), 1);
        assert_eq!(f.winding(), 0);
        for t in grid(64) {
            assert_abs_diff_eq!(f.eval(t), 2.0 * t.cos() - 2.5, epsilon = 1e-12);
        }
        let flat = f.realify();
        assert_eq!(flat.phis(), &[0.0, 0.0]);
        for t in grid(64) {
            assert_abs_diff_eq!(flat.eval(t), 2.0 * (t.cos() - 1.0), epsilon = 1e-12);
            assert!(flat.eval(t).abs() <= f.eval(t).abs() + 1e-12);
        }
    }

    #[test]
    fn complex_zeroform_rejects_open_angles() {
        let r = ComplexZeroForm::new(2.0, vec![ZeroPair { r: 0.5, phi: 0.3 }], vec![]);
        assert!(matches!(r, Err(Error::ClosureViolated { .. })));
        let r = ComplexZeroForm::new(2.0, vec![ZeroPair { r: 1.5, phi: 0.0 }], vec![]);
        assert!(matches!(r, Err(Error::Domain(_))));
    }

    #[test]
    fn poly_json_round_trip() {
        let p = TrigPoly::new(1, vec![-1.0, 1.0], vec![0.0, 0.0]).unwrap();
        let j: PolyJson = (&p).into();
        let s = serde_json::to_string(&j).unwrap();
        assert!(s.contains("\"kind\":\"trig\""));
        let back: PolyJson = serde_json::from_str(&s).unwrap();
        let q: TrigPoly = back.try_into().unwrap();
        assert_eq!(p, q);

        let z = ZeroForm::new(vec![0.1, 1.0], -0.5).unwrap();
        let back: PolyJson = serde_json::from_str(&serde_json::to_string(&PolyJson::from(&z)).unwrap()).unwrap();
        let z2: ZeroForm = back.try_into().unwrap();
        assert_eq!(z, z2);

        let bad: std::result::Result<PolyJson, _> =
            serde_json::from_str("{\"kind\":\"zeros\",\"m\":3,\"phis\":[0.0],\"scale\":1.0}");
        let parsed = bad.unwrap();
        assert!(ZeroForm::try_from(parsed).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn eval_is_periodic(
            coeffs in prop::collection::vec(-2.0f64..2.0, 2..6),
            t in -10.0f64..10.0,
        ) {
            let n = coeffs.len() - 1;
            let mut b = coeffs.clone();
            b[0] = 0.0;
            let p = TrigPoly::new(n, coeffs, b).unwrap();
            let scale = 1.0 + p.eval(t).abs();
            prop_assert!((p.eval(t) - p.eval(t + TAU)).abs() <= 1e-12 * scale);
        }

        #[test]
        fn zeroform_round_trip(
            phis in prop::collection::vec(-7.0f64..7.0, 1..5),
            scale in prop_oneof![-2.0f64..-0.1, 0.1f64..2.0],
        ) {
            // even count: duplicate the list
            let mut zs = phis.clone();
            zs.extend(phis.iter().map(|p| p + 1.0));
            let z = ZeroForm::new(zs, scale).unwrap();
            let p = z.to_trig().unwrap();
            for i in 0..128 {
                let t = TAU * i as f64 / 128.0;
                prop_assert!((p.eval(t) - z.eval(t)).abs() <= 1e-9);
            }
        }
    }
}
