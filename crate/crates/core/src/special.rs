//! Cylindrical functions of order 0 and 1 and the complete elliptic integral
//! of the first kind.
//!
//! Argument ranges:
//! * `J`, `Y`: power series for `x ≤ 4`, Miller backward recurrence with the
//!   Neumann expansions of `Y₀`, `Y₁` for `4 < x ≤ 25`, Hankel asymptotic
//!   expansion above.
//! * `I`: power series for `x ≤ 30`, asymptotic expansion above.
//! * `K`: power series for `x ≤ 2`, trapezoidal rule on `∫₀^∞ e^{−x cosh t}
//!   cosh(νt) dt` for `2 < x ≤ 30`, asymptotic expansion above.
//!
//! All routines take `x > 0`; `J` and `I` also accept `x = 0`.

use std::f64::consts::{FRAC_2_PI, FRAC_PI_2, PI};

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const SERIES_JY_MAX: f64 = 4.0;
const MILLER_JY_MAX: f64 = 25.0;
const SERIES_I_MAX: f64 = 30.0;
const SERIES_K_MAX: f64 = 2.0;
const ASYMPTOTIC_K_MIN: f64 = 30.0;

fn series_j(x: f64) -> (f64, f64) {
    let q = 0.25 * x * x;
    let (mut t0, mut t1) = (1.0, 0.5 * x);
    let (mut j0, mut j1) = (t0, t1);
    for k in 1..200 {
        let kf = k as f64;
        t0 *= -q / (kf * kf);
        t1 *= -q / (kf * (kf + 1.0));
        j0 += t0;
        j1 += t1;
        if t0.abs() < 1e-18 * j0.abs().max(1e-300) && t1.abs() < 1e-18 * j1.abs().max(1e-300) {
            break;
        }
    }
    (j0, j1)
}

fn series_y(x: f64, j0: f64, j1: f64) -> (f64, f64) {
    let q = 0.25 * x * x;
    let log_term = (0.5 * x).ln() + EULER_GAMMA;
    // Σ (−1)^{k+1} H_k q^k/(k!)²
    let mut t0 = 1.0;
    let mut s0 = 0.0;
    // Σ (−1)^k (H_k + H_{k+1} − 2γ) q^k/(k!(k+1)!)
    let mut t1 = 1.0;
    let mut h = 0.0;
    let mut s1 = 1.0 - 2.0 * EULER_GAMMA;
    for k in 1..200 {
        let kf = k as f64;
        h += 1.0 / kf;
        t0 *= -q / (kf * kf);
        t1 *= -q / (kf * (kf + 1.0));
        let d0 = -h * t0;
        let d1 = (2.0 * h + 1.0 / (kf + 1.0) - 2.0 * EULER_GAMMA) * t1;
        s0 += d0;
        s1 += d1;
        if d0.abs() < 1e-18 * s0.abs().max(1e-300) && d1.abs() < 1e-18 * s1.abs().max(1e-300) {
            break;
        }
    }
    let y0 = FRAC_2_PI * (log_term * j0 + s0);
    let y1 = -FRAC_2_PI / x + FRAC_2_PI * (0.5 * x).ln() * j1 - 0.5 * x * s1 / PI;
    (y0, y1)
}

/// `J₀, J₁, Y₀, Y₁` from normalized backward recurrence.
fn miller_jy(x: f64) -> (f64, f64, f64, f64) {
    let mut top = (1.5 * x) as usize + 40;
    if top % 2 == 1 {
        top += 1;
    }
    let mut vals = vec![0.0; top + 2];
    vals[top] = 1e-30;
    for n in (1..=top).rev() {
        vals[n - 1] = 2.0 * n as f64 / x * vals[n] - vals[n + 1];
        if vals[n - 1].abs() > 1e250 {
            for v in vals[n - 1..].iter_mut() {
                *v *= 1e-250;
            }
        }
    }
    let norm = vals[0] + 2.0 * vals.iter().skip(2).step_by(2).sum::<f64>();
    let j = |n: usize| vals[n] / norm;
    let mut s_y0 = 0.0;
    let mut s_y1 = 0.0;
    for k in 1..=top / 2 {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let kf = k as f64;
        s_y0 += sign * j(2 * k) / kf;
        s_y1 += sign * (j(2 * k - 1) - j(2 * k + 1)) / kf;
    }
    let (j0, j1) = (j(0), j(1));
    let log_term = (0.5 * x).ln() + EULER_GAMMA;
    let y0 = FRAC_2_PI * (log_term * j0 - 2.0 * s_y0);
    let y1 = -FRAC_2_PI * (j0 / x - log_term * j1 - s_y1);
    (j0, j1, y0, y1)
}

/// Hankel `P`, `Q` for order `nu`.
fn hankel_pq(nu: f64, x: f64) -> (f64, f64) {
    let mu = 4.0 * nu * nu;
    let mut term = 1.0;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut last = f64::INFINITY;
    for k in 1..200 {
        let kf = k as f64;
        term *= (mu - (2.0 * kf - 1.0).powi(2)) / (kf * 8.0 * x);
        let a = term.abs();
        if a > last || a < 1e-17 {
            break;
        }
        last = a;
        // k odd feeds Q with sign (−1)^{(k−1)/2}; k even feeds P with (−1)^{k/2}
        match k % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
    }
    (p, q)
}

fn hankel_jy(nu: f64, x: f64) -> (f64, f64) {
    let (p, q) = hankel_pq(nu, x);
    let phase = (0.5 * nu + 0.25) * PI;
    let (sx, cx) = x.sin_cos();
    let (sp, cp) = phase.sin_cos();
    let cos_chi = cx * cp + sx * sp;
    let sin_chi = sx * cp - cx * sp;
    let amp = (FRAC_2_PI / x).sqrt();
    (amp * (p * cos_chi - q * sin_chi), amp * (p * sin_chi + q * cos_chi))
}

/// `(J₀, J₁, Y₀, Y₁)` at `x > 0`.
pub fn bessel_jy01(x: f64) -> (f64, f64, f64, f64) {
    debug_assert!(x > 0.0);
    if x <= SERIES_JY_MAX {
        let (j0, j1) = series_j(x);
        let (y0, y1) = series_y(x, j0, j1);
        (j0, j1, y0, y1)
    } else if x <= MILLER_JY_MAX {
        miller_jy(x)
    } else {
        let (j0, y0) = hankel_jy(0.0, x);
        let (j1, y1) = hankel_jy(1.0, x);
        (j0, j1, y0, y1)
    }
}

pub fn bessel_j0(x: f64) -> f64 {
    let x = x.abs();
    if x == 0.0 {
        return 1.0;
    }
    bessel_jy01(x).0
}

pub fn bessel_j1(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    x.signum() * bessel_jy01(x.abs()).1
}

pub fn bessel_y0(x: f64) -> f64 {
    bessel_jy01(x).2
}

pub fn bessel_y1(x: f64) -> f64 {
    bessel_jy01(x).3
}

fn series_i(x: f64) -> (f64, f64) {
    let q = 0.25 * x * x;
    let (mut t0, mut t1) = (1.0, 0.5 * x);
    let (mut i0, mut i1) = (t0, t1);
    for k in 1..300 {
        let kf = k as f64;
        t0 *= q / (kf * kf);
        t1 *= q / (kf * (kf + 1.0));
        i0 += t0;
        i1 += t1;
        if t0 < 1e-18 * i0 && t1 < 1e-18 * i1 {
            break;
        }
    }
    (i0, i1)
}

/// `e^{−x}·I_ν(x)` from the large-argument expansion.
fn asymptotic_i_scaled(nu: f64, x: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut last = f64::INFINITY;
    for k in 1..200 {
        let kf = k as f64;
        term *= -(mu - (2.0 * kf - 1.0).powi(2)) / (kf * 8.0 * x);
        if term.abs() > last || term.abs() < 1e-17 {
            break;
        }
        last = term.abs();
        sum += term;
    }
    sum / (2.0 * PI * x).sqrt()
}

/// `(I₀, I₁)` at `x ≥ 0`.
pub fn bessel_i01(x: f64) -> (f64, f64) {
    if x <= SERIES_I_MAX {
        series_i(x)
    } else {
        let e = x.exp();
        (e * asymptotic_i_scaled(0.0, x), e * asymptotic_i_scaled(1.0, x))
    }
}

/// `e^{−x}·(I₀(x), I₁(x))` at `x ≥ 0`.
pub fn bessel_i01_scaled(x: f64) -> (f64, f64) {
    if x <= SERIES_I_MAX {
        let (i0, i1) = series_i(x);
        let e = (-x).exp();
        (i0 * e, i1 * e)
    } else {
        (asymptotic_i_scaled(0.0, x), asymptotic_i_scaled(1.0, x))
    }
}

pub fn bessel_i0(x: f64) -> f64 {
    bessel_i01(x.abs()).0
}

pub fn bessel_i1(x: f64) -> f64 {
    x.signum() * bessel_i01(x.abs()).1
}

fn series_k(x: f64) -> (f64, f64) {
    let (i0, i1) = series_i(x);
    let q = 0.25 * x * x;
    let log_half = (0.5 * x).ln();
    let mut t0 = 1.0;
    let mut s0 = 0.0;
    let mut t1 = 1.0;
    let mut s1 = 1.0 - 2.0 * EULER_GAMMA;
    let mut h = 0.0;
    for k in 1..200 {
        let kf = k as f64;
        h += 1.0 / kf;
        t0 *= q / (kf * kf);
        t1 *= q / (kf * (kf + 1.0));
        s0 += h * t0;
        s1 += (2.0 * h + 1.0 / (kf + 1.0) - 2.0 * EULER_GAMMA) * t1;
        if t0 < 1e-18 * s0.abs().max(1e-300) && t1 < 1e-18 {
            break;
        }
    }
    let k0 = -(log_half + EULER_GAMMA) * i0 + s0;
    let k1 = 1.0 / x + log_half * i1 - 0.25 * x * s1;
    (k0, k1)
}

/// `e^{x}·(K₀, K₁)` by the trapezoidal rule on the integral representation.
fn integral_k_scaled(x: f64) -> (f64, f64) {
    let h = 0.1;
    let mut k0 = 0.5;
    let mut k1 = 0.5;
    for j in 1..2000 {
        let t = j as f64 * h;
        let s = (0.5 * t).sinh();
        let w = (-2.0 * x * s * s).exp();
        k0 += w;
        k1 += w * t.cosh();
        if w < 1e-19 {
            break;
        }
    }
    (h * k0, h * k1)
}

fn asymptotic_k_scaled(nu: f64, x: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut last = f64::INFINITY;
    for k in 1..200 {
        let kf = k as f64;
        term *= (mu - (2.0 * kf - 1.0).powi(2)) / (kf * 8.0 * x);
        if term.abs() > last || term.abs() < 1e-17 {
            break;
        }
        last = term.abs();
        sum += term;
    }
    sum * (FRAC_PI_2 / x).sqrt()
}

/// `e^{x}·(K₀(x), K₁(x))` at `x > 0`.
pub fn bessel_k01_scaled(x: f64) -> (f64, f64) {
    debug_assert!(x > 0.0);
    if x <= SERIES_K_MAX {
        let (k0, k1) = series_k(x);
        let e = x.exp();
        (k0 * e, k1 * e)
    } else if x <= ASYMPTOTIC_K_MIN {
        integral_k_scaled(x)
    } else {
        (asymptotic_k_scaled(0.0, x), asymptotic_k_scaled(1.0, x))
    }
}

/// `(K₀(x), K₁(x))` at `x > 0`.
pub fn bessel_k01(x: f64) -> (f64, f64) {
    if x <= SERIES_K_MAX {
        series_k(x)
    } else {
        let (a, b) = bessel_k01_scaled(x);
        let e = (-x).exp();
        (a * e, b * e)
    }
}

pub fn bessel_k0(x: f64) -> f64 {
    bessel_k01(x).0
}

pub fn bessel_k1(x: f64) -> f64 {
    bessel_k01(x).1
}

/// Complete elliptic integral of the first kind `K(k)`, given the
/// complementary modulus `k' = √(1 − k²)` so that the logarithmic end
/// `k → 1` stays accurate. Arithmetic–geometric mean.
pub fn ellipk_complement(k_prime: f64) -> f64 {
    debug_assert!(k_prime > 0.0 && k_prime <= 1.0);
    let mut a = 1.0;
    let mut b = k_prime;
    for _ in 0..64 {
        let an = 0.5 * (a + b);
        let bn = (a * b).sqrt();
        a = an;
        b = bn;
        if (a - b).abs() <= 1e-16 * a {
            break;
        }
    }
    FRAC_PI_2 / a
}

/// `K(k)` for modulus `0 ≤ k < 1`.
pub fn ellipk(k: f64) -> f64 {
    ellipk_complement(((1.0 - k) * (1.0 + k)).sqrt())
}
