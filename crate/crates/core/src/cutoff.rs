//! Separable sharp-momentum-cutoff contact model in two dimensions.
//!
//! The rank-one interaction turns the Lippmann–Schwinger equation into the
//! algebraic relation `T = [1/g₀ + 2m·I(−k² − i0)]⁻¹`, where `I` is the
//! cutoff loop integral
//!
//! ```text
//! I(z) = ∫_{|p_i| ≤ κ} d²p/(2π)² · 1/(p² + z).
//! ```
//!
//! Absorbing `ln κ` into the coupling gives the renormalized amplitude
//! `T = [1/g − (1/π)ln(k/μ) + i/2]⁻¹` and the bound state `√(2B) = μ·e^{π/g}`.
//! Amplitudes without an explicit mass use `m = 1`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::params::RegScheme;
use crate::quad::{integrate, QuadConfig};
use crate::roots::bisect;

/// Region of integration for the loop integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LoopGeometry {
    /// `|p| ≤ κ`, closed form `(1/4π)·ln((κ² + z)/z)`.
    Disk,
    /// Large-κ form of the disk, `(1/4π)·ln(κ²/z)`.
    DiskAsymptotic,
    /// The cutoff square `|p₁|, |p₂| ≤ κ`.
    Square,
}

/// Argument of the loop integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LoopArg {
    /// An ordinary complex `z` off the negative real axis.
    Value(Complex64),
    /// The boundary value `z = −k² − i0`.
    OnShell { k: f64 },
}

/// Loop integral with the quadrature error estimate (zero for closed forms).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LoopIntegral {
    pub value: Complex64,
    pub error: f64,
}

/// Relative accuracy requested from the square-corner quadrature.
pub const SQUARE_REL_TOL: f64 = 1e-10;

fn inv_4pi() -> f64 {
    0.25 / PI
}

fn check_kappa(kappa: f64) -> Result<()> {
    if kappa > 0.0 && kappa.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name: "kappa",
            value: kappa,
            reason: "cutoff must be finite and positive",
        })
    }
}

/// `∫ d²p/(2π)² 1/(p² + z)` over the selected geometry.
pub fn loop_integral(z: LoopArg, kappa: f64, geometry: LoopGeometry) -> Result<LoopIntegral> {
    check_kappa(kappa)?;
    let k2 = kappa * kappa;
    let disk = |asymptotic: bool| -> Result<Complex64> {
        match z {
            LoopArg::Value(z) => {
                if z.re == 0.0 && z.im == 0.0 {
                    return Err(Error::LogSingularity);
                }
                if z.im == 0.0 && z.re < 0.0 {
                    return Err(Error::Domain(format!(
                        "z = {} lies on the negative real axis; pass it as an on-shell limit",
                        z.re
                    )));
                }
                let log = if asymptotic {
                    (Complex64::new(k2, 0.0) / z).ln()
                } else {
                    (Complex64::new(1.0, 0.0) + k2 / z).ln()
                };
                Ok(log * inv_4pi())
            }
            LoopArg::OnShell { k } => {
                if k <= 0.0 {
                    return Err(Error::LogSingularity);
                }
                // ln(N/(−k² − i0)) = ln(N/k²) + iπ for N > 0
                let numerator = if asymptotic { k2 } else { k2 - k * k };
                let re = if numerator > 0.0 {
                    (numerator / (k * k)).ln()
                } else if numerator < 0.0 {
                    // k > κ: numerator also carries −i0, the phases cancel
                    return Ok(Complex64::new((-numerator / (k * k)).ln(), 0.0) * inv_4pi());
                } else {
                    return Err(Error::Domain("on-shell momentum equals the cutoff".into()));
                };
                Ok(Complex64::new(re, PI) * inv_4pi())
            }
        }
    };
    match geometry {
        LoopGeometry::Disk => Ok(LoopIntegral {
            value: disk(false)?,
            error: 0.0,
        }),
        LoopGeometry::DiskAsymptotic => Ok(LoopIntegral {
            value: disk(true)?,
            error: 0.0,
        }),
        LoopGeometry::Square => {
            let base = disk(false)?;
            let corner_z = match z {
                LoopArg::Value(z) => z,
                LoopArg::OnShell { k } => {
                    if k >= kappa {
                        return Err(Error::Domain(format!(
                            "on-shell momentum k = {k} must lie below the cutoff {kappa}"
                        )));
                    }
                    Complex64::new(-k * k, 0.0)
                }
            };
            let corner = square_corner(corner_z, kappa)?;
            let value = base + corner.value;
            let rel = corner.error / value.norm().max(f64::MIN_POSITIVE);
            if rel > SQUARE_REL_TOL * 10.0 {
                return Err(Error::Tolerance {
                    target: SQUARE_REL_TOL,
                    achieved: rel,
                    estimate: value.norm(),
                });
            }
            Ok(LoopIntegral {
                value,
                error: corner.error,
            })
        }
    }
}

/// The four corners of the square outside the inscribed disk, by nested
/// adaptive Gauss–Kronrod in polar coordinates over one of eight symmetric
/// wedges.
fn square_corner(z: Complex64, kappa: f64) -> Result<LoopIntegral> {
    let outer_cfg = QuadConfig {
        rel_tol: SQUARE_REL_TOL,
        abs_tol: 1e-300,
        max_panels: 2000,
    };
    let inner_cfg = QuadConfig {
        rel_tol: SQUARE_REL_TOL * 1e-2,
        abs_tol: 1e-300,
        max_panels: 2000,
    };
    let mut inner_err = 0.0f64;
    let mut inner_fail: Option<Error> = None;
    let outer = integrate(
        |theta: f64| {
            let r_max = kappa / theta.cos();
            match integrate(
                |r: f64| Complex64::new(r, 0.0) / (z + r * r),
                kappa,
                r_max,
                &inner_cfg,
            ) {
                Ok(res) => {
                    inner_err = inner_err.max(res.error);
                    res.value
                }
                Err(e) => {
                    inner_fail.get_or_insert(e);
                    Complex64::new(0.0, 0.0)
                }
            }
        },
        0.0,
        PI / 4.0,
        &outer_cfg,
    )?;
    if let Some(e) = inner_fail {
        return Err(e);
    }
    let scale = 8.0 / (4.0 * PI * PI);
    Ok(LoopIntegral {
        value: outer.value * scale,
        error: (outer.error + inner_err * PI / 4.0) * scale,
    })
}

/// On-shell complex amplitude `T` at momentum `k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexAmplitude {
    pub value: Complex64,
    pub k: f64,
    /// Mass entering the loop factor `2m`; unitarity reads
    /// `Im T = −(m/2)|T|²`.
    pub mass: f64,
}

impl ComplexAmplitude {
    /// `Im T + (m/2)|T|²`, zero for an elastic s-wave amplitude.
    pub fn unitarity_defect(&self) -> f64 {
        self.value.im + 0.5 * self.mass * self.value.norm_sqr()
    }
}

fn inverse_or_zero(g: f64) -> f64 {
    if g.is_infinite() {
        0.0
    } else {
        1.0 / g
    }
}

/// `T = [1/g₀ + 2m·I(−k² − i0, κ)]⁻¹`. Pass `g0 = ∞` for the unitary limit.
pub fn t_amplitude_bare(
    k: f64,
    g0: f64,
    kappa: f64,
    m: f64,
    geometry: LoopGeometry,
) -> Result<ComplexAmplitude> {
    check_kappa(kappa)?;
    if !(k > 0.0 && k < kappa) {
        return Err(Error::Domain(format!(
            "on-shell momentum k = {k} must satisfy 0 < k < κ = {kappa}"
        )));
    }
    if !(m > 0.0) {
        return Err(Error::InvalidParameter {
            name: "m",
            value: m,
            reason: "mass must be positive",
        });
    }
    if g0 == 0.0 {
        return Err(Error::InvalidParameter {
            name: "g0",
            value: g0,
            reason: "zero coupling has no inverse",
        });
    }
    let loop_value = loop_integral(LoopArg::OnShell { k }, kappa, geometry)?.value;
    let denominator = inverse_or_zero(g0) + 2.0 * m * loop_value;
    if denominator.norm() <= 1e-14 * (1.0 + inverse_or_zero(g0).abs()) {
        return Err(Error::ResonancePole { k });
    }
    Ok(ComplexAmplitude {
        value: denominator.inv(),
        k,
        mass: m,
    })
}

/// `1/g = 1/g₀ + (1/π)·ln(κ/μ)`.
///
/// A vanishing `1/g` returns `f64::INFINITY`, which every downstream
/// operation accepts as the unitary limit.
pub fn renormalized_coupling(g0: f64, kappa: f64, mu: f64) -> Result<f64> {
    check_kappa(kappa)?;
    check_mu(mu)?;
    let inv = inverse_or_zero(g0) + (kappa / mu).ln() / PI;
    Ok(if inv == 0.0 { f64::INFINITY } else { 1.0 / inv })
}

/// Inverse of [`renormalized_coupling`]: the bare coupling at cutoff `κ`.
pub fn bare_from_renormalized(g: f64, kappa: f64, mu: f64) -> Result<f64> {
    check_kappa(kappa)?;
    check_mu(mu)?;
    let inv = inverse_or_zero(g) - (kappa / mu).ln() / PI;
    Ok(if inv == 0.0 { f64::INFINITY } else { 1.0 / inv })
}

/// Coupling at a new renormalization point giving identical amplitudes:
/// `1/g′ = 1/g + (1/π)·ln(μ/μ′)`.
pub fn shift_renormalization_point(g: f64, mu: f64, mu_new: f64) -> Result<f64> {
    check_mu(mu)?;
    check_mu(mu_new)?;
    let inv = inverse_or_zero(g) + (mu / mu_new).ln() / PI;
    Ok(if inv == 0.0 { f64::INFINITY } else { 1.0 / inv })
}

fn check_mu(mu: f64) -> Result<()> {
    if mu > 0.0 && mu.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name: "mu",
            value: mu,
            reason: "renormalization point must be finite and positive",
        })
    }
}

/// Real part of the renormalized inverse amplitude,
/// `1/g − (1/π)·ln(k/μ)`.
pub fn renormalized_denominator(k: f64, g: f64, mu: f64) -> f64 {
    inverse_or_zero(g) - (k / mu).ln() / PI
}

/// `T = [1/g − (1/π)ln(k/μ) + i/2]⁻¹`; never singular for real `k`.
pub fn t_amplitude_renormalized(k: f64, g: f64, mu: f64) -> Result<ComplexAmplitude> {
    check_mu(mu)?;
    if !(k > 0.0) {
        return Err(Error::Domain(format!("momentum k = {k} must be positive")));
    }
    let denominator = Complex64::new(renormalized_denominator(k, g, mu), 0.5);
    Ok(ComplexAmplitude {
        value: denominator.inv(),
        k,
        mass: 1.0,
    })
}

/// s-wave phase shift in `(0, π)` with `cot δ₀ = (2/π)·ln(k/μ) − 2/g`.
pub fn s_wave_phase_shift(k: f64, g: f64, mu: f64) -> Result<f64> {
    check_mu(mu)?;
    if !(k > 0.0) {
        return Err(Error::Domain(format!("momentum k = {k} must be positive")));
    }
    let cot = -2.0 * renormalized_denominator(k, g, mu);
    Ok(1.0f64.atan2(cot))
}

/// Where a binding energy came from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundOrigin {
    Regularized(RegScheme),
    Renormalized { g: f64, mu: f64 },
}

/// Binding energy `B > 0` (the state sits at `E = −B`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundState {
    pub binding: f64,
    pub origin: BoundOrigin,
    /// Residual of the defining equation at the returned energy.
    pub residual: f64,
    /// Set when the inputs lie outside the physically admissible range.
    pub warning: Option<&'static str>,
}

/// `B = μ²·e^{2π/g}/2`, i.e. `√(2B) = μ·e^{π/g}`.
pub fn bound_state_energy(g: f64, mu: f64) -> Result<BoundState> {
    check_mu(mu)?;
    if g == 0.0 || g.is_nan() {
        return Err(Error::InvalidParameter {
            name: "g",
            value: g,
            reason: "renormalized coupling must be nonzero",
        });
    }
    let binding = 0.5 * mu * mu * (2.0 * PI * inverse_or_zero(g)).exp();
    let residual = renormalized_denominator((2.0 * binding).sqrt(), g, mu).abs();
    Ok(BoundState {
        binding,
        origin: BoundOrigin::Renormalized { g, mu },
        residual,
        warning: (g < 0.0).then_some("non-positive renormalized coupling"),
    })
}

/// Binding energy recovered by bisection on the real renormalized
/// denominator, searching `ln k` over a wide bracket.
pub fn bound_state_from_denominator(g: f64, mu: f64) -> Result<f64> {
    check_mu(mu)?;
    let f = |log_k: f64| renormalized_denominator(log_k.exp(), g, mu);
    let centre = mu.ln();
    let log_k = bisect(f, centre - 700.0, centre + 700.0, 0.0, 1e-15)?;
    let k = log_k.exp();
    Ok(0.5 * k * k)
}

/// Far-field amplitude `f(θ) = −(2πk)^{−1/2}·T`, independent of θ.
pub fn angular_amplitude(k: f64, t: &ComplexAmplitude) -> Result<Complex64> {
    if !(k > 0.0) {
        return Err(Error::Domain(format!("momentum k = {k} must be positive")));
    }
    Ok(-t.value / (2.0 * PI * k).sqrt())
}

/// `f = −(2πk)^{−1/2}·[(1/2π)·ln(2B/k²) + i/2]⁻¹`, the amplitude written in
/// terms of the binding energy.
pub fn angular_amplitude_from_binding(k: f64, binding: f64) -> Result<Complex64> {
    if !(k > 0.0 && binding > 0.0) {
        return Err(Error::Domain("k and B must be positive".into()));
    }
    let denominator = Complex64::new((2.0 * binding / (k * k)).ln() / (2.0 * PI), 0.5);
    Ok(-denominator.inv() / (2.0 * PI * k).sqrt())
}

/// Bound state of the bare cutoff model, `1/g₀ + 2m·I(2mB, κ) = 0`.
/// Requires `g₀ < 0`.
pub fn cutoff_bound_state(g0: f64, kappa: f64, m: f64, geometry: LoopGeometry) -> Result<BoundState> {
    check_kappa(kappa)?;
    if !(g0 < 0.0) {
        return Err(Error::Domain(format!(
            "bare coupling g0 = {g0} is not attractive; no bound state"
        )));
    }
    let strength = 2.0 * PI / (m * g0.abs());
    let binding = match geometry {
        LoopGeometry::DiskAsymptotic => kappa * kappa * (-strength).exp() / (2.0 * m),
        LoopGeometry::Disk => kappa * kappa / (strength.exp_m1() * 2.0 * m),
        LoopGeometry::Square => {
            let f = |log_b: f64| -> f64 {
                let z = Complex64::new(2.0 * m * log_b.exp(), 0.0);
                match loop_integral(LoopArg::Value(z), kappa, LoopGeometry::Square) {
                    Ok(i) => 1.0 / g0 + 2.0 * m * i.value.re,
                    Err(_) => f64::NAN,
                }
            };
            let start = (kappa * kappa / (2.0 * m)).ln();
            let log_b = bisect(f, start - 600.0, start + 40.0, 0.0, 1e-13)?;
            log_b.exp()
        }
    };
    let z = Complex64::new(2.0 * m * binding, 0.0);
    let residual = (1.0 / g0 + 2.0 * m * loop_integral(LoopArg::Value(z), kappa, geometry)?.value.re).abs();
    Ok(BoundState {
        binding,
        origin: BoundOrigin::Regularized(RegScheme::SharpCutoff { kappa }),
        residual,
        warning: None,
    })
}

/// Cutoff at which the bare model with coupling `g₀ < 0` binds at `B`.
pub fn cutoff_for_binding(binding: f64, g0: f64, m: f64, geometry: LoopGeometry) -> Result<f64> {
    if !(binding > 0.0) || !(g0 < 0.0) {
        return Err(Error::Domain("need B > 0 and an attractive coupling".into()));
    }
    let strength = 2.0 * PI / (m * g0.abs());
    match geometry {
        LoopGeometry::DiskAsymptotic => Ok((2.0 * m * binding).sqrt() * (0.5 * strength).exp()),
        LoopGeometry::Disk => Ok((2.0 * m * binding * strength.exp_m1()).sqrt()),
        LoopGeometry::Square => {
            let guess = cutoff_for_binding(binding, g0, m, LoopGeometry::Disk)?.ln();
            let (lo, hi) = (guess - 5.0, guess + 5.0);
            let f = |log_kappa: f64| match cutoff_bound_state(g0, log_kappa.exp(), m, geometry) {
                Ok(b) => (b.binding / binding).ln(),
                Err(_) => f64::NAN,
            };
            let (f_lo, f_hi) = (f(lo), f(hi));
            if !(f_lo < 0.0 && f_hi > 0.0) {
                return Err(Error::Calibration {
                    lo: lo.exp(),
                    hi: hi.exp(),
                });
            }
            Ok(bisect(f, lo, hi, 0.0, 1e-13)?.exp())
        }
    }
}

/// Multiplicative factor `c` such that the sharp cutoff `κ = c·π/ε` with
/// coupling `g₀` reproduces the binding energy of `reference`.
pub fn effective_cutoff_calibration(
    reference: &BoundState,
    g0: f64,
    eps: f64,
    m: f64,
    geometry: LoopGeometry,
) -> Result<f64> {
    if !(eps > 0.0) {
        return Err(Error::InvalidParameter {
            name: "eps",
            value: eps,
            reason: "length scale must be positive",
        });
    }
    Ok(cutoff_for_binding(reference.binding, g0, m, geometry)? * eps / PI)
}

/// One row of the case-i triviality scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayPoint {
    pub kappa: f64,
    pub amplitude: ComplexAmplitude,
    /// `|T|·ln κ`, which tends to π.
    pub scaled_modulus: f64,
}

/// Bare amplitude at fixed `(k, g₀)` over a list of cutoffs.
pub fn case_i_scan(
    k: f64,
    g0: f64,
    m: f64,
    kappas: &[f64],
    geometry: LoopGeometry,
) -> Result<Vec<DecayPoint>> {
    kappas
        .iter()
        .map(|&kappa| {
            let amplitude = t_amplitude_bare(k, g0, kappa, m, geometry)?;
            Ok(DecayPoint {
                kappa,
                amplitude,
                scaled_modulus: amplitude.value.norm() * kappa.ln(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn disk_loop_examples() {
        let v = loop_integral(LoopArg::Value(c(1.0, 0.0)), 1.0, LoopGeometry::Disk).unwrap();
        assert!((v.value - c(2f64.ln() / (4.0 * PI), 0.0)).norm() < 1e-16);
        // ln 2/4π ≈ 0.0551589
        assert!((v.value.re - 0.055_158_9).abs() < 1e-7);

        let far = loop_integral(LoopArg::Value(c(1e30, 0.0)), 1.0, LoopGeometry::Disk).unwrap();
        assert!(far.value.norm() < 1e-30);

        let shell = loop_integral(LoopArg::OnShell { k: 1.0 }, 100.0, LoopGeometry::Disk).unwrap();
        assert!((shell.value - c(9999f64.ln() / (4.0 * PI), 0.25)).norm() < 1e-15);
    }

    #[test]
    fn loop_errors() {
        assert_eq!(
            loop_integral(LoopArg::Value(c(0.0, 0.0)), 1.0, LoopGeometry::Disk),
            Err(Error::LogSingularity)
        );
        assert!(matches!(
            loop_integral(LoopArg::Value(c(-1.0, 0.0)), 1.0, LoopGeometry::Disk),
            Err(Error::Domain(_))
        ));
        assert!(loop_integral(LoopArg::Value(c(1.0, 0.0)), -1.0, LoopGeometry::Disk).is_err());
    }

    #[test]
    fn disk_matches_radial_antiderivative_off_axis() {
        // (1/4π)∫₀^{κ²} dt/(t + z) by quadrature
        let z = c(-0.3, 0.7);
        let kappa = 2.0;
        let quad = integrate(|t: f64| (z + t).inv(), 0.0, kappa * kappa, &QuadConfig::default())
            .unwrap()
            .value
            / (4.0 * PI);
        let v = loop_integral(LoopArg::Value(z), kappa, LoopGeometry::Disk).unwrap();
        assert!((v.value - quad).norm() < 1e-12);
    }

    #[test]
    fn bare_amplitude_examples() {
        let kappa = PI.exp();
        let t = t_amplitude_bare(1.0, 1.0, kappa, 1.0, LoopGeometry::DiskAsymptotic).unwrap();
        // [2 + i/2]⁻¹ = (8 − 2i)/17
        assert!((t.value - c(8.0 / 17.0, -2.0 / 17.0)).norm() < 1e-15);
        let t = t_amplitude_bare(1.0, f64::INFINITY, kappa, 1.0, LoopGeometry::DiskAsymptotic).unwrap();
        assert!((t.value - c(0.8, -0.4)).norm() < 1e-15);
        assert!(t_amplitude_bare(2.0, 1.0, 1.0, 1.0, LoopGeometry::Disk).is_err());
    }

    #[test]
    fn renormalized_examples() {
        let mu = 3.0;
        assert!((renormalized_coupling(1.0, mu, mu).unwrap() - 1.0).abs() < 1e-15);
        assert!((renormalized_coupling(1.0, mu * PI.exp(), mu).unwrap() - 0.5).abs() < 1e-15);
        // 1/g₀ = −(1/π)ln(κ/μ) hits the unitary point
        let g0 = -PI / 10f64.ln();
        assert_eq!(renormalized_coupling(g0, 10.0, 1.0).unwrap(), f64::INFINITY);

        let t = t_amplitude_renormalized(1.0, 1.0, 1.0).unwrap();
        assert!((t.value - c(0.8, -0.4)).norm() < 1e-15);
        let t = t_amplitude_renormalized(PI.exp(), 1.0, 1.0).unwrap();
        assert!((t.value - c(0.0, -2.0)).norm() < 1e-14);
    }

    #[test]
    fn coupling_round_trip() {
        for &kappa in &[10.0, 1e3, 1e6] {
            for &g in &[0.3, 1.0, 7.0, -2.0] {
                let g0 = bare_from_renormalized(g, kappa, 2.0).unwrap();
                let back = renormalized_coupling(g0, kappa, 2.0).unwrap();
                assert!((back - g).abs() <= 1e-12 * g.abs(), "{g} -> {g0} -> {back}");
            }
        }
    }

    #[test]
    fn mu_shift_leaves_amplitude_unchanged() {
        let (g, mu, mu_new) = (0.8, 1.0, std::f64::consts::E);
        let g_new = shift_renormalization_point(g, mu, mu_new).unwrap();
        for &k in &[0.1, 1.0, 17.0] {
            let a = t_amplitude_renormalized(k, g, mu).unwrap();
            let b = t_amplitude_renormalized(k, g_new, mu_new).unwrap();
            assert!((a.value - b.value).norm() < 1e-12);
        }
    }

    #[test]
    fn phase_shift_examples() {
        assert!((s_wave_phase_shift(2.0, f64::INFINITY, 2.0).unwrap() - PI / 2.0).abs() < 1e-15);
        let d = s_wave_phase_shift(1.0, 1.0, 1.0).unwrap();
        assert!((d - (PI - 0.5f64.atan())).abs() < 1e-15);
        assert!((d - 2.677_945_044_588_987).abs() < 1e-12);
        let d = s_wave_phase_shift(PI.exp(), 1.0, 1.0).unwrap();
        assert!((d - PI / 2.0).abs() < 1e-14);
    }

    #[test]
    fn phase_shift_consistent_with_amplitude() {
        for &(k, g, mu) in &[(0.5, 1.0, 1.0), (3.0, -0.4, 2.0), (100.0, 5.0, 0.1)] {
            let d = s_wave_phase_shift(k, g, mu).unwrap();
            let t = t_amplitude_renormalized(k, g, mu).unwrap();
            let from_delta = -2.0 / c(1.0 / d.tan(), -1.0);
            assert!((t.value - from_delta).norm() < 1e-12);
        }
    }

    #[test]
    fn bound_state_examples() {
        let b = bound_state_energy(PI, 1.0).unwrap();
        assert!((b.binding - std::f64::consts::E.powi(2) / 2.0).abs() < 1e-14);
        assert!((b.binding - 3.694_528).abs() < 1e-6);
        assert!(b.warning.is_none());
        assert_eq!(bound_state_energy(f64::INFINITY, 3.0).unwrap().binding, 4.5);
        let b = bound_state_energy(PI / 4f64.ln(), 1.0).unwrap();
        assert!((b.binding - 8.0).abs() < 1e-13);
        let neg = bound_state_energy(-1.0, 1.0).unwrap();
        assert!(neg.warning.is_some());
        assert!(neg.binding > 0.0);
    }

    #[test]
    fn angular_amplitude_examples() {
        let t = ComplexAmplitude {
            value: c(0.8, -0.4),
            k: 1.0,
            mass: 1.0,
        };
        let f = angular_amplitude(1.0, &t).unwrap();
        assert!((f - c(-0.319_154, 0.159_577)).norm() < 1e-6);
        assert!((f - c(-0.8, 0.4) / (2.0 * PI).sqrt()).norm() < 1e-15);
    }

    #[test]
    fn binding_form_of_amplitude_matches() {
        for &g in &[0.5, 1.0, PI, 10.0] {
            let b = bound_state_energy(g, 1.3).unwrap().binding;
            for &k in &[0.2, 1.0, 5.0] {
                let t = t_amplitude_renormalized(k, g, 1.3).unwrap();
                let f1 = angular_amplitude(k, &t).unwrap();
                let f2 = angular_amplitude_from_binding(k, b).unwrap();
                assert!((f1 - f2).norm() < 1e-12 * f1.norm().max(1.0));
            }
        }
    }

    #[test]
    fn cutoff_bound_state_closed_forms() {
        let g0 = -0.7;
        let kappa = 50.0;
        for geometry in [LoopGeometry::Disk, LoopGeometry::DiskAsymptotic] {
            let b = cutoff_bound_state(g0, kappa, 1.0, geometry).unwrap();
            assert!(b.residual < 1e-12, "{geometry:?}: {}", b.residual);
            let back = cutoff_for_binding(b.binding, g0, 1.0, geometry).unwrap();
            assert!((back - kappa).abs() < 1e-10 * kappa);
        }
        // Asymptotic disk equals the renormalized bound state.
        let g = renormalized_coupling(g0, kappa, 1.0).unwrap();
        let b_ren = bound_state_energy(g, 1.0).unwrap().binding;
        let b_asym = cutoff_bound_state(g0, kappa, 1.0, LoopGeometry::DiskAsymptotic).unwrap().binding;
        assert!((b_ren - b_asym).abs() < 1e-12 * b_ren);
        assert!(cutoff_bound_state(0.5, kappa, 1.0, LoopGeometry::Disk).is_err());
    }

    #[test]
    fn self_calibration_is_unity() {
        let eps = 0.02;
        let kappa = PI / eps;
        for geometry in [LoopGeometry::Disk, LoopGeometry::DiskAsymptotic, LoopGeometry::Square] {
            let reference = cutoff_bound_state(-0.6, kappa, 1.0, geometry).unwrap();
            let c_cal = effective_cutoff_calibration(&reference, -0.6, eps, 1.0, geometry).unwrap();
            assert!((c_cal - 1.0).abs() < 1e-9, "{geometry:?}: {c_cal}");
        }
    }

    #[test]
    fn case_i_scan_decays() {
        let kappas = [1e2, 1e4, 1e8, 1e16];
        let rows = case_i_scan(1.0, 1.0, 1.0, &kappas, LoopGeometry::Disk).unwrap();
        for w in rows.windows(2) {
            assert!(w[1].amplitude.value.norm() < w[0].amplitude.value.norm());
            assert!(w[1].scaled_modulus > w[0].scaled_modulus);
        }
        assert!(rows.iter().all(|r| r.scaled_modulus < PI));
    }
}
