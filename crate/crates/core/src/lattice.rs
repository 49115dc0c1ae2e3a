//! Infinite-lattice regularization: nearest-neighbour dispersion, the
//! Brillouin-zone Green integral and the rank-one two-body bound state.
//!
//! With `θᵢ = ε·kᵢ` the zone integral reduces to closed forms,
//!
//! ```text
//! dim 1:  G(B) = (ε/σ) / √((a − 1)(a + 1)),   a = 1 + Bε²/σ
//! dim 2:  G(B) = (1/σ)·(2/(πa))·K(2/a),        a = 2 + Bε²/σ
//! ```
//!
//! with `K` evaluated from its complementary modulus so that `B → 0` keeps
//! full relative accuracy.

use std::f64::consts::PI;

use crate::cutoff::{BoundOrigin, BoundState};
use crate::error::{Error, Result};
use crate::params::{PhysParams, RegScheme};
use crate::roots::bisect;
use crate::special::ellipk_complement;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticeSpec {
    pub eps: f64,
    /// 1 or 2.
    pub dim: usize,
    /// Factor σ multiplying the dispersion. σ = 1 gives `E ≈ |k|²/2`, the
    /// continuum kinetic energy at unit mass.
    pub sigma: f64,
}

impl LatticeSpec {
    pub fn new(eps: f64, dim: usize, sigma: f64) -> Result<Self> {
        let spec = LatticeSpec { eps, dim, sigma };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.eps > 0.0 && self.eps.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "eps",
                value: self.eps,
                reason: "lattice spacing must be finite and positive",
            });
        }
        if !(self.dim == 1 || self.dim == 2) {
            return Err(Error::InvalidParameter {
                name: "dim",
                value: self.dim as f64,
                reason: "only one and two dimensions are supported",
            });
        }
        if !(self.sigma > 0.0 && self.sigma.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "sigma",
                value: self.sigma,
                reason: "dispersion factor must be finite and positive",
            });
        }
        Ok(())
    }

    /// Zone half-width `π/ε`.
    pub fn zone_edge(&self) -> f64 {
        PI / self.eps
    }
}

/// `E_ε(k) = ε⁻²·Σᵢ (1 − cos εkᵢ)`, before the σ factor.
pub fn lattice_dispersion(k: &[f64], eps: f64) -> Result<f64> {
    if !(eps > 0.0) {
        return Err(Error::InvalidParameter {
            name: "eps",
            value: eps,
            reason: "lattice spacing must be positive",
        });
    }
    let edge = PI / eps;
    let mut sum = 0.0;
    for &ki in k {
        if !(ki.abs() <= edge * (1.0 + 4.0 * f64::EPSILON)) {
            return Err(Error::Domain(format!(
                "k = {ki} lies outside the Brillouin zone [−{edge}, {edge}]"
            )));
        }
        // 1 − cos x = 2 sin²(x/2), exact near the zone centre
        let s = (0.5 * eps * ki).sin();
        sum += 2.0 * s * s;
    }
    Ok(sum / (eps * eps))
}

/// `G(B) = ∫_{zone} d^dim k/(2π)^dim · 1/(σE_ε(k) + B)`.
pub fn bz_green_integral(binding: f64, spec: &LatticeSpec) -> Result<f64> {
    spec.validate()?;
    if !(binding > 0.0) {
        return Err(Error::Domain(format!("B = {binding} must be positive")));
    }
    let delta = binding * spec.eps * spec.eps / spec.sigma;
    Ok(match spec.dim {
        1 => (spec.eps / spec.sigma) / (delta * (2.0 + delta)).sqrt(),
        _ => {
            let a = 2.0 + delta;
            let k_prime = (delta * (4.0 + delta)).sqrt() / a;
            if k_prime >= 1.0 {
                // K(0) = π/2
                1.0 / (spec.sigma * a)
            } else {
                (2.0 / (PI * a)) * ellipk_complement(k_prime) / spec.sigma
            }
        }
    })
}

/// The zone integral by the periodic trapezoidal rule with `n` points per
/// axis; spectrally convergent for `B` well above `σ/(nε)²`.
pub fn bz_green_trapezoid(binding: f64, spec: &LatticeSpec, n: usize) -> Result<f64> {
    spec.validate()?;
    if !(binding > 0.0) || n == 0 {
        return Err(Error::Domain("need B > 0 and at least one grid point".into()));
    }
    let h = 2.0 * PI / n as f64;
    let e2 = spec.eps * spec.eps;
    // Midpoint-offset nodes avoid θ = 0 exactly; irrelevant for B > 0.
    let term = |theta: f64| 2.0 * (0.5 * theta).sin().powi(2) / e2;
    let axis: Vec<f64> = (0..n).map(|j| term(-PI + (j as f64 + 0.5) * h)).collect();
    let cell = match spec.dim {
        1 => spec.eps.recip(),
        _ => e2.recip(),
    };
    let weight = cell / (n as f64).powi(spec.dim as i32);
    let sum = match spec.dim {
        1 => pairwise_sum(&axis.iter().map(|&e| 1.0 / (spec.sigma * e + binding)).collect::<Vec<_>>()),
        _ => {
            let rows: Vec<f64> = axis
                .iter()
                .map(|&ex| {
                    let row: Vec<f64> = axis.iter().map(|&ey| 1.0 / (spec.sigma * (ex + ey) + binding)).collect();
                    pairwise_sum(&row)
                })
                .collect();
            pairwise_sum(&rows)
        }
    };
    Ok(sum * weight)
}

fn pairwise_sum(xs: &[f64]) -> f64 {
    if xs.len() <= 8 {
        return xs.iter().sum();
    }
    let (a, b) = xs.split_at(xs.len() / 2);
    pairwise_sum(a) + pairwise_sum(b)
}

/// Bound state of the rank-one lattice interaction, `|g₀|·G(B) = 1`.
/// `Ok(None)` when `g₀ ≥ 0`.
pub fn lattice_bound_state(g0: f64, spec: &LatticeSpec) -> Result<Option<BoundState>> {
    spec.validate()?;
    if g0.is_nan() {
        return Err(Error::InvalidParameter {
            name: "g0",
            value: g0,
            reason: "coupling must be a number",
        });
    }
    if g0 >= 0.0 {
        return Ok(None);
    }
    let strength = g0.abs();
    let f = |log_b: f64| match bz_green_integral(log_b.exp(), spec) {
        Ok(g) => strength * g - 1.0,
        Err(_) => f64::NAN,
    };
    // G ≤ 1/(B·ε^dim), so the root lies below B = 2|g₀|/ε^dim.
    let hi = (2.0 * strength / spec.eps.powi(spec.dim as i32)).ln();
    let lo = -700.0;
    if f(lo) < 0.0 {
        return Err(Error::Solver(format!(
            "binding energy for g0 = {g0} lies below e^{lo}; not representable"
        )));
    }
    let log_b = bisect(f, lo, hi, 0.0, 1e-15)?;
    let binding = log_b.exp();
    let residual = (1.0 - strength * bz_green_integral(binding, spec)?).abs();
    Ok(Some(BoundState {
        binding,
        origin: BoundOrigin::Regularized(RegScheme::Lattice { eps: spec.eps }),
        residual,
        warning: None,
    }))
}

/// Coupling prescription for a continuum-limit scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CouplingFlow {
    /// Bare coupling from the model constants at `κ = π/ε`.
    Running(PhysParams),
    /// The same bare coupling at every spacing.
    Frozen(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContinuumRow {
    pub eps: f64,
    pub kappa: f64,
    pub g0: f64,
    /// `None` when the coupling does not bind.
    pub binding: Option<f64>,
}

/// Lattice ground binding energy along a sequence of spacings.
pub fn continuum_limit_check(
    flow: &CouplingFlow,
    eps_list: &[f64],
    dim: usize,
    sigma: f64,
) -> Result<Vec<ContinuumRow>> {
    if eps_list.iter().any(|&e| !(e > 0.0)) {
        return Err(Error::Domain("lattice spacings must be positive".into()));
    }
    if eps_list.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::Domain("lattice spacings must be strictly decreasing".into()));
    }
    eps_list
        .iter()
        .map(|&eps| {
            let kappa = PI / eps;
            let g0 = match flow {
                CouplingFlow::Running(p) => p.with_cutoff(kappa)?.bare_coupling()?,
                CouplingFlow::Frozen(g0) => *g0,
            };
            let spec = LatticeSpec::new(eps, dim, sigma)?;
            let binding = lattice_bound_state(g0, &spec)?.map(|b| b.binding);
            Ok(ContinuumRow {
                eps,
                kappa,
                g0,
                binding,
            })
        })
        .collect()
}
