//! Square-well regularization of the contact interaction in two dimensions.
//!
//! The well `V(r) = V₀·θ(ε − r)` is solved in the s-wave by matching the
//! regular interior solution to the free exterior solutions at `r = ε`.

use std::f64::consts::PI;

use crate::cutoff::{self, BoundOrigin, BoundState, LoopGeometry};
use crate::error::{Error, Result};
use crate::params::RegScheme;
use crate::roots::bisect;
use crate::special::{bessel_i01_scaled, bessel_jy01, bessel_k01_scaled};

/// How the coupling `g₀` sets the depth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WellNormalization {
    /// `V₀ = 2g₀/ε²`, so `∫V d²x = 2π·g₀`.
    #[default]
    Literal,
    /// `V₀ = g₀/(πε²)`, so `∫V d²x = g₀` as for the sharp-cutoff contact.
    UnitIntegral,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WellSpec {
    pub eps: f64,
    /// Attractive when negative.
    pub g0: f64,
    pub m: f64,
    pub normalization: WellNormalization,
}

/// Default number of scan points for bracketing bound states.
pub const SCAN_POINTS: usize = 512;

/// Smallest binding energy searched, relative to `|V₀|`.
const MIN_RELATIVE_BINDING: f64 = 1e-290;

impl WellSpec {
    pub fn new(eps: f64, g0: f64, m: f64) -> Result<Self> {
        Self::with_normalization(eps, g0, m, WellNormalization::Literal)
    }

    pub fn with_normalization(eps: f64, g0: f64, m: f64, normalization: WellNormalization) -> Result<Self> {
        let spec = WellSpec {
            eps,
            g0,
            m,
            normalization,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.eps > 0.0 && self.eps.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "eps",
                value: self.eps,
                reason: "well radius must be finite and positive",
            });
        }
        if !(self.m > 0.0 && self.m.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "m",
                value: self.m,
                reason: "mass must be finite and positive",
            });
        }
        if !self.g0.is_finite() {
            return Err(Error::InvalidParameter {
                name: "g0",
                value: self.g0,
                reason: "coupling must be finite",
            });
        }
        Ok(())
    }

    /// Well depth `V₀`, same sign as `g₀`.
    pub fn depth(&self) -> f64 {
        let e2 = self.eps * self.eps;
        match self.normalization {
            WellNormalization::Literal => 2.0 * self.g0 / e2,
            WellNormalization::UnitIntegral => self.g0 / (PI * e2),
        }
    }

    /// `∫V d²x`, the coupling seen by a sharp-cutoff contact.
    pub fn contact_strength(&self) -> f64 {
        self.depth() * PI * self.eps * self.eps
    }

    /// `ε·√(2m|V₀|)`, the interior phase at zero energy.
    pub fn strength_parameter(&self) -> f64 {
        self.eps * (2.0 * self.m * self.depth().abs()).sqrt()
    }
}

/// Log-derivative matching function at binding energy `B ∈ (0, |V₀|)`,
/// `q·J₁(qε)·K₀(κε) − κ·K₁(κε)·J₀(qε)` with exponentially scaled `K`.
/// Its zeros are the bound states; it has no poles.
pub fn matching_function(well: &WellSpec, binding: f64) -> f64 {
    let v = well.depth().abs();
    let q = (2.0 * well.m * (v - binding)).sqrt();
    let kb = (2.0 * well.m * binding).sqrt();
    let (j0, j1, _, _) = bessel_jy01(q * well.eps);
    let (k0, k1) = bessel_k01_scaled(kb * well.eps);
    q * j1 * k0 - kb * k1 * j0
}

fn matching_residual(well: &WellSpec, binding: f64) -> f64 {
    let v = well.depth().abs();
    let q = (2.0 * well.m * (v - binding)).sqrt();
    let kb = (2.0 * well.m * binding).sqrt();
    let (j0, j1, _, _) = bessel_jy01(q * well.eps);
    let (k0, k1) = bessel_k01_scaled(kb * well.eps);
    let scale = (q * j1 * k0).abs() + (kb * k1 * j0).abs();
    (q * j1 * k0 - kb * k1 * j0).abs() / scale
}

/// All s-wave bound states, deepest first (largest `B` first). Empty unless
/// `g₀ < 0`.
pub fn bound_states(well: &WellSpec) -> Result<Vec<BoundState>> {
    well.validate()?;
    if well.g0 >= 0.0 {
        return Ok(Vec::new());
    }
    let v = well.depth().abs();
    let x_max = well.strength_parameter();
    let n = SCAN_POINTS.max((64.0 * x_max).ceil() as usize);
    let binding_at = |i: usize| {
        let t = i as f64 / n as f64;
        v * (1.0 - t * t)
    };
    let f = |b: f64| matching_function(well, b);

    let mut roots = Vec::new();
    let mut b_prev = binding_at(1);
    let mut f_prev = f(b_prev);
    for i in 2..n {
        let b = binding_at(i);
        let fb = f(b);
        if fb == 0.0 {
            roots.push(b);
        } else if f_prev != 0.0 && fb.signum() != f_prev.signum() {
            roots.push(bisect(f, b, b_prev, 1e-13, 0.0)?);
        }
        b_prev = b;
        f_prev = fb;
    }

    // B → 0⁺: K₀ diverges, so the sign is that of J₁(x_max).
    let j1_edge = bessel_jy01(x_max).1;
    if j1_edge != 0.0 && f_prev != 0.0 && j1_edge.signum() != f_prev.signum() {
        let lo = (v * MIN_RELATIVE_BINDING).ln();
        let hi = b_prev.ln();
        let g = |log_b: f64| f(log_b.exp());
        if g(lo).signum() != j1_edge.signum() {
            return Err(Error::Solver(format!(
                "shallow state below B = {:e} not resolved",
                v * MIN_RELATIVE_BINDING
            )));
        }
        roots.push(bisect(g, lo, hi, 0.0, 1e-13)?.exp());
    }

    let mut states: Vec<BoundState> = roots
        .into_iter()
        .map(|b| BoundState {
            binding: b,
            origin: BoundOrigin::Regularized(RegScheme::SquareWell { eps: well.eps }),
            residual: matching_residual(well, b),
            warning: None,
        })
        .collect();
    states.sort_by(|a, b| b.binding.total_cmp(&a.binding));
    if states.is_empty() {
        return Err(Error::Solver(format!(
            "no sign change of the matching function on (0, {v}) for an attractive well"
        )));
    }
    Ok(states)
}

/// Deepest bound state.
pub fn ground_state(well: &WellSpec) -> Result<BoundState> {
    bound_states(well)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::Domain(format!("g0 = {} does not bind", well.g0)))
}

/// Numerator and denominator of `tan δ₀`.
fn tan_parts(well: &WellSpec, k: f64) -> (f64, f64) {
    let eps = well.eps;
    let v0 = well.depth();
    let (j0k, j1k, y0k, y1k) = bessel_jy01(k * eps);
    // Interior log-derivative written as n/d to avoid its poles.
    let energy_gap = k * k - 2.0 * well.m * v0;
    let (n, d) = if energy_gap >= 0.0 {
        let q = energy_gap.sqrt();
        let (j0q, j1q, _, _) = bessel_jy01(q * eps);
        (-q * j1q, j0q)
    } else {
        let kappa = (-energy_gap).sqrt();
        let (i0, i1) = bessel_i01_scaled(kappa * eps);
        (kappa * i1, i0)
    };
    (n * j0k + k * j1k * d, n * y0k + k * y1k * d)
}

/// s-wave phase shift on the principal branch `(−π/2, π/2]`.
pub fn s_wave_phase_shift_well(well: &WellSpec, k: f64) -> Result<f64> {
    well.validate()?;
    if !(k > 0.0) {
        return Err(Error::Domain(format!("momentum k = {k} must be positive")));
    }
    if well.g0 == 0.0 {
        return Ok(0.0);
    }
    let (num, den) = tan_parts(well, k);
    let mut delta = (num / den).atan();
    if den == 0.0 {
        delta = PI / 2.0;
    }
    if delta <= -PI / 2.0 {
        delta += PI;
    }
    Ok(delta)
}

/// Phase shift on the continuous branch fixed by `δ₀ → 0` at high
/// momentum. At `k → 0` it approaches `N·π`, `N` the number of bound states.
pub fn s_wave_phase_shift_continuous(well: &WellSpec, k: f64) -> Result<f64> {
    Ok(*phase_shift_branch(well, &[k])?.last().unwrap_or(&0.0))
}

/// Continuous-branch phase shifts at each requested momentum.
pub fn phase_shift_branch(well: &WellSpec, ks: &[f64]) -> Result<Vec<f64>> {
    well.validate()?;
    if ks.iter().any(|&k| !(k > 0.0)) {
        return Err(Error::Domain("momenta must be positive".into()));
    }
    let x = well.strength_parameter();
    let k_top = 1e3 * (1.0 + x * x) / well.eps;
    let mut order: Vec<usize> = (0..ks.len()).collect();
    order.sort_by(|&a, &b| ks[b].total_cmp(&ks[a]));

    let ratio: f64 = 0.995;
    let mut out = vec![0.0; ks.len()];
    let mut k = k_top;
    let mut delta = s_wave_phase_shift_well(well, k)?;
    for idx in order {
        let target = ks[idx];
        while k * ratio > target {
            k *= ratio;
            delta = unwrap_near(s_wave_phase_shift_well(well, k)?, delta);
        }
        if target < k {
            k = target;
            delta = unwrap_near(s_wave_phase_shift_well(well, k)?, delta);
        }
        out[idx] = if target >= k_top {
            s_wave_phase_shift_well(well, target)?
        } else {
            delta
        };
    }
    Ok(out)
}

fn unwrap_near(principal: f64, previous: f64) -> f64 {
    principal + ((previous - principal) / PI).round() * PI
}

/// Factor `c` such that the sharp cutoff `κ = c·π/ε`, with the well's
/// contact strength as bare coupling, reproduces the well's ground state.
pub fn effective_cutoff_calibration(well: &WellSpec, geometry: LoopGeometry) -> Result<f64> {
    let ground = ground_state(well)?;
    cutoff::effective_cutoff_calibration(&ground, well.contact_strength(), well.eps, well.m, geometry)
}
