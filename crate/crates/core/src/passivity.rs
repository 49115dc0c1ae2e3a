//! Minima of the boosted free Hamiltonian `H + u·P`, relativistic and
//! Galilean, and the light-cone contraction as `c → ∞`.

use crate::error::{Error, Result};
use crate::params::dispersion_rel;

fn check_mass(m: f64) -> Result<()> {
    if m > 0.0 && m.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name: "m",
            value: m,
            reason: "mass must be finite and positive",
        })
    }
}

fn check_boost(u: f64, c: f64) -> Result<()> {
    if !(c > 0.0 && c.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "c",
            value: c,
            reason: "speed of light must be finite and positive",
        });
    }
    if !(u.abs() < c) {
        return Err(Error::SuperluminalBoost { u, c });
    }
    Ok(())
}

/// `min_p [ω(p) + u·p] = mc²·√(1 − u²/c²)`, or with the rest energy
/// subtracted `mc²·(√(1 − u²/c²) − 1)`.
pub fn boosted_min_rel(u: f64, m: f64, c: f64, subtract_rest_energy: bool) -> Result<f64> {
    check_mass(m)?;
    check_boost(u, c)?;
    let beta2 = (u / c).powi(2);
    let root = (1.0 - beta2).sqrt();
    Ok(if subtract_rest_energy {
        -m * c * c * beta2 / (1.0 + root)
    } else {
        m * c * c * root
    })
}

/// `min_p [ω(p) + u·p]` by golden-section search on a bracket grown until
/// it encloses the minimizer.
pub fn boosted_min_rel_numeric(u: f64, m: f64, c: f64) -> Result<f64> {
    check_mass(m)?;
    check_boost(u, c)?;
    let f = |p: f64| dispersion_rel(p, m, c) + u * p;
    let slope = |p: f64| p * c * c / dispersion_rel(p, m, c) + u;
    let mut half = m * c;
    while slope(-half) >= 0.0 || slope(half) <= 0.0 {
        half *= 2.0;
        if !half.is_finite() {
            return Err(Error::Solver("minimizer bracket diverged".into()));
        }
    }
    let (mut a, mut b) = (-half, half);
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..300 {
        if (b - a).abs() <= 1e-14 * half {
            break;
        }
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    Ok(f(0.5 * (a + b)).min(f1).min(f2))
}

/// `n·min_p [p²/2m + u·p] = −n·m·u²/2`.
pub fn boosted_min_nr(u: f64, m: f64, n: u32) -> Result<f64> {
    check_mass(m)?;
    if n < 1 {
        return Err(Error::InvalidParameter {
            name: "n",
            value: n as f64,
            reason: "particle count must be at least one",
        });
    }
    Ok(-(n as f64) * m * u * u / 2.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Positivity {
    pub rel: bool,
    pub rel_subtracted: bool,
    pub nr: bool,
}

/// Boosted minima for `n` free particles; energies are `n`-particle totals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoostReport {
    pub u: f64,
    pub m: f64,
    pub c: f64,
    pub n: u32,
    pub min_rel: f64,
    pub min_rel_subtracted: f64,
    pub min_nr: f64,
    /// `arctan(1/c)`, the light-cone half-angle against the time axis.
    pub cone_half_angle: f64,
    pub positivity: Positivity,
}

pub fn contraction_report(u: f64, m: f64, c: f64, n: u32) -> Result<BoostReport> {
    let count = n as f64;
    let min_rel = count * boosted_min_rel(u, m, c, false)?;
    let min_rel_subtracted = count * boosted_min_rel(u, m, c, true)?;
    let min_nr = boosted_min_nr(u, m, n)?;
    Ok(BoostReport {
        u,
        m,
        c,
        n,
        min_rel,
        min_rel_subtracted,
        min_nr,
        cone_half_angle: c.recip().atan(),
        positivity: Positivity {
            rel: min_rel >= 0.0,
            rel_subtracted: min_rel_subtracted >= 0.0,
            nr: min_nr >= 0.0,
        },
    })
}
