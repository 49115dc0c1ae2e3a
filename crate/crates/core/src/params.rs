//! Model constants, the logarithmic mass-counterterm running, and the
//! relativistic dispersion with its non-relativistic expansion.
//!
//! Units: ħ = 1. Momenta and inverse lengths share units.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// How the bare mass is tied to the cutoff.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MassRenormalization {
    /// Case i: no counterterm, the bare mass equals the renormalized mass.
    Fixed,
    /// Case ii: the renormalized mass is held fixed and the bare mass runs as
    /// `m0² = m² − c_log·ln(κ/κ_ref)`.
    Running,
}

/// The single source of model constants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysParams {
    /// Bare mass squared. Negative past the crossover cutoff in case ii.
    pub m0_sq: f64,
    /// Bare quartic coupling, strictly positive.
    pub lambda0: f64,
    /// Renormalized (observed) mass squared.
    pub m_sq: f64,
    /// Speed of light.
    pub c: f64,
    /// Ultraviolet momentum cutoff.
    pub kappa: f64,
    /// Renormalization point.
    pub mu: f64,
    /// Renormalized contact coupling; infinite at the unitary point.
    pub g: f64,
    /// Counterterm slope.
    pub c_log: f64,
    /// Counterterm reference cutoff.
    pub kappa_ref: f64,
    pub mode: MassRenormalization,
}

fn positive(name: &'static str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            reason: "must be finite and strictly positive",
        })
    }
}

/// Counterterm slope that makes the renormalized coupling cutoff independent:
/// `δm²/ln κ → 3λ₀/π`.
pub fn cutoff_independent_log_slope(lambda0: f64) -> f64 {
    3.0 * lambda0 / PI
}

impl PhysParams {
    /// Case i: `m0² = m²` at every cutoff.
    pub fn case_i(m_sq: f64, lambda0: f64, c: f64, kappa: f64, mu: f64) -> Result<Self> {
        Self::build(m_sq, lambda0, c, kappa, mu, 0.0, 1.0, MassRenormalization::Fixed)
    }

    /// Case ii: `m²` fixed, bare mass running with slope `c_log`.
    #[allow(clippy::too_many_arguments)]
    pub fn case_ii(
        m_sq: f64,
        lambda0: f64,
        c: f64,
        kappa: f64,
        mu: f64,
        c_log: f64,
        kappa_ref: f64,
    ) -> Result<Self> {
        positive("c_log", c_log)?;
        positive("kappa_ref", kappa_ref)?;
        Self::build(
            m_sq,
            lambda0,
            c,
            kappa,
            mu,
            c_log,
            kappa_ref,
            MassRenormalization::Running,
        )
    }

    #[allow(clippy::too_many_arguments)]
    fn build(
        m_sq: f64,
        lambda0: f64,
        c: f64,
        kappa: f64,
        mu: f64,
        c_log: f64,
        kappa_ref: f64,
        mode: MassRenormalization,
    ) -> Result<Self> {
        positive("m_sq", m_sq)?;
        positive("lambda0", lambda0)?;
        positive("c", c)?;
        positive("kappa", kappa)?;
        positive("mu", mu)?;
        let m0_sq = match mode {
            MassRenormalization::Fixed => m_sq,
            MassRenormalization::Running => running_bare_mass(m_sq, c_log, kappa, kappa_ref)?,
        };
        let inv_g = m0_sq / (3.0 * lambda0) + (kappa / mu).ln() / PI;
        Ok(PhysParams {
            m0_sq,
            lambda0,
            m_sq,
            c,
            kappa,
            mu,
            g: 1.0 / inv_g,
            c_log,
            kappa_ref,
            mode,
        })
    }

    /// Same model at a different cutoff, re-running the bare mass if needed.
    pub fn with_cutoff(&self, kappa: f64) -> Result<Self> {
        Self::build(
            self.m_sq,
            self.lambda0,
            self.c,
            kappa,
            self.mu,
            self.c_log,
            self.kappa_ref,
            self.mode,
        )
    }

    /// Bare contact coupling `3λ₀/m₀²` at the current cutoff.
    pub fn bare_coupling(&self) -> Result<f64> {
        bare_coupling(self.lambda0, self.m0_sq)
    }

    /// Cutoff above which the running bare mass turns negative.
    pub fn crossover_cutoff(&self) -> Option<f64> {
        match self.mode {
            MassRenormalization::Fixed => None,
            MassRenormalization::Running => Some(self.kappa_ref * (self.m_sq / self.c_log).exp()),
        }
    }
}

/// Regularization of the contact interaction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RegScheme {
    SharpCutoff { kappa: f64 },
    SquareWell { eps: f64 },
    Lattice { eps: f64 },
}

impl RegScheme {
    pub fn validate(&self) -> Result<()> {
        match *self {
            RegScheme::SharpCutoff { kappa } => positive("kappa", kappa),
            RegScheme::SquareWell { eps } | RegScheme::Lattice { eps } => positive("eps", eps),
        }
    }

    /// Momentum cutoff, using `κ = π/ε` for the length-scale schemes.
    pub fn cutoff(&self) -> f64 {
        match *self {
            RegScheme::SharpCutoff { kappa } => kappa,
            RegScheme::SquareWell { eps } | RegScheme::Lattice { eps } => PI / eps,
        }
    }

    /// Length scale, using `ε = π/κ` for the sharp cutoff.
    pub fn length(&self) -> f64 {
        match *self {
            RegScheme::SharpCutoff { kappa } => PI / kappa,
            RegScheme::SquareWell { eps } | RegScheme::Lattice { eps } => eps,
        }
    }

    pub fn to_sharp_cutoff(&self) -> RegScheme {
        RegScheme::SharpCutoff {
            kappa: self.cutoff(),
        }
    }

    pub fn to_square_well(&self) -> RegScheme {
        RegScheme::SquareWell { eps: self.length() }
    }

    pub fn to_lattice(&self) -> RegScheme {
        RegScheme::Lattice { eps: self.length() }
    }
}

/// Dimensionless contact coupling `g₀ = 3λ₀/m₀²`.
pub fn bare_coupling(lambda0: f64, m0_sq: f64) -> Result<f64> {
    positive("lambda0", lambda0)?;
    if m0_sq == 0.0 {
        return Err(Error::DegenerateMass("bare mass squared is zero"));
    }
    Ok(3.0 * lambda0 / m0_sq)
}

/// Bare mass squared under the logarithmic counterterm,
/// `m0² = m² − c_log·ln(κ/κ_ref)`.
pub fn running_bare_mass(m_sq: f64, c_log: f64, kappa: f64, kappa_ref: f64) -> Result<f64> {
    positive("m_sq", m_sq)?;
    positive("c_log", c_log)?;
    positive("kappa", kappa)?;
    positive("kappa_ref", kappa_ref)?;
    Ok(m_sq - c_log * (kappa / kappa_ref).ln())
}

/// Relativistic one-particle energy `√(p²c² + m²c⁴)`.
pub fn dispersion_rel(p: f64, m: f64, c: f64) -> f64 {
    (p * c).hypot(m * c * c)
}

/// `ω(p) − mc² − p²/2m`, evaluated without cancellation.
///
/// With `x = p²/(m²c²)` and `s = √(1+x)` the remainder is exactly
/// `−mc²·x²/(2(1+s)²)`.
pub fn nr_expansion_remainder(p: f64, m: f64, c: f64) -> Result<f64> {
    if m == 0.0 {
        return Err(Error::DegenerateMass("expansion needs a nonzero mass"));
    }
    positive("m", m)?;
    positive("c", c)?;
    let x = (p / (m * c)).powi(2);
    let s = (1.0 + x).sqrt();
    Ok(-m * c * c * x * x / (2.0 * (1.0 + s).powi(2)))
}

/// Leading term of the remainder, `−p⁴/(8m³c²)`.
pub fn nr_leading_remainder(p: f64, m: f64, c: f64) -> f64 {
    -p.powi(4) / (8.0 * m.powi(3) * c * c)
}
