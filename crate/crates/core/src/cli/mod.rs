//! Command-line frontend: each subcommand is a pure function from a
//! [`RunConfig`] to a table.

pub mod config;
pub mod table;

use std::f64::consts::PI;

pub use config::{parse_config, Format, RunConfig};
pub use table::{emit_table, render_table, Row};

use crate::cutoff::{self, LoopGeometry};
use crate::error::{Error, Result};
use crate::fewbody::{self, LanczosConfig, LatticeGeometry, Verdict};
use crate::lattice::{self, LatticeSpec};
use crate::params::{cutoff_independent_log_slope, PhysParams};
use crate::passivity;
use crate::squarewell::{self, WellNormalization, WellSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Scatter,
    Bound,
    Regcompare,
    Edscan,
    Passivity,
}

/// `n` points from `lo` to `hi`, equally spaced in `ln x`.
pub fn geometric_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..n)
            .map(|i| {
                if i + 1 == n {
                    hi
                } else {
                    lo * (hi / lo).powf(i as f64 / (n - 1) as f64)
                }
            })
            .collect(),
    }
}

fn geometry(cfg: &RunConfig) -> LoopGeometry {
    match cfg.text("geometry") {
        "disk_asymptotic" => LoopGeometry::DiskAsymptotic,
        "square" => LoopGeometry::Square,
        _ => LoopGeometry::Disk,
    }
}

fn model(cfg: &RunConfig, kappa: f64) -> Result<PhysParams> {
    let (m_sq, lambda0, c, mu) = (cfg.f64("m_sq"), cfg.f64("lambda0"), cfg.f64("c"), cfg.f64("mu"));
    match cfg.text("case") {
        "i" => PhysParams::case_i(m_sq, lambda0, c, kappa, mu),
        _ => {
            let c_log = cfg.opt_f64("c_log").unwrap_or_else(|| cutoff_independent_log_slope(lambda0));
            PhysParams::case_ii(m_sq, lambda0, c, kappa, mu, c_log, cfg.f64("kappa_ref"))
        }
    }
}

fn nonzero_count(cfg: &RunConfig, key: &str) -> Result<usize> {
    match cfg.usize(key) {
        0 => Err(Error::ConfigValidation(format!("`{key}` must be at least 1"))),
        n => Ok(n),
    }
}

/// Run one subcommand.
pub fn run(command: Command, cfg: &RunConfig) -> Result<Vec<Row>> {
    match command {
        Command::Scatter => scatter(cfg),
        Command::Bound => bound(cfg),
        Command::Regcompare => regcompare(cfg),
        Command::Edscan => edscan(cfg),
        Command::Passivity => boost(cfg),
    }
}

fn scatter(cfg: &RunConfig) -> Result<Vec<Row>> {
    let params = model(cfg, cfg.cutoff())?;
    if cfg.text("sweep") == "kappa" {
        let k = cfg.f64("k");
        let grid = geometric_grid(cfg.f64("kappa_min"), cfg.f64("kappa_max"), nonzero_count(cfg, "kappa_points")?);
        grid.into_iter()
            .map(|kappa| {
                let g0 = params.with_cutoff(kappa)?.bare_coupling()?;
                let t = cutoff::t_amplitude_bare(k, g0, kappa, cfg.f64("m"), geometry(cfg))?;
                Ok(vec![
                    ("kappa", kappa),
                    ("g0", g0),
                    ("reT", t.value.re),
                    ("imT", t.value.im),
                    ("absT_logkappa", t.value.norm() * kappa.ln()),
                ])
            })
            .collect()
    } else {
        let grid = geometric_grid(cfg.f64("k_min"), cfg.f64("k_max"), nonzero_count(cfg, "k_points")?);
        grid.into_iter()
            .map(|k| {
                let t = cutoff::t_amplitude_renormalized(k, params.g, params.mu)?;
                let f = cutoff::angular_amplitude(k, &t)?;
                Ok(vec![
                    ("k", k),
                    ("reT", t.value.re),
                    ("imT", t.value.im),
                    ("delta", cutoff::s_wave_phase_shift(k, params.g, params.mu)?),
                    ("ref", f.re),
                    ("imf", f.im),
                    ("unitarity", t.unitarity_defect()),
                ])
            })
            .collect()
    }
}

fn bound(cfg: &RunConfig) -> Result<Vec<Row>> {
    let mu = cfg.f64("mu");
    geometric_grid(cfg.f64("g_min"), cfg.f64("g_max"), nonzero_count(cfg, "g_points")?)
        .into_iter()
        .map(|g| {
            let b = cutoff::bound_state_energy(g, mu)?;
            Ok(vec![
                ("g", g),
                ("B", b.binding),
                ("residual", b.residual),
                ("B_root", cutoff::bound_state_from_denominator(g, mu)?),
            ])
        })
        .collect()
}

fn regcompare(cfg: &RunConfig) -> Result<Vec<Row>> {
    let m = cfg.f64("m");
    let eps_max = cfg.f64("eps_max");
    let norm = match cfg.text("well_norm") {
        "literal" => WellNormalization::Literal,
        _ => WellNormalization::UnitIntegral,
    };
    let params = model(cfg, PI / eps_max)?;
    let frozen = params.bare_coupling()?;
    let mut grid = geometric_grid(cfg.f64("eps_min"), eps_max, nonzero_count(cfg, "eps_points")?);
    grid.reverse();
    grid.into_iter()
        .map(|eps| {
            let kappa = PI / eps;
            let g0 = if cfg.flag("running") {
                params.with_cutoff(kappa)?.bare_coupling()?
            } else {
                frozen
            };
            let (b_sharp, b_well) = if g0 < 0.0 {
                (
                    cutoff::cutoff_bound_state(g0, kappa, m, geometry(cfg))?.binding,
                    squarewell::ground_state(&WellSpec::with_normalization(eps, g0, m, norm)?)?.binding,
                )
            } else {
                (f64::NAN, f64::NAN)
            };
            let b_lat = lattice::lattice_bound_state(g0, &LatticeSpec::new(eps, 2, cfg.f64("sigma"))?)?
                .map_or(f64::NAN, |b| b.binding);
            Ok(vec![
                ("eps", eps),
                ("kappa", kappa),
                ("g0", g0),
                ("B_sharp", b_sharp),
                ("B_well", b_well),
                ("B_lattice", b_lat),
                ("ratio_well", b_well / b_sharp),
                ("ratio_lattice", b_lat / b_sharp),
            ])
        })
        .collect()
}

fn edscan(cfg: &RunConfig) -> Result<Vec<Row>> {
    if cfg.text("mode") == "tg" {
        let n = cfg.usize("tg_n");
        let l = cfg.f64("tg_l");
        return (1..=cfg.usize("tg_j_max") as i64)
            .map(|j| {
                let x = fewbody::tg_excitation(n, l, j)?;
                let identity = x.p * x.p + 2.0 * x.k_fermi * x.p;
                let thermo = x.p * x.p + 2.0 * PI * x.density * x.p;
                Ok(vec![
                    ("j", j as f64),
                    ("p", x.p),
                    ("dE", x.delta_e),
                    ("identity_dev", x.delta_e - identity),
                    ("thermo_dev", thermo - x.delta_e),
                    ("finite_size", 2.0 * PI * x.density * x.p / n as f64),
                ])
            })
            .collect();
    }
    let lattice = LatticeGeometry {
        dim: nonzero_count(cfg, "dim")?,
        l: nonzero_count(cfg, "L")?,
        periodic: cfg.flag("periodic"),
    };
    let lanczos = LanczosConfig {
        seed: cfg.u64("seed"),
        ..LanczosConfig::default()
    };
    let ns: Vec<usize> = (1..=nonzero_count(cfg, "n_max")?).collect();
    let scan = fewbody::stability_scan(&ns, lattice, cfg.f64("t"), cfg.f64("U"), &lanczos)?;
    let (unstable, c) = match scan.verdict {
        Verdict::UnstableSignature => (1.0, f64::NAN),
        Verdict::Stable { c } => (0.0, c),
    };
    Ok(scan
        .rows
        .iter()
        .map(|r| {
            vec![
                ("n", r.n as f64),
                ("E", r.energy),
                ("E_per_n", r.per_particle),
                ("residual", r.residual),
                ("unstable_signature", unstable),
                ("C", c),
            ]
        })
        .collect())
}

fn boost(cfg: &RunConfig) -> Result<Vec<Row>> {
    let (m, c) = (cfg.f64("m"), cfg.f64("c"));
    let n = u32::try_from(nonzero_count(cfg, "n")?)
        .map_err(|_| Error::ConfigValidation("`n` is too large".into()))?;
    let points = nonzero_count(cfg, "u_points")?;
    let u_max = cfg.f64("u_max") * c;
    (0..points)
        .map(|i| {
            let u = if points == 1 { u_max } else { u_max * i as f64 / (points - 1) as f64 };
            let r = passivity::contraction_report(u, m, c, n)?;
            Ok(vec![
                ("u", u),
                ("min_rel", r.min_rel),
                ("min_rel_numeric", n as f64 * passivity::boosted_min_rel_numeric(u, m, c)?),
                ("min_rel_subtracted", r.min_rel_subtracted),
                ("min_nr", r.min_nr),
                ("cone_half_angle", r.cone_half_angle),
                ("rel_positive", r.positivity.rel as u8 as f64),
                ("nr_positive", r.positivity.nr as u8 as f64),
            ])
        })
        .collect()
}
