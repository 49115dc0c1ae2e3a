//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Oracles are computed independently here.

use std::f64::consts::PI;
use std::process::{Command as Proc, ExitCode};
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nrl_core::cutoff::{self, LoopArg, LoopGeometry};
use nrl_core::fewbody::{self, LanczosConfig, LatticeGeometry, Verdict};
use nrl_core::lattice::{self, LatticeSpec};
use nrl_core::params::{self, cutoff_independent_log_slope, PhysParams};
use nrl_core::passivity;
use nrl_core::squarewell::{self, WellNormalization, WellSpec};

type Outcome = Result<(bool, String), String>;

fn criterion(id: u32, title: &str, budget: Option<Duration>, body: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let result = body();
    let elapsed = start.elapsed();
    let (ok, detail) = match result {
        Ok((ok, detail)) => (ok, detail),
        Err(e) => (false, format!("error: {e}")),
    };
    let in_time = budget.map_or(true, |b| elapsed <= b);
    let pass = ok && in_time;
    let budget_text = budget.map_or(String::new(), |b| format!(" / {:.0} s", b.as_secs_f64()));
    println!(
        "{} criterion {id:>2} {title} [{:.3} s{budget_text}]: {detail}{}",
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        if in_time { "" } else { " (over time budget)" }
    );
    pass
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn c1() -> Outcome {
    let kappa: f64 = 1e8;
    let t = cutoff::t_amplitude_bare(1.0, 1.0, kappa, 1.0, LoopGeometry::Disk).map_err(e)?;
    let scaled = t.value.norm() * kappa.ln();
    let ratio = scaled / PI;
    Ok((
        (0.98..=1.02).contains(&ratio),
        format!("|T|·ln κ = {scaled:.6} = π·{ratio:.6} at κ = 1e8 (window π·[0.98, 1.02])"),
    ))
}

fn c2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let k = 10f64.powf(rng.gen_range(-4.0..4.0));
        let mu = 10f64.powf(rng.gen_range(-3.0..3.0));
        let g = rng.gen_range(-10.0..10.0);
        let t = cutoff::t_amplitude_renormalized(k, g, mu).map_err(e)?;
        worst = worst.max((t.value.im + t.value.norm_sqr() / 2.0).abs());

        let kappa = k * 10f64.powf(rng.gen_range(0.01..8.0));
        let g0 = rng.gen_range(-10.0..10.0);
        let geometry = if rng.gen_bool(0.5) { LoopGeometry::Disk } else { LoopGeometry::DiskAsymptotic };
        let t = cutoff::t_amplitude_bare(k, g0, kappa, 1.0, geometry).map_err(e)?;
        worst = worst.max((t.value.im + t.value.norm_sqr() / 2.0).abs());
    }
    Ok((worst <= 1e-12, format!("max |Im T + |T|²/2| = {worst:.2e} over 2×1000 samples")))
}

fn c3() -> Outcome {
    let (g, mu) = (0.9, 1.0);
    let mut worst = 0.0f64;
    for i in 0..10 {
        let mu_new = 10f64.powf(-2.0 + 4.0 * i as f64 / 9.0);
        let g_new = cutoff::shift_renormalization_point(g, mu, mu_new).map_err(e)?;
        for j in 0..10 {
            let k = 10f64.powf(-3.0 + 6.0 * j as f64 / 9.0);
            let a = cutoff::t_amplitude_renormalized(k, g, mu).map_err(e)?;
            let b = cutoff::t_amplitude_renormalized(k, g_new, mu_new).map_err(e)?;
            worst = worst.max((a.value - b.value).norm());
        }
    }
    Ok((worst <= 1e-12, format!("max |ΔT| = {worst:.2e} on a 10×10 (μ, k) grid")))
}

fn c4() -> Outcome {
    let mu = 1.0;
    let mut worst_den = 0.0f64;
    let mut worst_rel = 0.0f64;
    for g in [0.5, 1.0, PI, 10.0] {
        let b = cutoff::bound_state_energy(g, mu).map_err(e)?.binding;
        worst_den = worst_den.max(cutoff::renormalized_denominator((2.0 * b).sqrt(), g, mu).abs());
        let root = cutoff::bound_state_from_denominator(g, mu).map_err(e)?;
        worst_rel = worst_rel.max((root / b - 1.0).abs());
    }
    Ok((
        worst_den <= 1e-12 && worst_rel <= 1e-10,
        format!("max |Re D(√2B)| = {worst_den:.2e}, max root rel. dev. = {worst_rel:.2e}"),
    ))
}

fn c5() -> Outcome {
    let z = LoopArg::Value(Complex64::new(1.0, 0.0));
    let mut offsets = Vec::new();
    let mut worst_err = 0.0f64;
    for kappa in [1e3, 1e4, 1e5] {
        let sq = cutoff::loop_integral(z, kappa, LoopGeometry::Square).map_err(e)?;
        let disk = cutoff::loop_integral(z, kappa, LoopGeometry::Disk).map_err(e)?;
        offsets.push((sq.value - disk.value).re);
        worst_err = worst_err.max(sq.error / sq.value.norm());
    }
    let spread = offsets.iter().cloned().fold(f64::MIN, f64::max) - offsets.iter().cloned().fold(f64::MAX, f64::min);
    // Corner of the square beyond the inscribed disk as z/κ² → 0:
    // (2/π²)·((π/4)·ln 2 − G/2), G Catalan's constant.
    let catalan = 0.915_965_594_177_219_015_054_603_514_932_384_110_774;
    let limit = 2.0 / (PI * PI) * (PI / 4.0 * 2f64.ln() - catalan / 2.0);
    let to_limit = (offsets[2] - limit).abs();
    Ok((
        spread <= 1e-3 && worst_err <= 1e-9 && to_limit <= 1e-6,
        format!(
            "offsets {:.9}, {:.9}, {:.9} (spread {spread:.1e}, analytic limit {limit:.9}); max rel. quadrature error {worst_err:.1e}",
            offsets[0], offsets[1], offsets[2]
        ),
    ))
}

fn c6() -> Outcome {
    let lambda0 = PI / 3.0;
    let params = PhysParams::case_ii(1.0, lambda0, 1.0, 10.0, 1.0, cutoff_independent_log_slope(lambda0), 1.0)
        .map_err(e)?;
    let eps_grid: Vec<f64> = (0..5).map(|i| 10f64.powf(-2.0 - 0.5 * i as f64)).collect();
    let g0_at = |eps: f64| -> Result<f64, String> {
        params.with_cutoff(PI / eps).map_err(e)?.bare_coupling().map_err(e)
    };
    let well_b = |eps: f64| -> Result<f64, String> {
        let w = WellSpec::with_normalization(eps, g0_at(eps)?, 1.0, WellNormalization::UnitIntegral).map_err(e)?;
        Ok(squarewell::ground_state(&w).map_err(e)?.binding)
    };
    let lattice_b = |eps: f64| -> Result<f64, String> {
        let spec = LatticeSpec::new(eps, 2, 1.0).map_err(e)?;
        lattice::lattice_bound_state(g0_at(eps)?, &spec)
            .map_err(e)?
            .map(|b| b.binding)
            .ok_or_else(|| "lattice coupling does not bind".to_string())
    };
    // Calibrate κ = c·π/ε once, at the coarsest spacing.
    let eps_ref = eps_grid[0];
    let calibrate = |b: f64| -> Result<f64, String> {
        Ok(cutoff::cutoff_for_binding(b, g0_at(eps_ref)?, 1.0, LoopGeometry::Disk).map_err(e)? * eps_ref / PI)
    };
    let c_well = calibrate(well_b(eps_ref)?)?;
    let c_lat = calibrate(lattice_b(eps_ref)?)?;
    let mut worst = 0.0f64;
    let mut raw = Vec::new();
    for &eps in &eps_grid {
        let g0 = g0_at(eps)?;
        let sharp = |c: f64| -> Result<f64, String> {
            Ok(cutoff::cutoff_bound_state(g0, c * PI / eps, 1.0, LoopGeometry::Disk).map_err(e)?.binding)
        };
        let (bw, bl) = (well_b(eps)?, lattice_b(eps)?);
        worst = worst.max((bw / sharp(c_well)? - 1.0).abs());
        worst = worst.max((bl / sharp(c_lat)? - 1.0).abs());
        raw.push(format!("{:.4}/{:.4}", bw / sharp(1.0)?, bl / sharp(1.0)?));
    }
    Ok((
        worst <= 0.2,
        format!(
            "ε ∈ [1e-4, 1e-2]: c_well = {c_well:.5}, c_lattice = {c_lat:.5}, max |B/B_sharp − 1| = {worst:.2e}; uncalibrated well/lattice ratios {}",
            raw.join(", ")
        ),
    ))
}

fn slope_for(sigma: f64) -> Result<f64, String> {
    let spec = LatticeSpec::new(1.0, 2, sigma).map_err(e)?;
    let pts: Vec<(f64, f64)> = (0..9)
        .map(|i| {
            let g = 0.1 + 0.05 * i as f64;
            let b = lattice::lattice_bound_state(-g, &spec).map_err(e)?.ok_or("no bound state")?;
            Ok((1.0 / g, b.binding.ln()))
        })
        .collect::<Result<_, String>>()?;
    let n = pts.len() as f64;
    let (sx, sy) = pts.iter().fold((0.0, 0.0), |a, p| (a.0 + p.0, a.1 + p.1));
    let (mx, my) = (sx / n, sy / n);
    let (sxy, sxx) = pts
        .iter()
        .fold((0.0, 0.0), |a, p| (a.0 + (p.0 - mx) * (p.1 - my), a.1 + (p.0 - mx).powi(2)));
    Ok(sxy / sxx)
}

fn c7() -> Outcome {
    // The exponent scales with the dispersion factor: −4π·(σ/2).
    let s2 = slope_for(2.0)?;
    let s1 = slope_for(1.0)?;
    let d2 = (s2 / (-4.0 * PI) - 1.0).abs();
    let d1 = (s1 / (-2.0 * PI) - 1.0).abs();
    Ok((
        d2 <= 0.05 && d1 <= 0.05,
        format!("σ = 2: slope {s2:.5} vs −4π (dev {d2:.1e}); σ = 1: slope {s1:.5} vs −2π (dev {d1:.1e})"),
    ))
}

fn c8() -> Outcome {
    let r = fewbody::ground_energy(2, LatticeGeometry::chain(2, false), 1.0, -4.0, &LanczosConfig::default())
        .map_err(e)?;
    let exact = -2.0 - 2.0 * 2f64.sqrt();
    let dev = (r.e0 - exact).abs();
    Ok((dev <= 1e-10, format!("E0 = {:.12}, −2 − 2√2 = {exact:.12}, dev {dev:.1e}", r.e0)))
}

fn c9() -> Outcome {
    let ring = LatticeGeometry::chain(8, true);
    let ns = [1, 2, 3, 4];
    let cfg = LanczosConfig::default();
    let att = fewbody::stability_scan(&ns, ring, 1.0, -2.0, &cfg).map_err(e)?;
    let rep = fewbody::stability_scan(&ns, ring, 1.0, 2.0, &cfg).map_err(e)?;
    let decreasing = att.rows.windows(2).all(|w| w[1].per_particle < w[0].per_particle);
    let bounded = rep.rows.iter().all(|r| r.energy >= -2.0 * r.n as f64);
    let per: Vec<String> = att.rows.iter().map(|r| format!("{:.5}", r.per_particle)).collect();
    Ok((
        decreasing && bounded && att.verdict == Verdict::UnstableSignature,
        format!(
            "U = −2: E_n/n = [{}] ({:?}); U = +2: E_n ≥ −2n {}",
            per.join(", "),
            att.verdict,
            if bounded { "holds" } else { "violated" }
        ),
    ))
}

fn c10() -> Outcome {
    let mut worst_id = 0.0f64;
    let mut worst_fs = 0.0f64;
    for (n, l) in [(3usize, 3.0), (41, 41.0)] {
        for j in 1..=fewbody::tg_window(n).min(20) {
            let x = fewbody::tg_excitation(n, l, j).map_err(e)?;
            let identity = x.p * x.p + 2.0 * x.k_fermi * x.p;
            worst_id = worst_id.max((x.delta_e - identity).abs() / identity.max(1.0));
            let thermo = x.p * x.p + 2.0 * PI * x.density * x.p.abs();
            let predicted = 2.0 * PI * x.density * x.p.abs() / n as f64;
            worst_fs = worst_fs.max(((thermo - x.delta_e).abs() - predicted).abs() / thermo.max(1.0));
        }
    }
    Ok((
        worst_id <= 1e-12 && worst_fs <= 1e-12,
        format!("max identity dev {worst_id:.1e}, max finite-size dev {worst_fs:.1e}"),
    ))
}

fn c11() -> Outcome {
    let exact = passivity::boosted_min_rel(0.6, 1.0, 1.0, false).map_err(e)?;
    let scan = passivity::boosted_min_rel_numeric(0.6, 1.0, 1.0).map_err(e)?;
    let nr = passivity::boosted_min_nr(0.6, 1.0, 10).map_err(e)?;
    // One ulp: the binary 0.6 squared lies just below 0.36.
    let nr_ok = (nr + 1.8).abs() <= 1.8 * f64::EPSILON;
    let mut all_nonneg = true;
    for i in 0..=99 {
        let u = 0.99 * i as f64 / 99.0;
        all_nonneg &= passivity::boosted_min_rel(u, 1.0, 1.0, false).map_err(e)? >= 0.0;
    }
    Ok((
        (exact - 0.8).abs() <= 1e-8 && (scan - 0.8).abs() <= 1e-8 && nr_ok && all_nonneg,
        format!("min_rel = {exact} (scan {scan:.12}), min_nr = {nr:?}, min_rel ≥ 0 on u ∈ [0, 0.99]: {all_nonneg}"),
    ))
}

fn c12() -> Outcome {
    let r = params::nr_expansion_remainder(1.0, 1.0, 100.0).map_err(e)?;
    let lead = -1.0 / (8.0 * 100.0f64.powi(2));
    let ratio = r / lead;
    let r2 = params::nr_expansion_remainder(1.0, 1.0, 200.0).map_err(e)?;
    let quarter = r2 / r;
    Ok((
        (ratio - 1.0).abs() <= 0.01 && (quarter / 0.25 - 1.0).abs() <= 0.01,
        format!("R/(−p⁴/8m³c²) = {ratio:.8}, R(2c)/R(c) = {quarter:.8}"),
    ))
}

fn c13() -> Outcome {
    let dir = tempfile::tempdir().map_err(e)?;
    let config = dir.path().join("run.cfg");
    std::fs::write(
        &config,
        "# determinism probe\nseed = 11\nk_points = 7\ng_points = 5\neps_points = 3\nn_max = 3\nL = 6\nu_points = 5\n",
    )
    .map_err(e)?;
    let bin = env!("CARGO_BIN_EXE_nrl");
    let mut identical = 0;
    let subcommands = ["scatter", "bound", "regcompare", "edscan", "passivity"];
    for sub in subcommands {
        for format in ["csv", "json"] {
            let mut outputs = Vec::new();
            for run in 0..2 {
                let out = dir.path().join(format!("{sub}-{run}.{format}"));
                let status = Proc::new(bin)
                    .args([sub, "--config"])
                    .arg(&config)
                    .arg("--out")
                    .arg(&out)
                    .args(["--format", format])
                    .status()
                    .map_err(e)?;
                if !status.success() {
                    return Err(format!("`nrl {sub}` exited with {status}"));
                }
                outputs.push(std::fs::read(&out).map_err(e)?);
            }
            if outputs[0] == outputs[1] && !outputs[0].is_empty() {
                identical += 1;
            }
        }
    }
    let total = subcommands.len() * 2;
    Ok((identical == total, format!("{identical}/{total} subcommand × format reruns byte-identical")))
}

fn main() -> ExitCode {
    let results = [
        criterion(1, "case-i triviality", secs(1), c1),
        criterion(2, "unitarity", secs(1), c2),
        criterion(3, "μ-invariance", secs(1), c3),
        criterion(4, "bound-state pole", secs(1), c4),
        criterion(5, "square vs disk loop", secs(10), c5),
        criterion(6, "regularization equivalence", secs(60), c6),
        criterion(7, "lattice weak-coupling exponent", secs(30), c7),
        criterion(8, "ED closed form", secs(1), c8),
        criterion(9, "stability signature", secs(60), c9),
        criterion(10, "hard-core excitation branch", secs(1), c10),
        criterion(11, "boost positivity", secs(1), c11),
        criterion(12, "dispersion expansion", secs(1), c12),
        criterion(13, "CLI determinism", None, c13),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
