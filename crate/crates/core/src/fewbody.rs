//! Exact diagonalization of the Bose–Hubbard Hamiltonian
//!
//! ```text
//! H = −t·Σ_⟨ij⟩ (b†ᵢ bⱼ + b†ⱼ bᵢ) + (U/2)·Σᵢ nᵢ(nᵢ − 1)
//! ```
//!
//! in fixed-n sectors of small hypercubic lattices, and the free-fermion
//! excitation branch of the hard-core gas on a ring.

use std::collections::BTreeSet;
use std::f64::consts::PI;

use nalgebra::{DMatrix, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Default cap on the sector dimension.
pub const DEFAULT_BASIS_CAP: usize = 500_000;

/// Occupation-number basis of one particle-number sector, in lexicographic
/// order of the occupation vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct FockBasis {
    pub n: usize,
    pub sites: usize,
    occupations: Vec<u8>,
    // completions[s][r]: ways to place r particles on s sites
    completions: Vec<Vec<usize>>,
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `C(n + sites − 1, n)`.
pub fn sector_dimension(n: usize, sites: usize) -> u128 {
    binomial((n + sites - 1) as u128, n as u128)
}

/// Enumerate the `n`-boson sector on `sites` sites.
pub fn build_basis(n: usize, sites: usize) -> Result<FockBasis> {
    build_basis_with_cap(n, sites, DEFAULT_BASIS_CAP)
}

pub fn build_basis_with_cap(n: usize, sites: usize, cap: usize) -> Result<FockBasis> {
    if n < 1 || n > u8::MAX as usize {
        return Err(Error::InvalidParameter {
            name: "n",
            value: n as f64,
            reason: "particle number must lie in 1..=255",
        });
    }
    if sites < 2 {
        return Err(Error::InvalidParameter {
            name: "sites",
            value: sites as f64,
            reason: "need at least two sites",
        });
    }
    let required = sector_dimension(n, sites);
    if required > cap as u128 {
        return Err(Error::BasisTooLarge { required, cap });
    }
    let dim = required as usize;
    let mut completions = vec![vec![0usize; n + 1]; sites + 1];
    completions[0][0] = 1;
    for s in 1..=sites {
        for r in 0..=n {
            completions[s][r] = sector_dimension_small(r, s);
        }
    }

    let mut occupations = Vec::with_capacity(dim * sites);
    let mut v = vec![0u8; sites];
    v[sites - 1] = n as u8;
    loop {
        occupations.extend_from_slice(&v);
        if !next_lexicographic(&mut v) {
            break;
        }
    }
    debug_assert_eq!(occupations.len(), dim * sites);
    Ok(FockBasis {
        n,
        sites,
        occupations,
        completions,
    })
}

fn sector_dimension_small(r: usize, s: usize) -> usize {
    if r == 0 {
        1
    } else {
        binomial((r + s - 1) as u128, r as u128) as usize
    }
}

/// Successor among vectors with the same sum, ascending lexicographic.
fn next_lexicographic(v: &mut [u8]) -> bool {
    let len = v.len();
    // Rightmost i < len − 1 with particles to its right.
    let mut suffix = v[len - 1] as u32;
    let mut i = len - 1;
    loop {
        if i == 0 {
            return false;
        }
        i -= 1;
        if suffix > 0 {
            break;
        }
        suffix += v[i] as u32;
    }
    v[i] += 1;
    for x in v[i + 1..].iter_mut() {
        *x = 0;
    }
    v[len - 1] = (suffix - 1) as u8;
    true
}

impl FockBasis {
    pub fn dim(&self) -> usize {
        self.occupations.len() / self.sites
    }

    pub fn state(&self, index: usize) -> &[u8] {
        &self.occupations[index * self.sites..(index + 1) * self.sites]
    }

    /// Position of an occupation vector in the basis.
    pub fn index_of(&self, v: &[u8]) -> Option<usize> {
        if v.len() != self.sites || v.iter().map(|&x| x as usize).sum::<usize>() != self.n {
            return None;
        }
        let mut rank = 0usize;
        let mut remaining = self.n;
        for (i, &vi) in v.iter().enumerate() {
            let sites_after = self.sites - i - 1;
            for a in 0..vi as usize {
                rank += self.completions[sites_after][remaining - a];
            }
            remaining -= vi as usize;
        }
        Some(rank)
    }
}

/// Hypercubic lattice geometry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeGeometry {
    pub dim: usize,
    pub l: usize,
    pub periodic: bool,
}

impl LatticeGeometry {
    pub fn chain(l: usize, periodic: bool) -> Self {
        LatticeGeometry { dim: 1, l, periodic }
    }

    pub fn sites(&self) -> usize {
        self.l.pow(self.dim as u32)
    }

    /// Undirected nearest-neighbour bonds `(i, j)` with `i < j`, deduplicated.
    pub fn bonds(&self) -> Vec<(usize, usize)> {
        let mut set = BTreeSet::new();
        let sites = self.sites();
        for site in 0..sites {
            let mut stride = 1;
            for _ in 0..self.dim {
                let coord = (site / stride) % self.l;
                let neighbour = if coord + 1 < self.l {
                    Some(site + stride)
                } else if self.periodic {
                    Some(site + stride - self.l * stride)
                } else {
                    None
                };
                if let Some(j) = neighbour {
                    if j != site {
                        set.insert((site.min(j), site.max(j)));
                    }
                }
                stride *= self.l;
            }
        }
        set.into_iter().collect()
    }
}

/// Bose–Hubbard operator on one sector, applied matrix-free.
#[derive(Debug, Clone)]
pub struct BoseHubbard {
    pub basis: FockBasis,
    pub bonds: Vec<(usize, usize)>,
    pub t: f64,
    pub u: f64,
}

impl BoseHubbard {
    pub fn new(n: usize, lattice: LatticeGeometry, t: f64, u: f64) -> Result<Self> {
        if !(t > 0.0 && t.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "t",
                value: t,
                reason: "hopping must be finite and positive",
            });
        }
        if !u.is_finite() {
            return Err(Error::InvalidParameter {
                name: "U",
                value: u,
                reason: "on-site coupling must be finite",
            });
        }
        if lattice.dim < 1 || lattice.l < 1 {
            return Err(Error::InvalidParameter {
                name: "L",
                value: lattice.l as f64,
                reason: "lattice must have at least one site per axis",
            });
        }
        let basis = build_basis(n, lattice.sites())?;
        Ok(BoseHubbard {
            basis,
            bonds: lattice.bonds(),
            t,
            u,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    fn diagonal(&self, v: &[u8]) -> f64 {
        0.5 * self.u * v.iter().map(|&x| (x as f64) * (x as f64 - 1.0)).sum::<f64>()
    }

    /// `y = H·x`.
    pub fn apply(&self, x: &[f64], y: &mut [f64]) {
        let mut work = vec![0u8; self.basis.sites];
        for idx in 0..self.dim() {
            let v = self.basis.state(idx);
            let mut acc = self.diagonal(v) * x[idx];
            for &(i, j) in &self.bonds {
                for (from, to) in [(i, j), (j, i)] {
                    if v[from] == 0 {
                        continue;
                    }
                    work.copy_from_slice(v);
                    let amp = -self.t * ((v[from] as f64) * (v[to] as f64 + 1.0)).sqrt();
                    work[from] -= 1;
                    work[to] += 1;
                    let target = self.basis.index_of(&work).expect("hop stays in sector");
                    acc += amp * x[target];
                }
            }
            y[idx] = acc;
        }
    }

    /// Dense matrix, for small sectors only.
    pub fn dense(&self) -> Result<DMatrix<f64>> {
        let dim = self.dim();
        if dim > 1000 {
            return Err(Error::BasisTooLarge {
                required: dim as u128,
                cap: 1000,
            });
        }
        let mut m = DMatrix::zeros(dim, dim);
        let mut e = vec![0.0; dim];
        let mut col = vec![0.0; dim];
        for c in 0..dim {
            e[c] = 1.0;
            self.apply(&e, &mut col);
            e[c] = 0.0;
            for r in 0..dim {
                m[(r, c)] = col[r];
            }
        }
        Ok(m)
    }

    pub fn rayleigh_quotient(&self, x: &[f64]) -> f64 {
        let mut y = vec![0.0; x.len()];
        self.apply(x, &mut y);
        dot(x, &y) / dot(x, x)
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Eigensolver controls.
#[derive(Debug, Clone, Copy)]
pub struct LanczosConfig {
    pub krylov_dim: usize,
    pub max_restarts: usize,
    /// Target for `‖Hv − E₀v‖` with `‖v‖ = 1`.
    pub tol: f64,
    pub seed: u64,
}

impl Default for LanczosConfig {
    fn default() -> Self {
        LanczosConfig {
            krylov_dim: 40,
            max_restarts: 500,
            tol: 1e-8,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EdResult {
    pub e0: f64,
    pub residual: f64,
    /// Total Lanczos steps.
    pub iterations: usize,
    pub n: usize,
    pub sites: usize,
    pub u: f64,
    pub t: f64,
}

/// Lowest eigenpair by restarted Lanczos with local reorthogonalization.
pub fn lowest_eigenpair(h: &BoseHubbard, cfg: &LanczosConfig) -> Result<(f64, Vec<f64>, f64, usize)> {
    let dim = h.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut v: Vec<f64> = (0..dim).map(|_| rng.gen_range(0.5..1.5)).collect();
    let nv = norm(&v);
    v.iter_mut().for_each(|x| *x /= nv);

    let m = cfg.krylov_dim.max(2).min(dim);
    let mut hv = vec![0.0; dim];
    let mut iterations = 0;
    let mut best = (f64::INFINITY, f64::INFINITY);
    for _ in 0..=cfg.max_restarts {
        let mut basis: Vec<Vec<f64>> = Vec::with_capacity(m);
        let mut alpha = Vec::with_capacity(m);
        let mut beta: Vec<f64> = Vec::with_capacity(m);
        basis.push(v.clone());
        for j in 0..m {
            h.apply(&basis[j], &mut hv);
            iterations += 1;
            let a = dot(&basis[j], &hv);
            let mut w = hv.clone();
            for _ in 0..2 {
                let cj = dot(&w, &basis[j]);
                w.iter_mut().zip(&basis[j]).for_each(|(x, b)| *x -= cj * b);
                if j > 0 {
                    let cp = dot(&w, &basis[j - 1]);
                    w.iter_mut().zip(&basis[j - 1]).for_each(|(x, b)| *x -= cp * b);
                }
            }
            alpha.push(a);
            let b = norm(&w);
            if j + 1 == m || b <= 1e-12 * a.abs().max(1.0) {
                break;
            }
            beta.push(b);
            w.iter_mut().for_each(|x| *x /= b);
            basis.push(w);
        }
        let k = alpha.len();
        let mut tri = DMatrix::zeros(k, k);
        for i in 0..k {
            tri[(i, i)] = alpha[i];
            if i + 1 < k {
                tri[(i, i + 1)] = beta[i];
                tri[(i + 1, i)] = beta[i];
            }
        }
        let eig = SymmetricEigen::new(tri);
        let (imin, _) = eig
            .eigenvalues
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(b.1))
            .expect("nonempty tridiagonal");
        let y = eig.eigenvectors.column(imin);
        let mut ritz = vec![0.0; dim];
        for (coef, q) in y.iter().zip(&basis) {
            ritz.iter_mut().zip(q).for_each(|(r, qi)| *r += coef * qi);
        }
        let nr = norm(&ritz);
        ritz.iter_mut().for_each(|x| *x /= nr);
        h.apply(&ritz, &mut hv);
        let e = dot(&ritz, &hv);
        let residual = norm(&hv.iter().zip(&ritz).map(|(a, b)| a - e * b).collect::<Vec<_>>());
        if residual < best.1 {
            best = (e, residual);
        }
        if residual < cfg.tol {
            return Ok((e, ritz, residual, iterations));
        }
        v = ritz;
    }
    Err(Error::Eigensolver {
        iterations,
        estimate: best.0,
        residual: best.1,
    })
}

/// Ground energy of `n` bosons on `lattice`.
pub fn ground_energy(n: usize, lattice: LatticeGeometry, t: f64, u: f64, cfg: &LanczosConfig) -> Result<EdResult> {
    let h = BoseHubbard::new(n, lattice, t, u)?;
    let (e0, _, residual, iterations) = lowest_eigenpair(&h, cfg)?;
    Ok(EdResult {
        e0,
        residual,
        iterations,
        n,
        sites: lattice.sites(),
        u,
        t,
    })
}

/// Hopping and on-site coupling representing a contact strength `g₀` on a
/// lattice of spacing `ε`: `t = σ/(2mε²)`, `U = g₀/ε^dim`.
pub fn hubbard_from_contact(g0: f64, eps: f64, dim: usize, m: f64, sigma: f64) -> (f64, f64) {
    (sigma / (2.0 * m * eps * eps), g0 / eps.powi(dim as i32))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanRow {
    pub n: usize,
    pub energy: f64,
    pub per_particle: f64,
    pub residual: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Verdict {
    /// `E_n ≥ −C·n` over the scan.
    Stable { c: f64 },
    /// `E_n/n` strictly decreasing across the scan.
    UnstableSignature,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StabilityScan {
    pub rows: Vec<ScanRow>,
    pub verdict: Verdict,
}

/// Ground energies for each particle number and the collapse verdict.
pub fn stability_scan(
    n_list: &[usize],
    lattice: LatticeGeometry,
    t: f64,
    u: f64,
    cfg: &LanczosConfig,
) -> Result<StabilityScan> {
    if n_list.is_empty() {
        return Err(Error::Domain("empty particle-number list".into()));
    }
    for &n in n_list {
        let required = sector_dimension(n, lattice.sites());
        if required > DEFAULT_BASIS_CAP as u128 {
            return Err(Error::BasisTooLarge {
                required,
                cap: DEFAULT_BASIS_CAP,
            });
        }
    }
    let rows = n_list
        .iter()
        .map(|&n| {
            let r = ground_energy(n, lattice, t, u, cfg)?;
            Ok(ScanRow {
                n,
                energy: r.e0,
                per_particle: r.e0 / n as f64,
                residual: r.residual,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(StabilityScan {
        verdict: verdict_for(&rows),
        rows,
    })
}

/// Verdict from scan rows ordered by increasing `n`.
pub fn verdict_for(rows: &[ScanRow]) -> Verdict {
    let decreasing = rows.len() >= 2 && rows.windows(2).all(|w| w[1].per_particle < w[0].per_particle);
    if decreasing {
        Verdict::UnstableSignature
    } else {
        let min = rows.iter().map(|r| r.per_particle).fold(f64::INFINITY, f64::min);
        Verdict::Stable { c: (-min).max(0.0) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TgExcitation {
    pub delta_e: f64,
    pub p: f64,
    pub k_fermi: f64,
    pub density: f64,
}

/// Largest momentum index accepted by [`tg_excitation`], in units of `2π/L`.
pub fn tg_window(n: usize) -> i64 {
    4 * n as i64
}

/// Particle branch of the hard-core gas at `p = 2πj/L` (units `2m = 1`),
/// by enumerating single particle-hole excitations of the free-fermion
/// Fermi sea and keeping the highest.
pub fn tg_excitation(n: usize, l: f64, j: i64) -> Result<TgExcitation> {
    if n % 2 == 0 || n == 0 {
        return Err(Error::Domain(format!("N = {n} must be odd for a symmetric Fermi sea")));
    }
    if !(l > 0.0 && l.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "L",
            value: l,
            reason: "ring length must be finite and positive",
        });
    }
    if j < 1 || j > tg_window(n) {
        return Err(Error::Domain(format!(
            "momentum index j = {j} outside the enumeration window 1..={}",
            tg_window(n)
        )));
    }
    let half = (n as i64 - 1) / 2;
    let unit = 2.0 * PI / l;
    let energy = |set: &[i64]| set.iter().map(|&q| (unit * q as f64).powi(2)).sum::<f64>();
    let sea: Vec<i64> = (-half..=half).collect();
    let e_ground = energy(&sea);
    let mut best: Option<f64> = None;
    for (slot, &hole) in sea.iter().enumerate() {
        let particle = hole + j;
        if sea.contains(&particle) {
            continue;
        }
        let mut excited = sea.clone();
        excited[slot] = particle;
        let de = energy(&excited) - e_ground;
        best = Some(best.map_or(de, |b: f64| b.max(de)));
    }
    let delta_e = best.ok_or_else(|| Error::Domain(format!("no particle-hole pair at j = {j}")))?;
    Ok(TgExcitation {
        delta_e,
        p: unit * j as f64,
        k_fermi: PI * (n as f64 - 1.0) / l,
        density: n as f64 / l,
    })
}
