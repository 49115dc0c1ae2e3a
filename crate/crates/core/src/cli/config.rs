//! `key = value` run configuration with per-key defaults and overrides.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Positive,
    NonNegative,
    Real,
    Count,
    Flag,
    Choice(&'static [&'static str]),
}

struct KeySpec {
    name: &'static str,
    kind: Kind,
    /// `None`: unset unless supplied.
    default: Option<&'static str>,
    help: &'static str,
}

const GEOMETRIES: &[&str] = &["disk", "disk_asymptotic", "square"];

const KEYS: &[KeySpec] = &[
    KeySpec { name: "seed", kind: Kind::Count, default: Some("0"), help: "eigensolver start-vector seed" },
    KeySpec { name: "case", kind: Kind::Choice(&["i", "ii"]), default: Some("ii"), help: "mass renormalization: i fixed, ii running" },
    KeySpec { name: "m", kind: Kind::Positive, default: Some("1"), help: "particle mass" },
    KeySpec { name: "c", kind: Kind::Positive, default: Some("1"), help: "speed of light" },
    KeySpec { name: "m_sq", kind: Kind::Positive, default: Some("1"), help: "renormalized mass squared" },
    KeySpec { name: "lambda0", kind: Kind::Positive, default: Some("1.0471975511965976"), help: "bare quartic coupling" },
    KeySpec { name: "c_log", kind: Kind::Positive, default: None, help: "counterterm slope; default 3·lambda0/π" },
    KeySpec { name: "kappa_ref", kind: Kind::Positive, default: Some("1"), help: "counterterm reference cutoff" },
    KeySpec { name: "mu", kind: Kind::Positive, default: Some("1"), help: "renormalization point" },
    KeySpec { name: "kappa", kind: Kind::Positive, default: None, help: "momentum cutoff; default π/eps or 100" },
    KeySpec { name: "eps", kind: Kind::Positive, default: None, help: "length scale; default π/kappa" },
    KeySpec { name: "geometry", kind: Kind::Choice(GEOMETRIES), default: Some("disk"), help: "cutoff region" },
    KeySpec { name: "sweep", kind: Kind::Choice(&["k", "kappa"]), default: Some("k"), help: "scatter sweep variable" },
    KeySpec { name: "k", kind: Kind::Positive, default: Some("1"), help: "momentum for cutoff sweeps" },
    KeySpec { name: "k_min", kind: Kind::Positive, default: Some("0.01"), help: "" },
    KeySpec { name: "k_max", kind: Kind::Positive, default: Some("10"), help: "" },
    KeySpec { name: "k_points", kind: Kind::Count, default: Some("25"), help: "" },
    KeySpec { name: "kappa_min", kind: Kind::Positive, default: Some("10"), help: "" },
    KeySpec { name: "kappa_max", kind: Kind::Positive, default: Some("1e8"), help: "" },
    KeySpec { name: "kappa_points", kind: Kind::Count, default: Some("15"), help: "" },
    KeySpec { name: "g_min", kind: Kind::Positive, default: Some("0.5"), help: "" },
    KeySpec { name: "g_max", kind: Kind::Positive, default: Some("10"), help: "" },
    KeySpec { name: "g_points", kind: Kind::Count, default: Some("20"), help: "" },
    KeySpec { name: "eps_max", kind: Kind::Positive, default: Some("1e-2"), help: "" },
    KeySpec { name: "eps_min", kind: Kind::Positive, default: Some("1e-4"), help: "" },
    KeySpec { name: "eps_points", kind: Kind::Count, default: Some("5"), help: "" },
    KeySpec { name: "running", kind: Kind::Flag, default: Some("true"), help: "run the bare coupling with the cutoff" },
    KeySpec { name: "well_norm", kind: Kind::Choice(&["literal", "unit"]), default: Some("unit"), help: "square-well depth normalization" },
    KeySpec { name: "sigma", kind: Kind::Positive, default: Some("1"), help: "lattice dispersion factor" },
    KeySpec { name: "mode", kind: Kind::Choice(&["stability", "tg"]), default: Some("stability"), help: "edscan table" },
    KeySpec { name: "dim", kind: Kind::Count, default: Some("1"), help: "lattice dimension" },
    KeySpec { name: "L", kind: Kind::Count, default: Some("8"), help: "sites per axis" },
    KeySpec { name: "periodic", kind: Kind::Flag, default: Some("true"), help: "" },
    KeySpec { name: "t", kind: Kind::Positive, default: Some("1"), help: "hopping" },
    KeySpec { name: "U", kind: Kind::Real, default: Some("-2"), help: "on-site coupling" },
    KeySpec { name: "n_max", kind: Kind::Count, default: Some("4"), help: "largest particle number" },
    KeySpec { name: "tg_n", kind: Kind::Count, default: Some("41"), help: "hard-core particle number (odd)" },
    KeySpec { name: "tg_l", kind: Kind::Positive, default: Some("41"), help: "ring length" },
    KeySpec { name: "tg_j_max", kind: Kind::Count, default: Some("8"), help: "" },
    KeySpec { name: "u_max", kind: Kind::NonNegative, default: Some("0.99"), help: "largest boost, in units of c" },
    KeySpec { name: "u_points", kind: Kind::Count, default: Some("12"), help: "" },
    KeySpec { name: "n", kind: Kind::Count, default: Some("1"), help: "particle count" },
];

fn spec_for(name: &str) -> Option<&'static KeySpec> {
    KEYS.iter().find(|k| k.name == name)
}

/// Known keys with their defaults and descriptions.
pub fn documented_keys() -> Vec<(&'static str, Option<&'static str>, &'static str)> {
    KEYS.iter().map(|k| (k.name, k.default, k.help)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::ConfigValidation(format!("unknown format `{other}`; expected csv or json"))),
        }
    }
}

/// Validated key–value configuration. Values are stored as text and parsed
/// on access; every stored value has already passed its type check.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RunConfig {
    values: BTreeMap<&'static str, String>,
    pub format: Format,
    pub out: Option<String>,
}

fn check_value(spec: &KeySpec, raw: &str) -> std::result::Result<(), String> {
    let number = || raw.parse::<f64>().map_err(|_| format!("`{}` expects a number, got `{raw}`", spec.name));
    match spec.kind {
        Kind::Positive => {
            let v = number()?;
            if !(v > 0.0 && v.is_finite()) {
                return Err(format!("`{}` must be finite and positive, got {raw}", spec.name));
            }
        }
        Kind::NonNegative => {
            let v = number()?;
            if !(v >= 0.0 && v.is_finite()) {
                return Err(format!("`{}` must be finite and non-negative, got {raw}", spec.name));
            }
        }
        Kind::Real => {
            if !number()?.is_finite() {
                return Err(format!("`{}` must be finite, got {raw}", spec.name));
            }
        }
        Kind::Count => {
            raw.parse::<u64>()
                .map_err(|_| format!("`{}` expects a non-negative integer, got `{raw}`", spec.name))?;
        }
        Kind::Flag => {
            if raw != "true" && raw != "false" {
                return Err(format!("`{}` expects true or false, got `{raw}`", spec.name));
            }
        }
        Kind::Choice(options) => {
            if !options.contains(&raw) {
                return Err(format!("`{}` must be one of {options:?}, got `{raw}`", spec.name));
            }
        }
    }
    Ok(())
}

/// Parse `key = value` lines (`#` starts a comment), then apply overrides
/// given as `--key value` or `--key=value`.
pub fn parse_config(text: &str, overrides: &[String]) -> Result<RunConfig> {
    let mut cfg = RunConfig::default();
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| Error::ConfigParse {
            line: line_no,
            msg: format!("expected `key = value`, got `{line}`"),
        })?;
        let (key, value) = (key.trim(), value.trim());
        let spec = spec_for(key).ok_or_else(|| Error::ConfigParse {
            line: line_no,
            msg: format!("unknown key `{key}`"),
        })?;
        if value.is_empty() {
            return Err(Error::ConfigParse {
                line: line_no,
                msg: format!("missing value for `{key}`"),
            });
        }
        check_value(spec, value).map_err(|msg| Error::ConfigParse { line: line_no, msg })?;
        cfg.values.insert(spec.name, value.to_string());
    }

    let mut it = overrides.iter();
    while let Some(flag) = it.next() {
        let body = flag
            .strip_prefix("--")
            .ok_or_else(|| Error::ConfigValidation(format!("expected `--key value`, got `{flag}`")))?;
        let (key, value) = match body.split_once('=') {
            Some((k, v)) => (k.to_string(), v.to_string()),
            None => {
                let v = it
                    .next()
                    .ok_or_else(|| Error::ConfigValidation(format!("flag `--{body}` is missing its value")))?;
                (body.to_string(), v.clone())
            }
        };
        match key.as_str() {
            "out" => cfg.out = Some(value),
            "format" => cfg.format = value.parse()?,
            "config" => {
                return Err(Error::ConfigValidation("`--config` must precede per-key overrides".into()));
            }
            _ => {
                let spec = spec_for(&key)
                    .ok_or_else(|| Error::ConfigValidation(format!("unknown override `--{key}`")))?;
                check_value(spec, &value).map_err(Error::ConfigValidation)?;
                cfg.values.insert(spec.name, value);
            }
        }
    }
    cfg.validate()?;
    Ok(cfg)
}

impl RunConfig {
    fn validate(&self) -> Result<()> {
        if let (Some(kappa), Some(eps)) = (self.explicit_f64("kappa"), self.explicit_f64("eps")) {
            if (kappa * eps / PI - 1.0).abs() > 1e-12 {
                return Err(Error::ConfigValidation(format!(
                    "kappa = {kappa} and eps = {eps} conflict; expected kappa = π/eps"
                )));
            }
        }
        for (lo, hi) in [("k_min", "k_max"), ("kappa_min", "kappa_max"), ("g_min", "g_max"), ("eps_min", "eps_max")] {
            if self.f64(lo) > self.f64(hi) {
                return Err(Error::ConfigValidation(format!("`{lo}` exceeds `{hi}`")));
            }
        }
        if self.f64("u_max") >= 1.0 {
            return Err(Error::ConfigValidation("`u_max` must be below 1 (units of c)".into()));
        }
        Ok(())
    }

    fn raw(&self, key: &str) -> Option<&str> {
        self.values
            .get(key)
            .map(String::as_str)
            .or_else(|| spec_for(key).and_then(|s| s.default))
    }

    fn explicit_f64(&self, key: &str) -> Option<f64> {
        self.values.get(key).map(|v| v.parse().expect("validated number"))
    }

    /// Whether the key was set explicitly.
    pub fn is_set(&self, key: &str) -> bool {
        self.values.contains_key(key)
    }

    /// Numeric value; panics on an unknown key or a key without default.
    pub fn f64(&self, key: &str) -> f64 {
        self.raw(key)
            .unwrap_or_else(|| panic!("key `{key}` has no value"))
            .parse()
            .expect("validated number")
    }

    pub fn opt_f64(&self, key: &str) -> Option<f64> {
        self.raw(key).map(|v| v.parse().expect("validated number"))
    }

    pub fn usize(&self, key: &str) -> usize {
        self.raw(key)
            .unwrap_or_else(|| panic!("key `{key}` has no value"))
            .parse()
            .expect("validated integer")
    }

    pub fn u64(&self, key: &str) -> u64 {
        self.usize(key) as u64
    }

    pub fn flag(&self, key: &str) -> bool {
        self.raw(key) == Some("true")
    }

    pub fn text(&self, key: &str) -> &str {
        self.raw(key).unwrap_or_else(|| panic!("key `{key}` has no value"))
    }

    /// Cutoff from `kappa`, else `π/eps`, else 100.
    pub fn cutoff(&self) -> f64 {
        match (self.explicit_f64("kappa"), self.explicit_f64("eps")) {
            (Some(k), _) => k,
            (None, Some(e)) => PI / e,
            (None, None) => 100.0,
        }
    }
}
