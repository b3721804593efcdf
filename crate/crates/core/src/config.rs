//! Flat `key = value` run configuration.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::reconstruction::Limiter;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Vtk,
}

impl FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "vtk" => Ok(OutputFormat::Vtk),
            _ => Err(Error::Config(format!("unknown format '{s}'"))),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Vtk => "vtk",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum LimiterKind {
    #[default]
    VanLeer,
    Minmod,
}

impl FromStr for LimiterKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "vanleer" | "van-leer" => Ok(LimiterKind::VanLeer),
            "minmod" => Ok(LimiterKind::Minmod),
            _ => Err(Error::Config(format!("unknown limiter '{s}'"))),
        }
    }
}

impl fmt::Display for LimiterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LimiterKind::VanLeer => "vanleer",
            LimiterKind::Minmod => "minmod",
        })
    }
}

/// Everything a single run needs besides the problem definition.
/// Unset options fall back to the problem defaults.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct RunConfig {
    pub case: String,
    pub nx: Option<usize>,
    pub ny: Option<usize>,
    pub cfl: Option<f64>,
    pub limiter: Option<LimiterKind>,
    pub theta: Option<f64>,
    pub t_end: Option<f64>,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub snapshots: usize,
    pub vt: Option<f64>,
}

pub const DEFAULT_CFL: f64 = 0.45;
pub const DEFAULT_THETA: f64 = 1.5;

fn parse_num<T: FromStr>(key: &str, v: &str) -> Result<T> {
    v.parse().map_err(|_| Error::Config(format!("bad value '{v}' for '{key}'")))
}

impl RunConfig {
    /// Parse `key = value` lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = RunConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected key = value", lineno + 1)))?;
            cfg.set(k.trim(), v.trim().trim_matches('"'))?;
        }
        Ok(cfg)
    }

    pub fn set(&mut self, key: &str, v: &str) -> Result<()> {
        match key {
            "case" => self.case = v.to_string(),
            "nx" => self.nx = Some(parse_num(key, v)?),
            "ny" => self.ny = Some(parse_num(key, v)?),
            "cfl" => self.cfl = Some(parse_num(key, v)?),
            "limiter" => self.limiter = Some(v.parse()?),
            "theta" => self.theta = Some(parse_num(key, v)?),
            "t_end" | "t-end" => self.t_end = Some(parse_num(key, v)?),
            "format" => self.format = v.parse()?,
            "out" => self.out = Some(PathBuf::from(v)),
            "snapshots" => self.snapshots = parse_num(key, v)?,
            "vt" => self.vt = Some(parse_num(key, v)?),
            _ => return Err(Error::Config(format!("unknown key '{key}'"))),
        }
        Ok(())
    }

    /// Overlay every option set in `other`.
    pub fn merge(&mut self, other: &RunConfig) {
        if !other.case.is_empty() {
            self.case = other.case.clone();
        }
        macro_rules! take {
            ($($f:ident),*) => {$(if other.$f.is_some() { self.$f = other.$f.clone(); })*};
        }
        take!(nx, ny, cfl, limiter, theta, t_end, out, vt);
        if other.format != OutputFormat::default() {
            self.format = other.format;
        }
        if other.snapshots != 0 {
            self.snapshots = other.snapshots;
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.case.is_empty() {
            return Err(Error::Config("no case given".into()));
        }
        for n in [self.nx, self.ny].into_iter().flatten() {
            if n < 3 {
                return Err(Error::Config(format!("need at least 3 cells, got {n}")));
            }
        }
        if let Some(th) = self.theta {
            if !(1.0..2.0).contains(&th) {
                return Err(Error::Config(format!("theta must lie in [1, 2), got {th}")));
            }
        }
        if let Some(c) = self.cfl {
            if !(c > 0.0 && c <= 1.0) {
                return Err(Error::Config(format!("cfl must lie in (0, 1], got {c}")));
            }
        }
        if let Some(vt) = self.vt {
            if !(vt >= 0.0) {
                return Err(Error::Config(format!("vt must be non-negative, got {vt}")));
            }
        }
        Ok(())
    }

    /// The limiter requested, or `default` when unset.
    pub fn limiter_or(&self, default: Limiter) -> Limiter {
        match (self.limiter, default) {
            (None, Limiter::Minmod { theta }) => Limiter::Minmod { theta: self.theta.unwrap_or(theta) },
            (None, l) => l,
            (Some(LimiterKind::VanLeer), _) => Limiter::VanLeer,
            (Some(LimiterKind::Minmod), d) => {
                let fallback = if let Limiter::Minmod { theta } = d { theta } else { DEFAULT_THETA };
                Limiter::Minmod { theta: self.theta.unwrap_or(fallback) }
            }
        }
    }
}

impl fmt::Display for RunConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "case = {}", self.case)?;
        if let Some(v) = self.nx {
            writeln!(f, "nx = {v}")?;
        }
        if let Some(v) = self.ny {
            writeln!(f, "ny = {v}")?;
        }
        if let Some(v) = self.cfl {
            writeln!(f, "cfl = {v:?}")?;
        }
        if let Some(v) = self.limiter {
            writeln!(f, "limiter = {v}")?;
        }
        if let Some(v) = self.theta {
            writeln!(f, "theta = {v:?}")?;
        }
        if let Some(v) = self.t_end {
            writeln!(f, "t_end = {v:?}")?;
        }
        writeln!(f, "format = {}", self.format)?;
        if let Some(v) = &self.out {
            writeln!(f, "out = {}", v.display())?;
        }
        writeln!(f, "snapshots = {}", self.snapshots)?;
        if let Some(v) = self.vt {
            writeln!(f, "vt = {v:?}")?;
        }
        Ok(())
    }
}
