//! Run a registered case from a [`RunConfig`] and write its snapshots.

use std::fs::File;
use std::io::BufWriter;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use crate::config::{OutputFormat, RunConfig, DEFAULT_CFL};
use crate::error::{Error, Result};
use crate::fv1d::{self, Grid1D, SchemeConfig, Solution1D};
use crate::fv2d::{run_2d, Grid2D, Options2D, Solution2D};
use crate::io::{write_csv_1d, write_csv_2d, write_vtk_2d};
use crate::par::Exec;
use crate::problems::{find, BoundaryKind, ProblemSpec};

#[derive(Clone, Debug)]
pub enum Field {
    One(Solution1D),
    Two(Solution2D),
}

impl Field {
    pub fn steps(&self) -> usize {
        match self {
            Field::One(s) => s.steps,
            Field::Two(s) => s.steps,
        }
    }

    pub fn time(&self) -> f64 {
        match self {
            Field::One(s) => s.t,
            Field::Two(s) => s.t,
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunSummary {
    pub case: String,
    pub steps: usize,
    pub t: f64,
    pub wall: Duration,
    pub files: Vec<PathBuf>,
}

/// Scheme settings implied by a configuration for a problem.
pub fn scheme_for(cfg: &RunConfig, spec: &ProblemSpec, exec: Exec) -> SchemeConfig {
    SchemeConfig { limiter: cfg.limiter_or(spec.limiter), cfl: cfg.cfl.unwrap_or(DEFAULT_CFL), exec, ..Default::default() }
}

/// Output path of snapshot `i` out of `total` (the last one keeps the
/// plain name).
pub fn snapshot_path(base: &Path, i: usize, total: usize) -> PathBuf {
    if i + 1 == total {
        return base.to_path_buf();
    }
    let stem = base.file_stem().and_then(|s| s.to_str()).unwrap_or("out");
    let name = match base.extension().and_then(|s| s.to_str()) {
        Some(ext) => format!("{stem}_{i:04}.{ext}"),
        None => format!("{stem}_{i:04}"),
    };
    base.with_file_name(name)
}

fn write_field(field: &Field, path: &Path, format: OutputFormat) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    match (field, format) {
        (Field::One(s), OutputFormat::Csv) => write_csv_1d(&mut w, s),
        (Field::Two(s), OutputFormat::Csv) => write_csv_2d(&mut w, s),
        (Field::Two(s), OutputFormat::Vtk) => write_vtk_2d(&mut w, s),
        (Field::One(_), OutputFormat::Vtk) => Err(Error::Config("VTK output is only available in 2D".into())),
    }
}

/// Execute one configured run. Snapshots are written only when `cfg.out`
/// is set.
pub fn run_case(cfg: &RunConfig, exec: Exec) -> Result<(Field, RunSummary)> {
    cfg.validate()?;
    let spec = find(&cfg.case)?;
    let scheme = scheme_for(cfg, &spec, exec);
    let t_end = cfg.t_end.unwrap_or(spec.t_end);
    if spec.dim == 1 && cfg.format == OutputFormat::Vtk {
        return Err(Error::Config("VTK output is only available in 2D".into()));
    }
    let total = cfg.snapshots + 1;
    let times: Vec<f64> = (1..=total).map(|i| t_end * i as f64 / total as f64).collect();
    let start = Instant::now();
    let mut files = Vec::new();
    let mut emit = |field: &Field, i: usize| -> Result<()> {
        if let Some(base) = &cfg.out {
            let p = snapshot_path(base, i, total);
            write_field(field, &p, cfg.format)?;
            files.push(p);
        }
        Ok(())
    };
    let field = if spec.dim == 1 {
        let n = cfg.nx.unwrap_or(spec.default_n);
        let grid = Grid1D::new(spec.x_range.0, spec.x_range.1, n)?;
        let bc = spec.boundary_condition();
        let mut sol = Solution1D::project(grid, |x| spec.initial_1d(x), &bc, &scheme)?;
        for (i, &t) in times.iter().enumerate() {
            fv1d::run(&mut sol, &bc, &spec.potential, &scheme, t)?;
            emit(&Field::One(sol.clone()), i)?;
        }
        Field::One(sol)
    } else {
        let nx = cfg.nx.unwrap_or(spec.default_n);
        let ny = cfg.ny.unwrap_or(nx);
        let grid = Grid2D::new(spec.x_range, spec.y_range, nx, ny)?;
        let opts = Options2D {
            vt: cfg.vt.or(spec.vt).unwrap_or(0.0),
            y_source: spec.y_source,
            periodic: spec.boundary == BoundaryKind::Periodic,
            ..Default::default()
        };
        let mut sol = Solution2D::project(grid, spec.init)?;
        for (i, &t) in times.iter().enumerate() {
            run_2d(&mut sol, &spec.potential, &scheme, &opts, t)?;
            emit(&Field::Two(sol.clone()), i)?;
        }
        Field::Two(sol)
    };
    let summary = RunSummary { case: spec.name.to_string(), steps: field.steps(), t: field.time(), wall: start.elapsed(), files };
    Ok((field, summary))
}
