//! Command-line driver for the ten-moment GRP solver.

mod report;

use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use log::info;
use tmgrp::config::{LimiterKind, OutputFormat, RunConfig};
use tmgrp::convergence::{converge, format_table, table_csv};
use tmgrp::driver::{run_case, scheme_for};
use tmgrp::grp::{resolve, GrpInput};
use tmgrp::par::Exec;
use tmgrp::problems::{find, registry};
use tmgrp::{Prim, Vec6};

#[derive(Parser)]
#[command(name = "tmgrp", version, about = "Ten-moment Gaussian closure GRP solver")]
struct Cli {
    /// Worker threads for the data-parallel sweeps.
    #[arg(long, global = true, env = "TMGRP_THREADS")]
    threads: Option<usize>,
    /// Run every sweep on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a registered case and write snapshots.
    Run(RunArgs),
    /// Grid-refinement study of a case with an exact solution.
    Converge(ConvergeArgs),
    /// Exact Riemann solution for two primitive states.
    Riemann {
        /// Left state rho,u1,u2,p11,p12,p22.
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        /// Right state rho,u1,u2,p11,p12,p22.
        #[arg(long, allow_hyphen_values = true)]
        right: String,
    },
    /// Interface value and time derivative of a generalized Riemann problem.
    Grp {
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
        /// Left primitive slope.
        #[arg(long, allow_hyphen_values = true, default_value = "0,0,0,0,0,0")]
        dleft: String,
        /// Right primitive slope.
        #[arg(long, allow_hyphen_values = true, default_value = "0,0,0,0,0,0")]
        dright: String,
        /// Potential gradient at the interface.
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
        wx: f64,
    },
    /// List the registered cases.
    ListCases,
}

#[derive(Args)]
struct RunArgs {
    /// Flat key = value file; flags override its entries.
    #[arg(long)]
    config: Option<PathBuf>,
    #[command(flatten)]
    opts: CaseOpts,
    #[arg(long)]
    ny: Option<usize>,
    #[arg(long)]
    t_end: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    format: Option<OutputFormat>,
    /// Extra equispaced snapshots before the final one.
    #[arg(long)]
    snapshots: Option<usize>,
    /// IBA coefficient.
    #[arg(long)]
    vt: Option<f64>,
}

#[derive(Args)]
struct CaseOpts {
    #[arg(long)]
    case: Option<String>,
    #[arg(long)]
    nx: Option<usize>,
    #[arg(long)]
    cfl: Option<f64>,
    #[arg(long)]
    limiter: Option<LimiterKind>,
    #[arg(long)]
    theta: Option<f64>,
}

#[derive(Args)]
struct ConvergeArgs {
    #[command(flatten)]
    opts: CaseOpts,
    /// Comma-separated cell counts.
    #[arg(long, default_value = "10,20,40,80,160,320,640")]
    levels: String,
    /// Write the table as CSV here as well.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Variables to print (all when empty).
    #[arg(long, value_delimiter = ',')]
    vars: Vec<String>,
}

impl CaseOpts {
    fn to_config(&self) -> RunConfig {
        RunConfig {
            case: self.case.clone().unwrap_or_default(),
            nx: self.nx,
            cfl: self.cfl,
            limiter: self.limiter,
            theta: self.theta,
            ..Default::default()
        }
    }
}

fn parse_vec(s: &str) -> Result<Vec6> {
    let vals: Vec<f64> = s.split(',').map(|t| t.trim().parse::<f64>()).collect::<std::result::Result<_, _>>().with_context(|| format!("cannot parse '{s}'"))?;
    let Ok(v) = <Vec6>::try_from(vals.as_slice()) else {
        bail!("expected six comma-separated numbers, got {}", vals.len());
    };
    Ok(v)
}

fn parse_state(s: &str) -> Result<Prim> {
    Ok(Prim::from_array(parse_vec(s)?))
}

fn cmd_run(args: &RunArgs, exec: Exec) -> Result<()> {
    let mut cfg = match &args.config {
        Some(p) => RunConfig::parse(&fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?)?,
        None => RunConfig::default(),
    };
    let mut flags = args.opts.to_config();
    flags.ny = args.ny;
    flags.t_end = args.t_end;
    flags.out = args.out.clone();
    flags.vt = args.vt;
    if let Some(f) = args.format {
        flags.format = f;
    }
    if let Some(k) = args.snapshots {
        flags.snapshots = k;
    }
    cfg.merge(&flags);
    info!("configuration:\n{cfg}");
    let (_, summary) = run_case(&cfg, exec)?;
    println!("case {}: {} steps to t={:.6e} in {:.3}s", summary.case, summary.steps, summary.t, summary.wall.as_secs_f64());
    for f in &summary.files {
        println!("wrote {}", f.display());
    }
    Ok(())
}

fn cmd_converge(args: &ConvergeArgs, exec: Exec) -> Result<()> {
    let cfg = args.opts.to_config();
    cfg.validate()?;
    let spec = find(&cfg.case)?;
    let levels: Vec<usize> = args.levels.split(',').map(|t| t.trim().parse()).collect::<std::result::Result<_, _>>().context("bad --levels")?;
    let scheme = scheme_for(&cfg, &spec, exec);
    let table = converge(&spec, &levels, &scheme)?;
    let names = tmgrp::convergence::VAR_NAMES;
    let vars: Vec<usize> = if args.vars.is_empty() {
        (0..6).collect()
    } else {
        args.vars
            .iter()
            .map(|v| names.iter().position(|n| n == v).with_context(|| format!("unknown variable '{v}'")))
            .collect::<Result<_>>()?
    };
    print!("{}", format_table(&table, &vars));
    if let Some(p) = &args.out {
        fs::write(p, table_csv(&table)).with_context(|| format!("writing {}", p.display()))?;
        println!("wrote {}", p.display());
    }
    Ok(())
}

fn init_threads(threads: Option<usize>) -> Result<()> {
    #[cfg(feature = "parallel")]
    if let Some(n) = threads {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().context("configuring the thread pool")?;
    }
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
    Ok(())
}

fn main() -> Result<()> {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    init_threads(cli.threads)?;
    let exec = if cli.sequential { Exec::Sequential } else { Exec::best() };
    match &cli.command {
        Command::Run(args) => cmd_run(args, exec)?,
        Command::Converge(args) => cmd_converge(args, exec)?,
        Command::Riemann { left, right } => print!("{}", report::riemann_report(&parse_state(left)?, &parse_state(right)?)?),
        Command::Grp { left, right, dleft, dright, wx } => {
            let inp = GrpInput::new(parse_state(left)?, parse_state(right)?, parse_vec(dleft)?, parse_vec(dright)?, *wx);
            inp.vl.check()?;
            inp.vr.check()?;
            let r = resolve(&inp)?;
            print!("{}", report::grp_report(&inp, &r));
        }
        Command::ListCases => {
            for p in registry() {
                println!("{:<16}{}D  t_end={:<8} {}", p.name, p.dim, p.t_end, p.description);
            }
        }
    }
    Ok(())
}
