//! Grid-refinement study against an exact solution.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::fv1d::{error_norms, order, run, Grid1D, Norms, SchemeConfig, Solution1D};
use crate::problems::ProblemSpec;

pub const VAR_NAMES: [&str; 6] = ["rho", "u1", "u2", "p11", "p12", "p22"];

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Level {
    pub n: usize,
    pub norms: [Norms; 6],
}

/// Orders `(l1, l2, linf)` of every variable between two levels.
pub fn orders(coarse: &Level, fine: &Level) -> [(f64, f64, f64); 6] {
    std::array::from_fn(|k| {
        let (a, b) = (coarse.norms[k], fine.norms[k]);
        (order(a.l1, b.l1), order(a.l2, b.l2), order(a.linf, b.linf))
    })
}

/// Run `spec` to its final time on every level.
pub fn converge(spec: &ProblemSpec, levels: &[usize], scheme: &SchemeConfig) -> Result<Vec<Level>> {
    let exact = spec.exact.ok_or_else(|| Error::Config(format!("case '{}' has no exact solution", spec.name)))?;
    if spec.dim != 1 {
        return Err(Error::Config("convergence studies are one-dimensional".into()));
    }
    let bc = spec.boundary_condition();
    levels
        .iter()
        .map(|&n| {
            let grid = Grid1D::new(spec.x_range.0, spec.x_range.1, n)?;
            let mut sol = Solution1D::project(grid, |x| spec.initial_1d(x), &bc, scheme)?;
            run(&mut sol, &bc, &spec.potential, scheme, spec.t_end)?;
            let t = sol.t;
            Ok(Level { n, norms: error_norms(&sol, |x| exact(x, t)) })
        })
        .collect()
}

/// Aligned text table of the chosen variables.
pub fn format_table(levels: &[Level], vars: &[usize]) -> String {
    let mut s = String::new();
    for &k in vars {
        let _ = writeln!(s, "{}", VAR_NAMES[k]);
        let _ = writeln!(s, "{:>6}  {:>11} {:>6}  {:>11} {:>6}  {:>11} {:>6}", "N", "l1", "order", "l2", "order", "linf", "order");
        for (i, lv) in levels.iter().enumerate() {
            let n = lv.norms[k];
            let o = if i > 0 { Some(orders(&levels[i - 1], lv)[k]) } else { None };
            let f = |x: Option<f64>| x.map_or("--".to_string(), |v| format!("{v:.2}"));
            let _ = writeln!(
                s,
                "{:>6}  {:>11.4e} {:>6}  {:>11.4e} {:>6}  {:>11.4e} {:>6}",
                lv.n,
                n.l1,
                f(o.map(|o| o.0)),
                n.l2,
                f(o.map(|o| o.1)),
                n.linf,
                f(o.map(|o| o.2))
            );
        }
    }
    s
}

/// One CSV row per level and variable.
pub fn table_csv(levels: &[Level]) -> String {
    let mut s = String::from("var,n,l1,l1_order,l2,l2_order,linf,linf_order\n");
    for k in 0..6 {
        for (i, lv) in levels.iter().enumerate() {
            let n = lv.norms[k];
            let o = if i > 0 { Some(orders(&levels[i - 1], lv)[k]) } else { None };
            let f = |x: Option<f64>| x.map_or(String::new(), |v| format!("{v:.16e}"));
            let _ = writeln!(
                s,
                "{},{},{:.16e},{},{:.16e},{},{:.16e},{}",
                VAR_NAMES[k],
                lv.n,
                n.l1,
                f(o.map(|o| o.0)),
                n.l2,
                f(o.map(|o| o.1)),
                n.linf,
                f(o.map(|o| o.2))
            );
        }
    }
    s
}
