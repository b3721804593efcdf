//! CSV and legacy-VTK writers.

use std::io::Write;

use crate::error::Result;
use crate::fv1d::Solution1D;
use crate::fv2d::Solution2D;

pub const HEADER_1D: &str = "x,rho,u1,u2,p11,p12,p22";
pub const HEADER_2D: &str = "x,y,rho,u1,u2,p11,p12,p22";

/// Seventeen significant digits in scientific notation.
fn num(v: f64) -> String {
    format!("{v:.16e}")
}

fn row(vals: &[f64]) -> String {
    vals.iter().map(|&v| num(v)).collect::<Vec<_>>().join(",")
}

pub fn write_csv_1d<W: Write>(w: &mut W, sol: &Solution1D) -> Result<()> {
    writeln!(w, "{HEADER_1D}")?;
    for (j, c) in sol.u.iter().enumerate() {
        let v = c.to_prim_unchecked().to_array();
        let mut vals = vec![sol.grid.center(j as isize)];
        vals.extend_from_slice(&v);
        writeln!(w, "{}", row(&vals))?;
    }
    Ok(())
}

/// One row per cell, `y` outer and `x` inner.
pub fn write_csv_2d<W: Write>(w: &mut W, sol: &Solution2D) -> Result<()> {
    writeln!(w, "{HEADER_2D}")?;
    let g = sol.grid;
    for k in 0..g.ny() {
        let y = g.y.center(k as isize);
        for i in 0..g.nx() {
            let mut vals = vec![g.x.center(i as isize), y];
            vals.extend_from_slice(&sol.at(i, k).to_array());
            writeln!(w, "{}", row(&vals))?;
        }
    }
    Ok(())
}

/// Legacy ASCII structured-points file with one scalar per primitive
/// variable, sampled at cell centres.
pub fn write_vtk_2d<W: Write>(w: &mut W, sol: &Solution2D) -> Result<()> {
    let g = sol.grid;
    let (dx, dy) = (g.x.dx(), g.y.dx());
    writeln!(w, "# vtk DataFile Version 3.0")?;
    writeln!(w, "ten-moment solution t={}", num(sol.t))?;
    writeln!(w, "ASCII")?;
    writeln!(w, "DATASET STRUCTURED_POINTS")?;
    writeln!(w, "DIMENSIONS {} {} 1", g.nx(), g.ny())?;
    writeln!(w, "ORIGIN {} {} 0", num(g.x.center(0)), num(g.y.center(0)))?;
    writeln!(w, "SPACING {} {} 1", num(dx), num(dy))?;
    writeln!(w, "POINT_DATA {}", g.nx() * g.ny())?;
    let prims: Vec<_> = sol.u.iter().map(|c| c.to_prim_unchecked().to_array()).collect();
    for (k, name) in ["rho", "u1", "u2", "p11", "p12", "p22"].iter().enumerate() {
        writeln!(w, "SCALARS {name} double 1")?;
        writeln!(w, "LOOKUP_TABLE default")?;
        for p in &prims {
            writeln!(w, "{}", num(p[k]))?;
        }
    }
    Ok(())
}
