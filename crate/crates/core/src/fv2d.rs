//! Dimensionally split GRP scheme on a uniform Cartesian grid.
//!
//! Both sweeps run the one-dimensional machinery of [`crate::fv1d`]; the
//! y-sweep exchanges the roles of x and y through `Cons::swap_xy`.

use crate::error::{Error, Result};
use crate::fv1d::{gauss_average, BoundaryCondition, Grid1D, Line, SchemeConfig};
use crate::par::Exec;
use crate::potential::Potential;
use crate::state::{Cons, Prim};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid2D {
    pub x: Grid1D,
    pub y: Grid1D,
}

impl Grid2D {
    pub fn new(x_range: (f64, f64), y_range: (f64, f64), nx: usize, ny: usize) -> Result<Self> {
        Ok(Grid2D { x: Grid1D::new(x_range.0, x_range.1, nx)?, y: Grid1D::new(y_range.0, y_range.1, ny)? })
    }

    pub fn nx(&self) -> usize {
        self.x.n
    }

    pub fn ny(&self) -> usize {
        self.y.n
    }

    /// Row-major index, `x` fastest.
    pub fn idx(&self, i: usize, k: usize) -> usize {
        k * self.x.n + i
    }

    pub fn transposed(&self) -> Grid2D {
        Grid2D { x: self.y, y: self.x }
    }
}

/// Order of the split operators within one step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SplitOrder {
    /// `Lx(dt/2) Ly(dt) Lx(dt/2)`.
    #[default]
    Xyx,
    /// `Ly(dt/2) Lx(dt) Ly(dt/2)`.
    Yxy,
}

/// Physics options of a 2D run beyond the scheme itself.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Options2D {
    /// Absorption coefficient of the `E11` source; zero disables it.
    pub vt: f64,
    /// Whether `W_y` drives the y-sweep.
    pub y_source: bool,
    pub order: SplitOrder,
    /// Periodic instead of outflow boundaries.
    pub periodic: bool,
}

impl Default for Options2D {
    fn default() -> Self {
        Options2D { vt: 0.0, y_source: true, order: SplitOrder::Xyx, periodic: false }
    }
}

#[derive(Clone, Debug)]
pub struct Solution2D {
    pub grid: Grid2D,
    /// Cell averages in row-major order.
    pub u: Vec<Cons>,
    pub t: f64,
    pub steps: usize,
}

impl Solution2D {
    /// Cell averages of `f` by a 3x3 Gauss rule.
    pub fn project<F>(grid: Grid2D, f: F) -> Result<Self>
    where
        F: Fn(f64, f64) -> Prim + Sync,
    {
        let (dx, dy) = (grid.x.dx(), grid.y.dx());
        let u = Exec::best().map_range(grid.nx() * grid.ny(), |m| {
            let (i, k) = (m % grid.nx(), m / grid.nx());
            let (xc, yc) = (grid.x.center(i as isize), grid.y.center(k as isize));
            let avg = gauss_average(|y| gauss_average(|x| f(x, y).to_cons().to_array(), xc, dx), yc, dy);
            Cons::from_array(avg)
        });
        for c in &u {
            c.to_prim()?;
        }
        Ok(Solution2D { grid, u, t: 0.0, steps: 0 })
    }

    pub fn at(&self, i: usize, k: usize) -> Prim {
        self.u[self.grid.idx(i, k)].to_prim_unchecked()
    }

    /// The same field seen with x and y exchanged.
    pub fn transposed_swapped(&self) -> Solution2D {
        let g = self.grid.transposed();
        let mut u = Vec::with_capacity(self.u.len());
        for k in 0..g.ny() {
            for i in 0..g.nx() {
                u.push(self.u[self.grid.idx(k, i)].swap_xy());
            }
        }
        Solution2D { grid: g, u, t: self.t, steps: self.steps }
    }
}

/// `C / (max(|u1| + c1) / dx + max(|u2| + c2) / dy)`.
pub fn cfl_dt_2d(sol: &Solution2D, cfl: f64) -> f64 {
    let (mut lx, mut ly) = (0.0f64, 0.0f64);
    for c in &sol.u {
        let v = c.to_prim_unchecked();
        lx = lx.max(v.max_speed_x());
        ly = ly.max(v.max_speed_y());
    }
    cfl / (lx / sol.grid.x.dx() + ly / sol.grid.y.dx())
}

/// Advance every row by `dt` with the x-direction scheme. `grad(x, y, t)`
/// is the potential gradient along x.
#[allow(clippy::too_many_arguments)]
fn sweep_rows<G>(
    u: &mut [Cons],
    grid: &Grid2D,
    bc: &BoundaryCondition,
    scheme: &SchemeConfig,
    axis: char,
    t: f64,
    dt: f64,
    grad: &G,
) -> Result<()>
where
    G: Fn(f64, f64, f64) -> f64 + Sync,
{
    let nx = grid.nx();
    let line = Line { grid: grid.x, bc, limiter: scheme.limiter, exec: Exec::Sequential };
    let rows: Vec<Result<Vec<Cons>>> = scheme.exec.map_range(grid.ny(), |k| {
        let row = &u[k * nx..(k + 1) * nx];
        let y = grid.y.center(k as isize);
        let slopes = line.slopes(row, None, t);
        let wx = |x: f64, t: f64| grad(x, y, t);
        line.advance(row, &slopes, t, dt, &wx)
            .map(|r| r.0)
            .map_err(|e| Error::Sweep { axis, line: k, source: Box::new(e) })
    });
    for (k, r) in rows.into_iter().enumerate() {
        u[k * nx..(k + 1) * nx].copy_from_slice(&r?);
    }
    Ok(())
}

fn transpose_swap(u: &[Cons], nx: usize, ny: usize) -> Vec<Cons> {
    let mut out = Vec::with_capacity(u.len());
    for i in 0..nx {
        for k in 0..ny {
            out.push(u[k * nx + i].swap_xy());
        }
    }
    out
}

fn sweep_x<P: Potential + ?Sized>(
    u: &mut [Cons],
    grid: &Grid2D,
    bc: &BoundaryCondition,
    scheme: &SchemeConfig,
    pot: &P,
    t: f64,
    dt: f64,
) -> Result<()> {
    sweep_rows(u, grid, bc, scheme, 'x', t, dt, &|x, y, t| pot.grad(x, y, t).0)
}

#[allow(clippy::too_many_arguments)]
fn sweep_y<P: Potential + ?Sized>(
    u: &mut [Cons],
    grid: &Grid2D,
    bc: &BoundaryCondition,
    scheme: &SchemeConfig,
    pot: &P,
    opts: &Options2D,
    t: f64,
    dt: f64,
) -> Result<()> {
    let (nx, ny) = (grid.nx(), grid.ny());
    let mut w = transpose_swap(u, nx, ny);
    let gt = grid.transposed();
    let y_source = opts.y_source;
    sweep_rows(&mut w, &gt, bc, scheme, 'y', t, dt, &|y, x, t| if y_source { pot.grad(x, y, t).1 } else { 0.0 })?;
    u.copy_from_slice(&transpose_swap(&w, ny, nx));
    Ok(())
}

/// `E11 += dt vT rho W` in every cell.
pub fn iba_source<P: Potential + ?Sized>(sol: &mut Solution2D, vt: f64, pot: &P, dt: f64) {
    if vt == 0.0 {
        return;
    }
    let g = sol.grid;
    let t = sol.t;
    for k in 0..g.ny() {
        let y = g.y.center(k as isize);
        for i in 0..g.nx() {
            let c = &mut sol.u[g.idx(i, k)];
            c.e11 += dt * vt * c.rho * pot.value(g.x.center(i as isize), y, t);
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn split_step<P: Potential + ?Sized>(
    u: &mut [Cons],
    grid: &Grid2D,
    bc: &BoundaryCondition,
    scheme: &SchemeConfig,
    pot: &P,
    opts: &Options2D,
    t: f64,
    dt: f64,
) -> Result<()> {
    let h = 0.5 * dt;
    match opts.order {
        SplitOrder::Xyx => {
            sweep_x(u, grid, bc, scheme, pot, t, h)?;
            sweep_y(u, grid, bc, scheme, pot, opts, t, dt)?;
            sweep_x(u, grid, bc, scheme, pot, t + h, h)
        }
        SplitOrder::Yxy => {
            sweep_y(u, grid, bc, scheme, pot, opts, t, h)?;
            sweep_x(u, grid, bc, scheme, pot, t, dt)?;
            sweep_y(u, grid, bc, scheme, pot, opts, t + h, h)
        }
    }
}

/// One Strang step of at most `t_stop - t`, with the IBA source applied at
/// the end. Failed attempts are retried with half the step.
pub fn strang_step<P: Potential + ?Sized>(
    sol: &mut Solution2D,
    pot: &P,
    scheme: &SchemeConfig,
    opts: &Options2D,
    t_stop: f64,
) -> Result<f64> {
    let bc = if opts.periodic { BoundaryCondition::Periodic } else { BoundaryCondition::Outflow };
    let mut dt = cfl_dt_2d(sol, scheme.cfl).min(t_stop - sol.t);
    let mut attempt = 0;
    loop {
        let mut u = sol.u.clone();
        match split_step(&mut u, &sol.grid, &bc, scheme, pot, opts, sol.t, dt) {
            Ok(()) => {
                sol.u = u;
                iba_source(sol, opts.vt, pot, dt);
                sol.t = if sol.t + dt >= t_stop { t_stop } else { sol.t + dt };
                sol.steps += 1;
                return Ok(dt);
            }
            Err(e) if attempt < scheme.max_retries => {
                attempt += 1;
                log::warn!("2D step {} at t={:e} failed ({e}); retrying with dt={:e}", sol.steps, sol.t, 0.5 * dt);
                dt *= 0.5;
            }
            Err(e) => return Err(Error::Step { step: sol.steps, time: sol.t, source: Box::new(e) }),
        }
    }
}

pub fn run_2d<P: Potential + ?Sized>(sol: &mut Solution2D, pot: &P, scheme: &SchemeConfig, opts: &Options2D, t_end: f64) -> Result<()> {
    while sol.t < t_end {
        strang_step(sol, pot, scheme, opts, t_end)?;
    }
    Ok(())
}
