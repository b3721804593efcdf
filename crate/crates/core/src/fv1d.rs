//! Second-order GRP finite-volume scheme in one space dimension.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::grp::{self, GrpInput};
use crate::par::Exec;
use crate::potential::Potential;
use crate::reconstruction::{limited_slope, primitive_slopes, admissible_primitive_slope, Limiter};
use crate::state::{flux_x, source_x, Cons, Prim, Vec6};

/// Abscissae and weights of the three-point Gauss rule on `[-1/2, 1/2]`.
pub const GAUSS3: [(f64, f64); 3] = [
    (-0.387_298_334_620_741_7, 5.0 / 18.0),
    (0.0, 8.0 / 18.0),
    (0.387_298_334_620_741_7, 5.0 / 18.0),
];

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid1D {
    pub x_lo: f64,
    pub x_hi: f64,
    pub n: usize,
}

impl Grid1D {
    pub fn new(x_lo: f64, x_hi: f64, n: usize) -> Result<Self> {
        if n < 3 || !(x_hi > x_lo) {
            return Err(Error::Config(format!("bad grid [{x_lo}, {x_hi}] with {n} cells")));
        }
        Ok(Grid1D { x_lo, x_hi, n })
    }

    pub fn dx(&self) -> f64 {
        (self.x_hi - self.x_lo) / self.n as f64
    }

    /// Centre of cell `j`; negative or large `j` address ghost cells.
    pub fn center(&self, j: isize) -> f64 {
        self.x_lo + (j as f64 + 0.5) * self.dx()
    }

    /// Face `j`, the left face of cell `j`.
    pub fn face(&self, j: usize) -> f64 {
        self.x_lo + j as f64 * self.dx()
    }

    pub fn centers(&self) -> Vec<f64> {
        (0..self.n as isize).map(|j| self.center(j)).collect()
    }
}

/// Reference solution `(x, t) -> V`.
pub type ExactFn = Arc<dyn Fn(f64, f64) -> Prim + Send + Sync>;

#[derive(Clone)]
pub enum BoundaryCondition {
    Outflow,
    Periodic,
    /// Ghost cells hold cell averages of a reference solution.
    ExactDirichlet(ExactFn),
}

impl fmt::Debug for BoundaryCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryCondition::Outflow => write!(f, "Outflow"),
            BoundaryCondition::Periodic => write!(f, "Periodic"),
            BoundaryCondition::ExactDirichlet(_) => write!(f, "ExactDirichlet"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SchemeConfig {
    pub limiter: Limiter,
    pub cfl: f64,
    pub exec: Exec,
    /// Number of times a failed step is retried with half the time step.
    pub max_retries: usize,
}

impl Default for SchemeConfig {
    fn default() -> Self {
        SchemeConfig { limiter: Limiter::VanLeer, cfl: 0.45, exec: Exec::best(), max_retries: 5 }
    }
}

/// Cell average of `U(f(x))` over `[xc - dx/2, xc + dx/2]`.
pub fn gauss_average<F: Fn(f64) -> Vec6>(f: F, xc: f64, dx: f64) -> Vec6 {
    let mut acc = [0.0; 6];
    for (s, w) in GAUSS3 {
        let v = f(xc + s * dx);
        for k in 0..6 {
            acc[k] += w * v[k];
        }
    }
    acc
}

fn cons_average<F: Fn(f64) -> Prim>(f: &F, xc: f64, dx: f64) -> Cons {
    Cons::from_array(gauss_average(|x| f(x).to_cons().to_array(), xc, dx))
}

/// One line of cells with its geometry, as seen by a single sweep.
pub(crate) struct Line<'a> {
    pub grid: Grid1D,
    pub bc: &'a BoundaryCondition,
    pub limiter: Limiter,
    pub exec: Exec,
}

impl Line<'_> {
    /// Cells with one ghost on each side, and the primitive slopes of all of
    /// them.
    pub fn extend(&self, u: &[Cons], slopes: &[Vec6], t: f64) -> (Vec<Cons>, Vec<Vec6>) {
        let n = u.len();
        let dx = self.grid.dx();
        let mut ext = Vec::with_capacity(n + 2);
        let mut ds = Vec::with_capacity(n + 2);
        match self.bc {
            BoundaryCondition::Outflow => {
                ext.push(u[0]);
                ds.push(slopes[0]);
                ext.extend_from_slice(u);
                ds.extend_from_slice(slopes);
                ext.push(u[n - 1]);
                ds.push(slopes[n - 1]);
            }
            BoundaryCondition::Periodic => {
                ext.push(u[n - 1]);
                ds.push(slopes[n - 1]);
                ext.extend_from_slice(u);
                ds.extend_from_slice(slopes);
                ext.push(u[0]);
                ds.push(slopes[0]);
            }
            BoundaryCondition::ExactDirichlet(f) => {
                let g = |x: f64| f(x, t);
                let at = |j: isize| cons_average(&g, self.grid.center(j), dx);
                let n_i = n as isize;
                let (l2, l1, r1, r2) = (at(-2), at(-1), at(n_i), at(n_i + 1));
                let ghost_slope = |a: &Cons, b: &Cons, c: &Cons| {
                    let du = limited_slope(self.limiter, a, b, c, None, dx);
                    admissible_primitive_slope(&b.to_prim_unchecked(), &du, dx).0
                };
                ext.push(l1);
                ds.push(ghost_slope(&l2, &l1, &u[0]));
                ext.extend_from_slice(u);
                ds.extend_from_slice(slopes);
                ext.push(r1);
                ds.push(ghost_slope(&u[n - 1], &r1, &r2));
            }
        }
        (ext, ds)
    }

    /// Ghost-extended cells only, for slope limiting.
    fn extend_values(&self, u: &[Cons], t: f64) -> Vec<Cons> {
        let zero = vec![[0.0; 6]; u.len()];
        self.extend(u, &zero, t).0
    }

    /// Limited primitive slopes of `u`, using predicted face states when
    /// available.
    pub fn slopes(&self, u: &[Cons], mid: Option<&[Cons]>, t: f64) -> Vec<Vec6> {
        let ext = self.extend_values(u, t);
        primitive_slopes(self.limiter, &ext, mid, self.grid.dx(), self.exec).0
    }

    /// One conservative update of length `dt` from time `t`. `wx(x, t)` is
    /// the potential gradient along the line. Returns the new averages and
    /// the predicted states `U(V* + dt dV/dt)` at every face.
    pub fn advance<G>(&self, u: &[Cons], slopes: &[Vec6], t: f64, dt: f64, wx: &G) -> Result<(Vec<Cons>, Vec<Cons>)>
    where
        G: Fn(f64, f64) -> f64 + Sync,
    {
        let n = u.len();
        let dx = self.grid.dx();
        let (ext, ds) = self.extend(u, slopes, t);
        let t_half = t + 0.5 * dt;
        let faces: Vec<Result<(Vec6, Vec6, Cons)>> = self.exec.map_range(n + 1, |i| {
            let xf = self.grid.face(i);
            let vl = ext[i].to_prim_unchecked().add_scaled(&ds[i], 0.5 * dx);
            let vr = ext[i + 1].to_prim_unchecked().add_scaled(&ds[i + 1], -0.5 * dx);
            let inp = GrpInput::new(vl, vr, ds[i], ds[i + 1], wx(xf, t));
            let r = grp::resolve(&inp)?;
            let vm = r.midpoint(dt).check()?;
            let pred = r.v_interface.add_scaled(&r.dvdt, dt).to_cons();
            Ok((flux_x(&vm), source_x(&vm, wx(xf, t_half)), pred))
        });
        let faces: Vec<(Vec6, Vec6, Cons)> = faces.into_iter().collect::<Result<_>>()?;
        let lam = dt / dx;
        let out: Vec<Result<Cons>> = self.exec.map_range(n, |j| {
            let (fl, sl, _) = &faces[j];
            let (fr, sr, _) = &faces[j + 1];
            let a = u[j].to_array();
            let c = Cons::from_array(std::array::from_fn(|k| a[k] - lam * (fr[k] - fl[k]) + 0.5 * dt * (sl[k] + sr[k])));
            c.to_prim()?;
            Ok(c)
        });
        let new_u = out.into_iter().collect::<Result<Vec<_>>>()?;
        Ok((new_u, faces.into_iter().map(|f| f.2).collect()))
    }
}

/// Cell averages, primitive slopes and the face predictions of the last step.
#[derive(Clone, Debug)]
pub struct Solution1D {
    pub grid: Grid1D,
    pub u: Vec<Cons>,
    pub slopes: Vec<Vec6>,
    pub t: f64,
    pub steps: usize,
    /// `U(V* + dt dV/dt)` at every face from the previous step.
    pub predicted: Option<Vec<Cons>>,
}

impl Solution1D {
    /// Project `f` onto cell averages and limit the initial slopes.
    pub fn project<F>(grid: Grid1D, f: F, bc: &BoundaryCondition, scheme: &SchemeConfig) -> Result<Self>
    where
        F: Fn(f64) -> Prim,
    {
        let dx = grid.dx();
        let u: Vec<Cons> = grid.centers().iter().map(|&x| cons_average(&f, x, dx)).collect();
        for c in &u {
            c.to_prim()?;
        }
        let line = Line { grid, bc, limiter: scheme.limiter, exec: scheme.exec };
        let slopes = line.slopes(&u, None, 0.0);
        Ok(Solution1D { grid, u, slopes, t: 0.0, steps: 0, predicted: None })
    }

    pub fn primitives(&self) -> Vec<Prim> {
        self.u.iter().map(Cons::to_prim_unchecked).collect()
    }

    /// Domain integral of each conserved component.
    pub fn totals(&self) -> Vec6 {
        let dx = self.grid.dx();
        let mut s = [0.0; 6];
        for c in &self.u {
            for (k, v) in c.to_array().iter().enumerate() {
                s[k] += v * dx;
            }
        }
        s
    }
}

/// `C dx / max_j (|u1| + c)`.
pub fn cfl_dt(sol: &Solution1D, cfl: f64) -> f64 {
    let lmax = sol.u.iter().map(|c| c.to_prim_unchecked().max_speed_x()).fold(0.0, f64::max);
    cfl * sol.grid.dx() / lmax
}

/// Advance by one CFL step, never beyond `t_stop`. Failed attempts are
/// retried with half the step. Returns the step taken.
pub fn step<P: Potential + ?Sized>(
    sol: &mut Solution1D,
    bc: &BoundaryCondition,
    pot: &P,
    scheme: &SchemeConfig,
    t_stop: f64,
) -> Result<f64> {
    let line = Line { grid: sol.grid, bc, limiter: scheme.limiter, exec: scheme.exec };
    let wx = |x: f64, t: f64| pot.grad(x, 0.0, t).0;
    let mut dt = cfl_dt(sol, scheme.cfl).min(t_stop - sol.t);
    let mut attempt = 0;
    loop {
        match line.advance(&sol.u, &sol.slopes, sol.t, dt, &wx) {
            Ok((u, pred)) => {
                let t_new = if sol.t + dt >= t_stop { t_stop } else { sol.t + dt };
                sol.slopes = line.slopes(&u, Some(&pred), t_new);
                sol.u = u;
                sol.predicted = Some(pred);
                sol.t = t_new;
                sol.steps += 1;
                return Ok(dt);
            }
            Err(e) if attempt < scheme.max_retries => {
                attempt += 1;
                log::warn!("step {} at t={:e} failed ({e}); retrying with dt={:e}", sol.steps, sol.t, 0.5 * dt);
                dt *= 0.5;
            }
            Err(e) => {
                return Err(Error::Step { step: sol.steps, time: sol.t, source: Box::new(e) });
            }
        }
    }
}

/// March to `t_end`, clipping the last step.
pub fn run<P: Potential + ?Sized>(
    sol: &mut Solution1D,
    bc: &BoundaryCondition,
    pot: &P,
    scheme: &SchemeConfig,
    t_end: f64,
) -> Result<()> {
    while sol.t < t_end {
        step(sol, bc, pot, scheme, t_end)?;
    }
    Ok(())
}

/// Discrete `l1`, `l2` and `l-infinity` norms of one error component.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Norms {
    pub l1: f64,
    pub l2: f64,
    pub linf: f64,
}

/// Errors of the primitive variables of every cell against Gauss averages
/// of the exact primitive solution.
pub fn error_norms<F>(sol: &Solution1D, exact: F) -> [Norms; 6]
where
    F: Fn(f64) -> Prim,
{
    let dx = sol.grid.dx();
    let mut out = [Norms::default(); 6];
    for (j, c) in sol.u.iter().enumerate() {
        let num = c.to_prim_unchecked().to_array();
        let ex = gauss_average(|x| exact(x).to_array(), sol.grid.center(j as isize), dx);
        for k in 0..6 {
            let e = (num[k] - ex[k]).abs();
            out[k].l1 += e * dx;
            out[k].l2 += e * e * dx;
            out[k].linf = out[k].linf.max(e);
        }
    }
    for n in &mut out {
        n.l2 = n.l2.sqrt();
    }
    out
}

/// `log2(e_coarse / e_fine)` for a halved mesh.
pub fn order(e_coarse: f64, e_fine: f64) -> f64 {
    (e_coarse / e_fine).log2()
}
