//! Registry of the benchmark problems.

use std::f64::consts::PI;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fv1d::BoundaryCondition;
use crate::potential::PotentialKind;
use crate::reconstruction::Limiter;
use crate::state::Prim;

/// Boundary treatment named by a problem, independent of any closure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundaryKind {
    Outflow,
    Periodic,
    /// Ghost cells from the exact solution.
    Exact,
}

#[derive(Clone, Copy, Debug)]
pub struct ProblemSpec {
    pub name: &'static str,
    pub dim: usize,
    pub x_range: (f64, f64),
    pub y_range: (f64, f64),
    /// Initial data `(x, y) -> V`; 1D problems ignore `y`.
    pub init: fn(f64, f64) -> Prim,
    pub potential: PotentialKind,
    pub boundary: BoundaryKind,
    pub t_end: f64,
    pub limiter: Limiter,
    pub default_n: usize,
    /// Exact solution `(x, t) -> V` of 1D smooth problems.
    pub exact: Option<fn(f64, f64) -> Prim>,
    /// Absorption coefficient of the IBA source on `E11`.
    pub vt: Option<f64>,
    /// Whether the potential also acts in the y-sweep.
    pub y_source: bool,
    pub description: &'static str,
}

impl ProblemSpec {
    pub fn boundary_condition(&self) -> BoundaryCondition {
        match (self.boundary, self.exact) {
            (BoundaryKind::Periodic, _) => BoundaryCondition::Periodic,
            (BoundaryKind::Exact, Some(f)) => BoundaryCondition::ExactDirichlet(Arc::new(f)),
            _ => BoundaryCondition::Outflow,
        }
    }

    pub fn initial_1d(&self, x: f64) -> Prim {
        (self.init)(x, 0.0)
    }
}

fn accuracy1_exact(x: f64, t: f64) -> Prim {
    Prim::new(2.0 + (2.0 * PI * (x - t)).sin(), 1.0, 0.0, 1.0, 0.0, 1.0)
}

const EPS2: f64 = 1e-2;

fn accuracy2_exact(x: f64, t: f64) -> Prim {
    let s = (2.0 * PI * (x - t)).sin();
    let p11 = 1.0 + (t - x) * (0.5 * EPS2 + 0.25) + (4.0 * PI * (x - t)).sin() / (16.0 * PI);
    Prim::new(EPS2 + s * s, 1.0, 0.0, p11, 0.0, 1.0)
}

fn split(x: f64, x0: f64, l: Prim, r: Prim) -> Prim {
    if x <= x0 {
        l
    } else {
        r
    }
}

fn rp1(x: f64, _: f64) -> Prim {
    split(x, 0.5, Prim::new(1.0, 0.0, 0.0, 2.0, 0.05, 0.6), Prim::new(0.125, 0.0, 0.0, 0.2, 0.1, 0.2))
}

fn rp2(x: f64, _: f64) -> Prim {
    split(x, 0.0, Prim::new(1.0, 1.0, 1.0, 1.0, 0.0, 1.0), Prim::new(1.0, -1.0, -1.0, 1.0, 0.0, 1.0))
}

fn rp3(x: f64, _: f64) -> Prim {
    split(x, 0.0, Prim::new(2.0, -0.5, -0.5, 1.5, 0.5, 1.5), Prim::new(1.0, 1.0, 1.0, 1.0, 0.0, 1.0))
}

fn leblanc(x: f64, _: f64) -> Prim {
    split(x, 5.0, Prim::new(2.0, 0.0, 0.0, 1e9, 0.0, 1e9), Prim::new(0.001, 0.0, 0.0, 1.0, 0.0, 1.0))
}

fn shu_osher(x: f64, _: f64) -> Prim {
    if x <= -4.0 {
        Prim::new(3.857143, 2.629369, 0.0, 10.33333, 0.0, 10.33333)
    } else {
        Prim::new(1.0 + 0.2 * (5.0 * x).sin(), 0.0, 0.0, 1.0, 0.0, 1.0)
    }
}

/// Pick the quadrant state; quadrants are numbered counterclockwise from
/// the upper right.
fn quadrants(x: f64, y: f64, q: [Prim; 4]) -> Prim {
    match (x > 0.5, y > 0.5) {
        (true, true) => q[0],
        (false, true) => q[1],
        (false, false) => q[2],
        (true, false) => q[3],
    }
}

fn rp2d_1(x: f64, y: f64) -> Prim {
    quadrants(
        x,
        y,
        [
            Prim::new(1.0, 0.8939, 0.8939, 1.0541337, 0.0, 1.0541337),
            Prim::new(1.0541337, 0.8939, 0.8, 1.0541337, 0.0, 1.1716956),
            Prim::new(1.0, 0.8939, 0.8939, 1.0, 0.0, 1.0),
            Prim::new(1.0541337, 0.8, 0.8939, 1.1716956, 0.0, 1.0541337),
        ],
    )
}

fn rp2d_2(x: f64, y: f64) -> Prim {
    quadrants(
        x,
        y,
        [
            Prim::new(1.0, 0.75, -0.5, 1.0, 0.5, 1.0),
            Prim::new(1.0, 0.75, 0.5, 1.0, -0.5, 1.0),
            Prim::new(1.0, -0.25, 0.5, 1.0, 0.5, 1.0),
            Prim::new(1.0, -0.25, -0.5, 1.0, -0.5, 1.0),
        ],
    )
}

fn rp2d_3(x: f64, y: f64) -> Prim {
    quadrants(
        x,
        y,
        [
            Prim::new(1.0, -0.5, -0.5, 1.0, 0.0, 1.0),
            Prim::new(0.9422650, -0.6, -0.5, 0.8366024, 0.0, 0.9422650),
            Prim::new(1.0, -0.5, -0.5, 0.9422650, 0.0, 0.9422650),
            Prim::new(0.9422650, -0.5, -0.6, 0.9422650, 0.0, 0.8366024),
        ],
    )
}

fn rp2d_4(x: f64, y: f64) -> Prim {
    quadrants(
        x,
        y,
        [
            Prim::new(1.0909, 0.0, 0.0, 1.0909, 0.0, 1.0909),
            Prim::new(0.5065, 1.2024, 0.0, 0.3499, 0.0, 0.3499),
            Prim::new(1.0909, 1.2024, 1.2024, 1.0909, 0.0, 1.0909),
            Prim::new(0.5065, 0.0, 1.2024, 0.3499, 0.0, 0.3499),
        ],
    )
}

fn uniform_plasma(_: f64, _: f64) -> Prim {
    Prim::new(0.1, 0.0, 0.0, 9.0, 7.0, 9.0)
}

fn realistic(_: f64, _: f64) -> Prim {
    Prim::new(0.109885, 0.0, 0.0, 1.0, 0.0, 1.0)
}

fn accuracy1_init(x: f64, _: f64) -> Prim {
    accuracy1_exact(x, 0.0)
}

fn accuracy2_init(x: f64, _: f64) -> Prim {
    accuracy2_exact(x, 0.0)
}

const BASE: ProblemSpec = ProblemSpec {
    name: "",
    dim: 1,
    x_range: (0.0, 1.0),
    y_range: (0.0, 0.0),
    init: rp1,
    potential: PotentialKind::Zero,
    boundary: BoundaryKind::Outflow,
    t_end: 0.0,
    limiter: Limiter::VanLeer,
    default_n: 400,
    exact: None,
    vt: None,
    y_source: true,
    description: "",
};

const RP2D: ProblemSpec = ProblemSpec { dim: 2, y_range: (0.0, 1.0), default_n: 200, ..BASE };

/// All registered problems.
pub fn registry() -> Vec<ProblemSpec> {
    vec![
        ProblemSpec {
            name: "accuracy1",
            x_range: (-0.5, 0.5),
            init: accuracy1_init,
            boundary: BoundaryKind::Periodic,
            t_end: 0.5,
            default_n: 640,
            exact: Some(accuracy1_exact),
            description: "smooth density wave, periodic, no source",
            ..BASE
        },
        ProblemSpec {
            name: "accuracy2",
            x_range: (-0.25, 0.25),
            init: accuracy2_init,
            potential: PotentialKind::LinearX,
            boundary: BoundaryKind::Exact,
            t_end: 0.1,
            default_n: 640,
            exact: Some(accuracy2_exact),
            description: "smooth wave with potential W = x, exact boundary data",
            ..BASE
        },
        ProblemSpec { name: "rp1", t_end: 0.125, description: "Sod-type five-wave Riemann problem", ..BASE },
        ProblemSpec {
            name: "rp2",
            x_range: (-0.5, 0.5),
            init: rp2,
            t_end: 0.125,
            description: "colliding streams, two shocks and two shear waves",
            ..BASE
        },
        ProblemSpec {
            name: "rp3",
            x_range: (-0.5, 0.5),
            init: rp3,
            t_end: 0.15,
            description: "two rarefactions with shear and contact waves",
            ..BASE
        },
        ProblemSpec {
            name: "leblanc",
            x_range: (0.0, 10.0),
            init: leblanc,
            t_end: 4e-5,
            limiter: Limiter::Minmod { theta: 1.8 },
            default_n: 800,
            description: "extreme density and pressure jump",
            ..BASE
        },
        ProblemSpec {
            name: "shu_osher",
            x_range: (-5.0, 5.0),
            init: shu_osher,
            t_end: 1.4,
            default_n: 800,
            description: "shock interacting with a density sine wave",
            ..BASE
        },
        ProblemSpec { name: "rp2d_1", init: rp2d_1, t_end: 0.15, description: "2D Riemann problem with shocks and contacts", ..RP2D },
        ProblemSpec { name: "rp2d_2", init: rp2d_2, t_end: 0.15, description: "2D Riemann problem with four shear waves", ..RP2D },
        ProblemSpec { name: "rp2d_3", init: rp2d_3, t_end: 0.2, description: "2D Riemann problem with rarefactions", ..RP2D },
        ProblemSpec { name: "rp2d_4", init: rp2d_4, t_end: 0.15, description: "2D Riemann problem with strong shocks", ..RP2D },
        ProblemSpec {
            name: "uniform_plasma",
            x_range: (0.0, 4.0),
            y_range: (0.0, 4.0),
            init: uniform_plasma,
            potential: PotentialKind::Gaussian { amp: 25.0, cx: 2.0, cy: 2.0, width: 1.0 / 200.0 },
            t_end: 0.1,
            description: "uniform anisotropic plasma under a Gaussian potential",
            ..RP2D
        },
        ProblemSpec {
            name: "realistic",
            x_range: (0.0, 100.0),
            y_range: (0.0, 100.0),
            init: realistic,
            potential: PotentialKind::Gaussian { amp: 1.0, cx: 50.0, cy: 50.0, width: 100.0 },
            t_end: 0.5,
            vt: Some(0.5),
            y_source: false,
            description: "laser heating with inverse Bremsstrahlung absorption",
            ..RP2D
        },
    ]
}

pub fn find(name: &str) -> Result<ProblemSpec> {
    registry()
        .into_iter()
        .find(|p| p.name == name)
        .ok_or_else(|| Error::Config(format!("unknown case '{name}'")))
}
