//! State vectors, conversions, fluxes, sources and the characteristic
//! structure of the ten-moment system.

use crate::error::{Error, Result};
use nalgebra::SMatrix;

/// Plain six-component vector used for slopes, fluxes and time derivatives.
pub type Vec6 = [f64; 6];
pub type Mat6 = [[f64; 6]; 6];

const SQRT3: f64 = 1.732_050_807_568_877_2;

/// Primitive variables `(rho, u1, u2, p11, p12, p22)`.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Prim {
    pub rho: f64,
    pub u1: f64,
    pub u2: f64,
    pub p11: f64,
    pub p12: f64,
    pub p22: f64,
}

/// Conserved variables `(rho, m1, m2, E11, E12, E22)`.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Cons {
    pub rho: f64,
    pub m1: f64,
    pub m2: f64,
    pub e11: f64,
    pub e12: f64,
    pub e22: f64,
}

impl Prim {
    pub const fn new(rho: f64, u1: f64, u2: f64, p11: f64, p12: f64, p22: f64) -> Self {
        Prim { rho, u1, u2, p11, p12, p22 }
    }

    pub fn from_array(a: Vec6) -> Self {
        Prim::new(a[0], a[1], a[2], a[3], a[4], a[5])
    }

    pub fn to_array(self) -> Vec6 {
        [self.rho, self.u1, self.u2, self.p11, self.p12, self.p22]
    }

    pub fn det(&self) -> f64 {
        self.p11 * self.p22 - self.p12 * self.p12
    }

    /// `c = sqrt(3 p11 / rho)`.
    pub fn sound_speed(&self) -> f64 {
        (3.0 * self.p11 / self.rho).sqrt()
    }

    pub fn is_admissible(&self) -> bool {
        self.rho > 0.0 && self.p11 > 0.0 && self.det() > 0.0 && self.to_array().iter().all(|v| v.is_finite())
    }

    pub fn check(self) -> Result<Self> {
        if self.is_admissible() {
            Ok(self)
        } else {
            Err(Error::Admissibility { rho: self.rho, p11: self.p11, det: self.det() })
        }
    }

    pub fn to_cons(&self) -> Cons {
        let Prim { rho, u1, u2, p11, p12, p22 } = *self;
        Cons {
            rho,
            m1: rho * u1,
            m2: rho * u2,
            e11: 0.5 * (p11 + rho * u1 * u1),
            e12: 0.5 * (p12 + rho * u1 * u2),
            e22: 0.5 * (p22 + rho * u2 * u2),
        }
    }

    /// Exchange the roles of x and y: `(rho, u2, u1, p22, p12, p11)`.
    pub fn swap_xy(&self) -> Prim {
        Prim::new(self.rho, self.u2, self.u1, self.p22, self.p12, self.p11)
    }

    /// Reflection `x -> -x` combined with `y -> -y`: both velocities flip,
    /// the pressure tensor is unchanged.
    pub fn mirrored(&self) -> Prim {
        Prim::new(self.rho, -self.u1, -self.u2, self.p11, self.p12, self.p22)
    }

    /// Largest x-direction characteristic speed `|u1| + c`.
    pub fn max_speed_x(&self) -> f64 {
        self.u1.abs() + self.sound_speed()
    }

    pub fn max_speed_y(&self) -> f64 {
        self.u2.abs() + (3.0 * self.p22 / self.rho).sqrt()
    }

    pub fn add_scaled(&self, d: &Vec6, s: f64) -> Prim {
        let mut a = self.to_array();
        for k in 0..6 {
            a[k] += s * d[k];
        }
        Prim::from_array(a)
    }
}

impl Cons {
    pub const fn new(rho: f64, m1: f64, m2: f64, e11: f64, e12: f64, e22: f64) -> Self {
        Cons { rho, m1, m2, e11, e12, e22 }
    }

    pub fn from_array(a: Vec6) -> Self {
        Cons::new(a[0], a[1], a[2], a[3], a[4], a[5])
    }

    pub fn to_array(self) -> Vec6 {
        [self.rho, self.m1, self.m2, self.e11, self.e12, self.e22]
    }

    /// Recover primitives through `p = 2E - rho u (x) u`; fails outside the
    /// admissible set.
    pub fn to_prim(&self) -> Result<Prim> {
        self.to_prim_unchecked().check()
    }

    pub fn to_prim_unchecked(&self) -> Prim {
        let rho = self.rho;
        let u1 = self.m1 / rho;
        let u2 = self.m2 / rho;
        Prim {
            rho,
            u1,
            u2,
            p11: 2.0 * self.e11 - self.m1 * u1,
            p12: 2.0 * self.e12 - self.m1 * u2,
            p22: 2.0 * self.e22 - self.m2 * u2,
        }
    }

    pub fn swap_xy(&self) -> Cons {
        Cons::new(self.rho, self.m2, self.m1, self.e22, self.e12, self.e11)
    }

    /// The state seen after `x -> -x`, `y -> -y`.
    pub fn mirrored(&self) -> Cons {
        Cons::new(self.rho, -self.m1, -self.m2, self.e11, self.e12, self.e22)
    }
}

/// Total lexicographic order used to pick one of a problem and its mirror
/// image, so that both are evaluated with identical arithmetic.
pub fn orientation(a: &[f64], mirrored: &[f64]) -> std::cmp::Ordering {
    a.iter().zip(mirrored).map(|(x, y)| x.total_cmp(y)).find(|o| o.is_ne()).unwrap_or(std::cmp::Ordering::Equal)
}

/// Permute a conserved-ordering vector between x and y roles.
pub fn swap_xy_vec(v: &Vec6) -> Vec6 {
    [v[0], v[2], v[1], v[5], v[4], v[3]]
}

/// x-direction flux `F(U)` in conserved ordering.
pub fn flux_x(v: &Prim) -> Vec6 {
    let u = v.to_cons();
    let Prim { rho, u1, u2, p11, p12, .. } = *v;
    [
        rho * u1,
        rho * u1 * u1 + p11,
        rho * u1 * u2 + p12,
        (u.e11 + p11) * u1,
        u.e12 * u1 + 0.5 * (p11 * u2 + p12 * u1),
        u.e22 * u1 + p12 * u2,
    ]
}

/// y-direction flux `G(U)`, obtained from `flux_x` through the x/y swap.
pub fn flux_y(v: &Prim) -> Vec6 {
    swap_xy_vec(&flux_x(&v.swap_xy()))
}

/// x-direction potential source in conserved ordering.
pub fn source_x(v: &Prim, wx: f64) -> Vec6 {
    [
        0.0,
        -0.5 * v.rho * wx,
        0.0,
        -0.5 * v.rho * v.u1 * wx,
        -0.25 * v.rho * v.u2 * wx,
        0.0,
    ]
}

pub fn source_y(v: &Prim, wy: f64) -> Vec6 {
    swap_xy_vec(&source_x(&v.swap_xy(), wy))
}

/// Source of the quasi-linear primitive system; only the u1 equation is forced.
pub fn primitive_source(wx: f64) -> Vec6 {
    [0.0, -0.5 * wx, 0.0, 0.0, 0.0, 0.0]
}

/// Coefficient matrix `A(V)` of `V_t + A V_x = s`.
pub fn quasi_linear_matrix(v: &Prim) -> Mat6 {
    let Prim { rho, u1, p11, p12, p22, .. } = *v;
    [
        [u1, rho, 0.0, 0.0, 0.0, 0.0],
        [0.0, u1, 0.0, 1.0 / rho, 0.0, 0.0],
        [0.0, 0.0, u1, 0.0, 1.0 / rho, 0.0],
        [0.0, 3.0 * p11, 0.0, u1, 0.0, 0.0],
        [0.0, 2.0 * p12, p11, 0.0, u1, 0.0],
        [0.0, p22, 2.0 * p12, 0.0, 0.0, u1],
    ]
}

/// `V_t = -A(V) V_x + s` for a smooth state with gradient `dv`.
pub fn smooth_time_derivative(v: &Prim, dv: &Vec6, wx: f64) -> Vec6 {
    let a = quasi_linear_matrix(v);
    let s = primitive_source(wx);
    let mut out = [0.0; 6];
    for i in 0..6 {
        let mut acc = 0.0;
        for j in 0..6 {
            acc += a[i][j] * dv[j];
        }
        out[i] = s[i] - acc;
    }
    out
}

/// Ordered x-direction eigenvalues.
pub fn eigenvalues_x(v: &Prim) -> Vec6 {
    let c = v.sound_speed();
    let u = v.u1;
    [u - c, u - c / SQRT3, u, u, u + c / SQRT3, u + c]
}

/// Right eigenvectors of the primitive system, ordered with `eigenvalues_x`.
pub fn primitive_eigenvectors(v: &Prim) -> [Vec6; 6] {
    let Prim { rho, p11, p12, p22, .. } = *v;
    let c = v.sound_speed();
    let acoustic_p22 = p11 * p22 + 2.0 * p12 * p12;
    [
        [rho * p11, -c * p11, -c * p12, 3.0 * p11 * p11, 3.0 * p11 * p12, acoustic_p22],
        [0.0, 0.0, -c / SQRT3, 0.0, p11, 2.0 * p12],
        [0.0, 0.0, 0.0, 0.0, 0.0, 1.0],
        [1.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, c / SQRT3, 0.0, p11, 2.0 * p12],
        [rho * p11, c * p11, c * p12, 3.0 * p11 * p11, 3.0 * p11 * p12, acoustic_p22],
    ]
}

/// Eigenvalues and conserved-variable right eigenvectors of `dF/dU`.
#[derive(Clone, Debug)]
pub struct Eigensystem {
    pub lambdas: Vec6,
    /// Column `i` is the eigenvector of `lambdas[i]`.
    pub rmat: Mat6,
    pub rmat_inv: Mat6,
}

impl Eigensystem {
    /// Multiply `R^{-1} w`.
    pub fn to_characteristic(&self, w: &Vec6) -> Vec6 {
        mat_vec(&self.rmat_inv, w)
    }

    /// Multiply `R w`.
    pub fn from_characteristic(&self, w: &Vec6) -> Vec6 {
        mat_vec(&self.rmat, w)
    }
}

pub fn mat_vec(m: &Mat6, w: &Vec6) -> Vec6 {
    let mut out = [0.0; 6];
    for i in 0..6 {
        out[i] = (0..6).map(|j| m[i][j] * w[j]).sum();
    }
    out
}

/// Right-eigenvector matrix in the column layout of the closed-form
/// construction: contact (E22), contact, shear(-), acoustic(-), shear(+),
/// acoustic(+).
fn rmat_closed_form(v: &Prim) -> Mat6 {
    let Prim { rho, u1, u2, p11, p12, .. } = *v;
    let det = v.det();
    let sr = rho.sqrt();
    let srp = (rho * p11).sqrt();
    let sp = p11.sqrt();
    let s3p = (3.0 * p11).sqrt();
    let m1 = s3p - u1 * sr;
    let m2 = SQRT3 * p12 - u2 * srp;
    let m3 = s3p + u1 * sr;
    let m4 = SQRT3 * p12 + u2 * srp;
    [
        [0.0, 2.0, 0.0, 2.0 * rho * p11, 0.0, 2.0 * rho * p11],
        [0.0, 2.0 * u1, 0.0, -2.0 * p11 * sr * m1, 0.0, 2.0 * p11 * sr * m3],
        [0.0, 2.0 * u2, srp, -2.0 * srp * m2, srp, 2.0 * srp * m4],
        [0.0, u1 * u1, 0.0, p11 * m1 * m1, 0.0, p11 * m3 * m3],
        [0.0, u1 * u2, 0.5 * (u1 * srp - p11), sp * m1 * m2, 0.5 * (u1 * srp + p11), sp * m3 * m4],
        [1.0, u2 * u2, u2 * srp - p12, m2 * m2 + det, u2 * srp + p12, m4 * m4 + det],
    ]
}

/// Full eigensystem of the x-direction Jacobian. The inverse is obtained by
/// LU factorisation.
pub fn eigensystem_x(v: &Prim) -> Eigensystem {
    let raw = rmat_closed_form(v);
    // reorder columns so that they follow the sorted eigenvalues
    const ORDER: [usize; 6] = [3, 2, 0, 1, 4, 5];
    let mut rmat = [[0.0; 6]; 6];
    for i in 0..6 {
        for (k, &j) in ORDER.iter().enumerate() {
            rmat[i][k] = raw[i][j];
        }
    }
    let m = SMatrix::<f64, 6, 6>::from_fn(|i, j| rmat[i][j]);
    let inv = m.lu().try_inverse().unwrap_or_else(SMatrix::<f64, 6, 6>::identity);
    let mut rmat_inv = [[0.0; 6]; 6];
    for i in 0..6 {
        for j in 0..6 {
            rmat_inv[i][j] = inv[(i, j)];
        }
    }
    Eigensystem { lambdas: eigenvalues_x(v), rmat, rmat_inv }
}

/// Jacobian `dV/dU` used for the conserved-to-primitive slope chain rule.
pub fn dprim_dcons(v: &Prim) -> Mat6 {
    let Prim { rho, u1, u2, .. } = *v;
    let ir = 1.0 / rho;
    [
        [1.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [-u1 * ir, ir, 0.0, 0.0, 0.0, 0.0],
        [-u2 * ir, 0.0, ir, 0.0, 0.0, 0.0],
        [u1 * u1, -2.0 * u1, 0.0, 2.0, 0.0, 0.0],
        [u1 * u2, -u2, -u1, 0.0, 2.0, 0.0],
        [u2 * u2, 0.0, -2.0 * u2, 0.0, 0.0, 2.0],
    ]
}

/// Jacobian `dU/dV`.
pub fn dcons_dprim(v: &Prim) -> Mat6 {
    let Prim { rho, u1, u2, .. } = *v;
    [
        [1.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [u1, rho, 0.0, 0.0, 0.0, 0.0],
        [u2, 0.0, rho, 0.0, 0.0, 0.0],
        [0.5 * u1 * u1, rho * u1, 0.0, 0.5, 0.0, 0.0],
        [0.5 * u1 * u2, 0.5 * rho * u2, 0.5 * rho * u1, 0.0, 0.5, 0.0],
        [0.5 * u2 * u2, 0.0, rho * u2, 0.0, 0.0, 0.5],
    ]
}

/// The five generalized Riemann invariants of wave family `family` (1..=6).
pub fn riemann_invariants(v: &Prim, family: usize) -> [f64; 5] {
    let Prim { rho, u1, u2, p11, p12, p22 } = *v;
    let det = v.det();
    let c = v.sound_speed();
    let srp = (rho * p11).sqrt();
    let r3 = rho * rho * rho;
    let r4 = r3 * rho;
    match family {
        1 => [p11 / r3, p12 / r3, u1 + c, u2 + SQRT3 * p12 / srp, det / r4],
        2 => [rho, u1, p11, u2 + p12 / srp, det],
        3 => [rho, u1, u2, p11, p12],
        4 => [u1, u2, p11, p12, p22],
        5 => [rho, u1, p11, u2 - p12 / srp, det],
        6 => [p11 / r3, p12 / r3, u1 - c, u2 - SQRT3 * p12 / srp, det / r4],
        _ => panic!("wave family must lie in 1..=6, got {family}"),
    }
}
