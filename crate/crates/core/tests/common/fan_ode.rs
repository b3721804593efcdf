//! Reference for a t-axis inside the left rarefaction: first-order
//! correction of the centred fan, integrated as an ODE in `xi` along the
//! invariants of the 1-family.

use nalgebra::{SMatrix, SVector};
use tmgrp::grp::GrpInput;
use tmgrp::state::{primitive_source, quasi_linear_matrix, Vec6};
use tmgrp::{Prim, RiemannFan};

type M6 = SMatrix<f64, 6, 6>;
type V6 = SVector<f64, 6>;
type M5 = SMatrix<f64, 5, 5>;
type V5 = SVector<f64, 5>;

/// `(u1 - c, u1 + c, p11/rho^3, u2 + sqrt3 p12/sqrt(rho p11), p12/rho^3, det/rho^4)`.
fn coords(v: &V6) -> V6 {
    let [rho, u1, u2, p11, p12, p22] = [v[0], v[1], v[2], v[3], v[4], v[5]];
    let c = (3.0 * p11 / rho).sqrt();
    V6::from([
        u1 - c,
        u1 + c,
        p11 / rho.powi(3),
        u2 + 3f64.sqrt() * p12 / (rho * p11).sqrt(),
        p12 / rho.powi(3),
        (p11 * p22 - p12 * p12) / rho.powi(4),
    ])
}

fn jacobian(v: &Prim) -> M6 {
    let v = V6::from(v.to_array());
    let mut j = M6::zeros();
    for k in 0..6 {
        let h = 1e-6 * v[k].abs().max(1.0);
        let mut a = v;
        let mut b = v;
        a[k] += h;
        b[k] -= h;
        j.set_column(k, &((coords(&a) - coords(&b)) / (2.0 * h)));
    }
    j
}

fn a_matrix(v: &Prim) -> M6 {
    let a = quasi_linear_matrix(v);
    M6::from_fn(|i, k| a[i][k])
}

struct Local {
    /// `J A J^-1` in the coordinates above.
    ahat: M6,
    src: V6,
}

fn local(v: &Prim, wx: f64) -> Local {
    let j = jacobian(v);
    let ji = j.try_inverse().unwrap();
    Local { ahat: j * a_matrix(v) * ji, src: j * V6::from(primitive_source(wx)) }
}

fn rhs(fan: &RiemannFan, xi: f64, h: &V5, wx: f64) -> V5 {
    let l = local(&fan.left_fan_state(xi), wx);
    let c = M5::from_fn(|i, k| l.ahat[(i + 1, k + 1)]) - M5::identity() * xi;
    let s = V5::from_fn(|i, _| l.src[i + 1]);
    c.lu().solve(&(s - h)).unwrap()
}

/// `dV/dt(0, 0+)` for an input whose t-axis lies inside the left fan.
pub fn sonic_reference(inp: &GrpInput, steps: usize) -> Vec6 {
    sonic_reference_full(inp, steps).0
}

/// Also returns the finite part of `dV/dx` at the axis, modulo the first
/// eigenvector.
pub fn sonic_reference_full(inp: &GrpInput, steps: usize) -> (Vec6, Vec6) {
    let fan = RiemannFan::solve(&inp.vl, &inp.vr).unwrap();
    let (xh, wx) = (fan.s_hl.unwrap(), inp.wx0);
    let vl = inp.vl;
    let dvl = V6::from(inp.dvl);
    let v1 = V6::from(primitive_source(wx)) - (a_matrix(&vl) - M6::identity() * xh) * dvl;
    let z1 = jacobian(&vl) * v1;
    let mut h = V5::from_fn(|i, _| z1[i + 1]);
    let dxi = (0.0 - xh) / steps as f64;
    let mut xi = xh;
    for _ in 0..steps {
        let k1 = rhs(&fan, xi, &h, wx);
        let k2 = rhs(&fan, xi + 0.5 * dxi, &(h + k1 * (0.5 * dxi)), wx);
        let k3 = rhs(&fan, xi + 0.5 * dxi, &(h + k2 * (0.5 * dxi)), wx);
        let k4 = rhs(&fan, xi + dxi, &(h + k3 * dxi), wx);
        h += (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (dxi / 6.0);
        xi += dxi;
    }
    let v0 = fan.left_fan_state(0.0);
    let l = local(&v0, wx);
    let dh = rhs(&fan, 0.0, &h, wx);
    // phi = xi + t q(xi) gives 2 q + e . h' = source
    let e = V5::from_fn(|i, _| l.ahat[(0, i + 1)]);
    let q = 0.5 * (l.src[0] - e.dot(&dh));
    let zt = V6::from([q, h[0], h[1], h[2], h[3], h[4]]);
    let ji = jacobian(&v0).try_inverse().unwrap();
    let vt = ji * zt;
    let vx = ji * V6::from([0.0, dh[0], dh[1], dh[2], dh[3], dh[4]]);
    (std::array::from_fn(|k| vt[k]), std::array::from_fn(|k| vx[k]))
}
