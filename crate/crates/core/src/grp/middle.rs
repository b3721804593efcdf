//! Coupling across the shear waves into the regions `**L` and `**R`.

use super::affine::{Aff, LinearPair};
use super::side::{material_p22, transverse, StarSide};
use crate::riemann::RiemannFan;
use crate::state::{Prim, Vec6};

/// Derivative of `u2 + p12 / sqrt(rho p11)` along a line, from the
/// derivatives of its ingredients along the same line.
fn d_theta(v: &Prim, du2: Aff, dp12: Aff, drho: f64, dp11: f64) -> Aff {
    let srp = (v.rho * v.p11).sqrt();
    du2 + dp12 / srp - 0.5 * v.p12 / srp * (drho / v.rho + dp11 / v.p11)
}

/// Equation for `(Du2/Dt, Dp12/Dt)**` obtained from the 2-shear wave.
pub fn middle_pair(fan: &RiemannFan, s: &StarSide) -> LinearPair {
    let lam = fan.lambda2;
    let v2 = fan.v_star2_l;
    let d2rho = s.rho_t + lam * s.rho_x;
    let d2p = s.p11_t + lam * s.p11_x;
    let star = d_theta(
        &s.v,
        Aff::konst(s.u2_t + lam * s.u2_x),
        Aff::konst(s.p12_t + lam * s.p12_x),
        d2rho,
        d2p,
    );
    let [u2_t, u2_x, p12_t, p12_x] = transverse(&v2, s.y1, Aff::X, Aff::Y);
    let mid = d_theta(&v2, u2_t + u2_x * lam, p12_t + p12_x * lam, d2rho, d2p);
    (mid - star).as_pair()
}

/// Time derivatives in `**L` once `(Du2/Dt, Dp12/Dt)**` are known.
pub fn star2_dvdt(fan: &RiemannFan, s: &StarSide, x2: f64, y2: f64) -> Vec6 {
    let lam = fan.lambda2;
    let v2 = fan.v_star2_l;
    let (u, p) = (fan.u1_star, fan.p11_star);
    let [u2_t, _, p12_t, p12_x] = transverse(&v2, s.y1, Aff::X, Aff::Y).map(|a| a.eval(x2, y2));
    let d2p = s.p11_t + lam * s.p11_x;
    let d2p12_star = s.p12_t + lam * s.p12_x;
    let d2p12_mid = p12_t + lam * p12_x;
    let dp22_mid = material_p22(&v2, s.y1, y2);
    // det(p) is continuous across the shear; the product with u1* avoids
    // dividing by the contact speed
    let jump = (s.v.p22 - v2.p22) * d2p - 2.0 * s.v.p12 * d2p12_star + 2.0 * v2.p12 * d2p12_mid;
    let p22_t = (u * jump + p * ((u - lam) * s.p22_t + lam * (s.dp22 - dp22_mid))) / (p * (u - lam));
    [s.rho_t, s.u1_t, u2_t, s.p11_t, p12_t, p22_t]
}
