//! The t-axis inside the left rarefaction fan.

use super::affine::{solve2, Aff};
use super::side::{fan_p22_t, fan_transverse_equations, pi2, pi3, RarefactionCharacteristics};
use super::GrpInput;
use crate::error::Result;
use crate::riemann::RiemannFan;
use crate::state::{Prim, Vec6};

/// State on the t-axis and its time derivative for a left sonic fan.
pub fn sonic_left(inp: &GrpInput, fan: &RiemannFan) -> Result<(Prim, Vec6)> {
    let vl = inp.vl;
    let v0 = fan.left_fan_state(0.0);
    let (rho, u0, p11) = (v0.rho, v0.u1, v0.p11);
    let c0 = v0.sound_speed();
    let cl = vl.sound_speed();
    let rc = RarefactionCharacteristics::new(&vl, &inp.dvl, 0.0);
    let k = rc.k(&vl);
    let dt = 0.25 * k * u0 * (3.0 * cl * cl + u0 * u0) - 2.0 * rc.psi1p * u0 - 0.5 * inp.wx0;
    // along the sonic ray (u1 - c) d/dx stays O(1), so phi_t is half the forcing
    let e = -0.25 * rho * rho * rc.s1p * u0 / cl - 0.25 * inp.wx0;
    let u1_t = 0.5 * (dt + e);
    let p11_t = 0.5 * rho * c0 * (dt - e);
    let rho_t = (p11_t + rho.powi(3) * rc.s1p * u0 * u0 / cl) / (c0 * c0);
    // Finite part w of the x-derivative at the sonic point. The singular
    // part is V0'/t along the first eigenvector, so A w = s - V_t - DA[V_t] V0'
    // with V0' the self-similar fan profile; w is fixed up to r1, which the
    // fan relations do not see, and w_u1 = 0 picks one representative.
    let p12 = v0.p12;
    let rho_p = -rho / (2.0 * c0);
    let u1_p = 0.5;
    let u2_p = 1.5 * p12 / (rho * c0 * c0);
    let p11_p = -0.5 * rho * c0;
    let p12_p = -1.5 * p12 / c0;
    let (u2_t, p12_t) = (Aff::X, Aff::Y);
    let r_rho = -rho_t - (u1_t * rho_p + rho_t * u1_p);
    let r_u2 = -u2_t - (u2_p * u1_t - p12_p * rho_t / (rho * rho));
    let r_p11 = -p11_t - (u1_t * p11_p + 3.0 * p11_t * u1_p);
    let r_p12 = -p12_t - p12_t * (2.0 * u1_p) - (p12_p * u1_t + u2_p * p11_t);
    let w_p12 = (r_p12 * u0 - r_u2 * p11) / (u0 * u0 - p11 / rho);
    let w_u2 = (r_u2 - w_p12 / rho) / u0;
    let w = [
        Aff::konst(r_rho / u0),
        Aff::konst(0.0),
        w_u2,
        Aff::konst(r_p11 / u0),
        w_p12,
        Aff::konst(0.0),
    ];
    // Pi(V) V_x also picks up DPi[V_t] V0' from the singular part
    let r3 = rho.powi(3);
    let r4 = r3 * rho;
    let dc = 0.5 * c0 * (p11_t / p11 - rho_t / rho);
    let dpi2 = Aff::konst(-2.0 * rho_t / (rho * rho) * p12_p)
        - (p12_t / (rho * rho) - 2.0 * p12 * rho_t / r3) * (1.5 * rho_p)
        - (p12_t / (rho * p11) - p12 * rho_t / (rho * rho * p11) - p12 * p11_t / (rho * p11 * p11)) * (1.5 * p11_p);
    let dpi3 = (p12_t / r3 - 3.0 * p12 * rho_t / r4) * u1_p
        + ((dc * p12 - 4.0 * p12 * c0 * rho_t / rho) / r4 + p12_t * (c0 / r4)) * (-3.0 * rho_p)
        + Aff::konst((dc / r3 - 3.0 * c0 * rho_t / r4) * p12_p - (p11_t / r3 - 3.0 * p11 * rho_t / r4) * u2_p);
    let pis = (pi2(&v0, &w) + dpi2, pi3(&v0, &w) + dpi3);
    let (e2, e3) = fan_transverse_equations(&rc, &vl, &v0, 0.0, pis, u2_t, p12_t, rho_t, p11_t);
    let (u2_t, p12_t) = solve2(e2, e3, "sonic transverse")?;
    let s2_t = -rc.s2p * c0 * c0 / cl;
    let p22_t = fan_p22_t(&v0, s2_t, rho_t, p11_t, p12_t);
    Ok((v0, [rho_t, u1_t, u2_t, p11_t, p12_t, p22_t]))
}
