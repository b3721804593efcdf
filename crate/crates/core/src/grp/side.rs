//! Left-frame relations for the region between the left wave and the
//! 2-shear. Right-side values are produced by calling these on the mirrored
//! problem.

use super::affine::{solve2, Aff, LinearPair};
use super::GrpInput;
use crate::error::Result;
use crate::riemann::{RiemannFan, WaveKind};
use crate::state::{smooth_time_derivative, Prim, Vec6};

const SQRT3: f64 = 1.732_050_807_568_877_2;

/// Slope-derived quantities of the outer state of a left rarefaction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RarefactionCharacteristics {
    pub beta_l: f64,
    pub beta_star: f64,
    /// `S1' = (p11' - c^2 rho') / rho^3`.
    pub s1p: f64,
    pub psi1p: f64,
    pub psi2p: f64,
    pub psi3p: f64,
    /// Slope of `S2 = det(p) / rho^4`.
    pub s2p: f64,
    pub pi2: f64,
    pub pi3: f64,
}

impl RarefactionCharacteristics {
    pub fn new(vl: &Prim, dvl: &Vec6, beta_star: f64) -> Self {
        let Prim { rho, p11, p12, p22, .. } = *vl;
        let [drho, du1, du2, dp11, dp12, dp22] = *dvl;
        let c = vl.sound_speed();
        let s1p = (dp11 - c * c * drho) / rho.powi(3);
        let psi1p = du1 + dp11 / (rho * c) + rho * rho * s1p / (2.0 * c);
        let srp = (rho * p11).sqrt();
        let psi2p = du2 + SQRT3 / srp * (dp12 - 0.5 * p12 * (drho / rho + dp11 / p11));
        let psi3p = dp12 / rho.powi(3) - 3.0 * p12 * drho / rho.powi(4);
        let det = vl.det();
        let s2p = (dp11 * p22 + p11 * dp22 - 2.0 * p12 * dp12) / rho.powi(4) - 4.0 * det * drho / rho.powi(5);
        let d = dvl.map(Aff::konst);
        RarefactionCharacteristics {
            beta_l: vl.u1 - c,
            beta_star,
            s1p,
            psi1p,
            psi2p,
            psi3p,
            s2p,
            pi2: pi2(vl, &d).c,
            pi3: pi3(vl, &d).c,
        }
    }

    /// `rho_L^2 S1' / c_L^3`, the coefficient shared by the fan relations.
    pub fn k(&self, vl: &Prim) -> f64 {
        vl.rho * vl.rho * self.s1p / vl.sound_speed().powi(3)
    }
}

pub(crate) fn pi2(v: &Prim, d: &[Aff; 6]) -> Aff {
    let Prim { rho, p11, p12, .. } = *v;
    d[4] * (2.0 / rho) - d[0] * (1.5 * p12 / (rho * rho)) - d[3] * (1.5 * p12 / (rho * p11))
}

pub(crate) fn pi3(v: &Prim, d: &[Aff; 6]) -> Aff {
    let Prim { rho, p11, p12, .. } = *v;
    let c = v.sound_speed();
    let r3 = rho.powi(3);
    d[4] * (c / r3) + d[1] * (p12 / r3) - d[2] * (p11 / r3) - d[0] * (3.0 * p12 * c / (r3 * rho))
}

/// The two transverse equations obtained from the fan invariants `psi2` and
/// `psi3` at characteristic `beta`, where the local state is `v`.
#[allow(clippy::too_many_arguments)]
pub(crate) fn fan_transverse_equations(
    rc: &RarefactionCharacteristics,
    vl: &Prim,
    v: &Prim,
    beta: f64,
    pis: (Aff, Aff),
    u2_t: Aff,
    p12_t: Aff,
    rho_t: f64,
    p11_t: f64,
) -> (LinearPair, LinearPair) {
    let cl = vl.sound_speed();
    let c = v.sound_speed();
    let psi1 = vl.u1 + cl;
    let tendency = |pi_b: Aff, pi_l: f64, psip: f64| {
        let alpha_l = (pi_l - 2.0 * cl * psip) / (2.0 * cl);
        let alpha_b = pi_b / (4.0 * c * c) * (0.5 * (beta - rc.beta_l))
            + (alpha_l + 0.5 * (beta - rc.beta_l) * pi_l / (4.0 * cl * cl));
        pi_b * (-beta / (2.0 * c)) + alpha_b * psi1
    };
    let Prim { rho, p11, p12, .. } = *v;
    let srp = (rho * p11).sqrt();
    let lhs2 = u2_t + p12_t * (SQRT3 / srp) - 0.5 * SQRT3 * p12 / srp * (rho_t / rho + p11_t / p11);
    let lhs3 = p12_t / rho.powi(3) - 3.0 * p12 * rho_t / rho.powi(4);
    let e2 = lhs2 - tendency(pis.0, rc.pi2, rc.psi2p);
    let e3 = lhs3 - tendency(pis.1, rc.pi3, rc.psi3p);
    (e2.as_pair(), e3.as_pair())
}

/// `p22_t` from the transport of `S2 = det(p)/rho^4` through the fan.
pub(crate) fn fan_p22_t(v: &Prim, s2_t: f64, rho_t: f64, p11_t: f64, p12_t: f64) -> f64 {
    let Prim { rho, p11, p12, p22, .. } = *v;
    let r4 = rho.powi(4);
    (s2_t - p22 * p11_t / r4 + 2.0 * p12 * p12_t / r4 + 4.0 * v.det() * rho_t / (r4 * rho)) * r4 / p11
}

/// x- and t-derivatives of `(u2, p12)` in a smooth region given the material
/// derivatives `X = Du2/Dt`, `Y = Dp12/Dt`.
pub(crate) fn transverse(v: &Prim, y1: f64, x: Aff, y: Aff) -> [Aff; 4] {
    let p = v.p11;
    let u2_x = -(y - 2.0 * v.p12 * y1 / (3.0 * p)) / p;
    let p12_x = -x * v.rho;
    [x - u2_x * v.u1, u2_x, y - p12_x * v.u1, p12_x]
}

/// Material derivative of `p22` in a smooth region.
pub(crate) fn material_p22(v: &Prim, y1: f64, y: f64) -> f64 {
    let p = v.p11;
    (p * v.p22 - 4.0 * v.p12 * v.p12) / (3.0 * p * p) * y1 + 2.0 * v.p12 / p * y
}

/// Partials of the shock function and Hugoniot density plus directional
/// derivatives of the jump invariants on the ahead side.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ShockDirectionalData {
    pub sigma: f64,
    pub phi1: f64,
    pub phi2: f64,
    pub phi3: f64,
    pub h1: f64,
    pub h2: f64,
    pub h3: f64,
    /// `D_sigma` of the ahead primitive state.
    pub dsig_ahead: Vec6,
    pub dsig_sigma: f64,
    pub dsig_gamma_m2: f64,
    pub dsig_gamma_e12: f64,
    pub dsig_gamma_e22: f64,
}

impl ShockDirectionalData {
    fn new(vbar: &Prim, dvbar: &Vec6, wx: f64, p: f64) -> Self {
        let (rb, pb) = (vbar.rho, vbar.p11);
        let sigma = crate::riemann::shock_speed(p, vbar, crate::riemann::Side::Left);
        let q = rb * (2.0 * p + pb);
        let q32 = q * q.sqrt();
        let den = (p + 2.0 * pb).powi(2);
        let vt = smooth_time_derivative(vbar, dvbar, wx);
        let mut dsig_ahead = [0.0; 6];
        for k in 0..6 {
            dsig_ahead[k] = vt[k] + sigma * dvbar[k];
        }
        ShockDirectionalData {
            sigma,
            phi1: rb * (p + 2.0 * pb) / q32,
            phi2: -rb * (5.0 * p + pb) / (2.0 * q32),
            phi3: -0.5 * (p - pb) * (2.0 * p + pb) / q32,
            h1: 3.0 * rb * pb / den,
            h2: -3.0 * rb * p / den,
            h3: (2.0 * p + pb) / (p + 2.0 * pb),
            dsig_ahead,
            dsig_sigma: 0.0,
            dsig_gamma_m2: 0.0,
            dsig_gamma_e12: 0.0,
            dsig_gamma_e22: 0.0,
        }
    }

    /// Fill in the shock acceleration and the ahead-side invariant
    /// derivatives once `D_sigma p11*` is known.
    fn complete(&mut self, vbar: &Prim, p: f64, dsig_p: f64) {
        let g = ((2.0 * p + vbar.p11) / vbar.rho).sqrt();
        let d = &self.dsig_ahead;
        self.dsig_sigma = d[1]
            - (-0.5 * g / vbar.rho * d[0] + d[3] / (2.0 * vbar.rho * g) + dsig_p / (vbar.rho * g));
        let s = self.sigma;
        let dot = |(gr, gs): (Vec6, f64)| (0..6).map(|k| gr[k] * d[k]).sum::<f64>() + gs * self.dsig_sigma;
        self.dsig_gamma_m2 = dot(grad_gamma_m2(vbar, s));
        self.dsig_gamma_e12 = dot(grad_gamma_e12(vbar, s));
        self.dsig_gamma_e22 = dot(grad_gamma_e22(vbar, s));
    }
}

fn grad_gamma_m2(v: &Prim, s: f64) -> (Vec6, f64) {
    let w = v.u1 - s;
    ([v.u2 * w, v.rho * v.u2, v.rho * w, 0.0, 1.0, 0.0], -v.rho * v.u2)
}

fn grad_gamma_e12(v: &Prim, s: f64) -> (Vec6, f64) {
    let u = v.to_cons();
    let w = v.u1 - s;
    (
        [
            0.5 * v.u1 * v.u2 * w,
            2.0 * u.e12 - 0.5 * v.rho * v.u2 * s,
            u.e11 - 0.5 * v.rho * v.u1 * s,
            0.5 * v.u2,
            v.u1 - 0.5 * s,
            0.0,
        ],
        -u.e12,
    )
}

fn grad_gamma_e22(v: &Prim, s: f64) -> (Vec6, f64) {
    let u = v.to_cons();
    let w = v.u1 - s;
    (
        [0.5 * v.u2 * v.u2 * w, u.e22, v.rho * v.u2 * w + v.p12, 0.0, v.u2, 0.5 * w],
        -u.e22,
    )
}

/// Equation for `(Du1/Dt, Dp11/Dt)*` contributed by the left wave.
pub fn u1_p11_pair(inp: &GrpInput, fan: &RiemannFan) -> LinearPair {
    let vs = fan.v_star_l;
    let (u, p) = (fan.u1_star, fan.p11_star);
    match fan.left_kind {
        WaveKind::Rarefaction => {
            let vl = inp.vl;
            let cl = vl.sound_speed();
            let cs = vs.sound_speed();
            let rc = RarefactionCharacteristics::new(&vl, &inp.dvl, u - cs);
            let psi1 = vl.u1 + cl;
            let k = rc.k(&vl);
            LinearPair {
                a: 1.0 + u / cs,
                b: u / (3.0 * p) + 1.0 / (vs.rho * cs),
                d: 0.125 * k * psi1 * (3.0 * cl * cl + cs * cs) - rc.psi1p * psi1 - 0.5 * (1.0 + u / cs) * inp.wx0,
            }
        }
        WaveKind::Shock => {
            let sd = ShockDirectionalData::new(&inp.vl, &inp.dvl, inp.wx0, p);
            let w = u - sd.sigma;
            let d = &sd.dsig_ahead;
            LinearPair {
                a: 1.0 + sd.phi1 * vs.rho * w,
                b: w / (3.0 * p) + sd.phi1,
                d: d[1] - sd.phi2 * d[3] - sd.phi3 * d[0] - sd.phi1 * vs.rho * w * 0.5 * inp.wx0,
            }
        }
    }
}

/// Derivatives in the region `*L`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StarSide {
    pub v: Prim,
    pub x1: f64,
    pub y1: f64,
    /// `Du2/Dt` and `Dp12/Dt`.
    pub xt: f64,
    pub yt: f64,
    pub rho_t: f64,
    pub rho_x: f64,
    pub u1_t: f64,
    pub u1_x: f64,
    pub u2_t: f64,
    pub u2_x: f64,
    pub p11_t: f64,
    pub p11_x: f64,
    pub p12_t: f64,
    pub p12_x: f64,
    pub p22_t: f64,
    /// Material derivative of `p22`.
    pub dp22: f64,
}

impl StarSide {
    pub fn dvdt(&self) -> Vec6 {
        [self.rho_t, self.u1_t, self.u2_t, self.p11_t, self.p12_t, self.p22_t]
    }
}

/// Complete the `*L` derivatives once `(Du1/Dt, Dp11/Dt)*` are known.
pub fn star_side(inp: &GrpInput, fan: &RiemannFan, x1: f64, y1: f64) -> Result<StarSide> {
    let v = fan.v_star_l;
    let (u, p, rho) = (fan.u1_star, fan.p11_star, v.rho);
    let c = v.sound_speed();
    let u1_x = -y1 / (3.0 * p);
    let p11_x = -rho * (x1 + 0.5 * inp.wx0);
    let u1_t = x1 - u * u1_x;
    let p11_t = y1 - u * p11_x;
    let vl = inp.vl;
    let cl = vl.sound_speed();
    match fan.left_kind {
        WaveKind::Rarefaction => {
            let beta = u - c;
            let rc = RarefactionCharacteristics::new(&vl, &inp.dvl, beta);
            let s1x = rc.s1p * c / cl;
            let r3 = rho.powi(3);
            let rho_t = (p11_t + u * r3 * s1x) / (c * c);
            let rho_x = (p11_x - r3 * s1x) / (c * c);
            let [u2_t, u2_x, p12_t, p12_x] = transverse(&v, y1, Aff::X, Aff::Y);
            let d = [
                Aff::konst(rho_x),
                Aff::konst(u1_x),
                u2_x,
                Aff::konst(p11_x),
                p12_x,
                Aff::konst(0.0),
            ];
            let (e2, e3) =
                fan_transverse_equations(&rc, &vl, &v, beta, (pi2(&v, &d), pi3(&v, &d)), u2_t, p12_t, rho_t, p11_t);
            let (xt, yt) = solve2(e2, e3, "left rarefaction transverse")?;
            let [u2_t, u2_x, p12_t, p12_x] = [u2_t, u2_x, p12_t, p12_x].map(|a| a.eval(xt, yt));
            let s2_t = -u * rc.s2p * c / cl;
            let p22_t = fan_p22_t(&v, s2_t, rho_t, p11_t, p12_t);
            Ok(StarSide {
                v,
                x1,
                y1,
                xt,
                yt,
                rho_t,
                rho_x,
                u1_t,
                u1_x,
                u2_t,
                u2_x,
                p11_t,
                p11_x,
                p12_t,
                p12_x,
                p22_t,
                dp22: material_p22(&v, y1, yt),
            })
        }
        WaveKind::Shock => {
            let mut sd = ShockDirectionalData::new(&vl, &inp.dvl, inp.wx0, p);
            let sigma = sd.sigma;
            let w = u - sigma;
            let dsig_u = x1 + w * y1 / (3.0 * p);
            let dsig_p = y1 + rho * w * (x1 + 0.5 * inp.wx0);
            sd.complete(&vl, p, dsig_p);
            let ds = &sd.dsig_ahead;
            let dsig_rho = sd.h1 * dsig_p + sd.h2 * ds[3] + sd.h3 * ds[0];
            let rho_x = (dsig_rho - y1 / (c * c)) / (sigma - u);
            let rho_t = y1 / (c * c) - u * rho_x;
            let [_, u2_x, _, p12_x] = transverse(&v, y1, Aff::X, Aff::Y);
            let behind = [
                Aff::konst(dsig_rho),
                Aff::konst(dsig_u),
                Aff::X + u2_x * (sigma - u),
                Aff::konst(dsig_p),
                Aff::Y + p12_x * (sigma - u),
            ];
            let balance = |(g, gs): (Vec6, f64), ahead: f64| {
                let mut acc = Aff::konst(gs * sd.dsig_sigma - ahead);
                for k in 0..5 {
                    acc = acc + behind[k] * g[k];
                }
                acc
            };
            let e_m2 = balance(grad_gamma_m2(&v, sigma), sd.dsig_gamma_m2);
            let e_e12 = balance(grad_gamma_e12(&v, sigma), sd.dsig_gamma_e12);
            let (xt, yt) = solve2(e_m2.as_pair(), e_e12.as_pair(), "left shock transverse")?;
            let [u2_t, u2_x, p12_t, p12_x] = transverse(&v, y1, Aff::X, Aff::Y).map(|a| a.eval(xt, yt));
            let (g22, gs22) = grad_gamma_e22(&v, sigma);
            let known = balance((g22, gs22), sd.dsig_gamma_e22).eval(xt, yt);
            let dsig_p22 = -known / g22[5];
            let dp22 = material_p22(&v, y1, yt);
            let p22_t = (u * dsig_p22 - sigma * dp22) / w;
            Ok(StarSide {
                v,
                x1,
                y1,
                xt,
                yt,
                rho_t,
                rho_x,
                u1_t,
                u1_x,
                u2_t,
                u2_x,
                p11_t,
                p11_x,
                p12_t,
                p12_x,
                p22_t,
                dp22,
            })
        }
    }
}
