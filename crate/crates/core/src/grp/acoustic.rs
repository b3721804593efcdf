//! Linear waves from a continuous state with a slope jump.

use crate::state::{smooth_time_derivative, Prim, Vec6};

const SQRT3: f64 = 1.732_050_807_568_877_2;

/// Time derivatives in every region of the linear fan.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AcousticDerivatives {
    pub left: Vec6,
    pub star_l: Vec6,
    pub star2_l: Vec6,
    pub star2_r: Vec6,
    pub star_r: Vec6,
    pub right: Vec6,
}

pub fn acoustic_derivatives(v: &Prim, dl: &Vec6, dr: &Vec6, wx: f64) -> AcousticDerivatives {
    let Prim { rho, u1: u, p11: p, p12, p22, .. } = *v;
    let c = v.sound_speed();
    let [rl, ul, u2l, pl, p12l, p22l] = *dl;
    let [rr, ur, u2r, pr, p12r, p22r] = *dr;

    let u1_t = ((-pl / rho - c * ul - 0.5 * wx) * (u + c) + (pr / rho - c * ur + 0.5 * wx) * (u - c)) / (2.0 * c);
    let p11_t = -0.5 * rho * c * ((ul + pl / (rho * c)) * (u + c) - (ur - pr / (rho * c)) * (u - c));
    let dp11 = 1.5 * p / c * ((pr - pl) / rho - c * (ul + ur));
    let rho_t = |pk: f64, rk: f64| (p11_t + u * (pk - c * c * rk)) / (c * c);
    let (rho_tl, rho_tr) = (rho_t(pl, rl), rho_t(pr, rr));

    let du2_l = -p12l / rho - c * p12 / p * ul - p12 * c / (3.0 * p * p) * dp11;
    let dp12_l = p12 / p * dp11 + p12 * ul - p * u2l;
    let du2_r = -p12r / rho + c * p12 / p * ur + p12 * c / (3.0 * p * p) * dp11;
    let dp12_r = p12 / p * dp11 + p12 * ur - p * u2r;
    let dp22 = |dp12: f64| (p * p22 - 4.0 * p12 * p12) / (3.0 * p * p) * dp11 + 2.0 * p12 / p * dp12;
    let (dp22_l, dp22_r) = (dp22(dp12_l), dp22(dp12_r));
    let p22x_l = (dp22_l + p22 * ul + 2.0 * p12 * u2l + c * p22l) / c;
    let p22x_r = (-p22 * ur - 2.0 * p12 * u2r + c * p22r - dp22_r) / c;

    let u2_t = |du2: f64, dp12: f64| du2 + u / p * (dp12 - 2.0 * p12 / (3.0 * p) * dp11);
    let p12_t = |du2: f64, dp12: f64| dp12 + rho * u * du2;

    let k = c / (SQRT3 * p);
    let du2_m = 0.5 * (du2_l + du2_r + k * (dp12_l - dp12_r));
    let dp12_m = 0.5 / k * (du2_l - du2_r + k * (dp12_l + dp12_r));
    let dp22_m = dp22(dp12_m);
    let p22x_ml = p22x_l + SQRT3 / c * (dp22_m - dp22_l);
    let p22x_mr = p22x_r + SQRT3 / c * (dp22_r - dp22_m);

    AcousticDerivatives {
        left: smooth_time_derivative(v, dl, wx),
        star_l: [rho_tl, u1_t, u2_t(du2_l, dp12_l), p11_t, p12_t(du2_l, dp12_l), dp22_l - u * p22x_l],
        star2_l: [rho_tl, u1_t, u2_t(du2_m, dp12_m), p11_t, p12_t(du2_m, dp12_m), dp22_m - u * p22x_ml],
        star2_r: [rho_tr, u1_t, u2_t(du2_m, dp12_m), p11_t, p12_t(du2_m, dp12_m), dp22_m - u * p22x_mr],
        star_r: [rho_tr, u1_t, u2_t(du2_r, dp12_r), p11_t, p12_t(du2_r, dp12_r), dp22_r - u * p22x_r],
        right: smooth_time_derivative(v, dr, wx),
    }
}
