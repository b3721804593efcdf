//! Exact solver for the local Riemann problem of the x-split system.
//!
//! The six-wave fan is built from the star pressure `p11*` and contact
//! velocity `u1*`. Right-side quantities are obtained from the left-side
//! routines through the reflection `Prim::mirrored`, which maps the problem
//! `(V_L, V_R)` onto `(M V_R, M V_L)`.

use crate::error::{Error, Result};
use crate::state::Prim;

const SQRT3: f64 = 1.732_050_807_568_877_2;
const MAX_ITER: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Kind of the genuinely nonlinear waves (families 1 and 6).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WaveKind {
    Rarefaction,
    Shock,
}

/// Constant-state or fan region containing a given ray `x/t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    Left,
    FanLeft,
    StarLeft,
    Star2Left,
    Star2Right,
    StarRight,
    FanRight,
    Right,
}

impl Region {
    pub fn mirrored(self) -> Region {
        match self {
            Region::Left => Region::Right,
            Region::FanLeft => Region::FanRight,
            Region::StarLeft => Region::StarRight,
            Region::Star2Left => Region::Star2Right,
            Region::Star2Right => Region::Star2Left,
            Region::StarRight => Region::StarLeft,
            Region::FanRight => Region::FanLeft,
            Region::Right => Region::Left,
        }
    }
}

/// The complete self-similar solution of one Riemann problem.
#[derive(Clone, Debug, PartialEq)]
pub struct RiemannFan {
    pub vl: Prim,
    pub vr: Prim,
    pub p11_star: f64,
    pub u1_star: f64,
    pub v_star_l: Prim,
    pub v_star2_l: Prim,
    pub v_star2_r: Prim,
    pub v_star_r: Prim,
    pub left_kind: WaveKind,
    pub right_kind: WaveKind,
    pub sigma_l: Option<f64>,
    pub sigma_r: Option<f64>,
    pub s_hl: Option<f64>,
    pub s_tl: Option<f64>,
    pub s_hr: Option<f64>,
    pub s_tr: Option<f64>,
    pub lambda2: f64,
    pub lambda5: f64,
}

/// `f_K(p)` and `df_K/dp`; the same expression serves both sides.
pub fn pressure_function(p: f64, vk: &Prim) -> (f64, f64) {
    let pk = vk.p11;
    if p > pk {
        let q = vk.rho * (2.0 * p + pk);
        let sq = q.sqrt();
        ((p - pk) / sq, vk.rho * (p + 2.0 * pk) / (q * sq))
    } else {
        let c = vk.sound_speed();
        let r = (p / pk).cbrt();
        (c * (r - 1.0), c * r / (3.0 * p))
    }
}

fn initial_guess(vl: &Prim, vr: &Prim) -> f64 {
    let (cl, cr) = (vl.sound_speed(), vr.sound_speed());
    let du = vr.u1 - vl.u1;
    let pmin = vl.p11.min(vr.p11);
    let pmax = vl.p11.max(vr.p11);
    let ppv = 0.5 * (vl.p11 + vr.p11) - 0.125 * du * (vl.rho + vr.rho) * (cl + cr);
    let guess = if pmax / pmin < 2.0 && ppv >= pmin && ppv <= pmax {
        ppv
    } else if ppv < pmin {
        let num = cl + cr - du;
        let den = cl / vl.p11.cbrt() + cr / vr.p11.cbrt();
        if num > 0.0 { (num / den).powi(3) } else { 0.0 }
    } else {
        let p0 = ppv.max(pmin);
        let gl = 1.0 / (vl.rho * (2.0 * p0 + vl.p11)).sqrt();
        let gr = 1.0 / (vr.rho * (2.0 * p0 + vr.p11)).sqrt();
        (gl * vl.p11 + gr * vr.p11 - du) / (gl + gr)
    };
    guess.max(1e-10)
}

/// Star pressure and contact velocity by safeguarded Newton iteration.
pub fn solve_star(vl: &Prim, vr: &Prim) -> Result<(f64, f64)> {
    let du = vr.u1 - vl.u1;
    let scale = 1f64.max(vl.sound_speed() + vr.sound_speed());
    let total = |p: f64| {
        let (fl, dl) = pressure_function(p, vl);
        let (fr, dr) = pressure_function(p, vr);
        (fl + fr + du, dl + dr, fl, fr)
    };
    // f(0+) = -(c_L + c_R) + du; a nonnegative value means vacuum
    if du >= vl.sound_speed() + vr.sound_speed() {
        return Err(Error::NonPositiveStar(0.0));
    }
    let mut lo = 0.0;
    let mut hi = f64::INFINITY;
    let mut p = initial_guess(vl, vr);
    let mut last = f64::NAN;
    for _ in 0..MAX_ITER {
        let (f, df, fl, fr) = total(p);
        if !f.is_finite() {
            return Err(Error::NoConvergence { iterations: 0, last: p });
        }
        if f.abs() <= 1e-12 * scale {
            return Ok((p, 0.5 * (vl.u1 + vr.u1) + 0.5 * (fr - fl)));
        }
        if f < 0.0 {
            lo = p;
        } else {
            hi = p;
        }
        let mut next = p - f / df;
        if !(next > lo && next < hi) {
            next = if hi.is_finite() { 0.5 * (lo + hi) } else { 2.0 * p.max(lo) };
        }
        if (next - p).abs() <= 4.0 * f64::EPSILON * p {
            // stagnated at the closest representable root
            let (_, _, fl, fr) = total(next);
            return Ok((next, 0.5 * (vl.u1 + vr.u1) + 0.5 * (fr - fl)));
        }
        last = f;
        p = next;
    }
    if p <= 0.0 {
        return Err(Error::NonPositiveStar(p));
    }
    Err(Error::NoConvergence { iterations: MAX_ITER, last })
}

/// Speed of the family-1 (left) or family-6 (right) shock.
pub fn shock_speed(p_star: f64, vk: &Prim, side: Side) -> f64 {
    let a = ((2.0 * p_star + vk.p11) / vk.rho).sqrt();
    match side {
        Side::Left => vk.u1 - a,
        Side::Right => vk.u1 + a,
    }
}

fn star_left(p: f64, u: f64, vk: &Prim) -> Result<(Prim, WaveKind)> {
    let Prim { rho, u1, u2, p11, p12, p22 } = *vk;
    if p > p11 {
        let rs = rho * (2.0 * p + p11) / (p + 2.0 * p11);
        let sigma = shock_speed(p, vk, Side::Left);
        let e11 = 0.5 * (p + rs * u * u);
        let (a11, a12) = (rs * (u - sigma), 1.0);
        let (a21, a22) = (e11 - 0.5 * rs * u * sigma, u - 0.5 * sigma);
        let det = a11 * a22 - a12 * a21;
        if det.abs() < 1e-14 {
            return Err(Error::SingularStarSystem(det));
        }
        let e12 = 0.5 * (p12 + rho * u1 * u2);
        let e22 = 0.5 * (p22 + rho * u2 * u2);
        let b1 = rho * u2 * (u1 - sigma) + p12;
        let b2 = e12 * (u1 - sigma) + 0.5 * (p11 * u2 + p12 * u1);
        let u2s = (b1 * a22 - a12 * b2) / det;
        let p12s = (a11 * b2 - a21 * b1) / det;
        let e22s = (e22 * (u1 - sigma) + p12 * u2 - p12s * u2s) / (u - sigma);
        let p22s = 2.0 * e22s - rs * u2s * u2s;
        Ok((Prim::new(rs, u, u2s, p, p12s, p22s), WaveKind::Shock))
    } else {
        let ratio = (p / p11).cbrt();
        let rs = rho * ratio;
        let p12s = p12 * ratio.powi(3);
        let psi2 = u2 + SQRT3 * p12 / (rho * p11).sqrt();
        let u2s = psi2 - SQRT3 * p12s / (rs * p).sqrt();
        let dets = vk.det() * ratio.powi(4);
        let p22s = (dets + p12s * p12s) / p;
        Ok((Prim::new(rs, u, u2s, p, p12s, p22s), WaveKind::Rarefaction))
    }
}

/// `V_{*K}`, the state adjacent to the outer wave on side `side`.
pub fn star_state_side(p_star: f64, u1_star: f64, vk: &Prim, side: Side) -> Result<(Prim, WaveKind)> {
    match side {
        Side::Left => star_left(p_star, u1_star, vk),
        Side::Right => {
            let (m, kind) = star_left(p_star, -u1_star, &vk.mirrored())?;
            Ok((m.mirrored(), kind))
        }
    }
}

/// `(V_{**L}, V_{**R})` across the two shear waves.
pub fn middle_states(v_star_l: &Prim, v_star_r: &Prim, p_star: f64) -> (Prim, Prim) {
    let sl = (v_star_l.rho * p_star).sqrt();
    let sr = (v_star_r.rho * p_star).sqrt();
    let a3l = v_star_l.u2 + v_star_l.p12 / sl;
    let a3r = v_star_r.u2 - v_star_r.p12 / sr;
    let p12 = (a3l - a3r) * (v_star_l.rho * v_star_r.rho * p_star).sqrt()
        / (v_star_l.rho.sqrt() + v_star_r.rho.sqrt());
    let u2 = a3l - p12 / sl;
    let side = |v: &Prim| Prim { u2, p12, p22: (v.det() + p12 * p12) / p_star, ..*v };
    (side(v_star_l), side(v_star_r))
}

impl RiemannFan {
    /// Solve the Riemann problem with data `vl | vr`.
    pub fn solve(vl: &Prim, vr: &Prim) -> Result<RiemannFan> {
        vl.check()?;
        vr.check()?;
        let (p, u) = solve_star(vl, vr)?;
        if p <= 0.0 {
            return Err(Error::NonPositiveStar(p));
        }
        let (sl, left_kind) = star_state_side(p, u, vl, Side::Left)?;
        let (sr, right_kind) = star_state_side(p, u, vr, Side::Right)?;
        let (m_l, m_r) = middle_states(&sl, &sr, p);
        let (mut sigma_l, mut s_hl, mut s_tl) = (None, None, None);
        match left_kind {
            WaveKind::Shock => sigma_l = Some(shock_speed(p, vl, Side::Left)),
            WaveKind::Rarefaction => {
                s_hl = Some(vl.u1 - vl.sound_speed());
                s_tl = Some(u - sl.sound_speed());
            }
        }
        let (mut sigma_r, mut s_hr, mut s_tr) = (None, None, None);
        match right_kind {
            WaveKind::Shock => sigma_r = Some(shock_speed(p, vr, Side::Right)),
            WaveKind::Rarefaction => {
                s_hr = Some(vr.u1 + vr.sound_speed());
                s_tr = Some(u + sr.sound_speed());
            }
        }
        Ok(RiemannFan {
            vl: *vl,
            vr: *vr,
            p11_star: p,
            u1_star: u,
            v_star_l: sl,
            v_star2_l: m_l,
            v_star2_r: m_r,
            v_star_r: sr,
            left_kind,
            right_kind,
            sigma_l,
            sigma_r,
            s_hl,
            s_tl,
            s_hr,
            s_tr,
            lambda2: u - sl.sound_speed() / SQRT3,
            lambda5: u + sr.sound_speed() / SQRT3,
        })
    }

    /// Fan of the reflected problem `(M V_R, M V_L)`.
    pub fn mirrored(&self) -> RiemannFan {
        let neg = |o: Option<f64>| o.map(|s| -s);
        RiemannFan {
            vl: self.vr.mirrored(),
            vr: self.vl.mirrored(),
            p11_star: self.p11_star,
            u1_star: -self.u1_star,
            v_star_l: self.v_star_r.mirrored(),
            v_star2_l: self.v_star2_r.mirrored(),
            v_star2_r: self.v_star2_l.mirrored(),
            v_star_r: self.v_star_l.mirrored(),
            left_kind: self.right_kind,
            right_kind: self.left_kind,
            sigma_l: neg(self.sigma_r),
            sigma_r: neg(self.sigma_l),
            s_hl: neg(self.s_hr),
            s_tl: neg(self.s_tr),
            s_hr: neg(self.s_hl),
            s_tr: neg(self.s_tl),
            lambda2: -self.lambda5,
            lambda5: -self.lambda2,
        }
    }

    /// Outermost wave speeds `(left, right)`.
    pub fn outer_speeds(&self) -> (f64, f64) {
        let l = self.sigma_l.or(self.s_hl).unwrap_or(self.lambda2);
        let r = self.sigma_r.or(self.s_hr).unwrap_or(self.lambda5);
        (l, r)
    }

    /// Region of the fan containing the ray `xi = x/t`.
    pub fn region(&self, xi: f64) -> Region {
        if xi <= self.u1_star {
            match self.left_kind {
                WaveKind::Shock if xi < self.sigma_l.unwrap_or(f64::NEG_INFINITY) => return Region::Left,
                WaveKind::Rarefaction => {
                    if xi < self.s_hl.unwrap_or(f64::NEG_INFINITY) {
                        return Region::Left;
                    }
                    if xi <= self.s_tl.unwrap_or(f64::NEG_INFINITY) {
                        return Region::FanLeft;
                    }
                }
                _ => {}
            }
            if xi < self.lambda2 { Region::StarLeft } else { Region::Star2Left }
        } else {
            match self.right_kind {
                WaveKind::Shock if xi > self.sigma_r.unwrap_or(f64::INFINITY) => return Region::Right,
                WaveKind::Rarefaction => {
                    if xi > self.s_hr.unwrap_or(f64::INFINITY) {
                        return Region::Right;
                    }
                    if xi >= self.s_tr.unwrap_or(f64::INFINITY) {
                        return Region::FanRight;
                    }
                }
                _ => {}
            }
            if xi > self.lambda5 { Region::StarRight } else { Region::Star2Right }
        }
    }

    /// State inside the left rarefaction at ray `xi`.
    pub fn left_fan_state(&self, xi: f64) -> Prim {
        fan_left(&self.vl, xi)
    }

    pub fn right_fan_state(&self, xi: f64) -> Prim {
        fan_left(&self.vr.mirrored(), -xi).mirrored()
    }

    /// The self-similar solution `omega(xi; V_L, V_R)`.
    pub fn sample(&self, xi: f64) -> Prim {
        match self.region(xi) {
            Region::Left => self.vl,
            Region::FanLeft => self.left_fan_state(xi),
            Region::StarLeft => self.v_star_l,
            Region::Star2Left => self.v_star2_l,
            Region::Star2Right => self.v_star2_r,
            Region::StarRight => self.v_star_r,
            Region::FanRight => self.right_fan_state(xi),
            Region::Right => self.vr,
        }
    }
}

fn fan_left(vl: &Prim, xi: f64) -> Prim {
    let cl = vl.sound_speed();
    let psi1 = vl.u1 + cl;
    let c = 0.5 * (psi1 - xi);
    let ratio = c / cl;
    let rho = vl.rho * ratio;
    let r3 = ratio.powi(3);
    let p11 = vl.p11 * r3;
    let p12 = vl.p12 * r3;
    let psi2 = vl.u2 + SQRT3 * vl.p12 / (vl.rho * vl.p11).sqrt();
    let u2 = psi2 - SQRT3 * p12 / (rho * p11).sqrt();
    let p22 = (vl.det() * ratio.powi(4) + p12 * p12) / p11;
    Prim::new(rho, 0.5 * (psi1 + xi), u2, p11, p12, p22)
}
