//! Generalized Riemann problem: interface value and its limiting time
//! derivative for piecewise-linear data.
//!
//! All wave relations are written for the left side. Right-side quantities
//! come from the mirrored problem (see [`GrpInput::mirrored`]), where time
//! derivatives transform with the parity of [`Prim::mirrored`] and
//! x-derivatives pick up an extra sign.

mod acoustic;
mod affine;
mod middle;
mod side;
mod sonic;

pub use acoustic::{acoustic_derivatives, AcousticDerivatives};
pub use affine::{solve2, Aff, LinearPair};
pub use side::{u1_p11_pair, RarefactionCharacteristics, ShockDirectionalData, StarSide};

use crate::error::Result;
use crate::riemann::{Region, RiemannFan};
use crate::state::{orientation, smooth_time_derivative, Prim, Vec6};

const PARITY: Vec6 = [1.0, -1.0, -1.0, 1.0, 1.0, 1.0];

/// Relative width of the band in which the two interface states count as equal.
pub const ACOUSTIC_EPS: f64 = 1e-8;

/// Reflect a time-derivative vector.
pub fn mirror_dt(d: &Vec6) -> Vec6 {
    std::array::from_fn(|k| PARITY[k] * d[k])
}

/// Reflect an x-derivative vector.
pub fn mirror_dx(d: &Vec6) -> Vec6 {
    std::array::from_fn(|k| -PARITY[k] * d[k])
}

/// Piecewise-linear data around the interface `x = 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GrpInput {
    pub vl: Prim,
    pub vr: Prim,
    pub dvl: Vec6,
    pub dvr: Vec6,
    /// `W_x(0)`.
    pub wx0: f64,
}

impl GrpInput {
    pub fn new(vl: Prim, vr: Prim, dvl: Vec6, dvr: Vec6, wx0: f64) -> Self {
        GrpInput { vl, vr, dvl, dvr, wx0 }
    }

    fn flat(&self) -> [f64; 25] {
        let mut a = [0.0; 25];
        a[..6].copy_from_slice(&self.vl.to_array());
        a[6..12].copy_from_slice(&self.vr.to_array());
        a[12..18].copy_from_slice(&self.dvl);
        a[18..24].copy_from_slice(&self.dvr);
        a[24] = self.wx0;
        a
    }

    /// The same problem seen after `x -> -x`, `y -> -y`.
    pub fn mirrored(&self) -> GrpInput {
        GrpInput {
            vl: self.vr.mirrored(),
            vr: self.vl.mirrored(),
            dvl: mirror_dx(&self.dvr),
            dvr: mirror_dx(&self.dvl),
            wx0: -self.wx0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseTag {
    Acoustic,
    SonicLeft,
    SonicRight,
    Nonsonic,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GrpResult {
    pub v_interface: Prim,
    pub dvdt: Vec6,
    pub case_tag: CaseTag,
    /// Region of the fan containing the t-axis.
    pub region: Region,
}

impl GrpResult {
    /// Mirror the result of a reflected problem back.
    pub fn mirrored(&self) -> GrpResult {
        GrpResult {
            v_interface: self.v_interface.mirrored(),
            dvdt: mirror_dt(&self.dvdt),
            case_tag: match self.case_tag {
                CaseTag::SonicLeft => CaseTag::SonicRight,
                CaseTag::SonicRight => CaseTag::SonicLeft,
                t => t,
            },
            region: self.region.mirrored(),
        }
    }

    /// `V* + (dt/2) dV/dt`, the midpoint state of the interface.
    pub fn midpoint(&self, dt: f64) -> Prim {
        self.v_interface.add_scaled(&self.dvdt, 0.5 * dt)
    }
}

/// Whether the two interface states coincide within `ACOUSTIC_EPS`.
pub fn is_acoustic(vl: &Prim, vr: &Prim) -> bool {
    let rho = 0.5 * (vl.rho + vr.rho);
    let pt = 0.5 * (vl.p11 + vl.p22 + vr.p11 + vr.p22);
    let c = (1.5 * pt / rho).sqrt();
    let scales = [rho, c, c, pt, pt, pt];
    let (a, b) = (vl.to_array(), vr.to_array());
    (0..6).all(|k| (a[k] - b[k]).abs() <= ACOUSTIC_EPS * scales[k])
}

pub fn classify(inp: &GrpInput, fan: &RiemannFan) -> CaseTag {
    if is_acoustic(&inp.vl, &inp.vr) {
        return CaseTag::Acoustic;
    }
    match fan.region(0.0) {
        Region::FanLeft => CaseTag::SonicLeft,
        Region::FanRight => CaseTag::SonicRight,
        _ => CaseTag::Nonsonic,
    }
}

/// Time derivatives of all four intermediate regions in the nonsonic case.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NonsonicDerivatives {
    /// `(Du1/Dt, Dp11/Dt)` shared by the intermediate regions.
    pub du1_dp11: (f64, f64),
    /// `(Du2/Dt, Dp12/Dt)` in the regions between the shear waves.
    pub du2_dp12_mid: (f64, f64),
    pub star_l: Vec6,
    pub star2_l: Vec6,
    pub star2_r: Vec6,
    pub star_r: Vec6,
}

struct Sides {
    fan: RiemannFan,
    mfan: RiemannFan,
    minp: GrpInput,
    x1: f64,
    y1: f64,
}

fn u1_p11(inp: &GrpInput, fan: &RiemannFan) -> Result<Sides> {
    let minp = inp.mirrored();
    let mfan = fan.mirrored();
    let pl = u1_p11_pair(inp, fan);
    let pr = u1_p11_pair(&minp, &mfan).flip_x();
    let (x1, y1) = solve2(pl, pr, "u1/p11 system")?;
    Ok(Sides { fan: fan.clone(), mfan, minp, x1, y1 })
}

/// `(Du1/Dt, Dp11/Dt)*` together with the one-sided `(du1/dt, dp11/dt)*K`.
pub fn nonsonic_u1_p11(inp: &GrpInput, fan: &RiemannFan) -> Result<((f64, f64), [f64; 4])> {
    let s = u1_p11(inp, fan)?;
    let u = fan.u1_star;
    let p = fan.p11_star;
    let u1_t = s.x1 + u * s.y1 / (3.0 * p);
    let p_t = |rho: f64| s.y1 + rho * u * (s.x1 + 0.5 * inp.wx0);
    Ok(((s.x1, s.y1), [u1_t, p_t(fan.v_star_l.rho), u1_t, p_t(fan.v_star_r.rho)]))
}

pub fn nonsonic_all(inp: &GrpInput, fan: &RiemannFan) -> Result<NonsonicDerivatives> {
    let s = u1_p11(inp, fan)?;
    let sl = side::star_side(inp, &s.fan, s.x1, s.y1)?;
    let sr = side::star_side(&s.minp, &s.mfan, -s.x1, s.y1)?;
    let ml = middle::middle_pair(&s.fan, &sl);
    let mr = middle::middle_pair(&s.mfan, &sr).flip_x();
    let (x2, y2) = solve2(ml, mr, "shear system")?;
    Ok(NonsonicDerivatives {
        du1_dp11: (s.x1, s.y1),
        du2_dp12_mid: (x2, y2),
        star_l: sl.dvdt(),
        star2_l: middle::star2_dvdt(&s.fan, &sl, x2, y2),
        star2_r: mirror_dt(&middle::star2_dvdt(&s.mfan, &sr, -x2, y2)),
        star_r: mirror_dt(&sr.dvdt()),
    })
}

fn nonsonic_region(inp: &GrpInput, fan: &RiemannFan, region: Region) -> Result<Vec6> {
    match region {
        Region::Left => Ok(smooth_time_derivative(&inp.vl, &inp.dvl, inp.wx0)),
        Region::Right => Ok(smooth_time_derivative(&inp.vr, &inp.dvr, inp.wx0)),
        Region::StarLeft => {
            let s = u1_p11(inp, fan)?;
            Ok(side::star_side(inp, &s.fan, s.x1, s.y1)?.dvdt())
        }
        Region::StarRight => {
            let s = u1_p11(inp, fan)?;
            Ok(mirror_dt(&side::star_side(&s.minp, &s.mfan, -s.x1, s.y1)?.dvdt()))
        }
        Region::Star2Left => Ok(nonsonic_all(inp, fan)?.star2_l),
        Region::Star2Right => Ok(nonsonic_all(inp, fan)?.star2_r),
        Region::FanLeft | Region::FanRight => unreachable!("fan regions are sonic"),
    }
}

/// Resolve a sonic configuration on the given side.
pub fn sonic_resolve(inp: &GrpInput, fan: &RiemannFan, tag: CaseTag) -> Result<GrpResult> {
    match tag {
        CaseTag::SonicRight => {
            let r = sonic_resolve(&inp.mirrored(), &fan.mirrored(), CaseTag::SonicLeft)?;
            Ok(r.mirrored())
        }
        _ => {
            let (v, dvdt) = sonic::sonic_left(inp, fan)?;
            Ok(GrpResult { v_interface: v, dvdt, case_tag: CaseTag::SonicLeft, region: Region::FanLeft })
        }
    }
}

fn acoustic_region(v: &Prim) -> Region {
    let c = v.sound_speed();
    let u = v.u1;
    let cs = c / 3f64.sqrt();
    if u >= 0.0 {
        if u - c > 0.0 {
            Region::Left
        } else if u - cs > 0.0 {
            Region::StarLeft
        } else {
            Region::Star2Left
        }
    } else if u + c < 0.0 {
        Region::Right
    } else if u + cs < 0.0 {
        Region::StarRight
    } else {
        Region::Star2Right
    }
}

/// Closed-form resolution when the two interface states coincide.
pub fn acoustic_resolve(inp: &GrpInput) -> GrpResult {
    let v = inp.vl;
    let d = acoustic_derivatives(&v, &inp.dvl, &inp.dvr, inp.wx0);
    let region = acoustic_region(&v);
    let dvdt = match region {
        Region::Left => d.left,
        Region::StarLeft => d.star_l,
        Region::Star2Left => d.star2_l,
        Region::Star2Right => d.star2_r,
        Region::StarRight => d.star_r,
        _ => d.right,
    };
    GrpResult { v_interface: v, dvdt, case_tag: CaseTag::Acoustic, region }
}

/// Full GRP resolution at one interface.
///
/// Of the problem and its mirror image the one first in [`orientation`]
/// order is solved, so mirrored inputs give exactly mirrored results.
pub fn resolve(inp: &GrpInput) -> Result<GrpResult> {
    let m = inp.mirrored();
    match orientation(&inp.flat(), &m.flat()) {
        std::cmp::Ordering::Less => resolve_as_given(inp),
        std::cmp::Ordering::Greater => Ok(resolve_as_given(&m)?.mirrored()),
        std::cmp::Ordering::Equal => {
            let r = resolve_as_given(inp)?;
            let v = r.v_interface.to_array();
            let mv = r.v_interface.mirrored().to_array();
            let md = mirror_dt(&r.dvdt);
            Ok(GrpResult {
                v_interface: Prim::from_array(std::array::from_fn(|k| 0.5 * (v[k] + mv[k]))),
                dvdt: std::array::from_fn(|k| 0.5 * (r.dvdt[k] + md[k])),
                ..r
            })
        }
    }
}

fn resolve_as_given(inp: &GrpInput) -> Result<GrpResult> {
    if is_acoustic(&inp.vl, &inp.vr) {
        inp.vl.check()?;
        return Ok(acoustic_resolve(inp));
    }
    let fan = RiemannFan::solve(&inp.vl, &inp.vr)?;
    resolve_with_fan(inp, &fan)
}

/// Resolution reusing an already solved Riemann fan.
pub fn resolve_with_fan(inp: &GrpInput, fan: &RiemannFan) -> Result<GrpResult> {
    let tag = classify(inp, fan);
    match tag {
        CaseTag::Acoustic => Ok(acoustic_resolve(inp)),
        CaseTag::SonicLeft | CaseTag::SonicRight => sonic_resolve(inp, fan, tag),
        CaseTag::Nonsonic => {
            let region = fan.region(0.0);
            let dvdt = nonsonic_region(inp, fan, region)?;
            Ok(GrpResult { v_interface: fan.sample(0.0), dvdt, case_tag: tag, region })
        }
    }
}
