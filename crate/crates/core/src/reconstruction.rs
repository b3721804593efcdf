//! Characteristic slope limiting and the conserved-to-primitive chain rule.

use crate::par::Exec;
use std::cmp::Ordering;

use crate::state::{dprim_dcons, eigensystem_x, mat_vec, orientation, Cons, Prim, Vec6};

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub enum Limiter {
    #[default]
    VanLeer,
    /// Three-argument minmod with the outer differences scaled by `theta`.
    Minmod { theta: f64 },
}


pub fn minmod3(a: f64, b: f64, c: f64) -> f64 {
    if a > 0.0 && b > 0.0 && c > 0.0 {
        a.min(b).min(c)
    } else if a < 0.0 && b < 0.0 && c < 0.0 {
        a.max(b).max(c)
    } else {
        0.0
    }
}

/// Van Leer slope from three point values.
pub fn van_leer(al: f64, am: f64, ar: f64, dx: f64) -> f64 {
    let d_rl = ar - al;
    if d_rl == 0.0 {
        return 0.0;
    }
    let f = (am - al) / d_rl;
    if f <= 0.0 || f >= 1.0 {
        return 0.0;
    }
    4.0 * f * (1.0 - f) * d_rl / (2.0 * dx)
}

/// `dV = (dV/dU) dU` at `v`.
pub fn conserved_to_primitive_slope(v: &Prim, du: &Vec6) -> Vec6 {
    mat_vec(&dprim_dcons(v), du)
}

fn sub(a: &Vec6, b: &Vec6) -> Vec6 {
    std::array::from_fn(|k| a[k] - b[k])
}

const SLOPE_PARITY: Vec6 = [-1.0, 1.0, 1.0, -1.0, -1.0, -1.0];

fn flat(cells: &[&Cons]) -> Vec<f64> {
    cells.iter().flat_map(|c| c.to_array()).collect()
}

/// Conserved slope of the middle cell of `(um, u0, up)`.
///
/// `mid` holds the predicted states at the left and right faces of the
/// cell; without them the minmod middle argument is the central difference.
/// The stencil and its mirror image are evaluated in one fixed orientation,
/// so mirrored data give exactly mirrored slopes.
pub fn limited_slope(limiter: Limiter, um: &Cons, u0: &Cons, up: &Cons, mid: Option<(&Cons, &Cons)>, dx: f64) -> Vec6 {
    let (mm, m0, mp) = (up.mirrored(), u0.mirrored(), um.mirrored());
    let mmid = mid.map(|(l, r)| (r.mirrored(), l.mirrored()));
    let mut a = flat(&[um, u0, up]);
    let mut b = flat(&[&mm, &m0, &mp]);
    if let (Some((l, r)), Some((ml, mr))) = (mid, &mmid) {
        a.extend(flat(&[l, r]));
        b.extend(flat(&[ml, mr]));
    }
    let flip = |s: Vec6| -> Vec6 { std::array::from_fn(|k| SLOPE_PARITY[k] * s[k]) };
    match orientation(&a, &b) {
        Ordering::Less => oriented_slope(limiter, um, u0, up, mid, dx),
        Ordering::Greater => flip(oriented_slope(limiter, &mm, &m0, &mp, mmid.as_ref().map(|(l, r)| (l, r)), dx)),
        Ordering::Equal => {
            let s = oriented_slope(limiter, um, u0, up, mid, dx);
            let f = flip(s);
            std::array::from_fn(|k| 0.5 * (s[k] + f[k]))
        }
    }
}

fn oriented_slope(limiter: Limiter, um: &Cons, u0: &Cons, up: &Cons, mid: Option<(&Cons, &Cons)>, dx: f64) -> Vec6 {
    let es = eigensystem_x(&u0.to_prim_unchecked());
    let (a, b, c) = (um.to_array(), u0.to_array(), up.to_array());
    let w = match limiter {
        Limiter::VanLeer => {
            let (wl, wm, wr) = (es.to_characteristic(&a), es.to_characteristic(&b), es.to_characteristic(&c));
            std::array::from_fn(|k| van_leer(wl[k], wm[k], wr[k], dx))
        }
        Limiter::Minmod { theta } => {
            let dl = es.to_characteristic(&sub(&b, &a));
            let dr = es.to_characteristic(&sub(&c, &b));
            let dm = match mid {
                Some((ml, mr)) => es.to_characteristic(&sub(&mr.to_array(), &ml.to_array())),
                None => es.to_characteristic(&sub(&c, &a)).map(|x| 0.5 * x),
            };
            std::array::from_fn(|k| minmod3(theta * dl[k], dm[k], theta * dr[k]) / dx)
        }
    };
    es.from_characteristic(&w)
}

/// Conserved slopes of the interior cells of `ext`, which carries one ghost
/// cell on each side. `mid`, when given, has one entry per face of the
/// interior cells.
pub fn limited_slopes(limiter: Limiter, ext: &[Cons], mid: Option<&[Cons]>, dx: f64, exec: Exec) -> Vec<Vec6> {
    let n = ext.len() - 2;
    if let Some(m) = mid {
        assert_eq!(m.len(), n + 1, "one predicted state per face");
    }
    exec.map_range(n, |j| {
        let faces = mid.map(|m| (&m[j], &m[j + 1]));
        limited_slope(limiter, &ext[j], &ext[j + 1], &ext[j + 2], faces, dx)
    })
}

pub fn limited_slopes_minmod(ext: &[Cons], mid: Option<&[Cons]>, theta: f64, dx: f64) -> Vec<Vec6> {
    limited_slopes(Limiter::Minmod { theta }, ext, mid, dx, Exec::Sequential)
}

pub fn limited_slopes_vanleer(ext: &[Cons], dx: f64) -> Vec<Vec6> {
    limited_slopes(Limiter::VanLeer, ext, None, dx, Exec::Sequential)
}

/// Primitive slope of a cell, or zero when either face value would leave
/// the admissible set.
pub fn admissible_primitive_slope(v: &Prim, du: &Vec6, dx: f64) -> (Vec6, bool) {
    let dv = conserved_to_primitive_slope(v, du);
    let ok = v.add_scaled(&dv, 0.5 * dx).is_admissible() && v.add_scaled(&dv, -0.5 * dx).is_admissible();
    if ok {
        (dv, false)
    } else {
        ([0.0; 6], true)
    }
}

/// Limited primitive slopes of the interior cells of `ext`. Returns the
/// slopes and the number of cells hit by the positivity fallback.
pub fn primitive_slopes(limiter: Limiter, ext: &[Cons], mid: Option<&[Cons]>, dx: f64, exec: Exec) -> (Vec<Vec6>, usize) {
    let du = limited_slopes(limiter, ext, mid, dx, exec);
    let mut zeroed = 0;
    let dv = du
        .iter()
        .enumerate()
        .map(|(j, d)| {
            let (s, hit) = admissible_primitive_slope(&ext[j + 1].to_prim_unchecked(), d, dx);
            zeroed += hit as usize;
            s
        })
        .collect();
    if zeroed > 0 {
        log::debug!("positivity fallback zeroed {zeroed} slopes");
    }
    (dv, zeroed)
}
