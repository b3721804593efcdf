//! Fine-grid first-order Godunov evolution used as an independent reference
//! for GRP time derivatives.

use tmgrp::grp::GrpInput;
use tmgrp::state::{flux_x, source_x, Cons, Prim, Vec6};
use tmgrp::RiemannFan;

#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    pub n: usize,
    pub t: f64,
    pub cfl: f64,
    /// Half-width of the window in units of `smax * t`.
    pub window: f64,
    /// Read `V(0, t)` from the cell centred on the axis instead of the
    /// Riemann sample at the central interface.
    pub centred: bool,
    pub rusanov: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { n: 4096, t: 1e-4, cfl: 0.8, window: 1.25, centred: false, rusanov: false }
    }
}

fn max_speed(inp: &GrpInput) -> f64 {
    let fan = RiemannFan::solve(&inp.vl, &inp.vr).unwrap();
    [inp.vl, inp.vr, fan.v_star_l, fan.v_star2_l, fan.v_star2_r, fan.v_star_r]
        .iter()
        .map(|v| v.max_speed_x())
        .fold(0.0, f64::max)
}

fn godunov_state(a: &Cons, b: &Cons) -> Prim {
    let (va, vb) = (a.to_prim().unwrap(), b.to_prim().unwrap());
    RiemannFan::solve(&va, &vb).unwrap().sample(0.0)
}

fn numerical_flux(a: &Cons, b: &Cons, rusanov: bool) -> Vec6 {
    if !rusanov {
        return flux_x(&godunov_state(a, b));
    }
    let (va, vb) = (a.to_prim().unwrap(), b.to_prim().unwrap());
    let s = va.max_speed_x().max(vb.max_speed_x());
    let (fa, fb) = (flux_x(&va), flux_x(&vb));
    let (ua, ub) = (a.to_array(), b.to_array());
    std::array::from_fn(|k| 0.5 * (fa[k] + fb[k]) - 0.5 * s * (ub[k] - ua[k]))
}

/// `V(0, t)` from a Godunov run on linear data (or on the pure Riemann data
/// when `linear` is false).
pub fn evolve(inp: &GrpInput, cfg: &OracleConfig, linear: bool) -> Prim {
    let smax = max_speed(inp) * 1.05;
    let half = cfg.window * smax * cfg.t;
    let n = if cfg.centred { cfg.n | 1 } else { cfg.n };
    let dx = 2.0 * half / n as f64;
    let steps = (cfg.t * smax / (cfg.cfl * dx)).ceil() as usize;
    let dt = cfg.t / steps as f64;
    let g = 0.5 / 3f64.sqrt();
    let data = |x: f64| -> Cons {
        let (v, d) = if x < 0.0 { (inp.vl, inp.dvl) } else { (inp.vr, inp.dvr) };
        if linear { v.add_scaled(&d, x).to_cons() } else { v.to_cons() }
    };
    let mut u: Vec<Cons> = (0..n)
        .map(|j| {
            let xc = -half + (j as f64 + 0.5) * dx;
            let a = data(xc - g * dx).to_array();
            let b = data(xc + g * dx).to_array();
            Cons::from_array(std::array::from_fn(|k| 0.5 * (a[k] + b[k])))
        })
        .collect();
    let wx = if linear { inp.wx0 } else { 0.0 };
    let centre = n / 2;
    let mut flux = vec![[0.0; 6]; n + 1];
    for step in 0..steps {
        let r = (steps - step + 2).min(centre);
        let (lo, hi) = (centre - r, centre + r);
        for i in lo..=hi {
            let a = if i == 0 { u[0] } else { u[i - 1] };
            let b = if i == n { u[n - 1] } else { u[i] };
            flux[i] = numerical_flux(&a, &b, cfg.rusanov);
        }
        for j in lo..hi {
            let s = if wx != 0.0 { source_x(&u[j].to_prim().unwrap(), wx) } else { [0.0; 6] };
            let mut c = u[j].to_array();
            for k in 0..6 {
                c[k] += -dt / dx * (flux[j + 1][k] - flux[j][k]) + dt * s[k];
            }
            u[j] = Cons::from_array(c);
        }
    }
    if cfg.centred {
        u[centre].to_prim().unwrap()
    } else {
        godunov_state(&u[centre - 1], &u[centre])
    }
}

/// Finite-difference estimate of `dV/dt(0, 0+)`.
pub fn oracle_dvdt(inp: &GrpInput, cfg: &OracleConfig) -> Vec6 {
    let a = evolve(inp, cfg, true).to_array();
    let b = evolve(inp, cfg, false).to_array();
    std::array::from_fn(|k| (a[k] - b[k]) / cfg.t)
}

/// Wave speeds of the fan, heads and tails included.
pub fn wave_speeds(fan: &RiemannFan) -> Vec<f64> {
    [fan.sigma_l, fan.s_hl, fan.s_tl, Some(fan.lambda2), Some(fan.u1_star), Some(fan.lambda5), fan.s_tr, fan.s_hr, fan.sigma_r]
        .into_iter()
        .flatten()
        .collect()
}

fn shifted(v: &Prim, du: f64) -> Prim {
    Prim { u1: v.u1 + du, ..*v }
}

fn random_slope<R: rand::Rng>(rng: &mut R) -> [f64; 6] {
    std::array::from_fn(|_| rng.random_range(-1.0..1.0))
}

fn random_pair<R: rand::Rng>(rng: &mut R) -> (Prim, Prim) {
    let vl = super::random_prim(rng);
    let f = |rng: &mut R| rng.random_range(0.5..1.8);
    let p11 = vl.p11 * f(rng);
    let p22 = vl.p22 * f(rng);
    let s: f64 = rng.random_range(-0.9..0.9);
    let vr = Prim::new(
        vl.rho * f(rng),
        vl.u1 + rng.random_range(-0.8..0.8),
        vl.u2 + rng.random_range(-0.8..0.8),
        p11,
        s * (p11 * p22).sqrt(),
        p22,
    );
    (vl, vr)
}

/// Random nonsonic input with the given wave kinds and the t-axis outside
/// both rarefaction fans, at least `margin * smax` away from every wave.
pub fn random_nonsonic<R: rand::Rng>(
    rng: &mut R,
    kinds: (tmgrp::WaveKind, tmgrp::WaveKind),
    margin: f64,
) -> GrpInput {
    loop {
        let (vl, vr) = random_pair(rng);
        let Ok(fan) = RiemannFan::solve(&vl, &vr) else { continue };
        if (fan.left_kind, fan.right_kind) != kinds {
            continue;
        }
        let speeds = wave_speeds(&fan);
        let gap = rng.random_range(0..=speeds.len());
        let lo = if gap == 0 { speeds[0] - 1.0 } else { speeds[gap - 1] };
        let hi = if gap == speeds.len() { speeds[speeds.len() - 1] + 1.0 } else { speeds[gap] };
        let xi = lo + rng.random_range(0.2..0.8) * (hi - lo);
        let inside = |a: Option<f64>, b: Option<f64>| matches!((a, b), (Some(a), Some(b)) if a.min(b) < xi && xi < a.max(b));
        if inside(fan.s_hl, fan.s_tl) || inside(fan.s_tr, fan.s_hr) {
            continue;
        }
        let inp = GrpInput::new(shifted(&vl, -xi), shifted(&vr, -xi), random_slope(rng), random_slope(rng), rng.random_range(-1.0..1.0));
        let fan = RiemannFan::solve(&inp.vl, &inp.vr).unwrap();
        let smax = max_speed(&inp);
        if wave_speeds(&fan).iter().all(|s| s.abs() > margin * smax) {
            return inp;
        }
    }
}

/// Random input with the t-axis inside the left rarefaction fan.
pub fn random_sonic<R: rand::Rng>(rng: &mut R, margin: f64) -> GrpInput {
    loop {
        let (vl, vr) = random_pair(rng);
        let Ok(fan) = RiemannFan::solve(&vl, &vr) else { continue };
        let (Some(h), Some(t)) = (fan.s_hl, fan.s_tl) else { continue };
        let xi = h + rng.random_range(0.25..0.75) * (t - h);
        let inp = GrpInput::new(shifted(&vl, -xi), shifted(&vr, -xi), random_slope(rng), random_slope(rng), rng.random_range(-1.0..1.0));
        let fan = RiemannFan::solve(&inp.vl, &inp.vr).unwrap();
        let smax = max_speed(&inp);
        let clear = wave_speeds(&fan).iter().filter(|s| Some(**s) != fan.s_hl && Some(**s) != fan.s_tl).all(|s| s.abs() > margin * smax);
        if clear && fan.s_hl.unwrap() < -margin * smax && fan.s_tl.unwrap() > margin * smax {
            return inp;
        }
    }
}

/// Error of `num` against `oracle` in units of the tolerance
/// `max(rel |oracle|, 1e-4)`; at most 1 means within tolerance.
pub fn tolerance_units(num: f64, oracle: f64, rel: f64) -> f64 {
    (num - oracle).abs() / (rel * oracle.abs()).max(1e-4)
}

/// Aitken limit of three terms on doubling grids. Falls back to the last
/// term unless the differences shrink geometrically.
pub fn aitken(a: f64, b: f64, c: f64) -> f64 {
    let (d1, d2) = (b - a, c - b);
    if d1 == 0.0 {
        return c;
    }
    let r = d2 / d1;
    if r > 0.0 && r < 0.9 {
        c + d2 * r / (1.0 - r)
    } else {
        c
    }
}

#[derive(Clone, Debug)]
pub struct Refined {
    pub levels: Vec<(usize, Vec6)>,
    pub estimate: Vec6,
    /// Largest component error of the GRP value in tolerance units.
    pub worst: f64,
}

/// Oracle derivatives on doubling grids from `n0`, extrapolated from the
/// last three levels. Refines until `dvdt` is within tolerance or the grid
/// would exceed `n_max`.
pub fn refine_oracle(inp: &GrpInput, base: &OracleConfig, dvdt: &Vec6, rel: f64, n0: usize, n_max: usize) -> Refined {
    let mut levels = Vec::new();
    let mut n = n0;
    loop {
        levels.push((n, oracle_dvdt(inp, &OracleConfig { n, ..*base })));
        if levels.len() >= 3 {
            let k = levels.len();
            let (a, b, c) = (levels[k - 3].1, levels[k - 2].1, levels[k - 1].1);
            let estimate: Vec6 = std::array::from_fn(|i| aitken(a[i], b[i], c[i]));
            let worst = (0..6).map(|i| tolerance_units(dvdt[i], estimate[i], rel)).fold(0.0, f64::max);
            if worst <= 1.0 || 2 * n > n_max {
                return Refined { levels, estimate, worst };
            }
        }
        n *= 2;
    }
}
