mod common;

use common::{max_abs_diff, prim_strategy};
use proptest::prelude::*;
use tmgrp::fv1d::{run, step, Grid1D, SchemeConfig, Solution1D};
use tmgrp::fv2d::{strang_step, Grid2D, Options2D, Solution2D};
use tmgrp::par::Exec;
use tmgrp::problems::find;
use tmgrp::reconstruction::conserved_to_primitive_slope;
use tmgrp::{BoundaryCondition, Cons, Limiter, PotentialKind, Prim};

fn wave(base: Prim, amp: [f64; 6], k: f64) -> impl Fn(f64) -> Prim {
    move |x: f64| {
        let s = (2.0 * std::f64::consts::PI * k * x).sin();
        let a = base.to_array();
        Prim::from_array(std::array::from_fn(|i| a[i] + amp[i] * s))
    }
}

fn rel_drift(a: &[f64; 6], b: &[f64; 6]) -> f64 {
    (0..6).map(|k| (a[k] - b[k]).abs() / (1.0 + a[k].abs())).fold(0.0, f64::max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn periodic_runs_conserve_totals(v in prim_strategy(), k in 1u32..4, minmod in any::<bool>()) {
        let amp = [0.1 * v.rho, 0.2, -0.2, 0.1 * v.p11, 0.0, -0.1 * v.p22];
        let limiter = if minmod { Limiter::Minmod { theta: 1.5 } } else { Limiter::VanLeer };
        let scheme = SchemeConfig { limiter, ..Default::default() };
        let bc = BoundaryCondition::Periodic;
        let mut sol = Solution1D::project(Grid1D::new(0.0, 1.0, 40).unwrap(), wave(v, amp, k as f64), &bc, &scheme).unwrap();
        let before = sol.totals();
        for _ in 0..20 {
            step(&mut sol, &bc, &PotentialKind::Zero, &scheme, f64::INFINITY).unwrap();
        }
        prop_assert!(rel_drift(&before, &sol.totals()) < 1e-13);
    }

    #[test]
    fn uniform_states_are_preserved(v in prim_strategy(), periodic in any::<bool>()) {
        let bc = if periodic { BoundaryCondition::Periodic } else { BoundaryCondition::Outflow };
        let scheme = SchemeConfig::default();
        let mut sol = Solution1D::project(Grid1D::new(-1.0, 1.0, 16).unwrap(), |_| v, &bc, &scheme).unwrap();
        for _ in 0..5 {
            step(&mut sol, &bc, &PotentialKind::Zero, &scheme, f64::INFINITY).unwrap();
        }
        let u0 = v.to_cons().to_array();
        for c in &sol.u {
            prop_assert!(max_abs_diff(&c.to_array(), &u0) < 1e-13 * (1.0 + u0.iter().fold(0.0f64, |m, x| m.max(x.abs()))));
        }
    }

    #[test]
    fn primitive_slope_chain_rule(v in prim_strategy(), du in prop::array::uniform6(-1.0f64..1.0)) {
        let d = conserved_to_primitive_slope(&v, &du);
        let u = v.to_cons().to_array();
        let h = 1e-6;
        let at = |s: f64| Cons::from_array(std::array::from_fn(|k| u[k] + s * du[k])).to_prim_unchecked().to_array();
        let (p, m) = (at(h), at(-h));
        let fd: [f64; 6] = std::array::from_fn(|k| (p[k] - m[k]) / (2.0 * h));
        prop_assert!(max_abs_diff(&d, &fd) < 1e-7 * (1.0 + fd.iter().fold(0.0f64, |a, x| a.max(x.abs()))), "{d:?} vs {fd:?}");
    }
}

#[test]
fn symmetric_collision_stays_mirror_symmetric() {
    let spec = find("rp2").unwrap();
    let scheme = SchemeConfig::default();
    let bc = spec.boundary_condition();
    let grid = Grid1D::new(spec.x_range.0, spec.x_range.1, 200).unwrap();
    let mut sol = Solution1D::project(grid, |x| spec.initial_1d(x), &bc, &scheme).unwrap();
    run(&mut sol, &bc, &spec.potential, &scheme, spec.t_end).unwrap();
    let v = sol.primitives();
    let n = v.len();
    for j in 0..n {
        let m = v[n - 1 - j].mirrored();
        assert!(max_abs_diff(&v[j].to_array(), &m.to_array()) < 1e-12, "cell {j}: {:?} vs {:?}", v[j], m);
    }
}

#[test]
fn doubling_space_and_time_scales_the_solution() {
    let spec = find("rp3").unwrap();
    let scheme = SchemeConfig::default();
    let bc = spec.boundary_condition();
    let solve = |s: f64| {
        let grid = Grid1D::new(s * spec.x_range.0, s * spec.x_range.1, 100).unwrap();
        let mut sol = Solution1D::project(grid, |x| spec.initial_1d(x / s), &bc, &scheme).unwrap();
        run(&mut sol, &bc, &spec.potential, &scheme, s * spec.t_end).unwrap();
        (sol.steps, sol.primitives())
    };
    let (sa, a) = solve(1.0);
    let (sb, b) = solve(2.0);
    assert_eq!(sa, sb);
    for (p, q) in a.iter().zip(&b) {
        assert!(max_abs_diff(&p.to_array(), &q.to_array()) < 1e-12);
    }
}

#[test]
fn two_dimensional_run_of_one_dimensional_data() {
    let spec = find("rp1").unwrap();
    let scheme = SchemeConfig::default();
    let bc = BoundaryCondition::Outflow;
    let grid = Grid2D::new(spec.x_range, (0.0, 1.0), 100, 4).unwrap();
    let mut plane = Solution2D::project(grid, |x, _| spec.initial_1d(x)).unwrap();
    let mut line = Solution1D::project(grid.x, |x| spec.initial_1d(x), &bc, &scheme).unwrap();
    for _ in 0..20 {
        let t0 = plane.t;
        strang_step(&mut plane, &spec.potential, &scheme, &Options2D::default(), f64::INFINITY).unwrap();
        let half = 0.5 * (plane.t - t0);
        step(&mut line, &bc, &spec.potential, &scheme, t0 + half).unwrap();
        step(&mut line, &bc, &spec.potential, &scheme, t0 + 2.0 * half).unwrap();
    }
    for k in 0..4 {
        for i in 0..100 {
            let a = plane.at(i, k).to_array();
            let b = line.u[i].to_prim_unchecked().to_array();
            assert!(max_abs_diff(&a, &b) < 1e-13, "cell ({i}, {k})");
        }
    }
}

#[test]
fn parallel_and_sequential_sweeps_agree() {
    let spec = find("shu_osher").unwrap();
    let bc = spec.boundary_condition();
    let grid = Grid1D::new(spec.x_range.0, spec.x_range.1, 300).unwrap();
    let results: Vec<Vec<Cons>> = [Exec::Sequential, Exec::best()]
        .into_iter()
        .map(|exec| {
            let scheme = SchemeConfig { limiter: spec.limiter, exec, ..Default::default() };
            let mut sol = Solution1D::project(grid, |x| spec.initial_1d(x), &bc, &scheme).unwrap();
            for _ in 0..30 {
                step(&mut sol, &bc, &spec.potential, &scheme, f64::INFINITY).unwrap();
            }
            sol.u
        })
        .collect();
    assert_eq!(results[0], results[1]);

    let spec = find("rp2d_4").unwrap();
    let grid = Grid2D::new(spec.x_range, spec.y_range, 24, 24).unwrap();
    let results: Vec<Vec<Cons>> = [Exec::Sequential, Exec::best()]
        .into_iter()
        .map(|exec| {
            let scheme = SchemeConfig { exec, ..Default::default() };
            let mut sol = Solution2D::project(grid, spec.init).unwrap();
            for _ in 0..5 {
                strang_step(&mut sol, &spec.potential, &scheme, &Options2D::default(), f64::INFINITY).unwrap();
            }
            sol.u
        })
        .collect();
    assert_eq!(results[0], results[1]);
}
