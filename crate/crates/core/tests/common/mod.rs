#![allow(dead_code)]

use proptest::prelude::*;
use rand::Rng;
use tmgrp::Prim;

/// Admissible states with moderate magnitudes.
pub fn prim_strategy() -> impl Strategy<Value = Prim> {
    (0.2f64..3.0, -1.5f64..1.5, -1.5f64..1.5, 0.2f64..3.0, -0.9f64..0.9, 0.2f64..3.0).prop_map(
        |(rho, u1, u2, p11, s, p22)| Prim::new(rho, u1, u2, p11, s * (p11 * p22).sqrt(), p22),
    )
}

pub fn random_prim<R: Rng>(rng: &mut R) -> Prim {
    let p11 = rng.random_range(0.2..3.0);
    let p22 = rng.random_range(0.2..3.0);
    let s: f64 = rng.random_range(-0.9..0.9);
    Prim::new(
        rng.random_range(0.2..3.0),
        rng.random_range(-1.5..1.5),
        rng.random_range(-1.5..1.5),
        p11,
        s * (p11 * p22).sqrt(),
        p22,
    )
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}
#[path = "oracle.rs"]
pub mod oracle;
#[path = "fan_ode.rs"]
pub mod fan_ode;
