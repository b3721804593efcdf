//! Text summaries of Riemann and GRP solutions.

use std::fmt::Write;

use tmgrp::grp::{GrpInput, GrpResult};
use tmgrp::{Prim, Result, RiemannFan, WaveKind};

fn state(v: &Prim) -> String {
    format!("rho={:.10e} u1={:.10e} u2={:.10e} p11={:.10e} p12={:.10e} p22={:.10e}", v.rho, v.u1, v.u2, v.p11, v.p12, v.p22)
}

fn kind(k: WaveKind) -> &'static str {
    match k {
        WaveKind::Shock => "shock",
        WaveKind::Rarefaction => "rarefaction",
    }
}

/// Wave kinds, star values, speeds and the four star states of the exact
/// solution.
pub fn riemann_report(vl: &Prim, vr: &Prim) -> Result<String> {
    vl.check()?;
    vr.check()?;
    let mut s = String::new();
    if vl == vr {
        let _ = writeln!(s, "no waves: left and right states coincide");
        let _ = writeln!(s, "state   {}", state(vl));
        return Ok(s);
    }
    let fan = RiemannFan::solve(vl, vr)?;
    let _ = writeln!(s, "1-wave  {}", kind(fan.left_kind));
    let _ = writeln!(s, "6-wave  {}", kind(fan.right_kind));
    let _ = writeln!(s, "p11*    {:.12e}", fan.p11_star);
    let _ = writeln!(s, "u1*     {:.12e}", fan.u1_star);
    let mut speed = |name: &str, v: Option<f64>| {
        if let Some(v) = v {
            let _ = writeln!(s, "{name:<8}{v:.12e}");
        }
    };
    speed("sigmaL", fan.sigma_l);
    speed("headL", fan.s_hl);
    speed("tailL", fan.s_tl);
    speed("lambda2", Some(fan.lambda2));
    speed("contact", Some(fan.u1_star));
    speed("lambda5", Some(fan.lambda5));
    speed("tailR", fan.s_tr);
    speed("headR", fan.s_hr);
    speed("sigmaR", fan.sigma_r);
    for (name, v) in [("*L", fan.v_star_l), ("**L", fan.v_star2_l), ("**R", fan.v_star2_r), ("*R", fan.v_star_r)] {
        let _ = writeln!(s, "{name:<8}{}", state(&v));
    }
    Ok(s)
}

pub fn grp_report(inp: &GrpInput, r: &GrpResult) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "case    {:?}", r.case_tag);
    let _ = writeln!(s, "region  {:?}", r.region);
    let _ = writeln!(s, "V*      {}", state(&r.v_interface));
    let names = ["rho", "u1", "u2", "p11", "p12", "p22"];
    for (n, d) in names.iter().zip(r.dvdt) {
        let _ = writeln!(s, "{:<8}{d:.12e}", format!("d{n}/dt"));
    }
    let _ = writeln!(s, "W_x     {:.12e}", inp.wx0);
    s
}
