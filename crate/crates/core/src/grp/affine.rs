//! Scalars that depend affinely on two unknowns `(X, Y)`.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Aff {
    pub c: f64,
    pub x: f64,
    pub y: f64,
}

impl Aff {
    pub const fn konst(c: f64) -> Self {
        Aff { c, x: 0.0, y: 0.0 }
    }

    pub const X: Aff = Aff { c: 0.0, x: 1.0, y: 0.0 };
    pub const Y: Aff = Aff { c: 0.0, x: 0.0, y: 1.0 };

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        self.c + self.x * x + self.y * y
    }

    /// The equation `self = 0` written as `a X + b Y = d`.
    pub fn as_pair(&self) -> LinearPair {
        LinearPair { a: self.x, b: self.y, d: -self.c }
    }
}

impl From<f64> for Aff {
    fn from(c: f64) -> Self {
        Aff::konst(c)
    }
}

impl Add for Aff {
    type Output = Aff;
    fn add(self, o: Aff) -> Aff {
        Aff { c: self.c + o.c, x: self.x + o.x, y: self.y + o.y }
    }
}

impl Add<f64> for Aff {
    type Output = Aff;
    fn add(self, o: f64) -> Aff {
        Aff { c: self.c + o, ..self }
    }
}

impl Add<Aff> for f64 {
    type Output = Aff;
    fn add(self, a: Aff) -> Aff {
        a + self
    }
}

impl Sub<Aff> for f64 {
    type Output = Aff;
    fn sub(self, a: Aff) -> Aff {
        -a + self
    }
}

impl Sub for Aff {
    type Output = Aff;
    fn sub(self, o: Aff) -> Aff {
        Aff { c: self.c - o.c, x: self.x - o.x, y: self.y - o.y }
    }
}

impl Sub<f64> for Aff {
    type Output = Aff;
    fn sub(self, o: f64) -> Aff {
        Aff { c: self.c - o, ..self }
    }
}

impl Mul<f64> for Aff {
    type Output = Aff;
    fn mul(self, s: f64) -> Aff {
        Aff { c: self.c * s, x: self.x * s, y: self.y * s }
    }
}

impl Mul<Aff> for f64 {
    type Output = Aff;
    fn mul(self, a: Aff) -> Aff {
        a * self
    }
}

impl Div<f64> for Aff {
    type Output = Aff;
    fn div(self, s: f64) -> Aff {
        self * (1.0 / s)
    }
}

impl Neg for Aff {
    type Output = Aff;
    fn neg(self) -> Aff {
        self * -1.0
    }
}

/// One scalar equation `a X + b Y = d`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LinearPair {
    pub a: f64,
    pub b: f64,
    pub d: f64,
}

impl LinearPair {
    /// The same equation written for the reflected unknown `-X`.
    pub fn flip_x(self) -> LinearPair {
        LinearPair { a: -self.a, ..self }
    }
}

/// Cramer solve of two pairs with a relative singularity guard.
pub fn solve2(p: LinearPair, q: LinearPair, context: &'static str) -> Result<(f64, f64)> {
    let det = p.a * q.b - p.b * q.a;
    let scale = (p.a * q.b).abs() + (p.b * q.a).abs();
    if !(det.abs() > 1e-13 * scale) || !det.is_finite() {
        return Err(Error::DegenerateSystem { context, det });
    }
    Ok(((p.d * q.b - p.b * q.d) / det, (p.a * q.d - p.d * q.a) / det))
}
