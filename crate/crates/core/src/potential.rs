//! Prescribed external potentials `W(x, y, t)`.

/// A scalar potential with its spatial gradient.
pub trait Potential: Send + Sync {
    fn value(&self, x: f64, y: f64, t: f64) -> f64;
    /// `(W_x, W_y)`.
    fn grad(&self, x: f64, y: f64, t: f64) -> (f64, f64);
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PotentialKind {
    Zero,
    /// `W = x`.
    LinearX,
    /// `W = amp * exp(-(r^2) / width)` centred at `(cx, cy)`.
    Gaussian { amp: f64, cx: f64, cy: f64, width: f64 },
}

impl Potential for PotentialKind {
    fn value(&self, x: f64, y: f64, _t: f64) -> f64 {
        match *self {
            PotentialKind::Zero => 0.0,
            PotentialKind::LinearX => x,
            PotentialKind::Gaussian { amp, cx, cy, width } => {
                let r2 = (x - cx).powi(2) + (y - cy).powi(2);
                amp * (-r2 / width).exp()
            }
        }
    }

    fn grad(&self, x: f64, y: f64, t: f64) -> (f64, f64) {
        match *self {
            PotentialKind::Zero => (0.0, 0.0),
            PotentialKind::LinearX => (1.0, 0.0),
            PotentialKind::Gaussian { cx, cy, width, .. } => {
                let w = self.value(x, y, t);
                (-2.0 * (x - cx) / width * w, -2.0 * (y - cy) / width * w)
            }
        }
    }
}

impl PotentialKind {
    pub fn is_zero(&self) -> bool {
        matches!(self, PotentialKind::Zero)
    }
}
