use super::point::Point2;

/// Proper rigid motion `p ↦ R(θ) p + t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RigidMotion {
    pub theta: f64,
    pub t: Point2,
}

impl RigidMotion {
    pub fn identity() -> Self {
        RigidMotion { theta: 0.0, t: Point2::ORIGIN }
    }

    pub fn translation(t: Point2) -> Self {
        RigidMotion { theta: 0.0, t }
    }

    pub fn rotation(theta: f64) -> Self {
        RigidMotion { theta, t: Point2::ORIGIN }
    }

    /// Rotation by `theta` about `c`.
    pub fn rotation_about(theta: f64, c: Point2) -> Self {
        RigidMotion { theta, t: c - c.rotate(theta) }
    }

    pub fn apply(&self, p: Point2) -> Point2 {
        p.rotate(self.theta) + self.t
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &RigidMotion) -> RigidMotion {
        RigidMotion {
            theta: self.theta + other.theta,
            t: other.t.rotate(self.theta) + self.t,
        }
    }

    pub fn inverse(&self) -> RigidMotion {
        RigidMotion {
            theta: -self.theta,
            t: -(self.t.rotate(-self.theta)),
        }
    }
}
