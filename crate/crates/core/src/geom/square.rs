use super::point::Point2;
use super::region::Region;
use serde::{Deserialize, Serialize};

/// Closed axis-aligned square.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Square {
    pub center: Point2,
    pub side: f64,
}

impl Square {
    pub fn new(center: Point2, side: f64) -> Self {
        Square { center, side }
    }

    pub fn area(&self) -> f64 {
        self.side * self.side
    }

    pub fn perimeter(&self) -> f64 {
        4.0 * self.side
    }

    pub fn region(&self) -> Region {
        Region::square(self.center, self.side)
    }

    /// Concentric square with side `side + d`.
    pub fn enlarged(&self, d: f64) -> Square {
        Square { center: self.center, side: self.side + d }
    }
}
