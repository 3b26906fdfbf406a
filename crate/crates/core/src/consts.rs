//! Constants of the unit-area regular hexagon.

/// Side length of the unit-area regular hexagon, `12^(1/4) / 3`.
pub fn hex_side() -> f64 {
    12f64.powf(0.25) / 3.0
}

/// Perimeter of the unit-area regular hexagon, `2 * 12^(1/4)`.
pub fn hex_perimeter() -> f64 {
    2.0 * 12f64.powf(0.25)
}

/// Diameter (vertex to opposite vertex) of the unit-area regular hexagon.
pub fn hex_diameter() -> f64 {
    2.0 * hex_side()
}

/// Relative tolerance used for area and containment checks.
pub const AREA_TOL: f64 = 1e-9;
