//! Shared fixtures for the criterion benches.

use ffbinom::{Field, FieldElement};

/// Binomials whose full oracle run reaches the degree cap: the stable
/// d = 2 instances over the largest table fields.
pub fn heavy_instances() -> Vec<(FieldElement, u64)> {
    let f27 = Field::of_order(27).unwrap();
    let f19 = Field::new(19, 1).unwrap();
    let f17 = Field::new(17, 1).unwrap();
    vec![
        (f27.from_int(-1), 2),     // a = alpha^13
        (f19.from_int(2), 2),
        (f17.from_int(14), 2),
    ]
}
