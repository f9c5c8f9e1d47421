//! Reference polygons used throughout the tests, benches and docs.

use crate::model::ModelId;
use crate::polygon::GeodesicPolygon;

/// Unit square `[0,1]²` (Euclidean).
pub fn square() -> GeodesicPolygon {
    euclid(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])
}

/// L-shape with one reflex vertex at `(1,1)`; its kernel is `[0,1]²`.
pub fn lshape() -> GeodesicPolygon {
    euclid(&[(0.0, 0.0), (2.0, 0.0), (2.0, 1.0), (1.0, 1.0), (1.0, 2.0), (0.0, 2.0)])
}

/// U-shape with a notch over `[1,2]×[1,2]`; not starshaped.
pub fn ushape() -> GeodesicPolygon {
    euclid(&[
        (0.0, 0.0),
        (3.0, 0.0),
        (3.0, 2.0),
        (2.0, 2.0),
        (2.0, 1.0),
        (1.0, 1.0),
        (1.0, 2.0),
        (0.0, 2.0),
    ])
}

/// Geodesic triangle in the Klein disk.
pub fn htri() -> GeodesicPolygon {
    GeodesicPolygon::from_chart(ModelId::HyperbolicKlein, &[(0.6, 0.0), (-0.3, 0.5), (-0.3, -0.5)])
        .expect("valid fixture")
}

fn euclid(c: &[(f64, f64)]) -> GeodesicPolygon {
    GeodesicPolygon::from_chart(ModelId::Euclidean, c).expect("valid fixture")
}
