//! Geodesic visibility toolkit for simple polygons on the Euclidean plane and
//! the hyperbolic plane (Beltrami–Klein chart).
//!
//! Both surfaces are complete, simply connected and free of conjugate points,
//! and both are handled through a global chart in which every geodesic is a
//! straight line. Incidence questions (sides, crossings, containment,
//! visibility) are therefore answered with planar chart geometry, while
//! lengths and angles use the metric of the model.
//!
//! The main entry points are:
//!
//! - [`model`]: points, geodesics, half-planes, isometries, distance and angle.
//! - [`polygon`] and [`region`]: compact sets as simple geodesic polygons,
//!   containment, clipping and region intersection.
//! - [`starshape`]: visibility, stars, extreme points, the two kernel
//!   constructions, gap points, farthest extreme points and the certifier.
//! - [`oracle`]: dense-sampling verifiers used as independent ground truth.
//! - [`scene`]: scene files, random polygon generators and SVG rendering.

pub mod error;
pub mod fixtures;
mod hyperbolic;
pub mod model;
mod overlay;
pub mod oracle;
pub mod planar;
pub mod polygon;
pub mod region;
pub mod scene;
pub mod starshape;
pub mod tol;

pub use error::{GeomError, Result};
pub use model::{
    Geodesic, GeodesicRay, GeodesicSegment, HalfPlane, Isometry, ModelId, Point, Side,
};
pub use polygon::{ContainmentClass, GeodesicPolygon, Violation};
pub use region::Region;
pub use starshape::{CertReport, ExtremeSet, RadialStar};
