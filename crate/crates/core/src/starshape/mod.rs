//! Visibility, stars, extreme points and kernels of geodesic polygons.
//!
//! `p` sees `q` via `A` when the segment `[pq]` lies in `A`; the star `A_p` is
//! everything `p` sees; the kernel is the set of points that see all of `A`.
//! A point of `A` is extreme when it is not in the relative interior of any
//! segment contained in `A`, which for polygons means a strictly convex vertex.
//!
//! Two independent kernel constructions are provided: the intersection of the
//! stars at the extreme points ([`kernel_extreme`]) and the intersection of the
//! inner half-planes of all edges ([`kernel_halfplane`]). [`certify`] runs both
//! together with the sampling oracle and reports every disagreement.

mod certify;
mod extreme;
mod kernel;
mod rays;
mod star;
mod visibility;

pub use certify::{certify, CertReport, CertifyOptions, CrossChecks, RayProbe};
pub use extreme::{extreme_points, farthest_extreme, ExtremeSet};
pub use kernel::{is_starshaped, kernel_extreme, kernel_halfplane};
pub use rays::{ray_condition, ray_hits};
pub use star::{star, Breakpoint, RadialStar};
pub use visibility::{gap_points, sees};
pub(crate) use visibility::sees_chart;
