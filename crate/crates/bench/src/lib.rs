//! Workloads shared by the criterion benches.

use starkit::scene::random_starshaped;
use starkit::{GeodesicPolygon, ModelId};

/// Deterministic starshaped polygons of `n` vertices, one per model.
pub fn workload(n: usize, seed: u64) -> Vec<(ModelId, GeodesicPolygon)> {
    ModelId::ALL
        .iter()
        .map(|&m| (m, random_starshaped(m, n, seed).expect("generator failed")))
        .collect()
}
