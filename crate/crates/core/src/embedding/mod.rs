//! Isometric embedding of a profile surface in R³ as a surface of
//! revolution, with triangulation and OBJ/STL export.
//!
//! The height `ψ³(s) = ∫_c^s √(1 - a'²)` exists exactly when `|a'| ≤ 1`.

mod export;
mod map;
mod mesh;

pub use export::{read_obj, stl_size, write_obj, write_stl};
pub use map::{
    embed_point, generate_mesh, psi3, verify_induced_metric, EmbeddingMap, MetricReport, METRIC_GUARD, TOL_CLAMP,
};
pub use mesh::Mesh;
