//! Numerical building blocks: quadrature, 1-D extremum search, splines.

pub mod quad;
pub mod search;
pub mod spline;

pub use quad::{integrate, Integral, QuadConfig};
pub use search::{maximize, minimize, Extremum};
pub use spline::ClampedSpline;
