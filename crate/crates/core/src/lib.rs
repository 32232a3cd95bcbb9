pub mod cli;
pub mod corpus;
pub mod curvature;
pub mod dsl;
pub mod embeddability;
pub mod embedding;
pub mod error;
pub mod numeric;
pub mod profile;

pub use error::{Error, Result};
pub use profile::{Pole, Profile};
