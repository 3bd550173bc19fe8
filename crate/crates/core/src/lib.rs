//! Exact classification of typical seven-point configurations in the real
//! projective plane up to Q-deformation.

pub mod atlas;
pub mod classifier;
pub mod configuration;
pub mod cremona;
pub mod deformation;
pub mod error;
pub mod geometry;
pub mod io;
pub mod linalg;
pub mod scalar;

pub use classifier::{class_fingerprint, q_class, ClassFingerprint, QClass};
pub use error::{Error, Result};

/// Exact projective point with canonical integer coordinates.
pub type Point = geometry::HomPoint<num_bigint::BigInt>;
/// Exact labeled configuration.
pub type Config = configuration::Configuration<num_bigint::BigInt>;
pub type PointF64 = geometry::HomPoint<f64>;
pub type ConfigF64 = configuration::Configuration<f64>;
