//! Galois fields, the affine group AGL(1,q) and its standard representation,
//! MUB construction, collineation-group covariance checks, and a certifier
//! that rules out sharp covariance one odd prime at a time.

pub mod gf;
pub mod groups;
pub mod repr;
pub mod linalg;
pub mod mub;
pub mod covariance;
pub mod certifier;
