//! Exact computations for the cyclic rational Cherednik algebra and the
//! cyclic quiver variety.

pub mod cherednik;
pub mod error;
pub mod linalg;
pub mod params;
pub mod quivergeom;
pub mod rational;
pub mod series;
pub mod weyl;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/parameters.md")]
    mod parameters {}
    #[doc = include_str!("../../../book/src/weyl.md")]
    mod weyl {}
    #[doc = include_str!("../../../book/src/cherednik.md")]
    mod cherednik {}
    #[doc = include_str!("../../../book/src/geometry.md")]
    mod geometry {}
}
