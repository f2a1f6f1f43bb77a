//! Exact Chern numbers, nef-diagonal verdicts and cycle cones.
//!
//! See the guide under `book/` for a tour; its code blocks run as doc-tests.

pub mod chern;
pub mod cones;
pub mod diagonal;
pub mod error;
pub mod exactnum;
pub mod verdict;

pub use error::{Error, Result};

#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/exact-arithmetic.md")]
    pub mod exact_arithmetic {}
    #[doc = include_str!("../../../book/src/complete-intersections.md")]
    pub mod complete_intersections {}
    #[doc = include_str!("../../../book/src/weighted-hypersurfaces.md")]
    pub mod weighted_hypersurfaces {}
    #[doc = include_str!("../../../book/src/nef-diagonal.md")]
    pub mod nef_diagonal {}
    #[doc = include_str!("../../../book/src/cycle-cones.md")]
    pub mod cycle_cones {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
