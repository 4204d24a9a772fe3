//! Graph invariants around warmth, d-stable families and the complex
//! `hom(K2, G)`.
//!
//! Everything here is `no_std` with `alloc`. File formats, the command line
//! and the experiment drivers live in the `homwarm` crate.
#![no_std]

extern crate alloc;

pub mod bitset;
pub mod budget;
pub mod chromatic;
mod error;
pub mod generators;
pub mod folding;
pub mod graph;
pub mod homcomplex;
pub mod iso;
pub mod warmth;

pub use bitset::VertexSet;
pub use budget::{Budget, StepBudget, Unlimited};
pub use error::{Error, Result};
pub use graph::{Graph, MAX_VERTICES};
