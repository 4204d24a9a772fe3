//! File formats, invariant reports, the graph corpus and the experiment
//! drivers behind the `homwarm` command line.

pub use homwarm_core as core;

pub mod corpus;
pub mod deadline;
pub mod experiments;
pub mod family;
pub mod io;
pub mod report;
pub mod suite;
