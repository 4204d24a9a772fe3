//! The complex `hom(K2, G)` and its integer homology.

mod boundary;
mod cells;
mod chains;
mod homology;
mod snf;

pub use boundary::{
    boundary_matrices, boundary_matrices_with, boundary_matrix, boundary_matrix_with, check_chain_complex, signed_faces,
    SignConvention, SparseMatrix,
};
pub use cells::{build_hom_k2, top_dimension, Cell, CellComplex, DEFAULT_MAX_DIM};
pub use chains::{
    chain_boundary, class_rank, cycle_chain, fundamental_walks, h1_span_check, random_even_closed_walk, Chain1,
    EvenClosedWalk, SpanReport,
};
pub use homology::{
    check_invariants, component_count, h1_free_rank, homological_connectivity, homology, Connectivity,
    ConnectivityEstimate, HomologySummary,
};
pub use snf::{smith, Int, Smith};

use crate::error::Result;
use crate::graph::Graph;

/// Builds the complex, checks `∂∂ = 0` and the cell-count invariants, and
/// returns its homology through `max_dim`.
pub fn homology_of(g: &Graph, max_dim: Option<usize>) -> Result<(CellComplex, HomologySummary)> {
    let c = build_hom_k2(g, max_dim)?;
    let mats = boundary_matrices(&c)?;
    check_chain_complex(&mats)?;
    let h = homology::homology_from(&c, &mats, None)?;
    check_invariants(&c, &h)?;
    Ok((c, h))
}

#[cfg(test)]
mod tests;
