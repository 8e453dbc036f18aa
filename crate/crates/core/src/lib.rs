//! Spectral theory of weighted hypergraphs via tensors.
//!
//! A weighted hypergraph carries seven spectral tensors: the adjacency
//! tensor `A`, the Kirchhoff Laplacian `K` and its signless variant `K+`,
//! the normalized Laplacian `L` and `L+`, and the random-walk Laplacian
//! `RW` and `RW+`. This crate builds them in a row-structured sparse form,
//! computes their eigenpairs by solving the tensor eigenvalue system with
//! total-degree homotopy continuation, estimates geometric multiplicities
//! by generic slicing, and cross-checks solver output against closed-form
//! structure results (row sums, spectral radii, hyperflower spectra,
//! duplicate-vertex eigenvectors, odd-bipartite symmetries).
//!
//! Module map:
//! - [`hypergraph`]: the combinatorial ground object and structure
//!   detection (connectivity, reducibility, duplicate vertices,
//!   odd-bipartitions, colorings, hyperflowers).
//! - [`tensor`]: Stirling-number bookkeeping, the seven tensor
//!   constructions, contraction, and tensor-level predicates.
//! - [`spectra`]: the eigenpair polynomial system, the homotopy path
//!   tracker, eigenvalue classification, geometric multiplicity by
//!   slicing, nonnegative spectral radius iteration, and the dense
//!   matrix oracle for the graph case.
//! - [`analysis`]: theorem-driven validators that replay structural and
//!   spectral identities on concrete instances.
//!
//! Exact rational arithmetic is used wherever the tensor coefficients are
//! rational (all kinds except `L`/`L+`, whose entries involve real
//! `nabla`-th roots of the degrees).

pub mod analysis;
pub mod hypergraph;
pub mod rational;
pub mod spectra;
pub mod tensor;

#[doc(hidden)]
pub mod testsupport;
