//! The explicit graded free resolution of the minor ideal, its
//! homogenization and pruning, Betti tables, Hilbert series data and the
//! randomized exactness probes.

mod betti;
mod blocks;
mod complex;
mod probe;

pub use betti::{
    betti_formula, characteristic_numbers, hilbert_series, BettiReport, BettiTable,
    HilbertSeriesData,
};
pub use blocks::{delta2, delta3, gamma2, gamma3, BlockStructure};
pub use complex::{
    alternating_basis, jozefiak_complex, trace_zero_basis, upper_basis, BasisElement,
    GradedComplex, Specialization,
};
pub use probe::{exactness_probe, ProbeReport, ProbeVerdict};
