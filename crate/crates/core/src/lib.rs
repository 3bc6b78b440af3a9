//! Symmetry-restricted subalgebras of `su(2^n)`.
//!
//! The crate is organized bottom-up:
//!
//! * [`pauli`]: symplectic Pauli strings, canonical Pauli sums and their dense realization.
//! * [`symmetry`]: finite symmetry groups (qubit permutations or raw unitaries) and the
//!   invariance test `S U S† = U`.
//! * [`algebra`]: orbit-symmetrized bases of the invariant Lie algebra and closure checks.
//! * [`group_ops`]: exponential map, invariant sampling, eigendecomposition-based paths
//!   to the identity and projection onto `SU(2^n)`.
//! * [`circuit`]: CNOT-ladder compilation of Pauli exponentials and circuit evaluation.

pub mod algebra;
pub mod circuit;
pub mod error;
pub mod group_ops;
pub mod matrix;
pub mod pauli;
pub mod symmetry;
pub mod verify;

pub use algebra::{
    build_basis, burnside_dimension, closure_report, in_span, pauli_orbit, symmetrize, ClosureReport, InvariantBasis,
};
pub use circuit::{
    circuit_to_matrix, synthesize_pauli_exponential, synthesize_sum_exponential, two_pauli_condition, Circuit, Gate,
    GateCounts,
};
pub use error::{Error, Result};
pub use group_ops::{
    compose, connectedness_path, eig_unitary, exp_generator, project_to_su, random_invariant, EigDecomposition,
    Unitary, UnitaryPath,
};
pub use matrix::ComplexMatrix;
pub use num_complex::Complex64;
pub use pauli::{canonicalize, pauli_commutator, pauli_multiply, sum_commutator, PauliString, PauliSum};
pub use symmetry::{
    conjugate_pauli, generate_group, is_invariant, permutation_to_matrix, symmetry_defect, InvarianceMode,
    InvarianceReport, QubitPermutation, SymmetryElement, SymmetryGroup, SymmetrySpec,
};
