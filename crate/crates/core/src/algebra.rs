//! Orbit-symmetrized bases of the symmetry-invariant Lie algebra.
//!
//! Every Pauli string `s` has an orbit `{π s π† : π ∈ G}` under a permutation group.
//! Summing an orbit with unit coefficients gives a Hermitian, traceless sum that is a
//! fixed point of conjugation; the non-identity orbits span the invariant algebra
//! (the algebra element is `i·h` for a basis sum `h`).

use std::collections::{BTreeSet, HashMap};

use num_complex::Complex64;

use crate::error::{check_dim, Error, Result};
use crate::pauli::{sum_commutator, PauliString, PauliSum};
use crate::symmetry::{conjugate_pauli, QubitPermutation, SymmetryGroup};

/// `4^n` enumeration is refused above this qubit count.
pub const BASIS_QUBIT_CAP: usize = 8;

/// Images of `s` under every group element.
pub fn pauli_orbit(s: &PauliString, group: &SymmetryGroup) -> Result<BTreeSet<PauliString>> {
    check_dim(group.num_qubits(), s.num_qubits())?;
    orbit_of(s, &group.permutations()?)
}

fn orbit_of(s: &PauliString, perms: &[&QubitPermutation]) -> Result<BTreeSet<PauliString>> {
    perms.iter().map(|p| conjugate_pauli(p, s)).collect()
}

/// Unit-coefficient sum over the orbit of `s`.
pub fn symmetrize(s: &PauliString, group: &SymmetryGroup) -> Result<PauliSum> {
    let orbit = pauli_orbit(s, group)?;
    crate::pauli::canonicalize(s.num_qubits(), orbit.into_iter().map(|p| (p, Complex64::new(1.0, 0.0))))
}

/// One symmetrized sum per non-identity orbit of the `4^n` Pauli strings.
#[derive(Clone, Debug)]
pub struct InvariantBasis {
    n: usize,
    group: SymmetryGroup,
    elements: Vec<PauliSum>,
    orbit_index: HashMap<PauliString, usize>,
}

impl InvariantBasis {
    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn group(&self) -> &SymmetryGroup {
        &self.group
    }

    pub fn elements(&self) -> &[PauliSum] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Index of the element whose orbit contains `s` (phase ignored).
    pub fn orbit_of(&self, s: &PauliString) -> Option<usize> {
        self.orbit_index.get(&s.without_phase()).copied()
    }

    /// The lexicographically smallest `(z_mask, x_mask)` string of each orbit.
    pub fn representative(&self, index: usize) -> Option<PauliString> {
        self.elements.get(index).and_then(|e| e.terms().next().map(|(p, _)| *p))
    }

    /// One line per element in the Pauli-sum text form, elements separated by blank lines.
    pub fn to_text(&self) -> String {
        self.elements.iter().map(PauliSum::to_text).collect::<Vec<_>>().join("\n")
    }
}

pub fn build_basis(n: usize, group: &SymmetryGroup) -> Result<InvariantBasis> {
    check_dim(group.num_qubits(), n)?;
    if n > BASIS_QUBIT_CAP {
        return Err(Error::Capacity { what: "4^n Pauli enumeration", n, cap: BASIS_QUBIT_CAP });
    }
    let perms = group.permutations()?;
    let full = (1u64 << n) - 1;
    let mut orbit_index = HashMap::new();
    let mut elements = Vec::new();
    // z outer, x inner: the first unvisited string is its orbit's smallest (z, x).
    for z in 0..=full {
        for x in 0..=full {
            if x == 0 && z == 0 {
                continue;
            }
            let s = PauliString::new(n, x, z, 0)?;
            if orbit_index.contains_key(&s) {
                continue;
            }
            let orbit = orbit_of(&s, &perms)?;
            let index = elements.len();
            for member in &orbit {
                orbit_index.insert(*member, index);
            }
            elements.push(crate::pauli::canonicalize(n, orbit.into_iter().map(|p| (p, Complex64::new(1.0, 0.0))))?);
        }
    }
    Ok(InvariantBasis { n, group: group.clone(), elements, orbit_index })
}

/// `(1/|G|) Σ_g 4^{cycles(g)} − 1`: the number of non-identity Pauli orbits.
pub fn burnside_dimension(n: usize, group: &SymmetryGroup) -> Result<u128> {
    check_dim(group.num_qubits(), n)?;
    let perms = group.permutations()?;
    let overflow = || Error::Capacity { what: "Burnside count", n, cap: 60 };
    let mut total: u128 = 0;
    for p in &perms {
        let fixed = 4u128.checked_pow(p.cycle_count() as u32).ok_or_else(overflow)?;
        total = total.checked_add(fixed).ok_or_else(overflow)?;
    }
    let order = perms.len() as u128;
    debug_assert_eq!(total % order, 0);
    Ok(total / order - 1)
}

/// Norm of the part of `x` outside `span(B)`.
///
/// Pauli strings are orthogonal, so the projection onto a symmetrized element keeps
/// the orbit-mean coefficient on every orbit member. The remainder collects the
/// deviations from those means plus any identity component. Norm is taken in
/// coefficient space.
pub fn in_span(x: &PauliSum, basis: &InvariantBasis) -> Result<f64> {
    check_dim(basis.n, x.num_qubits())?;
    let mut per_orbit: HashMap<usize, Vec<Complex64>> = HashMap::new();
    let mut outside = 0.0;
    for (p, c) in x.terms() {
        match basis.orbit_of(p) {
            Some(i) => per_orbit.entry(i).or_default().push(*c),
            None => outside += c.norm_sqr(),
        }
    }
    let mut residual = outside;
    for (index, coeffs) in per_orbit {
        let size = basis.elements[index].len();
        let mean: Complex64 = coeffs.iter().sum::<Complex64>() / size as f64;
        let missing = size - coeffs.len();
        residual += coeffs.iter().map(|c| (c - mean).norm_sqr()).sum::<f64>() + missing as f64 * mean.norm_sqr();
    }
    Ok(residual.sqrt())
}

/// Pairwise commutator closure summary.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosureReport {
    pub pair_count: usize,
    pub max_residual: f64,
    pub worst_pair: Option<(usize, usize)>,
    pub tolerance: f64,
    pub passed: bool,
}

/// Default tolerance for [`closure_report`].
pub const CLOSURE_TOL: f64 = 1e-10;

pub fn closure_report(basis: &InvariantBasis) -> Result<ClosureReport> {
    closure_report_with_tol(basis, CLOSURE_TOL)
}

/// Span residual of `[b_i, b_j]` over all `i < j`.
pub fn closure_report_with_tol(basis: &InvariantBasis, tol: f64) -> Result<ClosureReport> {
    let mut pair_count = 0;
    let mut max_residual = 0.0;
    let mut worst_pair = None;
    for (i, a) in basis.elements.iter().enumerate() {
        for (j, b) in basis.elements.iter().enumerate().skip(i + 1) {
            let residual = in_span(&sum_commutator(a, b)?, basis)?;
            pair_count += 1;
            if worst_pair.is_none() || residual > max_residual {
                max_residual = residual;
                worst_pair = Some((i, j));
            }
        }
    }
    Ok(ClosureReport { pair_count, max_residual, worst_pair, tolerance: tol, passed: max_residual < tol })
}
