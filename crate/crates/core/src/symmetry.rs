//! Finite symmetry groups acting on `n` qubits and the invariance test `S U S† = U`.

use std::collections::{HashSet, VecDeque};

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};
use crate::matrix::{ComplexMatrix, DEFAULT_QUBIT_CAP};
use crate::pauli::PauliString;

/// Default cap on the number of group elements produced by closure.
pub const DEFAULT_GROUP_CAP: usize = 10_000;

/// Raw symmetry matrices must satisfy `‖S S† − 1‖_F` below this.
pub const RAW_UNITARY_TOL: f64 = 1e-10;

/// Tolerance for identifying raw unitaries up to global phase.
pub const PHASE_DEDUP_TOL: f64 = 1e-9;

/// Wire permutation: `image[i]` is the destination wire of qubit `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QubitPermutation {
    image: Vec<usize>,
}

impl QubitPermutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty image".into()));
        }
        let mut seen = vec![false; n];
        for &target in &image {
            if target >= n || seen[target] {
                return Err(Error::InvalidPermutation(format!("{image:?} is not a bijection on 0..{n}")));
            }
            seen[target] = true;
        }
        Ok(Self { image })
    }

    pub fn identity(n: usize) -> Self {
        Self { image: (0..n).collect() }
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a >= n || b >= n {
            return Err(Error::InvalidPermutation(format!("transposition ({a} {b}) out of range for n = {n}")));
        }
        let mut image: Vec<usize> = (0..n).collect();
        image.swap(a, b);
        Ok(Self { image })
    }

    /// `i ↦ i + 1 mod n`.
    pub fn rotation(n: usize) -> Self {
        Self { image: (0..n).map(|i| (i + 1) % n).collect() }
    }

    /// `i ↦ −i mod n`.
    pub fn reflection(n: usize) -> Self {
        Self { image: (0..n).map(|i| (n - i) % n).collect() }
    }

    pub fn num_qubits(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &t)| i == t)
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn compose(&self, first: &Self) -> Result<Self> {
        check_dim(self.num_qubits(), first.num_qubits())?;
        Ok(Self { image: first.image.iter().map(|&i| self.image[i]).collect() })
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0; self.image.len()];
        for (i, &t) in self.image.iter().enumerate() {
            image[t] = i;
        }
        Self { image }
    }

    /// Number of cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.image.len()];
        let mut cycles = 0;
        for start in 0..self.image.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.image[i];
            }
        }
        cycles
    }

    /// Moves bit `i` of `mask` to bit `image[i]`.
    pub fn permute_mask(&self, mask: u64) -> u64 {
        self.image.iter().enumerate().fold(0, |acc, (i, &t)| acc | (((mask >> i) & 1) << t))
    }

    /// Basis-index map `b ↦ π(b)` over all `2^n` indices.
    pub fn index_map(&self) -> Vec<usize> {
        (0..1usize << self.num_qubits()).map(|b| self.permute_mask(b as u64) as usize).collect()
    }

    pub fn to_matrix(&self) -> Result<ComplexMatrix> {
        permutation_to_matrix(self)
    }
}

/// Permutation matrix with `P|b⟩ = |π(b)⟩`.
pub fn permutation_to_matrix(p: &QubitPermutation) -> Result<ComplexMatrix> {
    let n = p.num_qubits();
    if n > DEFAULT_QUBIT_CAP {
        return Err(Error::Capacity { what: "dense realization", n, cap: DEFAULT_QUBIT_CAP });
    }
    let dim = 1usize << n;
    let mut m = DMatrix::zeros(dim, dim);
    for (b, target) in p.index_map().into_iter().enumerate() {
        m[(target, b)] = Complex64::new(1.0, 0.0);
    }
    Ok(ComplexMatrix::from_dmatrix_unchecked(m))
}

/// `P s P†`: relabels the letters of `s` by the permutation; phase unchanged.
pub fn conjugate_pauli(p: &QubitPermutation, s: &PauliString) -> Result<PauliString> {
    check_dim(p.num_qubits(), s.num_qubits())?;
    PauliString::new(s.num_qubits(), p.permute_mask(s.x_mask()), p.permute_mask(s.z_mask()), s.phase_exp())
}

/// A group element: a qubit permutation or a raw unitary.
#[derive(Clone, Debug, PartialEq)]
pub enum SymmetryElement {
    Permutation(QubitPermutation),
    Unitary(ComplexMatrix),
}

impl SymmetryElement {
    /// Wraps a raw matrix after checking unitarity.
    pub fn unitary(m: ComplexMatrix) -> Result<Self> {
        let residual = m.unitarity_residual();
        if residual >= RAW_UNITARY_TOL {
            return Err(Error::NotUnitary { residual });
        }
        Ok(Self::Unitary(m))
    }

    pub fn num_qubits(&self) -> usize {
        match self {
            Self::Permutation(p) => p.num_qubits(),
            Self::Unitary(m) => m.num_qubits(),
        }
    }

    pub fn as_permutation(&self) -> Option<&QubitPermutation> {
        match self {
            Self::Permutation(p) => Some(p),
            Self::Unitary(_) => None,
        }
    }

    pub fn to_matrix(&self) -> Result<ComplexMatrix> {
        match self {
            Self::Permutation(p) => permutation_to_matrix(p),
            Self::Unitary(m) => Ok(m.clone()),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Self::Permutation(p) => {
                let image: Vec<String> = p.image().iter().map(|i| i.to_string()).collect();
                format!("perm({})", image.join(" "))
            }
            Self::Unitary(_) => "unitary".to_string(),
        }
    }
}

/// Finite group closed under composition and inverse, identity first.
#[derive(Clone, Debug)]
pub struct SymmetryGroup {
    n: usize,
    generators: Vec<SymmetryElement>,
    elements: Vec<SymmetryElement>,
}

impl SymmetryGroup {
    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[SymmetryElement] {
        &self.generators
    }

    pub fn elements(&self) -> &[SymmetryElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_permutation_group(&self) -> bool {
        self.elements.iter().all(|e| e.as_permutation().is_some())
    }

    /// All elements as permutations, or an unsupported-symmetry error.
    pub fn permutations(&self) -> Result<Vec<&QubitPermutation>> {
        self.elements
            .iter()
            .map(|e| {
                e.as_permutation().ok_or_else(|| {
                    Error::UnsupportedSymmetry("raw-unitary elements cannot act on Pauli strings".into())
                })
            })
            .collect()
    }

    /// Closes a named preset: `trivial`, `full_swap`, `cyclic` or `dihedral`.
    pub fn preset(name: &str, n: usize) -> Result<Self> {
        generate_group(n, preset_generators(name, n)?)
    }

    pub fn trivial(n: usize) -> Self {
        Self { n, generators: vec![], elements: vec![SymmetryElement::Permutation(QubitPermutation::identity(n))] }
    }
}

/// Generators of a named preset.
pub fn preset_generators(name: &str, n: usize) -> Result<Vec<SymmetryElement>> {
    if n == 0 {
        return Err(Error::InvalidPermutation("qubit count must be at least 1".into()));
    }
    let perms = match name {
        "trivial" => vec![],
        "full_swap" => {
            let mut out = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    out.push(QubitPermutation::transposition(n, a, b)?);
                }
            }
            out
        }
        "cyclic" => vec![QubitPermutation::rotation(n)],
        "dihedral" => vec![QubitPermutation::rotation(n), QubitPermutation::reflection(n)],
        other => return Err(Error::Parse(format!("unknown symmetry preset {other:?}"))),
    };
    Ok(perms.into_iter().map(SymmetryElement::Permutation).collect())
}

/// Breadth-first closure under composition with the default cap.
pub fn generate_group(n: usize, generators: Vec<SymmetryElement>) -> Result<SymmetryGroup> {
    generate_group_capped(n, generators, DEFAULT_GROUP_CAP)
}

pub fn generate_group_capped(n: usize, generators: Vec<SymmetryElement>, cap: usize) -> Result<SymmetryGroup> {
    if n == 0 {
        return Err(Error::InvalidPermutation("qubit count must be at least 1".into()));
    }
    for g in &generators {
        check_dim(n, g.num_qubits())?;
        if let SymmetryElement::Unitary(m) = g {
            let residual = m.unitarity_residual();
            if residual >= RAW_UNITARY_TOL {
                return Err(Error::NotUnitary { residual });
            }
        }
    }
    let perms: Option<Vec<QubitPermutation>> = generators.iter().map(|g| g.as_permutation().cloned()).collect();
    let elements = match perms {
        Some(perms) => close_permutations(n, &perms, cap)?.into_iter().map(SymmetryElement::Permutation).collect(),
        None => {
            let mats = generators.iter().map(SymmetryElement::to_matrix).collect::<Result<Vec<_>>>()?;
            close_matrices(n, &mats, cap)?.into_iter().map(SymmetryElement::Unitary).collect()
        }
    };
    Ok(SymmetryGroup { n, generators, elements })
}

fn close_permutations(n: usize, generators: &[QubitPermutation], cap: usize) -> Result<Vec<QubitPermutation>> {
    let identity = QubitPermutation::identity(n);
    let mut seen: HashSet<QubitPermutation> = HashSet::from([identity.clone()]);
    let mut elements = vec![identity.clone()];
    let mut queue = VecDeque::from([identity]);
    while let Some(e) = queue.pop_front() {
        for g in generators {
            let next = g.compose(&e)?;
            if seen.insert(next.clone()) {
                if elements.len() >= cap {
                    return Err(Error::GroupNotFinite { cap });
                }
                elements.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    if let Some(e) = elements.iter().find(|e| !seen.contains(&e.inverse())) {
        return Err(Error::InvalidPermutation(format!("closure missing the inverse of {:?}", e.image())));
    }
    Ok(elements)
}

/// Scales `m` so its first entry of non-negligible modulus is positive real.
fn phase_normalize(m: &ComplexMatrix) -> ComplexMatrix {
    let dm = m.as_dmatrix();
    let dim = m.dim();
    for r in 0..dim {
        for c in 0..dim {
            let z = dm[(r, c)];
            if z.norm() > 1e-6 {
                return m.scale(z.conj() / z.norm());
            }
        }
    }
    m.clone()
}

fn find_matrix(pool: &[ComplexMatrix], m: &ComplexMatrix) -> Option<usize> {
    pool.iter().position(|e| e.distance(m).map(|d| d < PHASE_DEDUP_TOL).unwrap_or(false))
}

fn close_matrices(n: usize, generators: &[ComplexMatrix], cap: usize) -> Result<Vec<ComplexMatrix>> {
    let identity = ComplexMatrix::identity(1 << n);
    let gens: Vec<ComplexMatrix> = generators.iter().map(phase_normalize).collect();
    let mut elements = vec![identity];
    let mut head = 0;
    while head < elements.len() {
        let e = elements[head].clone();
        head += 1;
        for g in &gens {
            let next = phase_normalize(&g.mul(&e)?);
            if find_matrix(&elements, &next).is_none() {
                if elements.len() >= cap {
                    return Err(Error::GroupNotFinite { cap });
                }
                elements.push(next);
            }
        }
    }
    for e in &elements {
        if find_matrix(&elements, &phase_normalize(&e.adjoint())).is_none() {
            return Err(Error::UnsupportedSymmetry("closure is missing an inverse".into()));
        }
    }
    Ok(elements)
}

/// `‖S U − U S‖_F`.
pub fn symmetry_defect(u: &ComplexMatrix, s: &SymmetryElement) -> Result<f64> {
    match s {
        SymmetryElement::Permutation(p) => {
            check_dim(u.dim(), 1 << p.num_qubits())?;
            Ok(permutation_defect(u, &p.index_map()))
        }
        SymmetryElement::Unitary(m) => {
            check_dim(u.dim(), m.dim())?;
            m.mul(u)?.distance(&u.mul(m)?)
        }
    }
}

/// `‖P U P† − U‖_F` from the basis-index map; equal to `‖P U − U P‖_F`.
fn permutation_defect(u: &ComplexMatrix, map: &[usize]) -> f64 {
    let m = u.as_dmatrix();
    let mut acc = 0.0;
    for (r, &pr) in map.iter().enumerate() {
        for (c, &pc) in map.iter().enumerate() {
            acc += (m[(r, c)] - m[(pr, pc)]).norm_sqr();
        }
    }
    acc.sqrt()
}

/// Which group elements an invariance check visits.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum InvarianceMode {
    /// Every element of the closed group.
    #[default]
    Full,
    /// Generators only; sufficient because invariance is preserved by composition.
    GeneratorsOnly,
}

/// Per-element defects and the overall verdict.
#[derive(Clone, Debug)]
pub struct InvarianceReport {
    pub residuals: Vec<f64>,
    pub max_residual: f64,
    pub worst_index: Option<usize>,
    pub invariant: bool,
    pub mode: InvarianceMode,
}

/// Full-group invariance check.
pub fn is_invariant(u: &ComplexMatrix, group: &SymmetryGroup, tol: f64) -> Result<InvarianceReport> {
    is_invariant_with_mode(u, group, tol, InvarianceMode::Full)
}

pub fn is_invariant_with_mode(
    u: &ComplexMatrix,
    group: &SymmetryGroup,
    tol: f64,
    mode: InvarianceMode,
) -> Result<InvarianceReport> {
    check_dim(1 << group.num_qubits(), u.dim())?;
    let checked = match mode {
        InvarianceMode::Full => group.elements(),
        InvarianceMode::GeneratorsOnly => group.generators(),
    };
    let residuals = checked.iter().map(|s| symmetry_defect(u, s)).collect::<Result<Vec<f64>>>()?;
    let (worst_index, max_residual) = residuals.iter().copied().enumerate().fold((None, 0.0), |(wi, wv), (i, v)| {
        if wi.is_none() || v > wv {
            (Some(i), v)
        } else {
            (wi, wv)
        }
    });
    Ok(InvarianceReport { invariant: max_residual < tol, residuals, max_residual, worst_index, mode })
}

/// JSON symmetry description.
///
/// ```json
/// {"n": 3, "generators": [{"perm": [1,0,2]}, {"unitary": [[[1,0],[0,0]], ...]}]}
/// {"n": 4, "generators": "dihedral"}
/// ```
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SymmetrySpec {
    pub n: usize,
    #[serde(default)]
    pub generators: GeneratorList,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GeneratorList {
    Preset(String),
    Explicit(Vec<GeneratorSpec>),
}

impl Default for GeneratorList {
    fn default() -> Self {
        Self::Explicit(Vec::new())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GeneratorSpec {
    Perm(Vec<usize>),
    Unitary(ComplexMatrix),
}

impl SymmetrySpec {
    pub fn from_preset(name: &str, n: usize) -> Self {
        Self { n, generators: GeneratorList::Preset(name.to_string()), preset: None }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Resolves presets into generators, then closes the group.
    pub fn resolve(&self) -> Result<SymmetryGroup> {
        let mut generators = match &self.generators {
            GeneratorList::Preset(name) => preset_generators(name, self.n)?,
            GeneratorList::Explicit(list) => list
                .iter()
                .map(|g| match g {
                    GeneratorSpec::Perm(image) => {
                        Ok(SymmetryElement::Permutation(QubitPermutation::new(image.clone())?))
                    }
                    GeneratorSpec::Unitary(m) => SymmetryElement::unitary(m.clone()),
                })
                .collect::<Result<Vec<_>>>()?,
        };
        if let Some(name) = &self.preset {
            generators.extend(preset_generators(name, self.n)?);
        }
        generate_group(self.n, generators)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::PauliSum;

    fn perm(image: &[usize]) -> SymmetryElement {
        SymmetryElement::Permutation(QubitPermutation::new(image.to_vec()).unwrap())
    }

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(QubitPermutation::new(vec![0, 0]).is_err());
        assert!(QubitPermutation::new(vec![0, 2]).is_err());
    }

    #[test]
    fn group_orders() {
        assert_eq!(generate_group(3, vec![perm(&[1, 0, 2]), perm(&[0, 2, 1])]).unwrap().order(), 6);
        let d4 = generate_group(4, vec![perm(&[1, 2, 3, 0]), perm(&[0, 3, 2, 1])]).unwrap();
        assert_eq!(d4.order(), 8);
        assert_eq!(generate_group(3, vec![perm(&[0, 1, 2])]).unwrap().order(), 1);
        assert_eq!(SymmetryGroup::preset("full_swap", 5).unwrap().order(), 120);
        assert_eq!(SymmetryGroup::preset("cyclic", 5).unwrap().order(), 5);
        assert_eq!(SymmetryGroup::preset("trivial", 2).unwrap().order(), 1);
    }

    #[test]
    fn closure_cap_is_enforced() {
        let gens = preset_generators("full_swap", 4).unwrap();
        assert!(matches!(generate_group_capped(4, gens, 10), Err(Error::GroupNotFinite { cap: 10 })));
    }

    #[test]
    fn irrational_rotation_is_not_finite() {
        let theta: f64 = 1.0;
        let rz = ComplexMatrix::from_rows(&[
            vec![Complex64::from_polar(1.0, -theta / 2.0), c(0.0)],
            vec![c(0.0), Complex64::from_polar(1.0, theta / 2.0)],
        ])
        .unwrap();
        let gens = vec![SymmetryElement::unitary(rz).unwrap()];
        assert!(matches!(generate_group_capped(1, gens, 200), Err(Error::GroupNotFinite { .. })));
    }

    #[test]
    fn cnot_generates_order_two_group() {
        let mut rows = vec![vec![c(0.0); 4]; 4];
        for (r, col) in [(0, 0), (1, 3), (2, 2), (3, 1)] {
            rows[r][col] = c(1.0);
        }
        let cnot = ComplexMatrix::from_rows(&rows).unwrap();
        let g = generate_group(2, vec![SymmetryElement::unitary(cnot).unwrap()]).unwrap();
        assert_eq!(g.order(), 2);
        assert!(!g.is_permutation_group());
    }

    #[test]
    fn global_phase_duplicates_merge() {
        // i·X generates {1, iX, -1, -iX}, which is {1, X} up to phase.
        let ix =
            ComplexMatrix::from_rows(&[vec![c(0.0), Complex64::new(0.0, 1.0)], vec![Complex64::new(0.0, 1.0), c(0.0)]])
                .unwrap();
        let g = generate_group(1, vec![SymmetryElement::unitary(ix).unwrap()]).unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn swap_matrix_matches_displayed_form() {
        let swap = permutation_to_matrix(&QubitPermutation::transposition(2, 0, 1).unwrap()).unwrap();
        let expected = [[1.0, 0.0, 0.0, 0.0], [0.0, 0.0, 1.0, 0.0], [0.0, 1.0, 0.0, 0.0], [0.0, 0.0, 0.0, 1.0]];
        for r in 0..4 {
            for col in 0..4 {
                assert_eq!(swap.get(r, col), c(expected[r][col]));
            }
        }
        assert_eq!(permutation_to_matrix(&QubitPermutation::identity(3)).unwrap(), ComplexMatrix::identity(8));
    }

    #[test]
    fn three_qubit_outer_swap_reverses_bits() {
        let m = permutation_to_matrix(&QubitPermutation::transposition(3, 0, 2).unwrap()).unwrap();
        for b in 0..8usize {
            let reversed = ((b & 1) << 2) | (b & 2) | ((b >> 2) & 1);
            for r in 0..8 {
                assert_eq!(m.get(r, b), c(if r == reversed { 1.0 } else { 0.0 }));
            }
        }
    }

    #[test]
    fn conjugation_examples() {
        let swap = QubitPermutation::transposition(2, 0, 1).unwrap();
        let xi: PauliString = "XI".parse().unwrap();
        assert_eq!(conjugate_pauli(&swap, &xi).unwrap().to_letters(), "IX");
        let xx: PauliString = "XX".parse().unwrap();
        assert_eq!(conjugate_pauli(&swap, &xx).unwrap(), xx);
        let rot = QubitPermutation::new(vec![1, 2, 3, 0]).unwrap();
        let s: PauliString = "XIIZ".parse().unwrap();
        let moved = conjugate_pauli(&rot, &s).unwrap();
        assert_eq!(moved.to_letters(), "IIZX");
        let p = permutation_to_matrix(&rot).unwrap();
        let dense = p.mul(&s.to_matrix().unwrap()).unwrap().mul(&p.adjoint()).unwrap();
        assert!(dense.max_abs_diff(&moved.to_matrix().unwrap()).unwrap() < 1e-13);
    }

    #[test]
    fn defect_examples() {
        let swap = perm(&[1, 0]);
        assert_eq!(symmetry_defect(&ComplexMatrix::identity(4), &swap).unwrap(), 0.0);
        let swap_m = swap.to_matrix().unwrap();
        assert_eq!(symmetry_defect(&swap_m, &swap).unwrap(), 0.0);
        let xi = PauliSum::from_letter_terms("XI").unwrap().to_matrix().unwrap();
        let d = symmetry_defect(&xi, &swap).unwrap();
        assert!((d - 2.0 * 2f64.sqrt()).abs() < 1e-14);
        let raw = symmetry_defect(&xi, &SymmetryElement::Unitary(swap_m)).unwrap();
        assert!((raw - d).abs() < 1e-14);
    }

    #[test]
    fn invariance_examples() {
        let s2 = SymmetryGroup::preset("full_swap", 2).unwrap();
        let xx = PauliSum::from_letter_terms("XX").unwrap().to_matrix().unwrap();
        let report = is_invariant(&xx, &s2, 1e-14).unwrap();
        assert!(report.invariant);
        assert_eq!(report.residuals.len(), 2);
        let wrong = ComplexMatrix::identity(8);
        assert!(matches!(is_invariant(&wrong, &s2, 1e-12), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn spec_json_parsing() {
        let spec =
            SymmetrySpec::from_json(r#"{"n": 3, "generators": [{"perm": [1,0,2]}, {"perm": [0,2,1]}]}"#).unwrap();
        assert_eq!(spec.resolve().unwrap().order(), 6);
        let preset = SymmetrySpec::from_json(r#"{"n": 4, "generators": "dihedral"}"#).unwrap();
        assert_eq!(preset.resolve().unwrap().order(), 8);
        let keyed = SymmetrySpec::from_json(r#"{"n": 4, "preset": "cyclic"}"#).unwrap();
        assert_eq!(keyed.resolve().unwrap().order(), 4);
        let raw =
            SymmetrySpec::from_json(r#"{"n": 1, "generators": [{"unitary": [[[0,0],[1,0]],[[1,0],[0,0]]]}]}"#).unwrap();
        assert_eq!(raw.resolve().unwrap().order(), 2);
        assert!(SymmetrySpec::from_json(r#"{"n": 2, "generators": "nope"}"#).unwrap().resolve().is_err());
        let non_unitary =
            SymmetrySpec::from_json(r#"{"n": 1, "generators": [{"unitary": [[[2,0],[0,0]],[[0,0],[1,0]]]}]}"#).unwrap();
        assert!(matches!(non_unitary.resolve(), Err(Error::NotUnitary { .. })));
    }
}
