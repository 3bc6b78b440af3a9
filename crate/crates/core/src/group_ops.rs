//! Dense unitary operations: exponential map, composition, invariant sampling,
//! eigendecomposition of unitaries, the path `A(t) = P D(t) P†` from the identity
//! to `A`, and projection onto `SU(2^n)`.

use std::f64::consts::PI;
use std::ops::Range;

use nalgebra::{DMatrix, DVector, Schur, SymmetricEigen};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{build_basis, InvariantBasis};
use crate::error::{check_dim, Error, Result};
use crate::matrix::ComplexMatrix;
use crate::pauli::PauliSum;
use crate::symmetry::SymmetryGroup;

/// A matrix is accepted as unitary when `‖U U† − 1‖_F` is below this.
pub const UNITARITY_TOL: f64 = 1e-9;

/// Eigenvalues closer than this on the unit circle are merged into one cluster.
pub const EIGEN_CLUSTER_TOL: f64 = 1e-8;

/// Required reconstruction and orthonormality accuracy of [`eig_unitary`].
pub const EIG_RESIDUAL_TOL: f64 = 1e-9;

/// Gap below which eigenvalues of the Hermitian part are refined together.
const PENCIL_GROUP_TOL: f64 = 1e-7;

const MAX_SWEEPS: usize = 1_000_000;

/// Dense unitary with its cached unitarity residual.
#[derive(Clone, Debug, PartialEq)]
pub struct Unitary {
    matrix: ComplexMatrix,
    residual: f64,
}

impl Unitary {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        let residual = matrix.unitarity_residual();
        if residual.is_nan() || residual >= UNITARITY_TOL {
            return Err(Error::NotUnitary { residual });
        }
        Ok(Self { matrix, residual })
    }

    pub fn identity(n: usize) -> Self {
        Self { matrix: ComplexMatrix::identity(1 << n), residual: 0.0 }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn unitarity_residual(&self) -> f64 {
        self.residual
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn num_qubits(&self) -> usize {
        self.matrix.num_qubits()
    }

    pub fn adjoint(&self) -> Self {
        Self { matrix: self.matrix.adjoint(), residual: self.residual }
    }

    pub fn determinant(&self) -> Complex64 {
        self.matrix.determinant()
    }
}

/// Eigen-decomposition of a Hermitian matrix; eigenvalues ascending.
fn hermitian_eigh(m: &DMatrix<Complex64>) -> Result<(Vec<f64>, DMatrix<Complex64>)> {
    let sym = (m + m.adjoint()) * Complex64::new(0.5, 0.0);
    let eig = SymmetricEigen::try_new(sym, f64::EPSILON, MAX_SWEEPS).ok_or_else(|| Error::Numeric {
        message: "Hermitian eigensolver did not converge".into(),
        residual: f64::NAN,
    })?;
    let mut order: Vec<usize> = (0..m.nrows()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = DMatrix::from_fn(m.nrows(), m.nrows(), |r, c| eig.eigenvectors[(r, order[c])]);
    Ok((values, vectors))
}

/// `V diag(e^{i·scale·λ}) V†` for Hermitian `m = V diag(λ) V†`.
fn exp_i_hermitian(m: &DMatrix<Complex64>, scale: f64) -> Result<DMatrix<Complex64>> {
    let (values, vectors) = hermitian_eigh(m)?;
    let mut scaled = vectors.clone();
    for (c, lambda) in values.iter().enumerate() {
        let phase = Complex64::from_polar(1.0, scale * lambda);
        for r in 0..scaled.nrows() {
            scaled[(r, c)] *= phase;
        }
    }
    Ok(scaled * vectors.adjoint())
}

/// `exp(−i·alpha/2·h)` for a Hermitian Pauli sum `h`.
pub fn exp_generator(h: &PauliSum, alpha: f64) -> Result<Unitary> {
    if !h.is_hermitian() {
        return Err(Error::Convention(format!("{h} has complex coefficients")));
    }
    let m = h.to_matrix()?;
    let u = exp_i_hermitian(m.as_dmatrix(), -alpha / 2.0)?;
    Unitary::new(ComplexMatrix::from_dmatrix_unchecked(u))
}

/// `U2 · U1`: apply `U1` first.
pub fn compose(u1: &Unitary, u2: &Unitary) -> Result<Unitary> {
    check_dim(u1.dim(), u2.dim())?;
    Unitary::new(u2.matrix.mul(&u1.matrix)?)
}

/// Product of `depth` exponentials of uniformly drawn basis elements, angles uniform
/// in `[0, 2π)`. Deterministic per seed.
pub fn random_invariant(n: usize, group: &SymmetryGroup, seed: u64, depth: usize) -> Result<Unitary> {
    random_invariant_from_basis(&build_basis(n, group)?, seed, depth)
}

pub fn random_invariant_from_basis(basis: &InvariantBasis, seed: u64, depth: usize) -> Result<Unitary> {
    if basis.is_empty() {
        return Err(Error::DegenerateGroup("invariant basis is empty".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut u = Unitary::identity(basis.num_qubits());
    for _ in 0..depth {
        let index = rng.random_range(0..basis.len());
        let alpha = rng.random::<f64>() * 2.0 * PI;
        u = compose(&u, &exp_generator(&basis.elements()[index], alpha)?)?;
    }
    Ok(u)
}

/// `A = P diag(e^{iθ}) P†` with eigenvector columns grouped by eigenvalue cluster.
#[derive(Clone, Debug)]
pub struct EigDecomposition {
    vectors: ComplexMatrix,
    thetas: Vec<f64>,
    clusters: Vec<Range<usize>>,
}

impl EigDecomposition {
    /// Orthonormal eigenvector columns `P`.
    pub fn vectors(&self) -> &ComplexMatrix {
        &self.vectors
    }

    /// Principal eigenphases in `(−π, π]`, constant within each cluster.
    pub fn thetas(&self) -> &[f64] {
        &self.thetas
    }

    /// Column ranges of equal eigenvalues.
    pub fn clusters(&self) -> &[Range<usize>] {
        &self.clusters
    }

    pub fn eigenvalues(&self) -> Vec<Complex64> {
        self.thetas.iter().map(|&t| Complex64::from_polar(1.0, t)).collect()
    }

    /// `P diag(e^{i·t·θ}) P†`.
    pub fn evaluate(&self, t: f64) -> ComplexMatrix {
        let p = self.vectors.as_dmatrix();
        let mut scaled = p.clone();
        for (c, theta) in self.thetas.iter().enumerate() {
            let phase = Complex64::from_polar(1.0, t * theta);
            for r in 0..scaled.nrows() {
                scaled[(r, c)] *= phase;
            }
        }
        ComplexMatrix::from_dmatrix_unchecked(scaled * p.adjoint())
    }

    /// `‖P D P† − A‖_F`.
    pub fn reconstruction_residual(&self, a: &ComplexMatrix) -> f64 {
        self.evaluate(1.0).distance(a).unwrap_or(f64::INFINITY)
    }

    /// `‖P† P − 1‖_F`.
    pub fn orthonormality_residual(&self) -> f64 {
        let p = self.vectors.as_dmatrix();
        ComplexMatrix::from_dmatrix_unchecked(p.adjoint() * p).distance(&ComplexMatrix::identity(p.nrows())).unwrap()
    }

    /// `Σ |θ|`, a Lipschitz constant of `t ↦ A(t)` in the Frobenius norm.
    pub fn lipschitz_bound(&self) -> f64 {
        self.thetas.iter().map(|t| t.abs()).sum()
    }
}

/// Diagonalizes a unitary with orthonormal eigenvectors.
///
/// The Hermitian part `(A + A†)/2` is diagonalized first; each group of (near-)equal
/// eigenvalues is then split by the Hermitian matrix `(A − A†)/2i` restricted to that
/// group. If the result does not reconstruct `A`, a complex Schur decomposition is used
/// instead. Eigenvalues within [`EIGEN_CLUSTER_TOL`] are merged and their eigenvectors
/// re-orthonormalized.
pub fn eig_unitary(a: &Unitary) -> Result<EigDecomposition> {
    let m = a.matrix.as_dmatrix();
    let pencil = pencil_eigenvectors(m).and_then(|v| finish_decomposition(m, v));
    match pencil {
        Ok(d) if decomposition_ok(&d, &a.matrix) => Ok(d),
        _ => {
            let schur = Schur::try_new(m.clone(), f64::EPSILON, MAX_SWEEPS).ok_or_else(|| Error::Numeric {
                message: "complex Schur iteration did not converge".into(),
                residual: f64::NAN,
            })?;
            let (q, _) = schur.unpack();
            let d = finish_decomposition(m, q)?;
            if decomposition_ok(&d, &a.matrix) {
                Ok(d)
            } else {
                Err(Error::Numeric {
                    message: "unitary eigendecomposition failed to reconstruct its input".into(),
                    residual: d.reconstruction_residual(&a.matrix).max(d.orthonormality_residual()),
                })
            }
        }
    }
}

fn decomposition_ok(d: &EigDecomposition, a: &ComplexMatrix) -> bool {
    d.reconstruction_residual(a) < EIG_RESIDUAL_TOL && d.orthonormality_residual() < EIG_RESIDUAL_TOL
}

fn pencil_eigenvectors(m: &DMatrix<Complex64>) -> Result<DMatrix<Complex64>> {
    let dim = m.nrows();
    let adj = m.adjoint();
    let real_part = (m + &adj) * Complex64::new(0.5, 0.0);
    let imag_part = (m - &adj) * Complex64::new(0.0, -0.5);
    let (values, mut vectors) = hermitian_eigh(&real_part)?;
    let mut start = 0;
    while start < dim {
        let mut end = start + 1;
        while end < dim && values[end] - values[end - 1] < PENCIL_GROUP_TOL {
            end += 1;
        }
        if end - start > 1 {
            let q = vectors.columns(start, end - start).into_owned();
            let restricted = q.adjoint() * &imag_part * &q;
            let (_, w) = hermitian_eigh(&restricted)?;
            vectors.columns_mut(start, end - start).copy_from(&(q * w));
        }
        start = end;
    }
    Ok(vectors)
}

/// Principal argument mapped into `(−π, π]`.
fn principal_arg(z: Complex64) -> f64 {
    let theta = z.arg();
    if theta <= -PI {
        PI
    } else {
        theta
    }
}

/// Clusters Rayleigh-quotient eigenvalues of the columns of `vectors` and assembles the
/// grouped decomposition.
fn finish_decomposition(m: &DMatrix<Complex64>, vectors: DMatrix<Complex64>) -> Result<EigDecomposition> {
    let dim = m.nrows();
    let lambdas: Vec<Complex64> = (0..dim)
        .map(|c| {
            let v = vectors.column(c);
            let z = (v.adjoint() * m * v)[(0, 0)];
            if z.norm() > 0.0 {
                z / z.norm()
            } else {
                z
            }
        })
        .collect();
    if lambdas.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::Numeric { message: "non-finite eigenvalue".into(), residual: f64::NAN });
    }

    let mut parent: Vec<usize> = (0..dim).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..dim {
        for j in i + 1..dim {
            if (lambdas[i] - lambdas[j]).norm() < EIGEN_CLUSTER_TOL {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[rj.max(ri)] = rj.min(ri);
                }
            }
        }
    }
    let mut groups: Vec<(f64, Vec<usize>)> = Vec::new();
    for i in 0..dim {
        let root = find(&mut parent, i);
        match groups.iter_mut().find(|(_, members)| find(&mut parent, members[0]) == root) {
            Some((_, members)) => members.push(i),
            None => groups.push((0.0, vec![i])),
        }
    }
    for (theta, members) in &mut groups {
        let mean: Complex64 = members.iter().map(|&i| lambdas[i]).sum();
        *theta = principal_arg(mean);
    }
    groups.sort_by(|a, b| a.0.total_cmp(&b.0));

    let mut p = DMatrix::zeros(dim, dim);
    let mut thetas = Vec::with_capacity(dim);
    let mut clusters = Vec::with_capacity(groups.len());
    let mut col = 0;
    for (theta, members) in &groups {
        let start = col;
        for &i in members {
            p.set_column(col, &vectors.column(i));
            thetas.push(*theta);
            col += 1;
        }
        orthonormalize_columns(&mut p, start..col);
        clusters.push(start..col);
    }
    Ok(EigDecomposition { vectors: ComplexMatrix::from_dmatrix_unchecked(p), thetas, clusters })
}

/// Two passes of modified Gram–Schmidt over a column range.
fn orthonormalize_columns(p: &mut DMatrix<Complex64>, range: Range<usize>) {
    for _ in 0..2 {
        for j in range.clone() {
            let mut v: DVector<Complex64> = p.column(j).into_owned();
            for k in range.start..j {
                let u = p.column(k);
                let overlap = u.dotc(&v);
                v -= u * overlap;
            }
            let norm = v.norm();
            if norm > 0.0 {
                v /= Complex64::new(norm, 0.0);
            }
            p.set_column(j, &v);
        }
    }
}

/// Cached decomposition of `A` for sampling `A(t) = P D(t) P†`.
#[derive(Clone, Debug)]
pub struct UnitaryPath {
    target: Unitary,
    decomposition: EigDecomposition,
}

impl UnitaryPath {
    pub fn new(a: &Unitary) -> Result<Self> {
        Ok(Self { target: a.clone(), decomposition: eig_unitary(a)? })
    }

    pub fn decomposition(&self) -> &EigDecomposition {
        &self.decomposition
    }

    pub fn target(&self) -> &Unitary {
        &self.target
    }

    /// `A(t)` for `t ∈ [0, 1]`.
    pub fn at(&self, t: f64) -> Result<Unitary> {
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::Domain(format!("path parameter t = {t} outside [0, 1]")));
        }
        Unitary::new(self.decomposition.evaluate(t))
    }
}

pub fn connectedness_path(a: &Unitary, t: f64) -> Result<Unitary> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::Domain(format!("path parameter t = {t} outside [0, 1]")));
    }
    UnitaryPath::new(a)?.at(t)
}

/// `U · det(U)^{−1/2^n}` with the principal root; the result has determinant 1.
pub fn project_to_su(u: &Unitary) -> Result<Unitary> {
    let det = u.determinant();
    let dim = u.dim() as f64;
    let root = Complex64::from_polar(det.norm().powf(1.0 / dim), det.arg() / dim);
    Unitary::new(u.matrix.scale(root.inv()))
}
