//! Dense reference constructions shared by the integration tests. Pauli matrices are
//! built from explicit 2x2 factors and Kronecker products, independent of the library's
//! mask-based realization.
#![allow(dead_code)]

use nalgebra::DMatrix;
use symcirc_core::{Complex64, ComplexMatrix, PauliString};

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn letter_matrix(letter: char) -> DMatrix<Complex64> {
    let (o, z, i) = (c(1.0, 0.0), c(0.0, 0.0), c(0.0, 1.0));
    match letter {
        'I' => DMatrix::from_row_slice(2, 2, &[o, z, z, o]),
        'X' => DMatrix::from_row_slice(2, 2, &[z, o, o, z]),
        'Y' => DMatrix::from_row_slice(2, 2, &[z, -i, i, z]),
        'Z' => DMatrix::from_row_slice(2, 2, &[o, z, z, -o]),
        _ => panic!("bad letter {letter}"),
    }
}

/// Kronecker product of the letters, leftmost letter as the most significant factor.
pub fn kron_letters(letters: &str) -> DMatrix<Complex64> {
    letters.chars().fold(DMatrix::from_element(1, 1, c(1.0, 0.0)), |acc, l| acc.kronecker(&letter_matrix(l)))
}

pub fn all_letter_strings(n: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    for _ in 0..n {
        out = out.into_iter().flat_map(|s| "IXYZ".chars().map(move |l| format!("{s}{l}"))).collect();
    }
    out
}

/// Pauli coefficients `tr(P M) / 2^n` of a dense matrix, zeros dropped.
pub fn decompose(m: &DMatrix<Complex64>, n: usize) -> Vec<(String, Complex64)> {
    let dim = (1 << n) as f64;
    all_letter_strings(n)
        .into_iter()
        .filter_map(|s| {
            let coeff = (kron_letters(&s) * m).trace() / dim;
            (coeff.norm() > 1e-12).then_some((s, coeff))
        })
        .collect()
}

/// Dense matrix of a string, phase included.
pub fn dense_pauli(p: &PauliString) -> DMatrix<Complex64> {
    let phase = [c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0), c(0.0, -1.0)][p.phase_exp() as usize];
    kron_letters(&p.to_letters()) * phase
}

pub fn frob(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> f64 {
    (a - b).iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn dense(m: &ComplexMatrix) -> DMatrix<Complex64> {
    m.as_dmatrix().clone()
}

/// `exp(−i·alpha/2·H)` by truncated Taylor series with scaling and squaring, an
/// independent route to the eigendecomposition-based exponential.
pub fn taylor_exp(h: &DMatrix<Complex64>, alpha: f64) -> DMatrix<Complex64> {
    let a = h * c(0.0, -alpha / 2.0);
    let norm = a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let squarings = (norm.max(1.0).log2().ceil() as u32) + 4;
    let scaled = &a / c(2f64.powi(squarings as i32), 0.0);
    let dim = a.nrows();
    let mut term = DMatrix::<Complex64>::identity(dim, dim);
    let mut sum = term.clone();
    for k in 1..30 {
        term = &term * &scaled / c(k as f64, 0.0);
        sum += &term;
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    sum
}
