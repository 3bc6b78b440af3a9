//! Symplectic Pauli strings and canonical Pauli sums.
//!
//! A [`PauliString`] on `n` qubits is stored as two bit masks plus a power of `i`.
//! Qubit `q` carries `X` when only bit `q` of `x_mask` is set, `Z` when only bit `q`
//! of `z_mask` is set and `Y` when both are set. The overall operator is
//! `i^phase_exp · P_{n-1} ⊗ … ⊗ P_0`, so qubit 0 is the least-significant bit of a
//! computational-basis index and the rightmost letter of the text form.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{check_dim, Error, Result};
use crate::matrix::{ComplexMatrix, DEFAULT_QUBIT_CAP};

/// Coefficients with modulus below this are treated as zero.
pub const ZERO_TOL: f64 = 1e-12;

/// Largest qubit count a mask can hold.
pub const MAX_QUBITS: usize = 64;

const I_POWERS: [Complex64; 4] = [
    Complex64 { re: 1.0, im: 0.0 },
    Complex64 { re: 0.0, im: 1.0 },
    Complex64 { re: -1.0, im: 0.0 },
    Complex64 { re: 0.0, im: -1.0 },
];

/// `i^k`.
pub fn i_pow(k: u8) -> Complex64 {
    I_POWERS[(k & 3) as usize]
}

fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// One tensor product of `{I, X, Y, Z}` with a phase `i^phase_exp`.
///
/// Ordering (derived) is by `(n, z_mask, x_mask, phase_exp)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PauliString {
    n: usize,
    z_mask: u64,
    x_mask: u64,
    phase_exp: u8,
}

impl PauliString {
    pub fn new(n: usize, x_mask: u64, z_mask: u64, phase_exp: u8) -> Result<Self> {
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::InvalidPauli(format!("qubit count {n} outside 1..={MAX_QUBITS}")));
        }
        if (x_mask | z_mask) & !low_mask(n) != 0 {
            return Err(Error::InvalidPauli(format!("masks use bits beyond qubit {}", n - 1)));
        }
        Ok(Self { n, z_mask, x_mask, phase_exp: phase_exp & 3 })
    }

    pub(crate) fn from_parts(n: usize, x_mask: u64, z_mask: u64, phase_exp: u8) -> Self {
        debug_assert!((x_mask | z_mask) & !low_mask(n) == 0);
        Self { n, z_mask, x_mask, phase_exp: phase_exp & 3 }
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, 0, 0, 0)
    }

    /// A single letter on `qubit`, identity elsewhere.
    pub fn single(n: usize, qubit: usize, letter: char) -> Result<Self> {
        if qubit >= n {
            return Err(Error::InvalidPauli(format!("qubit {qubit} out of range for n = {n}")));
        }
        let (x, z) = letter_bits(letter)?;
        Self::new(n, (x as u64) << qubit, (z as u64) << qubit, 0)
    }

    /// Parses letters over `{I,X,Y,Z}`, most-significant qubit first.
    pub fn from_letters(letters: &str) -> Result<Self> {
        let chars: Vec<char> = letters.trim().chars().collect();
        let n = chars.len();
        let mut x_mask = 0u64;
        let mut z_mask = 0u64;
        for (pos, &ch) in chars.iter().enumerate() {
            let qubit = n - 1 - pos;
            let (x, z) = letter_bits(ch)?;
            x_mask |= (x as u64) << qubit;
            z_mask |= (z as u64) << qubit;
        }
        Self::new(n, x_mask, z_mask, 0)
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn x_mask(&self) -> u64 {
        self.x_mask
    }

    pub fn z_mask(&self) -> u64 {
        self.z_mask
    }

    pub fn phase_exp(&self) -> u8 {
        self.phase_exp
    }

    /// The same string with phase exponent reset to 0.
    pub fn without_phase(&self) -> Self {
        Self { phase_exp: 0, ..*self }
    }

    pub fn with_phase(&self, phase_exp: u8) -> Self {
        Self { phase_exp: phase_exp & 3, ..*self }
    }

    /// Bit mask of qubits carrying a non-identity letter.
    pub fn support(&self) -> u64 {
        self.x_mask | self.z_mask
    }

    pub fn weight(&self) -> usize {
        self.support().count_ones() as usize
    }

    pub fn is_identity(&self) -> bool {
        self.support() == 0
    }

    pub fn letter(&self, qubit: usize) -> char {
        match ((self.x_mask >> qubit) & 1, (self.z_mask >> qubit) & 1) {
            (0, 0) => 'I',
            (1, 0) => 'X',
            (0, 1) => 'Z',
            _ => 'Y',
        }
    }

    /// Letters, most-significant qubit first, without the phase.
    pub fn to_letters(&self) -> String {
        (0..self.n).rev().map(|q| self.letter(q)).collect()
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        let anti = (self.x_mask & other.z_mask).count_ones() + (self.z_mask & other.x_mask).count_ones();
        anti.is_multiple_of(2)
    }

    pub fn to_matrix(&self) -> Result<ComplexMatrix> {
        self.to_matrix_capped(DEFAULT_QUBIT_CAP)
    }

    /// Dense realization, refusing qubit counts above `cap`.
    pub fn to_matrix_capped(&self, cap: usize) -> Result<ComplexMatrix> {
        if self.n > cap {
            return Err(Error::Capacity { what: "dense realization", n: self.n, cap });
        }
        let dim = 1usize << self.n;
        let mut m = DMatrix::zeros(dim, dim);
        self.accumulate_into(&mut m, Complex64::new(1.0, 0.0));
        Ok(ComplexMatrix::from_dmatrix_unchecked(m))
    }

    /// Adds `coeff · self` to a dense matrix.
    ///
    /// With `P = i^{xz} X^x Z^z` per qubit, `⟨r|X^x Z^z|c⟩ = (−1)^{z·c}` for `r = c ⊕ x`.
    fn accumulate_into(&self, m: &mut DMatrix<Complex64>, coeff: Complex64) {
        let dim = m.nrows();
        let base = coeff * i_pow(self.phase_exp.wrapping_add((self.x_mask & self.z_mask).count_ones() as u8));
        let x = self.x_mask as usize;
        let z = self.z_mask as usize;
        for col in 0..dim {
            let row = col ^ x;
            let sign = if (z & col).count_ones().is_multiple_of(2) { 1.0 } else { -1.0 };
            m[(row, col)] += base * sign;
        }
    }
}

fn letter_bits(ch: char) -> Result<(bool, bool)> {
    match ch.to_ascii_uppercase() {
        'I' => Ok((false, false)),
        'X' => Ok((true, false)),
        'Y' => Ok((true, true)),
        'Z' => Ok((false, true)),
        other => Err(Error::InvalidPauli(format!("unknown letter {other:?}"))),
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = ["", "i", "-", "-i"][self.phase_exp as usize];
        write!(f, "{prefix}{}", self.to_letters())
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliString({self})")
    }
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (phase, rest) = if let Some(rest) = s.strip_prefix("-i") {
            (3, rest)
        } else if let Some(rest) = s.strip_prefix('-') {
            (2, rest)
        } else if let Some(rest) = s.strip_prefix('i') {
            (1, rest)
        } else {
            (0, s)
        };
        Ok(Self::from_letters(rest)?.with_phase(phase))
    }
}

/// Product `a · b` including the accumulated phase.
pub fn pauli_multiply(a: &PauliString, b: &PauliString) -> Result<PauliString> {
    check_dim(a.n, b.n)?;
    let x = a.x_mask ^ b.x_mask;
    let z = a.z_mask ^ b.z_mask;
    // i^{x1 z1} X^x1 Z^z1 · i^{x2 z2} X^x2 Z^z2 = i^{x1 z1 + x2 z2 + 2 z1 x2} X^x Z^z, then X^x Z^z = i^{-xz} P(x, z).
    let phase = a.phase_exp as u32
        + b.phase_exp as u32
        + (a.x_mask & a.z_mask).count_ones()
        + (b.x_mask & b.z_mask).count_ones()
        + 2 * (a.z_mask & b.x_mask).count_ones()
        + 3 * (x & z).count_ones();
    Ok(PauliString::from_parts(a.n, x, z, (phase % 4) as u8))
}

/// `ab − ba` as a Pauli sum: empty when `a` and `b` commute, otherwise `2ab`.
pub fn pauli_commutator(a: &PauliString, b: &PauliString) -> Result<PauliSum> {
    check_dim(a.n, b.n)?;
    let mut out = PauliSum::zero(a.n);
    if !a.commutes_with(b) {
        let product = pauli_multiply(a, b)?;
        out.add_term(&product, Complex64::new(2.0, 0.0));
        out.prune();
    }
    Ok(out)
}

/// Canonical complex-weighted combination of phase-free Pauli strings.
#[derive(Clone, PartialEq)]
pub struct PauliSum {
    n: usize,
    terms: BTreeMap<PauliString, Complex64>,
}

/// Folds phases into coefficients, merges duplicates and drops zeros.
pub fn canonicalize<I>(n: usize, terms: I) -> Result<PauliSum>
where
    I: IntoIterator<Item = (PauliString, Complex64)>,
{
    if n == 0 || n > MAX_QUBITS {
        return Err(Error::InvalidPauli(format!("qubit count {n} outside 1..={MAX_QUBITS}")));
    }
    let mut sum = PauliSum::zero(n);
    for (p, c) in terms {
        check_dim(n, p.n)?;
        sum.add_term(&p, c);
    }
    sum.prune();
    Ok(sum)
}

impl PauliSum {
    /// The empty sum.
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn from_string(p: &PauliString) -> Self {
        let mut s = Self::zero(p.n);
        s.add_term(p, Complex64::new(1.0, 0.0));
        s
    }

    /// Parses a whitespace-separated list of letter strings with unit coefficients,
    /// e.g. `"XI IX"`.
    pub fn from_letter_terms(text: &str) -> Result<Self> {
        let strings = text.split_whitespace().map(PauliString::from_str).collect::<Result<Vec<_>>>()?;
        let n = strings.first().map(|p| p.n).ok_or_else(|| Error::Parse("empty term list".into()))?;
        canonicalize(n, strings.into_iter().map(|p| (p, Complex64::new(1.0, 0.0))))
    }

    fn add_term(&mut self, p: &PauliString, coeff: Complex64) {
        let folded = coeff * i_pow(p.phase_exp);
        *self.terms.entry(p.without_phase()).or_insert(Complex64::new(0.0, 0.0)) += folded;
    }

    fn prune(&mut self) {
        self.terms.retain(|_, c| c.norm() >= ZERO_TOL);
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical `(z_mask, x_mask)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&PauliString, &Complex64)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, p: &PauliString) -> Complex64 {
        self.terms.get(&p.without_phase()).map(|c| c * i_pow(p.phase_exp)).unwrap_or_default()
    }

    /// Idempotent re-canonicalization.
    pub fn canonicalize(&self) -> Self {
        let mut out = self.clone();
        out.prune();
        out
    }

    /// Hermitian iff every folded coefficient is real.
    pub fn is_hermitian(&self) -> bool {
        self.terms.values().all(|c| c.im.abs() < ZERO_TOL)
    }

    pub fn has_identity_term(&self) -> bool {
        self.terms.keys().any(|p| p.is_identity())
    }

    /// Sum of squared coefficient moduli; the Hilbert–Schmidt norm² divided by `2^n`.
    pub fn coefficient_norm_sqr(&self) -> f64 {
        self.terms.values().map(|c| c.norm_sqr()).sum()
    }

    /// Non-identity letters appearing anywhere in the sum.
    pub fn letters_used(&self) -> Vec<char> {
        let mut seen = [false; 3];
        for p in self.terms.keys() {
            for q in 0..self.n {
                match p.letter(q) {
                    'X' => seen[0] = true,
                    'Y' => seen[1] = true,
                    'Z' => seen[2] = true,
                    _ => {}
                }
            }
        }
        ['X', 'Y', 'Z'].into_iter().zip(seen).filter_map(|(l, s)| s.then_some(l)).collect()
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        let mut out = Self::zero(self.n);
        for (p, c) in &self.terms {
            out.add_term(p, c * factor);
        }
        out.prune();
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_dim(self.n, other.n)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p, *c);
        }
        out.prune();
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn to_matrix(&self) -> Result<ComplexMatrix> {
        self.to_matrix_capped(DEFAULT_QUBIT_CAP)
    }

    pub fn to_matrix_capped(&self, cap: usize) -> Result<ComplexMatrix> {
        if self.n > cap {
            return Err(Error::Capacity { what: "dense realization", n: self.n, cap });
        }
        let dim = 1usize << self.n;
        let mut m = DMatrix::zeros(dim, dim);
        for (p, c) in &self.terms {
            p.accumulate_into(&mut m, *c);
        }
        Ok(ComplexMatrix::from_dmatrix_unchecked(m))
    }

    /// One line per term: `(<re>,<im>) <letters>`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (p, c) in &self.terms {
            out.push_str(&format!("({},{}) {}\n", c.re, c.im, p.to_letters()));
        }
        out
    }

    /// Inverse of [`PauliSum::to_text`]. Blank lines and `#` comments are skipped; a line
    /// may also hold several terms joined by ` + ` (the [`fmt::Display`] form).
    pub fn from_text(text: &str) -> Result<Self> {
        let mut terms = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            for term in line.split(" + ") {
                terms.push(parse_term_line(term.trim())?);
            }
        }
        let n = terms.first().map(|(p, _)| p.n).ok_or_else(|| Error::Parse("no terms".into()))?;
        canonicalize(n, terms)
    }
}

fn parse_term_line(line: &str) -> Result<(PauliString, Complex64)> {
    let bad = || Error::Parse(format!("malformed term line {line:?}"));
    let rest = line.strip_prefix('(').ok_or_else(bad)?;
    let (coeff, letters) = rest.split_once(')').ok_or_else(bad)?;
    let (re, im) = coeff.split_once(',').ok_or_else(bad)?;
    let re: f64 = re.trim().parse().map_err(|_| bad())?;
    let im: f64 = im.trim().parse().map_err(|_| bad())?;
    Ok((PauliString::from_letters(letters)?, Complex64::new(re, im)))
}

impl fmt::Display for PauliSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(p, c)| format!("({},{}) {}", c.re, c.im, p.to_letters())).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for PauliSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliSum[{self}]")
    }
}

/// Bilinear expansion of `[a, b]` over [`pauli_commutator`].
pub fn sum_commutator(a: &PauliSum, b: &PauliSum) -> Result<PauliSum> {
    check_dim(a.n, b.n)?;
    let mut out = PauliSum::zero(a.n);
    for (pa, ca) in &a.terms {
        for (pb, cb) in &b.terms {
            if !pa.commutes_with(pb) {
                let product = pauli_multiply(pa, pb)?;
                out.add_term(&product, ca * cb * 2.0);
            }
        }
    }
    out.prune();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn multiply_examples() {
        let xy = pauli_multiply(&p("X"), &p("Y")).unwrap();
        assert_eq!((xy.x_mask(), xy.z_mask(), xy.phase_exp()), (0, 1, 1));
        let xx = pauli_multiply(&p("X"), &p("X")).unwrap();
        assert!(xx.is_identity());
        assert_eq!(xx.phase_exp(), 0);
        assert_eq!(pauli_multiply(&p("XI"), &p("IZ")).unwrap(), p("XZ"));
    }

    #[test]
    fn multiply_rejects_mismatched_sizes() {
        assert!(matches!(pauli_multiply(&p("X"), &p("XX")), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn commutator_examples() {
        let xy = pauli_commutator(&p("X"), &p("Y")).unwrap();
        assert_eq!(xy.len(), 1);
        assert_eq!(xy.coefficient(&p("Z")), c(0.0, 2.0));
        assert!(pauli_commutator(&p("X"), &p("X")).unwrap().is_empty());
        assert!(pauli_commutator(&p("XX"), &p("YY")).unwrap().is_empty());
    }

    #[test]
    fn canonicalize_examples() {
        let two_x = canonicalize(1, [(p("X"), c(1.0, 0.0)), (p("X"), c(1.0, 0.0))]).unwrap();
        assert_eq!(two_x.coefficient(&p("X")), c(2.0, 0.0));
        assert!(canonicalize(1, [(p("X"), c(1.0, 0.0)), (p("X"), c(-1.0, 0.0))]).unwrap().is_empty());
        let minus_z = canonicalize(1, [(p("Z").with_phase(2), c(1.0, 0.0))]).unwrap();
        assert_eq!(minus_z.len(), 1);
        let (key, coeff) = minus_z.terms().next().unwrap();
        assert_eq!(key.phase_exp(), 0);
        assert_eq!(*coeff, c(-1.0, 0.0));
    }

    #[test]
    fn canonicalize_is_idempotent() {
        let s = canonicalize(2, [(p("ZY"), c(0.5, 0.0)), (p("XI"), c(0.0, 1.0)), (p("ZY").with_phase(1), c(1.0, 0.0))])
            .unwrap();
        assert_eq!(s.canonicalize(), s);
    }

    #[test]
    fn terms_sorted_by_z_then_x() {
        let s = PauliSum::from_letter_terms("ZI IZ XI IX").unwrap();
        let keys: Vec<(u64, u64)> = s.terms().map(|(p, _)| (p.z_mask(), p.x_mask())).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(s.terms().next().unwrap().0.to_letters(), "IX");
    }

    #[test]
    fn sum_commutator_examples() {
        let a = PauliSum::from_letter_terms("XI IX").unwrap();
        let b = PauliSum::from_letter_terms("ZI IZ").unwrap();
        let got = sum_commutator(&a, &b).unwrap();
        let want = canonicalize(2, [(p("YI"), c(0.0, -2.0)), (p("IY"), c(0.0, -2.0))]).unwrap();
        assert_eq!(got, want);
        assert!(sum_commutator(&a, &a).unwrap().is_empty());
        let xx = PauliSum::from_letter_terms("XX").unwrap();
        let zz = PauliSum::from_letter_terms("ZZ").unwrap();
        assert!(sum_commutator(&xx, &zz).unwrap().is_empty());
    }

    #[test]
    fn single_qubit_matrices() {
        let x = p("X").to_matrix().unwrap();
        assert_eq!(x.get(0, 1), c(1.0, 0.0));
        assert_eq!(x.get(1, 0), c(1.0, 0.0));
        assert_eq!(x.get(0, 0), c(0.0, 0.0));
        let y = p("Y").to_matrix().unwrap();
        assert_eq!(y.get(0, 1), c(0.0, -1.0));
        assert_eq!(y.get(1, 0), c(0.0, 1.0));
        let z = p("Z").to_matrix().unwrap();
        assert_eq!(z.get(0, 0), c(1.0, 0.0));
        assert_eq!(z.get(1, 1), c(-1.0, 0.0));
    }

    #[test]
    fn y_equals_i_x_z() {
        let x = p("X").to_matrix().unwrap();
        let z = p("Z").to_matrix().unwrap();
        let ixz = x.mul(&z).unwrap().scale(c(0.0, 1.0));
        assert_eq!(ixz, p("Y").to_matrix().unwrap());
    }

    #[test]
    fn xi_plus_ix_matrix() {
        let m = PauliSum::from_letter_terms("XI IX").unwrap().to_matrix().unwrap();
        let ones = [(0, 1), (1, 0), (2, 3), (3, 2), (0, 2), (2, 0), (1, 3), (3, 1)];
        for r in 0..4 {
            for col in 0..4 {
                let want = if ones.contains(&(r, col)) { 1.0 } else { 0.0 };
                assert_eq!(m.get(r, col), c(want, 0.0), "entry ({r},{col})");
            }
        }
    }

    #[test]
    fn capacity_cap() {
        let big = PauliString::identity(11).unwrap();
        assert!(matches!(big.to_matrix(), Err(Error::Capacity { .. })));
        assert!(big.to_matrix_capped(11).is_ok());
    }

    #[test]
    fn text_round_trip() {
        let s = canonicalize(3, [(p("XYZ"), c(0.25, -1.5)), (p("IIZ"), c(1.0 / 3.0, 0.0))]).unwrap();
        assert_eq!(PauliSum::from_text(&s.to_text()).unwrap(), s);
        assert_eq!(PauliSum::from_letter_terms("XX").unwrap().to_text(), "(1,0) XX\n");
        assert_eq!(PauliSum::from_text(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn letters_and_display() {
        assert_eq!(p("XIZ").to_letters(), "XIZ");
        assert_eq!(p("XIZ").letter(2), 'X');
        assert_eq!(p("XIZ").letter(0), 'Z');
        assert_eq!(p("-iY").to_string(), "-iY");
        assert!(PauliString::from_letters("XQ").is_err());
    }
}
