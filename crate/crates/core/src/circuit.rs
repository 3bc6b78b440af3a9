//! CNOT-ladder compilation of Pauli exponentials.
//!
//! `exp(−iα/2 · P)` for a Pauli string `P` with active qubits `a_1 < … < a_w` is
//! realized as: per-qubit basis changes taking each letter to `Z`, a CNOT chain
//! `a_1 → a_2 → … → a_w` accumulating parity on `a_w`, `RZ(α)` on `a_w`, then the
//! chain and basis changes undone. `X` uses `H`; `Y` uses `V = H·S†` (`V Y V† = Z`).
//! Equality with the exponential is exact, including global phase.

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::group_ops::Unitary;
use crate::matrix::{ComplexMatrix, DEFAULT_QUBIT_CAP};
use crate::pauli::{PauliString, PauliSum, MAX_QUBITS};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Gate {
    H(usize),
    S(usize),
    Sdg(usize),
    /// `RZ(θ) = exp(−iθ/2 · Z)`.
    Rz(usize, f64),
    Cnot {
        control: usize,
        target: usize,
    },
}

impl Gate {
    fn qubits(&self) -> (usize, Option<usize>) {
        match *self {
            Gate::H(q) | Gate::S(q) | Gate::Sdg(q) | Gate::Rz(q, _) => (q, None),
            Gate::Cnot { control, target } => (control, Some(target)),
        }
    }

    pub fn is_basis_change(&self) -> bool {
        matches!(self, Gate::H(_) | Gate::S(_) | Gate::Sdg(_))
    }

    fn single_qubit_matrix(&self) -> Option<[[Complex64; 2]; 2]> {
        let zero = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        match *self {
            Gate::H(_) => Some([[h, h], [h, -h]]),
            Gate::S(_) => Some([[one, zero], [zero, Complex64::new(0.0, 1.0)]]),
            Gate::Sdg(_) => Some([[one, zero], [zero, Complex64::new(0.0, -1.0)]]),
            Gate::Rz(_, theta) => Some([
                [Complex64::from_polar(1.0, -theta / 2.0), zero],
                [zero, Complex64::from_polar(1.0, theta / 2.0)],
            ]),
            Gate::Cnot { .. } => None,
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Gate::H(q) => write!(f, "H {q}"),
            Gate::S(q) => write!(f, "S {q}"),
            Gate::Sdg(q) => write!(f, "SDG {q}"),
            Gate::Rz(q, theta) => write!(f, "RZ {q} {theta}"),
            Gate::Cnot { control, target } => write!(f, "CNOT {control} {target}"),
        }
    }
}

impl FromStr for Gate {
    type Err = Error;

    fn from_str(line: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("malformed gate line {line:?}"));
        let fields: Vec<&str> = line.split_whitespace().collect();
        let index = |i: usize| -> Result<usize> { fields.get(i).ok_or_else(bad)?.parse().map_err(|_| bad()) };
        let gate = match fields.first().map(|s| s.to_ascii_uppercase()).as_deref() {
            Some("H") if fields.len() == 2 => Gate::H(index(1)?),
            Some("S") if fields.len() == 2 => Gate::S(index(1)?),
            Some("SDG") if fields.len() == 2 => Gate::Sdg(index(1)?),
            Some("RZ") if fields.len() == 3 => Gate::Rz(index(1)?, fields[2].parse().map_err(|_| bad())?),
            Some("CNOT") if fields.len() == 3 => Gate::Cnot { control: index(1)?, target: index(2)? },
            _ => return Err(bad()),
        };
        Ok(gate)
    }
}

/// Gate tallies of a circuit.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GateCounts {
    pub cnot: usize,
    pub rz: usize,
    pub basis_change: usize,
}

/// Ordered gate list on `n` qubits; the first gate is applied first.
#[derive(Clone, Debug, PartialEq)]
pub struct Circuit {
    n: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::Domain(format!("qubit count {n} outside 1..={MAX_QUBITS}")));
        }
        Ok(Self { n, gates: Vec::new() })
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        let (a, b) = gate.qubits();
        if a >= self.n || b.is_some_and(|b| b >= self.n) {
            return Err(Error::Domain(format!("gate `{gate}` addresses a qubit outside 0..{}", self.n)));
        }
        if b == Some(a) {
            return Err(Error::Domain(format!("gate `{gate}` uses the same qubit as control and target")));
        }
        self.gates.push(gate);
        Ok(())
    }

    /// Appends `other`'s gates after this circuit's.
    pub fn extend(&mut self, other: &Circuit) -> Result<()> {
        crate::error::check_dim(self.n, other.n)?;
        self.gates.extend_from_slice(&other.gates);
        Ok(())
    }

    pub fn counts(&self) -> GateCounts {
        self.gates.iter().fold(GateCounts::default(), |mut acc, g| {
            match g {
                Gate::Cnot { .. } => acc.cnot += 1,
                Gate::Rz(..) => acc.rz += 1,
                _ => acc.basis_change += 1,
            }
            acc
        })
    }

    /// Header `QUBITS n`, then one gate per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("QUBITS {}\n", self.n);
        for g in &self.gates {
            out.push_str(&g.to_string());
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::Parse("missing QUBITS header".into()))?;
        let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            [kw, n] if kw.eq_ignore_ascii_case("QUBITS") => {
                n.parse().map_err(|_| Error::Parse(format!("bad header {header:?}")))?
            }
            _ => return Err(Error::Parse(format!("bad header {header:?}"))),
        };
        let mut circuit = Circuit::new(n)?;
        for line in lines {
            circuit.push(line.parse()?)?;
        }
        Ok(circuit)
    }
}

fn apply_single(m: &mut DMatrix<Complex64>, q: usize, g: [[Complex64; 2]; 2]) {
    let bit = 1usize << q;
    for r0 in (0..m.nrows()).filter(|r| r & bit == 0) {
        let r1 = r0 | bit;
        for c in 0..m.ncols() {
            let (a, b) = (m[(r0, c)], m[(r1, c)]);
            m[(r0, c)] = g[0][0] * a + g[0][1] * b;
            m[(r1, c)] = g[1][0] * a + g[1][1] * b;
        }
    }
}

/// Ordered product of the embedded gate matrices; empty circuit gives the identity.
pub fn circuit_to_matrix(circuit: &Circuit) -> Result<Unitary> {
    if circuit.n > DEFAULT_QUBIT_CAP {
        return Err(Error::Capacity { what: "dense realization", n: circuit.n, cap: DEFAULT_QUBIT_CAP });
    }
    let dim = 1usize << circuit.n;
    let mut m = DMatrix::<Complex64>::identity(dim, dim);
    for gate in &circuit.gates {
        let (a, b) = gate.qubits();
        if a >= circuit.n || b.is_some_and(|b| b >= circuit.n) {
            return Err(Error::Domain(format!("gate `{gate}` addresses a qubit outside 0..{}", circuit.n)));
        }
        match *gate {
            Gate::Cnot { control, target } => {
                let (cb, tb) = (1usize << control, 1usize << target);
                for r in (0..dim).filter(|r| r & cb != 0 && r & tb == 0) {
                    m.swap_rows(r, r | tb);
                }
            }
            _ => apply_single(&mut m, a, gate.single_qubit_matrix().expect("single-qubit gate")),
        }
    }
    Unitary::new(ComplexMatrix::from_dmatrix_unchecked(m))
}

/// True iff at most two distinct non-identity letters occur across all terms.
pub fn two_pauli_condition(s: &PauliSum) -> bool {
    s.letters_used().len() <= 2
}

/// Circuit for `exp(−i·alpha/2·p)`.
pub fn synthesize_pauli_exponential(p: &PauliString, alpha: f64) -> Result<Circuit> {
    if p.is_identity() {
        return Err(Error::InvalidPauli("the all-identity string only contributes a global phase".into()));
    }
    if p.phase_exp() != 0 {
        return Err(Error::InvalidPauli(format!("{p} carries a phase; fold it into the angle")));
    }
    let n = p.num_qubits();
    let active: Vec<usize> = (0..n).filter(|&q| (p.support() >> q) & 1 == 1).collect();
    let mut c = Circuit::new(n)?;
    for &q in &active {
        match p.letter(q) {
            'X' => c.push(Gate::H(q))?,
            'Y' => {
                c.push(Gate::Sdg(q))?;
                c.push(Gate::H(q))?;
            }
            _ => {}
        }
    }
    for pair in active.windows(2) {
        c.push(Gate::Cnot { control: pair[0], target: pair[1] })?;
    }
    c.push(Gate::Rz(*active.last().expect("non-identity string"), alpha))?;
    for pair in active.windows(2).rev() {
        c.push(Gate::Cnot { control: pair[0], target: pair[1] })?;
    }
    for &q in &active {
        match p.letter(q) {
            'X' => c.push(Gate::H(q))?,
            'Y' => {
                c.push(Gate::H(q))?;
                c.push(Gate::S(q))?;
            }
            _ => {}
        }
    }
    Ok(c)
}

/// Concatenated per-term circuits for `exp(−i·alpha/2·s)`.
///
/// Requires real coefficients, at most two distinct letters, no identity term and
/// pairwise-commuting terms; otherwise the product of term exponentials would not
/// equal the exponential of the sum and synthesis is refused.
pub fn synthesize_sum_exponential(s: &PauliSum, alpha: f64) -> Result<Circuit> {
    if !s.is_hermitian() {
        return Err(Error::Convention(format!("{s} has complex coefficients")));
    }
    if !two_pauli_condition(s) {
        let letters: String = s.letters_used().into_iter().collect();
        return Err(Error::ProductFormulaInapplicable(format!("sum uses the three letters {letters}")));
    }
    if s.has_identity_term() {
        return Err(Error::InvalidPauli("the all-identity string only contributes a global phase".into()));
    }
    let terms: Vec<(&PauliString, &Complex64)> = s.terms().collect();
    for (i, (a, _)) in terms.iter().enumerate() {
        for (b, _) in &terms[i + 1..] {
            if !a.commutes_with(b) {
                return Err(Error::ProductFormulaInapplicable(format!("{a} and {b} anticommute")));
            }
        }
    }
    let mut circuit = Circuit::new(s.num_qubits())?;
    for (p, coeff) in terms {
        circuit.extend(&synthesize_pauli_exponential(p, alpha * coeff.re)?)?;
    }
    Ok(circuit)
}
