//! Conventional complex-matrix simulator used as the reference for every
//! multivector result.
//!
//! Qubit 0 is the leftmost Kronecker factor, i.e. the most significant bit
//! of a basis index. Nothing here depends on the multivector modules.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gates::{Circuit, GateKind, Op};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// Dense row-major complex matrix.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(data.len(), rows * cols));
        }
        Ok(ComplexMatrix { rows, cols, data })
    }

    /// Square matrix from nested rows. Panics on ragged input.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        let n = rows.len();
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        ComplexMatrix {
            rows: n,
            cols,
            data: rows.iter().flatten().copied().collect(),
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ComplexMatrix {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = ONE;
        }
        m
    }

    pub fn diag(entries: &[Complex64]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = *e;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Complex64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn matmul(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(self.cols, other.rows));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == ZERO {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> ComplexMatrix {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j).conj();
            }
        }
        out
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &ComplexMatrix) -> ComplexMatrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.data[(i * other.rows + k) * cols + j * other.cols + l] =
                            a * other.get(k, l);
                    }
                }
            }
        }
        out
    }

    fn zip_with(
        &self,
        other: &ComplexMatrix,
        f: impl Fn(Complex64, Complex64) -> Complex64,
    ) -> Result<ComplexMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(
                self.rows * self.cols,
                other.rows * other.cols,
            ));
        }
        Ok(ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(*a, *b))
                .collect(),
        })
    }

    pub fn add(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, s: Complex64) -> ComplexMatrix {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    /// Determinant of a 2×2 matrix.
    pub fn det2(&self) -> Result<Complex64> {
        if self.rows != 2 || self.cols != 2 {
            return Err(Error::DimensionMismatch(self.rows * self.cols, 4));
        }
        Ok(self.get(0, 0) * self.get(1, 1) - self.get(0, 1) * self.get(1, 0))
    }

    /// Largest absolute difference of real or imaginary parts.
    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> f64 {
        if self.rows != other.rows || self.cols != other.cols {
            return f64::INFINITY;
        }
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a.re - b.re).abs().max((a.im - b.im).abs()))
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &ComplexMatrix, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.rows == self.cols
            && self
                .matmul(&self.adjoint())
                .map(|p| p.approx_eq(&Self::identity(self.rows), tol))
                .unwrap_or(false)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &StateVec) -> Result<StateVec> {
        if self.cols != v.amps.len() {
            return Err(Error::DimensionMismatch(self.cols, v.amps.len()));
        }
        let amps = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * v.amps[j]).sum())
            .collect();
        StateVec::new(amps)
    }

    /// Rows and columns permuted so that row `i` of the result is row
    /// `perm[i]` of `self` (likewise for columns).
    pub fn permuted(&self, perm: &[usize]) -> Result<ComplexMatrix> {
        if perm.len() != self.rows || self.rows != self.cols {
            return Err(Error::DimensionMismatch(perm.len(), self.rows));
        }
        let n = self.rows;
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out.data[i * n + j] = self.get(perm[i], perm[j]);
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, " ")?;
            for j in 0..self.cols {
                let z = self.get(i, j);
                write!(f, " {:+.6}{:+.6}i", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Mul<&ComplexMatrix> for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(rhs).expect("dimension mismatch")
    }
}

/// Complex amplitudes of an n-qubit register.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVec {
    amps: Vec<Complex64>,
}

impl StateVec {
    pub fn new(amps: Vec<Complex64>) -> Result<Self> {
        if amps.is_empty() || !amps.len().is_power_of_two() {
            return Err(Error::AmplitudeLength(amps.len()));
        }
        Ok(StateVec { amps })
    }

    pub fn basis(n: usize, index: usize) -> Result<Self> {
        let dim = 1usize << n;
        if index >= dim {
            return Err(Error::QubitIndex { index, n });
        }
        let mut amps = vec![ZERO; dim];
        amps[index] = ONE;
        Ok(StateVec { amps })
    }

    /// Basis state for a bitstring, qubit 0 first.
    pub fn from_bits(bits: &str) -> Result<Self> {
        if bits.is_empty() || !bits.chars().all(|c| c == '0' || c == '1') {
            return Err(Error::InvalidBitstring(bits.to_string()));
        }
        let idx = usize::from_str_radix(bits, 2).expect("validated bitstring");
        Self::basis(bits.len(), idx)
    }

    pub fn n(&self) -> usize {
        self.amps.len().trailing_zeros() as usize
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &StateVec) -> f64 {
        if self.amps.len() != other.amps.len() {
            return f64::INFINITY;
        }
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a.re - b.re).abs().max((a.im - b.im).abs()))
            .fold(0.0, f64::max)
    }

    /// `|ψ⟩⟨ψ|`.
    pub fn outer(&self) -> ComplexMatrix {
        let n = self.amps.len();
        let mut m = ComplexMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, self.amps[i] * self.amps[j].conj());
            }
        }
        m
    }

    /// Applies a 2×2 matrix to `qubit` by index remapping.
    pub fn apply_one(&mut self, u: &ComplexMatrix, qubit: usize) -> Result<()> {
        let n = self.n();
        if qubit >= n {
            return Err(Error::QubitIndex { index: qubit, n });
        }
        if u.rows() != 2 || u.cols() != 2 {
            return Err(Error::DimensionMismatch(u.rows(), 2));
        }
        let bit = 1 << (n - 1 - qubit);
        for i in 0..self.amps.len() {
            if i & bit != 0 {
                continue;
            }
            let (a, b) = (self.amps[i], self.amps[i | bit]);
            self.amps[i] = u.get(0, 0) * a + u.get(0, 1) * b;
            self.amps[i | bit] = u.get(1, 0) * a + u.get(1, 1) * b;
        }
        Ok(())
    }

    /// Applies a 4×4 matrix to `(q1, q2)`, with `q1` as the high bit of the
    /// matrix's local basis.
    pub fn apply_two(&mut self, u: &ComplexMatrix, q1: usize, q2: usize) -> Result<()> {
        let n = self.n();
        for q in [q1, q2] {
            if q >= n {
                return Err(Error::QubitIndex { index: q, n });
            }
        }
        if q1 == q2 {
            return Err(Error::RepeatedQubit(q1));
        }
        if u.rows() != 4 || u.cols() != 4 {
            return Err(Error::DimensionMismatch(u.rows(), 4));
        }
        let b1 = 1 << (n - 1 - q1);
        let b2 = 1 << (n - 1 - q2);
        for i in 0..self.amps.len() {
            if i & (b1 | b2) != 0 {
                continue;
            }
            let idx = [i, i | b2, i | b1, i | b1 | b2];
            let old = idx.map(|k| self.amps[k]);
            for (r, &k) in idx.iter().enumerate() {
                self.amps[k] = (0..4).map(|c| u.get(r, c) * old[c]).sum();
            }
        }
        Ok(())
    }
}

/// Pauli matrix `Σ_k`, k in 1..=3.
pub fn pauli(k: usize) -> Result<ComplexMatrix> {
    let rows = match k {
        1 => vec![vec![ZERO, ONE], vec![ONE, ZERO]],
        2 => vec![vec![ZERO, -I], vec![I, ZERO]],
        3 => vec![vec![ONE, ZERO], vec![ZERO, -ONE]],
        _ => return Err(Error::PauliAxis(k)),
    };
    Ok(ComplexMatrix::from_rows(&rows))
}

fn hadamard() -> ComplexMatrix {
    let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
    ComplexMatrix::from_rows(&[vec![h, h], vec![h, -h]])
}

fn phase(phi: f64) -> ComplexMatrix {
    ComplexMatrix::diag(&[ONE, Complex64::from_polar(1.0, phi)])
}

/// Standard matrix of a gate. Two-qubit gates use the first listed qubit as
/// the high bit (the control for CNOT).
pub fn gate_matrix(g: GateKind) -> ComplexMatrix {
    let real = |rows: &[[f64; 4]; 4]| {
        ComplexMatrix::from_rows(
            &rows
                .iter()
                .map(|r| r.iter().map(|x| Complex64::new(*x, 0.0)).collect())
                .collect::<Vec<_>>(),
        )
    };
    match g {
        GateKind::X => pauli(1).unwrap(),
        GateKind::Y => pauli(2).unwrap(),
        GateKind::Z => pauli(3).unwrap(),
        GateKind::H => hadamard(),
        GateKind::Rotation(theta) => phase(theta),
        GateKind::S => ComplexMatrix::diag(&[ONE, I]),
        GateKind::T => phase(PI / 4.0),
        GateKind::ZPow(alpha) => phase(PI * alpha),
        GateKind::HPow(beta) => {
            // P+ + e^{iπβ} P-, with P± = (I ± H)/2
            let id = ComplexMatrix::identity(2);
            let h = hadamard();
            let plus = id.add(&h).unwrap().scale(Complex64::new(0.5, 0.0));
            let minus = id.sub(&h).unwrap().scale(Complex64::new(0.5, 0.0));
            plus.add(&minus.scale(Complex64::from_polar(1.0, PI * beta)))
                .unwrap()
        }
        GateKind::Cnot => real(&[
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
            [0.0, 0.0, 1.0, 0.0],
        ]),
        GateKind::Cphase => real(&[
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, -1.0],
        ]),
        GateKind::Swap => real(&[
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ]),
    }
}

/// `exp(−i (θ/2) n·Σ) = I cos(θ/2) − i n·Σ sin(θ/2)`.
pub fn su2_rotation(axis: [f64; 3], theta: f64) -> ComplexMatrix {
    let (s, c) = (theta / 2.0).sin_cos();
    let mut m = ComplexMatrix::identity(2).scale(Complex64::new(c, 0.0));
    for (k, nk) in axis.iter().enumerate() {
        let term = pauli(k + 1).unwrap().scale(Complex64::new(0.0, -nk * s));
        m = m.add(&term).unwrap();
    }
    m
}

/// Basis labels, in matrix order, for [`deutsch_gate`].
pub const DEUTSCH_BASIS: [&str; 8] = ["000", "100", "010", "001", "110", "101", "011", "111"];

/// Basis labels, in matrix order, for [`barenco_gate`].
pub const BARENCO_BASIS: [&str; 4] = ["00", "10", "01", "11"];

/// Deutsch three-bit gate: identity on the first six labels of
/// [`DEUTSCH_BASIS`], and `[[i cos(πγ/2), sin(πγ/2)], [sin(πγ/2), i cos(πγ/2)]]`
/// on the last two.
pub fn deutsch_gate(gamma: f64) -> ComplexMatrix {
    let mut m = ComplexMatrix::identity(8);
    let (s, c) = (PI * gamma / 2.0).sin_cos();
    m.set(6, 6, Complex64::new(0.0, c));
    m.set(6, 7, Complex64::new(s, 0.0));
    m.set(7, 6, Complex64::new(s, 0.0));
    m.set(7, 7, Complex64::new(0.0, c));
    m
}

/// Barenco two-bit gate in the order of [`BARENCO_BASIS`]: identity on the
/// first two labels, and on the last two
/// `[[e^{iα} cos θ, −i e^{i(α−φ)} sin θ], [−i e^{i(α+φ)} sin θ, e^{iα} cos θ]]`.
pub fn barenco_gate(phi: f64, alpha: f64, theta: f64) -> ComplexMatrix {
    let mut m = ComplexMatrix::identity(4);
    let (s, c) = theta.sin_cos();
    m.set(2, 2, Complex64::from_polar(c, alpha));
    m.set(2, 3, -I * Complex64::from_polar(s, alpha - phi));
    m.set(3, 2, -I * Complex64::from_polar(s, alpha + phi));
    m.set(3, 3, Complex64::from_polar(c, alpha));
    m
}

/// Permutation taking a matrix written over `labels` to ascending binary
/// label order; feed it to [`ComplexMatrix::permuted`].
pub fn standard_order(labels: &[&str]) -> Vec<usize> {
    let mut perm = vec![0; labels.len()];
    for (pos, l) in labels.iter().enumerate() {
        let idx = usize::from_str_radix(l, 2).expect("binary label");
        perm[idx] = pos;
    }
    perm
}

/// Applies one circuit operation to a statevector.
pub fn apply_op(op: &Op, v: &mut StateVec) -> Result<()> {
    let u = gate_matrix(op.gate);
    match op.qubits.as_slice() {
        [q] if op.gate.arity() == 1 => v.apply_one(&u, *q),
        [q1, q2] if op.gate.arity() == 2 => v.apply_two(&u, *q1, *q2),
        q => Err(Error::Arity {
            gate: op.gate.mnemonic(),
            expected: op.gate.arity(),
            got: q.len(),
        }),
    }
}

/// Runs a circuit on a statevector.
pub fn run_statevector(c: &Circuit, input: &StateVec) -> Result<StateVec> {
    if input.n() != c.n() {
        return Err(Error::DimensionMismatch(1 << c.n(), input.amps.len()));
    }
    let mut v = input.clone();
    for op in c.ops() {
        apply_op(op, &mut v)?;
    }
    Ok(v)
}

/// Full unitary of a circuit, built column by column.
pub fn circuit_unitary(c: &Circuit) -> ComplexMatrix {
    let dim = 1 << c.n();
    let mut m = ComplexMatrix::zeros(dim, dim);
    for j in 0..dim {
        let out = run_statevector(c, &StateVec::basis(c.n(), j).unwrap())
            .expect("circuit validated on construction");
        for (i, a) in out.amps.iter().enumerate() {
            m.set(i, j, *a);
        }
    }
    m
}

/// Eigenvalues of a real symmetric matrix (row-major, `n×n`) by cyclic
/// Jacobi rotations, in ascending order.
pub fn symmetric_eigenvalues(mut a: Vec<f64>, n: usize) -> Vec<f64> {
    assert_eq!(a.len(), n * n, "matrix must be n×n");
    const MAX_SWEEPS: usize = 64;
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * n + j] * a[i * n + j])
            .sum();
        let diag: f64 = (0..n).map(|i| a[i * n + i] * a[i * n + i]).sum();
        if off <= f64::EPSILON * f64::EPSILON * diag || off == 0.0 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let tau = (aqq - app) / (2.0 * apq);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let t = if tau == 0.0 { 1.0 } else { t };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(|x, y| x.partial_cmp(y).unwrap());
    eig
}

/// Eigenvalues of a Hermitian matrix, ascending.
///
/// Works on the real symmetric embedding `[[Re, −Im], [Im, Re]]`, whose
/// spectrum is that of the input with every eigenvalue doubled.
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<Vec<f64>> {
    if m.rows != m.cols {
        return Err(Error::DimensionMismatch(m.rows, m.cols));
    }
    let n = m.rows;
    let d = 2 * n;
    let mut a = vec![0.0; d * d];
    for i in 0..n {
        for j in 0..n {
            let z = m.get(i, j);
            a[i * d + j] = z.re;
            a[i * d + n + j] = -z.im;
            a[(n + i) * d + j] = z.im;
            a[(n + i) * d + n + j] = z.re;
        }
    }
    let eig = symmetric_eigenvalues(a, d);
    Ok(eig.chunks(2).map(|p| 0.5 * (p[0] + p[1])).collect())
}

/// Singular values, descending.
pub fn singular_values(m: &ComplexMatrix) -> Vec<f64> {
    let gram = &m.adjoint() * m;
    let mut sv: Vec<f64> = hermitian_eigenvalues(&gram)
        .expect("gram matrix is square")
        .into_iter()
        .map(|e| e.max(0.0).sqrt())
        .collect();
    sv.reverse();
    sv
}

/// `max_{|ψ|=1} |(U − V)ψ|`, the largest singular value of `U − V`.
pub fn approx_error(u: &ComplexMatrix, v: &ComplexMatrix) -> Result<f64> {
    let d = u.sub(v)?;
    Ok(singular_values(&d)[0])
}

/// `min_φ max_{|ψ|=1} |(U − e^{iφ} V)ψ|`: the error with global phase quotiented.
pub fn approx_error_phase(u: &ComplexMatrix, v: &ComplexMatrix) -> Result<f64> {
    u.sub(v)?;
    let f = |phi: f64| {
        let shifted = v.scale(Complex64::from_polar(1.0, phi));
        singular_values(&u.sub(&shifted).unwrap())[0]
    };
    const GRID: usize = 256;
    let step = 2.0 * PI / GRID as f64;
    let (best_i, _) =
        (0..GRID)
            .map(|i| (i, f(i as f64 * step)))
            .fold(
                (0, f64::INFINITY),
                |acc, x| if x.1 < acc.1 { x } else { acc },
            );
    // golden-section refinement on the bracketing cell pair
    let (mut lo, mut hi) = ((best_i as f64 - 1.0) * step, (best_i as f64 + 1.0) * step);
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - g * (hi - lo);
    let mut x2 = lo + g * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..64 {
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = f(x2);
        }
    }
    Ok(f1.min(f2).min(f(best_i as f64 * step)))
}

/// Reduced density matrix of one qubit of a two-qubit density matrix.
pub fn partial_trace(rho: &ComplexMatrix, keep: usize) -> Result<ComplexMatrix> {
    if rho.rows != 4 || rho.cols != 4 {
        return Err(Error::DimensionMismatch(rho.rows, 4));
    }
    if keep > 1 {
        return Err(Error::QubitIndex { index: keep, n: 2 });
    }
    let idx = |kept: usize, traced: usize| {
        if keep == 0 {
            kept * 2 + traced
        } else {
            traced * 2 + kept
        }
    };
    let mut out = ComplexMatrix::zeros(2, 2);
    for i in 0..2 {
        for j in 0..2 {
            let v = (0..2).map(|t| rho.get(idx(i, t), idx(j, t))).sum();
            out.set(i, j, v);
        }
    }
    Ok(out)
}

/// `Re tr(ρ²)`.
pub fn purity(rho: &ComplexMatrix) -> f64 {
    (rho * rho).trace().re
}

/// `Re tr(ρ O)`.
pub fn expectation(rho: &ComplexMatrix, o: &ComplexMatrix) -> Result<f64> {
    Ok(rho.matmul(o)?.trace().re)
}

/// Polarization `(tr ρΣ1, tr ρΣ2, tr ρΣ3)` of a one-qubit density matrix.
pub fn bloch_vector(rho: &ComplexMatrix) -> Result<[f64; 3]> {
    let mut p = [0.0; 3];
    for (k, slot) in p.iter_mut().enumerate() {
        *slot = expectation(rho, &pauli(k + 1)?)?;
    }
    Ok(p)
}
