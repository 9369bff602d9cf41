//! Gate actions on multivector states and sequential circuits.
//!
//! Single-qubit gates on one qubit use `σ_k ψ σ3` style formulas; on two
//! qubits they use left multiplication by particle bivectors together with
//! right multiplication by `J` or `E`. Diagonal phase gates split the state
//! into the `Z = ±1` halves and rotate the `−1` half by `cos φ + J sin φ`.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4, PI};
use std::fmt;

use crate::clifford::cl3;
use crate::error::{Error, Result};
use crate::msta::{complex_structure, correlator, MstaMultivector, MstaState, MAX_QUBITS};

/// Gate roster with its real parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GateKind {
    X,
    Y,
    Z,
    H,
    /// `diag(1, e^{iθ})`.
    Rotation(f64),
    S,
    T,
    /// `diag(1, e^{iπα})`.
    ZPow(f64),
    /// Principal power `H^β`.
    HPow(f64),
    Cnot,
    Cphase,
    Swap,
}

impl GateKind {
    /// Number of qubit indices the gate acts on.
    pub fn arity(&self) -> usize {
        match self {
            GateKind::Cnot | GateKind::Cphase | GateKind::Swap => 2,
            _ => 1,
        }
    }

    /// Upper-case mnemonic, as used in circuit files.
    pub fn mnemonic(&self) -> &'static str {
        match self {
            GateKind::X => "X",
            GateKind::Y => "Y",
            GateKind::Z => "Z",
            GateKind::H => "H",
            GateKind::Rotation(_) => "RZ",
            GateKind::S => "S",
            GateKind::T => "T",
            GateKind::ZPow(_) => "ZPOW",
            GateKind::HPow(_) => "HPOW",
            GateKind::Cnot => "CNOT",
            GateKind::Cphase => "CPHASE",
            GateKind::Swap => "SWAP",
        }
    }

    /// Real parameter, if the gate has one.
    pub fn param(&self) -> Option<f64> {
        match *self {
            GateKind::Rotation(x) | GateKind::ZPow(x) | GateKind::HPow(x) => Some(x),
            _ => None,
        }
    }
}

/// A gate applied to specific qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct Op {
    pub gate: GateKind,
    pub qubits: Vec<usize>,
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.gate.mnemonic())?;
        if let Some(p) = self.gate.param() {
            // `{:?}` on f64 prints the shortest round-tripping form
            write!(f, " {p:?}")?;
        }
        for q in &self.qubits {
            write!(f, " {q}")?;
        }
        Ok(())
    }
}

/// Ordered gate list over a fixed qubit count.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    n: usize,
    ops: Vec<Op>,
}

impl Circuit {
    pub fn new(n: usize) -> Result<Self> {
        if !(1..=MAX_QUBITS).contains(&n) {
            return Err(Error::UnsupportedQubitCount(n));
        }
        Ok(Circuit { n, ops: Vec::new() })
    }

    /// Appends a gate after validating its qubit indices.
    pub fn push(&mut self, gate: GateKind, qubits: &[usize]) -> Result<()> {
        if qubits.len() != gate.arity() {
            return Err(Error::Arity {
                gate: gate.mnemonic(),
                expected: gate.arity(),
                got: qubits.len(),
            });
        }
        if gate.arity() == 2 && self.n < 2 {
            return Err(Error::TwoQubitGateOnSmallState(self.n));
        }
        for &q in qubits {
            check_qubit(q, self.n)?;
        }
        if qubits.len() == 2 && qubits[0] == qubits[1] {
            return Err(Error::RepeatedQubit(qubits[0]));
        }
        self.ops.push(Op {
            gate,
            qubits: qubits.to_vec(),
        });
        Ok(())
    }

    /// Builder form of [`Circuit::push`].
    pub fn with(mut self, gate: GateKind, qubits: &[usize]) -> Result<Self> {
        self.push(gate, qubits)?;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ops(&self) -> &[Op] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }
}

fn check_qubit(q: usize, n: usize) -> Result<()> {
    if q >= n {
        return Err(Error::QubitIndex { index: q, n });
    }
    Ok(())
}

fn check_pair(q1: usize, q2: usize, m: &MstaState) -> Result<()> {
    if m.n() < 2 {
        return Err(Error::TwoQubitGateOnSmallState(m.n()));
    }
    check_qubit(q1, m.n())?;
    check_qubit(q2, m.n())?;
    if q1 == q2 {
        return Err(Error::RepeatedQubit(q1));
    }
    Ok(())
}

fn state(mv: MstaMultivector) -> MstaState {
    MstaState::from_mv_unchecked(mv)
}

fn sigma(n: usize, a: usize, k: usize) -> MstaMultivector {
    MstaMultivector::sigma(n, a, k)
}

fn isigma(n: usize, a: usize, k: usize) -> MstaMultivector {
    MstaMultivector::isigma(n, a, k)
}

/// Pauli `Σ_k` on `qubit`: `σ_k ψ σ3` for one qubit, `−iσ_k^a ψ J` for two.
pub fn apply_pauli(k: usize, qubit: usize, m: &MstaState) -> Result<MstaState> {
    if !(1..=3).contains(&k) {
        return Err(Error::PauliAxis(k));
    }
    let n = m.n();
    check_qubit(qubit, n)?;
    let out = if n == 1 {
        sigma(1, 0, k) * m.mv() * sigma(1, 0, 3)
    } else {
        -(isigma(n, qubit, k) * m.mv() * complex_structure(n))
    };
    Ok(state(out))
}

/// Hadamard: `((σ1+σ3)/√2) ψ σ3` for one qubit,
/// `−((iσ1^a + iσ3^a)/√2) ψ J` for two.
pub fn apply_hadamard(qubit: usize, m: &MstaState) -> Result<MstaState> {
    let n = m.n();
    check_qubit(qubit, n)?;
    let out = if n == 1 {
        let axis = (sigma(1, 0, 1) + sigma(1, 0, 3)).scale(FRAC_1_SQRT_2);
        axis * m.mv() * sigma(1, 0, 3)
    } else {
        let axis = (isigma(n, qubit, 1) + isigma(n, qubit, 3)).scale(FRAC_1_SQRT_2);
        -(axis * m.mv() * complex_structure(n))
    };
    Ok(state(out))
}

/// Multiplies the `|1⟩` component of `qubit` by `e^{iφ}`.
fn apply_phase(phi: f64, qubit: usize, m: &MstaState) -> Result<MstaState> {
    let n = m.n();
    let flipped = apply_pauli(3, qubit, m)?;
    let plus = (m.mv() + flipped.mv()).scale(0.5);
    let minus = m.mv() - &plus;
    let turned = minus.scale(phi.cos()) + (&minus * complex_structure(n)).scale(phi.sin());
    Ok(state(plus + turned))
}

/// `R_θ = diag(1, e^{iθ})`: fixes 1 and iσ3, sends iσ_{1,2} to
/// `iσ_{1,2}(cos θ + iσ3 sin θ)`.
pub fn apply_rotation(theta: f64, qubit: usize, m: &MstaState) -> Result<MstaState> {
    apply_phase(theta, qubit, m)
}

/// Phase gate `S = diag(1, i)`.
pub fn apply_phase_s(qubit: usize, m: &MstaState) -> Result<MstaState> {
    apply_phase(FRAC_PI_2, qubit, m)
}

/// π/8 gate `T = diag(1, e^{iπ/4})`.
pub fn apply_t(qubit: usize, m: &MstaState) -> Result<MstaState> {
    apply_phase(FRAC_PI_4, qubit, m)
}

/// `Z^α = diag(1, e^{iπα})`.
pub fn apply_z_power(alpha: f64, qubit: usize, m: &MstaState) -> Result<MstaState> {
    apply_phase(PI * alpha, qubit, m)
}

/// Principal power `H^β`: left multiplication by
/// `exp(−i (πβ/2)(σ1+σ3)/√2)` in the qubit's factor, right multiplication
/// by `cos(πβ/2) + J sin(πβ/2)`. At β = 1 this is the Hadamard action.
pub fn apply_h_power(beta: f64, qubit: usize, m: &MstaState) -> Result<MstaState> {
    let n = m.n();
    check_qubit(qubit, n)?;
    let half = PI * beta / 2.0;
    let axis = (cl3::sigma(1) + cl3::sigma(3)).scale(FRAC_1_SQRT_2);
    let rotor = (&cl3::i() * &axis).scale(-half).exp_bivector()?;
    let left = MstaMultivector::embed(n, qubit, &rotor)?;
    let right = MstaMultivector::scalar(n, half.cos()) + complex_structure(n).scale(half.sin());
    Ok(state(left * m.mv() * right))
}

/// `½(ψ − iσ3^c ψ J − iσ1^t ψ J + iσ3^c iσ1^t ψ E)`.
pub fn apply_cnot(control: usize, target: usize, m: &MstaState) -> Result<MstaState> {
    check_pair(control, target, m)?;
    let n = m.n();
    let psi = m.mv();
    let j = complex_structure(n);
    let e = correlator(n);
    let zc = isigma(n, control, 3);
    let xt = isigma(n, target, 1);
    let out = psi - &(&zc * psi * &j) - (&xt * psi * &j) + (&zc * &xt * psi * &e);
    Ok(state(out.scale(0.5)))
}

/// `½(ψ − iσ3^1 ψ J − iσ3^2 ψ J + iσ3^1 iσ3^2 ψ E)`; symmetric in its qubits.
pub fn apply_cphase(q1: usize, q2: usize, m: &MstaState) -> Result<MstaState> {
    check_pair(q1, q2, m)?;
    let n = m.n();
    let psi = m.mv();
    let j = complex_structure(n);
    let e = correlator(n);
    let z1 = isigma(n, q1, 3);
    let z2 = isigma(n, q2, 3);
    let out = psi - &(&z1 * psi * &j) - (&z2 * psi * &j) + (&z1 * &z2 * psi * &e);
    Ok(state(out.scale(0.5)))
}

/// `½(ψ − Σ_k iσ_k^1 iσ_k^2 ψ E)`.
pub fn apply_swap(q1: usize, q2: usize, m: &MstaState) -> Result<MstaState> {
    check_pair(q1, q2, m)?;
    let n = m.n();
    let psi = m.mv();
    let e = correlator(n);
    let mut out = psi.clone();
    for k in 1..=3 {
        out = out - (isigma(n, q1, k) * isigma(n, q2, k) * psi * &e);
    }
    Ok(state(out.scale(0.5)))
}

/// Applies a single operation.
pub fn apply_op(op: &Op, m: &MstaState) -> Result<MstaState> {
    let q = &op.qubits;
    if q.len() != op.gate.arity() {
        return Err(Error::Arity {
            gate: op.gate.mnemonic(),
            expected: op.gate.arity(),
            got: q.len(),
        });
    }
    match op.gate {
        GateKind::X => apply_pauli(1, q[0], m),
        GateKind::Y => apply_pauli(2, q[0], m),
        GateKind::Z => apply_pauli(3, q[0], m),
        GateKind::H => apply_hadamard(q[0], m),
        GateKind::Rotation(t) => apply_rotation(t, q[0], m),
        GateKind::S => apply_phase_s(q[0], m),
        GateKind::T => apply_t(q[0], m),
        GateKind::ZPow(a) => apply_z_power(a, q[0], m),
        GateKind::HPow(b) => apply_h_power(b, q[0], m),
        GateKind::Cnot => apply_cnot(q[0], q[1], m),
        GateKind::Cphase => apply_cphase(q[0], q[1], m),
        GateKind::Swap => apply_swap(q[0], q[1], m),
    }
}

/// Applies the circuit's operations left to right.
pub fn run_circuit(c: &Circuit, input: &MstaState) -> Result<MstaState> {
    if c.n() != input.n() {
        return Err(Error::QubitCountMismatch {
            circuit: c.n(),
            input: input.n(),
        });
    }
    c.ops()
        .iter()
        .try_fold(input.clone(), |m, op| apply_op(op, &m))
}
