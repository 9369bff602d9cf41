use thiserror::Error;

/// Errors raised by the algebra, state, gate and oracle layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("signature Cl({p},{q}) exceeds the 16-dimension cap")]
    SignatureTooLarge { p: u8, q: u8 },

    #[error("signature mismatch: Cl({0},{1}) vs Cl({2},{3})")]
    SignatureMismatch(u8, u8, u8, u8),

    #[error("blade mask {mask:#b} does not fit in {dim} basis vectors")]
    BladeOutOfRange { mask: u32, dim: usize },

    #[error("coefficient vector has length {got}, expected {expected}")]
    CoefficientLength { got: usize, expected: usize },

    #[error("grade {grade} out of range for a {dim}-dimensional algebra")]
    GradeOutOfRange { grade: usize, dim: usize },

    #[error("expected a pure grade-{expected} multivector")]
    NotPureGrade { expected: usize },

    #[error("bivector does not square to a negative scalar")]
    NotSimpleBivector,

    #[error("unsupported qubit count {0}")]
    UnsupportedQubitCount(usize),

    #[error("factor count mismatch: {0} vs {1}")]
    FactorMismatch(usize, usize),

    #[error("multivector is not a valid qubit state: {0}")]
    InvalidState(String),

    #[error("amplitude vector length {0} is not a power of two")]
    AmplitudeLength(usize),

    #[error("bitstring {0:?} must contain only 0 and 1")]
    InvalidBitstring(String),

    #[error("Bell state index {0} out of range 1..=4")]
    BellIndex(usize),

    #[error("Pauli axis {0} out of range 1..=3")]
    PauliAxis(usize),

    #[error("qubit index {index} out of range for {n} qubits")]
    QubitIndex { index: usize, n: usize },

    #[error("distinct qubit indices required, got {0} twice")]
    RepeatedQubit(usize),

    #[error("gate {gate} expects {expected} qubit indices, got {got}")]
    Arity {
        gate: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("two-qubit gate applied to a {0}-qubit state")]
    TwoQubitGateOnSmallState(usize),

    #[error("circuit declares {circuit} qubits but input has {input}")]
    QubitCountMismatch { circuit: usize, input: usize },

    #[error("axis is not a unit vector (norm {0})")]
    NonUnitAxis(f64),

    #[error("matrix is not special unitary: {0}")]
    NotSpecialUnitary(String),

    #[error("rotor is degenerate (angle 0 or 2π), axis undefined")]
    DegenerateRotor,

    #[error("multivector is not a normalized rotor")]
    NotRotor,

    #[error("axes are not orthonormal (dot {dot}, norms {norm1}, {norm2})")]
    AxesNotOrthonormal { dot: f64, norm1: f64, norm2: f64 },

    #[error("Euler reconstruction residual {0} exceeds tolerance")]
    EulerResidual(f64),

    #[error("invalid probability distribution: {0}")]
    InvalidProbabilities(String),

    #[error("state is not normalized (norm {0})")]
    Unnormalized(f64),

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
