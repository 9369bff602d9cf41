//! Multi-qubit states in the product of commuting Pauli algebras.
//!
//! An n-particle multivector lives in `Cl(3) ⊗ ... ⊗ Cl(3)` (n factors). Each
//! factor contributes a 3-bit blade mask, and factor `a` occupies bits
//! `3a..3a+3` of the coefficient index, so there are `8^n` coefficients.
//! Vectors from different factors commute, so the product of two basis
//! elements is the factorwise blade product with no cross-factor sign.
//!
//! Particle `a` carries qubit `a`. Qubit 0 is the most significant bit of an
//! amplitude index, matching the usual `|q0 q1⟩` reading.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::clifford::{product_sign, Multivector, Signature};
use crate::error::{Error, Result};

/// Largest particle count accepted by [`MstaMultivector`].
pub const MAX_PARTICLES: usize = 6;

/// Largest qubit count supported by the state API.
pub const MAX_QUBITS: usize = 2;

/// Tolerance used when deciding whether a multivector is a qubit state.
pub const STATE_TOL: f64 = 1e-9;

fn cl3_sign_table() -> &'static [[f64; 8]; 8] {
    static TABLE: OnceLock<[[f64; 8]; 8]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [[0.0; 8]; 8];
        for (a, row) in t.iter_mut().enumerate() {
            for (b, v) in row.iter_mut().enumerate() {
                *v = product_sign(a as u32, b as u32, Signature::CL3);
            }
        }
        t
    })
}

fn factor_sign(n: usize, a: usize, b: usize) -> f64 {
    let table = cl3_sign_table();
    let mut s = 1.0;
    for f in 0..n {
        let ma = (a >> (3 * f)) & 7;
        let mb = (b >> (3 * f)) & 7;
        s *= table[ma][mb];
    }
    s
}

/// Element of the n-fold product of Pauli algebras.
#[derive(Clone, PartialEq)]
pub struct MstaMultivector {
    n: usize,
    coeffs: Vec<f64>,
}

impl MstaMultivector {
    pub fn zero(n: usize) -> Self {
        assert!(
            (1..=MAX_PARTICLES).contains(&n),
            "particle count {n} out of range"
        );
        MstaMultivector {
            n,
            coeffs: vec![0.0; 1 << (3 * n)],
        }
    }

    pub fn scalar(n: usize, value: f64) -> Self {
        let mut m = Self::zero(n);
        m.coeffs[0] = value;
        m
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, 1.0)
    }

    pub fn from_coeffs(n: usize, coeffs: Vec<f64>) -> Result<Self> {
        if !(1..=MAX_PARTICLES).contains(&n) {
            return Err(Error::UnsupportedQubitCount(n));
        }
        let expected = 1 << (3 * n);
        if coeffs.len() != expected {
            return Err(Error::CoefficientLength {
                got: coeffs.len(),
                expected,
            });
        }
        Ok(MstaMultivector { n, coeffs })
    }

    /// Places a Cl(3) multivector in factor `particle`, identity elsewhere.
    pub fn embed(n: usize, particle: usize, m: &Multivector) -> Result<Self> {
        if m.signature() != Signature::CL3 {
            let s = m.signature();
            return Err(Error::SignatureMismatch(s.p(), s.q(), 3, 0));
        }
        if particle >= n {
            return Err(Error::QubitIndex { index: particle, n });
        }
        let mut out = Self::zero(n);
        for (mask, c) in m.coeffs().iter().enumerate() {
            out.coeffs[mask << (3 * particle)] = *c;
        }
        Ok(out)
    }

    /// σ_k of particle `a` (k in 1..=3).
    pub fn sigma(n: usize, a: usize, k: usize) -> Self {
        assert!((1..=3).contains(&k), "axis {k} out of range");
        assert!(a < n, "particle {a} out of range");
        let mut m = Self::zero(n);
        m.coeffs[(1 << (k - 1)) << (3 * a)] = 1.0;
        m
    }

    /// Bivector iσ_k of particle `a`.
    pub fn isigma(n: usize, a: usize, k: usize) -> Self {
        Self::embed(n, a, &crate::clifford::cl3::isigma(k)).expect("valid particle")
    }

    /// The Cl(3) element held by a single-particle multivector.
    pub fn to_cl3(&self) -> Option<Multivector> {
        if self.n != 1 {
            return None;
        }
        Multivector::from_coeffs(Signature::CL3, self.coeffs.clone()).ok()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeff(&self, index: usize) -> f64 {
        self.coeffs.get(index).copied().unwrap_or(0.0)
    }

    pub fn scalar_part(&self) -> f64 {
        self.coeffs[0]
    }

    pub fn gp(&self, other: &MstaMultivector) -> Result<MstaMultivector> {
        if self.n != other.n {
            return Err(Error::FactorMismatch(self.n, other.n));
        }
        let mut out = Self::zero(self.n);
        for (a, &ca) in self.coeffs.iter().enumerate() {
            if ca == 0.0 {
                continue;
            }
            for (b, &cb) in other.coeffs.iter().enumerate() {
                if cb == 0.0 {
                    continue;
                }
                out.coeffs[a ^ b] += factor_sign(self.n, a, b) * ca * cb;
            }
        }
        Ok(out)
    }

    /// Factorwise reversion.
    pub fn reversion(&self) -> MstaMultivector {
        let mut out = self.clone();
        for (idx, c) in out.coeffs.iter_mut().enumerate() {
            let mut s = 1.0;
            for f in 0..self.n {
                let k = ((idx >> (3 * f)) & 7).count_ones();
                if (k * k.saturating_sub(1) / 2) % 2 == 1 {
                    s = -s;
                }
            }
            *c *= s;
        }
        out
    }

    /// True if every nonzero coefficient has even grade in each factor.
    pub fn is_even_per_factor(&self, tol: f64) -> bool {
        self.coeffs.iter().enumerate().all(|(idx, c)| {
            c.abs() <= tol || (0..self.n).all(|f| ((idx >> (3 * f)) & 7).count_ones() % 2 == 0)
        })
    }

    pub fn scale(&self, s: f64) -> MstaMultivector {
        MstaMultivector {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Coefficientwise inner product.
    pub fn dot(&self, other: &MstaMultivector) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn coeff_norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn max_abs_diff(&self, other: &MstaMultivector) -> f64 {
        if self.n != other.n {
            return f64::INFINITY;
        }
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &MstaMultivector, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    /// Human-readable blade label for a coefficient index, e.g. `e23^1 e12^2`
    /// for the product of the particle-1 and particle-2 bivectors.
    pub fn blade_label(&self, index: usize) -> String {
        let mut parts = Vec::new();
        for f in 0..self.n {
            let m = (index >> (3 * f)) & 7;
            if m == 0 {
                continue;
            }
            let mut s = String::from("e");
            for k in 0..3 {
                if m & (1 << k) != 0 {
                    s.push_str(&(k + 1).to_string());
                }
            }
            parts.push(format!("{s}^{}", f + 1));
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }

    /// Nonzero coefficients with their blade labels.
    pub fn terms(&self, tol: f64) -> Vec<(String, f64)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.abs() > tol)
            .map(|(i, c)| (self.blade_label(i), *c))
            .collect()
    }
}

impl fmt::Debug for MstaMultivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MstaMultivector[n={}]{{", self.n)?;
        let terms = self.terms(0.0);
        for (i, (label, c)) in terms.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{label}: {c}")?;
        }
        write!(f, "}}")
    }
}

impl Add<&MstaMultivector> for &MstaMultivector {
    type Output = MstaMultivector;
    fn add(self, rhs: &MstaMultivector) -> MstaMultivector {
        assert_eq!(self.n, rhs.n, "factor count mismatch");
        MstaMultivector {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub<&MstaMultivector> for &MstaMultivector {
    type Output = MstaMultivector;
    fn sub(self, rhs: &MstaMultivector) -> MstaMultivector {
        assert_eq!(self.n, rhs.n, "factor count mismatch");
        MstaMultivector {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul<&MstaMultivector> for &MstaMultivector {
    type Output = MstaMultivector;
    fn mul(self, rhs: &MstaMultivector) -> MstaMultivector {
        self.gp(rhs).expect("factor count mismatch")
    }
}

impl Neg for &MstaMultivector {
    type Output = MstaMultivector;
    fn neg(self) -> MstaMultivector {
        self.scale(-1.0)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<MstaMultivector> for MstaMultivector {
            type Output = MstaMultivector;
            fn $m(self, rhs: MstaMultivector) -> MstaMultivector {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&MstaMultivector> for MstaMultivector {
            type Output = MstaMultivector;
            fn $m(self, rhs: &MstaMultivector) -> MstaMultivector {
                (&self).$m(rhs)
            }
        }
        impl $tr<MstaMultivector> for &MstaMultivector {
            type Output = MstaMultivector;
            fn $m(self, rhs: MstaMultivector) -> MstaMultivector {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MstaMultivector {
    type Output = MstaMultivector;
    fn neg(self) -> MstaMultivector {
        self.scale(-1.0)
    }
}

impl AddAssign<&MstaMultivector> for MstaMultivector {
    fn add_assign(&mut self, rhs: &MstaMultivector) {
        assert_eq!(self.n, rhs.n, "factor count mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

/// Correlator `E_n = ∏_{b=2..n} ½(1 − iσ3^1 iσ3^b)`.
pub fn correlator(n: usize) -> MstaMultivector {
    let mut e = MstaMultivector::one(n);
    for b in 1..n {
        let pair = MstaMultivector::isigma(n, 0, 3) * MstaMultivector::isigma(n, b, 3);
        let factor = (MstaMultivector::one(n) - pair).scale(0.5);
        e = &e * &factor;
    }
    e
}

/// Complex structure `J_n = E_n iσ3^1`.
pub fn complex_structure(n: usize) -> MstaMultivector {
    correlator(n) * MstaMultivector::isigma(n, 0, 3)
}

/// Complex amplitudes over the computational basis.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinorVec {
    amplitudes: Vec<Complex64>,
}

impl SpinorVec {
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        let len = amplitudes.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::AmplitudeLength(len));
        }
        Ok(SpinorVec { amplitudes })
    }

    /// Computational basis vector `|index⟩` on `n` qubits.
    pub fn basis(n: usize, index: usize) -> Result<Self> {
        let dim = 1usize << n;
        if n == 0 || index >= dim {
            return Err(Error::QubitIndex { index, n });
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); dim];
        amps[index] = Complex64::new(1.0, 0.0);
        Ok(SpinorVec { amplitudes: amps })
    }

    pub fn n(&self) -> usize {
        self.amplitudes.len().trailing_zeros() as usize
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|a| a.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Largest absolute difference of real or imaginary parts.
    pub fn max_abs_diff(&self, other: &SpinorVec) -> f64 {
        if self.amplitudes.len() != other.amplitudes.len() {
            return f64::INFINITY;
        }
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a.re - b.re).abs().max((a.im - b.im).abs()))
            .fold(0.0, f64::max)
    }
}

/// An n-qubit state: even in every factor and fixed by the correlator.
#[derive(Debug, Clone, PartialEq)]
pub struct MstaState {
    mv: MstaMultivector,
}

impl MstaState {
    /// Validates that `mv` is a qubit state.
    pub fn new(mv: MstaMultivector) -> Result<Self> {
        check_qubit_count(mv.n())?;
        let tol = STATE_TOL * mv.coeff_norm().max(1.0);
        if !mv.is_even_per_factor(tol) {
            return Err(Error::InvalidState("odd-grade component".into()));
        }
        let projected = &mv * correlator(mv.n());
        if !projected.approx_eq(&mv, tol) {
            return Err(Error::InvalidState("not fixed by the correlator".into()));
        }
        let reference = &mv * MstaMultivector::isigma(mv.n(), 0, 3);
        for a in 1..mv.n() {
            let other = &mv * MstaMultivector::isigma(mv.n(), a, 3);
            if !other.approx_eq(&reference, tol) {
                return Err(Error::InvalidState("phase constraint violated".into()));
            }
        }
        Ok(MstaState { mv })
    }

    /// Wraps a multivector already known to be a state.
    pub(crate) fn from_mv_unchecked(mv: MstaMultivector) -> Self {
        MstaState { mv }
    }

    /// Builds a one-qubit state from an even Cl(3) element.
    pub fn from_cl3(m: &Multivector) -> Result<Self> {
        Self::new(MstaMultivector::embed(1, 0, m)?)
    }

    pub fn n(&self) -> usize {
        self.mv.n()
    }

    pub fn mv(&self) -> &MstaMultivector {
        &self.mv
    }

    pub fn into_mv(self) -> MstaMultivector {
        self.mv
    }

    /// Euclidean norm of the spinor image.
    pub fn norm(&self) -> f64 {
        mv_to_spinor(self).map(|s| s.norm()).unwrap_or(f64::NAN)
    }

    pub fn is_normalized(&self, tol: f64) -> bool {
        (self.norm() - 1.0).abs() <= tol
    }

    pub fn approx_eq(&self, other: &MstaState, tol: f64) -> bool {
        self.mv.approx_eq(&other.mv, tol)
    }
}

fn check_qubit_count(n: usize) -> Result<()> {
    if (1..=MAX_QUBITS).contains(&n) {
        Ok(())
    } else {
        Err(Error::UnsupportedQubitCount(n))
    }
}

/// Basis multivector for computational label `bits` (qubit 0 is the MSB):
/// the product of `−iσ2^a` over set bits, right-multiplied by `E_n`.
fn basis_multivector(n: usize, bits: usize) -> MstaMultivector {
    let mut m = MstaMultivector::one(n);
    for a in 0..n {
        if (bits >> (n - 1 - a)) & 1 == 1 {
            m = &m * &(-MstaMultivector::isigma(n, a, 2));
        }
    }
    m * correlator(n)
}

/// Pairs `(ψ_b, ψ_b J)` for each label `b`, cached per qubit count.
fn spinor_basis(n: usize) -> &'static [(MstaMultivector, MstaMultivector)] {
    static CACHE: [OnceLock<Vec<(MstaMultivector, MstaMultivector)>>; MAX_QUBITS] =
        [OnceLock::new(), OnceLock::new()];
    CACHE[n - 1].get_or_init(|| {
        let j = complex_structure(n);
        (0..1usize << n)
            .map(|b| {
                let psi = basis_multivector(n, b);
                let psi_j = &psi * &j;
                (psi, psi_j)
            })
            .collect()
    })
}

/// The real basis `{ψ_b, ψ_b J}` of the n-qubit state space, in label order.
pub fn state_basis(n: usize) -> Result<Vec<MstaMultivector>> {
    check_qubit_count(n)?;
    Ok(spinor_basis(n)
        .iter()
        .flat_map(|(a, b)| [a.clone(), b.clone()])
        .collect())
}

/// Multivector for a computational basis bitstring such as `"01"`.
pub fn encode_basis(bits: &str) -> Result<MstaState> {
    if bits.is_empty() || !bits.chars().all(|c| c == '0' || c == '1') {
        return Err(Error::InvalidBitstring(bits.to_string()));
    }
    let n = bits.len();
    check_qubit_count(n)?;
    let label = usize::from_str_radix(bits, 2).expect("validated bitstring");
    Ok(MstaState::from_mv_unchecked(
        spinor_basis(n)[label].0.clone(),
    ))
}

/// Bell state `k` (1..=4) in multivector form.
pub fn bell_state(k: usize) -> Result<MstaState> {
    let n = 2;
    let e = correlator(n);
    let one = MstaMultivector::one(n);
    let s1 = MstaMultivector::isigma(n, 0, 2);
    let s2 = MstaMultivector::isigma(n, 1, 2);
    let pair = &s1 * &s2;
    let prefix = match k {
        1 => &one + &pair,
        2 => -(&s1 + &s2),
        3 => &one - &pair,
        4 => &s1 - &s2,
        _ => return Err(Error::BellIndex(k)),
    };
    Ok(MstaState::from_mv_unchecked(
        (prefix * e).scale(std::f64::consts::FRAC_1_SQRT_2),
    ))
}

/// Amplitude `x + iy` at label `b` maps to `x ψ_b + y ψ_b J`.
pub fn spinor_to_mv(s: &SpinorVec) -> Result<MstaState> {
    let n = s.n();
    check_qubit_count(n)?;
    let mut out = MstaMultivector::zero(n);
    for ((psi, psi_j), amp) in spinor_basis(n).iter().zip(s.amplitudes()) {
        out += &psi.scale(amp.re);
        out += &psi_j.scale(amp.im);
    }
    Ok(MstaState::from_mv_unchecked(out))
}

/// Inverse of [`spinor_to_mv`]; rejects multivectors outside the state space.
pub fn mv_to_spinor(m: &MstaState) -> Result<SpinorVec> {
    let n = m.n();
    check_qubit_count(n)?;
    let mv = m.mv();
    let mut amps = Vec::with_capacity(1 << n);
    let mut rebuilt = MstaMultivector::zero(n);
    for (psi, psi_j) in spinor_basis(n) {
        let x = mv.dot(psi) / psi.dot(psi);
        let y = mv.dot(psi_j) / psi_j.dot(psi_j);
        rebuilt += &psi.scale(x);
        rebuilt += &psi_j.scale(y);
        amps.push(Complex64::new(x, y));
    }
    let residual = rebuilt.max_abs_diff(mv);
    if residual > STATE_TOL * mv.coeff_norm().max(1.0) {
        return Err(Error::InvalidState(format!(
            "residual {residual:e} outside the state space"
        )));
    }
    SpinorVec::new(amps)
}

/// Right multiplication by `J_n`, the multivector form of multiplying by i.
pub fn apply_imaginary(m: &MstaState) -> MstaState {
    MstaState::from_mv_unchecked(m.mv() * complex_structure(m.n()))
}
