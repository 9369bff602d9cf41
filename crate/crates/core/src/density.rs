//! Density operators as multivectors.
//!
//! A one-qubit density operator is `½(1 + P)` with `P` the polarization
//! vector, `‖P‖ ≤ 1`. For `n` qubits the pure-state operator is
//! `(ψE) E₊ (ψE)~` with `E₊ = ∏ ½(1 + σ3^a)`.

use num_complex::Complex64;

use crate::clifford::{cl3, Multivector, Signature};
use crate::error::{Error, Result};
use crate::msta::{correlator, MstaMultivector, MstaState, MAX_QUBITS, STATE_TOL};
use crate::oracle::{pauli, ComplexMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DensityKind {
    Pure,
    Mixed,
}

/// Density operator in the product algebra of `n` Pauli factors.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityGA {
    pub n: usize,
    pub mv: MstaMultivector,
    pub kind: DensityKind,
}

impl DensityGA {
    /// The Cl(3) element for a one-qubit operator.
    pub fn cl3(&self) -> Option<Multivector> {
        self.mv.to_cl3()
    }

    /// Polarization `P` of a one-qubit operator `½(1 + P)`.
    pub fn polarization(&self) -> Option<[f64; 3]> {
        let m = self.cl3()?;
        Some(cl3::vector_components(&m).map(|x| 2.0 * x))
    }

    /// Complex matrix image; see [`to_matrix`].
    pub fn to_matrix(&self) -> ComplexMatrix {
        to_matrix(&self.mv)
    }
}

fn check_normalized(m: &MstaState) -> Result<()> {
    let norm = m.norm();
    if (norm - 1.0).abs() > STATE_TOL {
        return Err(Error::Unnormalized(norm));
    }
    Ok(())
}

/// `ψ ½(1 + σ3) ψ† = ½(1 + s)` for a normalized one-qubit state.
pub fn pure_density(m: &MstaState) -> Result<DensityGA> {
    if m.n() != 1 {
        return Err(Error::UnsupportedQubitCount(m.n()));
    }
    check_normalized(m)?;
    let psi = m.mv().to_cl3().expect("one factor");
    let s = &(&psi * &cl3::sigma(3)) * &psi.reversion();
    // ψσ3ψ† is a pure vector; drop roundoff in other grades
    let s = s.grade_project(1)?;
    let rho = &cl3::one() + &s;
    Ok(DensityGA {
        n: 1,
        mv: MstaMultivector::embed(1, 0, &rho.scale(0.5))?,
        kind: DensityKind::Pure,
    })
}

fn check_probabilities(ps: impl Iterator<Item = f64>) -> Result<()> {
    let mut total = 0.0;
    for p in ps {
        if p.is_nan() || p < 0.0 {
            return Err(Error::InvalidProbabilities(format!("negative weight {p}")));
        }
        total += p;
    }
    if (total - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidProbabilities(format!(
            "weights sum to {total}"
        )));
    }
    Ok(())
}

/// `½(1 + P)` with `P = Σ p_j s_j` for unit spin vectors `s_j`.
pub fn mixed_density(entries: &[(f64, Multivector)]) -> Result<DensityGA> {
    if entries.is_empty() {
        return Err(Error::InvalidProbabilities("empty ensemble".into()));
    }
    check_probabilities(entries.iter().map(|(p, _)| *p))?;
    let mut pol = Multivector::zero(Signature::CL3);
    for (p, s) in entries {
        if s.signature() != Signature::CL3 || !s.is_grade(1, 0.0) {
            return Err(Error::NotPureGrade { expected: 1 });
        }
        let norm = s.coeff_norm();
        if (norm - 1.0).abs() > STATE_TOL {
            return Err(Error::NonUnitAxis(norm));
        }
        pol += &s.scale(*p);
    }
    let rho = (&cl3::one() + &pol).scale(0.5);
    let kind = if entries.len() == 1 {
        DensityKind::Pure
    } else {
        DensityKind::Mixed
    };
    Ok(DensityGA {
        n: 1,
        mv: MstaMultivector::embed(1, 0, &rho)?,
        kind,
    })
}

/// `∏_a ½(1 + σ3^a)`.
pub fn spin_up_projector(n: usize) -> MstaMultivector {
    let mut out = MstaMultivector::one(n);
    for a in 0..n {
        let f = &MstaMultivector::one(n) + &MstaMultivector::sigma(n, a, 3);
        out = &out * &f.scale(0.5);
    }
    out
}

/// `(ψE) E₊ (ψE)~` for a normalized state of up to two qubits.
pub fn multiqubit_density(m: &MstaState) -> Result<DensityGA> {
    let n = m.n();
    if n == 0 || n > MAX_QUBITS {
        return Err(Error::UnsupportedQubitCount(n));
    }
    check_normalized(m)?;
    let psi_e = m.mv().gp(&correlator(n))?;
    let rho = &(&psi_e * &spin_up_projector(n)) * &psi_e.reversion();
    Ok(DensityGA {
        n,
        mv: rho,
        kind: DensityKind::Pure,
    })
}

/// Probability-weighted average of [`multiqubit_density`] over an ensemble.
pub fn ensemble_density(entries: &[(f64, MstaState)]) -> Result<DensityGA> {
    let first = entries
        .first()
        .ok_or_else(|| Error::InvalidProbabilities("empty ensemble".into()))?;
    check_probabilities(entries.iter().map(|(p, _)| *p))?;
    let n = first.1.n();
    let mut mv = MstaMultivector::zero(n);
    for (p, s) in entries {
        if s.n() != n {
            return Err(Error::FactorMismatch(n, s.n()));
        }
        mv += &multiqubit_density(s)?.mv.scale(*p);
    }
    let kind = if entries.len() == 1 {
        DensityKind::Pure
    } else {
        DensityKind::Mixed
    };
    Ok(DensityGA { n, mv, kind })
}

/// `2 ⟨ρ σ_k⟩₀` for a one-qubit operator.
pub fn expectation(d: &DensityGA, k: usize) -> Result<f64> {
    if d.n != 1 {
        return Err(Error::UnsupportedQubitCount(d.n));
    }
    if !(1..=3).contains(&k) {
        return Err(Error::PauliAxis(k));
    }
    let sk = MstaMultivector::sigma(1, 0, k);
    Ok(2.0 * d.mv.gp(&sk)?.scalar_part())
}

fn blade_matrix(mask: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::identity(2);
    for k in 1..=3 {
        if mask & (1 << (k - 1)) != 0 {
            m = &m * &pauli(k).expect("valid axis");
        }
    }
    m
}

/// Complex matrix image: each factor's blade `σ_{k1}…σ_{kr}` maps to
/// `Σ_{k1}…Σ_{kr}`, factors combine by Kronecker product with particle 0
/// leftmost. This is an algebra homomorphism, and it sends a pure-state
/// density multivector to `|ψ⟩⟨ψ|`.
pub fn to_matrix(m: &MstaMultivector) -> ComplexMatrix {
    let n = m.n();
    let dim = 1usize << n;
    let mut out = ComplexMatrix::zeros(dim, dim);
    for (idx, &c) in m.coeffs().iter().enumerate() {
        if c == 0.0 {
            continue;
        }
        let mut term = ComplexMatrix::identity(1);
        for a in 0..n {
            term = term.kron(&blade_matrix((idx >> (3 * a)) & 0b111));
        }
        out = out
            .add(&term.scale(Complex64::new(c, 0.0)))
            .expect("same shape");
    }
    out
}
