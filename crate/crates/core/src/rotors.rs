//! Rotors of Euclidean 3-space, their SU(2) images, and the H/T
//! universality construction.
//!
//! A rotor is stored as `r0 + r1 iσ1 + r2 iσ2 + r3 iσ3` with unit norm. It
//! corresponds to the SU(2) matrix `r0 I + i (r1 Σ1 + r2 Σ2 + r3 Σ3)` and
//! acts on one-qubit states by left multiplication. Both `R` and `−R` give
//! the same rotation `a ↦ R a R†`.

use std::collections::HashSet;
use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use num_complex::Complex64;

use crate::clifford::{cl3, Multivector, Signature};
use crate::error::{Error, Result};
use crate::gates::{run_circuit, Circuit, GateKind};
use crate::msta::MstaState;
use crate::oracle::{pauli, ComplexMatrix};

/// Tolerance for accepting an input as unit-normalized.
pub const UNIT_TOL: f64 = 1e-9;

/// Grid spacing used to deduplicate rotors during word search.
pub const DEDUP_GRID: f64 = 1e-6;

/// Unit even element of Cl(3).
#[derive(Debug, Clone, PartialEq)]
pub struct Rotor {
    mv: Multivector,
}

impl Rotor {
    pub fn identity() -> Self {
        Rotor { mv: cl3::one() }
    }

    /// Validates an even, unit-norm Cl(3) element.
    pub fn new(mv: Multivector) -> Result<Self> {
        if mv.signature() != Signature::CL3 {
            let s = mv.signature();
            return Err(Error::SignatureMismatch(s.p(), s.q(), 3, 0));
        }
        if !mv.is_even(UNIT_TOL) {
            return Err(Error::NotRotor);
        }
        let rr = &mv * &mv.reversion();
        if !rr.approx_eq(&cl3::one(), UNIT_TOL) {
            return Err(Error::NotRotor);
        }
        Ok(Rotor { mv })
    }

    /// Rotor from `[r0, r1, r2, r3]` on `{1, iσ1, iσ2, iσ3}`.
    pub fn from_components(c: [f64; 4]) -> Result<Self> {
        Self::new(cl3::even(c))
    }

    fn from_components_unchecked(c: [f64; 4]) -> Self {
        Rotor { mv: cl3::even(c) }
    }

    pub fn components(&self) -> [f64; 4] {
        cl3::even_components(&self.mv)
    }

    pub fn mv(&self) -> &Multivector {
        &self.mv
    }

    /// Geometric product `self · other`.
    pub fn compose(&self, other: &Rotor) -> Rotor {
        Rotor {
            mv: &self.mv * &other.mv,
        }
    }

    pub fn reverse(&self) -> Rotor {
        Rotor {
            mv: self.mv.reversion(),
        }
    }

    pub fn negate(&self) -> Rotor {
        Rotor { mv: -&self.mv }
    }

    /// Representative of `±R` with nonnegative scalar part; when the scalar
    /// part vanishes, the first nonzero bivector coefficient is positive.
    pub fn canonical(&self) -> Rotor {
        let c = self.components();
        let lead = c.iter().find(|x| x.abs() > 1e-12).copied().unwrap_or(1.0);
        if lead < 0.0 {
            self.negate()
        } else {
            self.clone()
        }
    }

    /// `min(|r − r'|, |r + r'|)` over the 4 components.
    pub fn distance(&self, other: &Rotor) -> f64 {
        let a = self.components();
        let b = other.components();
        let minus: f64 = a.iter().zip(&b).map(|(x, y)| (x - y).powi(2)).sum();
        let plus: f64 = a.iter().zip(&b).map(|(x, y)| (x + y).powi(2)).sum();
        minus.min(plus).sqrt()
    }

    /// `|R R† − 1|` as a max coefficient deviation.
    pub fn normalization_error(&self) -> f64 {
        (&self.mv * &self.mv.reversion()).max_abs_diff(&cl3::one())
    }
}

impl fmt::Display for Rotor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.components();
        write!(
            f,
            "{:.12} {:+.12} iσ1 {:+.12} iσ2 {:+.12} iσ3",
            c[0], c[1], c[2], c[3]
        )
    }
}

/// `exp(i n θ) = cos θ + sin θ i n`, described by its axis and angle.
#[derive(Debug, Clone, PartialEq)]
pub struct AxisAngle {
    /// Unit grade-1 element.
    pub axis: Multivector,
    /// Radians in `[0, 2π)`.
    pub angle: f64,
    /// `angle / π`.
    pub lambda: f64,
}

impl AxisAngle {
    pub fn axis_components(&self) -> [f64; 3] {
        cl3::vector_components(&self.axis)
    }
}

/// Letters of the H/T gate alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    H,
    T,
}

impl Letter {
    /// Canonical rotor of the gate.
    pub fn rotor(&self) -> Rotor {
        match self {
            Letter::H => Rotor::from_components_unchecked([0.0, FRAC_1_SQRT_2, 0.0, FRAC_1_SQRT_2]),
            Letter::T => {
                let a = std::f64::consts::PI / 8.0;
                Rotor::from_components_unchecked([a.cos(), 0.0, 0.0, -a.sin()])
            }
        }
    }

    pub fn gate(&self) -> GateKind {
        match self {
            Letter::H => GateKind::H,
            Letter::T => GateKind::T,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::H => "H",
            Letter::T => "T",
        })
    }
}

/// A word over {H, T} with its rotor value and error against a target.
#[derive(Debug, Clone, PartialEq)]
pub struct GateWord {
    pub letters: Vec<Letter>,
    /// Product of the letters' rotors, left to right.
    pub value: Rotor,
    pub error: f64,
}

impl fmt::Display for GateWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Left-to-right rotor product of a word.
pub fn word_value(letters: &[Letter]) -> Rotor {
    letters
        .iter()
        .fold(Rotor::identity(), |acc, l| acc.compose(&l.rotor()))
}

fn check_unit_vector(n: &Multivector) -> Result<()> {
    if n.signature() != Signature::CL3 || !n.is_grade(1, 0.0) {
        return Err(Error::NotPureGrade { expected: 1 });
    }
    let norm = n.coeff_norm();
    if (norm - 1.0).abs() > UNIT_TOL {
        return Err(Error::NonUnitAxis(norm));
    }
    Ok(())
}

/// `exp(−i n θ/2)`: the rotor rotating vectors by `θ` about `n`.
pub fn rotor_from_axis_angle(n: &Multivector, theta: f64) -> Result<Rotor> {
    check_unit_vector(n)?;
    let b = (&cl3::i() * n).scale(-theta / 2.0);
    Ok(Rotor {
        mv: b.exp_bivector()?,
    })
}

/// `exp(i n θ) = cos θ + sin θ i n`.
pub fn rotor_exp(n: &Multivector, theta: f64) -> Result<Rotor> {
    check_unit_vector(n)?;
    let mut mv = (&cl3::i() * n).scale(theta.sin());
    mv.set_coeff(0, theta.cos());
    Ok(Rotor { mv })
}

/// `a ↦ R a R†`.
pub fn rotate_vector(r: &Rotor, a: &Multivector) -> Result<Multivector> {
    if a.signature() != Signature::CL3 || !a.is_grade(1, 0.0) {
        return Err(Error::NotPureGrade { expected: 1 });
    }
    let out = &(&r.mv * a) * &r.mv.reversion();
    // drop roundoff in the other grades
    out.grade_project(1)
}

/// `(B1, B2, B3) = (σ2σ3, σ3σ1, σ1σ2)`.
pub fn bivector_basis() -> [Multivector; 3] {
    [
        &cl3::sigma(2) * &cl3::sigma(3),
        &cl3::sigma(3) * &cl3::sigma(1),
        &cl3::sigma(1) * &cl3::sigma(2),
    ]
}

/// `[x, y] = xy − yx`, so that `[B_l, B_m] = −2 ε_lmk B_k`.
pub fn commutator(x: &Multivector, y: &Multivector) -> Result<Multivector> {
    Ok(&x.gp(y)? - &y.gp(x)?)
}

fn check_special_unitary(u: &ComplexMatrix) -> Result<()> {
    if u.rows() != 2 || u.cols() != 2 {
        return Err(Error::NotSpecialUnitary(format!(
            "expected 2x2, got {}x{}",
            u.rows(),
            u.cols()
        )));
    }
    if !u.is_unitary(UNIT_TOL) {
        return Err(Error::NotSpecialUnitary("not unitary".into()));
    }
    let det = u.det2()?;
    if (det - Complex64::new(1.0, 0.0)).norm() > UNIT_TOL {
        return Err(Error::NotSpecialUnitary(format!("determinant {det}")));
    }
    Ok(())
}

/// Rotor of an SU(2) matrix: `r0 = Re tr(U)/2`, `r_k = Im tr(U Σ_k)/2`.
/// The sign is kept, so [`su2_from_rotor`] inverts this exactly.
pub fn rotor_from_su2(u: &ComplexMatrix) -> Result<Rotor> {
    check_special_unitary(u)?;
    let mut c = [u.trace().re / 2.0, 0.0, 0.0, 0.0];
    for (k, slot) in c.iter_mut().enumerate().skip(1) {
        *slot = (u * &pauli(k)?).trace().im / 2.0;
    }
    Rotor::from_components(c)
}

/// `r0 I + i (r1 Σ1 + r2 Σ2 + r3 Σ3)`.
pub fn su2_from_rotor(r: &Rotor) -> ComplexMatrix {
    let c = r.components();
    let mut m = ComplexMatrix::identity(2).scale(Complex64::new(c[0], 0.0));
    for (k, ck) in c.iter().enumerate().skip(1) {
        let term = pauli(k).unwrap().scale(Complex64::new(0.0, *ck));
        m = m.add(&term).unwrap();
    }
    m
}

/// Canonical rotor of a U(2) matrix after dividing out `sqrt(det U)`.
pub fn rotor_from_unitary(u: &ComplexMatrix) -> Result<Rotor> {
    if u.rows() != 2 || u.cols() != 2 || !u.is_unitary(UNIT_TOL) {
        return Err(Error::NotSpecialUnitary("not a 2x2 unitary".into()));
    }
    let phase = u.det2()?.sqrt();
    let su = u.scale(phase.inv());
    Ok(rotor_from_su2(&su)?.canonical())
}

/// Rotor `R` of a one-qubit state map of the form `ψ ↦ R ψ (cos δ + iσ3 sin δ)`,
/// recovered from the images of `1` and `iσ1`. Returned in canonical sign.
pub fn rotor_from_action(f: impl Fn(&MstaState) -> Result<MstaState>) -> Result<Rotor> {
    let image = |m: Multivector| -> Result<Multivector> {
        let out = f(&MstaState::from_cl3(&m)?)?;
        out.mv()
            .to_cl3()
            .ok_or(Error::UnsupportedQubitCount(out.n()))
    };
    let g1 = image(cl3::one())?;
    let g2 = image(cl3::isigma(1))?;
    // G1† G2 = P† iσ1 P = P†² iσ1
    let p_dag_sq = &(&g1.reversion() * &g2) * &(-&cl3::isigma(1));
    let p_sq = p_dag_sq.reversion();
    let delta = p_sq.coeff(0b011).atan2(p_sq.scalar_part()) / 2.0;
    let p_dag = cl3::even([delta.cos(), 0.0, 0.0, -delta.sin()]);
    let r = Rotor::new(&g1 * &p_dag)?;
    // the remaining basis images must follow the same law
    let p = p_dag.reversion();
    for k in 2..=3 {
        let expected = &(&r.mv * &cl3::isigma(k)) * &p;
        if !image(cl3::isigma(k))?.approx_eq(&expected, UNIT_TOL) {
            return Err(Error::NotRotor);
        }
    }
    Ok(r.canonical())
}

/// Rotor of a one-qubit circuit, read off its multivector action.
pub fn rotor_from_circuit(c: &Circuit) -> Result<Rotor> {
    if c.n() != 1 {
        return Err(Error::UnsupportedQubitCount(c.n()));
    }
    rotor_from_action(|m| run_circuit(c, m))
}

/// Circuit for `Σ3^{-1/4} Σ1^{1/4}` with `Σ1^{1/4} = H Σ3^{1/4} H`.
pub fn first_universality_circuit() -> Circuit {
    Circuit::new(1)
        .and_then(|c| c.with(GateKind::H, &[0]))
        .and_then(|c| c.with(GateKind::ZPow(0.25), &[0]))
        .and_then(|c| c.with(GateKind::H, &[0]))
        .and_then(|c| c.with(GateKind::ZPow(-0.25), &[0]))
        .expect("valid circuit")
}

/// Circuit for `H^{-1/2} Σ3^{-1/4} Σ1^{1/4} H^{1/2}`.
pub fn second_universality_circuit() -> Circuit {
    let mut c = Circuit::new(1).expect("one qubit");
    c.push(GateKind::HPow(0.5), &[0]).expect("valid gate");
    for op in first_universality_circuit().ops() {
        c.push(op.gate, &op.qubits).expect("valid gate");
    }
    c.push(GateKind::HPow(-0.5), &[0]).expect("valid gate");
    c
}

/// The two rotors whose axes are orthogonal and whose angles are an
/// irrational multiple of π, computed from their H/T circuits.
pub fn universality_rotors() -> Result<(Rotor, Rotor)> {
    Ok((
        rotor_from_circuit(&first_universality_circuit())?,
        rotor_from_circuit(&second_universality_circuit())?,
    ))
}

/// Writes `R = cos(λπ) + sin(λπ) i n` with `λ ∈ (0, 1)` and `n` a unit vector.
pub fn extract_axis_angle(r: &Rotor) -> Result<AxisAngle> {
    let c = r.components();
    let biv = (c[1] * c[1] + c[2] * c[2] + c[3] * c[3]).sqrt();
    if biv < 1e-12 {
        return Err(Error::DegenerateRotor);
    }
    let angle = biv.atan2(c[0]);
    // −i times the bivector part gives the vector c_k σ_k
    let axis = cl3::vector([c[1] / biv, c[2] / biv, c[3] / biv]);
    Ok(AxisAngle {
        axis,
        angle,
        lambda: angle / std::f64::consts::PI,
    })
}

/// `exp(i n1 α) exp(i n2 β) exp(i n1 γ)`.
pub fn euler_compose(n1: &Multivector, n2: &Multivector, angles: (f64, f64, f64)) -> Result<Rotor> {
    let (a, b, g) = angles;
    let r = rotor_exp(n1, a)?
        .compose(&rotor_exp(n2, b)?)
        .compose(&rotor_exp(n1, g)?);
    Ok(r)
}

/// Third axis `n3 = −i (n1 ∧ n2)` completing an orthonormal frame.
pub fn third_axis(n1: &Multivector, n2: &Multivector) -> Result<Multivector> {
    let w = n1.wedge(n2)?;
    Ok(-(&cl3::i() * &w))
}

/// Angles `(α, β, γ)` with `exp(i n1 α) exp(i n2 β) exp(i n1 γ) = target`.
///
/// With `n3 = −i(n1∧n2)` and target components `t` on `{1, i n1, i n2, i n3}`:
/// `t0 = cos β cos(α+γ)`, `t1 = cos β sin(α+γ)`, `t2 = sin β cos(γ−α)`,
/// `t3 = sin β sin(γ−α)`. β is returned in `[0, π/2]`; when `sin β = 0`,
/// γ is set to 0.
pub fn euler_decompose(
    target: &Rotor,
    n1: &Multivector,
    n2: &Multivector,
) -> Result<(f64, f64, f64)> {
    check_unit_vector(n1).map_err(|_| axes_error(n1, n2))?;
    check_unit_vector(n2).map_err(|_| axes_error(n1, n2))?;
    let dot = (n1 * n2).scalar_part();
    if dot.abs() > UNIT_TOL {
        return Err(axes_error(n1, n2));
    }
    let n3 = third_axis(n1, n2)?;
    let c = target.components();
    let b = [c[1], c[2], c[3]];
    let proj = |n: &Multivector| {
        let v = cl3::vector_components(n);
        v[0] * b[0] + v[1] * b[1] + v[2] * b[2]
    };
    let t = [c[0], proj(n1), proj(n2), proj(&n3)];
    let cb = t[0].hypot(t[1]);
    let sb = t[2].hypot(t[3]);
    let beta = sb.atan2(cb);
    let p = if cb > 1e-14 { t[1].atan2(t[0]) } else { 0.0 };
    let (alpha, gamma) = if sb > 1e-14 {
        let m = t[3].atan2(t[2]);
        ((p - m) / 2.0, (p + m) / 2.0)
    } else {
        (p, 0.0)
    };
    let rebuilt = euler_compose(n1, n2, (alpha, beta, gamma))?;
    let residual = rebuilt.distance(target);
    if residual > crate::PIPELINE_TOL {
        return Err(Error::EulerResidual(residual));
    }
    Ok((alpha, beta, gamma))
}

fn axes_error(n1: &Multivector, n2: &Multivector) -> Error {
    Error::AxesNotOrthonormal {
        dot: n1.gp(n2).map(|p| p.scalar_part()).unwrap_or(f64::NAN),
        norm1: n1.coeff_norm(),
        norm2: n2.coeff_norm(),
    }
}

fn grid_key(r: &Rotor) -> [i64; 4] {
    r.canonical()
        .components()
        .map(|x| (x / DEDUP_GRID).round() as i64)
}

/// Best word over {H, T} of length at most `max_len` approximating `target`.
///
/// Words are enumerated breadth-first, in lexicographic order within a
/// length, and a word is discarded when its rotor (up to sign, on a 1e-6
/// grid) was already produced by an earlier word. The error is the rotor
/// distance, which equals the phase-invariant operator-norm distance of the
/// SU(2) images. Ties go to the shorter, then lexicographically smaller word.
pub fn approximate_with_ht(target: &Rotor, max_len: usize) -> GateWord {
    let mut best = GateWord {
        letters: Vec::new(),
        value: Rotor::identity(),
        error: Rotor::identity().distance(target),
    };
    let mut seen: HashSet<[i64; 4]> = HashSet::new();
    seen.insert(grid_key(&Rotor::identity()));
    let mut frontier: Vec<(Vec<Letter>, Rotor)> = vec![(Vec::new(), Rotor::identity())];
    let letters = [Letter::H, Letter::T].map(|l| (l, l.rotor()));
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(frontier.len() * 2);
        for (word, value) in &frontier {
            for (letter, rotor) in &letters {
                let v = value.compose(rotor);
                if !seen.insert(grid_key(&v)) {
                    continue;
                }
                let mut w = word.clone();
                w.push(*letter);
                let err = v.distance(target);
                if err < best.error {
                    best = GateWord {
                        letters: w.clone(),
                        value: v.clone(),
                        error: err,
                    };
                }
                next.push((w, v));
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    best
}
