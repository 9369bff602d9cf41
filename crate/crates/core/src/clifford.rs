//! Real Clifford algebras Cl(p,q) over dense, blade-indexed coefficient arrays.
//!
//! A basis blade is identified by a bitmask: bit `i` set means basis vector
//! `e_i` participates, with factors kept in ascending index order. Vectors
//! `e_0..e_{p-1}` square to `+1`, the remaining `q` square to `-1`.
//!
//! The geometric product of two blades is another blade up to sign, so a
//! multivector with `2^(p+q)` coefficients multiplies by iterating over
//! coefficient pairs and accumulating into `mask_a ^ mask_b`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Largest supported `p + q`.
pub const MAX_DIM: usize = 16;

/// Metric signature: `p` basis vectors square to `+1`, `q` to `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    p: u8,
    q: u8,
}

impl Signature {
    /// Euclidean 3-space, the Pauli algebra.
    pub const CL3: Signature = Signature { p: 3, q: 0 };
    /// Spacetime algebra with η = diag(+,−,−,−); index 0 is timelike.
    pub const STA: Signature = Signature { p: 1, q: 3 };

    pub fn new(p: u8, q: u8) -> Result<Self> {
        if p as usize + q as usize > MAX_DIM {
            return Err(Error::SignatureTooLarge { p, q });
        }
        Ok(Signature { p, q })
    }

    pub fn p(&self) -> u8 {
        self.p
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    /// Number of basis vectors.
    pub fn dim(&self) -> usize {
        self.p as usize + self.q as usize
    }

    /// Number of basis blades, `2^dim`.
    pub fn blade_count(&self) -> usize {
        1 << self.dim()
    }

    /// Square of basis vector `e_i`.
    pub fn metric(&self, i: usize) -> f64 {
        if i < self.p as usize {
            1.0
        } else {
            -1.0
        }
    }

    fn check(&self, other: &Signature) -> Result<()> {
        if self != other {
            return Err(Error::SignatureMismatch(self.p, self.q, other.p, other.q));
        }
        Ok(())
    }
}

/// A signed basis blade.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Blade {
    pub mask: u32,
    pub sign: i8,
}

impl Blade {
    pub fn new(mask: u32) -> Self {
        Blade { mask, sign: 1 }
    }

    pub fn grade(&self) -> usize {
        self.mask.count_ones() as usize
    }
}

/// Sign picked up by moving the factors of `b` past those of `a` into
/// ascending order.
fn reordering_sign(a: u32, b: u32) -> f64 {
    let mut a = a >> 1;
    let mut swaps = 0;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Sign of `blade(a) * blade(b)` relative to `blade(a ^ b)` under `sig`.
pub(crate) fn product_sign(a: u32, b: u32, sig: Signature) -> f64 {
    let mut sign = reordering_sign(a, b);
    let shared = a & b;
    // only the negative-metric vectors contribute
    let negative = shared >> sig.p;
    if negative.count_ones() % 2 == 1 {
        sign = -sign;
    }
    sign
}

/// Geometric product of two signed basis blades.
pub fn blade_product(a: Blade, b: Blade, sig: Signature) -> Result<Blade> {
    let limit = 1u64 << sig.dim();
    for m in [a.mask, b.mask] {
        if m as u64 >= limit {
            return Err(Error::BladeOutOfRange {
                mask: m,
                dim: sig.dim(),
            });
        }
    }
    let s = product_sign(a.mask, b.mask, sig) as i8 * a.sign * b.sign;
    Ok(Blade {
        mask: a.mask ^ b.mask,
        sign: s,
    })
}

/// Dense multivector of a real Clifford algebra.
#[derive(Clone, PartialEq)]
pub struct Multivector {
    sig: Signature,
    coeffs: Vec<f64>,
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Multivector {
            sig,
            coeffs: vec![0.0; sig.blade_count()],
        }
    }

    pub fn scalar(sig: Signature, value: f64) -> Self {
        let mut m = Self::zero(sig);
        m.coeffs[0] = value;
        m
    }

    /// `coeff` times the canonical blade with the given mask.
    pub fn blade(sig: Signature, mask: u32, coeff: f64) -> Result<Self> {
        if mask as usize >= sig.blade_count() {
            return Err(Error::BladeOutOfRange {
                mask,
                dim: sig.dim(),
            });
        }
        let mut m = Self::zero(sig);
        m.coeffs[mask as usize] = coeff;
        Ok(m)
    }

    /// Basis vector `e_i`.
    pub fn basis_vector(sig: Signature, i: usize) -> Result<Self> {
        Self::blade(sig, 1 << i, 1.0)
    }

    /// Grade-1 multivector `Σ c_i e_i`.
    pub fn vector(sig: Signature, components: &[f64]) -> Result<Self> {
        if components.len() != sig.dim() {
            return Err(Error::CoefficientLength {
                got: components.len(),
                expected: sig.dim(),
            });
        }
        let mut m = Self::zero(sig);
        for (i, c) in components.iter().enumerate() {
            m.coeffs[1 << i] = *c;
        }
        Ok(m)
    }

    /// Unit pseudoscalar `e_0 e_1 ... e_{n-1}`.
    pub fn pseudoscalar(sig: Signature) -> Self {
        let mut m = Self::zero(sig);
        m.coeffs[sig.blade_count() - 1] = 1.0;
        m
    }

    pub fn from_coeffs(sig: Signature, coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.len() != sig.blade_count() {
            return Err(Error::CoefficientLength {
                got: coeffs.len(),
                expected: sig.blade_count(),
            });
        }
        Ok(Multivector { sig, coeffs })
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Coefficient of the canonical blade `mask` (0 if out of range).
    pub fn coeff(&self, mask: u32) -> f64 {
        self.coeffs.get(mask as usize).copied().unwrap_or(0.0)
    }

    pub fn set_coeff(&mut self, mask: u32, value: f64) {
        self.coeffs[mask as usize] = value;
    }

    pub fn scalar_part(&self) -> f64 {
        self.coeffs[0]
    }

    /// Geometric product; fails on signature mismatch.
    pub fn gp(&self, other: &Multivector) -> Result<Multivector> {
        self.sig.check(&other.sig)?;
        Ok(self.product_by(other, |_, _| true))
    }

    /// Outer product: bilinear extension of `e_A ∧ e_B`, which is zero when
    /// the blades share a basis vector.
    pub fn wedge(&self, other: &Multivector) -> Result<Multivector> {
        self.sig.check(&other.sig)?;
        Ok(self.product_by(other, |a, b| a & b == 0))
    }

    fn product_by(&self, other: &Multivector, keep: impl Fn(u32, u32) -> bool) -> Multivector {
        let mut out = Multivector::zero(self.sig);
        for (a, &ca) in self.coeffs.iter().enumerate() {
            if ca == 0.0 {
                continue;
            }
            for (b, &cb) in other.coeffs.iter().enumerate() {
                if cb == 0.0 || !keep(a as u32, b as u32) {
                    continue;
                }
                let s = product_sign(a as u32, b as u32, self.sig);
                out.coeffs[a ^ b] += s * ca * cb;
            }
        }
        out
    }

    /// Grade-`k` part.
    pub fn grade_project(&self, k: usize) -> Result<Multivector> {
        if k > self.sig.dim() {
            return Err(Error::GradeOutOfRange {
                grade: k,
                dim: self.sig.dim(),
            });
        }
        Ok(self.map_by_grade(|g| if g == k { 1.0 } else { 0.0 }))
    }

    /// Reversion †: grade `k` scaled by `(-1)^(k(k-1)/2)`.
    pub fn reversion(&self) -> Multivector {
        self.map_by_grade(|k| {
            if (k * k.saturating_sub(1) / 2) % 2 == 0 {
                1.0
            } else {
                -1.0
            }
        })
    }

    /// Clifford conjugate ‡: grade `k` scaled by `(-1)^(k(k+1)/2)`.
    pub fn clifford_conjugate(&self) -> Multivector {
        self.map_by_grade(|k| {
            if (k * (k + 1) / 2) % 2 == 0 {
                1.0
            } else {
                -1.0
            }
        })
    }

    /// Grade involution: grade `k` scaled by `(-1)^k`.
    pub fn grade_involution(&self) -> Multivector {
        self.map_by_grade(|k| if k % 2 == 0 { 1.0 } else { -1.0 })
    }

    fn map_by_grade(&self, f: impl Fn(usize) -> f64) -> Multivector {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(mask, c)| c * f(mask.count_ones() as usize))
            .collect();
        Multivector {
            sig: self.sig,
            coeffs,
        }
    }

    /// True if every coefficient outside grade `k` is within `tol` of zero.
    pub fn is_grade(&self, k: usize, tol: f64) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(mask, c)| mask.count_ones() as usize == k || c.abs() <= tol)
    }

    /// True if all odd-grade coefficients vanish within `tol`.
    pub fn is_even(&self, tol: f64) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(mask, c)| mask.count_ones() % 2 == 0 || c.abs() <= tol)
    }

    /// Euclidean norm of the coefficient array.
    pub fn coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn scale(&self, s: f64) -> Multivector {
        Multivector {
            sig: self.sig,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Largest absolute coefficient difference; `INFINITY` on mismatch.
    pub fn max_abs_diff(&self, other: &Multivector) -> f64 {
        if self.sig != other.sig {
            return f64::INFINITY;
        }
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Multivector, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    /// Exponential of a grade-2 element whose normalized form squares to −1:
    /// `exp(B̂φ) = cos φ + B̂ sin φ`.
    pub fn exp_bivector(&self) -> Result<Multivector> {
        if !self.is_grade(2, 0.0) {
            return Err(Error::NotPureGrade { expected: 2 });
        }
        let norm_sq = self.reversion().gp(self)?.scalar_part();
        if norm_sq == 0.0 && self.coeff_norm() == 0.0 {
            return Ok(Multivector::scalar(self.sig, 1.0));
        }
        if norm_sq <= 0.0 {
            return Err(Error::NotSimpleBivector);
        }
        let phi = norm_sq.sqrt();
        let unit = self.scale(1.0 / phi);
        let sq = unit.gp(&unit)?;
        if !sq.approx_eq(&Multivector::scalar(self.sig, -1.0), 1e-9) {
            return Err(Error::NotSimpleBivector);
        }
        let mut out = unit.scale(phi.sin());
        out.coeffs[0] += phi.cos();
        Ok(out)
    }

    /// Spacetime split `a e_t = a·e_t + a∧e_t` of a vector against the
    /// timelike basis vector `e_t`.
    pub fn spacetime_split(&self, timelike_index: usize) -> Result<Multivector> {
        if !self.is_grade(1, 0.0) {
            return Err(Error::NotPureGrade { expected: 1 });
        }
        let t = Multivector::basis_vector(self.sig, timelike_index)?;
        self.gp(&t)
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multivector[Cl({},{})]{{", self.sig.p, self.sig.q)?;
        let mut first = true;
        for (mask, c) in self.coeffs.iter().enumerate() {
            if *c == 0.0 {
                continue;
            }
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{}: {}", blade_name(mask as u32), c)?;
        }
        write!(f, "}}")
    }
}

/// `e` followed by the participating indices, or `1` for the scalar blade.
pub fn blade_name(mask: u32) -> String {
    if mask == 0 {
        return "1".to_string();
    }
    let mut s = String::from("e");
    for i in 0..32 {
        if mask & (1 << i) != 0 {
            s.push_str(&i.to_string());
        }
    }
    s
}

impl Add<&Multivector> for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        assert_eq!(self.sig, rhs.sig, "signature mismatch");
        Multivector {
            sig: self.sig,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub<&Multivector> for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        assert_eq!(self.sig, rhs.sig, "signature mismatch");
        Multivector {
            sig: self.sig,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

/// Geometric product. Panics on signature mismatch; use [`Multivector::gp`]
/// for the fallible form.
impl Mul<&Multivector> for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.gp(rhs).expect("signature mismatch")
    }
}

impl Mul<f64> for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: f64) -> Multivector {
        self.scale(rhs)
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Multivector> for Multivector {
            type Output = Multivector;
            fn $m(self, rhs: Multivector) -> Multivector {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Multivector> for Multivector {
            type Output = Multivector;
            fn $m(self, rhs: &Multivector) -> Multivector {
                (&self).$m(rhs)
            }
        }
        impl $tr<Multivector> for &Multivector {
            type Output = Multivector;
            fn $m(self, rhs: Multivector) -> Multivector {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: f64) -> Multivector {
        self.scale(rhs)
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}

impl AddAssign<&Multivector> for Multivector {
    fn add_assign(&mut self, rhs: &Multivector) {
        assert_eq!(self.sig, rhs.sig, "signature mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

/// Named elements of the Pauli algebra Cl(3). Indices `k` are 1-based to
/// match σ1, σ2, σ3.
pub mod cl3 {
    use super::{Multivector, Signature};

    pub fn one() -> Multivector {
        Multivector::scalar(Signature::CL3, 1.0)
    }

    /// σ_k for k in 1..=3.
    pub fn sigma(k: usize) -> Multivector {
        assert!((1..=3).contains(&k), "axis {k} out of range");
        Multivector::basis_vector(Signature::CL3, k - 1).unwrap()
    }

    /// Pseudoscalar i = σ1σ2σ3.
    pub fn i() -> Multivector {
        Multivector::pseudoscalar(Signature::CL3)
    }

    /// Bivector iσ_k.
    pub fn isigma(k: usize) -> Multivector {
        &i() * &sigma(k)
    }

    /// Grade-1 element `x σ1 + y σ2 + z σ3`.
    pub fn vector(v: [f64; 3]) -> Multivector {
        Multivector::vector(Signature::CL3, &v).unwrap()
    }

    /// Components of the grade-1 part.
    pub fn vector_components(m: &Multivector) -> [f64; 3] {
        [m.coeff(0b001), m.coeff(0b010), m.coeff(0b100)]
    }

    /// Even element `a0 + a1 iσ1 + a2 iσ2 + a3 iσ3`.
    pub fn even(a: [f64; 4]) -> Multivector {
        let mut m = one().scale(a[0]);
        for (k, ak) in a.iter().enumerate().skip(1) {
            m += &isigma(k).scale(*ak);
        }
        m
    }

    /// Coefficients `[a0, a1, a2, a3]` on `{1, iσ1, iσ2, iσ3}`.
    pub fn even_components(m: &Multivector) -> [f64; 4] {
        // iσ1 = σ2σ3, iσ2 = σ3σ1 = −σ1σ3, iσ3 = σ1σ2
        [m.coeff(0), m.coeff(0b110), -m.coeff(0b101), m.coeff(0b011)]
    }
}

/// Named elements of the spacetime algebra Cl(1,3).
pub mod sta {
    use super::{Multivector, Signature};

    /// γ_μ for μ in 0..=3.
    pub fn gamma(mu: usize) -> Multivector {
        Multivector::basis_vector(Signature::STA, mu).unwrap()
    }

    /// Relative vector σ_k = γ_k γ_0.
    pub fn sigma(k: usize) -> Multivector {
        &gamma(k) * &gamma(0)
    }

    /// Pseudoscalar γ0γ1γ2γ3.
    pub fn i() -> Multivector {
        Multivector::pseudoscalar(Signature::STA)
    }
}
