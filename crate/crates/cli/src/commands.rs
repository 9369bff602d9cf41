//! The `simulate`, `decompose` and `universality` commands. Each returns a
//! [`Report`] holding a human-readable table and a JSON value.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt::Write as _;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use mstaq::clifford::cl3;
use mstaq::gates::{run_circuit, Circuit};
use mstaq::msta::{encode_basis, mv_to_spinor, spinor_to_mv, MstaState, SpinorVec};
use mstaq::oracle::{run_statevector, ComplexMatrix, StateVec};
use mstaq::rotors::{
    approximate_with_ht, euler_decompose, extract_axis_angle, rotor_exp, rotor_from_su2,
    universality_rotors, Rotor,
};

use crate::CliError;

/// Largest GA/matrix discrepancy accepted by `simulate --backend both`.
pub const AGREEMENT_TOL: f64 = 1e-8;

/// Axis renormalizations larger than this are reported.
pub const RENORMALIZE_WARN: f64 = 1e-6;

/// Tolerance of the universality checks.
pub const UNIVERSALITY_TOL: f64 = 1e-12;

/// Output of a command. `ok` is false when a verification step failed.
#[derive(Debug, Clone)]
pub struct Report {
    pub text: String,
    pub json: Value,
    pub ok: bool,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backend {
    Ga,
    Matrix,
    Both,
}

impl Backend {
    fn name(self) -> &'static str {
        match self {
            Backend::Ga => "ga",
            Backend::Matrix => "matrix",
            Backend::Both => "both",
        }
    }
}

fn fmt_complex(z: Complex64) -> String {
    format!("{:+.12} {:+.12}i", z.re, z.im)
}

fn complex_json(amps: &[Complex64]) -> Value {
    Value::Array(amps.iter().map(|z| json!([z.re, z.im])).collect())
}

/// Runs a circuit from a computational basis input on the chosen backends.
pub fn simulate(c: &Circuit, backend: Backend, input: Option<&str>) -> Result<Report, CliError> {
    let bits = match input {
        Some(b) => b.to_string(),
        None => "0".repeat(c.n()),
    };
    if bits.len() != c.n() {
        return Err(CliError::Usage(format!(
            "input {bits:?} has {} bits, circuit has {} qubits",
            bits.len(),
            c.n()
        )));
    }
    let start = encode_basis(&bits).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut text = String::new();
    let mut state = serde_json::Map::new();
    let _ = writeln!(
        text,
        "circuit: {} qubit(s), {} gate(s), input |{bits}>",
        c.n(),
        c.len()
    );

    let ga = if backend != Backend::Matrix {
        let out = run_circuit(c, &start)?;
        let _ = writeln!(text, "\nmultivector state:");
        let terms = out.mv().terms(1e-15);
        for (label, coeff) in &terms {
            let _ = writeln!(text, "  {coeff:+.12}  {label}");
        }
        let amps = mv_to_spinor(&out)?;
        state.insert(
            "multivector".into(),
            Value::Array(
                terms
                    .iter()
                    .map(|(l, c)| json!({"blade": l, "coeff": c}))
                    .collect(),
            ),
        );
        state.insert("ga_amplitudes".into(), complex_json(amps.amplitudes()));
        Some((out, amps))
    } else {
        None
    };

    let matrix = if backend != Backend::Ga {
        let input = StateVec::from_bits(&bits)?;
        Some(run_statevector(c, &input)?)
    } else {
        None
    };

    let amps: &[Complex64] = match (&ga, &matrix) {
        (_, Some(v)) => v.amplitudes(),
        (Some((_, s)), None) => s.amplitudes(),
        (None, None) => unreachable!("at least one backend runs"),
    };
    let _ = writeln!(text, "\namplitudes:");
    for (idx, z) in amps.iter().enumerate() {
        let _ = writeln!(
            text,
            "  |{idx:0width$b}>  {}",
            fmt_complex(*z),
            width = c.n()
        );
    }
    state.insert("amplitudes".into(), complex_json(amps));

    let mut ok = true;
    let mut discrepancy = Value::Null;
    if let (Some((mv, ga_amps)), Some(v)) = (&ga, &matrix) {
        let amp_gap = ga_amps.max_abs_diff(&SpinorVec::new(v.amplitudes().to_vec())?);
        let lifted: MstaState = spinor_to_mv(&SpinorVec::new(v.amplitudes().to_vec())?)?;
        let coeff_gap = mv.mv().max_abs_diff(lifted.mv());
        let gap = amp_gap.max(coeff_gap);
        ok = gap <= AGREEMENT_TOL;
        let verdict = if ok { "agree" } else { "DISAGREE" };
        let _ = writeln!(
            text,
            "\nmax discrepancy: {gap:.3e} (backends {verdict}, tolerance {AGREEMENT_TOL:e})"
        );
        discrepancy = json!(gap);
    }

    Ok(Report {
        text,
        json: json!({
            "backend": backend.name(),
            "input": bits,
            "state": Value::Object(state),
            "discrepancy": discrepancy,
        }),
        ok,
        warnings: Vec::new(),
    })
}

/// How `decompose` obtains its target rotor.
#[derive(Debug, Clone, PartialEq)]
pub enum Target {
    /// `exp(i n θ)` for axis `n` and angle `θ` in radians.
    AxisAngle([f64; 3], f64),
    /// Row-major 2x2 complex matrix as `re, im` pairs.
    Su2([f64; 8]),
    Random(u64),
}

fn parse_floats<const N: usize>(s: &str, what: &str) -> Result<[f64; N], CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != N {
        return Err(CliError::Usage(format!(
            "{what} needs {N} comma-separated numbers, got {}",
            parts.len()
        )));
    }
    let mut out = [0.0; N];
    for (slot, p) in out.iter_mut().zip(&parts) {
        *slot = p
            .parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .ok_or_else(|| CliError::Usage(format!("{what}: invalid number {p:?}")))?;
    }
    Ok(out)
}

impl Target {
    pub fn parse_axis_angle(s: &str) -> Result<Target, CliError> {
        let [x, y, z, theta] = parse_floats::<4>(s, "--target")?;
        Ok(Target::AxisAngle([x, y, z], theta))
    }

    pub fn parse_su2(s: &str) -> Result<Target, CliError> {
        Ok(Target::Su2(parse_floats::<8>(s, "--su2")?))
    }
}

fn random_rotor(seed: u64) -> Rotor {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let c: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
        let norm = c.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-3 {
            return Rotor::from_components(c.map(|x| x / norm)).expect("normalized");
        }
    }
}

fn resolve_target(t: &Target, warnings: &mut Vec<String>) -> Result<Rotor, CliError> {
    match t {
        Target::AxisAngle(v, theta) => {
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm == 0.0 {
                return Err(CliError::Usage("--target axis must be nonzero".into()));
            }
            if (norm - 1.0).abs() > RENORMALIZE_WARN {
                warnings.push(format!("axis renormalized from length {norm}"));
            }
            let axis = cl3::vector(v.map(|x| x / norm));
            Ok(rotor_exp(&axis, *theta)?)
        }
        Target::Su2(e) => {
            let rows = vec![
                vec![Complex64::new(e[0], e[1]), Complex64::new(e[2], e[3])],
                vec![Complex64::new(e[4], e[5]), Complex64::new(e[6], e[7])],
            ];
            rotor_from_su2(&ComplexMatrix::from_rows(&rows))
                .map_err(|e| CliError::Usage(e.to_string()))
        }
        Target::Random(seed) => Ok(random_rotor(*seed)),
    }
}

fn components_json(r: &Rotor) -> Value {
    json!(r.components())
}

/// Euler angles about the universality axes and the best H/T word.
pub fn decompose(target: &Target, max_len: usize) -> Result<Report, CliError> {
    let mut warnings = Vec::new();
    let rotor = resolve_target(target, &mut warnings)?;
    let (r1, r2) = universality_rotors()?;
    let n1 = extract_axis_angle(&r1)?.axis;
    let n2 = extract_axis_angle(&r2)?.axis;
    let mut text = String::new();
    let _ = writeln!(text, "target rotor: {rotor}");
    let mut ok = true;
    let angles = match euler_decompose(&rotor, &n1, &n2) {
        Ok((a, b, g)) => {
            let residual = mstaq::rotors::euler_compose(&n1, &n2, (a, b, g))?.distance(&rotor);
            let _ = writeln!(text, "\nEuler angles, exp(i n1 a) exp(i n2 b) exp(i n1 g):");
            let _ = writeln!(text, "  alpha = {a:+.12}");
            let _ = writeln!(text, "  beta  = {b:+.12}");
            let _ = writeln!(text, "  gamma = {g:+.12}");
            let _ = writeln!(text, "  residual = {residual:.3e}");
            json!({"alpha": a, "beta": b, "gamma": g, "residual": residual})
        }
        Err(e) => {
            ok = false;
            let _ = writeln!(text, "\nEuler decomposition failed: {e}");
            Value::Null
        }
    };
    let word = approximate_with_ht(&rotor, max_len);
    let shown = if word.letters.is_empty() {
        "(empty)".to_string()
    } else {
        word.to_string()
    };
    let _ = writeln!(text, "\nbest H/T word up to length {max_len}: {shown}");
    let _ = writeln!(text, "  length = {}", word.letters.len());
    let _ = writeln!(text, "  error  = {:.6e}", word.error);
    let _ = writeln!(text, "  value  = {}", word.value.canonical());
    Ok(Report {
        text,
        json: json!({
            "target": components_json(&rotor),
            "angles": angles,
            "word": word.to_string(),
            "error": word.error,
            "max_len": max_len,
        }),
        ok,
        warnings,
    })
}

fn check_line(text: &mut String, name: &str, dev: f64, tol: f64) -> (bool, Value) {
    let pass = dev <= tol;
    let _ = writeln!(
        text,
        "  [{}] {name}: deviation {dev:.1e} (tolerance {tol:e})",
        if pass { "PASS" } else { "FAIL" }
    );
    (pass, json!({"name": name, "deviation": dev, "pass": pass}))
}

fn max_gap(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Rotors of the two H/T circuits, their angles and axes, and checks
/// against the closed forms.
pub fn universality() -> Result<Report, CliError> {
    let (r1, r2) = universality_rotors()?;
    let a1 = extract_axis_angle(&r1)?;
    let a2 = extract_axis_angle(&r2)?;
    let n1 = a1.axis_components();
    let n2 = a2.axis_components();
    let dot: f64 = n1.iter().zip(&n2).map(|(x, y)| x * y).sum();

    let s = FRAC_1_SQRT_2;
    let c = 0.5 * (1.0 + s);
    let q = 0.5 * s;
    let d = 0.5 * (0.5 - s);
    let expected_r1 = [c, -q, 0.5 * (1.0 - s), q];
    let expected_r2 = [c, -d, 0.5, d];
    let lambda = c.acos() / PI;
    let inv_sin = 1.0 / (1.0 - c * c).sqrt();
    let expected_n1 = [-q, 0.5 * (1.0 - s), q].map(|x| x * inv_sin);
    let expected_n2 = [-d, 0.5, d].map(|x| x * inv_sin);

    let mut text = String::new();
    let _ = writeln!(text, "R1 = {r1}");
    let _ = writeln!(text, "R2 = {r2}");
    let _ = writeln!(text, "lambda1 = {:.15}", a1.lambda);
    let _ = writeln!(text, "lambda2 = {:.15}", a2.lambda);
    let _ = writeln!(
        text,
        "n1 = ({:+.12}, {:+.12}, {:+.12})",
        n1[0], n1[1], n1[2]
    );
    let _ = writeln!(
        text,
        "n2 = ({:+.12}, {:+.12}, {:+.12})",
        n2[0], n2[1], n2[2]
    );
    let _ = writeln!(text, "n1 . n2 = {dot:.3e}");
    let _ = writeln!(text, "\nchecks:");
    let checks = [
        check_line(
            &mut text,
            "R1 coefficients",
            max_gap(&r1.components(), &expected_r1),
            UNIVERSALITY_TOL,
        ),
        check_line(
            &mut text,
            "R2 coefficients",
            max_gap(&r2.components(), &expected_r2),
            UNIVERSALITY_TOL,
        ),
        check_line(
            &mut text,
            "lambda1 = acos((1 + 1/sqrt 2)/2)/pi",
            (a1.lambda - lambda).abs(),
            UNIVERSALITY_TOL,
        ),
        check_line(
            &mut text,
            "lambda1 = lambda2",
            (a1.lambda - a2.lambda).abs(),
            UNIVERSALITY_TOL,
        ),
        check_line(
            &mut text,
            "n1 components",
            max_gap(&n1, &expected_n1),
            1e-10,
        ),
        check_line(
            &mut text,
            "n2 components",
            max_gap(&n2, &expected_n2),
            1e-10,
        ),
        check_line(&mut text, "n1 . n2 = 0", dot.abs(), UNIVERSALITY_TOL),
    ];
    let ok = checks.iter().all(|(p, _)| *p);
    Ok(Report {
        text,
        json: json!({
            "r1": components_json(&r1),
            "r2": components_json(&r2),
            "lambda1": a1.lambda,
            "lambda2": a2.lambda,
            "n1": n1,
            "n2": n2,
            "dot": dot,
            "checks": checks.iter().map(|(_, v)| v.clone()).collect::<Vec<_>>(),
        }),
        ok,
        warnings: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_circuit;

    #[test]
    fn bell_prep_both_backends() {
        let c = parse_circuit("qubits 2\nH 0\nCNOT 0 1").unwrap();
        let r = simulate(&c, Backend::Both, None).unwrap();
        assert!(r.ok);
        assert!(r.json["discrepancy"].as_f64().unwrap() < 1e-10);
        let amps = r.json["state"]["amplitudes"].as_array().unwrap();
        let expected = [FRAC_1_SQRT_2, 0.0, 0.0, FRAC_1_SQRT_2];
        for (a, e) in amps.iter().zip(expected) {
            assert!((a[0].as_f64().unwrap() - e).abs() < 1e-12);
            assert!(a[1].as_f64().unwrap().abs() < 1e-12);
        }
    }

    #[test]
    fn empty_circuit_reports_encoded_input() {
        let c = parse_circuit("qubits 2\n").unwrap();
        let r = simulate(&c, Backend::Ga, Some("01")).unwrap();
        let terms = r.json["state"]["multivector"].as_array().unwrap();
        // −iσ2² E = ½(e13^2 + e12^1 e23^2)
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[0]["blade"], "e13^2");
        assert!((terms[0]["coeff"].as_f64().unwrap() - 0.5).abs() < 1e-15);
        assert!(simulate(&c, Backend::Ga, Some("0")).is_err());
    }

    #[test]
    fn decompose_hadamard_rotor() {
        let h = [FRAC_1_SQRT_2, 0.0, FRAC_1_SQRT_2, PI / 2.0];
        let r = decompose(&Target::AxisAngle([h[0], h[1], h[2]], h[3]), 6).unwrap();
        assert_eq!(r.json["word"], "H");
        assert!(r.json["error"].as_f64().unwrap() < 1e-12);
        assert!(r.ok);
    }

    #[test]
    fn decompose_along_first_axis() {
        let (r1, _) = universality_rotors().unwrap();
        let a = extract_axis_angle(&r1).unwrap();
        let n = a.axis_components();
        let r = decompose(&Target::AxisAngle(n, a.angle), 4).unwrap();
        let angles = &r.json["angles"];
        assert!((angles["alpha"].as_f64().unwrap() - a.lambda * PI).abs() < 1e-12);
        assert!(angles["beta"].as_f64().unwrap().abs() < 1e-12);
        assert_eq!(angles["gamma"].as_f64().unwrap(), 0.0);
    }

    #[test]
    fn decompose_random_is_reproducible() {
        let a = decompose(&Target::Random(42), 8).unwrap();
        let b = decompose(&Target::Random(42), 8).unwrap();
        assert_eq!(a.json, b.json);
        assert!(a.json["angles"]["residual"].as_f64().unwrap() < 1e-10);
    }

    #[test]
    fn renormalization_warning() {
        let r = decompose(&Target::AxisAngle([0.0, 0.0, 2.0], 0.3), 2).unwrap();
        assert_eq!(r.warnings.len(), 1);
        let r = decompose(&Target::AxisAngle([0.0, 0.0, 1.0], 0.3), 2).unwrap();
        assert!(r.warnings.is_empty());
    }

    #[test]
    fn su2_target_validation() {
        let id = Target::parse_su2("1,0,0,0,0,0,1,0").unwrap();
        let r = decompose(&id, 3).unwrap();
        assert_eq!(r.json["word"], "");
        let bad = Target::parse_su2("2,0,0,0,0,0,1,0").unwrap();
        assert!(matches!(decompose(&bad, 3), Err(CliError::Usage(_))));
        assert!(Target::parse_su2("1,0").is_err());
        assert!(Target::parse_axis_angle("1,0,0,x").is_err());
    }

    #[test]
    fn universality_flags_pass() {
        let r = universality().unwrap();
        assert!(r.ok);
        assert!((r.json["lambda1"].as_f64().unwrap() - 0.1744).abs() < 1e-4);
        assert!(r.json["dot"].as_f64().unwrap().abs() < 1e-12);
    }
}
