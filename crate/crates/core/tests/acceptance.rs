//! Acceptance suite. Runs every criterion, prints one line per criterion and
//! exits nonzero if any fails.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use mstaq::clifford::{cl3, sta, Multivector, Signature};
use mstaq::density::{self, DensityKind};
use mstaq::gates::{self, run_circuit, Circuit, GateKind};
use mstaq::msta::{
    bell_state, correlator, encode_basis, mv_to_spinor, spinor_to_mv, MstaMultivector, MstaState,
    SpinorVec,
};
use mstaq::oracle::{self, partial_trace, purity, run_statevector, StateVec};
use mstaq::rotors::{
    approximate_with_ht, bivector_basis, commutator, euler_compose, euler_decompose,
    extract_axis_angle, rotate_vector, universality_rotors, Rotor,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: f64) -> Result<(), String> {
    ensure(elapsed.as_secs_f64() < limit, || {
        format!("runtime {:.2}s exceeds {limit}s", elapsed.as_secs_f64())
    })
}

fn random_amps(rng: &mut ChaCha8Rng, n: usize) -> Vec<Complex64> {
    loop {
        let v: Vec<Complex64> = (0..1 << n)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-3 {
            return v.into_iter().map(|z| z / norm).collect();
        }
    }
}

fn random_rotor(rng: &mut ChaCha8Rng) -> Rotor {
    loop {
        let c: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
        let norm = c.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-3 {
            return Rotor::from_components(c.map(|x| x / norm)).unwrap();
        }
    }
}

fn one_qubit(c: [f64; 4]) -> MstaState {
    MstaState::from_cl3(&cl3::even(c)).unwrap()
}

fn max_coeff_diff(a: &MstaState, b: [f64; 4]) -> f64 {
    let got = cl3::even_components(&a.mv().to_cl3().unwrap());
    got.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let s = FRAC_1_SQRT_2;
    let theta: f64 = 0.7;
    let (c, sn) = (theta.cos(), theta.sin());
    // rows: 1, iσ1, iσ2, iσ3; entries on {1, iσ1, iσ2, iσ3}
    let basis = [
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ];
    type Apply = Box<dyn Fn(&MstaState) -> mstaq::Result<MstaState>>;
    let columns: Vec<(&str, Apply, [[f64; 4]; 4])> = vec![
        (
            "NOT",
            Box::new(|m| gates::apply_pauli(1, 0, m)),
            [
                [0.0, 0.0, -1.0, 0.0],
                [0.0, 0.0, 0.0, 1.0],
                [-1.0, 0.0, 0.0, 0.0],
                [0.0, 1.0, 0.0, 0.0],
            ],
        ),
        (
            "phase flip",
            Box::new(|m| gates::apply_pauli(3, 0, m)),
            [
                [1.0, 0.0, 0.0, 0.0],
                [0.0, -1.0, 0.0, 0.0],
                [0.0, 0.0, -1.0, 0.0],
                [0.0, 0.0, 0.0, 1.0],
            ],
        ),
        (
            "bit and phase flip",
            Box::new(|m| gates::apply_pauli(2, 0, m)),
            [
                [0.0, 1.0, 0.0, 0.0],
                [1.0, 0.0, 0.0, 0.0],
                [0.0, 0.0, 0.0, 1.0],
                [0.0, 0.0, 1.0, 0.0],
            ],
        ),
        (
            "Hadamard",
            Box::new(|m| gates::apply_hadamard(0, m)),
            [
                [s, 0.0, -s, 0.0],
                [0.0, -s, 0.0, s],
                [-s, 0.0, -s, 0.0],
                [0.0, s, 0.0, s],
            ],
        ),
        (
            "rotation",
            Box::new(move |m| gates::apply_rotation(theta, 0, m)),
            // iσ1 iσ3 = iσ2 and iσ2 iσ3 = −iσ1
            [
                [1.0, 0.0, 0.0, 0.0],
                [0.0, c, sn, 0.0],
                [0.0, -sn, c, 0.0],
                [0.0, 0.0, 0.0, 1.0],
            ],
        ),
        (
            "pi/8",
            Box::new(|m| gates::apply_t(0, m)),
            [
                [1.0, 0.0, 0.0, 0.0],
                [0.0, s, s, 0.0],
                [0.0, -s, s, 0.0],
                [0.0, 0.0, 0.0, 1.0],
            ],
        ),
    ];
    let mut worst: f64 = 0.0;
    for (name, f, table) in &columns {
        for (row, input) in basis.iter().enumerate() {
            let out = f(&one_qubit(*input)).map_err(|e| format!("{name}: {e}"))?;
            let d = max_coeff_diff(&out, table[row]);
            ensure(d <= 1e-12, || format!("{name} row {row}: deviation {d:e}"))?;
            worst = worst.max(d);
        }
    }
    within(start.elapsed(), 1.0)?;
    Ok(format!("24 entries, max deviation {worst:.1e}"))
}

fn two_qubit_ga_vs_oracle(gate: GateKind, q: &[usize], m: &MstaState) -> Result<f64, String> {
    let c = Circuit::new(2)
        .and_then(|c| c.with(gate, q))
        .map_err(|e| e.to_string())?;
    let ga = run_circuit(&c, m).map_err(|e| e.to_string())?;
    let ga = mv_to_spinor(&ga).map_err(|e| e.to_string())?;
    let input = StateVec::new(mv_to_spinor(m).unwrap().into_amplitudes()).unwrap();
    let reference = run_statevector(&c, &input).map_err(|e| e.to_string())?;
    Ok(ga
        .amplitudes()
        .iter()
        .zip(reference.amplitudes())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let gates = [
        (GateKind::Cnot, [0, 1]),
        (GateKind::Cnot, [1, 0]),
        (GateKind::Cphase, [0, 1]),
        (GateKind::Swap, [0, 1]),
    ];
    let mut states: Vec<MstaState> = ["00", "01", "10", "11"]
        .iter()
        .map(|b| encode_basis(b).unwrap())
        .collect();
    for _ in 0..1000 {
        let s = SpinorVec::new(random_amps(&mut rng, 2)).unwrap();
        states.push(spinor_to_mv(&s).unwrap());
    }
    let mut worst: f64 = 0.0;
    for m in &states {
        for (g, q) in &gates {
            worst = worst.max(two_qubit_ga_vs_oracle(*g, q, m)?);
        }
    }
    ensure(worst < 1e-10, || format!("max discrepancy {worst:e}"))?;
    within(start.elapsed(), 5.0)?;
    Ok(format!(
        "{} states x 4 gates, max discrepancy {worst:.1e}",
        states.len()
    ))
}

fn random_gate(rng: &mut ChaCha8Rng, n: usize) -> (GateKind, Vec<usize>) {
    let choices = if n == 2 { 12 } else { 9 };
    let q = rng.gen_range(0..n);
    let angle = rng.gen_range(-PI..PI);
    let power = rng.gen_range(-2.0..2.0);
    let gate = match rng.gen_range(0..choices) {
        0 => GateKind::X,
        1 => GateKind::Y,
        2 => GateKind::Z,
        3 => GateKind::H,
        4 => GateKind::S,
        5 => GateKind::T,
        6 => GateKind::Rotation(angle),
        7 => GateKind::ZPow(power),
        8 => GateKind::HPow(power),
        9 => GateKind::Cnot,
        10 => GateKind::Cphase,
        _ => GateKind::Swap,
    };
    let qubits = if gate.arity() == 2 {
        let first = rng.gen_range(0..2);
        vec![first, 1 - first]
    } else {
        vec![q]
    };
    (gate, qubits)
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let n = rng.gen_range(1..=2);
        let len = rng.gen_range(0..=20);
        let mut c = Circuit::new(n).unwrap();
        for _ in 0..len {
            let (g, q) = random_gate(&mut rng, n);
            c.push(g, &q).map_err(|e| e.to_string())?;
        }
        let amps = random_amps(&mut rng, n);
        let m = spinor_to_mv(&SpinorVec::new(amps.clone()).unwrap()).unwrap();
        let ga = mv_to_spinor(&run_circuit(&c, &m).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let reference =
            run_statevector(&c, &StateVec::new(amps).unwrap()).map_err(|e| e.to_string())?;
        let d = ga
            .amplitudes()
            .iter()
            .zip(reference.amplitudes())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        worst = worst.max(d);
    }
    ensure(worst < 1e-10, || format!("max discrepancy {worst:e}"))?;
    within(start.elapsed(), 30.0)?;
    Ok(format!("1000 circuits, max discrepancy {worst:.1e}"))
}

fn criterion_4() -> Outcome {
    let n = 2;
    let one = MstaMultivector::one(n);
    let i2i2 = &MstaMultivector::isigma(n, 0, 2) * &MstaMultivector::isigma(n, 1, 2);
    let i3i3 = &MstaMultivector::isigma(n, 0, 3) * &MstaMultivector::isigma(n, 1, 3);
    let tail = &one - &i3i3;
    let k = 2f64.powf(-1.5);
    let expected = [
        (&(&one + &i2i2) * &tail).scale(k),
        (&(&MstaMultivector::isigma(n, 0, 2) + &MstaMultivector::isigma(n, 1, 2)) * &tail)
            .scale(-k),
        (&(&one - &i2i2) * &tail).scale(k),
        (&(&MstaMultivector::isigma(n, 0, 2) - &MstaMultivector::isigma(n, 1, 2)) * &tail).scale(k),
    ];
    let circuit = Circuit::new(2)
        .and_then(|c| c.with(GateKind::H, &[0]))
        .and_then(|c| c.with(GateKind::Cnot, &[0, 1]))
        .map_err(|e| e.to_string())?;
    let mut worst: f64 = 0.0;
    for (idx, bits) in ["00", "01", "10", "11"].iter().enumerate() {
        let out = run_circuit(&circuit, &encode_basis(bits).unwrap()).map_err(|e| e.to_string())?;
        let d = out.mv().max_abs_diff(&expected[idx]);
        ensure(d <= 1e-12, || format!("Bell {} deviation {d:e}", idx + 1))?;
        let lib = bell_state(idx + 1).map_err(|e| e.to_string())?;
        ensure(lib.mv().max_abs_diff(&expected[idx]) <= 1e-12, || {
            format!("bell_state({}) disagrees", idx + 1)
        })?;
        worst = worst.max(d);
    }
    // [(1 + iσ2¹iσ2²) E] / √2 with E = (1 − iσ3¹iσ3²)/2
    let e = tail.scale(0.5);
    ensure(e.max_abs_diff(&correlator(2)) <= 1e-15, || {
        "correlator form".into()
    })?;
    let fig = (&(&one + &i2i2) * &e).scale(FRAC_1_SQRT_2);
    let d = fig.max_abs_diff(&expected[0]);
    ensure(d <= 1e-12, || {
        format!("circuit-figure form deviation {d:e}")
    })?;
    Ok(format!("4 Bell states, max deviation {worst:.1e}"))
}

fn criterion_5() -> Outcome {
    let (r1, r2) = universality_rotors().map_err(|e| e.to_string())?;
    let s = FRAC_1_SQRT_2;
    let q = 1.0 / (2.0 * 2f64.sqrt());
    let e1 = [0.5 * (1.0 + s), -q, 0.5 * (1.0 - s), q];
    let d = 0.5 * (0.5 - s);
    let e2 = [0.5 * (1.0 + s), -d, 0.5, d];
    let diff = |r: &Rotor, e: [f64; 4]| {
        r.components()
            .iter()
            .zip(e)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    };
    ensure(diff(&r1, e1) <= 1e-12, || format!("R1 = {r1}"))?;
    ensure(diff(&r2, e2) <= 1e-12, || format!("R2 = {r2}"))?;
    let a1 = extract_axis_angle(&r1).map_err(|e| e.to_string())?;
    let a2 = extract_axis_angle(&r2).map_err(|e| e.to_string())?;
    let c = 0.5 * (1.0 + s);
    ensure(((a1.lambda * PI).cos() - c).abs() <= 1e-12, || {
        "cos(λ1π)".into()
    })?;
    ensure((a1.lambda - a2.lambda).abs() <= 1e-12, || "λ1 ≠ λ2".into())?;
    let norm = 1.0 / (1.0 - c * c).sqrt();
    let n1 = [-q, 0.5 * (1.0 - s), q].map(|x| x * norm);
    let n2 = [-d, 0.5, d].map(|x| x * norm);
    let vdiff = |a: [f64; 3], b: [f64; 3]| {
        a.iter()
            .zip(b)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    };
    ensure(vdiff(a1.axis_components(), n1) <= 1e-10, || {
        "n1 components".into()
    })?;
    ensure(vdiff(a2.axis_components(), n2) <= 1e-10, || {
        "n2 components".into()
    })?;
    let dot = (&a1.axis * &a2.axis).scalar_part();
    ensure(dot.abs() <= 1e-12, || format!("n1·n2 = {dot:e}"))?;
    // rational proxy
    let lambda = a1.lambda;
    let mut closest = (f64::INFINITY, 0u32);
    for den in 1..=10_000u32 {
        let num = (lambda * den as f64).round();
        let gap = (lambda - num / den as f64).abs();
        if gap < closest.0 {
            closest = (gap, den);
        }
    }
    ensure(closest.0 > 1e-9, || {
        format!(
            "λ within {:e} of a fraction with denominator {}",
            closest.0, closest.1
        )
    })?;
    Ok(format!(
        "λ = {lambda:.15}, n1·n2 = {dot:.1e}, nearest p/q (q ≤ 1e4) gap {:.3e} at q = {}",
        closest.0, closest.1
    ))
}

fn criterion_6() -> Outcome {
    let (r1, r2) = universality_rotors().map_err(|e| e.to_string())?;
    let n1 = extract_axis_angle(&r1).map_err(|e| e.to_string())?.axis;
    let n2 = extract_axis_angle(&r2).map_err(|e| e.to_string())?.axis;
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst: f64 = 0.0;
    let mut worst_a: f64 = 0.0;
    for _ in 0..1000 {
        let t = random_rotor(&mut rng);
        let (a, b, g) = euler_decompose(&t, &n1, &n2).map_err(|e| e.to_string())?;
        let rebuilt = euler_compose(&n1, &n2, (a, b, g)).map_err(|e| e.to_string())?;
        worst = worst.max(rebuilt.distance(&t));
        worst_a = worst_a.max((t.components()[0] - b.cos() * (a + g).cos()).abs());
    }
    ensure(worst < 1e-10, || format!("residual {worst:e}"))?;
    ensure(worst_a <= 1e-12, || {
        format!("scalar identity deviation {worst_a:e}")
    })?;
    Ok(format!(
        "1000 rotors, max residual {worst:.1e}, scalar identity {worst_a:.1e}"
    ))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let lengths = [4, 8, 12];
    let mut sums = [0.0; 3];
    for t in 0..20 {
        let target = random_rotor(&mut rng);
        let errs = lengths.map(|l| approximate_with_ht(&target, l).error);
        ensure(errs[1] <= errs[0] && errs[2] <= errs[1], || {
            format!("target {t}: errors {errs:?} increase with length")
        })?;
        for (s, e) in sums.iter_mut().zip(errs) {
            *s += e;
        }
    }
    let means = sums.map(|s| s / 20.0);
    ensure(means[2] < means[0], || format!("means {means:?}"))?;
    within(start.elapsed(), 60.0)?;
    Ok(format!(
        "mean error {:.4} / {:.4} / {:.4} at lengths 4 / 8 / 12, {:.2}s",
        means[0],
        means[1],
        means[2],
        start.elapsed().as_secs_f64()
    ))
}

fn criterion_8() -> Outcome {
    let b = bivector_basis();
    let eps = |l: usize, m: usize, k: usize| -> f64 {
        match (l, m, k) {
            (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
            (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
            _ => 0.0,
        }
    };
    for l in 0..3 {
        for m in 0..3 {
            let delta = if l == m { 1.0 } else { 0.0 };
            let mut comm = Multivector::zero(Signature::CL3);
            let mut prod = Multivector::scalar(Signature::CL3, -delta);
            for (k, bk) in b.iter().enumerate() {
                comm += &bk.scale(-2.0 * eps(l, m, k));
                prod += &bk.scale(-eps(l, m, k));
            }
            let got = commutator(&b[l], &b[m]).map_err(|e| e.to_string())?;
            ensure(got == comm, || format!("[B{}, B{}]", l + 1, m + 1))?;
            ensure(&b[l] * &b[m] == prod, || format!("B{} B{}", l + 1, m + 1))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let r = random_rotor(&mut rng);
        let v = cl3::vector(std::array::from_fn(|_| rng.gen_range(-2.0..2.0)));
        let a = rotate_vector(&r, &v).map_err(|e| e.to_string())?;
        let c = rotate_vector(&r.negate(), &v).map_err(|e| e.to_string())?;
        worst = worst.max(a.max_abs_diff(&c));
    }
    ensure(worst <= 1e-12, || {
        format!("double cover deviation {worst:e}")
    })?;
    Ok(format!(
        "9 index pairs exact, 1000 sign flips, max deviation {worst:.1e}"
    ))
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut worst_unit: f64 = 0.0;
    let mut worst_reduction: f64 = 0.0;
    for _ in 0..200 {
        let m = spinor_to_mv(&SpinorVec::new(random_amps(&mut rng, 1)).unwrap()).unwrap();
        let d = density::pure_density(&m).map_err(|e| e.to_string())?;
        let p = d.polarization().unwrap();
        worst_unit = worst_unit.max((p.iter().map(|x| x * x).sum::<f64>().sqrt() - 1.0).abs());
        let md = density::multiqubit_density(&m).map_err(|e| e.to_string())?;
        worst_reduction = worst_reduction.max(md.mv.max_abs_diff(&d.mv));
    }
    ensure(worst_unit <= 1e-12, || {
        format!("spin vector norm deviation {worst_unit:e}")
    })?;
    ensure(worst_reduction <= 1e-12, || {
        format!("n=1 reduction deviation {worst_reduction:e}")
    })?;
    let mut max_p: f64 = 0.0;
    for _ in 0..200 {
        let k = rng.gen_range(1..5);
        let w: Vec<f64> = (0..k).map(|_| rng.gen_range(0.01..1.0)).collect();
        let total: f64 = w.iter().sum();
        let entries: Vec<(f64, Multivector)> = w
            .iter()
            .map(|p| {
                let v: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
                let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
                (p / total, cl3::vector(v.map(|x| x / n)))
            })
            .collect();
        let d = density::mixed_density(&entries).map_err(|e| e.to_string())?;
        let p = d.polarization().unwrap();
        max_p = max_p.max(p.iter().map(|x| x * x).sum::<f64>().sqrt());
    }
    ensure(max_p <= 1.0 + 1e-12, || format!("‖P‖ = {max_p}"))?;
    let bell = density::multiqubit_density(&bell_state(1).unwrap()).map_err(|e| e.to_string())?;
    ensure(bell.kind == DensityKind::Pure, || {
        "Bell density kind".into()
    })?;
    let rho = bell.to_matrix();
    let pur = purity(&rho);
    ensure((pur - 1.0).abs() <= 1e-12, || format!("purity {pur}"))?;
    let mut worst_pol: f64 = 0.0;
    for keep in 0..2 {
        let r = partial_trace(&rho, keep).map_err(|e| e.to_string())?;
        let p = oracle::bloch_vector(&r).map_err(|e| e.to_string())?;
        worst_pol = worst_pol.max(p.iter().map(|x| x * x).sum::<f64>().sqrt());
    }
    ensure(worst_pol < 1e-12, || {
        format!("reduced polarization {worst_pol:e}")
    })?;
    Ok(format!(
        "unit spin {worst_unit:.1e}, max ‖P‖ {max_p:.4}, Bell purity {pur:.12}, reduced polarization {worst_pol:.1e}"
    ))
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let coeffs: Vec<f64> = (0..8).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let m = Multivector::from_coeffs(Signature::CL3, coeffs).unwrap();
        let n = m.clifford_conjugate();
        let nd = n.reversion();
        let nc = n.clifford_conjugate();
        let ndc = nd.clifford_conjugate();
        let parts = [
            (&(&(&n + &nd) + &nc) + &ndc).scale(0.25),
            (&(&(&nc + &ndc) - &n) - &nd).scale(0.25),
            (&(&(&nd - &n) + &nc) - &ndc).scale(0.25),
            (&(&(&n - &nd) + &nc) - &ndc).scale(0.25),
        ];
        for (k, part) in parts.iter().enumerate() {
            let expected = m.grade_project(k).unwrap();
            worst = worst.max(part.max_abs_diff(&expected));
        }
    }
    ensure(worst <= 1e-12, || {
        format!("involution identities deviation {worst:e}")
    })?;
    let i = sta::i();
    for mu in 0..4 {
        let g = sta::gamma(mu);
        for nu in 0..4 {
            let h = sta::gamma(nu);
            let dot = (&(&g * &h) + &(&h * &g)).scale(0.5);
            let eta = match (mu, nu) {
                (0, 0) => 1.0,
                (a, b) if a == b => -1.0,
                _ => 0.0,
            };
            ensure(dot == Multivector::scalar(Signature::STA, eta), || {
                format!("γ{mu}·γ{nu}")
            })?;
            if mu < nu {
                ensure(&i * &(&g * &h) == &(&g * &h) * &i, || {
                    "I commutes with bivectors".into()
                })?;
            }
        }
        ensure(&i * &g == -(&g * &i), || {
            format!("I anticommutes with γ{mu}")
        })?;
    }
    ensure(&i * &i == Multivector::scalar(Signature::STA, -1.0), || {
        "I² = −1".into()
    })?;
    Ok(format!(
        "1000 multivectors, max deviation {worst:.1e}; metric and pseudoscalar exact"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("one-qubit gate table", criterion_1),
        ("two-qubit gates vs oracle", criterion_2),
        ("random circuits commute with oracle", criterion_3),
        ("Bell state construction", criterion_4),
        ("universality constants", criterion_5),
        ("Euler decomposition", criterion_6),
        ("H/T approximation improves with length", criterion_7),
        ("rotor algebra", criterion_8),
        ("density operators", criterion_9),
        ("involution and spacetime identities", criterion_10),
    ];
    let mut failed = 0;
    for (idx, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("[PASS] criterion {}: {name}: {detail}", idx + 1),
            Err(reason) => {
                failed += 1;
                println!("[FAIL] criterion {}: {name}: {reason}", idx + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
