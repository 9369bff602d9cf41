//! Line-oriented circuit files.
//!
//! ```text
//! # Bell pair
//! qubits 2
//! H 0
//! CNOT 0 1
//! ```
//!
//! The first non-blank, non-comment line declares the qubit count. Each
//! later line holds one gate: `X|Y|Z|H|S|T q`, `RZ theta q`, `ZPOW alpha q`,
//! `HPOW beta q`, or `CNOT|CPHASE|SWAP q1 q2`. Mnemonics are case-insensitive.

use std::fmt;

use mstaq::gates::{Circuit, GateKind};

/// A problem found while parsing, with 1-based position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}, line {}", self.message, self.line)
    }
}

/// Tokens of one line with their 1-based start columns, comment removed.
fn tokenize(line: &str) -> Vec<(usize, &str)> {
    let code = match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    };
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in code.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s, &code[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &code[s..]));
    }
    out.into_iter()
        .map(|(s, t)| (code[..s].chars().count() + 1, t))
        .collect()
}

struct LineParser<'a> {
    line: usize,
    tokens: Vec<(usize, &'a str)>,
    diags: &'a mut Vec<Diagnostic>,
}

impl LineParser<'_> {
    fn error(&mut self, column: usize, message: impl Into<String>) {
        self.diags.push(Diagnostic {
            line: self.line,
            column,
            message: message.into(),
        });
    }

    fn param(&mut self, idx: usize) -> Option<f64> {
        let (col, tok) = self.tokens[idx];
        match tok.parse::<f64>() {
            Ok(v) if v.is_finite() => Some(v),
            _ => {
                self.error(col, format!("invalid parameter {tok:?}"));
                None
            }
        }
    }

    fn qubit(&mut self, idx: usize, n: usize) -> Option<usize> {
        let (col, tok) = self.tokens[idx];
        match tok.parse::<usize>() {
            Ok(q) if q < n => Some(q),
            Ok(q) => {
                self.error(col, format!("qubit index {q} out of range for {n} qubits"));
                None
            }
            Err(_) => {
                self.error(col, format!("invalid qubit index {tok:?}"));
                None
            }
        }
    }
}

fn gate_shape(mnemonic: &str) -> Option<(bool, usize)> {
    // (takes a parameter, number of qubits)
    Some(match mnemonic {
        "X" | "Y" | "Z" | "H" | "S" | "T" => (false, 1),
        "RZ" | "ZPOW" | "HPOW" => (true, 1),
        "CNOT" | "CPHASE" | "SWAP" => (false, 2),
        _ => return None,
    })
}

fn build_gate(mnemonic: &str, p: Option<f64>) -> GateKind {
    match (mnemonic, p) {
        ("X", _) => GateKind::X,
        ("Y", _) => GateKind::Y,
        ("Z", _) => GateKind::Z,
        ("H", _) => GateKind::H,
        ("S", _) => GateKind::S,
        ("T", _) => GateKind::T,
        ("RZ", Some(p)) => GateKind::Rotation(p),
        ("ZPOW", Some(p)) => GateKind::ZPow(p),
        ("HPOW", Some(p)) => GateKind::HPow(p),
        ("CNOT", _) => GateKind::Cnot,
        ("CPHASE", _) => GateKind::Cphase,
        ("SWAP", _) => GateKind::Swap,
        _ => unreachable!("shape checked"),
    }
}

fn parse_header(lp: &mut LineParser<'_>) -> Option<usize> {
    let (col, head) = lp.tokens[0];
    if !head.eq_ignore_ascii_case("qubits") {
        lp.error(col, format!("expected `qubits <n>` header, found {head:?}"));
        return None;
    }
    if lp.tokens.len() != 2 {
        lp.error(col, "`qubits` takes exactly one argument");
        return None;
    }
    let (col, tok) = lp.tokens[1];
    match tok.parse::<usize>() {
        Ok(n @ 1..=2) => Some(n),
        _ => {
            lp.error(col, format!("qubit count must be 1 or 2, got {tok:?}"));
            None
        }
    }
}

fn parse_gate(lp: &mut LineParser<'_>, n: usize) -> Option<(GateKind, Vec<usize>)> {
    let (col, head) = lp.tokens[0];
    let mnemonic = head.to_ascii_uppercase();
    let Some((has_param, arity)) = gate_shape(&mnemonic) else {
        lp.error(col, format!("unknown gate {head:?}"));
        return None;
    };
    let expected = usize::from(has_param) + arity;
    let got = lp.tokens.len() - 1;
    if got != expected {
        let what = if has_param {
            format!("a parameter and {arity} qubit index")
        } else if arity == 1 {
            "1 qubit index".to_string()
        } else {
            format!("{arity} qubit indices")
        };
        lp.error(
            col,
            format!("{mnemonic} expects {what}, got {got} arguments"),
        );
        return None;
    }
    if arity == 2 && n < 2 {
        lp.error(col, format!("{mnemonic} needs 2 qubits, circuit has {n}"));
        return None;
    }
    let p = if has_param { Some(lp.param(1)?) } else { None };
    let first = usize::from(has_param) + 1;
    let mut qubits = Vec::with_capacity(arity);
    let mut ok = true;
    for idx in first..first + arity {
        match lp.qubit(idx, n) {
            Some(q) => qubits.push(q),
            None => ok = false,
        }
    }
    if !ok {
        return None;
    }
    if arity == 2 && qubits[0] == qubits[1] {
        lp.error(lp.tokens[first + 1].0, "distinct indices required");
        return None;
    }
    Some((build_gate(&mnemonic, p), qubits))
}

/// Parses a circuit file. On failure, every problem found is reported.
pub fn parse_circuit(text: &str) -> Result<Circuit, Vec<Diagnostic>> {
    let mut diags = Vec::new();
    let mut circuit: Option<Circuit> = None;
    let mut header_seen = false;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        last_line = idx + 1;
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        let tokens = tokenize(raw);
        if tokens.is_empty() {
            continue;
        }
        let mut lp = LineParser {
            line: idx + 1,
            tokens,
            diags: &mut diags,
        };
        if !header_seen {
            header_seen = true;
            match parse_header(&mut lp) {
                Some(n) => circuit = Some(Circuit::new(n).expect("qubit count checked")),
                // without a qubit count the gate lines cannot be checked
                None => return Err(diags),
            }
            continue;
        }
        let c = circuit.as_mut().expect("header parsed");
        if let Some((gate, qubits)) = parse_gate(&mut lp, c.n()) {
            if let Err(e) = c.push(gate, &qubits) {
                lp.error(1, e.to_string());
            }
        }
    }
    if !header_seen {
        diags.push(Diagnostic {
            line: last_line.max(1),
            column: 1,
            message: "missing `qubits <n>` header".into(),
        });
    }
    match circuit {
        Some(c) if diags.is_empty() => Ok(c),
        _ => Err(diags),
    }
}

/// Writes a circuit in the file format; parsing the output gives back an
/// identical circuit.
pub fn format_circuit(c: &Circuit) -> String {
    let mut out = format!("qubits {}\n", c.n());
    for op in c.ops() {
        out.push_str(&op.to_string());
        out.push('\n');
    }
    out
}
