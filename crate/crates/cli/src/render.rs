//! Plain-text rendering of matrices and states.

use std::fmt::Write as _;

use qteleport_core::json::format_sig12;
use qteleport_core::{Complex64, ComplexMatrix};

pub fn complex(z: Complex64) -> String {
    let re = format_sig12(z.re);
    let im = format_sig12(z.im.abs());
    match (re.as_str(), im.as_str()) {
        (_, "0") => re,
        ("0", _) => format!("{}{}i", if z.im < 0.0 { "-" } else { "" }, im),
        _ => format!("{re}{}{im}i", if z.im < 0.0 { "-" } else { "+" }),
    }
}

/// Right-aligned grid, one matrix row per line, each line prefixed by `indent`.
pub fn matrix(m: &ComplexMatrix, indent: &str) -> String {
    let cells: Vec<String> = m.entries().iter().map(|&z| complex(z)).collect();
    let width = cells.iter().map(String::len).max().unwrap_or(1);
    let mut out = String::new();
    for r in 0..m.rows() {
        out.push_str(indent);
        out.push('[');
        for c in 0..m.cols() {
            let _ = write!(out, " {:>width$}", cells[r * m.cols() + c]);
        }
        out.push_str(" ]\n");
    }
    out
}

pub fn probabilities(p: &[f64]) -> String {
    p.iter().map(|&x| format_sig12(x)).collect::<Vec<_>>().join(" ")
}
