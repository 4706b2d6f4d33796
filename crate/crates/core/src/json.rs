//! JSON encoding of matrices, states and reports.
//!
//! Matrices use `{"rows": n, "cols": m, "entries": [[re, im], ...]}` in
//! row-major order. Density matrices add a leading `"kind": "density"` tag
//! and kets are `{"kind": "ket", "amplitudes": [[re, im], ...]}`.
//!
//! Every floating-point number is printed rounded to 12 significant digits
//! in plain decimal notation; integral values carry no decimal point and
//! magnitudes below `1e-15` print as `0`.

use std::io;

use num_complex::Complex64;
use serde::de::{DeserializeOwned, Error as _};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::state::{validate_density, DensityMatrix, Ket, QubitState};

/// Values with smaller magnitude are printed as zero.
pub const PRINT_ZERO_THRESHOLD: f64 = 1e-15;

/// Formats `x` with at most 12 significant digits.
pub fn format_sig12(x: f64) -> String {
    if !x.is_finite() {
        return "null".into();
    }
    if x.abs() < PRINT_ZERO_THRESHOLD {
        return "0".into();
    }
    let sci = format!("{:.11e}", x.abs());
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    let digits = digits.trim_end_matches('0');
    let digits = if digits.is_empty() { "0" } else { digits };
    let sign = if x < 0.0 { "-" } else { "" };

    let body = if (-7..15).contains(&exp) {
        if exp >= 0 {
            let int_len = exp as usize + 1;
            if digits.len() <= int_len {
                format!("{digits}{}", "0".repeat(int_len - digits.len()))
            } else {
                format!("{}.{}", &digits[..int_len], &digits[int_len..])
            }
        } else {
            format!("0.{}{digits}", "0".repeat((-exp - 1) as usize))
        }
    } else if digits.len() == 1 {
        format!("{digits}e{exp}")
    } else {
        format!("{}.{}e{exp}", &digits[..1], &digits[1..])
    };
    format!("{sign}{body}")
}

/// Compact `serde_json` formatter printing floats through [`format_sig12`].
#[derive(Debug, Default, Clone, Copy)]
pub struct Sig12Formatter;

impl serde_json::ser::Formatter for Sig12Formatter {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        writer.write_all(format_sig12(value).as_bytes())
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, f64::from(value))
    }
}

pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, Sig12Formatter);
    value.serialize(&mut ser).map_err(|e| Error::Json(e.to_string()))?;
    String::from_utf8(out).map_err(|e| Error::Json(e.to_string()))
}

pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))
}

fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

fn unpair(p: [f64; 2]) -> Complex64 {
    Complex64::new(p[0], p[1])
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixDoc {
    rows: usize,
    cols: usize,
    entries: Vec<[f64; 2]>,
}

impl MatrixDoc {
    fn from_matrix(m: &ComplexMatrix) -> Self {
        Self { rows: m.rows(), cols: m.cols(), entries: m.entries().iter().copied().map(pair).collect() }
    }

    fn into_matrix(self) -> Result<ComplexMatrix> {
        ComplexMatrix::new(self.rows, self.cols, self.entries.into_iter().map(unpair).collect())
    }
}

impl Serialize for ComplexMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixDoc::from_matrix(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for ComplexMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        MatrixDoc::deserialize(d)?.into_matrix().map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DensityDoc {
    kind: String,
    rows: usize,
    cols: usize,
    entries: Vec<[f64; 2]>,
}

impl Serialize for DensityMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let m = MatrixDoc::from_matrix(self.matrix());
        DensityDoc { kind: "density".into(), rows: m.rows, cols: m.cols, entries: m.entries }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for DensityMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = DensityDoc::deserialize(d)?;
        if doc.kind != "density" {
            return Err(D::Error::custom(format!("expected kind \"density\", got {:?}", doc.kind)));
        }
        let m = MatrixDoc { rows: doc.rows, cols: doc.cols, entries: doc.entries }
            .into_matrix()
            .map_err(D::Error::custom)?;
        validate_density(&m).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct KetDoc {
    kind: String,
    amplitudes: Vec<[f64; 2]>,
}

impl Serialize for Ket {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        KetDoc { kind: "ket".into(), amplitudes: self.amplitudes().iter().copied().map(pair).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Ket {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = KetDoc::deserialize(d)?;
        if doc.kind != "ket" {
            return Err(D::Error::custom(format!("expected kind \"ket\", got {:?}", doc.kind)));
        }
        Ket::new(doc.amplitudes.into_iter().map(unpair).collect()).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct QubitDoc {
    alpha: [f64; 2],
    beta: [f64; 2],
}

impl Serialize for QubitState {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QubitDoc { alpha: pair(self.alpha()), beta: pair(self.beta()) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QubitState {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = QubitDoc::deserialize(d)?;
        QubitState::new(unpair(doc.alpha), unpair(doc.beta)).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::pauli;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(format_sig12(1.0), "1");
        assert_eq!(format_sig12(-1.0), "-1");
        assert_eq!(format_sig12(0.0), "0");
        assert_eq!(format_sig12(-0.0), "0");
        assert_eq!(format_sig12(0.36), "0.36");
        assert_eq!(format_sig12(std::f64::consts::FRAC_1_SQRT_2), "0.707106781187");
        assert_eq!(format_sig12(-0.48), "-0.48");
        assert_eq!(format_sig12(123.456), "123.456");
        assert_eq!(format_sig12(1e14), "100000000000000");
        assert_eq!(format_sig12(1e20), "1e20");
        assert_eq!(format_sig12(2.5e-7), "0.00000025");
        assert_eq!(format_sig12(2.5e-9), "2.5e-9");
        assert_eq!(format_sig12(1.25e-12), "1.25e-12");
        assert_eq!(format_sig12(3e-17), "0");
        assert_eq!(format_sig12(0.999999999999999), "1");
        assert_eq!(format_sig12(1.0 / 3.0), "0.333333333333");
    }

    #[test]
    fn printed_values_parse_back_close() {
        for &x in &[0.1, 1.0 / 3.0, -2.0 / 7.0, 12345.678901234, 6.02e23, 1e-13] {
            let y: f64 = format_sig12(x).parse().unwrap();
            assert!(((x - y) / x).abs() < 1e-11, "{x} -> {y}");
        }
    }

    #[test]
    fn matrix_schema() {
        let json = to_json(&pauli::y()).unwrap();
        assert_eq!(json, r#"{"rows":2,"cols":2,"entries":[[0,0],[0,-1],[0,1],[0,0]]}"#);
        let back: ComplexMatrix = from_json(&json).unwrap();
        assert_eq!(back, pauli::y());
    }

    #[test]
    fn density_and_ket_schema() {
        let rho = QubitState::plus().density();
        let json = to_json(&rho).unwrap();
        assert!(json.starts_with(r#"{"kind":"density","rows":2"#));
        let back: DensityMatrix = from_json(&json).unwrap();
        assert!(back.matrix().approx_eq(rho.matrix(), 1e-12).unwrap());

        let ket = QubitState::plus_i().to_ket();
        let json = to_json(&ket).unwrap();
        assert_eq!(json, r#"{"kind":"ket","amplitudes":[[0.707106781187,0],[0,0.707106781187]]}"#);
        let back: Ket = from_json(&json).unwrap();
        assert_eq!(back.dim(), 2);
    }

    #[test]
    fn rejects_malformed_documents() {
        assert!(from_json::<ComplexMatrix>(r#"{"rows":2,"cols":2,"entries":[[1,0]]}"#).is_err());
        assert!(from_json::<DensityMatrix>(r#"{"kind":"ket","rows":1,"cols":1,"entries":[[1,0]]}"#).is_err());
        assert!(from_json::<DensityMatrix>(r#"{"kind":"density","rows":1,"cols":1,"entries":[[2,0]]}"#).is_err());
        assert!(from_json::<Ket>(r#"{"kind":"ket","amplitudes":[[1,0],[1,0]]}"#).is_err());
    }
}
