//! Bell basis and the basis-index bookkeeping of the eight-level system.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, ZERO};
use crate::state::Ket;

/// The four Bell vectors, addressed by index 1..=4:
///
/// * `1`: (|00> + |11>)/√2
/// * `2`: (|01> + |10>)/√2
/// * `3`: (|00> - |11>)/√2
/// * `4`: (|01> - |10>)/√2
#[derive(Debug, Clone, PartialEq)]
pub struct BellBasis {
    vectors: [Ket; 4],
}

pub fn bell_basis() -> BellBasis {
    let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let ket = |amps: [Complex64; 4]| Ket::new(amps.to_vec()).expect("Bell vectors are normalized");
    BellBasis {
        vectors: [
            ket([h, ZERO, ZERO, h]),
            ket([ZERO, h, h, ZERO]),
            ket([h, ZERO, ZERO, -h]),
            ket([ZERO, h, -h, ZERO]),
        ],
    }
}

impl BellBasis {
    /// Bell vector `index` (1-based).
    pub fn vector(&self, index: usize) -> Result<&Ket> {
        check_index(index)?;
        Ok(&self.vectors[index - 1])
    }

    pub fn vectors(&self) -> &[Ket; 4] {
        &self.vectors
    }

    /// `√2 |β^index>` as a column with entries in {0, ±1}.
    pub fn scaled_vector(&self, index: usize) -> Result<ComplexMatrix> {
        check_index(index)?;
        let entries = match index {
            1 => [1.0, 0.0, 0.0, 1.0],
            2 => [0.0, 1.0, 1.0, 0.0],
            3 => [1.0, 0.0, 0.0, -1.0],
            _ => [0.0, 1.0, -1.0, 0.0],
        };
        ComplexMatrix::from_real(4, 1, &entries)
    }

    /// `|β^index><β^index|` as a 4x4 matrix, computed from the integer
    /// vector so that every entry is exactly 0 or ±1/2.
    pub fn projector(&self, index: usize) -> Result<ComplexMatrix> {
        let v = self.scaled_vector(index)?;
        Ok(v.matmul(&v.dagger())?.scale_real(0.5))
    }

    /// Matrix of inner products `<β^i|β^j>`.
    pub fn gram(&self) -> ComplexMatrix {
        let mut entries = Vec::with_capacity(16);
        for a in &self.vectors {
            for b in &self.vectors {
                entries.push(a.inner(b).expect("Bell vectors share dimension 4"));
            }
        }
        ComplexMatrix::new(4, 4, entries).expect("4x4 Gram matrix")
    }
}

pub(crate) fn check_index(index: usize) -> Result<()> {
    if (1..=4).contains(&index) {
        Ok(())
    } else {
        Err(Error::InvalidResourceIndex(index))
    }
}

/// Bits `(a, b, c)` of basis index `n = 4a + 2b + c`.
pub fn index_map(n: usize) -> Result<(u8, u8, u8)> {
    if n > 7 {
        return Err(Error::InvalidBasisIndex(n));
    }
    Ok((((n >> 2) & 1) as u8, ((n >> 1) & 1) as u8, (n & 1) as u8))
}

/// Inverse of [`index_map`].
pub fn index_from_bits(a: u8, b: u8, c: u8) -> Result<usize> {
    if a > 1 || b > 1 || c > 1 {
        return Err(Error::InvalidSelection(format!("bits must be 0 or 1, got ({a}, {b}, {c})")));
    }
    Ok(4 * a as usize + 2 * b as usize + c as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorization::{partial_trace, Factorization};

    #[test]
    fn first_and_last_vectors() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let b = bell_basis();
        let amps: Vec<f64> = b.vector(1).unwrap().amplitudes().iter().map(|z| z.re).collect();
        assert_eq!(amps, vec![h, 0.0, 0.0, h]);
        let amps: Vec<f64> = b.vector(4).unwrap().amplitudes().iter().map(|z| z.re).collect();
        assert_eq!(amps, vec![0.0, h, -h, 0.0]);
        assert!(b.vector(0).is_err());
        assert!(b.vector(5).is_err());
    }

    #[test]
    fn projector_agrees_with_normalized_vector() {
        let b = bell_basis();
        for i in 1..=4 {
            let outer = crate::state::ket_to_density(b.vector(i).unwrap()).into_matrix();
            assert!(b.projector(i).unwrap().approx_eq(&outer, 1e-15).unwrap());
        }
    }

    #[test]
    fn orthonormal() {
        assert!(bell_basis().gram().approx_eq(&ComplexMatrix::identity(4), 1e-12).unwrap());
    }

    #[test]
    fn maximally_entangled() {
        let f = Factorization::qubits(2).unwrap();
        let half = ComplexMatrix::identity(2).scale_real(0.5);
        let b = bell_basis();
        for i in 1..=4 {
            let p = b.projector(i).unwrap();
            for keep in [0, 1] {
                assert!(partial_trace(&p, &f, &[keep]).unwrap().approx_eq(&half, 1e-12).unwrap());
            }
        }
    }

    #[test]
    fn index_mapping() {
        assert_eq!(index_map(3).unwrap(), (0, 1, 1));
        assert_eq!(index_map(0).unwrap(), (0, 0, 0));
        assert_eq!(index_map(7).unwrap(), (1, 1, 1));
        assert!(matches!(index_map(8), Err(Error::InvalidBasisIndex(8))));
        for n in 0..8 {
            let (a, b, c) = index_map(n).unwrap();
            assert_eq!(index_from_bits(a, b, c).unwrap(), n);
        }
        assert!(index_from_bits(2, 0, 0).is_err());
    }
}
