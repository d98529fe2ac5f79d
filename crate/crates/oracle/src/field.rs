//! GF(2^m) in a polynomial basis with log/antilog tables.

use crate::error::{OracleError, Result};

/// The field GF(2^m) = GF(2)[x]/(p), where `p` is primitive and `α = x`.
/// Elements are bit-encoded polynomials of degree below `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldGF2m {
    m: u32,
    poly: u32,
    antilog: Vec<u32>,
    log: Vec<u32>,
}

fn check_degree(m: u32) -> Result<()> {
    if (2..=16).contains(&m) {
        Ok(())
    } else {
        Err(OracleError::DegreeOutOfRange(m))
    }
}

/// Powers `x^0, x^1, ...` modulo `poly` until they return to 1, or `None` if
/// `x` does not have order exactly `2^m - 1`.
fn powers_of_x(m: u32, poly: u32) -> Option<Vec<u32>> {
    let n = (1usize << m) - 1;
    let mut table = Vec::with_capacity(n);
    let mut x = 1u32;
    for _ in 0..n {
        if x == 1 && !table.is_empty() {
            return None;
        }
        table.push(x);
        x <<= 1;
        if x >> m & 1 == 1 {
            x ^= poly;
        }
    }
    (x == 1).then_some(table)
}

impl FieldGF2m {
    /// Field built on the given degree-`m` polynomial (bit `i` is the
    /// coefficient of `x^i`), which must be primitive.
    pub fn with_polynomial(m: u32, poly: u32) -> Result<Self> {
        check_degree(m)?;
        if poly >> m != 1 {
            return Err(OracleError::NotPrimitive { m, poly });
        }
        // x has order 2^m - 1 exactly when poly is primitive
        let antilog = powers_of_x(m, poly).ok_or(OracleError::NotPrimitive { m, poly })?;
        let mut log = vec![0u32; 1 << m];
        for (i, &v) in antilog.iter().enumerate() {
            log[v as usize] = i as u32;
        }
        Ok(FieldGF2m {
            m,
            poly,
            antilog,
            log,
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Order of the multiplicative group, `2^m - 1`.
    pub fn n(&self) -> usize {
        self.antilog.len()
    }

    pub fn polynomial(&self) -> u32 {
        self.poly
    }

    /// `α^i`.
    pub fn alpha_pow(&self, i: usize) -> u32 {
        self.antilog[i % self.n()]
    }

    /// Discrete logarithm of a nonzero element.
    pub fn log(&self, x: u32) -> Option<usize> {
        (x != 0 && (x as usize) < self.log.len()).then(|| self.log[x as usize] as usize)
    }

    pub fn mul(&self, x: u32, y: u32) -> u32 {
        if x == 0 || y == 0 {
            return 0;
        }
        self.alpha_pow(self.log[x as usize] as usize + self.log[y as usize] as usize)
    }

    /// `x^s`, with `0^0 = 1`.
    pub fn pow(&self, x: u32, s: usize) -> u32 {
        if s == 0 {
            return 1;
        }
        if x == 0 {
            return 0;
        }
        self.alpha_pow(self.log[x as usize] as usize * s)
    }

    /// Field element at a column position: column 0 is the element 0, column
    /// `1 + i` is `α^i`.
    pub fn element_at(&self, column: usize) -> u32 {
        if column == 0 {
            0
        } else {
            self.alpha_pow(column - 1)
        }
    }
}

/// Primitive polynomials of degree `m`, ascending by their bit encoding.
pub fn primitive_polynomials(m: u32) -> Result<Vec<u32>> {
    check_degree(m)?;
    Ok((1u32 << m..1u32 << (m + 1))
        .filter(|&p| p & 1 == 1 && powers_of_x(m, p).is_some())
        .collect())
}

/// GF(2^m) on the smallest primitive polynomial of degree `m`.
pub fn build_field(m: u32) -> Result<FieldGF2m> {
    check_degree(m)?;
    let poly = (1u32 << m | 1..1u32 << (m + 1))
        .step_by(2)
        .find(|&p| powers_of_x(m, p).is_some())
        .expect("primitive polynomials exist in every degree");
    FieldGF2m::with_polynomial(m, poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_fields() {
        assert_eq!(build_field(2).unwrap().polynomial(), 0b111);
        assert_eq!(build_field(4).unwrap().polynomial(), 0b10011);
        assert_eq!(build_field(6).unwrap().polynomial(), 0b1000011);
        assert!(build_field(1).is_err());
        assert!(build_field(17).is_err());
    }

    #[test]
    fn rejects_non_primitive() {
        // x^4 + x^3 + x^2 + x + 1 is irreducible but x has order 5
        assert!(FieldGF2m::with_polynomial(4, 0b11111).is_err());
        assert!(FieldGF2m::with_polynomial(4, 0b10101).is_err());
        assert!(FieldGF2m::with_polynomial(4, 0b1011).is_err());
    }

    #[test]
    fn table_arithmetic() {
        let f = build_field(5).unwrap();
        for i in 0..f.n() {
            for j in 0..f.n() {
                assert_eq!(f.mul(f.alpha_pow(i), f.alpha_pow(j)), f.alpha_pow(i + j));
            }
        }
        assert_eq!(f.pow(0, 0), 1);
        assert_eq!(f.pow(0, 3), 0);
        assert_eq!(f.log(f.alpha_pow(7)), Some(7));
        assert_eq!(f.log(0), None);
    }

    #[test]
    fn primitive_counts() {
        // φ(2^m - 1) / m
        assert_eq!(primitive_polynomials(4).unwrap().len(), 2);
        assert_eq!(primitive_polynomials(5).unwrap().len(), 6);
        assert_eq!(primitive_polynomials(6).unwrap().len(), 6);
    }
}
