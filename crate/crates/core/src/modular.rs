//! Modular arithmetic over odd moduli: multiplicative order of 2, 2^γ-cyclotomic
//! cosets and the group isomorphisms `Z_n -> Z_r1 x Z_r2` for coprime odd
//! factors `n = r1 * r2`.
//!
//! Every modulus handled here is odd and strictly below 2^32, so products of two
//! residues always fit in a `u64`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exclusive upper bound on every modulus accepted by this crate.
pub const MODULUS_LIMIT: u64 = 1 << 32;

pub(crate) fn check_modulus(r: u64) -> Result<()> {
    if r == 0 || r >= MODULUS_LIMIT {
        return Err(Error::ModulusOutOfRange(r));
    }
    if r % 2 == 0 {
        return Err(Error::EvenModulus(r));
    }
    Ok(())
}

pub(crate) fn check_residue(residue: u64, modulus: u64) -> Result<()> {
    if residue >= modulus {
        return Err(Error::ResidueOutOfRange { residue, modulus });
    }
    Ok(())
}

/// `2^exp mod r` by square-and-multiply.
pub fn pow2_mod(exp: u64, r: u64) -> u64 {
    if r == 1 {
        return 0;
    }
    let mut result = 1u64;
    let mut base = 2 % r;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % r;
        }
        base = base * base % r;
        e >>= 1;
    }
    result
}

/// The multiplicative order of 2 modulo an odd `r > 1`.
pub fn ord2_mod(r: u64) -> Result<u32> {
    check_modulus(r)?;
    if r == 1 {
        return Err(Error::OrderUndefined(r));
    }
    let mut x = 2 % r;
    let mut order = 1u32;
    while x != 1 {
        x = x * 2 % r;
        order += 1;
    }
    Ok(order)
}

/// Number of elements in the 2^γ-cyclotomic coset of `a` modulo `r`, without
/// materializing it.
pub fn coset_len(a: u64, r: u64, gamma: u64) -> u64 {
    let mult = pow2_mod(gamma, r);
    let a = a % r;
    let mut x = a * mult % r;
    let mut len = 1;
    while x != a {
        x = x * mult % r;
        len += 1;
    }
    len
}

/// A 2^γ-cyclotomic coset modulo an odd `r`: the orbit of a residue under
/// multiplication by 2^γ. Elements are kept sorted; the leader is the minimum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coset {
    modulus: u64,
    gamma: u64,
    elements: Vec<u64>,
}

impl Coset {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn gamma(&self) -> u64 {
        self.gamma
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn leader(&self) -> u64 {
        self.elements[0]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

/// The 2^γ-cyclotomic coset `{a * 2^(γi) mod r : i >= 0}`.
pub fn cyclotomic_coset(a: u64, r: u64, gamma: u64) -> Result<Coset> {
    check_modulus(r)?;
    check_residue(a, r)?;
    if gamma == 0 {
        return Err(Error::ZeroGamma);
    }
    let mult = pow2_mod(gamma, r);
    let mut elements = vec![a];
    let mut x = a * mult % r;
    while x != a {
        elements.push(x);
        x = x * mult % r;
    }
    elements.sort_unstable();
    Ok(Coset {
        modulus: r,
        gamma,
        elements,
    })
}

/// Splits `Z_r` into its 2^γ-cyclotomic cosets, ordered by leader.
pub fn coset_partition(r: u64, gamma: u64) -> Result<Vec<Coset>> {
    check_modulus(r)?;
    if gamma == 0 {
        return Err(Error::ZeroGamma);
    }
    let mut seen = vec![false; r as usize];
    let mut cosets = Vec::new();
    for a in 0..r {
        if seen[a as usize] {
            continue;
        }
        let coset = cyclotomic_coset(a, r, gamma)?;
        for &x in coset.elements() {
            seen[x as usize] = true;
        }
        cosets.push(coset);
    }
    Ok(cosets)
}

/// Inverse of `a` modulo `r`, if it exists.
pub fn mod_inverse(a: u64, r: u64) -> Option<u64> {
    if r == 1 {
        return Some(0);
    }
    let egcd = (a as i64).extended_gcd(&(r as i64));
    if egcd.gcd != 1 {
        return None;
    }
    Some(egcd.x.rem_euclid(r as i64) as u64)
}

/// Units of `Z_r` in increasing order.
pub fn units(r: u64) -> Vec<u64> {
    (1..r).filter(|d| d.gcd(&r) == 1).collect()
}

/// Euler's totient.
pub fn totient(r: u64) -> u64 {
    if r == 1 {
        return 1;
    }
    units(r).len() as u64
}

/// A group isomorphism `T: Z_n -> Z_r1 x Z_r2` determined by `T(1) = (δ1, δ2)`.
///
/// The inverse is evaluated through the CRT idempotents `η2·r2` and `η1·r1`
/// obtained from the Bézout identity `η1·r1 + η2·r2 = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupIso {
    n: u64,
    r1: u64,
    r2: u64,
    delta1: u64,
    delta2: u64,
    delta1_inv: u64,
    delta2_inv: u64,
    idem1: u64,
    idem2: u64,
}

impl GroupIso {
    /// Builds the isomorphism with `T(1) = (delta1, delta2)`.
    pub fn new(r1: u64, r2: u64, delta1: u64, delta2: u64) -> Result<Self> {
        check_modulus(r1)?;
        check_modulus(r2)?;
        let n = r1
            .checked_mul(r2)
            .filter(|&n| n < MODULUS_LIMIT)
            .ok_or(Error::ModulusOutOfRange(r1.saturating_mul(r2)))?;
        if r1.gcd(&r2) != 1 {
            return Err(Error::NotCoprime(r1, r2));
        }
        check_residue(delta1, r1)?;
        check_residue(delta2, r2)?;
        let delta1_inv = mod_inverse(delta1, r1).ok_or(Error::NotAUnit {
            delta: delta1,
            modulus: r1,
        })?;
        let delta2_inv = mod_inverse(delta2, r2).ok_or(Error::NotAUnit {
            delta: delta2,
            modulus: r2,
        })?;
        let egcd = (r1 as i64).extended_gcd(&(r2 as i64));
        let (eta1, eta2) = (egcd.x as i128, egcd.y as i128);
        let idem1 = (eta2 * r2 as i128).rem_euclid(n as i128) as u64;
        let idem2 = (eta1 * r1 as i128).rem_euclid(n as i128) as u64;
        Ok(GroupIso {
            n,
            r1,
            r2,
            delta1,
            delta2,
            delta1_inv,
            delta2_inv,
            idem1,
            idem2,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn r1(&self) -> u64 {
        self.r1
    }

    pub fn r2(&self) -> u64 {
        self.r2
    }

    /// `T(1)`.
    pub fn delta(&self) -> (u64, u64) {
        (self.delta1, self.delta2)
    }

    pub fn is_crt(&self) -> bool {
        self.delta1 == 1 % self.r1 && self.delta2 == 1 % self.r2
    }

    /// First component `T1(e)`.
    pub fn first(&self, e: u64) -> u64 {
        (e % self.r1) * self.delta1 % self.r1
    }

    /// Second component `T2(e)`.
    pub fn second(&self, e: u64) -> u64 {
        (e % self.r2) * self.delta2 % self.r2
    }

    pub fn apply(&self, e: u64) -> (u64, u64) {
        (self.first(e), self.second(e))
    }

    /// `T^{-1}(x1, x2)`.
    pub fn invert(&self, point: (u64, u64)) -> u64 {
        let y1 = (point.0 % self.r1) * self.delta1_inv % self.r1;
        let y2 = (point.1 % self.r2) * self.delta2_inv % self.r2;
        let n = self.n as u128;
        ((y1 as u128 * self.idem1 as u128 + y2 as u128 * self.idem2 as u128) % n) as u64
    }
}

/// The reduction isomorphism `e -> (e mod r1, e mod r2)`.
pub fn crt_iso(r1: u64, r2: u64) -> Result<GroupIso> {
    check_odd_coprime(r1, r2)?;
    GroupIso::new(r1, r2, 1, 1)
}

/// All `φ(r1)·φ(r2)` isomorphisms, ordered lexicographically by `T(1)`.
pub fn enumerate_isos(r1: u64, r2: u64) -> Result<Vec<GroupIso>> {
    check_odd_coprime(r1, r2)?;
    let u1 = units(r1);
    let u2 = units(r2);
    let mut isos = Vec::with_capacity(u1.len() * u2.len());
    for &d1 in &u1 {
        for &d2 in &u2 {
            isos.push(GroupIso::new(r1, r2, d1, d2)?);
        }
    }
    Ok(isos)
}

fn check_odd_coprime(r1: u64, r2: u64) -> Result<()> {
    check_modulus(r1)?;
    check_modulus(r2)?;
    if r1 == 1 {
        return Err(Error::OrderUndefined(r1));
    }
    if r2 == 1 {
        return Err(Error::OrderUndefined(r2));
    }
    if r1.gcd(&r2) != 1 {
        return Err(Error::NotCoprime(r1, r2));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_of_two() {
        assert_eq!(ord2_mod(3).unwrap(), 2);
        assert_eq!(ord2_mod(7).unwrap(), 3);
        assert_eq!(ord2_mod(1023).unwrap(), 10);
        assert_eq!(ord2_mod(23).unwrap(), 11);
        assert_eq!(ord2_mod(11).unwrap(), 10);
    }

    #[test]
    fn order_rejects_bad_moduli() {
        assert_eq!(ord2_mod(1), Err(Error::OrderUndefined(1)));
        assert_eq!(ord2_mod(10), Err(Error::EvenModulus(10)));
        assert_eq!(ord2_mod(0), Err(Error::ModulusOutOfRange(0)));
        assert!(ord2_mod(1 << 33 | 1).is_err());
    }

    #[test]
    fn cosets() {
        let c = cyclotomic_coset(1, 21, 1).unwrap();
        assert_eq!(c.elements(), &[1, 2, 4, 8, 11, 16]);
        assert_eq!(c.leader(), 1);
        assert_eq!(cyclotomic_coset(0, 9, 2).unwrap().elements(), &[0]);
        assert_eq!(cyclotomic_coset(5, 15, 1).unwrap().elements(), &[5, 10]);
        // multiplier 4 modulo 7 generates {1, 4, 2}
        assert_eq!(cyclotomic_coset(1, 7, 2).unwrap().elements(), &[1, 2, 4]);
        assert_eq!(coset_len(3, 63, 1), 6);
        assert_eq!(coset_len(9, 63, 1), 3);
    }

    #[test]
    fn coset_rejects_unreduced_residue() {
        assert!(matches!(
            cyclotomic_coset(7, 7, 1),
            Err(Error::ResidueOutOfRange { .. })
        ));
        assert_eq!(cyclotomic_coset(1, 7, 0), Err(Error::ZeroGamma));
    }

    #[test]
    fn partitions() {
        let leaders = |r| {
            coset_partition(r, 1)
                .unwrap()
                .into_iter()
                .map(|c| c.elements().to_vec())
                .collect::<Vec<_>>()
        };
        assert_eq!(leaders(7), vec![vec![0], vec![1, 2, 4], vec![3, 5, 6]]);
        assert_eq!(leaders(3), vec![vec![0], vec![1, 2]]);
        assert_eq!(leaders(1), vec![vec![0]]);
    }

    #[test]
    fn crt_examples() {
        let t = crt_iso(3, 5).unwrap();
        assert_eq!(t.apply(7), (1, 2));
        assert_eq!(t.invert((1, 1)), 1);
        assert_eq!(crt_iso(3, 7).unwrap().apply(1), (1, 1));
        assert!(t.is_crt());
    }

    #[test]
    fn crt_rejects_bad_factors() {
        assert_eq!(crt_iso(3, 9).unwrap_err(), Error::NotCoprime(3, 9));
        assert_eq!(crt_iso(4, 5).unwrap_err(), Error::EvenModulus(4));
        assert!(GroupIso::new(3, 5, 0, 1).is_err());
        assert!(GroupIso::new(7, 9, 1, 3).is_err());
    }

    #[test]
    fn isomorphism_counts() {
        let isos = enumerate_isos(3, 5).unwrap();
        let deltas: Vec<_> = isos.iter().map(|t| t.delta()).collect();
        assert_eq!(
            deltas,
            vec![
                (1, 1),
                (1, 2),
                (1, 3),
                (1, 4),
                (2, 1),
                (2, 2),
                (2, 3),
                (2, 4)
            ]
        );
        assert_eq!(enumerate_isos(3, 7).unwrap().len(), 12);
        assert_eq!(enumerate_isos(7, 9).unwrap().len(), 36);
    }

    #[test]
    fn inverses_and_totient() {
        assert_eq!(mod_inverse(2, 5), Some(3));
        assert_eq!(mod_inverse(3, 9), None);
        assert_eq!(totient(9), 6);
        assert_eq!(totient(85), 64);
    }

    #[test]
    fn iso_roundtrip_exhaustive_small() {
        for t in enumerate_isos(7, 9).unwrap() {
            let mut seen = [false; 63];
            for e in 0..63 {
                let p = t.apply(e);
                assert_eq!(t.invert(p), e);
                seen[(p.0 * 9 + p.1) as usize] = true;
            }
            assert!(seen.iter().all(|&s| s));
        }
    }
}
