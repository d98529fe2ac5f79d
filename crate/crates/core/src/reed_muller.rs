//! Reed-Muller codes `R(ρ, m)` as affine-invariant codes of length `2^m`.
//!
//! Positions are the field elements: `ext` for 0 and the exponent `i` for
//! `α^i`. The punctured code `R*(ρ, m)` is cyclic of length `n = 2^m - 1` with
//! defining set `{0 < i < n : wt(i) < m - ρ}`, so Γ of the punctured dual code,
//! pulled back through an isomorphism `Z_n -> Z_r1 x Z_r2`, together with
//! `ext` is an information set of `R(ρ, m)`.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::abelian::GammaRegion;
use crate::cyclic::{
    gamma_from_cyclic, pullback, suitable_representatives_preferring, u_classes_preferring,
    CyclicDefiningSet, SuitableReps, UClass,
};
use crate::error::{Error, Result};
use crate::modular::{coset_len, ord2_mod, GroupIso};

/// Largest supported `m`; keeps `2^m - 1` below the modulus limit.
pub const MAX_M: u32 = 31;

/// Number of ones in the binary expansion of `k`.
pub fn wt(k: u64) -> u32 {
    k.count_ones()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `R(ρ, m)` with `1 <= ρ <= m - 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RMCode {
    m: u32,
    rho: u32,
}

impl RMCode {
    pub fn new(m: u32, rho: u32) -> Result<Self> {
        if !(3..=MAX_M).contains(&m) {
            return Err(Error::InvalidCode(format!(
                "m = {m} must lie in 3..={MAX_M}"
            )));
        }
        if rho < 1 || rho + 2 > m {
            return Err(Error::InvalidCode(format!(
                "order {rho} must satisfy 1 <= rho <= m - 2 = {}",
                m - 2
            )));
        }
        Ok(RMCode { m, rho })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn rho(&self) -> u32 {
        self.rho
    }

    /// Length of the punctured code, `2^m - 1`.
    pub fn n(&self) -> u64 {
        (1u64 << self.m) - 1
    }

    pub fn length(&self) -> u64 {
        1u64 << self.m
    }

    pub fn dimension(&self) -> u64 {
        dimension(self.m, self.rho)
    }

    /// `R(m - ρ - 1, m)`.
    pub fn dual(&self) -> RMCode {
        RMCode {
            m: self.m,
            rho: self.m - self.rho - 1,
        }
    }
}

/// `Σ_{K <= ρ} binomial(m, K)`.
pub fn dimension(m: u32, rho: u32) -> u64 {
    (0..=rho as u64).map(|k| binomial(m as u64, k)).sum()
}

/// A factorization `2^m - 1 = r1·r2` into coprime factors greater than 1,
/// with `a = ord_r1(2)` and `b = m / a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RMFactorization {
    m: u32,
    r1: u64,
    r2: u64,
    a: u32,
    b: u32,
}

impl RMFactorization {
    pub fn new(m: u32, r1: u64) -> Result<Self> {
        let invalid = |reason: String| Err(Error::InvalidFactorization { m, reason });
        if !(2..=MAX_M).contains(&m) {
            return invalid(format!("m must lie in 2..={MAX_M}"));
        }
        let n = (1u64 << m) - 1;
        if r1 <= 1 || r1 >= n || n % r1 != 0 {
            return invalid(format!("{r1} is not a proper divisor of {n}"));
        }
        let r2 = n / r1;
        if r1.gcd(&r2) != 1 {
            return invalid(format!("{r1} and {r2} are not coprime"));
        }
        let a = ord2_mod(r1)?;
        Ok(RMFactorization {
            m,
            r1,
            r2,
            a,
            b: m / a,
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.r1 * self.r2
    }

    pub fn r1(&self) -> u64 {
        self.r1
    }

    pub fn r2(&self) -> u64 {
        self.r2
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    /// Whether `r1 = 2^a - 1`, the hypothesis of the second-order closed form.
    pub fn is_mersenne(&self) -> bool {
        self.r1 == (1u64 << self.a) - 1
    }

    fn require_mersenne(&self) -> Result<()> {
        if self.is_mersenne() {
            Ok(())
        } else {
            Err(Error::InvalidFactorization {
                m: self.m,
                reason: format!("r1 = {} is not 2^a - 1 for a = {}", self.r1, self.a),
            })
        }
    }
}

/// Factorizations `2^m - 1 = r1·r2` with coprime `1 < r1 < r2`, by increasing
/// `r1`. For `ρ = 2` only those with `r1 = 2^a - 1` are kept.
pub fn factorizations(m: u32, rho: u32) -> Vec<RMFactorization> {
    if !(2..=MAX_M).contains(&m) {
        return Vec::new();
    }
    let n = (1u64 << m) - 1;
    (2..)
        .take_while(|r1| r1 * r1 < n)
        .filter(|r1| n % r1 == 0)
        .filter_map(|r1| RMFactorization::new(m, r1).ok())
        .filter(|f| rho != 2 || f.is_mersenne())
        .collect()
}

/// `Ω(K) = {0 < j < 2^m - 1 : wt(j) = K}`, ascending.
pub fn omega(k: u32, m: u32) -> Vec<u64> {
    let n = (1u64 << m) - 1;
    (1..n).filter(|&j| wt(j) == k).collect()
}

/// Defining sets of `R(ρ, m)`: the full set `{0 <= i < n : wt(i) < m - ρ}` and
/// the punctured cyclic defining set (the same without 0).
pub fn rm_defining_set(code: &RMCode) -> Result<(Vec<u64>, CyclicDefiningSet)> {
    let n = code.n();
    let bound = code.m() - code.rho();
    let full: Vec<u64> = (0..n).filter(|&i| wt(i) < bound).collect();
    let punctured = CyclicDefiningSet::from_elements(n, full.iter().copied().filter(|&i| i != 0))?;
    Ok((full, punctured))
}

fn rotate(e: u64, m: u32) -> u64 {
    let n = (1u64 << m) - 1;
    e * 2 % n
}

/// Exponents `t_1 < ... < t_{K-1}` of `x = 1 + 2^{t_1} + ...`, or `None` if
/// `x` is even.
fn tail_exponents(x: u64) -> Option<Vec<u32>> {
    if x & 1 == 0 {
        return None;
    }
    Some((1..64).filter(|t| x >> t & 1 == 1).collect())
}

/// The element `1 + 2^{t_1} + ... + 2^{t_{K-1}}` of `C_n(e)` with
/// `t_i <= ⌊i·m/K⌋` for every `i`; the smallest one when several qualify.
pub fn normalize_weight_k(e: u64, m: u32, k: u32) -> Result<u64> {
    if !(2..=MAX_M).contains(&m) || k == 0 || k >= m {
        return Err(Error::InvalidCode(format!("weight {k} is not in 1..{m}")));
    }
    let n = (1u64 << m) - 1;
    if e >= n || wt(e) != k {
        return Err(Error::WrongWeight {
            value: e,
            weight: k,
        });
    }
    let mut best: Option<u64> = None;
    let mut x = e;
    for _ in 0..m {
        if let Some(ts) = tail_exponents(x) {
            let ok = ts
                .iter()
                .enumerate()
                .all(|(i, &t)| t as u64 <= (i as u64 + 1) * m as u64 / k as u64);
            if ok && !best.is_some_and(|b| b <= x) {
                best = Some(x);
            }
        }
        x = rotate(x, m);
    }
    best.ok_or_else(|| Error::InvalidCode(format!("{e} has no normal form of weight {k}")))
}

/// `ε(e) = min{t2 - t1, m - t2 + t1}` for `e = 2^{t1} + 2^{t2}`, `t1 < t2`.
pub fn epsilon(e: u64, m: u32) -> Result<u32> {
    if !(2..=MAX_M).contains(&m) || e >= (1u64 << m) - 1 || wt(e) != 2 {
        return Err(Error::WrongWeight {
            value: e,
            weight: 2,
        });
    }
    let t1 = e.trailing_zeros();
    let t2 = 63 - e.leading_zeros();
    Ok((t2 - t1).min(m - t2 + t1))
}

/// `ε⁻¹(s) = 1 + 2^s`, the normal form of the weight-2 coset with `ε = s`.
pub fn epsilon_inverse(s: u32) -> u64 {
    1 + (1u64 << s)
}

/// Closed-form `(|C_n(e)|, |C_r1(e)|)` for `e` of 2-weight 2 under a
/// factorization with `r1 = 2^a - 1`.
pub fn coset_sizes_wt2(e: u64, fact: &RMFactorization) -> Result<(u64, u64)> {
    fact.require_mersenne()?;
    let (m, a) = (fact.m(), fact.a());
    let eps = epsilon(e, m)?;
    let size_n = if 2 * eps == m { m / 2 } else { m };
    let size_r1 = if a % 2 == 0 && eps % a == a / 2 {
        a / 2
    } else {
        a
    };
    Ok((size_n as u64, size_r1 as u64))
}

/// Γ for `R*(m - 2, m)`: the rectangle `0 <= i1 < a, 0 <= i2 < m / a`.
/// Only needs `r1·r2 = 2^m - 1` with coprime factors.
pub fn gamma_rm1(fact: &RMFactorization) -> Result<GammaRegion> {
    let (a, m) = (fact.a() as u64, fact.m() as u64);
    if m % a != 0 {
        return Err(Error::InvalidFactorization {
            m: fact.m(),
            reason: format!("a = {a} does not divide m"),
        });
    }
    GammaRegion::new(fact.r1(), fact.r2(), vec![m / a], vec![a])
}

/// Γ for `R*(m - 3, m)`:
/// `f = [b², b(b+1)/2]`, `g = [a(a-1)/2, a(a+1)/2]`. Requires `r1 = 2^a - 1`.
pub fn gamma_rm2(fact: &RMFactorization) -> Result<GammaRegion> {
    fact.require_mersenne()?;
    let (a, b) = (fact.a() as u64, fact.b() as u64);
    GammaRegion::new(
        fact.r1(),
        fact.r2(),
        vec![b * b, b * (b + 1) / 2],
        vec![a * (a - 1) / 2, a * (a + 1) / 2],
    )
}

/// A coordinate of a Reed-Muller codeword.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Position {
    /// The coordinate of the field element 0.
    Ext,
    /// The coordinate of `α^i`.
    Exp(u64),
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Position::Ext => f.write_str("ext"),
            Position::Exp(i) => write!(f, "{i}"),
        }
    }
}

impl Serialize for Position {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Position::Ext => serializer.serialize_str("ext"),
            Position::Exp(i) => serializer.serialize_u64(*i),
        }
    }
}

impl<'de> Deserialize<'de> for Position {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Exp(u64),
            Tag(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Exp(i) => Ok(Position::Exp(i)),
            Raw::Tag(s) if s == "ext" => Ok(Position::Ext),
            Raw::Tag(s) => Err(serde::de::Error::custom(format!("unknown position {s:?}"))),
        }
    }
}

/// All `2^m` positions in column order `[ext, 0, 1, ..., n-1]`.
pub fn all_positions(m: u32) -> Vec<Position> {
    let n = (1u64 << m) - 1;
    std::iter::once(Position::Ext)
        .chain((0..n).map(Position::Exp))
        .collect()
}

/// An information set of `R(ρ, m)` and its complement. The complement is a
/// set of check positions for `R(ρ, m)`, i.e. an information set of the dual
/// code `R(m - ρ - 1, m)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RMInfoSet {
    pub m: u32,
    pub rho: u32,
    pub r1: u64,
    pub r2: u64,
    pub a: u32,
    pub b: u32,
    pub iso: [u64; 2],
    pub info_set: Vec<Position>,
    pub check_set: Vec<Position>,
}

impl RMInfoSet {
    fn assemble(code: &RMCode, fact: &RMFactorization, t: &GroupIso, exps: Vec<u64>) -> Self {
        let info_set: Vec<Position> = std::iter::once(Position::Ext)
            .chain(exps.iter().map(|&i| Position::Exp(i)))
            .collect();
        let check_set = {
            let mut mask = vec![false; code.n() as usize];
            for &i in &exps {
                mask[i as usize] = true;
            }
            (0..code.n())
                .filter(|&i| !mask[i as usize])
                .map(Position::Exp)
                .collect()
        };
        let (d1, d2) = t.delta();
        RMInfoSet {
            m: code.m(),
            rho: code.rho(),
            r1: fact.r1(),
            r2: fact.r2(),
            a: fact.a(),
            b: fact.b(),
            iso: [d1, d2],
            info_set,
            check_set,
        }
    }

    /// Exponents of the information set (without `ext`).
    pub fn exponents(&self) -> Vec<u64> {
        self.info_set
            .iter()
            .filter_map(|p| match p {
                Position::Exp(i) => Some(*i),
                Position::Ext => None,
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("information sets always serialize")
    }
}

fn check_compatible(code: &RMCode, fact: &RMFactorization, t: &GroupIso) -> Result<()> {
    if fact.m() != code.m() {
        return Err(Error::InvalidFactorization {
            m: code.m(),
            reason: format!("factorization belongs to m = {}", fact.m()),
        });
    }
    if t.r1() != fact.r1() {
        return Err(Error::ModulusMismatch {
            expected: fact.r1(),
            found: t.r1(),
        });
    }
    if t.r2() != fact.r2() {
        return Err(Error::ModulusMismatch {
            expected: fact.r2(),
            found: t.r2(),
        });
    }
    Ok(())
}

/// Closed-form information set of `R(ρ, m)` for `ρ ∈ {1, 2}`:
/// `{ext} ∪ T⁻¹(Γ)` with Γ from [`gamma_rm1`] or [`gamma_rm2`].
pub fn info_set_rm(code: &RMCode, fact: &RMFactorization, t: &GroupIso) -> Result<RMInfoSet> {
    check_compatible(code, fact, t)?;
    let region = match code.rho() {
        1 => gamma_rm1(fact)?,
        2 => gamma_rm2(fact)?,
        other => return Err(Error::UnsupportedOrder(other)),
    };
    Ok(RMInfoSet::assemble(code, fact, t, pullback(&region, t)))
}

/// Punctured defining set of the dual code `R*(m - ρ - 1, m)`, which is
/// `Ω(1) ∪ ... ∪ Ω(ρ)`.
pub fn dual_punctured_defining_set(code: &RMCode) -> Result<CyclicDefiningSet> {
    Ok(rm_defining_set(&code.dual())?.1)
}

/// Information set of `R(ρ, m)` for any order, computed from the defining set
/// of the punctured dual code through the cyclic-to-abelian machinery.
pub fn info_set_generic(code: &RMCode, fact: &RMFactorization, t: &GroupIso) -> Result<RMInfoSet> {
    check_compatible(code, fact, t)?;
    let d = dual_punctured_defining_set(code)?;
    let (_, exps) = gamma_from_cyclic(&d, t)?;
    Ok(RMInfoSet::assemble(code, fact, t, exps))
}

/// Preferred class representatives for `R*(m - 3, m)`: 1, then `ε⁻¹(m/2)` when
/// `m` is even, then `ε⁻¹(a/2)` when `a` is even.
pub fn second_order_preferences(fact: &RMFactorization) -> Vec<u64> {
    let (m, a) = (fact.m(), fact.a());
    let mut prefs = vec![1];
    if m % 2 == 0 {
        prefs.push(epsilon_inverse(m / 2));
    }
    if a % 2 == 0 {
        prefs.push(epsilon_inverse(a / 2));
    }
    prefs
}

/// Suitable representatives of `Ω(1) ∪ Ω(2)` following the preferences of
/// [`second_order_preferences`].
pub fn second_order_reps(fact: &RMFactorization, t: &GroupIso) -> Result<SuitableReps> {
    let code = RMCode::new(fact.m(), 2)?;
    check_compatible(&code, fact, t)?;
    let d = dual_punctured_defining_set(&code)?;
    suitable_representatives_preferring(&d, t, &second_order_preferences(fact))
}

/// Classes `O(u)` for second-order representatives, with `U` chosen by the
/// same preferences.
pub fn second_order_classes(fact: &RMFactorization, reps: &SuitableReps) -> Vec<UClass> {
    u_classes_preferring(reps, &second_order_preferences(fact))
}

/// Measured sizes of one class `O(u)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassStats {
    pub u: u64,
    pub members: Vec<u64>,
    /// `|C_r1(u)|`.
    pub size_r1: u64,
    /// `|C_n(v)|` for each member `v`, in member order.
    pub sizes_n: Vec<u64>,
    /// `ε(u)` when `u` has 2-weight 2.
    pub epsilon: Option<u32>,
}

/// Structural quantities of the class decomposition for `R*(m - 3, m)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuralStats {
    pub u_count: usize,
    pub o1_count: usize,
    pub classes: Vec<ClassStats>,
}

/// Measures `|U|`, `|O(1)|` and per-class sizes by direct enumeration.
pub fn structural_stats(fact: &RMFactorization, reps: &SuitableReps) -> Result<StructuralStats> {
    let (n, r1) = (fact.n(), fact.r1());
    if reps.n() != n || reps.iso().r1() != r1 {
        return Err(Error::ModulusMismatch {
            expected: n,
            found: reps.n(),
        });
    }
    let classes: Vec<ClassStats> = second_order_classes(fact, reps)
        .into_iter()
        .map(|c| ClassStats {
            u: c.u,
            size_r1: coset_len(c.u % r1, r1, 1),
            sizes_n: c.members.iter().map(|&v| coset_len(v, n, 1)).collect(),
            epsilon: epsilon(c.u, fact.m()).ok(),
            members: c.members,
        })
        .collect();
    let o1_count = classes
        .iter()
        .find(|c| c.u == 1)
        .map_or(0, |c| c.members.len());
    Ok(StructuralStats {
        u_count: classes.len(),
        o1_count,
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::u_classes;
    use crate::modular::{crt_iso, cyclotomic_coset};

    fn crt(fact: &RMFactorization) -> GroupIso {
        crt_iso(fact.r1(), fact.r2()).unwrap()
    }

    #[test]
    fn defining_sets() {
        let (full, _) = rm_defining_set(&RMCode::new(4, 1).unwrap()).unwrap();
        assert_eq!(full, vec![0, 1, 2, 3, 4, 5, 6, 8, 9, 10, 12]);
        let (_, punctured) = rm_defining_set(&RMCode::new(4, 2).unwrap()).unwrap();
        assert_eq!(punctured.elements(), vec![1, 2, 4, 8]);
        for m in 3..=8 {
            let (_, p) = rm_defining_set(&RMCode::new(m, m - 2).unwrap()).unwrap();
            assert_eq!(p.cosets().len(), 1);
            assert_eq!(p.len(), m as usize);
        }
    }

    #[test]
    fn omega_strata() {
        assert_eq!(omega(2, 4), vec![3, 5, 6, 9, 10, 12]);
        assert_eq!(omega(1, 4), vec![1, 2, 4, 8]);
        assert_eq!(omega(3, 4), vec![7, 11, 13, 14]);
        assert!(omega(4, 4).is_empty());
    }

    #[test]
    fn normal_forms() {
        assert_eq!(normalize_weight_k(10, 6, 2).unwrap(), 5);
        assert_eq!(normalize_weight_k(12, 4, 2).unwrap(), 3);
        assert_eq!(normalize_weight_k(1 + 8, 7, 2).unwrap(), 9);
        assert_eq!(normalize_weight_k(16, 6, 1).unwrap(), 1);
        assert!(normalize_weight_k(7, 6, 2).is_err());
    }

    #[test]
    fn epsilon_values() {
        assert_eq!(epsilon(10, 6).unwrap(), 2);
        assert_eq!(epsilon(5, 4).unwrap(), 2);
        for m in 3..=12 {
            assert_eq!(epsilon(3, m).unwrap(), 1);
        }
        assert!(epsilon(7, 6).is_err());
    }

    #[test]
    fn closed_form_coset_sizes() {
        let f4 = RMFactorization::new(4, 3).unwrap();
        assert_eq!(coset_sizes_wt2(5, &f4).unwrap(), (2, 2));
        let f6 = RMFactorization::new(6, 7).unwrap();
        assert_eq!(coset_sizes_wt2(5, &f6).unwrap(), (6, 3));
        assert_eq!(coset_sizes_wt2(9, &f6).unwrap(), (3, 3));
        let f8 = RMFactorization::new(8, 5).unwrap();
        assert!(coset_sizes_wt2(3, &f8).is_err());
    }

    #[test]
    fn factorization_lists() {
        let pairs = |m, rho| -> Vec<(u64, u64)> {
            factorizations(m, rho)
                .iter()
                .map(|f| (f.r1(), f.r2()))
                .collect()
        };
        assert_eq!(pairs(8, 1), vec![(3, 85), (5, 51), (15, 17)]);
        assert_eq!(pairs(8, 2), vec![(3, 85), (15, 17)]);
        assert!(pairs(11, 2).is_empty());
        assert_eq!(pairs(11, 1), vec![(23, 89)]);
        assert_eq!(pairs(12, 2), vec![(7, 585), (63, 65)]);
        assert!(pairs(7, 1).is_empty());
        assert!(RMFactorization::new(4, 5).is_ok());
        assert!(RMFactorization::new(6, 3).is_err());
        assert!(RMFactorization::new(6, 63).is_err());
    }

    #[test]
    fn first_order_pullbacks() {
        let code = RMCode::new(4, 1).unwrap();
        let f = RMFactorization::new(4, 3).unwrap();
        let set = info_set_rm(&code, &f, &crt(&f)).unwrap();
        assert_eq!(set.exponents(), vec![0, 1, 6, 10]);
        assert_eq!(
            gamma_rm1(&f).unwrap().points(),
            vec![(0, 0), (0, 1), (1, 0), (1, 1)]
        );

        let code = RMCode::new(6, 1).unwrap();
        let f = RMFactorization::new(6, 7).unwrap();
        assert_eq!(
            info_set_rm(&code, &f, &crt(&f)).unwrap().exponents(),
            vec![0, 1, 9, 28, 36, 37]
        );

        let code = RMCode::new(8, 1).unwrap();
        let f = RMFactorization::new(8, 5).unwrap();
        assert_eq!(
            info_set_rm(&code, &f, &crt(&f)).unwrap().exponents(),
            vec![0, 1, 51, 52, 102, 103, 153, 205]
        );
    }

    #[test]
    fn second_order_pullbacks() {
        let code = RMCode::new(4, 2).unwrap();
        let f = RMFactorization::new(4, 3).unwrap();
        assert_eq!(
            info_set_rm(&code, &f, &crt(&f)).unwrap().exponents(),
            vec![0, 1, 2, 3, 5, 6, 7, 10, 11, 12]
        );
        let code = RMCode::new(6, 2).unwrap();
        let f = RMFactorization::new(6, 7).unwrap();
        assert_eq!(
            info_set_rm(&code, &f, &crt(&f)).unwrap().exponents(),
            vec![0, 1, 2, 9, 10, 11, 18, 19, 21, 28, 29, 30, 36, 37, 38, 45, 46, 47, 54, 56, 57]
        );
        assert!(gamma_rm2(&RMFactorization::new(8, 5).unwrap()).is_err());
    }

    #[test]
    fn info_and_check_sets_partition_positions() {
        let code = RMCode::new(6, 2).unwrap();
        let f = RMFactorization::new(6, 7).unwrap();
        let set = info_set_rm(&code, &f, &crt(&f)).unwrap();
        assert_eq!(set.info_set.len() as u64, code.dimension());
        assert_eq!(set.check_set.len() as u64, code.dual().dimension());
        let mut all: Vec<Position> = set.info_set.iter().chain(&set.check_set).copied().collect();
        all.sort();
        assert_eq!(all, all_positions(6));
    }

    #[test]
    fn unsupported_orders_point_to_the_generic_path() {
        let code = RMCode::new(8, 3).unwrap();
        let f = RMFactorization::new(8, 15).unwrap();
        assert_eq!(
            info_set_rm(&code, &f, &crt(&f)),
            Err(Error::UnsupportedOrder(3))
        );
        let set = info_set_generic(&code, &f, &crt(&f)).unwrap();
        assert_eq!(set.info_set.len() as u64, code.dimension());
    }

    #[test]
    fn generic_matches_closed_form_on_small_cases() {
        for (m, r1, rho) in [
            (4, 3, 1),
            (4, 3, 2),
            (6, 7, 1),
            (6, 7, 2),
            (8, 15, 2),
            (8, 5, 1),
        ] {
            let code = RMCode::new(m, rho).unwrap();
            let f = RMFactorization::new(m, r1).unwrap();
            let t = crt(&f);
            assert_eq!(
                info_set_rm(&code, &f, &t).unwrap(),
                info_set_generic(&code, &f, &t).unwrap()
            );
        }
    }

    #[test]
    fn position_json() {
        let code = RMCode::new(4, 1).unwrap();
        let f = RMFactorization::new(4, 3).unwrap();
        let set = info_set_rm(&code, &f, &crt(&f)).unwrap();
        let json = set.to_json();
        assert!(json.starts_with(
            r#"{"m":4,"rho":1,"r1":3,"r2":5,"a":2,"b":2,"iso":[1,1],"info_set":["ext",0,1,6,10],"check_set":[2,3,4,5,7,8,9,11,12,13,14]}"#
        ));
        let back: RMInfoSet = serde_json::from_str(&json).unwrap();
        assert_eq!(back, set);
        assert!(serde_json::from_str::<Position>("\"zero\"").is_err());
    }

    #[test]
    fn class_examples() {
        let f = RMFactorization::new(4, 3).unwrap();
        let t = crt(&f);
        let reps = second_order_reps(&f, &t).unwrap();
        let classes = u_classes(&reps);
        assert_eq!(classes.len(), 2);
        let one = classes.iter().find(|c| c.members.contains(&1)).unwrap();
        let c5 = cyclotomic_coset(5, 15, 1).unwrap();
        assert!(one.members.iter().any(|&v| c5.contains(v)));
    }

    #[test]
    fn structural_examples() {
        for (m, r1, u, o1) in [(6, 7, 2, 2), (4, 3, 2, 2), (9, 7, 2, 2)] {
            let f = RMFactorization::new(m, r1).unwrap();
            let reps = second_order_reps(&f, &crt(&f)).unwrap();
            let stats = structural_stats(&f, &reps).unwrap();
            assert_eq!((stats.u_count, stats.o1_count), (u, o1), "m = {m}");
        }
        let f = RMFactorization::new(9, 7).unwrap();
        let stats = structural_stats(&f, &second_order_reps(&f, &crt(&f)).unwrap()).unwrap();
        for class in stats.classes.iter().filter(|c| c.u != 1) {
            assert_eq!(class.members.len(), 3);
        }
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension(4, 1), 5);
        assert_eq!(dimension(6, 2), 22);
        for m in 3..=20 {
            for rho in 1..=m - 2 {
                assert_eq!(dimension(m, rho) + dimension(m, m - rho - 1), 1 << m);
            }
        }
    }
}
