//! The binary codes themselves, built two ways, and rank-based certificates.
//!
//! Columns are ordered `[0, α^0, α^1, ..., α^{n-1}]`: column 0 is the field
//! element 0 and column `1 + i` is `α^i`.

use crate::error::{OracleError, Result};
use crate::field::FieldGF2m;
use crate::matrix::BinaryMatrix;

/// `φ_s(x) = Σ_g x_g g^s` with `0^0 = 1`, for a word indexed by columns.
pub fn phi_map(field: &FieldGF2m, codeword: &[bool], s: usize) -> Result<u32> {
    let len = field.n() + 1;
    if codeword.len() != len {
        return Err(OracleError::DimensionMismatch {
            expected: len,
            found: codeword.len(),
        });
    }
    Ok(codeword
        .iter()
        .enumerate()
        .filter(|(_, &bit)| bit)
        .fold(0, |acc, (c, _)| acc ^ field.pow(field.element_at(c), s)))
}

/// Parity checks `φ_s(x) = 0` for every `s` in the defining set. `s = 0` gives
/// the all-ones row; each `s >= 1` gives `m` rows, the coordinates of `g^s`.
pub fn parity_check_matrix(field: &FieldGF2m, defining_set: &[usize]) -> Result<BinaryMatrix> {
    let n = field.n();
    let m = field.m() as usize;
    let mut set = defining_set.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.first() != Some(&0) {
        return Err(OracleError::InvalidDefiningSet(
            "0 must belong to the set".into(),
        ));
    }
    for &s in &set {
        if s >= n {
            return Err(OracleError::InvalidDefiningSet(format!(
                "{s} is not below {n}"
            )));
        }
        if set.binary_search(&(2 * s % n)).is_err() {
            return Err(OracleError::InvalidDefiningSet(format!(
                "{s} is present but not {}",
                2 * s % n
            )));
        }
    }
    let rows = 1 + (set.len() - 1) * m;
    let mut h = BinaryMatrix::zeros(rows, n + 1);
    for c in 0..=n {
        h.set(0, c, true);
    }
    for (k, &s) in set.iter().skip(1).enumerate() {
        for i in 0..n {
            let v = field.alpha_pow(i * s);
            for bit in 0..m {
                if v >> bit & 1 == 1 {
                    h.set(1 + k * m + bit, 1 + i, true);
                }
            }
        }
    }
    Ok(h)
}

/// Defining set `{0 <= s < 2^m - 1 : wt(s) < m - ρ}` of `R(ρ, m)`.
pub fn rm_full_defining_set(m: u32, rho: u32) -> Vec<usize> {
    let n = (1usize << m) - 1;
    (0..n)
        .filter(|&s| (s.count_ones() as i64) < m as i64 - rho as i64)
        .collect()
}

/// Subsets of `{0, ..., m-1}` of size at most `rho`, by size then lexicographically.
fn monomials(m: u32, rho: u32) -> Vec<Vec<u32>> {
    fn extend(m: u32, size: u32, start: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() as u32 == size {
            out.push(cur.clone());
            return;
        }
        for v in start..m {
            cur.push(v);
            extend(m, size, v + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for size in 0..=rho {
        extend(m, size, 0, &mut Vec::new(), &mut out);
    }
    out
}

/// Evaluations of all Boolean monomials of degree at most `rho` in the
/// coordinates of each field element.
pub fn evaluation_generator(field: &FieldGF2m, rho: u32) -> Result<BinaryMatrix> {
    let m = field.m();
    if rho >= m {
        return Err(OracleError::OrderOutOfRange { rho, m });
    }
    let points: Vec<u32> = (0..=field.n()).map(|c| field.element_at(c)).collect();
    let monos = monomials(m, rho);
    Ok(BinaryMatrix::from_fn(monos.len(), points.len(), |r, c| {
        monos[r].iter().all(|&v| points[c] >> v & 1 == 1)
    }))
}

/// Why a position set was accepted or rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Matrix rows whose restriction to the positions is a basis.
    PivotRows(Vec<usize>),
    /// The restriction falls short.
    RankDeficit {
        required: usize,
        size: usize,
        restricted_rank: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub certificate: Certificate,
}

fn check_positions(positions: &[usize], len: usize) -> Result<()> {
    let mut seen = vec![false; len];
    for &p in positions {
        if p >= len {
            return Err(OracleError::PositionOutOfRange { position: p, len });
        }
        if std::mem::replace(&mut seen[p], true) {
            return Err(OracleError::DuplicatePosition(p));
        }
    }
    Ok(())
}

/// The rows of `matrix` restricted to `positions` have rank `|positions|`,
/// and `|positions|` equals the rank of `matrix`.
fn full_rank_restriction(matrix: &BinaryMatrix, positions: &[usize]) -> Result<Verdict> {
    check_positions(positions, matrix.cols())?;
    let required = matrix.rank();
    let pivots = matrix.select_columns(positions).independent_rows();
    let holds = positions.len() == required && pivots.len() == required;
    let certificate = if holds {
        Certificate::PivotRows(pivots)
    } else {
        Certificate::RankDeficit {
            required,
            size: positions.len(),
            restricted_rank: pivots.len(),
        }
    };
    Ok(Verdict { holds, certificate })
}

/// Whether `positions` is an information set of the row space of `gen`.
pub fn is_information_set(gen: &BinaryMatrix, positions: &[usize]) -> Result<Verdict> {
    full_rank_restriction(gen, positions)
}

/// Whether `positions` is a set of check positions of the code
/// `{x : parity · x = 0}`: the parity-check columns at `positions` must be a
/// basis of the column space of `parity`.
pub fn is_check_set(parity: &BinaryMatrix, positions: &[usize]) -> Result<Verdict> {
    full_rank_restriction(parity, positions)
}

/// All columns of `0..len` not in `positions`, ascending.
pub fn complement(positions: &[usize], len: usize) -> Vec<usize> {
    let mut mask = vec![false; len];
    for &p in positions {
        if p < len {
            mask[p] = true;
        }
    }
    (0..len).filter(|&c| !mask[c]).collect()
}

/// Whether the row space of `gen` equals the nullspace of `parity`.
pub fn generates_nullspace(gen: &BinaryMatrix, parity: &BinaryMatrix) -> Result<bool> {
    if !gen.mul_transpose(parity)?.is_zero() {
        return Ok(false);
    }
    Ok(gen.rank() + parity.rank() == gen.cols())
}

/// `R(ρ, m)^⊥ = R(m - ρ - 1, m)` for the evaluation construction.
pub fn verify_duality(field: &FieldGF2m, rho: u32) -> Result<bool> {
    let m = field.m();
    if rho + 1 >= m {
        return Err(OracleError::OrderOutOfRange { rho, m });
    }
    let g = evaluation_generator(field, rho)?;
    let h = evaluation_generator(field, m - rho - 1)?;
    generates_nullspace(&g, &h)
}

/// Smallest nonzero weight in the row space, by enumerating all codewords of
/// a basis. Intended for small dimensions only.
pub fn minimum_distance(gen: &BinaryMatrix) -> Option<usize> {
    let (basis, _) = gen.rref();
    let k = basis.rows();
    assert!(k <= 24, "exhaustive enumeration of 2^{k} codewords");
    let stride = gen.cols().div_ceil(64);
    let mut word = vec![0u64; stride];
    let mut best: Option<usize> = None;
    // Gray-code walk visits every nonzero combination once
    for i in 1u64..1 << k {
        let flip = i.trailing_zeros() as usize;
        for (x, y) in word.iter_mut().zip(basis.row_words(flip)) {
            *x ^= *y;
        }
        let w = word.iter().map(|x| x.count_ones() as usize).sum();
        best = Some(best.map_or(w, |b: usize| b.min(w)));
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::build_field;

    #[test]
    fn phi_values() {
        let f = build_field(4).unwrap();
        let ones = vec![true; 16];
        assert_eq!(phi_map(&f, &ones, 0).unwrap(), 0);
        let mut single = vec![false; 16];
        single[1 + 7] = true;
        assert_eq!(phi_map(&f, &single, 1).unwrap(), f.alpha_pow(7));
        let mut ext = vec![false; 16];
        ext[0] = true;
        assert_eq!(phi_map(&f, &ext, 0).unwrap(), 1);
        assert_eq!(phi_map(&f, &ext, 3).unwrap(), 0);
    }

    #[test]
    fn parity_rows_annihilate_codewords() {
        let f = build_field(4).unwrap();
        let d = rm_full_defining_set(4, 1);
        let h = parity_check_matrix(&f, &d).unwrap();
        assert_eq!(h.rows(), 1 + (d.len() - 1) * 4);
        let code = h.nullspace();
        assert_eq!(code.rows(), 5);
        for r in 0..code.rows() {
            let word = code.row_bits(r);
            for &s in &d {
                assert_eq!(phi_map(&f, &word, s).unwrap(), 0);
            }
        }
    }

    #[test]
    fn defining_set_validation() {
        let f = build_field(4).unwrap();
        assert!(parity_check_matrix(&f, &[1, 2, 4, 8]).is_err());
        assert!(parity_check_matrix(&f, &[0, 1, 2, 4]).is_err());
        assert!(parity_check_matrix(&f, &[0, 15]).is_err());
    }

    #[test]
    fn generator_shapes() {
        let f = build_field(4).unwrap();
        let g0 = evaluation_generator(&f, 0).unwrap();
        assert_eq!(g0.rows(), 1);
        assert_eq!(g0.row_bits(0), vec![true; 16]);
        assert_eq!(evaluation_generator(&f, 2).unwrap().rows(), 11);
        assert!(evaluation_generator(&f, 4).is_err());
    }

    #[test]
    fn certificates() {
        let f = build_field(4).unwrap();
        let g = evaluation_generator(&f, 1).unwrap();
        let v = is_information_set(&g, &[0, 1, 2, 7, 11]).unwrap();
        assert!(v.holds);
        assert!(matches!(v.certificate, Certificate::PivotRows(ref rows) if rows.len() == 5));
        // 0, 1, α, α², α³ are affinely independent
        assert!(is_information_set(&g, &[0, 1, 2, 3, 4]).unwrap().holds);
        // α⁴ = 1 + α, so 0 + 1 + α + α⁴ = 0
        let v = is_information_set(&g, &[0, 1, 2, 5, 3]).unwrap();
        assert!(!v.holds);
        assert!(matches!(
            v.certificate,
            Certificate::RankDeficit { required: 5, .. }
        ));
        assert!(is_information_set(&g, &[0, 0, 1, 2, 3]).is_err());
        assert!(is_information_set(&g, &[16]).is_err());
    }

    #[test]
    fn complements() {
        assert_eq!(complement(&[0, 2, 3], 5), vec![1, 4]);
        assert!(complement(&[0, 1], 2).is_empty());
    }

    #[test]
    fn small_minimum_distances() {
        let f = build_field(4).unwrap();
        for rho in 0..4 {
            let g = evaluation_generator(&f, rho).unwrap();
            assert_eq!(minimum_distance(&g), Some(1 << (4 - rho)));
        }
    }
}
