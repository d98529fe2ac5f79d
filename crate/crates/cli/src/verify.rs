//! Rank certification of emitted sets against codes built by the oracle.

use rm_infoset::reed_muller::RMInfoSet;
use rm_infoset::Position;
use rm_infoset_oracle::{
    build_field, evaluation_generator, is_check_set, is_information_set, parity_check_matrix,
    rm_full_defining_set, BinaryMatrix,
};
use serde::Serialize;

use crate::error::{CliError, Result};

/// Generator matrices of `R(ρ, m)` and its dual, and a parity-check matrix of
/// `R(ρ, m)` built from its defining set, reduced once and shared by every
/// set checked against the same code.
#[derive(Debug, Clone)]
pub struct Verifier {
    m: u32,
    rho: u32,
    gen: BinaryMatrix,
    dual_gen: BinaryMatrix,
    parity: BinaryMatrix,
}

/// The three verdicts for one emitted set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Verification {
    /// The set is an information set of `R(ρ, m)`.
    pub info_set: bool,
    /// Its complement is an information set of `R(m - ρ - 1, m)`.
    pub dual_info_set: bool,
    /// Its complement is a set of check positions of `R(ρ, m)` according to
    /// the parity-check matrix.
    pub check_set: bool,
}

impl Verification {
    pub fn holds(&self) -> bool {
        self.info_set && self.dual_info_set && self.check_set
    }
}

/// Column of a position in the oracle's layout `[0, α^0, ..., α^{n-1}]`.
pub fn column(p: Position) -> usize {
    match p {
        Position::Ext => 0,
        Position::Exp(i) => 1 + i as usize,
    }
}

impl Verifier {
    pub fn new(m: u32, rho: u32) -> Result<Self> {
        if rho + 1 >= m {
            return Err(CliError::Usage(format!(
                "order {rho} has no dual order for m = {m}"
            )));
        }
        let field = build_field(m)?;
        let gen = evaluation_generator(&field, rho)?;
        let dual_gen = evaluation_generator(&field, m - rho - 1)?.rref().0;
        let parity = parity_check_matrix(&field, &rm_full_defining_set(m, rho))?
            .rref()
            .0;
        Ok(Verifier {
            m,
            rho,
            gen,
            dual_gen,
            parity,
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn rho(&self) -> u32 {
        self.rho
    }

    pub fn check(&self, set: &RMInfoSet) -> Result<Verification> {
        if set.m != self.m || set.rho != self.rho {
            return Err(CliError::Usage(format!(
                "set for R({}, {}) checked against R({}, {})",
                set.rho, set.m, self.rho, self.m
            )));
        }
        let info: Vec<usize> = set.info_set.iter().map(|&p| column(p)).collect();
        let rest: Vec<usize> = set.check_set.iter().map(|&p| column(p)).collect();
        Ok(Verification {
            info_set: is_information_set(&self.gen, &info)?.holds,
            dual_info_set: is_information_set(&self.dual_gen, &rest)?.holds,
            check_set: is_check_set(&self.parity, &rest)?.holds,
        })
    }
}
