//! Brute-force certification over GF(2): builds binary Reed-Muller codes from
//! a defining set and from Boolean monomials, and decides by rank computations
//! whether a set of positions is an information set or a set of check positions.
//!
//! This crate deliberately shares no code with the constructive side.

pub mod code;
pub mod error;
pub mod field;
pub mod matrix;

pub use code::{
    complement, evaluation_generator, generates_nullspace, is_check_set, is_information_set,
    minimum_distance, parity_check_matrix, phi_map, rm_full_defining_set, verify_duality,
    Certificate, Verdict,
};
pub use error::{OracleError, Result};
pub use field::{build_field, primitive_polynomials, FieldGF2m};
pub use matrix::BinaryMatrix;
