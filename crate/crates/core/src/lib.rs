//! Information sets and check positions for binary abelian codes, cyclic codes
//! viewed as two-dimensional abelian codes, and Reed-Muller codes.

pub mod abelian;
pub mod cyclic;
pub mod error;
pub mod modular;
pub mod reed_muller;

pub use abelian::{gamma, DefiningSet2D, GammaRegion, Orbit2D, Point, RestrictedReps};
pub use cyclic::{gamma_from_cyclic, CyclicDefiningSet, SuitableReps};
pub use error::{Error, Result};
pub use modular::{crt_iso, cyclotomic_coset, enumerate_isos, ord2_mod, Coset, GroupIso};
pub use reed_muller::{factorizations, info_set_rm, Position, RMCode, RMFactorization};
