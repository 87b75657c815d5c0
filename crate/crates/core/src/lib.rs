//! Exact motive computations for representation and character varieties of
//! torus-knot groups Γ_{n,m} = ⟨x, y | xⁿ = yᵐ⟩ into SL_r, for 1 ≤ r ≤ 4.
//!
//! Every result is an integer polynomial in the Lefschetz motive `q` computed
//! by exact arithmetic; the machinery is cross-checked by a finite-field
//! point-counting oracle over SL₂(F_q).

pub mod assembly;
pub mod counting;
pub mod eigcfg;
pub mod ffcheck;
pub mod qpoly;
pub mod strata;
pub mod total;
pub mod typeenum;
pub mod verify;

pub use assembly::{ConfigReport, MotiveEngine};
pub use counting::CountTable;
pub use eigcfg::{EigenConfig, Partition};
pub use ffcheck::FfParams;
pub use qpoly::{GroupKind, MotivePoly};
pub use strata::StratumReport;
pub use typeenum::{IsotypicBlock, TypeDescriptor, TypeOrbit};

/// Errors shared by the whole pipeline.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A division that the theory guarantees to be exact left a remainder.
    /// Always indicates an internal consistency bug, never bad user input.
    #[error("non-exact division (internal consistency bug)")]
    NonExactDivision,
    #[error("unsupported rank {0}: supported ranks are 1..=4")]
    UnsupportedRank(u32),
    #[error("n = {0} and m = {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("no closed formula for this partition pair")]
    UnsupportedPartition,
    #[error("hom dimension undefined: coinciding blocks of dimension >= 2")]
    UnsupportedHom,
    #[error("Schubert factor outside its supported multiplicity/dimension range")]
    UnsupportedSchubert,
    #[error("F_{q} lacks the required roots of unity: lcm(2n, 2m) = {lcm} does not divide q - 1")]
    FieldTooSmall { q: u64, lcm: u64 },
    #[error("enumeration budget exceeded for q = {0} (supported: prime q <= 17)")]
    TooLarge(u64),
    #[error("no residue-class branch covers n mod 6 = {0}, m mod 6 = {1}")]
    NoBranch(u64, u64),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
