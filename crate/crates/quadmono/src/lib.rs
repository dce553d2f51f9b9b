//! Symbolic braid-monodromy engine for quadric arrangements.
//!
//! The pipeline: a monodromy table (built in, parsed from a file, or
//! generated from the family formulas) yields a factor list of braids whose
//! product is the full twist Δ²; the van Kampen rule turns the factors into
//! a presentation of the curve complement's fundamental group; Tietze
//! simplification reduces it; Smith-normal-form abelianization and
//! homomorphism counting certify the result against the target
//! presentations.

pub mod braid;
pub mod invariants;
pub mod monodromy;
pub mod presentation;
pub mod van_kampen;
pub mod word;

pub use braid::{artin_apply, band_generator, fulltwist, ArtinConvention, BandSide, Braid, FullTwistSpec, HalfTwist};
pub use invariants::{AbelianInvariants, FiniteGroup, Fingerprint};
pub use monodromy::{builtin_table, formula_relations, parse_table, Family, MonodromyTable, SingularFactor};
pub use presentation::Presentation;
pub use van_kampen::present;
pub use word::FreeWord;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("generator x{gen} is out of range for a braid on {strands} strands")]
    GeneratorOutOfRange { gen: u32, strands: u32 },

    #[error("band endpoints must satisfy i < j, got ({i}, {j})")]
    BadBand { i: u32, j: u32 },

    #[error("unsupported built-in case `{0}`")]
    UnknownCase(String),

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("presentation has no projective relator (product of all generators)")]
    MissingProjective,

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("hom-count search space {space} exceeds cap {cap}")]
    CapExceeded { space: u128, cap: u128 },

    #[error("invalid finite group table: {0}")]
    BadGroupTable(String),

    #[error("{0}")]
    Invalid(String),
}
