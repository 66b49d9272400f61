use thiserror::Error;

use crate::kr::{Family, QuadIndex};
use crate::lattice::Weight;

/// Domain errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),

    #[error("not a nonnegative sum of irreducible characters: {0}")]
    NotIrreducibleSum(String),

    #[error("family {family} is not indexed by quadruples; {operation} needs u1 or t2")]
    NotQuadIndexed {
        family: Family,
        operation: &'static str,
    },

    #[error("invalid class key for m = {m}: violates {violated}")]
    InvalidKey { m: u64, violated: String },

    #[error("{index} is outside the region of {family} at m = {m}")]
    OutsideRegion {
        family: Family,
        m: u64,
        index: QuadIndex,
    },

    #[error("unknown family `{0}` (expected u1, u2, t1 or t2)")]
    UnknownFamily(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
