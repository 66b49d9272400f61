//! Exact characters of the exceptional Lie algebra G2 and graded characters
//! of its Kirillov–Reshetikhin modules.
//!
//! * [`lattice`]: weights, roots, Weyl group and the invariant form.
//! * [`characters`]: Freudenthal characters, products, decompositions.
//! * [`kr`]: graded characters of the four KR families in closed form and
//!   in generating-function form.
//! * [`equivalence`]: class representatives and the partition check that
//!   relates the two forms.
//! * [`chevalley`]: structure constants, Killing form, and the explicit
//!   graded module `V(ω₂) ⊕ ℂ`.
//! * [`verify`]: sweeps used by the CLI and the acceptance tests.

pub mod characters;
pub mod chevalley;
pub mod equivalence;
pub mod error;
pub mod kr;
pub mod lattice;
pub mod verify;

pub use characters::{
    decompose, irreducible_character, tensor, weyl_dim, Character, IrrDecomposition,
};
pub use error::{Error, Result};
pub use kr::{
    compare, conjecture_graded_character, kr_graded_character, Family, GradedDecomposition,
    QuadIndex,
};
pub use lattice::Weight;
