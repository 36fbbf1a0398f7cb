//! Normal forms, composition and equality for morphisms of the PROP for
//! bialgebras.
//!
//! Morphisms are modelled three ways:
//!
//! * combinatorially, as free-monoid homomorphisms decorated with one
//!   permutation per target letter ([`fgfmon::HatArrow`]), composed by an
//!   explicit formula built from the gadgets in [`perm`] and [`words`];
//! * syntactically, as terms over `mu`, `eta`, `delta`, `eps` and wire
//!   permutations ([`terms::Term`]), normalized by a rewrite engine or by a
//!   symbolic Sweedler trace ([`normalize`]);
//! * linearly, as exact rational matrices over Sweedler's four-dimensional
//!   bialgebra ([`matrix_eval`]).
//!
//! All three routes meet in [`fgfmon::NormalForm`], the unique factorisation
//! `mu^[q] . P(sigma) . delta^[p]`.

pub mod error;
pub mod fgfmon;
pub mod fset;
pub mod gen;
pub mod matrix_eval;
pub mod normalize;
pub mod perm;
pub mod terms;
pub mod words;

pub use error::{Error, Result};
pub use fgfmon::{HatArrow, NormalForm};
pub use perm::Permutation;
pub use terms::Term;
pub use words::{MonoidHom, Word};
