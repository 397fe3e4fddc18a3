//! Christoffel words, the trace homomorphism μ into SL₂(ℤ), and Markoff
//! triples, all in exact integer arithmetic.
//!
//! A proper Christoffel word `w` with standard factorization `w = w₁w₂`
//! determines the proper Markoff triple {⅓Tr(μw₁), ⅓Tr(μw₂), ⅓Tr(μw)}, and
//! every proper Markoff triple arises from exactly one such word.
//! [`markoff::triple_of_word`] and [`markoff::word_of_triple`] are the two
//! directions of that correspondence.

pub mod cli;
pub mod conjecture;
pub mod error;
pub mod markoff;
pub mod matrices;
pub mod words;

pub use conjecture::{cross_check, injectivity_scan, CollisionReport};
pub use error::{Error, Result};
pub use markoff::{check_equation, markoff_tree, triple_of_word, word_of_triple, MarkoffTriple, TripleProvenance};
pub use matrices::{markoff_number, mu, Mat2};
pub use words::{
    christoffel_tree, christoffel_word, is_christoffel, lattice_path, render_path,
    standard_factorization, FactoredWord, LatticePath, Letter, RenderFormat, Slope, Word,
};
