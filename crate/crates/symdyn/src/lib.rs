//! symdyn: a workbench for the complexity of symbolic dynamical systems.
//!
//! The crate generates classical low-complexity sequences (substitution
//! fixed points, Sturmian/mechanical words, named corpus sequences), builds
//! shifts of finite type, and computes a family of complexity measures on
//! both: factor and palindrome complexity, nonrepetitive and pattern
//! complexities, inconstancy, topological entropy, and the subset-averaged
//! quantities — intricacy and average sample complexity — in topological and
//! measure-theoretic (Markov) form, together with a maximizer search over
//! Markov-measure families.
//!
//! Start with the runnable programs in `examples/`; each one exercises a
//! major capability end to end.

pub mod coeffs;
pub mod error;
pub mod generate;
pub mod intricacy;
pub mod markov;
pub mod measures;
pub mod optimize;
pub mod report;
pub mod subshift;
pub mod words;

pub mod cli;

pub use error::{Error, Result};
pub use words::{Alphabet, Word};
