//! deckforge-core: a compiler-style toolkit that turns verified simulator
//! decks into alignment-training data.
//!
//! The pipeline runs deck text through a fixed set of stages:
//!
//! 1. [`parser`] — lex/parse SDE-subset s-expression scripts, print them
//!    back canonically.
//! 2. [`ir`] — extract the semantic record (geometry, contacts, doping,
//!    mesh, exports), flatten it, fingerprint it with fact cards, diff it.
//! 3. [`diversify`] — expand one flattened IR into many equivalence-
//!    preserving variants under a fixed seed.
//! 4. [`render`] — deterministically render reference code, a canonical
//!    instruction under a numeric whitelist, a shared chain-of-thought and
//!    five paraphrase styles.
//! 5. [`dpo`] — build chosen/rejected preference pairs with single-factor
//!    violations, validate them with the two-stage checker, serialize
//!    stable-ID records.
//! 6. [`checker`] — the built-in stand-in for tool-side syntax checking:
//!    grammar plus semantic order rules and placeholder resolution.
//! 7. [`eval`] — pass@k scoring of candidate scripts against rendered
//!    instruction cases.
//! 8. [`qa`] — document segmentation and the two QA-synthesis pipelines
//!    against an abstract text-generation client.

pub mod decimal;
pub mod ir;
pub mod parser;

pub use decimal::Decimal;
