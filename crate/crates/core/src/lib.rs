//! Audit and debias binary text classifiers.
//!
//! The crate covers the full loop: load or synthesize labeled corpora
//! ([`corpus`]), normalize or clean the text ([`textprep`]), pseudo-anonymize
//! named entities ([`entity`]), train a deterministic linear classifier or
//! bridge to an external one ([`classifier`]), attribute predictions to token
//! occurrences with Shapley values ([`shapley`]), flag spurious
//! high-importance tokens ([`audit`]), and measure the generalization effect
//! of the cleanup with an internal/external rotation experiment ([`harness`]).

pub mod audit;
pub mod classifier;
pub mod corpus;
pub mod entity;
pub mod harness;
pub mod shapley;
pub mod textprep;
