//! Word problems, normal forms, conjugacy solvers and filling-function
//! surveys for a fixed family of finitely presented groups.

pub mod area;
pub mod conjugacy;
pub mod error;
pub mod groups;
pub mod hnn;
pub mod models;
pub mod presentation;
pub mod registry;
pub mod survey;
pub mod word;

pub use error::{Error, ParseError, Result};
pub use presentation::{apply_relator, verify_ledger, AreaLedger, DerivationStep, LedgerBuilder, Presentation};
pub use word::{Alphabet, Letter, Word};
