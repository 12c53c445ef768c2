//! Query files, the verification suite and the brute-force oracles behind
//! the `gts` command.

pub mod corpus;
pub mod eval;
pub mod grammar;
pub mod oracle;
pub mod report;

pub use corpus::{corpus_verify, corpus_verify_with, Tables};
pub use eval::run;
pub use grammar::{parse, print, QueryDoc};
pub use oracle::oracle_ess_finite;
pub use report::{Caps, Report};
