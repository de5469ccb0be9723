//! Coherence equations for the weak distributions, their bundled proofs,
//! the negation laws, and the full verification run.

mod equations;
mod naturality;
mod negation;
mod proofs;
mod verify;

pub use equations::{cs_equation, CsError, CsObjects, EXTENSION_POINTS, SHIPPED};
pub use naturality::{naturality_proof, naturality_squares, NaturalitySquare};
pub use negation::{negation_axioms, NegationAxiom};
pub use proofs::{bundled_proof, ProofError, SEARCH_BUDGET};
pub use verify::{verify_all, verify_with, Entry, Extension, Status, VerificationReport, VerifyOptions};
