pub mod axioms;
pub mod bimodule;
pub mod cli;
pub mod cs;
pub mod model;
pub mod par;
pub mod proof;
pub mod term;
