//! Object expressions, morphism terms, typing and the textual grammar.

mod mor;
mod obj;
mod parse;
mod path;

pub use mor::MorTerm;
pub use obj::ObjExpr;
pub use parse::{parse_object, parse_term, ParseError};
pub use path::{Path, PathElem, PathError};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TypeError {
    #[error("ill-typed composite `{term}`: codomain {before_cod} does not match domain {after_dom}")]
    Mismatch { term: String, before_cod: String, after_dom: String },
}

/// `⅋`-normal form of an object.
pub fn normalize_par(o: &ObjExpr) -> ObjExpr {
    o.normalize_par()
}

/// Domain and codomain of a term, or the first ill-typed composite.
pub fn infer_type(t: &MorTerm) -> Result<(ObjExpr, ObjExpr), TypeError> {
    t.infer_type()
}

/// Prints a term in the grammar accepted by [`parse_term`].
pub fn print_term(t: &MorTerm) -> String {
    t.to_string()
}
