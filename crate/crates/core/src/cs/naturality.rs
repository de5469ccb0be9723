//! Naturality squares of `d^l` and `d^r` for free generator morphisms.
//!
//! A weak distribution is natural in the two arguments its one-sided action
//! does not touch by naturality of `m` and bifunctoriality alone; those
//! squares come with certificates. Naturality in the acted-on argument needs
//! the morphism to be equivariant, so those squares are only model-checked.

use super::proofs::ProofError;
use crate::axioms::{Catalogue, Direction, Equation, Subst};
use crate::bimodule::{build_dl, build_dr, BimoduleSym};
use crate::proof::{PastingProof, ProofBuilder};
use crate::term::{parse_object, parse_term, MorTerm, ObjExpr};

#[derive(Clone, Debug)]
pub struct NaturalitySquare {
    pub id: &'static str,
    pub equation: Equation,
    /// Whether a certificate is expected, as opposed to a model check only.
    pub symbolic: bool,
}

fn t(s: &str) -> MorTerm {
    parse_term(s).expect("naturality term")
}

fn o(s: &str) -> ObjExpr {
    parse_object(s).expect("naturality object")
}

fn b(name: &str) -> BimoduleSym {
    BimoduleSym::free(o(name))
}

fn eq(lhs: Vec<MorTerm>, rhs: Vec<MorTerm>) -> Equation {
    Equation::new(MorTerm::chain(lhs), MorTerm::chain(rhs)).expect("naturality squares are parallel")
}

/// The six squares, in a fixed order.
pub fn naturality_squares() -> Vec<NaturalitySquare> {
    let (a, bb, c) = (b("A"), b("B"), b("C"));
    let sq = |id, symbolic, equation| NaturalitySquare { id, equation, symbolic };
    vec![
        sq(
            "dl-natural-1",
            true,
            eq(
                vec![t("(gen(f, A, A2) * id[B]) % id[C]"), build_dl(&a, &bb, &c)],
                vec![build_dl(&b("A2"), &bb, &c), t("gen(f, A, A2) * id[(B % C)]")],
            ),
        ),
        sq(
            "dl-natural-2",
            true,
            eq(
                vec![t("(id[A] * gen(g, B, B2)) % id[C]"), build_dl(&a, &bb, &c)],
                vec![build_dl(&a, &b("B2"), &c), t("id[A] * (gen(g, B, B2) % id[C])")],
            ),
        ),
        sq(
            "dl-natural-3",
            false,
            eq(
                vec![t("id[(A * B)] % gen(h, C, C2)"), build_dl(&a, &bb, &c)],
                vec![build_dl(&a, &bb, &b("C2")), t("id[A] * (id[B] % gen(h, C, C2))")],
            ),
        ),
        sq(
            "dr-natural-1",
            false,
            eq(
                vec![t("gen(g, B, B2) % id[(C * A)]"), build_dr(&bb, &c, &a)],
                vec![build_dr(&b("B2"), &c, &a), t("(gen(g, B, B2) % id[C]) * id[A]")],
            ),
        ),
        sq(
            "dr-natural-2",
            true,
            eq(
                vec![t("id[B] % (gen(h, C, C2) * id[A])"), build_dr(&bb, &c, &a)],
                vec![build_dr(&bb, &b("C2"), &a), t("(id[B] % gen(h, C, C2)) * id[A]")],
            ),
        ),
        sq(
            "dr-natural-3",
            true,
            eq(
                vec![t("id[B] % (id[C] * gen(f, A, A2))"), build_dr(&bb, &c, &a)],
                vec![build_dr(&bb, &c, &b("A2")), t("id[(B % C)] * gen(f, A, A2)")],
            ),
        ),
    ]
}

/// Certificate for a symbolic square: both sides are pushed to
/// `(f' ⅋ g') ∘ m` by naturality of `m` and the `⅋`-interchange.
pub fn naturality_proof(sq: &NaturalitySquare) -> Result<PastingProof, ProofError> {
    let cat = Catalogue::standard(false);
    let empty = match sq.id {
        "dl-natural-1" | "dl-natural-2" => "g",
        "dr-natural-2" | "dr-natural-3" => "h",
        other => return Err(ProofError::Search(format!("{other} has no symbolic proof"))),
    };
    let mut l = ProofBuilder::new(cat, &sq.equation.lhs);
    let mut r = ProofBuilder::new(cat, &sq.equation.rhs);
    l.rw("par-interchange", Direction::Forward, Subst::new())?.simp()?;
    r.rw("m-natural", Direction::Forward, Subst::new().mor(empty, MorTerm::id(ObjExpr::UnitPar)))?;
    r.rw("par-interchange", Direction::Forward, Subst::new())?.simp()?;
    Ok(l.meet(r)?)
}
