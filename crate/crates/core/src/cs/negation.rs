//! The four snake laws linking `γ`, `τ` and `m`.

use crate::axioms::{instantiate, Catalogue, Equation, Subst};
use crate::term::ObjExpr;

#[derive(Clone, Debug)]
pub struct NegationAxiom {
    pub id: String,
    pub equation: Equation,
    /// Set on the three laws transcribed as planar mates of the first.
    pub reconstructed: bool,
}

/// The snake laws at `a`. The first reads the displayed square from
/// `(a ⅋ R) ⊗ I` to `R ⊗ a`; the rest are its planar mates.
pub fn negation_axioms(a: &ObjExpr) -> Vec<NegationAxiom> {
    let cat = Catalogue::standard(true);
    (1..=4)
        .map(|i| {
            let s = cat.get(&format!("neg-snake-{i}")).expect("negation catalogue");
            let equation = instantiate(s, &Subst::new().obj("A", a.clone())).expect("snake laws type-check");
            NegationAxiom { id: s.id.clone(), equation, reconstructed: s.note.is_some() }
        })
        .collect()
}
