//! Certificates for the shipped equations, produced by tactics and checked
//! by the kernel.

use super::equations::{cs_equation, CsError, CsObjects};
use crate::axioms::{Catalogue, Direction, Subst};
use crate::proof::{search_equality, BuildError, PastingProof, ProofBuilder, SearchBudget, SearchOutcome};
use crate::term::{parse_object, parse_term, MorTerm};

#[derive(Debug, thiserror::Error)]
pub enum ProofError {
    #[error(transparent)]
    Cs(#[from] CsError),
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error("search failed: {0}")]
    Search(String),
}

/// Budget under which the unit laws (7) and (8) are found by search.
pub const SEARCH_BUDGET: usize = 12;

use Direction::{Backward as Bwd, Forward as Fwd};

/// Hints from `(name, text)` pairs; lowercase names are morphisms.
fn h(pairs: &[(&str, &str)]) -> Subst {
    pairs.iter().fold(Subst::new(), |s, (k, v)| {
        if k.starts_with(|c: char| c.is_ascii_lowercase()) {
            s.mor(k, parse_term(v).expect("hint term"))
        } else {
            s.obj(k, parse_object(v).expect("hint object"))
        }
    })
}

fn t(s: &str) -> MorTerm {
    parse_term(s).expect("tactic term")
}

/// `id o f` in place of the first occurrence of `f`.
fn pad(b: &mut ProofBuilder<'_>, f: &str) -> Result<(), BuildError> {
    let p = b.find(&t(f)).ok_or_else(|| BuildError::NoMatch {
        schema: "id-left".into(),
        direction: Bwd,
        hints: f.into(),
        term: b.term().to_string(),
    })?;
    b.insert_id(p, true)?;
    Ok(())
}

pub fn bundled_proof(n: u8) -> Result<PastingProof, ProofError> {
    let cat = Catalogue::standard(false);
    let eq = cs_equation(n, &CsObjects::default())?;
    let mut l = ProofBuilder::new(cat, &eq.lhs);
    let mut r = ProofBuilder::new(cat, &eq.rhs);
    match n {
        7 | 8 => {
            let (out, _) = search_equality(cat, &eq, &SearchBudget::steps(SEARCH_BUDGET));
            return match out {
                SearchOutcome::Proved(p) => Ok(p),
                SearchOutcome::Unknown(why) => Err(ProofError::Search(why)),
            };
        }
        9 => {
            l.rw("par-interchange", Fwd, Subst::new())?.simp()?;
            l.rw("M3", Bwd, h(&[("A", "A"), ("B", "B"), ("C", "C"), ("D", "D")]))?;
            l.rw("par-interchange", Fwd, Subst::new())?.simp()?;
            l.rw("bimod-corollary", Bwd, h(&[("A", "D")]))?;

            pad(&mut r, "id[A]")?;
            r.rw("tens-interchange", Bwd, Subst::new())?;
            r.rw("m-natural", Fwd, h(&[("g", "id[R]")]))?;
            r.rw("par-interchange", Fwd, Subst::new())?.simp()?;
            r.rw("M1", Bwd, h(&[("U", "A"), ("V", "R"), ("W", "B"), ("X", "R"), ("Y", "C"), ("Z", "D")]))?;
            r.rw("par-interchange", Fwd, Subst::new())?.simp()?;
        }
        10 => {
            l.rw("par-interchange", Fwd, Subst::new())?.simp()?;
            pad(&mut l, "id[D]")?;
            l.rw("tens-interchange", Bwd, Subst::new())?;
            l.rw("m-natural", Fwd, h(&[("h", "id[R]")]))?;
            l.rw("par-interchange", Fwd, Subst::new())?.simp()?;

            r.rw("M4", Bwd, h(&[("A", "A"), ("B", "B"), ("C", "C"), ("D", "D")]))?;
            r.rw("M1", Bwd, h(&[("U", "B"), ("V", "C"), ("W", "R"), ("X", "A"), ("Y", "R"), ("Z", "D")]))?;
            r.rw_all("par-interchange", Fwd, Subst::new())?.simp()?;
            r.rw("bimod-corollary-r", Bwd, h(&[("A", "B")]))?;
        }
        11 => {
            l.rw("par-interchange", Fwd, Subst::new())?.simp()?;

            r.rw("bimod-par-action-r", Fwd, h(&[("A", "A"), ("B", "B")]))?;
            pad(&mut r, "id[(C * D)]")?;
            r.rw("par-interchange", Bwd, Subst::new())?;
            r.rw("M2", Fwd, h(&[("U", "A"), ("V", "B"), ("W", "C"), ("X", "R"), ("Y", "R"), ("Z", "D")]))?;
            r.rw("par-interchange", Fwd, Subst::new())?.simp()?;
        }
        12 => {
            l.rw("par-interchange", Fwd, Subst::new())?.simp()?;

            r.rw("bimod-par-action-l", Fwd, h(&[("A", "C"), ("B", "D")]))?;
            pad(&mut r, "id[(A * B)]")?;
            r.rw("par-interchange", Bwd, Subst::new())?;
            r.rw("M2", Bwd, h(&[("U", "A"), ("V", "R"), ("W", "R"), ("X", "B"), ("Y", "C"), ("Z", "D")]))?;
            r.rw("par-interchange", Fwd, Subst::new())?.simp()?;
        }
        13 => {
            l.rw("par-interchange", Fwd, Subst::new())?.simp()?;
            let rho_a = t("act[A] o ((eta * id[A]) * id[R]) o (l'[A] * id[R])");
            let p = l.find(&rho_a).expect("right action of A");
            l.insert_id(p, false)?;
            l.rw("par-interchange", Bwd, h(&[("f", "id[(A * R)]")]))?;
            l.rw("M2", Bwd, h(&[("U", "A"), ("V", "B"), ("W", "R"), ("X", "R"), ("Y", "C"), ("Z", "D")]))?;
            l.rw("par-interchange", Fwd, Subst::new())?.simp()?;

            r.rw("par-interchange", Fwd, Subst::new())?.simp()?;
        }
        14 => {
            let m1 = h(&[("U", "A"), ("V", "R"), ("W", "B"), ("X", "C"), ("Y", "R"), ("Z", "D")]);
            pad(&mut l, "id[D]")?;
            l.rw("tens-interchange", Bwd, Subst::new())?;
            l.rw("m-natural", Fwd, h(&[("h", "id[R]")]))?;
            l.rw("par-interchange", Fwd, Subst::new())?.simp()?;

            pad(&mut r, "id[A]")?;
            r.rw("tens-interchange", Bwd, Subst::new())?;
            r.rw("m-natural", Fwd, h(&[("g", "id[R]")]))?;
            r.rw("M1", Bwd, m1)?;
            r.rw_all("par-interchange", Fwd, Subst::new())?.simp()?;
            r.rw("bimod-tens-action-r", Bwd, h(&[("A", "A"), ("B", "B")]))?;
            r.rw("bimod-tens-action-l", Fwd, h(&[("A", "C"), ("B", "D")]))?;
            r.rw("assoc-inv-l", Fwd, h(&[("A", "R"), ("B", "C"), ("C", "D")]))?.simp()?;
        }
        _ => {}
    }
    Ok(l.meet(r)?)
}
