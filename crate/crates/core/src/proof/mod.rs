//! Pasting-proof certificates: the trusted rewrite kernel, the script format,
//! a tactic layer that produces certificates, and bounded proof search.

mod builder;
mod script;
mod search;

use std::fmt;

use crate::axioms::{instantiate, Catalogue, Direction, Equation, InstantiateError, Subst};
use crate::term::{MorTerm, ObjExpr, Path, PathElem, PathError, TypeError};

pub use builder::{BuildError, ProofBuilder};
pub use script::{parse_script, print_script, ProofScript, ScriptError};
pub use search::{neighbours, search_equality, SearchBudget, SearchOutcome, SearchStats};

/// One localized axiom-instance rewrite.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RewriteStep {
    pub path: Path,
    pub schema_id: String,
    pub direction: Direction,
    pub subst: Subst,
}

impl fmt::Display for RewriteStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step {} {} {} {}", self.path, self.schema_id, self.direction, self.subst)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PastingProof {
    pub steps: Vec<RewriteStep>,
}

impl PastingProof {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Schema ids used, in first-use order.
    pub fn schema_ids(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for s in &self.steps {
            if !out.contains(&s.schema_id) {
                out.push(s.schema_id.clone());
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum StepError {
    #[error("unknown schema `{0}`")]
    UnknownSchema(String),
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    Instantiate(#[from] InstantiateError),
    #[error("pattern mismatch at {path}: expected {expected}, found {found}")]
    Mismatch { path: String, expected: String, found: String },
    #[error("rewritten term is ill-typed: {0}")]
    IllTyped(TypeError),
    #[error("rewrite changed the type of the term")]
    TypeChanged,
}

/// The result of one rewrite: the new term and, when it still exists as a
/// single addressable sub-term, where the inserted instance ended up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rewritten {
    pub term: MorTerm,
    pub at: Option<Path>,
}

/// Applies one step. The sub-term at `step.path` must equal the instance of
/// the source side exactly; it is replaced by the target instance and the
/// whole term is renormalized.
pub fn apply_step(cat: &Catalogue, t: &MorTerm, step: &RewriteStep) -> Result<Rewritten, StepError> {
    let t = t.normalize();
    if step.schema_id == "refl" {
        step.path.get(&t)?;
        return Ok(Rewritten { at: Some(step.path.clone()), term: t });
    }
    let schema = cat.get(&step.schema_id).ok_or_else(|| StepError::UnknownSchema(step.schema_id.clone()))?;
    let found = step.path.get(&t)?;
    let inst = instantiate(schema, &step.subst)?;
    let (src, tgt) = match step.direction {
        Direction::Forward => (inst.lhs, inst.rhs),
        Direction::Backward => (inst.rhs, inst.lhs),
    };
    if src != found {
        return Err(StepError::Mismatch {
            path: step.path.to_string(),
            expected: src.to_string(),
            found: found.to_string(),
        });
    }
    let before = t.infer_type().map_err(StepError::IllTyped)?;
    let at = landing(&t, &step.path, &tgt);
    let term = step.path.replace(&t, tgt)?.normalize();
    let after = term.infer_type().map_err(StepError::IllTyped)?;
    if before != after {
        return Err(StepError::TypeChanged);
    }
    Ok(Rewritten { term, at })
}

/// Address of `new` after it is written at `path` of `t` and flattened.
fn landing(t: &MorTerm, path: &Path, new: &MorTerm) -> Option<Path> {
    let Some((last, parent)) = path.0.split_last() else {
        return Some(Path::root());
    };
    let parent = Path(parent.to_vec());
    let Ok(MorTerm::ParM(parts)) = parent.get(t) else {
        return Some(path.clone());
    };
    let (i, j) = match *last {
        PathElem::Child(i) => (i, i),
        PathElem::Segment(i, j) => (i, j),
    };
    let remaining = parts.len() - (j - i + 1);
    match new {
        MorTerm::Id(ObjExpr::UnitPar) => None,
        _ if remaining == 0 => Some(parent),
        MorTerm::ParM(ps) => Some(parent.segment(i, i + ps.len() - 1)),
        _ => Some(parent.child(i)),
    }
}

/// An equation together with a certificate the kernel accepted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifiedEquation {
    pub equation: Equation,
    pub proof: PastingProof,
}

/// Why a certificate was rejected. `step` counts from 1; a final mismatch
/// is reported at `steps + 1`.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("rejected at step {step}: {reason}")]
pub struct Rejection {
    pub step: usize,
    pub reason: RejectReason,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum RejectReason {
    #[error(transparent)]
    Step(#[from] StepError),
    #[error("proof ends at {reached}, not at the right-hand side")]
    WrongEnd { reached: String },
}

/// Folds the steps over `eq.lhs` and accepts iff the result is `eq.rhs`.
pub fn verify_proof(cat: &Catalogue, eq: &Equation, proof: &PastingProof) -> Result<VerifiedEquation, Rejection> {
    let mut cur = eq.lhs.clone();
    for (k, step) in proof.steps.iter().enumerate() {
        cur = apply_step(cat, &cur, step).map_err(|e| Rejection { step: k + 1, reason: e.into() })?.term;
    }
    if cur != eq.rhs {
        return Err(Rejection {
            step: proof.steps.len() + 1,
            reason: RejectReason::WrongEnd { reached: cur.to_string() },
        });
    }
    Ok(VerifiedEquation { equation: eq.clone(), proof: proof.clone() })
}

/// Replays `steps` from `start`, returning every intermediate term and the
/// address each step's result landed at.
pub fn replay(cat: &Catalogue, start: &MorTerm, steps: &[RewriteStep]) -> Result<Vec<Rewritten>, (usize, StepError)> {
    let mut out = Vec::with_capacity(steps.len());
    let mut cur = start.normalize();
    for (k, s) in steps.iter().enumerate() {
        let r = apply_step(cat, &cur, s).map_err(|e| (k, e))?;
        cur = r.term.clone();
        out.push(r);
    }
    Ok(out)
}

/// Turns a rewrite sequence `start -> end` into one `end -> start`.
/// Fails if some step's result vanished under unit collapse.
pub fn invert(cat: &Catalogue, start: &MorTerm, steps: &[RewriteStep]) -> Result<Vec<RewriteStep>, (usize, StepError)> {
    let trace = replay(cat, start, steps)?;
    let mut out = Vec::with_capacity(steps.len());
    for (k, (s, r)) in steps.iter().zip(&trace).enumerate().rev() {
        let at = r.at.clone().ok_or((
            k,
            StepError::Mismatch {
                path: s.path.to_string(),
                expected: "an addressable result".into(),
                found: "a collapsed unit".into(),
            },
        ))?;
        out.push(RewriteStep {
            path: at,
            schema_id: s.schema_id.clone(),
            direction: s.direction.flip(),
            subst: s.subst.clone(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
