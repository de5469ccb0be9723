use std::collections::BTreeMap;

use super::ThinModel;
use crate::axioms::Equation;
use crate::par;
use crate::term::{MorTerm, ObjExpr};

/// Assignment of carrier elements to object generators.
pub type Env = BTreeMap<String, usize>;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("generator {0} is not assigned")]
    Unbound(String),
    #[error("the model has no negation table")]
    NoNegation,
    #[error("ill-typed term: {0}")]
    IllTyped(String),
    /// The model lacks the morphism a leaf asks for.
    #[error("{term} needs {dom} <= {cod}")]
    NoMorphism { term: String, dom: String, cod: String },
}

/// The unique morphism a term denotes: its evaluated endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Denotation {
    pub dom: usize,
    pub cod: usize,
}

pub fn eval_object(m: &ThinModel, o: &ObjExpr, env: &Env) -> Result<usize, EvalError> {
    Ok(match o {
        ObjExpr::Gen(n) => *env.get(n).ok_or_else(|| EvalError::Unbound(n.clone()))?,
        ObjExpr::UnitTens => m.unit_tens,
        ObjExpr::UnitPar => m.unit_par,
        ObjExpr::Tens(a, b) => m.tens(eval_object(m, a, env)?, eval_object(m, b, env)?),
        ObjExpr::Par(parts) => {
            let mut acc = m.unit_par;
            for p in parts {
                acc = m.par(acc, eval_object(m, p, env)?);
            }
            acc
        }
        ObjExpr::Neg(a) => m.neg(eval_object(m, a, env)?).ok_or(EvalError::NoNegation)?,
    })
}

fn leaves<'t>(t: &'t MorTerm, out: &mut Vec<&'t MorTerm>) {
    let kids = t.children();
    if kids.is_empty() {
        out.push(t);
    }
    for k in kids {
        leaves(k, out);
    }
}

fn leaf_denotes(m: &ThinModel, leaf: &MorTerm, env: &Env) -> Result<(), EvalError> {
    let (d, c) = leaf.infer_type().map_err(|e| EvalError::IllTyped(e.to_string()))?;
    let (d, c) = (eval_object(m, &d, env)?, eval_object(m, &c, env)?);
    if m.leq(d, c) {
        Ok(())
    } else {
        Err(EvalError::NoMorphism { term: leaf.to_string(), dom: m.carrier[d].clone(), cod: m.carrier[c].clone() })
    }
}

/// Evaluates a well-typed term. It denotes iff every leaf does: composites
/// then exist by transitivity and tensors by monotonicity.
pub fn eval_term(m: &ThinModel, t: &MorTerm, env: &Env) -> Result<Denotation, EvalError> {
    let (d, c) = t.infer_type().map_err(|e| EvalError::IllTyped(e.to_string()))?;
    let mut ls = Vec::new();
    leaves(t, &mut ls);
    for leaf in ls {
        leaf_denotes(m, leaf, env)?;
    }
    Ok(Denotation { dom: eval_object(m, &d, env)?, cod: eval_object(m, &c, env)? })
}

/// Both sides must denote; being parallel, they are then equal.
pub fn check_equation_in_model(m: &ThinModel, eq: &Equation, env: &Env) -> Result<Denotation, EvalError> {
    let l = eval_term(m, &eq.lhs, env)?;
    eval_term(m, &eq.rhs, env)?;
    Ok(l)
}

/// Result of checking an equation under every assignment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sweep {
    pub assignments: usize,
    /// Assignments skipped because a free generator has no denotation.
    pub vacuous: usize,
    /// First failing assignment in canonical order.
    pub failure: Option<(Env, EvalError)>,
}

impl Sweep {
    pub fn ok(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks `eq` under every assignment of `domain` elements to its object
/// generators (sorted by name, first generator slowest). Free generator
/// morphisms are hypotheses: assignments where one of them has no
/// denotation are counted as vacuous.
pub fn sweep_equation(m: &ThinModel, eq: &Equation, domain: &[usize]) -> Sweep {
    let mut gens = eq.generators();
    gens.sort();
    let k = domain.len();
    let total = k.pow(gens.len() as u32);
    let mut hyps = Vec::new();
    for side in [&eq.lhs, &eq.rhs] {
        let mut ls = Vec::new();
        leaves(side, &mut ls);
        hyps.extend(ls.into_iter().filter(|l| matches!(l, MorTerm::FreeGen { .. })).cloned());
    }
    let idx: Vec<usize> = (0..total).collect();
    let results = par::map(&idx, |&i| {
        let mut env = Env::new();
        let mut rest = i;
        for g in gens.iter().rev() {
            env.insert(g.clone(), domain[rest % k]);
            rest /= k;
        }
        if hyps.iter().any(|h| leaf_denotes(m, h, &env).is_err()) {
            return (true, None);
        }
        (false, check_equation_in_model(m, eq, &env).err().map(|e| (env, e)))
    });
    Sweep {
        assignments: total,
        vacuous: results.iter().filter(|r| r.0).count(),
        failure: results.into_iter().find_map(|r| r.1),
    }
}
