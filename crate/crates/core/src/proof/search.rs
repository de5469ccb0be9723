//! Bounded bidirectional breadth-first proof search.
//!
//! States are normalized terms with every composite nested to the right, so
//! the search works modulo `comp-assoc`: a move is one schema instance,
//! found as a sub-term or as a window of a composite chain, together with
//! the re-bracketing steps around it. Each level expands the smaller
//! frontier; expansion runs in parallel but is merged in frontier order, so
//! the returned certificate depends only on the budget. Moves are
//! enumerated by catalogue index, then position (pre-order), then forward
//! before backward. Moves whose source side is a bare metavariable or an
//! identity are never enumerated: they apply almost everywhere and only
//! insert structure, which the opposite frontier removes instead.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use super::{invert, verify_proof, PastingProof, ProofBuilder, RewriteStep};
use crate::axioms::{AxiomSchema, Catalogue, Direction, Equation, Subst};
use crate::par;
use crate::term::{MorTerm, Path};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Longest certificate considered.
    pub max_steps: usize,
    /// Terms larger than this (node count) are discarded.
    pub max_term_size: usize,
    pub timeout: Duration,
    /// Cap on distinct states visited across both sides.
    pub max_states: usize,
}

impl SearchBudget {
    pub fn steps(max_steps: usize) -> Self {
        SearchBudget { max_steps, ..Self::default() }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_steps: 12, max_term_size: 200, timeout: Duration::from_secs(30), max_states: 200_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Proved(PastingProof),
    /// Nothing found within the budget. Not a disproof.
    Unknown(String),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub states: usize,
    pub depth: usize,
}

fn enumerable(s: &AxiomSchema, dir: Direction) -> bool {
    if s.id == "comp-assoc" {
        return false;
    }
    let (src, tgt) = s.side(dir);
    let bare = matches!(src, MorTerm::FreeGen { name, .. } if s.mor_vars.iter().any(|v| &v.name == name));
    if bare || src.identity_object().is_some() {
        return false;
    }
    // Every metavariable of the target must be fixed by the source.
    let mut src_vars = Vec::new();
    collect_vars(s, src, &mut src_vars);
    let mut tgt_vars = Vec::new();
    collect_vars(s, tgt, &mut tgt_vars);
    let determined = |v: &String| {
        src_vars.contains(v) || s.mor_vars.iter().any(|m| (&m.dom == v || &m.cod == v) && src_vars.contains(&m.name))
    };
    tgt_vars.iter().all(determined)
}

fn collect_vars(s: &AxiomSchema, t: &MorTerm, out: &mut Vec<String>) {
    for g in t.object_generators() {
        if s.obj_vars.contains(&g) && !out.contains(&g) {
            out.push(g);
        }
    }
    let mut stack = vec![t];
    while let Some(n) = stack.pop() {
        if let MorTerm::FreeGen { name, .. } = n {
            if s.mor_vars.iter().any(|m| &m.name == name) && !out.contains(name) {
                out.push(name.clone());
            }
        }
        stack.extend(n.children());
    }
}

/// Every move from `t` (assumed right-nested), in canonical order, with
/// the kernel steps that realize it.
pub fn neighbours(cat: &Catalogue, t: &MorTerm) -> Vec<(Vec<RewriteStep>, MorTerm)> {
    let base = ProofBuilder::new(cat, t);
    let mut out = Vec::new();
    for s in cat.schemas() {
        for dir in [Direction::Forward, Direction::Backward] {
            if !enumerable(s, dir) {
                continue;
            }
            for c in base.candidates(s, dir, &Subst::new(), &Path::root(), false, false) {
                let mut b = base.clone();
                if b.apply_candidate(&s.id, dir, c).is_ok() {
                    out.push((b.steps().to_vec(), b.term().clone()));
                }
            }
        }
    }
    out
}

type Parents = HashMap<MorTerm, Option<(MorTerm, Vec<RewriteStep>)>>;

fn chain_to(parents: &Parents, end: &MorTerm) -> Vec<RewriteStep> {
    let mut steps = Vec::new();
    let mut cur = end.clone();
    let mut moves = Vec::new();
    while let Some(Some((prev, mv))) = parents.get(&cur) {
        moves.push(mv.clone());
        cur = prev.clone();
    }
    for mv in moves.into_iter().rev() {
        steps.extend(mv);
    }
    steps
}

/// Searches for a certificate of `eq` within `budget`. Any proof returned
/// has been re-checked by the kernel.
pub fn search_equality(cat: &Catalogue, eq: &Equation, budget: &SearchBudget) -> (SearchOutcome, SearchStats) {
    let start = Instant::now();
    let mut stats = SearchStats::default();
    if eq.lhs == eq.rhs {
        return (SearchOutcome::Proved(PastingProof::default()), stats);
    }
    let l0 = ProofBuilder::new(cat, &eq.lhs);
    let r0 = ProofBuilder::new(cat, &eq.rhs);
    let prefix = (l0.steps().to_vec(), r0.steps().to_vec());
    let (ls, rs) = (l0.term().clone(), r0.term().clone());
    let mut fwd: Parents = HashMap::from([(ls.clone(), None)]);
    let mut bwd: Parents = HashMap::from([(rs.clone(), None)]);
    if ls == rs {
        if let Some(p) = join(cat, eq, &prefix, &fwd, &bwd, &ls) {
            return (SearchOutcome::Proved(p), stats);
        }
    }
    let mut fwd_frontier = vec![ls];
    let mut bwd_frontier = vec![rs];
    let (mut fwd_depth, mut bwd_depth) = (0, 0);

    while fwd_depth + bwd_depth < budget.max_steps {
        if start.elapsed() > budget.timeout {
            return (SearchOutcome::Unknown("timeout".into()), stats);
        }
        let forward_side = match (fwd_frontier.is_empty(), bwd_frontier.is_empty()) {
            (true, true) => break,
            (false, true) => true,
            (true, false) => false,
            _ => fwd_frontier.len() <= bwd_frontier.len(),
        };
        let (frontier, mine, other) =
            if forward_side { (&mut fwd_frontier, &mut fwd, &bwd) } else { (&mut bwd_frontier, &mut bwd, &fwd) };
        if frontier.is_empty() {
            break;
        }
        let expanded =
            par::map(frontier, |t| if start.elapsed() > budget.timeout { Vec::new() } else { neighbours(cat, t) });
        let mut next = Vec::new();
        for (parent, succ) in frontier.iter().zip(expanded) {
            for (step, term) in succ {
                if term.size() > budget.max_term_size || mine.contains_key(&term) {
                    continue;
                }
                mine.insert(term.clone(), Some((parent.clone(), step)));
                if other.contains_key(&term) {
                    if let Some(p) = join(
                        cat,
                        eq,
                        &prefix,
                        fwd_or(forward_side, mine, other),
                        bwd_or(forward_side, mine, other),
                        &term,
                    ) {
                        stats.states = fwd_len(mine, other);
                        stats.depth = p.len();
                        return (SearchOutcome::Proved(p), stats);
                    }
                }
                next.push(term);
            }
        }
        stats.states = fwd_len(mine, other);
        if stats.states > budget.max_states {
            return (SearchOutcome::Unknown("state limit".into()), stats);
        }
        *frontier = next;
        if forward_side {
            fwd_depth += 1;
        } else {
            bwd_depth += 1;
        }
    }
    (SearchOutcome::Unknown(format!("no proof within {} steps", budget.max_steps)), stats)
}

fn fwd_len(a: &Parents, b: &Parents) -> usize {
    a.len() + b.len()
}

fn fwd_or<'a>(forward_side: bool, mine: &'a Parents, other: &'a Parents) -> &'a Parents {
    if forward_side {
        mine
    } else {
        other
    }
}

fn bwd_or<'a>(forward_side: bool, mine: &'a Parents, other: &'a Parents) -> &'a Parents {
    if forward_side {
        other
    } else {
        mine
    }
}

fn join(
    cat: &Catalogue,
    eq: &Equation,
    prefix: &(Vec<RewriteStep>, Vec<RewriteStep>),
    fwd: &Parents,
    bwd: &Parents,
    meet: &MorTerm,
) -> Option<PastingProof> {
    let mut steps = prefix.0.clone();
    steps.extend(chain_to(fwd, meet));
    let mut back = prefix.1.clone();
    back.extend(chain_to(bwd, meet));
    let inv = invert(cat, &eq.rhs, &back);
    steps.extend(inv.ok()?);
    let proof = PastingProof { steps };
    let v = verify_proof(cat, eq, &proof);
    v.ok().map(|v| v.proof)
}
