//! Syntactic matching of schema sides against normalized terms.
//!
//! Matching works on `⅋`-normal forms; a metavariable inside a `⅋`-list may
//! absorb any run of consecutive parts, including the empty run (the unit).
//! Every candidate is re-checked by instantiation.

use super::{instantiate, AxiomSchema, Binding, Catalogue, Direction, Equation, Subst};
use crate::term::{MorTerm, ObjExpr};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomMatch {
    pub schema_id: String,
    pub subst: Subst,
    pub direction: Direction,
}

fn match_obj(e: bool, s: &AxiomSchema, p: &ObjExpr, o: &ObjExpr, sub: Subst) -> Vec<Subst> {
    match (p, o) {
        (ObjExpr::Gen(n), _) if s.is_obj_var(n) => match sub.0.get(n) {
            Some(Binding::Obj(bound)) => {
                if bound == o {
                    vec![sub]
                } else {
                    vec![]
                }
            }
            Some(Binding::Mor(_)) => vec![],
            None => {
                let mut sub = sub;
                sub.0.insert(n.clone(), Binding::Obj(o.clone()));
                vec![sub]
            }
        },
        (ObjExpr::Tens(pl, pr), ObjExpr::Tens(ol, or)) => {
            match_obj(e, s, pl, ol, sub).into_iter().flat_map(|sub| match_obj(e, s, pr, or, sub)).collect()
        }
        (ObjExpr::Neg(pi), ObjExpr::Neg(oi)) => match_obj(e, s, pi, oi, sub),
        (ObjExpr::Par(ps), _) => match_obj_list(e, s, ps, &o.par_parts(), sub),
        _ => {
            if p == o {
                vec![sub]
            } else {
                vec![]
            }
        }
    }
}

/// How many list elements a pattern part may consume: a metavariable takes
/// any run (the empty run meaning the unit `R`), anything else exactly one.
fn takes(absorbs: bool, empty: bool, available: usize) -> Vec<usize> {
    if absorbs {
        (1..=available).chain(empty.then_some(0)).collect()
    } else if available > 0 {
        vec![1]
    } else {
        vec![]
    }
}

fn match_obj_list(e: bool, s: &AxiomSchema, ps: &[ObjExpr], os: &[ObjExpr], sub: Subst) -> Vec<Subst> {
    let Some((p, rest)) = ps.split_first() else {
        return if os.is_empty() { vec![sub] } else { vec![] };
    };
    let is_var = matches!(p, ObjExpr::Gen(n) if s.is_obj_var(n));
    let mut out = Vec::new();
    for take in takes(is_var, e, os.len()) {
        let piece = match take {
            0 => ObjExpr::UnitPar,
            1 => os[0].clone(),
            _ => ObjExpr::Par(os[..take].to_vec()),
        };
        for sub in match_obj(e, s, p, &piece, sub.clone()) {
            out.extend(match_obj_list(e, s, rest, &os[take..], sub));
        }
    }
    out
}

fn match_mor(e: bool, s: &AxiomSchema, p: &MorTerm, t: &MorTerm, sub: Subst) -> Vec<Subst> {
    use MorTerm::*;
    let objs = |pairs: &[(&ObjExpr, &ObjExpr)], sub: Subst| -> Vec<Subst> {
        let mut acc = vec![sub];
        for (po, to) in pairs {
            acc = acc.into_iter().flat_map(|sub| match_obj(e, s, po, to, sub)).collect();
        }
        acc
    };
    match (p, t) {
        (FreeGen { name, .. }, _) if s.is_mor_var(name) => match sub.0.get(name) {
            Some(Binding::Mor(bound)) => {
                if bound == t {
                    vec![sub]
                } else {
                    vec![]
                }
            }
            Some(Binding::Obj(_)) => vec![],
            None => {
                let mut sub = sub;
                sub.0.insert(name.clone(), Binding::Mor(t.clone()));
                vec![sub]
            }
        },
        (Id(po), Id(to)) => match_obj(e, s, po, to, sub),
        (Id(po), ParM(_)) => match t.identity_object() {
            Some(to) => match_obj(e, s, po, &to, sub),
            None => vec![],
        },
        (Comp(pa, pb), Comp(ta, tb)) | (TensM(pa, pb), TensM(ta, tb)) => {
            if std::mem::discriminant(p) != std::mem::discriminant(t) {
                return vec![];
            }
            match_mor(e, s, pa, ta, sub).into_iter().flat_map(|sub| match_mor(e, s, pb, tb, sub)).collect()
        }
        (ParM(ps), _) => {
            let ts = match t {
                ParM(ts) => ts.clone(),
                Id(ObjExpr::UnitPar) => vec![],
                other => vec![other.clone()],
            };
            match_mor_list(e, s, ps, &ts, sub)
        }
        (Assoc { x, y, z, inverse }, Assoc { x: tx, y: ty, z: tz, inverse: ti }) if inverse == ti => {
            objs(&[(x, tx), (y, ty), (z, tz)], sub)
        }
        (LUnit { x, inverse }, LUnit { x: tx, inverse: ti }) | (RUnit { x, inverse }, RUnit { x: tx, inverse: ti })
            if inverse == ti && std::mem::discriminant(p) == std::mem::discriminant(t) =>
        {
            objs(&[(x, tx)], sub)
        }
        (Mid4(a, b, c, d), Mid4(ta, tb, tc, td)) => objs(&[(a, ta), (b, tb), (c, tc), (d, td)], sub),
        (GammaG(a), GammaG(ta)) | (TauG(a), TauG(ta)) | (Act(a), Act(ta))
            if std::mem::discriminant(p) == std::mem::discriminant(t) =>
        {
            objs(&[(a, ta)], sub)
        }
        _ => {
            if p == t {
                vec![sub]
            } else {
                vec![]
            }
        }
    }
}

fn match_mor_list(e: bool, s: &AxiomSchema, ps: &[MorTerm], ts: &[MorTerm], sub: Subst) -> Vec<Subst> {
    let Some((p, rest)) = ps.split_first() else {
        return if ts.is_empty() { vec![sub] } else { vec![] };
    };
    let absorbs = matches!(p, MorTerm::FreeGen { name, .. } if s.is_mor_var(name))
        || matches!(p, MorTerm::Id(ObjExpr::Gen(n)) if s.is_obj_var(n));
    let mut out = Vec::new();
    for take in takes(absorbs, e, ts.len()) {
        let piece = match take {
            0 => MorTerm::Id(ObjExpr::UnitPar),
            1 => ts[0].clone(),
            _ => MorTerm::ParM(ts[..take].to_vec()),
        };
        for sub in match_mor(e, s, p, &piece, sub.clone()) {
            out.extend(match_mor_list(e, s, rest, &ts[take..], sub));
        }
    }
    out
}

/// All substitutions under which `pattern` (a side of `s`) instantiates to
/// exactly `term`. Object metavariables fixed only by morphism types are
/// filled in; every returned substitution is complete and verified.
pub fn match_pattern(s: &AxiomSchema, pattern: &MorTerm, term: &MorTerm) -> Vec<Subst> {
    matches(true, s, pattern, term)
}

/// Like [`match_pattern`], but a metavariable inside a `⅋`-list never
/// absorbs the empty run. Used when enumerating rewrites, where such
/// matches only insert or remove units.
pub fn match_pattern_proper(s: &AxiomSchema, pattern: &MorTerm, term: &MorTerm) -> Vec<Subst> {
    matches(false, s, pattern, term)
}

fn matches(e: bool, s: &AxiomSchema, pattern: &MorTerm, term: &MorTerm) -> Vec<Subst> {
    let mut out = Vec::new();
    for sub in match_mor(e, s, pattern, term, Subst::new()) {
        let sub = s.complete(&sub);
        if s.check_subst(&sub).is_ok() && s.substitute(pattern, &sub) == *term && !out.contains(&sub) {
            out.push(sub);
        }
    }
    out
}

/// Finds a schema instance equal to `eq` in either orientation. Ties are
/// broken by catalogue order, then forward before backward, then by the
/// order substitutions are enumerated. `lhs = lhs` matches the `refl`
/// pseudo-schema.
pub fn match_axiom(catalogue: &Catalogue, eq: &Equation) -> Option<AxiomMatch> {
    if eq.lhs == eq.rhs {
        return Some(AxiomMatch { schema_id: "refl".into(), subst: Subst::new(), direction: Direction::Forward });
    }
    for s in catalogue.schemas() {
        for dir in [Direction::Forward, Direction::Backward] {
            let (src, _) = s.side(dir);
            for sub in match_pattern(s, src, &eq.lhs) {
                let Ok(inst) = instantiate(s, &sub) else { continue };
                let inst = if dir == Direction::Forward { inst } else { inst.flipped() };
                if inst.lhs == eq.lhs && inst.rhs == eq.rhs {
                    return Some(AxiomMatch { schema_id: s.id.clone(), subst: sub, direction: dir });
                }
            }
        }
    }
    None
}
