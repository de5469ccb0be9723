//! Random axiom instances and certificate mutants shared by the fuzz tests.
#![allow(dead_code)]

use m4core::axioms::{instantiate, AxiomSchema, Catalogue, Direction, Equation, Subst};
use m4core::proof::{apply_step, PastingProof, RewriteStep};
use m4core::term::{MorTerm, ObjExpr, Path, PathElem};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn random_object(rng: &mut StdRng, depth: u32, negation: bool) -> ObjExpr {
    if depth == 0 || rng.gen_bool(0.5) {
        return match rng.gen_range(0..5) {
            0 => ObjExpr::UnitTens,
            1 => ObjExpr::UnitPar,
            k => ObjExpr::gen(["A", "B", "C"][k - 2]),
        };
    }
    let l = random_object(rng, depth - 1, negation);
    match rng.gen_range(0..if negation { 3 } else { 2 }) {
        0 => ObjExpr::tens(l, random_object(rng, depth - 1, negation)),
        1 => ObjExpr::par(l, random_object(rng, depth - 1, negation)).normalize_par(),
        _ => ObjExpr::neg(l),
    }
}

/// A ground instance of a random schema: objects are random, morphism
/// metavariables become free generators of the right type.
pub fn random_instance(rng: &mut StdRng, cat: &Catalogue) -> (AxiomSchema, Subst, Equation) {
    let s = cat.schemas().choose(rng).unwrap().clone();
    let mut sub = Subst::new();
    for v in &s.obj_vars {
        sub = sub.obj(v, random_object(rng, 2, cat.has_negation()));
    }
    for (i, v) in s.mor_vars.iter().enumerate() {
        let dom = sub.get_obj(&v.dom).unwrap().clone();
        let cod = sub.get_obj(&v.cod).unwrap().clone();
        sub = sub.mor(&v.name, MorTerm::free(format!("f{i}"), dom, cod));
    }
    let eq = instantiate(&s, &sub).unwrap_or_else(|e| panic!("{}: {e}", s.id));
    (s, sub, eq)
}

/// Corrupted copies of a certificate whose every step changes the term:
/// a dangling path, a wrong schema, a flipped direction, a foreign binding
/// and a missing last step. Each must be rejected.
pub fn mutants(rng: &mut StdRng, cat: &Catalogue, proof: &PastingProof) -> Vec<PastingProof> {
    let mut out = Vec::new();
    let n = proof.steps.len();
    if n == 0 {
        return out;
    }
    let k = rng.gen_range(0..n);
    let with = |k: usize, step: RewriteStep| {
        let mut p = proof.clone();
        p.steps[k] = step;
        p
    };
    let s = proof.steps[k].clone();

    let mut deep = s.clone();
    deep.path = Path(s.path.0.iter().cloned().chain([PathElem::Child(17)]).collect());
    out.push(with(k, deep));

    let other = cat.schemas().iter().filter(|x| x.id != s.schema_id).collect::<Vec<_>>();
    let mut renamed = s.clone();
    renamed.schema_id = other.choose(rng).unwrap().id.clone();
    out.push(with(k, renamed));

    let mut flipped = s.clone();
    flipped.direction = match s.direction {
        Direction::Forward => Direction::Backward,
        Direction::Backward => Direction::Forward,
    };
    out.push(with(k, flipped));

    let objs: Vec<String> = s.subst.0.keys().filter(|v| s.subst.get_obj(v).is_some()).cloned().collect();
    if let Some(v) = objs.choose(rng) {
        let mut bent = s.clone();
        bent.subst = bent.subst.obj(v, ObjExpr::gen("Zq"));
        out.push(with(k, bent));
    }

    let mut short = proof.clone();
    short.steps.pop();
    out.push(short);
    out
}

/// Every step of `proof` changes the term it is applied to.
pub fn strictly_moving(cat: &Catalogue, eq: &Equation, proof: &PastingProof) -> bool {
    let mut cur = eq.lhs.clone();
    for s in &proof.steps {
        let next = apply_step(cat, &cur, s).unwrap().term;
        if next == cur {
            return false;
        }
        cur = next;
    }
    true
}
