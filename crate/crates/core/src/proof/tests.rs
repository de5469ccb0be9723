use proptest::prelude::*;

use super::*;
use crate::term::{parse_object, parse_term};

fn cat() -> &'static Catalogue {
    Catalogue::standard(false)
}

fn t(s: &str) -> MorTerm {
    parse_term(s).unwrap()
}

fn o(s: &str) -> ObjExpr {
    parse_object(s).unwrap()
}

fn m2_subst() -> Subst {
    ["U", "V", "W", "X", "Y", "Z"].iter().fold(Subst::new(), |s, v| s.obj(v, o(&format!("{v}1"))))
}

#[test]
fn m2_forward_at_root() {
    let s = cat().get("M2").unwrap();
    let eq = instantiate(s, &m2_subst()).unwrap();
    let step =
        RewriteStep { path: Path::root(), schema_id: "M2".into(), direction: Direction::Forward, subst: m2_subst() };
    let r = apply_step(cat(), &eq.lhs, &step).unwrap();
    assert_eq!(r.term, eq.rhs);
    let back = RewriteStep { direction: Direction::Backward, ..step };
    assert_eq!(apply_step(cat(), &eq.rhs, &back).unwrap().term, eq.lhs);
}

#[test]
fn refl_leaves_term_unchanged() {
    let x = t("mu o (eta * eta)");
    let step = RewriteStep {
        path: Path::root(),
        schema_id: "refl".into(),
        direction: Direction::Forward,
        subst: Subst::new(),
    };
    assert_eq!(apply_step(cat(), &x, &step).unwrap().term, x);
}

#[test]
fn bifunctoriality_backward_splits_tensor() {
    let x = t("(gen(g, B, C) o gen(f, A, B)) * (gen(k, E, F) o gen(h, D, E))");
    let sub = Subst::new()
        .obj("A", o("A"))
        .obj("B", o("B"))
        .obj("C", o("C"))
        .obj("D", o("D"))
        .obj("E", o("E"))
        .obj("F", o("F"))
        .mor("f", t("gen(f, A, B)"))
        .mor("g", t("gen(g, B, C)"))
        .mor("h", t("gen(h, D, E)"))
        .mor("k", t("gen(k, E, F)"));
    let step = RewriteStep {
        path: Path::root(),
        schema_id: "tens-interchange".into(),
        direction: Direction::Backward,
        subst: sub,
    };
    let r = apply_step(cat(), &x, &step).unwrap();
    assert_eq!(r.term, t("(gen(g, B, C) * gen(k, E, F)) o (gen(f, A, B) * gen(h, D, E))"));
}

#[test]
fn mismatch_and_bad_path_are_reported() {
    let x = t("mu o (eta * id[R])");
    let step = RewriteStep {
        path: "0".parse().unwrap(),
        schema_id: "mu-unit-l".into(),
        direction: Direction::Forward,
        subst: Subst::new(),
    };
    assert!(matches!(apply_step(cat(), &x, &step), Err(StepError::Mismatch { .. })));
    let step = RewriteStep { path: "5".parse().unwrap(), ..step };
    assert!(matches!(apply_step(cat(), &x, &step), Err(StepError::Path(_))));
}

#[test]
fn empty_proof_accepts_only_syntactic_equality() {
    let a = MorTerm::id(o("A"));
    let eq = Equation::new(a.clone(), a).unwrap();
    assert!(verify_proof(cat(), &eq, &PastingProof::default()).is_ok());
    let eq = Equation::new(t("l[R]"), t("mu o (eta * id[R])")).unwrap();
    let err = verify_proof(cat(), &eq, &PastingProof::default()).unwrap_err();
    assert_eq!(err.step, 1);
}

#[test]
fn result_lands_on_a_segment_after_flattening() {
    // id[(A % B)] inside a par list expands into two parts.
    let x = t("(l[A] o l'[A]) % id[C]");
    let step = RewriteStep {
        path: "0".parse().unwrap(),
        schema_id: "lunit-inv-r".into(),
        direction: Direction::Forward,
        subst: Subst::new().obj("A", o("A")),
    };
    let r = apply_step(cat(), &x, &step).unwrap();
    assert_eq!(r.term, t("id[(A % C)]"));
    assert_eq!(r.at, Some("0".parse().unwrap()));
    let x = t("(l[(A % B)] o l'[(A % B)]) * id[C]");
    let step = RewriteStep { path: "0".parse().unwrap(), subst: Subst::new().obj("A", o("A % B")), ..step };
    let r = apply_step(cat(), &x, &step).unwrap();
    assert_eq!(r.at, Some("0".parse().unwrap()));
}

#[test]
fn search_finds_axiom_instance_in_one_step() {
    let eq = Equation::new(t("mu o (eta * id[R])"), t("l[R]")).unwrap();
    let (out, _) = search_equality(cat(), &eq, &SearchBudget::steps(4));
    match out {
        SearchOutcome::Proved(p) => {
            assert_eq!(p.len(), 1);
            assert_eq!(p.steps[0].schema_id, "mu-unit-l");
        }
        other => panic!("{other:?}"),
    }
    let a = MorTerm::id(o("A"));
    let (out, _) = search_equality(cat(), &Equation::new(a.clone(), a).unwrap(), &SearchBudget::steps(4));
    assert_eq!(out, SearchOutcome::Proved(PastingProof::default()));
}

#[test]
fn script_round_trip() {
    let eq = Equation::new(t("mu o (eta * id[R])"), t("l[R]")).unwrap();
    let proof = PastingProof {
        steps: vec![RewriteStep {
            path: Path::root(),
            schema_id: "mu-unit-l".into(),
            direction: Direction::Forward,
            subst: Subst::new(),
        }],
    };
    let text = print_script(&eq, &proof);
    assert_eq!(text, "prove mu o (eta * id[R]) = l[R]\nstep . mu-unit-l fwd {}\n");
    let back = parse_script(&format!("# header\n{text}")).unwrap();
    assert_eq!(back.equation, eq);
    assert_eq!(back.proof, proof);
    let sub = script::parse_subst("{A=(B % C), f=gen(f, A, (A * B)) o id[A]}", 1).unwrap();
    assert_eq!(sub.get_obj("A"), Some(&o("B % C")));
    assert!(parse_script("step . x fwd {}").is_err());
}

#[test]
fn builder_reassociates_and_simplifies() {
    let lhs = t("(id[B] o gen(f, A, B)) o id[A]");
    let mut b = ProofBuilder::new(cat(), &lhs);
    b.simp().unwrap();
    assert_eq!(b.term(), &t("gen(f, A, B)"));
    let rhs = ProofBuilder::new(cat(), &t("gen(f, A, B)"));
    let proof = b.meet(rhs).unwrap();
    let eq = Equation::new(lhs, t("gen(f, A, B)")).unwrap();
    verify_proof(cat(), &eq, &proof).unwrap();
}

#[test]
fn builder_rewrites_inside_chain_windows() {
    // a' o a sits in the middle of a longer chain.
    let x = t("gen(g, ((A * B) * C), D) o a'[A,B,C] o a[A,B,C] o gen(f, E, ((A * B) * C))");
    let mut b = ProofBuilder::new(cat(), &x);
    b.rw("assoc-inv-l", Direction::Forward, Subst::new()).unwrap().simp().unwrap();
    assert_eq!(b.term(), &t("gen(g, ((A * B) * C), D) o gen(f, E, ((A * B) * C))"));
}

fn arb_ground_instance() -> impl Strategy<Value = (usize, Vec<ObjExpr>)> {
    let obj = prop_oneof![Just(o("A")), Just(o("B")), Just(o("R")), Just(o("I")), Just(o("A % B")), Just(o("A * B"))];
    (0..cat().schemas().len(), proptest::collection::vec(obj, 8))
}

fn generic(s: &crate::axioms::AxiomSchema, objs: &[ObjExpr]) -> Subst {
    let mut sub = Subst::new();
    for (i, v) in s.obj_vars.iter().enumerate() {
        sub = sub.obj(v, objs[i % objs.len()].clone());
    }
    for v in &s.mor_vars {
        let (d, c) = (sub.get_obj(&v.dom).unwrap().clone(), sub.get_obj(&v.cod).unwrap().clone());
        sub = sub.mor(&v.name, MorTerm::free(format!("{}0", v.name), d, c));
    }
    sub
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn steps_preserve_type_and_are_local((idx, objs) in arb_ground_instance(), ctx in 0usize..3) {
        let s = &cat().schemas()[idx];
        let sub = generic(s, &objs);
        let eq = instantiate(s, &sub).unwrap();
        let (d, c) = eq.endpoints();
        let other = MorTerm::free("ctx", o("P"), o("Q"));
        let (x, path) = match ctx {
            0 => (eq.lhs.clone(), Path::root()),
            1 => (MorTerm::tens(eq.lhs.clone(), other.clone()), Path::root().child(0)),
            _ => (MorTerm::comp(MorTerm::free("post", c.clone(), o("P")), eq.lhs.clone()), Path::root().child(1)),
        };
        let x = x.normalize();
        prop_assume!(path.get(&x).ok() == Some(eq.lhs.clone()));
        let step = RewriteStep { path: path.clone(), schema_id: s.id.clone(), direction: Direction::Forward, subst: sub };
        let r = apply_step(cat(), &x, &step).unwrap();
        prop_assert_eq!(r.term.infer_type().unwrap(), x.infer_type().unwrap());
        match ctx {
            1 => prop_assert_eq!(Path::root().child(1).get(&r.term).unwrap(), other),
            2 => prop_assert_eq!(Path::root().child(0).get(&r.term).unwrap(), MorTerm::free("post", c, o("P"))),
            _ => {}
        }
        let _ = d;
        // Every found proof of the instance re-verifies.
        let (out, _) = search_equality(cat(), &eq, &SearchBudget { max_states: 2_000, ..SearchBudget::steps(2) });
        if let SearchOutcome::Proved(p) = out {
            prop_assert!(verify_proof(cat(), &eq, &p).is_ok());
        }
    }
}
