use super::*;
use crate::axioms::Equation;
use crate::term::{parse_term, MorTerm};

fn bool_or_and() -> ThinModel {
    shipped_model("bool-or-and").unwrap()
}

fn env(pairs: &[(&str, usize)]) -> Env {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

#[test]
fn shipped_models_load() {
    let m = bool_or_and();
    assert_eq!(m.carrier, ["0", "1"]);
    assert_eq!((m.tens(0, 1), m.par(0, 1)), (1, 0));
    let t = shipped_model("tropical-3").unwrap();
    assert_eq!(t.size(), 4);
    assert!(t.leq(3, 0) && !t.leq(0, 3));
    assert_eq!(t.tens(2, 3), 3);
    assert_eq!(shipped_model("singleton").unwrap().size(), 1);
}

#[test]
fn printed_model_reparses() {
    for name in ["bool-or-and", "tropical-3", "singleton", "bool-swapped"] {
        let m = shipped_model(name).unwrap();
        assert_eq!(parse_model(name, &m.to_string()).unwrap(), m);
    }
}

#[test]
fn load_diagnostics() {
    let base = "carrier 0 1\nleq 0 1\nunit_tens 0\nunit_par 1\n";
    let or = "tens 0 0 0\ntens 0 1 1\ntens 1 0 1\ntens 1 1 1\n";
    let and = "par 0 0 0\npar 0 1 0\npar 1 0 0\npar 1 1 1\n";
    assert!(parse_model("ok", &format!("{base}{or}{and}")).is_ok());
    let e = parse_model("x", &format!("{base}{or}")).unwrap_err();
    assert_eq!(e, ModelError::Missing("par 0 0".into()));
    let e = parse_model("x", &format!("{base}leq 1 0\n{or}{and}")).unwrap_err();
    assert!(matches!(e, ModelError::Order { law: "antisymmetric", .. }), "{e}");
    let e = parse_model("x", "carrier a b c\nleq a b\nleq b c\n").unwrap_err();
    assert!(matches!(e, ModelError::Missing(_)), "{e}");
    let e = parse_model("x", "leq 0 1\n").unwrap_err();
    assert!(matches!(e, ModelError::Parse { line: 1, .. }));
    let e = parse_model("x", "carrier 0\nfoo 0\n").unwrap_err();
    assert_eq!(e.to_string(), "line 2: unknown keyword `foo`");
    // x*y = not-x is not monotone (nor unital), reported before anything else breaks
    let not = "tens 0 0 1\ntens 0 1 1\ntens 1 0 0\ntens 1 1 0\n";
    let e = parse_model("x", &format!("{base}{not}{and}")).unwrap_err();
    assert!(matches!(e, ModelError::Algebra { table: "tens", .. }), "{e}");
}

#[test]
fn non_monotone_table_is_rejected() {
    // min with the order reversed on one side: unital and associative, not monotone
    let text = "carrier a b\nleq a b\nunit_tens b\nunit_par a\n\
        tens a a a\ntens a b a\ntens b a a\ntens b b b\n\
        par a a a\npar a b b\npar b a b\npar b b a\n";
    let e = parse_model("x", text).unwrap_err();
    assert!(matches!(e, ModelError::NotMonotone { table: "par", .. }), "{e}");
}

#[test]
fn duoidal_checks() {
    let r = check_duoidal(&bool_or_and());
    assert!(r.passed(), "{r}");
    assert_eq!(r.family("duoidal-interchange").unwrap().checked, 16);
    let r = check_duoidal(&shipped_model("tropical-3").unwrap());
    assert!(r.passed(), "{r}");
    assert_eq!(r.family("duoidal-interchange").unwrap().checked, 256);
    assert!(check_duoidal(&shipped_model("singleton").unwrap()).passed());

    let m = shipped_model("bool-swapped").unwrap();
    let r = check_duoidal(&m);
    let f = r.family("duoidal-interchange").unwrap();
    let w = f.witness.clone().unwrap();
    assert_eq!(r.show(&w), "(1,0,0,1)");
    assert_eq!(f.failures, 2);
    // the witness re-fails
    let (a, b, c, d) = (w[0], w[1], w[2], w[3]);
    assert!(!m.leq(m.tens(m.par(a, b), m.par(c, d)), m.par(m.tens(a, c), m.tens(b, d))));
}

#[test]
fn bimodules() {
    let m = bool_or_and();
    assert_eq!(enumerate_bimodules(&m), vec![m.element("1").unwrap()]);
    assert_eq!(enumerate_bimodules(&shipped_model("tropical-3").unwrap()), vec![0, 1, 2, 3]);
    assert_eq!(enumerate_bimodules(&shipped_model("singleton").unwrap()), vec![0]);
}

#[test]
fn evaluation() {
    let m = bool_or_and();
    let e = env(&[("A", 1), ("B", 0), ("C", 0), ("D", 1)]);
    let d = eval_term(&m, &parse_term("m[A,B,C,D]").unwrap(), &e).unwrap();
    assert_eq!((d.dom, d.cod), (0, 1));
    let d = eval_term(&m, &parse_term("id[A]").unwrap(), &e).unwrap();
    assert_eq!((d.dom, d.cod), (1, 1));
    let t = shipped_model("tropical-3").unwrap();
    let d = eval_term(&t, &MorTerm::Eta, &Env::new()).unwrap();
    assert_eq!((d.dom, d.cod), (0, 0));
    // act[B] at B = 0 needs 1 <= 0
    let err = eval_term(&m, &parse_term("act[B]").unwrap(), &e).unwrap_err();
    assert!(matches!(err, EvalError::NoMorphism { .. }), "{err}");
    assert_eq!(eval_term(&m, &parse_term("id[X]").unwrap(), &e).unwrap_err(), EvalError::Unbound("X".into()));
    let swapped = shipped_model("bool-swapped").unwrap();
    assert!(eval_term(&swapped, &parse_term("gamma[A]").unwrap(), &e).unwrap_err() == EvalError::NoNegation);
}

#[test]
fn composites_denote_iff_parts_chain() {
    let m = shipped_model("tropical-3").unwrap();
    let g = |name: &str, x: &str, y: &str| parse_term(&format!("gen({name}, {x}, {y})")).unwrap();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                let e = env(&[("X", a), ("Y", b), ("Z", c)]);
                let (f, h) = (g("f", "X", "Y"), g("h", "Y", "Z"));
                let both = eval_term(&m, &f, &e).is_ok() && eval_term(&m, &h, &e).is_ok();
                assert_eq!(eval_term(&m, &MorTerm::comp(h, f), &e).is_ok(), both);
            }
        }
    }
}

#[test]
fn sweeps() {
    let m = bool_or_and();
    let eq = Equation::new(parse_term("m[A,B,C,D]").unwrap(), parse_term("m[A,B,C,D]").unwrap()).unwrap();
    let s = sweep_equation(&m, &eq, &[0, 1]);
    assert_eq!((s.assignments, s.vacuous), (16, 0));
    assert!(s.ok());
    let eq = Equation::new(parse_term("act[A]").unwrap(), parse_term("act[A]").unwrap()).unwrap();
    let s = sweep_equation(&m, &eq, &[0, 1]);
    assert_eq!(s.failure.unwrap().0, env(&[("A", 0)]));
    let eq = Equation::new(parse_term("gen(f, A, B)").unwrap(), parse_term("gen(f, A, B)").unwrap()).unwrap();
    let s = sweep_equation(&m, &eq, &[0, 1]);
    assert_eq!((s.vacuous, s.ok()), (1, true));
}
