//! One pass/fail line per acceptance criterion.

mod support;

use std::path::PathBuf;
use std::time::{Duration, Instant};

use m4core::axioms::{instantiate, Catalogue, Direction, Subst};
use m4core::bimodule::{build_dl, build_dr, m_hom_condition, BimoduleSym};
use m4core::cs::{bundled_proof, cs_equation, negation_axioms, verify_with, CsObjects, Status, VerifyOptions};
use m4core::model::{check_duoidal, default_models, enumerate_bimodules, shipped_model, sweep_equation};
use m4core::proof::{
    parse_script, search_equality, verify_proof, PastingProof, RewriteStep, SearchBudget, SearchOutcome,
};
use m4core::term::{parse_object, parse_term, ObjExpr, Path};
use rand::rngs::StdRng;
use rand::SeedableRng;

/// Wall-clock limit for verifying one transcribed certificate.
const VERIFY_LIMIT: Duration = Duration::from_secs(1);
/// Step budget and wall-clock limit for the searched unit laws.
const UNIT_SEARCH_STEPS: usize = 12;
const UNIT_SEARCH_LIMIT: Duration = Duration::from_secs(5);
/// Wall-clock limit for the whole model suite.
const MODEL_SUITE_LIMIT: Duration = Duration::from_secs(5);
type Outcome = Result<String, String>;
type Criterion = (u8, &'static str, fn() -> Outcome);
type Endpoints = Result<(ObjExpr, ObjExpr), String>;

const FUZZ_INSTANCES: usize = 200;
const MIN_MUTANTS: usize = 50;

fn o(s: &str) -> ObjExpr {
    parse_object(s).unwrap()
}

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn uses(p: &PastingProof, id: &str) -> bool {
    p.schema_ids().iter().any(|s| s == id)
}

/// Verifies the bundled certificate for `n`, returning it with the time taken.
fn certificate(n: u8) -> Result<(PastingProof, Duration), String> {
    let cat = Catalogue::standard(false);
    let eq = cs_equation(n, &CsObjects::default()).map_err(|e| e.to_string())?;
    let p = bundled_proof(n).map_err(|e| e.to_string())?;
    let t = Instant::now();
    verify_proof(cat, &eq, &p).map_err(|e| format!("({n}) {e}"))?;
    Ok((p, t.elapsed()))
}

fn criterion_1() -> Outcome {
    let (p9, t9) = certificate(9)?;
    let (p11, t11) = certificate(11)?;
    if !(uses(&p9, "M1") && uses(&p9, "M3")) {
        return Err(format!("(9) uses {:?}", p9.schema_ids()));
    }
    if !(uses(&p11, "M2") && (uses(&p11, "bimod-par-action-l") || uses(&p11, "bimod-par-action-r"))) {
        return Err(format!("(11) uses {:?}", p11.schema_ids()));
    }
    if t9.max(t11) >= VERIFY_LIMIT {
        return Err(format!("verification took {t9:?} / {t11:?}"));
    }
    Ok(format!("(9) {} steps in {t9:.2?}, (11) {} steps in {t11:.2?}", p9.len(), p11.len()))
}

fn criterion_2() -> Outcome {
    let mut lens = Vec::new();
    let expect: [(u8, &[&str]); 4] = [(10, &["M1", "M4"]), (12, &["M2"]), (13, &["M2"]), (14, &["M1"])];
    for (n, ids) in expect {
        let (p, _) = certificate(n)?;
        if let Some(missing) = ids.iter().find(|id| !uses(&p, id)) {
            return Err(format!("({n}) does not use {missing}"));
        }
        if n == 10 && uses(&p, "M3") {
            return Err("(10) uses M3 as well as M4".into());
        }
        lens.push(format!("({n}) {}", p.len()));
    }
    Ok(format!("steps {}", lens.join(", ")))
}

fn criterion_3() -> Outcome {
    let cat = Catalogue::standard(false);
    let mut notes = Vec::new();
    for n in [7u8, 8] {
        let eq = cs_equation(n, &CsObjects::default()).map_err(|e| e.to_string())?;
        let t = Instant::now();
        let (out, _) = search_equality(cat, &eq, &SearchBudget::steps(UNIT_SEARCH_STEPS));
        let took = t.elapsed();
        let SearchOutcome::Proved(found) = out else {
            return Err(format!("({n}) not found within {UNIT_SEARCH_STEPS} steps"));
        };
        if took >= UNIT_SEARCH_LIMIT {
            return Err(format!("({n}) search took {took:?}"));
        }
        let text =
            std::fs::read_to_string(root().join(format!("proofs/cs-{n:02}.proof"))).map_err(|e| e.to_string())?;
        let frozen = parse_script(&text).map_err(|e| e.to_string())?;
        verify_proof(cat, &frozen.equation, &frozen.proof).map_err(|e| format!("frozen ({n}) {e}"))?;
        if frozen.equation != eq || frozen.proof != found {
            return Err(format!("frozen ({n}) differs from the search result"));
        }
        notes.push(format!("({n}) {} steps in {took:.2?}", found.len()));
    }
    Ok(notes.join(", "))
}

fn criterion_4() -> Outcome {
    let [a, b, c, d] = ["A", "B", "C", "D"].map(BimoduleSym::named);
    let eq = m_hom_condition(&a, &b, &c, &d).map_err(|e| e.to_string())?;
    let mut notes = Vec::new();
    for m in default_models() {
        let elems = enumerate_bimodules(&m);
        let s = sweep_equation(&m, &eq, &elems);
        if let Some((env, e)) = s.failure {
            return Err(format!("{}: {e} at {env:?}", m.name));
        }
        if s.assignments != elems.len().pow(4) || s.vacuous != 0 {
            return Err(format!("{}: sweep covered {} of {}", m.name, s.assignments - s.vacuous, elems.len().pow(4)));
        }
        notes.push(format!("{} {}", m.name, s.assignments));
    }
    Ok(format!("model-verified over all bimodule assignments ({}); no symbolic certificate", notes.join(", ")))
}

fn criterion_5() -> Outcome {
    let ty = |t: &str| parse_term(t).unwrap().infer_type().map_err(|e| e.to_string());
    let m1 = Catalogue::standard(false);
    let inst = |id: &str, sub: Subst| {
        let s = m1.get(id).unwrap();
        instantiate(s, &sub).map(|e| e.endpoints()).map_err(|e| e.to_string())
    };
    let vars = |names: &str| names.split(' ').fold(Subst::new(), |s, v| s.obj(v, o(v)));
    let free = |n: &str| BimoduleSym::named(n);
    let checks: Vec<(&str, Endpoints, (ObjExpr, ObjExpr))> = vec![
        ("m", ty("m[A,B,C,D]"), (o("(A % B) * (C % D)"), o("(A * C) % (B * D)"))),
        (
            "d^l",
            build_dl(&free("A"), &free("B"), &free("C")).infer_type().map_err(|e| e.to_string()),
            (o("A * (B % C)"), o("(A * B) % C")),
        ),
        (
            "d^r",
            build_dr(&free("B"), &free("C"), &free("A")).infer_type().map_err(|e| e.to_string()),
            (o("(B % C) * A"), o("B % (C * A)")),
        ),
        (
            "M1",
            inst("M1", vars("U V W X Y Z")),
            (o("((U % V) * (W % X)) * (Y % Z)"), o("(U * (W * Y)) % (V * (X * Z))")),
        ),
        ("M2", inst("M2", vars("U V W X Y Z")), (o("(U % V % W) * (X % Y % Z)"), o("(U * X) % (V * Y) % (W * Z)"))),
        ("M3", inst("M3", vars("A B C D")), (o("((A % R) * (B % R)) * (C % D)"), o("((A * B) * C) % (R * D)"))),
        ("M4", inst("M4", vars("A B C D")), (o("(B % C) * ((R % A) * (R % D))"), o("(B * R) % (C * (A * D))"))),
        ("negation", Ok(negation_axioms(&o("A"))[0].equation.endpoints()), (o("(A % R) * I"), o("R * A"))),
    ];
    let total = checks.len();
    for (name, got, want) in checks {
        match got {
            Ok(got) if got == want => {}
            Ok((d, c)) => return Err(format!("{name}: {d} ==> {c}")),
            Err(e) => return Err(format!("{name}: {e}")),
        }
    }
    Ok(format!("{total} endpoint assertions"))
}

fn criterion_6() -> Outcome {
    let t = Instant::now();
    let get = |n: &str| shipped_model(n).ok_or(format!("no model {n}"));
    let swapped = check_duoidal(&get("bool-swapped")?);
    let fam = swapped.family("duoidal-interchange").ok_or("no interchange family")?;
    let w = fam.witness.clone().ok_or("swapped model passes")?;
    if swapped.show(&w) != "(1,0,0,1)" {
        return Err(format!("witness {}", swapped.show(&w)));
    }
    let bool_model = get("bool-or-and")?;
    let tropical = get("tropical-3")?;
    for (m, tuples) in [(&bool_model, 16), (&tropical, 256)] {
        let r = check_duoidal(m);
        let checked = r.family("duoidal-interchange").map(|f| f.checked);
        if !r.passed() || checked != Some(tuples) {
            return Err(format!("{}: {r}", m.name));
        }
    }
    let one = bool_model.element("1").ok_or("no element 1")?;
    if enumerate_bimodules(&bool_model) != vec![one] {
        return Err("bool-or-and bimodules".into());
    }
    if enumerate_bimodules(&tropical) != (0..tropical.size()).collect::<Vec<_>>() {
        return Err("tropical-3 bimodules".into());
    }
    let took = t.elapsed();
    if took >= MODEL_SUITE_LIMIT {
        return Err(format!("model suite took {took:?}"));
    }
    Ok(format!("witness (1,0,0,1); 16 and 256 tuples pass; bimodules {{1}} and all 4; {took:.2?}"))
}

fn criterion_7() -> Outcome {
    let opts = VerifyOptions::default();
    let first = verify_with(&opts);
    let second = verify_with(&opts);
    let (a, b) = (first.render_text(false), second.render_text(false));
    if a != b || first.render_tsv() != second.render_tsv() {
        return Err("reports differ".into());
    }
    if !first.passed() {
        return Err(format!("verify fails:\n{a}"));
    }
    let proved = first.count(Status::Proved);
    Ok(format!("{} identical bytes, {} obligations ({proved} proved)", a.len(), first.entries.len()))
}

fn criterion_8() -> Outcome {
    let mut rng = StdRng::seed_from_u64(2024);
    let budget =
        SearchBudget { max_steps: 4, max_states: 400, timeout: Duration::from_secs(5), ..SearchBudget::default() };
    let (mut found, mut accepted, mut mutants) = (0, 0, 0);
    for i in 0..FUZZ_INSTANCES {
        let cat = Catalogue::standard(i % 4 == 3);
        let (s, sub, eq) = support::random_instance(&mut rng, cat);
        let direct = PastingProof {
            steps: vec![RewriteStep {
                path: Path::root(),
                schema_id: s.id.clone(),
                direction: Direction::Forward,
                subst: sub,
            }],
        };
        verify_proof(cat, &eq, &direct).map_err(|e| format!("{} instance rejected: {e}", s.id))?;
        let mut certs = vec![direct];
        if let (SearchOutcome::Proved(p), _) = search_equality(cat, &eq, &budget) {
            verify_proof(cat, &eq, &p).map_err(|e| format!("search certificate for {} rejected: {e}", s.id))?;
            found += 1;
            certs.push(p);
        }
        for p in certs.iter().filter(|p| support::strictly_moving(cat, &eq, p)) {
            for m in support::mutants(&mut rng, cat, p) {
                mutants += 1;
                if verify_proof(cat, &eq, &m).is_ok() {
                    accepted += 1;
                }
            }
        }
    }
    if accepted > 0 {
        return Err(format!("{accepted} of {mutants} mutants accepted"));
    }
    if mutants < MIN_MUTANTS {
        return Err(format!("only {mutants} mutants"));
    }
    Ok(format!("{FUZZ_INSTANCES} instances, {found} search certificates re-verified, {mutants} mutants all rejected"))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 8] = [
        (1, "transcribed certificates (9), (11)", criterion_1),
        (2, "hinted certificates (10), (12)-(14)", criterion_2),
        (3, "unit laws by search", criterion_3),
        (4, "homomorphism condition", criterion_4),
        (5, "typing fidelity", criterion_5),
        (6, "model refutation", criterion_6),
        (7, "determinism", criterion_7),
        (8, "soundness fuzz", criterion_8),
    ];
    let mut failed = Vec::new();
    for (n, name, run) in criteria {
        match run() {
            Ok(note) => println!("criterion {n} PASS  {name}: {note}"),
            Err(why) => {
                println!("criterion {n} FAIL  {name}: {why}");
                failed.push(n);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
