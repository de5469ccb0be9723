use std::path::PathBuf;
use std::process::Command;

use m4core::cli::run;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn m4(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("m4").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn asset(rel: &str) -> String {
    root().join(rel).to_string_lossy().into_owned()
}

#[test]
fn typecheck_prints_endpoints() {
    let (code, out, _) = m4(&["typecheck", "m[A,B,C,D]"]);
    assert_eq!((code, out.as_str()), (0, "((A % B) * (C % D)) ==> ((A * C) % (B * D))\n"));
    let (code, _, err) = m4(&["typecheck", "m[A,B]"]);
    assert_eq!(code, 2);
    assert!(err.contains("syntax error"), "{err}");
    let (code, _, err) = m4(&["typecheck", "mu o eta"]);
    assert_eq!(code, 2);
    assert!(err.contains("ill-typed"), "{err}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(m4(&[]).0, 2);
    assert_eq!(m4(&["frobnicate"]).0, 2);
    assert_eq!(m4(&["verify", "--budget", "0"]).0, 2);
    assert_eq!(m4(&["search", "mu = "]).0, 2);
    assert_eq!(m4(&["model", "check", "/nonexistent.model"]).0, 2);
    assert_eq!(m4(&["verify", "--extension", "9=x.proof"]).0, 2);
    assert_eq!(m4(&["--help"]).0, 0);
}

#[test]
fn axioms_list() {
    let (code, out, _) = m4(&["axioms", "list"]);
    assert_eq!(code, 0);
    assert!(out.lines().next().unwrap().starts_with("comp-assoc : "));
    assert!(out.lines().any(|l| l.starts_with("M4 : ")));
    assert!(!out.contains("neg-snake"));
    assert!(m4(&["axioms", "list", "--negation"]).1.contains("neg-snake-4"));
}

#[test]
fn derive_prints_term_and_type() {
    let (code, out, _) = m4(&["derive", "dl", "A", "B", "C"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().nth(1), Some("(A * (B % C)) ==> ((A * B) % C)"));
    let (_, out, _) = m4(&["derive", "dr", "B", "C", "A"]);
    assert_eq!(out.lines().nth(1), Some("((B % C) * A) ==> (B % (C * A))"));
    assert_eq!(m4(&["derive", "dl", "A", "B"]).0, 2);
}

#[test]
fn search_and_prove() {
    let (code, out, _) = m4(&["search", "mu o (eta * id[R]) = l[R]", "--budget", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out, "prove mu o (eta * id[R]) = l[R]\nstep . mu-unit-l fwd {}\n");
    let (code, out, _) = m4(&["search", "mu o (mu * id[R]) o a'[R,R,R] = mu o (id[R] * mu)", "--budget", "1"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("unknown"));

    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.proof");
    std::fs::write(&good, "# unit law\nprove mu o (eta * id[R]) = l[R]\nstep . mu-unit-l fwd {}\n").unwrap();
    let (code, out, _) = m4(&["prove", good.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    let bad = dir.path().join("bad.proof");
    std::fs::write(&bad, "prove mu o (eta * id[R]) = l[R]\nstep . mu-unit-r fwd {}\n").unwrap();
    let (code, out, _) = m4(&["prove", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("rejected at step 1"), "{out}");
}

#[test]
fn shipped_proofs_all_check() {
    let mut files: Vec<String> = std::fs::read_dir(root().join("proofs"))
        .unwrap()
        .map(|e| e.unwrap().path().to_string_lossy().into_owned())
        .collect();
    files.sort();
    let mut args = vec!["prove"];
    args.extend(files.iter().map(String::as_str));
    let (code, out, _) = m4(&args);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().count(), files.len());
}

#[test]
fn models() {
    let (code, out, _) = m4(&["model", "check", &asset("models/bool-swapped.model")]);
    assert_eq!(code, 1);
    assert!(out.contains("witness (1,0,0,1)"), "{out}");
    let (code, out, _) = m4(&["model", "check", &asset("models/tropical-3.model")]);
    assert_eq!(code, 0, "{out}");
    let (_, out, _) = m4(&["model", "bimodules", &asset("models/bool-or-and.model")]);
    assert_eq!(out, "1\n");
    let (_, out, _) = m4(&["model", "bimodules", &asset("models/tropical-3.model")]);
    assert_eq!(out, "0 1 2 3\n");
}

#[test]
fn verify_with_extension_and_tsv_output() {
    let dir = tempfile::tempdir().unwrap();
    let ext = dir.path().join("cs2.proof");
    std::fs::write(&ext, "prove mu o (eta * id[R]) = l[R]\nstep . mu-unit-l fwd {}\n").unwrap();
    let tsv = dir.path().join("report.tsv");
    let (code, out, _) = m4(&[
        "verify",
        "--extension",
        &format!("2={}", ext.display()),
        "--output",
        tsv.to_str().unwrap(),
        "--model",
        &asset("models/bool-or-and.model"),
    ]);
    assert_eq!(code, 0, "{out}");
    let summary = std::fs::read_to_string(&tsv).unwrap();
    assert!(summary.lines().any(|l| l.starts_with("cs-2\tproved\t")), "{summary}");
    assert!(summary.lines().any(|l| l == "cs-7\tproved\tsearched, 6 steps"), "{summary}");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_m4");
    let st = Command::new(bin).args(["model", "check", &asset("models/bool-swapped.model")]).output().unwrap();
    assert_eq!(st.status.code(), Some(1));
    let st = Command::new(bin).args(["typecheck", "m[A,B,C,D]"]).output().unwrap();
    assert_eq!(st.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&st.stdout), "((A % B) * (C % D)) ==> ((A * C) % (B * D))\n");
    let st = Command::new(bin).arg("nonsense").output().unwrap();
    assert_eq!(st.status.code(), Some(2));
}
