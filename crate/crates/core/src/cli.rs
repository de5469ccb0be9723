//! The `m4` command line.
//!
//! Exit codes: 0 when everything requested holds, 1 on a verification
//! failure or an inconclusive search, 2 on usage and parse errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use crate::axioms::{render_catalogue, Catalogue, Equation};
use crate::bimodule::{build_dl, build_dr, BimoduleSym};
use crate::cs::{self, Extension, VerifyOptions};
use crate::model::{self, ThinModel};
use crate::proof::{self, SearchBudget, SearchOutcome};
use crate::term::{parse_object, parse_term, MorTerm, ObjExpr};

#[derive(Parser, Debug)]
#[command(name = "m4", version, about = "Coherence workbench for middle-four interchange categories")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(clap::Args, Debug, Clone)]
pub struct BudgetArgs {
    /// Longest certificate the search considers.
    #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    /// Wall-clock limit for one search, in seconds.
    #[arg(long, default_value_t = 60, value_parser = clap::value_parser!(u64).range(1..))]
    pub timeout: u64,
}

impl BudgetArgs {
    fn search_budget(&self) -> SearchBudget {
        SearchBudget {
            max_steps: self.budget as usize,
            timeout: Duration::from_secs(self.timeout),
            ..SearchBudget::default()
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Inspect the axiom catalogue.
    Axioms {
        #[command(subcommand)]
        action: AxiomsCmd,
    },
    /// Print the type of a morphism term.
    Typecheck { term: String },
    /// Check proof scripts.
    Prove {
        #[arg(required = true)]
        scripts: Vec<PathBuf>,
        #[arg(long)]
        negation: bool,
    },
    /// Search for a certificate of `lhs = rhs`.
    Search {
        equation: String,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        negation: bool,
    },
    /// Build a weak distribution over free bimodules.
    Derive {
        which: Distribution,
        #[arg(num_args = 3, required = true)]
        objects: Vec<String>,
    },
    /// Thin finite models.
    Model {
        #[command(subcommand)]
        action: ModelCmd,
    },
    /// Run every registered obligation.
    Verify {
        /// Model files; the bundled passing models when none are given.
        #[arg(long = "model")]
        models: Vec<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        negation: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Also write the tab-separated summary here.
        #[arg(long)]
        output: Option<PathBuf>,
        /// `N=FILE`: a proof script supplying equation N of the extension points.
        #[arg(long = "extension")]
        extensions: Vec<String>,
        /// Append elapsed times to the text report.
        #[arg(long)]
        timings: bool,
    },
    /// Write the bundled certificates as proof scripts.
    Proofs {
        #[command(subcommand)]
        action: ProofsCmd,
    },
}

#[derive(Subcommand, Debug)]
pub enum AxiomsCmd {
    List {
        #[arg(long)]
        negation: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum ModelCmd {
    Check { file: PathBuf },
    Bimodules { file: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum ProofsCmd {
    Export { dir: PathBuf },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Distribution {
    Dl,
    Dr,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Tsv,
}

/// A failure carrying its exit code.
struct Failure(i32, String);

fn usage(msg: impl std::fmt::Display) -> Failure {
    Failure(2, msg.to_string())
}

/// Parses `lhs = rhs`.
pub fn parse_equation(text: &str) -> Result<Equation, String> {
    let (l, r) = text.split_once('=').ok_or("expected `lhs = rhs`")?;
    let lhs = parse_term(l).map_err(|e| format!("left side: {e}"))?;
    let rhs = parse_term(r).map_err(|e| format!("right side: {e}"))?;
    Equation::new(lhs, rhs).map_err(|e| e.to_string())
}

fn load(path: &Path) -> Result<ThinModel, Failure> {
    model::load_model(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn bimodule(text: &str) -> Result<BimoduleSym, Failure> {
    let o = parse_object(text).map_err(usage)?;
    Ok(if o == ObjExpr::UnitPar { BimoduleSym::unit() } else { BimoduleSym::free(o) })
}

fn typed(t: &MorTerm) -> Result<String, Failure> {
    let (d, c) = t.infer_type().map_err(|e| usage(format!("ill-typed: {e}")))?;
    Ok(format!("{d} ==> {c}"))
}

/// The bundled certificates, by file stem, in a fixed order.
pub fn bundled_scripts() -> Vec<(String, String)> {
    let mut out = Vec::new();
    for n in cs::SHIPPED {
        let eq = cs::cs_equation(n, &cs::CsObjects::default()).expect("shipped equations type-check");
        let p = cs::bundled_proof(n).expect("bundled proofs build");
        out.push((format!("cs-{n:02}"), proof::print_script(&eq, &p)));
    }
    for sq in cs::naturality_squares().into_iter().filter(|s| s.symbolic) {
        let p = cs::naturality_proof(&sq).expect("naturality proofs build");
        out.push((sq.id.to_string(), proof::print_script(&sq.equation, &p)));
    }
    out
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let w = |out: &mut dyn Write, s: &str| {
        let _ = out.write_all(s.as_bytes());
    };
    match cli.command {
        Command::Axioms { action: AxiomsCmd::List { negation } } => {
            for line in render_catalogue(negation) {
                w(out, &format!("{line}\n"));
            }
            Ok(0)
        }
        Command::Typecheck { term } => {
            let t = parse_term(&term).map_err(usage)?;
            w(out, &format!("{}\n", typed(&t)?));
            Ok(0)
        }
        Command::Prove { scripts, negation } => {
            let cat = Catalogue::standard(negation);
            let mut code = 0;
            for path in scripts {
                let s = proof::parse_script(&read(&path)?).map_err(|e| usage(format!("{}: {e}", path.display())))?;
                match proof::verify_proof(cat, &s.equation, &s.proof) {
                    Ok(_) => w(out, &format!("{}: proved in {} steps\n", path.display(), s.proof.len())),
                    Err(r) => {
                        w(out, &format!("{}: {r}\n", path.display()));
                        code = 1;
                    }
                }
            }
            Ok(code)
        }
        Command::Search { equation, budget, negation } => {
            let eq = parse_equation(&equation).map_err(usage)?;
            let cat = Catalogue::standard(negation);
            match proof::search_equality(cat, &eq, &budget.search_budget()) {
                (SearchOutcome::Proved(p), _) => {
                    w(out, &proof::print_script(&eq, &p));
                    Ok(0)
                }
                (SearchOutcome::Unknown(why), stats) => {
                    w(out, &format!("unknown: {why} ({} states)\n", stats.states));
                    Ok(1)
                }
            }
        }
        Command::Derive { which, objects } => {
            let [x, y, z] = [&objects[0], &objects[1], &objects[2]].map(|s| bimodule(s));
            let t = match which {
                Distribution::Dl => build_dl(&x?, &y?, &z?),
                Distribution::Dr => build_dr(&x?, &y?, &z?),
            };
            w(out, &format!("{t}\n{}\n", typed(&t)?));
            Ok(0)
        }
        Command::Model { action: ModelCmd::Check { file } } => {
            let r = model::check_duoidal(&load(&file)?);
            w(out, &r.to_string());
            Ok(if r.passed() { 0 } else { 1 })
        }
        Command::Model { action: ModelCmd::Bimodules { file } } => {
            let m = load(&file)?;
            let names: Vec<&str> = model::enumerate_bimodules(&m).into_iter().map(|i| m.carrier[i].as_str()).collect();
            w(out, &format!("{}\n", names.join(" ")));
            Ok(0)
        }
        Command::Verify { models, budget, negation, format, output, extensions, timings } => {
            let models = if models.is_empty() {
                model::default_models()
            } else {
                models.iter().map(|p| load(p)).collect::<Result<_, _>>()?
            };
            let mut exts = Vec::new();
            for spec in extensions {
                let (n, file) = spec.split_once('=').ok_or_else(|| usage(format!("`{spec}`: expected N=FILE")))?;
                let number: u8 = n.parse().map_err(|_| usage(format!("`{n}` is not a number")))?;
                if !cs::EXTENSION_POINTS.contains(&number) {
                    return Err(usage(format!("{number} is not an extension point")));
                }
                let script = proof::parse_script(&read(Path::new(file))?).map_err(|e| usage(format!("{file}: {e}")))?;
                exts.push(Extension { number, script });
            }
            let opts = VerifyOptions { budget: budget.search_budget(), models, negation, extensions: exts };
            let report = cs::verify_with(&opts);
            match format {
                Format::Text => w(out, &report.render_text(timings)),
                Format::Tsv => w(out, &report.render_tsv()),
            }
            if let Some(path) = output {
                std::fs::write(&path, report.render_tsv()).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Proofs { action: ProofsCmd::Export { dir } } => {
            std::fs::create_dir_all(&dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
            for (stem, text) in bundled_scripts() {
                let path = dir.join(format!("{stem}.proof"));
                std::fs::write(&path, text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
                w(out, &format!("{}\n", path.display()));
            }
            Ok(0)
        }
    }
}

/// Runs the command line, writing results to `out` and diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 2;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}
