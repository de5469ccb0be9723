//! The full verification run: every registered obligation, symbolic and
//! semantic, in a fixed order.

use std::fmt;
use std::time::{Duration, Instant};

use super::equations::{cs_equation, CsObjects, SHIPPED};
use super::naturality::{naturality_proof, naturality_squares};
use super::negation::negation_axioms;
use super::proofs::{bundled_proof, SEARCH_BUDGET};
use crate::axioms::{Catalogue, Equation};
use crate::bimodule::{self, BimoduleSym};
use crate::model::{check_duoidal, enumerate_bimodules, Sweep, ThinModel};
use crate::par;
use crate::proof::{search_equality, verify_proof, PastingProof, ProofScript, SearchBudget, SearchOutcome};
use crate::term::ObjExpr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Proved,
    ModelVerified,
    Failed,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Proved => "proved",
            Status::ModelVerified => "model-verified",
            Status::Failed => "failed",
            Status::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub id: String,
    pub status: Status,
    /// Proof length, witness or reason.
    pub detail: String,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub entries: Vec<Entry>,
}

impl VerificationReport {
    pub fn get(&self, id: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.id == id)
    }

    /// True iff every obligation is proved or model-verified.
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| matches!(e.status, Status::Proved | Status::ModelVerified))
    }

    pub fn count(&self, s: Status) -> usize {
        self.entries.iter().filter(|e| e.status == s).count()
    }

    /// Aligned text. Timings are printed only on request so that two runs
    /// give identical output.
    pub fn render_text(&self, timings: bool) -> String {
        let w = self.entries.iter().map(|e| e.id.len()).max().unwrap_or(0).max("obligation".len());
        let mut out = format!("{:<w$}  {:<14}  detail\n", "obligation", "status");
        for e in &self.entries {
            let time = if timings { format!(" [{:.3}s]", e.elapsed.as_secs_f64()) } else { String::new() };
            out.push_str(&format!("{:<w$}  {:<14}  {}{}\n", e.id, e.status.to_string(), e.detail, time));
        }
        out.push_str(&format!(
            "{} obligations: {} proved, {} model-verified, {} failed, {} unknown\n",
            self.entries.len(),
            self.count(Status::Proved),
            self.count(Status::ModelVerified),
            self.count(Status::Failed),
            self.count(Status::Unknown),
        ));
        out
    }

    /// One `id<TAB>status<TAB>detail` line per obligation.
    pub fn render_tsv(&self) -> String {
        self.entries.iter().map(|e| format!("{}\t{}\t{}\n", e.id, e.status, e.detail)).collect()
    }
}

/// A user-supplied equation and certificate for an extension-point number.
#[derive(Clone, Debug)]
pub struct Extension {
    pub number: u8,
    pub script: ProofScript,
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub budget: SearchBudget,
    pub models: Vec<ThinModel>,
    pub negation: bool,
    pub extensions: Vec<Extension>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            budget: SearchBudget::steps(SEARCH_BUDGET),
            models: crate::model::default_models(),
            negation: false,
            extensions: Vec::new(),
        }
    }
}

/// What the symbolic side of an obligation does.
#[derive(Clone)]
enum Symbolic {
    Certificate(fn() -> Result<PastingProof, String>),
    Given(PastingProof),
    Search(SearchBudget),
    /// A law that is assumed (an axiom of free bimodules) or not attempted.
    Assumed(&'static str),
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Domain {
    /// Generators range over bimodule elements.
    Bimodules,
    All,
}

#[derive(Clone)]
struct Task {
    id: String,
    equation: Option<Equation>,
    symbolic: Symbolic,
    domain: Domain,
    note: Option<&'static str>,
}

enum Sym {
    Proved(String),
    Rejected(String),
    Open(String),
}

fn run_symbolic(cat: &Catalogue, eq: &Equation, s: &Symbolic) -> Sym {
    let check = |p: &PastingProof, how: &str| match verify_proof(cat, eq, p) {
        Ok(_) => Sym::Proved(format!("{how}, {} steps", p.len())),
        Err(r) => Sym::Rejected(format!("{how} {r}")),
    };
    match s {
        Symbolic::Certificate(f) => match f() {
            Ok(p) => check(&p, "certificate"),
            Err(e) => Sym::Rejected(format!("no certificate: {e}")),
        },
        Symbolic::Given(p) => check(p, "certificate"),
        Symbolic::Search(b) => match search_equality(cat, eq, b) {
            (SearchOutcome::Proved(p), _) => check(&p, "searched"),
            (SearchOutcome::Unknown(why), _) => Sym::Open(format!("search: {why}")),
        },
        Symbolic::Assumed(why) => Sym::Open(why.to_string()),
    }
}

/// Sweeps `eq` through every passing model. `Err` carries the first failure.
fn run_models(models: &[ThinModel], eq: &Equation, domain: Domain) -> Result<Vec<String>, String> {
    let mut notes = Vec::new();
    for m in models {
        let elems: Vec<usize> = match domain {
            Domain::Bimodules => enumerate_bimodules(m),
            Domain::All => (0..m.size()).collect(),
        };
        if mentions_negation(eq) && !m.has_negation() {
            continue;
        }
        let Sweep { assignments, vacuous, failure } = crate::model::sweep_equation(m, eq, &elems);
        if let Some((env, e)) = failure {
            let at: Vec<String> = env.iter().map(|(k, v)| format!("{k}={}", m.carrier[*v])).collect();
            return Err(format!("{}: {} at {}", m.name, e, at.join(",")));
        }
        notes.push(format!("{} {}/{}", m.name, assignments - vacuous, assignments));
    }
    Ok(notes)
}

fn mentions_negation(eq: &Equation) -> bool {
    fn neg(o: &ObjExpr) -> bool {
        match o {
            ObjExpr::Neg(_) => true,
            ObjExpr::Tens(a, b) => neg(a) || neg(b),
            ObjExpr::Par(ps) => ps.iter().any(neg),
            _ => false,
        }
    }
    let mut found = false;
    for side in [&eq.lhs, &eq.rhs] {
        side.visit_objects(&mut |o| found |= neg(o));
    }
    found
}

fn run_task(cat: &Catalogue, models: &[ThinModel], t: &Task) -> Entry {
    let start = Instant::now();
    let Some(eq) = &t.equation else {
        return Entry {
            id: t.id.clone(),
            status: Status::Failed,
            detail: "no equation".into(),
            elapsed: start.elapsed(),
        };
    };
    let sym = run_symbolic(cat, eq, &t.symbolic);
    let sem = run_models(models, eq, t.domain);
    let note = t.note.map(|n| format!(" ({n})")).unwrap_or_default();
    let (status, detail) = match (sym, sem) {
        (Sym::Rejected(why), _) => (Status::Failed, why),
        (_, Err(why)) => (Status::Failed, format!("model {why}")),
        (Sym::Proved(how), Ok(_)) => (Status::Proved, how),
        (Sym::Open(why), Ok(notes)) if notes.is_empty() => (Status::Unknown, why),
        (Sym::Open(_), Ok(notes)) => (Status::ModelVerified, format!("models {}", notes.join(", "))),
    };
    Entry { id: t.id.clone(), status, detail: format!("{detail}{note}"), elapsed: start.elapsed() }
}

fn cs_task(n: u8, budget: &SearchBudget) -> Task {
    let symbolic = if n == 7 || n == 8 {
        Symbolic::Search(SearchBudget { max_steps: budget.max_steps.min(SEARCH_BUDGET), ..budget.clone() })
    } else {
        let f: fn() -> Result<PastingProof, String> = match n {
            9 => || bundled_proof(9).map_err(|e| e.to_string()),
            10 => || bundled_proof(10).map_err(|e| e.to_string()),
            11 => || bundled_proof(11).map_err(|e| e.to_string()),
            12 => || bundled_proof(12).map_err(|e| e.to_string()),
            13 => || bundled_proof(13).map_err(|e| e.to_string()),
            _ => || bundled_proof(14).map_err(|e| e.to_string()),
        };
        Symbolic::Certificate(f)
    };
    Task {
        id: format!("cs-{n}"),
        equation: cs_equation(n, &CsObjects::default()).ok(),
        symbolic,
        domain: Domain::Bimodules,
        note: None,
    }
}

fn tasks(opts: &VerifyOptions) -> Vec<Task> {
    let free = |n: &str| BimoduleSym::named(n);
    let (a, b, c, d) = (free("A"), free("B"), free("C"), free("D"));
    let mut out: Vec<Task> = SHIPPED.iter().map(|&n| cs_task(n, &opts.budget)).collect();
    for ext in &opts.extensions {
        out.push(Task {
            id: format!("cs-{}", ext.number),
            equation: Some(ext.script.equation.clone()),
            symbolic: Symbolic::Given(ext.script.proof.clone()),
            domain: Domain::All,
            note: Some("supplied"),
        });
    }
    let assumed = Symbolic::Assumed("law of free bimodules");
    let task = |id: &str, eq: Option<Equation>, symbolic: Symbolic, domain| Task {
        id: id.to_string(),
        equation: eq,
        symbolic,
        domain,
        note: None,
    };
    out.push(task(
        "m-hom-condition",
        bimodule::m_hom_condition(&a, &b, &c, &d).ok(),
        Symbolic::Assumed("no certificate"),
        Domain::Bimodules,
    ));
    for ob in bimodule::bimodule_obligations(&a).expect("bimodule laws type-check") {
        out.push(task(&ob.id, Some(ob.equation), assumed.clone(), Domain::Bimodules));
    }
    for ob in bimodule::induced_action_laws(&a, &b).expect("induced action laws type-check") {
        out.push(task(&ob.id, Some(ob.equation), Symbolic::Assumed("catalogue lemma"), Domain::Bimodules));
    }
    out.push(task(
        "par-action-order",
        bimodule::par_action_order(&a, &b).ok(),
        Symbolic::Assumed("no certificate"),
        Domain::Bimodules,
    ));
    let unit_search = Symbolic::Search(SearchBudget { max_steps: 20, max_states: 20_000, ..opts.budget.clone() });
    for ob in bimodule::bimodule_obligations(&BimoduleSym::unit()).expect("unit bimodule laws type-check") {
        if ob.id == "bimod-unit" || ob.id == "bimod-assoc" {
            out.push(task(&format!("{}@R", ob.id), Some(ob.equation), unit_search.clone(), Domain::Bimodules));
        }
    }
    for sq in naturality_squares() {
        let symbolic = if sq.symbolic {
            let f: fn() -> Result<PastingProof, String> = match sq.id {
                "dl-natural-1" => || nat("dl-natural-1"),
                "dl-natural-2" => || nat("dl-natural-2"),
                "dr-natural-2" => || nat("dr-natural-2"),
                _ => || nat("dr-natural-3"),
            };
            Symbolic::Certificate(f)
        } else {
            Symbolic::Assumed("needs an equivariant morphism")
        };
        out.push(task(sq.id, Some(sq.equation), symbolic, Domain::Bimodules));
    }
    if opts.negation {
        for ax in negation_axioms(&ObjExpr::gen("A")) {
            out.push(Task {
                id: ax.id,
                equation: Some(ax.equation),
                symbolic: Symbolic::Assumed("axiom"),
                domain: Domain::All,
                note: ax.reconstructed.then_some("reconstructed"),
            });
        }
    }
    out
}

fn nat(id: &str) -> Result<PastingProof, String> {
    let sq = naturality_squares().into_iter().find(|s| s.id == id).ok_or("unknown square")?;
    naturality_proof(&sq).map_err(|e| e.to_string())
}

/// Runs every obligation against the supplied models. Models failing the
/// duoidal checks are reported and left out of the equation sweeps.
pub fn verify_with(opts: &VerifyOptions) -> VerificationReport {
    let cat = Catalogue::standard(opts.negation || !opts.extensions.is_empty());
    let mut entries = Vec::new();
    let mut passing = Vec::new();
    for m in &opts.models {
        let start = Instant::now();
        let r = check_duoidal(m);
        let failed: Vec<String> = r
            .families
            .iter()
            .filter_map(|f| {
                f.witness.as_ref().map(|w| match w.is_empty() {
                    true => f.family.to_string(),
                    false => format!("{} witness {}", f.family, r.show(w)),
                })
            })
            .collect();
        let (status, detail) = if failed.is_empty() {
            passing.push(m.clone());
            let tuples: usize = r.families.iter().map(|f| f.checked).sum();
            (Status::ModelVerified, format!("{tuples} tuples, bimodules {}", enumerate_bimodules(m).len()))
        } else {
            (Status::Failed, failed.join("; "))
        };
        entries.push(Entry { id: format!("duoidal@{}", m.name), status, detail, elapsed: start.elapsed() });
    }
    let ts = tasks(opts);
    entries.extend(par::map(&ts, |t| run_task(cat, &passing, t)));
    VerificationReport { entries }
}

/// [`verify_with`] over the given models, without negation or extensions.
pub fn verify_all(budget: &SearchBudget, models: &[ThinModel]) -> VerificationReport {
    verify_with(&VerifyOptions { budget: budget.clone(), models: models.to_vec(), ..VerifyOptions::default() })
}
