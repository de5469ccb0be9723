use std::fmt;

use super::ThinModel;
use crate::par;

/// Outcome for one family of inequalities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyResult {
    pub family: &'static str,
    pub checked: usize,
    pub failures: usize,
    /// First failing tuple in lexicographic order over the carrier as listed.
    pub witness: Option<Vec<usize>>,
}

impl FamilyResult {
    pub fn ok(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelCheckReport {
    pub model: String,
    pub families: Vec<FamilyResult>,
    carrier: Vec<String>,
}

impl ModelCheckReport {
    pub fn passed(&self) -> bool {
        self.families.iter().all(FamilyResult::ok)
    }

    pub fn family(&self, name: &str) -> Option<&FamilyResult> {
        self.families.iter().find(|f| f.family == name)
    }

    pub fn show(&self, tuple: &[usize]) -> String {
        let names: Vec<&str> = tuple.iter().map(|&i| self.carrier[i].as_str()).collect();
        format!("({})", names.join(","))
    }
}

impl fmt::Display for ModelCheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "model {}", self.model)?;
        for r in &self.families {
            match &r.witness {
                None => writeln!(f, "  {:<22} ok      {} tuples", r.family, r.checked)?,
                Some(w) if w.is_empty() => writeln!(f, "  {:<22} FAILED", r.family)?,
                Some(w) => writeln!(
                    f,
                    "  {:<22} FAILED  {} of {} tuples, witness {}",
                    r.family,
                    r.failures,
                    r.checked,
                    self.show(w)
                )?,
            }
        }
        Ok(())
    }
}

/// Checks `bad` on every tuple of the given arity; the outer coordinate is
/// split across threads and the results merged in tuple order.
fn family(m: &ThinModel, name: &'static str, arity: usize, bad: impl Fn(&[usize]) -> bool + Sync) -> FamilyResult {
    let n = m.size();
    let heads: Vec<usize> = (0..n).collect();
    let tail_count = n.pow(arity.saturating_sub(1) as u32);
    let per_head = par::map(&heads, |&h| {
        let mut failures = 0;
        let mut first = None;
        let mut tuple = vec![0; arity];
        for k in 0..tail_count {
            if let Some(first) = tuple.first_mut() {
                *first = h;
            }
            let mut rest = k;
            for slot in tuple.iter_mut().skip(1).rev() {
                *slot = rest % n;
                rest /= n;
            }
            if bad(&tuple) {
                failures += 1;
                first.get_or_insert_with(|| tuple.clone());
            }
        }
        (failures, first)
    });
    let (checked, heads) = if arity == 0 { (1, &per_head[..1]) } else { (n.pow(arity as u32), &per_head[..]) };
    let failures = heads.iter().map(|r| r.0).sum();
    let witness = heads.iter().find_map(|r| r.1.clone());
    FamilyResult { family: name, checked, failures, witness }
}

/// The order-theoretic shadow of the duoidal structure: the interchange
/// inequality for all `a,b,c,d`, `R ⊗ R ≤ R` and `I ≤ R`, plus the
/// `γ`/`τ` inequalities when a negation table is present.
pub fn check_duoidal(m: &ThinModel) -> ModelCheckReport {
    let (i, r) = (m.unit_tens, m.unit_par);
    let mut families = vec![
        family(m, "duoidal-interchange", 4, |t| {
            let (a, b, c, d) = (t[0], t[1], t[2], t[3]);
            !m.leq(m.tens(m.par(a, b), m.par(c, d)), m.par(m.tens(a, c), m.tens(b, d)))
        }),
        family(m, "duoidal-mu", 0, |_| !m.leq(m.tens(r, r), r)),
        family(m, "duoidal-eta", 0, |_| !m.leq(i, r)),
    ];
    if m.has_negation() {
        let neg = |a| m.neg(a).expect("negation table");
        families.push(family(m, "negation-gamma", 1, |t| !m.leq(m.tens(t[0], neg(t[0])), r)));
        families.push(family(m, "negation-tau", 1, |t| !m.leq(i, m.par(neg(t[0]), t[0]))));
    }
    ModelCheckReport { model: m.name.clone(), families, carrier: m.carrier.clone() }
}

/// Elements carrying a bimodule structure: those with `(R ⊗ a) ⊗ R ≤ a`.
/// The action is then the unique morphism and its laws hold automatically.
pub fn enumerate_bimodules(m: &ThinModel) -> Vec<usize> {
    let r = m.unit_par;
    (0..m.size()).filter(|&a| m.leq(m.tens(m.tens(r, a), r), a)).collect()
}
