//! Thin (posetal) finite models of the signature.
//!
//! A morphism `x → y` exists iff `x ≤ y`, so every diagram commutes and a
//! term denotes iff each of its leaves does. Models refute missing
//! structure cheaply but cannot tell parallel morphisms apart.

mod check;
mod eval;

use std::fmt;
use std::path::Path;

pub use check::{check_duoidal, enumerate_bimodules, FamilyResult, ModelCheckReport};
pub use eval::{check_equation_in_model, eval_object, eval_term, sweep_equation, Denotation, Env, EvalError, Sweep};

/// A finite partial order with two monotone monoid tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThinModel {
    pub name: String,
    pub carrier: Vec<String>,
    leq: Vec<Vec<bool>>,
    tens: Vec<Vec<usize>>,
    par: Vec<Vec<usize>>,
    pub unit_tens: usize,
    pub unit_par: usize,
    neg: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("missing {0}")]
    Missing(String),
    #[error("order is not {law}: witness ({witness})")]
    Order { law: &'static str, witness: String },
    #[error("{table} is not monotone: {witness}")]
    NotMonotone { table: &'static str, witness: String },
    #[error("{table} is not {law}: witness ({witness})")]
    Algebra { table: &'static str, law: &'static str, witness: String },
    #[error("{0}: {1}")]
    Io(String, String),
}

impl ThinModel {
    pub fn size(&self) -> usize {
        self.carrier.len()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x][y]
    }

    pub fn tens(&self, x: usize, y: usize) -> usize {
        self.tens[x][y]
    }

    pub fn par(&self, x: usize, y: usize) -> usize {
        self.par[x][y]
    }

    pub fn neg(&self, x: usize) -> Option<usize> {
        self.neg.as_ref().map(|n| n[x])
    }

    pub fn has_negation(&self) -> bool {
        self.neg.is_some()
    }

    pub fn element(&self, name: &str) -> Option<usize> {
        self.carrier.iter().position(|c| c == name)
    }

    /// Element names of a tuple, as `(x,y,...)`.
    pub fn show(&self, tuple: &[usize]) -> String {
        let names: Vec<&str> = tuple.iter().map(|&i| self.carrier[i].as_str()).collect();
        format!("({})", names.join(","))
    }

    fn validate(&self) -> Result<(), ModelError> {
        let n = self.size();
        let all = || (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)));
        for (x, y) in all() {
            if x != y && self.leq(x, y) && self.leq(y, x) {
                return Err(ModelError::Order { law: "antisymmetric", witness: self.show(&[x, y]) });
            }
            for z in 0..n {
                if self.leq(x, y) && self.leq(y, z) && !self.leq(x, z) {
                    return Err(ModelError::Order { law: "transitive", witness: self.show(&[x, y, z]) });
                }
            }
        }
        for (table, op, unit) in [("tens", &self.tens, self.unit_tens), ("par", &self.par, self.unit_par)] {
            for x in 0..n {
                if op[unit][x] != x || op[x][unit] != x {
                    return Err(ModelError::Algebra { table, law: "unital", witness: self.show(&[x]) });
                }
                for (y, z) in all() {
                    if op[op[x][y]][z] != op[x][op[y][z]] {
                        return Err(ModelError::Algebra { table, law: "associative", witness: self.show(&[x, y, z]) });
                    }
                }
            }
            for ((x, x2), (y, y2)) in all().flat_map(|p| all().map(move |q| (p, q))) {
                if self.leq(x, x2) && self.leq(y, y2) && !self.leq(op[x][y], op[x2][y2]) {
                    return Err(ModelError::NotMonotone {
                        table,
                        witness: format!(
                            "{} <= {} and {} <= {} but {} {} {} is not below {} {} {}",
                            self.carrier[x],
                            self.carrier[x2],
                            self.carrier[y],
                            self.carrier[y2],
                            self.carrier[x],
                            table,
                            self.carrier[y],
                            self.carrier[x2],
                            table,
                            self.carrier[y2],
                        ),
                    });
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for ThinModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "carrier {}", self.carrier.join(" "))?;
        for x in 0..self.size() {
            for y in 0..self.size() {
                if x != y && self.leq(x, y) {
                    writeln!(f, "leq {} {}", self.carrier[x], self.carrier[y])?;
                }
            }
        }
        writeln!(f, "unit_tens {}", self.carrier[self.unit_tens])?;
        writeln!(f, "unit_par {}", self.carrier[self.unit_par])?;
        for (kw, op) in [("tens", &self.tens), ("par", &self.par)] {
            for (x, row) in op.iter().enumerate() {
                for (y, &z) in row.iter().enumerate() {
                    writeln!(f, "{kw} {} {} {}", self.carrier[x], self.carrier[y], self.carrier[z])?;
                }
            }
        }
        if let Some(neg) = &self.neg {
            for (x, &y) in neg.iter().enumerate() {
                writeln!(f, "neg {} {}", self.carrier[x], self.carrier[y])?;
            }
        }
        Ok(())
    }
}

/// Parses the line-based model format and validates every structural law.
pub fn parse_model(name: &str, text: &str) -> Result<ThinModel, ModelError> {
    let mut carrier: Option<Vec<String>> = None;
    let mut leq_pairs = Vec::new();
    let mut units: [Option<usize>; 2] = [None, None];
    let mut tables: [Vec<Vec<Option<usize>>>; 2] = [Vec::new(), Vec::new()];
    let mut neg: Vec<Option<usize>> = Vec::new();
    let mut saw_neg = false;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |message: String| ModelError::Parse { line, message };
        let words: Vec<&str> = raw.split('#').next().unwrap_or("").split_whitespace().collect();
        let Some((&kw, args)) = words.split_first() else { continue };
        if kw == "carrier" {
            if carrier.is_some() {
                return Err(err("carrier given twice".into()));
            }
            if args.is_empty() {
                return Err(err("empty carrier".into()));
            }
            let names: Vec<String> = args.iter().map(|s| s.to_string()).collect();
            if let Some(d) = names.iter().enumerate().find(|(j, x)| names[..*j].contains(x)) {
                return Err(err(format!("element `{}` listed twice", d.1)));
            }
            let n = names.len();
            tables = [vec![vec![None; n]; n], vec![vec![None; n]; n]];
            neg = vec![None; n];
            carrier = Some(names);
            continue;
        }
        let Some(names) = &carrier else {
            return Err(err(format!("`{kw}` before `carrier`")));
        };
        let elem =
            |s: &str| names.iter().position(|c| c == s).ok_or_else(|| err(format!("`{s}` is not in the carrier")));
        let arity = |k: usize| {
            if args.len() == k {
                Ok(())
            } else {
                Err(err(format!("`{kw}` takes {k} arguments, got {}", args.len())))
            }
        };
        match kw {
            "leq" => {
                arity(2)?;
                leq_pairs.push((elem(args[0])?, elem(args[1])?));
            }
            "unit_tens" | "unit_par" => {
                arity(1)?;
                let slot = &mut units[usize::from(kw == "unit_par")];
                if slot.is_some() {
                    return Err(err(format!("`{kw}` given twice")));
                }
                *slot = Some(elem(args[0])?);
            }
            "tens" | "par" => {
                arity(3)?;
                let (x, y, z) = (elem(args[0])?, elem(args[1])?, elem(args[2])?);
                let cell = &mut tables[usize::from(kw == "par")][x][y];
                if cell.is_some_and(|old| old != z) {
                    return Err(err(format!("conflicting entry for {kw} {} {}", args[0], args[1])));
                }
                *cell = Some(z);
            }
            "neg" => {
                arity(2)?;
                let (x, y) = (elem(args[0])?, elem(args[1])?);
                if neg[x].is_some_and(|old| old != y) {
                    return Err(err(format!("conflicting entry for neg {}", args[0])));
                }
                neg[x] = Some(y);
                saw_neg = true;
            }
            other => return Err(err(format!("unknown keyword `{other}`"))),
        }
    }

    let carrier = carrier.ok_or_else(|| ModelError::Missing("carrier".into()))?;
    let n = carrier.len();
    let mut leq = vec![vec![false; n]; n];
    for (x, row) in leq.iter_mut().enumerate() {
        row[x] = true;
    }
    for (x, y) in leq_pairs {
        leq[x][y] = true;
    }
    let unit_tens = units[0].ok_or_else(|| ModelError::Missing("unit_tens".into()))?;
    let unit_par = units[1].ok_or_else(|| ModelError::Missing("unit_par".into()))?;
    let mut full = Vec::new();
    for (kw, table) in ["tens", "par"].into_iter().zip(tables) {
        let mut rows = Vec::with_capacity(n);
        for (x, row) in table.into_iter().enumerate() {
            let mut out = Vec::with_capacity(n);
            for (y, cell) in row.into_iter().enumerate() {
                out.push(cell.ok_or_else(|| ModelError::Missing(format!("{kw} {} {}", carrier[x], carrier[y])))?);
            }
            rows.push(out);
        }
        full.push(rows);
    }
    let neg = if saw_neg {
        let mut out = Vec::with_capacity(n);
        for (x, v) in neg.into_iter().enumerate() {
            out.push(v.ok_or_else(|| ModelError::Missing(format!("neg {}", carrier[x])))?);
        }
        Some(out)
    } else {
        None
    };
    let par = full.pop().unwrap();
    let tens = full.pop().unwrap();
    let model = ThinModel { name: name.to_string(), carrier, leq, tens, par, unit_tens, unit_par, neg };
    model.validate()?;
    Ok(model)
}

/// Reads and validates a model file; the model is named after the file stem.
pub fn load_model(path: &Path) -> Result<ThinModel, ModelError> {
    let text = std::fs::read_to_string(path).map_err(|e| ModelError::Io(path.display().to_string(), e.to_string()))?;
    let name = path.file_stem().map_or_else(|| "model".to_string(), |s| s.to_string_lossy().into_owned());
    parse_model(&name, &text)
}

const SHIPPED: [(&str, &str); 4] = [
    ("bool-or-and", include_str!("../../../../models/bool-or-and.model")),
    ("tropical-3", include_str!("../../../../models/tropical-3.model")),
    ("singleton", include_str!("../../../../models/singleton.model")),
    ("bool-swapped", include_str!("../../../../models/bool-swapped.model")),
];

/// A model bundled with the crate, by name.
pub fn shipped_model(name: &str) -> Option<ThinModel> {
    SHIPPED.iter().find(|(n, _)| *n == name).map(|(n, text)| parse_model(n, text).expect("shipped models are valid"))
}

/// The bundled models that satisfy the duoidal laws, in a fixed order.
pub fn default_models() -> Vec<ThinModel> {
    ["bool-or-and", "tropical-3", "singleton"].iter().filter_map(|n| shipped_model(n)).collect()
}

#[cfg(test)]
mod tests;
