//! Line-based proof scripts:
//!
//! ```text
//! # comment
//! prove <lhs> = <rhs>
//! step <path> <schema-id> <fwd|bwd> {A=<object>, f=<term>, ...}
//! ```
//!
//! Keys starting with a lowercase letter bind morphism metavariables.

use super::{PastingProof, RewriteStep};
use crate::axioms::{Direction, Equation, EquationError, Subst};
use crate::term::{parse_object, parse_term, ParseError, Path};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofScript {
    pub equation: Equation,
    pub proof: PastingProof,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ScriptError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Parse { line: usize, source: ParseError },
    #[error("line {line}: {source}")]
    Equation { line: usize, source: EquationError },
    #[error("missing `prove` header")]
    NoHeader,
}

fn syntax(line: usize, message: impl Into<String>) -> ScriptError {
    ScriptError::Syntax { line, message: message.into() }
}

/// Splits at top-level commas (outside brackets and parentheses).
fn split_top(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

pub fn parse_subst(text: &str, line: usize) -> Result<Subst, ScriptError> {
    let inner = text
        .trim()
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| syntax(line, "substitution must be written {Var=value, ...}"))?;
    let mut sub = Subst::new();
    if inner.trim().is_empty() {
        return Ok(sub);
    }
    for entry in split_top(inner) {
        let (k, v) = entry.split_once('=').ok_or_else(|| syntax(line, format!("expected Var=value in `{entry}`")))?;
        let k = k.trim();
        if sub.0.contains_key(k) {
            return Err(syntax(line, format!("metavariable {k} bound twice")));
        }
        let parse_err = |source| ScriptError::Parse { line, source };
        sub = match k.chars().next() {
            Some(c) if c.is_ascii_lowercase() => sub.mor(k, parse_term(v).map_err(parse_err)?),
            Some(c) if c.is_ascii_uppercase() => sub.obj(k, parse_object(v).map_err(parse_err)?),
            _ => return Err(syntax(line, format!("bad metavariable name `{k}`"))),
        };
    }
    Ok(sub)
}

fn parse_step(rest: &str, line: usize) -> Result<RewriteStep, ScriptError> {
    let mut it = rest.trim_start().splitn(4, char::is_whitespace);
    let mut next =
        |what: &str| it.next().filter(|s| !s.is_empty()).ok_or_else(|| syntax(line, format!("missing {what}")));
    let path: Path = next("path")?.parse().map_err(|e: String| syntax(line, e))?;
    let schema_id = next("schema id")?.to_string();
    let direction = match next("direction")? {
        "fwd" => Direction::Forward,
        "bwd" => Direction::Backward,
        other => return Err(syntax(line, format!("direction must be fwd or bwd, got `{other}`"))),
    };
    let subst = parse_subst(it.next().unwrap_or("{}"), line)?;
    Ok(RewriteStep { path, schema_id, direction, subst })
}

pub fn parse_script(text: &str) -> Result<ProofScript, ScriptError> {
    let mut equation = None;
    let mut steps = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (kw, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        match kw {
            "prove" => {
                if equation.is_some() {
                    return Err(syntax(line, "second `prove` header"));
                }
                let (l, r) = rest.split_once('=').ok_or_else(|| syntax(line, "expected `prove <lhs> = <rhs>`"))?;
                let parse_err = |source| ScriptError::Parse { line, source };
                let lhs = parse_term(l).map_err(parse_err)?;
                let rhs = parse_term(r).map_err(parse_err)?;
                equation = Some(Equation::new(lhs, rhs).map_err(|source| ScriptError::Equation { line, source })?);
            }
            "step" => {
                if equation.is_none() {
                    return Err(syntax(line, "`step` before `prove` header"));
                }
                steps.push(parse_step(rest, line)?);
            }
            other => return Err(syntax(line, format!("unknown directive `{other}`"))),
        }
    }
    let equation = equation.ok_or(ScriptError::NoHeader)?;
    Ok(ProofScript { equation, proof: PastingProof { steps } })
}

pub fn print_script(eq: &Equation, proof: &PastingProof) -> String {
    let mut out = format!("prove {eq}\n");
    for s in &proof.steps {
        out.push_str(&s.to_string());
        out.push('\n');
    }
    out
}
