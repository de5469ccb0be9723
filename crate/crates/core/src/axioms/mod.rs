//! The catalogue of axiom schemas and the machinery to instantiate and match them.

mod catalogue;
mod matching;

use std::collections::BTreeMap;
use std::fmt;

use crate::term::{MorTerm, ObjExpr, TypeError};

pub use catalogue::{list_axioms, render_catalogue, Catalogue};
pub use matching::{match_axiom, match_pattern, match_pattern_proper, AxiomMatch};

/// An ordered pair of parallel terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Equation {
    pub lhs: MorTerm,
    pub rhs: MorTerm,
    dom: ObjExpr,
    cod: ObjExpr,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EquationError {
    #[error("left side: {0}")]
    Lhs(TypeError),
    #[error("right side: {0}")]
    Rhs(TypeError),
    #[error("sides are not parallel: {lhs_type} vs {rhs_type}")]
    NotParallel { lhs_type: String, rhs_type: String },
}

impl Equation {
    /// Normalizes both sides and checks that they are parallel.
    pub fn new(lhs: MorTerm, rhs: MorTerm) -> Result<Self, EquationError> {
        let lhs = lhs.normalize();
        let rhs = rhs.normalize();
        let (ld, lc) = lhs.infer_type().map_err(EquationError::Lhs)?;
        let (rd, rc) = rhs.infer_type().map_err(EquationError::Rhs)?;
        if (&ld, &lc) != (&rd, &rc) {
            return Err(EquationError::NotParallel {
                lhs_type: format!("{ld} ==> {lc}"),
                rhs_type: format!("{rd} ==> {rc}"),
            });
        }
        Ok(Equation { lhs, rhs, dom: ld, cod: lc })
    }

    pub fn endpoints(&self) -> (ObjExpr, ObjExpr) {
        (self.dom.clone(), self.cod.clone())
    }

    pub fn dom(&self) -> &ObjExpr {
        &self.dom
    }

    pub fn cod(&self) -> &ObjExpr {
        &self.cod
    }

    pub fn flipped(&self) -> Equation {
        Equation { lhs: self.rhs.clone(), rhs: self.lhs.clone(), dom: self.dom.clone(), cod: self.cod.clone() }
    }

    pub fn generators(&self) -> Vec<String> {
        let mut out = self.lhs.object_generators();
        for g in self.rhs.object_generators() {
            if !out.contains(&g) {
                out.push(g);
            }
        }
        out
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

/// Orientation in which a schema is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn flip(self) -> Self {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Forward => "fwd",
            Direction::Backward => "bwd",
        })
    }
}

/// Value of one metavariable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Binding {
    Obj(ObjExpr),
    Mor(MorTerm),
}

impl fmt::Display for Binding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Binding::Obj(o) => write!(f, "{o}"),
            Binding::Mor(t) => write!(f, "{t}"),
        }
    }
}

/// Metavariable assignment; iteration order is by name.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subst(pub BTreeMap<String, Binding>);

impl Subst {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn obj(mut self, name: &str, o: ObjExpr) -> Self {
        self.0.insert(name.to_string(), Binding::Obj(o.normalize_par()));
        self
    }

    pub fn mor(mut self, name: &str, t: MorTerm) -> Self {
        self.0.insert(name.to_string(), Binding::Mor(t.normalize()));
        self
    }

    pub fn get_obj(&self, name: &str) -> Option<&ObjExpr> {
        match self.0.get(name) {
            Some(Binding::Obj(o)) => Some(o),
            _ => None,
        }
    }

    pub fn get_mor(&self, name: &str) -> Option<&MorTerm> {
        match self.0.get(name) {
            Some(Binding::Mor(t)) => Some(t),
            _ => None,
        }
    }
}

impl fmt::Display for Subst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}={v}")?;
        }
        f.write_str("}")
    }
}

/// A morphism metavariable and its type, written over object metavariables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorVar {
    pub name: String,
    pub dom: String,
    pub cod: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchemaKind {
    Category,
    Functoriality,
    Monoidal,
    Naturality,
    Interchange,
    Monoid,
    Bimodule,
    /// Derived law registered as a separate proof obligation.
    Lemma,
    Negation,
}

/// An equation schema over object metavariables (generators in `lhs`/`rhs`)
/// and morphism metavariables (free generators in `lhs`/`rhs`).
#[derive(Clone, Debug)]
pub struct AxiomSchema {
    pub id: String,
    pub kind: SchemaKind,
    pub obj_vars: Vec<String>,
    pub mor_vars: Vec<MorVar>,
    pub lhs: MorTerm,
    pub rhs: MorTerm,
    /// Set on schemas whose statement had to be reconstructed.
    pub note: Option<&'static str>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum InstantiateError {
    #[error("schema {schema}: missing metavariable {var}")]
    MissingVar { schema: String, var: String },
    #[error("schema {schema}: metavariable {var} bound to the wrong sort")]
    WrongSort { schema: String, var: String },
    #[error("schema {schema}: {var} must have type {expected}, got {found}")]
    MorVarType { schema: String, var: String, expected: String, found: String },
    #[error("schema {schema}: instance is ill-typed: {source}")]
    IllTyped { schema: String, source: EquationError },
}

impl AxiomSchema {
    pub fn side(&self, dir: Direction) -> (&MorTerm, &MorTerm) {
        match dir {
            Direction::Forward => (&self.lhs, &self.rhs),
            Direction::Backward => (&self.rhs, &self.lhs),
        }
    }

    fn is_obj_var(&self, n: &str) -> bool {
        self.obj_vars.iter().any(|v| v == n)
    }

    fn is_mor_var(&self, n: &str) -> bool {
        self.mor_vars.iter().any(|v| v.name == n)
    }

    /// Substitutes into a pattern without checking completeness.
    pub fn substitute(&self, pattern: &MorTerm, subst: &Subst) -> MorTerm {
        pattern.substitute(&|n| if self.is_obj_var(n) { subst.get_obj(n).cloned() } else { None }, &|n| {
            if self.is_mor_var(n) {
                subst.get_mor(n).cloned()
            } else {
                None
            }
        })
    }

    /// Fills object metavariables determined by the types of bound morphism
    /// metavariables. Conflicting or ill-typed bindings are left for
    /// [`instantiate`] to report.
    pub fn complete(&self, subst: &Subst) -> Subst {
        let mut out = subst.clone();
        for v in &self.mor_vars {
            if let Some(Ok((d, c))) = subst.get_mor(&v.name).map(MorTerm::infer_type) {
                out.0.entry(v.dom.clone()).or_insert(Binding::Obj(d));
                out.0.entry(v.cod.clone()).or_insert(Binding::Obj(c));
            }
        }
        out
    }

    pub fn check_subst(&self, subst: &Subst) -> Result<(), InstantiateError> {
        let schema = self.id.clone();
        for v in &self.obj_vars {
            match subst.0.get(v) {
                None => return Err(InstantiateError::MissingVar { schema, var: v.clone() }),
                Some(Binding::Mor(_)) => return Err(InstantiateError::WrongSort { schema, var: v.clone() }),
                Some(Binding::Obj(_)) => {}
            }
        }
        for v in &self.mor_vars {
            let t = match subst.0.get(&v.name) {
                None => return Err(InstantiateError::MissingVar { schema, var: v.name.clone() }),
                Some(Binding::Obj(_)) => return Err(InstantiateError::WrongSort { schema, var: v.name.clone() }),
                Some(Binding::Mor(t)) => t,
            };
            let expected =
                (subst.get_obj(&v.dom).unwrap().normalize_par(), subst.get_obj(&v.cod).unwrap().normalize_par());
            let found = t.infer_type();
            if found.as_ref() != Ok(&expected) {
                return Err(InstantiateError::MorVarType {
                    schema,
                    var: v.name.clone(),
                    expected: format!("{} ==> {}", expected.0, expected.1),
                    found: match found {
                        Ok((d, c)) => format!("{d} ==> {c}"),
                        Err(e) => e.to_string(),
                    },
                });
            }
        }
        Ok(())
    }
}

/// Instantiates a schema; both sides come back normalized and parallel.
pub fn instantiate(s: &AxiomSchema, subst: &Subst) -> Result<Equation, InstantiateError> {
    s.check_subst(subst)?;
    let lhs = s.substitute(&s.lhs, subst);
    let rhs = s.substitute(&s.rhs, subst);
    Equation::new(lhs, rhs).map_err(|source| InstantiateError::IllTyped { schema: s.id.clone(), source })
}
