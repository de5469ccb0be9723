use std::fmt;

/// Object expression over named generators, the two units, `⊗`, `⅋` and formal negation.
///
/// `⊗` is binary and never re-associated implicitly; `⅋` is strict, so a
/// normalized `Par` is a flat list of at least two parts, none of which is a
/// `Par` or `UnitPar`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ObjExpr {
    /// `I`, the unit of `⊗`.
    UnitTens,
    /// `R`, the unit of `⅋`.
    UnitPar,
    Gen(String),
    Tens(Box<ObjExpr>, Box<ObjExpr>),
    Par(Vec<ObjExpr>),
    Neg(Box<ObjExpr>),
}

impl ObjExpr {
    pub fn gen(name: impl Into<String>) -> Self {
        ObjExpr::Gen(name.into())
    }

    pub fn tens(left: ObjExpr, right: ObjExpr) -> Self {
        ObjExpr::Tens(Box::new(left), Box::new(right))
    }

    /// Builds `left ⅋ right` already in strict normal form.
    pub fn par(left: ObjExpr, right: ObjExpr) -> Self {
        Self::par_all(vec![left, right])
    }

    /// Strict n-ary `⅋`; empty input gives `R`.
    pub fn par_all(parts: Vec<ObjExpr>) -> Self {
        ObjExpr::Par(parts).normalize_par()
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(inner: ObjExpr) -> Self {
        ObjExpr::Neg(Box::new(inner))
    }

    /// Rewrites into `⅋`-strictness normal form: flattens nested `Par`,
    /// drops `R` parts, collapses empty and singleton lists.
    pub fn normalize_par(&self) -> ObjExpr {
        match self {
            ObjExpr::UnitTens | ObjExpr::UnitPar | ObjExpr::Gen(_) => self.clone(),
            ObjExpr::Tens(l, r) => ObjExpr::tens(l.normalize_par(), r.normalize_par()),
            ObjExpr::Neg(x) => ObjExpr::neg(x.normalize_par()),
            ObjExpr::Par(parts) => {
                let mut flat = Vec::with_capacity(parts.len());
                for p in parts {
                    match p.normalize_par() {
                        ObjExpr::UnitPar => {}
                        ObjExpr::Par(inner) => flat.extend(inner),
                        other => flat.push(other),
                    }
                }
                match flat.len() {
                    0 => ObjExpr::UnitPar,
                    1 => flat.pop().unwrap(),
                    _ => ObjExpr::Par(flat),
                }
            }
        }
    }

    pub fn is_normal(&self) -> bool {
        match self {
            ObjExpr::UnitTens | ObjExpr::UnitPar | ObjExpr::Gen(_) => true,
            ObjExpr::Tens(l, r) => l.is_normal() && r.is_normal(),
            ObjExpr::Neg(x) => x.is_normal(),
            ObjExpr::Par(parts) => {
                parts.len() >= 2
                    && parts.iter().all(|p| !matches!(p, ObjExpr::Par(_) | ObjExpr::UnitPar) && p.is_normal())
            }
        }
    }

    /// The `⅋`-factors of a normalized object (`R` has none).
    pub fn par_parts(&self) -> Vec<ObjExpr> {
        match self {
            ObjExpr::UnitPar => Vec::new(),
            ObjExpr::Par(parts) => parts.clone(),
            other => vec![other.clone()],
        }
    }

    pub fn size(&self) -> usize {
        match self {
            ObjExpr::UnitTens | ObjExpr::UnitPar | ObjExpr::Gen(_) => 1,
            ObjExpr::Tens(l, r) => 1 + l.size() + r.size(),
            ObjExpr::Neg(x) => 1 + x.size(),
            ObjExpr::Par(parts) => 1 + parts.iter().map(ObjExpr::size).sum::<usize>(),
        }
    }

    /// Generator names in first-occurrence order.
    pub fn generators(&self, out: &mut Vec<String>) {
        match self {
            ObjExpr::UnitTens | ObjExpr::UnitPar => {}
            ObjExpr::Gen(n) => {
                if !out.contains(n) {
                    out.push(n.clone());
                }
            }
            ObjExpr::Tens(l, r) => {
                l.generators(out);
                r.generators(out);
            }
            ObjExpr::Neg(x) => x.generators(out),
            ObjExpr::Par(parts) => parts.iter().for_each(|p| p.generators(out)),
        }
    }

    /// Replaces generators by objects; the result is normalized.
    pub fn substitute(&self, f: &impl Fn(&str) -> Option<ObjExpr>) -> ObjExpr {
        self.subst_raw(f).normalize_par()
    }

    fn subst_raw(&self, f: &impl Fn(&str) -> Option<ObjExpr>) -> ObjExpr {
        match self {
            ObjExpr::UnitTens | ObjExpr::UnitPar => self.clone(),
            ObjExpr::Gen(n) => f(n).unwrap_or_else(|| self.clone()),
            ObjExpr::Tens(l, r) => ObjExpr::tens(l.subst_raw(f), r.subst_raw(f)),
            ObjExpr::Neg(x) => ObjExpr::neg(x.subst_raw(f)),
            ObjExpr::Par(parts) => ObjExpr::Par(parts.iter().map(|p| p.subst_raw(f)).collect()),
        }
    }
}

impl fmt::Display for ObjExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObjExpr::UnitTens => f.write_str("I"),
            ObjExpr::UnitPar => f.write_str("R"),
            ObjExpr::Gen(n) => f.write_str(n),
            ObjExpr::Tens(l, r) => write!(f, "({l} * {r})"),
            ObjExpr::Neg(x) => write!(f, "neg({x})"),
            ObjExpr::Par(parts) => {
                f.write_str("(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" % ")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str(")")
            }
        }
    }
}
