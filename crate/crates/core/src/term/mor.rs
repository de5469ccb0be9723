use std::fmt;

use super::obj::ObjExpr;
use super::TypeError;

/// Typed morphism term.
///
/// `Comp(g, f)` is `g ∘ f`. `ParM` is the strict n-ary `⅋` of morphisms; after
/// [`MorTerm::normalize`] it has at least two parts, none of which is a `ParM`
/// or `id[R]`, and identities on `⅋`-objects are expanded into `ParM` of
/// identities.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MorTerm {
    Id(ObjExpr),
    Comp(Box<MorTerm>, Box<MorTerm>),
    TensM(Box<MorTerm>, Box<MorTerm>),
    ParM(Vec<MorTerm>),
    Assoc {
        x: ObjExpr,
        y: ObjExpr,
        z: ObjExpr,
        inverse: bool,
    },
    LUnit {
        x: ObjExpr,
        inverse: bool,
    },
    RUnit {
        x: ObjExpr,
        inverse: bool,
    },
    Mid4(ObjExpr, ObjExpr, ObjExpr, ObjExpr),
    Mu,
    Eta,
    GammaG(ObjExpr),
    TauG(ObjExpr),
    /// Two-sided action `(R ⊗ A) ⊗ R → A`.
    Act(ObjExpr),
    FreeGen {
        name: String,
        dom: ObjExpr,
        cod: ObjExpr,
    },
}

impl MorTerm {
    pub fn id(o: ObjExpr) -> Self {
        MorTerm::Id(o).normalize()
    }

    pub fn comp(after: MorTerm, before: MorTerm) -> Self {
        MorTerm::Comp(Box::new(after), Box::new(before))
    }

    /// Right-nested composite of `fs` read left to right as `fs[0] ∘ fs[1] ∘ ...`.
    pub fn chain(fs: Vec<MorTerm>) -> Self {
        let mut it = fs.into_iter().rev();
        let mut acc = it.next().expect("empty composite");
        for f in it {
            acc = MorTerm::comp(f, acc);
        }
        acc
    }

    /// Re-nests every composite to the right, recursively. Purely syntactic;
    /// the result equals `self` up to `comp-assoc`.
    pub fn nest_right(&self) -> MorTerm {
        use MorTerm::*;
        match self {
            Comp(..) => {
                let mut fs = Vec::new();
                self.push_factors(&mut fs);
                MorTerm::chain(fs.into_iter().map(|f| f.nest_right()).collect())
            }
            TensM(f, g) => TensM(Box::new(f.nest_right()), Box::new(g.nest_right())),
            ParM(ps) => ParM(ps.iter().map(MorTerm::nest_right).collect()),
            other => other.clone(),
        }
    }

    fn push_factors<'a>(&'a self, out: &mut Vec<&'a MorTerm>) {
        match self {
            MorTerm::Comp(g, f) => {
                g.push_factors(out);
                f.push_factors(out);
            }
            other => out.push(other),
        }
    }

    pub fn tens(f: MorTerm, g: MorTerm) -> Self {
        MorTerm::TensM(Box::new(f), Box::new(g))
    }

    pub fn par(f: MorTerm, g: MorTerm) -> Self {
        MorTerm::ParM(vec![f, g]).normalize()
    }

    pub fn par_all(parts: Vec<MorTerm>) -> Self {
        MorTerm::ParM(parts).normalize()
    }

    pub fn assoc(x: ObjExpr, y: ObjExpr, z: ObjExpr) -> Self {
        MorTerm::Assoc { x, y, z, inverse: false }
    }

    pub fn assoc_inv(x: ObjExpr, y: ObjExpr, z: ObjExpr) -> Self {
        MorTerm::Assoc { x, y, z, inverse: true }
    }

    pub fn lunit(x: ObjExpr) -> Self {
        MorTerm::LUnit { x, inverse: false }
    }

    pub fn lunit_inv(x: ObjExpr) -> Self {
        MorTerm::LUnit { x, inverse: true }
    }

    pub fn runit(x: ObjExpr) -> Self {
        MorTerm::RUnit { x, inverse: false }
    }

    pub fn runit_inv(x: ObjExpr) -> Self {
        MorTerm::RUnit { x, inverse: true }
    }

    pub fn mid4(a: ObjExpr, b: ObjExpr, c: ObjExpr, d: ObjExpr) -> Self {
        MorTerm::Mid4(a, b, c, d).normalize()
    }

    pub fn free(name: impl Into<String>, dom: ObjExpr, cod: ObjExpr) -> Self {
        MorTerm::FreeGen { name: name.into(), dom, cod }.normalize()
    }

    /// `⅋`-strictness normal form, applied to every object annotation and to
    /// every `⅋` of morphisms.
    pub fn normalize(&self) -> MorTerm {
        use MorTerm::*;
        match self {
            Id(o) => {
                let o = o.normalize_par();
                match o {
                    ObjExpr::Par(parts) => ParM(parts.into_iter().map(Id).collect()),
                    o => Id(o),
                }
            }
            Comp(g, f) => MorTerm::comp(g.normalize(), f.normalize()),
            TensM(f, g) => MorTerm::tens(f.normalize(), g.normalize()),
            ParM(parts) => {
                let mut flat = Vec::with_capacity(parts.len());
                for p in parts {
                    match p.normalize() {
                        Id(ObjExpr::UnitPar) => {}
                        ParM(inner) => flat.extend(inner),
                        other => flat.push(other),
                    }
                }
                match flat.len() {
                    0 => Id(ObjExpr::UnitPar),
                    1 => flat.pop().unwrap(),
                    _ => ParM(flat),
                }
            }
            Assoc { x, y, z, inverse } => {
                Assoc { x: x.normalize_par(), y: y.normalize_par(), z: z.normalize_par(), inverse: *inverse }
            }
            LUnit { x, inverse } => LUnit { x: x.normalize_par(), inverse: *inverse },
            RUnit { x, inverse } => RUnit { x: x.normalize_par(), inverse: *inverse },
            Mid4(a, b, c, d) => Mid4(a.normalize_par(), b.normalize_par(), c.normalize_par(), d.normalize_par()),
            Mu => Mu,
            Eta => Eta,
            GammaG(a) => GammaG(a.normalize_par()),
            TauG(a) => TauG(a.normalize_par()),
            Act(a) => Act(a.normalize_par()),
            FreeGen { name, dom, cod } => {
                FreeGen { name: name.clone(), dom: dom.normalize_par(), cod: cod.normalize_par() }
            }
        }
    }

    /// Infers `(dom, cod)`; both are `⅋`-normalized.
    pub fn infer_type(&self) -> Result<(ObjExpr, ObjExpr), TypeError> {
        use MorTerm::*;
        Ok(match self {
            Id(o) => {
                let o = o.normalize_par();
                (o.clone(), o)
            }
            Comp(g, f) => {
                let (fd, fc) = f.infer_type()?;
                let (gd, gc) = g.infer_type()?;
                if fc != gd {
                    return Err(TypeError::Mismatch {
                        term: self.to_string(),
                        before_cod: fc.to_string(),
                        after_dom: gd.to_string(),
                    });
                }
                (fd, gc)
            }
            TensM(f, g) => {
                let (fd, fc) = f.infer_type()?;
                let (gd, gc) = g.infer_type()?;
                (ObjExpr::tens(fd, gd), ObjExpr::tens(fc, gc))
            }
            ParM(parts) => {
                let mut doms = Vec::with_capacity(parts.len());
                let mut cods = Vec::with_capacity(parts.len());
                for p in parts {
                    let (d, c) = p.infer_type()?;
                    doms.push(d);
                    cods.push(c);
                }
                (ObjExpr::par_all(doms), ObjExpr::par_all(cods))
            }
            Assoc { x, y, z, inverse } => {
                let (x, y, z) = (x.normalize_par(), y.normalize_par(), z.normalize_par());
                let lhs = ObjExpr::tens(ObjExpr::tens(x.clone(), y.clone()), z.clone());
                let rhs = ObjExpr::tens(x, ObjExpr::tens(y, z));
                flip(*inverse, lhs, rhs)
            }
            LUnit { x, inverse } => {
                let x = x.normalize_par();
                flip(*inverse, ObjExpr::tens(ObjExpr::UnitTens, x.clone()), x)
            }
            RUnit { x, inverse } => {
                let x = x.normalize_par();
                flip(*inverse, ObjExpr::tens(x.clone(), ObjExpr::UnitTens), x)
            }
            Mid4(a, b, c, d) => (
                ObjExpr::tens(ObjExpr::par(a.clone(), b.clone()), ObjExpr::par(c.clone(), d.clone())),
                ObjExpr::par(
                    ObjExpr::tens(a.normalize_par(), c.normalize_par()),
                    ObjExpr::tens(b.normalize_par(), d.normalize_par()),
                ),
            ),
            Mu => (ObjExpr::tens(ObjExpr::UnitPar, ObjExpr::UnitPar), ObjExpr::UnitPar),
            Eta => (ObjExpr::UnitTens, ObjExpr::UnitPar),
            GammaG(a) => {
                let a = a.normalize_par();
                (ObjExpr::tens(a.clone(), ObjExpr::neg(a)), ObjExpr::UnitPar)
            }
            TauG(a) => {
                let a = a.normalize_par();
                (ObjExpr::UnitTens, ObjExpr::par(ObjExpr::neg(a.clone()), a))
            }
            Act(a) => {
                let a = a.normalize_par();
                (ObjExpr::tens(ObjExpr::tens(ObjExpr::UnitPar, a.clone()), ObjExpr::UnitPar), a)
            }
            FreeGen { dom, cod, .. } => (dom.normalize_par(), cod.normalize_par()),
        })
    }

    pub fn dom(&self) -> Result<ObjExpr, TypeError> {
        self.infer_type().map(|t| t.0)
    }

    pub fn cod(&self) -> Result<ObjExpr, TypeError> {
        self.infer_type().map(|t| t.1)
    }

    /// Whether this (normalized) term is an identity, including a `⅋` of identities.
    pub fn identity_object(&self) -> Option<ObjExpr> {
        match self {
            MorTerm::Id(o) => Some(o.clone()),
            MorTerm::ParM(parts) => {
                let objs: Option<Vec<_>> = parts
                    .iter()
                    .map(|p| match p {
                        MorTerm::Id(o) => Some(o.clone()),
                        _ => None,
                    })
                    .collect();
                objs.map(ObjExpr::par_all)
            }
            _ => None,
        }
    }

    /// Node count, objects included.
    pub fn size(&self) -> usize {
        use MorTerm::*;
        match self {
            Id(o) | GammaG(o) | TauG(o) | Act(o) => 1 + o.size(),
            Comp(g, f) | TensM(g, f) => 1 + g.size() + f.size(),
            ParM(parts) => 1 + parts.iter().map(MorTerm::size).sum::<usize>(),
            Assoc { x, y, z, .. } => 1 + x.size() + y.size() + z.size(),
            LUnit { x, .. } | RUnit { x, .. } => 1 + x.size(),
            Mid4(a, b, c, d) => 1 + a.size() + b.size() + c.size() + d.size(),
            Mu | Eta => 1,
            FreeGen { dom, cod, .. } => 1 + dom.size() + cod.size(),
        }
    }

    pub fn children(&self) -> Vec<&MorTerm> {
        match self {
            MorTerm::Comp(g, f) | MorTerm::TensM(g, f) => vec![g, f],
            MorTerm::ParM(parts) => parts.iter().collect(),
            _ => Vec::new(),
        }
    }

    /// Object generators occurring anywhere in the term, first occurrence first.
    pub fn object_generators(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.visit_objects(&mut |o| o.generators(&mut out));
        out
    }

    pub fn visit_objects(&self, f: &mut impl FnMut(&ObjExpr)) {
        use MorTerm::*;
        match self {
            Id(o) | GammaG(o) | TauG(o) | Act(o) => f(o),
            Comp(g, h) | TensM(g, h) => {
                g.visit_objects(f);
                h.visit_objects(f);
            }
            ParM(parts) => parts.iter().for_each(|p| p.visit_objects(f)),
            Assoc { x, y, z, .. } => {
                f(x);
                f(y);
                f(z);
            }
            LUnit { x, .. } | RUnit { x, .. } => f(x),
            Mid4(a, b, c, d) => {
                f(a);
                f(b);
                f(c);
                f(d);
            }
            Mu | Eta => {}
            FreeGen { dom, cod, .. } => {
                f(dom);
                f(cod);
            }
        }
    }

    /// Substitutes object generators and free morphism generators, then normalizes.
    pub fn substitute(
        &self,
        objs: &impl Fn(&str) -> Option<ObjExpr>,
        mors: &impl Fn(&str) -> Option<MorTerm>,
    ) -> MorTerm {
        self.subst_raw(objs, mors).normalize()
    }

    fn subst_raw(&self, objs: &impl Fn(&str) -> Option<ObjExpr>, mors: &impl Fn(&str) -> Option<MorTerm>) -> MorTerm {
        use MorTerm::*;
        let o = |x: &ObjExpr| x.substitute(objs);
        match self {
            Id(x) => Id(o(x)),
            Comp(g, f) => MorTerm::comp(g.subst_raw(objs, mors), f.subst_raw(objs, mors)),
            TensM(g, f) => MorTerm::tens(g.subst_raw(objs, mors), f.subst_raw(objs, mors)),
            ParM(parts) => ParM(parts.iter().map(|p| p.subst_raw(objs, mors)).collect()),
            Assoc { x, y, z, inverse } => Assoc { x: o(x), y: o(y), z: o(z), inverse: *inverse },
            LUnit { x, inverse } => LUnit { x: o(x), inverse: *inverse },
            RUnit { x, inverse } => RUnit { x: o(x), inverse: *inverse },
            Mid4(a, b, c, d) => Mid4(o(a), o(b), o(c), o(d)),
            Mu => Mu,
            Eta => Eta,
            GammaG(a) => GammaG(o(a)),
            TauG(a) => TauG(o(a)),
            Act(a) => Act(o(a)),
            FreeGen { name, dom, cod } => match mors(name) {
                Some(t) => t,
                None => FreeGen { name: name.clone(), dom: o(dom), cod: o(cod) },
            },
        }
    }
}

fn flip(inverse: bool, a: ObjExpr, b: ObjExpr) -> (ObjExpr, ObjExpr) {
    if inverse {
        (b, a)
    } else {
        (a, b)
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, objs: &[&ObjExpr]) -> fmt::Result {
    f.write_str("[")?;
    for (i, o) in objs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{o}")?;
    }
    f.write_str("]")
}

impl MorTerm {
    fn fmt_operand(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if matches!(self, MorTerm::Comp(..)) {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for MorTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use MorTerm::*;
        let tick = |inv: bool| if inv { "'" } else { "" };
        match self {
            Id(o) => write!(f, "id[{o}]"),
            Comp(g, h) => {
                // `o` is right-associative, so only a composite on the left needs parentheses.
                g.fmt_operand(f)?;
                write!(f, " o {h}")
            }
            TensM(g, h) => {
                f.write_str("(")?;
                g.fmt_operand(f)?;
                f.write_str(" * ")?;
                h.fmt_operand(f)?;
                f.write_str(")")
            }
            ParM(parts) => {
                f.write_str("(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" % ")?;
                    }
                    p.fmt_operand(f)?;
                }
                f.write_str(")")
            }
            Assoc { x, y, z, inverse } => {
                write!(f, "a{}", tick(*inverse))?;
                write_list(f, &[x, y, z])
            }
            LUnit { x, inverse } => write!(f, "l{}[{x}]", tick(*inverse)),
            RUnit { x, inverse } => write!(f, "r{}[{x}]", tick(*inverse)),
            Mid4(a, b, c, d) => {
                f.write_str("m")?;
                write_list(f, &[a, b, c, d])
            }
            Mu => f.write_str("mu"),
            Eta => f.write_str("eta"),
            GammaG(a) => write!(f, "gamma[{a}]"),
            TauG(a) => write!(f, "tau[{a}]"),
            Act(a) => write!(f, "act[{a}]"),
            FreeGen { name, dom, cod } => write!(f, "gen({name}, {dom}, {cod})"),
        }
    }
}
