//! The coherence equations (7)-(14) for the weak distributions `d^l`, `d^r`.

use crate::axioms::{Equation, EquationError};
use crate::bimodule::{build_dl, build_dr, left_action, right_action, BimoduleSym};
use crate::term::{MorTerm, ObjExpr};

/// Numbers with a shipped equation.
pub const SHIPPED: [u8; 8] = [7, 8, 9, 10, 11, 12, 13, 14];
/// Numbers reserved for equations supplied at load time.
pub const EXTENSION_POINTS: [u8; 3] = [2, 3, 4];

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CsError {
    #[error("CS ({0}) is an extension point: supply its equation in a proof-script file")]
    ExtensionPoint(u8),
    #[error("no CS equation numbered {0}")]
    Unknown(u8),
    #[error(transparent)]
    Equation(#[from] EquationError),
}

/// Objects substituted for the generic `A, B, C, D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CsObjects {
    pub a: ObjExpr,
    pub b: ObjExpr,
    pub c: ObjExpr,
    pub d: ObjExpr,
}

impl Default for CsObjects {
    fn default() -> Self {
        CsObjects { a: ObjExpr::gen("A"), b: ObjExpr::gen("B"), c: ObjExpr::gen("C"), d: ObjExpr::gen("D") }
    }
}

fn id(o: &ObjExpr) -> MorTerm {
    MorTerm::id(o.clone())
}

/// The equation numbered `n`, over free bimodules on the given objects.
/// Composite bimodules carry their induced actions.
pub fn cs_equation(n: u8, objs: &CsObjects) -> Result<Equation, CsError> {
    let a = BimoduleSym::free(objs.a.clone());
    let b = BimoduleSym::free(objs.b.clone());
    let c = BimoduleSym::free(objs.c.clone());
    let d = BimoduleSym::free(objs.d.clone());
    let (x, y, z, w) = (&objs.a, &objs.b, &objs.c, &objs.d);
    let unit = BimoduleSym::unit();
    let r = ObjExpr::UnitPar;
    let (lhs, rhs) = match n {
        7 => (
            MorTerm::chain(vec![MorTerm::par(right_action(&a), id(z)), build_dl(&a, &unit, &c)]),
            MorTerm::chain(vec![
                MorTerm::par(right_action(&a), left_action(&c)),
                MorTerm::mid4(x.clone(), r.clone(), r.clone(), z.clone()),
            ]),
        ),
        8 => (
            MorTerm::chain(vec![MorTerm::par(id(x), left_action(&c)), build_dr(&a, &unit, &c)]),
            MorTerm::chain(vec![
                MorTerm::par(right_action(&a), left_action(&c)),
                MorTerm::mid4(x.clone(), r.clone(), r.clone(), z.clone()),
            ]),
        ),
        9 => (
            MorTerm::chain(vec![
                MorTerm::par(MorTerm::assoc(x.clone(), y.clone(), z.clone()), id(w)),
                build_dl(&BimoduleSym::tens(&a, &b), &c, &d),
            ]),
            MorTerm::chain(vec![
                build_dl(&a, &BimoduleSym::tens(&b, &c), &d),
                MorTerm::tens(id(x), build_dl(&b, &c, &d)),
                MorTerm::assoc(x.clone(), y.clone(), ObjExpr::par(z.clone(), w.clone())),
            ]),
        ),
        10 => (
            MorTerm::chain(vec![
                MorTerm::par(id(y), MorTerm::assoc(z.clone(), x.clone(), w.clone())),
                build_dr(&b, &BimoduleSym::tens(&c, &a), &d),
                MorTerm::tens(build_dr(&b, &c, &a), id(w)),
            ]),
            MorTerm::chain(vec![
                build_dr(&b, &c, &BimoduleSym::tens(&a, &d)),
                MorTerm::assoc(ObjExpr::par(y.clone(), z.clone()), x.clone(), w.clone()),
            ]),
        ),
        11 => (
            MorTerm::chain(vec![
                MorTerm::par(id(x), build_dr(&b, &c, &d)),
                build_dr(&a, &BimoduleSym::par(&b, &c), &d),
            ]),
            build_dr(&BimoduleSym::par(&a, &b), &c, &d),
        ),
        12 => (
            MorTerm::chain(vec![
                MorTerm::par(build_dl(&a, &b, &c), id(w)),
                build_dl(&a, &BimoduleSym::par(&b, &c), &d),
            ]),
            build_dl(&a, &b, &BimoduleSym::par(&c, &d)),
        ),
        13 => (
            MorTerm::chain(vec![
                MorTerm::par(id(x), build_dl(&b, &c, &d)),
                build_dr(&a, &b, &BimoduleSym::par(&c, &d)),
            ]),
            MorTerm::chain(vec![
                MorTerm::par(build_dr(&a, &b, &c), id(w)),
                build_dl(&BimoduleSym::par(&a, &b), &c, &d),
            ]),
        ),
        14 => (
            MorTerm::chain(vec![
                build_dr(&BimoduleSym::tens(&a, &b), &c, &d),
                MorTerm::tens(build_dl(&a, &b, &c), id(w)),
            ]),
            MorTerm::chain(vec![
                build_dl(&a, &b, &BimoduleSym::tens(&c, &d)),
                MorTerm::tens(id(x), build_dr(&b, &c, &d)),
                MorTerm::assoc(x.clone(), ObjExpr::par(y.clone(), z.clone()), w.clone()),
            ]),
        ),
        n if EXTENSION_POINTS.contains(&n) => return Err(CsError::ExtensionPoint(n)),
        n => return Err(CsError::Unknown(n)),
    };
    Ok(Equation::new(lhs, rhs)?)
}
