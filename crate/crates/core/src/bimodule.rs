//! `R`-bimodules and the structure they induce: the `⊗`- and `⅋`-actions,
//! one-sided actions, the weak distributions `d^l`/`d^r` and equivariance
//! conditions.
//!
//! Every constructor returns a plain [`MorTerm`]; composites are built
//! right-nested so they line up with the chains the proof engine works on.

use crate::axioms::{Equation, EquationError};
use crate::term::{MorTerm, ObjExpr};

fn r() -> ObjExpr {
    ObjExpr::UnitPar
}

fn id(o: &ObjExpr) -> MorTerm {
    MorTerm::id(o.clone())
}

/// An object together with its two-sided action `(R ⊗ A) ⊗ R → A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BimoduleSym {
    pub carrier: ObjExpr,
    pub action: MorTerm,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum BimoduleError {
    #[error("action `{action}` does not have type (R * {carrier}) * R ==> {carrier}")]
    BadAction { carrier: String, action: String },
    #[error("carrier mismatch: {0}")]
    CarrierMismatch(String),
    #[error(transparent)]
    Equation(#[from] EquationError),
}

impl BimoduleSym {
    /// A free bimodule symbol: the carrier acted on by `act[carrier]`.
    pub fn free(carrier: ObjExpr) -> Self {
        let carrier = carrier.normalize_par();
        let action = MorTerm::Act(carrier.clone());
        BimoduleSym { carrier, action }
    }

    pub fn named(name: &str) -> Self {
        Self::free(ObjExpr::gen(name))
    }

    pub fn with_action(carrier: ObjExpr, action: MorTerm) -> Result<Self, BimoduleError> {
        let carrier = carrier.normalize_par();
        let expected = (ObjExpr::tens(ObjExpr::tens(r(), carrier.clone()), r()), carrier.clone());
        match action.infer_type() {
            Ok(t) if t == expected => Ok(BimoduleSym { carrier, action: action.normalize() }),
            _ => Err(BimoduleError::BadAction { carrier: carrier.to_string(), action: action.to_string() }),
        }
    }

    /// `R` acting on itself through `μ ∘ (μ ⊗ 1)`.
    pub fn unit() -> Self {
        let action = MorTerm::chain(vec![MorTerm::Mu, MorTerm::tens(MorTerm::Mu, id(&r()))]);
        BimoduleSym { carrier: r(), action }
    }

    /// `A ⊗ B` with the induced (unitless) action.
    pub fn tens(a: &BimoduleSym, b: &BimoduleSym) -> Self {
        BimoduleSym { carrier: ObjExpr::tens(a.carrier.clone(), b.carrier.clone()), action: induced_tens_action(a, b) }
    }

    /// `A ⅋ B` with the induced action.
    pub fn par(a: &BimoduleSym, b: &BimoduleSym) -> Self {
        BimoduleSym { carrier: ObjExpr::par(a.carrier.clone(), b.carrier.clone()), action: induced_par_action(a, b) }
    }
}

/// `(α ⊗ β) ∘ ((1 ⊗ η) ⊗ (η ⊗ 1)) ∘ (r⁻¹ ⊗ (l⁻¹ ⊗ 1)) ∘ a⁻¹ ∘ (1 ⊗ a) ∘ a`,
/// from `(R ⊗ (A ⊗ B)) ⊗ R` to `A ⊗ B`.
pub fn induced_tens_action(a: &BimoduleSym, b: &BimoduleSym) -> MorTerm {
    let (x, y) = (&a.carrier, &b.carrier);
    let ra = ObjExpr::tens(r(), x.clone());
    let yr = ObjExpr::tens(y.clone(), r());
    MorTerm::chain(vec![
        MorTerm::tens(a.action.clone(), b.action.clone()),
        MorTerm::tens(
            MorTerm::tens(id(&ra), MorTerm::Eta),
            MorTerm::tens(MorTerm::tens(MorTerm::Eta, id(y)), id(&r())),
        ),
        MorTerm::tens(MorTerm::runit_inv(ra.clone()), MorTerm::tens(MorTerm::lunit_inv(y.clone()), id(&r()))),
        MorTerm::assoc_inv(r(), x.clone(), yr),
        MorTerm::tens(id(&r()), MorTerm::assoc(x.clone(), y.clone(), r())),
        MorTerm::assoc(r(), ObjExpr::tens(x.clone(), y.clone()), r()),
    ])
}

/// The interchange `(R ⊗ (A ⅋ B)) ⊗ R → ((R ⊗ A) ⊗ R) ⅋ ((R ⊗ B) ⊗ R)` that
/// applies `m` to the left `R` first and then to the right one.
pub fn par_interchange_left_first(a: &ObjExpr, b: &ObjExpr) -> MorTerm {
    let ra = ObjExpr::tens(r(), a.clone());
    let rb = ObjExpr::tens(r(), b.clone());
    MorTerm::chain(vec![
        MorTerm::mid4(ra, rb, r(), r()),
        MorTerm::tens(MorTerm::mid4(r(), r(), a.clone(), b.clone()), id(&r())),
    ])
}

/// Same endpoints as [`par_interchange_left_first`], but the right `R` is
/// interchanged first and the result re-bracketed.
pub fn par_interchange_right_first(a: &ObjExpr, b: &ObjExpr) -> MorTerm {
    let ar = ObjExpr::tens(a.clone(), r());
    let br = ObjExpr::tens(b.clone(), r());
    MorTerm::chain(vec![
        MorTerm::par(MorTerm::assoc_inv(r(), a.clone(), r()), MorTerm::assoc_inv(r(), b.clone(), r())),
        MorTerm::mid4(r(), r(), ar, br),
        MorTerm::tens(id(&r()), MorTerm::mid4(a.clone(), b.clone(), r(), r())),
        MorTerm::assoc(r(), ObjExpr::par(a.clone(), b.clone()), r()),
    ])
}

/// `(α ⅋ β) ∘ m₂` where `m₂` is the left-first two-sided interchange.
pub fn induced_par_action(a: &BimoduleSym, b: &BimoduleSym) -> MorTerm {
    MorTerm::chain(vec![
        MorTerm::par(a.action.clone(), b.action.clone()),
        par_interchange_left_first(&a.carrier, &b.carrier),
    ])
}

/// Variant of [`induced_par_action`] built on the right-first interchange.
pub fn induced_par_action_right_first(a: &BimoduleSym, b: &BimoduleSym) -> MorTerm {
    MorTerm::chain(vec![
        MorTerm::par(a.action.clone(), b.action.clone()),
        par_interchange_right_first(&a.carrier, &b.carrier),
    ])
}

/// `α ∘ (1 ⊗ η) ∘ r⁻¹ : R ⊗ A → A`.
pub fn left_action(a: &BimoduleSym) -> MorTerm {
    let ra = ObjExpr::tens(r(), a.carrier.clone());
    MorTerm::chain(vec![a.action.clone(), MorTerm::tens(id(&ra), MorTerm::Eta), MorTerm::runit_inv(ra)])
}

/// `α ∘ ((η ⊗ 1) ⊗ 1) ∘ (l⁻¹ ⊗ 1) : A ⊗ R → A`.
pub fn right_action(a: &BimoduleSym) -> MorTerm {
    let x = &a.carrier;
    MorTerm::chain(vec![
        a.action.clone(),
        MorTerm::tens(MorTerm::tens(MorTerm::Eta, id(x)), id(&r())),
        MorTerm::tens(MorTerm::lunit_inv(x.clone()), id(&r())),
    ])
}

/// `d^l = (1 ⅋ λ_C) ∘ m[A,R,B,C] : A ⊗ (B ⅋ C) → (A ⊗ B) ⅋ C`.
pub fn build_dl(a: &BimoduleSym, b: &BimoduleSym, c: &BimoduleSym) -> MorTerm {
    let ab = ObjExpr::tens(a.carrier.clone(), b.carrier.clone());
    MorTerm::chain(vec![
        MorTerm::par(id(&ab), left_action(c)),
        MorTerm::mid4(a.carrier.clone(), r(), b.carrier.clone(), c.carrier.clone()),
    ])
}

/// `d^r = (ρ_B ⅋ 1) ∘ m[B,C,R,A] : (B ⅋ C) ⊗ A → B ⅋ (C ⊗ A)`.
pub fn build_dr(b: &BimoduleSym, c: &BimoduleSym, a: &BimoduleSym) -> MorTerm {
    let ca = ObjExpr::tens(c.carrier.clone(), a.carrier.clone());
    MorTerm::chain(vec![
        MorTerm::par(right_action(b), id(&ca)),
        MorTerm::mid4(b.carrier.clone(), c.carrier.clone(), r(), a.carrier.clone()),
    ])
}

/// Equivariance of `f`: `f ∘ α_dom = α_cod ∘ ((1 ⊗ f) ⊗ 1)`.
pub fn hom_condition(f: &MorTerm, dom_action: &MorTerm, cod_action: &MorTerm) -> Result<Equation, BimoduleError> {
    let (fd, fc) = f.infer_type().map_err(|e| BimoduleError::CarrierMismatch(e.to_string()))?;
    let check = |action: &MorTerm, carrier: &ObjExpr, which: &str| -> Result<(), BimoduleError> {
        let expected = (ObjExpr::tens(ObjExpr::tens(r(), carrier.clone()), r()), carrier.clone());
        match action.infer_type() {
            Ok(t) if t == expected => Ok(()),
            Ok((_, c)) => Err(BimoduleError::CarrierMismatch(format!(
                "{which} action acts on {c}, morphism has {which} {carrier}"
            ))),
            Err(e) => Err(BimoduleError::CarrierMismatch(e.to_string())),
        }
    };
    check(dom_action, &fd, "domain")?;
    check(cod_action, &fc, "codomain")?;
    let lhs = MorTerm::comp(f.clone(), dom_action.clone());
    let rhs = MorTerm::comp(cod_action.clone(), MorTerm::tens(MorTerm::tens(id(&r()), f.clone()), id(&r())));
    Ok(Equation::new(lhs, rhs)?)
}

/// `m[A,B,C,D]` as a morphism of bimodules: its equivariance condition with
/// respect to the induced `⊗`/`⅋` actions on either side.
pub fn m_hom_condition(
    a: &BimoduleSym,
    b: &BimoduleSym,
    c: &BimoduleSym,
    d: &BimoduleSym,
) -> Result<Equation, BimoduleError> {
    let m = MorTerm::mid4(a.carrier.clone(), b.carrier.clone(), c.carrier.clone(), d.carrier.clone());
    let dom = BimoduleSym::tens(&BimoduleSym::par(a, b), &BimoduleSym::par(c, d));
    let cod = BimoduleSym::par(&BimoduleSym::tens(a, c), &BimoduleSym::tens(b, d));
    hom_condition(&m, &dom.action, &cod.action)
}

/// A bimodule law that a construction depends on, with a stable name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obligation {
    pub id: String,
    pub equation: Equation,
}

/// Unit and associativity laws of the action, plus the one-sided
/// associativity laws the weak distributions rely on.
pub fn bimodule_obligations(a: &BimoduleSym) -> Result<Vec<Obligation>, BimoduleError> {
    let x = &a.carrier;
    let alpha = &a.action;
    let unit = Equation::new(
        MorTerm::chain(vec![
            alpha.clone(),
            MorTerm::tens(MorTerm::tens(MorTerm::Eta, id(x)), MorTerm::Eta),
            MorTerm::tens(MorTerm::lunit_inv(x.clone()), id(&ObjExpr::UnitTens)),
            MorTerm::runit_inv(x.clone()),
        ]),
        id(x),
    )?;
    let assoc = Equation::new(
        MorTerm::chain(vec![alpha.clone(), MorTerm::tens(MorTerm::tens(id(&r()), alpha.clone()), id(&r()))]),
        MorTerm::chain(vec![
            alpha.clone(),
            MorTerm::tens(MorTerm::tens(MorTerm::Mu, id(x)), MorTerm::Mu),
            MorTerm::assoc(ObjExpr::tens(ObjExpr::tens(r(), r()), x.clone()), r(), r()),
            MorTerm::tens(
                MorTerm::chain(vec![
                    MorTerm::tens(MorTerm::assoc_inv(r(), r(), x.clone()), id(&r())),
                    MorTerm::assoc_inv(r(), ObjExpr::tens(r(), x.clone()), r()),
                ]),
                id(&r()),
            ),
        ]),
    )?;
    Ok(vec![
        Obligation { id: "bimod-unit".into(), equation: unit },
        Obligation { id: "bimod-assoc".into(), equation: assoc },
        Obligation { id: "bimod-corollary".into(), equation: left_corollary(a)? },
        Obligation { id: "bimod-corollary-r".into(), equation: right_corollary(a)? },
    ])
}

/// `λ ∘ (1 ⊗ λ) ∘ a = λ ∘ (μ ⊗ 1)` on `(R ⊗ R) ⊗ A`.
pub fn left_corollary(a: &BimoduleSym) -> Result<Equation, EquationError> {
    let lam = left_action(a);
    Equation::new(
        MorTerm::chain(vec![
            lam.clone(),
            MorTerm::tens(id(&r()), lam.clone()),
            MorTerm::assoc(r(), r(), a.carrier.clone()),
        ]),
        MorTerm::chain(vec![lam, MorTerm::tens(MorTerm::Mu, id(&a.carrier))]),
    )
}

/// `ρ ∘ (ρ ⊗ 1) = ρ ∘ (1 ⊗ μ) ∘ a` on `(A ⊗ R) ⊗ R`.
pub fn right_corollary(a: &BimoduleSym) -> Result<Equation, EquationError> {
    let rho = right_action(a);
    Equation::new(
        MorTerm::chain(vec![rho.clone(), MorTerm::tens(rho.clone(), id(&r()))]),
        MorTerm::chain(vec![
            rho,
            MorTerm::tens(id(&a.carrier), MorTerm::Mu),
            MorTerm::assoc(a.carrier.clone(), r(), r()),
        ]),
    )
}

/// One-sided actions of `A ⅋ B` and `A ⊗ B` expressed through those of the factors.
pub fn induced_action_laws(a: &BimoduleSym, b: &BimoduleSym) -> Result<Vec<Obligation>, EquationError> {
    let (x, y) = (&a.carrier, &b.carrier);
    let par = BimoduleSym::par(a, b);
    let tens = BimoduleSym::tens(a, b);
    Ok(vec![
        Obligation {
            id: "bimod-par-action-l".into(),
            equation: Equation::new(
                left_action(&par),
                MorTerm::chain(vec![
                    MorTerm::par(left_action(a), left_action(b)),
                    MorTerm::mid4(r(), r(), x.clone(), y.clone()),
                ]),
            )?,
        },
        Obligation {
            id: "bimod-par-action-r".into(),
            equation: Equation::new(
                right_action(&par),
                MorTerm::chain(vec![
                    MorTerm::par(right_action(a), right_action(b)),
                    MorTerm::mid4(x.clone(), y.clone(), r(), r()),
                ]),
            )?,
        },
        Obligation {
            id: "bimod-tens-action-l".into(),
            equation: Equation::new(
                left_action(&tens),
                MorTerm::chain(vec![
                    MorTerm::tens(left_action(a), id(y)),
                    MorTerm::assoc_inv(r(), x.clone(), y.clone()),
                ]),
            )?,
        },
        Obligation {
            id: "bimod-tens-action-r".into(),
            equation: Equation::new(
                right_action(&tens),
                MorTerm::chain(vec![MorTerm::tens(id(x), right_action(b)), MorTerm::assoc(x.clone(), y.clone(), r())]),
            )?,
        },
    ])
}

/// Agreement of the two candidate interchanges inside the induced `⅋`-action.
pub fn par_action_order(a: &BimoduleSym, b: &BimoduleSym) -> Result<Equation, EquationError> {
    Equation::new(induced_par_action(a, b), induced_par_action_right_first(a, b))
}
