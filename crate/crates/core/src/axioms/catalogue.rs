use std::sync::OnceLock;

use super::{AxiomSchema, MorVar, SchemaKind};
use crate::bimodule::{self, BimoduleSym};
use crate::term::{parse_term, MorTerm};

/// The fixed, ordered schema catalogue. Order is significant: it is the
/// tie-breaker for matching and proof search.
#[derive(Debug)]
pub struct Catalogue {
    schemas: Vec<AxiomSchema>,
    negation: bool,
}

fn vars(s: &str) -> Vec<String> {
    s.split_whitespace().map(str::to_string).collect()
}

fn mvars(ms: &[(&str, &str, &str)]) -> Vec<MorVar> {
    ms.iter().map(|(n, d, c)| MorVar { name: n.to_string(), dom: d.to_string(), cod: c.to_string() }).collect()
}

fn t(text: &str) -> MorTerm {
    parse_term(text).unwrap_or_else(|e| panic!("catalogue term `{text}`: {e}"))
}

fn schema(id: &str, kind: SchemaKind, objs: &str, mors: &[(&str, &str, &str)], lhs: &str, rhs: &str) -> AxiomSchema {
    AxiomSchema {
        id: id.to_string(),
        kind,
        obj_vars: vars(objs),
        mor_vars: mvars(mors),
        lhs: t(lhs),
        rhs: t(rhs),
        note: None,
    }
}

fn lemma(id: &str, objs: &str, lhs: MorTerm, rhs: MorTerm) -> AxiomSchema {
    AxiomSchema {
        id: id.to_string(),
        kind: SchemaKind::Lemma,
        obj_vars: vars(objs),
        mor_vars: Vec::new(),
        lhs: lhs.normalize().nest_right(),
        rhs: rhs.normalize().nest_right(),
        note: Some("derived law; discharged as a separate obligation"),
    }
}

fn build(negation: bool) -> Vec<AxiomSchema> {
    use SchemaKind::*;
    let f = ("f", "A", "B");
    let mut out = vec![
        schema(
            "comp-assoc",
            Category,
            "A B C D",
            &[f, ("g", "B", "C"), ("h", "C", "D")],
            "(gen(h, C, D) o gen(g, B, C)) o gen(f, A, B)",
            "gen(h, C, D) o gen(g, B, C) o gen(f, A, B)",
        ),
        schema("id-left", Category, "A B", &[f], "id[B] o gen(f, A, B)", "gen(f, A, B)"),
        schema("id-right", Category, "A B", &[f], "gen(f, A, B) o id[A]", "gen(f, A, B)"),
        schema(
            "tens-interchange",
            Functoriality,
            "A B C D E F",
            &[f, ("g", "B", "C"), ("h", "D", "E"), ("k", "E", "F")],
            "(gen(g, B, C) * gen(k, E, F)) o (gen(f, A, B) * gen(h, D, E))",
            "(gen(g, B, C) o gen(f, A, B)) * (gen(k, E, F) o gen(h, D, E))",
        ),
        schema(
            "par-interchange",
            Functoriality,
            "A B C D E F",
            &[f, ("g", "B", "C"), ("h", "D", "E"), ("k", "E", "F")],
            "(gen(g, B, C) % gen(k, E, F)) o (gen(f, A, B) % gen(h, D, E))",
            "(gen(g, B, C) o gen(f, A, B)) % (gen(k, E, F) o gen(h, D, E))",
        ),
        schema("tens-id", Functoriality, "A B", &[], "id[A] * id[B]", "id[(A * B)]"),
        schema("assoc-inv-l", Monoidal, "A B C", &[], "a'[A,B,C] o a[A,B,C]", "id[((A * B) * C)]"),
        schema("assoc-inv-r", Monoidal, "A B C", &[], "a[A,B,C] o a'[A,B,C]", "id[(A * (B * C))]"),
        schema("lunit-inv-l", Monoidal, "A", &[], "l'[A] o l[A]", "id[(I * A)]"),
        schema("lunit-inv-r", Monoidal, "A", &[], "l[A] o l'[A]", "id[A]"),
        schema("runit-inv-l", Monoidal, "A", &[], "r'[A] o r[A]", "id[(A * I)]"),
        schema("runit-inv-r", Monoidal, "A", &[], "r[A] o r'[A]", "id[A]"),
        schema(
            "pentagon",
            Monoidal,
            "A B C D",
            &[],
            "(id[A] * a[B,C,D]) o a[A,(B * C),D] o (a[A,B,C] * id[D])",
            "a[A,B,(C * D)] o a[(A * B),C,D]",
        ),
        schema("triangle", Monoidal, "A B", &[], "(id[A] * l[B]) o a[A,I,B]", "r[A] * id[B]"),
        schema("unit-coherence", Monoidal, "", &[], "l[I]", "r[I]"),
        schema(
            "a-natural",
            Naturality,
            "A B C A2 B2 C2",
            &[("f", "A", "A2"), ("g", "B", "B2"), ("h", "C", "C2")],
            "a[A2,B2,C2] o ((gen(f, A, A2) * gen(g, B, B2)) * gen(h, C, C2))",
            "(gen(f, A, A2) * (gen(g, B, B2) * gen(h, C, C2))) o a[A,B,C]",
        ),
        schema("l-natural", Naturality, "A B", &[f], "l[B] o (id[I] * gen(f, A, B))", "gen(f, A, B) o l[A]"),
        schema("r-natural", Naturality, "A B", &[f], "r[B] o (gen(f, A, B) * id[I])", "gen(f, A, B) o r[A]"),
        schema(
            "m-natural",
            Naturality,
            "A B C D A2 B2 C2 D2",
            &[("f", "A", "A2"), ("g", "B", "B2"), ("h", "C", "C2"), ("k", "D", "D2")],
            "m[A2,B2,C2,D2] o ((gen(f, A, A2) % gen(g, B, B2)) * (gen(h, C, C2) % gen(k, D, D2)))",
            "((gen(f, A, A2) * gen(h, C, C2)) % (gen(g, B, B2) * gen(k, D, D2))) o m[A,B,C,D]",
        ),
        schema(
            "M1",
            Interchange,
            "U V W X Y Z",
            &[],
            "(a[U,W,Y] % a[V,X,Z]) o m[(U * W),(V * X),Y,Z] o (m[U,V,W,X] * id[(Y % Z)])",
            "m[U,V,(W * Y),(X * Z)] o (id[(U % V)] * m[W,X,Y,Z]) o a[(U % V),(W % X),(Y % Z)]",
        ),
        schema(
            "M2",
            Interchange,
            "U V W X Y Z",
            &[],
            "(m[U,V,X,Y] % id[(W * Z)]) o m[(U % V),W,(X % Y),Z]",
            "(id[(U * X)] % m[V,W,Y,Z]) o m[U,(V % W),X,(Y % Z)]",
        ),
        schema(
            "M3",
            Interchange,
            "A B C D",
            &[],
            "(id[((A * B) * C)] % (mu * id[D])) o m[(A * B),(R * R),C,D] o (m[A,R,B,R] * id[(C % D)])",
            "m[(A * B),R,C,D]",
        ),
        AxiomSchema {
            note: Some("letters reconstructed so that both sides type-check"),
            ..schema(
                "M4",
                Interchange,
                "A B C D",
                &[],
                "((id[B] * mu) % id[(C * (A * D))]) o m[B,C,(R * R),(A * D)] o (id[(B % C)] * m[R,A,R,D])",
                "m[B,C,R,(A * D)]",
            )
        },
        schema("mu-assoc", Monoid, "", &[], "mu o (mu * id[R])", "mu o (id[R] * mu) o a[R,R,R]"),
        schema("mu-unit-l", Monoid, "", &[], "mu o (eta * id[R])", "l[R]"),
        schema("mu-unit-r", Monoid, "", &[], "mu o (id[R] * eta)", "r[R]"),
    ];

    let a = BimoduleSym::named("A");
    let b = BimoduleSym::named("B");
    let obligations = bimodule::bimodule_obligations(&a).expect("bimodule laws type-check");
    for ob in &obligations {
        let s = match ob.id.as_str() {
            "bimod-unit" | "bimod-assoc" => AxiomSchema {
                id: ob.id.clone(),
                kind: Bimodule,
                obj_vars: vars("A"),
                mor_vars: Vec::new(),
                lhs: ob.equation.lhs.nest_right(),
                rhs: ob.equation.rhs.nest_right(),
                note: None,
            },
            _ => lemma(&ob.id, "A", ob.equation.lhs.clone(), ob.equation.rhs.clone()),
        };
        out.push(s);
    }
    for ob in bimodule::induced_action_laws(&a, &b).expect("induced action laws type-check") {
        out.push(lemma(&ob.id, "A B", ob.equation.lhs, ob.equation.rhs));
    }

    if negation {
        let snake = |id: &str, lhs: &str, rhs: &str, note: Option<&'static str>| AxiomSchema {
            note,
            ..schema(id, Negation, "A", &[], lhs, rhs)
        };
        let rec = Some("reconstructed mate of the displayed snake");
        out.push(snake(
            "neg-snake-1",
            "(gamma[A] % id[(R * A)]) o m[A,R,neg(A),A] o (id[A] * tau[A])",
            "(eta * id[A]) o l'[A] o r[A]",
            None,
        ));
        out.push(snake(
            "neg-snake-2",
            "(id[(neg(A) * R)] % gamma[A]) o m[neg(A),A,R,neg(A)] o (tau[A] * id[neg(A)])",
            "(id[neg(A)] * eta) o r'[neg(A)] o l[neg(A)]",
            rec,
        ));
        out.push(snake(
            "neg-snake-3",
            "(gamma[A] % id[(R * A)]) o m[A,R,neg(A),A] o (id[A] * tau[A]) o r'[A]",
            "(eta * id[A]) o l'[A]",
            rec,
        ));
        out.push(snake(
            "neg-snake-4",
            "(id[(neg(A) * R)] % gamma[A]) o m[neg(A),A,R,neg(A)] o (tau[A] * id[neg(A)]) o l'[neg(A)]",
            "(id[neg(A)] * eta) o r'[neg(A)]",
            rec,
        ));
    }
    out
}

impl Catalogue {
    /// The shipped catalogue, with or without the negation snakes.
    pub fn standard(negation: bool) -> &'static Catalogue {
        static PLAIN: OnceLock<Catalogue> = OnceLock::new();
        static WITH_NEG: OnceLock<Catalogue> = OnceLock::new();
        let cell = if negation { &WITH_NEG } else { &PLAIN };
        cell.get_or_init(|| Catalogue { schemas: build(negation), negation })
    }

    pub fn schemas(&self) -> &[AxiomSchema] {
        &self.schemas
    }

    pub fn get(&self, id: &str) -> Option<&AxiomSchema> {
        self.schemas.iter().find(|s| s.id == id)
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.schemas.iter().position(|s| s.id == id)
    }

    pub fn has_negation(&self) -> bool {
        self.negation
    }
}

/// Every schema in catalogue order.
pub fn list_axioms(negation: bool) -> Vec<AxiomSchema> {
    Catalogue::standard(negation).schemas().to_vec()
}

/// `id : dom ==> cod : lhs = rhs` for every schema.
pub fn render_catalogue(negation: bool) -> Vec<String> {
    Catalogue::standard(negation)
        .schemas()
        .iter()
        .map(|s| {
            let (d, c) = s.lhs.infer_type().expect("catalogue schemas are well-typed");
            format!("{} : {} ==> {} : {} = {}", s.id, d, c, s.lhs, s.rhs)
        })
        .collect()
}
