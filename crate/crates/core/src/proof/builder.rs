//! Tactics that drive the kernel and record the steps they take.
//!
//! A builder holds the current term, kept with every composite chain nested
//! to the right. Proofs are built by rewriting both sides of an equation to a
//! common term and joining the two step lists with [`ProofBuilder::meet`].

use super::{apply_step, invert, PastingProof, RewriteStep, StepError};
use crate::axioms::{match_pattern, match_pattern_proper, AxiomSchema, Catalogue, Direction, Subst};
use crate::term::{MorTerm, Path, PathElem};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum BuildError {
    #[error("no instance of {schema} ({direction}) matching {hints} in {term}")]
    NoMatch { schema: String, direction: Direction, hints: String, term: String },
    #[error("step {index}: {source}")]
    Step { index: usize, source: StepError },
    #[error("sides did not meet:\n  {lhs}\n  {rhs}")]
    NotMet { lhs: String, rhs: String },
}

/// A located schema instance: a sub-term at `path`, or, with `window =
/// Some((i, k))`, factors `i..=i+k` of the composite chain at `path`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub path: Path,
    pub subst: Subst,
    pub window: Option<(usize, usize)>,
}

#[derive(Clone, Debug)]
pub struct ProofBuilder<'c> {
    cat: &'c Catalogue,
    start: MorTerm,
    cur: MorTerm,
    steps: Vec<RewriteStep>,
}

fn consistent(sub: &Subst, hints: &Subst) -> bool {
    hints.0.iter().all(|(k, v)| sub.0.get(k) == Some(v))
}

/// Right spine of a composite: `c0 o (c1 o (... o cn))` gives `[c0, .., cn]`.
fn factors(t: &MorTerm) -> Vec<&MorTerm> {
    let mut out = Vec::new();
    let mut cur = t;
    while let MorTerm::Comp(g, f) = cur {
        out.push(&**g);
        cur = f;
    }
    out.push(cur);
    out
}

fn spine(base: &Path, i: usize) -> Path {
    let mut p = base.clone();
    for _ in 0..i {
        p = p.child(1);
    }
    p
}

impl<'c> ProofBuilder<'c> {
    pub fn new(cat: &'c Catalogue, t: &MorTerm) -> Self {
        let t = t.normalize();
        let mut b = ProofBuilder { cat, start: t.clone(), cur: t, steps: Vec::new() };
        b.assoc_right().expect("re-nesting composites always succeeds");
        b
    }

    pub fn term(&self) -> &MorTerm {
        &self.cur
    }

    pub fn steps(&self) -> &[RewriteStep] {
        &self.steps
    }

    /// Applies one explicit step; returns where its result landed.
    pub fn apply(
        &mut self,
        path: Path,
        schema: &str,
        dir: Direction,
        subst: Subst,
    ) -> Result<Option<Path>, BuildError> {
        let step = RewriteStep { path, schema_id: schema.to_string(), direction: dir, subst };
        let r = apply_step(self.cat, &self.cur, &step)
            .map_err(|source| BuildError::Step { index: self.steps.len(), source })?;
        self.cur = r.term;
        self.steps.push(step);
        Ok(r.at)
    }

    fn schema(&self, id: &str) -> &'c AxiomSchema {
        self.cat.get(id).unwrap_or_else(|| panic!("no schema {id}"))
    }

    /// Re-nests every composite to the right with `comp-assoc`.
    pub fn assoc_right(&mut self) -> Result<&mut Self, BuildError> {
        let s = self.schema("comp-assoc");
        loop {
            let hit = Path::all_positions(&self.cur).into_iter().find_map(|p| {
                let sub = p.get(&self.cur).ok()?;
                match_pattern_proper(s, &s.lhs, &sub).into_iter().next().map(|m| (p, m))
            });
            let Some((p, m)) = hit else { return Ok(self) };
            self.apply(p, "comp-assoc", Direction::Forward, m)?;
        }
    }

    /// First instance of the source side under `scope`, either as a sub-term
    /// or as a window of a composite chain. Metavariables absorb the empty
    /// run of a `⅋`-list only as a fallback when hints are given.
    fn locate(&self, s: &AxiomSchema, dir: Direction, hints: &Subst, scope: &Path) -> Option<Candidate> {
        let first = |units| self.candidates(s, dir, hints, scope, units, true).into_iter().next();
        match first(false) {
            Some(c) => Some(c),
            None if !hints.0.is_empty() => first(true),
            None => None,
        }
    }

    /// Instances of the source side under `scope` agreeing with `hints`:
    /// sub-terms in pre-order first, then windows of composite chains.
    pub fn candidates(
        &self,
        s: &AxiomSchema,
        dir: Direction,
        hints: &Subst,
        scope: &Path,
        units: bool,
        first_only: bool,
    ) -> Vec<Candidate> {
        let matcher = if units { match_pattern } else { match_pattern_proper };
        let (src, _) = s.side(dir);
        let positions: Vec<(Path, MorTerm)> = Path::all_positions(&self.cur)
            .into_iter()
            .filter(|p| scope.is_prefix_of(p))
            .filter_map(|p| p.get(&self.cur).ok().map(|t| (p, t)))
            .collect();
        let mut out = Vec::new();
        for (p, sub) in &positions {
            for m in matcher(s, src, sub).into_iter().filter(|m| consistent(m, hints)) {
                out.push(Candidate { path: p.clone(), subst: m, window: None });
                if first_only {
                    return out;
                }
            }
        }
        let k = factors(src).len() - 1;
        if k == 0 {
            return out;
        }
        for (p, sub) in &positions {
            let cs = factors(sub);
            if cs.len() < k + 2 {
                continue;
            }
            if p.0.last() == Some(&PathElem::Child(1))
                && matches!(Path(p.0[..p.0.len() - 1].to_vec()).get(&self.cur), Ok(MorTerm::Comp(..)))
            {
                continue;
            }
            for i in 0..cs.len() - k - 1 {
                let window = MorTerm::chain(cs[i..=i + k].iter().map(|c| (*c).clone()).collect());
                for m in matcher(s, src, &window).into_iter().filter(|m| consistent(m, hints)) {
                    out.push(Candidate { path: p.clone(), subst: m, window: Some((i, k)) });
                    if first_only {
                        return out;
                    }
                }
            }
        }
        out
    }

    /// Rewrites at a located instance, then re-nests composites.
    pub fn apply_candidate(&mut self, schema: &str, dir: Direction, c: Candidate) -> Result<&mut Self, BuildError> {
        let path = match c.window {
            Some((i, k)) => self.group(&c.path, i, k)?,
            None => c.path,
        };
        self.apply(path, schema, dir, c.subst)?;
        self.assoc_right()
    }

    /// Groups factors `i..=i+k` of the chain at `head` into one sub-term and
    /// returns its path.
    fn group(&mut self, head: &Path, i: usize, k: usize) -> Result<Path, BuildError> {
        let q = spine(head, i);
        for m in (0..k).rev() {
            let at = spine(&q, m);
            let sub = at.get(&self.cur).expect("chain position");
            let (h, rest) = match &sub {
                MorTerm::Comp(h, rest) => ((**h).clone(), (**rest).clone()),
                _ => unreachable!("chain position holds a composite"),
            };
            let (g, f) = match rest {
                MorTerm::Comp(g, f) => (*g, *f),
                _ => unreachable!("window is not a suffix"),
            };
            let subst = comp_assoc_subst(&h, &g, &f);
            self.apply(at, "comp-assoc", Direction::Backward, subst)?;
        }
        Ok(q.child(0))
    }

    /// Rewrites the first instance of `schema` read in direction `dir`
    /// whose substitution agrees with `hints`, then re-nests composites.
    pub fn rw(&mut self, schema: &str, dir: Direction, hints: Subst) -> Result<&mut Self, BuildError> {
        self.rw_in(&Path::root(), schema, dir, hints)
    }

    pub fn rw_in(&mut self, scope: &Path, schema: &str, dir: Direction, hints: Subst) -> Result<&mut Self, BuildError> {
        let s = self.schema(schema);
        let c = self.locate(s, dir, &hints, scope).ok_or_else(|| BuildError::NoMatch {
            schema: schema.to_string(),
            direction: dir,
            hints: hints.to_string(),
            term: self.cur.to_string(),
        })?;
        self.apply_candidate(schema, dir, c)
    }

    /// Like [`rw`](Self::rw) but repeats until no instance is left.
    pub fn rw_all(&mut self, schema: &str, dir: Direction, hints: Subst) -> Result<&mut Self, BuildError> {
        while self.rw(schema, dir, hints.clone()).is_ok() {}
        Ok(self)
    }

    /// Removes identities from composites and merges `id * id`.
    pub fn simp(&mut self) -> Result<&mut Self, BuildError> {
        loop {
            let before = self.steps.len();
            for id in ["id-left", "id-right", "tens-id"] {
                let _ = self.rw(id, Direction::Forward, Subst::new());
            }
            if self.steps.len() == before {
                return Ok(self);
            }
        }
    }

    /// Path of the first occurrence of `t` (pre-order).
    pub fn find(&self, t: &MorTerm) -> Option<Path> {
        Path::all_positions(&self.cur).into_iter().find(|p| p.get(&self.cur).ok().as_ref() == Some(t))
    }

    /// Rewrites the sub-term at `path` to `id o t` (`left`) or `t o id`.
    pub fn insert_id(&mut self, path: Path, left: bool) -> Result<Option<Path>, BuildError> {
        let sub = path.get(&self.cur).map_err(|e| BuildError::Step { index: self.steps.len(), source: e.into() })?;
        let (d, c) = sub
            .infer_type()
            .map_err(|e| BuildError::Step { index: self.steps.len(), source: StepError::IllTyped(e) })?;
        let subst = Subst::new().obj("A", d).obj("B", c).mor("f", sub);
        let schema = if left { "id-left" } else { "id-right" };
        self.apply(path, schema, Direction::Backward, subst)
    }

    /// Joins two builders that reached the same term into a proof from the
    /// first start term to the second.
    pub fn meet(self, other: ProofBuilder<'_>) -> Result<PastingProof, BuildError> {
        if self.cur != other.cur {
            return Err(BuildError::NotMet { lhs: self.cur.to_string(), rhs: other.cur.to_string() });
        }
        let mut steps = self.steps;
        let back = invert(self.cat, &other.start, &other.steps)
            .map_err(|(index, source)| BuildError::Step { index, source })?;
        steps.extend(back);
        Ok(PastingProof { steps })
    }
}

fn comp_assoc_subst(h: &MorTerm, g: &MorTerm, f: &MorTerm) -> Subst {
    let (a, b) = f.infer_type().expect("well-typed factor");
    let (_, c) = g.infer_type().expect("well-typed factor");
    let (_, d) = h.infer_type().expect("well-typed factor");
    Subst::new()
        .obj("A", a)
        .obj("B", b)
        .obj("C", c)
        .obj("D", d)
        .mor("f", f.clone())
        .mor("g", g.clone())
        .mor("h", h.clone())
}
