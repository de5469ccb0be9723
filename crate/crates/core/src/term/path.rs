use std::fmt;
use std::str::FromStr;

use super::mor::MorTerm;

/// One step into a term.
///
/// `Child(i)` selects the i-th child (`Comp`: 0 = after, 1 = before; `TensM`:
/// 0 = left, 1 = right; `ParM`: the i-th part). `Segment(i, j)` selects the
/// contiguous parts `i..=j` of a `ParM` as a single `⅋`-term, which is a
/// genuine sub-term because `⅋` is strict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PathElem {
    Child(usize),
    Segment(usize, usize),
}

/// Position in a term tree; the empty path is the root.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path(pub Vec<PathElem>);

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("invalid path {path} at element {index}")]
pub struct PathError {
    pub path: String,
    pub index: usize,
}

impl Path {
    pub fn root() -> Self {
        Path(Vec::new())
    }

    pub fn child(&self, i: usize) -> Path {
        let mut p = self.clone();
        p.0.push(PathElem::Child(i));
        p
    }

    pub fn segment(&self, i: usize, j: usize) -> Path {
        let mut p = self.clone();
        p.0.push(if i == j { PathElem::Child(i) } else { PathElem::Segment(i, j) });
        p
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_prefix_of(&self, other: &Path) -> bool {
        other.0.len() >= self.0.len() && other.0[..self.0.len()] == self.0[..]
    }

    /// The sub-term at this path.
    pub fn get(&self, t: &MorTerm) -> Result<MorTerm, PathError> {
        let mut cur = t.clone();
        for (k, e) in self.0.iter().enumerate() {
            let err = || PathError { path: self.to_string(), index: k };
            cur = match (e, &cur) {
                (PathElem::Child(0), MorTerm::Comp(g, _)) | (PathElem::Child(0), MorTerm::TensM(g, _)) => (**g).clone(),
                (PathElem::Child(1), MorTerm::Comp(_, f)) | (PathElem::Child(1), MorTerm::TensM(_, f)) => (**f).clone(),
                (PathElem::Child(i), MorTerm::ParM(parts)) => parts.get(*i).cloned().ok_or_else(err)?,
                (PathElem::Segment(i, j), MorTerm::ParM(parts)) if i < j && *j < parts.len() => {
                    MorTerm::ParM(parts[*i..=*j].to_vec())
                }
                _ => return Err(err()),
            };
        }
        Ok(cur)
    }

    /// Replaces the sub-term at this path. The result is not normalized.
    pub fn replace(&self, t: &MorTerm, new: MorTerm) -> Result<MorTerm, PathError> {
        self.replace_from(t, 0, new)
    }

    fn replace_from(&self, t: &MorTerm, k: usize, new: MorTerm) -> Result<MorTerm, PathError> {
        let Some(e) = self.0.get(k) else {
            return Ok(new);
        };
        let err = || PathError { path: self.to_string(), index: k };
        Ok(match (e, t) {
            (PathElem::Child(0), MorTerm::Comp(g, f)) => {
                MorTerm::comp(self.replace_from(g, k + 1, new)?, (**f).clone())
            }
            (PathElem::Child(1), MorTerm::Comp(g, f)) => {
                MorTerm::comp((**g).clone(), self.replace_from(f, k + 1, new)?)
            }
            (PathElem::Child(0), MorTerm::TensM(g, f)) => {
                MorTerm::tens(self.replace_from(g, k + 1, new)?, (**f).clone())
            }
            (PathElem::Child(1), MorTerm::TensM(g, f)) => {
                MorTerm::tens((**g).clone(), self.replace_from(f, k + 1, new)?)
            }
            (PathElem::Child(i), MorTerm::ParM(parts)) if *i < parts.len() => {
                let mut parts = parts.clone();
                parts[*i] = self.replace_from(&parts[*i], k + 1, new)?;
                MorTerm::ParM(parts)
            }
            (PathElem::Segment(i, j), MorTerm::ParM(parts)) if i < j && *j < parts.len() => {
                if k + 1 != self.0.len() {
                    return Err(err());
                }
                let mut out = parts[..*i].to_vec();
                out.push(new);
                out.extend_from_slice(&parts[j + 1..]);
                MorTerm::ParM(out)
            }
            _ => return Err(err()),
        })
    }

    /// Every addressable position of `t` in pre-order (node before its
    /// children; `ParM` segments after the parts, shortest first).
    pub fn all_positions(t: &MorTerm) -> Vec<Path> {
        let mut out = Vec::new();
        collect(t, &Path::root(), &mut out);
        out
    }
}

fn collect(t: &MorTerm, here: &Path, out: &mut Vec<Path>) {
    out.push(here.clone());
    match t {
        MorTerm::Comp(g, f) | MorTerm::TensM(g, f) => {
            collect(g, &here.child(0), out);
            collect(f, &here.child(1), out);
        }
        MorTerm::ParM(parts) => {
            for (i, p) in parts.iter().enumerate() {
                collect(p, &here.child(i), out);
            }
            let n = parts.len();
            for len in 2..n {
                for i in 0..=n - len {
                    out.push(here.segment(i, i + len - 1));
                }
            }
        }
        _ => {}
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str(".");
        }
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(".")?;
            }
            match e {
                PathElem::Child(i) => write!(f, "{i}")?,
                PathElem::Segment(i, j) => write!(f, "{i}-{j}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Path {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "." {
            return Ok(Path::root());
        }
        s.split('.')
            .map(|tok| match tok.split_once('-') {
                Some((a, b)) => {
                    let a: usize = a.parse().map_err(|_| format!("bad path element `{tok}`"))?;
                    let b: usize = b.parse().map_err(|_| format!("bad path element `{tok}`"))?;
                    if a >= b {
                        return Err(format!("empty or reversed segment `{tok}`"));
                    }
                    Ok(PathElem::Segment(a, b))
                }
                None => tok.parse().map(PathElem::Child).map_err(|_| format!("bad path element `{tok}`")),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Path)
    }
}
