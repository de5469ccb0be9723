//! Recursive-descent parser for the textual term grammar.
//!
//! Objects: `I`, `R`, uppercase identifiers, `(X * Y)`, `(X % Y % ...)`, `neg(X)`.
//! Morphisms: `id[X]`, `g o f`, `(f * g)`, `(f % g % ...)`, `a[X,Y,Z]`, `a'[..]`,
//! `l[X]`, `l'[X]`, `r[X]`, `r'[X]`, `m[A,B,C,D]`, `mu`, `eta`, `gamma[A]`,
//! `tau[A]`, `act[A]`, `gen(name, X, Y)`. Composition is right-associative and
//! binds tighter than a top-level `*`/`%`, whose parentheses may be omitted.

use super::mor::MorTerm;
use super::obj::ObjExpr;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at {pos}: {message} (found `{found}`)")]
pub struct ParseError {
    pub pos: usize,
    pub found: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
    Star,
    Percent,
    Tick,
    End,
}

impl Tok {
    fn text(&self) -> String {
        match self {
            Tok::Ident(s) => s.clone(),
            Tok::LParen => "(".into(),
            Tok::RParen => ")".into(),
            Tok::LBrack => "[".into(),
            Tok::RBrack => "]".into(),
            Tok::Comma => ",".into(),
            Tok::Star => "*".into(),
            Tok::Percent => "%".into(),
            Tok::Tick => "'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBrack,
            ']' => Tok::RBrack,
            ',' => Tok::Comma,
            '*' => Tok::Star,
            '%' => Tok::Percent,
            '\'' => Tok::Tick,
            c if c.is_ascii_alphanumeric() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                    i += 1;
                }
                let end = chars.get(i).map_or(text.len(), |x| x.0);
                out.push((pos, Tok::Ident(text[chars[start].0..end].to_string())));
                continue;
            }
            other => return Err(ParseError { pos, found: other.to_string(), message: "unexpected character".into() }),
        };
        out.push((pos, tok));
        i += 1;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

impl Parser {
    fn new(text: &str) -> Result<Self, ParseError> {
        Ok(Parser { toks: lex(text)?, at: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn peek2(&self) -> &Tok {
        &self.toks[(self.at + 1).min(self.toks.len() - 1)].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        let (pos, tok) = &self.toks[self.at];
        ParseError { pos: *pos, found: tok.text(), message: message.into() }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!("expected `{}`", tok.text())))
        }
    }

    fn object(&mut self) -> Result<ObjExpr, ParseError> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                if name == "neg" && *self.peek2() == Tok::LParen {
                    self.bump();
                    self.bump();
                    let inner = self.object()?;
                    self.expect(Tok::RParen)?;
                    return Ok(ObjExpr::neg(inner));
                }
                let first = name.chars().next().unwrap();
                if !first.is_ascii_uppercase() {
                    return Err(self.error("expected an object"));
                }
                self.bump();
                Ok(match name.as_str() {
                    "I" => ObjExpr::UnitTens,
                    "R" => ObjExpr::UnitPar,
                    _ => ObjExpr::Gen(name),
                })
            }
            Tok::LParen => {
                self.bump();
                let o = self.object_group()?;
                self.expect(Tok::RParen)?;
                Ok(o)
            }
            _ => Err(self.error("expected an object")),
        }
    }

    /// `X`, `X * Y` or `X % Y % ...` without the surrounding parentheses.
    fn object_group(&mut self) -> Result<ObjExpr, ParseError> {
        let first = self.object()?;
        match self.peek() {
            Tok::Star => {
                self.bump();
                let second = self.object()?;
                if *self.peek() == Tok::Star {
                    return Err(self.error("`*` is binary; add parentheses"));
                }
                Ok(ObjExpr::tens(first, second))
            }
            Tok::Percent => {
                let mut parts = vec![first];
                while *self.peek() == Tok::Percent {
                    self.bump();
                    parts.push(self.object()?);
                }
                Ok(ObjExpr::Par(parts))
            }
            _ => Ok(first),
        }
    }

    fn obj_list(&mut self, n: usize) -> Result<Vec<ObjExpr>, ParseError> {
        self.expect(Tok::LBrack)?;
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            if i > 0 {
                self.expect(Tok::Comma)?;
            }
            out.push(self.object()?);
        }
        self.expect(Tok::RBrack)?;
        Ok(out)
    }

    fn term(&mut self) -> Result<MorTerm, ParseError> {
        let first = self.factor()?;
        if matches!(self.peek(), Tok::Ident(s) if s == "o") {
            self.bump();
            let rest = self.term()?;
            Ok(MorTerm::comp(first, rest))
        } else {
            Ok(first)
        }
    }

    /// `t`, `t * u` or `t % u % ...` without the surrounding parentheses.
    fn term_group(&mut self) -> Result<MorTerm, ParseError> {
        let first = self.term()?;
        match self.peek() {
            Tok::Star => {
                self.bump();
                let second = self.term()?;
                if *self.peek() == Tok::Star {
                    return Err(self.error("`*` is binary; add parentheses"));
                }
                Ok(MorTerm::tens(first, second))
            }
            Tok::Percent => {
                let mut parts = vec![first];
                while *self.peek() == Tok::Percent {
                    self.bump();
                    parts.push(self.term()?);
                }
                Ok(MorTerm::ParM(parts))
            }
            _ => Ok(first),
        }
    }

    fn factor(&mut self) -> Result<MorTerm, ParseError> {
        match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                let t = self.term_group()?;
                self.expect(Tok::RParen)?;
                Ok(t)
            }
            Tok::Ident(name) => {
                self.bump();
                let inverse = if *self.peek() == Tok::Tick {
                    if !matches!(name.as_str(), "a" | "l" | "r") {
                        return Err(self.error("only a, l and r have inverses"));
                    }
                    self.bump();
                    true
                } else {
                    false
                };
                let one = |p: &mut Self| p.obj_list(1).map(|mut v| v.pop().unwrap());
                Ok(match name.as_str() {
                    "id" => MorTerm::Id(one(self)?),
                    "a" => {
                        let v = self.obj_list(3)?;
                        let mut it = v.into_iter();
                        MorTerm::Assoc { x: it.next().unwrap(), y: it.next().unwrap(), z: it.next().unwrap(), inverse }
                    }
                    "l" => MorTerm::LUnit { x: one(self)?, inverse },
                    "r" => MorTerm::RUnit { x: one(self)?, inverse },
                    "m" => {
                        let v = self.obj_list(4)?;
                        let mut it = v.into_iter();
                        MorTerm::Mid4(it.next().unwrap(), it.next().unwrap(), it.next().unwrap(), it.next().unwrap())
                    }
                    "mu" => MorTerm::Mu,
                    "eta" => MorTerm::Eta,
                    "gamma" => MorTerm::GammaG(one(self)?),
                    "tau" => MorTerm::TauG(one(self)?),
                    "act" => MorTerm::Act(one(self)?),
                    "gen" => {
                        self.expect(Tok::LParen)?;
                        let name = match self.bump() {
                            Tok::Ident(n) => n,
                            _ => {
                                self.at -= 1;
                                return Err(self.error("expected a generator name"));
                            }
                        };
                        self.expect(Tok::Comma)?;
                        let dom = self.object()?;
                        self.expect(Tok::Comma)?;
                        let cod = self.object()?;
                        self.expect(Tok::RParen)?;
                        MorTerm::FreeGen { name, dom, cod }
                    }
                    _ => {
                        self.at -= 1;
                        return Err(self.error("unknown morphism symbol"));
                    }
                })
            }
            _ => Err(self.error("expected a morphism term")),
        }
    }
}

/// Parses an object expression and returns its `⅋`-normal form.
pub fn parse_object(text: &str) -> Result<ObjExpr, ParseError> {
    let mut p = Parser::new(text)?;
    let o = p.object_group()?;
    if *p.peek() != Tok::End {
        return Err(p.error("expected `*`, `%` or end of input"));
    }
    Ok(o.normalize_par())
}

/// Parses a morphism term and returns its normal form. Typing is not checked.
pub fn parse_term(text: &str) -> Result<MorTerm, ParseError> {
    let mut p = Parser::new(text)?;
    let t = p.term_group()?;
    if *p.peek() != Tok::End {
        return Err(p.error("expected `o`, `*`, `%` or end of input"));
    }
    Ok(t.normalize())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_absorbed() {
        assert_eq!(parse_object("R % A").unwrap(), ObjExpr::gen("A"));
        assert_eq!(parse_object("(R % A)").unwrap(), ObjExpr::gen("A"));
    }

    #[test]
    fn reports_offending_token() {
        let e = parse_object("(A + B)").unwrap_err();
        assert_eq!(e.pos, 3);
        assert_eq!(e.found, "+");
        let e = parse_term("m[A,B,C]").unwrap_err();
        assert_eq!(e.found, "]");
        let e = parse_term("foo").unwrap_err();
        assert_eq!(e.found, "foo");
    }

    #[test]
    fn composite_is_right_nested() {
        let t = parse_term("mu o mu o eta").unwrap();
        assert_eq!(t, MorTerm::comp(MorTerm::Mu, MorTerm::comp(MorTerm::Mu, MorTerm::Eta)));
    }

    #[test]
    fn inverses_and_free_generators() {
        let t = parse_term("a'[A,B,C] o gen(f, A, ((A * B) * C))").unwrap();
        assert_eq!(t.to_string(), "a'[A,B,C] o gen(f, A, ((A * B) * C))");
        assert!(parse_term("mu'").is_err());
    }
}
