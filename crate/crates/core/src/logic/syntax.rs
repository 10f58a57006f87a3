// Copyright 2026 The causal-games Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


//! First-order terms and quantifier-only formulas, locally nameless.
//!
//! Text syntax:
//!
//! ```text
//! formula ::= forall x. formula | exists x. formula | atom
//!           | ∀x formula | ∃x formula | ( formula )
//! atom    ::= Name | Name(term, …) | term = term | term
//! term    ::= term | term | term & term | f(term, …) | x | 0 | top | bot
//! ```
//!
//! Capitalized names are proposition symbols. A bare term `t` is the unary
//! proposition `I(t)`. `∧ ∨ ⊤ ⊥` may replace `& | top bot`.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyntaxError {
    #[error("syntax error at byte {pos}: {msg}")]
    At { pos: usize, msg: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Free(String),
    /// Index of the enclosing binder, innermost first.
    Bound(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FoTerm {
    Var(Var),
    App(String, Vec<FoTerm>),
}

pub const MEET: &str = "&";
pub const JOIN: &str = "|";
pub const TOP: &str = "top";
pub const BOT: &str = "bot";
/// The unary predicate wrapping a bare term.
pub const UNARY: &str = "I";

impl FoTerm {
    pub fn var(name: &str) -> FoTerm {
        FoTerm::Var(Var::Free(name.to_string()))
    }

    pub fn constant(name: &str) -> FoTerm {
        FoTerm::App(name.to_string(), Vec::new())
    }

    pub fn app(name: &str, args: Vec<FoTerm>) -> FoTerm {
        FoTerm::App(name.to_string(), args)
    }

    pub fn free_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            FoTerm::Var(Var::Free(x)) => {
                out.insert(x.clone());
            }
            FoTerm::Var(Var::Bound(_)) => {}
            FoTerm::App(_, args) => args.iter().for_each(|a| a.free_vars(out)),
        }
    }

    pub fn is_locally_closed(&self) -> bool {
        match self {
            FoTerm::Var(Var::Bound(_)) => false,
            FoTerm::Var(Var::Free(_)) => true,
            FoTerm::App(_, args) => args.iter().all(FoTerm::is_locally_closed),
        }
    }

    fn open(&self, depth: usize, with: &FoTerm) -> FoTerm {
        match self {
            FoTerm::Var(Var::Bound(k)) if *k == depth => with.clone(),
            FoTerm::Var(Var::Bound(k)) if *k > depth => FoTerm::Var(Var::Bound(k - 1)),
            FoTerm::Var(_) => self.clone(),
            FoTerm::App(f, args) => FoTerm::App(f.clone(), args.iter().map(|a| a.open(depth, with)).collect()),
        }
    }

    fn close(&self, depth: usize, name: &str) -> FoTerm {
        match self {
            FoTerm::Var(Var::Free(x)) if x == name => FoTerm::Var(Var::Bound(depth)),
            FoTerm::Var(Var::Bound(k)) if *k >= depth => FoTerm::Var(Var::Bound(k + 1)),
            FoTerm::Var(_) => self.clone(),
            FoTerm::App(f, args) => FoTerm::App(f.clone(), args.iter().map(|a| a.close(depth, name)).collect()),
        }
    }

    fn subst_free(&self, name: &str, with: &FoTerm) -> FoTerm {
        match self {
            FoTerm::Var(Var::Free(x)) if x == name => with.clone(),
            FoTerm::Var(_) => self.clone(),
            FoTerm::App(f, args) => FoTerm::App(f.clone(), args.iter().map(|a| a.subst_free(name, with)).collect()),
        }
    }

    fn write(&self, names: &[String], prec: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FoTerm::Var(Var::Free(x)) => f.write_str(x),
            FoTerm::Var(Var::Bound(k)) => match names.len().checked_sub(k + 1) {
                Some(i) => f.write_str(&names[i]),
                None => write!(f, "#{k}"),
            },
            FoTerm::App(op, args) if (op == MEET || op == JOIN) && args.len() == 2 => {
                let my = if op == JOIN { 1 } else { 2 };
                if prec > my {
                    f.write_str("(")?;
                }
                args[0].write(names, my, f)?;
                write!(f, " {op} ")?;
                args[1].write(names, my + 1, f)?;
                if prec > my {
                    f.write_str(")")?;
                }
                Ok(())
            }
            FoTerm::App(g, args) if args.is_empty() => f.write_str(g),
            FoTerm::App(g, args) => {
                write!(f, "{g}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    a.write(names, 0, f)?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for FoTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(&[], 0, f)
    }
}

/// An atomic proposition `name(args)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prop {
    pub name: String,
    pub args: Vec<FoTerm>,
}

impl Prop {
    pub fn new(name: &str, args: Vec<FoTerm>) -> Prop {
        Prop {
            name: name.to_string(),
            args,
        }
    }

    /// The proposition `I(t)`.
    pub fn unary(t: FoTerm) -> Prop {
        Prop::new(UNARY, vec![t])
    }

    fn write(&self, names: &[String], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.name.as_str(), self.args.as_slice()) {
            (UNARY, [t]) => t.write(names, 0, f),
            ("=", [a, b]) => {
                a.write(names, 0, f)?;
                f.write_str(" = ")?;
                b.write(names, 0, f)
            }
            (n, []) => f.write_str(n),
            (n, args) => {
                write!(f, "{n}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    a.write(names, 0, f)?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for Prop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(&[], f)
    }
}

/// A binder's display name; all hints compare equal so that formulas are
/// equal up to renaming of bound variables.
#[derive(Debug, Clone, Eq, PartialOrd, Ord)]
pub struct Hint(pub String);

impl PartialEq for Hint {
    fn eq(&self, _: &Hint) -> bool {
        true
    }
}

impl std::hash::Hash for Hint {
    fn hash<H: std::hash::Hasher>(&self, _: &mut H) {}
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantifier {
    Forall,
    Exists,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(Prop),
    Quant(Quantifier, Hint, Box<Formula>),
}

impl Formula {
    pub fn atom(p: Prop) -> Formula {
        Formula::Atom(p)
    }

    /// `∀x. body`, binding the free variable `x` of `body`.
    pub fn forall(x: &str, body: Formula) -> Formula {
        Formula::Quant(Quantifier::Forall, Hint(x.to_string()), Box::new(body.close(0, x)))
    }

    pub fn exists(x: &str, body: Formula) -> Formula {
        Formula::Quant(Quantifier::Exists, Hint(x.to_string()), Box::new(body.close(0, x)))
    }

    /// Quantifiers along the spine, outermost first.
    pub fn quantifiers(&self) -> Vec<Quantifier> {
        let mut out = Vec::new();
        let mut cur = self;
        while let Formula::Quant(q, _, body) = cur {
            out.push(*q);
            cur = body;
        }
        out
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut out);
        out
    }

    fn collect_free(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(p) => p.args.iter().for_each(|a| a.free_vars(out)),
            Formula::Quant(_, _, b) => b.collect_free(out),
        }
    }

    fn map_terms(&self, depth: usize, f: &dyn Fn(&FoTerm, usize) -> FoTerm) -> Formula {
        match self {
            Formula::Atom(p) => Formula::Atom(Prop {
                name: p.name.clone(),
                args: p.args.iter().map(|a| f(a, depth)).collect(),
            }),
            Formula::Quant(q, h, b) => Formula::Quant(*q, h.clone(), Box::new(b.map_terms(depth + 1, f))),
        }
    }

    fn close(&self, depth: usize, name: &str) -> Formula {
        self.map_terms(depth, &|t, d| t.close(d, name))
    }

    /// Body of a quantified formula with its bound variable replaced by `t`.
    pub fn instantiate(body: &Formula, t: &FoTerm) -> Formula {
        body.map_terms(0, &|u, d| u.open(d, t))
    }

    /// Capture-free substitution of a free variable.
    pub fn subst(&self, x: &str, t: &FoTerm) -> Formula {
        self.map_terms(0, &|u, _| u.subst_free(x, t))
    }

    pub fn as_atom(&self) -> Option<&Prop> {
        match self {
            Formula::Atom(p) => Some(p),
            _ => None,
        }
    }

    fn write(&self, names: &mut Vec<String>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom(p) => p.write(names, f),
            Formula::Quant(q, Hint(h), body) => {
                let free = body.free_vars();
                let mut name = h.clone();
                let mut k = 1;
                while names.contains(&name) || free.contains(&name) {
                    name = format!("{h}{k}");
                    k += 1;
                }
                let kw = match q {
                    Quantifier::Forall => "forall",
                    Quantifier::Exists => "exists",
                };
                write!(f, "{kw} {name}. ")?;
                names.push(name);
                let r = body.write(names, f);
                names.pop();
                r
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(&mut Vec::new(), f)
    }
}

/// `left ⊢ right`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sequent {
    pub left: Formula,
    pub right: Formula,
}

impl Sequent {
    pub fn new(left: Formula, right: Formula) -> Sequent {
        Sequent { left, right }
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut v = self.left.free_vars();
        v.extend(self.right.free_vars());
        v
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} |- {}", self.left, self.right)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(String),
    Sym(char),
    Turnstile,
    Forall,
    Exists,
    End,
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, SyntaxError> {
    let mut out = Vec::new();
    let mut it = s.char_indices().peekable();
    while let Some(&(i, c)) = it.peek() {
        if c.is_whitespace() {
            it.next();
        } else if c.is_alphabetic() || c == '_' {
            let mut id = String::new();
            while let Some(&(_, d)) = it.peek() {
                if d.is_alphanumeric() || d == '_' || d == '\'' {
                    id.push(d);
                    it.next();
                } else {
                    break;
                }
            }
            let tok = match id.as_str() {
                "forall" => Tok::Forall,
                "exists" => Tok::Exists,
                _ => Tok::Ident(id),
            };
            out.push((i, tok));
        } else if c.is_ascii_digit() {
            let mut n = String::new();
            while let Some(&(_, d)) = it.peek() {
                if d.is_ascii_digit() {
                    n.push(d);
                    it.next();
                } else {
                    break;
                }
            }
            out.push((i, Tok::Num(n)));
        } else {
            it.next();
            let tok = match c {
                '∀' => Tok::Forall,
                '∃' => Tok::Exists,
                '∧' => Tok::Sym('&'),
                '∨' => Tok::Sym('|'),
                '⊤' => Tok::Ident(TOP.into()),
                '⊥' => Tok::Ident(BOT.into()),
                '⊢' => Tok::Turnstile,
                '|' if matches!(it.peek(), Some(&(_, '-'))) => {
                    it.next();
                    Tok::Turnstile
                }
                '&' | '|' | '(' | ')' | ',' | '.' | '=' => Tok::Sym(c),
                other => {
                    return Err(SyntaxError::At {
                        pos: i,
                        msg: format!("unexpected character `{other}`"),
                    })
                }
            };
            out.push((i, tok));
        }
    }
    out.push((s.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    i: usize,
    /// Enclosing binder names, innermost last.
    scope: Vec<String>,
}

impl Parser {
    fn new(s: &str) -> Result<Parser, SyntaxError> {
        Ok(Parser {
            toks: lex(s)?,
            i: 0,
            scope: Vec::new(),
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.i].1
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.i + k).min(self.toks.len() - 1)].1
    }

    fn err<T>(&self, msg: &str) -> Result<T, SyntaxError> {
        Err(SyntaxError::At {
            pos: self.toks[self.i].0,
            msg: msg.to_string(),
        })
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.i].1.clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn expect(&mut self, c: char) -> Result<(), SyntaxError> {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            self.err(&format!("expected `{c}`"))
        }
    }

    fn finish(&self) -> Result<(), SyntaxError> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            self.err("trailing input")
        }
    }

    fn formula(&mut self) -> Result<Formula, SyntaxError> {
        match self.peek().clone() {
            Tok::Forall | Tok::Exists => {
                let q = if self.bump() == Tok::Forall {
                    Quantifier::Forall
                } else {
                    Quantifier::Exists
                };
                let Tok::Ident(x) = self.bump() else {
                    return self.err("expected a variable after a quantifier");
                };
                if *self.peek() == Tok::Sym('.') {
                    self.bump();
                }
                self.scope.push(x.clone());
                let body = self.formula();
                self.scope.pop();
                Ok(Formula::Quant(q, Hint(x), Box::new(body?)))
            }
            Tok::Sym('(') if matches!(self.peek_at(1), Tok::Forall | Tok::Exists | Tok::Sym('(')) => {
                let save = self.i;
                self.bump();
                if let Ok(f) = self.formula() {
                    if *self.peek() == Tok::Sym(')') {
                        self.bump();
                        return Ok(f);
                    }
                }
                self.i = save;
                self.atom()
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Formula, SyntaxError> {
        if let Tok::Ident(name) = self.peek().clone() {
            if name.starts_with(|c: char| c.is_uppercase()) {
                self.bump();
                let args = if *self.peek() == Tok::Sym('(') {
                    self.args()?
                } else {
                    Vec::new()
                };
                return Ok(Formula::Atom(Prop { name, args }));
            }
        }
        let t = self.join()?;
        if *self.peek() == Tok::Sym('=') {
            self.bump();
            let u = self.join()?;
            return Ok(Formula::Atom(Prop::new("=", vec![t, u])));
        }
        Ok(Formula::Atom(Prop::unary(t)))
    }

    fn args(&mut self) -> Result<Vec<FoTerm>, SyntaxError> {
        self.expect('(')?;
        let mut args = Vec::new();
        if *self.peek() != Tok::Sym(')') {
            loop {
                args.push(self.join()?);
                if *self.peek() == Tok::Sym(',') {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        self.expect(')')?;
        Ok(args)
    }

    fn join(&mut self) -> Result<FoTerm, SyntaxError> {
        let mut t = self.meet()?;
        while *self.peek() == Tok::Sym('|') {
            self.bump();
            let u = self.meet()?;
            t = FoTerm::app(JOIN, vec![t, u]);
        }
        Ok(t)
    }

    fn meet(&mut self) -> Result<FoTerm, SyntaxError> {
        let mut t = self.primary()?;
        while *self.peek() == Tok::Sym('&') {
            self.bump();
            let u = self.primary()?;
            t = FoTerm::app(MEET, vec![t, u]);
        }
        Ok(t)
    }

    fn primary(&mut self) -> Result<FoTerm, SyntaxError> {
        match self.bump() {
            Tok::Sym('(') => {
                let t = self.join()?;
                self.expect(')')?;
                Ok(t)
            }
            Tok::Num(n) => Ok(FoTerm::constant(&n)),
            Tok::Ident(id) => {
                if *self.peek() == Tok::Sym('(') {
                    return Ok(FoTerm::App(id, self.args()?));
                }
                if id == TOP || id == BOT {
                    return Ok(FoTerm::constant(&id));
                }
                match self.scope.iter().rev().position(|s| *s == id) {
                    Some(k) => Ok(FoTerm::Var(Var::Bound(k))),
                    None => Ok(FoTerm::var(&id)),
                }
            }
            _ => {
                self.i -= 1;
                self.err("expected a term")
            }
        }
    }
}

pub fn parse_formula(s: &str) -> Result<Formula, SyntaxError> {
    let mut p = Parser::new(s)?;
    let f = p.formula()?;
    p.finish()?;
    Ok(f)
}

/// Parses a closed-scope term; names are free variables.
pub fn parse_fo_term(s: &str) -> Result<FoTerm, SyntaxError> {
    let mut p = Parser::new(s)?;
    let t = p.join()?;
    p.finish()?;
    Ok(t)
}

pub fn parse_prop(s: &str) -> Result<Prop, SyntaxError> {
    match parse_formula(s)? {
        Formula::Atom(p) => Ok(p),
        _ => Err(SyntaxError::At {
            pos: 0,
            msg: "expected an atomic proposition".into(),
        }),
    }
}

/// `A |- B` or `A ⊢ B`.
pub fn parse_sequent(s: &str) -> Result<Sequent, SyntaxError> {
    let mut p = Parser::new(s)?;
    let left = p.formula()?;
    if *p.peek() != Tok::Turnstile {
        return p.err("expected `|-`");
    }
    p.bump();
    let right = p.formula()?;
    p.finish()?;
    Ok(Sequent { left, right })
}

/// Splits `(P, Q)` into its two propositions.
pub fn parse_prop_pair(s: &str) -> Result<(Prop, Prop), SyntaxError> {
    let t = s.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or(SyntaxError::At {
            pos: 0,
            msg: "expected `(P, Q)`".into(),
        })?;
    let mut depth = 0i32;
    for (i, c) in inner.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Ok((parse_prop(&inner[..i])?, parse_prop(&inner[i + 1..])?)),
            _ => {}
        }
    }
    Err(SyntaxError::At {
        pos: 0,
        msg: "expected a comma between the two propositions".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let f = parse_formula("∃x∃y(x∧y)").unwrap();
        assert_eq!(f.to_string(), "exists x. exists y. x & y");
        assert_eq!(parse_formula(&f.to_string()).unwrap(), f);
        let g = parse_formula("forall y. exists z. y = z").unwrap();
        assert_eq!(g.quantifiers(), vec![Quantifier::Forall, Quantifier::Exists]);
        assert_eq!(parse_formula("P").unwrap(), Formula::Atom(Prop::new("P", vec![])));
        assert_eq!(parse_formula("(forall x. x)").unwrap(), parse_formula("forall x. x").unwrap());
        assert_eq!(parse_formula("(x | y) & z").unwrap().to_string(), "(x | y) & z");
    }

    #[test]
    fn alpha_equivalence() {
        assert_eq!(parse_formula("forall x. P(x)").unwrap(), parse_formula("forall y. P(y)").unwrap());
        assert_ne!(parse_formula("forall x. P(x)").unwrap(), parse_formula("forall y. P(x)").unwrap());
    }

    #[test]
    fn instantiate_avoids_capture() {
        let f = parse_formula("forall x. exists y. Q(x, y)").unwrap();
        let Formula::Quant(_, _, body) = &f else { panic!() };
        let inst = Formula::instantiate(body, &FoTerm::var("y"));
        assert_eq!(inst.to_string(), "exists y1. Q(y, y1)");
        assert_eq!(inst.free_vars().into_iter().collect::<Vec<_>>(), vec!["y".to_string()]);
    }

    #[test]
    fn sequents_and_pairs() {
        let s = parse_sequent("∀x P(x) ⊢ ∀y ∃z Q(y, z)").unwrap();
        assert_eq!(s.to_string(), "forall x. P(x) |- forall y. exists z. Q(y, z)");
        let (p, q) = parse_prop_pair("(x & y, top)").unwrap();
        assert_eq!(p.to_string(), "x & y");
        assert_eq!(q, Prop::unary(FoTerm::constant(TOP)));
        assert!(parse_formula("forall").is_err());
        assert!(parse_formula("x ]").is_err());
    }
}
