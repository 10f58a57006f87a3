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

//! Signatures, object words and typed morphism terms of the free strict
//! monoidal category on a signature.
//!
//! Terms are written in a small text language:
//!
//! ```text
//! id(3)                      identity of width 3 (single-object signatures)
//! id(OPO)                    identity on an object word
//! mu                         a generator
//! f ; g                      composition, f first
//! f * g                      tensor, f on top
//! # comment until end of line
//! ```
//!
//! `*` binds tighter than `;` and both associate to the left.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SigError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("type mismatch in `{term}`: target {left} does not match source {right}")]
    TypeMismatch {
        left: ObjectWord,
        right: ObjectWord,
        term: String,
    },
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
}

/// A word over object generators; the empty word is the monoidal unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ObjectWord(pub Vec<char>);

impl ObjectWord {
    pub fn unit() -> Self {
        ObjectWord(Vec::new())
    }

    pub fn repeat(object: char, n: usize) -> Self {
        ObjectWord(vec![object; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &ObjectWord) -> ObjectWord {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        ObjectWord(letters)
    }

    pub fn slice(&self, from: usize, to: usize) -> ObjectWord {
        ObjectWord(self.0[from..to].to_vec())
    }
}

impl fmt::Display for ObjectWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "I");
        }
        for c in &self.0 {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl From<&str> for ObjectWord {
    fn from(s: &str) -> Self {
        ObjectWord(s.chars().collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorDecl {
    pub name: String,
    pub source: ObjectWord,
    pub target: ObjectWord,
}

/// Object generators (single characters) and typed morphism generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    objects: Vec<char>,
    generators: Vec<GeneratorDecl>,
}

#[derive(Serialize, Deserialize)]
struct SignatureJson {
    objects: Vec<String>,
    generators: Vec<GeneratorJson>,
}

#[derive(Serialize, Deserialize)]
struct GeneratorJson {
    name: String,
    src: String,
    tgt: String,
}

impl Signature {
    pub fn new(objects: Vec<char>, generators: Vec<GeneratorDecl>) -> Result<Self, SigError> {
        for (i, o) in objects.iter().enumerate() {
            if objects[..i].contains(o) {
                return Err(SigError::InvalidSignature(format!("duplicate object `{o}`")));
            }
            if o.is_ascii_digit() || o.is_whitespace() {
                return Err(SigError::InvalidSignature(format!("bad object name `{o}`")));
            }
        }
        for (i, g) in generators.iter().enumerate() {
            if g.name == "id" || generators[..i].iter().any(|h| h.name == g.name) {
                return Err(SigError::InvalidSignature(format!(
                    "duplicate or reserved generator `{}`",
                    g.name
                )));
            }
            for c in g.source.0.iter().chain(g.target.0.iter()) {
                if !objects.contains(c) {
                    return Err(SigError::UnknownObject(c.to_string()));
                }
            }
        }
        Ok(Signature { objects, generators })
    }

    /// Convenience constructor from `(name, source, target)` string triples.
    pub fn from_triples(objects: &str, generators: &[(&str, &str, &str)]) -> Result<Self, SigError> {
        Signature::new(
            objects.chars().collect(),
            generators
                .iter()
                .map(|(n, s, t)| GeneratorDecl {
                    name: n.to_string(),
                    source: ObjectWord::from(*s),
                    target: ObjectWord::from(*t),
                })
                .collect(),
        )
    }

    pub fn objects(&self) -> &[char] {
        &self.objects
    }

    pub fn generators(&self) -> &[GeneratorDecl] {
        &self.generators
    }

    pub fn generator(&self, name: &str) -> Option<&GeneratorDecl> {
        self.generators.iter().find(|g| g.name == name)
    }

    /// The object of a single-object signature.
    pub fn single_object(&self) -> Option<char> {
        match self.objects.as_slice() {
            [o] => Some(*o),
            _ => None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self, SigError> {
        let raw: SignatureJson = serde_json::from_str(text)
            .map_err(|e| SigError::InvalidSignature(e.to_string()))?;
        let mut objects = Vec::new();
        for o in raw.objects {
            let mut chars = o.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => objects.push(c),
                _ => {
                    return Err(SigError::InvalidSignature(format!(
                        "object names must be single letters, got `{o}`"
                    )))
                }
            }
        }
        let generators = raw
            .generators
            .into_iter()
            .map(|g| GeneratorDecl {
                name: g.name,
                source: ObjectWord::from(g.src.as_str()),
                target: ObjectWord::from(g.tgt.as_str()),
            })
            .collect();
        Signature::new(objects, generators)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let raw = SignatureJson {
            objects: self.objects.iter().map(|c| c.to_string()).collect(),
            generators: self
                .generators
                .iter()
                .map(|g| GeneratorJson {
                    name: g.name.clone(),
                    src: g.source.0.iter().collect(),
                    tgt: g.target.0.iter().collect(),
                })
                .collect(),
        };
        serde_json::to_value(raw).expect("signature serializes")
    }
}

/// A formal expression in the free monoidal category. `Compose(f, g)` is
/// `g ∘ f`: `f` runs first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Identity(ObjectWord),
    Generator(String),
    Tensor(Box<Term>, Box<Term>),
    Compose(Box<Term>, Box<Term>),
}

impl Term {
    pub fn id(word: ObjectWord) -> Term {
        Term::Identity(word)
    }

    pub fn gen(name: &str) -> Term {
        Term::Generator(name.to_string())
    }

    pub fn tensor(self, other: Term) -> Term {
        Term::Tensor(Box::new(self), Box::new(other))
    }

    /// `self` followed by `then`.
    pub fn then(self, then: Term) -> Term {
        Term::Compose(Box::new(self), Box::new(then))
    }

    /// Tensor of a non-empty sequence, or the unit identity when empty.
    pub fn tensor_all(parts: impl IntoIterator<Item = Term>) -> Term {
        parts
            .into_iter()
            .reduce(Term::tensor)
            .unwrap_or_else(|| Term::Identity(ObjectWord::unit()))
    }

    /// Sequential composite of a non-empty sequence (first element first).
    pub fn compose_all(parts: impl IntoIterator<Item = Term>, source: ObjectWord) -> Term {
        parts
            .into_iter()
            .reduce(Term::then)
            .unwrap_or(Term::Identity(source))
    }

    /// Rename generators and objects, e.g. to transport a single-object
    /// theory onto one object of a larger signature.
    pub fn rename(&self, generator: &dyn Fn(&str) -> String, object: &dyn Fn(char) -> char) -> Term {
        match self {
            Term::Identity(w) => Term::Identity(ObjectWord(w.0.iter().map(|c| object(*c)).collect())),
            Term::Generator(g) => Term::Generator(generator(g)),
            Term::Tensor(a, b) => Term::Tensor(
                Box::new(a.rename(generator, object)),
                Box::new(b.rename(generator, object)),
            ),
            Term::Compose(a, b) => Term::Compose(
                Box::new(a.rename(generator, object)),
                Box::new(b.rename(generator, object)),
            ),
        }
    }
}

/// Source and target words of a term.
pub fn typecheck(t: &Term, sig: &Signature) -> Result<(ObjectWord, ObjectWord), SigError> {
    match t {
        Term::Identity(w) => {
            for c in &w.0 {
                if !sig.objects.contains(c) {
                    return Err(SigError::UnknownObject(c.to_string()));
                }
            }
            Ok((w.clone(), w.clone()))
        }
        Term::Generator(name) => sig
            .generator(name)
            .map(|g| (g.source.clone(), g.target.clone()))
            .ok_or_else(|| SigError::UnknownGenerator(name.clone())),
        Term::Tensor(a, b) => {
            let (sa, ta) = typecheck(a, sig)?;
            let (sb, tb) = typecheck(b, sig)?;
            Ok((sa.concat(&sb), ta.concat(&tb)))
        }
        Term::Compose(a, b) => {
            let (sa, ta) = typecheck(a, sig)?;
            let (sb, tb) = typecheck(b, sig)?;
            if ta != sb {
                return Err(SigError::TypeMismatch {
                    left: ta,
                    right: sb,
                    term: print_term(t, sig),
                });
            }
            Ok((sa, tb))
        }
    }
}

/// Number of generator occurrences.
pub fn size(t: &Term) -> usize {
    match t {
        Term::Identity(_) => 0,
        Term::Generator(_) => 1,
        Term::Tensor(a, b) | Term::Compose(a, b) => size(a) + size(b),
    }
}

/// One generator whiskered by identities: `left ⊗ generator ⊗ right`, with
/// whisker widths counted in object letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Slice {
    pub left: usize,
    pub generator: String,
    pub right: usize,
}

/// Sequentialize a well-typed term into whiskered generators, applied in
/// order from the source. For `f ⊗ g` all slices of `f` come first.
pub fn slices(t: &Term, sig: &Signature) -> Result<Vec<Slice>, SigError> {
    typecheck(t, sig)?;
    let mut out = Vec::with_capacity(size(t));
    collect_slices(t, sig, 0, 0, &mut out)?;
    Ok(out)
}

fn collect_slices(
    t: &Term,
    sig: &Signature,
    left: usize,
    right: usize,
    out: &mut Vec<Slice>,
) -> Result<(), SigError> {
    match t {
        Term::Identity(_) => {}
        Term::Generator(g) => out.push(Slice {
            left,
            generator: g.clone(),
            right,
        }),
        Term::Compose(a, b) => {
            collect_slices(a, sig, left, right, out)?;
            collect_slices(b, sig, left, right, out)?;
        }
        Term::Tensor(a, b) => {
            let (sb, _) = typecheck(b, sig)?;
            let (_, ta) = typecheck(a, sig)?;
            collect_slices(a, sig, left, right + sb.len(), out)?;
            collect_slices(b, sig, left + ta.len(), right, out)?;
        }
    }
    Ok(())
}

/// Rebuild a term from slices starting at `source`.
pub fn slices_to_term(
    slices: &[Slice],
    source: &ObjectWord,
    sig: &Signature,
) -> Result<Term, SigError> {
    let mut current = source.clone();
    let mut parts = Vec::with_capacity(slices.len());
    for s in slices {
        let g = sig
            .generator(&s.generator)
            .ok_or_else(|| SigError::UnknownGenerator(s.generator.clone()))?;
        let width = s.left + g.source.len() + s.right;
        if width != current.len() || current.slice(s.left, s.left + g.source.len()) != g.source {
            return Err(SigError::TypeMismatch {
                left: current.clone(),
                right: g.source.clone(),
                term: s.generator.clone(),
            });
        }
        let left = current.slice(0, s.left);
        let right = current.slice(s.left + g.source.len(), current.len());
        parts.push(
            Term::id(left.clone())
                .tensor(Term::gen(&s.generator))
                .tensor(Term::id(right.clone())),
        );
        current = left.concat(&g.target).concat(&right);
    }
    Ok(Term::compose_all(parts, source.clone()))
}

/// Render a term in the text language. Identities print as widths for
/// single-object signatures.
pub fn print_term(t: &Term, sig: &Signature) -> String {
    let mut s = String::new();
    write_term(t, sig.single_object(), 0, &mut s);
    s
}

fn write_term(t: &Term, single: Option<char>, prec: u8, out: &mut String) {
    match t {
        Term::Identity(w) => {
            out.push_str("id(");
            match single {
                Some(o) if w.0.iter().all(|c| *c == o) => out.push_str(&w.len().to_string()),
                _ => out.extend(w.0.iter()),
            }
            out.push(')');
        }
        Term::Generator(g) => out.push_str(g),
        Term::Compose(a, b) => {
            if prec > 0 {
                out.push('(');
            }
            write_term(a, single, 0, out);
            out.push_str(" ; ");
            write_term(b, single, 1, out);
            if prec > 0 {
                out.push(')');
            }
        }
        Term::Tensor(a, b) => {
            if prec > 1 {
                out.push('(');
            }
            write_term(a, single, 1, out);
            out.push_str(" * ");
            write_term(b, single, 2, out);
            if prec > 1 {
                out.push(')');
            }
        }
    }
}

/// Parse a term against a signature; generator names and object letters are
/// resolved eagerly, typing is not checked.
pub fn parse_term(text: &str, sig: &Signature) -> Result<Term, SigError> {
    let mut p = Parser {
        src: text,
        pos: 0,
        sig,
    };
    let t = p.parse_seq()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(t)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    sig: &'a Signature,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> SigError {
        SigError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        loop {
            match self.peek() {
                Some(c) if c.is_whitespace() => self.pos += c.len_utf8(),
                Some('#') => {
                    while let Some(c) = self.peek() {
                        self.pos += c.len_utf8();
                        if c == '\n' {
                            break;
                        }
                    }
                }
                _ => break,
            }
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn parse_seq(&mut self) -> Result<Term, SigError> {
        let mut t = self.parse_tensor()?;
        while self.eat(';') {
            let rhs = self.parse_tensor()?;
            t = t.then(rhs);
        }
        Ok(t)
    }

    fn parse_tensor(&mut self) -> Result<Term, SigError> {
        let mut t = self.parse_atom()?;
        while self.eat('*') {
            let rhs = self.parse_atom()?;
            t = t.tensor(rhs);
        }
        Ok(t)
    }

    fn parse_atom(&mut self) -> Result<Term, SigError> {
        self.skip_ws();
        if self.eat('(') {
            let t = self.parse_seq()?;
            if !self.eat(')') {
                return Err(self.error("expected `)`"));
            }
            return Ok(t);
        }
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_alphanumeric() || c == '_' {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        if start == self.pos {
            return Err(self.error("expected a term"));
        }
        let name = &self.src[start..self.pos];
        if name == "id" {
            return self.parse_identity();
        }
        if self.sig.generator(name).is_none() {
            return Err(SigError::UnknownGenerator(name.to_string()));
        }
        Ok(Term::gen(name))
    }

    fn parse_identity(&mut self) -> Result<Term, SigError> {
        if !self.eat('(') {
            return Err(self.error("expected `(` after `id`"));
        }
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c == ')' || c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
        let arg = &self.src[start..self.pos];
        let word = if !arg.is_empty() && arg.chars().all(|c| c.is_ascii_digit()) {
            let n: usize = arg.parse().map_err(|_| self.error("width too large"))?;
            if n == 0 {
                ObjectWord::unit()
            } else {
                match self.sig.single_object() {
                    Some(o) => ObjectWord::repeat(o, n),
                    None => {
                        return Err(SigError::Syntax {
                            pos: start,
                            msg: "numeric width needs a single-object signature".into(),
                        })
                    }
                }
            }
        } else {
            for c in arg.chars() {
                if !self.sig.objects.contains(&c) {
                    return Err(SigError::UnknownObject(c.to_string()));
                }
            }
            ObjectWord::from(arg)
        };
        if !self.eat(')') {
            return Err(self.error("expected `)`"));
        }
        Ok(Term::Identity(word))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bsig() -> Signature {
        Signature::from_triples(
            "x",
            &[
                ("mu", "xx", "x"),
                ("eta", "", "x"),
                ("delta", "x", "xx"),
                ("eps", "x", ""),
                ("gamma", "xx", "xx"),
            ],
        )
        .unwrap()
    }

    const EXAMPLE: &str = "((delta * eps) ; (id(1) * delta) ; (mu * eta * id(1))) * id(1)";

    #[test]
    fn identity_parses_to_width() {
        let sig = bsig();
        let t = parse_term("id(1)", &sig).unwrap();
        assert_eq!(t, Term::Identity(ObjectWord::repeat('x', 1)));
        assert_eq!(typecheck(&t, &sig).unwrap().0.len(), 1);
        assert_eq!(size(&t), 0);
        assert!(slices(&t, &sig).unwrap().is_empty());
    }

    #[test]
    fn worked_example_types_and_size() {
        let sig = bsig();
        let t = parse_term(EXAMPLE, &sig).unwrap();
        let (s, t2) = typecheck(&t, &sig).unwrap();
        assert_eq!((s.len(), t2.len()), (3, 4));
        assert_eq!(size(&t), 5);
        assert_eq!(slices(&t, &sig).unwrap().len(), 5);
    }

    #[test]
    fn compose_mu_mu_is_a_type_error() {
        let sig = bsig();
        let t = parse_term("mu ; mu", &sig).unwrap();
        match typecheck(&t, &sig) {
            Err(SigError::TypeMismatch { left, right, .. }) => {
                assert_eq!(left.len(), 1);
                assert_eq!(right.len(), 2);
            }
            other => panic!("expected mismatch, got {other:?}"),
        }
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let sig = bsig();
        assert!(matches!(parse_term("mu ; ", &sig), Err(SigError::Syntax { pos: 5, .. })));
        assert!(matches!(parse_term("nu", &sig), Err(SigError::UnknownGenerator(_))));
        assert!(matches!(parse_term("(mu", &sig), Err(SigError::Syntax { .. })));
        assert!(matches!(parse_term("id(y)", &sig), Err(SigError::UnknownObject(_))));
    }

    #[test]
    fn comments_and_whitespace() {
        let sig = bsig();
        let t = parse_term("mu # merge\n ; eps", &sig).unwrap();
        assert_eq!(t, Term::gen("mu").then(Term::gen("eps")));
    }

    #[test]
    fn printing_respects_associativity() {
        let sig = bsig();
        let right = Term::gen("mu").tensor(Term::gen("eta").tensor(Term::gen("eps")));
        let printed = print_term(&right, &sig);
        assert_eq!(printed, "mu * (eta * eps)");
        assert_eq!(parse_term(&printed, &sig).unwrap(), right);
        let seq = Term::gen("delta").then(Term::gen("mu").then(Term::gen("delta")));
        assert_eq!(parse_term(&print_term(&seq, &sig), &sig).unwrap(), seq);
    }

    #[test]
    fn tensor_slices_put_left_factor_first() {
        let sig = bsig();
        let t = Term::gen("mu").tensor(Term::gen("eta"));
        let s = slices(&t, &sig).unwrap();
        assert_eq!(
            s,
            vec![
                Slice { left: 0, generator: "mu".into(), right: 0 },
                Slice { left: 1, generator: "eta".into(), right: 0 },
            ]
        );
        let rebuilt = slices_to_term(&s, &ObjectWord::repeat('x', 2), &sig).unwrap();
        assert_eq!(typecheck(&rebuilt, &sig).unwrap(), typecheck(&t, &sig).unwrap());
    }

    #[test]
    fn signature_validation() {
        assert!(Signature::from_triples("xx", &[]).is_err());
        assert!(Signature::from_triples("x", &[("f", "y", "x")]).is_err());
        assert!(Signature::from_triples("x", &[("f", "x", "x"), ("f", "", "")]).is_err());
        let json = r#"{"objects":["O","P"],"generators":[{"name":"etaOP","src":"","tgt":"OP"}]}"#;
        let sig = Signature::from_json(json).unwrap();
        assert_eq!(sig.objects(), &['O', 'P']);
        assert_eq!(Signature::from_json(&sig.to_json_value().to_string()).unwrap(), sig);
    }
}
