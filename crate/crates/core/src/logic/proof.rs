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


//! Proof trees and their text format, plus checking and the interpretation
//! as strategies.
//!
//! Proof files are s-expressions:
//!
//! ```text
//! file  ::= (proof SEQ step)
//! SEQ   ::= "A |- B" | (sequent "A" "B")
//! step  ::= (forall-L TERM step) | (forall-R VAR step)
//!         | (exists-L VAR step)  | (exists-R TERM step)
//!         | (ax) | (ax PROP PROP) | (cut "M" step step)
//! TERM  ::= atom in term syntax | (f TERM …)
//! PROP  ::= atom in proposition syntax | (P TERM …)
//! ```
//!
//! Atoms are bare tokens or double-quoted strings; `;` starts a comment.
//! Rules apply to the outermost quantifier of the named side.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};

use thiserror::Error;

use super::axioms::AxiomSet;
use super::syntax::{parse_fo_term, parse_formula, parse_prop, parse_sequent, FoTerm, Formula, Prop, Quantifier, Sequent, SyntaxError};
use crate::games::{generator_strategy, CyclicStrategy, Game, GameError, MoveRef, Polarity, Strategy};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProofError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error("malformed proof file: {0}")]
    Format(String),
    #[error("at {path}: {rule} does not apply to `{sequent}`: {msg}")]
    Schema {
        path: String,
        rule: String,
        sequent: String,
        msg: String,
    },
    #[error("at {path}: eigenvariable `{var}` is free in `{sequent}`")]
    Freshness { path: String, var: String, sequent: String },
    #[error("at {path}: ({left}, {right}) is not an axiom of `{axioms}`")]
    Axiom {
        path: String,
        left: String,
        right: String,
        axioms: String,
    },
    #[error("symbol `{symbol}` used with arity {found}, earlier with {expected}")]
    Arity { symbol: String, expected: usize, found: usize },
    #[error("proof contains a cut; use the cut-aware interpretation")]
    HasCut,
    #[error(transparent)]
    Game(#[from] GameError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProofTree {
    ForallL { witness: FoTerm, premise: Box<ProofTree> },
    ForallR { var: String, premise: Box<ProofTree> },
    ExistsL { var: String, premise: Box<ProofTree> },
    ExistsR { witness: FoTerm, premise: Box<ProofTree> },
    /// Optionally names the two propositions, which must then match.
    Ax { props: Option<(Prop, Prop)> },
    Cut { middle: Formula, left: Box<ProofTree>, right: Box<ProofTree> },
}

impl ProofTree {
    pub fn rule_name(&self) -> &'static str {
        match self {
            ProofTree::ForallL { .. } => "forall-L",
            ProofTree::ForallR { .. } => "forall-R",
            ProofTree::ExistsL { .. } => "exists-L",
            ProofTree::ExistsR { .. } => "exists-R",
            ProofTree::Ax { .. } => "ax",
            ProofTree::Cut { .. } => "cut",
        }
    }

    pub fn has_cut(&self) -> bool {
        match self {
            ProofTree::Cut { .. } => true,
            ProofTree::Ax { .. } => false,
            ProofTree::ForallL { premise, .. }
            | ProofTree::ForallR { premise, .. }
            | ProofTree::ExistsL { premise, .. }
            | ProofTree::ExistsR { premise, .. } => premise.has_cut(),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            ProofTree::Ax { .. } => 1,
            ProofTree::Cut { left, right, .. } => 1 + left.size() + right.size(),
            ProofTree::ForallL { premise, .. }
            | ProofTree::ForallR { premise, .. }
            | ProofTree::ExistsL { premise, .. }
            | ProofTree::ExistsR { premise, .. } => 1 + premise.size(),
        }
    }
}

/// A proof tree together with its conclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Proof {
    pub conclusion: Sequent,
    pub tree: ProofTree,
}

// ---------------------------------------------------------------- s-expressions

#[derive(Debug, Clone, PartialEq, Eq)]
enum Sexp {
    Atom(String),
    List(Vec<Sexp>),
}

fn read_sexp(s: &str) -> Result<Sexp, ProofError> {
    let mut chars = s.chars().peekable();
    let mut stack: Vec<Vec<Sexp>> = vec![Vec::new()];
    while let Some(&c) = chars.peek() {
        match c {
            ';' => {
                while chars.next_if(|&d| d != '\n').is_some() {}
            }
            c if c.is_whitespace() => {
                chars.next();
            }
            '(' => {
                chars.next();
                stack.push(Vec::new());
            }
            ')' => {
                chars.next();
                let done = stack.pop().filter(|_| !stack.is_empty()).ok_or(ProofError::Format("unbalanced `)`".into()))?;
                stack.last_mut().expect("outer level").push(Sexp::List(done));
            }
            '"' => {
                chars.next();
                let mut a = String::new();
                loop {
                    match chars.next() {
                        Some('"') => break,
                        Some('\\') => a.extend(chars.next()),
                        Some(d) => a.push(d),
                        None => return Err(ProofError::Format("unterminated string".into())),
                    }
                }
                stack.last_mut().expect("level").push(Sexp::Atom(a));
            }
            _ => {
                let mut a = String::new();
                while let Some(d) = chars.next_if(|&d| !d.is_whitespace() && !"();\"".contains(d)) {
                    a.push(d);
                }
                stack.last_mut().expect("level").push(Sexp::Atom(a));
            }
        }
    }
    if stack.len() != 1 {
        return Err(ProofError::Format("unbalanced `(`".into()));
    }
    let mut top = stack.pop().expect("top level");
    if top.len() != 1 {
        return Err(ProofError::Format(format!("expected one expression, found {}", top.len())));
    }
    Ok(top.remove(0))
}

fn sexp_term(e: &Sexp) -> Result<FoTerm, ProofError> {
    match e {
        Sexp::Atom(a) => Ok(parse_fo_term(a)?),
        Sexp::List(items) => match items.split_first() {
            Some((Sexp::Atom(f), args)) => Ok(FoTerm::App(f.clone(), args.iter().map(sexp_term).collect::<Result<_, _>>()?)),
            _ => Err(ProofError::Format("a term list must start with a function symbol".into())),
        },
    }
}

fn sexp_prop(e: &Sexp) -> Result<Prop, ProofError> {
    match e {
        Sexp::Atom(a) => Ok(parse_prop(a)?),
        Sexp::List(items) => match items.split_first() {
            Some((Sexp::Atom(p), args)) => Ok(Prop {
                name: p.clone(),
                args: args.iter().map(sexp_term).collect::<Result<_, _>>()?,
            }),
            _ => Err(ProofError::Format("a proposition list must start with a symbol".into())),
        },
    }
}

fn sexp_atom(e: &Sexp) -> Result<&str, ProofError> {
    match e {
        Sexp::Atom(a) => Ok(a),
        Sexp::List(_) => Err(ProofError::Format("expected an atom".into())),
    }
}

fn sexp_step(e: &Sexp) -> Result<ProofTree, ProofError> {
    let Sexp::List(items) = e else {
        return Err(ProofError::Format(format!("expected a rule, found `{}`", sexp_atom(e)?)));
    };
    let (head, rest) = items.split_first().ok_or(ProofError::Format("empty rule".into()))?;
    let head = sexp_atom(head)?;
    let arity = |n: usize| {
        if rest.len() == n {
            Ok(())
        } else {
            Err(ProofError::Format(format!("`{head}` takes {n} arguments, found {}", rest.len())))
        }
    };
    let premise = |i: usize| sexp_step(&rest[i]).map(Box::new);
    Ok(match head {
        "forall-L" | "∀-L" => {
            arity(2)?;
            ProofTree::ForallL { witness: sexp_term(&rest[0])?, premise: premise(1)? }
        }
        "exists-R" | "∃-R" => {
            arity(2)?;
            ProofTree::ExistsR { witness: sexp_term(&rest[0])?, premise: premise(1)? }
        }
        "forall-R" | "∀-R" => {
            arity(2)?;
            ProofTree::ForallR { var: sexp_atom(&rest[0])?.to_string(), premise: premise(1)? }
        }
        "exists-L" | "∃-L" => {
            arity(2)?;
            ProofTree::ExistsL { var: sexp_atom(&rest[0])?.to_string(), premise: premise(1)? }
        }
        "ax" | "Ax" => match rest {
            [] => ProofTree::Ax { props: None },
            [p, q] => ProofTree::Ax { props: Some((sexp_prop(p)?, sexp_prop(q)?)) },
            _ => return Err(ProofError::Format("`ax` takes 0 or 2 arguments".into())),
        },
        "cut" | "Cut" => {
            arity(3)?;
            ProofTree::Cut {
                middle: parse_formula(sexp_atom(&rest[0])?)?,
                left: premise(1)?,
                right: premise(2)?,
            }
        }
        other => return Err(ProofError::Format(format!("unknown rule `{other}`"))),
    })
}

/// Parses a proof file.
pub fn parse_proof(s: &str) -> Result<Proof, ProofError> {
    let e = read_sexp(s)?;
    let items = match &e {
        Sexp::List(items) if items.first() == Some(&Sexp::Atom("proof".into())) && items.len() == 3 => items,
        _ => return Err(ProofError::Format("expected `(proof SEQUENT STEP)`".into())),
    };
    let conclusion = match &items[1] {
        Sexp::Atom(a) => parse_sequent(a)?,
        Sexp::List(parts) => match parts.as_slice() {
            [Sexp::Atom(h), l, r] if h == "sequent" => Sequent::new(parse_formula(sexp_atom(l)?)?, parse_formula(sexp_atom(r)?)?),
            _ => return Err(ProofError::Format("expected `(sequent \"A\" \"B\")`".into())),
        },
    };
    Ok(Proof {
        conclusion,
        tree: sexp_step(&items[2])?,
    })
}

fn quoted(s: &str) -> String {
    if !s.is_empty() && s.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'') {
        s.to_string()
    } else {
        format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
    }
}

fn write_step(t: &ProofTree, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    let _ = write!(out, "{pad}({}", t.rule_name());
    match t {
        ProofTree::ForallL { witness, premise } | ProofTree::ExistsR { witness, premise } => {
            let _ = writeln!(out, " {}", quoted(&witness.to_string()));
            write_step(premise, indent + 2, out);
        }
        ProofTree::ForallR { var, premise } | ProofTree::ExistsL { var, premise } => {
            let _ = writeln!(out, " {}", quoted(var));
            write_step(premise, indent + 2, out);
        }
        ProofTree::Ax { props } => {
            if let Some((p, q)) = props {
                let _ = write!(out, " {} {}", quoted(&p.to_string()), quoted(&q.to_string()));
            }
        }
        ProofTree::Cut { middle, left, right } => {
            let _ = writeln!(out, " {}", quoted(&middle.to_string()));
            write_step(left, indent + 2, out);
            out.push('\n');
            write_step(right, indent + 2, out);
        }
    }
    out.push(')');
}

impl fmt::Display for Proof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        let _ = writeln!(out, "(proof {}", quoted(&self.conclusion.to_string()));
        write_step(&self.tree, 2, &mut out);
        out.push(')');
        f.write_str(&out)
    }
}

// ---------------------------------------------------------------- checking

/// Arities of the proposition and function symbols seen so far.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Language {
    pub propositions: BTreeMap<String, usize>,
    pub functions: BTreeMap<String, usize>,
}

impl Language {
    fn note(table: &mut BTreeMap<String, usize>, symbol: &str, found: usize) -> Result<(), ProofError> {
        let expected = *table.entry(symbol.to_string()).or_insert(found);
        if expected != found {
            return Err(ProofError::Arity {
                symbol: symbol.to_string(),
                expected,
                found,
            });
        }
        Ok(())
    }

    pub fn observe_term(&mut self, t: &FoTerm) -> Result<(), ProofError> {
        if let FoTerm::App(f, args) = t {
            Self::note(&mut self.functions, f, args.len())?;
            args.iter().try_for_each(|a| self.observe_term(a))?;
        }
        Ok(())
    }

    pub fn observe_prop(&mut self, p: &Prop) -> Result<(), ProofError> {
        Self::note(&mut self.propositions, &p.name, p.args.len())?;
        p.args.iter().try_for_each(|a| self.observe_term(a))
    }

    pub fn observe(&mut self, f: &Formula) -> Result<(), ProofError> {
        match f {
            Formula::Atom(p) => self.observe_prop(p),
            Formula::Quant(_, _, b) => self.observe(b),
        }
    }
}

fn child(path: &str, i: usize) -> String {
    format!("{path}/{i}")
}

fn check_node(t: &ProofTree, seq: &Sequent, path: &str, ax: &dyn AxiomSet, lang: &mut Language) -> Result<(), ProofError> {
    lang.observe(&seq.left)?;
    lang.observe(&seq.right)?;
    let schema = |msg: &str| ProofError::Schema {
        path: path.to_string(),
        rule: t.rule_name().to_string(),
        sequent: seq.to_string(),
        msg: msg.to_string(),
    };
    let fresh = |x: &str| {
        if seq.free_vars().contains(x) {
            Err(ProofError::Freshness {
                path: path.to_string(),
                var: x.to_string(),
                sequent: seq.to_string(),
            })
        } else {
            Ok(())
        }
    };
    match t {
        ProofTree::ForallL { witness, premise } => {
            let Formula::Quant(Quantifier::Forall, _, body) = &seq.left else {
                return Err(schema("the left formula is not universal"));
            };
            lang.observe_term(witness)?;
            let next = Sequent::new(Formula::instantiate(body, witness), seq.right.clone());
            check_node(premise, &next, &child(path, 0), ax, lang)
        }
        ProofTree::ExistsR { witness, premise } => {
            let Formula::Quant(Quantifier::Exists, _, body) = &seq.right else {
                return Err(schema("the right formula is not existential"));
            };
            lang.observe_term(witness)?;
            let next = Sequent::new(seq.left.clone(), Formula::instantiate(body, witness));
            check_node(premise, &next, &child(path, 0), ax, lang)
        }
        ProofTree::ForallR { var, premise } => {
            let Formula::Quant(Quantifier::Forall, _, body) = &seq.right else {
                return Err(schema("the right formula is not universal"));
            };
            fresh(var)?;
            let next = Sequent::new(seq.left.clone(), Formula::instantiate(body, &FoTerm::var(var)));
            check_node(premise, &next, &child(path, 0), ax, lang)
        }
        ProofTree::ExistsL { var, premise } => {
            let Formula::Quant(Quantifier::Exists, _, body) = &seq.left else {
                return Err(schema("the left formula is not existential"));
            };
            fresh(var)?;
            let next = Sequent::new(Formula::instantiate(body, &FoTerm::var(var)), seq.right.clone());
            check_node(premise, &next, &child(path, 0), ax, lang)
        }
        ProofTree::Ax { props } => {
            let (Formula::Atom(p), Formula::Atom(q)) = (&seq.left, &seq.right) else {
                return Err(schema("both sides must be atomic"));
            };
            if let Some((p2, q2)) = props {
                if p2 != p || q2 != q {
                    return Err(schema(&format!("the leaf names ({p2}, {q2})")));
                }
            }
            if !ax.contains(p, q) {
                return Err(ProofError::Axiom {
                    path: path.to_string(),
                    left: p.to_string(),
                    right: q.to_string(),
                    axioms: ax.name().to_string(),
                });
            }
            Ok(())
        }
        ProofTree::Cut { middle, left, right } => {
            check_node(left, &Sequent::new(seq.left.clone(), middle.clone()), &child(path, 0), ax, lang)?;
            check_node(right, &Sequent::new(middle.clone(), seq.right.clone()), &child(path, 1), ax, lang)
        }
    }
}

/// Checks every node against its rule schema and returns the conclusion.
pub fn check_proof(p: &Proof, ax: &dyn AxiomSet) -> Result<Sequent, ProofError> {
    check_node(&p.tree, &p.conclusion, "root", ax, &mut Language::default())?;
    Ok(p.conclusion.clone())
}

// ---------------------------------------------------------------- interpretation

/// `⟦P⟧ = I`, `⟦∀x A⟧ = O ◁ ⟦A⟧`, `⟦∃x A⟧ = P ◁ ⟦A⟧`.
pub fn formula_to_game(a: &Formula) -> Game {
    let pols: Vec<Polarity> = a
        .quantifiers()
        .into_iter()
        .map(|q| match q {
            Quantifier::Forall => Polarity::O,
            Quantifier::Exists => Polarity::P,
        })
        .collect();
    Game::filiform(&pols)
}

/// Dependency graph over quantifier occurrences: the root sequent's moves
/// first, then one node per quantifier of each cut formula.
struct DepGraph {
    edges: Vec<Vec<usize>>,
}

impl DepGraph {
    fn fresh(&mut self, n: usize) -> Vec<usize> {
        let start = self.edges.len();
        self.edges.resize(start + n, Vec::new());
        (start..start + n).collect()
    }

    fn justify(&mut self, witness: &FoTerm, target: usize, env: &BTreeMap<String, usize>) {
        let mut fv = BTreeSet::new();
        witness.free_vars(&mut fv);
        for x in fv {
            if let Some(&src) = env.get(&x) {
                self.edges[src].push(target);
            }
        }
    }

    fn walk(&mut self, t: &ProofTree, left: &[usize], right: &[usize], env: &BTreeMap<String, usize>) {
        let bind = |x: &str, node: usize| {
            let mut e = env.clone();
            e.insert(x.to_string(), node);
            e
        };
        match t {
            ProofTree::ForallL { witness, premise } => {
                self.justify(witness, left[0], env);
                self.walk(premise, &left[1..], right, env);
            }
            ProofTree::ExistsR { witness, premise } => {
                self.justify(witness, right[0], env);
                self.walk(premise, left, &right[1..], env);
            }
            ProofTree::ForallR { var, premise } => self.walk(premise, left, &right[1..], &bind(var, right[0])),
            ProofTree::ExistsL { var, premise } => self.walk(premise, &left[1..], right, &bind(var, left[0])),
            ProofTree::Ax { .. } => {}
            ProofTree::Cut { middle, left: l, right: r } => {
                let mid = self.fresh(middle.quantifiers().len());
                self.walk(l, left, &mid, env);
                self.walk(r, &mid, right, env);
            }
        }
    }
}

/// Interprets a checked proof, cuts included, as a strategy on
/// `⟦A⟧ ⊸ ⟦B⟧`. Cut formulas contribute hidden moves that are composed away.
pub fn interp_proof(p: &Proof, ax: &dyn AxiomSet) -> Result<Strategy, ProofError> {
    check_proof(p, ax)?;
    let (dom, cod) = (formula_to_game(&p.conclusion.left), formula_to_game(&p.conclusion.right));
    let mut g = DepGraph { edges: Vec::new() };
    let left = g.fresh(dom.len());
    let right = g.fresh(cod.len());
    g.walk(&p.tree, &left, &right, &BTreeMap::new());
    let root = dom.len() + cod.len();
    let as_move = |v: usize| if v < dom.len() { MoveRef::dom(v) } else { MoveRef::cod(v - dom.len()) };
    let mut pairs = BTreeSet::new();
    for start in 0..root {
        let mut seen = vec![false; g.edges.len()];
        let mut stack = g.edges[start].clone();
        while let Some(v) = stack.pop() {
            if std::mem::replace(&mut seen[v], true) {
                continue;
            }
            if v < root {
                pairs.insert((as_move(start), as_move(v)));
            }
            stack.extend(g.edges[v].iter().copied());
        }
    }
    Ok(CyclicStrategy::new(dom, cod, pairs)?.into_strategy()?)
}

/// Interprets a checked cut-free proof.
pub fn proof_to_strategy(p: &Proof, ax: &dyn AxiomSet) -> Result<Strategy, ProofError> {
    if p.tree.has_cut() {
        return Err(ProofError::HasCut);
    }
    interp_proof(p, ax)
}

// ---------------------------------------------------------------- definability

const WITNESSES: [(&str, &str); 13] = [
    ("muP", r#"(proof "exists x. exists y. x & y |- exists z. z" (exists-L x (exists-L y (exists-R "x & y" (ax)))))"#),
    ("etaP", r#"(proof "top |- exists x. x" (exists-R top (ax)))"#),
    ("deltaP", r#"(proof "exists x. x |- exists y. exists z. y & z" (exists-L x (exists-R x (exists-R x (ax)))))"#),
    ("epsP", r#"(proof "exists x. x |- top" (exists-L x (ax)))"#),
    ("etaOP", r#"(proof "top |- forall x. exists y. x | y" (forall-R x (exists-R "x | top" (ax))))"#),
    ("epsOP", r#"(proof "exists x. forall y. x & y |- bot" (exists-L x (forall-L "x & bot" (ax))))"#),
    ("gammaP", r#"(proof "exists x. exists y. x & y |- exists z. exists t. t & z" (exists-L x (exists-L y (exists-R y (exists-R x (ax))))))"#),
    ("gammaOP", r#"(proof "exists x. forall y. x & y |- forall z. exists t. t & z" (forall-R z (exists-L x (forall-L z (exists-R x (ax))))))"#),
    ("etaO", r#"(proof "bot |- forall x. x" (forall-R x (ax)))"#),
    ("epsO", r#"(proof "forall x. x |- top" (forall-L top (ax)))"#),
    ("muO", r#"(proof "forall x. forall y. x | y |- forall z. z" (forall-R z (forall-L z (forall-L z (ax)))))"#),
    ("deltaO", r#"(proof "forall x. x |- forall y. forall z. y | z" (forall-R y (forall-R z (forall-L "y & z" (ax)))))"#),
    ("gammaO", r#"(proof "forall x. forall y. x & y |- forall z. forall t. t & z" (forall-R z (forall-R t (forall-L t (forall-L z (ax))))))"#),
];

/// A cut-free proof, valid for the default axiom set, whose strategy is the
/// named generator.
pub fn definability_witness(name: &str) -> Result<Proof, ProofError> {
    let (_, text) = WITNESSES
        .iter()
        .find(|w| w.0 == name)
        .ok_or_else(|| ProofError::Game(GameError::UnknownGenerator(name.to_string())))?;
    parse_proof(text)
}

/// Checks a witness against the generator strategy.
pub fn witness_defines(name: &str, ax: &dyn AxiomSet) -> Result<bool, ProofError> {
    let proof = definability_witness(name)?;
    Ok(proof_to_strategy(&proof, ax)? == generator_strategy(name)?)
}

#[cfg(test)]
mod tests {
    use super::super::axioms::{default_axiom_set, AllAxioms, EqualityAxioms};
    use super::*;
    use crate::games::{compose_strategies, generator_names};

    fn strat(text: &str) -> Strategy {
        proof_to_strategy(&parse_proof(text).unwrap(), &AllAxioms).unwrap()
    }

    #[test]
    fn formula_games() {
        assert_eq!(formula_to_game(&parse_formula("P").unwrap()), Game::empty());
        assert_eq!(formula_to_game(&parse_formula("exists x. exists y. P").unwrap()).polarity_word(), "PP");
        assert_eq!(formula_to_game(&parse_formula("forall x. exists y. P").unwrap()).polarity_word(), "OP");
    }

    #[test]
    fn existential_chain_follows_witness_variables() {
        let proof = |t: &str| format!(r#"(proof "exists x. exists y. P(x, y) |- exists z. Q(z)" (exists-L x (exists-L y (exists-R "{t}" (ax)))))"#);
        let both = strat(&proof("f(x, y)"));
        assert_eq!(both, generator_strategy("muP").unwrap());
        let one = strat(&proof("f(x)"));
        assert_eq!(one.pairs().iter().copied().collect::<Vec<_>>(), vec![(MoveRef::dom(0), MoveRef::cod(0))]);
        assert!(strat(&proof("c")).pairs().is_empty());
    }

    #[test]
    fn rule_order_does_not_matter() {
        let seq = r#""forall x. P(x) |- forall y. exists z. Q(y, z)""#;
        let proofs = [
            format!("(proof {seq} (forall-R y (forall-L c (exists-R (f y) (ax)))))"),
            format!("(proof {seq} (forall-L c (forall-R y (exists-R (f y) (ax)))))"),
            format!("(proof {seq} (forall-R y (exists-R (f y) (forall-L c (ax)))))"),
        ];
        let s: Vec<Strategy> = proofs.iter().map(|p| strat(p)).collect();
        assert_eq!(s[0], s[1]);
        assert_eq!(s[1], s[2]);
        assert_eq!(s[0].pairs().iter().copied().collect::<Vec<_>>(), vec![(MoveRef::cod(0), MoveRef::cod(1))]);
    }

    #[test]
    fn checker_errors() {
        let ax = default_axiom_set();
        let ok = parse_proof(r#"(proof "P |- P" (ax P P))"#).unwrap();
        assert_eq!(check_proof(&ok, &ax).unwrap().to_string(), "P |- P");
        let bad = parse_proof(r#"(proof "P(x) |- forall x. P(x)" (forall-R x (ax)))"#).unwrap();
        assert!(matches!(check_proof(&bad, &ax), Err(ProofError::Freshness { .. })));
        let bad = parse_proof(r#"(proof "P |- Q" (ax))"#).unwrap();
        assert!(matches!(check_proof(&bad, &ax), Err(ProofError::Axiom { .. })));
        let bad = parse_proof(r#"(proof "P |- exists x. Q" (forall-L c (ax)))"#).unwrap();
        match check_proof(&bad, &ax) {
            Err(ProofError::Schema { path, .. }) => assert_eq!(path, "root"),
            other => panic!("{other:?}"),
        }
        let bad = parse_proof(r#"(proof "P(a) |- P(a, b)" (ax))"#).unwrap();
        assert!(matches!(check_proof(&bad, &AllAxioms), Err(ProofError::Arity { .. })));
        assert!(parse_proof("(proof \"P |- P\" (ax)").is_err());
        assert!(parse_proof("(proof \"P |- P\" (bogus))").is_err());
    }

    #[test]
    fn spec_style_file_parses() {
        let p = parse_proof(r#"(proof "exists x. P(x) |- exists z. Q(z)" (exists-L x (exists-R (f x) (ax "P(x)" "Q(f(x))"))))"#).unwrap();
        check_proof(&p, &AllAxioms).unwrap();
        let again = parse_proof(&p.to_string()).unwrap();
        assert_eq!(again, p);
    }

    #[test]
    fn witnesses_define_generators() {
        for name in generator_names() {
            let w = definability_witness(name).unwrap();
            assert!(!w.tree.has_cut());
            assert!(witness_defines(name, &default_axiom_set()).unwrap(), "{name}");
            assert_eq!(parse_proof(&w.to_string()).unwrap(), w, "{name}");
        }
        assert!(definability_witness("nope").is_err());
    }

    #[test]
    fn cut_reduces_to_its_cut_free_form() {
        let ax = EqualityAxioms;
        let direct = parse_proof(r#"(proof "top |- exists x. x = 0" (exists-R 0 (ax)))"#).unwrap();
        let with_cut = parse_proof(
            r#"(proof "top |- exists x. x = 0"
                 (cut "forall y. exists z. y = z"
                   (forall-R y (exists-R y (ax)))
                   (forall-L 0 (exists-L z (exists-R z (ax))))))"#,
        )
        .unwrap();
        assert_eq!(interp_proof(&with_cut, &ax).unwrap(), proof_to_strategy(&direct, &ax).unwrap());
        assert_eq!(proof_to_strategy(&with_cut, &ax), Err(ProofError::HasCut));
    }

    #[test]
    fn root_cut_is_composition() {
        let left = parse_proof(r#"(proof "exists x. exists y. x & y |- exists z. z" (exists-L x (exists-L y (exists-R "x & y" (ax)))))"#).unwrap();
        let right = parse_proof(r#"(proof "exists z. z |- exists y. exists w. y & w" (exists-L z (exists-R z (exists-R z (ax)))))"#).unwrap();
        let cut = Proof {
            conclusion: Sequent::new(left.conclusion.left.clone(), right.conclusion.right.clone()),
            tree: ProofTree::Cut {
                middle: left.conclusion.right.clone(),
                left: Box::new(left.tree.clone()),
                right: Box::new(right.tree.clone()),
            },
        };
        let ax = default_axiom_set();
        let composed = compose_strategies(proof_to_strategy(&left, &ax).unwrap().as_cyclic(), proof_to_strategy(&right, &ax).unwrap().as_cyclic()).unwrap();
        assert_eq!(interp_proof(&cut, &ax).unwrap().as_cyclic(), &composed);
    }
}
