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

//! Monoidal equational theories as data, and model checking against
//! arbitrary strict monoidal categories.

mod model;
pub mod rewrite;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use model::{check_model, evaluate, Model, ModelError, ModelReport, RelationCheck};

use crate::sigcat::{parse_term, print_term, typecheck, ObjectWord, SigError, Signature, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoryError {
    #[error("unknown theory `{0}` (expected one of M, B, R, D, G)")]
    UnknownTheory(String),
    #[error("relation `{name}` is ill-typed: {source}")]
    IllTyped { name: String, source: SigError },
    #[error("relation `{name}` has sides of different types")]
    SidesDiffer { name: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoryName {
    /// Monoids.
    M,
    /// Bicommutative bialgebras.
    B,
    /// Qualitative bicommutative bialgebras.
    R,
    /// Dual objects.
    D,
    /// Strategies on first-order games.
    G,
}

impl FromStr for TheoryName {
    type Err = TheoryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "M" => Ok(TheoryName::M),
            "B" => Ok(TheoryName::B),
            "R" => Ok(TheoryName::R),
            "D" => Ok(TheoryName::D),
            "G" => Ok(TheoryName::G),
            other => Err(TheoryError::UnknownTheory(other.to_string())),
        }
    }
}

impl fmt::Display for TheoryName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TheoryName::M => "M",
            TheoryName::B => "B",
            TheoryName::R => "R",
            TheoryName::D => "D",
            TheoryName::G => "G",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub name: String,
    pub lhs: Term,
    pub rhs: Term,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationalTheory {
    pub name: String,
    pub signature: Signature,
    pub relations: Vec<Relation>,
}

impl EquationalTheory {
    /// Builds a theory and checks that both sides of every relation have the
    /// same source and target.
    pub fn new(name: &str, signature: Signature, relations: Vec<Relation>) -> Result<Self, TheoryError> {
        for r in &relations {
            let l = typecheck(&r.lhs, &signature).map_err(|source| TheoryError::IllTyped {
                name: r.name.clone(),
                source,
            })?;
            let rt = typecheck(&r.rhs, &signature).map_err(|source| TheoryError::IllTyped {
                name: r.name.clone(),
                source,
            })?;
            if l != rt {
                return Err(TheoryError::SidesDiffer { name: r.name.clone() });
            }
        }
        Ok(EquationalTheory {
            name: name.to_string(),
            signature,
            relations,
        })
    }

    pub fn relation(&self, name: &str) -> Option<&Relation> {
        self.relations.iter().find(|r| r.name == name)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let relations: Vec<serde_json::Value> = self
            .relations
            .iter()
            .map(|r| {
                serde_json::json!({
                    "name": r.name,
                    "lhs": print_term(&r.lhs, &self.signature),
                    "rhs": print_term(&r.rhs, &self.signature),
                })
            })
            .collect();
        serde_json::json!({
            "name": self.name,
            "signature": self.signature.to_json_value(),
            "relations": relations,
        })
    }
}

/// The object letter used by single-object theories.
pub const UNIT_OBJECT: char = 'x';

pub fn bialgebra_signature() -> Signature {
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
    .expect("bialgebra signature is valid")
}

const MONOID_RELATIONS: [(&str, &str, &str); 3] = [
    ("mu-assoc", "(mu * id(1)) ; mu", "(id(1) * mu) ; mu"),
    ("mu-unit-left", "(eta * id(1)) ; mu", "id(1)"),
    ("mu-unit-right", "(id(1) * eta) ; mu", "id(1)"),
];

const BIALGEBRA_RELATIONS: [(&str, &str, &str); 22] = [
    (
        "yang-baxter",
        "(gamma * id(1)) ; (id(1) * gamma) ; (gamma * id(1))",
        "(id(1) * gamma) ; (gamma * id(1)) ; (id(1) * gamma)",
    ),
    ("sym-involutive", "gamma ; gamma", "id(2)"),
    MONOID_RELATIONS[0],
    MONOID_RELATIONS[1],
    MONOID_RELATIONS[2],
    (
        "mu-sym-nat-left",
        "(mu * id(1)) ; gamma",
        "(id(1) * gamma) ; (gamma * id(1)) ; (id(1) * mu)",
    ),
    (
        "mu-sym-nat-right",
        "(id(1) * mu) ; gamma",
        "(gamma * id(1)) ; (id(1) * gamma) ; (mu * id(1))",
    ),
    ("eta-sym-nat-left", "(eta * id(1)) ; gamma", "id(1) * eta"),
    ("eta-sym-nat-right", "(id(1) * eta) ; gamma", "eta * id(1)"),
    ("mu-comm", "gamma ; mu", "mu"),
    ("delta-coassoc", "delta ; (delta * id(1))", "delta ; (id(1) * delta)"),
    ("delta-counit-left", "delta ; (eps * id(1))", "id(1)"),
    ("delta-counit-right", "delta ; (id(1) * eps)", "id(1)"),
    (
        "delta-sym-nat-left",
        "gamma ; (delta * id(1))",
        "(id(1) * delta) ; (gamma * id(1)) ; (id(1) * gamma)",
    ),
    (
        "delta-sym-nat-right",
        "gamma ; (id(1) * delta)",
        "(delta * id(1)) ; (id(1) * gamma) ; (gamma * id(1))",
    ),
    ("eps-sym-nat-left", "gamma ; (eps * id(1))", "id(1) * eps"),
    ("eps-sym-nat-right", "gamma ; (id(1) * eps)", "eps * id(1)"),
    ("delta-cocomm", "delta ; gamma", "delta"),
    (
        "bialg-mu-delta",
        "mu ; delta",
        "(delta * delta) ; (id(1) * gamma * id(1)) ; (mu * mu)",
    ),
    ("bialg-eta-eps", "eta ; eps", "id(0)"),
    ("bialg-mu-eps", "mu ; eps", "eps * eps"),
    ("bialg-eta-delta", "eta ; delta", "eta * eta"),
];

const QUALITATIVE_RELATION: (&str, &str, &str) = ("qualitative", "delta ; mu", "id(1)");

fn relations_from(sig: &Signature, table: &[(&str, &str, &str)]) -> Vec<Relation> {
    table
        .iter()
        .map(|(name, l, r)| Relation {
            name: name.to_string(),
            lhs: parse_term(l, sig).expect("builtin relation parses"),
            rhs: parse_term(r, sig).expect("builtin relation parses"),
        })
        .collect()
}

fn theory_m() -> EquationalTheory {
    let sig = Signature::from_triples("x", &[("mu", "xx", "x"), ("eta", "", "x")]).expect("valid");
    let rels = relations_from(&sig, &MONOID_RELATIONS);
    EquationalTheory::new("M", sig, rels).expect("M is well-typed")
}

fn theory_b() -> EquationalTheory {
    let sig = bialgebra_signature();
    let rels = relations_from(&sig, &BIALGEBRA_RELATIONS);
    EquationalTheory::new("B", sig, rels).expect("B is well-typed")
}

fn theory_r() -> EquationalTheory {
    let sig = bialgebra_signature();
    let mut rels = relations_from(&sig, &BIALGEBRA_RELATIONS);
    rels.extend(relations_from(&sig, &[QUALITATIVE_RELATION]));
    EquationalTheory::new("R", sig, rels).expect("R is well-typed")
}

fn theory_d() -> EquationalTheory {
    let sig = Signature::from_triples("LR", &[("eta", "", "RL"), ("eps", "LR", "")]).expect("valid");
    let rels = relations_from(
        &sig,
        &[
            ("zigzag-left", "(id(L) * eta) ; (eps * id(L))", "id(L)"),
            ("zigzag-right", "(eta * id(R)) ; (id(R) * eps)", "id(R)"),
        ],
    );
    EquationalTheory::new("D", sig, rels).expect("D is well-typed")
}

/// Names of the thirteen generators of the theory of strategies.
pub const GAMES_GENERATORS: [&str; 13] = [
    "muO", "muP", "etaO", "etaP", "deltaO", "deltaP", "epsO", "epsP", "gammaO", "gammaP", "etaOP",
    "epsOP", "gammaOP",
];

pub fn games_signature() -> Signature {
    Signature::from_triples(
        "OP",
        &[
            ("muO", "OO", "O"),
            ("muP", "PP", "P"),
            ("etaO", "", "O"),
            ("etaP", "", "P"),
            ("deltaO", "O", "OO"),
            ("deltaP", "P", "PP"),
            ("epsO", "O", ""),
            ("epsP", "P", ""),
            ("gammaO", "OO", "OO"),
            ("gammaP", "PP", "PP"),
            ("etaOP", "", "OP"),
            ("epsOP", "PO", ""),
            ("gammaOP", "PO", "OP"),
        ],
    )
    .expect("games signature is valid")
}

fn word(s: &str) -> ObjectWord {
    ObjectWord::from(s)
}

fn id(s: &str) -> Term {
    Term::id(word(s))
}

fn pw(c: char, n: usize) -> String {
    std::iter::repeat_n(c, n).collect()
}

/// Nested duality units `I → O^k P^k`.
fn nested_units(k: usize) -> Term {
    let mut t = id("");
    for j in 0..k {
        let step = id(&pw('O', j)).tensor(Term::gen("etaOP")).tensor(id(&pw('P', j)));
        t = if j == 0 { Term::gen("etaOP") } else { t.then(step) };
    }
    t
}

/// Nested duality counits `P^k O^k → I`.
fn nested_counits(k: usize) -> Term {
    let mut t = id("");
    for j in 0..k {
        t = if j == 0 {
            Term::gen("epsOP")
        } else {
            id(&pw('P', j)).tensor(Term::gen("epsOP")).tensor(id(&pw('O', j))).then(t)
        };
    }
    t
}

/// Transpose of `f: O^a → O^b` along the duality, giving `P^b → P^a`.
pub fn opponent_mate(f: Term, a: usize, b: usize) -> Term {
    id(&pw('P', b))
        .tensor(nested_units(a))
        .then(id(&pw('P', b)).tensor(f).tensor(id(&pw('P', a))))
        .then(nested_counits(b).tensor(id(&pw('P', a))))
}

/// The six equations deriving the Proponent structure from the Opponent one.
pub fn duality_relations() -> Vec<Relation> {
    let rel = |name: &str, lhs: Term, rhs: Term| Relation {
        name: name.to_string(),
        lhs,
        rhs,
    };
    vec![
        rel("muP-mate", Term::gen("muP"), opponent_mate(Term::gen("deltaO"), 1, 2)),
        rel("deltaP-mate", Term::gen("deltaP"), opponent_mate(Term::gen("muO"), 2, 1)),
        rel("etaP-mate", Term::gen("etaP"), opponent_mate(Term::gen("epsO"), 1, 0)),
        rel("epsP-mate", Term::gen("epsP"), opponent_mate(Term::gen("etaO"), 0, 1)),
        rel("gammaP-mate", Term::gen("gammaP"), opponent_mate(Term::gen("gammaO"), 2, 2)),
        rel(
            "gammaOP-mate",
            Term::gen("gammaOP"),
            id("PO")
                .tensor(Term::gen("etaOP"))
                .then(id("P").tensor(Term::gen("gammaO")).tensor(id("P")))
                .then(Term::gen("epsOP").tensor(id("OP"))),
        ),
    ]
}

/// Transport a relation of the single-object bialgebra theory onto the object
/// `polarity` of the games signature.
pub fn polarize(r: &Relation, polarity: char) -> Relation {
    let rename = |t: &Term| {
        t.rename(
            &|g: &str| format!("{g}{polarity}"),
            &|c: char| if c == UNIT_OBJECT { polarity } else { c },
        )
    };
    Relation {
        name: format!("{}-{}", r.name, polarity),
        lhs: rename(&r.lhs),
        rhs: rename(&r.rhs),
    }
}

fn theory_g() -> EquationalTheory {
    let sig = games_signature();
    let mut rels: Vec<Relation> = theory_r().relations.iter().map(|r| polarize(r, 'O')).collect();
    rels.extend(relations_from(
        &sig,
        &[
            ("zigzag-P", "(id(P) * etaOP) ; (epsOP * id(P))", "id(P)"),
            ("zigzag-O", "(etaOP * id(O)) ; (id(O) * epsOP)", "id(O)"),
        ],
    ));
    rels.extend(duality_relations());
    EquationalTheory::new("G", sig, rels).expect("G is well-typed")
}

pub fn builtin_theory(name: TheoryName) -> EquationalTheory {
    match name {
        TheoryName::M => theory_m(),
        TheoryName::B => theory_b(),
        TheoryName::R => theory_r(),
        TheoryName::D => theory_d(),
        TheoryName::G => theory_g(),
    }
}

/// Consequences of the theory of strategies that are not axioms: the
/// Proponent bialgebra, polarized Yang–Baxter, naturality of the mixed
/// crossing, and sliding of structure maps along the duality.
pub fn derived_games_equations() -> Vec<Relation> {
    let sig = games_signature();
    let mut out: Vec<Relation> = theory_r().relations.iter().map(|r| polarize(r, 'P')).collect();
    let cross = |x: char, y: char| -> Term {
        match (x, y) {
            ('O', 'O') => Term::gen("gammaO"),
            ('P', 'P') => Term::gen("gammaP"),
            ('P', 'O') => Term::gen("gammaOP"),
            _ => unreachable!("O cannot cross below P"),
        }
    };
    for (x, y, z) in [('O', 'O', 'O'), ('P', 'O', 'O'), ('P', 'P', 'O'), ('P', 'P', 'P')] {
        let (xs, ys, zs) = (x.to_string(), y.to_string(), z.to_string());
        let lhs = cross(x, y)
            .tensor(id(&zs))
            .then(id(&ys).tensor(cross(x, z)))
            .then(cross(y, z).tensor(id(&xs)));
        let rhs = id(&xs)
            .tensor(cross(y, z))
            .then(cross(x, z).tensor(id(&ys)))
            .then(id(&zs).tensor(cross(x, y)));
        out.push(Relation {
            name: format!("yang-baxter-{x}{y}{z}"),
            lhs,
            rhs,
        });
    }
    out.extend(relations_from(
        &sig,
        &[
            (
                "muP-cross-nat",
                "(muP * id(O)) ; gammaOP",
                "(id(P) * gammaOP) ; (gammaOP * id(P)) ; (id(O) * muP)",
            ),
            (
                "muO-cross-nat",
                "(id(P) * muO) ; gammaOP",
                "(gammaOP * id(O)) ; (id(O) * gammaOP) ; (muO * id(P))",
            ),
            (
                "deltaP-cross-nat",
                "gammaOP ; (id(O) * deltaP)",
                "(deltaP * id(O)) ; (id(P) * gammaOP) ; (gammaOP * id(P))",
            ),
            (
                "deltaO-cross-nat",
                "gammaOP ; (deltaO * id(P))",
                "(id(P) * deltaO) ; (gammaOP * id(O)) ; (id(O) * gammaOP)",
            ),
            ("etaP-cross-nat", "(etaP * id(O)) ; gammaOP", "id(O) * etaP"),
            ("etaO-cross-nat", "(id(P) * etaO) ; gammaOP", "etaO * id(P)"),
            ("epsP-cross-nat", "gammaOP ; (id(O) * epsP)", "epsP * id(O)"),
            ("epsO-cross-nat", "gammaOP ; (epsO * id(P))", "id(P) * epsO"),
            (
                "counit-slide-muO",
                "(id(P) * muO) ; epsOP",
                "(deltaP * id(OO)) ; (id(P) * epsOP * id(O)) ; epsOP",
            ),
            (
                "counit-slide-muP",
                "(muP * id(O)) ; epsOP",
                "(id(PP) * deltaO) ; (id(P) * epsOP * id(O)) ; epsOP",
            ),
            ("counit-slide-etaO", "(id(P) * etaO) ; epsOP", "epsP"),
            ("counit-slide-etaP", "(etaP * id(O)) ; epsOP", "epsO"),
            (
                "unit-slide-deltaO",
                "etaOP ; (deltaO * id(P))",
                "etaOP ; (id(O) * etaOP * id(P)) ; (id(OO) * muP)",
            ),
            (
                "unit-slide-deltaP",
                "etaOP ; (id(O) * deltaP)",
                "etaOP ; (id(O) * etaOP * id(P)) ; (muO * id(PP))",
            ),
            ("unit-slide-epsO", "etaOP ; (epsO * id(P))", "etaP"),
            ("unit-slide-epsP", "etaOP ; (id(O) * epsP)", "etaO"),
        ],
    ));
    for r in &out {
        let l = typecheck(&r.lhs, &sig).expect("derived equation typechecks");
        assert_eq!(l, typecheck(&r.rhs, &sig).expect("derived equation typechecks"), "{}", r.name);
    }
    out
}
