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


//! First-order games with causality, and strategies between them.
//!
//! Moves are positional: a move of an arrow game `A ⊸ B` is a side (domain
//! or codomain) plus an index into that side.

use std::collections::BTreeSet;
use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

use crate::theories::{Model, ModelError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("move index {index} out of range for a game with {len} moves")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("game order has a cycle")]
    CyclicOrder,
    #[error("dependency {from} -> {to} does not go from an Opponent to a Proponent move")]
    Polarity { from: MoveRef, to: MoveRef },
    #[error("middle games differ: {left} vs {right}")]
    MiddleMismatch { left: String, right: String },
    #[error("relation is not acyclic against the game order")]
    NotAStrategy,
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("game is not filiform")]
    NotFiliform,
    #[error("bad polarity `{0}`")]
    BadPolarity(String),
    #[error("malformed JSON: {0}")]
    Json(String),
}

/// Opponent moves carry polarity −1, Proponent moves +1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Polarity {
    O,
    P,
}

impl Polarity {
    pub fn dual(self) -> Polarity {
        match self {
            Polarity::O => Polarity::P,
            Polarity::P => Polarity::O,
        }
    }

    pub fn sign(self) -> i8 {
        match self {
            Polarity::O => -1,
            Polarity::P => 1,
        }
    }

    pub fn from_char(c: char) -> Result<Polarity, GameError> {
        match c {
            'O' => Ok(Polarity::O),
            'P' => Ok(Polarity::P),
            other => Err(GameError::BadPolarity(other.to_string())),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Polarity::O => 'O',
            Polarity::P => 'P',
        }
    }
}

impl fmt::Display for Polarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A finite game: polarized moves and a strict causal order, stored
/// transitively closed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Game {
    polarities: Vec<Polarity>,
    order: BTreeSet<(usize, usize)>,
}

fn transitive_closure(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Vec<Vec<bool>> {
    let mut reach = vec![vec![false; n]; n];
    for (a, b) in pairs {
        reach[a][b] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                let row_k = reach[k].clone();
                for (cell, &r) in reach[i].iter_mut().zip(&row_k) {
                    *cell |= r;
                }
            }
        }
    }
    reach
}

impl Game {
    pub fn new(polarities: Vec<Polarity>, pairs: &[(usize, usize)]) -> Result<Game, GameError> {
        let n = polarities.len();
        for &(a, b) in pairs {
            for idx in [a, b] {
                if idx >= n {
                    return Err(GameError::IndexOutOfRange { index: idx, len: n });
                }
            }
        }
        let reach = transitive_closure(n, pairs.iter().copied());
        if (0..n).any(|i| reach[i][i]) {
            return Err(GameError::CyclicOrder);
        }
        let order = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| reach[i][j])
            .collect();
        Ok(Game { polarities, order })
    }

    pub fn empty() -> Game {
        Game::default()
    }

    /// Totally ordered game, earliest move first.
    pub fn filiform(polarities: &[Polarity]) -> Game {
        let n = polarities.len();
        Game {
            polarities: polarities.to_vec(),
            order: (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect(),
        }
    }

    /// Filiform game from a word such as `OPO`; `I` or the empty string is the
    /// empty game.
    pub fn from_word(word: &str) -> Result<Game, GameError> {
        let pols = word
            .chars()
            .filter(|&c| c != 'I')
            .map(Polarity::from_char)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Game::filiform(&pols))
    }

    pub fn len(&self) -> usize {
        self.polarities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polarities.is_empty()
    }

    pub fn polarity(&self, m: usize) -> Polarity {
        self.polarities[m]
    }

    pub fn polarities(&self) -> &[Polarity] {
        &self.polarities
    }

    /// Strict order pairs, transitively closed.
    pub fn order(&self) -> &BTreeSet<(usize, usize)> {
        &self.order
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.order.contains(&(a, b))
    }

    pub fn is_filiform(&self) -> bool {
        let n = self.len();
        self.order.len() == n * n.saturating_sub(1) / 2 && self.order.iter().all(|&(a, b)| a < b)
    }

    pub fn polarity_word(&self) -> String {
        self.polarities.iter().map(|p| p.as_char()).collect()
    }

    pub fn to_json_value(&self) -> Value {
        if self.is_filiform() {
            json!({ "polarity_word": self.polarity_word() })
        } else {
            let pols: Vec<i8> = self.polarities.iter().map(|p| p.sign()).collect();
            let pairs: Vec<[usize; 2]> = self.order.iter().map(|&(a, b)| [a, b]).collect();
            json!({ "moves": self.len(), "polarities": pols, "order_pairs": pairs })
        }
    }

    pub fn from_json_value(v: &Value) -> Result<Game, GameError> {
        let bad = |m: &str| GameError::Json(m.to_string());
        if let Some(w) = v.get("polarity_word") {
            return Game::from_word(w.as_str().ok_or_else(|| bad("polarity_word must be a string"))?);
        }
        let pols = v
            .get("polarities")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("expected polarity_word or polarities"))?
            .iter()
            .map(|p| match (p.as_i64(), p.as_str()) {
                (Some(-1), _) | (_, Some("O")) => Ok(Polarity::O),
                (Some(1), _) | (_, Some("P")) => Ok(Polarity::P),
                _ => Err(GameError::BadPolarity(p.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(n) = v.get("moves").and_then(Value::as_u64) {
            if n as usize != pols.len() {
                return Err(bad("moves does not match the number of polarities"));
            }
        }
        let pairs = match v.get("order_pairs") {
            None => Vec::new(),
            Some(ps) => ps
                .as_array()
                .ok_or_else(|| bad("order_pairs must be an array"))?
                .iter()
                .map(|p| {
                    let a = p.get(0).and_then(Value::as_u64);
                    let b = p.get(1).and_then(Value::as_u64);
                    match (a, b) {
                        (Some(a), Some(b)) => Ok((a as usize, b as usize)),
                        _ => Err(bad("order pair must be [i, j]")),
                    }
                })
                .collect::<Result<Vec<_>, _>>()?,
        };
        Game::new(pols, &pairs)
    }
}

impl fmt::Display for Game {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("I")
        } else if self.is_filiform() {
            f.write_str(&self.polarity_word())
        } else {
            write!(f, "{}{:?}", self.polarity_word(), self.order)
        }
    }
}

pub fn dual(a: &Game) -> Game {
    Game {
        polarities: a.polarities.iter().map(|p| p.dual()).collect(),
        order: a.order.clone(),
    }
}

/// Disjoint union with no causality between the two sides.
pub fn tensor_game(a: &Game, b: &Game) -> Game {
    let k = a.len();
    let mut polarities = a.polarities.clone();
    polarities.extend_from_slice(&b.polarities);
    let mut order = a.order.clone();
    order.extend(b.order.iter().map(|&(x, y)| (x + k, y + k)));
    Game { polarities, order }
}

/// Every move of `a` precedes every move of `b`.
pub fn before(a: &Game, b: &Game) -> Game {
    let k = a.len();
    let mut g = tensor_game(a, b);
    for i in 0..k {
        for j in 0..b.len() {
            g.order.insert((i, k + j));
        }
    }
    g
}

pub fn arrow(a: &Game, b: &Game) -> Game {
    tensor_game(&dual(a), b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Dom,
    Cod,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MoveRef {
    pub side: Side,
    pub index: usize,
}

impl MoveRef {
    pub fn dom(index: usize) -> MoveRef {
        MoveRef { side: Side::Dom, index }
    }

    pub fn cod(index: usize) -> MoveRef {
        MoveRef { side: Side::Cod, index }
    }
}

impl fmt::Display for MoveRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::Dom => write!(f, "d{}", self.index),
            Side::Cod => write!(f, "c{}", self.index),
        }
    }
}

/// A polarity-respecting dependency relation on `domain ⊸ codomain`,
/// possibly cyclic against the game order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicStrategy {
    domain: Game,
    codomain: Game,
    pairs: BTreeSet<(MoveRef, MoveRef)>,
}

impl CyclicStrategy {
    pub fn new(
        domain: Game,
        codomain: Game,
        pairs: impl IntoIterator<Item = (MoveRef, MoveRef)>,
    ) -> Result<CyclicStrategy, GameError> {
        let s = CyclicStrategy {
            domain,
            codomain,
            pairs: pairs.into_iter().collect(),
        };
        for &(from, to) in &s.pairs {
            s.check_range(from)?;
            s.check_range(to)?;
            if s.arrow_polarity(from) != Polarity::O || s.arrow_polarity(to) != Polarity::P {
                return Err(GameError::Polarity { from, to });
            }
        }
        Ok(s)
    }

    fn check_range(&self, m: MoveRef) -> Result<(), GameError> {
        let len = self.side_game(m.side).len();
        if m.index >= len {
            return Err(GameError::IndexOutOfRange { index: m.index, len });
        }
        Ok(())
    }

    pub fn domain(&self) -> &Game {
        &self.domain
    }

    pub fn codomain(&self) -> &Game {
        &self.codomain
    }

    pub fn side_game(&self, side: Side) -> &Game {
        match side {
            Side::Dom => &self.domain,
            Side::Cod => &self.codomain,
        }
    }

    pub fn pairs(&self) -> &BTreeSet<(MoveRef, MoveRef)> {
        &self.pairs
    }

    pub fn contains(&self, from: MoveRef, to: MoveRef) -> bool {
        self.pairs.contains(&(from, to))
    }

    /// Polarity of a move in the arrow game.
    pub fn arrow_polarity(&self, m: MoveRef) -> Polarity {
        match m.side {
            Side::Dom => self.domain.polarity(m.index).dual(),
            Side::Cod => self.codomain.polarity(m.index),
        }
    }

    pub fn arrow_index(&self, m: MoveRef) -> usize {
        match m.side {
            Side::Dom => m.index,
            Side::Cod => self.domain.len() + m.index,
        }
    }

    pub fn arrow_game(&self) -> Game {
        arrow(&self.domain, &self.codomain)
    }

    /// True iff the dependencies together with the arrow-game order have no
    /// directed cycle.
    pub fn is_strategy(&self) -> bool {
        let g = self.arrow_game();
        let n = g.len();
        let edges = g
            .order()
            .iter()
            .copied()
            .chain(self.pairs.iter().map(|&(a, b)| (self.arrow_index(a), self.arrow_index(b))));
        let reach = transitive_closure(n, edges);
        (0..n).all(|i| !reach[i][i])
    }

    pub fn into_strategy(self) -> Result<Strategy, GameError> {
        if self.is_strategy() {
            Ok(Strategy(self))
        } else {
            Err(GameError::NotAStrategy)
        }
    }

    pub fn to_json_value(&self) -> Value {
        let side = |s: Side| match s {
            Side::Dom => "dom",
            Side::Cod => "cod",
        };
        let pairs: Vec<Value> = self
            .pairs
            .iter()
            .map(|(a, b)| json!([[side(a.side), a.index], [side(b.side), b.index]]))
            .collect();
        json!({
            "domain": self.domain.to_json_value(),
            "codomain": self.codomain.to_json_value(),
            "pairs": pairs,
        })
    }

    pub fn from_json_value(v: &Value) -> Result<CyclicStrategy, GameError> {
        let bad = |m: &str| GameError::Json(m.to_string());
        let domain = Game::from_json_value(v.get("domain").ok_or_else(|| bad("missing domain"))?)?;
        let codomain = Game::from_json_value(v.get("codomain").ok_or_else(|| bad("missing codomain"))?)?;
        let mv = |m: &Value| -> Result<MoveRef, GameError> {
            let side = match m.get(0).and_then(Value::as_str) {
                Some("dom") => Side::Dom,
                Some("cod") => Side::Cod,
                _ => return Err(bad("side must be \"dom\" or \"cod\"")),
            };
            let index = m.get(1).and_then(Value::as_u64).ok_or_else(|| bad("move index must be a number"))?;
            Ok(MoveRef { side, index: index as usize })
        };
        let pairs = match v.get("pairs") {
            None => Vec::new(),
            Some(ps) => ps
                .as_array()
                .ok_or_else(|| bad("pairs must be an array"))?
                .iter()
                .map(|p| Ok((mv(&p[0])?, mv(&p[1])?)))
                .collect::<Result<Vec<_>, GameError>>()?,
        };
        CyclicStrategy::new(domain, codomain, pairs)
    }
}

impl fmt::Display for CyclicStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} {{", self.domain, self.codomain)?;
        for (i, (a, b)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}<{b}")?;
        }
        f.write_str("}")
    }
}

/// A cyclic strategy that is acyclic against its arrow game.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Strategy(CyclicStrategy);

impl Strategy {
    pub fn new(
        domain: Game,
        codomain: Game,
        pairs: impl IntoIterator<Item = (MoveRef, MoveRef)>,
    ) -> Result<Strategy, GameError> {
        CyclicStrategy::new(domain, codomain, pairs)?.into_strategy()
    }

    pub fn as_cyclic(&self) -> &CyclicStrategy {
        &self.0
    }

    pub fn into_cyclic(self) -> CyclicStrategy {
        self.0
    }

    pub fn domain(&self) -> &Game {
        self.0.domain()
    }

    pub fn codomain(&self) -> &Game {
        self.0.codomain()
    }

    pub fn pairs(&self) -> &BTreeSet<(MoveRef, MoveRef)> {
        self.0.pairs()
    }

    pub fn contains(&self, from: MoveRef, to: MoveRef) -> bool {
        self.0.contains(from, to)
    }

    /// `self` followed by `next`, upgraded to a strategy.
    pub fn then(&self, next: &Strategy) -> Result<Strategy, GameError> {
        compose_strategies(&self.0, &next.0)?.into_strategy()
    }

    pub fn to_json_value(&self) -> Value {
        self.0.to_json_value()
    }

    pub fn from_json_value(v: &Value) -> Result<Strategy, GameError> {
        CyclicStrategy::from_json_value(v)?.into_strategy()
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn is_strategy(c: &CyclicStrategy) -> bool {
    c.is_strategy()
}

pub fn id_strategy(a: &Game) -> Strategy {
    let pairs = (0..a.len()).map(|i| match a.polarity(i) {
        Polarity::P => (MoveRef::dom(i), MoveRef::cod(i)),
        Polarity::O => (MoveRef::cod(i), MoveRef::dom(i)),
    });
    Strategy::new(a.clone(), a.clone(), pairs).expect("identity is a strategy")
}

/// Transitive closure of the union of both relations over `A ⊎ B ⊎ C`,
/// restricted to `A ⊎ C`.
pub fn compose_strategies(first: &CyclicStrategy, second: &CyclicStrategy) -> Result<CyclicStrategy, GameError> {
    if first.codomain != second.domain {
        return Err(GameError::MiddleMismatch {
            left: first.codomain.to_string(),
            right: second.domain.to_string(),
        });
    }
    let (na, nb, nc) = (first.domain.len(), first.codomain.len(), second.codomain.len());
    let node = |part: usize, i: usize| match part {
        0 => i,
        1 => na + i,
        _ => na + nb + i,
    };
    let n = na + nb + nc;
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in &first.pairs {
        let f = |m: MoveRef| node(if m.side == Side::Dom { 0 } else { 1 }, m.index);
        adj[f(a)].push(f(b));
    }
    for &(a, b) in &second.pairs {
        let f = |m: MoveRef| node(if m.side == Side::Dom { 1 } else { 2 }, m.index);
        adj[f(a)].push(f(b));
    }
    let outer = |v: usize| -> Option<MoveRef> {
        if v < na {
            Some(MoveRef::dom(v))
        } else if v >= na + nb {
            Some(MoveRef::cod(v - na - nb))
        } else {
            None
        }
    };
    let mut pairs = BTreeSet::new();
    for start in (0..n).filter(|&v| outer(v).is_some()) {
        let mut seen = vec![false; n];
        let mut stack = adj[start].clone();
        while let Some(v) = stack.pop() {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            if let (Some(a), Some(b)) = (outer(start), outer(v)) {
                pairs.insert((a, b));
            }
            stack.extend(adj[v].iter().copied());
        }
    }
    CyclicStrategy::new(first.domain.clone(), second.codomain.clone(), pairs)
}

fn shift_pairs(
    pairs: &BTreeSet<(MoveRef, MoveRef)>,
    dom_shift: usize,
    cod_shift: usize,
) -> impl Iterator<Item = (MoveRef, MoveRef)> + '_ {
    let sh = move |m: MoveRef| match m.side {
        Side::Dom => MoveRef::dom(m.index + dom_shift),
        Side::Cod => MoveRef::cod(m.index + cod_shift),
    };
    pairs.iter().map(move |&(a, b)| (sh(a), sh(b)))
}

/// `σ ◁ τ : A ◁ C → B ◁ D`, the disjoint union of dependencies.
pub fn before_strategies(first: &Strategy, second: &Strategy) -> Strategy {
    let pairs: Vec<_> = shift_pairs(first.pairs(), 0, 0)
        .chain(shift_pairs(second.pairs(), first.domain().len(), first.codomain().len()))
        .collect();
    Strategy::new(
        before(first.domain(), second.domain()),
        before(first.codomain(), second.codomain()),
        pairs,
    )
    .expect("serial composition of strategies is a strategy")
}

type GeneratorTable = (&'static str, &'static str, &'static str, &'static [(Side, usize, Side, usize)]);

use Side::{Cod as C, Dom as D};

const GENERATORS: [GeneratorTable; 13] = [
    ("muO", "OO", "O", &[(C, 0, D, 0), (C, 0, D, 1)]),
    ("muP", "PP", "P", &[(D, 0, C, 0), (D, 1, C, 0)]),
    ("etaO", "", "O", &[]),
    ("etaP", "", "P", &[]),
    ("deltaO", "O", "OO", &[(C, 0, D, 0), (C, 1, D, 0)]),
    ("deltaP", "P", "PP", &[(D, 0, C, 0), (D, 0, C, 1)]),
    ("epsO", "O", "", &[]),
    ("epsP", "P", "", &[]),
    ("gammaO", "OO", "OO", &[(C, 1, D, 0), (C, 0, D, 1)]),
    ("gammaP", "PP", "PP", &[(D, 0, C, 1), (D, 1, C, 0)]),
    ("etaOP", "", "OP", &[(C, 0, C, 1)]),
    ("epsOP", "PO", "", &[(D, 0, D, 1)]),
    ("gammaOP", "PO", "OP", &[(D, 0, C, 1), (C, 0, D, 1)]),
];

/// Names of the thirteen generators, in table order.
pub fn generator_names() -> impl Iterator<Item = &'static str> {
    GENERATORS.iter().map(|g| g.0)
}

pub fn generator_strategy(name: &str) -> Result<Strategy, GameError> {
    let (_, src, tgt, pairs) = GENERATORS
        .iter()
        .find(|g| g.0 == name)
        .ok_or_else(|| GameError::UnknownGenerator(name.to_string()))?;
    Strategy::new(
        Game::from_word(src)?,
        Game::from_word(tgt)?,
        pairs
            .iter()
            .map(|&(s1, i, s2, j)| (MoveRef { side: s1, index: i }, MoveRef { side: s2, index: j })),
    )
}

/// Filiform games under serial composition, with the thirteen generator
/// strategies.
#[derive(Debug, Clone, Copy, Default)]
pub struct GamesModel;

impl Model for GamesModel {
    type Object = Game;
    type Morphism = Strategy;

    fn name(&self) -> String {
        "Games".to_string()
    }

    fn object(&self, letter: char) -> Result<Game, ModelError> {
        Polarity::from_char(letter)
            .map(|p| Game::filiform(&[p]))
            .map_err(|_| ModelError::UnknownObject(letter))
    }

    fn unit(&self) -> Game {
        Game::empty()
    }

    fn tensor_objects(&self, a: &Game, b: &Game) -> Game {
        before(a, b)
    }

    fn identity(&self, a: &Game) -> Strategy {
        id_strategy(a)
    }

    fn generator(&self, name: &str) -> Result<Strategy, ModelError> {
        generator_strategy(name).map_err(|_| ModelError::UnknownGenerator(name.to_string()))
    }

    fn compose(&self, first: &Strategy, second: &Strategy) -> Result<Strategy, ModelError> {
        first.then(second).map_err(|e| ModelError::Composition(e.to_string()))
    }

    fn tensor(&self, top: &Strategy, bottom: &Strategy) -> Strategy {
        before_strategies(top, bottom)
    }

    fn equal(&self, a: &Strategy, b: &Strategy) -> bool {
        a == b
    }
}
