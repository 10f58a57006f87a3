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


//! Text renderings of terms and strategies: ASCII layer listings and
//! graph descriptions in the dot language.

use std::fmt::Write as _;

use crate::games::{CyclicStrategy, Game, MoveRef, Polarity, Side};
use crate::sigcat::{slices, typecheck, SigError, Signature, Term};

fn wire_line(word: &[char]) -> String {
    word.iter().map(char::to_string).collect::<Vec<_>>().join(" ")
}

/// One line per slice, with the wires carried at each stage.
pub fn term_ascii(t: &Term, sig: &Signature) -> Result<String, SigError> {
    let (source, target) = typecheck(t, sig)?;
    let mut out = String::new();
    let mut current = source.0.clone();
    let _ = writeln!(out, "{}", wire_line(&current));
    for s in slices(t, sig)? {
        let g = sig.generator(&s.generator).expect("typechecked generator");
        let right_start = current.len() - s.right;
        let mut row: Vec<String> = current[..s.left].iter().map(|_| "|".to_string()).collect();
        row.push(format!("[{}]", s.generator));
        row.extend(current[right_start..].iter().map(|_| "|".to_string()));
        let _ = writeln!(out, "{}", row.join(" "));
        let mut next = current[..s.left].to_vec();
        next.extend(g.target.0.iter());
        next.extend(&current[right_start..]);
        current = next;
        let _ = writeln!(out, "{}", wire_line(&current));
    }
    debug_assert_eq!(current, target.0);
    Ok(out)
}

/// Generators as boxes, wires as edges labelled by their object.
pub fn term_dot(t: &Term, sig: &Signature) -> Result<String, SigError> {
    let (source, target) = typecheck(t, sig)?;
    let mut out = String::from("digraph term {\n  rankdir=TB;\n");
    let mut current: Vec<(String, char)> = Vec::new();
    for (i, c) in source.0.iter().enumerate() {
        let _ = writeln!(out, "  in{i} [shape=point];");
        current.push((format!("in{i}"), *c));
    }
    for (k, s) in slices(t, sig)?.into_iter().enumerate() {
        let g = sig.generator(&s.generator).expect("typechecked generator");
        let node = format!("g{k}");
        let _ = writeln!(out, "  {node} [shape=box, label=\"{}\"];", s.generator);
        let right_start = current.len() - s.right;
        for (from, c) in &current[s.left..right_start] {
            let _ = writeln!(out, "  {from} -> {node} [label=\"{c}\"];");
        }
        let mut next = current[..s.left].to_vec();
        next.extend(g.target.0.iter().map(|&c| (node.clone(), c)));
        next.extend(current[right_start..].iter().cloned());
        current = next;
    }
    for (i, ((from, c), _)) in current.iter().zip(target.0.iter()).enumerate() {
        let _ = writeln!(out, "  out{i} [shape=point];");
        let _ = writeln!(out, "  {from} -> out{i} [label=\"{c}\"];");
    }
    out.push_str("}\n");
    Ok(out)
}

/// Covering pairs of a game's order.
fn covering(g: &Game) -> Vec<(usize, usize)> {
    g.order()
        .iter()
        .copied()
        .filter(|&(a, b)| !(0..g.len()).any(|c| g.lt(a, c) && g.lt(c, b)))
        .collect()
}

fn move_id(m: MoveRef) -> String {
    m.to_string()
}

/// Moves with their polarities, followed by the game orders and dependencies.
pub fn strategy_ascii(s: &CyclicStrategy) -> String {
    let mut out = String::new();
    for (label, side, game) in [("domain", Side::Dom, s.domain()), ("codomain", Side::Cod, s.codomain())] {
        let _ = writeln!(out, "{label}:");
        for i in 0..game.len() {
            let m = MoveRef { side, index: i };
            let arrow = match s.arrow_polarity(m) {
                Polarity::O => "O",
                Polarity::P => "P",
            };
            let _ = writeln!(out, "  {m}  {}  (in the arrow: {arrow})", game.polarity(i).as_char());
        }
        for (a, b) in covering(game) {
            let _ = writeln!(out, "  {} < {}", MoveRef { side, index: a }, MoveRef { side, index: b });
        }
    }
    let _ = writeln!(out, "dependencies:");
    for (a, b) in s.pairs() {
        let _ = writeln!(out, "  {a} -> {b}");
    }
    out
}

/// Game order dotted, strategy dependencies solid.
pub fn strategy_dot(s: &CyclicStrategy) -> String {
    let mut out = String::from("digraph strategy {\n  rankdir=TB;\n");
    for (side, game) in [(Side::Dom, s.domain()), (Side::Cod, s.codomain())] {
        let name = if side == Side::Dom { "domain" } else { "codomain" };
        let _ = writeln!(out, "  subgraph cluster_{name} {{\n    label=\"{name}\";");
        for i in 0..game.len() {
            let m = MoveRef { side, index: i };
            let _ = writeln!(out, "    {} [label=\"{m} {}\"];", move_id(m), game.polarity(i).as_char());
        }
        out.push_str("  }\n");
        for (a, b) in covering(game) {
            let _ = writeln!(out, "  {} -> {} [style=dotted];", move_id(MoveRef { side, index: a }), move_id(MoveRef { side, index: b }));
        }
    }
    for (a, b) in s.pairs() {
        let _ = writeln!(out, "  {} -> {};", move_id(*a), move_id(*b));
    }
    out.push_str("}\n");
    out
}
