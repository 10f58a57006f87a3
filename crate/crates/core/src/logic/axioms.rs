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


//! Axiom sets: membership predicates on pairs of atomic propositions.

use std::collections::HashMap;

use super::syntax::{FoTerm, Prop, BOT, JOIN, MEET, TOP, UNARY};

pub trait AxiomSet: Send + Sync {
    fn name(&self) -> &str;
    fn contains(&self, p: &Prop, q: &Prop) -> bool;
}

/// Every pair of propositions.
#[derive(Debug, Clone, Copy, Default)]
pub struct AllAxioms;

impl AxiomSet for AllAxioms {
    fn name(&self) -> &str {
        "all"
    }

    fn contains(&self, _: &Prop, _: &Prop) -> bool {
        true
    }
}

/// The smallest reflexive, transitive set containing `(P, ⊤)`, `(⊥, P)` and
/// the meet/join rules, over propositions `I(t)` read as free-lattice terms.
#[derive(Debug, Clone, Copy, Default)]
pub struct LatticeAxioms;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Lat {
    Top,
    Bot,
    Meet(Box<Lat>, Box<Lat>),
    Join(Box<Lat>, Box<Lat>),
    Gen(FoTerm),
}

fn decode(t: &FoTerm) -> Lat {
    match t {
        FoTerm::App(f, args) if f == TOP && args.is_empty() => Lat::Top,
        FoTerm::App(f, args) if f == BOT && args.is_empty() => Lat::Bot,
        FoTerm::App(f, args) if f == MEET && args.len() == 2 => Lat::Meet(Box::new(decode(&args[0])), Box::new(decode(&args[1]))),
        FoTerm::App(f, args) if f == JOIN && args.len() == 2 => Lat::Join(Box::new(decode(&args[0])), Box::new(decode(&args[1]))),
        other => Lat::Gen(other.clone()),
    }
}

fn as_lattice(p: &Prop) -> Option<Lat> {
    match (p.name.as_str(), p.args.as_slice()) {
        (UNARY, [t]) => Some(decode(t)),
        _ => None,
    }
}

/// Whitman's decision procedure for the free lattice order.
fn leq(p: &Lat, q: &Lat, memo: &mut HashMap<(Lat, Lat), bool>) -> bool {
    if p == q || *p == Lat::Bot || *q == Lat::Top {
        return true;
    }
    let key = (p.clone(), q.clone());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let v = match (p, q) {
        (Lat::Join(a, b), _) => leq(a, q, memo) && leq(b, q, memo),
        (_, Lat::Meet(a, b)) => leq(p, a, memo) && leq(p, b, memo),
        _ => {
            let left = match p {
                Lat::Meet(a, b) => leq(a, q, memo) || leq(b, q, memo),
                _ => false,
            };
            left || match q {
                Lat::Join(a, b) => leq(p, a, memo) || leq(p, b, memo),
                _ => false,
            }
        }
    };
    memo.insert(key, v);
    v
}

impl AxiomSet for LatticeAxioms {
    fn name(&self) -> &str {
        "default"
    }

    fn contains(&self, p: &Prop, q: &Prop) -> bool {
        if p == q {
            return true;
        }
        match (as_lattice(p), as_lattice(q)) {
            (Some(a), Some(b)) => leq(&a, &b, &mut HashMap::new()),
            (Some(Lat::Bot), None) => true,
            (None, Some(Lat::Top)) => true,
            _ => false,
        }
    }
}

/// Reflexivity, `(⊤, t = t)` and symmetry of equality, plus the lattice set.
#[derive(Debug, Clone, Copy, Default)]
pub struct EqualityAxioms;

impl AxiomSet for EqualityAxioms {
    fn name(&self) -> &str {
        "equality"
    }

    fn contains(&self, p: &Prop, q: &Prop) -> bool {
        if LatticeAxioms.contains(p, q) {
            return true;
        }
        let is_eq = |r: &Prop| r.name == "=" && r.args.len() == 2;
        if is_eq(q) && q.args[0] == q.args[1] {
            return true;
        }
        is_eq(p) && is_eq(q) && p.args[0] == q.args[1] && p.args[1] == q.args[0]
    }
}

pub fn default_axiom_set() -> LatticeAxioms {
    LatticeAxioms
}

/// Looks up an axiom set by its CLI name.
pub fn axiom_set_by_name(name: &str) -> Option<Box<dyn AxiomSet>> {
    match name {
        "default" | "lattice" => Some(Box::new(LatticeAxioms)),
        "all" => Some(Box::new(AllAxioms)),
        "equality" => Some(Box::new(EqualityAxioms)),
        _ => None,
    }
}
