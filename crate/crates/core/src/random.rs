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


//! Seeded generators for randomized sweeps. The seed comes from the
//! `CAUSAL_GAMES_SEED` environment variable when set.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::games::{CyclicStrategy, Game, MoveRef, Polarity, Strategy};
use crate::sigcat::{GeneratorDecl, ObjectWord, Term};
use crate::theories::rewrite::{CanonWord, Family, Letter, RewriteRule};
use crate::theories::{games_signature, UNIT_OBJECT};

pub const SEED_ENV: &str = "CAUSAL_GAMES_SEED";

/// The seed from the environment, or `default` when unset or unparsable.
pub fn seed_from_env(default: u64) -> u64 {
    std::env::var(SEED_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(default)
}

pub fn seeded_rng(default: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed_from_env(default))
}

const B_GENERATORS: [(&str, usize, usize); 5] = [("mu", 2, 1), ("eta", 0, 1), ("delta", 1, 2), ("eps", 1, 0), ("gamma", 2, 2)];

fn wires(n: usize) -> Term {
    Term::id(ObjectWord::repeat(UNIT_OBJECT, n))
}

/// A random bialgebra term with the given source arity and roughly `size`
/// generators, returned with its target arity.
pub fn random_b_term<R: Rng>(rng: &mut R, source: usize, size: usize) -> (Term, usize) {
    if size == 0 {
        return (wires(source), source);
    }
    if size >= 2 && source >= 2 && rng.gen_bool(0.25) {
        let split = rng.gen_range(1..source);
        let left = rng.gen_range(1..size);
        let (a, ta) = random_b_term(rng, split, left);
        let (b, tb) = random_b_term(rng, source - split, size - left);
        return (a.tensor(b), ta + tb);
    }
    let (g, gs, gt) = *B_GENERATORS
        .iter()
        .filter(|g| g.1 <= source)
        .collect::<Vec<_>>()
        .choose(rng)
        .expect("eta always fits");
    let left = rng.gen_range(0..=source - gs);
    let layer = Term::tensor_all([wires(left), Term::gen(g), wires(source - gs - left)]);
    let width = source - gs + gt;
    let (rest, target) = random_b_term(rng, width, size - 1);
    (layer.then(rest), target)
}

/// A random term over the generators of strategies from the object word
/// `source`, with about `size` generators, returned with its target word.
pub fn random_g_term<R: Rng>(rng: &mut R, source: &ObjectWord, size: usize) -> (Term, ObjectWord) {
    let sig = games_signature();
    let mut current = source.clone();
    let mut layers = Vec::new();
    for _ in 0..size {
        let mut fits: Vec<(usize, &GeneratorDecl)> = Vec::new();
        for g in sig.generators() {
            let n = g.source.len();
            for i in 0..=current.len().saturating_sub(n) {
                if i + n <= current.len() && current.slice(i, i + n) == g.source {
                    fits.push((i, g));
                }
            }
        }
        let &(i, g) = fits.choose(rng).expect("units always fit");
        let right = current.slice(i + g.source.len(), current.len());
        let left = current.slice(0, i);
        layers.push(Term::tensor_all([Term::id(left.clone()), Term::gen(&g.name), Term::id(right.clone())]));
        current = left.concat(&g.target).concat(&right);
    }
    (Term::compose_all(layers, source.clone()), current)
}

pub fn random_polarities<R: Rng>(rng: &mut R, max_len: usize) -> Vec<Polarity> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| if rng.gen_bool(0.5) { Polarity::O } else { Polarity::P }).collect()
}

pub fn random_filiform_game<R: Rng>(rng: &mut R, max_len: usize) -> Game {
    Game::filiform(&random_polarities(rng, max_len))
}

/// A random strategy: candidate `O → P` pairs are offered in random order
/// with probability `density` and kept when they preserve acyclicity.
pub fn random_strategy<R: Rng>(rng: &mut R, domain: &Game, codomain: &Game, density: f64) -> Strategy {
    let empty = CyclicStrategy::new(domain.clone(), codomain.clone(), []).expect("empty relation");
    let moves: Vec<MoveRef> = (0..domain.len())
        .map(MoveRef::dom)
        .chain((0..codomain.len()).map(MoveRef::cod))
        .collect();
    let mut candidates: Vec<(MoveRef, MoveRef)> = moves
        .iter()
        .flat_map(|&a| moves.iter().map(move |&b| (a, b)))
        .filter(|&(a, b)| empty.arrow_polarity(a) == Polarity::O && empty.arrow_polarity(b) == Polarity::P)
        .collect();
    candidates.shuffle(rng);
    let mut pairs = Vec::new();
    for c in candidates {
        if !rng.gen_bool(density) {
            continue;
        }
        pairs.push(c);
        let trial = CyclicStrategy::new(domain.clone(), codomain.clone(), pairs.iter().copied()).expect("polarity-correct pairs");
        if !trial.is_strategy() {
            pairs.pop();
        }
    }
    Strategy::new(domain.clone(), codomain.clone(), pairs).expect("acyclic by construction")
}

fn random_letter<R: Rng>(rng: &mut R, family: Family, max_index: usize, polarized: bool) -> Letter {
    let pol = |rng: &mut R| polarized.then(|| if rng.gen_bool(0.5) { Polarity::O } else { Polarity::P });
    match family {
        Family::H => Letter::H(pol(rng)),
        Family::E => Letter::E(pol(rng)),
        Family::W => Letter::W(rng.gen_range(0..=max_index)),
        Family::A => Letter::A(rng.gen_range(1..=max_index.max(1))),
        Family::B => Letter::B(rng.gen_range(1..=max_index.max(1))),
    }
}

/// A random word over the families of `rules` containing a redex of a
/// randomly chosen rule, with the redex position.
pub fn random_redex<R: Rng>(rng: &mut R, rules: &[RewriteRule], max_len: usize, polarized: bool) -> (CanonWord, usize, usize) {
    let mut families: Vec<Family> = rules.iter().flat_map(|r| r.lhs).collect();
    families.dedup();
    let which = rng.gen_range(0..rules.len());
    let rule = &rules[which];
    let (a, b) = loop {
        let a = random_letter(rng, rule.lhs[0], 6, polarized);
        let b = random_letter(rng, rule.lhs[1], 6, polarized);
        if rule.matches(a, b) {
            break (a, b);
        }
    };
    let extra = rng.gen_range(0..=max_len.saturating_sub(2));
    let pos = rng.gen_range(0..=extra);
    let mut letters: Vec<Letter> = (0..extra)
        .map(|_| {
            let f = *families.choose(rng).expect("non-empty rule set");
            random_letter(rng, f, 6, polarized)
        })
        .collect();
    letters.splice(pos..pos, [a, b]);
    (CanonWord::new(letters), pos, which)
}
