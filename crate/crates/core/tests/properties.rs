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


//! Property tests for the invariants of each module.

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use causal_games::games::{before_strategies, compose_strategies, id_strategy, GamesModel, Polarity, Strategy};
use causal_games::gamespres::{canon_to_strategy, enumerate_words_g, normalize_g, strategy_to_canon};
use causal_games::logic::syntax::{BOT, JOIN, MEET, TOP};
use causal_games::logic::{check_proof, default_axiom_set, interp_proof, parse_formula, proof_to_strategy, AllAxioms, AxiomSet, FoTerm, Formula, Proof, ProofTree, Prop, Sequent};
use causal_games::multirel::{canonicalize_b, compose, enumerate_words_b, interp_b, is_canonical_b, is_canonical_r, matrix_to_canon, rel_to_canon, word_to_matrix, word_to_rel, BoolRel, MRelModel, MultiRel};
use causal_games::random::{random_b_term, random_filiform_game, random_g_term, random_redex, random_strategy};
use causal_games::sigcat::{parse_term, print_term, size, slices, slices_to_term, typecheck, ObjectWord};
use causal_games::theories::rewrite::{games_measure, rewrite_at, rewrite_to_normal, rules_b, rules_g, rules_r, termination_measure};
use causal_games::theories::{bialgebra_signature, evaluate, games_signature};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_matrix(r: &mut ChaCha8Rng, max: u64) -> MultiRel {
    let (m, n) = (r.gen_range(0..4), r.gen_range(0..4));
    let mut out = MultiRel::zero(m, n);
    for a in 0..m {
        for b in 0..n {
            out.set(a, b, r.gen_range(0..=max));
        }
    }
    out
}

fn random_triple(r: &mut ChaCha8Rng) -> (Strategy, Strategy, Strategy) {
    let games: Vec<_> = (0..4).map(|_| random_filiform_game(r, 4)).collect();
    let d = [r.gen_range(0.1..0.9), r.gen_range(0.1..0.9), r.gen_range(0.1..0.9)];
    (
        random_strategy(r, &games[0], &games[1], d[0]),
        random_strategy(r, &games[1], &games[2], d[1]),
        random_strategy(r, &games[2], &games[3], d[2]),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn term_size_and_slices(seed in any::<u64>()) {
        let mut r = rng(seed);
        let sig = bialgebra_signature();
        let (n, a, b) = (r.gen_range(0..4), r.gen_range(0..6), r.gen_range(0..6));
        let (f, m) = random_b_term(&mut r, n, a);
        let (g, _) = random_b_term(&mut r, m, b);
        prop_assert_eq!(size(&f.clone().then(g.clone())), size(&f) + size(&g));
        prop_assert_eq!(size(&f.clone().tensor(g.clone())), size(&f) + size(&g));
        let fg = f.then(g);
        let sl = slices(&fg, &sig).unwrap();
        prop_assert_eq!(sl.len(), size(&fg));
        let (src, _) = typecheck(&fg, &sig).unwrap();
        let flat = slices_to_term(&sl, &src, &sig).unwrap();
        prop_assert_eq!(evaluate(&MRelModel, &flat).unwrap(), interp_b(&fg).unwrap());
        prop_assert_eq!(parse_term(&print_term(&fg, &sig), &sig).unwrap(), fg);
    }

    #[test]
    fn games_terms_print_and_parse(seed in any::<u64>()) {
        let mut r = rng(seed);
        let sig = games_signature();
        let src = ObjectWord(random_filiform_game(&mut r, 3).polarity_word().chars().collect());
        let n = r.gen_range(0..6);
        let (t, _) = random_g_term(&mut r, &src, n);
        prop_assert_eq!(parse_term(&print_term(&t, &sig), &sig).unwrap(), t);
    }

    #[test]
    fn rewrite_steps_decrease_the_measure(seed in any::<u64>()) {
        let mut r = rng(seed);
        for (rules, polarized) in [(rules_b(), false), (rules_r(), false), (rules_g(), true)] {
            let (w, pos, which) = random_redex(&mut r, &rules, 10, polarized);
            let after = rewrite_at(&rules[which], &w, pos);
            if polarized {
                prop_assert!(games_measure(&after) < games_measure(&w));
            } else {
                prop_assert!(termination_measure(&after) < termination_measure(&w));
            }
            let normal = rewrite_to_normal(&rules, &w);
            prop_assert_eq!(rewrite_to_normal(&rules, &normal), normal);
        }
    }

    #[test]
    fn canonicalization_routes_agree(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (n, k) = (r.gen_range(0..4), r.gen_range(0..8));
        let (t, _) = random_b_term(&mut r, n, k);
        let w = canonicalize_b(&t).unwrap();
        prop_assert!(is_canonical_b(&w));
        prop_assert_eq!(w, matrix_to_canon(&interp_b(&t).unwrap()));
    }

    #[test]
    fn composite_cardinality_counts_spans(seed in any::<u64>()) {
        let mut r = rng(seed);
        let first = random_matrix(&mut r, 2);
        let mut second = MultiRel::zero(first.cols(), r.gen_range(0..4));
        for b in 0..second.rows() {
            for c in 0..second.cols() {
                second.set(b, c, r.gen_range(0..3));
            }
        }
        // Enumerate the elements of both multisets and count the matching pairs.
        let elems = |m: &MultiRel| -> Vec<(usize, usize)> {
            let mut v = Vec::new();
            for a in 0..m.rows() {
                for b in 0..m.cols() {
                    v.extend(std::iter::repeat_n((a, b), m.get(a, b) as usize));
                }
            }
            v
        };
        let spans = elems(&first).iter().flat_map(|&(_, b)| elems(&second).into_iter().filter(move |&(b2, _)| b2 == b)).count();
        prop_assert_eq!(compose(&first, &second).unwrap().cardinality(), spans as u64);
    }

    #[test]
    fn multirel_composition_is_associative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_matrix(&mut r, 2);
        let mk = |r: &mut ChaCha8Rng, m: usize| {
            let n = r.gen_range(0..4);
            let mut x = MultiRel::zero(m, n);
            for i in 0..m { for j in 0..n { x.set(i, j, r.gen_range(0..3)); } }
            x
        };
        let b = mk(&mut r, a.cols());
        let c = mk(&mut r, b.cols());
        let left = compose(&compose(&a, &b).unwrap(), &c).unwrap();
        let right = compose(&a, &compose(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn strategy_pairs_run_from_opponent_to_proponent(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (s, t, _) = random_triple(&mut r);
        for x in [&s, &t] {
            for &(a, b) in x.pairs() {
                prop_assert_eq!(x.as_cyclic().arrow_polarity(a), Polarity::O);
                prop_assert_eq!(x.as_cyclic().arrow_polarity(b), Polarity::P);
            }
        }
        prop_assert!(before_strategies(&s, &t).as_cyclic().is_strategy());
    }

    #[test]
    fn composition_is_associative_and_unital(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (s, t, u) = random_triple(&mut r);
        let st = compose_strategies(s.as_cyclic(), t.as_cyclic()).unwrap();
        let tu = compose_strategies(t.as_cyclic(), u.as_cyclic()).unwrap();
        prop_assert_eq!(compose_strategies(&st, u.as_cyclic()).unwrap(), compose_strategies(s.as_cyclic(), &tu).unwrap());
        prop_assert_eq!(&compose_strategies(id_strategy(s.domain()).as_cyclic(), s.as_cyclic()).unwrap(), s.as_cyclic());
        prop_assert_eq!(&compose_strategies(s.as_cyclic(), id_strategy(s.codomain()).as_cyclic()).unwrap(), s.as_cyclic());
    }

    #[test]
    fn strategies_round_trip_through_words(seed in any::<u64>()) {
        let mut r = rng(seed);
        let total = r.gen_range(0..=8);
        let split = r.gen_range(0..=total);
        let a = causal_games::games::Game::filiform(&(0..split).map(|_| if r.gen_bool(0.5) { Polarity::O } else { Polarity::P }).collect::<Vec<_>>());
        let b = causal_games::games::Game::filiform(&(0..total - split).map(|_| if r.gen_bool(0.5) { Polarity::O } else { Polarity::P }).collect::<Vec<_>>());
        let density = r.gen_range(0.0..1.0);
        let s = random_strategy(&mut r, &a, &b, density);
        prop_assert_eq!(canon_to_strategy(&strategy_to_canon(&s).unwrap()).unwrap(), s);
    }

    #[test]
    fn presentation_composition_agrees(seed in any::<u64>()) {
        let mut r = rng(seed);
        let src = ObjectWord(random_filiform_game(&mut r, 3).polarity_word().chars().collect());
        let (nf, ng) = (r.gen_range(0..5), r.gen_range(0..5));
        let (f, mid) = random_g_term(&mut r, &src, nf);
        let (g, _) = random_g_term(&mut r, &mid, ng);
        let (ef, eg) = (evaluate(&GamesModel, &f).unwrap(), evaluate(&GamesModel, &g).unwrap());
        let direct = compose_strategies(ef.as_cyclic(), eg.as_cyclic()).unwrap().into_strategy().unwrap();
        prop_assert_eq!(normalize_g(&f.then(g)).unwrap(), strategy_to_canon(&direct).unwrap());
    }

    #[test]
    fn formulas_print_and_parse(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = random_formula(&mut r, 4);
        prop_assert_eq!(parse_formula(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn lattice_axioms_are_a_preorder(seed in any::<u64>()) {
        let mut r = rng(seed);
        let ax = default_axiom_set();
        let [p, q, s] = [0, 1, 2].map(|_| Prop::unary(random_lattice_term(&mut r, 3)));
        prop_assert!(ax.contains(&p, &p));
        if ax.contains(&p, &q) && ax.contains(&q, &s) {
            prop_assert!(ax.contains(&p, &s));
        }
        let t = random_lattice_term(&mut r, 2);
        let sub = |x: &Prop| Formula::Atom(x.clone()).subst("x", &t).as_atom().cloned().unwrap();
        if ax.contains(&p, &q) {
            prop_assert!(ax.contains(&sub(&p), &sub(&q)));
        }
    }

    #[test]
    fn random_proofs_give_strategies(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_prefix(&mut r, 3, "P");
        let b = random_prefix(&mut r, 3, "Q");
        let proof = random_proof(&mut r, Sequent::new(a, b));
        check_proof(&proof, &AllAxioms).unwrap();
        let s = proof_to_strategy(&proof, &AllAxioms).unwrap();
        for &(x, y) in s.pairs() {
            prop_assert_eq!(s.as_cyclic().arrow_polarity(x), Polarity::O);
            prop_assert_eq!(s.as_cyclic().arrow_polarity(y), Polarity::P);
        }
    }

    #[test]
    fn cuts_compose(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_prefix(&mut r, 3, "P");
        let m = random_prefix(&mut r, 3, "M");
        let b = random_prefix(&mut r, 3, "Q");
        let left = random_proof(&mut r, Sequent::new(a.clone(), m.clone()));
        let right = random_proof(&mut r, Sequent::new(m.clone(), b.clone()));
        let cut = Proof {
            conclusion: Sequent::new(a, b),
            tree: ProofTree::Cut { middle: m, left: Box::new(left.tree.clone()), right: Box::new(right.tree.clone()) },
        };
        let whole = interp_proof(&cut, &AllAxioms).unwrap();
        prop_assert!(whole.as_cyclic().is_strategy());
        let (sl, sr) = (proof_to_strategy(&left, &AllAxioms).unwrap(), proof_to_strategy(&right, &AllAxioms).unwrap());
        prop_assert_eq!(whole.as_cyclic(), &compose_strategies(sl.as_cyclic(), sr.as_cyclic()).unwrap());
    }
}

fn random_lattice_term(r: &mut ChaCha8Rng, depth: usize) -> FoTerm {
    if depth == 0 || r.gen_bool(0.3) {
        return match r.gen_range(0..5) {
            0 => FoTerm::constant(TOP),
            1 => FoTerm::constant(BOT),
            2 => FoTerm::var("y"),
            3 => FoTerm::var("z"),
            _ => FoTerm::var("x"),
        };
    }
    let op = if r.gen_bool(0.5) { MEET } else { JOIN };
    FoTerm::app(op, vec![random_lattice_term(r, depth - 1), random_lattice_term(r, depth - 1)])
}

fn random_formula(r: &mut ChaCha8Rng, depth: usize) -> Formula {
    if depth == 0 || r.gen_bool(0.25) {
        let vars = ["x", "y", "u"];
        let args = (0..r.gen_range(0..3)).map(|_| FoTerm::var(vars[r.gen_range(0..3)])).collect();
        return Formula::Atom(Prop::new("R", args));
    }
    let x = ["x", "y", "u"][r.gen_range(0..3)];
    let body = random_formula(r, depth - 1);
    if r.gen_bool(0.5) { Formula::forall(x, body) } else { Formula::exists(x, body) }
}

/// A quantifier prefix over an atom mentioning every bound variable.
fn random_prefix(r: &mut ChaCha8Rng, max: usize, atom: &str) -> Formula {
    let n = r.gen_range(0..=max);
    let names: Vec<String> = (0..n).map(|i| format!("b{i}")).collect();
    let mut f = Formula::Atom(Prop::new(atom, names.iter().map(|v| FoTerm::var(v)).collect()));
    for v in names.iter().rev() {
        f = if r.gen_bool(0.5) { Formula::forall(v, f) } else { Formula::exists(v, f) };
    }
    f
}

/// A cut-free proof built from the root by random rule choices, with
/// witnesses drawn from the eigenvariables introduced so far.
fn random_proof(r: &mut ChaCha8Rng, conclusion: Sequent) -> Proof {
    fn go(r: &mut ChaCha8Rng, seq: &Sequent, eigen: &mut Vec<String>, counter: &mut usize) -> ProofTree {
        let left = matches!(seq.left, Formula::Quant(..));
        let right = matches!(seq.right, Formula::Quant(..));
        if !left && !right {
            return ProofTree::Ax { props: None };
        }
        let on_left = left && (!right || r.gen_bool(0.5));
        let side = if on_left { &seq.left } else { &seq.right };
        let Formula::Quant(q, _, body) = side else { unreachable!() };
        let universal = *q == causal_games::logic::Quantifier::Forall;
        // forall-L and exists-R take witnesses; forall-R and exists-L bind.
        let binds = universal != on_left;
        let (next_side, tree_of): (Formula, Box<dyn FnOnce(ProofTree) -> ProofTree>) = if binds {
            *counter += 1;
            let v = format!("e{counter}");
            eigen.push(v.clone());
            let next = Formula::instantiate(body, &FoTerm::var(&v));
            (next, if on_left { Box::new(move |p| ProofTree::ExistsL { var: v, premise: Box::new(p) }) } else { Box::new(move |p| ProofTree::ForallR { var: v, premise: Box::new(p) }) })
        } else {
            let args: Vec<FoTerm> = eigen.iter().filter(|_| r.gen_bool(0.4)).map(|v| FoTerm::var(v)).collect();
            let t = FoTerm::app(&format!("f{}", args.len()), args);
            let next = Formula::instantiate(body, &t);
            (next, if on_left { Box::new(move |p| ProofTree::ForallL { witness: t, premise: Box::new(p) }) } else { Box::new(move |p| ProofTree::ExistsR { witness: t, premise: Box::new(p) }) })
        };
        let next = if on_left { Sequent::new(next_side, seq.right.clone()) } else { Sequent::new(seq.left.clone(), next_side) };
        let premise = go(r, &next, eigen, counter);
        tree_of(premise)
    }
    let tree = go(r, &conclusion, &mut Vec::new(), &mut 0);
    Proof { conclusion, tree }
}

#[test]
fn b_rewriting_preserves_matrices() {
    let rules = rules_b();
    for w in enumerate_words_b(7) {
        let normal = rewrite_to_normal(&rules, &w);
        assert_eq!(word_to_matrix(&normal).unwrap(), word_to_matrix(&w).unwrap(), "{w}");
    }
}

#[test]
fn games_rules_preserve_strategies() {
    let rules = rules_g();
    for w in enumerate_words_g(6, false) {
        let Ok(s) = canon_to_strategy(&w) else { continue };
        for p in 0..w.len().saturating_sub(1) {
            for rule in rules.iter().filter(|rule| rule.matches(w.letters[p], w.letters[p + 1])) {
                assert_eq!(canon_to_strategy(&rewrite_at(rule, &w, p)).unwrap(), s, "{} at {p} of {w}", rule.name);
            }
        }
    }
}

#[test]
fn rel_words_biject_with_boolean_matrices() {
    let mut seen = BTreeSet::new();
    for m in 0..=3 {
        for n in 0..=3 {
            for code in 0u32..(1 << (m * n)) {
                let rows: Vec<Vec<bool>> = (0..m).map(|a| (0..n).map(|b| code >> (a * n + b) & 1 == 1).collect()).collect();
                let rel = BoolRel::from_rows(&rows, n).unwrap();
                let w = rel_to_canon(&rel);
                assert!(is_canonical_r(&w), "{w}");
                assert_eq!(word_to_rel(&w).unwrap(), rel);
                assert!(seen.insert(w.to_string()));
            }
        }
    }
    for w in enumerate_words_b(8).into_iter().filter(is_canonical_r) {
        assert_eq!(rel_to_canon(&word_to_rel(&w).unwrap()), w);
    }
}

#[test]
fn axiom_queries_are_thread_safe() {
    let ax = default_axiom_set();
    let mut r = rng(5);
    let pairs: Vec<(Prop, Prop)> = (0..200).map(|_| (Prop::unary(random_lattice_term(&mut r, 3)), Prop::unary(random_lattice_term(&mut r, 3)))).collect();
    let serial: Vec<bool> = pairs.iter().map(|(p, q)| ax.contains(p, q)).collect();
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..4).map(|_| s.spawn(|| pairs.iter().map(|(p, q)| ax.contains(p, q)).collect::<Vec<bool>>())).collect();
        for h in handles {
            assert_eq!(h.join().unwrap(), serial);
        }
    });
}
