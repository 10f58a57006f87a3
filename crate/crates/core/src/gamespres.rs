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


//! Canonical words presenting strategies between filiform games.
//!
//! Letters read from the right starting at `Z`, the empty strategy on `I`:
//!
//! ```text
//! HX   new first codomain move of polarity X
//! EX   new first domain move of polarity X
//! Wi   link the first domain move with codomain move i (same polarity;
//!      domain to codomain for P, codomain to domain for O)
//! Ai   first domain move (P) justifies domain move i (O)
//! Bi   first codomain move (O) justifies codomain move i (P)
//! ```

use std::collections::BTreeSet;

use thiserror::Error;

use crate::games::{Game, GameError, GamesModel, MoveRef, Polarity, Side, Strategy};
use crate::sigcat::{ObjectWord, SigError, Term};
use crate::theories::rewrite::{is_normal, rewrite_to_normal, rules_g, CanonWord, Letter, RewriteRule, WordError};
use crate::theories::{evaluate, games_signature, ModelError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Game(#[from] GameError),
    #[error(transparent)]
    Term(#[from] SigError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("strategy has a dependency {0} -> {1} outside the canonical letters")]
    Uncovered(MoveRef, MoveRef),
    #[error("an Opponent wire would have to cross below a Proponent wire")]
    Crossing,
}

pub fn games_rules() -> Vec<RewriteRule> {
    rules_g()
}

/// Domain and codomain polarity words of a word, checking that each letter
/// is well-typed and polarity-legal.
pub fn word_type_g(w: &CanonWord) -> Result<(Vec<Polarity>, Vec<Polarity>), WordError> {
    let mut dom: Vec<Polarity> = Vec::new();
    let mut cod: Vec<Polarity> = Vec::new();
    for l in w.letters.iter().rev() {
        check_letter(*l, &dom, &cod)?;
        match *l {
            Letter::H(Some(p)) => cod.insert(0, p),
            Letter::E(Some(p)) => dom.insert(0, p),
            _ => {}
        }
    }
    Ok((dom, cod))
}

/// Whether `l` may be put in front of a word of type `dom → cod`.
fn check_letter(l: Letter, dom: &[Polarity], cod: &[Polarity]) -> Result<(), WordError> {
    let ok = match l {
        Letter::H(p) | Letter::E(p) => p.is_some(),
        Letter::W(i) => !dom.is_empty() && i < cod.len() && dom[0] == cod[i],
        Letter::A(i) => i >= 1 && i < dom.len() && dom[0] == Polarity::P && dom[i] == Polarity::O,
        Letter::B(i) => i >= 1 && i < cod.len() && cod[0] == Polarity::O && cod[i] == Polarity::P,
    };
    if ok {
        Ok(())
    } else {
        Err(WordError::IllTyped(format!("letter {l} cannot act on {} -> {}", word(dom), word(cod))))
    }
}

fn word(p: &[Polarity]) -> String {
    if p.is_empty() {
        "I".into()
    } else {
        p.iter().map(|x| x.as_char()).collect()
    }
}

/// The dependency relation denoted by a word.
pub fn canon_to_strategy(w: &CanonWord) -> Result<Strategy, PresError> {
    let (dom, cod) = word_type_g(w)?;
    // moves are numbered in creation order; the newest one is the first move
    let (mut nd, mut nc) = (0usize, 0usize);
    let mut edges: Vec<(Side, usize, Side, usize)> = Vec::new();
    for l in w.letters.iter().rev() {
        match *l {
            Letter::H(_) => nc += 1,
            Letter::E(_) => nd += 1,
            Letter::W(i) => {
                let (d, c) = (nd - 1, nc - 1 - i);
                let pol = dom[dom.len() - nd];
                if pol == Polarity::P {
                    edges.push((Side::Dom, d, Side::Cod, c));
                } else {
                    edges.push((Side::Cod, c, Side::Dom, d));
                }
            }
            Letter::A(i) => edges.push((Side::Dom, nd - 1, Side::Dom, nd - 1 - i)),
            Letter::B(i) => edges.push((Side::Cod, nc - 1, Side::Cod, nc - 1 - i)),
        }
    }
    let pos = |side: Side, id: usize| match side {
        Side::Dom => MoveRef::dom(nd - 1 - id),
        Side::Cod => MoveRef::cod(nc - 1 - id),
    };
    let pairs = edges.into_iter().map(|(s1, a, s2, b)| (pos(s1, a), pos(s2, b)));
    Ok(Strategy::new(Game::filiform(&dom), Game::filiform(&cod), pairs)?)
}

/// The canonical word of a strategy between filiform games: domain moves in
/// order, each with its codomain links then its domain links (largest index
/// first) then `E`; afterwards codomain moves with their links then `H`.
pub fn strategy_to_canon(s: &Strategy) -> Result<CanonWord, PresError> {
    if !s.domain().is_filiform() || !s.codomain().is_filiform() {
        return Err(GameError::NotFiliform.into());
    }
    let (dom, cod) = (s.domain().polarities(), s.codomain().polarities());
    let mut letters = Vec::new();
    let mut used = 0usize;
    for d in 0..dom.len() {
        let here = MoveRef::dom(d);
        for c in (0..cod.len()).rev() {
            let there = MoveRef::cod(c);
            if s.contains(here, there) || s.contains(there, here) {
                letters.push(Letter::W(c));
                used += 1;
            }
        }
        for k in (d + 1..dom.len()).rev() {
            if s.contains(here, MoveRef::dom(k)) {
                letters.push(Letter::A(k - d));
                used += 1;
            }
        }
        letters.push(Letter::E(Some(dom[d])));
    }
    for c in 0..cod.len() {
        for k in (c + 1..cod.len()).rev() {
            if s.contains(MoveRef::cod(c), MoveRef::cod(k)) {
                letters.push(Letter::B(k - c));
                used += 1;
            }
        }
        letters.push(Letter::H(Some(cod[c])));
    }
    if used != s.pairs().len() {
        let missing = s
            .pairs()
            .iter()
            .find(|(a, b)| match (a.side, b.side) {
                (Side::Dom, Side::Dom) => a.index >= b.index,
                (Side::Cod, Side::Cod) => a.index >= b.index,
                _ => false,
            })
            .copied()
            .unwrap_or_else(|| *s.pairs().iter().next().expect("nonempty"));
        return Err(PresError::Uncovered(missing.0, missing.1));
    }
    Ok(CanonWord::new(letters))
}

/// True iff the word is well-typed, polarity-legal, normal for the games
/// rules, and denotes an acyclic strategy.
pub fn validate_canon_g(w: &CanonWord) -> bool {
    word_type_g(w).is_ok() && is_normal(&rules_g(), w) && canon_to_strategy(w).is_ok()
}

/// Semantic normalization: evaluate in the games model, then extract.
pub fn normalize_g(t: &Term) -> Result<CanonWord, PresError> {
    crate::sigcat::typecheck(t, &games_signature())?;
    let s = evaluate(&GamesModel, t)?;
    strategy_to_canon(&s)
}

fn ow(p: &[Polarity]) -> ObjectWord {
    ObjectWord(p.iter().map(|x| x.as_char()).collect())
}

fn idw(p: &[Polarity]) -> Term {
    Term::id(ow(p))
}

fn suffix(p: Polarity) -> &'static str {
    match p {
        Polarity::O => "O",
        Polarity::P => "P",
    }
}

fn polar(name: &str, p: Polarity) -> Term {
    Term::gen(&format!("{name}{}", suffix(p)))
}

/// Composite of the non-identity parts, or the identity on `source`.
fn seq(parts: Vec<Term>, source: &[Polarity]) -> Term {
    let parts: Vec<Term> = parts.into_iter().filter(|t| !matches!(t, Term::Identity(_))).collect();
    Term::compose_all(parts, ow(source))
}

/// `id(left) ⊗ t ⊗ id(right)`, omitting empty identities.
fn whisker(left: &[Polarity], t: Term, right: &[Polarity]) -> Term {
    let mut out = t;
    if !left.is_empty() {
        out = idw(left).tensor(out);
    }
    if !right.is_empty() {
        out = out.tensor(idw(right));
    }
    out
}

fn crossing(top: Polarity, other: Polarity) -> Result<Term, PresError> {
    match (top, other) {
        (Polarity::O, Polarity::O) => Ok(Term::gen("gammaO")),
        (Polarity::P, Polarity::P) => Ok(Term::gen("gammaP")),
        (Polarity::P, Polarity::O) => Ok(Term::gen("gammaOP")),
        (Polarity::O, Polarity::P) => Err(PresError::Crossing),
    }
}

/// Moves a wire of polarity `x` from the top past `wires`: `x·wires → wires·x`.
fn stairs(x: Polarity, wires: &[Polarity]) -> Result<Term, PresError> {
    let mut parts = Vec::with_capacity(wires.len());
    for j in 0..wires.len() {
        parts.push(whisker(&wires[..j], crossing(x, wires[j])?, &wires[j + 1..]));
    }
    let mut source = vec![x];
    source.extend_from_slice(wires);
    Ok(seq(parts, &source))
}

fn tensor_all(parts: Vec<Term>) -> Term {
    if parts.is_empty() {
        Term::id(ObjectWord::unit())
    } else {
        Term::tensor_all(parts)
    }
}

struct Layout {
    dom: Vec<Polarity>,
    cod: Vec<Polarity>,
    /// Last domain row linking each codomain move, if any.
    last_row: Vec<Option<usize>>,
}

impl Layout {
    /// Codomain moves present below row `r`: Opponent moves and Proponent
    /// moves linked from row `r` or later.
    fn kept(&self, r: usize) -> Vec<usize> {
        (0..self.cod.len())
            .filter(|&c| self.cod[c] == Polarity::O || self.last_row[c].is_some_and(|k| k >= r))
            .collect()
    }

    fn kept_word(&self, r: usize) -> Vec<Polarity> {
        self.kept(r).iter().map(|&c| self.cod[c]).collect()
    }
}

/// Units for the Proponent moves of `kept(r)` missing from `kept(r + 1)`.
fn insertion(lay: &Layout, r: usize) -> Term {
    let below = lay.kept(r + 1);
    tensor_all(
        lay.kept(r)
            .into_iter()
            .map(|c| if below.contains(&c) { idw(&[lay.cod[c]]) } else { Term::gen("etaP") })
            .collect(),
    )
}

/// Term for the domain rows `r..`, of type `dom[r..] → kept(r)`.
fn rows_term(rows: &[Vec<Letter>], r: usize, lay: &Layout) -> Result<Term, PresError> {
    if r == rows.len() {
        return Ok(tensor_all(lay.kept_word(r).iter().map(|&p| polar("eta", p)).collect()));
    }
    let dom = &lay.dom[r..];
    let x = dom[0];
    let rest = &dom[1..];
    let kept_ids = lay.kept(r);
    let kept = lay.kept_word(r);
    let mut phi = polar("eps", x).tensor(rows_term(rows, r + 1, lay)?);
    if lay.kept(r + 1).len() != kept.len() {
        phi = seq(vec![phi, insertion(lay, r)], dom);
    }
    for l in rows[r].iter().rev() {
        phi = match *l {
            Letter::E(_) => continue,
            Letter::W(c) => {
                let i = kept_ids.iter().position(|&k| k == c).expect("linked codomain moves are kept");
                seq(
                    vec![
                        whisker(&[], polar("delta", x), rest),
                        whisker(&[x], phi, &[]),
                        whisker(&[], stairs(x, &kept[..i])?, &kept[i..]),
                        whisker(&kept[..i], polar("mu", x), &kept[i + 1..]),
                    ],
                    dom,
                )
            }
            Letter::A(k) => seq(
                vec![
                    whisker(&[], Term::gen("deltaP"), rest),
                    whisker(&[], stairs(Polarity::P, &dom[..k])?, &dom[k..]),
                    whisker(&dom[..k], idw(&[Polarity::P]).tensor(Term::gen("deltaO")), &dom[k + 1..]),
                    whisker(&dom[..k], Term::gen("epsOP").tensor(idw(&[Polarity::O])), &dom[k + 1..]),
                    phi,
                ],
                dom,
            ),
            other => unreachable!("row letter {other}"),
        };
    }
    Ok(phi)
}

/// Adds the dependency `cod[k] → cod[j]` on top of an endomorphism of `cod`.
fn codomain_link(cod: &[Polarity], k: usize, j: usize) -> Result<Term, PresError> {
    let (o, p) = (Polarity::O, Polarity::P);
    let mut with_pair: Vec<Polarity> = cod[..k].to_vec();
    with_pair.extend([o, p]);
    with_pair.extend_from_slice(&cod[k..]);
    let mut moved: Vec<Polarity> = cod[..k].to_vec();
    moved.push(o);
    moved.extend_from_slice(&cod[k..j]);
    moved.push(p);
    moved.extend_from_slice(&cod[j..]);
    Ok(seq(
        vec![
            whisker(&cod[..k], Term::gen("etaOP"), &cod[k..]),
            whisker(&with_pair[..k + 1], stairs(p, &cod[k..j])?, &cod[j..]),
            whisker(&cod[..k], Term::gen("muO"), &moved[k + 2..]),
            whisker(&cod[..j], Term::gen("muP"), &cod[j + 1..]),
        ],
        cod,
    ))
}

/// Expands a word into a term over the games signature with the same
/// strategy: domain rows onto the linked part of the codomain, then units for
/// the remaining Proponent moves, then codomain-internal links.
pub fn canon_to_term_g(w: &CanonWord) -> Result<Term, PresError> {
    canon_to_strategy(w)?;
    let w = rewrite_to_normal(&rules_g(), w);
    let (dom, cod) = word_type_g(&w)?;
    let mut rows: Vec<Vec<Letter>> = vec![Vec::new()];
    let mut tail: Vec<Letter> = Vec::new();
    for &l in &w.letters {
        match l {
            Letter::W(_) | Letter::A(_) => rows.last_mut().expect("row").push(l),
            Letter::E(_) => {
                rows.last_mut().expect("row").push(l);
                rows.push(Vec::new());
            }
            Letter::B(_) | Letter::H(_) => tail.push(l),
        }
    }
    rows.pop();
    let mut last_row = vec![None; cod.len()];
    for (r, row) in rows.iter().enumerate() {
        for l in row {
            if let Letter::W(i) = l {
                if cod[*i] == Polarity::P {
                    last_row[*i] = Some(r);
                }
            }
        }
    }
    let lay = Layout {
        dom: dom.clone(),
        cod: cod.clone(),
        last_row,
    };
    let mut parts = vec![rows_term(&rows, 0, &lay)?];
    if rows.is_empty() {
        parts.clear();
        parts.push(tensor_all(cod.iter().map(|&p| polar("eta", p)).collect()));
    } else if lay.kept(0).len() != cod.len() {
        let top: Vec<usize> = lay.kept(0);
        parts.push(tensor_all(
            (0..cod.len())
                .map(|c| if top.contains(&c) { idw(&[cod[c]]) } else { Term::gen("etaP") })
                .collect(),
        ));
    }
    let mut c = 0usize;
    for l in &tail {
        match *l {
            Letter::B(i) => parts.push(codomain_link(&cod, c, c + i)?),
            Letter::H(_) => c += 1,
            _ => unreachable!("tail letter"),
        }
    }
    Ok(seq(parts, &dom))
}

/// Every well-typed, polarity-legal word with at most `max_len` letters; with
/// `normal_only`, only those to which no games rule applies.
pub fn enumerate_words_g(max_len: usize, normal_only: bool) -> Vec<CanonWord> {
    let rules = rules_g();
    let mut out = Vec::new();
    let mut stack: Vec<Letter> = Vec::new();
    fn go(
        stack: &mut Vec<Letter>,
        dom: &mut Vec<Polarity>,
        cod: &mut Vec<Polarity>,
        max_len: usize,
        normal_only: bool,
        rules: &[RewriteRule],
        out: &mut Vec<CanonWord>,
    ) {
        out.push(CanonWord::new(stack.iter().rev().copied().collect()));
        if stack.len() == max_len {
            return;
        }
        let mut candidates = Vec::new();
        for p in [Polarity::O, Polarity::P] {
            candidates.push(Letter::H(Some(p)));
            candidates.push(Letter::E(Some(p)));
        }
        for i in 0..cod.len() {
            candidates.push(Letter::W(i));
            candidates.push(Letter::B(i));
        }
        for i in 0..dom.len() {
            candidates.push(Letter::A(i));
        }
        for l in candidates {
            if check_letter(l, dom, cod).is_err() {
                continue;
            }
            if normal_only {
                if let Some(&head) = stack.last() {
                    if rules.iter().any(|r| r.matches(l, head)) {
                        continue;
                    }
                }
            }
            match l {
                Letter::H(Some(p)) => cod.insert(0, p),
                Letter::E(Some(p)) => dom.insert(0, p),
                _ => {}
            }
            stack.push(l);
            go(stack, dom, cod, max_len, normal_only, rules, out);
            stack.pop();
            match l {
                Letter::H(_) => {
                    cod.remove(0);
                }
                Letter::E(_) => {
                    dom.remove(0);
                }
                _ => {}
            }
        }
    }
    go(&mut stack, &mut Vec::new(), &mut Vec::new(), max_len, normal_only, &rules, &mut out);
    out
}

/// Dependencies of a strategy as a sorted set, for comparisons in tests.
pub fn dependency_set(s: &Strategy) -> BTreeSet<(MoveRef, MoveRef)> {
    s.pairs().clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games::{generator_strategy, id_strategy};
    use crate::sigcat::parse_term;
    use crate::theories::rewrite::rewrite_at;
    use crate::theories::{builtin_theory, TheoryName};

    fn w(s: &str) -> CanonWord {
        s.parse().unwrap()
    }

    fn g(s: &str) -> Game {
        Game::from_word(s).unwrap()
    }

    #[test]
    fn identity_words() {
        assert!(canon_to_strategy(&w("Z")).unwrap().pairs().is_empty());
        assert_eq!(canon_to_strategy(&w("W0 EP HP Z")).unwrap(), id_strategy(&g("P")));
        assert_eq!(canon_to_strategy(&w("W0 EO HO Z")).unwrap(), id_strategy(&g("O")));
        assert_eq!(strategy_to_canon(&id_strategy(&g("P"))).unwrap(), w("W0 EP HP Z"));
        assert_eq!(strategy_to_canon(&Strategy::new(Game::empty(), Game::empty(), []).unwrap()).unwrap(), w("Z"));
    }

    #[test]
    fn polarity_violations() {
        assert!(canon_to_strategy(&w("W0 EO HP Z")).is_err());
        assert!(canon_to_strategy(&w("A1 EO EO Z")).is_err());
        assert!(canon_to_strategy(&w("W3 EP HP Z")).is_err());
    }

    #[test]
    fn generators_round_trip() {
        for name in crate::theories::GAMES_GENERATORS {
            let s = generator_strategy(name).unwrap();
            let word = strategy_to_canon(&s).unwrap();
            assert!(validate_canon_g(&word), "{name}: {word}");
            assert_eq!(canon_to_strategy(&word).unwrap(), s, "{name}");
            let t = canon_to_term_g(&word).unwrap();
            assert_eq!(evaluate(&GamesModel, &t).unwrap(), s, "{name}");
        }
        let mu = strategy_to_canon(&generator_strategy("muP").unwrap()).unwrap();
        assert_eq!(mu.letters.iter().filter(|l| matches!(l, Letter::W(_))).count(), 2);
    }

    #[test]
    fn small_expansions() {
        assert_eq!(canon_to_term_g(&w("Z")).unwrap(), Term::id(ObjectWord::unit()));
        assert_eq!(canon_to_term_g(&w("HO Z")).unwrap(), Term::gen("etaO"));
    }

    #[test]
    fn expansion_matches_semantics_on_canonical_words() {
        for word in enumerate_words_g(6, true) {
            let Ok(s) = canon_to_strategy(&word) else { continue };
            let t = canon_to_term_g(&word).unwrap_or_else(|e| panic!("{word}: {e}"));
            assert_eq!(evaluate(&GamesModel, &t).unwrap(), s, "{word}");
        }
    }

    #[test]
    fn canonical_words_round_trip() {
        for word in enumerate_words_g(6, true) {
            if let Ok(s) = canon_to_strategy(&word) {
                assert_eq!(strategy_to_canon(&s).unwrap(), word);
            }
        }
    }

    #[test]
    fn rules_are_sound_on_small_words() {
        let rules = games_rules();
        for word in enumerate_words_g(4, false) {
            let Ok(s) = canon_to_strategy(&word) else { continue };
            for p in 0..word.len().saturating_sub(1) {
                for r in rules.iter().filter(|r| r.matches(word.letters[p], word.letters[p + 1])) {
                    let out = rewrite_at(r, &word, p);
                    assert_eq!(canon_to_strategy(&out).unwrap(), s, "{word} by {}", r.name);
                }
            }
        }
    }

    #[test]
    fn relations_normalize_equal() {
        let th = builtin_theory(TheoryName::G);
        for r in &th.relations {
            assert_eq!(normalize_g(&r.lhs).unwrap(), normalize_g(&r.rhs).unwrap(), "{}", r.name);
        }
        let sig = games_signature();
        let zig = parse_term("(id(P) * etaOP) ; (epsOP * id(P))", &sig).unwrap();
        assert_eq!(normalize_g(&zig).unwrap(), w("W0 EP HP Z"));
    }

    #[test]
    fn validate_examples() {
        assert!(validate_canon_g(&w("Z")));
        assert!(!validate_canon_g(&w("HP W0 EP HP Z")));
        // codomain O before a domain-linked P under an O domain move is cyclic
        assert!(!validate_canon_g(&w("W1 EO W0 EP HP HO Z")));
    }
}
