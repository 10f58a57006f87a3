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


//! Canonical words and the string rewriting systems that normalize them.
//!
//! A word is read from the right, starting at the empty relation `Z`. Rules
//! always have a left-hand side of two adjacent letters.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::games::Polarity;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("cannot parse letter `{0}`")]
    BadLetter(String),
    #[error("a canonical word must end with `Z`")]
    MissingZ,
    #[error("ill-typed word: {0}")]
    IllTyped(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// Adds a codomain element, with a polarity in the games presentation.
    H(Option<Polarity>),
    /// Adds a domain element.
    E(Option<Polarity>),
    W(usize),
    A(usize),
    B(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    H,
    E,
    W,
    A,
    B,
}

impl Letter {
    pub fn family(&self) -> Family {
        match self {
            Letter::H(_) => Family::H,
            Letter::E(_) => Family::E,
            Letter::W(_) => Family::W,
            Letter::A(_) => Family::A,
            Letter::B(_) => Family::B,
        }
    }

    pub fn index(&self) -> Option<usize> {
        match self {
            Letter::W(i) | Letter::A(i) | Letter::B(i) => Some(*i),
            _ => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = |p: &Option<Polarity>| p.map(|p| p.to_string()).unwrap_or_default();
        match self {
            Letter::H(p) => write!(f, "H{}", tag(p)),
            Letter::E(p) => write!(f, "E{}", tag(p)),
            Letter::W(i) => write!(f, "W{i}"),
            Letter::A(i) => write!(f, "A{i}"),
            Letter::B(i) => write!(f, "B{i}"),
        }
    }
}

impl FromStr for Letter {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || WordError::BadLetter(s.to_string());
        let cleaned: String = s.chars().filter(|c| !matches!(c, '_' | '^' | '{' | '}')).collect();
        let mut chars = cleaned.chars();
        let head = chars.next().ok_or_else(bad)?;
        let rest: String = chars.collect();
        let pol = |r: &str| match r {
            "" => Ok(None),
            "O" => Ok(Some(Polarity::O)),
            "P" => Ok(Some(Polarity::P)),
            _ => Err(bad()),
        };
        let idx = |r: &str| r.parse::<usize>().map_err(|_| bad());
        match head {
            'H' => Ok(Letter::H(pol(&rest)?)),
            'E' => Ok(Letter::E(pol(&rest)?)),
            'W' => Ok(Letter::W(idx(&rest)?)),
            'A' => Ok(Letter::A(idx(&rest)?)),
            'B' => Ok(Letter::B(idx(&rest)?)),
            _ => Err(bad()),
        }
    }
}

/// A word `x_1 … x_k Z`; `letters[0]` is the outermost letter.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CanonWord {
    pub letters: Vec<Letter>,
}

impl CanonWord {
    pub fn empty() -> Self {
        CanonWord { letters: Vec::new() }
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        CanonWord { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Puts `letter` in front of the word.
    pub fn prepend(&self, letter: Letter) -> CanonWord {
        let mut letters = Vec::with_capacity(self.letters.len() + 1);
        letters.push(letter);
        letters.extend_from_slice(&self.letters);
        CanonWord { letters }
    }

    /// Head letter and the remaining word.
    pub fn split_first(&self) -> Option<(Letter, CanonWord)> {
        self.letters
            .split_first()
            .map(|(h, t)| (*h, CanonWord { letters: t.to_vec() }))
    }
}

impl fmt::Display for CanonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{l} ")?;
        }
        f.write_str("Z")
    }
}

impl FromStr for CanonWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let toks: Vec<&str> = s.split_whitespace().collect();
        match toks.split_last() {
            Some((&"Z", rest)) => Ok(CanonWord {
                letters: rest.iter().map(|t| t.parse()).collect::<Result<_, _>>()?,
            }),
            _ => Err(WordError::MissingZ),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SideCondition {
    Always,
    /// Index of the first letter is strictly below the second.
    Less,
    Equal,
}

/// A letter on the right-hand side: the family, the left-hand letter whose
/// payload it copies, and an index shift.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Template {
    pub family: Family,
    pub from: usize,
    pub shift: isize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteRule {
    pub name: String,
    pub lhs: [Family; 2],
    pub rhs: Vec<Template>,
    pub condition: SideCondition,
}

fn t(family: Family, from: usize, shift: isize) -> Template {
    Template { family, from, shift }
}

impl RewriteRule {
    fn new(name: &str, lhs: [Family; 2], rhs: Vec<Template>, condition: SideCondition) -> Self {
        RewriteRule {
            name: name.to_string(),
            lhs,
            rhs,
            condition,
        }
    }

    pub fn matches(&self, a: Letter, b: Letter) -> bool {
        if a.family() != self.lhs[0] || b.family() != self.lhs[1] {
            return false;
        }
        match self.condition {
            SideCondition::Always => true,
            SideCondition::Less => a.index() < b.index(),
            SideCondition::Equal => a.index() == b.index(),
        }
    }

    pub fn apply(&self, a: Letter, b: Letter) -> Vec<Letter> {
        let src = [a, b];
        self.rhs
            .iter()
            .map(|tp| {
                let s = src[tp.from];
                let shifted = |i: usize| (i as isize + tp.shift) as usize;
                match (tp.family, s) {
                    (Family::H, Letter::H(p) | Letter::E(p)) => Letter::H(p),
                    (Family::E, Letter::H(p) | Letter::E(p)) => Letter::E(p),
                    (Family::W, _) => Letter::W(shifted(s.index().expect("indexed letter"))),
                    (Family::A, _) => Letter::A(shifted(s.index().expect("indexed letter"))),
                    (Family::B, _) => Letter::B(shifted(s.index().expect("indexed letter"))),
                    _ => unreachable!("template family does not match its source"),
                }
            })
            .collect()
    }
}

impl fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |fam: Family, from: usize, shift: isize| -> String {
            let var = if from == 0 { "i" } else { "j" };
            let pvar = if from == 0 { "X" } else { "Y" };
            let idx = match shift {
                0 => var.to_string(),
                s if s > 0 => format!("{{{var}+{s}}}"),
                s => format!("{{{var}{s}}}"),
            };
            match fam {
                Family::H => format!("H^{pvar}"),
                Family::E => format!("E^{pvar}"),
                Family::W => format!("W_{idx}"),
                Family::A => format!("A_{idx}"),
                Family::B => format!("B_{idx}"),
            }
        };
        let lhs_second_from = if self.condition == SideCondition::Equal { 0 } else { 1 };
        write!(
            f,
            "{} {} =>",
            show(self.lhs[0], 0, 0),
            show(self.lhs[1], lhs_second_from, 0)
        )?;
        for tp in &self.rhs {
            let from = if self.condition == SideCondition::Equal { 0 } else { tp.from };
            write!(f, " {}", show(tp.family, from, tp.shift))?;
        }
        match self.condition {
            SideCondition::Less => write!(f, "  (i < j)"),
            _ => Ok(()),
        }
    }
}

use Family::{A as FA, B as FB, E as FE, H as FH, W as FW};
use SideCondition::{Always, Equal, Less};

fn shared_rules() -> Vec<RewriteRule> {
    vec![
        RewriteRule::new("slide-W", [FH, FW], vec![t(FW, 1, 1), t(FH, 0, 0)], Always),
        RewriteRule::new("slide-E", [FH, FE], vec![t(FE, 1, 0), t(FH, 0, 0)], Always),
        RewriteRule::new("sort-W", [FW, FW], vec![t(FW, 1, 0), t(FW, 0, 0)], Less),
    ]
}

fn idempotent(name: &str, fam: Family) -> RewriteRule {
    RewriteRule::new(name, [fam, fam], vec![t(fam, 0, 0)], Equal)
}

/// Rules normalizing words for bicommutative bialgebras.
pub fn rules_b() -> Vec<RewriteRule> {
    shared_rules()
}

/// Rules for the qualitative theory: multiplicities collapse.
pub fn rules_r() -> Vec<RewriteRule> {
    let mut r = shared_rules();
    r.push(idempotent("idem-W", FW));
    r
}

/// Rules for the theory of strategies.
pub fn rules_g() -> Vec<RewriteRule> {
    let mut r = rules_r();
    r.extend([
        RewriteRule::new("slide-A", [FH, FA], vec![t(FA, 1, 0), t(FH, 0, 0)], Always),
        RewriteRule::new("swap-AW", [FA, FW], vec![t(FW, 1, 0), t(FA, 0, 0)], Always),
        RewriteRule::new("sort-A", [FA, FA], vec![t(FA, 1, 0), t(FA, 0, 0)], Less),
        idempotent("idem-A", FA),
        RewriteRule::new("slide-B", [FB, FE], vec![t(FE, 1, 0), t(FB, 0, 0)], Always),
        RewriteRule::new("swap-BW", [FB, FW], vec![t(FW, 1, 0), t(FB, 0, 0)], Always),
        RewriteRule::new("sort-B", [FB, FB], vec![t(FB, 1, 0), t(FB, 0, 0)], Less),
        idempotent("idem-B", FB),
        RewriteRule::new("swap-BA", [FB, FA], vec![t(FA, 1, 0), t(FB, 0, 0)], Always),
    ]);
    r
}

/// Position and rule of the leftmost redex.
pub fn leftmost_redex<'r>(rules: &'r [RewriteRule], w: &CanonWord) -> Option<(usize, &'r RewriteRule)> {
    w.letters.windows(2).enumerate().find_map(|(p, pair)| {
        rules.iter().find(|r| r.matches(pair[0], pair[1])).map(|r| (p, r))
    })
}

pub fn rewrite_at(rule: &RewriteRule, w: &CanonWord, pos: usize) -> CanonWord {
    let mut letters = w.letters[..pos].to_vec();
    letters.extend(rule.apply(w.letters[pos], w.letters[pos + 1]));
    letters.extend_from_slice(&w.letters[pos + 2..]);
    CanonWord { letters }
}

pub fn is_normal(rules: &[RewriteRule], w: &CanonWord) -> bool {
    leftmost_redex(rules, w).is_none()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteStep {
    pub position: usize,
    pub rule: String,
    pub result: CanonWord,
}

/// Rewrites to normal form, always contracting the leftmost redex.
pub fn rewrite_to_normal(rules: &[RewriteRule], w: &CanonWord) -> CanonWord {
    let mut cur = w.clone();
    while let Some((p, r)) = leftmost_redex(rules, &cur) {
        cur = rewrite_at(r, &cur, p);
    }
    cur
}

pub fn rewrite_trace(rules: &[RewriteRule], w: &CanonWord) -> Vec<RewriteStep> {
    let mut cur = w.clone();
    let mut steps = Vec::new();
    while let Some((p, r)) = leftmost_redex(rules, &cur) {
        cur = rewrite_at(r, &cur, p);
        steps.push(RewriteStep {
            position: p,
            rule: r.name.clone(),
            result: cur.clone(),
        });
    }
    steps
}

fn weighted_sum(w: &CanonWord, f: impl Fn(&Letter) -> u128) -> u128 {
    // weight 2^p for the letter at position p from the left
    w.letters.iter().rev().fold(0u128, |acc, l| {
        acc.saturating_mul(2).saturating_add(f(l))
    })
}

/// Lexicographic pair decreasing along the bialgebra rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Measure(pub u128, pub u128);

pub fn termination_measure(w: &CanonWord) -> Measure {
    Measure(
        weighted_sum(w, |l| u128::from(!matches!(l, Letter::H(_)))),
        weighted_sum(w, |l| l.index().unwrap_or(0) as u128),
    )
}

/// Lexicographic triple decreasing along the rules for strategies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct GamesMeasure(pub u128, pub u128, pub u128);

pub fn games_measure(w: &CanonWord) -> GamesMeasure {
    let rank = |l: &Letter| match l {
        Letter::B(_) | Letter::H(_) => 0,
        Letter::E(_) => 1,
        Letter::A(_) => 2,
        Letter::W(_) => 3,
    };
    GamesMeasure(
        weighted_sum(w, |l| u128::from(!matches!(l, Letter::H(_)))),
        weighted_sum(w, rank),
        weighted_sum(w, |l| l.index().unwrap_or(0) as u128),
    )
}

/// Two one-step reducts of the same word whose normal forms differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalPeak {
    pub word: CanonWord,
    pub left: CanonWord,
    pub right: CanonWord,
    pub left_normal: CanonWord,
    pub right_normal: CanonWord,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConfluenceReport {
    pub words_checked: usize,
    pub peaks_checked: usize,
    pub failures: Vec<CriticalPeak>,
}

impl ConfluenceReport {
    pub fn is_confluent(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for ConfluenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "checked {} words, {} overlapping peaks: {}",
            self.words_checked,
            self.peaks_checked,
            if self.is_confluent() { "locally confluent" } else { "NOT locally confluent" }
        )?;
        for p in &self.failures {
            writeln!(f, "  {} -> {} | {}  ({} vs {})", p.word, p.left, p.right, p.left_normal, p.right_normal)?;
        }
        Ok(())
    }
}

/// All one-step reducts of `w` by a redex starting at `pos`.
fn reducts_at(rules: &[RewriteRule], w: &CanonWord, pos: usize) -> Vec<CanonWord> {
    if pos + 1 >= w.letters.len() {
        return Vec::new();
    }
    rules
        .iter()
        .filter(|r| r.matches(w.letters[pos], w.letters[pos + 1]))
        .map(|r| rewrite_at(r, w, pos))
        .collect()
}

/// Joinability of every overlapping peak in the given words. Non-overlapping
/// redexes commute trivially, so only redexes at the same or adjacent
/// positions are examined.
pub fn check_local_confluence(
    rules: &[RewriteRule],
    words: impl IntoIterator<Item = CanonWord>,
) -> ConfluenceReport {
    let mut report = ConfluenceReport::default();
    for w in words {
        report.words_checked += 1;
        for p in 0..w.letters.len().saturating_sub(1) {
            let here = reducts_at(rules, &w, p);
            if here.is_empty() {
                continue;
            }
            let mut others: Vec<CanonWord> = here[1..].to_vec();
            others.extend(reducts_at(rules, &w, p + 1));
            for right in others {
                report.peaks_checked += 1;
                let left = here[0].clone();
                let ln = rewrite_to_normal(rules, &left);
                let rn = rewrite_to_normal(rules, &right);
                if ln != rn {
                    report.failures.push(CriticalPeak {
                        word: w.clone(),
                        left,
                        right,
                        left_normal: ln,
                        right_normal: rn,
                    });
                }
            }
        }
    }
    report
}

/// The letters of the given families with indices below `max_index`;
/// `H` and `E` come in both polarities when `polarized`. `A` and `B`
/// indices start at 1.
pub fn alphabet(families: &[Family], max_index: usize, polarized: bool) -> Vec<Letter> {
    let pols: Vec<Option<Polarity>> = if polarized {
        vec![Some(Polarity::O), Some(Polarity::P)]
    } else {
        vec![None]
    };
    let mut out = Vec::new();
    for f in families {
        match f {
            Family::H => out.extend(pols.iter().map(|&p| Letter::H(p))),
            Family::E => out.extend(pols.iter().map(|&p| Letter::E(p))),
            Family::W => out.extend((0..max_index).map(Letter::W)),
            Family::A => out.extend((1..max_index).map(Letter::A)),
            Family::B => out.extend((1..max_index).map(Letter::B)),
        }
    }
    out
}

/// Every string over `letters` of length at most `max_len`, untyped.
pub fn all_words(letters: &[Letter], max_len: usize) -> Vec<CanonWord> {
    let mut out = vec![CanonWord::empty()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<Letter>| {
                letters.iter().map(move |&l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned().map(CanonWord::new));
    }
    out
}
