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


//! Multirelations as natural-number matrices, relations as their supports,
//! and the normal forms presenting them.

use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

use crate::sigcat::{slices, typecheck, ObjectWord, SigError, Term};
use crate::theories::rewrite::{rewrite_to_normal, rules_b, rules_r, CanonWord, Letter, WordError};
use crate::theories::{bialgebra_signature, evaluate, Model, ModelError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelError {
    #[error("dimension mismatch: {left_cols} columns against {right_rows} rows")]
    DimensionMismatch { left_cols: usize, right_rows: usize },
    #[error("entries do not form a {m}x{n} matrix")]
    Shape { m: usize, n: usize },
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Term(#[from] SigError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// An `m × n` matrix of naturals; entry `(a, b)` counts the witnesses
/// relating domain element `a` to codomain element `b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiRel {
    m: usize,
    n: usize,
    entries: Vec<u64>,
}

impl MultiRel {
    pub fn zero(m: usize, n: usize) -> MultiRel {
        MultiRel { m, n, entries: vec![0; m * n] }
    }

    pub fn identity(n: usize) -> MultiRel {
        let mut r = MultiRel::zero(n, n);
        for i in 0..n {
            r.set(i, i, 1);
        }
        r
    }

    pub fn from_rows(rows: &[Vec<u64>], n: usize) -> Result<MultiRel, RelError> {
        let m = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(RelError::Shape { m, n });
        }
        Ok(MultiRel {
            m,
            n,
            entries: rows.concat(),
        })
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize) -> u64 {
        self.entries[a * self.n + b]
    }

    pub fn set(&mut self, a: usize, b: usize, v: u64) {
        self.entries[a * self.n + b] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.m).map(|a| self.entries[a * self.n..(a + 1) * self.n].to_vec()).collect()
    }

    /// Total number of witnesses.
    pub fn cardinality(&self) -> u64 {
        self.entries.iter().sum()
    }

    pub fn to_json_value(&self) -> Value {
        json!({ "m": self.m, "n": self.n, "entries": self.to_rows() })
    }

    pub fn from_json_value(v: &Value) -> Result<MultiRel, RelError> {
        let bad = |s: &str| RelError::Json(s.to_string());
        let m = v.get("m").and_then(Value::as_u64).ok_or_else(|| bad("missing m"))? as usize;
        let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| bad("missing n"))? as usize;
        let rows = v
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing entries"))?
            .iter()
            .map(|r| {
                r.as_array()
                    .ok_or_else(|| bad("row must be an array"))?
                    .iter()
                    .map(|x| x.as_u64().ok_or_else(|| bad("entries must be naturals")))
                    .collect::<Result<Vec<u64>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        if rows.len() != m {
            return Err(RelError::Shape { m, n });
        }
        MultiRel::from_rows(&rows, n)
    }
}

impl fmt::Display for MultiRel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} {:?}", self.m, self.n, self.to_rows())
    }
}

/// Matrix product: `first` followed by `second`.
pub fn compose(first: &MultiRel, second: &MultiRel) -> Result<MultiRel, RelError> {
    if first.n != second.m {
        return Err(RelError::DimensionMismatch {
            left_cols: first.n,
            right_rows: second.m,
        });
    }
    let mut out = MultiRel::zero(first.m, second.n);
    for a in 0..first.m {
        for b in 0..first.n {
            let x = first.get(a, b);
            if x == 0 {
                continue;
            }
            for c in 0..second.n {
                out.entries[a * second.n + c] += x * second.get(b, c);
            }
        }
    }
    Ok(out)
}

/// Block-diagonal sum.
pub fn tensor(top: &MultiRel, bottom: &MultiRel) -> MultiRel {
    let mut out = MultiRel::zero(top.m + bottom.m, top.n + bottom.n);
    for a in 0..top.m {
        for b in 0..top.n {
            out.set(a, b, top.get(a, b));
        }
    }
    for a in 0..bottom.m {
        for b in 0..bottom.n {
            out.set(top.m + a, top.n + b, bottom.get(a, b));
        }
    }
    out
}

/// A relation as a boolean matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoolRel {
    m: usize,
    n: usize,
    entries: Vec<bool>,
}

impl BoolRel {
    pub fn zero(m: usize, n: usize) -> BoolRel {
        BoolRel { m, n, entries: vec![false; m * n] }
    }

    pub fn identity(n: usize) -> BoolRel {
        quotient_to_rel(&MultiRel::identity(n))
    }

    pub fn from_rows(rows: &[Vec<bool>], n: usize) -> Result<BoolRel, RelError> {
        let m = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(RelError::Shape { m, n });
        }
        Ok(BoolRel {
            m,
            n,
            entries: rows.concat(),
        })
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize) -> bool {
        self.entries[a * self.n + b]
    }

    pub fn set(&mut self, a: usize, b: usize, v: bool) {
        self.entries[a * self.n + b] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<bool>> {
        (0..self.m).map(|a| self.entries[a * self.n..(a + 1) * self.n].to_vec()).collect()
    }

    pub fn to_json_value(&self) -> Value {
        json!({ "m": self.m, "n": self.n, "entries": self.to_rows() })
    }

    pub fn compose(&self, second: &BoolRel) -> Result<BoolRel, RelError> {
        if self.n != second.m {
            return Err(RelError::DimensionMismatch {
                left_cols: self.n,
                right_rows: second.m,
            });
        }
        let mut out = BoolRel::zero(self.m, second.n);
        for a in 0..self.m {
            for b in (0..self.n).filter(|&b| self.get(a, b)) {
                for c in 0..second.n {
                    if second.get(b, c) {
                        out.set(a, c, true);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn tensor(&self, bottom: &BoolRel) -> BoolRel {
        let mut out = BoolRel::zero(self.m + bottom.m, self.n + bottom.n);
        for a in 0..self.m {
            for b in 0..self.n {
                out.set(a, b, self.get(a, b));
            }
        }
        for a in 0..bottom.m {
            for b in 0..bottom.n {
                out.set(self.m + a, self.n + b, bottom.get(a, b));
            }
        }
        out
    }
}

/// Support of a multirelation.
pub fn quotient_to_rel(r: &MultiRel) -> BoolRel {
    BoolRel {
        m: r.m,
        n: r.n,
        entries: r.entries.iter().map(|&x| x > 0).collect(),
    }
}

fn bialgebra_generator(name: &str) -> Option<MultiRel> {
    let rows: (&[&[u64]], usize) = match name {
        "mu" => (&[&[1], &[1]], 1),
        "eta" => (&[], 1),
        "delta" => (&[&[1, 1]], 2),
        "eps" => (&[&[]], 0),
        "gamma" => (&[&[0, 1], &[1, 0]], 2),
        _ => return None,
    };
    let owned: Vec<Vec<u64>> = rows.0.iter().map(|r| r.to_vec()).collect();
    MultiRel::from_rows(&owned, rows.1).ok()
}

fn check_object(letter: char) -> Result<usize, ModelError> {
    if letter == crate::theories::UNIT_OBJECT {
        Ok(1)
    } else {
        Err(ModelError::UnknownObject(letter))
    }
}

/// Finite ordinals and multirelations with the bialgebra structure.
#[derive(Debug, Clone, Copy, Default)]
pub struct MRelModel;

impl Model for MRelModel {
    type Object = usize;
    type Morphism = MultiRel;

    fn name(&self) -> String {
        "MRel".into()
    }

    fn object(&self, letter: char) -> Result<usize, ModelError> {
        check_object(letter)
    }

    fn unit(&self) -> usize {
        0
    }

    fn tensor_objects(&self, a: &usize, b: &usize) -> usize {
        a + b
    }

    fn identity(&self, a: &usize) -> MultiRel {
        MultiRel::identity(*a)
    }

    fn generator(&self, name: &str) -> Result<MultiRel, ModelError> {
        bialgebra_generator(name).ok_or_else(|| ModelError::UnknownGenerator(name.into()))
    }

    fn compose(&self, first: &MultiRel, second: &MultiRel) -> Result<MultiRel, ModelError> {
        compose(first, second).map_err(|e| ModelError::Composition(e.to_string()))
    }

    fn tensor(&self, top: &MultiRel, bottom: &MultiRel) -> MultiRel {
        tensor(top, bottom)
    }

    fn equal(&self, a: &MultiRel, b: &MultiRel) -> bool {
        a == b
    }
}

/// Finite ordinals and relations.
#[derive(Debug, Clone, Copy, Default)]
pub struct RelModel;

impl Model for RelModel {
    type Object = usize;
    type Morphism = BoolRel;

    fn name(&self) -> String {
        "Rel".into()
    }

    fn object(&self, letter: char) -> Result<usize, ModelError> {
        check_object(letter)
    }

    fn unit(&self) -> usize {
        0
    }

    fn tensor_objects(&self, a: &usize, b: &usize) -> usize {
        a + b
    }

    fn identity(&self, a: &usize) -> BoolRel {
        BoolRel::identity(*a)
    }

    fn generator(&self, name: &str) -> Result<BoolRel, ModelError> {
        bialgebra_generator(name)
            .map(|r| quotient_to_rel(&r))
            .ok_or_else(|| ModelError::UnknownGenerator(name.into()))
    }

    fn compose(&self, first: &BoolRel, second: &BoolRel) -> Result<BoolRel, ModelError> {
        first.compose(second).map_err(|e| ModelError::Composition(e.to_string()))
    }

    fn tensor(&self, top: &BoolRel, bottom: &BoolRel) -> BoolRel {
        top.tensor(bottom)
    }

    fn equal(&self, a: &BoolRel, b: &BoolRel) -> bool {
        a == b
    }
}

/// A monotone map between finite ordinals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonotoneMap {
    pub target: usize,
    pub image: Vec<usize>,
}

/// The simplicial category: finite ordinals, monotone maps, ordinal sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct SimplexModel;

impl Model for SimplexModel {
    type Object = usize;
    type Morphism = MonotoneMap;

    fn name(&self) -> String {
        "Delta".into()
    }

    fn object(&self, letter: char) -> Result<usize, ModelError> {
        check_object(letter)
    }

    fn unit(&self) -> usize {
        0
    }

    fn tensor_objects(&self, a: &usize, b: &usize) -> usize {
        a + b
    }

    fn identity(&self, a: &usize) -> MonotoneMap {
        MonotoneMap {
            target: *a,
            image: (0..*a).collect(),
        }
    }

    fn generator(&self, name: &str) -> Result<MonotoneMap, ModelError> {
        match name {
            "mu" => Ok(MonotoneMap { target: 1, image: vec![0, 0] }),
            "eta" => Ok(MonotoneMap { target: 1, image: vec![] }),
            _ => Err(ModelError::UnknownGenerator(name.into())),
        }
    }

    fn compose(&self, first: &MonotoneMap, second: &MonotoneMap) -> Result<MonotoneMap, ModelError> {
        if first.target != second.image.len() {
            return Err(ModelError::Composition(format!(
                "{} does not match {}",
                first.target,
                second.image.len()
            )));
        }
        Ok(MonotoneMap {
            target: second.target,
            image: first.image.iter().map(|&x| second.image[x]).collect(),
        })
    }

    fn tensor(&self, top: &MonotoneMap, bottom: &MonotoneMap) -> MonotoneMap {
        let mut image = top.image.clone();
        image.extend(bottom.image.iter().map(|&x| x + top.target));
        MonotoneMap {
            target: top.target + bottom.target,
            image,
        }
    }

    fn equal(&self, a: &MonotoneMap, b: &MonotoneMap) -> bool {
        a == b
    }
}

pub fn interp_b(t: &Term) -> Result<MultiRel, RelError> {
    typecheck(t, &bialgebra_signature())?;
    Ok(evaluate(&MRelModel, t)?)
}

pub fn interp_r(t: &Term) -> Result<BoolRel, RelError> {
    typecheck(t, &bialgebra_signature())?;
    Ok(evaluate(&RelModel, t)?)
}

/// Source and target widths of a word, or why it is ill-typed.
pub fn word_type_b(w: &CanonWord) -> Result<(usize, usize), WordError> {
    let (mut m, mut n) = (0usize, 0usize);
    for l in w.letters.iter().rev() {
        match *l {
            Letter::H(None) => n += 1,
            Letter::E(None) => m += 1,
            Letter::W(i) if m >= 1 && i < n => {}
            other => {
                return Err(WordError::IllTyped(format!("letter {other} cannot act on {m}->{n}")));
            }
        }
    }
    Ok((m, n))
}

/// Letter semantics: `H` adds a zero column in front, `E` a zero row, and
/// `W_i` one witness between the first domain element and column `i`.
pub fn word_to_matrix(w: &CanonWord) -> Result<MultiRel, WordError> {
    let (m, n) = word_type_b(w)?;
    let mut r = MultiRel::zero(m, n);
    let (mut rows, mut cols) = (0usize, 0usize);
    for l in w.letters.iter().rev() {
        match *l {
            Letter::H(_) => cols += 1,
            Letter::E(_) => rows += 1,
            Letter::W(i) => {
                let (a, b) = (m - rows, n - cols + i);
                r.set(a, b, r.get(a, b) + 1);
            }
            _ => unreachable!("typed above"),
        }
    }
    Ok(r)
}

pub fn word_to_rel(w: &CanonWord) -> Result<BoolRel, WordError> {
    word_to_matrix(w).map(|r| quotient_to_rel(&r))
}

/// The canonical word of a matrix: for each row from the top, its witnesses
/// from the last column down, then `E`; finally one `H` per column.
pub fn matrix_to_canon(r: &MultiRel) -> CanonWord {
    let mut letters = Vec::new();
    for i in 0..r.m {
        for j in (0..r.n).rev() {
            letters.extend(std::iter::repeat_n(Letter::W(j), r.get(i, j) as usize));
        }
        letters.push(Letter::E(None));
    }
    letters.extend(std::iter::repeat_n(Letter::H(None), r.n));
    CanonWord::new(letters)
}

/// Canonical word of a relation, with each witness counted once.
pub fn rel_to_canon(r: &BoolRel) -> CanonWord {
    let counts: Vec<Vec<u64>> = r.to_rows().iter().map(|row| row.iter().map(|&b| u64::from(b)).collect()).collect();
    matrix_to_canon(&MultiRel::from_rows(&counts, r.n).expect("same shape"))
}

/// `W_0 E H` repeated: the identity on `n`.
pub fn identity_word(n: usize) -> CanonWord {
    let mut letters = Vec::with_capacity(3 * n);
    for _ in 0..n {
        letters.extend([Letter::W(0), Letter::E(None), Letter::H(None)]);
    }
    CanonWord::new(letters)
}

/// Post-composes the word with `generator` acting on codomain wires starting
/// at `pos`, by induction on the head letter.
pub fn apply_slice(w: &CanonWord, generator: &str, pos: usize) -> CanonWord {
    let Some((head, rest)) = w.split_first() else {
        debug_assert_eq!(generator, "eta");
        return CanonWord::new(vec![Letter::H(None)]);
    };
    match head {
        Letter::E(_) => apply_slice(&rest, generator, pos).prepend(head),
        Letter::H(_) if pos > 0 => apply_slice(&rest, generator, pos - 1).prepend(head),
        Letter::H(_) => match generator {
            "mu" | "eps" => rest,
            "eta" | "delta" => rest.prepend(head).prepend(head),
            "gamma" => apply_slice(&rest, "eta", 1),
            other => panic!("not a bialgebra generator: {other}"),
        },
        Letter::W(i) => {
            let inner = apply_slice(&rest, generator, pos);
            match generator {
                "mu" => inner.prepend(Letter::W(if i > pos { i - 1 } else { i })),
                "eta" => inner.prepend(Letter::W(if pos <= i { i + 1 } else { i })),
                "delta" if i == pos => inner.prepend(Letter::W(i + 1)).prepend(Letter::W(i)),
                "delta" => inner.prepend(Letter::W(if i > pos { i + 1 } else { i })),
                "eps" if i == pos => inner,
                "eps" => inner.prepend(Letter::W(if i > pos { i - 1 } else { i })),
                "gamma" if i == pos => inner.prepend(Letter::W(i + 1)),
                "gamma" if i == pos + 1 => inner.prepend(Letter::W(i - 1)),
                "gamma" => inner.prepend(Letter::W(i)),
                other => panic!("not a bialgebra generator: {other}"),
            }
        }
        other => panic!("letter {other} does not belong to bialgebra words"),
    }
}

/// Precanonical word equivalent to a term: start from the identity and absorb
/// one generator at a time.
pub fn precanonical_b(t: &Term) -> Result<CanonWord, RelError> {
    let sig = bialgebra_signature();
    let (src, _) = typecheck(t, &sig)?;
    let mut w = identity_word(src.len());
    for s in slices(t, &sig)? {
        w = apply_slice(&w, &s.generator, s.left);
    }
    Ok(w)
}

pub fn canonicalize_b(t: &Term) -> Result<CanonWord, RelError> {
    Ok(rewrite_to_normal(&rules_b(), &precanonical_b(t)?))
}

pub fn canonicalize_r(t: &Term) -> Result<CanonWord, RelError> {
    Ok(rewrite_to_normal(&rules_r(), &canonicalize_b(t)?))
}

fn id(n: usize) -> Term {
    Term::id(ObjectWord::repeat(crate::theories::UNIT_OBJECT, n))
}

/// Crossings moving wire 0 to position `k`.
pub fn stairs(k: usize) -> Term {
    Term::compose_all(
        (0..k).map(|j| id(j).tensor(Term::gen("gamma")).tensor(id(k - 1 - j))),
        ObjectWord::repeat(crate::theories::UNIT_OBJECT, k + 1),
    )
}

/// Expands a word into a bialgebra term with the same interpretation.
pub fn canon_to_term_b(w: &CanonWord) -> Result<Term, WordError> {
    let (m, n) = word_type_b(w)?;
    let Some((head, rest)) = w.split_first() else {
        return Ok(id(0));
    };
    let inner = canon_to_term_b(&rest)?;
    Ok(match head {
        Letter::H(_) => Term::gen("eta").tensor(inner),
        Letter::E(_) => Term::gen("eps").tensor(inner),
        Letter::W(i) => Term::gen("delta")
            .tensor(id(m - 1))
            .then(id(1).tensor(inner))
            .then(stairs(i).tensor(id(n - i)))
            .then(id(i).tensor(Term::gen("mu")).tensor(id(n - 1 - i))),
        _ => unreachable!("typed above"),
    })
}

fn shape_ok(w: &CanonWord, strict: bool) -> bool {
    let mut seen_h = false;
    let mut prev_w: Option<usize> = None;
    for l in &w.letters {
        match *l {
            Letter::H(_) => seen_h = true,
            Letter::E(_) if seen_h => return false,
            Letter::E(_) => prev_w = None,
            Letter::W(i) => {
                if seen_h {
                    return false;
                }
                if let Some(p) = prev_w {
                    if i > p || (strict && i == p) {
                        return false;
                    }
                }
                prev_w = Some(i);
            }
            _ => return false,
        }
    }
    true
}

/// Well-typed, in block shape `(W… E)… H… Z`, with indices non-increasing
/// inside each block.
pub fn is_canonical_b(w: &CanonWord) -> bool {
    word_type_b(w).is_ok() && shape_ok(w, false)
}

/// As [`is_canonical_b`] with strictly decreasing indices.
pub fn is_canonical_r(w: &CanonWord) -> bool {
    word_type_b(w).is_ok() && shape_ok(w, true)
}

/// All well-typed bialgebra words with at most `max_len` letters.
pub fn enumerate_words_b(max_len: usize) -> Vec<CanonWord> {
    fn go(letters: &mut Vec<Letter>, m: usize, n: usize, max_len: usize, out: &mut Vec<CanonWord>) {
        let mut word: Vec<Letter> = letters.clone();
        word.reverse();
        out.push(CanonWord::new(word));
        if letters.len() == max_len {
            return;
        }
        let mut step = |l: Letter, m2: usize, n2: usize, letters: &mut Vec<Letter>| {
            letters.push(l);
            go(letters, m2, n2, max_len, out);
            letters.pop();
        };
        step(Letter::H(None), m, n + 1, letters);
        step(Letter::E(None), m + 1, n, letters);
        if m >= 1 {
            for i in 0..n {
                step(Letter::W(i), m, n, letters);
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), 0, 0, max_len, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sigcat::parse_term;
    use crate::theories::{builtin_theory, check_model, TheoryName};

    const EXAMPLE: &str = "((delta * eps) ; (id(1) * delta) ; (mu * eta * id(1))) * id(1)";

    fn term(s: &str) -> Term {
        parse_term(s, &bialgebra_signature()).unwrap()
    }

    fn w(s: &str) -> CanonWord {
        s.parse().unwrap()
    }

    fn mat(rows: &[&[u64]], n: usize) -> MultiRel {
        MultiRel::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>(), n).unwrap()
    }

    #[test]
    fn example_matrix() {
        let r = interp_b(&term(EXAMPLE)).unwrap();
        assert_eq!(r, mat(&[&[2, 0, 1, 0], &[0, 0, 0, 0], &[0, 0, 0, 1]], 4));
        assert_eq!(
            serde_json::to_string(&r.to_json_value()).unwrap(),
            r#"{"entries":[[2,0,1,0],[0,0,0,0],[0,0,0,1]],"m":3,"n":4}"#
        );
    }

    #[test]
    fn compose_scalars_and_dimensions() {
        assert_eq!(compose(&mat(&[&[2]], 1), &mat(&[&[3]], 1)).unwrap(), mat(&[&[6]], 1));
        assert!(matches!(
            compose(&MultiRel::zero(1, 2), &MultiRel::zero(3, 1)),
            Err(RelError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn tensor_blocks() {
        let mu = bialgebra_generator("mu").unwrap();
        let delta = bialgebra_generator("delta").unwrap();
        assert_eq!(tensor(&mu, &delta), mat(&[&[1, 0, 0], &[1, 0, 0], &[0, 1, 1]], 3));
        assert_eq!(tensor(&mat(&[&[1]], 1), &mat(&[&[1]], 1)), MultiRel::identity(2));
        assert_eq!(tensor(&mu, &MultiRel::zero(0, 0)), mu);
    }

    #[test]
    fn models_check() {
        assert!(check_model(&MRelModel, &builtin_theory(TheoryName::B)).unwrap().all_hold());
        let r = check_model(&MRelModel, &builtin_theory(TheoryName::R)).unwrap();
        assert_eq!(r.failures(), vec!["qualitative"]);
        assert!(check_model(&RelModel, &builtin_theory(TheoryName::R)).unwrap().all_hold());
        assert!(check_model(&SimplexModel, &builtin_theory(TheoryName::M)).unwrap().all_hold());
    }

    #[test]
    fn qualitative_relation_counts_two() {
        assert_eq!(interp_b(&term("delta ; mu")).unwrap(), mat(&[&[2]], 1));
    }

    #[test]
    fn canonical_words_of_small_terms() {
        assert_eq!(canonicalize_b(&term("id(1)")).unwrap(), w("W0 E H Z"));
        assert_eq!(canonicalize_b(&term("eps")).unwrap(), w("E Z"));
        assert_eq!(matrix_to_canon(&MultiRel::zero(0, 3)), w("H H H Z"));
        assert_eq!(matrix_to_canon(&MultiRel::zero(0, 0)), w("Z"));
        assert_eq!(matrix_to_canon(&mat(&[&[1]], 1)), w("W0 E H Z"));
    }

    #[test]
    fn example_routes_agree() {
        let t = term(EXAMPLE);
        let c = canonicalize_b(&t).unwrap();
        assert!(is_canonical_b(&c));
        assert_eq!(c, matrix_to_canon(&interp_b(&t).unwrap()));
        assert_eq!(word_to_matrix(&c).unwrap(), interp_b(&t).unwrap());
    }

    #[test]
    fn expansion_interprets_like_the_word() {
        assert_eq!(canon_to_term_b(&w("Z")).unwrap(), id(0));
        assert_eq!(canon_to_term_b(&w("H Z")).unwrap(), Term::gen("eta").tensor(id(0)));
        for s in ["W0 E H Z", "W2 W0 W0 E E W1 E H H H Z", "H W0 E H Z"] {
            let word = w(s);
            let t = canon_to_term_b(&word).unwrap();
            assert_eq!(interp_b(&t).unwrap(), word_to_matrix(&word).unwrap(), "{s}");
        }
    }

    #[test]
    fn qualitative_normalization() {
        assert_eq!(rewrite_to_normal(&rules_r(), &w("W0 W0 E H Z")), w("W0 E H Z"));
        assert_eq!(canonicalize_r(&term("delta ; mu")).unwrap(), canonicalize_r(&term("id(1)")).unwrap());
        let q = quotient_to_rel(&mat(&[&[2, 0], &[0, 1]], 2));
        assert_eq!(q.to_rows(), vec![vec![true, false], vec![false, true]]);
    }

    #[test]
    fn ill_typed_words() {
        assert!(word_type_b(&w("W0 Z")).is_err());
        assert!(word_type_b(&w("W1 E H Z")).is_err());
        assert!(!is_canonical_b(&w("H W0 E H Z")));
        assert!(is_canonical_b(&w("Z")));
    }

    #[test]
    fn json_round_trip() {
        let r = mat(&[&[1, 2], &[0, 3]], 2);
        assert_eq!(MultiRel::from_json_value(&r.to_json_value()).unwrap(), r);
    }
}
