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


//! Python bindings. Structured values cross the boundary as JSON text.

use std::str::FromStr;

use causal_games::cli::{interp_text, load_strategy, model_report, normalize_text};
use causal_games::games::compose_strategies;
use causal_games::gamespres::{canon_to_strategy, strategy_to_canon};
use causal_games::logic::{axiom_set_by_name, definability_witness, interp_proof, parse_proof, parse_prop_pair};
use causal_games::theories::rewrite::CanonWord;
use causal_games::theories::TheoryName;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

type Outcome<T> = Result<T, String>;

fn theory(name: &str) -> Outcome<TheoryName> {
    TheoryName::from_str(name).map_err(|e| e.to_string())
}

fn normalize_impl(theory_name: &str, term: &str) -> Outcome<String> {
    normalize_text(theory(theory_name)?, term).map(|w| w.to_string()).map_err(|e| e.to_string())
}

fn interp_impl(theory_name: &str, term: &str) -> Outcome<String> {
    interp_text(theory(theory_name)?, term).map(|v| v.to_string()).map_err(|e| e.to_string())
}

fn compose_impl(first: &str, second: &str) -> Outcome<(String, bool)> {
    let s = load_strategy(first).map_err(|e| e.to_string())?;
    let t = load_strategy(second).map_err(|e| e.to_string())?;
    let c = compose_strategies(&s, &t).map_err(|e| e.to_string())?;
    Ok((c.to_json_value().to_string(), c.is_strategy()))
}

fn compile_proof_impl(text: &str, axioms: &str) -> Outcome<String> {
    let ax = axiom_set_by_name(axioms).ok_or_else(|| format!("unknown axiom set `{axioms}`"))?;
    let p = parse_proof(text).map_err(|e| e.to_string())?;
    let s = interp_proof(&p, ax.as_ref()).map_err(|e| e.to_string())?;
    Ok(s.to_json_value().to_string())
}

fn axiom_member_impl(pair: &str, axioms: &str) -> Outcome<bool> {
    let ax = axiom_set_by_name(axioms).ok_or_else(|| format!("unknown axiom set `{axioms}`"))?;
    let (p, q) = parse_prop_pair(pair).map_err(|e| e.to_string())?;
    Ok(ax.contains(&p, &q))
}

fn check_model_impl(theory_name: &str, derived: bool) -> Outcome<(bool, String)> {
    let report = model_report(theory(theory_name)?, None, derived).map_err(|e| e.to_string())?;
    Ok((report.all_hold(), report.to_string()))
}

fn to_canon_impl(strategy: &str) -> Outcome<String> {
    let s = load_strategy(strategy).map_err(|e| e.to_string())?;
    let s = s.into_strategy().map_err(|e| e.to_string())?;
    strategy_to_canon(&s).map(|w| w.to_string()).map_err(|e| e.to_string())
}

fn from_canon_impl(word: &str) -> Outcome<String> {
    let w = CanonWord::from_str(word).map_err(|e| e.to_string())?;
    canon_to_strategy(&w).map(|s| s.to_json_value().to_string()).map_err(|e| e.to_string())
}

fn witness_impl(generator: &str) -> Outcome<String> {
    definability_witness(generator).map(|p| p.to_string()).map_err(|e| e.to_string())
}

fn py<T>(r: Outcome<T>) -> PyResult<T> {
    r.map_err(PyValueError::new_err)
}

/// Canonical word of a term in theory "B", "R" or "G".
#[pyfunction]
fn normalize(theory: &str, term: &str) -> PyResult<String> {
    py(normalize_impl(theory, term))
}

/// JSON semantics of a term: matrix (B), relation (R) or strategy (G).
#[pyfunction]
fn interp(theory: &str, term: &str) -> PyResult<String> {
    py(interp_impl(theory, term))
}

/// Composite of two strategies (JSON, canonical word or term) and whether
/// it is acyclic.
#[pyfunction]
fn compose(first: &str, second: &str) -> PyResult<(String, bool)> {
    py(compose_impl(first, second))
}

#[pyfunction]
#[pyo3(signature = (text, axioms = "default"))]
fn compile_proof(text: &str, axioms: &str) -> PyResult<String> {
    py(compile_proof_impl(text, axioms))
}

#[pyfunction]
#[pyo3(signature = (pair, axioms = "default"))]
fn axiom_member(pair: &str, axioms: &str) -> PyResult<bool> {
    py(axiom_member_impl(pair, axioms))
}

/// Whether every relation holds, with the printed report.
#[pyfunction]
#[pyo3(signature = (theory, derived = false))]
fn check_model(theory: &str, derived: bool) -> PyResult<(bool, String)> {
    py(check_model_impl(theory, derived))
}

#[pyfunction]
fn strategy_to_word(strategy: &str) -> PyResult<String> {
    py(to_canon_impl(strategy))
}

#[pyfunction]
fn word_to_strategy(word: &str) -> PyResult<String> {
    py(from_canon_impl(word))
}

#[pyfunction]
fn witness(generator: &str) -> PyResult<String> {
    py(witness_impl(generator))
}

#[pymodule]
#[pyo3(name = "causal_games")]
fn causal_games_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(normalize, m)?)?;
    m.add_function(wrap_pyfunction!(interp, m)?)?;
    m.add_function(wrap_pyfunction!(compose, m)?)?;
    m.add_function(wrap_pyfunction!(compile_proof, m)?)?;
    m.add_function(wrap_pyfunction!(axiom_member, m)?)?;
    m.add_function(wrap_pyfunction!(check_model, m)?)?;
    m.add_function(wrap_pyfunction!(strategy_to_word, m)?)?;
    m.add_function(wrap_pyfunction!(word_to_strategy, m)?)?;
    m.add_function(wrap_pyfunction!(witness, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wrappers() {
        assert_eq!(normalize_impl("B", "id(1)").unwrap(), "W0 E H Z");
        assert!(normalize_impl("Q", "id(1)").is_err());
        assert_eq!(interp_impl("B", "mu").unwrap(), r#"{"entries":[[1],[1]],"m":2,"n":1}"#);
        let (c, ok) = compose_impl("muP", "deltaP").unwrap();
        assert!(ok && c.contains("\"PP\""));
        assert!(axiom_member_impl("(x & y, top)", "default").unwrap());
        assert!(!axiom_member_impl("(top, bot)", "default").unwrap());
        assert!(check_model_impl("G", true).unwrap().0);
        assert_eq!(to_canon_impl("gammaOP").unwrap(), from_canon_impl(&to_canon_impl("gammaOP").unwrap()).and_then(|j| to_canon_impl(&j)).unwrap());
        let w = witness_impl("muP").unwrap();
        assert_eq!(compile_proof_impl(&w, "default").unwrap(), interp_impl("G", "muP").unwrap());
    }
}
