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


//! Quantifier-only first-order sequent calculus and its game semantics.

pub mod axioms;
pub mod proof;
pub mod syntax;

pub use axioms::{axiom_set_by_name, default_axiom_set, AllAxioms, AxiomSet, EqualityAxioms, LatticeAxioms};
pub use proof::{check_proof, definability_witness, formula_to_game, interp_proof, parse_proof, proof_to_strategy, witness_defines, Language, Proof, ProofError, ProofTree};
pub use syntax::{parse_fo_term, parse_formula, parse_prop, parse_prop_pair, parse_sequent, FoTerm, Formula, Prop, Quantifier, Sequent, SyntaxError, Var};
