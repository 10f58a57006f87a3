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


use std::fmt;

use thiserror::Error;

use super::EquationalTheory;
use crate::sigcat::{typecheck, SigError, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("model has no interpretation for generator `{0}`")]
    UnknownGenerator(String),
    #[error("model has no interpretation for object `{0}`")]
    UnknownObject(char),
    #[error("cannot compose in model: {0}")]
    Composition(String),
    #[error(transparent)]
    Term(#[from] SigError),
}

/// A strict monoidal category together with an assignment of the generators
/// of some signature.
pub trait Model {
    type Object: Clone + fmt::Debug;
    type Morphism: Clone + fmt::Debug;

    fn name(&self) -> String;
    fn object(&self, letter: char) -> Result<Self::Object, ModelError>;
    fn unit(&self) -> Self::Object;
    fn tensor_objects(&self, a: &Self::Object, b: &Self::Object) -> Self::Object;
    fn identity(&self, a: &Self::Object) -> Self::Morphism;
    fn generator(&self, name: &str) -> Result<Self::Morphism, ModelError>;
    /// `first` followed by `second`.
    fn compose(&self, first: &Self::Morphism, second: &Self::Morphism) -> Result<Self::Morphism, ModelError>;
    fn tensor(&self, top: &Self::Morphism, bottom: &Self::Morphism) -> Self::Morphism;
    fn equal(&self, a: &Self::Morphism, b: &Self::Morphism) -> bool;
}

/// The unique strict monoidal functor out of the free category that agrees
/// with the model on generators.
pub fn evaluate<M: Model>(model: &M, term: &Term) -> Result<M::Morphism, ModelError> {
    match term {
        Term::Identity(word) => {
            let mut obj = model.unit();
            for &c in &word.0 {
                obj = model.tensor_objects(&obj, &model.object(c)?);
            }
            Ok(model.identity(&obj))
        }
        Term::Generator(name) => model.generator(name),
        Term::Tensor(a, b) => Ok(model.tensor(&evaluate(model, a)?, &evaluate(model, b)?)),
        Term::Compose(a, b) => model.compose(&evaluate(model, a)?, &evaluate(model, b)?),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelReport {
    pub theory: String,
    pub model: String,
    pub checks: Vec<RelationCheck>,
}

impl ModelReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.holds).map(|c| c.name.as_str()).collect()
    }
}

impl fmt::Display for ModelReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ok = self.checks.iter().filter(|c| c.holds).count();
        writeln!(
            f,
            "theory {} in {}: {}/{} relations hold",
            self.theory,
            self.model,
            ok,
            self.checks.len()
        )?;
        for c in &self.checks {
            writeln!(f, "  {} {}", if c.holds { "ok  " } else { "FAIL" }, c.name)?;
        }
        Ok(())
    }
}

/// Evaluates both sides of every relation of `theory` in `model`.
pub fn check_model<M: Model>(model: &M, theory: &EquationalTheory) -> Result<ModelReport, ModelError> {
    let mut checks = Vec::with_capacity(theory.relations.len());
    for r in &theory.relations {
        typecheck(&r.lhs, &theory.signature)?;
        typecheck(&r.rhs, &theory.signature)?;
        let l = evaluate(model, &r.lhs)?;
        let rv = evaluate(model, &r.rhs)?;
        checks.push(RelationCheck {
            name: r.name.clone(),
            holds: model.equal(&l, &rv),
        });
    }
    Ok(ModelReport {
        theory: theory.name.clone(),
        model: model.name(),
        checks,
    })
}
