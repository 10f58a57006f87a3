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


//! Presentations of causal games and multirelations by generators and
//! relations, together with a compiler from first-order proofs to strategies.

pub mod cli;
pub mod games;
pub mod gamespres;
pub mod logic;
pub mod multirel;
pub mod random;
pub mod render;
pub mod sigcat;
pub mod theories;
