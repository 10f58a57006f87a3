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


//! The `causal-games` command line.
//!
//! Exit status is 0 on success, 1 when a domain error occurs or a check
//! fails, and 2 on a usage error. Arguments naming an existing file are
//! read from that file; `-` reads standard input; anything else is taken
//! literally.

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::games::{compose_strategies, CyclicStrategy, GamesModel};
use crate::gamespres::{canon_to_strategy, canon_to_term_g, enumerate_words_g, normalize_g};
use crate::logic::{axiom_set_by_name, check_proof, interp_proof, parse_proof, parse_prop_pair, AxiomSet};
use crate::multirel::{canon_to_term_b, canonicalize_b, canonicalize_r, enumerate_words_b, interp_b, interp_r, MRelModel, RelModel, SimplexModel};
use crate::render::{strategy_ascii, strategy_dot, term_ascii, term_dot};
use crate::sigcat::{parse_term, print_term, typecheck, Term};
use crate::theories::rewrite::{all_words, alphabet, check_local_confluence, rules_b, rules_g, rules_r, CanonWord, ConfluenceReport, Family};
use crate::theories::{builtin_theory, check_model, derived_games_equations, evaluate, games_signature, EquationalTheory, ModelReport, Relation, TheoryName};

type CliResult<T> = Result<T, Box<dyn std::error::Error>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "UPPER")]
pub enum TheoryArg {
    M,
    B,
    R,
    D,
    G,
}

impl From<TheoryArg> for TheoryName {
    fn from(t: TheoryArg) -> TheoryName {
        match t {
            TheoryArg::M => TheoryName::M,
            TheoryArg::B => TheoryName::B,
            TheoryArg::R => TheoryName::R,
            TheoryArg::D => TheoryName::D,
            TheoryArg::G => TheoryName::G,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Mrel,
    Rel,
    Simplex,
    Games,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Ascii,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "causal-games", version, about = "Monoidal presentations of multirelations and first-order games")]
pub struct Cli {
    /// Pretty-print JSON output.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the canonical word of a term.
    Normalize {
        #[arg(long, value_enum)]
        theory: TheoryArg,
        term: String,
    },
    /// Print the semantics of a term: a matrix (B), a relation (R) or a strategy (G).
    Interp {
        #[arg(long, value_enum)]
        theory: TheoryArg,
        term: String,
    },
    /// Print the term a canonical word stands for.
    Expand {
        #[arg(long, value_enum)]
        theory: TheoryArg,
        word: String,
    },
    /// Compose two strategies, given as JSON, canonical words or terms.
    Compose { first: String, second: String },
    /// Check every relation of a theory in a model.
    CheckModel {
        #[arg(long, value_enum)]
        theory: TheoryArg,
        /// Defaults to the intended model of the theory.
        #[arg(long, value_enum)]
        model: Option<ModelArg>,
        /// Also check the derived equations of the theory of strategies.
        #[arg(long)]
        derived: bool,
    },
    /// Check a proof file and print its strategy.
    CompileProof {
        proof: String,
        #[arg(long, default_value = "default")]
        axioms: String,
    },
    /// Query an axiom set.
    Axioms {
        #[command(subcommand)]
        action: AxiomsAction,
    },
    /// Draw a term or a strategy.
    Render {
        #[command(subcommand)]
        what: RenderWhat,
    },
    /// Look for unjoinable critical peaks among words up to a length.
    Confluence {
        #[arg(long, value_enum)]
        theory: TheoryArg,
        #[arg(long, default_value_t = 6)]
        bound: usize,
    },
    /// Inspect the built-in theories.
    Theory {
        #[command(subcommand)]
        action: TheoryAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum AxiomsAction {
    /// Print whether `(P, Q)` is an axiom.
    Query {
        pair: String,
        #[arg(long, default_value = "default")]
        axioms: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum RenderWhat {
    Term {
        input: String,
        #[arg(long, value_enum, default_value = "G")]
        theory: TheoryArg,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    Strategy {
        input: String,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
}

#[derive(Debug, Subcommand)]
pub enum TheoryAction {
    /// Print a theory as JSON.
    Dump {
        #[arg(value_enum)]
        name: TheoryArg,
    },
}

#[derive(Debug, thiserror::Error)]
#[error("{0}")]
struct Failure(String);

fn fail<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(Box::new(Failure(msg.into())))
}

fn read_input(arg: &str) -> CliResult<String> {
    if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    let p = Path::new(arg);
    if p.is_file() {
        return Ok(std::fs::read_to_string(p)?);
    }
    Ok(arg.to_string())
}

/// Parses and typechecks a term over a built-in theory's signature.
pub fn parse_checked_term(text: &str, theory: TheoryName) -> CliResult<Term> {
    let th = builtin_theory(theory);
    let t = parse_term(text.trim(), &th.signature)?;
    typecheck(&t, &th.signature)?;
    Ok(t)
}

/// The canonical word of a term in theory B, R or G.
pub fn normalize_text(theory: TheoryName, text: &str) -> CliResult<CanonWord> {
    let t = parse_checked_term(text, theory)?;
    Ok(match theory {
        TheoryName::B => canonicalize_b(&t)?,
        TheoryName::R => canonicalize_r(&t)?,
        TheoryName::G => normalize_g(&t)?,
        other => return fail(format!("theory {other} has no canonical words")),
    })
}

/// The semantics of a term as JSON: a matrix, a relation or a strategy.
pub fn interp_text(theory: TheoryName, text: &str) -> CliResult<Value> {
    let t = parse_checked_term(text, theory)?;
    Ok(match theory {
        TheoryName::B => interp_b(&t)?.to_json_value(),
        TheoryName::R => interp_r(&t)?.to_json_value(),
        TheoryName::G => evaluate(&GamesModel, &t)?.to_json_value(),
        other => return fail(format!("interp supports B, R and G, not {other}")),
    })
}

/// A strategy from JSON, a canonical word of the games presentation, or a
/// term over the generators of strategies.
pub fn load_strategy(text: &str) -> CliResult<CyclicStrategy> {
    let text = text.trim();
    if text.starts_with('{') {
        let v: Value = serde_json::from_str(text)?;
        return Ok(CyclicStrategy::from_json_value(&v)?);
    }
    if let Ok(w) = text.parse::<CanonWord>() {
        return Ok(canon_to_strategy(&w)?.into_cyclic());
    }
    let t = parse_checked_term(text, TheoryName::G)?;
    Ok(evaluate(&GamesModel, &t)?.into_cyclic())
}

/// The theory of dual objects read inside the signature of strategies, with
/// `L = P`, `R = O`.
fn duality_in_games() -> EquationalTheory {
    let d = builtin_theory(TheoryName::D);
    let gen = |g: &str| if g == "eta" { "etaOP".to_string() } else { "epsOP".to_string() };
    let obj = |c: char| if c == 'L' { 'P' } else { 'O' };
    let relations = d
        .relations
        .iter()
        .map(|r| Relation {
            name: r.name.clone(),
            lhs: r.lhs.rename(&gen, &obj),
            rhs: r.rhs.rename(&gen, &obj),
        })
        .collect();
    EquationalTheory::new("D", games_signature(), relations).expect("renaming preserves types")
}

pub fn model_report(theory: TheoryName, model: Option<ModelArg>, derived: bool) -> CliResult<ModelReport> {
    let mut th = match theory {
        TheoryName::D => duality_in_games(),
        other => builtin_theory(other),
    };
    if derived {
        if theory != TheoryName::G {
            return fail("--derived applies to theory G only");
        }
        th.relations.extend(derived_games_equations());
    }
    let model = model.unwrap_or(match theory {
        TheoryName::M => ModelArg::Simplex,
        TheoryName::B => ModelArg::Mrel,
        TheoryName::R => ModelArg::Rel,
        TheoryName::D | TheoryName::G => ModelArg::Games,
    });
    Ok(match model {
        ModelArg::Mrel => check_model(&MRelModel, &th)?,
        ModelArg::Rel => check_model(&RelModel, &th)?,
        ModelArg::Simplex => check_model(&SimplexModel, &th)?,
        ModelArg::Games => check_model(&GamesModel, &th)?,
    })
}

/// Typed words up to `bound` letters, plus every untyped string of up to
/// four letters with indices below `bound`.
pub fn bounded_confluence(theory: TheoryName, bound: usize) -> CliResult<ConfluenceReport> {
    let short = bound.min(4);
    Ok(match theory {
        TheoryName::B | TheoryName::R => {
            let rules = if theory == TheoryName::B { rules_b() } else { rules_r() };
            let mut words = enumerate_words_b(bound);
            words.extend(all_words(&alphabet(&[Family::H, Family::E, Family::W], bound, false), short));
            check_local_confluence(&rules, words)
        }
        TheoryName::G => {
            let mut words = enumerate_words_g(bound, false);
            let families = [Family::H, Family::E, Family::W, Family::A, Family::B];
            words.extend(all_words(&alphabet(&families, bound, true), short));
            check_local_confluence(&rules_g(), words)
        }
        other => return fail(format!("theory {other} has no rewriting system")),
    })
}

fn emit_json(v: &Value, pretty: bool, out: &mut dyn Write) -> CliResult<()> {
    let s = if pretty { serde_json::to_string_pretty(v)? } else { serde_json::to_string(v)? };
    writeln!(out, "{s}")?;
    Ok(())
}

fn axioms(name: &str) -> CliResult<Box<dyn AxiomSet>> {
    axiom_set_by_name(name).ok_or_else(|| Failure(format!("unknown axiom set `{name}` (expected default, all or equality)")).into())
}

/// Runs one command; `Ok(false)` means a check ran and failed.
fn execute(cli: Cli, out: &mut dyn Write) -> CliResult<bool> {
    let pretty = cli.pretty;
    match cli.command {
        Command::Normalize { theory, term } => {
            writeln!(out, "{}", normalize_text(theory.into(), &read_input(&term)?)?)?;
        }
        Command::Interp { theory, term } => {
            emit_json(&interp_text(theory.into(), &read_input(&term)?)?, pretty, out)?;
        }
        Command::Expand { theory, word } => {
            let w: CanonWord = read_input(&word)?.trim().parse()?;
            let (t, sig) = match TheoryName::from(theory) {
                TheoryName::B => (canon_to_term_b(&w)?, builtin_theory(TheoryName::B).signature),
                TheoryName::G => (canon_to_term_g(&w)?, games_signature()),
                other => return fail(format!("expand supports B and G, not {other}")),
            };
            writeln!(out, "{}", print_term(&t, &sig))?;
        }
        Command::Compose { first, second } => {
            let s = load_strategy(&read_input(&first)?)?;
            let t = load_strategy(&read_input(&second)?)?;
            let c = compose_strategies(&s, &t)?;
            let ok = c.is_strategy();
            let v = json!({ "composite": c.to_json_value(), "is_strategy": ok, "cyclic": !ok });
            emit_json(&v, pretty, out)?;
        }
        Command::CheckModel { theory, model, derived } => {
            let report = model_report(theory.into(), model, derived)?;
            write!(out, "{report}")?;
            return Ok(report.all_hold());
        }
        Command::CompileProof { proof, axioms: ax } => {
            let ax = axioms(&ax)?;
            let p = parse_proof(&read_input(&proof)?)?;
            check_proof(&p, ax.as_ref())?;
            emit_json(&interp_proof(&p, ax.as_ref())?.to_json_value(), pretty, out)?;
        }
        Command::Axioms {
            action: AxiomsAction::Query { pair, axioms: ax },
        } => {
            let ax = axioms(&ax)?;
            let (p, q) = parse_prop_pair(&pair)?;
            let verdict = if ax.contains(&p, &q) { "member" } else { "not a member" };
            writeln!(out, "({p}, {q}): {verdict}")?;
        }
        Command::Render { what } => match what {
            RenderWhat::Term { input, theory, format } => {
                let name = TheoryName::from(theory);
                let t = parse_checked_term(&read_input(&input)?, name)?;
                let sig = builtin_theory(name).signature;
                let s = match format {
                    Format::Ascii => term_ascii(&t, &sig)?,
                    Format::Dot => term_dot(&t, &sig)?,
                };
                write!(out, "{s}")?;
            }
            RenderWhat::Strategy { input, format } => {
                let s = load_strategy(&read_input(&input)?)?;
                let text = match format {
                    Format::Ascii => strategy_ascii(&s),
                    Format::Dot => strategy_dot(&s),
                };
                write!(out, "{text}")?;
            }
        },
        Command::Confluence { theory, bound } => {
            let report = bounded_confluence(theory.into(), bound)?;
            write!(out, "{report}")?;
            return Ok(report.is_confluent());
        }
        Command::Theory {
            action: TheoryAction::Dump { name },
        } => emit_json(&builtin_theory(name.into()).to_json_value(), pretty, out)?,
    }
    Ok(true)
}

/// Parses `args` (program name first) and runs the command, returning the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
