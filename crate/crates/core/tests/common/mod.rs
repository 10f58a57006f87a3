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


//! Golden-file runner shared by the integration tests.
//!
//! Each directory under `tests/golden` holds `args` (one argument per line),
//! any input files, `expected.out` and `expected.code`. The binary runs with
//! the case directory as working directory. Setting `GOLDEN_BLESS=1`
//! rewrites the expectations.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Runs every case; returns the case name and a mismatch description.
pub fn run_golden_suite() -> Vec<(String, Result<(), String>)> {
    let bless = std::env::var_os("GOLDEN_BLESS").is_some();
    let mut cases: Vec<PathBuf> = fs::read_dir(golden_dir())
        .expect("golden directory")
        .map(|e| e.expect("entry").path())
        .filter(|p| p.is_dir())
        .collect();
    cases.sort();
    cases
        .into_iter()
        .map(|dir| {
            let name = dir.file_name().expect("name").to_string_lossy().into_owned();
            let args_text = fs::read_to_string(dir.join("args")).expect("args file");
            let args: Vec<&str> = args_text.lines().collect();
            let output = Command::new(env!("CARGO_BIN_EXE_causal-games"))
                .args(&args)
                .current_dir(&dir)
                .env_remove("CAUSAL_GAMES_SEED")
                .output()
                .expect("binary runs");
            let code = format!("{}\n", output.status.code().unwrap_or(-1));
            if bless {
                fs::write(dir.join("expected.out"), &output.stdout).expect("write");
                fs::write(dir.join("expected.code"), &code).expect("write");
                return (name, Ok(()));
            }
            let expected_out = fs::read(dir.join("expected.out")).unwrap_or_default();
            let expected_code = fs::read_to_string(dir.join("expected.code")).unwrap_or_default();
            let verdict = if output.stdout != expected_out {
                Err(format!(
                    "stdout differs:\n--- expected\n{}\n--- actual\n{}",
                    String::from_utf8_lossy(&expected_out),
                    String::from_utf8_lossy(&output.stdout)
                ))
            } else if code != expected_code {
                Err(format!("exit code {} (expected {})", code.trim(), expected_code.trim()))
            } else {
                Ok(())
            };
            (name, verdict)
        })
        .collect()
}
