# Copyright 2026 The causal-games Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Smoke test for the Python extension.

Build first:

    cargo build -p causal-games-py --release --features extension-module

then run this script from the repository root.
"""

import json
import shutil
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def locate_library():
    for profile in ("release", "debug"):
        for name in ("libcausal_games_py.so", "libcausal_games_py.dylib", "causal_games_py.dll"):
            path = ROOT / "target" / profile / name
            if path.exists():
                return path
    sys.exit("extension not built; run: cargo build -p causal-games-py --release --features extension-module")


def load():
    lib = locate_library()
    suffix = ".pyd" if lib.suffix == ".dll" else ".so"
    tmp = Path(tempfile.mkdtemp())
    shutil.copy(lib, tmp / f"causal_games{suffix}")
    sys.path.insert(0, str(tmp))
    import causal_games

    return causal_games


def main():
    cg = load()
    example = "((delta * eps) ; (id(1) * delta) ; (mu * eta * id(1))) * id(1)"
    matrix = json.loads(cg.interp("B", example))
    assert matrix["entries"] == [[2, 0, 1, 0], [0, 0, 0, 0], [0, 0, 0, 1]], matrix
    assert cg.normalize("B", "id(1)") == "W0 E H Z"
    assert cg.normalize("G", "(id(P) * etaOP) ; (epsOP * id(P))") == "W0 EP HP Z"

    composite, acyclic = cg.compose("muP", "deltaP")
    assert acyclic and len(json.loads(composite)["pairs"]) == 4

    ok, report = cg.check_model("G", derived=True)
    assert ok, report

    assert cg.axiom_member("(x & y, top)")
    assert not cg.axiom_member("(top, bot)")

    for gen in ("muP", "etaOP", "gammaO"):
        strategy = cg.compile_proof(cg.witness(gen))
        assert strategy == cg.interp("G", gen), gen
        assert cg.word_to_strategy(cg.strategy_to_word(strategy)) == strategy

    try:
        cg.normalize("B", "mu ; mu")
    except ValueError as err:
        assert "mu" in str(err) or "type" in str(err).lower(), err
    else:
        raise AssertionError("ill-typed term accepted")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
