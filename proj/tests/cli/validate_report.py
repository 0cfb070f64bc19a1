#!/usr/bin/env python3
# Copyright 2026 The AFE Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runs the afe binary on the synthetic suite and validates its JSON output."""

import json
import pathlib
import random
import subprocess
import sys
import tempfile

import jsonschema

QUICK = ["--ga-pop", "10", "--ga-elite", "4", "--ga-iters", "2", "--pfi-repeats", "2",
         "--background-size", "8", "--shap-sample-cap", "10"]


def run(cmd):
    proc = subprocess.run(cmd, capture_output=True, text=True)
    if proc.returncode != 0:
        sys.exit(f"{' '.join(cmd)} exited {proc.returncode}\n{proc.stderr}")


def validate(path, schema_path):
    schema = json.loads(schema_path.read_text())
    jsonschema.Draft202012Validator(schema).validate(json.loads(path.read_text()))
    print(f"ok {path.name} against {schema_path.name}")


def main():
    afe, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    with tempfile.TemporaryDirectory() as tmp:
        tmp = pathlib.Path(tmp)
        bench = tmp / "bench"
        run([afe, "benchmark", "--suite", "synth", "--synth-rows", "200", "--models", "dt,lr",
             "--out", str(bench), "--threads", "2", *QUICK])
        validate(bench / "benchmark.json", schema_dir / "benchmark.schema.json")
        validate(bench / "reports" / "dt.json", schema_dir / "report.schema.json")

        # A small CSV written here, ranked through the rank subcommand.
        rng = random.Random(7)
        rows = ["a,b,c,d,e,y"]
        for _ in range(120):
            x = [rng.gauss(0, 1) for _ in range(5)]
            rows.append(",".join(f"{v:.6f}" for v in x) + f",{int(x[0] + x[1] > 0)}")
        data = tmp / "toy.csv"
        data.write_text("\n".join(rows) + "\n")
        schema = tmp / "toy.schema.json"
        roles = {c: "feature-numeric" for c in "abcde"}
        roles["y"] = "label"
        schema.write_text(json.dumps(roles))
        out = tmp / "toy_report.json"
        run([afe, "rank", "--data", str(data), "--schema", str(schema), "--model", "lr",
             "--out", str(out), *QUICK])
        validate(out, schema_dir / "report.schema.json")
        if not (tmp / "toy_report.csv").exists():
            sys.exit("ranking CSV missing")

if __name__ == "__main__":
    main()
