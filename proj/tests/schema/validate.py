#!/usr/bin/env python3
# Copyright 2026 The Thiele Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runs the CLI over the fixtures and checks every document it reads or
writes against docs/*.schema.json."""

import argparse
import json
import pathlib
import subprocess
import sys

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

SOLVERS = ["exact", "greedy", "fptas", "additive", "colorcoding", "pav", "delta"]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cli", required=True)
    ap.add_argument("--docs", required=True, type=pathlib.Path)
    ap.add_argument("--fixtures", required=True, type=pathlib.Path)
    ap.add_argument("--work", required=True, type=pathlib.Path)
    args = ap.parse_args()
    args.work.mkdir(parents=True, exist_ok=True)

    inst = json.loads((args.docs / "instance.schema.json").read_text())
    rep = json.loads((args.docs / "report.schema.json").read_text())
    registry = Registry().with_resources(
        [(s["$id"], Resource.from_contents(s)) for s in (inst, rep)])
    inst_v = Draft202012Validator(inst, registry=registry)
    rep_v = Draft202012Validator(rep, registry=registry)

    failures = 0
    checked = 0

    def check(validator, doc, label):
        nonlocal failures, checked
        checked += 1
        for err in validator.iter_errors(doc):
            failures += 1
            print(f"{label}: {err.json_path}: {err.message}")

    def run(argv, label):
        out = subprocess.run([args.cli] + argv, capture_output=True, text=True)
        if out.returncode == 2:
            # pav dispatch refuses non-PAV instances; that is not a schema issue
            return
        check(rep_v, json.loads(out.stdout), label)

    fixtures = sorted(args.fixtures.glob("*.json"))
    for path in fixtures:
        check(inst_v, json.loads(path.read_text()), path.name)
        run(["analyze", "--input", str(path)], f"{path.name} analyze")
        for solver in SOLVERS:
            run(["solve", "--input", str(path), "--solver", solver,
                 "--epsilon", "1/2", "--t", "1"], f"{path.name} {solver}")
        kernel = args.work / f"{path.stem}.kernel.json"
        run(["kernelize", "--input", str(path), "--epsilon", "1/2",
             "--output", str(kernel)], f"{path.name} kernelize")
        check(inst_v, json.loads(kernel.read_text()), kernel.name)

    generated = args.work / "generated.json"
    subprocess.run([args.cli, "gen", "--candidates", "10", "--voters", "12",
                    "--max-d", "2", "--seed", "9", "--rule", "random-owa",
                    "--k", "2", "--output", str(generated)],
                   check=True, capture_output=True)
    check(inst_v, json.loads(generated.read_text()), generated.name)

    print(f"{checked} documents checked, {failures} schema errors")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
