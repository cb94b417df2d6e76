#!/usr/bin/env python3
# Copyright 2026 The pstkit Authors
#
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

"""Runs the pstkit tool over a fixed set of commands and validates every
emitted JSON document against the shipped schema.

Usage: validate_reports.py <pstkit binary> <schema.json> <graphs.g6>
"""

import json
import subprocess
import sys
import tempfile

import jsonschema

COMMANDS = [
    ["spectrum", "--named", "star:3"],
    ["spectrum", "--g6", "C~"],
    ["spectrum", "--named", "path:6"],
    ["certify", "--named", "path:3", "--u", "0", "--v", "2"],
    ["certify", "--named", "path:4", "--u", "0", "--v", "3"],
    ["certify", "--named", "cycle:6", "--u", "0", "--v", "3"],
    ["certify", "--named", "hypercube:3", "--u", "0", "--v", "7"],
    ["certify", "--named", "cartesian(path:3,path:3)", "--u", "0", "--v", "8"],
    ["tensor", "--x", "complete:4", "--y", "cycle:4", "--u", "0", "--v", "2"],
    ["tensor", "--x", "cycle:4", "--y", "cycle:4", "--u", "0", "--v", "2"],
    ["tensor", "--x", "star:3", "--y", "cycle:4", "--u", "0", "--v", "2", "--min-power"],
    ["tensor", "--x", "star:3", "--y", "path:2", "--u", "0", "--v", "1", "--min-power"],
    ["tensor", "--x", "cycle:4", "--y", "cycle:4", "--u", "0", "--v", "2", "--min-power"],
    ["tensor", "--x", "star:3", "--y", "path:4", "--u", "0", "--v", "3"],
    ["switching", "--x", "cartesian(complete:4,complete:4)", "--complement"],
    ["switching", "--x", "complete:3", "--complement"],
    ["switching", "--x", "cycle:4", "--matching"],
    ["switching", "--x", "cycle:4", "--y", "complement(cycle:4)"],
    ["switching", "--x", "path:4", "--y", "path:4"],
    ["scan", "--named", "cycle:4", "--u", "0", "--v", "2", "--t-max", "4"],
]


def run(binary, args):
    proc = subprocess.run([binary, *args], capture_output=True, text=True, check=False)
    if proc.returncode != 0:
        raise SystemExit(f"{' '.join(args)}: exit {proc.returncode}: {proc.stderr}")
    return [line for line in proc.stdout.splitlines() if line.strip()]


def main():
    binary, schema_path, corpus = sys.argv[1:4]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    lines = []
    for args in COMMANDS:
        lines += run(binary, args)
    # A slice of the corpus keeps the run short.
    with open(corpus, encoding="utf-8") as f:
        graphs = [g.strip() for g in f if g.strip()][::25]
    with tempfile.NamedTemporaryFile("w", suffix=".g6", delete=False) as f:
        f.write("\n".join(graphs) + "\n")
        sample = f.name
    lines += run(binary, ["search", "--input", sample, "--jobs", "2"])
    with tempfile.NamedTemporaryFile("w", suffix=".jsonl", delete=False) as f:
        f.write("\n".join(lines) + "\n")
        reports = f.name
    verified = run(binary, ["verify", "--input", reports])
    lines += verified

    errors = 0
    for line in lines:
        doc = json.loads(line)
        for err in validator.iter_errors(doc):
            errors += 1
            print(f"{doc.get('type')}: {err.message}", file=sys.stderr)
    failed = [json.loads(v) for v in verified if not json.loads(v)["pass"]]
    for doc in failed:
        print(f"verify failed: {doc['graph6']} {doc['u']}->{doc['v']}", file=sys.stderr)
    print(f"{len(lines)} documents, {errors} schema errors, {len(verified)} claims, {len(failed)} failed")
    return 1 if errors or failed or not verified else 0


if __name__ == "__main__":
    sys.exit(main())
