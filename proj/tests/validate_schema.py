#!/usr/bin/env python3
# Copyright 2026 The qhide Authors
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
"""Runs qhide with the given arguments and validates its JSON output."""

import argparse
import json
import subprocess
import sys

import jsonschema


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("schema")
    parser.add_argument("binary")
    parser.add_argument("args", nargs=argparse.REMAINDER)
    opts = parser.parse_args()

    with open(opts.schema, encoding="utf-8") as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)

    proc = subprocess.run([opts.binary, *opts.args], capture_output=True, text=True, check=False)
    if proc.returncode != 0:
        sys.exit(f"qhide exited with {proc.returncode}: {proc.stderr}")
    jsonschema.Draft202012Validator(schema).validate(json.loads(proc.stdout))
    print("valid:", " ".join(opts.args))


if __name__ == "__main__":
    main()
