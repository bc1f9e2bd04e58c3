"""Validates hstar_lab JSON output against the shipped schema."""

import json
import subprocess
import sys

import jsonschema

CASES = [
    ["hstar", "--r", "1", "--k", "2", "--n", "4"],
    ["hstar", "--r", "2", "--k", "5", "--n", "6", "--method", "enum"],
    ["hstar", "--r", "3", "--k", "40", "--n", "40", "--method", "formula"],
    ["enum", "--k", "3", "--n", "4", "--d", "1"],
    ["enum", "--k", "4", "--n", "5", "--d", "2", "--r", "1", "--hypersimplicial", "--limit", "3"],
    ["verify", "--suite", "prop2", "--max-n", "4", "--format", "json"],
]


def main() -> int:
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as fh:
        schema = json.load(fh)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args in CASES:
        out = subprocess.run([binary, *args], check=True, capture_output=True, text=True).stdout
        for line in out.splitlines():
            errors = list(validator.iter_errors(json.loads(line)))
            if errors:
                failures += 1
                print(f"{' '.join(args)}: {errors[0].message}")
    print(f"{len(CASES)} invocations checked, {failures} invalid payloads")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
