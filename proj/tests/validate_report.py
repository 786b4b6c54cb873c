"""Runs `pod2 report-all --format json` and validates the output against the report schema."""

import json
import subprocess
import sys

import jsonschema


def main() -> int:
    binary, schema_path = sys.argv[1], sys.argv[2]
    extra = sys.argv[3:]
    proc = subprocess.run([binary, "report-all", "--format", "json", *extra], capture_output=True, text=True)
    if proc.returncode != 0:
        print(proc.stderr, file=sys.stderr)
        print(f"report-all exited {proc.returncode}", file=sys.stderr)
        return 1
    report = json.loads(proc.stdout)
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.validate(report, schema)
    names = [c["name"] for c in report["claims"]]
    if len(names) != len(set(names)) or set(names) != set(report["meta"]["orders"]):
        print("claim names and meta.orders disagree", file=sys.stderr)
        return 1
    print(f"{len(names)} claims validated")
    return 0


if __name__ == "__main__":
    sys.exit(main())
