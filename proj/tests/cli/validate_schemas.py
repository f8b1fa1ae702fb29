#!/usr/bin/env python3
"""Runs every sample problem through the CLI and validates problems and reports."""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

wcm, root = sys.argv[1], pathlib.Path(sys.argv[2])
problem_schema = json.loads((root / "schemas/problem.schema.json").read_text())
report_schema = json.loads((root / "schemas/report.schema.json").read_text())
jsonschema.Draft202012Validator.check_schema(problem_schema)
jsonschema.Draft202012Validator.check_schema(report_schema)
problems = jsonschema.Draft202012Validator(problem_schema)
reports = jsonschema.Draft202012Validator(report_schema)

failures = 0
files = sorted((root / "problems").glob("*.json"))
if not files:
    sys.exit("no sample problems found")
with tempfile.TemporaryDirectory() as tmp:
    for path in files:
        problem = json.loads(path.read_text())
        errors = [e.message for e in problems.iter_errors(problem)]
        out = pathlib.Path(tmp) / (path.stem + ".report.json")
        for extra in ([], ["--timings"]):
            run = subprocess.run([wcm, "run", str(path), "--out", str(out), *extra], capture_output=True, text=True)
            if run.returncode != 0:
                errors.append(f"exit {run.returncode}: {run.stderr.strip()}")
                continue
            errors += [e.message for e in reports.iter_errors(json.loads(out.read_text()))]
        status = "ok" if not errors else "FAILED"
        print(f"{path.name}: {status}")
        for e in errors:
            print(f"  {e}")
        failures += bool(errors)

    # invalid samples must still parse as JSON but be rejected by the tool
    for path in sorted((root / "problems/invalid").glob("*.json")):
        run = subprocess.run([wcm, "run", str(path)], capture_output=True, text=True)
        ok = run.returncode == 2 and "line " in run.stderr
        print(f"invalid/{path.name}: {'rejected' if ok else 'NOT rejected'} ({run.stderr.strip()})")
        failures += not ok

sys.exit(1 if failures else 0)
