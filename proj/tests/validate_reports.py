"""Validate CLI reports and input files against the shipped JSON schemas,
and check that reruns with the same seed differ only in wall time."""
import json
import subprocess
import sys
from pathlib import Path

import jsonschema

cli, schema_dir, data_dir = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
report_schema = json.loads((schema_dir / "verification_report.schema.json").read_text())
input_schema = json.loads((schema_dir / "algebra_input.schema.json").read_text())
jsonschema.Draft202012Validator.check_schema(report_schema)
jsonschema.Draft202012Validator.check_schema(input_schema)

commands = [
    ["verify-resonance", "--genus", "3", "--samples", "10"],
    ["alexander", "--preset", "free3", "--qmax", "3"],
    ["alexander", "--input", str(data_dir / "indecomposable_form.json"), "--qmax", "3"],
    ["alexander", "--preset", "free4", "--qmax", "4", "--max-nnz", "50"],
    ["orbit", "--genus", "3", "--torsion", "2", "--seed", "7"],
    ["invariance", "--genus", "3", "--set", "point-5"],
    ["crosscheck", "--random", "3", "--seed", "2"],
    ["nonvanishing", "--genus", "3"],
    ["irreducibility", "--genus", "3"],
]

failed = 0
for args in commands:
    runs = []
    for _ in range(2):
        proc = subprocess.run([cli, *args], capture_output=True, text=True)
        report = json.loads(proc.stdout)
        jsonschema.validate(report, report_schema)
        runs.append(report)
    for r in runs:
        r.pop("wall_time_seconds")
    if json.dumps(runs[0]) != json.dumps(runs[1]):
        print("not reproducible:", args)
        failed += 1

jsonschema.validate(json.loads((data_dir / "indecomposable_form.json").read_text()), input_schema)
try:
    jsonschema.validate(json.loads((data_dir / "bad_triplet.json").read_text()), input_schema)
    print("bad_triplet.json unexpectedly valid")
    failed += 1
except jsonschema.ValidationError:
    pass

print(f"{len(commands)} commands validated, {failed} problems")
sys.exit(1 if failed else 0)
