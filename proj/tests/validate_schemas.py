"""Run every CLI command with --format json and validate against schemas/."""

import json
import pathlib
import subprocess
import sys

import jsonschema

CASES = [
    ("factor", ["factor", "--p", "3", "--k", "2", "--n", "8", "--target", "plus"]),
    ("factor", ["factor", "--p", "2", "--k", "3", "--n", "12", "--target", "radical"]),
    ("lift", ["lift", "--p", "3", "--k", "2", "--n", "8", "--factor", "2,1,1"]),
    ("ideals", ["ideals", "--p", "2", "--k", "2", "--n", "4"]),
    ("ideals", ["ideals", "--p", "3", "--k", "2", "--n", "6", "--budget", "4096"]),
    ("classify", ["classify", "cyclic", "--p", "5", "--k", "1", "--n", "2"]),
    ("classify", ["classify", "elementary", "--p", "2", "--m", "3", "--n", "3", "--type", "II"]),
    ("classify", ["classify", "twogroup", "--k", "2", "--n", "2"]),
    ("classify", ["classify", "coprime", "--p", "3", "--k", "2", "--n", "2"]),
    ("classify", ["classify", "rank2", "--p", "3", "--k", "2", "--kp", "1", "--n", "3"]),
    ("classify", ["classify", "standard", "--group", "3,3", "--n", "2"]),
    ("oracle", ["oracle", "--group", "3,9", "--valence", "6"]),
    ("crosscheck", ["crosscheck", "--group", "2,4", "--valence", "4"]),
    ("crosscheck", ["crosscheck", "--ledger"]),
    ("export-map", ["export-map", "--modulus", "5", "--n", "2", "--gen", "3,1"]),
]


def run(exe, args):
    res = subprocess.run([exe, *args], capture_output=True, text=True, check=False)
    if res.returncode != 0:
        raise SystemExit(f"{' '.join(args)}: exit {res.returncode}\n{res.stderr}")
    return res.stdout


def main():
    exe, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {p.name.removesuffix(".schema.json"): json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
    for name, schema in schemas.items():
        jsonschema.Draft202012Validator.check_schema(schema)
    failures = 0
    for name, args in CASES:
        doc = json.loads(run(exe, [*args, "--format", "json"]))
        errors = list(jsonschema.Draft202012Validator(schemas[name]).iter_errors(doc))
        status = "ok" if not errors else f"{len(errors)} errors: {errors[0].message}"
        failures += bool(errors)
        print(f"{name:<11} {' '.join(args[1:]):<60} {status}")
    a = run(exe, ["oracle", "--group", "9,9", "--valence", "12", "--format", "json", "--jobs", "1"])
    b = run(exe, ["oracle", "--group", "9,9", "--valence", "12", "--format", "json", "--jobs", "4"])
    deterministic = a == b and a == run(exe, ["oracle", "--group", "9,9", "--valence", "12", "--format", "json"])
    print(f"determinism across --jobs: {'ok' if deterministic else 'DIFFERS'}")
    failures += not deterministic
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
