#!/usr/bin/env python3
"""Runs the kneser binary over a small corpus, validates every JSON document
against the schema and checks byte-identical output across thread counts."""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema


def run(binary, args, threads="1"):
    env = dict(os.environ, KNESER_THREADS=threads)
    proc = subprocess.run([binary, *args], capture_output=True, env=env, check=False)
    return proc.returncode, proc.stdout


def main():
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    failures = []

    with tempfile.TemporaryDirectory() as tmp:
        def path(name):
            return os.path.join(tmp, name)

        files = {
            "bd4": ("bd4simplex", path("bd4.tri")),
            "sum": ("sum:rp3+l52", path("sum.tri")),
            "l31sum": ("sum:l31+rp3", path("l31sum.tri")),
            "patch": ("patch:tiny_sphere", path("tiny.patch")),
        }
        cases = []
        for kind, target in files.values():
            code, _ = run(binary, ["generate", kind, "-o", target])
            if code != 0:
                failures.append(f"generate {kind} exited {code}")
            cases.append((["generate", kind], 0))
        cases += [
            (["validate", files["bd4"][1]], 0),
            (["validate", files["patch"][1]], 0),
            (["enumerate", "--pl-area", "--verify-diam", files["bd4"][1]], 0),
            (["decompose", "--oracle-check", files["sum"][1]], 0),
            (["decompose", "--oracle-check", files["l31sum"][1]], 1),
            (["montecarlo", "--samples", "300", "--seed", "2", "--sweep", "10:60:3", files["patch"][1]], 0),
        ]

        for args, expected in cases:
            outputs = set()
            for threads in ("1", "2", "4"):
                code, out = run(binary, args, threads)
                if code != expected:
                    failures.append(f"{' '.join(args)}: exit {code}, expected {expected}")
                outputs.add(out)
            if len(outputs) != 1:
                failures.append(f"{' '.join(args)}: output depends on thread count")
            try:
                doc = json.loads(next(iter(outputs)))
            except json.JSONDecodeError as e:
                failures.append(f"{' '.join(args)}: invalid JSON ({e})")
                continue
            for error in validator.iter_errors(doc):
                failures.append(f"{' '.join(args)}: {error.message}")

    for f in failures:
        print(f)
    print(f"{len(failures)} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
