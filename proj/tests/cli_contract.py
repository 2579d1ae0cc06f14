"""Runs the w22 CLI over every command: JSON must validate against the
shipped schema, repeat runs must be byte-identical, exit codes must match."""

import json
import os
import subprocess
import sys

import jsonschema

CLI, SCHEMA = sys.argv[1], sys.argv[2]

RUNS = [
    ["bracket", "L[3]", "L[-3]"],
    ["bracket", "W[2]", "W[-5]"],
    ["normalize", "W[1]*L[-1]*z^2 - 1/2*L[0]"],
    ["act", "L[1]*W[2]", "--vector", "L[-2]*W[-1]*w", "--trunc", "3,2,1"],
    ["act", "L[-3]", "--vector", "L[-2]*w", "--trunc", "3,2,1"],
    ["whittaker-solve", "--phi", "1,1,1,1", "--quotient", "(z-1)^1", "--trunc", "4,3,2"],
    ["whittaker-solve", "--phi", "1,2,3,-1", "--trunc", "3,2,1"],
    ["descend", "--vector", "L[-1]*w", "--phi", "1,1,2,3"],
    ["descend", "--vector", "(z+1)*L[-2]*W[-1]*w + W[-3]*w", "--quotient", "(z-2)^2"],
    ["extract", "--vector", "L[-1]*W[-2]*w"],
    ["ann-check", "L[1] - 1"],
    ["ann-check", "L[0]", "--quotient", "(z-1)"],
    ["comp-series", "--quotient", "(z-1/2)^2", "--trunc", "3,2,1"],
    ["decompose", "--quotient", "(z-1)^2*(z+3)"],
    ["closure", "--vector", "(z-1)*w", "--quotient", "(z-1)^2", "--trunc", "3,2,1"],
    ["simplicity", "--quotient", "(z-1)", "--trunc", "3,2,1"],
    ["simplicity", "--trunc", "3,2,1"],
    ["verify", "--suite", "decomposition"],
]

EXIT_CODES = [
    (["descend", "--vector", "L[-1]*"], 2),
    (["descend", "--vector", "L[1]"], 2),
    (["frobnicate"], 2),
    (["bracket", "L[1]"], 2),
    (["whittaker-solve", "--trunc", "4,3"], 2),
    (["whittaker-solve", "--phi", "1,1,1"], 2),
    (["whittaker-solve", "--quotient", "(z^2-1)"], 2),
    (["verify", "--suite", "no-such-check"], 2),
    (["descend", "--vector", "0*w"], 1),
    (["--help"], 0),
]


def run(args, stdin=None):
    env = dict(os.environ)
    env.pop("W22_TRUNC", None)
    return subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True, env=env)


def main():
    with open(SCHEMA) as f:
        validator = jsonschema.Draft202012Validator(json.load(f))
    failures = []
    for args in RUNS:
        first = run(args + ["--format", "json"])
        second = run(args + ["--format", "json"])
        if first.returncode != 0:
            failures.append(f"{args}: exit {first.returncode}: {first.stderr.strip()}")
            continue
        if first.stdout != second.stdout:
            failures.append(f"{args}: output differs between runs")
        doc = json.loads(first.stdout)
        for err in validator.iter_errors(doc):
            failures.append(f"{args}: {err.json_path}: {err.message}")
        if doc["command"] != args[0]:
            failures.append(f"{args}: command field is {doc['command']}")

    for args, want in EXIT_CODES:
        got = run(args).returncode
        if got != want:
            failures.append(f"{args}: exit {got}, expected {want}")

    piped = run(["descend", "--vector", "-", "--phi", "1,1,2,3", "--format", "json"], stdin="L[-1]*w\n")
    if piped.returncode != 0 or json.loads(piped.stdout)["result"]["terminal"]["text"] != "-12*w":
        failures.append("stdin vector: expected terminal -12*w")

    env_run = subprocess.run([CLI, "whittaker-solve", "--format", "json"], capture_output=True, text=True,
                             env={**os.environ, "W22_TRUNC": "3,2,1"})
    if json.loads(env_run.stdout)["config"]["trunc"]["degree_bound"] != 3:
        failures.append("W22_TRUNC was not used as the default window")

    for line in failures:
        print("FAIL", line)
    print(f"{len(RUNS)} JSON runs, {len(EXIT_CODES)} exit-code cases, {len(failures)} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
