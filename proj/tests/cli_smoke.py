"""Runs the hbtrace binary end to end: exit codes, text headers, schema-valid JSON."""

import json
import subprocess
import sys

import jsonschema

BINARY, SCHEMA = sys.argv[1], sys.argv[2]

with open(SCHEMA) as handle:
    validator = jsonschema.Draft7Validator(json.load(handle))

failures = []


def run(args, stdin=""):
    proc = subprocess.run([BINARY, *args], input=stdin, capture_output=True, text=True, timeout=600)
    return proc.returncode, proc.stdout, proc.stderr


def check(label, ok, detail=""):
    if not ok:
        failures.append(f"{label}: {detail}")


def case(args, code=0, stdin="", result=None):
    label = " ".join(args)
    got, out, err = run(args, stdin)
    check(label, got == code, f"exit {got}, expected {code}; stderr: {err.strip()}")
    if code not in (0, 4):
        check(label, err.strip() != "", "no diagnostic on stderr")
        return
    check(label, out.startswith("basis: "), "text report lacks a basis line")
    got, out, err = run([*args, "--format", "json"], stdin)
    check(label + " --format json", got == code, f"exit {got}; stderr: {err.strip()}")
    try:
        report = json.loads(out)
    except json.JSONDecodeError as exc:
        check(label, False, f"invalid JSON: {exc}")
        return
    errors = sorted(validator.iter_errors(report), key=lambda e: list(e.path))
    for error in errors[:3]:
        check(label, False, f"schema: {'/'.join(map(str, error.path))}: {error.message}")
    if result is not None:
        check(label, result(report), "unexpected result")


case(["decompose", "x^2*y, x*y^3"])
case(["height", "x1*x2, x2*x3"], result=lambda r: r["result"]["height"] == 1)
case(["height"], stdin="x1*x3, x2*x4\n", result=lambda r: r["result"]["height"] == 2)
case(["polarize", "x^2, y^3"])
case(["dual", "x1*x2, x2*x3"], result=lambda r: r["result"]["alexander_dual"]["generators"] == ["x2", "x1*x3"])
case(["localize", "x^2, x*y*z", "--at", "x,y"])
case(["graph", "1 2 1 1\n2 3 2 1"], result=lambda r: r["result"]["cochordal"])
case(["graph", "1 2 1 1; 3 4 1 1"], result=lambda r: not r["result"]["cohen_macaulay"])
case(["is-cm", "x^3, x^2*y, y^2"], result=lambda r: r["result"]["cohen_macaulay"])
case(["betti", "x^2, x*y, y^2"], result=lambda r: r["result"]["betti"]["totals"] == [1, 3, 2])
case(["hb-matrix", "x^3, x^2*y, y^2"])
case(["trace", "x^3, x^2*y, y^2"],
     result=lambda r: r["result"]["nearly_gorenstein"] and r["result"]["trace"]["generators"] == ["x", "y"])
case(["trace", "x1^2, x1*x2, x2^2", "--vars", "x1,x2,x3"], result=lambda r: not r["proven"])
case(["classify", "x1*x3, x1*x4, x2*x4"], result=lambda r: r["result"]["classification"]["label"] == "E")
case(["verify-kernel-xy", "x^3*y, x^2*y^2, x*y^4"], result=lambda r: r["result"]["verdict"] == "confirmed")
case(["verify-inclusion", "x1*x3, x1*x4, x2*x4"], result=lambda r: r["result"]["verdict"] == "confirmed")
case(["verify-conjecture", "x^3, x^2*y, y^2", "--bound", "6,4"],
     result=lambda r: r["degree_bound"] == "x^6*y^4")
case(["sweep", "--max-exp", "5"], result=lambda r: r["result"]["mismatches"] == 0)
case(["sweep", "--family", "patterns", "--max-exp", "2"], result=lambda r: r["result"]["mismatches"] == 0)
case(["sweep", "--family", "generic", "--count", "10", "--seed", "3"])
case(["sweep", "--family", "frontier", "--count", "6", "--seed", "3"])

case(["trace", "x^-1"], code=2)
case(["trace", "x*z", "--vars", "x,y"], code=2)
case(["graph", "1 2 1 1\n1 2 2 2"], code=2)
case(["trace", "x^2, x*y"], code=1)
case(["verify-conjecture", "x^9, x^5*y^5, y^9", "--cap", "10"], code=3)
case(["frobnicate", "x"], code=2)
case(["trace", "x", "--no-such-flag"], code=2)

code, out, _ = run(["--version"])
check("--version", code == 0 and out.strip() != "", f"exit {code}")

a = run(["sweep", "--family", "frontier", "--count", "4", "--seed", "11"])
b = run(["sweep", "--family", "frontier", "--count", "4", "--seed", "11"])
check("seeded sweep", a == b, "output differs between identical runs")

for line in failures:
    print("FAIL", line)
print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
