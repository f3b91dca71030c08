"""End-to-end checks of the modhodge executable: output, JSON and exit codes."""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema

CLI, SCHEMA = sys.argv[1], sys.argv[2]
with open(SCHEMA) as f:
    schema = json.load(f)
failures = []


def run(*args, env=None):
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=env, timeout=240)


def expect(name, condition, detail=""):
    print(("ok   " if condition else "FAIL ") + name)
    if not condition:
        failures.append(f"{name}: {detail}")


def json_run(*args):
    result = run("--json", "-", *args)
    document = json.loads(result.stdout) if result.stdout.strip() else None
    if document is not None:
        jsonschema.validate(document, schema)
    return result, document


result = run("proj-coh", "--n", "2", "--d", "-3")
expect("proj-coh prints the table", result.returncode == 0 and '{"2":1}' in result.stdout, result.stdout)

result, doc = json_run("cube-check", "--n", "1", "--r", "1", "--q", "1", "--window", "4")
expect("cube-check passes", result.returncode == 0 and doc["summary"]["failed"] == 0, result.stderr)
expect("cube-check statement key", doc["reports"][0]["statement"] == "cube-split-exact")

result, doc = json_run("blowup-check", "--r", "2,0,0", "--center", "1,2,3", "--q", "2", "--window", "2")
twists = sorted(p["twist"] for p in doc["reports"][0]["parameters"]["profile"]["pieces"])
expect("blowup-check passes with twists in (-3, 0)", result.returncode == 0 and all(-3 < t < 0 for t in twists), twists)

result, doc = json_run("dvr-check", "--e", "2", "--n", "3")
expect("dvr-check passes", result.returncode == 0 and doc["summary"]["passed"] == 2, result.stderr)

result, doc = json_run("kunneth-check", "--a", "2", "--b", "3")
expect("kunneth-check passes", result.returncode == 0 and doc["summary"]["total"] == 1, result.stderr)

result, doc = json_run("membership", "--r", "2,0", "--form", "(x1^-1) * d(x2)", "--kind", "M")
expect("membership of x1^-1 dx2", result.returncode == 0 and doc["reports"][0]["parameters"]["member"] is True)

result, doc = json_run("ses-check", "--r", "1,0", "--j0", "1", "--q", "1", "--window", "3")
expect("ses-check uses one-based j0", result.returncode == 0 and doc["reports"][0]["parameters"]["j0"] == 1)

first = run("--json", "-", "run", "membership", "--seed", "7").stdout
env = dict(os.environ, MODHODGE_WORKERS="1")
second = run("--json", "-", "run", "membership", "--seed", "7", env=env).stdout
expect("run output is byte-stable across worker counts", first == second and first != "")

for name, args in [
    ("unknown subcommand", ["frobnicate"]),
    ("missing required option", ["proj-coh", "--n", "2"]),
    ("malformed exponents", ["basis", "--r", "1,x"]),
    ("j0 outside the support", ["ses-check", "--r", "1,0", "--j0", "2"]),
    ("center outside the divisor", ["blowup-check", "--r", "0,0,1", "--center", "1,2"]),
    ("nonpositive ramification", ["dvr-check", "--e", "0", "--n", "1"]),
    ("bad form text", ["membership", "--r", "1", "--form", "dlog("]),
    ("unknown suite", ["run", "nothing"]),
    ("zero window", ["run", "basis", "--window", "0"]),
]:
    result = run(*args)
    expect(f"usage error exits 2: {name}", result.returncode == 2, f"exit {result.returncode}: {result.stderr}")

with tempfile.TemporaryDirectory() as tmp:
    unwritable = os.path.join(tmp, "missing", "out.json")
    result = run("--json", unwritable, "proj-coh", "--n", "1", "--d", "0")
    expect("unwritable report path exits 3", result.returncode == 3, f"exit {result.returncode}")

if failures:
    print("\n".join(failures))
    sys.exit(1)
