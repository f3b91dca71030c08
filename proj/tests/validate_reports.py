"""Validates a modhodge --json report file against the published schema."""

import argparse
import json
import sys

import jsonschema


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("schema")
    parser.add_argument("reports")
    parser.add_argument("--require", nargs="*", default=[], help="statements that must appear")
    args = parser.parse_args()

    with open(args.schema) as f:
        schema = json.load(f)
    with open(args.reports) as f:
        document = json.load(f)

    try:
        jsonschema.validate(document, schema)
    except jsonschema.ValidationError as error:
        print(f"schema violation: {error.message}")
        return 1

    reports = document["reports"]
    summary = document["summary"]
    passed = sum(r["status"] == "pass" for r in reports)
    if summary != {"total": len(reports), "passed": passed, "failed": len(reports) - passed}:
        print(f"summary {summary} does not match the reports")
        return 1

    present = {r["statement"] for r in reports}
    missing = [s for s in args.require if s not in present]
    if missing:
        print("missing statements: " + ", ".join(missing))
        return 1

    print(f"{len(reports)} reports valid, {len(present)} statements")
    return 0


if __name__ == "__main__":
    sys.exit(main())
