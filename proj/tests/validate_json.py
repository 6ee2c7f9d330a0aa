"""Checks qst-verify JSON output against the schemas in schemas/."""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

cli, schema_dir, data_dir = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])

schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
registry = Registry().with_resources(
    (name, Resource.from_contents(s)) for name, s in schemas.items()
)
failed = 0


def check(schema_name, doc, what):
    global failed
    v = jsonschema.Draft202012Validator(schemas[schema_name], registry=registry)
    errors = sorted(v.iter_errors(doc), key=str)
    if errors:
        failed += 1
        print(f"FAIL {what}: {errors[0].message} at {list(errors[0].absolute_path)}")
    else:
        print(f"ok   {what}")


def run(*args, expect):
    p = subprocess.run([cli, *args, "--format", "json"], capture_output=True, text=True)
    if p.returncode != expect:
        global failed
        failed += 1
        print(f"FAIL {' '.join(args)}: exit {p.returncode}, wanted {expect}\n{p.stderr}")
        return None
    return json.loads(p.stdout)


for s in ["algebra", "canonical", "shifts", "consistency", "conformal-factor"]:
    doc = run("--suite", s, expect=0)
    if doc is not None:
        check("suite_result.schema.json", doc, f"suite {s}")

doc = run("--suite", "all", "--count", "5", "--mode", "float", "--timing", expect=0)
if doc is not None:
    check("suite_result.schema.json", doc, "suite all, float")

doc = run("--suite", "algebra", "--inject-fault", "J01,C2", expect=1)
if doc is not None:
    check("suite_result.schema.json", doc, "suite algebra with injected fault")

state_path = data_dir / "two_rays.json"
state = json.loads(state_path.read_text())
check("state.schema.json", state, "state input file")
for i, ray in enumerate(state["rays"]):
    check("ray.schema.json", ray, f"ray {i}")

doc = run("--state", str(state_path), expect=0)
if doc is not None:
    for r in doc["shifts"]:
        check("shift_report.schema.json", r, f"shift report {r['kind']}")

doc = run("--field", "C2", expect=0)
if doc is not None:
    check("vector_field.schema.json", {"components": doc["components"]}, "field C2")

sys.exit(1 if failed else 0)
