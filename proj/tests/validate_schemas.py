"""Run qcodes subcommands with --format json and validate each document.

usage: validate_schemas.py QCODES SCHEMA_DIR
"""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource


def load_registry(schema_dir):
    schemas = {}
    registry = Registry()
    for path in sorted(schema_dir.glob("*.schema.json")):
        doc = json.loads(path.read_text())
        registry = registry.with_resource(doc["$id"], Resource.from_contents(doc))
        schemas[path.name.removesuffix(".schema.json")] = doc
    return schemas, registry


def main():
    qcodes, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas, registry = load_registry(schema_dir)
    failures = 0

    def validate(name, doc, label):
        nonlocal failures
        validator = jsonschema.Draft202012Validator(schemas[name], registry=registry)
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        for e in errors:
            print(f"{label}: {list(e.path)}: {e.message}")
        failures += bool(errors)
        print(f"{'ok  ' if not errors else 'FAIL'} {label}")

    def run(name, args, expect_status, label):
        nonlocal failures
        proc = subprocess.run([qcodes, name, *args, "--format", "json"], capture_output=True, text=True)
        if proc.returncode != expect_status:
            print(f"FAIL {label}: exit {proc.returncode}, expected {expect_status}\n{proc.stderr}")
            failures += 1
            return None
        doc = json.loads(proc.stdout)
        validate(name, doc, label)
        return doc

    with tempfile.TemporaryDirectory() as tmp:
        tmp = pathlib.Path(tmp)
        files = {}
        for cid in ["C_8_5", "C_16_6_1", "C_16_6_2", "C_16_7_1", "C_16_8_1", "C_32_9_1"]:
            proc = subprocess.run([qcodes, "dump", "--id", cid], capture_output=True, text=True, check=True)
            files[cid] = tmp / f"{cid}.code"
            files[cid].write_text(proc.stdout)
        rm4 = subprocess.run([qcodes, "rm", "--m", "4", "--variant", "fixed"], capture_output=True, text=True, check=True)
        files["rm4"] = tmp / "rm4.code"
        files["rm4"].write_text(rm4.stdout)

        run("rm", ["--m", "3"], 0, "rm m=3")
        run("rm", ["--m", "5", "--variant", "fixed"], 0, "rm m=5 fixed")
        run("dump", ["--id", "C_{32,10,102}"], 0, "dump C_{32,10,102}")
        run("check", [str(files["C_16_6_1"])], 0, "check C_{16,6,1}")
        run("check", [str(files["rm4"])], 1, "check RM(1,4)")
        run("wdist", [str(files["C_32_9_1"])], 0, "wdist C_{32,9,1}")
        run("equiv", [str(files["C_16_6_1"]), str(files["C_16_6_1"])], 0, "equiv same")
        run("equiv", [str(files["C_16_6_1"]), str(files["C_16_6_2"])], 1, "equiv different")
        run("covrad", [str(files["C_16_7_1"])], 0, "covrad C_{16,7,1}")
        run("maximal", [str(files["C_16_6_1"])], 0, "maximal C_{16,6,1}")
        run("maximal", [str(files["C_16_8_1"])], 0, "maximal C_{16,8,1}")
        run("quwm", ["--code", str(files["C_16_8_1"]), "--out", str(tmp / "q1")], 0, "quwm C_{16,8,1}")
        run("quwm", ["--code", str(files["C_8_5"]), "--out", str(tmp / "q2"), "--seed", "7"], 0, "quwm seeded")
        validate("quwm", json.loads((tmp / "q1" / "report.json").read_text()), "quwm report.json")
        run("classify", ["--length", "8"], 0, "classify 8")
        run("classify", ["--length", "16", "--out", str(tmp / "c16")], 0, "classify 16")
        validate("classify", json.loads((tmp / "c16" / "report.json").read_text()), "classify report.json")
        run("verify-paper", ["--scope", "16"], 0, "verify-paper 16")

        # The schemas must also reject malformed documents.
        bad = run("wdist", [str(files["C_8_5"])], 0, "wdist C_{8,5}")
        if bad is not None:
            bad["distribution"]["x"] = 1
            bad["extra"] = True
            validator = jsonschema.Draft202012Validator(schemas["wdist"], registry=registry)
            rejected = not validator.is_valid(bad)
            failures += not rejected
            print(f"{'ok  ' if rejected else 'FAIL'} malformed wdist document rejected")

    print(f"{failures} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
