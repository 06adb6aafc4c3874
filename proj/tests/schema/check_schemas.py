"""Run the CLI and validate every JSON output against schemas/."""

import json
import pathlib
import subprocess
import sys
import tempfile

from jsonschema import Draft202012Validator
from referencing import Registry, Resource


def load_registry(schema_dir):
    resources = []
    for path in sorted(schema_dir.glob("*.schema.json")):
        doc = json.loads(path.read_text())
        Draft202012Validator.check_schema(doc)
        resources.append((path.name, Resource.from_contents(doc)))
    return Registry().with_resources(resources)


def main():
    cli, schema_dir, fixtures = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
    registry = load_registry(schema_dir)
    failures = 0

    def check(schema, args, expect_exit=0, lines=False):
        nonlocal failures
        proc = subprocess.run([cli, *args], capture_output=True, text=True)
        docs = [json.loads(l) for l in proc.stdout.splitlines() if l.strip()] if lines else [json.loads(proc.stdout)]
        validator = Draft202012Validator(registry.contents(schema), registry=registry)
        errors = [e for d in docs for e in validator.iter_errors(d)]
        ok = proc.returncode == expect_exit and not errors
        failures += not ok
        print(("ok  " if ok else "FAIL"), schema, " ".join(args), f"exit={proc.returncode}")
        for e in errors[:5]:
            print("    ", e.message, "at", list(e.absolute_path))
        return docs

    with tempfile.TemporaryDirectory() as tmp:
        tmp = pathlib.Path(tmp)
        for name in ["G1", "G3", "k4star", "tromp-5", "zs-3", "at-sp-5"]:
            doc = check("graph.schema.json", ["build", name])[0]
            (tmp / f"{name}.json").write_text(json.dumps(doc))
        check("graph.schema.json", ["witnesses", "--emit", "G4prime"])
        g1, g3 = str(tmp / "G1.json"), str(tmp / "G3.json")
        check("hom.schema.json", ["check-hom", g1, "--target", "tromp-5"])
        check("hom.schema.json", ["check-hom", g3, "--target", "sp-5"], expect_exit=1)
        check("hom.schema.json", ["check-hom", g1, "--target-file", str(tmp / "k4star.json"), "--signed"])
        check("chromatic.schema.json", ["chi2", g3])
        check("chromatic.schema.json", ["chis", g1])
        check("chromatic.schema.json", ["chi2", g3, "--node-limit", "3"], expect_exit=2)
        check("props.schema.json", ["--json", "props", "--target", "tromp-5", "--check", "P:2:2", "--check", "P:2:3",
                                    "--orbits"], expect_exit=1)
        check("props.schema.json", ["--json", "props", "--target", "at-sp-25", "--check", "P:3:4", "--table1"])
        check("table1.schema.json", ["--json", "table1"])
        check("witnesses.schema.json", ["--json", "witnesses"])
        check("campaign_report.schema.json", ["campaign", "--input", str(fixtures / "octahedron.pc")], lines=True)
        check("campaign_report.schema.json", ["campaign", "--input", str(fixtures / "octahedron.pc"), "--target",
                                              "k4star"], expect_exit=1, lines=True)
        bad = tmp / "bad.pc"
        bad.write_bytes(b">>planar_code<<\x02\x02")
        check("campaign_report.schema.json", ["campaign", "--input", str(bad)], expect_exit=3, lines=True)
        check("selftest.schema.json", ["--json", "selftest", "--only", "1", "--only", "3", "--only", "5"])

    # The schemas must also reject malformed documents.
    graph = Draft202012Validator(registry.contents("graph.schema.json"), registry=registry)
    for bad_doc in [{"n": 2, "edges": [[0, 1, 0]]}, {"n": 2, "edges": [], "extra": 1}, {"edges": []},
                    {"n": 2, "edges": [[0, 1]]}]:
        if graph.is_valid(bad_doc):
            failures += 1
            print("FAIL graph.schema.json accepted", json.dumps(bad_doc))

    print(f"{failures} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
