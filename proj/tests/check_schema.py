"""Validate every bundled manifest against the manifest JSON Schema."""
import json
import pathlib
import sys

import jsonschema


def main() -> int:
    schema = json.loads(pathlib.Path(sys.argv[1]).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    bad = 0
    paths = sorted(pathlib.Path(sys.argv[2]).glob("*.json"))
    for path in paths:
        errors = list(validator.iter_errors(json.loads(path.read_text())))
        for e in errors:
            print(f"{path.name}: {'/'.join(map(str, e.path))}: {e.message}")
        bad += bool(errors)
    # The schema must also reject what the parser rejects.
    for doc in ({"name": "x", "personnel": [{"attribute": "language_experience", "rating": "very_high"}]},
                {"name": "x", "io": {"inputs": -1}},
                {"name": "x", "extra": 1},
                {"name": "x", "deployment": {"users": 0}}):
        if validator.is_valid(doc):
            print(f"schema accepted invalid document {doc}")
            bad += 1
    print(f"{len(paths)} manifests checked, {bad} problems")
    return 1 if bad or not paths else 0


if __name__ == "__main__":
    sys.exit(main())
