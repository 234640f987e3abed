import json
import pathlib
import sys

import jsonschema

schema_path, fixture_dir = map(pathlib.Path, sys.argv[1:3])
schema = json.loads(schema_path.read_text())
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)
bad = 0
for path in sorted(fixture_dir.glob("*.json")):
    errors = list(validator.iter_errors(json.loads(path.read_text())))
    for e in errors[:3]:
        print(f"{path.name}: {'/'.join(map(str, e.absolute_path))}: {e.message[:200]}")
    bad += bool(errors)
    if not errors:
        print(f"{path.name}: ok")
sys.exit(1 if bad else 0)
