"""Validates config files against the schema printed by `ndf-lab --schema`."""
import json
import subprocess
import sys

import jsonschema

cli, *paths = sys.argv[1:]
schema = json.loads(subprocess.run([cli, "--schema"], check=True, capture_output=True, text=True).stdout)
validator = jsonschema.Draft202012Validator(schema)
for path in paths:
    with open(path) as fh:
        validator.validate(json.load(fh))
    print("valid", path)
