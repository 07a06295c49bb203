import json
from importlib.resources import files

import pytest
from jsonschema import Draft202012Validator


def load_schema(name):
    return json.loads((files("wreathstab") / "schemas" / f"{name}.schema.json").read_text())


@pytest.fixture(scope="session")
def validator():
    def get(name):
        schema = load_schema(name)
        Draft202012Validator.check_schema(schema)
        return Draft202012Validator(schema)

    return get
