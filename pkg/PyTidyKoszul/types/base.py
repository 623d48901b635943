import json
from typing import Dict

SCHEMA_VERSION = 1


class BaseReport:
    """Report built from a plain options dict; ``get_dict`` drops the raw copy."""

    def __init__(self, options: Dict):
        self.__raw = options

    def get_dict(self, raw: bool = False) -> Dict:
        fields = self.__dict__.copy()
        fields.pop("_BaseReport__raw")

        if raw:
            return self.__raw
        return {key: value for key, value in fields.items() if not key.startswith("_")}

    def to_json(self, indent: int = 2) -> str:
        payload = {"schema": SCHEMA_VERSION}
        payload.update(self.get_dict())
        return json.dumps(payload, indent=indent, sort_keys=False, default=str)
