"""Distance estimate records and their JSON wire format.

Every estimator returns a DistanceEstimate; the CLI serializes it with
``to_json`` and the schema is versioned so downstream diffing tools can
rely on the layout.  ``validate_result`` checks a parsed document against
the current schema (a structural check mirroring schemas/result-v1.json).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .bounds import BoundReport
from .gf2 import BitWord

__all__ = ["DistanceEstimate", "SCHEMA_VERSION", "validate_result"]

SCHEMA_VERSION = 1

METHODS = ("exact", "ga_a", "ga_b", "mim")


@dataclass(frozen=True)
class DistanceEstimate:
    """One estimate: what was run, on what, what came out, and the evidence.

    ``witness`` re-encodes to a codeword of weight ``d``; it is absent only
    in the MIM diagnostic state where no nonzero codeword was ever decoded.
    ``events`` carries method-specific progress records (per-generation best
    for the GA variants, every witness found with its discovery time for
    MIM) so runs can be audited.
    """

    family: str
    n: int
    k: int
    method: str
    d: int
    witness: BitWord | None
    config: dict
    rng_seed: int | None
    wall_time_seconds: float
    bound_report: BoundReport
    code_params: dict = field(default_factory=dict)
    events: tuple[dict, ...] = ()

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "code": {
                "family": self.family,
                "n": self.n,
                "k": self.k,
                "params": _jsonable(self.code_params),
            },
            "method": self.method,
            "d": self.d,
            "witness": self.witness.to01() if self.witness is not None else None,
            "witness_weight": self.witness.weight if self.witness is not None else None,
            "config": _jsonable(self.config),
            "rng_seed": self.rng_seed,
            "wall_time_seconds": self.wall_time_seconds,
            "bounds": self.bound_report.to_dict(),
            "events": [_jsonable(e) for e in self.events],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _jsonable(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, BitWord):
        return value.to01()
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return str(value)


# field name -> (allowed types, nullable)
_TOP_LEVEL = {
    "schema_version": (int, False),
    "code": (dict, False),
    "method": (str, False),
    "d": (int, False),
    "witness": (str, True),
    "witness_weight": (int, True),
    "config": (dict, False),
    "rng_seed": (int, True),
    "wall_time_seconds": ((int, float), False),
    "bounds": (dict, False),
    "events": (list, False),
}

_CODE_FIELDS = {
    "family": (str, False),
    "n": (int, False),
    "k": (int, False),
    "params": (dict, False),
}

_BOUND_FIELDS = {
    "singleton_upper": (int, False),
    "sqrt_lower": (int, True),
    "sqrt_of_n": ((int, float), True),
    "krasikov_upper": ((int, float), True),
    "parity_adjusted_d": (int, True),
    "violated": (list, False),
    "warnings": (list, False),
}


def _check_fields(obj: dict, spec: dict, where: str) -> None:
    missing = spec.keys() - obj.keys()
    if missing:
        raise ValueError(f"{where}: missing fields {sorted(missing)}")
    extra = obj.keys() - spec.keys()
    if extra:
        raise ValueError(f"{where}: unexpected fields {sorted(extra)}")
    for name, (types, nullable) in spec.items():
        v = obj[name]
        if v is None:
            if not nullable:
                raise ValueError(f"{where}.{name}: null not allowed")
            continue
        if not isinstance(v, types) or isinstance(v, bool):
            raise ValueError(f"{where}.{name}: bad type {type(v).__name__}")


def validate_result(doc: dict) -> None:
    """Raise ValueError unless ``doc`` conforms to the result schema."""
    _check_fields(doc, _TOP_LEVEL, "result")
    if doc["schema_version"] != SCHEMA_VERSION:
        raise ValueError(
            f"schema_version {doc['schema_version']} != {SCHEMA_VERSION}"
        )
    if doc["method"] not in METHODS:
        raise ValueError(f"unknown method {doc['method']!r}")
    _check_fields(doc["code"], _CODE_FIELDS, "result.code")
    _check_fields(doc["bounds"], _BOUND_FIELDS, "result.bounds")
    witness = doc["witness"]
    if witness is not None:
        if set(witness) - {"0", "1"}:
            raise ValueError("result.witness: symbols outside {0,1}")
        if len(witness) != doc["code"]["n"]:
            raise ValueError("result.witness: length != n")
        if witness.count("1") != doc["witness_weight"]:
            raise ValueError("result.witness_weight does not match witness")
    if not all(isinstance(e, dict) for e in doc["events"]):
        raise ValueError("result.events: entries must be objects")
