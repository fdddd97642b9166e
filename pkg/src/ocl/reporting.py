"""JSON report serialization (schema id "ocl-report/1").

Deterministic: sorted keys, exact rationals as "p/q" strings, numpy
scalars and arrays converted to plain Python before dumping.
"""

from __future__ import annotations

import dataclasses
import json
from fractions import Fraction

import numpy as np

SCHEMA = "ocl-report/1"


def to_jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, np.ndarray):
        return [to_jsonable(x) for x in obj.tolist()]
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {k: to_jsonable(v) for k, v in dataclasses.asdict(obj).items()}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    return obj


def report_json(kind: str, payload: dict) -> str:
    doc = {"schema": SCHEMA, "kind": kind}
    doc.update(to_jsonable(payload))
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
