"""Canonical JSON and DOT serialization.

All JSON emitted here is canonical: keys sorted, compact separators, one
trailing newline.  Identical values therefore serialize to identical
bytes, which the tests and the replay machinery rely on.  Incidences use
1-based labels externally and 0-based indices internally.
"""

from __future__ import annotations

import json
from typing import Any, Mapping

from .incidence import Configuration
from .search import SearchVerdict
from .semigroup import DrkDescription, NumericalSemigroup

_CONFIG_KEYS = {"v", "b", "r", "k", "incidences"}


def dumps_canonical(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def config_to_dict(config: Configuration) -> dict:
    return {
        "v": config.v,
        "b": config.b,
        "r": config.r,
        "k": config.k,
        "incidences": [[p + 1, j + 1] for p, j in config.sorted_incidences()],
    }


def config_to_json(config: Configuration) -> str:
    return dumps_canonical(config_to_dict(config))


def config_from_dict(doc: Mapping) -> Configuration:
    """Strict parse of the configuration document.

    Shape errors and duplicate incidences raise ValueError.  Out-of-range
    indices are preserved as given so that verify can report them as
    structural violations instead of the parser hiding them.
    """
    if not isinstance(doc, Mapping):
        raise ValueError(f"expected a JSON object, got {type(doc).__name__}")
    missing = _CONFIG_KEYS - doc.keys()
    extra = doc.keys() - _CONFIG_KEYS
    if missing:
        raise ValueError(f"missing keys: {sorted(missing)}")
    if extra:
        raise ValueError(f"unknown keys: {sorted(extra)}")
    for key in ("v", "b", "r", "k"):
        if not isinstance(doc[key], int) or isinstance(doc[key], bool):
            raise ValueError(f"{key} must be an integer")
        if doc[key] < 0:
            raise ValueError(f"{key} must be nonnegative, got {doc[key]}")
    raw = doc["incidences"]
    if not isinstance(raw, list):
        raise ValueError("incidences must be a list of [point, line] pairs")
    incidences = set()
    for entry in raw:
        if (not isinstance(entry, list) or len(entry) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool)
                           for x in entry)):
            raise ValueError(f"malformed incidence entry {entry!r}")
        pair = (entry[0] - 1, entry[1] - 1)
        if pair in incidences:
            raise ValueError(f"duplicate incidence {entry}")
        incidences.add(pair)
    return Configuration(doc["v"], doc["b"], doc["r"], doc["k"],
                         frozenset(incidences))


def config_from_json(text: str) -> Configuration:
    return config_from_dict(json.loads(text))


def config_to_dot(config: Configuration) -> str:
    """Bipartite DOT rendering: points as circles, lines as boxes."""
    out = ["graph configuration {"]
    for p in range(config.v):
        out.append(f'  x{p + 1} [shape=circle, label="x{p + 1}"];')
    for j in range(config.b):
        out.append(f'  y{j + 1} [shape=box, label="y{j + 1}"];')
    for p, j in config.sorted_incidences():
        out.append(f"  x{p + 1} -- y{j + 1};")
    out.append("}")
    return "\n".join(out) + "\n"


def semigroup_to_dict(s: NumericalSemigroup) -> dict:
    return {
        "generators": list(s.generators),
        "frobenius": s.frobenius(),
        "gaps": s.gaps(),
    }


def semigroup_to_json(s: NumericalSemigroup) -> str:
    return dumps_canonical(semigroup_to_dict(s))


def verdict_to_dict(verdict: SearchVerdict) -> dict:
    """Verdict document; elapsed time is deliberately left out so the
    artifact bytes depend only on the problem and options."""
    return {
        "kind": verdict.kind,
        "nodes": verdict.nodes,
        "reason": verdict.reason,
        "witness": (config_to_dict(verdict.witness)
                    if verdict.witness is not None else None),
    }


def verdict_to_json(verdict: SearchVerdict) -> str:
    return dumps_canonical(verdict_to_dict(verdict))


def description_to_dict(description: DrkDescription,
                        witness_paths: Mapping[int, str] | None = None) -> dict:
    """DrkDescription document; witnesses are referenced by file path."""
    paths = witness_paths or {}
    return {
        "r": description.r,
        "k": description.k,
        "kind": description.kind,
        "generators": (list(description.inner.generators)
                       if description.inner is not None else None),
        "frobenius": (description.inner.frobenius()
                      if description.inner is not None else None),
        "finite_elements": (list(description.finite_elements)
                            if description.finite_elements is not None
                            else None),
        "outer_lower_bound": description.outer_lower_bound,
        "witnesses": {str(d): paths.get(d) for d in
                      sorted(description.witnesses)},
        "notes": list(description.notes),
    }


def description_to_json(description: DrkDescription,
                        witness_paths: Mapping[int, str] | None = None) -> str:
    return dumps_canonical(description_to_dict(description, witness_paths))


def trace_to_json(command: str, params: Mapping[str, Any], seed: int) -> str:
    """Replayable record of a command invocation."""
    return dumps_canonical({
        "command": command,
        "params": dict(params),
        "seed": seed,
    })
