"""Instance documents: the JSON vocabulary shared by the CLI, the session
service, and fixtures on disk.

``load_instance`` and ``store_instance`` are inverse on validated
instances; unknown fields are rejected so that typos fail loudly.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import DocumentError, ValidationError
from .model import (
    ADDITION_VARIANTS,
    SYSTEMS,
    VARIANTS,
    ControlInstance,
    check_valid,
)

_REQUIRED = (
    "variant",
    "system",
    "candidates",
    "num_voters",
    "presentation",
    "current",
    "budget",
    "sigma",
    "d",
    "decisions",
    "votes",
)
_OPTIONAL = ("spoilers",)


def _expect_str_list(doc: dict, field: str) -> tuple[str, ...]:
    value = doc[field]
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise DocumentError("expected a list of strings", field)
    return tuple(value)


def _expect_int(doc: dict, field: str) -> int:
    value = doc[field]
    if not isinstance(value, int) or isinstance(value, bool):
        raise DocumentError("expected an integer", field)
    return value


def load_instance(document: str | dict, *, validate: bool = True) -> ControlInstance:
    """Decode an instance document (JSON text or an already-parsed mapping).

    Raises DocumentError naming the offending field on malformed input and
    forwards ValidationError when the decoded snapshot breaks an invariant.
    """
    if isinstance(document, str):
        try:
            doc = json.loads(document)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"not valid JSON: {exc}") from exc
    else:
        doc = document
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")

    unknown = set(doc) - set(_REQUIRED) - set(_OPTIONAL)
    if unknown:
        raise DocumentError("unknown field", sorted(unknown)[0])
    for field in _REQUIRED:
        if field not in doc:
            raise DocumentError("missing field", field)

    variant = doc["variant"]
    if variant not in VARIANTS:
        raise DocumentError(f"unknown variant {variant!r}", "variant")
    system = doc["system"]
    if system not in SYSTEMS:
        raise DocumentError(f"unknown system {system!r}", "system")

    candidates = _expect_str_list(doc, "candidates")
    presentation = _expect_str_list(doc, "presentation")
    sigma = _expect_str_list(doc, "sigma")
    decisions = _expect_str_list(doc, "decisions")
    num_voters = _expect_int(doc, "num_voters")
    budget = _expect_int(doc, "budget")
    if not isinstance(doc["d"], str):
        raise DocumentError("expected a candidate id", "d")
    current = doc["current"]
    if not isinstance(current, str):
        raise DocumentError("expected a candidate id", "current")
    try:
        current_index = presentation.index(current)
    except ValueError:
        raise DocumentError(
            f"current candidate {current!r} not in presentation", "current"
        )

    votes_raw = doc["votes"]
    if not isinstance(votes_raw, list):
        raise DocumentError("expected a list of votes", "votes")
    votes = []
    for i, vote in enumerate(votes_raw):
        if not isinstance(vote, list) or not all(isinstance(x, str) for x in vote):
            raise DocumentError("expected a list of candidate ids", f"votes[{i}]")
        votes.append(tuple(vote))

    spoilers = None
    if "spoilers" in doc and doc["spoilers"] is not None:
        if variant not in ADDITION_VARIANTS:
            raise DocumentError(
                "spoilers only apply to addition variants", "spoilers"
            )
        spoilers = frozenset(_expect_str_list(doc, "spoilers"))
    if variant in ADDITION_VARIANTS and spoilers is None:
        raise DocumentError("addition variants require a spoiler set", "spoilers")

    instance = ControlInstance(
        variant=variant,
        candidates=candidates,
        num_voters=num_voters,
        presentation=presentation,
        current_index=current_index,
        budget=budget,
        sigma=sigma,
        d=doc["d"],
        decisions=decisions,
        votes=tuple(votes),
        spoilers=spoilers,
        system=system,
    )
    if validate:
        check_valid(instance)
    return instance


def store_instance(instance: ControlInstance) -> dict[str, Any]:
    """Encode an instance as its canonical document (a JSON-able dict)."""
    doc: dict[str, Any] = {
        "variant": instance.variant,
        "system": instance.system,
        "candidates": list(instance.candidates),
    }
    if instance.spoilers is not None:
        doc["spoilers"] = sorted(instance.spoilers)
    doc.update(
        {
            "num_voters": instance.num_voters,
            "presentation": list(instance.presentation),
            "current": instance.current_candidate,
            "budget": instance.budget,
            "sigma": list(instance.sigma),
            "d": instance.d,
            "decisions": list(instance.decisions),
            "votes": [list(v) for v in instance.votes],
        }
    )
    return doc


def store_instance_text(instance: ControlInstance) -> str:
    return json.dumps(store_instance(instance), indent=2) + "\n"


def load_instance_file(path: str, *, validate: bool = True) -> ControlInstance:
    with open(path, "r", encoding="utf-8") as fh:
        return load_instance(fh.read(), validate=validate)
