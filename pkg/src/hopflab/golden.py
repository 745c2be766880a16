"""Relation tables shipped as JSON and compared against the presentations
the constructors derive.  ``HOPFLAB_GOLDEN_DIR`` points at another copy."""

from __future__ import annotations

import json
import os
from pathlib import Path

from .parser import parse
from .report import Report

__all__ = ["golden_dir", "golden_labels", "load_golden", "relation_report"]

VERSION = "v1"


def golden_dir() -> Path:
    override = os.environ.get("HOPFLAB_GOLDEN_DIR")
    if override:
        return Path(override)
    return Path(__file__).parent / "golden" / VERSION


def golden_labels() -> list[str]:
    return sorted(p.stem for p in golden_dir().glob("*.json"))


def load_golden(label: str) -> dict:
    path = golden_dir() / f"{label}.json"
    with path.open(encoding="utf-8") as fh:
        return json.load(fh)


def relation_report(label: str) -> Report:
    """Each ``lhs = rhs`` of the table, both sides normalized in the model."""
    from .models import get_model

    data = load_golden(label)
    P = get_model(data["model"], data["mode"])
    rep = Report("relations", data["model"], data["mode"])
    for rel in data["relations"]:
        name = f"{rel['lhs']} = {rel['rhs']}"
        if "printed" in rel:
            name += f" (printed: {rel['printed']})"
        rep.compare(name, label, parse(rel["lhs"], P), parse(rel["rhs"], P))
    return rep
