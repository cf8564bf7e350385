"""Finite frames, sublocales, Booleanization and DeMorganization."""

import json

from ._finloc import (
    Frame,
    InputError,
    IntegrityError,
    booleanization,
    demorganization,
    frame_to_dot,
    heyting_law_failures,
    is_boolean,
    is_extremally_disconnected,
    run_cli,
    sublocales,
    sublocales_to_dot,
    topology_count,
)
from ._finloc import _analyze


def analyze(frame, name="frame", *, verify=False, oracle=False, seed=0):
    """Report for one frame as a dict (same layout as the CLI output)."""
    return json.loads(_analyze(frame, name, verify, oracle, seed))


__all__ = [
    "Frame",
    "InputError",
    "IntegrityError",
    "analyze",
    "booleanization",
    "demorganization",
    "frame_to_dot",
    "heyting_law_failures",
    "is_boolean",
    "is_extremally_disconnected",
    "run_cli",
    "sublocales",
    "sublocales_to_dot",
    "topology_count",
]
