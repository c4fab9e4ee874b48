"""
Planar-diagram (PD) knot descriptions.

A crossing ``[i, j, k, l]`` lists the four incident edge labels
counter-clockwise, starting with the incoming under-strand: the under-strand
enters on ``i`` and leaves on ``k``, the over-strand joins ``j`` and ``l``.
The token ``unknot`` stands for the crossing-free diagram.
"""

from collections import Counter
from dataclasses import dataclass
from typing import List, Tuple

from pydantic import TypeAdapter, ValidationError

UNKNOT_TOKEN = "unknot"

Crossing = Tuple[int, int, int, int]

_PD_ADAPTER = TypeAdapter(List[Tuple[int, int, int, int]])


class DiagramError(ValueError):
    """Raised for malformed PD input."""

    def __init__(self, reason: str) -> None:
        super().__init__(reason)
        self.reason = reason


@dataclass(frozen=True)
class KnotDiagram:
    """A validated knot diagram; no crossings means the trivial diagram."""

    crossings: Tuple[Crossing, ...]
    arc_count: int  # number of edge labels

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def is_trivial(self) -> bool:
        return not self.crossings

    def successor(self, label: int) -> int:
        """The edge following ``label`` along the knot orientation."""
        return label % self.arc_count + 1


def parse_pd(text: str) -> KnotDiagram:
    """
    Parse and validate PD notation.

    Args:
        text: A JSON array of 4-element arrays, or the token ``unknot``
            (bare or as a JSON string)

    Returns:
        The validated diagram

    Raises:
        DiagramError: On empty input, labels outside 1..2c, or a label not
            appearing exactly twice
    """
    stripped = text.strip()
    if stripped in (UNKNOT_TOKEN, f'"{UNKNOT_TOKEN}"'):
        return KnotDiagram(crossings=(), arc_count=1)
    if not stripped:
        raise DiagramError("empty input")

    try:
        crossings = _PD_ADAPTER.validate_json(stripped)
    except ValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first["loc"]) or "document"
        raise DiagramError(f"{location}: {first['msg']}") from exc

    if not crossings:
        raise DiagramError(f"no crossings; use the token {UNKNOT_TOKEN!r} for the trivial diagram")

    counts = Counter(label for crossing in crossings for label in crossing)
    labels = 2 * len(crossings)
    for label in sorted(counts):
        if not 1 <= label <= labels:
            raise DiagramError(f"label {label} outside 1..{labels}")
    missing = [label for label in range(1, labels + 1) if label not in counts]
    if missing:
        raise DiagramError(f"labels not contiguous, missing {missing}")
    wrong = sorted(label for label, n in counts.items() if n != 2)
    if wrong:
        raise DiagramError(f"labels {wrong} do not appear exactly twice")

    return KnotDiagram(crossings=tuple(tuple(c) for c in crossings), arc_count=labels)  # type: ignore[misc]
