"""
Wirtinger presentation of a knot group from a PD diagram.

Edge labels joined by an over-strand belong to one arc; arcs are the
generators. Each crossing contributes one conjugation relation
``out = over^e * in * over^-e`` with ``e = +1`` when the over-strand runs
``l -> j`` and ``e = -1`` when it runs ``j -> l``.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from networkx.utils import UnionFind
from sympy import QQ

from normalcut.triangulation.homology import matrix_rank
from normalcut.wirtinger.diagram import DiagramError, KnotDiagram

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Relation:
    """``outgoing = over^sign * incoming * over^-sign``."""

    over: int
    incoming: int
    outgoing: int
    sign: int


@dataclass(frozen=True)
class WirtingerPresentation:
    generator_count: int
    relations: Tuple[Relation, ...]
    arcs: Tuple[Tuple[int, ...], ...]  # edge labels per generator

    def abelianization_rank(self) -> int:
        """Free rank of the abelianised group (every relation says out = in)."""
        rows = []
        for r in self.relations:
            row = [0] * self.generator_count
            row[r.outgoing] += 1
            row[r.incoming] -= 1
            rows.append(row)
        return self.generator_count - matrix_rank(rows, QQ)


def wirtinger_presentation(diagram: KnotDiagram) -> WirtingerPresentation:
    """
    Build the Wirtinger presentation of a knot diagram.

    Args:
        diagram: A validated diagram

    Returns:
        One generator per arc and one relation per crossing

    Raises:
        DiagramError: If the abelianisation is not Z, which means the
            diagram is not a single knot
    """
    if diagram.is_trivial:
        return WirtingerPresentation(generator_count=1, relations=(), arcs=((),))

    labels = UnionFind(range(1, diagram.arc_count + 1))
    for _, j, _, l in diagram.crossings:
        labels.union(j, l)
    arcs = sorted((tuple(sorted(group)) for group in labels.to_sets()), key=lambda a: a[0])
    generator_of: Dict[int, int] = {label: g for g, arc in enumerate(arcs) for label in arc}

    relations: List[Relation] = []
    for i, j, k, l in diagram.crossings:
        sign = -1 if l == diagram.successor(j) else 1
        relations.append(
            Relation(
                over=generator_of[j],
                incoming=generator_of[i],
                outgoing=generator_of[k],
                sign=sign,
            )
        )

    presentation = WirtingerPresentation(
        generator_count=len(arcs), relations=tuple(relations), arcs=tuple(arcs)
    )
    rank = presentation.abelianization_rank()
    if rank != 1:
        raise DiagramError(f"abelianization has free rank {rank}, expected 1 for a knot")
    logger.debug(
        "wirtinger presentation: %d generators, %d relations",
        presentation.generator_count,
        len(relations),
    )
    return presentation
