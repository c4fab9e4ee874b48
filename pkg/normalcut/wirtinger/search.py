"""
Search for a representation into S_n with non-cyclic image.

Wirtinger generators are conjugate, so all images share one cycle type. The
first generator is fixed to a canonical element of the class (any solution
can be conjugated into that form); the rest are assigned by backtracking,
propagating each relation as soon as two of its three arcs are known.

Images are kept as array-form tuples so they hash and sort cheaply; the
group arithmetic itself is sympy's.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.named_groups import SymmetricGroup

from normalcut.wirtinger.presentation import Relation, WirtingerPresentation

logger = logging.getLogger(__name__)

Perm = Tuple[int, ...]


@lru_cache(maxsize=4096)
def as_permutation(p: Perm) -> Permutation:
    return Permutation(list(p))


def _array(p: Permutation) -> Perm:
    return tuple(p.array_form)


def compose(a: Perm, b: Perm) -> Perm:
    """``a * b``: apply b first, then a."""
    # sympy multiplies left to right
    return _array(as_permutation(b) * as_permutation(a))


def inverse(a: Perm) -> Perm:
    return _array(~as_permutation(a))


def conjugate(over: Perm, element: Perm, sign: int) -> Perm:
    """``over^sign * element * over^-sign``."""
    g = as_permutation(over) if sign > 0 else ~as_permutation(over)
    return _array(as_permutation(element) ^ g)


def cycle_type(p: Perm) -> Tuple[int, ...]:
    """Cycle lengths in descending order, fixed points included."""
    structure = as_permutation(p).cycle_structure
    return tuple(sorted((k for k, m in structure.items() for _ in range(m)), reverse=True))


def canonical_element(shape: Tuple[int, ...]) -> Perm:
    """Cycles on consecutive letters, longest first."""
    cycles = []
    start = 0
    for length in shape:
        if length > 1:
            cycles.append(list(range(start, start + length)))
        start += length
    return _array(Permutation(cycles, size=start))


@lru_cache(maxsize=8)
def conjugacy_classes(n: int) -> Dict[Tuple[int, ...], Tuple[Perm, ...]]:
    """Non-identity classes of S_n keyed by cycle type, members sorted."""
    classes: Dict[Tuple[int, ...], Tuple[Perm, ...]] = {}
    for members in SymmetricGroup(n).conjugacy_classes():
        forms = sorted(_array(p) for p in members)
        shape = cycle_type(forms[0])
        if shape != (1,) * n:
            classes[shape] = tuple(forms)
    return dict(sorted(classes.items()))


@dataclass(frozen=True)
class PermutationAssignment:
    """Images of the Wirtinger generators in S_n."""

    n: int
    images: Tuple[Perm, ...]

    def group(self) -> PermutationGroup:
        return PermutationGroup([as_permutation(p) for p in self.images])

    @property
    def image_order(self) -> int:
        return int(self.group().order())

    def is_noncyclic(self) -> bool:
        return not self.group().is_cyclic

    def cycle_notation(self) -> List[str]:
        """Generator images as cycles on letters 1..n, e.g. ``(1 2)``."""
        result = []
        for p in self.images:
            cycles = as_permutation(p).cyclic_form
            text = "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cycles)
            result.append(text or "()")
        return result


def satisfies(relations: Sequence[Relation], images: Sequence[Perm]) -> bool:
    """Whether every relation holds exactly."""
    return all(
        images[r.outgoing] == conjugate(images[r.over], images[r.incoming], r.sign)
        for r in relations
    )


def _propagate(
    relations: Sequence[Relation], images: List[Optional[Perm]], members: FrozenSet[Perm]
) -> bool:
    """Fill images forced by relations; False on contradiction."""
    changed = True
    while changed:
        changed = False
        for r in relations:
            over, incoming, outgoing = images[r.over], images[r.incoming], images[r.outgoing]
            if over is None:
                continue
            if incoming is not None:
                value = conjugate(over, incoming, r.sign)
                if outgoing is None:
                    if value not in members:
                        return False
                    images[r.outgoing] = value
                    changed = True
                elif outgoing != value:
                    return False
            elif outgoing is not None:
                value = conjugate(over, outgoing, -r.sign)
                if value not in members:
                    return False
                images[r.incoming] = value
                changed = True
    return True


def _assignments(
    presentation: WirtingerPresentation, shape: Tuple[int, ...], members: Tuple[Perm, ...]
) -> Iterator[Tuple[Perm, ...]]:
    """Every relation-satisfying assignment in the class, first generator fixed."""
    member_set = frozenset(members)
    images: List[Optional[Perm]] = [None] * presentation.generator_count
    images[0] = canonical_element(shape)

    def search(current: List[Optional[Perm]]) -> Iterator[Tuple[Perm, ...]]:
        current = list(current)
        if not _propagate(presentation.relations, current, member_set):
            return
        try:
            slot = current.index(None)
        except ValueError:
            yield tuple(current)  # type: ignore[misc]
            return
        for candidate in members:
            current[slot] = candidate
            yield from search(current)
        current[slot] = None

    yield from search(images)


def find_noncyclic_rep(
    presentation: WirtingerPresentation, n_max: int
) -> Optional[PermutationAssignment]:
    """
    Look for a homomorphism to S_n (3 <= n <= n_max) with non-cyclic image.

    Args:
        presentation: Wirtinger presentation of a knot group
        n_max: Largest symmetric group degree searched

    Returns:
        The first assignment found in a fixed order (n ascending, then
        cycle type, then lexicographic images), or None; None is
        inconclusive

    Raises:
        ValueError: If n_max < 3
    """
    if n_max < 3:
        raise ValueError("n_max must be at least 3")

    for n in range(3, n_max + 1):
        for shape, members in conjugacy_classes(n).items():
            for images in _assignments(presentation, shape, members):
                if len(set(images)) == 1:
                    continue
                assignment = PermutationAssignment(n=n, images=images)
                if assignment.is_noncyclic():
                    logger.info("non-cyclic representation in S_%d, cycle type %s", n, shape)
                    return assignment
        logger.debug("no non-cyclic representation in S_%d", n)
    return None
