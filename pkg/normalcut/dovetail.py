"""
Run the unknot decision and the representation search side by side.

The decision procedure settles both outcomes; the representation search can
only certify knottedness, but is often much faster. Both run to completion
so the report holds both results; which answered first is only logged.
"""

import asyncio
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Optional

from normalcut.enumeration.fundamental import DEFAULT_BOX_VOLUME_CAP, EnumerationLimitExceeded
from normalcut.triangulation.model import Triangulation
from normalcut.unknot.decider import PreconditionError, UnknotVerdict, decide_unknot
from normalcut.wirtinger.presentation import WirtingerPresentation
from normalcut.wirtinger.search import PermutationAssignment, find_noncyclic_rep

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DovetailResult:
    verdict: Optional[UnknotVerdict]
    representation: Optional[PermutationAssignment]
    first: str  # "decider" or "representation"
    decider_error: Optional[str] = None

    @property
    def consistent(self) -> bool:
        """An unknot cannot have a representation with non-cyclic image."""
        if self.verdict is None:
            return True
        return not (self.verdict.is_unknot and self.representation is not None)

    @property
    def combined(self) -> str:
        if not self.consistent:
            return "inconsistent"
        if self.verdict is None:
            return "knotted"
        return self.verdict.verdict.value


async def dovetail(
    tri: Triangulation,
    presentation: WirtingerPresentation,
    n_max: int = 5,
    box_volume_cap: int = DEFAULT_BOX_VOLUME_CAP,
    jobs: int = 1,
) -> DovetailResult:
    """
    Run ``decide_unknot`` and ``find_noncyclic_rep`` concurrently.

    A representation with non-cyclic image settles knottedness on its own,
    so when the decider then fails the result keeps the representation and
    records the failure in ``decider_error``.

    Args:
        tri: Triangulated knot complement
        presentation: Wirtinger presentation of the same knot
        n_max: Largest symmetric group searched
        box_volume_cap: Enumeration cap for the decider
        jobs: Worker processes for the decider's enumeration

    Returns:
        Both results and which one gave a definitive answer first

    Raises:
        PreconditionError, EnumerationLimitExceeded: From the decider, when
            the search found no representation either
    """
    loop = asyncio.get_running_loop()
    with ThreadPoolExecutor(max_workers=2, thread_name_prefix="dovetail") as pool:
        decider = loop.run_in_executor(
            pool, partial(decide_unknot, tri, box_volume_cap=box_volume_cap, jobs=jobs)
        )
        search = loop.run_in_executor(pool, find_noncyclic_rep, presentation, n_max)

        first = "decider"
        done, _ = await asyncio.wait({decider, search}, return_when=asyncio.FIRST_COMPLETED)
        if search in done and search.exception() is None and search.result() is not None:
            first = "representation"
        logger.info("first definitive answer from the %s", first)

        representation = await search
        try:
            verdict = await decider
        except (PreconditionError, EnumerationLimitExceeded) as exc:
            if representation is None:
                raise
            logger.warning("decider failed, keeping the representation: %s", exc)
            return DovetailResult(
                verdict=None,
                representation=representation,
                first="representation",
                decider_error=str(exc),
            )

    result = DovetailResult(verdict=verdict, representation=representation, first=first)
    if not result.consistent:
        logger.error("decider found an unknot but the knot group has a non-cyclic image")
    return result
