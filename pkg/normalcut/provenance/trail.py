"""
Decision trail with hash chaining.

Each entry is hashed together with its predecessor's hash, so a trail is
tamper-evident. Entries carry no timestamps: equal runs give equal trails.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from normalcut.provenance.hashing import hash_data, hash_object

GENESIS_HASH = hash_data(b"NORMALCUT_DECISION_TRAIL")


@dataclass
class TrailEntry:
    """A single step of a decision."""

    step: str  # e.g. "enumerate", "candidate", "verdict"
    subject: str  # what the step was about, e.g. a vector
    details: Dict[str, Any]
    previous_hash: str
    entry_hash: str = field(init=False)

    def __post_init__(self) -> None:
        self.entry_hash = self._compute_hash()

    def _compute_hash(self) -> str:
        return hash_object(
            {
                "step": self.step,
                "subject": self.subject,
                "details": self.details,
                "previous_hash": self.previous_hash,
            }
        )

    def verify(self) -> bool:
        """Verify the integrity of this entry."""
        return self.entry_hash == self._compute_hash()


class DecisionTrail:
    """Tamper-evident record of the steps behind a verdict."""

    def __init__(self) -> None:
        self._entries: List[TrailEntry] = []

    def record(
        self, step: str, subject: str, details: Optional[Dict[str, Any]] = None
    ) -> TrailEntry:
        """
        Append a step to the trail.

        Args:
            step: Kind of step
            subject: What the step examined
            details: JSON-compatible context

        Returns:
            The created entry
        """
        entry = TrailEntry(
            step=step,
            subject=subject,
            details=details or {},
            previous_hash=self.head,
        )
        self._entries.append(entry)
        return entry

    @property
    def head(self) -> str:
        """Hash of the latest entry, or the genesis hash when empty."""
        return self._entries[-1].entry_hash if self._entries else GENESIS_HASH

    def verify_chain(self) -> bool:
        """
        Verify every entry and every link.

        Returns:
            True if the chain is intact, False if tampering detected
        """
        previous = GENESIS_HASH
        for entry in self._entries:
            if entry.previous_hash != previous or not entry.verify():
                return False
            previous = entry.entry_hash
        return True

    def entries(self, step: Optional[str] = None) -> List[TrailEntry]:
        """Entries, optionally filtered by step kind."""
        if step is None:
            return self._entries.copy()
        return [e for e in self._entries if e.step == step]

    def __len__(self) -> int:
        return len(self._entries)
