"""
Canonical hashing for triangulations and certificates.

Uses SHA-256 over canonical JSON (sorted keys, compact separators).
"""

import json
from hashlib import sha256
from typing import Any

from normalcut.triangulation.model import Triangulation


def canonical_json(obj: Any) -> str:
    """Serialize deterministically: sorted keys, no whitespace."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def hash_data(data: bytes) -> str:
    """
    Hash raw bytes using SHA-256.

    Args:
        data: Raw bytes to hash

    Returns:
        Hex-encoded hash
    """
    return sha256(data).hexdigest()


def hash_object(obj: Any) -> str:
    """
    Hash a JSON-compatible object deterministically.

    Args:
        obj: Object to hash

    Returns:
        Hex-encoded hash of its canonical JSON
    """
    return hash_data(canonical_json(obj).encode("utf-8"))


def triangulation_checksum(tri: Triangulation) -> str:
    """Checksum stored next to every certificate vector."""
    return hash_object(tri.to_document())


def verify_checksum(tri: Triangulation, expected: str) -> bool:
    """
    Check that a certificate was issued for this triangulation.

    Args:
        tri: The triangulation at hand
        expected: Checksum recorded with the certificate

    Returns:
        True if the checksums agree
    """
    return triangulation_checksum(tri) == expected
