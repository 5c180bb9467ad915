"""Deterministic seed derivation for trial and cell streams.

Seeds for trial t are a pure function of (root seed, t), so parallel or
prefix execution reproduces the sequential stream byte for byte, on any
platform (the mix is a keyed hash, not Python's salted ``hash``).
"""

from __future__ import annotations

import hashlib


def derive_seed(seed: int, index: int) -> int:
    """Mix (seed, index) into an independent 64-bit stream seed."""
    digest = hashlib.blake2b(
        f"{seed}:{index}".encode("ascii"), digest_size=8
    ).digest()
    return int.from_bytes(digest, "big")
