"""Process-independent seeding.

``random.Random(tuple)`` falls back to ``hash()``, which is randomized per
process for strings; campaigns promise byte-identical output for a fixed
seed, so all RNGs are derived through a digest instead.
"""

from __future__ import annotations

import hashlib
import random


def stable_seed(*parts) -> int:
    digest = hashlib.sha256(repr(parts).encode()).digest()
    return int.from_bytes(digest[:8], "big")


def make_rng(*parts) -> random.Random:
    return random.Random(stable_seed(*parts))
