"""Stable derivation of component seeds from a run seed.

All randomized procedures take the run seed and derive their own stream
by hashing (run_seed, component label, index). No global RNG state is
ever touched, so results are independent of call order and thread count.
"""

import hashlib

import numpy as np


def derive_seed(run_seed: int, *labels) -> int:
    """Hash (run_seed, *labels) into a 64-bit seed.

    Labels may be strings or integers; they are folded into the digest
    with explicit separators so ("ab", 1) and ("a", "b1") differ.
    """
    h = hashlib.sha256()
    h.update(str(int(run_seed)).encode("utf-8"))
    for label in labels:
        h.update(b"\x1f")
        h.update(str(label).encode("utf-8"))
    return int.from_bytes(h.digest()[:8], "big")


def rng_for(run_seed: int, *labels) -> np.random.Generator:
    """A numpy Generator seeded by derive_seed(run_seed, *labels)."""
    return np.random.default_rng(derive_seed(run_seed, *labels))
