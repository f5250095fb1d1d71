"""Deterministic seed derivation, independent of PYTHONHASHSEED."""

import hashlib
import random


def derive_seed(master: int, *parts) -> int:
    key = repr((master,) + parts).encode()
    return int.from_bytes(hashlib.blake2b(key, digest_size=8).digest(), "big")


def rng_for(master: int, *parts) -> random.Random:
    return random.Random(derive_seed(master, *parts))
