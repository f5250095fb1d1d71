"""Convexity and concavity of soft sets.

Two independent routes decide each property:

* the *oracles* check the defining inclusion directly, for every pair of box
  points ``x < y`` and every lattice point ``z`` strictly between them;
* the *deciders* reduce to lattice geometry: ``S`` is convex iff every level
  region ``{x : u in f(x)}`` is segment-convex, and concave iff every
  co-level region ``{x : u not in f(x)}`` is.

Both return a :class:`~softconvex.core.Witness` on failure and ``None`` on
success; the ``is_*`` wrappers return booleans.
"""

from __future__ import annotations

import random
from typing import Iterator, Optional

from .algebra import alpha_inclusion, complement
from .core import GridBox, Point, SoftSet, Universe, ValidationError, Witness, WitnessKind
from .lattice import is_segment_convex, random_convex_lattice_set, segment_violation
from .seeding import derive_seed

ALPHA_CUT_MAX_UNIVERSE = 16


def _lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def combination_points(x: Point, y: Point) -> Iterator[Point]:
    """Lattice points ``x + t (y - x)`` with ``0 < t < 1``, ordered from x.

    A lattice point on the segment has ``t * d`` integral for the longest
    coordinate span ``d``, so only ``t = k / d`` needs testing.
    """
    delta = [b - a for a, b in zip(x, y)]
    span = max((abs(d) for d in delta), default=0)
    for k in range(1, span):
        if all(k * d % span == 0 for d in delta):
            yield tuple(a + k * d // span for a, d in zip(x, delta))


def convex_witness_oracle(s: SoftSet) -> Optional[Witness]:
    """First ``(x, y, z, u)`` in lexicographic order with
    ``u in f(x) & f(y)`` and ``u not in f(z)``."""
    f = s.mask_at
    pts = list(s.box.points())
    for i, x in enumerate(pts):
        fx = f(x)
        if not fx:
            continue
        for y in pts[i + 1:]:
            need = fx & f(y)
            if not need:
                continue
            for z in combination_points(x, y):
                missing = need & ~f(z)
                if missing:
                    return Witness(x, y, z, _lowest_bit(missing), WitnessKind.CONVEXITY)
    return None


def concave_witness_oracle(s: SoftSet) -> Optional[Witness]:
    """First ``(x, y, z, u)`` in lexicographic order with
    ``u in f(z)`` and ``u not in f(x) | f(y)``."""
    f = s.mask_at
    full = s.universe.full_mask
    pts = list(s.box.points())
    for i, x in enumerate(pts):
        fx = f(x)
        for y in pts[i + 1:]:
            allowed = fx | f(y)
            if allowed == full:
                continue
            for z in combination_points(x, y):
                extra = f(z) & ~allowed
                if extra:
                    return Witness(x, y, z, _lowest_bit(extra), WitnessKind.CONCAVITY)
    return None


def is_convex_oracle(s: SoftSet) -> bool:
    return convex_witness_oracle(s) is None


def is_concave_oracle(s: SoftSet) -> bool:
    return concave_witness_oracle(s) is None


def level_region(s: SoftSet, u: int) -> frozenset[Point]:
    bit = 1 << u
    return frozenset(p for p, m in s.masks().items() if m & bit)


def colevel_region(s: SoftSet, u: int) -> frozenset[Point]:
    bit = 1 << u
    return frozenset(p for p in s.box.points() if not s.mask_at(p) & bit)


def convex_witness(s: SoftSet) -> Optional[Witness]:
    for u in range(s.universe.size):
        found = segment_violation(level_region(s, u))
        if found:
            return Witness(*found, u, WitnessKind.CONVEXITY)
    return None


def concave_witness(s: SoftSet) -> Optional[Witness]:
    for u in range(s.universe.size):
        found = segment_violation(colevel_region(s, u))
        if found:
            return Witness(*found, u, WitnessKind.CONCAVITY)
    return None


def is_convex(s: SoftSet) -> bool:
    return convex_witness(s) is None


def is_concave(s: SoftSet) -> bool:
    return concave_witness(s) is None


def alpha_cut_sides(s: SoftSet) -> tuple[bool, bool]:
    """``(is_convex(s), every alpha-inclusion of s is segment-convex)``,
    the second side by exhaustive enumeration of all subsets alpha."""
    if s.universe.size > ALPHA_CUT_MAX_UNIVERSE:
        raise ValidationError(
            f"universe of size {s.universe.size} exceeds the alpha enumeration "
            f"limit of {ALPHA_CUT_MAX_UNIVERSE}"
        )
    verdicts: dict[frozenset, bool] = {}
    for alpha in s.universe.all_subsets():
        cut = frozenset(alpha_inclusion(s, alpha))
        if cut not in verdicts:
            verdicts[cut] = is_segment_convex(cut)
    return is_convex(s), all(verdicts.values())


def check_alpha_cut_characterization(s: SoftSet) -> bool:
    lhs, rhs = alpha_cut_sides(s)
    return lhs == rhs


# -- generators ---------------------------------------------------------------

def random_convex_soft_set(universe: Universe, box: GridBox, seed: int) -> SoftSet:
    """Convex by construction: every level region is a random half-space cut."""
    masks: dict[Point, int] = {}
    for u in range(universe.size):
        for p in random_convex_lattice_set(box, derive_seed(seed, "level", u)):
            masks[p] = masks.get(p, 0) | 1 << u
    return SoftSet(universe, box, masks)


def random_concave_soft_set(universe: Universe, box: GridBox, seed: int) -> SoftSet:
    return complement(random_convex_soft_set(universe, box, derive_seed(seed, "concave")))


def random_soft_set(universe: Universe, box: GridBox, seed: int, density: float = 0.5) -> SoftSet:
    """Each element joins each point's value independently with ``density``."""
    rng = random.Random(seed)
    masks = {}
    for p in box.points():
        m = 0
        for u in range(universe.size):
            if rng.random() < density:
                m |= 1 << u
        masks[p] = m
    return SoftSet(universe, box, masks)


def _flip_one(s: SoftSet, rng: random.Random) -> SoftSet:
    masks = s.masks()
    p = rng.choice(list(s.box.points()))
    masks[p] = masks.get(p, 0) ^ 1 << rng.randrange(s.universe.size)
    return SoftSet(s.universe, s.box, masks)


def random_mixed_soft_set(universe: Universe, box: GridBox, seed: int) -> SoftSet:
    """A soft set drawn from a mix of shapes: arbitrary, convex, concave and
    one-bit perturbations of either, so both verdicts occur often."""
    rng = random.Random(seed)
    shape = rng.randrange(5)
    sub = rng.getrandbits(64)
    if shape == 0:
        return random_soft_set(universe, box, sub, density=rng.choice((0.2, 0.5, 0.8)))
    if shape == 1:
        return random_convex_soft_set(universe, box, sub)
    if shape == 2:
        return random_concave_soft_set(universe, box, sub)
    if shape == 3:
        return _flip_one(random_convex_soft_set(universe, box, sub), rng)
    return _flip_one(random_concave_soft_set(universe, box, sub), rng)
