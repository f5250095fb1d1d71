"""Domain types: universes, element subsets, lattice boxes and soft sets.

Element subsets are stored as integer bitmasks (bit ``i`` is the ``i``-th
universe element), so every set operation is exact and cheap.  Parameters
are integer lattice points, represented as plain tuples of ints.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Point = tuple[int, ...]


class ValidationError(ValueError):
    """Raised when a value violates a soft-set invariant."""


class CarrierMismatch(ValidationError):
    """Two soft sets do not share universe, dimension and box."""


def as_point(coords: Iterable[int]) -> Point:
    point = tuple(coords)
    for c in point:
        if isinstance(c, bool) or not isinstance(c, int):
            raise ValidationError(f"coordinate {c!r} is not an integer")
    return point


def format_point(point: Point) -> str:
    return ",".join(str(c) for c in point)


@dataclass(frozen=True)
class Universe:
    """An ordered finite universe of named elements."""

    elements: tuple[str, ...]

    def __post_init__(self):
        elements = tuple(self.elements)
        object.__setattr__(self, "elements", elements)
        if not elements:
            raise ValidationError("universe must contain at least one element")
        seen = set()
        for name in elements:
            if not isinstance(name, str) or not name:
                raise ValidationError(f"invalid element name {name!r}")
            if name in seen:
                raise ValidationError(f"duplicate element name {name!r}")
            seen.add(name)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.elements)) - 1

    def index(self, name: str) -> int:
        try:
            return self.elements.index(name)
        except ValueError:
            raise ValidationError(f"unknown element {name!r}") from None

    def subset(self, names: Iterable[str] = ()) -> ElemSubset:
        bits = 0
        for name in names:
            bits |= 1 << self.index(name)
        return ElemSubset(self, bits)

    def empty(self) -> ElemSubset:
        return ElemSubset(self, 0)

    def full(self) -> ElemSubset:
        return ElemSubset(self, self.full_mask)

    def all_subsets(self) -> Iterator[ElemSubset]:
        """Every subset of the universe, in increasing bitmask order."""
        for bits in range(1 << len(self.elements)):
            yield ElemSubset(self, bits)


@dataclass(frozen=True)
class ElemSubset:
    """A subset of a universe, held as a bitmask of the universe's width."""

    universe: Universe
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits <= self.universe.full_mask:
            raise ValidationError(
                f"mask {self.bits:#b} does not fit a universe of size {self.universe.size}"
            )

    def _check(self, other: ElemSubset) -> None:
        if other.universe != self.universe:
            raise CarrierMismatch("element subsets belong to different universes")

    def __or__(self, other: ElemSubset) -> ElemSubset:
        self._check(other)
        return ElemSubset(self.universe, self.bits | other.bits)

    def __and__(self, other: ElemSubset) -> ElemSubset:
        self._check(other)
        return ElemSubset(self.universe, self.bits & other.bits)

    def __sub__(self, other: ElemSubset) -> ElemSubset:
        self._check(other)
        return ElemSubset(self.universe, self.bits & ~other.bits)

    def complement(self) -> ElemSubset:
        return ElemSubset(self.universe, self.universe.full_mask & ~self.bits)

    def issubset(self, other: ElemSubset) -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def issuperset(self, other: ElemSubset) -> bool:
        return other.issubset(self)

    def __le__(self, other: ElemSubset) -> bool:
        return self.issubset(other)

    def __ge__(self, other: ElemSubset) -> bool:
        return self.issuperset(other)

    def __contains__(self, name: str) -> bool:
        return bool(self.bits >> self.universe.index(name) & 1)

    def __iter__(self) -> Iterator[int]:
        """Indices of member elements in universe order."""
        return (i for i in range(self.universe.size) if self.bits >> i & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def names(self) -> list[str]:
        return [self.universe.elements[i] for i in self]

    def __repr__(self) -> str:
        return "{" + ", ".join(self.names()) + "}"


@dataclass(frozen=True)
class GridBox:
    """Closed axis-aligned box of integer lattice points."""

    min: Point
    max: Point

    def __post_init__(self):
        lo, hi = as_point(self.min), as_point(self.max)
        object.__setattr__(self, "min", lo)
        object.__setattr__(self, "max", hi)
        if not lo:
            raise ValidationError("box dimension must be at least 1")
        if len(lo) != len(hi):
            raise ValidationError(f"box corners {lo} and {hi} differ in dimension")
        if any(a > b for a, b in zip(lo, hi)):
            raise ValidationError(f"box min {lo} exceeds max {hi}")

    @classmethod
    def cube(cls, dim: int, side: int, origin: int = 0) -> GridBox:
        """The box ``[origin, origin + side - 1]^dim``."""
        if side < 1:
            raise ValidationError("box side must be at least 1")
        return cls((origin,) * dim, (origin + side - 1,) * dim)

    @property
    def dim(self) -> int:
        return len(self.min)

    def contains(self, point: Point) -> bool:
        return len(point) == self.dim and all(
            a <= c <= b for a, c, b in zip(self.min, point, self.max)
        )

    def __contains__(self, point: Point) -> bool:
        return self.contains(point)

    def points(self) -> Iterator[Point]:
        """All lattice points of the box in lexicographic order."""
        return itertools.product(*(range(a, b + 1) for a, b in zip(self.min, self.max)))

    def __len__(self) -> int:
        n = 1
        for a, b in zip(self.min, self.max):
            n *= b - a + 1
        return n


class SoftSet:
    """A map from the lattice points of a box to subsets of a universe.

    Only points with non-empty values are stored; every other point of the
    box maps to the empty subset.  Instances are immutable.
    """

    __slots__ = ("universe", "box", "_masks")

    def __init__(self, universe: Universe, box: GridBox, masks: dict[Point, int]):
        self.universe = universe
        self.box = box
        full = universe.full_mask
        self._masks = {}
        for p, m in masks.items():
            if not 0 <= m <= full:
                raise ValidationError(f"mask at point {p} does not fit the universe")
            if p not in box:
                raise ValidationError(f"point {p} lies outside the box")
            if m:
                self._masks[p] = m

    @property
    def dim(self) -> int:
        return self.box.dim

    def value_at(self, point: Sequence[int]) -> ElemSubset:
        point = as_point(point)
        if point not in self.box:
            raise ValidationError(f"point {point} lies outside the box")
        return ElemSubset(self.universe, self._masks.get(point, 0))

    def mask_at(self, point: Point) -> int:
        return self._masks.get(point, 0)

    def masks(self) -> dict[Point, int]:
        return dict(self._masks)

    def support(self) -> list[Point]:
        """Points with a non-empty value, lexicographically ordered."""
        return sorted(self._masks)

    def items(self) -> list[tuple[Point, ElemSubset]]:
        return [(p, ElemSubset(self.universe, self._masks[p])) for p in self.support()]

    def same_carrier(self, other: SoftSet) -> bool:
        return self.universe == other.universe and self.box == other.box

    def __len__(self) -> int:
        return len(self._masks)

    def __eq__(self, other):
        if not isinstance(other, SoftSet):
            return NotImplemented
        return self.same_carrier(other) and self._masks == other._masks

    def __hash__(self):
        return hash((self.universe, self.box, frozenset(self._masks.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"({format_point(p)}, {v!r})" for p, v in self.items())
        return f"SoftSet[{format_point(self.box.min)}..{format_point(self.box.max)}]{{{body}}}"


def make_soft_set(
    universe: Universe,
    dim: int,
    box: GridBox,
    pairs: Iterable[tuple[Sequence[int], ElemSubset]],
) -> SoftSet:
    """Build a soft set from ``(point, subset)`` pairs, dropping empty values."""
    if box.dim != dim:
        raise ValidationError(f"box has dimension {box.dim}, expected {dim}")
    masks: dict[Point, int] = {}
    for raw, value in pairs:
        point = as_point(raw)
        if len(point) != dim:
            raise ValidationError(f"point {point} has dimension {len(point)}, expected {dim}")
        if point not in box:
            raise ValidationError(f"point {point} lies outside the box")
        if point in masks:
            raise ValidationError(f"duplicate point {point}")
        if value.universe != universe:
            raise ValidationError(f"value at point {point} is over a different universe")
        masks[point] = value.bits
    return SoftSet(universe, box, masks)


def empty_soft_set(universe: Universe, box: GridBox) -> SoftSet:
    return SoftSet(universe, box, {})


def constant_soft_set(universe: Universe, box: GridBox, value: ElemSubset) -> SoftSet:
    return SoftSet(universe, box, {p: value.bits for p in box.points()})


class WitnessKind(enum.Enum):
    CONVEXITY = "convexity-violation"
    CONCAVITY = "concavity-violation"


@dataclass(frozen=True)
class Witness:
    """A point ``z`` strictly between ``x`` and ``y`` and an element index ``u``
    that together refute convexity or concavity."""

    x: Point
    y: Point
    z: Point
    u: int
    kind: WitnessKind

    def format(self, universe: Universe) -> str:
        return (
            f"x={format_point(self.x)} y={format_point(self.y)} "
            f"z={format_point(self.z)} u={universe.elements[self.u]}"
        )
