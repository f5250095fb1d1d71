"""Exact geometry on integer lattices.

A set of lattice points is *segment-convex* when it contains every lattice
point of the segment between any two of its members.  In two dimensions the
stricter *hull convexity* (the set equals the lattice points of its convex
hull) is available as a cross-check.
"""

from __future__ import annotations

import math
import random
from typing import Iterable, Optional

from .core import GridBox, Point, ValidationError

LatticeSet = frozenset  # frozenset[Point]


def segment_lattice_points(x: Point, y: Point) -> list[Point]:
    """All lattice points of the closed segment ``[x, y]``, ordered from x to y.

    With ``g = gcd(|y_i - x_i|)`` the points are ``x + k (y - x) / g`` for
    ``k = 0..g``.
    """
    if len(x) != len(y):
        raise ValidationError(f"points {x} and {y} differ in dimension")
    delta = [b - a for a, b in zip(x, y)]
    g = math.gcd(*delta)
    if g == 0:
        return [tuple(x)]
    step = [d // g for d in delta]
    return [tuple(a + k * s for a, s in zip(x, step)) for k in range(g + 1)]


def segment_violation(points: Iterable[Point]) -> Optional[tuple[Point, Point, Point]]:
    """Lexicographically smallest ``(x, y, z)`` with ``x, y`` in the set and a
    lattice point ``z`` of their segment missing from it, or ``None``."""
    pts = sorted(set(points))
    members = set(pts)
    for i, x in enumerate(pts):
        for y in pts[i + 1:]:
            delta = [b - a for a, b in zip(x, y)]
            g = math.gcd(*delta)
            if g < 2:
                continue
            step = [d // g for d in delta]
            # x < y lexicographically, so points along the segment increase too
            for k in range(1, g):
                z = tuple(a + k * s for a, s in zip(x, step))
                if z not in members:
                    return x, y, z
    return None


def is_segment_convex(points: Iterable[Point]) -> bool:
    return segment_violation(points) is None


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull_2d(points: Iterable[Point]) -> list[Point]:
    """Hull vertices in counter-clockwise order, collinear points dropped
    (Andrew's monotone chain, integer arithmetic)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def chain(seq):
        out: list[Point] = []
        for p in seq:
            while len(out) >= 2 and _cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower, upper = chain(pts), chain(reversed(pts))
    return lower[:-1] + upper[:-1]


def hull_lattice_points_2d(points: Iterable[Point]) -> set[Point]:
    """Every lattice point in the closed convex hull of a planar point set."""
    hull = convex_hull_2d(points)
    if not hull:
        return set()
    if len(hull) <= 2:
        return set(segment_lattice_points(hull[0], hull[-1]))
    xs = [p[0] for p in hull]
    ys = [p[1] for p in hull]
    edges = list(zip(hull, hull[1:] + hull[:1]))
    inside = set()
    for px in range(min(xs), max(xs) + 1):
        for py in range(min(ys), max(ys) + 1):
            q = (px, py)
            if all(_cross(a, b, q) >= 0 for a, b in edges):
                inside.add(q)
    return inside


def is_hull_convex_2d(points: Iterable[Point], dim: Optional[int] = None) -> bool:
    """True iff the set equals the lattice points of its own convex hull.

    Only dimensions 1 and 2 are supported.
    """
    pts = set(points)
    dims = {len(p) for p in pts}
    if dim is not None:
        dims.add(dim)
    if len(dims) > 1:
        raise ValidationError("points of mixed dimension")
    if dims and max(dims) > 2:
        raise ValidationError("hull convexity is only available for dimension 1 or 2")
    if not pts:
        return True
    if dims == {1}:
        xs = [p[0] for p in pts]
        return len(pts) == max(xs) - min(xs) + 1
    return hull_lattice_points_2d(pts) == pts


def random_convex_lattice_set(box: GridBox, seed: int, max_constraints: int = 4) -> LatticeSet:
    """Lattice points of ``box`` satisfying a random system of integer
    half-space inequalities ``a . p <= b``.

    The result is the lattice part of a convex polytope, so it is hull convex
    (and segment-convex).  It may be empty.
    """
    rng = random.Random(seed)
    pts = list(box.points())
    anchor = rng.choice(pts)
    spans = [hi - lo for lo, hi in zip(box.min, box.max)]
    constraints = []
    for _ in range(rng.randint(0, max_constraints)):
        a = tuple(rng.randint(-3, 3) for _ in range(box.dim))
        if not any(a):
            continue
        reach = sum(abs(c) * s for c, s in zip(a, spans))
        # offsets below zero can cut the anchor away, giving small or empty sets
        b = sum(c * p for c, p in zip(a, anchor)) + rng.randint(-1, max(reach // 2, 0))
        constraints.append((a, b))
    return frozenset(
        p for p in pts if all(sum(c * q for c, q in zip(a, p)) <= b for a, b in constraints)
    )
