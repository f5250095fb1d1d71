"""Pointwise soft-set algebra: subset, complement, union, intersection and
alpha-inclusion."""

from __future__ import annotations

from functools import reduce

from .core import CarrierMismatch, ElemSubset, Point, SoftSet


def _require_same_carrier(s: SoftSet, t: SoftSet) -> None:
    if s.universe != t.universe:
        raise CarrierMismatch("soft sets are over different universes")
    if s.box != t.box:
        raise CarrierMismatch(f"soft sets are over different boxes: {s.box} vs {t.box}")


def is_soft_subset(s: SoftSet, t: SoftSet) -> bool:
    _require_same_carrier(s, t)
    return all(m & ~t.mask_at(p) == 0 for p, m in s.masks().items())


def complement(s: SoftSet) -> SoftSet:
    """Pointwise ``U \\ f(x)`` over the whole box; absent points become ``U``."""
    full = s.universe.full_mask
    return SoftSet(s.universe, s.box, {p: full & ~s.mask_at(p) for p in s.box.points()})


def union(s: SoftSet, t: SoftSet) -> SoftSet:
    _require_same_carrier(s, t)
    masks = s.masks()
    for p, m in t.masks().items():
        masks[p] = masks.get(p, 0) | m
    return SoftSet(s.universe, s.box, masks)


def intersection(s: SoftSet, t: SoftSet) -> SoftSet:
    _require_same_carrier(s, t)
    return SoftSet(s.universe, s.box, {p: m & t.mask_at(p) for p, m in s.masks().items()})


def union_all(family: list[SoftSet]) -> SoftSet:
    if not family:
        raise ValueError("union of an empty family is undefined without a carrier")
    return reduce(union, family)


def intersection_all(family: list[SoftSet]) -> SoftSet:
    if not family:
        raise ValueError("intersection of an empty family is undefined without a carrier")
    return reduce(intersection, family)


def alpha_inclusion(s: SoftSet, alpha: ElemSubset) -> list[Point]:
    """Points ``x`` of the box with ``f(x) ⊇ alpha``, lexicographically ordered."""
    if alpha.universe != s.universe:
        raise CarrierMismatch("alpha is over a different universe")
    need = alpha.bits
    if need == 0:
        return list(s.box.points())
    return [p for p in s.support() if s.mask_at(p) & need == need]
