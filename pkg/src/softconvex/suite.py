"""Randomized verification of the closure, duality and alpha-cut laws.

Each law is checked over ``trials`` independently generated instances.  The
seed of trial ``i`` of a law is derived from ``(master_seed, law, i)``, so a
report is a pure function of its inputs and trial order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from .algebra import complement, intersection, intersection_all, union, union_all
from .analysis import (
    alpha_cut_sides,
    concave_witness,
    convex_witness,
    random_concave_soft_set,
    random_convex_soft_set,
    random_mixed_soft_set,
)
from .core import GridBox, SoftSet, Universe, Witness
from .seeding import derive_seed


@dataclass(frozen=True)
class GeneratorConfig:
    dim: int = 1
    box_side: int = 3
    universe_size: int = 2
    max_family: int = 4

    def __post_init__(self):
        if self.dim < 1 or self.box_side < 1 or self.universe_size < 1:
            raise ValueError("dim, box side and universe size must all be positive")
        if self.max_family < 2:
            raise ValueError("max_family must be at least 2")

    def universe(self) -> Universe:
        return Universe(tuple(f"u{i + 1}" for i in range(self.universe_size)))

    def box(self) -> GridBox:
        return GridBox.cube(self.dim, self.box_side)


@dataclass(frozen=True)
class Failure:
    """One trial where a law's expected outcome did not occur (or, for a
    refutable law, where a counterexample was found)."""

    trial: int
    instances: tuple[SoftSet, ...]
    witness: Optional[Witness]
    note: str = ""


@dataclass(frozen=True)
class Law:
    name: str
    expect_holds: bool
    # (rng, universe, box, config) -> (instances, witness, note), or None if clean
    check: Callable[[random.Random, Universe, GridBox, GeneratorConfig], Optional[tuple]]


@dataclass
class LawResult:
    name: str
    expect_holds: bool
    trials: int
    violations: int = 0
    first: Optional[Failure] = None

    @property
    def passed(self) -> bool:
        return self.violations == 0 if self.expect_holds else True

    @property
    def status(self) -> str:
        if self.expect_holds:
            return "PASS" if self.violations == 0 else "FAIL"
        return "REFUTED" if self.violations else "EXHAUSTED"


@dataclass
class SuiteReport:
    config: GeneratorConfig
    master_seed: int
    trials: int
    results: list[LawResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def result(self, name: str) -> LawResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)


def _seed(rng: random.Random) -> int:
    return rng.getrandbits(64)


def _convex(rng, universe, box):
    return random_convex_soft_set(universe, box, _seed(rng))


def _concave(rng, universe, box):
    return random_concave_soft_set(universe, box, _seed(rng))


def _family(rng, make, universe, box, config):
    return [make(rng, universe, box) for _ in range(rng.randint(2, config.max_family))]


def _closure(make, combine, decide):
    def check(rng, universe, box, config):
        s, t = make(rng, universe, box), make(rng, universe, box)
        w = decide(combine(s, t))
        return ((s, t), w, "") if w else None
    return check


def _family_closure(make, combine_all, decide):
    def check(rng, universe, box, config):
        family = _family(rng, make, universe, box, config)
        w = decide(combine_all(family))
        return (tuple(family), w, f"family of {len(family)}") if w else None
    return check


def _complement_duality(first, second):
    # first(S) is None  <=>  second(complement(S)) is None
    def check(rng, universe, box, config):
        s = random_mixed_soft_set(universe, box, _seed(rng))
        w_s, w_c = first(s), second(complement(s))
        if (w_s is None) == (w_c is None):
            return None
        return (s,), w_s or w_c, "verdicts on S and its complement disagree"
    return check


def _alpha_cut(rng, universe, box, config):
    s = random_mixed_soft_set(universe, box, _seed(rng))
    lhs, rhs = alpha_cut_sides(s)
    if lhs == rhs:
        return None
    return (s,), convex_witness(s), f"convex={lhs} but all alpha-cuts convex={rhs}"


LAWS: tuple[Law, ...] = (
    Law("convex-intersection", True, _closure(_convex, intersection, convex_witness)),
    Law("convex-family-intersection", True,
        _family_closure(_convex, intersection_all, convex_witness)),
    Law("convex-union-nonclosure", False, _closure(_convex, union, convex_witness)),
    Law("concave-union", True, _closure(_concave, union, concave_witness)),
    Law("concave-family-union", True, _family_closure(_concave, union_all, concave_witness)),
    Law("concave-intersection", True, _closure(_concave, intersection, concave_witness)),
    Law("concave-family-intersection", True,
        _family_closure(_concave, intersection_all, concave_witness)),
    Law("convex-complement-concave", True, _complement_duality(convex_witness, concave_witness)),
    Law("concave-complement-convex", True, _complement_duality(concave_witness, convex_witness)),
    Law("alpha-cut-characterization", True, _alpha_cut),
)

LAW_NAMES = tuple(law.name for law in LAWS)


def run_law(law: Law, trials: int, config: GeneratorConfig, master_seed: int) -> LawResult:
    universe, box = config.universe(), config.box()
    result = LawResult(law.name, law.expect_holds, trials)
    for i in range(trials):
        rng = random.Random(derive_seed(master_seed, law.name, i))
        found = law.check(rng, universe, box, config)
        if found is None:
            continue
        result.violations += 1
        if result.first is None:
            instances, witness, note = found
            result.first = Failure(i, instances, witness, note)
    return result


def theorem_suite(
    trials: int,
    config: GeneratorConfig = GeneratorConfig(),
    master_seed: int = 0,
    laws: Optional[list[str]] = None,
) -> SuiteReport:
    if trials < 1:
        raise ValueError("trials must be at least 1")
    selected = LAWS if laws is None else tuple(_law(name) for name in laws)
    report = SuiteReport(config, master_seed, trials)
    for law in selected:
        report.results.append(run_law(law, trials, config, master_seed))
    return report


def _law(name: str) -> Law:
    for law in LAWS:
        if law.name == name:
            return law
    raise KeyError(f"unknown law {name!r}; choose from {', '.join(LAW_NAMES)}")
