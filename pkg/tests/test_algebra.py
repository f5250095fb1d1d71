import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from softconvex import (
    CarrierMismatch,
    ElemSubset,
    GridBox,
    SoftSet,
    Universe,
    alpha_inclusion,
    complement,
    intersection,
    intersection_all,
    is_soft_subset,
    union,
    union_all,
)
from softconvex.core import constant_soft_set, empty_soft_set

from conftest import soft_set_pairs, soft_sets


def test_subset_examples(example_s, example_t):
    phi = empty_soft_set(example_s.universe, example_s.box)
    assert is_soft_subset(phi, example_t)
    assert is_soft_subset(example_s, example_s)
    # at point 2, {u1, u4} is not inside {u1, u2, u3}
    assert not is_soft_subset(example_s, example_t)


def test_complement_examples(example_s):
    u = example_s.universe
    phi = empty_soft_set(u, example_s.box)
    assert complement(phi) == constant_soft_set(u, example_s.box, u.full())
    assert complement(complement(example_s)) == example_s
    assert complement(example_s).value_at((1,)).names() == ["u4", "u5", "u6"]
    assert complement(example_s).value_at((3,)) == u.full()
    assert complement(example_s).value_at((4,)) == u.empty()


def test_union_examples(example_s, example_t):
    u = example_s.universe
    assert union(example_s, example_t).value_at((1,)).names() == ["u1", "u2", "u3", "u6"]
    phi = empty_soft_set(u, example_s.box)
    assert union(example_s, phi) == example_s
    assert union(example_s, complement(example_s)) == constant_soft_set(u, example_s.box, u.full())


def test_intersection_examples(example_s, example_t):
    w = intersection(example_s, example_t)
    assert w.value_at((2,)).names() == ["u1"]
    assert w.value_at((4,)) == example_s.universe.empty()
    phi = empty_soft_set(example_s.universe, example_s.box)
    assert intersection(example_s, phi) == phi


def test_alpha_inclusion_examples(example_s):
    u = example_s.universe
    assert alpha_inclusion(example_s, u.subset(["u1"])) == [(1,), (2,), (4,)]
    assert alpha_inclusion(example_s, u.empty()) == list(example_s.box.points())
    assert alpha_inclusion(example_s, u.full()) == [(4,)]


def test_carrier_mismatch(example_s):
    other_box = empty_soft_set(example_s.universe, GridBox((0,), (5,)))
    other_universe = empty_soft_set(Universe(("u1",)), example_s.box)
    for op in (union, intersection, is_soft_subset):
        with pytest.raises(CarrierMismatch):
            op(example_s, other_box)
        with pytest.raises(CarrierMismatch):
            op(example_s, other_universe)
    with pytest.raises(CarrierMismatch):
        alpha_inclusion(example_s, Universe(("u1",)).full())


def test_family_folds(example_s, example_t):
    assert union_all([example_s, example_t, example_s]) == union(example_s, example_t)
    assert intersection_all([example_s]) == example_s
    with pytest.raises(ValueError):
        union_all([])


@given(soft_set_pairs())
def test_de_morgan(pair):
    s, t = pair
    assert complement(union(s, t)) == intersection(complement(s), complement(t))
    assert complement(intersection(s, t)) == union(complement(s), complement(t))


@given(soft_set_pairs())
def test_pointwise_definitions(pair):
    s, t = pair
    un, inter = union(s, t), intersection(s, t)
    for p in s.box.points():
        assert un.value_at(p) == s.value_at(p) | t.value_at(p)
        assert inter.value_at(p) == s.value_at(p) & t.value_at(p)
        assert complement(s).value_at(p) == s.value_at(p).complement()
    assert is_soft_subset(s, t) == all(s.value_at(p) <= t.value_at(p) for p in s.box.points())


@given(soft_set_pairs())
def test_mutual_subset_is_equality(pair):
    s, t = pair
    assert (is_soft_subset(s, t) and is_soft_subset(t, s)) == (s == t)
    assert is_soft_subset(s, s)


@given(soft_sets(), st.data())
def test_alpha_monotone_and_factorizes(s, data):
    full = s.universe.full_mask
    a = data.draw(st.integers(0, full))
    b = data.draw(st.integers(0, full)) | a
    alpha, beta = ElemSubset(s.universe, a), ElemSubset(s.universe, b)
    assert set(alpha_inclusion(s, beta)) <= set(alpha_inclusion(s, alpha))
    if a:
        singles = [set(alpha_inclusion(s, s.universe.subset([s.universe.elements[i]])))
                   for i in alpha]
        assert set(alpha_inclusion(s, alpha)) == set.intersection(*singles)


def test_alpha_inclusion_brute_force():
    u = Universe(("a", "b"))
    box = GridBox((0, 0), (1, 1))
    masks = dict(zip(box.points(), [0b01, 0b11, 0b00, 0b10]))
    s = SoftSet(u, box, masks)
    for alpha in u.all_subsets():
        expected = [p for p in itertools.product(range(2), range(2)) if masks[p] & alpha.bits == alpha.bits]
        assert alpha_inclusion(s, alpha) == expected
