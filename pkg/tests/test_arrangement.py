from itertools import product

import pytest
from hypothesis import given, strategies as st

from pakstanley.arrangement import CoxeterSpec, Hyperplane, hyperplanes, normalize
from pakstanley.errors import DomainError, InvalidPairError


@pytest.mark.parametrize("n,k,l,count", [(3, 2, 2, 15), (2, 1, 0, 2), (3, 1, 1, 9), (4, 3, 1, 30)])
def test_hyperplane_count(n, k, l, count):
    spec = CoxeterSpec(n, k, l)
    hs = hyperplanes(spec)
    assert len(hs) == count == spec.hyperplane_count()
    assert len(set(hs)) == len(hs)


def test_smallest_shi():
    hs = hyperplanes(CoxeterSpec(2, 1, 0))
    assert hs == [Hyperplane(2, 1, 0), Hyperplane(1, 2, 1)]
    assert {h: h.increment_target() for h in hs} == {Hyperplane(1, 2, 1): 2, Hyperplane(2, 1, 0): 1}


def test_hyperplane_order_is_lex():
    hs = hyperplanes(CoxeterSpec(3, 2, 1))
    assert [h.sort_key() for h in hs] == sorted(h.sort_key() for h in hs)
    assert hs[0].sort_key()[:2] == (1, 2)


@pytest.mark.parametrize("raw,expected,target", [
    ((1, 3, -2), Hyperplane(3, 1, 2), 1),
    ((1, 2, 0), Hyperplane(2, 1, 0), 1),
    ((2, 3, 1), Hyperplane(2, 3, 1), 3),
    ((3, 1, 0), Hyperplane(3, 1, 0), 1),
])
def test_normalize(raw, expected, target):
    h = normalize(*raw)
    assert h == expected
    assert h.increment_target() == target


def test_normalize_rejects_equal_indices():
    with pytest.raises(InvalidPairError):
        normalize(2, 2, 1)


@pytest.mark.parametrize("args", [(0, 1, 0), (3, 0, 1), (3, 1, -1)])
def test_spec_validation(args):
    with pytest.raises(DomainError):
        CoxeterSpec(*args)


def test_spec_predicates():
    assert CoxeterSpec(3, 2, 2).is_catalan() and CoxeterSpec(3, 2, 2).m() == 2
    assert CoxeterSpec(3, 2, 1).is_shi() and not CoxeterSpec(3, 2, 1).is_catalan()
    with pytest.raises(DomainError):
        CoxeterSpec(3, 2, 1).m()


@pytest.mark.parametrize("n,k,l", [(3, 2, 2), (4, 1, 0), (3, 1, 3)])
def test_each_hyperplane_is_in_exactly_one_class(n, k, l):
    spec = CoxeterSpec(n, k, l)
    for h in hyperplanes(spec):
        classes = [h.i < h.j and 1 <= h.m <= k, h.i > h.j and 1 <= h.m <= l, h.i > h.j and h.m == 0]
        assert sum(classes) == 1
        assert h.is_valid_for(spec)


@given(st.integers(1, 6), st.integers(1, 6), st.integers(-5, 5))
def test_normalize_idempotent(i, j, a):
    if i == j:
        return
    h = normalize(i, j, a)
    assert normalize(h.i, h.j, h.m) == h
    # same geometric hyperplane: x_i - x_j = a  <=>  x_h.i - x_h.j = h.m
    assert (h.i, h.j, h.m) in {(i, j, a), (j, i, -a)}


def test_normalize_is_a_bijection_on_raw_equations():
    raw = [(i, j, a) for i, j in product(range(1, 4), repeat=2) if i < j for a in range(-3, 4)]
    assert len({normalize(*e) for e in raw}) == len(raw)


@pytest.mark.parametrize("n,m", [(3, 1), (3, 2), (4, 3)])
def test_catalan_closed_under_swap(n, m):
    hs = set(hyperplanes(CoxeterSpec(n, m, m)))
    assert {normalize(h.j, h.i, h.m) for h in hs} == hs
