import random
from functools import lru_cache
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, strategies as st

from pakstanley.arrangement import CoxeterSpec
from pakstanley.errors import DomainError, InvalidTableError
from pakstanley.permtools import (
    adjacent_step,
    all_permutations,
    apply_word,
    chamber_extremes,
    compose,
    from_inversion_table,
    identity,
    inverse,
    inversion_table,
    ld_lu,
    orbit_label,
    reduced_word,
    rev,
    walk_orbit,
)


@lru_cache(maxsize=None)
def fundamental_labels(n, m):
    """Weakly increasing a with a_i <= 1 + m(i-1)."""
    return tuple(a for a in combinations_with_replacement(range(1, m * (n - 1) + 2), n)
                 if all(x <= 1 + m * i for i, x in enumerate(a)))


def brute_inversion_table(pi):
    # count pairs (value v > i) appearing before i
    n = len(pi)
    return tuple(sum(1 for p in range(pi.index(i)) if pi[p] > i) for i in range(1, n + 1))


def test_compose_convention():
    assert compose((1, 2, 5), (2, 3, 1)) == (2, 5, 1)
    assert inverse((3, 1, 2)) == (2, 3, 1)


@pytest.mark.parametrize("pi,table", [
    ((1, 2, 3, 4), (0, 0, 0, 0)),
    ((3, 1, 2), (1, 1, 0)),
    ((2, 3, 1), (2, 0, 0)),
    ((5, 8, 1, 3, 4, 6, 2, 7), (2, 5, 2, 2, 0, 1, 1, 0)),
])
def test_inversion_table_examples(pi, table):
    assert inversion_table(pi) == table
    assert from_inversion_table(table) == pi


def test_from_inversion_table_rejects_outside_box():
    with pytest.raises(InvalidTableError):
        from_inversion_table((0, 2, 0))
    with pytest.raises(InvalidTableError):
        from_inversion_table((0, 0, 1))


@pytest.mark.parametrize("n", range(1, 8))
def test_inversion_table_bijection(n):
    seen = set()
    for pi in all_permutations(n):
        table = inversion_table(pi)
        assert table == brute_inversion_table(pi)
        assert from_inversion_table(table) == pi
        ld, lu = ld_lu(pi)
        assert table == compose(lu, inverse(pi))
        seen.add(table)
    assert len(seen) == len(list(all_permutations(n)))


def test_ld_lu():
    assert ld_lu((1, 2, 3, 4)) == ((0, 1, 2, 3), (0, 0, 0, 0))
    assert ld_lu((2, 3, 1)) == ((0, 1, 0), (0, 0, 2))
    assert ld_lu((4, 4, 4)) == ((0, 0, 0), (0, 0, 0))


@pytest.mark.parametrize("pi,spec,low,high", [
    ((1, 2, 3), CoxeterSpec(3, 2, 2), (1, 1, 1), (1, 3, 5)),
    ((2, 3, 1), CoxeterSpec(3, 2, 2), (3, 1, 1), (7, 1, 3)),
    ((1, 2, 3), CoxeterSpec(3, 1, 0), (1, 1, 1), (1, 2, 3)),
])
def test_chamber_extremes(pi, spec, low, high):
    assert chamber_extremes(pi, spec) == (low, high)


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("k", [1, 2, 3])
def test_catalan_maximum_closed_form(n, k):
    spec = CoxeterSpec(n, k, k)
    for pi in all_permutations(n):
        low, high = chamber_extremes(pi, spec)
        assert high == tuple(u + k * (v - 1) for u, v in zip(low, inverse(pi)))


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("m", [1, 2, 3])
def test_shi_maximum_closed_form(n, m):
    spec = CoxeterSpec(n, m, m - 1)
    for pi in all_permutations(n):
        assert chamber_extremes(pi, spec)[1] == tuple(1 + m * (v - 1) for v in inverse(pi))


def test_reverse_duality_of_maxima():
    for n in range(1, 7):
        for pi in all_permutations(n):
            rho = inverse(rev(inverse(pi)))
            for k in (1, 2, 3):
                for l in (0, 1, 2, 3):
                    high = chamber_extremes(pi, CoxeterSpec(n, k, l))[1]
                    dual = chamber_extremes(rho, CoxeterSpec(n, l + 1, k - 1))[1]
                    assert dual == rev(high)


@pytest.mark.parametrize("pi,a,b", [
    ((3, 1, 2), (1, 2, 5), (3, 6, 1)),
    ((1, 3, 2), (1, 2, 4), (1, 5, 2)),
    ((1, 2, 3), (1, 3, 3), (1, 3, 3)),
])
def test_orbit_label(pi, a, b):
    assert orbit_label(pi, a) == b


def test_orbit_label_requires_increasing():
    with pytest.raises(DomainError):
        orbit_label((1, 2, 3), (2, 1, 1))


@pytest.mark.parametrize("b,i,c", [
    ((1, 2, 4), 2, (1, 5, 2)),
    ((1, 5, 2), 2, (1, 2, 4)),
    ((1, 1, 1), 1, (2, 1, 1)),
])
def test_adjacent_step(b, i, c):
    assert adjacent_step(b, i) == c


def test_orbit_of_124_by_words():
    assert walk_orbit((1, 2, 4), [1, 2]) == (3, 5, 1)
    assert apply_word([1, 2], 3) == (3, 1, 2)


@given(st.lists(st.integers(1, 6), min_size=2, max_size=6), st.data())
def test_adjacent_step_is_an_involution(b, data):
    i = data.draw(st.integers(1, len(b) - 1))
    assert adjacent_step(adjacent_step(b, i), i) == tuple(b)


@pytest.mark.parametrize("n", range(1, 7))
def test_reduced_word(n):
    for pi in all_permutations(n):
        word = reduced_word(pi)
        assert apply_word(word, n) == pi
        assert len(word) == sum(inversion_table(pi))


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("m", [1, 2])
def test_walk_along_reduced_words_matches_orbit_label(n, m):
    perms = list(all_permutations(n))
    for a in fundamental_labels(n, m):
        for pi in perms:
            assert walk_orbit(a, reduced_word(pi)) == orbit_label(pi, a)


def test_walk_along_arbitrary_words_matches_orbit_label():
    rng = random.Random(7)
    for _ in range(2000):
        n = rng.randint(2, 6)
        m = rng.randint(1, 3)
        a = rng.choice(fundamental_labels(n, m))
        word = [rng.randint(1, n - 1) for _ in range(rng.randint(0, 12))]
        assert walk_orbit(a, word) == orbit_label(apply_word(word, n), a)


def test_identity_helpers():
    assert identity(4) == (1, 2, 3, 4)
    assert inversion_table(identity(5)) == (0,) * 5
