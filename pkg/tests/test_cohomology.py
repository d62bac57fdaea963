from math import comb

import pytest

from coxtoric.cohomology import (
    betti,
    cohomology_series_formula,
    cohomology_series_poset,
    cohomology_table,
    even_compositions,
    even_partitions,
    exponential_specialization,
    rep_via_induction,
    rep_via_poset,
    verify_cohomology_series,
)
from coxtoric.rep_ring import SchurVector

S = SchurVector


def test_betti_examples():
    assert all(betti(n, 0) == 1 for n in range(1, 13))
    assert betti(4, 2) == 5
    assert all(betti(n, 1) == comb(n, 2) for n in range(2, 13))
    assert betti(6, 3) == 61
    assert betti(10, 5) == 50521


def test_betti_vanishing_threshold():
    for n in range(1, 11):
        for i in range(0, 7):
            assert (betti(n, i) == 0) == (2 * i > n)


def test_even_compositions():
    assert even_compositions(0) == ((),)
    assert set(even_compositions(4)) == {(4,), (2, 2)}
    assert set(even_compositions(6)) == {(6,), (4, 2), (2, 4), (2, 2, 2)}
    assert set(even_partitions(6)) == {(6,), (4, 2), (2, 2, 2)}


def test_rep_via_induction_examples():
    assert rep_via_induction(5, 0) == S(5, {(5,): 1})
    assert rep_via_induction(4, 2) == S(4, {(2, 2): 1, (2, 1, 1): 1})
    assert rep_via_induction(4, 1) == S(4, {(3, 1): 1, (2, 1, 1): 1})
    assert rep_via_induction(4, 1).dimension() == comb(4, 2)
    assert rep_via_induction(4, 3).is_zero()


def test_rep_via_poset_examples():
    assert rep_via_poset(5, 0) == S(5, {(5,): 1})
    assert rep_via_poset(4, 2) == S(4, {(2, 2): 1, (2, 1, 1): 1})
    assert rep_via_poset(5, 1) == S(5, {(4, 1): 1, (3, 1, 1): 1})


def test_rep_via_poset_respects_bound():
    with pytest.raises(ValueError):
        rep_via_poset(20, 5, bound=8)


def test_reps_are_honest_modules():
    """The signed sums collapse to nonnegative integer multiplicities."""
    for n in range(0, 9):
        for i in range(0, n // 2 + 1):
            rep = rep_via_induction(n, i)
            assert rep.is_integral()
            assert all(c > 0 for c in rep.coeffs.values())
            assert rep.dimension() == betti(n, i)


def test_dimension_against_betti_to_ten():
    for n in range(0, 11):
        for i in range(0, 6):
            assert rep_via_induction(n, i).dimension() == betti(n, i)


def test_two_routes_agree():
    for n in range(0, 8):
        for i in range(0, n // 2 + 1):
            if 2 * i <= 6:
                assert rep_via_induction(n, i) == rep_via_poset(n, i)


def test_series_degree_one_and_two():
    lhs = cohomology_series_poset(4)
    rhs = cohomology_series_formula(4)
    assert lhs.term(1, 0) == S.h(1) == rhs.term(1, 0)
    assert lhs.term(2, 1) == S(2, {(1, 1): -1})
    assert lhs.term(4, 1) == S(4, {(3, 1): -1, (2, 1, 1): -1})
    assert lhs.term(4, 2) == S(4, {(2, 2): 1, (2, 1, 1): 1})


def test_verify_series_small():
    assert verify_cohomology_series(6)


def test_series_t_equal_one_specialization():
    """Collapsing t to 1 gives the alternating sum on both sides."""
    lhs = cohomology_series_poset(6).substitute_t()
    rhs = cohomology_series_formula(6).substitute_t()
    assert lhs == rhs
    for n in range(1, 7):
        expected = S.zero(n)
        for i in range(0, n // 2 + 1):
            expected = expected + rep_via_induction(n, i).scale((-1) ** i)
        assert lhs.get(n, S.zero(n)) == expected


def test_exponential_specialization():
    rows = exponential_specialization(8)
    assert all(r["ok"] for r in rows)
    by_cell = {(r["n"], r["i"]): r["coefficient"] for r in rows}
    assert by_cell[(2, 1)] == -1
    assert by_cell[(4, 2)] == 5
    assert all(by_cell[(n, 0)] == 1 for n in range(0, 9))


def test_cohomology_table():
    table = cohomology_table(6)
    assert [row["betti"] for row in table] == [1, 15, 75, 61]
    for row in table:
        assert row["rep"].dimension() == row["betti"]
    with pytest.raises(ValueError):
        cohomology_table(4, route="nonsense")
