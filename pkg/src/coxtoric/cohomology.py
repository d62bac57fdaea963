"""Betti numbers and symmetric group representations on the cohomology of the
real toric variety of the type-A reflection arrangement fan.

Two fully independent pipelines produce the representation on each H^i:

* the induction formula, a signed sum over tuples of even sizes of products
  e_{n_1} ... e_{n_m} h_{n-2i} evaluated by iterated Pieri, and
* the poset route, inducing the sign-twisted top homology of the even-subset
  lattice computed from order complexes.

Their degreewise agreement inside a t-series, together with the closed-form
Betti numbers A_{2i} * C(n, 2i), is the contract the acceptance suite pins.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .combinatorics import secant_numbers
from .poset_homology import (
    DEFAULT_BRUTE_FORCE_BOUND,
    top_interval_representation,
)
from .rep_ring import RepSeries, SchurVector, omega, pieri_e, pieri_h

FORMULA_DEGREE_LIMIT = 12


@lru_cache(maxsize=None)
def _secant(index: int) -> int:
    return secant_numbers(index)[-1]


def betti(n: int, i: int) -> int:
    """dim H^i for the n-th variety: A_{2i} * C(n, 2i)."""
    if n < 0 or i < 0:
        raise ValueError("n and i must be nonnegative")
    if 2 * i > n:
        return 0
    return _secant(2 * i) * comb(n, 2 * i)


@lru_cache(maxsize=None)
def even_compositions(total: int) -> tuple[tuple[int, ...], ...]:
    """Ordered tuples of even parts >= 2 with the given sum."""
    if total < 0 or total % 2:
        raise ValueError("total must be even and nonnegative")
    if total == 0:
        return ((),)
    out = []
    for first in range(2, total + 1, 2):
        for rest in even_compositions(total - first):
            out.append((first,) + rest)
    return tuple(out)


def even_partitions(total: int) -> list[tuple[int, ...]]:
    """Multisets of even parts >= 2 with the given sum, largest part first."""
    if total < 0 or total % 2:
        raise ValueError("total must be even and nonnegative")

    def gen(rem, maxpart):
        if rem == 0:
            yield ()
            return
        for first in range(min(rem, maxpart), 1, -2):
            for rest in gen(rem - first, first):
                yield (first,) + rest

    start = total if total % 2 == 0 else total - 1
    return list(gen(total, start))


def _sign_product(parts, n_rest: int) -> SchurVector:
    vec = SchurVector.unit()
    for p in parts:
        vec = pieri_e(vec, p)
    return pieri_h(vec, n_rest)


@lru_cache(maxsize=None)
def rep_via_induction(n: int, i: int) -> SchurVector:
    """Representation on H^i from the signed induction formula.

    Enumerates ordered tuples of even parts summing to 2i; a second evaluation
    over multisets with multinomial weights must give the same vector, which
    guards the enumeration itself.
    """
    if n < 0 or i < 0:
        raise ValueError("n and i must be nonnegative")
    if 2 * i > n:
        return SchurVector.zero(n)
    acc = SchurVector.zero(n)
    for parts in even_compositions(2 * i):
        term = _sign_product(parts, n - 2 * i)
        acc = acc + term.scale((-1) ** (i + len(parts)))

    check = SchurVector.zero(n)
    for parts in even_partitions(2 * i):
        weight = factorial(len(parts))
        mult: dict[int, int] = {}
        for p in parts:
            mult[p] = mult.get(p, 0) + 1
        for m in mult.values():
            weight //= factorial(m)
        term = _sign_product(parts, n - 2 * i)
        check = check + term.scale((-1) ** (i + len(parts)) * weight)
    if acc != check:
        raise ArithmeticError(
            f"composition and multiset enumerations disagree at (n, i)=({n}, {i})")
    return acc


def rep_via_poset(n: int, i: int,
                  bound: int = DEFAULT_BRUTE_FORCE_BOUND) -> SchurVector:
    """Representation on H^i from interval homology: the sign-twisted top
    homology below a 2i-set, induced up with a trivial factor."""
    if n < 0 or i < 0:
        raise ValueError("n and i must be nonnegative")
    if 2 * i > n:
        return SchurVector.zero(n)
    if 2 * i > bound:
        raise ValueError(
            f"interval size {2 * i} exceeds the brute-force bound {bound}")
    return pieri_h(omega(top_interval_representation(2 * i)), n - 2 * i)


def cohomology_series_poset(N: int,
                            bound: int = DEFAULT_BRUTE_FORCE_BOUND) -> RepSeries:
    """1 + sum over n of sum over i of H^i * (-t)^i, poset route."""
    series = RepSeries(N, {(0, 0): SchurVector.unit()})
    for n in range(1, N + 1):
        for i in range(0, n // 2 + 1):
            vec = rep_via_poset(n, i, bound=bound).scale((-1) ** i)
            if not vec.is_zero():
                series.add_term(n, i, vec)
    return series


def cohomology_series_formula(N: int) -> RepSeries:
    """(sum of h_n) times the inverse of (1 + sum over even n of e_n t^{n/2})."""
    h_series = RepSeries(N, {(n, 0): SchurVector.h(n) for n in range(N + 1)})
    e_series = RepSeries(N, {(0, 0): SchurVector.unit()})
    for n in range(2, N + 1, 2):
        e_series.set_term(n, n // 2, SchurVector.e(n))
    return h_series * e_series.invert()


def verify_cohomology_series(N: int = 8,
                             bound: int = DEFAULT_BRUTE_FORCE_BOUND) -> bool:
    """Degreewise equality in n and t of the poset and formula series."""
    return cohomology_series_poset(N, bound=bound) == cohomology_series_formula(N)


def _sech_series(half_terms: int) -> list[Fraction]:
    """Coefficients of sech in powers of x^2, by series division of 1/cosh."""
    cosh = [Fraction(1, factorial(2 * j)) for j in range(half_terms + 1)]
    sech = [Fraction(1)]
    for k in range(1, half_terms + 1):
        sech.append(-sum(cosh[j] * sech[k - j] for j in range(1, k + 1)))
    return sech


def exponential_specialization(N: int = 8,
                               bound: int = DEFAULT_BRUTE_FORCE_BOUND) -> list[dict]:
    """Dimension specialization of the cohomology series, checked cell by cell
    against the exact expansion of exp(x) * sech(t^(1/2) x).

    Returns one row per (n, i) with the series coefficient of t^i x^n / n!
    from both routes and an ok flag.
    """
    series = cohomology_series_poset(N, bound=bound)
    sech = _sech_series(N // 2)
    rows = []
    for n in range(0, N + 1):
        for i in range(0, n // 2 + 1):
            vec = series.term(n, i)
            actual = vec.dimension()
            expected = sech[i] * factorial(n) / factorial(n - 2 * i)
            rows.append({
                "n": n,
                "i": i,
                "coefficient": actual,
                "expected": expected,
                "ok": actual == expected,
            })
    return rows


def cohomology_table(n: int, route: str = "induction",
                     bound: int = DEFAULT_BRUTE_FORCE_BOUND) -> list[dict]:
    """Rows (n, i, betti, representation) for 0 <= i <= n/2."""
    if route not in ("induction", "poset"):
        raise ValueError(f"unknown route {route!r}")
    rows = []
    for i in range(0, n // 2 + 1):
        if route == "induction":
            rep = rep_via_induction(n, i)
        else:
            rep = rep_via_poset(n, i, bound=bound)
        rows.append({"n": n, "i": i, "betti": betti(n, i), "rep": rep})
    return rows
