"""Homology of open intervals in the lattice of even-size subsets of [n].

The order complex of the open interval below a set of size 2i includes the
empty chain in degree -1, so its homology is reduced; degrees are reported as
m = (complex degree) + 2, which makes the bottom interval sit in m = 0 and the
interval below an atom in m = 1. All interval homologies here are concentrated
in top degree m = i, which is verified computationally, never assumed.

The symmetric group character on the top homology is extracted through the
Hopf trace: for one representative per cycle type, the alternating sum of
counts of setwise-fixed chains equals the alternating sum of homology traces.
A chain fixed setwise is fixed blockwise, because its members have pairwise
distinct sizes, so the chain count really is the trace on the chain group.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .combinatorics import (
    apply_permutation,
    cycle_type_representative,
    partitions_of,
)
from .linalg import sparse_rank
from .rep_ring import (
    ClassFunction,
    RepSeries,
    SchurVector,
    decompose,
    pieri_h,
)

DEFAULT_BRUTE_FORCE_BOUND = 8


class IntervalComplex:
    """Order complex of the open interval between {} and a set of even size."""

    def __init__(self, top_size: int):
        if top_size < 2 or top_size % 2:
            raise ValueError("top size must be even and at least 2")
        self.top_size = top_size
        elements = []
        for size in range(2, top_size - 1, 2):
            for sub in combinations(range(1, top_size + 1), size):
                elements.append(frozenset(sub))
        elements.sort(key=lambda s: (len(s), tuple(sorted(s))))
        self.elements = elements

        supersets = {
            e: [f for f in elements if len(f) > len(e) and e < f] for e in elements
        }
        memo: dict[frozenset, list] = {}

        def chains_from(e):
            if e in memo:
                return memo[e]
            out = [(e,)]
            for f in supersets[e]:
                out.extend((e,) + c for c in chains_from(f))
            memo[e] = out
            return out

        chains: dict[int, list[tuple]] = {-1: [()]}
        for e in elements:
            for c in chains_from(e):
                chains.setdefault(len(c) - 1, []).append(c)
        self.chains = {d: tuple(cs) for d, cs in sorted(chains.items())}

    def simplex_count(self, d: int) -> int:
        return len(self.chains.get(d, ()))

    def dimensions(self):
        return sorted(self.chains)

    def boundary_columns(self, d: int) -> list[dict[int, int]]:
        """Boundary map in degree d as one {row: sign} dict per d-simplex."""
        if d not in self.chains or d - 1 not in self.chains:
            return []
        index = {c: i for i, c in enumerate(self.chains[d - 1])}
        cols = []
        for chain in self.chains[d]:
            col: dict[int, int] = {}
            for j in range(len(chain)):
                face = chain[:j] + chain[j + 1:]
                col[index[face]] = 1 if j % 2 == 0 else -1
            cols.append(col)
        return cols

    def euler_characteristic(self) -> int:
        """Reduced Euler characteristic (the empty chain counts in degree -1)."""
        return sum((-1) ** d * self.simplex_count(d) for d in self.dimensions())


@lru_cache(maxsize=None)
def build_interval_complex(top_size: int) -> IntervalComplex:
    return IntervalComplex(top_size)


@lru_cache(maxsize=None)
def _boundary_rank(top_size: int, d: int) -> int:
    cx = build_interval_complex(top_size)
    return sparse_rank(cx.boundary_columns(d))


@lru_cache(maxsize=None)
def homology_ranks(interval_size: int) -> dict[int, int]:
    """Ranks of H_m of the open interval below a set of the given even size.

    Keys are the shifted degrees m = complex degree + 2; only nonzero ranks
    appear. The empty interval is {0: 1} by convention.
    """
    if interval_size < 0 or interval_size % 2:
        raise ValueError("interval size must be even and nonnegative")
    if interval_size == 0:
        return {0: 1}
    cx = build_interval_complex(interval_size)
    top = interval_size // 2 - 2
    ranks: dict[int, int] = {}
    for d in range(-1, top + 1):
        c_d = cx.simplex_count(d)
        r_d = _boundary_rank(interval_size, d) if d >= 0 else 0
        r_up = _boundary_rank(interval_size, d + 1) if d + 1 <= top else 0
        h = c_d - r_d - r_up
        if h:
            ranks[d + 2] = h
    return ranks


def cm_concentration_check(n: int) -> bool:
    """True iff the homology below [n] lives only in degree n/2."""
    if n < 0 or n % 2:
        raise ValueError("n must be even and nonnegative")
    ranks = homology_ranks(n)
    return set(ranks) == {n // 2}


@lru_cache(maxsize=None)
def equivariant_top_character(n: int) -> ClassFunction:
    """Character of S_n on the top homology of the interval below [n].

    Uses the Hopf trace over fixed chains, which needs the concentration
    check to pass first; a failure there aborts loudly rather than returning
    a wrong character.
    """
    if n < 0 or n % 2:
        raise ValueError("n must be even and nonnegative")
    if n == 0:
        return ClassFunction(0, {(): Fraction(1)})
    if not cm_concentration_check(n):
        raise ArithmeticError(
            f"homology below [{n}] is not concentrated in degree {n // 2}; "
            "the fixed-chain trace does not apply")
    cx = build_interval_complex(n)
    sign_top = (-1) ** (n // 2)
    values: dict[tuple, Fraction] = {}
    for mu in partitions_of(n):
        w = cycle_type_representative(mu)
        fixed_elems = {e for e in cx.elements if apply_permutation(w, e) == e}
        lefschetz = 0
        for d, chains in cx.chains.items():
            count = sum(1 for c in chains if all(x in fixed_elems for x in c))
            lefschetz += (-1) ** d * count
        values[mu] = Fraction(sign_top * lefschetz)
    return ClassFunction(n, values)


@lru_cache(maxsize=None)
def top_interval_representation(n: int) -> SchurVector:
    """Top homology below [n] decomposed into irreducibles."""
    return decompose(equivariant_top_character(n))


def whitney_homology(n: int, i: int) -> SchurVector:
    """Degree-i Whitney homology of the even-subset lattice of [n]: the top
    homology below a 2i-set, induced up from S_{2i} x S_{n-2i}."""
    if not (0 <= 2 * i <= n):
        raise ValueError("need 0 <= 2i <= n")
    return pieri_h(top_interval_representation(2 * i), n - 2 * i)


def poset_series_sides(N: int):
    """Both sides of the inverse-series identity for top interval homology,
    as maps degree -> SchurVector through degree N.

    Left: 1 + sum over even n of (-1)^{n/2} (top homology below [n]), with the
    homology characters computed by the order-complex route. Right: the series
    inverse of 1 + sum over even n >= 2 of h_n.
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    lhs: dict[int, SchurVector] = {0: SchurVector.unit()}
    for n in range(2, N + 1, 2):
        lhs[n] = top_interval_representation(n).scale((-1) ** (n // 2))

    series = RepSeries(N, {(0, 0): SchurVector.unit()})
    for n in range(2, N + 1, 2):
        series.set_term(n, 0, SchurVector.h(n))
    inv = series.invert()
    rhs = {n: inv.term(n, 0) for n in range(0, N + 1) if not inv.term(n, 0).is_zero()}
    return lhs, rhs


def verify_poset_series_identity(N: int) -> bool:
    """Degreewise equality of the two sides of the inverse-series identity."""
    lhs, rhs = poset_series_sides(N)
    keys = set(lhs) | set(rhs)
    return all(lhs.get(k, SchurVector.zero(k)) == rhs.get(k, SchurVector.zero(k))
               for k in keys)
