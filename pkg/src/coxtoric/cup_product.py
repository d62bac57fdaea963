"""Degree-one cohomology classes indexed by ordered pairs, and the subspace of
degree two spanned by their cup products.

A degree-one class nu(i, j) is skew in its indices; products of two classes
vanish whenever the index pairs meet, and products over disjoint pairs are
independent, so a basis of the cup span consists of the three pairings of
each 4-subset. Degree-one classes anticommute, which the normal form tracks:
reordering two factors flips the sign, and this sign is what makes the
signed-permutation character agree with the induced-module description.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb

from .combinatorics import partitions_of, cycle_type_representative
from .rep_ring import (
    ClassFunction,
    SchurVector,
    decompose,
    pieri_h,
    restrict,
    irrep_dimension,
)


def degree_one_class(i: int, j: int) -> tuple[tuple[int, int], int]:
    """Normal form of nu(i, j): the sorted index pair and a sign."""
    if i == j or i < 1 or j < 1:
        raise ValueError("indices must be distinct positive integers")
    return ((i, j), 1) if i < j else ((j, i), -1)


def cup_reduce(first, second):
    """Product of two degree-one classes in normal form.

    Returns a dict mapping a basis key ((a,b),(c,d)) with a<b, c<d, a<c to a
    rational coefficient; shared indices (squares included) give the empty
    dict, and swapping the two factors into canonical order costs a sign.
    """
    (p1, s1) = degree_one_class(*first)
    (p2, s2) = degree_one_class(*second)
    if set(p1) & set(p2):
        return {}
    sign = s1 * s2
    if p1 > p2:
        p1, p2 = p2, p1
        sign = -sign
    return {(p1, p2): Fraction(sign)}


def basis_keys(n: int) -> list[tuple]:
    """The three disjoint pairings of every 4-subset of [n]."""
    keys = []
    for i, j, k, l in combinations(range(1, n + 1), 4):
        keys.append(((i, j), (k, l)))
        keys.append(((i, k), (j, l)))
        keys.append(((i, l), (j, k)))
    return keys


def cup_span_dimension(n: int) -> int:
    """Dimension of the span of all products of degree-one classes.

    Every reduced product is, up to sign, one of the canonical pairing basis
    elements, and all of them occur; the count is verified by actually
    reducing every product of two classes.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    seen = set()
    pairs = list(combinations(range(1, n + 1), 2))
    for a in pairs:
        for b in pairs:
            for key in cup_reduce(a, b):
                seen.add(key)
    expected = set(basis_keys(n))
    if seen != expected:
        raise ArithmeticError("reduced products do not match the pairing basis")
    assert len(seen) == 3 * comb(n, 4)
    return len(seen)


def permute_degree_one(w, pair) -> tuple[tuple[int, int], int]:
    """Relabelling action on a degree-one class, in normal form."""
    i, j = pair
    return degree_one_class(w[i - 1], w[j - 1])


def permute_basis_key(w, key) -> tuple[tuple, int]:
    """Action on a product basis element; the result is again a basis element
    together with the accumulated sign (factor signs and anticommutation)."""
    (p1, s1) = permute_degree_one(w, key[0])
    (p2, s2) = permute_degree_one(w, key[1])
    sign = s1 * s2
    if p1 > p2:
        p1, p2 = p2, p1
        sign = -sign
    return (p1, p2), sign


def act_on_degree_two(w, terms: dict) -> dict:
    out: dict = {}
    for key, coeff in terms.items():
        new_key, sign = permute_basis_key(w, key)
        out[new_key] = out.get(new_key, Fraction(0)) + sign * coeff
    return {k: v for k, v in out.items() if v}


def _signed_permutation_character(n: int) -> ClassFunction:
    keys = basis_keys(n)
    values = {}
    for mu in partitions_of(n):
        w = cycle_type_representative(mu)
        trace = 0
        for key in keys:
            new_key, sign = permute_basis_key(w, key)
            if new_key == key:
                trace += sign
        values[mu] = Fraction(trace)
    return ClassFunction(n, values)


def cup_span_representation(n: int, cross_check: bool = True) -> SchurVector:
    """The cup span as a representation: the pairing module of a 4-subset
    induced up with a trivial factor, evaluated by Pieri.

    With cross_check, the signed-permutation character of the action on the
    pairing basis is decomposed independently and must agree.
    """
    if n < 4:
        raise ValueError("n must be at least 4")
    pieri_route = pieri_h(SchurVector(4, {(2, 1, 1): 1}), n - 4)
    if cross_check:
        char_route = decompose(_signed_permutation_character(n))
        if char_route != pieri_route:
            raise ArithmeticError(
                f"character route {char_route!r} disagrees with "
                f"Pieri route {pieri_route!r} at n={n}")
    return pieri_route


def branching_certificate(target: SchurVector) -> dict:
    """Search for nonnegative multiplicities c over partitions of n+1 with
    sum of c * restriction equal to the target.

    Complete depth-first search: partitions are tried in decreasing dimension
    order, each multiplicity is bounded by the remaining target, and a branch
    is pruned when some remaining target coordinate can no longer be covered.
    An infeasible answer is therefore exhaustive, not heuristic.
    """
    n = target.n
    if not target.is_integral() or any(c < 0 for c in target.coeffs.values()):
        raise ValueError("target must have nonnegative integer multiplicities")
    lams = sorted(partitions_of(n + 1), key=irrep_dimension, reverse=True)
    restrictions = [
        {mu: int(c) for mu, c in restrict(SchurVector(n + 1, {lam: 1})).coeffs.items()}
        for lam in lams
    ]
    coverage = []
    later: set = set()
    for res in reversed(restrictions):
        later = later | set(res)
        coverage.append(set(later))
    coverage.reverse()

    residual = {mu: int(c) for mu, c in target.coeffs.items()}
    witness: dict = {}

    def feasible_from(idx) -> bool:
        live = {mu for mu, c in residual.items() if c}
        if not live:
            return True
        if idx == len(lams) or not live <= coverage[idx]:
            return False
        res = restrictions[idx]
        cap = min((residual.get(mu, 0) for mu in res), default=0)
        for c in range(cap, -1, -1):
            if c:
                for mu in res:
                    residual[mu] = residual.get(mu, 0) - c
                if any(v < 0 for v in residual.values()):
                    for mu in res:
                        residual[mu] += c
                    continue
                witness[lams[idx]] = c
            if feasible_from(idx + 1):
                return True
            if c:
                for mu in res:
                    residual[mu] += c
                witness.pop(lams[idx], None)
        return False

    if feasible_from(0):
        return {
            "status": "feasible",
            "witness": [
                {"partition": list(lam), "multiplicity": witness[lam]}
                for lam in sorted(witness, reverse=True) if witness[lam]
            ],
        }
    return {"status": "infeasible", "witness": None}


def branching_infeasibility(n: int) -> dict:
    """Certificate that the cup span cannot be a restriction from one rank up."""
    if n < 4:
        raise ValueError("n must be at least 4")
    cert = branching_certificate(cup_span_representation(n))
    cert["n"] = n
    return cert
