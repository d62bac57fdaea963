"""Concrete geometry of the compactified torus inside a product of projective
spaces indexed by nonempty subsets of [n].

A point carries one projective tuple of exact rationals per nonempty subset I;
membership is the rank-one compatibility of every nested pair of components.
The vanishing recursion sorts points into torus orbits labelled by strict
subset chains, and each point admits an explicit one-parameter degeneration
from the open torus, which degeneration_witness reconstructs and checks
component by component.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial

from .combinatorics import (
    SubsetChain,
    all_chains,
    stirling2,
    validate_chain,
)


class ModelPoint:
    """Projective coordinate tuples indexed by the nonempty subsets of [n].

    Components are aligned with the sorted order of their subset; singleton
    components carry no information and default to (1,).
    """

    __slots__ = ("n", "components")

    def __init__(self, n: int, components):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        comps: dict[frozenset, tuple[Fraction, ...]] = {}
        for subset, coords in components.items():
            subset = frozenset(subset)
            if not subset or not subset <= frozenset(range(1, n + 1)):
                raise ValueError(f"bad subset {sorted(subset)}")
            coords = tuple(Fraction(c) for c in coords)
            if len(coords) != len(subset):
                raise ValueError(f"component {sorted(subset)} has wrong length")
            if not any(coords):
                raise ValueError(f"component {sorted(subset)} is identically zero")
            comps[subset] = coords
        for i in range(1, n + 1):
            comps.setdefault(frozenset([i]), (Fraction(1),))
        for size in range(2, n + 1):
            for sub in combinations(range(1, n + 1), size):
                if frozenset(sub) not in comps:
                    raise ValueError(f"missing component {list(sub)}")
        self.components = comps

    def component(self, subset) -> tuple[Fraction, ...]:
        return self.components[frozenset(subset)]

    def coordinate(self, subset, i: int) -> Fraction:
        subset = sorted(frozenset(subset))
        return self.components[frozenset(subset)][subset.index(i)]

    def __eq__(self, other) -> bool:
        """Projective equality: every component proportional to its twin."""
        if not isinstance(other, ModelPoint) or self.n != other.n:
            return False
        return all(
            projectively_equal(coords, other.components[subset])
            for subset, coords in self.components.items()
        )

    def to_json(self) -> dict:
        comps = []
        for subset in sorted(self.components, key=lambda s: (len(s), tuple(sorted(s)))):
            comps.append({
                "subset": sorted(subset),
                "coords": [str(c) for c in self.components[subset]],
            })
        return {"n": self.n, "components": comps}

    @staticmethod
    def from_json(data) -> "ModelPoint":
        comps = {
            frozenset(entry["subset"]): tuple(Fraction(c) for c in entry["coords"])
            for entry in data["components"]
        }
        return ModelPoint(data["n"], comps)


def projectively_equal(u, v) -> bool:
    if len(u) != len(v):
        return False
    for i in range(len(u)):
        for j in range(i + 1, len(u)):
            if u[i] * v[j] != u[j] * v[i]:
                return False
    return any(u) and any(v)


def torus_embedding(coords) -> ModelPoint:
    """Image of a torus element: every component restricts the same tuple."""
    coords = tuple(Fraction(c) for c in coords)
    n = len(coords)
    if any(c == 0 for c in coords):
        raise ValueError("torus elements have no zero coordinates")
    comps = {}
    for size in range(1, n + 1):
        for sub in combinations(range(1, n + 1), size):
            comps[frozenset(sub)] = tuple(coords[i - 1] for i in sub)
    return ModelPoint(n, comps)


def first_violation(p: ModelPoint):
    """First nested pair (I, J) whose components fail the rank-one condition,
    or None when the point is on the model. Pairs are scanned by sorted size."""
    subsets = sorted(p.components, key=lambda s: (len(s), tuple(sorted(s))))
    for small in subsets:
        inner = sorted(small)
        u = p.components[small]
        for big in subsets:
            if len(big) <= len(small) or not small < big:
                continue
            big_sorted = sorted(big)
            v = tuple(p.components[big][big_sorted.index(i)] for i in inner)
            ok = True
            for a in range(len(inner)):
                for b in range(a + 1, len(inner)):
                    if u[a] * v[b] != u[b] * v[a]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                return (sorted(small), sorted(big))
    return None


def is_on_model(p: ModelPoint) -> bool:
    """Membership: all 2x2 minors of every nested component pair vanish."""
    return first_violation(p) is None


def orbit_of(p: ModelPoint) -> SubsetChain:
    """Chain of vanishing loci: K_{l+1} collects the zero coordinates of the
    K_l component, stopping at the first block with no zeros."""
    if not is_on_model(p):
        raise ValueError("orbit classification needs a point on the model")
    chain = [frozenset(range(1, p.n + 1))]
    while True:
        current = chain[-1]
        coords = p.components[current]
        ordered = sorted(current)
        zeros = frozenset(i for i, c in zip(ordered, coords) if c == 0)
        chain.append(zeros)
        if not zeros:
            return tuple(chain)


def representative_point(chain: SubsetChain) -> ModelPoint:
    """Canonical point on the orbit of a chain: each block's component is 1
    away from the next block and 0 on it, propagated to all subsets."""
    validate_chain(chain)
    n = len(chain[0])
    blocks = chain[:-1]
    comps = {}
    for size in range(1, n + 1):
        for sub in combinations(range(1, n + 1), size):
            s = frozenset(sub)
            stage = max(idx for idx, K in enumerate(blocks) if s <= K)
            nxt = chain[stage + 1]
            comps[s] = tuple(Fraction(0) if i in nxt else Fraction(1) for i in sub)
    return ModelPoint(n, comps)


def degeneration_witness(p: ModelPoint) -> dict:
    """Reconstruct the one-parameter family q(t) whose limit at t = 0 is p.

    Entries of q(t) are monomials: coordinate i gets t^s times the i-th entry
    of the K_s component, where K_s is the last chain block containing i. For
    every subset I the restriction of q(t), divided by its minimal t-power and
    evaluated at t = 0, must equal the I-component of p projectively. The
    report lists each component comparison; any failure names its subset.
    """
    chain = orbit_of(p)
    blocks = chain[:-1]
    entries: dict[int, tuple[Fraction, int]] = {}
    for s, K in enumerate(blocks):
        for i in sorted(K - chain[s + 1]):
            entries[i] = (p.coordinate(K, i), s + 1)
    assert all(coeff != 0 for coeff, _ in entries.values())

    components = []
    all_ok = True
    for subset in sorted(p.components, key=lambda s: (len(s), tuple(sorted(s)))):
        ordered = sorted(subset)
        powers = [entries[i][1] for i in ordered]
        low = min(powers)
        limit = tuple(
            entries[i][0] if power == low else Fraction(0)
            for i, power in zip(ordered, powers)
        )
        target = p.components[subset]
        ok = projectively_equal(limit, target)
        all_ok = all_ok and ok
        components.append({
            "subset": ordered,
            "limit": [str(c) for c in limit],
            "target": [str(c) for c in target],
            "ok": ok,
        })
    return {
        "chain": [sorted(b) for b in chain],
        "family": {i: {"coeff": str(c), "power": s} for i, (c, s) in sorted(entries.items())},
        "components": components,
        "ok": all_ok,
    }


def torus_act(t, p: ModelPoint) -> ModelPoint:
    """Coordinatewise scaling of every component by the torus element t."""
    t = tuple(Fraction(c) for c in t)
    if len(t) != p.n or any(c == 0 for c in t):
        raise ValueError("torus element must have n nonzero entries")
    comps = {}
    for subset, coords in p.components.items():
        ordered = sorted(subset)
        comps[subset] = tuple(t[i - 1] * c for i, c in zip(ordered, coords))
    return ModelPoint(p.n, comps)


def permute_point(w, p: ModelPoint) -> ModelPoint:
    """Relabelling action: the I-component moves to w(I), entries following w."""
    if sorted(w) != list(range(1, p.n + 1)):
        raise ValueError("w must be a permutation of 1..n")
    inverse = [0] * p.n
    for i, wi in enumerate(w, start=1):
        inverse[wi - 1] = i
    comps = {}
    for subset, coords in p.components.items():
        ordered = sorted(subset)
        pos = {i: k for k, i in enumerate(ordered)}
        target = frozenset(w[i - 1] for i in subset)
        comps[target] = tuple(coords[pos[inverse[j - 1]]] for j in sorted(target))
    return ModelPoint(p.n, comps)


def permute_chain(w, chain: SubsetChain) -> SubsetChain:
    return tuple(frozenset(w[i - 1] for i in block) for block in chain)


def closure_refinement(chain_a: SubsetChain, chain_b: SubsetChain) -> bool:
    """True iff chain_a refines chain_b, i.e. the orbit of chain_a lies in the
    closure of the orbit of chain_b."""
    validate_chain(chain_a)
    validate_chain(chain_b)
    if chain_a[0] != chain_b[0]:
        raise ValueError("chains must share the ground set")
    return set(chain_b) <= set(chain_a)


def _stage(chain: SubsetChain, subset: frozenset) -> int:
    """Index of the last chain block containing the subset."""
    return max(idx for idx, K in enumerate(chain[:-1]) if subset <= K)


def satisfies_closure_equations(p: ModelPoint, chain: SubsetChain) -> bool:
    """Closed conditions holding identically on the orbit of the chain.

    For every nonempty I, with K_s the last chain block containing I, the
    I-component must vanish on I intersected with K_{s+1}. Restricting I to
    the chain blocks themselves is not enough: the conditions induced on the
    other components are what separate same-dimension strata.
    """
    validate_chain(chain)
    if len(chain[0]) != p.n:
        raise ValueError("chain and point sizes differ")
    for subset, coords in p.components.items():
        nxt = chain[_stage(chain, subset) + 1]
        ordered = sorted(subset)
        for k, coord in zip(ordered, coords):
            if k in nxt and coord != 0:
                return False
    return True


def closure_curve_witness(fine: SubsetChain, coarse: SubsetChain) -> dict:
    """Explicit curve inside the coarse orbit whose limit is the canonical
    point of the refining chain.

    Each coordinate of the curve is a monomial: on the block K_s of the coarse
    chain, index i carries t^(stage of i in the fine chain) away from K_{s+1}
    and 0 on it. Since entries are monomials, the zero pattern is the same for
    all t != 0, so evaluating at one nonzero t verifies the whole punctured
    family; the limit divides each component by its minimal t-power.
    """
    if not closure_refinement(fine, coarse):
        raise ValueError("first chain must refine the second")
    n = len(coarse[0])
    fine_stage = {}
    for idx, (K, nxt) in enumerate(zip(fine[:-1], fine[1:]), start=1):
        for i in K - nxt:
            fine_stage[i] = idx

    target = representative_point(fine)
    t0 = Fraction(1, 2)
    sample_comps = {}
    limit_ok = True
    components = []
    for size in range(1, n + 1):
        for sub in combinations(range(1, n + 1), size):
            s = frozenset(sub)
            stage = _stage(coarse, s)
            nxt = coarse[stage + 1]
            powers = {i: fine_stage[i] for i in sub if i not in nxt}
            sample_comps[s] = tuple(
                Fraction(0) if i in nxt else t0 ** powers[i] for i in sub)
            low = min(powers.values())
            limit = tuple(
                Fraction(1) if (i not in nxt and powers[i] == low) else Fraction(0)
                for i in sub)
            ok = projectively_equal(limit, target.components[s])
            limit_ok = limit_ok and ok
            if size > 1:
                components.append({"subset": list(sub), "ok": ok})
    sample = ModelPoint(n, sample_comps)
    on_model = is_on_model(sample)
    in_orbit = on_model and orbit_of(sample) == coarse
    return {
        "fine": [sorted(b) for b in fine],
        "coarse": [sorted(b) for b in coarse],
        "sample_on_model": on_model,
        "sample_in_coarse_orbit": in_orbit,
        "limit_matches": limit_ok,
        "components": components,
        "ok": on_model and in_orbit and limit_ok,
    }


@lru_cache(maxsize=None)
def chain_count_by_descents(n: int, m: int) -> int:
    """Number of chains with m+1 blocks: m! * S(n, m)."""
    return factorial(m) * stirling2(n, m)


def euler_characteristic_cells(n: int) -> int:
    """Compactly supported Euler characteristic summed over orbits: a chain
    with m+1 blocks contributes (-2)^(n-m), one factor -2 per real 1-torus."""
    if n < 1:
        raise ValueError("n must be positive")
    return sum(chain_count_by_descents(n, m) * (-2) ** (n - m)
               for m in range(1, n + 1))


def random_torus_element(n: int, rng) -> tuple[Fraction, ...]:
    out = []
    for _ in range(n):
        sign = rng.choice((1, -1))
        out.append(Fraction(sign * rng.randint(1, 6), rng.randint(1, 6)))
    return tuple(out)


def random_permutation(n: int, rng) -> tuple[int, ...]:
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return tuple(perm)


def random_model_point(n: int, rng) -> ModelPoint:
    """A torus translate of a random orbit representative; exercises strata of
    every depth, not just the open orbit."""
    chains = all_chains(n)
    chain = chains[rng.randrange(len(chains))]
    return torus_act(random_torus_element(n, rng), representative_point(chain))


def equivariance_report(n: int, trials: int, seed: int) -> dict:
    """Randomized action checks; the report counts failures per property."""
    import random

    rng = random.Random(seed)
    failures = []
    for trial in range(trials):
        t = random_torus_element(n, rng)
        if not is_on_model(torus_embedding(t)):
            failures.append({"trial": trial, "property": "torus_image_on_model"})
        p = random_model_point(n, rng)
        if not is_on_model(p):
            failures.append({"trial": trial, "property": "representative_on_model"})
            continue
        scaled = torus_act(random_torus_element(n, rng), p)
        if not is_on_model(scaled):
            failures.append({"trial": trial, "property": "torus_invariance"})
        if orbit_of(scaled) != orbit_of(p):
            failures.append({"trial": trial, "property": "torus_orbit_stability"})
        w = random_permutation(n, rng)
        moved = permute_point(w, p)
        if not is_on_model(moved):
            failures.append({"trial": trial, "property": "permutation_invariance"})
        if orbit_of(moved) != permute_chain(w, orbit_of(p)):
            failures.append({"trial": trial, "property": "permutation_orbit_equivariance"})
    return {"n": n, "trials": trials, "seed": seed,
            "failures": failures, "ok": not failures}
