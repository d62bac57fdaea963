"""Arithmetic in the completed direct sum of symmetric group representation rings.

Elements live in the Schur basis: a SchurVector maps partitions of a fixed
degree n to rational coefficients, and the graded product is the induction
product, computed by Pieri expansions. Class functions mirror the same data on
the character side; converting back and forth goes through Murnaghan-Nakayama
character values and provides an independent route for every product, which
the test suite exploits as an oracle.

RepSeries adjoins a polynomial variable t and truncates total degree, which is
all the series identities here need.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .combinatorics import (
    Partition,
    check_partition,
    class_data,
    conjugate,
    partitions_of,
)


class SchurVector:
    """A rational linear combination of partitions of a fixed degree n."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs=None):
        self.n = n
        clean: dict[Partition, Fraction] = {}
        for lam, c in (coeffs or {}).items():
            lam = check_partition(lam)
            if sum(lam) != n:
                raise ValueError(f"partition {lam} does not have degree {n}")
            c = Fraction(c)
            if c:
                clean[lam] = c
        self.coeffs = clean

    @staticmethod
    def unit() -> "SchurVector":
        return SchurVector(0, {(): 1})

    @staticmethod
    def zero(n: int) -> "SchurVector":
        return SchurVector(n, {})

    @staticmethod
    def h(k: int) -> "SchurVector":
        """Class of the trivial module of S_k."""
        if k == 0:
            return SchurVector.unit()
        return SchurVector(k, {(k,): 1})

    @staticmethod
    def e(k: int) -> "SchurVector":
        """Class of the sign module of S_k."""
        if k == 0:
            return SchurVector.unit()
        return SchurVector(k, {(1,) * k: 1})

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs.values())

    def items(self):
        """Coefficients in reverse-lexicographic partition order."""
        return sorted(self.coeffs.items(), key=lambda kv: kv[0], reverse=True)

    def dimension(self) -> Fraction:
        return sum((c * irrep_dimension(lam) for lam, c in self.coeffs.items()),
                   Fraction(0))

    def __add__(self, other: "SchurVector") -> "SchurVector":
        if self.n != other.n:
            raise ValueError("degree mismatch")
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, Fraction(0)) + c
        return SchurVector(self.n, out)

    def __sub__(self, other: "SchurVector") -> "SchurVector":
        return self + (-other)

    def __neg__(self) -> "SchurVector":
        return SchurVector(self.n, {lam: -c for lam, c in self.coeffs.items()})

    def scale(self, scalar) -> "SchurVector":
        scalar = Fraction(scalar)
        return SchurVector(self.n, {lam: scalar * c for lam, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, SchurVector):
            return schur_multiply(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (isinstance(other, SchurVector)
                and self.n == other.n and self.coeffs == other.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"SchurVector({self.n}, 0)"
        bits = []
        for lam, c in self.items():
            name = "s[" + ",".join(map(str, lam)) + "]"
            bits.append(f"{c}*{name}" if c != 1 else name)
        return " + ".join(bits).replace("+ -", "- ")

    def to_json(self) -> list[dict]:
        return [
            {"partition": list(lam), "numerator": c.numerator, "denominator": c.denominator}
            for lam, c in self.items()
        ]

    @staticmethod
    def from_json(n: int, data) -> "SchurVector":
        coeffs = {}
        for entry in data:
            lam = tuple(entry["partition"])
            coeffs[lam] = Fraction(entry["numerator"], entry.get("denominator", 1))
        return SchurVector(n, coeffs)


@lru_cache(maxsize=None)
def irrep_dimension(lam: Partition) -> int:
    """Dimension of the irreducible module for lam, by the hook length formula."""
    n = sum(lam)
    conj = conjugate(lam)
    dim = factorial(n)
    for i, row in enumerate(lam):
        for j in range(row):
            dim //= row - j + conj[j] - i - 1
    return dim


def _horizontal_strips(lam: Partition, k: int):
    """Partitions mu >= lam with mu/lam a horizontal k-strip."""
    L = len(lam)
    out = []

    def rec(i, rem, acc):
        if i == L:
            if rem == 0:
                out.append(tuple(acc))
            elif L == 0 or rem <= lam[L - 1]:
                out.append(tuple(acc) + (rem,))
            return
        lo = lam[i]
        hi = lo + rem if i == 0 else min(lam[i - 1], lo + rem)
        for mu_i in range(lo, hi + 1):
            rec(i + 1, rem - (mu_i - lo), acc + [mu_i])

    rec(0, k, [])
    return out


def _vertical_strips(lam: Partition, k: int):
    """Partitions mu >= lam with mu/lam a vertical k-strip."""
    L = len(lam)
    out = []

    def rec(i, rem, prev, acc):
        if i == L:
            out.append(tuple(acc) + (1,) * rem)
            return
        for add in (0, 1):
            mu_i = lam[i] + add
            if add <= rem and mu_i <= prev:
                rec(i + 1, rem - add, mu_i, acc + [mu_i])

    rec(0, k, lam[0] + 1 if L else k, [])
    return out


def pieri_h(v: SchurVector, k: int) -> SchurVector:
    """Induction product with the trivial class h_k (horizontal strips)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out: dict[Partition, Fraction] = {}
    for lam, c in v.coeffs.items():
        for mu in _horizontal_strips(lam, k):
            out[mu] = out.get(mu, Fraction(0)) + c
    return SchurVector(v.n + k, out)


def pieri_e(v: SchurVector, k: int) -> SchurVector:
    """Induction product with the sign class e_k (vertical strips)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out: dict[Partition, Fraction] = {}
    for lam, c in v.coeffs.items():
        for mu in _vertical_strips(lam, k):
            out[mu] = out.get(mu, Fraction(0)) + c
    return SchurVector(v.n + k, out)


def omega(v: SchurVector) -> SchurVector:
    """Sign twist: the coefficient of lam moves to its conjugate."""
    return SchurVector(v.n, {conjugate(lam): c for lam, c in v.coeffs.items()})


def restrict(v: SchurVector) -> SchurVector:
    """Branching to degree n-1: remove one corner box in all possible ways."""
    if v.n < 1:
        raise ValueError("cannot restrict degree 0")
    out: dict[Partition, Fraction] = {}
    for lam, c in v.coeffs.items():
        for i in range(len(lam)):
            if i == len(lam) - 1 or lam[i] > lam[i + 1]:
                if lam[i] > 1:
                    mu = lam[:i] + (lam[i] - 1,) + lam[i + 1:]
                else:
                    mu = lam[:i] + lam[i + 1:]
                out[mu] = out.get(mu, Fraction(0)) + c
    return SchurVector(v.n - 1, out)


def _border_strips(lam: Partition, r: int):
    """Ways to remove a border strip of size r, as (smaller partition, height)."""
    L = len(lam)
    beta = [lam[i] + (L - 1 - i) for i in range(L)]
    bset = set(beta)
    out = []
    for b in beta:
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for c in beta if nb < c < b)
        newbeta = sorted((x for x in beta if x != b), reverse=True)
        newbeta.append(nb)
        newbeta.sort(reverse=True)
        mu = tuple(newbeta[j] - (L - 1 - j) for j in range(L))
        out.append((tuple(p for p in mu if p > 0), height))
    return out


@lru_cache(maxsize=None)
def _mn_value(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    return sum((-1) ** h * _mn_value(nu, rest) for nu, h in _border_strips(lam, r))


def irreducible_character(lam: Partition, mu: Partition) -> int:
    """Character value of the irreducible for lam on the class of cycle type mu,
    by the Murnaghan-Nakayama recursion."""
    lam = check_partition(lam)
    mu = check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError("lam and mu must partition the same n")
    return _mn_value(lam, tuple(sorted(mu, reverse=True)))


@lru_cache(maxsize=None)
def character_table(n: int) -> dict[Partition, dict[Partition, int]]:
    parts = partitions_of(n)
    return {lam: {mu: _mn_value(lam, mu) for mu in parts} for lam in parts}


class ClassFunction:
    """A rational-valued function on cycle types of S_n."""

    __slots__ = ("n", "values")

    def __init__(self, n: int, values=None):
        self.n = n
        clean: dict[Partition, Fraction] = {}
        for mu, val in (values or {}).items():
            mu = check_partition(mu)
            if sum(mu) != n:
                raise ValueError(f"cycle type {mu} does not have degree {n}")
            val = Fraction(val)
            if val:
                clean[mu] = val
        self.values = clean

    @staticmethod
    def trivial(n: int) -> "ClassFunction":
        return ClassFunction(n, {mu: 1 for mu in partitions_of(n)})

    @staticmethod
    def sign(n: int) -> "ClassFunction":
        return ClassFunction(n, {mu: (-1) ** (n - len(mu)) for mu in partitions_of(n)})

    def __call__(self, mu: Partition) -> Fraction:
        return self.values.get(tuple(mu), Fraction(0))

    def inner(self, other: "ClassFunction") -> Fraction:
        if self.n != other.n:
            raise ValueError("degree mismatch")
        total = Fraction(0)
        for mu in partitions_of(self.n):
            z, _ = class_data(mu) if mu else (1, 1)
            total += self(mu) * other(mu) / z
        return total

    def __eq__(self, other) -> bool:
        return (isinstance(other, ClassFunction)
                and self.n == other.n and self.values == other.values)

    def __repr__(self) -> str:
        vals = {mu: str(v) for mu, v in sorted(self.values.items(), reverse=True)}
        return f"ClassFunction({self.n}, {vals})"


def to_class_function(v: SchurVector) -> ClassFunction:
    table = character_table(v.n)
    values: dict[Partition, Fraction] = {}
    for mu in partitions_of(v.n):
        val = Fraction(0)
        for lam, c in v.coeffs.items():
            val += c * table[lam][mu]
        values[mu] = val
    return ClassFunction(v.n, values)


def decompose(f: ClassFunction) -> SchurVector:
    """Inverse of to_class_function; multiplicities may be non-integral rationals
    when f is not in the virtual character lattice."""
    table = character_table(f.n)
    coeffs: dict[Partition, Fraction] = {}
    for lam in partitions_of(f.n):
        val = Fraction(0)
        for mu, fv in f.values.items():
            z, _ = class_data(mu) if mu else (1, 1)
            val += fv * table[lam][mu] / z
        coeffs[lam] = val
    return SchurVector(f.n, coeffs)


def class_induction_product(f: ClassFunction, g: ClassFunction) -> ClassFunction:
    """Induction product on the character side, by splitting cycle types.

    The value on mu is a sum over sub-multisets nu of mu of the right degree,
    weighted by products of binomials in the part multiplicities. Serves as an
    oracle that never touches Pieri strips.
    """
    n = f.n + g.n
    values: dict[Partition, Fraction] = {}
    for mu in partitions_of(n):
        mult = Counter(mu)
        parts = sorted(mult)
        total = Fraction(0)

        def rec(idx, remaining, chosen, weight):
            nonlocal total
            if idx == len(parts):
                if remaining == 0:
                    nu = tuple(sorted(chosen, reverse=True))
                    kappa_counter = mult - Counter(chosen)
                    kappa = tuple(sorted(kappa_counter.elements(), reverse=True))
                    fv = f(nu)
                    gv = g(kappa)
                    if fv and gv:
                        total += weight * fv * gv
                return
            p = parts[idx]
            for j in range(min(mult[p], remaining // p) + 1):
                rec(idx + 1, remaining - p * j, chosen + [p] * j,
                    weight * comb(mult[p], j))

        rec(0, f.n, [], Fraction(1))
        values[mu] = total
    return ClassFunction(n, values)


@lru_cache(maxsize=None)
def h_expansion(lam: Partition):
    """s_lam as a combination of products h_{nu_1} h_{nu_2} ..., found by
    unitriangular inversion of iterated Pieri products."""
    vec = SchurVector.unit()
    for part in lam:
        vec = pieri_h(vec, part)
    out: dict[Partition, Fraction] = {lam: Fraction(1)}
    for mu, kostka in vec.coeffs.items():
        if mu == lam:
            continue
        for nu, c in h_expansion(mu):
            out[nu] = out.get(nu, Fraction(0)) - kostka * c
    return tuple(sorted((k, v) for k, v in out.items() if v))


def schur_multiply(u: SchurVector, v: SchurVector) -> SchurVector:
    """General induction product. Fast when one factor is a pure h_k or e_k;
    otherwise one factor is expanded into h-products first (slow path)."""
    if u.n > v.n:
        u, v = v, u
    acc = SchurVector.zero(u.n + v.n)
    for lam, c in u.coeffs.items():
        if lam == ():
            acc = acc + v.scale(c)
        elif len(lam) == 1:
            acc = acc + pieri_h(v, lam[0]).scale(c)
        elif lam[0] == 1:
            acc = acc + pieri_e(v, len(lam)).scale(c)
        else:
            for nu, d in h_expansion(lam):
                w = v
                for part in nu:
                    w = pieri_h(w, part)
                acc = acc + w.scale(c * d)
    return acc


class RepSeries:
    """Truncated series: cells (n, t_power) -> SchurVector of degree n <= N."""

    __slots__ = ("truncation", "terms")

    def __init__(self, truncation: int, terms=None):
        if truncation < 0:
            raise ValueError("truncation must be nonnegative")
        self.truncation = truncation
        self.terms: dict[tuple[int, int], SchurVector] = {}
        for (n, tpow), vec in (terms or {}).items():
            self.set_term(n, tpow, vec)

    @staticmethod
    def one(truncation: int) -> "RepSeries":
        return RepSeries(truncation, {(0, 0): SchurVector.unit()})

    def term(self, n: int, tpow: int) -> SchurVector:
        return self.terms.get((n, tpow), SchurVector.zero(n))

    def set_term(self, n: int, tpow: int, vec: SchurVector) -> None:
        if n > self.truncation or n < 0 or tpow < 0:
            raise ValueError(f"cell ({n}, {tpow}) outside truncation")
        if vec.n != n:
            raise ValueError("vector degree does not match cell")
        if vec.is_zero():
            self.terms.pop((n, tpow), None)
        else:
            self.terms[(n, tpow)] = vec

    def add_term(self, n: int, tpow: int, vec: SchurVector) -> None:
        self.set_term(n, tpow, self.term(n, tpow) + vec)

    def cells(self):
        return sorted(self.terms.items())

    def __eq__(self, other) -> bool:
        return (isinstance(other, RepSeries)
                and self.truncation == other.truncation
                and self.terms == other.terms)

    def __mul__(self, other: "RepSeries") -> "RepSeries":
        trunc = min(self.truncation, other.truncation)
        out = RepSeries(trunc)
        for (n1, t1), v1 in self.terms.items():
            if n1 > trunc:
                continue
            for (n2, t2), v2 in other.terms.items():
                if n1 + n2 > trunc:
                    continue
                out.add_term(n1 + n2, t1 + t2, schur_multiply(v1, v2))
        return out

    def invert(self) -> "RepSeries":
        """Multiplicative inverse; the constant cell must be exactly 1."""
        const = [key for key in self.terms if key[0] == 0]
        if const != [(0, 0)] or self.terms[(0, 0)] != SchurVector.unit():
            raise ValueError("inversion requires constant term 1")
        inv = RepSeries.one(self.truncation)
        by_degree: dict[int, list] = {}
        for (n, tpow), vec in self.terms.items():
            if n >= 1:
                by_degree.setdefault(n, []).append((tpow, vec))
        for n in range(1, self.truncation + 1):
            acc: dict[int, SchurVector] = {}
            for k, cells in by_degree.items():
                if k > n:
                    continue
                lower = [(tp, vec) for (m, tp), vec in inv.terms.items() if m == n - k]
                for tpow_b, vec_b in lower:
                    for tpow_a, vec_a in cells:
                        tp = tpow_a + tpow_b
                        acc[tp] = (acc.get(tp, SchurVector.zero(n))
                                   + schur_multiply(vec_a, vec_b))
            for tp, vec in acc.items():
                inv.set_term(n, tp, -vec)
        return inv

    def substitute_t(self) -> dict[int, SchurVector]:
        """Collapse t -> 1: degree n -> sum of all t-power cells."""
        out: dict[int, SchurVector] = {}
        for (n, _), vec in self.terms.items():
            out[n] = out.get(n, SchurVector.zero(n)) + vec
        return {n: v for n, v in out.items() if not v.is_zero()}

    def to_json(self) -> list[dict]:
        return [
            {"n": n, "t_power": tpow, "schur_vector": vec.to_json()}
            for (n, tpow), vec in self.cells()
        ]


def series_multiply(a: RepSeries, b: RepSeries) -> RepSeries:
    return a * b


def series_invert(a: RepSeries) -> RepSeries:
    return a.invert()
