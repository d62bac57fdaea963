"""Exact rank of sparse integer matrices over Q.

Fraction-free sparse Gaussian elimination: pivots of absolute value 1 are
preferred (integer row updates, no growth from division); otherwise the row
being reduced is rescaled by the pivot and divided by its content, so entries
stay integers throughout. Pivot choice is a cheap Markowitz heuristic:
shortest active row first, then the sparsest column within it.
"""

from __future__ import annotations

from math import gcd


def sparse_rank(rows) -> int:
    """Rank over Q of the matrix whose rows are {column: nonzero int} dicts."""
    active: dict[int, dict] = {}
    col_rows: dict[int, set] = {}
    for ridx, row in enumerate(rows):
        r = {c: v for c, v in row.items() if v}
        if r:
            active[ridx] = r
            for c in r:
                col_rows.setdefault(c, set()).add(ridx)

    rank = 0
    while active:
        ridx = min(active, key=lambda k: (len(active[k]), k))
        row = active.pop(ridx)
        rank += 1
        best_key = None
        pivot_col = None
        for c, v in row.items():
            key = (0 if v in (1, -1) else 1, len(col_rows[c]), c)
            if best_key is None or key < best_key:
                best_key, pivot_col = key, c
        for c in row:
            col_rows[c].discard(ridx)
        pivot_val = row[pivot_col]

        for sidx in list(col_rows[pivot_col]):
            srow = active[sidx]
            coef = srow[pivot_col]
            if pivot_val in (1, -1):
                mult = -coef * pivot_val
                _add_multiple(srow, row, mult, sidx, col_rows)
            else:
                g = gcd(abs(pivot_val), abs(coef))
                scale = pivot_val // g
                mult = -(coef // g)
                if scale != 1:
                    for c in srow:
                        srow[c] *= scale
                _add_multiple(srow, row, mult, sidx, col_rows)
                _reduce_content(srow)
            if not srow:
                del active[sidx]
    return rank


def _add_multiple(target, source, mult, tidx, col_rows):
    for c, v in source.items():
        new = target.get(c, 0) + mult * v
        if new:
            if c not in target:
                col_rows.setdefault(c, set()).add(tidx)
            target[c] = new
        elif c in target:
            del target[c]
            col_rows[c].discard(tidx)


def _reduce_content(row):
    g = 0
    for v in row.values():
        g = gcd(g, abs(v))
        if g == 1:
            return
    if g > 1:
        for c in row:
            row[c] //= g


def boundary_product_is_zero(cols_d, cols_dm1) -> bool:
    """Check that composing two boundary maps (given as column dicts) is zero."""
    for col in cols_d:
        acc: dict[int, int] = {}
        for mid, v in col.items():
            for low, w in cols_dm1[mid].items():
                acc[low] = acc.get(low, 0) + v * w
        if any(acc.values()):
            return False
    return True
