"""Integer linear algebra for the extractor hot paths.

Scaling a pencil by a positive integer is a strict equivalence, so the
staircase can clear all denominators once and work with plain ints:
fraction-free row reduction with primitive rows is canonical (it is the
rational RREF with each row scaled to primitive integers, positive pivot),
which makes subspace equality a tuple comparison.
"""

from __future__ import annotations

from math import gcd

IntRow = tuple[int, ...]


def vec_primitive(v) -> IntRow:
    g = 0
    for x in v:
        g = gcd(g, x)
        if g == 1:
            break
    if g == 0:
        return tuple(v)
    lead = next(x for x in v if x)
    if lead < 0:
        g = -g
    return tuple(x // g for x in v)


_GROWTH_LIMIT = 1 << 48


def reduced_basis(rows, ncols: int) -> tuple[tuple[IntRow, ...], list[int]]:
    """Canonical reduced echelon basis (primitive rows, positive pivots)."""
    work = [list(r) for r in rows if any(r)]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = -1
        for i in range(r, len(work)):
            if work[i][c]:
                if piv == -1 or abs(work[i][c]) < abs(work[piv][c]):
                    piv = i
                    if abs(work[i][c]) == 1:
                        break
        if piv == -1:
            continue
        work[r], work[piv] = work[piv], work[r]
        p = work[r][c]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                row = [p * a - f * b for a, b in zip(work[i], work[r])]
                # primitive reduction is only needed for canonical output;
                # mid-elimination it just tames coefficient growth
                if any(x > _GROWTH_LIMIT or x < -_GROWTH_LIMIT for x in row):
                    row = list(vec_primitive(row))
                work[i] = row
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return tuple(vec_primitive(work[i]) for i in range(r)), pivots


def int_rank(rows, ncols: int) -> int:
    return len(reduced_basis(rows, ncols)[0])


def kernel_ints(rows, ncols: int) -> tuple[IntRow, ...]:
    """Primitive integer basis of the right kernel."""
    basis, pivots = reduced_basis(rows, ncols)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    lcm = 1
    for row, pc in zip(basis, pivots):
        p = row[pc]
        lcm = lcm * p // gcd(lcm, p)
    out = []
    for f in free:
        v = [0] * ncols
        v[f] = lcm
        for row, pc in zip(basis, pivots):
            v[pc] = -row[f] * (lcm // row[pc])
        out.append(vec_primitive(v))
    return reduced_basis(out, ncols)[0]


def mat_vec(rows, v: IntRow) -> IntRow:
    return tuple(sum(a * b for a, b in zip(row, v) if a and b) for row in rows)


def preimage_basis(rows, wbasis, ncols: int) -> tuple[IntRow, ...]:
    """Canonical basis of {x : M x in span(wbasis)}."""
    k = len(wbasis)
    ext = [list(row) + [-w[i] for w in wbasis] for i, row in enumerate(rows)]
    kern = kernel_ints(ext, ncols + k)
    return reduced_basis([v[:ncols] for v in kern if any(v[:ncols])], ncols)[0]
