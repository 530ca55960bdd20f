"""Smith normal form over the integers with unimodular transforms."""

from __future__ import annotations

from dataclasses import dataclass

Matrix = list[list[int]]


@dataclass(frozen=True)
class SmithForm:
    """``left @ matrix @ right == diagonal`` with ``left``, ``right`` unimodular.

    ``factors`` are the nonzero diagonal entries d_1 | d_2 | ... | d_r, all
    positive.
    """

    factors: tuple[int, ...]
    diagonal: Matrix
    left: Matrix
    right: Matrix


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix, inner: int | None = None) -> Matrix:
    """Product of an r x k and a k x c matrix; ``inner`` gives k when r == 0."""
    k = len(b) if inner is None else inner
    c = len(b[0]) if b else 0
    return [[sum(row[t] * b[t][j] for t in range(k)) for j in range(c)] for row in a]


def determinant(m: Matrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    a = [row[:] for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1] if n else 1


def smith_normal_form(m: Matrix) -> SmithForm:
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if any(len(r) != cols for r in m):
        raise ValueError("ragged matrix")
    a = [[int(x) for x in r] for r in m]
    u = identity(rows)
    w = identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in w:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):  # row dst += q * row src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):  # col dst += q * col src
        for r in a:
            r[dst] += q * r[src]
        for r in w:
            r[dst] += q * r[src]

    t = 0
    while t < min(rows, cols):
        # pivot: least nonzero |entry| in the trailing block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            d = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // d))
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // d))
                    dirty = dirty or a[t][j] != 0
            if dirty:
                # a remainder is smaller than the pivot; bring it up front
                cand =[(i, t) for i in range(t + 1, rows) if a[i][t]] + [
                    (t, j) for j in range(t + 1, cols) if a[t][j]
                ]
                i, j = min(cand, key=lambda ij: abs(a[ij[0]][ij[1]]))
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            # row and column cleared; enforce divisibility of the rest
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % d),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    factors = tuple(a[i][i] for i in range(min(rows, cols)) if a[i][i])
    return SmithForm(factors, a, u, w)


def verify_smith_form(m: Matrix, s: SmithForm) -> bool:
    """Exact re-check: transforms unimodular, product diagonal, chain divisibility."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if abs(determinant(s.left)) != 1 or abs(determinant(s.right)) != 1:
        return False
    prod = matmul(matmul(s.left, m, inner=rows), s.right, inner=cols)
    if prod != s.diagonal:
        return False
    for i in range(rows):
        for j in range(cols):
            if i != j and prod[i][j]:
                return False
    diag = [prod[i][i] for i in range(min(rows, cols))]
    r = len(s.factors)
    if diag[:r] != list(s.factors) or any(diag[r:]) or any(d <= 0 for d in s.factors):
        return False
    return all(s.factors[i + 1] % s.factors[i] == 0 for i in range(r - 1))
