"""Exact linear algebra over Z and Q.

Dense Bareiss determinants for small matrices, a sparse fraction-free rank
routine for the large but very sparse matrices the verification suite
produces (Killing forms, stacked ad-matrices), and an exact basis
decomposer used by the matrix realizations.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

__all__ = [
    "det_bareiss",
    "leading_minors",
    "integerize_rows",
    "sparse_rank",
    "rank",
    "BasisDecomposer",
    "DecompositionError",
]


class DecompositionError(ValueError):
    """A vector is not in the span of the basis it was decomposed against."""


def integerize_rows(rows: Iterable[Sequence]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators (rank and det sign safe)."""
    out = []
    for row in rows:
        fr = [Fraction(x) for x in row]
        m = lcm(*(f.denominator for f in fr)) if fr else 1
        out.append([int(f * m) for f in fr])
    return out


def det_bareiss(matrix: Sequence[Sequence]) -> Fraction:
    """Exact determinant by fraction-free Bareiss elimination."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    fr = [[Fraction(x) for x in row] for row in matrix]
    if any(len(r) != n for r in fr):
        raise ValueError("matrix must be square")
    scale = Fraction(1)
    a = []
    for row in fr:
        m = lcm(*(f.denominator for f in row))
        scale *= m
        a.append([int(f * m) for f in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return Fraction(sign * a[n - 1][n - 1]) / scale


def leading_minors(matrix: Sequence[Sequence]) -> list[Fraction]:
    return [det_bareiss([row[:k] for row in matrix[:k]]) for k in range(1, len(matrix) + 1)]


def _normalize(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


def sparse_rank(rows: Iterable[Mapping[int, int]]) -> int:
    """Rank of an integer matrix given as sparse rows ``{col: value}``.

    Fraction-free elimination: each elimination step forms
    ``p*row - a*pivot_row`` and divides out the row content, so entries stay
    small for the sparse, unimodular-ish matrices seen here.  Pivot rows are
    chosen with fewest nonzeros first to limit fill-in.
    """
    work = [_normalize({k: int(v) for k, v in r.items() if v}) for r in rows]
    work = [r for r in work if r]
    pivots: dict[int, dict[int, int]] = {}
    work.sort(key=len)
    for row in work:
        row = dict(row)
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                pivots[col] = _normalize(row)
                break
            a, p = row[col], piv[col]
            g = gcd(a, p)
            ma, mp = p // g, a // g
            new = {k: v * ma for k, v in row.items()}
            for k, v in piv.items():
                nv = new.get(k, 0) - mp * v
                if nv:
                    new[k] = nv
                else:
                    new.pop(k, None)
            row = _normalize(new)
    return len(pivots)


def rank(matrix: Sequence[Sequence]) -> int:
    """Exact rank of a dense rational matrix."""
    rows = integerize_rows(matrix)
    return sparse_rank({j: v for j, v in enumerate(r) if v} for r in rows)


class BasisDecomposer:
    """Express vectors exactly in a fixed basis of sparse rational vectors.

    Gauss-Jordan over Q on the basis, remembering for every echelon row the
    combination of original basis vectors that produced it.
    """

    def __init__(self, basis: Sequence[Mapping[int, Fraction]]):
        self.size = len(basis)
        self._rows: list[tuple[int, dict[int, Fraction], dict[int, Fraction]]] = []
        for idx, vec in enumerate(basis):
            v = {k: Fraction(x) for k, x in vec.items() if x}
            combo = {idx: Fraction(1)}
            v, combo = self._reduce(v, combo)
            if not v:
                raise DecompositionError(f"basis vector {idx} is linearly dependent")
            col = min(v)
            inv = 1 / v[col]
            v = {k: x * inv for k, x in v.items()}
            combo = {k: x * inv for k, x in combo.items()}
            # keep earlier rows reduced at the new pivot (Gauss-Jordan)
            new_rows = []
            for c, r, cb in self._rows:
                f = r.get(col)
                if f:
                    r = _axpy(r, v, -f)
                    cb = _axpy(cb, combo, -f)
                new_rows.append((c, r, cb))
            new_rows.append((col, v, combo))
            self._rows = new_rows

    def _reduce(self, v, combo):
        for col, r, cb in self._rows:
            f = v.get(col)
            if f:
                v = _axpy(v, r, -f)
                combo = _axpy(combo, cb, -f)
        return v, combo

    def coordinates(self, vec: Mapping[int, Fraction]) -> dict[int, Fraction]:
        """Coefficients c with ``vec == sum c[i] * basis[i]``; raises if outside the span."""
        v = {k: Fraction(x) for k, x in vec.items() if x}
        out: dict[int, Fraction] = {}
        for col, r, cb in self._rows:
            f = v.get(col)
            if f:
                v = _axpy(v, r, -f)
                out = _axpy(out, cb, f)
        if v:
            raise DecompositionError("vector not in span")
        return out


def _axpy(y: Mapping[int, Fraction], x: Mapping[int, Fraction], a) -> dict[int, Fraction]:
    out = dict(y)
    for k, v in x.items():
        nv = out.get(k, 0) + a * v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out
