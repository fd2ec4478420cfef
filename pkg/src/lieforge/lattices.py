"""Construction A lattices, their roots, and root-system identification.

Vectors are integer tuples in doubled coordinates: the lattice vector is
``coords / sqrt(2)``, so the lattice pairing is ``dot(u, v) / 2`` and a root
of a code lattice has ``dot(v, v) == 4``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

import numpy as np

from .codes import BinaryCode, dual
from .exact import leading_minors

__all__ = [
    "RootVector",
    "RootSystemError",
    "RootSystemReport",
    "inner",
    "roots_of_code_lattice",
    "brute_force_roots",
    "orthogonal_root_frame",
    "reflect",
    "minus_one_in_weyl",
    "double_dual_contained",
    "identify_root_system",
    "catalog_cartan_matrix",
    "same_type",
]

RootVector = tuple  # tuple of ints (or Fractions for catalog realizations)


class RootSystemError(ValueError):
    """Input is not a (finite, reduced, crystallographic) root system."""


def inner(u: Sequence, v: Sequence) -> Fraction:
    return Fraction(sum(a * b for a, b in zip(u, v))) / 2


def _neg(v):
    return tuple(-x for x in v)


def roots_of_code_lattice(code: BinaryCode) -> list[tuple[int, ...]]:
    """Roots of the Construction A lattice of ``code``, sorted descending.

    Either ``±2 e_i`` or a ``±1`` pattern on the support of a weight-4 codeword.
    """
    n = code.n
    roots = set()
    for i in range(n):
        for s in (2, -2):
            v = [0] * n
            v[i] = s
            roots.add(tuple(v))
    for w in code.codewords:
        if w.weight != 4:
            continue
        supp = w.support
        for signs in product((1, -1), repeat=4):
            v = [0] * n
            for i, s in zip(supp, signs):
                v[i] = s
            roots.add(tuple(v))
    return sorted(roots, reverse=True)


def brute_force_roots(code: BinaryCode) -> list[tuple[int, ...]]:
    """All v in {-2..2}^n with v mod 2 in the code and dot(v, v) == 4."""
    n = code.n
    grid = np.array(list(product(range(-2, 3), repeat=n)), dtype=np.int64)
    grid = grid[(grid * grid).sum(axis=1) == 4]
    parity = np.mod(grid, 2)
    words = np.array([w.bits for w in code.codewords], dtype=np.int64)
    # v mod 2 in C iff it matches some codeword exactly
    match = (parity[:, None, :] == words[None, :, :]).all(axis=2).any(axis=1)
    return sorted((tuple(int(x) for x in v) for v in grid[match]), reverse=True)


def orthogonal_root_frame(roots: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """``n`` pairwise orthogonal roots, preferring the coordinate frame ``2 e_i``."""
    if not roots:
        raise RootSystemError("empty root list")
    n = len(roots[0])
    cands = sorted(
        {tuple(r) for r in roots if _first_nonzero(r) > 0},
        key=lambda r: (sum(1 for x in r if x) != 1, [-x for x in r]),
    )

    chosen: list[tuple[int, ...]] = []

    def search(start: int) -> bool:
        if len(chosen) == n:
            return True
        for idx in range(start, len(cands)):
            r = cands[idx]
            if all(inner(r, c) == 0 for c in chosen):
                chosen.append(r)
                if search(idx + 1):
                    return True
                chosen.pop()
        return False

    if not search(0):
        raise RootSystemError(f"no {n} pairwise orthogonal roots")
    return chosen


def _first_nonzero(v) -> int:
    return next((x for x in v if x), 0)


def reflect(root: Sequence, v: Sequence) -> tuple:
    """Reflection of ``v`` in the hyperplane orthogonal to ``root``."""
    rr = inner(root, root)
    if rr == 0:
        raise RootSystemError("cannot reflect in a zero vector")
    f = 2 * inner(v, root) / rr
    out = tuple(Fraction(a) - f * b for a, b in zip(v, root))
    return tuple(int(x) if x.denominator == 1 else x for x in out)


def minus_one_in_weyl(frame: Sequence[Sequence[int]]) -> bool:
    """Whether the product of the reflections in ``frame`` is ``-1``."""
    if not frame:
        raise RootSystemError("empty frame")
    n = len(frame[0])
    for a in range(len(frame)):
        for b in range(a + 1, len(frame)):
            if inner(frame[a], frame[b]) != 0:
                raise RootSystemError("frame roots are not pairwise orthogonal")
    if len(frame) != n or any(inner(r, r) == 0 for r in frame):
        raise RootSystemError("frame does not span")
    images = []
    for i in range(n):
        v = tuple(int(i == j) for j in range(n))
        for r in frame:
            v = reflect(r, v)
        images.append(v)
    return all(images[i][j] == (-1 if i == j else 0) for i in range(n) for j in range(n))


def double_dual_contained(code: BinaryCode) -> bool:
    """Test ``2 Γ* ⊆ Γ`` for the Construction A lattice of ``code``.

    ``Γ*`` is the Construction A lattice of the dual code, so ``2 Γ*`` is
    generated by doubled lifts of the dual rows and by ``2 * (2 e_i)``.
    Membership in ``Γ`` means reduction mod 2 lands in ``code``.
    """
    n = code.n
    gens = [tuple(2 * b for b in w.bits) for w in dual(code).generator]
    gens += [tuple(4 * (i == j) for j in range(n)) for i in range(n)]
    from .codes import Word

    return all(Word(tuple(x % 2 for x in g)) in code for g in gens)


# ---------------------------------------------------------------- Dynkin types


def _half(*xs):
    return tuple(Fraction(x) for x in xs)


def _e8_simple():
    h = Fraction(1, 2)
    roots = [(h, -h, -h, -h, -h, -h, -h, h)]
    roots.append((1, 1, 0, 0, 0, 0, 0, 0))
    for i in range(6):
        v = [0] * 8
        v[i], v[i + 1] = -1, 1
        roots.append(tuple(v))
    return [tuple(Fraction(x) for x in r) for r in roots]


def catalog_simple_roots(kind: str, r: int) -> list[tuple]:
    """Simple roots of an irreducible type in a standard realization."""
    def e(i, m):
        return [Fraction(int(j == i)) for j in range(m)]

    def sub(a, b):
        return tuple(x - y for x, y in zip(a, b))

    if kind == "A":
        return [sub(e(i, r + 1), e(i + 1, r + 1)) for i in range(r)]
    if kind in ("B", "C", "D"):
        base = [sub(e(i, r), e(i + 1, r)) for i in range(r - 1)]
        if kind == "B":
            return base + [tuple(e(r - 1, r))]
        if kind == "C":
            return base + [tuple(2 * x for x in e(r - 1, r))]
        return base + [tuple(x + y for x, y in zip(e(r - 2, r), e(r - 1, r)))]
    if kind == "E":
        e8 = _e8_simple()
        # Bourbaki order a1..a8; E6, E7 are the first 6, 7
        return e8[:r]
    if kind == "F":
        h = Fraction(1, 2)
        return [_half(0, 1, -1, 0), _half(0, 0, 1, -1), _half(0, 0, 0, 1), (h, -h, -h, -h)]
    if kind == "G":
        return [_half(1, -1, 0), _half(-2, 1, 1)]
    raise KeyError(kind)


def _cartan_from_simple(simple) -> list[list[int]]:
    out = []
    for a in simple:
        row = []
        for b in simple:
            q = 2 * inner(a, b) / inner(b, b)
            if q.denominator != 1:
                raise RootSystemError("non-integral Cartan entry")
            row.append(int(q))
        out.append(row)
    return out


def catalog_cartan_matrix(label: str) -> list[list[int]]:
    kind, r = label[0], int(label[1:])
    return _cartan_from_simple(catalog_simple_roots(kind, r))


def _catalog_for_rank(r: int) -> list[str]:
    out = [f"A{r}"]
    if r >= 2:
        out.append(f"B{r}")
    if r >= 3:
        out.append(f"C{r}")
    if r >= 4:
        out.append(f"D{r}")
    if r in (6, 7, 8):
        out.append(f"E{r}")
    if r == 4:
        out.append("F4")
    if r == 2:
        out.append("G2")
    return out


def _isomorphic(a: list[list[int]], b: list[list[int]]) -> bool:
    """Is there a permutation p with a[p[i]][p[j]] == b[i][j]?"""
    n = len(a)
    if n != len(b):
        return False

    def sig(m, i):
        return sorted((m[i][j], m[j][i]) for j in range(n) if j != i)

    sa = [sig(a, i) for i in range(n)]
    sb = [sig(b, i) for i in range(n)]
    if sorted(map(str, sa)) != sorted(map(str, sb)):
        return False
    perm: list[int] = []
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        for cand in range(n):
            if used[cand] or sa[cand] != sb[i]:
                continue
            if all(a[cand][perm[j]] == b[i][j] and a[perm[j]][cand] == b[j][i] for j in range(i)):
                used[cand] = True
                perm.append(cand)
                if extend(i + 1):
                    return True
                perm.pop()
                used[cand] = False
        return False

    return extend(0)


def classify_cartan(cartan: list[list[int]]) -> list[str]:
    """Irreducible component labels of a Cartan matrix, sorted."""
    n = len(cartan)
    seen = [False] * n
    labels = []
    for s in range(n):
        if seen[s]:
            continue
        comp, stack = [], [s]
        seen[s] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if not seen[j] and cartan[i][j] != 0:
                    seen[j] = True
                    stack.append(j)
        comp.sort()
        sub = [[cartan[i][j] for j in comp] for i in comp]
        for label in _catalog_for_rank(len(comp)):
            if _isomorphic(sub, catalog_cartan_matrix(label)):
                labels.append(label)
                break
        else:
            raise RootSystemError(f"unrecognized Dynkin diagram {sub}")
    return sorted(labels, key=lambda s: (s[0], int(s[1:])))


def same_type(a: str, b: str) -> bool:
    """Type equality allowing the coincidence B2 = C2."""
    def canon(s):
        return "+".join(sorted(("B2" if p == "C2" else p) for p in s.split("+")))
    return canon(a) == canon(b)


@dataclass
class RootSystemReport:
    roots: list[tuple]
    simple_roots: list[tuple]
    cartan_matrix: list[list[int]]
    dynkin_type: str
    components: list[str]
    long_roots: list[tuple] = field(default_factory=list)
    short_roots: list[tuple] = field(default_factory=list)

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    def to_json(self) -> dict:
        return {
            "type": self.dynkin_type,
            "simple_roots": [list(map(_jsonable, r)) for r in self.simple_roots],
            "cartan_matrix": self.cartan_matrix,
            "num_roots": len(self.roots),
            "num_long": len(self.long_roots),
            "num_short": len(self.short_roots),
        }


def _jsonable(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else [x.numerator, x.denominator]


def identify_root_system(roots: Sequence[Sequence]) -> RootSystemReport:
    """Simple roots, Cartan matrix and Dynkin type of a finite root system."""
    rs = [tuple(r) for r in roots]
    if not rs:
        raise RootSystemError("empty root list")
    n = len(rs[0])
    rset = set(rs)
    if len(rset) != len(rs):
        raise RootSystemError("duplicate roots")
    if any(_neg(r) not in rset for r in rs):
        raise RootSystemError("roots not closed under negation")
    if any(inner(r, r) <= 0 for r in rs):
        raise RootSystemError("zero or isotropic vector in root list")

    weights = [5 ** (n - 1 - i) for i in range(n)]

    def ell(v):
        return sum(w * x for w, x in zip(weights, v))

    pos = [r for r in rs if ell(r) > 0]
    if any(ell(r) == 0 for r in rs):
        raise RootSystemError("functional vanishes on a root")
    pos_set = set(pos)
    sums = set()
    for a in range(len(pos)):
        for b in range(a + 1, len(pos)):
            s = tuple(x + y for x, y in zip(pos[a], pos[b]))
            if s in pos_set:
                sums.add(s)
    simple = sorted((r for r in pos if r not in sums), key=ell)
    cartan = _cartan_from_simple(simple)
    for i, row in enumerate(cartan):
        for j, c in enumerate(row):
            if i != j and c not in (0, -1, -2, -3):
                raise RootSystemError(f"Cartan entry {c} at ({i},{j})")
    # positivity of the symmetrized form certifies a finite type
    sym = [[inner(a, b) for b in simple] for a in simple]
    if any(m <= 0 for m in leading_minors(sym)):
        raise RootSystemError("symmetrized Cartan matrix not positive definite")
    comps = classify_cartan(cartan)
    norms = {inner(r, r) for r in rs}
    top = max(norms)
    long_r = [r for r in rs if inner(r, r) == top]
    short_r = [r for r in rs if inner(r, r) != top]
    return RootSystemReport(
        roots=rs,
        simple_roots=simple,
        cartan_matrix=cartan,
        dynkin_type="+".join(comps),
        components=comps,
        long_roots=long_r,
        short_roots=short_r,
    )
