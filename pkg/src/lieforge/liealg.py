"""Lie algebras assembled from a coordinate algebra.

The algebra is

    ⊕_i sl(V_i) ⊗ t_i  ⊕  ⊕_{c in S} V^c ⊗ e^c

with V_i two-dimensional, basis v+ and v-, skew form <v+|v-> = 1, and sl2
acting by E v- = v+, F v+ = v-, H v± = ±v±.  A tensor basis vector of
V^c is a sign pattern over supp(c), factors in increasing index order.

Brackets follow five rules: sl2 relations inside a copy, zero across copies,
the sl2 action on a tensor factor, contraction on common indices for
e^c, e^d with c != d, and the s_{u,v} contraction for c == d.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Mapping, Sequence

import numpy as np

from .codes import Word
from .coordalg import CoordinateAlgebra, E as ELABEL, T as TLABEL

__all__ = [
    "LieAlgebra",
    "LieBuildError",
    "SCHEMA",
    "form",
    "s_pair",
    "phi",
    "phi_diag",
    "build_lie_algebra",
    "bracket",
    "sl2_label",
    "tensor_label",
    "parse_label",
    "format_label",
    "antisymmetry_defects",
    "lie_algebra_from_table",
]

SCHEMA = "lieforge/sc/v1"
HALF = Fraction(1, 2)


class LieBuildError(ValueError):
    pass


def sl2_label(i: int, gen: str) -> tuple:
    """Basis label of generator ``gen`` in copy ``i`` (0-based)."""
    return ("sl2", i, gen)


def tensor_label(c: Word, pattern: Sequence[int]) -> tuple:
    return ("ten", c, tuple(pattern))


def format_label(label) -> str:
    if label[0] == "sl2":
        return f"sl2:{label[1] + 1}:{label[2]}"
    if label[0] == "ten":
        pat = "".join("+" if s > 0 else "-" for s in label[2])
        return f"ten:{label[1]}:{pat}"
    return str(label[1]) if label[0] == "raw" else str(label)


def parse_label(s: str):
    parts = s.split(":")
    if parts[0] == "sl2" and len(parts) == 3 and parts[2] in ("E", "F", "H"):
        return sl2_label(int(parts[1]) - 1, parts[2])
    if parts[0] == "ten" and len(parts) == 3:
        c = Word.from_str(parts[1])
        pat = tuple(1 if ch == "+" else -1 for ch in parts[2])
        if len(pat) != c.weight or any(ch not in "+-" for ch in parts[2]):
            raise ValueError(f"bad tensor label {s!r}")
        return tensor_label(c, pat)
    return ("raw", s)


# ----------------------------------------------------------- sl2 invariants


def form(u: int, v: int) -> int:
    """Skew form on V: <v+|v-> = 1, <v-|v+> = -1, isotropic otherwise."""
    return (u - v) // 2 if u != v else 0


def s_pair(u: int, v: int) -> dict[str, Fraction]:
    """s_{u,v}: w -> ½(<w|u> v + <w|v> u), written over {E, F, H}."""
    # matrix of s_{u,v} in the basis (v+, v-): column w holds the image of w
    m = {}
    for w in (1, -1):
        img = {1: Fraction(0), -1: Fraction(0)}
        img[v] += HALF * form(w, u)
        img[u] += HALF * form(w, v)
        m[w] = img
    # E = [[0,1],[0,0]], F = [[0,0],[1,0]], H = diag(1,-1)
    out = {"E": m[-1][1], "F": m[1][-1], "H": m[1][1]}
    assert m[-1][-1] == -m[1][1]
    return {g: x for g, x in out.items() if x}


def _act(gen: str, s: int) -> tuple[Fraction, int] | None:
    """sl2 generator on a basis vector of V: (coefficient, image sign) or None."""
    if gen == "H":
        return Fraction(s), s
    if gen == "E":
        return (Fraction(1), 1) if s == -1 else None
    return (Fraction(1), -1) if s == 1 else None


def _pairing(x: int, y: int, flip: bool) -> int:
    return form(y, x) if flip else form(x, y)


def phi(c: Word, d: Word, X: Sequence[int], Y: Sequence[int], flip: bool = False):
    """Contraction V^c × V^d → V^(c+d) on common indices.

    Returns ``(scalar, pattern)`` with the surviving factors placed in
    increasing index order; scalar is 0, 1 or -1.
    """
    if c == d:
        raise LieBuildError("phi needs c != d; use phi_diag")
    xs = dict(zip(c.support, X))
    ys = dict(zip(d.support, Y))
    scalar = 1
    out = []
    for i in range(len(c)):
        if i in xs and i in ys:
            scalar *= _pairing(xs[i], ys[i], flip)
            if not scalar:
                return 0, None
        elif i in xs:
            out.append(xs[i])
        elif i in ys:
            out.append(ys[i])
    return scalar, tuple(out)


def phi_diag(c: Word, i: int, X: Sequence[int], Y: Sequence[int], flip: bool = False) -> dict[str, Fraction]:
    """V^c × V^c → sl(V_i): contract every index but ``i``, then s_{X_i, Y_i}."""
    supp = c.support
    if i not in supp:
        raise LieBuildError(f"index {i} not in supp({c})")
    scalar = 1
    for j, x, y in zip(supp, X, Y):
        if j != i:
            scalar *= _pairing(x, y, flip)
            if not scalar:
                return {}
    k = supp.index(i)
    s = s_pair(Y[k], X[k]) if flip else s_pair(X[k], Y[k])
    return {g: scalar * v for g, v in s.items()}


# ------------------------------------------------------------- Lie algebra


@dataclass
class LieAlgebra:
    """Finite basis with a sparse exact bracket table.

    ``table[(a, b)]`` for ``a < b`` maps basis index -> Fraction; missing
    pairs are zero.  ``cartan`` lists the indices of h_1..h_n.
    """

    basis: list
    table: dict
    cartan: list[int] = field(default_factory=list)
    name: str = ""

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @cached_property
    def index(self) -> dict:
        return {lab: k for k, lab in enumerate(self.basis)}

    def bracket_basis(self, a: int, b: int) -> dict[int, Fraction]:
        if a == b:
            return {}
        if a < b:
            return dict(self.table.get((a, b), {}))
        return {k: -v for k, v in self.table.get((b, a), {}).items()}

    def bracket(self, x: Mapping[int, Fraction], y: Mapping[int, Fraction]) -> dict[int, Fraction]:
        for v in (x, y):
            if any(not (0 <= k < self.dim) for k in v):
                raise ValueError("vector index outside the basis")
        out: dict[int, Fraction] = {}
        for a, xa in x.items():
            if not xa:
                continue
            for b, yb in y.items():
                if not yb or a == b:
                    continue
                for k, v in self.bracket_basis(a, b).items():
                    nv = out.get(k, 0) + xa * yb * v
                    if nv:
                        out[k] = nv
                    else:
                        out.pop(k, None)
        return out

    def ad_rows(self, a: int) -> dict[int, dict[int, Fraction]]:
        """Sparse ad(x_a): column j -> image of x_j."""
        return {j: self.bracket_basis(a, j) for j in range(self.dim)}

    def ad_matrix(self, a: int) -> list[list[Fraction]]:
        m = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for j in range(self.dim):
            for k, v in self.bracket_basis(a, j).items():
                m[k][j] = v
        return m

    def denominator(self) -> int:
        from math import lcm

        d = 1
        for vec in self.table.values():
            for v in vec.values():
                d = lcm(d, v.denominator)
        return d

    def to_arrays(self):
        """Scaled integer COO form of the full (antisymmetric) table.

        Returns ``(scale, ptr, idx, val)``: for the ordered pair ``(a, b)``
        the bracket ``[x_a, x_b] = sum val[p] / scale * x_idx[p]`` over
        ``p`` in ``ptr[a*dim + b] : ptr[a*dim + b + 1]``.
        """
        n = self.dim
        scale = self.denominator()
        counts = np.zeros(n * n, dtype=np.int64)
        rows: list[list[tuple[int, int]]] = [[] for _ in range(n * n)]
        for (a, b), vec in self.table.items():
            items = sorted(vec.items())
            rows[a * n + b] = [(k, int(v * scale)) for k, v in items if v]
            rows[b * n + a] = [(k, -int(v * scale)) for k, v in items if v]
        for p, r in enumerate(rows):
            counts[p] = len(r)
        ptr = np.zeros(n * n + 1, dtype=np.int64)
        np.cumsum(counts, out=ptr[1:])
        idx = np.empty(ptr[-1], dtype=np.int64)
        val = np.empty(ptr[-1], dtype=np.int64)
        pos = 0
        for r in rows:
            for k, v in r:
                idx[pos] = k
                val[pos] = v
                pos += 1
        return scale, ptr, idx, val

    def copy(self) -> "LieAlgebra":
        return LieAlgebra(list(self.basis), {k: dict(v) for k, v in self.table.items()},
                          list(self.cartan), self.name)

    # ----------------------------------------------------------- JSON

    def to_json(self) -> dict:
        brackets = []
        for (a, b) in sorted(self.table):
            vec = self.table[(a, b)]
            terms = [[k, v.numerator, v.denominator] for k, v in sorted(vec.items()) if v]
            if terms:
                brackets.append([a, b, terms])
        return {
            "schema": SCHEMA,
            "name": self.name,
            "dim": self.dim,
            "basis": [format_label(lab) for lab in self.basis],
            "cartan": list(self.cartan),
            "brackets": brackets,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, data: Mapping) -> "LieAlgebra":
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported schema {data.get('schema')!r}")
        basis = [parse_label(s) for s in data["basis"]]
        if len(basis) != data["dim"]:
            raise ValueError("dim does not match basis length")
        table = {}
        for a, b, terms in data["brackets"]:
            if not (0 <= a < b < len(basis)):
                raise ValueError(f"bracket index pair ({a},{b}) must satisfy i<j<dim")
            vec = {}
            for k, num, den in terms:
                if not 0 <= k < len(basis):
                    raise ValueError(f"index {k} out of range")
                vec[int(k)] = Fraction(int(num), int(den))
            table[(int(a), int(b))] = vec
        cartan = data.get("cartan")
        if cartan is None:
            cartan = [k for k, lab in enumerate(basis) if lab[0] == "sl2" and lab[2] == "H"]
        return cls(basis, table, list(cartan), data.get("name", ""))


def lie_algebra_from_table(basis, brackets: Mapping, cartan=(), name="") -> LieAlgebra:
    """Build from ``{(a, b): {k: value}}`` given for any ordered pairs (antisymmetrized)."""
    table: dict = {}
    for (a, b), vec in brackets.items():
        vec = {k: Fraction(v) for k, v in vec.items() if v}
        if a == b:
            if vec:
                raise ValueError("[x, x] must vanish")
            continue
        if a > b:
            a, b = b, a
            vec = {k: -v for k, v in vec.items()}
        if (a, b) in table and table[(a, b)] != vec:
            raise ValueError(f"inconsistent brackets for pair ({a},{b})")
        if vec:
            table[(a, b)] = vec
    return LieAlgebra(list(basis), table, list(cartan), name)


# ------------------------------------------------------------------ build


_SL2 = {
    ("H", "E"): {"E": Fraction(2)},
    ("H", "F"): {"F": Fraction(-2)},
    ("E", "F"): {"H": Fraction(1)},
}


def _sl2_bracket(x: str, y: str) -> dict[str, Fraction]:
    if (x, y) in _SL2:
        return _SL2[(x, y)]
    if (y, x) in _SL2:
        return {g: -v for g, v in _SL2[(y, x)].items()}
    return {}


def _raw_bracket(A: CoordinateAlgebra, a, b, flip: bool) -> dict:
    """[a, b] in labels, straight from the rules (both orders for tensor pairs)."""
    if a[0] == "sl2" and b[0] == "sl2":
        if a[1] != b[1]:
            return {}
        return {sl2_label(a[1], g): v for g, v in _sl2_bracket(a[2], b[2]).items()}
    if a[0] == "ten" and b[0] == "sl2":
        return {k: -v for k, v in _raw_bracket(A, b, a, flip).items()}
    if a[0] == "sl2":
        i, gen = a[1], a[2]
        c, pat = b[1], b[2]
        if not c.bits[i]:
            return {}
        pos = c.support.index(i)
        r = _act(gen, pat[pos])
        if r is None:
            return {}
        coef, s = r
        newpat = pat[:pos] + (s,) + pat[pos + 1:]
        return {tensor_label(c, newpat): coef}
    c, X = a[1], a[2]
    d, Y = b[1], b[2]
    if c != d:
        prod = A.products[(ELABEL(c), ELABEL(d))]
        target = ELABEL(c + d)
        if any(lab != target for lab in prod):
            raise LieBuildError(f"e^{c} e^{d} leaves span(e^{c + d})")
        k = prod.get(target, 0)
        if not k:
            return {}
        scalar, pat = phi(c, d, X, Y, flip)
        if not scalar:
            return {}
        return {tensor_label(c + d, pat): k * scalar}
    prod = A.products[(ELABEL(c), ELABEL(c))]
    out: dict = {}
    for lab, mu in prod.items():
        if lab[0] != "t" or not c.bits[lab[1]]:
            raise LieBuildError(f"e^{c} e^{c} leaves span(t_i : i in supp)")
        i = lab[1]
        for g, v in phi_diag(c, i, X, Y, flip).items():
            out[sl2_label(i, g)] = out.get(sl2_label(i, g), 0) + mu * v
    return {k: v for k, v in out.items() if v}


def _basis_for(A: CoordinateAlgebra) -> list:
    basis = [sl2_label(i, g) for i in range(A.n) for g in ("E", "F", "H")]
    for c in A.S:
        for pat in product((1, -1), repeat=c.weight):
            basis.append(tensor_label(c, pat))
    return basis


def _patterns(c: Word) -> list[tuple[int, ...]]:
    return list(product((1, -1), repeat=c.weight))


def _block_brackets(A: CoordinateAlgebra, c: Word, d: Word, flip: bool) -> dict:
    """Nonzero [X⊗e^c, Y⊗e^d] over all patterns, keyed by (X, Y).

    For c != d the contraction vanishes unless X and Y disagree at every
    common index, so only those Y are visited.
    """
    out = {}
    if c == d:
        for X in _patterns(c):
            for Y in _patterns(d):
                vec = _raw_bracket(A, tensor_label(c, X), tensor_label(d, Y), flip)
                if vec:
                    out[(X, Y)] = vec
        return out
    common = [i for i in c.support if d.bits[i]]
    cpos = [c.support.index(i) for i in common]
    dpos = [d.support.index(i) for i in common]
    free = [k for k in range(d.weight) if k not in dpos]
    for X in _patterns(c):
        Y = [0] * d.weight
        for p, q in zip(cpos, dpos):
            Y[q] = -X[p]
        for rest in product((1, -1), repeat=len(free)):
            for k, s in zip(free, rest):
                Y[k] = s
            vec = _raw_bracket(A, tensor_label(c, X), tensor_label(d, tuple(Y)), flip)
            if vec:
                out[(X, tuple(Y))] = vec
    return out


def _block_defects(c, d, fwd: dict, bwd: dict) -> list[tuple]:
    bad = []
    for X, Y in set(fwd) | {(X, Y) for Y, X in bwd}:
        ab = fwd.get((X, Y), {})
        ba = bwd.get((Y, X), {})
        if len(ab) != len(ba) or any(ab[k] != -ba.get(k, 0) for k in ab):
            bad.append((tensor_label(c, X), tensor_label(d, Y)))
    return bad


def antisymmetry_defects(A: CoordinateAlgebra, flip: bool = False) -> list[tuple]:
    """Tensor basis pairs where the rules give [a,b] != -[b,a]."""
    bad = []
    for p, c in enumerate(A.S):
        for d in A.S[p:]:
            fwd = _block_brackets(A, c, d, flip)
            bwd = fwd if c == d else _block_brackets(A, d, c, flip)
            bad.extend(_block_defects(c, d, fwd, bwd))
    return sorted(bad, key=lambda ab: tuple(map(format_label, ab)))


def build_lie_algebra(A: CoordinateAlgebra, flip: bool = False, check: bool = True) -> LieAlgebra:
    """Lie algebra of a coordinate algebra.

    ``flip`` reverses the pairing order in every contraction (<Y_i|X_i>
    instead of <X_i|Y_i>); it exists to localize convention errors.
    """
    basis = _basis_for(A)
    index = {lab: k for k, lab in enumerate(basis)}
    table: dict = {}

    def put(a_i, b_i, vec):
        if a_i > b_i:
            a_i, b_i = b_i, a_i
            vec = {lab: -v for lab, v in vec.items()}
        table[(a_i, b_i)] = {index[lab]: Fraction(v) for lab, v in vec.items()}

    nsl = 3 * A.n
    for a_i in range(nsl):
        for b_i in range(a_i + 1, len(basis)):
            vec = _raw_bracket(A, basis[a_i], basis[b_i], flip)
            if vec:
                put(a_i, b_i, vec)
    bad = []
    for p, c in enumerate(A.S):
        for d in A.S[p:]:
            fwd = _block_brackets(A, c, d, flip)
            if check:
                bwd = fwd if c == d else _block_brackets(A, d, c, flip)
                bad.extend(_block_defects(c, d, fwd, bwd))
            for (X, Y), vec in fwd.items():
                a_i, b_i = index[tensor_label(c, X)], index[tensor_label(d, Y)]
                if a_i < b_i:
                    put(a_i, b_i, vec)
    if bad:
        a, b = min(bad, key=lambda ab: (index[ab[0]], index[ab[1]]))
        raise LieBuildError(
            f"bracket rules are not antisymmetric, e.g. {format_label(a)}, {format_label(b)}"
        )
    cartan = [index[sl2_label(i, "H")] for i in range(A.n)]
    return LieAlgebra(basis, table, cartan, name=A.kind)


def bracket(L: LieAlgebra, x: Mapping[int, Fraction], y: Mapping[int, Fraction]) -> dict[int, Fraction]:
    return L.bracket(x, y)
