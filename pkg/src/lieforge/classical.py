"""Matrix realizations of c_n, d_2n and b_2n with their SL2^n block bases.

Each realization lists its basis in the same label scheme as
:mod:`lieforge.liealg`: sl2 copies first, then one tensor label per basis
vector of each V^c block.  From the matrices we read off a coordinate
algebra, rebuild the abstract Lie algebra from it, and compare structure
constants label by label.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product

import numpy as np

from .codes import Word
from .coordalg import CoordinateAlgebra, coordinate_algebra_from_scalars
from .exact import BasisDecomposer, DecompositionError, rank
from .liealg import (
    LieAlgebra,
    LieBuildError,
    build_lie_algebra,
    format_label,
    phi,
    phi_diag,
    sl2_label,
    tensor_label,
)

__all__ = [
    "BilinearSpace",
    "MatrixLieAlgebra",
    "ConventionError",
    "build_symplectic",
    "build_orthogonal_even",
    "build_orthogonal_odd",
    "build_classical",
    "extract_coordinate_algebra",
    "compare_structure_constants",
    "so_spanning_rank",
]

SIGNS = (1, -1)
# sl2 generators on V in the basis (v+, v-)
SL2_MATRICES = {
    "E": np.array([[0, 1], [0, 0]], dtype=np.int64),
    "F": np.array([[0, 0], [1, 0]], dtype=np.int64),
    "H": np.array([[1, 0], [0, -1]], dtype=np.int64),
}
_POS = {1: 0, -1: 1}


class ConventionError(ValueError):
    """No coordinate-algebra scalars reproduce the matrix brackets."""


def _form2(u: int, v: int) -> int:
    return (u - v) // 2 if u != v else 0


@dataclass
class BilinearSpace:
    """Ambient space with a Gram matrix and a block tag per coordinate."""

    gram: np.ndarray
    symplectic: bool
    tags: list

    @property
    def dim(self) -> int:
        return self.gram.shape[0]

    def b(self, u: np.ndarray, v: np.ndarray) -> int:
        return int(u @ self.gram @ v)

    def is_skew(self, M: np.ndarray) -> bool:
        return not np.any(M.T @ self.gram + self.gram @ M)


@dataclass
class MatrixLieAlgebra:
    """Basis of m×m integer matrices, labelled by sl2 / tensor labels."""

    series: str
    n: int  # number of sl2 copies
    space: BilinearSpace
    labels: list
    matrices: list[np.ndarray]
    blocks: list[tuple[str, object, int]] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.matrices)

    @property
    def ambient(self) -> int:
        return self.space.dim

    @cached_property
    def _decomposer(self) -> BasisDecomposer:
        return BasisDecomposer([_sparse(M) for M in self.matrices])

    def coordinates(self, M: np.ndarray) -> dict[int, Fraction]:
        return self._decomposer.coordinates(_sparse(M))

    @cached_property
    def lie_algebra(self) -> LieAlgebra:
        """Structure constants from matrix commutators (the closure witness)."""
        table = {}
        for a in range(self.dim):
            Ma = self.matrices[a]
            for b in range(a + 1, self.dim):
                Mb = self.matrices[b]
                C = Ma @ Mb - Mb @ Ma
                if not C.any():
                    continue
                try:
                    table[(a, b)] = self.coordinates(C)
                except DecompositionError:
                    raise ValueError(
                        f"basis not closed: [{format_label(self.labels[a])}, {format_label(self.labels[b])}]"
                    ) from None
        cartan = [self.labels.index(sl2_label(i, "H")) for i in range(self.n)]
        return LieAlgebra(list(self.labels), table, cartan, name=f"{self.series}{self.n}")

    def check_skew(self) -> bool:
        return all(self.space.is_skew(M) for M in self.matrices)

    def check_independent(self) -> bool:
        try:
            self._decomposer
        except DecompositionError:
            return False
        return True


def _sparse(M: np.ndarray) -> dict[int, Fraction]:
    flat = M.ravel()
    return {int(k): Fraction(int(flat[k])) for k in np.flatnonzero(flat)}


def _embed(block: np.ndarray, offset: int, m: int) -> np.ndarray:
    out = np.zeros((m, m), dtype=np.int64)
    k = block.shape[0]
    out[offset:offset + k, offset:offset + k] = block
    return out


def _word(n: int, idxs) -> Word:
    return Word(tuple(int(i in idxs) for i in range(n)))


def build_symplectic(n: int) -> MatrixLieAlgebra:
    """c_n = sp(V_1 ⊥ ... ⊥ V_n): n sl2 copies and the blocks V_i ⊗ V_j."""
    if n < 1:
        raise ValueError("n must be at least 1")
    m = 2 * n
    J = np.array([[0, 1], [-1, 0]], dtype=np.int64)
    gram = np.zeros((m, m), dtype=np.int64)
    for i in range(n):
        gram[2 * i:2 * i + 2, 2 * i:2 * i + 2] = J
    space = BilinearSpace(gram, True, [i // 2 for i in range(m)])
    labels, mats, blocks = [], [], []
    for i in range(n):
        for g in ("E", "F", "H"):
            labels.append(sl2_label(i, g))
            mats.append(_embed(SL2_MATRICES[g], 2 * i, m))
        blocks.append(("sl2", i, 3))
    for i, j in combinations(range(n), 2):
        c = _word(n, (i, j))
        for u, v in product(SIGNS, repeat=2):
            M = np.zeros((m, m), dtype=np.int64)
            # w in V_i -> <w|u> v ; w in V_j -> <w|v> u
            for w in SIGNS:
                M[2 * j + _POS[v], 2 * i + _POS[w]] += _form2(w, u)
                M[2 * i + _POS[u], 2 * j + _POS[w]] += _form2(w, v)
            labels.append(tensor_label(c, (u, v)))
            mats.append(M)
        blocks.append(("tensor", c, 4))
    return MatrixLieAlgebra("C", n, space, labels, mats, blocks)


def _orthogonal_space(n: int, with_line: bool) -> tuple[BilinearSpace, dict]:
    """W = [F z ⊥] (V_1⊗V_2) ⊥ ... ⊥ (V_{2n-1}⊗V_{2n}); returns coordinate map."""
    off = 1 if with_line else 0
    m = 4 * n + off
    gram = np.zeros((m, m), dtype=np.int64)
    coord = {}
    tags = ["line"] if with_line else []
    if with_line:
        gram[0, 0] = 1
    for blk in range(n):
        for p, (s1, s2) in enumerate(product(SIGNS, repeat=2)):
            coord[(blk, s1, s2)] = off + 4 * blk + p
            tags.append(blk)
        for (s1, s2), (t1, t2) in product(product(SIGNS, repeat=2), repeat=2):
            gram[coord[(blk, s1, s2)], coord[(blk, t1, t2)]] = _form2(s1, t1) * _form2(s2, t2)
    return BilinearSpace(gram, False, tags), coord


def _sigma(space: BilinearSpace, w1: np.ndarray, w2: np.ndarray) -> np.ndarray:
    """σ_{w1,w2}: w -> b(w, w1) w2 - b(w, w2) w1, as a matrix."""
    G = space.gram
    return np.outer(w2, G @ w1) - np.outer(w1, G @ w2)


def _orthogonal(n: int, with_line: bool) -> MatrixLieAlgebra:
    space, coord = _orthogonal_space(n, with_line)
    m = space.dim
    copies = 2 * n
    labels, mats, blocks = [], [], []
    I2 = np.eye(2, dtype=np.int64)
    for blk in range(n):
        for which in (0, 1):
            for g in ("E", "F", "H"):
                X = SL2_MATRICES[g]
                local = np.kron(X, I2) if which == 0 else np.kron(I2, X)
                M = np.zeros((m, m), dtype=np.int64)
                base = coord[(blk, 1, 1)]
                M[base:base + 4, base:base + 4] = local
                labels.append(sl2_label(2 * blk + which, g))
                mats.append(M)
            blocks.append(("sl2", 2 * blk + which, 3))

    def unit(k):
        e = np.zeros(m, dtype=np.int64)
        e[k] = 1
        return e

    tensor_blocks = []
    if with_line:
        for blk in range(n):
            tensor_blocks.append((_word(copies, (2 * blk, 2 * blk + 1)), ("line", blk)))
    for bi, bj in combinations(range(n), 2):
        idxs = (2 * bi, 2 * bi + 1, 2 * bj, 2 * bj + 1)
        tensor_blocks.append((_word(copies, idxs), ("pair", bi, bj)))
    for c, spec in tensor_blocks:
        if spec[0] == "line":
            blk = spec[1]
            for s1, s2 in product(SIGNS, repeat=2):
                labels.append(tensor_label(c, (s1, s2)))
                mats.append(_sigma(space, unit(0), unit(coord[(blk, s1, s2)])))
            blocks.append(("tensor", c, 4))
        else:
            _, bi, bj = spec
            for s1, s2, s3, s4 in product(SIGNS, repeat=4):
                w1 = unit(coord[(bi, s1, s2)])
                w2 = unit(coord[(bj, s3, s4)])
                labels.append(tensor_label(c, (s1, s2, s3, s4)))
                mats.append(_sigma(space, w1, w2))
            blocks.append(("tensor", c, 16))
    series = "B" if with_line else "D"
    return MatrixLieAlgebra(series, copies, space, labels, mats, blocks)


def build_orthogonal_even(n: int) -> MatrixLieAlgebra:
    """d_2n = so(V_1⊗V_2 ⊥ ... ⊥ V_{2n-1}⊗V_{2n}), n >= 2."""
    if n < 2:
        raise ValueError("d_2n needs n >= 2")
    return _orthogonal(n, with_line=False)


def build_orthogonal_odd(n: int) -> MatrixLieAlgebra:
    """b_2n = so(F ⊥ V_1⊗V_2 ⊥ ... ⊥ V_{2n-1}⊗V_{2n}), n >= 1."""
    if n < 1:
        raise ValueError("b_2n needs n >= 1")
    return _orthogonal(n, with_line=True)


def build_classical(series: str, n: int) -> MatrixLieAlgebra:
    series = series.lower()
    builders = {"c": build_symplectic, "d": build_orthogonal_even, "b": build_orthogonal_odd}
    if series not in builders:
        raise ValueError(f"unknown series {series!r}; choose c, d or b")
    return builders[series](n)


def so_spanning_rank(space: BilinearSpace) -> int:
    """dim so(W) as the exact rank of all σ_{e_a, e_b} over the standard basis."""
    m = space.dim
    vecs = []
    eye = np.eye(m, dtype=np.int64)
    for a, b in combinations(range(m), 2):
        vecs.append(_sigma(space, eye[a], eye[b]).ravel().tolist())
    return rank(vecs)


# ------------------------------------------------------ coordinate algebra


def extract_coordinate_algebra(M: MatrixLieAlgebra) -> CoordinateAlgebra:
    """Solve for e^c e^d scalars and mu values reproducing the matrix brackets.

    The result is rebuilt with :func:`build_lie_algebra` and compared to the
    matrix structure constants; any mismatch raises :class:`ConventionError`.
    """
    L = M.lie_algebra
    idx = {lab: k for k, lab in enumerate(L.basis)}
    S = []
    for lab in L.basis:
        if lab[0] == "ten" and lab[1] not in S:
            S.append(lab[1])
    Sset = set(S)
    n = M.n
    pats = {c: list(product(SIGNS, repeat=c.weight)) for c in S}

    eprod = {}
    for c in S:
        for d in S:
            if c == d or (c + d) not in Sset:
                continue
            k = None
            for X in pats[c]:
                for Y in pats[d]:
                    scalar, pat = phi(c, d, X, Y)
                    if scalar:
                        got = L.bracket_basis(idx[tensor_label(c, X)], idx[tensor_label(d, Y)])
                        k = got.get(idx[tensor_label(c + d, pat)], Fraction(0)) / scalar
                        break
                if k is not None:
                    break
            if k:
                eprod[(c, d)] = k

    mu = {}
    for c in S:
        for i in c.support:
            val = None
            for X in pats[c]:
                for Y in pats[c]:
                    h = phi_diag(c, i, X, Y).get("H")
                    if h:
                        got = L.bracket_basis(idx[tensor_label(c, X)], idx[tensor_label(c, Y)])
                        val = got.get(idx[sl2_label(i, "H")], Fraction(0)) / h
                        break
                if val is not None:
                    break
            if val is None:
                raise ConventionError(f"cannot determine mu for {c} at {i}")
            mu[(c, i)] = val

    A = coordinate_algebra_from_scalars(n, S, eprod, mu, kind=f"{M.series}{n}")
    try:
        rebuilt = build_lie_algebra(A)
    except LieBuildError as exc:
        raise ConventionError(f"extracted scalars are inconsistent: {exc}") from None
    diff = compare_structure_constants(rebuilt, L)
    if diff:
        raise ConventionError(f"rebuilt algebra differs from the matrix realization at {diff[0]}")
    return A


def compare_structure_constants(L1: LieAlgebra, L2: LieAlgebra) -> list[tuple[str, str]]:
    """Label pairs where the two algebras' brackets differ (empty when identical)."""
    if sorted(map(format_label, L1.basis)) != sorted(map(format_label, L2.basis)):
        return [("basis", "basis")]
    to2 = {lab: k for k, lab in enumerate(L2.basis)}
    perm = [to2[lab] for lab in L1.basis]
    bad = []
    for a in range(L1.dim):
        for b in range(a + 1, L1.dim):
            x = {perm[k]: v for k, v in L1.bracket_basis(a, b).items()}
            y = L2.bracket_basis(perm[a], perm[b])
            if x != y:
                bad.append((format_label(L1.basis[a]), format_label(L1.basis[b])))
    return bad
