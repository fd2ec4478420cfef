"""Verification of built Lie algebras: Jacobi, Killing form, Cartan
centralizer, ad(h_i) spectra and the root system."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .exact import sparse_rank
from .kernels import jacobi_first_failure, killing_matrix
from .lattices import RootSystemReport, identify_root_system
from .liealg import LieAlgebra, format_label

__all__ = [
    "StructuralError",
    "JacobiResult",
    "VerificationReport",
    "CHECKS",
    "check_jacobi",
    "killing_form",
    "cartan_centralizer",
    "ad_spectrum",
    "spectrum_ok",
    "root_weights",
    "extract_roots",
    "expected_roots",
    "verify",
]

CHECKS = ("jacobi", "killing", "centralizer", "roots", "spectrum")


class StructuralError(ValueError):
    """The algebra does not have the expected weight-space structure."""


@dataclass
class JacobiResult:
    passed: bool
    triple: tuple[int, int, int] | None = None
    residual: dict[int, Fraction] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self, L: LieAlgebra | None = None) -> dict:
        if self.passed:
            return {"pass": True}
        lab = (lambda k: format_label(L.basis[k])) if L else (lambda k: k)
        return {
            "pass": False,
            "triple": [lab(k) for k in self.triple],
            "residual": [[lab(k), v.numerator, v.denominator] for k, v in sorted(self.residual.items())],
        }


def check_jacobi(L: LieAlgebra, backend: str | None = None) -> JacobiResult:
    """Exact Jacobi scan over all triples i <= j <= k; first failure wins."""
    scale, ptr, idx, val = L.to_arrays()
    hit = jacobi_first_failure(L.dim, ptr, idx, val, backend=backend)
    if hit is None:
        return JacobiResult(True)
    triple, res = hit
    residual = {int(k): Fraction(int(res[k]), scale * scale) for k in np.flatnonzero(res)}
    return JacobiResult(False, triple, residual)


def killing_form(L: LieAlgebra, backend: str | None = None) -> tuple[list[list[Fraction]], bool]:
    """Killing matrix tr(ad x_i ad x_j) and whether it is nondegenerate."""
    scale, ptr, idx, val = L.to_arrays()
    K = killing_matrix(L.dim, ptr, idx, val, backend=backend)
    rows = [{j: int(K[i, j]) for j in np.flatnonzero(K[i])} for i in range(L.dim)]
    nondeg = sparse_rank(rows) == L.dim
    s2 = scale * scale
    mat = [[Fraction(int(x), s2) for x in row] for row in K]
    return mat, nondeg


def _ad_rows_stacked(L: LieAlgebra, elems, shift=None):
    """Sparse integer rows of the map x -> ([h, x] - shift*x) for each h in ``elems``."""
    scale = L.denominator()
    rows = []
    for h in elems:
        cols: dict[int, dict[int, int]] = {}
        for j in range(L.dim):
            for k, v in L.bracket_basis(h, j).items():
                cols.setdefault(k, {})[j] = int(v * scale)
            if shift is not None:
                cols.setdefault(j, {})
                cols[j][j] = cols[j].get(j, 0) - int(shift * scale)
        rows.extend({j: v for j, v in r.items() if v} for r in cols.values())
    return rows


def cartan_centralizer(L: LieAlgebra) -> int:
    """dim {x : [h_i, x] = 0 for all Cartan elements h_i}."""
    return L.dim - sparse_rank(_ad_rows_stacked(L, L.cartan))


def ad_spectrum(L: LieAlgebra, i: int, candidates=(-2, -1, 0, 1, 2)) -> dict[int, int]:
    """Eigenvalue multiplicities of ad(h_i) over ``candidates``.

    Multiplicities are kernel dimensions of ad(h_i) - λ; when they add up to
    ``dim`` the map is diagonalizable with exactly this spectrum.
    """
    h = L.cartan[i]
    out = {}
    for lam in candidates:
        k = L.dim - sparse_rank(_ad_rows_stacked(L, [h], shift=Fraction(lam)))
        if k:
            out[lam] = k
    return out


def spectrum_ok(spec: dict[int, int], dim: int) -> bool:
    """±2 exactly once each, everything else in {0, ±1}, nothing missing."""
    return (
        sum(spec.values()) == dim
        and spec.get(2) == 1
        and spec.get(-2) == 1
        and set(spec) <= {-2, -1, 0, 1, 2}
    )


def root_weights(L: LieAlgebra) -> dict[int, tuple[int, ...]]:
    """Simultaneous ad(h_i) eigenvalues of every non-Cartan basis vector."""
    cart = set(L.cartan)
    out = {}
    for j in range(L.dim):
        if j in cart:
            continue
        wt = []
        for h in L.cartan:
            img = L.bracket_basis(h, j)
            if set(img) - {j}:
                raise StructuralError(
                    f"{format_label(L.basis[j])} is not an eigenvector of ad({format_label(L.basis[h])})"
                )
            lam = img.get(j, Fraction(0))
            if lam.denominator != 1:
                raise StructuralError(f"non-integral weight on {format_label(L.basis[j])}")
            wt.append(int(lam))
        out[j] = tuple(wt)
    return out


def expected_roots(L: LieAlgebra) -> set[tuple[int, ...]]:
    """{±α_i} ∪ {½ Σ ±α_i over supp c : c in S}, in doubled coordinates."""
    n = L.rank
    out = set()
    for i in range(n):
        for s in (2, -2):
            out.add(tuple(s * (j == i) for j in range(n)))
    for lab in L.basis:
        if lab[0] == "ten":
            c, pat = lab[1], lab[2]
            v = [0] * n
            for i, s in zip(c.support, pat):
                v[i] = s
            out.add(tuple(v))
    return out


def extract_roots(L: LieAlgebra) -> RootSystemReport:
    """Root system of L relative to span{h_i}, identified by Dynkin type."""
    if cartan_centralizer(L) != L.rank:
        raise StructuralError("span of the h_i is not self-centralizing")
    weights = root_weights(L)
    roots = list(weights.values())
    if any(not any(w) for w in roots):
        raise StructuralError("zero weight outside the Cartan subalgebra")
    if len(set(roots)) != len(roots):
        raise StructuralError("root spaces are not one-dimensional")
    structured = all(lab[0] in ("sl2", "ten") for lab in L.basis)
    if structured and set(roots) != expected_roots(L):
        raise StructuralError("weights differ from the predicted root set")
    return identify_root_system(sorted(roots, reverse=True))


@dataclass
class VerificationReport:
    dimension: int
    rank: int
    jacobi: JacobiResult | None = None
    killing_nondegenerate: bool | None = None
    cartan_centralizer_dim: int | None = None
    cartan_self_centralizing: bool | None = None
    spectra: list[dict[int, int]] | None = None
    spectra_ok: bool | None = None
    roots: RootSystemReport | None = None
    roots_ok: bool | None = None
    errors: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        flags = [
            None if self.jacobi is None else self.jacobi.passed,
            self.killing_nondegenerate,
            self.cartan_self_centralizing,
            self.spectra_ok,
            self.roots_ok,
        ]
        return not self.errors and all(f is not False for f in flags)

    def to_json(self, L: LieAlgebra | None = None) -> dict:
        d: dict = {"dimension": self.dimension, "rank": self.rank, "pass": self.passed}
        if self.jacobi is not None:
            d["jacobi"] = self.jacobi.to_json(L)
        if self.killing_nondegenerate is not None:
            d["killing_nondegenerate"] = self.killing_nondegenerate
        if self.cartan_centralizer_dim is not None:
            d["cartan_centralizer_dim"] = self.cartan_centralizer_dim
            d["cartan_self_centralizing"] = self.cartan_self_centralizing
        if self.spectra is not None:
            d["spectra"] = [{str(k): v for k, v in sorted(s.items())} for s in self.spectra]
            d["spectra_ok"] = self.spectra_ok
        if self.roots is not None:
            d["roots"] = self.roots.to_json()
        if self.roots_ok is not None:
            d["roots_ok"] = self.roots_ok
        if self.errors:
            d["errors"] = list(self.errors)
        return d


def verify(L: LieAlgebra, checks=CHECKS, backend: str | None = None) -> VerificationReport:
    unknown = set(checks) - set(CHECKS)
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(sorted(unknown))}")
    rep = VerificationReport(L.dim, L.rank)
    if "jacobi" in checks:
        rep.jacobi = check_jacobi(L, backend=backend)
    if "killing" in checks:
        rep.killing_nondegenerate = killing_form(L, backend=backend)[1]
    if "centralizer" in checks:
        rep.cartan_centralizer_dim = cartan_centralizer(L)
        rep.cartan_self_centralizing = rep.cartan_centralizer_dim == L.rank
    if "spectrum" in checks:
        rep.spectra = [ad_spectrum(L, i) for i in range(L.rank)]
        rep.spectra_ok = all(spectrum_ok(s, L.dim) for s in rep.spectra)
    if "roots" in checks:
        try:
            rep.roots = extract_roots(L)
            rep.roots_ok = len(rep.roots.roots) + L.rank == L.dim
        except (StructuralError, ValueError) as exc:
            rep.roots_ok = False
            rep.errors.append(f"roots: {exc}")
    return rep
