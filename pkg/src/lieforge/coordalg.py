"""Coordinate algebras on the basis {t_i} ∪ {e^c : c in S}.

Labels are ``("t", i)`` (0-based ``i``) and ``("e", c)`` with ``c`` a
:class:`~lieforge.codes.Word`.  Elements are sparse dicts ``label -> Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .codes import BinaryCode, Word, builtin, code_from_generator
from .composition import SignTable, sign_table

__all__ = [
    "CoordinateAlgebra",
    "AxiomReport",
    "CoordAlgebraError",
    "T",
    "E",
    "build_coordinate_algebra",
    "builtin_coordinate_algebra",
    "coordinate_algebra_from_scalars",
    "multiply",
    "axiom_report",
    "label_str",
]

KIND_CODE = {"E7": "simplex7", "E8": "exthamming8", "F4": "even4"}


class CoordAlgebraError(ValueError):
    pass


def T(i: int) -> tuple:
    return ("t", i)


def E(c: Word) -> tuple:
    return ("e", c)


def label_str(label) -> str:
    kind, x = label
    return f"t{x + 1}" if kind == "t" else f"e^{x}"


@dataclass
class CoordinateAlgebra:
    n: int
    S: tuple[Word, ...]
    products: dict  # (label, label) -> {label: Fraction}; {} is an explicit zero
    mu: dict  # (c, i) -> Fraction, coefficients of e^c e^c on t_i
    kind: str = "generic"
    code: BinaryCode | None = None
    signs: SignTable | None = field(default=None, repr=False)

    @property
    def labels(self) -> list[tuple]:
        return [T(i) for i in range(self.n)] + [E(c) for c in self.S]

    def product(self, a, b) -> dict:
        try:
            return self.products[(a, b)]
        except KeyError:
            raise CoordAlgebraError(f"no product for {a!r} * {b!r}") from None

    def e_coefficient(self, c: Word, d: Word) -> Fraction:
        """Scalar k with e^c e^d = k e^(c+d) (c != d); 0 when the product vanishes."""
        prod = self.products[(E(c), E(d))]
        return prod.get(E(c + d), Fraction(0))

    def to_json(self) -> dict:
        prods = []
        for a in self.labels:
            for b in self.labels:
                terms = [
                    [_label_json(lab), v.numerator, v.denominator]
                    for lab, v in self.products[(a, b)].items()
                ]
                prods.append([_label_json(a), _label_json(b), terms])
        return {"n": self.n, "S": [str(c) for c in self.S], "products": prods}


def _label_json(label) -> str:
    kind, x = label
    return f"t:{x + 1}" if kind == "t" else f"e:{x}"


def _common_products(n: int, S, eprod, mu) -> dict:
    """Fill in the product table given e^c e^d scalars and the mu values."""
    labels = [T(i) for i in range(n)] + [E(c) for c in S]
    Sset = set(S)
    products: dict = {}
    for a in labels:
        for b in labels:
            if a[0] == "t" and b[0] == "t":
                products[(a, b)] = {a: Fraction(1)} if a == b else {}
            elif a[0] == "t" or b[0] == "t":
                i = a[1] if a[0] == "t" else b[1]
                e = b if a[0] == "t" else a
                products[(a, b)] = {e: Fraction(1)} if e[1].bits[i] else {}
            else:
                c, d = a[1], b[1]
                if c == d:
                    products[(a, b)] = {
                        T(i): Fraction(mu[(c, i)]) for i in c.support if mu[(c, i)]
                    }
                else:
                    s = c + d
                    k = eprod.get((c, d), 0) if s in Sset else 0
                    products[(a, b)] = {E(s): Fraction(k)} if k else {}
    return products


def build_coordinate_algebra(code: BinaryCode, signs: SignTable, kind: str) -> CoordinateAlgebra:
    """Coordinate algebra of e7 (simplex7), e8 (exthamming8) or f4 (even4)."""
    kind = kind.upper()
    if kind not in KIND_CODE:
        raise CoordAlgebraError(f"unknown kind {kind!r}")
    if signs.algebra != kind:
        raise CoordAlgebraError(f"sign table is for {signs.algebra}, not {kind}")
    if code != builtin(KIND_CODE[kind]):
        raise CoordAlgebraError(f"{kind} needs the {KIND_CODE[kind]} code")
    n = code.n
    one = Word.ones(n)
    if kind == "E8":
        S = tuple(c for c in signs.domain if c != one)
    else:
        S = signs.domain
    if not all(c in code and not c.is_zero() for c in S):
        raise CoordAlgebraError("sign table domain is not inside the code")
    eprod = {}
    mu = {}
    for c in S:
        for d in S:
            if c != d and signs.defined(c, d):
                eprod[(c, d)] = signs(c, d)
        for i in c.support:
            mu[(c, i)] = signs(c, c)
    products = _common_products(n, S, eprod, mu)
    return CoordinateAlgebra(n, S, products, mu, kind=kind, code=code, signs=signs)


def builtin_coordinate_algebra(kind: str) -> CoordinateAlgebra:
    kind = kind.upper()
    if kind not in KIND_CODE:
        raise CoordAlgebraError(f"unknown kind {kind!r}; choose E7, E8 or F4")
    return build_coordinate_algebra(builtin(KIND_CODE[kind]), sign_table(kind), kind)


def coordinate_algebra_from_scalars(n: int, S, eprod: Mapping, mu: Mapping, kind="generic") -> CoordinateAlgebra:
    """Coordinate algebra from explicit e^c e^d scalars and per-index mu values."""
    S = tuple(S)
    code = code_from_generator(S, n) if S else None
    products = _common_products(n, S, dict(eprod), dict(mu))
    return CoordinateAlgebra(n, S, products, dict(mu), kind=kind, code=code)


def multiply(A: CoordinateAlgebra, x: Mapping, y: Mapping) -> dict:
    """Bilinear product of sparse combinations."""
    labels = set(A.labels)
    for lab in list(x) + list(y):
        if lab not in labels:
            raise CoordAlgebraError(f"label {lab!r} is not in the algebra")
    out: dict = {}
    for a, xa in x.items():
        if not xa:
            continue
        for b, yb in y.items():
            if not yb:
                continue
            for lab, v in A.products[(a, b)].items():
                nv = out.get(lab, 0) + Fraction(xa) * Fraction(yb) * v
                if nv:
                    out[lab] = nv
                else:
                    out.pop(lab, None)
    return out


@dataclass
class AxiomReport:
    """One verdict per code-algebra clause, plus commutativity and deviations."""

    idempotents: bool  # t_i t_j = δ_ij t_i
    t_action: bool  # t_i e^c, e^c t_i in F e^c
    e_products: bool  # e^c e^d in F e^(c+d) for c != d, 1+d
    e_squares: bool  # (e^c)^2 in span{t_i : i in supp c}
    complementary_zero: bool  # e^c e^(1+c) = 0
    basis_matches: bool  # basis is {t_i} ∪ {e^c : c in C \ {0,1}}
    commutative: bool
    deviations: list[str] = field(default_factory=list)

    CLAUSES = ("idempotents", "t_action", "e_products", "e_squares", "complementary_zero", "basis_matches")

    @property
    def code_algebra_clauses_pass(self) -> bool:
        return all(getattr(self, c) for c in self.CLAUSES)

    def to_json(self) -> dict:
        d = {c: getattr(self, c) for c in self.CLAUSES}
        d["commutative"] = self.commutative
        d["deviations"] = list(self.deviations)
        return d


def axiom_report(A: CoordinateAlgebra) -> AxiomReport:
    """Check every code-algebra clause over all basis pairs."""
    n = A.n
    code = A.code if A.code is not None else code_from_generator(A.S or [Word.zero(n)], n)
    one = Word.ones(n)
    dev: list[str] = []

    def only(prod, allowed) -> bool:
        return all(lab in allowed for lab in prod)

    idem = all(
        A.products[(T(i), T(j))] == ({T(i): 1} if i == j else {})
        for i in range(n)
        for j in range(n)
    )
    t_act = all(
        only(A.products[(T(i), E(c))], {E(c)}) and only(A.products[(E(c), T(i))], {E(c)})
        for i in range(n)
        for c in A.S
    )
    e_prod = True
    e_sq = True
    comp_zero = True
    for c in A.S:
        for d in A.S:
            p = A.products[(E(c), E(d))]
            if c == d:
                e_sq &= only(p, {T(i) for i in c.support})
            elif d == c + one:
                if p:
                    comp_zero = False
            else:
                e_prod &= only(p, {E(c + d)})
    wanted = {c for c in code.codewords if not c.is_zero() and c != one}
    have = set(A.S)
    basis_ok = wanted == have
    if one in have:
        dev.append("basis includes e^1")
    if not basis_ok:
        extra = sorted(str(c) for c in have - wanted)
        missing = sorted(str(c) for c in wanted - have)
        if extra:
            dev.append(f"extra basis elements: {', '.join(extra)}")
        if missing:
            dev.append(f"missing basis elements: {', '.join(missing)}")
    labels = A.labels
    comm = all(A.products[(a, b)] == A.products[(b, a)] for a in labels for b in labels)
    if not comm:
        dev.append("not commutative")
    return AxiomReport(idem, t_act, e_prod, e_sq, comp_zero, basis_ok, comm, dev)
