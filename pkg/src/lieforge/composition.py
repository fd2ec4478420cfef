"""Octonions, O ⊗ R[ε], and the sign tables of the e7, e8 and f4 coordinate algebras."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .codes import Word

__all__ = [
    "OCT_BASIS",
    "OCT_TABLE",
    "Octonion",
    "oct_mul",
    "oct_basis",
    "oct_norm",
    "split_mul",
    "cayley_dickson_mul",
    "cayley_dickson_table",
    "SignTable",
    "E7_CODEWORDS",
    "E8_CODEWORDS",
    "F4_CODEWORDS",
    "sign_table_e7",
    "sign_table_e8",
    "sign_table_f4",
    "sign_table",
]

OCT_BASIS = ("1", "i", "j", "k", "l", "il", "jl", "kl")
_IDX = {name: n for n, name in enumerate(OCT_BASIS)}

_TABLE_ROWS = (
    "1 i j k l il jl kl",
    "i -1 k -j il -l -kl jl",
    "j -k -1 i jl kl -l -il",
    "k j -i -1 kl -jl il -l",
    "l -il -jl -kl -1 i j k",
    "il l -kl jl -i -1 -k j",
    "jl kl l -il -j k -1 -i",
    "kl -jl il l -k -j i -1",
)


def _parse_entry(tok: str) -> tuple[int, int]:
    sign = -1 if tok.startswith("-") else 1
    return sign, _IDX[tok.lstrip("-")]


# OCT_TABLE[a][b] = (sign, index) with e_a * e_b = sign * e_index
OCT_TABLE: tuple[tuple[tuple[int, int], ...], ...] = tuple(
    tuple(_parse_entry(t) for t in row.split()) for row in _TABLE_ROWS
)

Octonion = tuple  # 8 exact coordinates in OCT_BASIS order


def oct_basis(name_or_index) -> Octonion:
    idx = _IDX[name_or_index] if isinstance(name_or_index, str) else int(name_or_index)
    return tuple(Fraction(int(i == idx)) for i in range(8))


def oct_mul(x: Sequence, y: Sequence) -> Octonion:
    out = [Fraction(0)] * 8
    for a, xa in enumerate(x):
        if not xa:
            continue
        for b, yb in enumerate(y):
            if yb:
                s, c = OCT_TABLE[a][b]
                out[c] += s * xa * yb
    return tuple(out)


def oct_norm(x: Sequence) -> Fraction:
    return sum((Fraction(v) ** 2 for v in x), Fraction(0))


def oct_neg(x: Sequence) -> Octonion:
    return tuple(-Fraction(v) for v in x)


def split_mul(x: tuple[Sequence, Sequence], y: tuple[Sequence, Sequence]):
    """Product in O ⊗ R[ε] with ε² = 1; elements are pairs (a, b) = a⊗1 + b⊗ε."""
    a, b = x
    c, d = y
    ac, bd, ad, bc = oct_mul(a, c), oct_mul(b, d), oct_mul(a, d), oct_mul(b, c)
    return (
        tuple(p + q for p, q in zip(ac, bd)),
        tuple(p + q for p, q in zip(ad, bc)),
    )


# ----------------------------------------------------- Cayley-Dickson oracle


def _quat_mul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def _quat_conj(p):
    return (p[0], -p[1], -p[2], -p[3])


def cayley_dickson_mul(x: Sequence, y: Sequence) -> Octonion:
    """Octonion product by doubling the quaternions.

    ``x = a + b·l`` with ``a, b`` quaternions (coordinates 0-3 and 4-7), and
    ``(a + b l)(c + d l) = (ac - d̄ b) + (d a + b c̄) l``.  Under this rule
    the basis element ``q·l`` is the pair ``(0, q)``.
    """
    a, b = tuple(x[:4]), tuple(x[4:])
    c, d = tuple(y[:4]), tuple(y[4:])
    re = [p - q for p, q in zip(_quat_mul(a, c), _quat_mul(_quat_conj(d), b))]
    im = [p + q for p, q in zip(_quat_mul(d, a), _quat_mul(b, _quat_conj(c)))]
    return tuple(re + im)


def cayley_dickson_table() -> tuple[tuple[tuple[int, int], ...], ...]:
    """Basis multiplication table from :func:`cayley_dickson_mul`, same layout as OCT_TABLE."""
    rows = []
    for a in range(8):
        row = []
        for b in range(8):
            prod = cayley_dickson_mul(oct_basis(a), oct_basis(b))
            (idx,) = [i for i, v in enumerate(prod) if v]
            row.append((int(prod[idx]), idx))
        rows.append(tuple(row))
    return tuple(rows)


# --------------------------------------------------------------- sign tables


def _w(s: str) -> Word:
    return Word.from_str(s)


# labels c1..c7; the last word (c3 + c4) is c7
E7_CODEWORDS: tuple[tuple[str, Word], ...] = (
    ("c1", _w("1100110")),
    ("c2", _w("0110011")),
    ("c3", _w("1010101")),
    ("c4", _w("1111000")),
    ("c5", _w("0011110")),
    ("c6", _w("1001011")),
    ("c7", _w("0101101")),
)

E8_CODEWORDS: tuple[tuple[str, Word], ...] = (
    ("c1", _w("11001100")),
    ("c2", _w("01100110")),
    ("c3", _w("10101010")),
    ("c4", _w("11110000")),
    ("c5", _w("00111100")),
    ("c6", _w("10010110")),
    ("c7", _w("01011010")),
    ("c8", _w("00110011")),
    ("c9", _w("10011001")),
    ("c10", _w("01010101")),
    ("c11", _w("00001111")),
    ("c12", _w("11000011")),
    ("c13", _w("01101001")),
    ("c14", _w("10100101")),
)

# row/column order of the f4 table
F4_CODEWORDS: tuple[tuple[str, Word], ...] = (
    ("0", _w("0000")),
    ("c1", _w("1100")),
    ("c2", _w("0110")),
    ("c3", _w("1010")),
    ("1", _w("1111")),
    ("c4", _w("0011")),
    ("c5", _w("1001")),
    ("c6", _w("0101")),
)

_F4_TABLE = (
    (1, 1, 1, 1, 1, 1, 1, 1),
    (1, -2, 1, 1, 1, -2, -1, -1),
    (1, 1, -2, 1, 1, -1, -2, -1),
    (1, 1, 1, -2, 1, -1, -1, -2),
    (1, -1, -1, -1, -1, 1, 1, 1),
    (1, 2, -1, -1, -1, -2, -1, -1),
    (1, -1, 2, -1, -1, -1, -2, -1),
    (1, -1, -1, 2, -1, -1, -1, -2),
)


@dataclass(frozen=True)
class SignTable:
    """Scalars ε(c, d) on an ordered codeword domain.

    ``values`` holds every defined pair, diagonal included; a pair missing
    from ``values`` means the product e^c e^d is zero by rule.
    """

    algebra: str
    n: int
    labels: tuple[tuple[str, Word], ...]
    values: dict

    @property
    def domain(self) -> tuple[Word, ...]:
        return tuple(w for _, w in self.labels)

    def word(self, label: str) -> Word:
        for name, w in self.labels:
            if name == label:
                return w
        raise KeyError(label)

    def __call__(self, c, d) -> Fraction:
        if isinstance(c, str):
            c = self.word(c)
        if isinstance(d, str):
            d = self.word(d)
        return self.values[(c, d)]

    def defined(self, c: Word, d: Word) -> bool:
        return (c, d) in self.values

    def antisymmetry_violations(self) -> list[tuple[Word, Word]]:
        """Pairs c != d breaking ε(d,c) = (-1)^(|c∩d|+1) ε(c,d)."""
        bad = []
        for (c, d), v in self.values.items():
            if c == d or (d, c) not in self.values:
                continue
            common = len(set(c.support) & set(d.support))
            if self.values[(d, c)] != (-1) ** (common + 1) * v:
                bad.append((c, d))
        return bad

    def to_json(self) -> dict:
        entries = []
        for c in self.domain:
            for d in self.domain:
                v = self.values.get((c, d))
                if v is not None:
                    entries.append([str(c), str(d), int(v)])
        return {"algebra": self.algebra, "entries": entries}


def _signed_basis_table(label, labels, basis, mul, unit, excluded):
    """ε(c,d) with b(c) b(d) = ε(c,d) b(c+d), for a signed basis ``b``."""
    n = len(labels[0][1])
    zero = Word.zero(n)
    lookup = {w: b for (_, w), b in zip(labels, basis)}
    lookup[zero] = unit
    values = {}
    for _, c in labels:
        for _, d in labels:
            s = c + d
            if s in excluded:
                continue
            prod = mul(lookup[c], lookup[d])
            target = lookup[s]
            if prod == target:
                values[(c, d)] = Fraction(1)
            elif prod == _negate(target):
                values[(c, d)] = Fraction(-1)
            else:
                raise AssertionError(f"{c}*{d} does not land on ±b({s})")
    return SignTable(label, n, tuple(labels), values)


def _negate(x):
    if isinstance(x[0], tuple):
        return tuple(_negate(p) for p in x)
    return tuple(-v for v in x)


def sign_table_e7() -> SignTable:
    """Signs of the octonion table under c1..c7 ↔ i, j, k, l, il, jl, kl."""
    basis = [oct_basis(m) for m in range(1, 8)]
    return _signed_basis_table("E7", E7_CODEWORDS, basis, oct_mul, oct_basis(0), excluded=())


def sign_table_e8() -> SignTable:
    """Signs of O⊗R[ε] in the signed basis i⊗1..kl⊗1, i⊗ε, j⊗ε, k⊗ε, -l⊗ε..-kl⊗ε."""
    z = oct_basis(0)
    zero8 = tuple(Fraction(0) for _ in range(8))
    basis = [(oct_basis(m), zero8) for m in range(1, 8)]
    basis += [(zero8, oct_basis(m)) for m in range(1, 4)]
    basis += [(zero8, oct_neg(oct_basis(m))) for m in range(4, 8)]
    return _signed_basis_table(
        "E8", E8_CODEWORDS, basis, split_mul, (z, zero8), excluded=(Word.ones(8),)
    )


def sign_table_f4() -> SignTable:
    """Transcription of the f4 table (rows c, columns d), codeword 0 dropped."""
    values = {}
    for (_, c), row in zip(F4_CODEWORDS, _F4_TABLE):
        for (_, d), v in zip(F4_CODEWORDS, row):
            if c.is_zero() or d.is_zero():
                continue
            values[(c, d)] = Fraction(v)
    return SignTable("F4", 4, F4_CODEWORDS[1:], values)


def sign_table(kind: str) -> SignTable:
    kind = kind.upper()
    try:
        return {"E7": sign_table_e7, "E8": sign_table_e8, "F4": sign_table_f4}[kind]()
    except KeyError:
        raise ValueError(f"no sign table for {kind!r}") from None
