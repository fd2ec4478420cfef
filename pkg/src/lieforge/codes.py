"""Binary linear codes over F2.

Codewords are :class:`Word` values (immutable bit tuples).  A
:class:`BinaryCode` keeps its generator matrix in reduced row-echelon form,
so two codes are equal exactly when their generators are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from typing import Iterable, Sequence

__all__ = [
    "Word",
    "BinaryCode",
    "CodeInputError",
    "code_from_generator",
    "enumerate_codewords",
    "dual",
    "weight_enumerator",
    "minimum_distance",
    "builtin",
    "BUILTIN_NAMES",
    "parse_code_text",
    "format_code_text",
]


class CodeInputError(ValueError):
    """Malformed code input (row lengths, characters, unknown names)."""


@dataclass(frozen=True, order=True)
class Word:
    """A word of F2^n.  Addition is XOR."""

    bits: tuple[int, ...]

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise CodeInputError(f"bits must be 0/1, got {self.bits!r}")

    @classmethod
    def from_str(cls, s: str) -> "Word":
        s = s.strip()
        if not s or any(ch not in "01" for ch in s):
            raise CodeInputError(f"not a bit string: {s!r}")
        return cls(tuple(int(ch) for ch in s))

    @classmethod
    def zero(cls, n: int) -> "Word":
        return cls((0,) * n)

    @classmethod
    def ones(cls, n: int) -> "Word":
        return cls((1,) * n)

    @classmethod
    def unit(cls, n: int, i: int) -> "Word":
        """Word with a single 1 at 0-based position ``i``."""
        return cls(tuple(int(j == i) for j in range(n)))

    def __len__(self) -> int:
        return len(self.bits)

    def __add__(self, other: "Word") -> "Word":
        if len(other.bits) != len(self.bits):
            raise CodeInputError("length mismatch")
        return _xor(self.bits, other.bits)

    __sub__ = __add__

    def __str__(self) -> str:
        return "".join(map(str, self.bits))

    @cached_property
    def support(self) -> tuple[int, ...]:
        """0-based indices of the 1 bits, increasing."""
        return tuple(i for i, b in enumerate(self.bits) if b)

    @cached_property
    def weight(self) -> int:
        return sum(self.bits)

    def dot(self, other: "Word") -> int:
        return sum(a & b for a, b in zip(self.bits, other.bits)) & 1

    def is_zero(self) -> bool:
        return not any(self.bits)


@lru_cache(maxsize=4096)
def _xor(a: tuple[int, ...], b: tuple[int, ...]) -> Word:
    return Word(tuple(x ^ y for x, y in zip(a, b)))


def _rref(rows: list[list[int]], n: int) -> list[list[int]]:
    rows = [r[:] for r in rows]
    out: list[list[int]] = []
    col = 0
    for col in range(n):
        piv = next((r for r in rows if r[col]), None)
        if piv is None:
            continue
        rows.remove(piv)
        for r in rows:
            if r[col]:
                r[:] = [a ^ b for a, b in zip(r, piv)]
        for r in out:
            if r[col]:
                r[:] = [a ^ b for a, b in zip(r, piv)]
        out.append(piv)
    return out


@dataclass(frozen=True)
class BinaryCode:
    """Linear code given by an RREF generator matrix (tuple of Words)."""

    n: int
    generator: tuple[Word, ...]

    @property
    def k(self) -> int:
        return len(self.generator)

    @property
    def dimension(self) -> int:
        return len(self.generator)

    @cached_property
    def pivots(self) -> tuple[int, ...]:
        return tuple(w.support[0] for w in self.generator)

    @cached_property
    def codewords(self) -> tuple[Word, ...]:
        words = []
        for msg in product((0, 1), repeat=self.k):
            acc = [0] * self.n
            for m, row in zip(msg, self.generator):
                if m:
                    acc = [a ^ b for a, b in zip(acc, row.bits)]
            words.append(Word(tuple(acc)))
        return tuple(words)

    @cached_property
    def _parity_rows(self) -> tuple[Word, ...]:
        return dual(self).generator

    def __contains__(self, w: Word) -> bool:
        if len(w) != self.n:
            return False
        # syndrome against the dual
        return all(w.dot(h) == 0 for h in self._parity_rows)

    def __iter__(self):
        return iter(self.codewords)

    def __len__(self) -> int:
        return 1 << self.k

    def __str__(self) -> str:
        d = minimum_distance(self)
        return f"[{self.n},{self.k},{d if d else '-'}]"


def code_from_generator(rows: Iterable[Word | Sequence[int] | str], n: int) -> BinaryCode:
    """Code spanned by ``rows``; the stored generator is their RREF."""
    mat: list[list[int]] = []
    for r in rows:
        if isinstance(r, str):
            r = Word.from_str(r)
        bits = list(r.bits if isinstance(r, Word) else r)
        if len(bits) != n:
            raise CodeInputError(f"row {bits} has length {len(bits)}, expected {n}")
        if any(b not in (0, 1) for b in bits):
            raise CodeInputError(f"row {bits} is not binary")
        mat.append([int(b) for b in bits])
    if n <= 0:
        raise CodeInputError("code length must be positive")
    red = _rref(mat, n)
    return BinaryCode(n, tuple(Word(tuple(r)) for r in red))


def enumerate_codewords(code: BinaryCode) -> list[Word]:
    """All 2^k codewords, message vectors in increasing binary order."""
    return list(code.codewords)


def dual(code: BinaryCode) -> BinaryCode:
    n = code.n
    piv = code.pivots
    free = [j for j in range(n) if j not in piv]
    rows = []
    # standard kernel basis of an RREF matrix: one vector per free column
    for f in free:
        v = [0] * n
        v[f] = 1
        for p, g in zip(piv, code.generator):
            v[p] = g.bits[f]
        rows.append(v)
    return code_from_generator(rows, n)


def weight_enumerator(code: BinaryCode) -> list[int]:
    counts = [0] * (code.n + 1)
    for w in code.codewords:
        counts[w.weight] += 1
    return counts


def minimum_distance(code: BinaryCode) -> int:
    """Smallest positive weight, or 0 for the zero code."""
    we = weight_enumerator(code)
    return next((w for w in range(1, code.n + 1) if we[w]), 0)


_BUILTINS: dict[str, tuple[int, tuple[str, ...]]] = {
    "hamming7": (7, ("1110000", "1001100", "0101010", "1101001")),
    "simplex7": (7, ("1010101", "1100110", "1111000")),
    "exthamming8": (8, ("11110000", "11001100", "10101010", "01101001")),
    "even4": (4, ("1100", "0110", "1111")),
}
BUILTIN_NAMES = tuple(_BUILTINS)


def builtin(name: str) -> BinaryCode:
    """One of ``hamming7``, ``simplex7``, ``exthamming8``, ``even4``."""
    try:
        n, rows = _BUILTINS[name]
    except KeyError:
        raise CodeInputError(
            f"unknown code {name!r}; choose from {', '.join(BUILTIN_NAMES)}"
        ) from None
    return code_from_generator(rows, n)


def parse_code_text(text: str) -> BinaryCode:
    """Parse ``"n k"`` followed by k rows of n characters in {0,1}."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise CodeInputError("empty code file")
    head = lines[0].split()
    if len(head) != 2 or not all(h.isdigit() for h in head):
        raise CodeInputError(f"bad header {lines[0]!r}, expected 'n k'")
    n, k = map(int, head)
    body = lines[1:]
    if len(body) != k:
        raise CodeInputError(f"header announces {k} rows, found {len(body)}")
    for ln in body:
        if len(ln) != n or any(ch not in "01" for ch in ln):
            raise CodeInputError(f"bad row {ln!r}")
    return code_from_generator(body, n)


def format_code_text(code: BinaryCode) -> str:
    lines = [f"{code.n} {code.k}"] + [str(w) for w in code.generator]
    return "\n".join(lines) + "\n"
