"""Acceptance criteria 1-9, one pass/fail line each.

Run under pytest (lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import os
import sys
import time
from itertools import product

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from lieforge import build_algebra  # noqa: E402
from lieforge.analysis import (  # noqa: E402
    ad_spectrum,
    cartan_centralizer,
    check_jacobi,
    extract_roots,
    killing_form,
    spectrum_ok,
)
from lieforge.classical import (  # noqa: E402
    build_classical,
    compare_structure_constants,
    extract_coordinate_algebra,
    so_spanning_rank,
)
from lieforge.codes import builtin, dual, weight_enumerator  # noqa: E402
from lieforge.composition import OCT_TABLE, cayley_dickson_table, oct_basis, oct_mul, oct_norm  # noqa: E402
from lieforge.coordalg import axiom_report, builtin_coordinate_algebra  # noqa: E402
from lieforge.lattices import (  # noqa: E402
    double_dual_contained,
    identify_root_system,
    minus_one_in_weyl,
    orthogonal_root_frame,
    roots_of_code_lattice,
    same_type,
)
from lieforge.liealg import build_lie_algebra  # noqa: E402
from oracles import cd_octonion_mul, lattice_roots, unit8  # noqa: E402

RESULTS: dict[int, str] = {}

TITLES = {
    1: "dimensions",
    2: "Jacobi identity",
    3: "root systems",
    4: "ad(h_i) spectra",
    5: "semisimplicity certificates",
    6: "codes and lattices",
    7: "code-algebra compliance",
    8: "octonion oracle",
    9: "classical cross-check",
}


def record(num: int, ok: bool, detail: str) -> bool:
    RESULTS[num] = f"[{'PASS' if ok else 'FAIL'}] criterion {num} ({TITLES[num]}): {detail}"
    return ok


def _timed(fn):
    t = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t


CLASSICAL_CASES = [("c", 1), ("c", 2), ("c", 3), ("d", 2), ("d", 3), ("b", 1), ("b", 2), ("b", 3)]


def _classical_dim_formula(series: str, n: int) -> int:
    return {"c": 2 * n * n + n, "d": 8 * n * n - 2 * n, "b": 8 * n * n + 2 * n}[series]


# ------------------------------------------------------------- criteria


def criterion_1() -> tuple[bool, str]:
    bad = []
    slowest = 0.0
    for kind, want in (("e7", 133), ("e8", 248), ("f4", 52)):
        L, dt = _timed(lambda: build_algebra(kind))
        slowest = max(slowest, dt)
        if L.dim != want or dt >= 1.0:
            bad.append(f"{kind}: dim {L.dim} in {dt:.2f}s")
    for series, n in CLASSICAL_CASES:
        def make():
            M = build_classical(series, n)
            spanned = M.dim if series == "c" else so_spanning_rank(M.space)
            return M, spanned

        (M, spanned), dt = _timed(make)
        slowest = max(slowest, dt)
        want = _classical_dim_formula(series, n)
        if M.dim != want or spanned != want or dt >= 1.0:
            bad.append(f"{series}{n}: dim {M.dim} (span {spanned}) vs {want} in {dt:.2f}s")
    if bad:
        return False, "; ".join(bad)
    return True, f"133/248/52 and 8 classical cases exact, slowest {slowest:.2f}s < 1s"


def _mutated(L):
    M = L.copy()
    key = sorted(M.table)[len(M.table) // 2]
    k = min(M.table[key])
    M.table[key][k] = -M.table[key][k]
    return M


def criterion_2(algebras) -> tuple[bool, str]:
    limits = {"f4": 60.0, "e7": 60.0, "e8": 600.0}
    parts, ok = [], True
    for kind in ("f4", "e7", "e8"):
        res, dt = _timed(lambda: check_jacobi(algebras[kind]))
        ok &= res.passed and dt < limits[kind]
        parts.append(f"{kind} {'zero residual' if res.passed else f'fails at {res.triple}'} in {dt:.2f}s")
    witnesses = []
    for kind in ("f4", "e7", "e8"):
        res = check_jacobi(_mutated(algebras[kind]))
        ok &= not res.passed and bool(res.residual)
        witnesses.append(f"{kind}{res.triple}")
    parts.append("mutation witnesses " + " ".join(witnesses))
    return ok, "; ".join(parts)


def criterion_3(algebras) -> tuple[bool, str]:
    ok = True
    e7 = extract_roots(algebras["e7"])
    e8 = extract_roots(algebras["e8"])
    f4 = extract_roots(algebras["f4"])
    ok &= len(e7.roots) == 126 and e7.dynkin_type == "E7"
    ok &= len(e8.roots) == 240 and e8.dynkin_type == "E8"
    ok &= len(f4.roots) == 48 and f4.dynkin_type == "F4"
    f4_long = identify_root_system(f4.long_roots).dynkin_type
    ok &= f4_long == "D4" and len(f4.long_roots) == 24 and len(f4.short_roots) == 24
    same7 = set(e7.roots) == set(roots_of_code_lattice(builtin("simplex7")))
    same8 = set(e8.roots) == set(roots_of_code_lattice(builtin("exthamming8")))
    ok &= same7 and same8
    return ok, (
        f"E7 {len(e7.roots)}, E8 {len(e8.roots)}, F4 {len(f4.roots)} "
        f"(long {len(f4.long_roots)} = {f4_long}, short {len(f4.short_roots)}); "
        f"lattice sets equal: {same7 and same8}"
    )


def criterion_4(algebras) -> tuple[bool, str]:
    targets = dict(algebras)
    for series, n in (("c", 2), ("c", 3), ("d", 2), ("b", 1)):
        M = build_classical(series, n)
        targets[f"{series}{M.n}"] = M.lie_algebra
    bad = []
    for name, L in targets.items():
        for i in range(L.rank):
            spec = ad_spectrum(L, i)
            if not spectrum_ok(spec, L.dim):
                bad.append(f"{name} h{i + 1}: {spec}")
    if bad:
        return False, "; ".join(bad)
    return True, f"±2 once, rest in {{0,±1}} for every h_i of {', '.join(targets)}"


def criterion_5(algebras) -> tuple[bool, str]:
    ok, parts = True, []
    for kind, rank in (("f4", 4), ("e7", 7), ("e8", 8)):
        nondeg = killing_form(algebras[kind])[1]
        cdim = cartan_centralizer(algebras[kind])
        ok &= nondeg and cdim == rank
        parts.append(f"{kind} Killing {'nondegenerate' if nondeg else 'DEGENERATE'}, centralizer {cdim}")
    return ok, "; ".join(parts)


def criterion_6() -> tuple[bool, str]:
    ok = True
    enums = {
        "hamming7": [1, 0, 0, 7, 7, 0, 0, 1],
        "simplex7": [1, 0, 0, 0, 7, 0, 0, 0],
        "exthamming8": [1, 0, 0, 0, 14, 0, 0, 0, 1],
    }
    for name, want in enums.items():
        ok &= weight_enumerator(builtin(name)) == want
    ext = builtin("exthamming8")
    ok &= dual(ext) == ext
    counts = []
    for name in ("simplex7", "exthamming8"):
        code = builtin(name)
        brute = lattice_roots({w.bits for w in code.codewords}, code.n)
        roots = roots_of_code_lattice(code)
        counts.append(len(brute))
        ok &= set(roots) == brute
        ok &= minus_one_in_weyl(orthogonal_root_frame(roots))
        ok &= double_dual_contained(code)
    ok &= counts == [126, 240]
    return ok, f"enumerators match, ext. Hamming self-dual, brute-force roots {counts[0]}/{counts[1]}, -1 in W, 2Γ*⊆Γ"


def criterion_7() -> tuple[bool, str]:
    e7 = axiom_report(builtin_coordinate_algebra("E7"))
    e8 = axiom_report(builtin_coordinate_algebra("E8"))
    f4 = axiom_report(builtin_coordinate_algebra("F4"))
    ok = (
        e7.code_algebra_clauses_pass and not e7.commutative
        and e8.code_algebra_clauses_pass and not e8.commutative
        and "basis includes e^1" in f4.deviations
    )
    return ok, (
        f"E7/E8 clauses {'pass' if e7.code_algebra_clauses_pass and e8.code_algebra_clauses_pass else 'FAIL'} "
        f"(commutative: {e7.commutative}/{e8.commutative}); F4 deviations: {', '.join(f4.deviations)}"
    )


def criterion_8() -> tuple[bool, str]:
    ok = cayley_dickson_table() == OCT_TABLE
    for a, b in product(range(8), repeat=2):
        s, k = OCT_TABLE[a][b]
        ok &= cd_octonion_mul(unit8(a), unit8(b)) == tuple(s * x for x in unit8(k))
        x, y = oct_basis(a), oct_basis(b)
        ok &= oct_mul(oct_mul(x, x), y) == oct_mul(x, oct_mul(x, y))
        ok &= oct_mul(oct_mul(y, x), x) == oct_mul(y, oct_mul(x, x))
        ok &= oct_norm(oct_mul(x, y)) == oct_norm(x) * oct_norm(y)
    return ok, "static octonion table equals the Cayley-Dickson doubling; alternativity and |xy|=|x||y| on 64 pairs"


def criterion_9() -> tuple[bool, str]:
    cases = [("c", 2, "C2"), ("c", 3, "C3"), ("d", 2, "D4"), ("b", 1, "B2")]
    ok, parts = True, []
    for series, n, kind in cases:
        M = build_classical(series, n)
        A = extract_coordinate_algebra(M)
        L = build_lie_algebra(A)
        same = not compare_structure_constants(L, M.lie_algebra)
        got = extract_roots(L).dynkin_type
        ok &= same and same_type(got, kind)
        parts.append(f"{series}{M.n}: {'identical' if same else 'DIFFERENT'}, {got}")
    return ok, "; ".join(parts)


# ----------------------------------------------------------- pytest


def test_criterion_1_dimensions():
    ok, detail = criterion_1()
    assert record(1, ok, detail), detail


def test_criterion_2_jacobi(algebras):
    ok, detail = criterion_2(algebras)
    assert record(2, ok, detail), detail


def test_criterion_3_roots(algebras):
    ok, detail = criterion_3(algebras)
    assert record(3, ok, detail), detail


def test_criterion_4_spectrum(algebras):
    ok, detail = criterion_4(algebras)
    assert record(4, ok, detail), detail


def test_criterion_5_semisimplicity(algebras):
    ok, detail = criterion_5(algebras)
    assert record(5, ok, detail), detail


def test_criterion_6_codes_lattices():
    ok, detail = criterion_6()
    assert record(6, ok, detail), detail


def test_criterion_7_code_algebra():
    ok, detail = criterion_7()
    assert record(7, ok, detail), detail


def test_criterion_8_octonions():
    ok, detail = criterion_8()
    assert record(8, ok, detail), detail


def test_criterion_9_classical():
    ok, detail = criterion_9()
    assert record(9, ok, detail), detail


@pytest.fixture(autouse=True)
def _echo_result(request):
    yield
    num = next((k for k in TITLES if request.node.name.startswith(f"test_criterion_{k}_")), None)
    if num in RESULTS:
        print(RESULTS[num])


if __name__ == "__main__":
    built = {k: build_algebra(k) for k in ("f4", "e7", "e8")}
    runners = {
        1: criterion_1, 2: lambda: criterion_2(built), 3: lambda: criterion_3(built),
        4: lambda: criterion_4(built), 5: lambda: criterion_5(built), 6: criterion_6,
        7: criterion_7, 8: criterion_8, 9: criterion_9,
    }
    all_ok = True
    for num, fn in runners.items():
        ok, detail = fn()
        all_ok &= record(num, ok, detail)
        print(RESULTS[num])
    sys.exit(0 if all_ok else 1)
