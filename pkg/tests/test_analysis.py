from fractions import Fraction

import pytest

from lieforge.analysis import (
    StructuralError,
    ad_spectrum,
    cartan_centralizer,
    expected_roots,
    extract_roots,
    killing_form,
    spectrum_ok,
    verify,
)
from lieforge.codes import builtin
from lieforge.lattices import roots_of_code_lattice
from lieforge.liealg import LieAlgebra, sl2_label

DUAL_COXETER = {"f4": 9, "e7": 18, "e8": 30}


@pytest.mark.parametrize("kind", ["f4", "e7", "e8"])
def test_killing_normalization(algebras, kind):
    L = algebras[kind]
    K, nondeg = killing_form(L)
    assert nondeg
    e1, f1 = L.index[sl2_label(0, "E")], L.index[sl2_label(0, "F")]
    # for a long root, κ(e, f) = 2 h^∨ with this sl2 normalization
    assert K[e1][f1] == 2 * DUAL_COXETER[kind]
    assert K[e1][e1] == 0
    assert all(K[a][b] == K[b][a] for a in range(0, L.dim, 7) for b in range(L.dim))


def test_abelian_algebra_is_degenerate():
    L = LieAlgebra([("raw", "x")], {}, [], "ab1")
    assert killing_form(L)[1] is False


@pytest.mark.parametrize("kind, rank", [("f4", 4), ("e7", 7), ("e8", 8)])
def test_cartan_centralizer(algebras, kind, rank):
    assert cartan_centralizer(algebras[kind]) == rank


@pytest.mark.parametrize("kind", ["f4", "e7", "e8"])
def test_spectra(algebras, kind):
    L = algebras[kind]
    for i in range(L.rank):
        spec = ad_spectrum(L, i)
        assert spectrum_ok(spec, L.dim)
        assert spec[2] == spec[-2] == 1
        assert spec[1] == spec[-1]


def test_spectrum_predicate():
    assert spectrum_ok({-2: 1, 0: 1, 2: 1}, 3)
    assert not spectrum_ok({-2: 1, 0: 1, 2: 2}, 4)
    assert not spectrum_ok({-2: 1, 0: 1, 2: 1}, 4)
    assert not spectrum_ok({-3: 1, -2: 1, 0: 1, 2: 1}, 4)


@pytest.mark.parametrize("kind, code, count", [("e7", "simplex7", 126), ("e8", "exthamming8", 240)])
def test_roots_match_lattice(algebras, kind, code, count):
    rep = extract_roots(algebras[kind])
    assert len(rep.roots) == count
    assert rep.dynkin_type == kind.upper()
    assert set(rep.roots) == set(roots_of_code_lattice(builtin(code)))
    assert set(rep.roots) == expected_roots(algebras[kind])


def test_f4_roots(f4):
    rep = extract_roots(f4)
    assert len(rep.roots) == 48 and rep.dynkin_type == "F4"
    assert len(rep.long_roots) == 24 and len(rep.short_roots) == 24
    from lieforge.lattices import identify_root_system

    assert identify_root_system(rep.long_roots).dynkin_type == "D4"


def test_broken_weights_are_reported(f4):
    L = f4.copy()
    h1 = L.index[sl2_label(0, "H")]
    j = next(k for k, lab in enumerate(L.basis) if lab[0] == "ten" and lab[1].bits[0])
    key = (min(h1, j), max(h1, j))
    L.table[key] = dict(L.table[key])
    L.table[key][0] = Fraction(1)
    with pytest.raises(StructuralError):
        extract_roots(L)


@pytest.mark.parametrize("kind", ["f4", "e7", "e8"])
def test_verify_all(algebras, kind):
    rep = verify(algebras[kind])
    assert rep.passed
    js = rep.to_json(algebras[kind])
    assert js["pass"] and js["jacobi"] == {"pass": True}
    assert js["roots"]["type"] == kind.upper()


def test_verify_subset_and_unknown(f4):
    rep = verify(f4, ("centralizer",))
    assert rep.jacobi is None and rep.cartan_centralizer_dim == 4 and rep.passed
    with pytest.raises(ValueError):
        verify(f4, ("bogus",))
