from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lieforge.codes import builtin, code_from_generator
from lieforge.lattices import (
    RootSystemError,
    brute_force_roots,
    catalog_cartan_matrix,
    classify_cartan,
    double_dual_contained,
    identify_root_system,
    inner,
    minus_one_in_weyl,
    orthogonal_root_frame,
    reflect,
    roots_of_code_lattice,
    same_type,
)
from oracles import lattice_roots


@pytest.mark.parametrize("name, count, kind", [("simplex7", 126, "E7"), ("exthamming8", 240, "E8")])
def test_code_lattice_roots(name, count, kind):
    code = builtin(name)
    roots = roots_of_code_lattice(code)
    assert len(roots) == count
    assert set(roots) == lattice_roots({w.bits for w in code.codewords}, code.n)
    assert roots == brute_force_roots(code)
    rep = identify_root_system(roots)
    assert rep.dynkin_type == kind and rep.rank == code.n


def test_zero_code_roots():
    code = code_from_generator(["000"], 3)
    roots = roots_of_code_lattice(code)
    assert sorted(roots) == sorted({tuple(s * (j == i) for j in range(3)) for i in range(3) for s in (2, -2)})
    assert identify_root_system(roots).dynkin_type == "A1+A1+A1"


@pytest.mark.parametrize("name", ["simplex7", "exthamming8"])
def test_frame_and_minus_one(name):
    code = builtin(name)
    frame = orthogonal_root_frame(roots_of_code_lattice(code))
    n = code.n
    assert sorted(frame) == sorted(tuple(2 * (j == i) for j in range(n)) for i in range(n))
    assert minus_one_in_weyl(frame)
    assert double_dual_contained(code)


def test_small_frames():
    assert orthogonal_root_frame([(2,), (-2,)]) == [(2,)]
    assert minus_one_in_weyl([(2,)])
    assert double_dual_contained(code_from_generator(["00"], 2))


def test_hamming_lattice_also_has_126_roots():
    # seven weight-4 words, like the simplex code
    roots = roots_of_code_lattice(builtin("hamming7"))
    assert len(roots) == 14 + 7 * 16
    assert identify_root_system(roots).dynkin_type == "E7"


@given(st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, 1), min_size=n, max_size=n), min_size=1, max_size=n)
))
def test_every_code_lattice_contains_twice_its_dual(rows):
    assert double_dual_contained(code_from_generator(rows, len(rows[0])))


def test_reflections():
    e1 = (2, 0, 0)
    e2 = (0, 2, 0)
    assert reflect(e1, e1) == (-2, 0, 0)
    assert reflect(e1, e2) == e2
    r = (1, 1, 1, 1, 0, 0, 0, 0)
    v = (2, 0, 0, 0, 0, 0, 0, 0)
    rv, vv = np.array(r, float), np.array(v, float)
    expected = vv - 2 * (vv @ rv) / (rv @ rv) * rv
    assert reflect(r, v) == tuple(int(x) for x in expected)
    with pytest.raises(RootSystemError):
        reflect((0, 0), (1, 1))


e8_roots = roots_of_code_lattice(builtin("exthamming8"))


@given(st.sampled_from(e8_roots), st.sampled_from(e8_roots))
def test_reflection_is_involutive_and_permutes_roots(r, v):
    w = reflect(r, v)
    assert reflect(r, w) == tuple(v)
    assert w in set(e8_roots)
    assert inner(w, w) == inner(v, v)


@pytest.mark.parametrize(
    "label, det",
    [("A1", 2), ("A3", 4), ("B2", 2), ("C3", 2), ("D4", 4), ("D6", 4), ("E6", 3), ("E7", 2), ("E8", 1), ("F4", 1), ("G2", 1)],
)
def test_catalog_cartan_determinants(label, det):
    m = np.array(catalog_cartan_matrix(label), dtype=float)
    assert round(np.linalg.det(m)) == det
    assert np.all(np.diag(m) == 2)
    assert classify_cartan(catalog_cartan_matrix(label)) == [label]


def test_orthogonal_pair_is_a1_a1():
    rep = identify_root_system([(2, 0), (-2, 0), (0, 2), (0, -2)])
    assert rep.dynkin_type == "A1+A1"
    assert rep.components == ["A1", "A1"]


def test_b2_c2_aliases():
    assert same_type("C2", "B2")
    assert same_type("A1+C2", "B2+A1")
    assert not same_type("B3", "C3")


def test_non_simply_laced_lengths():
    # B2 in doubled coordinates: long (±2,±2)/2 scaled, short ±2e_i
    short = [(2, 0), (-2, 0), (0, 2), (0, -2)]
    long = [(a, b) for a in (2, -2) for b in (2, -2)]
    rep = identify_root_system(short + long)
    assert same_type(rep.dynkin_type, "B2")
    assert len(rep.long_roots) == 4 and len(rep.short_roots) == 4


def test_rejects_bad_input():
    with pytest.raises(RootSystemError):
        identify_root_system([])
    with pytest.raises(RootSystemError):
        identify_root_system([(2, 0)])
    with pytest.raises(RootSystemError):
        identify_root_system([(2, 0), (-2, 0), (2, 0)])


def test_inner_is_half_dot():
    assert inner((2, 0), (2, 0)) == 2
    assert inner((1, 1, 1, 1), (1, -1, 0, 0)) == Fraction(0)
