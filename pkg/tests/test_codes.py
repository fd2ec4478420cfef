import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lieforge.codes import (
    BinaryCode,
    CodeInputError,
    Word,
    builtin,
    code_from_generator,
    dual,
    enumerate_codewords,
    format_code_text,
    minimum_distance,
    parse_code_text,
    weight_enumerator,
)
from oracles import macwilliams, span, weight_distribution

SIMPLEX_ROWS = ["1010101", "1100110", "1111000"]
EXT_HAMMING_ROWS = ["11110000", "11001100", "10101010", "01101001"]


def bits(s):
    return tuple(int(ch) for ch in s)


@pytest.mark.parametrize(
    "name, expected",
    [
        ("hamming7", [1, 0, 0, 7, 7, 0, 0, 1]),
        ("simplex7", [1, 0, 0, 0, 7, 0, 0, 0]),
        ("exthamming8", [1, 0, 0, 0, 14, 0, 0, 0, 1]),
        ("even4", [1, 0, 6, 0, 1]),
    ],
)
def test_weight_enumerators(name, expected):
    code = builtin(name)
    assert weight_enumerator(code) == expected
    oracle = span([w.bits for w in code.generator], code.n)
    assert weight_distribution(oracle, code.n) == expected


def test_simplex_from_rows():
    code = code_from_generator(SIMPLEX_ROWS, 7)
    assert code.k == 3 and len(enumerate_codewords(code)) == 8
    assert code == builtin("simplex7")
    assert Word.from_str("1100110") in code


def test_extended_hamming_from_rows():
    code = code_from_generator(EXT_HAMMING_ROWS, 8)
    words = enumerate_codewords(code)
    assert len(words) == 16
    assert {w.bits for w in words} == span([bits(r) for r in EXT_HAMMING_ROWS], 8)


def test_zero_code():
    code = code_from_generator(["0000"], 4)
    assert code.k == 0
    assert enumerate_codewords(code) == [Word.zero(4)]
    assert weight_enumerator(code) == [1, 0, 0, 0, 0]


def test_duals():
    ext = builtin("exthamming8")
    assert dual(ext) == ext
    full = code_from_generator([Word.unit(5, i) for i in range(5)], 5)
    assert dual(full).k == 0
    d = dual(builtin("simplex7"))
    assert (d.n, d.k, minimum_distance(d)) == (7, 4, 3)


def test_listed_codewords():
    even4 = builtin("even4")
    listed = ["0000", "1111", "1100", "0110", "1010", "0011", "1001", "0101"]
    assert {str(w) for w in even4.codewords} == set(listed)
    assert Word.from_str("1110000") in builtin("hamming7")
    assert str(builtin("hamming7")) == "[7,4,3]"


def test_text_round_trip():
    for name in ("hamming7", "simplex7", "exthamming8", "even4"):
        code = builtin(name)
        assert parse_code_text(format_code_text(code)) == code


@pytest.mark.parametrize(
    "text",
    ["", "7", "3 1\n10", "3 1\n102", "3 2\n101", "a b\n"],
)
def test_malformed_text(text):
    with pytest.raises(CodeInputError):
        parse_code_text(text)


def test_bad_words():
    with pytest.raises(CodeInputError):
        Word.from_str("0120")
    with pytest.raises(CodeInputError):
        Word.from_str("01") + Word.from_str("011")
    with pytest.raises(CodeInputError):
        builtin("golay24")


generator_matrices = st.integers(1, 7).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, 1), min_size=n, max_size=n), min_size=1, max_size=n).map(
        lambda rows: (n, rows)
    )
)


@given(generator_matrices)
@settings(max_examples=60, deadline=None)
def test_dual_of_dual(nr):
    n, rows = nr
    code = code_from_generator(rows, n)
    assert dual(dual(code)) == code
    assert code.k + dual(code).k == n


@given(generator_matrices)
@settings(max_examples=60, deadline=None)
def test_enumeration_matches_span(nr):
    n, rows = nr
    code = code_from_generator(rows, n)
    assert {w.bits for w in code.codewords} == span([tuple(r) for r in rows], n)
    assert sum(weight_enumerator(code)) == 2 ** code.k


@given(generator_matrices)
@settings(max_examples=40, deadline=None)
def test_macwilliams_identity(nr):
    n, rows = nr
    code = code_from_generator(rows, n)
    assert weight_enumerator(dual(code)) == macwilliams(weight_enumerator(code), n)


@given(st.integers(1, 10).flatmap(lambda n: st.tuples(*[st.lists(st.integers(0, 1), min_size=n, max_size=n)] * 2)))
def test_xor_support_is_symmetric_difference(pair):
    a, b = (Word(tuple(x)) for x in pair)
    assert set((a + b).support) == set(a.support) ^ set(b.support)
    assert (a + b).weight == a.weight + b.weight - 2 * len(set(a.support) & set(b.support))
    assert a + a == Word.zero(len(a))


def test_codes_compare_by_span():
    a = code_from_generator(["110", "011"], 3)
    b = code_from_generator(["101", "110"], 3)
    assert a == b
    assert isinstance(a, BinaryCode)
