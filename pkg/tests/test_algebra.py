import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from legch.algebra import (
    DGA,
    Element,
    HeightAssignment,
    StructureError,
    apply_differential,
    format_element,
    height_of_element,
    validate_dga,
    word_grading,
)

from support import load_corpus

TREFOIL = load_corpus("trefoil").dga
TREFOIL_H = load_corpus("trefoil").heights


def gid(name):
    return TREFOIL.gid_of(name)


# --- words and gradings -------------------------------------------------

def test_unit_word_has_grading_zero():
    assert word_grading((), TREFOIL) == 0


def test_trefoil_word_gradings():
    assert word_grading((gid("q5"), gid("q4"), gid("q3")), TREFOIL) == 0
    assert word_grading((gid("q1"), gid("q3")), TREFOIL) == 1


def test_unknown_generator_is_structural_error():
    with pytest.raises(StructureError):
        word_grading((99,), TREFOIL)


words = st.lists(
    st.integers(min_value=0, max_value=4), min_size=0, max_size=4
).map(tuple)


@given(words, words)
def test_word_grading_additive_under_concatenation(w1, w2):
    assert word_grading(w1 + w2, TREFOIL) == word_grading(w1, TREFOIL) + word_grading(
        w2, TREFOIL
    )


# --- heights -------------------------------------------------------------

def test_height_of_product_word():
    h = HeightAssignment({0: 4, 1: 4})
    assert height_of_element(Element.from_word((0, 1)), h) == 8


def test_height_of_sum_is_max():
    h = HeightAssignment({0: 1, 1: 1})
    elem = Element.from_word((0,)) + Element.from_word((1,))
    assert height_of_element(elem, h) == 1


def test_height_of_zero_is_minus_infinity():
    assert height_of_element(Element.zero(), HeightAssignment({})) == -math.inf


def test_height_of_unit_word_is_zero():
    assert height_of_element(Element.one(), HeightAssignment({})) == 0


def test_missing_height_is_structural_error():
    with pytest.raises(StructureError):
        height_of_element(Element.from_word((3,)), HeightAssignment({0: 1}))


def test_heights_must_be_positive_and_exact():
    with pytest.raises(ValueError):
        HeightAssignment({0: 0})
    with pytest.raises(TypeError):
        HeightAssignment({0: 0.5})


@given(words, words)
def test_height_multiplicative_on_words(w1, w2):
    h = TREFOIL_H
    a, b = Element.from_word(w1), Element.from_word(w2)
    assert height_of_element(a * b, h) == height_of_element(a, h) + height_of_element(
        b, h
    )


@given(words, words)
def test_height_of_sum_bounded_by_max(w1, w2):
    h = TREFOIL_H
    a, b = Element.from_word(w1), Element.from_word(w2)
    lhs = height_of_element(a + b, h)
    bound = max(height_of_element(a, h), height_of_element(b, h))
    assert lhs <= bound
    if w1 != w2:
        assert lhs == bound


# --- element arithmetic ---------------------------------------------------

elements = st.lists(words, min_size=0, max_size=5).map(Element)


@given(elements)
def test_element_self_inverse(a):
    assert a + a == Element.zero()


@given(elements, elements)
def test_element_addition_commutes(a, b):
    assert a + b == b + a


@given(elements, elements, elements)
def test_element_addition_associates(a, b, c):
    assert (a + b) + c == a + (b + c)


@given(elements, elements, elements)
def test_multiplication_distributes(a, b, c):
    assert (a + b) * c == a * c + b * c


@given(elements)
def test_unit_is_multiplicative_identity(a):
    assert Element.one() * a == a
    assert a * Element.one() == a


def test_zero_element_distinct_from_unit():
    assert Element.zero() != Element.one()
    assert not Element.zero()
    assert Element.one()


def test_mod_two_reduction_of_duplicate_words():
    assert Element([(0,), (0,)]) == Element.zero()
    assert Element([(0,), (1,), (0,)]) == Element.from_word((1,))


# --- differential ---------------------------------------------------------

def test_trefoil_differential_of_q1():
    image = apply_differential(Element.from_word((gid("q1"),)), TREFOIL)
    expected = Element(
        [
            (),
            (gid("q5"),),
            (gid("q5"), gid("q4"), gid("q3")),
            (gid("q3"),),
        ]
    )
    assert image == expected


def test_differential_kills_unit():
    assert apply_differential(Element.one(), TREFOIL) == Element.zero()


def test_differential_of_q3q4_vanishes():
    w = Element.from_word((gid("q3"), gid("q4")))
    assert apply_differential(w, TREFOIL) == Element.zero()


@given(elements)
def test_differential_squares_to_zero(a):
    once = apply_differential(a, TREFOIL)
    assert apply_differential(once, TREFOIL) == Element.zero()


def test_leibniz_rule_on_products():
    a = Element.from_word((gid("q1"),))
    b = Element.from_word((gid("q2"),))
    da = apply_differential(a, TREFOIL)
    db = apply_differential(b, TREFOIL)
    assert apply_differential(a * b, TREFOIL) == da * b + a * db


# --- validation -----------------------------------------------------------

def test_corpus_dgas_are_valid():
    for name in ("unknot", "trefoil", "trefoil_rii", "island"):
        assert validate_dga(load_corpus(name).dga).ok


def test_constant_differential_variant_is_valid():
    # A single grading-1 generator with d(q) = 1 passes both checks even though
    # it admits no augmentation.
    dga = DGA.from_data([("q", 1)], {"q": [[]]})
    assert validate_dga(dga).ok


def test_grading_violation_reported():
    dga = DGA.from_data([("q", 1)], {"q": [["q"]]})
    report = validate_dga(dga)
    assert not report.ok
    assert any(v.kind == "grading" for v in report.violations)


def test_d_squared_violation_reported():
    dga = DGA.from_data(
        [("a", 2), ("b", 1), ("c", 0)],
        {"a": [["b"]], "b": [["c"]], "c": []},
    )
    report = validate_dga(dga)
    assert not report.ok
    assert any(v.kind == "d_squared" for v in report.violations)
    assert all(v.kind != "grading" for v in report.violations)


def test_dga_structure_checks():
    with pytest.raises(StructureError):
        DGA.from_data([("a", 0), ("a", 1)], {"a": []})
    with pytest.raises(StructureError):
        DGA.from_data([("a", 0)], {})
    with pytest.raises(StructureError):
        DGA.from_data([("a", 0)], {"a": [["zz"]]})


def test_format_element():
    e = Element.from_word((gid("q3"),)) + Element.from_word((gid("q5"),))
    assert format_element(e, TREFOIL) == "q3 + q5"
    assert format_element(Element.zero(), TREFOIL) == "0"
    assert format_element(Element.one(), TREFOIL) == "1"
    assert (
        format_element(apply_differential(Element.from_word((gid("q1"),)), TREFOIL), TREFOIL)
        == "1 + q3 + q5 + q5q4q3"
    )
