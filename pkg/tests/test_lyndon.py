"""Lyndon words: enumeration, standard factorization and bracket expansion."""

from __future__ import annotations

from fractions import Fraction

import pytest

from splitgen.lyndon import (
    GradedAlphabet,
    LyndonWord,
    Word,
    bracketing,
    expand_bracket,
    generate_lyndon,
    is_lyndon,
    lie_coordinates,
    lyndon_basis_matrix,
    lyndon_index_sequences,
    standard_factorization,
)
from splitgen.witt import witt_count

XY = GradedAlphabet.uniform("xy")


def _w(text: str) -> tuple[int, ...]:
    return XY.letters_of(text)


def _expansion_as_text(text: str) -> dict[str, int]:
    poly = expand_bracket(bracketing(_w(text)))
    return {XY.spell(word): coeff for word, coeff in poly.items()}


@pytest.mark.parametrize(
    "text,expected",
    [("x", True), ("xy", True), ("xxy", True), ("xyy", True), ("xyx", False),
     ("xx", False), ("yx", False), ("xyxy", False), ("xxyxy", True)],
)
def test_is_lyndon(text, expected):
    assert is_lyndon(_w(text)) is expected


def test_empty_word_is_not_lyndon():
    assert not is_lyndon(())


def test_generate_lyndon_two_letters_up_to_four():
    words = [str(w) for w in generate_lyndon(XY, 4)]
    assert words == ["x", "y", "xy", "xxy", "xyy", "xxxy", "xxyy", "xyyy"]


@pytest.mark.parametrize("letters,max_len", [("xy", 8), ("xyz", 6)])
def test_generate_lyndon_counts_match_witt(letters, max_len):
    alphabet = GradedAlphabet.uniform(letters)
    words = generate_lyndon(alphabet, max_len)
    for n in range(1, max_len + 1):
        assert sum(1 for w in words if len(w.word) == n) == witt_count(len(letters), n)


def test_generate_lyndon_respects_grades():
    alphabet = GradedAlphabet.parse("R1:1,R3:3")
    words = generate_lyndon(alphabet, 7)
    assert all(w.grade <= 7 for w in words)
    assert "R1 R1 R1 R1 R3" in {str(w) for w in words}
    assert "R1 R3 R3" in {str(w) for w in words}


def test_standard_factorization_examples():
    assert standard_factorization(_w("xxxyy")) == (_w("x"), _w("xxyy"))
    assert standard_factorization(_w("xxyyy")) == (_w("x"), _w("xyyy"))
    assert standard_factorization(_w("xyyy")) == (_w("xyy"), _w("y"))
    assert standard_factorization(_w("xyxyy")) == (_w("xy"), _w("xyy"))


def test_standard_factorization_rejects_non_lyndon():
    with pytest.raises(ValueError):
        standard_factorization(_w("yx"))
    with pytest.raises(ValueError):
        standard_factorization(_w("x"))


def test_bracket_rendering():
    word = LyndonWord(Word(_w("xxyy"), XY))
    assert word.render_bracket() == "[x,[[x,y],y]]"


def test_bracketing_of_a_six_letter_word():
    assert bracketing(_w("xxyxyy")).render(XY.symbols) == "[x,[[x,y],[[x,y],y]]]"
    assert LyndonWord(Word(_w("xxyxyy"), XY)).render_bracket() == "[x,[[x,y],[[x,y],y]]]"


def test_expansion_xxyy():
    assert _expansion_as_text("xxyy") == {"xxyy": 1, "xyxy": -2, "yxyx": 2, "yyxx": -1}


def test_expansion_xxyyy():
    assert _expansion_as_text("xxyyy") == {
        "xxyyy": 1, "xyxyy": -3, "xyyxy": 3, "xyyyx": -2,
        "yxyyx": 3, "yyxyx": -3, "yyyxx": 1,
    }


def test_expansion_xyxyy():
    assert _expansion_as_text("xyxyy") == {
        "xyxyy": 1, "xyyxy": -3, "xyyyx": 2, "yxxyy": -1,
        "yxyxy": 4, "yxyyx": -3, "yyxxy": -1, "yyxyx": 1,
    }


def test_expansion_leading_word_is_the_lyndon_word():
    for lw in generate_lyndon(GradedAlphabet.uniform("xyz"), 5):
        poly = lw.expansion()
        assert poly.coefficient(lw.letters) == 1
        assert all(word >= lw.letters for word in poly.words())
        if len(lw.word) > 1:
            assert poly.is_homogeneous()
            assert all(isinstance(c, int) for _, c in poly.items())


def test_lyndon_word_rejects_non_lyndon():
    with pytest.raises(ValueError):
        LyndonWord(Word(_w("yx"), XY))


def test_lyndon_index_sequences():
    assert lyndon_index_sequences({1: 2, 3: 1}) == [(1, 1, 3)]
    assert lyndon_index_sequences({3: 2}) == []
    assert lyndon_index_sequences({5: 1}) == [(5,)]
    assert lyndon_index_sequences({1: 3, 3: 2}) == [(1, 1, 1, 3, 3), (1, 1, 3, 1, 3)]


def test_basis_matrix_is_unitriangular():
    words, matrix = lyndon_basis_matrix({1: 3, 2: 2})
    assert len(words) == 2
    for i in range(matrix.rows):
        assert matrix[i, i] == 1
        for j in range(i):
            assert matrix[i, j] == 0


def test_lie_coordinates_are_unit_vectors_on_lyndon_words():
    coords = lie_coordinates({1: 3, 3: 2})
    assert coords[(1, 1, 1, 3, 3)] == [Fraction(1), Fraction(0)]
    assert coords[(1, 1, 3, 1, 3)] == [Fraction(0), Fraction(1)]
    assert len(coords) == 10


def test_lie_coordinates_reproduce_a_bracket():
    # λ(1,1,3,1,3) tem β = (0, 1); toda palavra deve reproduzir seu coeficiente
    coords = lie_coordinates({1: 3, 3: 2})
    expansion = expand_bracket(bracketing((1, 1, 3, 1, 3)))
    for word, c in coords.items():
        assert c[1] == expansion.coefficient(word)


def test_alphabet_parse_and_validation():
    alphabet = GradedAlphabet.parse("R1:1, R3:3")
    assert alphabet.symbols == ("R1", "R3")
    assert alphabet.grades == (1, 3)
    with pytest.raises(ValueError):
        GradedAlphabet(("x", "x"), (1, 1))
    with pytest.raises(ValueError):
        GradedAlphabet(("x",), (0,))
