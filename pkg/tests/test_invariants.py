from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from braidfam.diagram import tait_graphs
from braidfam.invariants import alexander, burau_reduced, determinant, identity, matmul
from braidfam.laurent import LaurentPoly, T
from braidfam.words import (
    BraidLetter,
    BraidWord,
    component_count,
    flip,
    mirror,
    rotate,
)

from strategies import braid_words, reduced_words


def spanning_trees(edges) -> int:
    """Matrix-tree theorem with exact rational elimination."""
    verts = sorted({v for a, b, _ in edges for v in (a, b)}, key=repr)
    if len(verts) <= 1:
        return 1
    ix = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    lap = [[Fraction(0)] * n for _ in range(n)]
    for a, b, _ in edges:
        if a == b:
            continue
        i, j = ix[a], ix[b]
        lap[i][i] += 1
        lap[j][j] += 1
        lap[i][j] -= 1
        lap[j][i] -= 1
    m = [row[1:] for row in lap[1:]]
    det = Fraction(1)
    size = n - 1
    for c in range(size):
        pivot = next((r for r in range(c, size) if m[r][c]), None)
        if pivot is None:
            return 0
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, size):
            f = m[r][c] / m[c][c]
            for k in range(c, size):
                m[r][k] -= f * m[c][k]
    return int(abs(det))


@st.composite
def alternating_words(draw):
    """Reduced words following the parity-case convention, degrees drawn freely."""
    base = draw(reduced_words(max_index=4, max_len=9, min_len=2))
    degrees = draw(st.lists(st.integers(1, 3), min_size=len(base), max_size=len(base)))
    return BraidWord(tuple(BraidLetter(x.index, x.index % 2 == 1, d) for x, d in zip(base.letters, degrees)))


class TestBurau:
    def test_empty_word_is_identity(self):
        assert burau_reduced(BraidWord(()), 3) == identity(2)

    def test_single_generator(self):
        assert burau_reduced("A", 2) == ((-T,),)

    def test_inverse_pair(self):
        assert burau_reduced("Aa", 2) == identity(1)
        assert burau_reduced("Bb", 3) == identity(2)

    @settings(max_examples=60)
    @given(braid_words(max_index=3, max_len=5), braid_words(max_index=3, max_len=5))
    def test_homomorphism(self, u, v):
        uv = BraidWord.from_letters(u.letters + v.letters)
        assert burau_reduced(uv, 4) == matmul(burau_reduced(u, 4), burau_reduced(v, 4))

    @pytest.mark.parametrize("index", [1, 2, 3])
    def test_generator_inverses(self, index):
        up = BraidWord((BraidLetter(index, True),))
        down = BraidWord((BraidLetter(index, False),))
        assert matmul(burau_reduced(up, 4), burau_reduced(down, 4)) == identity(3)


class TestAlexander:
    @pytest.mark.parametrize("word, poly", [
        ("A^3", T**2 - T + 1),
        ("AbAb", T**2 - 3 * T + 1),
        ("A", LaurentPoly.const(1)),
    ])
    def test_examples(self, word, poly):
        assert alexander(word) == poly

    @pytest.mark.parametrize("word, det", [("AbAb", 5), ("A^2bAb", 8), ("A^3", 3)])
    def test_determinants(self, word, det):
        assert determinant(word) == det

    @settings(max_examples=60)
    @given(reduced_words(max_index=4, max_len=10), st.integers(0, 9))
    def test_rotation_and_flip(self, word, k):
        a = alexander(word)
        assert alexander(rotate(word, k)) == a
        assert alexander(flip(word)) == a

    @settings(max_examples=60)
    @given(braid_words(max_index=3, max_len=8))
    def test_knots_are_palindromic(self, word):
        if component_count(word) == 1:
            assert alexander(word).is_palindromic()

    @settings(max_examples=60)
    @given(braid_words(max_index=3, max_len=8))
    def test_mirror_preserves_determinant(self, word):
        assert determinant(mirror(word)) == determinant(word)

    @settings(max_examples=80)
    @given(alternating_words())
    def test_determinant_counts_spanning_trees(self, word):
        # for connected alternating diagrams |Delta(-1)| is the Tait graph tree count
        assume(word.generators == frozenset(range(1, word.max_index + 1)))
        assert determinant(word) == spanning_trees(tait_graphs(word)[0])
        assert determinant(word) == spanning_trees(tait_graphs(word)[1])
