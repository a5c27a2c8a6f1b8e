"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from braidfam.words import BraidLetter, BraidWord


@st.composite
def braid_words(draw, max_index=4, max_len=10, max_degree=3, min_len=1):
    n = draw(st.integers(min_len, max_len))
    letters = []
    for _ in range(n):
        idx = draw(st.integers(1, max_index))
        pos = draw(st.booleans())
        deg = draw(st.integers(1, max_degree))
        letters.append(BraidLetter(idx, pos, deg))
    return BraidWord.from_letters(letters)


@st.composite
def reduced_words(draw, max_index=4, max_len=12, min_len=2):
    """Reduced words using generator 1 whose first and last letters differ."""
    first = draw(st.integers(1, max_index))
    steps = draw(st.lists(st.integers(1, max_index - 1), min_size=min_len - 1, max_size=max_len - 1))
    indices = [first]
    for step in steps:
        indices.append((indices[-1] - 1 + step) % max_index + 1)
    if len(indices) > 2 and indices[-1] == indices[0]:
        indices.pop()
    low = min(indices) - 1
    indices = [i - low for i in indices]
    signs = draw(st.lists(st.booleans(), min_size=len(indices), max_size=len(indices)))
    return BraidWord(tuple(BraidLetter(i, p) for i, p in zip(indices, signs)))
