"""Braid words over the letters A-L / a-l.

A capital letter is the positive generator sigma_i, a lowercase letter its
inverse; ``A``/``a`` is generator 1, ``B``/``b`` generator 2, and so on.  A
run of equal letters is stored once with a degree, so ``AAAb`` and ``A^3b``
are the same word.

The width of a word is the number of distinct generators it uses; the
underlying braid lives on ``width + 1`` strands (on ``max_index + 1`` strands
when the generator indices have gaps).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_GENERATOR = 12

_TOKEN = re.compile(r"([A-La-l])(?:\^?(\d+))?")


class BraidParseError(ValueError):
    pass


@dataclass(frozen=True)
class BraidLetter:
    index: int
    positive: bool
    degree: int = 1

    def __post_init__(self):
        if not 1 <= self.index <= MAX_GENERATOR:
            raise ValueError(f"generator index {self.index} outside 1..{MAX_GENERATOR}")
        if self.degree < 1:
            raise ValueError(f"degree must be >= 1, got {self.degree}")

    @property
    def char(self) -> str:
        c = chr(ord("A") + self.index - 1)
        return c if self.positive else c.lower()

    @property
    def sign(self) -> int:
        return 1 if self.positive else -1

    @property
    def base(self) -> tuple[int, bool]:
        return (self.index, self.positive)

    def with_degree(self, degree: int) -> BraidLetter:
        return BraidLetter(self.index, self.positive, degree)

    def inverse(self) -> BraidLetter:
        return BraidLetter(self.index, not self.positive, self.degree)

    def is_conventional(self) -> bool:
        """True if the letter is an alternating crossing: odd generators
        capital, even generators lowercase."""
        return self.positive == (self.index % 2 == 1)

    def sort_key(self) -> tuple[int, int]:
        # lower index first; capital before lowercase
        return (self.index, 0 if self.positive else 1)

    def __str__(self) -> str:
        return self.char if self.degree == 1 else f"{self.char}^{self.degree}"


def _merge(letters: Iterable[BraidLetter]) -> tuple[BraidLetter, ...]:
    out: list[BraidLetter] = []
    for letter in letters:
        if out and out[-1].base == letter.base:
            out[-1] = out[-1].with_degree(out[-1].degree + letter.degree)
        else:
            out.append(letter)
    return tuple(out)


@dataclass(frozen=True)
class BraidWord:
    """An immutable braid word in canonical (run-merged) storage."""

    letters: tuple[BraidLetter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _merge(self.letters))

    @classmethod
    def from_letters(cls, letters: Iterable[BraidLetter]) -> BraidWord:
        return cls(tuple(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[BraidLetter]:
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __add__(self, other: BraidWord) -> BraidWord:
        return BraidWord(self.letters + other.letters)

    def __str__(self) -> str:
        return format_braid(self)

    def __repr__(self) -> str:
        return f"BraidWord({format_braid(self)!r})"

    @property
    def length(self) -> int:
        return len(self.letters)

    @property
    def crossings(self) -> int:
        return sum(x.degree for x in self.letters)

    @property
    def generators(self) -> frozenset[int]:
        return frozenset(x.index for x in self.letters)

    @property
    def width(self) -> int:
        return len(self.generators)

    @property
    def max_index(self) -> int:
        return max((x.index for x in self.letters), default=0)

    @property
    def strands(self) -> int:
        return self.max_index + 1 if self.letters else 1

    @property
    def is_reduced(self) -> bool:
        return all(x.degree == 1 for x in self.letters)

    def expanded(self) -> tuple[BraidLetter, ...]:
        """One degree-1 letter per crossing."""
        return tuple(x.with_degree(1) for x in self.letters for _ in range(x.degree))

    def degrees(self) -> tuple[int, ...]:
        return tuple(x.degree for x in self.letters)

    def with_degrees(self, degrees: Sequence[int]) -> BraidWord:
        if len(degrees) != len(self.letters):
            raise ValueError("degree vector length does not match the word")
        return BraidWord(tuple(x.with_degree(d) for x, d in zip(self.letters, degrees)))


def parse_braid(text: str) -> BraidWord:
    """Parse ``A^3b^2``, ``A3b2`` or ``AAAbb`` style text."""
    text = "".join(text.split())
    if not text:
        raise BraidParseError("empty braid word")
    letters = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise BraidParseError(f"illegal character {text[pos]!r} at position {pos} in {text!r}")
        ch, deg = m.group(1), m.group(2)
        degree = int(deg) if deg is not None else 1
        if degree < 1:
            raise BraidParseError(f"degree 0 in {text!r}")
        index = ord(ch.upper()) - ord("A") + 1
        letters.append(BraidLetter(index, ch.isupper(), degree))
        pos = m.end()
    return BraidWord(tuple(letters))


def as_word(word: BraidWord | str) -> BraidWord:
    return parse_braid(word) if isinstance(word, str) else word


def format_braid(word: BraidWord) -> str:
    return "".join(str(x) for x in word.letters)


def idempotent_reduce(word: BraidWord | str) -> BraidWord:
    """Apply a^2 -> a everywhere; the result has every degree equal to 1."""
    word = as_word(word)
    return BraidWord(tuple(x.with_degree(1) for x in word.letters))


# --- word symmetries -------------------------------------------------------

def cyclic_letters(word: BraidWord) -> tuple[BraidLetter, ...]:
    """Letters of the closed (cyclic) word: a run wrapping around the end is
    merged into one letter."""
    letters = list(word.letters)
    if len(letters) > 1 and letters[0].base == letters[-1].base:
        last = letters.pop()
        letters[0] = letters[0].with_degree(letters[0].degree + last.degree)
    return tuple(letters)


def rotate(word: BraidWord | str, k: int = 1) -> BraidWord:
    word = as_word(word)
    letters = word.letters
    if not letters:
        return word
    k %= len(letters)
    return BraidWord(letters[k:] + letters[:k])


def reverse(word: BraidWord | str) -> BraidWord:
    return BraidWord(as_word(word).letters[::-1])


def flip(word: BraidWord | str, top: int | None = None) -> BraidWord:
    """Relabel generator i as ``top + 1 - i``.

    When the relabeling changes index parity (``top`` even) case is swapped
    too, so alternating words stay alternating.
    """
    word = as_word(word)
    if top is None:
        top = word.max_index
    swap = top % 2 == 0
    return BraidWord(tuple(
        BraidLetter(top + 1 - x.index, x.positive != swap, x.degree) for x in word.letters
    ))


def mirror(word: BraidWord | str) -> BraidWord:
    return BraidWord(tuple(x.inverse() for x in as_word(word).letters))


def _images(letters: tuple[BraidLetter, ...], top: int):
    """Yield (transform, letters) for the dihedral-times-flip images."""
    n = len(letters)
    swap = top % 2 == 0
    flipped = tuple(BraidLetter(top + 1 - x.index, x.positive != swap, x.degree) for x in letters)
    for f, base in ((False, letters), (True, flipped)):
        for r, seq in ((False, base), (True, base[::-1])):
            for k in range(n):
                yield (f, r, k), seq[k:] + seq[:k]


def _key(letters: Sequence[BraidLetter]) -> tuple:
    return tuple(k for x in letters for k in [x.sort_key()] * x.degree)


def canonical_form(word: BraidWord | str) -> BraidWord:
    """Lexicographically least image of the closed word under rotation,
    reversal and the index flip.

    Letters compare by generator index, capital before lowercase; words with
    degrees compare crossing by crossing.
    """
    word = as_word(word)
    letters = cyclic_letters(word)
    if not letters:
        return word
    n = len(letters)
    swap = word.max_index % 2 == 0
    flipped = tuple(
        BraidLetter(word.max_index + 1 - x.index, x.positive != swap, x.degree) for x in letters
    )
    best_key, best = None, None
    for base in (letters, flipped):
        for seq in (base, base[::-1]):
            # integer code per crossing; rotations are slices of the doubled sequence
            codes = [2 * x.index + (not x.positive) for x in seq for _ in range(x.degree)]
            starts, pos = [], 0
            for x in seq:
                starts.append(pos)
                pos += x.degree
            doubled = tuple(codes + codes)
            for k in range(n):
                key = doubled[starts[k]:starts[k] + pos]
                if best_key is None or key < best_key:
                    best_key, best = key, seq[k:] + seq[:k]
    return BraidWord(best)


def automorphisms(word: BraidWord | str) -> list[tuple[int, ...]]:
    """Position permutations induced by the symmetries fixing a closed
    reduced word.

    Each entry ``perm`` maps position ``i`` of the word to ``perm[i]``: the
    letter at ``i`` lands at ``perm[i]`` of the (identical) image.
    """
    word = as_word(word)
    letters = tuple(x.with_degree(1) for x in word.letters)
    n = len(letters)
    if n > 1 and letters[0].base == letters[-1].base:
        raise ValueError("automorphisms need a cyclically reduced word")
    top = word.max_index
    perms = set()
    for (f, r, k), img in _images(letters, top):
        if img != letters:
            continue
        perm = [0] * n
        for i in range(n):
            j = n - 1 - i if r else i
            perm[i] = (j - k) % n
        perms.add(tuple(perm))
    return sorted(perms)


# --- closure data ----------------------------------------------------------

@dataclass(frozen=True)
class Permutation:
    """Permutation of strand positions 1..n stored as an image tuple."""

    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            raise ValueError(f"not a permutation: {self.image}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, len(self.image) + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            out.append(tuple(cyc))
        return out


def closure_permutation(word: BraidWord | str) -> Permutation:
    """Transpositions (i, i+1), one per crossing, multiplied left to right.

    ``image[k-1]`` is the strand that arrives at position ``k``.
    """
    word = as_word(word)
    n = word.strands
    # pos[k] = strand currently at position k
    pos = list(range(1, n + 1))
    for x in word.letters:
        if x.degree % 2:
            i = x.index - 1
            pos[i], pos[i + 1] = pos[i + 1], pos[i]
    return Permutation(tuple(pos))


def component_count(word: BraidWord | str) -> int:
    return len(closure_permutation(word).cycles())


def exponent_sum(word: BraidWord | str) -> int:
    return sum(x.sign * x.degree for x in as_word(word).letters)


def alternation_code(word: BraidWord | str) -> str:
    """One bit per crossing: 0 for an alternating crossing, 1 otherwise."""
    return "".join(("0" if x.is_conventional() else "1") * x.degree for x in as_word(word).letters)


def antisymmetric_image(word: BraidWord | str) -> BraidWord:
    """Reverse, relabel i -> m+1-i (m the top generator) and swap case."""
    word = as_word(word)
    m = word.max_index
    return BraidWord(tuple(
        BraidLetter(m + 1 - x.index, not x.positive, x.degree) for x in reversed(word.letters)
    ))


def is_antisymmetric(word: BraidWord | str) -> bool:
    word = as_word(word)
    return antisymmetric_image(word) == word
