"""Reduced Burau representation, Alexander polynomial and determinant of
braid closures."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .laurent import ONE, ZERO, LaurentPoly, T, T_INV
from .words import BraidWord, as_word

LaurentMatrix = tuple[tuple[LaurentPoly, ...], ...]

_MINUS_T = -T
_MINUS_T_INV = -T_INV


def identity(dim: int) -> LaurentMatrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(dim)) for i in range(dim))


def generator_matrix(index: int, positive: bool, strands: int) -> LaurentMatrix:
    """Reduced Burau image of sigma_index (or its inverse) on ``strands`` strands.

    sigma_i differs from the identity only in column i-1: ``t`` above the
    diagonal, ``-t`` on it and ``1`` below (clipped at the edges).  The
    inverse has ``1``, ``-1/t`` and ``1/t`` in the same places.
    """
    dim = strands - 1
    if not 1 <= index <= dim:
        raise ValueError(f"generator {index} needs at least {index + 1} strands")
    m = [list(row) for row in identity(dim)]
    k = index - 1
    above, diag, below = (T, _MINUS_T, ONE) if positive else (ONE, _MINUS_T_INV, T_INV)
    if k > 0:
        m[k - 1][k] = above
    m[k][k] = diag
    if k + 1 < dim:
        m[k + 1][k] = below
    return tuple(tuple(row) for row in m)


def matmul(a: LaurentMatrix, b: LaurentMatrix) -> LaurentMatrix:
    n = len(a)
    return tuple(
        tuple(sum((a[i][j] * b[j][k] for j in range(n)), ZERO) for k in range(n))
        for i in range(n)
    )


def _apply_generator(cols: list[list[LaurentPoly]], index: int, positive: bool) -> None:
    # right-multiply in place; only column index-1 changes
    dim = len(cols)
    k = index - 1
    above, diag, below = (T, _MINUS_T, ONE) if positive else (ONE, _MINUS_T_INV, T_INV)
    new = [c * diag for c in cols[k]]
    if k > 0:
        new = [x + c * above for x, c in zip(new, cols[k - 1])]
    if k + 1 < dim:
        new = [x + c * below for x, c in zip(new, cols[k + 1])]
    cols[k] = new


def burau_reduced(word: BraidWord | str, strands: int | None = None) -> LaurentMatrix:
    """Product of the generator matrices in word order."""
    word = as_word(word)
    n = strands if strands is not None else max(word.strands, 2)
    dim = n - 1
    # column-major working copy
    cols = [[ONE if i == j else ZERO for i in range(dim)] for j in range(dim)]
    for x in word.letters:
        if x.index > dim:
            raise ValueError(f"word needs {x.index + 1} strands, got {n}")
        for _ in range(x.degree):
            _apply_generator(cols, x.index, x.positive)
    return tuple(tuple(cols[j][i] for j in range(dim)) for i in range(dim))


def determinant_of(matrix: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Laplace expansion along rows, memoised on the remaining column set."""
    n = len(matrix)
    if n == 0:
        return ONE

    @lru_cache(maxsize=None)
    def minor(row: int, cols: frozenset) -> LaurentPoly:
        if row == n:
            return ONE
        total = ZERO
        for pos, c in enumerate(sorted(cols)):
            entry = matrix[row][c]
            if entry.is_zero():
                continue
            term = entry * minor(row + 1, cols - {c})
            total = total - term if pos % 2 else total + term
        return total

    return minor(0, frozenset(range(n)))


def strand_polynomial(strands: int) -> LaurentPoly:
    """1 + t + ... + t^(strands-1)."""
    return LaurentPoly.from_list([1] * strands)


def alexander(word: BraidWord | str) -> LaurentPoly:
    """Alexander polynomial of the closure, normalised to lowest exponent 0
    and positive leading coefficient (zero for split closures)."""
    return _alexander(as_word(word))


@lru_cache(maxsize=65536)
def _alexander(word: BraidWord) -> LaurentPoly:
    n = max(word.strands, 2)
    b = burau_reduced(word, n)
    dim = n - 1
    shifted = tuple(
        tuple(b[i][j] - (ONE if i == j else ZERO) for j in range(dim)) for i in range(dim)
    )
    d = determinant_of(shifted)
    return d.exact_div(strand_polynomial(n)).normalized()


def determinant(word: BraidWord | str) -> int:
    """|Delta(-1)| of the closure."""
    return abs(alexander(word).eval_at_minus_one())
