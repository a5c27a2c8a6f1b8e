"""Exact Laurent polynomials in one variable t with integer coefficients."""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPoly:
    """Immutable sparse Laurent polynomial ``sum c_k t^k``.

    Zero coefficients are never stored; the empty map is the zero polynomial.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for e, v in items:
            c[e] = c.get(e, 0) + int(v)
        self._c = {e: v for e, v in c.items() if v}
        self._hash = None

    @classmethod
    def _raw(cls, c: dict[int, int]) -> LaurentPoly:
        # trusted internal constructor: integer values, zeros allowed
        out = cls.__new__(cls)
        out._c = {e: v for e, v in c.items() if v}
        out._hash = None
        return out

    # construction
    @classmethod
    def const(cls, v: int) -> LaurentPoly:
        return cls({0: v})

    @classmethod
    def monomial(cls, e: int, v: int = 1) -> LaurentPoly:
        return cls({e: v})

    @classmethod
    def from_list(cls, coeffs: Iterable[int], shift: int = 0) -> LaurentPoly:
        """Coefficients in ascending exponent order starting at ``shift``."""
        return cls({shift + i: v for i, v in enumerate(coeffs)})

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Inverse of :meth:`serialize` (``"0:1 1:-3 2:1"``)."""
        pairs = []
        for tok in text.split():
            e, v = tok.split(":")
            pairs.append((int(e), int(v)))
        return cls(pairs)

    # access
    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    @property
    def min_exp(self) -> int:
        return min(self._c)

    @property
    def max_exp(self) -> int:
        return max(self._c)

    def terms(self) -> list[tuple[int, int]]:
        return sorted(self._c.items())

    def to_list(self) -> list[int]:
        """Dense ascending coefficient list from min_exp to max_exp."""
        if not self._c:
            return []
        lo, hi = self.min_exp, self.max_exp
        return [self._c.get(e, 0) for e in range(lo, hi + 1)]

    # arithmetic
    def __add__(self, other) -> LaurentPoly:
        other = _coerce(other)
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other) -> LaurentPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other) -> LaurentPoly:
        return _coerce(other) - self

    def __mul__(self, other) -> LaurentPoly:
        other = _coerce(other)
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return LaurentPoly._raw(c)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("negative powers only for monomials; use shift()")
        out, base = LaurentPoly.const(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by t^k."""
        return LaurentPoly({e + k: v for e, v in self._c.items()})

    def divmod(self, divisor: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        """Long division by a divisor whose extreme coefficients are +-1.

        Both sides are shifted to ordinary polynomials first, so ``q`` and
        ``r`` satisfy ``self = q * divisor + r`` with ``r`` of smaller span.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return ZERO, ZERO
        a_shift, d_shift = self.min_exp, divisor.min_exp
        num = self.to_list()
        den = divisor.to_list()
        lead = den[-1]
        if abs(lead) != 1:
            raise ValueError("divisor must have leading coefficient +-1")
        quot = [0] * max(len(num) - len(den) + 1, 0)
        for i in range(len(quot) - 1, -1, -1):
            v = num[i + len(den) - 1] * lead
            if v:
                quot[i] = v
                for j, dv in enumerate(den):
                    num[i + j] -= v * dv
        q = LaurentPoly.from_list(quot, a_shift - d_shift)
        r = LaurentPoly.from_list(num, a_shift)
        return q, r

    def exact_div(self, divisor: LaurentPoly) -> LaurentPoly:
        q, r = self.divmod(divisor)
        if r:
            raise ArithmeticError(f"{self} is not divisible by {divisor} (remainder {r})")
        return q

    def __call__(self, x: int):
        """Evaluate; negative exponents need x = +-1 to stay integral."""
        total = 0
        for e, v in self._c.items():
            if e >= 0:
                total += v * x**e
            else:
                if x not in (1, -1):
                    raise ValueError("negative exponents evaluated only at +-1")
                total += v * x ** (-e)
        return total

    def eval_at_minus_one(self) -> int:
        return self(-1)

    def normalized(self) -> LaurentPoly:
        """Lowest exponent 0 and positive leading coefficient."""
        if not self._c:
            return self
        p = self.shift(-self.min_exp)
        return -p if p._c[p.max_exp] < 0 else p

    def is_palindromic(self) -> bool:
        c = self.to_list()
        return c == c[::-1]

    # comparison / display
    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def serialize(self) -> str:
        return " ".join(f"{e}:{v}" for e, v in self.terms())

    def __repr__(self) -> str:
        return f"LaurentPoly({self.serialize()!r})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e, v in sorted(self._c.items(), reverse=True):
            mag = abs(v)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            sign = "-" if v < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
T = LaurentPoly.monomial(1)
T_INV = LaurentPoly.monomial(-1)
