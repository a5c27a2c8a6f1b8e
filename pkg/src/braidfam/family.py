"""Parameterised braid families such as ``A^pbAb^q``.

A family is a reduced generating word plus one slot per letter.  A slot is
either a fixed degree or a parameter name; the same name may occupy several
slots (``A^pbAb^p``).  Order relations between parameters are kept as
:class:`Constraint` objects built from a small text grammar::

    p>=q>=2          chained comparisons
    (p,q)>=(r,s)     lexicographic comparison of tuples
    p=s -> r>=q      implication
    p>=q; r>=2       several constraints separated by ';'
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Mapping, Sequence, Union

from .words import BraidLetter, BraidParseError, BraidWord, as_word

PARAMETER_NAMES = "pqrstuvwxyz"

Slot = Union[int, str]


class FamilyError(ValueError):
    pass


class MissingParameterError(FamilyError):
    pass


class BelowStartError(FamilyError):
    pass


class ConstraintViolation(FamilyError):
    pass


# --- constraint grammar ------------------------------------------------------

_OPS = {
    ">=": lambda a, b: a >= b,
    "<=": lambda a, b: a <= b,
    "!=": lambda a, b: a != b,
    ">": lambda a, b: a > b,
    "<": lambda a, b: a < b,
    "=": lambda a, b: a == b,
}
_OP_RE = re.compile(r"(>=|<=|!=|==|>|<|=)")
_NAME_RE = re.compile(r"^[m-z]$")


def _operand(text: str):
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        return tuple(_operand(part) for part in text[1:-1].split(","))
    if text.lstrip("-").isdigit():
        return int(text)
    if _NAME_RE.match(text):
        return text
    raise FamilyError(f"bad constraint operand {text!r}")


def _value(operand, values: Mapping[str, int]):
    if isinstance(operand, tuple):
        return tuple(_value(o, values) for o in operand)
    if isinstance(operand, str):
        return values[operand]
    return operand


def _names(operand) -> set[str]:
    if isinstance(operand, tuple):
        return set().union(*(_names(o) for o in operand))
    return {operand} if isinstance(operand, str) else set()


@dataclass(frozen=True)
class _Chain:
    operands: tuple
    ops: tuple[str, ...]

    @classmethod
    def parse(cls, text: str) -> _Chain:
        parts = _OP_RE.split(text.replace(" ", ""))
        if len(parts) < 3 or len(parts) % 2 == 0:
            raise FamilyError(f"bad comparison {text!r}")
        operands = tuple(_operand(p) for p in parts[0::2])
        ops = tuple("=" if op == "==" else op for op in parts[1::2])
        return cls(operands, ops)

    def holds(self, values: Mapping[str, int]) -> bool:
        vals = [_value(o, values) for o in self.operands]
        return all(_OPS[op](a, b) for op, a, b in zip(self.ops, vals, vals[1:]))

    def names(self) -> set[str]:
        return set().union(*(_names(o) for o in self.operands))


@dataclass(frozen=True)
class Constraint:
    """A comparison chain, optionally guarded by an implication premise."""

    text: str
    premise: _Chain | None
    conclusion: _Chain

    @classmethod
    def parse(cls, text: str) -> Constraint:
        text = text.strip()
        if "->" in text:
            left, right = text.split("->", 1)
            return cls(text, _Chain.parse(left), _Chain.parse(right))
        return cls(text, None, _Chain.parse(text))

    def holds(self, values: Mapping[str, int]) -> bool:
        if self.premise is not None and not self.premise.holds(values):
            return True
        return self.conclusion.holds(values)

    def names(self) -> set[str]:
        out = self.conclusion.names()
        if self.premise is not None:
            out |= self.premise.names()
        return out

    def __str__(self) -> str:
        return self.text


def parse_constraints(text: str | None) -> tuple[Constraint, ...]:
    if not text or text.strip() in ("", "-"):
        return ()
    return tuple(Constraint.parse(part) for part in text.split(";") if part.strip())


def parse_start_values(text: str | None) -> dict[str, int]:
    """``"p=1,q=2"`` (commas or semicolons) to a dict."""
    out: dict[str, int] = {}
    if not text or text.strip() in ("", "-"):
        return out
    for part in re.split(r"[;,]", text):
        if part.strip():
            name, value = part.split("=")
            out[name.strip()] = int(value)
    return out


# --- the family type -----------------------------------------------------------

_PATTERN_TOKEN = re.compile(r"([A-La-l])(?:\^(?:(\d+)|([m-z])|\{([m-z]|\d+)\}))?")


@dataclass(frozen=True)
class BraidFamily:
    generator: BraidWord
    slots: tuple[Slot, ...]
    starts: tuple[tuple[str, int], ...] = ()
    constraints: tuple[Constraint, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not self.generator.is_reduced:
            raise FamilyError("family generator must be a reduced word")
        if len(self.slots) != len(self.generator):
            raise FamilyError("one slot per generator letter is required")
        for s in self.slots:
            if isinstance(s, int) and s < 1:
                raise FamilyError("fixed degrees must be >= 1")
        known = set(self.parameters)
        starts = dict(self.starts)
        for name in starts:
            if name not in known:
                raise FamilyError(f"start value for unknown parameter {name!r}")
        full = tuple((n, starts.get(n, 2)) for n in self.parameters)
        object.__setattr__(self, "starts", full)
        for c in self.constraints:
            unknown = c.names() - known
            if unknown:
                raise FamilyError(f"constraint {c} mentions unknown parameters {sorted(unknown)}")

    @classmethod
    def parse(
        cls,
        pattern: str,
        constraints: str | Sequence[Constraint] | None = None,
        starts: Mapping[str, int] | str | None = None,
    ) -> BraidFamily:
        text = "".join(pattern.split())
        if not text:
            raise BraidParseError("empty family pattern")
        letters, slots = [], []
        pos = 0
        while pos < len(text):
            m = _PATTERN_TOKEN.match(text, pos)
            if m is None:
                raise BraidParseError(f"illegal character {text[pos]!r} in pattern {text!r}")
            ch, digits, name, braced = m.groups()
            if braced is not None:
                digits, name = (braced, None) if braced.isdigit() else (None, braced)
            slot: Slot = int(digits) if digits is not None else (name or 1)
            if slot == 0:
                raise BraidParseError(f"degree 0 in {text!r}")
            letter = BraidLetter(ord(ch.upper()) - ord("A") + 1, ch.isupper())
            if letters and letters[-1].base == letter.base:
                raise BraidParseError(f"adjacent equal letters in pattern {text!r}")
            letters.append(letter)
            slots.append(slot)
            pos = m.end()
        if isinstance(constraints, str) or constraints is None:
            constraints = parse_constraints(constraints)
        if isinstance(starts, str) or starts is None:
            starts = parse_start_values(starts)
        return cls(BraidWord(tuple(letters)), tuple(slots), tuple(starts.items()), tuple(constraints))

    @classmethod
    def from_mask(cls, generator: BraidWord | str, mask: Sequence[int]) -> BraidFamily:
        """Parameters at the given positions, named p, q, r, ... in reading order."""
        generator = as_word(generator)
        chosen = set(mask)
        slots: list[Slot] = []
        k = 0
        for i in range(len(generator)):
            if i in chosen:
                slots.append(PARAMETER_NAMES[k])
                k += 1
            else:
                slots.append(1)
        return cls(generator, tuple(slots))

    # descriptive
    @property
    def parameters(self) -> tuple[str, ...]:
        seen: list[str] = []
        for s in self.slots:
            if isinstance(s, str) and s not in seen:
                seen.append(s)
        return tuple(seen)

    @property
    def start_values(self) -> dict[str, int]:
        return dict(self.starts)

    @property
    def mask(self) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.slots) if isinstance(s, str))

    def pattern(self) -> str:
        out = []
        for letter, slot in zip(self.generator.letters, self.slots):
            out.append(letter.char if slot == 1 else f"{letter.char}^{slot}")
        return "".join(out)

    def normalized_pattern(self) -> str:
        """Pattern text with parameters renamed p, q, r, ... in reading order."""
        rename = {n: PARAMETER_NAMES[i] for i, n in enumerate(self.parameters)}
        return "".join(
            letter.char if slot == 1 else f"{letter.char}^{rename.get(slot, slot)}"
            for letter, slot in zip(self.generator.letters, self.slots)
        )

    def __str__(self) -> str:
        return self.pattern()

    def with_start(self, name: str, value: int) -> BraidFamily:
        starts = dict(self.starts)
        starts[name] = value
        return BraidFamily(self.generator, self.slots, tuple(starts.items()), self.constraints)

    def with_constraints(self, constraints: Sequence[Constraint]) -> BraidFamily:
        return BraidFamily(self.generator, self.slots, self.starts, tuple(constraints))

    # instantiation
    def _word(self, values: Mapping[str, int]) -> BraidWord:
        letters = []
        for letter, slot in zip(self.generator.letters, self.slots):
            d = values[slot] if isinstance(slot, str) else slot
            letters.append(letter.with_degree(d))
        return BraidWord(tuple(letters))

    def instantiate(self, values: Mapping[str, int]) -> BraidWord:
        missing = [n for n in self.parameters if n not in values]
        if missing:
            raise MissingParameterError(f"no value for parameter(s) {', '.join(missing)}")
        for name, start in self.starts:
            if values[name] < start:
                raise BelowStartError(f"{name}={values[name]} is below its start value {start}")
        for c in self.constraints:
            if not c.holds(values):
                raise ConstraintViolation(f"constraint {c} violated by {dict(values)}")
        return self._word(values)

    def admits(self, values: Mapping[str, int]) -> bool:
        try:
            self.instantiate(values)
        except FamilyError:
            return False
        return True

    def source_braid(self) -> BraidWord:
        """All parameters set to 2; constraints and start values are not checked."""
        return self._word({n: 2 for n in self.parameters})

    def boundary_values(self) -> dict[str, int]:
        return dict(self.starts)

    def sweep(self, max_value: int):
        """Yield every admissible assignment with each parameter at most ``max_value``."""
        names = self.parameters
        ranges = [range(start, max_value + 1) for _, start in self.starts]
        for combo in itertools.product(*ranges):
            values = dict(zip(names, combo))
            if all(c.holds(values) for c in self.constraints):
                yield values


def instantiate(family: BraidFamily, values: Mapping[str, int]) -> BraidWord:
    return family.instantiate(values)


def source_braid(family: BraidFamily) -> BraidWord:
    return family.source_braid()
