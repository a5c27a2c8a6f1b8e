"""Rational Conway symbols, rational KL counting and the braid/Conway
correspondence check."""

from __future__ import annotations

import ast
import csv
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .family import BraidFamily, FamilyError
from .invariants import determinant
from .words import component_count, exponent_sum, is_antisymmetric


# --- rational symbols ------------------------------------------------------------

@dataclass(frozen=True)
class ConwayRational:
    terms: tuple[int, ...]

    def __post_init__(self):
        if not self.terms:
            raise ValueError("a rational symbol needs at least one term")

    @classmethod
    def parse(cls, text: str) -> ConwayRational:
        return cls(tuple(int(t) for t in text.split()))

    def canonical(self) -> ConwayRational:
        """The lexicographically smaller of the sequence and its reverse."""
        return ConwayRational(min(self.terms, self.terms[::-1]))

    def reversed(self) -> ConwayRational:
        return ConwayRational(self.terms[::-1])

    @property
    def crossings(self) -> int:
        return sum(abs(t) for t in self.terms)

    def is_admissible(self) -> bool:
        return len(self.terms) == 1 or (self.terms[0] != 1 and self.terms[-1] != 1)

    def __str__(self) -> str:
        return " ".join(str(t) for t in self.terms)


def fraction_of(symbol: ConwayRational | Sequence[int] | str) -> Fraction:
    """``a_k + 1/(a_{k-1} + ... + 1/a_1)`` for the terms ``a_1 ... a_k``."""
    p, q = fraction_pair(symbol)
    return Fraction(p, q)


def fraction_pair(symbol: ConwayRational | Sequence[int] | str) -> tuple[int, int]:
    """Numerator and denominator of the continued fraction, kept as integers
    so that a vanishing denominator is representable."""
    if isinstance(symbol, str):
        symbol = ConwayRational.parse(symbol)
    terms = symbol.terms if isinstance(symbol, ConwayRational) else tuple(symbol)
    p, q = terms[0], 1
    for a in terms[1:]:
        p, q = a * p + q, p
    g = math.gcd(p, q) or 1
    p, q = p // g, q // g
    if p < 0 or (p == 0 and q < 0):
        p, q = -p, -q
    return p, q


def rational_components(symbol: ConwayRational | Sequence[int] | str) -> int:
    p, _ = fraction_pair(symbol)
    return 2 if p % 2 == 0 else 1


# --- counting -----------------------------------------------------------------

def count_rational_kl(n: int) -> int:
    if n < 4:
        raise ValueError("the closed formula holds for n >= 4")
    return 2 ** (n - 4) + 2 ** (n // 2 - 2)


@dataclass(frozen=True)
class RationalCount:
    total: int
    knots: int
    links: int


def count_rational_brute(n: int) -> RationalCount:
    """Exhaustive count of sequences summing to ``n`` that neither begin nor
    end with 1 (a lone term is always allowed), up to reversal."""
    if not 1 <= n <= 24:
        raise ValueError("brute-force counting supports 1 <= n <= 24")
    total = knots = 0
    seq: list[int] = []

    def walk(left: int, p: int, q: int) -> None:
        # p/q is the continued fraction of seq so far
        nonlocal total, knots
        if left == 0:
            if len(seq) > 1 and seq[-1] == 1:
                return
            if seq > seq[::-1]:
                return
            total += 1
            knots += p % 2
            return
        for a in range(1 if seq else 2, left + 1):
            seq.append(a)
            walk(left - a, a * p + q, p)
            seq.pop()

    walk(n, 1, 0)
    if n == 1:
        total, knots = 1, 1
    return RationalCount(total, knots, total - knots)


def count_rational_knots(n: int) -> int:
    if n < 3:
        raise ValueError("rational knots are counted for n >= 3")
    return count_rational_brute(n).knots


def printed_knot_formula(n: int) -> Fraction:
    """The three-term expression for rational knots read literally:
    ``(2^(n-3) + 2^([n/2] - 2^((n-1) mod 2)) + (-1)^(((n-1)[n/2]) mod 2)) / 3``."""
    half = n // 2
    e = half - 2 ** ((n - 1) % 2)
    middle = Fraction(2) ** e
    sign = (-1) ** (((n - 1) * half) % 2)
    return (Fraction(2) ** (n - 3) + middle + sign) / 3


# printed sequence of rational KL counts for n = 1, 2, 3, ...
PRINTED_SEQUENCE = (
    1, 1, 1, 2, 3, 6, 10, 20, 36, 72, 136, 272, 528, 1056, 1080, 4160, 8256,
    16512, 32986, 65792, 131328, 262656, 524800,
)


def printed_count(n: int) -> int | None:
    return PRINTED_SEQUENCE[n - 1] if 1 <= n <= len(PRINTED_SEQUENCE) else None


# --- Conway pattern substitution -----------------------------------------------

_ALLOWED_NODES = (
    ast.Expression, ast.BinOp, ast.UnaryOp, ast.Add, ast.Sub, ast.Mult,
    ast.USub, ast.UAdd, ast.Constant, ast.Name, ast.Load,
)


def eval_term(text: str, values: Mapping[str, int]) -> int:
    """Integer arithmetic over parameter names, e.g. ``(p-1)`` or ``-(r+1)``."""
    tree = ast.parse(text.strip(), mode="eval")
    for node in ast.walk(tree):
        if not isinstance(node, _ALLOWED_NODES):
            raise ValueError(f"unsupported syntax in term {text!r}")
        if isinstance(node, ast.Constant) and not isinstance(node.value, int):
            raise ValueError(f"non-integer constant in {text!r}")
        if isinstance(node, ast.Name) and node.id not in values:
            raise KeyError(f"no value for {node.id!r} in {text!r}")

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant):
            return node.value
        if isinstance(node, ast.Name):
            return values[node.id]
        if isinstance(node, ast.UnaryOp):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        a, b = ev(node.left), ev(node.right)
        if isinstance(node.op, ast.Add):
            return a + b
        if isinstance(node.op, ast.Sub):
            return a - b
        return a * b

    return ev(tree)


def _split_top(text: str, sep: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def _split_terms(text: str) -> list[str]:
    """Whitespace-separated terms, keeping parenthesised groups together."""
    out, depth, cur = [], 0, []
    for ch in text.strip():
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch.isspace() and depth == 0:
            if cur:
                out.append("".join(cur))
                cur = []
        else:
            cur.append(ch)
    if cur:
        out.append("".join(cur))
    return out


def normalize_conway(text: str) -> str:
    return " ".join(text.replace("\\,", " ").split())


def substitute(pattern: str, values: Mapping[str, int]) -> str:
    """Replace parameter names by decimal values; whitespace normalised."""
    text = normalize_conway(pattern)
    return re.sub(r"\b([m-z])\b", lambda m: str(values[m.group(1)]) if m.group(1) in values else m.group(1), text)


def rational_terms(pattern: str, values: Mapping[str, int]) -> tuple[int, ...] | None:
    """Evaluate a pattern that is a single rational symbol; None otherwise."""
    text = normalize_conway(pattern)
    if any(c in text for c in ",.:*"):
        return None
    try:
        return tuple(eval_term(t, values) for t in _split_terms(text))
    except (SyntaxError, ValueError, KeyError):
        return None


def montesinos_tangles(pattern: str, values: Mapping[str, int]) -> list[tuple[int, ...]] | None:
    """Comma-separated rational tangles (at least two), or None."""
    text = normalize_conway(pattern)
    if any(c in text for c in ".:*"):
        return None
    parts = _split_top(text, ",")
    if len(parts) < 2:
        return None
    out = []
    for part in parts:
        part = part.strip()
        # a leading minus mirrors the whole tangle: -r 1 is -(r 1)
        sign = -1 if part.startswith("-") else 1
        body = part[1:] if sign < 0 else part
        try:
            terms = tuple(sign * eval_term(t, values) for t in _split_terms(body))
        except (SyntaxError, ValueError, KeyError):
            return None
        if not terms:
            return None
        out.append(terms)
    return out


def montesinos_determinant(tangles: Sequence[Sequence[int]]) -> int:
    """``|sum_i beta_i prod_{j != i} alpha_j|`` for tangle fractions alpha/beta;
    for integer tangles p, q, r this is ``|pq + qr + rp|``."""
    fr = [fraction_pair(t) for t in tangles]
    total = 0
    for i, (_, beta) in enumerate(fr):
        prod = beta
        for j, (alpha, _) in enumerate(fr):
            if j != i:
                prod *= alpha
        total += prod
    return abs(total)


def pretzel_determinant(p: int, q: int, r: int) -> int:
    return abs(p * q + q * r + r * p)


# --- fixtures ---------------------------------------------------------------------

CLASSES = ("algebraic-rational", "algebraic-other", "polyhedral")


@dataclass(frozen=True)
class CorrespondenceEntry:
    table_id: str
    braid_pattern: str
    conway_pattern: str
    kind: str
    constraints: str = ""
    start_values: str = ""
    line: int = field(default=0, compare=False)

    def family(self) -> BraidFamily:
        return BraidFamily.parse(self.braid_pattern, self.constraints or None, self.start_values or None)

    def to_row(self) -> list[str]:
        return [self.table_id, self.braid_pattern, self.conway_pattern, self.kind,
                self.constraints or "-", self.start_values or "-"]


class FixtureError(ValueError):
    pass


def load_fixtures(path: str | Path) -> list[CorrespondenceEntry]:
    """Read one TSV file, or every ``*.tsv`` file of a directory in name order."""
    path = Path(path)
    files = sorted(path.glob("*.tsv")) if path.is_dir() else [path]
    out: list[CorrespondenceEntry] = []
    for f in files:
        with f.open(encoding="utf-8", newline="") as fh:
            for lineno, row in enumerate(csv.reader(fh, delimiter="\t"), start=1):
                if not row or not "".join(row).strip() or row[0].lstrip().startswith("#"):
                    continue
                if len(row) != 6:
                    raise FixtureError(f"{f.name}:{lineno}: expected 6 fields, got {len(row)}")
                table, braid, conway, kind, cons, starts = (c.strip() for c in row)
                if kind not in CLASSES:
                    raise FixtureError(f"{f.name}:{lineno}: unknown class {kind!r}")
                entry = CorrespondenceEntry(
                    table, braid, conway, kind,
                    "" if cons == "-" else cons, "" if starts == "-" else starts, lineno,
                )
                try:
                    entry.family()
                except ValueError as exc:
                    raise FixtureError(f"{f.name}:{lineno}: {exc}") from exc
                out.append(entry)
    return out


# --- correspondence check -----------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    status: str  # pass | fail | info
    braid: str
    values: tuple[tuple[str, int], ...]
    braid_determinant: int
    braid_components: int
    conway: str
    expected_determinant: int | None = None
    expected_components: int | None = None
    note: str = ""


def correspondence_check(entry: CorrespondenceEntry, values: Mapping[str, int]) -> CheckResult:
    family = entry.family()
    word = family.instantiate(values)
    det = determinant(word)
    comps = component_count(word)
    conway = substitute(entry.conway_pattern, values)
    vals = tuple(sorted(values.items()))
    text = str(word)
    if entry.kind == "algebraic-rational":
        terms = rational_terms(entry.conway_pattern, values)
        if terms is None:
            raise FixtureError(f"{entry.conway_pattern!r} is not a rational pattern")
        p, _ = fraction_pair(terms)
        ok = p == det and rational_components(terms) == comps
        return CheckResult("pass" if ok else "fail", text, vals, det, comps, conway, p, rational_components(terms))
    tangles = montesinos_tangles(entry.conway_pattern, values)
    if entry.kind == "algebraic-other" and tangles is not None:
        expected = montesinos_determinant(tangles)
        return CheckResult("pass" if expected == det else "fail", text, vals, det, comps, conway, expected,
                           note="montesinos determinant")
    return CheckResult("info", text, vals, det, comps, conway, note="braid side only")


def antisymmetry_check(entry: CorrespondenceEntry, values: Mapping[str, int]) -> CheckResult:
    word = entry.family().instantiate(values)
    anti = is_antisymmetric(word)
    esum = exponent_sum(word)
    ok = anti and esum == 0
    return CheckResult(
        "pass" if ok else "fail", str(word), tuple(sorted(values.items())), determinant(word),
        component_count(word), substitute(entry.conway_pattern, values),
        note=f"antisymmetric={anti} exponent_sum={esum}",
    )


def sweep_values(entry: CorrespondenceEntry, max_value: int) -> Iterable[dict[str, int]]:
    try:
        return list(entry.family().sweep(max_value))
    except FamilyError as exc:
        raise FixtureError(f"{entry.table_id}: {exc}") from exc
