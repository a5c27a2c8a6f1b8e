"""Generating words, their extensions and the parameter families they carry."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .diagram import is_prime_diagram, rank_polynomial, twist_pairs, twist_profile
from .family import BraidFamily, Constraint
from .invariants import alexander
from .words import (
    BraidLetter,
    BraidWord,
    _images,
    _key,
    alternation_code,
    as_word,
    automorphisms,
    canonical_form,
    component_count,
    cyclic_letters,
    format_braid,
    idempotent_reduce,
    mirror,
)


class ExtensionError(ValueError):
    pass


def conventional(index: int) -> BraidLetter:
    """The alternating letter for a generator: odd capital, even lowercase."""
    return BraidLetter(index, index % 2 == 1)


def conventional_word(indices: Iterable[int]) -> BraidWord:
    return BraidWord(tuple(conventional(i) for i in indices))


# --- extending operations ----------------------------------------------------

def _check_join(left: Sequence[BraidLetter], right: Sequence[BraidLetter]) -> None:
    if left and right and left[-1].base == right[0].base:
        raise ExtensionError(
            f"joining {format_braid(BraidWord(tuple(left)))} and "
            f"{format_braid(BraidWord(tuple(right)))} merges equal letters"
        )


def extend_by_replacement(W: BraidWord | str, w1: BraidWord | str) -> BraidWord:
    """Replace the last letter of ``W`` by ``w1``."""
    W, w1 = as_word(W), as_word(w1)
    if not W.letters:
        raise ExtensionError("cannot extend an empty word")
    head = W.letters[:-1]
    _check_join(head, w1.letters)
    return BraidWord(head + w1.letters)


def extend_by_addition(W: BraidWord | str, w1: BraidWord | str) -> BraidWord:
    W, w1 = as_word(W), as_word(w1)
    if not W.letters:
        raise ExtensionError("cannot extend an empty word")
    _check_join(W.letters, w1.letters)
    return W + w1


def extension_word(s: int) -> BraidWord:
    """``L_{s+1} L_s L_{s+1}`` cased by the alternation convention."""
    return conventional_word((s + 1, s, s + 1))


def _cyclically_reduced(word: BraidWord) -> bool:
    return len(word) < 2 or word.letters[0].base != word.letters[-1].base


def s_plus_one_extensions(W: BraidWord | str, w1: BraidWord | str | None = None) -> set[BraidWord]:
    """Replacement and addition by ``w1`` (conventional casing by default).

    Results that are not cyclically reduced, or whose join merges letters,
    are degenerate and left out.
    """
    W = as_word(W)
    s = W.width
    if W.generators != frozenset(range(1, s + 1)):
        raise ExtensionError(f"{W} does not use generators 1..{s} contiguously")
    if W.letters[-1].index != s:
        raise ExtensionError(f"{W} does not end in generator {s}")
    w1 = extension_word(s) if w1 is None else as_word(w1)
    out = set()
    for op in (extend_by_replacement, extend_by_addition):
        try:
            word = op(W, w1)
        except ExtensionError:
            continue
        if _cyclically_reduced(word):
            out.add(word)
    return out


@lru_cache(maxsize=None)
def _algebraic_raw(s: int) -> tuple[BraidWord, ...]:
    if s == 2:
        return (conventional_word((1, 2, 1, 2)),)
    out: list[BraidWord] = []
    for W in _algebraic_raw(s - 1):
        for word in sorted(s_plus_one_extensions(W), key=lambda w: _key(w.letters)):
            out.append(word)
    return tuple(out)


def _sorted_words(words: Iterable[BraidWord]) -> list[BraidWord]:
    return sorted(words, key=lambda w: (w.crossings, _key(w.letters)))


def generate_algebraic_generators(s: int) -> list[BraidWord]:
    """Canonical words reachable from AbAb by repeated (s+1)-extensions.

    Every intermediate word is extended as produced, before canonicalisation,
    since the operations act on the written end of the word.
    """
    if s < 2:
        raise ValueError("algebraic generators start at width 2")
    return _sorted_words({canonical_form(w) for w in _algebraic_raw(s)})


# --- minimality ---------------------------------------------------------------

@dataclass(frozen=True, order=True)
class MinimalityKey:
    crossings: int
    width: int
    code: str
    tiebreak: tuple = field(repr=False)
    text: str = field(compare=False, default="")


def minimality_key(word: BraidWord | str) -> MinimalityKey:
    word = as_word(word)
    canon = canonical_form(word)
    return MinimalityKey(
        word.crossings, word.width, alternation_code(word), _key(canon.letters), format_braid(canon)
    )


# --- alternating reduced words -------------------------------------------------

def _commutation_reduced(seq: Sequence[int]) -> bool:
    """Between cyclically consecutive occurrences of a generator there must be
    a neighbouring generator; otherwise far commutations bring them together."""
    n = len(seq)
    for g in set(seq):
        occ = [k for k in range(n) if seq[k] == g]
        for a, b in zip(occ, occ[1:] + [occ[0] + n]):
            if not any(abs(seq[t % n] - g) == 1 for t in range(a + 1, b)):
                return False
    return True


def _commutation_class(seq: Sequence[int]) -> set[tuple[int, ...]]:
    """Cyclic words reachable by rotations and swaps of far generators."""
    start = tuple(seq)
    seen = {start}
    todo = [start]
    while todo:
        w = todo.pop()
        nbrs = [w[1:] + w[:1]]
        for k in range(len(w) - 1):
            if abs(w[k] - w[k + 1]) > 1:
                nbrs.append(w[:k] + (w[k + 1], w[k]) + w[k + 2:])
        for x in nbrs:
            if x not in seen:
                seen.add(x)
                todo.append(x)
    return seen


def _canonical_indices(seq: tuple[int, ...]) -> tuple[int, ...]:
    """canonical_form on index sequences of conventional words.

    The case of a conventional letter follows from its index and the letter
    order agrees with index order, so integer tuples suffice.
    """
    n, top = len(seq), max(seq)
    best = seq
    for base in (seq, tuple(top + 1 - i for i in seq)):
        for s in (base, base[::-1]):
            doubled = s + s
            for k in range(n):
                cand = doubled[k:k + n]
                if cand < best:
                    best = cand
    return best


def _class_minimum(seq: Sequence[int]) -> tuple[int, ...]:
    return min(_canonical_indices(w) for w in _commutation_class(seq))


def commutation_canonical(word: BraidWord | str) -> BraidWord:
    """Least canonical form among words equal up to far commutations.

    Only defined for alternating reduced words; others are returned in plain
    canonical form.
    """
    word = as_word(word)
    letters = cyclic_letters(word)
    if not letters or not all(x.is_conventional() and x.degree == 1 for x in letters):
        return canonical_form(word)
    return conventional_word(_class_minimum(tuple(x.index for x in letters)))


def _connected(seq: Sequence[int]) -> bool:
    """No rotation splits into two blocks over disjoint generator sets."""
    n = len(seq)
    total = Counter(seq)
    for k in range(n):
        rest = total.copy()
        head: set[int] = set()
        for cut in range(1, n):
            g = seq[(k + cut - 1) % n]
            head.add(g)
            rest[g] -= 1
            if all(rest[h] == 0 for h in head):
                return False
    return True


def _candidates(s: int, l: int) -> list[tuple[int, ...]]:
    """Index sequences passing the syntactic filters, one per canonical class."""
    out = []

    def rec(seq: list[int]):
        if len(seq) == l:
            if seq[-1] == seq[0]:
                return
            counts = Counter(seq)
            if len(counts) != s or min(counts.values()) < 2:
                return
            t = tuple(seq)
            if _canonical_indices(t) != t:
                return
            if not _commutation_reduced(t) or not _connected(t):
                return
            if _class_minimum(t) != t:
                return
            out.append(t)
            return
        for i in range(1, s + 1):
            if seq[-1] != i:
                seq.append(i)
                rec(seq)
                seq.pop()

    if l >= 1 and s >= 1:
        rec([1])
    return out


def _fingerprint_cheap(word: BraidWord):
    return (word.crossings, component_count(word), alexander(word))


def _same_link_evidence(a: BraidWord, b: BraidWord) -> bool:
    return (
        _fingerprint_cheap(a) == _fingerprint_cheap(b)
        and twist_profile(a) == twist_profile(b)
        and _rank_polynomial(a) == _rank_polynomial(b)
    )


@lru_cache(maxsize=None)
def _rank_polynomial(word: BraidWord):
    return rank_polynomial(word)


@lru_cache(maxsize=None)
def _instantiations(generator: BraidWord, crossings: int) -> tuple[tuple[tuple, BraidWord], ...]:
    """Every degree assignment of ``generator`` with the given crossing count,
    keyed by the cheap fingerprint."""
    L = len(generator)
    extra = crossings - L
    if extra < 0:
        return ()
    out = []
    seen = set()
    for combo in itertools.combinations_with_replacement(range(L), extra):
        degrees = [1] * L
        for c in combo:
            degrees[c] += 1
        word = generator.with_degrees(degrees)
        canon = canonical_form(word)
        if canon in seen:
            continue
        seen.add(canon)
        out.append((_fingerprint_cheap(word), word))
    return tuple(out)


def _shorter_generators(s: int, l: int) -> list[BraidWord]:
    gens = [BraidWord((conventional(1),))]
    for width in range(2, s + 1):
        for length in range(2 * width, l):
            gens.extend(enumerate_alternating_reduced(width, length))
    return gens


def dominating_word(word: BraidWord, rivals: Sequence[BraidWord] = ()) -> BraidWord | None:
    """A word with a smaller minimality key and the same link evidence.

    Searches instantiations of shorter generating words of at most the same
    width with the same crossing count, plus the given same-length rivals.
    """
    word = as_word(word)
    key = minimality_key(word)
    cheap = _fingerprint_cheap(word)
    profile = None
    pool: list[BraidWord] = []
    for gen in _shorter_generators(word.width, len(word)):
        pool.extend(w for fp, w in _instantiations(gen, word.crossings) if fp == cheap)
    pool.extend(r for r in rivals if _fingerprint_cheap(r) == cheap)
    for other in sorted(pool, key=minimality_key):
        if minimality_key(other) >= key:
            break
        if profile is None:
            profile = (twist_profile(word), _rank_polynomial(word))
        if twist_profile(other) == profile[0] and _rank_polynomial(other) == profile[1]:
            return other
    return None


@lru_cache(maxsize=None)
def _enumerate(s: int, l: int) -> tuple[BraidWord, ...]:
    words = [conventional_word(t) for t in _candidates(s, l)]
    kept = [w for w in words if dominating_word(w, words) is None]
    return tuple(_sorted_words(kept))


def enumerate_alternating_reduced(s: int, l: int) -> list[BraidWord]:
    """Canonical alternating reduced words of width ``s`` and length ``l``.

    Filters: alternation convention, cyclically adjacency-free, every
    generator used at least twice, no rotation splits the word into blocks
    over disjoint generator sets, no two occurrences of a generator can be
    brought together by far commutations, one word per commutation class,
    and no shorter generating word (or smaller same-length word) yields a
    link with the same Alexander polynomial, component count and
    twist-class profile at the same crossing number.
    """
    if s < 1 or l < s:
        return []
    if s == 1:
        return [BraidWord((conventional(1),))] if l == 1 else []
    return list(_enumerate(s, l))


def is_prime_generator(word: BraidWord | str) -> bool:
    return is_prime_diagram(word)


# --- parameter families -----------------------------------------------------

def _compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    # apply a then b
    return tuple(b[a[i]] for i in range(len(a)))


def _closure(gens: Iterable[tuple[int, ...]], n: int) -> set[tuple[int, ...]]:
    ident = tuple(range(n))
    gens = list(gens)
    group = {ident}
    todo = [ident]
    while todo:
        g = todo.pop()
        for h in gens:
            x = _compose(g, h)
            if x not in group:
                group.add(x)
                todo.append(x)
    return group


def family_symmetries(generator: BraidWord | str) -> set[tuple[int, ...]]:
    """Position permutations preserving the family structure of a generator:
    its word automorphisms together with swaps of twist-equivalent crossings."""
    generator = as_word(generator)
    n = len(generator)
    gens = set(automorphisms(generator))
    for a, b in twist_pairs(generator):
        perm = list(range(n))
        perm[a], perm[b] = b, a
        gens.add(tuple(perm))
    return _closure(gens, n)


def _mask_image(mask: frozenset[int], perm: tuple[int, ...]) -> frozenset[int]:
    return frozenset(perm[i] for i in mask)


def _source_key(generator: BraidWord, mask: frozenset[int]):
    word = generator.with_degrees([2 if i in mask else 1 for i in range(len(generator))])
    return _key(word.letters)


def _constraints_for(generator: BraidWord, mask: frozenset[int], group) -> list[Constraint]:
    order = sorted(mask)
    names = BraidFamily.from_mask(generator, order).parameters
    name_at = dict(zip(order, names))
    texts = []
    for perm in sorted(group):
        if _mask_image(mask, perm) != mask or all(perm[i] == i for i in order):
            continue
        # degrees move with the crossings: new[perm[i]] = old[i]
        inv = {perm[i]: i for i in order}
        image = [name_at[inv[i]] for i in order]
        src = [name_at[i] for i in order]
        moved = [(a, b) for a, b in zip(src, image) if a != b]
        pairs = {frozenset(p) for p in moved}
        if len(pairs) == 1:
            a, b = moved[0]
            text = f"{a}>={b}"
        else:
            text = f"({','.join(src)})>=({','.join(image)})"
        if text not in texts:
            texts.append(text)
    return [Constraint.parse(t) for t in texts]


def enumerate_bfr_families(generator: BraidWord | str, with_constraints: bool = True) -> list[BraidFamily]:
    """One family per orbit of non-empty parameter masks.

    Masks are identified under :func:`family_symmetries`; the representative
    is the mask whose source braid reads smallest.  A family whose source
    braid is canonically equal to an earlier one is dropped as well.
    """
    generator = as_word(generator)
    if not generator.is_reduced:
        raise ValueError("generator must be reduced")
    n = len(generator)
    group = family_symmetries(generator)
    seen: set[frozenset[int]] = set()
    reps: list[frozenset[int]] = []
    for size in range(1, n + 1):
        for combo in itertools.combinations(range(n), size):
            mask = frozenset(combo)
            if mask in seen:
                continue
            orbit = {_mask_image(mask, g) for g in group}
            seen |= orbit
            reps.append(min(orbit, key=lambda m: (_source_key(generator, m), sorted(m))))
    out = []
    sources = set()
    for mask in reps:
        fam = BraidFamily.from_mask(generator, sorted(mask))
        canon = canonical_form(fam.source_braid())
        if canon in sources:
            continue
        sources.add(canon)
        if with_constraints:
            fam = fam.with_constraints(_constraints_for(generator, mask, group))
        out.append(fam)
    out.sort(key=lambda f: (len(f.parameters), _source_key(f.generator, frozenset(f.mask))))
    return out


def _position_map(word: BraidWord, target: BraidWord) -> tuple[int, ...]:
    """Position permutation carrying ``word`` onto ``target`` by a word symmetry."""
    letters = tuple(x.with_degree(1) for x in word.letters)
    n = len(letters)
    for (_, r, k), img in _images(letters, word.max_index):
        if img == target.letters:
            return tuple(((n - 1 - i if r else i) - k) % n for i in range(n))
    raise ValueError(f"{format_braid(word)} is not a symmetry image of {format_braid(target)}")


@lru_cache(maxsize=None)
def _symmetries_of(generator: BraidWord) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(family_symmetries(generator)))


def family_signature(family: BraidFamily) -> tuple[str, tuple[int, ...]]:
    """Comparison key of a family modulo parameter names and symmetry.

    Slots are carried to the canonical generating word and the least image
    under :func:`family_symmetries` is taken; parameters read as 0.
    """
    gen = family.generator
    canon = canonical_form(gen)
    if len(canon) != len(gen):
        raise ValueError("family generator must be cyclically reduced")
    where = _position_map(gen, canon)
    slots = [0] * len(gen)
    for i, slot in enumerate(family.slots):
        slots[where[i]] = 0 if isinstance(slot, str) else slot
    best = min(tuple(slots[g.index(j)] for j in range(len(g))) for g in _symmetries_of(canon))
    return format_braid(canon), best


def boundary_word(family: BraidFamily) -> BraidWord:
    return family._word(family.boundary_values())


def families_collide(a: BraidFamily, b: BraidFamily) -> bool:
    """Boundary instantiations are canonically equal or carry identical
    link evidence (Alexander polynomial, components, twist profile)."""
    wa, wb = boundary_word(a), boundary_word(b)
    if canonical_form(wa) == canonical_form(wb):
        return True
    return _same_link_evidence(wa, wb)


def resolve_overlaps(families: Iterable[BraidFamily]) -> list[BraidFamily]:
    """Raise start values of colliding families until no boundary collides.

    Of two colliding families the one whose generating word has the larger
    minimality key moves; the parameter moved is its first one.
    """
    fams = list(families)
    changed = True
    while changed:
        changed = False
        for i, j in itertools.combinations(range(len(fams)), 2):
            a, b = fams[i], fams[j]
            if a == b or not a.parameters or not b.parameters:
                continue
            if not families_collide(a, b):
                continue
            ka, kb = minimality_key(a.generator), minimality_key(b.generator)
            loser = j if (kb, b.pattern()) > (ka, a.pattern()) else i
            fam = fams[loser]
            name = fam.parameters[0]
            fams[loser] = fam.with_start(name, fam.start_values[name] + 1)
            changed = True
    return fams


# --- crossing changes ---------------------------------------------------------

def _has_adjacent_inverse(word: BraidWord) -> bool:
    letters = word.letters
    n = len(letters)
    return any(
        letters[k].index == letters[(k + 1) % n].index and letters[k].positive != letters[(k + 1) % n].positive
        for k in range(n if n > 1 else 0)
    )


def _variant_key(word: BraidWord):
    return min(_key(canonical_form(word).letters), _key(canonical_form(mirror(word)).letters))


def nonalternating_variants(family: BraidFamily) -> list[BraidFamily]:
    """Case changes of the generating word, one family per mirror class."""
    gen = family.generator
    n = len(gen)
    base_key = _variant_key(family.source_braid())
    seen = {base_key}
    out = []
    for flips in itertools.product((False, True), repeat=n):
        if not any(flips):
            continue
        letters = tuple(x.inverse() if f else x for x, f in zip(gen.letters, flips))
        word = BraidWord(letters)
        if len(word) != n or _has_adjacent_inverse(word):
            continue
        fam = BraidFamily(word, family.slots, family.starts, family.constraints)
        key = _variant_key(fam.source_braid())
        if key in seen:
            continue
        seen.add(key)
        out.append(fam)
    return out


# --- basic polyhedra ----------------------------------------------------------

@dataclass(frozen=True)
class Series:
    w1: str
    first_n: int


SERIES = (
    Series("CbACbC", 2),
    Series("CbCbC", 3),
    Series("CbAbCbAbCb", 1),
    Series("CbAbCbCb", 2),
    Series("CbAbACbC", 2),
    Series("CbAbCbC", 2),
    Series("ACbdCdCd", 2),
    Series("ACbAdCbdCd", 1),
)
_SERIES_START = {s.w1: s.first_n for s in SERIES}


def basic_polyhedron_series(w1: BraidWord | str, mode: str, n: int) -> BraidWord:
    """Member ``n`` of the series grown from ``(Ab)^n`` by the word ``w1``."""
    text = format_braid(as_word(w1))
    if text not in _SERIES_START:
        raise KeyError(f"no registered series for w1={text}")
    if n < _SERIES_START[text]:
        raise ValueError(f"series {text} starts at n={_SERIES_START[text]}")
    base = conventional_word((1, 2) * n)
    if mode == "replacement":
        return extend_by_replacement(base, text)
    if mode == "addition":
        return extend_by_addition(base, text)
    raise ValueError(f"unknown mode {mode!r}")


_NAMED_POLYHEDRA = {
    "AbACbACbC": "9*",
    "AbAbCbACbC": "10**",
    "AbAbACbACbC": "11**",
    "AbAbAbCbACbC": "12F",
    "AbAbACbCbC": "10***",
    "AbAbAbCbCbC": "11***",
    "AbAbAbACbCbC": "12I",
    "AbAbCbACbCb": "11*",
    "AbCbAbCbAbCb": "12C",
    "AbAbCbAbCbCb": "12D",
    "AbAbCbAbACbC": "12G",
    "AbAbACbAbCbC": "12H",
    "AbAbACbdCdCd": "12J",
    "AbACbAdCbdCd": "12L",
}


def basic_polyhedron_id(word: BraidWord | str) -> str | None:
    word = as_word(word)
    canon = canonical_form(word)
    if canon.width == 2 and len(canon) % 2 == 0 and len(canon) >= 6:
        if canon == conventional_word((1, 2) * (len(canon) // 2)):
            return f"{len(canon)}*"
    return _BY_CANON.get(canon)


_BY_CANON = {canonical_form(w): name for w, name in _NAMED_POLYHEDRA.items()}


@dataclass(frozen=True)
class GeneratorClass:
    word: BraidWord
    kind: str
    basic_polyhedron: str | None = None


def classify_generator(word: BraidWord | str) -> GeneratorClass:
    word = canonical_form(as_word(word))
    if len(word) == 1 and word.letters[0].index == 1:
        kind = "algebraic"
    elif word.width >= 2 and word in set(generate_algebraic_generators(word.width)):
        kind = "algebraic"
    else:
        kind = "polyhedral"
    return GeneratorClass(word, kind, basic_polyhedron_id(word))
