"""Command-line interface: ``braidfam <command> ...``.

Every command builds a :class:`Report`; the exit status is 0 exactly when the
report holds no failures.  Informational items never change the status.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from collections import defaultdict
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Sequence

from .conway import (
    CorrespondenceEntry,
    FixtureError,
    antisymmetry_check,
    correspondence_check,
    count_rational_brute,
    count_rational_kl,
    load_fixtures,
    montesinos_tangles,
    printed_count,
    printed_knot_formula,
    sweep_values,
)
from .enumerate import (
    SERIES,
    basic_polyhedron_series,
    classify_generator,
    commutation_canonical,
    conventional,
    enumerate_alternating_reduced,
    enumerate_bfr_families,
    family_signature,
    generate_algebraic_generators,
    nonalternating_variants,
    resolve_overlaps,
)
from .family import BraidFamily, FamilyError
from .invariants import alexander, determinant
from .words import (
    BraidParseError,
    BraidWord,
    alternation_code,
    canonical_form,
    component_count,
    exponent_sum,
    format_braid,
    idempotent_reduce,
    is_antisymmetric,
    parse_braid,
)

STATUSES = ("pass", "fail", "info")


def default_fixtures() -> Path:
    return Path(str(resources.files("braidfam") / "data"))


# --- reports ------------------------------------------------------------------------

@dataclass
class Item:
    status: str
    section: str
    subject: str
    detail: dict = field(default_factory=dict)

    def line(self) -> str:
        extra = " ".join(f"{k}={_text(v)}" for k, v in self.detail.items())
        return f"{self.status.upper():4} [{self.section}] {self.subject}" + (f" | {extra}" if extra else "")


def _text(v) -> str:
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_text(x) for x in v) + "]"
    return str(v)


@dataclass
class Report:
    command: str
    items: list[Item] = field(default_factory=list)
    output: list[str] = field(default_factory=list)
    data: object = None

    def add(self, status: str, section: str, subject: str, **detail) -> None:
        if status not in STATUSES:
            raise ValueError(status)
        self.items.append(Item(status, section, subject, detail))

    @property
    def counts(self) -> dict[str, int]:
        return {s: sum(1 for i in self.items if i.status == s) for s in STATUSES}

    @property
    def failures(self) -> int:
        return self.counts["fail"]

    def render(self, as_json: bool) -> str:
        if as_json:
            payload = {
                "command": self.command,
                "result": self.data,
                "items": [
                    {"status": i.status, "section": i.section, "subject": i.subject, "detail": i.detail}
                    for i in self.items
                ],
                "counts": self.counts,
            }
            return json.dumps(payload, indent=2)
        lines = list(self.output)
        lines += [i.line() for i in self.items]
        if self.items:
            c = self.counts
            lines.append(f"summary: pass={c['pass']} fail={c['fail']} info={c['info']}")
        return "\n".join(lines)


# --- simple commands -------------------------------------------------------------

def cmd_reduce(args) -> Report:
    word = parse_braid(args.word)
    out = format_braid(idempotent_reduce(word))
    rep = Report(f"reduce {args.word}", data={"word": format_braid(word), "reduced": out})
    rep.output.append(out)
    return rep


def cmd_canon(args) -> Report:
    word = parse_braid(args.word)
    out = format_braid(canonical_form(word))
    rep = Report(f"canon {args.word}", data={"word": format_braid(word), "canonical": out})
    rep.output.append(out)
    return rep


def invariants_of(word: BraidWord) -> dict:
    return {
        "word": format_braid(word),
        "reduced": format_braid(idempotent_reduce(word)),
        "width": word.width,
        "strands": word.strands,
        "crossings": word.crossings,
        "components": component_count(word),
        "exponent_sum": exponent_sum(word),
        "code": alternation_code(word),
        "antisymmetric": is_antisymmetric(word),
        "alexander": alexander(word).serialize(),
        "determinant": determinant(word),
    }


def cmd_invariants(args) -> Report:
    data = invariants_of(parse_braid(args.word))
    rep = Report(f"invariants {args.word}", data=data)
    rep.output.append(json.dumps(data))
    return rep


def _kl_registry(fixtures: Path | None) -> dict[BraidWord, str]:
    out: dict[BraidWord, str] = {}
    if fixtures is None:
        return out
    for e in load_fixtures(fixtures):
        if e.table_id.startswith("generators") or e.table_id == "series":
            try:
                out.setdefault(canonical_form(parse_braid(e.braid_pattern)), e.conway_pattern)
            except BraidParseError:
                continue
    return out


def _algebraic(s: int) -> list[BraidWord]:
    if s == 1:
        return [BraidWord((conventional(1),))]
    return generate_algebraic_generators(s)


def cmd_generators(args) -> Report:
    if args.s < 1:
        raise ValueError("--s must be at least 1")
    kind = args.klass or ("all" if args.l is not None else "algebraic")
    if kind == "algebraic":
        words = [w for w in _algebraic(args.s) if args.l is None or len(w) == args.l]
    else:
        if args.l is None:
            raise ValueError("--class all needs --l")
        words = enumerate_alternating_reduced(args.s, args.l)
    registry = _kl_registry(args.fixtures_path)
    rows = []
    rep = Report(f"generators --s {args.s}" + (f" --l {args.l}" if args.l is not None else "") + f" --class {kind}")
    for w in words:
        cls = classify_generator(w)
        kl = registry.get(canonical_form(w)) or cls.basic_polyhedron or "-"
        rows.append({"word": format_braid(w), "length": len(w), "class": cls.kind, "kl": kl})
        rep.output.append(f"{format_braid(w)}\t{cls.kind}\t{kl}")
    rep.output.append(f"count: {len(words)}")
    rep.data = rows
    return rep


def _family_row(fam: BraidFamily) -> dict:
    return {
        "pattern": fam.pattern(),
        "starts": ",".join(f"{n}={v}" for n, v in fam.starts),
        "constraints": "; ".join(str(c) for c in fam.constraints) or "-",
    }


def cmd_families(args) -> Report:
    gen = parse_braid(args.generator)
    if not gen.is_reduced:
        raise ValueError(f"generator {args.generator} is not a reduced word")
    fams = resolve_overlaps(enumerate_bfr_families(gen))
    rep = Report(f"families --generator {args.generator}" + (" --nonalternating" if args.nonalternating else ""))
    rows = []
    if args.nonalternating:
        for fam in fams:
            for var in nonalternating_variants(fam):
                row = _family_row(var)
                row["from"] = fam.pattern()
                rows.append(row)
    else:
        rows = [_family_row(f) for f in fams]
    for r in rows:
        tail = f"\tfrom {r['from']}" if "from" in r else ""
        rep.output.append(f"{r['pattern']}\t{r['starts']}\t{r['constraints']}{tail}")
    rep.output.append(f"count: {len(rows)}")
    rep.data = rows
    return rep


def _count_items(rep: Report, n: int, brute_required: bool = False) -> None:
    formula = count_rational_kl(n) if n >= 4 else None
    brute = count_rational_brute(n) if n <= 24 else None
    if brute is None and brute_required:
        raise ValueError("brute-force counting supports n <= 24")
    printed = printed_count(n)
    detail = {"formula": formula if formula is not None else "-"}
    if brute is not None:
        detail.update(brute=brute.total, knots=brute.knots, links=brute.links)
    if formula is not None and brute is not None:
        rep.add("pass" if formula == brute.total else "fail", "count", f"n={n}", **detail)
    else:
        rep.add("info", "count", f"n={n}", **detail)
    if printed is not None:
        reference = brute.total if brute is not None else formula
        if reference is not None and printed != reference:
            rep.add("info", "count", f"n={n} printed sequence", printed=printed, computed=reference,
                    flag="paper value differs")
    if n >= 3 and brute is not None:
        literal = printed_knot_formula(n)
        if literal != brute.knots:
            rep.add("info", "count", f"n={n} printed knot formula", literal=str(literal), brute=brute.knots)


def cmd_count(args) -> Report:
    if args.n < 1:
        raise ValueError("--n must be at least 1")
    rep = Report(f"count --n {args.n}" + (" --brute" if args.brute else ""))
    _count_items(rep, args.n, args.brute)
    return rep


# --- verify-tables -----------------------------------------------------------------

_GEN_TABLE = re.compile(r"^generators s=(\d+) l=(\d+)$")


def _family_or_none(entry: CorrespondenceEntry) -> BraidFamily | None:
    try:
        return entry.family()
    except (FamilyError, BraidParseError):
        return None


def _roundtrip(rep: Report, entries: Sequence[CorrespondenceEntry]) -> None:
    bad = []
    for e in entries:
        fam = _family_or_none(e)
        if fam is None:
            bad.append(e.braid_pattern)
            continue
        again = BraidFamily.parse(fam.pattern())
        source = fam.source_braid()
        if again.pattern() != fam.pattern() or parse_braid(format_braid(source)) != source:
            bad.append(e.braid_pattern)
    if bad:
        rep.add("fail", "roundtrip", "braid patterns", failed=bad)
    else:
        rep.add("pass", "roundtrip", "braid patterns", checked=len(entries))


def _has_semantic_check(entry: CorrespondenceEntry, fam: BraidFamily) -> bool:
    if entry.kind == "algebraic-rational":
        return True
    if entry.kind == "algebraic-other":
        return montesinos_tangles(entry.conway_pattern, fam.start_values) is not None
    return False


def _sweep(rep: Report, section: str, entry: CorrespondenceEntry, max_param: int, demote: str = "") -> None:
    """Correspondence sweep of one entry; ``demote`` turns failures into info."""
    fam = _family_or_none(entry)
    subject = f"{entry.braid_pattern} <-> {entry.conway_pattern}"
    if fam is None:
        rep.add("fail", section, subject, reason="braid pattern does not parse")
        return
    checked = _has_semantic_check(entry, fam)
    values = sweep_values(entry, max_param) if checked else [fam.start_values]
    results = [correspondence_check(entry, v) for v in values]
    failed = [r for r in results if r.status == "fail"]
    first = results[0] if results else None
    if not results:
        rep.add("info", section, subject, reason="no admissible values")
        return
    if failed:
        status = "info" if demote else "fail"
        rep.add(status, section, subject, checked=len(results), failed=len(failed),
                note=demote or first.note or "rational")
        for r in failed:
            rep.add(status, section, f"  {r.braid} <-> {r.conway}",
                    braid_det=r.braid_determinant, conway_det=r.expected_determinant,
                    braid_components=r.braid_components,
                    conway_components=r.expected_components if r.expected_components is not None else "-")
    elif checked:
        rep.add("pass", section, subject, checked=len(results), braid=first.braid,
                braid_det=first.braid_determinant, conway_det=first.expected_determinant)
    else:
        rep.add("info", section, subject, braid=first.braid, braid_det=first.braid_determinant,
                components=first.braid_components, note="opaque Conway symbol")


def _antisymmetry(rep: Report, entry: CorrespondenceEntry, max_param: int) -> None:
    fam = _family_or_none(entry)
    subject = entry.braid_pattern
    if fam is None:
        rep.add("fail", "antisymmetry", subject, reason="braid pattern does not parse")
        return
    results = [antisymmetry_check(entry, v) for v in fam.sweep(max_param)]
    bad = [r for r in results if r.status == "fail"]
    if bad:
        rep.add("fail", "antisymmetry", subject, checked=len(results), failed=[r.braid for r in bad])
    else:
        rep.add("pass", "antisymmetry", subject, checked=len(results))


def _is_alternating_pattern(fam: BraidFamily) -> bool:
    return all(x.is_conventional() for x in fam.generator.letters)


def _family_table(rep: Report, table: str, entries: Sequence[CorrespondenceEntry]) -> None:
    fams = [_family_or_none(e) for e in entries]
    if any(f is None for f in fams) or not all(_is_alternating_pattern(f) for f in fams):
        return
    gens = {canonical_form(f.generator) for f in fams}
    if len(gens) != 1:
        return
    gen = gens.pop()
    derived = {family_signature(f): f.pattern() for f in enumerate_bfr_families(gen)}
    listed: dict = {}
    for e, f in zip(entries, fams):
        sig = family_signature(f)
        if sig in listed:
            rep.add("info", "families", f"{table}: duplicate row {e.braid_pattern}", same_as=listed[sig])
        listed.setdefault(sig, e.braid_pattern)
    extra = sorted(p for s, p in listed.items() if s not in derived)
    missing = sorted(p for s, p in derived.items() if s not in listed)
    status = "pass" if not extra and not missing else "fail"
    rep.add(status, "families", f"{table} from {format_braid(gen)}",
            derived=len(derived), table=len(listed), missing_from_table=len(missing), not_derived=len(extra))
    for p in missing:
        rep.add(status, "families", f"  derived, absent from {table}: {p}")
    for p in extra:
        rep.add(status, "families", f"  in {table}, not derived: {p}")


def _generator_tables(rep: Report, entries: Sequence[CorrespondenceEntry], max_length: int, max_param: int) -> None:
    groups: dict[tuple[int, int, str], list[CorrespondenceEntry]] = defaultdict(list)
    for e in entries:
        m = _GEN_TABLE.match(e.table_id)
        if not m:
            rep.add("fail", "generators", f"{e.table_id}: malformed table id")
            continue
        kind = "polyhedral" if e.kind == "polyhedral" else "algebraic"
        groups[(int(m.group(1)), int(m.group(2)), kind)].append(e)
    for (s, l, kind), rows in sorted(groups.items()):
        table = f"generators s={s} l={l} {kind}"
        if l > max_length:
            for e in rows:
                rep.add("info", "generators", f"{table}: {e.braid_pattern}", reason=f"not re-derived (l > {max_length})")
            continue
        algebraic = {w for w in _algebraic(s) if len(w) == l}
        derived = algebraic if kind == "algebraic" else set(enumerate_alternating_reduced(s, l)) - algebraic
        derived = {commutation_canonical(w): w for w in derived}
        matched, inconsistent = set(), False
        for e in rows:
            try:
                word = parse_braid(e.braid_pattern)
            except BraidParseError:
                rep.add("fail", "generators", f"{table}: {e.braid_pattern}", reason="does not parse")
                continue
            problems = []
            if len(word) != l:
                problems.append(f"length {len(word)}")
            if word.width != s:
                problems.append(f"width {word.width}")
            if not all(x.is_conventional() for x in word.letters):
                problems.append("not alternating")
            if problems:
                inconsistent = True
                rep.add("info", "generators", f"{table}: {e.braid_pattern}",
                        reason="row inconsistent with its table: " + ", ".join(problems))
                _sweep(rep, "generator KL", e, max_param, demote="row inconsistent")
                continue
            canon = commutation_canonical(word)
            if canon in derived:
                matched.add(canon)
                rep.add("pass", "generators", f"{table}: {e.braid_pattern}", kl=e.conway_pattern,
                        derived=format_braid(derived[canon]))
            else:
                rep.add("fail", "generators", f"{table}: {e.braid_pattern}", reason="not derived",
                        canonical=format_braid(canon))
            if e.kind != "polyhedral":
                _sweep(rep, "generator KL", e, max_param)
        for w in sorted((derived[k] for k in derived.keys() - matched), key=format_braid):
            if inconsistent:
                rep.add("info", "generators", f"{table}: derived {format_braid(w)}",
                        reason="absent from table; the table has an inconsistent row")
            else:
                rep.add("fail", "generators", f"{table}: derived {format_braid(w)}", reason="absent from table")


def _series(rep: Report, entry: CorrespondenceEntry, depth: int = 8) -> None:
    try:
        word = canonical_form(parse_braid(entry.braid_pattern))
    except BraidParseError:
        rep.add("fail", "series", entry.braid_pattern, reason="does not parse")
        return
    found = None
    for ser in SERIES:
        for mode in ("replacement", "addition"):
            for n in range(ser.first_n, depth + 1):
                try:
                    w = basic_polyhedron_series(ser.w1, mode, n)
                except ValueError:
                    continue
                if canonical_form(w) == word:
                    found = found or f"{mode} of {ser.w1} into (Ab)^{n}"
    name = classify_generator(word).basic_polyhedron
    ok = found is not None and name == entry.conway_pattern
    rep.add("pass" if ok else "fail", "series", entry.braid_pattern,
            construction=found or "-", polyhedron=name or "-", table=entry.conway_pattern)


def cmd_verify_tables(args) -> Report:
    path = args.fixtures_path or default_fixtures()
    entries = load_fixtures(path)
    rep = Report(f"verify-tables --max-param {args.max_param} --max-length {args.max_length}")
    _roundtrip(rep, entries)
    tables: dict[str, list[CorrespondenceEntry]] = defaultdict(list)
    for e in entries:
        tables[e.table_id].append(e)
    generator_rows = []
    for table, rows in tables.items():
        if table.startswith("gap"):
            for e in rows:
                ok = _family_or_none(e) is not None
                rep.add("info" if ok else "fail", "inert", f"{table}: {e.braid_pattern} <-> {e.conway_pattern}",
                        parsed=ok)
        elif table.startswith("generators"):
            generator_rows.extend(rows)
        elif table == "series":
            for e in rows:
                _series(rep, e)
        else:
            symbols = defaultdict(set)
            for e in rows:
                symbols[e.braid_pattern].add(e.conway_pattern)
            seen = set()
            for e in rows:
                if e.braid_pattern in seen:
                    rep.add("info", table, f"duplicate row {e.braid_pattern} <-> {e.conway_pattern}")
                seen.add(e.braid_pattern)
                if table.startswith("achiral"):
                    _antisymmetry(rep, e, args.max_param)
                conflict = len(symbols[e.braid_pattern]) > 1
                _sweep(rep, table, e, args.max_param,
                       demote="braid pattern listed with conflicting Conway symbols" if conflict else "")
            if not table.startswith("achiral"):
                _family_table(rep, table, rows)
    _generator_tables(rep, generator_rows, args.max_length, args.max_param)
    for n in range(1, 24):
        _count_items(rep, n)
    return rep


# --- entry point --------------------------------------------------------------------

COMMANDS = {
    "reduce": cmd_reduce,
    "canon": cmd_canon,
    "generators": cmd_generators,
    "families": cmd_families,
    "invariants": cmd_invariants,
    "count": cmd_count,
    "verify-tables": cmd_verify_tables,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("--fixtures", default=argparse.SUPPRESS, metavar="PATH",
                        help="fixture TSV file or directory")
    parser = argparse.ArgumentParser(prog="braidfam", description="Braid family calculus and table checks.")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--fixtures", metavar="PATH", help="fixture TSV file or directory")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", parents=[common], help="apply idempotency to a word")
    p.add_argument("word")
    p = sub.add_parser("canon", parents=[common], help="canonical form of a closed word")
    p.add_argument("word")
    p = sub.add_parser("generators", parents=[common], help="list generating words")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--l", type=int)
    p.add_argument("--class", dest="klass", choices=("algebraic", "all"))
    p = sub.add_parser("families", parents=[common], help="parameter families of a generating word")
    p.add_argument("--generator", required=True)
    p.add_argument("--nonalternating", action="store_true")
    p = sub.add_parser("invariants", parents=[common], help="invariants of a braid word (JSON)")
    p.add_argument("word")
    p = sub.add_parser("count", parents=[common], help="rational knot and link counts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--brute", action="store_true")
    p = sub.add_parser("verify-tables", parents=[common], help="check fixture tables")
    p.add_argument("--max-param", type=int, default=4)
    p.add_argument("--max-length", type=int, default=12,
                   help="longest generating words re-derived for generator tables")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    fixtures = getattr(args, "fixtures", None)
    if fixtures is None and args.command in ("generators", "verify-tables"):
        fixtures = default_fixtures()
    args.fixtures_path = Path(fixtures) if fixtures is not None else None
    try:
        if args.fixtures_path is not None and not args.fixtures_path.exists():
            raise FixtureError(f"cannot read fixtures at {args.fixtures_path}")
        rep = COMMANDS[args.command](args)
    except (BraidParseError, FamilyError, FixtureError, ValueError, KeyError, OSError) as exc:
        print(f"braidfam: error: {exc}", file=sys.stderr)
        return 2
    print(rep.render(args.json))
    return 0 if rep.failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
