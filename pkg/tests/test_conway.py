from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidfam.conway import (
    ConwayRational,
    CorrespondenceEntry,
    FixtureError,
    antisymmetry_check,
    correspondence_check,
    count_rational_brute,
    count_rational_kl,
    count_rational_knots,
    fraction_of,
    load_fixtures,
    montesinos_determinant,
    montesinos_tangles,
    pretzel_determinant,
    printed_count,
    rational_components,
    rational_terms,
    sweep_values,
)

terms = st.lists(st.integers(1, 6), min_size=1, max_size=7)


def naive_count(n):
    """Compositions of n without a leading or trailing 1, up to reversal."""
    seen = set()
    for cuts in product((0, 1), repeat=n - 1):
        seq, run = [], 1
        for c in cuts:
            if c:
                seq.append(run)
                run = 1
            else:
                run += 1
        seq.append(run)
        if len(seq) > 1 and (seq[0] == 1 or seq[-1] == 1):
            continue
        seen.add(min(tuple(seq), tuple(reversed(seq))))
    return seen


class TestFractions:
    @pytest.mark.parametrize("symbol, value", [("2 2", Fraction(5, 2)), ("3 2", Fraction(7, 3)), ("2 1 2", Fraction(8, 3))])
    def test_examples(self, symbol, value):
        assert fraction_of(symbol) == value

    @pytest.mark.parametrize("symbol, n", [("2 2", 1), ("2 1 2", 2), ("2", 2)])
    def test_components(self, symbol, n):
        assert rational_components(symbol) == n

    @given(terms)
    def test_reversal_keeps_numerator(self, seq):
        assert fraction_of(seq).numerator == fraction_of(seq[::-1]).numerator

    @given(terms)
    def test_canonical_idempotent(self, seq):
        c = ConwayRational(tuple(seq)).canonical()
        assert c.canonical() == c
        assert c.terms == min(tuple(seq), tuple(reversed(seq)))

    def test_admissible(self):
        assert ConwayRational.parse("2 1 2").is_admissible()
        assert not ConwayRational.parse("1 3").is_admissible()


class TestCounting:
    @pytest.mark.parametrize("n, total", [(4, 2), (8, 20), (12, 272)])
    def test_formula(self, n, total):
        assert count_rational_kl(n) == total

    def test_formula_domain(self):
        with pytest.raises(ValueError):
            count_rational_kl(3)

    def test_brute_examples(self):
        assert count_rational_brute(4).total == 2
        five = count_rational_brute(5)
        assert (five.total, five.knots, five.links) == (3, 2, 1)
        assert count_rational_brute(3).total == 1

    @pytest.mark.parametrize("n, knots", [(3, 1), (4, 1), (7, 7)])
    def test_knots(self, n, knots):
        assert count_rational_knots(n) == knots

    @pytest.mark.parametrize("n", range(1, 15))
    def test_brute_matches_naive(self, n):
        seqs = naive_count(n)
        c = count_rational_brute(n)
        assert c.total == len(seqs)
        assert c.knots == sum(fraction_of(s).numerator % 2 for s in seqs)
        assert c.knots + c.links == c.total

    @pytest.mark.parametrize("n", range(4, 21))
    def test_formula_matches_brute(self, n):
        assert count_rational_kl(n) == count_rational_brute(n).total

    def test_printed_sequence_typos(self):
        assert printed_count(15) == 1080 and count_rational_kl(15) == 2080
        assert printed_count(19) == 32986 and count_rational_kl(19) == 32896


class TestPatterns:
    def test_rational_terms(self):
        assert rational_terms("p 1 2", {"p": 1}) == (1, 1, 2)
        assert rational_terms("(p-1) 3", {"p": 4}) == (3, 3)
        assert rational_terms("p,q,2", {"p": 2, "q": 2}) is None

    def test_pretzel(self):
        assert pretzel_determinant(2, 2, 2) == 12
        assert montesinos_tangles("p,q,2", {"p": 2, "q": 3}) == [(2,), (3,), (2,)]
        assert montesinos_determinant([(2,), (3,), (2,)]) == pretzel_determinant(2, 3, 2)

    def test_leading_minus_negates_tangle(self):
        assert montesinos_tangles("-3 1,2,2", {}) == [(-3, -1), (2,), (2,)]


class TestCorrespondence:
    def test_two_generator_examples(self):
        e = CorrespondenceEntry("AbAb", "A^pbAb", "p 1 2", "algebraic-rational", "", "p=1")
        r = correspondence_check(e, {"p": 2})
        assert (r.status, r.braid_determinant, r.braid_components) == ("pass", 8, 2)
        r = correspondence_check(e, {"p": 1})
        assert (r.status, r.braid, r.conway, r.braid_determinant) == ("pass", "AbAb", "1 1 2", 5)

    def test_pretzel_entry(self):
        e = CorrespondenceEntry("AbAb", "A^pbA^qb", "p,q,2", "algebraic-other")
        r = correspondence_check(e, {"p": 2, "q": 2})
        assert r.status == "pass" and r.braid_determinant == 12

    def test_mismatch_fails(self):
        e = CorrespondenceEntry("x", "A^pbAb", "p 2", "algebraic-rational")
        assert correspondence_check(e, {"p": 2}).status == "fail"

    def test_sweep_respects_starts(self):
        e = CorrespondenceEntry("AbAb", "A^pbAb", "p 1 2", "algebraic-rational", "", "p=1")
        assert [v["p"] for v in sweep_values(e, 4)] == [1, 2, 3, 4]

    def test_antisymmetry(self):
        e = CorrespondenceEntry("achiral AbAb", "A^pbAb^p", "p 1 1 p", "algebraic-rational")
        assert antisymmetry_check(e, {"p": 3}).status == "pass"


class TestFixtures:
    def test_bundled_tables_load(self, fixtures_dir):
        entries = load_fixtures(fixtures_dir)
        tables = {e.table_id for e in entries}
        assert {"AbAb", ".2 1", ".2:2"} <= tables
        assert sum(e.table_id == ".2 1" for e in entries) == 70
        assert sum(e.table_id == ".2:2" for e in entries) == 19

    def test_bad_row(self, tmp_path):
        bad = tmp_path / "bad.tsv"
        bad.write_text("T\tA^pxb\tp 1\talgebraic-rational\t\t\n")
        with pytest.raises(FixtureError):
            load_fixtures(bad)

    def test_comments_skipped(self, tmp_path):
        f = tmp_path / "ok.tsv"
        f.write_text("# comment\nT\tA^pbAb\tp 1 2\talgebraic-rational\t\tp=1\n")
        assert len(load_fixtures(f)) == 1
