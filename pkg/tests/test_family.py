import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidfam.family import (
    BelowStartError,
    BraidFamily,
    ConstraintViolation,
    FamilyError,
    MissingParameterError,
    parse_constraints,
)
from braidfam.words import BraidParseError, exponent_sum, idempotent_reduce, is_antisymmetric


def test_instantiate_simple():
    assert str(BraidFamily.parse("A^pbAb").instantiate({"p": 2})) == "A^2bAb"


def test_instantiate_with_constraint():
    fam = BraidFamily.parse("A^pbAb^q", "p>=q>=2")
    assert str(fam.instantiate({"p": 3, "q": 2})) == "A^3bAb^2"
    with pytest.raises(ConstraintViolation):
        fam.instantiate({"p": 2, "q": 3})


def test_distinct_errors():
    fam = BraidFamily.parse("A^pbAb^q", "p>=q", "p=2,q=2")
    with pytest.raises(MissingParameterError):
        fam.instantiate({"p": 2})
    with pytest.raises(BelowStartError):
        fam.instantiate({"p": 1, "q": 1})


@pytest.mark.parametrize("pattern, source", [
    ("A^pbAb^qAb^r", "A^2bAb^2Ab^2"),
    ("A^pbA^qbAb^r", "A^2bA^2bAb^2"),
    ("AbAb", "AbAb"),
])
def test_source_braid(pattern, source):
    assert str(BraidFamily.parse(pattern).source_braid()) == source


def test_source_braid_ignores_constraints():
    fam = BraidFamily.parse("A^pbAb^q", "p>q")
    assert str(fam.source_braid()) == "A^2bAb^2"


def test_repeated_parameter():
    fam = BraidFamily.parse("A^pbAb^p")
    assert fam.parameters == ("p",)
    assert str(fam.instantiate({"p": 3})) == "A^3bAb^3"


def test_braced_and_fixed_degrees():
    fam = BraidFamily.parse("A^{p}b^2Ab")
    assert fam.slots == ("p", 2, 1, 1)


@pytest.mark.parametrize("pattern", ["", "A^pAb", "A^0b", "A^ab"])
def test_bad_patterns(pattern):
    with pytest.raises((BraidParseError, FamilyError)):
        BraidFamily.parse(pattern)


def test_unknown_parameter_in_constraint():
    with pytest.raises(FamilyError):
        BraidFamily.parse("A^pbAb", "q>=2")


class TestConstraints:
    def test_chain(self):
        (c,) = parse_constraints("p>=q>=2")
        assert c.holds({"p": 3, "q": 2}) and not c.holds({"p": 3, "q": 1})

    def test_tuple(self):
        (c,) = parse_constraints("(p,q)>=(r,s)")
        assert c.holds({"p": 3, "q": 1, "r": 2, "s": 9})
        assert not c.holds({"p": 2, "q": 1, "r": 2, "s": 2})

    def test_implication(self):
        (c,) = parse_constraints("p=s -> r>=q")
        assert c.holds({"p": 2, "s": 3, "r": 1, "q": 5})
        assert not c.holds({"p": 2, "s": 2, "r": 1, "q": 5})

    def test_several(self):
        assert len(parse_constraints("p>=q; r>=2")) == 2


def test_sweep_bounds():
    fam = BraidFamily.parse("A^pbAb^q", "p>=q", "q=1")
    got = list(fam.sweep(3))
    assert {"p": 2, "q": 1} in got and {"p": 2, "q": 3} not in got
    assert all(v["p"] >= v["q"] and v["p"] >= 2 for v in got)


@given(st.integers(1, 6), st.integers(1, 6))
def test_symmetric_values_give_zero_exponent_sum(p, q):
    word = BraidFamily.parse("A^pb^qA^qb^p", starts="p=1,q=1").instantiate({"p": p, "q": q})
    assert exponent_sum(word) == 0
    assert is_antisymmetric(word)


@given(st.integers(2, 5), st.integers(2, 5), st.integers(2, 5))
def test_reduction_recovers_generator(p, q, r):
    fam = BraidFamily.parse("A^pbA^qbAb^r")
    assert idempotent_reduce(fam.instantiate({"p": p, "q": q, "r": r})) == fam.generator
