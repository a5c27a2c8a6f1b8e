"""Alternating braid words, parameterised braid families and Conway symbols."""

from .conway import (
    ConwayRational,
    CorrespondenceEntry,
    count_rational_brute,
    count_rational_kl,
    fraction_of,
    load_fixtures,
    montesinos_determinant,
    normalize_conway,
    rational_terms,
)
from .diagram import rank_polynomial, twist_profile
from .enumerate import (
    classify_generator,
    commutation_canonical,
    enumerate_alternating_reduced,
    enumerate_bfr_families,
    generate_algebraic_generators,
    minimality_key,
    nonalternating_variants,
    resolve_overlaps,
)
from .family import BraidFamily, Constraint, instantiate, source_braid
from .invariants import alexander, determinant
from .laurent import LaurentPoly
from .words import (
    BraidLetter,
    BraidParseError,
    BraidWord,
    canonical_form,
    component_count,
    format_braid,
    idempotent_reduce,
    parse_braid,
)

__all__ = [name for name in dir() if not name.startswith("_")]
