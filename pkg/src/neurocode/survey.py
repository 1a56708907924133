"""Exhaustive survey over every valid code on a few neurons.

Each code gets one row recording interval and canonical-form statistics
plus the two closure verdicts; every verdict is computed by all three
methods and any disagreement aborts the survey. Rows stream in canonical
id order, so output is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .classify import (
    is_intersection_complete_bruteforce,
    is_intersection_complete_cf,
    is_intersection_complete_facets,
    is_mic_algebraic,
    is_mic_bruteforce,
    is_mic_facets,
)
from .codes import Code
from .ideals import canonical_form

SURVEY_MAX_N = 4


class SurveyTooLargeError(ValueError):
    """Survey refused: the code count is astronomically large."""


class MethodDisagreement(AssertionError):
    """Two deciders for the same property returned different verdicts."""


@dataclass(frozen=True)
class SurveyRow:
    code_id: int
    max_codewords: int
    max_intervals: int
    cf_size: int
    cf_nonmonomials: int
    ic: bool
    mic: bool


@dataclass
class SurveySummary:
    codes: int
    ic_count: int
    mic_count: int
    # max nonmonomial canonical-form size, keyed by maximal-codeword count
    max_cf_nonmonomials: dict[int, int]


def code_from_id(n: int, code_id: int) -> Code:
    """Decode a canonical id: bit w of the id marks word w as present."""
    return Code(n, frozenset(w for w in range(1 << n) if code_id >> w & 1))


def survey(n: int) -> Iterator[SurveyRow]:
    """One row per valid code on n neurons, in ascending id order.

    Validates n eagerly; ids run from 1 to 2**(2**n) - 2 (the empty and
    full word sets are not codes).
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"neuron count must be a positive integer, got {n!r}")
    if n > SURVEY_MAX_N:
        digits = (1 << n) * 0.30103
        if digits < 15:
            count = 2 ** (1 << n) - 2
            sizing = f"{count} codes, about {count * 5e-4 / 86400:.1f} days at 0.5 ms each"
        else:
            sizing = f"about 10**{digits:.0f} codes"
        raise SurveyTooLargeError(
            f"survey over n={n} means {sizing}; the cap is n={SURVEY_MAX_N} "
            f"(65534 codes)")
    return _survey_rows(n)


def _survey_rows(n: int) -> Iterator[SurveyRow]:
    for code_id in range(1, 2 ** (1 << n) - 1):
        code = code_from_id(n, code_id)
        ic = (is_intersection_complete_bruteforce(code),
              is_intersection_complete_cf(code),
              is_intersection_complete_facets(code))
        if not ic[0].verdict == ic[1].verdict == ic[2].verdict:
            raise MethodDisagreement(
                f"intersection-complete methods disagree on id {code_id} (n={n})")
        mic = (is_mic_bruteforce(code),
               is_mic_algebraic(code),
               is_mic_facets(code))
        if not mic[0].verdict == mic[1].verdict == mic[2].verdict:
            raise MethodDisagreement(
                f"max-intersection-complete methods disagree on id {code_id} (n={n})")
        cf = canonical_form(code)
        nonmono = sum(1 for pm in cf.elements if pm.tau)
        yield SurveyRow(code_id, len(code.maximal_codewords),
                        len(code.maximal_intervals), len(cf.elements),
                        nonmono, ic[0].verdict, mic[0].verdict)


def summarize(rows: Iterable[SurveyRow]) -> SurveySummary:
    """Fold rows into the survey footer statistics."""
    codes = ic_count = mic_count = 0
    buckets: dict[int, int] = {}
    for row in rows:
        codes += 1
        ic_count += row.ic
        mic_count += row.mic
        prev = buckets.get(row.max_codewords, -1)
        if row.cf_nonmonomials > prev:
            buckets[row.max_codewords] = row.cf_nonmonomials
    return SurveySummary(codes, ic_count, mic_count, dict(sorted(buckets.items())))
