"""Neural codes as subset bitmasks: codewords, Boolean intervals, closures.

A code on ``n`` neurons is a nonempty, proper collection of subsets of
{1, .., n}. Subsets are packed into integer masks (bit ``i - 1`` encodes
neuron ``i``), which keeps subset tests O(1) and every value hashable
and immutable. All operations here are pure functions of their inputs;
cached attributes are write-once and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

MAX_NEURONS = 16

# Interval membership is table driven up to this size; the member bitsets
# still fit comfortably in machine words and 4**n table builds stay cheap.
_TABLE_MAX_N = 8


class InvalidCodeError(ValueError):
    """A code violated a structural requirement (empty, full, out of range)."""


def full_mask(n: int) -> int:
    """Mask with the low ``n`` bits set: the whole vertex set."""
    return (1 << n) - 1


def mask_from_neurons(neurons: Iterable[int], n: int) -> int:
    """Pack neuron indices (1-based) into a mask, validating the range."""
    mask = 0
    for i in neurons:
        if not 1 <= i <= n:
            raise ValueError(f"neuron {i} outside 1..{n}")
        mask |= 1 << (i - 1)
    return mask


def neurons_from_mask(mask: int) -> tuple[int, ...]:
    """Unpack a mask into ascending 1-based neuron indices."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, descending, including ``mask`` and 0."""
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


@lru_cache(maxsize=None)
def _masks_by_popcount(n: int) -> tuple[int, ...]:
    return tuple(sorted(range(1 << n), key=int.bit_count))


@lru_cache(maxsize=None)
def _interval_bits(n: int) -> dict[tuple[int, int], int]:
    """(lo, hi) -> bitset over 2**n marking the members of [lo, hi]."""
    table = {}
    for hi in range(1 << n):
        lo = hi
        while True:
            bits = 0
            for s in submasks(hi ^ lo):
                bits |= 1 << (lo | s)
            table[lo, hi] = bits
            if lo == 0:
                break
            lo = (lo - 1) & hi
    return table


def _inside_checker(code: "Code"):
    """Raw-mask interval containment test for a fixed code.

    Returns inside(c, d), true iff every word of [c, d] is a codeword;
    table driven for small n, submask scan otherwise.
    """
    if code.n <= _TABLE_MAX_N:
        table = _interval_bits(code.n)
        wb = code.word_bits

        def inside(c: int, d: int) -> bool:
            return table[c, d] & ~wb == 0
    else:
        member = code.words.__contains__

        def inside(c: int, d: int) -> bool:
            return all(member(c | s) for s in submasks(d ^ c))
    return inside


@dataclass(frozen=True, order=True)
class Interval:
    """Boolean interval [lo, hi]: every word between lo and hi inclusive."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo < 0 or self.lo & ~self.hi:
            raise ValueError(f"interval requires lo <= hi, got [{self.lo}, {self.hi}]")

    def members(self, n: int) -> frozenset[int]:
        """The 2**(|hi| - |lo|) words w with lo <= w <= hi."""
        if self.hi & ~full_mask(n):
            raise ValueError(f"interval endpoint {self.hi} does not fit {n} neurons")
        return frozenset(self.lo | s for s in submasks(self.hi ^ self.lo))

    def encloses(self, other: "Interval") -> bool:
        """Interval containment: [c1,d1] lies in [c2,d2] iff c2 <= c1 and d1 <= d2."""
        return self.lo & ~other.lo == 0 and other.hi & ~self.hi == 0


@dataclass(frozen=True)
class Code:
    """A neural code: neuron count ``n`` plus a set of codeword masks.

    Codes are always nonempty and proper (never all of 2**[n]); the ideal
    decompositions downstream are undefined otherwise, so the constructor
    rejects such inputs instead of normalizing them.
    """

    n: int
    words: frozenset[int]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or not 1 <= self.n <= MAX_NEURONS:
            raise InvalidCodeError(
                f"neuron count must be in 1..{MAX_NEURONS}, got {self.n!r}")
        words = frozenset(self.words)
        object.__setattr__(self, "words", words)
        if not words:
            raise InvalidCodeError("a code must contain at least one codeword")
        full = full_mask(self.n)
        for w in words:
            if not isinstance(w, int) or w < 0 or w & ~full:
                raise InvalidCodeError(
                    f"codeword {w!r} does not fit in {self.n} neurons")
        if len(words) == 1 << self.n:
            raise InvalidCodeError("a code must omit at least one subset of [n]")

    @classmethod
    def from_neuron_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> "Code":
        """Build a code from collections of 1-based neuron indices."""
        return cls(n, frozenset(mask_from_neurons(s, n) for s in sets))

    def __contains__(self, word: int) -> bool:
        return word in self.words

    def __iter__(self) -> Iterator[int]:
        return iter(self.word_list)

    def __len__(self) -> int:
        return len(self.words)

    @cached_property
    def word_list(self) -> tuple[int, ...]:
        """Codewords in ascending mask order."""
        return tuple(sorted(self.words))

    @cached_property
    def word_bits(self) -> int:
        """The word set as one bitset over the 2**n subsets."""
        bits = 0
        for w in self.words:
            bits |= 1 << w
        return bits

    @cached_property
    def complement(self) -> "Code":
        """The code whose words are exactly the non-words of this one."""
        comp = Code(self.n, frozenset(
            w for w in range(1 << self.n) if w not in self.words))
        comp.__dict__["complement"] = self  # complementation is an involution
        return comp

    @cached_property
    def maximal_codewords(self) -> frozenset[int]:
        """Codewords maximal under inclusion; always a nonempty antichain."""
        words = self.word_list
        return frozenset(
            w for w in words if not any(w != v and w & ~v == 0 for v in words))

    def contains_interval(self, iv: Interval) -> bool:
        """True iff every member of ``iv`` is a codeword."""
        full = full_mask(self.n)
        if iv.hi & ~full:
            raise ValueError(
                f"interval endpoint {iv.hi} does not fit {self.n} neurons")
        if self.n <= _TABLE_MAX_N:
            return _interval_bits(self.n)[iv.lo, iv.hi] & ~self.word_bits == 0
        return all(iv.lo | s in self.words for s in submasks(iv.hi ^ iv.lo))

    @cached_property
    def maximal_intervals(self) -> frozenset[Interval]:
        """Intervals of the code that are maximal under interval containment.

        Candidate endpoints range over codeword pairs c <= d, since the
        endpoints of an interval are among its members. A candidate is
        maximal iff no single-step widening (dropping one element of lo,
        or adding one missing element to hi) stays inside the code; any
        strictly larger interval of the code reaches it by such steps.
        """
        n = self.n
        full = full_mask(n)
        words = self.word_list
        inside = _inside_checker(self)
        out = []
        for c in words:
            for d in words:
                if c & ~d or not inside(c, d):
                    continue
                widened = False
                m = c
                while m:
                    bit = m & -m
                    m ^= bit
                    if inside(c ^ bit, d):
                        widened = True
                        break
                if not widened:
                    m = full & ~d
                    while m:
                        bit = m & -m
                        m ^= bit
                        if inside(c, d | bit):
                            widened = True
                            break
                if not widened:
                    out.append(Interval(c, d))
        return frozenset(out)
