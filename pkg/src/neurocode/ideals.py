"""Pseudomonomials, neural ideals, canonical forms, prime decompositions.

Ideals are carried extensionally. The neural ideal of a code is determined
by its zero set (the code itself), so membership, canonical forms and
decompositions are decided by scanning codewords; no polynomial arithmetic
is ever performed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import (
    _TABLE_MAX_N,
    _interval_bits,
    _masks_by_popcount,
    Code,
    Interval,
    full_mask,
    neurons_from_mask,
    submasks,
)

# Canonical forms scan all 3**n disjoint (sigma, tau) pairs; the cap guards
# against accidental blowup, not against any interesting input.
CF_MAX_N = 12


class CapExceededError(ValueError):
    """An exhaustive enumeration was refused because n is too large."""


@dataclass(frozen=True, order=True)
class Pseudomonomial:
    """Product of variables x_i (i in sigma) and factors 1 - x_j (j in tau)."""

    sigma: int
    tau: int

    def __post_init__(self) -> None:
        if self.sigma < 0 or self.tau < 0 or self.sigma & self.tau:
            raise ValueError("sigma and tau must be disjoint sets")

    @property
    def is_monomial(self) -> bool:
        return self.tau == 0

    @property
    def is_unit(self) -> bool:
        return self.sigma == 0 and self.tau == 0

    def __str__(self) -> str:
        factors = [f"x{i}" for i in neurons_from_mask(self.sigma)]
        factors += [f"(1-x{j})" for j in neurons_from_mask(self.tau)]
        return "*".join(factors) if factors else "1"


@dataclass(frozen=True, order=True)
class PrimePseudomonomialIdeal:
    """Prime pseudomonomial ideal <x_i : i in pos> + <1 - x_j : j in neg>."""

    pos: int
    neg: int

    def __post_init__(self) -> None:
        if self.pos < 0 or self.neg < 0 or self.pos & self.neg:
            raise ValueError("pos and neg must be disjoint sets")

    def zero_interval(self, n: int) -> Interval:
        """The Boolean interval on which every generator vanishes."""
        return Interval(self.neg, full_mask(n) & ~self.pos)

    def contains(self, pm: Pseudomonomial) -> bool:
        """Ideal membership, decided on zero sets.

        A pseudomonomial lies in the prime iff it vanishes on the prime's
        zero interval, which happens exactly when sigma meets pos or tau
        meets neg.
        """
        return bool(pm.sigma & self.pos or pm.tau & self.neg)

    def __str__(self) -> str:
        gens = [f"x{i}" for i in neurons_from_mask(self.pos)]
        gens += [f"1-x{j}" for j in neurons_from_mask(self.neg)]
        return "<" + ",".join(gens) + ">"


@dataclass(frozen=True)
class CanonicalForm:
    """The divisibility-minimal pseudomonomials of a neural ideal."""

    n: int
    elements: frozenset[Pseudomonomial]

    def __post_init__(self) -> None:
        elems = frozenset(self.elements)
        object.__setattr__(self, "elements", elems)
        full = full_mask(self.n)
        for p in elems:
            if (p.sigma | p.tau) & ~full:
                raise ValueError(f"{p} does not fit in {self.n} neurons")
        for p in elems:
            for q in elems:
                if p != q and divides(p, q):
                    raise ValueError(
                        "canonical form must be an antichain under divisibility")

    def monomials(self) -> frozenset[Pseudomonomial]:
        """Elements with empty tau; they generate the Stanley-Reisner ideal
        of the code's simplicial complex."""
        return frozenset(p for p in self.elements if p.tau == 0)

    def __iter__(self):
        return iter(sorted(self.elements))

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, pm: Pseudomonomial) -> bool:
        return pm in self.elements


def indicator(word: int, n: int) -> Pseudomonomial:
    """Indicator polynomial of a word: 1 at the word, 0 elsewhere."""
    full = full_mask(n)
    if word < 0 or word & ~full:
        raise ValueError(f"word {word} does not fit in {n} neurons")
    return Pseudomonomial(word, full & ~word)


def evaluate(pm: Pseudomonomial, word: int) -> int:
    """Value in {0, 1} of the pseudomonomial at a 0/1 point."""
    return 1 if pm.sigma & ~word == 0 and pm.tau & word == 0 else 0


def divides(p: Pseudomonomial, q: Pseudomonomial) -> bool:
    """Factorwise divisibility. Both arguments share the same ambient n."""
    return p.sigma & ~q.sigma == 0 and p.tau & ~q.tau == 0


def in_neural_ideal(pm: Pseudomonomial, code: Code) -> bool:
    """Membership of a pseudomonomial in the neural ideal of ``code``.

    Two equivalent formulations: the pseudomonomial evaluates to 0 on every
    codeword, or the Boolean interval [sigma, [n] - tau] contains no
    codeword. This uses the interval form; ``_in_ideal_by_evaluation`` is
    the pointwise formulation kept as a cross-check.

    The unit pseudomonomial is never a member: its interval is the whole
    lattice, which always meets a nonempty code.
    """
    n = code.n
    full = full_mask(n)
    if (pm.sigma | pm.tau) & ~full:
        raise ValueError(f"{pm} does not fit in {n} neurons")
    if n <= _TABLE_MAX_N:
        return _interval_bits(n)[pm.sigma, full ^ pm.tau] & code.word_bits == 0
    sigma, tau = pm.sigma, pm.tau
    return not any(sigma & ~w == 0 and tau & w == 0 for w in code.word_list)


def _in_ideal_by_evaluation(pm: Pseudomonomial, code: Code) -> bool:
    return all(evaluate(pm, w) == 0 for w in code.word_list)


def canonical_form(code: Code) -> CanonicalForm:
    """Canonical form of the neural ideal, by exhaustive 3**n enumeration.

    Disjoint (sigma, tau) pairs are visited by increasing |sigma| + |tau|,
    so minimal elements appear before anything they divide and minimality
    reduces to a forward filter against the kept list. The result is
    cached on the code (write-once, idempotent).
    """
    cached = code.__dict__.get("_canonical_form")
    if cached is None:
        cached = _compute_canonical_form(code)
        code.__dict__["_canonical_form"] = cached
    return cached


def _compute_canonical_form(code: Code) -> CanonicalForm:
    n = code.n
    if n > CF_MAX_N:
        raise CapExceededError(
            f"canonical form scans 3**n pairs; n={n} exceeds the cap of {CF_MAX_N}")
    full = full_mask(n)
    if n <= _TABLE_MAX_N:
        table = _interval_bits(n)
        wb = code.word_bits

        def member(sigma: int, tau: int) -> bool:
            return table[sigma, full ^ tau] & wb == 0
    else:
        words = code.word_list

        def member(sigma: int, tau: int) -> bool:
            return not any(sigma & ~w == 0 and tau & w == 0 for w in words)

    kept: list[tuple[int, int]] = []
    for support in _masks_by_popcount(n):
        for sigma in submasks(support):
            tau = support ^ sigma
            if member(sigma, tau) and not any(
                    ps & ~sigma == 0 and pt & ~tau == 0 for ps, pt in kept):
                kept.append((sigma, tau))
    return CanonicalForm(n, frozenset(Pseudomonomial(s, t) for s, t in kept))


def cf_monomials(cf: CanonicalForm) -> frozenset[Pseudomonomial]:
    """The monomials of a canonical form."""
    return cf.monomials()


def primary_decomposition(code: Code) -> frozenset[PrimePseudomonomialIdeal]:
    """Irredundant prime decomposition of the neural ideal.

    Each maximal interval [c, d] of the code contributes the prime whose
    zero set is exactly [c, d]: generated by x_i for i outside d and by
    1 - x_j for j in c. Minimality of the primes makes the intersection
    irredundant.
    """
    full = full_mask(code.n)
    return frozenset(
        PrimePseudomonomialIdeal(full & ~iv.hi, iv.lo)
        for iv in code.maximal_intervals)


def interval_to_pm(iv: Interval, n: int) -> Pseudomonomial:
    """The pseudomonomial with sigma = lo and tau = [n] - hi.

    Restricted to maximal intervals of a code, this lands exactly on the
    canonical form of the complement code's neural ideal; the full
    interval maps to the unit.
    """
    full = full_mask(n)
    if iv.hi & ~full:
        raise ValueError(f"interval endpoint {iv.hi} does not fit {n} neurons")
    return Pseudomonomial(iv.lo, full & ~iv.hi)
