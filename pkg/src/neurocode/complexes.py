"""Polarization and the simplicial complexes attached to a neural code.

Vertices live either on [n] (plain universe) or on [n] together with a
barred copy [n-bar] (polar universe). A barred vertex i-bar is encoded as
bit n + i - 1, so every face is a single integer mask and face queries are
mask containment tests against a facet antichain.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .codes import Code, Interval, full_mask, neurons_from_mask
from .ideals import (
    CapExceededError,
    Pseudomonomial,
    canonical_form,
    primary_decomposition,
)

# prime_sets enumerates 2**n barred candidates; same spirit as the
# canonical-form cap.
ENUM_MAX_N = 12


@dataclass(frozen=True, order=True)
class PolarFace:
    """Subset of the doubled vertex set, split into plain and barred parts.

    The parts need not be disjoint: i and i-bar may both occur.
    """

    xpart: int
    ypart: int

    def __post_init__(self) -> None:
        if self.xpart < 0 or self.ypart < 0:
            raise ValueError("face parts must be subset masks")

    def mask(self, n: int) -> int:
        """Pack into a 2n-bit mask (barred vertex i-bar at bit n + i - 1)."""
        if (self.xpart | self.ypart) & ~full_mask(n):
            raise ValueError(f"face {self} does not fit in {n} neurons")
        return self.xpart | self.ypart << n

    @classmethod
    def from_mask(cls, mask: int, n: int) -> "PolarFace":
        return cls(mask & full_mask(n), mask >> n)

    def __str__(self) -> str:
        xs = neurons_from_mask(self.xpart)
        ys = neurons_from_mask(self.ypart)
        if not xs and not ys:
            return "{}"
        if max(xs, default=0) <= 9 and max(ys, default=0) <= 9:
            return "".join(map(str, xs)) + "".join(f"~{j}" for j in ys)
        left = "{" + ",".join(map(str, xs)) + "}"
        right = "~{" + ",".join(map(str, ys)) + "}"
        return left + right


@dataclass(frozen=True)
class Universe:
    """Vertex universe of a complex: [n] alone, or [n] with its barred copy."""

    n: int
    polar: bool

    @property
    def size(self) -> int:
        return 2 * self.n if self.polar else self.n

    @property
    def full(self) -> int:
        return (1 << self.size) - 1


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex stored by its facets over a declared universe.

    A mask is a face exactly when some facet contains it; the facets must
    form an antichain.
    """

    universe: Universe
    facets: frozenset[int]

    def __post_init__(self) -> None:
        facets = frozenset(self.facets)
        object.__setattr__(self, "facets", facets)
        full = self.universe.full
        for f in facets:
            if f < 0 or f & ~full:
                raise ValueError(f"facet {f} outside the universe")
        for f in facets:
            if any(f != g and f & ~g == 0 for g in facets):
                raise ValueError("facets must form an antichain")

    @classmethod
    def from_faces(cls, universe: Universe, faces: Iterable[int]) -> "SimplicialComplex":
        """Build from any face family by keeping the maximal ones."""
        fs = set(faces)
        return cls(universe, frozenset(
            f for f in fs if not any(f != g and f & ~g == 0 for g in fs)))

    def is_face(self, mask: int) -> bool:
        return any(mask & ~f == 0 for f in self.facets)

    def polar_facets(self) -> frozenset[PolarFace]:
        if not self.universe.polar:
            raise ValueError("plain complexes have no barred rendering")
        n = self.universe.n
        return frozenset(PolarFace.from_mask(f, n) for f in self.facets)


@dataclass(frozen=True)
class SquarefreeMonomialIdeal:
    """Squarefree monomial ideal, held as its minimal generator supports."""

    universe: Universe
    generators: frozenset[int]

    def __post_init__(self) -> None:
        gens = frozenset(self.generators)
        object.__setattr__(self, "generators", gens)
        full = self.universe.full
        for g in gens:
            if g <= 0 or g & ~full:
                raise ValueError(f"generator support {g} invalid for the universe")
        for g in gens:
            if any(g != h and g & ~h == 0 for h in gens):
                raise ValueError("generators must form an antichain")

    @classmethod
    def from_supports(cls, universe: Universe, supports: Iterable[int]) -> "SquarefreeMonomialIdeal":
        """Build from any support family by keeping the minimal ones."""
        sup = set(supports)
        return cls(universe, frozenset(
            g for g in sup if not any(h != g and h & ~g == 0 for h in sup)))

    def contains_monomial(self, support: int) -> bool:
        """Squarefree monomial membership: some generator divides it."""
        return any(g & ~support == 0 for g in self.generators)

    def generator_faces(self) -> frozenset[PolarFace]:
        if not self.universe.polar:
            raise ValueError("plain ideals have no barred rendering")
        n = self.universe.n
        return frozenset(PolarFace.from_mask(g, n) for g in self.generators)


def minimal_transversals(edges: Iterable[int]) -> frozenset[int]:
    """All minimal hitting sets of a family of vertex masks.

    Processes one edge at a time: transversals already hitting it survive,
    the rest are extended by one vertex of the edge, and the result is
    pruned back to an antichain (Berge multiplication). An empty edge
    admits no transversal at all.
    """
    trans: list[int] = [0]
    for e in sorted(set(edges)):
        if e == 0:
            return frozenset()
        # transversals hitting the edge stay minimal; only extensions of the
        # missers need pruning (against everything kept, ascending by size)
        kept: list[int] = []
        extended = set()
        for t in trans:
            if t & e:
                kept.append(t)
                continue
            v = e
            while v:
                bit = v & -v
                v ^= bit
                extended.add(t | bit)
        for a in sorted(extended, key=int.bit_count):
            if not any(k & ~a == 0 for k in kept):
                kept.append(a)
        trans = kept
    return frozenset(trans)


def polarize(pm: Pseudomonomial) -> PolarFace:
    """Replace each factor 1 - x_j by the fresh vertex j-bar."""
    return PolarFace(pm.sigma, pm.tau)


def downward_closure(code: Code) -> SimplicialComplex:
    """Smallest simplicial complex containing the code.

    Its facets are the maximal codewords.
    """
    return SimplicialComplex(Universe(code.n, polar=False), code.maximal_codewords)


def polar_ideal(code: Code) -> SquarefreeMonomialIdeal:
    """Polarization of the neural ideal: the polarized canonical form."""
    cached = code.__dict__.get("_polar_ideal")
    if cached is None:
        n = code.n
        cf = canonical_form(code)
        cached = SquarefreeMonomialIdeal.from_supports(
            Universe(n, polar=True),
            (pm.sigma | pm.tau << n for pm in cf.elements))
        code.__dict__["_polar_ideal"] = cached
    return cached


def factor_ideal(code: Code) -> SquarefreeMonomialIdeal:
    """Intersection of the polarized primes of the neural ideal.

    An intersection of monomial primes is generated by the minimal
    transversals of their variable sets (distribute one variable per
    prime, reduce to the minimal antichain).
    """
    cached = code.__dict__.get("_factor_ideal")
    if cached is None:
        n = code.n
        prime_vars = [p.pos | p.neg << n for p in primary_decomposition(code)]
        cached = SquarefreeMonomialIdeal(
            Universe(n, polar=True), minimal_transversals(prime_vars))
        code.__dict__["_factor_ideal"] = cached
    return cached


def complex_of_ideal(ideal: SquarefreeMonomialIdeal) -> SimplicialComplex:
    """The complex whose non-faces are the supports containing a generator.

    Facets are complements of minimal transversals of the generator
    hypergraph; the zero ideal gives the full simplex.
    """
    full = ideal.universe.full
    return SimplicialComplex(ideal.universe, frozenset(
        full & ~t for t in minimal_transversals(ideal.generators)))


def ideal_of_complex(cx: SimplicialComplex) -> SquarefreeMonomialIdeal:
    """Stanley-Reisner ideal of a complex: its minimal non-faces.

    Round-trips with ``complex_of_ideal`` on both sides.
    """
    full = cx.universe.full
    return SquarefreeMonomialIdeal(cx.universe, minimal_transversals(
        full & ~f for f in cx.facets))


def factor_complex(code: Code) -> SimplicialComplex:
    """The complex on [n] + [n-bar] whose Stanley-Reisner ideal is the
    factor ideal.

    Facets come straight from maximal intervals: [c, d] maps to d together
    with the barred copy of [n] - c. Every facet is effective. Cached on
    the code.
    """
    cached = code.__dict__.get("_factor_complex")
    if cached is None:
        n = code.n
        full = full_mask(n)
        facets = frozenset(
            iv.hi | (full & ~iv.lo) << n for iv in code.maximal_intervals)
        cached = SimplicialComplex(Universe(n, polar=True), facets)
        code.__dict__["_factor_complex"] = cached
    return cached


def polar_complex(code: Code) -> SimplicialComplex:
    """The complex whose Stanley-Reisner ideal is the polar ideal.

    Contains the factor complex; its effective facets are exactly the
    factor complex's facets.
    """
    cached = code.__dict__.get("_polar_complex")
    if cached is None:
        cached = complex_of_ideal(polar_ideal(code))
        code.__dict__["_polar_complex"] = cached
    return cached


def is_effective(face: PolarFace, n: int) -> bool:
    """True when the face contains i or i-bar for every i in [n]."""
    full = full_mask(n)
    if (face.xpart | face.ypart) & ~full:
        raise ValueError(f"face {face} does not fit in {n} neurons")
    return (face.xpart | face.ypart) == full


def face_to_interval(face: PolarFace, n: int) -> Interval:
    """Inverse of the interval-to-face map, defined on effective faces.

    Returns [c, d] with d the plain part and c the complement of the
    barred part; effectiveness guarantees c <= d.
    """
    if not is_effective(face, n):
        raise ValueError(f"defective face {face} has no interval preimage")
    return Interval(full_mask(n) & ~face.ypart, face.xpart)


def prime_sets(code: Code, minimal_only: bool = True) -> frozenset[PolarFace]:
    """Barred sets B-bar with [n] + B-bar not a face of the code's factor
    complex (optionally only the inclusion-minimal ones).

    All 2**n candidates are enumerated, including the empty set (a
    prime-set exactly when [n] itself is not a face), rather than derived
    from minimal primes; this keeps the codeword and prime
    correspondences independently checkable. Results carry an empty plain part.
    """
    n = code.n
    if n > ENUM_MAX_N:
        raise CapExceededError(
            f"prime-set enumeration scans 2**n candidates; n={n} exceeds "
            f"the cap of {ENUM_MAX_N}")
    key = "_prime_sets_min" if minimal_only else "_prime_sets_all"
    cached = code.__dict__.get(key)
    if cached is not None:
        return cached
    facets = tuple(factor_complex(code).facets)
    full = full_mask(n)
    found = [b for b in range(1 << n)
             if not any((full | b << n) & ~f == 0 for f in facets)]
    if minimal_only:
        found = [b for b in found
                 if not any(c != b and c & ~b == 0 for c in found)]
    result = frozenset(PolarFace(0, b) for b in found)
    code.__dict__[key] = result
    return result


def sr_minimal_primes(code: Code) -> frozenset[int]:
    """Variable sets of the minimal primes of the Stanley-Reisner ideal of
    the code's complex: one per facet, the variables outside it.

    Facets of the code's complex are the maximal codewords, so these are
    the complements of maximal codewords.
    """
    full = full_mask(code.n)
    return frozenset(full & ~m for m in code.maximal_codewords)
