"""Triple systems of CS-autotopisms and Steiner-triple-system axiom checks."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Hashable, Sequence

from . import identities
from .autotopism import Autotopism, NotCLoopError, compose_atp, cs_pair, identity_atp
from .magma import LoopStructure

__all__ = [
    "SteinerInputError",
    "EmptyFamilyError",
    "TripleSystem",
    "StsReport",
    "CardinalityReport",
    "build_cs_family",
    "verify_sts",
    "cardinality_check",
]

log = logging.getLogger(__name__)


class SteinerInputError(ValueError):
    kind = "steiner-input"


class EmptyFamilyError(ValueError):
    kind = "empty-family"


@dataclass(frozen=True)
class TripleSystem:
    """Ground set ``points`` and triples given as index 3-tuples into it.

    ``provenance[k]`` lists the ``(base_index, x)`` pairs that produced triple
    ``k`` (empty for hand-built systems).
    """

    points: tuple[Hashable, ...]
    triples: tuple[tuple[int, int, int], ...]
    provenance: tuple[tuple[tuple[int, int], ...], ...] = field(default=())

    def __post_init__(self):
        if len(set(self.points)) != len(self.points):
            raise ValueError("ground set contains duplicate points")
        for tr in self.triples:
            if len(tr) != 3 or not all(0 <= i < len(self.points) for i in tr):
                raise ValueError(f"malformed triple {tr}")

    @classmethod
    def on_points(cls, points: Sequence[Hashable], triples: Sequence[Sequence[Hashable]]) -> TripleSystem:
        """Build from triples written with the points themselves."""
        index = {p: i for i, p in enumerate(points)}
        return cls(tuple(points), tuple(tuple(index[p] for p in tr) for tr in triples))


def build_cs_family(L: LoopStructure, bases: Sequence[Autotopism] | None = None) -> TripleSystem:
    """Collect ``{first, second, first*second}`` for every base and every ``x`` with ``x^2 != e``.

    Bases are taken in the given order (default: the identity triple), ``x``
    in element order.  Equal autotopisms share one ground-set point and equal
    triples are recorded once, keeping every ``(base_index, x)`` that produced
    them.  Triples whose members coincide are dropped and logged.
    """
    c = identities.is_c(L)
    if not c.holds:
        raise NotCLoopError(c)
    if identities.is_steiner(L).holds:
        raise SteinerInputError("loop is a Steiner loop; the family is defined for non-Steiner C-loops")
    if bases is None:
        bases = [identity_atp(L.order)]
    if not bases:
        raise ValueError("at least one base autotopism is required")

    points: list[Autotopism] = []
    index: dict[Autotopism, int] = {}
    triples: dict[frozenset[int], tuple[int, int, int]] = {}
    provenance: dict[frozenset[int], list[tuple[int, int]]] = {}

    def point(a: Autotopism) -> int:
        if a not in index:
            index[a] = len(points)
            points.append(a)
        return index[a]

    for b, base in enumerate(bases):
        for x in range(L.order):
            if L.square(x) == L.identity:
                continue
            pair = cs_pair(L, x, base)
            product = compose_atp(pair.first, pair.second, L)
            members = (point(pair.first), point(pair.second), point(product))
            key = frozenset(members)
            if len(key) < 3:
                log.info("dropping degenerate triple from base %d, x=%d: members %s", b, x, members)
                continue
            triples.setdefault(key, members)
            provenance.setdefault(key, []).append((b, x))

    if not triples:
        raise EmptyFamilyError("every generated triple was degenerate")
    # points that only appeared in dropped triples are kept: they are still CS-autotopisms
    return TripleSystem(
        tuple(points),
        tuple(triples.values()),
        tuple(tuple(provenance[k]) for k in triples),
    )


@dataclass(frozen=True)
class StsReport:
    holds: bool
    distinct_members: bool
    pairs_covered_once: bool
    bad_triple: tuple[int, ...] | None = None
    bad_pair: tuple[int, int] | None = None
    pair_count: int | None = None  # number of triples containing ``bad_pair``

    def lines(self) -> list[str]:
        out = [f"axiom (i) distinct members: {'pass' if self.distinct_members else 'fail'}"]
        if self.bad_triple is not None:
            out.append(f"  offending triple: {self.bad_triple}")
        out.append(f"axiom (ii) unique covering triple: {'pass' if self.pairs_covered_once else 'fail'}")
        if self.bad_pair is not None:
            out.append(f"  offending pair: {self.bad_pair} lies in {self.pair_count} triples")
        out.append(f"steiner triple system: {'yes' if self.holds else 'no'}")
        return out


def verify_sts(t: TripleSystem) -> StsReport:
    """Check both axioms; the first offending triple / pair (lexicographic) is reported."""
    bad_triple = next((tr for tr in t.triples if len(set(tr)) != 3), None)
    counts: dict[tuple[int, int], int] = {}
    for tr in t.triples:
        for a, b in itertools.combinations(sorted(set(tr)), 2):
            counts[(a, b)] = counts.get((a, b), 0) + 1
    bad_pair = None
    for pair in itertools.combinations(range(len(t.points)), 2):
        if counts.get(pair, 0) != 1:
            bad_pair = pair
            break
    distinct = bad_triple is None
    covered = bad_pair is None
    return StsReport(
        distinct and covered,
        distinct,
        covered,
        bad_triple,
        bad_pair,
        None if bad_pair is None else counts.get(bad_pair, 0),
    )


@dataclass(frozen=True)
class CardinalityReport:
    triples: int
    residue: int
    holds: bool
    points: int
    points_residue: int

    def lines(self) -> list[str]:
        return [
            f"triples: {self.triples} ({self.triples} mod 6 = {self.residue}): "
            f"{'pass' if self.holds else 'fail'}",
            f"points: {self.points} ({self.points} mod 6 = {self.points_residue})",
        ]


def cardinality_check(t: TripleSystem) -> CardinalityReport:
    """Whether the number of triples is 1 or 3 mod 6 (point count reported alongside)."""
    r = len(t.triples)
    v = len(t.points)
    return CardinalityReport(r, r % 6, r % 6 in (1, 3), v, v % 6)
