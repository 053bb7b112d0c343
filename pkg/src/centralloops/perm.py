"""Permutations of ``{0, ..., n-1}`` acting on the right.

Maps are written postfix, so ``compose(p, q)`` means "apply ``p``, then ``q``":
the image of ``i`` under ``compose(p, q)`` is ``q(p(i))``.  Every constructor validates bijectivity.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable

__all__ = [
    "Perm",
    "PermError",
    "CycleParseError",
    "identity_perm",
    "compose",
    "compose_all",
    "invert",
    "power",
    "parse_cycles",
    "format_cycles",
]


class PermError(ValueError):
    """Invalid permutation data or incompatible degrees."""

    kind = "perm"


class CycleParseError(PermError):
    """Malformed cycle notation; ``pos`` is the offending character offset."""

    kind = "cycle-parse"

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


@dataclass(frozen=True)
class Perm:
    """A bijection on ``range(degree)``; ``images[i]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        n = len(images)
        if n < 1:
            raise PermError("degree must be at least 1")
        if sorted(images) != list(range(n)):
            raise PermError(f"{images} is not a permutation of 0..{n - 1}")
        object.__setattr__(self, "images", images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: Perm) -> Perm:
        return compose(self, other)

    def __pow__(self, k: int) -> Perm:
        return power(self, k)

    def __invert__(self) -> Perm:
        return invert(self)

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def order(self) -> int:
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point, sorted by that point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cycle.append(j)
                seen[j] = True
                j = self.images[j]
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def __str__(self) -> str:
        return format_cycles(self)

    def __repr__(self) -> str:
        return f"Perm({format_cycles(self)!r}, degree={self.degree})"


def identity_perm(n: int) -> Perm:
    if n < 1:
        raise PermError(f"invalid degree {n}")
    return Perm(tuple(range(n)))


def compose(p: Perm, q: Perm) -> Perm:
    """Right-action composite: first ``p``, then ``q``."""
    if p.degree != q.degree:
        raise PermError(f"degree mismatch: {p.degree} vs {q.degree}")
    qi = q.images
    return Perm(tuple(qi[v] for v in p.images))


def compose_all(perms: Iterable[Perm], n: int) -> Perm:
    """Left-to-right product of ``perms`` (identity of degree ``n`` if empty)."""
    out = identity_perm(n)
    for p in perms:
        out = compose(out, p)
    return out


def invert(p: Perm) -> Perm:
    inv = [0] * p.degree
    for i, v in enumerate(p.images):
        inv[v] = i
    return Perm(tuple(inv))


def power(p: Perm, k: int) -> Perm:
    """``k``-fold composite by repeated squaring; negative ``k`` inverts first."""
    if k < 0:
        p, k = invert(p), -k
    result = identity_perm(p.degree)
    base = p
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


_TOKEN = re.compile(r"\s*(?:(\()|(\))|(\d+)|(\S))")


def parse_cycles(s: str, n: int) -> Perm:
    """Parse disjoint cycle notation such as ``"(0 1 2)(3 4)"`` into a degree-``n`` Perm.

    Points are decimal, separated by whitespace (commas are also accepted).
    Fixed points may be omitted or written as singletons; ``"()"`` and the empty
    string denote the identity.
    """
    if n < 1:
        raise PermError(f"invalid degree {n}")
    images = list(range(n))
    used: set[int] = set()
    pos = 0
    current: list[int] | None = None
    current_start = 0
    text = s.replace(",", " ")
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        tok_pos = m.start(m.lastindex)
        pos = m.end()
        opener, closer, number, junk = m.groups()
        if junk is not None:
            raise CycleParseError(f"unexpected character {junk!r}", tok_pos)
        if opener:
            if current is not None:
                raise CycleParseError("nested '('", tok_pos)
            current, current_start = [], tok_pos
        elif closer:
            if current is None:
                raise CycleParseError("unmatched ')'", tok_pos)
            for a, b in zip(current, current[1:] + current[:1]):
                images[a] = b
            current = None
        else:
            if current is None:
                raise CycleParseError("point outside parentheses", tok_pos)
            point = int(number)
            if point >= n:
                raise CycleParseError(f"point {point} out of range for degree {n}", tok_pos)
            if point in used:
                raise CycleParseError(f"repeated point {point}", tok_pos)
            used.add(point)
            current.append(point)
    if current is not None:
        raise CycleParseError("unclosed '('", current_start)
    return Perm(tuple(images))


def format_cycles(p: Perm) -> str:
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)
