"""Autotopisms of finite loops and the CS-autotopism construction for C-loops.

An autotopism of ``L`` is a triple ``(U, V, W)`` of permutations with
``U(x) * V(y) == W(x * y)`` for all ``x, y``.  Triples compose componentwise
in the right-action convention of :mod:`centralloops.perm`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import identities
from .magma import LoopStructure, element_power, left_translation, right_translation
from .perm import Perm, compose, identity_perm, invert, power

__all__ = [
    "AutotopismError",
    "NotCLoopError",
    "OrderTooLargeError",
    "BracketingError",
    "Autotopism",
    "CsPair",
    "ConstructedPair",
    "verify",
    "identity_atp",
    "compose_atp",
    "invert_atp",
    "lc_autotopism",
    "rc_autotopism",
    "cs_pair",
    "constructed_autotopism",
    "enumerate_autotopisms",
    "ENUMERATION_MAX_ORDER",
]

ENUMERATION_MAX_ORDER = 8


class AutotopismError(ValueError):
    """The triple fails ``U(x) V(y) = W(xy)``; ``witness`` is the first failing ``(x, y)``."""

    kind = "not-autotopism"

    def __init__(self, message: str, witness: tuple[int, int] | None = None):
        super().__init__(message)
        self.witness = witness


class NotCLoopError(ValueError):
    kind = "not-c-loop"

    def __init__(self, report: identities.IdentityReport):
        super().__init__(f"loop is not a C-loop: {report}")
        self.report = report


class OrderTooLargeError(ValueError):
    kind = "order-too-large"


class BracketingError(ValueError):
    """``(x^-2 z) x^2`` and ``x^-2 (z x^2)`` differ, so the square is not nuclear."""

    kind = "not-nuclear-square"


@dataclass(frozen=True)
class Autotopism:
    U: Perm
    V: Perm
    W: Perm

    def __post_init__(self):
        if not (self.U.degree == self.V.degree == self.W.degree):
            raise AutotopismError(
                f"component degrees differ: {self.U.degree}, {self.V.degree}, {self.W.degree}"
            )

    @property
    def order(self) -> int:
        return self.U.degree

    def components(self) -> tuple[Perm, Perm, Perm]:
        return (self.U, self.V, self.W)

    def is_identity(self) -> bool:
        return self.U.is_identity() and self.V.is_identity() and self.W.is_identity()

    def key(self) -> tuple[tuple[int, ...], ...]:
        """Sort key: component image tuples in order."""
        return (self.U.images, self.V.images, self.W.images)

    def __str__(self) -> str:
        return f"({self.U}, {self.V}, {self.W})"


def _failure(L: LoopStructure, U: Perm, V: Perm, W: Perm) -> tuple[int, int] | None:
    t = L.table
    u = np.asarray(U.images)
    v = np.asarray(V.images)
    w = np.asarray(W.images)
    bad = np.argwhere(t[u[:, None], v[None, :]] != w[t])
    if bad.size:
        return int(bad[0][0]), int(bad[0][1])
    return None


def is_autotopism(L: LoopStructure, U: Perm, V: Perm, W: Perm) -> bool:
    if not (U.degree == V.degree == W.degree == L.order):
        return False
    return _failure(L, U, V, W) is None


def verify(L: LoopStructure, U: Perm, V: Perm, W: Perm) -> Autotopism:
    """Return ``Autotopism(U, V, W)`` after checking every pair, else raise with a witness."""
    for name, p in (("U", U), ("V", V), ("W", W)):
        if p.degree != L.order:
            raise AutotopismError(f"{name} has degree {p.degree}, loop has order {L.order}")
    w = _failure(L, U, V, W)
    if w is not None:
        x, y = w
        lhs = L.mul(U(x), V(y))
        rhs = W(L.mul(x, y))
        raise AutotopismError(
            f"U(x)V(y) != W(xy) at x={x}, y={y}: {U(x)}*{V(y)} = {lhs} but W({L.mul(x, y)}) = {rhs}",
            witness=w,
        )
    return Autotopism(U, V, W)


def identity_atp(n: int) -> Autotopism:
    i = identity_perm(n)
    return Autotopism(i, i, i)


def compose_atp(a: Autotopism, b: Autotopism, loop: LoopStructure | None = None) -> Autotopism:
    """Componentwise ``a`` then ``b``; re-verified when ``loop`` is given."""
    if a.order != b.order:
        raise AutotopismError(f"order mismatch: {a.order} vs {b.order}")
    U, V, W = (compose(p, q) for p, q in zip(a.components(), b.components()))
    if loop is not None:
        return verify(loop, U, V, W)
    return Autotopism(U, V, W)


def invert_atp(a: Autotopism, loop: LoopStructure | None = None) -> Autotopism:
    U, V, W = (invert(p) for p in a.components())
    if loop is not None:
        return verify(loop, U, V, W)
    return Autotopism(U, V, W)


def lc_autotopism(L: LoopStructure, x: int) -> Autotopism:
    """``(L_x^2, I, L_x^2)``; raises ``AutotopismError`` unless it is an autotopism."""
    lx2 = power(left_translation(L, x), 2)
    return verify(L, lx2, identity_perm(L.order), lx2)


def rc_autotopism(L: LoopStructure, x: int) -> Autotopism:
    """``(I, R_x^2, R_x^2)``; raises ``AutotopismError`` unless it is an autotopism."""
    rx2 = power(right_translation(L, x), 2)
    return verify(L, identity_perm(L.order), rx2, rx2)


@dataclass(frozen=True)
class CsPair:
    """The CS-autotopisms ``first = base (L_x^2, I, L_x^2)`` and ``second = base (I, R_x^2, R_x^2)``."""

    first: Autotopism
    second: Autotopism
    x: int
    base: Autotopism

    def relation_failures(self, L: LoopStructure) -> list[str]:
        """Names of the four defining relations that do not hold (empty when all do)."""
        S1, T1, R1 = self.first.components()
        S2, T2, R2 = self.second.components()
        lx2 = power(left_translation(L, self.x), 2)
        rx2 = power(right_translation(L, self.x), 2)
        checks = {
            "L_x^2 = S2^-1 S1": lx2 == compose(invert(S2), S1),
            "R_x^2 = T1^-1 T2": rx2 == compose(invert(T1), T2),
            "R_x^-2 L_x^2 = R2^-1 R1": compose(invert(rx2), lx2) == compose(invert(R2), R1),
            "R1^-1 R2 T2^-1 T1 S2^-1 S1 = I": _chain(
                invert(R1), R2, invert(T2), T1, invert(S2), S1
            ).is_identity(),
        }
        return [name for name, ok in checks.items() if not ok]


def _chain(*perms: Perm) -> Perm:
    out = perms[0]
    for p in perms[1:]:
        out = compose(out, p)
    return out


def _require_c_loop(L: LoopStructure) -> None:
    report = identities.is_c(L)
    if not report.holds:
        raise NotCLoopError(report)


def cs_pair(L: LoopStructure, x: int, base: Autotopism | None = None) -> CsPair:
    _require_c_loop(L)
    if base is None:
        base = identity_atp(L.order)
    else:
        base = verify(L, *base.components())
    first = compose_atp(base, lc_autotopism(L, x), L)
    second = compose_atp(base, rc_autotopism(L, x), L)
    return CsPair(first, second, int(x), base)


@dataclass(frozen=True)
class ConstructedPair:
    """``forward = (a1 S2, b1 T2, g1 R2)`` and its inverse ``(a2 S1, b2 T1, g2 R1)``."""

    forward: Autotopism
    inverse: Autotopism
    x: int
    square: int
    trivial: bool


def conjugation_by_square(L: LoopStructure, x: int) -> Perm:
    """``z -> (x^-2 z) x^2``, checked against the other bracketing ``x^-2 (z x^2)``."""
    s = element_power(L, x, 2)
    s_inv = element_power(L, x, -2)
    t = L.table
    left_first = t[t[s_inv], s]
    right_first = t[s_inv, t[:, s]]
    bad = np.flatnonzero(left_first != right_first)
    if bad.size:
        z = int(bad[0])
        raise BracketingError(
            f"bracketings of x^-2 z x^2 disagree at x={x}, z={z}: "
            f"{int(left_first[z])} vs {int(right_first[z])}"
        )
    return Perm(tuple(left_first.tolist()))


def constructed_autotopism(L: LoopStructure, x: int) -> ConstructedPair:
    """The autotopism built from ``x`` in a C-loop, and its inverse.

    ``forward = (L_{x^2}^-1, R_{x^2}, z -> (x^-2 z) x^2)``.  When ``x^2 = e``
    both triples are the identity and the pair is flagged ``trivial``.
    """
    _require_c_loop(L)
    n = L.order
    s = element_power(L, x, 2)
    if s == L.identity:
        ident = identity_atp(n)
        return ConstructedPair(ident, ident, int(x), s, True)
    alpha = invert(left_translation(L, s))
    beta = right_translation(L, s)
    gamma = conjugation_by_square(L, x)
    forward = verify(L, alpha, beta, gamma)
    inverse = invert_atp(forward, L)
    return ConstructedPair(forward, inverse, int(x), s, False)


def enumerate_autotopisms(L: LoopStructure) -> list[Autotopism]:
    """Every autotopism of ``L`` by exhaustive search (orders up to 8).

    For a loop, ``(x e) W = U(x) V(e)`` and ``(e y) W = U(e) V(y)``, so ``U``
    and the value ``b = V(e)`` determine ``W`` and ``V``.  All ``n! * n``
    candidates are built with numpy and filtered by the full defining equation.
    Output is sorted by component image tuples.
    """
    n = L.order
    if n > ENUMERATION_MAX_ORDER:
        raise OrderTooLargeError(
            f"order {n} exceeds the enumeration limit {ENUMERATION_MAX_ORDER}"
        )
    t = L.table
    e = L.identity
    ldiv = L._ldiv
    us = np.array(list(itertools.permutations(range(n))), dtype=np.int64)  # (P, n)
    xy = t  # (n, n) -> x*y
    found: list[Autotopism] = []
    for b in range(n):
        w = t[us, b]  # W(x) = U(x) * b
        a = us[:, e]  # U(e)
        v = ldiv[a[:, None], w]  # V(y) = a \ W(y)
        lhs = t[us[:, :, None], v[:, None, :]]  # (P, n, n): U(x) * V(y)
        rhs = np.take_along_axis(w, xy.reshape(1, -1), axis=1).reshape(-1, n, n)
        ok = (lhs == rhs).all(axis=(1, 2))
        for k in np.flatnonzero(ok):
            found.append(
                Autotopism(Perm(tuple(us[k].tolist())), Perm(tuple(v[k].tolist())), Perm(tuple(w[k].tolist())))
            )
    found.sort(key=Autotopism.key)
    return found
