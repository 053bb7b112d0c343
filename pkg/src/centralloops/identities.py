"""Exhaustive checks of the loop identities used by the autotopism construction.

Each checker returns an :class:`IdentityReport`.  A failing report carries the
lexicographically first counterexample, ordered by the variable names listed
in the clause (``x``, then ``y``, then ``z``).  Re-evaluating the clause at the
witness with :func:`holds_at` must fail again.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from .magma import LoopStructure, PowerAmbiguityError, _power_table

__all__ = [
    "IdentityReport",
    "IDENTITIES",
    "check",
    "holds_at",
    "counterexamples",
    "is_lc",
    "is_rc",
    "is_c",
    "is_left_alternative",
    "is_right_alternative",
    "is_alternative",
    "is_power_associative",
    "is_nuclear_square",
    "is_steiner",
    "is_associative",
    "is_commutative",
]


@dataclass(frozen=True)
class IdentityReport:
    name: str
    holds: bool
    witness: tuple[int, ...] | None = None
    clause: str | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.holds

    def __str__(self) -> str:
        if self.holds:
            return f"{self.name}: holds"
        w = ",".join(map(str, self.witness or ()))
        clause = f" clause={self.clause}" if self.clause else ""
        detail = f" ({self.detail})" if self.detail else ""
        return f"{self.name}: fails{clause} witness=({w}){detail}"


@dataclass(frozen=True)
class _Clause:
    name: str
    variables: tuple[str, ...]
    # scalar form, independent of the vectorised search
    pointwise: Callable[..., bool]
    text: str


def _m(L: LoopStructure) -> Callable[[int, int], int]:
    t = L.table
    return lambda a, b: int(t[a, b])


def _lc(L, x, y, z):
    m = _m(L)
    return m(m(x, x), m(y, z)) == m(m(x, m(x, y)), z)


def _rc(L, x, y, z):
    m = _m(L)
    return m(m(z, y), m(x, x)) == m(z, m(m(y, x), x))


def _c(L, x, y, z):
    m = _m(L)
    return m(x, m(y, m(y, z))) == m(m(m(x, y), y), z)


def _assoc(L, x, y, z):
    m = _m(L)
    return m(m(x, y), z) == m(x, m(y, z))


def _lalt(L, x, y):
    m = _m(L)
    return m(x, m(x, y)) == m(m(x, x), y)


def _ralt(L, x, y):
    m = _m(L)
    return m(m(y, x), x) == m(y, m(x, x))


def _nuc_left(L, x, y, z):
    m = _m(L)
    s = m(x, x)
    return m(m(s, y), z) == m(s, m(y, z))


def _nuc_mid(L, x, y, z):
    m = _m(L)
    s = m(x, x)
    return m(m(y, s), z) == m(y, m(s, z))


def _nuc_right(L, x, y, z):
    m = _m(L)
    s = m(x, x)
    return m(m(y, z), s) == m(y, m(z, s))


def _exp2(L, x):
    return int(L.table[x, x]) == L.identity


def _rinv(L, x, y):
    m = _m(L)
    return m(m(y, x), x) == y


def _comm(L, x, y):
    m = _m(L)
    return m(x, y) == m(y, x)


def _pa(L, x):
    try:
        _power_table(L, x)
    except PowerAmbiguityError:
        return False
    return True


IDENTITIES: dict[str, tuple[_Clause, ...]] = {
    "lc": (_Clause("lc", ("x", "y", "z"), _lc, "(xx)(yz) = (x(xy))z"),),
    "rc": (_Clause("rc", ("x", "y", "z"), _rc, "(zy)(xx) = z((yx)x)"),),
    "c": (_Clause("c", ("x", "y", "z"), _c, "x(y(yz)) = ((xy)y)z"),),
    "associative": (_Clause("associative", ("x", "y", "z"), _assoc, "(xy)z = x(yz)"),),
    "left-alternative": (_Clause("left-alternative", ("x", "y"), _lalt, "x(xy) = (xx)y"),),
    "right-alternative": (_Clause("right-alternative", ("x", "y"), _ralt, "(yx)x = y(xx)"),),
    "alternative": (
        _Clause("left-alternative", ("x", "y"), _lalt, "x(xy) = (xx)y"),
        _Clause("right-alternative", ("x", "y"), _ralt, "(yx)x = y(xx)"),
    ),
    "power-associative": (
        _Clause("power-associative", ("x",), _pa, "all bracketings of x^k agree"),
    ),
    "nuclear-square": (
        _Clause("left-nucleus", ("x", "y", "z"), _nuc_left, "(x²y)z = x²(yz)"),
        _Clause("middle-nucleus", ("x", "y", "z"), _nuc_mid, "(yx²)z = y(x²z)"),
        _Clause("right-nucleus", ("x", "y", "z"), _nuc_right, "(yz)x² = y(zx²)"),
    ),
    "steiner": (
        _Clause("exponent-2", ("x",), _exp2, "x² = e"),
        _Clause("right-inverse", ("x", "y"), _rinv, "(yx)x = y"),
        _Clause("commutative", ("x", "y"), _comm, "xy = yx"),
    ),
    "commutative": (_Clause("commutative", ("x", "y"), _comm, "xy = yx"),),
}


def _clause(name: str, clause: str | None) -> _Clause:
    clauses = IDENTITIES[name]
    if clause is None:
        if len(clauses) != 1:
            raise ValueError(f"identity {name!r} has several clauses; name one")
        return clauses[0]
    for c in clauses:
        if c.name == clause:
            return c
    raise KeyError(f"identity {name!r} has no clause {clause!r}")


def holds_at(L: LoopStructure, name: str, witness: tuple[int, ...], clause: str | None = None) -> bool:
    """Scalar re-evaluation of one identity clause at a specific tuple."""
    return _clause(name, clause).pointwise(L, *witness)


def counterexamples(L: LoopStructure, name: str, clause: str | None = None) -> Iterator[tuple[int, ...]]:
    """Every failing tuple of one clause, in lexicographic order (brute force, scalar)."""
    c = _clause(name, clause)
    for args in itertools.product(range(L.order), repeat=len(c.variables)):
        if not c.pointwise(L, *args):
            yield args


def _first_failure(mask_for_x: Callable[[int], np.ndarray], n: int) -> tuple[int, ...] | None:
    """Lexicographically first ``(x, *rest)`` where the per-``x`` mask is False."""
    for x in range(n):
        ok = mask_for_x(x)
        if ok is True or (ok is not False and ok.all()):
            continue
        if ok is False:
            return (x,)
        rest = np.argwhere(~ok)[0]
        return (x, *map(int, rest))
    return None


def _vector_masks(L: LoopStructure) -> dict[str, Callable[[int], np.ndarray]]:
    t = L.table
    n = L.order
    idx = np.arange(n)
    e = L.identity

    def lc(x):  # over (y, z)
        s = t[x, x]
        return t[s, t] == t[t[x, t[x]], :]

    def rc(x):  # over (y, z): (zy)(xx) vs z((yx)x)
        s = t[x, x]
        lhs = t[t.T, s]  # [y, z] -> (z*y)*s
        yxx = t[t[:, x], x]  # y -> (yx)x
        rhs = t[:, yxx].T  # [y, z] -> z * yxx[y]
        return lhs == rhs

    def c(x):
        yyz = t[idx[:, None], t]  # [y, z] -> y(yz)
        lhs = t[x, yyz]
        xyy = t[t[x], idx]  # y -> (xy)y
        rhs = t[xyy, :]
        return lhs == rhs

    def assoc(x):
        return t[t[x], :] == t[x, t]

    def lalt(x):
        return t[x, t[x]] == t[t[x, x]]

    def ralt(x):  # over y
        return t[t[:, x], x] == t[:, t[x, x]]

    def nuc_left(x):
        s = t[x, x]
        return t[t[s], :] == t[s, t]

    def nuc_mid(x):
        s = t[x, x]
        return t[t[:, s], :] == t[idx[:, None], t[s][None, :]]

    def nuc_right(x):
        s = t[x, x]
        return t[t, s] == t[idx[:, None], t[:, s][None, :]]

    def exp2(x):
        return bool(t[x, x] == e)

    def rinv(x):
        return t[t[:, x], x] == idx

    def comm(x):
        return t[x] == t[:, x]

    def pa(x):
        return _pa(L, x)

    return {
        "lc": lc,
        "rc": rc,
        "c": c,
        "associative": assoc,
        "left-alternative": lalt,
        "right-alternative": ralt,
        "power-associative": pa,
        "left-nucleus": nuc_left,
        "middle-nucleus": nuc_mid,
        "right-nucleus": nuc_right,
        "exponent-2": exp2,
        "right-inverse": rinv,
        "commutative": comm,
    }


def check(L: LoopStructure, name: str) -> IdentityReport:
    """Run the named identity (see ``IDENTITIES``) exhaustively over ``L``."""
    if name not in IDENTITIES:
        raise KeyError(f"unknown identity {name!r}; choose from {sorted(IDENTITIES)}")
    masks = _vector_masks(L)
    for c in IDENTITIES[name]:
        w = _first_failure(masks[c.name], L.order)
        if w is not None:
            clause = c.name if len(IDENTITIES[name]) > 1 else None
            return IdentityReport(name, False, w, clause, _describe(L, c, w))
    return IdentityReport(name, True)


def _describe(L: LoopStructure, c: _Clause, w: tuple[int, ...]) -> str:
    binding = ", ".join(f"{v}={a}" for v, a in zip(c.variables, w))
    if c.name == "exponent-2":
        x = w[0]
        return f"{x}^2 = {L.square(x)} != {L.identity}"
    return f"{c.text} fails at {binding}"


def is_lc(L: LoopStructure) -> IdentityReport:
    return check(L, "lc")


def is_rc(L: LoopStructure) -> IdentityReport:
    return check(L, "rc")


def is_c(L: LoopStructure) -> IdentityReport:
    return check(L, "c")


def is_associative(L: LoopStructure) -> IdentityReport:
    return check(L, "associative")


def is_left_alternative(L: LoopStructure) -> IdentityReport:
    return check(L, "left-alternative")


def is_right_alternative(L: LoopStructure) -> IdentityReport:
    return check(L, "right-alternative")


def is_alternative(L: LoopStructure) -> IdentityReport:
    return check(L, "alternative")


def is_power_associative(L: LoopStructure) -> IdentityReport:
    return check(L, "power-associative")


def is_nuclear_square(L: LoopStructure) -> IdentityReport:
    return check(L, "nuclear-square")


def is_steiner(L: LoopStructure) -> IdentityReport:
    """``x² = e``, ``(yx)x = y`` and ``xy = yx``, checked in that order."""
    return check(L, "steiner")


def is_commutative(L: LoopStructure) -> IdentityReport:
    return check(L, "commutative")
