"""The five conjugates (parastrophes) of a quasigroup and their relation to
the constructed autotopisms of a C-loop.

For ``x * y = z`` the conjugate tables are::

    STAR       y o x = z        RDIV_STAR  z o x = y
    RDIV       x o z = y        LDIV_STAR  y o z = x
    LDIV       z o y = x
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import identities
from .autotopism import NotCLoopError, constructed_autotopism
from .magma import CayleyTable, LoopStructure
from .perm import Perm

__all__ = [
    "ParastropheKind",
    "TheoremViolation",
    "parastrophe",
    "all_parastrophes",
    "tables_equal",
    "ComponentRow",
    "EquivalenceReport",
    "equivalence_report",
    "steiner_criterion",
]


class ParastropheKind(enum.Enum):
    STAR = "star"
    RDIV = "rdiv"
    LDIV = "ldiv"
    RDIV_STAR = "rdiv-star"
    LDIV_STAR = "ldiv-star"


class TheoremViolation(AssertionError):
    """A computed case contradicts the parastrophe equivalence theorem."""

    kind = "theorem-violation"


def _rdiv(t: np.ndarray) -> np.ndarray:
    n = t.shape[0]
    idx = np.arange(n)
    out = np.empty_like(t)
    out[idx[:, None], t] = idx[None, :]
    return out


def _ldiv(t: np.ndarray) -> np.ndarray:
    n = t.shape[0]
    idx = np.arange(n)
    out = np.empty_like(t)
    out[t, idx[None, :]] = idx[:, None]
    return out


def parastrophe(q: CayleyTable, kind: ParastropheKind | str) -> CayleyTable:
    kind = ParastropheKind(kind)
    t = q.table
    if kind is ParastropheKind.STAR:
        out = t.T
    elif kind is ParastropheKind.RDIV:
        out = _rdiv(t)
    elif kind is ParastropheKind.LDIV:
        out = _ldiv(t)
    elif kind is ParastropheKind.RDIV_STAR:
        out = _rdiv(t).T
    else:
        out = _ldiv(t).T
    return CayleyTable(out)


def all_parastrophes(q: CayleyTable) -> dict[ParastropheKind, CayleyTable]:
    return {k: parastrophe(q, k) for k in ParastropheKind}


def tables_equal(a: CayleyTable, b: CayleyTable) -> bool:
    return a.order == b.order and bool(np.array_equal(a.table, b.table))


@dataclass(frozen=True)
class ComponentRow:
    x: int
    square: int
    first: Perm  # first component of the forward triple
    second: Perm  # second component of the inverse triple

    @property
    def both_identity(self) -> bool:
        return self.first.is_identity() and self.second.is_identity()


@dataclass(frozen=True)
class EquivalenceReport:
    rows: tuple[ComponentRow, ...]
    components_identity: bool
    division_parastrophes_equal: bool
    other_parastrophes_equal: bool
    parastrophe_equal: dict[ParastropheKind, bool]

    def lines(self) -> list[str]:
        out = []
        for r in self.rows:
            out.append(f"x={r.x} square={r.square} alpha1S2={r.first} beta2T1={r.second}")
        for kind, eq in self.parastrophe_equal.items():
            out.append(f"parastrophe {kind.value} equals L: {str(eq).lower()}")
        out.append(f"(i) all components identity: {str(self.components_identity).lower()}")
        out.append(f"(ii) rdiv and ldiv equal L: {str(self.division_parastrophes_equal).lower()}")
        out.append(f"(iii) star, rdiv-star, ldiv-star equal L: {str(self.other_parastrophes_equal).lower()}")
        out.append("(i) <=> (ii): ok")
        out.append("(ii) => (iii): ok")
        return out


def _require_c_loop(L: LoopStructure) -> None:
    report = identities.is_c(L)
    if not report.holds:
        raise NotCLoopError(report)


def _component_rows(L: LoopStructure) -> tuple[ComponentRow, ...]:
    rows = []
    for x in range(L.order):
        pair = constructed_autotopism(L, x)
        rows.append(ComponentRow(x, pair.square, pair.forward.U, pair.inverse.V))
    return tuple(rows)


def equivalence_report(L: LoopStructure) -> EquivalenceReport:
    """Compare the constructed components with the five parastrophes of ``L``.

    Raises ``TheoremViolation`` if "all components are the identity" and
    "the two division parastrophes equal ``L``" disagree, or if the latter
    holds while some other parastrophe differs from ``L``.
    """
    _require_c_loop(L)
    rows = _component_rows(L)
    components_identity = all(r.both_identity for r in rows)
    equal = {k: tables_equal(L.carrier, p) for k, p in all_parastrophes(L.carrier).items()}
    division = equal[ParastropheKind.RDIV] and equal[ParastropheKind.LDIV]
    others = all(
        equal[k] for k in (ParastropheKind.STAR, ParastropheKind.RDIV_STAR, ParastropheKind.LDIV_STAR)
    )
    if components_identity != division:
        raise TheoremViolation(
            f"components identity = {components_identity} but division parastrophes equal = {division}"
        )
    if division and not others:
        raise TheoremViolation("division parastrophes equal L but another parastrophe differs")
    return EquivalenceReport(rows, components_identity, division, others, equal)


def steiner_criterion(L: LoopStructure) -> bool:
    """True iff every ``x`` gives identity first and second components."""
    _require_c_loop(L)
    return all(r.both_identity for r in _component_rows(L))
