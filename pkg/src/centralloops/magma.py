"""Finite quasigroups and loops stored as Latin squares.

``CayleyTable.table[x, y]`` is the product ``x * y``.  Elements are the
integers ``0..n-1``; a loop's identity is detected, never assumed to be 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .perm import Perm

__all__ = [
    "MAX_ORDER",
    "MagmaError",
    "LatinViolation",
    "NoIdentityError",
    "PowerAmbiguityError",
    "TableFormatError",
    "CayleyTable",
    "LoopStructure",
    "from_table",
    "as_loop",
    "left_translation",
    "right_translation",
    "right_translations",
    "left_translations",
    "element_power",
    "read_table_file",
    "write_table_file",
    "load_table",
]

MAX_ORDER = 256


class MagmaError(ValueError):
    """Base class for malformed or unsuitable multiplication tables."""

    kind = "magma"


class LatinViolation(MagmaError):
    kind = "latin-violation"


class NoIdentityError(MagmaError):
    kind = "no-identity"


class PowerAmbiguityError(MagmaError):
    kind = "power-ambiguity"


class TableFormatError(MagmaError):
    kind = "table-format"


@dataclass(frozen=True, eq=False)
class CayleyTable:
    """An ``n x n`` Latin square; validated on construction, read-only afterwards."""

    table: np.ndarray

    def __post_init__(self):
        t = np.array(self.table, dtype=np.int64, copy=True)
        _check_latin(t)
        t.setflags(write=False)
        object.__setattr__(self, "table", t)

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def rows(self) -> list[list[int]]:
        return self.table.tolist()

    def __eq__(self, other):
        if not isinstance(other, CayleyTable):
            return NotImplemented
        return self.table.shape == other.table.shape and bool(np.array_equal(self.table, other.table))

    def __hash__(self):
        return hash((self.order, self.table.tobytes()))

    def __repr__(self):
        return f"CayleyTable(order={self.order})"


@dataclass(frozen=True, eq=False)
class LoopStructure:
    """A quasigroup together with its verified two-sided identity."""

    carrier: CayleyTable
    identity: int
    _ldiv: np.ndarray = field(init=False, repr=False)
    _rdiv: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        t = self.carrier.table
        e = self.identity
        n = self.carrier.order
        idx = np.arange(n)
        if not (0 <= e < n and np.array_equal(t[e], idx) and np.array_equal(t[:, e], idx)):
            raise NoIdentityError(f"{e} is not a two-sided identity")
        # ldiv[x, z] = y with x*y = z ; rdiv[z, y] = x with x*y = z
        ldiv = np.empty_like(t)
        rdiv = np.empty_like(t)
        rows = np.repeat(idx, n).reshape(n, n)
        ldiv[rows, t] = idx[None, :]
        rdiv[t, rows.T] = rows
        for a in (ldiv, rdiv):
            a.setflags(write=False)
        object.__setattr__(self, "_ldiv", ldiv)
        object.__setattr__(self, "_rdiv", rdiv)

    @property
    def order(self) -> int:
        return self.carrier.order

    @property
    def table(self) -> np.ndarray:
        return self.carrier.table

    def mul(self, x: int, y: int) -> int:
        return int(self.carrier.table[x, y])

    def left_div(self, x: int, z: int) -> int:
        """The unique ``y`` with ``x * y == z``."""
        return int(self._ldiv[x, z])

    def right_div(self, z: int, y: int) -> int:
        """The unique ``x`` with ``x * y == z``."""
        return int(self._rdiv[z, y])

    def square(self, x: int) -> int:
        return int(self.carrier.table[x, x])

    def __eq__(self, other):
        if not isinstance(other, LoopStructure):
            return NotImplemented
        return self.identity == other.identity and self.carrier == other.carrier

    def __hash__(self):
        return hash((self.identity, self.carrier))

    def __repr__(self):
        return f"LoopStructure(order={self.order}, identity={self.identity})"


def _check_latin(t: np.ndarray) -> None:
    if t.ndim != 2 or t.shape[0] != t.shape[1]:
        raise LatinViolation(f"table must be square, got shape {t.shape}")
    n = t.shape[0]
    if n < 1:
        raise LatinViolation("table must have order at least 1")
    if n > MAX_ORDER:
        raise LatinViolation(f"order {n} exceeds the supported maximum {MAX_ORDER}")
    bad = np.argwhere((t < 0) | (t >= n))
    if bad.size:
        r, c = bad[0]
        raise LatinViolation(f"entry {int(t[r, c])} at row {r}, column {c} is out of range 0..{n - 1}")
    target = np.arange(n)
    for r in range(n):
        if not np.array_equal(np.sort(t[r]), target):
            raise LatinViolation(f"row {r} repeats an entry: {t[r].tolist()}")
    for c in range(n):
        if not np.array_equal(np.sort(t[:, c]), target):
            raise LatinViolation(f"column {c} repeats an entry: {t[:, c].tolist()}")


def from_table(rows: Sequence[Sequence[int]] | np.ndarray) -> CayleyTable:
    try:
        arr = np.asarray(rows, dtype=np.int64)
    except (ValueError, TypeError) as exc:
        raise LatinViolation(f"table is not a rectangular integer matrix: {exc}") from None
    return CayleyTable(arr)


def as_loop(q: CayleyTable) -> LoopStructure:
    """Find the two-sided identity of ``q`` (unique if it exists)."""
    t = q.table
    idx = np.arange(q.order)
    for e in range(q.order):
        if np.array_equal(t[e], idx) and np.array_equal(t[:, e], idx):
            return LoopStructure(q, e)
    raise NoIdentityError("no two-sided identity element")


def _check_element(L: LoopStructure, x: int) -> int:
    if not 0 <= x < L.order:
        raise IndexError(f"element {x} out of range 0..{L.order - 1}")
    return int(x)


def left_translation(L: LoopStructure, x: int) -> Perm:
    """``y -> x * y`` (row ``x`` of the table)."""
    x = _check_element(L, x)
    return Perm(tuple(L.table[x].tolist()))


def right_translation(L: LoopStructure, x: int) -> Perm:
    """``y -> y * x`` (column ``x`` of the table)."""
    x = _check_element(L, x)
    return Perm(tuple(L.table[:, x].tolist()))


def right_translations(L: LoopStructure) -> list[Perm]:
    return [right_translation(L, x) for x in range(L.order)]


def left_translations(L: LoopStructure) -> list[Perm]:
    return [left_translation(L, x) for x in range(L.order)]


def _cyclic_order(L: LoopStructure, x: int) -> int:
    # length of the orbit of e under R_x, i.e. the order of x under left-nested powers
    e, k, y = L.identity, 1, x
    while y != e:
        y = L.mul(y, x)
        k += 1
    return k


def _power_table(L: LoopStructure, x: int) -> list[int]:
    """Positive powers ``x^0 .. x^K`` after checking every bracketing agrees.

    ``K = 2 * ord(x) - 2`` (at least ``ord(x)``), which covers every product
    ``x^i * x^j`` with ``0 <= i, j < ord(x)``.
    """
    order = _cyclic_order(L, x)
    kmax = max(2 * order - 2, order)
    powers = [L.identity, x]
    exprs = ["e", "x"]
    for k in range(2, kmax + 1):
        seen: dict[int, str] = {}
        for i in range(1, k):
            v = L.mul(powers[i], powers[k - i])
            seen.setdefault(v, f"({exprs[i]})({exprs[k - i]})")
        if len(seen) > 1:
            (v1, b1), (v2, b2) = list(seen.items())[:2]
            raise PowerAmbiguityError(
                f"x={x}: bracketings of x^{k} disagree: {b1} = {v1} but {b2} = {v2}"
            )
        (v, expr), = seen.items()
        powers.append(v)
        exprs.append(f"x^{k}")
    return powers


def element_power(L: LoopStructure, x: int, m: int) -> int:
    """``x^m`` for any integer ``m``; negative powers solve ``x^|m| * y = e``.

    Raises ``PowerAmbiguityError`` if the cyclic subloop of ``x`` is not
    associative.
    """
    x = _check_element(L, x)
    powers = _power_table(L, x)
    order = _cyclic_order(L, x)
    k = abs(m) % order
    pos = powers[k]
    if m >= 0:
        return pos
    return L.left_div(pos, L.identity)


def read_table_file(text: str) -> CayleyTable:
    """Parse the ``.tbl`` format: order on the first line, then ``n`` rows.

    Lines starting with ``#`` and blank lines are ignored.
    """
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise TableFormatError("empty table file")

    def ints(line: str, lineno: int) -> list[int]:
        try:
            return [int(tok) for tok in line.split()]
        except ValueError:
            raise TableFormatError(f"non-integer token on data line {lineno}: {line!r}") from None

    header = ints(lines[0], 1)
    if len(header) != 1 or header[0] < 1:
        raise TableFormatError(f"first line must hold a single positive order, got {lines[0]!r}")
    n = header[0]
    if len(lines) - 1 != n:
        raise TableFormatError(f"expected {n} rows, found {len(lines) - 1}")
    rows = []
    for i, line in enumerate(lines[1:], start=2):
        row = ints(line, i)
        if len(row) != n:
            raise TableFormatError(f"data line {i} has {len(row)} entries, expected {n}")
        rows.append(row)
    return from_table(rows)


def write_table_file(q: CayleyTable) -> str:
    out = [str(q.order)]
    out.extend(" ".join(map(str, row)) for row in q.rows())
    return "\n".join(out) + "\n"


def load_table(path) -> CayleyTable:
    with open(path, encoding="utf-8") as fh:
        return read_table_file(fh.read())
