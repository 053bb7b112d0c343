"""Small loops used throughout the tests, the CLI demo and the notebooks."""

from __future__ import annotations

import itertools
from functools import reduce

import numpy as np

from .magma import CayleyTable, LoopStructure, as_loop, from_table

# Non-associative C-loop of order 12 with identity 0.
C12_ROWS = (
    (0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11),
    (1, 2, 0, 4, 5, 3, 7, 8, 6, 10, 11, 9),
    (2, 0, 1, 5, 3, 4, 8, 6, 7, 11, 9, 10),
    (3, 4, 5, 0, 1, 2, 9, 10, 11, 6, 7, 8),
    (4, 5, 3, 1, 2, 0, 10, 11, 9, 7, 8, 6),
    (5, 3, 4, 2, 0, 1, 11, 9, 10, 8, 6, 7),
    (6, 7, 8, 10, 11, 9, 0, 1, 2, 5, 3, 4),
    (7, 8, 6, 11, 9, 10, 1, 2, 0, 3, 4, 5),
    (8, 6, 7, 9, 10, 11, 2, 0, 1, 4, 5, 3),
    (9, 10, 11, 8, 6, 7, 3, 4, 5, 2, 0, 1),
    (10, 11, 9, 6, 7, 8, 4, 5, 3, 0, 1, 2),
    (11, 9, 10, 7, 8, 6, 5, 3, 4, 1, 2, 0),
)

# A nonassociative loop of order 5 that is neither alternative nor LC.
LOOP5_ROWS = (
    (0, 1, 2, 3, 4),
    (1, 0, 3, 4, 2),
    (2, 3, 4, 0, 1),
    (3, 4, 1, 2, 0),
    (4, 2, 0, 1, 3),
)

FANO_TRIPLES = ((0, 1, 3), (1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 0), (5, 6, 1), (6, 0, 2))


def c12_loop() -> LoopStructure:
    return as_loop(from_table(C12_ROWS))


def loop5() -> LoopStructure:
    return as_loop(from_table(LOOP5_ROWS))


def cyclic_group(n: int) -> LoopStructure:
    idx = np.arange(n)
    return as_loop(CayleyTable((idx[:, None] + idx[None, :]) % n))


def direct_product(*loops: LoopStructure) -> LoopStructure:
    """Direct product; element tuples are encoded in mixed radix, first factor most significant."""

    def pair(a: LoopStructure, b: LoopStructure) -> LoopStructure:
        ta, tb = a.table, b.table
        nb = b.order
        t = (ta[:, None, :, None] * nb + tb[None, :, None, :]).reshape(a.order * nb, a.order * nb)
        return as_loop(CayleyTable(t))

    return reduce(pair, loops)


def elementary_abelian_2group(rank: int) -> LoopStructure:
    if rank == 0:
        return trivial_loop()
    return direct_product(*[cyclic_group(2)] * rank)


def trivial_loop() -> LoopStructure:
    return as_loop(from_table([[0]]))


def group_fixtures(max_order: int = 8) -> dict[str, LoopStructure]:
    """Named abelian groups of order at most ``max_order``."""
    out: dict[str, LoopStructure] = {}
    for n in range(1, max_order + 1):
        out[f"Z{n}"] = cyclic_group(n)
    for rank in (2, 3):
        if 2**rank <= max_order:
            out["Z2^" + str(rank)] = elementary_abelian_2group(rank)
    if 8 <= max_order:
        out["Z2xZ4"] = direct_product(cyclic_group(2), cyclic_group(4))
    return out


def symmetric_group3() -> LoopStructure:
    """S3 as a (nonabelian) loop, elements ordered lexicographically as image tuples."""
    perms = list(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    t = [[index[tuple(q[p[i]] for i in range(3))] for q in perms] for p in perms]
    return as_loop(from_table(t))
