import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from centralloops import fixtures
from centralloops.autotopism import NotCLoopError
from centralloops.identities import is_c, is_steiner
from centralloops.magma import CayleyTable, as_loop, from_table
from centralloops.parastrophe import (
    ParastropheKind as K,
    equivalence_report,
    parastrophe,
    steiner_criterion,
    tables_equal,
)

from conftest import random_latin_square

squares = st.builds(
    lambda n, seed: random_latin_square(n, np.random.default_rng(seed)),
    st.integers(1, 6),
    st.integers(0, 2**32 - 1),
)


def defining_relation_holds(q: CayleyTable, kind: K, p: CayleyTable) -> bool:
    """Check ``p`` against its clause for every ``x * y = z`` of ``q``."""
    n = q.order
    for x in range(n):
        for y in range(n):
            z = q.mul(x, y)
            ok = {
                K.STAR: p.mul(y, x) == z,
                K.RDIV: p.mul(x, z) == y,
                K.LDIV: p.mul(z, y) == x,
                K.RDIV_STAR: p.mul(z, x) == y,
                K.LDIV_STAR: p.mul(y, z) == x,
            }[kind]
            if not ok:
                return False
    return True


def test_z2_totally_symmetric():
    z2 = fixtures.cyclic_group(2).carrier
    for k in K:
        assert tables_equal(parastrophe(z2, k), z2)


def test_steiner_loops_totally_symmetric(steiner_loops):
    for L in steiner_loops.values():
        for k in K:
            assert tables_equal(parastrophe(L.carrier, k), L.carrier)


def test_c12_rdiv_entry(c12):
    # oracle: scan row 4 for the column holding 0
    y = next(y for y in range(12) if c12.table[4, y] == 0)
    assert y == 5
    rdiv = parastrophe(c12.carrier, K.RDIV)
    assert rdiv.mul(4, 0) == 5
    assert c12.mul(4, 0) == 4
    assert not tables_equal(c12.carrier, rdiv)


def test_tables_equal():
    z3 = fixtures.cyclic_group(3).carrier
    assert tables_equal(z3, z3)
    assert tables_equal(z3, parastrophe(z3, K.STAR))
    assert not tables_equal(z3, fixtures.cyclic_group(2).carrier)


def test_kind_accepts_strings(c12):
    assert parastrophe(c12.carrier, "rdiv-star") == parastrophe(c12.carrier, K.RDIV_STAR)


def test_conjugates_of_a_loop_need_not_be_loops(c12):
    for k in (K.RDIV, K.LDIV):
        q = parastrophe(c12.carrier, k)
        with pytest.raises(Exception):
            as_loop(q)


@settings(max_examples=100, deadline=None)
@given(squares)
def test_parastrophe_properties(q):
    assert tables_equal(parastrophe(parastrophe(q, K.STAR), K.STAR), q)
    for k in K:
        p = parastrophe(q, k)  # constructor re-validates the Latin property
        assert defining_relation_holds(q, k, p)
    # re-solving a division recovers the original table
    assert tables_equal(parastrophe(parastrophe(q, K.RDIV), K.RDIV), q)
    assert tables_equal(parastrophe(parastrophe(q, K.LDIV), K.LDIV), q)


@settings(max_examples=60, deadline=None)
@given(squares)
def test_composite_conjugates(q):
    """The last three conjugates are composites of the two divisions."""
    rdiv = lambda t: parastrophe(t, K.RDIV)  # noqa: E731
    ldiv = lambda t: parastrophe(t, K.LDIV)  # noqa: E731
    assert tables_equal(ldiv(rdiv(q)), parastrophe(q, K.LDIV_STAR))
    assert tables_equal(rdiv(ldiv(q)), parastrophe(q, K.RDIV_STAR))
    assert tables_equal(rdiv(ldiv(rdiv(q))), parastrophe(q, K.STAR))
    assert tables_equal(parastrophe(q, K.RDIV_STAR), parastrophe(rdiv(q), K.STAR))
    assert tables_equal(parastrophe(q, K.LDIV_STAR), parastrophe(ldiv(q), K.STAR))


C_LOOP_FIXTURES = {
    "C12": fixtures.c12_loop,
    "Z1": fixtures.trivial_loop,
    **{f"Z{n}": (lambda n=n: fixtures.cyclic_group(n)) for n in range(2, 9)},
    "Z2^2": lambda: fixtures.elementary_abelian_2group(2),
    "Z2^3": lambda: fixtures.elementary_abelian_2group(3),
    "Z2xZ4": lambda: fixtures.direct_product(fixtures.cyclic_group(2), fixtures.cyclic_group(4)),
    "C12xZ2": lambda: fixtures.direct_product(fixtures.c12_loop(), fixtures.cyclic_group(2)),
    "S3": fixtures.symmetric_group3,
}


@pytest.mark.parametrize("name", sorted(C_LOOP_FIXTURES))
def test_equivalence_theorem(name):
    L = C_LOOP_FIXTURES[name]()
    assert is_c(L).holds
    report = equivalence_report(L)
    assert report.components_identity == report.division_parastrophes_equal
    if report.division_parastrophes_equal:
        assert report.other_parastrophes_equal
    assert steiner_criterion(L) == is_steiner(L).holds
    assert len(report.rows) == L.order


def test_c12_report(c12):
    report = equivalence_report(c12)
    row = report.rows[4]
    assert str(row.first) == "(0 1 2)(3 4 5)(6 7 8)(9 10 11)"
    assert not report.components_identity
    assert not report.parastrophe_equal[K.RDIV]
    assert not steiner_criterion(c12)


def test_steiner_and_trivial_reports(steiner_loops):
    for L in steiner_loops.values():
        r = equivalence_report(L)
        assert r.components_identity and r.division_parastrophes_equal and r.other_parastrophes_equal
        assert all(r.parastrophe_equal.values())
        assert steiner_criterion(L)


def test_z4_criterion():
    z4 = fixtures.cyclic_group(4)
    assert not steiner_criterion(z4)
    row = equivalence_report(z4).rows[1]
    assert row.square == 2 and not row.first.is_identity()


def test_requires_c_loop(loop5):
    with pytest.raises(NotCLoopError):
        equivalence_report(loop5)
    with pytest.raises(NotCLoopError):
        steiner_criterion(loop5)


def test_report_lines(c12):
    lines = equivalence_report(c12).lines()
    assert lines[4] == "x=4 square=2 alpha1S2=(0 1 2)(3 4 5)(6 7 8)(9 10 11) beta2T1=(0 1 2)(3 4 5)(6 7 8)(9 10 11)"
    assert "(i) <=> (ii): ok" in lines


def test_from_table_parastrophe_roundtrip():
    q = from_table(fixtures.LOOP5_ROWS)
    for k in K:
        assert defining_relation_holds(q, k, parastrophe(q, k))
