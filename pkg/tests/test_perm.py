import pytest
from hypothesis import given
from hypothesis import strategies as st

from centralloops.perm import (
    CycleParseError,
    Perm,
    PermError,
    compose,
    format_cycles,
    identity_perm,
    invert,
    parse_cycles,
    power,
)


def perms(min_n=1, max_n=12):
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.permutations(range(n)).map(lambda p: Perm(tuple(p)))
    )


def same_degree_perms(k, max_n=10):
    return st.integers(1, max_n).flatmap(
        lambda n: st.tuples(*[st.permutations(range(n)).map(lambda p: Perm(tuple(p)))] * k)
    )


C3 = parse_cycles("(0 1 2)", 3)
C3_INV = parse_cycles("(0 2 1)", 3)


def test_identity_perm():
    assert identity_perm(3).images == (0, 1, 2)
    assert identity_perm(12)(7) == 7
    assert identity_perm(1).images == (0,)
    with pytest.raises(PermError):
        identity_perm(0)


def test_invalid_images_rejected():
    with pytest.raises(PermError):
        Perm((0, 0, 1))
    with pytest.raises(PermError):
        Perm(())


def test_compose_right_action():
    assert compose(C3, C3_INV) == identity_perm(3)
    # hand product: 0 -> 1 -> 2, 1 -> 2 -> 0, 2 -> 0 -> 1
    assert compose(C3, C3) == Perm((2, 0, 1)) == C3_INV
    p = parse_cycles("(0 1)", 3)
    q = parse_cycles("(1 2)", 3)
    # apply p first: 0 -> 1 -> 2
    assert compose(p, q)(0) == 2
    assert compose(q, p)(0) == 1
    assert compose(p, identity_perm(3)) == p


def test_compose_degree_mismatch():
    with pytest.raises(PermError):
        compose(identity_perm(2), identity_perm(3))


def test_invert():
    assert invert(C3) == C3_INV
    assert invert(identity_perm(5)) == identity_perm(5)
    a = parse_cycles("(0 1 2)(3 4 5)(6 7 8)(9 10 11)", 12)
    assert format_cycles(invert(a)) == "(0 2 1)(3 5 4)(6 8 7)(9 11 10)"


def test_power():
    assert power(C3, 3) == identity_perm(3)
    assert power(C3, 0) == identity_perm(3)
    assert power(C3, -1) == invert(C3)
    assert power(C3, 2) == C3_INV


def test_parse_and_format():
    a = parse_cycles("(0 1 2)(3 4 5)(6 7 8)(9 10 11)", 12)
    assert a.images == (1, 2, 0, 4, 5, 3, 7, 8, 6, 10, 11, 9)
    assert format_cycles(identity_perm(12)) == "()"
    mu = parse_cycles("(0 13 5 14)(1 15 4 12)(2 9 10 8)(3 7 11 6)", 16)
    assert mu.degree == 16 and mu.order() == 4
    assert parse_cycles("  ( 2 0 )(1) ", 3) == Perm((2, 1, 0))
    assert format_cycles(parse_cycles("(2 0)", 3)) == "(0 2)"
    assert parse_cycles("()", 4) == identity_perm(4)
    assert parse_cycles("(0)(1)(2)", 3) == identity_perm(3)


@pytest.mark.parametrize(
    "text, pos",
    [("(0 1 0)", 5), ("(0 5)", 3), ("(0 1", 0), ("0 1)", 0), ("(0 (1))", 3), ("(0 x)", 3), (")", 0)],
)
def test_parse_errors_report_position(text, pos):
    with pytest.raises(CycleParseError) as info:
        parse_cycles(text, 4)
    assert info.value.pos == pos


@given(perms())
def test_round_trip(p):
    assert parse_cycles(format_cycles(p), p.degree) == p


@given(same_degree_perms(3))
def test_group_axioms(pqr):
    p, q, r = pqr
    n = p.degree
    assert compose(compose(p, q), r) == compose(p, compose(q, r))
    assert compose(p, identity_perm(n)) == p == compose(identity_perm(n), p)
    assert compose(p, invert(p)) == identity_perm(n) == compose(invert(p), p)


@given(perms(), st.integers(-7, 7))
def test_power_laws(p, k):
    assert power(p, -k) == invert(power(p, k))
    naive = identity_perm(p.degree)
    for _ in range(abs(k)):
        naive = compose(naive, p if k > 0 else invert(p))
    assert power(p, k) == naive


@given(perms())
def test_order_kills(p):
    assert power(p, p.order()).is_identity()
