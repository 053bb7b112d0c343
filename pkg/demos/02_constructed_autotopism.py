"""
Autotopisms from squares
========================

Build (L_x^2, I, L_x^2) and (I, R_x^2, R_x^2), pair them up over a base
autotopism, and read off the constructed autotopism at x = 4.
"""

from centralloops import fixtures
from centralloops.autotopism import (
    compose_atp,
    constructed_autotopism,
    cs_pair,
    lc_autotopism,
    rc_autotopism,
)
from centralloops.magma import right_translations
from centralloops.perm import power

L = fixtures.c12_loop()

# the two building blocks at x = 4
print("lc(4) =", lc_autotopism(L, 4))
print("rc(4) =", rc_autotopism(L, 4))

# any base autotopism works; here a product of the blocks at other points
base = compose_atp(lc_autotopism(L, 6), rc_autotopism(L, 9), L)
pair = cs_pair(L, 4, base)
print("relation failures:", pair.relation_failures(L))

# the constructed triple does not depend on the base
built = constructed_autotopism(L, 4)
print("forward =", built.forward)
print("inverse =", built.inverse)
print("forward * inverse is identity:", compose_atp(built.forward, built.inverse).is_identity())

# it is a triple of right translations, and R_10 generates its first entry
R = right_translations(L)
print("(R_1, R_2, R_0) matches:", (built.forward.U, built.forward.V, built.forward.W) == (R[1], R[2], R[0]))
print("R_10^2 == first entry:", power(R[10], 2) == built.forward.U)

# x = 1 and x = 4 share a square, so they give the same triple
print("x=1 agrees with x=4:", constructed_autotopism(L, 1).forward == built.forward)
