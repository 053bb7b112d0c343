"""
Parastrophes and the Steiner test
=================================

Compute the five conjugates of a loop table and compare the equivalence
report of a non-Steiner loop with that of a Steiner loop.
"""

from centralloops import fixtures
from centralloops.parastrophe import ParastropheKind, equivalence_report, parastrophe, steiner_criterion, tables_equal

L = fixtures.c12_loop()

# each conjugate is again a Latin square, but not a loop table in general
for kind in ParastropheKind:
    q = parastrophe(L.carrier, kind)
    print(f"{kind.value:10s} equal to L: {tables_equal(q, L.carrier)}")

# the report lists the components per x followed by the three clauses
print("\n".join(equivalence_report(L).lines()))

# Z2^3 is a Steiner loop: every conjugate coincides with the table
S = fixtures.elementary_abelian_2group(3)
print("Z2^3 steiner criterion:", steiner_criterion(S))
print("\n".join(equivalence_report(S).lines()[-3:]))
