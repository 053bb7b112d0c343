"""
Profiling the order-12 C-loop
=============================

Load the table, confirm it is a loop, and ask which identities hold.
"""

from pathlib import Path

from centralloops.magma import load_table
from centralloops.identities import IDENTITIES, check
from centralloops.magma import as_loop, element_power

# the table ships with the package checkout
L = as_loop(load_table(Path(__file__).resolve().parents[1] / "tables" / "c12.tbl"))
print("order", L.order, "identity element", L.identity)

# every identity either holds or comes back with the lex-first counterexample
for name in IDENTITIES:
    r = check(L, name)
    print(f"{name:18s} holds={r.holds} witness={r.witness} {r.detail or ''}")

# squares are what the construction feeds on; x^2 = e gives nothing
print("squares:", [L.square(x) for x in range(L.order)])
print("4^-2 =", element_power(L, 4, -2))
