"""
How large do the table entries get?
===================================

The ``(des, fixed)`` table is much more compact than the polynomial it
encodes.  Here we time the enumeration on growing grids and compare the
number of extensions with the hook length formula.

The ``4 x 5`` grid takes on the order of ten seconds in pure Python.
"""

# %%
import time

import ordopoly as op
from ordopoly import oracle

for l, m in [(3, 3), (3, 4), (4, 4), (4, 5)]:
    t0 = time.perf_counter()
    table = op.extended(op.grid(l, m), budget=0).table
    dt = time.perf_counter() - t0
    print(f"{l}x{m}: {table.total()} extensions (hook length {oracle.hook_length_count(l, m)}), "
          f"largest entry {table.max_entry()}, {dt:.2f} s")
