"""
Grouping subposet extensions into classes
=========================================

Every linear extension of every induced subposet arises in exactly one way
from a linear extension of the full poset by deleting some deletable labels.
This script lists the classes for the ``2 x 2`` grid and for the antichain on
three elements, and checks that nothing is counted twice.
"""

# %%
import ordopoly as op

for P, name in [(op.grid(2, 2), "2x2 grid"), (op.antichain(3), "antichain on 3")]:
    cp = op.class_partition(P)
    print(name)
    for c in cp.classes:
        members = ", ".join(" ".join(map(str, m)) or "()" for m in c.members)
        print(f"  [{c.root}] des={c.descents} size={len(c.members)}: {members}")
    print("  union:", len(cp.union()), "disjoint:", cp.is_disjoint())
