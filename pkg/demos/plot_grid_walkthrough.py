"""
Descents, deletable labels and the 3 x 3 grid
=============================================

This walk-through follows a single linear extension of the ``3 x 3`` grid
through the statistics that drive the computation: descents, deletable labels,
deletion and the inverse insertion.  It finishes with the full
``(des, fixed)`` table for the grid.
"""

# %%
import ordopoly as op

G = op.grid(3, 3)
print("covers:", G.covers)

# %%
# A linear extension of the grid is a standard Young tableau read in order.
w = op.extension(G, (1, 2, 4, 7, 5, 3, 6, 8, 9))
st = op.stats(w)
print("descents at positions", sorted(st.descents))
print("deletable labels", sorted(st.deletable))
print("fixed labels", sorted(set(w.word) - st.deletable))

# %%
# Label 6 is deletable even though 7 precedes it: scanning left from 6 we
# meet 5, which lies below 6 in the grid, before reaching any larger label.
print(G.less(5, 6))

# %%
# Remove some deletable labels and put them back.  Removing never changes
# the number of descents.
D = {2, 4, 8, 9}
v = op.delete(w, D)
print("after deletion:", v)
print("insertion buckets:", op.insertion_buckets(v, D))
print("restored:", op.restore(v, D))
print("descents before/after:", len(st.descents), len(op.descent_set(v)))

# %%
# Histogram over every extension of the grid, indexed by number of descents
# and number of fixed labels.
E = op.extended(G)
for (l, f), e in sorted(E.table.entries.items()):
    print(f"des={l} fixed={f}: {e}")
print("extensions:", E.n_extensions, " largest entry:", E.table.max_entry())

# %%
# The polynomial itself, in the binomial basis.
print(E.pretty())
