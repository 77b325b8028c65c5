"""
Counting flocks for three shepherds
===================================

Three shepherds are ranked by seniority.  Any subset of them may show up at
the market, and each one who shows up brings a flock of between 1 and ``n``
sheep, with a more senior shepherd always bringing strictly more sheep than a
junior one.  How many market days are possible?

Rank is a chain on three elements, and the number we want is the extended
strict order polynomial ``E(n, z)`` of that chain at ``z = 1``.
"""

# %%
# Build the chain and its polynomial.
import itertools

import ordopoly as op

P = op.chain(3)
E = op.extended(P)
print("E(n, z) =", E.poly)
print("as a binomial sum:", E.pretty())

# %%
# With at most three sheep per flock there are 20 possibilities.
print("E(3, 1) =", op.evaluate(E, 3, 1))

# %%
# The same count by brute force.  Pick who shows up, then a strictly
# increasing list of flock sizes.
count = 0
for r in range(4):
    for _ in itertools.combinations("ABC", r):
        for sizes in itertools.product(range(1, 4), repeat=r):
            count += all(a < b for a, b in zip(sizes, sizes[1:]))
print("brute force:", count)

# %%
# Reading off the coefficient of ``z^k`` at a fixed ``n`` tells how many days
# have exactly ``k`` shepherds present.
for n in range(1, 6):
    print(n, E.at_n(n))

# %%
# A chain always gives a terminating Gauss hypergeometric series.
print(op.chain_closed_form(3) == E.poly)
