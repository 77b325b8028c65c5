"""
Closed forms for chains, antichains and two-row grids
=====================================================

For a few families the extended polynomial has a short formula.  Here we
compute each one by enumeration and compare it with the formula.
"""

# %%
import ordopoly as op

n = op.BivariatePolynomial.n()

for p in range(6):
    ok = op.extended(op.antichain(p)).poly == op.antichain_closed_form(p)
    print(f"antichain {p}: (1 + n z)^{p}", "matches" if ok else "DIFFERS")

# %%
# Chains: a hypergeometric sum with two negative-integer parameters.
for p in range(6):
    closed = op.hyp2f1_terminating(-p, -n, 1)
    print(f"chain {p}:", op.extended(op.chain(p)).poly == closed)

# %%
# Two-row grids: a 2 x 2 determinant of hypergeometric sums.
for m in range(1, 5):
    print(f"grid 2x{m}:", op.extended(op.grid(2, m)).poly == op.two_by_m_determinant(m))

# %%
# Setting ``n = 1`` leaves the antichain generating polynomial: each
# coefficient counts antichains of that size.
F = op.fence(5)
print("fence covers", F.covers)
print("E(1, z) coefficients:", op.extended(F).at_n(1))
print("antichains by size:  ", op.antichain_generating_check(F))
