"""
Ungraded counts and other closed forms
======================================
"""
from commhilb.cartan import group_preset
from commhilb.molien import coinvariant_poincare, james_hilb, so3_components, ungraded_comm_hilb
from commhilb.series import UniPoly

# %%
# Forgetting the grading leaves 1/(2 - (1+t)^n), which depends only on rank.
for name in ("A1", "G2", "E6"):
    print(name, ungraded_comm_hilb(group_preset(name).rank, 8).coeffs)

# %%
# James-type series 1/(1 - t(h(x) - 1)) from a Poincare polynomial h.
print(james_hilb(UniPoly([1, 0, 1]), 6).render("t"))

# %%
# Path components of commuting n-tuples in SO(3).
print([so3_components(n) for n in range(1, 7)])

# %%
# The coinvariant algebra has dimension |W|.
p = coinvariant_poincare(group_preset("F4").degrees)
print(p(1), p.render("q"))
