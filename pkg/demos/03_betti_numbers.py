"""
Betti numbers of commuting-tuple spaces
=======================================

Ranks are read off the series by setting q and s to the same variable
and collecting by total degree.
"""
from commhilb.cartan import group_preset
from commhilb.molien import comm_betti, hom_betti, trigraded_hilb
from commhilb.weylgen import enumerate_census

spec = group_preset("SU2")
F = trigraded_hilb(enumerate_census(spec), spec.degrees, (2, 6, 6))

# %%
# One variable: SU(2) itself is a 3-sphere.
print(hom_betti(F, 1, 6, q_degree=2).nonzero(1))

# %%
# Commuting pairs.
print(hom_betti(F, 2, 6, q_degree=2).nonzero(2))

# %%
# The space of all commuting tuples, degree by degree.
print(comm_betti(F, 6, q_degree=2))

# %%
# U(2) in one variable.
spec = group_preset("U2")
F = trigraded_hilb(enumerate_census(spec), spec.degrees, (2, 6, 1))
print(hom_betti(F, 1, 6, q_degree=2).nonzero(1))
