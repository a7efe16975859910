"""
The trigraded series
====================

Average one rational term per conjugacy-type over the census and multiply
by the degree prefactor.  Variables: q tracks topological degree, s the
torus degree, t the number of tensor factors.
"""
from commhilb.cartan import group_preset
from commhilb.molien import closed_form_u2, trigraded_hilb
from commhilb.series import q_bound
from commhilb.weylgen import enumerate_census

spec = group_preset("U2")
caps = (6, 6, 3)
F = trigraded_hilb(enumerate_census(spec), spec.degrees, caps)
for m in range(caps[2] + 1):
    print(f"t^{m}:", F.t_slice(m).render())

# %%
# The U(2) answer has a closed form; the two agree coefficient by coefficient.
print(F == closed_form_u2(caps))

# %%
# For any group, q never exceeds twice the sum of (d - 1).
spec = group_preset("G2")
F = trigraded_hilb(enumerate_census(spec), spec.degrees, (q_bound(spec.degrees) + 2, 4, 2))
print("max q degree", F.max_q_degree(), "bound", q_bound(spec.degrees))
