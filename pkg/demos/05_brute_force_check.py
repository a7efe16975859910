"""
Cross-checking against explicit traces
======================================

For small groups every graded piece can be computed directly by averaging
traces of the group on polynomials and exterior powers.  This is slow but
shares no code with the rational-function route.
"""
import time

from commhilb.cartan import group_preset
from commhilb.checks import run_checks
from commhilb.molien import trigraded_hilb
from commhilb.oracle import GradedPieceSpec, brute_invariant_dim, oracle_trigraded
from commhilb.weylgen import enumerate_census

caps = (6, 4, 2)
for name in ("A2", "B2", "G2"):
    spec = group_preset(name)
    start = time.perf_counter()
    O = oracle_trigraded(spec, caps)
    M = trigraded_hilb(enumerate_census(spec), spec.degrees, caps)
    print(name, O == M, f"{time.perf_counter() - start:.2f}s", O.first_difference(M))

# %%
# A single piece: polynomial degree 2 tensored with two copies of the first exterior power.
print(brute_invariant_dim(group_preset("B2"), GradedPieceSpec(2, (1, 1))))

# %%
# The full battery used by `commhilb verify`.
spec = group_preset("G2")
for r in run_checks(spec, enumerate_census(spec)):
    print("PASS" if r.ok else "FAIL", r.name)
