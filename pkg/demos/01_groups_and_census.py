"""
Weyl group presets and their characteristic-polynomial census
=============================================================

Build a few presets, enumerate the finite reflection group each one
describes, and collapse the elements into counts keyed by characteristic
polynomial.  The census is all the later demos need.
"""
from math import prod
from pathlib import Path
import tempfile

from commhilb.cartan import cartan_matrix, group_preset
from commhilb.weylgen import enumerate_census, read_census, write_census

# %%
# A preset bundles integer reflection matrices with the invariant degrees.
for name in ("U3", "SU3", "Sp2", "Spin7", "G2"):
    spec = group_preset(name)
    print(f"{spec.name:6s} rank={spec.rank} degrees={spec.degrees} |W|={spec.expected_order}")

print(cartan_matrix("G", 2))

# %%
# Enumeration is checked against the product of the degrees.
spec = group_preset("B3")
census = enumerate_census(spec)
assert census.total == prod(spec.degrees) == 48
for cp, count in census.items():
    print(cp, count)

# %%
# Reflections have det -1, so exactly half the elements sit on each side.
print(census.det_counts())

# %%
# A census round-trips through a checksummed JSON file.
with tempfile.TemporaryDirectory() as d:
    path = Path(d) / "B3.json"
    write_census(census, path, spec)
    print(read_census(path, spec) == census)
